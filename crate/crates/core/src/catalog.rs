//! Named example lattices and exhaustive enumeration of small bounded lattices.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::equivalence::OrthoPair;
use crate::lattice::{
    automorphisms, is_modular, is_orthomodular, orthocomplementations, FiniteBoundedLattice, Involution,
};
use crate::set::MAX_ELEMENTS;

/// Largest carrier handled by [`enumerate_lattices`].
pub const MAX_ENUMERATION: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("size {0} is outside 1..={MAX_ENUMERATION}")]
    SizeTooLarge(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub modular: bool,
    pub ortholattice: bool,
    pub orthomodular: bool,
}

impl Flags {
    pub fn compute(lattice: &FiniteBoundedLattice, ortho: Option<&Involution>) -> Flags {
        let orthomodular = ortho.is_some_and(|pi| is_orthomodular(lattice, pi).is_ok_and(|r| r.holds));
        Flags { modular: is_modular(lattice).holds, ortholattice: ortho.is_some(), orthomodular }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub lattice: FiniteBoundedLattice,
    pub ortho: Option<Involution>,
    pub expected_flags: Flags,
}

impl CatalogEntry {
    pub fn recompute_flags(&self) -> Flags {
        Flags::compute(&self.lattice, self.ortho.as_ref())
    }
}

/// Labels `0`, `a`, `b`, ..., `1` for an `n`-element carrier listed bottom first.
pub fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_owned(),
            i if i == n - 1 => "1".to_owned(),
            i => letter(i - 1),
        })
        .collect()
}

fn letter(i: usize) -> String {
    let base = char::from(b'a' + (i % 26) as u8);
    if i < 26 {
        base.to_string()
    } else {
        format!("{base}{}", i / 26)
    }
}

fn flags(modular: bool, ortholattice: bool, orthomodular: bool) -> Flags {
    Flags { modular, ortholattice, orthomodular }
}

fn entry(name: &str, lattice: FiniteBoundedLattice, ortho: Option<Involution>, expected_flags: Flags) -> CatalogEntry {
    CatalogEntry { name: name.to_owned(), lattice, ortho, expected_flags }
}

/// Names accepted by [`named`], with `n` standing for a size parameter.
pub const NAMES: [&str; 6] = ["chain_n", "boolean_n", "pentagon", "hexagon", "diamond_M3", "MO_n"];

pub fn named(name: &str) -> Result<CatalogEntry, CatalogError> {
    let unknown = || CatalogError::UnknownName(name.to_owned());
    match name {
        "pentagon" => return Ok(entry(name, FiniteBoundedLattice::pentagon(), None, flags(false, false, false))),
        "hexagon" => {
            let pi = Involution::new(vec![5, 3, 4, 1, 2, 0]).unwrap();
            return Ok(entry(name, FiniteBoundedLattice::hexagon(), Some(pi), flags(false, true, false)));
        }
        "diamond_M3" => {
            let l = FiniteBoundedLattice::build_from_covers(
                &["0", "a", "b", "c", "1"],
                &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
            )
            .unwrap();
            return Ok(entry(name, l, None, flags(true, false, false)));
        }
        _ => {}
    }
    let (family, param) = name.rsplit_once('_').ok_or_else(unknown)?;
    let k: usize = param.parse().map_err(|_| unknown())?;
    match family {
        "chain" if (1..=MAX_ELEMENTS).contains(&k) => {
            let names = default_labels(k);
            let covers: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
            let l = FiniteBoundedLattice::from_index_covers(names, &covers).unwrap();
            let ortho = match k {
                1 => Some(Involution::identity(1)),
                2 => Some(Involution::new(vec![1, 0]).unwrap()),
                _ => None,
            };
            Ok(entry(name, l, ortho, flags(true, k <= 2, k <= 2)))
        }
        "boolean" if (1usize << k) <= MAX_ELEMENTS => {
            let (l, pi) = boolean(k);
            Ok(entry(name, l, Some(pi), flags(true, true, true)))
        }
        "MO" if (1..MAX_ELEMENTS / 2).contains(&k) => {
            let (l, pi) = mo(k);
            Ok(entry(name, l, Some(pi), flags(true, true, true)))
        }
        _ => Err(unknown()),
    }
}

/// Subsets of a `k`-set by inclusion, indexed by bitmask, labeled by their
/// atoms (`0` and `1` for the bounds), with set complement.
fn boolean(k: usize) -> (FiniteBoundedLattice, Involution) {
    let n = 1usize << k;
    let names = (0..n)
        .map(|m| match m {
            0 => "0".to_owned(),
            m if m == n - 1 => "1".to_owned(),
            m => (0..k).filter(|b| m >> b & 1 == 1).map(letter).collect(),
        })
        .collect();
    let covers: Vec<(usize, usize)> = (0..n)
        .flat_map(|m| (0..k).filter(move |b| m >> b & 1 == 0).map(move |b| (m, m | 1 << b)))
        .collect();
    let l = FiniteBoundedLattice::from_index_covers(names, &covers).unwrap();
    let pi = Involution::new((0..n).map(|m| (n - 1) ^ m).collect()).unwrap();
    (l, pi)
}

/// `0`, `1` and `k` pairs of atoms `x, x'`.
fn mo(k: usize) -> (FiniteBoundedLattice, Involution) {
    let n = 2 * k + 2;
    let mut names = vec!["0".to_owned()];
    for i in 0..k {
        names.push(letter(i));
        names.push(format!("{}'", letter(i)));
    }
    names.push("1".to_owned());
    let covers: Vec<(usize, usize)> = (1..n - 1).flat_map(|i| [(0, i), (i, n - 1)]).collect();
    let l = FiniteBoundedLattice::from_index_covers(names, &covers).unwrap();
    let mut map = vec![n - 1; n];
    map[n - 1] = 0;
    for i in 0..k {
        map[1 + 2 * i] = 2 + 2 * i;
        map[2 + 2 * i] = 1 + 2 * i;
    }
    (l, Involution::new(map).unwrap())
}

/// A representative entry for each accepted family at a small size.
pub fn standard_entries() -> Vec<CatalogEntry> {
    ["chain_1", "chain_2", "chain_3", "chain_4", "boolean_1", "boolean_2", "boolean_3", "pentagon", "hexagon", "diamond_M3", "MO_2", "MO_3"]
        .iter()
        .map(|n| named(n).unwrap())
        .collect()
}

/// Orders elements by (height, |up-set|, |down-set|) and returns, among all
/// reorderings that permute only within equal keys, the one whose leq bit
/// matrix is least. Returns that matrix code and the order (new position to
/// old element). Isomorphic lattices get the same code.
pub fn canonical_form(l: &FiniteBoundedLattice) -> (u64, Vec<usize>) {
    let n = l.size();
    assert!(n <= MAX_ENUMERATION, "canonical form needs at most {MAX_ENUMERATION} elements");
    let heights = l.heights();
    let key = |x: usize| (heights[x], std::cmp::Reverse(l.up_set(x).len()), l.down_set(x).len());
    let mut sorted: Vec<usize> = l.elements().collect();
    sorted.sort_by_key(|&x| key(x));
    let class_of: Vec<_> = sorted.iter().map(|&x| key(x)).collect();

    let mut best = (u64::MAX, Vec::new());
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(l, &sorted, &class_of, &key, &mut order, &mut used, &mut best);
    best
}

fn search<K: PartialEq>(
    l: &FiniteBoundedLattice,
    sorted: &[usize],
    class_of: &[K],
    key: &impl Fn(usize) -> K,
    order: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut (u64, Vec<usize>),
) {
    let n = sorted.len();
    let i = order.len();
    if i == n {
        let code = code_of(l, order);
        if code < best.0 {
            *best = (code, order.clone());
        }
        return;
    }
    for &x in sorted {
        if used[x] || key(x) != class_of[i] {
            continue;
        }
        used[x] = true;
        order.push(x);
        search(l, sorted, class_of, key, order, used, best);
        order.pop();
        used[x] = false;
    }
}

fn code_of(l: &FiniteBoundedLattice, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in 0..n {
            code = code << 1 | l.leq(order[i], order[j]) as u64;
        }
    }
    code
}

/// The canonical representative: elements in canonical order, default labels.
pub fn canonical_lattice(l: &FiniteBoundedLattice) -> FiniteBoundedLattice {
    let (_, order) = canonical_form(l);
    let leq: Vec<Vec<bool>> = order.iter().map(|&x| order.iter().map(|&y| l.leq(x, y)).collect()).collect();
    FiniteBoundedLattice::from_order(default_labels(l.size()), &leq).unwrap()
}

/// Every `n`-element bounded lattice up to isomorphism, in canonical form,
/// sorted by canonical code.
///
/// Middle elements are generated as naturally labeled posets (each element's
/// strict down-set only uses earlier elements), which reaches every
/// isomorphism class; non-lattices are discarded and the rest deduplicated by
/// canonical form.
pub fn enumerate_lattices(n: usize) -> Result<Vec<FiniteBoundedLattice>, CatalogError> {
    if !(1..=MAX_ENUMERATION).contains(&n) {
        return Err(CatalogError::SizeTooLarge(n));
    }
    if n == 1 {
        return Ok(vec![FiniteBoundedLattice::from_order(default_labels(1), &[vec![true]]).unwrap()]);
    }
    let m = n - 2;
    let mut found: BTreeMap<u64, FiniteBoundedLattice> = BTreeMap::new();
    let mut downs = Vec::with_capacity(m);
    natural_posets(m, &mut downs, &mut |downs| {
        let mut leq = vec![vec![false; n]; n];
        for a in 0..n {
            leq[0][a] = true;
            leq[a][n - 1] = true;
            leq[a][a] = true;
        }
        for (b, down) in downs.iter().enumerate() {
            for a in 0..m {
                if down >> a & 1 == 1 {
                    leq[a + 1][b + 1] = true;
                }
            }
        }
        if let Ok(l) = FiniteBoundedLattice::from_order(default_labels(n), &leq) {
            let (code, _) = canonical_form(&l);
            found.entry(code).or_insert_with(|| canonical_lattice(&l));
        }
    });
    Ok(found.into_values().collect())
}

fn natural_posets(m: usize, downs: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    let i = downs.len();
    if i == m {
        visit(downs);
        return;
    }
    for s in 0u32..(1 << i) {
        let closed = (0..i).all(|j| s >> j & 1 == 0 || downs[j] & !s == 0);
        if closed {
            downs.push(s);
            natural_posets(m, downs, visit);
            downs.pop();
        }
    }
}

/// Every `n`-element ortholattice, one per orbit of orthocomplementations
/// under the automorphism group of each enumerated lattice.
pub fn enumerate_ortholattices(n: usize) -> Result<Vec<OrthoPair>, CatalogError> {
    let mut out = Vec::new();
    for l in enumerate_lattices(n)? {
        let pis = orthocomplementations(&l);
        if pis.is_empty() {
            continue;
        }
        let autos = automorphisms(&l);
        let mut seen = HashSet::new();
        for pi in pis {
            let rep = autos.iter().map(|g| pi.conjugate(g)).min().unwrap();
            if seen.insert(rep) {
                out.push(OrthoPair::new(l.clone(), pi).expect("orthocomplementation"));
            }
        }
    }
    Ok(out)
}

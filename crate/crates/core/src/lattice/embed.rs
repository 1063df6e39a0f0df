//! Backtracking searches for embeddings, isomorphisms and automorphisms.

use super::FiniteBoundedLattice;
use crate::report::AxiomReport;
use crate::set::ElemSet;

/// Lexicographically least injective map `pattern -> l` preserving meet and
/// join, i.e. a copy of `pattern` as a sublattice of `l`.
pub fn find_sublattice_copy(l: &FiniteBoundedLattice, pattern: &FiniteBoundedLattice) -> Option<Vec<usize>> {
    let m = pattern.size();
    if m > l.size() {
        return None;
    }
    let mut map = Vec::with_capacity(m);
    embed_rec(l, pattern, &mut map, ElemSet::EMPTY).then_some(map)
}

fn embed_rec(l: &FiniteBoundedLattice, p: &FiniteBoundedLattice, map: &mut Vec<usize>, used: ElemSet) -> bool {
    let i = map.len();
    if i == p.size() {
        return true;
    }
    for cand in l.elements() {
        if used.contains(cand) {
            continue;
        }
        map.push(cand);
        if embedding_consistent(l, p, map) && embed_rec(l, p, map, used.with(cand)) {
            return true;
        }
        map.pop();
    }
    false
}

/// Checks every pair involving the newest element, plus every pair whose
/// join or meet is the newest element.
fn embedding_consistent(l: &FiniteBoundedLattice, p: &FiniteBoundedLattice, map: &[usize]) -> bool {
    let i = map.len() - 1;
    for j in 0..=i {
        for k in 0..=i {
            if j != i && k != i && p.join(j, k) != i && p.meet(j, k) != i {
                continue;
            }
            let pj = p.join(j, k);
            if pj <= i && l.join(map[j], map[k]) != map[pj] {
                return false;
            }
            let pm = p.meet(j, k);
            if pm <= i && l.meet(map[j], map[k]) != map[pm] {
                return false;
            }
        }
    }
    true
}

fn invariants(l: &FiniteBoundedLattice) -> Vec<(usize, usize, usize)> {
    let heights = l.heights();
    l.elements()
        .map(|x| (heights[x], l.up_set(x).len(), l.down_set(x).len()))
        .collect()
}

/// Calls `visit` on every order isomorphism `a -> b` (in lexicographic order)
/// until it returns `false`.
fn for_each_isomorphism(
    a: &FiniteBoundedLattice,
    b: &FiniteBoundedLattice,
    mut visit: impl FnMut(&[usize]) -> bool,
) {
    if a.size() != b.size() {
        return;
    }
    let ia = invariants(a);
    let ib = invariants(b);
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return;
    }
    let mut map = Vec::with_capacity(a.size());
    iso_rec(a, b, &ia, &ib, &mut map, ElemSet::EMPTY, &mut visit);
}

fn iso_rec(
    a: &FiniteBoundedLattice,
    b: &FiniteBoundedLattice,
    ia: &[(usize, usize, usize)],
    ib: &[(usize, usize, usize)],
    map: &mut Vec<usize>,
    used: ElemSet,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let i = map.len();
    if i == a.size() {
        return visit(map);
    }
    for cand in b.elements() {
        if used.contains(cand) || ia[i] != ib[cand] {
            continue;
        }
        let ok = (0..i).all(|j| {
            a.leq(i, j) == b.leq(cand, map[j]) && a.leq(j, i) == b.leq(map[j], cand)
        });
        if !ok {
            continue;
        }
        map.push(cand);
        let keep_going = iso_rec(a, b, ia, ib, map, used.with(cand), visit);
        map.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

/// Lexicographically least lattice isomorphism `a -> b`, if any.
pub fn find_isomorphism(a: &FiniteBoundedLattice, b: &FiniteBoundedLattice) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_isomorphism(a, b, |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

/// The automorphism group of `l` as a list of permutations.
pub fn automorphisms(l: &FiniteBoundedLattice) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_isomorphism(l, l, |m| {
        out.push(m.to_vec());
        true
    });
    out
}

/// Does `f` preserve meet and join (and, when `bounded`, bottom and top)?
pub fn is_lattice_morphism(
    f: &[usize],
    src: &FiniteBoundedLattice,
    dst: &FiniteBoundedLattice,
    bounded: bool,
) -> AxiomReport {
    let name = if bounded { "bounded lattice morphism" } else { "lattice morphism" };
    if f.len() != src.size() || f.iter().any(|&y| y >= dst.size()) {
        return AxiomReport::fail(name, vec![], "map is not a function between the carriers");
    }
    if bounded {
        if f[src.bottom()] != dst.bottom() {
            return AxiomReport::fail(name, vec![src.bottom()], "f(0) != 0'");
        }
        if f[src.top()] != dst.top() {
            return AxiomReport::fail(name, vec![src.top()], "f(1) != 1'");
        }
    }
    for x in src.elements() {
        for y in src.elements() {
            if f[src.join(x, y)] != dst.join(f[x], f[y]) {
                return AxiomReport::fail(name, vec![x, y], "f(x v y) != f(x) v f(y)");
            }
            if f[src.meet(x, y)] != dst.meet(f[x], f[y]) {
                return AxiomReport::fail(name, vec![x, y], "f(x ^ y) != f(x) ^ f(y)");
            }
        }
    }
    AxiomReport::pass(name)
}

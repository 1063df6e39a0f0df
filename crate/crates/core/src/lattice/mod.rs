//! Finite bounded lattices over indexed carriers.
//!
//! Elements are the indices `0..size`; labels only matter for presentation and
//! file I/O. Construction validates eagerly, so every `FiniteBoundedLattice`
//! value carries a genuine partial order whose join and meet tables are the
//! least upper and greatest lower bounds.

mod checks;
mod embed;
mod involution;
mod ortho;

use std::collections::HashMap;

use thiserror::Error;

use crate::set::{ElemSet, MAX_ELEMENTS};

pub use checks::{generated_sublattice, is_distributive, is_modular};
pub use embed::{automorphisms, find_isomorphism, find_sublattice_copy, is_lattice_morphism};
pub use involution::Involution;
pub use ortho::{
    check_om_equivalences, complement_involutions, complements, is_orthocomplementation,
    is_orthomodular, orthocomplementation_reports, orthocomplementations,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("{0} elements exceeds the supported maximum of {MAX_ELEMENTS}")]
    TooLarge(usize),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("cover relation contains a cycle through `{0}` and `{1}`")]
    CyclicCovers(String, String),
    #[error("order has no bottom or no top element")]
    NotBounded,
    #[error("`{0}` and `{1}` have no unique {2}")]
    NotALattice(String, String, &'static str),
    #[error("not an orthocomplementation: {0}")]
    NotAnOrthocomplementation(String),
    #[error("subset is not closed under meet and join (`{0}`, `{1}`)")]
    NotASublattice(String, String),
    #[error("element index {0} out of range")]
    InvalidElement(usize),
    #[error("not an involution: {0}")]
    NotAnInvolution(String),
}

/// A finite lattice with bottom and top, stored as an order matrix plus
/// precomputed join and meet tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBoundedLattice {
    names: Vec<String>,
    /// `up[x]` is `{y : x <= y}`.
    up: Vec<ElemSet>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteBoundedLattice {
    /// Builds a lattice from labelled cover pairs `(lower, upper)`. The order
    /// is the reflexive-transitive closure of the pairs.
    pub fn build_from_covers<S: AsRef<str>>(
        names: &[S],
        covers: &[(S, S)],
    ) -> Result<Self, LatticeError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(LatticeError::DuplicateLabel(name.clone()));
            }
        }
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| LatticeError::UnknownLabel(s.as_ref().to_owned()))
        };
        let pairs = covers
            .iter()
            .map(|(lo, hi)| Ok((lookup(lo)?, lookup(hi)?)))
            .collect::<Result<Vec<_>, LatticeError>>()?;
        Self::from_index_covers(names, &pairs)
    }

    /// Same as [`build_from_covers`](Self::build_from_covers) with covers given as index pairs.
    pub fn from_index_covers(
        names: Vec<String>,
        covers: &[(usize, usize)],
    ) -> Result<Self, LatticeError> {
        let n = names.len();
        check_size(n)?;
        let mut up: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
        for &(lo, hi) in covers {
            if lo >= n || hi >= n {
                return Err(LatticeError::InvalidElement(lo.max(hi)));
            }
            if lo == hi {
                return Err(LatticeError::CyclicCovers(names[lo].clone(), names[hi].clone()));
            }
            up[lo].insert(hi);
        }
        // Warshall closure on the up-set rows.
        for k in 0..n {
            for x in 0..n {
                if up[x].contains(k) {
                    up[x] = up[x].union(up[k]);
                }
            }
        }
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(LatticeError::CyclicCovers(names[x].clone(), names[y].clone()));
                }
            }
        }
        Self::from_up_sets(names, up)
    }

    /// Builds a lattice from a full order matrix `leq[x][y] == (x <= y)`.
    pub fn from_order(names: Vec<String>, leq: &[Vec<bool>]) -> Result<Self, LatticeError> {
        let n = names.len();
        check_size(n)?;
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(LatticeError::InvalidElement(n));
        }
        let up: Vec<ElemSet> = leq
            .iter()
            .map(|row| (0..n).filter(|&y| row[y]).collect())
            .collect();
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(LatticeError::CyclicCovers(names[x].clone(), names[x].clone()));
            }
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(LatticeError::CyclicCovers(names[x].clone(), names[y].clone()));
                }
                if !up[y].is_subset(up[x]) {
                    // Not transitive: some z >= y is not >= x.
                    let z = up[y].difference(up[x]).first().unwrap();
                    return Err(LatticeError::CyclicCovers(names[x].clone(), names[z].clone()));
                }
            }
        }
        Self::from_up_sets(names, up)
    }

    /// `up` must already be a partial order given by up-sets.
    fn from_up_sets(names: Vec<String>, up: Vec<ElemSet>) -> Result<Self, LatticeError> {
        let n = names.len();
        let all = ElemSet::full(n);
        let mut down = vec![ElemSet::EMPTY; n];
        for x in 0..n {
            for y in up[x].iter() {
                down[y].insert(x);
            }
        }
        let bottom = (0..n).find(|&x| up[x] == all).ok_or(LatticeError::NotBounded)?;
        let top = (0..n).find(|&x| down[x] == all).ok_or(LatticeError::NotBounded)?;

        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let uppers = up[x].intersection(up[y]);
                let lub = uppers
                    .iter()
                    .find(|&u| uppers.is_subset(up[u]))
                    .ok_or_else(|| LatticeError::NotALattice(names[x].clone(), names[y].clone(), "join"))?;
                let lowers = down[x].intersection(down[y]);
                let glb = lowers
                    .iter()
                    .find(|&l| lowers.is_subset(down[l]))
                    .ok_or_else(|| LatticeError::NotALattice(names[x].clone(), names[y].clone(), "meet"))?;
                join[x * n + y] = lub;
                meet[x * n + y] = glb;
            }
        }
        Ok(FiniteBoundedLattice { names, up, join, meet, bottom, top })
    }

    /// The pentagon `0 < b < a < 1`, `0 < c < 1`, indexed `[0, a, b, c, 1]`.
    pub fn pentagon() -> Self {
        Self::build_from_covers(
            &["0", "a", "b", "c", "1"],
            &[("0", "b"), ("b", "a"), ("a", "1"), ("0", "c"), ("c", "1")],
        )
        .expect("pentagon is a lattice")
    }

    /// The hexagon `0 < b < a < 1`, `0 < a' < b' < 1`, indexed `[0, a, b, a', b', 1]`.
    pub fn hexagon() -> Self {
        Self::build_from_covers(
            &["0", "a", "b", "a'", "b'", "1"],
            &[("0", "b"), ("b", "a"), ("a", "1"), ("0", "a'"), ("a'", "b'"), ("b'", "1")],
        )
        .expect("hexagon is a lattice")
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.size())
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size() + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size() + y]
    }

    /// `{y : x <= y}`.
    pub fn up_set(&self, x: usize) -> ElemSet {
        self.up[x]
    }

    /// `{y : y <= x}`.
    pub fn down_set(&self, x: usize) -> ElemSet {
        self.elements().filter(|&y| self.leq(y, x)).collect()
    }

    /// Order as a boolean matrix.
    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.size();
        (0..n).map(|x| (0..n).map(|y| self.leq(x, y)).collect()).collect()
    }

    pub fn join_table(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (0..n).map(|x| (0..n).map(|y| self.join(x, y)).collect()).collect()
    }

    pub fn meet_table(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (0..n).map(|x| (0..n).map(|y| self.meet(x, y)).collect()).collect()
    }

    /// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.up[x].iter() {
                if y == x {
                    continue;
                }
                let between = self
                    .elements()
                    .any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Length of the longest chain from the bottom to `x`.
    pub fn height(&self, x: usize) -> usize {
        let mut memo = vec![None; self.size()];
        self.height_memo(x, &mut memo)
    }

    pub fn heights(&self) -> Vec<usize> {
        let mut memo = vec![None; self.size()];
        self.elements().map(|x| self.height_memo(x, &mut memo)).collect()
    }

    fn height_memo(&self, x: usize, memo: &mut [Option<usize>]) -> usize {
        if let Some(h) = memo[x] {
            return h;
        }
        let h = self
            .elements()
            .filter(|&y| self.lt(y, x))
            .map(|y| self.height_memo(y, memo) + 1)
            .max()
            .unwrap_or(0);
        memo[x] = Some(h);
        h
    }

    /// The order-dual lattice: same carrier and labels, reversed order.
    pub fn dual(&self) -> FiniteBoundedLattice {
        let n = self.size();
        let up = (0..n).map(|x| self.down_set(x)).collect();
        FiniteBoundedLattice {
            names: self.names.clone(),
            up,
            join: self.meet.clone(),
            meet: self.join.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Same lattice with new labels.
    pub fn relabeled(&self, names: Vec<String>) -> Result<Self, LatticeError> {
        if names.len() != self.size() {
            return Err(LatticeError::InvalidElement(names.len()));
        }
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n) {
                return Err(LatticeError::DuplicateLabel(n.clone()));
            }
        }
        Ok(FiniteBoundedLattice { names, ..self.clone() })
    }

    /// Transport along a permutation: element `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> FiniteBoundedLattice {
        let n = self.size();
        let mut names = vec![String::new(); n];
        let mut up = vec![ElemSet::EMPTY; n];
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for x in 0..n {
            names[perm[x]] = self.names[x].clone();
            up[perm[x]] = self.up[x].map(|y| perm[y]);
            for y in 0..n {
                join[perm[x] * n + perm[y]] = perm[self.join(x, y)];
                meet[perm[x] * n + perm[y]] = perm[self.meet(x, y)];
            }
        }
        FiniteBoundedLattice {
            names,
            up,
            join,
            meet,
            bottom: perm[self.bottom],
            top: perm[self.top],
        }
    }

    /// Returns the first pair `(x, y)` of `subset` whose meet or join leaves it.
    pub fn closure_violation(&self, subset: ElemSet) -> Option<(usize, usize)> {
        for x in subset.iter() {
            for y in subset.iter() {
                if !subset.contains(self.join(x, y)) || !subset.contains(self.meet(x, y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_sublattice(&self, subset: ElemSet) -> bool {
        !subset.is_empty() && subset.is_subset(self.all()) && self.closure_violation(subset).is_none()
    }

    /// The sublattice on `subset` as a lattice of its own, reindexed in
    /// increasing order of the original indices. Also returns that index list.
    pub fn sublattice(&self, subset: ElemSet) -> Result<(FiniteBoundedLattice, Vec<usize>), LatticeError> {
        if subset.is_empty() {
            return Err(LatticeError::Empty);
        }
        if let Some(x) = subset.difference(self.all()).first() {
            return Err(LatticeError::InvalidElement(x));
        }
        if let Some((x, y)) = self.closure_violation(subset) {
            return Err(LatticeError::NotASublattice(self.names[x].clone(), self.names[y].clone()));
        }
        let elems: Vec<usize> = subset.iter().collect();
        let names = elems.iter().map(|&x| self.names[x].clone()).collect();
        let leq: Vec<Vec<bool>> = elems
            .iter()
            .map(|&x| elems.iter().map(|&y| self.leq(x, y)).collect())
            .collect();
        Ok((FiniteBoundedLattice::from_order(names, &leq)?, elems))
    }
}

/// Free-function form of [`FiniteBoundedLattice::dual`].
pub fn dual_lattice(l: &FiniteBoundedLattice) -> FiniteBoundedLattice {
    l.dual()
}

fn check_size(n: usize) -> Result<(), LatticeError> {
    match n {
        0 => Err(LatticeError::Empty),
        n if n > MAX_ELEMENTS => Err(LatticeError::TooLarge(n)),
        _ => Ok(()),
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn pentagon() -> FiniteBoundedLattice {
        FiniteBoundedLattice::pentagon()
    }

    pub fn hexagon() -> FiniteBoundedLattice {
        FiniteBoundedLattice::hexagon()
    }

    pub fn hexagon_pi() -> Involution {
        Involution::new(vec![5, 3, 4, 1, 2, 0]).unwrap()
    }

    pub fn chain(n: usize) -> FiniteBoundedLattice {
        let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
        let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        FiniteBoundedLattice::from_index_covers(names, &covers).unwrap()
    }

    /// Subsets of an `k`-set ordered by inclusion; index = bitmask.
    pub fn boolean(k: usize) -> FiniteBoundedLattice {
        let n = 1usize << k;
        let names = (0..n).map(|m| format!("s{m}")).collect();
        let mut covers = Vec::new();
        for m in 0..n {
            for b in 0..k {
                if m & (1 << b) == 0 {
                    covers.push((m, m | (1 << b)));
                }
            }
        }
        FiniteBoundedLattice::from_index_covers(names, &covers).unwrap()
    }

    pub fn boolean_pi(k: usize) -> Involution {
        let n = 1usize << k;
        Involution::new((0..n).map(|m| (n - 1) ^ m).collect()).unwrap()
    }

    /// 0, 1 and `2k` atoms paired up.
    pub fn mo(k: usize) -> (FiniteBoundedLattice, Involution) {
        let n = 2 * k + 2;
        let names = (0..n).map(|i| format!("m{i}")).collect();
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
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn pentagon_structure() {
        let p = pentagon();
        let [o, a, b, c, t] = [0, 1, 2, 3, 4];
        assert_eq!((p.bottom(), p.top()), (o, t));
        assert!(p.leq(b, a) && !p.leq(c, a));
        assert_eq!(p.join(b, c), t);
        assert_eq!(p.meet(a, c), o);
        assert_eq!(p.join(a, b), a);
        assert_eq!(p.covers(), vec![(0, 2), (0, 3), (1, 4), (2, 1), (3, 4)]);
    }

    #[test]
    fn one_element_lattice() {
        let l = FiniteBoundedLattice::build_from_covers(&["x"], &[]).unwrap();
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 0);
        assert_eq!(l.join(0, 0), 0);
    }

    #[test]
    fn kite_and_missing_top() {
        let kite = FiniteBoundedLattice::build_from_covers(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap();
        assert_eq!(kite.join(1, 2), 3);
        assert_eq!(kite.meet(1, 2), 0);
        // Dropping b < 1 leaves two maximal elements, b and 1.
        let err = FiniteBoundedLattice::build_from_covers(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1")],
        )
        .unwrap_err();
        assert_eq!(err, LatticeError::NotBounded);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FiniteBoundedLattice::build_from_covers(&["x", "x"], &[]).unwrap_err(),
            LatticeError::DuplicateLabel("x".into())
        );
        assert!(matches!(
            FiniteBoundedLattice::build_from_covers(&["0", "a", "b"], &[("0", "a"), ("a", "b"), ("b", "a")]),
            Err(LatticeError::CyclicCovers(..))
        ));
        assert_eq!(
            FiniteBoundedLattice::build_from_covers(&["0"], &[("0", "q")]).unwrap_err(),
            LatticeError::UnknownLabel("q".into())
        );
        // 0 < a,b < c,d < 1: a and b have two minimal upper bounds.
        let err = FiniteBoundedLattice::build_from_covers(
            &["0", "a", "b", "c", "d", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "1"),
                ("d", "1"),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, LatticeError::NotALattice(_, _, "join")));
        assert_eq!(
            FiniteBoundedLattice::build_from_covers::<&str>(&[], &[]).unwrap_err(),
            LatticeError::Empty
        );
    }

    #[test]
    fn order_agrees_with_tables() {
        for l in [pentagon(), hexagon(), chain(4), boolean(3), mo(2).0] {
            for x in l.elements() {
                assert!(l.leq(l.bottom(), x) && l.leq(x, l.top()));
                for y in l.elements() {
                    let le = l.leq(x, y);
                    assert_eq!(le, l.meet(x, y) == x);
                    assert_eq!(le, l.join(x, y) == y);
                    assert_eq!(l.join(x, l.meet(x, y)), x);
                    assert_eq!(l.meet(x, l.join(x, y)), x);
                    for z in l.elements() {
                        assert_eq!(l.join(l.join(x, y), z), l.join(x, l.join(y, z)));
                        assert_eq!(l.meet(l.meet(x, y), z), l.meet(x, l.meet(y, z)));
                        if le {
                            assert!(l.leq(l.meet(x, z), l.meet(y, z)));
                            assert!(l.leq(l.join(x, z), l.join(y, z)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dual_is_involutive_and_reverses() {
        let p = pentagon();
        assert_eq!(p.dual().dual(), p);
        let c = chain(3);
        let d = c.dual();
        assert_eq!((d.bottom(), d.top()), (2, 0));
        assert!(d.leq(2, 1) && d.leq(1, 0));
        // dual(P) is isomorphic to P via 0<->1, a<->b, c fixed.
        let iso = find_isomorphism(&p, &p.dual()).unwrap();
        assert_eq!(iso, vec![4, 2, 1, 3, 0]);
    }

    #[test]
    fn from_order_round_trip() {
        let h = hexagon();
        let rebuilt = FiniteBoundedLattice::from_order(h.names().to_vec(), &h.leq_matrix()).unwrap();
        assert_eq!(rebuilt, h);
        let via_covers: Vec<(usize, usize)> = h.covers();
        assert_eq!(FiniteBoundedLattice::from_index_covers(h.names().to_vec(), &via_covers).unwrap(), h);
    }

    #[test]
    fn sublattice_extraction() {
        let h = hexagon();
        // 0, a, b, a', 1 is a pentagon inside H.
        let subset: ElemSet = [0, 1, 2, 3, 5].into_iter().collect();
        let (sub, idx) = h.sublattice(subset).unwrap();
        assert_eq!(idx, vec![0, 1, 2, 3, 5]);
        assert!(find_isomorphism(&sub, &pentagon()).is_some());
        let bad: ElemSet = [1, 3].into_iter().collect();
        assert!(matches!(h.sublattice(bad), Err(LatticeError::NotASublattice(..))));
    }

    #[test]
    fn heights() {
        assert_eq!(pentagon().heights(), vec![0, 2, 1, 1, 3]);
        assert_eq!(boolean(2).heights(), vec![0, 1, 1, 2]);
    }
}

use super::HyperError;
use crate::report::AxiomReport;
use crate::set::{ElemSet, MAX_ELEMENTS};

/// A binary multioperation: an `n x n` table of subsets of the carrier.
/// Empty cells are allowed and make the magma partial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multioperation {
    size: usize,
    cells: Vec<ElemSet>,
}

impl Multioperation {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> ElemSet) -> Self {
        assert!(size <= MAX_ELEMENTS, "carrier too large");
        let range = ElemSet::full(size);
        let mut cells = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                cells.push(f(x, y).intersection(range));
            }
        }
        Multioperation { size, cells }
    }

    pub fn from_table(table: Vec<Vec<ElemSet>>) -> Result<Self, HyperError> {
        let size = table.len();
        if size > MAX_ELEMENTS {
            return Err(HyperError::SizeMismatch { left: size, right: MAX_ELEMENTS });
        }
        let range = ElemSet::full(size);
        let mut cells = Vec::with_capacity(size * size);
        for (x, row) in table.into_iter().enumerate() {
            if row.len() != size {
                return Err(HyperError::SizeMismatch { left: row.len(), right: size });
            }
            for cell in row {
                if !cell.is_subset(range) {
                    return Err(HyperError::InvalidElement(x));
                }
                cells.push(cell);
            }
        }
        Ok(Multioperation { size, cells })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, x: usize, y: usize) -> ElemSet {
        self.cells[x * self.size + y]
    }

    pub fn set(&mut self, x: usize, y: usize, value: ElemSet) {
        self.cells[x * self.size + y] = value;
    }

    pub fn carrier(&self) -> ElemSet {
        ElemSet::full(self.size)
    }

    pub fn table(&self) -> Vec<Vec<ElemSet>> {
        (0..self.size).map(|x| (0..self.size).map(|y| self.get(x, y)).collect()).collect()
    }

    /// Set extension: union of `x . y` over `x in a`, `y in b`.
    pub fn apply_sets(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for x in a {
            for y in b {
                out = out.union(self.get(x, y));
            }
        }
        out
    }

    /// `x . B`.
    pub fn left(&self, x: usize, b: ElemSet) -> ElemSet {
        self.apply_sets(ElemSet::singleton(x), b)
    }

    /// `A . y`.
    pub fn right(&self, a: ElemSet, y: usize) -> ElemSet {
        self.apply_sets(a, ElemSet::singleton(y))
    }

    /// The opposite multioperation `x .d y = y . x`.
    pub fn dual(&self) -> Multioperation {
        Multioperation::from_fn(self.size, |x, y| self.get(y, x))
    }

    /// Cellwise intersection with `subset`, reindexed to `0..|subset|` in
    /// increasing order. Returns the new table and the original indices.
    pub fn restrict(&self, subset: ElemSet) -> (Multioperation, Vec<usize>) {
        let elems: Vec<usize> = subset.intersection(self.carrier()).iter().collect();
        let mut position = vec![usize::MAX; self.size];
        for (i, &x) in elems.iter().enumerate() {
            position[x] = i;
        }
        let op = Multioperation::from_fn(elems.len(), |i, j| {
            self.get(elems[i], elems[j]).intersection(subset).map(|z| position[z])
        });
        (op, elems)
    }

    /// Transport of structure along a permutation: `x . y` becomes
    /// `perm[x] . perm[y] = perm[x . y]`.
    pub fn permuted(&self, perm: &[usize]) -> Multioperation {
        let mut out = Multioperation { size: self.size, cells: vec![ElemSet::EMPTY; self.cells.len()] };
        for x in 0..self.size {
            for y in 0..self.size {
                out.set(perm[x], perm[y], self.get(x, y).map(|z| perm[z]));
            }
        }
        out
    }
}

/// Every cell is nonempty.
pub fn is_total(op: &Multioperation) -> AxiomReport {
    for x in 0..op.size() {
        for y in 0..op.size() {
            if op.get(x, y).is_empty() {
                return AxiomReport::fail("totality", vec![x, y], "empty cell");
            }
        }
    }
    AxiomReport::pass("totality")
}

pub fn is_commutative(op: &Multioperation) -> AxiomReport {
    for x in 0..op.size() {
        for y in x + 1..op.size() {
            if op.get(x, y) != op.get(y, x) {
                return AxiomReport::fail("commutativity", vec![x, y], "x . y != y . x");
            }
        }
    }
    AxiomReport::pass("commutativity")
}

/// `(x . y) . z = x . (y . z)` with set-extended products on both sides.
pub fn is_associative(op: &Multioperation) -> AxiomReport {
    for x in 0..op.size() {
        for y in 0..op.size() {
            for z in 0..op.size() {
                let lhs = op.right(op.get(x, y), z);
                let rhs = op.left(x, op.get(y, z));
                if lhs != rhs {
                    return AxiomReport::fail("associativity", vec![x, y, z], "(x . y) . z != x . (y . z)");
                }
            }
        }
    }
    AxiomReport::pass("associativity")
}

/// `x . A = A . x = A` for every `x`.
pub fn is_reproductive(op: &Multioperation) -> AxiomReport {
    let all = op.carrier();
    for x in 0..op.size() {
        if op.left(x, all) != all {
            return AxiomReport::fail("reproductivity", vec![x], "x . A != A");
        }
        if op.right(all, x) != all {
            return AxiomReport::fail("reproductivity", vec![x], "A . x != A");
        }
    }
    AxiomReport::pass("reproductivity")
}

/// The unique `e` with `e . x = x . e = {x}` for all `x`.
pub fn find_neutral(op: &Multioperation) -> Option<usize> {
    (0..op.size()).find(|&e| {
        (0..op.size()).all(|x| {
            let sx = ElemSet::singleton(x);
            op.get(e, x) == sx && op.get(x, e) == sx
        })
    })
}

/// `{y : e in (x . y) and e in (y . x)}`.
pub fn inverses(op: &Multioperation, neutral: usize, x: usize) -> ElemSet {
    (0..op.size())
        .filter(|&y| op.get(x, y).contains(neutral) && op.get(y, x).contains(neutral))
        .collect()
}

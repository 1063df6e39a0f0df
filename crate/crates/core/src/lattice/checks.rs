use super::{FiniteBoundedLattice, Involution, LatticeError};
use crate::report::AxiomReport;
use crate::set::ElemSet;

/// Modular law `x v (y ^ (x v z)) = (x v y) ^ (x v z)` over all triples.
pub fn is_modular(l: &FiniteBoundedLattice) -> AxiomReport {
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                let xz = l.join(x, z);
                if l.join(x, l.meet(y, xz)) != l.meet(l.join(x, y), xz) {
                    return AxiomReport::fail("modular", vec![x, y, z], "x v (y ^ (x v z)) != (x v y) ^ (x v z)");
                }
            }
        }
    }
    AxiomReport::pass("modular")
}

/// Distributive law `x ^ (y v z) = (x ^ y) v (x ^ z)` restricted to a
/// meet/join-closed subset.
pub fn is_distributive(l: &FiniteBoundedLattice, subset: ElemSet) -> Result<AxiomReport, LatticeError> {
    if let Some(x) = subset.difference(l.all()).first() {
        return Err(LatticeError::InvalidElement(x));
    }
    if let Some((x, y)) = l.closure_violation(subset) {
        return Err(LatticeError::NotASublattice(l.name(x).to_owned(), l.name(y).to_owned()));
    }
    for x in subset {
        for y in subset {
            for z in subset {
                if l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)) {
                    return Ok(AxiomReport::fail(
                        "distributive",
                        vec![x, y, z],
                        "x ^ (y v z) != (x ^ y) v (x ^ z)",
                    ));
                }
            }
        }
    }
    Ok(AxiomReport::pass("distributive"))
}

/// Least superset of `seeds` closed under meet and join, and under `pi` when given.
pub fn generated_sublattice(
    l: &FiniteBoundedLattice,
    seeds: ElemSet,
    close_under: Option<&Involution>,
) -> ElemSet {
    let mut current = seeds;
    loop {
        let mut next = current;
        for x in current {
            if let Some(pi) = close_under {
                next.insert(pi.apply(x));
            }
            for y in current {
                next.insert(l.join(x, y));
                next.insert(l.meet(x, y));
            }
        }
        if next == current {
            return current;
        }
        current = next;
    }
}

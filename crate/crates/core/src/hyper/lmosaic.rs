//! L-mosaic axioms, the order they induce, strong closure and pi-duals.

use super::magma::Multioperation;
use super::mosaic::{is_submosaic, verify_mosaic, Mosaic};
use super::HyperError;
use crate::lattice::Involution;
use crate::report::{all_hold, AxiomReport};
use crate::set::ElemSet;

/// Lms1 to Lms4 for a (commutative) mosaic with neutral `0`:
///
/// 1. `0, x in x + x`;
/// 2. `(x + x) + (x + x) = x + x`;
/// 3. `(x + (x + y)) ∩ ((x + y) + y) ⊆ x + y`;
/// 4. exactly one `z in x + y` has `x, y in z + z`.
pub fn verify_lmosaic(m: &Mosaic) -> Vec<AxiomReport> {
    let op = m.op();
    let n = m.size();
    let e = m.neutral();
    let diag = |x: usize| op.get(x, x);

    let lms1 = AxiomReport::from_witness(
        "Lms1",
        (0..n)
            .find(|&x| !(diag(x).contains(e) && diag(x).contains(x)))
            .map(|x| (vec![x], "0 or x missing from x + x".to_owned())),
    );
    let lms2 = AxiomReport::from_witness(
        "Lms2",
        (0..n)
            .find(|&x| op.apply_sets(diag(x), diag(x)) != diag(x))
            .map(|x| (vec![x], "(x + x) + (x + x) != x + x".to_owned())),
    );
    let mut lms3 = AxiomReport::pass("Lms3");
    let mut lms4 = AxiomReport::pass("Lms4");
    for x in 0..n {
        for y in 0..n {
            let xy = op.get(x, y);
            if lms3.holds {
                let left = op.left(x, xy).intersection(op.right(xy, y));
                if !left.is_subset(xy) {
                    lms3 = AxiomReport::fail("Lms3", vec![x, y], "(x + (x + y)) ∩ ((x + y) + y) not within x + y");
                }
            }
            if lms4.holds {
                let candidates = lms4_candidates(op, x, y);
                if candidates.len() != 1 {
                    lms4 = AxiomReport::fail("Lms4", vec![x, y], format!("{} candidates", candidates.len()));
                }
            }
        }
    }
    vec![lms1, lms2, lms3, lms4]
}

/// `{z in x + y : x, y in z + z}`.
pub fn lms4_candidates(op: &Multioperation, x: usize, y: usize) -> ElemSet {
    op.get(x, y)
        .iter()
        .filter(|&z| op.get(z, z).contains(x) && op.get(z, z).contains(y))
        .collect()
}

pub fn is_lmosaic(m: &Mosaic) -> bool {
    all_hold(&verify_lmosaic(m))
}

/// `leq[y][x]` iff `y in x + x`.
pub fn induced_order(m: &Mosaic) -> Result<Vec<Vec<bool>>, HyperError> {
    let reports = verify_lmosaic(m);
    if let Some(r) = reports.iter().find(|r| !r.holds) {
        return Err(HyperError::NotAnLMosaic(r.to_string()));
    }
    let n = m.size();
    Ok((0..n).map(|y| (0..n).map(|x| m.get(x, x).contains(y)).collect()).collect())
}

/// `⋃_{x in B} x + x`: the least strong submosaic containing the submosaic `B`.
/// Needs Lms1 and Lms2.
pub fn strong_closure(m: &Mosaic, b: ElemSet) -> Result<ElemSet, HyperError> {
    let reports = verify_lmosaic(m);
    if let Some(r) = reports[..2].iter().find(|r| !r.holds) {
        return Err(HyperError::NotAnLMosaic(r.to_string()));
    }
    if !is_submosaic(m, b) {
        return Err(HyperError::NotASubmosaic(format!("{b:?}")));
    }
    Ok(b.iter().fold(ElemSet::EMPTY, |acc, x| acc.union(m.get(x, x))))
}

/// How the pi-transported table is formed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualForm {
    /// `x +π y = π(π(x) + π(y))`: transport of structure along `π`.
    Transported,
    /// `x +π y = π(x) + π(y)` without the outer `π`.
    Literal,
}

/// The pi-dual table in the requested form.
pub fn dual_table(m: &Mosaic, pi: &Involution, form: DualForm) -> Multioperation {
    let p = |x| pi.apply(x);
    Multioperation::from_fn(m.size(), |x, y| {
        let cell = m.get(p(x), p(y));
        match form {
            DualForm::Transported => cell.map(p),
            DualForm::Literal => cell,
        }
    })
}

/// The pi-dual of `m` when it is a commutative mosaic with neutral `π(0)`.
pub fn dualize(m: &Mosaic, pi: &Involution) -> Option<Mosaic> {
    dualize_with(m, pi, DualForm::Transported)
}

pub fn dualize_with(m: &Mosaic, pi: &Involution, form: DualForm) -> Option<Mosaic> {
    if pi.size() != m.size() {
        return None;
    }
    verify_mosaic(&dual_table(m, pi, form))
        .mosaic
        .filter(|d| d.neutral() == pi.apply(m.neutral()))
}

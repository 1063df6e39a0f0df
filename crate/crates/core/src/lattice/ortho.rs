//! Complements, orthocomplementations and orthomodularity.

use super::{find_sublattice_copy, generated_sublattice, is_distributive, FiniteBoundedLattice, Involution, LatticeError};
use crate::report::AxiomReport;
use crate::set::ElemSet;

/// `{y : x v y = 1 and x ^ y = 0}`.
pub fn complements(l: &FiniteBoundedLattice, x: usize) -> ElemSet {
    l.elements()
        .filter(|&y| l.join(x, y) == l.top() && l.meet(x, y) == l.bottom())
        .collect()
}

/// Reports for each defining property of an orthocomplementation, in order:
/// involution, complement selection, order reversal and both De Morgan laws.
pub fn orthocomplementation_reports(l: &FiniteBoundedLattice, pi: &Involution) -> Vec<AxiomReport> {
    if pi.size() != l.size() {
        return vec![AxiomReport::fail("involution", vec![], "size mismatch")];
    }
    let p = |x| pi.apply(x);
    let mut reports = vec![AxiomReport::pass("involution")];
    reports.push(AxiomReport::from_witness(
        "complement",
        l.elements()
            .find(|&x| !complements(l, x).contains(p(x)))
            .map(|x| (vec![x], "pi(x) is not a complement of x".to_owned())),
    ));
    let pairs = || l.elements().flat_map(|x| l.elements().map(move |y| (x, y)));
    reports.push(AxiomReport::from_witness(
        "OC1",
        pairs()
            .find(|&(x, y)| l.leq(x, y) != l.leq(p(y), p(x)))
            .map(|(x, y)| (vec![x, y], "x <= y differs from pi(y) <= pi(x)".to_owned())),
    ));
    reports.push(AxiomReport::from_witness(
        "OC2",
        pairs()
            .find(|&(x, y)| p(l.join(x, y)) != l.meet(p(x), p(y)))
            .map(|(x, y)| (vec![x, y], "pi(x v y) != pi(x) ^ pi(y)".to_owned())),
    ));
    reports.push(AxiomReport::from_witness(
        "OC3",
        pairs()
            .find(|&(x, y)| p(l.meet(x, y)) != l.join(p(x), p(y)))
            .map(|(x, y)| (vec![x, y], "pi(x ^ y) != pi(x) v pi(y)".to_owned())),
    ));
    reports
}

/// `Ok` iff `pi` is an order-reversing involution choosing a complement for
/// every element.
pub fn is_orthocomplementation(l: &FiniteBoundedLattice, pi: &Involution) -> Result<(), LatticeError> {
    match orthocomplementation_reports(l, pi).into_iter().take(3).find(|r| !r.holds) {
        None => Ok(()),
        Some(r) => Err(LatticeError::NotAnOrthocomplementation(r.describe(l.names()))),
    }
}

/// Involutions with `pi(x)` a complement of `x` for every `x`, with no order
/// condition. Sorted lexicographically.
pub fn complement_involutions(l: &FiniteBoundedLattice) -> Vec<Involution> {
    search_involutions(l, false)
}

/// Every orthocomplementation of `l`, sorted lexicographically. Empty when `l`
/// is not an ortholattice.
pub fn orthocomplementations(l: &FiniteBoundedLattice) -> Vec<Involution> {
    search_involutions(l, true)
}

fn search_involutions(l: &FiniteBoundedLattice, order_reversing: bool) -> Vec<Involution> {
    let n = l.size();
    let omega: Vec<ElemSet> = l.elements().map(|x| complements(l, x)).collect();
    if omega.iter().any(|s| s.is_empty()) {
        return Vec::new();
    }
    let mut map: Vec<Option<usize>> = vec![None; n];
    let mut out = Vec::new();
    involution_rec(l, &omega, order_reversing, &mut map, 0, &mut out);
    out
}

fn involution_rec(
    l: &FiniteBoundedLattice,
    omega: &[ElemSet],
    order_reversing: bool,
    map: &mut [Option<usize>],
    x: usize,
    out: &mut Vec<Involution>,
) {
    let n = map.len();
    if x == n {
        let full = map.iter().map(|y| y.unwrap()).collect();
        out.push(Involution::new(full).expect("constructed as an involution"));
        return;
    }
    if map[x].is_some() {
        return involution_rec(l, omega, order_reversing, map, x + 1, out);
    }
    for y in omega[x] {
        // Complementation is symmetric, so x is in omega[y] as well.
        if map[y].is_some() && y != x {
            continue;
        }
        map[x] = Some(y);
        map[y] = Some(x);
        let consistent = !order_reversing || {
            let assigned: Vec<(usize, usize)> = map
                .iter()
                .enumerate()
                .filter_map(|(u, v)| v.map(|v| (u, v)))
                .collect();
            assigned.iter().all(|&(u, pu)| {
                assigned
                    .iter()
                    .all(|&(v, pv)| l.leq(u, v) == l.leq(pv, pu))
            })
        };
        if consistent {
            involution_rec(l, omega, order_reversing, map, x + 1, out);
        }
        map[x] = None;
        map[y] = None;
    }
}

/// `x <= y` implies `x v (pi(x) ^ y) = y`, for all pairs.
pub fn is_orthomodular(l: &FiniteBoundedLattice, pi: &Involution) -> Result<AxiomReport, LatticeError> {
    is_orthocomplementation(l, pi)?;
    Ok(om1(l, pi))
}

fn om1(l: &FiniteBoundedLattice, pi: &Involution) -> AxiomReport {
    for x in l.elements() {
        for y in l.up_set(x) {
            if l.join(x, l.meet(pi.apply(x), y)) != y {
                return AxiomReport::fail("OM1", vec![x, y], "x <= y but x v (pi(x) ^ y) != y");
            }
        }
    }
    AxiomReport::pass("OM1")
}

/// The four classical characterizations of orthomodularity:
///
/// * OM1: `x <= y` implies `x v (pi(x) ^ y) = y`;
/// * OM2: `x <= y` and `x v pi(y) = 1` imply `x = y`;
/// * OM3: the hexagon is not a sublattice;
/// * OM4: for `x <= y` the pi-closed sublattice generated by `x, y` is distributive.
///
/// On an ortholattice the four reports agree.
pub fn check_om_equivalences(l: &FiniteBoundedLattice, pi: &Involution) -> Result<Vec<AxiomReport>, LatticeError> {
    is_orthocomplementation(l, pi)?;
    let mut om2 = AxiomReport::pass("OM2");
    'outer: for x in l.elements() {
        for y in l.up_set(x) {
            if x != y && l.join(x, pi.apply(y)) == l.top() {
                om2 = AxiomReport::fail("OM2", vec![x, y], "x < y and x v pi(y) = 1");
                break 'outer;
            }
        }
    }
    let om3 = match find_sublattice_copy(l, &FiniteBoundedLattice::hexagon()) {
        None => AxiomReport::pass("OM3"),
        Some(copy) => AxiomReport::fail("OM3", copy, "hexagon sublattice"),
    };
    let mut om4 = AxiomReport::pass("OM4");
    'outer4: for x in l.elements() {
        for y in l.up_set(x) {
            let sub = generated_sublattice(l, ElemSet::singleton(x).with(y), Some(pi));
            if !is_distributive(l, sub)?.holds {
                om4 = AxiomReport::fail("OM4", vec![x, y], "generated pi-closed sublattice is not distributive");
                break 'outer4;
            }
        }
    }
    Ok(vec![om1(l, pi), om2, om3, om4])
}

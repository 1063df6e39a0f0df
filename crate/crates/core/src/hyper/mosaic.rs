use super::magma::{find_neutral, inverses, is_commutative, is_total, Multioperation};
use super::HyperError;
use crate::lattice::Involution;
use crate::report::{all_hold, AxiomReport};
use crate::set::ElemSet;

/// A commutative unital magma that is reversible with respect to its
/// inverse map. Values are only produced by [`verify_mosaic`] or by trusted
/// constructions inside this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mosaic {
    op: Multioperation,
    neutral: usize,
    rho: Involution,
}

impl Mosaic {
    pub(crate) fn from_verified_parts(op: Multioperation, neutral: usize, rho: Involution) -> Self {
        Mosaic { op, neutral, rho }
    }

    pub fn op(&self) -> &Multioperation {
        &self.op
    }

    pub fn neutral(&self) -> usize {
        self.neutral
    }

    pub fn rho(&self) -> &Involution {
        &self.rho
    }

    pub fn size(&self) -> usize {
        self.op.size()
    }

    pub fn get(&self, x: usize, y: usize) -> ElemSet {
        self.op.get(x, y)
    }

    pub fn into_op(self) -> Multioperation {
        self.op
    }
}

/// Result of running the mosaic pipeline on a table.
#[derive(Clone, Debug)]
pub struct MosaicVerification {
    pub reports: Vec<AxiomReport>,
    pub mosaic: Option<Mosaic>,
}

impl MosaicVerification {
    pub fn holds(&self) -> bool {
        self.mosaic.is_some()
    }

    pub fn report(&self, axiom: &str) -> Option<&AxiomReport> {
        self.reports.iter().find(|r| r.axiom == axiom)
    }
}

/// Totality, commutativity, neutral element, unique inverses and
/// reversibility with respect to the inverse map, followed by the
/// consequences every mosaic must satisfy: `rho(e) = e`, `rho` involutive,
/// `rho` a strong isomorphism onto the opposite table, `e` in `x . rho(x)`,
/// and the three-way membership equivalence.
///
/// The pipeline stops at the first step whose failure makes later steps
/// meaningless (no neutral element, or some element without a unique inverse).
pub fn verify_mosaic(op: &Multioperation) -> MosaicVerification {
    let n = op.size();
    let mut reports = vec![is_total(op), is_commutative(op)];
    let stop = |reports| MosaicVerification { reports, mosaic: None };

    let Some(e) = find_neutral(op) else {
        reports.push(AxiomReport::fail("neutral", vec![], "no neutral element"));
        return stop(reports);
    };
    reports.push(AxiomReport::pass("neutral"));

    let mut rho_map = Vec::with_capacity(n);
    for x in 0..n {
        let inv = inverses(op, e, x);
        if inv.len() != 1 {
            let reason = if inv.is_empty() { "no inverse".to_owned() } else { format!("{} inverses", inv.len()) };
            reports.push(AxiomReport::fail("invertibility", vec![x], reason));
            return stop(reports);
        }
        rho_map.push(inv.first().unwrap());
    }
    reports.push(AxiomReport::pass("invertibility"));
    let rho_raw = rho_map;

    reports.push(reversibility(op, |x| rho_raw[x]));
    if !all_hold(&reports) {
        return stop(reports);
    }

    reports.push(AxiomReport::from_witness(
        "rho(e) = e",
        (rho_raw[e] != e).then(|| (vec![e], "inverse of the neutral element is not itself".to_owned())),
    ));
    let rho = match Involution::new(rho_raw.clone()) {
        Ok(rho) => {
            reports.push(AxiomReport::pass("rho involutive"));
            rho
        }
        Err(_) => {
            let x = (0..n).find(|&x| rho_raw[rho_raw[x]] != x).unwrap();
            reports.push(AxiomReport::fail("rho involutive", vec![x], "rho(rho(x)) != x"));
            return stop(reports);
        }
    };
    reports.extend(lemma_consequences(op, e, &rho));
    if all_hold(&reports) {
        MosaicVerification { reports, mosaic: Some(Mosaic::from_verified_parts(op.clone(), e, rho)) }
    } else {
        stop(reports)
    }
}

/// `z in x . y` implies `x in z . rho(y)` and `y in rho(x) . z`.
pub fn reversibility(op: &Multioperation, rho: impl Fn(usize) -> usize) -> AxiomReport {
    for x in 0..op.size() {
        for y in 0..op.size() {
            for z in op.get(x, y) {
                if !op.get(z, rho(y)).contains(x) {
                    return AxiomReport::fail("reversibility", vec![x, y, z], "z in x . y but x not in z . rho(y)");
                }
                if !op.get(rho(x), z).contains(y) {
                    return AxiomReport::fail("reversibility", vec![x, y, z], "z in x . y but y not in rho(x) . z");
                }
            }
        }
    }
    AxiomReport::pass("reversibility")
}

fn lemma_consequences(op: &Multioperation, e: usize, rho: &Involution) -> Vec<AxiomReport> {
    let n = op.size();
    let r = |x| rho.apply(x);
    let dual = op.dual();
    let mut strong = AxiomReport::pass("rho strong iso onto dual");
    let mut rinv = AxiomReport::pass("RINV");
    let mut three_way = AxiomReport::pass("three-way equivalence");
    for x in 0..n {
        if rinv.holds && !(op.get(x, r(x)).contains(e) && op.get(r(x), x).contains(e)) {
            rinv = AxiomReport::fail("RINV", vec![x], "e not in x . rho(x) and rho(x) . x");
        }
        for y in 0..n {
            if strong.holds && op.get(x, y).map(r) != dual.get(r(x), r(y)) {
                strong = AxiomReport::fail("rho strong iso onto dual", vec![x, y], "rho(x . y) != rho(x) .d rho(y)");
            }
            for z in 0..n {
                let a = op.get(x, y).contains(z);
                let b = op.get(z, r(y)).contains(x);
                let c = op.get(r(x), z).contains(y);
                if three_way.holds && !(a == b && b == c) {
                    three_way = AxiomReport::fail("three-way equivalence", vec![x, y, z], "memberships disagree");
                }
            }
        }
    }
    vec![strong, rinv, three_way]
}

/// The restriction of `m` to `subset` (cellwise intersection), if it is a
/// submosaic: contains the neutral element and the restricted table is again
/// a mosaic. Returns the reindexed mosaic and the original indices.
pub fn submosaic(m: &Mosaic, subset: ElemSet) -> Result<(Mosaic, Vec<usize>), HyperError> {
    if let Some(x) = subset.difference(m.op().carrier()).first() {
        return Err(HyperError::InvalidElement(x));
    }
    if !subset.contains(m.neutral()) {
        return Err(HyperError::NotASubmosaic("does not contain the neutral element".into()));
    }
    let (op, elems) = m.op().restrict(subset);
    let v = verify_mosaic(&op);
    match v.mosaic {
        Some(sub) => Ok((sub, elems)),
        None => {
            let failed = v.reports.iter().find(|r| !r.holds).unwrap();
            Err(HyperError::NotASubmosaic(failed.to_string()))
        }
    }
}

pub fn is_submosaic(m: &Mosaic, subset: ElemSet) -> bool {
    submosaic(m, subset).is_ok()
}

/// A submosaic closed under the full multioperation, so that the inclusion is
/// a strong embedding.
pub fn is_strong_submosaic(m: &Mosaic, subset: ElemSet) -> bool {
    is_submosaic(m, subset) && m.op().apply_sets(subset, subset).is_subset(subset)
}

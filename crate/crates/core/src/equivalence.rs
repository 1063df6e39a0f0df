//! Ortholattices versus pi-dualizable L-mosaics.
//!
//! [`functor_e`] sends `(L, pi)` to its additive Nakano mosaic paired with the
//! same `pi`; [`reconstruct_lattice`] goes back on the same carrier. Arrows are
//! compared by [`morphism_transfer_check`], and orthomodularity is decided on
//! the mosaic side by [`is_orthomodular_mosaic`].

use thiserror::Error;

use crate::hyper::{
    check_morphism, dualize, induced_order, is_associative, is_lmosaic, lms4_candidates, verify_lmosaic,
    verify_mosaic, Mosaic, MorphismKind, Multioperation,
};
use crate::lattice::{
    generated_sublattice, is_lattice_morphism, is_modular, is_orthocomplementation, FiniteBoundedLattice,
    Involution, LatticeError,
};
use crate::nakano::{additive_nakano, extremum_by_characterization};
use crate::report::{first_failure, AxiomReport};
use crate::set::ElemSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquivalenceError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("not a pi-dualizable L-mosaic: {0}")]
    NotDualizable(String),
    #[error("reconstruction failed at ({x}, {y}): {reason}")]
    ReconstructionFailure { x: usize, y: usize, reason: String },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}

/// A bounded lattice with an orthocomplementation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoPair {
    lattice: FiniteBoundedLattice,
    pi: Involution,
}

impl OrthoPair {
    pub fn new(lattice: FiniteBoundedLattice, pi: Involution) -> Result<Self, EquivalenceError> {
        is_orthocomplementation(&lattice, &pi)?;
        Ok(OrthoPair { lattice, pi })
    }

    pub fn lattice(&self) -> &FiniteBoundedLattice {
        &self.lattice
    }

    pub fn pi(&self) -> &Involution {
        &self.pi
    }

    pub fn into_parts(self) -> (FiniteBoundedLattice, Involution) {
        (self.lattice, self.pi)
    }
}

/// An L-mosaic with an involution `pi` whose transported dual is again an
/// L-mosaic with neutral `pi(0)`, `pi` reverses the induced order, and
/// `pi(0)` lies in every `x + pi(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualizableLMosaicPair {
    names: Vec<String>,
    mosaic: Mosaic,
    pi: Involution,
}

impl DualizableLMosaicPair {
    pub fn new(names: Vec<String>, mosaic: Mosaic, pi: Involution) -> Result<Self, EquivalenceError> {
        let n = mosaic.size();
        if names.len() != n || pi.size() != n {
            return Err(EquivalenceError::NotDualizable("size mismatch".into()));
        }
        if let Some(r) = first_failure(&verify_lmosaic(&mosaic)) {
            return Err(EquivalenceError::NotDualizable(r.to_string()));
        }
        match dualize(&mosaic, &pi) {
            Some(d) if is_lmosaic(&d) => {}
            _ => return Err(EquivalenceError::NotDualizable("pi-dual is not an L-mosaic with neutral pi(0)".into())),
        }
        if let Some(r) = first_failure(&dualizability_reports(&mosaic, &pi)) {
            return Err(EquivalenceError::NotDualizable(r.to_string()));
        }
        Ok(DualizableLMosaicPair { names, mosaic, pi })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mosaic(&self) -> &Mosaic {
        &self.mosaic
    }

    pub fn pi(&self) -> &Involution {
        &self.pi
    }

    /// `pi(0)`, the element playing the role of `1`.
    pub fn one(&self) -> usize {
        self.pi.apply(self.mosaic.neutral())
    }
}

/// Order reversal (`x in y + y` iff `pi(y) in pi(x) + pi(x)`) and
/// complementation (`pi(0) in x + pi(x)`).
pub fn dualizability_reports(m: &Mosaic, pi: &Involution) -> Vec<AxiomReport> {
    let n = m.size();
    let p = |x| pi.apply(x);
    let one = p(m.neutral());
    let reversal = AxiomReport::from_witness(
        "pi order-reversing",
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| m.get(y, y).contains(x) != m.get(p(x), p(x)).contains(p(y)))
            .map(|(x, y)| (vec![x, y], "x in y + y differs from pi(y) in pi(x) + pi(x)".to_owned())),
    );
    let complement = AxiomReport::from_witness(
        "pi complementing",
        (0..n)
            .find(|&x| !m.get(x, p(x)).contains(one))
            .map(|x| (vec![x], "pi(0) not in x + pi(x)".to_owned())),
    );
    vec![reversal, complement]
}

pub fn functor_e(op: &OrthoPair) -> DualizableLMosaicPair {
    let m = additive_nakano(&op.lattice);
    DualizableLMosaicPair {
        names: op.lattice.names().to_vec(),
        mosaic: m.mosaic().clone(),
        pi: op.pi.clone(),
    }
}

/// The ortholattice on the same carrier: order `y <= x` iff `y in x + x`,
/// join the unique Lms4 element, meet `pi(pi(x) v pi(y))`.
pub fn reconstruct_lattice(p: &DualizableLMosaicPair) -> Result<OrthoPair, EquivalenceError> {
    let m = &p.mosaic;
    let n = m.size();
    let fail = |x, y, reason: &str| EquivalenceError::ReconstructionFailure { x, y, reason: reason.to_owned() };
    let leq = induced_order(m).map_err(|e| fail(0, 0, &e.to_string()))?;
    let lattice = FiniteBoundedLattice::from_order(p.names.clone(), &leq).map_err(|e| fail(0, 0, &e.to_string()))?;
    if lattice.bottom() != m.neutral() {
        return Err(fail(m.neutral(), m.neutral(), "neutral element is not the bottom"));
    }
    if lattice.top() != p.one() {
        return Err(fail(m.neutral(), p.one(), "pi(0) is not the top"));
    }
    let pi = |x| p.pi.apply(x);
    for x in 0..n {
        for y in 0..n {
            let j = lms4_candidates(m.op(), x, y);
            if j != ElemSet::singleton(lattice.join(x, y)) {
                return Err(fail(x, y, "Lms4 element is not the least upper bound"));
            }
            if lattice.meet(x, y) != pi(lattice.join(pi(x), pi(y))) {
                return Err(fail(x, y, "meet differs from pi(pi(x) v pi(y))"));
            }
        }
    }
    let recomputed = additive_nakano(&lattice);
    for x in 0..n {
        for y in 0..n {
            if recomputed.get(x, y) != m.get(x, y) {
                return Err(fail(x, y, "table is not the Nakano table of the reconstructed lattice"));
            }
        }
    }
    OrthoPair::new(lattice, p.pi.clone()).map_err(|e| fail(0, 0, &e.to_string()))
}

/// Statuses of one map `f` between two ortholattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismTransfer {
    /// `f` preserves meet and join.
    pub lattice_morphism: bool,
    /// `f` is a unitary mosaic morphism between the additive Nakano mosaics.
    pub mosaic_morphism: bool,
    /// `f . pi = pi' . f`.
    pub intertwines: bool,
}

impl MorphismTransfer {
    pub fn ort_arrow(&self) -> bool {
        self.lattice_morphism && self.intertwines
    }

    pub fn lmosaic_arrow(&self) -> bool {
        self.mosaic_morphism && self.intertwines
    }

    /// Holds when `f` is an arrow in both categories or in neither.
    pub fn report(&self) -> AxiomReport {
        if self.ort_arrow() == self.lmosaic_arrow() {
            AxiomReport::pass("morphism transfer")
        } else {
            AxiomReport::fail(
                "morphism transfer",
                vec![],
                format!(
                    "lattice morphism {}, mosaic morphism {}, intertwines {}",
                    self.lattice_morphism, self.mosaic_morphism, self.intertwines
                ),
            )
        }
    }
}

pub fn morphism_transfer_check(f: &[usize], src: &OrthoPair, dst: &OrthoPair) -> MorphismTransfer {
    let a = additive_nakano(&src.lattice);
    let b = additive_nakano(&dst.lattice);
    morphism_transfer_with(f, src, dst, a.mosaic(), b.mosaic())
}

/// As [`morphism_transfer_check`] with precomputed Nakano mosaics.
pub fn morphism_transfer_with(f: &[usize], src: &OrthoPair, dst: &OrthoPair, a: &Mosaic, b: &Mosaic) -> MorphismTransfer {
    let total = f.len() == src.lattice.size() && f.iter().all(|&y| y < dst.lattice.size());
    MorphismTransfer {
        lattice_morphism: is_lattice_morphism(f, &src.lattice, &dst.lattice, false).holds,
        mosaic_morphism: check_morphism(f, a, b, MorphismKind::Morphism).holds,
        intertwines: total && src.lattice.elements().all(|x| f[src.pi.apply(x)] == dst.pi.apply(f[x])),
    }
}

/// `x in y + y` and `1 in x + pi(y)` imply `x = y`, with `1 = pi(0)`.
pub fn is_orthomodular_mosaic(p: &DualizableLMosaicPair) -> AxiomReport {
    let m = &p.mosaic;
    let one = p.one();
    for x in 0..m.size() {
        for y in 0..m.size() {
            if x != y && m.get(y, y).contains(x) && m.get(x, p.pi.apply(y)).contains(one) {
                return AxiomReport::fail("orthomodular mosaic", vec![x, y], "x in y + y and 1 in x + pi(y) but x != y");
            }
        }
    }
    AxiomReport::pass("orthomodular mosaic")
}

/// `pi(0)` agrees with the element characterized by `u in x + x => x = u`.
pub fn top_consistency(p: &DualizableLMosaicPair) -> AxiomReport {
    match extremum_by_characterization(&p.mosaic) {
        Ok(u) if u == p.one() => AxiomReport::pass("top consistency"),
        Ok(u) => AxiomReport::fail("top consistency", vec![u, p.one()], "characterized top differs from pi(0)"),
        Err(e) => AxiomReport::fail("top consistency", vec![], e.to_string()),
    }
}

/// The pi-closed substructure generated by two elements, checked on both sides.
#[derive(Clone, Debug)]
pub struct GeneratedPolygroup {
    pub subset: ElemSet,
    /// The generated sublattice of the reconstructed lattice is modular.
    pub modular: AxiomReport,
    /// The restricted table passes the mosaic pipeline.
    pub mosaic: AxiomReport,
    pub associative: AxiomReport,
}

impl GeneratedPolygroup {
    pub fn holds(&self) -> bool {
        self.modular.holds && self.mosaic.holds && self.associative.holds
    }

    pub fn report(&self) -> AxiomReport {
        [&self.modular, &self.mosaic, &self.associative]
            .into_iter()
            .find(|r| !r.holds)
            .map(|r| AxiomReport { axiom: "generated polygroup".into(), ..r.clone() })
            .unwrap_or_else(|| AxiomReport::pass("generated polygroup"))
    }
}

/// Least subset containing `x, y, 0, 1` closed under `pi`, meet and join of
/// the reconstructed lattice, with the mosaic restricted to it.
pub fn generated_polygroup_check(
    p: &DualizableLMosaicPair,
    x: usize,
    y: usize,
) -> Result<GeneratedPolygroup, EquivalenceError> {
    let om = is_orthomodular_mosaic(p);
    if !om.holds {
        return Err(EquivalenceError::PreconditionFailed(om.to_string()));
    }
    let n = p.mosaic.size();
    if x >= n || y >= n {
        return Err(LatticeError::InvalidElement(x.max(y)).into());
    }
    let ortho = reconstruct_lattice(p)?;
    let l = ortho.lattice();
    let seeds = ElemSet::singleton(x).with(y).with(l.bottom()).with(l.top());
    let subset = generated_sublattice(l, seeds, Some(ortho.pi()));
    let (sub, _) = l.sublattice(subset)?;
    let (op, _) = p.mosaic.op().restrict(subset);
    let v = verify_mosaic(&op);
    let mosaic = first_failure(&v.reports)
        .map(|r| AxiomReport { axiom: "restricted mosaic".into(), ..r.clone() })
        .unwrap_or_else(|| AxiomReport::pass("restricted mosaic"));
    Ok(GeneratedPolygroup { subset, modular: is_modular(&sub), mosaic, associative: is_associative(&op) })
}

/// Every pi-dualizable L-mosaic with neutral `0` on `n <= 4` points.
///
/// Cells are chosen subject to the row constraints forced by Lms1 and unique
/// inverses: `(0, x) = {x}`, `{0, x} ⊆ (x, x)`, `0 ∉ (x, y)` for `x != y`.
pub fn enumerate_dualizable_pairs(n: usize) -> Vec<DualizableLMosaicPair> {
    assert!((1..=4).contains(&n), "carrier size must be between 1 and 4");
    let mut cells = Vec::new();
    for x in 1..n {
        for y in x..n {
            cells.push((x, y));
        }
    }
    let options: Vec<Vec<ElemSet>> = cells
        .iter()
        .map(|&(x, y)| {
            let rest = ElemSet::full(n).difference(ElemSet::singleton(0));
            subsets(rest)
                .filter(|s| if x == y { s.contains(x) } else { !s.is_empty() })
                .map(|s| if x == y { s.with(0) } else { s })
                .collect()
        })
        .collect();
    let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let involutions = Involution::all(n);
    let mut out = Vec::new();
    let mut choice = vec![0usize; cells.len()];
    loop {
        let op = Multioperation::from_fn(n, |x, y| {
            if x == 0 {
                return ElemSet::singleton(y);
            }
            if y == 0 {
                return ElemSet::singleton(x);
            }
            let (a, b) = if x <= y { (x, y) } else { (y, x) };
            let k = cells.iter().position(|&c| c == (a, b)).unwrap();
            options[k][choice[k]]
        });
        if let Some(m) = verify_mosaic(&op).mosaic.filter(is_lmosaic) {
            for pi in &involutions {
                if let Ok(pair) = DualizableLMosaicPair::new(names.clone(), m.clone(), pi.clone()) {
                    out.push(pair);
                }
            }
        }
        let mut k = 0;
        loop {
            if k == cells.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < options[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn subsets(of: ElemSet) -> impl Iterator<Item = ElemSet> {
    let bits = of.bits();
    let mut sub = 0u32;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let current = ElemSet::from_bits(sub);
        sub = sub.wrapping_sub(bits) & bits;
        done = sub == 0;
        Some(current)
    })
}

//! Additive and multiplicative Nakano mosaics of a bounded lattice.
//!
//! For a bounded lattice `L` the additive table is
//! `x + y = {z : x v y = x v z = z v y}` with neutral `0`, and the
//! multiplicative table is the same construction for meets with neutral `1`.
//! Every element is its own inverse.

use thiserror::Error;

use crate::hyper::{is_associative, verify_lmosaic, verify_mosaic, Mosaic, Multioperation};
use crate::lattice::{is_modular, FiniteBoundedLattice, Involution};
use crate::report::AxiomReport;
use crate::set::ElemSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NakanoError {
    #[error("no unique element u with (u in x.x implies x = u)")]
    NoUniqueExtremum,
    #[error("subset does not contain the neutral element `{0}`")]
    MissingBound(String),
    #[error("subset is not closed under meet and join (`{0}`, `{1}`)")]
    NotASublattice(String, String),
    #[error("restricted table is not a mosaic: {0}")]
    NotAMosaic(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Additive,
    Multiplicative,
}

impl Flavor {
    pub fn symbol(self) -> &'static str {
        match self {
            Flavor::Additive => "+",
            Flavor::Multiplicative => ".",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NakanoMosaic {
    base: FiniteBoundedLattice,
    flavor: Flavor,
    mosaic: Mosaic,
}

impl NakanoMosaic {
    pub fn base(&self) -> &FiniteBoundedLattice {
        &self.base
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn mosaic(&self) -> &Mosaic {
        &self.mosaic
    }

    pub fn op(&self) -> &Multioperation {
        self.mosaic.op()
    }

    pub fn get(&self, x: usize, y: usize) -> ElemSet {
        self.mosaic.get(x, y)
    }

    /// The lattice whose joins define this table: the base for additive
    /// mosaics, its order dual for multiplicative ones.
    pub fn join_view(&self) -> FiniteBoundedLattice {
        match self.flavor {
            Flavor::Additive => self.base.clone(),
            Flavor::Multiplicative => self.base.dual(),
        }
    }
}

/// `{z : x v y = x v z = z v y}` for every pair, as a table.
pub fn nakano_table(l: &FiniteBoundedLattice, flavor: Flavor) -> Multioperation {
    let op = |a, b| match flavor {
        Flavor::Additive => l.join(a, b),
        Flavor::Multiplicative => l.meet(a, b),
    };
    Multioperation::from_fn(l.size(), |x, y| {
        let target = op(x, y);
        l.elements().filter(|&z| op(x, z) == target && op(z, y) == target).collect()
    })
}

fn build(l: &FiniteBoundedLattice, flavor: Flavor) -> NakanoMosaic {
    let neutral = match flavor {
        Flavor::Additive => l.bottom(),
        Flavor::Multiplicative => l.top(),
    };
    let mosaic = Mosaic::from_verified_parts(nakano_table(l, flavor), neutral, Involution::identity(l.size()));
    NakanoMosaic { base: l.clone(), flavor, mosaic }
}

pub fn additive_nakano(l: &FiniteBoundedLattice) -> NakanoMosaic {
    build(l, Flavor::Additive)
}

pub fn multiplicative_nakano(l: &FiniteBoundedLattice) -> NakanoMosaic {
    build(l, Flavor::Multiplicative)
}

/// The unique `u` such that `u in x.x` forces `x = u`.
pub fn extremum_by_characterization(m: &Mosaic) -> Result<usize, NakanoError> {
    let n = m.size();
    let mut found = (0..n).filter(|&u| (0..n).all(|x| !m.get(x, x).contains(u) || x == u));
    match (found.next(), found.next()) {
        (Some(u), None) => Ok(u),
        _ => Err(NakanoError::NoUniqueExtremum),
    }
}

/// A mosaic restricted to a subset, reindexed, with the original indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub mosaic: Mosaic,
    pub elements: Vec<usize>,
}

/// Cellwise intersection of the table with a sublattice containing the
/// neutral element. The result is the Nakano mosaic of that sublattice.
pub fn restrict_to_sublattice(m: &NakanoMosaic, sub: ElemSet) -> Result<Restriction, NakanoError> {
    let l = m.base();
    let neutral = m.mosaic().neutral();
    if !sub.contains(neutral) {
        return Err(NakanoError::MissingBound(l.name(neutral).to_owned()));
    }
    if let Some((x, y)) = l.closure_violation(sub) {
        return Err(NakanoError::NotASublattice(l.name(x).to_owned(), l.name(y).to_owned()));
    }
    let (op, elements) = m.op().restrict(sub);
    let v = verify_mosaic(&op);
    match v.mosaic {
        Some(mosaic) => Ok(Restriction { mosaic, elements }),
        None => Err(NakanoError::NotAMosaic(v.reports.iter().find(|r| !r.holds).unwrap().to_string())),
    }
}

/// Order-theoretic identities of a Nakano mosaic, each checked over all tuples.
/// For multiplicative mosaics the statements are read in the dual lattice.
pub fn nakano_properties(m: &NakanoMosaic) -> Vec<AxiomReport> {
    let l = m.join_view();
    let op = m.op();
    let n = l.size();
    let (sup_name, leqsup_name) = match m.flavor {
        Flavor::Additive => ("sup", "leqsup"),
        Flavor::Multiplicative => ("inf", "geqinf"),
    };
    let mut antisym = AxiomReport::pass("antisym");
    let mut trans = AxiomReport::pass("trans");
    let mut leqsup = AxiomReport::pass(leqsup_name);
    let mut sup = AxiomReport::pass(sup_name);
    let mut cl = AxiomReport::pass("CL");
    let mut lemlm3 = AxiomReport::pass("lemlm3");
    let mut order = AxiomReport::pass("induced order");

    for x in 0..n {
        let xx = op.get(x, x);
        if trans.holds && op.apply_sets(xx, xx) != xx {
            trans = AxiomReport::fail("trans", vec![x], "(x.x).(x.x) != x.x");
        }
        for y in 0..n {
            let xy = op.get(x, y);
            if antisym.holds && (xy.contains(x) && xy.contains(y)) != (x == y) {
                antisym = AxiomReport::fail("antisym", vec![x, y], "x, y in x.y differs from x = y");
            }
            if order.holds && op.get(x, x).contains(y) != l.leq(y, x) {
                order = AxiomReport::fail("induced order", vec![y, x], "y in x.x differs from y <= x");
            }
            if lemlm3.holds {
                let left = op.left(x, xy).intersection(op.right(xy, y));
                if !left.is_subset(xy) {
                    lemlm3 = AxiomReport::fail("lemlm3", vec![x, y], "(x.(x.y)) ∩ ((x.y).y) not within x.y");
                }
            }
            for z in 0..n {
                if leqsup.holds && xy.contains(z) && !l.leq(z, l.join(x, y)) {
                    leqsup = AxiomReport::fail(leqsup_name, vec![x, y, z], "z in x.y but z not below x v y");
                }
                if sup.holds {
                    let lhs = z == l.join(x, y);
                    let zz = op.get(z, z);
                    let rhs = zz.contains(x) && zz.contains(y) && xy.contains(z);
                    if lhs != rhs {
                        sup = AxiomReport::fail(sup_name, vec![x, y, z], "z = x v y differs from x, y in z.z and z in x.y");
                    }
                }
                if cl.holds {
                    let xyz = l.join(l.join(x, y), z);
                    let bound: ElemSet = (0..n)
                        .filter(|&t| {
                            l.join(t, l.join(x, y)) == xyz
                                && l.join(t, l.join(x, z)) == xyz
                                && l.join(t, l.join(y, z)) == xyz
                        })
                        .collect();
                    if !op.left(x, op.get(y, z)).is_subset(bound) {
                        cl = AxiomReport::fail("CL", vec![x, y, z], "x.(y.z) escapes the CL bound");
                    }
                }
            }
        }
    }
    vec![antisym, trans, leqsup, sup, cl, lemlm3, order]
}

/// The three statements that Nakano's theorem declares equivalent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NakanoEquivalence {
    pub additive_associative: bool,
    pub multiplicative_associative: bool,
    pub modular: bool,
}

impl NakanoEquivalence {
    pub fn evaluate(l: &FiniteBoundedLattice) -> Self {
        NakanoEquivalence {
            additive_associative: is_associative(additive_nakano(l).op()).holds,
            multiplicative_associative: is_associative(multiplicative_nakano(l).op()).holds,
            modular: is_modular(l).holds,
        }
    }

    pub fn agree(&self) -> bool {
        self.additive_associative == self.modular && self.multiplicative_associative == self.modular
    }

    pub fn report(&self) -> AxiomReport {
        if self.agree() {
            AxiomReport::pass("Nakano equivalence")
        } else {
            AxiomReport::fail(
                "Nakano equivalence",
                vec![],
                format!(
                    "additive associative {}, multiplicative associative {}, modular {}",
                    self.additive_associative, self.multiplicative_associative, self.modular
                ),
            )
        }
    }
}

/// Full verification bundle for one Nakano mosaic: mosaic pipeline, L-mosaic
/// axioms and reproductivity.
pub fn verify_nakano(m: &NakanoMosaic) -> Vec<AxiomReport> {
    let mut reports = verify_mosaic(m.op()).reports;
    reports.extend(verify_lmosaic(m.mosaic()));
    reports.push(crate::hyper::is_reproductive(m.op()));
    reports
}

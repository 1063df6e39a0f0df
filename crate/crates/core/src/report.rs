//! Pass/fail results of exhaustive axiom checks.

use std::fmt;

use serde::Serialize;

/// Concrete counterexample: the offending elements and a short reason code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub elements: Vec<usize>,
    pub reason: String,
}

/// Outcome of checking one axiom over a finite structure.
///
/// A failing report always carries the lexicographically least witness found
/// by scanning element tuples in index order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl AxiomReport {
    pub fn pass(axiom: impl Into<String>) -> Self {
        AxiomReport { axiom: axiom.into(), holds: true, witness: None }
    }

    pub fn fail(axiom: impl Into<String>, elements: Vec<usize>, reason: impl Into<String>) -> Self {
        AxiomReport {
            axiom: axiom.into(),
            holds: false,
            witness: Some(Witness { elements, reason: reason.into() }),
        }
    }

    /// Pass unless `witness` is `Some`.
    pub fn from_witness(axiom: impl Into<String>, witness: Option<(Vec<usize>, String)>) -> Self {
        match witness {
            None => AxiomReport::pass(axiom),
            Some((elements, reason)) => AxiomReport::fail(axiom, elements, reason),
        }
    }

    pub fn witness_elements(&self) -> Option<&[usize]> {
        self.witness.as_ref().map(|w| w.elements.as_slice())
    }

    /// One-line rendering with element labels substituted.
    pub fn describe(&self, names: &[String]) -> String {
        match &self.witness {
            None => format!("{}: holds", self.axiom),
            Some(w) => {
                let elems: Vec<&str> = w
                    .elements
                    .iter()
                    .map(|&x| names.get(x).map(String::as_str).unwrap_or("?"))
                    .collect();
                format!("{}: FAILS at ({}) [{}]", self.axiom, elems.join(", "), w.reason)
            }
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}: holds", self.axiom),
            Some(w) => write!(f, "{}: FAILS at {:?} [{}]", self.axiom, w.elements, w.reason),
        }
    }
}

/// True iff every report in the bundle holds.
pub fn all_hold(reports: &[AxiomReport]) -> bool {
    reports.iter().all(|r| r.holds)
}

/// First failing report of a bundle.
pub fn first_failure(reports: &[AxiomReport]) -> Option<&AxiomReport> {
    reports.iter().find(|r| !r.holds)
}

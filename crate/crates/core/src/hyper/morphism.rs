use super::magma::Multioperation;
use super::mosaic::Mosaic;
use crate::report::AxiomReport;
use crate::set::ElemSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismKind {
    /// `f(x . y)` is contained in `f(x) . f(y)`.
    Morphism,
    /// `f(x . y) = f(x) . f(y)`.
    Strong,
    /// Injective with `f(x . y) = (f(x) . f(y)) ∩ f(A)`.
    Embedding,
}

impl MorphismKind {
    fn label(self) -> &'static str {
        match self {
            MorphismKind::Morphism => "morphism",
            MorphismKind::Strong => "strong morphism",
            MorphismKind::Embedding => "embedding",
        }
    }
}

/// Magma-level condition for `f: A -> B`, no unit involved.
pub fn check_magma_morphism(f: &[usize], a: &Multioperation, b: &Multioperation, kind: MorphismKind) -> AxiomReport {
    let name = kind.label();
    if f.len() != a.size() || f.iter().any(|&y| y >= b.size()) {
        return AxiomReport::fail(name, vec![], "map is not a function between the carriers");
    }
    let image: ElemSet = f.iter().copied().collect();
    if kind == MorphismKind::Embedding && image.len() != f.len() {
        let x = (0..f.len()).find(|&x| (0..x).any(|y| f[y] == f[x])).unwrap();
        return AxiomReport::fail(name, vec![x], "not injective");
    }
    for x in 0..a.size() {
        for y in 0..a.size() {
            let lhs = a.get(x, y).map(|z| f[z]);
            let rhs = b.get(f[x], f[y]);
            let ok = match kind {
                MorphismKind::Morphism => lhs.is_subset(rhs),
                MorphismKind::Strong => lhs == rhs,
                MorphismKind::Embedding => lhs == rhs.intersection(image),
            };
            if !ok {
                return AxiomReport::fail(name, vec![x, y], format!("{name} condition fails at (x, y)"));
            }
        }
    }
    AxiomReport::pass(name)
}

/// Mosaic morphism of the requested kind: the magma condition plus
/// unitarity `f(e) = e'`. When both hold, inverse preservation
/// `f(rho(x)) = rho'(f(x))` is verified as well.
pub fn check_morphism(f: &[usize], a: &Mosaic, b: &Mosaic, kind: MorphismKind) -> AxiomReport {
    let magma = check_magma_morphism(f, a.op(), b.op(), kind);
    let name = format!("unitary {}", magma.axiom);
    if !magma.holds {
        return AxiomReport { axiom: name, ..magma };
    }
    if f[a.neutral()] != b.neutral() {
        return AxiomReport::fail(name, vec![a.neutral()], "f(e) != e'");
    }
    if let Some(x) = (0..a.size()).find(|&x| f[a.rho().apply(x)] != b.rho().apply(f[x])) {
        return AxiomReport::fail(name, vec![x], "f(x^-1) != f(x)^-1");
    }
    AxiomReport::pass(name)
}

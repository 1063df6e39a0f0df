use super::HyperError;
use crate::set::ElemSet;

/// A function from `{0, .., domain - 1}` into subsets of `{0, .., codomain - 1}`,
/// i.e. a binary relation read row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multimap {
    codomain: usize,
    images: Vec<ElemSet>,
}

impl Multimap {
    pub fn new(codomain: usize, images: Vec<ElemSet>) -> Result<Self, HyperError> {
        let range = ElemSet::full(codomain);
        if let Some(x) = images.iter().position(|s| !s.is_subset(range)) {
            return Err(HyperError::InvalidElement(x));
        }
        Ok(Multimap { codomain, images })
    }

    /// `x -> {x}`.
    pub fn identity(n: usize) -> Self {
        Multimap { codomain: n, images: (0..n).map(ElemSet::singleton).collect() }
    }

    pub fn domain(&self) -> usize {
        self.images.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn image(&self, x: usize) -> ElemSet {
        self.images[x]
    }

    /// Union of the images of the members of `s`.
    pub fn image_of_set(&self, s: ElemSet) -> ElemSet {
        s.iter().fold(ElemSet::EMPTY, |acc, x| acc.union(self.images[x]))
    }

    pub fn is_total(&self) -> bool {
        self.images.iter().all(|s| !s.is_empty())
    }

    pub fn is_deterministic(&self) -> bool {
        self.images.iter().all(|s| s.len() <= 1)
    }

    /// Total and deterministic.
    pub fn is_map(&self) -> bool {
        self.images.iter().all(|s| s.len() == 1)
    }
}

/// `(g . f)(x) = union of g(y) over y in f(x)`.
pub fn compose_relations(f: &Multimap, g: &Multimap) -> Result<Multimap, HyperError> {
    if f.codomain() != g.domain() {
        return Err(HyperError::SizeMismatch { left: f.codomain(), right: g.domain() });
    }
    Ok(Multimap {
        codomain: g.codomain(),
        images: f.images.iter().map(|&s| g.image_of_set(s)).collect(),
    })
}

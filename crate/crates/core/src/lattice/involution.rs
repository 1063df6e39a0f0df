use super::LatticeError;

/// A self-inverse map on `{0, .., n - 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Involution {
    map: Vec<usize>,
}

impl Involution {
    pub fn new(map: Vec<usize>) -> Result<Self, LatticeError> {
        let n = map.len();
        for (x, &y) in map.iter().enumerate() {
            if y >= n {
                return Err(LatticeError::InvalidElement(y));
            }
            if map[y] != x {
                return Err(LatticeError::NotAnInvolution(format!(
                    "{x} -> {y} but {y} -> {}",
                    map[y]
                )));
            }
        }
        Ok(Involution { map })
    }

    pub fn identity(n: usize) -> Self {
        Involution { map: (0..n).collect() }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// Conjugate by a permutation: the result sends `perm[x]` to `perm[self(x)]`.
    pub fn conjugate(&self, perm: &[usize]) -> Involution {
        let mut map = vec![0; self.size()];
        for x in 0..self.size() {
            map[perm[x]] = perm[self.map[x]];
        }
        Involution { map }
    }

    /// Every involution on an `n`-element set, in lexicographic order of maps.
    pub fn all(n: usize) -> Vec<Involution> {
        fn go(map: &mut Vec<Option<usize>>, x: usize, out: &mut Vec<Involution>) {
            let n = map.len();
            if x == n {
                out.push(Involution { map: map.iter().map(|y| y.unwrap()).collect() });
                return;
            }
            if map[x].is_some() {
                return go(map, x + 1, out);
            }
            // x pairs with itself (smallest image) or with a later free y.
            for y in x..n {
                if map[y].is_none() {
                    map[x] = Some(y);
                    map[y] = Some(x);
                    go(map, x + 1, out);
                    map[x] = None;
                    map[y] = None;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut vec![None; n], 0, &mut out);
        out
    }
}

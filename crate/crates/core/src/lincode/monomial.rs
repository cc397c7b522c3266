use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use super::CodeError;
use crate::field::{Field, FieldElement};

/// A coordinate permutation combined with nonzero per-coordinate scalars.
///
/// Applied to `c`, output coordinate `i` is `scalars[i] * c[sigma[i]]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialMap {
    sigma: Vec<usize>,
    scalars: Vec<FieldElement>,
}

impl MonomialMap {
    pub fn new(sigma: Vec<usize>, scalars: Vec<FieldElement>) -> Result<Self, CodeError> {
        let n = sigma.len();
        if scalars.len() != n {
            return Err(CodeError::LengthMismatch {
                expected: n,
                actual: scalars.len(),
            });
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || std::mem::replace(&mut seen[s], true) {
                return Err(CodeError::NotAPermutation(n));
            }
        }
        if let Some(i) = scalars.iter().position(|r| r.is_zero()) {
            return Err(CodeError::ZeroScalar(i));
        }
        Ok(MonomialMap { sigma, scalars })
    }

    pub fn identity(spec: &Field, n: usize) -> Self {
        MonomialMap {
            sigma: (0..n).collect(),
            scalars: vec![spec.one(); n],
        }
    }

    pub fn random(spec: &Field, n: usize, rng: &mut impl Rng) -> Self {
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.shuffle(rng);
        let q = spec.order().expect("small field");
        let scalars = (0..n)
            .map(|_| spec.element_from_index(rng.gen_range(1..q)))
            .collect();
        MonomialMap { sigma, scalars }
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn scalars(&self) -> &[FieldElement] {
        &self.scalars
    }

    /// True when every scalar is one, i.e. a pure permutation.
    pub fn is_permutation(&self) -> bool {
        self.scalars.iter().all(|r| r.is_one())
    }

    pub fn apply(&self, word: &[FieldElement]) -> Result<Vec<FieldElement>, CodeError> {
        if word.len() != self.len() {
            return Err(CodeError::LengthMismatch {
                expected: self.len(),
                actual: word.len(),
            });
        }
        Ok(self
            .sigma
            .iter()
            .zip(&self.scalars)
            .map(|(&s, r)| r * &word[s])
            .collect())
    }

    pub fn inverse(&self) -> MonomialMap {
        let n = self.len();
        let mut sigma = vec![0; n];
        let mut scalars = self.scalars.clone();
        for (i, &s) in self.sigma.iter().enumerate() {
            sigma[s] = i;
            scalars[s] = self.scalars[i].inv().expect("scalars are nonzero");
        }
        MonomialMap { sigma, scalars }
    }
}

//! Linear codes over GF(p^m) given by generator matrices.

mod enumerate;
mod monomial;

pub use monomial::MonomialMap;

use std::collections::HashSet;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};
use enumerate::PrimeBasis;

/// Default number of nonzero codewords `min_distance` may enumerate.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("sigma is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("monomial scalar at coordinate {0} is zero")]
    ZeroScalar(usize),
    #[error("enumeration of {codewords:?} codewords exceeds the budget of {budget}")]
    BudgetExceeded {
        codewords: Option<u128>,
        budget: u128,
    },
}

/// Result of an exhaustive distance search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinDistance {
    /// Exact minimum weight; 0 is reserved for the zero code.
    Exact(usize),
    /// Enumeration would exceed the budget. `codewords` is the number of
    /// nonzero words, when it fits in a `u128`.
    Unknown { codewords: Option<u128> },
}

impl MinDistance {
    pub fn exact(self) -> Option<usize> {
        match self {
            MinDistance::Exact(d) => Some(d),
            MinDistance::Unknown { .. } => None,
        }
    }
}

/// A generator matrix: `rows` spans the code, each row has length `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    n: usize,
    rows: Vec<Vec<FieldElement>>,
    spec: Field,
}

impl std::fmt::Debug for GeneratorMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "GeneratorMatrix[n={}, {} rows]", self.n, self.rows.len())?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for GeneratorMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("GeneratorMatrix", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("rows", &self.rows)?;
        s.end()
    }
}

impl GeneratorMatrix {
    pub fn new(spec: &Field, n: usize, rows: Vec<Vec<FieldElement>>) -> Result<Self, CodeError> {
        for row in &rows {
            if row.len() != n {
                return Err(CodeError::LengthMismatch {
                    expected: n,
                    actual: row.len(),
                });
            }
            if row.iter().any(|e| e.spec() != spec) {
                return Err(FieldError::SpecMismatch.into());
            }
        }
        Ok(GeneratorMatrix {
            n,
            rows,
            spec: Arc::clone(spec),
        })
    }

    /// Rows with entries from the prime subfield.
    pub fn from_ints(spec: &Field, n: usize, rows: &[Vec<i64>]) -> Result<Self, CodeError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| spec.from_int(x)).collect())
            .collect();
        Self::new(spec, n, rows)
    }

    pub fn from_json(spec: &Field, value: &serde_json::Value) -> Result<Self, crate::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            n: usize,
            rows: Vec<Vec<Vec<u64>>>,
        }
        let raw: Raw = serde_json::from_value(value.clone())?;
        let rows = raw
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|d| spec.element(d))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(spec, raw.n, rows)?)
    }

    pub fn zero_code(spec: &Field, n: usize) -> Self {
        GeneratorMatrix {
            n,
            rows: Vec::new(),
            spec: Arc::clone(spec),
        }
    }

    pub fn full_space(spec: &Field, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { spec.one() } else { spec.zero() })
                    .collect()
            })
            .collect();
        GeneratorMatrix {
            n,
            rows,
            spec: Arc::clone(spec),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spec(&self) -> &Field {
        &self.spec
    }

    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    fn check(&self, other: &GeneratorMatrix) -> Result<(), CodeError> {
        if self.spec != other.spec {
            return Err(FieldError::SpecMismatch.into());
        }
        if self.n != other.n {
            return Err(CodeError::LengthMismatch {
                expected: self.n,
                actual: other.n,
            });
        }
        Ok(())
    }

    /// Reduced row-echelon form with zero rows dropped, plus pivot columns.
    fn echelon(&self) -> (Vec<Vec<FieldElement>>, Vec<usize>) {
        let mut m = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.n {
            if r == m.len() {
                break;
            }
            let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, piv);
            let inv = m[r][c].inv().expect("pivot is nonzero");
            for e in m[r].iter_mut() {
                *e = &*e * &inv;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (e, pe) in row.iter_mut().zip(&pivot_row) {
                    if !pe.is_zero() {
                        *e = &*e - &(&f * pe);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        (m, pivots)
    }

    /// Canonical form: reduced row-echelon, pivots ascending, no zero rows.
    pub fn rref(&self) -> GeneratorMatrix {
        GeneratorMatrix {
            n: self.n,
            rows: self.echelon().0,
            spec: Arc::clone(&self.spec),
        }
    }

    pub fn dimension(&self) -> usize {
        self.echelon().1.len()
    }

    /// Null space under the standard inner product `sum x_i y_i`.
    pub fn dual(&self) -> GeneratorMatrix {
        let (rows, pivots) = self.echelon();
        let mut is_pivot = vec![None; self.n];
        for (i, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(i);
        }
        let spec = &self.spec;
        let dual_rows = (0..self.n)
            .filter(|&f| is_pivot[f].is_none())
            .map(|f| {
                let mut v = vec![spec.zero(); self.n];
                v[f] = spec.one();
                for (i, &c) in pivots.iter().enumerate() {
                    v[c] = -&rows[i][f];
                }
                v
            })
            .collect();
        GeneratorMatrix {
            n: self.n,
            rows: dual_rows,
            spec: Arc::clone(spec),
        }
        .rref()
    }

    /// Membership test by reduction against the echelon form.
    pub fn contains(&self, word: &[FieldElement]) -> Result<bool, CodeError> {
        if word.len() != self.n {
            return Err(CodeError::LengthMismatch {
                expected: self.n,
                actual: word.len(),
            });
        }
        let (rows, pivots) = self.echelon();
        Ok(reduce(&rows, &pivots, word).iter().all(|e| e.is_zero()))
    }

    /// `self ⊆ other` as row spaces.
    pub fn is_subcode_of(&self, other: &GeneratorMatrix) -> Result<bool, CodeError> {
        self.check(other)?;
        let (rows, pivots) = other.echelon();
        Ok(self
            .rows
            .iter()
            .all(|w| reduce(&rows, &pivots, w).iter().all(|e| e.is_zero())))
    }

    /// Image of the code under a monomial map.
    pub fn apply_monomial(&self, map: &MonomialMap) -> Result<GeneratorMatrix, CodeError> {
        if map.len() != self.n {
            return Err(CodeError::LengthMismatch {
                expected: self.n,
                actual: map.len(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| map.apply(r))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GeneratorMatrix {
            n: self.n,
            rows,
            spec: Arc::clone(&self.spec),
        })
    }

    /// Number of nonzero codewords, if it fits in a `u128`.
    pub fn nonzero_codewords(&self) -> Option<u128> {
        let q = self.spec.order()?;
        q.checked_pow(self.dimension() as u32).map(|c| c - 1)
    }

    fn prime_basis(&self) -> PrimeBasis {
        PrimeBasis::new(&self.echelon().0, self.n, &self.spec.generator())
    }

    fn within_budget(&self, budget: u128) -> Result<(), CodeError> {
        match self.nonzero_codewords() {
            Some(c) if c <= budget => Ok(()),
            codewords => Err(CodeError::BudgetExceeded { codewords, budget }),
        }
    }

    /// Exact minimum distance by enumerating every nonzero codeword, or
    /// `Unknown` when that would take more than `budget` words.
    pub fn min_distance(&self, budget: u128) -> MinDistance {
        if let Err(CodeError::BudgetExceeded { codewords, .. }) = self.within_budget(budget) {
            return MinDistance::Unknown { codewords };
        }
        MinDistance::Exact(self.prime_basis().min_weight().unwrap_or(0))
    }

    /// Number of codewords of each weight `0..=n`.
    pub fn weight_distribution(&self, budget: u128) -> Result<Vec<u128>, CodeError> {
        self.within_budget(budget)?;
        Ok(self.prime_basis().weight_distribution())
    }

    /// The full codeword set, each word as a flattened digit vector.
    pub fn codeword_set(&self, budget: u128) -> Result<HashSet<Vec<u64>>, CodeError> {
        self.within_budget(budget)?;
        Ok(self.prime_basis().words().into_iter().collect())
    }
}

fn reduce(
    rows: &[Vec<FieldElement>],
    pivots: &[usize],
    word: &[FieldElement],
) -> Vec<FieldElement> {
    let mut w = word.to_vec();
    for (row, &c) in rows.iter().zip(pivots) {
        if w[c].is_zero() {
            continue;
        }
        let f = w[c].clone();
        for (e, r) in w.iter_mut().zip(row) {
            if !r.is_zero() {
                *e = &*e - &(&f * r);
            }
        }
    }
    w
}

/// Row-space equality via canonical forms.
pub fn codes_equal(a: &GeneratorMatrix, b: &GeneratorMatrix) -> Result<bool, CodeError> {
    a.check(b)?;
    Ok(a.rref().rows == b.rref().rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn gm(p: u64, n: usize, rows: &[Vec<i64>]) -> GeneratorMatrix {
        GeneratorMatrix::from_ints(&FieldSpec::prime(p).unwrap(), n, rows).unwrap()
    }

    /// Independent oracle: expand every message over GF(q)^k with field
    /// arithmetic and take the minimum nonzero weight.
    fn naive_min_distance(g: &GeneratorMatrix) -> usize {
        let spec = g.spec();
        let q = spec.order().unwrap();
        let k = g.rows().len();
        let mut best = usize::MAX;
        for idx in 0..q.pow(k as u32) {
            let mut word = vec![spec.zero(); g.n()];
            let mut rest = idx;
            for row in g.rows() {
                let c = spec.element_from_index(rest % q);
                rest /= q;
                for (w, r) in word.iter_mut().zip(row) {
                    *w = &*w + &(&c * r);
                }
            }
            let wt = word.iter().filter(|e| !e.is_zero()).count();
            if wt > 0 {
                best = best.min(wt);
            }
        }
        if best == usize::MAX {
            0
        } else {
            best
        }
    }

    #[test]
    fn rref_examples() {
        assert_eq!(
            gm(2, 2, &[vec![0, 1], vec![1, 0]]).rref(),
            gm(2, 2, &[vec![1, 0], vec![0, 1]])
        );
        assert_eq!(
            gm(2, 2, &[vec![1, 1], vec![1, 1]]).rref(),
            gm(2, 2, &[vec![1, 1]])
        );
        assert_eq!(
            gm(7, 2, &[vec![2, 4], vec![0, 0]]).rref(),
            gm(7, 2, &[vec![1, 2]])
        );
        let g = gm(
            7,
            4,
            &[vec![3, 1, 4, 1], vec![5, 2, 6, 5], vec![3, 5, 1, 0]],
        );
        assert_eq!(g.rref().rref(), g.rref());
    }

    #[test]
    fn dual_examples() {
        let full = GeneratorMatrix::full_space(&FieldSpec::prime(2).unwrap(), 2);
        assert_eq!(full.dual().rows().len(), 0);
        let rep = gm(2, 3, &[vec![1, 1, 1]]);
        assert!(codes_equal(&rep.dual(), &gm(2, 3, &[vec![1, 1, 0], vec![1, 0, 1]])).unwrap());
        let zero = GeneratorMatrix::zero_code(&FieldSpec::prime(3).unwrap(), 3);
        assert_eq!(zero.dual().dimension(), 3);
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(
            gm(2, 3, &[vec![1, 1, 1]]).min_distance(DEFAULT_BUDGET),
            MinDistance::Exact(3)
        );
        let z = GeneratorMatrix::zero_code(&FieldSpec::prime(7).unwrap(), 8);
        assert_eq!(z.min_distance(DEFAULT_BUDGET), MinDistance::Exact(0));
        let full = GeneratorMatrix::full_space(&FieldSpec::prime(7).unwrap(), 8);
        assert_eq!(
            full.min_distance(1000),
            MinDistance::Unknown {
                codewords: Some(5_764_800)
            }
        );
        assert_eq!(full.min_distance(DEFAULT_BUDGET), MinDistance::Exact(1));
    }

    #[test]
    fn min_distance_over_extension_field() {
        // [5,3] Reed-Solomon-like code over GF(4) from a Vandermonde matrix
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let w = f4.generator();
        let pts = [f4.zero(), f4.one(), w.clone(), &w + &f4.one()];
        let mut rows = Vec::new();
        for e in 0..2 {
            let mut r: Vec<_> = pts.iter().map(|x| x.pow_u64(e)).collect();
            r.push(if e == 1 { f4.one() } else { f4.zero() });
            rows.push(r);
        }
        let g = GeneratorMatrix::new(&f4, 5, rows).unwrap();
        assert_eq!(
            g.min_distance(DEFAULT_BUDGET).exact(),
            Some(naive_min_distance(&g))
        );
        assert_eq!(naive_min_distance(&g), 4);
    }

    #[test]
    fn apply_monomial_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        let g = gm(2, 3, &[vec![1, 0, 1]]);
        let id = MonomialMap::identity(&f2, 3);
        assert!(codes_equal(&g.apply_monomial(&id).unwrap(), &g).unwrap());
        let swap = MonomialMap::new(vec![1, 0, 2], vec![f2.one(); 3]).unwrap();
        assert_eq!(g.apply_monomial(&swap).unwrap(), gm(2, 3, &[vec![0, 1, 1]]));

        let f7 = FieldSpec::prime(7).unwrap();
        let scal =
            MonomialMap::new(vec![0, 1, 2], vec![f7.from_int(2), f7.one(), f7.one()]).unwrap();
        let img = gm(7, 3, &[vec![1, 1, 1]]).apply_monomial(&scal).unwrap();
        assert!(codes_equal(&img, &gm(7, 3, &[vec![2, 1, 1]])).unwrap());
        assert!(matches!(
            g.apply_monomial(&MonomialMap::identity(&f2, 4)),
            Err(CodeError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn codes_equal_examples() {
        let g = gm(7, 3, &[vec![1, 2, 3], vec![2, 4, 1]]);
        assert!(codes_equal(&g, &g.rref()).unwrap());
        assert!(!codes_equal(&gm(2, 2, &[vec![1, 0]]), &gm(2, 2, &[vec![0, 1]])).unwrap());
        assert!(codes_equal(&gm(7, 2, &[vec![1, 1]]), &gm(7, 2, &[vec![2, 2]])).unwrap());
        assert!(codes_equal(&gm(7, 2, &[vec![1, 1]]), &gm(5, 2, &[vec![1, 1]])).is_err());
        assert!(codes_equal(&gm(7, 2, &[vec![1, 1]]), &gm(7, 3, &[vec![1, 1, 1]])).is_err());
    }

    #[test]
    fn membership_and_containment() {
        let g = gm(3, 4, &[vec![1, 0, 1, 2], vec![0, 1, 1, 1]]);
        let f3 = g.spec().clone();
        let w: Vec<_> = [2, 1, 0, 2].iter().map(|&x| f3.from_int(x)).collect();
        assert!(g.contains(&w).unwrap());
        let w: Vec<_> = [2, 1, 0, 1].iter().map(|&x| f3.from_int(x)).collect();
        assert!(!g.contains(&w).unwrap());
        assert!(gm(3, 4, &[vec![1, 1, 2, 0]]).is_subcode_of(&g).unwrap());
        assert!(!g.is_subcode_of(&gm(3, 4, &[vec![1, 1, 2, 0]])).unwrap());
    }

    #[test]
    fn budget_errors() {
        let full = GeneratorMatrix::full_space(&FieldSpec::prime(2).unwrap(), 20);
        assert!(matches!(
            full.weight_distribution(1000),
            Err(CodeError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            full.codeword_set(1000),
            Err(CodeError::BudgetExceeded { .. })
        ));
    }

    fn random_matrix(rng: &mut impl Rng, spec: &Field, k: usize, n: usize) -> GeneratorMatrix {
        let q = spec.order().unwrap();
        let rows = (0..k)
            .map(|_| {
                (0..n)
                    .map(|_| spec.element_from_index(rng.gen_range(0..q)))
                    .collect()
            })
            .collect();
        GeneratorMatrix::new(spec, n, rows).unwrap()
    }

    #[test]
    fn min_distance_agrees_with_naive_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (p, m) in [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2)] {
            let spec = FieldSpec::new(p, m, None).unwrap();
            let q = spec.order().unwrap();
            for _ in 0..25 {
                let n = rng.gen_range(1..9);
                let k_max = (1..=n)
                    .take_while(|&k| q.pow(k as u32) <= 10_000)
                    .last()
                    .unwrap_or(0);
                let k = rng.gen_range(0..=k_max);
                let g = random_matrix(&mut rng, &spec, k, n).rref();
                assert_eq!(
                    g.min_distance(DEFAULT_BUDGET).exact(),
                    Some(naive_min_distance(&g)),
                    "{g:?}"
                );
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn dual_dimension_and_involution(
            p in prop::sample::select(vec![2u64, 3, 5, 7]),
            n in 1usize..9,
            k in 0usize..9,
            seed in any::<u64>(),
        ) {
            let spec = FieldSpec::prime(p).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = random_matrix(&mut rng, &spec, k.min(n), n);
            let d = g.dual();
            prop_assert_eq!(g.dimension() + d.dimension(), n);
            for r in g.rows() {
                for s in d.rows() {
                    let ip = r.iter().zip(s).fold(spec.zero(), |acc, (a, b)| &acc + &(a * b));
                    prop_assert!(ip.is_zero());
                }
            }
            prop_assert_eq!(d.dual(), g.rref());
        }

        #[test]
        fn monomial_maps_preserve_weight_distribution(
            pm in prop::sample::select(vec![(2u64, 1usize), (3, 1), (7, 1), (2, 2)]),
            n in 1usize..8,
            k in 0usize..5,
            seed in any::<u64>(),
        ) {
            let spec = FieldSpec::new(pm.0, pm.1, None).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = random_matrix(&mut rng, &spec, k.min(n), n);
            let map = MonomialMap::random(&spec, n, &mut rng);
            let img = g.apply_monomial(&map).unwrap();
            prop_assert_eq!(img.dimension(), g.dimension());
            prop_assert_eq!(
                img.weight_distribution(1 << 16).unwrap(),
                g.weight_distribution(1 << 16).unwrap()
            );
            let back = img.apply_monomial(&map.inverse()).unwrap();
            prop_assert!(codes_equal(&back, &g).unwrap());
        }
    }
}

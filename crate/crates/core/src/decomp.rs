//! Decomposition of a λ-constacyclic code of length `p^k n` (`p ∤ n`) into a
//! monomial image of the matrix-product code `[C_{p^k-1}, ..., C_0] · A`
//! whose components are nested λ0-constacyclic codes of length `n`.
//!
//! Coordinates of a length-`p^k n` word are split as `j + t*n` with
//! `0 <= j < n`, `0 <= t < p^k`.

use std::collections::{HashMap, HashSet};
use std::sync::{OnceLock, RwLock};

use serde::ser::SerializeStruct;
use serde::Serialize;
use thiserror::Error;

use crate::constacyclic::{split_length, ConstacyclicCode, ConstacyclicError, ConstacyclicFamily};
use crate::field::{Field, FieldElement, FieldError};
use crate::lincode::{codes_equal, CodeError, GeneratorMatrix, MinDistance, MonomialMap};
use crate::matprod::{
    is_nsc, matrix_product_code, DistanceBound, MatprodError, MatrixOverField, RowDistances,
};
use crate::polyring::{PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Constacyclic(#[from] ConstacyclicError),
    #[error(transparent)]
    Matprod(#[from] MatprodError),
    #[error("characteristic {p} divides n = {n}")]
    CharacteristicDividesLength { p: u64, n: usize },
    #[error(
        "length {length} is not divisible by the characteristic {p}; there is nothing to decompose"
    )]
    NotRepeatedRoot { length: usize, p: u64 },
    #[error("exponent {exponent} is outside 0..={pk}")]
    ExponentOutOfRange { exponent: u32, pk: usize },
    #[error("word is not a codeword of the source code")]
    NotInCode,
    #[error("expected {expected} component words, got {actual}")]
    ComponentCount { expected: usize, actual: usize },
    #[error("component word for C_{0} is not in C_{0}")]
    ComponentMembership(usize),
}

/// `n'` in `0..pk` with `n' n ≡ 1 (mod pk)`; 0 when `pk = 1`.
pub fn n_prime(n: usize, pk: usize) -> Option<usize> {
    if pk == 1 {
        return Some(0);
    }
    (1..pk).find(|&x| (x as u128 * n as u128) % pk as u128 == 1)
}

/// Row `i` holds the coefficients of `(v-1)^(p^k-1-i)` in ascending powers of
/// `v`, reduced mod `p`. Binomials come from Pascal's rule in GF(p).
pub fn build_a(p: u64, k: u32, spec: &Field) -> MatrixOverField {
    assert_eq!(spec.p(), p, "spec must have characteristic p");
    let pk = (p as usize).pow(k);
    let mut pascal: Vec<Vec<u64>> = Vec::with_capacity(pk);
    for r in 0..pk {
        let mut row = vec![1u64; r + 1];
        for j in 1..r {
            row[j] = (pascal[r - 1][j - 1] + pascal[r - 1][j]) % p;
        }
        pascal.push(row);
    }
    let entries = (0..pk)
        .map(|i| {
            let r = pk - 1 - i;
            (0..pk)
                .map(|j| {
                    if j > r {
                        return spec.zero();
                    }
                    let c = spec.from_int(pascal[r][j] as i64);
                    if (r - j) % 2 == 1 {
                        -c
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    MatrixOverField::new(spec, entries).expect("square and single-field")
}

/// `g_s = prod_{i_t > s} f_t` for `s = 0..pk`, indexed by `s`.
pub fn component_generators(
    spec: &Field,
    factors: &[(Polynomial, u32)],
    pk: usize,
) -> Result<Vec<Polynomial>, DecompError> {
    if let Some(&(_, e)) = factors.iter().find(|(_, e)| *e as usize > pk) {
        return Err(DecompError::ExponentOutOfRange { exponent: e, pk });
    }
    Ok((0..pk)
        .map(|s| {
            factors
                .iter()
                .filter(|(_, e)| *e as usize > s)
                .fold(Polynomial::one(spec), |acc, (f, _)| &acc * f)
        })
        .collect())
}

/// Output coordinate `j + t*n` is `λ0^e · input[σ(j + t*n)]` with
/// `e = (t - j n') mod p^k` and `σ(j + t*n) = j + n·e`.
///
/// The exponent must be reduced mod `p^k`: when the index wraps around, the
/// factor `λ = λ0^(p^k)` from `x^(p^k n) = λ` is absorbed into the scalar.
pub fn monomial_map(
    p: u64,
    k: u32,
    n: usize,
    lambda0: &FieldElement,
) -> Result<MonomialMap, DecompError> {
    if n == 0 || (n as u64).is_multiple_of(p) {
        return Err(DecompError::CharacteristicDividesLength { p, n });
    }
    let pk = (p as usize).pow(k);
    let np = n_prime(n, pk).expect("n is a unit mod p^k");
    let powers: Vec<FieldElement> =
        std::iter::successors(Some(lambda0.spec().one()), |x| Some(x * lambda0))
            .take(pk)
            .collect();
    let len = pk * n;
    let mut sigma = vec![0; len];
    let mut scalars = vec![lambda0.spec().one(); len];
    for t in 0..pk {
        for j in 0..n {
            let e = (t + pk - (np * j) % pk) % pk;
            sigma[j + t * n] = j + n * e;
            scalars[j + t * n] = powers[e].clone();
        }
    }
    Ok(MonomialMap::new(sigma, scalars)?)
}

/// A code of length `p^k n` written as a monomial image of
/// `[C_{p^k-1}, ..., C_0] · A`.
#[derive(Debug, Clone)]
pub struct DecompositionResult {
    lambda0: FieldElement,
    n_prime: usize,
    n: usize,
    k: u32,
    pk: usize,
    a: MatrixOverField,
    a_inv: MatrixOverField,
    map: MonomialMap,
    /// Largest first: `C_{p^k-1}, ..., C_0`.
    components: Vec<ConstacyclicCode>,
    exponents: Vec<u32>,
    source: Polynomial,
}

impl Serialize for DecompositionResult {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DecompositionResult", 7)?;
        s.serialize_field("lambda0", &self.lambda0)?;
        s.serialize_field("n_prime", &self.n_prime)?;
        s.serialize_field("exponents", &self.exponents)?;
        s.serialize_field("A", &self.a)?;
        s.serialize_field("sigma", self.map.sigma())?;
        s.serialize_field("scalars", self.map.scalars())?;
        s.serialize_field("components", &self.components)?;
        s.end()
    }
}

/// Decomposes `code`, factoring `x^n - λ0` with `seed`.
pub fn decompose(code: &ConstacyclicCode, seed: u64) -> Result<DecompositionResult, DecompError> {
    let p = code.spec().p();
    let (k, _, _) = split_length(code.length(), p);
    if k == 0 {
        return Err(DecompError::NotRepeatedRoot {
            length: code.length(),
            p,
        });
    }
    let family = ConstacyclicFamily::new(code.lambda(), code.length(), seed)?;
    let exponents = match code.exponents() {
        Some(e) => e.to_vec(),
        None => family.exponents_of(code.generator())?,
    };
    decompose_in(&family, &exponents)
}

/// Decomposes the family member with the given exponent vector.
pub fn decompose_in(
    family: &ConstacyclicFamily,
    exponents: &[u32],
) -> Result<DecompositionResult, DecompError> {
    let spec = family.spec();
    let p = spec.p();
    let (k, pk, n) = (family.k(), family.pk(), family.n());
    if k == 0 {
        return Err(DecompError::NotRepeatedRoot {
            length: family.length(),
            p,
        });
    }
    let source = family.generator_for(exponents)?;
    let paired: Vec<(Polynomial, u32)> = family
        .factors()
        .into_iter()
        .zip(exponents.iter().copied())
        .collect();
    let gens = component_generators(spec, &paired, pk)?;
    let lambda0 = family.lambda0().clone();
    let components = gens
        .into_iter()
        .rev()
        .map(|g| ConstacyclicCode::new(&lambda0, n, g))
        .collect::<Result<Vec<_>, _>>()?;
    let a = build_a(p, k, spec);
    let a_inv = a.inverse()?;
    Ok(DecompositionResult {
        n_prime: n_prime(n, pk).expect("p does not divide n"),
        map: monomial_map(p, k, n, &lambda0)?,
        lambda0,
        n,
        k,
        pk,
        a,
        a_inv,
        components,
        exponents: exponents.to_vec(),
        source,
    })
}

impl DecompositionResult {
    pub fn lambda0(&self) -> &FieldElement {
        &self.lambda0
    }

    pub fn n_prime(&self) -> usize {
        self.n_prime
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn pk(&self) -> usize {
        self.pk
    }

    pub fn matrix(&self) -> &MatrixOverField {
        &self.a
    }

    pub fn map(&self) -> &MonomialMap {
        &self.map
    }

    /// Components largest first, `C_{p^k-1}, ..., C_0`.
    pub fn components(&self) -> &[ConstacyclicCode] {
        &self.components
    }

    /// `C_s`.
    pub fn component(&self, s: usize) -> &ConstacyclicCode {
        &self.components[self.pk - 1 - s]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn component_matrices(&self) -> Vec<GeneratorMatrix> {
        self.components
            .iter()
            .map(|c| c.generator_matrix())
            .collect()
    }

    pub fn product_code(&self) -> GeneratorMatrix {
        matrix_product_code(&self.component_matrices(), &self.a).expect("components match A")
    }

    /// Components of a codeword, largest first (`c_{p^k-1}, ..., c_0`).
    pub fn decompose_codeword(
        &self,
        word: &[FieldElement],
    ) -> Result<Vec<Vec<FieldElement>>, DecompError> {
        let spec = self.lambda0.spec();
        let len = self.pk * self.n;
        if word.len() != len {
            return Err(CodeError::LengthMismatch {
                expected: len,
                actual: word.len(),
            }
            .into());
        }
        if !Polynomial::new(spec, word.to_vec())?
            .rem(&self.source)?
            .is_zero()
        {
            return Err(DecompError::NotInCode);
        }
        let b = self.map.apply(word)?;
        let out: Vec<Vec<FieldElement>> = (0..self.pk)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        (0..self.pk).fold(spec.zero(), |acc, t| {
                            &acc + &(&b[j + t * self.n] * self.a_inv.entry(t, i))
                        })
                    })
                    .collect()
            })
            .collect();
        for (i, (c, comp)) in out.iter().zip(&self.components).enumerate() {
            let r = Polynomial::new(spec, c.clone())?.rem(comp.generator())?;
            if !r.is_zero() {
                return Err(DecompError::ComponentMembership(self.pk - 1 - i));
            }
        }
        Ok(out)
    }

    /// Inverse of [`decompose_codeword`](Self::decompose_codeword).
    pub fn assemble(&self, parts: &[Vec<FieldElement>]) -> Result<Vec<FieldElement>, DecompError> {
        if parts.len() != self.pk {
            return Err(DecompError::ComponentCount {
                expected: self.pk,
                actual: parts.len(),
            });
        }
        let spec = self.lambda0.spec();
        let mut b = vec![spec.zero(); self.pk * self.n];
        for t in 0..self.pk {
            for j in 0..self.n {
                b[j + t * self.n] = parts.iter().enumerate().fold(spec.zero(), |acc, (i, c)| {
                    &acc + &(&c[j] * self.a.entry(i, t))
                });
            }
        }
        Ok(self.map.inverse().apply(&b)?)
    }
}

/// Largest code size for which callers should request the exhaustive
/// codeword-set comparison; the sets are held in memory.
pub const EXHAUSTIVE_CHECK_LIMIT: u128 = 1 << 16;

/// Outcome of [`verify_equivalence`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub row_space: bool,
    /// `None` when the code is larger than the budget.
    pub exhaustive: Option<bool>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.row_space && self.exhaustive != Some(false)
    }
}

/// Checks that the monomial map carries `code` onto the matrix-product code,
/// by canonical row-space comparison and, when `|code| <= budget`, by
/// mapping every codeword and comparing the sets.
pub fn verify_equivalence(
    code: &ConstacyclicCode,
    r: &DecompositionResult,
    budget: u128,
) -> EquivalenceReport {
    let g = code.generator_matrix();
    let mp = r.product_code();
    let row_space = g
        .apply_monomial(r.map())
        .and_then(|img| codes_equal(&img, &mp))
        .unwrap_or(false);
    let exhaustive = match (g.codeword_set(budget), mp.codeword_set(budget)) {
        (Ok(src), Ok(dst)) => {
            let spec = code.spec();
            let m = spec.m();
            let image: HashSet<Vec<u64>> = src
                .iter()
                .map(|w| {
                    let elems: Vec<FieldElement> = w
                        .chunks(m)
                        .map(|d| spec.element(d).expect("digits in range"))
                        .collect();
                    r.map()
                        .apply(&elems)
                        .expect("lengths match")
                        .iter()
                        .flat_map(|e| e.digits().iter().copied())
                        .collect()
                })
                .collect();
            Some(image == dst)
        }
        _ => None,
    };
    EquivalenceReport {
        row_space,
        exhaustive,
    }
}

/// Minimum distances of the component codes of one family, keyed by the
/// generator's digit key, plus the `δ_i` of its matrix. Safe to share
/// across threads; do not mix families in one cache.
#[derive(Debug, Default)]
pub struct DistanceCache {
    map: RwLock<HashMap<Vec<Vec<u64>>, MinDistance>>,
    rows: OnceLock<Result<RowDistances, MatprodError>>,
}

impl DistanceCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn distance(&self, code: &ConstacyclicCode, budget: u128) -> MinDistance {
        let key = code.generator().digit_key();
        if let Some(d) = self.map.read().expect("cache lock").get(&key) {
            return *d;
        }
        let d = code.generator_matrix().min_distance(budget);
        self.map.write().expect("cache lock").insert(key, d);
        d
    }

    pub fn row_distances(
        &self,
        a: &MatrixOverField,
        budget: u128,
    ) -> Result<&RowDistances, MatprodError> {
        self.rows
            .get_or_init(|| RowDistances::new(a, budget))
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// Minimum distance from the component distances: `min (s+1) d_s` over
/// nonzero components when `A` is NSC, exact in that case because the
/// components are nested.
pub fn distance_of(
    r: &DecompositionResult,
    cache: &DistanceCache,
    budget: u128,
) -> Result<DistanceBound, DecompError> {
    let distances = r
        .components()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            cache
                .distance(c, budget)
                .exact()
                .ok_or(MatprodError::DistanceUnknown(i))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(cache
        .row_distances(r.matrix(), budget)?
        .bound(&distances, true)?)
}

/// Whether the decomposition matrix for `(p, k)` is NSC.
pub fn decomposition_is_nsc(p: u64, k: u32, spec: &Field) -> bool {
    is_nsc(&build_a(p, k, spec)).expect("A is square")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::lincode::DEFAULT_BUDGET;

    fn ints(m: &MatrixOverField) -> Vec<Vec<u64>> {
        m.entries()
            .iter()
            .map(|r| r.iter().map(|e| e.digits()[0]).collect())
            .collect()
    }

    #[test]
    fn a_for_seven() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(
            ints(&build_a(7, 1, &f7)),
            vec![
                vec![1, 1, 1, 1, 1, 1, 1],
                vec![6, 5, 4, 3, 2, 1, 0],
                vec![1, 3, 6, 3, 1, 0, 0],
                vec![6, 3, 4, 1, 0, 0, 0],
                vec![1, 5, 1, 0, 0, 0, 0],
                vec![6, 1, 0, 0, 0, 0, 0],
                vec![1, 0, 0, 0, 0, 0, 0],
            ]
        );
    }

    #[test]
    fn a_matches_binomial_oracle() {
        // independent oracle: exact binomials as integers, then reduce
        fn binom(r: u128, j: u128) -> u128 {
            (0..j).fold(1, |acc, i| acc * (r - i) / (i + 1))
        }
        for (p, k) in [(2u64, 1u32), (2, 2), (2, 3), (3, 2), (5, 1)] {
            let spec = FieldSpec::prime(p).unwrap();
            let pk = p.pow(k) as u128;
            let a = build_a(p, k, &spec);
            for i in 0..pk {
                let r = pk - 1 - i;
                for j in 0..pk {
                    let want = if j > r {
                        0
                    } else {
                        let b = (binom(r, j) % p as u128) as u64;
                        if (r - j) % 2 == 1 {
                            (p - b) % p
                        } else {
                            b
                        }
                    };
                    assert_eq!(
                        a.entry(i as usize, j as usize).digits()[0],
                        want,
                        "p={p} k={k} ({i},{j})"
                    );
                }
            }
        }
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(ints(&build_a(2, 1, &f2)), vec![vec![1, 1], vec![1, 0]]);
        assert_eq!(
            ints(&build_a(2, 2, &f2)),
            vec![
                vec![1, 1, 1, 1],
                vec![1, 0, 1, 0],
                vec![1, 1, 0, 0],
                vec![1, 0, 0, 0]
            ]
        );
    }

    #[test]
    fn a_is_nonsingular_and_nsc_status() {
        for (p, k) in [(2u64, 1u32), (2, 2), (3, 1), (3, 2), (5, 1), (7, 1)] {
            let spec = FieldSpec::prime(p).unwrap();
            assert!(build_a(p, k, &spec).inverse().is_ok());
        }
        let f7 = FieldSpec::prime(7).unwrap();
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(decomposition_is_nsc(7, 1, &f7));
        assert!(!decomposition_is_nsc(2, 2, &f2));
    }

    #[test]
    fn n_prime_values() {
        assert_eq!(n_prime(8, 7), Some(1));
        assert_eq!(n_prime(3, 4), Some(3));
        assert_eq!(n_prime(2, 3), Some(2));
        assert_eq!(n_prime(5, 1), Some(0));
        assert_eq!(n_prime(2, 4), None);
    }

    #[test]
    fn sigma_for_length_56() {
        let f7 = FieldSpec::prime(7).unwrap();
        let map = monomial_map(7, 1, 8, &f7.from_int(6)).unwrap();
        let mut seen = [false; 56];
        for t in 0..7 {
            for j in 0..8 {
                let s = map.sigma()[j + 8 * t];
                assert_eq!(s, j + 8 * ((t + 7 * 8 - j) % 7));
                assert!(!seen[s]);
                seen[s] = true;
            }
        }
    }

    #[test]
    fn map_edge_cases() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(monomial_map(2, 2, 3, &f2.one()).unwrap().is_permutation());
        let f5 = FieldSpec::prime(5).unwrap();
        let l = f5.from_int(2);
        let m = monomial_map(5, 1, 1, &l).unwrap();
        assert_eq!(m.sigma(), &[0, 1, 2, 3, 4]);
        let want: Vec<_> = (0..5).map(|t| l.pow_u64(t)).collect();
        assert_eq!(m.scalars(), &want[..]);
        assert_eq!(
            monomial_map(5, 1, 10, &l),
            Err(DecompError::CharacteristicDividesLength { p: 5, n: 10 })
        );
    }

    fn section4() -> ConstacyclicFamily {
        let f7 = FieldSpec::prime(7).unwrap();
        ConstacyclicFamily::new(&f7.from_int(6), 56, 1).unwrap()
    }

    #[test]
    fn component_generator_rules() {
        let fam = section4();
        let spec = fam.spec();
        let fs = fam.factors();
        let paired =
            |e: [u32; 4]| -> Vec<(Polynomial, u32)> { fs.iter().cloned().zip(e).collect() };
        let all = fs.iter().fold(Polynomial::one(spec), |a, f| &a * f);
        let gens = component_generators(spec, &paired([0; 4]), 7).unwrap();
        assert!(gens.iter().all(|g| g.is_one()));
        let gens = component_generators(spec, &paired([1; 4]), 7).unwrap();
        assert_eq!(gens[0], all);
        assert!(gens[1..].iter().all(|g| g.is_one()));
        assert_eq!(
            component_generators(spec, &paired([8, 0, 0, 0]), 7),
            Err(DecompError::ExponentOutOfRange { exponent: 8, pk: 7 })
        );
    }

    #[test]
    fn section4_extremes() {
        let fam = section4();
        let f1 = Polynomial::from_ints(fam.spec(), &[6, 1, 1]);
        let t1 = fam
            .exponents_of(&f1)
            .unwrap()
            .iter()
            .position(|&e| e == 1)
            .unwrap();
        // f1 f2 f3 at 7, f4 at 6
        let labels = [[6, 1, 1], [6, 6, 1], [6, 4, 1], [6, 3, 1]];
        let mut e = vec![0u32; 4];
        for (lab, exp) in labels.iter().zip([7, 7, 7, 6]) {
            let f = Polynomial::from_ints(fam.spec(), lab);
            let t = fam.factors().iter().position(|g| *g == f).unwrap();
            e[t] = exp;
        }
        assert_eq!(t1, 0);
        let r = decompose_in(&fam, &e).unwrap();
        let cache = DistanceCache::new();
        let d = distance_of(&r, &cache, DEFAULT_BUDGET).unwrap();
        assert_eq!((d.bound, d.exact), (49, true));
        let all = fam
            .factors()
            .iter()
            .fold(Polynomial::one(fam.spec()), |a, f| &a * f);
        for s in 0..6 {
            assert_eq!(*r.component(s).generator(), all);
        }
        assert_eq!(r.component(6).dimension(), 2);

        let r = decompose_in(&fam, &[1, 1, 1, 1]).unwrap();
        assert_eq!(r.component(0).dimension(), 0);
        let dims: usize = r.components().iter().map(|c| c.dimension()).sum();
        assert_eq!(dims, 48);
        let d = distance_of(&r, &cache, DEFAULT_BUDGET).unwrap();
        assert_eq!((d.bound, d.exact), (2, true));

        let r = decompose_in(&fam, &[0, 0, 0, 0]).unwrap();
        let d = distance_of(&r, &cache, DEFAULT_BUDGET).unwrap();
        assert_eq!((d.bound, d.exact), (1, true));
        assert!(verify_equivalence(&fam.code(&[0, 0, 0, 0]).unwrap(), &r, 0).row_space);

        let r = decompose_in(&fam, &[7, 7, 7, 7]).unwrap();
        assert_eq!(
            distance_of(&r, &cache, DEFAULT_BUDGET),
            Err(DecompError::Matprod(MatprodError::ZeroCode))
        );
    }

    #[test]
    fn small_families_are_equivalent() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f3 = FieldSpec::prime(3).unwrap();
        for (lambda, len, count) in [(f2.one(), 6, 9), (f3.from_int(2), 6, 4), (f2.one(), 12, 25)] {
            let fam = ConstacyclicFamily::new(&lambda, len, 0).unwrap();
            let mut checked = 0;
            for code in fam.codes() {
                let r = decompose(&code, 0).unwrap();
                let rep = verify_equivalence(&code, &r, DEFAULT_BUDGET);
                assert_eq!(
                    rep,
                    EquivalenceReport {
                        row_space: true,
                        exhaustive: Some(true)
                    },
                    "{code:?}"
                );
                checked += 1;
            }
            assert_eq!(checked, count);
        }
    }

    #[test]
    fn decompose_rejects_simple_root_lengths() {
        let f2 = FieldSpec::prime(2).unwrap();
        let code =
            ConstacyclicCode::new(&f2.one(), 3, Polynomial::from_ints(&f2, &[1, 1])).unwrap();
        assert_eq!(
            decompose(&code, 0).unwrap_err(),
            DecompError::NotRepeatedRoot { length: 3, p: 2 }
        );
    }

    #[test]
    fn codeword_round_trip_and_errors() {
        let f2 = FieldSpec::prime(2).unwrap();
        let code =
            ConstacyclicCode::new(&f2.one(), 6, Polynomial::from_ints(&f2, &[1, 1])).unwrap();
        let r = decompose(&code, 0).unwrap();
        let row = code.generator_matrix().rows()[0].clone();
        let parts = r.decompose_codeword(&row).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(r.assemble(&parts).unwrap(), row);
        let zero = vec![f2.zero(); 6];
        assert!(r
            .decompose_codeword(&zero)
            .unwrap()
            .iter()
            .flatten()
            .all(|e| e.is_zero()));
        let mut bad = zero.clone();
        bad[0] = f2.one();
        assert_eq!(r.decompose_codeword(&bad), Err(DecompError::NotInCode));
    }

    #[test]
    fn json_shape() {
        let f2 = FieldSpec::prime(2).unwrap();
        let code =
            ConstacyclicCode::new(&f2.one(), 6, Polynomial::from_ints(&f2, &[1, 1])).unwrap();
        let v = serde_json::to_value(decompose(&code, 0).unwrap()).unwrap();
        for key in ["lambda0", "n_prime", "A", "sigma", "scalars", "components"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["n_prime"], 1);
        assert_eq!(v["sigma"].as_array().unwrap().len(), 6);
    }
}

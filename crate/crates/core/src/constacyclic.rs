//! λ-constacyclic codes of length `N`, i.e. ideals of GF(q)[x]/(x^N - λ),
//! each given by its monic generator polynomial `g | x^N - λ`.

use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};
use crate::lincode::GeneratorMatrix;
use crate::polyring::{factor_constacyclic_modulus, Factorization, PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstacyclicError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the shift constant must be nonzero")]
    ZeroLambda,
    #[error("code length must be positive")]
    ZeroLength,
    #[error("generator polynomial must be monic")]
    NotMonic,
    #[error("{g} does not divide x^{length} - {lambda}")]
    NotADivisor {
        g: Polynomial,
        length: usize,
        lambda: FieldElement,
    },
    #[error("exponent vector {0:?} does not match the factor list")]
    BadExponents(Vec<u32>),
}

/// Writes `length = p^k * n` with `gcd(p, n) = 1`; returns `(k, p^k, n)`.
pub fn split_length(length: usize, p: u64) -> (u32, usize, usize) {
    let p = p as usize;
    let (mut k, mut pk, mut n) = (0, 1, length);
    while n > 0 && n % p == 0 {
        n /= p;
        pk *= p;
        k += 1;
    }
    (k, pk, n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstacyclicCode {
    spec: Field,
    lambda: FieldElement,
    length: usize,
    g: Polynomial,
    exponents: Option<Vec<u32>>,
}

impl ConstacyclicCode {
    pub fn new(
        lambda: &FieldElement,
        length: usize,
        g: Polynomial,
    ) -> Result<Self, ConstacyclicError> {
        if lambda.is_zero() {
            return Err(ConstacyclicError::ZeroLambda);
        }
        if length == 0 {
            return Err(ConstacyclicError::ZeroLength);
        }
        if g.spec() != lambda.spec() {
            return Err(FieldError::SpecMismatch.into());
        }
        if !g.is_monic() {
            return Err(ConstacyclicError::NotMonic);
        }
        if !Polynomial::x_pow_minus(length, lambda).rem(&g)?.is_zero() {
            return Err(ConstacyclicError::NotADivisor {
                g,
                length,
                lambda: lambda.clone(),
            });
        }
        Ok(ConstacyclicCode {
            spec: Arc::clone(lambda.spec()),
            lambda: lambda.clone(),
            length,
            g,
            exponents: None,
        })
    }

    pub fn spec(&self) -> &Field {
        &self.spec
    }

    pub fn lambda(&self) -> &FieldElement {
        &self.lambda
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn generator(&self) -> &Polynomial {
        &self.g
    }

    /// Exponent vector over the family's canonical factor list, when the
    /// code came out of [`ConstacyclicFamily`].
    pub fn exponents(&self) -> Option<&[u32]> {
        self.exponents.as_deref()
    }

    pub fn dimension(&self) -> usize {
        self.length - self.g.degree().unwrap_or(0)
    }

    /// Rows `x^i g(x)` for `i < N - deg g`. None of them reaches degree `N`,
    /// so the reduction `x^N -> λ` never fires.
    pub fn generator_matrix(&self) -> GeneratorMatrix {
        let dg = self.g.degree().unwrap_or(0);
        let rows = (0..self.length - dg)
            .map(|i| {
                (0..self.length)
                    .map(|j| {
                        if j >= i {
                            self.g.coeff(j - i)
                        } else {
                            self.spec.zero()
                        }
                    })
                    .collect()
            })
            .collect();
        GeneratorMatrix::new(&self.spec, self.length, rows).expect("rows have length N")
    }
}

impl Serialize for ConstacyclicCode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ConstacyclicCode", 5)?;
        s.serialize_field("lambda", &self.lambda)?;
        s.serialize_field("n", &self.length)?;
        s.serialize_field("g", &self.g)?;
        s.serialize_field("exponents", &self.exponents)?;
        s.serialize_field("dim", &self.dimension())?;
        s.end()
    }
}

/// The λ-constacyclic shift `(c_0, ..., c_{N-1}) -> (λ c_{N-1}, c_0, ..., c_{N-2})`.
pub fn constacyclic_shift(word: &[FieldElement], lambda: &FieldElement) -> Vec<FieldElement> {
    let n = word.len();
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    out.push(lambda * &word[n - 1]);
    out.extend_from_slice(&word[..n - 1]);
    out
}

/// True iff the row space of `m` is closed under the λ-shift.
pub fn shift_closed(m: &GeneratorMatrix, lambda: &FieldElement) -> bool {
    let canonical = m.rref();
    canonical.rows().iter().all(|r| {
        canonical
            .contains(&constacyclic_shift(r, lambda))
            .expect("same length")
    })
}

/// Every λ-constacyclic code of a given length, keyed by exponent vectors
/// over the canonical factor list of `x^N - λ`.
#[derive(Debug, Clone)]
pub struct ConstacyclicFamily {
    lambda: FieldElement,
    length: usize,
    k: u32,
    pk: usize,
    n: usize,
    lambda0: FieldElement,
    base: Factorization,
}

impl ConstacyclicFamily {
    /// Factors `x^N - λ` as `(x^n - λ0)^(p^k)` with `λ0 = λ^(1/p^k)`.
    pub fn new(lambda: &FieldElement, length: usize, seed: u64) -> Result<Self, ConstacyclicError> {
        if lambda.is_zero() {
            return Err(ConstacyclicError::ZeroLambda);
        }
        if length == 0 {
            return Err(ConstacyclicError::ZeroLength);
        }
        let (k, pk, n) = split_length(length, lambda.spec().p());
        let lambda0 = lambda.pk_root(k)?;
        let base = factor_constacyclic_modulus(n, &lambda0, seed)?;
        Ok(ConstacyclicFamily {
            lambda: lambda.clone(),
            length,
            k,
            pk,
            n,
            lambda0,
            base,
        })
    }

    pub fn spec(&self) -> &Field {
        self.lambda.spec()
    }

    pub fn lambda(&self) -> &FieldElement {
        &self.lambda
    }

    pub fn lambda0(&self) -> &FieldElement {
        &self.lambda0
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn pk(&self) -> usize {
        self.pk
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Factorization of `x^n - λ0`.
    pub fn base_factorization(&self) -> &Factorization {
        &self.base
    }

    /// Factorization of `x^N - λ`.
    pub fn factorization(&self) -> Factorization {
        self.base.scaled(self.pk as u32)
    }

    pub fn factors(&self) -> Vec<Polynomial> {
        self.base.polys().cloned().collect()
    }

    /// Number of codes, `(p^k + 1)^r`.
    pub fn len(&self) -> usize {
        (self.pk + 1).pow(self.base.factors().len() as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All exponent vectors in lexicographic order.
    pub fn exponent_vectors(&self) -> Vec<Vec<u32>> {
        let r = self.base.factors().len();
        let top = self.pk as u32;
        let mut out = Vec::with_capacity(self.len());
        let mut cur = vec![0u32; r];
        loop {
            out.push(cur.clone());
            let mut i = r;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < top {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    /// `prod f_t^(j_t)`.
    pub fn generator_for(&self, exponents: &[u32]) -> Result<Polynomial, ConstacyclicError> {
        if exponents.len() != self.base.factors().len()
            || exponents.iter().any(|&j| j as usize > self.pk)
        {
            return Err(ConstacyclicError::BadExponents(exponents.to_vec()));
        }
        Ok(self
            .base
            .polys()
            .zip(exponents)
            .fold(Polynomial::one(self.spec()), |acc, (f, &j)| {
                &acc * &f.pow(j as u64)
            }))
    }

    pub fn code(&self, exponents: &[u32]) -> Result<ConstacyclicCode, ConstacyclicError> {
        let g = self.generator_for(exponents)?;
        let mut code = ConstacyclicCode::new(&self.lambda, self.length, g)?;
        code.exponents = Some(exponents.to_vec());
        Ok(code)
    }

    /// Recovers the exponent vector of a generator by repeated division.
    pub fn exponents_of(&self, g: &Polynomial) -> Result<Vec<u32>, ConstacyclicError> {
        let mut rest = g.clone();
        let mut out = Vec::new();
        for f in self.base.polys() {
            let mut e = 0;
            loop {
                let (q, r) = rest.divmod(f)?;
                if !r.is_zero() || e as usize == self.pk {
                    break;
                }
                rest = q;
                e += 1;
            }
            out.push(e);
        }
        if !rest.is_one() {
            return Err(ConstacyclicError::NotADivisor {
                g: g.clone(),
                length: self.length,
                lambda: self.lambda.clone(),
            });
        }
        Ok(out)
    }

    pub fn codes(&self) -> impl Iterator<Item = ConstacyclicCode> + '_ {
        self.exponent_vectors()
            .into_iter()
            .map(|e| self.code(&e).expect("exponents in range"))
    }
}

/// All λ-constacyclic codes of length `length`, in exponent-vector order.
pub fn enumerate_codes(
    lambda: &FieldElement,
    length: usize,
    seed: u64,
) -> Result<Vec<ConstacyclicCode>, ConstacyclicError> {
    let family = ConstacyclicFamily::new(lambda, length, seed)?;
    Ok(family.codes().collect())
}

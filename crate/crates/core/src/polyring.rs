//! Univariate polynomials over GF(p^m) and factorization of squarefree
//! polynomials (distinct-degree sieve followed by seeded equal-degree
//! splitting).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation requires a non-constant polynomial")]
    Constant,
    #[error("polynomial is not squarefree: gcd(f, f') = {witness}")]
    NotSquarefree { witness: Polynomial },
    #[error("characteristic {p} divides n = {n}")]
    CharacteristicDividesLength { p: u64, n: usize },
    #[error("factorization does not reproduce its polynomial")]
    InconsistentFactorization,
    #[error("factor {0} is not irreducible")]
    ReducibleFactor(Polynomial),
}

/// Dense polynomial, constant term first, with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<FieldElement>,
    spec: Field,
}

impl Polynomial {
    pub fn new(spec: &Field, coeffs: Vec<FieldElement>) -> Result<Self, PolyError> {
        if coeffs.iter().any(|c| c.spec() != spec) {
            return Err(FieldError::SpecMismatch.into());
        }
        Ok(Self::from_trusted(spec, coeffs))
    }

    fn from_trusted(spec: &Field, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial {
            coeffs,
            spec: Arc::clone(spec),
        }
    }

    /// Coefficients taken from the prime subfield.
    pub fn from_ints(spec: &Field, coeffs: &[i64]) -> Self {
        Self::from_trusted(spec, coeffs.iter().map(|&c| spec.from_int(c)).collect())
    }

    pub fn from_digits(spec: &Field, coeffs: &[Vec<u64>]) -> Result<Self, PolyError> {
        let coeffs = coeffs
            .iter()
            .map(|d| spec.element(d))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_trusted(spec, coeffs))
    }

    pub fn from_json(spec: &Field, value: &serde_json::Value) -> Result<Self, crate::Error> {
        let digits: Vec<Vec<u64>> = serde_json::from_value(value.clone())?;
        Ok(Self::from_digits(spec, &digits)?)
    }

    pub fn zero(spec: &Field) -> Self {
        Self::from_trusted(spec, Vec::new())
    }

    pub fn one(spec: &Field) -> Self {
        Self::constant(&spec.one())
    }

    pub fn constant(c: &FieldElement) -> Self {
        Self::from_trusted(c.spec(), vec![c.clone()])
    }

    pub fn x(spec: &Field) -> Self {
        Self::monomial(&spec.one(), 1)
    }

    /// `c * x^d`
    pub fn monomial(c: &FieldElement, d: usize) -> Self {
        let spec = c.spec();
        let mut coeffs = vec![spec.zero(); d];
        coeffs.push(c.clone());
        Self::from_trusted(spec, coeffs)
    }

    /// `x^n - c`
    pub fn x_pow_minus(n: usize, c: &FieldElement) -> Self {
        &Self::monomial(&c.spec().one(), n) - &Self::constant(c)
    }

    pub fn spec(&self) -> &Field {
        &self.spec
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.spec.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lead) => self.scale(&lead.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::from_trusted(&self.spec, self.coeffs.iter().map(|a| a * c).collect())
    }

    fn check(&self, other: &Polynomial) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec {
            Ok(())
        } else {
            Err(FieldError::SpecMismatch.into())
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Self, PolyError> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Self::from_trusted(&self.spec, coeffs))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Self, PolyError> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Ok(Self::from_trusted(&self.spec, coeffs))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Self, PolyError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.spec));
        }
        let mut out = vec![self.spec.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(Self::from_trusted(&self.spec, out))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Self, Self), PolyError> {
        self.check(divisor)?;
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let inv_lead = divisor.leading().unwrap().inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(&self.spec), self.clone()));
        }
        let mut q = vec![self.spec.zero(); r.len() - dd];
        for shift in (0..q.len()).rev() {
            let lead = &r[shift + dd];
            if lead.is_zero() {
                continue;
            }
            let c = lead * &inv_lead;
            for (i, b) in divisor.coeffs.iter().enumerate() {
                r[shift + i] = &r[shift + i] - &(&c * b);
            }
            q[shift] = c;
        }
        r.truncate(dd);
        Ok((
            Self::from_trusted(&self.spec, q),
            Self::from_trusted(&self.spec, r),
        ))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Self, PolyError> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Polynomial) -> Result<Self, PolyError> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Returns `(g, s, t)` with `g = s*self + t*other` and `g` monic.
    pub fn extended_gcd(&self, other: &Polynomial) -> Result<(Self, Self, Self), PolyError> {
        self.check(other)?;
        let spec = &self.spec;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(spec), Self::zero(spec));
        let (mut t0, mut t1) = (Self::zero(spec), Self::one(spec));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        match r0.leading() {
            None => Ok((r0, s0, t0)),
            Some(lead) => {
                let c = lead.inv()?;
                Ok((r0.scale(&c), s0.scale(&c), t0.scale(&c)))
            }
        }
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.spec.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.spec.from_int((i as u64 % self.spec.p()) as i64))
            .collect();
        Self::from_trusted(&self.spec, coeffs)
    }

    /// `x^deg * f(1/x)`: the coefficient sequence reversed.
    pub fn reciprocal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_trusted(&self.spec, coeffs)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(&self.spec);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Polynomial) -> Result<Self, PolyError> {
        let mut acc = Self::one(&self.spec).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            base = (&base * &base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// `self^q mod modulus` where `q = p^m` is the field size.
    fn frobenius_mod(&self, modulus: &Polynomial) -> Result<Self, PolyError> {
        let mut out = self.rem(modulus)?;
        for _ in 0..self.spec.m() {
            out = out.pow_mod(self.spec.p(), modulus)?;
        }
        Ok(out)
    }

    /// Flattened digit vectors, the key for canonical ordering.
    pub fn digit_key(&self) -> Vec<Vec<u64>> {
        self.coeffs.iter().map(|c| c.digits().to_vec()).collect()
    }

    /// Canonical order: by degree, then lexicographically on coefficient
    /// digits starting from the constant term.
    pub fn canonical_cmp(&self, other: &Polynomial) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.digit_key().cmp(&other.digit_key()))
    }
}

macro_rules! forward_poly_op {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$impl(rhs)
                    .expect("polynomial operands must share a FieldSpec")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_poly_op!(Add, add, try_add);
forward_poly_op!(Sub, sub, try_sub);
forward_poly_op!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_trusted(&self.spec, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coef = if self.spec.m() == 1 {
                c.to_string()
            } else {
                format!("({c})")
            };
            let term = match (i, c.is_one()) {
                (0, _) => coef,
                (1, true) => "x".to_string(),
                (1, false) => format!("{coef}x"),
                (_, true) => format!("x^{i}"),
                (_, false) => format!("{coef}x^{i}"),
            };
            terms.push(term);
        }
        write!(f, "{}", terms.join("+"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

/// Irreducibility by the distinct-degree sieve: a monic `f` of degree `d`
/// is irreducible iff `gcd(x^(q^i) - x, f) = 1` for every `i <= d/2`.
pub fn is_irreducible(f: &Polynomial) -> Result<bool, PolyError> {
    let deg = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(PolyError::Constant),
    };
    if deg == 1 {
        return Ok(true);
    }
    let f = f.monic();
    let x = Polynomial::x(f.spec());
    let mut h = x.rem(&f)?;
    for _ in 1..=deg / 2 {
        h = h.frobenius_mod(&f)?;
        if !(&h - &x).gcd(&f)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A polynomial written as `unit * prod factor^mult` with distinct monic
/// irreducible factors in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    unit: FieldElement,
    factors: Vec<(Polynomial, u32)>,
}

impl Factorization {
    /// Validates and canonicalizes a factorization of `source`.
    pub fn new(
        source: &Polynomial,
        unit: FieldElement,
        mut factors: Vec<(Polynomial, u32)>,
    ) -> Result<Self, PolyError> {
        factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        for w in factors.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(PolyError::InconsistentFactorization);
            }
        }
        for (f, mult) in &factors {
            if *mult == 0 || !f.is_monic() {
                return Err(PolyError::InconsistentFactorization);
            }
            if !is_irreducible(f)? {
                return Err(PolyError::ReducibleFactor(f.clone()));
            }
        }
        let out = Factorization { unit, factors };
        if &out.product() != source {
            return Err(PolyError::InconsistentFactorization);
        }
        Ok(out)
    }

    pub fn unit(&self) -> &FieldElement {
        &self.unit
    }

    pub fn factors(&self) -> &[(Polynomial, u32)] {
        &self.factors
    }

    pub fn polys(&self) -> impl Iterator<Item = &Polynomial> {
        self.factors.iter().map(|(f, _)| f)
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        self.factors.iter().map(|(_, e)| *e).collect()
    }

    /// Re-multiplies the factors.
    pub fn product(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::constant(&self.unit), |acc, (f, e)| {
                &acc * &f.pow(*e as u64)
            })
    }

    /// The factorization of `self^e`.
    pub fn scaled(&self, e: u32) -> Self {
        Factorization {
            unit: self.unit.pow_u64(e as u64),
            factors: self
                .factors
                .iter()
                .map(|(f, m)| (f.clone(), m * e))
                .collect(),
        }
    }
}

impl Serialize for Factorization {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            poly: &'a Polynomial,
            mult: u32,
        }
        let entries: Vec<_> = self
            .factors
            .iter()
            .map(|(poly, mult)| Entry { poly, mult: *mult })
            .collect();
        let mut s = serializer.serialize_struct("Factorization", 2)?;
        s.serialize_field("unit", &self.unit)?;
        s.serialize_field("factors", &entries)?;
        s.end()
    }
}

fn random_poly(spec: &Field, below: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    let coeffs = (0..below)
        .map(|_| {
            let digits: Vec<u64> = (0..spec.m()).map(|_| rng.gen_range(0..spec.p())).collect();
            spec.element(&digits).expect("digits in range")
        })
        .collect();
    Polynomial::from_trusted(spec, coeffs)
}

/// `a^((q^d - 1)/2) mod f` for odd `p`, or the trace `sum a^(2^i)` over
/// `i < m*d` when `p = 2`. Either splits a product of degree-`d` irreducibles
/// with probability about one half.
fn splitting_element(a: &Polynomial, d: usize, f: &Polynomial) -> Result<Polynomial, PolyError> {
    let spec = f.spec();
    let steps = spec.m() * d;
    if spec.p() == 2 {
        let mut cur = a.rem(f)?;
        let mut acc = cur.clone();
        for _ in 1..steps {
            cur = cur.pow_mod(2, f)?;
            acc = &acc + &cur;
        }
        Ok(acc)
    } else {
        // (p^steps - 1)/2 = (1 + p + ... + p^(steps-1)) * (p - 1)/2
        let mut cur = a.rem(f)?;
        let mut acc = cur.clone();
        for _ in 1..steps {
            cur = cur.pow_mod(spec.p(), f)?;
            acc = (&acc * &cur).rem(f)?;
        }
        let half = acc.pow_mod((spec.p() - 1) / 2, f)?;
        Ok(&half - &Polynomial::one(spec))
    }
}

fn equal_degree_split(
    f: Polynomial,
    d: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Polynomial>,
) -> Result<(), PolyError> {
    let mut stack = vec![f];
    while let Some(f) = stack.pop() {
        let deg = f.degree().unwrap_or(0);
        if deg == d {
            out.push(f);
            continue;
        }
        loop {
            let a = random_poly(f.spec(), deg, rng);
            if a.degree().is_none_or(|da| da == 0) {
                continue;
            }
            let g = splitting_element(&a, d, &f)?.gcd(&f)?;
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < deg {
                let (q, _) = f.divmod(&g)?;
                stack.push(g);
                stack.push(q.monic());
                break;
            }
        }
    }
    Ok(())
}

/// Complete factorization of a squarefree polynomial. The pseudorandom
/// choices of the equal-degree stage are driven by `seed`; the canonical
/// output does not depend on it.
pub fn factor_squarefree(f: &Polynomial, seed: u64) -> Result<Factorization, PolyError> {
    match f.degree() {
        Some(d) if d >= 1 => {}
        _ => return Err(PolyError::Constant),
    }
    let witness = f.gcd(&f.derivative())?;
    if !witness.is_one() {
        return Err(PolyError::NotSquarefree { witness });
    }
    let spec = f.spec();
    let unit = f.leading().unwrap().clone();
    let mut rest = f.monic();
    let x = Polynomial::x(spec);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut irreducibles = Vec::new();

    let mut h = x.rem(&rest)?;
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        d += 1;
        if deg < 2 * d {
            irreducibles.push(rest.clone());
            break;
        }
        h = h.frobenius_mod(&rest)?;
        let g = (&h - &x).gcd(&rest)?;
        if !g.is_one() {
            rest = rest.divmod(&g)?.0;
            h = h.rem(&rest)?;
            equal_degree_split(g, d, &mut rng, &mut irreducibles)?;
        }
    }
    let factors = irreducibles.into_iter().map(|g| (g, 1)).collect();
    Factorization::new(f, unit, factors)
}

/// Factors `x^n - lambda0` for `gcd(p, n) = 1`. The factorization of
/// `x^(p^k n) - lambda0^(p^k)` is `.scaled(p^k)` of the result.
pub fn factor_constacyclic_modulus(
    n: usize,
    lambda0: &FieldElement,
    seed: u64,
) -> Result<Factorization, PolyError> {
    let p = lambda0.spec().p();
    if n == 0 || (n as u64).is_multiple_of(p) {
        return Err(PolyError::CharacteristicDividesLength { p, n });
    }
    if lambda0.is_zero() {
        return Err(FieldError::ZeroInverse.into());
    }
    factor_squarefree(&Polynomial::x_pow_minus(n, lambda0), seed)
}

//! Arithmetic in GF(p) and GF(p^m).
//!
//! An extension field is represented as GF(p)[w] / (f(w)) for a monic
//! irreducible `f` of degree `m`. Elements store their `m` residue digits
//! constant term first, together with a shared handle to their [`FieldSpec`].
//! Operations between elements of different fields are hard errors: the
//! fallible methods (`try_add`, ...) return [`FieldError::SpecMismatch`] and
//! the operator overloads panic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Shared handle to a field description.
pub type Field = Arc<FieldSpec>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must have degree {expected}, got {actual}")]
    ModulusDegree { expected: usize, actual: usize },
    #[error("modulus must be monic")]
    ModulusNotMonic,
    #[error("modulus is reducible over GF({0})")]
    ModulusReducible(u64),
    #[error("digit {digit} is out of range for GF({p})")]
    DigitOutOfRange { digit: u64, p: u64 },
    #[error("expected {expected} digits, got {actual}")]
    DigitCount { expected: usize, actual: usize },
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// Description of GF(p^m): characteristic, degree and the defining modulus.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FieldSpec {
    p: u64,
    m: usize,
    modulus: Vec<u64>,
}

#[derive(Deserialize)]
struct RawFieldSpec {
    p: u64,
    m: usize,
    modulus: Option<Vec<u64>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.m, self.modulus)
    }
}

impl FieldSpec {
    /// Builds GF(p^m). Without an explicit modulus the canonical one is used:
    /// the lexicographically smallest monic irreducible of degree `m`
    /// (coefficients compared constant term first), or `x` when `m == 1`.
    pub fn new(p: u64, m: usize, modulus: Option<Vec<u64>>) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let modulus = match modulus {
            Some(mut f) => {
                while f.len() > 1 && f.last() == Some(&0) {
                    f.pop();
                }
                if let Some(&d) = f.iter().find(|&&d| d >= p) {
                    return Err(FieldError::DigitOutOfRange { digit: d, p });
                }
                if f.len() != m + 1 {
                    return Err(FieldError::ModulusDegree {
                        expected: m,
                        actual: f.len().saturating_sub(1),
                    });
                }
                if f[m] != 1 {
                    return Err(FieldError::ModulusNotMonic);
                }
                if !fp::is_irreducible(&f, p) {
                    return Err(FieldError::ModulusReducible(p));
                }
                f
            }
            None => canonical_modulus(p, m),
        };
        Ok(Arc::new(FieldSpec { p, m, modulus }))
    }

    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        Self::new(p, 1, None)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Field, crate::Error> {
        let raw: RawFieldSpec = serde_json::from_value(value.clone())?;
        Ok(Self::new(raw.p, raw.m, raw.modulus)?)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Number of field elements, if it fits in a `u128`.
    pub fn order(&self) -> Option<u128> {
        (self.p as u128).checked_pow(self.m as u32)
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            digits: vec![0; self.m],
            spec: Arc::clone(self),
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_int(1)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(self: &Arc<Self>, value: i64) -> FieldElement {
        let mut digits = vec![0; self.m];
        digits[0] = (value as i128).rem_euclid(self.p as i128) as u64;
        FieldElement {
            digits,
            spec: Arc::clone(self),
        }
    }

    /// The class of the indeterminate `w` (a generator of the extension
    /// over GF(p) when `m > 1`).
    pub fn generator(self: &Arc<Self>) -> FieldElement {
        if self.m == 1 {
            // GF(p) over itself is generated by 1
            return self.one();
        }
        let mut digits = vec![0; self.m];
        digits[1] = 1;
        FieldElement {
            digits,
            spec: Arc::clone(self),
        }
    }

    pub fn element(self: &Arc<Self>, digits: &[u64]) -> Result<FieldElement, FieldError> {
        if digits.len() != self.m {
            return Err(FieldError::DigitCount {
                expected: self.m,
                actual: digits.len(),
            });
        }
        if let Some(&d) = digits.iter().find(|&&d| d >= self.p) {
            return Err(FieldError::DigitOutOfRange {
                digit: d,
                p: self.p,
            });
        }
        Ok(FieldElement {
            digits: digits.to_vec(),
            spec: Arc::clone(self),
        })
    }

    /// Element with index `idx` in the ordering `sum digit_i * p^i`.
    pub fn element_from_index(self: &Arc<Self>, mut idx: u128) -> FieldElement {
        let mut digits = vec![0; self.m];
        for d in digits.iter_mut() {
            *d = (idx % self.p as u128) as u64;
            idx /= self.p as u128;
        }
        FieldElement {
            digits,
            spec: Arc::clone(self),
        }
    }

    /// Enumerates every element (only sensible for small fields).
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        let q = self.order().expect("field too large to enumerate");
        (0..q).map(move |i| self.element_from_index(i))
    }

    pub fn element_from_json(
        self: &Arc<Self>,
        value: &serde_json::Value,
    ) -> Result<FieldElement, crate::Error> {
        let digits: Vec<u64> = serde_json::from_value(value.clone())?;
        Ok(self.element(&digits)?)
    }
}

/// An element of GF(p^m) in canonical digit form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    digits: Vec<u64>,
    spec: Field,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.spec.m == 1 {
            return write!(f, "{}", self.digits[0]);
        }
        let mut terms = Vec::new();
        for (i, &d) in self.digits.iter().enumerate().rev() {
            if d == 0 {
                continue;
            }
            let term = match (i, d) {
                (0, _) => d.to_string(),
                (1, 1) => "w".to_string(),
                (1, _) => format!("{d}w"),
                (_, 1) => format!("w^{i}"),
                _ => format!("{d}w^{i}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.digits.serialize(serializer)
    }
}

impl FieldElement {
    pub fn spec(&self) -> &Field {
        &self.spec
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    pub fn is_one(&self) -> bool {
        self.digits[0] == 1 && self.digits[1..].iter().all(|&d| d == 0)
    }

    /// Index of the element in `sum digit_i * p^i` order, if it fits.
    pub fn index(&self) -> u128 {
        self.digits
            .iter()
            .rev()
            .fold(0u128, |acc, &d| acc * self.spec.p as u128 + d as u128)
    }

    fn same_field(&self, other: &FieldElement) -> Result<(), FieldError> {
        if Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec {
            Ok(())
        } else {
            Err(FieldError::SpecMismatch)
        }
    }

    fn with_digits(&self, digits: Vec<u64>) -> FieldElement {
        FieldElement {
            digits,
            spec: Arc::clone(&self.spec),
        }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        let p = self.spec.p;
        let digits = self
            .digits
            .iter()
            .zip(&other.digits)
            .map(|(&a, &b)| fp::add(a, b, p))
            .collect();
        Ok(self.with_digits(digits))
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        let p = self.spec.p;
        let digits = self
            .digits
            .iter()
            .zip(&other.digits)
            .map(|(&a, &b)| fp::sub(a, b, p))
            .collect();
        Ok(self.with_digits(digits))
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        let p = self.spec.p;
        if self.spec.m == 1 {
            return Ok(self.with_digits(vec![fp::mul(self.digits[0], other.digits[0], p)]));
        }
        let prod = fp::poly_mul(&self.digits, &other.digits, p);
        let mut rem = fp::poly_rem_monic(prod, &self.spec.modulus, p);
        rem.resize(self.spec.m, 0);
        Ok(self.with_digits(rem))
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let p = self.spec.p;
        if self.spec.m == 1 {
            return Ok(self.with_digits(vec![fp::inv(self.digits[0], p)]));
        }
        let mut digits = fp::poly_inv_mod(&self.digits, &self.spec.modulus, p);
        digits.resize(self.spec.m, 0);
        Ok(self.with_digits(digits))
    }

    pub fn pow_u64(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.spec.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self^e`; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<FieldElement, FieldError> {
        if e >= 0 {
            Ok(self.pow_u64(e as u64))
        } else {
            Ok(self.inv()?.pow_u64(e.unsigned_abs()))
        }
    }

    /// The Frobenius image `self^p`.
    pub fn frobenius(&self) -> FieldElement {
        self.pow_u64(self.spec.p)
    }

    /// The unique `r` with `r^(p^k) == self`.
    ///
    /// `x -> x^(p^k)` is a bijection of GF(p^m) and `x -> x^(p^m)` is the
    /// identity, so the inverse map is `x -> x^(p^j)` with `j = -k mod m`.
    pub fn pk_root(&self, k: u32) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let m = self.spec.m as u64;
        let j = (m - (k as u64 % m)) % m;
        let mut r = self.clone();
        for _ in 0..j {
            r = r.frobenius();
        }
        Ok(r)
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$impl(rhs)
                    .expect("field operands must share a FieldSpec")
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.spec.p;
        self.with_digits(self.digits.iter().map(|&d| fp::sub(0, d, p)).collect())
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// Deterministic Miller-Rabin; the fixed base set is exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = fp::pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = fp::mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn canonical_modulus(p: u64, m: usize) -> Vec<u64> {
    if m == 1 {
        return vec![0, 1];
    }
    // Constant-first lexicographic order: digit 0 is the most significant.
    let mut coeffs = vec![0u64; m];
    loop {
        if coeffs[0] != 0 {
            let mut f = coeffs.clone();
            f.push(1);
            if fp::is_irreducible(&f, p) {
                return f;
            }
        }
        let mut i = m;
        loop {
            // an irreducible of every degree exists, so this never runs off the front
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
        }
    }
}

/// Dense polynomial helpers over GF(p) on raw residues, constant term first.
pub(crate) mod fp {
    pub fn add(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 + b as u128) % p as u128) as u64
    }

    pub fn sub(a: u64, b: u64, p: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            ((a as u128 + p as u128) - b as u128) as u64
        }
    }

    pub fn mul(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, a, p);
            }
            a = mul(a, a, p);
            e >>= 1;
        }
        acc
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        let (mut r0, mut r1) = (p as i128, a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        t0.rem_euclid(p as i128) as u64
    }

    fn trim(mut f: Vec<u64>) -> Vec<u64> {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    pub fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = add(out[i + j], mul(x, y, p), p);
            }
        }
        trim(out)
    }

    /// Remainder modulo a monic polynomial.
    pub fn poly_rem_monic(a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a);
        let df = f.len() - 1;
        while a.len() > df {
            let lead = *a.last().unwrap();
            let shift = a.len() - 1 - df;
            for (i, &c) in f.iter().enumerate() {
                a[shift + i] = sub(a[shift + i], mul(lead, c, p), p);
            }
            a = trim(a);
        }
        a
    }

    fn poly_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let b = trim(b.to_vec());
        let inv_lead = inv(*b.last().unwrap(), p);
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![0u64; r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let coef = mul(*r.last().unwrap(), inv_lead, p);
            let shift = r.len() - b.len();
            q[shift] = coef;
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = sub(r[shift + i], mul(coef, c, p), p);
            }
            r = trim(r);
        }
        (trim(q), r)
    }

    fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
            .collect();
        trim(out)
    }

    pub fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let (_, r) = poly_divmod(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Inverse of `a` modulo the irreducible `f`.
    pub fn poly_inv_mod(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let (mut r0, mut r1) = (f.to_vec(), trim(a.to_vec()));
        let (mut t0, mut t1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1, p);
            let t2 = poly_sub(&t0, &poly_mul(&q, &t1, p), p);
            (r0, r1) = (r1, r);
            (t0, t1) = (t1, t2);
        }
        // r0 is a nonzero constant
        let c = inv(r0[0], p);
        let t: Vec<u64> = t0.iter().map(|&x| mul(x, c, p)).collect();
        poly_rem_monic(t, f, p)
    }

    fn powmod_x_p(g: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        // g^p mod f by square and multiply
        let mut acc = vec![1u64];
        let mut base = g.to_vec();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_rem_monic(poly_mul(&acc, &base, p), f, p);
            }
            base = poly_rem_monic(poly_mul(&base, &base, p), f, p);
            e >>= 1;
        }
        acc
    }

    fn prime_factors(mut m: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                out.push(d);
                while m.is_multiple_of(d) {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            out.push(m);
        }
        out
    }

    /// Rabin's test for a monic `f` over GF(p).
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let deg = f.len() - 1;
        if deg == 1 {
            return true;
        }
        let x = vec![0u64, 1];
        // powers[i] = x^(p^i) mod f
        let mut powers = vec![poly_rem_monic(x.clone(), f, p)];
        for i in 0..deg {
            let next = powmod_x_p(&powers[i], f, p);
            powers.push(next);
        }
        if poly_sub(&powers[deg], &poly_rem_monic(x.clone(), f, p), p) != Vec::<u64>::new() {
            return false;
        }
        prime_factors(deg).into_iter().all(|r| {
            let h = poly_sub(&powers[deg / r], &x, p);
            poly_gcd(&h, f, p).len() == 1
        })
    }
}

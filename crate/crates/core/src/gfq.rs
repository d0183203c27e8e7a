//! Exact arithmetic in GF(q), q = p^u.
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{u-1} p^{u-1}` where
//! `c_i` is the coefficient of `x^i` in the polynomial basis. For prime fields
//! this is the usual residue. Integer order on the encoding is the canonical
//! element order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest extension field for which full addition/multiplication tables are built.
pub const MAX_EXTENSION_ORDER: u32 = 1024;
/// Prime fields use direct residue arithmetic; products must fit in `u32`.
pub const MAX_PRIME: u32 = 65_521;

/// Built-in irreducible moduli (low-degree coefficient first).
const BUILTIN_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (5, 2, &[2, 0, 1]),
    (3, 3, &[1, 2, 0, 1]),
];

/// Field description as it appears in configuration files:
/// `{"p": 3, "u": 1}` or `{"p": 2, "u": 2, "modulus": [1, 1, 1]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    #[serde(default = "one")]
    pub u: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

impl FieldSpec {
    pub fn build(&self) -> Result<FqField> {
        FqField::new(self.p, self.u, self.modulus.as_deref())
    }
}

#[derive(Clone)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

/// Arithmetic context for GF(p^u). Immutable once built.
#[derive(Clone)]
pub struct FqField {
    p: u32,
    u: u32,
    q: u32,
    modulus: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    tables: Option<Tables>,
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.u == other.u && self.modulus == other.modulus
    }
}

impl Eq for FqField {}

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.u == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{}; {:?})", self.p, self.u, self.modulus)
        }
    }
}

impl fmt::Display for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over GF(p), low-degree first, no trailing zeros.
fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod_prime(a: u32, p: u32) -> u32 {
    // a^(p-2) mod p
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod_prime(*b.last().expect("nonzero divisor"), p);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bc) in b.iter().enumerate() {
            let sub = (factor as u64 * bc as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    poly_rem(&out, modulus, p)
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut f = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                f.push((c % p as u64) as u32);
                c /= p as u64;
            }
            f.push(1);
            if poly_rem(modulus, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FqField {
    /// Builds GF(p^u). For `u > 1` a modulus may be supplied; otherwise one is
    /// taken from the built-in table (q in {4, 8, 9, 16, 25, 27}).
    pub fn new(p: u32, u: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if u == 0 {
            return Err(Error::InvalidModulus {
                modulus: modulus.map(<[u32]>::to_vec).unwrap_or_default(),
                degree: 0,
            });
        }
        if u == 1 {
            if p > MAX_PRIME {
                return Err(Error::FieldTooLarge(p as u64));
            }
            let inv = (0..p)
                .map(|a| if a == 0 { 0 } else { inv_mod_prime(a, p) })
                .collect();
            let neg = (0..p).map(|a| (p - a) % p).collect();
            return Ok(Self {
                p,
                u,
                q: p,
                modulus: vec![0, 1],
                neg,
                inv,
                tables: None,
            });
        }

        let q64 = (p as u64).checked_pow(u).unwrap_or(u64::MAX);
        if q64 > MAX_EXTENSION_ORDER as u64 {
            return Err(Error::FieldTooLarge(q64));
        }
        let q = q64 as u32;
        let modulus = match modulus {
            Some(m) => m.to_vec(),
            None => BUILTIN_MODULI
                .iter()
                .find(|(bp, bu, _)| *bp == p && *bu == u)
                .map(|(_, _, m)| m.to_vec())
                .ok_or(Error::UnsupportedExtension { p, u })?,
        };
        let trimmed = trim(modulus.clone());
        if trimmed.len() != u as usize + 1 || trimmed.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus { modulus, degree: u });
        }
        let lead_inv = inv_mod_prime(*trimmed.last().unwrap(), p);
        let monic: Vec<u32> = trimmed
            .iter()
            .map(|&c| (c as u64 * lead_inv as u64 % p as u64) as u32)
            .collect();
        if !is_irreducible(&monic, p) {
            return Err(Error::ReducibleModulus(modulus, p));
        }

        let mut field = Self {
            p,
            u,
            q,
            modulus: monic,
            neg: Vec::new(),
            inv: Vec::new(),
            tables: None,
        };
        let qs = q as usize;
        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        let coeffs: Vec<Vec<u32>> = (0..q).map(|a| field.coefficients(a)).collect();
        for a in 0..qs {
            for b in 0..qs {
                let sum: Vec<u32> = coeffs[a]
                    .iter()
                    .zip(&coeffs[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * qs + b] = field.encode(&sum);
                let prod = poly_mul_mod(
                    &trim(coeffs[a].clone()),
                    &trim(coeffs[b].clone()),
                    &field.modulus,
                    p,
                );
                mul[a * qs + b] = field.encode(&prod);
            }
        }
        let neg = (0..qs)
            .map(|a| (0..q).find(|&b| add[a * qs + b as usize] == 0).unwrap())
            .collect();
        let inv = (0..qs)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[a * qs + b as usize] == 1).unwrap()
                }
            })
            .collect();
        field.neg = neg;
        field.inv = inv;
        field.tables = Some(Tables { add, mul });
        Ok(field)
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// Field of order `q`, using the built-in modulus when `q` is a proper prime power.
    pub fn of_order(q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::NonPrimeCharacteristic(q));
        }
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
        let mut u = 0;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            u += 1;
        }
        if rest != 1 {
            return Err(Error::NonPrimeCharacteristic(q));
        }
        Self::new(p, u, None)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.u
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Monic modulus, low-degree first (`[0, 1]` for prime fields).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p,
            u: self.u,
            modulus: (self.u > 1).then(|| self.modulus.clone()),
        }
    }

    /// Coefficient vector of length `u` (low-degree first).
    pub fn coefficients(&self, a: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.u as usize);
        let mut rest = a;
        for _ in 0..self.u {
            out.push(rest % self.p);
            rest /= self.p;
        }
        out
    }

    /// Inverse of [`coefficients`](Self::coefficients); missing high coefficients are zero.
    pub fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * self.p + c % self.p)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            None => {
                let s = a + b;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            }
            Some(t) => t.add[(a * self.q + b) as usize],
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            None => a * b % self.p,
            Some(t) => t.mul[(a * self.q + b) as usize],
        }
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: u32) -> Option<u32> {
        if a == 0 || a >= self.q {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Smallest generator of the multiplicative group in canonical order.
    pub fn primitive_element(&self) -> u32 {
        (1..self.q)
            .find(|&a| self.multiplicative_order(a) == Some(self.q - 1))
            .expect("finite fields have cyclic multiplicative groups")
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement<'_>> {
        (0..self.q).map(move |value| FieldElement { field: self, value })
    }

    pub fn element(&self, value: u32) -> Result<FieldElement<'_>> {
        if value >= self.q {
            return Err(Error::NotAnElement(value));
        }
        Ok(FieldElement { field: self, value })
    }

    pub fn zero(&self) -> FieldElement<'_> {
        FieldElement {
            field: self,
            value: 0,
        }
    }

    pub fn one(&self) -> FieldElement<'_> {
        FieldElement {
            field: self,
            value: 1,
        }
    }
}

/// A field element bound to its field. Binary operations check that both
/// operands come from the same field.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f FqField,
    value: u32,
}

impl<'f> FieldElement<'f> {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &'f FqField {
        self.field
    }

    pub fn coefficients(&self) -> Vec<u32> {
        self.field.coefficients(self.value)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.field, other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn with(&self, value: u32) -> Self {
        Self {
            field: self.field,
            value,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<Self> {
        self.field
            .inv(self.value)
            .map(|v| self.with(v))
            .ok_or(Error::DivisionByZero)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.check(other).is_ok()
    }
}

impl Eq for FieldElement<'_> {}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.u == 1 {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{:?}", self.coefficients())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = FqField::prime(3).unwrap();
        assert_eq!(f.order(), 3);
        let vals: Vec<u32> = f.elements().map(|e| e.value()).collect();
        assert_eq!(vals, vec![0, 1, 2]);
        let two = f.element(2).unwrap();
        assert_eq!(two.mul(&two).unwrap().value(), 1);
    }

    #[test]
    fn composite_characteristic_rejected() {
        assert_eq!(
            FqField::new(4, 1, None).unwrap_err(),
            Error::NonPrimeCharacteristic(4)
        );
    }

    #[test]
    fn gf4_x_squared() {
        let f = FqField::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let x = f.element(f.encode(&[0, 1])).unwrap();
        let x2 = x.mul(&x).unwrap();
        assert_eq!(x2.coefficients(), vec![1, 1]);
    }

    #[test]
    fn gf5_inverse_of_two() {
        let f = FqField::prime(5).unwrap();
        assert_eq!(f.element(2).unwrap().inv().unwrap().value(), 3);
        assert_eq!(f.zero().inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(matches!(
            FqField::new(2, 2, Some(&[1, 0, 1])),
            Err(Error::ReducibleModulus(..))
        ));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no roots but is reducible
        assert!(matches!(
            FqField::new(2, 4, Some(&[1, 0, 1, 0, 1])),
            Err(Error::ReducibleModulus(..))
        ));
    }

    #[test]
    fn missing_builtin_modulus() {
        assert_eq!(
            FqField::new(7, 2, None).unwrap_err(),
            Error::UnsupportedExtension { p: 7, u: 2 }
        );
        assert!(FqField::new(7, 2, Some(&[1, 0, 1])).is_ok());
    }

    #[test]
    fn mixed_fields_rejected() {
        let f3 = FqField::prime(3).unwrap();
        let f5 = FqField::prime(5).unwrap();
        let a = f3.one();
        let b = f5.one();
        assert_eq!(a.add(&b).unwrap_err(), Error::MixedFields);
    }

    #[test]
    fn builtin_moduli_are_valid() {
        for q in [4, 8, 9, 16, 25, 27] {
            let f = FqField::of_order(q).unwrap();
            assert_eq!(f.order(), q);
        }
    }
}

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{GaussInt, HalfLaurent};
use crate::error::{Error, Result};

/// A formal product `i^unit · v^(shift2/2) · Π_k (q^k − 1)^e_k` with `q = v^4`.
///
/// Every quantum integer, factorial, multinomial, unknot, theta and framing
/// value is of this shape, which lets quotients cancel symbolically before
/// anything is expanded. `[k] = v^{-2(k-1)} (q^k − 1)/(q − 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QProduct {
    zero: bool,
    unit: u8,
    shift2: i64,
    factors: BTreeMap<u32, i32>,
}

impl QProduct {
    pub fn one() -> Self {
        Self {
            zero: false,
            unit: 0,
            shift2: 0,
            factors: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        Self {
            zero: true,
            ..Self::one()
        }
    }

    /// `i^unit · v^(shift2/2)`.
    pub fn monomial(unit: i64, shift2: i64) -> Self {
        Self {
            unit: unit.rem_euclid(4) as u8,
            shift2,
            ..Self::one()
        }
    }

    pub fn sign(negative: bool) -> Self {
        Self::monomial(if negative { 2 } else { 0 }, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn unit(&self) -> u8 {
        self.unit
    }

    pub fn shift2(&self) -> i64 {
        self.shift2
    }

    pub fn factors(&self) -> impl Iterator<Item = (u32, i32)> + '_ {
        self.factors.iter().map(|(k, e)| (*k, *e))
    }

    /// `[k]`, with `[0] = 0` and `[-k] = -[k]`.
    pub fn qint(k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        let m = k.unsigned_abs() as u32;
        let mut out = Self::monomial(if k < 0 { 2 } else { 0 }, -4 * (m as i64 - 1));
        out.push(m, 1);
        out.push(1, -1);
        out
    }

    /// `[k]!`, zero for negative `k`.
    pub fn qfact(k: i64) -> Self {
        if k < 0 {
            return Self::zero();
        }
        let mut out = Self::monomial(0, -2 * k * (k - 1));
        for j in 2..=k as u32 {
            out.push(j, 1);
            out.push(1, -1);
        }
        out
    }

    /// `[Σ parts]! / Π [part]!`, zero if any part is negative.
    pub fn multinomial(parts: &[i64]) -> Self {
        if parts.iter().any(|&p| p < 0) {
            return Self::zero();
        }
        let total: i64 = parts.iter().sum();
        let mut out = Self::qfact(total);
        for &p in parts {
            out = out.div(&Self::qfact(p));
        }
        out
    }

    pub fn binomial(n: i64, k: i64) -> Self {
        Self::multinomial(&[k, n - k])
    }

    fn push(&mut self, k: u32, e: i32) {
        let slot = self.factors.entry(k).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&k);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.zero || other.zero {
            return Self::zero();
        }
        let mut out = self.clone();
        out.unit = (self.unit + other.unit) % 4;
        out.shift2 += other.shift2;
        for (&k, &e) in &other.factors {
            out.push(k, e);
        }
        out
    }

    /// Formal quotient. Dividing by zero is a logic error.
    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.zero, "formal division by a vanishing product");
        self.mul(&other.inverse())
    }

    fn inverse(&self) -> Self {
        Self {
            zero: false,
            unit: (4 - self.unit) % 4,
            shift2: -self.shift2,
            factors: self.factors.iter().map(|(k, e)| (*k, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i32) -> Self {
        if self.zero {
            return if n == 0 { Self::one() } else { Self::zero() };
        }
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let n = n.unsigned_abs();
        Self {
            zero: false,
            unit: ((base.unit as u32 * n) % 4) as u8,
            shift2: base.shift2 * n as i64,
            factors: base
                .factors
                .iter()
                .map(|(k, e)| (*k, e * n as i32))
                .collect(),
        }
    }

    /// Top doubled exponent of the expansion in descending powers of `v`.
    /// Exact, since every factor has leading coefficient one.
    pub fn top2(&self) -> i64 {
        self.shift2
            + 8 * self
                .factors
                .iter()
                .map(|(k, e)| *k as i64 * *e as i64)
                .sum::<i64>()
    }

    /// Bottom doubled exponent of the expansion in ascending powers of `v`.
    pub fn bottom2(&self) -> i64 {
        self.shift2
    }

    /// True if no factor appears with a negative exponent.
    pub fn is_polynomial_form(&self) -> bool {
        self.factors.values().all(|&e| e >= 0)
    }

    /// Expands to a Laurent polynomial. Fails with `NonExactDivision` if
    /// the product is a proper rational function.
    pub fn expand(&self) -> Result<HalfLaurent> {
        if self.zero {
            return Ok(HalfLaurent::zero());
        }
        // Dense polynomial in q, ascending.
        let mut poly: Vec<BigInt> = vec![BigInt::one()];
        for (&k, &e) in self.factors.iter().filter(|(_, e)| **e > 0) {
            for _ in 0..e {
                poly = mul_qk_minus_one(&poly, k as usize);
            }
        }
        for (&k, &e) in self.factors.iter().filter(|(_, e)| **e < 0) {
            for _ in 0..-e {
                poly = div_qk_minus_one(&poly, k as usize).ok_or(Error::NonExactDivision)?;
            }
        }
        let unit = GaussInt::i_pow(self.unit as i64);
        Ok(HalfLaurent::from_terms(poly.into_iter().enumerate().map(
            |(j, c)| (self.shift2 + 8 * j as i64, &GaussInt::real(c) * &unit),
        )))
    }
}

fn mul_qk_minus_one(p: &[BigInt], k: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + k];
    for (j, c) in p.iter().enumerate() {
        out[j + k] += c;
        out[j] -= c;
    }
    out
}

/// Exact quotient by `q^k − 1`, or `None` if there is a remainder.
fn div_qk_minus_one(p: &[BigInt], k: usize) -> Option<Vec<BigInt>> {
    if p.iter().all(Zero::is_zero) {
        return Some(vec![BigInt::zero()]);
    }
    if p.len() <= k {
        return None;
    }
    let qlen = p.len() - k;
    let mut q = vec![BigInt::zero(); qlen];
    // p_j = q_{j-k} - q_j, solved from the top down.
    for j in (k..p.len()).rev() {
        let above = if j < qlen {
            q[j].clone()
        } else {
            BigInt::zero()
        };
        q[j - k] = &p[j] + above;
    }
    for j in 0..k {
        let qj = if j < qlen { &q[j] } else { &BigInt::zero() };
        if &p[j] + qj != BigInt::zero() {
            return None;
        }
    }
    Some(q)
}

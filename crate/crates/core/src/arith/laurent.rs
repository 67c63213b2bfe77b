//! Sparse Laurent polynomials in `v` with Gaussian-integer coefficients.
//!
//! Exponents are stored doubled, so `v^{-3/2}` is the key `-3`. Every value
//! is kept in canonical form: no stored coefficient is zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::gauss::GaussInt;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, GaussInt>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussInt::one())
    }

    pub fn constant(c: GaussInt) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · v^(exp2 / 2)`.
    pub fn monomial(c: GaussInt, exp2: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp2, c);
        }
        Self { terms }
    }

    /// `v^(exp2 / 2)`.
    pub fn v_pow2(exp2: i64) -> Self {
        Self::monomial(GaussInt::one(), exp2)
    }

    /// Builds from `(doubled exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(it: I) -> Self
    where
        I: IntoIterator<Item = (i64, GaussInt)>,
    {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending order of doubled exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &GaussInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp2: i64) -> GaussInt {
        self.terms.get(&exp2).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp2: i64, c: &GaussInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp2).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp2);
        }
    }

    /// Largest doubled exponent carrying a nonzero coefficient.
    pub fn max_degree2(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree2(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Maximal degree in `v`; `None` for the zero polynomial.
    pub fn max_degree(&self) -> Option<Rational> {
        self.max_degree2()
            .map(|e| Rational::new(e.into(), 2.into()))
    }

    pub fn min_degree(&self) -> Option<Rational> {
        self.min_degree2()
            .map(|e| Rational::new(e.into(), 2.into()))
    }

    pub fn leading_coefficient(&self) -> Option<&GaussInt> {
        self.terms.values().next_back()
    }

    /// Integer exponents and real coefficients throughout.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(e, c)| e % 2 == 0 && c.is_real())
    }

    pub fn assert_integral(&self) -> Result<()> {
        if self.is_integral() {
            Ok(())
        } else {
            Err(Error::IntegralityViolation(self.to_string()))
        }
    }

    pub fn scale(&self, c: &GaussInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `v^(exp2 / 2)`.
    pub fn shift2(&self, exp2: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + exp2, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The quotient `r` with `r · divisor = self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (&dtop, dlead) = divisor
            .terms
            .iter()
            .next_back()
            .ok_or(Error::DivisionByZero)?;
        let dlow = divisor.min_degree2().expect("nonzero divisor");
        let Some(plow) = self.min_degree2() else {
            return Ok(Self::zero());
        };
        let qlow = plow - dlow;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rtop) = rem.max_degree2() {
            let qe = rtop - dtop;
            if qe < qlow {
                return Err(Error::NonExactDivision);
            }
            let qc = rem.terms[&rtop]
                .checked_div(dlead)
                .ok_or(Error::NonExactDivision)?;
            for (e, c) in &divisor.terms {
                rem.add_term(e + qe, &-(c * &qc));
            }
            quot.add_term(qe, &qc);
        }
        Ok(quot)
    }
}

impl Add for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Add for HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: HalfLaurent) -> HalfLaurent {
        &self + &rhs
    }
}

impl Sub for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Sub for HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: HalfLaurent) -> HalfLaurent {
        &self - &rhs
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        HalfLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

impl Mul for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut acc: BTreeMap<i64, GaussInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *acc.entry(e1 + e2).or_default() += &(c1 * c2);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        HalfLaurent { terms: acc }
    }
}

impl Mul for HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: HalfLaurent) -> HalfLaurent {
        &self * &rhs
    }
}

impl std::iter::Sum for HalfLaurent {
    fn sum<I: Iterator<Item = HalfLaurent>>(iter: I) -> Self {
        iter.fold(HalfLaurent::zero(), |a, b| &a + &b)
    }
}

fn write_exponent(f: &mut fmt::Formatter<'_>, exp2: i64) -> fmt::Result {
    match exp2 {
        0 => Ok(()),
        2 => write!(f, "v"),
        e if e % 2 == 0 => write!(f, "v^{}", e / 2),
        e => write!(f, "v^{e}/2"),
    }
}

impl fmt::Display for HalfLaurent {
    /// Descending by exponent: `v^10 + 2*v^2 - v^-10`, `-i*v^-3/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&e, c)) in self.terms.iter().rev().enumerate() {
            let first = idx == 0;
            // Pull a sign out of real and purely imaginary coefficients.
            let (negative, mag) = if c.im.is_zero() {
                (c.re.is_negative(), GaussInt::real(c.re.abs()))
            } else if c.re.is_zero() {
                (
                    c.im.is_negative(),
                    GaussInt::new(BigInt::zero(), c.im.abs()),
                )
            } else {
                (false, c.clone())
            };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_exponent(f, e)?;
            }
        }
        Ok(())
    }
}

impl FromStr for HalfLaurent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).polynomial()
    }
}

/// Lenient reader for the text form. Accepts the canonical output of
/// `Display` as well as LaTeX-style input such as `2 v^{-34} - v^{10}`.
struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Self {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat(b'+') {
            Some(false)
        } else if self.eat(b'-') {
            Some(true)
        } else {
            None
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn polynomial(&mut self) -> Result<HalfLaurent> {
        let mut out = HalfLaurent::zero();
        if self.peek().is_none() {
            return self.err("empty input");
        }
        let mut first = true;
        loop {
            let negative = match self.sign() {
                Some(neg) => neg,
                None if first => false,
                None => return self.err("expected '+' or '-' between terms"),
            };
            let (e, c) = self.term()?;
            out.add_term(e, &if negative { -c } else { c });
            first = false;
            if self.peek().is_none() {
                return Ok(out);
            }
        }
    }

    /// `coeff`, `coeff*v^e`, `coeff v^e`, or `v^e`.
    fn term(&mut self) -> Result<(i64, GaussInt)> {
        let coeff = self.coefficient()?;
        let has_coeff = coeff.is_some();
        let star = has_coeff && self.eat(b'*');
        if self.eat(b'v') {
            let e = if self.eat(b'^') { self.exponent()? } else { 2 };
            Ok((e, coeff.unwrap_or_else(GaussInt::one)))
        } else if star {
            self.err("expected 'v' after '*'")
        } else if let Some(c) = coeff {
            Ok((0, c))
        } else {
            self.err("expected a term")
        }
    }

    fn coefficient(&mut self) -> Result<Option<GaussInt>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let c = self.gaussian()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(Some(c))
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(Some(GaussInt::i()))
            }
            Some(b) if b.is_ascii_digit() => {
                let n: BigInt = self.digits().unwrap().parse().unwrap();
                if self.eat(b'i') {
                    Ok(Some(GaussInt::new(BigInt::zero(), n)))
                } else {
                    Ok(Some(GaussInt::real(n)))
                }
            }
            _ => Ok(None),
        }
    }

    /// Inside parentheses: `a`, `bi`, `a+bi`, `a-i`, with optional signs.
    fn gaussian(&mut self) -> Result<GaussInt> {
        let mut acc = GaussInt::zero();
        let mut parts = 0;
        loop {
            let negative = match self.sign() {
                Some(neg) => neg,
                None if parts == 0 => false,
                None => break,
            };
            let n: BigInt = match self.digits() {
                Some(d) => d.parse().unwrap(),
                None if self.peek() == Some(b'i') => BigInt::one(),
                None => return self.err("expected digits"),
            };
            let n = if negative { -n } else { n };
            if self.eat(b'i') {
                acc.im += n;
            } else {
                acc.re += n;
            }
            parts += 1;
            if parts > 2 {
                return self.err("too many parts in Gaussian coefficient");
            }
        }
        Ok(acc)
    }

    /// `k`, `-k`, `k/2`, `{-k}`, `{k/2}`; returns the doubled exponent.
    fn exponent(&mut self) -> Result<i64> {
        let braced = self.eat(b'{');
        let negative = self.sign().unwrap_or(false);
        let Some(num) = self.digits() else {
            return self.err("expected exponent digits");
        };
        let Ok(num) = num.parse::<i64>() else {
            return self.err("exponent out of range");
        };
        let den = if self.eat(b'/') {
            match self.digits().map(str::parse::<i64>) {
                Some(Ok(d)) if d > 0 => d,
                _ => return self.err("bad exponent denominator"),
            }
        } else {
            1
        };
        if braced && !self.eat(b'}') {
            return self.err("expected '}'");
        }
        let doubled = num.checked_mul(2).filter(|d| d % den == 0).map(|d| d / den);
        match doubled {
            Some(d) => Ok(if negative { -d } else { d }),
            None => self.err("exponent must be a multiple of 1/2"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HalfLaurent {
        s.parse().unwrap()
    }

    fn v(e: i64) -> HalfLaurent {
        HalfLaurent::v_pow2(2 * e)
    }

    #[test]
    fn addition_examples() {
        let x = p("v^2 + v^-2");
        assert_eq!(&HalfLaurent::zero() + &x, x);
        assert!((&v(2) + &-v(2)).is_zero());
        assert_eq!(&x + &v(2), p("2*v^2 + v^-2"));
    }

    #[test]
    fn multiplication_examples() {
        let x = p("v - v^-1");
        assert_eq!(&x * &HalfLaurent::one(), x);
        assert_eq!(&x * &p("v + v^-1"), p("v^2 - v^-2"));
        // f(1) = -i v^{-3/2}
        let f1 = HalfLaurent::monomial(GaussInt::new(0, -1), -3);
        assert_eq!(&f1 * &f1, -v(-3));
    }

    #[test]
    fn max_degree_examples() {
        use crate::arith::rational::int;
        assert_eq!(HalfLaurent::zero().max_degree(), None);
        assert_eq!(p("v^-34 + 2*v^2 + v^10").max_degree(), Some(int(10)));
        assert_eq!((-v(-4)).max_degree(), Some(int(-4)));
        assert_eq!(
            HalfLaurent::v_pow2(-3).max_degree(),
            Some(Rational::new((-3).into(), 2.into()))
        );
    }

    #[test]
    fn exact_division_examples() {
        let x = p("v^2 - v^-2");
        assert_eq!(x.exact_div(&HalfLaurent::one()).unwrap(), x);
        assert_eq!(x.exact_div(&p("v - v^-1")).unwrap(), p("v + v^-1"));
        let q3 = p("v^4 + 1 + v^-4");
        let q2 = p("v^2 + v^-2");
        assert_eq!((&q3 * &q2).exact_div(&q2).unwrap(), q3);
        assert_eq!(p("v^4 + 2").exact_div(&q2), Err(Error::NonExactDivision));
        assert_eq!(
            x.exact_div(&HalfLaurent::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            HalfLaurent::zero().exact_div(&q2).unwrap(),
            HalfLaurent::zero()
        );
    }

    #[test]
    fn gaussian_division() {
        let a = HalfLaurent::monomial(GaussInt::new(1, 1), 1);
        let b = p("(2-i)*v^3 + v^-1");
        assert_eq!((&a * &b).exact_div(&a).unwrap(), b);
    }

    #[test]
    fn display_forms() {
        assert_eq!(HalfLaurent::zero().to_string(), "0");
        assert_eq!(
            p("v^-34 + 2 v^2 + v^{10}").to_string(),
            "v^10 + 2*v^2 + v^-34"
        );
        assert_eq!(p("-3 + v").to_string(), "v - 3");
        assert_eq!(
            HalfLaurent::monomial(GaussInt::new(0, -1), -3).to_string(),
            "-i*v^-3/2"
        );
        assert_eq!(
            HalfLaurent::monomial(GaussInt::new(2, -1), 4).to_string(),
            "(2-i)*v^2"
        );
        assert_eq!(
            HalfLaurent::monomial(GaussInt::new(0, 1), 0).to_string(),
            "i"
        );
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "v^", "2*", "v^1/3", "(1+2i", "v v", "+", "v^{2"] {
            assert!(bad.parse::<HalfLaurent>().is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn integrality() {
        assert!(p("v^2 - 3").is_integral());
        assert!(!p("v^1/2").is_integral());
        assert!(!p("i*v^2").is_integral());
        assert!(p("i").assert_integral().is_err());
    }
}

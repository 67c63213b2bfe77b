//! Truncated expansions in descending powers of `q = v^4`.
//!
//! A [`Series`] keeps the top `W` coefficients of a Laurent series in `q⁻¹`
//! times a monomial in `v`. Products, quotients by `q^k − 1`, and sums of
//! such series are exact on those `W` coefficients, so a state sum can be
//! evaluated either in full (window spanning the whole polynomial) or only
//! near its top degree.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};

use crate::arith::{GaussInt, HalfLaurent};
use crate::quantum::QProduct;

/// Coefficient arithmetic overflowed a fixed-width type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

pub(crate) type SResult<T> = std::result::Result<T, Overflow>;

pub(crate) trait Coeff:
    Clone + Send + Sync + Zero + One + CheckedAdd + CheckedSub + CheckedMul + 'static
{
    fn to_bigint(&self) -> BigInt;

    fn add_c(&self, o: &Self) -> SResult<Self> {
        self.checked_add(o).ok_or(Overflow)
    }
    fn sub_c(&self, o: &Self) -> SResult<Self> {
        self.checked_sub(o).ok_or(Overflow)
    }
    fn mul_c(&self, o: &Self) -> SResult<Self> {
        self.checked_mul(o).ok_or(Overflow)
    }
    fn neg_c(&self) -> SResult<Self> {
        Self::zero().sub_c(self)
    }
}

impl Coeff for i128 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// `Σ_i coeffs[i] · v^{(top2 − 8i)/2}`, exact in the listed coefficients.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Series<T> {
    pub top2: i64,
    pub coeffs: Vec<T>,
}

impl<T: Coeff> Series<T> {
    pub fn window(&self) -> usize {
        self.coeffs.len()
    }

    /// Expands a real formal product. Products carrying an odd power of `i`
    /// never occur in the state sums and are rejected by the caller.
    pub fn from_qproduct(p: &QProduct, window: usize) -> SResult<Self> {
        debug_assert!(p.unit().is_multiple_of(2) && !p.is_zero());
        let mut coeffs = vec![T::zero(); window];
        if window > 0 {
            coeffs[0] = if p.unit() == 2 {
                T::one().neg_c()?
            } else {
                T::one()
            };
        }
        let mut s = Series {
            top2: p.shift2(),
            coeffs,
        };
        for (k, e) in p.factors() {
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    s.mul_qk_minus_one(k as usize)?;
                } else {
                    s.div_qk_minus_one(k as usize)?;
                }
            }
        }
        Ok(s)
    }

    /// Multiplies by `q^k − 1 = q^k (1 − q^{−k})`.
    fn mul_qk_minus_one(&mut self, k: usize) -> SResult<()> {
        self.top2 += 8 * k as i64;
        for i in (k..self.coeffs.len()).rev() {
            self.coeffs[i] = self.coeffs[i].sub_c(&self.coeffs[i - k])?;
        }
        Ok(())
    }

    /// Divides by `q^k − 1`, i.e. multiplies by `Σ_{j≥1} q^{−jk}`.
    fn div_qk_minus_one(&mut self, k: usize) -> SResult<()> {
        self.top2 -= 8 * k as i64;
        for i in k..self.coeffs.len() {
            self.coeffs[i] = self.coeffs[i].add_c(&self.coeffs[i - k])?;
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> SResult<Self> {
        let w = self.window().min(other.window());
        let mut coeffs = vec![T::zero(); w];
        for (i, a) in self.coeffs.iter().enumerate().take(w) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(w - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add_c(&a.mul_c(b)?)?;
                }
            }
        }
        Ok(Series {
            top2: self.top2 + other.top2,
            coeffs,
        })
    }

    pub fn negate(&mut self) -> SResult<()> {
        for c in &mut self.coeffs {
            *c = c.neg_c()?;
        }
        Ok(())
    }

    /// Moves the anchor up to `top2`, dropping coefficients that fall out of
    /// the window.
    fn reanchor(&mut self, top2: i64) {
        debug_assert!(top2 >= self.top2 && (top2 - self.top2) % 8 == 0);
        let off = ((top2 - self.top2) / 8) as usize;
        let w = self.coeffs.len();
        if off == 0 {
            return;
        }
        let mut coeffs = vec![T::zero(); w];
        for i in off..w {
            coeffs[i] = std::mem::replace(&mut self.coeffs[i - off], T::zero());
        }
        self.coeffs = coeffs;
        self.top2 = top2;
    }

    /// Adds `sign · other` into `self`; both must lie in the same class mod 8.
    fn add_assign(&mut self, other: &Self, negate: bool) -> SResult<()> {
        if other.top2 > self.top2 {
            self.reanchor(other.top2);
        }
        let off = ((self.top2 - other.top2) / 8) as usize;
        let w = self.coeffs.len();
        for (i, c) in other.coeffs.iter().enumerate() {
            if i + off >= w {
                break;
            }
            self.coeffs[i + off] = if negate {
                self.coeffs[i + off].sub_c(c)?
            } else {
                self.coeffs[i + off].add_c(c)?
            };
        }
        Ok(())
    }

    /// Doubled exponent of the first nonzero coefficient in the window.
    pub fn top_nonzero2(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.top2 - 8 * i as i64)
    }

    /// Lowest doubled exponent the window describes exactly.
    pub fn floor2(&self) -> i64 {
        self.top2 - 8 * (self.coeffs.len() as i64 - 1)
    }
}

/// A sum of series whose exponents may fall in different classes mod 8.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct SeriesSum<T> {
    pub window: usize,
    pub classes: BTreeMap<i64, Series<T>>,
}

impl<T: Coeff> SeriesSum<T> {
    pub fn new(window: usize) -> Self {
        Self {
            window,
            classes: BTreeMap::new(),
        }
    }

    pub fn add_series(&mut self, s: &Series<T>, negate: bool) -> SResult<()> {
        let key = s.top2.rem_euclid(8);
        match self.classes.get_mut(&key) {
            Some(acc) => acc.add_assign(s, negate),
            None => {
                let mut s = s.clone();
                if negate {
                    s.negate()?;
                }
                self.classes.insert(key, s);
                Ok(())
            }
        }
    }

    pub fn add(&mut self, other: &Self) -> SResult<()> {
        for s in other.classes.values() {
            self.add_series(s, false)?;
        }
        Ok(())
    }

    pub fn from_products(terms: &[QProduct], window: usize) -> SResult<Self> {
        let mut out = Self::new(window);
        for t in terms {
            out.add_series(&Series::from_qproduct(t, window)?, false)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> SResult<Self> {
        let mut out = Self::new(self.window.min(other.window));
        for a in self.classes.values() {
            for b in other.classes.values() {
                out.add_series(&a.mul(b)?, false)?;
            }
        }
        Ok(out)
    }

    pub fn mul_series(&self, s: &Series<T>) -> SResult<Self> {
        let mut out = Self::new(self.window.min(s.window()));
        for a in self.classes.values() {
            out.add_series(&a.mul(s)?, false)?;
        }
        Ok(out)
    }

    /// Multiplies by `±v^{shift2/2}`.
    pub fn shifted(&self, shift2: i64, negate: bool) -> SResult<Self> {
        let mut out = Self::new(self.window);
        for s in self.classes.values() {
            let mut s = s.clone();
            s.top2 += shift2;
            out.add_series(&s, negate)?;
        }
        Ok(out)
    }

    pub fn to_laurent(&self) -> HalfLaurent {
        HalfLaurent::from_terms(self.classes.values().flat_map(|s| {
            s.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| (s.top2 - 8 * i as i64, GaussInt::real(c.to_bigint())))
        }))
    }

    pub fn to_big(&self) -> SeriesSum<BigInt> {
        SeriesSum {
            window: self.window,
            classes: self
                .classes
                .iter()
                .map(|(k, s)| {
                    (
                        *k,
                        Series {
                            top2: s.top2,
                            coeffs: s.coeffs.iter().map(Coeff::to_bigint).collect(),
                        },
                    )
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum;

    fn full_window(p: &QProduct) -> usize {
        ((p.top2() - p.bottom2()) / 8 + 1) as usize
    }

    #[test]
    fn full_window_reproduces_expansion() {
        for parts in [vec![3, 2], vec![4, 1, 2], vec![0, 5]] {
            let p = QProduct::multinomial(&parts).mul(&QProduct::monomial(2, 6));
            let s = SeriesSum::<BigInt>::from_products(std::slice::from_ref(&p), full_window(&p))
                .unwrap();
            assert_eq!(s.to_laurent(), p.expand().unwrap());
        }
    }

    #[test]
    fn quotient_series_is_exact_in_window() {
        // [6]!/([3]![3]!) computed with the divisions interleaved.
        let p = QProduct::binomial(6, 3);
        let s = Series::<i128>::from_qproduct(&p, full_window(&p)).unwrap();
        let mut sum = SeriesSum::new(s.window());
        sum.add_series(&s, false).unwrap();
        assert_eq!(sum.to_laurent(), quantum::qmultinomial(&[3, 3]));
    }

    #[test]
    fn truncated_product_matches_full_top() {
        let a = QProduct::binomial(9, 4);
        let b = QProduct::qfact(5);
        let w = 6;
        let full = a.mul(&b).expand().unwrap();
        let sa = Series::<i128>::from_qproduct(&a, w).unwrap();
        let sb = Series::<i128>::from_qproduct(&b, w).unwrap();
        let prod = sa.mul(&sb).unwrap();
        for (i, c) in prod.coeffs.iter().enumerate() {
            assert_eq!(GaussInt::real(*c), full.coeff(prod.top2 - 8 * i as i64));
        }
    }

    #[test]
    fn mixed_classes_and_cancellation() {
        let mut s = SeriesSum::<i128>::new(4);
        let x = Series::from_qproduct(&QProduct::qint(3), 4).unwrap();
        s.add_series(&x, false).unwrap();
        s.add_series(&x, true).unwrap();
        assert!(s.to_laurent().is_zero());
        let y = Series::from_qproduct(&QProduct::qint(2), 4).unwrap();
        s.add_series(&y, false).unwrap();
        s.add_series(&x, false).unwrap();
        assert_eq!(s.classes.len(), 2);
        assert_eq!(s.to_laurent(), &quantum::qint(2) + &quantum::qint(3));
    }

    #[test]
    fn overflow_is_reported() {
        let mut s = Series::<i128> {
            top2: 0,
            coeffs: vec![i128::MAX, 0],
        };
        assert_eq!(s.mul_qk_minus_one(1), Ok(()));
        s.coeffs[1] = i128::MIN;
        assert_eq!(s.mul_qk_minus_one(1), Err(Overflow));
    }
}

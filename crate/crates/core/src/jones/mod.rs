//! The colored Jones state sum for `P(1/r, 1/s, 1/t)` and its degrees.
//!
//! `J(n+1) = (−1)^n Σ O^a O^b O^c f(a)^r f(b)^s f(c)^t ⟨Θ a,b,c⟩ Δ(a,b,c,n,n,n)²
//! / (⟨Θ a,n,n⟩⟨Θ b,n,n⟩⟨Θ c,n,n⟩)`, summed over even `0 ≤ a,b,c ≤ 2n`
//! satisfying the triangle inequality.

mod degree;
mod fit;
mod report;
mod statesum;

pub use degree::{
    brute_force_degree_bound, closed_form_max_degree, least_nearest_odd, phi, r_quadratic,
    PhiMaximum,
};
pub use fit::{fit_quasi_polynomial, FitCaps, FitMode, Quadratic, QuasiPolynomial};
pub use report::{closed_form_quasi_polynomial, degree_report, DegreeReport};
pub use statesum::StateSumEngine;

use serde::{Deserialize, Serialize};

use crate::arith::{GaussInt, HalfLaurent, Rational};
use crate::error::{Error, Result};
use crate::quantum::{self, AdmissibleTriple, QProduct};

/// `P(1/r, 1/s, 1/t)` with `r, s, t` odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PretzelKnot {
    pub r: i64,
    pub s: i64,
    pub t: i64,
}

/// Which closed form for the maximal degree applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeCase {
    /// `2|r| < s, t`: degree `−2n + 2`.
    Case1,
    /// `|r| > s` or `|r| > t`: period `(s+t−2)/2`.
    Case2,
    NotCovered,
}

impl PretzelKnot {
    pub fn new(r: i64, s: i64, t: i64) -> Result<Self> {
        if [r, s, t].iter().any(|x| x % 2 == 0) {
            return Err(Error::InvalidKnot(format!(
                "({r},{s},{t}): parameters must be odd"
            )));
        }
        Ok(Self { r, s, t })
    }

    /// `r < −1 < 1 < s, t`, the standing hypotheses of the closed forms.
    pub fn in_standard_range(&self) -> bool {
        self.r < -1 && self.s > 1 && self.t > 1
    }

    pub fn degree_case(&self) -> DegreeCase {
        let Self { r, s, t } = *self;
        if !self.in_standard_range() {
            DegreeCase::NotCovered
        } else if s > -2 * r && t > -2 * r {
            DegreeCase::Case1
        } else if s < -r || t < -r {
            DegreeCase::Case2
        } else {
            DegreeCase::NotCovered
        }
    }

    /// `(s + t − 2)/2`, the period in the second case.
    pub fn case2_period(&self) -> i64 {
        (self.s + self.t - 2) / 2
    }
}

impl std::fmt::Display for PretzelKnot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "P(1/{}, 1/{}, 1/{})", self.r, self.s, self.t)
    }
}

/// A lattice point of the summation domain `D_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StateTriple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl StateTriple {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }

    pub fn in_domain(&self, n: i64) -> bool {
        let Self { a, b, c } = *self;
        [a, b, c]
            .iter()
            .all(|x| x % 2 == 0 && (0..=2 * n).contains(x))
            && (a - b).abs() <= c
            && c <= a + b
    }

    fn triple(&self) -> AdmissibleTriple {
        AdmissibleTriple::new(self.a, self.b, self.c)
    }
}

/// All of `D_n` in lexicographic order.
pub fn state_triples(n: i64) -> Vec<StateTriple> {
    let mut out = Vec::new();
    for a in (0..=2 * n).step_by(2) {
        for b in (0..=2 * n).step_by(2) {
            let lo = (a - b).abs();
            let hi = (a + b).min(2 * n);
            for c in (lo..=hi).step_by(2) {
                out.push(StateTriple { a, b, c });
            }
        }
    }
    out
}

/// The knot-independent part of a summand,
/// `O^a O^b O^c ⟨Θ a,b,c⟩ / (⟨Θ a,n,n⟩⟨Θ b,n,n⟩⟨Θ c,n,n⟩)`.
pub(crate) fn prefactor(st: StateTriple, n: i64) -> QProduct {
    let StateTriple { a, b, c } = st;
    let theta = |x, y, z| quantum::theta_product(AdmissibleTriple::new(x, y, z));
    quantum::unknot_product(a)
        .mul(&quantum::unknot_product(b))
        .mul(&quantum::unknot_product(c))
        .mul(&theta(a, b, c))
        .div(&theta(a, n, n))
        .div(&theta(b, n, n))
        .div(&theta(c, n, n))
}

/// `f(a)^r f(b)^s f(c)^t`.
pub(crate) fn framing_monomial(k: &PretzelKnot, st: StateTriple) -> QProduct {
    quantum::framing_product(st.a, k.r)
        .mul(&quantum::framing_product(st.b, k.s))
        .mul(&quantum::framing_product(st.c, k.t))
}

/// One summand of the state sum as a quotient of Laurent polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct Summand {
    pub numerator: HalfLaurent,
    /// `⟨Θ a,n,n⟩⟨Θ b,n,n⟩⟨Θ c,n,n⟩`.
    pub denominator: HalfLaurent,
}

impl Summand {
    pub fn max_degree(&self) -> Option<Rational> {
        Some(self.numerator.max_degree()? - self.denominator.max_degree()?)
    }
}

/// The `(a,b,c)` summand of `J_K(n+1)`, without the overall `(−1)^n`,
/// assembled directly from Laurent polynomials.
pub fn summand(k: &PretzelKnot, st: StateTriple, n: i64) -> Summand {
    let denominator = [st.a, st.b, st.c]
        .iter()
        .map(|&x| quantum::theta_value(AdmissibleTriple::new(x, n, n)))
        .fold(HalfLaurent::one(), |acc, x| &acc * &x);
    if !st.in_domain(n) {
        return Summand {
            numerator: HalfLaurent::zero(),
            denominator,
        };
    }
    let StateTriple { a, b, c } = st;
    let col = quantum::Color;
    let delta = quantum::delta_value(st.triple(), col(n), col(n), col(n));
    let numerator = [
        quantum::unknot_value(col(a)),
        quantum::unknot_value(col(b)),
        quantum::unknot_value(col(c)),
        quantum::framing_factor(col(a), k.r),
        quantum::framing_factor(col(b), k.s),
        quantum::framing_factor(col(c), k.t),
        quantum::theta_value(st.triple()),
        &delta * &delta,
    ]
    .iter()
    .fold(HalfLaurent::one(), |acc, x| &acc * x);
    Summand {
        numerator,
        denominator,
    }
}

/// `J_K(N)` summed over the common denominator `Π_x ⟨Θ x,n,n⟩³`. Slow, but
/// independent of the series engine behind [`colored_jones`].
pub fn colored_jones_direct(k: &PretzelKnot, big_n: u32) -> Result<HalfLaurent> {
    if big_n == 0 {
        return Err(Error::InvalidKnot("color N must be at least 1".into()));
    }
    let n = big_n as i64 - 1;
    let common = (0..=n)
        .map(|x| quantum::theta_value(AdmissibleTriple::new(2 * x, n, n)).pow(3))
        .fold(HalfLaurent::one(), |acc, x| &acc * &x);
    let mut total = HalfLaurent::zero();
    for st in state_triples(n) {
        let s = summand(k, st, n);
        total = &total + &(&s.numerator * &common.exact_div(&s.denominator)?);
    }
    let sign = GaussInt::real(if n % 2 == 0 { 1 } else { -1 });
    let j = total.exact_div(&common)?.scale(&sign);
    j.assert_integral()?;
    Ok(j)
}

/// `J_K(N; v)` via the state sum, checked to be integral.
pub fn colored_jones(k: &PretzelKnot, big_n: u32) -> Result<HalfLaurent> {
    StateSumEngine::new().colored_jones(k, big_n)
}

/// `[d₊J_K(1), …, d₊J_K(N_max)]` from the state sum.
pub fn degree_sequence(k: &PretzelKnot, n_max: u32) -> Result<Vec<Rational>> {
    StateSumEngine::new().degree_sequence(k, n_max)
}

/// Colored Hopf link: the closed form `(−1)^{a+b}[(a+1)(b+1)]` and the sum
/// `f(a)^{−2} f(b)^{−2} Σ_c f(c)² O^c / ⟨Θ a,b,c⟩ · ⟨Θ a,b,c⟩`, in that order.
/// The factor in front restores zero framing on both components.
pub fn hopf_colored(a: i64, b: i64) -> Result<(HalfLaurent, HalfLaurent)> {
    let sign = if (a + b) % 2 == 0 { 1 } else { -1 };
    let closed = quantum::qint((a + 1) * (b + 1)).scale(&GaussInt::real(sign));
    let mut sum = HalfLaurent::zero();
    for c in ((a - b).abs()..=a + b).step_by(2) {
        let theta = quantum::theta_value(AdmissibleTriple::new(a, b, c));
        let term = &quantum::framing_factor(quantum::Color(c), 2)
            * &(&quantum::unknot_value(quantum::Color(c)) * &theta);
        sum = &sum + &term.exact_div(&theta)?;
    }
    let correction = &quantum::framing_factor(quantum::Color(a), -2)
        * &quantum::framing_factor(quantum::Color(b), -2);
    Ok((closed, &sum * &correction))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knot_validation() {
        assert!(PretzelKnot::new(-5, 5, 3).is_ok());
        assert!(PretzelKnot::new(-4, 5, 3).is_err());
    }

    #[test]
    fn case_labels() {
        let c = |r, s, t| PretzelKnot::new(r, s, t).unwrap().degree_case();
        assert_eq!(c(-3, 7, 7), DegreeCase::Case1);
        assert_eq!(c(-5, 5, 3), DegreeCase::Case2);
        assert_eq!(c(-3, 3, 5), DegreeCase::NotCovered);
        assert_eq!(c(-5, 7, 9), DegreeCase::NotCovered);
        assert_eq!(c(3, 5, 7), DegreeCase::NotCovered);
    }

    #[test]
    fn domain_enumeration() {
        assert_eq!(state_triples(0), vec![StateTriple::new(0, 0, 0)]);
        for n in 0..6 {
            let all = state_triples(n);
            assert!(all.iter().all(|st| st.in_domain(n)));
            let mut brute = 0;
            for a in 0..=2 * n {
                for b in 0..=2 * n {
                    for c in 0..=2 * n {
                        if StateTriple::new(a, b, c).in_domain(n) {
                            brute += 1;
                        }
                    }
                }
            }
            assert_eq!(all.len(), brute);
        }
    }

    #[test]
    fn hopf_small() {
        let (closed, sum) = hopf_colored(0, 0).unwrap();
        assert_eq!(closed, HalfLaurent::one());
        assert_eq!(sum, closed);
        let (closed, sum) = hopf_colored(1, 1).unwrap();
        assert_eq!(closed, "v^6 + v^2 + v^-2 + v^-6".parse().unwrap());
        assert_eq!(sum, closed);
    }

    #[test]
    fn summand_at_color_zero() {
        let k = PretzelKnot::new(-5, 5, 3).unwrap();
        let s = summand(&k, StateTriple::new(0, 0, 0), 0);
        assert_eq!(
            (s.numerator, s.denominator),
            (HalfLaurent::one(), HalfLaurent::one())
        );
        assert!(summand(&k, StateTriple::new(2, 0, 0), 1)
            .numerator
            .is_zero());
    }
}

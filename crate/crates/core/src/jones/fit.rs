use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::rational::serde_str;
use crate::arith::{int, Rational};
use crate::error::{Error, Result};

/// `quad·n² + lin·n + konst`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quadratic {
    #[serde(with = "serde_str")]
    pub quad: Rational,
    #[serde(with = "serde_str")]
    pub lin: Rational,
    #[serde(rename = "const", with = "serde_str")]
    pub konst: Rational,
}

impl Quadratic {
    pub fn new(quad: Rational, lin: Rational, konst: Rational) -> Self {
        Self { quad, lin, konst }
    }

    pub fn eval(&self, n: i64) -> Rational {
        let n = int(n);
        &self.quad * &n * &n + &self.lin * &n + &self.konst
    }

    /// The quadratic through three points with distinct abscissae.
    pub(crate) fn through(pts: &[(i64, Rational); 3]) -> Self {
        let [(x0, y0), (x1, y1), (x2, y2)] = pts;
        let d1 = (y1 - y0) / int(x1 - x0);
        let d2 = (y2 - y1) / int(x2 - x1);
        let quad = (&d2 - &d1) / int(x2 - x0);
        let lin = d1 - &quad * int(x0 + x1);
        let konst = y0 - &quad * int(x0 * x0) - &lin * int(*x0);
        Self { quad, lin, konst }
    }
}

impl std::fmt::Display for Quadratic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use crate::arith::format_rational as fr;
        use num_traits::Signed;
        write!(f, "{}·n²", fr(&self.quad))?;
        for (c, unit) in [(&self.lin, "·n"), (&self.konst, "")] {
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, " {sign} {}{unit}", fr(&c.abs()))?;
        }
        Ok(())
    }
}

/// How the classes of a fit were determined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FitMode {
    /// Each residue class fitted by its own quadratic.
    PerClass,
    /// One leading and linear coefficient for all classes, per-class constants.
    SharedLeading,
    /// Taken from a closed form rather than fitted.
    ClosedForm,
}

/// `n ↦ classes[n mod period](n)` for `n > cutoff`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiPolynomial {
    pub period: usize,
    pub cutoff: usize,
    pub classes: Vec<Quadratic>,
    pub mode: FitMode,
}

impl QuasiPolynomial {
    pub fn eval(&self, n: i64) -> Rational {
        self.classes[n.rem_euclid(self.period as i64) as usize].eval(n)
    }

    /// Whether all classes share their leading and linear coefficients.
    pub fn uniform_leading(&self) -> bool {
        self.classes
            .windows(2)
            .all(|w| w[0].quad == w[1].quad && w[0].lin == w[1].lin)
    }

    /// Equality as functions on `n > max(cutoffs)`.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let start = self.cutoff.max(other.cutoff) as i64 + 1;
        let span = 3 * self.period.lcm(&other.period) as i64;
        (start..start + span).all(|n| self.eval(n) == other.eval(n))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FitCaps {
    pub period: usize,
    pub cutoff: usize,
}

impl Default for FitCaps {
    fn default() -> Self {
        Self {
            period: 12,
            cutoff: 3,
        }
    }
}

/// Points `(n, seq[n−1])` for `n > cutoff`, grouped by `n mod period`.
fn classes(seq: &[Rational], period: usize, cutoff: usize) -> Vec<Vec<(i64, Rational)>> {
    let mut out = vec![Vec::new(); period];
    for (i, y) in seq.iter().enumerate().skip(cutoff) {
        let n = i as i64 + 1;
        out[n as usize % period].push((n, y.clone()));
    }
    out
}

fn fits_all(q: &QuasiPolynomial, groups: &[Vec<(i64, Rational)>]) -> bool {
    groups.iter().flatten().all(|(n, y)| q.eval(*n) == *y)
}

fn per_class(seq: &[Rational], period: usize, cutoff: usize) -> Option<QuasiPolynomial> {
    let groups = classes(seq, period, cutoff);
    let fitted = groups
        .iter()
        .map(|g| Quadratic::through(&[g[0].clone(), g[1].clone(), g[2].clone()]))
        .collect();
    let q = QuasiPolynomial {
        period,
        cutoff,
        classes: fitted,
        mode: FitMode::PerClass,
    };
    fits_all(&q, &groups).then_some(q)
}

fn shared_leading(seq: &[Rational], period: usize, cutoff: usize) -> Option<QuasiPolynomial> {
    let groups = classes(seq, period, cutoff);
    let p = period as i64;
    // y(n+p) − y(n) = quad·(2np + p²) + lin·p for any two points of one class.
    let diffs: Vec<(i64, Rational)> = groups
        .iter()
        .filter(|g| g.len() >= 2)
        .map(|g| (g[0].0, &g[1].1 - &g[0].1))
        .take(2)
        .collect();
    let [(n1, d1), (n2, d2)] = <[_; 2]>::try_from(diffs).ok()?;
    let quad = (&d1 - &d2) / int(2 * p * (n1 - n2));
    let lin = (d1 - &quad * int(2 * n1 * p + p * p)) / int(p);
    let fitted = groups
        .iter()
        .map(|g| {
            let (n, y) = &g[0];
            let konst = y - &quad * int(n * n) - &lin * int(*n);
            Quadratic::new(quad.clone(), lin.clone(), konst)
        })
        .collect();
    let q = QuasiPolynomial {
        period,
        cutoff,
        classes: fitted,
        mode: FitMode::SharedLeading,
    };
    fits_all(&q, &groups).then_some(q)
}

fn shared_minimum(period: usize) -> usize {
    (2 * period).max(period + 4)
}

/// Least `(period, cutoff)` in lexicographic order such that `seq[n−1]`
/// (`n = 1, 2, …`) is a quadratic quasi-polynomial for `n > cutoff`.
///
/// A period/cutoff pair is tried per class when every class has at least
/// three points plus verification slack (`len − cutoff ≥ 3p + 3`), and
/// otherwise with shared leading coefficients when every class has two
/// points and at least two points are left over for verification.
pub fn fit_quasi_polynomial(seq: &[Rational], caps: FitCaps) -> Result<QuasiPolynomial> {
    let len = seq.len();
    let mut needed = None;
    for period in 1..=caps.period.max(1) {
        for cutoff in 0..=caps.cutoff {
            let avail = len.saturating_sub(cutoff);
            let fit = if avail >= 3 * period + 3 {
                per_class(seq, period, cutoff)
            } else if avail >= shared_minimum(period) {
                shared_leading(seq, period, cutoff)
            } else {
                needed.get_or_insert(shared_minimum(period) + cutoff);
                continue;
            };
            if let Some(q) = fit {
                return Ok(q);
            }
        }
    }
    // Without enough points for every admissible period a failure says
    // nothing about the larger periods.
    match needed {
        Some(needed) => Err(Error::InsufficientData { needed, got: len }),
        None => Err(Error::NoFit {
            period_cap: caps.period,
            cutoff_cap: caps.cutoff,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn seq(f: impl Fn(i64) -> Rational, len: i64) -> Vec<Rational> {
        (1..=len).map(f).collect()
    }

    #[test]
    fn linear_sequence() {
        let q = fit_quasi_polynomial(&seq(|n| int(-2 * n + 2), 10), FitCaps::default()).unwrap();
        assert_eq!((q.period, q.cutoff), (1, 0));
        assert_eq!(q.classes[0], Quadratic::new(int(0), int(-2), int(2)));
    }

    #[test]
    fn periodic_constants() {
        let f = |n: i64| int(5 * n * n - n) + if n % 4 == 1 { int(1) } else { int(0) };
        let q = fit_quasi_polynomial(&seq(f, 20), FitCaps::default()).unwrap();
        assert_eq!((q.period, q.cutoff, q.mode), (4, 0, FitMode::PerClass));
        let q = fit_quasi_polynomial(&seq(f, 9), FitCaps::default()).unwrap();
        assert_eq!((q.period, q.cutoff, q.mode), (4, 0, FitMode::SharedLeading));
        for n in 1..40 {
            assert_eq!(q.eval(n), f(n));
        }
    }

    #[test]
    fn cutoff_is_found() {
        let f = |n: i64| if n == 1 { int(7) } else { rat(n * n, 3) };
        let q = fit_quasi_polynomial(&seq(f, 10), FitCaps::default()).unwrap();
        assert_eq!((q.period, q.cutoff), (1, 1));
    }

    #[test]
    fn corrupted_entry_is_rejected() {
        let mut s = seq(|n| int(n * n), 12);
        s[6] += int(1);
        let caps = FitCaps {
            period: 1,
            cutoff: 0,
        };
        assert!(matches!(
            fit_quasi_polynomial(&s, caps),
            Err(Error::NoFit { .. })
        ));
        let caps = FitCaps {
            period: 4,
            cutoff: 0,
        };
        assert!(matches!(
            fit_quasi_polynomial(&s, caps),
            Err(Error::NoFit { .. })
        ));
        assert!(matches!(
            fit_quasi_polynomial(&s, FitCaps::default()),
            Err(Error::InsufficientData {
                needed: 13,
                got: 12
            })
        ));
    }

    #[test]
    fn too_short() {
        let s = seq(int, 4);
        assert!(matches!(
            fit_quasi_polynomial(&s, FitCaps::default()),
            Err(Error::InsufficientData { .. })
        ));
    }

    #[test]
    fn display_signs() {
        assert_eq!(
            Quadratic::new(rat(16, 3), int(-6), int(-2)).to_string(),
            "16/3·n² - 6·n - 2"
        );
        assert_eq!(
            Quadratic::new(int(0), int(1), rat(2, 3)).to_string(),
            "0·n² + 1·n + 2/3"
        );
    }

    #[test]
    fn agreement_is_functional() {
        let a = QuasiPolynomial {
            period: 1,
            cutoff: 0,
            classes: vec![Quadratic::new(int(1), int(0), int(0))],
            mode: FitMode::PerClass,
        };
        let mut b = a.clone();
        b.period = 2;
        b.classes.push(a.classes[0].clone());
        assert!(a.agrees_with(&b));
        b.classes[1].konst = int(1);
        assert!(!a.agrees_with(&b));
    }
}

use serde::{Deserialize, Serialize};

use super::fit::{fit_quasi_polynomial, FitCaps, FitMode, Quadratic, QuasiPolynomial};
use super::{closed_form_max_degree, DegreeCase, PretzelKnot, StateSumEngine};
use crate::arith::rational::serde_str;
use crate::arith::Rational;
use crate::error::{Error, Result};

/// The degree law of a knot in the shape `a_j n² + 2b_j n + c_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    #[serde(with = "serde_str")]
    pub slope: Rational,
    #[serde(with = "serde_str")]
    pub linear: Rational,
    #[serde(with = "serde_str::vec")]
    pub constants: Vec<Rational>,
    pub period: usize,
    pub cutoff: usize,
    pub source: FitMode,
    /// Fitted and closed-form laws agree; `None` when no closed form applies.
    pub consistent: Option<bool>,
    pub degrees: Vec<String>,
}

/// The closed-form degree law in the two covered cases.
pub fn closed_form_quasi_polynomial(k: &PretzelKnot) -> Result<QuasiPolynomial> {
    let period = match k.degree_case() {
        DegreeCase::Case1 => 1,
        DegreeCase::Case2 => k.case2_period() as usize,
        DegreeCase::NotCovered => return Err(Error::CaseNotCovered(k.to_string())),
    };
    let mut classes = vec![None; period];
    // Three consecutive periods determine each class's quadratic.
    for n in 1..=3 * period as i64 {
        let j = n as usize % period;
        if classes[j].is_none() {
            let pts = [n, n + period as i64, n + 2 * period as i64]
                .map(|m| (m, closed_form_max_degree(k, m).expect("covered case")));
            classes[j] = Some(pts);
        }
    }
    let classes = classes
        .into_iter()
        .map(|pts| Quadratic::through(&pts.expect("every class visited")))
        .collect();
    Ok(QuasiPolynomial {
        period,
        cutoff: 0,
        classes,
        mode: FitMode::ClosedForm,
    })
}

fn from_law(q: &QuasiPolynomial, degrees: &[Rational], consistent: Option<bool>) -> DegreeReport {
    DegreeReport {
        slope: q.classes[0].quad.clone(),
        linear: q.classes[0].lin.clone(),
        constants: q.classes.iter().map(|c| c.konst.clone()).collect(),
        period: q.period,
        cutoff: q.cutoff,
        source: q.mode,
        consistent,
        degrees: degrees.iter().map(crate::arith::format_rational).collect(),
    }
}

/// Fits the state-sum degrees `d₊J_K(1..=N_max)` and compares the result with
/// the closed form where one applies. When the sequence is too short to
/// settle every period up to the cap, the closed form is reported instead,
/// still checked against each computed degree.
pub fn degree_report(
    engine: &StateSumEngine,
    k: &PretzelKnot,
    n_max: u32,
    caps: FitCaps,
) -> Result<DegreeReport> {
    let degrees = engine.degree_sequence(k, n_max)?;
    let closed = closed_form_quasi_polynomial(k).ok();
    match fit_quasi_polynomial(&degrees, caps) {
        Ok(fitted) => {
            if !fitted.uniform_leading() {
                return Err(Error::NoFit {
                    period_cap: caps.period,
                    cutoff_cap: caps.cutoff,
                });
            }
            let consistent = closed.as_ref().map(|c| {
                fitted.agrees_with(c)
                    && degrees
                        .iter()
                        .enumerate()
                        .all(|(i, d)| *d == c.eval(i as i64 + 1))
            });
            Ok(from_law(&fitted, &degrees, consistent))
        }
        Err(Error::InsufficientData { .. }) if closed.is_some() => {
            let c = closed.unwrap();
            let consistent = degrees
                .iter()
                .enumerate()
                .all(|(i, d)| *d == c.eval(i as i64 + 1));
            Ok(from_law(&c, &degrees, Some(consistent)))
        }
        Err(e) => Err(e),
    }
}

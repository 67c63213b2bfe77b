//! Knot-by-knot comparison of the Jones degree law with boundary slopes and
//! Euler characteristics of incompressible candidate surfaces.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{int, Rational};
use crate::error::{Error, Result};
use crate::hatcher_oertel::{enumerate_surfaces, SurfaceReport};
use crate::jones::{degree_report, DegreeCase, DegreeReport, FitCaps, PretzelKnot, StateSumEngine};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseLabel {
    Case1,
    Case2,
    OutOfScope,
}

impl From<DegreeCase> for CaseLabel {
    fn from(c: DegreeCase) -> Self {
        match c {
            DegreeCase::Case1 => CaseLabel::Case1,
            DegreeCase::Case2 => CaseLabel::Case2,
            DegreeCase::NotCovered => CaseLabel::OutOfScope,
        }
    }
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CaseLabel::Case1 => "case1",
            CaseLabel::Case2 => "case2",
            CaseLabel::OutOfScope => "out_of_scope",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matches {
    /// Some incompressible surface has the Jones slope as boundary slope.
    pub slope: bool,
    /// One such surface also has `χ/m` equal to half the linear coefficient.
    pub strong: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationResult {
    pub knot: PretzelKnot,
    pub case: CaseLabel,
    pub jones: Option<DegreeReport>,
    pub surfaces: Vec<SurfaceReport>,
    pub matches: Matches,
    /// Index into `surfaces` of the witnessing surface.
    pub witness: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

impl VerificationResult {
    pub fn in_scope(&self) -> bool {
        self.case != CaseLabel::OutOfScope
    }

    /// Both conjectured identities hold.
    pub fn passed(&self) -> bool {
        self.matches.slope && self.matches.strong
    }
}

fn find_witness(jones: &DegreeReport, surfaces: &[SurfaceReport]) -> (Matches, Option<usize>) {
    let b: Rational = &jones.linear / int(2);
    let slope_hits: Vec<usize> = surfaces
        .iter()
        .enumerate()
        .filter(|(_, s)| s.incompressible && s.slope == jones.slope)
        .map(|(i, _)| i)
        .collect();
    let strong = slope_hits
        .iter()
        .copied()
        .find(|&i| surfaces[i].chi_over_m == b);
    let matches = Matches {
        slope: !slope_hits.is_empty(),
        strong: strong.is_some(),
    };
    (matches, strong.or(slope_hits.first().copied()))
}

/// Runs both pipelines on one knot. Out-of-scope knots are reported with
/// whatever could be computed.
pub fn verify(
    engine: &StateSumEngine,
    k: &PretzelKnot,
    n_max: u32,
    caps: FitCaps,
) -> VerificationResult {
    let case = CaseLabel::from(k.degree_case());
    let surfaces = enumerate_surfaces(k);
    let (jones, error) = match degree_report(engine, k, n_max, caps) {
        Ok(r) => (Some(r), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let (matches, witness) = match &jones {
        Some(j) => find_witness(j, &surfaces),
        None => (Matches::default(), None),
    };
    VerificationResult {
        knot: *k,
        case,
        jones,
        surfaces,
        matches,
        witness,
        error,
    }
}

/// Verifies every in-scope knot of the product of the ranges, in input order.
pub fn sweep(
    engine: &StateSumEngine,
    r_range: &[i64],
    s_range: &[i64],
    t_range: &[i64],
    n_max: u32,
    caps: FitCaps,
) -> Vec<VerificationResult> {
    let knots: Vec<PretzelKnot> = r_range
        .iter()
        .flat_map(|&r| {
            s_range
                .iter()
                .flat_map(move |&s| t_range.iter().map(move |&t| (r, s, t)))
        })
        .filter_map(|(r, s, t)| PretzelKnot::new(r, s, t).ok())
        .filter(|k| k.degree_case() != DegreeCase::NotCovered)
        .collect();
    knots
        .par_iter()
        .map(|k| verify(engine, k, n_max, caps))
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub knots: usize,
    pub slope_matches: usize,
    pub strong_matches: usize,
    pub failures: usize,
}

pub fn summarize(results: &[VerificationResult]) -> SweepSummary {
    SweepSummary {
        knots: results.len(),
        slope_matches: results.iter().filter(|r| r.matches.slope).count(),
        strong_matches: results.iter().filter(|r| r.matches.strong).count(),
        failures: results.iter().filter(|r| !r.passed()).count(),
    }
}

/// Parses `lo..hi` (inclusive) or a single integer into the odd integers it
/// contains.
pub fn parse_range(text: &str) -> Result<Vec<i64>> {
    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };
    let num = |s: &str, pos: usize| -> Result<i64> {
        s.trim()
            .parse::<i64>()
            .map_err(|_| err(pos, "expected an integer"))
    };
    let (lo, hi) = match text.find("..") {
        Some(i) => (num(&text[..i], 0)?, num(&text[i + 2..], i + 2)?),
        None => {
            let v = num(text, 0)?;
            (v, v)
        }
    };
    if hi.checked_sub(lo).is_none_or(|span| span > 1 << 16) {
        return Err(err(0, "range too long"));
    }
    Ok((lo..=hi).filter(|x| x % 2 != 0).collect())
}

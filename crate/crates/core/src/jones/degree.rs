use serde::{Deserialize, Serialize};

use super::{state_triples, DegreeCase, PretzelKnot, StateTriple};
use crate::arith::{int, rat, Rational};
use crate::error::{Error, Result};
use crate::quantum::{deg_delta, deg_f, deg_theta, deg_unknot, AdmissibleTriple};

/// Maximal degree of the `(a,b,c)` summand of `J_K(n+1)`.
pub fn phi(k: &PretzelKnot, st: StateTriple, n: i64) -> Rational {
    let StateTriple { a, b, c } = st;
    int(deg_unknot(a) + deg_unknot(b) + deg_unknot(c))
        + deg_f(a) * int(k.r)
        + deg_f(b) * int(k.s)
        + deg_f(c) * int(k.t)
        + int(2) * deg_delta(AdmissibleTriple::new(a, b, c), n, n, n)
        + deg_theta(a, b, c)
        - deg_theta(a, n, n)
        - deg_theta(b, n, n)
        - deg_theta(c, n, n)
}

/// The quadratic that `Φ` reduces to on the face `a = b + c` with `b, c ≤ n`.
pub fn r_quadratic(k: &PretzelKnot, b: i64, c: i64, n: i64) -> Rational {
    let PretzelKnot { r, s, t } = *k;
    rat(-(r + s) * b * b, 2) - int((1 + r) * b * c) - rat((r + t) * c * c, 2)
        + int((2 - r - s) * b + (2 - r - t) * c - 2 * n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiMaximum {
    #[serde(with = "crate::arith::rational::serde_str")]
    pub value: Rational,
    pub maximizers: Vec<StateTriple>,
}

/// `max Φ` over `D_{N−1}`, an upper bound for `d₊J_K(N)` that is attained
/// when the maximizers do not cancel.
pub fn brute_force_degree_bound(k: &PretzelKnot, big_n: u32) -> Result<PhiMaximum> {
    if big_n == 0 {
        return Err(Error::InvalidKnot("color N must be at least 1".into()));
    }
    let n = big_n as i64 - 1;
    let mut best: Option<PhiMaximum> = None;
    for st in state_triples(n) {
        let v = phi(k, st, n);
        match &mut best {
            Some(m) if v < m.value => {}
            Some(m) if v == m.value => m.maximizers.push(st),
            _ => {
                best = Some(PhiMaximum {
                    value: v,
                    maximizers: vec![st],
                })
            }
        }
    }
    Ok(best.expect("D_n is never empty"))
}

/// The least odd integer nearest to `num/den`.
pub fn least_nearest_odd(num: i64, den: i64) -> i64 {
    assert!(den > 0);
    let fl = num.div_euclid(den);
    let lo = if fl.rem_euclid(2) == 1 { fl } else { fl - 1 };
    if num - lo * den <= (lo + 2) * den - num {
        lo
    } else {
        lo + 2
    }
}

/// Closed form for `d₊J_K(N)` in the two covered cases.
pub fn closed_form_max_degree(k: &PretzelKnot, big_n: i64) -> Result<Rational> {
    let PretzelKnot { r, s, t } = *k;
    match k.degree_case() {
        DegreeCase::Case1 => Ok(int(-2 * big_n + 2)),
        DegreeCase::Case2 => {
            let d = s + t - 2;
            let j = big_n.rem_euclid(d / 2);
            let v = least_nearest_odd(2 * (t - 1) * j, d);
            let c_j = rat(s + t - 6, 2) - rat(2 * j * j * (t - 1) * (t - 1), d)
                + int(2 * j * (t - 1) * v)
                + rat((2 - s - t) * v * v, 2);
            let a = int(2) * (rat(1 - s * t, d) - int(r));
            Ok(a * int(big_n * big_n) + int(2 * (2 + r) * big_n) + c_j)
        }
        DegreeCase::NotCovered => Err(Error::CaseNotCovered(k.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearest_odd() {
        assert_eq!(least_nearest_odd(0, 6), -1);
        assert_eq!(least_nearest_odd(4, 6), 1);
        assert_eq!(least_nearest_odd(8, 6), 1);
        assert_eq!(least_nearest_odd(12, 6), 1);
        assert_eq!(least_nearest_odd(13, 6), 3);
        assert_eq!(least_nearest_odd(-1, 2), -1);
    }

    #[test]
    fn closed_form_matches_table_start() {
        let k = PretzelKnot::new(-5, 5, 3).unwrap();
        let got: Vec<_> = (1..=5)
            .map(|n| closed_form_max_degree(&k, n).unwrap())
            .collect();
        assert_eq!(got, [0, 10, 28, 62, 104].map(int));
    }

    #[test]
    fn closed_form_matches_phi_maximum() {
        for (r, s, t) in [(-5, 5, 3), (-3, 7, 7), (-7, 5, 9), (-9, 3, 3)] {
            let k = PretzelKnot::new(r, s, t).unwrap();
            for n in 1..=8 {
                let bound = brute_force_degree_bound(&k, n).unwrap();
                assert_eq!(bound.value, closed_form_max_degree(&k, n as i64).unwrap());
            }
        }
    }

    #[test]
    fn uncovered_case_is_an_error() {
        let k = PretzelKnot::new(-3, 3, 5).unwrap();
        assert!(matches!(
            closed_form_max_degree(&k, 3),
            Err(Error::CaseNotCovered(_))
        ));
    }
}

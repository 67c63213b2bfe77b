//! Quantum integers, factorials and multinomials, colored unknots, theta
//! values, framing factors and the `Δ` quotient of a 6j-symbol by a theta,
//! together with closed forms for their maximal degrees.

mod product;

pub use product::QProduct;

use crate::arith::{rat, HalfLaurent, Rational};

/// An edge color. Colors are non-negative; the type is signed so that the
/// half-sums appearing in admissibility checks stay in range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub i64);

/// Three colors meeting at a trivalent vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AdmissibleTriple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl AdmissibleTriple {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }

    /// Even sum, non-negative entries, triangle inequality.
    pub fn is_admissible(&self) -> bool {
        let Self { a, b, c } = *self;
        a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && (a - b).abs() <= c && c <= a + b
    }
}

fn expand(p: &QProduct) -> HalfLaurent {
    p.expand()
        .expect("quantum building blocks are Laurent polynomials")
}

pub fn qint(k: i64) -> HalfLaurent {
    expand(&QProduct::qint(k))
}

pub fn qfact(k: i64) -> HalfLaurent {
    expand(&QProduct::qfact(k))
}

pub fn qmultinomial(parts: &[i64]) -> HalfLaurent {
    expand(&QProduct::multinomial(parts))
}

/// `O^k = (−1)^k [k+1]` as a formal product.
pub fn unknot_product(k: i64) -> QProduct {
    QProduct::sign(k % 2 != 0).mul(&QProduct::qint(k + 1))
}

pub fn unknot_value(k: Color) -> HalfLaurent {
    expand(&unknot_product(k.0))
}

/// The theta value, or the zero product for inadmissible colors.
pub fn theta_product(t: AdmissibleTriple) -> QProduct {
    if !t.is_admissible() {
        return QProduct::zero();
    }
    let AdmissibleTriple { a, b, c } = t;
    let half = (a + b + c) / 2;
    unknot_product(half).mul(&QProduct::multinomial(&[
        (-a + b + c) / 2,
        (a - b + c) / 2,
        (a + b - c) / 2,
    ]))
}

pub fn theta_value(t: AdmissibleTriple) -> HalfLaurent {
    expand(&theta_product(t))
}

/// `f(a)^power` where `f(a) = i^{-a} v^{-a(a+2)/2}`.
pub fn framing_product(a: i64, power: i64) -> QProduct {
    QProduct::monomial(-a * power, -a * (a + 2) * power)
}

pub fn framing_factor(a: Color, power: i64) -> HalfLaurent {
    expand(&framing_product(a.0, power))
}

/// Inclusive range of `z` outside which some binomial of `Δ` vanishes.
pub fn delta_z_range(t: AdmissibleTriple, alpha: i64, beta: i64, gamma: i64) -> (i64, i64) {
    let AdmissibleTriple { a, b, c } = t;
    let lo = [
        a + b + c,
        a + beta + gamma,
        alpha + b + gamma,
        alpha + beta + c,
    ]
    .into_iter()
    .map(|x| x.div_euclid(2))
    .max()
    .unwrap();
    let hi = [
        b + c + beta + gamma,
        a + c + alpha + gamma,
        a + b + alpha + beta,
    ]
    .into_iter()
    .map(|x| x.div_euclid(2))
    .min()
    .unwrap();
    (lo, hi)
}

/// The single `z`-term of `Δ`, zero when any of its binomials vanishes.
pub fn delta_term(t: AdmissibleTriple, alpha: i64, beta: i64, gamma: i64, z: i64) -> QProduct {
    let AdmissibleTriple { a, b, c } = t;
    let halves = [
        a + b + c,
        a + beta + gamma,
        alpha + b + gamma,
        alpha + beta + c,
    ];
    if halves.iter().any(|h| h % 2 != 0) {
        return QProduct::zero();
    }
    let [s, h1, h2, h3] = halves.map(|h| h / 2);
    QProduct::sign((z - s) % 2 != 0)
        .mul(&QProduct::binomial(z + 1, s + 1))
        .mul(&QProduct::binomial((-a + b + c) / 2, z - h1))
        .mul(&QProduct::binomial((a - b + c) / 2, z - h2))
        .mul(&QProduct::binomial((a + b - c) / 2, z - h3))
}

/// The nonvanishing terms of `Δ(a,b,c,α,β,γ)`.
pub fn delta_terms(t: AdmissibleTriple, alpha: i64, beta: i64, gamma: i64) -> Vec<QProduct> {
    if !t.is_admissible() {
        return Vec::new();
    }
    let (lo, hi) = delta_z_range(t, alpha, beta, gamma);
    (lo..=hi)
        .map(|z| delta_term(t, alpha, beta, gamma, z))
        .filter(|p| !p.is_zero())
        .collect()
}

pub fn delta_value(t: AdmissibleTriple, alpha: Color, beta: Color, gamma: Color) -> HalfLaurent {
    delta_terms(t, alpha.0, beta.0, gamma.0)
        .iter()
        .map(expand)
        .sum()
}

/// `d₊⟨Θ a,b,c⟩ = a(1−a) + b(1−b) + c(1−c) + (a+b+c)²/2`.
pub fn deg_theta(a: i64, b: i64, c: i64) -> Rational {
    let s = a + b + c;
    rat(2 * (a * (1 - a) + b * (1 - b) + c * (1 - c)) + s * s, 2)
}

pub fn deg_f(a: i64) -> Rational {
    rat(-a * (a + 2), 2)
}

pub fn deg_unknot(a: i64) -> i64 {
    2 * a
}

fn g(n: Rational, k: Rational) -> Rational {
    rat(2, 1) * &k * (n - &k)
}

/// Maximal degree of `Δ`, read off the top `z`-term.
pub fn deg_delta(t: AdmissibleTriple, alpha: i64, beta: i64, gamma: i64) -> Rational {
    let AdmissibleTriple { a, b, c } = t;
    let h = |x: i64| rat(x, 2);
    let two_m = a + b + c + alpha + beta + gamma - (a + alpha).max(b + beta).max(c + gamma);
    let m = h(two_m);
    g(m.clone() + rat(1, 1), h(a + b + c) + rat(1, 1))
        + g(h(-a + b + c), m.clone() - h(a + beta + gamma))
        + g(h(a - b + c), m.clone() - h(alpha + b + gamma))
        + g(h(a + b - c), m - h(alpha + beta + c))
}

/// Exponent `(ar + bs + ct)/2` whose parity fixes the sign of the leading
/// coefficient of the `(a,b,c)` summand of the pretzel state sum.
pub fn leading_sign_exponent(r: i64, s: i64, t: i64, a: i64, b: i64, c: i64) -> i64 {
    (a * r + b * s + c * t) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, GaussInt};

    fn p(s: &str) -> HalfLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(qint(1), HalfLaurent::one());
        assert!(qint(0).is_zero());
        assert_eq!(qint(3), p("v^4 + 1 + v^-4"));
        assert_eq!(qint(-3), -p("v^4 + 1 + v^-4"));
        // [k] (v^2 - v^-2) = v^{2k} - v^{-2k}
        for k in 1..8 {
            let lhs = &qint(k) * &p("v^2 - v^-2");
            assert_eq!(
                lhs,
                &HalfLaurent::v_pow2(4 * k) - &HalfLaurent::v_pow2(-4 * k)
            );
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(qfact(0), HalfLaurent::one());
        assert!(qfact(-2).is_zero());
        assert_eq!(qfact(2), p("v^2 + v^-2"));
        assert_eq!(qfact(4), &qfact(3) * &qint(4));
    }

    #[test]
    fn multinomials() {
        assert_eq!(qmultinomial(&[5]), HalfLaurent::one());
        assert_eq!(qmultinomial(&[1, 1]), p("v^2 + v^-2"));
        assert!(qmultinomial(&[2, -1]).is_zero());
        let lhs = &qmultinomial(&[2, 3, 1]) * &(&qfact(2) * &(&qfact(3) * &qfact(1)));
        assert_eq!(lhs, qfact(6));
    }

    #[test]
    fn unknots() {
        assert_eq!(unknot_value(Color(0)), HalfLaurent::one());
        assert_eq!(unknot_value(Color(1)), -p("v^2 + v^-2"));
        assert_eq!(unknot_value(Color(2)), p("v^4 + 1 + v^-4"));
    }

    #[test]
    fn thetas() {
        assert_eq!(
            theta_value(AdmissibleTriple::new(0, 0, 0)),
            HalfLaurent::one()
        );
        assert_eq!(
            theta_value(AdmissibleTriple::new(0, 2, 2)),
            p("v^4 + 1 + v^-4")
        );
        assert!(theta_value(AdmissibleTriple::new(1, 2, 2)).is_zero());
        assert!(theta_value(AdmissibleTriple::new(0, 2, 4)).is_zero());
        // Θ(0,k,k) = O^k
        for k in 0..6 {
            assert_eq!(
                theta_value(AdmissibleTriple::new(0, k, k)),
                unknot_value(Color(k))
            );
        }
    }

    #[test]
    fn framing() {
        assert_eq!(framing_factor(Color(0), 7), HalfLaurent::one());
        assert_eq!(framing_factor(Color(2), 1), -HalfLaurent::v_pow2(-8));
        assert_eq!(framing_factor(Color(2), -5), -HalfLaurent::v_pow2(40));
        assert_eq!(
            framing_factor(Color(1), 1),
            HalfLaurent::monomial(GaussInt::new(0, -1), -3)
        );
    }

    #[test]
    fn delta_trivial() {
        let t = AdmissibleTriple::new(0, 0, 0);
        assert_eq!(
            delta_value(t, Color(0), Color(0), Color(0)),
            HalfLaurent::one()
        );
    }

    #[test]
    fn degree_formulas() {
        assert_eq!(deg_theta(0, 0, 0), int(0));
        assert_eq!(deg_theta(0, 2, 2), int(4));
        assert_eq!(deg_f(2), int(-4));
        assert_eq!(deg_unknot(3), 6);
    }

    #[test]
    fn z_range_covers_all_nonvanishing_terms() {
        for (a, b, c) in [(2, 2, 2), (4, 2, 2), (2, 4, 6), (0, 4, 4)] {
            let t = AdmissibleTriple::new(a, b, c);
            for n in 0..5 {
                let (lo, hi) = delta_z_range(t, n, n, n);
                for z in -3..(a + b + c + 3 * n + 4) {
                    let term = delta_term(t, n, n, n, z);
                    if z < lo || z > hi {
                        assert!(term.is_zero(), "({a},{b},{c},{n}) z={z}");
                    }
                }
            }
        }
    }
}

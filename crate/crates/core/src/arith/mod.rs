//! Exact arithmetic: Gaussian integers, rationals and half-integer Laurent
//! polynomials in `v`.

pub mod gauss;
pub mod laurent;
pub mod rational;

pub use gauss::GaussInt;
pub use laurent::HalfLaurent;
pub use rational::{format_rational, int, parse_rational, rat, Rational};

pub fn laurent_add(p: &HalfLaurent, q: &HalfLaurent) -> HalfLaurent {
    p + q
}

pub fn laurent_mul(p: &HalfLaurent, q: &HalfLaurent) -> HalfLaurent {
    p * q
}

pub fn max_degree(p: &HalfLaurent) -> Option<Rational> {
    p.max_degree()
}

pub fn exact_div(p: &HalfLaurent, q: &HalfLaurent) -> crate::Result<HalfLaurent> {
    p.exact_div(q)
}

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{framing_monomial, prefactor, state_triples, PretzelKnot, StateTriple};
use crate::arith::{rat, HalfLaurent, Rational};
use crate::error::{Error, Result};
use crate::quantum::{self, AdmissibleTriple, QProduct};
use crate::series::{Coeff, SResult, Series, SeriesSum};

const FIRST_WINDOW: usize = 16;
const MAX_WINDOW: usize = 1 << 14;

type Table<T> = Arc<Vec<(StateTriple, SeriesSum<T>)>>;
/// Keyed by `(n, window)`; `None` marks an `i128` overflow.
type Cache<T> = Mutex<HashMap<(i64, usize), T>>;

/// Evaluates pretzel state sums, caching the knot-independent part of each
/// summand so that many knots can share the work at a given color.
#[derive(Default)]
pub struct StateSumEngine {
    small: Cache<Option<Table<i128>>>,
    big: Cache<Table<BigInt>>,
}

fn delta_products(st: StateTriple, n: i64) -> Vec<QProduct> {
    quantum::delta_terms(AdmissibleTriple::new(st.a, st.b, st.c), n, n, n)
}

/// `(−1)^n · prefactor · Δ²` truncated to `window` coefficients.
fn knot_free_summand<T: Coeff>(st: StateTriple, n: i64, window: usize) -> SResult<SeriesSum<T>> {
    let delta = SeriesSum::<T>::from_products(&delta_products(st, n), window)?;
    let pre = Series::from_qproduct(&prefactor(st, n).mul(&QProduct::sign(n % 2 != 0)), window)?;
    delta.mul(&delta)?.mul_series(&pre)
}

fn build_table<T: Coeff>(n: i64, window: usize) -> SResult<Vec<(StateTriple, SeriesSum<T>)>> {
    state_triples(n)
        .into_par_iter()
        .map(|st| Ok((st, knot_free_summand(st, n, window)?)))
        .collect()
}

fn knot_sum<T: Coeff>(
    k: &PretzelKnot,
    table: &[(StateTriple, SeriesSum<T>)],
    window: usize,
) -> SResult<SeriesSum<T>> {
    table
        .par_iter()
        .map(|(st, w)| {
            let f = framing_monomial(k, *st);
            debug_assert!(f.unit().is_multiple_of(2));
            w.shifted(f.shift2(), f.unit() == 2)
        })
        .try_reduce(
            || SeriesSum::new(window),
            |mut acc, s| {
                acc.add(&s)?;
                Ok(acc)
            },
        )
}

/// Highest exponent of a windowed sum, or `None` when the window is too
/// short to decide it.
fn certified_top(sum: &SeriesSum<BigInt>) -> Option<i64> {
    let top = sum
        .classes
        .values()
        .filter_map(Series::top_nonzero2)
        .max()?;
    let undecided = sum
        .classes
        .values()
        .any(|s| s.top_nonzero2().is_none() && s.floor2() >= top);
    (!undecided).then_some(top)
}

impl StateSumEngine {
    pub fn new() -> Self {
        Self::default()
    }

    fn small_table(&self, n: i64, window: usize) -> Option<Table<i128>> {
        if let Some(t) = self.small.lock().unwrap().get(&(n, window)) {
            return t.clone();
        }
        let t = build_table::<i128>(n, window).ok().map(Arc::new);
        self.small.lock().unwrap().insert((n, window), t.clone());
        t
    }

    fn big_table(&self, n: i64, window: usize) -> Table<BigInt> {
        if let Some(t) = self.big.lock().unwrap().get(&(n, window)) {
            return t.clone();
        }
        let t = Arc::new(build_table::<BigInt>(n, window).expect("big integers do not overflow"));
        self.big.lock().unwrap().insert((n, window), t.clone());
        t
    }

    /// The top `window` coefficients of `J_K(n+1)` in each exponent class.
    fn windowed(&self, k: &PretzelKnot, n: i64, window: usize) -> SeriesSum<BigInt> {
        if let Some(table) = self.small_table(n, window) {
            if let Ok(s) = knot_sum(k, &table, window) {
                return s.to_big();
            }
        }
        knot_sum(k, &self.big_table(n, window), window).expect("big integers do not overflow")
    }

    /// `d₊J_K(N)`, computed from the top of the state sum only.
    pub fn max_degree(&self, k: &PretzelKnot, big_n: u32) -> Result<Rational> {
        let n = color(big_n)?;
        let mut window = FIRST_WINDOW;
        while window <= MAX_WINDOW {
            if let Some(top2) = certified_top(&self.windowed(k, n, window)) {
                return Ok(rat(top2, 2));
            }
            window *= 2;
        }
        Err(Error::WindowExhausted(MAX_WINDOW))
    }

    pub fn degree_sequence(&self, k: &PretzelKnot, n_max: u32) -> Result<Vec<Rational>> {
        (1..=n_max).map(|big_n| self.max_degree(k, big_n)).collect()
    }

    /// The whole of `J_K(N)`, with a window wide enough to hold every
    /// exponent any summand can reach.
    pub fn colored_jones(&self, k: &PretzelKnot, big_n: u32) -> Result<HalfLaurent> {
        let n = color(big_n)?;
        let mut top = i64::MIN;
        let mut bottom = i64::MAX;
        for st in state_triples(n) {
            let deltas = delta_products(st, n);
            let base = prefactor(st, n).mul(&framing_monomial(k, st));
            let dt = deltas.iter().map(QProduct::top2).max().unwrap();
            let db = deltas.iter().map(QProduct::bottom2).min().unwrap();
            top = top.max(base.top2() + 2 * dt);
            bottom = bottom.min(base.bottom2() + 2 * db);
        }
        let window = ((top - bottom) / 8 + 1) as usize;
        let j = self.windowed(k, n, window).to_laurent();
        j.assert_integral()?;
        Ok(j)
    }
}

fn color(big_n: u32) -> Result<i64> {
    if big_n == 0 {
        return Err(Error::InvalidKnot("color N must be at least 1".into()));
    }
    Ok(big_n as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::jones::colored_jones_direct;

    #[test]
    fn engine_agrees_with_direct_sum() {
        let engine = StateSumEngine::new();
        for (r, s, t) in [(-5, 5, 3), (-3, 7, 7), (-3, 3, 5)] {
            let k = PretzelKnot::new(r, s, t).unwrap();
            for big_n in 1..=3 {
                assert_eq!(
                    engine.colored_jones(&k, big_n).unwrap(),
                    colored_jones_direct(&k, big_n).unwrap()
                );
            }
        }
    }

    #[test]
    fn windowed_degree_agrees_with_full_polynomial() {
        let engine = StateSumEngine::new();
        let k = PretzelKnot::new(-5, 5, 3).unwrap();
        for big_n in 1..=4 {
            let full = engine.colored_jones(&k, big_n).unwrap();
            assert_eq!(
                engine.max_degree(&k, big_n).unwrap(),
                full.max_degree().unwrap()
            );
        }
        assert_eq!(engine.max_degree(&k, 2).unwrap(), int(10));
    }
}

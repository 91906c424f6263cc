//! Bernoulli numbers of the second kind, `t / log(1+t) = Σ c_n t^n`.

use super::memo::Memo;
use crate::exact::Rational;
use crate::series::{log1p_series, Series};

static VALUES: Memo<(), Vec<Rational>> = Memo::new();

fn second_kind_values(order: usize) -> Vec<Rational> {
    let q: Series = log1p_series(order + 1)
        .div_t()
        .expect("log(1+t) has zero constant term");
    q.inverse().expect("log(1+t)/t is a unit").coeffs().to_vec()
}

/// `c_n = [t^n] t/log(1+t)`: 1, 1/2, -1/12, 1/24, ...
pub fn bernoulli_second_kind(n: u64) -> Rational {
    let cached = VALUES.get_or_insert_with((), || second_kind_values(16));
    if let Some(v) = cached.get(n as usize) {
        return v.clone();
    }
    let fresh = second_kind_values((n as usize).max(2 * cached.len()));
    VALUES.insert((), fresh.clone());
    fresh[n as usize].clone()
}

//! Generating functions of the families as truncated series.

use std::fmt;
use std::str::FromStr;

use super::{
    apostol_euler_mantissa_series, euler_prefactor_base, exponential_poly, general_geometric,
    FamilyParams,
};
use crate::error::{Error, Result};
use crate::exact::{factorial_rat, rat, to_i64, Rational};
use crate::scaled::ScaledRational;
use crate::series::{log1p_series, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GfId {
    /// `e^{x(e^t-1)}`
    ExpBell,
    /// `e^{x(e^t-1)} φ_m(x e^t)`
    PhiShift,
    /// `1/(1 - x(e^t-1))`
    Geometric,
    /// `(1 - x(e^t-1))^{-α}`
    GeneralGeometric,
    /// `(1 - x(e^t-1))^{-α} w_{m,α}(x e^t / (1 - x(e^t-1)))`
    WShift,
    /// `(2/(λe^t+1))^α e^{xt}`
    ApostolEuler,
    /// `(t/(λe^t-1))^l e^{xt}`, `λ ≠ 1`
    ApostolBernoulli,
    /// `(t/(e^t-1))^l e^{xt}`
    BernoulliHigher,
    /// `t/log(1+t)`
    BernoulliSecondKind,
}

impl GfId {
    pub const ALL: [GfId; 9] = [
        GfId::ExpBell,
        GfId::PhiShift,
        GfId::Geometric,
        GfId::GeneralGeometric,
        GfId::WShift,
        GfId::ApostolEuler,
        GfId::ApostolBernoulli,
        GfId::BernoulliHigher,
        GfId::BernoulliSecondKind,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GfId::ExpBell => "exp-bell",
            GfId::PhiShift => "phi-shift",
            GfId::Geometric => "geometric",
            GfId::GeneralGeometric => "general-geometric",
            GfId::WShift => "w-shift",
            GfId::ApostolEuler => "apostol-euler",
            GfId::ApostolBernoulli => "apostol-bernoulli",
            GfId::BernoulliHigher => "bernoulli-higher",
            GfId::BernoulliSecondKind => "bernoulli-second-kind",
        }
    }
}

impl fmt::Display for GfId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GfId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GfId::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| Error::usage(format!("unknown generating function {s:?}")))
    }
}

/// Coefficients `c_0..c_N` of a generating function, possibly carrying a
/// common irrational prefactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfSeries {
    pub coefficients: Vec<ScaledRational>,
}

impl GfSeries {
    fn plain(s: &Series) -> Self {
        GfSeries {
            coefficients: s
                .coeffs()
                .iter()
                .cloned()
                .map(ScaledRational::from)
                .collect(),
        }
    }

    /// `n! c_n`.
    pub fn egf_values(&self) -> Vec<ScaledRational> {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(n, c)| c.mul_rational(&factorial_rat(n as u64)))
            .collect()
    }
}

fn e_minus_one(order: usize) -> Series {
    &Series::exp_linear(&rat(1), order) - &Series::one(order)
}

fn unit_pow(s: &Series, e: &Rational) -> Result<Series> {
    match to_i64(e) {
        Some(i) => s.pow(i),
        None => s.binomial_power(e),
    }
}

/// `t^l g(t)` truncated back to `order`.
fn times_t_pow(g: &Series, l: u64, order: usize) -> Series {
    let mut g = g.clone();
    for _ in 0..l {
        g = g.mul_t();
    }
    g.truncate(order)
}

/// The generating function `id` through `t^order`. `m` is the shift index for
/// the shifted forms; other parameters default as in [`super::evaluate`].
pub fn generating_function(
    id: GfId,
    m: u64,
    params: &FamilyParams,
    order: usize,
) -> Result<GfSeries> {
    let x = params.x.clone().unwrap_or_else(|| rat(0));
    let alpha = params.alpha.clone().unwrap_or_else(|| rat(1));
    let lambda = params.lambda.clone().unwrap_or_else(|| rat(1));
    let l = params.l.unwrap_or(1);
    if l == 0 {
        return Err(Error::domain("l must be at least 1"));
    }
    let ext = Series::exp_linear(&x, order);
    let denominator = || &Series::one(order) - &e_minus_one(order).scale(&x);
    let s = match id {
        GfId::ExpBell => e_minus_one(order).scale(&x).exp()?,
        GfId::PhiShift => {
            let g = e_minus_one(order).scale(&x).exp()?;
            &g * &exponential_poly(m).eval_series(&Series::exp_linear(&rat(1), order).scale(&x))
        }
        GfId::Geometric => denominator().inverse()?,
        GfId::GeneralGeometric => unit_pow(&denominator(), &-&alpha)?,
        GfId::WShift => {
            let d = denominator();
            let arg = &Series::exp_linear(&rat(1), order).scale(&x) * &d.inverse()?;
            &unit_pow(&d, &-&alpha)? * &general_geometric(m, &alpha)?.eval_series(&arg)
        }
        GfId::ApostolEuler => {
            let mant = &apostol_euler_mantissa_series(&alpha, &lambda, order)? * &ext;
            let base = euler_prefactor_base(&lambda)?;
            let coefficients = mant
                .coeffs()
                .iter()
                .map(|c| ScaledRational::new(c.clone(), base.clone(), alpha.clone()))
                .collect::<Result<Vec<_>>>()?;
            return Ok(GfSeries { coefficients });
        }
        GfId::ApostolBernoulli => {
            if lambda == rat(1) {
                return Err(Error::domain(
                    "lambda=1 not in domain; use bernoulli-higher",
                ));
            }
            let d = &Series::exp_linear(&rat(1), order).scale(&lambda) - &Series::one(order);
            &times_t_pow(&d.pow(-(l as i64))?, l, order) * &ext
        }
        GfId::BernoulliHigher => {
            let q = e_minus_one(order + 1).div_t()?;
            &q.pow(-(l as i64))? * &ext
        }
        GfId::BernoulliSecondKind => log1p_series(order + 1).div_t()?.inverse()?,
    };
    Ok(GfSeries::plain(&s))
}

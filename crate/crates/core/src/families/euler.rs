//! Apostol–Euler numbers and polynomials of rational order.
//!
//! `(2/(λe^t + 1))^α e^{xt} = Σ 𝓔_n^{(α)}(x; λ) t^n/n!`. Writing
//! `2/(λe^t+1) = P · (λ+1)/(λe^t+1)` with `P = 2/(λ+1)` splits every value into
//! `P^α` times a rational mantissa, which is how fractional `α` stays exact.

use num_traits::{One, Zero};

use super::memo::Memo;
use crate::combinatorics::stirling2_rat;
use crate::error::{Error, Result};
use crate::exact::{
    binomial_rat, canonical, checked_pow, factorial_rat, gen_binomial, is_integer, pow_u, rat,
    to_i64, Rational,
};
use crate::scaled::ScaledRational;
use crate::series::Series;

static MANTISSA: Memo<(u64, Rational, Rational), Rational> = Memo::new();

fn check_domain(alpha: &Rational, lambda: &Rational) -> Result<()> {
    if *alpha <= Rational::zero() {
        return Err(Error::domain(format!(
            "alpha must be positive, got {}",
            canonical(alpha)
        )));
    }
    if *lambda == rat(-1) {
        return Err(Error::domain("lambda=-1 not in domain"));
    }
    Ok(())
}

/// The prefactor base `P = 2/(λ+1)`.
pub fn euler_prefactor_base(lambda: &Rational) -> Result<Rational> {
    if *lambda == rat(-1) {
        return Err(Error::domain("lambda=-1 not in domain"));
    }
    Ok(rat(2) / (lambda + Rational::one()))
}

/// Mantissa of `𝓔_n^{(α)}(λ)` relative to `P^α`:
/// `Σ_k {n,k} C(α+k-1,k) k! (-λ)^k / (λ+1)^k`.
pub fn apostol_euler_mantissa(n: u64, alpha: &Rational, lambda: &Rational) -> Result<Rational> {
    check_domain(alpha, lambda)?;
    MANTISSA.try_get_or_insert_with((n, alpha.clone(), lambda.clone()), || {
        let ratio = -lambda * checked_pow(&(lambda + Rational::one()), -1)?;
        let mut sum = Rational::zero();
        for k in 0..=n {
            let up = alpha + rat(k as i64) - rat(1);
            sum += stirling2_rat(n, k as i64)
                * gen_binomial(&up, k)
                * factorial_rat(k)
                * pow_u(&ratio, k);
        }
        Ok(sum)
    })
}

/// `𝓔_n^{(α)}(λ)` from the explicit Stirling sum, as `mantissa · P^α`.
pub fn apostol_euler_higher(n: u64, alpha: &Rational, lambda: &Rational) -> Result<ScaledRational> {
    let m = apostol_euler_mantissa(n, alpha, lambda)?;
    ScaledRational::new(m, euler_prefactor_base(lambda)?, alpha.clone())
}

/// Higher-order Euler numbers `E_n^{(α)} = 𝓔_n^{(α)}(1)`; always plain rationals.
pub fn euler_higher(n: u64, alpha: &Rational) -> Result<Rational> {
    apostol_euler_mantissa(n, alpha, &rat(1))
}

/// Mantissa series `M(t)` with `(2/(λe^t+1))^α = P^α M(t)`.
///
/// Integer `α` goes through series inverse and integer power; fractional `α`
/// through the binomial power of the unit series `(λe^t+1)/(λ+1)`.
pub fn apostol_euler_mantissa_series(
    alpha: &Rational,
    lambda: &Rational,
    order: usize,
) -> Result<Series> {
    check_domain(alpha, lambda)?;
    let unit = (&Series::exp_linear(&rat(1), order).scale(lambda) + &Series::one(order))
        .scale(&(rat(1) / (lambda + Rational::one())));
    match to_i64(alpha) {
        Some(a) => unit.pow(-a),
        None => unit.binomial_power(&-alpha),
    }
}

/// `𝓔_n^{(α)}(x0; λ)` read off the generating function.
pub fn apostol_euler_by_series(
    n: u64,
    alpha: &Rational,
    x0: &Rational,
    lambda: &Rational,
) -> Result<ScaledRational> {
    let order = n as usize;
    let m = &apostol_euler_mantissa_series(alpha, lambda, order)? * &Series::exp_linear(x0, order);
    ScaledRational::new(
        m.egf_coeff(order),
        euler_prefactor_base(lambda)?,
        alpha.clone(),
    )
}

/// `𝓔_n^{(α)}(x0; λ) = Σ_k C(n,k) 𝓔_k^{(α)}(λ) x0^{n-k}`, sharing the prefactor.
pub fn apostol_euler_poly(
    n: u64,
    alpha: &Rational,
    x0: &Rational,
    lambda: &Rational,
) -> Result<ScaledRational> {
    let mut sum = Rational::zero();
    for k in 0..=n {
        sum += binomial_rat(n, k as i64)
            * apostol_euler_mantissa(k, alpha, lambda)?
            * pow_u(x0, n - k);
    }
    ScaledRational::new(sum, euler_prefactor_base(lambda)?, alpha.clone())
}

/// True when `α` makes every value at this `λ` a plain rational.
pub fn euler_is_plain(alpha: &Rational, lambda: &Rational) -> bool {
    is_integer(alpha) || lambda.is_one()
}

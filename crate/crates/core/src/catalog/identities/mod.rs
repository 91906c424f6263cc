//! The registered identities. Each checker returns `(lhs, rhs)`; a domain
//! error marks the grid point as skipped.

mod bernoulli;
mod errata;
mod euler;
mod geometric;
mod gf;
mod shift;
mod sums;

use num_traits::{One, Zero};

use super::Identity;
use crate::combinatorics::{stirling1_unsigned, stirling2_rat};
use crate::error::{Error, Result};
use crate::exact::{
    binomial_rat, checked_pow, factorial_rat, gen_binomial, int_to_rat, pow_u, rat, sign_pow,
    Rational,
};
use crate::families::euler_prefactor_base;
use crate::scaled::ScaledRational;

pub(super) fn main() -> Vec<Identity> {
    let mut v = Vec::new();
    v.extend(geometric::identities());
    v.extend(gf::identities());
    v.extend(euler::identities());
    v.extend(bernoulli::identities());
    v.extend(shift::identities());
    v.extend(sums::identities());
    v
}

pub(super) fn errata() -> Vec<Identity> {
    errata::identities()
}

/// `{n, k}` as a rational.
fn s2(n: u64, k: u64) -> Rational {
    stirling2_rat(n, k as i64)
}

/// Unsigned `[n, k]` as a rational.
fn s1(n: u64, k: u64) -> Rational {
    int_to_rat(stirling1_unsigned(n, k as i64))
}

fn c(n: u64, k: u64) -> Rational {
    binomial_rat(n, k as i64)
}

/// `C(α + k - 1, k)`.
fn rising(alpha: &Rational, k: u64) -> Rational {
    gen_binomial(&(alpha + r(k) - Rational::one()), k)
}

fn r(k: u64) -> Rational {
    rat(k as i64)
}

fn fact(k: u64) -> Rational {
    factorial_rat(k)
}

fn sgn(k: u64) -> Rational {
    sign_pow(k)
}

/// `k^e` with `0^0 = 1`.
fn zpow(k: u64, e: u64) -> Rational {
    pow_u(&r(k), e)
}

fn inv_pow(a: &Rational, e: u64) -> Result<Rational> {
    checked_pow(a, -(e as i64))
}

fn recip(a: &Rational) -> Result<Rational> {
    crate::exact::checked_recip(a)
}

/// `mantissa · (2/(λ+1))^α`.
fn euler_scaled(mantissa: Rational, lambda: &Rational, alpha: &Rational) -> Result<ScaledRational> {
    ScaledRational::new(mantissa, euler_prefactor_base(lambda)?, alpha.clone())
}

/// Sum of scaled values sharing a scale.
fn ssum(terms: impl IntoIterator<Item = Result<ScaledRational>>) -> Result<ScaledRational> {
    let mut acc = ScaledRational::zero();
    for t in terms {
        acc = acc.add(&t?)?;
    }
    Ok(acc)
}

fn rsum(terms: impl IntoIterator<Item = Rational>) -> Rational {
    terms.into_iter().fold(Rational::zero(), |a, b| a + b)
}

fn require_not_one(lambda: &Rational) -> Result<()> {
    if lambda.is_one() {
        return Err(Error::domain("lambda=1 not in domain"));
    }
    Ok(())
}

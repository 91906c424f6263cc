//! Shifted-argument recurrences for Apostol–Euler and Apostol–Bernoulli
//! polynomials, and the reflection / Stirling-sum forms derived from them.

use super::{c, fact, inv_pow, r, recip, rising, s1, s2, sgn, ssum};
use crate::catalog::{GridPoint, Identity, Shape, Slot, Value};
use crate::error::Result;
use crate::exact::{checked_pow, pow_u, rat, Rational};
use crate::families::{apostol_bernoulli_value, apostol_euler_higher, apostol_euler_poly};

const NM_ALPHA_LAMBDA: &[Slot] = &[Slot::N, Slot::M, Slot::Alpha, Slot::Lambda];
const NM_L_LAMBDA: &[Slot] = &[Slot::N, Slot::M, Slot::L, Slot::Lambda];
const NM_ALPHA: &[Slot] = &[Slot::N, Slot::M, Slot::Alpha];
const NM_LAMBDA: &[Slot] = &[Slot::N, Slot::M, Slot::Lambda];
const NM_L: &[Slot] = &[Slot::N, Slot::M, Slot::L];
const NM: &[Slot] = &[Slot::N, Slot::M];

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new(
            "poly-shift-prop",
            "E_{n+m}^(a)(lam) = sum_k S2(m,k) C(a+k-1,k) (-lam/2)^k k! E_n^(a+k)(k;lam)",
            NM_ALPHA_LAMBDA,
            Shape::Pair,
            prop_euler,
        ),
        Identity::new(
            "poly-shift-prop.bernoulli",
            "B_{n+m+l}^(l)(lam) / C(n+m+l,l) = sum_k S2(m,k) C(n+l+k,n)^-1 l (-lam)^k / (l+k) B_{n+l+k}^(l+k)(k;lam)",
            NM_L_LAMBDA,
            Shape::Pair,
            prop_bernoulli,
        ),
        Identity::new(
            "poly-shift-theorem.apostol-euler-higher.reflection",
            "E_n^(a+m)(m;lam) = (-1)^n lam^-(a+m) E_n^(a+m)(a;1/lam)",
            NM_ALPHA_LAMBDA,
            Shape::Pair,
            euler_higher_apostol_reflection,
        )
        .integer_alpha(),
        Identity::new(
            "poly-shift-theorem.apostol-euler-higher.stirling",
            "E_n^(a+m)(m;lam) = (2/lam)^m / m! C(a+m-1,m)^-1 sum_k (-1)^k [m,k] E_{n+k}^(a)(lam)",
            NM_ALPHA_LAMBDA,
            Shape::Pair,
            euler_higher_apostol_stirling,
        ),
        Identity::new(
            "poly-shift-theorem.euler-higher.reflection",
            "E_n^(a+m)(m) = (-1)^n E_n^(a+m)(a)",
            NM_ALPHA,
            Shape::Pair,
            euler_higher_reflection,
        ),
        Identity::new(
            "poly-shift-theorem.euler-higher.stirling",
            "E_n^(a+m)(m) = 2^m / (m! C(a+m-1,m)) sum_k (-1)^k [m,k] E_{n+k}^(a)",
            NM_ALPHA,
            Shape::Pair,
            euler_higher_stirling,
        ),
        Identity::new(
            "poly-shift-theorem.apostol-euler.reflection",
            "E_n^(m+1)(m;lam) = (-1)^n lam^-(m+1) E_n^(m+1)(1;1/lam)",
            NM_LAMBDA,
            Shape::Pair,
            euler_apostol_reflection,
        ),
        Identity::new(
            "poly-shift-theorem.apostol-euler.stirling",
            "E_n^(m+1)(m;lam) = (2/lam)^m / m! sum_k (-1)^k [m,k] E_{n+k}(lam)",
            NM_LAMBDA,
            Shape::Pair,
            euler_apostol_stirling,
        ),
        Identity::new(
            "poly-shift-theorem.euler.reflection",
            "E_n^(m+1)(m) = (-1)^n E_n^(m+1)(1)",
            NM,
            Shape::Pair,
            euler_reflection,
        ),
        Identity::new(
            "poly-shift-theorem.euler.stirling",
            "E_n^(m+1)(m) = 2^m / m! sum_k (-1)^k [m,k] E_{n+k}",
            NM,
            Shape::Pair,
            euler_stirling,
        ),
        Identity::new(
            "poly-shift-theorem.apostol-bernoulli-higher.reflection",
            "B_{n+m+l}^(m+l)(m;lam) = (-1)^(n+m+l) lam^-(m+l) B_{n+m+l}^(m+l)(l;1/lam)",
            NM_L_LAMBDA,
            Shape::Pair,
            bernoulli_higher_apostol_reflection,
        ),
        Identity::new(
            "poly-shift-theorem.apostol-bernoulli-higher.stirling",
            "B_{n+m+l}^(m+l)(m;lam) = (l+m)/(l lam^m) C(n+m+l,n) sum_k (-1)^k [m,k] C(n+l+k,l)^-1 B_{n+l+k}^(l)(lam)",
            NM_L_LAMBDA,
            Shape::Pair,
            bernoulli_higher_apostol_stirling,
        ),
        Identity::new(
            "poly-shift-theorem.bernoulli-higher.reflection",
            "B_{n+m+l}^(m+l)(m) = (-1)^(n+m+l) B_{n+m+l}^(m+l)(l)",
            NM_L,
            Shape::Pair,
            bernoulli_higher_reflection,
        ),
        Identity::new(
            "poly-shift-theorem.bernoulli-higher.stirling",
            "B_{n+m+l}^(m+l)(m) = (l+m)/l C(n+m+l,n) sum_k (-1)^k [m,k] C(n+l+k,l)^-1 B_{n+l+k}^(l)",
            NM_L,
            Shape::Pair,
            bernoulli_higher_stirling,
        ),
        Identity::new(
            "poly-shift-theorem.apostol-bernoulli.reflection",
            "B_{n+m+1}^(m+1)(m;lam) = (-1)^(n+m+1) lam^-(m+1) B_{n+m+1}^(m+1)(1;1/lam)",
            NM_LAMBDA,
            Shape::Pair,
            bernoulli_apostol_reflection,
        ),
        Identity::new(
            "poly-shift-theorem.apostol-bernoulli.stirling",
            "B_{n+m+1}^(m+1)(m;lam) = (m+1)/lam^m C(n+m+1,n) sum_k (-1)^k [m,k] B_{n+k+1}(lam) / (n+k+1)",
            NM_LAMBDA,
            Shape::Pair,
            bernoulli_apostol_stirling,
        ),
        Identity::new(
            "poly-shift-theorem.bernoulli.reflection",
            "B_{n+m+1}^(m+1)(m) = (-1)^(n+m+1) B_{n+m+1}^(m+1)(1)",
            NM,
            Shape::Pair,
            bernoulli_reflection,
        ),
        Identity::new(
            "poly-shift-theorem.bernoulli.stirling",
            "B_{n+m+1}^(m+1)(m) = (m+1) C(n+m+1,n) sum_k (-1)^k [m,k] B_{n+k+1} / (n+k+1)",
            NM,
            Shape::Pair,
            bernoulli_stirling,
        ),
    ]
}

fn prop_euler(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, m, a, lam) = (p.n(), p.m(), p.alpha()?, p.lambda());
    let lhs = apostol_euler_higher(n + m, &a, &lam)?;
    let half = -&lam / rat(2);
    let terms = (0..=m).map(|k| {
        let coef = s2(m, k) * rising(&a, k) * pow_u(&half, k) * fact(k);
        apostol_euler_poly(n, &(&a + r(k)), &r(k), &lam).map(|v| v.mul_rational(&coef))
    });
    Ok((lhs.into(), ssum(terms)?.into()))
}

fn prop_bernoulli(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, m, l, lam) = (p.n(), p.m(), p.l()?, p.lambda());
    let top = n + m + l;
    let lhs = apostol_bernoulli_value(top, l, &rat(0), &lam) / c(top, l);
    let neg = -&lam;
    let mut rhs = Rational::from_integer(0.into());
    for k in 0..=m {
        rhs += s2(m, k) / c(n + l + k, n) * r(l) * pow_u(&neg, k) / r(l + k)
            * apostol_bernoulli_value(n + l + k, k + l, &r(k), &lam);
    }
    Ok((lhs.into(), rhs.into()))
}

/// `E_n^{(a+m)}(m;λ)` against `(-1)^n λ^{-e} E_n^{(a+m)}(a;1/λ)` with `e = lambda_exp`.
pub(super) fn euler_reflection_with(
    n: u64,
    m: u64,
    a: &Rational,
    lam: &Rational,
    lambda_exp: u64,
) -> Result<(Value, Value)> {
    let order = a + r(m);
    let lhs = apostol_euler_poly(n, &order, &r(m), lam)?;
    let other = apostol_euler_poly(n, &order, a, &recip(lam)?)?;
    let rhs = other.mul_rational(&(sgn(n) * inv_pow(lam, lambda_exp)?));
    Ok((lhs.into(), rhs.into()))
}

fn euler_stirling_with(n: u64, m: u64, a: &Rational, lam: &Rational) -> Result<(Value, Value)> {
    let lhs = apostol_euler_poly(n, &(a + r(m)), &r(m), lam)?;
    let pre = pow_u(&(rat(2) * recip(lam)?), m) / (fact(m) * rising(a, m));
    let terms = (0..=m).map(|k| {
        let coef = sgn(k) * s1(m, k) * &pre;
        apostol_euler_higher(n + k, a, lam).map(|v| v.mul_rational(&coef))
    });
    Ok((lhs.into(), ssum(terms)?.into()))
}

fn euler_higher_apostol_reflection(p: &GridPoint) -> Result<(Value, Value)> {
    let a = p.alpha_int()?;
    euler_reflection_with(p.n(), p.m(), &r(a), &p.lambda(), a + p.m())
}

fn euler_higher_apostol_stirling(p: &GridPoint) -> Result<(Value, Value)> {
    euler_stirling_with(p.n(), p.m(), &p.alpha()?, &p.lambda())
}

fn euler_higher_reflection(p: &GridPoint) -> Result<(Value, Value)> {
    euler_reflection_with(p.n(), p.m(), &p.alpha()?, &rat(1), 0)
}

fn euler_higher_stirling(p: &GridPoint) -> Result<(Value, Value)> {
    euler_stirling_with(p.n(), p.m(), &p.alpha()?, &rat(1))
}

fn euler_apostol_reflection(p: &GridPoint) -> Result<(Value, Value)> {
    euler_reflection_with(p.n(), p.m(), &rat(1), &p.lambda(), p.m() + 1)
}

fn euler_apostol_stirling(p: &GridPoint) -> Result<(Value, Value)> {
    euler_stirling_with(p.n(), p.m(), &rat(1), &p.lambda())
}

fn euler_reflection(p: &GridPoint) -> Result<(Value, Value)> {
    euler_reflection_with(p.n(), p.m(), &rat(1), &rat(1), 0)
}

fn euler_stirling(p: &GridPoint) -> Result<(Value, Value)> {
    euler_stirling_with(p.n(), p.m(), &rat(1), &rat(1))
}

/// `B_N^{(m+l)}(m;λ)` against `(-1)^N λ^{-e} B_N^{(m+l)}(l;1/λ)`, `N = n+m+l`.
pub(super) fn bernoulli_reflection_with(
    n: u64,
    m: u64,
    l: u64,
    lam: &Rational,
    lambda_exp: u64,
) -> Result<(Value, Value)> {
    let top = n + m + l;
    let lhs = apostol_bernoulli_value(top, m + l, &r(m), lam);
    let other = apostol_bernoulli_value(top, m + l, &r(l), &recip(lam)?);
    let rhs = sgn(top) * inv_pow(lam, lambda_exp)? * other;
    Ok((lhs.into(), rhs.into()))
}

/// `B_N^{(m+l)}(m;λ)` against `prefactor · Σ_k (-1)^k [m,k] C(n+l+k,l)^{-1} B_{n+l+k}^{(l)}(λ)`.
pub(super) fn bernoulli_stirling_with(
    n: u64,
    m: u64,
    l: u64,
    lam: &Rational,
    prefactor: Rational,
) -> Result<(Value, Value)> {
    let top = n + m + l;
    let lhs = apostol_bernoulli_value(top, m + l, &r(m), lam);
    let mut sum = Rational::from_integer(0.into());
    for k in 0..=m {
        sum += sgn(k) * s1(m, k) / c(n + l + k, l)
            * apostol_bernoulli_value(n + l + k, l, &rat(0), lam);
    }
    Ok((lhs.into(), (prefactor * sum).into()))
}

/// `(l+m)/(l λ^m) C(n+m+l, n)`.
fn bernoulli_prefactor(n: u64, m: u64, l: u64, lam: &Rational) -> Result<Rational> {
    Ok(r(l + m) / r(l) * checked_pow(lam, -(m as i64))? * c(n + m + l, n))
}

fn bernoulli_higher_apostol_reflection(p: &GridPoint) -> Result<(Value, Value)> {
    let (m, l) = (p.m(), p.l()?);
    bernoulli_reflection_with(p.n(), m, l, &p.lambda(), m + l)
}

fn bernoulli_higher_apostol_stirling(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, m, l, lam) = (p.n(), p.m(), p.l()?, p.lambda());
    bernoulli_stirling_with(n, m, l, &lam, bernoulli_prefactor(n, m, l, &lam)?)
}

fn bernoulli_higher_reflection(p: &GridPoint) -> Result<(Value, Value)> {
    bernoulli_reflection_with(p.n(), p.m(), p.l()?, &rat(1), 0)
}

fn bernoulli_higher_stirling(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, m, l) = (p.n(), p.m(), p.l()?);
    bernoulli_stirling_with(n, m, l, &rat(1), bernoulli_prefactor(n, m, l, &rat(1))?)
}

fn bernoulli_apostol_reflection(p: &GridPoint) -> Result<(Value, Value)> {
    bernoulli_reflection_with(p.n(), p.m(), 1, &p.lambda(), p.m() + 1)
}

fn bernoulli_apostol_stirling(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, m, lam) = (p.n(), p.m(), p.lambda());
    bernoulli_stirling_with(n, m, 1, &lam, bernoulli_prefactor(n, m, 1, &lam)?)
}

fn bernoulli_reflection(p: &GridPoint) -> Result<(Value, Value)> {
    bernoulli_reflection_with(p.n(), p.m(), 1, &rat(1), 0)
}

fn bernoulli_stirling(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, m) = (p.n(), p.m());
    bernoulli_stirling_with(n, m, 1, &rat(1), bernoulli_prefactor(n, m, 1, &rat(1))?)
}

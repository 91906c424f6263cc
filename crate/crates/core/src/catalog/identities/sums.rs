//! Finite sums against Stirling numbers of the first kind, and values of the
//! diagonal Bernoulli polynomials.

use super::{c, euler_scaled, fact, inv_pow, r, recip, rising, rsum, s1, sgn, ssum};
use crate::catalog::{GridPoint, Identity, Shape, Slot, Value};
use crate::error::Result;
use crate::exact::{frac, pow_u, rat, Rational};
use crate::families::{
    apostol_bernoulli_higher, apostol_euler_higher, bernoulli_higher, bernoulli_higher_at,
    bernoulli_second_kind,
};

const M_ALPHA_LAMBDA: &[Slot] = &[Slot::M, Slot::Alpha, Slot::Lambda];
const M_ALPHA: &[Slot] = &[Slot::M, Slot::Alpha];
const M_LAMBDA: &[Slot] = &[Slot::M, Slot::Lambda];
const M_L_LAMBDA: &[Slot] = &[Slot::M, Slot::L, Slot::Lambda];
const M_L: &[Slot] = &[Slot::M, Slot::L];
const M: &[Slot] = &[Slot::M];
const N: &[Slot] = &[Slot::N];

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new(
            "finite-sums",
            "sum_k (-1)^k [m,k] E_k^(a)(lam) = 2^a lam^m m! / (lam+1)^(a+m) C(a+m-1,m)",
            M_ALPHA_LAMBDA,
            Shape::Single,
            euler_sum,
        ),
        Identity::new(
            "finite-sums.euler-higher",
            "sum_k (-1)^k [m,k] E_k^(a) = m!/2^m C(a+m-1,m)",
            M_ALPHA,
            Shape::Single,
            euler_sum_higher,
        ),
        Identity::new(
            "finite-sums.apostol-euler",
            "sum_k (-1)^k [m,k] E_k(lam) = 2 lam^m m! / (lam+1)^(m+1)",
            M_LAMBDA,
            Shape::Single,
            euler_sum_apostol,
        ),
        Identity::new(
            "finite-sums.euler",
            "sum_k (-1)^k [m,k] E_k = m!/2^m",
            M,
            Shape::Single,
            euler_sum_classical,
        ),
        Identity::new(
            "finite-sums.apostol-bernoulli-higher",
            "sum_k (-1)^k [m,k] C(l+k,l)^-1 B_{l+k}^(l)(lam) = l (m+l-1)! lam^m / (lam-1)^(m+l)",
            M_L_LAMBDA,
            Shape::Single,
            bernoulli_sum_check,
        ),
        Identity::new(
            "finite-sums.apostol-bernoulli",
            "sum_k (-1)^k [m,k] B_{k+1}(lam) / (k+1) = m! lam^m / (lam-1)^(m+1)",
            M_LAMBDA,
            Shape::Single,
            bernoulli_sum_apostol,
        ),
        Identity::new(
            "diag-bernoulli-values.reflection",
            "B_{m+l}^(m+l)(m) = (-1)^(m+l) B_{m+l}^(m+l)(l)",
            M_L,
            Shape::Single,
            diag_reflection,
        ),
        Identity::new(
            "diag-bernoulli-values.stirling",
            "B_{m+l}^(m+l)(m) = (l+m)/l sum_k (-1)^k [m,k] C(l+k,l)^-1 B_{l+k}^(l)",
            M_L,
            Shape::Single,
            diag_stirling,
        ),
        Identity::new(
            "diag-bernoulli-values.classical",
            "(-1)^(m+1) B_{m+1}^(m+1)(1) = (m+1) sum_k (-1)^k [m,k] B_{k+1} / (k+1)",
            M,
            Shape::Single,
            diag_classical,
        ),
        Identity::new(
            "diag-bernoulli-values.howard",
            "B_n^(n)(1) = B_n^(n-1) / (1-n)",
            N,
            Shape::Single,
            diag_howard,
        )
        .min_index(2),
        Identity::new(
            "diag-bernoulli-values.second-kind",
            "B_n^(n)(1) = n! c_n, with sum c_n t^n = t / log(1+t)",
            N,
            Shape::Single,
            diag_second_kind,
        ),
    ]
}

fn euler_lhs(m: u64, a: &Rational, lam: &Rational) -> Result<crate::scaled::ScaledRational> {
    ssum(
        (0..=m)
            .map(|k| apostol_euler_higher(k, a, lam).map(|v| v.mul_rational(&(sgn(k) * s1(m, k))))),
    )
}

fn euler_sum(p: &GridPoint) -> Result<(Value, Value)> {
    let (m, a, lam) = (p.m(), p.alpha()?, p.lambda());
    let lhs = euler_lhs(m, &a, &lam)?;
    let mant = pow_u(&lam, m) * fact(m) * inv_pow(&(&lam + rat(1)), m)? * rising(&a, m);
    Ok((lhs.into(), euler_scaled(mant, &lam, &a)?.into()))
}

fn euler_sum_higher(p: &GridPoint) -> Result<(Value, Value)> {
    let (m, a) = (p.m(), p.alpha()?);
    let lhs = euler_lhs(m, &a, &rat(1))?;
    Ok((
        lhs.into(),
        (fact(m) * frac(1, 1 << m) * rising(&a, m)).into(),
    ))
}

fn euler_sum_apostol(p: &GridPoint) -> Result<(Value, Value)> {
    let (m, lam) = (p.m(), p.lambda());
    let lhs = euler_lhs(m, &rat(1), &lam)?;
    let rhs = rat(2) * pow_u(&lam, m) * fact(m) * inv_pow(&(&lam + rat(1)), m + 1)?;
    Ok((lhs.into(), rhs.into()))
}

fn euler_sum_classical(p: &GridPoint) -> Result<(Value, Value)> {
    let m = p.m();
    let lhs = euler_lhs(m, &rat(1), &rat(1))?;
    Ok((lhs.into(), (fact(m) * frac(1, 1 << m)).into()))
}

/// `Σ_k (-1)^k [m,k] C(l+k,l)^{-1} B_{l+k}^{(l)}(λ)` for `λ ≠ 1`.
pub(super) fn bernoulli_sum(m: u64, l: u64, lam: &Rational) -> Result<Rational> {
    let mut s = Rational::from_integer(0.into());
    for k in 0..=m {
        s += sgn(k) * s1(m, k) / c(l + k, l) * apostol_bernoulli_higher(l + k, l, lam)?;
    }
    Ok(s)
}

fn bernoulli_sum_check(p: &GridPoint) -> Result<(Value, Value)> {
    let (m, l, lam) = (p.m(), p.l()?, p.lambda());
    let lhs = bernoulli_sum(m, l, &lam)?;
    let rhs = r(l) * fact(m + l - 1) * pow_u(&lam, m) * inv_pow(&(&lam - rat(1)), m + l)?;
    Ok((lhs.into(), rhs.into()))
}

fn bernoulli_sum_apostol(p: &GridPoint) -> Result<(Value, Value)> {
    let (m, lam) = (p.m(), p.lambda());
    let mut lhs = Rational::from_integer(0.into());
    for k in 0..=m {
        lhs += sgn(k) * s1(m, k) * apostol_bernoulli_higher(k + 1, 1, &lam)? / r(k + 1);
    }
    let rhs = fact(m) * pow_u(&lam, m) * inv_pow(&(&lam - rat(1)), m + 1)?;
    Ok((lhs.into(), rhs.into()))
}

/// `Σ_k (-1)^k [m,k] C(l+k,l)^{-1} B_{l+k}^{(l)}`.
pub(super) fn norlund_sum(m: u64, l: u64) -> Rational {
    rsum((0..=m).map(|k| sgn(k) * s1(m, k) / c(l + k, l) * bernoulli_higher(l + k, l)))
}

fn diag_reflection(p: &GridPoint) -> Result<(Value, Value)> {
    let (m, l) = (p.m(), p.l()?);
    let lhs = bernoulli_higher_at(m + l, m + l, &r(m));
    let rhs = sgn(m + l) * bernoulli_higher_at(m + l, m + l, &r(l));
    Ok((lhs.into(), rhs.into()))
}

fn diag_stirling(p: &GridPoint) -> Result<(Value, Value)> {
    let (m, l) = (p.m(), p.l()?);
    let lhs = bernoulli_higher_at(m + l, m + l, &r(m));
    Ok((lhs.into(), (r(l + m) / r(l) * norlund_sum(m, l)).into()))
}

fn diag_classical(p: &GridPoint) -> Result<(Value, Value)> {
    let m = p.m();
    let lhs = sgn(m + 1) * bernoulli_higher_at(m + 1, m + 1, &rat(1));
    Ok((lhs.into(), (r(m + 1) * norlund_sum(m, 1)).into()))
}

fn diag_howard(p: &GridPoint) -> Result<(Value, Value)> {
    let n = p.n();
    let lhs = bernoulli_higher_at(n, n, &rat(1));
    let rhs = bernoulli_higher(n, n - 1) * recip(&(rat(1) - r(n)))?;
    Ok((lhs.into(), rhs.into()))
}

fn diag_second_kind(p: &GridPoint) -> Result<(Value, Value)> {
    let n = p.n();
    let lhs = bernoulli_higher_at(n, n, &rat(1));
    Ok((lhs.into(), (fact(n) * bernoulli_second_kind(n)).into()))
}

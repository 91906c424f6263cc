//! Apostol–Euler recurrences, explicit forms and auxiliary relations.

use super::{c, euler_scaled, fact, inv_pow, r, recip, rising, rsum, s2, sgn, ssum, zpow};
use crate::catalog::{GridPoint, Identity, Shape, Slot, Value};
use crate::error::Result;
use crate::exact::{checked_pow, frac, pow_u, rat, Rational};
use crate::families::{apostol_euler_by_series, apostol_euler_higher, apostol_euler_poly};

const NM_ALPHA_LAMBDA: &[Slot] = &[Slot::N, Slot::M, Slot::Alpha, Slot::Lambda];
const NM_ALPHA: &[Slot] = &[Slot::N, Slot::M, Slot::Alpha];
const NM_LAMBDA: &[Slot] = &[Slot::N, Slot::M, Slot::Lambda];
const NM: &[Slot] = &[Slot::N, Slot::M];
const M_ALPHA_LAMBDA: &[Slot] = &[Slot::M, Slot::Alpha, Slot::Lambda];
const M_ALPHA: &[Slot] = &[Slot::M, Slot::Alpha];
const M_LAMBDA: &[Slot] = &[Slot::M, Slot::Lambda];
const M: &[Slot] = &[Slot::M];
const N_ALPHA_LAMBDA_X: &[Slot] = &[Slot::N, Slot::Alpha, Slot::Lambda, Slot::X];

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new(
            "apostol-euler-recurrence",
            "E_{n+m}^(a)(lam) = sum_k sum_j C(n,j) S2(m,k) C(a+k-1,k) (-lam)^k k! k^(n-j) / 2^k E_j^(a+k)(lam)",
            NM_ALPHA_LAMBDA,
            Shape::Pair,
            recurrence,
        ),
        Identity::new(
            "apostol-euler-recurrence.euler-higher",
            "E_{n+m}^(a) = sum_k sum_j C(n,j) S2(m,k) C(a+k-1,k) k! k^(n-j) / (-2)^k E_j^(a+k)",
            NM_ALPHA,
            Shape::Pair,
            recurrence_higher,
        ),
        Identity::new(
            "apostol-euler-recurrence.apostol-euler",
            "E_{n+m}(lam) = sum_k sum_j C(n,j) S2(m,k) (-lam)^k k! k^(n-j) / 2^k E_j^(k+1)(lam)",
            NM_LAMBDA,
            Shape::Pair,
            recurrence_apostol,
        ),
        Identity::new(
            "apostol-euler-recurrence.euler",
            "E_{n+m} = sum_k sum_j S2(m,k) C(n,j) (-1)^k k! k^(n-j) / 2^k E_j^(k+1)",
            NM,
            Shape::Pair,
            recurrence_classical,
        ),
        Identity::new(
            "apostol-euler-explicit",
            "E_m^(a)(lam) = 2^a sum_k S2(m,k) C(a+k-1,k) k! (-lam)^k / (lam+1)^(a+k)",
            M_ALPHA_LAMBDA,
            Shape::Single,
            explicit,
        ),
        Identity::new(
            "apostol-euler-explicit.euler-higher",
            "E_m^(a) = sum_k S2(m,k) C(a+k-1,k) (-1)^k k! / 2^k",
            M_ALPHA,
            Shape::Single,
            explicit_higher,
        ),
        Identity::new(
            "apostol-euler-explicit.apostol-euler",
            "E_m(lam) = 2 sum_k S2(m,k) (-lam)^k k! / (lam+1)^(k+1)",
            M_LAMBDA,
            Shape::Single,
            explicit_apostol,
        ),
        Identity::new(
            "apostol-euler-explicit.euler",
            "E_m = sum_k S2(m,k) (-1)^k k! / 2^k",
            M,
            Shape::Single,
            explicit_classical,
        ),
        Identity::new(
            "aux-wang",
            "(a lam/2) E_n^(a+1)(x+1;lam) = x E_n^(a)(x;lam) - E_{n+1}^(a)(x;lam)",
            N_ALPHA_LAMBDA_X,
            Shape::Single,
            wang,
        ),
        Identity::new(
            "aux-euler-reflection",
            "E_n^(a)(a-x;lam) = (-1)^n lam^-a E_n^(a)(x;1/lam)",
            N_ALPHA_LAMBDA_X,
            Shape::Single,
            reflection,
        )
        .integer_alpha(),
    ]
}

pub(super) fn recurrence_at(
    n: u64,
    m: u64,
    a: &Rational,
    lam: &Rational,
    with_power: bool,
) -> Result<(Value, Value)> {
    let lhs = apostol_euler_higher(n + m, a, lam)?;
    let neg = -lam;
    let mut terms = Vec::new();
    for k in 0..=m {
        for j in 0..=n {
            let kp = if with_power { zpow(k, n - j) } else { rat(1) };
            let coef =
                c(n, j) * s2(m, k) * rising(a, k) * pow_u(&neg, k) * fact(k) * kp * frac(1, 1 << k);
            terms.push(apostol_euler_higher(j, &(a + r(k)), lam).map(|v| v.mul_rational(&coef)));
        }
    }
    Ok((lhs.into(), ssum(terms)?.into()))
}

fn recurrence(p: &GridPoint) -> Result<(Value, Value)> {
    recurrence_at(p.n(), p.m(), &p.alpha()?, &p.lambda(), true)
}

fn recurrence_higher(p: &GridPoint) -> Result<(Value, Value)> {
    recurrence_at(p.n(), p.m(), &p.alpha()?, &rat(1), true)
}

fn recurrence_apostol(p: &GridPoint) -> Result<(Value, Value)> {
    recurrence_at(p.n(), p.m(), &rat(1), &p.lambda(), true)
}

fn recurrence_classical(p: &GridPoint) -> Result<(Value, Value)> {
    recurrence_at(p.n(), p.m(), &rat(1), &rat(1), true)
}

fn explicit(p: &GridPoint) -> Result<(Value, Value)> {
    let (m, a, lam) = (p.m(), p.alpha()?, p.lambda());
    let lhs = apostol_euler_by_series(m, &a, &rat(0), &lam)?;
    let ratio = -&lam * recip(&(&lam + rat(1)))?;
    let mant = rsum((0..=m).map(|k| s2(m, k) * rising(&a, k) * fact(k) * pow_u(&ratio, k)));
    Ok((lhs.into(), euler_scaled(mant, &lam, &a)?.into()))
}

fn explicit_higher(p: &GridPoint) -> Result<(Value, Value)> {
    let (m, a) = (p.m(), p.alpha()?);
    let lhs = apostol_euler_by_series(m, &a, &rat(0), &rat(1))?;
    let rhs = rsum((0..=m).map(|k| s2(m, k) * rising(&a, k) * sgn(k) * fact(k) * frac(1, 1 << k)));
    Ok((lhs.into(), rhs.into()))
}

fn explicit_apostol(p: &GridPoint) -> Result<(Value, Value)> {
    let (m, lam) = (p.m(), p.lambda());
    let lhs = apostol_euler_by_series(m, &rat(1), &rat(0), &lam)?;
    let d = &lam + rat(1);
    let mut rhs = Rational::from_integer(0.into());
    for k in 0..=m {
        rhs += s2(m, k) * pow_u(&-&lam, k) * fact(k) * inv_pow(&d, k + 1)?;
    }
    Ok((lhs.into(), (rat(2) * rhs).into()))
}

fn explicit_classical(p: &GridPoint) -> Result<(Value, Value)> {
    let m = p.m();
    let lhs = apostol_euler_by_series(m, &rat(1), &rat(0), &rat(1))?;
    let rhs = rsum((0..=m).map(|k| s2(m, k) * sgn(k) * fact(k) * frac(1, 1 << k)));
    Ok((lhs.into(), rhs.into()))
}

fn wang(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, a, lam, x) = (p.n(), p.alpha()?, p.lambda(), p.x());
    let lhs = apostol_euler_poly(n, &(&a + rat(1)), &(&x + rat(1)), &lam)?
        .mul_rational(&(&a * &lam / rat(2)));
    let first = apostol_euler_poly(n, &a, &x, &lam)?.mul_rational(&x);
    let second = apostol_euler_poly(n + 1, &a, &x, &lam)?.mul_rational(&rat(-1));
    Ok((lhs.into(), first.add(&second)?.into()))
}

fn reflection(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, a, lam, x) = (p.n(), p.alpha_int()?, p.lambda(), p.x());
    let ar = r(a);
    let lhs = apostol_euler_poly(n, &ar, &(&ar - &x), &lam)?;
    let other = apostol_euler_poly(n, &ar, &x, &recip(&lam)?)?;
    let rhs = other.mul_rational(&(sgn(n) * checked_pow(&lam, -(a as i64))?));
    Ok((lhs.into(), rhs.into()))
}

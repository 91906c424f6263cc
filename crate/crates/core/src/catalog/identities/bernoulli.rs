//! Apostol–Bernoulli recurrences, explicit forms and the higher-order
//! Bernoulli recurrence at `λ = 1`.

use super::{c, fact, inv_pow, r, recip, require_not_one, rsum, s1, s2, sgn, zpow};
use crate::catalog::{GridPoint, Identity, Shape, Slot, Value};
use crate::combinatorics::inverse_stirling_transform;
use crate::error::Result;
use crate::exact::{pow_u, rat, Rational};
use crate::families::{
    apostol_bernoulli_by_series, apostol_bernoulli_higher, apostol_bernoulli_value,
    bernoulli_higher, bernoulli_higher_at, geometric_poly,
};

const N_L_LAMBDA: &[Slot] = &[Slot::N, Slot::L, Slot::Lambda];
const NM_L_LAMBDA: &[Slot] = &[Slot::N, Slot::M, Slot::L, Slot::Lambda];
const NM_LAMBDA: &[Slot] = &[Slot::N, Slot::M, Slot::Lambda];
const M_L_LAMBDA: &[Slot] = &[Slot::M, Slot::L, Slot::Lambda];
const N_LAMBDA: &[Slot] = &[Slot::N, Slot::Lambda];
const M_L: &[Slot] = &[Slot::M, Slot::L];
const M: &[Slot] = &[Slot::M];
const N_ALPHA_LAMBDA_X: &[Slot] = &[Slot::N, Slot::Alpha, Slot::Lambda, Slot::X];

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new(
            "apostol-bernoulli-explicit",
            "B_n^(l)(lam) = l! C(n,l) sum_{k<=n-l} S2(n-l,k) C(l+k-1,k) (-lam)^k k! / (lam-1)^(l+k)",
            N_L_LAMBDA,
            Shape::Single,
            explicit,
        ),
        Identity::new(
            "apostol-bernoulli-recurrence",
            "B_{n+m+l}^(l)(lam) / (C(n+m+l,l) l) = sum_k sum_j S2(m,k) C(n,j) C(l+k+j,j)^-1 (-lam)^k k^(n-j) / (l+k) B_{l+k+j}^(l+k)(lam)",
            NM_L_LAMBDA,
            Shape::Pair,
            recurrence,
        ),
        Identity::new(
            "apostol-bernoulli-recurrence.apostol-bernoulli",
            "B_{n+m+1}(lam) / (n+m+1) = sum_k sum_j S2(m,k) C(n,j) C(k+j+1,j)^-1 (-lam)^k k^(n-j) / (k+1) B_{j+k+1}^(k+1)(lam)",
            NM_LAMBDA,
            Shape::Pair,
            recurrence_apostol,
        ),
        Identity::new(
            "apostol-bernoulli-diag-recurrence",
            "B_{m+l}^(l)(lam) = l C(m+l,l) sum_k S2(m,k) (-lam)^k / (l+k) B_{l+k}^(l+k)(lam)",
            M_L_LAMBDA,
            Shape::Single,
            diag_recurrence,
        ),
        Identity::new(
            "apostol-bernoulli-diag-recurrence.diagonal",
            "B_n^(n)(lam) = n! / (lam-1)^n",
            N_LAMBDA,
            Shape::Single,
            diagonal,
        ),
        Identity::new(
            "apostol-bernoulli-classical",
            "B_n(lam) = n/(lam-1) sum_{k<=n-1} S2(n-1,k) k! (lam/(1-lam))^k",
            N_LAMBDA,
            Shape::Single,
            classical,
        )
        .min_index(1),
        Identity::new(
            "apostol-bernoulli-classical.geometric",
            "B_n(lam) = n/(lam-1) w_{n-1}(lam/(1-lam))",
            N_LAMBDA,
            Shape::Connection,
            classical_geometric,
        )
        .min_index(1),
        Identity::new(
            "bernoulli-higher-recurrence",
            "B_{m+l}^(l) = l C(m+l,l) sum_k S2(m,k) (-1)^k / (l+k) B_{l+k}^(l+k)(k)",
            M_L,
            Shape::Single,
            higher_recurrence,
        ),
        Identity::new(
            "bernoulli-higher-recurrence.stirling",
            "B_{m+l}^(m+l)(m) = (l+m)/l sum_k (-1)^k [m,k] C(k+l,l)^-1 B_{k+l}^(l)",
            M_L,
            Shape::Single,
            higher_stirling,
        ),
        Identity::new(
            "bernoulli-higher-recurrence.norlund",
            "B_{m+1}^(m+1)(m) = (m+1) sum_k (-1)^k [m,k] B_{k+1} / (k+1)",
            M,
            Shape::Single,
            higher_norlund,
        ),
        Identity::new(
            "aux-srivastava-luo",
            "a lam B_n^(a+1)(x+1;lam) = n x B_{n-1}^(a)(x;lam) + (a-n) B_n^(a)(x;lam)",
            N_ALPHA_LAMBDA_X,
            Shape::Single,
            srivastava_luo,
        )
        .integer_alpha()
        .min_index(1),
    ]
}

fn explicit(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, l, lam) = (p.n(), p.l()?, p.lambda());
    let rhs = apostol_bernoulli_higher(n, l, &lam)?;
    let lhs = apostol_bernoulli_by_series(n, l, &rat(0), &lam)?;
    Ok((lhs.into(), rhs.into()))
}

/// Apostol–Bernoulli recurrence with the number values supplied by `value(n, l)`.
pub(super) fn recurrence_with(
    n: u64,
    m: u64,
    l: u64,
    lam: &Rational,
    value: &dyn Fn(u64, u64) -> Result<Rational>,
) -> Result<(Value, Value)> {
    let top = n + m + l;
    let lhs = value(top, l)? / (c(top, l) * r(l));
    let neg = -lam;
    let mut rhs = Rational::from_integer(0.into());
    for k in 0..=m {
        for j in 0..=n {
            let coef =
                s2(m, k) * c(n, j) / c(l + k + j, j) * pow_u(&neg, k) * zpow(k, n - j) / r(l + k);
            rhs += coef * value(l + k + j, l + k)?;
        }
    }
    Ok((lhs.into(), rhs.into()))
}

fn recurrence(p: &GridPoint) -> Result<(Value, Value)> {
    let lam = p.lambda();
    recurrence_with(p.n(), p.m(), p.l()?, &lam, &|n, l| {
        apostol_bernoulli_higher(n, l, &lam)
    })
}

fn recurrence_apostol(p: &GridPoint) -> Result<(Value, Value)> {
    let lam = p.lambda();
    recurrence_with(p.n(), p.m(), 1, &lam, &|n, l| {
        apostol_bernoulli_higher(n, l, &lam)
    })
}

/// The `n = 0` recurrence; `with_factorial` adds a `k!` to every term.
pub(super) fn diag_recurrence_with(
    m: u64,
    l: u64,
    lam: &Rational,
    with_factorial: bool,
    value: &dyn Fn(u64, u64) -> Result<Rational>,
) -> Result<(Value, Value)> {
    let lhs = value(m + l, l)?;
    let neg = -lam;
    let mut sum = Rational::from_integer(0.into());
    for k in 0..=m {
        let kf = if with_factorial { fact(k) } else { rat(1) };
        sum += s2(m, k) * pow_u(&neg, k) * kf / r(l + k) * value(l + k, l + k)?;
    }
    Ok((lhs.into(), (r(l) * c(m + l, l) * sum).into()))
}

fn diag_recurrence(p: &GridPoint) -> Result<(Value, Value)> {
    let lam = p.lambda();
    diag_recurrence_with(p.m(), p.l()?, &lam, false, &|n, l| {
        apostol_bernoulli_higher(n, l, &lam)
    })
}

fn diagonal(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, lam) = (p.n(), p.lambda());
    require_not_one(&lam)?;
    let lhs = apostol_bernoulli_by_series(n, n, &rat(0), &lam)?;
    let rhs = fact(n) * inv_pow(&(&lam - rat(1)), n)?;
    Ok((lhs.into(), rhs.into()))
}

fn classical_parts(p: &GridPoint) -> Result<(u64, Rational, Rational, Rational)> {
    let (n, lam) = (p.n(), p.lambda());
    require_not_one(&lam)?;
    let lhs = apostol_bernoulli_by_series(n, 1, &rat(0), &lam)?;
    let pre = r(n) * recip(&(&lam - rat(1)))?;
    let arg = &lam * recip(&(rat(1) - &lam))?;
    Ok((n, lhs, pre, arg))
}

fn classical(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, lhs, pre, arg) = classical_parts(p)?;
    let sum = rsum((0..n).map(|k| s2(n - 1, k) * fact(k) * pow_u(&arg, k)));
    Ok((lhs.into(), (pre * sum).into()))
}

fn classical_geometric(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, lhs, pre, arg) = classical_parts(p)?;
    Ok((lhs.into(), (pre * geometric_poly(n - 1).eval(&arg)).into()))
}

fn higher_recurrence(p: &GridPoint) -> Result<(Value, Value)> {
    let (m, l) = (p.m(), p.l()?);
    let lhs = bernoulli_higher(m + l, l);
    let sum = rsum(
        (0..=m).map(|k| s2(m, k) * sgn(k) / r(l + k) * bernoulli_higher_at(l + k, l + k, &r(k))),
    );
    Ok((lhs.into(), (r(l) * c(m + l, l) * sum).into()))
}

fn higher_stirling(p: &GridPoint) -> Result<(Value, Value)> {
    let (m, l) = (p.m(), p.l()?);
    let lhs = bernoulli_higher_at(m + l, m + l, &r(m));
    // b_k = Σ_j {k,j} a_j with a_j = (-1)^j B_{l+j}^{(l+j)}(j) / (l+j); invert for a_m.
    let b: Vec<Rational> = (0..=m)
        .map(|k| bernoulli_higher(k + l, l) / (r(l) * c(k + l, l)))
        .collect();
    let a = inverse_stirling_transform(&b);
    let rhs = sgn(m) * r(l + m) * &a[m as usize];
    Ok((lhs.into(), rhs.into()))
}

fn higher_norlund(p: &GridPoint) -> Result<(Value, Value)> {
    let m = p.m();
    let lhs = bernoulli_higher_at(m + 1, m + 1, &r(m));
    let sum = rsum((0..=m).map(|k| sgn(k) * s1(m, k) * bernoulli_higher(k + 1, 1) / r(k + 1)));
    Ok((lhs.into(), (r(m + 1) * sum).into()))
}

fn srivastava_luo(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, a, lam, x) = (p.n(), p.alpha_int()?, p.lambda(), p.x());
    let lhs = r(a) * &lam * apostol_bernoulli_value(n, a + 1, &(&x + rat(1)), &lam);
    let rhs = r(n) * &x * apostol_bernoulli_value(n - 1, a, &x, &lam)
        + (r(a) - r(n)) * apostol_bernoulli_value(n, a, &x, &lam);
    Ok((lhs.into(), rhs.into()))
}

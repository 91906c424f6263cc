//! Statements as originally printed. Each one fails somewhere on the default
//! grid; the corrected forms live in the main registry.

use num_traits::Zero;

use super::bernoulli::{diag_recurrence_with, recurrence_with};
use super::euler::recurrence_at;
use super::gf::bernoulli_laurent_numerator;
use super::shift::{bernoulli_reflection_with, bernoulli_stirling_with, euler_reflection_with};
use super::sums::{bernoulli_sum, norlund_sum};
use super::{c, fact, inv_pow, r, recip, s2, sgn, zpow};
use crate::catalog::{GridPoint, Identity, Shape, Slot, Value};
use crate::error::{Error, Result};
use crate::exact::{checked_pow, pow_u, rat, Rational};
use crate::families::{
    apostol_bernoulli_higher, apostol_euler_poly, bernoulli_higher, bernoulli_higher_at,
    bernoulli_second_kind, geometric_poly,
};
use crate::poly::Poly;

const NM: &[Slot] = &[Slot::N, Slot::M];
const NM_L: &[Slot] = &[Slot::N, Slot::M, Slot::L];
const NM_LAMBDA: &[Slot] = &[Slot::N, Slot::M, Slot::Lambda];
const NM_L_LAMBDA: &[Slot] = &[Slot::N, Slot::M, Slot::L, Slot::Lambda];
const NM_ALPHA_LAMBDA: &[Slot] = &[Slot::N, Slot::M, Slot::Alpha, Slot::Lambda];
const M_L_LAMBDA: &[Slot] = &[Slot::M, Slot::L, Slot::Lambda];
const M_LAMBDA: &[Slot] = &[Slot::M, Slot::Lambda];
const M_L: &[Slot] = &[Slot::M, Slot::L];
const M: &[Slot] = &[Slot::M];
const N: &[Slot] = &[Slot::N];
const N_L: &[Slot] = &[Slot::N, Slot::L];
const N_ALPHA_LAMBDA_X: &[Slot] = &[Slot::N, Slot::Alpha, Slot::Lambda, Slot::X];
const M_L_ORDER: &[Slot] = &[Slot::M, Slot::L, Slot::Order];

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new(
            "erratum.w-explicit",
            "w_{n+m}(x) = sum_k sum_j sum_i S2(m,k) C(n,j) S2(j,i) k^(n-j) (i+k)! x^k",
            NM,
            Shape::Pair,
            w_explicit,
        )
        .symbolic(),
        Identity::new(
            "erratum.apostol-euler-recurrence.euler",
            "E_{n+m} = sum_k sum_j S2(m,k) C(n,j) (-1)^k k! / 2^k E_j^(k+1)",
            NM,
            Shape::Pair,
            |p| recurrence_at(p.n(), p.m(), &rat(1), &rat(1), false),
        ),
        Identity::new(
            "erratum.apostol-bernoulli-diag-recurrence",
            "B_{m+l}^(l)(lam) = l C(m+l,l) sum_k S2(m,k) (-lam)^k k! / (l+k) B_{l+k}^(l+k)(lam)",
            M_L_LAMBDA,
            Shape::Single,
            |p| {
                let lam = p.lambda();
                diag_recurrence_with(p.m(), p.l()?, &lam, true, &|n, l| apostol_bernoulli_higher(n, l, &lam))
            },
        ),
        Identity::new(
            "erratum.aux-euler-reflection",
            "E_n^(a)(a-x;lam) = (-1)^n lam^-n E_n^(a)(x;1/lam)",
            N_ALPHA_LAMBDA_X,
            Shape::Single,
            euler_reflection,
        )
        .integer_alpha(),
        Identity::new(
            "erratum.poly-shift-theorem.apostol-euler-higher.reflection",
            "E_n^(a+m)(m;lam) = (-1)^n lam^-n E_n^(a+m)(a;1/lam)",
            NM_ALPHA_LAMBDA,
            Shape::Pair,
            |p| euler_reflection_with(p.n(), p.m(), &r(p.alpha_int()?), &p.lambda(), p.n()),
        )
        .integer_alpha(),
        Identity::new(
            "erratum.poly-shift-theorem.apostol-euler.reflection",
            "E_n^(m+1)(m;lam) = (-1)^n lam^-n E_n^(m+1)(1;1/lam)",
            NM_LAMBDA,
            Shape::Pair,
            |p| euler_reflection_with(p.n(), p.m(), &rat(1), &p.lambda(), p.n()),
        ),
        Identity::new(
            "erratum.poly-shift-theorem.apostol-bernoulli-higher.reflection",
            "B_N^(m+l)(m;lam) = (-1)^N lam^-N B_N^(m+l)(l;1/lam), N = n+m+l",
            NM_L_LAMBDA,
            Shape::Pair,
            |p| {
                let (n, m, l) = (p.n(), p.m(), p.l()?);
                bernoulli_reflection_with(n, m, l, &p.lambda(), n + m + l)
            },
        ),
        Identity::new(
            "erratum.poly-shift-theorem.apostol-bernoulli.reflection",
            "B_N^(m+1)(m;lam) = (-1)^N lam^-N B_N^(m+1)(1;1/lam), N = n+m+1",
            NM_LAMBDA,
            Shape::Pair,
            |p| bernoulli_reflection_with(p.n(), p.m(), 1, &p.lambda(), p.n() + p.m() + 1),
        ),
        Identity::new(
            "erratum.poly-shift-theorem.apostol-bernoulli-higher.stirling",
            "B_N^(m+l)(m;lam) = (l+m)/(l (-lam)^m) C(N,l) sum_k (-1)^k [m,k] C(n+l+k,l)^-1 B_{n+l+k}^(l)(lam)",
            NM_L_LAMBDA,
            Shape::Pair,
            |p| {
                let (n, m, l, lam) = (p.n(), p.m(), p.l()?, p.lambda());
                let pre = r(l + m) / r(l) * checked_pow(&-&lam, -(m as i64))? * c(n + m + l, l);
                bernoulli_stirling_with(n, m, l, &lam, pre)
            },
        ),
        Identity::new(
            "erratum.poly-shift-theorem.bernoulli-higher.stirling",
            "B_N^(m+l)(m) = (l+m)/l C(N,l) sum_k (-1)^k [m,k] C(n+l+k,l)^-1 B_{n+l+k}^(l)",
            NM_L,
            Shape::Pair,
            |p| {
                let (n, m, l) = (p.n(), p.m(), p.l()?);
                bernoulli_stirling_with(n, m, l, &rat(1), r(l + m) / r(l) * c(n + m + l, l))
            },
        ),
        Identity::new(
            "erratum.poly-shift-theorem.apostol-bernoulli.stirling",
            "B_N^(m+1)(m;lam) = (m+1)(n+m+1)/(-lam)^m sum_k (-1)^k [m,k] B_{n+k+1}(lam) / (n+k+1)",
            NM_LAMBDA,
            Shape::Pair,
            |p| {
                let (n, m, lam) = (p.n(), p.m(), p.lambda());
                let pre = r(m + 1) * r(n + m + 1) * checked_pow(&-&lam, -(m as i64))?;
                bernoulli_stirling_with(n, m, 1, &lam, pre)
            },
        ),
        Identity::new(
            "erratum.poly-shift-theorem.bernoulli.stirling",
            "B_N^(m+1)(m) = (m+1)(n+m+1) sum_k (-1)^k [m,k] B_{n+k+1} / (n+k+1)",
            NM,
            Shape::Pair,
            |p| {
                let (n, m) = (p.n(), p.m());
                bernoulli_stirling_with(n, m, 1, &rat(1), r(m + 1) * r(n + m + 1))
            },
        ),
        Identity::new(
            "erratum.finite-sums.apostol-bernoulli-higher",
            "sum_k (-1)^k [m,k] C(l+k,l)^-1 B_{l+k}^(l)(lam) = l (m+l-1)! (-lam)^m / ((lam-1)^(m+l) C(m+l,l))",
            M_L_LAMBDA,
            Shape::Single,
            |p| {
                let (m, l, lam) = (p.m(), p.l()?, p.lambda());
                let lhs = bernoulli_sum(m, l, &lam)?;
                let rhs = r(l) * fact(m + l - 1) * pow_u(&-&lam, m) * inv_pow(&(&lam - rat(1)), m + l)? / c(m + l, l);
                Ok((lhs.into(), rhs.into()))
            },
        ),
        Identity::new(
            "erratum.finite-sums.apostol-bernoulli",
            "sum_k (-1)^k [m,k] B_{k+1}(lam) / (k+1) = m! (-lam)^m / ((m+1)(lam-1)^(m+1))",
            M_LAMBDA,
            Shape::Single,
            |p| {
                let (m, lam) = (p.m(), p.lambda());
                let lhs = bernoulli_sum(m, 1, &lam)?;
                let rhs = fact(m) * pow_u(&-&lam, m) * inv_pow(&(&lam - rat(1)), m + 1)? / r(m + 1);
                Ok((lhs.into(), rhs.into()))
            },
        ),
        Identity::new(
            "erratum.apostol-bernoulli-recurrence.bernoulli-higher",
            "B_{n+m+l}^(l) / (C(n+m+l,l) l) = sum_k sum_j S2(m,k) C(n,j) C(l+k+j,j)^-1 (-1)^k k^(n-j) / (l+k) B_{l+k+j}^(l+k)",
            NM_L,
            Shape::Pair,
            |p| recurrence_with(p.n(), p.m(), p.l()?, &rat(1), &|n, l| Ok(bernoulli_higher(n, l))),
        ),
        Identity::new(
            "erratum.apostol-bernoulli-recurrence.bernoulli",
            "B_{n+m+1} / (n+m+1) = sum_k sum_j S2(m,k) C(n,j) C(k+j+1,j)^-1 (-1)^k k^(n-j) / (k+1) B_{j+k+1}^(k+1)",
            NM,
            Shape::Pair,
            |p| recurrence_with(p.n(), p.m(), 1, &rat(1), &|n, l| Ok(bernoulli_higher(n, l))),
        ),
        Identity::new(
            "erratum.bernoulli-higher-recurrence",
            "B_{m+l}^(l) = l C(m+l,l) sum_k S2(m,k) (-1)^k k! / (l+k) B_{l+k}^(l+k)",
            M_L,
            Shape::Single,
            |p| diag_recurrence_with(p.m(), p.l()?, &rat(1), true, &|n, l| Ok(bernoulli_higher(n, l))),
        ),
        Identity::new(
            "erratum.bernoulli-higher-recurrence.stirling",
            "B_{m+l}^(m+l) = (l+m)/(m! l) sum_k (-1)^k [m,k] C(k+l,l)^-1 B_{k+l}^(l)",
            M_L,
            Shape::Single,
            |p| {
                let (m, l) = (p.m(), p.l()?);
                let rhs = r(l + m) / (fact(m) * r(l)) * norlund_sum(m, l);
                Ok((bernoulli_higher(m + l, m + l).into(), rhs.into()))
            },
        ),
        Identity::new(
            "erratum.bernoulli-higher-recurrence.norlund",
            "B_{m+1}^(m+1) = (m+1)/m! sum_k (-1)^k [m,k] B_{k+1} / (k+1)",
            M,
            Shape::Single,
            |p| {
                let m = p.m();
                let rhs = r(m + 1) / fact(m) * norlund_sum(m, 1);
                Ok((bernoulli_higher(m + 1, m + 1).into(), rhs.into()))
            },
        ),
        Identity::new(
            "erratum.diag-bernoulli-values.stirling",
            "B_{m+l}^(m+l)(m) = (l+m)/l C(m+l,l) sum_k (-1)^k [m,k] C(l+k,l)^-1 B_{l+k}^(l)",
            M_L,
            Shape::Single,
            |p| {
                let (m, l) = (p.m(), p.l()?);
                let lhs = bernoulli_higher_at(m + l, m + l, &r(m));
                let rhs = r(l + m) / r(l) * c(m + l, l) * norlund_sum(m, l);
                Ok((lhs.into(), rhs.into()))
            },
        ),
        Identity::new(
            "erratum.diag-bernoulli-values.factorial",
            "B_{m+l}^(m+l)(m) = C(m+l,l)^-1 m! B_{m+l}^(m+l)",
            M_L,
            Shape::Single,
            |p| {
                let (m, l) = (p.m(), p.l()?);
                let lhs = bernoulli_higher_at(m + l, m + l, &r(m));
                let rhs = fact(m) / c(m + l, l) * bernoulli_higher(m + l, m + l);
                Ok((lhs.into(), rhs.into()))
            },
        ),
        Identity::new(
            "erratum.diag-bernoulli-values.restated",
            "B_n^(n)(n-l) = C(n,l)^-1 (n-l)! B_n^(n)",
            N_L,
            Shape::Single,
            |p| {
                let (n, l) = (p.n(), p.l()?);
                if l > n {
                    return Err(Error::domain("l must not exceed n"));
                }
                let lhs = bernoulli_higher_at(n, n, &r(n - l));
                let rhs = fact(n - l) / c(n, l) * bernoulli_higher(n, n);
                Ok((lhs.into(), rhs.into()))
            },
        ),
        Identity::new(
            "erratum.diag-bernoulli-values.classical",
            "B_n^(n)(1) = (-1)^n (n-1)!/n B_n^(n)",
            N,
            Shape::Single,
            |p| {
                let n = p.n();
                let lhs = bernoulli_higher_at(n, n, &rat(1));
                let rhs = sgn(n) * fact(n - 1) / r(n) * bernoulli_higher(n, n);
                Ok((lhs.into(), rhs.into()))
            },
        )
        .min_index(1),
        Identity::new(
            "erratum.diag-bernoulli-values.final-line",
            "(-1)^(m+1) B_{m+1}^(m+1)(1) = m (m+1) sum_k (-1)^k [m,k] B_{k+1} / (k+1)",
            M,
            Shape::Single,
            |p| {
                let m = p.m();
                let lhs = sgn(m + 1) * bernoulli_higher_at(m + 1, m + 1, &rat(1));
                Ok((lhs.into(), (r(m) * r(m + 1) * norlund_sum(m, 1)).into()))
            },
        ),
        Identity::new(
            "erratum.diag-bernoulli-values.second-kind",
            "c_n = (-1)^n / n^2 B_n^(n)",
            N,
            Shape::Single,
            |p| {
                let n = p.n();
                let rhs = sgn(n) / (r(n) * r(n)) * bernoulli_higher(n, n);
                Ok((bernoulli_second_kind(n).into(), rhs.into()))
            },
        )
        .min_index(1),
        Identity::new(
            "erratum.gf-apostol-bernoulli-shift.bernoulli-higher",
            "sum_n B_{n+m+l}^(l) / C(n+m+l,l) t^n/n! = l! (e^t-1)^-l w_{m,l}(-e^t/(e^t-1)) as a Laurent series",
            M_L_ORDER,
            Shape::Gf,
            gf_laurent,
        ),
    ]
}

fn w_explicit(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, m) = (p.n(), p.m());
    let mut rhs = Poly::zero();
    for k in 0..=m {
        for j in 0..=n {
            for i in 0..=j {
                let coef = s2(m, k) * c(n, j) * s2(j, i) * zpow(k, n - j) * fact(i + k);
                rhs = &rhs + &Poly::monomial(coef, k as usize);
            }
        }
    }
    Ok((geometric_poly(n + m).into(), rhs.into()))
}

fn euler_reflection(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, a, lam, x) = (p.n(), p.alpha_int()?, p.lambda(), p.x());
    let ar = r(a);
    let lhs = apostol_euler_poly(n, &ar, &(&ar - &x), &lam)?;
    let other = apostol_euler_poly(n, &ar, &x, &recip(&lam)?)?;
    let rhs = other.mul_rational(&(sgn(n) * inv_pow(&lam, n)?));
    Ok((lhs.into(), rhs.into()))
}

/// Both sides as ordinary coefficients from `t^{-(l+m)}` through `t^order`.
fn gf_laurent(p: &GridPoint) -> Result<(Value, Value)> {
    let (m, l, order) = (p.m(), p.l()?, p.order());
    let shift = (l + m) as usize;
    let mut lhs = vec![Rational::zero(); shift];
    lhs.extend((0..=order as u64).map(|n| {
        let k = n + m + l;
        bernoulli_higher(k, l) / c(k, l) / fact(n)
    }));
    let s = bernoulli_laurent_numerator(m, l, order)?;
    let rhs: Vec<Rational> = (0..=order + shift).map(|i| s.coeff(i).clone()).collect();
    Ok((Value::rational_series(lhs), Value::rational_series(rhs)))
}

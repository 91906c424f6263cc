//! Shifted generating functions, compared as EGF prefixes up to the series order.

use super::{c, euler_scaled, fact, r, require_not_one};
use crate::catalog::{GridPoint, Identity, Shape, Slot, Value};
use crate::error::{Error, Result};
use crate::exact::{rat, to_i64, Rational};
use crate::families::{
    apostol_bernoulli_higher, apostol_euler_higher, apostol_euler_mantissa_series,
    bernoulli_higher, exponential_poly, general_geometric,
};
use crate::scaled::ScaledRational;
use crate::series::Series;

const M_X: &[Slot] = &[Slot::M, Slot::X, Slot::Order];
const X: &[Slot] = &[Slot::X, Slot::Order];
const M_ALPHA_X: &[Slot] = &[Slot::M, Slot::Alpha, Slot::X, Slot::Order];
const ALPHA_X: &[Slot] = &[Slot::Alpha, Slot::X, Slot::Order];
const M_ALPHA_LAMBDA: &[Slot] = &[Slot::M, Slot::Alpha, Slot::Lambda, Slot::Order];
const M_ALPHA: &[Slot] = &[Slot::M, Slot::Alpha, Slot::Order];
const M_LAMBDA: &[Slot] = &[Slot::M, Slot::Lambda, Slot::Order];
const M_L_LAMBDA: &[Slot] = &[Slot::M, Slot::L, Slot::Lambda, Slot::Order];
const M_L: &[Slot] = &[Slot::M, Slot::L, Slot::Order];
const M: &[Slot] = &[Slot::M, Slot::Order];

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new(
            "gf-phi-shift",
            "sum_n phi_{n+m}(x) t^n/n! = exp(x(e^t-1)) phi_m(x e^t)",
            M_X,
            Shape::Gf,
            phi_shift,
        ),
        Identity::new("gf-phi-base", "sum_n phi_n(x) t^n/n! = exp(x(e^t-1))", X, Shape::Gf, phi_base),
        Identity::new(
            "gf-w-shift",
            "sum_n w_{n+m,a}(x) t^n/n! = (1-x(e^t-1))^-a w_{m,a}(x e^t/(1-x(e^t-1)))",
            M_ALPHA_X,
            Shape::Gf,
            w_shift,
        ),
        Identity::new(
            "gf-w-shift.geometric",
            "sum_n w_{n+m}(x) t^n/n! = (1-x(e^t-1))^-1 w_m(x e^t/(1-x(e^t-1)))",
            M_X,
            Shape::Gf,
            w_shift_geometric,
        ),
        Identity::new(
            "gf-w-base",
            "sum_n w_{n,a}(x) t^n/n! = (1-x(e^t-1))^-a",
            ALPHA_X,
            Shape::Gf,
            w_base,
        ),
        Identity::new(
            "gf-w-base.geometric",
            "sum_n w_n(x) t^n/n! = 1/(1-x(e^t-1))",
            X,
            Shape::Gf,
            w_base_geometric,
        ),
        Identity::new(
            "gf-apostol-euler-shift",
            "sum_n E_{n+m}^(a)(lam) t^n/n! = (2/(lam e^t+1))^a w_{m,a}(-lam e^t/(lam e^t+1))",
            M_ALPHA_LAMBDA,
            Shape::Gf,
            euler_shift,
        ),
        Identity::new(
            "gf-apostol-euler-shift.euler-higher",
            "sum_n E_{n+m}^(a) t^n/n! = (2/(e^t+1))^a w_{m,a}(-e^t/(e^t+1))",
            M_ALPHA,
            Shape::Gf,
            euler_shift_higher,
        ),
        Identity::new(
            "gf-apostol-euler-shift.apostol-euler",
            "sum_n E_{n+m}(lam) t^n/n! = 2/(lam e^t+1) w_m(-lam e^t/(lam e^t+1))",
            M_LAMBDA,
            Shape::Gf,
            euler_shift_apostol,
        ),
        Identity::new(
            "gf-apostol-euler-shift.euler",
            "sum_n E_{n+m} t^n/n! = 2/(e^t+1) w_m(-e^t/(e^t+1))",
            M,
            Shape::Gf,
            euler_shift_classical,
        ),
        Identity::new(
            "gf-apostol-bernoulli-shift",
            "sum_n C(n+m+l,l)^-1 B_{n+m+l}^(l)(lam) t^n/n! = l! (lam e^t-1)^-l w_{m,l}(-lam e^t/(lam e^t-1))",
            M_L_LAMBDA,
            Shape::Gf,
            bernoulli_shift,
        ),
        Identity::new(
            "gf-apostol-bernoulli-shift.apostol-bernoulli",
            "sum_n B_{n+m+1}(lam)/(n+m+1) t^n/n! = (lam e^t-1)^-1 w_m(-lam e^t/(lam e^t-1))",
            M_LAMBDA,
            Shape::Gf,
            bernoulli_shift_apostol,
        ),
        Identity::new(
            "gf-apostol-bernoulli-shift.bernoulli-higher",
            "sum_n C(n+m+l,l)^-1 B_{n+m+l}^(l) t^n/n! = regular part of l! (e^t-1)^-l w_{m,l}(-e^t/(e^t-1))",
            M_L,
            Shape::Gf,
            bernoulli_shift_higher,
        ),
        Identity::new(
            "gf-apostol-bernoulli-shift.bernoulli",
            "sum_n B_{n+m+1}/(n+m+1) t^n/n! = regular part of (e^t-1)^-1 w_m(-e^t/(e^t-1))",
            M,
            Shape::Gf,
            bernoulli_shift_classical,
        ),
    ]
}

fn plain_series(s: &Series) -> Value {
    Value::rational_series(s.egf_values())
}

/// `s^e` for a series with constant term 1 and rational `e`.
fn unit_pow(s: &Series, e: &Rational) -> Result<Series> {
    match to_i64(e) {
        Some(i) => s.pow(i),
        None => s.binomial_power(e),
    }
}

fn e_minus_one(order: usize) -> Series {
    &Series::exp_linear(&rat(1), order) - &Series::one(order)
}

fn phi_shift_at(m: u64, x: &Rational, order: usize) -> Result<(Value, Value)> {
    let lhs: Vec<Rational> = (0..=order as u64)
        .map(|n| exponential_poly(n + m).eval(x))
        .collect();
    let g = e_minus_one(order).scale(x).exp()?;
    let arg = Series::exp_linear(&rat(1), order).scale(x);
    let rhs = &g * &exponential_poly(m).eval_series(&arg);
    Ok((Value::rational_series(lhs), plain_series(&rhs)))
}

fn phi_shift(p: &GridPoint) -> Result<(Value, Value)> {
    phi_shift_at(p.m(), &p.x(), p.order())
}

fn phi_base(p: &GridPoint) -> Result<(Value, Value)> {
    let order = p.order();
    let lhs: Vec<Rational> = (0..=order as u64)
        .map(|n| exponential_poly(n).eval(&p.x()))
        .collect();
    let rhs = e_minus_one(order).scale(&p.x()).exp()?;
    Ok((Value::rational_series(lhs), plain_series(&rhs)))
}

fn w_shift_at(m: u64, a: &Rational, x: &Rational, order: usize) -> Result<(Value, Value)> {
    let mut lhs = Vec::with_capacity(order + 1);
    for n in 0..=order as u64 {
        lhs.push(general_geometric(n + m, a)?.eval(x));
    }
    let d = &Series::one(order) - &e_minus_one(order).scale(x);
    let arg = &Series::exp_linear(&rat(1), order).scale(x) * &d.inverse()?;
    let rhs = &unit_pow(&d, &-a)? * &general_geometric(m, a)?.eval_series(&arg);
    Ok((Value::rational_series(lhs), plain_series(&rhs)))
}

fn w_shift(p: &GridPoint) -> Result<(Value, Value)> {
    w_shift_at(p.m(), &p.alpha()?, &p.x(), p.order())
}

fn w_shift_geometric(p: &GridPoint) -> Result<(Value, Value)> {
    w_shift_at(p.m(), &rat(1), &p.x(), p.order())
}

fn w_base(p: &GridPoint) -> Result<(Value, Value)> {
    w_shift_at(0, &p.alpha()?, &p.x(), p.order())
}

fn w_base_geometric(p: &GridPoint) -> Result<(Value, Value)> {
    w_shift_at(0, &rat(1), &p.x(), p.order())
}

/// `λ e^t` and the argument `-λe^t/(λe^t + s)` shared by the Apostol shifts.
fn apostol_arg(lambda: &Rational, shift: i64, order: usize) -> Result<(Series, Series)> {
    let le = Series::exp_linear(&rat(1), order).scale(lambda);
    let den = &le + &Series::constant(rat(shift), order);
    let arg = -&(&le * &den.inverse()?);
    Ok((den, arg))
}

fn euler_shift_at(m: u64, a: &Rational, lambda: &Rational, order: usize) -> Result<(Value, Value)> {
    let mut lhs = Vec::with_capacity(order + 1);
    for n in 0..=order as u64 {
        lhs.push(apostol_euler_higher(n + m, a, lambda)?);
    }
    let mantissa = apostol_euler_mantissa_series(a, lambda, order)?;
    let (_, arg) = apostol_arg(lambda, 1, order)?;
    let s = &mantissa * &general_geometric(m, a)?.eval_series(&arg);
    let rhs = s
        .egf_values()
        .into_iter()
        .map(|v| euler_scaled(v, lambda, a))
        .collect::<Result<Vec<ScaledRational>>>()?;
    Ok((Value::Series(lhs), Value::Series(rhs)))
}

fn euler_shift(p: &GridPoint) -> Result<(Value, Value)> {
    euler_shift_at(p.m(), &p.alpha()?, &p.lambda(), p.order())
}

fn euler_shift_higher(p: &GridPoint) -> Result<(Value, Value)> {
    euler_shift_at(p.m(), &p.alpha()?, &rat(1), p.order())
}

fn euler_shift_apostol(p: &GridPoint) -> Result<(Value, Value)> {
    euler_shift_at(p.m(), &rat(1), &p.lambda(), p.order())
}

fn euler_shift_classical(p: &GridPoint) -> Result<(Value, Value)> {
    euler_shift_at(p.m(), &rat(1), &rat(1), p.order())
}

fn bernoulli_shift_at(m: u64, l: u64, lambda: &Rational, order: usize) -> Result<(Value, Value)> {
    require_not_one(lambda)
        .map_err(|_| Error::domain("lambda=1 not in domain; use the bernoulli-higher form"))?;
    let mut lhs = Vec::with_capacity(order + 1);
    for n in 0..=order as u64 {
        let k = n + m + l;
        lhs.push(apostol_bernoulli_higher(k, l, lambda)? / c(k, l));
    }
    let (den, arg) = apostol_arg(lambda, -1, order)?;
    let g = den.pow(-(l as i64))?.scale(&fact(l));
    let rhs = &g * &general_geometric(m, &r(l))?.eval_series(&arg);
    Ok((Value::rational_series(lhs), plain_series(&rhs)))
}

fn bernoulli_shift(p: &GridPoint) -> Result<(Value, Value)> {
    bernoulli_shift_at(p.m(), p.l()?, &p.lambda(), p.order())
}

fn bernoulli_shift_apostol(p: &GridPoint) -> Result<(Value, Value)> {
    bernoulli_shift_at(p.m(), 1, &p.lambda(), p.order())
}

/// `l! (e^t-1)^{-l} w_{m,l}(-e^t/(e^t-1)) = t^{-(l+m)} S(t)`; returns the
/// coefficients of `S` through `t^{order+l+m}`.
pub(super) fn bernoulli_laurent_numerator(m: u64, l: u64, order: usize) -> Result<Series> {
    let big = order + (l + m) as usize;
    let e = Series::exp_linear(&rat(1), big + 1);
    let q = (&e - &Series::one(big + 1)).div_t()?;
    let qi = q.inverse()?;
    let u = -&(&e.truncate(big) * &qi);
    let w = general_geometric(m, &r(l))?;
    let mut s = Series::zero(big);
    let mut up = Series::one(big);
    for k in 0..=m {
        if k > 0 {
            up = &up * &u;
        }
        let mut term = up.scale(&w.coeff(k as usize));
        for _ in 0..(m - k) {
            term = term.mul_t();
        }
        s = &s + &term.truncate(big);
    }
    Ok((&s * &qi.pow(l as i64)?).scale(&fact(l)))
}

fn bernoulli_regular_at(m: u64, l: u64, order: usize) -> Result<(Value, Value)> {
    let lhs: Vec<Rational> = (0..=order as u64)
        .map(|n| {
            let k = n + m + l;
            bernoulli_higher(k, l) / c(k, l)
        })
        .collect();
    let s = bernoulli_laurent_numerator(m, l, order)?;
    let shift = (l + m) as usize;
    let rhs: Vec<Rational> = (0..=order)
        .map(|n| s.coeff(n + shift) * fact(n as u64))
        .collect();
    Ok((Value::rational_series(lhs), Value::rational_series(rhs)))
}

fn bernoulli_shift_higher(p: &GridPoint) -> Result<(Value, Value)> {
    bernoulli_regular_at(p.m(), p.l()?, p.order())
}

fn bernoulli_shift_classical(p: &GridPoint) -> Result<(Value, Value)> {
    bernoulli_regular_at(p.m(), 1, p.order())
}

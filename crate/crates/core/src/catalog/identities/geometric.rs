//! Exponential and geometric polynomials: Spivey-type sums, the general
//! recurrence, explicit forms and connections to the Apostol families.

use num_traits::Zero;

use super::{c, euler_scaled, fact, r, require_not_one, rising, s2, zpow};
use crate::catalog::{GridPoint, Identity, Shape, Slot, Value};
use crate::error::Result;
use crate::exact::{checked_div, frac, pow_u, rat, Rational};
use crate::families::{
    apostol_bernoulli_by_series, apostol_euler_by_series, bell, exponential_poly, fubini,
    general_geometric, geometric_poly,
};
use crate::poly::Poly;

const NM: &[Slot] = &[Slot::N, Slot::M];
const NM_ALPHA: &[Slot] = &[Slot::N, Slot::M, Slot::Alpha];
const N: &[Slot] = &[Slot::N];
const N_ALPHA_LAMBDA: &[Slot] = &[Slot::N, Slot::Alpha, Slot::Lambda];
const N_L_LAMBDA: &[Slot] = &[Slot::N, Slot::L, Slot::Lambda];

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new(
            "spivey",
            "phi_{n+m}(x) = sum_{k<=n} sum_{j<=m} C(n,k) S2(m,j) j^(n-k) x^j phi_k(x)",
            NM,
            Shape::Pair,
            spivey,
        )
        .symbolic(),
        Identity::new(
            "spivey.bell",
            "b_{n+m} = sum_{k<=n} sum_{j<=m} C(n,k) S2(m,j) j^(n-k) b_k",
            NM,
            Shape::Pair,
            spivey_bell,
        ),
        Identity::new(
            "w-general-recurrence",
            "w_{n+m,a}(x) = sum_k sum_j S2(m,k) C(n,j) C(a+k-1,k) k! k^(n-j) x^k w_{j,a+k}(x)",
            NM_ALPHA,
            Shape::Pair,
            w_general_recurrence,
        )
        .symbolic(),
        Identity::new(
            "w-explicit",
            "w_{n+m}(x) = sum_k sum_j sum_i S2(m,k) C(n,j) S2(j,i) k^(n-j) (i+k)! x^(k+i)",
            NM,
            Shape::Pair,
            w_explicit,
        )
        .symbolic(),
        Identity::new(
            "fubini-explicit",
            "F_{n+m} = sum_k sum_j sum_i S2(m,k) C(n,j) S2(j,i) k^(n-j) (i+k)!",
            NM,
            Shape::Pair,
            fubini_explicit,
        ),
        Identity::new(
            "w-euler-connection",
            "w_{n,a}(-lam/(lam+1)) = ((lam+1)/2)^a E_n^(a)(lam), both sides times (2/(lam+1))^a",
            N_ALPHA_LAMBDA,
            Shape::Connection,
            w_euler_connection,
        ),
        Identity::new(
            "w-euler-connection.euler",
            "w_n(-1/2) = E_n",
            N,
            Shape::Connection,
            w_euler_classical,
        ),
        Identity::new(
            "w-bernoulli-connection",
            "w_{n,l}(-lam/(lam-1)) = (lam-1)^l / l! C(n+l,l)^-1 B_{n+l}^(l)(lam)",
            N_L_LAMBDA,
            Shape::Connection,
            w_bernoulli_connection,
        ),
    ]
}

fn spivey(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, m) = (p.n(), p.m());
    let mut rhs = Poly::zero();
    for k in 0..=n {
        for j in 0..=m {
            let coef = c(n, k) * s2(m, j) * zpow(j, n - k);
            if !coef.is_zero() {
                rhs = &rhs + &exponential_poly(k).shift_up(j as usize).scale(&coef);
            }
        }
    }
    Ok((exponential_poly(n + m).into(), rhs.into()))
}

fn spivey_bell(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, m) = (p.n(), p.m());
    let mut rhs = Rational::zero();
    for k in 0..=n {
        for j in 0..=m {
            rhs += c(n, k) * s2(m, j) * zpow(j, n - k) * bell(k);
        }
    }
    Ok((bell(n + m).into(), rhs.into()))
}

fn w_general_recurrence(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, m, a) = (p.n(), p.m(), p.alpha()?);
    let mut rhs = Poly::zero();
    for k in 0..=m {
        for j in 0..=n {
            let coef = s2(m, k) * c(n, j) * rising(&a, k) * fact(k) * zpow(k, n - j);
            if !coef.is_zero() {
                let w = general_geometric(j, &(&a + r(k)))?;
                rhs = &rhs + &w.shift_up(k as usize).scale(&coef);
            }
        }
    }
    Ok((general_geometric(n + m, &a)?.into(), rhs.into()))
}

fn explicit_terms(n: u64, m: u64) -> Vec<(Rational, usize)> {
    let mut out = Vec::new();
    for k in 0..=m {
        for j in 0..=n {
            for i in 0..=j {
                let coef = s2(m, k) * c(n, j) * s2(j, i) * zpow(k, n - j) * fact(i + k);
                if !coef.is_zero() {
                    out.push((coef, (k + i) as usize));
                }
            }
        }
    }
    out
}

fn w_explicit(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, m) = (p.n(), p.m());
    let rhs = explicit_terms(n, m)
        .into_iter()
        .fold(Poly::zero(), |acc, (coef, d)| {
            &acc + &Poly::monomial(coef, d)
        });
    Ok((geometric_poly(n + m).into(), rhs.into()))
}

fn fubini_explicit(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, m) = (p.n(), p.m());
    let rhs: Rational = explicit_terms(n, m).into_iter().map(|(coef, _)| coef).sum();
    Ok((fubini(n + m).into(), rhs.into()))
}

fn w_euler_connection(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, a, lam) = (p.n(), p.alpha()?, p.lambda());
    let arg = checked_div(&-&lam, &(&lam + rat(1)))?;
    let w = general_geometric(n, &a)?.eval(&arg);
    let lhs = euler_scaled(w, &lam, &a)?;
    let rhs = apostol_euler_by_series(n, &a, &rat(0), &lam)?;
    Ok((lhs.into(), rhs.into()))
}

fn w_euler_classical(p: &GridPoint) -> Result<(Value, Value)> {
    let n = p.n();
    let lhs = geometric_poly(n).eval(&frac(-1, 2));
    let rhs = apostol_euler_by_series(n, &rat(1), &rat(0), &rat(1))?;
    Ok((lhs.into(), rhs.into()))
}

fn w_bernoulli_connection(p: &GridPoint) -> Result<(Value, Value)> {
    let (n, l, lam) = (p.n(), p.l()?, p.lambda());
    require_not_one(&lam)?;
    let d = &lam - rat(1);
    let lhs = general_geometric(n, &r(l))?.eval(&(-&lam / &d));
    let b = apostol_bernoulli_by_series(n + l, l, &rat(0), &lam)?;
    let rhs = pow_u(&d, l) / fact(l) / c(n + l, l) * b;
    Ok((lhs.into(), rhs.into()))
}

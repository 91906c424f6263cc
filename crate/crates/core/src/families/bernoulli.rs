//! Bernoulli and Apostol–Bernoulli numbers and polynomials of integer order.
//!
//! `𝓑_n^{(l)}(x; λ)` is defined by `(t / (λe^t - 1))^l e^{xt} = Σ 𝓑_n^{(l)}(x;λ) t^n/n!`.
//! At `λ = 1` these are the Nörlund polynomials `B_n^{(l)}(x)`.

use num_traits::{One, Zero};

use super::memo::Memo;
use crate::combinatorics::stirling2_rat;
use crate::error::{Error, Result};
use crate::exact::{binomial_rat, checked_pow, factorial_rat, gen_binomial, pow_u, rat, Rational};
use crate::poly::Poly;
use crate::series::Series;

static NORLUND: Memo<u64, Vec<Rational>> = Memo::new();
static NORLUND_POLY: Memo<(u64, u64), Poly> = Memo::new();
static APOSTOL: Memo<(u64, u64, Rational), Rational> = Memo::new();

fn lambda_one_error() -> Error {
    Error::domain("lambda=1 not in domain; use bernoulli-higher")
}

/// EGF values of `((e^t - 1)/t)^{-l}` up to at least `n`.
fn norlund_values(l: u64, n: u64) -> Vec<Rational> {
    let cached = NORLUND.get_or_insert_with(l, || norlund_series_values(l, 16));
    if cached.len() > n as usize {
        return cached;
    }
    let order = (n as usize + 1).max(2 * cached.len());
    let fresh = norlund_series_values(l, order);
    NORLUND.insert(l, fresh.clone());
    fresh
}

fn norlund_series_values(l: u64, order: usize) -> Vec<Rational> {
    let e = Series::exp_linear(&rat(1), order + 1);
    let q = (&e - &Series::one(order + 1))
        .div_t()
        .expect("e^t - 1 has zero constant term");
    q.pow(-(l as i64))
        .expect("(e^t - 1)/t is a unit")
        .egf_values()
}

/// Bernoulli number of order `l`, `B_n^{(l)} = n! [t^n] (t/(e^t-1))^l`.
pub fn bernoulli_higher(n: u64, l: u64) -> Rational {
    norlund_values(l, n)[n as usize].clone()
}

/// `B_n = B_n^{(1)}`, with `B_1 = -1/2`.
pub fn bernoulli_classical(n: u64) -> Rational {
    bernoulli_higher(n, 1)
}

/// `B_n^{(l)}(x) = Σ_k C(n,k) B_k^{(l)} x^{n-k}` as a polynomial in `x`.
pub fn bernoulli_higher_poly(n: u64, l: u64) -> Poly {
    NORLUND_POLY.get_or_insert_with((n, l), || {
        Poly::from_coeffs(
            (0..=n)
                .map(|i| binomial_rat(n, i as i64) * bernoulli_higher(n - i, l))
                .collect(),
        )
    })
}

/// `B_n^{(l)}(x0)`.
pub fn bernoulli_higher_at(n: u64, l: u64, x0: &Rational) -> Rational {
    bernoulli_higher_poly(n, l).eval(x0)
}

/// `𝓑_n^{(l)}(λ)` for `λ ≠ 1` from the closed form
/// `l! C(n,l) Σ_{k=0}^{n-l} {n-l,k} C(l+k-1,k) (-λ)^k k! / (λ-1)^{l+k}`.
///
/// The `C(n,l)` factor makes the value zero for `n < l`, matching the
/// valuation of `(t/(λe^t-1))^l`.
pub fn apostol_bernoulli_higher(n: u64, l: u64, lambda: &Rational) -> Result<Rational> {
    if lambda.is_one() {
        return Err(lambda_one_error());
    }
    if n < l {
        return Ok(Rational::zero());
    }
    APOSTOL.try_get_or_insert_with((n, l, lambda.clone()), || {
        let d = lambda - Rational::one();
        let neg = -lambda;
        let m = n - l;
        let mut sum = Rational::zero();
        for k in 0..=m {
            let up = rat((l + k) as i64) - rat(1);
            let term = stirling2_rat(m, k as i64)
                * gen_binomial(&up, k)
                * pow_u(&neg, k)
                * factorial_rat(k)
                * checked_pow(&d, -((l + k) as i64))?;
            sum += term;
        }
        Ok(factorial_rat(l) * binomial_rat(n, l as i64) * sum)
    })
}

/// `n! [t^n] (t/(λe^t-1))^l e^{x0 t}` straight from the series engine; any `λ`.
pub fn apostol_bernoulli_by_series(
    n: u64,
    l: u64,
    x0: &Rational,
    lambda: &Rational,
) -> Result<Rational> {
    let order = n as usize;
    let base = if lambda.is_one() {
        let e = Series::exp_linear(&rat(1), order + 1);
        (&e - &Series::one(order + 1)).div_t()?.pow(-(l as i64))?
    } else {
        // t^l (λe^t - 1)^{-l}; only the first n - l coefficients of the unit part matter.
        if n < l {
            return Ok(Rational::zero());
        }
        let inner = order - l as usize;
        let d = &Series::exp_linear(&rat(1), inner).scale(lambda) - &Series::one(inner);
        let mut g = d.pow(-(l as i64))?;
        for _ in 0..l {
            g = g.mul_t();
        }
        g
    };
    let s = &base * &Series::exp_linear(x0, order);
    Ok(s.egf_coeff(order))
}

/// `𝓑_n^{(l)}(x0; λ) = Σ_k C(n,k) 𝓑_k^{(l)}(λ) x0^{n-k}` for `λ ≠ 1`.
pub fn apostol_bernoulli_poly(
    n: u64,
    l: u64,
    x0: &Rational,
    lambda: &Rational,
) -> Result<Rational> {
    if lambda.is_one() {
        return Err(lambda_one_error());
    }
    let mut sum = Rational::zero();
    for k in l.min(n + 1)..=n {
        sum +=
            binomial_rat(n, k as i64) * apostol_bernoulli_higher(k, l, lambda)? * pow_u(x0, n - k);
    }
    Ok(sum)
}

/// `𝓑_n^{(l)}(x0; λ)` for every rational `λ`: Nörlund polynomials at `λ = 1`.
pub fn apostol_bernoulli_value(n: u64, l: u64, x0: &Rational, lambda: &Rational) -> Rational {
    if lambda.is_one() {
        bernoulli_higher_at(n, l, x0)
    } else {
        apostol_bernoulli_poly(n, l, x0, lambda).expect("lambda != 1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;
    use crate::families::geometric::geometric_poly;

    #[test]
    fn classical_values() {
        assert_eq!(bernoulli_classical(0), rat(1));
        assert_eq!(bernoulli_classical(1), frac(-1, 2));
        assert_eq!(bernoulli_classical(2), frac(1, 6));
        assert_eq!(bernoulli_classical(3), rat(0));
        assert_eq!(bernoulli_classical(4), frac(-1, 30));
    }

    #[test]
    fn second_order_value() {
        // (t/(e^t-1))^2 squared by hand from the order-4 classical series
        let b: Vec<Rational> = (0..=4).map(bernoulli_classical).collect();
        let c = Series::from_egf(&b);
        let sq = &c * &c;
        assert_eq!(bernoulli_higher(2, 2), sq.egf_coeff(2));
        assert_eq!(bernoulli_higher(2, 2), frac(5, 6));
    }

    #[test]
    fn norlund_cache_grows() {
        let v = bernoulli_higher(40, 3);
        let direct = norlund_series_values(3, 41)[40].clone();
        assert_eq!(v, direct);
    }

    #[test]
    fn polynomial_values() {
        for n in 0..6 {
            for l in 1..4 {
                assert_eq!(bernoulli_higher_at(n, l, &rat(0)), bernoulli_higher(n, l));
            }
        }
        assert_eq!(bernoulli_higher_at(1, 1, &rat(1)), frac(1, 2));
        // Independent series evaluation at x = 1 for n = l = 3.
        let lhs = bernoulli_higher_at(3, 3, &rat(1));
        assert_eq!(
            lhs,
            apostol_bernoulli_by_series(3, 3, &rat(1), &rat(1)).unwrap()
        );
        assert_eq!(lhs, frac(1, 4));
        assert_eq!(bernoulli_higher(3, 3), frac(-9, 4));
        // The relation B_3^{(3)}(1) = (-1)^3 2!/3 B_3^{(3)} does not hold.
        assert_ne!(lhs, frac(-2, 3) * bernoulli_higher(3, 3));
    }

    #[test]
    fn apostol_examples() {
        for k in 0..6u64 {
            for lam in [rat(2), frac(1, 3), rat(-3), rat(5)] {
                let d = &lam - rat(1);
                assert_eq!(
                    apostol_bernoulli_higher(k, k, &lam).unwrap(),
                    factorial_rat(k) * checked_pow(&d, -(k as i64)).unwrap()
                );
            }
        }
        assert_eq!(apostol_bernoulli_higher(1, 1, &rat(2)).unwrap(), rat(1));
        // geometric-polynomial route n/(λ-1) w_{n-1}(λ/(1-λ)) at n = 2, λ = 3
        let lam = rat(3);
        let via_geometric =
            rat(2) / (&lam - rat(1)) * geometric_poly(1).eval(&(&lam / (rat(1) - &lam)));
        assert_eq!(via_geometric, frac(-3, 2));
        assert_eq!(apostol_bernoulli_higher(2, 1, &lam).unwrap(), via_geometric);
        assert!(matches!(
            apostol_bernoulli_higher(4, 2, &rat(1)),
            Err(Error::Domain(_))
        ));
        assert_eq!(
            apostol_bernoulli_higher(3, 2, &rat(1))
                .unwrap_err()
                .to_string(),
            "lambda=1 not in domain; use bernoulli-higher"
        );
    }

    #[test]
    fn explicit_and_series_routes_agree() {
        for lam in [rat(2), frac(1, 3), rat(-3), rat(5)] {
            for l in 1..=4u64 {
                for n in 0..=14u64 {
                    assert_eq!(
                        apostol_bernoulli_higher(n, l, &lam).unwrap(),
                        apostol_bernoulli_by_series(n, l, &rat(0), &lam).unwrap(),
                        "n={n} l={l}"
                    );
                }
            }
        }
    }

    #[test]
    fn polynomial_matches_series_with_shift() {
        for lam in [rat(2), frac(1, 3)] {
            for x in [frac(2, 3), rat(-1)] {
                for (m, l) in [(1u64, 1u64), (2, 2), (0, 3)] {
                    let n = m + l;
                    assert_eq!(
                        apostol_bernoulli_poly(n, l, &x, &lam).unwrap(),
                        apostol_bernoulli_by_series(n, l, &x, &lam).unwrap()
                    );
                }
            }
            assert_eq!(
                apostol_bernoulli_poly(4, 2, &rat(0), &lam).unwrap(),
                apostol_bernoulli_higher(4, 2, &lam).unwrap()
            );
        }
    }

    #[test]
    fn shift_reflection_instance() {
        // n = m = l = 1, λ = 2: 𝓑_3^{(2)}(1; 2) against (-1)^3 λ^{-2} 𝓑_3^{(2)}(1; 1/2)
        let lam = rat(2);
        let lhs = apostol_bernoulli_poly(3, 2, &rat(1), &lam).unwrap();
        let other = apostol_bernoulli_poly(3, 2, &rat(1), &frac(1, 2)).unwrap();
        assert_eq!(lhs, -frac(1, 4) * &other);
        assert_ne!(lhs, -frac(1, 8) * other);
    }
}

//! Exponential (Touchard) polynomials, geometric polynomials and their numbers.

use num_traits::{One, Zero};

use super::memo::Memo;
use crate::combinatorics::stirling2_rat;
use crate::error::{Error, Result};
use crate::exact::{factorial_rat, frac, gen_binomial, rat, Rational};
use crate::poly::Poly;

static PHI: Memo<u64, Poly> = Memo::new();
static GENERAL: Memo<(u64, Rational), Poly> = Memo::new();

/// `φ_n(x) = Σ_k {n,k} x^k`.
pub fn exponential_poly(n: u64) -> Poly {
    PHI.get_or_insert_with(n, || {
        Poly::from_coeffs((0..=n as i64).map(|k| stirling2_rat(n, k)).collect())
    })
}

/// `φ_n` from `φ_0 = 1`, `φ_{n+1} = x (φ_n + φ_n')`, independent of the Stirling table.
pub fn exponential_poly_by_recurrence(n: u64) -> Poly {
    let mut p = Poly::one();
    for _ in 0..n {
        p = (&p + &p.derivative()).shift_up(1);
    }
    p
}

/// Bell number `b_n = φ_n(1)`.
pub fn bell(n: u64) -> Rational {
    exponential_poly(n).eval(&rat(1))
}

/// Complementary Bell (Uppuluri–Carpenter) number `φ_n(-1)`.
pub fn complementary_bell(n: u64) -> Rational {
    exponential_poly(n).eval(&rat(-1))
}

/// `w_n(x) = Σ_k {n,k} k! x^k`.
pub fn geometric_poly(n: u64) -> Poly {
    general_geometric(n, &Rational::one()).expect("alpha = 1 is in the domain")
}

/// Fubini (ordered Bell) number `F_n = w_n(1)`.
pub fn fubini(n: u64) -> Rational {
    geometric_poly(n).eval(&rat(1))
}

/// `w_{n,α}(x) = Σ_k {n,k} C(α+k-1, k) k! x^k` for rational `α > 0`.
pub fn general_geometric(n: u64, alpha: &Rational) -> Result<Poly> {
    if *alpha <= Rational::zero() {
        return Err(Error::domain(format!(
            "alpha must be positive, got {}",
            crate::exact::canonical(alpha)
        )));
    }
    Ok(GENERAL.get_or_insert_with((n, alpha.clone()), || {
        Poly::from_coeffs(
            (0..=n)
                .map(|k| {
                    let up = alpha + rat(k as i64) - rat(1);
                    stirling2_rat(n, k as i64) * gen_binomial(&up, k) * factorial_rat(k)
                })
                .collect(),
        )
    }))
}

/// `E_n = w_n(-1/2)`: the Euler polynomial at zero, `E_n(0)`.
///
/// These are not the integer (secant) Euler numbers: `E_1 = -1/2`, `E_2 = 0`.
pub fn euler_classical(n: u64) -> Rational {
    geometric_poly(n).eval(&frac(-1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{factorial, Int};

    /// Restricted growth strings of length n, counted by number of blocks.
    fn set_partitions(n: usize) -> Vec<u64> {
        let mut counts = vec![0u64; n + 1];
        let mut a = vec![0usize; n];
        loop {
            let blocks = if n == 0 {
                0
            } else {
                a.iter().max().unwrap() + 1
            };
            counts[blocks] += 1;
            // increment the growth string
            let mut i = n;
            loop {
                if i <= 1 {
                    return counts;
                }
                i -= 1;
                let max_prefix = a[..i].iter().max().copied().unwrap_or(0);
                if a[i] <= max_prefix {
                    a[i] += 1;
                    for x in a.iter_mut().skip(i + 1) {
                        *x = 0;
                    }
                    break;
                }
            }
        }
    }

    fn ordered_set_partitions(n: usize) -> u64 {
        set_partitions(n)
            .iter()
            .enumerate()
            .map(|(k, c)| c * factorial(k as u64).to_string().parse::<u64>().unwrap())
            .sum()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(exponential_poly(0), Poly::one());
        assert_eq!(exponential_poly(1), Poly::x());
        let counts = set_partitions(3);
        let expected = Poly::from_coeffs(counts.iter().map(|&c| rat(c as i64)).collect());
        assert_eq!(exponential_poly(3), expected);
        assert_eq!(exponential_poly(3).to_string(), "x+3x^2+x^3");
    }

    #[test]
    fn phi_routes_agree_to_30() {
        for n in 0..=30 {
            let p = exponential_poly(n);
            assert_eq!(p, exponential_poly_by_recurrence(n));
            assert_eq!(p.degree(), Some(n as usize));
            assert_eq!(p.coeffs().last(), Some(&rat(1)));
            if n >= 1 {
                assert_eq!(p.eval(&rat(0)), rat(0));
            }
        }
    }

    #[test]
    fn bell_numbers_match_enumeration() {
        for n in 0..=10 {
            let total: u64 = set_partitions(n).iter().sum();
            assert_eq!(bell(n as u64), rat(total as i64));
        }
        let first: Vec<Rational> = (0..=5).map(bell).collect();
        assert_eq!(first, [1, 1, 2, 5, 15, 52].map(rat).to_vec());
    }

    #[test]
    fn complementary_bell_numbers() {
        assert_eq!(complementary_bell(0), rat(1));
        for n in 0..=5u64 {
            let signed: Int = (0..=n as i64)
                .map(|k| {
                    let s = crate::combinatorics::stirling2(n, k);
                    if k % 2 == 0 {
                        s
                    } else {
                        -s
                    }
                })
                .sum();
            assert_eq!(complementary_bell(n), Rational::from_integer(signed));
        }
        let first: Vec<Rational> = (0..=5).map(complementary_bell).collect();
        assert_eq!(first, [1, -1, 0, 1, 1, -2].map(rat).to_vec());
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(geometric_poly(0), Poly::one());
        assert_eq!(
            geometric_poly(2),
            Poly::from_coeffs(vec![rat(0), rat(1), rat(2)])
        );
        for n in 0..=8 {
            assert_eq!(fubini(n as u64), rat(ordered_set_partitions(n) as i64));
        }
        let first: Vec<Rational> = (0..=5).map(fubini).collect();
        assert_eq!(first, [1, 1, 3, 13, 75, 541].map(rat).to_vec());
    }

    #[test]
    fn general_geometric_examples() {
        for n in 0..=16 {
            assert_eq!(general_geometric(n, &rat(1)).unwrap(), geometric_poly(n));
        }
        let p = general_geometric(2, &rat(3)).unwrap();
        assert_eq!(p, Poly::from_coeffs(vec![rat(0), rat(3), rat(12)]));
        assert_eq!(p.to_string(), "3x+12x^2");
        assert_eq!(general_geometric(0, &frac(5, 2)).unwrap(), Poly::one());
        assert!(matches!(
            general_geometric(3, &rat(0)),
            Err(Error::Domain(_))
        ));
        assert!(general_geometric(3, &frac(-1, 2)).is_err());
    }

    #[test]
    fn euler_classical_examples() {
        assert_eq!(euler_classical(0), rat(1));
        assert_eq!(euler_classical(1), frac(-1, 2));
        assert_eq!(euler_classical(2), rat(0));
    }
}

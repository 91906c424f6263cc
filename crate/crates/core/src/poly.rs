//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::exact::{canonical, is_integer, Rational};
use crate::series::Series;

/// Polynomial in `x`; `coeffs[i]` is the coefficient of `x^i`.
///
/// Kept in canonical form: no trailing zeros, so the zero polynomial has no
/// coefficients and structural equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    /// `Σ_i coeffs[i] s^i` by Horner over series, at the order of `s`.
    pub fn eval_series(&self, s: &Series) -> Series {
        let order = s.order();
        self.coeffs
            .iter()
            .rev()
            .fold(Series::zero(order), |acc, c| {
                &(&acc * s) + &Series::constant(c.clone(), order)
            })
    }

    fn combine(&self, other: &Poly, f: impl Fn(&Rational, &Rational) -> Rational) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| f(&self.coeff(i), &other.coeff(i))).collect())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Renders ascending terms, e.g. `3x+12x^2`, `1-(1/2)x`, `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let mag = c.abs();
            if i == 0 {
                write!(f, "{}", canonical(&mag))?;
                continue;
            }
            if !mag.is_one() {
                if is_integer(&mag) {
                    write!(f, "{}", canonical(&mag))?;
                } else {
                    write!(f, "({})", canonical(&mag))?;
                }
            }
            if i == 1 {
                write!(f, "x")?;
            } else {
                write!(f, "x^{i}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};
    use proptest::prelude::*;

    fn p(v: &[i64]) -> Poly {
        Poly::from_coeffs(v.iter().map(|&c| rat(c)).collect())
    }

    fn schoolbook(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = Vec::new();
        for k in 0..(a.len() + b.len()).saturating_sub(1) {
            let mut s = Rational::zero();
            for i in 0..a.len() {
                if k >= i && k - i < b.len() {
                    s += &a[i] * &b[k - i];
                }
            }
            out.push(s);
        }
        out
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[0, 1, 1]) + &p(&[0, -1]), p(&[0, 0, 1]));
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!((&p(&[1, 1]) - &p(&[1, 1])).degree(), None);
        let a = p(&[0, 1, 3, 1]);
        let b = p(&[2, -1, 0, 5]);
        assert_eq!(
            &a * &b,
            Poly::from_coeffs(schoolbook(a.coeffs(), b.coeffs()))
        );
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(Poly::zero().eval(&frac(3, 7)), rat(0));
        let w2 = p(&[0, 1, 2]);
        assert_eq!(w2.eval(&rat(1)), rat(3));
        assert_eq!(w2.eval(&frac(-1, 2)), rat(0));
    }

    #[test]
    fn series_substitution_examples() {
        let one = Poly::one().eval_series(&Series::exp_linear(&rat(1), 5));
        assert_eq!(one, Series::one(5));
        let et = Series::exp_linear(&rat(1), 6);
        assert_eq!(Poly::x().eval_series(&et), et);
        let t = Series::t(4);
        assert_eq!(
            p(&[0, 1, 1]).eval_series(&t).coeffs(),
            &[rat(0), rat(1), rat(1), rat(0), rat(0)]
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[0, 3, 12]).to_string(), "3x+12x^2");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p(&[0, 1, 7, 6, 1]).to_string(), "x+7x^2+6x^3+x^4");
        let q = Poly::from_coeffs(vec![frac(-1, 2), rat(-1), frac(1, 3)]);
        assert_eq!(q.to_string(), "-1/2-x+(1/3)x^2");
    }

    #[test]
    fn derivative_and_shift() {
        assert_eq!(p(&[5, 1, 3, 1]).derivative(), p(&[1, 6, 3]));
        assert_eq!(p(&[1, 2]).shift_up(2), p(&[0, 0, 1, 2]));
    }

    fn poly_strategy() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..7)
            .prop_map(|v| Poly::from_coeffs(v.into_iter().map(|(a, b)| frac(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn multiplication_matches_schoolbook(a in poly_strategy(), b in poly_strategy()) {
            let expected = Poly::from_coeffs(schoolbook(a.coeffs(), b.coeffs()));
            prop_assert_eq!(&a * &b, expected);
        }

        #[test]
        fn evaluation_is_a_ring_map(a in poly_strategy(), b in poly_strategy(), v in (-9i64..9, 1i64..5)) {
            let v = frac(v.0, v.1);
            prop_assert_eq!((&a * &b).eval(&v), a.eval(&v) * b.eval(&v));
            prop_assert_eq!((&a + &b).eval(&v), a.eval(&v) + b.eval(&v));
        }

        #[test]
        fn canonical_has_no_trailing_zero(a in poly_strategy(), b in poly_strategy()) {
            let s = &a - &b;
            prop_assert!(s.coeffs().last().is_none_or(|c| !c.is_zero()));
        }
    }
}

//! Truncated formal power series in `t` over the rationals.
//!
//! A series of order `N` knows the coefficients of `t^0..=t^N` exactly and
//! nothing beyond. Binary operations truncate to the smaller order, so a
//! result never claims more precision than its inputs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{canonical, factorial_rat, int_to_rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Series from its first `order + 1` coefficients. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the constant term"
        );
        Series { coeffs }
    }

    /// Series whose EGF values `n! [t^n]` are `values`.
    pub fn from_egf(values: &[Rational]) -> Self {
        Series::from_coeffs(
            values
                .iter()
                .enumerate()
                .map(|(n, v)| v / factorial_rat(n as u64))
                .collect(),
        )
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The variable `t`.
    pub fn t(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// `e^{ct}`.
    pub fn exp_linear(c: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rational::one();
        for n in 0..=order {
            if n > 0 {
                term = term * c / int_to_rat(n.into());
            }
            coeffs.push(term.clone());
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    /// `n! [t^n]`.
    pub fn egf_coeff(&self, n: usize) -> Rational {
        &self.coeffs[n] * factorial_rat(n as u64)
    }

    pub fn egf_values(&self) -> Vec<Rational> {
        (0..=self.order()).map(|n| self.egf_coeff(n)).collect()
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact `t·s`; known to one more order than `s`.
    pub fn mul_t(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// `s / t` for a series with zero constant term; known to one order less.
    pub fn div_t(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::domain(
                "division by t needs a zero constant term and order >= 1",
            ));
        }
        Ok(Series {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Formal derivative in `t`; known to one order less.
    pub fn derivative(&self) -> Series {
        if self.order() == 0 {
            return Series::zero(0);
        }
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int_to_rat(i.into()))
                .collect(),
        }
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn inverse(&self) -> Result<Series> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::domain(
                "series inverse needs a nonzero constant term",
            ));
        }
        let inv0 = a0.recip();
        let mut b: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        b.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut s = Rational::zero();
            for k in 1..=n {
                s += &self.coeffs[k] * &b[n - k];
            }
            b.push(-s * &inv0);
        }
        Ok(Series { coeffs: b })
    }

    /// Integer power; negative exponents require an invertible series.
    pub fn pow(&self, e: i64) -> Result<Series> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut result = Series::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(result)
    }

    /// `exp(u)` for `u` with zero constant term, via `n f_n = Σ k u_k f_{n-k}`.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain("exp needs a zero constant term"));
        }
        let mut f: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        f.push(Rational::one());
        for n in 1..self.coeffs.len() {
            let mut s = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    s += &self.coeffs[k] * &f[n - k] * int_to_rat(k.into());
                }
            }
            f.push(s / int_to_rat(n.into()));
        }
        Ok(Series { coeffs: f })
    }

    /// `a^r` for rational `r` and a base with constant term 1.
    ///
    /// Uses the recurrence `f_n = (1/n) Σ_{k=1..n} ((r+1)k - n) a_k f_{n-k}`,
    /// which equals the binomial expansion `Σ_j C(r,j) (a-1)^j`.
    pub fn binomial_power(&self, r: &Rational) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::domain("binomial power needs constant term 1"));
        }
        let r1 = r + Rational::one();
        let mut f: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        f.push(Rational::one());
        for n in 1..self.coeffs.len() {
            let mut s = Rational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let w = &r1 * int_to_rat(k.into()) - int_to_rat(n.into());
                s += w * &self.coeffs[k] * &f[n - k];
            }
            f.push(s / int_to_rat(n.into()));
        }
        Ok(Series { coeffs: f })
    }

    /// Canonical strings of the coefficients, for JSON output.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(canonical).collect()
    }
}

/// `log(1+t) = Σ_{k=1..N} (-1)^{k+1} t^k / k`.
pub fn log1p_series(order: usize) -> Series {
    let mut s = Series::zero(order);
    for k in 1..=order {
        let c = Rational::new(1.into(), (k as i64).into());
        s.coeffs[k] = if k % 2 == 1 { c } else { -c };
    }
    s
}

fn zip_min(a: &Series, b: &Series, f: impl Fn(&Rational, &Rational) -> Rational) -> Series {
    let n = a.coeffs.len().min(b.coeffs.len());
    Series {
        coeffs: (0..n).map(|i| f(&a.coeffs[i], &b.coeffs[i])).collect(),
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        zip_min(self, rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        zip_min(self, rhs, |a, b| a - b)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for Series {
    type Output = Series;
    fn add(self, rhs: Series) -> Series {
        &self + &rhs
    }
}

impl Sub for Series {
    type Output = Series;
    fn sub(self, rhs: Series) -> Series {
        &self - &rhs
    }
}

impl Mul for Series {
    type Output = Series;
    fn mul(self, rhs: Series) -> Series {
        &self * &rhs
    }
}

/// `c0 + c1 t + c2 t^2 + ...`, with every coefficient shown.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let c = canonical(c);
            let c = if c.contains('/') || c.starts_with('-') {
                format!("({c})")
            } else {
                c
            };
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} t")?,
                _ => write!(f, "{c} t^{i}")?,
            }
        }
        Ok(())
    }
}

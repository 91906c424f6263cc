//! Exact scalar arithmetic.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; every arithmetic operation renormalizes, so two equal
//! values always have identical representations. The canonical text form is
//! `p/q`, or `p` when the denominator is one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational in canonical form.
pub type Rational = num_rational::BigRational;

/// Integer literal as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics if `q == 0`; use [`checked_div`] for untrusted input.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int_to_rat(n: Int) -> Rational {
    Rational::from_integer(n)
}

/// `a / b`, rejecting a zero divisor.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::domain("division by zero"));
    }
    Ok(a / b)
}

/// `1 / a`, rejecting zero.
pub fn checked_recip(a: &Rational) -> Result<Rational> {
    if a.is_zero() {
        return Err(Error::domain("reciprocal of zero"));
    }
    Ok(a.recip())
}

/// `a^e` for any integer exponent. `0^0 = 1`; a negative power of zero is an error.
pub fn checked_pow(a: &Rational, e: i64) -> Result<Rational> {
    if e < 0 {
        let inv = checked_recip(a)?;
        Ok(pow_u(&inv, e.unsigned_abs()))
    } else {
        Ok(pow_u(a, e as u64))
    }
}

/// `a^e` for a non-negative exponent, with `0^0 = 1`.
pub fn pow_u(a: &Rational, e: u64) -> Rational {
    let mut result = Rational::one();
    let mut base = a.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    result
}

/// `(-1)^e` as a rational.
pub fn sign_pow(e: u64) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn factorial(n: u64) -> Int {
    (2..=n).fold(Int::one(), |acc, i| acc * i)
}

pub fn factorial_rat(n: u64) -> Rational {
    int_to_rat(factorial(n))
}

/// Binomial coefficient `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn binomial_rat(n: u64, k: i64) -> Rational {
    int_to_rat(binomial(n, k))
}

/// Generalized binomial `r (r-1) ... (r-k+1) / k!` for rational `r`.
///
/// Uses the falling-factorial product, so it is exact and defined for every
/// rational upper argument.
pub fn gen_binomial(r: &Rational, k: u64) -> Rational {
    let mut num = Rational::one();
    let mut term = r.clone();
    for _ in 0..k {
        num *= &term;
        term -= Rational::one();
    }
    num / factorial_rat(k)
}

/// Parse `p/q`, `p`, or a signed variant of either. Whitespace is trimmed.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::usage(format!("not an exact rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::usage(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `p/q` (or `p`) rendering.
pub fn canonical(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` is a whole number.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// `r` as an `i64` if it is a whole number that fits.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if !is_integer(r) {
        return None;
    }
    i64::try_from(r.numer()).ok()
}

/// Largest integer `<= r`.
pub fn floor(r: &Rational) -> Int {
    r.numer().div_floor(r.denom())
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

//! Rationals carrying a symbolic power prefactor.
//!
//! `mantissa · base^exponent` with a rational exponent. The power is never
//! evaluated: two values are compared only when their scales agree, which is
//! how α-th powers with fractional α stay inside exact arithmetic.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{canonical, checked_pow, floor, is_integer, Rational};

/// The symbolic factor `base^exponent`, with exponent in `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scale {
    pub base: Rational,
    pub exponent: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScaledRational {
    mantissa: Rational,
    scale: Option<Scale>,
}

/// Outcome of comparing two scaled values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    NotEqual,
    /// Different symbolic scales; the values cannot be compared exactly.
    Incomparable,
}

impl ScaledRational {
    pub fn plain(r: Rational) -> Self {
        ScaledRational {
            mantissa: r,
            scale: None,
        }
    }

    pub fn zero() -> Self {
        Self::plain(Rational::zero())
    }

    /// `mantissa · base^exponent` in canonical form.
    ///
    /// The integer part of the exponent is multiplied into the mantissa, so the
    /// stored exponent lies in `[0, 1)`; an exponent of zero, a base of one or a
    /// zero mantissa leave a plain rational.
    pub fn new(mantissa: Rational, base: Rational, exponent: Rational) -> Result<Self> {
        if base.is_zero() {
            if exponent > Rational::zero() {
                return Ok(Self::zero());
            }
            if exponent.is_zero() {
                return Ok(Self::plain(mantissa));
            }
            return Err(Error::domain("zero base with non-positive exponent"));
        }
        if mantissa.is_zero() {
            return Ok(Self::zero());
        }
        let whole = floor(&exponent);
        let frac = &exponent - Rational::from_integer(whole.clone());
        let whole = i64::try_from(&whole).map_err(|_| Error::domain("exponent out of range"))?;
        let mantissa = mantissa * checked_pow(&base, whole)?;
        if frac.is_zero() || base.is_one() {
            return Ok(Self::plain(mantissa));
        }
        Ok(ScaledRational {
            mantissa,
            scale: Some(Scale {
                base,
                exponent: frac,
            }),
        })
    }

    pub fn mantissa(&self) -> &Rational {
        &self.mantissa
    }

    pub fn scale(&self) -> Option<&Scale> {
        self.scale.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    /// The value as a rational, when it carries no symbolic scale.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self.scale {
            None => Some(&self.mantissa),
            Some(_) => None,
        }
    }

    /// Same scale, different mantissa.
    pub fn with_mantissa(&self, mantissa: Rational) -> Self {
        if mantissa.is_zero() {
            return Self::zero();
        }
        ScaledRational {
            mantissa,
            scale: self.scale.clone(),
        }
    }

    pub fn mul_rational(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ScaledRational {
            mantissa: &self.mantissa * c,
            scale: self.scale.clone(),
        }
    }

    /// Sum of two values with the same scale; zero is neutral.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.scale != other.scale {
            return Err(non_homogeneous());
        }
        let m = &self.mantissa + &other.mantissa;
        if m.is_zero() {
            return Ok(Self::zero());
        }
        Ok(ScaledRational {
            mantissa: m,
            scale: self.scale.clone(),
        })
    }

    /// Product; the scales must share a base (or one side be plain).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let m = &self.mantissa * &other.mantissa;
        match (&self.scale, &other.scale) {
            (None, None) => Ok(Self::plain(m)),
            (Some(s), None) | (None, Some(s)) => Ok(ScaledRational {
                mantissa: m,
                scale: Some(s.clone()),
            }),
            (Some(a), Some(b)) if a.base == b.base => {
                Self::new(m, a.base.clone(), &a.exponent + &b.exponent)
            }
            _ => Err(non_homogeneous()),
        }
    }

    pub fn compare(&self, other: &Self) -> Comparison {
        if self.is_zero() || other.is_zero() {
            return if self.is_zero() && other.is_zero() {
                Comparison::Equal
            } else {
                Comparison::NotEqual
            };
        }
        if self.scale != other.scale {
            return Comparison::Incomparable;
        }
        if self.mantissa == other.mantissa {
            Comparison::Equal
        } else {
            Comparison::NotEqual
        }
    }
}

pub(crate) fn non_homogeneous() -> Error {
    Error::domain("non-homogeneous prefactor: sides carry different symbolic powers")
}

impl From<Rational> for ScaledRational {
    fn from(r: Rational) -> Self {
        Self::plain(r)
    }
}

/// `m` for plain values, otherwise `m*(b)^(e)`.
impl fmt::Display for ScaledRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.scale {
            None => write!(f, "{}", canonical(&self.mantissa)),
            Some(s) => {
                debug_assert!(!is_integer(&s.exponent));
                write!(
                    f,
                    "{}*({})^({})",
                    canonical(&self.mantissa),
                    canonical(&s.base),
                    canonical(&s.exponent)
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};

    #[test]
    fn integer_exponents_collapse() {
        let v = ScaledRational::new(rat(3), frac(2, 3), rat(2)).unwrap();
        assert_eq!(v.as_rational(), Some(&frac(4, 3)));
        let v = ScaledRational::new(rat(3), frac(2, 3), rat(-1)).unwrap();
        assert_eq!(v.as_rational(), Some(&frac(9, 2)));
        let v = ScaledRational::new(rat(5), rat(1), frac(1, 2)).unwrap();
        assert_eq!(v.as_rational(), Some(&rat(5)));
    }

    #[test]
    fn exponent_is_reduced_to_unit_interval() {
        let v = ScaledRational::new(rat(1), rat(2), frac(5, 2)).unwrap();
        assert_eq!(v.mantissa(), &rat(4));
        assert_eq!(v.scale().unwrap().exponent, frac(1, 2));
        let w = ScaledRational::new(rat(1), rat(2), frac(-1, 2)).unwrap();
        assert_eq!(w.mantissa(), &frac(1, 2));
        assert_eq!(w.scale().unwrap().exponent, frac(1, 2));
        assert_eq!(v.mul(&w).unwrap().as_rational(), Some(&rat(4)));
        assert_eq!(v.to_string(), "4*(2)^(1/2)");
    }

    #[test]
    fn comparison_rules() {
        let a = ScaledRational::new(rat(3), rat(2), frac(1, 2)).unwrap();
        let b = ScaledRational::new(rat(3), rat(3), frac(1, 2)).unwrap();
        let c = ScaledRational::new(rat(6), rat(2), frac(3, 2)).unwrap();
        assert_eq!(a.compare(&a.clone()), Comparison::Equal);
        assert_eq!(a.compare(&b), Comparison::Incomparable);
        assert_eq!(a.compare(&c), Comparison::NotEqual);
        assert_eq!(a.compare(&ScaledRational::zero()), Comparison::NotEqual);
        assert_eq!(
            ScaledRational::zero().compare(&ScaledRational::zero()),
            Comparison::Equal
        );
        assert!(a.add(&b).is_err());
        assert_eq!(a.add(&a).unwrap().mantissa(), &rat(6));
        assert_eq!(a.add(&ScaledRational::zero()).unwrap(), a);
    }

    #[test]
    fn zero_base() {
        assert!(ScaledRational::new(rat(1), rat(0), frac(1, 2))
            .unwrap()
            .is_zero());
        assert!(ScaledRational::new(rat(1), rat(0), frac(-1, 2)).is_err());
    }
}

//! Number and polynomial families, each reachable by an explicit sum and by
//! the series engine so that the two routes can cross-check each other.

mod bernoulli;
mod euler;
mod geometric;
mod gf;
mod memo;
mod second_kind;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

pub use bernoulli::{
    apostol_bernoulli_by_series, apostol_bernoulli_higher, apostol_bernoulli_poly,
    apostol_bernoulli_value, bernoulli_classical, bernoulli_higher, bernoulli_higher_at,
    bernoulli_higher_poly,
};
pub use euler::{
    apostol_euler_by_series, apostol_euler_higher, apostol_euler_mantissa,
    apostol_euler_mantissa_series, apostol_euler_poly, euler_higher, euler_is_plain,
    euler_prefactor_base,
};
pub use geometric::{
    bell, complementary_bell, euler_classical, exponential_poly, exponential_poly_by_recurrence,
    fubini, general_geometric, geometric_poly,
};
pub use gf::{generating_function, GfId, GfSeries};
pub use second_kind::bernoulli_second_kind;

use crate::error::{Error, Result};
use crate::exact::{rat, to_i64, Rational};
use crate::poly::Poly;
use crate::scaled::ScaledRational;

/// Stable identifiers for every family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    ExponentialPoly,
    Bell,
    ComplementaryBell,
    GeometricPoly,
    Fubini,
    GeneralGeometric,
    EulerClassical,
    EulerHigher,
    ApostolEuler,
    ApostolEulerHigher,
    BernoulliClassical,
    BernoulliHigher,
    ApostolBernoulli,
    ApostolBernoulliHigher,
    BernoulliSecondKind,
}

impl FamilyId {
    pub const ALL: [FamilyId; 15] = [
        FamilyId::ExponentialPoly,
        FamilyId::Bell,
        FamilyId::ComplementaryBell,
        FamilyId::GeometricPoly,
        FamilyId::Fubini,
        FamilyId::GeneralGeometric,
        FamilyId::EulerClassical,
        FamilyId::EulerHigher,
        FamilyId::ApostolEuler,
        FamilyId::ApostolEulerHigher,
        FamilyId::BernoulliClassical,
        FamilyId::BernoulliHigher,
        FamilyId::ApostolBernoulli,
        FamilyId::ApostolBernoulliHigher,
        FamilyId::BernoulliSecondKind,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::ExponentialPoly => "exponential-poly",
            FamilyId::Bell => "bell",
            FamilyId::ComplementaryBell => "complementary-bell",
            FamilyId::GeometricPoly => "geometric-poly",
            FamilyId::Fubini => "fubini",
            FamilyId::GeneralGeometric => "general-geometric",
            FamilyId::EulerClassical => "euler-classical",
            FamilyId::EulerHigher => "euler-higher",
            FamilyId::ApostolEuler => "apostol-euler",
            FamilyId::ApostolEulerHigher => "apostol-euler-higher",
            FamilyId::BernoulliClassical => "bernoulli-classical",
            FamilyId::BernoulliHigher => "bernoulli-higher",
            FamilyId::ApostolBernoulli => "apostol-bernoulli",
            FamilyId::ApostolBernoulliHigher => "apostol-bernoulli-higher",
            FamilyId::BernoulliSecondKind => "bernoulli-second-kind",
        }
    }

    /// Families whose natural value is a polynomial in `x`.
    pub fn is_polynomial(self) -> bool {
        matches!(
            self,
            FamilyId::ExponentialPoly | FamilyId::GeometricPoly | FamilyId::GeneralGeometric
        )
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::usage(format!("unknown family {s:?}")))
    }
}

/// Parameter slots shared by the families. Unused slots are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub alpha: Option<Rational>,
    pub l: Option<u64>,
    pub lambda: Option<Rational>,
    /// Evaluation point; polynomial families return the polynomial when absent.
    pub x: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyValue {
    Poly(Poly),
    Number(ScaledRational),
}

impl fmt::Display for FamilyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyValue::Poly(p) => write!(f, "{p}"),
            FamilyValue::Number(v) => write!(f, "{v}"),
        }
    }
}

fn positive_l(params: &FamilyParams) -> Result<u64> {
    match params.l {
        Some(0) => Err(Error::domain("l must be a positive integer")),
        Some(l) => Ok(l),
        None => Ok(1),
    }
}

fn alpha_or_one(params: &FamilyParams) -> Rational {
    params.alpha.clone().unwrap_or_else(Rational::one)
}

fn lambda_or_one(params: &FamilyParams) -> Rational {
    params.lambda.clone().unwrap_or_else(Rational::one)
}

/// Value of family `id` at index `n`.
///
/// Defaults: `α = 1`, `l = 1`, `λ = 1`, and `x = 0` for the number families
/// that accept a polynomial argument.
pub fn evaluate(id: FamilyId, n: u64, params: &FamilyParams) -> Result<FamilyValue> {
    let x0 = params.x.clone().unwrap_or_else(Rational::zero);
    let poly_or_value = |p: Poly| match &params.x {
        Some(x) => FamilyValue::Number(p.eval(x).into()),
        None => FamilyValue::Poly(p),
    };
    let number = |r: Rational| FamilyValue::Number(r.into());
    Ok(match id {
        FamilyId::ExponentialPoly => poly_or_value(exponential_poly(n)),
        FamilyId::Bell => number(bell(n)),
        FamilyId::ComplementaryBell => number(complementary_bell(n)),
        FamilyId::GeometricPoly => poly_or_value(geometric_poly(n)),
        FamilyId::Fubini => number(fubini(n)),
        FamilyId::GeneralGeometric => poly_or_value(general_geometric(n, &alpha_or_one(params))?),
        FamilyId::EulerClassical => number(euler_classical(n)),
        FamilyId::EulerHigher => {
            FamilyValue::Number(apostol_euler_poly(n, &alpha_or_one(params), &x0, &rat(1))?)
        }
        FamilyId::ApostolEuler => {
            FamilyValue::Number(apostol_euler_poly(n, &rat(1), &x0, &lambda_or_one(params))?)
        }
        FamilyId::ApostolEulerHigher => FamilyValue::Number(apostol_euler_poly(
            n,
            &alpha_or_one(params),
            &x0,
            &lambda_or_one(params),
        )?),
        FamilyId::BernoulliClassical => number(bernoulli_higher_at(n, 1, &x0)),
        FamilyId::BernoulliHigher => number(bernoulli_higher_at(n, positive_l(params)?, &x0)),
        FamilyId::ApostolBernoulli => {
            number(apostol_bernoulli_poly(n, 1, &x0, &lambda_or_one(params))?)
        }
        FamilyId::ApostolBernoulliHigher => number(apostol_bernoulli_poly(
            n,
            positive_l(params)?,
            &x0,
            &lambda_or_one(params),
        )?),
        FamilyId::BernoulliSecondKind => number(bernoulli_second_kind(n)),
    })
}

/// Parse a positive integer order such as `l`.
pub fn parse_order(r: &Rational) -> Result<u64> {
    match to_i64(r) {
        Some(v) if v >= 1 => Ok(v as u64),
        _ => Err(Error::domain("order must be a positive integer")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn ids_round_trip() {
        for id in FamilyId::ALL {
            assert_eq!(id.as_str().parse::<FamilyId>().unwrap(), id);
        }
        assert!(matches!("nope".parse::<FamilyId>(), Err(Error::Usage(_))));
    }

    #[test]
    fn evaluate_dispatch() {
        let p = FamilyParams::default();
        assert_eq!(evaluate(FamilyId::Bell, 6, &p).unwrap().to_string(), "203");
        let g = FamilyParams {
            alpha: Some(rat(3)),
            ..Default::default()
        };
        assert_eq!(
            evaluate(FamilyId::GeneralGeometric, 2, &g)
                .unwrap()
                .to_string(),
            "3x+12x^2"
        );
        let bad = FamilyParams {
            l: Some(2),
            lambda: Some(rat(1)),
            ..Default::default()
        };
        let err = evaluate(FamilyId::ApostolBernoulliHigher, 4, &bad).unwrap_err();
        assert_eq!(
            err.to_string(),
            "lambda=1 not in domain; use bernoulli-higher"
        );
        let half = FamilyParams {
            alpha: Some(frac(1, 2)),
            lambda: Some(rat(2)),
            ..Default::default()
        };
        assert_eq!(
            evaluate(FamilyId::ApostolEulerHigher, 0, &half)
                .unwrap()
                .to_string(),
            "1*(2/3)^(1/2)"
        );
        assert_eq!(
            evaluate(FamilyId::BernoulliSecondKind, 2, &p)
                .unwrap()
                .to_string(),
            "-1/12"
        );
    }
}

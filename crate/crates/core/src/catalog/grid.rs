use num_traits::{One, Zero};

use super::{AlphaDomain, Identity, Params, Shape, Slot, XMode};
use crate::error::{Error, Result};
use crate::exact::{canonical, frac, rat, to_i64, Rational};

/// Parameter ranges for a verification run.
///
/// Index ranges are explicit lists so that an empty grid is expressible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridConfig {
    /// `n` for two-index identities.
    pub n: Vec<u64>,
    /// `m` for two-index identities.
    pub m: Vec<u64>,
    /// Cap on `n + m` for two-index identities.
    pub max_sum: Option<u64>,
    /// The index of single-index identities.
    pub single: Vec<u64>,
    /// The index of connection formulas.
    pub connection: Vec<u64>,
    /// `m` for generating-function shifts.
    pub gf_m: Vec<u64>,
    pub l: Vec<u64>,
    /// `α` values used by every identity with an `α` slot.
    pub alpha: Vec<Rational>,
    /// Extra `α` values for identities that accept fractional order.
    pub alpha_fractional: Vec<Rational>,
    pub lambda: Vec<Rational>,
    pub x: Vec<Rational>,
    pub order: Vec<usize>,
}

impl Default for GridConfig {
    /// The desk grid: `n, m ≤ 8` with `n + m ≤ 10`, `l, α ∈ {1..4}`,
    /// `α ∈ {1/2, 5/2}` where supported, `λ ∈ {2, 1/3, -3, 5}`,
    /// `x ∈ {1, -1/2, 2/3}`, series order 12.
    fn default() -> Self {
        GridConfig {
            n: (0..=8).collect(),
            m: (0..=8).collect(),
            max_sum: Some(10),
            single: (0..=12).collect(),
            connection: (0..=10).collect(),
            gf_m: (0..=4).collect(),
            l: (1..=4).collect(),
            alpha: (1..=4).map(rat).collect(),
            alpha_fractional: vec![frac(1, 2), frac(5, 2)],
            lambda: vec![rat(2), frac(1, 3), rat(-3), rat(5)],
            x: vec![rat(1), frac(-1, 2), frac(2, 3)],
            order: vec![12],
        }
    }
}

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v.dedup();
    v
}

impl GridConfig {
    /// A grid with no points at all.
    pub fn empty() -> Self {
        GridConfig {
            n: vec![],
            m: vec![],
            max_sum: None,
            single: vec![],
            connection: vec![],
            gf_m: vec![],
            l: vec![],
            alpha: vec![],
            alpha_fractional: vec![],
            lambda: vec![],
            x: vec![],
            order: vec![],
        }
    }

    fn index_values(&self, identity: &Identity, slot: Slot) -> Vec<u64> {
        let base = match (identity.shape, slot) {
            (Shape::Pair, Slot::N) => &self.n,
            (Shape::Pair, Slot::M) => &self.m,
            (Shape::Gf, _) => &self.gf_m,
            (Shape::Connection, _) => &self.connection,
            _ => &self.single,
        };
        let floor = if identity.shape == Shape::Pair {
            0
        } else {
            identity.min_index
        };
        sorted(base).into_iter().filter(|&v| v >= floor).collect()
    }

    fn alpha_values(&self, identity: &Identity) -> Vec<Rational> {
        let mut v = self.alpha.clone();
        if identity.alpha == AlphaDomain::Rational {
            v.extend(self.alpha_fractional.iter().cloned());
        }
        sorted(&v)
    }

    /// Grid points for `identity`, in nested-loop order over its slots.
    pub fn points(&self, identity: &Identity, certify_lambda: bool) -> Vec<GridPoint> {
        let mut pts = vec![GridPoint::default()];
        for slot in Slot::ALL {
            if !identity.has(slot) {
                continue;
            }
            let mut next = Vec::new();
            for p in pts {
                match slot {
                    Slot::N | Slot::M => {
                        for v in self.index_values(identity, slot) {
                            let mut q = p.clone();
                            if slot == Slot::N {
                                q.n = Some(v);
                            } else {
                                if identity.shape == Shape::Pair {
                                    if let Some(cap) = self.max_sum {
                                        if q.n.unwrap_or(0) + v > cap {
                                            continue;
                                        }
                                    }
                                }
                                q.m = Some(v);
                            }
                            next.push(q);
                        }
                    }
                    Slot::L => {
                        for v in sorted(&self.l) {
                            next.push(GridPoint {
                                l: Some(v),
                                ..p.clone()
                            });
                        }
                    }
                    Slot::Alpha => {
                        for v in self.alpha_values(identity) {
                            next.push(GridPoint {
                                alpha: Some(v),
                                ..p.clone()
                            });
                        }
                    }
                    Slot::Lambda => {
                        let values = if certify_lambda {
                            let order = self.order.iter().max().copied();
                            let d = identity.lambda_degree_bound(&p, order).unwrap_or(0);
                            (2..=2 * d as i64 + 3).map(rat).collect()
                        } else {
                            sorted(&self.lambda)
                        };
                        for v in values {
                            next.push(GridPoint {
                                lambda: Some(v),
                                ..p.clone()
                            });
                        }
                    }
                    Slot::X => {
                        for v in sorted(&self.x) {
                            next.push(GridPoint {
                                x: Some(v),
                                ..p.clone()
                            });
                        }
                    }
                    Slot::Order => {
                        for v in sorted(&self.order) {
                            next.push(GridPoint {
                                order: Some(v),
                                ..p.clone()
                            });
                        }
                    }
                }
            }
            pts = next;
        }
        pts
    }
}

/// A single assignment of the parameter slots.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GridPoint {
    pub n: Option<u64>,
    pub m: Option<u64>,
    pub l: Option<u64>,
    pub alpha: Option<Rational>,
    pub lambda: Option<Rational>,
    pub x: Option<Rational>,
    pub order: Option<usize>,
}

impl GridPoint {
    pub fn params(&self, identity: &Identity) -> Params {
        let mut out = Vec::new();
        for slot in Slot::ALL {
            if !identity.has(slot) {
                continue;
            }
            let v = match slot {
                Slot::N => self.n.map(|v| v.to_string()),
                Slot::M => self.m.map(|v| v.to_string()),
                Slot::L => self.l.map(|v| v.to_string()),
                Slot::Alpha => self.alpha.as_ref().map(canonical),
                Slot::Lambda => self.lambda.as_ref().map(canonical),
                Slot::X => self.x.as_ref().map(canonical),
                Slot::Order => self.order.map(|v| v.to_string()),
            };
            if let Some(v) = v {
                out.push((slot.name().to_string(), v));
            }
        }
        if identity.x_mode == XMode::Symbolic {
            out.push(("x".to_string(), "symbolic".to_string()));
        }
        Params(out)
    }

    pub(crate) fn n(&self) -> u64 {
        self.n.unwrap_or(0)
    }

    pub(crate) fn m(&self) -> u64 {
        self.m.unwrap_or(0)
    }

    pub(crate) fn order(&self) -> usize {
        self.order.unwrap_or(12)
    }

    /// `l`, which must be a positive integer.
    pub(crate) fn l(&self) -> Result<u64> {
        match self.l {
            Some(0) => Err(Error::domain("l must be a positive integer")),
            Some(l) => Ok(l),
            None => Ok(1),
        }
    }

    /// `α`, which must be positive.
    pub(crate) fn alpha(&self) -> Result<Rational> {
        let a = self.alpha.clone().unwrap_or_else(Rational::one);
        if a <= Rational::zero() {
            return Err(Error::domain(format!(
                "alpha must be positive, got {}",
                canonical(&a)
            )));
        }
        Ok(a)
    }

    /// `α` for identities stated for positive integer order only.
    pub(crate) fn alpha_int(&self) -> Result<u64> {
        let a = self.alpha()?;
        match to_i64(&a) {
            Some(v) => Ok(v as u64),
            None => Err(Error::domain(format!(
                "alpha must be an integer here, got {}",
                canonical(&a)
            ))),
        }
    }

    pub(crate) fn lambda(&self) -> Rational {
        self.lambda.clone().unwrap_or_else(Rational::one)
    }

    pub(crate) fn x(&self) -> Rational {
        self.x.clone().unwrap_or_else(Rational::zero)
    }
}

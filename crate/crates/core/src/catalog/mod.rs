//! Registry of identities between the families, each checked by exact
//! equality at every point of a parameter grid.

mod grid;
mod identities;
mod report;

use std::time::Instant;

use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use grid::{GridConfig, GridPoint};
pub use report::{IdentityReport, Params, RunReport, Status, Summary};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::poly::Poly;
use crate::scaled::{non_homogeneous, Comparison, ScaledRational};

/// Parameter slots, in the order they appear in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    N,
    M,
    L,
    Alpha,
    Lambda,
    X,
    Order,
}

impl Slot {
    pub const ALL: [Slot; 7] = [
        Slot::N,
        Slot::M,
        Slot::L,
        Slot::Alpha,
        Slot::Lambda,
        Slot::X,
        Slot::Order,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Slot::N => "n",
            Slot::M => "m",
            Slot::L => "l",
            Slot::Alpha => "alpha",
            Slot::Lambda => "lambda",
            Slot::X => "x",
            Slot::Order => "order",
        }
    }
}

/// How `x` enters an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XMode {
    /// Both sides are polynomials in `x`, compared coefficientwise.
    Symbolic,
    /// `x` is a grid slot.
    Sampled,
    /// The identity has no `x`.
    Absent,
}

/// Which index ranges of the grid an identity draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// `n` and `m` with a cap on `n + m`.
    Pair,
    /// A single index (`n` or `m`) from the long range.
    Single,
    /// A single index from the connection-formula range.
    Connection,
    /// Generating-function shift: `m` from the short range plus a series order.
    Gf,
    /// No index slots.
    Fixed,
}

/// Whether the `α` slot also takes the fractional grid values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaDomain {
    Integer,
    Rational,
}

pub type Checker = fn(&GridPoint) -> Result<(Value, Value)>;

/// One registered identity: a statement and a checker returning both sides.
pub struct Identity {
    pub id: &'static str,
    /// The identity in plain text.
    pub formula: &'static str,
    pub slots: &'static [Slot],
    pub x_mode: XMode,
    pub shape: Shape,
    pub alpha: AlphaDomain,
    /// Smallest value of the index slot for single-index identities.
    pub min_index: u64,
    pub check: Checker,
}

impl Identity {
    pub(crate) fn new(
        id: &'static str,
        formula: &'static str,
        slots: &'static [Slot],
        shape: Shape,
        check: Checker,
    ) -> Self {
        let x_mode = if slots.contains(&Slot::X) {
            XMode::Sampled
        } else {
            XMode::Absent
        };
        Identity {
            id,
            formula,
            slots,
            x_mode,
            shape,
            alpha: AlphaDomain::Rational,
            min_index: 0,
            check,
        }
    }

    pub(crate) fn symbolic(mut self) -> Self {
        self.x_mode = XMode::Symbolic;
        self
    }

    pub(crate) fn integer_alpha(mut self) -> Self {
        self.alpha = AlphaDomain::Integer;
        self
    }

    pub(crate) fn min_index(mut self, k: u64) -> Self {
        self.min_index = k;
        self
    }

    pub fn has(&self, slot: Slot) -> bool {
        self.slots.contains(&slot)
    }

    /// Degree bound `D` in `λ` at this point, for identities with a `λ` slot.
    ///
    /// Both sides are rational functions of `λ` of numerator and denominator
    /// degree at most `D`, so agreement at `2D + 2` distinct values certifies
    /// the identity for that choice of the other parameters.
    pub fn lambda_degree_bound(&self, p: &GridPoint, order: Option<usize>) -> Option<u64> {
        if !self.has(Slot::Lambda) {
            return None;
        }
        let alpha = p.alpha.as_ref().map_or(0, |a| {
            let f = i64::try_from(&crate::exact::floor(a)).unwrap_or(0);
            f.max(0) as u64 + 1
        });
        let sum = p.n.unwrap_or(0)
            + p.m.unwrap_or(0)
            + p.l.unwrap_or(0)
            + alpha
            + if self.has(Slot::Order) {
                order.unwrap_or(0) as u64
            } else {
                0
            }
            + 2;
        Some(4 * sum)
    }
}

/// One side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(ScaledRational),
    /// EGF values `n! [t^n]`, `n = 0..=N`.
    Series(Vec<ScaledRational>),
    Poly(Poly),
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Self {
        Value::Scalar(r.into())
    }
}

impl From<ScaledRational> for Value {
    fn from(s: ScaledRational) -> Self {
        Value::Scalar(s)
    }
}

impl From<Poly> for Value {
    fn from(p: Poly) -> Self {
        Value::Poly(p)
    }
}

impl Value {
    pub fn rational_series(values: Vec<Rational>) -> Self {
        Value::Series(values.into_iter().map(ScaledRational::from).collect())
    }

    /// Canonical text: `p/q`, `m*(b)^(e)`, a polynomial, or `[v0,v1,…]`.
    pub fn render(&self) -> String {
        match self {
            Value::Scalar(s) => s.to_string(),
            Value::Poly(p) => p.to_string(),
            Value::Series(v) => {
                let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
                format!("[{}]", parts.join(","))
            }
        }
    }

    pub fn compare(&self, other: &Value) -> Comparison {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => a.compare(b),
            (Value::Poly(a), Value::Poly(b)) => {
                if a == b {
                    Comparison::Equal
                } else {
                    Comparison::NotEqual
                }
            }
            (Value::Series(a), Value::Series(b)) => {
                if a.len() != b.len() {
                    return Comparison::NotEqual;
                }
                let mut out = Comparison::Equal;
                for (x, y) in a.iter().zip(b) {
                    match x.compare(y) {
                        Comparison::Incomparable => return Comparison::Incomparable,
                        Comparison::NotEqual => out = Comparison::NotEqual,
                        Comparison::Equal => {}
                    }
                }
                out
            }
            _ => Comparison::NotEqual,
        }
    }

    /// Number of coefficients a perturbation can target.
    fn positions(&self) -> usize {
        match self {
            Value::Scalar(_) => 1,
            Value::Series(v) => v.len().max(1),
            Value::Poly(p) => p.coeffs().len().max(1),
        }
    }

    /// Add one to the coefficient at `index` (clamped to the last position).
    pub fn perturbed(&self, index: usize) -> Value {
        let bump =
            |s: &ScaledRational| s.with_mantissa(s.mantissa() + Rational::from_integer(1.into()));
        let i = index.min(self.positions() - 1);
        match self {
            Value::Scalar(s) => Value::Scalar(bump(s)),
            Value::Series(v) if v.is_empty() => {
                Value::Series(vec![ScaledRational::plain(crate::exact::rat(1))])
            }
            Value::Series(v) => {
                let mut v = v.clone();
                v[i] = bump(&v[i]);
                Value::Series(v)
            }
            Value::Poly(p) => {
                let mut c = p.coeffs().to_vec();
                if c.is_empty() {
                    c.push(Rational::from_integer(0.into()));
                }
                c[i] += Rational::from_integer(1.into());
                Value::Poly(Poly::from_coeffs(c))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

/// Negative-control perturbation applied to every evaluated grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Perturbation {
    /// Side and coefficient drawn from a generator seeded by `seed`, the identity
    /// id and the grid point, so the choice does not depend on scheduling.
    Random {
        seed: u64,
    },
    At {
        side: Side,
        index: usize,
    },
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Worker threads; 0 uses the global pool.
    pub jobs: usize,
    /// Record elapsed microseconds (otherwise reported as 0).
    pub timings: bool,
    pub perturbation: Option<Perturbation>,
    /// Replace the `λ` slot by `2D + 2` sample points per grid point.
    pub certify_lambda: bool,
}

static REGISTRY: Lazy<Vec<Identity>> = Lazy::new(|| sorted(identities::main()));
static ERRATA: Lazy<Vec<Identity>> = Lazy::new(|| sorted(identities::errata()));

fn sorted(mut v: Vec<Identity>) -> Vec<Identity> {
    v.sort_by(|a, b| a.id.cmp(b.id));
    v
}

/// Identities that hold, sorted by id.
pub fn registry() -> &'static [Identity] {
    &REGISTRY
}

/// Statements in their printed form that fail; ids start with `erratum.`.
pub fn errata() -> &'static [Identity] {
    &ERRATA
}

pub fn find(id: &str) -> Option<&'static Identity> {
    registry().iter().chain(errata()).find(|i| i.id == id)
}

/// Resolve selectors: an exact id, or a prefix `p` selecting every `p.*` id.
pub fn select(selectors: &[String]) -> Result<Vec<&'static Identity>> {
    let mut out: Vec<&'static Identity> = Vec::new();
    for sel in selectors {
        let hits: Vec<&'static Identity> = match find(sel) {
            Some(i) => vec![i],
            None => {
                let prefix = format!("{sel}.");
                registry()
                    .iter()
                    .chain(errata())
                    .filter(|i| i.id.starts_with(&prefix))
                    .collect()
            }
        };
        if hits.is_empty() {
            return Err(Error::usage(format!("unknown identity {sel:?}")));
        }
        for h in hits {
            if !out.iter().any(|o| o.id == h.id) {
                out.push(h);
            }
        }
    }
    out.sort_by(|a, b| a.id.cmp(b.id));
    Ok(out)
}

fn point_seed(seed: u64, id: &str, params: &Params) -> u64 {
    // FNV-1a over the id and rendered parameters.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    let mut eat = |b: &[u8]| {
        for &x in b {
            h ^= x as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    eat(id.as_bytes());
    for (k, v) in params.iter() {
        eat(k.as_bytes());
        eat(b"=");
        eat(v.as_bytes());
        eat(b";");
    }
    h
}

fn apply_perturbation(
    p: Perturbation,
    id: &str,
    params: &Params,
    lhs: Value,
    rhs: Value,
) -> (Value, Value) {
    let (side, index) = match p {
        Perturbation::At { side, index } => (side, index),
        Perturbation::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(point_seed(seed, id, params));
            let side = if rng.gen_bool(0.5) {
                Side::Lhs
            } else {
                Side::Rhs
            };
            let n = match side {
                Side::Lhs => lhs.positions(),
                Side::Rhs => rhs.positions(),
            };
            (side, rng.gen_range(0..n))
        }
    };
    match side {
        Side::Lhs => (lhs.perturbed(index), rhs),
        Side::Rhs => (lhs, rhs.perturbed(index)),
    }
}

/// Evaluate one identity at one grid point.
pub fn evaluate_point(
    identity: &Identity,
    point: &GridPoint,
    options: &RunOptions,
) -> IdentityReport {
    let params = point.params(identity);
    let start = Instant::now();
    let outcome = (identity.check)(point);
    let micros = if options.timings {
        start.elapsed().as_micros() as u64
    } else {
        0
    };
    let skipped = |reason: String| IdentityReport {
        id: identity.id.to_string(),
        params: params.clone(),
        status: Status::SkippedDomain,
        lhs: String::new(),
        rhs: String::new(),
        micros,
        reason: Some(reason),
    };
    match outcome {
        Err(Error::Domain(reason)) => skipped(reason),
        Err(Error::Usage(reason)) => skipped(reason),
        Ok((lhs, rhs)) => {
            let (lhs, rhs) = match options.perturbation {
                Some(p) => apply_perturbation(p, identity.id, &params, lhs, rhs),
                None => (lhs, rhs),
            };
            let status = match lhs.compare(&rhs) {
                Comparison::Equal => Status::Pass,
                Comparison::NotEqual => Status::Fail,
                Comparison::Incomparable => return skipped(non_homogeneous().to_string()),
            };
            IdentityReport {
                id: identity.id.to_string(),
                params,
                status,
                lhs: lhs.render(),
                rhs: rhs.render(),
                micros,
                reason: None,
            }
        }
    }
}

/// Run `identities` over `grid`. Reports come out in id order, then grid
/// order, whatever the number of workers.
pub fn run_identities(
    identities: &[&Identity],
    grid: &GridConfig,
    options: &RunOptions,
) -> RunReport {
    let tasks: Vec<(&Identity, GridPoint)> = identities
        .iter()
        .flat_map(|id| {
            grid.points(id, options.certify_lambda)
                .into_iter()
                .map(move |p| (*id, p))
        })
        .collect();
    let work = || -> Vec<IdentityReport> {
        tasks
            .par_iter()
            .map(|(id, p)| evaluate_point(id, p, options))
            .collect()
    };
    let reports = if options.jobs == 0 {
        work()
    } else {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
        {
            Ok(pool) => pool.install(work),
            Err(_) => tasks
                .iter()
                .map(|(id, p)| evaluate_point(id, p, options))
                .collect(),
        }
    };
    RunReport::new(reports)
}

/// Run a single identity (exact id) over `grid`.
pub fn run_identity(
    id: &str,
    grid: &GridConfig,
    options: &RunOptions,
) -> Result<Vec<IdentityReport>> {
    let identity = find(id).ok_or_else(|| Error::usage(format!("unknown identity {id:?}")))?;
    Ok(run_identities(&[identity], grid, options).reports)
}

/// Run every identity in the main registry.
pub fn run_all(grid: &GridConfig, options: &RunOptions) -> RunReport {
    let all: Vec<&Identity> = registry().iter().collect();
    run_identities(&all, grid, options)
}

/// Run every erratum.
pub fn run_errata(grid: &GridConfig, options: &RunOptions) -> RunReport {
    let all: Vec<&Identity> = errata().iter().collect();
    run_identities(&all, grid, options)
}

//! Exact computation of exponential, geometric, Apostol–Bernoulli and
//! Apostol–Euler families, plus a registry that checks identities between them
//! over parameter grids.

pub mod catalog;
pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod families;
pub mod poly;
pub mod scaled;
pub mod series;

pub use error::{Error, Result};
pub use exact::{Int, Rational};
pub use poly::Poly;
pub use scaled::{Comparison, ScaledRational};
pub use series::Series;

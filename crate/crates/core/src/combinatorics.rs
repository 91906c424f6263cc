//! Stirling numbers of both kinds and the Stirling transform pair.

use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::{RwLock, RwLockUpgradableReadGuard};

use crate::exact::{int_to_rat, sign_pow, Int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    Second,
    FirstUnsigned,
}

/// Triangular table of Stirling numbers, grown row by row from the recurrences
///
/// `{n+1,k} = k{n,k} + {n,k-1}` and `[n+1,k] = n[n,k] + [n,k-1]`.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: Vec<Vec<Int>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind) -> Self {
        StirlingTable {
            kind,
            rows: vec![vec![Int::one()]],
        }
    }

    pub fn with_bound(kind: StirlingKind, n_max: usize) -> Self {
        let mut t = Self::new(kind);
        t.extend_to(n_max);
        t
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    /// Largest `n` whose row is present.
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn extend_to(&mut self, n_max: usize) {
        while self.rows.len() <= n_max {
            let n = self.rows.len() - 1;
            let prev = &self.rows[n];
            let mut next = vec![Int::zero(); n + 2];
            for (k, slot) in next.iter_mut().enumerate() {
                let stay = if k <= n {
                    let mult = match self.kind {
                        StirlingKind::Second => k,
                        StirlingKind::FirstUnsigned => n,
                    };
                    &prev[k] * mult
                } else {
                    Int::zero()
                };
                let step = if k >= 1 {
                    prev[k - 1].clone()
                } else {
                    Int::zero()
                };
                *slot = stay + step;
            }
            self.rows.push(next);
        }
    }

    /// Entry `(n, k)`, zero outside the triangle. Panics if row `n` is not built.
    pub fn get(&self, n: usize, k: i64) -> Int {
        let row = &self.rows[n];
        if k < 0 || k as usize >= row.len() {
            Int::zero()
        } else {
            row[k as usize].clone()
        }
    }

    pub fn row(&self, n: usize) -> &[Int] {
        &self.rows[n]
    }
}

static SECOND: Lazy<RwLock<StirlingTable>> =
    Lazy::new(|| RwLock::new(StirlingTable::new(StirlingKind::Second)));
static FIRST: Lazy<RwLock<StirlingTable>> =
    Lazy::new(|| RwLock::new(StirlingTable::new(StirlingKind::FirstUnsigned)));

// Readers share the lock; only the holder of the (exclusive) upgradable guard
// may grow the table, so there is never more than one writer.
fn lookup(table: &RwLock<StirlingTable>, n: u64, k: i64) -> Int {
    let n = n as usize;
    {
        let r = table.read();
        if r.n_max() >= n {
            return r.get(n, k);
        }
    }
    let guard = table.upgradable_read();
    if guard.n_max() >= n {
        return guard.get(n, k);
    }
    let mut w = RwLockUpgradableReadGuard::upgrade(guard);
    w.extend_to(n);
    w.get(n, k)
}

/// Stirling number of the second kind `{n, k}`.
pub fn stirling2(n: u64, k: i64) -> Int {
    lookup(&SECOND, n, k)
}

/// Unsigned Stirling number of the first kind `[n, k]`.
pub fn stirling1_unsigned(n: u64, k: i64) -> Int {
    lookup(&FIRST, n, k)
}

pub fn stirling2_rat(n: u64, k: i64) -> Rational {
    int_to_rat(stirling2(n, k))
}

/// Signed first-kind value `(-1)^(n-k) [n, k]`.
pub fn stirling1_signed_rat(n: u64, k: i64) -> Rational {
    if k < 0 || k as u64 > n {
        return Rational::zero();
    }
    sign_pow(n - k as u64) * int_to_rat(stirling1_unsigned(n, k))
}

/// `b_n = Σ_k {n,k} a_k`.
pub fn stirling_transform(a: &[Rational]) -> Vec<Rational> {
    (0..a.len())
        .map(|n| {
            (0..=n).fold(Rational::zero(), |acc, k| {
                acc + stirling2_rat(n as u64, k as i64) * &a[k]
            })
        })
        .collect()
}

/// `a_n = Σ_k (-1)^(n-k) [n,k] b_k`.
pub fn inverse_stirling_transform(b: &[Rational]) -> Vec<Rational> {
    (0..b.len())
        .map(|n| {
            (0..=n).fold(Rational::zero(), |acc, k| {
                acc + stirling1_signed_rat(n as u64, k as i64) * &b[k]
            })
        })
        .collect()
}

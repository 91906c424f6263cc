use clap::Args;
use expolys_core::catalog::{
    self, GridConfig, Identity, Perturbation, RunOptions, RunReport, Status,
};
use expolys_core::{Error, Result};

use crate::config::Settings;
use crate::{csv_line, Common, Format, Outcome};

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Every identity in the main registry.
    #[arg(long)]
    all: bool,
    /// Identity ids or id prefixes; repeatable or comma-separated.
    #[arg(long)]
    id: Vec<String>,
    /// The printed forms that are known to fail.
    #[arg(long)]
    errata: bool,
    /// Largest n for two-index identities and largest index for one-index ones.
    #[arg(long)]
    nmax: Option<u64>,
    /// Largest m for two-index identities and generating-function shifts.
    #[arg(long)]
    mmax: Option<u64>,
    /// Cap on n + m; defaults to 10 unless --nmax or --mmax is given.
    #[arg(long)]
    max_sum: Option<u64>,
    /// Comma-separated l values.
    #[arg(long)]
    l: Vec<String>,
    /// Comma-separated α values; replaces the default α list.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Vec<String>,
    /// Comma-separated x values, or `symbolic` to run only identities that
    /// compare polynomials in x.
    #[arg(long, allow_hyphen_values = true)]
    x: Vec<String>,
    /// Series order for generating-function identities.
    #[arg(long)]
    order: Option<usize>,
    /// Replace the λ list by enough sample points to certify each point.
    #[arg(long)]
    certify_lambda: bool,
    /// Add one to a seeded random coefficient of one side everywhere.
    #[arg(long)]
    perturb: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// Record per-point timings in microseconds.
    #[arg(long)]
    timings: bool,
    /// Also list passing points in plain output.
    #[arg(long)]
    verbose: bool,
    #[command(flatten)]
    common: Common,
}

const KEYS: [&str; 16] = [
    "all",
    "id",
    "errata",
    "nmax",
    "mmax",
    "max-sum",
    "l",
    "alpha",
    "lambda",
    "x",
    "order",
    "certify-lambda",
    "perturb",
    "seed",
    "timings",
    "verbose",
];

fn grid(a: &VerifyArgs, s: &Settings) -> Result<GridConfig> {
    let mut g = GridConfig::default();
    let nmax = s.value(a.nmax, "nmax")?;
    let mmax = s.value(a.mmax, "mmax")?;
    if let Some(n) = nmax {
        g.n = (0..=n).collect();
        g.single = (0..=n).collect();
        g.connection = (0..=n).collect();
    }
    if let Some(m) = mmax {
        g.m = (0..=m).collect();
        g.gf_m = (0..=m).collect();
    }
    g.max_sum = match s.value(a.max_sum, "max-sum")? {
        Some(cap) => Some(cap),
        None if nmax.is_some() || mmax.is_some() => None,
        None => g.max_sum,
    };
    let l = s.integers(&a.l, "l")?;
    if !l.is_empty() {
        g.l = l;
    }
    let alpha = s.rationals(&a.alpha, "alpha")?;
    if !alpha.is_empty() {
        g.alpha = alpha;
        g.alpha_fractional.clear();
    }
    let lambda = s.rationals(&a.lambda, "lambda")?;
    if !lambda.is_empty() {
        g.lambda = lambda;
    }
    let x = s.list(&a.x, "x");
    if x.iter().any(|v| v == "symbolic") {
        g.x.clear();
    } else if !x.is_empty() {
        g.x = s.rationals(&a.x, "x")?;
    }
    if let Some(o) = s.value(a.order, "order")? {
        g.order = vec![o];
    }
    Ok(g)
}

fn selection(a: &VerifyArgs, s: &Settings) -> Result<Vec<&'static Identity>> {
    let ids = s.list(&a.id, "id");
    let mut out: Vec<&'static Identity> = Vec::new();
    if !ids.is_empty() {
        out.extend(catalog::select(&ids)?);
    }
    if s.switch(a.all, "all")? {
        out.extend(catalog::registry());
    }
    if s.switch(a.errata, "errata")? {
        out.extend(catalog::errata());
    }
    if out.is_empty() {
        return Err(Error::usage(
            "nothing to verify; pass --all, --errata or --id",
        ));
    }
    out.sort_by(|x, y| x.id.cmp(y.id));
    out.dedup_by(|x, y| x.id == y.id);
    Ok(out)
}

fn plain(report: &RunReport, verbose: bool) -> String {
    let mut out = String::new();
    for r in &report.reports {
        let line = match r.status {
            Status::Pass if !verbose => continue,
            Status::Pass => format!("pass {} {}", r.id, r.params),
            Status::Fail => format!("FAIL {} {} lhs={} rhs={}", r.id, r.params, r.lhs, r.rhs),
            Status::SkippedDomain => {
                format!(
                    "skip {} {} ({})",
                    r.id,
                    r.params,
                    r.reason.as_deref().unwrap_or("domain")
                )
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn csv(report: &RunReport) -> String {
    let mut out = csv_line(&["id", "params", "status", "lhs", "rhs", "micros", "reason"]);
    for r in &report.reports {
        out += &csv_line(&[
            &r.id,
            &r.params.to_string(),
            r.status.as_str(),
            &r.lhs,
            &r.rhs,
            &r.micros.to_string(),
            r.reason.as_deref().unwrap_or(""),
        ]);
    }
    out
}

pub fn run(a: VerifyArgs) -> Result<Outcome> {
    let r = a.common.resolve(&KEYS)?;
    let s = &r.settings;
    let grid = grid(&a, s)?;
    let identities = selection(&a, s)?;
    let perturbation = if s.switch(a.perturb, "perturb")? {
        Some(Perturbation::Random {
            seed: s.value(a.seed, "seed")?.unwrap_or(0),
        })
    } else {
        None
    };
    let options = RunOptions {
        jobs: r.jobs,
        timings: s.switch(a.timings, "timings")?,
        perturbation,
        certify_lambda: s.switch(a.certify_lambda, "certify-lambda")?,
    };
    let report = catalog::run_identities(&identities, &grid, &options);
    let summary = format!(
        "summary: pass={} fail={} skipped={}\n",
        report.summary.pass, report.summary.fail, report.summary.skipped
    );
    let (stdout, stderr) = match r.format {
        Format::Plain => (
            plain(&report, s.switch(a.verbose, "verbose")?) + &summary,
            String::new(),
        ),
        Format::Json => (report.to_json() + "\n", summary),
        Format::Csv => (csv(&report), summary),
    };
    let code = if report.summary.fail > 0 { 1 } else { 0 };
    Ok(Outcome {
        stdout,
        stderr,
        code,
    })
}

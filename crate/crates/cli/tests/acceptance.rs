//! Acceptance run: one PASS/FAIL line per criterion, counterexamples indented
//! below a FAIL. Exits non-zero if any criterion fails.
//!
//! Every comparison is exact rational equality; the only tolerances are the
//! wall-clock budgets below.

use std::process::Command;
use std::time::{Duration, Instant};

use expolys_core::catalog::{
    self, GridConfig, Identity, Perturbation, RunOptions, RunReport, Status,
};
use expolys_core::combinatorics::{stirling1_unsigned, stirling2};
use expolys_core::exact::{factorial_rat, frac, rat};
use expolys_core::families::{
    apostol_bernoulli_by_series, apostol_bernoulli_higher, apostol_euler_by_series,
    apostol_euler_higher, bell, bernoulli_higher_at, exponential_poly, fubini, general_geometric,
    generating_function, FamilyParams, GfId,
};
use expolys_core::{Comparison, Series};

const BUDGET_ENUMERATION: Duration = Duration::from_secs(5);
const BUDGET_DUAL_ROUTE: Duration = Duration::from_secs(10);
const BUDGET_SPIVEY: Duration = Duration::from_secs(5);
const BUDGET_GF_SHIFT: Duration = Duration::from_secs(10);
const BUDGET_RECURRENCES: Duration = Duration::from_secs(30);
const BUDGET_SUMS: Duration = Duration::from_secs(5);
const BUDGET_CONNECTIONS: Duration = Duration::from_secs(5);
const BUDGET_NEGATIVE: Duration = Duration::from_secs(10);
const BUDGET_FULL_RUN: Duration = Duration::from_secs(60);

/// Counterexamples shown per failing check.
const SHOWN: usize = 3;

struct Verdict {
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            pass: true,
            detail: String::new(),
            notes: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, note: impl FnOnce() -> String) {
        if !ok {
            self.pass = false;
            self.notes.push(note());
        }
    }

    fn budget(&mut self, start: Instant, budget: Duration) {
        let t = start.elapsed();
        self.require(t < budget, || format!("took {t:.2?}, budget {budget:?}"));
        self.detail = format!("{}; {t:.2?} < {budget:?}", self.detail);
    }
}

fn opts() -> RunOptions {
    RunOptions {
        jobs: 1,
        ..RunOptions::default()
    }
}

fn ids(names: &[&str]) -> Vec<&'static Identity> {
    let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    catalog::select(&owned).expect("registered ids")
}

/// Require that `names` all pass on `grid`, with at least one evaluated point each.
fn check_group(v: &mut Verdict, label: &str, names: &[&str], grid: &GridConfig) -> RunReport {
    let selected = ids(names);
    let report = catalog::run_identities(&selected, grid, &opts());
    for id in &selected {
        let evaluated = report
            .reports
            .iter()
            .filter(|r| r.id == id.id && r.status != Status::SkippedDomain)
            .count();
        v.require(evaluated > 0, || {
            format!("{label}: {} has no evaluated grid point", id.id)
        });
    }
    let fails: Vec<_> = report
        .reports
        .iter()
        .filter(|r| r.status == Status::Fail)
        .collect();
    v.require(fails.is_empty(), || {
        let mut s = format!("{label}: {} failing point(s)", fails.len());
        let mut seen = Vec::new();
        for f in &fails {
            if seen.iter().filter(|id| *id == &f.id).count() < SHOWN {
                s += &format!("\n      {} {}: lhs={} rhs={}", f.id, f.params, f.lhs, f.rhs);
                seen.push(f.id.clone());
            }
        }
        s
    });
    report
}

fn print(n: u32, name: &str, v: Verdict) -> bool {
    println!(
        "{} criterion {n:>2}: {name} ({})",
        if v.pass { "PASS" } else { "FAIL" },
        v.detail
    );
    for note in &v.notes {
        println!("    {note}");
    }
    v.pass
}

// Brute-force oracles.

/// Block counts of every set partition of an `n`-set, by restricted growth strings.
fn partitions_by_blocks(n: usize) -> Vec<u64> {
    fn go(i: usize, n: usize, blocks: usize, out: &mut Vec<u64>) {
        if i == n {
            out[blocks] += 1;
            return;
        }
        for b in 0..=blocks {
            go(i + 1, n, blocks.max(b + 1), out);
        }
    }
    let mut out = vec![0; n + 1];
    if n == 0 {
        out[0] = 1;
    } else {
        go(0, n, 0, &mut out);
    }
    out
}

/// Number of ordered set partitions of the set `mask`, by choosing the first block.
fn ordered_partitions(mask: u32) -> u64 {
    if mask == 0 {
        return 1;
    }
    let mut total = 0;
    let mut sub = mask;
    while sub > 0 {
        total += ordered_partitions(mask & !sub);
        sub = (sub - 1) & mask;
    }
    total
}

/// Cycle counts over all permutations of `n` elements (Heap's algorithm).
fn permutations_by_cycles(n: usize) -> Vec<u64> {
    fn cycles(p: &[usize]) -> usize {
        let mut seen = vec![false; p.len()];
        let mut c = 0;
        for s in 0..p.len() {
            if !seen[s] {
                c += 1;
                let mut j = s;
                while !seen[j] {
                    seen[j] = true;
                    j = p[j];
                }
            }
        }
        c
    }
    let mut out = vec![0u64; n + 1];
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    out[cycles(&p)] += 1;
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out[cycles(&p)] += 1;
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn criterion_1() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    for n in 0..=10u64 {
        let counts = partitions_by_blocks(n as usize);
        let total: u64 = counts.iter().sum();
        v.require(bell(n) == rat(total as i64), || {
            format!("bell({n}) = {} but enumeration gives {total}", bell(n))
        });
        if n <= 9 {
            for (k, &c) in counts.iter().enumerate() {
                let s = stirling2(n, k as i64);
                v.require(s == c.into(), || {
                    format!("S2({n},{k}) = {s} but enumeration gives {c}")
                });
            }
            let cyc = permutations_by_cycles(n as usize);
            for (k, &c) in cyc.iter().enumerate() {
                let s = stirling1_unsigned(n, k as i64);
                v.require(s == c.into(), || {
                    format!("[{n},{k}] = {s} but enumeration gives {c}")
                });
            }
        }
        if n <= 8 {
            let e = ordered_partitions((1u32 << n) - 1);
            v.require(fubini(n) == rat(e as i64), || {
                format!("fubini({n}) = {} but enumeration gives {e}", fubini(n))
            });
        }
    }
    v.detail = "bell n<=10, fubini n<=8, Stirling n<=9 vs enumeration".into();
    v.budget(start, BUDGET_ENUMERATION);
    v
}

fn criterion_2() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let grid = GridConfig::default();
    const N: u64 = 14;
    let order = N as usize;
    // φ_n: the coefficient of x^k in e^{x(e^t-1)} is (e^t-1)^k/k!.
    let u = &Series::exp_linear(&rat(1), order) - &Series::one(order);
    for k in 0..=N {
        let uk = u
            .pow(k as i64)
            .expect("integer power")
            .scale(&(rat(1) / factorial_rat(k)));
        for n in 0..=N {
            let by_series = uk.egf_coeff(n as usize);
            let by_sum = exponential_poly(n).coeff(k as usize);
            v.require(by_series == by_sum, || {
                format!("phi_{n} [x^{k}]: {by_sum} vs series {by_series}")
            });
        }
    }
    for a in &grid.alpha {
        for x in &grid.x {
            let p = FamilyParams {
                alpha: Some(a.clone()),
                x: Some(x.clone()),
                ..FamilyParams::default()
            };
            let g = generating_function(GfId::GeneralGeometric, 0, &p, order)
                .expect("unit series")
                .egf_values();
            for n in 0..=N {
                let by_sum = general_geometric(n, a).expect("alpha > 0").eval(x);
                let ok = g[n as usize].as_rational() == Some(&by_sum);
                v.require(ok, || {
                    format!("w_{n},{a}({x}): {by_sum} vs series {}", g[n as usize])
                });
            }
        }
    }
    for lam in &grid.lambda {
        for a in &grid.alpha {
            for n in 0..=N {
                let s = apostol_euler_higher(n, a, lam).expect("lambda != -1");
                let t = apostol_euler_by_series(n, a, &rat(0), lam).expect("lambda != -1");
                v.require(s.compare(&t) == Comparison::Equal, || {
                    format!("E_{n}^({a})({lam}): {s} vs series {t}")
                });
            }
        }
        for &l in &grid.l {
            for n in 0..=N {
                let s = apostol_bernoulli_higher(n, l, lam).expect("lambda != 1");
                let t = apostol_bernoulli_by_series(n, l, &rat(0), lam).expect("series");
                v.require(s == t, || format!("B_{n}^({l})({lam}): {s} vs series {t}"));
            }
        }
    }
    v.detail = format!("phi, w, E, B for n<={N}, explicit sums vs series");
    v.budget(start, BUDGET_DUAL_ROUTE);
    v
}

fn criterion_3() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let grid = GridConfig {
        n: (0..=12).collect(),
        m: (0..=12).collect(),
        max_sum: Some(12),
        ..GridConfig::default()
    };
    let report = check_group(&mut v, "spivey", &["spivey", "spivey.bell"], &grid);
    v.detail = format!("{} points, n+m<=12", report.reports.len());
    v.budget(start, BUDGET_SPIVEY);
    v
}

fn has_fractional_alpha_pass(report: &RunReport, id: &str) -> bool {
    report.reports.iter().any(|r| {
        r.id == id
            && r.status == Status::Pass
            && r.params.get("alpha").is_some_and(|a| a.contains('/'))
    })
}

fn criterion_4() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let names = [
        "gf-phi-shift",
        "gf-w-shift",
        "gf-apostol-euler-shift",
        "gf-apostol-bernoulli-shift",
    ];
    let report = check_group(&mut v, "gf shifts", &names, &GridConfig::default());
    for id in ["gf-w-shift", "gf-apostol-euler-shift"] {
        v.require(has_fractional_alpha_pass(&report, id), || {
            format!("{id}: no passing non-integer alpha point")
        });
    }
    v.detail = format!("{} points, order 12, m<=4", report.reports.len());
    v.budget(start, BUDGET_GF_SHIFT);
    v
}

fn criterion_5() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let grid = GridConfig::default();
    let mut points = 0;
    let groups: [(&str, &[&str]); 7] = [
        (
            "general geometric recurrence (symbolic)",
            &["w-general-recurrence"],
        ),
        (
            "Apostol-Euler recurrence and specializations",
            &["apostol-euler-recurrence"],
        ),
        (
            "Apostol-Bernoulli recurrence and specializations as printed",
            &[
                "apostol-bernoulli-recurrence",
                "erratum.apostol-bernoulli-recurrence.bernoulli-higher",
                "erratum.apostol-bernoulli-recurrence.bernoulli",
            ],
        ),
        (
            "higher-order Bernoulli recurrence, Stirling and Norlund forms as printed",
            &[
                "erratum.bernoulli-higher-recurrence",
                "erratum.bernoulli-higher-recurrence.stirling",
                "erratum.bernoulli-higher-recurrence.norlund",
            ],
        ),
        (
            "Apostol-Bernoulli diagonal recurrence",
            &["apostol-bernoulli-diag-recurrence"],
        ),
        ("polynomial shift proposition", &["poly-shift-prop"]),
        (
            "polynomial shift theorem and specializations",
            &["poly-shift-theorem"],
        ),
    ];
    for (label, names) in groups {
        points += check_group(&mut v, label, names, &grid).reports.len();
    }
    v.detail = format!("{points} points on the default grid");
    v.budget(start, BUDGET_RECURRENCES);
    v
}

fn criterion_6() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let by_m = GridConfig {
        single: (0..=8).collect(),
        ..GridConfig::default()
    };
    let by_n = GridConfig {
        single: (1..=12).collect(),
        ..GridConfig::default()
    };
    let mut points = 0;
    points += check_group(&mut v, "finite sums", &["finite-sums"], &by_m)
        .reports
        .len();
    let diagonal: [(&str, &[&str], &GridConfig); 4] = [
        (
            "diagonal values at n = 0 of the shift theorem as printed",
            &[
                "diag-bernoulli-values.reflection",
                "diag-bernoulli-values.stirling",
                "erratum.diag-bernoulli-values.factorial",
            ],
            &by_m,
        ),
        (
            "diagonal values with m+l replaced by n as printed",
            &["erratum.diag-bernoulli-values.restated"],
            &by_n,
        ),
        (
            "diagonal values at l = 1 as printed",
            &[
                "erratum.diag-bernoulli-values.classical",
                "diag-bernoulli-values.classical",
            ],
            &by_n,
        ),
        (
            "second-kind cross-check, both relations",
            &[
                "diag-bernoulli-values.second-kind",
                "erratum.diag-bernoulli-values.second-kind",
            ],
            &by_n,
        ),
    ];
    for (label, names, grid) in diagonal {
        points += check_group(&mut v, label, names, grid).reports.len();
    }
    // Independent check of the true relation against the t/log(1+t) series.
    let c = generating_function(GfId::BernoulliSecondKind, 0, &FamilyParams::default(), 12)
        .expect("series");
    for n in 1..=12u64 {
        let lhs = bernoulli_higher_at(n, n, &rat(1));
        let rhs = factorial_rat(n) * c.coefficients[n as usize].as_rational().expect("plain");
        v.require(lhs == rhs, || {
            format!("B_{n}^({n})(1) = {lhs} but n! c_n = {rhs}")
        });
    }
    v.detail = format!("{points} points, m<=8, l<=4, 1<=n<=12");
    v.budget(start, BUDGET_SUMS);
    v
}

fn criterion_7() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let names = [
        "apostol-bernoulli-classical.geometric",
        "w-euler-connection",
        "w-bernoulli-connection",
    ];
    let report = check_group(&mut v, "connections", &names, &GridConfig::default());
    v.require(
        has_fractional_alpha_pass(&report, "w-euler-connection"),
        || "w-euler-connection: no passing non-integer alpha point".into(),
    );
    v.detail = format!("{} points on the default grid", report.reports.len());
    v.budget(start, BUDGET_CONNECTIONS);
    v
}

fn criterion_8() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let grid = GridConfig {
        n: (0..=3).collect(),
        m: (0..=3).collect(),
        max_sum: Some(5),
        single: (0..=5).collect(),
        connection: (0..=4).collect(),
        gf_m: (0..=2).collect(),
        l: vec![1, 2],
        alpha: vec![rat(1), rat(2)],
        alpha_fractional: vec![frac(1, 2)],
        lambda: vec![rat(2), frac(1, 3), rat(-3)],
        x: vec![rat(1), frac(-1, 2)],
        order: vec![6],
    };
    let options = RunOptions {
        jobs: 1,
        perturbation: Some(Perturbation::Random { seed: 2024 }),
        ..RunOptions::default()
    };
    let main = catalog::run_all(&grid, &options);
    for id in catalog::registry() {
        let mine: Vec<_> = main.reports.iter().filter(|r| r.id == id.id).collect();
        let fails = mine.iter().filter(|r| r.status == Status::Fail).count();
        let passes = mine.iter().filter(|r| r.status == Status::Pass).count();
        v.require(fails > 0 && passes == 0, || {
            format!("{}: {fails} fail, {passes} pass under perturbation", id.id)
        });
    }
    let errata = catalog::run_errata(&grid, &options);
    for id in catalog::errata() {
        let fails = errata
            .reports
            .iter()
            .filter(|r| r.id == id.id && r.status == Status::Fail)
            .count();
        v.require(fails > 0, || {
            format!("{}: no fail under perturbation", id.id)
        });
    }
    v.detail = format!(
        "{} identities, {} points, all perturbed points fail",
        catalog::registry().len() + catalog::errata().len(),
        main.reports.len() + errata.reports.len()
    );
    v.budget(start, BUDGET_NEGATIVE);
    v
}

fn expolys(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_expolys"))
        .args(args)
        .output()
        .expect("run expolys");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn criterion_9() -> Verdict {
    let mut v = Verdict::new();
    let (c1, j1, _) = expolys(&["verify", "--all", "--format", "json", "--jobs", "1"]);
    let (c4, j4, _) = expolys(&["verify", "--all", "--format", "json", "--jobs", "4"]);
    v.require(c1 == 0 && c4 == 0, || {
        format!("verify --all exit codes {c1}, {c4}")
    });
    v.require(j1 == j4, || "jobs 1 and jobs 4 reports differ".into());
    match RunReport::from_json(&j1) {
        Ok(r) => v.require(r.to_json() + "\n" == j1, || {
            "JSON report does not round-trip".into()
        }),
        Err(e) => v.require(false, || format!("JSON report does not parse: {e}")),
    }
    let (fail_code, _, _) = expolys(&["verify", "--errata", "--nmax", "3", "--mmax", "3"]);
    v.require(fail_code == 1, || {
        format!("failing run exit {fail_code}, want 1")
    });
    let (usage_code, _, _) = expolys(&["verify", "--id", "no-such-id"]);
    v.require(usage_code == 2, || {
        format!("unknown id exit {usage_code}, want 2")
    });
    let (domain_code, _, err) = expolys(&[
        "table",
        "--family",
        "apostol-bernoulli-higher",
        "--l",
        "2",
        "--lambda",
        "1",
        "--n",
        "4",
    ]);
    v.require(
        domain_code == 2 && err.contains("lambda=1 not in domain; use bernoulli-higher"),
        || format!("lambda=1 table exit {domain_code}: {err}"),
    );
    v.detail = format!(
        "{} bytes identical at jobs 1 and 4; exit codes 0/1/2",
        j1.len()
    );
    v
}

fn criterion_10() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let (code, out, _) = expolys(&["verify", "--all"]);
    v.require(code == 0, || format!("exit {code}"));
    let summary = out.lines().last().unwrap_or("").to_string();
    v.require(summary.contains("fail=0"), || {
        format!("summary {summary:?}")
    });
    v.detail = summary;
    v.budget(start, BUDGET_FULL_RUN);
    v
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 10] = [
        ("enumeration oracles", criterion_1),
        ("dual-route family equality", criterion_2),
        ("Spivey identity", criterion_3),
        ("generating-function shifts", criterion_4),
        ("recurrence suite", criterion_5),
        ("finite sums and diagonal values", criterion_6),
        ("connection formulas", criterion_7),
        ("negative control", criterion_8),
        ("determinism and exit codes", criterion_9),
        ("end-to-end runtime", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        if !print(i as u32 + 1, name, f()) {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

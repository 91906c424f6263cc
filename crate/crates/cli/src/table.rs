use clap::Args;
use expolys_core::families::{evaluate, FamilyId, FamilyParams};
use expolys_core::Result;
use serde_json::json;

use crate::{csv_line, Common, Format, Outcome};

#[derive(Args, Debug)]
pub struct TableArgs {
    /// Family id, e.g. bell, general-geometric, apostol-euler-higher.
    #[arg(long)]
    family: Option<String>,
    /// Largest index; rows run 0..=n.
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long)]
    l: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Evaluation point; polynomial families print polynomials when absent.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[command(flatten)]
    common: Common,
}

const KEYS: [&str; 6] = ["family", "n", "alpha", "l", "lambda", "x"];

pub fn run(a: TableArgs) -> Result<Outcome> {
    let r = a.common.resolve(&KEYS)?;
    let s = &r.settings;
    let family: FamilyId = s
        .value(a.family, "family")?
        .ok_or_else(|| expolys_core::Error::usage("table needs --family"))?
        .parse()?;
    let n_max = s.value(a.n, "n")?.unwrap_or(10);
    let params = FamilyParams {
        alpha: s.rational(a.alpha, "alpha")?,
        l: s.value(a.l, "l")?,
        lambda: s.rational(a.lambda, "lambda")?,
        x: s.rational(a.x, "x")?,
    };
    let rows = (0..=n_max)
        .map(|n| evaluate(family, n, &params).map(|v| (n, v.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let stdout = match r.format {
        Format::Plain => rows.iter().map(|(n, v)| format!("{n},{v}\n")).collect(),
        Format::Csv => {
            let mut out = csv_line(&["n", "value"]);
            for (n, v) in &rows {
                out += &csv_line(&[&n.to_string(), v]);
            }
            out
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(n, v)| json!({"n": n, "value": v}))
                .collect();
            let doc = json!({"family": family.as_str(), "rows": rows});
            serde_json::to_string_pretty(&doc).expect("json value") + "\n"
        }
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: 0,
    })
}

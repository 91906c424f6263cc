use clap::Args;
use expolys_core::families::{generating_function, FamilyParams, GfId};
use expolys_core::{Error, Result, ScaledRational};
use serde_json::json;

use crate::{csv_line, Common, Format, Outcome};

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// Generating function: exp-bell, phi-shift, geometric, general-geometric,
    /// w-shift, apostol-euler, apostol-bernoulli, bernoulli-higher,
    /// bernoulli-second-kind.
    #[arg(long)]
    gf: Option<String>,
    /// Highest power of t.
    #[arg(long)]
    order: Option<usize>,
    /// Shift index for phi-shift and w-shift.
    #[arg(long)]
    m: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long)]
    l: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[command(flatten)]
    common: Common,
}

const KEYS: [&str; 7] = ["gf", "order", "m", "alpha", "l", "lambda", "x"];

fn polynomial_text(coeffs: &[ScaledRational]) -> String {
    let term = |i: usize, c: &ScaledRational| {
        let c = c.to_string();
        let c = if c.contains(['/', '-', '*']) {
            format!("({c})")
        } else {
            c
        };
        match i {
            0 => c,
            1 => format!("{c} t"),
            _ => format!("{c} t^{i}"),
        }
    };
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| term(i, c))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn run(a: SeriesArgs) -> Result<Outcome> {
    let r = a.common.resolve(&KEYS)?;
    let s = &r.settings;
    let gf: GfId = s
        .value(a.gf, "gf")?
        .ok_or_else(|| Error::usage("series needs --gf"))?
        .parse()?;
    let order = s.value(a.order, "order")?.unwrap_or(10);
    let m = s.value(a.m, "m")?.unwrap_or(0);
    let params = FamilyParams {
        alpha: s.rational(a.alpha, "alpha")?,
        l: s.value(a.l, "l")?,
        lambda: s.rational(a.lambda, "lambda")?,
        x: s.rational(a.x, "x")?,
    };
    let series = generating_function(gf, m, &params, order)?;
    let coeffs: Vec<String> = series.coefficients.iter().map(|c| c.to_string()).collect();
    let egf: Vec<String> = series.egf_values().iter().map(|c| c.to_string()).collect();
    let stdout = match r.format {
        Format::Plain => format!(
            "series: {}\negf: {}\n",
            polynomial_text(&series.coefficients),
            egf.join(", ")
        ),
        Format::Csv => {
            let mut out = csv_line(&["n", "coefficient", "egf"]);
            for (n, (c, e)) in coeffs.iter().zip(&egf).enumerate() {
                out += &csv_line(&[&n.to_string(), c, e]);
            }
            out
        }
        Format::Json => {
            let doc =
                json!({"gf": gf.as_str(), "order": order, "coefficients": coeffs, "egf": egf});
            serde_json::to_string_pretty(&doc).expect("json value") + "\n"
        }
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: 0,
    })
}

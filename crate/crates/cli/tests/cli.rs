use std::io::Write;
use std::process::{Command, Output};

fn expolys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_expolys"))
        .args(args)
        .output()
        .expect("spawn expolys")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn bell_table_as_csv() {
    let o = expolys(&["table", "--family", "bell", "--n", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,value\n0,1\n1,1\n2,2\n3,5\n4,15\n5,52\n");
}

#[test]
fn csv_rows_keep_polynomials_in_one_cell() {
    let o = expolys(&[
        "table",
        "--family",
        "general-geometric",
        "--alpha",
        "3",
        "--n",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,value\n0,1\n1,3x\n2,3x+12x^2\n");
    let o = expolys(&[
        "verify", "--id", "spivey", "--nmax", "1", "--mmax", "1", "--x", "symbolic", "--format",
        "csv",
    ]);
    let body = stdout(&o);
    let mut rows = csv::Reader::from_reader(body.as_bytes());
    for row in rows.records() {
        let row = row.unwrap();
        assert_eq!(row.len(), 7);
        assert_eq!(&row[2], "pass");
    }
}

#[test]
fn lambda_one_is_a_domain_error() {
    let o = expolys(&["table", "--family", "apostol-bernoulli", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("lambda=1 not in domain"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn apostol_bernoulli_series() {
    let o = expolys(&[
        "series",
        "--gf",
        "apostol-bernoulli",
        "--lambda",
        "2",
        "--l",
        "1",
        "--order",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        doc["coefficients"],
        serde_json::json!(["0", "1", "-2", "3"])
    );
    assert_eq!(doc["egf"], serde_json::json!(["0", "1", "-4", "18"]));
}

#[test]
fn verify_exit_codes() {
    let ok = expolys(&[
        "verify", "--id", "spivey", "--nmax", "4", "--mmax", "2", "--jobs", "1",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(
        stdout(&ok).ends_with("fail=0 skipped=0\n"),
        "{}",
        stdout(&ok)
    );
    let bad = expolys(&[
        "verify", "--errata", "--nmax", "3", "--mmax", "2", "--jobs", "1",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("FAIL erratum."));
    let unknown = expolys(&["verify", "--id", "no-such-identity"]);
    assert_eq!(unknown.status.code(), Some(2));
    let nothing = expolys(&["verify"]);
    assert_eq!(nothing.status.code(), Some(2));
}

#[test]
fn zero_jobs_is_a_usage_error() {
    let o = expolys(&["verify", "--all", "--jobs", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("usage error"));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# table defaults\nfamily = fubini\nn = 3\nformat = csv").unwrap();
    let path = f.path().to_str().unwrap();
    let o = expolys(&["table", "--config", path]);
    assert_eq!(stdout(&o), "n,value\n0,1\n1,1\n2,3\n3,13\n");
    let o = expolys(&["table", "--config", path, "--n", "1", "--format", "plain"]);
    assert_eq!(stdout(&o), "0,1\n1,1\n");
}

#[test]
fn unknown_config_key_is_rejected() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "family = bell\ncolour = blue").unwrap();
    let o = expolys(&["table", "--config", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("colour"), "{}", stderr(&o));
}

#[test]
fn json_reports_do_not_depend_on_jobs() {
    let args = [
        "verify",
        "--id",
        "gf-w-shift,spivey",
        "--nmax",
        "4",
        "--mmax",
        "2",
        "--format",
        "json",
    ];
    let one = expolys(&[&args[..], &["--jobs", "1"]].concat());
    let four = expolys(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    assert!(doc["reports"].as_array().is_some_and(|r| !r.is_empty()));
}

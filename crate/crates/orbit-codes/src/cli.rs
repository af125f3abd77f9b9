//! Command-line surface: construct codes, compute and verify weight
//! distributions, sweep parameter grids, run check suites, and test
//! Frobenius equivalence. Long-form flags only; deterministic output for
//! fixed flags; exit codes 0 (success), 1 (verification failure), 2 (bad
//! parameters).

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::constructions::Family;
use crate::error::{Error, Result};
use crate::gfext::build_field;
use crate::orbit::OrbitCode;
use crate::report::{
    weights_report, CheckJson, ConstructionJson, EquivJson, FieldJson, SweepRow, VerdictJson,
    VerifyJson, SCHEMA_VERSION, SWEEP_CSV_HEADER,
};
use crate::verify::{field_for, formula_for, run_suite, split_prime_power, SUITES};

#[derive(Debug, Parser)]
#[command(
    name = "orbit-codes",
    version,
    about = "One-orbit cyclic subspace codes: weight distributions, FWS/r-FWS verdicts, Frobenius equivalence",
    disable_help_subcommand = true
)]
struct Cli {
    /// JSON file with default flag values (flat object keyed by flag name).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Print the deterministic field model for F_(p^(e*n)).
    Field(FieldArgs),
    /// Build one construction and report its weight distribution.
    Weights(WeightsArgs),
    /// Sweep every valid parameter point of a family and emit CSV.
    Sweep(SweepArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Test two constructions for Frobenius equivalence.
    Equiv(EquivArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct FieldArgs {
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    e: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct WeightsArgs {
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// Exponent j of the translate b = gamma^j.
    #[arg(long)]
    b_exp: Option<u64>,
    /// Exponent j overriding lambda = gamma^j (degree-validated).
    #[arg(long)]
    lambda_exp: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Comma-separated prime powers, e.g. "2,3".
    #[arg(long)]
    q_list: Option<String>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EquivArgs {
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    n: Option<u32>,
    /// Construction spec JSON, e.g. '{"family":"polybasis","t":4,"k":2}'.
    #[arg(long)]
    spec_a: Option<String>,
    #[arg(long)]
    spec_b: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Result of a CLI invocation: process exit code plus captured stdout.
#[derive(Debug)]
pub struct CliOutput {
    pub exit_code: i32,
    pub stdout: String,
}

/// Run the CLI on the given argv (including the program name).
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return CliOutput {
                exit_code: code,
                stdout: e.to_string(),
            };
        }
    };
    let config = match load_config(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            return CliOutput {
                exit_code: 2,
                stdout: format!("error: {e}\n"),
            }
        }
    };
    match dispatch(cli.cmd, &config) {
        Ok(out) => out,
        Err(e) => CliOutput {
            exit_code: 2,
            stdout: format!("error: {e}\n"),
        },
    }
}

type Config = BTreeMap<String, serde_json::Value>;

fn load_config(path: Option<&std::path::Path>) -> Result<Config> {
    let Some(path) = path else {
        return Ok(Config::new());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadParams(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::BadParams(format!("config is not a JSON object: {e}")))
}

fn cfg_u64(config: &Config, key: &str) -> Option<u64> {
    config.get(key).and_then(|v| {
        v.as_u64()
            .or_else(|| v.as_str().and_then(|s| s.parse().ok()))
    })
}

fn cfg_string(config: &Config, key: &str) -> Option<String> {
    config.get(key).map(|v| {
        v.as_str()
            .map(str::to_string)
            .unwrap_or_else(|| v.to_string())
    })
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::BadParams(format!("missing --{flag}")))
}

fn resolve_format(flag: Option<Format>, config: &Config, default: Format) -> Result<Format> {
    if let Some(f) = flag {
        return Ok(f);
    }
    match cfg_string(config, "format").as_deref() {
        None => Ok(default),
        Some("json") => Ok(Format::Json),
        Some("csv") => Ok(Format::Csv),
        Some(other) => Err(Error::BadParams(format!("unknown format '{other}'"))),
    }
}

fn emit(payload: String, out: Option<PathBuf>, exit_code: i32) -> Result<CliOutput> {
    match out {
        Some(path) => {
            std::fs::write(&path, payload)
                .map_err(|e| Error::BadParams(format!("cannot write {}: {e}", path.display())))?;
            Ok(CliOutput {
                exit_code,
                stdout: String::new(),
            })
        }
        None => Ok(CliOutput {
            exit_code,
            stdout: payload,
        }),
    }
}

fn dispatch(cmd: Cmd, config: &Config) -> Result<CliOutput> {
    match cmd {
        Cmd::Field(a) => cmd_field(a, config),
        Cmd::Weights(a) => cmd_weights(a, config),
        Cmd::Sweep(a) => cmd_sweep(a, config),
        Cmd::Verify(a) => cmd_verify(a, config),
        Cmd::Equiv(a) => cmd_equiv(a, config),
    }
}

fn cmd_field(a: FieldArgs, config: &Config) -> Result<CliOutput> {
    let p = need(a.p.or(cfg_u64(config, "p")), "p")?;
    let e = a.e.or(cfg_u64(config, "e").map(|v| v as u32)).unwrap_or(1);
    let n = need(a.n.or(cfg_u64(config, "n").map(|v| v as u32)), "n")?;
    let field = build_field(p, e, n)?;
    let report = FieldJson::from_field(&field);
    let format = resolve_format(a.format, config, Format::Json)?;
    let payload = match format {
        Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
        Format::Csv => {
            let mods: Vec<String> = report.modulus.iter().map(u32::to_string).collect();
            let gam: Vec<String> = report.gamma.iter().map(u32::to_string).collect();
            format!(
                "schema_version,p,e,n,size,modulus,gamma,subfield_degrees\n{},{},{},{},{},{},{},{}\n",
                report.schema_version,
                report.p,
                report.e,
                report.n,
                report.size,
                mods.join(" "),
                gam.join(" "),
                report
                    .subfield_degrees
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            )
        }
    };
    emit(payload, a.out, 0)
}

fn spec_from_flags(
    family: &str,
    t: Option<u32>,
    k: Option<u32>,
    l: Option<u32>,
    m: Option<u32>,
    b_exp: Option<u64>,
    lambda_exp: Option<u64>,
) -> ConstructionJson {
    ConstructionJson {
        family: family.to_string(),
        t: t.unwrap_or(0),
        k,
        l,
        m,
        b_exp,
        lambda_exp,
    }
}

fn cmd_weights(a: WeightsArgs, config: &Config) -> Result<CliOutput> {
    let q = need(a.q.or(cfg_u64(config, "q")), "q")?;
    let n = need(a.n.or(cfg_u64(config, "n").map(|v| v as u32)), "n")?;
    let family = need(a.family.or(cfg_string(config, "family")), "family")?;
    let t = need(a.t.or(cfg_u64(config, "t").map(|v| v as u32)), "t")?;
    let field = field_for(q, n)?;
    let wire = spec_from_flags(
        &family,
        Some(t),
        a.k.or(cfg_u64(config, "k").map(|v| v as u32)),
        a.l.or(cfg_u64(config, "l").map(|v| v as u32)),
        a.m.or(cfg_u64(config, "m").map(|v| v as u32)),
        a.b_exp,
        a.lambda_exp,
    );
    let spec = wire.to_spec(&field)?;
    let start = Instant::now();
    let s = spec.build(&field)?;
    let code = OrbitCode::new(s)?;
    let wd = code.weight_distribution();
    let runtime_ms = start.elapsed().as_millis() as u64;
    let formula = formula_for(q, n, &spec).ok();
    let report = weights_report(
        &field,
        &spec,
        code.stab_degree(),
        code.orbit_size(),
        &wd,
        formula.as_ref(),
        runtime_ms,
    );
    let format = resolve_format(a.format, config, Format::Json)?;
    let payload = match format {
        Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
        Format::Csv => {
            let counts: Vec<String> = report
                .distribution
                .counts
                .iter()
                .map(u64::to_string)
                .collect();
            format!(
                "schema_version,q,n,family,t,k,stab_degree,orbit_size,verdict,formula_match,runtime_ms,counts\n\
                 {},{},{},{},{},{},{},{},{},{},{},{}\n",
                report.schema_version,
                report.q,
                report.n,
                report.family,
                report.t,
                report.distribution.k,
                report.distribution.stab_degree,
                report.distribution.orbit_size,
                report.distribution.verdict.as_csv(),
                report.formula_match.map(|b| b.to_string()).unwrap_or_default(),
                report.runtime_ms,
                counts.join(" ")
            )
        }
    };
    emit(payload, a.out, 0)
}

fn cmd_sweep(a: SweepArgs, config: &Config) -> Result<CliOutput> {
    let q_list = need(a.q_list.or(cfg_string(config, "q-list")), "q-list")?;
    let n_max = need(
        a.n_max.or(cfg_u64(config, "n-max").map(|v| v as u32)),
        "n-max",
    )?;
    let family = Family::parse(&need(a.family.or(cfg_string(config, "family")), "family")?)?;
    let qs: Vec<u64> = q_list
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::BadParams(format!("bad q '{s}'")))
        })
        .collect::<Result<_>>()?;
    for &q in &qs {
        if split_prime_power(q).is_none() {
            return Err(Error::BadParams(format!("q = {q} is not a prime power")));
        }
    }

    let mut points = Vec::new();
    for &q in &qs {
        let cap = (0..n_max).try_fold(1u64, |acc, _| {
            acc.checked_mul(q).filter(|&v| v <= crate::gfext::SIZE_CAP)
        });
        let cap = cap.unwrap_or(crate::gfext::SIZE_CAP);
        points.extend(crate::verify::family_sweep(family, &[q], cap));
    }

    let mut rows: Vec<SweepRow> = points
        .par_iter()
        .map(|pt| {
            let start = Instant::now();
            let field = field_for(pt.q, pt.n).expect("sweep points are prime powers in cap");
            let s = pt
                .spec
                .build(&field)
                .expect("sweep points satisfy preconditions");
            let code = OrbitCode::new(s).expect("nonzero subspace");
            let wd = code.weight_distribution();
            let formula =
                formula_for(pt.q, pt.n, &pt.spec).expect("sweep points have closed forms");
            SweepRow {
                schema_version: SCHEMA_VERSION,
                family: pt.spec.family.name(),
                q: pt.q,
                n: pt.n,
                t: pt.spec.t,
                k: (family == Family::PolyBasis).then_some(pt.spec.k),
                l: (family != Family::PolyBasis).then_some(pt.spec.l),
                m: (family == Family::RfwsMixed).then_some(pt.spec.m),
                formula_match: formula == wd,
                verdict: VerdictJson::from_verdict(crate::orbit::rfws_index(&wd)),
                orbit_size: code.orbit_size(),
                runtime_ms: start.elapsed().as_millis() as u64,
            }
        })
        .collect();
    rows.sort_by_key(|r| (r.q, r.n, r.t, r.k, r.l, r.m));

    let format = resolve_format(a.format, config, Format::Csv)?;
    let payload = match format {
        Format::Csv => {
            let mut text = String::from(SWEEP_CSV_HEADER);
            text.push('\n');
            for row in &rows {
                text.push_str(&row.as_csv());
                text.push('\n');
            }
            text
        }
        Format::Json => serde_json::to_string_pretty(&rows).unwrap() + "\n",
    };
    emit(payload, a.out, 0)
}

fn cmd_verify(a: VerifyArgs, config: &Config) -> Result<CliOutput> {
    let suite = a
        .suite
        .or(cfg_string(config, "suite"))
        .unwrap_or_else(|| "all".to_string());
    if !SUITES.contains(&suite.as_str()) {
        return Err(Error::BadParams(format!(
            "unknown suite '{suite}'; available: {}",
            SUITES.join(", ")
        )));
    }
    let checks = run_suite(&suite)?;
    let passed = checks.iter().filter(|c| c.pass).count();
    let failed = checks.len() - passed;
    let report = VerifyJson {
        schema_version: SCHEMA_VERSION,
        suite: suite.clone(),
        passed,
        failed,
        checks: checks
            .iter()
            .map(|c| CheckJson {
                suite: c.suite.to_string(),
                check: c.name.clone(),
                pass: c.pass,
                detail: c.detail.clone(),
            })
            .collect(),
    };
    let format = resolve_format(a.format, config, Format::Json)?;
    let payload = match format {
        Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
        Format::Csv => {
            let mut text = String::from("suite,check,pass,detail\n");
            for c in &report.checks {
                text.push_str(&format!(
                    "{},{},{},\"{}\"\n",
                    c.suite,
                    c.check,
                    c.pass,
                    c.detail.replace('"', "'")
                ));
            }
            text
        }
    };
    emit(payload, a.out, if failed == 0 { 0 } else { 1 })
}

fn cmd_equiv(a: EquivArgs, config: &Config) -> Result<CliOutput> {
    let q = need(a.q.or(cfg_u64(config, "q")), "q")?;
    let n = need(a.n.or(cfg_u64(config, "n").map(|v| v as u32)), "n")?;
    let spec_a = need(a.spec_a.or(cfg_string(config, "spec-a")), "spec-a")?;
    let spec_b = need(a.spec_b.or(cfg_string(config, "spec-b")), "spec-b")?;
    let field = field_for(q, n)?;
    let parse = |text: &str| -> Result<ConstructionJson> {
        serde_json::from_str(text).map_err(|e| Error::BadParams(format!("bad spec JSON: {e}")))
    };
    let sa = parse(&spec_a)?.to_spec(&field)?.build(&field)?;
    let sb = parse(&spec_b)?.to_spec(&field)?.build(&field)?;
    let witness = crate::isometry::frobenius_equivalent(&sa, &sb)?;
    let report = EquivJson {
        schema_version: SCHEMA_VERSION,
        equivalent: witness.is_some(),
        frob: witness.map(|w| w.frob),
        alpha_exp: witness.and_then(|w| w.mult.exponent()),
    };
    let format = resolve_format(a.format, config, Format::Json)?;
    let payload = match format {
        Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
        Format::Csv => format!(
            "schema_version,equivalent,frob,alpha_exp\n{},{},{},{}\n",
            report.schema_version,
            report.equivalent,
            report.frob.map(|v| v.to_string()).unwrap_or_default(),
            report.alpha_exp.map(|v| v.to_string()).unwrap_or_default()
        ),
    };
    emit(payload, a.out, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_vec(args: &[&str]) -> CliOutput {
        run(args.iter().map(|s| s.to_string()))
    }

    #[test]
    fn field_command_reports_the_model() {
        let out = run_vec(&["orbit-codes", "field", "--p", "2", "--n", "10"]);
        assert_eq!(out.exit_code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["p"], 2);
        assert_eq!(v["size"], 1024);
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["subfield_degrees"], serde_json::json!([1, 2, 5, 10]));
    }

    #[test]
    fn weights_command_matches_known_distribution() {
        let out = run_vec(&[
            "orbit-codes",
            "weights",
            "--q",
            "2",
            "--n",
            "10",
            "--family",
            "mixedq2",
            "--t",
            "5",
            "--l",
            "2",
        ]);
        assert_eq!(out.exit_code, 0, "{}", out.stdout);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        let d = &v["distribution"];
        assert_eq!(d["counts"], serde_json::json!([1, 2, 36, 24, 576, 384]));
        assert_eq!(d["k"], 5);
        assert_eq!(d["verdict"], "FWS");
        assert_eq!(d["stab_degree"], 1);
        assert_eq!(d["orbit_size"], 1023);
        assert_eq!(v["formula_match"], true);
    }

    #[test]
    fn weights_rejects_missing_flags() {
        let out = run_vec(&["orbit-codes", "weights", "--q", "2", "--n", "10"]);
        assert_eq!(out.exit_code, 2);
    }

    #[test]
    fn bad_subcommand_exits_2() {
        let out = run_vec(&["orbit-codes", "frobnicate"]);
        assert_eq!(out.exit_code, 2);
    }

    #[test]
    fn sweep_emits_sorted_csv() {
        let out = run_vec(&[
            "orbit-codes",
            "sweep",
            "--family",
            "polybasis",
            "--q-list",
            "2",
            "--n-max",
            "6",
        ]);
        assert_eq!(out.exit_code, 0, "{}", out.stdout);
        let mut lines = out.stdout.lines();
        assert_eq!(lines.next().unwrap(), SWEEP_CSV_HEADER);
        let rows: Vec<&str> = lines.collect();
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| r.split(',').nth(8) == Some("true")));
        // deterministic: run twice, compare everything except runtimes
        let again = run_vec(&[
            "orbit-codes",
            "sweep",
            "--family",
            "polybasis",
            "--q-list",
            "2",
            "--n-max",
            "6",
        ]);
        let strip = |s: &str| -> Vec<String> {
            s.lines()
                .map(|l| {
                    l.rsplit_once(',')
                        .map(|(a, _)| a.to_string())
                        .unwrap_or_default()
                })
                .collect()
        };
        assert_eq!(strip(&out.stdout), strip(&again.stdout));
    }

    #[test]
    fn weights_handles_the_whole_space() {
        let out = run_vec(&[
            "orbit-codes",
            "weights",
            "--q",
            "2",
            "--n",
            "4",
            "--family",
            "polybasis",
            "--t",
            "4",
            "--k",
            "4",
        ]);
        assert_eq!(out.exit_code, 0, "{}", out.stdout);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["distribution"]["orbit_size"], 1);
        assert_eq!(
            v["distribution"]["counts"],
            serde_json::json!([1, 0, 0, 0, 0])
        );
        // no closed form applies at k = t
        assert!(v.get("formula_match").is_none());
    }

    #[test]
    fn empty_sweep_is_header_only() {
        let out = run_vec(&[
            "orbit-codes",
            "sweep",
            "--family",
            "mixedq2",
            "--q-list",
            "2",
            "--n-max",
            "2",
        ]);
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.stdout.trim(), SWEEP_CSV_HEADER);
    }

    #[test]
    fn verify_trivial_suite_passes() {
        let out = run_vec(&["orbit-codes", "verify", "--suite", "trivial"]);
        assert_eq!(out.exit_code, 0, "{}", out.stdout);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["failed"], 0);
        assert!(v["passed"].as_u64().unwrap() > 0);
    }

    #[test]
    fn verify_rejects_unknown_suite() {
        let out = run_vec(&["orbit-codes", "verify", "--suite", "bogus"]);
        assert_eq!(out.exit_code, 2);
    }

    #[test]
    fn equiv_finds_galois_conjugates() {
        let out = run_vec(&[
            "orbit-codes",
            "equiv",
            "--q",
            "2",
            "--n",
            "4",
            "--spec-a",
            r#"{"family":"polybasis","t":4,"k":2}"#,
            "--spec-b",
            r#"{"family":"polybasis","t":4,"k":2,"lambda_exp":2}"#,
        ]);
        assert_eq!(out.exit_code, 0, "{}", out.stdout);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["equivalent"], true);
    }

    #[test]
    fn config_file_supplies_defaults() {
        let dir = std::env::temp_dir();
        let path = dir.join("orbit_codes_cli_config_test.json");
        std::fs::write(&path, r#"{"p": 2, "n": 10}"#).unwrap();
        let out = run([
            "orbit-codes".to_string(),
            "field".into(),
            "--config".into(),
            path.display().to_string(),
        ]);
        assert_eq!(out.exit_code, 0, "{}", out.stdout);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["size"], 1024);
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn out_flag_writes_file() {
        let dir = std::env::temp_dir();
        let path = dir.join("orbit_codes_cli_out_test.json");
        let out = run([
            "orbit-codes".to_string(),
            "field".into(),
            "--p".into(),
            "3".into(),
            "--n".into(),
            "4".into(),
            "--out".into(),
            path.display().to_string(),
        ]);
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.is_empty());
        let text = std::fs::read_to_string(&path).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["size"], 81);
        std::fs::remove_file(&path).ok();
    }
}

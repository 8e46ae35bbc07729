//! Command-line front end. Every command prints a JSON report on stdout and a
//! short summary on stderr.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::codes::{
    budget_from_env, constacyclic_alternant_mds, grs_equals_constacyclic, min_distance_exhaustive,
    negacyclic_alternant_mds, AlternantCode, ConstacyclicRing, Distance, LinearCode,
};
use crate::gf::FieldCtx;
use crate::splitting::{
    build_splitting, m_bruteforce, m_closed_form, ms_bruteforce, ms_closed_form, oracle_sweep,
    padic_standard_splitting, Params, Splitting,
};
use crate::tables::{table_alternant, table_grs, Check, Row};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "polyadic", version, about = "Type I polyadic constacyclic codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Largest m admitting an m-adic splitting, overall or for one multiplier.
    Exists(ExistsArgs),
    /// Same as `exists` with a required multiplier.
    Multiplier(MultiplierArgs),
    /// Build the splitting given by a multiplier.
    Split(SplitArgs),
    /// Build a code family and check its parameters.
    Build(BuildArgs),
    /// Exhaustive minimum distance of the code of a class.
    Mindist(MindistArgs),
    /// Rebuild one of the code tables.
    Table(TableArgs),
    /// Compare closed forms with brute force over a parameter range.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ParamArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub r: u64,
}

impl ParamArgs {
    fn params(&self) -> Result<Params> {
        Params::new(self.q, self.n, self.r)
    }
}

#[derive(Debug, Clone, Args, Serialize)]
#[command(allow_negative_numbers = true)]
pub struct ExistsArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub s: Option<i64>,
    /// Also run the brute-force oracle.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
#[command(allow_negative_numbers = true)]
pub struct MultiplierArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub s: i64,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
#[command(allow_negative_numbers = true)]
pub struct SplitArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub s: i64,
    #[arg(long)]
    pub m: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// GRS codes from the standard p-adic splitting (needs --n --r --p --k).
    Padic,
    /// Self-dual negacyclic GRS codes split by -1 (needs --n).
    DuadicNeg,
    /// Self-dual negacyclic alternant codes of length (q + 1)/ell.
    Alternant57,
    /// Alternant codes of length q + 1 with r = (q - 1)/2.
    Alternant59,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct BuildArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub ell: Option<u64>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct MindistArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub params: ParamArgs,
    /// Nonzeros of the code: a union of cyclotomic cosets.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub classes: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableName {
    Grs,
    Alternant,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub name: TableName,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 27)]
    pub qmax: u64,
    #[arg(long, default_value_t = 120)]
    pub rnmax: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// What a run produced: the text for both streams and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::HypothesisViolated(_) => EXIT_HYPOTHESIS,
        Error::NotPrime(_)
        | Error::NonPositive(_)
        | Error::NotAUnit { .. }
        | Error::ExcludedCase(_)
        | Error::BadParams(_)
        | Error::BadMultiplier { .. }
        | Error::NotInvariant(_)
        | Error::SweepTooLarge(_) => EXIT_INVALID_INPUT,
        _ => EXIT_FAILED_CHECK,
    }
}

/// Parse `args` (program name first) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID_INPUT } else { 0 };
            return Outcome {
                stdout: String::new(),
                stderr: e.render().to_string(),
                code,
            };
        }
    };
    let (name, inputs) = describe(&cli.command);
    match execute(&cli.command) {
        Ok(report) => {
            let code = if report.pass() { 0 } else { EXIT_FAILED_CHECK };
            Outcome {
                stdout: to_json_line(&report),
                stderr: summary(&report),
                code,
            }
        }
        Err(err) => {
            let body = json!({"command": name, "inputs": inputs, "error": err.to_string()});
            Outcome {
                stdout: format!("{body}\n"),
                stderr: format!("{name}: error: {err}\n"),
                code: exit_code(&err),
            }
        }
    }
}

fn to_json_line(report: &Report) -> String {
    // Going through Value sorts every object's keys.
    let value = serde_json::to_value(report).expect("report serializes");
    format!("{value}\n")
}

fn summary(report: &Report) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let mark = if c.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("{mark} {}: {}\n", c.name, c.detail));
    }
    let failed = report.checks.iter().filter(|c| !c.pass).count();
    out.push_str(&format!(
        "{}: {} checks, {failed} failed\n",
        report.command,
        report.checks.len()
    ));
    out
}

fn describe(command: &Command) -> (&'static str, Value) {
    fn to<T: Serialize>(args: &T) -> Value {
        serde_json::to_value(args).expect("arguments serialize")
    }
    match command {
        Command::Exists(a) => ("exists", to(a)),
        Command::Multiplier(a) => ("multiplier", to(a)),
        Command::Split(a) => ("split", to(a)),
        Command::Build(a) => ("build", to(a)),
        Command::Mindist(a) => ("mindist", to(a)),
        Command::Table(a) => ("table", to(a)),
        Command::Sweep(a) => ("sweep", to(a)),
    }
}

pub fn execute(command: &Command) -> Result<Report> {
    let (name, inputs) = describe(command);
    let (outputs, checks) = match command {
        Command::Exists(a) => exists(&a.params, a.s, a.m, a.oracle)?,
        Command::Multiplier(a) => exists(&a.params, Some(a.s), a.m, a.oracle)?,
        Command::Split(a) => split(a)?,
        Command::Build(a) => build(a)?,
        Command::Mindist(a) => mindist(a)?,
        Command::Table(a) => table(a.name)?,
        Command::Sweep(a) => sweep(a)?,
    };
    Ok(Report {
        command: name.into(),
        inputs,
        outputs,
        checks,
    })
}

type Section = (Value, Vec<Check>);

fn exists(args: &ParamArgs, s: Option<i64>, m: Option<u64>, oracle: bool) -> Result<Section> {
    let params = args.params()?;
    let (key, closed, brute) = match s {
        None => ("M", m_closed_form(&params), oracle.then(|| m_bruteforce(&params))),
        Some(s) => ("M_s", ms_closed_form(&params, s)?, oracle.then(|| ms_bruteforce(&params, s))),
    };
    let mut outputs = json!({ key: closed });
    if let Some(m) = m {
        if m == 0 {
            return Err(Error::NonPositive("m = 0".into()));
        }
        outputs["exists"] = json!(closed % m == 0);
    }
    let mut checks = Vec::new();
    if let Some(brute) = brute {
        let brute = brute?;
        outputs[format!("{key}_bruteforce")] = json!(brute);
        checks.push(Check::new(
            "oracle",
            brute == closed,
            format!("closed form {closed}, brute force {brute}"),
        ));
    }
    Ok((outputs, checks))
}

fn split(args: &SplitArgs) -> Result<Section> {
    let params = args.params.params()?;
    let splitting = build_splitting(&params, args.s, args.m)?;
    let check = Check::new(
        "splitting",
        splitting.validate().is_ok(),
        format!("{} classes permuted cyclically by {}", splitting.m(), splitting.s()),
    );
    Ok((splitting.to_json(), vec![check]))
}

fn distance_of(code: &LinearCode<FieldCtx>, certified: Option<usize>) -> Result<Distance> {
    match min_distance_exhaustive(code, budget_from_env()) {
        Ok(d) => Ok(d),
        Err(Error::TooLarge { .. }) => Ok(certified.map_or(Distance::Undefined, Distance::Certified)),
        Err(e) => Err(e),
    }
}

fn parameters(code: &LinearCode<FieldCtx>, d: Distance) -> Value {
    json!([code.n(), code.k(), d.value()])
}

fn mds_check(code: &LinearCode<FieldCtx>, d: Distance) -> Check {
    let singleton = code.n() + 1 - code.k();
    Check::new(
        "mds",
        d.value() == Some(singleton),
        format!("d = {}, n - k + 1 = {singleton}", show(d.value())),
    )
}

fn show(d: Option<usize>) -> String {
    d.map_or_else(|| "undefined".into(), |d| d.to_string())
}

fn require(name: &str, value: Option<u64>) -> Result<u64> {
    value.ok_or_else(|| Error::BadParams(format!("--{name} is required for this family")))
}

fn expect_matching(name: &str, given: Option<u64>, forced: u64) -> Result<()> {
    match given {
        Some(v) if v != forced => Err(Error::HypothesisViolated(format!(
            "this family needs {name} = {forced}, got {v}"
        ))),
        _ => Ok(()),
    }
}

fn build(args: &BuildArgs) -> Result<Section> {
    match args.family {
        Family::Padic => {
            let params = Params::new(args.q, require("n", args.n)?, require("r", args.r)?)?;
            let p = require("p", args.p)?;
            let splitting = padic_standard_splitting(&params, p)?;
            let (code, eq) = grs_equals_constacyclic(&params, p, require("k", args.k)?)?;
            let d = distance_of(&code, Some(eq.d_certified))?;
            let checks = vec![
                Check::new(
                    "grs-equal",
                    eq.holds(),
                    format!("[{}, {}] GRS code over the splitting field", eq.n, eq.grs_k),
                ),
                mds_check(&code, d),
            ];
            let outputs = json!({
                "splitting": splitting.to_json(),
                "code": code.to_json(d),
                "parameters": parameters(&code, d),
                "grs_equal": eq.holds(),
            });
            Ok((outputs, checks))
        }
        Family::DuadicNeg => {
            expect_matching("r", args.r, 2)?;
            let params = Params::new(args.q, require("n", args.n)?, 2)?;
            let (code, eq) = grs_equals_constacyclic(&params, 2, 1)?;
            let classes = padic_standard_splitting(&params, 2)?.classes().to_vec();
            let splitting = Splitting::new(params, -1, classes)
                .map_err(|e| Error::HypothesisViolated(format!("-1 does not split: {e}")))?;
            let d = distance_of(&code, Some(eq.d_certified))?;
            let self_dual = code.is_self_dual();
            let checks = vec![
                Check::new("grs-equal", eq.holds(), format!("[{}, {}] GRS code", eq.n, eq.grs_k)),
                Check::new("self-dual", self_dual, "G G^T = 0 and 2k = n"),
                mds_check(&code, d),
            ];
            let outputs = json!({
                "splitting": splitting.to_json(),
                "code": code.to_json(d),
                "parameters": parameters(&code, d),
                "grs_equal": eq.holds(),
                "self_dual": self_dual,
            });
            Ok((outputs, checks))
        }
        Family::Alternant57 => {
            let ell = args.ell.unwrap_or(1);
            expect_matching("r", args.r, 2)?;
            if ell != 0 && (args.q + 1) % ell == 0 {
                expect_matching("n", args.n, (args.q + 1) / ell)?;
            }
            let code = negacyclic_alternant_mds(args.q, ell, budget_from_env())?;
            Ok(alternant_section(&code, true))
        }
        Family::Alternant59 => {
            expect_matching("n", args.n, args.q + 1)?;
            expect_matching("r", args.r, args.q.saturating_sub(1) / 2)?;
            let code = constacyclic_alternant_mds(args.q, budget_from_env())?;
            Ok(alternant_section(&code, false))
        }
    }
}

fn alternant_section(code: &AlternantCode, self_dual_expected: bool) -> Section {
    let d = code.distance();
    let cert = &code.certificate;
    let (locators, multipliers) = code.parent_exponents();
    let mut checks = vec![
        Check::new(
            "alternant",
            cert.contained_in_parent && cert.subfield_subcode_dim == cert.k,
            format!("subfield subcode of a [{}, {}] GRS code", cert.n, cert.parent_k),
        ),
        mds_check(&code.code, d),
    ];
    if code.exhaustive.is_some() {
        checks.push(Check::new(
            "certificate-agrees",
            cert.d_certified == d.value(),
            format!("certified d = {}", show(cert.d_certified)),
        ));
    }
    if self_dual_expected {
        checks.push(Check::new("self-dual", code.self_dual, "G G^T = 0 and 2k = n"));
    }
    let outputs = json!({
        "splitting": code.splitting.to_json(),
        "code": code.code.to_json(d),
        "parameters": parameters(&code.code, d),
        "self_dual": code.self_dual,
        "certificate": cert,
        "parent": {
            "extension_degree": code.parent.field.degree(),
            "k": code.parent.k,
            "locator_exponents": locators,
            "multiplier_exponents": multipliers,
        },
    });
    (outputs, checks)
}

fn mindist(args: &MindistArgs) -> Result<Section> {
    let params = args.params.params()?;
    let ring = ConstacyclicRing::new(&params)?;
    let code = ring.code_from_class(&args.classes)?;
    let d = min_distance_exhaustive(&code, budget_from_env())?;
    let outputs = json!({
        "code": code.to_json(d),
        "parameters": parameters(&code, d),
    });
    Ok((outputs, Vec::new()))
}

fn table(name: TableName) -> Result<Section> {
    let budget = budget_from_env();
    let rows: Vec<Row> = match name {
        TableName::Grs => table_grs(budget)?,
        TableName::Alternant => table_alternant(budget)?,
    };
    let checks = rows
        .iter()
        .map(|row| {
            let failed: Vec<&str> = row.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
            let mut detail = format!(
                "[{}, {}, {}] over GF({}) by {}",
                row.expected[0],
                row.expected[1],
                row.expected[2],
                row.q,
                serde_json::to_value(row.mode).expect("mode serializes").as_str().unwrap_or("?"),
            );
            if !failed.is_empty() {
                detail.push_str(&format!("; failed: {}", failed.join(", ")));
            }
            Check::new(format!("row {}", row.label), row.pass(), detail)
        })
        .collect();
    Ok((json!({ "rows": rows, "budget": budget }), checks))
}

fn sweep(args: &SweepArgs) -> Result<Section> {
    let report = oracle_sweep(args.qmax, args.rnmax)?;
    let outputs = json!({
        "params_checked": report.params_checked,
        "pairs_checked": report.pairs_checked,
        "failures": report.failures.len(),
        "failure_list": report.failures,
    });
    let check = Check::new(
        "oracle-equivalence",
        report.failures.is_empty(),
        format!(
            "{} parameter sets, {} multipliers, {} failures",
            report.params_checked,
            report.pairs_checked,
            report.failures.len()
        ),
    );
    Ok((outputs, vec![check]))
}

//! Command-line front end.
//!
//! Single computations are exposed as subcommands with flag arguments;
//! batches run from a JSON problem file with all-or-nothing validation; a
//! `verify` subcommand runs every cross-oracle consistency suite. All
//! numeric output is exact decimal, and identical inputs produce
//! byte-identical reports.
//!
//! Exit codes: 0 = success / all checks pass, 1 = at least one check
//! failed (or an oracle pair disagreed), 2 = invalid input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::checks::{
    congruence_check, min_degree_check, sing_count_bound, CheckReport, CurveFoliationData,
    Verdict,
};
use crate::residue::{
    camacho_sad_total, residue_sum_c1_power, residue_sum_c1_power_ring, residue_sum_general,
    residue_sum_top_chern, residue_sum_top_chern_ring, SymmetricPolynomial,
};
use crate::chern::FormalBundle;
use crate::singularity::{
    adjunction_euler, discrepancy_note, euler_ci, euler_ci_multiindex,
    milnor_stratum_multiindex, milnor_stratum_ring, StratumSpec,
};
use crate::verify;

#[derive(Parser)]
#[command(
    name = "residua",
    version,
    about = "Exact residue sums, Milnor numbers, and degree checks for foliated projective space",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ResidueRoute {
    Closed,
    Ring,
    Both,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TwoRoute {
    Ring,
    Multiindex,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Sum of residues over the singular components inside a complete
    /// intersection invariant subvariety of projective space
    Residue {
        /// Ambient projective dimension
        #[arg(long)]
        n: usize,
        /// Comma-separated degrees of the hypersurfaces cutting the subvariety
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<BigInt>,
        /// Residue symbol: `top` (c_{n-k}), `c1pow` (c_1^{n-k}), or `file:PATH`
        #[arg(long, default_value = "top")]
        phi: String,
        /// Evaluation route (defaults to `both`; `file:` symbols run `ring` only)
        #[arg(long, value_enum)]
        method: Option<ResidueRoute>,
    },
    /// Total residue along an invariant hypersurface of a one-dimensional
    /// foliation
    CamachoSad {
        /// Ambient projective dimension (at least 2)
        #[arg(long)]
        n: usize,
        /// Degree of the invariant hypersurface
        #[arg(long)]
        degree: BigInt,
        /// Euler characteristic of the hypersurface
        #[arg(long)]
        chi: BigInt,
        /// Total Milnor number of the singular locus
        #[arg(long)]
        mu: BigInt,
    },
    /// Euler characteristic of a possibly singular hypersurface via the
    /// adjunction identity
    Adjunction {
        /// Ambient projective dimension (at least 2)
        #[arg(long)]
        n: usize,
        /// Degree of the hypersurface
        #[arg(long)]
        degree: BigInt,
        /// Total Milnor number of the singular locus
        #[arg(long)]
        mu: BigInt,
    },
    /// Milnor number of a positive-dimensional singular stratum cut out as
    /// a complete intersection
    Milnor {
        /// Ambient projective dimension (at least 2)
        #[arg(long)]
        n: usize,
        /// Comma-separated degrees of the hypersurfaces cutting the stratum
        #[arg(long, value_delimiter = ',', required = true)]
        stratum: Vec<BigInt>,
        /// Degree of the hypersurface singular along the stratum
        #[arg(long)]
        degree: BigInt,
        /// Transversal Milnor number of a generic slice
        #[arg(long)]
        mu: BigInt,
        /// Evaluation route
        #[arg(long, value_enum, default_value_t = TwoRoute::Both)]
        method: TwoRoute,
    },
    /// Euler characteristic of a smooth complete intersection
    EulerCi {
        /// Ambient projective dimension
        #[arg(long)]
        n: usize,
        /// Comma-separated degrees of the defining hypersurfaces
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<BigInt>,
        /// Evaluation route
        #[arg(long, value_enum, default_value_t = TwoRoute::Both)]
        method: TwoRoute,
    },
    /// Run every task in a JSON problem file (all-or-nothing validation)
    Check {
        /// Path to the problem file
        #[arg(long)]
        file: PathBuf,
    },
    /// Run all cross-oracle consistency suites
    Verify,
}

/// Parses `args` (argv[0] included) and runs the requested command, writing
/// reports to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    let format = cli.format;
    let outcome = match cli.command {
        Command::Residue { n, degrees, phi, method } => {
            run_residue(n, &degrees, &phi, method, format, out)
        }
        Command::CamachoSad { n, degree, chi, mu } => {
            camacho_sad_total(n, &degree, &chi, &mu)
                .map_err(|e| e.to_string())
                .map(|value| {
                    emit_value(out, format, "camacho-sad", &value);
                    0
                })
        }
        Command::Adjunction { n, degree, mu } => adjunction_euler(n, &degree, &mu)
            .map_err(|e| e.to_string())
            .map(|value| {
                emit_value(out, format, "adjunction", &value);
                0
            }),
        Command::Milnor { n, stratum, degree, mu, method } => {
            run_milnor(n, stratum, degree, mu, method, format, out)
        }
        Command::EulerCi { n, degrees, method } => run_euler_ci(n, &degrees, method, format, out),
        Command::Check { file } => run_check(&file, format, out),
        Command::Verify => Ok(run_verify(format, out)),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

// ---- single-computation subcommands ----

fn emit_value(out: &mut dyn Write, format: Format, command: &str, value: &BigInt) {
    match format {
        Format::Text => {
            let _ = writeln!(out, "{value}");
        }
        Format::Json => {
            let _ = writeln!(out, "{}", json!({ "command": command, "value": value.to_string() }));
        }
    }
}

fn run_residue(
    n: usize,
    degrees: &[BigInt],
    phi: &str,
    method: Option<ResidueRoute>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, String> {
    enum Phi {
        Top,
        C1Pow,
        File(SymmetricPolynomial),
    }
    // settle the route before touching the filesystem: a closed-form
    // request against a file symbol is a usage error whether or not the
    // file exists
    let file_path = phi.strip_prefix("file:");
    let method = match (file_path, method) {
        (Some(_), None | Some(ResidueRoute::Ring)) => ResidueRoute::Ring,
        (Some(_), Some(_)) => {
            return Err(
                "a 'file:' residue symbol has no closed form; use '--method ring'".to_string()
            )
        }
        (None, m) => m.unwrap_or(ResidueRoute::Both),
    };
    let parsed_phi = match (phi, file_path) {
        ("top", _) => Phi::Top,
        ("c1pow", _) => Phi::C1Pow,
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read phi file '{path}': {e}"))?;
            Phi::File(parse_phi_file(&text)?)
        }
        (other, None) => {
            return Err(format!(
                "invalid value '{other}' for '--phi': expected 'top', 'c1pow', or 'file:PATH'"
            ))
        }
    };

    let closed = |phi: &Phi| -> Result<BigInt, String> {
        match phi {
            Phi::Top => Ok(residue_sum_top_chern(n, degrees).map_err(|e| e.to_string())?.value),
            Phi::C1Pow => Ok(residue_sum_c1_power(n, degrees).map_err(|e| e.to_string())?.value),
            Phi::File(_) => unreachable!("rejected above"),
        }
    };
    let ring = |phi: &Phi| -> Result<BigInt, String> {
        match phi {
            Phi::Top => {
                Ok(residue_sum_top_chern_ring(n, degrees).map_err(|e| e.to_string())?.value)
            }
            Phi::C1Pow => {
                Ok(residue_sum_c1_power_ring(n, degrees).map_err(|e| e.to_string())?.value)
            }
            Phi::File(poly) => {
                let normal = FormalBundle::direct_sum_of_lines(n, degrees);
                Ok(residue_sum_general(n, &normal, poly).map_err(|e| e.to_string())?.value)
            }
        }
    };

    match method {
        ResidueRoute::Closed => {
            let value = closed(&parsed_phi)?;
            emit_value(out, format, "residue", &value);
            Ok(0)
        }
        ResidueRoute::Ring => {
            let value = ring(&parsed_phi)?;
            emit_value(out, format, "residue", &value);
            Ok(0)
        }
        ResidueRoute::Both => {
            let c = closed(&parsed_phi)?;
            let r = ring(&parsed_phi)?;
            let agree = c == r;
            match format {
                Format::Text => {
                    let _ = writeln!(out, "closed-form: {c}");
                    let _ = writeln!(out, "ring-integral: {r}");
                }
                Format::Json => {
                    let _ = writeln!(
                        out,
                        "{}",
                        json!({
                            "command": "residue",
                            "closed_form": c.to_string(),
                            "ring_integral": r.to_string(),
                            "agree": agree,
                        })
                    );
                }
            }
            if agree {
                Ok(0)
            } else {
                let _ = writeln!(out, "DISAGREEMENT: closed-form {c} != ring-integral {r}");
                Ok(1)
            }
        }
    }
}

fn run_milnor(
    n: usize,
    stratum: Vec<BigInt>,
    degree: BigInt,
    mu: BigInt,
    method: TwoRoute,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let spec = StratumSpec::new(n, stratum, degree, mu).map_err(|e| e.to_string())?;
    let note = discrepancy_note(&spec);
    match method {
        TwoRoute::Ring | TwoRoute::Multiindex => {
            let value = match method {
                TwoRoute::Ring => milnor_stratum_ring(&spec),
                _ => milnor_stratum_multiindex(&spec),
            };
            match format {
                Format::Text => {
                    let _ = writeln!(out, "{value}");
                    if let Some(note) = &note {
                        let _ = writeln!(out, "note: {note}");
                    }
                }
                Format::Json => {
                    let mut obj = Map::new();
                    obj.insert("command".into(), json!("milnor"));
                    obj.insert("value".into(), json!(value.to_string()));
                    if let Some(note) = &note {
                        obj.insert("note".into(), json!(note));
                    }
                    let _ = writeln!(out, "{}", Value::Object(obj));
                }
            }
            Ok(0)
        }
        TwoRoute::Both => {
            let ring = milnor_stratum_ring(&spec);
            let multi = milnor_stratum_multiindex(&spec);
            let agree = ring == multi;
            match format {
                Format::Text => {
                    let _ = writeln!(out, "ring: {ring}");
                    let _ = writeln!(out, "multiindex: {multi}");
                    if let Some(note) = &note {
                        let _ = writeln!(out, "note: {note}");
                    }
                }
                Format::Json => {
                    let mut obj = Map::new();
                    obj.insert("command".into(), json!("milnor"));
                    obj.insert("ring".into(), json!(ring.to_string()));
                    obj.insert("multiindex".into(), json!(multi.to_string()));
                    obj.insert("agree".into(), json!(agree));
                    if let Some(note) = &note {
                        obj.insert("note".into(), json!(note));
                    }
                    let _ = writeln!(out, "{}", Value::Object(obj));
                }
            }
            if agree {
                Ok(0)
            } else {
                let _ = writeln!(out, "DISAGREEMENT: ring {ring} != multiindex {multi}");
                Ok(1)
            }
        }
    }
}

fn run_euler_ci(
    n: usize,
    degrees: &[BigInt],
    method: TwoRoute,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, String> {
    match method {
        TwoRoute::Ring => {
            let value = euler_ci(n, degrees).map_err(|e| e.to_string())?;
            emit_value(out, format, "euler-ci", &value);
            Ok(0)
        }
        TwoRoute::Multiindex => {
            let value = euler_ci_multiindex(n, degrees).map_err(|e| e.to_string())?;
            emit_value(out, format, "euler-ci", &value);
            Ok(0)
        }
        TwoRoute::Both => {
            let ring = euler_ci(n, degrees).map_err(|e| e.to_string())?;
            let multi = euler_ci_multiindex(n, degrees).map_err(|e| e.to_string())?;
            let agree = ring == multi;
            match format {
                Format::Text => {
                    let _ = writeln!(out, "ring: {ring}");
                    let _ = writeln!(out, "multiindex: {multi}");
                }
                Format::Json => {
                    let _ = writeln!(
                        out,
                        "{}",
                        json!({
                            "command": "euler-ci",
                            "ring": ring.to_string(),
                            "multiindex": multi.to_string(),
                            "agree": agree,
                        })
                    );
                }
            }
            if agree {
                Ok(0)
            } else {
                let _ = writeln!(out, "DISAGREEMENT: ring {ring} != multiindex {multi}");
                Ok(1)
            }
        }
    }
}

// ---- verify subcommand ----

fn run_verify(format: Format, out: &mut dyn Write) -> i32 {
    let reports = verify::run_all();
    let failed = reports.iter().filter(|r| !r.passed()).count();
    match format {
        Format::Text => {
            for report in &reports {
                match &report.failure {
                    None => {
                        let _ = writeln!(out, "PASS {}: {} cases", report.name, report.cases);
                    }
                    Some(counterexample) => {
                        let _ = writeln!(
                            out,
                            "FAIL {}: {} cases; first counterexample: {counterexample}",
                            report.name, report.cases
                        );
                    }
                }
            }
            let _ = writeln!(out, "summary: {} suites, {failed} failed", reports.len());
        }
        Format::Json => {
            let suites: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "cases": r.cases,
                        "passed": r.passed(),
                        "failure": r.failure,
                    })
                })
                .collect();
            let _ = writeln!(
                out,
                "{}",
                json!({
                    "command": "verify",
                    "suites": suites,
                    "total": reports.len(),
                    "failed": failed,
                })
            );
        }
    }
    if failed == 0 {
        0
    } else {
        1
    }
}

// ---- phi file format ----

/// Parses the custom residue-symbol format: one term per line as
/// `coefficient e1 e2 ... ek` (exponents of the Chern variables c_1..c_k),
/// with `#` starting a comment. The variable count is fixed by the first
/// term; weighted homogeneity is validated.
fn parse_phi_file(text: &str) -> Result<SymmetricPolynomial, String> {
    let mut num_vars: Option<usize> = None;
    let mut terms: Vec<(Vec<usize>, BigInt)> = Vec::new();
    for (line_index, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let context = |what: &str| format!("phi file line {}: {what}", line_index + 1);
        let mut tokens = line.split_whitespace();
        let coefficient_token = tokens.next().expect("non-empty line has a first token");
        let coefficient = BigInt::from_str(coefficient_token)
            .map_err(|_| context(&format!("'{coefficient_token}' is not an integer")))?;
        let mut exponents = Vec::new();
        for token in tokens {
            let e: usize = token
                .parse()
                .map_err(|_| context(&format!("'{token}' is not a non-negative exponent")))?;
            exponents.push(e);
        }
        match num_vars {
            None => num_vars = Some(exponents.len()),
            Some(k) if k != exponents.len() => {
                return Err(context(&format!(
                    "expected {k} exponents to match the first term, found {}",
                    exponents.len()
                )));
            }
            Some(_) => {}
        }
        terms.push((exponents, coefficient));
    }
    let num_vars = num_vars.ok_or("phi file contains no terms")?;
    SymmetricPolynomial::new(num_vars, terms).map_err(|e| format!("phi file: {e}"))
}

// ---- problem files ----

/// One fully executed problem-file task, ready to print.
struct ExecutedTask {
    text_lines: Vec<String>,
    json: Value,
    failed: bool,
}

fn run_check(path: &std::path::Path, format: Format, out: &mut dyn Write) -> Result<i32, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read problem file '{}': {e}", path.display()))?;
    let root: Value =
        serde_json::from_str(&text).map_err(|e| format!("problem file is not valid JSON: {e}"))?;

    // validate and execute everything before printing anything: a malformed
    // task anywhere must leave the report empty
    let Value::Object(mut root) = root else {
        return Err("problem file: top level must be a JSON object".to_string());
    };
    match root.remove("version") {
        Some(Value::String(v)) if v == "1" => {}
        Some(other) => {
            return Err(format!(
                "problem file: field 'version': expected the string \"1\", found {other}"
            ))
        }
        None => return Err("problem file: missing field 'version'".to_string()),
    }
    let tasks = match root.remove("tasks") {
        Some(Value::Array(tasks)) => tasks,
        Some(_) => return Err("problem file: field 'tasks' must be an array".to_string()),
        None => return Err("problem file: missing field 'tasks'".to_string()),
    };
    if let Some(stray) = root.keys().next() {
        return Err(format!("problem file: unknown field '{stray}'"));
    }

    let mut executed = Vec::with_capacity(tasks.len());
    for (index, task) in tasks.into_iter().enumerate() {
        executed.push(execute_task(index + 1, task)?);
    }

    let failed = executed.iter().filter(|t| t.failed).count();
    match format {
        Format::Text => {
            for task in &executed {
                for line in &task.text_lines {
                    let _ = writeln!(out, "{line}");
                }
            }
            let _ = writeln!(out, "summary: {} tasks, {failed} failed", executed.len());
        }
        Format::Json => {
            let tasks: Vec<Value> = executed.iter().map(|t| t.json.clone()).collect();
            let _ = writeln!(
                out,
                "{}",
                json!({
                    "command": "check",
                    "tasks": tasks,
                    "total": tasks.len(),
                    "failed": failed,
                })
            );
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

/// Field accessors for one task object. Every getter consumes its field so
/// leftovers can be rejected as unknown.
struct TaskFields {
    context: String,
    map: Map<String, Value>,
}

impl TaskFields {
    fn fail(&self, message: &str) -> String {
        format!("{}: {message}", self.context)
    }

    fn field_fail(&self, name: &str, message: &str) -> String {
        self.fail(&format!("field '{name}': {message}"))
    }

    fn take(&mut self, name: &str) -> Option<Value> {
        match self.map.remove(name) {
            Some(Value::Null) => None,
            other => other,
        }
    }

    fn bigint(&mut self, name: &str) -> Result<BigInt, String> {
        match self.take(name) {
            Some(value) => self.coerce_bigint(name, value),
            None => Err(self.field_fail(name, "missing required integer")),
        }
    }

    fn bigint_opt(&mut self, name: &str) -> Result<Option<BigInt>, String> {
        match self.take(name) {
            Some(value) => self.coerce_bigint(name, value).map(Some),
            None => Ok(None),
        }
    }

    fn coerce_bigint(&self, name: &str, value: Value) -> Result<BigInt, String> {
        match value {
            Value::String(s) => BigInt::from_str(s.trim())
                .map_err(|_| self.field_fail(name, &format!("'{s}' is not a decimal integer"))),
            Value::Number(num) => {
                if let Some(i) = num.as_i64() {
                    Ok(BigInt::from(i))
                } else if let Some(u) = num.as_u64() {
                    Ok(BigInt::from(u))
                } else {
                    Err(self.field_fail(
                        name,
                        "must be an integer or a decimal string, not a float",
                    ))
                }
            }
            other => Err(self.field_fail(
                name,
                &format!("expected an integer or a decimal string, found {other}"),
            )),
        }
    }

    fn usize(&mut self, name: &str) -> Result<usize, String> {
        let value = self.bigint(name)?;
        let (sign, digits) = value.to_u64_digits();
        match (sign, digits.as_slice()) {
            (num_bigint::Sign::NoSign, _) => Ok(0),
            (num_bigint::Sign::Plus, [single]) if *single <= usize::MAX as u64 => {
                Ok(*single as usize)
            }
            _ => Err(self.field_fail(name, &format!("'{value}' is out of range"))),
        }
    }

    fn bigint_list(&mut self, name: &str) -> Result<Vec<BigInt>, String> {
        match self.take(name) {
            Some(Value::Array(items)) => items
                .into_iter()
                .map(|item| self.coerce_bigint(name, item))
                .collect(),
            Some(_) => Err(self.field_fail(name, "expected an array of integers")),
            None => Err(self.field_fail(name, "missing required integer list")),
        }
    }

    fn bool_or(&mut self, name: &str, default: bool) -> Result<bool, String> {
        match self.take(name) {
            Some(Value::Bool(b)) => Ok(b),
            Some(other) => {
                Err(self.field_fail(name, &format!("expected true or false, found {other}")))
            }
            None => Ok(default),
        }
    }

    fn string_or(&mut self, name: &str, default: &str) -> Result<String, String> {
        match self.take(name) {
            Some(Value::String(s)) => Ok(s),
            Some(other) => Err(self.field_fail(name, &format!("expected a string, found {other}"))),
            None => Ok(default.to_string()),
        }
    }

    fn finish(self) -> Result<(), String> {
        if let Some(stray) = self.map.keys().next() {
            return Err(self.fail(&format!("unknown field '{stray}'")));
        }
        Ok(())
    }
}

fn execute_task(index: usize, task: Value) -> Result<ExecutedTask, String> {
    let Value::Object(map) = task else {
        return Err(format!("task {index}: every task must be a JSON object"));
    };
    let mut fields = TaskFields { context: format!("task {index}"), map };
    let label = fields.string_or("label", &format!("task {index}"))?;
    fields.context = format!("task {index} (label '{label}')");
    let kind = match fields.take("kind") {
        Some(Value::String(kind)) => kind,
        Some(other) => {
            return Err(fields.field_fail("kind", &format!("expected a string, found {other}")))
        }
        None => return Err(fields.field_fail("kind", "missing required task kind")),
    };

    match kind.as_str() {
        "residue" => execute_residue_task(fields, &label),
        "camacho_sad" => {
            let n = fields.usize("n")?;
            let degree = fields.bigint("degree")?;
            let chi = fields.bigint("chi")?;
            let mu = fields.bigint("mu")?;
            fields_done_value(fields, &label, "camacho_sad", || {
                camacho_sad_total(n, &degree, &chi, &mu)
            })
        }
        "adjunction" => {
            let n = fields.usize("n")?;
            let degree = fields.bigint("degree")?;
            let mu = fields.bigint("mu")?;
            fields_done_value(fields, &label, "adjunction", || adjunction_euler(n, &degree, &mu))
        }
        "milnor" => execute_milnor_task(fields, &label),
        "euler_ci" => execute_euler_ci_task(fields, &label),
        "check" => execute_check_task(fields, &label),
        other => Err(fields.field_fail(
            "kind",
            &format!(
                "unknown task kind '{other}' (expected residue, camacho_sad, adjunction, \
                 milnor, euler_ci, or check)"
            ),
        )),
    }
}

fn fields_done_value(
    fields: TaskFields,
    label: &str,
    kind: &str,
    compute: impl FnOnce() -> crate::error::Result<BigInt>,
) -> Result<ExecutedTask, String> {
    let context = fields.context.clone();
    fields.finish()?;
    let value = compute().map_err(|e| format!("{context}: {e}"))?;
    Ok(ExecutedTask {
        text_lines: vec![format!("{label}: {value}")],
        json: json!({ "label": label, "kind": kind, "value": value.to_string() }),
        failed: false,
    })
}

fn execute_residue_task(mut fields: TaskFields, label: &str) -> Result<ExecutedTask, String> {
    let n = fields.usize("n")?;
    let degrees = fields.bigint_list("degrees")?;
    let phi = fields.string_or("phi", "top")?;
    let explicit_method = match fields.take("method") {
        Some(Value::String(s)) => Some(s),
        Some(other) => {
            return Err(fields.field_fail("method", &format!("expected a string, found {other}")))
        }
        None => None,
    };
    let context = fields.context.clone();
    fields.finish()?;

    let fail = |message: String| format!("{context}: {message}");
    enum Phi {
        Top,
        C1Pow,
        File(SymmetricPolynomial),
    }
    let file_path = phi.strip_prefix("file:");
    let method = explicit_method
        .unwrap_or_else(|| if file_path.is_some() { "ring".into() } else { "both".into() });
    match method.as_str() {
        "closed" | "ring" | "both" => {}
        other => {
            return Err(fail(format!(
                "field 'method': expected 'closed', 'ring', or 'both', found '{other}'"
            )))
        }
    }
    if file_path.is_some() && method != "ring" {
        return Err(fail(
            "field 'method': a 'file:' residue symbol has no closed form; use 'ring'".to_string(),
        ));
    }
    let phi = match (phi.as_str(), file_path) {
        ("top", _) => Phi::Top,
        ("c1pow", _) => Phi::C1Pow,
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| fail(format!("cannot read phi file '{path}': {e}")))?;
            Phi::File(parse_phi_file(&text).map_err(fail)?)
        }
        (other, None) => {
            return Err(fail(format!(
                "field 'phi': expected 'top', 'c1pow', or 'file:PATH', found '{other}'"
            )))
        }
    };
    let closed = |phi: &Phi| -> crate::error::Result<Option<BigInt>> {
        Ok(match phi {
            Phi::Top => Some(residue_sum_top_chern(n, &degrees)?.value),
            Phi::C1Pow => Some(residue_sum_c1_power(n, &degrees)?.value),
            Phi::File(_) => None,
        })
    };
    let ring = |phi: &Phi| -> crate::error::Result<BigInt> {
        Ok(match phi {
            Phi::Top => residue_sum_top_chern_ring(n, &degrees)?.value,
            Phi::C1Pow => residue_sum_c1_power_ring(n, &degrees)?.value,
            Phi::File(poly) => {
                let normal = FormalBundle::direct_sum_of_lines(n, &degrees);
                residue_sum_general(n, &normal, poly)?.value
            }
        })
    };
    match (method.as_str(), &phi) {
        ("ring", _) => {
            let value = ring(&phi).map_err(|e| fail(e.to_string()))?;
            Ok(ExecutedTask {
                text_lines: vec![format!("{label}: {value}")],
                json: json!({ "label": label, "kind": "residue", "value": value.to_string() }),
                failed: false,
            })
        }
        ("closed" | "both", Phi::File(_)) => Err(fail(
            "field 'method': a 'file:' residue symbol has no closed form; use 'ring'".to_string(),
        )),
        ("closed", _) => {
            let value = closed(&phi).map_err(|e| fail(e.to_string()))?.expect("built-in phi");
            Ok(ExecutedTask {
                text_lines: vec![format!("{label}: {value}")],
                json: json!({ "label": label, "kind": "residue", "value": value.to_string() }),
                failed: false,
            })
        }
        ("both", _) => {
            let c = closed(&phi).map_err(|e| fail(e.to_string()))?.expect("built-in phi");
            let r = ring(&phi).map_err(|e| fail(e.to_string()))?;
            let agree = c == r;
            let mut line = format!("{label}: closed-form={c} ring-integral={r}");
            if !agree {
                let _ = write!(line, " DISAGREEMENT");
            }
            Ok(ExecutedTask {
                text_lines: vec![line],
                json: json!({
                    "label": label,
                    "kind": "residue",
                    "closed_form": c.to_string(),
                    "ring_integral": r.to_string(),
                    "agree": agree,
                }),
                failed: !agree,
            })
        }
        (other, _) => Err(fail(format!(
            "field 'method': expected 'closed', 'ring', or 'both', found '{other}'"
        ))),
    }
}

fn execute_milnor_task(mut fields: TaskFields, label: &str) -> Result<ExecutedTask, String> {
    let n = fields.usize("n")?;
    let stratum = fields.bigint_list("stratum")?;
    let degree = fields.bigint("degree")?;
    let mu = fields.bigint("mu")?;
    let method = fields.string_or("method", "both")?;
    let context = fields.context.clone();
    fields.finish()?;

    let spec = StratumSpec::new(n, stratum, degree, mu).map_err(|e| format!("{context}: {e}"))?;
    let note = discrepancy_note(&spec);
    let push_note = |lines: &mut Vec<String>, obj: &mut Map<String, Value>| {
        if let Some(note) = &note {
            lines.push(format!("{label}: note: {note}"));
            obj.insert("note".into(), json!(note));
        }
    };
    match method.as_str() {
        "ring" | "multiindex" => {
            let value = if method == "ring" {
                milnor_stratum_ring(&spec)
            } else {
                milnor_stratum_multiindex(&spec)
            };
            let mut lines = vec![format!("{label}: {value}")];
            let mut obj = Map::new();
            obj.insert("label".into(), json!(label));
            obj.insert("kind".into(), json!("milnor"));
            obj.insert("value".into(), json!(value.to_string()));
            push_note(&mut lines, &mut obj);
            Ok(ExecutedTask { text_lines: lines, json: Value::Object(obj), failed: false })
        }
        "both" => {
            let ring = milnor_stratum_ring(&spec);
            let multi = milnor_stratum_multiindex(&spec);
            let agree = ring == multi;
            let mut line = format!("{label}: ring={ring} multiindex={multi}");
            if !agree {
                let _ = write!(line, " DISAGREEMENT");
            }
            let mut lines = vec![line];
            let mut obj = Map::new();
            obj.insert("label".into(), json!(label));
            obj.insert("kind".into(), json!("milnor"));
            obj.insert("ring".into(), json!(ring.to_string()));
            obj.insert("multiindex".into(), json!(multi.to_string()));
            obj.insert("agree".into(), json!(agree));
            push_note(&mut lines, &mut obj);
            Ok(ExecutedTask { text_lines: lines, json: Value::Object(obj), failed: !agree })
        }
        other => Err(format!(
            "{context}: field 'method': expected 'ring', 'multiindex', or 'both', found '{other}'"
        )),
    }
}

fn execute_euler_ci_task(mut fields: TaskFields, label: &str) -> Result<ExecutedTask, String> {
    let n = fields.usize("n")?;
    let degrees = fields.bigint_list("degrees")?;
    let method = fields.string_or("method", "both")?;
    let context = fields.context.clone();
    fields.finish()?;
    let fail = |e: crate::error::Error| format!("{context}: {e}");

    match method.as_str() {
        "ring" => {
            let value = euler_ci(n, &degrees).map_err(fail)?;
            Ok(ExecutedTask {
                text_lines: vec![format!("{label}: {value}")],
                json: json!({ "label": label, "kind": "euler_ci", "value": value.to_string() }),
                failed: false,
            })
        }
        "multiindex" => {
            let value = euler_ci_multiindex(n, &degrees).map_err(fail)?;
            Ok(ExecutedTask {
                text_lines: vec![format!("{label}: {value}")],
                json: json!({ "label": label, "kind": "euler_ci", "value": value.to_string() }),
                failed: false,
            })
        }
        "both" => {
            let ring = euler_ci(n, &degrees).map_err(fail)?;
            let multi = euler_ci_multiindex(n, &degrees).map_err(fail)?;
            let agree = ring == multi;
            let mut line = format!("{label}: ring={ring} multiindex={multi}");
            if !agree {
                let _ = write!(line, " DISAGREEMENT");
            }
            Ok(ExecutedTask {
                text_lines: vec![line],
                json: json!({
                    "label": label,
                    "kind": "euler_ci",
                    "ring": ring.to_string(),
                    "multiindex": multi.to_string(),
                    "agree": agree,
                }),
                failed: !agree,
            })
        }
        other => Err(format!(
            "{context}: field 'method': expected 'ring', 'multiindex', or 'both', found '{other}'"
        )),
    }
}

fn execute_check_task(mut fields: TaskFields, label: &str) -> Result<ExecutedTask, String> {
    let check = match fields.take("check") {
        Some(Value::String(check)) => check,
        Some(other) => {
            return Err(fields.field_fail("check", &format!("expected a string, found {other}")))
        }
        None => return Err(fields.field_fail("check", "missing required check name")),
    };
    let report = match check.as_str() {
        "congruence" => {
            let n = fields.usize("n")?;
            let degree = fields.bigint("degree")?;
            let chi = fields.bigint("chi")?;
            let mu = fields.bigint("mu")?;
            let context = fields.context.clone();
            fields.finish()?;
            congruence_check(n, &degree, &chi, &mu).map_err(|e| format!("{context}: {e}"))?
        }
        "min_degree" => {
            let irreducible = fields.bool_or("irreducible", false)?;
            let has_singularity = fields.bool_or("has_singularity", false)?;
            let curve_degree = fields.bigint("curve_degree")?;
            fields.finish()?;
            min_degree_check(irreducible, has_singularity, &curve_degree)
        }
        "sing_count" => {
            let curve_degree = fields.bigint("curve_degree")?;
            let foliation_degree = fields.bigint("foliation_degree")?;
            let num_sing_points = fields.bigint_opt("num_sing_points")?;
            let mu_total = fields.bigint_opt("mu_total")?;
            let chi = fields.bigint_opt("chi")?;
            let irreducible = fields.bool_or("irreducible", true)?;
            let nodal_only = fields.bool_or("nodal_only", false)?;
            let non_dicritical = fields.bool_or("non_dicritical", false)?;
            let context = fields.context.clone();
            fields.finish()?;
            let mut data = CurveFoliationData::new(curve_degree, foliation_degree);
            data.num_sing_points = num_sing_points;
            data.mu_total = mu_total;
            data.chi = chi;
            data.irreducible = irreducible;
            data.nodal_only = nodal_only;
            data.non_dicritical = non_dicritical;
            sing_count_bound(&data).map_err(|e| format!("{context}: {e}"))?
        }
        other => {
            return Err(fields.field_fail(
                "check",
                &format!(
                    "unknown check '{other}' (expected congruence, min_degree, or sing_count)"
                ),
            ))
        }
    };
    Ok(render_check_report(label, &report))
}

fn render_check_report(label: &str, report: &CheckReport) -> ExecutedTask {
    let witness_text: Vec<String> =
        report.witness.iter().map(|(name, value)| format!("{name}={value}")).collect();
    let mut line = format!("{label}: {} {}", report.check_name, report.verdict);
    if !witness_text.is_empty() {
        let _ = write!(line, " [{}]", witness_text.join(", "));
    }
    let mut lines = vec![line];
    for note in &report.notes {
        lines.push(format!("{label}: note: {note}"));
    }
    let witness_json: Map<String, Value> = report
        .witness
        .iter()
        .map(|(name, value)| (name.clone(), json!(value.to_string())))
        .collect();
    ExecutedTask {
        text_lines: lines,
        json: json!({
            "label": label,
            "kind": "check",
            "check": report.check_name,
            "verdict": report.verdict.to_string(),
            "witness": witness_json,
            "notes": report.notes,
        }),
        failed: report.verdict == Verdict::Fail,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_to_strings(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(args.iter().map(|s| s.to_string()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn camacho_sad_prints_the_bare_value() {
        let (code, out, err) = run_to_strings(&[
            "residua",
            "camacho-sad",
            "--n",
            "2",
            "--degree",
            "2",
            "--chi",
            "3",
            "--mu",
            "1",
        ]);
        assert_eq!(code, 0, "stderr: {err}");
        assert_eq!(out, "4\n");
    }

    #[test]
    fn adjunction_prints_the_bare_value() {
        let (code, out, _) =
            run_to_strings(&["residua", "adjunction", "--n", "2", "--degree", "2", "--mu", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "3\n");
    }

    #[test]
    fn milnor_both_prints_both_routes_and_the_note() {
        let (code, out, _) = run_to_strings(&[
            "residua", "milnor", "--n", "4", "--stratum", "1,1", "--degree", "2", "--mu", "1",
            "--method", "both",
        ]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "ring: 1");
        assert_eq!(lines[1], "multiindex: 1");
        assert!(lines[2].starts_with("note: "));
    }

    #[test]
    fn residue_defaults_to_both_routes() {
        let (code, out, _) =
            run_to_strings(&["residua", "residue", "--n", "4", "--degrees", "2,3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "closed-form: 36\nring-integral: 36\n");
    }

    #[test]
    fn json_format_emits_decimal_strings() {
        let (code, out, _) = run_to_strings(&[
            "residua",
            "camacho-sad",
            "--n",
            "2",
            "--degree",
            "2",
            "--chi",
            "3",
            "--mu",
            "1",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0);
        let value: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(value["value"], json!("4"));
        assert_eq!(value["command"], json!("camacho-sad"));
    }

    #[test]
    fn invalid_degree_exits_two_and_names_the_flag() {
        let (code, out, err) = run_to_strings(&[
            "residua",
            "camacho-sad",
            "--n",
            "2",
            "--degree",
            "x",
            "--chi",
            "3",
            "--mu",
            "1",
        ]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("--degree"), "diagnostic must name the flag: {err}");
    }

    #[test]
    fn file_phi_rejects_a_closed_route() {
        let (code, _, err) = run_to_strings(&[
            "residua",
            "residue",
            "--n",
            "3",
            "--degrees",
            "2",
            "--phi",
            "file:/nonexistent",
            "--method",
            "closed",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("closed form"), "got: {err}");
    }

    #[test]
    fn unknown_phi_is_rejected() {
        let (code, _, err) = run_to_strings(&[
            "residua", "residue", "--n", "3", "--degrees", "2", "--phi", "weird",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("--phi") || err.contains("'weird'"), "got: {err}");
    }

    #[test]
    fn phi_file_parses_terms_comments_and_blank_lines() {
        let poly = parse_phi_file("# leading comment\n  \n2 2 0  # c1^2\n-1 0 1\n").unwrap();
        assert_eq!(poly.num_vars(), 2);
        assert_eq!(poly.weighted_degree(), 2);
        // exponents (1,0) weigh 1 but (0,1) weighs 2 — constructor must refuse
        assert!(parse_phi_file("1 1 0\n1 0 1\n").is_err());
    }

    #[test]
    fn phi_file_with_no_terms_is_rejected() {
        assert!(parse_phi_file("# nothing\n").is_err());
        let err = parse_phi_file("1 2\n3 x\n").unwrap_err();
        assert!(err.contains("line 2"), "got: {err}");
    }

    #[test]
    fn phi_file_exponent_counts_must_match() {
        let err = parse_phi_file("1 1 0\n1 2\n").unwrap_err();
        assert!(err.contains("line 2"), "got: {err}");
    }
}

//! Command-line surface. [`run`] does all the work and returns what to print, so the
//! binary is a thin wrapper and every subcommand is testable in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::jetcalc::{prove_non_isomorphic, verify_ktheory_equality, Side};
use crate::kring::{sum_to_class, KClass};
use crate::p1lab::{birkhoff_factor, jet_transition, verify_corr_p1, LaurentMatrix, SplittingType};
use crate::report::{Report, Verdict};
use crate::sheafdsl::{evaluate_value, parse, Expr, SheafValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "pparts", version, about = "Exact K-theory of P^N and jet bundles of line bundles")]
pub struct CliConfig {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

impl CliConfig {
    pub fn output_mode(&self) -> OutputMode {
        if self.json {
            OutputMode::Json
        } else {
            OutputMode::Text
        }
    }
}

#[derive(Debug, Args)]
pub struct Dim {
    /// Dimension N of the ambient projective space.
    #[arg(short = 'N', value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a sheaf expression to its class in the basis 1, t, ..., t^N.
    Kclass {
        #[command(flatten)]
        dim: Dim,
        expr: String,
    },
    /// Birkhoff splitting type on P^1 of a first-order jet bundle or a split bundle.
    Split {
        #[command(flatten)]
        dim: Dim,
        expr: String,
    },
    /// Run one of the verification certificates.
    Verify {
        #[command(subcommand)]
        claim: VerifyClaim,
    },
    /// Factor the transition matrix stored in a file (rows on lines, entries separated by `;`).
    Birkhoff {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Tabulate results over a parameter range.
    Table {
        #[command(subcommand)]
        table: TableKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyClaim {
    /// J(O(l))^left and J(O(l))^right are not isomorphic on P^N.
    Mainsplit {
        #[command(flatten)]
        dim: Dim,
        /// Twist l of the line bundle O(l).
        #[arg(short = 'l', allow_hyphen_values = true)]
        l: i64,
    },
    /// [J^k(O(l))^left] = [J^k(O(l))^right] in K(P^N).
    Ktheory {
        #[command(flatten)]
        dim: Dim,
        /// Jet order k (at least 1).
        #[arg(short = 'k')]
        k: usize,
        /// Twist l of the line bundle O(l).
        #[arg(short = 'l', allow_hyphen_values = true)]
        l: i64,
    },
    /// On P^1, the Atiyah class of O(l) vanishes iff the two jet structures split alike.
    Atiyah {
        /// Twist l of the line bundle O(l).
        #[arg(short = 'l', allow_hyphen_values = true)]
        l: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum TableKind {
    /// Left and right first-order jet splittings on P^1 for a range of twists.
    Jets {
        #[command(flatten)]
        dim: Dim,
        /// Smallest twist l (inclusive).
        #[arg(long, allow_hyphen_values = true)]
        lmin: i64,
        /// Largest twist l (inclusive).
        #[arg(long, allow_hyphen_values = true)]
        lmax: i64,
    },
}

/// Everything an invocation produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { exit_code: 0, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self { exit_code: 2, stdout: String::new(), stderr }
    }
}

/// Exit status for a report: 0 verified, 1 refuted, 2 inapplicable (parameters outside
/// the claim's hypotheses).
pub fn exit_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Verified => 0,
        Verdict::Refuted => 1,
        Verdict::Inapplicable => 2,
    }
}

/// Stable JSON for a report: `{claim, params, verdict, steps: [{description, values}]}`,
/// with every number as a decimal string.
pub fn emit_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize")
}

pub fn parse_report_json(text: &str) -> Result<Report, serde_json::Error> {
    serde_json::from_str(text)
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassOutput {
    pub ambient_dim: String,
    pub expr: String,
    pub class: String,
    pub coefficients: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SplitOutput {
    pub expr: String,
    pub splitting: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BirkhoffOutput {
    pub splitting: Vec<String>,
    pub degree: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JetRow {
    pub l: String,
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub left_class: Vec<String>,
    pub right_class: Vec<String>,
    pub atiyah_class: String,
    pub isomorphic: bool,
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

fn ascending(s: &SplittingType) -> Vec<String> {
    strings(s.degrees().iter().rev())
}

fn render<T: Serialize>(mode: OutputMode, value: &T, text: String) -> String {
    match mode {
        OutputMode::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("outputs serialize");
            s.push('\n');
            s
        }
        OutputMode::Text => text,
    }
}

fn parse_expr(text: &str) -> Result<Expr, Outcome> {
    parse(text).map_err(|e| Outcome::usage(format!("error: bad expression {text:?}: {e}")))
}

fn kclass(mode: OutputMode, n: usize, text: &str) -> Outcome {
    let expr = match parse_expr(text) {
        Ok(e) => e,
        Err(o) => return o,
    };
    let class = match evaluate_value(&expr, n) {
        Ok(v) => v.class(),
        Err(e) => return Outcome::usage(format!("error: cannot evaluate {text:?}: {e}")),
    };
    let out = ClassOutput {
        ambient_dim: n.to_string(),
        expr: expr.to_string(),
        class: class.to_string(),
        coefficients: strings(class.coeffs()),
    };
    let text = format!("{}\ncoefficients: [{}]\n", out.class, out.coefficients.join(", "));
    Outcome::ok(render(mode, &out, text))
}

/// Transition matrix on P^1 for the expression, when one is defined.
pub fn transition_for(expr: &Expr) -> Result<LaurentMatrix, String> {
    match expr {
        Expr::Jet { order: 1, twist, side } => Ok(jet_transition(*twist, *side)),
        Expr::Jet { order, .. } => Err(format!(
            "explicit transition matrices exist only for first-order jets, got order {order}"
        )),
        other => match evaluate_value(other, 1).map_err(|e| e.to_string())? {
            SheafValue::Split(s) if s.is_effective() && !s.is_empty() => {
                Ok(LaurentMatrix::diagonal_monomials(&s.twists()))
            }
            SheafValue::Split(s) => Err(format!("`{other}` evaluates to {s}, which is not an effective bundle")),
            SheafValue::Class(_) => Err(format!("`{other}` has no explicit transition matrix")),
        },
    }
}

fn split(mode: OutputMode, n: usize, text: &str) -> Outcome {
    if n != 1 {
        return Outcome::usage(format!(
            "error: -N {n}: splitting types are computed only on the projective line (N = 1)"
        ));
    }
    let expr = match parse_expr(text) {
        Ok(e) => e,
        Err(o) => return o,
    };
    let m = match transition_for(&expr) {
        Ok(m) => m,
        Err(msg) => return Outcome::usage(format!("error: {msg}")),
    };
    let st = match birkhoff_factor(&m) {
        Ok(f) => f.splitting_type(),
        Err(e) => return Outcome::usage(format!("error: {e}")),
    };
    let out = SplitOutput { expr: expr.to_string(), splitting: ascending(&st) };
    Outcome::ok(render(mode, &out, format!("{st}\n")))
}

fn report_outcome(mode: OutputMode, report: &Report) -> Outcome {
    let stdout = match mode {
        OutputMode::Json => emit_json(report) + "\n",
        OutputMode::Text => report.to_string(),
    };
    Outcome { exit_code: exit_code(report.verdict), stdout, stderr: String::new() }
}

fn birkhoff(mode: OutputMode, path: &PathBuf) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::usage(format!("error: cannot read matrix file {}: {e}", path.display())),
    };
    let m: LaurentMatrix = match text.parse() {
        Ok(m) => m,
        Err(e) => return Outcome::usage(format!("error: {}: {e}", path.display())),
    };
    let f = match birkhoff_factor(&m) {
        Ok(f) => f,
        Err(e) => return Outcome::usage(format!("error: {}: {e}", path.display())),
    };
    let st = f.splitting_type();
    let out = BirkhoffOutput {
        splitting: ascending(&st),
        degree: st.degree().to_string(),
        left: f.left.to_string(),
        right: f.right.to_string(),
    };
    let text = format!(
        "{st}\ndegree: {}\nleft factor (invertible over Q[u]):\n{}right factor (invertible over Q[u^-1]):\n{}",
        out.degree, out.left, out.right
    );
    Outcome::ok(render(mode, &out, text))
}

fn jet_row(l: i64) -> JetRow {
    let left = crate::p1lab::birkhoff_split(&jet_transition(l, Side::Left)).expect("unit determinant");
    let right = crate::p1lab::birkhoff_split(&jet_transition(l, Side::Right)).expect("unit determinant");
    let class_of = |s: &SplittingType| -> KClass { sum_to_class(&s.to_line_bundle_sum()) };
    JetRow {
        l: l.to_string(),
        left: ascending(&left),
        right: ascending(&right),
        left_class: strings(class_of(&left).coeffs()),
        right_class: strings(class_of(&right).coeffs()),
        atiyah_class: crate::p1lab::atiyah_class_p1(l).to_string(),
        isomorphic: left == right,
    }
}

fn table_jets(mode: OutputMode, n: usize, lmin: i64, lmax: i64) -> Outcome {
    if n != 1 {
        return Outcome::usage(format!(
            "error: -N {n}: splitting types are computed only on the projective line (N = 1)"
        ));
    }
    if lmin > lmax {
        return Outcome::usage(format!("error: --lmin {lmin} exceeds --lmax {lmax}"));
    }
    // rows are independent; scoped threads keep the output in l order
    let rows: Vec<JetRow> = std::thread::scope(|scope| {
        let handles: Vec<_> = (lmin..=lmax).map(|l| scope.spawn(move || jet_row(l))).collect();
        handles.into_iter().map(|h| h.join().expect("row worker")).collect()
    });
    let mut text = String::new();
    let _ = writeln!(text, "{:>5}  {:<12}  {:<12}  {:<10}  {:>7}  isomorphic", "l", "left", "right", "class", "atiyah");
    for r in &rows {
        let _ = writeln!(
            text,
            "{:>5}  {:<12}  {:<12}  {:<10}  {:>7}  {}",
            r.l,
            format!("{{{}}}", r.left.join(", ")),
            format!("{{{}}}", r.right.join(", ")),
            format!("[{}]", r.left_class.join(", ")),
            r.atiyah_class,
            if r.isomorphic { "yes" } else { "no" }
        );
    }
    Outcome::ok(render(mode, &rows, text))
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(rendered)
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    let mode = cfg.output_mode();
    match &cfg.command {
        Command::Kclass { dim, expr } => kclass(mode, dim.n as usize, expr),
        Command::Split { dim, expr } => split(mode, dim.n as usize, expr),
        Command::Verify { claim } => match claim {
            VerifyClaim::Mainsplit { dim, l } => report_outcome(mode, &prove_non_isomorphic(dim.n as usize, *l)),
            VerifyClaim::Ktheory { dim, k, l } => match verify_ktheory_equality(dim.n as usize, *k, *l) {
                Ok(r) => report_outcome(mode, &r),
                Err(e) => Outcome::usage(format!("error: -k {k}: {e}")),
            },
            VerifyClaim::Atiyah { l } => report_outcome(mode, &verify_corr_p1(*l)),
        },
        Command::Birkhoff { matrix } => birkhoff(mode, matrix),
        Command::Table { table: TableKind::Jets { dim, lmin, lmax } } => {
            table_jets(mode, dim.n as usize, *lmin, *lmax)
        }
    }
}

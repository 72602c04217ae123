//! Argument parsing and dispatch for the `qgroth` command.
//!
//! [`dispatch`] runs one invocation in-process and returns its exit status
//! and output, which is how golden files are replayed.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use qgroth::qtorus::QuantumTorus;
use qgroth::quiver::parse_path;
use qgroth::render;
use qgroth::repchar::{
    self, baxter_check, drinfeld_double_check, oracle_check, prefundamental_qt_character,
    thinness_flatten_check, BaxterVariant, Verdict,
};
use qgroth::verify::{self, VerifyOptions, DEFAULT_SEED};
use qgroth::{
    build_lambda, check_compatible, CartanData, DynkinType, Error, QuantumSeed, QuiverSlice,
    Vertex, Window,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qgroth",
    version,
    about = "Quantum cluster algebras and (q,t)-characters"
)]
pub struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Compute independent characters on several threads.
    #[arg(long, global = true)]
    pub parallel: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    /// Dynkin type: A, D or E.
    #[arg(long = "type", value_name = "TYPE")]
    pub ty: DynkinType,
    #[arg(long)]
    pub rank: usize,
}

impl TypeArgs {
    fn cartan(&self) -> qgroth::Result<Arc<CartanData>> {
        Ok(Arc::new(CartanData::new(self.ty, self.rank)?))
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SliceArgs {
    /// Level window `rmin:rmax`.
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<Window>,
    /// Shorthand for the window of Γ_N.
    #[arg(long = "N")]
    pub n: Option<u32>,
}

impl SliceArgs {
    fn window(&self) -> qgroth::Result<Window> {
        match (self.window, self.n) {
            (Some(w), _) => Ok(w),
            (None, Some(n)) => Window::gamma(n),
            (None, None) => Window::gamma(1),
        }
    }
}

#[derive(Debug, Args)]
pub struct OriginArgs {
    #[arg(long = "i")]
    pub i: usize,
    #[arg(long = "r", allow_negative_numbers = true)]
    pub r: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QSign {
    Minus,
    Plus,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix, dual Coxeter number and the inverse quantum Cartan series.
    Cartan {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 12)]
        degree: usize,
    },
    /// Vertices and exchange matrix of a slice.
    Quiver {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        slice: SliceArgs,
    },
    /// Skew form of a slice and its compatibility with the exchange matrix.
    Compat {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        slice: SliceArgs,
    },
    /// Quantum mutation along a path, e.g. `--path "(1,4);(1,2)"`.
    Mutate {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        slice: SliceArgs,
        #[arg(long, allow_hyphen_values = true)]
        path: String,
        /// Variable to print; defaults to the last mutated vertex.
        #[arg(long, allow_hyphen_values = true)]
        vertex: Option<Vertex>,
        /// Print the `t = 1` specialization.
        #[arg(long)]
        t1: bool,
    },
    /// The fundamental (q,t)-character at (i,r).
    FundChar {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        origin: OriginArgs,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<Window>,
        #[arg(long)]
        t1: bool,
    },
    /// The mutation sequence producing the character at (i,r).
    Sequence {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        origin: OriginArgs,
    },
    /// The quantized Baxter relation in type A1.
    Baxter {
        #[arg(long = "r", allow_negative_numbers = true)]
        r: i64,
        /// Swap the powers of t on the right side (must fail).
        #[arg(long)]
        flip: bool,
    },
    /// Drinfeld double relations in type A1.
    Drinfeld {
        #[arg(long, value_enum, default_value_t = QSign::Minus)]
        q_sign: QSign,
    },
    /// Classical Frenkel–Mukhin q-character and its agreement with the engine.
    Oracle {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        origin: OriginArgs,
    },
    /// Type A: every coefficient of the character is 1.
    ThinCheck {
        #[command(flatten)]
        ty: TypeArgs,
        /// Node; all nodes when omitted.
        #[arg(long = "i")]
        i: Option<usize>,
        /// Level; the parity of the node when omitted.
        #[arg(long = "r", allow_negative_numbers = true)]
        r: Option<i64>,
    },
    /// Prefundamental class: monomial, weight and truncated character.
    Prefund {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        origin: OriginArgs,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Every acceptance criterion, plus optional golden-file replay.
    VerifyAll {
        #[arg(long)]
        quick: bool,
        #[arg(long)]
        golden_dir: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String, pass: bool) -> Self {
        Self {
            code: if pass { EXIT_PASS } else { EXIT_FAIL },
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn dispatch<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Output::ok(rendered, true)
            };
        }
    };
    match run(&cli) {
        Ok(out) => out,
        Err(e) => Output {
            code: error_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Invalid input is a usage error; anything else is a failed computation.
fn error_code(e: &Error) -> i32 {
    match e {
        Error::InvalidDynkin { .. }
        | Error::NodeOutOfRange { .. }
        | Error::VertexOutsideComponent(_)
        | Error::VertexNotInSlice(_)
        | Error::FrozenVertex(_)
        | Error::NotExchangeable { .. }
        | Error::InvalidWindow { .. }
        | Error::WindowTooSmall { .. }
        | Error::Unsupported(_)
        | Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

fn emit(json: bool, doc: Value, text: String, pass: bool) -> Output {
    if json {
        Output::ok(render::to_line(&doc), pass)
    } else {
        Output::ok(text, pass)
    }
}

fn verdict_lines(verdicts: &[Verdict]) -> String {
    verdicts.iter().map(|v| format!("{v}\n")).collect()
}

fn run(cli: &Cli) -> qgroth::Result<Output> {
    let json = cli.json;
    match &cli.command {
        Command::Cartan { ty, degree } => {
            let c = ty.cartan()?;
            let mut text = format!(
                "type {}, dual Coxeter number {}\ncartan matrix:\n",
                c.label(),
                c.dual_coxeter()
            );
            let rows: Vec<Vec<i64>> = c.cartan_matrix().to_vec();
            text.push_str(&qgroth::IntMatrix::from_rows(&rows)?.to_string());
            let mut series = Vec::new();
            for i in 1..=c.rank() {
                for j in 1..=c.rank() {
                    let coeffs = c.ctilde_series(i, j, *degree)?;
                    let shown: Vec<String> = coeffs.iter().map(i64::to_string).collect();
                    let _ = writeln!(text, "C~[{i},{j}] m=0..{degree}: {}", shown.join(" "));
                    series.push(json!({"i": i, "j": j, "coeffs": coeffs}));
                }
            }
            let doc = render::document(vec![
                ("type", json!(c.label())),
                ("dual_coxeter", json!(c.dual_coxeter())),
                ("cartan", json!(rows)),
                ("series", Value::Array(series)),
            ]);
            Ok(emit(json, doc, text, true))
        }
        Command::Quiver { ty, slice } => {
            let c = ty.cartan()?;
            let s = QuiverSlice::new(&c, slice.window()?)?;
            let ex = s.exchangeable();
            let mut text = format!(
                "slice {} window {}: {} vertices, {} exchangeable\nvertices (frozen marked *):",
                s.label(),
                s.window(),
                s.len(),
                ex.len()
            );
            for (idx, v) in s.vertices().iter().enumerate() {
                let _ = write!(text, " {v}{}", if s.is_frozen(idx) { "*" } else { "" });
            }
            let _ = write!(
                text,
                "\nB~ ({}x{}):\n{}",
                s.len(),
                ex.len(),
                s.b_matrix().matrix()
            );
            let doc = render::document(vec![
                ("type", json!(c.label())),
                ("window", json!([s.window().min, s.window().max])),
                (
                    "vertices",
                    json!(s
                        .vertices()
                        .iter()
                        .map(|&v| render::vertex(v))
                        .collect::<Vec<_>>()),
                ),
                (
                    "exchangeable",
                    json!(ex.iter().map(|&v| render::vertex(v)).collect::<Vec<_>>()),
                ),
                ("b_matrix", render::matrix(s.b_matrix().matrix())),
            ]);
            Ok(emit(json, doc, text, true))
        }
        Command::Compat { ty, slice } => {
            let c = ty.cartan()?;
            let s = QuiverSlice::new(&c, slice.window()?)?;
            let lambda = build_lambda(&c, &s);
            let report = check_compatible(s.b_matrix(), &lambda)?;
            let pass = report.is_compatible();
            let status = if pass { "PASS" } else { "FAIL" };
            let text = format!(
                "Lambda ({0}x{0}):\n{1}B~^T Lambda:\n{2}{status} {report}\n",
                s.len(),
                lambda,
                report.product
            );
            let doc = render::document(vec![
                ("type", json!(c.label())),
                ("window", json!([s.window().min, s.window().max])),
                ("lambda", render::matrix(&lambda)),
                ("product", render::matrix(&report.product)),
                ("diagonal", json!(report.diagonal)),
                ("violations", json!(report.violations)),
                ("status", json!(status)),
            ]);
            Ok(emit(json, doc, text, pass))
        }
        Command::Mutate {
            ty,
            slice,
            path,
            vertex,
            t1,
        } => {
            let c = ty.cartan()?;
            let s = QuiverSlice::new(&c, slice.window()?)?;
            let path = parse_path(path)?;
            let at = match (vertex, path.last()) {
                (Some(v), _) => *v,
                (None, Some(&v)) => v,
                (None, None) => {
                    return Err(Error::Parse("give --vertex when the path is empty".into()))
                }
            };
            let seed = QuantumSeed::initial(Arc::clone(&c), s)?.mutate_along(&path)?;
            let x = seed.var(at)?;
            let (shown, terms) = if *t1 {
                let p = x.evaluate_t1();
                (p.to_string(), render::laurent_terms(&p))
            } else {
                (x.to_string(), render::torus_terms(x))
            };
            let text = format!("X{at} = {shown}\n");
            let doc = render::document(vec![
                ("vertex", render::vertex(at)),
                (
                    "path",
                    json!(path.iter().map(|&v| render::vertex(v)).collect::<Vec<_>>()),
                ),
                ("terms", terms),
            ]);
            Ok(emit(json, doc, text, true))
        }
        Command::FundChar {
            ty,
            origin,
            window,
            t1,
        } => {
            let c = ty.cartan()?;
            let ch = repchar::fundamental_qt_character(&c, origin.i, origin.r, *window)?;
            let torus = QuantumTorus::new(Arc::clone(&c));
            let (shown, terms) = if *t1 {
                let p = ch.value.evaluate_t1();
                (p.to_string(), render::laurent_terms(&p))
            } else {
                (ch.value.to_string(), render::torus_terms(&ch.value))
            };
            let mut text = format!(
                "chi~{} read at {} in window {}\n{shown}\n",
                ch.origin, ch.vertex_read, ch.window
            );
            let preimage = ch.y_preimage(&torus).ok();
            if let Some(y) = &preimage {
                let _ = writeln!(text, "= J({y})");
            }
            let doc = render::document(vec![
                ("origin", render::vertex(ch.origin)),
                ("vertex_read", render::vertex(ch.vertex_read)),
                ("window", json!([ch.window.min, ch.window.max])),
                ("t1", json!(t1)),
                ("terms", terms),
                (
                    "y_terms",
                    preimage.as_ref().map_or(Value::Null, render::y_terms),
                ),
            ]);
            Ok(emit(json, doc, text, true))
        }
        Command::Sequence { ty, origin } => {
            let c = ty.cartan()?;
            let spec = repchar::mutation_sequence(&c, origin.i, origin.r)?;
            let order: Vec<String> = spec.column_order.iter().map(usize::to_string).collect();
            let text = format!(
                "h' = {}, column order {}, {} mutations, read at {}\n{spec}\n",
                spec.h_prime,
                order.join(" "),
                spec.sequence.len(),
                spec.target()
            );
            let doc = render::document(vec![
                ("origin", render::vertex(spec.origin)),
                ("h_prime", json!(spec.h_prime)),
                ("column_order", json!(spec.column_order)),
                (
                    "sequence",
                    json!(spec
                        .sequence
                        .iter()
                        .map(|&v| render::vertex(v))
                        .collect::<Vec<_>>()),
                ),
                ("target", render::vertex(spec.target())),
            ]);
            Ok(emit(json, doc, text, true))
        }
        Command::Baxter { r, flip } => {
            let variant = if *flip {
                BaxterVariant::SignFlipped
            } else {
                BaxterVariant::Printed
            };
            let report = baxter_check(*r, variant)?;
            let text = format!(
                "lhs = {}\nrhs = {}\n{}",
                report.lhs,
                report.rhs,
                verdict_lines(&report.verdicts)
            );
            let doc = render::document(vec![
                ("r", json!(r)),
                ("lhs", render::torus_terms(&report.lhs)),
                ("rhs", render::torus_terms(&report.rhs)),
                (
                    "verdicts",
                    json!(report
                        .verdicts
                        .iter()
                        .map(render::verdict)
                        .collect::<Vec<_>>()),
                ),
            ]);
            Ok(emit(json, doc, text, report.pass()))
        }
        Command::Drinfeld { q_sign } => {
            let sign = match q_sign {
                QSign::Minus => -1,
                QSign::Plus => 1,
            };
            let report = drinfeld_double_check(sign)?;
            let mut text = format!(
                "q = {}t^{{1/2}}\nE = {}\nF = {}\nK = {}\nK' = {}\n",
                if sign < 0 { "-" } else { "+" },
                report.e,
                report.f,
                report.k,
                report.k_prime
            );
            text.push_str(&verdict_lines(&report.relations));
            text.push_str(&verdict_lines(std::slice::from_ref(
                &report.exchange_casimir,
            )));
            let doc = render::document(vec![
                ("q_sign", json!(sign)),
                ("e", render::torus_terms(&report.e)),
                ("f", render::torus_terms(&report.f)),
                ("k", render::torus_terms(&report.k)),
                ("k_prime", render::torus_terms(&report.k_prime)),
                (
                    "relations",
                    json!(report
                        .relations
                        .iter()
                        .map(render::verdict)
                        .collect::<Vec<_>>()),
                ),
                (
                    "exchange_casimir",
                    render::verdict(&report.exchange_casimir),
                ),
            ]);
            Ok(emit(json, doc, text, report.pass()))
        }
        Command::Oracle { ty, origin } => {
            let c = ty.cartan()?;
            let q = repchar::classical_fm_qchar(&c, origin.i, origin.r)?;
            let (_, verdicts) = oracle_check(&c, origin.i, origin.r)?;
            let pass = verdicts.iter().all(|v| v.pass);
            let text = format!(
                "q-character of L(Y[{},{}]): {} monomials\n{q}\n{}",
                origin.i,
                origin.r + 1,
                q.len(),
                verdict_lines(&verdicts)
            );
            let doc = render::document(vec![
                ("origin", json!([origin.i, origin.r])),
                ("y_terms", render::y_terms(&q)),
                (
                    "verdicts",
                    json!(verdicts.iter().map(render::verdict).collect::<Vec<_>>()),
                ),
            ]);
            Ok(emit(json, doc, text, pass))
        }
        Command::ThinCheck { ty, i, r } => {
            let c = ty.cartan()?;
            let nodes: Vec<usize> = match i {
                Some(i) => vec![*i],
                None => (1..=c.rank()).collect(),
            };
            let origins: Vec<(usize, i64)> = nodes
                .into_iter()
                .map(|i| (i, r.unwrap_or_else(|| i64::from(c.parity(i)))))
                .collect();
            let verdicts: Vec<Verdict> = if cli.parallel {
                origins
                    .par_iter()
                    .map(|&(i, r)| thinness_flatten_check(&c, i, r))
                    .collect::<qgroth::Result<_>>()?
            } else {
                origins
                    .iter()
                    .map(|&(i, r)| thinness_flatten_check(&c, i, r))
                    .collect::<qgroth::Result<_>>()?
            };
            let pass = verdicts.iter().all(|v| v.pass);
            let doc = render::document(vec![(
                "verdicts",
                json!(verdicts.iter().map(render::verdict).collect::<Vec<_>>()),
            )]);
            Ok(emit(json, doc, verdict_lines(&verdicts), pass))
        }
        Command::Prefund { ty, origin, depth } => {
            let c = ty.cartan()?;
            let p = prefundamental_qt_character(&c, origin.i, origin.r, *depth)?;
            let text = format!(
                "monomial {} weight {}\nchi (depth {}): {}\n",
                p.monomial, p.weight, p.depth, p.chi
            );
            let doc = render::document(vec![
                ("monomial", render::torus_terms(&p.monomial)),
                ("weight_doubled", json!(p.weight.doubled())),
                ("depth", json!(p.depth)),
                (
                    "chi",
                    json!(p
                        .chi
                        .terms()
                        .map(|(w, c)| json!({"weight_doubled": w.doubled(), "coeff": c}))
                        .collect::<Vec<_>>()),
                ),
            ]);
            Ok(emit(json, doc, text, true))
        }
        Command::VerifyAll {
            quick,
            golden_dir,
            seed,
        } => {
            let opts = VerifyOptions {
                quick: *quick,
                seed: *seed,
                parallel: true,
            };
            let reports = verify::verify_all(&opts);
            let golden = match golden_dir {
                Some(dir) => replay_golden(dir)?,
                None => Vec::new(),
            };
            let passed = reports.iter().filter(|r| r.pass).count();
            let pass = passed == reports.len() && golden.iter().all(|g| g.pass);
            let mut text: String = reports.iter().map(|r| format!("{r}\n")).collect();
            text.push_str(&verdict_lines(&golden));
            let _ = writeln!(
                text,
                "summary: {passed}/{} criteria PASS{}",
                reports.len(),
                if golden.is_empty() {
                    String::new()
                } else {
                    format!(
                        ", {}/{} golden files PASS",
                        golden.iter().filter(|g| g.pass).count(),
                        golden.len()
                    )
                }
            );
            let doc = render::document(vec![
                (
                    "criteria",
                    json!(reports
                        .iter()
                        .map(|r| json!({
                            "id": r.id,
                            "title": r.title,
                            "status": if r.pass { "PASS" } else { "FAIL" },
                            "detail": r.detail,
                        }))
                        .collect::<Vec<_>>()),
                ),
                (
                    "golden",
                    json!(golden.iter().map(render::verdict).collect::<Vec<_>>()),
                ),
                ("pass", json!(pass)),
            ]);
            Ok(emit(json, doc, text, pass))
        }
    }
}

/// One recorded invocation: arguments, expected status and stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenCase {
    pub args: Vec<String>,
    pub status: i32,
    pub stdout: String,
}

/// Parses a golden file:
///
/// ```text
/// args: fund-char --type A --rank 1 --i 1 --r -2
/// status: 0
/// ---
/// <expected stdout>
/// ```
pub fn parse_golden(text: &str) -> Option<GoldenCase> {
    let (head, body) = text.split_once("\n---\n")?;
    let mut args = None;
    let mut status = None;
    for line in head.lines() {
        if let Some(rest) = line.strip_prefix("args:") {
            args = Some(split_args(rest.trim()));
        } else if let Some(rest) = line.strip_prefix("status:") {
            status = rest.trim().parse().ok();
        }
    }
    Some(GoldenCase {
        args: args?,
        status: status?,
        stdout: body.to_string(),
    })
}

/// Whitespace splitting with double quotes grouping.
fn split_args(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut any = false;
    for ch in s.chars() {
        match ch {
            '"' => {
                quoted = !quoted;
                any = true;
            }
            c if c.is_whitespace() && !quoted => {
                if any {
                    out.push(std::mem::take(&mut cur));
                    any = false;
                }
            }
            c => {
                cur.push(c);
                any = true;
            }
        }
    }
    if any {
        out.push(cur);
    }
    out
}

/// Runs a golden case in-process.
pub fn run_golden(case: &GoldenCase) -> Output {
    dispatch(std::iter::once("qgroth".to_string()).chain(case.args.iter().cloned()))
}

/// Replays every `*.golden` file under `dir`, in name order.
pub fn replay_golden(dir: &Path) -> qgroth::Result<Vec<Verdict>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "golden"))
        .collect();
    files.sort();
    let mut out = Vec::new();
    for path in files {
        let name = format!("golden {}", path.display());
        let text = fs::read_to_string(&path).unwrap_or_default();
        let verdict = match parse_golden(&text) {
            None => Verdict::new(name, false, "malformed golden file"),
            Some(case) if case.args.first().is_some_and(|a| a == "verify-all") => Verdict::new(
                name,
                false,
                "verify-all cannot be replayed from a golden file",
            ),
            Some(case) => {
                let got = run_golden(&case);
                if got.code != case.status {
                    Verdict::new(
                        name,
                        false,
                        format!("status {} (expected {})", got.code, case.status),
                    )
                } else if got.stdout != case.stdout {
                    Verdict::new(name, false, first_difference(&case.stdout, &got.stdout))
                } else {
                    Verdict::new(name, true, "output matches")
                }
            }
        };
        out.push(verdict);
    }
    Ok(out)
}

fn first_difference(want: &str, got: &str) -> String {
    for (n, (a, b)) in want.lines().zip(got.lines()).enumerate() {
        if a != b {
            return format!("line {} differs: expected `{a}`, got `{b}`", n + 1);
        }
    }
    format!(
        "line counts differ: expected {}, got {}",
        want.lines().count(),
        got.lines().count()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_parsing() {
        let case =
            parse_golden("args: mutate --path \"(1,4); (1,2)\" --N 2\nstatus: 1\n---\nbody\n")
                .unwrap();
        assert_eq!(
            case.args,
            vec!["mutate", "--path", "(1,4); (1,2)", "--N", "2"]
        );
        assert_eq!(case.status, 1);
        assert_eq!(case.stdout, "body\n");
        assert!(parse_golden("no separator").is_none());
    }

    #[test]
    fn usage_errors() {
        let out = dispatch(["qgroth", "cartan", "--type", "A", "--rank", "2", "--bogus"]);
        assert_eq!(out.code, EXIT_USAGE);
        let out = dispatch([
            "qgroth",
            "fund-char",
            "--type",
            "A",
            "--rank",
            "1",
            "--i",
            "1",
            "--r",
            "-1",
        ]);
        assert_eq!(out.code, EXIT_USAGE);
        assert!(out.stderr.contains("(1,-1)"));
        assert_eq!(dispatch(["qgroth", "--help"]).code, EXIT_PASS);
    }
}

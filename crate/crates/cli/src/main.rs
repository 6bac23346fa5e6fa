use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use ptq_core::discrete::{solve_intertwiner, transformation_table, IntertwinerConstraint, IntertwinerMode};
use ptq_core::expr::{canonicalize, eval_exact, parse};
use ptq_core::matrix::ExactMatrix;
use ptq_core::suites::{run_suite, Config, Suite, DEFAULT_SEED, DEFAULT_TOLERANCE};

/// Like `println!`, but a closed stdout (e.g. piping into `head`) is not an error.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "ptq", version, about = "Exact gamma-matrix algebra and discrete-symmetry verifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        /// all, algebra, table, intertwiners, planewave or em
        #[arg(default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Tolerance for floating-point checks
        #[arg(long, default_value_t = DEFAULT_TOLERANCE, value_parser = parse_tolerance)]
        tol: f64,
    },
    /// Evaluate a gamma expression, e.g. "g0*g2*g0".
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the composed transformation table.
    Table {
        #[arg(long)]
        json: bool,
    },
    /// Solve U op(γᵃ) U⁻¹ = εₐ γᵃ over phases times basis elements.
    Solve {
        /// Four signs εₐ, e.g. "+---"
        #[arg(allow_hyphen_values = true)]
        signs: String,
        /// plain, transpose or conjugate
        #[arg(value_parser = parse_mode)]
        mode: IntertwinerMode,
        #[arg(long)]
        json: bool,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: ptq_core::Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<IntertwinerMode, String> {
    s.parse().map_err(|e: ptq_core::Error| e.to_string())
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
        _ => Err(format!("tolerance must be a finite nonnegative number, got {s:?}")),
    }
}

fn matrix_strings(m: &ExactMatrix) -> Vec<Vec<String>> {
    m.rows().map(|row| row.iter().map(ToString::to_string).collect()).collect()
}

fn print_json<T: Serialize>(value: &T) {
    say!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn verify(suite: Suite, json: bool, seed: u64, tol: f64) -> ExitCode {
    let report = run_suite(suite, &Config { seed, tolerance: tol });
    if json {
        print_json(&report);
    } else {
        say!("{report}");
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

#[derive(Serialize)]
struct EvalOutput {
    expr: String,
    canonical: Option<String>,
    matrix: Vec<Vec<String>>,
}

fn eval(text: &str, json: bool) -> ExitCode {
    let e = match parse(text) {
        Ok(e) => e,
        Err(err) => {
            eprintln!("error: {err}");
            eprintln!("  {text}");
            eprintln!("  {}^", " ".repeat(text[..err.offset.min(text.len())].chars().count()));
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let matrix = eval_exact(&e);
    let canonical = canonicalize(&e).ok().map(|c| c.to_string());
    if json {
        print_json(&EvalOutput { expr: text.to_string(), canonical, matrix: matrix_strings(&matrix) });
    } else {
        say!("canonical: {}", canonical.as_deref().unwrap_or("(not a single basis element)"));
        say!("{matrix}");
    }
    ExitCode::SUCCESS
}

#[derive(Serialize)]
struct Expected {
    matrix: &'static str,
    antilinear: bool,
    arg_signs: String,
}

#[derive(Serialize)]
struct TableLine {
    op: String,
    matrix: String,
    antilinear: bool,
    arg_signs: String,
    entries: Vec<Vec<String>>,
    expected: Expected,
    #[serde(rename = "match")]
    matches: bool,
}

fn table(json: bool) -> ExitCode {
    let lines: Vec<TableLine> = transformation_table()
        .into_iter()
        .map(|row| TableLine {
            op: row.op.name.clone(),
            matrix: row.op.canonical_matrix().map(|c| c.to_string()).unwrap_or_else(|_| "?".into()),
            antilinear: row.op.antilinear,
            arg_signs: row.op.arg_signs.to_string(),
            entries: matrix_strings(&row.op.matrix),
            expected: Expected {
                matrix: row.expected_matrix,
                antilinear: row.expected_antilinear,
                arg_signs: row.expected_signs.to_string(),
            },
            matches: row.matches(),
        })
        .collect();
    if json {
        print_json(&serde_json::json!({ "rows": lines }));
    } else {
        let kind = |a: bool| if a { "antilinear" } else { "linear" };
        say!(
            "{:<4} {:<12} {:<10} {:<8} | {:<12} {:<10} {:<8} match",
            "op",
            "matrix",
            "kind",
            "args",
            "expected",
            "kind",
            "args"
        );
        for l in &lines {
            say!(
                "{:<4} {:<12} {:<10} {:<8} | {:<12} {:<10} {:<8} {}",
                l.op,
                l.matrix,
                kind(l.antilinear),
                l.arg_signs,
                l.expected.matrix,
                kind(l.expected.antilinear),
                l.expected.arg_signs,
                if l.matches { "yes" } else { "NO" }
            );
        }
    }
    if lines.iter().all(|l| l.matches) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

#[derive(Serialize)]
struct Solution {
    expr: String,
    matrix: Vec<Vec<String>>,
}

fn solve(signs: &str, mode: IntertwinerMode, json: bool) -> ExitCode {
    let constraint = match IntertwinerConstraint::parse(signs, mode) {
        Ok(c) => c,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let solutions = solve_intertwiner(&constraint);
    if json {
        let list: Vec<Solution> =
            solutions.iter().map(|s| Solution { expr: s.to_string(), matrix: matrix_strings(&s.matrix()) }).collect();
        print_json(&serde_json::json!({ "signs": signs, "mode": mode.to_string(), "solutions": list }));
    } else {
        let names: Vec<String> = solutions.iter().map(ToString::to_string).collect();
        say!("{}", names.join(", "));
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify { suite, json, seed, tol } => verify(suite, json, seed, tol),
        Command::Eval { expr, json } => eval(&expr, json),
        Command::Table { json } => table(json),
        Command::Solve { signs, mode, json } => solve(&signs, mode, json),
    }
}

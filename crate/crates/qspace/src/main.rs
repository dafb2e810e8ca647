use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use qspace::basis::BasisChange;
use qspace::checks::{self, SuiteReport};
use qspace::eval::{eval, EvalContext, Value};
use qspace::expr::{self, Expr};
use qspace::json::{load_basis, state_to_dto, to_json_17, CDto};
use qspace::state::{format_complex, Mode};

/// Exit codes: 0 success, 1 property violation, 2 parse or usage error,
/// 3 evaluation error.
#[derive(Parser)]
#[command(name = "qspace", version, about = "Occupation-number state algebra")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an expression to a state or a scalar.
    Eval {
        /// Expression, e.g. "a+(1)|;B>" or "<1@1;B|1@1;B>".
        expr: String,
        /// JSON file with a unitary basis change; required by psi symbols.
        #[arg(long)]
        basis: Option<PathBuf>,
        /// Print the result as a single JSON object.
        #[arg(long)]
        json: bool,
        /// Drop result amplitudes with magnitude at or below this value.
        #[arg(long, default_value_t = 0.0)]
        prune: f64,
    },
    /// Exhaustive canonical commutation relation suite (bosons).
    CheckCcr {
        /// Mode cutoff; relations run over all i, j <= modes.
        #[arg(long)]
        modes: u32,
        /// Basis states range over all totals <= max-total.
        #[arg(long)]
        max_total: u32,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Exhaustive canonical anticommutation relation suite (fermions, exact).
    CheckCar {
        /// Mode cutoff; all 2^modes basis states are checked.
        #[arg(long)]
        modes: u32,
    },
    /// Position amplitude of a ket, with its closed-form cross-check.
    Amplitude {
        /// A single ket, e.g. "|1@1,1@2;F>".
        #[arg(long)]
        state: String,
        /// Comma-separated point indices, e.g. "1,2".
        #[arg(long)]
        points: String,
        /// JSON file with the unitary basis change.
        #[arg(long)]
        basis: PathBuf,
    },
    /// Compare the algebra inner product against the labeled-tensor oracle.
    OracleCompare {
        #[arg(long)]
        modes: u32,
        #[arg(long)]
        max_total: u32,
    },
    /// Permutation-invariance property of kind-count collections.
    QsetDemo {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: u32,
    },
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Eval {
            expr,
            basis,
            json,
            prune,
        } => cmd_eval(&expr, basis.as_deref(), json, prune),
        Cmd::CheckCcr {
            modes,
            max_total,
            tol,
        } => print_suite(&checks::ccr_report(modes, max_total, tol)),
        Cmd::CheckCar { modes } => print_suite(&checks::car_report(modes)),
        Cmd::Amplitude {
            state,
            points,
            basis,
        } => cmd_amplitude(&state, &points, &basis),
        Cmd::OracleCompare { modes, max_total } => cmd_oracle(modes, max_total),
        Cmd::QsetDemo { seed, cases } => cmd_qset(seed, cases),
    }
}

/// Reports an error on stderr; with --json also emits the single
/// `{"error": ...}` object on stdout.
fn fail(code: u8, message: &str, json: bool) -> ExitCode {
    eprintln!("error: {message}");
    if json {
        println!("{}", to_json_17(&json!({ "error": message })));
    }
    ExitCode::from(code)
}

fn cmd_eval(text: &str, basis: Option<&std::path::Path>, json: bool, prune: f64) -> ExitCode {
    let ast: Expr = match expr::parse(text) {
        Ok(a) => a,
        Err(e) => return fail(2, &e.to_string(), json),
    };
    let basis: Option<BasisChange> = match basis.map(load_basis).transpose() {
        Ok(b) => b,
        Err(e) => return fail(3, &e.to_string(), json),
    };
    let ctx = EvalContext {
        basis: basis.as_ref(),
        prune,
    };
    match eval(&ast, &ctx) {
        Ok(Value::Vector(v)) => {
            if json {
                println!("{}", to_json_17(&state_to_dto(&v)));
            } else {
                println!("{v}");
            }
            ExitCode::SUCCESS
        }
        Ok(Value::Scalar(s)) => {
            if json {
                println!("{}", to_json_17(&CDto::from(s)));
            } else {
                println!("{}", format_complex(s));
            }
            ExitCode::SUCCESS
        }
        Ok(Value::Operator(_)) => fail(
            3,
            "expression evaluates to an operator; apply it to a state",
            json,
        ),
        Err(e) => fail(3, &e.to_string(), json),
    }
}

fn print_suite(report: &SuiteReport) -> ExitCode {
    for r in &report.relations {
        println!(
            "{:<24} cases {:>8}   max residual {:.3e}",
            r.relation, r.cases, r.max_residual
        );
    }
    if report.passed() {
        println!("PASS (tol {:e})", report.tol);
        ExitCode::SUCCESS
    } else {
        println!("FAIL (tol {:e})", report.tol);
        ExitCode::from(1)
    }
}

fn parse_points(text: &str) -> Result<Vec<Mode>, String> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            let idx: u32 = t
                .parse()
                .map_err(|_| format!("bad point index '{t}'"))?;
            Mode::new(idx).map_err(|_| format!("bad point index '{t}'"))
        })
        .collect()
}

fn cmd_amplitude(state_text: &str, points_text: &str, basis_path: &std::path::Path) -> ExitCode {
    let ast = match expr::parse(state_text) {
        Ok(a) => a,
        Err(e) => return fail(2, &e.to_string(), false),
    };
    let points = match parse_points(points_text) {
        Ok(p) => p,
        Err(e) => return fail(2, &e, false),
    };
    let basis = match load_basis(basis_path) {
        Ok(b) => b,
        Err(e) => return fail(3, &e.to_string(), false),
    };
    let ctx = EvalContext {
        basis: Some(&basis),
        prune: 0.0,
    };
    let v = match eval(&ast, &ctx) {
        Ok(Value::Vector(v)) => v,
        Ok(other) => {
            return fail(
                3,
                &format!("--state must evaluate to a state, got a {}", kind_name(&other)),
                false,
            )
        }
        Err(e) => return fail(3, &e.to_string(), false),
    };
    let mut terms = v.terms();
    let Some((f, c)) = terms.next() else {
        return fail(3, "--state evaluates to the zero vector", false);
    };
    if terms.next().is_some() {
        return fail(3, "--state must be a single occupation basis ket", false);
    }
    let sector = v.sector();
    let direct = match basis.amplitude(f, &points, sector) {
        Ok(a) => c.conj() * a,
        Err(e) => return fail(3, &e.to_string(), false),
    };
    let closed = match basis.amplitude_closed_form(f, &points, sector) {
        Ok(a) => c.conj() * a,
        Err(e) => return fail(3, &e.to_string(), false),
    };
    println!("amplitude    {}", format_complex(direct));
    println!("closed form  {}", format_complex(closed));
    let dev = (direct - closed).norm();
    if dev <= 1e-12 {
        println!("cross-check  deviation {dev:.3e} (tol 1e-12) ok");
        ExitCode::SUCCESS
    } else {
        println!("cross-check  deviation {dev:.3e} (tol 1e-12) FAIL");
        ExitCode::from(1)
    }
}

fn kind_name(v: &Value) -> &'static str {
    match v {
        Value::Scalar(_) => "scalar",
        Value::Vector(_) => "state",
        Value::Operator(_) => "operator",
    }
}

fn cmd_oracle(modes: u32, max_total: u32) -> ExitCode {
    let report = match checks::oracle_compare_report(modes, max_total) {
        Ok(r) => r,
        Err(e) => return fail(3, &e.to_string(), false),
    };
    for r in &report.ratios {
        println!(
            "{:<6} n={}   algebra/oracle ratio {:.16e}   ({} pairs)",
            r.sector.to_string(),
            r.n,
            r.ratio,
            r.pairs
        );
    }
    println!(
        "integer identity {}   max float residual {:.3e}",
        if report.integer_identity { "holds" } else { "VIOLATED" },
        report.max_residual
    );
    if report.passed() {
        println!("PASS");
        ExitCode::SUCCESS
    } else {
        println!("FAIL");
        ExitCode::from(1)
    }
}

fn cmd_qset(seed: u64, cases: u32) -> ExitCode {
    let report = checks::qset_demo(seed, cases);
    println!(
        "exhaustive collections {}   random cases {}   failures {}",
        report.exhaustive_collections, report.cases, report.failures
    );
    for s in &report.samples {
        println!("{s}");
    }
    if report.passed() {
        println!("PASS (seed {})", report.seed);
        ExitCode::SUCCESS
    } else {
        println!("FAIL (seed {})", report.seed);
        ExitCode::from(1)
    }
}

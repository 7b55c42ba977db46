//! Command-line front end: analysis reports, exact generator matrices,
//! verification suites and batch verdict tables for hook Specht modules at
//! quantum characteristic 2.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use specht::domino::enumerate_domino;
use specht::endomorphism::{
    decide, eigenvalue_display, generalized_eigenspaces, spectrum, EndomorphismF,
};
use specht::engine::SpechtModule;
use specht::hook_actions::{apply_psi_odd_with_fallback, garnir_word_kills, Trace};
use specht::oracle::{
    verify_cross_field, verify_domino_actions, verify_endomorphism, verify_presentation,
};
use specht::scalar::FieldSpec;
use specht::shape::HookShape;
use specht::tableau::binomial;

#[derive(Parser)]
#[command(
    name = "specht",
    version,
    about = "Exact decomposability analysis of hook Specht modules at quantum characteristic 2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct Output {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Shape report: dimension, domino count, verdict, spectrum
    Analyze {
        /// Arm length a >= 1
        #[arg(long)]
        a: usize,
        /// Leg length b >= 0
        #[arg(long)]
        b: usize,
        /// Field characteristic: 0 or a prime
        #[arg(long = "char", value_name = "CHAR", default_value_t = 0)]
        characteristic: u64,
        /// Emit the fast-path audit trace over the domino basis
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Exact matrix of a generator or of the endomorphism f
    Matrix {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long = "char", value_name = "CHAR", default_value_t = 0)]
        characteristic: u64,
        /// Generator name: psiN, yN, e_lambda, e:BITS, or f
        #[arg(long)]
        gen: String,
        #[command(flatten)]
        output: Output,
    },
    /// Run the verification suites over all shapes up to a size cap
    Verify {
        /// Largest n = a + b to verify
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        /// Comma-separated characteristics
        #[arg(long, default_value = "0,3,5", value_delimiter = ',')]
        chars: Vec<u64>,
        /// Hard cap passed to the oracle suites
        #[arg(long, default_value_t = 11)]
        cap: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Verdict table over ranges of a and b
    Table {
        /// Arm range, e.g. 3..9 or a single value
        #[arg(long)]
        a: String,
        /// Leg range, e.g. 2..6 or a single value
        #[arg(long)]
        b: String,
        #[arg(long = "char", value_name = "CHAR", default_value_t = 0)]
        characteristic: u64,
        #[command(flatten)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Analyze {
            a,
            b,
            characteristic,
            trace,
            output,
        } => {
            let shape = HookShape::new(a, b)?;
            let field = FieldSpec::from_characteristic(characteristic)?;
            let report = analyze(shape, field, trace)?;
            emit(&output, &render(report, &output))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Matrix {
            a,
            b,
            characteristic,
            gen,
            output,
        } => {
            let shape = HookShape::new(a, b)?;
            let field = FieldSpec::from_characteristic(characteristic)?;
            let module = SpechtModule::new(shape, field)?;
            let (legend, matrix) = if gen == "f" {
                let f = EndomorphismF::build(&module)?;
                (basis_legend(&module), f.full_matrix()?)
            } else {
                let g = module.parse_generator(&gen)?;
                (basis_legend(&module), module.action_matrix(&g)?)
            };
            let payload = json!({
                "shape": [a, b],
                "char": characteristic,
                "gen": gen,
                "basis": legend,
                "matrix": matrix.to_json(),
            });
            match output.format {
                Format::Json | Format::Csv => emit(&output, &payload.to_string())?,
                Format::Text => {
                    let mut s = format!("matrix of {gen} on ({a},1^{b}), char {characteristic}\n");
                    s.push_str(&matrix_text(&matrix));
                    s.push_str("basis order (leg sets): ");
                    let legs: Vec<String> = module
                        .basis()
                        .iter()
                        .map(|t| format!("{:?}", t.leg()))
                        .collect();
                    s.push_str(&legs.join(" "));
                    s.push('\n');
                    emit(&output, &s)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            n_max,
            chars,
            cap,
            output,
        } => {
            let (text, ok) = run_verify(n_max, &chars, cap, &output)?;
            emit(&output, &text)?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Table {
            a,
            b,
            characteristic,
            output,
        } => {
            let arange = parse_range(&a)?;
            let brange = parse_range(&b)?;
            let text = run_table(arange, brange, characteristic, &output)?;
            emit(&output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

struct AnalyzeReport {
    shape: HookShape,
    characteristic: u64,
    dim: usize,
    domino_count: usize,
    verdict: specht::Verdict,
    spectrum: Option<specht::endomorphism::Spectrum>,
    eigenspace_dims: Vec<(String, usize)>,
    trace_events: Vec<(String, String)>,
}

fn analyze(
    shape: HookShape,
    field: FieldSpec,
    trace: bool,
) -> Result<AnalyzeReport, Box<dyn std::error::Error>> {
    let (a, b, n) = (shape.a, shape.b, shape.n());
    let verdict = decide(a, b, field.characteristic())?;
    let dim = binomial(n - 1, b);
    let domino_count = enumerate_domino(shape).len();

    let f_applies = a % 2 == 1 && b % 2 == 0 && field.characteristic() != 2;
    let mut spec = None;
    let mut eigenspace_dims = Vec::new();
    let mut trace_events = Vec::new();
    if f_applies {
        let module = SpechtModule::new(shape, field)?;
        let s = spectrum(&module)?;
        for (x, d, _) in generalized_eigenspaces(&module)? {
            eigenspace_dims.push((eigenvalue_display(&x), d));
        }
        spec = Some(s);
        if trace {
            for t in enumerate_domino(shape) {
                let mut tr = Trace::enabled();
                garnir_word_kills(&t, &mut tr)?;
                for j in (3..n.saturating_sub(1)).step_by(2) {
                    apply_psi_odd_with_fallback(&module, j, &t, &mut tr)?;
                }
                for e in tr.events {
                    trace_events.push((e.lemma.to_string(), e.detail));
                }
            }
        }
    }
    Ok(AnalyzeReport {
        shape,
        characteristic: field.characteristic(),
        dim,
        domino_count,
        verdict,
        spectrum: spec,
        eigenspace_dims,
        trace_events,
    })
}

fn render(r: AnalyzeReport, output: &Output) -> String {
    match output.format {
        Format::Json | Format::Csv => {
            let spectrum = r.spectrum.as_ref().map(|s| {
                json!({
                    "eigenvalues": s.eigenvalues.iter()
                        .map(|(v, m)| json!({"value": eigenvalue_display(v), "multiplicity": m}))
                        .collect::<Vec<_>>(),
                    "triangular": s.triangular,
                    "matches_formula": s.matches_formula,
                })
            });
            json!({
                "shape": [r.shape.a, r.shape.b],
                "n": r.shape.n(),
                "char": r.characteristic,
                "dim": r.dim,
                "domino_count": r.domino_count,
                "decomposable": r.verdict.decomposable,
                "rule": r.verdict.rule,
                "spectrum": spectrum,
                "eigenspace_dims": r.eigenspace_dims.iter()
                    .map(|(v, d)| json!({"eigenvalue": v, "dim": d})).collect::<Vec<_>>(),
                "trace": r.trace_events.iter()
                    .map(|(l, d)| json!({"lemma": l, "detail": d})).collect::<Vec<_>>(),
            })
            .to_string()
        }
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!(
                "shape ({},1^{})  n = {}  char = {}\n",
                r.shape.a,
                r.shape.b,
                r.shape.n(),
                r.characteristic
            ));
            s.push_str(&format!(
                "dim S = {}   domino basis vectors = {}\n",
                r.dim, r.domino_count
            ));
            s.push_str(&format!(
                "verdict: {} (rule: {})\n",
                if r.verdict.decomposable {
                    "decomposable"
                } else {
                    "indecomposable"
                },
                r.verdict.rule
            ));
            if let Some(spec) = &r.spectrum {
                let eig: Vec<String> = spec
                    .eigenvalues
                    .iter()
                    .map(|(v, m)| format!("{} (x{m})", eigenvalue_display(v)))
                    .collect();
                s.push_str(&format!("eigenvalues of f: {}\n", eig.join(", ")));
                s.push_str(&format!(
                    "triangular on the domino block: {}\n",
                    if spec.triangular { "yes" } else { "NO" }
                ));
                let dims: Vec<String> = r
                    .eigenspace_dims
                    .iter()
                    .map(|(v, d)| format!("E_{v}: {d}"))
                    .collect();
                s.push_str(&format!(
                    "generalized eigenspace dims: {}\n",
                    dims.join(", ")
                ));
            }
            for (lemma, detail) in &r.trace_events {
                s.push_str(&format!("trace: {lemma}  {detail}\n"));
            }
            s
        }
    }
}

fn basis_legend(module: &SpechtModule) -> Vec<Value> {
    module.basis().iter().map(|t| t.to_json()).collect()
}

fn matrix_text(m: &specht::Matrix) -> String {
    let mut s = String::new();
    for r in 0..m.rows {
        let row: Vec<String> = (0..m.cols).map(|c| m.at(r, c).to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

fn run_verify(
    n_max: usize,
    chars: &[u64],
    cap: usize,
    output: &Output,
) -> Result<(String, bool), Box<dyn std::error::Error>> {
    let mut reports = Vec::new();
    let mut all_ok = true;
    for n in 1..=n_max {
        for b in 0..n {
            let a = n - b;
            let shape = HookShape::new(a, b)?;
            if n <= cap {
                for &c in chars {
                    let field = FieldSpec::from_characteristic(c)?;
                    let rep = verify_presentation(shape, field, cap)?;
                    all_ok &= rep.all_pass();
                    reports.push(rep);
                    if a % 2 == 1 && b % 2 == 0 && c != 2 {
                        let rep = verify_endomorphism(shape, field, cap)?;
                        all_ok &= rep.all_pass();
                        reports.push(rep);
                    }
                }
            }
            // the domino-subspace suite stays cheap out to n = 13
            if b % 2 == 0 && n % 2 == 1 && n <= 13 {
                let rep = verify_domino_actions(shape, 13)?;
                all_ok &= rep.all_pass();
                reports.push(rep);
            }
            if n <= 9 {
                let rep = verify_cross_field(shape, &[3, 5, 7], 9)?;
                all_ok &= rep.all_pass();
                reports.push(rep);
            }
        }
    }
    let text = match output.format {
        Format::Json | Format::Csv => json!({
            "pass": all_ok,
            "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        })
        .to_string(),
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&r.to_table());
            }
            s.push_str(if all_ok {
                "all suites pass\n"
            } else {
                "FAILURES PRESENT\n"
            });
            s
        }
    };
    Ok((text, all_ok))
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>, String> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: usize = lo.parse().map_err(|_| format!("bad range {s:?}"))?;
        let hi: usize = hi.parse().map_err(|_| format!("bad range {s:?}"))?;
        Ok(lo..=hi)
    } else {
        let v: usize = s.parse().map_err(|_| format!("bad range {s:?}"))?;
        Ok(v..=v)
    }
}

fn run_table(
    arange: std::ops::RangeInclusive<usize>,
    brange: std::ops::RangeInclusive<usize>,
    characteristic: u64,
    output: &Output,
) -> Result<String, Box<dyn std::error::Error>> {
    // column schema is fixed: a,b,n,char,decomposable,rule
    let mut rows = Vec::new();
    for a in arange.clone() {
        for b in brange.clone() {
            if a < 1 {
                continue;
            }
            let v = decide(a, b, characteristic)?;
            rows.push(v);
        }
    }
    Ok(match output.format {
        Format::Json => json!(rows
            .iter()
            .map(|v| json!({
                "a": v.a, "b": v.b, "n": v.a + v.b, "char": v.characteristic,
                "decomposable": v.decomposable, "rule": v.rule,
            }))
            .collect::<Vec<_>>())
        .to_string(),
        Format::Csv | Format::Text => {
            let mut s = String::from("a,b,n,char,decomposable,rule\n");
            for v in rows {
                s.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    v.a,
                    v.b,
                    v.a + v.b,
                    v.characteristic,
                    v.decomposable,
                    v.rule
                ));
            }
            s
        }
    })
}

fn emit(output: &Output, text: &str) -> std::io::Result<()> {
    match &output.out {
        Some(path) => fs::write(path, text),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

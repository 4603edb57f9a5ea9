//! `vci`: batch front end for point-set analysis in P¹×P¹.
//!
//! Exit codes: 0 success, 1 negative verdict or rejected certificate,
//! 2 bad input, 3 undecided.

mod census;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;
use vci_core::{
    analyze, buchberger, classify_ferrers, classify_few_rulings, configuration_of,
    construct_balanced_vci, construct_set_theoretic, hilbert_value, refute_cross, refute_gcd,
    refute_number_theory, saturate_by_irrelevant, verdict_to_json, verification_to_json,
    verify_vci, Field, GroebnerBasis, Ideal, JsonDoc, MonomialOrder, PointSet, VciCertificate,
    VciVerdict, VerifyMode,
};

#[derive(Parser)]
#[command(
    name = "vci",
    version,
    about = "Virtual complete intersections of points in P1 x P1"
)]
struct Cli {
    /// Coefficient field: qq or fp:<prime>. Overrides the field declared in
    /// input documents; documents without one are read over QQ.
    #[arg(long, global = true)]
    field: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full decision pipeline on a point set.
    Analyze { points: PathBuf },
    /// Checks a certificate against a point set.
    Certify {
        points: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        /// fast, saturation or both
        #[arg(long, default_value = "fast")]
        mode: String,
    },
    /// Builds a pair of forms for a balanced set, or a set-theoretic pair
    /// with multiplicities for any set.
    Construct {
        points: PathBuf,
        #[arg(long)]
        set_theoretic: bool,
    },
    /// Saturates an ideal by the irrelevant ideal.
    Saturate { ideal: PathBuf },
    /// Reduced Gröbner basis in grevlex x0 > x1 > y0 > y1.
    Groebner { ideal: PathBuf },
    /// dim (S/I)_(a,b).
    Hilbert {
        ideal: PathBuf,
        /// a,b
        #[arg(long)]
        bidegree: String,
    },
    /// Verdict from the classification theorems and refuters alone.
    Classify { points: PathBuf },
    /// Tabulates verdicts for every configuration on a small grid.
    Census {
        /// RxC
        #[arg(long, default_value = "3x3")]
        max_grid: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Failure that maps to exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<ExitCode, InputError>;

const NEGATIVE: u8 = 1;
const UNDECIDED: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let field = cli.field.as_deref().map(Field::parse).transpose()?;
    match &cli.command {
        Command::Analyze { points } => {
            let x: PointSet = read_doc(points, field)?;
            report_verdict(&analyze(&x), &x)
        }
        Command::Certify { points, cert, mode } => {
            let x: PointSet = read_doc(points, field)?;
            let cert: VciCertificate = read_doc(cert, field)?;
            let mode = VerifyMode::parse(mode)
                .ok_or_else(|| InputError(format!("unknown mode {mode:?}")))?;
            if cert.f.field() != x.field() {
                return Err(InputError(format!(
                    "certificate over {} but points over {}",
                    cert.f.field(),
                    x.field()
                )));
            }
            let v = verify_vci(&x, &cert.f, &cert.g, mode);
            print_json(&verification_to_json(&v));
            for line in &v.trace {
                eprintln!("{line}");
            }
            eprintln!("{}", if v.accepted { "accepted" } else { "rejected" });
            Ok(if v.accepted {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(NEGATIVE)
            })
        }
        Command::Construct {
            points,
            set_theoretic,
        } => {
            let x: PointSet = read_doc(points, field)?;
            if *set_theoretic {
                let st = construct_set_theoretic(&x);
                print_json(&st.to_json());
                eprintln!("f = {}\ng = {}", st.f, st.g);
                for (p, k) in &st.multiplicities.0 {
                    eprintln!("{p}: multiplicity {k}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            match construct_balanced_vci(&x) {
                Ok(cert) => {
                    print_json(&cert.to_json());
                    eprintln!("f = {}\ng = {}", cert.f, cert.g);
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("no balanced construction: {e}");
                    Ok(ExitCode::from(NEGATIVE))
                }
            }
        }
        Command::Saturate { ideal } => {
            let i: Ideal = read_doc(ideal, field)?;
            print_json(&saturate_by_irrelevant(&i).to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Groebner { ideal } => {
            let i: Ideal = read_doc(ideal, field)?;
            let gb: GroebnerBasis = buchberger(&i, MonomialOrder::GradedReverseLex);
            print_json(&gb.to_json());
            for g in &gb.basis {
                eprintln!("{g}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hilbert { ideal, bidegree } => {
            let i: Ideal = read_doc(ideal, field)?;
            let (a, b) = parse_pair(bidegree, ',')?;
            println!("{}", hilbert_value(&i, (a, b)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { points } => {
            let x: PointSet = read_doc(points, field)?;
            report_verdict(&classify(&x), &x)
        }
        Command::Census { max_grid, seed } => {
            let (rows, cols) = parse_pair(max_grid, 'x')?;
            if rows == 0 || cols == 0 || rows * cols > 16 {
                return Err(InputError(format!(
                    "grid {max_grid} must have 1 to 16 cells"
                )));
            }
            let field = match field {
                Some(f @ Field::Prime(_)) => f,
                _ => Field::Prime(vci_core::DEFAULT_PRIME),
            };
            census::run(field, rows as usize, cols as usize, *seed)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Classification theorems first, then the refuters; no search.
fn classify(x: &PointSet) -> VciVerdict {
    if let Ok(v) = classify_few_rulings(x) {
        return v;
    }
    if configuration_of(x).is_ferrers() {
        if let Ok(v) = classify_ferrers(x) {
            return v;
        }
    }
    if let Some(r) = refute_cross(x).or_else(|| refute_gcd(x)) {
        return VciVerdict::NotVci(r);
    }
    if let Ok(Some(r)) = refute_number_theory(x) {
        return VciVerdict::NotVci(r);
    }
    VciVerdict::Undecided("no classification theorem or refuter applies".into())
}

fn report_verdict(v: &VciVerdict, x: &PointSet) -> Outcome {
    print_json(&verdict_to_json(v, x.field()));
    eprintln!("{v}");
    if let VciVerdict::Vci(c) = v {
        eprintln!("Koszul complex: {}", c.koszul_twists());
    }
    Ok(match v {
        VciVerdict::Vci(_) => ExitCode::SUCCESS,
        VciVerdict::NotVci(_) | VciVerdict::CoordinateDependent(_) => ExitCode::from(NEGATIVE),
        VciVerdict::Undecided(_) => ExitCode::from(UNDECIDED),
    })
}

fn read_doc<T: JsonDoc>(path: &Path, field: Option<Field>) -> Result<T, InputError> {
    let text =
        fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let mut v: Value =
        serde_json::from_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let obj = v
        .as_object_mut()
        .ok_or_else(|| InputError(format!("{}: expected a JSON object", path.display())))?;
    match field {
        Some(f) => {
            obj.insert("field".into(), Value::String(f.to_string()));
        }
        None => {
            obj.entry("field")
                .or_insert_with(|| Value::String(Field::Rationals.to_string()));
        }
    }
    T::from_json(&v).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn parse_pair(s: &str, sep: char) -> Result<(u32, u32), InputError> {
    let bad = || {
        InputError(format!(
            "expected two numbers separated by {sep:?}, got {s:?}"
        ))
    };
    let (a, b) = s.split_once(sep).ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    );
}

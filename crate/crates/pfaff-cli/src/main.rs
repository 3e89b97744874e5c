//! Command-line front end for the pfaffian-representation toolkit.
//!
//! Every verb parses its inputs, delegates the computation to pfaff-core,
//! and emits a deterministic key-value report with exact scalars (rationals
//! as `p/q`, prime-field residues as plain integers). No mathematical logic
//! lives in this crate.
//!
//! Exit codes: 0 success, 2 parse or input error, 3 verification failure,
//! 4 budget exhausted.

mod commands;

use clap::{Args, Parser, Subcommand};
use pfaff_core::{Error, FieldSpec, Scalar};
use std::path::PathBuf;
use std::process::ExitCode;

// ---- Argument surface ----

#[derive(Parser)]
#[command(
    name = "pfaff",
    version,
    about = "Exact pfaffian and determinantal representations of plane curves"
)]
struct Cli {
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Pfaffian calculus on skew polynomial matrix files.
    #[command(subcommand)]
    Pf(PfCmd),
    /// Determinantal representation files.
    #[command(subcommand)]
    Det(DetCmd),
    /// Constructions that produce pfaffian representations.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// The Weierstrass cubic family.
    #[command(subcommand)]
    Cubic(CubicCmd),
    /// The genus-3 quartic canonical form.
    #[command(subcommand)]
    Quartic(QuarticCmd),
    /// Curve-level probes.
    #[command(subcommand)]
    Curve(CurveCmd),
}

#[derive(Subcommand)]
enum PfCmd {
    /// Compute the pfaffian of a skew matrix file.
    Compute { matrix: PathBuf },
    /// Compute the pfaffian adjoint; the report is a skew matrix file.
    Adjoint { matrix: PathBuf },
    /// Re-verify a pfaffian representation file and report its scale.
    Verify { rep: PathBuf },
}

#[derive(Subcommand)]
enum DetCmd {
    /// Re-verify a determinantal representation file and report its scale.
    Verify { rep: PathBuf },
    /// Print the adjugate of the pencil of a determinantal representation.
    Adjugate { rep: PathBuf },
    /// Lift a determinantal representation to its decomposable pfaffian
    /// representation; the report is a pfaffian representation file.
    Lift { rep: PathBuf },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Divide the pfaffian adjoint of a section matrix B by F^(d-2); the
    /// report is a pfaffian representation file.
    #[command(name = "from-B", alias = "from-b")]
    FromB {
        /// Skew matrix file holding B (size 2d, entry degree d-1).
        matrix: PathBuf,
        /// The curve F as a homogeneous polynomial in x0, x1, x2.
        #[arg(long, value_name = "POLY")]
        curve: String,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// Coefficient of x0*x1^2 in the Weierstrass cubic.
    #[arg(long, value_name = "SCALAR")]
    alpha: String,
    /// Coefficient of x1^3 in the Weierstrass cubic.
    #[arg(long, value_name = "SCALAR")]
    beta: String,
    /// Scalar field: QQ or Fp:<p>.
    #[arg(long, default_value = "QQ", value_parser = FieldSpec::parse)]
    field: FieldSpec,
}

#[derive(Subcommand)]
enum CubicCmd {
    /// Report the curve, discriminant, and smoothness of a family member.
    Family {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Construct the representation based at an affine point (s, l); the
    /// report is a representation file.
    Point {
        #[command(flatten)]
        family: FamilyArgs,
        /// s-coordinate of the base point.
        #[arg(long, value_name = "SCALAR")]
        s: String,
        /// l-coordinate of the base point.
        #[arg(long, value_name = "SCALAR")]
        l: String,
        /// Emit the 3x3 determinantal representation instead of the 6x6
        /// pfaffian one.
        #[arg(long)]
        determinantal: bool,
    },
    /// List the affine points of a family member over a prime field.
    Enumerate {
        /// Coefficient of x0*x1^2 in the Weierstrass cubic.
        #[arg(long, value_name = "SCALAR")]
        alpha: String,
        /// Coefficient of x1^3 in the Weierstrass cubic.
        #[arg(long, value_name = "SCALAR")]
        beta: String,
        /// The prime p of the field.
        #[arg(long)]
        prime: u64,
    },
}

#[derive(Subcommand)]
enum QuarticCmd {
    /// Print the seven derived linear relations of the canonical form.
    Relations,
    /// Print the three residual equations of the canonical form.
    Residuals,
    /// Apply the group action from a parameter file with an action line;
    /// the report is a parameter file.
    Act {
        params: PathBuf,
        /// Scalar field of the file contents: QQ or Fp:<p>.
        #[arg(long, default_value = "QQ", value_parser = FieldSpec::parse)]
        field: FieldSpec,
    },
    /// Evaluate the two action invariants of a parameter file.
    Invariants {
        params: PathBuf,
        /// Scalar field of the file contents: QQ or Fp:<p>.
        #[arg(long, default_value = "QQ", value_parser = FieldSpec::parse)]
        field: FieldSpec,
    },
    /// Search for canonical-form solutions over a prime field.
    Solve {
        /// The prime p of the field (p > 3).
        #[arg(long)]
        prime: u64,
        /// Seed of the deterministic search.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum number of candidate evaluations.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// Stop after this many solutions.
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// Estimate the moduli dimension from sampled solutions.
    Dimension {
        /// The prime p of the field (p > 3).
        #[arg(long)]
        prime: u64,
        /// Number of solutions to sample (at least 5).
        #[arg(long, default_value_t = 6)]
        samples: usize,
        /// Seed of the deterministic search.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum number of candidate evaluations.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
}

#[derive(Subcommand)]
enum CurveCmd {
    /// Scan for prime-field singular points of a curve.
    Smooth {
        /// The curve F as a homogeneous polynomial in x0, x1, x2.
        #[arg(long, value_name = "POLY")]
        curve: String,
        /// Scalar field of the coefficients: QQ or Fp:<p>.
        #[arg(long, default_value = "QQ", value_parser = FieldSpec::parse)]
        field: FieldSpec,
        /// Primes to scan, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        /// Allow primes up to the large-scan cap.
        #[arg(long)]
        allow_large: bool,
    },
}

// ---- Dispatch ----

fn run(cli: &Cli) -> Result<String, Error> {
    let scalar = |text: &str, field: FieldSpec| Scalar::parse(text, field);
    match &cli.verb {
        Verb::Pf(PfCmd::Compute { matrix }) => commands::pf_compute(matrix),
        Verb::Pf(PfCmd::Adjoint { matrix }) => commands::pf_adjoint(matrix),
        Verb::Pf(PfCmd::Verify { rep }) => commands::pf_verify(rep),
        Verb::Det(DetCmd::Verify { rep }) => commands::det_verify(rep),
        Verb::Det(DetCmd::Adjugate { rep }) => commands::det_adjugate(rep),
        Verb::Det(DetCmd::Lift { rep }) => commands::det_lift(rep),
        Verb::Construct(ConstructCmd::FromB { matrix, curve }) => {
            commands::construct_from_b(matrix, curve)
        }
        Verb::Cubic(CubicCmd::Family { family }) => {
            let alpha = scalar(&family.alpha, family.field)?;
            let beta = scalar(&family.beta, family.field)?;
            commands::cubic_family(alpha, beta)
        }
        Verb::Cubic(CubicCmd::Point {
            family,
            s,
            l,
            determinantal,
        }) => {
            let alpha = scalar(&family.alpha, family.field)?;
            let beta = scalar(&family.beta, family.field)?;
            let s = scalar(s, family.field)?;
            let l = scalar(l, family.field)?;
            commands::cubic_point(alpha, beta, s, l, *determinantal)
        }
        Verb::Cubic(CubicCmd::Enumerate { alpha, beta, prime }) => {
            let field = FieldSpec::parse(&format!("Fp:{prime}"))?;
            let alpha = scalar(alpha, field)?;
            let beta = scalar(beta, field)?;
            commands::cubic_enumerate(alpha, beta, *prime)
        }
        Verb::Quartic(QuarticCmd::Relations) => commands::quartic_relations(),
        Verb::Quartic(QuarticCmd::Residuals) => commands::quartic_residuals(),
        Verb::Quartic(QuarticCmd::Act { params, field }) => commands::quartic_act(params, *field),
        Verb::Quartic(QuarticCmd::Invariants { params, field }) => {
            commands::quartic_invariants(params, *field)
        }
        Verb::Quartic(QuarticCmd::Solve {
            prime,
            seed,
            budget,
            max,
        }) => commands::quartic_solve(*prime, *seed, *budget, *max),
        Verb::Quartic(QuarticCmd::Dimension {
            prime,
            samples,
            seed,
            budget,
        }) => commands::quartic_dimension(*prime, *samples, *seed, *budget),
        Verb::Curve(CurveCmd::Smooth {
            curve,
            field,
            primes,
            allow_large,
        }) => commands::curve_smooth(curve, *field, primes, *allow_large),
    }
}

/// Exit code for a core error: parse and input problems are 2, exhausted
/// search budgets are 4, and every failed verification or validation is 3.
fn exit_class(e: &Error) -> (u8, &'static str) {
    match e {
        Error::Parse { .. } | Error::Io(_) => (2, "parse"),
        Error::NoSolutionFound { .. } | Error::PrimeTooLarge(_) => (4, "budget"),
        _ => (3, "verify"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &report) {
                    eprintln!("error: io: {e}");
                    return ExitCode::from(2);
                }
            } else {
                print!("{report}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let (code, kind) = exit_class(&e);
            eprintln!("error: {kind}: {e}");
            ExitCode::from(code)
        }
    }
}

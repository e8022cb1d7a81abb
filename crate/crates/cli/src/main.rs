//! `twk3`: JSON in, JSON out.

mod commands;

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use twisted_k3::{ErrorKind, SurfaceKind};

use commands::Failure;

#[derive(Parser)]
#[command(name = "twk3", version, about = "Exact lattice computations for twisted sheaves on K3 surfaces")]
struct Cli {
    /// Indent the output document.
    #[arg(long, global = true)]
    pretty: bool,
    /// Surface whose √td enters Chern-character conversions.
    #[arg(long, global = true, value_enum, default_value_t = Surface::K3)]
    surface: Surface,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Surface {
    K3,
    Abelian,
}

/// Every subcommand reads one JSON document from a file, or from stdin for `-`.
#[derive(Subcommand)]
enum Command {
    /// Mukai pairing of two vectors.
    Pairing { input: String },
    /// Multiplication by e^B.
    Twist { input: String },
    /// Mukai vector from rank and Chern classes.
    Chern { input: String },
    /// e^{ξ/r} v together with its class mod rk.
    Untwist { input: String },
    /// Primitive part and multiplicity of an integral vector.
    Primitive { input: String },
    /// −(r−1)(w,w) mod 2r.
    C2Residue { input: String },
    /// Defect of the Mukai square along an extension.
    ExtensionDefect { input: String },
    /// ⟨v²⟩ ≥ −2l².
    Bogomolov { input: String },
    /// Compare reduced Hilbert polynomials.
    StabilityCompare { input: String },
    /// Order of the Brauer class of ξ/r.
    BrauerOrder { input: String },
    /// Whether two B-field lifts give the same Brauer class.
    BrauerEquiv { input: String },
    /// Certified comparison square for two equivalent lifts.
    TwistSquare { input: String },
    /// Whether v is a Mukai vector for the given B-field.
    MukaiCheck { input: String },
    /// Wall bound (l²/4)(2l² + ⟨v²⟩).
    WallBound { input: String },
    /// Whether a polarization lies on no wall.
    General { input: String },
    /// Walls meeting a segment of polarizations.
    WallsBetween { input: String },
    /// Whether two polarizations share a chamber.
    SameChamber { input: String },
    /// Sufficient criterion for generality.
    StrongGeneral { input: String },
    /// Numerical invariants of the moduli space.
    Moduli { input: String },
    /// v^⊥ or v^⊥/ℤv.
    Beauville { input: String },
    /// Beauville lattice of the algebraic part.
    AlgebraicBeauville { input: String },
    /// Saturated orthogonal complement.
    Complement { input: String },
    /// Invariant factors of the discriminant group.
    Discriminant { input: String },
    /// Signature of a lattice.
    Signature { input: String },
    /// Quotient map v^⊥ → v^⊥/ℤv for isotropic v.
    Theta { input: String },
    /// Composition of certified isometries.
    Compose { input: String },
    /// Adjunction identity for a pair of isometries.
    AdjointCheck { input: String },
    /// Standard lattices and their invariants.
    Lattice { input: String },
}

impl Command {
    fn split(&self) -> (&'static str, &str) {
        use Command::*;
        match self {
            Pairing { input } => ("pairing", input),
            Twist { input } => ("twist", input),
            Chern { input } => ("chern", input),
            Untwist { input } => ("untwist", input),
            Primitive { input } => ("primitive", input),
            C2Residue { input } => ("c2-residue", input),
            ExtensionDefect { input } => ("extension-defect", input),
            Bogomolov { input } => ("bogomolov", input),
            StabilityCompare { input } => ("stability-compare", input),
            BrauerOrder { input } => ("brauer-order", input),
            BrauerEquiv { input } => ("brauer-equiv", input),
            TwistSquare { input } => ("twist-square", input),
            MukaiCheck { input } => ("mukai-check", input),
            WallBound { input } => ("wall-bound", input),
            General { input } => ("general", input),
            WallsBetween { input } => ("walls-between", input),
            SameChamber { input } => ("same-chamber", input),
            StrongGeneral { input } => ("strong-general", input),
            Moduli { input } => ("moduli", input),
            Beauville { input } => ("beauville", input),
            AlgebraicBeauville { input } => ("algebraic-beauville", input),
            Complement { input } => ("complement", input),
            Discriminant { input } => ("discriminant", input),
            Signature { input } => ("signature", input),
            Theta { input } => ("theta", input),
            Compose { input } => ("compose", input),
            AdjointCheck { input } => ("adjoint-check", input),
            Lattice { input } => ("lattice", input),
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Io(format!("{path}: {e}")))?;
    Ok(text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let surface = match cli.surface {
        Surface::K3 => SurfaceKind::K3,
        Surface::Abelian => SurfaceKind::Abelian,
    };
    let (name, path) = cli.command.split();
    let result = read_input(path).and_then(|text| commands::run(name, &text, surface));
    match result {
        Ok(doc) => {
            let out = if cli.pretty {
                serde_json::to_string_pretty(&doc)
            } else {
                serde_json::to_string(&doc)
            };
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{}", out.expect("JSON values always serialize")) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(_) => ExitCode::from(2),
            }
        }
        Err(f) => {
            let (status, kind, code, message) = match &f {
                Failure::Io(m) => (2, "validation", "io", m.clone()),
                Failure::Json(m) => (2, "validation", "malformed_json", m.clone()),
                Failure::Core(e) => match e.kind() {
                    ErrorKind::Validation => (2, "validation", e.code(), e.to_string()),
                    ErrorKind::Precondition => (3, "precondition", e.code(), e.to_string()),
                },
            };
            let doc = json!({"error": {"kind": kind, "code": code, "message": message}});
            eprintln!("{doc}");
            ExitCode::from(status)
        }
    }
}

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use knotsig::matrix::{signature_exact, IntMatrix};
use knotsig::milnor::mil_enum;
use knotsig::obstruction::obstruction_group;
use knotsig::pipeline::{analyze, report_render, AnalysisRequest, Format, Target};
use knotsig::poly::{alexander_check, delta_to_p, p_to_delta};
use knotsig::realroots::{irr_r_factors, rho_delta, rho_p};
use knotsig::seifert::{
    alexander_of_form, form_to_pair, milnor_signatures, unimodular_t, validate_form,
};
use knotsig::zfactor::{factor_z, standing_assumptions};
use knotsig::{Error, IntPoly, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "knotsig", version, about = "Signatures of high-dimensional knots with square-free Alexander polynomial")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutFormat,

    /// Seed for the randomized subroutines; results do not depend on it.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a signature (or Milnor assignment) is realizable.
    Analyze {
        #[arg(long)]
        delta: IntPoly,
        #[arg(long)]
        m: u64,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "tau", required_unless_present = "tau")]
        signature: Option<i64>,
        /// Comma-separated ±2 values, one per element of Irr_R(P).
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        tau: Option<Vec<i64>>,
    },
    /// Convert Δ to P, or P back to Δ.
    Transform(DeltaOrP),
    /// Check the three conditions on an Alexander polynomial.
    Check {
        #[arg(long)]
        delta: IntPoly,
    },
    /// Count roots on the unit circle.
    Rho(DeltaOrP),
    /// Factor an integer polynomial.
    Factor {
        #[arg(long)]
        poly: IntPoly,
    },
    /// The Π table and the obstruction group of Δ.
    Group {
        #[arg(long)]
        delta: IntPoly,
    },
    /// Enumerate the Milnor assignments with total signature s.
    Milnor {
        #[arg(long)]
        delta: IntPoly,
        #[arg(long, allow_hyphen_values = true)]
        signature: i64,
    },
    /// Operations on a Seifert form given as rows, e.g. [[0,2],[-1,0]].
    Seifert {
        #[arg(long)]
        matrix: IntMatrix,
        #[arg(long, value_enum)]
        op: SeifertOp,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct DeltaOrP {
    #[arg(long)]
    delta: Option<IntPoly>,
    #[arg(long)]
    p: Option<IntPoly>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeifertOp {
    Validate,
    Alexander,
    Signature,
    ToPair,
    Milnor,
    Isometry,
}

/// A command's result, in both renderings.
struct Output {
    text: String,
    json: Value,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let seed = cli.seed;
    match &cli.command {
        Command::Analyze {
            delta,
            m,
            signature,
            tau,
        } => {
            let target = match (signature, tau) {
                (Some(s), _) => Target::Signature(*s),
                (None, Some(t)) => Target::Tau(t.clone()),
                (None, None) => unreachable!("clap requires one of them"),
            };
            let req = AnalysisRequest {
                delta: delta.clone(),
                m: *m,
                target,
                seed,
            };
            let report = analyze(&req)?;
            let json = serde_json::to_value(&report).expect("report serializes");
            Ok(Output::new(report_render(&report, Format::Text), json))
        }
        Command::Transform(DeltaOrP { delta: Some(d), .. }) => {
            let p = delta_to_p(d)?;
            Ok(Output::new(p.to_string(), json!({ "delta": d, "p": p })))
        }
        Command::Transform(DeltaOrP { p: Some(p), .. }) => {
            let d = p_to_delta(p)?;
            Ok(Output::new(d.to_string(), json!({ "p": p, "delta": d })))
        }
        Command::Check { delta } => {
            let c = alexander_check(delta)?;
            let mut text = if c.all_hold() {
                "conditions (1)-(3) hold".to_string()
            } else {
                c.violations().join("\n")
            };
            if let Some(r) = &c.square_root_witness {
                text.push_str(&format!("\nΔ(-1) = {} = {r}^2", c.delta_minus_one));
            }
            Ok(Output::new(text, json!({ "all_hold": c.all_hold(), "conditions": c })))
        }
        Command::Rho(DeltaOrP { delta: Some(d), .. }) => {
            let rho = rho_delta(d)?;
            Ok(Output::new(format!("ρ = {rho}"), json!({ "delta": d, "rho": rho })))
        }
        Command::Rho(DeltaOrP { p: Some(p), .. }) => {
            let rho = rho_p(p)?;
            let factors = irr_r_factors(p)?;
            let mut text = format!("ρ = {rho}");
            for f in &factors {
                text.push_str(&format!("\n  {f}"));
            }
            Ok(Output::new(text, json!({ "p": p, "rho": rho, "irr_r": factors })))
        }
        Command::Transform(_) | Command::Rho(_) => unreachable!("clap enforces the group"),
        Command::Factor { poly } => {
            let fac = factor_z(poly, seed)?;
            let mut text = format!("content {}", fac.content);
            let mut list = Vec::new();
            for (f, mult) in &fac.factors {
                text.push_str(&format!("\n  ({f})^{mult}"));
                list.push(json!({ "factor": f, "multiplicity": mult }));
            }
            Ok(Output::new(
                text,
                json!({
                    "content": fac.content.to_string(),
                    "factors": list,
                    "certificates": fac.certificates,
                }),
            ))
        }
        Command::Group { delta } => {
            let p = delta_to_p(delta)?;
            let set = standing_assumptions(&p, seed)?;
            let (group, table) = obstruction_group(&set, seed)?;
            let mut text = String::new();
            for (i, f) in set.factors.iter().enumerate() {
                text.push_str(&format!("f{i} = {f}\n"));
            }
            for e in &table {
                let primes: Vec<String> = e.primes.iter().map(u64::to_string).collect();
                text.push_str(&format!(
                    "Π(f{}, f{}) = {{{}}}\n",
                    e.pair.0,
                    e.pair.1,
                    primes.join(", ")
                ));
            }
            text.push_str(&format!(
                "G_P: rank {}, components {:?}",
                group.rank, group.components
            ));
            Ok(Output::new(
                text,
                json!({ "factors": set.factors, "pi_table": table, "group": group }),
            ))
        }
        Command::Milnor { delta, signature } => {
            let p = delta_to_p(delta)?;
            let fam = mil_enum(&p, *signature)?;
            let mut text = format!(
                "ρ = {}, s = {}: {} assignment(s)",
                fam.rho,
                fam.s,
                fam.assignments.len()
            );
            for a in &fam.assignments {
                let vals: Vec<String> = a.values.iter().map(|v| format!("{v:+}")).collect();
                text.push_str(&format!("\n  [{}]", vals.join(", ")));
            }
            Ok(Output::new(text, serde_json::to_value(&fam).expect("serializes")))
        }
        Command::Seifert { matrix, op } => seifert(matrix, *op),
    }
}

fn seifert(a: &IntMatrix, op: SeifertOp) -> Result<Output, Error> {
    match op {
        SeifertOp::Validate => {
            let v = validate_form(a);
            let text = if v.valid {
                "valid Seifert form".to_string()
            } else {
                format!("invalid: {}", v.diagnostics.join("; "))
            };
            Ok(Output::new(text, serde_json::to_value(&v).expect("serializes")))
        }
        SeifertOp::Alexander => {
            let d = alexander_of_form(a)?;
            Ok(Output::new(d.to_string(), json!({ "alexander": d })))
        }
        SeifertOp::Signature => {
            let s = if a.is_symmetric() {
                a.clone()
            } else {
                a.add(&a.transpose())?
            };
            let sig = signature_exact(&s)?;
            Ok(Output::new(
                format!("signature {sig}"),
                json!({ "matrix": s, "signature": sig }),
            ))
        }
        SeifertOp::ToPair => {
            let pair = form_to_pair(a)?;
            Ok(Output::new(
                format!("S = {}\na = {}", pair.s, pair.a),
                serde_json::to_value(&pair).expect("serializes"),
            ))
        }
        SeifertOp::Milnor => {
            let pair = form_to_pair(a)?;
            let mil = milnor_signatures(&pair.s, &pair.a)?;
            let mut text = String::new();
            for (f, v) in mil.factors.iter().zip(&mil.values) {
                text.push_str(&format!("{f}: {v:+}\n"));
            }
            text.push_str(&format!("total {} = signature {}", mil.total, mil.signature));
            if mil.zero_value {
                text.push_str("\nwarning: a restriction has signature 0");
            }
            Ok(Output::new(text, serde_json::to_value(&mil).expect("serializes")))
        }
        SeifertOp::Isometry => {
            let t = unimodular_t(a)?;
            let cp = t.charpoly()?;
            Ok(Output::new(
                format!("t = {t}\ncharpoly(t) = {cp}"),
                json!({ "t": t, "charpoly": cp }),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                OutFormat::Text => out.text.trim_end().to_string(),
                OutFormat::Json => serde_json::to_string_pretty(&out.json).expect("serializes"),
            };
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout(), "{body}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_budget() {
                ExitCode::from(3)
            } else if matches!(e, Error::Parse(_)) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

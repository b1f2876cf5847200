//! Command-line front end for the `schubert-core` library.
//!
//! Every command prints exactly one JSON document. Exit codes: 0 on success
//! (a `false` verdict is still success), 1 when a fixture replay finds a
//! mismatch, 2 on invalid input.

pub mod fixtures;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use schubert_core::{
    connectivity, lr_oracle, multiply_all, nonzero_pair, nonzero_special_product, omega_class,
    multiply_mp, BiClassJson, BigInt, BoxedPartition, CheckError, ClassJson, Criterion,
    MultiProjClass, MultiProjJson, PartitionBox, PartitionError, ProductSpace, SchubertClass,
    SchubertError,
};

#[derive(Debug, Parser)]
#[command(name = "schubert", version, about = "Schubert calculus and connectedness criteria")]
pub struct Cli {
    /// Also write the JSON result to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Product of two or more Schubert classes, or with --space of
    /// monomials H^m on a product of projective spaces.
    Mult {
        #[arg(long = "box", required_unless_present = "space", conflicts_with = "space")]
        frame: Option<String>,
        #[arg(long)]
        space: Option<String>,
        #[arg(required = true, num_args = 2..)]
        partitions: Vec<String>,
    },
    /// Product of a Schubert class with a special class σ_m.
    Pieri {
        #[arg(long = "box")]
        frame: String,
        partition: String,
        m: u32,
    },
    /// Product of two Schubert classes by Littlewood-Richardson tableaux.
    LrOracle {
        #[arg(long = "box")]
        frame: String,
        lambda: String,
        mu: String,
    },
    /// The class σ_λ* on the dual Grassmannian.
    Dual {
        #[arg(long = "box")]
        frame: String,
        partition: String,
    },
    /// Conjugate partition.
    Conj {
        #[arg(long = "box")]
        frame: String,
        partition: String,
    },
    /// Complement in the box.
    Complement {
        #[arg(long = "box")]
        frame: String,
        partition: String,
    },
    /// Enlargements μ^(j), for one descent or all of them.
    MuJ {
        #[arg(long = "box")]
        frame: String,
        partition: String,
        #[arg(long)]
        j: Option<usize>,
    },
    /// δ(μ) and its per-descent terms.
    Delta {
        #[arg(long = "box")]
        frame: String,
        partition: String,
    },
    /// Whether σ_λ·σ_μ ≠ 0, or with --ell whether σ_λ̄·σ_ℓ0⋯σ_ℓr ≠ 0.
    Nonzero {
        #[arg(long = "box")]
        frame: String,
        #[arg(long)]
        ell: Option<String>,
        #[arg(required = true, num_args = 1..=2)]
        partitions: Vec<String>,
    },
    /// Class of Ω_M in the product of two copies of the Grassmannian.
    Omega {
        #[arg(long = "box")]
        frame: String,
    },
    /// Evaluate one criterion on a JSON input file.
    Check {
        #[arg(long)]
        criterion: Option<String>,
        #[arg(long)]
        inputs: PathBuf,
    },
    /// Replay the stored fixtures and compare with their expectations.
    Fixtures {
        #[arg(long, default_value = "fixtures")]
        dir: PathBuf,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Schubert(#[from] SchubertError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error("{0}")]
    Input(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Partition(_) => "partition",
            CliError::Schubert(_) => "class",
            CliError::Check(CheckError::RouteDisagreement { .. }) => "route_disagreement",
            CliError::Check(_) => "check",
            CliError::Input(_) => "input",
            CliError::Io { .. } => "io",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": {"kind": self.kind(), "message": self.to_string()}})
    }
}

/// Result of one invocation: exit code and the JSON text for stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: 0,
                    stdout: e.to_string(),
                };
            }
            // the first paragraph of clap's rendering, without the usage tail
            let detail = e.to_string();
            let message = detail
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(str::trim)
                .collect::<Vec<_>>()
                .join(" ");
            let message = message.trim_start_matches("error: ").to_string();
            return failure(&CliError::Usage(message));
        }
    };
    let out = cli.out.clone();
    match execute(cli.command) {
        Ok((code, value)) => {
            let text = render(&value);
            if let Some(path) = out {
                if let Err(e) = fs::write(&path, format!("{text}\n")) {
                    return failure(&CliError::Io {
                        path: path.display().to_string(),
                        message: e.to_string(),
                    });
                }
            }
            Outcome { code, stdout: text }
        }
        Err(e) => failure(&e),
    }
}

fn failure(e: &CliError) -> Outcome {
    Outcome {
        code: 2,
        stdout: render(&e.to_json()),
    }
}

/// Compact JSON; object keys keep their declared or sorted order, so equal
/// inputs give byte-identical text.
pub fn render<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("values serialize")
}

fn frame_of(s: &str) -> Result<PartitionBox, CliError> {
    Ok(s.parse::<PartitionBox>()?)
}

fn partition(frame: PartitionBox, s: &str) -> Result<BoxedPartition, CliError> {
    Ok(BoxedPartition::parse(frame, s)?)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("values serialize")
}

fn execute(command: Command) -> Result<(i32, Value), CliError> {
    let value = match command {
        Command::Mult {
            frame: None,
            space: Some(space),
            partitions,
        } => {
            let sp = ProductSpace::new(parse_list(&space)?).map_err(CheckError::from)?;
            let mut acc = MultiProjClass::unit(&sp);
            for m in &partitions {
                let factor = MultiProjClass::monomial(sp.clone(), parse_list(m)?, BigInt::from(1))
                    .map_err(CheckError::from)?;
                acc = multiply_mp(&acc, &factor).map_err(CheckError::from)?;
            }
            to_value(&MultiProjJson::from(&acc))
        }
        Command::Mult {
            frame, partitions, ..
        } => {
            let f = frame_of(frame.as_deref().unwrap_or_default())?;
            let classes = partitions
                .iter()
                .map(|s| partition(f, s).map(SchubertClass::basis))
                .collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&SchubertClass> = classes.iter().collect();
            to_value(&ClassJson::from(&multiply_all(&refs)?))
        }
        Command::Pieri {
            frame,
            partition: p,
            m,
        } => {
            let f = frame_of(&frame)?;
            let c = SchubertClass::basis(partition(f, &p)?).pieri(m)?;
            to_value(&ClassJson::from(&c))
        }
        Command::LrOracle { frame, lambda, mu } => {
            let f = frame_of(&frame)?;
            let c = lr_oracle(&partition(f, &lambda)?, &partition(f, &mu)?)?;
            to_value(&ClassJson::from(&c))
        }
        Command::Dual {
            frame,
            partition: p,
        } => {
            let f = frame_of(&frame)?;
            let c = SchubertClass::basis(partition(f, &p)?).conjugate()?;
            to_value(&ClassJson::from(&c))
        }
        Command::Conj {
            frame,
            partition: p,
        } => {
            let f = frame_of(&frame)?;
            json!(trimmed(partition(f, &p)?.conjugate()?.parts()))
        }
        Command::Complement {
            frame,
            partition: p,
        } => {
            let f = frame_of(&frame)?;
            json!(trimmed(partition(f, &p)?.complement().parts()))
        }
        Command::MuJ {
            frame,
            partition: p,
            j,
        } => {
            let f = frame_of(&frame)?;
            let mu = partition(f, &p)?;
            match j {
                Some(j) => json!(trimmed(mu.mu_j(j)?.parts())),
                None => {
                    let items = mu
                        .descent_set()
                        .into_iter()
                        .map(|j| Ok(json!({"j": j, "partition": mu.mu_j(j)?.parts()})))
                        .collect::<Result<Vec<_>, CliError>>()?;
                    json!({ "descents": items })
                }
            }
        }
        Command::Delta {
            frame,
            partition: p,
        } => {
            let f = frame_of(&frame)?;
            let mu = partition(f, &p)?;
            let items = mu
                .descent_set()
                .into_iter()
                .map(|j| Ok(json!({"j": j, "delta_j": mu.delta_j(j)?})))
                .collect::<Result<Vec<_>, CliError>>()?;
            json!({"delta": mu.delta(), "descents": items})
        }
        Command::Nonzero {
            frame,
            ell,
            partitions,
        } => {
            let f = frame_of(&frame)?;
            match (ell, partitions.as_slice()) {
                (Some(ell), [lambda]) => {
                    let ell = parse_list(&ell)?;
                    json!({"nonzero": nonzero_special_product(&partition(f, lambda)?, &ell)?})
                }
                (None, [a, b]) => {
                    json!({"nonzero": nonzero_pair(&partition(f, a)?, &partition(f, b)?)?})
                }
                _ => {
                    return Err(CliError::Usage(
                        "nonzero takes two partitions, or one partition with --ell".into(),
                    ))
                }
            }
        }
        Command::Omega { frame } => {
            let f = frame_of(&frame)?;
            to_value(&BiClassJson::from(&omega_class(f)))
        }
        Command::Check { criterion, inputs } => {
            let doc = read_json(&inputs)?;
            to_value(&check(criterion.as_deref(), &doc)?)
        }
        Command::Fixtures { dir } => {
            let report = fixtures::replay_dir(&dir)?;
            let code = if report.failed == 0 { 0 } else { 1 };
            return Ok((code, to_value(&report)));
        }
    };
    Ok((0, value))
}

/// Bare partitions are printed without trailing zeros.
pub(crate) fn trimmed(parts: &[u32]) -> Vec<u32> {
    let len = parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
    parts[..len].to_vec()
}

fn parse_list(s: &str) -> Result<Vec<u32>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::Input(format!("{t:?} is not a non-negative integer")))
        })
        .collect()
}

pub(crate) fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: format!("invalid JSON: {e}"),
    })
}

/// Accepts a bare inputs object, a request `{"criterion", "inputs"}`, or a
/// fixture file (whose `inputs` are used, with any per-check override for
/// the requested criterion).
pub fn check(criterion: Option<&str>, doc: &Value) -> Result<schubert_core::Certificate, CliError> {
    let named = match criterion {
        Some(c) => Some(c.to_string()),
        None => doc
            .get("criterion")
            .and_then(Value::as_str)
            .map(str::to_string),
    };
    let name = named.ok_or_else(|| {
        CliError::Usage("no criterion given and the input file does not name one".into())
    })?;
    let criterion: Criterion = name.parse().map_err(CliError::Usage)?;
    let inputs = fixtures::inputs_for(doc, criterion.name()).unwrap_or(doc);
    Ok(connectivity::evaluate(criterion, inputs)?)
}

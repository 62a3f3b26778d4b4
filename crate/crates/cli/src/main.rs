//! `torfib`: batch front end over documents and built-in datasets.
//!
//! Reports are JSON objects on standard output with a `result` field and,
//! where relevant, `witness` and `violations`. Exit status is 0 on success,
//! 1 on a domain error (its name is printed on standard error) and 2 when an
//! input cannot be read, parsed or validated.

use std::fmt;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use torfib::affine::{conjugacy_check, ConjugacyVerdict, Representation};
use torfib::cocycles::{
    chern_cocycle, monodromy_of, realize_class, twist_by_class, verify_cocycle, ChernCocycle,
    CoverNerve, LocalSystem, TransitionData,
};
use torfib::datasets;
use torfib::document::{edge_cochain_json, ints_json, matrix_json, triangle_cochain_json, Document};
use torfib::linalg::smith_normal_form;

mod examples;

#[derive(Parser)]
#[command(name = "torfib", version, about = "Exact invariants of torus fibrations over cover nerves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Smith normal form U·M·V = D of a matrix document.
    Snf { input: String },
    /// Twisted cohomology of a complex (with representation) or of the Čech
    /// complex of transition data.
    Cohomology {
        #[arg(long)]
        degree: usize,
        input: String,
    },
    /// Monodromy representation of transition data.
    Monodromy { input: String },
    /// Obstruction cocycle of transition data and its class coordinates.
    Chern { input: String },
    /// Checks the cocycle conditions of transition data.
    VerifyCocycle { input: String },
    /// Shifts the obstruction class by `v` placed on the first triangle.
    Twist {
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        input: String,
    },
    /// Builds transition data with the monodromy of the input and class `v`
    /// on the first triangle. The input is transition data or a nerve; a nerve
    /// gets the trivial representation unless `--representation` is given.
    Realize {
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long)]
        representation: Option<String>,
        input: String,
    },
    /// Decides conjugacy of two representations (or monodromies).
    Conjugacy {
        #[arg(long, default_value_t = 2)]
        bound: u32,
        left: String,
        right: String,
    },
    /// Runs the built-in example checks and prints a pass/fail report.
    PaperExamples,
}

/// Failure of a command, mapped to an exit status.
enum Failure {
    /// Unreadable, malformed or invalid input.
    Input(String),
    /// The computation itself failed.
    Domain { name: &'static str, message: String },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Input(msg) => write!(f, "invalid input: {msg}"),
            Self::Domain { name, message } => write!(f, "{name}: {message}"),
        }
    }
}

macro_rules! domain {
    ($e:expr) => {
        $e.map_err(|err| Failure::Domain {
            name: err.name(),
            message: err.to_string(),
        })
    };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            let text = serde_json::to_string_pretty(&report).expect("reports serialize");
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            match failure {
                Failure::Input(_) => ExitCode::from(2),
                Failure::Domain { .. } => ExitCode::from(1),
            }
        }
    }
}

fn load(source: &str) -> Result<Document, Failure> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return builtin(name).ok_or_else(|| {
            Failure::Input(format!(
                "unknown builtin {name:?} (available: {})",
                datasets::BUILTIN_NAMES.join(", ")
            ))
        });
    }
    let text = if source == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(source).map_err(|e| Failure::Input(format!("{source}: {e}")))?
    };
    Document::parse(&text).map_err(|e| Failure::Input(format!("{source}: {e}")))
}

fn builtin(name: &str) -> Option<Document> {
    Some(match name {
        "rp2-twisted" => {
            let (complex, rep) = datasets::rp2_twisted();
            Document::Complex {
                complex,
                representation: Some(rep),
            }
        }
        "rp2-bundle" => Document::TransitionData(datasets::rp2_bundle()),
        "s2-tetra" => Document::TransitionData(datasets::s2_tetra()),
        "circle-loop" => Document::TransitionData(datasets::circle_loop()),
        _ => return None,
    })
}

fn wrong_kind(doc: &Document, expected: &str) -> Failure {
    Failure::Input(format!("expected a {expected} document, found {}", doc.kind()))
}

fn transition_data(source: &str) -> Result<TransitionData, Failure> {
    match load(source)? {
        Document::TransitionData(td) => Ok(td),
        other => Err(wrong_kind(&other, "transition-data")),
    }
}

fn parse_class(text: &str) -> Result<Vec<BigInt>, Failure> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Failure::Input(format!("class entry {s:?} is not an integer")))
        })
        .collect()
}

fn representation_json(rep: &Representation) -> Value {
    let pres = rep.presentation();
    Value::Object(
        pres.generators()
            .iter()
            .zip(rep.images())
            .map(|(g, m)| (g.clone(), matrix_json(m.matrix())))
            .collect(),
    )
}

fn class_json(c: &ChernCocycle) -> Value {
    let coords = c.class();
    json!({
        "free": ints_json(&coords.free),
        "torsion": coords.torsion.iter().map(|(v, m)| json!([v.to_string(), m.to_string()])).collect::<Vec<_>>(),
    })
}

/// The 2-cochain equal to `v` on the first triangle.
fn concentrated_shift(nerve: &CoverNerve, dim: usize, v: Vec<BigInt>) -> Result<Vec<Vec<BigInt>>, Failure> {
    if v.len() != dim {
        return Err(Failure::Input(format!("class has {} entries, fibre dimension is {dim}", v.len())));
    }
    if nerve.triangles().is_empty() {
        return Err(Failure::Input("nerve has no triangles".into()));
    }
    let mut shift = vec![vec![BigInt::from(0); dim]; nerve.triangles().len()];
    shift[0] = v;
    Ok(shift)
}

fn run(command: Command) -> Result<Value, Failure> {
    match command {
        Command::Snf { input } => {
            let m = match load(&input)? {
                Document::Matrix(m) => m,
                other => return Err(wrong_kind(&other, "matrix")),
            };
            let snf = smith_normal_form(&m);
            Ok(json!({
                "result": { "diagonal": ints_json(&snf.diagonal()), "d": matrix_json(&snf.d) },
                "witness": { "u": matrix_json(&snf.u), "v": matrix_json(&snf.v) },
            }))
        }
        Command::Cohomology { degree, input } => {
            let cc = match load(&input)? {
                Document::Complex {
                    complex,
                    representation,
                } => {
                    let rep = representation.ok_or_else(|| {
                        Failure::Input("complex document carries no representation".into())
                    })?;
                    domain!(complex.to_cochain_complex(&rep))?
                }
                Document::TransitionData(td) => domain!(td.local_system())?.cech_complex(),
                other => return Err(wrong_kind(&other, "complex or transition-data")),
            };
            let h = domain!(cc.cohomology(degree))?;
            Ok(json!({
                "result": h.to_string(),
                "free_rank": h.free_rank,
                "torsion": ints_json(&h.torsion),
            }))
        }
        Command::Monodromy { input } => {
            let rep = domain!(monodromy_of(&transition_data(&input)?))?;
            Ok(json!({ "result": representation_json(&rep) }))
        }
        Command::Chern { input } => {
            let td = transition_data(&input)?;
            let c = domain!(chern_cocycle(&td))?;
            Ok(json!({
                "result": { "values": triangle_cochain_json(td.nerve(), c.values()), "class": class_json(&c) },
            }))
        }
        Command::VerifyCocycle { input } => {
            let td = transition_data(&input)?;
            let report = verify_cocycle(&td);
            let mut violations: Vec<Value> = report
                .triangles
                .iter()
                .map(|v| {
                    json!({
                        "triangle": v.vertices,
                        "linear_mismatch": v.linear_mismatch,
                        "discrepancy": v.discrepancy.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            violations.extend(report.edges.iter().map(|v| {
                json!({
                    "edge": v.vertices,
                    "expected_translation": v.expected.translation().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "found_translation": v.found.translation().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "expected_linear": matrix_json(v.expected.linear().matrix()),
                    "found_linear": matrix_json(v.found.linear().matrix()),
                })
            }));
            let mut out = json!({ "result": if report.is_ok() { "ok" } else { "violated" } });
            if !violations.is_empty() {
                out["violations"] = Value::Array(violations);
            }
            Ok(out)
        }
        Command::Twist { class, input } => {
            let td = transition_data(&input)?;
            let shift = concentrated_shift(td.nerve(), td.dim(), parse_class(&class)?)?;
            let twisted = domain!(twist_by_class(&td, &shift))?;
            let c = domain!(chern_cocycle(&twisted))?;
            Ok(json!({
                "result": Document::TransitionData(twisted).to_json(),
                "witness": { "class": class_json(&c) },
            }))
        }
        Command::Realize {
            class,
            representation,
            input,
        } => {
            let v = parse_class(&class)?;
            let (nerve, rep) = match load(&input)? {
                Document::TransitionData(td) => {
                    let rep = domain!(monodromy_of(&td))?;
                    (td.nerve().clone(), rep)
                }
                Document::Nerve(nerve) => {
                    let rep = match representation {
                        Some(src) => match load(&src)? {
                            Document::Representation(r) => r,
                            other => return Err(wrong_kind(&other, "representation")),
                        },
                        None => Representation::trivial(nerve.presentation().clone(), v.len()),
                    };
                    (nerve, rep)
                }
                other => return Err(wrong_kind(&other, "transition-data or nerve")),
            };
            let local = domain!(LocalSystem::from_representation(nerve.clone(), &rep))?;
            let values = concentrated_shift(&nerve, rep.dim(), v)?;
            let target = domain!(ChernCocycle::new(local, values))?;
            let td = domain!(realize_class(&nerve, &rep, &target))?;
            let c = domain!(chern_cocycle(&td))?;
            let witness = match domain!(torfib::cocycles::cohomologous(&c, &target))? {
                torfib::cocycles::Cohomologous::Equal { witness } => edge_cochain_json(&nerve, &witness),
                torfib::cocycles::Cohomologous::NotEqual => Value::Null,
            };
            Ok(json!({
                "result": Document::TransitionData(td).to_json(),
                "witness": { "class": class_json(&c), "coboundary": witness },
            }))
        }
        Command::Conjugacy { bound, left, right } => {
            let rep = |src: &str| -> Result<Representation, Failure> {
                match load(src)? {
                    Document::Representation(r) => Ok(r),
                    Document::TransitionData(td) => domain!(monodromy_of(&td)),
                    other => Err(wrong_kind(&other, "representation or transition-data")),
                }
            };
            let (r1, r2) = (rep(&left)?, rep(&right)?);
            Ok(match domain!(conjugacy_check(&r1, &r2, bound))? {
                ConjugacyVerdict::Conjugate { witness } => json!({
                    "result": "conjugate",
                    "witness": matrix_json(witness.matrix()),
                }),
                ConjugacyVerdict::NotConjugate { invariant } => json!({
                    "result": "not-conjugate",
                    "witness": {
                        "invariant": format!("{:?}", invariant.kind),
                        "word": invariant.word,
                        "left": ints_json(&invariant.left),
                        "right": ints_json(&invariant.right),
                    },
                }),
                ConjugacyVerdict::Unknown { candidates_searched } => json!({
                    "result": "unknown",
                    "candidates_searched": candidates_searched.to_string(),
                }),
            })
        }
        Command::PaperExamples => {
            let checks = examples::run_all();
            let failed = checks.iter().filter(|c| !c.pass).count();
            let report = json!({
                "result": if failed == 0 { "pass" } else { "fail" },
                "checks": checks.iter().map(|c| json!({
                    "name": c.name,
                    "pass": c.pass,
                    "detail": c.detail,
                })).collect::<Vec<_>>(),
            });
            if failed > 0 {
                println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
                return Err(Failure::Domain {
                    name: "ExampleFailed",
                    message: format!("{failed} example checks failed"),
                });
            }
            Ok(report)
        }
    }
}

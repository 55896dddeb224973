//! Command-line front end. The `cqr` binary parses a [`RunConfig`] and hands
//! it to [`run`], which writes artifacts and returns the exit status.
//!
//! Exit status: 0 success, 1 error, 2 refuted (`verify`), 3 budget exhausted
//! (the partial report is still written).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::classify;
use crate::compress::{compress, quasi_compress};
use crate::counterexample::{
    build_counterexample, check_counterexample, CounterexampleArtifact, CounterexampleOptions,
};
use crate::error::{Error, Result};
use crate::format::{parse_list, parse_ring_spec, parse_space, write_space};
use crate::multicomplex::{
    build_compressed, check_hunt_witness, parse_face_list, revlex_characterizes, search_realizable,
    witness_hunt, ColoredMulticomplex, FVector, HuntWitness,
};
use crate::ring::{Ext, RingSpec};
use crate::space::{
    enumerate_piece, is_lex_segment, is_revlex_segment, lex_segment, lower_shadow, norm,
    revlex_segment, upper_shadow, MonomialSpace,
};
use crate::verify::{check_witness, verify_with, Budget, Criterion, Verdict, VerificationReport};

pub const SCHEMA: &str = "colored-quotient/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_REFUTED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "cqr",
    version,
    about = "Monomial combinatorics of colored quotient rings"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Option<Command>,

    /// Replay a JSON artifact and recompute every recorded quantity.
    #[arg(long, value_name = "FILE")]
    pub check: Option<PathBuf>,

    #[command(flatten)]
    pub ring: RingArgs,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    pub format: OutputFormat,

    /// Worker threads for exhaustive searches; never changes the output.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct RingArgs {
    /// Ring-spec file (`a = [..]`, `lambda = [..]`, optional `phi = [..]`).
    #[arg(long, value_name = "FILE", global = true)]
    pub ring: Option<PathBuf>,
    /// Inline type, e.g. `1,inf`.
    #[arg(long, global = true, allow_hyphen_values = false)]
    pub a: Option<String>,
    /// Inline composition, e.g. `2,3`.
    #[arg(long, global = true)]
    pub lambda: Option<String>,
    /// Inline truncation caps grouped by color.
    #[arg(long, global = true)]
    pub phi: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArgs {
    /// Largest graded piece to search exhaustively.
    #[arg(long, default_value_t = Budget::default().max_piece)]
    pub max_piece: usize,
    /// Total shadow evaluations allowed.
    #[arg(long, default_value_t = Budget::default().max_evaluations)]
    pub max_evaluations: u64,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// List the monomials of W_d(phi) in descending revlex order.
    Enumerate {
        #[arg(long)]
        d: u32,
    },
    /// The revlex (or lex) segment of size k in degree d.
    Segment {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lex: bool,
    },
    /// Lower (or upper) shadow of a space file.
    Shadow {
        #[arg(long, value_name = "FILE")]
        space: PathBuf,
        /// Degree of an empty space file.
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        upper: bool,
    },
    /// Apply C_t, or quasi-compress to a fixpoint.
    Compress {
        #[arg(long, value_name = "FILE")]
        space: PathBuf,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, required_unless_present = "quasi", conflicts_with = "quasi")]
        t: Option<usize>,
        #[arg(long)]
        quasi: bool,
    },
    /// A uniformly random k-subset of W_d(phi).
    Sample {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Mixed / hinged / neither verdict for an untruncated ring.
    Classify,
    /// Exhaustive search for a violation of the Macaulay-Lex criterion.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Override the criterion chosen from the ring.
        #[arg(long, value_enum)]
        criterion: Option<CriterionArg>,
    },
    /// Build an explicit space beating the revlex segment in degree d.
    Counterexample {
        #[arg(long)]
        d: u32,
        /// Only require lambda >= 2 in every color unless s = 1.
        #[arg(long)]
        weak_composition: bool,
        /// Also write the space A to this file.
        #[arg(long, value_name = "FILE")]
        space_out: Option<PathBuf>,
    },
    /// f-vectors of colored multicomplexes.
    Fvector {
        #[command(subcommand)]
        command: FvectorCommand,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CriterionArg {
    Lower,
    Upper,
}

#[derive(Subcommand, Debug, Clone)]
pub enum FvectorCommand {
    /// f-vector of a multicomplex (monomial file) or complex (face list).
    Of {
        #[arg(
            long,
            value_name = "FILE",
            required_unless_present = "faces",
            conflicts_with = "faces"
        )]
        complex: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        faces: Option<PathBuf>,
    },
    /// The revlex candidate for an f-vector.
    Compress {
        #[arg(long)]
        f: String,
    },
    /// Search for any multicomplex with the given f-vector.
    Search {
        #[arg(long)]
        f: String,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// Whether revlex multicomplexes realize every f-vector in the ambient.
    Characterizes,
    /// Find a realizable f-vector that the revlex candidate fails.
    Hunt {
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
}

/// Outcome of one command: a JSON document, text, and an exit status.
struct Output {
    json: Value,
    text: String,
    status: i32,
}

impl Output {
    fn new(kind: &str, payload: impl Serialize, text: String) -> Result<Self> {
        Ok(Output {
            json: envelope(kind, serde_json::to_value(payload)?),
            text,
            status: EXIT_OK,
        })
    }
}

fn envelope(kind: &str, payload: Value) -> Value {
    let mut obj = match payload {
        Value::Object(map) => map,
        other => {
            let mut map = serde_json::Map::new();
            map.insert("value".into(), other);
            map
        }
    };
    obj.insert("schema".into(), Value::String(SCHEMA.into()));
    obj.insert("type".into(), Value::String(kind.into()));
    Value::Object(obj)
}

/// Runs a command, writing its artifact to `out` and diagnostics to `err`.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match config.workers {
        Some(w) => match rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
        {
            Ok(pool) => pool.install(|| dispatch(config)),
            Err(e) => Err(Error::InvalidSpec(format!("cannot start {w} workers: {e}"))),
        },
        None => dispatch(config),
    };
    match result {
        Ok(output) => {
            let written = match config.format {
                OutputFormat::Json => serde_json::to_string_pretty(&output.json)
                    .map_err(Error::from)
                    .and_then(|s| writeln!(out, "{s}").map_err(Error::from)),
                OutputFormat::Text => write!(out, "{}", output.text).map_err(Error::from),
            };
            match written {
                Ok(()) => output.status,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_ERROR
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::InvalidSpec(format!("cannot read {}: {e}", path.display())))
}

fn load_ring(args: &RingArgs) -> Result<RingSpec> {
    match (&args.ring, &args.a, &args.lambda) {
        (Some(path), None, None) if args.phi.is_none() => parse_ring_spec(&read(path)?),
        (Some(_), _, _) => Err(Error::InvalidSpec(
            "use either --ring or --a/--lambda/--phi, not both".into(),
        )),
        (None, Some(a), Some(lambda)) => {
            let phi = args
                .phi
                .as_deref()
                .map(|p| parse_list::<Ext>(1, p))
                .transpose()?;
            RingSpec::new(parse_list(1, a)?, parse_list(1, lambda)?, phi)
        }
        _ => Err(Error::InvalidSpec(
            "a ring is required: --ring FILE or --a and --lambda".into(),
        )),
    }
}

fn space_summary(space: &MonomialSpace) -> Result<Value> {
    Ok(json!({
        "ring": space.ring(),
        "degree": space.degree(),
        "size": space.len(),
        "norm": norm(space)?,
        "is_revlex_segment": is_revlex_segment(space)?,
        "is_lex_segment": is_lex_segment(space)?,
        "members": space.to_strings(),
    }))
}

fn space_output(space: &MonomialSpace) -> Result<Output> {
    Ok(Output {
        json: envelope("space", space_summary(space)?),
        text: write_space(space),
        status: EXIT_OK,
    })
}

fn dispatch(config: &RunConfig) -> Result<Output> {
    if let Some(path) = &config.check {
        if config.command.is_some() {
            return Err(Error::Usage("--check takes no subcommand".into()));
        }
        return replay(&read(path)?);
    }
    let command = config
        .command
        .as_ref()
        .ok_or_else(|| Error::Usage("a subcommand or --check is required".into()))?;
    let ring = load_ring(&config.ring)?;
    match command {
        Command::Enumerate { d } => space_output(&enumerate_piece(&ring, *d).full()),
        Command::Segment { d, k, lex } => {
            let s = if *lex {
                lex_segment(&ring, *d, *k)?
            } else {
                revlex_segment(&ring, *d, *k)?
            };
            space_output(&s)
        }
        Command::Shadow { space, d, upper } => {
            let s = parse_space(&ring, &read(space)?, *d)?;
            let shadow = if *upper {
                upper_shadow(&s)
            } else {
                lower_shadow(&s)?
            };
            let mut json = space_summary(&shadow)?;
            json["direction"] = Value::String(if *upper { "upper" } else { "lower" }.into());
            json["source_size"] = json!(s.len());
            Ok(Output {
                json: envelope("shadow", json),
                text: write_space(&shadow),
                status: EXIT_OK,
            })
        }
        Command::Compress { space, d, t, quasi } => {
            let s = parse_space(&ring, &read(space)?, *d)?;
            let mut json = json!({ "input_norm": norm(&s)? });
            let result = if *quasi {
                let q = quasi_compress(&s)?;
                json["trace"] = serde_json::to_value(&q.trace)?;
                q.space
            } else {
                let t = t.expect("clap requires --t without --quasi");
                json["t"] = json!(t);
                compress(&s, t)?
            };
            json["result"] = space_summary(&result)?;
            Ok(Output {
                json: envelope("compression", json),
                text: write_space(&result),
                status: EXIT_OK,
            })
        }
        Command::Sample { d, k, seed } => {
            let piece = enumerate_piece(&ring, *d);
            if *k > piece.len() {
                return Err(Error::OutOfRange {
                    what: "sample size",
                    value: *k,
                    max: piece.len(),
                });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let picks = rand::seq::index::sample(&mut rng, piece.len(), *k);
            space_output(&piece.space_from_positions(picks))
        }
        Command::Classify => {
            let c = classify(&ring)?;
            Output::new("classification", c, format!("{}\n", c.kind()))
        }
        Command::Verify {
            max_degree,
            budget,
            criterion,
        } => {
            let budget = Budget {
                max_piece: budget.max_piece,
                max_evaluations: budget.max_evaluations,
            };
            let criterion = match criterion {
                Some(CriterionArg::Lower) => Criterion::LowerShadow,
                Some(CriterionArg::Upper) => Criterion::UpperShadowLex,
                None => Criterion::for_ring(&ring),
            };
            let report = verify_with(&ring, criterion, *max_degree, &budget)?;
            let status = match (report.verdict, report.exhaustive) {
                (Verdict::Refuted, _) => EXIT_REFUTED,
                (_, false) => EXIT_BUDGET,
                _ => EXIT_OK,
            };
            let text = match &report.witness {
                Some(w) => format!(
                    "refuted in degree {}: {} < {} for {}\n",
                    w.degree,
                    w.shadow,
                    w.segment_shadow,
                    w.space.join(", ")
                ),
                None => format!(
                    "verified up to degree {} ({}; {} evaluations)\n",
                    report.max_degree,
                    if report.exhaustive {
                        "exhaustive"
                    } else {
                        "budget exhausted"
                    },
                    report.evaluations
                ),
            };
            let mut out = Output::new("verification-report", &report, text)?;
            out.status = status;
            Ok(out)
        }
        Command::Counterexample {
            d,
            weak_composition,
            space_out,
        } => {
            let art = build_counterexample(
                &ring,
                *d,
                CounterexampleOptions {
                    weak_composition: *weak_composition,
                },
            )?;
            let text: String = art.space.iter().map(|s| format!("{s}\n")).collect();
            if let Some(path) = space_out {
                fs::write(path, &text)?;
            }
            Output::new("counterexample", &art, text)
        }
        Command::Fvector { command } => fvector(&ring, command),
    }
}

fn fvector(ring: &RingSpec, command: &FvectorCommand) -> Result<Output> {
    let multicomplex_json = |m: &ColoredMulticomplex| {
        json!({
            "ambient": m.ambient(),
            "f": m.f_vector(),
            "members": m.to_strings(),
        })
    };
    let lines = |m: &ColoredMulticomplex| {
        m.to_strings()
            .into_iter()
            .map(|s| s + "\n")
            .collect::<String>()
    };
    match command {
        FvectorCommand::Of { complex, faces } => {
            let m = match (complex, faces) {
                (Some(path), _) => {
                    let text = read(path)?;
                    let ls: Vec<&str> = text
                        .lines()
                        .map(|l| l.split('#').next().unwrap_or("").trim())
                        .filter(|l| !l.is_empty())
                        .collect();
                    ColoredMulticomplex::parse(ring, &ls)?
                }
                (None, Some(path)) => parse_face_list(ring, &read(path)?)?,
                (None, None) => {
                    return Err(Error::InvalidSpec(
                        "--complex or --faces is required".into(),
                    ))
                }
            };
            let f = m.f_vector();
            Ok(Output {
                json: envelope("multicomplex", multicomplex_json(&m)),
                text: format!("{f}\n"),
                status: EXIT_OK,
            })
        }
        FvectorCommand::Compress { f } => {
            let f: FVector = f.parse()?;
            let m = build_compressed(ring, &f)?;
            Ok(Output {
                json: envelope("multicomplex", multicomplex_json(&m)),
                text: lines(&m),
                status: EXIT_OK,
            })
        }
        FvectorCommand::Search { f, budget } => {
            let f: FVector = f.parse()?;
            let found = search_realizable(ring, &f, *budget)?;
            let json = json!({
                "ambient": ring,
                "f": f,
                "realizable": found.is_some(),
                "members": found.as_ref().map(|m| m.to_strings()),
            });
            let text = match &found {
                Some(m) => lines(m),
                None => "not realizable\n".into(),
            };
            Ok(Output {
                json: envelope("realizability", json),
                text,
                status: EXIT_OK,
            })
        }
        FvectorCommand::Characterizes => {
            let v = revlex_characterizes(ring)?;
            Ok(Output {
                json: envelope(
                    "characterization",
                    json!({ "ambient": ring, "revlex_characterizes": v }),
                ),
                text: format!("{v}\n"),
                status: EXIT_OK,
            })
        }
        FvectorCommand::Hunt { max_degree, budget } => {
            match witness_hunt(ring, *max_degree, *budget)? {
                Some(w) => {
                    let text = format!(
                        "{} realizable; revlex fails at {} (missing {})\n",
                        w.f, w.monomial, w.missing
                    );
                    Output::new("hunt-witness", &w, text)
                }
                None => Ok(Output {
                    json: envelope("hunt-result", json!({ "ambient": ring, "found": false })),
                    text: "no witness\n".into(),
                    status: EXIT_OK,
                }),
            }
        }
    }
}

/// Re-validates a JSON artifact produced by [`run`].
fn replay(text: &str) -> Result<Output> {
    let value: Value = serde_json::from_str(text)?;
    if value.get("schema").and_then(Value::as_str) != Some(SCHEMA) {
        return Err(Error::ReplayMismatch(format!("expected schema {SCHEMA:?}")));
    }
    let kind = value
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::ReplayMismatch("missing type".into()))?
        .to_string();
    match kind.as_str() {
        "verification-report" => {
            let report: VerificationReport = serde_json::from_value(value)?;
            let fresh = verify_with(
                &report.ring,
                report.criterion,
                report.max_degree,
                &report.budget,
            )?;
            if fresh != report {
                return Err(Error::ReplayMismatch("recomputed report differs".into()));
            }
            if let Some(w) = &report.witness {
                check_witness(&report.ring, report.criterion, w)?;
            }
        }
        "counterexample" => {
            let art: CounterexampleArtifact = serde_json::from_value(value)?;
            check_counterexample(&art)?;
            let fresh = build_counterexample(
                &art.ring,
                art.degree,
                CounterexampleOptions {
                    weak_composition: art.weak_composition,
                },
            )?;
            if fresh != art {
                return Err(Error::ReplayMismatch("rebuilt artifact differs".into()));
            }
        }
        "hunt-witness" => {
            let w: HuntWitness = serde_json::from_value(value)?;
            check_hunt_witness(&w)?;
        }
        "classification" => {
            return Err(Error::ReplayMismatch(
                "classifications carry no ring; rerun `classify` instead".into(),
            ))
        }
        other => {
            return Err(Error::ReplayMismatch(format!(
                "cannot replay artifacts of type {other:?}"
            )))
        }
    }
    Ok(Output {
        json: envelope("check", json!({ "checked": kind, "ok": true })),
        text: format!("ok: {kind}\n"),
        status: EXIT_OK,
    })
}

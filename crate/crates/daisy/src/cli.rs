//! Command-line front end.
//!
//! Every subcommand is a thin adapter over one library call, and the exit
//! code doubles as the verdict so censuses can be scripted over:
//!
//! * `0` — success, or an affirmative verdict (gradable, realizable,
//!   liftable, census clean),
//! * `1` — a well-formed negative verdict (not gradable, not realizable,
//!   not liftable, census disagreement),
//! * `2` — usage errors, unreadable input, parse or validation failures,
//!   and inputs of the wrong document kind.
//!
//! Results go to stdout, diagnostics to stderr. Documents are read from a
//! path argument, or stdin when the path is `-` or omitted, so `gen` and
//! `lift` compose with the verdict commands. `--json` switches every
//! result to machine-readable JSON with a stable key order.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::arcs::{self, ArcKind, DoubleArc, Parity};
use crate::grading::{self, Grading, NotGradable};
use crate::model::{euler_char_of_image, ArrowedDaisyGraph};
use crate::oracle::{self, EnumerationSpec, RandomSpec};
use crate::realize::{self, ManifoldClass, VerdictReason};
use crate::textio::{self, Document};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "daisy",
    version,
    about = "Gradings, double arcs, and realizability of daisy graphs",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide gradability; print the grading or the obstruction
    Check(DocArgs),
    /// Print the normalized grading of an arrowed document
    Grade(DocArgs),
    /// Print the double-arc decomposition and closed-arc parities
    Arcs(DocArgs),
    /// Lift a plain dg to an arrowed document with a short grading
    Lift(DocArgs),
    /// Decide realizability in a class of ambient manifolds
    Realizable {
        #[command(flatten)]
        doc: DocArgs,
        /// One of periodic-closed, periodic-bounded, infinite-closed,
        /// infinite-bounded
        #[arg(long)]
        manifold: ManifoldClass,
    },
    /// Evaluate the Euler characteristic of an image surface
    Euler {
        /// Euler characteristic of the abstract surface
        #[arg(long, allow_hyphen_values = true)]
        chi_f: i64,
        /// Number of triple values
        #[arg(long)]
        t: u64,
        /// Number of branch values, DB included
        #[arg(long)]
        b: u64,
        /// Emit JSON with stable key order
        #[arg(long)]
        json: bool,
    },
    /// Render a document as graphviz DOT
    ExportDot(DocArgs),
    /// Write a seeded random arrowed document to stdout
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of triple vertices
        #[arg(long, default_value_t = 3)]
        max_triples: usize,
        /// Restrict the graph to a forest (always gradable)
        #[arg(long)]
        forest: bool,
        /// Number of double circles
        #[arg(long, default_value_t = 0)]
        circles: u32,
        /// Chance in [0,1] that a pendant leaf is a DB vertex
        #[arg(long, default_value_t = 0.0)]
        db_prob: f64,
        /// Emit JSON with stable key order
        #[arg(long)]
        json: bool,
    },
    /// Enumerate every labeled instance up to a size; print the census CSV
    Census {
        /// Largest triple-vertex count enumerated
        #[arg(long, default_value_t = 2)]
        max_triples: usize,
        /// Cap on internal (loop and connector) edges; the default of 3
        /// per triple vertex is no restriction
        #[arg(long)]
        max_edges: Option<usize>,
        /// Re-decide gradability of every instance with the exhaustive
        /// oracle and report disagreements
        #[arg(long)]
        oracle_check: bool,
        /// Emit the JSON summary instead of the CSV
        #[arg(long)]
        json: bool,
    },
    /// Grade by exhaustive search, independent of the linear-time algorithm
    OracleGrade(DocArgs),
}

#[derive(Args)]
struct DocArgs {
    /// Input path, or - for stdin
    #[arg(default_value = "-")]
    input: String,
    /// Emit JSON with stable key order
    #[arg(long)]
    json: bool,
}

/// An already-reported failure carrying only the exit code.
struct Failure(i32);

impl From<std::io::Error> for Failure {
    fn from(_: std::io::Error) -> Self {
        Failure(EXIT_USAGE)
    }
}

type Out<'a> = &'a mut dyn Write;

/// Run the CLI against explicit streams and return the exit code. The
/// binary wraps this; tests drive it in-process.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read, stdout: Out, stderr: Out) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            } else {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            };
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(Failure(code)) => code,
    }
}

fn load(path: &str, stdin: &mut dyn Read, stderr: Out) -> Result<Document, Failure> {
    let text = if path == "-" {
        let mut buf = String::new();
        if let Err(e) = stdin.read_to_string(&mut buf) {
            writeln!(stderr, "error: cannot read stdin: {e}")?;
            return Err(Failure(EXIT_USAGE));
        }
        buf
    } else {
        match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                writeln!(stderr, "error: cannot read {path}: {e}")?;
                return Err(Failure(EXIT_USAGE));
            }
        }
    };
    textio::parse(&text).map_err(|e| {
        let _ = writeln!(stderr, "error: {e}");
        Failure(EXIT_USAGE)
    })
}

fn need_arrows<'d>(doc: &'d Document, cmd: &str, stderr: Out) -> Result<&'d ArrowedDaisyGraph, Failure> {
    doc.arrowed().ok_or_else(|| {
        let _ = writeln!(
            stderr,
            "error: {cmd} needs an arrowed document (adg or odg); got {}",
            doc.kind()
        );
        Failure(EXIT_USAGE)
    })
}

fn emit_json<T: Serialize>(value: &T, stdout: Out) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("output structs always serialize");
    writeln!(stdout, "{text}")?;
    Ok(())
}

#[derive(Serialize)]
struct GradingJson {
    grades: BTreeMap<String, i64>,
    bases: BTreeMap<String, i64>,
}

impl GradingJson {
    fn of(g: &Grading) -> Self {
        GradingJson {
            grades: g.grades.iter().map(|(e, v)| (e.to_string(), *v)).collect(),
            bases: g.bases.iter().map(|(v, a)| (v.to_string(), *a)).collect(),
        }
    }
}

fn grading_lines(g: &Grading, out: Out) -> Result<(), Failure> {
    for (e, v) in &g.grades {
        writeln!(out, "edge {e} {v}")?;
    }
    for (v, a) in &g.bases {
        writeln!(out, "base {v} {a}")?;
    }
    Ok(())
}

#[derive(Serialize)]
#[serde(tag = "kind")]
enum ObstructionJson {
    #[serde(rename = "obstructing-loop")]
    ObstructingLoop { edge: String, vertex: String },
    #[serde(rename = "conflict")]
    Conflict { edge: String, vertex: String, assigned: i64, required: i64 },
}

impl ObstructionJson {
    fn of(e: &NotGradable) -> Self {
        match e {
            NotGradable::ObstructingLoop { edge, vertex } => ObstructionJson::ObstructingLoop {
                edge: edge.to_string(),
                vertex: vertex.to_string(),
            },
            NotGradable::Conflict { edge, vertex, assigned, required } => ObstructionJson::Conflict {
                edge: edge.to_string(),
                vertex: vertex.to_string(),
                assigned: *assigned,
                required: *required,
            },
        }
    }
}

#[derive(Serialize)]
struct CheckJson {
    gradable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    grading: Option<GradingJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    obstruction: Option<ObstructionJson>,
}

#[derive(Serialize)]
struct PassageJson {
    vertex: String,
    pair: [String; 2],
}

#[derive(Serialize)]
struct ArcJson {
    edges: Vec<String>,
    passages: Vec<PassageJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    parity: Option<String>,
}

impl ArcJson {
    fn of(arc: &DoubleArc) -> Self {
        let closed = arc.kind == ArcKind::Closed;
        ArcJson {
            edges: arc.edges.iter().map(|e| e.to_string()).collect(),
            passages: arc
                .passages
                .iter()
                .map(|(v, p)| PassageJson {
                    vertex: v.to_string(),
                    pair: [p.lo().to_string(), p.hi().to_string()],
                })
                .collect(),
            edge_count: closed.then_some(arc.edges.len()),
            parity: closed.then(|| parity_of(arc).to_string()),
        }
    }
}

fn parity_of(arc: &DoubleArc) -> Parity {
    if arc.edges.len().is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

#[derive(Serialize)]
struct ArcsJson {
    open_arcs: Vec<ArcJson>,
    closed_arcs: Vec<ArcJson>,
    circles: u32,
}

#[derive(Serialize)]
struct LiftJson {
    liftable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    document: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    grading: Option<GradingJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    odd_closed_arcs: Option<Vec<Vec<String>>>,
}

#[derive(Serialize)]
#[serde(tag = "kind")]
enum ReasonJson {
    #[serde(rename = "not-gradable")]
    NotGradable { detail: String },
    #[serde(rename = "has-DB-values")]
    HasDbValues { vertices: Vec<String> },
    #[serde(rename = "unconditional")]
    Unconditional,
}

impl ReasonJson {
    fn of(r: &VerdictReason) -> Self {
        match r {
            VerdictReason::NotGradable(why) => ReasonJson::NotGradable { detail: why.to_string() },
            VerdictReason::HasDbValues(vs) => ReasonJson::HasDbValues {
                vertices: vs.iter().map(|v| v.to_string()).collect(),
            },
            VerdictReason::Unconditional => ReasonJson::Unconditional,
        }
    }
}

#[derive(Serialize)]
struct RealizableJson {
    manifold: String,
    realizable: bool,
    reasons: Vec<ReasonJson>,
}

#[derive(Serialize)]
struct EulerJson {
    chi_f: i64,
    t: u64,
    b: u64,
    chi_image: ChiJson,
}

#[derive(Serialize)]
struct ChiJson {
    text: String,
    twice: i64,
}

#[derive(Serialize)]
struct DocumentJson {
    seed: Option<u64>,
    document: String,
}

#[derive(Serialize)]
struct CensusJson {
    instances: u64,
    gradable: u64,
    oracle_checked: u64,
    oracle_skipped: u64,
    disagreements: Vec<String>,
}

fn dispatch(cmd: Cmd, stdin: &mut dyn Read, stdout: Out, stderr: Out) -> Result<i32, Failure> {
    match cmd {
        Cmd::Check(a) => {
            let doc = load(&a.input, stdin, stderr)?;
            let g = need_arrows(&doc, "check", stderr)?;
            match grading::grade(g) {
                Ok(grading) => {
                    if a.json {
                        emit_json(
                            &CheckJson {
                                gradable: true,
                                grading: Some(GradingJson::of(&grading)),
                                obstruction: None,
                            },
                            stdout,
                        )?;
                    } else {
                        writeln!(stdout, "gradable")?;
                        grading_lines(&grading, stdout)?;
                    }
                    Ok(EXIT_OK)
                }
                Err(why) => {
                    if a.json {
                        emit_json(
                            &CheckJson {
                                gradable: false,
                                grading: None,
                                obstruction: Some(ObstructionJson::of(&why)),
                            },
                            stdout,
                        )?;
                    } else {
                        writeln!(stdout, "not gradable: {why}")?;
                    }
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Cmd::Grade(a) => {
            let doc = load(&a.input, stdin, stderr)?;
            let g = need_arrows(&doc, "grade", stderr)?;
            match grading::grade(g) {
                Ok(grading) => {
                    if a.json {
                        emit_json(&GradingJson::of(&grading), stdout)?;
                    } else {
                        grading_lines(&grading, stdout)?;
                    }
                    Ok(EXIT_OK)
                }
                Err(why) => {
                    writeln!(stderr, "not gradable: {why}")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Cmd::Arcs(a) => {
            let doc = load(&a.input, stdin, stderr)?;
            let decomposition = arcs::decompose_arcs(doc.base());
            if a.json {
                emit_json(
                    &ArcsJson {
                        open_arcs: decomposition.open_arcs().map(ArcJson::of).collect(),
                        closed_arcs: decomposition.closed_arcs().map(ArcJson::of).collect(),
                        circles: decomposition.circles,
                    },
                    stdout,
                )?;
            } else {
                for arc in &decomposition.arcs {
                    let edges: Vec<String> = arc.edges.iter().map(|e| e.to_string()).collect();
                    let via: Vec<String> =
                        arc.passages.iter().map(|(v, _)| v.to_string()).collect();
                    match arc.kind {
                        ArcKind::Open => write!(stdout, "open arc: {}", edges.join(" "))?,
                        ArcKind::Closed => write!(
                            stdout,
                            "closed arc: {} ({} edges, {})",
                            edges.join(" "),
                            arc.edges.len(),
                            parity_of(arc)
                        )?,
                    }
                    if via.is_empty() {
                        writeln!(stdout)?;
                    } else {
                        writeln!(stdout, " via {}", via.join(", "))?;
                    }
                }
                writeln!(stdout, "circles: {}", decomposition.circles)?;
            }
            Ok(EXIT_OK)
        }
        Cmd::Lift(a) => {
            let doc = load(&a.input, stdin, stderr)?;
            let Document::Dg(g) = &doc else {
                writeln!(
                    stderr,
                    "error: lift expected plain DG input; got {} (its arrows are already chosen)",
                    doc.kind()
                )?;
                return Err(Failure(EXIT_USAGE));
            };
            match arcs::short_grade_lift(g) {
                Ok((lifted, grading)) => {
                    let text = textio::serialize(&Document::Adg(lifted));
                    if a.json {
                        emit_json(
                            &LiftJson {
                                liftable: true,
                                document: Some(text),
                                grading: Some(GradingJson::of(&grading)),
                                odd_closed_arcs: None,
                            },
                            stdout,
                        )?;
                    } else {
                        write!(stdout, "{text}")?;
                    }
                    Ok(EXIT_OK)
                }
                Err(why) => {
                    if a.json {
                        let arcs = why
                            .odd_closed_arcs
                            .iter()
                            .map(|arc| arc.edges.iter().map(|e| e.to_string()).collect())
                            .collect();
                        emit_json(
                            &LiftJson {
                                liftable: false,
                                document: None,
                                grading: None,
                                odd_closed_arcs: Some(arcs),
                            },
                            stdout,
                        )?;
                    } else {
                        writeln!(stderr, "{why}")?;
                    }
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Cmd::Realizable { doc: a, manifold } => {
            let doc = load(&a.input, stdin, stderr)?;
            let g = need_arrows(&doc, "realizable", stderr)?;
            let verdict = realize::decide_realizable(g, manifold);
            if a.json {
                emit_json(
                    &RealizableJson {
                        manifold: manifold.to_string(),
                        realizable: verdict.realizable,
                        reasons: verdict.reasons.iter().map(ReasonJson::of).collect(),
                    },
                    stdout,
                )?;
            } else {
                let word = if verdict.realizable { "realizable" } else { "not realizable" };
                writeln!(stdout, "{word} ({manifold})")?;
                for reason in &verdict.reasons {
                    writeln!(stdout, "  {reason}")?;
                }
            }
            Ok(if verdict.realizable { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Cmd::Euler { chi_f, t, b, json } => {
            let chi = euler_char_of_image(chi_f, t, b);
            if json {
                emit_json(
                    &EulerJson {
                        chi_f,
                        t,
                        b,
                        chi_image: ChiJson { text: chi.to_string(), twice: chi.twice() },
                    },
                    stdout,
                )?;
            } else {
                writeln!(stdout, "{chi}")?;
            }
            Ok(EXIT_OK)
        }
        Cmd::ExportDot(a) => {
            let doc = load(&a.input, stdin, stderr)?;
            let dot = textio::export_dot(&doc);
            if a.json {
                #[derive(Serialize)]
                struct DotJson {
                    dot: String,
                }
                emit_json(&DotJson { dot }, stdout)?;
            } else {
                write!(stdout, "{dot}")?;
            }
            Ok(EXIT_OK)
        }
        Cmd::Gen { seed, max_triples, forest, circles, db_prob, json } => {
            let spec = RandomSpec {
                triple_vertices: max_triples,
                forest_only: forest,
                circles,
                db_probability: db_prob,
            };
            let doc = Document::Adg(oracle::random_instance(seed, &spec));
            let text = textio::serialize(&doc);
            if json {
                emit_json(&DocumentJson { seed: Some(seed), document: text }, stdout)?;
            } else {
                write!(stdout, "{text}")?;
            }
            Ok(EXIT_OK)
        }
        Cmd::Census { max_triples, max_edges, oracle_check, json } => {
            let spec = EnumerationSpec {
                max_triple_vertices: max_triples,
                max_internal_edges: max_edges.unwrap_or(3 * max_triples),
                pendant_completion: true,
                arrow_exhaustive: true,
            };
            let report = if json {
                let mut sink = Vec::new();
                oracle::write_census_csv(spec, oracle_check, &mut sink)?
            } else {
                oracle::write_census_csv(spec, oracle_check, stdout)?
            };
            if json {
                emit_json(
                    &CensusJson {
                        instances: report.instances,
                        gradable: report.gradable,
                        oracle_checked: report.oracle_checked,
                        oracle_skipped: report.oracle_skipped,
                        disagreements: report.disagreements.clone(),
                    },
                    stdout,
                )?;
            } else {
                write!(
                    stderr,
                    "census: {} instances, {} gradable",
                    report.instances, report.gradable
                )?;
                if oracle_check {
                    write!(
                        stderr,
                        "; oracle checked {} (skipped {}), {} disagreements",
                        report.oracle_checked,
                        report.oracle_skipped,
                        report.disagreements.len()
                    )?;
                }
                writeln!(stderr)?;
            }
            Ok(if report.disagreements.is_empty() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Cmd::OracleGrade(a) => {
            let doc = load(&a.input, stdin, stderr)?;
            let g = need_arrows(&doc, "oracle-grade", stderr)?;
            match oracle::oracle_gradable(g) {
                Ok(Some(grading)) => {
                    if a.json {
                        emit_json(
                            &CheckJson {
                                gradable: true,
                                grading: Some(GradingJson::of(&grading)),
                                obstruction: None,
                            },
                            stdout,
                        )?;
                    } else {
                        grading_lines(&grading, stdout)?;
                    }
                    Ok(EXIT_OK)
                }
                Ok(None) => {
                    if a.json {
                        emit_json(
                            &CheckJson { gradable: false, grading: None, obstruction: None },
                            stdout,
                        )?;
                    } else {
                        writeln!(stderr, "not gradable: exhaustive search found no grading")?;
                    }
                    Ok(EXIT_NEGATIVE)
                }
                Err(too_large) => {
                    writeln!(stderr, "error: {too_large}")?;
                    Err(Failure(EXIT_USAGE))
                }
            }
        }
    }
}

//! Command-line front end.
//!
//! Every command builds a [`report::ReportDocument`] and prints it as JSON,
//! or writes it to `--json PATH` and prints a one-line summary. Exit codes
//! are [`EXIT_OK`], [`EXIT_ERROR`], [`EXIT_UNSUPPORTED`] and
//! [`EXIT_MISMATCH`].

pub mod corpus;
pub mod formats;
pub mod report;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::citations::{self, *};
use crate::homcheck::{
    check_abelianized, check_rational_two_connected, consequence_report, ConsequenceReport, Verdict,
};
use crate::laurent::{alexander_data, laurent_rank, snf_int, AlexanderData, IntMatrix};
use crate::presentations::{parse_hom_file, parse_presentation, Presentation};
use crate::series::{
    completion_descriptor, rank_report, strebel_lower_bound, strebel_lower_bound_skew, LevelOutcome, Method,
    RankReport, TowerDescriptor, MAX_LEVEL,
};
use crate::skewfield::skew_matrix_rank;
use report::{sha256_hex, Input, ReportDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "tfds", version, about = "Torsion-free derived series invariants of finitely presented groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ranks, stabilization and completion data of a presentation.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = MAX_LEVEL)]
        level: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Rational 2-connectivity of a homomorphism and its consequences.
    CheckMap {
        file: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// The bundled corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Rank of a matrix over Z, Q(t1..tb) or the Ore field of a tower.
    Rank {
        file: PathBuf,
        /// `int`, `laurent:<b>` or `skew:<tower-file>`.
        #[arg(long)]
        ring: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    List {
        #[arg(long)]
        json: Option<PathBuf>,
    },
    Run {
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn error(message: impl Into<String>) -> Self {
        Failure { code: EXIT_ERROR, message: message.into() }
    }
}

/// Output of a command: the JSON document, a summary line and an exit code.
pub struct Outcome {
    pub json: String,
    pub summary: String,
    pub code: i32,
}

/// Parses arguments, runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    let json_path = match &cli.command {
        Command::Analyze { json, .. } | Command::CheckMap { json, .. } | Command::Rank { json, .. } => json.clone(),
        Command::Corpus { action: CorpusAction::List { json } | CorpusAction::Run { json, .. } } => json.clone(),
    };
    match execute(&cli.command) {
        Ok(out) => {
            match json_path {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &out.json) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return EXIT_ERROR;
                    }
                    println!("{}", out.summary);
                }
                None => print!("{}", out.json),
            }
            if out.code != EXIT_OK {
                eprintln!("{}", out.summary);
            }
            out.code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

pub fn execute(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Analyze { file, level, .. } => analyze(file, *level),
        Command::CheckMap { file, .. } => check_map(file),
        Command::Corpus { action: CorpusAction::List { .. } } => Ok(corpus_list()),
        Command::Corpus { action: CorpusAction::Run { threads, .. } } => corpus_run(*threads),
        Command::Rank { file, ring, .. } => rank(file, ring),
    }
}

fn read(path: &Path) -> Result<(String, Vec<u8>), Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::error(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Failure::error(format!("{} is not valid UTF-8", path.display())))?;
    Ok((text, bytes))
}

/// A symbolic statement about the quotients `G/G^(n)_H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientClaim {
    pub statement: String,
    pub levels: &'static str,
    pub citation: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub group: String,
    #[serde(flatten)]
    pub ranks: RankReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alexander: Option<AlexanderData>,
    pub completion: Option<TowerDescriptor>,
    pub claims: Vec<QuotientClaim>,
    pub notes: Vec<String>,
}

fn free_abelian(b: usize) -> String {
    match b {
        0 => "1".to_string(),
        1 => "Z".to_string(),
        _ => format!("Z^{b}"),
    }
}

/// Builds the `analyze` payload and the citations it relies on.
pub fn analyze_presentation(p: &Presentation, fallback: &str, level: usize) -> (AnalyzeReport, Vec<&'static str>) {
    let group = p.name().unwrap_or(fallback).to_string();
    let ranks = rank_report(p, level);
    let b = ranks.beta1;
    let mut tags = vec![RANK_FORMULA, COMPLETION_TOWER];
    let mut claims = Vec::new();
    let mut notes = Vec::new();
    match ranks.stabilization.stabilized_at {
        Some(0) => {
            claims.push(QuotientClaim {
                statement: format!("{group}/{group}^(n)_H = 1"),
                levels: "0 <= n <= omega",
                citation: FINITE_ABELIANIZATION,
            });
            tags.extend([FINITE_ABELIANIZATION, STABILIZATION]);
        }
        Some(k) => {
            let limit = if k == 1 { free_abelian(b) } else { format!("{group}/{group}^(2)_H") };
            claims.push(QuotientClaim {
                statement: format!("{group}/{group}^(n)_H = {limit}"),
                levels: if k == 1 { "1 <= n <= omega" } else { "2 <= n <= omega" },
                citation: STABILIZATION,
            });
            tags.push(STABILIZATION);
        }
        None => {}
    }
    if b == 1 {
        tags.push(TORSION_ALEXANDER_MODULE);
    }
    if p.num_relators() == 0 {
        tags.push(FREE_GROUP_RANKS);
    }
    for l in &ranks.levels {
        match l {
            LevelOutcome::Unsupported(_) => tags.push(LEVEL_CAP),
            LevelOutcome::Computed(r) if r.method == Method::MagnusSkewElimination => tags.push(AUGMENTATION_BOUND),
            LevelOutcome::Computed(_) => {}
        }
    }
    if group.starts_with("nonfg-trunc") {
        tags.push(TRUNCATION);
        notes
            .push("finite truncation of an infinitely generated group: it approximates but does not realize it".into());
    }
    let alexander = if b == 1 { alexander_data(p).ok() } else { None };
    let completion = completion_descriptor(p, level.min(MAX_LEVEL)).ok();
    (AnalyzeReport { group, ranks, alexander, completion, claims, notes }, citations::normalize(tags))
}

fn file_stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| "G".to_string(), |s| s.to_string_lossy().into_owned())
}

fn analyze(path: &Path, level: usize) -> Result<Outcome, Failure> {
    let (text, bytes) = read(path)?;
    let p = parse_presentation(&text).map_err(|e| Failure::error(format!("{}: {e}", path.display())))?;
    let (payload, cites) = analyze_presentation(&p, &file_stem(path), level);
    let unsupported: Vec<String> = payload
        .ranks
        .levels
        .iter()
        .filter_map(|l| match l {
            LevelOutcome::Unsupported(u) => Some(format!("level {}: {}", u.level, u.reason.code())),
            LevelOutcome::Computed(_) => None,
        })
        .collect();
    let ranks: Vec<String> = payload
        .ranks
        .levels
        .iter()
        .enumerate()
        .map(|(n, l)| format!("r{n}={}", l.rank().map_or("unsupported".to_string(), |r| r.to_string())))
        .collect();
    let mut summary = format!("{}: beta1={} {}", payload.group, payload.ranks.beta1, ranks.join(" "));
    if let Some(k) = payload.ranks.stabilization.stabilized_at {
        summary.push_str(&format!(" stabilized at {k}"));
    }
    let code = if unsupported.is_empty() {
        EXIT_OK
    } else {
        summary.push_str(&format!(" (unsupported: {})", unsupported.join(", ")));
        EXIT_UNSUPPORTED
    };
    let doc = ReportDocument::new(Input::new(path.display().to_string(), &bytes), payload, cites);
    Ok(Outcome { json: doc.to_json(), summary, code })
}

#[derive(Clone, Debug, Serialize)]
pub struct MapReport {
    pub map: String,
    pub source: String,
    pub target: String,
    pub verdict: Verdict,
    pub consequences: ConsequenceReport,
}

/// Resolves a map endpoint: a file next to the map (with or without a
/// `.pres` extension), else a corpus name.
fn load_endpoint(dir: &Path, name: &str) -> Result<Presentation, Failure> {
    for candidate in [dir.join(format!("{name}.pres")), dir.join(name)] {
        if candidate.is_file() {
            let (text, _) = read(&candidate)?;
            return parse_presentation(&text).map_err(|e| Failure::error(format!("{}: {e}", candidate.display())));
        }
    }
    corpus::presentation(name).ok_or_else(|| Failure::error(format!("cannot find presentation `{name}`")))
}

fn check_map(path: &Path) -> Result<Outcome, Failure> {
    let (text, bytes) = read(path)?;
    let file = parse_hom_file(&text).map_err(|e| Failure::error(format!("{}: {e}", path.display())))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let source = load_endpoint(dir, &file.from)?;
    let target = load_endpoint(dir, &file.to)?;
    let h = file.resolve(&source, &target).map_err(|e| Failure::error(format!("{}: {e}", path.display())))?;
    check_abelianized(&h).map_err(|e| Failure::error(e.to_string()))?;
    let mut verdict = check_rational_two_connected(&h);
    if file.assert_onto {
        verdict = verdict.with_onto_assertion(&h);
    }
    let consequences = consequence_report(&h, &verdict);
    let name = file.name.clone().unwrap_or_else(|| file_stem(path));
    let mut cites = consequences.citations.clone();
    cites.extend([RATIONAL_TWO_CONNECTED, H2_VANISHING]);
    let cites = citations::normalize(cites);
    let broken: Vec<String> = consequences
        .ranks
        .iter()
        .filter(|c| !c.consistent())
        .map(|c| format!("r{} differs: {:?} vs {:?}", c.level, c.source, c.target))
        .collect();
    let ranks: Vec<String> = consequences
        .ranks
        .iter()
        .map(|c| {
            let f = |v: Option<usize>| v.map_or("?".to_string(), |x| x.to_string());
            format!("r{}: {} vs {}", c.level, f(c.source), f(c.target))
        })
        .collect();
    let summary = format!(
        "{name}: h1_mono={} h1_iso={} h2_epi={} certified={} {}",
        verdict.h1_mono,
        verdict.h1_iso,
        verdict.h2_epi.code(),
        verdict.certified(),
        ranks.join(", ")
    );
    let payload = MapReport {
        map: name,
        source: consequences.source.clone(),
        target: consequences.target.clone(),
        verdict,
        consequences,
    };
    if !broken.is_empty() {
        return Err(Failure::error(format!("rank equality violated: {}", broken.join("; "))));
    }
    let doc = ReportDocument::new(Input::new(path.display().to_string(), &bytes), payload, cites);
    Ok(Outcome { json: doc.to_json(), summary, code: EXIT_OK })
}

fn corpus_digest() -> Input {
    let mut all = Vec::new();
    for (name, text) in corpus::PRESENTATIONS.iter().chain(corpus::MAPS) {
        all.extend_from_slice(name.as_bytes());
        all.push(0);
        all.extend_from_slice(text.as_bytes());
        all.push(0);
    }
    Input { path: "corpus".to_string(), sha256: sha256_hex(&all) }
}

#[derive(Clone, Debug, Serialize)]
struct CorpusListing {
    entries: Vec<corpus::CorpusEntry>,
    maps: Vec<&'static str>,
    presentations: Vec<&'static str>,
}

fn corpus_list() -> Outcome {
    let entries = corpus::entries();
    let names: Vec<&str> = entries.iter().map(|e| e.name).collect();
    let cites = citations::normalize(entries.iter().flat_map(|e| e.citations.iter().copied()));
    let listing = CorpusListing {
        entries,
        maps: corpus::MAPS.iter().map(|m| m.0).collect(),
        presentations: corpus::PRESENTATIONS.iter().map(|p| p.0).collect(),
    };
    let doc = ReportDocument::new(corpus_digest(), listing, cites);
    Outcome { json: doc.to_json(), summary: names.join("\n"), code: EXIT_OK }
}

/// Runs the corpus on a pool of the given size.
pub fn corpus_run_document(threads: Option<usize>) -> Result<(String, corpus::CorpusRun), Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| Failure::error(format!("thread pool: {e}")))?;
    let run = pool.install(corpus::run_corpus);
    let cites = citations::normalize(corpus::entries().iter().flat_map(|e| e.citations.clone()));
    let doc = ReportDocument::new(corpus_digest(), run.clone(), cites);
    Ok((doc.to_json(), run))
}

fn corpus_run(threads: Option<usize>) -> Result<Outcome, Failure> {
    let (json, run) = corpus_run_document(threads)?;
    let total = run.results.len();
    let passed = run.results.iter().filter(|r| r.pass).count();
    let mut summary = format!("corpus: {passed}/{total} pass");
    for m in &run.mismatches {
        summary.push_str(&format!("\nmismatch: {m}"));
    }
    let code = if run.mismatches.is_empty() { EXIT_OK } else { EXIT_MISMATCH };
    Ok(Outcome { json, summary, code })
}

#[derive(Clone, Debug, Serialize)]
pub struct RankResult {
    pub ring: String,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// Rank of the augmentation over `Q`; a lower bound for `rank`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub augmentation_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant_factors: Option<Vec<String>>,
}

fn rank(path: &Path, ring: &str) -> Result<Outcome, Failure> {
    let (text, bytes) = read(path)?;
    let fmt_err = |e: formats::FormatError| Failure::error(format!("{}: {e}", path.display()));
    let result = if ring == "int" {
        let m = formats::parse_matrix(&text, 0).map_err(fmt_err)?;
        let ints = m
            .to_rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| {
                        let c = p.constant_term();
                        if c.is_integer() && p.terms().count() <= 1 {
                            Ok(c.to_integer())
                        } else {
                            Err(Failure::error(format!("{}: entry `{p}` is not an integer", path.display())))
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let im = IntMatrix::from_rows(ints, m.cols());
        let snf = snf_int(&im);
        let factors: Vec<String> =
            snf.diagonal().iter().filter(|d| !num_traits::Zero::is_zero(*d)).map(ToString::to_string).collect();
        RankResult {
            ring: ring.to_string(),
            rows: m.rows(),
            cols: m.cols(),
            rank: snf.rank(),
            augmentation_bound: None,
            invariant_factors: Some(factors),
        }
    } else if let Some(b) = ring.strip_prefix("laurent:") {
        let b: usize = b.parse().map_err(|_| Failure::error(format!("bad ring `{ring}`")))?;
        let m = formats::parse_matrix(&text, b).map_err(fmt_err)?;
        RankResult {
            ring: ring.to_string(),
            rows: m.rows(),
            cols: m.cols(),
            rank: laurent_rank(&m),
            augmentation_bound: Some(strebel_lower_bound(&m)),
            invariant_factors: None,
        }
    } else if let Some(tf) = ring.strip_prefix("skew:") {
        let tower_path = Path::new(tf);
        let (tower_text, _) = read(tower_path)?;
        let tower =
            formats::parse_tower(&tower_text).map_err(|e| Failure::error(format!("{}: {e}", tower_path.display())))?;
        let nvars = tower.b() + tower.module_rank();
        let m = formats::parse_matrix(&text, nvars).map_err(fmt_err)?;
        let sm = m.map(|p| formats::tower_element(&tower, p));
        RankResult {
            ring: ring.to_string(),
            rows: m.rows(),
            cols: m.cols(),
            rank: skew_matrix_rank(&tower, &sm),
            augmentation_bound: strebel_lower_bound_skew(&tower, &sm),
            invariant_factors: None,
        }
    } else {
        return Err(Failure::error(format!("unknown ring `{ring}`; expected int, laurent:<b> or skew:<tower-file>")));
    };
    let summary = format!("rank {} ({}x{} over {})", result.rank, result.rows, result.cols, result.ring);
    let cites = if result.augmentation_bound.is_some() { vec![AUGMENTATION_BOUND] } else { Vec::new() };
    let doc = ReportDocument::new(Input::new(path.display().to_string(), &bytes), result, cites);
    Ok(Outcome { json: doc.to_json(), summary, code: EXIT_OK })
}

//! `tdgame`: solve, recognize, enumerate, verify and play from the shell.
//!
//! Everything goes through [`run`], which takes the argument list and the
//! three standard streams so that tests can drive it without a process.

use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tdgame_core::enumerate::{forests, trees};
use tdgame_core::family::{recognize_fstar, strong_support_reduction, FStarCertificate, FamilyMember};
use tdgame_core::solver::min_td_set;
use tdgame_core::verify::{Harness, SubsetMode, VerificationReport};
use tdgame_core::{canon, parse_graph, solve, DominationState, Error, Graph, Mover, Solver, Vertex, VertexSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "tdgame", version, about = "Exact solver for the total domination game")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Game values and optimal first moves (`-` reads the graph from stdin)
    Solve {
        file: PathBuf,
        /// Already dominated vertices, e.g. `0,3,4`
        #[arg(long, value_parser = parse_ids)]
        dominated: Option<VertexSet>,
        /// Report only the game with this player to move
        #[arg(long)]
        start: Option<Mover>,
        #[arg(long)]
        json: bool,
    },
    /// Total domination number and a minimum total dominating set
    Gammat {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Membership in F* with its certificate
    Recognize {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Canonical codes of all trees (or isolate-free forests) of one order
    Enum {
        n: usize,
        #[arg(long)]
        forests: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run verification checks and write JSON reports
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        theorem: Theorem,
        /// Instance size bound; each check has its own default
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Dominated sets in the forest check
        #[arg(long, default_value = "exhaustive", value_parser = ["exhaustive", "sampled"])]
        subsets: String,
        /// Worker threads, 0 for all cores
        #[arg(long, env = "TDGAME_JOBS", default_value_t = 0)]
        jobs: usize,
        /// Directory for `<check>.json` report files
        #[arg(long)]
        reports: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Play against the optimal engine
    Play {
        file: PathBuf,
        /// Which side you take
        #[arg(long)]
        human: Mover,
        /// Who moves first
        #[arg(long, default_value = "dominator")]
        start: Mover,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Continuation,
    Gap,
    Lemma31,
    Structural,
    All,
}

impl Theorem {
    fn default_max_n(self) -> usize {
        match self {
            Theorem::One | Theorem::Gap | Theorem::Continuation => 10,
            Theorem::Two => 13,
            Theorem::Lemma31 => 8,
            Theorem::Structural => 9,
            Theorem::All => unreachable!("expanded before use"),
        }
    }
}

fn parse_ids(s: &str) -> Result<VertexSet, String> {
    if s.is_empty() {
        return Ok(VertexSet::EMPTY);
    }
    let mut set = VertexSet::EMPTY;
    for part in s.split(',') {
        let v: Vertex = part.parse().map_err(|_| format!("`{part}` is not a vertex id"))?;
        if v >= tdgame_core::graph::MAX_VERTICES {
            return Err(format!("vertex {v} is too large"));
        }
        set.insert(v);
    }
    Ok(set)
}

/// Failure that ends a command with an exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let to_out = !e.use_stderr();
            let text = e.render().to_string();
            let _ = if to_out { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if to_out { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(cli.command, input, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Solve { file, dominated, start, json } => {
            let g = read_graph(&file, input)?;
            cmd_solve(&g, dominated, start, json, out)?;
        }
        Command::Gammat { file, json } => {
            let g = read_graph(&file, input)?;
            cmd_gammat(&g, json, out)?;
        }
        Command::Recognize { file, json } => {
            let g = read_graph(&file, input)?;
            cmd_recognize(&g, json, out)?;
        }
        Command::Enum { n, forests, json } => cmd_enum(n, forests, json, out)?,
        Command::Verify { theorem, max_n, samples, seed, subsets, jobs, reports, json } => {
            let mode: SubsetMode = subsets.parse()?;
            let opts = VerifyOptions { max_n, samples, seed, mode, jobs };
            return cmd_verify(theorem, &opts, reports.as_deref(), json, out);
        }
        Command::Play { file, human, start } => {
            let g = read_graph(&file, input)?;
            play(&g, human, start, input, out)?;
        }
    }
    Ok(EXIT_OK)
}

fn read_graph(file: &Path, input: &mut dyn BufRead) -> Result<Graph, Failure> {
    let text = if file == Path::new("-") {
        let mut s = String::new();
        input.read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(file)
            .map_err(|e| Failure { code: EXIT_USAGE, message: format!("{}: {e}", file.display()) })?
    };
    Ok(parse_graph(&text)?)
}

fn ids(s: VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct PartialSolve {
    dominated: VertexSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    dtg: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stg: Option<usize>,
    optimal_first_moves_dominator: Option<VertexSet>,
    optimal_first_moves_staller: Option<VertexSet>,
}

pub fn cmd_solve(g: &Graph, dominated: Option<VertexSet>, start: Option<Mover>, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    if dominated.is_none() && start.is_none() {
        let r = solve(g)?;
        if json {
            writeln!(out, "{}", serde_json::to_string(&r).expect("serializable"))?;
        } else {
            writeln!(out, "gamma_t={} dtg={} stg={}", r.gamma_t, r.dtg, r.stg)?;
            writeln!(out, "optimal_dominator={}", ids(r.optimal_first_moves_dominator))?;
            writeln!(out, "optimal_staller={}", ids(r.optimal_first_moves_staller))?;
        }
        return Ok(());
    }
    let s = dominated.unwrap_or(VertexSet::EMPTY);
    if let Some(v) = s.iter().find(|&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.order() }.into());
    }
    let mut solver = Solver::new(g)?;
    let terminal = s == g.vertices();
    let wants = |m: Mover| start.is_none_or(|st| st == m);
    let mut moves = |m: Mover| -> Option<VertexSet> {
        (wants(m) && !terminal).then(|| solver.optimal_moves(s, m).expect("non-terminal"))
    };
    let (opt_d, opt_s) = (moves(Mover::Dominator), moves(Mover::Staller));
    let r = PartialSolve {
        dominated: s,
        dtg: wants(Mover::Dominator).then(|| solver.dtg(s)),
        stg: wants(Mover::Staller).then(|| solver.stg(s)),
        optimal_first_moves_dominator: opt_d,
        optimal_first_moves_staller: opt_s,
    };
    if json {
        writeln!(out, "{}", serde_json::to_string(&r).expect("serializable"))?;
        return Ok(());
    }
    let values: Vec<String> =
        [("dtg", r.dtg), ("stg", r.stg)].iter().filter_map(|(k, v)| v.map(|v| format!("{k}={v}"))).collect();
    writeln!(out, "{}", values.join(" "))?;
    if let Some(m) = r.optimal_first_moves_dominator {
        writeln!(out, "optimal_dominator={}", ids(m))?;
    }
    if let Some(m) = r.optimal_first_moves_staller {
        writeln!(out, "optimal_staller={}", ids(m))?;
    }
    Ok(())
}

pub fn cmd_gammat(g: &Graph, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let set = min_td_set(g)?;
    if json {
        #[derive(Serialize)]
        struct GammaT {
            gamma_t: usize,
            set: VertexSet,
        }
        writeln!(out, "{}", serde_json::to_string(&GammaT { gamma_t: set.len(), set }).expect("serializable"))?;
    } else {
        writeln!(out, "gamma_t={}", set.len())?;
        writeln!(out, "set={}", ids(set))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct Recognition {
    in_fstar: bool,
    /// Vertex ids refer to the input graph.
    certificate: Option<FStarCertificate>,
}

pub fn cmd_recognize(g: &Graph, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let mut cert = recognize_fstar(g)?;
    // the recognizer works on the reduced tree; translate ids back
    if let Some(FStarCertificate::Reduced { base: FamilyMember::F1(d), .. }) = &mut cert {
        let (_, kept) = strong_support_reduction(g)?;
        d.center = kept[d.center];
        for b in &mut d.branches {
            b.link = kept[b.link];
        }
    }
    if json {
        let r = Recognition { in_fstar: cert.is_some(), certificate: cert };
        writeln!(out, "{}", serde_json::to_string(&r).expect("serializable"))?;
        return Ok(());
    }
    match cert {
        None => writeln!(out, "in_fstar=false")?,
        Some(FStarCertificate::Star) => writeln!(out, "in_fstar=true\nvia=star")?,
        Some(FStarCertificate::Reduced { removed_leaves, base }) => {
            writeln!(out, "in_fstar=true")?;
            let name = match &base {
                FamilyMember::K2 => "K2",
                FamilyMember::F10 => "F10",
                FamilyMember::F1(_) => "F1",
            };
            writeln!(out, "via=reduced removed_leaves={removed_leaves} base={name}")?;
            if let FamilyMember::F1(d) = base {
                writeln!(out, "center={} k=({},{},{},{})", d.center, d.k1, d.k2, d.k3, d.k4)?;
            }
        }
    }
    Ok(())
}

pub fn cmd_enum(n: usize, forest: bool, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let codes: Vec<canon::CanonicalCode> = if forest {
        let mut c = forests(n)?.iter().map(canon::forest_code).collect::<Result<Vec<_>, _>>()?;
        c.sort();
        c
    } else {
        trees(n)?.map(|(c, _)| c).collect()
    };
    if json {
        writeln!(out, "{}", serde_json::to_string(&codes).expect("serializable"))?;
    } else {
        for c in codes {
            writeln!(out, "{c}")?;
        }
    }
    Ok(())
}

pub struct VerifyOptions {
    pub max_n: Option<usize>,
    pub samples: usize,
    pub seed: u64,
    pub mode: SubsetMode,
    pub jobs: usize,
}

/// Runs the selected checks; exit 1 iff any report has a violation.
pub fn cmd_verify(theorem: Theorem, opts: &VerifyOptions, reports: Option<&Path>, json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let selected = match theorem {
        Theorem::All => vec![
            Theorem::One,
            Theorem::Two,
            Theorem::Continuation,
            Theorem::Gap,
            Theorem::Lemma31,
            Theorem::Structural,
        ],
        t => vec![t],
    };
    let harness = Harness::new(opts.jobs)?;
    let mut all: Vec<VerificationReport> = Vec::new();
    for t in selected {
        let n = opts.max_n.unwrap_or_else(|| t.default_max_n());
        let report = match t {
            Theorem::One => harness.verify_theorem1(n, opts.mode, opts.samples, opts.seed)?,
            Theorem::Two => harness.verify_theorem2(n)?,
            Theorem::Continuation => harness.verify_continuation(n, opts.samples, opts.seed)?,
            Theorem::Gap => harness.verify_gap_le_one(n, opts.samples, opts.seed)?,
            Theorem::Lemma31 => harness.verify_lemma_main1(n)?,
            Theorem::Structural => harness.verify_structural_lemmas(n)?,
            Theorem::All => unreachable!(),
        };
        if let Some(dir) = reports {
            report.write_to(dir)?;
        }
        if !json {
            let verdict = if report.passed { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{} {verdict} max_n={} instances={} states={} violations={} time={:.2}s",
                report.check,
                report.bounds.max_n,
                report.instances,
                report.states,
                report.violations.len(),
                report.wall_time_secs
            )?;
            for (rule, count) in &report.violation_counts {
                writeln!(out, "  {count} x {rule}")?;
            }
        }
        all.push(report);
    }
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&all).expect("serializable"))?;
    }
    Ok(if all.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_VIOLATION })
}

/// How an interactive game ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaySummary {
    pub moves: Vec<Vertex>,
    /// Game length under optimal play from the start.
    pub optimal: usize,
}

/// Interactive game: the engine answers with its smallest optimal move, the
/// human is re-prompted until they enter a legal one.
pub fn play<R: BufRead + ?Sized, W: Write + ?Sized>(
    g: &Graph,
    human: Mover,
    start: Mover,
    input: &mut R,
    out: &mut W,
) -> Result<PlaySummary, Failure> {
    let mut solver = Solver::new(g)?;
    let mut state = DominationState::new(g);
    let optimal = solver.value(VertexSet::EMPTY, start);
    let mut mover = start;
    let mut moves = Vec::new();
    writeln!(out, "you are {human}; {start} moves first; optimal play takes {optimal} moves")?;
    while !state.is_terminal() {
        let value = solver.value(state.dominated(), mover);
        writeln!(out, "dominated: {{{}}}", ids(state.dominated()))?;
        writeln!(out, "legal: {}", ids(state.legal_moves()))?;
        writeln!(out, "value: {value} with {mover} to move")?;
        let v = if mover == human {
            let v = read_move(&state, input, out)?;
            writeln!(out, "you play {v}")?;
            v
        } else {
            let v = solver.optimal_moves(state.dominated(), mover)?.first().expect("optimal move exists");
            writeln!(out, "engine plays {v}")?;
            v
        };
        state = state.apply_move(v)?;
        moves.push(v);
        mover = mover.other();
    }
    writeln!(out, "game over after {} moves (optimal: {optimal})", moves.len())?;
    Ok(PlaySummary { moves, optimal })
}

fn read_move<R: BufRead + ?Sized, W: Write + ?Sized>(state: &DominationState<'_>, input: &mut R, out: &mut W) -> Result<Vertex, Failure> {
    let n = state.graph().order();
    loop {
        write!(out, "move> ")?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            return Err(Failure { code: EXIT_USAGE, message: "input ended before the game finished".into() });
        }
        let text = line.trim();
        match text.parse::<Vertex>() {
            Err(_) => writeln!(out, "`{text}` is not a vertex id")?,
            Ok(v) if v >= n => writeln!(out, "vertex {v} is out of range 0..{n}")?,
            Ok(v) if !state.is_legal(v) => writeln!(out, "vertex {v} dominates nothing new")?,
            Ok(v) => return Ok(v),
        }
    }
}

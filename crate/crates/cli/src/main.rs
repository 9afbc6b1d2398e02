//! `posgames`: generate boards, solve games, and check strategies and
//! closed forms from the command line.

mod gen;
mod suites;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use posgames::domination::{domination_number, minimal_dominating_sets, residue, wc_cycle_value, wc_tree_value};
use posgames::solver::{decide, spec_values, Objective, SolverConfig};
use posgames::strategies::{scenario, verify_strategy, Guarantee, Params, CATALOG, DEFAULT_VERIFY_NODE_CAP};
use posgames::{Document, GameSpec, Player, SolveResult};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Parser, Debug)]
#[command(
    name = "posgames",
    version,
    about = "Exact solver for Maker-Breaker and Waiter-Client games"
)]
struct Cli {
    /// Output format for value tables.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for root-level parallel search.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Memo entry cap; overrides POSGAMES_MEMO_CAP.
    #[arg(long, global = true)]
    memo_cap: Option<usize>,
    /// Write a run manifest (command, input digests, seed, wall time, result) here.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a board and write it as JSON.
    Gen(gen::GenArgs),
    /// Solve a game on a board.
    Solve {
        #[arg(value_enum)]
        game: GameArg,
        #[command(flatten)]
        args: SolveArgs,
    },
    /// Domination tools on a graph.
    Dom {
        #[command(subcommand)]
        command: DomCommand,
    },
    /// Print the (rounds, size) frontier of a game.
    Frontier {
        #[arg(value_enum, default_value_t = GameArg::Mb)]
        game: GameArg,
        #[command(flatten)]
        args: SolveArgs,
    },
    /// Run a check suite or verify a catalog strategy.
    Verify(suites::VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GameArg {
    /// Maker-Breaker on a hypergraph.
    Mb,
    /// Waiter-Client on a hypergraph.
    Wc,
    /// Auxiliary edge game on a digraph.
    Aux,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FirstArg {
    Maker,
    Breaker,
}

impl From<FirstArg> for Player {
    fn from(f: FirstArg) -> Self {
        match f {
            FirstArg::Maker => Player::Maker,
            FirstArg::Breaker => Player::Breaker,
        }
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Board file (hypergraph JSON, or digraph JSON for `aux`).
    #[arg(short, long)]
    input: PathBuf,
    /// Maker bias.
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Breaker bias.
    #[arg(long, default_value_t = 1)]
    b: usize,
    #[arg(long, value_enum, default_value_t = FirstArg::Maker)]
    first: FirstArg,
    /// Only decide whether Maker wins within this many rounds.
    #[arg(long)]
    rounds: Option<u32>,
    /// Only decide whether Maker claims a winning set of at most this size.
    #[arg(long)]
    size: Option<usize>,
    /// Maker-owned vertices at the start (`aux` only), e.g. `0,3`.
    #[arg(long, value_delimiter = ',')]
    pre: Vec<usize>,
    /// Breaker opens with a move of this many elements before Maker starts.
    #[arg(long)]
    breaker_opening: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum DomCommand {
    /// Game values of the domination game on a graph.
    Solve {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = DomGame::Wc)]
        game: DomGame,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        b: usize,
        #[arg(long, value_enum, default_value_t = FirstArg::Maker)]
        first: FirstArg,
    },
    /// Domination number.
    Gamma {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Residue graph after removing leaf/neighbour pairs.
    Residue {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Closed-form Waiter-Client value for cycles and trees.
    Closedform {
        #[arg(value_enum)]
        family: ClosedFamily,
        /// Cycle length.
        #[arg(long)]
        n: Option<usize>,
        /// Tree file.
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DomGame {
    Mb,
    Wc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ClosedFamily {
    Cycle,
    Tree,
}

/// Why a run failed, mapped onto the exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Guard(String),
}

impl From<posgames::Error> for Failure {
    fn from(e: posgames::Error) -> Self {
        if e.is_guard() {
            Failure::Guard(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;

/// A command's result: the JSON payload, an optional table for CSV, and
/// whether the checked claim held.
pub struct Output {
    pub payload: Value,
    pub table: Option<Table>,
    pub ok: bool,
    pub seed: Option<u64>,
}

impl Output {
    pub fn new(payload: Value) -> Self {
        Output {
            payload,
            table: None,
            ok: true,
            seed: None,
        }
    }

    fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }
}

pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn to_csv(&self) -> String {
        let cell = |v: &Value| match v {
            Value::Null => String::new(),
            Value::String(s) if s.contains(',') || s.contains('"') => format!("\"{}\"", s.replace('"', "\"\"")),
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.iter().map(cell).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }
}

/// Files read during the run, for the manifest.
#[derive(Default)]
pub struct Inputs(Vec<(PathBuf, String)>);

impl Inputs {
    pub fn read(&mut self, path: &Path) -> CliResult<Document> {
        let bytes = std::fs::read(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        self.0.push((path.to_path_buf(), hex::encode(Sha256::digest(&bytes))));
        let text = String::from_utf8(bytes).map_err(|_| Failure::Usage(format!("{} is not UTF-8", path.display())))?;
        Ok(Document::parse(&text)?)
    }
}

pub struct Ctx {
    pub config: SolverConfig,
    pub inputs: Inputs,
}

fn values_table(r: &SolveResult) -> Table {
    let mut t = Table::new(&["maker_wins", "min_rounds", "min_size"]);
    t.rows.push(vec![
        json!(r.maker_wins),
        json!(r.min_rounds.finite()),
        json!(r.min_size.finite()),
    ]);
    t
}

fn frontier_table(r: &SolveResult) -> Table {
    let mut t = Table::new(&["t", "s"]);
    t.rows.extend(r.frontier.iter().map(|&(a, b)| vec![json!(a), json!(b)]));
    t
}

fn game_spec(ctx: &mut Ctx, game: GameArg, a: &SolveArgs) -> CliResult<GameSpec> {
    let doc = ctx.inputs.read(&a.input)?;
    let mut spec = match game {
        GameArg::Mb => GameSpec::maker_breaker(doc.into_hypergraph()?, a.m, a.b, a.first.into())?,
        GameArg::Wc => GameSpec::waiter_client(doc.into_hypergraph()?),
        GameArg::Aux => GameSpec::aux(doc.into_digraph()?, a.b, &a.pre)?,
    };
    if game != GameArg::Aux && !a.pre.is_empty() {
        return Err(Failure::Usage("--pre only applies to the aux game".into()));
    }
    if let Some(k) = a.breaker_opening {
        if game == GameArg::Wc {
            return Err(Failure::Usage(
                "--breaker-opening does not apply to Waiter-Client".into(),
            ));
        }
        spec = spec.with_breaker_opening(k);
    }
    Ok(spec)
}

fn solve(ctx: &mut Ctx, game: GameArg, a: &SolveArgs) -> CliResult<Output> {
    let spec = game_spec(ctx, game, a)?;
    if a.rounds.is_some() || a.size.is_some() {
        let obj = Objective::new(a.rounds, a.size);
        let wins = decide(&spec, obj, None, &ctx.config)?;
        let payload = json!({"max_rounds": a.rounds, "max_size": a.size, "maker_wins": wins});
        let mut t = Table::new(&["max_rounds", "max_size", "maker_wins"]);
        t.rows.push(vec![json!(a.rounds), json!(a.size), json!(wins)]);
        return Ok(Output::new(payload).with_table(t));
    }
    let r = spec_values(&spec, None, &ctx.config)?;
    let table = values_table(&r);
    Ok(Output::new(Document::from(r).to_value()).with_table(table))
}

fn frontier(ctx: &mut Ctx, game: GameArg, a: &SolveArgs) -> CliResult<Output> {
    let spec = game_spec(ctx, game, a)?;
    let r = spec_values(&spec, None, &ctx.config)?;
    let table = frontier_table(&r);
    Ok(Output::new(json!({"frontier": r.frontier})).with_table(table))
}

fn dom(ctx: &mut Ctx, cmd: &DomCommand) -> CliResult<Output> {
    match cmd {
        DomCommand::Solve {
            input,
            game,
            m,
            b,
            first,
        } => {
            let g = ctx.inputs.read(input)?.into_graph()?;
            let h = minimal_dominating_sets(&g)?;
            let spec = match game {
                DomGame::Mb => GameSpec::maker_breaker(h, *m, *b, (*first).into())?,
                DomGame::Wc => GameSpec::waiter_client(h),
            };
            let r = spec_values(&spec, None, &ctx.config)?;
            let table = values_table(&r);
            Ok(Output::new(Document::from(r).to_value()).with_table(table))
        }
        DomCommand::Gamma { input } => {
            let g = ctx.inputs.read(input)?.into_graph()?;
            let gamma = domination_number(&g)?;
            let mut t = Table::new(&["gamma"]);
            t.rows.push(vec![json!(gamma)]);
            Ok(Output::new(json!({ "gamma": gamma })).with_table(t))
        }
        DomCommand::Residue { input } => {
            let g = ctx.inputs.read(input)?.into_graph()?;
            let r = residue(&g);
            let mut t = Table::new(&["leaf", "neighbour"]);
            t.rows
                .extend(r.removed_pairs.iter().map(|&(v, w)| vec![json!(v), json!(w)]));
            Ok(Output::new(json!({
                "residue": Document::from(r.residue.clone()).to_value(),
                "kept": r.kept,
                "removed_pairs": r.removed_pairs,
            }))
            .with_table(t))
        }
        DomCommand::Closedform { family, n, input } => {
            let value = match (family, n, input) {
                (ClosedFamily::Cycle, Some(n), None) => Some(wc_cycle_value(*n)?),
                (ClosedFamily::Tree, None, Some(path)) => {
                    let t = ctx.inputs.read(path)?.into_graph()?;
                    wc_tree_value(&t)?.finite()
                }
                (ClosedFamily::Cycle, _, _) => return Err(Failure::Usage("cycle needs --n and no --input".into())),
                (ClosedFamily::Tree, _, _) => return Err(Failure::Usage("tree needs --input and no --n".into())),
            };
            let mut t = Table::new(&["value"]);
            t.rows.push(vec![json!(value)]);
            Ok(Output::new(json!({ "value": value })).with_table(t))
        }
    }
}

fn verify(ctx: &mut Ctx, a: &suites::VerifyArgs) -> CliResult<Output> {
    if CATALOG.contains(&a.target.as_str()) {
        let tree = match &a.input {
            Some(p) => Some(ctx.inputs.read(p)?.into_graph()?),
            None => None,
        };
        let params = Params {
            t: a.t,
            b: a.b,
            m: a.m,
            s: a.s,
            n: a.n,
            biases: a.biases.clone(),
            vertex: a.vertex,
            tree,
        };
        let mut sc = scenario(&a.target, &params)?;
        if let Some(r) = a.within {
            sc.guarantee = match sc.guarantee {
                Guarantee::WinWithin(_) => Guarantee::WinWithin(r),
                Guarantee::OpponentNotWithin(_) => Guarantee::OpponentNotWithin(r),
                Guarantee::NeverLoses => return Err(Failure::Usage(format!("{} has no round count", sc.id))),
            };
        }
        let cap = a.node_cap.unwrap_or(DEFAULT_VERIFY_NODE_CAP);
        let v = verify_strategy(&sc.spec, sc.strategy.as_ref(), sc.guarantee, cap)?;
        let mut t = Table::new(&["strategy", "guarantee", "ok", "nodes", "leaves"]);
        t.rows.push(vec![
            json!(sc.id),
            json!(format!("{:?}", sc.guarantee)),
            json!(v.ok),
            json!(v.nodes),
            json!(v.leaves),
        ]);
        let ok = v.ok;
        let mut out = Output::new(json!({
            "strategy": sc.id,
            "board_size": sc.spec.n(),
            "guarantee": sc.guarantee,
            "verdict": v,
        }))
        .with_table(t);
        out.ok = ok;
        return Ok(out);
    }
    suites::run_suite(ctx, a)
}

fn run(cli: &Cli, ctx: &mut Ctx) -> CliResult<Output> {
    match &cli.command {
        Command::Gen(a) => gen::run(ctx, a),
        Command::Solve { game, args } => solve(ctx, *game, args),
        Command::Dom { command } => dom(ctx, command),
        Command::Frontier { game, args } => frontier(ctx, *game, args),
        Command::Verify(a) => verify(ctx, a),
    }
}

fn write_manifest(path: &Path, ctx: &Ctx, out: &Output, wall: f64) -> CliResult<()> {
    let inputs: Vec<Value> = ctx
        .inputs
        .0
        .iter()
        .map(|(p, d)| json!({"path": p.display().to_string(), "sha256": d}))
        .collect();
    let manifest = json!({
        "command": std::env::args().collect::<Vec<_>>(),
        "inputs": inputs,
        "version": env!("CARGO_PKG_VERSION"),
        "seed": out.seed,
        "jobs": ctx.config.jobs,
        "wall_time_secs": wall,
        "ok": out.ok,
        "result": out.payload,
    });
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    std::fs::write(path, text + "\n").map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut config = SolverConfig {
        jobs: cli.jobs.max(1),
        ..SolverConfig::default()
    };
    if let Some(cap) = cli.memo_cap {
        config.memo_cap = cap;
    }
    let mut ctx = Ctx {
        config,
        inputs: Inputs::default(),
    };
    let start = Instant::now();
    let out = match run(&cli, &mut ctx) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("aborted: {msg}");
            return ExitCode::from(3);
        }
    };
    let wall = start.elapsed().as_secs_f64();
    match (&cli.format, &out.table) {
        (Format::Csv, Some(t)) => print!("{}", t.to_csv()),
        _ => println!(
            "{}",
            serde_json::to_string_pretty(&out.payload).expect("payload serializes")
        ),
    }
    if let Some(path) = &cli.manifest {
        if let Err(Failure::Usage(msg) | Failure::Guard(msg)) = write_manifest(path, &ctx, &out, wall) {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use posgames::constructions::{
    build_complete_uniform, build_fast_or_small, build_first_player_split, build_gadget_with, build_gtb, build_h_mbst,
    build_htb, build_large_before_small, build_nonmonotone, build_pair_family, build_split_with_small_edge,
    build_waiter_vs_maker, CoverMode, DEFAULT_GADGET_CAP,
};
use posgames::domination::{minimal_dominating_sets, random_graph, random_tree};
use posgames::{Document, SimpleGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::{CliResult, Ctx, Failure, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    /// Layered digraph G_t(b) (--t, --b).
    Gtb,
    /// Hub digraph H_t(b) (--t, --b).
    Htb,
    /// s-uniform speed hypergraph H(m,b,s,t) (--m, --b, --s, --t).
    Hmbst,
    /// Domination gadget of a hypergraph (--input, --a).
    Gadget,
    /// Block board for a bias set (--biases).
    Nonmonotone,
    /// Two speed hypergraphs where the first player decides the value
    /// (--m, --b, --s, --s2, --t, --t2).
    FirstPlayerSplit,
    /// First-player split plus a smaller winning set (--m, --b, --r, --s, --s2, --t, --t2).
    SplitWithSmallEdge,
    /// Large sets reachable before small ones (--m, --b, --s, --t).
    LargeBeforeSmall,
    /// Fast large sets or slow small ones (--m, --b, --s, --s2, --t, --t2).
    FastOrSmall,
    /// Pair family won by Waiter but not Maker (--t).
    PairFamily,
    /// Pair family plus a complete uniform hypergraph (--s, --t).
    WaiterVsMaker,
    /// All k-subsets of n elements (--n, --k).
    CompleteUniform,
    /// Cycle C_n (--n).
    Cycle,
    /// Path P_n (--n).
    Path,
    /// Star with n leaves (--n).
    Star,
    /// Complete graph K_n (--n).
    Complete,
    /// Uniform random labelled tree (--n, --seed).
    RandomTree,
    /// Erdős-Rényi graph G(n, p) (--n, --p, --seed).
    RandomGraph,
    /// Minimal dominating sets of a graph as a hypergraph (--input).
    Mds,
    /// Minimal transversals of a hypergraph (--input).
    Transversal,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub name: Generator,
    /// Output file; the document goes to standard output when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub t2: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub s2: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Gadget bias.
    #[arg(long, default_value_t = 1)]
    pub a: usize,
    /// Edge probability for random graphs.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Bias set, e.g. `1,2`.
    #[arg(long, value_delimiter = ',')]
    pub biases: Vec<usize>,
    /// Input board for derived generators.
    #[arg(short, long)]
    pub input: Option<PathBuf>,
    /// Gadget over minimal vertex covers only (smaller, but not the full construction).
    #[arg(long)]
    pub minimal_covers: bool,
    /// Vertex cap for the gadget.
    #[arg(long, default_value_t = DEFAULT_GADGET_CAP)]
    pub gadget_cap: usize,
}

fn need(v: Option<usize>, flag: &str) -> CliResult<usize> {
    v.ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

fn input(ctx: &mut Ctx, a: &GenArgs) -> CliResult<Document> {
    let path = a
        .input
        .as_ref()
        .ok_or_else(|| Failure::Usage("missing --input".into()))?;
    ctx.inputs.read(path)
}

fn build(ctx: &mut Ctx, a: &GenArgs) -> CliResult<Document> {
    use Generator::*;
    let t = || need(a.t, "t");
    let b = || need(a.b, "b");
    let m = || need(a.m, "m");
    let s = || need(a.s, "s");
    let n = || need(a.n, "n");
    Ok(match a.name {
        Gtb => build_gtb(t()?, b()?)?.digraph.into(),
        Htb => build_htb(t()?, b()?)?.digraph.into(),
        Hmbst => build_h_mbst(m()?, b()?, s()?, t()?)?.hypergraph.into(),
        Gadget => {
            let h = input(ctx, a)?.into_hypergraph()?;
            let mode = if a.minimal_covers {
                CoverMode::Minimal
            } else {
                CoverMode::All
            };
            build_gadget_with(&h, a.a, mode, a.gadget_cap)?.graph.into()
        }
        Nonmonotone => {
            if a.biases.is_empty() {
                return Err(Failure::Usage("missing --biases".into()));
            }
            build_nonmonotone(&a.biases)?.hypergraph.into()
        }
        FirstPlayerSplit => build_first_player_split(m()?, b()?, s()?, need(a.s2, "s2")?, t()?, need(a.t2, "t2")?)?
            .hypergraph
            .into(),
        SplitWithSmallEdge => build_split_with_small_edge(
            m()?,
            b()?,
            need(a.r, "r")?,
            s()?,
            need(a.s2, "s2")?,
            t()?,
            need(a.t2, "t2")?,
        )?
        .into(),
        LargeBeforeSmall => build_large_before_small(m()?, b()?, s()?, t()?)?.into(),
        FastOrSmall => build_fast_or_small(m()?, b()?, s()?, need(a.s2, "s2")?, t()?, need(a.t2, "t2")?)?
            .hypergraph
            .into(),
        PairFamily => build_pair_family(t()?)?.into(),
        WaiterVsMaker => build_waiter_vs_maker(s()?, t()?)?.into(),
        CompleteUniform => build_complete_uniform(n()?, need(a.k, "k")?)?.into(),
        Cycle => SimpleGraph::cycle(n()?)?.into(),
        Path => SimpleGraph::path(n()?).into(),
        Star => SimpleGraph::star(n()?).into(),
        Complete => SimpleGraph::complete(n()?).into(),
        RandomTree => random_tree(n()?, &mut ChaCha8Rng::seed_from_u64(a.seed)).into(),
        RandomGraph => {
            let p = a.p.ok_or_else(|| Failure::Usage("missing --p".into()))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Failure::Usage(format!("--p must lie in [0, 1], got {p}")));
            }
            random_graph(n()?, p, &mut ChaCha8Rng::seed_from_u64(a.seed)).into()
        }
        Mds => minimal_dominating_sets(&input(ctx, a)?.into_graph()?)?.into(),
        Transversal => {
            let h = input(ctx, a)?.into_hypergraph()?;
            h.transversal()?
                .into_family()
                .ok_or_else(|| Failure::Usage("the board has no winning sets, so every set is a transversal".into()))?
                .into()
        }
    })
}

pub fn run(ctx: &mut Ctx, a: &GenArgs) -> CliResult<Output> {
    let doc = build(ctx, a)?;
    let random = matches!(a.name, Generator::RandomTree | Generator::RandomGraph);
    let mut out = match &a.output {
        None => Output::new(doc.to_value()),
        Some(path) => {
            doc.write(path)?;
            let (count_key, count) = match &doc {
                Document::Hypergraph(h) => ("edges", h.edges().len()),
                Document::Graph(g) => ("edges", g.edge_count()),
                Document::Digraph(d) => ("arcs", d.arcs().len()),
                Document::SolveResult(_) => ("entries", 0),
            };
            let n = match &doc {
                Document::Hypergraph(h) => h.n(),
                Document::Graph(g) => g.n(),
                Document::Digraph(d) => d.nv(),
                Document::SolveResult(_) => 0,
            };
            let mut v = json!({"written": path.display().to_string(), "type": doc.kind(), "n": n});
            v[count_key] = json!(count);
            Output::new(v)
        }
    };
    if random {
        out.seed = Some(a.seed);
    }
    Ok(out)
}

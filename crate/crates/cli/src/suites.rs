//! Named check suites for `posgames verify`. Each suite recomputes a table
//! of values and compares it against the expected closed form.

use clap::Args;
use posgames::constructions::{
    build_gadget, build_gtb, build_h_mbst, build_htb, build_nonmonotone, build_pair_family, build_waiter_vs_maker,
    pair_family_pairs,
};
use posgames::domination::{
    all_trees, domination_number, forest_has_perfect_matching, is_dominating, minimal_dominating_sets, random_tree,
    residue_prediction, wc_cycle_value, wc_tree_value,
};
use posgames::solver::{decide, decide_from, spec_values, Objective};
use posgames::strategies::{
    smallest_scenario, verify_strategy, BreakerPairing, Guarantee, CATALOG, DEFAULT_VERIFY_NODE_CAP,
};
use posgames::{GameSpec, GameValue, Hypergraph, Player, SimpleGraph, SolveResult};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{CliResult, Ctx, Failure, Output, Table};

pub const SUITES: [&str; 10] = [
    "layered-digraphs",
    "hub-digraphs",
    "uniform-speed",
    "nonmonotone",
    "wc-cycles",
    "wc-trees",
    "residue",
    "gadget-claims",
    "waiter-vs-maker",
    "catalog",
];

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// A suite name or a catalog strategy id.
    pub target: String,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub biases: Option<Vec<usize>>,
    /// Preclaimed vertex for `breaker-gtb-block`.
    #[arg(long)]
    pub vertex: Option<usize>,
    /// Tree file for `waiter-tree`.
    #[arg(short, long)]
    pub input: Option<std::path::PathBuf>,
    /// Replace the round count of a strategy's guarantee.
    #[arg(long)]
    pub within: Option<u32>,
    /// Cap on positions visited by the strategy verifier.
    #[arg(long)]
    pub node_cap: Option<u64>,
    /// Largest instance size for sweeping suites.
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long)]
    pub max_t: Option<usize>,
    #[arg(long)]
    pub max_b: Option<usize>,
    /// Number of random instances.
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

struct Report {
    table: Table,
    failures: Vec<String>,
    seed: Option<u64>,
}

impl Report {
    fn new(columns: &[&str]) -> Self {
        Report {
            table: Table::new(columns),
            failures: Vec::new(),
            seed: None,
        }
    }

    fn row(&mut self, ok: bool, cells: Vec<Value>, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
        let mut cells = cells;
        cells.push(json!(ok));
        self.table.rows.push(cells);
    }
}

fn columns<'a>(names: &[&'a str]) -> Vec<&'a str> {
    let mut v = names.to_vec();
    v.push("ok");
    v
}

fn dom_wc(ctx: &Ctx, g: &SimpleGraph) -> CliResult<SolveResult> {
    let spec = GameSpec::waiter_client(minimal_dominating_sets(g)?);
    Ok(spec_values(&spec, None, &ctx.config)?)
}

fn layered_digraphs(ctx: &Ctx, a: &VerifyArgs) -> CliResult<Report> {
    let mut r = Report::new(&columns(&[
        "t",
        "b",
        "within_t",
        "within_t_minus_1",
        "single_vertex_wins",
    ]));
    for t in 1..=a.max_t.unwrap_or(3) {
        for b in 1..=a.max_b.unwrap_or(2) {
            let l = build_gtb(t, b)?;
            let spec = |pre: &[usize]| GameSpec::aux(l.digraph.clone(), b, pre);
            let ends = spec(&[0, t])?;
            let fast = decide(&ends, Objective::rounds(t as u32), None, &ctx.config)?;
            let slow = decide(&ends, Objective::rounds(t as u32 - 1), None, &ctx.config)?;
            let mut single = false;
            for v in 0..l.digraph.nv() {
                single |= decide(&spec(&[v])?, Objective::unbounded(), None, &ctx.config)?;
            }
            let ok = fast && !slow && !single;
            r.row(
                ok,
                vec![json!(t), json!(b), json!(fast), json!(slow), json!(single)],
                || format!("G_{t}({b})"),
            );
        }
    }
    Ok(r)
}

fn hub_digraphs(ctx: &Ctx, a: &VerifyArgs) -> CliResult<Report> {
    let mut r = Report::new(&columns(&[
        "t",
        "b",
        "within_t",
        "within_t_minus_1",
        "wins_after_premove",
    ]));
    let cases = match (a.t, a.b) {
        (Some(t), Some(b)) => vec![(t, b)],
        _ => vec![(3, 1), (3, 2), (4, 1)],
    };
    for (t, b) in cases {
        let l = build_htb(t, b)?;
        let spec = GameSpec::aux(l.digraph.clone(), b, &[])?;
        let fast = decide(&spec, Objective::rounds(t as u32), None, &ctx.config)?;
        let slow = decide(&spec, Objective::rounds(t as u32 - 1), None, &ctx.config)?;
        let mut state = spec.initial_state();
        state.breaker.insert(l.hub(0));
        let after = decide_from(&spec, &state, Objective::unbounded(), None, &ctx.config)?;
        let ok = fast && !slow && !after;
        r.row(
            ok,
            vec![json!(t), json!(b), json!(fast), json!(slow), json!(after)],
            || format!("H_{t}({b})"),
        );
    }
    Ok(r)
}

fn uniform_speed(ctx: &Ctx, a: &VerifyArgs) -> CliResult<Report> {
    let mut r = Report::new(&columns(&[
        "m",
        "b",
        "s",
        "t",
        "restricted",
        "within_t",
        "within_t_minus_1",
        "breaker_first_wins",
    ]));
    let cases = match (a.m, a.b, a.s, a.t) {
        (Some(m), Some(b), Some(s), Some(t)) => vec![(m, b, s, t)],
        _ => vec![(1, 1, 3, 3), (1, 2, 3, 3)],
    };
    for (m, b, s, t) in cases {
        let l = build_h_mbst(m, b, s, t)?;
        for family in [None, Some(l.family.as_slice())] {
            let q = |first, obj| -> CliResult<bool> {
                let spec = GameSpec::maker_breaker(l.hypergraph.clone(), m, b, first)?;
                Ok(decide(&spec, obj, family, &ctx.config)?)
            };
            let fast = q(Player::Maker, Objective::rounds_and_size(t as u32, s))?;
            let slow = q(Player::Maker, Objective::rounds_and_size(t as u32 - 1, s))?;
            let second = q(Player::Breaker, Objective::unbounded())?;
            let restricted = family.is_some();
            let cells = vec![
                json!(m),
                json!(b),
                json!(s),
                json!(t),
                json!(restricted),
                json!(fast),
                json!(slow),
                json!(second),
            ];
            r.row(fast && !slow && !second, cells, || {
                format!("H({m},{b},{s},{t}) restricted={restricted}")
            });
        }
    }
    Ok(r)
}

fn nonmonotone(ctx: &Ctx, a: &VerifyArgs) -> CliResult<Report> {
    let mut r = Report::new(&columns(&["biases", "b", "maker_wins", "expected"]));
    let sets = match &a.biases {
        Some(b) => vec![b.clone()],
        None => vec![vec![1], vec![2], vec![1, 2]],
    };
    for biases in sets {
        let l = build_nonmonotone(&biases)?;
        for b in 1..=a.max_b.unwrap_or(4) {
            let spec = GameSpec::maker_breaker(l.hypergraph.clone(), b, b, Player::Maker)?;
            let wins = decide(&spec, Objective::unbounded(), None, &ctx.config)?;
            let expected = !biases.contains(&b);
            let label = biases.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            r.row(
                wins == expected,
                vec![json!(label), json!(b), json!(wins), json!(expected)],
                || format!("B={biases:?} b={b}"),
            );
        }
    }
    Ok(r)
}

fn wc_cycles(ctx: &Ctx, a: &VerifyArgs) -> CliResult<Report> {
    let mut r = Report::new(&columns(&["n", "min_rounds", "min_size", "closed_form"]));
    for n in 3..=a.max_n.unwrap_or(9) {
        let v = dom_wc(ctx, &SimpleGraph::cycle(n)?)?;
        let c = wc_cycle_value(n)?;
        let ok = v.min_rounds == GameValue::Finite(c) && v.min_size == GameValue::Finite(c);
        let cells = vec![
            json!(n),
            json!(v.min_rounds.finite()),
            json!(v.min_size.finite()),
            json!(c),
        ];
        r.row(ok, cells, || format!("C_{n}"));
    }
    Ok(r)
}

fn tree_row(ctx: &Ctx, r: &mut Report, t: &SimpleGraph) -> CliResult<()> {
    let v = dom_wc(ctx, t)?;
    let pm = forest_has_perfect_matching(t)?;
    let closed = wc_tree_value(t)?;
    let want = if pm {
        GameValue::Finite(t.n() / 2)
    } else {
        GameValue::Infinite
    };
    let ok = v.min_rounds == want && v.min_size == want && closed == want;
    let edges = t.edges();
    let cells = vec![
        json!(t.n()),
        json!(format!("{edges:?}")),
        json!(pm),
        json!(v.min_rounds.finite()),
        json!(v.min_size.finite()),
        json!(closed.finite()),
    ];
    r.row(ok, cells, || format!("tree {edges:?}"));
    Ok(())
}

fn wc_trees(ctx: &Ctx, a: &VerifyArgs) -> CliResult<Report> {
    let mut r = Report::new(&columns(&[
        "n",
        "edges",
        "perfect_matching",
        "min_rounds",
        "min_size",
        "closed_form",
    ]));
    let max_n = a.max_n.unwrap_or(8);
    for n in 1..=max_n {
        for t in all_trees(n)? {
            tree_row(ctx, &mut r, &t)?;
        }
    }
    let count = a.count.unwrap_or(0);
    if count > 0 {
        r.seed = Some(a.seed);
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        for n in [max_n + 1, max_n + 2] {
            for _ in 0..count {
                tree_row(ctx, &mut r, &random_tree(n, &mut rng))?;
            }
        }
    }
    Ok(r)
}

fn plus_one(v: GameValue) -> GameValue {
    match v {
        GameValue::Finite(k) => GameValue::Finite(k + 1),
        GameValue::Infinite => GameValue::Infinite,
    }
}

fn residue_suite(ctx: &Ctx, a: &VerifyArgs) -> CliResult<Report> {
    let mut r = Report::new(&columns(&[
        "edges",
        "leaf",
        "neighbour",
        "min_rounds",
        "rest_min_rounds",
        "min_size",
        "rest_min_size",
        "predicted",
    ]));
    r.seed = Some(a.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let max_n = a.max_n.unwrap_or(10).max(3);
    let count = a.count.unwrap_or(50);
    let mut done = 0;
    let mut tries = 0;
    while done < count {
        tries += 1;
        if tries > 100 * count + 1000 {
            return Err(Failure::Usage("too few random trees have a removable pair".into()));
        }
        let g = random_tree(rng.gen_range(3..=max_n), &mut rng);
        let pairs: Vec<(usize, usize)> = (0..g.n())
            .filter(|&v| g.degree(v) == 1)
            .map(|v| (v, g.neighbors(v)[0]))
            .filter(|&(_, w)| g.degree(w) == 2)
            .collect();
        let Some(&(v, w)) = pairs.choose(&mut rng) else {
            continue;
        };
        let whole = dom_wc(ctx, &g)?;
        let rest = dom_wc(ctx, &g.remove_vertices(&[v, w]).0)?;
        let predicted = residue_prediction(&g)?;
        let ok = whole.min_rounds == plus_one(rest.min_rounds)
            && whole.min_size == plus_one(rest.min_size)
            && predicted == whole.min_rounds;
        let edges = g.edges();
        let cells = vec![
            json!(format!("{edges:?}")),
            json!(v),
            json!(w),
            json!(whole.min_rounds.finite()),
            json!(rest.min_rounds.finite()),
            json!(whole.min_size.finite()),
            json!(rest.min_size.finite()),
            json!(predicted.finite()),
        ];
        r.row(ok, cells, || format!("tree {edges:?} minus ({v},{w})"));
        done += 1;
    }
    Ok(r)
}

fn random_board(rng: &mut ChaCha8Rng, max_n: usize, max_edges: usize) -> CliResult<Hypergraph> {
    let n = rng.gen_range(1..=max_n);
    let edges = (0..rng.gen_range(1..=max_edges))
        .map(|_| {
            let mut e: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            if e.is_empty() {
                e.push(rng.gen_range(0..n));
            }
            e
        })
        .collect();
    Ok(Hypergraph::new(n, edges)?)
}

fn gadget_claims(_ctx: &Ctx, a: &VerifyArgs) -> CliResult<Report> {
    let mut r = Report::new(&columns(&[
        "edges",
        "vertices",
        "gamma",
        "smallest_edge",
        "edges_dominate",
        "dominating_subsets_contain_edge",
    ]));
    r.seed = Some(a.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    for _ in 0..a.count.unwrap_or(20) {
        let h = random_board(&mut rng, a.max_n.unwrap_or(5).min(8), 4)?;
        let g = build_gadget(&h, 1)?.graph;
        let lists = h.edge_lists();
        let dominate = lists.iter().all(|e| is_dominating(&g, e));
        let gamma = domination_number(&g)?;
        let k = h.min_edge_size().unwrap_or(0);
        let contain = (0u32..1 << h.n()).all(|mask| {
            let d: Vec<usize> = (0..h.n()).filter(|i| mask >> i & 1 == 1).collect();
            !is_dominating(&g, &d) || lists.iter().any(|e| e.iter().all(|x| d.contains(x)))
        });
        let cells = vec![
            json!(format!("{lists:?}")),
            json!(g.n()),
            json!(gamma),
            json!(k),
            json!(dominate),
            json!(contain),
        ];
        r.row(dominate && contain && gamma == k, cells, || {
            format!("gadget of {lists:?}")
        });
    }
    Ok(r)
}

fn waiter_vs_maker(ctx: &Ctx, a: &VerifyArgs) -> CliResult<Report> {
    let (s, t) = (a.s.unwrap_or(3), a.t.unwrap_or(3));
    let mut r = Report::new(&columns(&["game", "within_t", "within_t_minus_1", "pairing_holds"]));
    let h = build_waiter_vs_maker(s, t)?;
    let pairs = build_pair_family(t)?;
    for first in [Player::Maker, Player::Breaker] {
        let spec = GameSpec::maker_breaker(h.clone(), 1, 1, first)?;
        let fast = decide(&spec, Objective::rounds(s as u32), None, &ctx.config)?;
        let slow = decide(&spec, Objective::rounds(s as u32 - 1), None, &ctx.config)?;
        let pspec = GameSpec::maker_breaker(pairs.clone(), 1, 1, first)?;
        let strat = BreakerPairing::new(pairs.n(), &pair_family_pairs())?;
        let held = verify_strategy(&pspec, &strat, Guarantee::NeverLoses, DEFAULT_VERIFY_NODE_CAP)?.ok;
        let cells = vec![
            json!(format!("mb-{first}-first")),
            json!(fast),
            json!(slow),
            json!(held),
        ];
        r.row(fast && !slow && held, cells, || format!("Maker-Breaker, {first} first"));
    }
    let spec = GameSpec::waiter_client(h);
    let fast = decide(&spec, Objective::rounds(t as u32), None, &ctx.config)?;
    let slow = decide(&spec, Objective::rounds(t as u32 - 1), None, &ctx.config)?;
    r.row(
        fast && !slow,
        vec![json!("wc"), json!(fast), json!(slow), Value::Null],
        || "Waiter-Client".into(),
    );
    Ok(r)
}

fn catalog(ctx: &Ctx, a: &VerifyArgs) -> CliResult<Report> {
    let mut r = Report::new(&columns(&[
        "strategy",
        "guarantee",
        "verified",
        "nodes",
        "solver_consistent",
    ]));
    let cap = a.node_cap.unwrap_or(DEFAULT_VERIFY_NODE_CAP);
    for id in CATALOG {
        let sc = smallest_scenario(id)?;
        let v = verify_strategy(&sc.spec, sc.strategy.as_ref(), sc.guarantee, cap)?;
        let consistent = match sc.guarantee {
            Guarantee::WinWithin(_) => {
                let best = spec_values(&sc.spec, None, &ctx.config)?.min_rounds;
                v.maker_win_rounds
                    .is_some_and(|(_, worst)| GameValue::Finite(worst as usize) >= best)
            }
            Guarantee::NeverLoses => !decide(&sc.spec, Objective::unbounded(), None, &ctx.config)?,
            Guarantee::OpponentNotWithin(t) => !decide(&sc.spec, Objective::rounds(t), None, &ctx.config)?,
        };
        let cells = vec![
            json!(id),
            json!(format!("{:?}", sc.guarantee)),
            json!(v.ok),
            json!(v.nodes),
            json!(consistent),
        ];
        r.row(v.ok && consistent, cells, || format!("{id}: {:?}", v.reason));
    }
    Ok(r)
}

pub fn run_suite(ctx: &mut Ctx, a: &VerifyArgs) -> CliResult<Output> {
    let report = match a.target.as_str() {
        "layered-digraphs" => layered_digraphs(ctx, a)?,
        "hub-digraphs" => hub_digraphs(ctx, a)?,
        "uniform-speed" => uniform_speed(ctx, a)?,
        "nonmonotone" => nonmonotone(ctx, a)?,
        "wc-cycles" => wc_cycles(ctx, a)?,
        "wc-trees" => wc_trees(ctx, a)?,
        "residue" => residue_suite(ctx, a)?,
        "gadget-claims" => gadget_claims(ctx, a)?,
        "waiter-vs-maker" => waiter_vs_maker(ctx, a)?,
        "catalog" => catalog(ctx, a)?,
        other => {
            return Err(Failure::Usage(format!(
                "unknown suite or strategy `{other}`; suites: {}; strategies: {}",
                SUITES.join(", "),
                CATALOG.join(", ")
            )))
        }
    };
    let ok = report.failures.is_empty();
    let payload = json!({
        "suite": a.target,
        "ok": ok,
        "seed": report.seed,
        "columns": report.table.columns,
        "rows": report.table.rows,
        "failures": report.failures,
    });
    Ok(Output {
        payload,
        table: Some(report.table),
        ok,
        seed: report.seed,
    })
}

//! Domination in graphs: dominating sets, the domination number, the
//! reduction of domination games to hypergraph games, the residue graph and
//! closed-form Waiter-Client values for trees and cycles. Tree enumeration
//! and sampling live here as well.

use std::collections::BTreeSet;

use rand::Rng;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::game::Player;
use crate::graph::SimpleGraph;
use crate::hypergraph::{Hypergraph, Transversal};
use crate::solver::{game_values, wc_game_values, GameValue, SolveResult};

/// Default cap on search nodes for [`domination_number`].
pub const DEFAULT_DOMINATION_NODE_CAP: u64 = 50_000_000;

/// True iff every vertex of `g` lies in `d` or has a neighbour in `d`.
pub fn is_dominating(g: &SimpleGraph, d: &[usize]) -> bool {
    let mut hit = vec![false; g.n()];
    for &v in d {
        if v >= g.n() {
            continue;
        }
        hit[v] = true;
        for &u in g.neighbors(v) {
            hit[u] = true;
        }
    }
    hit.into_iter().all(|x| x)
}

/// Bitset form of [`is_dominating`] for graphs that fit in an [`ElementSet`].
pub fn is_dominating_set(g: &SimpleGraph, d: &ElementSet) -> bool {
    is_dominating(g, &d.to_vec())
}

/// Minimum size of a dominating set.
pub fn domination_number(g: &SimpleGraph) -> Result<usize> {
    domination_number_capped(g, DEFAULT_DOMINATION_NODE_CAP)
}

/// Branch and bound over dominators of the hardest undominated vertex.
/// A vertex whose closed neighbourhood is contained in another's is never
/// needed as a dominator, which keeps pendant-heavy graphs cheap.
pub fn domination_number_capped(g: &SimpleGraph, node_cap: u64) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let closed: Vec<Vec<usize>> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    let mut useful = vec![true; n];
    for u in 0..n {
        for &v in &closed[u] {
            if v == u || !useful[v] {
                continue;
            }
            let contained = closed[u].iter().all(|x| closed[v].binary_search(x).is_ok());
            if contained && (closed[u].len() < closed[v].len() || v < u) {
                useful[u] = false;
                break;
            }
        }
    }
    let dominators: Vec<Vec<usize>> = closed
        .iter()
        .map(|c| c.iter().copied().filter(|&v| useful[v]).collect())
        .collect();
    let max_cover = (0..n)
        .filter(|&v| useful[v])
        .map(|v| closed[v].len())
        .max()
        .unwrap_or(1);

    struct Search<'a> {
        closed: &'a [Vec<usize>],
        dominators: &'a [Vec<usize>],
        max_cover: usize,
        count: Vec<u32>,
        undominated: usize,
        best: usize,
        nodes: u64,
        cap: u64,
    }

    impl Search<'_> {
        fn add(&mut self, v: usize) {
            for &u in &self.closed[v] {
                if self.count[u] == 0 {
                    self.undominated -= 1;
                }
                self.count[u] += 1;
            }
        }

        fn remove(&mut self, v: usize) {
            for &u in &self.closed[v] {
                self.count[u] -= 1;
                if self.count[u] == 0 {
                    self.undominated += 1;
                }
            }
        }

        fn run(&mut self, size: usize) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Error::Guard {
                    what: "domination search nodes",
                    limit: self.cap,
                });
            }
            if self.undominated == 0 {
                self.best = self.best.min(size);
                return Ok(());
            }
            if size + self.undominated.div_ceil(self.max_cover) >= self.best {
                return Ok(());
            }
            let target = (0..self.count.len())
                .filter(|&u| self.count[u] == 0)
                .min_by_key(|&u| self.dominators[u].len())
                .expect("some vertex is undominated");
            for i in 0..self.dominators[target].len() {
                let v = self.dominators[target][i];
                self.add(v);
                self.run(size + 1)?;
                self.remove(v);
            }
            Ok(())
        }
    }

    let mut s = Search {
        closed: &closed,
        dominators: &dominators,
        max_cover,
        count: vec![0; n],
        undominated: n,
        best: n,
        nodes: 0,
        cap: node_cap,
    };
    s.run(0)?;
    Ok(s.best)
}

/// The hypergraph on `V(g)` whose winning sets are the inclusion-minimal
/// dominating sets of `g`.
pub fn minimal_dominating_sets(g: &SimpleGraph) -> Result<Hypergraph> {
    if g.n() == 0 {
        return Err(Error::invalid("graph has no vertices"));
    }
    let neighborhoods: Vec<Vec<usize>> = (0..g.n()).map(|v| g.closed_neighborhood(v)).collect();
    match Hypergraph::new(g.n(), neighborhoods)?.transversal()? {
        Transversal::Family(h) => Ok(h),
        Transversal::Degenerate { .. } => unreachable!("closed neighbourhoods are non-empty"),
    }
}

/// Values of the `(m:b)` Maker-Breaker domination game; Dominator is Maker.
pub fn dom_game_values(g: &SimpleGraph, m: usize, b: usize, first: Player) -> Result<SolveResult> {
    game_values(&minimal_dominating_sets(g)?, m, b, first)
}

/// Values of the Waiter-Client domination game; Dominator is Waiter.
pub fn dom_wc_values(g: &SimpleGraph) -> Result<SolveResult> {
    wc_game_values(&minimal_dominating_sets(g)?)
}

/// Outcome of repeatedly deleting a leaf together with its degree-2
/// neighbour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueReport {
    pub residue: SimpleGraph,
    /// For each residue vertex, its index in the input graph.
    pub kept: Vec<usize>,
    /// Removed `(leaf, neighbour)` pairs in removal order, as input indices.
    pub removed_pairs: Vec<(usize, usize)>,
}

/// Removes the lexicographically least pair `(v, w)` with `d(v) = 1`,
/// `w` the neighbour of `v` and `d(w) = 2`, until none is left.
pub fn residue(g: &SimpleGraph) -> ResidueReport {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed_pairs = Vec::new();
    loop {
        let pair = (0..n).filter(|&v| alive[v] && degree[v] == 1).find_map(|v| {
            let w = *g.neighbors(v).iter().find(|&&w| alive[w])?;
            (degree[w] == 2).then_some((v, w))
        });
        let Some((v, w)) = pair else { break };
        for x in [v, w] {
            alive[x] = false;
            for &u in g.neighbors(x) {
                if alive[u] {
                    degree[u] -= 1;
                }
            }
        }
        removed_pairs.push((v, w));
    }
    let gone: Vec<usize> = (0..n).filter(|&v| !alive[v]).collect();
    let (residue, kept) = g.remove_vertices(&gone);
    ResidueReport {
        residue,
        kept,
        removed_pairs,
    }
}

/// Whether a forest has a perfect matching, by repeatedly matching a leaf
/// with its neighbour.
pub fn forest_has_perfect_matching(g: &SimpleGraph) -> Result<bool> {
    let n = g.n();
    if g.edge_count() + count_components(g) != n {
        return Err(Error::NotATree);
    }
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut matched = 0;
    while let Some(v) = leaves.pop() {
        if !alive[v] {
            continue;
        }
        let Some(&w) = g.neighbors(v).iter().find(|&&w| alive[w]) else {
            return Ok(false);
        };
        for x in [v, w] {
            alive[x] = false;
            for &u in g.neighbors(x) {
                if alive[u] {
                    degree[u] -= 1;
                    if degree[u] <= 1 {
                        leaves.push(u);
                    }
                }
            }
        }
        matched += 2;
    }
    Ok(matched == n)
}

fn count_components(g: &SimpleGraph) -> usize {
    let mut seen = vec![false; g.n()];
    let mut components = 0;
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        components += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    components
}

/// Waiter-Client domination value of a tree: `n/2` rounds with a perfect
/// matching, otherwise Dominator cannot win.
pub fn wc_tree_value(t: &SimpleGraph) -> Result<GameValue> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(if forest_has_perfect_matching(t)? {
        GameValue::Finite(t.n() / 2)
    } else {
        GameValue::Infinite
    })
}

/// Waiter-Client domination value of the cycle on `n >= 3` vertices.
pub fn wc_cycle_value(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Ok(n / 2)
}

/// Value predicted from the residue: removed pairs each cost one round, and
/// the residue is played out on its own.
pub fn residue_prediction(g: &SimpleGraph) -> Result<GameValue> {
    let report = residue(g);
    if report.residue.n() == 0 {
        return Ok(GameValue::Finite(report.removed_pairs.len()));
    }
    Ok(match dom_wc_values(&report.residue)?.min_rounds {
        GameValue::Finite(r) => GameValue::Finite(r + report.removed_pairs.len()),
        GameValue::Infinite => GameValue::Infinite,
    })
}

/// The tree with the given Prüfer sequence on `seq.len() + 2` vertices.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<SimpleGraph> {
    let n = seq.len() + 2;
    if let Some(&x) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::IndexOutOfRange { index: x, n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = leaves.pop_first().expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    SimpleGraph::new(n, &edges)
}

/// A uniformly random labelled tree on `n` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SimpleGraph {
    match n {
        0 => SimpleGraph::empty(0),
        1 => SimpleGraph::empty(1),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            tree_from_pruefer(&seq).expect("sequence entries are in range")
        }
    }
}

/// Erdős–Rényi random graph `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, &edges).expect("edges are in range")
}

fn rooted_code(g: &SimpleGraph, v: usize, parent: Option<usize>) -> String {
    let mut codes: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&u| Some(u) != parent)
        .map(|&u| rooted_code(g, u, Some(v)))
        .collect();
    codes.sort_unstable();
    format!("({})", codes.concat())
}

/// Centre vertices of a tree (one or two).
fn centres(t: &SimpleGraph) -> Vec<usize> {
    let n = t.n();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in t.neighbors(v) {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Canonical string of a tree; equal iff the trees are isomorphic.
pub fn tree_canonical_form(t: &SimpleGraph) -> Result<String> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(centres(t)
        .into_iter()
        .map(|c| rooted_code(t, c, None))
        .min()
        .expect("a tree has a centre"))
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// found by decoding every Prüfer sequence. Feasible for `n <= 9`.
pub fn all_trees(n: usize) -> Result<Vec<SimpleGraph>> {
    if n > 9 {
        return Err(Error::Guard {
            what: "tree enumeration size",
            limit: 9,
        });
    }
    if n <= 2 {
        return Ok(vec![tree_from_pruefer_or_small(n)]);
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut seq = vec![0usize; len];
    for mut code in 0..total {
        for x in seq.iter_mut() {
            *x = code % n;
            code /= n;
        }
        let t = tree_from_pruefer(&seq)?;
        if seen.insert(tree_canonical_form(&t)?) {
            out.push(t);
        }
    }
    Ok(out)
}

fn tree_from_pruefer_or_small(n: usize) -> SimpleGraph {
    match n {
        2 => SimpleGraph::path(2),
        _ => SimpleGraph::empty(n),
    }
}

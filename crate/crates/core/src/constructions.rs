//! Generators for the layered digraphs, the hypergraphs built from them and
//! the remaining explicit boards.
//!
//! Every generator returns a layout alongside the board so that scripted
//! strategies can navigate the structure without re-deriving it.

use crate::bitset::{binomial, k_subsets, ElementSet, CAPACITY};
use crate::digraph::RootedDigraph;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hypergraph::Hypergraph;

/// Default cap on the number of arcs of generated digraphs.
pub const DEFAULT_ARC_CAP: usize = 1 << 20;

/// Default cap on the number of vertices of a gadget graph.
pub const DEFAULT_GADGET_CAP: usize = 200_000;

/// Largest board for which gadget generation enumerates vertex covers.
pub const MAX_COVER_BOARD: usize = 20;

/// Default cap on winning sets produced by product-style generators.
pub const DEFAULT_FAMILY_CAP: u64 = 1_000_000;

/// One copy of the layered digraph `G_k(b)` inside a larger digraph.
///
/// For `k = 1` the copy is the single arc `start -> end`. For `k > 1` the
/// copy consists of a copy of `G_{k-1}(b)` from `start` to `mid`, followed by
/// `b` copies of `G_{k-1}(b)` from `mid` to `end`, stored in that order in
/// `children`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CopyNode {
    pub k: usize,
    pub start: usize,
    pub end: usize,
    pub mid: Option<usize>,
    pub arc: Option<usize>,
    pub children: Vec<CopyNode>,
}

impl CopyNode {
    /// Vertices strictly inside the copy (excluding `start` and `end`).
    pub fn inner_vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.walk(&mut |node| {
            if let Some(m) = node.mid {
                out.push(m);
            }
        });
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Arc indices of the copy.
    pub fn arcs(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.walk(&mut |node| out.extend(node.arc));
        out.sort_unstable();
        out
    }

    fn walk(&self, f: &mut impl FnMut(&CopyNode)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }
}

struct Builder {
    nv: usize,
    arcs: Vec<(usize, usize)>,
    cap: usize,
}

impl Builder {
    fn arc(&mut self, u: usize, v: usize) -> Result<usize> {
        if self.arcs.len() >= self.cap {
            return Err(Error::Guard {
                what: "digraph arc count",
                limit: self.cap as u64,
            });
        }
        self.arcs.push((u, v));
        Ok(self.arcs.len() - 1)
    }

    fn vertex(&mut self) -> usize {
        self.nv += 1;
        self.nv - 1
    }

    /// A copy of `G_k(b)` between existing vertices, with fresh inner vertices.
    fn fresh(&mut self, k: usize, b: usize, start: usize, end: usize) -> Result<CopyNode> {
        if k == 1 {
            let a = self.arc(start, end)?;
            return Ok(CopyNode {
                k,
                start,
                end,
                mid: None,
                arc: Some(a),
                children: Vec::new(),
            });
        }
        let mid = self.vertex();
        self.with_mid(k, b, start, end, mid, |bd| bd.fresh(k - 1, b, start, mid))
    }

    fn with_mid(
        &mut self,
        k: usize,
        b: usize,
        start: usize,
        end: usize,
        mid: usize,
        first: impl FnOnce(&mut Self) -> Result<CopyNode>,
    ) -> Result<CopyNode> {
        let mut children = vec![first(self)?];
        for _ in 0..b {
            children.push(self.fresh(k - 1, b, mid, end)?);
        }
        Ok(CopyNode {
            k,
            start,
            end,
            mid: Some(mid),
            arc: None,
            children,
        })
    }

    /// `G_k(b)` whose chain vertices `v_0..v_k` are the vertices `0..=k`.
    fn chain(&mut self, k: usize, b: usize) -> Result<CopyNode> {
        if k == 1 {
            let a = self.arc(0, 1)?;
            return Ok(CopyNode {
                k,
                start: 0,
                end: 1,
                mid: None,
                arc: Some(a),
                children: Vec::new(),
            });
        }
        self.with_mid(k, b, 0, k, k - 1, |bd| bd.chain(k - 1, b))
    }
}

fn check_arc_budget(t: usize, b: usize, copies: u64, cap: usize) -> Result<()> {
    // arcs = copies * (1 + b)^(t - 1)
    let mut arcs = copies as u128;
    for _ in 1..t {
        arcs = arcs.saturating_mul(b as u128 + 1);
        if arcs > cap as u128 {
            return Err(Error::Guard {
                what: "digraph arc count",
                limit: cap as u64,
            });
        }
    }
    if arcs > cap as u128 {
        return Err(Error::Guard {
            what: "digraph arc count",
            limit: cap as u64,
        });
    }
    Ok(())
}

/// The layered digraph `G_t(b)` with its recursive structure. The chain
/// vertices `v_0, ..., v_t` are vertices `0..=t`; start is `v_0`, end `v_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GtbLayout {
    pub t: usize,
    pub b: usize,
    pub digraph: RootedDigraph,
    pub root: CopyNode,
}

pub fn build_gtb(t: usize, b: usize) -> Result<GtbLayout> {
    build_gtb_capped(t, b, DEFAULT_ARC_CAP)
}

pub fn build_gtb_capped(t: usize, b: usize, cap: usize) -> Result<GtbLayout> {
    if t == 0 || b == 0 {
        return Err(Error::invalid("layered digraph needs t >= 1 and b >= 1"));
    }
    check_arc_budget(t, b, 1, cap)?;
    let mut bd = Builder {
        nv: t + 1,
        arcs: Vec::new(),
        cap,
    };
    let root = bd.chain(t, b)?;
    let digraph = RootedDigraph::new(bd.nv, bd.arcs, 0, Some(t))?;
    Ok(GtbLayout { t, b, digraph, root })
}

/// The digraph `H_t(b)`: hub vertices `x_0, ..., x_{b+1}` (vertices
/// `0..=b+1`) and, for each `i` in `1..=b+1`, `b + 1` copies of
/// `G_{t-2}(b)` from `x_0` to `x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HtbLayout {
    pub t: usize,
    pub b: usize,
    pub digraph: RootedDigraph,
    /// `(i, copy)` pairs in construction order.
    pub copies: Vec<(usize, CopyNode)>,
}

impl HtbLayout {
    pub fn hub(&self, i: usize) -> usize {
        i
    }

    /// Index into `copies` of the copy containing inner vertex or arc
    /// element `e` of the auxiliary game (vertices first, then arcs).
    pub fn copy_of_element(&self, e: usize) -> Option<usize> {
        let nv = self.digraph.nv();
        self.copies.iter().position(|(_, c)| {
            if e < nv {
                c.inner_vertices().contains(&e)
            } else {
                c.arcs().contains(&(e - nv))
            }
        })
    }
}

pub fn build_htb(t: usize, b: usize) -> Result<HtbLayout> {
    build_htb_capped(t, b, DEFAULT_ARC_CAP)
}

pub fn build_htb_capped(t: usize, b: usize, cap: usize) -> Result<HtbLayout> {
    if t < 3 || b == 0 {
        return Err(Error::invalid("hub digraph needs t >= 3 and b >= 1"));
    }
    check_arc_budget(t - 2, b, ((b + 1) * (b + 1)) as u64, cap)?;
    let mut bd = Builder {
        nv: b + 2,
        arcs: Vec::new(),
        cap,
    };
    let mut copies = Vec::new();
    for i in 1..=b + 1 {
        for _ in 0..=b {
            copies.push((i, bd.fresh(t - 2, b, 0, i)?));
        }
    }
    let digraph = RootedDigraph::new(bd.nv, bd.arcs, 0, None)?;
    Ok(HtbLayout { t, b, digraph, copies })
}

/// Structure of `H(m, b, s, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HmbstShape {
    /// Built directly from `H_t(b)`: vertex `x` of the digraph became the
    /// block `vertex_sets[x]`, arc `i` became winning set `i` with private
    /// elements `extras[i]`.
    Base {
        htb: HtbLayout,
        vertex_sets: Vec<ElementSet>,
        extras: Vec<ElementSet>,
    },
    /// A shared block `v` added to every winning set of `b + 1` copies of
    /// `H(m, b, s - m, t - 1)`; copy `j` occupies elements
    /// `offsets[j]..offsets[j] + copies[j].hypergraph.n()`.
    Lifted {
        v: ElementSet,
        offsets: Vec<usize>,
        copies: Vec<HmbstLayout>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HmbstLayout {
    pub m: usize,
    pub b: usize,
    pub s: usize,
    pub t: usize,
    pub hypergraph: Hypergraph,
    /// The associated blocks, pairwise disjoint, each of size `m`.
    pub family: Vec<ElementSet>,
    pub shape: HmbstShape,
}

fn shift(set: &ElementSet, by: usize) -> ElementSet {
    set.iter().map(|x| x + by).collect()
}

fn check_hmbst(m: usize, b: usize, s: usize, t: usize) -> Result<()> {
    if m == 0 || b == 0 {
        return Err(Error::invalid("biases must be at least 1"));
    }
    if s < 2 * m + 1 {
        return Err(Error::invalid(format!("need s >= 2m+1, got s={s}, m={m}")));
    }
    if m > b {
        return Err(Error::invalid(format!("need m <= b, got m={m}, b={b}")));
    }
    if t < s.div_ceil(m) {
        return Err(Error::invalid(format!(
            "need t >= ceil(s/m) = {}, got t={t}",
            s.div_ceil(m)
        )));
    }
    Ok(())
}

/// The `s`-uniform hypergraph `H(m, b, s, t)` with its associated blocks.
pub fn build_h_mbst(m: usize, b: usize, s: usize, t: usize) -> Result<HmbstLayout> {
    check_hmbst(m, b, s, t)?;
    if s <= 3 * m {
        let htb = build_htb(t, b)?;
        let d = &htb.digraph;
        let per_arc = s - 2 * m;
        let n = d.nv() * m + d.arcs().len() * per_arc;
        if n > CAPACITY {
            return Err(Error::Capacity { n, capacity: CAPACITY });
        }
        let vertex_sets: Vec<ElementSet> = (0..d.nv()).map(|x| (x * m..x * m + m).collect()).collect();
        let mut labels: Vec<String> = Vec::with_capacity(n);
        for x in 0..d.nv() {
            for j in 0..m {
                labels.push(if m == 1 { format!("x{x}") } else { format!("x{x}.{j}") });
            }
        }
        let mut extras = Vec::with_capacity(d.arcs().len());
        let mut edges = Vec::with_capacity(d.arcs().len());
        let mut next = d.nv() * m;
        for (i, &(u, w)) in d.arcs().iter().enumerate() {
            let ex: ElementSet = (next..next + per_arc).collect();
            for j in 0..per_arc {
                labels.push(format!("extra:a{i}.{j}"));
            }
            next += per_arc;
            edges.push(vertex_sets[u] | vertex_sets[w] | ex);
            extras.push(ex);
        }
        let hypergraph = Hypergraph::from_sets(n, edges)?.with_labels(labels)?;
        return Ok(HmbstLayout {
            m,
            b,
            s,
            t,
            hypergraph,
            family: vertex_sets.clone(),
            shape: HmbstShape::Base {
                htb,
                vertex_sets,
                extras,
            },
        });
    }
    let inner = build_h_mbst(m, b, s - m, t - 1)?;
    let per = inner.hypergraph.n();
    let n = m + (b + 1) * per;
    if n > CAPACITY {
        return Err(Error::Capacity { n, capacity: CAPACITY });
    }
    let v: ElementSet = (0..m).collect();
    let mut labels: Vec<String> = (0..m)
        .map(|j| {
            if m == 1 {
                "shared".to_string()
            } else {
                format!("shared.{j}")
            }
        })
        .collect();
    let mut edges = Vec::new();
    let mut family = vec![v];
    let mut offsets = Vec::with_capacity(b + 1);
    for c in 0..=b {
        let off = m + c * per;
        offsets.push(off);
        for e in 0..per {
            labels.push(format!("c{c}/{}", inner.hypergraph.label(e)));
        }
        edges.extend(inner.hypergraph.edges().iter().map(|f| shift(f, off) | v));
        family.extend(inner.family.iter().map(|f| shift(f, off)));
    }
    let hypergraph = Hypergraph::from_sets(n, edges)?.with_labels(labels)?;
    Ok(HmbstLayout {
        m,
        b,
        s,
        t,
        hypergraph,
        family,
        shape: HmbstShape::Lifted {
            v,
            offsets,
            copies: vec![inner; b + 1],
        },
    })
}

/// Which vertex covers get a pendant class in [`build_gadget`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CoverMode {
    /// Every vertex cover (the faithful construction).
    #[default]
    All,
    /// Only inclusion-minimal covers. Much smaller, but the resulting game
    /// is not guaranteed to mirror the hypergraph game.
    Minimal,
}

/// The gadget graph: the board `X` as a clique (vertices `0..|X|`), and for
/// each vertex cover `A` (in increasing bitmask order) a class of
/// `4a(|X| + #covers)` new vertices, each adjacent to exactly `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetLayout {
    pub graph: SimpleGraph,
    pub board_size: usize,
    pub covers: Vec<ElementSet>,
    /// Vertex ranges of the pendant classes, parallel to `covers`.
    pub classes: Vec<std::ops::Range<usize>>,
}

pub fn build_gadget(h: &Hypergraph, a: usize) -> Result<GadgetLayout> {
    build_gadget_with(h, a, CoverMode::All, DEFAULT_GADGET_CAP)
}

pub fn build_gadget_with(h: &Hypergraph, a: usize, mode: CoverMode, cap: usize) -> Result<GadgetLayout> {
    if a == 0 {
        return Err(Error::invalid("gadget bias must be at least 1"));
    }
    let x = h.n();
    if x > MAX_COVER_BOARD {
        return Err(Error::Guard {
            what: "board size for vertex-cover enumeration",
            limit: MAX_COVER_BOARD as u64,
        });
    }
    let mut covers: Vec<ElementSet> = (0u32..(1u32 << x))
        .map(|mask| (0..x).filter(|&i| mask >> i & 1 == 1).collect::<ElementSet>())
        .filter(|c| h.edges().iter().all(|f| f.intersects(c)))
        .collect();
    if mode == CoverMode::Minimal {
        covers = crate::hypergraph::minimal_sets(&covers);
    }
    let class = 4 * a * (x + covers.len());
    let total = x + class * covers.len();
    if total > cap {
        return Err(Error::Guard {
            what: "gadget vertex count",
            limit: cap as u64,
        });
    }
    let mut edges = Vec::new();
    for u in 0..x {
        for v in u + 1..x {
            edges.push((u, v));
        }
    }
    let mut classes = Vec::with_capacity(covers.len());
    let mut next = x;
    for c in &covers {
        for w in next..next + class {
            edges.extend(c.iter().map(|u| (u, w)));
        }
        classes.push(next..next + class);
        next += class;
    }
    let graph = SimpleGraph::new(total, &edges)?;
    Ok(GadgetLayout {
        graph,
        board_size: x,
        covers,
        classes,
    })
}

/// Block structure of the non-monotone board.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonmonotoneLayout {
    pub hypergraph: Hypergraph,
    /// Blocks in order; winning sets pick exactly one element from each.
    pub blocks: Vec<ElementSet>,
}

/// The board on which the `(b:b)` game is a Maker win exactly for `b`
/// outside `biases`. With `b_1 < ... < b_l` the sorted biases and
/// `b_0 = -1`, there are `b_l + 1` blocks and block `i` has size `b_j`
/// whenever `b_{j-1} + 1 < i <= b_j + 1`.
pub fn build_nonmonotone(biases: &[usize]) -> Result<NonmonotoneLayout> {
    let mut bs = biases.to_vec();
    bs.sort_unstable();
    bs.dedup();
    if bs.is_empty() || bs[0] == 0 {
        return Err(Error::invalid("bias set must be non-empty and positive"));
    }
    let last = *bs.last().unwrap();
    let mut sizes = Vec::with_capacity(last + 1);
    for i in 1..=last + 1 {
        let size = *bs.iter().find(|&&bj| i <= bj + 1).expect("i <= b_l + 1");
        sizes.push(size);
    }
    let n: usize = sizes.iter().sum();
    if n > CAPACITY {
        return Err(Error::Capacity { n, capacity: CAPACITY });
    }
    let count = sizes
        .iter()
        .try_fold(1u64, |acc, &s| acc.checked_mul(s as u64))
        .unwrap_or(u64::MAX);
    if count > DEFAULT_FAMILY_CAP {
        return Err(Error::Guard {
            what: "winning set count",
            limit: DEFAULT_FAMILY_CAP,
        });
    }
    let mut blocks = Vec::with_capacity(sizes.len());
    let mut labels = Vec::with_capacity(n);
    let mut next = 0;
    for (i, &s) in sizes.iter().enumerate() {
        blocks.push((next..next + s).collect::<ElementSet>());
        labels.extend((0..s).map(|j| format!("V{}.{j}", i + 1)));
        next += s;
    }
    let mut edges = vec![ElementSet::new()];
    for block in &blocks {
        edges = edges
            .iter()
            .flat_map(|e| block.iter().map(move |x| *e | ElementSet::singleton(x)))
            .collect();
    }
    let hypergraph = Hypergraph::from_sets(n, edges)?.with_labels(labels)?;
    Ok(NonmonotoneLayout { hypergraph, blocks })
}

/// A disjoint union of components together with their offsets and the
/// union of their associated blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositeLayout {
    pub hypergraph: Hypergraph,
    pub offsets: Vec<usize>,
    pub components: Vec<HmbstLayout>,
    pub family: Vec<ElementSet>,
}

fn compose(parts: Vec<HmbstLayout>) -> Result<CompositeLayout> {
    let mut h = Hypergraph::empty(0)?;
    let mut offsets = Vec::with_capacity(parts.len());
    let mut family = Vec::new();
    for p in &parts {
        offsets.push(h.n());
        family.extend(p.family.iter().map(|v| shift(v, h.n())));
        h = h.disjoint_union(&p.hypergraph)?;
    }
    Ok(CompositeLayout {
        hypergraph: h,
        offsets,
        components: parts,
        family,
    })
}

fn check_split_params(m: usize, b: usize, s: usize, s2: usize, t: usize, t2: usize) -> Result<()> {
    if s2 < s {
        return Err(Error::invalid(format!("need s' >= s, got s={s}, s'={s2}")));
    }
    if t2 < t {
        return Err(Error::invalid(format!("need t' >= t, got t={t}, t'={t2}")));
    }
    check_hmbst(m, b, s, t)?;
    check_hmbst(m, b, s2, t2)
}

/// `b` copies of `H(m, b, s, t)` followed by one copy of `H(m, b, s', t')`.
/// As first player Maker's best is size `s` in `t` rounds; as second player
/// it is size `s'` in `t'` rounds.
pub fn build_first_player_split(
    m: usize,
    b: usize,
    s: usize,
    s2: usize,
    t: usize,
    t2: usize,
) -> Result<CompositeLayout> {
    check_split_params(m, b, s, s2, t, t2)?;
    let first = build_h_mbst(m, b, s, t)?;
    let mut parts = vec![first; b];
    parts.push(build_h_mbst(m, b, s2, t2)?);
    compose(parts)
}

/// [`build_first_player_split`] plus one extra winning set of size `r` on
/// fresh elements, which fixes the domination number of the gadget at `r`.
pub fn build_split_with_small_edge(
    m: usize,
    b: usize,
    r: usize,
    s: usize,
    s2: usize,
    t: usize,
    t2: usize,
) -> Result<Hypergraph> {
    if r <= m || m > b {
        return Err(Error::invalid(format!(
            "need m <= min(b, r-1), got m={m}, b={b}, r={r}"
        )));
    }
    if s < r {
        return Err(Error::invalid(format!("need s >= r, got s={s}, r={r}")));
    }
    let split = build_first_player_split(m, b, s, s2, t, t2)?;
    let extra = Hypergraph::new(r, vec![(0..r).collect()])?;
    split.hypergraph.disjoint_union(&extra)
}

/// `H(m, b, s, ceil(t/m) + 1)` plus every `t`-subset of its board as an
/// extra winning set.
pub fn build_large_before_small(m: usize, b: usize, s: usize, t: usize) -> Result<Hypergraph> {
    if t <= s {
        return Err(Error::invalid(format!("need t > s, got s={s}, t={t}")));
    }
    let rounds = t.div_ceil(m) + 1;
    let base = build_h_mbst(m, b, s, rounds)?;
    base.hypergraph.add_all_k_subsets(t)
}

/// Disjoint union of `H(m, b, s', t)` and `H(m, b, s, t')`.
pub fn build_fast_or_small(m: usize, b: usize, s: usize, s2: usize, t: usize, t2: usize) -> Result<CompositeLayout> {
    if s2 < s || t2 < t {
        return Err(Error::invalid("need s' >= s and t' >= t"));
    }
    if t < s2.div_ceil(m.max(1)) {
        return Err(Error::invalid(format!(
            "need t >= ceil(s'/m) = {}, got t={t}",
            s2.div_ceil(m.max(1))
        )));
    }
    compose(vec![build_h_mbst(m, b, s2, t)?, build_h_mbst(m, b, s, t2)?])
}

/// Elements `a_1..a_4` (0..4), `b_1..b_4` (4..8) and `2t - 6` further
/// elements; winning sets are `{a_i, b_i}` plus any `t - 3` of the further
/// elements. Breaker wins the Maker-Breaker game by pairing `a_i` with
/// `b_i`, while Waiter wins the Waiter-Client game in exactly `t` rounds.
pub fn build_pair_family(t: usize) -> Result<Hypergraph> {
    if t < 3 {
        return Err(Error::invalid(format!("need t >= 3, got {t}")));
    }
    let extra = 2 * t - 6;
    let n = 8 + extra;
    if n > CAPACITY {
        return Err(Error::Capacity { n, capacity: CAPACITY });
    }
    if binomial(extra, t - 3).saturating_mul(4) > DEFAULT_FAMILY_CAP {
        return Err(Error::Guard {
            what: "winning set count",
            limit: DEFAULT_FAMILY_CAP,
        });
    }
    let pool: Vec<usize> = (8..n).collect();
    let tails = k_subsets(&pool, t - 3);
    let mut edges = Vec::new();
    for i in 0..4 {
        for m in &tails {
            edges.push(*m | ElementSet::singleton(i) | ElementSet::singleton(4 + i));
        }
    }
    let mut labels: Vec<String> = (1..=4).map(|i| format!("a{i}")).collect();
    labels.extend((1..=4).map(|i| format!("b{i}")));
    labels.extend((1..=extra).map(|i| format!("m{i}")));
    Hypergraph::from_sets(n, edges)?.with_labels(labels)
}

/// The pairs `{a_i, b_i}` of [`build_pair_family`].
pub fn pair_family_pairs() -> Vec<(usize, usize)> {
    (0..4).map(|i| (i, 4 + i)).collect()
}

/// All `k`-subsets of `n` elements.
pub fn build_complete_uniform(n: usize, k: usize) -> Result<Hypergraph> {
    Hypergraph::empty(n)?.add_all_k_subsets(k)
}

/// [`build_pair_family`]`(t)` followed by the complete `s`-uniform
/// hypergraph on `2s` elements: Maker (moving second) needs `s` rounds while
/// Waiter needs `t`.
pub fn build_waiter_vs_maker(s: usize, t: usize) -> Result<Hypergraph> {
    if s < t {
        return Err(Error::invalid(format!("need s >= t, got s={s}, t={t}")));
    }
    build_pair_family(t)?.disjoint_union(&build_complete_uniform(2 * s, s)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Vertex count recursion for `G_t(b)`.
    fn gtb_vertices(t: usize, b: usize) -> usize {
        let mut v = 2;
        for _ in 1..t {
            v = v + 1 + b * (v - 2);
        }
        v
    }

    #[test]
    fn gtb_sizes() {
        let g = build_gtb(1, 3).unwrap();
        assert_eq!((g.digraph.nv(), g.digraph.arcs().len()), (2, 1));
        let g = build_gtb(3, 2).unwrap();
        assert_eq!((g.digraph.nv(), g.digraph.arcs().len()), (6, 9));
        for t in 1..=5 {
            for b in 1..=3 {
                let g = build_gtb(t, b).unwrap();
                assert_eq!(g.digraph.nv(), gtb_vertices(t, b));
                assert_eq!(g.digraph.arcs().len(), (1 + b).pow(t as u32 - 1));
                let d = g.digraph.distances_from(0);
                assert_eq!(d[t], Some(1 << (t - 1)));
                assert!(g.digraph.is_acyclic());
            }
        }
    }

    #[test]
    fn gtb_out_degrees() {
        for t in 1..=4 {
            for b in 1..=3 {
                let g = build_gtb(t, b).unwrap();
                for v in 0..g.digraph.nv() {
                    if v != 0 && v != t {
                        assert_eq!(g.digraph.out_degree(v), b, "t={t} b={b} v={v}");
                    }
                }
            }
        }
    }

    #[test]
    fn gtb_chain_layout() {
        let g = build_gtb(3, 2).unwrap();
        assert_eq!(g.root.mid, Some(2));
        assert_eq!(g.root.children.len(), 3);
        assert_eq!(g.root.children[0].mid, Some(1));
        assert_eq!(g.root.arcs().len(), 9);
        assert_eq!(g.root.inner_vertices().len(), 4);
    }

    #[test]
    fn htb_sizes() {
        let h = build_htb(3, 1).unwrap();
        assert_eq!((h.digraph.nv(), h.digraph.arcs().len()), (3, 4));
        let h = build_htb(3, 2).unwrap();
        assert_eq!((h.digraph.nv(), h.digraph.arcs().len()), (4, 9));
        let h = build_htb(4, 1).unwrap();
        assert_eq!((h.digraph.nv(), h.digraph.arcs().len()), (7, 8));
        assert!(build_htb(2, 1).is_err());
    }

    fn check_observation(l: &HmbstLayout) {
        let h = &l.hypergraph;
        assert!(h.edges().iter().all(|f| f.len() == l.s));
        crate::solver::validate_restriction(h, &l.family, l.m, l.b).unwrap();
    }

    #[test]
    fn hmbst_sizes_and_structure() {
        let l = build_h_mbst(1, 1, 3, 3).unwrap();
        assert_eq!(l.hypergraph.n(), 7);
        assert_eq!(l.hypergraph.edges().len(), 4);
        check_observation(&l);
        let l = build_h_mbst(1, 2, 3, 3).unwrap();
        assert_eq!(l.hypergraph.n(), 13);
        assert_eq!(l.hypergraph.edges().len(), 9);
        check_observation(&l);
        let l = build_h_mbst(1, 1, 4, 4).unwrap();
        assert!(matches!(l.shape, HmbstShape::Lifted { .. }));
        check_observation(&l);
        let l = build_h_mbst(2, 2, 5, 3).unwrap();
        check_observation(&l);
        let l = build_h_mbst(2, 2, 7, 4).unwrap();
        check_observation(&l);
        assert!(build_h_mbst(1, 1, 2, 3).is_err());
        assert!(build_h_mbst(2, 1, 5, 3).is_err());
        assert!(build_h_mbst(1, 1, 3, 2).is_err());
    }

    #[test]
    fn nonmonotone_blocks() {
        let l = build_nonmonotone(&[2]).unwrap();
        assert_eq!(l.blocks.iter().map(|b| b.len()).collect::<Vec<_>>(), vec![2, 2, 2]);
        assert_eq!(l.hypergraph.n(), 6);
        assert_eq!(l.hypergraph.edges().len(), 8);
        let l = build_nonmonotone(&[1]).unwrap();
        assert_eq!(l.hypergraph.n(), 2);
        assert_eq!(l.hypergraph.edges().len(), 1);
        let l = build_nonmonotone(&[1, 2]).unwrap();
        assert_eq!(l.blocks.iter().map(|b| b.len()).collect::<Vec<_>>(), vec![1, 1, 2]);
        let l = build_nonmonotone(&[1, 3]).unwrap();
        assert_eq!(l.blocks.iter().map(|b| b.len()).collect::<Vec<_>>(), vec![1, 1, 3, 3]);
        assert!(build_nonmonotone(&[]).is_err());
    }

    #[test]
    fn gadget_example() {
        let h = Hypergraph::new(2, vec![vec![0]]).unwrap();
        let g = build_gadget(&h, 1).unwrap();
        assert_eq!(g.covers.len(), 2);
        assert_eq!(g.graph.n(), 34);
        assert_eq!(g.classes[0].len(), 16);
        assert!(g.graph.has_edge(0, 1));
        assert!(g.graph.has_edge(0, 2) && !g.graph.has_edge(1, 2));
    }

    #[test]
    fn composites() {
        let c = build_first_player_split(1, 1, 3, 3, 3, 3).unwrap();
        assert_eq!(c.hypergraph.n(), 14);
        assert_eq!(c.components.len(), 2);
        assert!(c.hypergraph.edges().iter().all(|f| f.len() == 3));
        crate::solver::validate_restriction(&c.hypergraph, &c.family, 1, 1).unwrap();

        let h = build_split_with_small_edge(1, 2, 2, 3, 3, 3, 3).unwrap();
        assert_eq!(h.min_edge_size(), Some(2));
        assert!(build_split_with_small_edge(2, 2, 2, 5, 5, 3, 3).is_err());

        let h = build_large_before_small(1, 1, 3, 4).unwrap();
        assert_eq!(h.min_edge_size(), Some(3));
        assert_eq!(h.edge_sizes(), vec![3, 4]);

        let c = build_fast_or_small(1, 1, 3, 3, 3, 3).unwrap();
        assert_eq!(c.hypergraph.n(), 14);
        assert!(build_fast_or_small(1, 1, 3, 4, 3, 4).is_err());
    }

    #[test]
    fn pair_family_and_complete() {
        let h = build_pair_family(3).unwrap();
        assert_eq!(h.n(), 8);
        assert_eq!(h.edge_lists(), vec![vec![0, 4], vec![1, 5], vec![2, 6], vec![3, 7]]);
        let h = build_pair_family(4).unwrap();
        assert_eq!(h.n(), 10);
        assert_eq!(h.edges().len(), 8);
        assert_eq!(build_complete_uniform(6, 3).unwrap().edges().len(), 20);
        assert_eq!(build_waiter_vs_maker(3, 3).unwrap().n(), 14);
        assert!(build_waiter_vs_maker(3, 4).is_err());
    }
}

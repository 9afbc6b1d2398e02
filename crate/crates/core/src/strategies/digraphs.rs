//! Strategies for the auxiliary edge game on layered digraphs and for the
//! Maker-Breaker game on the hypergraphs built from them.

use std::sync::Arc;

use crate::bitset::ElementSet;
use crate::constructions::{CopyNode, GtbLayout, HmbstLayout, HmbstShape, HtbLayout};
use crate::digraph::RootedDigraph;
use crate::error::Result;
use crate::game::{GameSpec, GameState, Move, Player};

use super::{legal_or_first, new_maker_elements, padded_claim, Strategy};

/// Vertices and arc elements a response is confined to.
#[derive(Clone, Debug)]
struct Scope {
    vertices: ElementSet,
    arcs: ElementSet,
}

/// Precomputed adjacency and distances of the digraph under play.
#[derive(Clone, Debug)]
struct Ctx {
    nv: usize,
    out: Vec<Vec<usize>>,
    dist: Vec<Vec<Option<usize>>>,
}

impl Ctx {
    fn new(d: &RootedDigraph) -> Self {
        Ctx {
            nv: d.nv(),
            out: (0..d.nv()).map(|v| d.out_arcs(v).to_vec()).collect(),
            dist: d.distance_matrix(),
        }
    }

    /// Unclaimed out-arcs of `u` (as board elements) inside `scope`.
    fn free_out(&self, u: usize, state: &GameState, scope: Option<&Scope>) -> Vec<usize> {
        let taken = state.maker | state.breaker;
        self.out[u]
            .iter()
            .map(|a| self.nv + a)
            .filter(|&e| !taken.contains(e) && scope.is_none_or(|s| s.arcs.contains(e)))
            .collect()
    }

    /// Breaker's reply to Maker's new vertex `w`: let `x` be another Maker
    /// vertex in scope that still has free out-arcs. If `x` reaches `w` (by
    /// a path shorter than `thr`, when given) take the out-arcs of `x`,
    /// otherwise those of `w`.
    fn respond(&self, state: &GameState, w: usize, scope: Option<&Scope>, thr: Option<usize>) -> Vec<usize> {
        let x = (0..self.nv)
            .filter(|&u| u != w && state.maker.contains(u) && scope.is_none_or(|s| s.vertices.contains(u)))
            .find(|&u| !self.free_out(u, state, scope).is_empty());
        match x {
            Some(x) if self.dist[x][w].is_some_and(|l| thr.is_none_or(|t| l < t)) => self.free_out(x, state, scope),
            _ => self.free_out(w, state, scope),
        }
    }
}

fn untouched(c: &CopyNode, nv: usize, breaker: &ElementSet) -> bool {
    c.inner_vertices().iter().all(|&v| !breaker.contains(v)) && c.arcs().iter().all(|&a| !breaker.contains(nv + a))
}

/// Walks down from `current` (a copy whose endpoints Maker owns): claim
/// the middle vertex, then move into a copy Breaker has not touched.
fn descend(current: &mut CopyNode, nv: usize, maker: &ElementSet, breaker: &ElementSet) -> Option<usize> {
    loop {
        if current.k == 1 {
            return current.arc.map(|a| nv + a);
        }
        let mid = current.mid?;
        if !maker.contains(mid) {
            return Some(mid);
        }
        let next = current.children.iter().find(|c| untouched(c, nv, breaker))?.clone();
        *current = next;
    }
}

fn claim_one(spec: &GameSpec, state: &GameState, e: Option<usize>) -> Move {
    legal_or_first(spec, state, e.map_or(Move::Pass, |e| Move::Claim(vec![e])))
}

/// Maker on `G_t(b)` owning both ends: claim `v_{t-1}`, then recurse into
/// a copy of `G_{t-1}(b)` that Breaker left untouched.
#[derive(Clone, Debug)]
pub struct MakerGtb {
    nv: usize,
    current: CopyNode,
}

impl MakerGtb {
    pub fn new(layout: &GtbLayout) -> Self {
        MakerGtb {
            nv: layout.digraph.nv(),
            current: layout.root.clone(),
        }
    }
}

impl Strategy for MakerGtb {
    fn id(&self) -> &'static str {
        "maker-gtb"
    }

    fn role(&self) -> Player {
        Player::Maker
    }

    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move> {
        let e = descend(&mut self.current, self.nv, &state.maker, &state.breaker);
        Ok(claim_one(spec, state, e))
    }

    fn box_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// Maker on `H_t(b)`: claim `x_0`, then a hub `x_i` whose copies are all
/// untouched, then play [`MakerGtb`] on an untouched copy towards `x_i`.
#[derive(Clone, Debug)]
pub struct MakerHtb {
    nv: usize,
    b: usize,
    copies: Vec<(usize, CopyNode)>,
    hub: Option<usize>,
    current: Option<CopyNode>,
}

impl MakerHtb {
    pub fn new(layout: &HtbLayout) -> Self {
        MakerHtb {
            nv: layout.digraph.nv(),
            b: layout.b,
            copies: layout.copies.clone(),
            hub: None,
            current: None,
        }
    }

    /// Next element of the auxiliary game, given the sets each side owns.
    fn pick(&mut self, maker: &ElementSet, breaker: &ElementSet) -> Option<usize> {
        if !maker.contains(0) {
            return Some(0);
        }
        let nv = self.nv;
        let hub = match self.hub {
            Some(h) => h,
            None => {
                let h = (1..=self.b + 1).find(|&i| {
                    !breaker.contains(i)
                        && self
                            .copies
                            .iter()
                            .filter(|(j, _)| *j == i)
                            .all(|(_, c)| untouched(c, nv, breaker))
                })?;
                *self.hub.insert(h)
            }
        };
        if !maker.contains(hub) {
            return Some(hub);
        }
        if self.current.is_none() {
            let c = self
                .copies
                .iter()
                .find(|(j, c)| *j == hub && untouched(c, nv, breaker))?
                .1
                .clone();
            self.current = Some(c);
        }
        descend(self.current.as_mut().expect("set above"), nv, maker, breaker)
    }
}

impl Strategy for MakerHtb {
    fn id(&self) -> &'static str {
        "maker-htb"
    }

    fn role(&self) -> Player {
        Player::Maker
    }

    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move> {
        let e = self.pick(&state.maker, &state.breaker);
        Ok(claim_one(spec, state, e))
    }

    fn box_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// Breaker on `G_t(b)` against a single preclaimed vertex: after every
/// move at most one Maker vertex has free out-arcs, and any two comparable
/// Maker vertices have the lower one's out-arcs blocked.
#[derive(Clone, Debug)]
pub struct BreakerGtbBlock {
    ctx: Ctx,
    seen: Option<ElementSet>,
}

impl BreakerGtbBlock {
    pub fn new(d: &RootedDigraph) -> Self {
        BreakerGtbBlock {
            ctx: Ctx::new(d),
            seen: None,
        }
    }
}

fn new_vertex(seen: &mut Option<ElementSet>, spec: &GameSpec, state: &GameState, nv: usize) -> Option<usize> {
    new_maker_elements(seen, spec, state).iter().find(|&e| e < nv)
}

impl Strategy for BreakerGtbBlock {
    fn id(&self) -> &'static str {
        "breaker-gtb-block"
    }

    fn role(&self) -> Player {
        Player::Breaker
    }

    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move> {
        let w = new_vertex(&mut self.seen, spec, state, self.ctx.nv);
        let wanted = w.map(|w| self.ctx.respond(state, w, None, None)).unwrap_or_default();
        Ok(padded_claim(spec, state, wanted))
    }

    fn box_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

fn slow_threshold(t: usize, i: usize) -> usize {
    if i < t {
        1 << (t - i - 1)
    } else {
        0
    }
}

/// Breaker on `G_t(b)` with both ends preclaimed by Maker: like
/// [`BreakerGtbBlock`], but only pairs joined by a path shorter than
/// `2^(t-i-1)` after his `i`-th move need blocking.
#[derive(Clone, Debug)]
pub struct BreakerGtbSlow {
    ctx: Ctx,
    t: usize,
    seen: Option<ElementSet>,
}

impl BreakerGtbSlow {
    pub fn new(layout: &GtbLayout) -> Self {
        BreakerGtbSlow {
            ctx: Ctx::new(&layout.digraph),
            t: layout.t,
            seen: None,
        }
    }
}

impl Strategy for BreakerGtbSlow {
    fn id(&self) -> &'static str {
        "breaker-gtb-slow"
    }

    fn role(&self) -> Player {
        Player::Breaker
    }

    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move> {
        let i = state.breaker_moves as usize + 1;
        let w = new_vertex(&mut self.seen, spec, state, self.ctx.nv);
        let thr = slow_threshold(self.t, i);
        let wanted = w
            .map(|w| self.ctx.respond(state, w, None, Some(thr)))
            .unwrap_or_default();
        Ok(padded_claim(spec, state, wanted))
    }

    fn box_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// Checks, after Breaker's `i`-th move (`i = state.breaker_moves`), that at
/// most one Maker vertex has free out-arcs and that Maker vertices `y != z`
/// joined by a path shorter than `2^(t-i-1)` have all out-arcs of `y`
/// claimed by Breaker. Vacuous once `i >= t`.
pub fn gtb_slow_invariant(d: &RootedDigraph, t: usize, state: &GameState) -> std::result::Result<(), String> {
    let i = state.breaker_moves as usize;
    if i == 0 || i >= t {
        return Ok(());
    }
    let ctx = Ctx::new(d);
    let maker: Vec<usize> = (0..d.nv()).filter(|&v| state.maker.contains(v)).collect();
    let open: Vec<usize> = maker
        .iter()
        .copied()
        .filter(|&v| !ctx.free_out(v, state, None).is_empty())
        .collect();
    if open.len() > 1 {
        return Err(format!(
            "after move {i}: Maker vertices {open:?} all have free out-arcs"
        ));
    }
    let thr = slow_threshold(t, i);
    for &y in &maker {
        for &z in &maker {
            if y == z {
                continue;
            }
            if let Some(l) = ctx.dist[y][z] {
                let blocked = d.out_arcs(y).iter().all(|&a| state.breaker.contains(d.nv() + a));
                if l < thr && !blocked {
                    return Err(format!(
                        "after move {i}: path of length {l} from {y} to {z} but {y} still has out-arcs"
                    ));
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
struct CopyInfo {
    hub: usize,
    inner: ElementSet,
    scope: Scope,
}

fn copy_infos(layout: &HtbLayout) -> Vec<CopyInfo> {
    let nv = layout.digraph.nv();
    layout
        .copies
        .iter()
        .map(|(hub, c)| {
            let inner: ElementSet = c.inner_vertices().into_iter().collect();
            let mut vertices = inner;
            vertices.insert(0);
            vertices.insert(*hub);
            CopyInfo {
                hub: *hub,
                inner,
                scope: Scope {
                    vertices,
                    arcs: c.arcs().into_iter().map(|a| nv + a).collect(),
                },
            }
        })
        .collect()
}

/// Breaker on `H_t(b)` with a single opening element: take `x_0`, then
/// block globally as in [`BreakerGtbBlock`].
#[derive(Clone, Debug)]
pub struct BreakerHtbPremove {
    ctx: Ctx,
    seen: Option<ElementSet>,
}

impl BreakerHtbPremove {
    pub fn new(layout: &HtbLayout) -> Self {
        BreakerHtbPremove {
            ctx: Ctx::new(&layout.digraph),
            seen: None,
        }
    }
}

impl Strategy for BreakerHtbPremove {
    fn id(&self) -> &'static str {
        "breaker-htb-premove"
    }

    fn role(&self) -> Player {
        Player::Breaker
    }

    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move> {
        let mut wanted = vec![0];
        if let Some(w) = new_vertex(&mut self.seen, spec, state, self.ctx.nv) {
            wanted.extend(self.ctx.respond(state, w, None, None));
        }
        Ok(padded_claim(spec, state, wanted))
    }

    fn box_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SlowMode {
    Start,
    /// Maker did not open with `x_0`; Breaker took it and blocks.
    Blocking,
    /// Maker opened with `x_0`; Breaker's first move was filler.
    AfterHub0,
    /// Maker's second vertex was a hub: every hub counts as Maker's and
    /// each copy gets the slow strategy.
    AllHubs,
    /// Maker's second vertex lies inside copy `.0`: that copy is blocked,
    /// the others get the slow strategy.
    Mixed(usize),
}

/// Breaker on `H_t(b)` keeping Maker from winning within `t - 1` rounds.
#[derive(Clone, Debug)]
pub struct BreakerHtbSlow {
    ctx: Ctx,
    t: usize,
    copies: Vec<CopyInfo>,
    mode: SlowMode,
    seen: Option<ElementSet>,
}

impl BreakerHtbSlow {
    pub fn new(layout: &HtbLayout) -> Self {
        BreakerHtbSlow {
            ctx: Ctx::new(&layout.digraph),
            t: layout.t,
            copies: copy_infos(layout),
            mode: SlowMode::Start,
            seen: None,
        }
    }

    fn is_hub(&self, v: usize) -> bool {
        v <= self.copies.iter().map(|c| c.hub).max().unwrap_or(0)
    }

    fn copy_of(&self, v: usize) -> Option<usize> {
        self.copies.iter().position(|c| c.inner.contains(v))
    }

    fn block(&self, state: &GameState, c: usize, w: usize) -> Vec<usize> {
        self.ctx.respond(state, w, Some(&self.copies[c].scope), None)
    }

    fn slow(&self, state: &GameState, c: usize, w: usize) -> Vec<usize> {
        let i = (state.maker & self.copies[c].inner).len();
        let thr = slow_threshold(self.t - 2, i);
        self.ctx.respond(state, w, Some(&self.copies[c].scope), Some(thr))
    }
}

impl Strategy for BreakerHtbSlow {
    fn id(&self) -> &'static str {
        "breaker-htb-slow"
    }

    fn role(&self) -> Player {
        Player::Breaker
    }

    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move> {
        let w = new_vertex(&mut self.seen, spec, state, self.ctx.nv);
        let wanted = match (self.mode, w) {
            (SlowMode::Start, _) => {
                if state.maker.contains(0) {
                    self.mode = SlowMode::AfterHub0;
                    Vec::new()
                } else {
                    self.mode = SlowMode::Blocking;
                    vec![0]
                }
            }
            (_, None) => Vec::new(),
            (SlowMode::Blocking, Some(w)) => self.ctx.respond(state, w, None, None),
            (SlowMode::AfterHub0, Some(w)) => match self.copy_of(w) {
                Some(c) => {
                    self.mode = SlowMode::Mixed(c);
                    self.block(state, c, w)
                }
                None => {
                    self.mode = SlowMode::AllHubs;
                    Vec::new()
                }
            },
            (SlowMode::AllHubs, Some(w)) => match self.copy_of(w) {
                Some(c) => self.slow(state, c, w),
                None => Vec::new(),
            },
            (SlowMode::Mixed(cv), Some(w)) => match self.copy_of(w) {
                Some(c) if c == cv => self.block(state, c, w),
                Some(c) => self.slow(state, c, w),
                None if self.is_hub(w) && w == self.copies[cv].hub => self.block(state, cv, w),
                None => Vec::new(),
            },
        };
        Ok(padded_claim(spec, state, wanted))
    }

    fn box_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// Maker on `H(m, b, s, t)` playing whole associated blocks: the shared
/// block at each lifted level, then [`MakerHtb`] on the base level read
/// through the block structure.
#[derive(Clone, Debug)]
pub struct MakerHmbst {
    layout: Arc<HmbstLayout>,
    path: Vec<usize>,
    base: Option<MakerHtb>,
}

impl MakerHmbst {
    pub fn new(layout: &HmbstLayout) -> Self {
        MakerHmbst {
            layout: Arc::new(layout.clone()),
            path: Vec::new(),
            base: None,
        }
    }

    fn pick(&mut self, maker: &ElementSet, breaker: &ElementSet) -> Option<ElementSet> {
        let layout = Arc::clone(&self.layout);
        let mut node: &HmbstLayout = &layout;
        let mut off = 0;
        let shift = |s: &ElementSet, off: usize| s.iter().map(|x| x + off).collect::<ElementSet>();
        for level in 0.. {
            match &node.shape {
                HmbstShape::Lifted { v, offsets, copies } => {
                    let vs = shift(v, off);
                    if !vs.is_subset(maker) {
                        return Some(vs);
                    }
                    if level == self.path.len() {
                        let j = (0..copies.len()).find(|&j| {
                            let lo = off + offsets[j];
                            let hi = lo + copies[j].hypergraph.n();
                            breaker.iter().all(|e| e < lo || e >= hi)
                        })?;
                        self.path.push(j);
                    }
                    let j = self.path[level];
                    off += offsets[j];
                    node = &copies[j];
                }
                HmbstShape::Base {
                    htb,
                    vertex_sets,
                    extras,
                } => {
                    let nv = htb.digraph.nv();
                    let mut pm = ElementSet::new();
                    let mut pb = ElementSet::new();
                    for (x, vx) in vertex_sets.iter().enumerate() {
                        let vx = shift(vx, off);
                        if vx.is_subset(maker) {
                            pm.insert(x);
                        }
                        if vx.intersects(breaker) {
                            pb.insert(x);
                        }
                    }
                    for (i, ex) in extras.iter().enumerate() {
                        if shift(ex, off).intersects(breaker) {
                            pb.insert(nv + i);
                        }
                    }
                    let base = self.base.get_or_insert_with(|| MakerHtb::new(htb));
                    let e = base.pick(&pm, &pb)?;
                    return Some(if e < nv {
                        shift(&vertex_sets[e], off)
                    } else {
                        shift(&extras[e - nv], off)
                    });
                }
            }
        }
        None
    }
}

impl Strategy for MakerHmbst {
    fn id(&self) -> &'static str {
        "maker-hmbst"
    }

    fn role(&self) -> Player {
        Player::Maker
    }

    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move> {
        let wanted = self.pick(&state.maker, &state.breaker).unwrap_or_default();
        Ok(padded_claim(spec, state, wanted.iter()))
    }

    fn box_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

//! Exact game values by memoized AND/OR search.
//!
//! The search only looks at *live* winning sets: sets without a Breaker
//! element, of size at most the size bound, that Maker could still complete
//! within the remaining round budget. Elements outside every live set are
//! irrelevant to both players: claiming one is never better than claiming a
//! relevant element, so moves are generated from the relevant elements only.
//! A position is therefore determined by Maker's relevant elements, the free
//! relevant elements and the remaining budget, which is what the memo table
//! is keyed on.

use std::cell::RefCell;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use dashmap::DashMap;
use rayon::prelude::*;
use rustc_hash::{FxBuildHasher, FxHashMap};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bitset::{k_subsets, ElementSet, CAPACITY};
use crate::digraph::RootedDigraph;
use crate::error::{Error, Result};
use crate::game::{GameKind, GameSpec, GameState, Move, Player};
use crate::hypergraph::Hypergraph;

/// Default cap on memo entries.
pub const DEFAULT_MEMO_CAP: usize = 1 << 27;

/// Environment variable overriding [`DEFAULT_MEMO_CAP`].
pub const MEMO_CAP_ENV: &str = "POSGAMES_MEMO_CAP";

/// Round and size bounds on Maker's goal. `None` means unbounded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Objective {
    pub max_rounds: Option<u32>,
    pub max_size: Option<usize>,
}

impl Objective {
    pub fn unbounded() -> Self {
        Objective::default()
    }

    pub fn new(max_rounds: Option<u32>, max_size: Option<usize>) -> Self {
        Objective { max_rounds, max_size }
    }

    pub fn rounds(t: u32) -> Self {
        Objective::new(Some(t), None)
    }

    pub fn rounds_and_size(t: u32, s: usize) -> Self {
        Objective::new(Some(t), Some(s))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of memo entries before the search aborts.
    pub memo_cap: usize,
    /// Worker threads for the root moves; 1 means fully sequential.
    pub jobs: usize,
    /// Disables the transposition table when false.
    pub memoize: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        let memo_cap = std::env::var(MEMO_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MEMO_CAP);
        SolverConfig {
            memo_cap,
            jobs: 1,
            memoize: true,
        }
    }
}

/// A round count or set size, or `Infinite` when Maker cannot win at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GameValue {
    Finite(usize),
    Infinite,
}

impl GameValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            GameValue::Finite(v) => Some(v),
            GameValue::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, GameValue::Finite(_))
    }
}

impl From<Option<usize>> for GameValue {
    fn from(v: Option<usize>) -> Self {
        v.map_or(GameValue::Infinite, GameValue::Finite)
    }
}

impl fmt::Display for GameValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameValue::Finite(v) => write!(f, "{v}"),
            GameValue::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for GameValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.finite().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GameValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Option::<usize>::deserialize(d)?.into())
    }
}

/// Winnability, fastest win, smallest winnable set and the (rounds, size)
/// trade-off between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub maker_wins: bool,
    pub min_rounds: GameValue,
    pub min_size: GameValue,
    /// Pairs `(t, s)` with strictly increasing `t` and strictly decreasing
    /// `s`: Maker can claim a winning set of size at most `s` within `t`
    /// rounds, and no pair dominates another.
    pub frontier: Vec<(usize, usize)>,
}

impl SolveResult {
    fn losing() -> Self {
        SolveResult {
            maker_wins: false,
            min_rounds: GameValue::Infinite,
            min_size: GameValue::Infinite,
            frontier: Vec::new(),
        }
    }
}

/// Checks the hypotheses under which Maker may be restricted to claiming
/// whole sets of `family` or completing a winning set.
pub fn validate_restriction(h: &Hypergraph, family: &[ElementSet], m: usize, b: usize) -> Result<()> {
    let bad = |msg: String| Err(Error::Restriction(msg));
    if m > b {
        return bad(format!("Maker bias {m} exceeds Breaker bias {b}"));
    }
    if let Some(f) = h.edges().iter().find(|f| f.len() <= m) {
        return bad(format!("winning set {f:?} has at most {m} elements"));
    }
    let mut union = ElementSet::new();
    for v in family {
        if v.len() != m {
            return bad(format!("associated set {v:?} does not have {m} elements"));
        }
        if v.intersects(&union) {
            return bad(format!("associated set {v:?} overlaps another one"));
        }
        if v.bound() > h.n() {
            return bad(format!("associated set {v:?} leaves the board"));
        }
        union |= *v;
        for f in h.edges() {
            if f.intersects(v) && !v.is_subset(f) {
                return bad(format!("winning set {f:?} splits associated set {v:?}"));
            }
        }
    }
    for x in (h.universe() - union).iter() {
        let count = h.edges().iter().filter(|f| f.contains(x)).count();
        if count > 1 {
            return bad(format!(
                "element {x} outside the associated sets lies in {count} winning sets"
            ));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    MakerBreaker,
    WaiterClient,
}

/// A game reduced to what the search needs, for one size bound.
struct Prepared {
    mode: Mode,
    edges: Vec<ElementSet>,
    restricted: ElementSet,
    family: Option<Vec<ElementSet>>,
    m: usize,
    b: usize,
    unbounded: u32,
}

impl Prepared {
    fn new(spec: &GameSpec, max_size: Option<usize>, family: Option<&[ElementSet]>) -> Result<Self> {
        let mode = match spec.kind {
            GameKind::WaiterClient => Mode::WaiterClient,
            GameKind::MakerBreaker | GameKind::AuxEdgeGame => Mode::MakerBreaker,
        };
        if let Some(fam) = family {
            if mode == Mode::WaiterClient {
                return Err(Error::Restriction(
                    "move restrictions apply to Maker-Breaker games only".into(),
                ));
            }
            validate_restriction(&spec.board, fam, spec.maker_bias, spec.breaker_bias)?;
        }
        if !spec.maker_restricted.is_empty() && spec.maker_bias != 1 {
            return Err(Error::invalid("restricted elements require Maker bias 1"));
        }
        let board = match max_size {
            Some(s) => spec.board.restrict_sizes(s),
            None => spec.board.clone(),
        };
        let edges = board.minimalize().edges().to_vec();
        let n = spec.n();
        let step = match mode {
            Mode::MakerBreaker => spec.maker_bias,
            Mode::WaiterClient => 1,
        };
        let unbounded = n.div_ceil(step).max(1) as u32;
        Ok(Prepared {
            mode,
            edges,
            restricted: spec.maker_restricted,
            family: family.map(|f| f.to_vec()),
            m: spec.maker_bias,
            b: spec.breaker_bias,
            unbounded,
        })
    }

    fn budget(&self, max_rounds: Option<u32>, used: u32) -> u32 {
        let t = max_rounds.map_or(self.unbounded, |t| t.min(self.unbounded));
        t.saturating_sub(used)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Key {
    core: ElementSet,
    open: ElementSet,
    budget: u32,
    node: u8,
}

/// Transposition table.
pub(crate) trait Memo {
    fn get(&self, key: &Key) -> Option<bool>;
    fn put(&self, key: Key, value: bool);
    fn len(&self) -> usize;
}

#[derive(Default)]
pub(crate) struct LocalMemo(RefCell<FxHashMap<Key, bool>>);

impl Memo for LocalMemo {
    fn get(&self, key: &Key) -> Option<bool> {
        self.0.borrow().get(key).copied()
    }
    fn put(&self, key: Key, value: bool) {
        self.0.borrow_mut().insert(key, value);
    }
    fn len(&self) -> usize {
        self.0.borrow().len()
    }
}

/// Concurrent table; inserting the same entry twice is harmless because
/// values are exact.
#[derive(Default)]
pub(crate) struct SharedMemo(DashMap<Key, bool, FxBuildHasher>);

impl Memo for SharedMemo {
    fn get(&self, key: &Key) -> Option<bool> {
        self.0.get(key).map(|v| *v)
    }
    fn put(&self, key: Key, value: bool) {
        self.0.insert(key, value);
    }
    fn len(&self) -> usize {
        self.0.len()
    }
}

const MAKER: u8 = 0;
const BREAKER: u8 = 1;
const WAITER: u8 = 2;

/// Live sets and derived data at one node.
struct Frame {
    /// Union of live sets minus Maker's set.
    open: ElementSet,
    /// Maker's elements inside live sets.
    core: ElementSet,
    /// Smallest number of missing elements over live sets.
    closest: usize,
    /// Live sets missing at most `threat` elements, as missing parts.
    threats: Vec<ElementSet>,
    weights: Vec<(usize, f64)>,
}

struct Search<'a, M> {
    p: &'a Prepared,
    memo: &'a M,
    memoize: bool,
    cap: usize,
    nodes: AtomicU64,
}

impl<'a, M: Memo> Search<'a, M> {
    fn new(p: &'a Prepared, memo: &'a M, config: &SolverConfig) -> Self {
        Search {
            p,
            memo,
            memoize: config.memoize,
            cap: config.memo_cap,
            nodes: AtomicU64::new(0),
        }
    }

    /// Collects live sets: disjoint from `opp`, missing at most `reach`
    /// elements of `own`. Returns `None` if some live set is already owned.
    fn frame(&self, own: ElementSet, opp: ElementSet, reach: usize, threat: usize) -> Option<Frame> {
        let mut open = ElementSet::new();
        let mut covered = ElementSet::new();
        let mut closest = usize::MAX;
        let mut threats = Vec::new();
        let mut weight = [0f64; CAPACITY];
        for f in &self.p.edges {
            if f.intersects(&opp) {
                continue;
            }
            let missing = *f - own;
            let k = missing.len();
            if k == 0 {
                return None;
            }
            if k > reach {
                continue;
            }
            closest = closest.min(k);
            if k <= threat {
                threats.push(missing);
            }
            open |= missing;
            covered |= *f;
            let w = (-(k as f64)).exp2();
            for x in missing.iter() {
                weight[x] += w;
            }
        }
        let mut weights: Vec<(usize, f64)> = open.iter().map(|x| (x, weight[x])).collect();
        weights.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        Some(Frame {
            open,
            core: covered & own,
            closest,
            threats,
            weights,
        })
    }

    fn lookup(&self, key: &Key) -> Option<bool> {
        if self.memoize {
            self.memo.get(key)
        } else {
            None
        }
    }

    fn store(&self, key: Key, value: bool) -> Result<bool> {
        if self.memoize {
            if self.memo.len() >= self.cap {
                return Err(Error::Guard {
                    what: "memo entries",
                    limit: self.cap as u64,
                });
            }
            self.memo.put(key, value);
        }
        Ok(value)
    }

    /// Maker's options at a node, best first. An empty list means Maker
    /// can only pass.
    fn maker_options(&self, fr: &Frame) -> Vec<ElementSet> {
        if let Some(family) = &self.p.family {
            let mut opts: Vec<(f64, usize, ElementSet)> = family
                .iter()
                .filter(|v| v.is_subset(&fr.open))
                .map(|v| {
                    let w: f64 = fr.weights.iter().filter(|(x, _)| v.contains(*x)).map(|p| p.1).sum();
                    (w, v.first().unwrap_or(0), *v)
                })
                .collect();
            opts.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
            return opts.into_iter().map(|o| o.2).collect();
        }
        let pool: Vec<usize> = fr
            .weights
            .iter()
            .map(|p| p.0)
            .filter(|&x| !self.p.restricted.contains(x))
            .collect();
        let k = self.p.m.min(pool.len());
        if k == 0 {
            return Vec::new();
        }
        k_subsets(&pool, k)
    }

    fn breaker_options(&self, fr: &Frame, bias: usize) -> Vec<ElementSet> {
        let pool: Vec<usize> = fr.weights.iter().map(|p| p.0).collect();
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(bias);
        hitting_subsets(&pool, 0, bias, &fr.threats, &mut chosen, &mut out);
        out
    }

    fn maker(&self, own: ElementSet, opp: ElementSet, budget: u32) -> Result<bool> {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        if budget == 0 {
            return Ok(false);
        }
        let m = self.p.m;
        let Some(fr) = self.frame(own, opp, m * budget as usize, 0) else {
            return Ok(true);
        };
        if fr.open.is_empty() {
            return Ok(false);
        }
        if fr.closest <= m {
            return Ok(true);
        }
        if budget == 1 {
            return Ok(false);
        }
        let key = Key {
            core: fr.core,
            open: fr.open,
            budget,
            node: MAKER,
        };
        if let Some(v) = self.lookup(&key) {
            return Ok(v);
        }
        let opts = self.maker_options(&fr);
        let value = if opts.is_empty() {
            self.breaker(own, opp, budget - 1, self.p.b, true)?
        } else {
            let mut win = false;
            for x in opts {
                if self.breaker(own | x, opp, budget - 1, self.p.b, true)? {
                    win = true;
                    break;
                }
            }
            win
        };
        self.store(key, value)
    }

    /// Breaker to move; Maker has `budget` moves left afterwards.
    fn breaker(&self, own: ElementSet, opp: ElementSet, budget: u32, bias: usize, memo_ok: bool) -> Result<bool> {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        if budget == 0 {
            return Ok(false);
        }
        let m = self.p.m;
        let Some(fr) = self.frame(own, opp, m * budget as usize, m) else {
            return Ok(true);
        };
        if fr.open.len() <= bias {
            return Ok(false);
        }
        let key = Key {
            core: fr.core,
            open: fr.open,
            budget,
            node: BREAKER,
        };
        if memo_ok {
            if let Some(v) = self.lookup(&key) {
                return Ok(v);
            }
        }
        let mut value = true;
        for y in self.breaker_options(&fr, bias) {
            if !self.maker(own, opp | y, budget)? {
                value = false;
                break;
            }
        }
        if memo_ok {
            self.store(key, value)
        } else {
            Ok(value)
        }
    }

    /// Waiter to offer; `budget` rounds left including this one.
    fn waiter(&self, own: ElementSet, opp: ElementSet, budget: u32) -> Result<bool> {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        let Some(fr) = self.frame(own, opp, budget as usize, 1) else {
            return Ok(true);
        };
        if budget == 0 || fr.open.len() < 2 {
            return Ok(false);
        }
        if budget == 1 && fr.threats.len() < 2 {
            return Ok(false);
        }
        let key = Key {
            core: fr.core,
            open: fr.open,
            budget,
            node: WAITER,
        };
        if let Some(v) = self.lookup(&key) {
            return Ok(v);
        }
        let mut value = false;
        for pair in self.waiter_options(&fr) {
            if self.after_offer(own, opp, pair, budget - 1)? {
                value = true;
                break;
            }
        }
        self.store(key, value)
    }

    fn waiter_options(&self, fr: &Frame) -> Vec<ElementSet> {
        let pool: Vec<usize> = fr.weights.iter().map(|p| p.0).collect();
        k_subsets(&pool, 2)
    }

    /// Both of Client's choices must leave Waiter winning.
    fn after_offer(&self, own: ElementSet, opp: ElementSet, offer: ElementSet, budget: u32) -> Result<bool> {
        if offer.len() == 1 {
            return self.waiter(own, opp | offer, budget);
        }
        for x in offer.iter() {
            let rest = offer - ElementSet::singleton(x);
            if !self.waiter(own | rest, opp | ElementSet::singleton(x), budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Value of an arbitrary state with `budget` Maker rounds left.
    fn state_value(&self, spec: &GameSpec, state: &GameState, budget: u32) -> Result<bool> {
        match self.p.mode {
            Mode::MakerBreaker => match state.to_move {
                Player::Maker => self.maker(state.maker, state.breaker, budget),
                Player::Breaker => {
                    let bias = spec.current_bias(state);
                    self.breaker(state.maker, state.breaker, budget, bias, bias == self.p.b)
                }
            },
            Mode::WaiterClient => match state.offer {
                None => self.waiter(state.maker, state.breaker, budget),
                Some(offer) => {
                    if budget == 0 {
                        return Ok(self.frame(state.maker, state.breaker, 0, 0).is_none());
                    }
                    self.after_offer(state.maker, state.breaker, offer, budget - 1)
                }
            },
        }
    }
}

impl<'a, M: Memo + Sync> Search<'a, M> {
    /// Like `state_value`, splitting the root's children across threads.
    fn state_value_parallel(&self, spec: &GameSpec, state: &GameState, budget: u32) -> Result<bool> {
        let own = state.maker;
        let opp = state.breaker;
        if budget == 0 || state.offer.is_some() {
            return self.state_value(spec, state, budget);
        }
        let p = self.p;
        let any = |children: Vec<ElementSet>, f: &(dyn Fn(ElementSet) -> Result<bool> + Sync)| match children
            .into_par_iter()
            .find_map_any(|c| match f(c) {
                Ok(false) => None,
                other => Some(other),
            }) {
            Some(r) => r,
            None => Ok(false),
        };
        match (p.mode, state.to_move) {
            (Mode::MakerBreaker, Player::Maker) => {
                let Some(fr) = self.frame(own, opp, p.m * budget as usize, 0) else {
                    return Ok(true);
                };
                if fr.open.is_empty() || fr.closest <= p.m || budget == 1 {
                    return self.state_value(spec, state, budget);
                }
                let opts = self.maker_options(&fr);
                if opts.is_empty() {
                    return self.state_value(spec, state, budget);
                }
                any(opts, &|x| self.breaker(own | x, opp, budget - 1, p.b, true))
            }
            (Mode::MakerBreaker, Player::Breaker) => {
                let bias = spec.current_bias(state);
                let Some(fr) = self.frame(own, opp, p.m * budget as usize, p.m) else {
                    return Ok(true);
                };
                if fr.open.len() <= bias {
                    return Ok(false);
                }
                let refuted = any(self.breaker_options(&fr, bias), &|y| {
                    self.maker(own, opp | y, budget).map(|v| !v)
                })?;
                Ok(!refuted)
            }
            (Mode::WaiterClient, _) => {
                let Some(fr) = self.frame(own, opp, budget as usize, 1) else {
                    return Ok(true);
                };
                if fr.open.len() < 2 {
                    return Ok(false);
                }
                any(self.waiter_options(&fr), &|pair| {
                    self.after_offer(own, opp, pair, budget - 1)
                })
            }
        }
    }
}

/// Enumerates `k`-subsets of `pool` (in pool order) that meet every set in
/// `threats`.
fn hitting_subsets(
    pool: &[usize],
    start: usize,
    k: usize,
    threats: &[ElementSet],
    chosen: &mut Vec<usize>,
    out: &mut Vec<ElementSet>,
) {
    if chosen.len() == k {
        let s: ElementSet = chosen.iter().copied().collect();
        if threats.iter().all(|t| t.intersects(&s)) {
            out.push(s);
        }
        return;
    }
    let slots = k - chosen.len();
    if !threats.is_empty() {
        // prune when the unhit threats need more elements than remain
        let s: ElementSet = chosen.iter().copied().collect();
        let mut used = ElementSet::new();
        let mut disjoint = 0;
        for t in threats.iter().filter(|t| !t.intersects(&s)) {
            if !t.intersects(&used) {
                used |= *t;
                disjoint += 1;
                if disjoint > slots {
                    return;
                }
            }
        }
    }
    for i in start..=pool.len() - slots {
        chosen.push(pool[i]);
        hitting_subsets(pool, i + 1, k, threats, chosen, out);
        chosen.pop();
    }
}

/// Decides the objective from the initial position of `spec`.
pub fn decide(spec: &GameSpec, obj: Objective, family: Option<&[ElementSet]>, config: &SolverConfig) -> Result<bool> {
    decide_from(spec, &spec.initial_state(), obj, family, config)
}

/// Decides whether Maker (Waiter) can reach the objective from `state`.
/// Round bounds count from the start of the game.
pub fn decide_from(
    spec: &GameSpec,
    state: &GameState,
    obj: Objective,
    family: Option<&[ElementSet]>,
    config: &SolverConfig,
) -> Result<bool> {
    let p = Prepared::new(spec, obj.max_size, family)?;
    let budget = p.budget(obj.max_rounds, state.maker_moves);
    if config.jobs > 1 {
        let memo = SharedMemo::default();
        run_parallel(&p, &memo, config, spec, state, budget)
    } else {
        let memo = LocalMemo::default();
        Search::new(&p, &memo, config).state_value(spec, state, budget)
    }
}

fn run_parallel(
    p: &Prepared,
    memo: &SharedMemo,
    config: &SolverConfig,
    spec: &GameSpec,
    state: &GameState,
    budget: u32,
) -> Result<bool> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
    pool.install(|| Search::new(p, memo, config).state_value_parallel(spec, state, budget))
}

/// `(m:b)` Maker-Breaker game on `h`.
pub fn decide_mb(
    h: &Hypergraph,
    m: usize,
    b: usize,
    first: Player,
    obj: Objective,
    family: Option<&[ElementSet]>,
) -> Result<bool> {
    let spec = GameSpec::maker_breaker(h.clone(), m, b, first)?;
    decide(&spec, obj, family, &SolverConfig::default())
}

/// Unbiased Waiter-Client game on `h`.
pub fn decide_wc(h: &Hypergraph, obj: Objective) -> Result<bool> {
    decide(&GameSpec::waiter_client(h.clone()), obj, None, &SolverConfig::default())
}

/// The auxiliary edge game on `d` with Breaker bias `b` and Maker owning the
/// vertices in `preclaimed`.
pub fn solve_aux_game(d: &RootedDigraph, b: usize, preclaimed: &[usize], obj: Objective) -> Result<bool> {
    let spec = GameSpec::aux(d.clone(), b, preclaimed)?;
    decide(&spec, obj, None, &SolverConfig::default())
}

/// Answers many objective queries on one game, sharing transposition
/// tables between queries with the same size bound.
pub struct ValueSolver<'s> {
    spec: &'s GameSpec,
    family: Option<&'s [ElementSet]>,
    config: SolverConfig,
    tables: Vec<(Option<usize>, Prepared, LocalMemo)>,
    shared: Vec<(Option<usize>, Prepared, SharedMemo)>,
    nodes: u64,
}

impl<'s> ValueSolver<'s> {
    pub fn new(spec: &'s GameSpec, family: Option<&'s [ElementSet]>, config: SolverConfig) -> Result<Self> {
        // validate once up front
        Prepared::new(spec, None, family)?;
        Ok(ValueSolver {
            spec,
            family,
            config,
            tables: Vec::new(),
            shared: Vec::new(),
            nodes: 0,
        })
    }

    /// Search nodes visited so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn decide(&mut self, obj: Objective) -> Result<bool> {
        let state = self.spec.initial_state();
        let size = obj.max_size;
        if self.config.jobs > 1 {
            let i = match self.shared.iter().position(|t| t.0 == size) {
                Some(i) => i,
                None => {
                    let p = Prepared::new(self.spec, size, self.family)?;
                    self.shared.push((size, p, SharedMemo::default()));
                    self.shared.len() - 1
                }
            };
            let (_, p, memo) = &self.shared[i];
            let budget = p.budget(obj.max_rounds, state.maker_moves);
            let config = self.config.clone();
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(config.jobs)
                .build()
                .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
            let (v, nodes) = pool.install(|| {
                let s = Search::new(p, memo, &config);
                let v = s.state_value_parallel(self.spec, &state, budget);
                (v, s.nodes.load(Ordering::Relaxed))
            });
            self.nodes += nodes;
            v
        } else {
            let i = match self.tables.iter().position(|t| t.0 == size) {
                Some(i) => i,
                None => {
                    let p = Prepared::new(self.spec, size, self.family)?;
                    self.tables.push((size, p, LocalMemo::default()));
                    self.tables.len() - 1
                }
            };
            let (_, p, memo) = &self.tables[i];
            let budget = p.budget(obj.max_rounds, state.maker_moves);
            let s = Search::new(p, memo, &self.config);
            let v = s.state_value(self.spec, &state, budget);
            self.nodes += s.nodes.load(Ordering::Relaxed);
            v
        }
    }

    fn unbounded_rounds(&self) -> u32 {
        let step = match self.spec.kind {
            GameKind::WaiterClient => 1,
            _ => self.spec.maker_bias,
        };
        self.spec.n().div_ceil(step).max(1) as u32
    }

    /// All game values of the game.
    pub fn values(&mut self) -> Result<SolveResult> {
        if !self.decide(Objective::unbounded())? {
            return Ok(SolveResult::losing());
        }
        let horizon = self.unbounded_rounds();
        let mut min_rounds = None;
        for t in 1..=horizon {
            if self.decide(Objective::rounds(t))? {
                min_rounds = Some(t);
                break;
            }
        }
        let min_rounds = min_rounds.expect("an unbounded win is a win within the horizon");
        let sizes = self.spec.board.edge_sizes();
        let mut min_size = None;
        for &s in &sizes {
            if self.decide(Objective::new(None, Some(s)))? {
                min_size = Some(s);
                break;
            }
        }
        let min_size = min_size.expect("an unbounded win claims some winning set");
        let mut frontier = Vec::new();
        let mut best = usize::MAX;
        for t in min_rounds..=horizon {
            for &s in sizes.iter().take_while(|&&s| s < best) {
                if self.decide(Objective::rounds_and_size(t, s))? {
                    frontier.push((t as usize, s));
                    best = s;
                    break;
                }
            }
            if best == min_size {
                break;
            }
        }
        Ok(SolveResult {
            maker_wins: true,
            min_rounds: GameValue::Finite(min_rounds as usize),
            min_size: GameValue::Finite(min_size),
            frontier,
        })
    }
}

/// Game values of an arbitrary game spec.
pub fn spec_values(spec: &GameSpec, family: Option<&[ElementSet]>, config: &SolverConfig) -> Result<SolveResult> {
    ValueSolver::new(spec, family, config.clone())?.values()
}

/// Game values of the `(m:b)` Maker-Breaker game on `h`.
pub fn game_values(h: &Hypergraph, m: usize, b: usize, first: Player) -> Result<SolveResult> {
    let spec = GameSpec::maker_breaker(h.clone(), m, b, first)?;
    spec_values(&spec, None, &SolverConfig::default())
}

/// Game values of the unbiased Waiter-Client game on `h`.
pub fn wc_game_values(h: &Hypergraph) -> Result<SolveResult> {
    spec_values(&GameSpec::waiter_client(h.clone()), None, &SolverConfig::default())
}

/// A first move for the player to move that achieves the objective if one
/// exists (for Maker or Waiter), or that refutes it (for Breaker or Client).
/// Moves are tried in `legal_moves` order, so the lowest such move is
/// returned.
pub fn optimal_move(spec: &GameSpec, state: &GameState, obj: Objective, config: &SolverConfig) -> Result<Option<Move>> {
    let moves = crate::game::legal_moves(spec, state);
    let moves = if moves.is_empty() { vec![Move::Pass] } else { moves };
    let maker_side = state.to_move == Player::Maker;
    for mv in moves {
        let next = crate::game::apply_move(spec, state, &mv)?;
        let won = crate::game::status(spec, &next).witness.is_some_and(|w| {
            obj.max_size.is_none_or(|s| w.len() <= s) && obj.max_rounds.is_none_or(|t| next.maker_moves <= t)
        });
        let v = won || decide_from(spec, &next, obj, None, config)?;
        if v == maker_side {
            return Ok(Some(mv));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn tiny_maker_breaker() {
        let g = h(2, &[&[0]]);
        assert!(decide_mb(&g, 1, 1, Player::Maker, Objective::rounds_and_size(1, 1), None).unwrap());
        let pair = h(2, &[&[0, 1]]);
        assert!(!decide_mb(&pair, 1, 1, Player::Maker, Objective::unbounded(), None).unwrap());
        assert!(decide_mb(&pair, 2, 1, Player::Maker, Objective::rounds(1), None).unwrap());
    }

    #[test]
    fn tiny_waiter_client() {
        assert!(!decide_wc(&h(1, &[&[0]]), Objective::unbounded()).unwrap());
        assert!(!decide_wc(&h(2, &[&[0, 1]]), Objective::unbounded()).unwrap());
        // two disjoint singletons: offer both, Waiter gets one
        assert!(decide_wc(&h(2, &[&[0], &[1]]), Objective::rounds(1)).unwrap());
    }

    #[test]
    fn complete_uniform_values() {
        let k63 = Hypergraph::empty(6).unwrap().add_all_k_subsets(3).unwrap();
        let r = game_values(&k63, 1, 1, Player::Maker).unwrap();
        assert!(r.maker_wins);
        assert_eq!(r.min_rounds, GameValue::Finite(3));
        assert_eq!(r.min_size, GameValue::Finite(3));
        assert_eq!(r.frontier, vec![(3, 3)]);
    }

    #[test]
    fn frontier_records_tradeoff() {
        // a 1-round win needs the big set {0..3} with bias 4; the pair {4,5}
        // is a Breaker-proof 2-round win only with Maker bias 2 and one
        // Breaker element... use a board where both options exist
        let g = h(6, &[&[0, 1, 2, 3], &[4, 5]]);
        let r = game_values(&g, 4, 1, Player::Maker).unwrap();
        assert_eq!(r.min_rounds, GameValue::Finite(1));
        assert_eq!(r.min_size, GameValue::Finite(2));
        assert_eq!(r.frontier, vec![(1, 2)]);
    }

    #[test]
    fn restriction_is_validated() {
        let g = h(3, &[&[0, 1, 2]]);
        let fam = [
            ElementSet::singleton(0),
            ElementSet::singleton(1) | ElementSet::singleton(2),
        ];
        assert!(matches!(
            decide_mb(&g, 1, 1, Player::Maker, Objective::unbounded(), Some(&fam)),
            Err(Error::Restriction(_))
        ));
    }

    #[test]
    fn memo_cap_is_reported() {
        let k63 = Hypergraph::empty(6).unwrap().add_all_k_subsets(3).unwrap();
        let spec = GameSpec::maker_breaker(k63, 1, 1, Player::Breaker).unwrap();
        let config = SolverConfig {
            memo_cap: 2,
            ..SolverConfig::default()
        };
        let err = decide(&spec, Objective::unbounded(), None, &config).unwrap_err();
        assert!(err.is_guard());
    }

    #[test]
    fn parallel_agrees_with_sequential() {
        let k63 = Hypergraph::empty(6).unwrap().add_all_k_subsets(3).unwrap();
        for first in [Player::Maker, Player::Breaker] {
            let spec = GameSpec::maker_breaker(k63.clone(), 1, 1, first).unwrap();
            let seq = spec_values(&spec, None, &SolverConfig::default()).unwrap();
            let par = spec_values(
                &spec,
                None,
                &SolverConfig {
                    jobs: 4,
                    ..SolverConfig::default()
                },
            )
            .unwrap();
            assert_eq!(seq, par);
        }
    }

    #[test]
    fn result_json_uses_null_for_infinity() {
        let r = SolveResult::losing();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["min_rounds"], serde_json::Value::Null);
    }
}

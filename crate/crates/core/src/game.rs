//! Rules of the three supported games as a pure state machine.
//!
//! * Maker-Breaker `(m:b)`: players alternately claim exactly
//!   `min(bias, #free)` free elements. Maker wins once she owns a winning set.
//! * Waiter-Client (unbiased): Waiter offers two free elements, Client keeps
//!   one and the other goes to Waiter. A lone last element goes to Client.
//!   Waiter plays the Maker role and Client the Breaker role.
//! * Auxiliary edge game on a directed multigraph: a `(1:b)` Maker-Breaker
//!   game on vertices and arcs where Maker may only claim an arc whose two
//!   endpoints she owns, and wins by claiming any arc.
//!
//! Rounds are counted as completed Maker (Waiter) moves, whoever starts.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::{k_subsets, ElementSet};
use crate::digraph::RootedDigraph;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Player {
    /// Maker, Waiter or Dominator.
    Maker,
    /// Breaker, Client or Staller.
    Breaker,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Maker => Player::Breaker,
            Player::Breaker => Player::Maker,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Maker => "maker",
            Player::Breaker => "breaker",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GameKind {
    MakerBreaker,
    WaiterClient,
    AuxEdgeGame,
}

/// A complete rule set together with the board it is played on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameSpec {
    pub kind: GameKind,
    pub board: Hypergraph,
    /// The underlying digraph for the auxiliary edge game. Vertex `v` is
    /// board element `v`; arc `i` is board element `nv + i`.
    pub digraph: Option<RootedDigraph>,
    pub maker_bias: usize,
    pub breaker_bias: usize,
    pub first: Player,
    /// Elements owned by Maker before the first move.
    pub preclaimed_maker: ElementSet,
    /// Bias of Breaker's very first move, when it differs from his usual
    /// bias (for example a single-element move before Maker starts).
    pub breaker_opening: Option<usize>,
    /// Elements Maker may claim only when doing so completes a winning set.
    pub maker_restricted: ElementSet,
}

impl GameSpec {
    pub fn maker_breaker(board: Hypergraph, m: usize, b: usize, first: Player) -> Result<Self> {
        if m == 0 || b == 0 {
            return Err(Error::invalid("biases must be at least 1"));
        }
        Ok(GameSpec {
            kind: GameKind::MakerBreaker,
            board,
            digraph: None,
            maker_bias: m,
            breaker_bias: b,
            first,
            preclaimed_maker: ElementSet::new(),
            breaker_opening: None,
            maker_restricted: ElementSet::new(),
        })
    }

    pub fn waiter_client(board: Hypergraph) -> Self {
        GameSpec {
            kind: GameKind::WaiterClient,
            board,
            digraph: None,
            maker_bias: 1,
            breaker_bias: 1,
            first: Player::Maker,
            preclaimed_maker: ElementSet::new(),
            breaker_opening: None,
            maker_restricted: ElementSet::new(),
        }
    }

    /// The auxiliary edge game with Breaker bias `b` and Maker owning the
    /// vertices `preclaimed` at the start. Maker moves first.
    pub fn aux(digraph: RootedDigraph, b: usize, preclaimed: &[usize]) -> Result<Self> {
        if b == 0 {
            return Err(Error::invalid("Breaker bias must be at least 1"));
        }
        let nv = digraph.nv();
        let n = nv + digraph.arcs().len();
        let mut edges = Vec::with_capacity(digraph.arcs().len());
        let mut labels: Vec<String> = (0..nv).map(|v| format!("v{v}")).collect();
        let mut restricted = ElementSet::new();
        if n > crate::bitset::CAPACITY {
            return Err(Error::Capacity {
                n,
                capacity: crate::bitset::CAPACITY,
            });
        }
        for (i, &(u, w)) in digraph.arcs().iter().enumerate() {
            edges.push(vec![u, w, nv + i]);
            labels.push(format!("arc(v{u},v{w})#{i}"));
            restricted.insert(nv + i);
        }
        let board = Hypergraph::new(n, edges)?.with_labels(labels)?;
        let mut pre = ElementSet::new();
        for &v in preclaimed {
            if v >= nv {
                return Err(Error::IndexOutOfRange { index: v, n: nv });
            }
            pre.insert(v);
        }
        Ok(GameSpec {
            kind: GameKind::AuxEdgeGame,
            board,
            digraph: Some(digraph),
            maker_bias: 1,
            breaker_bias: b,
            first: Player::Maker,
            preclaimed_maker: pre,
            breaker_opening: None,
            maker_restricted: restricted,
        })
    }

    /// Lets Breaker move first with a move of `bias` elements, after which
    /// play continues with the regular biases.
    pub fn with_breaker_opening(mut self, bias: usize) -> Self {
        self.first = Player::Breaker;
        self.breaker_opening = Some(bias);
        self
    }

    pub fn n(&self) -> usize {
        self.board.n()
    }

    pub fn initial_state(&self) -> GameState {
        GameState {
            maker: self.preclaimed_maker,
            breaker: ElementSet::new(),
            to_move: self.first,
            maker_moves: 0,
            breaker_moves: 0,
            offer: None,
        }
    }

    /// Bias of the player to move in `state`.
    pub fn current_bias(&self, state: &GameState) -> usize {
        match state.to_move {
            Player::Maker => self.maker_bias,
            Player::Breaker => match self.breaker_opening {
                Some(k) if state.breaker_moves == 0 && self.first == Player::Breaker => k,
                _ => self.breaker_bias,
            },
        }
    }

    /// Board element of digraph vertex `v`.
    pub fn vertex_element(&self, v: usize) -> usize {
        v
    }

    /// Board element of digraph arc `i`.
    pub fn arc_element(&self, i: usize) -> usize {
        self.digraph.as_ref().map_or(0, |d| d.nv()) + i
    }

    /// Whether Maker may claim restricted element `e` given her set after
    /// the move.
    fn restricted_ok(&self, e: usize, maker_after: &ElementSet) -> bool {
        self.board
            .edges()
            .iter()
            .any(|f| f.contains(e) && f.is_subset(maker_after))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    /// Maker's (Waiter's) elements.
    pub maker: ElementSet,
    /// Breaker's (Client's) elements.
    pub breaker: ElementSet,
    pub to_move: Player,
    /// Completed Maker (Waiter) moves, i.e. rounds.
    pub maker_moves: u32,
    pub breaker_moves: u32,
    /// Waiter's pending offer while Client is to move.
    pub offer: Option<ElementSet>,
}

impl GameState {
    pub fn free(&self, n: usize) -> ElementSet {
        ElementSet::full(n) - self.maker - self.breaker
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "move", content = "elements")]
pub enum Move {
    Claim(Vec<usize>),
    Offer(Vec<usize>),
    Keep(usize),
    /// Only legal when the mover has no other legal move.
    Pass,
}

impl Move {
    pub fn claim(set: ElementSet) -> Move {
        Move::Claim(set.to_vec())
    }

    pub fn offer(set: ElementSet) -> Move {
        Move::Offer(set.to_vec())
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Claim(v) => write!(f, "claim {v:?}"),
            Move::Offer(v) => write!(f, "offer {v:?}"),
            Move::Keep(x) => write!(f, "keep {x}"),
            Move::Pass => f.write_str("pass"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Ongoing,
    MakerWin,
    MakerCannotWin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Status {
    pub outcome: Outcome,
    /// A smallest winning set inside Maker's set, if any.
    pub witness: Option<ElementSet>,
}

/// Every legal move for the player to move. An empty list means the player
/// must pass (or the game is over).
pub fn legal_moves(spec: &GameSpec, state: &GameState) -> Vec<Move> {
    let free = state.free(spec.n());
    match spec.kind {
        GameKind::WaiterClient => match (state.to_move, state.offer) {
            (Player::Breaker, Some(offer)) => offer.iter().map(Move::Keep).collect(),
            (Player::Maker, None) => {
                let pool = free.to_vec();
                let k = pool.len().min(2);
                if k == 0 {
                    return Vec::new();
                }
                k_subsets(&pool, k).into_iter().map(Move::offer).collect()
            }
            _ => Vec::new(),
        },
        GameKind::MakerBreaker | GameKind::AuxEdgeGame => {
            let bias = spec.current_bias(state);
            match state.to_move {
                Player::Breaker => {
                    let pool = free.to_vec();
                    let k = bias.min(pool.len());
                    if k == 0 {
                        return Vec::new();
                    }
                    k_subsets(&pool, k).into_iter().map(Move::claim).collect()
                }
                Player::Maker => {
                    let restricted = free & spec.maker_restricted;
                    let pool: Vec<usize> = if restricted.is_empty() {
                        free.to_vec()
                    } else {
                        // restricted specs have Maker bias 1
                        free.iter()
                            .filter(|&e| {
                                !restricted.contains(e)
                                    || spec.restricted_ok(e, &(state.maker | ElementSet::singleton(e)))
                            })
                            .collect()
                    };
                    let k = bias.min(pool.len());
                    if k == 0 {
                        return Vec::new();
                    }
                    k_subsets(&pool, k).into_iter().map(Move::claim).collect()
                }
            }
        }
    }
}

fn to_set(spec: &GameSpec, elems: &[usize]) -> Result<ElementSet> {
    let mut s = ElementSet::new();
    for &e in elems {
        if e >= spec.n() {
            return Err(Error::IndexOutOfRange { index: e, n: spec.n() });
        }
        if s.contains(e) {
            return Err(Error::IllegalMove(format!("element {e} listed twice")));
        }
        s.insert(e);
    }
    Ok(s)
}

pub fn is_legal(spec: &GameSpec, state: &GameState, mv: &Move) -> bool {
    check_move(spec, state, mv).is_ok()
}

fn check_move(spec: &GameSpec, state: &GameState, mv: &Move) -> Result<()> {
    let free = state.free(spec.n());
    let illegal = |msg: String| Err(Error::IllegalMove(msg));
    match (spec.kind, state.to_move, mv) {
        (_, _, Move::Pass) => {
            if legal_moves(spec, state).is_empty() {
                Ok(())
            } else {
                illegal("pass while a move is available".into())
            }
        }
        (GameKind::WaiterClient, Player::Maker, Move::Offer(v)) => {
            let s = to_set(spec, v)?;
            if state.offer.is_some() {
                return illegal("an offer is already pending".into());
            }
            if !s.is_subset(&free) {
                return illegal(format!("offer {v:?} contains claimed elements"));
            }
            if s.len() != free.len().min(2) || s.is_empty() {
                return illegal(format!("offer {v:?} must have {} elements", free.len().min(2)));
            }
            Ok(())
        }
        (GameKind::WaiterClient, Player::Breaker, Move::Keep(x)) => match state.offer {
            Some(o) if o.contains(*x) => Ok(()),
            _ => illegal(format!("element {x} was not offered")),
        },
        (GameKind::WaiterClient, _, _) => illegal(format!("{mv} is not a {} move here", state.to_move)),
        (_, player, Move::Claim(v)) => {
            let s = to_set(spec, v)?;
            if !s.is_subset(&free) {
                return illegal(format!("claim {v:?} contains claimed elements"));
            }
            let bias = spec.current_bias(state);
            if player == Player::Maker {
                let after = state.maker | s;
                for e in (s & spec.maker_restricted).iter() {
                    if !spec.restricted_ok(e, &after) {
                        return illegal(format!("element {e} may only be claimed to complete a winning set"));
                    }
                }
                if !spec.maker_restricted.is_empty() {
                    // with restricted elements around, only claimable ones count
                    let legal = legal_moves(spec, state);
                    return if legal.contains(&Move::claim(s)) {
                        Ok(())
                    } else {
                        illegal(format!("claim {v:?} has the wrong size"))
                    };
                }
            }
            if s.len() != bias.min(free.len()) || s.is_empty() {
                return illegal(format!(
                    "claim {v:?} must have exactly {} elements",
                    bias.min(free.len())
                ));
            }
            Ok(())
        }
        _ => illegal(format!("{mv} is not a valid {} move", state.to_move)),
    }
}

pub fn apply_move(spec: &GameSpec, state: &GameState, mv: &Move) -> Result<GameState> {
    check_move(spec, state, mv)?;
    let mut next = state.clone();
    match mv {
        Move::Pass => {
            match state.to_move {
                Player::Maker => next.maker_moves += 1,
                Player::Breaker => next.breaker_moves += 1,
            }
            next.to_move = state.to_move.other();
        }
        Move::Claim(v) => {
            let s: ElementSet = v.iter().copied().collect();
            match state.to_move {
                Player::Maker => {
                    next.maker |= s;
                    next.maker_moves += 1;
                }
                Player::Breaker => {
                    next.breaker |= s;
                    next.breaker_moves += 1;
                }
            }
            next.to_move = state.to_move.other();
        }
        Move::Offer(v) => {
            next.offer = Some(v.iter().copied().collect());
            next.to_move = Player::Breaker;
        }
        Move::Keep(x) => {
            let offer = state.offer.expect("checked above");
            next.breaker.insert(*x);
            let mut rest = offer;
            rest.remove(*x);
            next.maker |= rest;
            next.offer = None;
            next.maker_moves += 1;
            next.breaker_moves += 1;
            next.to_move = Player::Maker;
        }
    }
    Ok(next)
}

pub fn status(spec: &GameSpec, state: &GameState) -> Status {
    let witness = spec.board.smallest_contained(&state.maker);
    let outcome = if witness.is_some() {
        Outcome::MakerWin
    } else if spec.board.edges().iter().all(|f| f.intersects(&state.breaker))
        || (state.free(spec.n()).is_empty() && state.offer.is_none())
    {
        Outcome::MakerCannotWin
    } else {
        Outcome::Ongoing
    };
    Status { outcome, witness }
}

//! Scripted strategies and an exhaustive verifier.
//!
//! A strategy plays one role and is consulted only when that role is to
//! move. It may keep private memory between calls; the verifier clones it
//! whenever the opponent's choices branch.

mod board;
mod catalog;
mod cycles;
mod digraphs;
mod verify;

pub use board::{BreakerNonmonotone, BreakerPairing, DominatorLift, MakerNonmonotone};
pub use catalog::{get_strategy, scenario, smallest_scenario, Params, Scenario, CATALOG};
pub use cycles::{ClientCycle, WaiterCycle, WaiterTree};
pub use digraphs::{
    gtb_slow_invariant, BreakerGtbBlock, BreakerGtbSlow, BreakerHtbPremove, BreakerHtbSlow, MakerGtb, MakerHmbst,
    MakerHtb,
};
pub use verify::{verify_strategy, verify_strategy_with, Guarantee, TraceStep, Verdict, DEFAULT_VERIFY_NODE_CAP};

use crate::bitset::ElementSet;
use crate::error::Result;
use crate::game::{is_legal, legal_moves, GameSpec, GameState, Move, Player};

pub trait Strategy: Send + Sync {
    /// Catalog name.
    fn id(&self) -> &'static str;

    /// The role this strategy plays. Waiter and Client are the Maker and
    /// Breaker roles of the Waiter-Client game.
    fn role(&self) -> Player;

    /// The move to play in `state`, where this strategy's role is to move.
    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move>;

    fn box_clone(&self) -> Box<dyn Strategy>;
}

impl Clone for Box<dyn Strategy> {
    fn clone(&self) -> Self {
        self.box_clone()
    }
}

/// A claim of the wanted elements that are still free (in the given order),
/// padded with the lowest free elements up to the current bias.
pub(crate) fn padded_claim(spec: &GameSpec, state: &GameState, wanted: impl IntoIterator<Item = usize>) -> Move {
    let free = state.free(spec.n());
    let k = spec.current_bias(state).min(free.len());
    if k == 0 {
        return Move::Pass;
    }
    let mut chosen = ElementSet::new();
    for e in wanted {
        if chosen.len() == k {
            break;
        }
        if free.contains(e) {
            chosen.insert(e);
        }
    }
    for e in free.iter() {
        if chosen.len() == k {
            break;
        }
        chosen.insert(e);
    }
    Move::claim(chosen)
}

/// `mv` if legal, otherwise the first legal move (or a pass).
pub(crate) fn legal_or_first(spec: &GameSpec, state: &GameState, mv: Move) -> Move {
    if is_legal(spec, state, &mv) {
        return mv;
    }
    legal_moves(spec, state).into_iter().next().unwrap_or(Move::Pass)
}

/// Offer of `pair` if both are free, otherwise the lowest legal offer.
pub(crate) fn offer_or_first(spec: &GameSpec, state: &GameState, pair: Option<(usize, usize)>) -> Move {
    let mv = match pair {
        Some((x, y)) => Move::Offer(if x < y { vec![x, y] } else { vec![y, x] }),
        None => Move::Pass,
    };
    legal_or_first(spec, state, mv)
}

/// Elements Maker gained since `seen`, updating `seen`.
pub(crate) fn new_maker_elements(seen: &mut Option<ElementSet>, spec: &GameSpec, state: &GameState) -> ElementSet {
    let before = seen.unwrap_or(spec.preclaimed_maker);
    *seen = Some(state.maker);
    state.maker - before
}

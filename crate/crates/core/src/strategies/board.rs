//! Strategies on explicit boards: the block boards, pairings, and Maker
//! strategies lifted to the gadget graph.

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::game::{GameSpec, GameState, Move, Player};

use super::{new_maker_elements, padded_claim, Strategy};

/// Maker on the block board when her bias is not in the bias set: one
/// element in each of the first `b` blocks, then answer every Breaker
/// incursion into a block she has not entered yet.
#[derive(Clone, Debug)]
pub struct MakerNonmonotone {
    blocks: Vec<ElementSet>,
}

impl MakerNonmonotone {
    pub fn new(blocks: Vec<ElementSet>) -> Self {
        MakerNonmonotone { blocks }
    }
}

impl Strategy for MakerNonmonotone {
    fn id(&self) -> &'static str {
        "maker-nonmonotone"
    }

    fn role(&self) -> Player {
        Player::Maker
    }

    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move> {
        let free = state.free(spec.n());
        let open: Vec<&ElementSet> = self.blocks.iter().filter(|b| !b.intersects(&state.maker)).collect();
        let (touched, fresh): (Vec<&ElementSet>, Vec<&ElementSet>) =
            open.into_iter().partition(|b| b.intersects(&state.breaker));
        let wanted: Vec<usize> = touched
            .into_iter()
            .chain(fresh)
            .filter_map(|b| (*b & free).first())
            .collect();
        Ok(padded_claim(spec, state, wanted))
    }

    fn box_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// Breaker on the block board when his bias is in the bias set: fully
/// claim a block among the first `b + 1` that Maker has not entered.
#[derive(Clone, Debug)]
pub struct BreakerNonmonotone {
    blocks: Vec<ElementSet>,
    b: usize,
}

impl BreakerNonmonotone {
    pub fn new(blocks: Vec<ElementSet>, b: usize) -> Self {
        BreakerNonmonotone { blocks, b }
    }
}

impl Strategy for BreakerNonmonotone {
    fn id(&self) -> &'static str {
        "breaker-nonmonotone"
    }

    fn role(&self) -> Player {
        Player::Breaker
    }

    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move> {
        let target = self
            .blocks
            .iter()
            .take(self.b + 1)
            .find(|blk| !blk.intersects(&state.maker) && !blk.is_subset(&state.breaker) && blk.len() <= self.b);
        let wanted = target.map(|blk| *blk - state.breaker).unwrap_or_default();
        Ok(padded_claim(spec, state, wanted.iter()))
    }

    fn box_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// Breaker answering each Maker element with its partner.
#[derive(Clone, Debug)]
pub struct BreakerPairing {
    partner: Vec<Option<usize>>,
    seen: Option<ElementSet>,
}

impl BreakerPairing {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![None; n];
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::IndexOutOfRange { index: x.max(y), n });
            }
            if x == y || partner[x].is_some() || partner[y].is_some() {
                return Err(Error::invalid(format!("pairs must be disjoint, got ({x}, {y})")));
            }
            partner[x] = Some(y);
            partner[y] = Some(x);
        }
        Ok(BreakerPairing { partner, seen: None })
    }
}

impl Strategy for BreakerPairing {
    fn id(&self) -> &'static str {
        "breaker-pairing"
    }

    fn role(&self) -> Player {
        Player::Breaker
    }

    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move> {
        let new = new_maker_elements(&mut self.seen, spec, state);
        let wanted: Vec<usize> = new.iter().filter_map(|e| self.partner[e]).collect();
        Ok(padded_claim(spec, state, wanted))
    }

    fn box_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// Dominator on the gadget graph: play a Maker strategy for the hypergraph
/// on the clique `0..board`, ignoring everything Staller does outside it.
#[derive(Clone)]
pub struct DominatorLift {
    inner: Box<dyn Strategy>,
    inner_spec: GameSpec,
}

impl DominatorLift {
    /// `inner_spec` is the hypergraph game the inner strategy plays; its
    /// board must be the first `inner_spec.n()` vertices of the graph.
    pub fn new(inner: Box<dyn Strategy>, inner_spec: GameSpec) -> Result<Self> {
        if inner.role() != Player::Maker {
            return Err(Error::invalid("the lifted strategy must play Maker"));
        }
        Ok(DominatorLift { inner, inner_spec })
    }
}

impl Strategy for DominatorLift {
    fn id(&self) -> &'static str {
        "dominator-lift"
    }

    fn role(&self) -> Player {
        Player::Maker
    }

    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move> {
        let x = ElementSet::full(self.inner_spec.n());
        let projected = GameState {
            maker: state.maker & x,
            breaker: state.breaker & x,
            ..state.clone()
        };
        let wanted = match self.inner.next_move(&self.inner_spec, &projected)? {
            Move::Claim(v) => v,
            _ => Vec::new(),
        };
        Ok(padded_claim(spec, state, wanted))
    }

    fn box_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

//! Exhaustive check of a strategy against every opponent.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{apply_move, is_legal, legal_moves, status, GameSpec, GameState, Move, Outcome, Player};

use super::Strategy;

/// Default cap on game-tree nodes visited by [`verify_strategy`].
pub const DEFAULT_VERIFY_NODE_CAP: u64 = 20_000_000;

/// What a strategy promises, judged on every complete play.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "rounds", rename_all = "snake_case")]
pub enum Guarantee {
    /// Maker (Waiter) owns a winning set after at most this many rounds.
    WinWithin(u32),
    /// Maker (Waiter) never owns a winning set.
    NeverLoses,
    /// Maker (Waiter) owns no winning set within this many rounds.
    OpponentNotWithin(u32),
}

impl Guarantee {
    /// The role whose strategy can carry this guarantee.
    pub fn role(self) -> Player {
        match self {
            Guarantee::WinWithin(_) => Player::Maker,
            _ => Player::Breaker,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub player: Player,
    #[serde(flatten)]
    pub mv: Move,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub ok: bool,
    pub nodes: u64,
    pub leaves: u64,
    /// Fewest and most rounds Maker needed over plays she won.
    pub maker_win_rounds: Option<(u32, u32)>,
    /// A play violating the guarantee.
    pub counterexample: Option<Vec<TraceStep>>,
    pub reason: Option<String>,
}

struct Verifier<'a, 'c> {
    spec: &'a GameSpec,
    guarantee: Guarantee,
    role: Player,
    cap: u64,
    nodes: u64,
    leaves: u64,
    wins: Option<(u32, u32)>,
    trace: Vec<TraceStep>,
    failure: Option<(Vec<TraceStep>, String)>,
    check: &'c mut dyn FnMut(&GameSpec, &GameState) -> std::result::Result<(), String>,
}

impl Verifier<'_, '_> {
    fn fail(&mut self, reason: String) {
        self.failure = Some((self.trace.clone(), reason));
    }

    /// Judges `state` if it ends the play for the guarantee; returns true
    /// when the branch is finished.
    fn judge(&mut self, state: &GameState) -> bool {
        let st = status(self.spec, state);
        let rounds = state.maker_moves;
        match st.outcome {
            Outcome::MakerWin => {
                self.leaves += 1;
                self.wins = Some(match self.wins {
                    Some((lo, hi)) => (lo.min(rounds), hi.max(rounds)),
                    None => (rounds, rounds),
                });
                match self.guarantee {
                    Guarantee::WinWithin(t) if rounds > t => self.fail(format!("Maker won only after {rounds} rounds")),
                    Guarantee::NeverLoses => self.fail(format!("Maker won after {rounds} rounds")),
                    Guarantee::OpponentNotWithin(t) if rounds <= t => {
                        self.fail(format!("Maker won after {rounds} rounds"))
                    }
                    _ => {}
                }
                true
            }
            Outcome::MakerCannotWin => {
                self.leaves += 1;
                if let Guarantee::WinWithin(_) = self.guarantee {
                    self.fail("Maker can no longer win".into());
                }
                true
            }
            Outcome::Ongoing => match self.guarantee {
                Guarantee::WinWithin(t) if rounds >= t && state.offer.is_none() => {
                    self.leaves += 1;
                    self.fail(format!("no win after {rounds} rounds"));
                    true
                }
                Guarantee::OpponentNotWithin(t) if rounds >= t && state.offer.is_none() => {
                    self.leaves += 1;
                    true
                }
                _ => false,
            },
        }
    }

    fn explore(&mut self, state: GameState, strat: &mut Box<dyn Strategy>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::Guard {
                what: "verifier nodes",
                limit: self.cap,
            });
        }
        if self.judge(&state) {
            return Ok(());
        }
        let mover = state.to_move;
        if mover == self.role {
            let mv = strat.next_move(self.spec, &state)?;
            if !is_legal(self.spec, &state, &mv) {
                self.trace.push(TraceStep {
                    player: mover,
                    mv: mv.clone(),
                });
                self.fail(format!("strategy played the illegal move {mv}"));
                return Ok(());
            }
            let next = apply_move(self.spec, &state, &mv)?;
            self.trace.push(TraceStep { player: mover, mv });
            if let Err(msg) = (self.check)(self.spec, &next) {
                self.fail(msg);
                return Ok(());
            }
            self.explore(next, strat)?;
            self.trace.pop();
            return Ok(());
        }
        let mut moves = legal_moves(self.spec, &state);
        if moves.is_empty() {
            moves.push(Move::Pass);
        }
        for mv in moves {
            let next = apply_move(self.spec, &state, &mv)?;
            self.trace.push(TraceStep { player: mover, mv });
            let mut branch = strat.clone();
            self.explore(next, &mut branch)?;
            if self.failure.is_some() {
                return Ok(());
            }
            self.trace.pop();
        }
        Ok(())
    }
}

/// Plays `strategy` against every possible opponent from the initial
/// position of `spec` and checks `guarantee` on every play.
pub fn verify_strategy(
    spec: &GameSpec,
    strategy: &dyn Strategy,
    guarantee: Guarantee,
    node_cap: u64,
) -> Result<Verdict> {
    verify_strategy_with(spec, strategy, guarantee, node_cap, &mut |_, _| Ok(()))
}

/// Like [`verify_strategy`], additionally calling `check` on the position
/// after each of the strategy's moves; an `Err` counts as a violation.
pub fn verify_strategy_with(
    spec: &GameSpec,
    strategy: &dyn Strategy,
    guarantee: Guarantee,
    node_cap: u64,
    check: &mut dyn FnMut(&GameSpec, &GameState) -> std::result::Result<(), String>,
) -> Result<Verdict> {
    if strategy.role() != guarantee.role() {
        return Err(Error::invalid(format!(
            "a {} strategy cannot carry guarantee {guarantee:?}",
            strategy.role()
        )));
    }
    let mut v = Verifier {
        spec,
        guarantee,
        role: strategy.role(),
        cap: node_cap,
        nodes: 0,
        leaves: 0,
        wins: None,
        trace: Vec::new(),
        failure: None,
        check,
    };
    let mut strat = strategy.box_clone();
    v.explore(spec.initial_state(), &mut strat)?;
    let (counterexample, reason) = match v.failure {
        Some((trace, reason)) => (Some(trace), Some(reason)),
        None => (None, None),
    };
    Ok(Verdict {
        ok: counterexample.is_none(),
        nodes: v.nodes,
        leaves: v.leaves,
        maker_win_rounds: v.wins,
        counterexample,
        reason,
    })
}

//! Waiter-Client domination strategies on cycles and trees.
//!
//! Cycle vertices `v_1, ..., v_n` are graph vertices `0..n`.

use crate::domination::residue;
use crate::error::{Error, Result};
use crate::game::{GameSpec, GameState, Move, Player};
use crate::graph::SimpleGraph;

use super::{legal_or_first, offer_or_first, Strategy};

/// Dominator (Waiter) on `C_n`: offer `{v_{n-1}, v_n}`, then the pairs
/// `{v_1, v_2}, {v_3, v_4}, ...` of the path left over, reflected when she
/// received `v_n` instead of `v_{n-1}`.
#[derive(Clone, Debug)]
pub struct WaiterCycle {
    n: usize,
    pairs: Option<Vec<(usize, usize)>>,
}

impl WaiterCycle {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Ok(WaiterCycle { n, pairs: None })
    }
}

impl Strategy for WaiterCycle {
    fn id(&self) -> &'static str {
        "waiter-cycle"
    }

    fn role(&self) -> Player {
        Player::Maker
    }

    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move> {
        let n = self.n;
        if state.maker_moves == 0 {
            return Ok(offer_or_first(spec, state, Some((n - 2, n - 1))));
        }
        let pairs = self.pairs.get_or_insert_with(|| {
            let reflect = !state.maker.contains(n - 2);
            let map = |x: usize| if reflect { (2 * n - 3 - x) % n } else { x };
            let k = (n - 2) & !1;
            (0..k / 2).map(|i| (map(2 * i), map(2 * i + 1))).collect()
        });
        let free = state.free(spec.n());
        let next = pairs
            .iter()
            .copied()
            .find(|&(x, y)| free.contains(x) && free.contains(y));
        Ok(offer_or_first(spec, state, next))
    }

    fn box_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// How Staller relabels the cycle after the first offer.
#[derive(Clone, Copy, Debug)]
struct Frame {
    /// Graph vertex playing `v_1`.
    origin: usize,
    /// `+1` or `-1` (as `n - 1`) step from `v_i` to `v_{i+1}`.
    step: usize,
    adjacent: bool,
}

/// Staller (Client) on `C_n`, `n >= 6`, keeping Dominator from winning in
/// fewer than `floor(n/2)` rounds.
#[derive(Clone, Debug)]
pub struct ClientCycle {
    n: usize,
    frame: Option<Frame>,
}

impl ClientCycle {
    pub fn new(n: usize) -> Result<Self> {
        if n < 6 {
            return Err(Error::invalid(format!("the cycle strategy needs n >= 6, got {n}")));
        }
        Ok(ClientCycle { n, frame: None })
    }

    /// 1-based position of graph vertex `x` in the relabelled cycle.
    fn pos(&self, f: &Frame, x: usize) -> usize {
        (x + self.n - f.origin) * f.step % self.n + 1
    }

    fn first_offer(&mut self, x: usize, y: usize) -> usize {
        let n = self.n;
        let (keep, frame) = if (x + 1) % n == y || (y + 1) % n == x {
            // v_1 is given away, its successor v_2 kept
            let (p, q) = if (x + 1) % n == y { (x, y) } else { (y, x) };
            (
                q,
                Frame {
                    origin: p,
                    step: 1,
                    adjacent: true,
                },
            )
        } else {
            // keep v_1 = x and give v_i = y with 3 <= i <= floor(n/2) + 1
            let d = (y + n - x) % n;
            let step = if d <= n / 2 { 1 } else { n - 1 };
            (
                x,
                Frame {
                    origin: x,
                    step,
                    adjacent: false,
                },
            )
        };
        self.frame = Some(frame);
        keep
    }

    fn answer(&self, f: &Frame, x: usize, y: usize) -> usize {
        let n = self.n;
        let (px, py) = (self.pos(f, x), self.pos(f, y));
        if f.adjacent {
            let (lo, hi) = if px < py { (px, py) } else { (py, px) };
            if hi == lo + 1 && lo % 2 == 1 && hi / 2 < n / 2 {
                return if hi == px { x } else { y };
            }
            return if px < py { x } else { y };
        }
        let pick = |want: usize| {
            if px == want {
                Some(x)
            } else if py == want {
                Some(y)
            } else {
                None
            }
        };
        pick(n).or_else(|| pick(2)).or_else(|| pick(n - 1)).unwrap_or(x.min(y))
    }
}

impl Strategy for ClientCycle {
    fn id(&self) -> &'static str {
        "client-cycle"
    }

    fn role(&self) -> Player {
        Player::Breaker
    }

    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move> {
        let Some(offer) = state.offer else {
            return Ok(legal_or_first(spec, state, Move::Pass));
        };
        let v = offer.to_vec();
        let keep = match (v.as_slice(), self.frame) {
            ([x], _) => *x,
            ([x, y], None) => self.first_offer(*x, *y),
            ([x, y], Some(f)) => self.answer(&f, *x, *y),
            _ => v[0],
        };
        Ok(legal_or_first(spec, state, Move::Keep(keep)))
    }

    fn box_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// Dominator (Waiter) on a tree: offer the leaf/support pairs in the order
/// the residue computation removes them, then the residue edge if it is a
/// single edge.
#[derive(Clone, Debug)]
pub struct WaiterTree {
    pairs: Vec<(usize, usize)>,
}

impl WaiterTree {
    pub fn new(t: &SimpleGraph) -> Result<Self> {
        if !t.is_tree() {
            return Err(Error::NotATree);
        }
        let r = residue(t);
        let mut pairs = r.removed_pairs.clone();
        if r.residue.n() == 2 && r.residue.edge_count() == 1 {
            pairs.push((r.kept[0], r.kept[1]));
        }
        Ok(WaiterTree { pairs })
    }
}

impl Strategy for WaiterTree {
    fn id(&self) -> &'static str {
        "waiter-tree"
    }

    fn role(&self) -> Player {
        Player::Maker
    }

    fn next_move(&mut self, spec: &GameSpec, state: &GameState) -> Result<Move> {
        let free = state.free(spec.n());
        let next = self
            .pairs
            .iter()
            .copied()
            .find(|&(x, y)| free.contains(x) && free.contains(y));
        Ok(offer_or_first(spec, state, next))
    }

    fn box_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

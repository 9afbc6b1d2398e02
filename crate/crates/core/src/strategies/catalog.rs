//! Named strategies together with the games they are meant for.

use crate::constructions::{
    build_gadget, build_gtb, build_h_mbst, build_htb, build_nonmonotone, build_pair_family, pair_family_pairs,
};
use crate::domination::{forest_has_perfect_matching, minimal_dominating_sets};
use crate::error::{Error, Result};
use crate::game::{GameSpec, Player};
use crate::graph::SimpleGraph;

use super::{
    BreakerGtbBlock, BreakerGtbSlow, BreakerHtbPremove, BreakerHtbSlow, BreakerNonmonotone, BreakerPairing,
    ClientCycle, DominatorLift, Guarantee, MakerGtb, MakerHmbst, MakerHtb, MakerNonmonotone, Strategy, WaiterCycle,
    WaiterTree,
};

pub const CATALOG: [&str; 14] = [
    "maker-gtb",
    "breaker-gtb-block",
    "breaker-gtb-slow",
    "maker-htb",
    "breaker-htb-premove",
    "breaker-htb-slow",
    "maker-nonmonotone",
    "breaker-nonmonotone",
    "breaker-pairing",
    "waiter-cycle",
    "client-cycle",
    "waiter-tree",
    "maker-hmbst",
    "dominator-lift",
];

/// Parameters for [`scenario`]. Unset fields take the defaults of the
/// smallest instance of each strategy.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub t: Option<usize>,
    pub b: Option<usize>,
    pub m: Option<usize>,
    pub s: Option<usize>,
    pub n: Option<usize>,
    pub biases: Option<Vec<usize>>,
    /// The single preclaimed vertex for `breaker-gtb-block`.
    pub vertex: Option<usize>,
    /// The tree for `waiter-tree` (default: the path on `n` vertices).
    pub tree: Option<SimpleGraph>,
}

/// A strategy, the game it plays and what it promises there.
#[derive(Clone)]
pub struct Scenario {
    pub id: &'static str,
    pub spec: GameSpec,
    pub strategy: Box<dyn Strategy>,
    pub guarantee: Guarantee,
}

impl std::fmt::Debug for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Scenario")
            .field("id", &self.id)
            .field("n", &self.spec.n())
            .field("guarantee", &self.guarantee)
            .finish()
    }
}

fn rounds(v: usize) -> u32 {
    u32::try_from(v).unwrap_or(u32::MAX)
}

pub fn scenario(id: &str, p: &Params) -> Result<Scenario> {
    let t = |d: usize| p.t.unwrap_or(d);
    let b = |d: usize| p.b.unwrap_or(d);
    let sc = |id: &'static str, spec: GameSpec, strategy: Box<dyn Strategy>, guarantee: Guarantee| Scenario {
        id,
        spec,
        strategy,
        guarantee,
    };
    Ok(match id {
        "maker-gtb" => {
            let l = build_gtb(t(2), b(2))?;
            let spec = GameSpec::aux(l.digraph.clone(), l.b, &[0, l.t])?;
            sc(
                "maker-gtb",
                spec,
                Box::new(MakerGtb::new(&l)),
                Guarantee::WinWithin(rounds(l.t)),
            )
        }
        "breaker-gtb-block" => {
            let l = build_gtb(t(2), b(2))?;
            let v = p.vertex.unwrap_or(1);
            let spec = GameSpec::aux(l.digraph.clone(), l.b, &[v])?;
            sc(
                "breaker-gtb-block",
                spec,
                Box::new(BreakerGtbBlock::new(&l.digraph)),
                Guarantee::NeverLoses,
            )
        }
        "breaker-gtb-slow" => {
            let l = build_gtb(t(2), b(2))?;
            let spec = GameSpec::aux(l.digraph.clone(), l.b, &[0, l.t])?;
            let g = Guarantee::OpponentNotWithin(rounds(l.t - 1));
            sc("breaker-gtb-slow", spec, Box::new(BreakerGtbSlow::new(&l)), g)
        }
        "maker-htb" => {
            let l = build_htb(t(3), b(1))?;
            let spec = GameSpec::aux(l.digraph.clone(), l.b, &[])?;
            sc(
                "maker-htb",
                spec,
                Box::new(MakerHtb::new(&l)),
                Guarantee::WinWithin(rounds(l.t)),
            )
        }
        "breaker-htb-premove" => {
            let l = build_htb(t(3), b(1))?;
            let spec = GameSpec::aux(l.digraph.clone(), l.b, &[])?.with_breaker_opening(1);
            sc(
                "breaker-htb-premove",
                spec,
                Box::new(BreakerHtbPremove::new(&l)),
                Guarantee::NeverLoses,
            )
        }
        "breaker-htb-slow" => {
            let l = build_htb(t(3), b(1))?;
            let spec = GameSpec::aux(l.digraph.clone(), l.b, &[])?;
            let g = Guarantee::OpponentNotWithin(rounds(l.t - 1));
            sc("breaker-htb-slow", spec, Box::new(BreakerHtbSlow::new(&l)), g)
        }
        "maker-nonmonotone" => {
            let biases = p.biases.clone().unwrap_or_else(|| vec![2]);
            let b = b(1);
            if biases.contains(&b) {
                return Err(Error::invalid(format!("maker-nonmonotone needs b outside {biases:?}")));
            }
            let l = build_nonmonotone(&biases)?;
            let spec = GameSpec::maker_breaker(l.hypergraph.clone(), b, b, Player::Maker)?;
            let g = Guarantee::WinWithin(rounds(l.blocks.len().div_ceil(b)));
            sc("maker-nonmonotone", spec, Box::new(MakerNonmonotone::new(l.blocks)), g)
        }
        "breaker-nonmonotone" => {
            let biases = p.biases.clone().unwrap_or_else(|| vec![2]);
            let b = b(2);
            if !biases.contains(&b) {
                return Err(Error::invalid(format!("breaker-nonmonotone needs b in {biases:?}")));
            }
            let l = build_nonmonotone(&biases)?;
            let spec = GameSpec::maker_breaker(l.hypergraph.clone(), b, b, Player::Maker)?;
            sc(
                "breaker-nonmonotone",
                spec,
                Box::new(BreakerNonmonotone::new(l.blocks, b)),
                Guarantee::NeverLoses,
            )
        }
        "breaker-pairing" => {
            let h = build_pair_family(t(3))?;
            let strat = BreakerPairing::new(h.n(), &pair_family_pairs())?;
            let spec = GameSpec::maker_breaker(h, 1, 1, Player::Maker)?;
            sc("breaker-pairing", spec, Box::new(strat), Guarantee::NeverLoses)
        }
        "waiter-cycle" => {
            let n = p.n.unwrap_or(7);
            let strat = WaiterCycle::new(n)?;
            let spec = GameSpec::waiter_client(minimal_dominating_sets(&SimpleGraph::cycle(n)?)?);
            sc(
                "waiter-cycle",
                spec,
                Box::new(strat),
                Guarantee::WinWithin(rounds(n / 2)),
            )
        }
        "client-cycle" => {
            let n = p.n.unwrap_or(6);
            let strat = ClientCycle::new(n)?;
            let spec = GameSpec::waiter_client(minimal_dominating_sets(&SimpleGraph::cycle(n)?)?);
            sc(
                "client-cycle",
                spec,
                Box::new(strat),
                Guarantee::OpponentNotWithin(rounds(n / 2 - 1)),
            )
        }
        "waiter-tree" => {
            let tree = match &p.tree {
                Some(tree) => tree.clone(),
                None => SimpleGraph::path(p.n.unwrap_or(4)),
            };
            if !forest_has_perfect_matching(&tree)? || !tree.is_tree() {
                return Err(Error::invalid("waiter-tree needs a tree with a perfect matching"));
            }
            let strat = WaiterTree::new(&tree)?;
            let spec = GameSpec::waiter_client(minimal_dominating_sets(&tree)?);
            sc(
                "waiter-tree",
                spec,
                Box::new(strat),
                Guarantee::WinWithin(rounds(tree.n() / 2)),
            )
        }
        "maker-hmbst" => {
            let l = build_h_mbst(p.m.unwrap_or(1), b(1), p.s.unwrap_or(3), t(3))?;
            let spec = GameSpec::maker_breaker(l.hypergraph.clone(), l.m, l.b, Player::Maker)?;
            sc(
                "maker-hmbst",
                spec,
                Box::new(MakerHmbst::new(&l)),
                Guarantee::WinWithin(rounds(l.t)),
            )
        }
        "dominator-lift" => {
            let biases = p.biases.clone().unwrap_or_else(|| vec![1]);
            let b = b(2);
            if biases.contains(&b) {
                return Err(Error::invalid(format!("dominator-lift needs b outside {biases:?}")));
            }
            let l = build_nonmonotone(&biases)?;
            let inner_spec = GameSpec::maker_breaker(l.hypergraph.clone(), b, b, Player::Maker)?;
            let g = Guarantee::WinWithin(rounds(l.blocks.len().div_ceil(b)));
            let gadget = build_gadget(&l.hypergraph, b)?;
            let spec = GameSpec::maker_breaker(minimal_dominating_sets(&gadget.graph)?, b, b, Player::Maker)?;
            let strat = DominatorLift::new(Box::new(MakerNonmonotone::new(l.blocks)), inner_spec)?;
            sc("dominator-lift", spec, Box::new(strat), g)
        }
        other => return Err(Error::UnknownStrategy(other.to_string())),
    })
}

/// The smallest instance each strategy is checked on by default.
pub fn smallest_scenario(id: &str) -> Result<Scenario> {
    scenario(id, &Params::default())
}

pub fn get_strategy(id: &str, p: &Params) -> Result<Box<dyn Strategy>> {
    Ok(scenario(id, p)?.strategy)
}

//! Brute-force game oracle on `u32` masks, written straight from the rules
//! with no pruning or memo, plus seeded random boards.

#![allow(dead_code)]

use posgames::{GameValue, Hypergraph, Player, SolveResult};
use rand::Rng;

pub const UNBOUNDED: u32 = u32::MAX;

pub struct Board {
    n: usize,
    edges: Vec<u32>,
}

impl Board {
    pub fn new(h: &Hypergraph) -> Self {
        assert!(h.n() <= 16, "oracle boards stay tiny");
        let edges = h
            .edge_lists()
            .iter()
            .map(|e| e.iter().fold(0u32, |acc, &x| acc | 1 << x))
            .collect();
        Board { n: h.n(), edges }
    }

    fn full(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    fn owns(&self, maker: u32, s: usize) -> bool {
        self.edges
            .iter()
            .any(|&e| e & maker == e && e.count_ones() as usize <= s)
    }

    /// Every subset of `free` with exactly `k` elements.
    fn subsets(free: u32, k: u32) -> Vec<u32> {
        let bits: Vec<u32> = (0..32).filter(|i| free >> i & 1 == 1).collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << bits.len()) {
            if mask.count_ones() == k {
                out.push(
                    bits.iter()
                        .enumerate()
                        .filter(|(j, _)| mask >> j & 1 == 1)
                        .fold(0, |acc, (_, &b)| acc | 1 << b),
                );
            }
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn mb(&self, m: u32, b: u32, maker: u32, breaker: u32, maker_turn: bool, rounds: u32, t: u32, s: usize) -> bool {
        let free = self.full() & !maker & !breaker;
        if free == 0 {
            return false;
        }
        if maker_turn {
            if rounds == t {
                return false;
            }
            let k = m.min(free.count_ones());
            Self::subsets(free, k).into_iter().any(|c| {
                let nm = maker | c;
                self.owns(nm, s) || self.mb(m, b, nm, breaker, false, rounds + 1, t, s)
            })
        } else {
            let k = b.min(free.count_ones());
            Self::subsets(free, k)
                .into_iter()
                .all(|c| self.mb(m, b, maker, breaker | c, true, rounds, t, s))
        }
    }

    fn wc(&self, waiter: u32, client: u32, rounds: u32, t: u32, s: usize) -> bool {
        let free = self.full() & !waiter & !client;
        if rounds == t || free.count_ones() < 2 {
            return false;
        }
        Self::subsets(free, 2).into_iter().any(|pair| {
            let x = pair & pair.wrapping_neg();
            let y = pair ^ x;
            [(x, y), (y, x)].into_iter().all(|(keep, give)| {
                let nw = waiter | give;
                self.owns(nw, s) || self.wc(nw, client | keep, rounds + 1, t, s)
            })
        })
    }
}

/// Which game the oracle plays.
#[derive(Clone, Copy, Debug)]
pub enum Rules {
    MakerBreaker { m: usize, b: usize, first: Player },
    WaiterClient,
}

pub fn oracle_decide(h: &Hypergraph, rules: Rules, t: u32, s: usize) -> bool {
    let board = Board::new(h);
    match rules {
        Rules::MakerBreaker { m, b, first } => board.mb(m as u32, b as u32, 0, 0, first == Player::Maker, 0, t, s),
        Rules::WaiterClient => board.wc(0, 0, 0, t, s),
    }
}

pub fn oracle_values(h: &Hypergraph, rules: Rules) -> SolveResult {
    let n = h.n();
    let win = |t: u32, s: usize| oracle_decide(h, rules, t, s);
    if !win(UNBOUNDED, n) {
        return SolveResult {
            maker_wins: false,
            min_rounds: GameValue::Infinite,
            min_size: GameValue::Infinite,
            frontier: Vec::new(),
        };
    }
    let min_rounds = (1..=n as u32)
        .find(|&t| win(t, n))
        .expect("games last at most n rounds");
    let min_size = (1..=n)
        .find(|&s| win(UNBOUNDED, s))
        .expect("a winning set has at most n elements");
    let mut frontier = Vec::new();
    let mut best = usize::MAX;
    for t in min_rounds..=n as u32 {
        if let Some(s) = (1..best.min(n + 1)).find(|&s| win(t, s)) {
            frontier.push((t as usize, s));
            best = s;
        }
    }
    SolveResult {
        maker_wins: true,
        min_rounds: GameValue::Finite(min_rounds as usize),
        min_size: GameValue::Finite(min_size),
        frontier,
    }
}

/// A board of 1..=`max_n` elements with 1..=`max_edges` random non-empty
/// winning sets.
pub fn random_hypergraph<R: Rng>(rng: &mut R, max_n: usize, max_edges: usize) -> Hypergraph {
    let n = rng.gen_range(1..=max_n);
    let count = rng.gen_range(1..=max_edges);
    let p = rng.gen_range(0.2..0.7);
    let edges = (0..count)
        .map(|_| {
            let mut e: Vec<usize> = (0..n).filter(|_| rng.gen_bool(p)).collect();
            if e.is_empty() {
                e.push(rng.gen_range(0..n));
            }
            e
        })
        .collect();
    Hypergraph::new(n, edges).unwrap()
}

pub fn random_rules<R: Rng>(rng: &mut R) -> Rules {
    if rng.gen_bool(0.25) {
        Rules::WaiterClient
    } else {
        let first = if rng.gen_bool(0.5) {
            Player::Maker
        } else {
            Player::Breaker
        };
        Rules::MakerBreaker {
            m: rng.gen_range(1..=3),
            b: rng.gen_range(1..=3),
            first,
        }
    }
}

pub mod props {
    use posgames::solver::{decide, spec_values, Objective, SolverConfig};
    use posgames::{GameSpec, Hypergraph, Player, SolveResult};

    use super::{oracle_values, Rules};

    pub type Check = Result<(), String>;

    pub fn spec_for(h: &Hypergraph, rules: Rules) -> GameSpec {
        match rules {
            Rules::MakerBreaker { m, b, first } => GameSpec::maker_breaker(h.clone(), m, b, first).unwrap(),
            Rules::WaiterClient => GameSpec::waiter_client(h.clone()),
        }
    }

    fn values(h: &Hypergraph, rules: Rules) -> SolveResult {
        spec_values(&spec_for(h, rules), None, &SolverConfig::default()).unwrap()
    }

    fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
        if ok {
            Ok(())
        } else {
            Err(msg())
        }
    }

    /// At least as good for Maker: wins whenever `worse` does, no slower and
    /// with no larger set.
    fn dominates(better: &SolveResult, worse: &SolveResult) -> bool {
        (better.maker_wins || !worse.maker_wins)
            && better.min_rounds <= worse.min_rounds
            && better.min_size <= worse.min_size
    }

    pub fn oracle_agreement(h: &Hypergraph, rules: Rules) -> Check {
        let got = values(h, rules);
        let want = oracle_values(h, rules);
        ensure(got == want, || {
            format!("{rules:?} on {:?}: solver {got:?}, oracle {want:?}", h.edge_lists())
        })
    }

    pub fn bias_monotonicity(h: &Hypergraph, m: usize, b: usize, first: Player) -> Check {
        let v = |m, b| values(h, Rules::MakerBreaker { m, b, first });
        let base = v(m, b);
        let more_maker = v(m + 1, b);
        let more_breaker = v(m, b + 1);
        ensure(dominates(&more_maker, &base), || {
            format!("({}:{b}) worse than ({m}:{b}) on {:?}", m + 1, h.edge_lists())
        })?;
        ensure(dominates(&base, &more_breaker), || {
            format!("({m}:{}) better than ({m}:{b}) on {:?}", b + 1, h.edge_lists())
        })
    }

    pub fn objective_monotonicity(h: &Hypergraph, rules: Rules) -> Check {
        let spec = spec_for(h, rules);
        let n = h.n();
        let config = SolverConfig::default();
        let mut table = vec![vec![false; n + 2]; n + 2];
        for (t, row) in table.iter_mut().enumerate().skip(1) {
            for (s, cell) in row.iter_mut().enumerate().skip(1) {
                *cell = decide(&spec, Objective::rounds_and_size(t as u32, s), None, &config).unwrap();
            }
        }
        for t in 1..=n {
            for s in 1..=n {
                ensure(!table[t][s] || (table[t + 1][s] && table[t][s + 1]), || {
                    format!(
                        "{rules:?}: (t={t}, s={s}) holds but a looser objective fails on {:?}",
                        h.edge_lists()
                    )
                })?;
            }
        }
        let unbounded = decide(&spec, Objective::unbounded(), None, &config).unwrap();
        ensure(unbounded == table[n + 1][n + 1], || {
            format!("{rules:?}: unbounded query disagrees")
        })
    }

    pub fn first_mover_advantage(h: &Hypergraph, m: usize, b: usize) -> Check {
        let mf = values(
            h,
            Rules::MakerBreaker {
                m,
                b,
                first: Player::Maker,
            },
        );
        let bf = values(
            h,
            Rules::MakerBreaker {
                m,
                b,
                first: Player::Breaker,
            },
        );
        ensure(dominates(&mf, &bf), || {
            format!(
                "({m}:{b}) Maker first {mf:?} worse than Breaker first {bf:?} on {:?}",
                h.edge_lists()
            )
        })
    }

    pub fn minimalization_soundness(h: &Hypergraph, rules: Rules) -> Check {
        let full = values(h, rules);
        let min = values(&h.minimalize(), rules);
        ensure(full == min, || {
            format!("{rules:?}: {full:?} vs minimalized {min:?} on {:?}", h.edge_lists())
        })
    }

    pub fn memo_transparency(h: &Hypergraph, rules: Rules) -> Check {
        let spec = spec_for(h, rules);
        let with = spec_values(&spec, None, &SolverConfig::default()).unwrap();
        let without = spec_values(
            &spec,
            None,
            &SolverConfig {
                memoize: false,
                ..SolverConfig::default()
            },
        )
        .unwrap();
        let parallel = spec_values(
            &spec,
            None,
            &SolverConfig {
                jobs: 2,
                ..SolverConfig::default()
            },
        )
        .unwrap();
        ensure(with == without && with == parallel, || {
            format!(
                "{rules:?}: memo {with:?}, plain {without:?}, parallel {parallel:?} on {:?}",
                h.edge_lists()
            )
        })
    }
}

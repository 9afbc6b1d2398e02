use posgames::constructions::{build_gtb, build_htb, build_pair_family, pair_family_pairs};
use posgames::game::{apply_move, is_legal, legal_moves, Move};
use posgames::solver::{decide, spec_values, Objective, SolverConfig};
use posgames::strategies::{
    gtb_slow_invariant, scenario, smallest_scenario, verify_strategy, verify_strategy_with, BreakerGtbBlock,
    BreakerPairing, Guarantee, Params, Scenario, Strategy, CATALOG, DEFAULT_VERIFY_NODE_CAP,
};
use posgames::{GameSpec, Hypergraph, Player, SimpleGraph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check(sc: &Scenario) {
    let v = verify_strategy(&sc.spec, sc.strategy.as_ref(), sc.guarantee, DEFAULT_VERIFY_NODE_CAP).unwrap();
    assert!(v.ok, "{}: {:?} {:?}", sc.id, v.reason, v.counterexample);
}

/// The guarantee must never claim more than the solver allows.
fn agrees_with_solver(sc: &Scenario) {
    let config = SolverConfig::default();
    match sc.guarantee {
        Guarantee::WinWithin(t) => {
            assert!(
                decide(&sc.spec, Objective::rounds(t), None, &config).unwrap(),
                "{}",
                sc.id
            );
        }
        Guarantee::NeverLoses => {
            assert!(
                !decide(&sc.spec, Objective::unbounded(), None, &config).unwrap(),
                "{}",
                sc.id
            );
        }
        Guarantee::OpponentNotWithin(t) => {
            assert!(
                !decide(&sc.spec, Objective::rounds(t), None, &config).unwrap(),
                "{}",
                sc.id
            );
        }
    }
}

#[test]
fn every_catalog_entry_holds_on_its_default_instance() {
    for id in CATALOG {
        let sc = smallest_scenario(id).unwrap();
        check(&sc);
        agrees_with_solver(&sc);
    }
}

#[test]
fn gtb_strategies_on_larger_instances() {
    for (t, b) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1)] {
        let p = Params {
            t: Some(t),
            b: Some(b),
            ..Params::default()
        };
        check(&scenario("maker-gtb", &p).unwrap());
        check(&scenario("breaker-gtb-slow", &p).unwrap());
        let nv = build_gtb(t, b).unwrap().digraph.nv();
        for v in 0..nv {
            let p = Params {
                vertex: Some(v),
                ..p.clone()
            };
            check(&scenario("breaker-gtb-block", &p).unwrap());
        }
    }
}

#[test]
fn first_maker_move_on_small_layered_digraph() {
    let mut sc = smallest_scenario("maker-gtb").unwrap();
    let s = sc.spec.initial_state();
    assert_eq!(sc.strategy.next_move(&sc.spec, &s).unwrap(), Move::Claim(vec![1]));
}

#[test]
fn slow_breaker_keeps_its_invariants() {
    for (t, b) in [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)] {
        let l = build_gtb(t, b).unwrap();
        let sc = scenario(
            "breaker-gtb-slow",
            &Params {
                t: Some(t),
                b: Some(b),
                ..Params::default()
            },
        )
        .unwrap();
        let d = l.digraph.clone();
        let mut inv = |_: &GameSpec, s: &posgames::GameState| gtb_slow_invariant(&d, t, s);
        let v = verify_strategy_with(
            &sc.spec,
            sc.strategy.as_ref(),
            sc.guarantee,
            DEFAULT_VERIFY_NODE_CAP,
            &mut inv,
        )
        .unwrap();
        assert!(v.ok, "t={t} b={b}: {:?}", v.reason);
    }
}

#[test]
fn htb_strategies_on_all_table_instances() {
    for (t, b) in [(3, 1), (3, 2), (4, 1)] {
        let p = Params {
            t: Some(t),
            b: Some(b),
            ..Params::default()
        };
        for id in ["maker-htb", "breaker-htb-premove", "breaker-htb-slow"] {
            check(&scenario(id, &p).unwrap());
        }
    }
    assert_eq!(build_htb(4, 1).unwrap().digraph.nv(), 7);
}

#[test]
fn hmbst_maker_on_lifted_instances() {
    for (m, b, s, t) in [(1, 1, 3, 3), (1, 2, 3, 3), (1, 1, 4, 4), (2, 2, 5, 3)] {
        let p = Params {
            m: Some(m),
            b: Some(b),
            s: Some(s),
            t: Some(t),
            ..Params::default()
        };
        check(&scenario("maker-hmbst", &p).unwrap());
    }
}

#[test]
fn block_board_strategies() {
    for (biases, b) in [
        (vec![1], 2),
        (vec![2], 1),
        (vec![2], 3),
        (vec![1, 2], 3),
        (vec![1, 3], 2),
    ] {
        let p = Params {
            biases: Some(biases.clone()),
            b: Some(b),
            ..Params::default()
        };
        check(&scenario("maker-nonmonotone", &p).unwrap());
    }
    for (biases, b) in [(vec![1], 1), (vec![2], 2), (vec![1, 2], 1), (vec![1, 2], 2)] {
        let p = Params {
            biases: Some(biases.clone()),
            b: Some(b),
            ..Params::default()
        };
        check(&scenario("breaker-nonmonotone", &p).unwrap());
    }
}

#[test]
fn pairing_answers_with_partner() {
    let h = build_pair_family(3).unwrap();
    let spec = GameSpec::maker_breaker(h.clone(), 1, 1, Player::Maker).unwrap();
    let mut strat = BreakerPairing::new(h.n(), &pair_family_pairs()).unwrap();
    let s = apply_move(&spec, &spec.initial_state(), &Move::Claim(vec![0])).unwrap();
    assert_eq!(strat.next_move(&spec, &s).unwrap(), Move::Claim(vec![4]));
    for t in 3..=5 {
        check(
            &scenario(
                "breaker-pairing",
                &Params {
                    t: Some(t),
                    ..Params::default()
                },
            )
            .unwrap(),
        );
    }
}

#[test]
fn cycle_and_tree_strategies() {
    let mut sc = scenario(
        "waiter-cycle",
        &Params {
            n: Some(5),
            ..Params::default()
        },
    )
    .unwrap();
    let s = sc.spec.initial_state();
    assert_eq!(sc.strategy.next_move(&sc.spec, &s).unwrap(), Move::Offer(vec![3, 4]));
    for n in 3..=9 {
        check(
            &scenario(
                "waiter-cycle",
                &Params {
                    n: Some(n),
                    ..Params::default()
                },
            )
            .unwrap(),
        );
    }
    for n in 6..=8 {
        check(
            &scenario(
                "client-cycle",
                &Params {
                    n: Some(n),
                    ..Params::default()
                },
            )
            .unwrap(),
        );
    }
    for n in [2, 4, 6, 8] {
        check(
            &scenario(
                "waiter-tree",
                &Params {
                    n: Some(n),
                    ..Params::default()
                },
            )
            .unwrap(),
        );
    }
    // odd order, so no perfect matching
    let spider = SimpleGraph::new(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
    assert!(scenario(
        "waiter-tree",
        &Params {
            tree: Some(spider.clone()),
            ..Params::default()
        }
    )
    .is_err());
    let caterpillar = SimpleGraph::new(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)]).unwrap();
    check(
        &scenario(
            "waiter-tree",
            &Params {
                tree: Some(caterpillar),
                ..Params::default()
            },
        )
        .unwrap(),
    );
}

#[test]
fn strategy_and_solver_agree_on_round_counts() {
    for id in CATALOG {
        let sc = smallest_scenario(id).unwrap();
        let v = verify_strategy(&sc.spec, sc.strategy.as_ref(), sc.guarantee, DEFAULT_VERIFY_NODE_CAP).unwrap();
        if let (Guarantee::WinWithin(_), Some((_, worst))) = (sc.guarantee, v.maker_win_rounds) {
            let values = spec_values(&sc.spec, None, &SolverConfig::default()).unwrap();
            let best = values.min_rounds.finite().unwrap();
            assert!(worst as usize >= best, "{id}: strategy {worst} beats optimum {best}");
        }
    }
}

#[test]
fn unknown_ids_and_bad_params_are_rejected() {
    assert!(smallest_scenario("nope").is_err());
    let p = Params {
        biases: Some(vec![1]),
        b: Some(1),
        ..Params::default()
    };
    assert!(scenario("maker-nonmonotone", &p).is_err());
    assert!(scenario(
        "client-cycle",
        &Params {
            n: Some(5),
            ..Params::default()
        }
    )
    .is_err());
}

#[test]
fn a_broken_strategy_yields_a_counterexample() {
    // on a single pair the block strategy is irrelevant: Maker owns 0 and 1
    // is free, so Maker wins after her move regardless
    let d = posgames::RootedDigraph::new(2, vec![(0, 1)], 0, Some(1)).unwrap();
    let spec = GameSpec::aux(d.clone(), 1, &[0, 1]).unwrap();
    let v = verify_strategy(&spec, &BreakerGtbBlock::new(&d), Guarantee::NeverLoses, 1000).unwrap();
    assert!(!v.ok);
    let trace = v.counterexample.unwrap();
    assert_eq!(trace.len(), 1);
    assert_eq!(trace[0].player, Player::Maker);
}

fn random_pair_board(rng: &mut ChaCha8Rng) -> (Hypergraph, Vec<(usize, usize)>) {
    let n = rng.gen_range(2..=10);
    let k = rng.gen_range(1..=n / 2);
    let pairs: Vec<(usize, usize)> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
    let edges = rng.gen_range(1..=6);
    let mut sets = Vec::new();
    for _ in 0..edges {
        let (x, y) = pairs[rng.gen_range(0..k)];
        let mut e = vec![x, y];
        for z in 0..n {
            if z != x && z != y && rng.gen_bool(0.3) {
                e.push(z);
            }
        }
        sets.push(e);
    }
    (Hypergraph::new(n, sets).unwrap(), pairs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pairing_never_loses_on_pair_containing_boards(seed in any::<u64>(), maker_first in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (h, pairs) = random_pair_board(&mut rng);
        let first = if maker_first { Player::Maker } else { Player::Breaker };
        let spec = GameSpec::maker_breaker(h.clone(), 1, 1, first).unwrap();
        let strat = BreakerPairing::new(h.n(), &pairs).unwrap();
        let v = verify_strategy(&spec, &strat, Guarantee::NeverLoses, DEFAULT_VERIFY_NODE_CAP).unwrap();
        prop_assert!(v.ok, "{:?}", v.counterexample);
    }

    #[test]
    fn catalog_strategies_only_play_legal_moves(seed in any::<u64>(), idx in 0usize..14) {
        let sc = smallest_scenario(CATALOG[idx]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut strat = sc.strategy.clone();
        let mut state = sc.spec.initial_state();
        for _ in 0..64 {
            if posgames::game::status(&sc.spec, &state).outcome != posgames::Outcome::Ongoing {
                break;
            }
            let mv = if state.to_move == strat.role() {
                let mv = strat.next_move(&sc.spec, &state).unwrap();
                prop_assert!(is_legal(&sc.spec, &state, &mv), "{}: {mv}", sc.id);
                mv
            } else {
                let moves = legal_moves(&sc.spec, &state);
                if moves.is_empty() { Move::Pass } else { moves[rng.gen_range(0..moves.len())].clone() }
            };
            state = apply_move(&sc.spec, &state, &mv).unwrap();
        }
    }
}

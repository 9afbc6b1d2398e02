mod common;

use common::props::*;
use common::{oracle_decide, random_hypergraph, random_rules, Rules, UNBOUNDED};
use posgames::solver::{decide_mb, decide_wc, game_values, wc_game_values, Objective};
use posgames::{GameValue, Hypergraph, Player};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn board(seed: u64, max_n: usize) -> Hypergraph {
    random_hypergraph(&mut ChaCha8Rng::seed_from_u64(seed), max_n, 5)
}

#[test]
fn oracle_sanity() {
    let pair = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
    let mf = Rules::MakerBreaker {
        m: 1,
        b: 1,
        first: Player::Maker,
    };
    assert!(!oracle_decide(&pair, mf, UNBOUNDED, 2));
    assert!(oracle_decide(
        &pair,
        Rules::MakerBreaker {
            m: 2,
            b: 1,
            first: Player::Maker
        },
        1,
        2
    ));
    // a triangle of pairs: Maker first takes a vertex of degree two
    let tri = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
    assert!(oracle_decide(&tri, mf, 2, 2));
    assert!(!oracle_decide(&tri, mf, 1, 2));
    // one round gives Waiter a single element; the third element goes to Client
    assert!(!oracle_decide(&tri, Rules::WaiterClient, UNBOUNDED, 3));
    let k4 = Hypergraph::new(4, (0..4).flat_map(|i| (i + 1..4).map(move |j| vec![i, j])).collect()).unwrap();
    assert!(oracle_decide(&k4, Rules::WaiterClient, 2, 2));
    assert!(!oracle_decide(&k4, Rules::WaiterClient, 1, 2));
}

#[test]
fn hand_computed_values() {
    let k4 = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
    let v = game_values(&k4, 1, 1, Player::Maker).unwrap();
    assert!(!v.maker_wins);
    assert_eq!(v.min_rounds, GameValue::Infinite);
    assert!(!wc_game_values(&k4).unwrap().maker_wins);
    let mut all_pairs = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            all_pairs.push(vec![i, j]);
        }
    }
    let v = wc_game_values(&Hypergraph::new(4, all_pairs).unwrap()).unwrap();
    assert_eq!((v.min_rounds, v.min_size), (GameValue::Finite(2), GameValue::Finite(2)));
    assert_eq!(v.frontier, vec![(2, 2)]);
    // the four disjoint pairs: Waiter needs three rounds
    let pairs = Hypergraph::new(8, (0..4).map(|i| vec![i, 4 + i]).collect()).unwrap();
    assert!(decide_wc(&pairs, Objective::rounds_and_size(3, 2)).unwrap());
    assert!(!decide_wc(&pairs, Objective::rounds_and_size(2, 2)).unwrap());
    assert!(!decide_mb(&pairs, 1, 1, Player::Maker, Objective::unbounded(), None).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn solver_matches_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_hypergraph(&mut rng, 7, 5);
        let rules = random_rules(&mut rng);
        prop_assert!(oracle_agreement(&h, rules).is_ok(), "{:?}", oracle_agreement(&h, rules));
    }

    #[test]
    fn more_bias_never_hurts(seed in any::<u64>(), m in 1usize..3, b in 1usize..3, mf in any::<bool>()) {
        let first = if mf { Player::Maker } else { Player::Breaker };
        let r = bias_monotonicity(&board(seed, 8), m, b, first);
        prop_assert!(r.is_ok(), "{:?}", r);
    }

    #[test]
    fn looser_objectives_are_easier(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_hypergraph(&mut rng, 7, 5);
        let rules = random_rules(&mut rng);
        let r = objective_monotonicity(&h, rules);
        prop_assert!(r.is_ok(), "{:?}", r);
    }

    #[test]
    fn moving_first_helps_maker(seed in any::<u64>(), m in 1usize..3, b in 1usize..3) {
        let r = first_mover_advantage(&board(seed, 8), m, b);
        prop_assert!(r.is_ok(), "{:?}", r);
    }

    #[test]
    fn supersets_do_not_matter(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_hypergraph(&mut rng, 8, 6);
        let rules = random_rules(&mut rng);
        let r = minimalization_soundness(&h, rules);
        prop_assert!(r.is_ok(), "{:?}", r);
    }

    #[test]
    fn memo_is_transparent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_hypergraph(&mut rng, 6, 5);
        let rules = random_rules(&mut rng);
        let r = memo_transparency(&h, rules);
        prop_assert!(r.is_ok(), "{:?}", r);
    }
}

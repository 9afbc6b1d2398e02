//! Exact solving of biased Maker-Breaker and unbiased Waiter-Client
//! positional games, with generators for hypergraph constructions, domination
//! game reductions, scripted strategies and an exhaustive strategy verifier.

pub mod bitset;
pub mod constructions;
pub mod digraph;
pub mod domination;
pub mod error;
pub mod game;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod solver;
pub mod strategies;

pub use bitset::{ElementSet, CAPACITY};
pub use digraph::RootedDigraph;
pub use error::{Error, Result};
pub use game::{GameKind, GameSpec, GameState, Move, Outcome, Player, Status};
pub use graph::SimpleGraph;
pub use hypergraph::{Hypergraph, Transversal};
pub use io::Document;
pub use solver::{
    decide, game_values, optimal_move, spec_values, wc_game_values, GameValue, Objective, SolveResult, SolverConfig,
};
pub use strategies::{verify_strategy, Guarantee, Strategy, Verdict};

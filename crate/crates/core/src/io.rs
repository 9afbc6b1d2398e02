//! JSON documents for boards and solver results.
//!
//! Every document carries a `"type"` tag. Boards are stored as explicit
//! index lists so fixtures stay readable in diffs.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::digraph::RootedDigraph;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hypergraph::Hypergraph;
use crate::solver::SolveResult;

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum Raw {
    Hypergraph {
        n: usize,
        edges: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Graph {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
    Digraph {
        n: usize,
        arcs: Vec<(usize, usize)>,
        start: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        end: Option<usize>,
    },
    SolveResult(SolveResult),
}

/// Any of the four document kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Hypergraph(Hypergraph),
    Graph(SimpleGraph),
    Digraph(RootedDigraph),
    SolveResult(SolveResult),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Hypergraph(_) => "hypergraph",
            Document::Graph(_) => "graph",
            Document::Digraph(_) => "digraph",
            Document::SolveResult(_) => "solve_result",
        }
    }

    fn to_raw(&self) -> Raw {
        match self {
            Document::Hypergraph(h) => Raw::Hypergraph {
                n: h.n(),
                edges: h.edge_lists(),
                labels: h.labels().map(<[String]>::to_vec),
            },
            Document::Graph(g) => Raw::Graph {
                n: g.n(),
                edges: g.edges(),
            },
            Document::Digraph(d) => Raw::Digraph {
                n: d.nv(),
                arcs: d.arcs().to_vec(),
                start: d.start(),
                end: d.end(),
            },
            Document::SolveResult(r) => Raw::SolveResult(r.clone()),
        }
    }

    fn from_raw(raw: Raw) -> Result<Self> {
        Ok(match raw {
            Raw::Hypergraph { n, edges, labels } => {
                let h = Hypergraph::new(n, edges)?;
                Document::Hypergraph(match labels {
                    Some(l) => h.with_labels(l)?,
                    None => h,
                })
            }
            Raw::Graph { n, edges } => Document::Graph(SimpleGraph::new(n, &edges)?),
            Raw::Digraph { n, arcs, start, end } => Document::Digraph(RootedDigraph::new(n, arcs, start, end)?),
            Raw::SolveResult(r) => Document::SolveResult(r),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_raw()).expect("documents always serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("documents always serialize")
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_raw()).expect("documents always serialize")
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_raw(serde_json::from_str(text)?)
    }

    pub fn from_value(v: serde_json::Value) -> Result<Self> {
        Self::from_raw(serde_json::from_value(v)?)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json_pretty() + "\n")
            .map_err(|e| Error::Format(format!("cannot write {}: {e}", path.display())))
    }

    pub fn into_hypergraph(self) -> Result<Hypergraph> {
        match self {
            Document::Hypergraph(h) => Ok(h),
            other => Err(Error::Format(format!(
                "expected a hypergraph, found a {}",
                other.kind()
            ))),
        }
    }

    pub fn into_graph(self) -> Result<SimpleGraph> {
        match self {
            Document::Graph(g) => Ok(g),
            other => Err(Error::Format(format!("expected a graph, found a {}", other.kind()))),
        }
    }

    pub fn into_digraph(self) -> Result<RootedDigraph> {
        match self {
            Document::Digraph(d) => Ok(d),
            other => Err(Error::Format(format!("expected a digraph, found a {}", other.kind()))),
        }
    }
}

impl From<Hypergraph> for Document {
    fn from(h: Hypergraph) -> Self {
        Document::Hypergraph(h)
    }
}

impl From<SimpleGraph> for Document {
    fn from(g: SimpleGraph) -> Self {
        Document::Graph(g)
    }
}

impl From<RootedDigraph> for Document {
    fn from(d: RootedDigraph) -> Self {
        Document::Digraph(d)
    }
}

impl From<SolveResult> for Document {
    fn from(r: SolveResult) -> Self {
        Document::SolveResult(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::GameValue;
    use proptest::prelude::*;

    #[test]
    fn field_names_are_exact() {
        let d = RootedDigraph::new(3, vec![(0, 1), (1, 2), (1, 2)], 0, Some(2)).unwrap();
        assert_eq!(
            Document::from(d).to_json(),
            r#"{"type":"digraph","n":3,"arcs":[[0,1],[1,2],[1,2]],"start":0,"end":2}"#
        );
        let d = RootedDigraph::new(2, vec![(0, 1)], 0, None).unwrap();
        assert_eq!(
            Document::from(d).to_json(),
            r#"{"type":"digraph","n":2,"arcs":[[0,1]],"start":0}"#
        );
        let g = SimpleGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            Document::from(g).to_json(),
            r#"{"type":"graph","n":3,"edges":[[0,1],[1,2]]}"#
        );
        let h = Hypergraph::new(3, vec![vec![0, 2]]).unwrap();
        assert_eq!(
            Document::from(h.clone()).to_json(),
            r#"{"type":"hypergraph","n":3,"edges":[[0,2]]}"#
        );
        let h = h.with_labels(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        assert_eq!(
            Document::from(h).to_json(),
            r#"{"type":"hypergraph","n":3,"edges":[[0,2]],"labels":["a","b","c"]}"#
        );
        let r = SolveResult {
            maker_wins: false,
            min_rounds: GameValue::Infinite,
            min_size: GameValue::Infinite,
            frontier: vec![],
        };
        assert_eq!(
            Document::from(r).to_json(),
            r#"{"type":"solve_result","maker_wins":false,"min_rounds":null,"min_size":null,"frontier":[]}"#
        );
    }

    #[test]
    fn malformed_documents_are_rejected() {
        for bad in [
            r#"{"type":"graph","n":2,"edges":[[0,2]]}"#,
            r#"{"type":"graph","n":2,"edges":[[1,1]]}"#,
            r#"{"type":"hypergraph","n":2,"edges":[[]]}"#,
            r#"{"type":"hypergraph","n":2,"edges":[[0]],"labels":["x"]}"#,
            r#"{"type":"digraph","n":2,"arcs":[],"start":2}"#,
            r#"{"type":"matrix","n":2}"#,
            r#"{"n":2,"edges":[]}"#,
            r#"{"type":"graph","n":2,"edges":[],"extra":1}"#,
            "not json",
        ] {
            assert!(Document::parse(bad).is_err(), "{bad}");
        }
        let g = Document::parse(r#"{"type":"graph","n":1,"edges":[]}"#).unwrap();
        assert!(g.into_hypergraph().is_err());
    }

    #[test]
    fn files_round_trip() {
        let dir = std::env::temp_dir().join(format!("posgames-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("h.json");
        let doc = Document::from(Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap());
        doc.write(&path).unwrap();
        assert_eq!(Document::read(&path).unwrap(), doc);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    fn hypergraph() -> impl Strategy<Value = Hypergraph> {
        (1usize..12).prop_flat_map(|n| {
            (
                prop::collection::vec(prop::collection::btree_set(0..n, 1..=n), 0..8),
                any::<bool>(),
            )
                .prop_map(move |(edges, labelled)| {
                    let h = Hypergraph::new(n, edges.into_iter().map(|e| e.into_iter().collect()).collect()).unwrap();
                    if labelled {
                        h.with_labels((0..n).map(|i| format!("e{i}")).collect()).unwrap()
                    } else {
                        h
                    }
                })
        })
    }

    fn graph() -> impl Strategy<Value = SimpleGraph> {
        (2usize..10).prop_flat_map(|n| {
            prop::collection::vec((0..n, 0..n), 0..15).prop_map(move |pairs| {
                let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
                SimpleGraph::new(n, &edges).unwrap()
            })
        })
    }

    fn digraph() -> impl Strategy<Value = RootedDigraph> {
        (1usize..10).prop_flat_map(|n| {
            (prop::collection::vec((0..n, 0..n), 0..15), 0..n, prop::option::of(0..n))
                .prop_map(move |(arcs, s, e)| RootedDigraph::new(n, arcs, s, e).unwrap())
        })
    }

    fn solve_result() -> impl Strategy<Value = SolveResult> {
        (
            any::<bool>(),
            prop::option::of(0usize..50),
            prop::option::of(0usize..50),
            prop::collection::vec((0usize..9, 0usize..9), 0..5),
        )
            .prop_map(|(w, r, s, frontier)| SolveResult {
                maker_wins: w,
                min_rounds: r.into(),
                min_size: s.into(),
                frontier,
            })
    }

    proptest! {
        #[test]
        fn hypergraphs_round_trip(h in hypergraph()) {
            let d = Document::from(h);
            prop_assert_eq!(Document::parse(&d.to_json()).unwrap(), d);
        }

        #[test]
        fn graphs_round_trip(g in graph()) {
            let d = Document::from(g);
            prop_assert_eq!(Document::parse(&d.to_json_pretty()).unwrap(), d);
        }

        #[test]
        fn digraphs_round_trip(g in digraph()) {
            let d = Document::from(g);
            prop_assert_eq!(Document::from_value(d.to_value()).unwrap(), d);
        }

        #[test]
        fn results_round_trip(r in solve_result()) {
            let d = Document::from(r);
            prop_assert_eq!(Document::parse(&d.to_json()).unwrap(), d);
        }
    }
}

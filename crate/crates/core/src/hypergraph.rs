//! Hypergraphs: a board `0..n` together with a family of winning sets.

use rustc_hash::FxHashSet;

use crate::bitset::{binomial, k_subsets, ElementSet, CAPACITY};
use crate::error::{Error, Result};

/// Upper bound on the number of candidate sets the transversal
/// computation keeps alive at any point.
pub const DEFAULT_TRANSVERSAL_CAP: usize = 200_000;

/// Upper bound on the number of subsets generated by [`Hypergraph::add_all_k_subsets`].
pub const DEFAULT_SUBSET_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<ElementSet>,
    labels: Option<Vec<String>>,
}

/// Result of [`Hypergraph::transversal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transversal {
    /// The minimal transversals, as a hypergraph on the same board.
    Family(Hypergraph),
    /// The input had no winning sets, so the empty set is the unique minimal
    /// transversal. It is not materialized because winning sets are non-empty.
    Degenerate { n: usize },
}

impl Transversal {
    pub fn into_family(self) -> Option<Hypergraph> {
        match self {
            Transversal::Family(h) => Some(h),
            Transversal::Degenerate { .. } => None,
        }
    }
}

fn check_capacity(n: usize) -> Result<()> {
    if n > CAPACITY {
        return Err(Error::Capacity { n, capacity: CAPACITY });
    }
    Ok(())
}

impl Hypergraph {
    /// Builds a hypergraph from explicit index lists. Duplicate winning sets
    /// are collapsed, keeping the first occurrence.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        check_capacity(n)?;
        let mut sets = Vec::with_capacity(edges.len());
        for edge in edges {
            if edge.is_empty() {
                return Err(Error::EmptyEdge);
            }
            let mut s = ElementSet::new();
            for index in edge {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
                s.insert(index);
            }
            sets.push(s);
        }
        Self::from_sets(n, sets)
    }

    pub fn from_sets(n: usize, edges: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        check_capacity(n)?;
        let universe = ElementSet::full(n);
        let mut seen = FxHashSet::default();
        let mut out = Vec::new();
        for e in edges {
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
            if !e.is_subset(&universe) {
                let index = (e - universe).first().unwrap_or(n);
                return Err(Error::IndexOutOfRange { index, n });
            }
            if seen.insert(e) {
                out.push(e);
            }
        }
        Ok(Hypergraph {
            n,
            edges: out,
            labels: None,
        })
    }

    /// A board of `n` elements without winning sets.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_sets(n, std::iter::empty())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::invalid(format!(
                "{} labels given for {} elements",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[ElementSet] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, e: usize) -> String {
        match &self.labels {
            Some(l) => l[e].clone(),
            None => e.to_string(),
        }
    }

    pub fn universe(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn min_edge_size(&self) -> Option<usize> {
        self.edges.iter().map(|e| e.len()).min()
    }

    /// Distinct winning-set sizes in increasing order.
    pub fn edge_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.edges.iter().map(|e| e.len()).collect();
        sizes.sort_unstable();
        sizes.dedup();
        sizes
    }

    /// Keeps only the winning sets of size at most `max`.
    pub fn restrict_sizes(&self, max: usize) -> Self {
        Hypergraph {
            n: self.n,
            edges: self.edges.iter().copied().filter(|e| e.len() <= max).collect(),
            labels: self.labels.clone(),
        }
    }

    /// The inclusion-minimal subfamily, in original order.
    pub fn minimalize(&self) -> Self {
        Hypergraph {
            n: self.n,
            edges: minimal_sets(&self.edges),
            labels: self.labels.clone(),
        }
    }

    pub fn is_antichain(&self) -> bool {
        self.edges
            .iter()
            .enumerate()
            .all(|(i, a)| self.edges.iter().enumerate().all(|(j, b)| i == j || !a.is_subset(b)))
    }

    /// Places `other` after `self`, shifting its indices by `self.n()`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Self> {
        let n = self.n + other.n;
        check_capacity(n)?;
        let shift = self.n;
        let shifted = other
            .edges
            .iter()
            .map(|e| e.iter().map(|x| x + shift).collect::<ElementSet>());
        let mut h = Self::from_sets(n, self.edges.iter().copied().chain(shifted))?;
        if self.labels.is_some() || other.labels.is_some() {
            let mut labels = Vec::with_capacity(n);
            labels.extend((0..self.n).map(|e| self.label(e)));
            labels.extend((0..other.n).map(|e| other.label(e)));
            h.labels = Some(labels);
        }
        Ok(h)
    }

    /// Adds every `k`-element subset of the board as a winning set.
    pub fn add_all_k_subsets(&self, k: usize) -> Result<Self> {
        self.add_all_k_subsets_capped(k, DEFAULT_SUBSET_CAP)
    }

    pub fn add_all_k_subsets_capped(&self, k: usize, cap: u64) -> Result<Self> {
        if k == 0 || k > self.n {
            return Err(Error::invalid(format!("subset size {k} must lie in 1..={}", self.n)));
        }
        if binomial(self.n, k) > cap {
            return Err(Error::Guard {
                what: "k-subset count",
                limit: cap,
            });
        }
        let pool: Vec<usize> = (0..self.n).collect();
        let mut h = Self::from_sets(self.n, self.edges.iter().copied().chain(k_subsets(&pool, k)))?;
        h.labels = self.labels.clone();
        Ok(h)
    }

    /// All inclusion-minimal sets meeting every winning set.
    pub fn transversal(&self) -> Result<Transversal> {
        self.transversal_capped(DEFAULT_TRANSVERSAL_CAP)
    }

    pub fn transversal_capped(&self, cap: usize) -> Result<Transversal> {
        if self.edges.is_empty() {
            return Ok(Transversal::Degenerate { n: self.n });
        }
        let family = minimal_transversals(&self.edges, cap)?;
        let mut h = Self::from_sets(self.n, family)?;
        h.labels = self.labels.clone();
        Ok(Transversal::Family(h))
    }

    /// Smallest winning set contained in `owned`, ties broken by family order.
    pub fn smallest_contained(&self, owned: &ElementSet) -> Option<ElementSet> {
        self.edges
            .iter()
            .filter(|e| e.is_subset(owned))
            .min_by_key(|e| e.len())
            .copied()
    }

    /// Index lists of every winning set, in family order.
    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|e| e.to_vec()).collect()
    }
}

/// Inclusion-minimal members of `sets` (duplicates collapsed), keeping the
/// input order.
pub fn minimal_sets(sets: &[ElementSet]) -> Vec<ElementSet> {
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| sets[i].len());
    let mut keep = vec![false; sets.len()];
    let mut kept: Vec<ElementSet> = Vec::new();
    for i in order {
        let s = sets[i];
        if kept.iter().any(|k| k.is_subset(&s)) {
            continue;
        }
        kept.push(s);
        keep[i] = true;
    }
    sets.iter().zip(keep).filter_map(|(s, k)| k.then_some(*s)).collect()
}

/// Berge's incremental algorithm: the minimal transversals of the first `i`
/// sets are extended to the first `i + 1`.
fn minimal_transversals(sets: &[ElementSet], cap: usize) -> Result<Vec<ElementSet>> {
    let mut edges = minimal_sets(sets);
    edges.sort_by_key(|e| e.len());
    let mut current = vec![ElementSet::new()];
    for edge in &edges {
        let mut hit = Vec::new();
        let mut extended = Vec::new();
        for t in &current {
            if t.intersects(edge) {
                hit.push(*t);
            } else {
                for x in edge.iter() {
                    let mut c = *t;
                    c.insert(x);
                    extended.push(c);
                }
            }
        }
        // sets in `hit` are pairwise incomparable already; an extension is
        // kept only if nothing else in the new family lies strictly below it
        extended.sort_by_key(|c| c.len());
        extended.dedup();
        let mut next = hit;
        let base = next.len();
        for c in extended {
            let dominated = next.iter().any(|k| k.is_subset(&c) && *k != c);
            if dominated || next[base..].contains(&c) {
                continue;
            }
            next.push(c);
            if next.len() > cap {
                return Err(Error::Guard {
                    what: "transversal family size",
                    limit: cap as u64,
                });
            }
        }
        current = next;
    }
    current.sort();
    Ok(current)
}

//! Simple undirected graphs.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Repeated edges are collapsed; loops
    /// are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, n });
                }
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(SimpleGraph { n, adj })
    }

    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges).expect("path edges are valid")
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::new(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::new(n, &edges).expect("complete graph edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adds a vertex adjacent to `neighbors` and returns its index.
    pub fn add_vertex(&mut self, neighbors: &[usize]) -> Result<usize> {
        let v = self.n;
        for &u in neighbors {
            if u >= v {
                return Err(Error::IndexOutOfRange { index: u, n: v });
            }
        }
        self.n += 1;
        let mut list = neighbors.to_vec();
        list.sort_unstable();
        list.dedup();
        for &u in &list {
            self.adj[u].push(v);
        }
        self.adj.push(list);
        Ok(v)
    }

    /// Deletes `removed` and relabels the remaining vertices in increasing
    /// order. Returns the new graph and, for each new index, its old index.
    pub fn remove_vertices(&self, removed: &[usize]) -> (SimpleGraph, Vec<usize>) {
        let mut gone = vec![false; self.n];
        for &v in removed {
            if v < self.n {
                gone[v] = true;
            }
        }
        let kept: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            new_index[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&u| !gone[u])
                    .map(|&u| new_index[u])
                    .collect()
            })
            .collect();
        (SimpleGraph { n: kept.len(), adj }, kept)
    }

    /// Closed neighbourhood `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.partition_point(|&u| u < v);
        out.insert(pos, v);
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        let c = SimpleGraph::cycle(5).unwrap();
        assert_eq!(c.edge_count(), 5);
        assert!(c.neighbors(0).contains(&4));
        assert!(SimpleGraph::path(4).is_tree());
        assert!(!c.is_tree());
        assert!(SimpleGraph::star(3).is_tree());
        assert_eq!(SimpleGraph::complete(4).edge_count(), 6);
        assert!(SimpleGraph::new(2, &[(0, 0)]).is_err());
        assert!(SimpleGraph::new(2, &[(0, 2)]).is_err());
        let g = SimpleGraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn removal_relabels() {
        let p = SimpleGraph::path(5);
        let (g, kept) = p.remove_vertices(&[0, 1]);
        assert_eq!(kept, vec![2, 3, 4]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn add_vertex_links_both_ways() {
        let mut g = SimpleGraph::empty(2);
        let v = g.add_vertex(&[0, 1]).unwrap();
        assert_eq!(v, 2);
        assert!(g.has_edge(0, 2) && g.has_edge(2, 1));
        assert_eq!(g.closed_neighborhood(2), vec![0, 1, 2]);
    }
}

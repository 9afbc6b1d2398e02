//! Directed multigraphs with a distinguished start vertex and optional end
//! vertex.

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedDigraph {
    nv: usize,
    arcs: Vec<(usize, usize)>,
    start: usize,
    end: Option<usize>,
    out: Vec<Vec<usize>>,
}

impl RootedDigraph {
    pub fn new(nv: usize, arcs: Vec<(usize, usize)>, start: usize, end: Option<usize>) -> Result<Self> {
        for v in std::iter::once(start).chain(end) {
            if v >= nv {
                return Err(Error::IndexOutOfRange { index: v, n: nv });
            }
        }
        let mut out = vec![Vec::new(); nv];
        for (i, &(u, v)) in arcs.iter().enumerate() {
            for x in [u, v] {
                if x >= nv {
                    return Err(Error::IndexOutOfRange { index: x, n: nv });
                }
            }
            out[u].push(i);
        }
        Ok(RootedDigraph {
            nv,
            arcs,
            start,
            end,
            out,
        })
    }

    pub fn nv(&self) -> usize {
        self.nv
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> Option<usize> {
        self.end
    }

    /// Indices of the arcs leaving `v`.
    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    /// Length of a shortest directed path from `from` to every vertex
    /// (`None` when unreachable).
    pub fn distances_from(&self, from: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.nv];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &a in &self.out[v] {
                let w = self.arcs[a].1;
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs shortest directed path lengths.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.nv).map(|v| self.distances_from(v)).collect()
    }

    /// True iff a directed path (possibly empty) leads from `x` to `y`.
    pub fn reaches(&self, x: usize, y: usize) -> bool {
        self.distances_from(x)[y].is_some()
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0usize; self.nv];
        for &(_, v) in &self.arcs {
            indeg[v] += 1;
        }
        let mut queue: Vec<usize> = (0..self.nv).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &a in &self.out[v] {
                let w = self.arcs[a].1;
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        seen == self.nv
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distances_and_order() {
        // 0 -> 1 -> 2, plus a parallel arc 0 -> 1
        let d = RootedDigraph::new(3, vec![(0, 1), (0, 1), (1, 2)], 0, Some(2)).unwrap();
        assert_eq!(d.out_degree(0), 2);
        assert_eq!(d.distances_from(0), vec![Some(0), Some(1), Some(2)]);
        assert!(d.reaches(0, 2));
        assert!(!d.reaches(2, 0));
        assert!(d.is_acyclic());
        let c = RootedDigraph::new(2, vec![(0, 1), (1, 0)], 0, None).unwrap();
        assert!(!c.is_acyclic());
        assert!(RootedDigraph::new(2, vec![(0, 2)], 0, None).is_err());
    }
}

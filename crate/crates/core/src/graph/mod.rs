//! Graphs, instances and solutions.
//!
//! Vertices are contiguous integers `1..=n`. Adjacency lists are kept sorted so
//! edge queries are a binary search.

mod cnf;
mod colored;
mod intervals;
pub mod io;

pub use cnf::CnfFormula;
pub use colored::ColoredGraph;
pub use intervals::{Interval, IntervalSet};

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use crate::error::{Error, GraphError};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    // adj[0] is unused so that vertex ids index directly.
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![Vec::new(); n + 1],
        }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        g.finish();
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but silently merges repeated edges.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Graph::from_edges(n, set)
    }

    fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
        Ok(())
    }

    fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    pub(crate) fn check(&self, v: Vertex) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> RangeInclusive<Vertex> {
        1..=self.n
    }

    /// Open neighborhood, sorted ascending. Panics on an out-of-range id.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != 0 && u <= self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// `N[v] = N(v) ∪ {v}`, sorted.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<Vec<Vertex>, GraphError> {
        self.check(v)?;
        let mut out = Vec::with_capacity(self.degree(v) + 1);
        let pos = self.adj[v].partition_point(|&u| u < v);
        out.extend_from_slice(&self.adj[v][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][pos..]);
        Ok(out)
    }

    /// Subgraph induced by `keep`, renumbered in the order given.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![0; self.n + 1];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i + 1;
        }
        let mut g = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &u in &self.adj[v] {
                if index[u] > i + 1 {
                    g.adj[i + 1].push(index[u]);
                    g.adj[index[u]].push(i + 1);
                    g.m += 1;
                }
            }
        }
        g.finish();
        g
    }
}

/// A graph together with the membership bound `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub k: usize,
}

impl Instance {
    pub fn new(graph: Graph, k: usize) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::InvalidInput(
                "membership bound k must be at least 1".into(),
            ));
        }
        Ok(Instance { graph, k })
    }
}

/// A candidate dominating set: sorted, duplicate-free vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Solution {
    members: Vec<Vertex>,
}

impl Solution {
    pub fn new(g: &Graph, members: impl IntoIterator<Item = Vertex>) -> Result<Self, GraphError> {
        let mut members: Vec<Vertex> = members.into_iter().collect();
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        for &v in &members {
            g.check(v)?;
        }
        Ok(Solution { members })
    }

    /// Caller guarantees the ids are in range; duplicates are merged.
    pub(crate) fn from_unchecked(members: impl IntoIterator<Item = Vertex>) -> Self {
        let mut members: Vec<Vertex> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Solution { members }
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// Indicator vector indexed by vertex id (index 0 unused).
    pub fn indicator(&self, n: usize) -> Vec<bool> {
        let mut mark = vec![false; n + 1];
        for &v in &self.members {
            mark[v] = true;
        }
        mark
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn closed_neighborhood_examples() {
        assert_eq!(path3().closed_neighborhood(2).unwrap(), vec![1, 2, 3]);
        let g = Graph::from_edges(3, [(1, 2)]).unwrap();
        assert_eq!(g.closed_neighborhood(3).unwrap(), vec![3]);
        let k4 = Graph::from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        for v in 1..=4 {
            assert_eq!(k4.closed_neighborhood(v).unwrap(), vec![1, 2, 3, 4]);
        }
        assert!(matches!(
            path3().closed_neighborhood(4),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        ));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(2, [(1, 2), (2, 1)]),
            Err(GraphError::DuplicateEdge(1, 2))
        );
        assert!(Graph::from_edges(2, [(1, 3)]).is_err());
        assert_eq!(Graph::from_edges_dedup(2, [(1, 2), (2, 1)]).unwrap().m(), 1);
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let c4 = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let h = c4.induced(&[2, 3, 4]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn solution_validation() {
        let g = path3();
        assert!(Solution::new(&g, [2, 2]).is_err());
        assert!(Solution::new(&g, [4]).is_err());
        assert_eq!(Solution::new(&g, [3, 1]).unwrap().members(), &[1, 3]);
        assert!(Instance::new(g, 0).is_err());
    }
}

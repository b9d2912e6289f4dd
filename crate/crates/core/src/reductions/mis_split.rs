//! Multi-colored independent set to MMDS on split graphs.
//!
//! Layout: the source vertices keep their ids, then `w`, then `U_1..U_k`
//! (`k + 1` vertices each), then one vertex `x_uv` per edge between different
//! classes. `V ∪ {w}` is a clique; the rest is independent.

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Graph, Instance, Solution, Vertex};

use super::{Builder, ReductionOutput};

pub fn reduce_mis_split(g: &ColoredGraph, k: usize) -> Result<ReductionOutput> {
    if g.k() != k {
        return Err(Error::InvalidInput(format!(
            "graph has {} color classes, expected {k}",
            g.k()
        )));
    }
    let n = g.graph.n();
    let classes = g.classes();
    let mut b = Builder::default();
    for v in 1..=n {
        b.vertex(format!("V_{} vertex {v}", g.color(v)));
    }
    let w = b.vertex("w");
    for u in 1..=n {
        for v in u + 1..=n {
            b.edge(u, v);
        }
        b.edge(u, w);
    }
    for (i, class) in classes.iter().enumerate() {
        for t in 1..=k + 1 {
            let ut = b.vertex(format!("U_{}/{t}", i + 1));
            for &v in class {
                b.edge(v, ut);
            }
        }
    }
    for (u, v) in g.graph.edges() {
        let (p, q) = (g.color(u), g.color(v));
        if p == q {
            continue;
        }
        let x = b.vertex(format!("D_{},{}/x_{u},{v}", p.min(q), p.max(q)));
        b.edge(w, x);
        for &a in classes[p - 1].iter().filter(|&&a| a != u) {
            b.edge(a, x);
        }
        for &a in classes[q - 1].iter().filter(|&&a| a != v) {
            b.edge(a, x);
        }
    }
    let (h, labels) = b.finish();
    Ok(ReductionOutput {
        instance: Instance::new(h, k)?,
        labels,
        source_ref: format!(
            "multi-colored independent set with {n} vertices, {} edges, k = {k}",
            g.graph.m()
        ),
        vertex_cover: None,
    })
}

/// The clique side `V ∪ {w}`: the first `|V| + 1` vertices.
pub fn split_partition(source_n: usize, h: &Graph) -> (Vec<Vertex>, Vec<Vertex>) {
    (
        (1..=source_n + 1).collect(),
        (source_n + 2..=h.n()).collect(),
    )
}

/// The independent set itself, one vertex per class.
pub fn mis_split_witness(g: &ColoredGraph, pick: &[Vertex]) -> Result<Solution> {
    if pick.len() != g.k() {
        return Err(Error::InvalidInput(
            "need one vertex per color class".into(),
        ));
    }
    for (i, &v) in pick.iter().enumerate() {
        if v == 0 || v > g.graph.n() || g.color(v) != i + 1 {
            return Err(Error::InvalidInput(format!(
                "vertex {v} is not in class {}",
                i + 1
            )));
        }
    }
    for (a, &u) in pick.iter().enumerate() {
        if pick[a + 1..].iter().any(|&v| g.graph.has_edge(u, v)) {
            return Err(Error::InvalidInput(
                "picked vertices are not independent".into(),
            ));
        }
    }
    Ok(Solution::from_unchecked(pick.iter().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::is_feasible;

    fn example() -> ColoredGraph {
        ColoredGraph::new(Graph::from_edges(4, [(1, 3)]).unwrap(), &[1, 1, 2, 2]).unwrap()
    }

    #[test]
    fn census_and_split() {
        let g = example();
        let out = reduce_mis_split(&g, 2).unwrap();
        let h = &out.instance.graph;
        assert_eq!(h.n(), 4 + 1 + 6 + 1);
        let (clique, rest) = split_partition(4, h);
        assert!(clique
            .iter()
            .all(|&u| clique.iter().all(|&v| u == v || h.has_edge(u, v))));
        assert!(rest
            .iter()
            .all(|&u| rest.iter().all(|&v| !h.has_edge(u, v))));
        assert!(reduce_mis_split(&g, 3).is_err());
    }

    #[test]
    fn witness_is_feasible() {
        let g = example();
        let out = reduce_mis_split(&g, 2).unwrap();
        let s = mis_split_witness(&g, &[2, 4]).unwrap();
        assert!(is_feasible(&out.instance, &s).is_feasible());
        assert!(mis_split_witness(&g, &[1, 3]).is_err());
    }
}

//! Seeded instance generators for tests and sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{CnfFormula, ColoredGraph, Graph, Interval, IntervalSet, Vertex};

pub type Rand = ChaCha8Rng;

/// A generator for item `index` of a sweep seeded with `seed`.
pub fn rng_for(seed: u64, index: u64) -> Rand {
    ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn erdos_renyi(n: usize, p: f64, rng: &mut Rand) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are distinct")
}

/// Uniform random attachment: vertex `v` hangs off a random earlier vertex.
pub fn random_tree(n: usize, rng: &mut Rand) -> Graph {
    let edges: Vec<_> = (2..=n).map(|v| (rng.gen_range(1..v), v)).collect();
    Graph::from_edges(n, edges).expect("tree edges are distinct")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_edges(n, (1..=n).map(|v| (v, v % n + 1))).expect("cycle edges are distinct")
}

/// `n` intervals with left endpoints in `0..span` and lengths in `0..max_len`.
pub fn random_intervals(n: usize, span: i64, max_len: i64, rng: &mut Rand) -> IntervalSet {
    let intervals = (0..n)
        .map(|i| {
            let left = rng.gen_range(0..span);
            Interval {
                id: i as u64 + 1,
                left,
                right: left + rng.gen_range(0..max_len.max(1)),
            }
        })
        .collect();
    IntervalSet::new(intervals).expect("ids are unique and intervals ordered")
}

/// Clauses of three distinct positive variables; needs `n >= 3`.
pub fn random_positive_3cnf(n: usize, m: usize, rng: &mut Rand) -> CnfFormula {
    let vars: Vec<i32> = (1..=n as i32).collect();
    let clauses = (0..m)
        .map(|_| vars.choose_multiple(rng, 3).copied().collect())
        .collect();
    CnfFormula::new(n, clauses).expect("literals in range")
}

/// Clauses of 1 to 3 distinct literals over `n` variables, random signs.
pub fn random_cnf(n: usize, m: usize, rng: &mut Rand) -> CnfFormula {
    let literals: Vec<i32> = (1..=n as i32).flat_map(|v| [v, -v]).collect();
    let clauses = (0..m)
        .map(|_| {
            let len = rng.gen_range(1..=3.min(literals.len()));
            literals.choose_multiple(rng, len).copied().collect()
        })
        .collect();
    CnfFormula::new(n, clauses).expect("literals in range")
}

/// Vertices colored by class in id order (`sizes[0]` vertices of color 1 first),
/// with each pair from different classes joined with probability `p`.
pub fn random_colored(sizes: &[usize], p: f64, rng: &mut Rand) -> ColoredGraph {
    let colors: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i + 1, s))
        .collect();
    let n = colors.len();
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if colors[u - 1] != colors[v - 1] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    ColoredGraph::new(
        Graph::from_edges(n, edges).expect("pairs distinct"),
        &colors,
    )
    .expect("classes nonempty")
}

/// `k` classes of `n` vertices with random cross edges and one planted
/// multicolored clique, returned one vertex per class.
pub fn planted_clique(k: usize, n: usize, p: f64, rng: &mut Rand) -> (ColoredGraph, Vec<Vertex>) {
    let clique: Vec<Vertex> = (0..k).map(|i| i * n + rng.gen_range(1..=n)).collect();
    let total = k * n;
    let color = |v: Vertex| (v - 1) / n;
    let mut edges = Vec::new();
    for u in 1..=total {
        for v in u + 1..=total {
            if color(u) == color(v) {
                continue;
            }
            if (clique.contains(&u) && clique.contains(&v)) || rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let colors: Vec<usize> = (1..=total).map(|v| color(v) + 1).collect();
    let g = ColoredGraph::new(
        Graph::from_edges(total, edges).expect("pairs distinct"),
        &colors,
    )
    .expect("classes nonempty");
    (g, clique)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_reproducible() {
        let a = erdos_renyi(10, 0.3, &mut rng_for(7, 1));
        let b = erdos_renyi(10, 0.3, &mut rng_for(7, 1));
        assert_eq!(a, b);
        let t = random_tree(12, &mut rng_for(1, 2));
        assert_eq!(t.m(), 11);
        assert_eq!(cycle(5).m(), 5);
    }

    #[test]
    fn planted_clique_is_a_clique() {
        let (g, clique) = planted_clique(3, 2, 0.2, &mut rng_for(3, 0));
        for (i, &u) in clique.iter().enumerate() {
            assert_eq!(g.color(u), i + 1);
            for &v in &clique[i + 1..] {
                assert!(g.graph.has_edge(u, v));
            }
        }
    }
}

//! Feasibility checks and the pendant forcing rules.

use std::fmt;

use crate::error::GraphError;
use crate::graph::{Graph, Instance, Solution, Vertex};

/// `M(v, S) = |N[v] ∩ S|`.
pub fn membership(g: &Graph, s: &Solution, v: Vertex) -> Result<usize, GraphError> {
    g.check(v)?;
    let own = usize::from(s.contains(v));
    Ok(own + g.neighbors(v).iter().filter(|&&u| s.contains(u)).count())
}

/// Memberships of every vertex, indexed by vertex id (index 0 unused).
pub fn memberships(g: &Graph, s: &Solution) -> Vec<usize> {
    let mut count = vec![0; g.n() + 1];
    for &v in s.members() {
        count[v] += 1;
        for &u in g.neighbors(v) {
            count[u] += 1;
        }
    }
    count
}

pub fn max_membership(g: &Graph, s: &Solution) -> usize {
    memberships(g, s).into_iter().skip(1).max().unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Feasible,
    NotDominating(Vertex),
    MembershipExceeded(Vertex, usize),
}

impl Verdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Verdict::Feasible)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Feasible => write!(f, "Feasible"),
            Verdict::NotDominating(v) => write!(f, "NotDominating {v}"),
            Verdict::MembershipExceeded(v, m) => write!(f, "MembershipExceeded {v} {m}"),
        }
    }
}

/// Checks `1 <= M(v, S) <= k` for every vertex, reporting the lowest violating vertex.
pub fn is_feasible(inst: &Instance, s: &Solution) -> Verdict {
    let count = memberships(&inst.graph, s);
    for v in inst.graph.vertices() {
        if count[v] == 0 {
            return Verdict::NotDominating(v);
        }
        if count[v] > inst.k {
            return Verdict::MembershipExceeded(v, count[v]);
        }
    }
    Verdict::Feasible
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ForcingResult {
    pub forced_in: Vec<Vertex>,
    pub forced_out: Vec<Vertex>,
    pub conflict: bool,
}

/// Pendant rules, applied to a fixpoint.
///
/// R1: a vertex with more than `k` degree-one neighbors must be in every solution,
/// otherwise each of those pendants dominates itself and the hub's membership
/// exceeds `k`.
/// R2: a degree-one neighbor of a forced vertex can be dropped from any solution
/// without losing domination or raising any membership.
///
/// Neither rule changes degrees, so one pass of each reaches the fixpoint.
pub fn forcing_preprocess(inst: &Instance) -> ForcingResult {
    let g = &inst.graph;
    let n = g.n();
    let mut state = vec![0u8; n + 1]; // 1 = in, 2 = out
    let mut conflict = false;

    for v in g.vertices() {
        let pendants = g.neighbors(v).iter().filter(|&&u| g.degree(u) == 1).count();
        if pendants > inst.k {
            state[v] = 1;
        }
    }
    for v in g.vertices() {
        if state[v] != 1 {
            continue;
        }
        for &u in g.neighbors(v) {
            if g.degree(u) == 1 {
                if state[u] == 1 {
                    conflict = true;
                } else {
                    state[u] = 2;
                }
            }
        }
    }
    for v in g.vertices() {
        let forced =
            usize::from(state[v] == 1) + g.neighbors(v).iter().filter(|&&u| state[u] == 1).count();
        if forced > inst.k {
            conflict = true;
        }
    }

    ForcingResult {
        forced_in: g.vertices().filter(|&v| state[v] == 1).collect(),
        forced_out: g.vertices().filter(|&v| state[v] == 2).collect(),
        conflict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn p3() -> Graph {
        graph(3, &[(1, 2), (2, 3)])
    }

    fn c4() -> Graph {
        graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)])
    }

    fn k4() -> Graph {
        graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    }

    fn sol(g: &Graph, vs: &[usize]) -> Solution {
        Solution::new(g, vs.iter().copied()).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert_eq!(membership(&p3(), &sol(&p3(), &[2]), 1).unwrap(), 1);
        for v in 1..=4 {
            assert_eq!(membership(&k4(), &sol(&k4(), &[1, 2, 3, 4]), v).unwrap(), 4);
        }
        assert_eq!(membership(&c4(), &sol(&c4(), &[1, 3]), 2).unwrap(), 2);
        assert!(membership(&c4(), &sol(&c4(), &[1]), 9).is_err());
    }

    #[test]
    fn feasibility_examples() {
        let inst = |g: Graph, k| Instance::new(g, k).unwrap();
        assert_eq!(
            is_feasible(&inst(p3(), 1), &sol(&p3(), &[2])),
            Verdict::Feasible
        );
        assert_eq!(
            is_feasible(&inst(c4(), 1), &sol(&c4(), &[1, 3])),
            Verdict::MembershipExceeded(2, 2)
        );
        assert_eq!(
            is_feasible(&inst(c4(), 1), &sol(&c4(), &[1])),
            Verdict::NotDominating(3)
        );
        assert_eq!(
            Verdict::MembershipExceeded(2, 2).to_string(),
            "MembershipExceeded 2 2"
        );
    }

    #[test]
    fn forcing_on_stars_and_cycles() {
        for k in 1..=3 {
            let leaves = k + 2;
            let edges: Vec<_> = (2..=leaves + 1).map(|v| (1, v)).collect();
            let star = graph(leaves + 1, &edges);
            let r = forcing_preprocess(&Instance::new(star, k).unwrap());
            assert_eq!(r.forced_in, vec![1]);
            assert_eq!(r.forced_out, (2..=leaves + 1).collect::<Vec<_>>());
            assert!(!r.conflict);
        }

        let r = forcing_preprocess(&Instance::new(p3(), 1).unwrap());
        assert_eq!(r.forced_in, vec![2]);
        assert_eq!(r.forced_out, vec![1, 3]);

        for k in 1..=3 {
            let r = forcing_preprocess(&Instance::new(c4(), k).unwrap());
            assert_eq!(r, ForcingResult::default());
        }
    }

    #[test]
    fn forcing_detects_overloaded_neighbor() {
        // Two hubs 1 and 2 with two pendants each, both adjacent to vertex 3; k = 1.
        let g = graph(7, &[(1, 4), (1, 5), (2, 6), (2, 7), (1, 3), (2, 3)]);
        let r = forcing_preprocess(&Instance::new(g, 1).unwrap());
        assert_eq!(r.forced_in, vec![1, 2]);
        assert!(r.conflict);
    }
}

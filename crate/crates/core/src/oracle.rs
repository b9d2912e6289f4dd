//! Exhaustive ground-truth solver.
//!
//! Subsets of the free vertices are enumerated with a plain binary counter; the
//! lowest counter value that yields a feasible set is the answer, so results do
//! not depend on the worker count.

use rayon::prelude::*;

use crate::checker::forcing_preprocess;
use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, Solution, Vertex};

pub const DEFAULT_FREE_BUDGET: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteOptions {
    /// Maximum number of undecided vertices after forcing.
    pub budget: usize,
    pub jobs: usize,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            budget: DEFAULT_FREE_BUDGET,
            jobs: 1,
        }
    }
}

pub fn brute_feasible(inst: &Instance, use_forcing: bool) -> Result<Option<Solution>> {
    brute_feasible_with(inst, use_forcing, &BruteOptions::default())
}

pub fn brute_feasible_with(
    inst: &Instance,
    use_forcing: bool,
    opts: &BruteOptions,
) -> Result<Option<Solution>> {
    let g = &inst.graph;
    let mut fixed = vec![0u8; g.n() + 1]; // 1 = in, 2 = out
    if use_forcing {
        let forcing = forcing_preprocess(inst);
        if forcing.conflict {
            return Ok(None);
        }
        for &v in &forcing.forced_in {
            fixed[v] = 1;
        }
        for &v in &forcing.forced_out {
            fixed[v] = 2;
        }
    }
    let free: Vec<Vertex> = g.vertices().filter(|&v| fixed[v] == 0).collect();
    let limit = opts.budget.min(63);
    if free.len() > limit {
        return Err(Error::BudgetExceeded {
            what: "brute force free vertices",
            size: free.len() as u64,
            limit: limit as u64,
        });
    }
    let mut bit = vec![0u64; g.n() + 1];
    for (i, &v) in free.iter().enumerate() {
        bit[v] = 1 << i;
    }

    // Each vertex contributes a (forced count, free mask) pair.
    let mut rows: Vec<(usize, u64)> = Vec::with_capacity(g.n());
    for v in g.vertices() {
        let mut base = usize::from(fixed[v] == 1);
        let mut mask = bit[v];
        for &u in g.neighbors(v) {
            base += usize::from(fixed[u] == 1);
            mask |= bit[u];
        }
        if mask == 0 {
            if base == 0 || base > inst.k {
                return Ok(None);
            }
        } else {
            rows.push((base, mask));
        }
    }

    let k = inst.k;
    let feasible = |s: u64| {
        rows.iter().all(|&(base, mask)| {
            let m = base + (s & mask).count_ones() as usize;
            m >= 1 && m <= k
        })
    };
    let total: u64 = 1 << free.len();
    let found = if opts.jobs <= 1 {
        (0..total).find(|&s| feasible(s))
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidInput(e.to_string()))?
            .install(|| (0..total).into_par_iter().find_first(|&s| feasible(s)))
    };

    Ok(found.map(|s| {
        let chosen = free
            .iter()
            .enumerate()
            .filter(|&(i, _)| s >> i & 1 == 1)
            .map(|(_, &v)| v);
        let forced = g.vertices().filter(|&v| fixed[v] == 1);
        Solution::from_unchecked(forced.chain(chosen))
    }))
}

/// Least `k` admitting a feasible solution, with a witness at that `k`.
pub fn brute_min_membership(g: &Graph) -> Result<(usize, Solution)> {
    brute_min_membership_with(g, &BruteOptions::default())
}

pub fn brute_min_membership_with(g: &Graph, opts: &BruteOptions) -> Result<(usize, Solution)> {
    // S = V is feasible at k = Δ + 1, so the loop always returns.
    for k in 1..=g.max_degree() + 1 {
        let inst = Instance::new(g.clone(), k)?;
        if let Some(s) = brute_feasible_with(&inst, true, opts)? {
            return Ok((k, s));
        }
    }
    unreachable!("the full vertex set is feasible at max degree + 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::is_feasible;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn c4() -> Graph {
        graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)])
    }

    /// Independent check: enumerate all 2^n subsets with the checker.
    fn exhaustive(inst: &Instance) -> bool {
        let n = inst.graph.n();
        (0u32..1 << n).any(|mask| {
            let s = Solution::from_unchecked((1..=n).filter(|v| mask >> (v - 1) & 1 == 1));
            is_feasible(inst, &s).is_feasible()
        })
    }

    #[test]
    fn small_examples() {
        let p3 = graph(3, &[(1, 2), (2, 3)]);
        for forcing in [false, true] {
            let s = brute_feasible(&Instance::new(p3.clone(), 1).unwrap(), forcing).unwrap();
            assert_eq!(s.unwrap().members(), &[2]);
        }

        let c4_1 = Instance::new(c4(), 1).unwrap();
        assert!(!exhaustive(&c4_1));
        assert_eq!(brute_feasible(&c4_1, false).unwrap(), None);

        let c4_2 = Instance::new(c4(), 2).unwrap();
        assert!(exhaustive(&c4_2));
        let s = brute_feasible(&c4_2, false).unwrap().unwrap();
        assert!(is_feasible(&c4_2, &s).is_feasible());
    }

    #[test]
    fn min_membership_examples() {
        let p3 = graph(3, &[(1, 2), (2, 3)]);
        assert_eq!(
            brute_min_membership(&p3).unwrap(),
            (1, Solution::from_unchecked([2]))
        );
        let (k, s) = brute_min_membership(&c4()).unwrap();
        assert_eq!(k, 2);
        assert!(is_feasible(&Instance::new(c4(), 2).unwrap(), &s).is_feasible());
        let k4 = graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(
            brute_min_membership(&k4).unwrap(),
            (1, Solution::from_unchecked([1]))
        );
    }

    #[test]
    fn refuses_over_budget() {
        let g = Graph::empty(30);
        let inst = Instance::new(g, 1).unwrap();
        assert!(matches!(
            brute_feasible(&inst, true),
            Err(Error::BudgetExceeded { size: 30, .. })
        ));
        let opts = BruteOptions {
            budget: 40,
            jobs: 1,
        };
        assert_eq!(
            brute_feasible_with(&inst, true, &opts)
                .unwrap()
                .unwrap()
                .len(),
            30
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = graph(
            8,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 1),
                (1, 5),
            ],
        );
        for k in 1..=4 {
            let inst = Instance::new(g.clone(), k).unwrap();
            let seq = brute_feasible(&inst, false).unwrap();
            let par = brute_feasible_with(
                &inst,
                false,
                &BruteOptions {
                    budget: 24,
                    jobs: 4,
                },
            )
            .unwrap();
            assert_eq!(seq, par);
        }
    }
}

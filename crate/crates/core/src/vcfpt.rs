//! Vertex-cover parameterized solver.
//!
//! For a minimum vertex cover `C` with independent complement `I`, every subset
//! `C1` of `C` is tried as `S ∩ C`. Vertices of `I` with no neighbor in `C1`
//! must dominate themselves, so `I1 = I \ N(C1)` is forced in. The remaining
//! freedom is which vertices of `Ie` (those in `N(C1) ∩ I` that can still take
//! one more hit) to add; only their counts per `C`-neighborhood class matter,
//! which turns the subproblem into a small bounded integer program.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::checker::is_feasible;
use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, Solution, Vertex};

pub const MAX_COVER_SEARCH: usize = 30;
pub const DEFAULT_COVER_BUDGET: usize = 20;

/// Exact minimum vertex cover by iterative deepening over edge branching.
/// Deterministic: the first uncovered edge in lexicographic order is branched
/// on, trying its lower endpoint first.
pub fn min_vertex_cover(g: &Graph) -> Result<Vec<Vertex>> {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut in_cover = vec![false; g.n() + 1];
    for budget in 0..=MAX_COVER_SEARCH {
        if cover_search(&edges, &mut in_cover, budget) {
            return Ok(g.vertices().filter(|&v| in_cover[v]).collect());
        }
    }
    Err(Error::BudgetExceeded {
        what: "vertex cover size",
        size: MAX_COVER_SEARCH as u64 + 1,
        limit: MAX_COVER_SEARCH as u64,
    })
}

fn cover_search(edges: &[(Vertex, Vertex)], in_cover: &mut [bool], budget: usize) -> bool {
    let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !in_cover[u] && !in_cover[v]) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    // A greedy matching among uncovered edges is a lower bound.
    let mut matched = vec![false; in_cover.len()];
    let mut lower = 0;
    for &(a, b) in edges {
        if !in_cover[a] && !in_cover[b] && !matched[a] && !matched[b] {
            matched[a] = true;
            matched[b] = true;
            lower += 1;
            if lower > budget {
                return false;
            }
        }
    }
    for x in [u, v] {
        in_cover[x] = true;
        if cover_search(edges, in_cover, budget - 1) {
            return true;
        }
        in_cover[x] = false;
    }
    false
}

pub fn is_vertex_cover(g: &Graph, cover: &[Vertex]) -> bool {
    let mut mark = vec![false; g.n() + 1];
    for &v in cover {
        if v == 0 || v > g.n() {
            return false;
        }
        mark[v] = true;
    }
    g.edges().all(|(u, v)| mark[u] || mark[v])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSplit {
    pub cover: Vec<Vertex>,
    pub independent: Vec<Vertex>,
    pub c1: Vec<Vertex>,
    pub i1: Vec<Vertex>,
    pub ie: Vec<Vertex>,
}

impl CoverSplit {
    pub fn new(inst: &Instance, cover: &[Vertex], c1: &[Vertex]) -> Result<Self> {
        let g = &inst.graph;
        if !is_vertex_cover(g, cover) {
            return Err(Error::InvalidInput("C is not a vertex cover".into()));
        }
        let mut in_c = vec![false; g.n() + 1];
        for &v in cover {
            in_c[v] = true;
        }
        let mut in_c1 = vec![false; g.n() + 1];
        for &v in c1 {
            if v == 0 || v > g.n() || !in_c[v] {
                return Err(Error::InvalidInput(format!("vertex {v} of C1 is not in C")));
            }
            in_c1[v] = true;
        }
        let independent: Vec<Vertex> = g.vertices().filter(|&v| !in_c[v]).collect();
        let hits = |v: Vertex| g.neighbors(v).iter().filter(|&&u| in_c1[u]).count();
        let i1 = independent
            .iter()
            .copied()
            .filter(|&v| hits(v) == 0)
            .collect();
        let ie = independent
            .iter()
            .copied()
            .filter(|&v| (1..inst.k).contains(&hits(v)))
            .collect();
        Ok(CoverSplit {
            cover: g.vertices().filter(|&v| in_c[v]).collect(),
            independent,
            c1: g.vertices().filter(|&v| in_c1[v]).collect(),
            i1,
            ie,
        })
    }
}

/// `Ie` vertices sharing one neighborhood in `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVar {
    pub signature: Vec<Vertex>,
    /// Sorted ascending; the population is `members.len()`.
    pub members: Vec<Vertex>,
}

/// `lower <= Σ x_c over classes <= upper`, stated for one cover vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub vertex: Vertex,
    pub lower: usize,
    pub upper: usize,
    pub classes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmmdsProgram {
    pub split: CoverSplit,
    pub classes: Vec<ClassVar>,
    pub constraints: Vec<Constraint>,
}

impl CmmdsProgram {
    pub fn populations(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }

    /// `C1 ∪ I1 ∪ R` where `R` takes the lowest-id members of each class.
    pub fn realize(&self, counts: &[usize]) -> Solution {
        let chosen = self
            .classes
            .iter()
            .zip(counts)
            .flat_map(|(class, &x)| class.members[..x].iter().copied());
        Solution::from_unchecked(
            self.split
                .c1
                .iter()
                .chain(&self.split.i1)
                .copied()
                .chain(chosen),
        )
    }
}

/// Builds the constrained subproblem for `S ∩ C = C1`, or `None` when it is
/// infeasible before any `Ie` vertex is chosen.
pub fn build_cmmds(
    inst: &Instance,
    cover: &[Vertex],
    c1: &[Vertex],
) -> Result<Option<CmmdsProgram>> {
    let split = CoverSplit::new(inst, cover, c1)?;
    let g = &inst.graph;
    let k = inst.k;
    let mut fixed = vec![false; g.n() + 1];
    for &v in split.c1.iter().chain(&split.i1) {
        fixed[v] = true;
    }
    let lambda =
        |v: Vertex| usize::from(fixed[v]) + g.neighbors(v).iter().filter(|&&u| fixed[u]).count();
    if g.vertices().any(|v| lambda(v) > k) {
        return Ok(None);
    }

    let mut in_c = vec![false; g.n() + 1];
    for &v in &split.cover {
        in_c[v] = true;
    }
    let mut groups: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
    for &v in &split.ie {
        let signature = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| in_c[u])
            .collect();
        groups.entry(signature).or_default().push(v);
    }
    let classes: Vec<ClassVar> = groups
        .into_iter()
        .map(|(signature, members)| ClassVar { signature, members })
        .collect();

    let mut constraints = Vec::new();
    for &v in &split.cover {
        let incident: Vec<usize> = classes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.signature.binary_search(&v).is_ok())
            .map(|(i, _)| i)
            .collect();
        let l = lambda(v);
        if l == 0 {
            if incident.is_empty() {
                return Ok(None);
            }
            constraints.push(Constraint {
                vertex: v,
                lower: 1,
                upper: k,
                classes: incident,
            });
        } else if !incident.is_empty() {
            constraints.push(Constraint {
                vertex: v,
                lower: 0,
                upper: k - l,
                classes: incident,
            });
        }
    }
    Ok(Some(CmmdsProgram {
        split,
        classes,
        constraints,
    }))
}

pub fn solve_cmmds(p: &CmmdsProgram) -> Option<Vec<usize>> {
    solve_bounded(&p.populations(), &p.constraints)
}

/// Depth-first branch and bound over `0 <= x_i <= upper[i]`, values tried in
/// ascending order. After every assignment each constraint is checked against
/// its residual range, so the first complete vector found is the
/// lexicographically least solution.
pub fn solve_bounded(upper: &[usize], constraints: &[Constraint]) -> Option<Vec<usize>> {
    let mut of_var: Vec<Vec<usize>> = vec![Vec::new(); upper.len()];
    for (j, c) in constraints.iter().enumerate() {
        for &i in &c.classes {
            of_var[i].push(j);
        }
    }
    let mut sum = vec![0usize; constraints.len()];
    let mut slack: Vec<usize> = constraints
        .iter()
        .map(|c| c.classes.iter().map(|&i| upper[i]).sum())
        .collect();
    if constraints
        .iter()
        .enumerate()
        .any(|(j, c)| c.lower > slack[j] || c.lower > c.upper)
    {
        return None;
    }
    let mut x = vec![0usize; upper.len()];
    if branch(0, upper, constraints, &of_var, &mut x, &mut sum, &mut slack) {
        Some(x)
    } else {
        None
    }
}

fn branch(
    i: usize,
    upper: &[usize],
    constraints: &[Constraint],
    of_var: &[Vec<usize>],
    x: &mut [usize],
    sum: &mut [usize],
    slack: &mut [usize],
) -> bool {
    if i == upper.len() {
        return true;
    }
    for &j in &of_var[i] {
        slack[j] -= upper[i];
    }
    for value in 0..=upper[i] {
        let ok = of_var[i].iter().all(|&j| {
            let s = sum[j] + value;
            s <= constraints[j].upper && s + slack[j] >= constraints[j].lower
        });
        if !ok {
            // Larger values only push sums further past the upper bounds.
            if of_var[i]
                .iter()
                .any(|&j| sum[j] + value > constraints[j].upper)
            {
                break;
            }
            continue;
        }
        for &j in &of_var[i] {
            sum[j] += value;
        }
        x[i] = value;
        if branch(i + 1, upper, constraints, of_var, x, sum, slack) {
            return true;
        }
        for &j in &of_var[i] {
            sum[j] -= value;
        }
    }
    x[i] = 0;
    for &j in &of_var[i] {
        slack[j] += upper[i];
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VcOptions {
    /// Largest minimum vertex cover accepted.
    pub budget: usize,
    pub jobs: usize,
}

impl Default for VcOptions {
    fn default() -> Self {
        VcOptions {
            budget: DEFAULT_COVER_BUDGET,
            jobs: 1,
        }
    }
}

pub fn vc_fpt_feasible(inst: &Instance) -> Result<Option<Solution>> {
    vc_fpt_feasible_with(inst, &VcOptions::default())
}

/// Subsets `C1` are visited as a binary counter over the sorted cover; the
/// first one with a satisfiable program defines the answer.
pub fn vc_fpt_feasible_with(inst: &Instance, opts: &VcOptions) -> Result<Option<Solution>> {
    let cover = min_vertex_cover(&inst.graph)?;
    let limit = opts.budget.min(62);
    if cover.len() > limit {
        return Err(Error::BudgetExceeded {
            what: "vertex cover size",
            size: cover.len() as u64,
            limit: limit as u64,
        });
    }
    let attempt = |mask: u64| -> Result<Option<Solution>> {
        let c1: Vec<Vertex> = cover
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        Ok(build_cmmds(inst, &cover, &c1)?.and_then(|p| solve_cmmds(&p).map(|x| p.realize(&x))))
    };
    let total = 1u64 << cover.len();
    let found = if opts.jobs <= 1 {
        let mut found = None;
        for mask in 0..total {
            if let Some(s) = attempt(mask)? {
                found = Some(s);
                break;
            }
        }
        found
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
        pool.install(|| {
            (0..total)
                .into_par_iter()
                .map(attempt)
                .find_first(|r| !matches!(r, Ok(None)))
        })
        .transpose()?
        .flatten()
    };
    debug_assert!(found
        .as_ref()
        .is_none_or(|s| is_feasible(inst, s).is_feasible()));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_feasible;
    use proptest::prelude::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn p3() -> Graph {
        graph(3, &[(1, 2), (2, 3)])
    }

    fn c4() -> Graph {
        graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)])
    }

    #[test]
    fn cover_examples() {
        assert_eq!(min_vertex_cover(&p3()).unwrap(), vec![2]);
        assert_eq!(min_vertex_cover(&c4()).unwrap().len(), 2);
        assert!((1..=4).all(|v| !is_vertex_cover(&c4(), &[v])));
        let k4 = graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(min_vertex_cover(&k4).unwrap().len(), 3);
        assert!(min_vertex_cover(&Graph::empty(3)).unwrap().is_empty());
    }

    #[test]
    fn program_examples() {
        let inst = Instance::new(p3(), 1).unwrap();
        let p = build_cmmds(&inst, &[2], &[2]).unwrap().unwrap();
        assert!(p.split.i1.is_empty() && p.split.ie.is_empty());
        assert!(p.constraints.iter().all(|c| c.lower == 0));
        let x = solve_cmmds(&p).unwrap();
        assert_eq!(p.realize(&x).members(), &[2]);

        let p = build_cmmds(&inst, &[2], &[]).unwrap();
        assert_eq!(p, None);

        let c4_1 = Instance::new(c4(), 1).unwrap();
        assert_eq!(build_cmmds(&c4_1, &[1, 3], &[1, 3]).unwrap(), None);
        assert!(build_cmmds(&c4_1, &[1, 2], &[1, 2]).is_err());
        assert!(build_cmmds(&c4_1, &[1, 3], &[2]).is_err());
    }

    #[test]
    fn bounded_solver_examples() {
        let c = |lower, upper| Constraint {
            vertex: 1,
            lower,
            upper,
            classes: vec![0],
        };
        let x = solve_bounded(&[3], &[c(1, 2)]).unwrap();
        assert!((1..=2).contains(&x[0]));
        assert_eq!(solve_bounded(&[3], &[c(1, 3), c(0, 0)]), None);
    }

    #[test]
    fn solver_examples() {
        let inst = Instance::new(p3(), 1).unwrap();
        let s = vc_fpt_feasible(&inst).unwrap().unwrap();
        assert!(is_feasible(&inst, &s).is_feasible());
        assert_eq!(
            vc_fpt_feasible(&Instance::new(c4(), 1).unwrap()).unwrap(),
            None
        );
        assert!(vc_fpt_feasible(&Instance::new(c4(), 2).unwrap())
            .unwrap()
            .is_some());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
                let edges = pairs.iter().zip(&keep).filter(|(_, &b)| b).map(|(&e, _)| e);
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    fn arb_program() -> impl Strategy<Value = (Vec<usize>, Vec<Constraint>)> {
        (1..=4usize, 1..=4usize).prop_flat_map(|(vars, cons)| {
            (
                proptest::collection::vec(0..=3usize, vars),
                proptest::collection::vec(
                    (
                        0..=3usize,
                        0..=5usize,
                        proptest::collection::vec(any::<bool>(), vars),
                    ),
                    cons,
                ),
            )
                .prop_map(|(upper, raw)| {
                    let constraints = raw
                        .into_iter()
                        .enumerate()
                        .map(|(j, (lower, upper, mask))| Constraint {
                            vertex: j + 1,
                            lower,
                            upper,
                            classes: (0..mask.len()).filter(|&i| mask[i]).collect(),
                        })
                        .collect();
                    (upper, constraints)
                })
        })
    }

    fn satisfies(x: &[usize], constraints: &[Constraint]) -> bool {
        constraints.iter().all(|c| {
            let s: usize = c.classes.iter().map(|&i| x[i]).sum();
            c.lower <= s && s <= c.upper
        })
    }

    proptest! {
        #[test]
        fn bounded_solver_matches_enumeration((upper, constraints) in arb_program()) {
            let mut all = vec![Vec::new()];
            for &u in &upper {
                all = all
                    .into_iter()
                    .flat_map(|p: Vec<usize>| (0..=u).map(move |v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    }))
                    .collect();
            }
            let expected = all.iter().find(|x| satisfies(x, &constraints)).cloned();
            let got = solve_bounded(&upper, &constraints);
            prop_assert_eq!(got.clone(), expected);
        }

        #[test]
        fn cover_is_minimum(g in arb_graph(9)) {
            let cover = min_vertex_cover(&g).unwrap();
            prop_assert!(is_vertex_cover(&g, &cover));
            let n = g.n();
            let smaller = (0u32..1 << n).any(|mask| {
                mask.count_ones() < cover.len() as u32 && {
                    let set: Vec<_> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                    is_vertex_cover(&g, &set)
                }
            });
            prop_assert!(!smaller);
        }

        #[test]
        fn verdict_matches_oracle(g in arb_graph(10)) {
            for k in 1..=g.max_degree() + 1 {
                let inst = Instance::new(g.clone(), k).unwrap();
                let expected = brute_feasible(&inst, false).unwrap().is_some();
                let got = vc_fpt_feasible(&inst).unwrap();
                if let Some(s) = &got {
                    prop_assert!(is_feasible(&inst, s).is_feasible());
                }
                prop_assert_eq!(got.is_some(), expected);
            }
        }

        /// Swapping members within a class never changes the verdict.
        #[test]
        fn class_counts_determine_feasibility(g in arb_graph(9), k in 1..=3usize, c1_mask in any::<u32>(), pick in any::<u64>()) {
            let inst = Instance::new(g.clone(), k).unwrap();
            let cover = min_vertex_cover(&g).unwrap();
            let c1: Vec<_> = cover.iter().enumerate().filter(|&(i, _)| c1_mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            let Some(p) = build_cmmds(&inst, &cover, &c1).unwrap() else { return Ok(()); };
            let mut bits = pick;
            let mut counts = Vec::new();
            let mut alternative = Vec::new();
            for class in &p.classes {
                let pop = class.members.len();
                let x = (bits % (pop as u64 + 1)) as usize;
                bits /= pop as u64 + 1;
                counts.push(x);
                // Highest-id members instead of lowest.
                alternative.extend_from_slice(&class.members[pop - x..]);
            }
            let lowest = p.realize(&counts);
            let highest = Solution::from_unchecked(
                p.split.c1.iter().chain(&p.split.i1).copied().chain(alternative),
            );
            prop_assert_eq!(
                is_feasible(&inst, &lowest).is_feasible(),
                is_feasible(&inst, &highest).is_feasible()
            );
            prop_assert!(p.constraints.len() <= 2 * p.split.cover.len());
        }
    }
}

//! Solvers and reductions behind common traits, looked up by name.

use crate::error::{Error, Result};
use crate::graph::io::{parse_cnf, parse_colored_graph};
use crate::graph::{Instance, Solution};
use crate::oracle::{brute_feasible_with, BruteOptions, DEFAULT_FREE_BUDGET};
use crate::reductions::{
    brute_source_witness, mcc_path_decomposition, mcc_witness, mis_split_witness,
    pp1in3sat_witness, reduce_mcc, reduce_mis_split, reduce_pp1in3sat, reduce_sat3, sat3_witness,
    ReductionOutput, SourceProblem, SourceWitness,
};
use crate::twdp::{
    build_tree_decomposition, make_nice, validate_decomposition, DpOptions, DpTables,
    TreeDecomposition, DEFAULT_MAX_STATES,
};
use crate::vcfpt::{vc_fpt_feasible_with, VcOptions, DEFAULT_COVER_BUDGET};

/// Knobs shared by all solvers; each reads what it needs.
#[derive(Debug, Clone)]
pub struct SolveContext {
    pub jobs: usize,
    /// Used by `twdp` instead of the min-fill heuristic when present.
    pub decomposition: Option<TreeDecomposition>,
    pub brute_budget: usize,
    pub cover_budget: usize,
    pub max_states: u64,
}

impl Default for SolveContext {
    fn default() -> Self {
        SolveContext {
            jobs: 1,
            decomposition: None,
            brute_budget: DEFAULT_FREE_BUDGET,
            cover_budget: DEFAULT_COVER_BUDGET,
            max_states: DEFAULT_MAX_STATES,
        }
    }
}

pub trait MmdsSolver: Send + Sync {
    fn name(&self) -> &'static str;
    fn solve(&self, inst: &Instance, ctx: &SolveContext) -> Result<Option<Solution>>;
}

pub struct BruteSolver;

impl MmdsSolver for BruteSolver {
    fn name(&self) -> &'static str {
        "brute"
    }

    fn solve(&self, inst: &Instance, ctx: &SolveContext) -> Result<Option<Solution>> {
        let opts = BruteOptions {
            budget: ctx.brute_budget,
            jobs: ctx.jobs,
        };
        brute_feasible_with(inst, true, &opts)
    }
}

pub struct TwdpSolver;

impl MmdsSolver for TwdpSolver {
    fn name(&self) -> &'static str {
        "twdp"
    }

    fn solve(&self, inst: &Instance, ctx: &SolveContext) -> Result<Option<Solution>> {
        let td = match &ctx.decomposition {
            Some(td) => {
                let verdict = validate_decomposition(&inst.graph, td, false);
                if !verdict.is_valid() {
                    return Err(Error::InvalidDecomposition(verdict.to_string()));
                }
                td.clone()
            }
            None => build_tree_decomposition(&inst.graph),
        };
        let ntd = make_nice(&td)?;
        let opts = DpOptions {
            max_states: ctx.max_states,
            jobs: ctx.jobs,
        };
        Ok(DpTables::compute(inst, &ntd, &opts)?.witness())
    }
}

pub struct VcFptSolver;

impl MmdsSolver for VcFptSolver {
    fn name(&self) -> &'static str {
        "vcfpt"
    }

    fn solve(&self, inst: &Instance, ctx: &SolveContext) -> Result<Option<Solution>> {
        let opts = VcOptions {
            budget: ctx.cover_budget,
            jobs: ctx.jobs,
        };
        vc_fpt_feasible_with(inst, &opts)
    }
}

pub struct SolverRegistry {
    solvers: Vec<Box<dyn MmdsSolver>>,
}

impl Default for SolverRegistry {
    fn default() -> Self {
        let mut r = SolverRegistry::empty();
        r.register(Box::new(BruteSolver));
        r.register(Box::new(TwdpSolver));
        r.register(Box::new(VcFptSolver));
        r
    }
}

impl SolverRegistry {
    pub fn empty() -> Self {
        SolverRegistry {
            solvers: Vec::new(),
        }
    }

    /// Replaces any solver already registered under the same name.
    pub fn register(&mut self, solver: Box<dyn MmdsSolver>) {
        self.solvers.retain(|s| s.name() != solver.name());
        self.solvers.push(solver);
    }

    pub fn get(&self, name: &str) -> Result<&dyn MmdsSolver> {
        self.solvers
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| {
                Error::InvalidInput(format!(
                    "unknown solver '{name}' (available: {})",
                    self.names().join(", ")
                ))
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.solvers.iter().map(|s| s.name()).collect()
    }
}

#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub output: ReductionOutput,
    /// A decomposition certificate, when the construction provides one.
    pub decomposition: Option<TreeDecomposition>,
    /// Built from a source solution found by exhaustive search, when requested
    /// and the source instance is a yes-instance.
    pub witness: Option<Solution>,
}

pub trait Reduction: Send + Sync {
    fn name(&self) -> &'static str;
    fn generate(
        &self,
        input: &str,
        k: Option<usize>,
        want_witness: bool,
    ) -> Result<GeneratedInstance>;
}

fn no_k(name: &str, k: Option<usize>) -> Result<()> {
    match k {
        Some(k) => Err(Error::InvalidInput(format!(
            "{name} fixes k itself; got -k {k}"
        ))),
        None => Ok(()),
    }
}

fn assignment(w: Option<SourceWitness>) -> Option<Vec<bool>> {
    match w {
        Some(SourceWitness::Assignment(a)) => Some(a),
        _ => None,
    }
}

fn tuple(w: Option<SourceWitness>) -> Option<Vec<usize>> {
    match w {
        Some(SourceWitness::Tuple(t)) => Some(t),
        _ => None,
    }
}

pub struct Pp1in3SatReduction;

impl Reduction for Pp1in3SatReduction {
    fn name(&self) -> &'static str {
        "pp1in3sat"
    }

    fn generate(
        &self,
        input: &str,
        k: Option<usize>,
        want_witness: bool,
    ) -> Result<GeneratedInstance> {
        no_k(self.name(), k)?;
        let phi = parse_cnf(input)?;
        let output = reduce_pp1in3sat(&phi)?;
        let witness = if want_witness {
            assignment(brute_source_witness(SourceProblem::OneInThree(&phi))?)
                .map(|a| pp1in3sat_witness(&phi, &a))
                .transpose()?
        } else {
            None
        };
        Ok(GeneratedInstance {
            output,
            decomposition: None,
            witness,
        })
    }
}

pub struct MccReduction;

impl Reduction for MccReduction {
    fn name(&self) -> &'static str {
        "mcc"
    }

    fn generate(
        &self,
        input: &str,
        k: Option<usize>,
        want_witness: bool,
    ) -> Result<GeneratedInstance> {
        no_k(self.name(), k)?;
        let g = parse_colored_graph(input)?;
        let out = reduce_mcc(&g)?;
        let witness = if want_witness {
            tuple(brute_source_witness(SourceProblem::Mcc(&g))?)
                .map(|c| mcc_witness(&out, &c))
                .transpose()?
        } else {
            None
        };
        Ok(GeneratedInstance {
            decomposition: Some(mcc_path_decomposition(&out)),
            output: out.output,
            witness,
        })
    }
}

pub struct MisSplitReduction;

impl Reduction for MisSplitReduction {
    fn name(&self) -> &'static str {
        "mis-split"
    }

    fn generate(
        &self,
        input: &str,
        k: Option<usize>,
        want_witness: bool,
    ) -> Result<GeneratedInstance> {
        let g = parse_colored_graph(input)?;
        let output = reduce_mis_split(&g, k.unwrap_or(g.k()))?;
        let witness = if want_witness {
            tuple(brute_source_witness(SourceProblem::Mis(&g))?)
                .map(|t| mis_split_witness(&g, &t))
                .transpose()?
        } else {
            None
        };
        Ok(GeneratedInstance {
            output,
            decomposition: None,
            witness,
        })
    }
}

pub struct Sat3Reduction;

impl Reduction for Sat3Reduction {
    fn name(&self) -> &'static str {
        "sat3"
    }

    fn generate(
        &self,
        input: &str,
        k: Option<usize>,
        want_witness: bool,
    ) -> Result<GeneratedInstance> {
        let k = k.ok_or_else(|| Error::InvalidInput("sat3 needs -k".into()))?;
        let phi = parse_cnf(input)?;
        let output = reduce_sat3(&phi, k)?;
        let witness = if want_witness {
            assignment(brute_source_witness(SourceProblem::Sat(&phi))?)
                .map(|a| sat3_witness(&output, &a))
                .transpose()?
        } else {
            None
        };
        Ok(GeneratedInstance {
            output,
            decomposition: None,
            witness,
        })
    }
}

pub struct ReductionRegistry {
    reductions: Vec<Box<dyn Reduction>>,
}

impl Default for ReductionRegistry {
    fn default() -> Self {
        let mut r = ReductionRegistry::empty();
        r.register(Box::new(Pp1in3SatReduction));
        r.register(Box::new(MccReduction));
        r.register(Box::new(MisSplitReduction));
        r.register(Box::new(Sat3Reduction));
        r
    }
}

impl ReductionRegistry {
    pub fn empty() -> Self {
        ReductionRegistry {
            reductions: Vec::new(),
        }
    }

    pub fn register(&mut self, reduction: Box<dyn Reduction>) {
        self.reductions.retain(|r| r.name() != reduction.name());
        self.reductions.push(reduction);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Reduction> {
        self.reductions
            .iter()
            .find(|r| r.name() == name)
            .map(|r| r.as_ref())
            .ok_or_else(|| {
                Error::InvalidInput(format!(
                    "unknown reduction '{name}' (available: {})",
                    self.names().join(", ")
                ))
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.reductions.iter().map(|r| r.name()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::is_feasible;
    use crate::graph::Graph;

    #[test]
    fn solvers_agree_on_small_graphs() {
        let reg = SolverRegistry::default();
        assert_eq!(reg.names(), vec!["brute", "twdp", "vcfpt"]);
        let c4 = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        for k in 1..=3 {
            let inst = Instance::new(c4.clone(), k).unwrap();
            let verdicts: Vec<bool> = reg
                .names()
                .iter()
                .map(|name| {
                    let s = reg
                        .get(name)
                        .unwrap()
                        .solve(&inst, &SolveContext::default())
                        .unwrap();
                    if let Some(s) = &s {
                        assert!(is_feasible(&inst, s).is_feasible());
                    }
                    s.is_some()
                })
                .collect();
            assert!(verdicts.iter().all(|&v| v == (k >= 2)));
        }
        assert!(reg.get("ilp").is_err());
    }

    #[test]
    fn reductions_generate_witnesses() {
        let reg = ReductionRegistry::default();
        let gen = reg
            .get("pp1in3sat")
            .unwrap()
            .generate("p cnf 3 1\n1 2 3 0\n", None, true)
            .unwrap();
        let s = gen.witness.unwrap();
        assert!(is_feasible(&gen.output.instance, &s).is_feasible());

        let colored = "p mmds 4 1\ne 1 4\nn 1 1\nn 2 1\nn 3 2\nn 4 2\n";
        let gen = reg
            .get("mcc")
            .unwrap()
            .generate(colored, None, true)
            .unwrap();
        assert!(is_feasible(&gen.output.instance, &gen.witness.unwrap()).is_feasible());
        assert!(gen.decomposition.is_some());

        let gen = reg
            .get("mis-split")
            .unwrap()
            .generate(colored, None, true)
            .unwrap();
        assert!(is_feasible(&gen.output.instance, &gen.witness.unwrap()).is_feasible());

        assert!(reg
            .get("sat3")
            .unwrap()
            .generate("p cnf 1 1\n1 0\n", None, true)
            .is_err());
        let gen = reg
            .get("sat3")
            .unwrap()
            .generate("p cnf 1 1\n-1 0\n", Some(2), true)
            .unwrap();
        assert!(is_feasible(&gen.output.instance, &gen.witness.unwrap()).is_feasible());
    }
}

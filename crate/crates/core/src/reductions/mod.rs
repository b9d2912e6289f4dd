//! Instance generators for the four hardness constructions, plus exhaustive
//! deciders for their source problems.

mod mcc;
mod mis_split;
mod pp1in3sat;
mod sat3;

pub use mcc::{
    block_graph, gadget_graph, mcc_block_size, mcc_gadget_size, mcc_path_decomposition,
    mcc_total_size, mcc_witness, reduce_mcc, MccOutput,
};
pub use mis_split::{mis_split_witness, reduce_mis_split, split_partition};
pub use pp1in3sat::{pp1in3sat_witness, reduce_pp1in3sat};
pub use sat3::{reduce_sat3, sat3_witness};

use crate::error::{Error, Result};
use crate::graph::{CnfFormula, ColoredGraph, Graph, Instance, Vertex};

/// A generated instance with a role label for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub instance: Instance,
    /// `labels[v - 1]` describes vertex `v`.
    pub labels: Vec<String>,
    pub source_ref: String,
    /// A vertex cover certificate, when the construction provides one.
    pub vertex_cover: Option<Vec<Vertex>>,
}

impl ReductionOutput {
    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v - 1]
    }

    /// Vertices whose label starts with `prefix`.
    pub fn vertices_labelled(&self, prefix: &str) -> Vec<Vertex> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, l)| l.starts_with(prefix))
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// One `vertex<TAB>role` line per vertex.
    pub fn labels_text(&self) -> String {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| format!("{}\t{}\n", i + 1, l))
            .collect()
    }
}

/// Accumulates labelled vertices and edges; ids are handed out in order.
#[derive(Debug, Default)]
pub(crate) struct Builder {
    labels: Vec<String>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    pub(crate) fn vertex(&mut self, label: impl Into<String>) -> Vertex {
        self.labels.push(label.into());
        self.labels.len()
    }

    pub(crate) fn edge(&mut self, u: Vertex, v: Vertex) {
        self.edges.push((u, v));
    }

    pub(crate) fn len(&self) -> usize {
        self.labels.len()
    }

    pub(crate) fn finish(self) -> (Graph, Vec<String>) {
        let g = Graph::from_edges_dedup(self.labels.len(), self.edges)
            .expect("builder edges are in range and loop-free");
        (g, self.labels)
    }
}

pub const SOURCE_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, Copy)]
pub enum SourceProblem<'a> {
    /// Exactly one true literal per clause.
    OneInThree(&'a CnfFormula),
    Mcc(&'a ColoredGraph),
    Mis(&'a ColoredGraph),
    Sat(&'a CnfFormula),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceWitness {
    /// `assignment[i]` is the value of variable `i + 1`.
    Assignment(Vec<bool>),
    /// One vertex per color class, in class order.
    Tuple(Vec<Vertex>),
}

pub fn brute_source(problem: SourceProblem<'_>) -> Result<bool> {
    Ok(brute_source_witness(problem)?.is_some())
}

/// The first solution in enumeration order: assignments as a binary counter
/// with variable 1 as the low bit, tuples as an odometer with class 1 fastest.
pub fn brute_source_witness(problem: SourceProblem<'_>) -> Result<Option<SourceWitness>> {
    match problem {
        SourceProblem::OneInThree(f) => assignments(f, |f, a| f.one_in_three_by(a)),
        SourceProblem::Sat(f) => assignments(f, |f, a| f.satisfied_by(a)),
        SourceProblem::Mcc(g) => tuples(g, |g, a, b| g.has_edge(a, b)),
        SourceProblem::Mis(g) => tuples(g, |g, a, b| !g.has_edge(a, b)),
    }
}

fn check_budget(size: u64) -> Result<()> {
    if size > SOURCE_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "source problem candidates",
            size,
            limit: SOURCE_BUDGET,
        });
    }
    Ok(())
}

fn assignments(
    f: &CnfFormula,
    accept: impl Fn(&CnfFormula, &[bool]) -> bool,
) -> Result<Option<SourceWitness>> {
    let n = f.num_vars;
    if n >= 63 {
        return Err(Error::BudgetExceeded {
            what: "source problem candidates",
            size: u64::MAX,
            limit: SOURCE_BUDGET,
        });
    }
    check_budget(1 << n)?;
    let mut values = vec![false; n];
    for mask in 0u64..1 << n {
        for (i, x) in values.iter_mut().enumerate() {
            *x = mask >> i & 1 == 1;
        }
        if accept(f, &values) {
            return Ok(Some(SourceWitness::Assignment(values)));
        }
    }
    Ok(None)
}

fn tuples(
    g: &ColoredGraph,
    pair_ok: impl Fn(&Graph, Vertex, Vertex) -> bool,
) -> Result<Option<SourceWitness>> {
    let classes = g.classes();
    let size = classes
        .iter()
        .try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64))
        .unwrap_or(u64::MAX);
    check_budget(size)?;
    let mut idx = vec![0usize; classes.len()];
    loop {
        let pick: Vec<Vertex> = idx.iter().zip(&classes).map(|(&i, c)| c[i]).collect();
        let ok = (0..pick.len())
            .all(|a| (a + 1..pick.len()).all(|b| pair_ok(&g.graph, pick[a], pick[b])));
        if ok {
            return Ok(Some(SourceWitness::Tuple(pick)));
        }
        let mut p = 0;
        while p < idx.len() && idx[p] + 1 == classes[p].len() {
            idx[p] = 0;
            p += 1;
        }
        if p == idx.len() {
            return Ok(None);
        }
        idx[p] += 1;
    }
}

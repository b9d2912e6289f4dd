//! Positive 1-in-3 SAT to MMDS with `k = 1` on bipartite graphs.
//!
//! Vertices `x_1..x_n`, then the pendants `x̂_1..x̂_n`, then one vertex per clause.

use crate::error::{Error, Result};
use crate::graph::{CnfFormula, Instance, Solution};

use super::{Builder, ReductionOutput};

pub fn reduce_pp1in3sat(phi: &CnfFormula) -> Result<ReductionOutput> {
    for (j, clause) in phi.clauses.iter().enumerate() {
        if clause.len() != 3 {
            return Err(Error::InvalidInput(format!(
                "clause {} has {} literals, expected 3",
                j + 1,
                clause.len()
            )));
        }
        if let Some(&l) = clause.iter().find(|&&l| l < 0) {
            return Err(Error::InvalidInput(format!(
                "clause {} has negative literal {l}",
                j + 1
            )));
        }
        let mut vars = clause.clone();
        vars.sort_unstable();
        vars.dedup();
        if vars.len() != 3 {
            return Err(Error::InvalidInput(format!(
                "clause {} repeats a variable",
                j + 1
            )));
        }
    }
    let n = phi.num_vars;
    let mut b = Builder::default();
    let x: Vec<_> = (1..=n).map(|i| b.vertex(format!("var x_{i}"))).collect();
    for (i, &xi) in x.iter().enumerate() {
        let hat = b.vertex(format!("var x_{} pendant", i + 1));
        b.edge(xi, hat);
    }
    for (j, clause) in phi.clauses.iter().enumerate() {
        let c = b.vertex(format!("clause C_{}", j + 1));
        for &l in clause {
            b.edge(x[l as usize - 1], c);
        }
    }
    let (g, labels) = b.finish();
    Ok(ReductionOutput {
        instance: Instance::new(g, 1)?,
        labels,
        source_ref: format!(
            "positive 1-in-3 SAT with {} variables and {} clauses",
            n,
            phi.clauses.len()
        ),
        vertex_cover: None,
    })
}

/// True variables plus the pendants of false ones.
pub fn pp1in3sat_witness(phi: &CnfFormula, assignment: &[bool]) -> Result<Solution> {
    if assignment.len() != phi.num_vars {
        return Err(Error::InvalidInput(
            "assignment length differs from variable count".into(),
        ));
    }
    let n = phi.num_vars;
    Ok(Solution::from_unchecked((1..=n).map(|i| {
        if assignment[i - 1] {
            i
        } else {
            n + i
        }
    })))
}

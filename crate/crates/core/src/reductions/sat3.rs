//! 3-SAT to MMDS with a vertex cover of size `(n+1)(k+1)`.
//!
//! Per variable `i`: `v_x`, `v_x̄`, `a_i^1..a_i^{k+1}`, `b_i^1..b_i^{k-1}` and
//! `k + 1` pendants `d_{i,j}^t` under each `b_i^j`. Then the clause side: one
//! vertex per clause, `Y`, `u_1..u_k` and `k + 1` pendants `r_q^p` under each `u_q`.

use crate::error::{Error, Result};
use crate::graph::{CnfFormula, Instance, Solution, Vertex};

use super::{Builder, ReductionOutput};

struct VariableIds {
    pos: Vertex,
    neg: Vertex,
    b: Vec<Vertex>,
}

fn variable_size(k: usize) -> usize {
    2 + (k + 1) + (k - 1) + (k - 1) * (k + 1)
}

pub fn reduce_sat3(phi: &CnfFormula, k: usize) -> Result<ReductionOutput> {
    if k < 2 {
        return Err(Error::InvalidInput(format!(
            "k = {k}; the construction needs k >= 2"
        )));
    }
    if let Some(j) = phi.clauses.iter().position(|c| c.len() > 3) {
        return Err(Error::InvalidInput(format!(
            "clause {} has more than 3 literals",
            j + 1
        )));
    }
    let mut bld = Builder::default();
    let mut vars = Vec::with_capacity(phi.num_vars);
    for i in 1..=phi.num_vars {
        let pos = bld.vertex(format!("var x_{i} literal pos"));
        let neg = bld.vertex(format!("var x_{i} literal neg"));
        bld.edge(pos, neg);
        for j in 1..=k + 1 {
            let a = bld.vertex(format!("var x_{i} a^{j}"));
            bld.edge(a, pos);
            bld.edge(a, neg);
        }
        let mut b = Vec::with_capacity(k - 1);
        for j in 1..k {
            let bj = bld.vertex(format!("var x_{i} b^{j}"));
            bld.edge(bj, pos);
            bld.edge(bj, neg);
            b.push(bj);
        }
        for (j, &bj) in b.iter().enumerate() {
            for t in 1..=k + 1 {
                let d = bld.vertex(format!("var x_{i} d_{},{t}", j + 1));
                bld.edge(bj, d);
            }
        }
        vars.push(VariableIds { pos, neg, b });
    }
    let clause_vertices: Vec<Vertex> = (1..=phi.clauses.len())
        .map(|l| bld.vertex(format!("clause C_{l}")))
        .collect();
    let y = bld.vertex("Y");
    let u: Vec<Vertex> = (1..=k).map(|q| bld.vertex(format!("u_{q}"))).collect();
    for (q, &uq) in u.iter().enumerate() {
        bld.edge(y, uq);
        for p in 1..=k + 1 {
            let r = bld.vertex(format!("u_{} r^{p}", q + 1));
            bld.edge(uq, r);
        }
    }
    for (clause, &c) in phi.clauses.iter().zip(&clause_vertices) {
        bld.edge(c, y);
        for &l in clause {
            let var = &vars[l.unsigned_abs() as usize - 1];
            bld.edge(c, if l > 0 { var.pos } else { var.neg });
        }
    }
    debug_assert_eq!(
        bld.len(),
        phi.num_vars * variable_size(k) + phi.clauses.len() + 1 + k + k * (k + 1)
    );

    let mut cover: Vec<Vertex> = vars
        .iter()
        .flat_map(|v| [v.pos, v.neg].into_iter().chain(v.b.iter().copied()))
        .collect();
    cover.push(y);
    cover.extend_from_slice(&u);
    cover.sort_unstable();

    let (g, labels) = bld.finish();
    Ok(ReductionOutput {
        instance: Instance::new(g, k)?,
        labels,
        source_ref: format!(
            "CNF with {} variables and {} clauses, k = {k}",
            phi.num_vars,
            phi.clauses.len()
        ),
        vertex_cover: Some(cover),
    })
}

/// The chosen literal of every variable, every `b_i^j` and every `u_q`.
pub fn sat3_witness(out: &ReductionOutput, assignment: &[bool]) -> Result<Solution> {
    let k = out.instance.k;
    let n = assignment.len();
    let per_var = variable_size(k);
    if out.instance.graph.n() < n * per_var {
        return Err(Error::InvalidInput(
            "assignment longer than the variable count".into(),
        ));
    }
    let mut s = Vec::new();
    for (i, &value) in assignment.iter().enumerate() {
        let base = i * per_var;
        s.push(base + if value { 1 } else { 2 });
        // b_i^j follow the literal pair and the k + 1 vertices a_i^j.
        s.extend((1..k).map(|j| base + 2 + (k + 1) + j));
    }
    s.extend(
        out.vertices_labelled("u_")
            .into_iter()
            .filter(|&v| !out.label(v).contains(' ')),
    );
    Ok(Solution::from_unchecked(s))
}

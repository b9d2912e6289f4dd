//! Acceptance sweeps shared by the `bench` command and the acceptance tests.
//!
//! Every sweep is seeded and instance-parallel; results are gathered in
//! instance order so reports are identical across worker counts.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;

use crate::checker::{is_feasible, memberships};
use crate::error::Result;
use crate::graph::{Graph, Instance, Solution, Vertex};
use crate::interval::{greedy_dominating, interval_graph};
use crate::oracle::{brute_feasible, brute_feasible_with, brute_min_membership, BruteOptions};
use crate::random::{self, rng_for};
use crate::reductions::{
    brute_source, brute_source_witness, mcc_block_size, mcc_path_decomposition, mcc_total_size,
    mcc_witness, pp1in3sat_witness, reduce_mcc, reduce_mis_split, reduce_pp1in3sat, reduce_sat3,
    sat3_witness, split_partition, SourceProblem, SourceWitness,
};
use crate::twdp::{
    build_tree_decomposition, make_nice, validate_decomposition, DpOptions, DpTables,
    NiceTreeDecomposition, NodeKind,
};
use crate::vcfpt::{is_vertex_cover, vc_fpt_feasible};

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "oracle cross-validation"),
    (2, "dp table invariant"),
    (3, "dp state-space shape"),
    (4, "interval greedy"),
    (5, "1-in-3 reduction equivalence"),
    (6, "split reduction equivalence"),
    (7, "sat reduction and cover certificate"),
    (8, "clique reduction forward and structure"),
    (9, "forcing soundness"),
    (10, "monotonicity"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub seed: u64,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            seed: 2024,
            jobs: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub cases: usize,
    /// Empty on success; otherwise the first few failing cases.
    pub failures: Vec<String>,
    pub note: String,
    pub elapsed: Duration,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {} {:<40} {:>5} cases {:>8.2}s",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.title,
            self.cases,
            self.elapsed.as_secs_f64()
        )?;
        if !self.note.is_empty() {
            write!(f, "  {}", self.note)?;
        }
        for fail in &self.failures {
            write!(f, "\n    {fail}")?;
        }
        Ok(())
    }
}

const MAX_REPORTED: usize = 5;

type CaseResult = std::result::Result<(), String>;

fn report(id: u8, started: Instant, results: Vec<CaseResult>, note: String) -> CriterionReport {
    let cases = results.len();
    let failures: Vec<String> = results
        .into_iter()
        .enumerate()
        .filter_map(|(i, r)| r.err().map(|e| format!("case {i}: {e}")))
        .collect();
    let total = failures.len();
    let mut failures: Vec<String> = failures.into_iter().take(MAX_REPORTED).collect();
    if total > MAX_REPORTED {
        failures.push(format!("... {} more", total - MAX_REPORTED));
    }
    CriterionReport {
        id,
        title: CRITERIA[id as usize - 1].1,
        cases,
        failures,
        note,
        elapsed: started.elapsed(),
    }
}

fn sweep<F>(cfg: &SweepConfig, count: usize, case: F) -> Vec<CaseResult>
where
    F: Fn(u64) -> CaseResult + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .expect("thread pool");
    pool.install(|| (0..count as u64).into_par_iter().map(case).collect())
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

fn check_witness(inst: &Instance, s: &Option<Solution>, who: &str) -> CaseResult {
    match s {
        Some(s) if !is_feasible(inst, s).is_feasible() => Err(format!(
            "{who} witness rejected at k = {}: {}",
            inst.k,
            is_feasible(inst, s)
        )),
        _ => Ok(()),
    }
}

pub fn run(id: u8, cfg: &SweepConfig) -> CriterionReport {
    match id {
        1 => criterion_1(cfg),
        2 => criterion_2(cfg),
        3 => criterion_3(cfg),
        4 => criterion_4(cfg),
        5 => criterion_5(cfg),
        6 => criterion_6(cfg),
        7 => criterion_7(cfg),
        8 => criterion_8(cfg),
        9 => criterion_9(cfg),
        10 => criterion_10(cfg),
        _ => panic!("no criterion {id}"),
    }
}

pub fn run_all(cfg: &SweepConfig) -> Vec<CriterionReport> {
    CRITERIA.iter().map(|&(id, _)| run(id, cfg)).collect()
}

/// The criterion 1 corpus: 80 + 80 Erdős–Rényi graphs at p = 0.2 and 0.4,
/// 40 random trees and 40 cycles, all with at most 14 vertices.
pub fn cross_validation_corpus(seed: u64) -> Vec<(String, Graph)> {
    (0..240u64)
        .map(|i| {
            let mut rng = rng_for(seed, i);
            match i {
                0..=79 => {
                    let n = rng.gen_range(2..=14);
                    (
                        format!("gnp({n}, 0.2)"),
                        random::erdos_renyi(n, 0.2, &mut rng),
                    )
                }
                80..=159 => {
                    let n = rng.gen_range(2..=14);
                    (
                        format!("gnp({n}, 0.4)"),
                        random::erdos_renyi(n, 0.4, &mut rng),
                    )
                }
                160..=199 => {
                    let n = rng.gen_range(1..=14);
                    (format!("tree({n})"), random::random_tree(n, &mut rng))
                }
                _ => {
                    let n = 3 + (i as usize - 200) % 12;
                    (format!("cycle({n})"), random::cycle(n))
                }
            }
        })
        .collect()
}

fn dp_solve(inst: &Instance, ntd: &NiceTreeDecomposition) -> Result<Option<Solution>> {
    Ok(DpTables::compute(inst, ntd, &DpOptions::default())?.witness())
}

fn criterion_1(cfg: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let corpus = cross_validation_corpus(cfg.seed);
    let runs = AtomicUsize::new(0);
    let yes = AtomicUsize::new(0);
    let results = sweep(cfg, corpus.len(), |i| {
        let (name, g) = &corpus[i as usize];
        let ntd = make_nice(&build_tree_decomposition(g)).map_err(err)?;
        for k in 1..=g.max_degree() + 1 {
            let inst = Instance::new(g.clone(), k).map_err(err)?;
            let brute = brute_feasible(&inst, true).map_err(err)?;
            let dp = dp_solve(&inst, &ntd).map_err(err)?;
            let vc = vc_fpt_feasible(&inst).map_err(err)?;
            runs.fetch_add(1, Ordering::Relaxed);
            yes.fetch_add(usize::from(brute.is_some()), Ordering::Relaxed);
            let verdicts = [brute.is_some(), dp.is_some(), vc.is_some()];
            if verdicts.iter().any(|&v| v != verdicts[0]) {
                return Err(format!(
                    "{name} k = {k}: brute {} dp {} vcfpt {}",
                    verdicts[0], verdicts[1], verdicts[2]
                ));
            }
            check_witness(&inst, &brute, "brute")?;
            check_witness(&inst, &dp, "dp")?;
            check_witness(&inst, &vc, "vcfpt")?;
        }
        Ok(())
    });
    let note = format!(
        "{} (graph, k) pairs, {} feasible",
        runs.into_inner(),
        yes.into_inner()
    );
    report(1, started, results, note)
}

/// All valid `(c, d)` codes at every node, from exhaustive search over subsets
/// of the vertices seen in the node's subtree.
pub fn inducing_states(
    inst: &Instance,
    ntd: &NiceTreeDecomposition,
    tables: &DpTables,
) -> Vec<BTreeSet<u64>> {
    let g = &inst.graph;
    let k = inst.k;
    let mut seen: Vec<BTreeSet<Vertex>> = Vec::with_capacity(ntd.len());
    let mut out = Vec::with_capacity(ntd.len());
    for i in 0..ntd.len() {
        let node = ntd.node(i);
        let mut sub: BTreeSet<Vertex> = node.bag.iter().copied().collect();
        for &c in &node.children {
            sub.extend(seen[c].iter().copied());
        }
        let sub_vec: Vec<Vertex> = sub.iter().copied().collect();
        let forgotten: Vec<Vertex> = sub_vec
            .iter()
            .copied()
            .filter(|v| node.bag.binary_search(v).is_err())
            .collect();
        let mut states = BTreeSet::new();
        let mut in_s = vec![false; g.n() + 1];
        for mask in 0u64..1 << sub_vec.len() {
            for (b, &v) in sub_vec.iter().enumerate() {
                in_s[v] = mask >> b & 1 == 1;
            }
            let count = |v: Vertex| {
                usize::from(in_s[v]) + g.neighbors(v).iter().filter(|&&w| in_s[w]).count()
            };
            if forgotten.iter().any(|&w| !(1..=k).contains(&count(w))) {
                continue;
            }
            let d: Vec<usize> = node.bag.iter().map(|&u| count(u)).collect();
            if d.iter().any(|&x| x > k) {
                continue;
            }
            let state = crate::twdp::DpState {
                c: node.bag.iter().map(|&u| u8::from(in_s[u])).collect(),
                d: d.iter().map(|&x| x as u8).collect(),
            };
            states.insert(tables.encode(&state));
        }
        out.push(states);
        seen.push(sub);
    }
    out
}

fn small_dp_corpus(seed: u64) -> Vec<(String, Instance)> {
    (0..24u64)
        .map(|i| {
            let mut rng = rng_for(seed ^ 0xD0, i);
            let n = rng.gen_range(3..=10);
            let p = [0.2, 0.35, 0.5][i as usize % 3];
            let g = random::erdos_renyi(n, p, &mut rng);
            let k = rng.gen_range(1..=g.max_degree().clamp(1, 3) + 1);
            (
                format!("gnp({n}, {p}) k = {k}"),
                Instance::new(g, k).expect("k >= 1"),
            )
        })
        .collect()
}

fn criterion_2(cfg: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let corpus = small_dp_corpus(cfg.seed);
    let nodes = AtomicUsize::new(0);
    let results = sweep(cfg, corpus.len(), |i| {
        let (name, inst) = &corpus[i as usize];
        let ntd = make_nice(&build_tree_decomposition(&inst.graph)).map_err(err)?;
        let tables = DpTables::compute(inst, &ntd, &DpOptions::default()).map_err(err)?;
        let expected = inducing_states(inst, &ntd, &tables);
        for (node, want) in expected.iter().enumerate() {
            nodes.fetch_add(1, Ordering::Relaxed);
            let got: BTreeSet<u64> = tables.valid_states(node).iter().copied().collect();
            if &got != want {
                return Err(format!(
                    "{name}: node {node} has {} states, exhaustive search finds {}",
                    got.len(),
                    want.len()
                ));
            }
            // The pull recurrence must agree with the table on every index.
            if let Some(code) =
                (0..tables.state_space(node)).find(|&c| tables.entry(node, c) != want.contains(&c))
            {
                return Err(format!(
                    "{name}: node {node} recurrence disagrees at code {code}"
                ));
            }
        }
        let brute = brute_feasible(inst, false).map_err(err)?.is_some();
        if brute != tables.root_entry() {
            return Err(format!(
                "{name}: root entry {} but brute {brute}",
                tables.root_entry()
            ));
        }
        Ok(())
    });
    let note = format!("{} nodes checked", nodes.into_inner());
    report(2, started, results, note)
}

fn criterion_3(cfg: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let corpus = small_dp_corpus(cfg.seed);
    let nodes = AtomicUsize::new(0);
    let results = sweep(cfg, corpus.len(), |i| {
        let (name, inst) = &corpus[i as usize];
        let k = inst.k as u64;
        let ntd = make_nice(&build_tree_decomposition(&inst.graph)).map_err(err)?;
        let tables = DpTables::compute(inst, &ntd, &DpOptions::default()).map_err(err)?;
        for (idx, node) in ntd.nodes().iter().enumerate() {
            nodes.fetch_add(1, Ordering::Relaxed);
            let len = node.bag.len();
            let closed_form = (2 * (k + 1)).pow(len as u32);
            // Count distinct states reachable by decoding every index.
            let measured: BTreeSet<(Vec<u8>, Vec<u8>)> = (0..tables.state_space(idx))
                .map(|c| tables.decode(idx, c))
                .filter(|s| s.c.iter().all(|&c| c <= 1) && s.d.iter().all(|&d| u64::from(d) <= k))
                .map(|s| (s.c, s.d))
                .collect();
            if measured.len() as u64 != closed_form {
                return Err(format!(
                    "{name}: node {idx} with bag size {len} indexes {} states, expected {closed_form}",
                    measured.len()
                ));
            }
            if node.kind == NodeKind::Join {
                let cap = (k + 1).pow(len as u32);
                if let Some(c) = (0..closed_form).find(|&c| tables.join_split_count(idx, c) > cap) {
                    return Err(format!(
                        "{name}: join node {idx} code {c} enumerates more than {cap} splits"
                    ));
                }
            }
        }
        Ok(())
    });
    let note = format!("{} nodes measured", nodes.into_inner());
    report(3, started, results, note)
}

fn criterion_4(cfg: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let results = sweep(cfg, 500, |i| {
        let mut rng = rng_for(cfg.seed ^ 0x14, i);
        let n = rng.gen_range(1..=200);
        let span = rng.gen_range(1..=4 * n as i64);
        let max_len = rng.gen_range(1..=span.max(2));
        let iv = random::random_intervals(n, span, max_len, &mut rng);
        let s = greedy_dominating(&iv).map_err(err)?;
        let g = interval_graph(&iv);
        let m = memberships(&g, &s);
        if let Some(v) = (1..=n).find(|&v| m[v] == 0) {
            return Err(format!("n = {n}: interval {v} not dominated"));
        }
        let worst = m.iter().copied().max().unwrap_or(0);
        if worst > 3 {
            return Err(format!("n = {n}: max membership {worst}"));
        }
        Ok(())
    });
    report(4, started, results, String::new())
}

fn criterion_5(cfg: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let results = sweep(cfg, 100, |i| {
        let mut rng = rng_for(cfg.seed ^ 0x15, i);
        let n = rng.gen_range(3..=8);
        let m = rng.gen_range(1..=5);
        let phi = random::random_positive_3cnf(n, m, &mut rng);
        let out = reduce_pp1in3sat(&phi).map_err(err)?;
        if out.instance.graph.n() != 2 * n + m {
            return Err(format!(
                "census: {} vertices for n = {n}, m = {m}",
                out.instance.graph.n()
            ));
        }
        let source = brute_source_witness(SourceProblem::OneInThree(&phi)).map_err(err)?;
        let target = brute_feasible(&out.instance, true).map_err(err)?;
        if source.is_some() != target.is_some() {
            return Err(format!(
                "n = {n}, m = {m}: 1-in-3 {} but MMDS {}",
                source.is_some(),
                target.is_some()
            ));
        }
        check_witness(&out.instance, &target, "brute")?;
        if let Some(SourceWitness::Assignment(a)) = source {
            let s = pp1in3sat_witness(&phi, &a).map_err(err)?;
            check_witness(&out.instance, &Some(s), "constructed")?;
        }
        Ok(())
    });
    report(5, started, results, String::new())
}

fn criterion_6(cfg: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let cross_checked = AtomicUsize::new(0);
    let results = sweep(cfg, 100, |i| {
        let mut rng = rng_for(cfg.seed ^ 0x16, i);
        let total = rng.gen_range(2..=8);
        let a = rng.gen_range(1..total);
        let p = rng.gen_range(0.1..0.9);
        let g = random::random_colored(&[a, total - a], p, &mut rng);
        let out = reduce_mis_split(&g, 2).map_err(err)?;
        let h = &out.instance.graph;
        let census = total + 1 + 2 * 3 + g.graph.m();
        if h.n() != census {
            return Err(format!("census: {} vertices, expected {census}", h.n()));
        }
        let (clique, rest) = split_partition(total, h);
        let is_clique = clique
            .iter()
            .all(|&u| clique.iter().all(|&v| u == v || h.has_edge(u, v)));
        let is_independent = rest
            .iter()
            .all(|&u| rest.iter().all(|&v| !h.has_edge(u, v)));
        if !is_clique || !is_independent {
            return Err("output is not split along the emitted partition".into());
        }
        let mis = brute_source(SourceProblem::Mis(&g)).map_err(err)?;
        let mmds = vc_fpt_feasible(&out.instance).map_err(err)?;
        check_witness(&out.instance, &mmds, "vcfpt")?;
        match brute_feasible(&out.instance, true) {
            Ok(b) => {
                cross_checked.fetch_add(1, Ordering::Relaxed);
                if b.is_some() != mmds.is_some() {
                    return Err(format!(
                        "vcfpt {} but brute {}",
                        mmds.is_some(),
                        b.is_some()
                    ));
                }
            }
            Err(crate::Error::BudgetExceeded { .. }) => {}
            Err(e) => return Err(err(e)),
        }
        if mis != mmds.is_some() {
            return Err(format!(
                "|V| = {total}: MIS {mis} but MMDS {}",
                mmds.is_some()
            ));
        }
        Ok(())
    });
    let note = format!(
        "{} also confirmed by brute force",
        cross_checked.into_inner()
    );
    report(6, started, results, note)
}

fn criterion_7(cfg: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let k = 2;
    let results = sweep(cfg, 100, |i| {
        let mut rng = rng_for(cfg.seed ^ 0x17, i);
        let n = rng.gen_range(1..=2);
        let m = rng.gen_range(1..=2);
        let phi = random::random_cnf(n, m, &mut rng);
        let out = reduce_sat3(&phi, k).map_err(err)?;
        let census = n * (2 + (k + 1) + (k - 1) + (k - 1) * (k + 1)) + m + 1 + k + k * (k + 1);
        if out.instance.graph.n() != census {
            return Err(format!(
                "census: {} vertices, expected {census}",
                out.instance.graph.n()
            ));
        }
        let cover = out.vertex_cover.as_deref().unwrap_or_default();
        if cover.len() != (n + 1) * (k + 1) {
            return Err(format!("certificate has {} vertices", cover.len()));
        }
        if !is_vertex_cover(&out.instance.graph, cover) {
            return Err("certificate misses an edge".into());
        }
        let source = brute_source_witness(SourceProblem::Sat(&phi)).map_err(err)?;
        let target = brute_feasible(&out.instance, true).map_err(err)?;
        if source.is_some() != target.is_some() {
            return Err(format!(
                "{:?}: SAT {} but MMDS {}",
                phi.clauses,
                source.is_some(),
                target.is_some()
            ));
        }
        check_witness(&out.instance, &target, "brute")?;
        if let Some(SourceWitness::Assignment(a)) = source {
            check_witness(
                &out.instance,
                &Some(sat3_witness(&out, &a).map_err(err)?),
                "constructed",
            )?;
        }
        Ok(())
    });
    report(7, started, results, String::new())
}

fn criterion_8(cfg: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let n = 2;
    let results = sweep(cfg, 12, |i| {
        let k = if i < 6 { 2 } else { 3 };
        let mut rng = rng_for(cfg.seed ^ 0x18, i);
        let p = [0.0, 0.3, 0.6][i as usize % 3];
        let (g, clique) = random::planted_clique(k, n, p, &mut rng);
        let out = reduce_mcc(&g).map_err(err)?;
        let h = &out.output.instance.graph;
        if out.output.instance.k != n + 1 {
            return Err(format!(
                "k' = {}, expected {}",
                out.output.instance.k,
                n + 1
            ));
        }
        let pairs = out.pair_edge_counts();
        if h.n() != mcc_total_size(n, k, &pairs) {
            return Err(format!(
                "census: {} vertices, formula {}",
                h.n(),
                mcc_total_size(n, k, &pairs)
            ));
        }
        let gadgets = out
            .output
            .labels
            .iter()
            .filter(|l| l.ends_with("/h1"))
            .count();
        if gadgets != k * n + pairs.iter().sum::<usize>() {
            return Err(format!("{gadgets} gadgets"));
        }
        for c in 1..=k {
            let block = out.output.vertices_labelled(&format!("H_{c}/")).len();
            if block != mcc_block_size(n, n) {
                return Err(format!("vertex block {c} has {block} vertices"));
            }
        }
        let mut pair = 0;
        for a in 1..=k {
            for b in a + 1..=k {
                let block = out.output.vertices_labelled(&format!("H_{a},{b}/")).len();
                if block != mcc_block_size(n, pairs[pair]) {
                    return Err(format!("edge block {a},{b} has {block} vertices"));
                }
                pair += 1;
            }
        }
        let s = mcc_witness(&out, &clique).map_err(err)?;
        check_witness(&out.output.instance, &Some(s.clone()), "constructed")?;
        let m = memberships(h, &s);
        if let Some(&c) = out.connector_vertices().iter().find(|&&c| m[c] != n + 1) {
            return Err(format!(
                "connector {} has membership {}",
                out.output.label(c),
                m[c]
            ));
        }
        let pd = mcc_path_decomposition(&out);
        let bound = 4 * k * (k - 1) / 2 + 5;
        match validate_decomposition(h, &pd, true) {
            v if !v.is_valid() => return Err(format!("path decomposition: {v}")),
            _ if pd.width() > bound => return Err(format!("width {} > {bound}", pd.width())),
            _ => {}
        }
        Ok(())
    });
    report(8, started, results, String::new())
}

fn criterion_9(cfg: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let naive = BruteOptions {
        budget: 12,
        jobs: 1,
    };
    let results = sweep(cfg, 200, |i| {
        let mut rng = rng_for(cfg.seed ^ 0x19, i);
        let n = rng.gen_range(1..=12);
        let g = match i % 4 {
            0 => random::random_tree(n, &mut rng),
            _ => random::erdos_renyi(n, rng.gen_range(0.05..0.6), &mut rng),
        };
        for k in 1..=g.max_degree() + 1 {
            let inst = Instance::new(g.clone(), k).map_err(err)?;
            let forced = brute_feasible(&inst, true).map_err(err)?;
            let plain = brute_feasible_with(&inst, false, &naive).map_err(err)?;
            if forced.is_some() != plain.is_some() {
                return Err(format!(
                    "n = {n}, k = {k}: forcing {} naive {}",
                    forced.is_some(),
                    plain.is_some()
                ));
            }
            check_witness(&inst, &forced, "forcing")?;
            check_witness(&inst, &plain, "naive")?;
        }
        Ok(())
    });
    report(9, started, results, String::new())
}

fn criterion_10(cfg: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let corpus = cross_validation_corpus(cfg.seed);
    let results = sweep(cfg, corpus.len(), |i| {
        let (name, g) = &corpus[i as usize];
        let delta = g.max_degree();
        let feasible: Vec<bool> = (1..=delta + 1)
            .map(|k| {
                let inst = Instance::new(g.clone(), k).map_err(err)?;
                Ok(brute_feasible(&inst, true).map_err(err)?.is_some())
            })
            .collect::<std::result::Result<_, String>>()?;
        if let Some(k) = feasible.windows(2).position(|w| w[0] && !w[1]) {
            return Err(format!(
                "{name}: feasible at k = {} but not at {}",
                k + 1,
                k + 2
            ));
        }
        let (kstar, s) = brute_min_membership(g).map_err(err)?;
        if kstar > delta + 1 {
            return Err(format!("{name}: k* = {kstar} exceeds {}", delta + 1));
        }
        let first = feasible.iter().position(|&f| f).map(|k| k + 1);
        if first != Some(kstar) {
            return Err(format!(
                "{name}: k* = {kstar} but first feasible k is {first:?}"
            ));
        }
        check_witness(
            &Instance::new(g.clone(), kstar).map_err(err)?,
            &Some(s),
            "minimum",
        )?;
        Ok(())
    });
    report(10, started, results, String::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_respects_bounds() {
        let corpus = cross_validation_corpus(1);
        assert!(corpus.len() >= 200);
        assert!(corpus.iter().all(|(_, g)| g.n() <= 14));
    }

    #[test]
    fn inducing_states_match_on_a_path() {
        let g = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        let inst = Instance::new(g, 1).unwrap();
        let ntd = make_nice(&build_tree_decomposition(&inst.graph)).unwrap();
        let tables = DpTables::compute(&inst, &ntd, &DpOptions::default()).unwrap();
        let want = inducing_states(&inst, &ntd, &tables);
        for (node, states) in want.iter().enumerate() {
            let got: BTreeSet<u64> = tables.valid_states(node).iter().copied().collect();
            assert_eq!(&got, states);
        }
    }
}

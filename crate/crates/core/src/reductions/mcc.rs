//! Multi-colored clique to MMDS with bounded pathwidth.
//!
//! Every source vertex and every edge between two classes becomes a type-I
//! gadget: heads `h1, h2`, sets `A = a_1..a_n` and `D = d_1..d_n`, and three
//! families of type-D gadgets (an edge plus `n + 2` shared independent
//! neighbors) on the pairs `(a_i, d_i)`, `(a_i, h1)` and `(d_i, h2)`. Gadgets are
//! grouped into blocks with extra vertices `f, f', c_p, b_q`, and blocks are
//! tied together by four connectors per pair of classes.

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Graph, Instance, Solution, Vertex};
use crate::twdp::TreeDecomposition;

use super::{Builder, ReductionOutput};

pub fn mcc_gadget_size(n: usize) -> usize {
    3 * n * n + 8 * n + 2
}

pub fn mcc_block_size(n: usize, gadgets: usize) -> usize {
    gadgets * mcc_gadget_size(n) + (n + 1) * (n + 3) + 2
}

/// `|V(H)|` for `k` classes of size `n` with the given edge counts per class pair.
pub fn mcc_total_size(n: usize, k: usize, pair_edges: &[usize]) -> usize {
    k * mcc_block_size(n, n)
        + pair_edges
            .iter()
            .map(|&e| mcc_block_size(n, e))
            .sum::<usize>()
        + 4 * k * (k - 1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Gadget {
    h1: Vertex,
    h2: Vertex,
    a: Vec<Vertex>,
    d: Vec<Vertex>,
    ind_ad: Vec<Vec<Vertex>>,
    ind_ah: Vec<Vec<Vertex>>,
    ind_dh: Vec<Vec<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Block {
    gadgets: Vec<Gadget>,
    f: Vertex,
    f2: Vertex,
    c: Vec<Vertex>,
    b: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Connectors {
    s_i: Vertex,
    r_i: Vertex,
    s_j: Vertex,
    r_j: Vertex,
}

/// Edge `u_{i,x} u_{j,y}` of the source graph with `i < j`; `x, y` are 1-based
/// positions inside their classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct PairEdge {
    u: Vertex,
    v: Vertex,
    x: usize,
    y: usize,
}

#[derive(Debug, Clone)]
pub struct MccOutput {
    pub output: ReductionOutput,
    source: ColoredGraph,
    n: usize,
    vertex_blocks: Vec<Block>,
    /// `(i, j, edges, block)` with `i < j`, in lexicographic pair order.
    edge_blocks: Vec<(usize, usize, Vec<PairEdge>, Block)>,
    connectors: Vec<Connectors>,
}

impl MccOutput {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.source.k()
    }

    pub fn connector_vertices(&self) -> Vec<Vertex> {
        self.connectors
            .iter()
            .flat_map(|c| [c.s_i, c.r_i, c.s_j, c.r_j])
            .collect()
    }

    /// Edge counts per class pair, in block order.
    pub fn pair_edge_counts(&self) -> Vec<usize> {
        self.edge_blocks
            .iter()
            .map(|(_, _, e, _)| e.len())
            .collect()
    }
}

fn build_gadget(bld: &mut Builder, n: usize, prefix: &str) -> Gadget {
    let h1 = bld.vertex(format!("{prefix}/h1"));
    let h2 = bld.vertex(format!("{prefix}/h2"));
    bld.edge(h1, h2);
    let a: Vec<Vertex> = (1..=n)
        .map(|t| bld.vertex(format!("{prefix}/a_{t}")))
        .collect();
    let d: Vec<Vertex> = (1..=n)
        .map(|t| bld.vertex(format!("{prefix}/d_{t}")))
        .collect();
    for t in 0..n {
        bld.edge(a[t], h2);
        bld.edge(d[t], h1);
    }
    let family = |bld: &mut Builder, heads: &dyn Fn(usize) -> (Vertex, Vertex), name: &str| {
        (0..n)
            .map(|t| {
                let (x, y) = heads(t);
                bld.edge(x, y);
                (1..=n + 2)
                    .map(|e| {
                        let z = bld.vertex(format!("{prefix}/{name}_{}/{e}", t + 1));
                        bld.edge(x, z);
                        bld.edge(y, z);
                        z
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    };
    let ind_ad = family(bld, &|t| (a[t], d[t]), "Dad");
    let ind_ah = family(bld, &|t| (a[t], h1), "Dah");
    let ind_dh = family(bld, &|t| (d[t], h2), "Ddh");
    Gadget {
        h1,
        h2,
        a,
        d,
        ind_ad,
        ind_ah,
        ind_dh,
    }
}

fn build_block(bld: &mut Builder, n: usize, names: &[String], prefix: &str) -> Block {
    let gadgets: Vec<Gadget> = names
        .iter()
        .map(|name| build_gadget(bld, n, &format!("{prefix}/{name}")))
        .collect();
    let f = bld.vertex(format!("{prefix}/f"));
    let f2 = bld.vertex(format!("{prefix}/f'"));
    bld.edge(f, f2);
    for gadget in &gadgets {
        for &a in &gadget.a {
            bld.edge(a, f);
        }
    }
    let c: Vec<Vertex> = (1..=n + 1)
        .map(|p| bld.vertex(format!("{prefix}/c_{p}")))
        .collect();
    for &cp in &c {
        bld.edge(f2, cp);
    }
    let b: Vec<Vertex> = (1..=(n + 1) * (n + 2))
        .map(|q| bld.vertex(format!("{prefix}/b_{q}")))
        .collect();
    for (q, &bq) in b.iter().enumerate() {
        bld.edge(c[q / (n + 2)], bq);
    }
    Block {
        gadgets,
        f,
        f2,
        c,
        b,
    }
}

pub fn reduce_mcc(g: &ColoredGraph) -> Result<MccOutput> {
    let classes = g.classes();
    let k = g.k();
    let n = classes[0].len();
    if classes.iter().any(|c| c.len() != n) {
        return Err(Error::InvalidInput(
            "color classes must all have the same size".into(),
        ));
    }
    if k < 2 {
        return Err(Error::InvalidInput(
            "need at least two color classes".into(),
        ));
    }
    let position = |v: Vertex| -> usize {
        classes[g.color(v) - 1]
            .binary_search(&v)
            .expect("vertex in its class")
            + 1
    };

    let mut bld = Builder::default();
    let vertex_names: Vec<String> = (1..=n).map(|l| format!("I_{l}")).collect();
    let vertex_blocks: Vec<Block> = (1..=k)
        .map(|i| build_block(&mut bld, n, &vertex_names, &format!("H_{i}")))
        .collect();

    let mut edge_blocks = Vec::new();
    for i in 1..=k {
        for j in i + 1..=k {
            let edges: Vec<PairEdge> = g
                .graph
                .edges()
                .filter_map(|(a, b)| {
                    let (u, v) = if g.color(a) <= g.color(b) {
                        (a, b)
                    } else {
                        (b, a)
                    };
                    (g.color(u) == i && g.color(v) == j).then(|| PairEdge {
                        u,
                        v,
                        x: position(u),
                        y: position(v),
                    })
                })
                .collect();
            let names: Vec<String> = edges.iter().map(|e| format!("I_{}-{}", e.u, e.v)).collect();
            let block = build_block(&mut bld, n, &names, &format!("H_{i},{j}"));
            edge_blocks.push((i, j, edges, block));
        }
    }

    let mut connectors = Vec::new();
    for (i, j, edges, block) in &edge_blocks {
        let con = Connectors {
            s_i: bld.vertex(format!("connector s^{i}_{{{i},{j}}}")),
            r_i: bld.vertex(format!("connector r^{i}_{{{i},{j}}}")),
            s_j: bld.vertex(format!("connector s^{j}_{{{i},{j}}}")),
            r_j: bld.vertex(format!("connector r^{j}_{{{i},{j}}}")),
        };
        for (side, s, r) in [(*i, con.s_i, con.r_i), (*j, con.s_j, con.r_j)] {
            for (l, gadget) in vertex_blocks[side - 1].gadgets.iter().enumerate() {
                let l = l + 1;
                for (t, &a) in gadget.a.iter().enumerate() {
                    let t = t + 1;
                    if t <= l {
                        bld.edge(a, s);
                    }
                    if t >= l {
                        bld.edge(a, r);
                    }
                }
            }
        }
        for (e, gadget) in edges.iter().zip(&block.gadgets) {
            for (t, &a) in gadget.a.iter().enumerate() {
                let t = t + 1;
                if t <= e.x {
                    bld.edge(a, con.r_i);
                }
                if t >= e.x {
                    bld.edge(a, con.s_i);
                }
                if t <= e.y {
                    bld.edge(a, con.r_j);
                }
                if t >= e.y {
                    bld.edge(a, con.s_j);
                }
            }
        }
        connectors.push(con);
    }

    let (h, labels) = bld.finish();
    let output = ReductionOutput {
        instance: Instance::new(h, n + 1)?,
        labels,
        source_ref: format!(
            "multi-colored clique with k = {k}, class size {n}, {} edges",
            g.graph.m()
        ),
        vertex_cover: None,
    };
    Ok(MccOutput {
        output,
        source: g.clone(),
        n,
        vertex_blocks,
        edge_blocks,
        connectors,
    })
}

fn selected_gadget(g: &Gadget) -> impl Iterator<Item = Vertex> + '_ {
    g.a.iter().copied().chain([g.h2])
}

fn unselected_gadget(g: &Gadget) -> impl Iterator<Item = Vertex> + '_ {
    g.d.iter().copied().chain([g.h1])
}

/// `clique[i]` is the chosen vertex of class `i + 1`. Selected gadgets
/// contribute `A ∪ {h2}`, all others `D ∪ {h1}`, and every block its `c_p`.
pub fn mcc_witness(out: &MccOutput, clique: &[Vertex]) -> Result<Solution> {
    let g = &out.source;
    if clique.len() != g.k() {
        return Err(Error::InvalidInput(
            "need one vertex per color class".into(),
        ));
    }
    for (i, &v) in clique.iter().enumerate() {
        if v == 0 || v > g.graph.n() || g.color(v) != i + 1 {
            return Err(Error::InvalidInput(format!(
                "vertex {v} is not in class {}",
                i + 1
            )));
        }
    }
    for (a, &u) in clique.iter().enumerate() {
        if let Some(&v) = clique[a + 1..].iter().find(|&&v| !g.graph.has_edge(u, v)) {
            return Err(Error::InvalidInput(format!("{u} and {v} are not adjacent")));
        }
    }
    let classes = g.classes();
    let mut s = Vec::new();
    for (i, block) in out.vertex_blocks.iter().enumerate() {
        let chosen = classes[i]
            .binary_search(&clique[i])
            .expect("vertex in class");
        for (l, gadget) in block.gadgets.iter().enumerate() {
            if l == chosen {
                s.extend(selected_gadget(gadget));
            } else {
                s.extend(unselected_gadget(gadget));
            }
        }
        s.extend_from_slice(&block.c);
    }
    for (i, j, edges, block) in &out.edge_blocks {
        let (u, v) = (clique[i - 1], clique[j - 1]);
        for (e, gadget) in edges.iter().zip(&block.gadgets) {
            if e.u == u && e.v == v {
                s.extend(selected_gadget(gadget));
            } else {
                s.extend(unselected_gadget(gadget));
            }
        }
        s.extend_from_slice(&block.c);
    }
    Ok(Solution::from_unchecked(s))
}

fn gadget_bags(g: &Gadget) -> Vec<Vec<Vertex>> {
    let mut bags = Vec::new();
    for t in 0..g.a.len() {
        for &e in &g.ind_ah[t] {
            bags.push(vec![g.a[t], e]);
        }
        for &e in &g.ind_ad[t] {
            bags.push(vec![g.a[t], g.d[t], e]);
        }
        for &e in &g.ind_dh[t] {
            bags.push(vec![g.d[t], e]);
        }
    }
    for bag in &mut bags {
        bag.extend([g.h1, g.h2]);
    }
    bags
}

fn block_bags(b: &Block) -> Vec<Vec<Vertex>> {
    let mut bags: Vec<Vec<Vertex>> = b.gadgets.iter().flat_map(gadget_bags).collect();
    let per = b.b.len() / b.c.len();
    for (q, &bq) in b.b.iter().enumerate() {
        bags.push(vec![b.f2, b.c[q / per], bq]);
    }
    for bag in &mut bags {
        bag.push(b.f);
    }
    bags
}

/// Path decomposition of width at most `4·C(k,2) + 5`: blocks one after
/// another, every connector added to every bag.
pub fn mcc_path_decomposition(out: &MccOutput) -> TreeDecomposition {
    let connectors = out.connector_vertices();
    let mut bags: Vec<Vec<Vertex>> = out
        .vertex_blocks
        .iter()
        .chain(out.edge_blocks.iter().map(|(_, _, _, b)| b))
        .flat_map(block_bags)
        .collect();
    for bag in &mut bags {
        bag.extend_from_slice(&connectors);
    }
    TreeDecomposition::path(bags)
}

/// A lone type-I gadget for class size `n`, with its path decomposition.
pub fn gadget_graph(n: usize) -> (Graph, TreeDecomposition) {
    let mut bld = Builder::default();
    let gadget = build_gadget(&mut bld, n, "I");
    let bags = gadget_bags(&gadget);
    (bld.finish().0, TreeDecomposition::path(bags))
}

/// A lone block with `gadgets` type-I gadgets, with its path decomposition.
pub fn block_graph(n: usize, gadgets: usize) -> (Graph, TreeDecomposition) {
    let mut bld = Builder::default();
    let names: Vec<String> = (1..=gadgets).map(|l| format!("I_{l}")).collect();
    let block = build_block(&mut bld, n, &names, "B");
    let bags = block_bags(&block);
    (bld.finish().0, TreeDecomposition::path(bags))
}

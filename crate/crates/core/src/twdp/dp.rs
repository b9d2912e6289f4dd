//! The (c, d) dynamic program over a nice tree decomposition.
//!
//! A state at a node assigns every bag vertex `u` a bit `c(u)` (is `u` in the
//! partial solution) and a count `d(u)` (membership of `u` among the vertices
//! processed so far, at most `k`). States are packed into a mixed-radix integer
//! with one digit `c * (k + 1) + d` per bag position, lowest position first.
//!
//! Tables are stored sparsely as the sorted list of codes whose entry is 1,
//! generated forward from the child tables. The literal recurrences are
//! available through [`DpTables::entry`] and drive witness reconstruction.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, Solution, Vertex};

use super::nice::{NiceTreeDecomposition, NodeKind};

/// Cap on the total number of stored valid states across all tables.
pub const DEFAULT_MAX_STATES: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpOptions {
    pub max_states: u64,
    pub jobs: usize,
}

impl Default for DpOptions {
    fn default() -> Self {
        DpOptions {
            max_states: DEFAULT_MAX_STATES,
            jobs: 1,
        }
    }
}

/// `c` and `d` for each bag position, aligned with the node's sorted bag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DpState {
    pub c: Vec<u8>,
    pub d: Vec<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StateCodec {
    k: u8,
    radix: u64,
}

impl StateCodec {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 || k > 254 {
            return Err(Error::InvalidInput(format!(
                "unsupported membership bound {k}"
            )));
        }
        Ok(StateCodec {
            k: k as u8,
            radix: 2 * (k as u64 + 1),
        })
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn radix(&self) -> u64 {
        self.radix
    }

    /// `(2(k+1))^len`, or `None` when the codes would not fit in 64 bits.
    pub fn state_count(&self, len: usize) -> Option<u64> {
        u32::try_from(len)
            .ok()
            .and_then(|e| self.radix.checked_pow(e))
    }

    pub fn encode(&self, s: &DpState) -> u64 {
        let mut code = 0;
        for p in (0..s.c.len()).rev() {
            code = code * self.radix + self.digit(s.c[p], s.d[p]);
        }
        code
    }

    pub fn decode(&self, code: u64, len: usize) -> DpState {
        let mut digits = Vec::with_capacity(len);
        self.decode_into(code, len, &mut digits);
        DpState {
            c: digits.iter().map(|&(c, _)| c).collect(),
            d: digits.iter().map(|&(_, d)| d).collect(),
        }
    }

    fn digit(&self, c: u8, d: u8) -> u64 {
        u64::from(c) * (u64::from(self.k) + 1) + u64::from(d)
    }

    fn decode_into(&self, mut code: u64, len: usize, out: &mut Vec<(u8, u8)>) {
        out.clear();
        let base = u64::from(self.k) + 1;
        for _ in 0..len {
            let digit = code % self.radix;
            code /= self.radix;
            out.push(((digit / base) as u8, (digit % base) as u8));
        }
    }

    fn encode_digits(&self, digits: &[(u8, u8)]) -> u64 {
        digits
            .iter()
            .rev()
            .fold(0, |code, &(c, d)| code * self.radix + self.digit(c, d))
    }
}

/// Positions within `bag` of the neighbors of `bag[p]`, for every `p`.
fn bag_neighbors(g: &Graph, bag: &[Vertex]) -> Vec<Vec<usize>> {
    bag.iter()
        .map(|&u| {
            bag.iter()
                .enumerate()
                .filter(|&(_, &w)| g.has_edge(u, w))
                .map(|(q, _)| q)
                .collect()
        })
        .collect()
}

pub struct DpTables<'a> {
    graph: &'a Graph,
    ntd: &'a NiceTreeDecomposition,
    codec: StateCodec,
    tables: Vec<Vec<u64>>,
}

impl<'a> DpTables<'a> {
    pub fn compute(
        inst: &'a Instance,
        ntd: &'a NiceTreeDecomposition,
        opts: &DpOptions,
    ) -> Result<Self> {
        ntd.validate(&inst.graph)?;
        let codec = StateCodec::new(inst.k)?;
        let widest = ntd.width() + 1;
        if codec.state_count(widest).is_none() {
            return Err(Error::BudgetExceeded {
                what: "dp state encoding (bag size)",
                size: widest as u64,
                limit: (64.0 / (codec.radix() as f64).log2()).floor() as u64,
            });
        }
        let mut dp = DpTables {
            graph: &inst.graph,
            ntd,
            codec,
            tables: vec![Vec::new(); ntd.len()],
        };

        // Nodes of equal height have disjoint subtrees and can be filled together.
        let mut height = vec![0usize; ntd.len()];
        for (i, node) in ntd.nodes().iter().enumerate() {
            height[i] = node
                .children
                .iter()
                .map(|&c| height[c] + 1)
                .max()
                .unwrap_or(0);
        }
        let top = height.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); top + 1];
        for (i, &h) in height.iter().enumerate() {
            levels[h].push(i);
        }

        let pool = if opts.jobs > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(opts.jobs)
                    .build()
                    .map_err(|e| Error::InvalidInput(e.to_string()))?,
            )
        } else {
            None
        };
        let mut stored = 0u64;
        for level in levels {
            let computed: Vec<Result<Vec<u64>>> = match &pool {
                Some(pool) => pool.install(|| {
                    level
                        .par_iter()
                        .map(|&i| dp.forward(i, opts.max_states))
                        .collect()
                }),
                None => level
                    .iter()
                    .map(|&i| dp.forward(i, opts.max_states))
                    .collect(),
            };
            for (&i, table) in level.iter().zip(computed) {
                let table = table?;
                stored += table.len() as u64;
                if stored > opts.max_states {
                    return Err(Error::BudgetExceeded {
                        what: "dp stored states",
                        size: stored,
                        limit: opts.max_states,
                    });
                }
                dp.tables[i] = table;
            }
        }
        Ok(dp)
    }

    pub fn codec(&self) -> StateCodec {
        self.codec
    }

    pub fn decomposition(&self) -> &NiceTreeDecomposition {
        self.ntd
    }

    /// Size of the full state space at `node`: `(2(k+1))^|bag|`.
    pub fn state_space(&self, node: usize) -> u64 {
        self.codec
            .state_count(self.ntd.node(node).bag.len())
            .expect("checked at construction")
    }

    /// Codes whose table entry is 1, ascending.
    pub fn valid_states(&self, node: usize) -> &[u64] {
        &self.tables[node]
    }

    pub fn contains(&self, node: usize, code: u64) -> bool {
        self.tables[node].binary_search(&code).is_ok()
    }

    pub fn decode(&self, node: usize, code: u64) -> DpState {
        self.codec.decode(code, self.ntd.node(node).bag.len())
    }

    pub fn encode(&self, state: &DpState) -> u64 {
        self.codec.encode(state)
    }

    /// The root entry for the empty state.
    pub fn root_entry(&self) -> bool {
        self.contains(self.ntd.root(), 0)
    }

    pub fn total_stored(&self) -> u64 {
        self.tables.iter().map(|t| t.len() as u64).sum()
    }

    fn forward(&self, i: usize, cap: u64) -> Result<Vec<u64>> {
        let node = self.ntd.node(i);
        let k = self.codec.k;
        let mut out = match node.kind {
            NodeKind::Leaf => vec![0],
            NodeKind::Introduce(v) => {
                let child = &self.tables[node.children[0]];
                let pv = node
                    .bag
                    .binary_search(&v)
                    .expect("introduced vertex in bag");
                let nb = &bag_neighbors(self.graph, &node.bag)[pv];
                let mut out = Vec::with_capacity(child.len() * 2);
                let mut digits = Vec::new();
                for &code in child {
                    self.codec
                        .decode_into(code, node.bag.len() - 1, &mut digits);
                    digits.insert(pv, (0, 0));
                    let chosen = nb.iter().filter(|&&q| digits[q].0 == 1).count() as u8;
                    if chosen <= k {
                        digits[pv] = (0, chosen);
                        out.push(self.codec.encode_digits(&digits));
                    }
                    if chosen < k && nb.iter().all(|&q| digits[q].1 < k) {
                        for &q in nb {
                            digits[q].1 += 1;
                        }
                        digits[pv] = (1, chosen + 1);
                        out.push(self.codec.encode_digits(&digits));
                    }
                }
                out
            }
            NodeKind::Forget(v) => {
                let child_node = self.ntd.node(node.children[0]);
                let pv = child_node
                    .bag
                    .binary_search(&v)
                    .expect("forgotten vertex in child");
                let mut digits = Vec::new();
                let mut out = Vec::new();
                for &code in &self.tables[node.children[0]] {
                    self.codec
                        .decode_into(code, child_node.bag.len(), &mut digits);
                    if digits[pv].1 >= 1 {
                        digits.remove(pv);
                        out.push(self.codec.encode_digits(&digits));
                    }
                }
                out
            }
            NodeKind::Join => {
                let len = node.bag.len();
                let nbrs = bag_neighbors(self.graph, &node.bag);
                let mut digits = Vec::new();
                let mut by_mask: HashMap<u64, Vec<Vec<u8>>> = HashMap::new();
                for &code in &self.tables[node.children[1]] {
                    self.codec.decode_into(code, len, &mut digits);
                    by_mask
                        .entry(c_mask(&digits))
                        .or_default()
                        .push(digits.iter().map(|&(_, d)| d).collect());
                }
                let mut out = Vec::new();
                let mut merged = vec![(0u8, 0u8); len];
                for &code in &self.tables[node.children[0]] {
                    self.codec.decode_into(code, len, &mut digits);
                    let Some(partners) = by_mask.get(&c_mask(&digits)) else {
                        continue;
                    };
                    let base: Vec<u8> = (0..len)
                        .map(|p| digits[p].0 + nbrs[p].iter().map(|&q| digits[q].0).sum::<u8>())
                        .collect();
                    'partner: for dh in partners {
                        for p in 0..len {
                            let d = u16::from(digits[p].1) + u16::from(dh[p]) - u16::from(base[p]);
                            if d > u16::from(k) {
                                continue 'partner;
                            }
                            merged[p] = (digits[p].0, d as u8);
                        }
                        out.push(self.codec.encode_digits(&merged));
                        if out.len() as u64 > cap.saturating_mul(4) {
                            return Err(Error::BudgetExceeded {
                                what: "dp join states",
                                size: out.len() as u64,
                                limit: cap,
                            });
                        }
                    }
                }
                out
            }
        };
        out.sort_unstable();
        out.dedup();
        if out.len() as u64 > cap {
            return Err(Error::BudgetExceeded {
                what: "dp stored states",
                size: out.len() as u64,
                limit: cap,
            });
        }
        Ok(out)
    }

    /// The table entry at `node` for `code`, evaluated by the recurrence from
    /// the child tables rather than looked up.
    pub fn entry(&self, node: usize, code: u64) -> bool {
        let n = self.ntd.node(node);
        match n.kind {
            NodeKind::Leaf => code == 0,
            NodeKind::Introduce(_) => self
                .introduce_child(node, code)
                .is_some_and(|c| self.contains(n.children[0], c)),
            NodeKind::Forget(_) => self
                .forget_candidates(node, code)
                .into_iter()
                .any(|c| self.contains(n.children[0], c)),
            NodeKind::Join => self.join_splits(node, code).into_iter().any(|(cj, ch)| {
                self.contains(n.children[0], cj) && self.contains(n.children[1], ch)
            }),
        }
    }

    /// Child state required by an introduce node, or `None` when the state is
    /// rejected outright (`|A1| != d(v)`, or a decrement would go negative).
    pub fn introduce_child(&self, node: usize, code: u64) -> Option<u64> {
        let n = self.ntd.node(node);
        let NodeKind::Introduce(v) = n.kind else {
            return None;
        };
        let pv = n.bag.binary_search(&v).ok()?;
        let mut digits = Vec::new();
        self.codec.decode_into(code, n.bag.len(), &mut digits);
        let nb = &bag_neighbors(self.graph, &n.bag)[pv];
        let a1 = usize::from(digits[pv].0) + nb.iter().filter(|&&q| digits[q].0 == 1).count();
        if a1 != usize::from(digits[pv].1) {
            return None;
        }
        if digits[pv].0 == 1 {
            for &q in nb {
                digits[q].1 = digits[q].1.checked_sub(1)?;
            }
        }
        digits.remove(pv);
        Some(self.codec.encode_digits(&digits))
    }

    /// Child states `(a, b)` for the forgotten vertex with `b` in `1..=k`,
    /// ascending by code.
    pub fn forget_candidates(&self, node: usize, code: u64) -> Vec<u64> {
        let n = self.ntd.node(node);
        let NodeKind::Forget(v) = n.kind else {
            return Vec::new();
        };
        let pv = n.bag.partition_point(|&u| u < v);
        let mut digits = Vec::new();
        self.codec.decode_into(code, n.bag.len(), &mut digits);
        let mut out = Vec::with_capacity(2 * usize::from(self.codec.k));
        for a in 0..=1u8 {
            for b in 1..=self.codec.k {
                let mut child = digits.clone();
                child.insert(pv, (a, b));
                out.push(self.codec.encode_digits(&child));
            }
        }
        out
    }

    /// Every split `g` with `0 <= g(u) <= l_u`, as `(child_j code, child_h code)`
    /// pairs in counter order. Empty when some `l_u < 0`.
    pub fn join_splits(&self, node: usize, code: u64) -> Vec<(u64, u64)> {
        let n = self.ntd.node(node);
        if n.kind != NodeKind::Join {
            return Vec::new();
        }
        let len = n.bag.len();
        let mut digits = Vec::new();
        self.codec.decode_into(code, len, &mut digits);
        let Some((base, ell)) = self.join_ranges(&n.bag, &digits) else {
            return Vec::new();
        };
        let mut g = vec![0u8; len];
        let mut out = Vec::new();
        loop {
            let dj: Vec<(u8, u8)> = (0..len).map(|p| (digits[p].0, base[p] + g[p])).collect();
            let dh: Vec<(u8, u8)> = (0..len)
                .map(|p| (digits[p].0, digits[p].1 - g[p]))
                .collect();
            out.push((self.codec.encode_digits(&dj), self.codec.encode_digits(&dh)));
            let mut p = 0;
            while p < len && g[p] == ell[p] {
                g[p] = 0;
                p += 1;
            }
            if p == len {
                break;
            }
            g[p] += 1;
        }
        out
    }

    /// Number of splitting functions enumerated for a join state.
    pub fn join_split_count(&self, node: usize, code: u64) -> u64 {
        let n = self.ntd.node(node);
        let mut digits = Vec::new();
        self.codec.decode_into(code, n.bag.len(), &mut digits);
        match self.join_ranges(&n.bag, &digits) {
            Some((_, ell)) => ell.iter().map(|&l| u64::from(l) + 1).product(),
            None => 0,
        }
    }

    /// `|N[u] ∩ c^{-1}(1)|` and `l_u = d(u) - |N[u] ∩ c^{-1}(1)|` per position.
    fn join_ranges(&self, bag: &[Vertex], digits: &[(u8, u8)]) -> Option<(Vec<u8>, Vec<u8>)> {
        let nbrs = bag_neighbors(self.graph, bag);
        let base: Vec<u8> = (0..bag.len())
            .map(|p| digits[p].0 + nbrs[p].iter().map(|&q| digits[q].0).sum::<u8>())
            .collect();
        let ell = (0..bag.len())
            .map(|p| digits[p].1.checked_sub(base[p]))
            .collect::<Option<Vec<u8>>>()?;
        Some((base, ell))
    }

    /// Walks from the root to the leaves choosing, at every node, the least
    /// child state (or pair) that the recurrence accepts.
    pub fn witness(&self) -> Option<Solution> {
        if !self.root_entry() {
            return None;
        }
        let mut members = Vec::new();
        let mut stack = vec![(self.ntd.root(), 0u64)];
        while let Some((i, code)) = stack.pop() {
            let node = self.ntd.node(i);
            match node.kind {
                NodeKind::Leaf => {}
                NodeKind::Introduce(v) => {
                    let pv = node
                        .bag
                        .binary_search(&v)
                        .expect("introduced vertex in bag");
                    if self.decode(i, code).c[pv] == 1 {
                        members.push(v);
                    }
                    let child = self
                        .introduce_child(i, code)
                        .expect("valid introduce state");
                    stack.push((node.children[0], child));
                }
                NodeKind::Forget(_) => {
                    let child = self
                        .forget_candidates(i, code)
                        .into_iter()
                        .find(|&c| self.contains(node.children[0], c))
                        .expect("valid forget state");
                    stack.push((node.children[0], child));
                }
                NodeKind::Join => {
                    let (cj, ch) = self
                        .join_splits(i, code)
                        .into_iter()
                        .filter(|&(cj, ch)| {
                            self.contains(node.children[0], cj)
                                && self.contains(node.children[1], ch)
                        })
                        .min()
                        .expect("valid join state");
                    stack.push((node.children[0], cj));
                    stack.push((node.children[1], ch));
                }
            }
        }
        Some(Solution::from_unchecked(members))
    }
}

fn c_mask(digits: &[(u8, u8)]) -> u64 {
    digits
        .iter()
        .enumerate()
        .fold(0, |m, (p, &(c, _))| m | u64::from(c) << p)
}

pub fn dp_feasible(inst: &Instance, ntd: &NiceTreeDecomposition) -> Result<bool> {
    dp_feasible_with(inst, ntd, &DpOptions::default())
}

pub fn dp_feasible_with(
    inst: &Instance,
    ntd: &NiceTreeDecomposition,
    opts: &DpOptions,
) -> Result<bool> {
    Ok(DpTables::compute(inst, ntd, opts)?.root_entry())
}

pub fn dp_witness(inst: &Instance, ntd: &NiceTreeDecomposition) -> Result<Option<Solution>> {
    dp_witness_with(inst, ntd, &DpOptions::default())
}

pub fn dp_witness_with(
    inst: &Instance,
    ntd: &NiceTreeDecomposition,
    opts: &DpOptions,
) -> Result<Option<Solution>> {
    Ok(DpTables::compute(inst, ntd, opts)?.witness())
}

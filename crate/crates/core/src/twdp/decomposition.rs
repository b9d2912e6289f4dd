use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::{self, Write as _};

use crate::error::{ParseError, ParseErrorKind};
use crate::graph::io::{content_lines, number};
use crate::graph::{Graph, Vertex};

/// Bags indexed by node (0-based here, 1-based in `.td` files) and the tree edges
/// between nodes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<Vertex>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(mut bags: Vec<Vec<Vertex>>, edges: Vec<(usize, usize)>) -> Self {
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        TreeDecomposition { bags, edges }
    }

    /// Bags along a path, in order.
    pub fn path(bags: Vec<Vec<Vertex>>) -> Self {
        let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        TreeDecomposition::new(bags, edges)
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }

    pub fn num_nodes(&self) -> usize {
        self.bags.len()
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            if a < adj.len() && b < adj.len() {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        adj
    }

    /// Connected, acyclic and nonempty, with in-range edge endpoints.
    pub fn is_tree(&self) -> bool {
        let n = self.bags.len();
        if n == 0 || self.edges.len() != n - 1 {
            return false;
        }
        if self.edges.iter().any(|&(a, b)| a >= n || b >= n || a == b) {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == n
    }
}

/// Outcome of [`validate_decomposition`]; bag ids are 1-based as in `.td` files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdVerdict {
    Valid { width: usize },
    VertexOutOfRange { bag: usize, vertex: Vertex },
    NotATree,
    UncoveredVertex(Vertex),
    UncoveredEdge(Vertex, Vertex),
    DisconnectedOccurrence(Vertex),
    NotAPath,
}

impl TdVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, TdVerdict::Valid { .. })
    }
}

impl fmt::Display for TdVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdVerdict::Valid { width } => write!(f, "VALID width {width}"),
            TdVerdict::VertexOutOfRange { bag, vertex } => {
                write!(f, "INVALID bag {bag} holds out-of-range vertex {vertex}")
            }
            TdVerdict::NotATree => write!(f, "INVALID tree edges do not form a tree"),
            TdVerdict::UncoveredVertex(v) => write!(f, "INVALID vertex {v} in no bag"),
            TdVerdict::UncoveredEdge(u, v) => write!(f, "INVALID edge {u} {v} in no bag"),
            TdVerdict::DisconnectedOccurrence(v) => {
                write!(f, "INVALID bags containing vertex {v} are not connected")
            }
            TdVerdict::NotAPath => write!(f, "INVALID decomposition is not a path"),
        }
    }
}

/// Checks vertex coverage, edge coverage and connectivity of every vertex's
/// occurrence set; `path_only` additionally requires the tree to be a path.
pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition, path_only: bool) -> TdVerdict {
    for (i, bag) in td.bags.iter().enumerate() {
        if let Some(&v) = bag.iter().find(|&&v| v == 0 || v > g.n()) {
            return TdVerdict::VertexOutOfRange {
                bag: i + 1,
                vertex: v,
            };
        }
    }
    if !td.is_tree() {
        return TdVerdict::NotATree;
    }
    let mut occurs: Vec<Vec<usize>> = vec![Vec::new(); g.n() + 1];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            occurs[v].push(i);
        }
    }
    if let Some(v) = g.vertices().find(|&v| occurs[v].is_empty()) {
        return TdVerdict::UncoveredVertex(v);
    }
    let bag_sets: Vec<BTreeSet<Vertex>> = td
        .bags
        .iter()
        .map(|b| b.iter().copied().collect())
        .collect();
    for (u, v) in g.edges() {
        if !occurs[u].iter().any(|&i| bag_sets[i].contains(&v)) {
            return TdVerdict::UncoveredEdge(u, v);
        }
    }
    let adj = td.adjacency();
    let mut mark = vec![usize::MAX; td.bags.len()];
    for v in g.vertices() {
        for &i in &occurs[v] {
            mark[i] = v;
        }
        let start = occurs[v][0];
        let mut stack = vec![start];
        let mut reached = vec![false; td.bags.len()];
        reached[start] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if mark[y] == v && !reached[y] {
                    reached[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        if count != occurs[v].len() {
            return TdVerdict::DisconnectedOccurrence(v);
        }
    }
    if path_only && adj.iter().any(|a| a.len() > 2) {
        return TdVerdict::NotAPath;
    }
    TdVerdict::Valid { width: td.width() }
}

/// Min-fill elimination ordering (ties to the lowest vertex id). Each eliminated
/// vertex contributes the bag `{v} ∪ N(v)` in the current elimination graph,
/// attached to the bag of its earliest-eliminated remaining neighbor.
pub fn build_tree_decomposition(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    let mut adj: Vec<BTreeSet<Vertex>> = (0..=n)
        .map(|v| {
            if v == 0 {
                BTreeSet::new()
            } else {
                g.neighbors(v).iter().copied().collect()
            }
        })
        .collect();
    let mut eliminated = vec![false; n + 1];
    let mut order = Vec::with_capacity(n);
    let mut bags = Vec::with_capacity(n);

    let fill = |adj: &[BTreeSet<Vertex>], v: Vertex| -> usize {
        let nb: Vec<Vertex> = adj[v].iter().copied().collect();
        let mut missing = 0;
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !adj[a].contains(&b) {
                    missing += 1;
                }
            }
        }
        missing
    };

    for _ in 0..n {
        let v = (1..=n)
            .filter(|&v| !eliminated[v])
            .min_by_key(|&v| (fill(&adj, v), v))
            .expect("a vertex remains");
        let nb: Vec<Vertex> = adj[v].iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &a in &nb {
            adj[a].remove(&v);
        }
        adj[v].clear();
        eliminated[v] = true;
        let mut bag = nb;
        bag.push(v);
        order.push(v);
        bags.push(bag);
    }

    let mut position = vec![0; n + 1];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, bag) in bags.iter().enumerate() {
        let parent = bag
            .iter()
            .filter(|&&u| u != order[i])
            .map(|&u| position[u])
            .min();
        match parent {
            Some(p) => edges.push((i, p)),
            None => roots.push(i),
        }
    }
    // Components are vertex-disjoint, so chaining their roots keeps validity.
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition::new(bags, edges)
}

/// Parses the PACE `.td` format: `s td <bags> <max bag size> <n>`, `b <id> <v...>`
/// lines and `<id> <id>` tree edges.
pub fn parse_td(text: &str) -> Result<TreeDecomposition, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut bags: Vec<Option<Vec<Vertex>>> = Vec::new();
    let mut edges = Vec::new();
    for (line, tokens) in content_lines(text) {
        match tokens[0] {
            "s" => {
                if header.is_some() {
                    return Err(ParseError::new(line, ParseErrorKind::DuplicateHeader));
                }
                if tokens.len() != 5 || tokens[1] != "td" {
                    return Err(ParseError::new(
                        line,
                        ParseErrorKind::MalformedHeader(tokens.join(" ")),
                    ));
                }
                let count: usize = number(tokens[2], line)?;
                let _max_bag: usize = number(tokens[3], line)?;
                let _n: usize = number(tokens[4], line)?;
                header = Some((line, count));
                bags = vec![None; count];
            }
            _ if header.is_none() => {
                return Err(ParseError::new(line, ParseErrorKind::MissingHeader));
            }
            "b" => {
                if tokens.len() < 2 {
                    return Err(ParseError::new(
                        line,
                        ParseErrorKind::UnrecognizedLine(tokens.join(" ")),
                    ));
                }
                let id: usize = number(tokens[1], line)?;
                if id == 0 || id > bags.len() {
                    return Err(ParseError::new(line, ParseErrorKind::UnknownBag(id)));
                }
                if bags[id - 1].is_some() {
                    return Err(ParseError::new(
                        line,
                        ParseErrorKind::DuplicateId(id as u64),
                    ));
                }
                let mut bag = Vec::with_capacity(tokens.len() - 2);
                for tok in &tokens[2..] {
                    bag.push(number(tok, line)?);
                }
                bags[id - 1] = Some(bag);
            }
            _ => {
                if tokens.len() != 2 {
                    return Err(ParseError::new(
                        line,
                        ParseErrorKind::UnrecognizedLine(tokens.join(" ")),
                    ));
                }
                let a: usize = number(tokens[0], line)?;
                let b: usize = number(tokens[1], line)?;
                for id in [a, b] {
                    if id == 0 || id > bags.len() {
                        return Err(ParseError::new(line, ParseErrorKind::UnknownBag(id)));
                    }
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let (line, count) = header.ok_or_else(|| ParseError::new(0, ParseErrorKind::MissingHeader))?;
    let found = bags.iter().filter(|b| b.is_some()).count();
    if found != count {
        return Err(ParseError::new(
            line,
            ParseErrorKind::BagCountMismatch {
                declared: count,
                found,
            },
        ));
    }
    Ok(TreeDecomposition::new(
        bags.into_iter().map(Option::unwrap).collect(),
        edges,
    ))
}

pub fn serialize_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = format!("s td {} {} {}\n", td.bags.len(), td.max_bag_size(), n);
    for (i, bag) in td.bags.iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    for &(a, b) in &td.edges {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

/// Number of occurrences of each vertex, for diagnostics.
pub fn occurrence_counts(td: &TreeDecomposition) -> HashMap<Vertex, usize> {
    let mut counts = HashMap::new();
    for bag in &td.bags {
        for &v in bag {
            *counts.entry(v).or_insert(0) += 1;
        }
    }
    counts
}

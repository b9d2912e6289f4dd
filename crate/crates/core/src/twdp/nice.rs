use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

use super::decomposition::{validate_decomposition, TdVerdict, TreeDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(Vertex),
    Forget(Vertex),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NodeKind,
    /// Sorted ascending.
    pub bag: Vec<Vertex>,
    pub children: Vec<usize>,
}

/// Nodes are stored so that children precede their parents; the root is last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    nodes: Vec<NiceNode>,
}

impl NiceTreeDecomposition {
    pub fn nodes(&self) -> &[NiceNode] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &NiceNode {
        &self.nodes[i]
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.bag.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub fn count(&self, pred: impl Fn(&NodeKind) -> bool) -> usize {
        self.nodes.iter().filter(|n| pred(&n.kind)).count()
    }

    /// Forgets the node kinds.
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|n| n.bag.clone()).collect();
        let edges = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, n)| n.children.iter().map(move |&c| (c, i)))
            .collect();
        TreeDecomposition::new(bags, edges)
    }

    /// Checks the node-kind rules and that the underlying decomposition is
    /// valid for `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
        if self.nodes.is_empty() {
            return bad("no nodes".into());
        }
        if !self.nodes[self.root()].bag.is_empty() {
            return bad("root bag is not empty".into());
        }
        for (i, node) in self.nodes.iter().enumerate() {
            if node.children.iter().any(|&c| c >= i) {
                return bad(format!("node {i} has a child stored after it"));
            }
            let child_bag = |j: usize| &self.nodes[node.children[j]].bag;
            let ok = match node.kind {
                NodeKind::Leaf => node.children.is_empty() && node.bag.is_empty(),
                NodeKind::Introduce(v) => {
                    node.children.len() == 1
                        && !child_bag(0).contains(&v)
                        && with(child_bag(0), v) == node.bag
                }
                NodeKind::Forget(v) => {
                    node.children.len() == 1
                        && node.bag.binary_search(&v).is_err()
                        && with(&node.bag, v) == *child_bag(0)
                }
                NodeKind::Join => {
                    node.children.len() == 2
                        && *child_bag(0) == node.bag
                        && *child_bag(1) == node.bag
                }
            };
            if !ok {
                return bad(format!("node {i} violates the {:?} rule", node.kind));
            }
        }
        match validate_decomposition(g, &self.to_tree_decomposition(), false) {
            TdVerdict::Valid { .. } => Ok(()),
            v => bad(v.to_string()),
        }
    }
}

fn with(bag: &[Vertex], v: Vertex) -> Vec<Vertex> {
    let mut out = bag.to_vec();
    let pos = out.partition_point(|&u| u < v);
    out.insert(pos, v);
    out
}

fn without(bag: &[Vertex], v: Vertex) -> Vec<Vertex> {
    bag.iter().copied().filter(|&u| u != v).collect()
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, kind: NodeKind, bag: Vec<Vertex>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode {
            kind,
            bag,
            children,
        });
        self.nodes.len() - 1
    }

    fn leaf(&mut self) -> usize {
        self.push(NodeKind::Leaf, Vec::new(), Vec::new())
    }

    /// Forgets `from \ to`, then introduces `to \ from`, both ascending.
    fn chain(&mut self, mut top: usize, to: &[Vertex]) -> usize {
        let from = self.nodes[top].bag.clone();
        for &v in from.iter().filter(|v| to.binary_search(v).is_err()) {
            let bag = without(&self.nodes[top].bag, v);
            top = self.push(NodeKind::Forget(v), bag, vec![top]);
        }
        for &v in to.iter().filter(|v| from.binary_search(v).is_err()) {
            let bag = with(&self.nodes[top].bag, v);
            top = self.push(NodeKind::Introduce(v), bag, vec![top]);
        }
        top
    }
}

/// Roots the decomposition at node 0 and rewrites it into leaf, introduce,
/// forget and binary join nodes. Multiple children are combined left to right.
pub fn make_nice(td: &TreeDecomposition) -> Result<NiceTreeDecomposition> {
    if !td.is_tree() {
        return Err(Error::InvalidDecomposition(
            "tree edges do not form a tree".into(),
        ));
    }
    let adj = td.adjacency();
    let n = td.num_nodes();

    // Iterative DFS from node 0 to get parents and a post-order.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut children = vec![Vec::new(); n];
    for &x in order.iter().skip(1) {
        children[parent[x]].push(x);
    }
    for list in &mut children {
        list.sort_unstable();
    }

    let mut b = Builder { nodes: Vec::new() };
    let mut top = vec![usize::MAX; n];
    for &x in order.iter().rev() {
        let bag = &td.bags[x];
        let mut acc: Option<usize> = None;
        for &c in &children[x] {
            let branch = b.chain(top[c], bag);
            acc = Some(match acc {
                None => branch,
                Some(left) => b.push(NodeKind::Join, bag.clone(), vec![left, branch]),
            });
        }
        top[x] = match acc {
            Some(t) => t,
            None => {
                let leaf = b.leaf();
                b.chain(leaf, bag)
            }
        };
    }
    b.chain(top[0], &[]);
    Ok(NiceTreeDecomposition { nodes: b.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twdp::build_tree_decomposition;

    #[test]
    fn single_bag_chain() {
        let td = TreeDecomposition::path(vec![vec![1, 2]]);
        let nice = make_nice(&td).unwrap();
        let kinds: Vec<_> = nice.nodes().iter().map(|n| n.kind).collect();
        assert_eq!(
            kinds,
            vec![
                NodeKind::Leaf,
                NodeKind::Introduce(1),
                NodeKind::Introduce(2),
                NodeKind::Forget(1),
                NodeKind::Forget(2),
            ]
        );
        let g = Graph::from_edges(2, [(1, 2)]).unwrap();
        nice.validate(&g).unwrap();
    }

    #[test]
    fn join_counts() {
        let p3 = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        let nice = make_nice(&TreeDecomposition::path(vec![vec![1, 2], vec![2, 3]])).unwrap();
        assert_eq!(nice.count(|k| *k == NodeKind::Join), 0);
        nice.validate(&p3).unwrap();

        let star = Graph::from_edges(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        let td = TreeDecomposition::new(
            vec![vec![1], vec![1, 2], vec![1, 3], vec![1, 4]],
            vec![(0, 1), (0, 2), (0, 3)],
        );
        let nice = make_nice(&td).unwrap();
        assert_eq!(nice.count(|k| *k == NodeKind::Join), 2);
        nice.validate(&star).unwrap();
        assert_eq!(nice.width(), td.width());
    }

    #[test]
    fn rejects_non_tree() {
        let td = TreeDecomposition::new(vec![vec![1], vec![2]], vec![]);
        assert!(make_nice(&td).is_err());
    }

    #[test]
    fn heuristic_decompositions_become_nice() {
        let g = Graph::from_edges(
            7,
            [
                (1, 2),
                (2, 3),
                (3, 1),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 4),
                (2, 7),
            ],
        )
        .unwrap();
        let td = build_tree_decomposition(&g);
        let nice = make_nice(&td).unwrap();
        nice.validate(&g).unwrap();
        assert_eq!(nice.width(), td.width());
        assert!(nice.len() <= 4 * (td.width() + 1) * td.num_nodes() + 1);
    }
}

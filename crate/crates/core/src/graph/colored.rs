use super::{Graph, Vertex};
use crate::error::Error;

/// A graph whose vertices are partitioned into color classes `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub graph: Graph,
    // color[v] for v in 1..=n; color[0] unused.
    color: Vec<usize>,
    k: usize,
}

impl ColoredGraph {
    /// `colors[i]` is the color of vertex `i + 1`. Every class in `1..=max` must be nonempty.
    pub fn new(graph: Graph, colors: &[usize]) -> Result<Self, Error> {
        if colors.len() != graph.n() {
            return Err(Error::InvalidInput(format!(
                "{} colors given for {} vertices",
                colors.len(),
                graph.n()
            )));
        }
        let k = colors.iter().copied().max().unwrap_or(0);
        let mut seen = vec![false; k + 1];
        for &c in colors {
            if c == 0 {
                return Err(Error::InvalidInput("colors start at 1".into()));
            }
            seen[c] = true;
        }
        if let Some(c) = (1..=k).find(|&c| !seen[c]) {
            return Err(Error::InvalidInput(format!("color class {c} is empty")));
        }
        let mut color = vec![0];
        color.extend_from_slice(colors);
        Ok(ColoredGraph { graph, color, k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.color[v]
    }

    /// Color classes, each sorted by vertex id; index 0 is class 1.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut classes = vec![Vec::new(); self.k];
        for v in self.graph.vertices() {
            classes[self.color[v] - 1].push(v);
        }
        classes
    }
}

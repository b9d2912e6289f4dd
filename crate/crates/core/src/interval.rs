//! Greedy dominating set for interval graphs with membership at most 3.

use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::graph::{Graph, IntervalSet, Solution};

/// Vertex `i` is the `i`-th interval of the input (1-based); closed intervals,
/// so touching endpoints are adjacent.
pub fn interval_graph(iv: &IntervalSet) -> Graph {
    let list = &iv.intervals;
    let edges = (0..list.len()).flat_map(|a| {
        (a + 1..list.len())
            .filter(move |&b| list[a].intersects(&list[b]))
            .map(move |b| (a + 1, b + 1))
    });
    Graph::from_edges(list.len(), edges).expect("pairs are distinct and in range")
}

/// Sweep from the left: start at the leftmost interval (longest first, then
/// lowest id), then repeatedly jump to the interval through the current right
/// endpoint that reaches furthest right. When nothing extends past the current
/// right endpoint, the next seed is the first interval starting beyond it.
///
/// Vertices of the returned set use the numbering of [`interval_graph`].
pub fn greedy_dominating(iv: &IntervalSet) -> Result<Solution> {
    let list = &iv.intervals;
    if list.is_empty() {
        return Err(Error::InvalidInput("empty interval set".into()));
    }
    let mut order: Vec<usize> = (0..list.len()).collect();
    order.sort_by_key(|&i| (list[i].left, Reverse(list[i].right), list[i].id));

    let mut chosen = Vec::new();
    let mut pos = 0;
    while pos < order.len() {
        let mut cur = order[pos];
        chosen.push(cur);
        loop {
            let r = list[cur].right;
            let next = (0..list.len())
                .filter(|&j| list[j].left <= r && list[j].right > r)
                .min_by_key(|&j| (Reverse(list[j].right), list[j].id));
            match next {
                Some(j) => {
                    cur = j;
                    chosen.push(cur);
                }
                None => break,
            }
        }
        let reach = list[cur].right;
        while pos < order.len() && list[order[pos]].left <= reach {
            pos += 1;
        }
    }
    Ok(Solution::from_unchecked(chosen.into_iter().map(|i| i + 1)))
}

/// Interval ids of a solution over [`interval_graph`] vertices.
pub fn solution_ids(iv: &IntervalSet, s: &Solution) -> Vec<u64> {
    s.members()
        .iter()
        .map(|&v| iv.intervals[v - 1].id)
        .collect()
}

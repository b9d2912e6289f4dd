//! Text formats.
//!
//! * graphs: `p mmds <n> <m>` header, `e <u> <v>` edge lines; colored graphs add
//!   `n <v> <color>` lines;
//! * CNF: DIMACS, one 0-terminated clause per line;
//! * intervals: `i <id> <left> <right>`;
//! * solutions: one vertex id per line.
//!
//! Lines whose first token is `c` are comments and blank lines are skipped.
//! Anything else that is not recognized is an error.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use super::{CnfFormula, ColoredGraph, Graph, Interval, IntervalSet, Solution, Vertex};
use crate::error::{GraphError, ParseError, ParseErrorKind};

/// Non-comment, non-blank lines as `(1-based line number, tokens)`.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, tokens)),
        }
    })
}

pub(crate) fn number<T: FromStr>(token: &str, line: usize) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::new(line, ParseErrorKind::BadNumber(token.to_string())))
}

fn unrecognized(line: usize, tokens: &[&str]) -> ParseError {
    ParseError::new(line, ParseErrorKind::UnrecognizedLine(tokens.join(" ")))
}

struct GraphParser {
    header_line: usize,
    n: usize,
    m: usize,
    edges: Vec<(Vertex, Vertex)>,
    seen: HashSet<(Vertex, Vertex)>,
}

impl GraphParser {
    fn header(line: usize, tokens: &[&str]) -> Result<Self, ParseError> {
        if tokens.len() != 4 || tokens[1] != "mmds" {
            return Err(ParseError::new(
                line,
                ParseErrorKind::MalformedHeader(tokens.join(" ")),
            ));
        }
        Ok(GraphParser {
            header_line: line,
            n: number(tokens[2], line)?,
            m: number(tokens[3], line)?,
            edges: Vec::new(),
            seen: HashSet::new(),
        })
    }

    fn vertex(&self, token: &str, line: usize) -> Result<Vertex, ParseError> {
        let v: Vertex = number(token, line)?;
        if v == 0 || v > self.n {
            return Err(ParseError::new(
                line,
                ParseErrorKind::Graph(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                }),
            ));
        }
        Ok(v)
    }

    fn edge(&mut self, line: usize, tokens: &[&str]) -> Result<(), ParseError> {
        if tokens.len() != 3 {
            return Err(unrecognized(line, tokens));
        }
        let u = self.vertex(tokens[1], line)?;
        let v = self.vertex(tokens[2], line)?;
        if u == v {
            return Err(ParseError::new(
                line,
                ParseErrorKind::Graph(GraphError::SelfLoop(u)),
            ));
        }
        let key = (u.min(v), u.max(v));
        if !self.seen.insert(key) {
            return Err(ParseError::new(
                line,
                ParseErrorKind::Graph(GraphError::DuplicateEdge(key.0, key.1)),
            ));
        }
        self.edges.push((u, v));
        Ok(())
    }

    fn finish(self) -> Result<Graph, ParseError> {
        if self.edges.len() != self.m {
            return Err(ParseError::new(
                self.header_line,
                ParseErrorKind::EdgeCountMismatch {
                    declared: self.m,
                    found: self.edges.len(),
                },
            ));
        }
        Graph::from_edges(self.n, self.edges)
            .map_err(|e| ParseError::new(self.header_line, ParseErrorKind::Graph(e)))
    }
}

fn parse_graph_lines<F>(text: &str, mut extra: F) -> Result<Graph, ParseError>
where
    F: FnMut(&GraphParser, usize, &[&str]) -> Result<bool, ParseError>,
{
    let mut parser: Option<GraphParser> = None;
    for (line, tokens) in content_lines(text) {
        match (tokens[0], parser.as_mut()) {
            ("p", None) => parser = Some(GraphParser::header(line, &tokens)?),
            ("p", Some(_)) => return Err(ParseError::new(line, ParseErrorKind::DuplicateHeader)),
            (_, None) => return Err(ParseError::new(line, ParseErrorKind::MissingHeader)),
            ("e", Some(p)) => p.edge(line, &tokens)?,
            (_, Some(p)) => {
                if !extra(p, line, &tokens)? {
                    return Err(unrecognized(line, &tokens));
                }
            }
        }
    }
    parser
        .ok_or_else(|| ParseError::new(0, ParseErrorKind::MissingHeader))?
        .finish()
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    parse_graph_lines(text, |_, _, _| Ok(false))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p mmds {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn parse_colored_graph(text: &str) -> Result<ColoredGraph, ParseError> {
    let mut colors: Vec<usize> = Vec::new();
    let mut last_line = 0;
    let graph = parse_graph_lines(text, |p, line, tokens| {
        if tokens[0] != "n" || tokens.len() != 3 {
            return Ok(false);
        }
        if colors.is_empty() {
            colors = vec![0; p.n];
        }
        let v = p.vertex(tokens[1], line)?;
        let c: usize = number(tokens[2], line)?;
        if c == 0 {
            return Err(ParseError::new(
                line,
                ParseErrorKind::BadNumber(tokens[2].into()),
            ));
        }
        if colors[v - 1] != 0 {
            return Err(ParseError::new(line, ParseErrorKind::RecoloredVertex(v)));
        }
        colors[v - 1] = c;
        last_line = line;
        Ok(true)
    })?;
    if colors.is_empty() {
        colors = vec![0; graph.n()];
    }
    if let Some(i) = colors.iter().position(|&c| c == 0) {
        return Err(ParseError::new(
            last_line,
            ParseErrorKind::UncoloredVertex(i + 1),
        ));
    }
    let k = colors.iter().copied().max().unwrap_or(0);
    if let Some(c) = (1..=k).find(|c| !colors.contains(c)) {
        return Err(ParseError::new(
            last_line,
            ParseErrorKind::EmptyColorClass(c),
        ));
    }
    Ok(ColoredGraph::new(graph, &colors).expect("colors validated above"))
}

pub fn serialize_colored_graph(g: &ColoredGraph) -> String {
    let mut out = serialize_graph(&g.graph);
    for v in g.graph.vertices() {
        let _ = writeln!(out, "n {v} {}", g.color(v));
    }
    out
}

pub fn parse_cnf(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    for (line, tokens) in content_lines(text) {
        if tokens[0] == "p" {
            if header.is_some() {
                return Err(ParseError::new(line, ParseErrorKind::DuplicateHeader));
            }
            if tokens.len() != 4 || tokens[1] != "cnf" {
                return Err(ParseError::new(
                    line,
                    ParseErrorKind::MalformedHeader(tokens.join(" ")),
                ));
            }
            header = Some((line, number(tokens[2], line)?, number(tokens[3], line)?));
            continue;
        }
        let Some((_, num_vars, _)) = header else {
            return Err(ParseError::new(line, ParseErrorKind::MissingHeader));
        };
        let mut literals = Vec::with_capacity(tokens.len());
        for tok in &tokens {
            let lit: i64 = number(tok, line)?;
            literals.push(lit);
        }
        if literals.last() != Some(&0) || literals[..literals.len() - 1].contains(&0) {
            return Err(ParseError::new(line, ParseErrorKind::ClauseNotTerminated));
        }
        literals.pop();
        let mut clause = Vec::with_capacity(literals.len());
        for lit in literals {
            if lit.unsigned_abs() as usize > num_vars {
                return Err(ParseError::new(
                    line,
                    ParseErrorKind::LiteralOutOfRange(lit),
                ));
            }
            clause.push(lit as i32);
        }
        clauses.push(clause);
    }
    let (line, num_vars, declared) =
        header.ok_or_else(|| ParseError::new(0, ParseErrorKind::MissingHeader))?;
    if clauses.len() != declared {
        return Err(ParseError::new(
            line,
            ParseErrorKind::ClauseCountMismatch {
                declared,
                found: clauses.len(),
            },
        ));
    }
    Ok(CnfFormula::new(num_vars, clauses).expect("literals validated above"))
}

pub fn serialize_cnf(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars, f.clauses.len());
    for clause in &f.clauses {
        for lit in clause {
            let _ = write!(out, "{lit} ");
        }
        out.push_str("0\n");
    }
    out
}

pub fn parse_intervals(text: &str) -> Result<IntervalSet, ParseError> {
    let mut intervals = Vec::new();
    let mut ids = HashSet::new();
    for (line, tokens) in content_lines(text) {
        if tokens[0] != "i" || tokens.len() != 4 {
            return Err(unrecognized(line, &tokens));
        }
        let iv = Interval {
            id: number(tokens[1], line)?,
            left: number(tokens[2], line)?,
            right: number(tokens[3], line)?,
        };
        if iv.left > iv.right {
            return Err(ParseError::new(
                line,
                ParseErrorKind::IntervalReversed {
                    id: iv.id,
                    left: iv.left,
                    right: iv.right,
                },
            ));
        }
        if !ids.insert(iv.id) {
            return Err(ParseError::new(line, ParseErrorKind::DuplicateId(iv.id)));
        }
        intervals.push(iv);
    }
    Ok(IntervalSet { intervals })
}

pub fn serialize_intervals(set: &IntervalSet) -> String {
    let mut out = String::new();
    for iv in &set.intervals {
        let _ = writeln!(out, "i {} {} {}", iv.id, iv.left, iv.right);
    }
    out
}

/// Parses a solution file against `g`, rejecting out-of-range and repeated ids.
pub fn parse_solution(text: &str, g: &Graph) -> Result<Solution, ParseError> {
    let mut members = Vec::new();
    let mut seen = HashSet::new();
    for (line, tokens) in content_lines(text) {
        if tokens.len() != 1 {
            return Err(unrecognized(line, &tokens));
        }
        let v: Vertex = number(tokens[0], line)?;
        g.check(v)
            .map_err(|e| ParseError::new(line, ParseErrorKind::Graph(e)))?;
        if !seen.insert(v) {
            return Err(ParseError::new(
                line,
                ParseErrorKind::Graph(GraphError::DuplicateVertex(v)),
            ));
        }
        members.push(v);
    }
    Ok(Solution::from_unchecked(members))
}

pub fn serialize_solution(s: &Solution) -> String {
    let mut out = String::new();
    for v in s.members() {
        let _ = writeln!(out, "{v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_graphs() {
        let g = parse_graph("p mmds 2 1\ne 1 2").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert!(g.has_edge(1, 2));

        let p3 = parse_graph("c a path\np mmds 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        let err = parse_graph("p mmds 2 1\ne 1 1").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::Graph(GraphError::SelfLoop(1)));

        let err = parse_graph("p mmds 2 2\ne 1 2\ne 2 1").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(
            err.kind,
            ParseErrorKind::Graph(GraphError::DuplicateEdge(1, 2))
        ));

        let err = parse_graph("p mmds 2 1\ne 1 5").unwrap_err();
        assert!(matches!(
            err.kind,
            ParseErrorKind::Graph(GraphError::VertexOutOfRange { vertex: 5, n: 2 })
        ));

        let err = parse_graph("p mmds 3 2\ne 1 2").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::EdgeCountMismatch {
                declared: 2,
                found: 1
            }
        );

        assert!(matches!(
            parse_graph("p tw 2 1\ne 1 2").unwrap_err().kind,
            ParseErrorKind::MalformedHeader(_)
        ));
        assert_eq!(
            parse_graph("e 1 2").unwrap_err().kind,
            ParseErrorKind::MissingHeader
        );
        assert!(matches!(
            parse_graph("p mmds 2 1\nx 1 2").unwrap_err().kind,
            ParseErrorKind::UnrecognizedLine(_)
        ));
    }

    #[test]
    fn serializes_canonically() {
        let p3 = Graph::from_edges(3, [(3, 2), (2, 1)]).unwrap();
        assert_eq!(serialize_graph(&p3), "p mmds 3 2\ne 1 2\ne 2 3\n");
        assert_eq!(serialize_graph(&Graph::empty(1)), "p mmds 1 0\n");
    }

    #[test]
    fn colored_graphs() {
        let cg = parse_colored_graph("p mmds 2 1\ne 1 2\nn 1 1\nn 2 2\n").unwrap();
        assert_eq!(cg.k(), 2);
        assert_eq!(cg.classes(), vec![vec![1], vec![2]]);

        let err = parse_colored_graph("p mmds 2 1\ne 1 2\nn 1 1\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UncoloredVertex(2));
        let err = parse_colored_graph("p mmds 2 1\ne 1 2\nn 1 1\nn 2 3\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::EmptyColorClass(2));
        let err = parse_colored_graph("p mmds 2 1\ne 1 2\nn 1 1\nn 1 2\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::RecoloredVertex(1));
    }

    #[test]
    fn cnf_formulas() {
        let f = parse_cnf("p cnf 3 1\n1 2 3 0").unwrap();
        assert_eq!(f.num_vars, 3);
        assert_eq!(f.clauses, vec![vec![1, 2, 3]]);
        assert!(f.positive_only);

        let f = parse_cnf("c x\np cnf 2 2\n1 -2 0\n2 0\n").unwrap();
        assert!(!f.positive_only);

        assert_eq!(
            parse_cnf("p cnf 3 1\n1 2 3").unwrap_err().kind,
            ParseErrorKind::ClauseNotTerminated
        );
        assert_eq!(
            parse_cnf("p cnf 3 1\n1 0 3 0").unwrap_err().kind,
            ParseErrorKind::ClauseNotTerminated
        );
        assert_eq!(
            parse_cnf("p cnf 2 1\n1 4 0").unwrap_err().kind,
            ParseErrorKind::LiteralOutOfRange(4)
        );
        assert_eq!(
            parse_cnf("p cnf 2 2\n1 0").unwrap_err().kind,
            ParseErrorKind::ClauseCountMismatch {
                declared: 2,
                found: 1
            }
        );
    }

    #[test]
    fn interval_files() {
        let set = parse_intervals("c demo\ni 1 0 2\ni 2 1 3\n").unwrap();
        assert_eq!(set.len(), 2);
        let err = parse_intervals("i 1 5 3").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::IntervalReversed {
                id: 1,
                left: 5,
                right: 3
            }
        );
        assert_eq!(
            parse_intervals("i 1 0 1\ni 1 2 3").unwrap_err().kind,
            ParseErrorKind::DuplicateId(1)
        );
    }

    #[test]
    fn solution_files() {
        let g = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        let s = parse_solution("c witness\n2\n", &g).unwrap();
        assert_eq!(s.members(), &[2]);
        assert!(parse_solution("4\n", &g).is_err());
        assert!(parse_solution("1\n1\n", &g).is_err());
        assert_eq!(serialize_solution(&s), "2\n");
    }
}

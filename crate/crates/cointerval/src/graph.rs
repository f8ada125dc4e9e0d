//! Interval representations and the cointerval graphs they induce.
//!
//! Vertices are relabeled so that left endpoints are non-decreasing (ties keep
//! the input order), and `{i,j}` with `i < j` is an edge exactly when the
//! intervals are disjoint, i.e. `b_i < a_j`. Intervals are closed: touching
//! intervals overlap and do not produce an edge.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::Error;
use crate::monomial::Monomial;

/// Default vertex-count bound for brute-force recognition.
pub const RECOGNITION_BOUND: usize = 8;

/// A list of closed integer intervals, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalRep {
    intervals: Vec<(i64, i64)>,
}

impl IntervalRep {
    pub fn new(intervals: Vec<(i64, i64)>) -> Result<Self, Error> {
        for (k, &(a, b)) in intervals.iter().enumerate() {
            if a > b {
                return Err(Error::InvalidInterval { index: k + 1, a, b });
            }
        }
        Ok(IntervalRep { intervals })
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    /// Reorders intervals so left endpoints are non-decreasing. The sort is
    /// stable: ties keep their input order, so normalizing twice gives the
    /// same labeling.
    pub fn normalize(&self) -> IntervalRep {
        let mut intervals = self.intervals.clone();
        intervals.sort_by_key(|&(a, _)| a);
        IntervalRep { intervals }
    }

    /// Parses the intervals file format: one `<a> <b>` pair per line, `#`
    /// starts a comment.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut intervals = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::parse(
                    k + 1,
                    format!("expected `<a> <b>`, found `{line}`"),
                ));
            }
            let a: i64 = fields[0]
                .parse()
                .map_err(|_| Error::parse(k + 1, format!("bad integer `{}`", fields[0])))?;
            let b: i64 = fields[1]
                .parse()
                .map_err(|_| Error::parse(k + 1, format!("bad integer `{}`", fields[1])))?;
            if a > b {
                return Err(Error::InvalidInterval {
                    index: k + 1,
                    a,
                    b,
                });
            }
            intervals.push((a, b));
        }
        Ok(IntervalRep { intervals })
    }
}

impl fmt::Display for IntervalRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (a, b)) in self.intervals.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{a} {b}")?;
        }
        Ok(())
    }
}

/// A cointerval graph: vertices `1..=n` in normalized interval order, with the
/// disjointness edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CointervalGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<BTreeSet<usize>>,
    source: Option<IntervalRep>,
}

impl CointervalGraph {
    /// Builds the graph from an interval representation, normalizing first.
    pub fn from_intervals(rep: &IntervalRep) -> CointervalGraph {
        let rep = rep.normalize();
        let n = rep.len();
        let mut edges = BTreeSet::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let (_, b_i) = rep.intervals[i];
                let (a_j, _) = rep.intervals[j];
                if b_i < a_j {
                    edges.insert((i + 1, j + 1));
                }
            }
        }
        Self::assemble(n, edges, Some(rep))
    }

    /// Builds the graph from a raw edge list, validating by brute-force
    /// recognition and relabeling to the discovered interval order.
    pub fn from_edges(
        n: usize,
        edges: &[(usize, usize)],
        bound: usize,
    ) -> Result<CointervalGraph, Error> {
        let rep = recognize_cointerval(n, edges, bound)?.ok_or(Error::NotCointerval)?;
        Ok(Self::from_intervals(&rep))
    }

    fn assemble(
        n: usize,
        edges: BTreeSet<(usize, usize)>,
        source: Option<IntervalRep>,
    ) -> CointervalGraph {
        let mut adjacency = vec![BTreeSet::new(); n];
        for &(i, j) in &edges {
            adjacency[i - 1].insert(j);
            adjacency[j - 1].insert(i);
        }
        CointervalGraph {
            n,
            edges,
            adjacency,
            source,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adjacency[i - 1].contains(&j)
    }

    pub fn source(&self) -> Option<&IntervalRep> {
        self.source.as_ref()
    }

    /// All vertices adjacent to `i`.
    pub fn neighbourhood(&self, i: usize) -> &BTreeSet<usize> {
        assert!(i >= 1 && i <= self.n, "vertex {i} out of range 1..={}", self.n);
        &self.adjacency[i - 1]
    }

    /// Neighbours of `i` that are smaller than `i`.
    pub fn pre_neighbourhood(&self, i: usize) -> BTreeSet<usize> {
        self.neighbourhood(i)
            .iter()
            .copied()
            .filter(|&j| j < i)
            .collect()
    }

    /// Generators `x_i * x_j` of the edge ideal, in edge order.
    pub fn edge_ideal_generators(&self) -> Vec<Monomial> {
        self.edges
            .iter()
            .map(|&(i, j)| &Monomial::var(self.n, i) * &Monomial::var(self.n, j))
            .collect()
    }

    /// Membership in the edge ideal: some generator divides `m`.
    pub fn in_edge_ideal(&self, m: &Monomial) -> bool {
        self.edges.iter().any(|&(i, j)| {
            m.exponent(i) >= 1 && m.exponent(j) >= 1
        })
    }

    /// One-line description, e.g. `n=4 edges={1,4} {2,3} {2,4} {3,4}`.
    pub fn describe(&self) -> String {
        let edges = self
            .edges
            .iter()
            .map(|(i, j)| format!("{{{i},{j}}}"))
            .join(" ");
        format!("n={} edges={}", self.n, edges)
    }
}

/// Searches for an interval representation inducing the given edge set.
///
/// Returns `Ok(None)` when the graph is not cointerval, and an error when `n`
/// exceeds `bound`. The search tries vertex orders starting with the input
/// order, so a graph already in normalized cointerval labeling round-trips to
/// the identical edge set.
pub fn recognize_cointerval(
    n: usize,
    edges: &[(usize, usize)],
    bound: usize,
) -> Result<Option<IntervalRep>, Error> {
    if n > bound {
        return Err(Error::RecognitionBound { n, bound });
    }
    let mut adjacency = vec![vec![false; n + 1]; n + 1];
    for &(i, j) in edges {
        for v in [i, j] {
            if v < 1 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if i == j {
            return Err(Error::BadElement(format!("loop at vertex {i}")));
        }
        adjacency[i][j] = true;
        adjacency[j][i] = true;
    }

    // Try each vertex order: position k gets left endpoint k, and the right
    // endpoint must fall below every later disjoint (edge) vertex and at or
    // above every later overlapping (non-edge) vertex.
    for perm in (1..=n).permutations(n) {
        let mut intervals_by_position: Vec<(i64, i64)> = Vec::with_capacity(n);
        let mut feasible = true;
        for pos_i in 0..n {
            let v_i = perm[pos_i];
            let mut lo = (pos_i + 1) as i64;
            let mut hi = i64::MAX;
            for (pos_j, &v_j) in perm.iter().enumerate().skip(pos_i + 1) {
                if adjacency[v_i][v_j] {
                    hi = hi.min((pos_j + 1) as i64);
                } else {
                    lo = lo.max((pos_j + 1) as i64);
                }
            }
            if lo >= hi {
                feasible = false;
                break;
            }
            intervals_by_position.push(((pos_i + 1) as i64, lo));
        }
        if !feasible {
            continue;
        }
        // Hand intervals back in the caller's vertex order.
        let mut intervals = vec![(0i64, 0i64); n];
        for (pos, &v) in perm.iter().enumerate() {
            intervals[v - 1] = intervals_by_position[pos];
        }
        let rep = IntervalRep { intervals };
        debug_assert!({
            let rebuilt = CointervalGraph::from_intervals(&rep);
            let relabeled: BTreeSet<(usize, usize)> = edges
                .iter()
                .map(|&(i, j)| {
                    let pi = perm.iter().position(|&v| v == i).unwrap() + 1;
                    let pj = perm.iter().position(|&v| v == j).unwrap() + 1;
                    (pi.min(pj), pi.max(pj))
                })
                .collect();
            rebuilt.edges == relabeled
        });
        return Ok(Some(rep));
    }
    Ok(None)
}

/// Parses the graph file format: first line `n`, then one `i j` edge per
/// line; `#` starts a comment.
pub fn parse_graph_file(text: &str) -> Result<(usize, Vec<(usize, usize)>), Error> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match n {
            None => {
                n = Some(line.parse().map_err(|_| {
                    Error::parse(k + 1, format!("expected vertex count, found `{line}`"))
                })?);
            }
            Some(count) => {
                let fields: Vec<&str> = line.split_whitespace().collect();
                if fields.len() != 2 {
                    return Err(Error::parse(k + 1, format!("expected `i j`, found `{line}`")));
                }
                let i: usize = fields[0]
                    .parse()
                    .map_err(|_| Error::parse(k + 1, format!("bad vertex `{}`", fields[0])))?;
                let j: usize = fields[1]
                    .parse()
                    .map_err(|_| Error::parse(k + 1, format!("bad vertex `{}`", fields[1])))?;
                for v in [i, j] {
                    if v < 1 || v > count {
                        return Err(Error::parse(
                            k + 1,
                            format!("vertex {v} out of range 1..={count}"),
                        ));
                    }
                }
                edges.push((i, j));
            }
        }
    }
    match n {
        Some(count) => Ok((count, edges)),
        None => Err(Error::parse(1, "missing vertex count")),
    }
}

/// The worked four-vertex example used throughout the tests: intervals
/// `[0,3] [0,1] [2,3] [4,5]`, edges `{1,4} {2,3} {2,4} {3,4}`.
pub fn example_graph() -> CointervalGraph {
    let rep = IntervalRep::new(vec![(0, 3), (0, 1), (2, 3), (4, 5)]).unwrap();
    CointervalGraph::from_intervals(&rep)
}

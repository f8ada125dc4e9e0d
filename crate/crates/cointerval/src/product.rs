//! The multiplication on the resolution.
//!
//! The product of two basis elements is computed by lifting through the
//! contracting homotopy: products with the unit are the identity, and for
//! positive degrees
//!
//! ```text
//! e1 * e2 = c( d(e1) * e2 + (-1)^|e1| e1 * d(e2) )
//! ```
//!
//! computed recursively with memoization on ordered basis pairs (the total
//! degree strictly decreases). The closed form for degree-1 pairs is kept as
//! an independent oracle: it is never the computation path, so a disagreement
//! between the two is detectable.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Mutex;

use num_bigint::BigInt;
use serde::Serialize;

use crate::basis::BasisElement;
use crate::chain::{Chain, Term};
use crate::graph::CointervalGraph;
use crate::homotopy::homotopy_chain_with;
use crate::monomial::Monomial;
use crate::resolution::{cell_strict, differential_basis_with, enumerate_basis, SignConvention};

/// Product engine for one graph: holds the memo table of basis-pair
/// products. The memo mutex is never held across a recursive call;
/// recomputing a pair is idempotent, so concurrent callers may race on
/// insertion.
pub struct Multiplier<'g> {
    graph: &'g CointervalGraph,
    signs: SignConvention,
    memo: Mutex<HashMap<(BasisElement, BasisElement), Chain>>,
}

impl<'g> Multiplier<'g> {
    pub fn new(graph: &'g CointervalGraph) -> Self {
        Self::with_signs(graph, SignConvention::STANDARD)
    }

    pub fn with_signs(graph: &'g CointervalGraph, signs: SignConvention) -> Self {
        Multiplier {
            graph,
            signs,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn graph(&self) -> &CointervalGraph {
        self.graph
    }

    /// The product of two basis elements.
    pub fn star(&self, e1: &BasisElement, e2: &BasisElement) -> Chain {
        if e1.is_unit() {
            return Chain::from_term(Term::new(1, Monomial::unit(self.graph.n()), e2.clone()));
        }
        if e2.is_unit() {
            return Chain::from_term(Term::new(1, Monomial::unit(self.graph.n()), e1.clone()));
        }
        let key = (e1.clone(), e2.clone());
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let d1 = differential_basis_with(self.graph, e1, self.signs);
        let d2 = differential_basis_with(self.graph, e2, self.signs);
        let left = self.star_chains(&d1, &Chain::from_term(unit_term(self.graph.n(), e2)));
        let right = self.star_chains(&Chain::from_term(unit_term(self.graph.n(), e1)), &d2);
        let inner = if e1.degree().is_multiple_of(2) {
            &left + &right
        } else {
            &left - &right
        };
        let result = homotopy_chain_with(self.graph, &inner, self.signs);
        self.memo.lock().unwrap().insert(key, result.clone());
        result
    }

    /// Bilinear extension of the product to chains.
    pub fn star_chains(&self, u: &Chain, v: &Chain) -> Chain {
        let mut out = Chain::zero(u.degree() + v.degree());
        for s in u.terms() {
            for t in v.terms() {
                let product = self.star(&s.basis, &t.basis);
                let coeff = &s.coeff * &t.coeff;
                let monomial = &s.monomial * &t.monomial;
                for term in product.terms() {
                    out.add_term(Term::new(
                        term.coeff * &coeff,
                        &term.monomial * &monomial,
                        term.basis,
                    ));
                }
            }
        }
        out
    }
}

fn unit_term(n: usize, e: &BasisElement) -> Term {
    Term::new(1, Monomial::unit(n), e.clone())
}

/// One-off product without reusing a memo table.
pub fn star(g: &CointervalGraph, e1: &BasisElement, e2: &BasisElement) -> Chain {
    Multiplier::new(g).star(e1, e2)
}

/// One-off bilinear product of chains.
pub fn star_chains(g: &CointervalGraph, u: &Chain, v: &Chain) -> Chain {
    Multiplier::new(g).star_chains(u, v)
}

/// The closed form for products of degree-1 cells `[s1|t1] * [s2|t2]`, split
/// into nine cases by the signs of `t1 - t2` and `s1 - s2`.
pub fn degree1_product_closed_form(
    g: &CointervalGraph,
    e1: &BasisElement,
    e2: &BasisElement,
) -> Chain {
    assert_eq!(e1.degree(), 1, "closed form needs degree-1 cells");
    assert_eq!(e2.degree(), 1, "closed form needs degree-1 cells");
    let (s1, t1) = (e1.min_sigma(), e1.max_tau());
    let (s2, t2) = (e2.min_sigma(), e2.max_tau());
    let n = g.n();
    let var = |i: usize| Monomial::var(n, i);
    let pair = |a: usize, b: usize| -> Vec<usize> {
        let mut v = vec![a, b];
        v.sort_unstable();
        v
    };
    let mut out = Chain::zero(2);
    let mut push = |sign: i64, m: Monomial, sigma: &[usize], tau: &[usize]| {
        out.add_term(Term::new(BigInt::from(sign), m, cell_strict(g, sigma, tau)));
    };
    use std::cmp::Ordering::*;
    match (t1.cmp(&t2), s1.cmp(&s2)) {
        (Greater, Less) => {
            push(1, var(s1), &[s2], &pair(t2, t1));
            push(1, var(t2), &pair(s1, s2), &[t1]);
        }
        (Greater, Equal) => push(1, var(s1), &[s2], &pair(t2, t1)),
        (Greater, Greater) => {
            push(1, var(s1), &[s2], &pair(t2, t1));
            push(-1, var(t2), &pair(s2, s1), &[t1]);
        }
        (Equal, Less) => push(1, var(t1), &pair(s1, s2), &[t2]),
        (Equal, Equal) => {}
        (Equal, Greater) => push(-1, var(t2), &pair(s2, s1), &[t1]),
        (Less, Less) => {
            push(1, var(t1), &pair(s1, s2), &[t2]);
            push(-1, var(s2), &[s1], &pair(t1, t2));
        }
        (Less, Equal) => push(-1, var(s2), &[s1], &pair(t1, t2)),
        (Less, Greater) => {
            push(-1, var(s2), &[s1], &pair(t1, t2));
            push(-1, var(t1), &pair(s2, s1), &[t2]);
        }
    }
    out
}

/// Upper-triangular table of pairwise products with graded-commutative
/// reconstruction of the lower triangle.
#[derive(Clone, Debug)]
pub struct ProductTable {
    pub max_total_degree: usize,
    entries: BTreeMap<(BasisElement, BasisElement), Chain>,
    /// `(degree, index within degree)` position of every stored basis
    /// element; the stored pair is the one with the smaller position first.
    positions: HashMap<BasisElement, (usize, usize)>,
}

/// One table entry in the JSON export.
#[derive(Clone, Debug, Serialize)]
pub struct ProductRow {
    pub left: BasisElement,
    pub right: BasisElement,
    pub chain: Vec<Term>,
}

impl ProductTable {
    pub fn get(&self, e1: &BasisElement, e2: &BasisElement) -> Option<Chain> {
        if let Some(chain) = self.entries.get(&(e1.clone(), e2.clone())) {
            return Some(chain.clone());
        }
        let transposed = self.entries.get(&(e2.clone(), e1.clone()))?;
        let sign = if (e1.degree() * e2.degree()).is_multiple_of(2) {
            BigInt::from(1)
        } else {
            BigInt::from(-1)
        };
        Some(transposed.scaled(&sign))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn rows(&self) -> Vec<ProductRow> {
        self.entries
            .iter()
            .map(|((left, right), chain)| ProductRow {
                left: left.clone(),
                right: right.clone(),
                chain: chain.terms().collect(),
            })
            .collect()
    }

    pub fn position(&self, e: &BasisElement) -> Option<(usize, usize)> {
        self.positions.get(e).copied()
    }
}

/// All pairwise products of positive-degree basis elements with
/// `|e1| + |e2| <= max_total_degree`, stored upper-triangularly.
pub fn multiplication_table(g: &CointervalGraph, max_total_degree: usize) -> ProductTable {
    let mult = Multiplier::new(g);
    let mut positions = HashMap::new();
    let mut by_degree: Vec<Vec<BasisElement>> = Vec::new();
    for d in 1..=max_total_degree.saturating_sub(1) {
        let basis = enumerate_basis(g, d);
        if basis.is_empty() {
            break;
        }
        for (k, e) in basis.iter().enumerate() {
            positions.insert(e.clone(), (d, k));
        }
        by_degree.push(basis);
    }
    let all: Vec<BasisElement> = by_degree.iter().flatten().cloned().collect();
    let mut entries = BTreeMap::new();
    for e1 in &all {
        for e2 in &all {
            if positions[e1] > positions[e2] {
                continue;
            }
            if e1.degree() + e2.degree() > max_total_degree {
                continue;
            }
            entries.insert((e1.clone(), e2.clone()), mult.star(e1, e2));
        }
    }
    ProductTable {
        max_total_degree,
        entries,
        positions,
    }
}

/// Degree-forced zero: two cells sharing two or more support vertices have a
/// product of zero for multidegree reasons, so tables leave those blank.
pub fn forced_zero(e1: &BasisElement, e2: &BasisElement) -> bool {
    let s2: std::collections::BTreeSet<usize> = e2.support().into_iter().collect();
    e1.support().iter().filter(|v| s2.contains(v)).count() >= 2
}

/// Plain-text product table for one degree pair, mirroring the shape of the
/// worked tables: row labels down the side, column labels across the top,
/// blank entries on and below the diagonal for equal degrees and on
/// degree-forced zeros for mixed degrees.
pub fn render_degree_pair_table(
    g: &CointervalGraph,
    left_degree: usize,
    right_degree: usize,
) -> String {
    let mult = Multiplier::new(g);
    let rows = enumerate_basis(g, left_degree);
    let cols = enumerate_basis(g, right_degree);
    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut header: Vec<String> = vec!["*".to_string()];
    header.extend(cols.iter().map(|e| e.to_string()));
    grid.push(header);
    for (i, e1) in rows.iter().enumerate() {
        let mut line = vec![e1.to_string()];
        for (j, e2) in cols.iter().enumerate() {
            let blank = if left_degree == right_degree {
                j <= i
            } else {
                forced_zero(e1, e2)
            };
            line.push(if blank {
                String::new()
            } else {
                mult.star(e1, e2).to_string()
            });
        }
        grid.push(line);
    }
    render_grid(&grid)
}

fn render_grid(grid: &[Vec<String>]) -> String {
    let cols = grid.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| grid.iter().filter_map(|r| r.get(j)).map(|s| s.len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in grid {
        let mut line = String::new();
        for (j, cell) in row.iter().enumerate() {
            if j > 0 {
                line.push_str("  ");
            }
            write!(line, "{cell:width$}", width = widths[j]).unwrap();
        }
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    out
}

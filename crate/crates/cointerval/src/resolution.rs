//! The free resolution of the edge-ideal quotient of a cointerval graph: the
//! basis cells `[sigma|tau]`, the differential with its signs, the auxiliary
//! extremal boundary, multidegree strands, and Betti tables.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::basis::{table_order, BasisElement};
use crate::chain::{Chain, Term};
use crate::graph::CointervalGraph;
use crate::monomial::Monomial;

/// Sign constants of the three maps, as a single injectable bundle.
///
/// The standard convention is the one the identities hold for; the flipped
/// variants exist so the verification suites can demonstrate that every sign
/// is load-bearing (a flipped constant must make some suite fail).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct SignConvention {
    /// Adds 1 to the sign exponent of the sigma-deletion terms of the
    /// differential.
    pub flip_differential_sigma_sign: bool,
    /// Flips the sign of the min-sigma term of the extremal boundary.
    pub flip_partial_min_sigma_sign: bool,
    /// Replaces the `(-1)^(|sigma|+1)` factor in the contracting homotopy by
    /// `(-1)^|sigma|`.
    pub flip_homotopy_sigma_parity: bool,
}

impl SignConvention {
    pub const STANDARD: SignConvention = SignConvention {
        flip_differential_sigma_sign: false,
        flip_partial_min_sigma_sign: false,
        flip_homotopy_sigma_parity: false,
    };
}

fn sign_from_parity(parity: usize) -> BigInt {
    if parity.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// Builds `[sigma|tau]` when the parts satisfy every basis condition for `g`,
/// and `None` otherwise. Symbols arising from the differential formulas that
/// fail these conditions contribute zero.
pub fn try_cell(g: &CointervalGraph, sigma: &[usize], tau: &[usize]) -> Option<BasisElement> {
    if !BasisElement::structurally_valid(sigma, tau) {
        return None;
    }
    if *tau.last().unwrap() > g.n() {
        return None;
    }
    let min_tau = tau[0];
    if !sigma.iter().all(|&i| g.has_edge(i, min_tau)) {
        return None;
    }
    Some(BasisElement::Cell {
        sigma: sigma.to_vec(),
        tau: tau.to_vec(),
    })
}

/// Like [`try_cell`] but panics on an invalid symbol. The contracting
/// homotopy uses this: its formulas guarantee validity, so a failure is a
/// bug, never a silent zero.
pub fn cell_strict(g: &CointervalGraph, sigma: &[usize], tau: &[usize]) -> BasisElement {
    try_cell(g, sigma, tau).unwrap_or_else(|| {
        panic!("homotopy emitted invalid basis symbol [{sigma:?}|{tau:?}]")
    })
}

/// Whether `e` is a basis element of the resolution of `g`.
pub fn is_basis_element(g: &CointervalGraph, e: &BasisElement) -> bool {
    match e {
        BasisElement::Unit => true,
        BasisElement::Cell { sigma, tau } => try_cell(g, sigma, tau).is_some(),
    }
}

/// All basis elements of homological degree `d`, in table order (support
/// lexicographic, then larger sigma first). Degree 0 yields the unit alone.
pub fn enumerate_basis(g: &CointervalGraph, d: usize) -> Vec<BasisElement> {
    if d == 0 {
        return vec![BasisElement::Unit];
    }
    let mut out = Vec::new();
    for support in (1..=g.n()).combinations(d + 1) {
        // max(sigma) < min(tau) forces sigma to be a prefix of the support.
        for cut in (1..=d).rev() {
            let (sigma, tau) = support.split_at(cut);
            if let Some(cell) = try_cell(g, sigma, tau) {
                out.push(cell);
            }
        }
    }
    debug_assert!(out.windows(2).all(|w| table_order(&w[0], &w[1]).is_lt()));
    out
}

/// Basis lists for every degree, `0..=projective dimension`.
pub fn all_bases(g: &CointervalGraph) -> Vec<Vec<BasisElement>> {
    let mut out = vec![enumerate_basis(g, 0)];
    for d in 1.. {
        let basis = enumerate_basis(g, d);
        if basis.is_empty() {
            break;
        }
        out.push(basis);
    }
    out
}

/// The differential applied to a single basis element (coefficient 1, unit
/// monomial). Panics on degree-0 input.
pub fn differential_basis(g: &CointervalGraph, e: &BasisElement) -> Chain {
    differential_basis_with(g, e, SignConvention::STANDARD)
}

pub fn differential_basis_with(
    g: &CointervalGraph,
    e: &BasisElement,
    signs: SignConvention,
) -> Chain {
    let (sigma, tau) = match e {
        BasisElement::Unit => panic!("differential of a degree-0 element"),
        BasisElement::Cell { sigma, tau } => (sigma, tau),
    };
    let d = e.degree();
    let mut out = Chain::zero(d - 1);
    if d == 1 {
        out.add_term(Term::new(
            1,
            &Monomial::var(g.n(), sigma[0]) * &Monomial::var(g.n(), tau[0]),
            BasisElement::Unit,
        ));
        return out;
    }
    let flip = usize::from(signs.flip_differential_sigma_sign);
    for (k, &i) in sigma.iter().enumerate() {
        let rest: Vec<usize> = sigma
            .iter()
            .copied()
            .filter(|&j| j != i)
            .collect();
        if let Some(cell) = try_cell(g, &rest, tau) {
            // sign exponent |tau| + #{j in sigma : j > i}
            let parity = tau.len() + (sigma.len() - 1 - k) + flip;
            out.add_term(Term::new(
                sign_from_parity(parity),
                Monomial::var(g.n(), i),
                cell,
            ));
        }
    }
    for (k, &i) in tau.iter().enumerate() {
        let rest: Vec<usize> = tau.iter().copied().filter(|&j| j != i).collect();
        if let Some(cell) = try_cell(g, sigma, &rest) {
            // sign exponent #{j in tau : j > i}
            let parity = tau.len() - 1 - k;
            out.add_term(Term::new(
                sign_from_parity(parity),
                Monomial::var(g.n(), i),
                cell,
            ));
        }
    }
    out
}

/// S-linear extension of the differential to a term.
pub fn differential(g: &CointervalGraph, t: &Term) -> Chain {
    differential_with(g, t, SignConvention::STANDARD)
}

pub fn differential_with(g: &CointervalGraph, t: &Term, signs: SignConvention) -> Chain {
    let base = differential_basis_with(g, &t.basis, signs);
    let mut out = Chain::zero(base.degree());
    for term in base.terms() {
        out.add_term(Term::new(
            term.coeff * &t.coeff,
            &term.monomial * &t.monomial,
            term.basis,
        ));
    }
    out
}

/// The differential applied to a whole chain.
pub fn differential_chain(g: &CointervalGraph, chain: &Chain) -> Chain {
    differential_chain_with(g, chain, SignConvention::STANDARD)
}

pub fn differential_chain_with(
    g: &CointervalGraph,
    chain: &Chain,
    signs: SignConvention,
) -> Chain {
    assert!(chain.degree() >= 1, "differential of a degree-0 chain");
    let mut out = Chain::zero(chain.degree() - 1);
    for t in chain.terms() {
        out = &out + &differential_with(g, &t, signs);
    }
    out
}

/// The extremal boundary: only the max-tau deletion and the min-sigma
/// deletion survive, with the sign `-(-1)^(|tau|+|sigma|)` on the latter.
/// Non-existent symbols contribute zero.
pub fn partial_boundary_basis(g: &CointervalGraph, e: &BasisElement) -> Chain {
    partial_boundary_basis_with(g, e, SignConvention::STANDARD)
}

pub fn partial_boundary_basis_with(
    g: &CointervalGraph,
    e: &BasisElement,
    signs: SignConvention,
) -> Chain {
    let (sigma, tau) = match e {
        BasisElement::Unit => panic!("extremal boundary of a degree-0 element"),
        BasisElement::Cell { sigma, tau } => (sigma, tau),
    };
    let d = e.degree();
    let mut out = Chain::zero(d - 1);
    if d == 1 {
        out.add_term(Term::new(
            1,
            &Monomial::var(g.n(), sigma[0]) * &Monomial::var(g.n(), tau[0]),
            BasisElement::Unit,
        ));
        return out;
    }
    let max_tau = *tau.last().unwrap();
    let tau_rest: Vec<usize> = tau[..tau.len() - 1].to_vec();
    if let Some(cell) = try_cell(g, sigma, &tau_rest) {
        out.add_term(Term::new(1, Monomial::var(g.n(), max_tau), cell));
    }
    let min_sigma = sigma[0];
    let sigma_rest: Vec<usize> = sigma[1..].to_vec();
    if let Some(cell) = try_cell(g, &sigma_rest, tau) {
        let mut parity = tau.len() + sigma.len() + 1;
        if signs.flip_partial_min_sigma_sign {
            parity += 1;
        }
        out.add_term(Term::new(
            sign_from_parity(parity),
            Monomial::var(g.n(), min_sigma),
            cell,
        ));
    }
    out
}

/// S-linear extension of the extremal boundary to a term.
pub fn partial_boundary(g: &CointervalGraph, t: &Term) -> Chain {
    partial_boundary_with(g, t, SignConvention::STANDARD)
}

pub fn partial_boundary_with(g: &CointervalGraph, t: &Term, signs: SignConvention) -> Chain {
    let base = partial_boundary_basis_with(g, &t.basis, signs);
    let mut out = Chain::zero(base.degree());
    for term in base.terms() {
        out.add_term(Term::new(
            term.coeff * &t.coeff,
            &term.monomial * &t.monomial,
            term.basis,
        ));
    }
    out
}

pub fn partial_boundary_chain(g: &CointervalGraph, chain: &Chain) -> Chain {
    assert!(chain.degree() >= 1, "extremal boundary of a degree-0 chain");
    let mut out = Chain::zero(chain.degree() - 1);
    for t in chain.terms() {
        out = &out + &partial_boundary(g, &t);
    }
    out
}

/// Normal form of a monomial in the quotient ring: `Some(m)` when `m` lies
/// outside the edge ideal, `None` when it maps to zero.
pub fn augmentation(g: &CointervalGraph, m: &Monomial) -> Option<Monomial> {
    if g.in_edge_ideal(m) {
        None
    } else {
        Some(m.clone())
    }
}

/// The slice of the resolution in one squarefree multidegree: ordered bases
/// per degree and the integer matrices of the differential between them.
///
/// A cell belongs to the strand on `support` exactly when its vertex set is
/// contained in `support`; it is carried by the cofactor monomial on the
/// complementary vertices. The strand of an arbitrary multidegree `alpha`
/// coincides with the strand of `supp(alpha)`: the basis elements are the
/// same cells (only the cofactors change) and the matrices are identical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrandComplex {
    pub support: Vec<usize>,
    /// Basis lists per homological degree, `0..=top`.
    pub bases: Vec<Vec<BasisElement>>,
    /// `matrices[k]` is the matrix of the differential from degree `k+1` to
    /// degree `k`: rows indexed by `bases[k]`, columns by `bases[k+1]`,
    /// entries in `{-1, 0, 1}`.
    pub matrices: Vec<Vec<Vec<i64>>>,
}

impl StrandComplex {
    /// Dimension of the strand in each degree.
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.len()).collect()
    }

    /// Cofactor monomial carrying a strand basis element.
    pub fn cofactor(&self, n: usize, e: &BasisElement) -> Monomial {
        let support: BTreeSet<usize> = self.support.iter().copied().collect();
        let cell_support: BTreeSet<usize> = e.support().into_iter().collect();
        Monomial::squarefree(n, support.difference(&cell_support).copied())
    }
}

pub fn strand_complex(g: &CointervalGraph, support: &BTreeSet<usize>) -> StrandComplex {
    strand_complex_with(g, support, SignConvention::STANDARD)
}

pub fn strand_complex_with(
    g: &CointervalGraph,
    support: &BTreeSet<usize>,
    signs: SignConvention,
) -> StrandComplex {
    let mut bases: Vec<Vec<BasisElement>> = vec![vec![BasisElement::Unit]];
    for d in 1.. {
        let level: Vec<BasisElement> = enumerate_basis(g, d)
            .into_iter()
            .filter(|e| e.support().iter().all(|v| support.contains(v)))
            .collect();
        if level.is_empty() {
            break;
        }
        bases.push(level);
    }
    let mut matrices = Vec::new();
    for d in 1..bases.len() {
        let row_index: std::collections::HashMap<&BasisElement, usize> = bases[d - 1]
            .iter()
            .enumerate()
            .map(|(k, e)| (e, k))
            .collect();
        let mut matrix = vec![vec![0i64; bases[d].len()]; bases[d - 1].len()];
        for (col, e) in bases[d].iter().enumerate() {
            for term in differential_basis_with(g, e, signs).terms() {
                let row = row_index[&term.basis];
                let coeff: i64 = i64::try_from(&term.coeff).expect("strand coefficient fits i64");
                matrix[row][col] += coeff;
            }
        }
        matrices.push(matrix);
    }
    StrandComplex {
        support: support.iter().copied().collect(),
        bases,
        matrices,
    }
}

/// Ranks of the free modules per homological degree and squarefree
/// multidegree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: std::collections::BTreeMap<(usize, Monomial), usize>,
}

/// One row of the JSON export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRow {
    pub degree: usize,
    pub multidegree: Vec<u32>,
    pub rank: usize,
}

impl BettiTable {
    pub fn insert(&mut self, degree: usize, multidegree: Monomial, rank: usize) {
        if rank > 0 {
            *self.entries.entry((degree, multidegree)).or_insert(0) += rank;
        }
    }

    pub fn get(&self, degree: usize, multidegree: &Monomial) -> usize {
        self.entries
            .get(&(degree, multidegree.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Monomial, usize)> {
        self.entries.iter().map(|((d, m), &r)| (*d, m, r))
    }

    /// Total Betti number in each homological degree, `0..=top`.
    pub fn totals(&self) -> Vec<usize> {
        let top = self.entries.keys().map(|(d, _)| *d).max().unwrap_or(0);
        let mut totals = vec![0; top + 1];
        for ((d, _), r) in &self.entries {
            totals[*d] += r;
        }
        totals
    }

    pub fn rows(&self) -> Vec<BettiRow> {
        self.entries
            .iter()
            .map(|((degree, multidegree), &rank)| BettiRow {
                degree: *degree,
                multidegree: multidegree.exponents().to_vec(),
                rank,
            })
            .collect()
    }
}

/// Betti table read off the basis cells: rank = number of cells per degree
/// and multidegree.
pub fn betti_table(g: &CointervalGraph) -> BettiTable {
    let mut table = BettiTable::default();
    for (d, basis) in all_bases(g).iter().enumerate() {
        for e in basis {
            table.insert(d, e.multidegree(g.n()), 1);
        }
    }
    table
}

/// Minimality: no differential coefficient is a nonzero scalar.
pub fn is_minimal(g: &CointervalGraph) -> bool {
    all_bases(g).iter().skip(1).all(|basis| {
        basis.iter().all(|e| {
            differential_basis(g, e)
                .terms()
                .all(|t| t.monomial.total_degree() >= 1)
        })
    })
}

/// Plain-text basis table, one `degree d: ...` line per degree.
pub fn render_basis_table(g: &CointervalGraph) -> String {
    let mut out = String::new();
    for (d, basis) in all_bases(g).iter().enumerate() {
        let cells = basis.iter().map(|e| e.to_string()).join(", ");
        writeln!(out, "degree {d}: {cells}").unwrap();
    }
    out
}

/// Everything `resolve` exports: graph, bases, and all differentials. The
/// JSON form of this struct round-trips to identical internal objects.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResolutionExport {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Basis lists per degree, `0..=top`.
    pub basis: Vec<Vec<BasisElement>>,
    /// `differentials[k]` lists the differential of each degree-(k+1) basis
    /// element, in basis order.
    pub differentials: Vec<Vec<Chain>>,
}

impl ResolutionExport {
    pub fn compute(g: &CointervalGraph) -> ResolutionExport {
        let basis = all_bases(g);
        let differentials = basis
            .iter()
            .skip(1)
            .map(|level| {
                level
                    .iter()
                    .map(|e| differential_basis(g, e))
                    .collect()
            })
            .collect();
        ResolutionExport {
            n: g.n(),
            edges: g.edges().iter().copied().collect(),
            basis,
            differentials,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::example_graph;

    fn chain(s: &str, degree: usize) -> Chain {
        Chain::parse(s, 4, degree).unwrap()
    }

    fn cell(s: &str) -> BasisElement {
        BasisElement::parse(s).unwrap()
    }

    #[test]
    fn example_basis_tables() {
        let g = example_graph();
        let degree1: Vec<String> = enumerate_basis(&g, 1).iter().map(|e| e.to_string()).collect();
        assert_eq!(degree1, vec!["[1|4]", "[2|3]", "[2|4]", "[3|4]"]);
        let degree2: Vec<String> = enumerate_basis(&g, 2).iter().map(|e| e.to_string()).collect();
        assert_eq!(degree2, vec!["[1,2|4]", "[1,3|4]", "[2,3|4]", "[2|3,4]"]);
        let degree3: Vec<String> = enumerate_basis(&g, 3).iter().map(|e| e.to_string()).collect();
        assert_eq!(degree3, vec!["[1,2,3|4]"]);
        assert!(enumerate_basis(&g, 4).is_empty());
        assert_eq!(enumerate_basis(&g, 0), vec![BasisElement::Unit]);
    }

    #[test]
    fn differential_of_the_example_cells() {
        let g = example_graph();
        let d = |s: &str| differential_basis(&g, &cell(s));
        assert_eq!(d("[1|4]"), chain("x1*x4", 0));
        assert_eq!(d("[1,2|4]"), chain("x1*[2|4] - x2*[1|4]", 1));
        assert_eq!(d("[2|3,4]"), chain("x4*[2|3] - x3*[2|4]", 1));
        assert_eq!(
            d("[1,2,3|4]"),
            chain("-x1*[2,3|4] + x2*[1,3|4] - x3*[1,2|4]", 2)
        );
    }

    #[test]
    fn differential_squares_to_zero_on_the_example() {
        let g = example_graph();
        for d in 2..=3 {
            for e in enumerate_basis(&g, d) {
                let once = differential_basis(&g, &e);
                let twice = differential_chain(&g, &once);
                assert!(twice.is_zero(), "d²[{e}] = {twice}");
            }
        }
        // The augmentation kills the image of the first differential.
        for e in enumerate_basis(&g, 1) {
            for t in differential_basis(&g, &e).terms() {
                assert_eq!(augmentation(&g, &t.monomial), None);
            }
        }
    }

    #[test]
    fn differential_preserves_multidegree_and_drops_degree() {
        let g = example_graph();
        for d in 1..=3 {
            for e in enumerate_basis(&g, d) {
                let image = differential_basis(&g, &e);
                assert_eq!(image.degree(), d - 1);
                assert_eq!(image.multidegree(), Some(e.multidegree(4)));
                if d >= 2 {
                    let partial = partial_boundary_basis(&g, &e);
                    assert_eq!(partial.degree(), d - 1);
                    if !partial.is_zero() {
                        assert_eq!(partial.multidegree(), Some(e.multidegree(4)));
                    }
                }
            }
        }
    }

    #[test]
    fn extremal_boundary_of_the_example_cells() {
        let g = example_graph();
        let p = |s: &str| partial_boundary_basis(&g, &cell(s));
        assert_eq!(p("[1|4]"), chain("x1*x4", 0));
        assert_eq!(p("[2|3,4]"), chain("x4*[2|3]", 1));
        assert_eq!(p("[1,2,3|4]"), chain("-x1*[2,3|4]", 2));
    }

    #[test]
    fn augmentation_is_the_normal_form() {
        let g = example_graph();
        let m = |s: &str| Monomial::parse(s, 4).unwrap();
        assert_eq!(augmentation(&g, &m("x1*x2")), Some(m("x1*x2")));
        assert_eq!(augmentation(&g, &m("x1*x4")), None);
        assert_eq!(augmentation(&g, &m("1")), Some(m("1")));
    }

    #[test]
    fn strand_on_124_has_the_expected_shape() {
        let g = example_graph();
        let strand = strand_complex(&g, &BTreeSet::from([1, 2, 4]));
        assert_eq!(strand.dims(), vec![1, 2, 1]);
        // Consecutive matrices compose to zero: (1x2) * (2x1).
        let d1 = &strand.matrices[0];
        let d2 = &strand.matrices[1];
        let product: i64 = (0..2).map(|k| d1[0][k] * d2[k][0]).sum();
        assert_eq!(product, 0);
        // Cofactor of [1|4] in the {1,2,4} strand is x2.
        assert_eq!(
            strand.cofactor(4, &cell("[1|4]")),
            Monomial::parse("x2", 4).unwrap()
        );
    }

    #[test]
    fn strand_edge_cases() {
        let g = example_graph();
        let empty = strand_complex(&g, &BTreeSet::new());
        assert_eq!(empty.dims(), vec![1]);
        let full = strand_complex(&g, &BTreeSet::from([1, 2, 3, 4]));
        assert_eq!(full.dims(), vec![1, 4, 4, 1]);
        for m in full.matrices.iter().flatten().flatten() {
            assert!((-1..=1).contains(m));
        }
    }

    #[test]
    fn strand_of_a_multidegree_reduces_to_its_support() {
        let g = example_graph();
        // Independent construction from a non-squarefree multidegree: the
        // basis is the cells whose multidegree divides alpha, i.e. whose
        // support lies in supp(alpha).
        let alpha = Monomial::parse("x1^3*x2*x4^2", 4).unwrap();
        let support: BTreeSet<usize> = alpha.support().into_iter().collect();
        let mut bases_from_alpha: Vec<Vec<BasisElement>> = vec![vec![BasisElement::Unit]];
        for d in 1.. {
            let level: Vec<BasisElement> = enumerate_basis(&g, d)
                .into_iter()
                .filter(|e| e.multidegree(4).divides(&alpha))
                .collect();
            if level.is_empty() {
                break;
            }
            bases_from_alpha.push(level);
        }
        let strand = strand_complex(&g, &support);
        assert_eq!(strand.bases, bases_from_alpha);
    }

    #[test]
    fn betti_of_the_example_is_1_4_4_1() {
        let g = example_graph();
        let table = betti_table(&g);
        assert_eq!(table.totals(), vec![1, 4, 4, 1]);
        let m = |s: &str| Monomial::parse(s, 4).unwrap();
        assert_eq!(table.get(2, &m("x2*x3*x4")), 2);
        assert_eq!(table.get(2, &m("x1*x2*x4")), 1);
        assert_eq!(table.get(3, &m("x1*x2*x3*x4")), 1);
        assert_eq!(table.get(1, &m("x1*x4")), 1);
    }

    #[test]
    fn edgeless_graph_resolves_in_degree_zero() {
        let rep = crate::graph::IntervalRep::new(vec![(0, 5), (1, 4)]).unwrap();
        let g = CointervalGraph::from_intervals(&rep);
        assert!(g.edges().is_empty());
        assert_eq!(betti_table(&g).totals(), vec![1]);
        assert_eq!(all_bases(&g).len(), 1);
    }

    #[test]
    fn the_example_resolution_is_minimal() {
        assert!(is_minimal(&example_graph()));
    }

    #[test]
    fn flipped_sigma_sign_changes_the_differential() {
        let g = example_graph();
        let flipped = SignConvention {
            flip_differential_sigma_sign: true,
            ..SignConvention::STANDARD
        };
        assert_eq!(
            differential_basis_with(&g, &cell("[1,2|4]"), flipped),
            chain("-x1*[2|4] + x2*[1|4]", 1)
        );
    }

    #[test]
    fn render_basis_table_matches_the_example() {
        let g = example_graph();
        assert_eq!(
            render_basis_table(&g),
            "degree 0: 1\n\
             degree 1: [1|4], [2|3], [2|4], [3|4]\n\
             degree 2: [1,2|4], [1,3|4], [2,3|4], [2|3,4]\n\
             degree 3: [1,2,3|4]\n"
        );
    }

    #[test]
    fn resolution_export_round_trips_through_json() {
        let g = example_graph();
        let export = ResolutionExport::compute(&g);
        let json = serde_json::to_string_pretty(&export).unwrap();
        let back: ResolutionExport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, export);
    }

    #[test]
    fn strand_matrices_export_as_integer_rows() {
        let g = example_graph();
        let strand = strand_complex(&g, &BTreeSet::from([1, 2, 4]));
        let json = serde_json::to_value(&strand).unwrap();
        assert_eq!(json["support"], serde_json::json!([1, 2, 4]));
        assert_eq!(json["matrices"][0], serde_json::json!([[1, 1]]));
        assert_eq!(json["matrices"][1], serde_json::json!([[-1], [1]]));
    }
}

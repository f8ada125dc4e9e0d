//! Brute-force verification of the resolution, the homotopy, and the product
//! structure, plus an independent Betti-number oracle.
//!
//! Every check is exact; any failure carries a witness naming the graph and
//! the offending input. The suites are meant to run over the exhaustively
//! enumerated family of small graphs, so a first failure is a small one.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;
use std::time::Instant;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::basis::BasisElement;
use crate::chain::{Chain, Term};
use crate::graph::{CointervalGraph, IntervalRep};
use crate::homotopy::{
    classify_vertex, homotopy_chain_with, homotopy_vertex_with, matching_is_involution,
    morse_acyclicity_on_vertices, strand_vertices_from_bases, Vertex,
};
use crate::linalg::rank_i64;
use crate::monomial::Monomial;
use crate::product::{degree1_product_closed_form, Multiplier};
use crate::resolution::{
    all_bases, augmentation, betti_table, differential_basis_with, differential_chain_with,
    differential_with, enumerate_basis, partial_boundary_basis_with, strand_complex_with,
    BettiTable, SignConvention,
};

/// Family bounds used by the full product-structure suite.
pub const DEFAULT_FAMILY_VERTICES: usize = 5;
pub const DEFAULT_FAMILY_ENDPOINT: i64 = 6;
/// Family bound for the cheaper complex/homotopy/exactness suites.
pub const LARGE_FAMILY_VERTICES: usize = 7;

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
    pub millis: u128,
}

impl Serialize for CheckResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CheckResult", 4)?;
        s.serialize_field("check", &self.name)?;
        s.serialize_field("status", if self.passed { "pass" } else { "fail" })?;
        s.serialize_field("witness", &self.witness)?;
        s.serialize_field("millis", &self.millis)?;
        s.end()
    }
}

/// A list of check outcomes; failing checks always carry a witness.
#[derive(Clone, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// One line per check, with the witness indented under failures.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            writeln!(out, "{status}  {} ({} ms)", c.name, c.millis).unwrap();
            if let Some(w) = &c.witness {
                writeln!(out, "      {w}").unwrap();
            }
        }
        out
    }

    /// Merges per-graph reports: a check passes when it passes on every
    /// graph, the witness is the first failing graph's, and times add up.
    pub fn merge(reports: Vec<(String, VerificationReport)>) -> VerificationReport {
        let mut order: Vec<String> = Vec::new();
        let mut merged: BTreeMap<String, CheckResult> = BTreeMap::new();
        for (label, report) in reports {
            for check in report.checks {
                if !merged.contains_key(&check.name) {
                    order.push(check.name.clone());
                }
                let entry = merged.entry(check.name.clone()).or_insert(CheckResult {
                    name: check.name.clone(),
                    passed: true,
                    witness: None,
                    millis: 0,
                });
                entry.millis += check.millis;
                if !check.passed && entry.passed {
                    entry.passed = false;
                    entry.witness =
                        Some(format!("{label}: {}", check.witness.unwrap_or_default()));
                }
            }
        }
        VerificationReport {
            checks: order.into_iter().map(|n| merged[&n].clone()).collect(),
        }
    }
}

/// Runs `body`, which returns the first failure witness or `None`.
fn run_check(name: &str, body: impl FnOnce() -> Option<String>) -> CheckResult {
    let start = Instant::now();
    let witness = body();
    CheckResult {
        name: name.to_string(),
        passed: witness.is_none(),
        witness,
        millis: start.elapsed().as_millis(),
    }
}

fn diagnostic(name: &str, note: String, millis: u128) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed: true,
        witness: Some(note),
        millis,
    }
}

/// The complex property: the differential squares to zero, the augmentation
/// kills its image, and both boundary maps respect the grading.
pub fn verify_d_squared(g: &CointervalGraph) -> VerificationReport {
    verify_d_squared_with(g, SignConvention::STANDARD)
}

pub fn verify_d_squared_with(g: &CointervalGraph, signs: SignConvention) -> VerificationReport {
    let bases = all_bases(g);
    let mut report = VerificationReport::default();

    report.push(run_check("d-squared-is-zero", || {
        for basis in bases.iter().skip(2) {
            for e in basis {
                let once = differential_basis_with(g, e, signs);
                let twice = differential_chain_with(g, &once, signs);
                if !twice.is_zero() {
                    return Some(format!("d(d({e})) = {twice}"));
                }
            }
        }
        None
    }));

    report.push(run_check("augmentation-kills-degree-one-image", || {
        for e in bases.get(1).into_iter().flatten() {
            for t in differential_basis_with(g, e, signs).terms() {
                if augmentation(g, &t.monomial).is_some() {
                    return Some(format!("d({e}) has normal-form term {}", t.monomial));
                }
            }
        }
        None
    }));

    report.push(run_check("boundaries-respect-the-grading", || {
        for (d, basis) in bases.iter().enumerate().skip(1) {
            for e in basis {
                let expected = e.multidegree(g.n());
                let image = differential_basis_with(g, e, signs);
                if image.degree() != d - 1 {
                    return Some(format!("d({e}) lands in degree {}", image.degree()));
                }
                if image.multidegree().is_some_and(|m| m != expected) {
                    return Some(format!("d({e}) changes the multidegree"));
                }
                let partial = partial_boundary_basis_with(g, e, signs);
                if partial.degree() != d - 1 {
                    return Some(format!("extremal boundary of {e} lands in degree {}", partial.degree()));
                }
                if partial.multidegree().is_some_and(|m| m != expected) {
                    return Some(format!("extremal boundary of {e} changes the multidegree"));
                }
            }
        }
        None
    }));

    report
}

/// Subsets of `1..=n`, by size then lexicographically.
fn subsets_by_size(n: usize, max_size: usize) -> Vec<BTreeSet<usize>> {
    let mut out = vec![BTreeSet::new()];
    for size in 1..=max_size.min(n) {
        for combo in (1..=n).combinations(size) {
            out.push(combo.into_iter().collect());
        }
    }
    out
}

/// Homotopy identities on every strand vertex, plus acyclicity of every
/// strand Morse graph, for strands of support size at most `strand_bound`.
pub fn verify_homotopy(g: &CointervalGraph, strand_bound: usize) -> VerificationReport {
    verify_homotopy_with(g, strand_bound, SignConvention::STANDARD)
}

pub fn verify_homotopy_with(
    g: &CointervalGraph,
    strand_bound: usize,
    signs: SignConvention,
) -> VerificationReport {
    let bases = all_bases(g);
    let strands: Vec<(BTreeSet<usize>, Vec<Vertex>)> = subsets_by_size(g.n(), strand_bound)
        .into_iter()
        .map(|s| {
            let vertices = strand_vertices_from_bases(g, &bases, &s);
            (s, vertices)
        })
        .collect();
    let mut report = VerificationReport::default();

    report.push(run_check("homotopy-identity", || {
        for (_, vertices) in &strands {
            for v in vertices {
                let term = Term::new(1, v.monomial.clone(), v.basis.clone());
                let cv = homotopy_vertex_with(g, v, signs);
                let dcv = differential_chain_with(g, &cv, signs);
                if v.degree() == 0 {
                    // dc = id - augmentation on monomials.
                    let mut expected = Chain::zero(0);
                    if augmentation(g, &v.monomial).is_none() {
                        expected.add_term(term);
                    }
                    if dcv != expected {
                        return Some(format!("d(c({v})) = {dcv}, expected {expected}"));
                    }
                } else {
                    let cdv = homotopy_chain_with(g, &differential_with(g, &term, signs), signs);
                    let total = &dcv + &cdv;
                    let expected = Chain::from_term(term);
                    if total != expected {
                        return Some(format!("(dc + cd)({v}) = {total}"));
                    }
                }
            }
        }
        None
    }));

    report.push(run_check("homotopy-squares-to-zero", || {
        for (_, vertices) in &strands {
            for v in vertices {
                let cv = homotopy_vertex_with(g, v, signs);
                let ccv = homotopy_chain_with(g, &cv, signs);
                if !ccv.is_zero() {
                    return Some(format!("c(c({v})) = {ccv}"));
                }
            }
        }
        None
    }));

    report.push(run_check("homotopy-preserves-multidegree", || {
        for (_, vertices) in &strands {
            for v in vertices {
                let cv = homotopy_vertex_with(g, v, signs);
                if cv.degree() != v.degree() + 1 {
                    return Some(format!("c({v}) has degree {}", cv.degree()));
                }
                if cv.multidegree().is_some_and(|m| m != v.multidegree()) {
                    return Some(format!("c({v}) changes the multidegree"));
                }
            }
        }
        None
    }));

    report.push(run_check("homotopy-supported-on-lower-vertices", || {
        for (_, vertices) in &strands {
            for v in vertices {
                let cv = homotopy_vertex_with(g, v, signs);
                let class = classify_vertex(g, v);
                if !cv.is_zero() != class.is_lower() {
                    return Some(format!(
                        "c({v}) is {}zero but the vertex is {:?}",
                        if cv.is_zero() { "" } else { "non" },
                        class
                    ));
                }
                for t in cv.terms() {
                    let w = Vertex::new(t.monomial, t.basis);
                    if !classify_vertex(g, &w).is_upper() {
                        return Some(format!("term {w} of c({v}) is not an upper vertex"));
                    }
                }
            }
        }
        None
    }));

    report.push(run_check("matching-is-an-involution", || {
        for (_, vertices) in &strands {
            for v in vertices {
                if !matching_is_involution(g, v) {
                    return Some(format!("partner relation fails at {v}"));
                }
            }
        }
        None
    }));

    report.push(run_check("strand-morse-graphs-are-acyclic", || {
        for (support, vertices) in &strands {
            if !morse_acyclicity_on_vertices(g, vertices, signs) {
                return Some(format!("cycle or prec increase in strand {support:?}"));
            }
        }
        None
    }));

    report
}

/// Exactness of every squarefree strand away from degree 0, the normal-form
/// rule in degree 0, and minimality of the differential.
pub fn verify_exactness(g: &CointervalGraph) -> VerificationReport {
    verify_exactness_with(g, SignConvention::STANDARD)
}

pub fn verify_exactness_with(g: &CointervalGraph, signs: SignConvention) -> VerificationReport {
    let mut report = VerificationReport::default();

    report.push(run_check("strand-homology", || {
        for support in subsets_by_size(g.n(), g.n()) {
            let strand = strand_complex_with(g, &support, signs);
            for matrix in &strand.matrices {
                for entry in matrix.iter().flatten() {
                    if !(-1..=1).contains(entry) {
                        return Some(format!("strand {support:?} has entry {entry}"));
                    }
                }
            }
            for pair in strand.matrices.windows(2) {
                if !compose_to_zero(&pair[0], &pair[1]) {
                    return Some(format!("strand {support:?}: consecutive maps do not compose to zero"));
                }
            }
            let dims = strand.dims();
            let ranks: Vec<i64> = strand.matrices.iter().map(|m| rank_i64(m) as i64).collect();
            let top = dims.len() - 1;
            for k in 0..=top {
                let incoming = if k < top { ranks[k] } else { 0 };
                let outgoing = if k >= 1 { ranks[k - 1] } else { 0 };
                let homology = dims[k] as i64 - outgoing - incoming;
                let expected = if k == 0 {
                    let monomial = Monomial::squarefree(g.n(), support.iter().copied());
                    i64::from(augmentation(g, &monomial).is_some())
                } else {
                    0
                };
                if homology != expected {
                    return Some(format!(
                        "strand {support:?} degree {k}: homology rank {homology}, expected {expected}"
                    ));
                }
            }
        }
        None
    }));

    report.push(run_check("differential-has-no-unit-entries", || {
        for basis in all_bases(g).iter().skip(1) {
            for e in basis {
                for t in differential_basis_with(g, e, signs).terms() {
                    if t.monomial.total_degree() == 0 {
                        return Some(format!("d({e}) has scalar coefficient {}", t.coeff));
                    }
                }
            }
        }
        None
    }));

    report
}

fn compose_to_zero(left: &[Vec<i64>], right: &[Vec<i64>]) -> bool {
    // left: degree k+1 -> k (rows x cols = dim_k x dim_{k+1});
    // right: degree k+2 -> k+1.
    let cols = right.first().map_or(0, |r| r.len());
    let inner = right.len();
    left.iter().all(|left_row| {
        (0..cols).all(|j| {
            let sum: i64 = (0..inner).map(|k| left_row[k] * right[k][j]).sum();
            sum == 0
        })
    })
}

/// Betti numbers computed from scratch: the face complex on subsets of the
/// edge-ideal generators, keeping only faces that preserve the least common
/// multiple, sliced per multidegree. Entirely independent of the basis cells.
pub fn taylor_betti_oracle(g: &CointervalGraph) -> BettiTable {
    let generators: Vec<u32> = g
        .edges()
        .iter()
        .map(|&(i, j)| (1u32 << (i - 1)) | (1u32 << (j - 1)))
        .collect();
    let m = generators.len();
    assert!(m <= 22, "too many generators for the subset oracle: {m}");

    // lcm (as a support mask) of every subset of generators.
    let mut lcm = vec![0u32; 1 << m];
    for mask in 1..(1usize << m) {
        let low = mask.trailing_zeros() as usize;
        lcm[mask] = lcm[mask & (mask - 1)] | generators[low];
    }

    let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (mask, &l) in lcm.iter().enumerate() {
        groups.entry(l).or_default().push(mask);
    }

    let mut table = BettiTable::default();
    for (alpha, subsets) in groups {
        let multidegree = Monomial::squarefree(
            g.n(),
            (1..=g.n()).filter(|v| alpha & (1 << (v - 1)) != 0),
        );
        let max_card = subsets
            .iter()
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap();
        let mut by_card: Vec<Vec<usize>> = vec![Vec::new(); max_card + 1];
        for &s in &subsets {
            by_card[s.count_ones() as usize].push(s);
        }
        // Index of each subset within its cardinality level.
        let index: HashMap<usize, usize> = by_card
            .iter()
            .flat_map(|level| level.iter().enumerate().map(|(k, &s)| (s, k)))
            .collect();

        // Boundary matrices between consecutive levels: delete one generator,
        // keep the face only when the lcm is unchanged.
        let mut ranks = vec![0usize; max_card + 2];
        for card in 1..=max_card {
            if by_card[card].is_empty() || by_card[card - 1].is_empty() {
                continue;
            }
            let mut matrix = vec![vec![0i64; by_card[card].len()]; by_card[card - 1].len()];
            for (col, &subset) in by_card[card].iter().enumerate() {
                let mut sign = 1i64;
                let mut rest = subset;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    let face = subset & !bit;
                    if lcm[face] == lcm[subset] {
                        matrix[index[&face]][col] += sign;
                    }
                    sign = -sign;
                    rest &= rest - 1;
                }
            }
            ranks[card] = rank_i64(&matrix);
        }

        for card in 0..=max_card {
            let dim = by_card[card].len() as i64;
            if dim == 0 {
                continue;
            }
            let homology = dim - ranks[card] as i64 - ranks[card + 1] as i64;
            assert!(homology >= 0, "negative homology rank in the subset oracle");
            table.insert(card, multidegree.clone(), homology as usize);
        }
    }
    table
}

/// Taylor-complex oracle agrees with the basis counts in every multidegree.
pub fn verify_betti(g: &CointervalGraph) -> VerificationReport {
    let mut report = VerificationReport::default();
    report.push(run_check("betti-oracle-agreement", || {
        let from_basis = betti_table(g);
        let from_oracle = taylor_betti_oracle(g);
        if from_basis == from_oracle {
            None
        } else {
            Some(format!(
                "basis table {:?} vs oracle {:?}",
                from_basis.rows(),
                from_oracle.rows()
            ))
        }
    }));
    report
}

/// The product-structure axioms: unit, Leibniz, graded commutativity,
/// associativity, closed-form agreement in degree one, the replacement
/// property of the extremal boundary, the support and max-tau constraints on
/// product terms, and membership of products in the image of the homotopy.
pub fn verify_dga(g: &CointervalGraph, degree_bound: Option<usize>) -> VerificationReport {
    verify_dga_with(g, degree_bound, SignConvention::STANDARD)
}

pub fn verify_dga_with(
    g: &CointervalGraph,
    degree_bound: Option<usize>,
    signs: SignConvention,
) -> VerificationReport {
    let mult = Multiplier::with_signs(g, signs);
    let bases = all_bases(g);
    let positive: Vec<BasisElement> = bases.iter().skip(1).flatten().cloned().collect();
    let top = bases.len() - 1;
    let bound = degree_bound.unwrap_or(3 * top.max(1));
    let n = g.n();
    let mut report = VerificationReport::default();

    report.push(run_check("unit-law", || {
        for basis in &bases {
            for e in basis {
                let expected = Chain::from_term(Term::new(1, Monomial::unit(n), e.clone()));
                if mult.star(&BasisElement::Unit, e) != expected {
                    return Some(format!("1 * {e} != {e}"));
                }
                if mult.star(e, &BasisElement::Unit) != expected {
                    return Some(format!("{e} * 1 != {e}"));
                }
            }
        }
        None
    }));

    report.push(run_check("degree-one-closed-form-agreement", || {
        let degree1 = enumerate_basis(g, 1);
        for e1 in &degree1 {
            for e2 in &degree1 {
                let lifted = mult.star(e1, e2);
                let closed = degree1_product_closed_form(g, e1, e2);
                if lifted != closed {
                    return Some(format!(
                        "{e1} * {e2}: lifted {lifted}, closed form {closed}"
                    ));
                }
            }
        }
        None
    }));

    report.push(run_check("graded-commutativity", || {
        for e1 in &positive {
            for e2 in &positive {
                if e1.degree() + e2.degree() > bound {
                    continue;
                }
                let forward = mult.star(e1, e2);
                let backward = mult.star(e2, e1);
                let sign = if (e1.degree() * e2.degree()) % 2 == 0 {
                    BigInt::from(1)
                } else {
                    BigInt::from(-1)
                };
                if forward != backward.scaled(&sign) {
                    return Some(format!("{e1} * {e2} = {forward} vs {e2} * {e1} = {backward}"));
                }
            }
        }
        None
    }));

    report.push(run_check("odd-self-products-vanish", || {
        for e in &positive {
            if e.degree() % 2 == 1 && !mult.star(e, e).is_zero() {
                return Some(format!("{e} * {e} = {}", mult.star(e, e)));
            }
        }
        None
    }));

    report.push(run_check("leibniz-rule", || {
        for e1 in &positive {
            for e2 in &positive {
                if e1.degree() + e2.degree() > bound {
                    continue;
                }
                let product = mult.star(e1, e2);
                let lhs = differential_chain_with(g, &product, signs);
                let d1 = differential_basis_with(g, e1, signs);
                let d2 = differential_basis_with(g, e2, signs);
                let left = mult.star_chains(&d1, &unit_chain(n, e2));
                let right = mult.star_chains(&unit_chain(n, e1), &d2);
                let rhs = if e1.degree() % 2 == 0 {
                    &left + &right
                } else {
                    &left - &right
                };
                if lhs != rhs {
                    return Some(format!(
                        "d({e1} * {e2}) = {lhs} but the Leibniz expansion is {rhs}"
                    ));
                }
            }
        }
        None
    }));

    report.push(run_check("associativity", || {
        for e1 in &positive {
            for e2 in &positive {
                if e1.degree() + e2.degree() > bound {
                    continue;
                }
                let left_product = mult.star(e1, e2);
                for e3 in &positive {
                    if e1.degree() + e2.degree() + e3.degree() > bound {
                        continue;
                    }
                    let lhs = mult.star_chains(&left_product, &unit_chain(n, e3));
                    let rhs = mult.star_chains(&unit_chain(n, e1), &mult.star(e2, e3));
                    if lhs != rhs {
                        return Some(format!(
                            "({e1} * {e2}) * {e3} = {lhs} but {e1} * ({e2} * {e3}) = {rhs}"
                        ));
                    }
                }
            }
        }
        None
    }));

    report.push(run_check("extremal-boundary-replacement", || {
        for e1 in &positive {
            for e2 in &positive {
                if e1.degree() + e2.degree() > bound {
                    continue;
                }
                let via_d = homotopy_chain_with(
                    g,
                    &mult.star_chains(&differential_basis_with(g, e1, signs), &unit_chain(n, e2)),
                    signs,
                );
                let via_partial = homotopy_chain_with(
                    g,
                    &mult.star_chains(
                        &partial_boundary_basis_with(g, e1, signs),
                        &unit_chain(n, e2),
                    ),
                    signs,
                );
                if via_d != via_partial {
                    return Some(format!(
                        "c(d({e1}) * {e2}) = {via_d} but c(extremal({e1}) * {e2}) = {via_partial}"
                    ));
                }
            }
        }
        None
    }));

    report.push(run_check("product-term-support", || {
        for e1 in &positive {
            for e2 in &positive {
                if e1.degree() + e2.degree() > bound {
                    continue;
                }
                let sigma_union: BTreeSet<usize> =
                    e1.sigma().iter().chain(e2.sigma()).copied().collect();
                let tau_union: BTreeSet<usize> =
                    e1.tau().iter().chain(e2.tau()).copied().collect();
                let max_tau = *tau_union.iter().next_back().unwrap();
                for t in mult.star(e1, e2).terms() {
                    let sigma_ok = t.basis.sigma().iter().all(|v| sigma_union.contains(v));
                    let tau_ok = t.basis.tau().iter().all(|v| tau_union.contains(v));
                    if !sigma_ok || !tau_ok {
                        return Some(format!(
                            "term {} of {e1} * {e2} escapes the factor supports",
                            t.basis
                        ));
                    }
                    if t.basis.max_tau() != max_tau {
                        return Some(format!(
                            "term {} of {e1} * {e2} has max tau {} != {max_tau}",
                            t.basis,
                            t.basis.max_tau()
                        ));
                    }
                    if t.basis.tau().len() + 1 < e1.tau().len() + e2.tau().len() {
                        return Some(format!(
                            "term {} of {e1} * {e2} has too small a tau",
                            t.basis
                        ));
                    }
                }
            }
        }
        None
    }));

    report.push(run_check("products-lie-in-the-homotopy-image", || {
        for e1 in &positive {
            for e2 in &positive {
                if e1.degree() + e2.degree() > bound {
                    continue;
                }
                for t in mult.star(e1, e2).terms() {
                    let v = Vertex::new(t.monomial, t.basis);
                    if !classify_vertex(g, &v).is_upper() {
                        return Some(format!("term {v} of {e1} * {e2} is not an upper vertex"));
                    }
                }
            }
        }
        None
    }));

    // Soft diagnostic, never a failure: the worked example only ever shows
    // coefficients of magnitude one, but that is not asserted.
    let start = Instant::now();
    let mut oversized: Option<String> = None;
    let mut scanned = 0usize;
    for e1 in &positive {
        for e2 in &positive {
            if e1.degree() + e2.degree() > bound {
                continue;
            }
            for t in mult.star(e1, e2).terms() {
                scanned += 1;
                if !t.coeff.abs().is_one() && oversized.is_none() {
                    oversized = Some(format!("{e1} * {e2} has coefficient {}", t.coeff));
                }
            }
        }
    }
    report.push(diagnostic(
        "structure-constant-range (diagnostic)",
        match oversized {
            Some(w) => format!("coefficient outside {{-1, 1}} observed: {w}"),
            None => format!("all {scanned} product coefficients lie in {{-1, 1}}"),
        },
        start.elapsed().as_millis(),
    ));

    report
}

fn unit_chain(n: usize, e: &BasisElement) -> Chain {
    Chain::from_term(Term::new(1, Monomial::unit(n), e.clone()))
}

/// All cointerval graphs with at most `max_vertices` vertices arising from
/// intervals with endpoints in `0..=max_endpoint`, deduplicated by edge set,
/// in (vertex count, edge set) order.
pub fn enumerate_test_graphs(max_vertices: usize, max_endpoint: i64) -> Vec<CointervalGraph> {
    let pool: Vec<(i64, i64)> = (0..=max_endpoint)
        .flat_map(|a| (a..=max_endpoint).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
        let mut level: Vec<CointervalGraph> = Vec::new();
        for combo in pool.iter().combinations_with_replacement(n) {
            let intervals: Vec<(i64, i64)> = combo.into_iter().copied().collect();
            let rep = IntervalRep::new(intervals).expect("pool intervals are valid");
            let g = CointervalGraph::from_intervals(&rep);
            let key: Vec<(usize, usize)> = g.edges().iter().copied().collect();
            if seen.insert(key) {
                level.push(g);
            }
        }
        level.sort_by(|a, b| a.edges().cmp(b.edges()));
        out.extend(level);
    }
    out
}

/// Runs a suite over the enumerated family and merges the per-graph reports.
pub fn verify_family(
    max_vertices: usize,
    max_endpoint: i64,
    suite: impl Fn(&CointervalGraph) -> VerificationReport,
) -> VerificationReport {
    let reports = enumerate_test_graphs(max_vertices, max_endpoint)
        .iter()
        .map(|g| (g.describe(), suite(g)))
        .collect();
    VerificationReport::merge(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::example_graph;

    #[test]
    fn d_squared_suite_passes_on_the_example() {
        let report = verify_d_squared(&example_graph());
        assert!(report.all_passed(), "{}", report.render_text());
    }

    #[test]
    fn d_squared_suite_passes_vacuously_on_an_edgeless_graph() {
        let rep = IntervalRep::new(vec![(0, 2), (1, 3)]).unwrap();
        let g = CointervalGraph::from_intervals(&rep);
        assert!(verify_d_squared(&g).all_passed());
    }

    #[test]
    fn homotopy_suite_passes_on_the_example() {
        let g = example_graph();
        let report = verify_homotopy(&g, g.n());
        assert!(report.all_passed(), "{}", report.render_text());
    }

    #[test]
    fn exactness_suite_passes_on_the_example() {
        let report = verify_exactness(&example_graph());
        assert!(report.all_passed(), "{}", report.render_text());
    }

    #[test]
    fn taylor_oracle_matches_on_the_example() {
        let g = example_graph();
        let oracle = taylor_betti_oracle(&g);
        assert_eq!(oracle, betti_table(&g));
        assert_eq!(oracle.totals(), vec![1, 4, 4, 1]);
    }

    #[test]
    fn taylor_oracle_on_tiny_ideals() {
        // A single edge resolves as S <- S(-edge).
        let rep = IntervalRep::new(vec![(0, 1), (2, 3)]).unwrap();
        let single = CointervalGraph::from_intervals(&rep);
        assert_eq!(taylor_betti_oracle(&single).totals(), vec![1, 1]);
        // No edges: just S.
        let rep = IntervalRep::new(vec![(0, 3), (1, 2)]).unwrap();
        let edgeless = CointervalGraph::from_intervals(&rep);
        assert_eq!(taylor_betti_oracle(&edgeless).totals(), vec![1]);
    }

    #[test]
    fn dga_suite_passes_on_the_example() {
        let report = verify_dga(&example_graph(), None);
        assert!(report.all_passed(), "{}", report.render_text());
    }

    #[test]
    fn family_enumeration_counts() {
        assert_eq!(enumerate_test_graphs(1, 3).len(), 1);
        let n2 = enumerate_test_graphs(2, 3);
        assert_eq!(n2.iter().filter(|g| g.n() == 2).count(), 2);
        // The worked example arises from endpoints 0..=5 on four vertices.
        let family = enumerate_test_graphs(4, 5);
        let target = example_graph();
        assert!(
            family.iter().any(|g| g.edges() == target.edges()),
            "family misses the worked example"
        );
    }

    #[test]
    fn small_family_passes_all_suites() {
        for g in enumerate_test_graphs(4, 4) {
            let mut report = verify_d_squared(&g);
            report.extend(verify_homotopy(&g, g.n()));
            report.extend(verify_exactness(&g));
            report.extend(verify_betti(&g));
            assert!(report.all_passed(), "{}:\n{}", g.describe(), report.render_text());
        }
    }

    #[test]
    fn flipped_signs_are_detected() {
        let g = example_graph();
        let flipped_d = SignConvention {
            flip_differential_sigma_sign: true,
            ..SignConvention::STANDARD
        };
        assert!(!verify_homotopy_with(&g, g.n(), flipped_d).all_passed());
        let flipped_partial = SignConvention {
            flip_partial_min_sigma_sign: true,
            ..SignConvention::STANDARD
        };
        assert!(!verify_dga_with(&g, None, flipped_partial).all_passed());
        let flipped_c = SignConvention {
            flip_homotopy_sigma_parity: true,
            ..SignConvention::STANDARD
        };
        assert!(!verify_homotopy_with(&g, g.n(), flipped_c).all_passed());
    }

    #[test]
    fn report_merging_keeps_first_witness() {
        let pass = CheckResult {
            name: "x".into(),
            passed: true,
            witness: None,
            millis: 1,
        };
        let fail = CheckResult {
            name: "x".into(),
            passed: false,
            witness: Some("boom".into()),
            millis: 2,
        };
        let merged = VerificationReport::merge(vec![
            ("g1".into(), VerificationReport { checks: vec![pass] }),
            ("g2".into(), VerificationReport { checks: vec![fail] }),
        ]);
        assert_eq!(merged.checks.len(), 1);
        assert!(!merged.all_passed());
        assert_eq!(merged.checks[0].witness.as_deref(), Some("g2: boom"));
        assert_eq!(merged.checks[0].millis, 3);
    }

    #[test]
    fn check_result_serializes_with_status_strings() {
        let check = CheckResult {
            name: "unit-law".into(),
            passed: true,
            witness: None,
            millis: 7,
        };
        let json = serde_json::to_value(&check).unwrap();
        assert_eq!(json["check"], "unit-law");
        assert_eq!(json["status"], "pass");
        assert_eq!(json["millis"], 7);
    }
}

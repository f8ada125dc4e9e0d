//! Acceptance suite: the worked four-vertex example reproduced exactly, and
//! the full property suites over every small graph in the enumerated family.
//!
//! Each test prints one `criterion N: pass` line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::time::Instant;

use cointerval::oracles::{
    verify_d_squared_with, verify_dga_with, verify_exactness_with, verify_homotopy_with,
    DEFAULT_FAMILY_ENDPOINT, DEFAULT_FAMILY_VERTICES,
};
use cointerval::product::render_degree_pair_table;
use cointerval::*;

fn example() -> CointervalGraph {
    let rep = IntervalRep::new(vec![(0, 3), (0, 1), (2, 3), (4, 5)]).unwrap();
    CointervalGraph::from_intervals(&rep)
}

fn family() -> Vec<CointervalGraph> {
    enumerate_test_graphs(DEFAULT_FAMILY_VERTICES, DEFAULT_FAMILY_ENDPOINT)
}

fn report_line(criterion: usize, passed: bool, what: &str) {
    println!(
        "criterion {criterion}: {} - {what}",
        if passed { "pass" } else { "FAIL" }
    );
    assert!(passed, "criterion {criterion} failed: {what}");
}

#[test]
fn criterion_1_example_basis_table_is_byte_exact() {
    let start = Instant::now();
    let g = example();
    let rendered = render_basis_table(&g);
    let elapsed = start.elapsed();

    let golden = include_str!("golden/example_basis.txt");
    assert_eq!(rendered, golden, "basis table differs from the golden file");
    // The three positive-degree rows, pinned explicitly.
    assert!(rendered.contains("degree 1: [1|4], [2|3], [2|4], [3|4]"));
    assert!(rendered.contains("degree 2: [1,2|4], [1,3|4], [2,3|4], [2|3,4]"));
    assert!(rendered.contains("degree 3: [1,2,3|4]"));
    assert!(enumerate_basis(&g, 4).is_empty());
    report_line(
        1,
        elapsed.as_secs_f64() < 1.0,
        &format!("basis table byte-exact in {:?}", elapsed),
    );
}

#[test]
fn criterion_2_degree_one_product_table_is_exact() {
    let g = example();
    let mult = Multiplier::new(&g);
    let star = |a: &str, b: &str| {
        mult.star(
            &BasisElement::parse(a).unwrap(),
            &BasisElement::parse(b).unwrap(),
        )
        .to_string()
    };
    let expected = [
        ("[1|4]", "[2|3]", "x1*[2|3,4] + x3*[1,2|4]"),
        ("[1|4]", "[2|4]", "x4*[1,2|4]"),
        ("[1|4]", "[3|4]", "x4*[1,3|4]"),
        ("[2|3]", "[2|4]", "-x2*[2|3,4]"),
        ("[2|3]", "[3|4]", "x3*[2,3|4] - x3*[2|3,4]"),
        ("[2|4]", "[3|4]", "x4*[2,3|4]"),
    ];
    for (a, b, want) in expected {
        assert_eq!(star(a, b), want, "{a} * {b}");
    }
    let rendered = render_degree_pair_table(&g, 1, 1);
    assert_eq!(
        rendered,
        include_str!("golden/example_table_1x1.txt"),
        "degree 1x1 table differs from the golden file"
    );
    report_line(2, true, "all six upper-triangular degree-1 products match");
}

#[test]
fn criterion_3_degree_one_by_two_products_are_exact() {
    let g = example();
    let mult = Multiplier::new(&g);
    let star = |a: &str, b: &str| {
        mult.star(
            &BasisElement::parse(a).unwrap(),
            &BasisElement::parse(b).unwrap(),
        )
        .to_string()
    };
    let expected = [
        ("[1|4]", "[2,3|4]", "-x4*[1,2,3|4]"),
        ("[2|3]", "[1,3|4]", "x3*[1,2,3|4]"),
        ("[2|4]", "[1,3|4]", "x4*[1,2,3|4]"),
        ("[3|4]", "[1,2|4]", "-x4*[1,2,3|4]"),
        ("[2|3]", "[1,2|4]", "0"),
        ("[1|4]", "[2|3,4]", "0"),
    ];
    for (a, b, want) in expected {
        assert_eq!(star(a, b), want, "{a} * {b}");
    }
    let rendered = render_degree_pair_table(&g, 1, 2);
    assert_eq!(
        rendered,
        include_str!("golden/example_table_1x2.txt"),
        "degree 1x2 table differs from the golden file"
    );
    report_line(3, true, "all six degree 1x2 products match");
}

#[test]
fn criterion_4_closed_form_agrees_with_the_lifting_on_the_family() {
    let start = Instant::now();
    for g in family() {
        let mult = Multiplier::new(&g);
        let degree1 = enumerate_basis(&g, 1);
        for e1 in &degree1 {
            for e2 in &degree1 {
                let lifted = mult.star(e1, e2);
                let closed = degree1_product_closed_form(&g, e1, e2);
                assert_eq!(
                    lifted,
                    closed,
                    "{}: {e1} * {e2} lifted {lifted} vs closed {closed}",
                    g.describe()
                );
            }
        }
    }
    let elapsed = start.elapsed();
    report_line(
        4,
        elapsed.as_secs() < 300,
        &format!("closed form agrees on every degree-1 pair in {:?}", elapsed),
    );
}

#[test]
fn criterion_5_resolution_correctness_on_the_family() {
    let reports = family()
        .iter()
        .map(|g| {
            let mut r = verify_d_squared(g);
            r.extend(verify_exactness(g));
            r.extend(verify_betti(g));
            (g.describe(), r)
        })
        .collect();
    let merged = VerificationReport::merge(reports);
    report_line(
        5,
        merged.all_passed(),
        &format!(
            "d²=0, strand exactness, minimality, Betti oracle\n{}",
            merged.render_text()
        ),
    );
}

#[test]
fn criterion_6_homotopy_identities_on_the_family() {
    let reports = family()
        .iter()
        .map(|g| (g.describe(), verify_homotopy(g, g.n())))
        .collect();
    let merged = VerificationReport::merge(reports);
    report_line(
        6,
        merged.all_passed(),
        &format!(
            "dc+cd=id, c²=0, support on lower vertices, Morse acyclicity\n{}",
            merged.render_text()
        ),
    );
}

#[test]
fn criterion_7_dga_axioms_on_the_family() {
    let reports = family()
        .iter()
        .map(|g| (g.describe(), verify_dga(g, None)))
        .collect();
    let merged = VerificationReport::merge(reports);
    report_line(
        7,
        merged.all_passed(),
        &format!(
            "unit, Leibniz, commutativity, associativity, product lemmas\n{}",
            merged.render_text()
        ),
    );
}

#[test]
fn criterion_8_every_sign_constant_is_load_bearing() {
    let g = example();
    let faults = [
        (
            "differential sigma sign",
            SignConvention {
                flip_differential_sigma_sign: true,
                ..SignConvention::STANDARD
            },
        ),
        (
            "extremal boundary min-sigma sign",
            SignConvention {
                flip_partial_min_sigma_sign: true,
                ..SignConvention::STANDARD
            },
        ),
        (
            "homotopy sigma parity",
            SignConvention {
                flip_homotopy_sigma_parity: true,
                ..SignConvention::STANDARD
            },
        ),
    ];
    for (label, signs) in faults {
        let resolution_ok = verify_d_squared_with(&g, signs).all_passed()
            && verify_exactness_with(&g, signs).all_passed()
            && verify_betti(&g).all_passed();
        let homotopy_ok = verify_homotopy_with(&g, g.n(), signs).all_passed();
        let dga_ok = verify_dga_with(&g, None, signs).all_passed();
        assert!(
            !(resolution_ok && homotopy_ok && dga_ok),
            "flipping the {label} goes undetected"
        );
    }
    report_line(8, true, "each flipped sign constant fails some suite");
}

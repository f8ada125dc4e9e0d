//! Integer-coefficient formal sums of `monomial * basis-symbol` terms in one
//! homological degree.
//!
//! Chains are kept normalized: no zero coefficients, at most one term per
//! `(basis, monomial)` key. Term order is the canonical one from
//! [`BasisElement`]'s `Ord`, refined by the monomial's exponent vector, so
//! iteration and rendering are deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::basis::BasisElement;
use crate::error::Error;
use crate::monomial::Monomial;

/// One signed term `coeff * monomial * basis`.
///
/// Coefficients serialize as decimal strings so arbitrary precision survives
/// JSON; plain JSON integers are accepted on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "coeff_serde")]
    pub coeff: BigInt,
    pub monomial: Monomial,
    pub basis: BasisElement,
}

mod coeff_serde {
    use num_bigint::BigInt;
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&c.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        struct CoeffVisitor;
        impl Visitor<'_> for CoeffVisitor {
            type Value = BigInt;

            fn expecting(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
                v.parse().map_err(|_| E::custom(format!("bad integer `{v}`")))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
                Ok(BigInt::from(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
                Ok(BigInt::from(v))
            }
        }
        d.deserialize_any(CoeffVisitor)
    }
}

impl Term {
    pub fn new(coeff: impl Into<BigInt>, monomial: Monomial, basis: BasisElement) -> Self {
        Term {
            coeff: coeff.into(),
            monomial,
            basis,
        }
    }

    /// Total multidegree: monomial degree plus the basis symbol's multidegree.
    pub fn multidegree(&self) -> Monomial {
        &self.monomial * &self.basis.multidegree(self.monomial.n_vars())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_negative() {
            write!(f, "-")?;
        }
        write!(f, "{}", unsigned_factors(self))
    }
}

/// The factor string of a term without its sign, e.g. `x1*[2|3,4]` or `2*x1`.
fn unsigned_factors(t: &Term) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mag = t.coeff.abs();
    if !mag.is_one() {
        parts.push(mag.to_string());
    }
    if !t.monomial.is_unit() {
        parts.push(t.monomial.to_string());
    }
    if !t.basis.is_unit() {
        parts.push(t.basis.to_string());
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// A formal sum of terms in one homological degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<(BasisElement, Monomial), BigInt>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_term(term: Term) -> Self {
        let mut chain = Chain::zero(term.basis.degree());
        chain.add_term(term);
        chain
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut chain = Chain::zero(degree);
        for t in terms {
            chain.add_term(t);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds one term into the chain, cancelling against an existing term with
    /// the same `(basis, monomial)` key. Panics on a degree mismatch.
    pub fn add_term(&mut self, term: Term) {
        assert_eq!(
            term.basis.degree(),
            self.degree,
            "term degree {} does not match chain degree {}",
            term.basis.degree(),
            self.degree
        );
        if term.coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((term.basis, term.monomial)) {
            Entry::Vacant(e) => {
                e.insert(term.coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += term.coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = Term> + '_ {
        self.terms.iter().map(|((basis, monomial), coeff)| Term {
            coeff: coeff.clone(),
            monomial: monomial.clone(),
            basis: basis.clone(),
        })
    }

    pub fn scaled(&self, c: &BigInt) -> Chain {
        if c.is_zero() {
            return Chain::zero(self.degree);
        }
        Chain {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Coefficient of `(basis, monomial)`, zero when absent.
    pub fn coefficient(&self, basis: &BasisElement, monomial: &Monomial) -> BigInt {
        self.terms
            .get(&(basis.clone(), monomial.clone()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// `Some(multidegree)` when the chain is nonempty and every term has the
    /// same total multidegree; `None` when empty.
    ///
    /// Panics if the chain is inhomogeneous; all maps in this crate preserve
    /// the grading, so inhomogeneity is a bug.
    pub fn multidegree(&self) -> Option<Monomial> {
        let mut terms = self.terms();
        let first = terms.next()?.multidegree();
        for t in terms {
            assert_eq!(
                t.multidegree(),
                first,
                "chain is not multidegree-homogeneous"
            );
        }
        Some(first)
    }

    pub fn is_multidegree_homogeneous(&self) -> bool {
        let mut degrees = self.terms().map(|t| t.multidegree());
        match degrees.next() {
            None => true,
            Some(first) => degrees.all(|d| d == first),
        }
    }

    /// Parse a chain from its text form, e.g. `x1*[2|3,4] + x3*[1,2|4]` or
    /// `0`. The expected homological degree disambiguates the zero chain.
    pub fn parse(text: &str, n: usize, degree: usize) -> Result<Chain, Error> {
        let text = text.trim();
        if text == "0" {
            return Ok(Chain::zero(degree));
        }
        let mut chain = Chain::zero(degree);
        for (sign, part) in split_signed_terms(text)? {
            let term = parse_term(&part, n)?;
            if term.basis.degree() != degree {
                return Err(Error::BadElement(format!(
                    "term `{part}` has degree {}, expected {degree}",
                    term.basis.degree()
                )));
            }
            chain.add_term(Term {
                coeff: term.coeff * sign,
                ..term
            });
        }
        Ok(chain)
    }
}

/// Splits `a + b - c` into `[(+1, "a"), (+1, "b"), (-1, "c")]`, ignoring
/// signs inside brackets.
fn split_signed_terms(text: &str) -> Result<Vec<(i32, String)>, Error> {
    let mut out: Vec<(i32, String)> = Vec::new();
    let mut sign = 1;
    let mut current = String::new();
    let mut depth = 0usize;
    for c in text.chars() {
        match c {
            '[' => {
                depth += 1;
                current.push(c);
            }
            ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::BadElement(format!("unbalanced `]` in `{text}`")))?;
                current.push(c);
            }
            '+' | '-' if depth == 0 => {
                if current.trim().is_empty() {
                    if c == '-' {
                        sign = -sign;
                    }
                } else {
                    out.push((sign, current.trim().to_string()));
                    sign = if c == '-' { -1 } else { 1 };
                    current = String::new();
                }
            }
            _ => current.push(c),
        }
    }
    if current.trim().is_empty() {
        return Err(Error::BadElement(format!("dangling sign in `{text}`")));
    }
    out.push((sign, current.trim().to_string()));
    Ok(out)
}

/// Parses one unsigned term: `*`-joined factors that are an integer, monomial
/// variables, or a single cell.
fn parse_term(text: &str, n: usize) -> Result<Term, Error> {
    let mut coeff = BigInt::one();
    let mut monomial = Monomial::unit(n);
    let mut basis = BasisElement::Unit;
    let mut seen_cell = false;
    for factor in split_top_level_factors(text) {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::BadElement(format!("empty factor in `{text}`")));
        }
        if factor.starts_with('[') {
            if seen_cell {
                return Err(Error::BadElement(format!("two cells in `{text}`")));
            }
            basis = BasisElement::parse(factor)?;
            seen_cell = true;
        } else if factor.chars().next().is_some_and(|c| c.is_ascii_digit()) {
            let k: BigInt = factor
                .parse()
                .map_err(|_| Error::BadElement(format!("bad coefficient `{factor}`")))?;
            coeff *= k;
        } else {
            monomial = &monomial * &Monomial::parse(factor, n)?;
        }
    }
    Ok(Term {
        coeff,
        monomial,
        basis,
    })
}

fn split_top_level_factors(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut depth = 0usize;
    for c in text.chars() {
        match c {
            '[' => {
                depth += 1;
                current.push(c);
            }
            ']' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            '*' if depth == 0 => {
                out.push(std::mem::take(&mut current));
            }
            _ => current.push(c),
        }
    }
    out.push(current);
    out
}

impl Add for &Chain {
    type Output = Chain;

    fn add(self, rhs: &Chain) -> Chain {
        assert_eq!(
            self.degree, rhs.degree,
            "cannot add chains of degrees {} and {}",
            self.degree, rhs.degree
        );
        let mut out = self.clone();
        for t in rhs.terms() {
            out.add_term(t);
        }
        out
    }
}

impl Sub for &Chain {
    type Output = Chain;

    fn sub(self, rhs: &Chain) -> Chain {
        self + &(-rhs)
    }
}

impl Neg for &Chain {
    type Output = Chain;

    fn neg(self) -> Chain {
        Chain {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), -v))
                .collect(),
        }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, term) in self.terms().enumerate() {
            if k == 0 {
                write!(f, "{term}")?;
            } else if term.coeff.is_negative() {
                write!(f, " - {}", unsigned_factors(&term))?;
            } else {
                write!(f, " + {}", unsigned_factors(&term))?;
            }
        }
        Ok(())
    }
}

impl Serialize for Chain {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            degree: usize,
            terms: Vec<Term>,
        }
        Repr {
            degree: self.degree,
            terms: self.terms().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Chain {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            degree: usize,
            terms: Vec<Term>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut chain = Chain::zero(repr.degree);
        for t in repr.terms {
            if t.basis.degree() != repr.degree {
                return Err(serde::de::Error::custom(format!(
                    "term degree {} does not match chain degree {}",
                    t.basis.degree(),
                    repr.degree
                )));
            }
            chain.add_term(t);
        }
        Ok(chain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cell(sigma: &[usize], tau: &[usize]) -> BasisElement {
        BasisElement::cell(sigma.to_vec(), tau.to_vec())
    }

    fn t(c: i64, mono: &str, basis: BasisElement) -> Term {
        Term::new(c, Monomial::parse(mono, 4).unwrap(), basis)
    }

    #[test]
    fn opposite_terms_cancel() {
        let a = Chain::from_term(t(1, "x1", cell(&[2], &[4])));
        let b = Chain::from_term(t(-1, "x1", cell(&[2], &[4])));
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn scaling_by_zero_empties_the_chain() {
        let a = Chain::from_term(t(1, "x1", cell(&[2], &[4])));
        assert!(a.scaled(&BigInt::zero()).is_zero());
    }

    #[test]
    fn disjoint_keys_stay_separate() {
        let mut a = Chain::from_term(t(1, "x1", cell(&[2], &[4])));
        a.add_term(t(1, "x2", cell(&[1], &[4])));
        assert_eq!(a.num_terms(), 2);
    }

    #[test]
    #[should_panic(expected = "degrees 1 and 2")]
    fn adding_mixed_degrees_is_a_hard_error() {
        let a = Chain::from_term(t(1, "x1", cell(&[2], &[4])));
        let b = Chain::from_term(t(1, "x1", cell(&[2], &[3, 4])));
        let _ = &a + &b;
    }

    #[test]
    fn display_matches_canonical_forms() {
        let mut c = Chain::zero(2);
        c.add_term(t(1, "x1", cell(&[2], &[3, 4])));
        c.add_term(t(1, "x3", cell(&[1, 2], &[4])));
        assert_eq!(c.to_string(), "x1*[2|3,4] + x3*[1,2|4]");

        let mut d = Chain::zero(2);
        d.add_term(t(-1, "x1", cell(&[2, 3], &[4])));
        d.add_term(t(1, "x2", cell(&[1, 3], &[4])));
        d.add_term(t(-1, "x3", cell(&[1, 2], &[4])));
        assert_eq!(d.to_string(), "-x1*[2,3|4] + x2*[1,3|4] - x3*[1,2|4]");

        assert_eq!(Chain::zero(1).to_string(), "0");
        let deg0 = Chain::from_term(t(1, "x1*x4", BasisElement::Unit));
        assert_eq!(deg0.to_string(), "x1*x4");
        let two = Chain::from_term(t(2, "1", BasisElement::Unit));
        assert_eq!(two.to_string(), "2");
    }

    #[test]
    fn parse_round_trips_display() {
        for (s, deg) in [
            ("x1*[2|3,4] + x3*[1,2|4]", 2),
            ("-x1*[2,3|4] + x2*[1,3|4] - x3*[1,2|4]", 2),
            ("x1*x4", 0),
            ("0", 3),
            ("x4*[2|3] - x3*[2|4]", 1),
            ("2*x1*[1|4]", 1),
        ] {
            let c = Chain::parse(s, 4, deg).unwrap();
            assert_eq!(c.to_string(), s, "round trip of `{s}`");
        }
        assert!(Chain::parse("x1*[2|4]", 4, 2).is_err());
        assert!(Chain::parse("x1*[2|4] +", 4, 1).is_err());
    }

    #[test]
    fn multidegree_detects_homogeneity() {
        let c = Chain::parse("x1*[2|3,4] + x3*[1,2|4]", 4, 2).unwrap();
        assert!(c.is_multidegree_homogeneous());
        assert_eq!(
            c.multidegree(),
            Some(Monomial::from_exponents(vec![1, 1, 1, 1]))
        );
        let mut inhomogeneous = Chain::zero(1);
        inhomogeneous.add_term(t(1, "x1", cell(&[2], &[4])));
        inhomogeneous.add_term(t(1, "x2", cell(&[3], &[4])));
        assert!(!inhomogeneous.is_multidegree_homogeneous());
        assert!(Chain::zero(5).multidegree().is_none());
    }

    #[test]
    fn serde_round_trip() {
        let c = Chain::parse("x1*[2|3,4] + x3*[1,2|4]", 4, 2).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        let back: Chain = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }

    // Strategy: small chains over a fixed pool of degree-1 cells.
    fn arb_chain() -> impl Strategy<Value = Chain> {
        let pool = [cell(&[1], &[4]),
            cell(&[2], &[3]),
            cell(&[2], &[4]),
            cell(&[3], &[4])];
        proptest::collection::vec(
            (0usize..4, proptest::collection::vec(0u32..2, 4), -3i64..4),
            0..6,
        )
        .prop_map(move |entries| {
            let mut chain = Chain::zero(1);
            for (k, exps, c) in entries {
                chain.add_term(Term::new(
                    c,
                    Monomial::from_exponents(exps),
                    pool[k].clone(),
                ));
            }
            chain
        })
    }

    proptest! {
        #[test]
        fn addition_commutes_and_associates(
            a in arb_chain(), b in arb_chain(), c in arb_chain()
        ) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn scaling_distributes_over_addition(
            a in arb_chain(), b in arb_chain(), k in -4i64..5
        ) {
            let k = BigInt::from(k);
            prop_assert_eq!((&a + &b).scaled(&k), &a.scaled(&k) + &b.scaled(&k));
        }

        #[test]
        fn normalization_is_idempotent(a in arb_chain()) {
            // Rebuilding a chain from its own terms changes nothing.
            let rebuilt = Chain::from_terms(a.degree(), a.terms());
            prop_assert_eq!(rebuilt, a);
        }
    }
}

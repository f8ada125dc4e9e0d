//! Exponent-vector monomials over a fixed set of variables `x1..xn`.
//!
//! A monomial is a vector of non-negative exponents; the unit monomial is the
//! all-zero vector. All arithmetic is exact. Division by a non-divisor is a
//! hard error: the callers that divide only ever divide by variables that are
//! provably present, so a failure indicates a bug upstream.

use std::fmt;
use std::ops::{Div, Mul};

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A monomial in `n` variables, stored as its exponent vector.
///
/// Variables are 1-indexed in the public API (`x1` is position 0 of the
/// vector).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    /// The unit monomial `1` in `n` variables.
    pub fn unit(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
        }
    }

    /// The variable `x_i` (1-indexed) in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable x{i} out of range 1..={n}");
        let mut exponents = vec![0; n];
        exponents[i - 1] = 1;
        Monomial { exponents }
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The squarefree monomial whose support is `vertices` (1-indexed).
    pub fn squarefree(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut exponents = vec![0; n];
        for v in vertices {
            assert!(v >= 1 && v <= n, "vertex {v} out of range 1..={n}");
            exponents[v - 1] = 1;
        }
        Monomial { exponents }
    }

    pub fn n_vars(&self) -> usize {
        self.exponents.len()
    }

    /// Exponent of `x_i` (1-indexed).
    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i - 1]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// The variables with positive exponent, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// Largest variable in the support, or `None` for the unit monomial.
    ///
    /// Comparisons against `max_support` of the unit monomial treat it as
    /// smaller than every vertex.
    pub fn max_support(&self) -> Option<usize> {
        self.exponents
            .iter()
            .rposition(|&e| e > 0)
            .map(|k| k + 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.n_vars(), other.n_vars(), "variable count mismatch");
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// Componentwise quotient, or `None` when `divisor` does not divide.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        Some(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&divisor.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Parse the text form: `1`, or `*`-joined factors `x<i>` / `x<i>^<e>`.
    pub fn parse(text: &str, n: usize) -> Result<Monomial, Error> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::BadElement("empty monomial".into()));
        }
        if text == "1" {
            return Ok(Monomial::unit(n));
        }
        let mut exponents = vec![0u32; n];
        for factor in text.split('*') {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::BadElement(format!("bad monomial factor `{factor}`")))?;
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (v, e.trim().parse::<u32>().map_err(|_| {
                    Error::BadElement(format!("bad exponent in `{factor}`"))
                })?),
                None => (rest, 1),
            };
            let i: usize = var
                .trim()
                .parse()
                .map_err(|_| Error::BadElement(format!("bad variable in `{factor}`")))?;
            if i < 1 || i > n {
                return Err(Error::BadElement(format!(
                    "variable x{i} out of range 1..={n}"
                )));
            }
            exponents[i - 1] += exp;
        }
        Ok(Monomial { exponents })
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        assert_eq!(self.n_vars(), rhs.n_vars(), "variable count mismatch");
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&rhs.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Div for &Monomial {
    type Output = Monomial;

    /// Exact division. Panics when `rhs` does not divide `self`.
    fn div(self, rhs: &Monomial) -> Monomial {
        self.checked_div(rhs)
            .unwrap_or_else(|| panic!("monomial {rhs} does not divide {self}"))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", k + 1)?;
            if e >= 2 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exponents(exps.to_vec())
    }

    #[test]
    fn product_is_componentwise_sum() {
        // x1*x4 . x2 in 4 variables
        let a = m(&[1, 0, 0, 1]);
        let b = m(&[0, 1, 0, 0]);
        assert_eq!(&a * &b, m(&[1, 1, 0, 1]));
        // unit is the identity
        assert_eq!(&a * &Monomial::unit(4), a);
        // x2 . x2 = x2^2
        assert_eq!(&b * &b, m(&[0, 2, 0, 0]));
    }

    #[test]
    fn quotient_is_componentwise_difference() {
        let a = m(&[1, 0, 1, 1]); // x1*x3*x4
        assert_eq!(&a / &Monomial::var(4, 4), m(&[1, 0, 1, 0]));
        assert_eq!(&a / &Monomial::unit(4), a);
    }

    #[test]
    #[should_panic(expected = "does not divide")]
    fn quotient_by_absent_variable_is_a_hard_error() {
        let a = m(&[1, 0, 0, 1]); // x1*x4
        let _ = &a / &Monomial::var(4, 2);
    }

    #[test]
    #[should_panic(expected = "variable count mismatch")]
    fn length_mismatch_is_a_hard_error() {
        let _ = &Monomial::unit(3) * &Monomial::unit(4);
    }

    #[test]
    fn support_and_max_support() {
        assert_eq!(m(&[1, 0, 2, 0]).support(), vec![1, 3]);
        assert_eq!(m(&[1, 0, 2, 0]).max_support(), Some(3));
        assert_eq!(Monomial::unit(4).max_support(), None);
        assert_eq!(Monomial::unit(4).support(), Vec::<usize>::new());
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["1", "x1", "x1^2*x3", "x2*x4"] {
            let mono = Monomial::parse(s, 4).unwrap();
            assert_eq!(mono.to_string(), s);
        }
        assert!(Monomial::parse("x5", 4).is_err());
        assert!(Monomial::parse("y1", 4).is_err());
        assert!(Monomial::parse("", 4).is_err());
    }

    proptest! {
        #[test]
        fn mul_then_div_recovers_left_factor(
            a in proptest::collection::vec(0u32..4, 4),
            b in proptest::collection::vec(0u32..4, 4),
        ) {
            let a = Monomial::from_exponents(a);
            let b = Monomial::from_exponents(b);
            prop_assert_eq!(&(&a * &b) / &b, a);
        }

        #[test]
        fn mul_commutes(
            a in proptest::collection::vec(0u32..4, 4),
            b in proptest::collection::vec(0u32..4, 4),
        ) {
            let a = Monomial::from_exponents(a);
            let b = Monomial::from_exponents(b);
            prop_assert_eq!(&a * &b, &b * &a);
        }
    }
}

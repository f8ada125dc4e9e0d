//! Free-module basis symbols: the degree-0 unit and the cells `[sigma|tau]`.
//!
//! A cell is a pair of disjoint, nonempty, ascending vertex sets with
//! `max(sigma) < min(tau)`; its homological degree is `|sigma| + |tau| - 1`
//! and its multidegree is the squarefree monomial on `sigma ∪ tau`. Whether a
//! cell actually belongs to a given graph's resolution additionally requires
//! every vertex of `sigma` to be adjacent to `min(tau)`; that check lives in
//! the resolution module because it needs the graph.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::monomial::Monomial;

/// A basis symbol of the resolution: the unit of the degree-0 module, or a
/// cell `[sigma|tau]`.
///
/// The `Ord` instance is the canonical term order used when rendering chains:
/// ascending `max(tau)`, then descending `min(sigma)`, then descending
/// lexicographic `sigma`, then descending lexicographic `tau`. Basis tables
/// use a different order, see [`table_order`].
///
/// JSON form: the unit is the string `"1"`, a cell is
/// `{"sigma": [...], "tau": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisElement {
    Unit,
    Cell { sigma: Vec<usize>, tau: Vec<usize> },
}

impl Serialize for BasisElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            BasisElement::Unit => serializer.serialize_str("1"),
            BasisElement::Cell { sigma, tau } => {
                use serde::ser::SerializeStruct;
                let mut s = serializer.serialize_struct("Cell", 2)?;
                s.serialize_field("sigma", sigma)?;
                s.serialize_field("tau", tau)?;
                s.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for BasisElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Unit(String),
            Cell { sigma: Vec<usize>, tau: Vec<usize> },
        }
        match Repr::deserialize(deserializer)? {
            Repr::Unit(s) if s == "1" => Ok(BasisElement::Unit),
            Repr::Unit(s) => Err(serde::de::Error::custom(format!(
                "expected \"1\" or a cell, found \"{s}\""
            ))),
            Repr::Cell { sigma, tau } => {
                if !BasisElement::structurally_valid(&sigma, &tau) {
                    return Err(serde::de::Error::custom(format!(
                        "invalid cell [{sigma:?}|{tau:?}]"
                    )));
                }
                Ok(BasisElement::Cell { sigma, tau })
            }
        }
    }
}

impl BasisElement {
    /// Builds a cell, asserting the graph-independent structural invariants.
    pub fn cell(sigma: Vec<usize>, tau: Vec<usize>) -> Self {
        assert!(
            Self::structurally_valid(&sigma, &tau),
            "invalid cell [{sigma:?}|{tau:?}]"
        );
        BasisElement::Cell { sigma, tau }
    }

    /// Disjoint, nonempty, strictly ascending parts with
    /// `max(sigma) < min(tau)` and vertices >= 1.
    pub fn structurally_valid(sigma: &[usize], tau: &[usize]) -> bool {
        !sigma.is_empty()
            && !tau.is_empty()
            && sigma.windows(2).all(|w| w[0] < w[1])
            && tau.windows(2).all(|w| w[0] < w[1])
            && sigma[0] >= 1
            && sigma[sigma.len() - 1] < tau[0]
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, BasisElement::Unit)
    }

    /// Homological degree: 0 for the unit, `|sigma| + |tau| - 1` for a cell.
    pub fn degree(&self) -> usize {
        match self {
            BasisElement::Unit => 0,
            BasisElement::Cell { sigma, tau } => sigma.len() + tau.len() - 1,
        }
    }

    pub fn sigma(&self) -> &[usize] {
        match self {
            BasisElement::Unit => &[],
            BasisElement::Cell { sigma, .. } => sigma,
        }
    }

    pub fn tau(&self) -> &[usize] {
        match self {
            BasisElement::Unit => &[],
            BasisElement::Cell { tau, .. } => tau,
        }
    }

    /// Vertices of `sigma ∪ tau`, ascending; empty for the unit.
    pub fn support(&self) -> Vec<usize> {
        match self {
            BasisElement::Unit => Vec::new(),
            BasisElement::Cell { sigma, tau } => {
                let mut s: Vec<usize> = sigma.iter().chain(tau).copied().collect();
                s.sort_unstable();
                s
            }
        }
    }

    /// Squarefree multidegree of the symbol in `n` variables.
    pub fn multidegree(&self, n: usize) -> Monomial {
        Monomial::squarefree(n, self.support())
    }

    pub fn max_tau(&self) -> usize {
        *self.tau().last().expect("unit has no tau")
    }

    pub fn min_sigma(&self) -> usize {
        *self.sigma().first().expect("unit has no sigma")
    }

    pub fn min_tau(&self) -> usize {
        *self.tau().first().expect("unit has no tau")
    }

    /// Parse `[1,2|4]` (commas or whitespace inside each part). `1` parses to
    /// the unit.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let text = text.trim();
        if text == "1" {
            return Ok(BasisElement::Unit);
        }
        let inner = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::BadElement(format!("bad cell `{text}`")))?;
        let (left, right) = inner
            .split_once('|')
            .ok_or_else(|| Error::BadElement(format!("cell `{text}` is missing `|`")))?;
        let part = |s: &str| -> Result<Vec<usize>, Error> {
            let vs: Result<Vec<usize>, _> = s
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>())
                .collect();
            vs.map_err(|_| Error::BadElement(format!("bad vertex list `{s}`")))
        };
        let sigma = part(left)?;
        let tau = part(right)?;
        if !Self::structurally_valid(&sigma, &tau) {
            return Err(Error::BadElement(format!(
                "`{text}` violates the cell conditions (disjoint ascending parts, max sigma < min tau)"
            )));
        }
        Ok(BasisElement::Cell { sigma, tau })
    }
}

impl Ord for BasisElement {
    fn cmp(&self, other: &Self) -> Ordering {
        use BasisElement::*;
        match (self, other) {
            (Unit, Unit) => Ordering::Equal,
            (Unit, Cell { .. }) => Ordering::Less,
            (Cell { .. }, Unit) => Ordering::Greater,
            (
                Cell { sigma: s1, tau: t1 },
                Cell { sigma: s2, tau: t2 },
            ) => t1
                .last()
                .cmp(&t2.last())
                .then_with(|| s2.first().cmp(&s1.first()))
                .then_with(|| s2.cmp(s1))
                .then_with(|| t2.cmp(t1)),
        }
    }
}

impl PartialOrd for BasisElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Order in which basis tables are listed: by the support `sigma ∪ tau`
/// lexicographically, then larger `sigma` first (so `[2,3|4]` precedes
/// `[2|3,4]`).
pub fn table_order(a: &BasisElement, b: &BasisElement) -> Ordering {
    use BasisElement::*;
    match (a, b) {
        (Unit, Unit) => Ordering::Equal,
        (Unit, Cell { .. }) => Ordering::Less,
        (Cell { .. }, Unit) => Ordering::Greater,
        _ => a
            .support()
            .cmp(&b.support())
            .then(b.sigma().len().cmp(&a.sigma().len())),
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::Unit => write!(f, "1"),
            BasisElement::Cell { sigma, tau } => {
                let list = |vs: &[usize]| {
                    vs.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                write!(f, "[{}|{}]", list(sigma), list(tau))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(sigma: &[usize], tau: &[usize]) -> BasisElement {
        BasisElement::cell(sigma.to_vec(), tau.to_vec())
    }

    #[test]
    fn degree_and_multidegree() {
        assert_eq!(BasisElement::Unit.degree(), 0);
        assert_eq!(cell(&[1], &[4]).degree(), 1);
        assert_eq!(cell(&[1, 2], &[4]).degree(), 2);
        assert_eq!(cell(&[2], &[3, 4]).degree(), 2);
        assert_eq!(
            cell(&[2], &[3, 4]).multidegree(4),
            Monomial::from_exponents(vec![0, 1, 1, 1])
        );
    }

    #[test]
    #[should_panic(expected = "invalid cell")]
    fn cell_requires_max_sigma_below_min_tau() {
        cell(&[3], &[2]);
    }

    #[test]
    #[should_panic(expected = "invalid cell")]
    fn cell_requires_nonempty_parts() {
        cell(&[], &[2]);
    }

    #[test]
    fn parse_accepts_commas_and_whitespace() {
        assert_eq!(BasisElement::parse("[1,2|4]").unwrap(), cell(&[1, 2], &[4]));
        assert_eq!(BasisElement::parse("[1 2|4]").unwrap(), cell(&[1, 2], &[4]));
        assert_eq!(BasisElement::parse("[2|3,4]").unwrap(), cell(&[2], &[3, 4]));
        assert_eq!(BasisElement::parse("1").unwrap(), BasisElement::Unit);
        assert!(BasisElement::parse("[2|]").is_err());
        assert!(BasisElement::parse("[3|2]").is_err());
        assert!(BasisElement::parse("[2,2|3]").is_err());
    }

    #[test]
    fn display_uses_commas() {
        assert_eq!(cell(&[1, 2], &[4]).to_string(), "[1,2|4]");
        assert_eq!(cell(&[2], &[3, 4]).to_string(), "[2|3,4]");
        assert_eq!(BasisElement::Unit.to_string(), "1");
    }

    #[test]
    fn json_form() {
        assert_eq!(
            serde_json::to_string(&BasisElement::Unit).unwrap(),
            "\"1\""
        );
        let c = cell(&[1, 2], &[4]);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"sigma":[1,2],"tau":[4]}"#);
        assert_eq!(serde_json::from_str::<BasisElement>(&json).unwrap(), c);
        assert_eq!(
            serde_json::from_str::<BasisElement>("\"1\"").unwrap(),
            BasisElement::Unit
        );
        assert!(serde_json::from_str::<BasisElement>(r#"{"sigma":[3],"tau":[2]}"#).is_err());
    }

    #[test]
    fn term_order_matches_rendered_chains() {
        // [2|3,4] renders before [1,2|4]: equal max tau, larger min sigma first.
        assert!(cell(&[2], &[3, 4]) < cell(&[1, 2], &[4]));
        // [2|3] before [2|4]: smaller max tau first.
        assert!(cell(&[2], &[3]) < cell(&[2], &[4]));
        // [2,3|4] before [1,3|4] before [1,2|4].
        assert!(cell(&[2, 3], &[4]) < cell(&[1, 3], &[4]));
        assert!(cell(&[1, 3], &[4]) < cell(&[1, 2], &[4]));
        // [2,3|4] before [2|3,4]: equal max tau and min sigma, longer sigma first.
        assert!(cell(&[2, 3], &[4]) < cell(&[2], &[3, 4]));
    }

    #[test]
    fn table_order_lists_by_support_then_sigma_size() {
        let mut cells = vec![
            cell(&[2], &[3, 4]),
            cell(&[2, 3], &[4]),
            cell(&[1, 3], &[4]),
            cell(&[1, 2], &[4]),
        ];
        cells.sort_by(table_order);
        assert_eq!(
            cells,
            vec![
                cell(&[1, 2], &[4]),
                cell(&[1, 3], &[4]),
                cell(&[2, 3], &[4]),
                cell(&[2], &[3, 4]),
            ]
        );
    }
}

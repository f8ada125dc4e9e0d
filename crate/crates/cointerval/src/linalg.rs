//! Exact rank of integer matrices by fraction-free elimination.
//!
//! Row operations use cross-multiplication with gcd-reduced multipliers and
//! each updated row is divided by its content, so entries stay small for the
//! sparse incidence-style matrices this crate produces. No floating point
//! anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Rank of the matrix given as rows of `i64` entries.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    rank(
        rows.iter()
            .map(|r| r.iter().map(|&e| BigInt::from(e)).collect())
            .collect(),
    )
}

/// Rank of the matrix over the rationals, computed in exact integer
/// arithmetic.
pub fn rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");

    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows.len() {
            break;
        }
        // Locate a pivot with the least absolute value.
        let pivot = rows[pivot_row..]
            .iter()
            .enumerate()
            .filter(|(_, r)| !r[col].is_zero())
            .min_by_key(|(_, r)| r[col].abs())
            .map(|(offset, _)| pivot_row + offset);
        let Some(found) = pivot else { continue };
        rows.swap(pivot_row, found);

        let (pivot_slice, rest) = rows.split_at_mut(pivot_row + 1);
        let pivot_entries = &pivot_slice[pivot_row];
        let p = pivot_entries[col].clone();
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = p.gcd(&row[col]);
            let row_scale = &p / &g;
            let pivot_scale = &row[col] / &g;
            for (entry, pivot_entry) in row.iter_mut().zip(pivot_entries) {
                *entry = &*entry * &row_scale - pivot_entry * &pivot_scale;
            }
            reduce_by_content(row);
        }
        pivot_row += 1;
    }
    pivot_row
}

fn reduce_by_content(row: &mut [BigInt]) {
    let mut content = BigInt::zero();
    for e in row.iter() {
        content = content.gcd(e);
        if content == BigInt::from(1) {
            return;
        }
    }
    if content.is_zero() || content == BigInt::from(1) {
        return;
    }
    for e in row.iter_mut() {
        *e = &*e / &content;
    }
}

//! Invariant factors of integer matrices.
//!
//! Unit pivots are eliminated first on the sparse matrix; whatever survives
//! is diagonalized densely. All arithmetic is on arbitrary-precision
//! integers.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::SparseMatrix;

/// Nonzero invariant factors of `m` (absolute values, divisibility chain),
/// one per unit of rank.
pub(crate) fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    let mut cols: Vec<BTreeMap<usize, BigInt>> = m
        .columns
        .iter()
        .map(|c| {
            c.iter()
                .filter(|&&(_, v)| v != 0)
                .map(|&(r, v)| (r, BigInt::from(v)))
                .collect()
        })
        .collect();
    let mut rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.nrows];
    for (j, c) in cols.iter().enumerate() {
        for &r in c.keys() {
            rows[r].insert(j);
        }
    }
    let mut alive = vec![true; cols.len()];
    let mut units = 0usize;

    loop {
        let mut progress = false;
        for j in 0..cols.len() {
            if !alive[j] {
                continue;
            }
            if cols[j].is_empty() {
                alive[j] = false;
                continue;
            }
            let pivot_row = cols[j]
                .iter()
                .filter(|(_, v)| v.abs().is_one())
                .map(|(&r, _)| r)
                .min_by_key(|&r| (rows[r].len(), r));
            let Some(r) = pivot_row else { continue };
            let pivot = cols[j][&r].clone();
            let pivot_col = cols[j].clone();
            let others: Vec<usize> = rows[r].iter().copied().filter(|&c| c != j).collect();
            for c in others {
                // pivot is ±1, so a / pivot = a * pivot
                let factor = &cols[c][&r] * &pivot;
                for (&row, val) in &pivot_col {
                    let entry = cols[c].entry(row).or_insert_with(BigInt::zero);
                    *entry -= &factor * val;
                    if entry.is_zero() {
                        cols[c].remove(&row);
                        rows[row].remove(&c);
                    } else {
                        rows[row].insert(c);
                    }
                }
            }
            for &row in pivot_col.keys() {
                rows[row].remove(&j);
            }
            cols[j].clear();
            alive[j] = false;
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }

    let rest: Vec<usize> = (0..cols.len()).filter(|&j| !cols[j].is_empty()).collect();
    let mut factors = vec![BigInt::one(); units];
    if !rest.is_empty() {
        let live_rows: Vec<usize> = (0..m.nrows).filter(|&r| !rows[r].is_empty()).collect();
        let mut dense = vec![vec![BigInt::zero(); rest.len()]; live_rows.len()];
        for (i, &r) in live_rows.iter().enumerate() {
            for (jj, &j) in rest.iter().enumerate() {
                if let Some(v) = cols[j].get(&r) {
                    dense[i][jj] = v.clone();
                }
            }
        }
        factors.extend(dense_diagonal(dense));
    }
    factors.sort();
    factors
}

/// Smith normal form diagonal of a dense matrix, nonzero entries only.
#[allow(clippy::needless_range_loop)]
pub(crate) fn dense_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..nrows.min(ncols) {
        'pivot: loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, v) in row.iter().enumerate().skip(t) {
                    if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return diag;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &p;
                for j in t..ncols {
                    let d = &q * &a[t][j];
                    a[i][j] -= d;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &p;
                for i in t..nrows {
                    let d = &q * &a[i][t];
                    a[i][j] -= d;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            for i in t + 1..nrows {
                for j in t + 1..ncols {
                    if !(&a[i][j] % &p).is_zero() {
                        // fold row i into row t; the next pass finds a smaller pivot
                        for jj in t..ncols {
                            let v = a[i][jj].clone();
                            a[t][jj] += v;
                        }
                        continue 'pivot;
                    }
                }
            }
            diag.push(p.abs());
            break;
        }
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    fn sparse(rows: &[&[i64]]) -> SparseMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        SparseMatrix {
            nrows,
            columns: (0..ncols)
                .map(|j| {
                    (0..nrows)
                        .filter(|&i| rows[i][j] != 0)
                        .map(|i| (i, rows[i][j]))
                        .collect()
                })
                .collect(),
        }
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn textbook_examples() {
        // diag(2, 6) is already in normal form
        assert_eq!(dense_diagonal(big(&[&[2, 0], &[0, 6]])), ints(&[2, 6]));
        // diag(2, 3) has normal form diag(1, 6)
        assert_eq!(dense_diagonal(big(&[&[2, 0], &[0, 3]])), ints(&[1, 6]));
        assert_eq!(
            dense_diagonal(big(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])),
            ints(&[2, 6, 12])
        );
        assert!(dense_diagonal(big(&[&[0, 0], &[0, 0]])).is_empty());
    }

    #[test]
    fn sparse_path_agrees() {
        let m = sparse(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        assert_eq!(invariant_factors(&m), ints(&[2, 6, 12]));
        // boundary of a triangle: rank 2, unimodular
        let m = sparse(&[&[-1, 0, -1], &[1, -1, 0], &[0, 1, 1]]);
        assert_eq!(invariant_factors(&m), ints(&[1, 1]));
        // RP^2-style torsion: [[2]] mixed with a unit pivot
        let m = sparse(&[&[1, 1], &[1, -1]]);
        assert_eq!(invariant_factors(&m), ints(&[1, 2]));
    }
}

//! Column reduction over `GF(p)`.

use super::SparseMatrix;

fn inverse(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

fn to_field(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

/// `col -= factor * other`, both sorted by row.
fn axpy(col: &[(usize, u32)], other: &[(usize, u32)], factor: u32, p: u32) -> Vec<(usize, u32)> {
    let neg = (p - factor) as u64;
    let mut out = Vec::with_capacity(col.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < col.len() || j < other.len() {
        let take_left = j == other.len() || (i < col.len() && col[i].0 < other[j].0);
        let take_right = i == col.len() || (j < other.len() && other[j].0 < col[i].0);
        if take_left {
            out.push(col[i]);
            i += 1;
        } else if take_right {
            out.push((other[j].0, (other[j].1 as u64 * neg % p as u64) as u32));
            j += 1;
        } else {
            let v = (col[i].1 as u64 + other[j].1 as u64 * neg) % p as u64;
            if v != 0 {
                out.push((col[i].0, v as u32));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of `m` over `GF(p)` by left-to-right column reduction on the lowest
/// nonzero row.
///
/// Columns listed in `skip` are known to reduce to zero and are not touched.
/// Returns the rank and the pivot rows of the reduced columns.
pub(crate) fn rank_mod_p(m: &SparseMatrix, p: u32, skip: &[bool]) -> (usize, Vec<usize>) {
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; m.nrows];
    let mut reduced: Vec<Vec<(usize, u32)>> = Vec::with_capacity(m.ncols());
    let mut pivots = Vec::new();
    for (j, col) in m.columns.iter().enumerate() {
        if skip.get(j).copied().unwrap_or(false) {
            continue;
        }
        let mut cur: Vec<(usize, u32)> = col
            .iter()
            .map(|&(r, v)| (r, to_field(v, p)))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(low, val)) = cur.last() {
            match pivot_of_row[low] {
                Some(k) => {
                    let other = &reduced[k];
                    let lead = other.last().expect("stored columns are nonzero").1;
                    let factor = (val as u64 * inverse(lead, p) as u64 % p as u64) as u32;
                    cur = axpy(&cur, other, factor, p);
                }
                None => break,
            }
        }
        if let Some(&(low, _)) = cur.last() {
            pivot_of_row[low] = Some(reduced.len());
            pivots.push(low);
            reduced.push(cur);
        }
    }
    (reduced.len(), pivots)
}

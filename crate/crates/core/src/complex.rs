//! The independence complex of a graph, treated implicitly.
//!
//! Faces are independent vertex sets. They are produced in lexicographic
//! order of their sorted member lists, the empty face first, so that
//! boundary matrices built from them are reproducible.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MASK_LIMIT};

pub const DEFAULT_FACE_CEILING: u64 = 20_000_000;

/// Environment variable overriding the face ceiling.
pub const FACE_BUDGET_ENV: &str = "INDCOMPLEX_FACE_BUDGET";

// Memo entries allowed in the exact counter before it falls back to a capped
// walk over the faces themselves.
const COUNT_MEMO_LIMIT: usize = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaceBudget {
    pub ceiling: u64,
}

impl Default for FaceBudget {
    fn default() -> Self {
        Self {
            ceiling: DEFAULT_FACE_CEILING,
        }
    }
}

impl FaceBudget {
    pub fn new(ceiling: u64) -> Self {
        Self { ceiling }
    }

    /// Default ceiling, overridden by `INDCOMPLEX_FACE_BUDGET` when it holds
    /// a positive integer.
    pub fn from_env() -> Self {
        std::env::var(FACE_BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .filter(|&c| c > 0)
            .map(Self::new)
            .unwrap_or_default()
    }

    /// Errors if `g` has more faces (empty face included) than the ceiling.
    /// Returns the exact face count otherwise.
    pub fn admit(&self, g: &Graph) -> Result<u128> {
        let masks = require_masks(g)?;
        let mut total: u128 = 1;
        for comp in g.components() {
            let mask = comp.iter().fold(0u128, |m, &i| m | (1u128 << i));
            let count = count_component(masks, mask, self.ceiling)?;
            total = total.saturating_mul(count);
            if total > self.ceiling as u128 {
                return Err(Error::FaceBudgetExceeded {
                    faces: total,
                    ceiling: self.ceiling,
                });
            }
        }
        Ok(total)
    }
}

fn require_masks(g: &Graph) -> Result<&[u128]> {
    g.masks().ok_or(Error::TooManyVertices(g.len()))
}

fn count_component(masks: &[u128], mask: u128, ceiling: u64) -> Result<u128> {
    let mut memo = HashMap::new();
    match count_memo(masks, mask, &mut memo) {
        Some(c) => Ok(c),
        None => {
            // memo exhausted: walk the faces, stopping once past the ceiling
            let mut walk = FaceWalk::new(masks, mask);
            let mut seen: u128 = 0;
            while walk.next().is_some() {
                seen += 1;
                if seen > ceiling as u128 {
                    return Err(Error::FaceBudgetExceeded {
                        faces: seen,
                        ceiling,
                    });
                }
            }
            Ok(seen)
        }
    }
}

/// Number of independent subsets of `mask`: branch on the lowest vertex,
/// `i(G) = i(G - v) + i(G - N[v])`.
fn count_memo(masks: &[u128], mask: u128, memo: &mut HashMap<u128, u128>) -> Option<u128> {
    if mask == 0 {
        return Some(1);
    }
    if let Some(&c) = memo.get(&mask) {
        return Some(c);
    }
    if memo.len() >= COUNT_MEMO_LIMIT {
        return None;
    }
    let v = mask.trailing_zeros() as usize;
    let without = mask & !(1u128 << v);
    let a = count_memo(masks, without, memo)?;
    let b = count_memo(masks, without & !masks[v], memo)?;
    let c = a.saturating_add(b);
    memo.insert(mask, c);
    Some(c)
}

/// An independent set, members sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Face {
    pub members: Vec<usize>,
}

impl Face {
    pub fn from_mask(mut mask: u128) -> Self {
        let mut members = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            members.push(mask.trailing_zeros() as usize);
            mask &= mask - 1;
        }
        Self { members }
    }

    pub fn to_mask(&self) -> u128 {
        self.members.iter().fold(0, |m, &i| m | (1u128 << i))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Geometric dimension, `-1` for the empty face.
    pub fn dim(&self) -> i32 {
        self.members.len() as i32 - 1
    }
}

/// Depth-first walk over independent subsets of `universe`, in lexicographic
/// order of sorted member lists.
struct FaceWalk<'a> {
    masks: &'a [u128],
    // (face, candidates that may still extend it; all above the face's max)
    stack: Vec<(u128, u128)>,
    started: bool,
    universe: u128,
}

impl<'a> FaceWalk<'a> {
    fn new(masks: &'a [u128], universe: u128) -> Self {
        Self {
            masks,
            stack: Vec::with_capacity(65),
            started: false,
            universe,
        }
    }
}

impl Iterator for FaceWalk<'_> {
    type Item = u128;

    fn next(&mut self) -> Option<u128> {
        if !self.started {
            self.started = true;
            self.stack.push((0, self.universe));
            return Some(0);
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.1 == 0 {
                self.stack.pop();
                continue;
            }
            let v = top.1.trailing_zeros() as usize;
            top.1 &= top.1 - 1;
            let face = top.0 | (1u128 << v);
            let cand = top.1 & !self.masks[v];
            self.stack.push((face, cand));
            return Some(face);
        }
    }
}

/// Stream of the faces of `I(g)`, empty face first.
pub struct Faces<'a> {
    walk: FaceWalk<'a>,
}

impl Iterator for Faces<'_> {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        self.walk.next().map(Face::from_mask)
    }
}

/// Enumerates the faces of `I(g)` after checking the face count against
/// `budget`.
pub fn enumerate_faces(g: &Graph, budget: FaceBudget) -> Result<Faces<'_>> {
    budget.admit(g)?;
    let masks = require_masks(g)?;
    Ok(Faces {
        walk: FaceWalk::new(masks, full_mask(g.len())),
    })
}

/// Faces as bitmasks, in enumeration order.
pub(crate) fn face_masks(g: &Graph, budget: FaceBudget) -> Result<Vec<u128>> {
    let count = budget.admit(g)?;
    let masks = require_masks(g)?;
    let mut out = Vec::with_capacity(count as usize);
    out.extend(FaceWalk::new(masks, full_mask(g.len())));
    Ok(out)
}

fn full_mask(len: usize) -> u128 {
    if len == 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

/// Face counts by cardinality. `counts[i]` is the number of faces with
/// `i + 1` vertices; the empty face is implicit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector {
    pub counts: Vec<u64>,
}

impl FVector {
    /// Counts indexed by cardinality, empty face included at index 0.
    pub fn with_empty(&self) -> Vec<u64> {
        std::iter::once(1)
            .chain(self.counts.iter().copied())
            .collect()
    }

    pub fn total_faces(&self) -> u64 {
        1 + self.counts.iter().sum::<u64>()
    }
}

pub fn f_vector(g: &Graph, budget: FaceBudget) -> Result<FVector> {
    let mut counts = vec![0u64; g.len().min(MASK_LIMIT)];
    for face in face_masks(g, budget)? {
        let size = face.count_ones() as usize;
        if size > 0 {
            counts[size - 1] += 1;
        }
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(FVector { counts })
}

/// Unreduced Euler characteristic `sum_i (-1)^i f_i`, empty face excluded.
pub fn euler_from_fvector(fv: &FVector) -> i64 {
    fv.counts
        .iter()
        .enumerate()
        .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

/// `G - N[v]`, whose independence complex is the link of `v`.
pub fn link_graph(g: &Graph, v: usize) -> Result<Graph> {
    let closed = g.neighborhood(v, true)?;
    g.delete_vertices(&closed)
}

/// `G - v`, whose independence complex is the deletion of `v`.
pub fn deletion_graph(g: &Graph, v: usize) -> Result<Graph> {
    g.delete_vertices(&[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Family, Vertex};
    use proptest::prelude::*;

    /// Every subset of the vertex set, filtered for independence, sorted
    /// lexicographically.
    fn brute_faces(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.len();
        let mut out: Vec<Vec<usize>> = (0u64..1 << n)
            .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|set: &Vec<usize>| {
                set.iter()
                    .all(|&a| set.iter().all(|&b| a == b || !g.adjacent(a, b)))
            })
            .collect();
        out.sort();
        out
    }

    fn faces(g: &Graph) -> Vec<Vec<usize>> {
        enumerate_faces(g, FaceBudget::default())
            .unwrap()
            .map(|f| f.members)
            .collect()
    }

    #[test]
    fn path_three() {
        let p3 = Graph::path(3).unwrap();
        let got = faces(&p3);
        assert_eq!(got, vec![vec![], vec![0], vec![0, 2], vec![1], vec![2]]);
        assert_eq!(got, brute_faces(&p3));
        assert_eq!(
            f_vector(&p3, FaceBudget::default()).unwrap().counts,
            vec![3, 1]
        );
    }

    #[test]
    fn k2_and_edgeless() {
        let k2 = Graph::path(2).unwrap();
        assert_eq!(faces(&k2), vec![vec![], vec![0], vec![1]]);
        assert_eq!(
            f_vector(&k2, FaceBudget::default()).unwrap().counts,
            vec![2]
        );

        let e3 = Graph::from_edges(3, &[]).unwrap();
        let got = faces(&e3);
        assert_eq!(got.len(), 8);
        assert_eq!(got, brute_faces(&e3));
    }

    #[test]
    fn path_six_fvector() {
        let p6 = Graph::build_gamma(1, 6).unwrap();
        let mut expected = vec![0u64; 6];
        for f in brute_faces(&p6).into_iter().filter(|f| !f.is_empty()) {
            expected[f.len() - 1] += 1;
        }
        while expected.last() == Some(&0) {
            expected.pop();
        }
        assert_eq!(expected, vec![6, 10, 4]);
        assert_eq!(
            f_vector(&p6, FaceBudget::default()).unwrap().counts,
            expected
        );
    }

    #[test]
    fn euler_examples() {
        let b = FaceBudget::default();
        let p3 = Graph::path(3).unwrap();
        assert_eq!(euler_from_fvector(&f_vector(&p3, b).unwrap()), 2);
        let g26 = Graph::build_gamma(2, 6).unwrap();
        assert_eq!(euler_from_fvector(&f_vector(&g26, b).unwrap()), 2);
        let empty = p3.delete_vertices(&[0, 1, 2]).unwrap();
        let fv = f_vector(&empty, b).unwrap();
        assert!(fv.counts.is_empty());
        assert_eq!(euler_from_fvector(&fv), 0);
        assert_eq!(faces(&empty), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn budget_rejects() {
        let g = Graph::build_gamma(4, 6).unwrap();
        let total = FaceBudget::default().admit(&g).unwrap();
        assert_eq!(total as usize, faces(&g).len());
        let err = enumerate_faces(&g, FaceBudget::new(100)).err().unwrap();
        assert!(matches!(
            err,
            Error::FaceBudgetExceeded { ceiling: 100, .. }
        ));
        let big = Graph::build_gamma(22, 6).unwrap();
        assert!(matches!(
            enumerate_faces(&big, FaceBudget::default()).err().unwrap(),
            Error::TooManyVertices(132)
        ));
    }

    #[test]
    fn link_and_deletion() {
        for n in [3, 4, 5] {
            let b = Graph::build_family(Family::B(n)).unwrap();
            let v = b.index_of(Vertex::new(n, 3)).unwrap();
            assert_eq!(
                deletion_graph(&b, v).unwrap(),
                Graph::build_family(Family::Y(n)).unwrap()
            );
            let a = Graph::build_family(Family::A(n)).unwrap();
            let v = a.index_of(Vertex::new(n, 3)).unwrap();
            assert_eq!(
                deletion_graph(&a, v).unwrap(),
                Graph::build_family(Family::X(n)).unwrap()
            );
        }
        let g = Graph::from_edges(3, &[(1, 2)]).unwrap();
        let link = link_graph(&g, 0).unwrap();
        assert_eq!(link.vertices(), &[Vertex::new(2, 1), Vertex::new(3, 1)]);
        assert_eq!(link.edge_count(), 1);
    }

    fn random_graph() -> impl Strategy<Value = Graph> {
        (1usize..11).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                    .zip(bits)
                    .filter(|(_, keep)| *keep)
                    .map(|(e, _)| e)
                    .collect();
                Graph::from_edges(n, &pairs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn enumeration_matches_brute_force(g in random_graph()) {
            prop_assert_eq!(faces(&g), brute_faces(&g));
            prop_assert_eq!(FaceBudget::default().admit(&g).unwrap() as usize, brute_faces(&g).len());
        }

        #[test]
        fn join_rule(g1 in random_graph(), g2 in random_graph()) {
            let b = FaceBudget::default();
            let u = g1.disjoint_union(&g2);
            let (f1, f2) = (f_vector(&g1, b).unwrap().with_empty(), f_vector(&g2, b).unwrap().with_empty());
            let mut conv = vec![0u64; f1.len() + f2.len() - 1];
            for (i, a) in f1.iter().enumerate() {
                for (j, c) in f2.iter().enumerate() {
                    conv[i + j] += a * c;
                }
            }
            prop_assert_eq!(f_vector(&u, b).unwrap().with_empty(), conv);
            let chi = |g: &Graph| euler_from_fvector(&f_vector(g, b).unwrap());
            prop_assert_eq!(1 - chi(&u), (1 - chi(&g1)) * (1 - chi(&g2)));
        }

        #[test]
        fn induced_faces_are_faces(g in random_graph(), drop in prop::collection::vec(any::<bool>(), 10)) {
            let removed: Vec<usize> = (0..g.len()).filter(|&i| drop[i]).collect();
            let h = g.delete_vertices(&removed).unwrap();
            let big: std::collections::HashSet<Vec<Vertex>> = faces(&g)
                .into_iter()
                .map(|f| f.into_iter().map(|i| g.vertex(i)).collect())
                .collect();
            for f in faces(&h) {
                let coords: Vec<Vertex> = f.into_iter().map(|i| h.vertex(i)).collect();
                prop_assert!(big.contains(&coords));
            }
        }
    }
}

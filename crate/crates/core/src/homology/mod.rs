//! Reduced simplicial homology of independence complexes.
//!
//! Chain groups are those of the augmented complex: `C_{-1}` is spanned by
//! the empty face, so a contractible complex has all reduced Betti numbers
//! zero and the empty complex (graph with no vertices) has `β̃_{-1} = 1`.

mod field;
mod snf;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::complex::{face_masks, FaceBudget};
use crate::error::{Error, Result};
use crate::fold::reduce;
use crate::graph::{Family, Graph};

/// Integral homology is only attempted on complexes up to this many faces.
pub const INTEGRAL_FACE_LIMIT: usize = 100_000;

/// A homotopy type `∨ S^d`, kept as dimension -> multiplicity. The empty map
/// is a point. Dimension `-1` stands for the empty complex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WedgeOfSpheres {
    multiplicity: BTreeMap<i32, u64>,
}

impl WedgeOfSpheres {
    pub fn point() -> Self {
        Self::default()
    }

    pub fn sphere(dim: i32) -> Self {
        Self::spheres(dim, 1)
    }

    /// `count` copies of `S^dim`; zero copies is a point.
    pub fn spheres(dim: i32, count: u64) -> Self {
        let mut w = Self::point();
        w.add(dim, count);
        w
    }

    pub fn add(&mut self, dim: i32, count: u64) {
        if count > 0 {
            *self.multiplicity.entry(dim).or_insert(0) += count;
        }
    }

    pub fn is_point(&self) -> bool {
        self.multiplicity.is_empty()
    }

    pub fn multiplicity(&self) -> &BTreeMap<i32, u64> {
        &self.multiplicity
    }

    pub fn count(&self, dim: i32) -> u64 {
        self.multiplicity.get(&dim).copied().unwrap_or(0)
    }

    pub fn max_dim(&self) -> Option<i32> {
        self.multiplicity.keys().next_back().copied()
    }

    /// One-point union; multiplicities add.
    pub fn wedge(mut self, other: &WedgeOfSpheres) -> Self {
        for (&d, &c) in &other.multiplicity {
            self.add(d, c);
        }
        self
    }

    /// `Σ^s`: every sphere moves up `s` dimensions. The point stays a point.
    pub fn suspend(&self, s: i32) -> Self {
        Self {
            multiplicity: self
                .multiplicity
                .iter()
                .map(|(&d, &c)| (d + s, c))
                .collect(),
        }
    }

    /// `times` copies of the wedge.
    pub fn repeat(&self, times: u64) -> Self {
        Self {
            multiplicity: self
                .multiplicity
                .iter()
                .filter(|_| times > 0)
                .map(|(&d, &c)| (d, c * times))
                .collect(),
        }
    }

    /// Unreduced Euler characteristic, `1 + Σ (-1)^d`.
    pub fn chi(&self) -> i64 {
        1 + self
            .multiplicity
            .iter()
            .map(|(&d, &c)| {
                if d.rem_euclid(2) == 0 {
                    c as i64
                } else {
                    -(c as i64)
                }
            })
            .sum::<i64>()
    }

    /// Reduced Betti numbers of the wedge (free, one generator per sphere).
    pub fn betti(&self, coefficients: Coefficients) -> BettiProfile {
        BettiProfile {
            reduced_betti: self.multiplicity.clone(),
            torsion: Vec::new(),
            coefficients,
        }
    }
}

impl fmt::Display for WedgeOfSpheres {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return f.write_str("pt");
        }
        let parts: Vec<String> = self
            .multiplicity
            .iter()
            .rev()
            .map(|(d, c)| {
                if *c == 1 {
                    format!("S^{d}")
                } else {
                    format!("{c}xS^{d}")
                }
            })
            .collect();
        f.write_str(&parts.join(" v "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Coefficients {
    /// The prime field with the given characteristic.
    Prime(u32),
    Integers,
}

impl Coefficients {
    pub const GF2: Coefficients = Coefficients::Prime(2);
    pub const GF3: Coefficients = Coefficients::Prime(3);
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Prime(p) => write!(f, "gf{p}"),
            Coefficients::Integers => f.write_str("int"),
        }
    }
}

impl From<Coefficients> for String {
    fn from(c: Coefficients) -> String {
        c.to_string()
    }
}

impl TryFrom<String> for Coefficients {
    type Error = String;

    fn try_from(s: String) -> std::result::Result<Self, String> {
        s.parse()
    }
}

impl FromStr for Coefficients {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.to_ascii_lowercase();
        if s == "int" || s == "z" || s == "integers" {
            return Ok(Coefficients::Integers);
        }
        let p = s
            .strip_prefix("gf")
            .and_then(|p| p.parse::<u32>().ok())
            .ok_or_else(|| format!("unknown coefficients `{s}` (expected gf<p> or int)"))?;
        if is_prime(p) {
            Ok(Coefficients::Prime(p))
        } else {
            Err(format!("{p} is not a prime"))
        }
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Torsion {
    pub dim: i32,
    #[serde(with = "decimal")]
    pub factor: BigUint,
}

/// Invariant factors travel as decimal strings.
mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Reduced Betti numbers (nonzero entries only) plus integral torsion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiProfile {
    pub reduced_betti: BTreeMap<i32, u64>,
    pub torsion: Vec<Torsion>,
    pub coefficients: Coefficients,
}

impl BettiProfile {
    pub fn zero(coefficients: Coefficients) -> Self {
        Self {
            reduced_betti: BTreeMap::new(),
            torsion: Vec::new(),
            coefficients,
        }
    }

    pub fn betti(&self, dim: i32) -> u64 {
        self.reduced_betti.get(&dim).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.reduced_betti.is_empty() && self.torsion.is_empty()
    }

    /// Homology of the `s`-fold suspension: `β̃_i(Σ^s K) = β̃_{i-s}(K)`.
    pub fn shifted(&self, s: i32) -> Self {
        Self {
            reduced_betti: self
                .reduced_betti
                .iter()
                .map(|(&d, &c)| (d + s, c))
                .collect(),
            torsion: self
                .torsion
                .iter()
                .map(|t| Torsion {
                    dim: t.dim + s,
                    factor: t.factor.clone(),
                })
                .collect(),
            coefficients: self.coefficients,
        }
    }

    /// Direct sum of reduced homologies, as for a wedge.
    pub fn plus(&self, other: &BettiProfile) -> Self {
        let mut out = self.clone();
        for (&d, &c) in &other.reduced_betti {
            *out.reduced_betti.entry(d).or_insert(0) += c;
        }
        out.torsion.extend(other.torsion.iter().cloned());
        out.torsion
            .sort_by(|a, b| (a.dim, &a.factor).cmp(&(b.dim, &b.factor)));
        out
    }

    /// Reduced Euler characteristic `Σ (-1)^i β̃_i`.
    pub fn reduced_euler(&self) -> i64 {
        self.reduced_betti
            .iter()
            .map(|(&d, &c)| {
                if d.rem_euclid(2) == 0 {
                    c as i64
                } else {
                    -(c as i64)
                }
            })
            .sum()
    }

    /// The wedge of spheres with these Betti numbers, if there is no torsion.
    pub fn as_wedge(&self) -> Option<WedgeOfSpheres> {
        self.torsion.is_empty().then(|| WedgeOfSpheres {
            multiplicity: self.reduced_betti.clone(),
        })
    }
}

/// Sparse matrix stored by columns; each column is sorted by row index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.columns[col]
            .binary_search_by_key(&row, |&(r, _)| r)
            .map_or(0, |i| self.columns[col][i].1)
    }
}

/// Faces of the augmented complex, bucketed by cardinality, each bucket in
/// lexicographic order.
struct Chains {
    by_size: Vec<Vec<u128>>,
    index: Vec<HashMap<u128, usize>>,
}

impl Chains {
    fn build(g: &Graph, budget: FaceBudget) -> Result<Self> {
        let mut by_size: Vec<Vec<u128>> = vec![Vec::new()];
        for face in face_masks(g, budget)? {
            let size = face.count_ones() as usize;
            if by_size.len() <= size {
                by_size.resize_with(size + 1, Vec::new);
            }
            by_size[size].push(face);
        }
        let index = by_size
            .iter()
            .map(|faces| faces.iter().enumerate().map(|(i, &f)| (f, i)).collect())
            .collect();
        Ok(Self { by_size, index })
    }

    fn total(&self) -> usize {
        self.by_size.iter().map(Vec::len).sum()
    }

    /// Top geometric dimension (`-1` for the empty complex).
    fn top_dim(&self) -> i32 {
        self.by_size.len() as i32 - 2
    }

    fn rank_of(&self, dim: i32) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|s| self.by_size.get(s))
            .map_or(0, Vec::len)
    }

    /// `∂_d : C_d -> C_{d-1}` for `d >= 0`.
    fn boundary(&self, dim: i32) -> SparseMatrix {
        let size = (dim + 1) as usize;
        let empty = Vec::new();
        let cols = self.by_size.get(size).unwrap_or(&empty);
        let nrows = self.by_size.get(size - 1).map_or(0, Vec::len);
        let rows = &self.index[size - 1];
        let columns = cols
            .iter()
            .map(|&face| {
                let mut col = Vec::with_capacity(size);
                let mut rest = face;
                let mut j = 0;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    col.push((rows[&(face ^ bit)], sign));
                    j += 1;
                }
                col.sort_unstable_by_key(|&(r, _)| r);
                col
            })
            .collect();
        SparseMatrix { nrows, columns }
    }
}

/// `∂_d` of `I(g)`: rows are the `(d-1)`-faces and columns the `d`-faces,
/// both in lexicographic order. For `d = 0` the single row is the empty face.
pub fn boundary_matrix(g: &Graph, dim: i32, budget: FaceBudget) -> Result<SparseMatrix> {
    let chains = Chains::build(g, budget)?;
    if dim < 0 {
        return Ok(SparseMatrix {
            nrows: 0,
            columns: vec![Vec::new(); chains.rank_of(dim)],
        });
    }
    Ok(chains.boundary(dim))
}

fn betti_from_ranks(chains: &Chains, ranks: &[usize], coefficients: Coefficients) -> BettiProfile {
    // ranks[d] = rank ∂_d for d = 0..=top
    let rank = |d: i32| {
        usize::try_from(d)
            .ok()
            .and_then(|d| ranks.get(d))
            .copied()
            .unwrap_or(0)
    };
    let mut reduced_betti = BTreeMap::new();
    for d in -1..=chains.top_dim() {
        let b = chains.rank_of(d) - rank(d) - rank(d + 1);
        if b > 0 {
            reduced_betti.insert(d, b as u64);
        }
    }
    BettiProfile {
        reduced_betti,
        torsion: Vec::new(),
        coefficients,
    }
}

/// Reduced Betti numbers of `I(g)` over `GF(p)`, computed directly from the
/// face enumeration.
pub fn betti_over_field(g: &Graph, p: u32, budget: FaceBudget) -> Result<BettiProfile> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let chains = Chains::build(g, budget)?;
    let top = chains.top_dim();
    let mut ranks = vec![0usize; (top + 1).max(0) as usize];
    // Top dimension first: faces that are pivots of ∂_{d+1} reduce to zero
    // in ∂_d and can be skipped.
    let mut cleared: Vec<bool> = Vec::new();
    for d in (0..=top).rev() {
        let m = chains.boundary(d);
        let (r, pivots) = field::rank_mod_p(&m, p, &cleared);
        ranks[d as usize] = r;
        cleared = vec![false; m.nrows];
        for row in pivots {
            cleared[row] = true;
        }
    }
    Ok(betti_from_ranks(&chains, &ranks, Coefficients::Prime(p)))
}

/// Reduced integral homology of `I(g)`: Betti numbers and torsion invariant
/// factors, via Smith normal form of every boundary map.
pub fn integral_homology(g: &Graph, budget: FaceBudget) -> Result<BettiProfile> {
    let chains = Chains::build(g, budget)?;
    if chains.total() > INTEGRAL_FACE_LIMIT {
        return Err(Error::IntegralTooLarge {
            faces: chains.total(),
            limit: INTEGRAL_FACE_LIMIT,
        });
    }
    let top = chains.top_dim();
    let mut ranks = vec![0usize; (top + 1).max(0) as usize];
    let mut torsion = Vec::new();
    for d in 0..=top {
        let factors = snf::invariant_factors(&chains.boundary(d));
        ranks[d as usize] = factors.len();
        for f in factors {
            if !f.is_one() {
                // torsion of ∂_d's cokernel sits in H_{d-1}
                torsion.push(Torsion {
                    dim: d - 1,
                    factor: f.magnitude().clone(),
                });
            }
        }
    }
    let mut profile = betti_from_ranks(&chains, &ranks, Coefficients::Integers);
    profile.torsion = torsion;
    Ok(profile)
}

/// Homology of `I(g)` with the given coefficients, no reduction.
pub fn homology(g: &Graph, coefficients: Coefficients, budget: FaceBudget) -> Result<BettiProfile> {
    match coefficients {
        Coefficients::Prime(p) => betti_over_field(g, p, budget),
        Coefficients::Integers => integral_homology(g, budget),
    }
}

/// Homology computed after fold reduction, together with the number of
/// suspensions the reduction stripped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedHomology {
    pub profile: BettiProfile,
    pub suspensions_applied: u32,
}

/// Reduce `g`, take the homology of the residual and shift it back up by the
/// suspensions the reduction removed. Contractible traces give zero.
pub fn reduced_homology(
    g: &Graph,
    coefficients: Coefficients,
    budget: FaceBudget,
) -> Result<ReducedHomology> {
    let trace = reduce(g);
    let profile = if trace.contractible {
        BettiProfile::zero(coefficients)
    } else {
        homology(&trace.residual, coefficients, budget)?.shifted(trace.suspensions as i32)
    };
    Ok(ReducedHomology {
        profile,
        suspensions_applied: trace.suspensions,
    })
}

pub fn betti_of_family(
    family: Family,
    coefficients: Coefficients,
    budget: FaceBudget,
) -> Result<ReducedHomology> {
    reduced_homology(&Graph::build_family(family)?, coefficients, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{euler_from_fvector, f_vector};
    use crate::graph::{Family, FamilyTag};
    use proptest::prelude::*;

    const B: FaceBudget = FaceBudget {
        ceiling: crate::complex::DEFAULT_FACE_CEILING,
    };

    fn gf2(g: &Graph) -> BettiProfile {
        betti_over_field(g, 2, B).unwrap()
    }

    fn profile(entries: &[(i32, u64)], c: Coefficients) -> BettiProfile {
        BettiProfile {
            reduced_betti: entries.iter().copied().collect(),
            torsion: vec![],
            coefficients: c,
        }
    }

    #[test]
    fn boundary_examples() {
        let k2 = Graph::path(2).unwrap();
        let d0 = boundary_matrix(&k2, 0, B).unwrap();
        assert_eq!(d0.nrows, 1);
        assert_eq!(d0.columns, vec![vec![(0, 1)], vec![(0, 1)]]);

        let p3 = Graph::path(3).unwrap();
        let d1 = boundary_matrix(&p3, 1, B).unwrap();
        // rows {0}, {1}, {2}; column {0, 2}
        assert_eq!(d1.nrows, 3);
        assert_eq!(d1.columns, vec![vec![(0, -1), (2, 1)]]);

        let e3 = Graph::from_edges(3, &[]).unwrap();
        let d2 = boundary_matrix(&e3, 2, B).unwrap();
        // rows {0,1}, {0,2}, {1,2}
        assert_eq!(d2.nrows, 3);
        assert_eq!(d2.columns, vec![vec![(0, 1), (1, -1), (2, 1)]]);
        assert_eq!(d2.get(1, 0), -1);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let g = Graph::build_family(Family::B(3)).unwrap();
        for d in 1..6 {
            let outer = boundary_matrix(&g, d, B).unwrap();
            let inner = boundary_matrix(&g, d - 1, B).unwrap();
            for col in &outer.columns {
                let mut acc = vec![0i64; inner.nrows];
                for &(r, v) in col {
                    for &(rr, w) in &inner.columns[r] {
                        acc[rr] += v * w;
                    }
                }
                assert!(acc.iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn field_examples() {
        let g2 = Graph::build_gamma(2, 6).unwrap();
        assert_eq!(gf2(&g2), profile(&[(2, 1)], Coefficients::GF2));
        let g4 = Graph::build_gamma(4, 6).unwrap();
        assert_eq!(gf2(&g4), profile(&[(5, 3)], Coefficients::GF2));
        let k2 = Graph::path(2).unwrap();
        assert_eq!(gf2(&k2), profile(&[(0, 1)], Coefficients::GF2));
        let empty = k2.delete_vertices(&[0, 1]).unwrap();
        assert_eq!(gf2(&empty), profile(&[(-1, 1)], Coefficients::GF2));
        assert_eq!(betti_over_field(&k2, 4, B), Err(Error::NotPrime(4)));
    }

    #[test]
    fn integral_examples() {
        let int = |g: &Graph| integral_homology(g, B).unwrap();
        let g2 = Graph::build_gamma(2, 6).unwrap();
        assert_eq!(int(&g2), profile(&[(2, 1)], Coefficients::Integers));
        assert_eq!(
            int(&Graph::path(3).unwrap()),
            profile(&[(0, 1)], Coefficients::Integers)
        );
        let y1 = Graph::build_family(Family::Y(1)).unwrap();
        assert_eq!(int(&y1), profile(&[(1, 1)], Coefficients::Integers));
    }

    #[test]
    fn five_cycle_is_a_circle() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let h = integral_homology(&c5, B).unwrap();
        assert_eq!(h, profile(&[(1, 1)], Coefficients::Integers));
    }

    /// Graph whose independence complex is the barycentric subdivision of
    /// the 6-vertex projective plane: vertices are its faces, adjacent iff
    /// not comparable under inclusion.
    fn projective_plane() -> Graph {
        let triangles: [[u8; 3]; 10] = [
            [1, 2, 3],
            [1, 2, 4],
            [1, 3, 5],
            [1, 4, 6],
            [1, 5, 6],
            [2, 3, 6],
            [2, 4, 5],
            [2, 5, 6],
            [3, 4, 5],
            [3, 4, 6],
        ];
        let mut faces: Vec<Vec<u8>> = Vec::new();
        for t in &triangles {
            for mask in 1u8..8 {
                let f: Vec<u8> = (0..3)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| t[i])
                    .collect();
                if !faces.contains(&f) {
                    faces.push(f);
                }
            }
        }
        assert_eq!(faces.len(), 31);
        let subset = |a: &[u8], b: &[u8]| a.iter().all(|x| b.contains(x));
        let mut edges = Vec::new();
        for i in 0..faces.len() {
            for j in i + 1..faces.len() {
                if !subset(&faces[i], &faces[j]) && !subset(&faces[j], &faces[i]) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(faces.len(), &edges).unwrap()
    }

    #[test]
    fn integral_detects_torsion() {
        let g = projective_plane();
        let z = integral_homology(&g, B).unwrap();
        assert!(z.reduced_betti.is_empty());
        assert_eq!(
            z.torsion,
            vec![Torsion {
                dim: 1,
                factor: BigUint::from(2u32)
            }]
        );
        assert_eq!(z.as_wedge(), None);
        assert_eq!(gf2(&g), profile(&[(1, 1), (2, 1)], Coefficients::GF2));
        assert!(betti_over_field(&g, 3, B).unwrap().reduced_betti.is_empty());

        let json = serde_json::to_string(&z).unwrap();
        assert!(
            json.contains(r#""torsion":[{"dim":1,"factor":"2"}]"#),
            "{json}"
        );
        assert_eq!(serde_json::from_str::<BettiProfile>(&json).unwrap(), z);
    }

    #[test]
    fn family_pipeline_examples() {
        let run = |f| betti_of_family(f, Coefficients::GF2, B).unwrap().profile;
        assert_eq!(run(Family::A(4)), profile(&[(5, 2)], Coefficients::GF2));
        assert_eq!(run(Family::B(3)), profile(&[(4, 1)], Coefficients::GF2));
        assert!(run(Family::X(3)).is_zero());
    }

    #[test]
    fn small_families_field_independent() {
        for n in 1..=4 {
            for tag in FamilyTag::ALL {
                let g = Graph::build_family(tag.with(n, 6)).unwrap();
                let a = betti_over_field(&g, 2, B).unwrap();
                let b = betti_over_field(&g, 3, B).unwrap();
                let c = integral_homology(&g, B).unwrap();
                assert_eq!(a.reduced_betti, b.reduced_betti, "{tag} {n}");
                assert_eq!(a.reduced_betti, c.reduced_betti, "{tag} {n}");
                assert!(c.torsion.is_empty());
                let chi = euler_from_fvector(&f_vector(&g, B).unwrap());
                assert_eq!(a.reduced_euler() + 1, chi);
                let piped = reduced_homology(&g, Coefficients::GF2, B).unwrap().profile;
                assert_eq!(piped, a, "{tag} {n}");
            }
        }
    }

    #[test]
    fn wedge_algebra() {
        let w = WedgeOfSpheres::sphere(2).wedge(&WedgeOfSpheres::spheres(5, 3));
        assert_eq!(w.chi(), 1 + 1 - 3);
        assert_eq!(w.suspend(6).count(11), 3);
        assert_eq!(w.repeat(2).count(2), 2);
        assert!(WedgeOfSpheres::point().suspend(4).is_point());
        assert_eq!(WedgeOfSpheres::point().chi(), 1);
        assert_eq!(WedgeOfSpheres::sphere(-1).chi(), 0);
        assert_eq!(w.to_string(), "3xS^5 v S^2");
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"2":1,"5":3}"#);
    }

    #[test]
    fn coefficient_parsing() {
        assert_eq!("gf2".parse::<Coefficients>(), Ok(Coefficients::GF2));
        assert_eq!("GF3".parse::<Coefficients>(), Ok(Coefficients::GF3));
        assert_eq!("int".parse::<Coefficients>(), Ok(Coefficients::Integers));
        assert!("gf4".parse::<Coefficients>().is_err());
        assert!("q".parse::<Coefficients>().is_err());
    }

    fn random_grid_subgraph(max_n: u32) -> impl Strategy<Value = Graph> {
        (
            1..=max_n,
            prop::collection::vec(any::<bool>(), 6 * max_n as usize),
        )
            .prop_map(|(n, keep)| {
                let g = Graph::build_gamma(n, 6).unwrap();
                let drop: Vec<usize> = (0..g.len()).filter(|&i| !keep[i]).collect();
                g.delete_vertices(&drop).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn euler_poincare(g in random_grid_subgraph(3)) {
            let h = gf2(&g);
            let chi = euler_from_fvector(&f_vector(&g, B).unwrap());
            prop_assert_eq!(h.reduced_euler() + 1, chi);
        }

        #[test]
        fn k2_suspension(h in random_grid_subgraph(2)) {
            let h = if h.len() > 14 { h.delete_vertices(&(14..h.len()).collect::<Vec<_>>()).unwrap() } else { h };
            let g = Graph::path(2).unwrap().disjoint_union(&h);
            prop_assert_eq!(gf2(&g), gf2(&h).shifted(1));
        }

        #[test]
        fn reduction_consistent(g in random_grid_subgraph(3)) {
            let direct = gf2(&g);
            let piped = reduced_homology(&g, Coefficients::GF2, B).unwrap().profile;
            prop_assert_eq!(piped, direct);
        }
    }
}

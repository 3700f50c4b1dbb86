//! Grid graphs and their induced subgraphs.
//!
//! Vertices are grid points `(x, y)` with `1 <= x <= n` (column) and
//! `1 <= y <= k` (row). Every [`Graph`] keeps its vertices sorted
//! column-major, `(x, y) < (x', y')` iff `x < x'` or `x == x'` and `y < y'`,
//! and all vertex indices in the crate refer to positions in that order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum vertex count for which neighbor bitmasks are kept.
pub const MASK_LIMIT: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub x: u32,
    pub y: u32,
}

impl Vertex {
    pub const fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Tag recording which construction a graph came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    Gamma,
    X,
    Y,
    A,
    B,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 5] = [
        FamilyTag::Gamma,
        FamilyTag::X,
        FamilyTag::Y,
        FamilyTag::A,
        FamilyTag::B,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::Gamma => "gamma",
            FamilyTag::X => "x",
            FamilyTag::Y => "y",
            FamilyTag::A => "a",
            FamilyTag::B => "b",
        }
    }

    /// The family member with parameter `n`; `k` is only used for `Gamma`.
    pub fn with(self, n: u32, k: u32) -> Family {
        match self {
            FamilyTag::Gamma => Family::Gamma { n, k },
            FamilyTag::X => Family::X(n),
            FamilyTag::Y => Family::Y(n),
            FamilyTag::A => Family::A(n),
            FamilyTag::B => Family::B(n),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gamma" | "g" => Ok(FamilyTag::Gamma),
            "x" => Ok(FamilyTag::X),
            "y" => Ok(FamilyTag::Y),
            "a" => Ok(FamilyTag::A),
            "b" => Ok(FamilyTag::B),
            other => Err(format!("unknown family `{other}` (expected gamma|x|y|a|b)")),
        }
    }
}

/// The grid `P_n x P_k` or one of the width-6 subgraphs obtained from it by
/// deleting vertices of the last column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Gamma {
        n: u32,
        k: u32,
    },
    /// Last column without rows 1, 3, 5.
    X(u32),
    /// Last column without rows 3, 4.
    Y(u32),
    /// Last column without rows 1, 5.
    A(u32),
    /// Last column without row 4.
    B(u32),
}

impl Family {
    pub fn tag(&self) -> FamilyTag {
        match self {
            Family::Gamma { .. } => FamilyTag::Gamma,
            Family::X(_) => FamilyTag::X,
            Family::Y(_) => FamilyTag::Y,
            Family::A(_) => FamilyTag::A,
            Family::B(_) => FamilyTag::B,
        }
    }

    pub fn n(&self) -> u32 {
        match *self {
            Family::Gamma { n, .. } => n,
            Family::X(n) | Family::Y(n) | Family::A(n) | Family::B(n) => n,
        }
    }

    pub fn k(&self) -> u32 {
        match *self {
            Family::Gamma { k, .. } => k,
            _ => 6,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Family::Gamma { n, k } if n == 0 || k == 0 => Err(Error::EmptyGrid { n, k }),
            _ if self.n() == 0 => Err(Error::InvalidFamily),
            _ => Ok(()),
        }
    }

    /// Rows removed from the last column.
    fn removed_rows(&self) -> &'static [u32] {
        match self {
            Family::Gamma { .. } => &[],
            Family::X(_) => &[1, 3, 5],
            Family::Y(_) => &[3, 4],
            Family::A(_) => &[1, 5],
            Family::B(_) => &[4],
        }
    }

    /// The distinguished vertex `(n, 3)`.
    pub fn v(&self) -> Vertex {
        Vertex::new(self.n(), 3)
    }

    /// The distinguished vertex `(n, 4)`.
    pub fn w(&self) -> Vertex {
        Vertex::new(self.n(), 4)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Gamma { n, k } => write!(f, "Gamma({n},{k})"),
            Family::X(n) => write!(f, "X({n})"),
            Family::Y(n) => write!(f, "Y({n})"),
            Family::A(n) => write!(f, "A({n})"),
            Family::B(n) => write!(f, "B({n})"),
        }
    }
}

/// A finite simple graph whose vertices carry grid coordinates.
///
/// Graphs are immutable; every deletion returns a new value.
#[derive(Clone, Debug)]
pub struct Graph {
    n: u32,
    k: u32,
    origin: Option<FamilyTag>,
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    masks: Option<Vec<u128>>,
}

/// Equality compares grid bounds, vertices and edges; the origin tag is
/// provenance only.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.k == other.k
            && self.vertices == other.vertices
            && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// The `n x k` grid graph `P_n x P_k`.
    pub fn build_gamma(n: u32, k: u32) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::EmptyGrid { n, k });
        }
        let vertices: Vec<Vertex> = (1..=n)
            .flat_map(|x| (1..=k).map(move |y| Vertex::new(x, y)))
            .collect();
        let idx = |x: u32, y: u32| ((x - 1) * k + (y - 1)) as usize;
        let mut edges = Vec::with_capacity((k * (n - 1) + n * (k - 1)) as usize);
        for x in 1..=n {
            for y in 1..=k {
                if y < k {
                    edges.push((idx(x, y), idx(x, y + 1)));
                }
                if x < n {
                    edges.push((idx(x, y), idx(x + 1, y)));
                }
            }
        }
        Ok(Self::assemble(
            n,
            k,
            Some(FamilyTag::Gamma),
            vertices,
            edges,
        ))
    }

    pub fn build_family(family: Family) -> Result<Self> {
        family.validate()?;
        let gamma = Self::build_gamma(family.n(), family.k())?;
        let removed: Vec<Vertex> = family
            .removed_rows()
            .iter()
            .map(|&y| Vertex::new(family.n(), y))
            .collect();
        let mut g = gamma.delete_coords(&removed)?;
        g.origin = Some(family.tag());
        Ok(g)
    }

    /// Path `P_m` laid out along the first row (`Γ_{m,1}`).
    pub fn path(m: u32) -> Result<Self> {
        Self::build_gamma(m, 1)
    }

    /// A graph on `m` vertices placed at `(1,1), ..., (m,1)` with arbitrary
    /// edges given by index pairs.
    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let vertices = (1..=m as u32).map(|x| Vertex::new(x, 1)).collect();
        Self::from_parts(m as u32, 1, None, vertices, edges.to_vec())
    }

    /// Validating constructor: coordinates inside the `n x k` box, vertices
    /// strictly column-major sorted, edges simple and in range.
    pub fn from_parts(
        n: u32,
        k: u32,
        origin: Option<FamilyTag>,
        vertices: Vec<Vertex>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        for v in &vertices {
            if v.x == 0 || v.x > n || v.y == 0 || v.y > k {
                return Err(Error::MalformedGraph(format!(
                    "vertex {v} outside the {n}x{k} grid"
                )));
            }
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedGraph(
                "vertices must be strictly sorted column-major".into(),
            ));
        }
        let len = vertices.len();
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            for i in [a, b] {
                if i >= len {
                    return Err(Error::InvalidVertex { index: i, len });
                }
            }
            if a == b {
                return Err(Error::MalformedGraph(format!("loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::MalformedGraph(format!(
                    "duplicate edge {{{}, {}}}",
                    e.0, e.1
                )));
            }
            normalized.push(e);
        }
        Ok(Self::assemble(n, k, origin, vertices, normalized))
    }

    fn assemble(
        n: u32,
        k: u32,
        origin: Option<FamilyTag>,
        vertices: Vec<Vertex>,
        mut edges: Vec<(usize, usize)>,
    ) -> Self {
        edges.sort_unstable();
        let mut neighbors = vec![Vec::new(); vertices.len()];
        for &(a, b) in &edges {
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        let masks = (vertices.len() <= MASK_LIMIT).then(|| {
            neighbors
                .iter()
                .map(|list| list.iter().fold(0u128, |m, &j| m | (1u128 << j)))
                .collect()
        });
        Self {
            n,
            k,
            origin,
            vertices,
            edges,
            neighbors,
            masks,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn origin(&self) -> Option<FamilyTag> {
        self.origin
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Vertex {
        self.vertices[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Sorted open neighborhood of `i` (no bounds check).
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors[i].len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.neighbors[a].binary_search(&b).is_ok()
    }

    /// Per-vertex neighbor bitmasks, present when the graph has at most
    /// [`MASK_LIMIT`] vertices.
    pub fn masks(&self) -> Option<&[u128]> {
        self.masks.as_deref()
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                index: i,
                len: self.len(),
            })
        }
    }

    /// `N(v)` when `closed` is false, `N[v]` otherwise; sorted.
    pub fn neighborhood(&self, v: usize, closed: bool) -> Result<Vec<usize>> {
        self.check(v)?;
        let mut out = self.neighbors[v].clone();
        if closed {
            let pos = out.binary_search(&v).unwrap_err();
            out.insert(pos, v);
        }
        Ok(out)
    }

    /// Induced subgraph `G - S`; vertex order is preserved.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<Graph> {
        let mut drop = vec![false; self.len()];
        for &i in removed {
            self.check(i)?;
            drop[i] = true;
        }
        let mut remap = vec![usize::MAX; self.len()];
        let mut vertices = Vec::with_capacity(self.len());
        for (i, &v) in self.vertices.iter().enumerate() {
            if !drop[i] {
                remap[i] = vertices.len();
                vertices.push(v);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| !drop[a] && !drop[b])
            .map(|&(a, b)| (remap[a], remap[b]))
            .collect();
        Ok(Self::assemble(self.n, self.k, self.origin, vertices, edges))
    }

    /// `G - S` with `S` given by coordinates; coordinates absent from the
    /// graph are an error.
    pub fn delete_coords(&self, removed: &[Vertex]) -> Result<Graph> {
        let idx = removed
            .iter()
            .map(|&v| {
                self.index_of(v)
                    .ok_or_else(|| Error::MalformedGraph(format!("vertex {v} is not in the graph")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.delete_vertices(&idx)
    }

    /// Disjoint union with `other` placed in columns to the right of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().map(|v| Vertex::new(v.x + shift, v.y)));
        let off = self.len();
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + off, b + off)));
        Self::assemble(self.n + other.n, self.k.max(other.k), None, vertices, edges)
    }

    /// Image under the row reflection `(x, y) -> (x, k + 1 - y)`.
    pub fn row_flip(&self) -> Graph {
        let k = self.k;
        let mut order: Vec<(Vertex, usize)> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (Vertex::new(v.x, k + 1 - v.y), i))
            .collect();
        order.sort_unstable();
        let mut remap = vec![0; self.len()];
        for (new, &(_, old)) in order.iter().enumerate() {
            remap[old] = new;
        }
        let vertices = order.into_iter().map(|(v, _)| v).collect();
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (remap[a], remap[b]);
                (a.min(b), a.max(b))
            })
            .collect();
        Self::assemble(self.n, self.k, self.origin, vertices, edges)
    }

    /// Connected components as sorted index lists, ordered by least member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            k: self.k,
            family: self.origin,
            vertices: self.vertices.iter().map(|v| [v.x, v.y]).collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_json(json: GraphJson) -> Result<Graph> {
        Self::from_parts(
            json.n,
            json.k,
            json.family,
            json.vertices
                .into_iter()
                .map(|[x, y]| Vertex::new(x, y))
                .collect(),
            json.edges.into_iter().map(|[a, b]| (a, b)).collect(),
        )
    }
}

/// Wire form of a [`Graph`]: 0-based edge indices into `vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: u32,
    pub k: u32,
    #[serde(default)]
    pub family: Option<FamilyTag>,
    pub vertices: Vec<[u32; 2]>,
    pub edges: Vec<[usize; 2]>,
}

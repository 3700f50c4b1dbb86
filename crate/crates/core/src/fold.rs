//! Homotopy-preserving reductions of independence complexes, performed on
//! the graph.
//!
//! Three moves are applied, in priority order:
//!
//! 1. **Cone**: an isolated vertex makes `I(G)` a cone, hence contractible.
//! 2. **StripK2**: a connected component isomorphic to `K_2` is removed; since
//!    `I(K_2) = S^0`, this costs one suspension.
//! 3. **Fold**: if `N(v) ⊆ N(w)` for distinct `v`, `w`, removing `w` does not
//!    change the homotopy type of the independence complex.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphJson, Vertex};
use crate::homology::WedgeOfSpheres;

/// One reduction step. Vertices are recorded by coordinates so that the
/// trace stays meaningful as indices shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Move {
    /// `w` removed because `N(v) ⊆ N(w)`.
    Fold { v: Vertex, w: Vertex },
    /// `v` is isolated; reduction stops.
    Cone { v: Vertex },
    /// The component `{a, b}` is a `K_2`; removed with one suspension.
    StripK2 { a: Vertex, b: Vertex },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub moves: Vec<Move>,
    pub suspensions: u32,
    pub contractible: bool,
    pub residual: Graph,
}

impl ReductionTrace {
    pub fn to_json(&self) -> TraceJson {
        TraceJson {
            moves: self.moves.clone(),
            suspensions: self.suspensions,
            contractible: self.contractible,
            residual: self.residual.to_json(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub moves: Vec<Move>,
    pub suspensions: u32,
    pub contractible: bool,
    pub residual: GraphJson,
}

fn is_subset(g: &Graph, small: usize, big: usize) -> bool {
    if let Some(m) = g.masks() {
        return m[small] & !m[big] == 0;
    }
    let (a, b) = (g.neighbors(small), g.neighbors(big));
    if a.len() > b.len() {
        return false;
    }
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Least `(w, v)` (compared as a pair, `w` first) with `v != w` and
/// `N(v) ⊆ N(w)`, returned as `(v, w)`. For twins (`N(v) = N(w)`) only the
/// pair removing the larger index qualifies.
pub fn find_fold(g: &Graph) -> Option<(usize, usize)> {
    for w in 0..g.len() {
        for v in 0..g.len() {
            if v == w || g.degree(v) > g.degree(w) || !is_subset(g, v, w) {
                continue;
            }
            let twins = g.degree(v) == g.degree(w);
            if twins && v > w {
                continue;
            }
            return Some((v, w));
        }
    }
    None
}

fn find_isolated(g: &Graph) -> Option<usize> {
    (0..g.len()).find(|&i| g.degree(i) == 0)
}

fn find_k2(g: &Graph) -> Option<(usize, usize)> {
    (0..g.len()).find_map(|a| match g.neighbors(a) {
        &[b] if g.degree(b) == 1 => Some((a, b)),
        _ => None,
    })
}

/// Applies Cone, StripK2 and Fold moves until none applies or the complex
/// is known to be contractible.
///
/// `I(g)` is homotopy equivalent to `I(residual)` suspended `suspensions`
/// times (or to a point if `contractible`).
pub fn reduce(g: &Graph) -> ReductionTrace {
    let mut current = g.clone();
    let mut moves = Vec::new();
    let mut suspensions = 0;
    loop {
        if let Some(v) = find_isolated(&current) {
            moves.push(Move::Cone {
                v: current.vertex(v),
            });
            return ReductionTrace {
                moves,
                suspensions,
                contractible: true,
                residual: current,
            };
        }
        let removed = if let Some((a, b)) = find_k2(&current) {
            moves.push(Move::StripK2 {
                a: current.vertex(a),
                b: current.vertex(b),
            });
            suspensions += 1;
            vec![a, b]
        } else if let Some((v, w)) = find_fold(&current) {
            moves.push(Move::Fold {
                v: current.vertex(v),
                w: current.vertex(w),
            });
            vec![w]
        } else {
            return ReductionTrace {
                moves,
                suspensions,
                contractible: false,
                residual: current,
            };
        };
        current = current
            .delete_vertices(&removed)
            .expect("move indices come from the current graph");
    }
}

/// The homotopy type read off a trace without further computation: a point
/// if contractible, `S^(s-1)` if the residual is empty, otherwise unknown.
pub fn homotopy_type_if_closed(trace: &ReductionTrace) -> Option<WedgeOfSpheres> {
    if trace.contractible {
        Some(WedgeOfSpheres::point())
    } else if trace.residual.is_empty() {
        Some(WedgeOfSpheres::sphere(trace.suspensions as i32 - 1))
    } else {
        None
    }
}

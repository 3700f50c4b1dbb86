//! Independence complexes of square grid graphs.
//!
//! The crate treats a finite simple graph `G` implicitly as its independence
//! complex `I(G)`, whose faces are the independent vertex sets of `G`. On top
//! of that it provides:
//!
//! * [`graph`]: the grid graphs `P_n x P_k` and the width-6 families
//!   `X_n`, `Y_n`, `A_n`, `B_n` obtained by deleting vertices of the last column;
//! * [`complex`]: face enumeration, f-vectors and Euler characteristics;
//! * [`fold`]: a homotopy-preserving reduction engine (fold moves, cone
//!   points and `K_2` components);
//! * [`homology`]: reduced Betti numbers over `GF(p)` and over the integers;
//! * [`transfer`]: Euler characteristics of `I(P_n x P_k)` for large `n` through
//!   a signed transfer matrix, plus period detection;
//! * [`predict`]: closed-form homotopy types of `I(P_n x P_6)` and of the
//!   auxiliary families as wedges of spheres;
//! * [`verify`]: cross-checks tying all of the above together.

pub mod complex;
pub mod error;
pub mod fold;
pub mod graph;
pub mod homology;
pub mod predict;
pub mod transfer;
pub mod verify;

pub use complex::{FVector, FaceBudget};
pub use error::{Error, Result};
pub use fold::{reduce, ReductionTrace};
pub use graph::{Family, Graph, Vertex};
pub use homology::{BettiProfile, Coefficients, WedgeOfSpheres};
pub use predict::{predict_family, predict_gamma};
pub use transfer::TransferModel;

//! Exact apolarity toolkit.
//!
//! Forms `F` in `S = k[x0..xn]` are acted on by differential operators in
//! the dual ring `T = k[y0..yn]`, with `y_j(x_i) = δ_ij`. On top of that
//! action the crate computes catalecticant matrices and Hilbert functions,
//! graded pieces of annihilator and point ideals, the space of all partials
//! of a dehomogenization `F_l`, the local Gorenstein apolar scheme
//! `Γ(F_l)` together with a check that its homogenized ideal annihilates
//! `F`, and the resulting bounds on the cactus rank.
//!
//! Everything is exact, over `Q` or a prime field `F_p` with `p` larger than
//! the degrees involved.

pub mod apolar;
pub mod error;
pub mod field;
pub mod graded;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod rank;
pub mod ring;
pub mod subspace;

pub use apolar::{
    affine_annihilator, annihilator_piece, catalecticant, decompose_check, diff_space,
    gamma_scheme, hilbert_function, point_ideal_piece, remark2_check, ApolarScheme, Decomposition,
    DiffSpace, HilbertFunction, Remark2Report,
};
pub use error::{Error, Result};
pub use field::{Field, Scalar, DEFAULT_PRIME};
pub use graded::{empty_projective, ideal_piece, kernel, piece_contained, Emptiness, GradedPiece};
pub use linalg::ExactMatrix;
pub use monomial::{monomial_basis, Monomial};
pub use poly::{Poly, PolyRing, Side};
pub use rank::{
    cactus_upper_bound, default_candidates, diff_length, generic_rank, nd_bound, rank_report,
    secant_dimension, CactusBound, GenericRank, RankOptions, RankReport,
};
pub use ring::{
    apply_op, dehomogenize, homogenize_element, random_form, random_linear_form, substitute,
    LinearSubstitution,
};
pub use subspace::Subspace;

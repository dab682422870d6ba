//! Generalized Seifert matrices and Alexander-type invariants of colored
//! braid closures.
//!
//! The pipeline: parse a colored braid ([`braid`]), build a C-complex for
//! its closure as a decorated spine ([`ccomplex`]), read off the family of
//! generalized Seifert matrices ([`seifert`]), and derive the Conway
//! potential function, multivariable Alexander polynomial, Alexander-module
//! presentation matrix and signature/nullity functions ([`invariants`]).
//! Exact polynomial arithmetic lives in [`laurent`] and [`bareiss`]; [`fox`]
//! provides an independent Alexander-polynomial oracle for cross-checking.
//!
//! The core arithmetic is generic over the integer scalar (any
//! `num_integer::Integer + Signed`) and the floating-point scalar (any
//! `num_traits::Float`); the aliases below fix the defaults used by the
//! command-line tool.

pub mod bareiss;
pub mod braid;
pub mod ccomplex;
mod dsu;
pub mod eigen;
pub mod fox;
pub mod invariants;
pub mod laurent;
pub mod seifert;

/// Default exact coefficient ring: arbitrary-precision integers.
pub type Coefficient = num_bigint::BigInt;

/// Laurent polynomials with [`Coefficient`] entries.
pub type Laurent = laurent::LaurentPoly<Coefficient>;

/// Reduced Conway potential functions over [`Coefficient`].
pub type Potential = laurent::PotentialFunction<Coefficient>;

/// Square matrices of [`Laurent`] entries.
pub type PolyMatrix = Vec<Vec<Laurent>>;

/// Default floating-point scalar for signature computations.
pub type Real = f64;

/// Torus points at the default float precision.
pub type TorusPoint = invariants::SignaturePoint<Real>;

/// Signature/nullity results at the default float precision.
pub type Signature = invariants::SignatureResult<Real>;

pub use braid::{parse_braid, BraidError, BraidPermutation, ColoredBraid};
pub use ccomplex::{
    build_spine, cleanup, disk_colors, encode_spine, ensure_connected, remove_ribbons,
    sort_by_color, DecoratedSpine, DragOrder, PassSide, RawEvent, SpineEdge, SpineError,
};
pub use invariants::{
    alexander_from_conway, conway_potential, hermitian_h, presentation_matrix, signature_nullity,
    InvariantError, EIGENVALUE_ZERO_THRESHOLD,
};
pub use seifert::{
    chi_excluding, complex_sign, crossing_symbol, eps_index, eps_tuple, homology_basis, linking,
    seifert_family, DirectedEdge, OrientedCircuit, SeifertFamily,
};

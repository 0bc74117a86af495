//! Equivariant Euler characteristics and indices in the Burnside ring.
#![allow(clippy::needless_range_loop)]

pub mod burnside;
pub mod error;
pub mod group;
pub mod gspace;
pub mod index;
pub mod invertible;
pub mod json;
pub mod lattice;
pub mod marks;
pub mod scalar;

pub use burnside::{commuting_tuple_counts, BurnsideElement, ClassFunction};
pub use error::{Error, Result};
pub use group::{build_group, build_group_with, FiniteGroup, Limits, Phase, Presentation};
pub use gspace::{
    barycentric_subdivide, chi_G_simplicial, chi_G_stratified, chi_G_stratified_reduced, chi_k_direct,
    chi_orbifold_direct, fixed_subcomplex, GSimplicialComplex, SimplicialComplex, StratifiedGData,
};
pub use index::{
    equivariant_milnor, fixed_indices_from_index, gsv_assemble_from_dims, gsv_from_radial, higher_order_index,
    index_from_fixed_indices, index_from_fixed_indices_conj, index_from_fixed_indices_sub, index_from_quotient,
    index_from_strata, induce_orbit_index, poincare_hopf_check, FixedSetIndexData, GsvDimensions, PoincareHopfReport,
    SingularOrbitDatum, StratumIndexData,
};
pub use invertible::{duality_check, index_df, symmetry_group, DiagonalGroup, DualPair, InvertiblePolynomial};
pub use lattice::{build_lattice, ClassId, SubgroupEmbedding, SubgroupId, SubgroupLattice};
pub use marks::TableOfMarks;
pub use scalar::Scalar;

/// Burnside-ring elements with machine-integer coefficients.
pub type Burnside = BurnsideElement<i64>;
/// Burnside-ring elements with arbitrary-precision coefficients.
pub type BigBurnside = BurnsideElement<num_bigint::BigInt>;

//! Invertible polynomials with their diagonal symmetry groups.

pub mod diagonal;
pub mod duality;
pub mod matrix;
pub mod milnor;
pub mod poly;

pub use diagonal::{is_symmetry, pairing, symmetry_group, DiagonalGroup, DualPair};
pub use duality::{duality_check, DualPairRow, DualityReport};
pub use milnor::{
    chi_G_milnor, chi_milnor_fixed, chibar_G_milnor, index_df, milnor_data, FixedMilnorDatum, MilnorData,
};
pub use poly::{Atom, AtomKind, InvertiblePolynomial, Weight};

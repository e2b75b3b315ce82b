//! Exact multilinear algebra for higher-order continuum mechanics:
//! multi-index combinatorics, symmetric tensors in compressed storage,
//! jets of polynomial fields, and hyper-stresses with the generalized
//! Cauchy restriction.
//!
//! All components are exact rationals ([`Scalar`]); floating point only
//! appears in the midpoint-quadrature cross-checks.

pub mod altforms;
pub mod error;
pub mod hyperstress;
pub mod io;
pub mod jet;
pub mod linalg;
pub mod multiindex;
pub mod polyfield;
pub mod random;
pub mod scalar;
pub mod symtensor;
pub mod verify;

pub use altforms::{CoDimOneForm, TopForm, Vector};
pub use error::{Error, Result};
pub use hyperstress::{
    BoxRegion, HyperTraction, TractionHyperStress, TractionStressField, VariationalHyperStress,
    VariationalStressField,
};
pub use jet::{ChartMap, JetCovector, JetElement};
pub use linalg::Matrix;
pub use multiindex::{CardinalityIndex, MultiIndex, Permutation};
pub use polyfield::{Point, PolyField, Polynomial};
pub use scalar::Scalar;
pub use symtensor::{Convention, DenseTensor, SymTensor, Variance};

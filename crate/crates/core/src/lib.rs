//! Central extensions of nilpotent bicommutative algebras: exact arithmetic
//! over the rationals and prime fields, second cohomology, automorphism
//! orbits, isomorphism testing, and a catalog of the one-generated algebras
//! of dimension at most six.

pub mod algebra;
pub mod autfamily;
pub mod catalog;
pub mod cohom;
pub mod expr;
pub mod extension;
pub mod format;
pub mod fp;
pub mod iso;
pub mod linalg;
pub mod morphism;
pub mod oracle;
pub mod scalar;
pub mod verify;

pub use algebra::Algebra;
pub use cohom::{BilinearForm, CohomologyClass, CohomologySpace};
pub use morphism::Morphism;
pub use scalar::{FieldSpec, Scalar};

//! Exact computations with principal subspaces of standard modules for
//! affine sl(n+1).
//!
//! Two independent routes compute the graded dimensions of a principal
//! subspace `W(L) = U(nbar) v_L`:
//!
//! * [`ideal`] presents it as `U(nbar) / I_L` and computes graded pieces of
//!   the left ideal by exact linear algebra in a PBW basis ([`upbw`]);
//! * [`fock`] realizes the module inside tensor powers of the lattice vertex
//!   operator module `V_P` and computes ranks of `b . v_L` directly.
//!
//! [`verifier`] compares the two component by component.

pub mod cache;
pub mod error;
pub mod fock;
pub mod ideal;
pub mod linalg;
pub mod root_data;
pub mod text;
pub mod upbw;
pub mod verifier;

pub use error::{Error, Result};
pub use root_data::{Cocycle, LieData, RootSystemData, StructureConstants};
pub use upbw::{AffineWeight, AlgElem, Character, Coeff, GradedIndex, LoopGen, Monomial};

//! Exact-arithmetic workbench for ½ℤ-graded Lie superalgebras defined by
//! parametric structure constants.
//!
//! The crate provides:
//!
//! - exact rational scalars and half-integer indices ([`scalar`], [`halfint`]);
//! - basis symbols, elements and tensors with canonical serialization
//!   ([`key`], [`lincomb`]);
//! - a definition DSL with presets for the Witt, Virasoro, twisted
//!   Heisenberg-Virasoro and N=2 Neveu-Schwarz algebras, plus windowed
//!   axiom checks ([`dsl`], [`algebra`]);
//! - the graded tensor calculus: super twist, cyclic map, adjoint diagonal
//!   action and the classical Yang-Baxter expression ([`tensor`]);
//! - the superbialgebra layer: coboundary cobrackets, defect checkers,
//!   derivation tables and inner derivations ([`bialgebra`]);
//! - windowed exact linear algebra for derivation solves, first-cohomology
//!   quotients, invariant spaces and the skew-closure space
//!   ([`cohomology`], [`linalg`]).
//!
//! Everything is exact: no floating point appears anywhere.

pub mod algebra;
pub mod bialgebra;
pub mod cohomology;
pub mod dsl;
pub mod error;
pub mod halfint;
pub mod key;
pub mod linalg;
pub mod lincomb;
pub mod module;
pub mod poly;
pub mod scalar;
pub mod tensor;

pub use algebra::{check_spec_consistency, AlgebraSpec, ConsistencyReport};
pub use bialgebra::{
    co_jacobi_defect, compatibility_defect, delta_r, derivation_defect, inner_derivation,
    lemma_identity_check, rho, superbialgebra_verdict, DerivationTable, RhoParams, VerdictReport,
};
pub use cohomology::{
    h1_window, inner_space, invariant_space, rational_nullspace, reduce_nonzero_degree,
    skew_closure_space, solve_derivations, SkewClosureReport, SolveReport,
};
pub use dsl::{parse_element, parse_spec, preset, serialize_spec, ParsedValue};
pub use error::{AlgebraError, ParseError};
pub use halfint::HalfInt;
pub use key::{BasisKey, Family, Parity};
pub use lincomb::{Element, Tensor2, Tensor3};
pub use module::{BlockPart, CoeffDescriptor, ModuleElem};
pub use scalar::Scalar;
pub use tensor::{act2, act3, cybe, is_super_skew, mybe_defect, skewize, twist, Window};

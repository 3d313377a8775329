//! Error types shared across the crate.

use thiserror::Error;

use crate::halfint::HalfInt;
use crate::key::{BasisKey, Family};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("index {index} is not on the lattice of family {family}")]
    IndexLattice { family: Family, index: HalfInt },
    #[error("family {0} is not declared by algebra '{1}'")]
    UnknownFamily(Family, String),
    #[error("element is not parity-homogeneous")]
    NotHomogeneous,
    #[error("tensor has odd total parity where even is required")]
    OddTensor,
    #[error("tensor is not super-skew")]
    NotSkew,
    #[error("derivation table has degree 0 where a nonzero degree is required")]
    ZeroDegree,
    #[error("bracket [{x}, {y}] leaves the table's domain window (key {out})")]
    OutsideWindow { x: BasisKey, y: BasisKey, out: BasisKey },
    #[error("the domain window does not contain {0}")]
    WindowTooSmall(BasisKey),
}

/// A parse failure with its 1-based source position.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError { line, col, message: message.into() }
    }
}

//! Exact computations with polynomial maps on Chevalley algebras.
//!
//! The crate is layered bottom-up: [`scalar`] fields, [`linalg`] dense
//! matrices, [`rootsystem`], [`chevalley`] algebras with tabulated brackets,
//! [`matrixrep`] matrix realizations, [`freelie`] free Lie polynomials and the
//! [`maps`] algorithms built on top of them.

#![allow(clippy::type_complexity, clippy::wrong_self_convention, clippy::needless_range_loop)]

pub mod chevalley;
pub mod encoding;
pub mod error;
pub mod freelie;
pub mod linalg;
pub mod maps;
pub mod matrixrep;
pub mod mpoly;
pub mod rootsystem;
pub mod scalar;

pub use chevalley::{build_chevalley, AlgElement, ChevalleyAlgebra};
pub use error::{Error, Result};
pub use freelie::{make_engel, parse, EngelSpec, LieAlgebra, LieExpr, LiePoly, LyndonForm};
pub use matrixrep::{MatrixElement, RealizationKind};
pub use rootsystem::{build_root_system, HeightOrder, Root, RootSystem, RootType};
pub use scalar::{make_field, Field, FieldDescriptor, PrimeField, Rationals};

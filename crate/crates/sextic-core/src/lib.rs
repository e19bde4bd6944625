//! Exact algebra behind the classification of sextic curves in the Fano
//! threefold V₅ that admit rational Galois covers in P³.
//!
//! Everything is computed over Q(ζ₂₄) or rational functions over it; there
//! is no floating point anywhere in the crate.
#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod binforms;
pub mod exactfield;
pub mod fano;
pub mod groups;
pub mod invariants;
pub mod lifts;
pub mod linalg;
pub mod pipeline;

pub use binforms::{BinaryForm, Mat2, ProjPoint};
pub use exactfield::{CycloNum, Field, FieldError, ParamScalar, Poly, Rational};

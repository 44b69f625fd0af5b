//! Exact computation of the finite invariants of fusion and modular tensor
//! categories.

pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod formats;
pub mod fusion_ring;
pub mod modular;
pub mod pointed_center;
pub mod skein;
pub mod tl;

pub use error::{Error, Result};

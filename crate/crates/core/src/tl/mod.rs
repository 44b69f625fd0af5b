//! The Temperley–Lieb category TL(τ) and its semisimplification at roots
//! of unity.

mod diagram;
mod jones_wenzl;
mod morphism;
mod quotient;

pub use diagram::{MAX_POINTS, TLDiagram, catalan, enumerate_diagrams};
pub use jones_wenzl::{is_killed_by_generators, jones_wenzl, jones_wenzl_family, quantum_integers};
pub use morphism::TLMorphism;
pub(crate) use quotient::BlockTrace;
pub use quotient::{TLFusionRing, level_tau, negligible_gram_rank, theta, tl_fusion_ring, trivalent_vertex};

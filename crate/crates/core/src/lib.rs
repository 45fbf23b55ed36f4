//! Exact models of simple bounded weight modules over sl(inf), o(inf),
//! sp(inf) and their finite-rank truncations: realization inside
//! polynomial algebras, classification up to isomorphism, highest-weight
//! testing, branching, and direct-limit identification.

pub mod borel;
pub mod branching;
pub mod classify;
pub mod degrees;
pub mod error;
pub mod limits;
pub mod parse;
pub mod realization;
pub mod rootdata;
pub mod scalar;
pub mod setdesc;
pub mod verify;
pub mod weight;

pub use error::{Error, Result};

//! Discovery and verification of the polynomial identities satisfied by the
//! partially alternating ternary sum in a free associative dialgebra.

pub mod dialgebra;
pub mod error;
pub mod exactla;
pub mod identities;
pub mod repanalysis;
pub mod symgroup;
pub mod ternary;

pub use error::{Error, Result};

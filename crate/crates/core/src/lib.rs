//! Binary cyclic codes, the distribution of their syndromes under assumed
//! block length and synchronization, and blind reconstruction of the code
//! parameters from a noisy bitstream.

pub mod channel;
pub mod code;
pub mod dist;
pub mod error;
pub mod gf2;
pub mod linalg;
pub mod recon;
pub mod verify;

pub use code::{CyclicCode, WeightDistribution};
pub use error::{Error, Result};
pub use gf2::{FactorMultiset, Poly2};

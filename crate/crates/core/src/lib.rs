//! Integral representations of finite permutation groups: G-lattices,
//! their cohomology, flasque resolutions and exact-sequence certificates.

pub mod caps;
pub mod cohom;
pub mod error;
pub mod flasque;
pub mod glat;
pub mod intlin;
pub mod permgrp;
pub mod scalar;
pub mod seqcert;

pub use caps::Caps;
pub use error::{Error, Result};
pub use intlin::{AbelianInvariants, IntMat, Matrix};
pub use num_bigint::BigInt;

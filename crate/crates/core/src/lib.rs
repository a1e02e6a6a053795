//! Nichols algebras of braided vector spaces, computed exactly.
pub mod bpair;
pub mod builtins;
pub mod braidgrp;
pub mod error;
pub mod groups;
pub mod io;
pub mod linalg;
pub mod nichols;
pub mod quandle;
pub mod rank2;
pub mod scalars;
pub mod tensor;

pub use bpair::BraidedPair;
pub use error::{Error, Result};
pub use scalars::{Cyc, RootOrder};
pub use tensor::TensorVec;

/// Sets the worker count for parallel elimination. Results do not depend on it.
/// Fails if a pool was already started with a different size.
#[cfg(feature = "parallel")]
pub fn set_threads(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("thread count must be positive".into()));
    }
    match rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
        Ok(()) => Ok(()),
        Err(_) if rayon::current_num_threads() == n => Ok(()),
        Err(e) => Err(Error::Invalid(e.to_string())),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn set_threads(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("thread count must be positive".into()));
    }
    Ok(())
}

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod gamma_tools;
pub mod harmonic;
pub mod numerics;
pub mod verify;
pub mod zeta_series;

pub use error::{Error, Result};

pub mod combinatorics;
pub mod error;
pub mod linalg;
pub mod multiplicity;
pub mod oracle;
pub mod presentation;
pub mod specht;

pub use error::{Error, Result};

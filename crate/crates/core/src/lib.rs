pub mod error;
pub mod gf;
pub mod linalg;
pub mod metric;
pub mod codes;
pub mod volume;
pub mod bounds;
pub mod enumerator;
pub mod decoding;
pub mod cli;

pub use error::{Error, Result};

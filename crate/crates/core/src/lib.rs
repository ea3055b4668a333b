//! Exact arithmetic in iterated Ore extensions of commutative rings, with
//! tools to verify structural claims about them.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod lang;
pub mod linalg;
pub mod report;
pub mod tower;
pub mod zoo;

pub use error::{Error, Result};

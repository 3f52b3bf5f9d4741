pub mod asw;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod groups;
pub mod psl2;
pub mod ramification;
mod serde_util;
pub mod suites;
pub mod vancycles;

pub use error::{Error, Result};

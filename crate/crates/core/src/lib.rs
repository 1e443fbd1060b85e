pub mod cli;
pub mod cyclotomic;
pub mod divisibility;
pub mod error;
pub mod help;
pub mod numtheory;
pub mod psl2;
pub mod realbasis;

pub use error::{Error, Result};

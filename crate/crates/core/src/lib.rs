pub mod automata;
pub mod classify;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod logic;
pub mod monoid;
pub mod varieties;

pub use error::{Error, Result};

pub mod chevalley;
pub mod classical;
pub mod cli;
pub mod error;
pub mod ffcount;
pub mod field;
pub mod lie;
pub mod linalg;
pub mod restricted;
pub mod rootsys;

pub use error::{Error, Result};

pub mod barrier;
pub mod bounds;
pub mod check;
pub mod cli;
pub mod error;
pub mod lemmas;
pub mod model;
pub mod quadrature;
pub mod report;
pub mod series;
pub mod special;

pub use error::{Error, Result};

pub mod error;
pub mod idset;
pub mod linalg;
pub mod quiverrep;
pub mod rankfn;
pub mod scalar;
pub mod spectra;
pub mod tube;
pub mod verify;

pub use error::{Error, Result};
pub use idset::IdSet;
pub mod catmodel;
pub mod cli;

//! Weight enumerators, weight adjacency matrices and their MacWilliams
//! transforms for linear block codes, convolutional codes and
//! entanglement-assisted quantum convolutional codes, in exact arithmetic.

pub mod algebra;
pub mod block;
pub mod cli;
pub mod conv;
pub mod error;
pub mod formats;
pub mod quantum;
pub mod verify;

pub use error::{Error, Result};

//! Exact-arithmetic Lie theory.

pub mod cartan;
mod error;
pub mod exactlin;
pub mod freelie;
pub mod io;
pub mod lie;
pub mod matrix_lie;
pub mod presets;
pub mod weights;

pub use error::{Error, Status};

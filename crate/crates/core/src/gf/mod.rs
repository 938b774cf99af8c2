//! Prime-field linear algebra and binary code primitives.

pub mod code;
pub mod coset;
pub mod matrix;
pub mod word;

pub use code::{LinearCode, NearestNeighbour};
pub use coset::{syndrome_decode, CosetLeaderTable};
pub use matrix::{parity_check_of, Matrix, Rref};
pub use word::BinaryWord;

//! Binary Schubert codes and the Gröbner bases of their binomial ideals.
//!
//! The crate builds Grassmann and Schubert codes from Plücker coordinates,
//! turns a binary code into its binomial ideal, computes the reduced
//! Gröbner basis under degrevlex (with a reference Buchberger engine and a
//! fast coset-leader engine), reads off the error-correcting capability,
//! and decodes received words through canonical forms.
//!
//! Matrices and codes are generic over the residue storage type; the
//! aliases below fix it to `u32`, which covers every prime used here.

pub mod decoder;
pub mod error;
pub mod gf;
pub mod groebner;
pub mod limits;
pub mod oracle;
pub mod scalar;
pub mod schubert;

pub use decoder::{
    cross_check, gb_decode, gb_decode_with, monomial_to_word, parse_word, simulate,
    word_to_monomial, Agreement, DecodeMode, DecodeOutcome, DecodeStatus, ErrorModel, SimReport,
};
pub use error::{Error, Result};
pub use gf::{
    parity_check_of, syndrome_decode, BinaryWord, CosetLeaderTable, Matrix, NearestNeighbour,
};
pub use groebner::{
    buchberger, coset_engine, ideal_generators, is_groebner, Binomial, BinomialKind, Monomial,
    ReducedGroebnerBasis, SquarefreeMonomial,
};
pub use limits::Limits;
pub use scalar::Residue;
pub use schubert::{
    bruhat_leq, enumerate_schubert_points, gaussian_binomial, generator_matrix, index_tuples,
    plucker, schubert_params, IndexTuple, SchubertFilter, SchubertParams, SchubertSpec,
};

/// Matrix over GF(p) with `u32` residues.
pub type FpMatrix = gf::Matrix<u32>;
/// Linear code with `u32` residues.
pub type LinearCode = gf::LinearCode<u32>;
/// Plücker vector with `u32` residues.
pub type PluckerVector = schubert::PluckerVector<u32>;

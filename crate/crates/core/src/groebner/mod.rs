//! Binomial ideals of binary codes and their reduced Gröbner bases under
//! degrevlex with `x1 > x2 > ... > xn`.

pub mod basis;
pub mod binomial;
pub mod buchberger;
pub mod coset_engine;
pub mod monomial;
pub mod order;
pub mod text;

pub use basis::ReducedGroebnerBasis;
pub use binomial::{ideal_generators, Binomial, BinomialKind};
pub use buchberger::{
    buchberger, buchberger_with, is_groebner, reduce, reduce_by, spoly, BuchbergerStats,
};
pub use coset_engine::{coset_engine, coset_engine_with};
pub use monomial::{degrevlex_compare, Monomial, SquarefreeMonomial};
pub use order::{degrevlex_cmp_exponents, degrevlex_cmp_mask};
pub use text::{parse_basis, parse_listing, to_text, BinomialListing};

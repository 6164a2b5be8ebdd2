//! Exact arithmetic: rationals, trivariate polynomials, factored products and
//! a high-precision real used only for logarithms of huge values.

pub mod factored;
pub mod hp;
pub mod poly;
pub mod sampling;
pub mod scalar;

pub use factored::{Factored, FactoredPoly, PRIMES};
pub use poly::TriPoly;
pub use scalar::{parse_rational, Scalar, WeightTriple, Weights};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

//! Exact arithmetic: big rationals, Gaussian rationals, polynomials and the
//! classical polynomial families (Bernoulli, Hermite, partial ordinary Bell).

mod bell;
mod classical;
mod gauss;
mod poly;

pub use bell::{bell_partial_ordinary, BellRing, BellTable};
pub use classical::{bernoulli_number, bernoulli_poly, binomial, factorial, hermite_poly};
pub use gauss::GaussRational;
pub use poly::{serialize_bipoly, serialize_sigma_poly, serialize_x_poly, BiPoly, UniPoly};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

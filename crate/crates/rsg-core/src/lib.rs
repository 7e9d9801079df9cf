//! Numerical library for generalized Riemann-Siegel expansions.
//!
//! The crate evaluates the remainder `R(s; alpha, beta)` of the approximate
//! functional equation for the Riemann zeta function through an asymptotic
//! expansion in decreasing half-powers of t, whose ingredients are Mordell
//! integrals `G(u; tau)` and exact bivariate polynomials `P_{n,k}(x, sigma)`
//! built from Bernoulli, Hermite and partial ordinary Bell polynomials.
//!
//! Modules:
//! - [`numkernel`]: wide-precision arithmetic, log-gamma/chi/theta kernels,
//!   real-line quadrature;
//! - [`polyalg`]: exact rational/Gaussian-rational polynomial arithmetic;
//! - [`coeffs`]: the coefficient families (f_n, u_m, gamma_m, d, q, s,
//!   P_{n,k}, a_k, classical C_n);
//! - [`mordell`]: the Mordell integral, its normalized form and derivatives;
//! - [`rsformula`]: the headline evaluators (exact remainder, the two
//!   expansions, Hardy's Z).

pub mod coeffs;
pub mod error;
pub mod mordell;
pub mod numkernel;
pub mod polyalg;
pub mod rsformula;

pub use error::{Error, Result};
pub use numkernel::{PrecisionConfig, WideComplex, WideReal};

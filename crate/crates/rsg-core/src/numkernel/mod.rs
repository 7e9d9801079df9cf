//! Precision-aware complex arithmetic, the log-gamma/chi/theta kernel,
//! their vertical-strip asymptotic series, and real-line quadrature.

mod gamma;
mod quad;
mod theta;
mod wide;

pub use gamma::{exp_theta_prefactor_series, gamma_asymptotic, log_gamma, log_gamma_asymptotic};
pub use quad::{integrate_real_line, QuadratureSpec};
pub use theta::{chi, theta_asymptotic, theta_critical_asymptotic, theta_exact};
pub use wide::{PrecisionConfig, WideComplex, WideReal};

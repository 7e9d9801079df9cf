//! Trapezoidal quadrature on a truncated real line.
//!
//! For integrands analytic in a strip around the real axis with Gaussian
//! decay, the uniform trapezoid rule converges geometrically in 1/step, so
//! step-halving refinement gives a reliable self-estimate of the error.

use crate::error::{Error, Result};
use crate::numkernel::wide::{PrecisionConfig, WideComplex, WideReal};

/// Parameters of one real-line quadrature.
#[derive(Clone, Debug)]
pub struct QuadratureSpec {
    pub step: WideReal,
    pub half_width: WideReal,
    pub max_refinements: u32,
    pub target_rel_err: WideReal,
}

impl QuadratureSpec {
    pub fn new(
        step: WideReal,
        half_width: WideReal,
        max_refinements: u32,
        target_rel_err: WideReal,
    ) -> Result<Self> {
        if !step.is_positive() || !half_width.is_positive() || !target_rel_err.is_positive() {
            return Err(Error::InvalidArgument(
                "quadrature step, half_width and target_rel_err must be positive".into(),
            ));
        }
        Ok(QuadratureSpec { step, half_width, max_refinements, target_rel_err })
    }
}

fn trapezoid_pass(
    f: &mut dyn FnMut(&WideReal) -> WideComplex,
    step: &WideReal,
    half_width: &WideReal,
    cfg: &PrecisionConfig,
) -> WideComplex {
    // nodes k*step for |k| <= K; fixed ascending order for reproducibility
    let kmax = (half_width / step).floor_i64().unwrap_or(0).max(0);
    let mut acc = cfg.complex_i64(0, 0);
    let mut k = -kmax;
    while k <= kmax {
        let x = step * &cfg.real_i64(k);
        acc = &acc + &f(&x);
        k += 1;
    }
    acc.scale(step)
}

/// Refine a trapezoid estimate until two successive refinements agree to
/// `target_rel_err` (relative, with an absolute floor at unit scale), then
/// return the finer estimate. Each refinement halves the step and extends
/// the half-width by half a unit.
pub fn integrate_real_line(
    mut f: impl FnMut(&WideReal) -> WideComplex,
    spec: &QuadratureSpec,
    cfg: &PrecisionConfig,
) -> Result<WideComplex> {
    let mut step = spec.step.clone();
    let mut half_width = spec.half_width.clone();
    let half = cfg.real_str("0.5").expect("const");
    let two = cfg.real_i64(2);
    let one = cfg.real_i64(1);
    let mut prev = trapezoid_pass(&mut f, &step, &half_width, cfg);
    let mut last_change = cfg.real_i64(0);
    for _ in 0..spec.max_refinements {
        step = &step / &two;
        half_width = &half_width + &half;
        let next = trapezoid_pass(&mut f, &step, &half_width, cfg);
        let change = (&next - &prev).abs();
        let scale = if next.abs() > one { next.abs() } else { one.clone() };
        if change <= &spec.target_rel_err * &scale {
            return Ok(next);
        }
        last_change = change;
        prev = next;
    }
    Err(Error::QuadratureNonConvergence {
        refinements: spec.max_refinements,
        last_change: format!("{last_change}"),
    })
}

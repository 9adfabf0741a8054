//! Residual bookkeeping shared by the verification suites and tests.
//!
//! Every identity check reports a residual together with a scale
//! (`1 + max |input|`) and a tolerance class; the class fixes the base
//! threshold, which is multiplied by the scale and an optional global factor.

/// Tolerance class of an identity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Tol {
    /// Purely algebraic identity: `1e-10 * scale`.
    Alg,
    /// Identity involving first derivatives: `1e-9 * scale`.
    D1,
    /// Identity involving second derivatives: `1e-7 * scale`.
    D2,
    /// Cross-implementation agreement: `1e-11 * scale`.
    Oracle,
    /// Explicit base threshold.
    Abs(f64),
}

impl Tol {
    pub fn base(self) -> f64 {
        match self {
            Tol::Alg => 1e-10,
            Tol::D1 => 1e-9,
            Tol::D2 => 1e-7,
            Tol::Oracle => 1e-11,
            Tol::Abs(t) => t,
        }
    }
}

/// One evaluated identity.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub residual: f64,
    pub scale: f64,
    pub class: Tol,
}

impl Check {
    pub fn new(id: impl Into<String>, residual: f64, scale: f64, class: Tol) -> Self {
        Self { id: id.into(), residual, scale, class }
    }

    pub fn tol(&self, factor: f64) -> f64 {
        self.class.base() * self.scale * factor
    }

    pub fn pass(&self, factor: f64) -> bool {
        self.residual.is_finite() && self.residual <= self.tol(factor)
    }
}

/// Assert helper used by unit and acceptance tests.
#[track_caller]
pub fn assert_checks(checks: &[Check], factor: f64) {
    for c in checks {
        assert!(
            c.pass(factor),
            "identity `{}` failed: residual {:e} > tol {:e} (scale {:e})",
            c.id,
            c.residual,
            c.tol(factor),
            c.scale
        );
    }
}

/// Largest residual in a batch, useful for summaries.
pub fn worst(checks: &[Check]) -> f64 {
    checks.iter().fold(0.0, |m, c| m.max(c.residual))
}

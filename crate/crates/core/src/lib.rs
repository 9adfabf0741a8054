//! Pointwise Clifford algebra of differential forms on pseudo-Riemannian
//! charts, closed-form connection and generator fields derived from the
//! metric, Dirac-type and Yang-Mills field residuals, and a scenario-driven
//! verification harness that certifies the algebraic and differential
//! identities numerically.

pub mod check;
pub mod clifford;
pub mod connection;
pub mod expr;
pub mod fields;
pub mod gauge;
pub mod geometry;
pub mod num;
pub mod tensor;

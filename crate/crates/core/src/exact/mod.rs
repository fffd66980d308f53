//! Exact scalars, polynomials, matrices and real-root counting.

mod bareiss;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod sturm;
pub mod wronskian;

pub use matrix::ExactMatrix;
pub use poly::Poly;
pub use rational::{parse_rational, Rational};
pub use sturm::{descartes_sign_changes, sturm_root_count, Endpoint, ProjInterval};
pub use wronskian::wronskian_det;

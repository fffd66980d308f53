//! Exact total-positivity tests for Grassmannians and complete flags, the
//! duality and group actions on polynomial spaces, and a numeric engine for
//! real Schubert problems.

pub mod actions;
pub mod chebyshev;
pub mod error;
pub mod exact;
pub mod flag;
pub mod grassmann;
pub mod io;
pub mod sample;
pub mod schubert;
pub mod solver;
pub mod subsets;

pub use error::{Error, Result};
pub use exact::{
    descartes_sign_changes, parse_rational, sturm_root_count, wronskian_det, Endpoint, ExactMatrix, Poly,
    ProjInterval, Rational,
};
pub use grassmann::{
    beta, classify_positivity, perp, plucker_coordinates, wronskian_from_pluckers, PluckerVector,
    PositivityClass, PositivityTag, SubspaceRep,
};
pub use flag::{flag_positivity_plucker, flag_positivity_wronskian, FlagRep, FlagTestReport, Mode};
pub use schubert::{PointMultiset, ProjPoint};
pub use solver::{
    check_positivity_instance, check_secant_instance, d_count, gr24_closed_form, schubert_solve, wronski_solve,
    InstanceReport, InstanceSpec, NumericSolution, SecantCondition, SolverOptions, Status,
};

//! Key equation solvers: the variable-iteration Euclidean baselines and the
//! fixed-iteration register-bank solvers they are checked against.

pub mod classic;
pub mod modified;

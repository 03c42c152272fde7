//! Numeric substrate: dense tensors with reverse-mode automatic
//! differentiation, recurrent cells, additive attention, dropout, SGD,
//! and a finite-difference gradient checker.
//!
//! Computation runs at 32-bit by default; everything is generic over
//! [`Scalar`] so gradient checks can run the same graphs at 64-bit.

mod cells;
mod gradcheck;
mod optim;
mod params;
mod rng;
mod tape;

pub use cells::{
    attention, bi_encode, dropout, gru_step, lstm_step, mlp_out, AttVars, CellVars, GruVars,
    LstmVars, MlpVars,
};
pub use gradcheck::{fd_max_rel_err, grad_check};
pub use optim::sgd_step;
pub use params::{Param, ParamSet};
pub use rng::{mix_seed, Rng};
pub use tape::{Bound, Scalar, Tape, Var};

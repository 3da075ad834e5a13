//! Exact checks of relations on truncated series data.

mod check;

pub use check::{
    check_mrelation, check_relation, perturb, recheck_witness, CheckConfig, CheckReport, Identity,
    Input, NResult, NStatus, Outcome, Side, Witness,
};

pub mod fixtures;
pub mod pit;
pub mod sweep;

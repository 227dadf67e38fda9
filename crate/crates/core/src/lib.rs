//! Classical and quantized two-player strategic games.
//!
//! * [`qmat`] small dense complex linear algebra
//! * [`gamedef`] bimatrix games and the game JSON format
//! * [`qscheme`] Marinatto-Weber and Eisert quantization
//! * [`mixedscan`] mixed-strategy payoff surfaces, grid scans and regions
//! * [`solvers`] pure/mixed Nash, Pareto, best responses, ESS
//! * [`cli`] the `qgames` command line and the claim verification report

pub mod cli;
pub mod error;
pub mod gamedef;
pub mod mixedscan;
pub mod qmat;
pub mod qscheme;
pub mod solvers;

pub use error::{Error, Result};

//! Exact-arithmetic totally positive configurations of decorated flags,
//! their triangulation charts, flips, reversal, and a cactus group action.

pub mod arith;
pub mod axioms;
pub mod cactus;
pub mod calibration;
pub mod cli;
pub mod error;
pub mod flag;
pub mod mutation;
pub mod polygon;
pub mod reconstruct;

pub use arith::{Mat, Scalar};
pub use error::{Error, Result};
pub use flag::{Configuration, DecoratedFlag, MultiIndex};
pub use polygon::{ChartPoint, Triangulation};

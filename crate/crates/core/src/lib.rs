//! Exact symbolic machinery for filtrations of coordinate superalgebras of
//! general linear supergroups: supercommutative arithmetic, superderivations,
//! weight orders, bideterminant bases and span-membership verification.

pub mod bidet;
pub mod error;
pub mod filtration;
pub mod glsuper;
pub mod repro;
pub mod report;
pub mod scalar;
pub mod superderive;
pub mod superring;
pub mod weightcomb;

pub use error::{Error, Result};
pub use scalar::{Characteristic, Scalar};
pub use superring::{parse_expr, Block, RingSpec, SuperElem, SuperMonomial, SuperRing, VarId};

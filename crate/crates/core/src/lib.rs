//! Exact multisegment calculus.
//!
//! Segments and multisegments over cuspidal lines, the Mœglin–Waldspurger
//! involution, matching-function criteria for irreducibility of products,
//! socles of segment, Speh and ladder products, Tadić parameter synthesis, and
//! brute-force oracles for cross-checking.

pub mod criteria;
pub mod error;
pub mod grammar;
pub mod involution;
pub mod line;
pub mod matching;
pub mod multisegment;
pub mod oracle;
pub mod segment;
pub mod sweep;
pub mod unitary;

pub use error::{Error, Result};
pub use grammar::{format, parse};
pub use involution::{mw_involution, mw_step, transpose, MwStep};
pub use line::{Line, Rational};
pub use multisegment::{Bound, Kind, Multisegment, Param, RigidMultisegment, Side, Truncation};
pub use segment::Segment;

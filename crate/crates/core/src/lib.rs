//! q-analogues of Littlewood–Richardson and level-restricted (WZW fusion)
//! coefficients, computed exactly from ribbon tableaux and an affine Weyl
//! group reduction.

pub mod abacus;
pub mod apps;
pub mod error;
pub mod expansion;
pub mod fusion;
pub mod llt;
pub mod partition;
pub mod qlaurent;
pub mod ribbon;
pub mod tableaux;

mod par;

pub use error::{Error, Result};
pub use expansion::SchurExpansion;
pub use partition::{Partition, SkewShape};
pub use qlaurent::{HalfInt, LaurentQPoly};

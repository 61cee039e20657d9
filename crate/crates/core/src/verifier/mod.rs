//! Finite-range checks of the bounds, convexity results and maxN values.

mod bounds;
mod convexity;
mod maxn;
mod report;

pub use bounds::*;
pub use convexity::*;
pub use maxn::*;
pub use report::{BoundReport, Cell, ClaimKind, Table};

//! Finite symmetric 2-groups, 2-rings and 2-modules as explicit tables.

pub mod catalog;
pub mod constructions;
pub mod equivalence;
pub mod error;
pub mod groupoid;
pub mod homgroup;
pub mod io;
pub mod report;
pub mod representation;
pub mod rmodule;
pub mod search;
pub mod tworing;
pub mod twogroup;

pub use error::{Error, Result};
pub use report::CheckReport;

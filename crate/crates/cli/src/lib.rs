//! File formats, reports and the command-line front end for
//! [`argchange_core`].

pub mod apx;
pub mod change_syntax;
pub mod report;
pub mod run;
pub mod whatif;

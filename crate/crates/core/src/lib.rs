#![no_std]
//! Abstract argumentation frameworks and how they respond to change.
//!
//! [`framework`] holds the attack graph, [`semantics`] computes grounded,
//! preferred and stable extensions, [`change`] applies the four single-step
//! changes, [`properties`] classifies a change by comparing outcomes, and
//! [`conditions`] evaluates the known sufficient and necessary conditions for
//! argument additions. [`oracle`] and [`suite`] supply brute-force references
//! and seeded random instances.

extern crate alloc;

pub mod change;
pub mod conditions;
pub mod framework;
pub mod oracle;
pub mod properties;
pub mod semantics;
pub mod suite;

pub use change::{apply, Change, ChangeError, ChangeKind};
pub use framework::{ArgumentId, Framework, FrameworkError};
pub use properties::StructuralProperty;
pub use semantics::{extensions, Extension, ExtensionSet, SemanticsKind};

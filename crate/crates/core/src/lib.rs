//! Deformation behaviour, numerical invariants and complete-intersection
//! obstructions for finite abelian covers of smooth complete intersections.

pub mod bounds;
pub mod ci;
pub mod cli;
pub mod classify;
pub mod cover;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod obstruction;
pub mod output;

pub use ci::CompleteIntersection;
pub use classify::{classify, Behavior, Certificate, CiStatus, Summary, Verdict};
pub use cover::{analyze, CoverAnalysis, CoverSpec, CyclicFactor, VarietyType};
pub use error::{Error, Result};
pub use obstruction::{obstruction_report, CiObstruction, InfeasibleReason, ObstructionResult};
pub use bounds::{bound_box, BoundBox, Criterion, Family};
pub use enumerate::{enumerate_configs, Configuration, CoverFamily, EnumFilter};
pub use output::{OutputRow, Report};

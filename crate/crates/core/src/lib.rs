//! Exact verification of coloured-partition identities: truncated q-series,
//! difference-condition partition enumeration, the recurrence systems that
//! count them, and the infinite products they are compared against.

pub mod dilation;
pub mod error;
pub mod partition;
pub mod product;
pub mod recurrence;
pub mod report;
pub mod series;
pub mod verify;

pub use dilation::{dilated_matrix, dilated_order, DilationSpec};
pub use error::{Error, Result};
pub use partition::{
    Bound, ColourSystem, ColouredPartition, CongruenceClass, DifferenceMatrix, KindRule,
    ListedPartition, Part, PartitionSystem, Space, WeightMap,
};
pub use product::{Factor, Position, Product};
pub use report::{CaseReport, CheckReport, Discrepancy, Status};
pub use series::{pochhammer, Count, Monomial, PochhammerBase, Series, Variables};
pub use verify::{builtin_case, builtin_cases, verify_all, verify_case, IdentityCase, Side};

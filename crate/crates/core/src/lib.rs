//! Four-valent graph–group pairs with a half-arc-transitive group: families,
//! normal quotients, independent cyclic quotients and their classification.

pub mod classify;
pub mod document;
pub mod error;
pub mod families;
pub mod graph;
pub mod group;
pub mod metacirc;
pub mod oracle;
pub mod pair;
pub mod partition;
pub mod perm;
pub mod quotient;
pub mod verify;

pub use error::{Error, Result};
pub use families::{FamilySpec, Orientation, Variant};
pub use graph::OrientedGraph;
pub use group::PermGroup;
pub use pair::{check_og4, pair_isomorphic, IsoOptions, Og4Report, OrientedPair, Witness};
pub use partition::Partition;
pub use perm::Perm;
pub use quotient::{normal_quotient, QuotientKind, QuotientResult};
pub use classify::{classify_independent, ClassificationReport};
pub use document::PairDocument;
pub use metacirc::{check_weak_metacirculant, MetaReport};
pub use verify::{run_all, run_suite, Claim, SuiteReport, SUITES};

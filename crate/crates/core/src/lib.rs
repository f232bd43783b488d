//! Shortest paths under partially ordered weights.

pub mod algorithms;
pub mod batch;
pub mod conditions;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod instance;
pub mod label;
pub mod random;
pub mod rational;
pub mod space;
pub mod suite;
pub mod table;
pub mod weights;

pub use error::CoreError;
pub use graph::{Arc, ArcId, ArcRef, Graph, VertexId};
pub use instance::{Instance, Property, PropertySet, Weighted};
pub use label::{Label, LabelId, LabelStore};
pub use rational::Q;
pub use space::{compare, extend, leo_pick, ComparisonResult, LeoChoice, RelationKind, WeightSpace};
pub use table::{ArcTable, TableDefault, TableWeight, TableWeightSpace};

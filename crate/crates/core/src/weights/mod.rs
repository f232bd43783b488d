//! Concrete weight structures.

pub mod any;
pub mod bottleneck;
pub mod evsp;
pub mod fifo;
pub mod interval;
pub mod kn;
pub mod product;
pub mod semilattice;
pub mod subset;
pub mod tourist;
pub mod vector;
pub mod wcspr;

pub use any::{AnySpace, AnyWeight};
pub use bottleneck::{BottleneckArc, BottleneckSpace, BottleneckWeight};
pub use evsp::{ChargeCurve, EvspArc, EvspSpace, EvspWeight};
pub use fifo::{FifoSpace, TimeWeight, TravelTime};
pub use interval::{IntervalSpace, IntervalWeight};
pub use kn::{KnSpace, KnWeight};
pub use product::ProductSpace;
pub use semilattice::{Cap, MinSemilatticeSpace};
pub use subset::{SubsetSpace, SubsetWeight};
pub use tourist::{TouristSpace, TouristWeight};
pub use vector::{MospSpace, VectorWeight};
pub use wcspr::{WcsprArc, WcsprSpace, WcsprWeight};

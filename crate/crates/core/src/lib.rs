pub mod bits;
pub mod budget;
pub mod circuit;
pub mod emit;
pub mod error;
pub mod graph;
pub mod kp;
pub mod synth;
pub mod table;
pub mod universal;

pub use bits::BitVector;
pub use budget::Budget;
pub use circuit::{Circuit, CircuitBuilder, Gate, GateKind, WireId};
pub use error::{Error, Result};
pub use graph::{Enumeration, Graph, Path, Step};
pub use kp::KpMorphism;
pub use table::TruthTable;
pub use universal::{GraphEncoding, ZkpMorphism};

//! Partition-level combinatorics for modular representations of the
//! symmetric and alternating groups in odd characteristic.
//!
//! * [`partition`]: partitions, nodes, residues, enumeration.
//! * [`branching`]: normal/conormal nodes, `ε_i`, `φ_i`, `ẽ_i`, `f̃_i`.
//! * [`mullineux`]: the Mullineux map, by recursion and by symbols.
//! * [`js`]: JS-partitions and their enumeration.
//! * [`an`]: alternating-group labels and the `p = 5` tensor product test.
//! * [`verify`]: exhaustive lemma checks with JSON-lines reports.

pub mod an;
pub mod branching;
pub mod calibration;
pub mod closed_form;
pub mod error;
pub mod js;
pub mod mullineux;
pub mod partition;
pub mod verify;

pub use branching::{classify_nodes, NodeClassification, Orientation};
pub use error::{Error, Result};
pub use mullineux::{mullineux, mullineux_via_symbol, MullineuxResult, MullineuxSymbol};
pub use partition::{
    enumerate_partitions, parse_partition, Node, Partition, PrimeParam, ResidueContent,
};

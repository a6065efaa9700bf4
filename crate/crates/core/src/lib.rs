pub mod bipperm;
pub mod club;
pub mod cograph_dp;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod recognition;
pub mod reductions;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex};
pub use io::Format;
pub use oracle::{OracleConfig, OracleResult};
pub use witness::{verify_witness, WitnessMode, WitnessStructure};

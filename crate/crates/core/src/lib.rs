//! Partitionable decompositions of even hypercubes `Q_n` into cycles of
//! length `2^i`, with an independent certificate checker.
//!
//! A partitionable decomposition splits the edges of `Q_n` into cycles of a
//! common length and groups the cycles into `n / 2` partition sets, each of
//! which covers every vertex exactly once.
//!
//! ```
//! use hypercube_cycles::drivers::{decompose, DecompositionRequest};
//! use hypercube_cycles::verify::check_certificate;
//!
//! let d = decompose(DecompositionRequest::new(6, 3).unwrap()).unwrap();
//! assert_eq!(d.num_cycles(), 24);
//! assert_eq!(d.num_sets(), 3);
//! assert!(check_certificate(&d).ok());
//! ```

pub mod certfile;
pub mod certificates;
pub mod cli;
pub mod combinators;
pub mod decomposition;
pub mod drivers;
pub mod error;
pub mod hypercube;
pub mod oracle;
pub mod torus;
pub mod verify;

pub use decomposition::{CycleSeq, PartitionedDecomposition};
pub use drivers::{decompose, ham_decompose, halfham_decompose, DecompositionRequest};
pub use error::{Error, Result};
pub use hypercube::{HypercubeDim, ProductEmbedding, VertexLabel};

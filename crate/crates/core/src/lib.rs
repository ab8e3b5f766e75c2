//! Catalan monoids and semirings of order-preserving maps of a finite chain,
//! semirings of Boolean triangular matrices, and exhaustive machine checks of
//! the faithful representations between them.
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! ```bash
//! cargo run -p catalan --example catalan_counts
//! cargo run -p catalan --example complementarity
//! ```

pub mod algebra;
pub mod boolean_matrix;
pub mod chain_maps;
pub mod cli;
pub mod counting;
pub mod error;
pub mod representations;
pub mod verify;

pub use boolean_matrix::{BoolMatrix, Shape};
pub use chain_maps::{MonoidClass, Transformation};
pub use error::{Error, Result};
pub use representations::Partition;

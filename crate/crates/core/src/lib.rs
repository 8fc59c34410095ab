//! Matroid realization spaces: dimension counts, inductively connected
//! orderings, symbolic parametrizations and rigidity.

pub mod catalog;
pub mod dimensions;
pub mod error;
pub mod gc;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod orderings;
pub mod poly;
pub mod realization;
pub mod rigidity;
pub mod set;
pub mod split;

pub use error::{Error, Result};
pub use matroid::{Matroid, Subspace, VectorConfig};
pub use set::ElementSet;
pub use split::SplitHypergraph;

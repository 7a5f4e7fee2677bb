pub mod generators;
pub mod hypergraph;
pub mod incidence;
pub mod kernel;
pub mod ramsey;

pub use hypergraph::{Graph, Hypergraph};
pub use incidence::*;
pub use kernel::*;

//! Exact maximum weight independent set on P6-free graphs through
//! families of potential maximal cliques.

pub mod capture;
pub mod chordal;
pub mod error;
pub mod family;
pub mod gen;
pub mod graph;
pub mod io;
pub mod modular;
pub mod pmc;
pub mod segments;
pub mod solver;
pub mod toolbox;

pub use error::{Error, Result};
pub use family::{Budget, SetFamily};
pub use graph::{Graph, VertexSet};

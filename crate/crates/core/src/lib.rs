//! Construction and verification tools for covers of edge-colored complete
//! bipartite graphs by monochromatic components.
//!
//! An `r`-coloring of `K_{m,n}` is a [`ColoredBiclique`]. The modules cover:
//!
//! - [`analysis`]: monochromatic components, widths, and the structural
//!   predicates (bi-equivalence, spanning, antichain, reduced, singletons).
//! - [`covers`]: exact minimum covers, the constructive covers behind the
//!   reduction arguments, homogeneous covers, and exact `eq`/`eqbi`
//!   equivalence-cover numbers.
//! - [`constructions`]: the extremal permutation coloring, the doubling
//!   family, the Hamiltonian-cycle blow-up, truncated projective planes.
//! - [`dual`]: the 1-cross-intersecting hypergraph pair of a spanning
//!   partition and exact transversal numbers.
//! - [`search`]: orderly enumeration of small colorings and claim sweeps.
//! - [`document`]: the TOML interchange formats.

pub mod analysis;
pub mod constructions;
pub mod covers;
pub mod document;
pub mod dual;
pub mod error;
pub mod model;
pub mod search;
mod setcover;

pub use error::{Error, Result};
pub use model::{
    BipartiteGraph, Color, ColoredBiclique, Component, Cover, PartiteHypergraph, SimpleGraph,
    Vertex,
};
pub use setcover::minimum_set_cover;

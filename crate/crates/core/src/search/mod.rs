//! Exhaustive enumeration of small colorings and batch checks of the
//! small-`r` statements over them.

mod claims;
mod enumerate;

pub use claims::*;
pub use enumerate::{
    enumerate_partitions, orbit_size, EnumSpec, Filters, Partitions, MAX_GUARDED_CELLS,
    MAX_GUARDED_COLORS,
};

use crate::error::Result;
use crate::model::ColoredBiclique;

/// Chains the enumerations of every shape `m x n` with `1 <= m <= spec.m`
/// and `1 <= n <= spec.n`, shapes in lexicographic order.
pub fn sweep(spec: EnumSpec) -> Result<impl Iterator<Item = ColoredBiclique>> {
    let mut parts = Vec::new();
    for m in 1..=spec.m {
        for n in 1..=spec.n {
            parts.push(enumerate_partitions(EnumSpec { m, n, ..spec })?);
        }
    }
    Ok(parts.into_iter().flatten())
}

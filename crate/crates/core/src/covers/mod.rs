//! Covers of `X ∪ Y` by monochromatic components: the exact minimum, the
//! constructive covers used by the reduction arguments, and homogeneous
//! (single-color) covers. Equivalence-cover numbers live in [`equivalence`].

pub mod equivalence;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::analysis::{self, Side};
use crate::error::{Error, Result};
use crate::model::{Color, ColoredBiclique, Component, Cover, Vertex};
use crate::setcover::minimum_set_cover;

pub use equivalence::{
    ktt_minus, log_ratio_bound, min_bi_equivalence_cover, min_bi_equivalence_cover_with_limit,
    min_equivalence_cover, min_equivalence_cover_with_limit, plus_closure, EQBI_SIDE_LIMIT,
    EQ_VERTEX_LIMIT,
};

/// Which argument produced a cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverRule {
    ExactSolver,
    DoubleStar,
    NonSpanningReduction,
    NonBicliqueReduction,
    AntichainViolationReduction,
}

impl CoverRule {
    pub fn tag(self) -> &'static str {
        match self {
            CoverRule::ExactSolver => "exact-solver",
            CoverRule::DoubleStar => "double-star",
            CoverRule::NonSpanningReduction => "non-spanning-reduction",
            CoverRule::NonBicliqueReduction => "non-biclique-reduction",
            CoverRule::AntichainViolationReduction => "antichain-violation-reduction",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub cover: Cover,
    pub optimal: bool,
    pub rule: CoverRule,
}

impl CoverCertificate {
    pub fn len(&self) -> usize {
        self.cover.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cover.is_empty()
    }
}

/// Every component of every color, isolated vertices included, in color
/// then component order.
pub fn all_components(cb: &ColoredBiclique) -> Vec<Component> {
    cb.colors()
        .flat_map(|c| analysis::components(cb, c, true).expect("color in range"))
        .collect()
}

/// A minimum-cardinality cover of `X ∪ Y` by monochromatic components.
pub fn min_cover(cb: &ColoredBiclique) -> CoverCertificate {
    let comps = all_components(cb);
    let universe = cb.vertex_count();
    let sets: Vec<FixedBitSet> = comps
        .iter()
        .map(|k| {
            let mut b = FixedBitSet::with_capacity(universe);
            for v in k.vertices() {
                b.insert(v.global_id(cb.m()));
            }
            b
        })
        .collect();
    let chosen = minimum_set_cover(universe, &sets).expect("isolated singletons make every instance coverable");
    let parts = chosen.into_iter().map(|i| comps[i].clone()).collect();
    CoverCertificate {
        cover: Cover::new(cb, parts).expect("solver output is a cover"),
        optimal: true,
        rule: CoverRule::ExactSolver,
    }
}

/// The least width among colors whose class touches every vertex, with the
/// smallest such color.
pub fn homogeneous_cover_number(cb: &ColoredBiclique) -> Result<(Color, usize)> {
    cb.colors()
        .filter_map(|c| {
            let comps = analysis::components(cb, c, true).expect("color in range");
            comps
                .iter()
                .all(|k| !k.is_trivial())
                .then_some((c, comps.len()))
        })
        .min_by_key(|&(c, w)| (w, c))
        .ok_or(Error::NoSpanningColor)
}

fn component_at(cb: &ColoredBiclique, c: Color, v: Vertex) -> Option<Component> {
    analysis::block_of(cb, c, v).expect("color in range")
}

/// Collects components, skipping absent ones and duplicates, in insertion order.
struct Collector(Vec<Component>);

impl Collector {
    fn push(&mut self, comp: Option<Component>) {
        if let Some(k) = comp {
            if !self.0.contains(&k) {
                self.0.push(k);
            }
        }
    }

    fn finish(self, cb: &ColoredBiclique, rule: CoverRule) -> CoverCertificate {
        CoverCertificate {
            cover: Cover::new(cb, self.0).expect("constructive cover is valid"),
            optimal: false,
            rule,
        }
    }
}

/// The component of the edge `xy` plus, in every other color, the
/// components at `x` and at `y`: at most `2r - 1` parts.
pub fn double_star_cover(cb: &ColoredBiclique, x: usize, y: usize) -> Result<CoverCertificate> {
    if x >= cb.m() || y >= cb.n() {
        return Err(Error::InvalidParameter(format!("no edge x{x}-y{y} in K_{{{},{}}}", cb.m(), cb.n())));
    }
    let edge_color = cb.color(x, y);
    let mut parts = Collector(Vec::new());
    parts.push(component_at(cb, edge_color, Vertex::X(x)));
    for c in cb.colors().filter(|&c| c != edge_color) {
        parts.push(component_at(cb, c, Vertex::X(x)));
        parts.push(component_at(cb, c, Vertex::Y(y)));
    }
    Ok(parts.finish(cb, CoverRule::DoubleStar))
}

/// Applies the first reduction rule that fits `cb` and returns its cover of
/// at most `2r - 2` components.
///
/// Rules are tried in order: a color class that is not a bi-equivalence
/// graph, a vertex missing a color, a proper block containment. A reduced
/// antichain partition matches none of them.
pub fn structural_cover(cb: &ColoredBiclique) -> Result<CoverCertificate> {
    if let Some(cert) = non_biclique_cover(cb) {
        return Ok(cert);
    }
    if let Some(cert) = non_spanning_cover(cb) {
        return Ok(cert);
    }
    if let Some(cert) = antichain_violation_cover(cb)? {
        return Ok(cert);
    }
    Err(Error::NoStructuralRule)
}

fn non_biclique_cover(cb: &ColoredBiclique) -> Option<CoverCertificate> {
    let (c, (x, y)) = cb
        .colors()
        .find_map(|c| analysis::bi_equivalence_witness(cb, c).expect("color in range").map(|w| (c, w)))?;
    let d = cb.color(x, y);
    let mut parts = Collector(Vec::new());
    parts.push(component_at(cb, c, Vertex::X(x)));
    parts.push(component_at(cb, d, Vertex::X(x)));
    for e in cb.colors().filter(|&e| e != c && e != d) {
        parts.push(component_at(cb, e, Vertex::X(x)));
        parts.push(component_at(cb, e, Vertex::Y(y)));
    }
    Some(parts.finish(cb, CoverRule::NonBicliqueReduction))
}

fn non_spanning_cover(cb: &ColoredBiclique) -> Option<CoverCertificate> {
    let (v, missing) = analysis::spanning_witness(cb)?;
    let w = match v {
        Vertex::X(_) => Vertex::Y(0),
        Vertex::Y(_) => Vertex::X(0),
    };
    let via = match (v, w) {
        (Vertex::X(i), Vertex::Y(j)) | (Vertex::Y(j), Vertex::X(i)) => cb.color(i, j),
        _ => unreachable!(),
    };
    let mut parts = Collector(Vec::new());
    for c in cb.colors().filter(|&c| c != missing && c != via) {
        parts.push(component_at(cb, c, v));
    }
    for c in cb.colors() {
        parts.push(component_at(cb, c, w));
    }
    Some(parts.finish(cb, CoverRule::NonSpanningReduction))
}

fn antichain_violation_cover(cb: &ColoredBiclique) -> Result<Option<CoverCertificate>> {
    let Some(violation) = analysis::antichain_violation(cb)? else {
        return Ok(None);
    };
    let (inner, outer) = (&violation.inner, &violation.outer);
    // a vertex of the outer block outside the inner one, and a neighbour of
    // the inner block in its own color
    let lift = |side: Side, i: usize| match side {
        Side::X => Vertex::X(i),
        Side::Y => Vertex::Y(i),
    };
    let a = *outer
        .members
        .iter()
        .find(|u| inner.members.binary_search(u).is_err())
        .expect("proper containment");
    let a = lift(inner.side, a);
    let inner_comp = component_at(cb, inner.color, lift(inner.side, inner.members[0])).expect("block of a component");
    let b = match inner.side {
        Side::X => Vertex::Y(inner_comp.ys[0]),
        Side::Y => Vertex::X(inner_comp.xs[0]),
    };
    let link = match (a, b) {
        (Vertex::X(i), Vertex::Y(j)) | (Vertex::Y(j), Vertex::X(i)) => cb.color(i, j),
        _ => unreachable!(),
    };
    debug_assert!(link != inner.color && link != outer.color);
    let mut parts = Collector(Vec::new());
    for c in cb.colors() {
        parts.push(component_at(cb, c, a));
    }
    for c in cb.colors().filter(|&c| c != inner.color && c != link) {
        parts.push(component_at(cb, c, b));
    }
    Ok(Some(parts.finish(cb, CoverRule::AntichainViolationReduction)))
}

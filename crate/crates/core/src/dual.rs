//! The dual view: a spanning bi-equivalence partition becomes a pair of
//! 1-cross-intersecting `r`-partite hypergraphs on its components.

use fixedbitset::FixedBitSet;

use crate::analysis;
use crate::error::{Error, Result};
use crate::model::{ColoredBiclique, Component, PartiteHypergraph};
use crate::setcover::minimum_set_cover;

/// Vertex limit for [`transversal_number`].
pub const TRANSVERSAL_VERTEX_LIMIT: usize = 4096;
/// Edge limit for [`transversal_number`].
pub const TRANSVERSAL_EDGE_LIMIT: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPair {
    /// `h_x` for every X-vertex `x`, in order (edge `x` of `h1`).
    pub h1: PartiteHypergraph,
    /// `h_y` for every Y-vertex `y`, in order (edge `y` of `h2`).
    pub h2: PartiteHypergraph,
    /// Hypergraph vertex `k` is `components[k]`.
    pub components: Vec<Component>,
}

impl DualPair {
    /// Distinct edges of `h1` with their multiplicities, in first-seen order.
    pub fn h1_multiplicities(&self) -> Vec<(Vec<usize>, usize)> {
        multiplicities(self.h1.edges())
    }

    pub fn h2_multiplicities(&self) -> Vec<(Vec<usize>, usize)> {
        multiplicities(self.h2.edges())
    }

    /// Edges of `h1` followed by edges of `h2`.
    pub fn union_edges(&self) -> Vec<Vec<usize>> {
        self.h1.edges().iter().chain(self.h2.edges()).cloned().collect()
    }
}

fn multiplicities(edges: &[Vec<usize>]) -> Vec<(Vec<usize>, usize)> {
    let mut out: Vec<(Vec<usize>, usize)> = Vec::new();
    for e in edges {
        match out.iter_mut().find(|(f, _)| f == e) {
            Some((_, k)) => *k += 1,
            None => out.push((e.clone(), 1)),
        }
    }
    out
}

/// Hypergraph vertices are the components (color-major, component order
/// within a color); class `c` holds the components of color `c`.
pub fn dualize(cb: &ColoredBiclique) -> Result<DualPair> {
    if let Some((vertex, color)) = analysis::spanning_witness(cb) {
        return Err(Error::NotSpanning { vertex, color });
    }
    analysis::check_all_bi_equivalence(cb)?;
    let mut components = Vec::new();
    let mut classes = Vec::with_capacity(cb.r());
    let mut x_edges = vec![Vec::with_capacity(cb.r()); cb.m()];
    let mut y_edges = vec![Vec::with_capacity(cb.r()); cb.n()];
    for c in cb.colors() {
        let mut class = Vec::new();
        for comp in analysis::components(cb, c, false)? {
            let id = components.len();
            for &x in &comp.xs {
                x_edges[x].push(id);
            }
            for &y in &comp.ys {
                y_edges[y].push(id);
            }
            class.push(id);
            components.push(comp);
        }
        classes.push(class);
    }
    Ok(DualPair {
        h1: PartiteHypergraph::new(classes.clone(), x_edges)?,
        h2: PartiteHypergraph::new(classes, y_edges)?,
        components,
    })
}

/// Every two edges share a vertex.
pub fn is_intersecting(h: &PartiteHypergraph) -> bool {
    let edges = h.edges();
    edges
        .iter()
        .enumerate()
        .all(|(i, e)| edges[i + 1..].iter().all(|f| meet_count(e, f) > 0))
}

fn meet_count(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|v| b.binary_search(v).is_ok()).count()
}

/// Every cross pair meets in exactly one vertex and every vertex lies on an
/// edge of each hypergraph.
pub fn is_one_cross_intersecting(h1: &PartiteHypergraph, h2: &PartiteHypergraph) -> Result<bool> {
    if h1.classes() != h2.classes() {
        return Err(Error::ClassMismatch);
    }
    let exact = h1
        .edges()
        .iter()
        .all(|e| h2.edges().iter().all(|f| meet_count(e, f) == 1));
    let covered = |h: &PartiteHypergraph| {
        let mut seen = vec![false; h.vertex_count()];
        h.edges().iter().flatten().for_each(|&v| seen[v] = true);
        seen.into_iter().all(|s| s)
    };
    Ok(exact && covered(h1) && covered(h2))
}

/// Minimum transversal of `edges`, with a witness in ascending order.
pub fn transversal_number(edges: &[Vec<usize>]) -> Result<(usize, Vec<usize>)> {
    if edges.len() > TRANSVERSAL_EDGE_LIMIT {
        return Err(Error::GuardLimit(format!("{} edges (limit {TRANSVERSAL_EDGE_LIMIT})", edges.len())));
    }
    if let Some(k) = edges.iter().position(Vec::is_empty) {
        return Err(Error::InvalidHypergraph(format!("edge {k} is empty and cannot be hit")));
    }
    let vertices = edges.iter().flatten().max().map_or(0, |&v| v + 1);
    if vertices > TRANSVERSAL_VERTEX_LIMIT {
        return Err(Error::GuardLimit(format!("{vertices} vertices (limit {TRANSVERSAL_VERTEX_LIMIT})")));
    }
    // hitting set = cover the edges by vertex stars
    let mut stars = vec![FixedBitSet::with_capacity(edges.len()); vertices];
    for (k, e) in edges.iter().enumerate() {
        for &v in e {
            stars[v].insert(k);
        }
    }
    let chosen = minimum_set_cover(edges.len(), &stars).expect("nonempty edges are hittable");
    Ok((chosen.len(), chosen))
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Every partite class has at most `C(2(r-1), r-1)` vertices.
pub fn quickproof_bound_check(dp: &DualPair) -> bool {
    let r = dp.h1.rank();
    let bound = binomial(2 * (r - 1), r - 1);
    dp.h1.classes().iter().all(|c| c.len() <= bound)
}

//! Exact equivalence-cover numbers.
//!
//! `eq(G)` is the least number of spanning equivalence subgraphs (disjoint
//! cliques) of `G` whose union contains every edge; `eqbi(G)` is the
//! bipartite analogue with disjoint bicliques. Both are solved by the same
//! layered search: each layer is a partition of the vertices into groups,
//! every uncovered edge is either merged into a group of some layer or the
//! branch dies, and a layer accepts a merge only if the merged group is still
//! a clique (resp. biclique) of the host graph. Layers are interchangeable,
//! so a fresh layer is only opened at the first empty slot.

use crate::error::{Error, Result};
use crate::model::{BipartiteGraph, SimpleGraph};

/// Default vertex limit for [`min_equivalence_cover`].
pub const EQ_VERTEX_LIMIT: usize = 12;
/// Default per-side limit for [`min_bi_equivalence_cover`].
pub const EQBI_SIDE_LIMIT: usize = 8;

/// `G^+`: the bipartite graph with both sides turned into cliques. Left
/// vertex `a` becomes `a`, right vertex `b` becomes `p + b`.
pub fn plus_closure(bg: &BipartiteGraph) -> SimpleGraph {
    let (p, q) = (bg.p(), bg.q());
    let left = (0..p).flat_map(|a| (a + 1..p).map(move |b| (a, b)));
    let right = (0..q).flat_map(move |a| (a + 1..q).map(move |b| (p + a, p + b)));
    let cross = bg.edges().iter().map(|&(a, b)| (a, p + b));
    SimpleGraph::new(p + q, left.chain(right).chain(cross)).expect("distinct in-range edges")
}

/// `K_{t,t}` minus the perfect matching `{(i, i)}`.
pub fn ktt_minus(t: usize) -> Result<BipartiteGraph> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("K_{{t,t}}^- needs t >= 2, got {t}")));
    }
    BipartiteGraph::new(t, t, (0..t).flat_map(|a| (0..t).filter(move |&b| b != a).map(move |b| (a, b))))
}

pub fn min_equivalence_cover(g: &SimpleGraph) -> Result<usize> {
    min_equivalence_cover_with_limit(g, EQ_VERTEX_LIMIT)
}

pub fn min_equivalence_cover_with_limit(g: &SimpleGraph, limit: usize) -> Result<usize> {
    if g.nv() > limit || g.nv() > 64 {
        return Err(Error::GuardLimit(format!("{} vertices (limit {limit})", g.nv())));
    }
    let nv = g.nv();
    let mut adj = vec![0u64; nv];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let host = Host {
        nv,
        edges: g.edges().iter().copied().collect(),
        joinable: Box::new(move |a: u64, b: u64| ones(a).all(|u| adj[u] & b == b)),
    };
    Ok(host.solve())
}

pub fn min_bi_equivalence_cover(bg: &BipartiteGraph) -> Result<usize> {
    min_bi_equivalence_cover_with_limit(bg, EQBI_SIDE_LIMIT)
}

pub fn min_bi_equivalence_cover_with_limit(bg: &BipartiteGraph, limit: usize) -> Result<usize> {
    let (p, q) = (bg.p(), bg.q());
    if p > limit || q > limit || p + q > 64 {
        return Err(Error::GuardLimit(format!("sides {p} and {q} (limit {limit})")));
    }
    let left_mask: u64 = (1u64 << p) - 1;
    // cross-neighbourhoods in the unified numbering
    let mut adj = vec![0u64; p + q];
    for &(a, b) in bg.edges() {
        adj[a] |= 1 << (p + b);
        adj[p + b] |= 1 << a;
    }
    let host = Host {
        nv: p + q,
        edges: bg.edges().iter().map(|&(a, b)| (a, p + b)).collect(),
        joinable: Box::new(move |a: u64, b: u64| {
            // the union stays a biclique iff left(a) × right(b) and
            // left(b) × right(a) are edges
            let cross = |l: u64, r: u64| ones(l).all(|u| adj[u] & r == r);
            cross(a & left_mask, b & !left_mask) && cross(b & left_mask, a & !left_mask)
        }),
    };
    Ok(host.solve())
}

fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

struct Host {
    nv: usize,
    edges: Vec<(usize, usize)>,
    /// Whether two disjoint groups, each already valid, may be merged.
    joinable: Box<dyn Fn(u64, u64) -> bool>,
}

/// One layer: `group[v]` is the mask of the group containing `v`.
#[derive(Clone)]
struct Layer {
    group: Vec<u64>,
}

impl Layer {
    fn new(nv: usize) -> Self {
        Layer {
            group: (0..nv).map(|v| 1u64 << v).collect(),
        }
    }

    fn covers(&self, u: usize, v: usize) -> bool {
        self.group[u] >> v & 1 == 1
    }

    fn merge(&mut self, u: usize, v: usize) {
        let merged = self.group[u] | self.group[v];
        for w in ones(merged) {
            self.group[w] = merged;
        }
    }
}

impl Host {
    fn solve(&self) -> usize {
        if self.edges.is_empty() {
            return 0;
        }
        let mut best = self.greedy();
        // top-down: shrink while the next smaller layer count is feasible
        while best > 1 && self.feasible(best - 1) {
            best -= 1;
        }
        best
    }

    fn greedy(&self) -> usize {
        let mut layers: Vec<Layer> = Vec::new();
        let mut pending: Vec<(usize, usize)> = self.edges.clone();
        while !pending.is_empty() {
            let mut layer = Layer::new(self.nv);
            pending.retain(|&(u, v)| {
                if layer.covers(u, v) {
                    return false;
                }
                if (self.joinable)(layer.group[u], layer.group[v]) {
                    layer.merge(u, v);
                    false
                } else {
                    true
                }
            });
            layers.push(layer);
        }
        layers.len()
    }

    fn feasible(&self, k: usize) -> bool {
        let mut layers = vec![Layer::new(self.nv); k];
        self.place(0, 0, &mut layers)
    }

    fn place(&self, idx: usize, opened: usize, layers: &mut [Layer]) -> bool {
        let Some(&(u, v)) = self.edges.get(idx) else {
            return true;
        };
        if layers[..opened].iter().any(|l| l.covers(u, v)) {
            return self.place(idx + 1, opened, layers);
        }
        let limit = (opened + 1).min(layers.len());
        for l in 0..limit {
            if !(self.joinable)(layers[l].group[u], layers[l].group[v]) {
                continue;
            }
            let saved = layers[l].clone();
            layers[l].merge(u, v);
            if self.place(idx + 1, opened.max(l + 1), layers) {
                return true;
            }
            layers[l] = saved;
        }
        false
    }
}

/// `ceil(log2 nv - log2 d)`: the least `k` with `d * 2^k >= nv`.
pub fn log_ratio_bound(nv: usize, d: usize) -> usize {
    assert!(d >= 1);
    let mut k = 0;
    while d << k < nv {
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle for eq on tiny graphs: enumerate all ways to pick
    /// k clique partitions of the vertex set.
    fn brute_force_eq(g: &SimpleGraph) -> usize {
        let nv = g.nv();
        // all set partitions into cliques of g, as group-label vectors
        fn partitions(nv: usize, g: &SimpleGraph, labels: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let v = labels.len();
            if v == nv {
                out.push(labels.clone());
                return;
            }
            let next = labels.iter().max().map_or(0, |&m| m + 1);
            for lab in 0..=next {
                if (0..v).filter(|&u| labels[u] == lab).all(|u| g.has_edge(u, v)) {
                    labels.push(lab);
                    partitions(nv, g, labels, out);
                    labels.pop();
                }
            }
        }
        let mut parts = Vec::new();
        partitions(nv, g, &mut Vec::new(), &mut parts);
        let edges: Vec<_> = g.edges().iter().copied().collect();
        if edges.is_empty() {
            return 0;
        }
        (1..).find(|&k| {
            itertools::Itertools::combinations_with_replacement(parts.iter(), k)
                .any(|pick| edges.iter().all(|&(u, v)| pick.iter().any(|p| p[u] == p[v])))
        })
        .unwrap()
    }

    #[test]
    fn eq_examples() {
        for n in 1..=6 {
            assert_eq!(min_equivalence_cover(&SimpleGraph::complete(n)).unwrap(), usize::from(n > 1));
        }
        let c4 = SimpleGraph::cycle(4).unwrap();
        assert_eq!(min_equivalence_cover(&c4).unwrap(), 2);
        assert_eq!(brute_force_eq(&c4), 2);
        assert_eq!(min_equivalence_cover(&plus_closure(&ktt_minus(2).unwrap())).unwrap(), 2);
        let g = plus_closure(&ktt_minus(3).unwrap());
        assert!(min_equivalence_cover(&g).unwrap() >= log_ratio_bound(6, 1));
        assert_eq!(min_equivalence_cover(&g).unwrap(), 3);
        assert!(matches!(
            min_equivalence_cover(&SimpleGraph::complete(13)),
            Err(Error::GuardLimit(_))
        ));
    }

    #[test]
    fn eq_matches_brute_force_on_five_vertices() {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            if mask % 3 != 0 {
                continue;
            }
            let g = SimpleGraph::new(5, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap();
            assert_eq!(min_equivalence_cover(&g).unwrap(), brute_force_eq(&g), "{g:?}");
        }
    }

    #[test]
    fn plus_closure_examples() {
        let empty = BipartiteGraph::new(1, 1, []).unwrap();
        assert!(plus_closure(&empty).edges().is_empty());
        let c4 = plus_closure(&ktt_minus(2).unwrap());
        let want: Vec<(usize, usize)> = vec![(0, 1), (0, 3), (1, 2), (2, 3)];
        assert_eq!(c4.edges().iter().copied().collect::<Vec<_>>(), want);
        assert_eq!(plus_closure(&BipartiteGraph::complete(3, 3)), SimpleGraph::complete(6));
    }

    #[test]
    fn ktt_minus_examples() {
        let k2 = ktt_minus(2).unwrap();
        assert_eq!(k2.edges().iter().copied().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
        let k3 = ktt_minus(3).unwrap();
        assert_eq!(k3.edges().len(), 6);
        // C_6: every vertex has degree 2 and the graph is connected
        let g = plus_closure(&k3);
        assert!((0..6).all(|v| k3.edges().iter().filter(|&&(a, b)| a == v || b + 3 == v).count() == 2));
        assert_eq!(g.edges().len(), 12);
        assert!(ktt_minus(1).is_err());
    }

    #[test]
    fn eqbi_examples() {
        assert_eq!(min_bi_equivalence_cover(&ktt_minus(2).unwrap()).unwrap(), 1);
        assert_eq!(min_bi_equivalence_cover(&ktt_minus(3).unwrap()).unwrap(), 2);
        for t in 1..=4 {
            assert_eq!(min_bi_equivalence_cover(&BipartiteGraph::complete(t, t)).unwrap(), 1);
        }
        assert_eq!(min_bi_equivalence_cover(&BipartiteGraph::new(2, 2, []).unwrap()).unwrap(), 0);
        assert!(matches!(
            min_bi_equivalence_cover(&BipartiteGraph::complete(9, 1)),
            Err(Error::GuardLimit(_))
        ));
    }

    #[test]
    fn log_bound() {
        assert_eq!(log_ratio_bound(6, 1), 3);
        assert_eq!(log_ratio_bound(8, 1), 3);
        assert_eq!(log_ratio_bound(8, 2), 2);
        assert_eq!(log_ratio_bound(3, 5), 0);
    }
}

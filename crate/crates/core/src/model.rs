//! Core value types: colorings of bicliques, their monochromatic components,
//! covers, plain graphs for equivalence-cover computations and partite
//! hypergraphs for the dual side.
//!
//! Colors are 1-based (`1..=r`). Vertex indices are 0-based within each side.
//! Where a single ordering over both sides is needed, X-vertex `i` has global
//! id `i` and Y-vertex `j` has global id `m + j`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Color = u16;

/// A vertex of the host biclique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Vertex {
    X(usize),
    Y(usize),
}

impl Vertex {
    pub fn global_id(self, m: usize) -> usize {
        match self {
            Vertex::X(i) => i,
            Vertex::Y(j) => m + j,
        }
    }

    pub fn from_global_id(id: usize, m: usize) -> Self {
        if id < m {
            Vertex::X(id)
        } else {
            Vertex::Y(id - m)
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::X(i) => write!(f, "x{i}"),
            Vertex::Y(j) => write!(f, "y{j}"),
        }
    }
}

/// A complete `r`-edge-coloring of `K_{m,n}`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawColoring", into = "RawColoring")]
pub struct ColoredBiclique {
    m: usize,
    n: usize,
    r: usize,
    colors: Vec<Color>,
}

impl ColoredBiclique {
    /// Builds a coloring from a row-major color vector.
    pub fn new(m: usize, n: usize, r: usize, colors: Vec<Color>) -> Result<Self> {
        if m == 0 || n == 0 || r == 0 {
            return Err(Error::InvalidShape(format!(
                "m, n and r must be at least 1 (got m={m}, n={n}, r={r})"
            )));
        }
        if r > Color::MAX as usize {
            return Err(Error::InvalidShape(format!("too many colors: {r}")));
        }
        if colors.len() != m * n {
            return Err(Error::InvalidShape(format!(
                "expected {} entries, found {}",
                m * n,
                colors.len()
            )));
        }
        for (idx, &c) in colors.iter().enumerate() {
            if c == 0 || c as usize > r {
                return Err(Error::ColorOutOfRange {
                    row: idx / n,
                    col: idx % n,
                    value: c as i64,
                    r,
                });
            }
        }
        Ok(ColoredBiclique { m, n, r, colors })
    }

    pub fn from_rows(r: usize, rows: &[Vec<Color>]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::RaggedMatrix {
                    row,
                    found: entries.len(),
                    expected: n,
                });
            }
        }
        Self::new(m, n, r, rows.concat())
    }

    /// The one-color biclique `K_{m,n}`.
    pub fn monochromatic(m: usize, n: usize, r: usize) -> Result<Self> {
        Self::new(m, n, r, vec![1; m * n])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn color(&self, x: usize, y: usize) -> Color {
        self.colors[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[Color] {
        &self.colors[x * self.n..(x + 1) * self.n]
    }

    pub fn column(&self, y: usize) -> impl Iterator<Item = Color> + '_ {
        (0..self.m).map(move |x| self.color(x, y))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Color]> {
        self.colors.chunks(self.n)
    }

    pub fn entries(&self) -> &[Color] {
        &self.colors
    }

    pub fn vertex_count(&self) -> usize {
        self.m + self.n
    }

    /// All vertices, X side first.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.m).map(Vertex::X).chain((0..self.n).map(Vertex::Y))
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> {
        1..=self.r as Color
    }

    pub fn check_color(&self, c: Color) -> Result<()> {
        if c == 0 || c as usize > self.r {
            Err(Error::ColorArg { color: c, r: self.r })
        } else {
            Ok(())
        }
    }

    /// Colors of the edges at `v`, in neighbour order.
    pub fn colors_at(&self, v: Vertex) -> Vec<Color> {
        match v {
            Vertex::X(i) => self.row(i).to_vec(),
            Vertex::Y(j) => self.column(j).collect(),
        }
    }
}

/// Serde shape of a coloring: the same fields as the text document.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawColoring {
    m: usize,
    n: usize,
    r: usize,
    matrix: Vec<Vec<Color>>,
}

impl From<ColoredBiclique> for RawColoring {
    fn from(cb: ColoredBiclique) -> Self {
        RawColoring {
            m: cb.m,
            n: cb.n,
            r: cb.r,
            matrix: cb.rows().map(<[Color]>::to_vec).collect(),
        }
    }
}

impl TryFrom<RawColoring> for ColoredBiclique {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        if raw.matrix.len() != raw.m || raw.matrix.iter().any(|row| row.len() != raw.n) {
            return Err(Error::InvalidShape("matrix does not match m x n".into()));
        }
        ColoredBiclique::from_rows(raw.r, &raw.matrix)
    }
}

/// One monochromatic connected component (or an isolated vertex of a color).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Component {
    pub color: Color,
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
}

impl Component {
    pub fn is_trivial(&self) -> bool {
        self.xs.is_empty() || self.ys.is_empty()
    }

    pub fn len(&self) -> usize {
        self.xs.len() + self.ys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        match v {
            Vertex::X(i) => self.xs.binary_search(&i).is_ok(),
            Vertex::Y(j) => self.ys.binary_search(&j).is_ok(),
        }
    }

    /// Smallest global vertex id, used for canonical ordering.
    pub fn min_id(&self, m: usize) -> usize {
        match (self.xs.first(), self.ys.first()) {
            (Some(&x), _) => x,
            (None, Some(&y)) => m + y,
            (None, None) => usize::MAX,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.xs
            .iter()
            .map(|&i| Vertex::X(i))
            .chain(self.ys.iter().map(|&j| Vertex::Y(j)))
    }

    /// Checks nonemptiness, connectivity and maximality in `cb`.
    pub fn validate(&self, cb: &ColoredBiclique) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCover(msg));
        cb.check_color(self.color)?;
        if self.is_empty() {
            return bad("empty component".into());
        }
        if self.xs.iter().any(|&i| i >= cb.m()) || self.ys.iter().any(|&j| j >= cb.n()) {
            return bad("vertex out of range".into());
        }
        let c = self.color;
        // maximality: every c-edge at a member stays inside
        for &i in &self.xs {
            for j in 0..cb.n() {
                if cb.color(i, j) == c && !self.ys.contains(&j) {
                    return bad(format!("edge x{i}-y{j} of color {c} leaves the component"));
                }
            }
        }
        for &j in &self.ys {
            for i in 0..cb.m() {
                if cb.color(i, j) == c && !self.xs.contains(&i) {
                    return bad(format!("edge x{i}-y{j} of color {c} leaves the component"));
                }
            }
        }
        if self.len() == 1 {
            return Ok(());
        }
        if self.is_trivial() {
            return bad("component without edges has more than one vertex".into());
        }
        // connectivity by search over color-c edges inside the component
        let mut seen_x = vec![false; cb.m()];
        let mut seen_y = vec![false; cb.n()];
        let mut stack = vec![Vertex::X(self.xs[0])];
        seen_x[self.xs[0]] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            match v {
                Vertex::X(i) => {
                    for &j in &self.ys {
                        if !seen_y[j] && cb.color(i, j) == c {
                            seen_y[j] = true;
                            reached += 1;
                            stack.push(Vertex::Y(j));
                        }
                    }
                }
                Vertex::Y(j) => {
                    for &i in &self.xs {
                        if !seen_x[i] && cb.color(i, j) == c {
                            seen_x[i] = true;
                            reached += 1;
                            stack.push(Vertex::X(i));
                        }
                    }
                }
            }
        }
        if reached != self.len() {
            return bad(format!("component of color {c} is not connected"));
        }
        Ok(())
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "color={} xs={:?} ys={:?}", self.color, self.xs, self.ys)
    }
}

/// A set of components whose vertex sets cover `X ∪ Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    parts: Vec<Component>,
}

impl Cover {
    /// Validates every part against `cb` and checks that the union is `X ∪ Y`.
    pub fn new(cb: &ColoredBiclique, parts: Vec<Component>) -> Result<Self> {
        let mut covered = vec![false; cb.vertex_count()];
        for part in &parts {
            part.validate(cb)?;
            for v in part.vertices() {
                covered[v.global_id(cb.m())] = true;
            }
        }
        if let Some(id) = covered.iter().position(|&c| !c) {
            return Err(Error::InvalidCover(format!(
                "{} is not covered",
                Vertex::from_global_id(id, cb.m())
            )));
        }
        Ok(Cover { parts })
    }

    pub fn parts(&self) -> &[Component] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn covered(&self) -> BTreeSet<Vertex> {
        self.parts.iter().flat_map(Component::vertices).collect()
    }
}

/// An undirected simple graph on `0..nv`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleGraph {
    nv: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(nv: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            if u >= nv || v >= nv {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for {nv} vertices"
                )));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidParameter(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(SimpleGraph { nv, edges: set })
    }

    pub fn complete(nv: usize) -> Self {
        let edges = (0..nv).flat_map(|u| (u + 1..nv).map(move |v| (u, v)));
        SimpleGraph {
            nv,
            edges: edges.collect(),
        }
    }

    pub fn cycle(nv: usize) -> Result<Self> {
        if nv < 3 {
            return Err(Error::InvalidParameter("a cycle needs at least 3 vertices".into()));
        }
        Self::new(nv, (0..nv).map(|u| (u, (u + 1) % nv)))
    }

    pub fn nv(&self) -> usize {
        self.nv
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Maximum degree of the complement graph.
    pub fn complement_max_degree(&self) -> usize {
        (0..self.nv)
            .map(|v| self.nv - 1 - self.degree(v))
            .max()
            .unwrap_or(0)
    }
}

/// A bipartite graph with sides `0..p` and `0..q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BipartiteGraph {
    p: usize,
    q: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(p: usize, q: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= p || b >= q {
                return Err(Error::InvalidParameter(format!(
                    "edge ({a}, {b}) out of range for sides {p} and {q}"
                )));
            }
            if !set.insert((a, b)) {
                return Err(Error::InvalidParameter(format!("duplicate edge ({a}, {b})")));
            }
        }
        Ok(BipartiteGraph { p, q, edges: set })
    }

    pub fn complete(p: usize, q: usize) -> Self {
        let edges = (0..p).flat_map(|a| (0..q).map(move |b| (a, b)));
        BipartiteGraph {
            p,
            q,
            edges: edges.collect(),
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }
}

/// An `r`-partite `r`-uniform hypergraph. Edges are kept as a multiset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartiteHypergraph {
    classes: Vec<Vec<usize>>,
    edges: Vec<Vec<usize>>,
}

impl PartiteHypergraph {
    /// Validates disjointness of the classes, that vertex ids are exactly
    /// `0..total` and that every edge meets every class exactly once.
    /// Classes and edges are stored sorted.
    pub fn new(classes: Vec<Vec<usize>>, edges: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidHypergraph(msg));
        let total: usize = classes.iter().map(Vec::len).sum();
        let mut class_of = vec![usize::MAX; total];
        let mut classes = classes;
        for (k, class) in classes.iter_mut().enumerate() {
            class.sort_unstable();
            if class.is_empty() {
                return bad(format!("class {k} is empty"));
            }
            for &v in class.iter() {
                if v >= total {
                    return bad(format!("vertex ids must be 0..{total}, found {v}"));
                }
                if class_of[v] != usize::MAX {
                    return bad(format!("vertex {v} lies in more than one class"));
                }
                class_of[v] = k;
            }
        }
        let mut edges = edges;
        for (e, edge) in edges.iter_mut().enumerate() {
            edge.sort_unstable();
            if edge.len() != classes.len() {
                return bad(format!(
                    "edge {e} has {} vertices, expected {}",
                    edge.len(),
                    classes.len()
                ));
            }
            let mut hit = vec![false; classes.len()];
            for &v in edge.iter() {
                if v >= total {
                    return bad(format!("edge {e} uses unknown vertex {v}"));
                }
                if std::mem::replace(&mut hit[class_of[v]], true) {
                    return bad(format!("edge {e} meets class {} twice", class_of[v]));
                }
            }
        }
        Ok(PartiteHypergraph { classes, edges })
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Number of classes (the uniformity).
    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_colorings() {
        assert!(matches!(
            ColoredBiclique::new(1, 1, 1, vec![0]),
            Err(Error::ColorOutOfRange { value: 0, .. })
        ));
        assert!(matches!(
            ColoredBiclique::new(1, 2, 2, vec![1, 3]),
            Err(Error::ColorOutOfRange { value: 3, .. })
        ));
        assert!(matches!(
            ColoredBiclique::from_rows(2, &[vec![1, 2], vec![1]]),
            Err(Error::RaggedMatrix { row: 1, .. })
        ));
        assert!(ColoredBiclique::new(0, 1, 1, vec![]).is_err());
    }

    #[test]
    fn accessors() {
        let cb = ColoredBiclique::from_rows(3, &[vec![1, 2, 3], vec![3, 2, 1]]).unwrap();
        assert_eq!(cb.color(1, 0), 3);
        assert_eq!(cb.column(2).collect::<Vec<_>>(), vec![3, 1]);
        assert_eq!(cb.vertices().count(), 5);
        assert_eq!(Vertex::from_global_id(3, 2), Vertex::Y(1));
        assert_eq!(Vertex::Y(1).global_id(2), 3);
    }

    #[test]
    fn cover_must_cover_everything() {
        let cb = ColoredBiclique::monochromatic(2, 2, 2).unwrap();
        let whole = Component {
            color: 1,
            xs: vec![0, 1],
            ys: vec![0, 1],
        };
        assert!(Cover::new(&cb, vec![whole]).is_ok());
        let part = Component {
            color: 2,
            xs: vec![0],
            ys: vec![],
        };
        assert!(matches!(Cover::new(&cb, vec![part]), Err(Error::InvalidCover(_))));
    }

    #[test]
    fn component_validation_catches_non_maximal() {
        let cb = ColoredBiclique::monochromatic(2, 2, 1).unwrap();
        let partial = Component {
            color: 1,
            xs: vec![0],
            ys: vec![0],
        };
        assert!(partial.validate(&cb).is_err());
    }

    #[test]
    fn graph_validation() {
        assert!(SimpleGraph::new(3, [(0, 0)]).is_err());
        assert!(SimpleGraph::new(3, [(0, 1), (1, 0)]).is_err());
        assert_eq!(SimpleGraph::complete(4).edges().len(), 6);
        assert_eq!(SimpleGraph::cycle(4).unwrap().complement_max_degree(), 1);
        assert!(BipartiteGraph::new(2, 2, [(2, 0)]).is_err());
    }

    #[test]
    fn hypergraph_validation() {
        assert!(PartiteHypergraph::new(vec![vec![0, 1], vec![2, 3]], vec![vec![0, 2]]).is_ok());
        // two vertices from the same class
        assert!(PartiteHypergraph::new(vec![vec![0, 1], vec![2, 3]], vec![vec![0, 1]]).is_err());
        // ids not contiguous
        assert!(PartiteHypergraph::new(vec![vec![0, 5]], vec![]).is_err());
        // overlapping classes
        assert!(PartiteHypergraph::new(vec![vec![0, 1], vec![1]], vec![]).is_err());
    }
}

//! Monochromatic components, widths and the structural predicates of a
//! coloring: bi-equivalence, spanning, antichain, reducedness, singletons.

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Color, ColoredBiclique, Component, Vertex};

/// Components of color `c`, ordered by smallest contained global vertex id.
///
/// With `include_isolated`, every vertex with no `c`-edge yields a singleton
/// component.
pub fn components(cb: &ColoredBiclique, c: Color, include_isolated: bool) -> Result<Vec<Component>> {
    cb.check_color(c)?;
    let (m, n) = (cb.m(), cb.n());
    let mut uf = UnionFind::<usize>::new(m + n);
    let mut touched = vec![false; m + n];
    for x in 0..m {
        for y in 0..n {
            if cb.color(x, y) == c {
                uf.union(x, m + y);
                touched[x] = true;
                touched[m + y] = true;
            }
        }
    }
    // ids are visited in ascending order, so components come out sorted by min id
    let mut slot = vec![usize::MAX; m + n];
    let mut out: Vec<Component> = Vec::new();
    for id in 0..m + n {
        if !touched[id] && !include_isolated {
            continue;
        }
        let root = uf.find(id);
        if slot[root] == usize::MAX {
            slot[root] = out.len();
            out.push(Component {
                color: c,
                xs: Vec::new(),
                ys: Vec::new(),
            });
        }
        let comp = &mut out[slot[root]];
        match Vertex::from_global_id(id, m) {
            Vertex::X(i) => comp.xs.push(i),
            Vertex::Y(j) => comp.ys.push(j),
        }
    }
    Ok(out)
}

pub fn width(cb: &ColoredBiclique, c: Color, include_isolated: bool) -> Result<usize> {
    Ok(components(cb, c, include_isolated)?.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorWidth {
    pub color: Color,
    pub nontrivial: usize,
    pub isolated: usize,
}

impl ColorWidth {
    pub fn with_isolated(&self) -> usize {
        self.nontrivial + self.isolated
    }
}

/// Nontrivial and isolated component counts for every color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthReport {
    pub per_color: Vec<ColorWidth>,
}

impl WidthReport {
    pub fn new(cb: &ColoredBiclique) -> Self {
        let per_color = cb
            .colors()
            .map(|c| {
                let all = components(cb, c, true).expect("color in range");
                let isolated = all.iter().filter(|k| k.is_trivial()).count();
                ColorWidth {
                    color: c,
                    nontrivial: all.len() - isolated,
                    isolated,
                }
            })
            .collect();
        WidthReport { per_color }
    }

    pub fn max_nontrivial(&self) -> usize {
        self.per_color.iter().map(|w| w.nontrivial).max().unwrap_or(0)
    }

    pub fn min_nontrivial(&self) -> usize {
        self.per_color.iter().map(|w| w.nontrivial).min().unwrap_or(0)
    }
}

/// Returns `None` if every component of color `c` is a complete biclique in
/// `c`, otherwise the first pair `(x, y)` (in component order) inside one
/// component whose edge has another color.
pub fn bi_equivalence_witness(cb: &ColoredBiclique, c: Color) -> Result<Option<(usize, usize)>> {
    for comp in components(cb, c, false)? {
        for &x in &comp.xs {
            for &y in &comp.ys {
                if cb.color(x, y) != c {
                    return Ok(Some((x, y)));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_bi_equivalence(cb: &ColoredBiclique, c: Color) -> Result<bool> {
    Ok(bi_equivalence_witness(cb, c)?.is_none())
}

/// Fails with the first color class (ascending) that is not a bi-equivalence graph.
pub fn check_all_bi_equivalence(cb: &ColoredBiclique) -> Result<()> {
    for c in cb.colors() {
        if let Some((x, y)) = bi_equivalence_witness(cb, c)? {
            return Err(Error::NotBiEquivalence { color: c, x, y });
        }
    }
    Ok(())
}

pub fn is_all_bi_equivalence(cb: &ColoredBiclique) -> bool {
    check_all_bi_equivalence(cb).is_ok()
}

/// First `(vertex, color)` such that the vertex has no edge of that color.
pub fn spanning_witness(cb: &ColoredBiclique) -> Option<(Vertex, Color)> {
    let mut seen = vec![false; cb.r() + 1];
    for v in cb.vertices() {
        seen.iter_mut().for_each(|s| *s = false);
        for c in cb.colors_at(v) {
            seen[c as usize] = true;
        }
        if let Some(c) = cb.colors().find(|&c| !seen[c as usize]) {
            return Some((v, c));
        }
    }
    None
}

pub fn is_spanning(cb: &ColoredBiclique) -> bool {
    spanning_witness(cb).is_none()
}

/// Which side of the biclique a block lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    X,
    Y,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Block {
    pub side: Side,
    pub color: Color,
    pub members: Vec<usize>,
}

/// A pair of blocks on the same side with `inner ⊊ outer`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Containment {
    pub inner: Block,
    pub outer: Block,
}

fn check_spanning(cb: &ColoredBiclique) -> Result<()> {
    match spanning_witness(cb) {
        Some((vertex, color)) => Err(Error::NotSpanning { vertex, color }),
        None => Ok(()),
    }
}

/// All blocks, X side then Y side, colors ascending, component order within a color.
pub fn blocks(cb: &ColoredBiclique) -> Vec<Block> {
    let mut out = Vec::new();
    for side in [Side::X, Side::Y] {
        for c in cb.colors() {
            for comp in components(cb, c, false).expect("color in range") {
                let members = match side {
                    Side::X => comp.xs,
                    Side::Y => comp.ys,
                };
                out.push(Block {
                    side,
                    color: c,
                    members,
                });
            }
        }
    }
    out
}

fn is_proper_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() < b.len() && a.iter().all(|v| b.binary_search(v).is_ok())
}

/// First proper block containment, or `None` for an antichain partition.
///
/// Errors when the coloring is not spanning or some class is not a
/// bi-equivalence graph, since antichains are only defined there.
pub fn antichain_violation(cb: &ColoredBiclique) -> Result<Option<Containment>> {
    check_spanning(cb)?;
    check_all_bi_equivalence(cb)?;
    let all = blocks(cb);
    for inner in &all {
        for outer in &all {
            if inner.side == outer.side && is_proper_subset(&inner.members, &outer.members) {
                return Ok(Some(Containment {
                    inner: inner.clone(),
                    outer: outer.clone(),
                }));
            }
        }
    }
    Ok(None)
}

pub fn is_antichain(cb: &ColoredBiclique) -> Result<bool> {
    Ok(antichain_violation(cb)?.is_none())
}

/// Same-side pairs `(u, v)`, `u < v`, with identical color rows (X) or
/// columns (Y). X pairs come first.
pub fn equivalent_pairs(cb: &ColoredBiclique) -> Result<Vec<(Vertex, Vertex)>> {
    check_all_bi_equivalence(cb)?;
    Ok(identical_pairs(cb))
}

pub(crate) fn identical_pairs(cb: &ColoredBiclique) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for a in 0..cb.m() {
        for b in a + 1..cb.m() {
            if cb.row(a) == cb.row(b) {
                out.push((Vertex::X(a), Vertex::X(b)));
            }
        }
    }
    let cols: Vec<Vec<Color>> = (0..cb.n()).map(|y| cb.column(y).collect()).collect();
    for a in 0..cb.n() {
        for b in a + 1..cb.n() {
            if cols[a] == cols[b] {
                out.push((Vertex::Y(a), Vertex::Y(b)));
            }
        }
    }
    out
}

pub fn is_reduced(cb: &ColoredBiclique) -> bool {
    identical_pairs(cb).is_empty()
}

/// Where each original vertex went after [`reduce_equivalent`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergeMap {
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
}

impl MergeMap {
    pub fn apply(&self, v: Vertex) -> Vertex {
        match v {
            Vertex::X(i) => Vertex::X(self.xs[i]),
            Vertex::Y(j) => Vertex::Y(self.ys[j]),
        }
    }
}

/// Collapses classes of equivalent vertices to their first member.
pub fn reduce_equivalent(cb: &ColoredBiclique) -> Result<(ColoredBiclique, MergeMap)> {
    check_all_bi_equivalence(cb)?;
    fn dedup<T: PartialEq + Clone>(items: &[T]) -> (Vec<usize>, Vec<usize>) {
        let mut kept: Vec<usize> = Vec::new();
        let mut map = Vec::with_capacity(items.len());
        for (i, item) in items.iter().enumerate() {
            match kept.iter().position(|&k| items[k] == *item) {
                Some(slot) => map.push(slot),
                None => {
                    map.push(kept.len());
                    kept.push(i);
                }
            }
        }
        (kept, map)
    }
    let rows: Vec<&[Color]> = cb.rows().collect();
    let cols: Vec<Vec<Color>> = (0..cb.n()).map(|y| cb.column(y).collect()).collect();
    let (keep_x, map_x) = dedup(&rows);
    let (keep_y, map_y) = dedup(&cols);
    let colors = keep_x
        .iter()
        .flat_map(|&x| keep_y.iter().map(move |&y| (x, y)))
        .map(|(x, y)| cb.color(x, y))
        .collect();
    let reduced = ColoredBiclique::new(keep_x.len(), keep_y.len(), cb.r(), colors)?;
    Ok((reduced, MergeMap { xs: map_x, ys: map_y }))
}

/// For every vertex that is a one-element block in some color, the list of
/// such colors. Isolated vertices of a color are not blocks of it.
pub fn singleton_blocks(cb: &ColoredBiclique) -> Vec<(Vertex, Vec<Color>)> {
    let mut lists: Vec<Vec<Color>> = vec![Vec::new(); cb.vertex_count()];
    for c in cb.colors() {
        for comp in components(cb, c, false).expect("color in range") {
            if let [x] = comp.xs[..] {
                lists[x].push(c);
            }
            if let [y] = comp.ys[..] {
                lists[cb.m() + y].push(c);
            }
        }
    }
    lists
        .into_iter()
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(id, l)| (Vertex::from_global_id(id, cb.m()), l))
        .collect()
}

/// The block of `v` in color `c`, if `v` has a `c`-edge.
pub fn block_of(cb: &ColoredBiclique, c: Color, v: Vertex) -> Result<Option<Component>> {
    Ok(components(cb, c, false)?.into_iter().find(|k| k.contains(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{doubling, gstar, ham_factor};
    use crate::search::{enumerate_partitions, EnumSpec, Filters};
    use proptest::prelude::*;

    fn comp(color: Color, xs: &[usize], ys: &[usize]) -> Component {
        Component {
            color,
            xs: xs.to_vec(),
            ys: ys.to_vec(),
        }
    }

    fn factorial(k: usize) -> usize {
        (1..=k).product()
    }

    #[test]
    fn gstar3_color1_components() {
        // B order: 12, 13, 21, 23, 31, 32
        let cb = gstar(3).unwrap();
        let got = components(&cb, 1, true).unwrap();
        assert_eq!(
            got,
            vec![comp(1, &[0], &[0, 1]), comp(1, &[1], &[2, 4]), comp(1, &[], &[3]), comp(1, &[], &[5])]
        );
        for k in &got {
            k.validate(&cb).unwrap();
        }
    }

    #[test]
    fn monochromatic_components() {
        let cb = ColoredBiclique::monochromatic(2, 3, 2).unwrap();
        assert_eq!(components(&cb, 1, false).unwrap(), vec![comp(1, &[0, 1], &[0, 1, 2])]);
        let empty = components(&cb, 2, true).unwrap();
        assert_eq!(empty.len(), 5);
        assert!(empty.iter().all(|k| k.len() == 1));
        assert!(components(&cb, 2, false).unwrap().is_empty());
        assert!(matches!(components(&cb, 3, false), Err(Error::ColorArg { .. })));
        assert!(matches!(components(&cb, 0, false), Err(Error::ColorArg { .. })));
    }

    #[test]
    fn gstar_width() {
        for r in 2..=5 {
            let cb = gstar(r).unwrap();
            for c in cb.colors() {
                assert_eq!(width(&cb, c, true).unwrap(), factorial(r - 1) + r - 1, "r={r} c={c}");
            }
        }
    }

    #[test]
    fn doubling_widths() {
        for r in 1..=8 {
            let report = WidthReport::new(&doubling(r).unwrap());
            assert_eq!(report.max_nontrivial(), 1 << (r - 1));
        }
    }

    #[test]
    fn ham_factor3_widths() {
        let cb = ham_factor(3).unwrap();
        for c in cb.colors() {
            assert_eq!(width(&cb, c, false).unwrap(), 3);
            assert_eq!(width(&cb, c, true).unwrap(), 3);
        }
    }

    #[test]
    fn bi_equivalence() {
        for r in 2..=5 {
            let cb = gstar(r).unwrap();
            assert!(cb.colors().all(|c| is_bi_equivalence(&cb, c).unwrap()));
        }
        let cb = ColoredBiclique::from_rows(2, &[vec![1, 1], vec![1, 2]]).unwrap();
        assert_eq!(bi_equivalence_witness(&cb, 1).unwrap(), Some((1, 1)));
        assert!(matches!(
            check_all_bi_equivalence(&cb),
            Err(Error::NotBiEquivalence { color: 1, x: 1, y: 1 })
        ));
        let mono = ColoredBiclique::monochromatic(3, 2, 1).unwrap();
        assert!(is_bi_equivalence(&mono, 1).unwrap());
    }

    #[test]
    fn spanning() {
        assert_eq!(spanning_witness(&gstar(2).unwrap()), Some((Vertex::Y(0), 2)));
        for r in 1..=8 {
            assert!(is_spanning(&doubling(r).unwrap()));
        }
        for s in 3..=5 {
            assert!(is_spanning(&ham_factor(s).unwrap()));
        }
    }

    #[test]
    fn antichain() {
        assert!(is_antichain(&doubling(2).unwrap()).unwrap());
        assert!(matches!(is_antichain(&gstar(3).unwrap()), Err(Error::NotSpanning { .. })));
        // color-1 singletons sit inside the crosswise color-3 blocks
        let v = antichain_violation(&doubling(3).unwrap()).unwrap().unwrap();
        assert_eq!(v.inner.members, vec![0]);
        assert_eq!(v.outer.members, vec![0, 1]);
        assert_eq!((v.inner.color, v.outer.color), (1, 3));
    }

    #[test]
    fn nested_y_blocks_fixture() {
        // first r=3 spanning bi-equivalence partition of K_{3,4}, in canonical
        // enumeration order, whose reported containment lies on the Y side
        let cb = nested_fixture();
        assert!(is_spanning(&cb));
        assert!(is_all_bi_equivalence(&cb));
        let v = antichain_violation(&cb).unwrap().unwrap();
        assert_eq!(v.inner, Block { side: Side::Y, color: 1, members: vec![2] });
        assert_eq!(v.outer, Block { side: Side::Y, color: 3, members: vec![0, 2] });
        let spec = EnumSpec::new(3, 3, 4).with_filters(Filters::spanning_bi_equivalence()).canonical(true);
        let first = enumerate_partitions(spec)
            .unwrap()
            .find(|c| matches!(antichain_violation(c), Ok(Some(v)) if v.inner.side == Side::Y))
            .unwrap();
        assert_eq!(first, cb);
    }

    pub(crate) fn nested_fixture() -> ColoredBiclique {
        ColoredBiclique::from_rows(3, &[vec![1, 1, 2, 3], vec![2, 3, 1, 2], vec![3, 2, 3, 1]]).unwrap()
    }

    #[test]
    fn equivalent_pairs_and_reduction() {
        let mono = ColoredBiclique::monochromatic(2, 2, 1).unwrap();
        assert_eq!(
            equivalent_pairs(&mono).unwrap(),
            vec![(Vertex::X(0), Vertex::X(1)), (Vertex::Y(0), Vertex::Y(1))]
        );
        for r in 2..=5 {
            assert!(equivalent_pairs(&gstar(r).unwrap()).unwrap().is_empty());
        }
        assert!(equivalent_pairs(&doubling(2).unwrap()).unwrap().is_empty());

        let (red, map) = reduce_equivalent(&ColoredBiclique::monochromatic(3, 3, 1).unwrap()).unwrap();
        assert_eq!(red, ColoredBiclique::monochromatic(1, 1, 1).unwrap());
        assert_eq!(map.xs, vec![0, 0, 0]);

        let g3 = gstar(3).unwrap();
        assert_eq!(reduce_equivalent(&g3).unwrap().0, g3);

        let cb = ColoredBiclique::from_rows(2, &[vec![1, 2], vec![1, 2]]).unwrap();
        let (red, map) = reduce_equivalent(&cb).unwrap();
        assert_eq!(red, ColoredBiclique::from_rows(2, &[vec![1, 2]]).unwrap());
        assert_eq!(map.apply(Vertex::X(1)), Vertex::X(0));
        assert_eq!(map.ys, vec![0, 1]);

        let bad = ColoredBiclique::from_rows(2, &[vec![1, 1], vec![1, 2]]).unwrap();
        assert!(reduce_equivalent(&bad).is_err());
        assert!(equivalent_pairs(&bad).is_err());
    }

    #[test]
    fn singletons() {
        let d2 = doubling(2).unwrap();
        let s = singleton_blocks(&d2);
        assert_eq!(s.len(), 4);
        assert!(s.iter().all(|(_, cs)| cs == &vec![1, 2]));
        assert!(singleton_blocks(&ColoredBiclique::monochromatic(2, 2, 1).unwrap()).is_empty());

        // p = 1: every block of every class has one vertex
        let h3 = ham_factor(3).unwrap();
        let s = singleton_blocks(&h3);
        assert_eq!(s.len(), 6);
        for (v, cs) in &s {
            for c in h3.colors() {
                let b = block_of(&h3, c, *v).unwrap().unwrap();
                assert_eq!(b.xs.len() == 1 && b.ys.len() == 1, cs.contains(&c));
            }
            assert_eq!(cs, &vec![1, 2, 3]);
        }
    }

    fn arb_coloring() -> impl Strategy<Value = ColoredBiclique> {
        (1usize..5, 1usize..5, 1usize..4).prop_flat_map(|(m, n, r)| {
            proptest::collection::vec(1..=r as Color, m * n)
                .prop_map(move |colors| ColoredBiclique::new(m, n, r, colors).unwrap())
        })
    }

    proptest! {
        #[test]
        fn blocks_are_disjoint_or_equal(cb in arb_coloring()) {
            for c in cb.colors() {
                let comps = components(&cb, c, true).unwrap();
                for v in cb.vertices() {
                    prop_assert_eq!(comps.iter().filter(|k| k.contains(v)).count(), 1);
                }
                for k in &comps {
                    k.validate(&cb).unwrap();
                }
            }
        }

        #[test]
        fn width_split(cb in arb_coloring()) {
            let report = WidthReport::new(&cb);
            for w in &report.per_color {
                prop_assert_eq!(width(&cb, w.color, true).unwrap(), width(&cb, w.color, false).unwrap() + w.isolated);
            }
            if is_spanning(&cb) {
                for c in cb.colors() {
                    prop_assert_eq!(components(&cb, c, true).unwrap(), components(&cb, c, false).unwrap());
                }
            }
        }

        #[test]
        fn reduction_is_idempotent(cb in arb_coloring()) {
            if let Ok((red, map)) = reduce_equivalent(&cb) {
                prop_assert!(is_reduced(&red));
                prop_assert_eq!(reduce_equivalent(&red).unwrap().0, red.clone());
                for x in 0..cb.m() {
                    for y in 0..cb.n() {
                        prop_assert_eq!(cb.color(x, y), red.color(map.xs[x], map.ys[y]));
                    }
                }
            }
        }

        #[test]
        fn antichain_singletons_agree_across_colors(cb in arb_coloring()) {
            if let Ok(true) = is_antichain(&cb) {
                for (_, cs) in singleton_blocks(&cb) {
                    prop_assert_eq!(cs.len(), cb.r());
                }
            }
        }
    }
}

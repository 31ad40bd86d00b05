//! Explicit colorings and hypergraphs: the permutation coloring that needs
//! `2r - 2` components, the crosswise doubling family, the Hamiltonian-cycle
//! 1-factor blow-up, truncated projective planes, and cyclic Latin squares.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::model::{Color, ColoredBiclique, PartiteHypergraph};

/// Labels of the Y side of [`gstar`]: the `(r-1)`-permutations of `1..=r` in
/// lexicographic order.
pub fn gstar_labels(r: usize) -> Vec<Vec<Color>> {
    (1..=r as Color).permutations(r.saturating_sub(1)).collect()
}

/// `K_{r-1, r!}` where X-vertex `k` and permutation `π` get color `π[k]`.
pub fn gstar(r: usize) -> Result<ColoredBiclique> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("gstar needs r >= 2, got {r}")));
    }
    let perms = gstar_labels(r);
    let rows: Vec<Vec<Color>> = (0..r - 1).map(|k| perms.iter().map(|p| p[k]).collect()).collect();
    ColoredBiclique::from_rows(r, &rows)
}

/// Spanning partition of `K_{2^{r-1}, 2^{r-1}}` into `r` bi-equivalence
/// classes. Each step puts two copies of the previous coloring on the
/// diagonal and fills both off-diagonal blocks with the new color.
pub fn doubling(r: usize) -> Result<ColoredBiclique> {
    if r < 1 {
        return Err(Error::InvalidParameter("doubling needs r >= 1".into()));
    }
    if r > 16 {
        return Err(Error::InvalidParameter(format!("doubling({r}) is too large")));
    }
    let mut rows: Vec<Vec<Color>> = vec![vec![1]];
    for k in 2..=r as Color {
        let n = rows.len();
        let mut next = Vec::with_capacity(2 * n);
        for half in 0..2 {
            for i in 0..n {
                let mut row = Vec::with_capacity(2 * n);
                for block in 0..2 {
                    if block == half {
                        row.extend_from_slice(&rows[i]);
                    } else {
                        row.extend(std::iter::repeat_n(k, n));
                    }
                }
                next.push(row);
            }
        }
        rows = next;
    }
    ColoredBiclique::from_rows(r, &rows)
}

/// Derived parameters of [`ham_factor`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HamFactorParams {
    pub s: usize,
}

impl HamFactorParams {
    pub fn new(s: usize) -> Result<Self> {
        if s < 3 {
            return Err(Error::InvalidParameter(format!("ham_factor needs s >= 3, got {s}")));
        }
        Ok(HamFactorParams { s })
    }

    /// Number of colors, `s^2 - 2s`.
    pub fn r(&self) -> usize {
        (self.s - 2) * self.s
    }

    /// Blow-up factor, `(s-1)(s-2)/2`.
    pub fn p(&self) -> usize {
        (self.s - 1) * (self.s - 2) / 2
    }

    /// Width of every class.
    pub fn width(&self) -> usize {
        self.p() * (self.s - 1) + 1
    }
}

/// An edge `(u_a, v_b)` of `K_{s,s}`.
type SmallEdge = (usize, usize);

/// The Hamiltonian cycle `u_0 v_0 u_1 v_1 … u_{s-1} v_{s-1} u_0`, as the
/// sequence of cycle positions: `u_a` at `2a`, `v_b` at `2b + 1`.
fn red_edges(s: usize) -> Vec<SmallEdge> {
    let mut red: Vec<SmallEdge> = (0..s).flat_map(|i| [(i, i), ((i + 1) % s, i)]).collect();
    red.sort_unstable();
    red
}

/// The unique 1-factor of `K_{s,s}` made of the blue edge `(a, b)` and red
/// cycle edges: delete both endpoints from the cycle and take the perfect
/// matching of each remaining (even) path.
pub fn completing_factor(s: usize, blue: SmallEdge) -> Vec<SmallEdge> {
    let len = 2 * s;
    let (pu, pv) = (2 * blue.0, 2 * blue.1 + 1);
    let at = |pos: usize| -> (bool, usize) { (pos.is_multiple_of(2), pos / 2) };
    let mut factor = vec![blue];
    for (from, to) in [(pu, pv), (pv, pu)] {
        // the open arc strictly between `from` and `to`, walking forward
        let arc: Vec<usize> = (1..)
            .map(|k| (from + k) % len)
            .take_while(|&pos| pos != to)
            .collect();
        assert!(arc.len().is_multiple_of(2), "endpoints of a blue edge lie at odd cycle distance");
        for pair in arc.chunks(2) {
            let (a, b) = (at(pair[0]), at(pair[1]));
            let edge = if a.0 { (a.1, b.1) } else { (b.1, a.1) };
            factor.push(edge);
        }
    }
    factor.sort_unstable();
    factor
}

/// Spanning partition of `K_{sp,sp}` into `r = s^2 - 2s` bi-equivalence
/// classes, each of width `p(s-1) + 1`.
///
/// Blue edges of `K_{s,s}` (those off the Hamiltonian cycle) get colors
/// `1..=r` in lexicographic order; color `c` is the 1-factor completing its
/// blue edge. After blowing every vertex up to `p` elements, the blue edge
/// becomes a `K_{p,p}` of color `c`, and the `p` colors through each red
/// edge share its `K_{p,p}` as the cyclic matchings `M_k: a -> a + k (mod p)`,
/// assigned in ascending color order.
pub fn ham_factor(s: usize) -> Result<ColoredBiclique> {
    let params = HamFactorParams::new(s)?;
    let (r, p) = (params.r(), params.p());
    let red = red_edges(s);
    let blue: Vec<SmallEdge> = (0..s)
        .cartesian_product(0..s)
        .filter(|e| red.binary_search(e).is_err())
        .collect();
    debug_assert_eq!(blue.len(), r);

    // colors through each red edge, ascending
    let mut through: Vec<Vec<Color>> = vec![Vec::new(); red.len()];
    for (idx, &e) in blue.iter().enumerate() {
        for f in completing_factor(s, e) {
            if let Ok(k) = red.binary_search(&f) {
                through[k].push(idx as Color + 1);
            }
        }
    }
    assert!(through.iter().all(|cs| cs.len() == p), "each red edge lies in p factors");

    let side = s * p;
    let mut colors = vec![0 as Color; side * side];
    for a in 0..s {
        for b in 0..s {
            for i in 0..p {
                for j in 0..p {
                    let color = match blue.binary_search(&(a, b)) {
                        Ok(idx) => idx as Color + 1,
                        Err(_) => {
                            let k = red.binary_search(&(a, b)).expect("red edge");
                            through[k][(j + p - i) % p]
                        }
                    };
                    colors[(a * p + i) * side + b * p + j] = color;
                }
            }
        }
    }
    ColoredBiclique::new(side, side, r, colors)
}

/// Cyclic Latin square of order `r`: color `(i + j) mod r + 1`. Every class is
/// a perfect matching, so the partition is spanning and an antichain.
pub fn cyclic_latin_square(r: usize) -> Result<ColoredBiclique> {
    if r < 1 {
        return Err(Error::InvalidParameter("latin square needs r >= 1".into()));
    }
    let colors = (0..r * r).map(|k| ((k / r + k % r) % r + 1) as Color).collect();
    ColoredBiclique::new(r, r, r, colors)
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Normalized homogeneous coordinates of PG(2, q): the first nonzero entry is 1.
fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut pts = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    for a in 0..q {
        pts.push([0, 1, a]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// PG(2, q) over the prime field with the point `(0:0:1)` and its `q + 1`
/// lines removed. The remaining `q^2` lines form an intersecting
/// `(q+1)`-partite hypergraph; class `i` is the `i`-th removed line minus the
/// removed point, and its points get ids `i*q .. i*q + q`.
pub fn truncated_plane(q: usize) -> Result<PartiteHypergraph> {
    if !is_prime(q) {
        return Err(Error::InvalidParameter(format!("q must be prime, got {q}")));
    }
    let points = projective_points(q);
    let lines = projective_points(q);
    let removed = [0, 0, 1];
    let incident = |line: &[usize; 3], pt: &[usize; 3]| {
        line.iter().zip(pt).map(|(a, b)| a * b).sum::<usize>() % q == 0
    };
    let through: Vec<&[usize; 3]> = lines.iter().filter(|l| incident(l, &removed)).collect();
    let mut id_of = vec![usize::MAX; points.len()];
    let mut classes = Vec::with_capacity(through.len());
    let mut next = 0;
    for line in &through {
        let mut class = Vec::with_capacity(q);
        for (k, pt) in points.iter().enumerate() {
            if *pt != removed && incident(line, pt) {
                id_of[k] = next;
                class.push(next);
                next += 1;
            }
        }
        classes.push(class);
    }
    let edges = lines
        .iter()
        .filter(|l| !incident(l, &removed))
        .map(|line| {
            points
                .iter()
                .enumerate()
                .filter(|(_, pt)| incident(line, pt))
                .map(|(k, _)| id_of[k])
                .collect()
        })
        .collect();
    PartiteHypergraph::new(classes, edges)
}

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::analysis;
use crate::error::{Error, Result};
use crate::model::{Color, ColoredBiclique};

/// Default guard: at most this many colors for exhaustive enumeration.
pub const MAX_GUARDED_COLORS: usize = 3;
/// Default guard: at most this many matrix cells.
pub const MAX_GUARDED_CELLS: usize = 16;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filters {
    /// Every color class is a bi-equivalence graph.
    pub bi_equivalence: bool,
    pub spanning: bool,
    /// Implies `spanning` and `bi_equivalence`.
    pub antichain: bool,
    /// No two rows and no two columns are identical.
    pub reduced: bool,
}

impl Filters {
    pub fn none() -> Self {
        Filters::default()
    }

    pub fn bi_equivalence() -> Self {
        Filters {
            bi_equivalence: true,
            ..Filters::default()
        }
    }

    pub fn spanning_bi_equivalence() -> Self {
        Filters {
            bi_equivalence: true,
            spanning: true,
            ..Filters::default()
        }
    }

    pub fn antichain() -> Self {
        Filters {
            bi_equivalence: true,
            spanning: true,
            antichain: true,
            reduced: false,
        }
    }

    fn needs_bi_equivalence(&self) -> bool {
        self.bi_equivalence || self.antichain
    }

    fn needs_spanning(&self) -> bool {
        self.spanning || self.antichain
    }

    pub fn describe(&self) -> String {
        let mut names = Vec::new();
        if self.needs_bi_equivalence() {
            names.push("bi-equivalence");
        }
        if self.needs_spanning() {
            names.push("spanning");
        }
        if self.antichain {
            names.push("antichain");
        }
        if self.reduced {
            names.push("reduced");
        }
        if names.is_empty() {
            "none".into()
        } else {
            names.join("+")
        }
    }
}

/// Shape and filters of an enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumSpec {
    pub r: usize,
    pub m: usize,
    pub n: usize,
    pub filters: Filters,
    /// Emit one representative per orbit of row, column and color permutations.
    pub canonical: bool,
    /// Lift the default guard limits.
    pub override_guard: bool,
}

impl EnumSpec {
    pub fn new(r: usize, m: usize, n: usize) -> Self {
        EnumSpec {
            r,
            m,
            n,
            filters: Filters::none(),
            canonical: false,
            override_guard: false,
        }
    }

    pub fn with_filters(mut self, filters: Filters) -> Self {
        self.filters = filters;
        self
    }

    pub fn canonical(mut self, canonical: bool) -> Self {
        self.canonical = canonical;
        self
    }

    pub fn override_guard(mut self, yes: bool) -> Self {
        self.override_guard = yes;
        self
    }

    pub fn check(&self) -> Result<()> {
        if self.r == 0 || self.m == 0 || self.n == 0 {
            return Err(Error::InvalidShape(format!(
                "r, m and n must be positive (r={}, m={}, n={})",
                self.r, self.m, self.n
            )));
        }
        if !self.override_guard
            && (self.r > MAX_GUARDED_COLORS || self.m * self.n > MAX_GUARDED_CELLS)
        {
            return Err(Error::GuardLimit(format!(
                "r={} on {}x{} exceeds r <= {MAX_GUARDED_COLORS}, m*n <= {MAX_GUARDED_CELLS}",
                self.r, self.m, self.n
            )));
        }
        if self.m * self.n > 64 || self.r > Color::MAX as usize {
            return Err(Error::GuardLimit(format!("{}x{} with r={} is out of reach", self.m, self.n, self.r)));
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        format!(
            "r={} m={} n={} filters={} {}",
            self.r,
            self.m,
            self.n,
            self.filters.describe(),
            if self.canonical { "canonical" } else { "labelled" }
        )
    }
}

/// Lazily enumerates the colorings of an [`EnumSpec`] in lexicographic
/// row-major order.
///
/// The matrix is filled cell by cell. Partial matrices are pruned when a
/// 2x2 submatrix shows a color exactly three times (an induced path of
/// length three, which no bi-equivalence class contains), when a finished
/// row or column misses a color under the spanning filter, and, in canonical
/// mode, when rows or columns fall out of lexicographic order or a color is
/// used before all smaller ones. Complete matrices get the remaining filter
/// checks and, in canonical mode, the full minimality test.
pub fn enumerate_partitions(spec: EnumSpec) -> Result<Partitions> {
    spec.check()?;
    let cells = spec.m * spec.n;
    let canon = spec.canonical.then(|| CanonTester::new(spec.m, spec.r));
    Ok(Partitions {
        spec,
        cells: vec![0; cells],
        pos: 0,
        done: false,
        canon,
    })
}

pub struct Partitions {
    spec: EnumSpec,
    cells: Vec<Color>,
    /// Index of the cell being advanced.
    pos: usize,
    done: bool,
    canon: Option<CanonTester>,
}

impl Partitions {
    #[inline]
    fn at(&self, i: usize, j: usize) -> Color {
        self.cells[i * self.spec.n + j]
    }

    /// Whether the current value at `pos` is consistent with the cells before it.
    fn consistent(&self, pos: usize) -> bool {
        let EnumSpec { r, m, n, filters, canonical, .. } = self.spec;
        let (i, j) = (pos / n, pos % n);
        let c = self.cells[pos];
        if canonical {
            let max_used = self.cells[..pos].iter().copied().max().unwrap_or(0);
            if c > max_used + 1 {
                return false;
            }
            // columns must stay in non-decreasing lexicographic order
            if j > 0 && (0..i).all(|k| self.at(k, j - 1) == self.at(k, j)) && self.at(i, j - 1) > c {
                return false;
            }
        }
        if filters.needs_bi_equivalence() {
            for a in 0..i {
                for b in 0..j {
                    let quad = [self.at(a, b), self.at(a, j), self.at(i, b), c];
                    for &x in &quad {
                        if quad.iter().filter(|&&y| y == x).count() == 3 {
                            return false;
                        }
                    }
                }
            }
        }
        if j == n - 1 {
            let row = &self.cells[i * n..(i + 1) * n];
            if filters.needs_spanning() && !(1..=r as Color).all(|k| row.contains(&k)) {
                return false;
            }
            if canonical && i > 0 && self.cells[(i - 1) * n..i * n] > *row {
                return false;
            }
            if filters.reduced && (0..i).any(|a| &self.cells[a * n..(a + 1) * n] == row) {
                return false;
            }
        }
        if i == m - 1 && filters.needs_spanning() {
            let col: Vec<Color> = (0..m).map(|a| self.at(a, j)).collect();
            if !(1..=r as Color).all(|k| col.contains(&k)) {
                return false;
            }
        }
        true
    }

    fn accept_leaf(&self) -> Option<ColoredBiclique> {
        let EnumSpec { r, m, n, filters, .. } = self.spec;
        let cb = ColoredBiclique::new(m, n, r, self.cells.clone()).expect("cells in range");
        if filters.reduced && !analysis::is_reduced(&cb) {
            return None;
        }
        if filters.antichain && !analysis::is_antichain(&cb).unwrap_or(false) {
            return None;
        }
        if let Some(canon) = &self.canon {
            if !canon.is_minimal(&cb) {
                return None;
            }
        }
        Some(cb)
    }
}

impl Iterator for Partitions {
    type Item = ColoredBiclique;

    fn next(&mut self) -> Option<ColoredBiclique> {
        let total = self.cells.len();
        let r = self.spec.r as Color;
        while !self.done {
            if self.pos == total {
                // step back from a finished matrix before searching on
                let leaf = self.accept_leaf();
                self.pos -= 1;
                if leaf.is_some() {
                    return leaf;
                }
                continue;
            }
            // advance the current cell to its next consistent value
            let mut advanced = false;
            while self.cells[self.pos] < r {
                self.cells[self.pos] += 1;
                if self.consistent(self.pos) {
                    advanced = true;
                    break;
                }
            }
            if advanced {
                self.pos += 1;
                if self.pos < total {
                    self.cells[self.pos] = 0;
                }
            } else {
                self.cells[self.pos] = 0;
                if self.pos == 0 {
                    self.done = true;
                } else {
                    self.pos -= 1;
                }
            }
        }
        None
    }
}

/// Tests whether a matrix is the lexicographically least (row-major) member
/// of its orbit under row, column and color permutations. For a fixed row
/// order and color relabeling the least column order is the sorted one, so
/// only `m! * r!` images need to be built.
struct CanonTester {
    row_perms: Vec<Vec<usize>>,
    color_perms: Vec<Vec<Color>>,
}

impl CanonTester {
    fn new(m: usize, r: usize) -> Self {
        CanonTester {
            row_perms: (0..m).permutations(m).collect(),
            color_perms: (1..=r as Color)
                .permutations(r)
                .map(|p| std::iter::once(0).chain(p).collect())
                .collect(),
        }
    }

    fn is_minimal(&self, cb: &ColoredBiclique) -> bool {
        let (m, n) = (cb.m(), cb.n());
        let original = cb.entries();
        let mut columns: Vec<Vec<Color>> = vec![vec![0; m]; n];
        let mut image = vec![0 as Color; m * n];
        for rows in &self.row_perms {
            for relabel in &self.color_perms {
                for (j, col) in columns.iter_mut().enumerate() {
                    for (k, &i) in rows.iter().enumerate() {
                        col[k] = relabel[cb.color(i, j) as usize];
                    }
                }
                columns.sort_unstable();
                for (j, col) in columns.iter().enumerate() {
                    for (k, &c) in col.iter().enumerate() {
                        image[k * n + j] = c;
                    }
                }
                if image.as_slice() < original {
                    return false;
                }
            }
        }
        true
    }
}

/// Size of the orbit of `cb` under row, column and color permutations.
pub fn orbit_size(cb: &ColoredBiclique) -> usize {
    let (m, n, r) = (cb.m(), cb.n(), cb.r());
    let mut seen = std::collections::HashSet::new();
    for rows in (0..m).permutations(m) {
        for cols in (0..n).permutations(n) {
            for colors in (1..=r as Color).permutations(r) {
                let image: Vec<Color> = rows
                    .iter()
                    .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
                    .map(|(i, j)| colors[cb.color(i, j) as usize - 1])
                    .collect();
                seen.insert(image);
            }
        }
    }
    seen.len()
}

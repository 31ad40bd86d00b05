//! Exact minimum set cover by branch and bound.
//!
//! Shared by the component-cover solver and the hypergraph transversal
//! solver (a transversal is a cover of the edges by vertex "stars").
//!
//! Branching picks the uncovered element contained in the fewest sets and
//! tries its sets in index order. A greedy cover seeds the incumbent; nodes
//! are pruned with the larger of two lower bounds: `ceil(|U| / max gain)` and
//! a packing of uncovered elements that share no candidate set.

use fixedbitset::FixedBitSet;

/// Minimum cover of `0..universe` by `sets`. Returns chosen set indices in
/// ascending order, or `None` when some element lies in no set.
///
/// The result is deterministic: among optimal covers it is the first one met
/// by the search order described above.
pub fn minimum_set_cover(universe: usize, sets: &[FixedBitSet]) -> Option<Vec<usize>> {
    let mut solver = Solver::new(universe, sets)?;
    solver.search();
    let mut best = solver.best;
    best.sort_unstable();
    Some(best)
}

struct Solver<'a> {
    sets: &'a [FixedBitSet],
    /// Sets that survive dominance reduction, in index order.
    live: Vec<usize>,
    /// For each element, the live sets containing it.
    holders: Vec<Vec<usize>>,
    /// For each element, its holders as a bitset over set indices.
    holder_bits: Vec<FixedBitSet>,
    best: Vec<usize>,
}

impl<'a> Solver<'a> {
    fn new(universe: usize, sets: &'a [FixedBitSet]) -> Option<Self> {
        // drop sets contained in another set; keep the first of equal sets
        let live: Vec<usize> = (0..sets.len())
            .filter(|&i| {
                !(0..sets.len()).any(|j| {
                    j != i
                        && sets[i].is_subset(&sets[j])
                        && (sets[i] != sets[j] || j < i)
                })
            })
            .collect();
        let mut holders = vec![Vec::new(); universe];
        let mut holder_bits = vec![FixedBitSet::with_capacity(sets.len()); universe];
        for &s in &live {
            for e in sets[s].ones().filter(|&e| e < universe) {
                holders[e].push(s);
                holder_bits[e].insert(s);
            }
        }
        if holders.iter().any(Vec::is_empty) {
            return None;
        }
        let mut solver = Solver {
            sets,
            live,
            holders,
            holder_bits,
            best: Vec::new(),
        };
        solver.best = solver.greedy(universe);
        Some(solver)
    }

    fn greedy(&self, universe: usize) -> Vec<usize> {
        let mut uncovered = FixedBitSet::with_capacity(universe);
        uncovered.insert_range(..);
        let mut chosen = Vec::new();
        while !uncovered.is_clear() {
            let pick = *self
                .live
                .iter()
                .max_by_key(|&&s| (self.sets[s].intersection_count(&uncovered), std::cmp::Reverse(s)))
                .expect("nonempty");
            uncovered.difference_with(&self.sets[pick]);
            chosen.push(pick);
        }
        chosen
    }

    fn search(&mut self) {
        let universe = self.holders.len();
        let mut uncovered = FixedBitSet::with_capacity(universe);
        uncovered.insert_range(..);
        let mut chosen = Vec::new();
        self.descend(&uncovered, &mut chosen);
    }

    fn lower_bound(&self, uncovered: &FixedBitSet) -> usize {
        let remaining = uncovered.count_ones(..);
        if remaining == 0 {
            return 0;
        }
        let max_gain = self
            .live
            .iter()
            .map(|&s| self.sets[s].intersection_count(uncovered))
            .max()
            .unwrap_or(0);
        let by_size = remaining.div_ceil(max_gain.max(1));

        // elements with pairwise disjoint holder sets each need their own set
        let mut order: Vec<usize> = uncovered.ones().collect();
        order.sort_by_key(|&e| (self.holders[e].len(), e));
        let mut used = FixedBitSet::with_capacity(self.sets.len());
        let mut packing = 0;
        for e in order {
            if self.holder_bits[e].is_disjoint(&used) {
                used.union_with(&self.holder_bits[e]);
                packing += 1;
            }
        }
        by_size.max(packing)
    }

    fn descend(&mut self, uncovered: &FixedBitSet, chosen: &mut Vec<usize>) {
        if uncovered.is_clear() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        if chosen.len() + self.lower_bound(uncovered) >= self.best.len() {
            return;
        }
        let element = uncovered
            .ones()
            .min_by_key(|&e| (self.holders[e].len(), e))
            .expect("nonempty");
        for k in 0..self.holders[element].len() {
            let s = self.holders[element][k];
            let mut next = uncovered.clone();
            next.difference_with(&self.sets[s]);
            chosen.push(s);
            self.descend(&next, chosen);
            chosen.pop();
            if chosen.len() + 1 >= self.best.len() {
                // no deeper branch can beat the incumbent any more
                return;
            }
        }
    }
}

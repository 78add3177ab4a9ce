//! Exact minimum set cover over edge bitsets, by iterative deepening.

use fixedbitset::FixedBitSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetCoverOutcome {
    /// Indices into the input family.
    Found(Vec<usize>),
    Infeasible,
    BudgetExhausted,
}

struct Search<'a> {
    sets: Vec<&'a FixedBitSet>,
    ids: Vec<usize>,
    // containing[e]: reduced sets holding element e
    containing: Vec<Vec<usize>>,
    universe: &'a FixedBitSet,
    max_size: usize,
    budget: Option<u64>,
    nodes: u64,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn new(family: &'a [FixedBitSet], universe: &'a FixedBitSet, budget: Option<u64>) -> Self {
        // drop sets contained in another; larger sets first
        let mut order: Vec<usize> = (0..family.len()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(family[i].count_ones(..)), i));
        let mut ids: Vec<usize> = Vec::new();
        for i in order {
            let dominated = ids.iter().any(|&j| family[i].is_subset(&family[j]));
            if !dominated && family[i].count_ones(..) > 0 {
                ids.push(i);
            }
        }
        let sets: Vec<&FixedBitSet> = ids.iter().map(|&i| &family[i]).collect();
        let mut containing = vec![Vec::new(); universe.len()];
        for (r, s) in sets.iter().enumerate() {
            for e in s.ones() {
                if e < containing.len() {
                    containing[e].push(r);
                }
            }
        }
        let max_size = sets.iter().map(|s| s.count_ones(..)).max().unwrap_or(0);
        Search {
            sets,
            ids,
            containing,
            universe,
            max_size,
            budget,
            nodes: 0,
            exhausted: false,
        }
    }

    fn dfs(&mut self, covered: &FixedBitSet, left: usize, chosen: &mut Vec<usize>) -> bool {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.exhausted = true;
            return false;
        }
        let mut uncovered = self.universe.clone();
        uncovered.difference_with(covered);
        let remaining = uncovered.count_ones(..);
        if remaining == 0 {
            return true;
        }
        if left == 0 || remaining > left * self.max_size {
            return false;
        }
        let e = uncovered
            .ones()
            .min_by_key(|&e| self.containing[e].len())
            .expect("uncovered is non-empty");
        for idx in 0..self.containing[e].len() {
            let r = self.containing[e][idx];
            let mut next = covered.clone();
            next.union_with(self.sets[r]);
            chosen.push(r);
            if self.dfs(&next, left - 1, chosen) {
                return true;
            }
            chosen.pop();
            if self.exhausted {
                return false;
            }
        }
        false
    }

    fn feasible(&self) -> bool {
        let mut all = FixedBitSet::with_capacity(self.universe.len());
        for s in &self.sets {
            all.union_with(s);
        }
        self.universe.is_subset(&all)
    }
}

/// Chooses at most `k` members of `family` whose union contains `universe`.
pub fn cover_with_at_most(
    family: &[FixedBitSet],
    universe: &FixedBitSet,
    k: usize,
    budget: Option<u64>,
) -> SetCoverOutcome {
    let mut search = Search::new(family, universe, budget);
    if !search.feasible() {
        return SetCoverOutcome::Infeasible;
    }
    let mut chosen = Vec::new();
    let empty = FixedBitSet::with_capacity(universe.len());
    if search.dfs(&empty, k, &mut chosen) {
        SetCoverOutcome::Found(chosen.into_iter().map(|r| search.ids[r]).collect())
    } else if search.exhausted {
        SetCoverOutcome::BudgetExhausted
    } else {
        SetCoverOutcome::Infeasible
    }
}

/// Smallest subfamily covering `universe`.
pub fn min_set_cover(
    family: &[FixedBitSet],
    universe: &FixedBitSet,
    budget: Option<u64>,
) -> SetCoverOutcome {
    let mut search = Search::new(family, universe, budget);
    if !search.feasible() {
        return SetCoverOutcome::Infeasible;
    }
    let empty = FixedBitSet::with_capacity(universe.len());
    for k in 0..=search.sets.len() {
        let mut chosen = Vec::new();
        if search.dfs(&empty, k, &mut chosen) {
            return SetCoverOutcome::Found(chosen.into_iter().map(|r| search.ids[r]).collect());
        }
        if search.exhausted {
            return SetCoverOutcome::BudgetExhausted;
        }
    }
    unreachable!("the whole reduced family covers the universe")
}

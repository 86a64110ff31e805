use signed_graph_core::SignedGraph;

use crate::{CensusError, Result};

/// Hard cap on the number of edge subsets an enumeration may visit.
///
/// Compared against the binomial count `C(m, k)` before any work starts; the
/// pruned walk below only ever visits fewer nodes than that.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget(pub u64);

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget(10_000_000)
    }
}

impl EnumerationBudget {
    /// Errors when `C(m, k)` exceeds the budget.
    pub(crate) fn admit(&self, m: usize, k: usize) -> Result<()> {
        let subsets = binomial(m, k);
        if subsets > u128::from(self.0) {
            return Err(CensusError::BudgetExceeded {
                subsets,
                budget: self.0,
            });
        }
        Ok(())
    }
}

/// `C(m, k)` with saturation at `u128::MAX` (plenty past any usable budget).
pub(crate) fn binomial(m: usize, k: usize) -> u128 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = match acc.checked_mul((m - j) as u128) {
            Some(v) => v / (j as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Which cycle structure a pruned walk tolerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CyclePolicy {
    /// No cycles at all: complete masks of size n-1 are exactly the spanning
    /// trees.
    Forest,
    /// At most one cycle per component, odd cycles only: complete masks of
    /// size n-1 are exactly the one-tree TU-subgraphs, and masks of size n
    /// are exactly the all-odd-unicyclic TU-subgraphs (both by counting
    /// independent cycles per component).
    OddUnicyclic,
}

/// Union-find over vertices with two extras needed for the pruning walk:
/// the parity of each vertex's path to its root (to tell odd cycles from
/// even ones) and a per-root cycle flag (to reject a second cycle). Unions
/// are logged so the depth-first walk can roll back; no path compression,
/// which keeps rollback trivial and costs nothing at these sizes.
struct RollbackDsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
    parity_to_parent: Vec<bool>,
    has_cycle: Vec<bool>,
    log: Vec<LogEntry>,
}

enum LogEntry {
    Attached {
        child: usize,
        parent: usize,
        rank_bumped: bool,
        parent_cycle_inherited: bool,
    },
    CycleClosed {
        root: usize,
    },
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            rank: vec![0; n],
            parity_to_parent: vec![false; n],
            has_cycle: vec![false; n],
            log: Vec::new(),
        }
    }

    /// (root, parity of the path from v to the root).
    fn find(&self, mut v: usize) -> (usize, bool) {
        let mut parity = false;
        while self.parent[v] != v {
            parity ^= self.parity_to_parent[v];
            v = self.parent[v];
        }
        (v, parity)
    }

    fn checkpoint(&self) -> usize {
        self.log.len()
    }

    fn rollback(&mut self, checkpoint: usize) {
        while self.log.len() > checkpoint {
            match self.log.pop().unwrap() {
                LogEntry::Attached {
                    child,
                    parent,
                    rank_bumped,
                    parent_cycle_inherited,
                } => {
                    self.parent[child] = child;
                    self.parity_to_parent[child] = false;
                    if rank_bumped {
                        self.rank[parent] -= 1;
                    }
                    if parent_cycle_inherited {
                        self.has_cycle[parent] = false;
                    }
                }
                LogEntry::CycleClosed { root } => {
                    self.has_cycle[root] = false;
                }
            }
        }
    }

    /// Tries to add edge (u, v) under the policy. Returns whether the edge
    /// was accepted (and recorded in the log).
    fn try_add(&mut self, u: usize, v: usize, policy: CyclePolicy) -> bool {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            // The new edge closes a cycle whose length has the parity of
            // path(u) + path(v) + 1; it is odd exactly when pu == pv.
            let odd = pu == pv;
            let acceptable = match policy {
                CyclePolicy::Forest => false,
                CyclePolicy::OddUnicyclic => odd && !self.has_cycle[ru],
            };
            if acceptable {
                self.has_cycle[ru] = true;
                self.log.push(LogEntry::CycleClosed { root: ru });
            }
            return acceptable;
        }
        if policy == CyclePolicy::OddUnicyclic && self.has_cycle[ru] && self.has_cycle[rv] {
            // Merging two cyclic components could never be repaired later.
            return false;
        }
        let (child, parent, child_parity) = if self.rank[ru] < self.rank[rv] {
            (ru, rv, pu ^ pv ^ true)
        } else {
            (rv, ru, pu ^ pv ^ true)
        };
        self.parent[child] = parent;
        self.parity_to_parent[child] = child_parity;
        let rank_bumped = self.rank[child] == self.rank[parent];
        if rank_bumped {
            self.rank[parent] += 1;
        }
        let parent_cycle_inherited = self.has_cycle[child] && !self.has_cycle[parent];
        if parent_cycle_inherited {
            self.has_cycle[parent] = true;
        }
        self.log.push(LogEntry::Attached {
            child,
            parent,
            rank_bumped,
            parent_cycle_inherited,
        });
        true
    }
}

/// Depth-first walk over all k-edge subsets that survive the cycle policy,
/// in lexicographic order of edge indices. Violations of either policy are
/// monotone under adding edges, so pruning a partial selection never loses a
/// valid completion.
pub(crate) fn for_each_pruned_mask(
    g: &SignedGraph,
    k: usize,
    policy: CyclePolicy,
    mut visit: impl FnMut(&[usize]),
) {
    let m = g.edge_count();
    if k > m {
        return;
    }
    let mut dsu = RollbackDsu::new(g.vertex_count());
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    walk(g, k, policy, 0, &mut chosen, &mut dsu, &mut visit);
}

fn walk(
    g: &SignedGraph,
    k: usize,
    policy: CyclePolicy,
    start: usize,
    chosen: &mut Vec<usize>,
    dsu: &mut RollbackDsu,
    visit: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    let m = g.edge_count();
    let remaining_needed = k - chosen.len();
    for idx in start..=m - remaining_needed {
        let e = g.edge(idx);
        let checkpoint = dsu.checkpoint();
        if dsu.try_add(e.u, e.v, policy) {
            chosen.push(idx);
            walk(g, k, policy, idx + 1, chosen, dsu, visit);
            chosen.pop();
            dsu.rollback(checkpoint);
        }
    }
}

/// Plain lexicographic walk over **all** k-subsets of `0..m`, no pruning
/// (used where every term of an expansion matters, not just the structured
/// ones).
pub(crate) fn for_each_combination(m: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    if k == 0 {
        visit(&idx);
        return;
    }
    loop {
        visit(&idx);
        let mut i = k - 1;
        while idx[i] == m - k + i {
            if i == 0 {
                return;
            }
            i -= 1;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use signed_graph_core::{classify_spanning_subgraph, complete, SubgraphMask};

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(14, 7), 3432);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(200, 100), u128::MAX); // saturates
    }

    #[test]
    fn budget_admits_and_rejects() {
        let b = EnumerationBudget(100);
        assert!(b.admit(5, 2).is_ok());
        assert!(matches!(
            b.admit(10, 3), // C(10,3) = 120
            Err(CensusError::BudgetExceeded { subsets: 120, budget: 100 })
        ));
        assert!(EnumerationBudget::default().admit(14, 7).is_ok());
    }

    #[test]
    fn combinations_cover_the_full_space() {
        let mut seen = Vec::new();
        for_each_combination(5, 3, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 10);
        assert_eq!(seen.first().unwrap(), &vec![0, 1, 2]);
        assert_eq!(seen.last().unwrap(), &vec![2, 3, 4]);
        let mut dedup = seen.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 10);

        let mut empties = 0;
        for_each_combination(4, 0, |s| {
            assert!(s.is_empty());
            empties += 1;
        });
        assert_eq!(empties, 1);
    }

    #[test]
    fn forest_walk_agrees_with_unpruned_filter() {
        // K5 with alternating signs: compare the pruned spanning-tree walk
        // against filtering all subsets through the classifier.
        let signs: Vec<signed_graph_core::Sign> = (0..10)
            .map(|k| {
                if k % 3 == 0 {
                    signed_graph_core::Sign::Minus
                } else {
                    signed_graph_core::Sign::Plus
                }
            })
            .collect();
        let g = complete(5, Some(&signs)).unwrap();
        let k = g.vertex_count() - 1;

        let mut pruned = Vec::new();
        for_each_pruned_mask(&g, k, CyclePolicy::Forest, |s| pruned.push(s.to_vec()));

        let mut filtered = Vec::new();
        for_each_combination(g.edge_count(), k, |s| {
            let mask = SubgraphMask::new(&g, s.iter().copied()).unwrap();
            let report = classify_spanning_subgraph(&g, &mask);
            if report.components.len() == 1 && report.components[0].is_tree() {
                filtered.push(s.to_vec());
            }
        });

        assert_eq!(pruned, filtered);
        assert_eq!(pruned.len(), 125); // Cayley: 5^3 spanning trees of K5
    }

    #[test]
    fn odd_unicyclic_walk_agrees_with_unpruned_filter() {
        let signs: Vec<signed_graph_core::Sign> = (0..10)
            .map(|k| {
                if k % 2 == 0 {
                    signed_graph_core::Sign::Minus
                } else {
                    signed_graph_core::Sign::Plus
                }
            })
            .collect();
        let g = complete(5, Some(&signs)).unwrap();
        for k in [g.vertex_count() - 1, g.vertex_count()] {
            let mut pruned = Vec::new();
            for_each_pruned_mask(&g, k, CyclePolicy::OddUnicyclic, |s| pruned.push(s.to_vec()));

            let mut filtered = Vec::new();
            for_each_combination(g.edge_count(), k, |s| {
                let mask = SubgraphMask::new(&g, s.iter().copied()).unwrap();
                let report = classify_spanning_subgraph(&g, &mask);
                if report.is_tu {
                    filtered.push(s.to_vec());
                }
            });

            assert_eq!(pruned, filtered, "k = {k}");
            assert!(!pruned.is_empty());
        }
    }
}

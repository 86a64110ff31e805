use num_bigint::BigInt;
use num_traits::Zero;

use gaussian_linalg::{det, GMatrix};
use matrix_zoo::{laplacian, net_laplacian};
use signed_graph_core::{classify_spanning_subgraph, SignedGraph, SubgraphMask};

use crate::enumerate::{for_each_pruned_mask, CyclePolicy, EnumerationBudget};
use crate::{check_connected, check_nonempty, CensusError, Result};

/// Exact positive / negative spanning-tree counts. A spanning tree is
/// positive when it contains an even number of negative edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCounts {
    pub t_plus: BigInt,
    pub t_minus: BigInt,
}

impl TreeCounts {
    /// `t+ - t-`, the quantity the net-Laplacian minors compute.
    pub fn balance(&self) -> BigInt {
        &self.t_plus - &self.t_minus
    }

    /// `t+ + t-`, the ordinary spanning-tree count of the underlying graph.
    pub fn total(&self) -> BigInt {
        &self.t_plus + &self.t_minus
    }
}

/// Deleted-vertex determinants of the two Laplacians, one entry per anchor:
/// `net[i] = det(L±(i))` and `plain[i]` the same minor of the ordinary
/// Laplacian of the underlying (all-positive) graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeMinors {
    pub net: Vec<BigInt>,
    pub plain: Vec<BigInt>,
}

/// Counts spanning trees by direct enumeration, split by sign.
///
/// Walks the `(n-1)`-edge acyclic subsets with union-find pruning; on a
/// connected graph each surviving subset is a spanning tree.
pub fn enumerate_spanning_trees(g: &SignedGraph, budget: EnumerationBudget) -> Result<TreeCounts> {
    check_nonempty(g)?;
    check_connected(g)?;
    let k = g.vertex_count() - 1;
    budget.admit(g.edge_count(), k)?;
    let mut t_plus: u64 = 0;
    let mut t_minus: u64 = 0;
    for_each_pruned_mask(g, k, CyclePolicy::Forest, |sel| {
        let mask = SubgraphMask::new(g, sel.iter().copied()).expect("enumerated indices are valid");
        let report = classify_spanning_subgraph(g, &mask);
        debug_assert!(report.components.len() == 1 && report.components[0].is_tree());
        if report.components[0].is_negative() {
            t_minus += 1;
        } else {
            t_plus += 1;
        }
    });
    Ok(TreeCounts {
        t_plus: t_plus.into(),
        t_minus: t_minus.into(),
    })
}

/// Computes `det(L±(i))` and the corresponding minor of the underlying
/// Laplacian for every vertex `i`, and checks that each family is
/// independent of the deleted vertex.
pub fn tree_balance_via_minor(g: &SignedGraph) -> Result<TreeMinors> {
    check_nonempty(g)?;
    check_connected(g)?;
    let net = principal_minors(&net_laplacian(g));
    let plain = principal_minors(&laplacian(&g.underlying()));
    for (label, values) in [("net Laplacian", &net), ("underlying Laplacian", &plain)] {
        if values.windows(2).any(|w| w[0] != w[1]) {
            return Err(CensusError::CountIdentityViolated(format!(
                "{label} minors differ across anchors: {values:?}"
            )));
        }
    }
    Ok(TreeMinors { net, plain })
}

/// `det` of the matrix with row and column `i` deleted, for each `i`.
fn principal_minors(m: &GMatrix) -> Vec<BigInt> {
    (0..m.rows())
        .map(|i| {
            let minor = m.delete(&[i], &[i]).expect("diagonal index is in range");
            det(&minor)
                .expect("principal minors are square")
                .to_real()
                .expect("a real matrix has a real determinant")
        })
        .collect()
}

/// Recovers `(t+, t-)` from the determinants alone:
/// `t± = (det L(i) ± det L±(i)) / 2` where `L` is the underlying Laplacian.
///
/// Both counts are checked to come out integral and nonnegative — the
/// identities guarantee this, so a violation means a construction bug, not
/// bad input.
pub fn tree_counts_via_corollary(g: &SignedGraph) -> Result<TreeCounts> {
    let minors = tree_balance_via_minor(g)?;
    counts_from_minors(&minors)
}

pub(crate) fn counts_from_minors(minors: &TreeMinors) -> Result<TreeCounts> {
    let plain = &minors.plain[0];
    let net = &minors.net[0];
    let doubled_plus = plain + net;
    let doubled_minus = plain - net;
    let two = BigInt::from(2);
    for (label, doubled) in [("t+", &doubled_plus), ("t-", &doubled_minus)] {
        if !(doubled % &two).is_zero() {
            return Err(CensusError::CountIdentityViolated(format!(
                "2·{label} = {doubled} is odd"
            )));
        }
        if *doubled < BigInt::zero() {
            return Err(CensusError::CountIdentityViolated(format!(
                "{label} = {doubled}/2 is negative"
            )));
        }
    }
    Ok(TreeCounts {
        t_plus: doubled_plus / &two,
        t_minus: doubled_minus / &two,
    })
}

/// The spanning-tree identities computed from both directions at once:
/// enumeration on one side, exact determinants on the other. Nothing here
/// asserts that the sides agree — that comparison is the caller's check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCensus {
    /// Counts from subset enumeration.
    pub counts: TreeCounts,
    /// Laplacian minors per anchor (anchor-independence already verified).
    pub minors: TreeMinors,
    /// Counts recovered from the minors alone.
    pub via_corollary: TreeCounts,
}

impl TreeCensus {
    pub fn compute(g: &SignedGraph, budget: EnumerationBudget) -> Result<TreeCensus> {
        let counts = enumerate_spanning_trees(g, budget)?;
        let minors = tree_balance_via_minor(g)?;
        let via_corollary = counts_from_minors(&minors)?;
        Ok(TreeCensus {
            counts,
            minors,
            via_corollary,
        })
    }

    /// True when the enumeration, the minors, and the corollary counts all
    /// tell the same story.
    pub fn consistent(&self) -> bool {
        self.counts.balance() == self.minors.net[0]
            && self.counts.total() == self.minors.plain[0]
            && self.via_corollary == self.counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use signed_graph_core::{complete, path, paw, Edge, Sign};

    fn budget() -> EnumerationBudget {
        EnumerationBudget::default()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn paw_tree_census() {
        let census = TreeCensus::compute(&paw(), budget()).unwrap();
        assert_eq!(census.counts.t_plus, big(1));
        assert_eq!(census.counts.t_minus, big(2));
        assert_eq!(census.minors.net, vec![big(-1); 4]);
        assert_eq!(census.minors.plain, vec![big(3); 4]);
        assert_eq!(census.via_corollary, census.counts);
        assert!(census.consistent());
        assert_eq!(census.counts.balance(), big(-1));
        assert_eq!(census.counts.total(), big(3));
    }

    #[test]
    fn triangles_split_by_sign() {
        let all_plus = complete(3, None).unwrap();
        let counts = enumerate_spanning_trees(&all_plus, budget()).unwrap();
        assert_eq!((counts.t_plus, counts.t_minus), (big(3), big(0)));

        // One negative edge: the two spanning paths through it are negative.
        let signs = [Sign::Minus, Sign::Plus, Sign::Plus];
        let one_minus = complete(3, Some(&signs)).unwrap();
        let counts = enumerate_spanning_trees(&one_minus, budget()).unwrap();
        assert_eq!((counts.t_plus, counts.t_minus), (big(1), big(2)));
        assert!(TreeCensus::compute(&one_minus, budget()).unwrap().consistent());
    }

    #[test]
    fn single_edge_both_signs() {
        let plus = path(2, None).unwrap();
        let census = TreeCensus::compute(&plus, budget()).unwrap();
        assert_eq!((census.counts.t_plus, census.counts.t_minus), (big(1), big(0)));
        assert_eq!(census.minors.net, vec![big(1), big(1)]);

        let minus = path(2, Some(&[Sign::Minus])).unwrap();
        let census = TreeCensus::compute(&minus, budget()).unwrap();
        assert_eq!((&census.counts.t_plus, &census.counts.t_minus), (&big(0), &big(1)));
        assert_eq!(census.minors.net, vec![big(-1), big(-1)]);
        assert!(census.consistent());
    }

    #[test]
    fn single_vertex_has_one_empty_tree() {
        let k1 = SignedGraph::new(1, vec![]).unwrap();
        let census = TreeCensus::compute(&k1, budget()).unwrap();
        assert_eq!((&census.counts.t_plus, &census.counts.t_minus), (&big(1), &big(0)));
        assert_eq!(census.minors.net, vec![big(1)]);
        assert!(census.consistent());
    }

    #[test]
    fn structural_errors() {
        let disconnected = SignedGraph::new(3, vec![Edge::new(0, 1, Sign::Plus).unwrap()]).unwrap();
        assert_eq!(
            enumerate_spanning_trees(&disconnected, budget()),
            Err(CensusError::Disconnected)
        );
        assert_eq!(
            tree_balance_via_minor(&disconnected),
            Err(CensusError::Disconnected)
        );

        let empty = SignedGraph::new(0, vec![]).unwrap();
        assert_eq!(
            enumerate_spanning_trees(&empty, budget()),
            Err(CensusError::EmptyGraph)
        );

        let k5 = complete(5, None).unwrap();
        assert_eq!(
            enumerate_spanning_trees(&k5, EnumerationBudget(100)),
            Err(CensusError::BudgetExceeded {
                subsets: 210,
                budget: 100
            })
        );
    }
}

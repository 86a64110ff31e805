use num_bigint::BigInt;
use num_traits::One;

use gaussian_linalg::det;
use matrix_zoo::signless_net_laplacian;
use signed_graph_core::{classify_spanning_subgraph, SignedGraph, SubgraphMask};

use crate::enumerate::{for_each_pruned_mask, CyclePolicy, EnumerationBudget};
use crate::{check_anchor, check_connected, check_nonempty, Result};

/// `4^c` as an exact integer.
fn four_pow(c: usize) -> BigInt {
    BigInt::one() << (2 * c)
}

/// One qualifying spanning subgraph in a census: every component is a tree
/// or odd-unicyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuRecord {
    /// Edge indices of the mask, ascending.
    pub edges: Vec<usize>,
    /// Number of odd-unicyclic components.
    pub c: usize,
    /// Number of negative components (negative trees plus negative
    /// odd-unicyclic components).
    pub b_minus: usize,
}

impl TuRecord {
    /// Whether the record lands in the negatively-weighted class.
    pub fn is_odd(&self) -> bool {
        self.b_minus % 2 == 1
    }

    /// The contribution `4^c` (unsigned; the class carries the sign).
    pub fn weight(&self) -> BigInt {
        four_pow(self.c)
    }
}

fn split_sums(records: &[TuRecord]) -> (BigInt, BigInt) {
    let mut sum_even = BigInt::from(0);
    let mut sum_odd = BigInt::from(0);
    for record in records {
        if record.is_odd() {
            sum_odd += record.weight();
        } else {
            sum_even += record.weight();
        }
    }
    (sum_even, sum_odd)
}

/// Census of the `(n-1)`-edge spanning subgraphs made of one tree containing
/// the anchor plus odd-unicyclic components, next to the determinant the
/// census is supposed to equal. The two sides are computed independently;
/// [`RootedTuCensus::agrees`] is the comparison, never an input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTuCensus {
    pub anchor: usize,
    /// Qualifying masks in lexicographic order.
    pub records: Vec<TuRecord>,
    /// Σ 4^c over records with an even number of negative components.
    pub sum_even: BigInt,
    /// Σ 4^c over records with an odd number of negative components.
    pub sum_odd: BigInt,
    /// `det(Q±(anchor))` by exact elimination.
    pub minor: BigInt,
}

impl RootedTuCensus {
    /// The combinatorial side: `sum_even - sum_odd`.
    pub fn combinatorial_value(&self) -> BigInt {
        &self.sum_even - &self.sum_odd
    }

    /// Whether the two sides of the identity agree.
    pub fn agrees(&self) -> bool {
        self.combinatorial_value() == self.minor
    }
}

/// Walks all `(n-1)`-edge masks whose components are trees or odd-unicyclic
/// (such a mask always has exactly one tree component) and hands each record
/// to every anchor inside its tree component. One walk serves all anchors
/// because the classification does not depend on the anchor.
fn rooted_records_by_anchor(
    g: &SignedGraph,
    budget: EnumerationBudget,
) -> Result<Vec<Vec<TuRecord>>> {
    check_nonempty(g)?;
    check_connected(g)?;
    let n = g.vertex_count();
    budget.admit(g.edge_count(), n - 1)?;
    let mut per_anchor: Vec<Vec<TuRecord>> = vec![Vec::new(); n];
    for_each_pruned_mask(g, n - 1, CyclePolicy::OddUnicyclic, |sel| {
        let mask = SubgraphMask::new(g, sel.iter().copied()).expect("enumerated indices are valid");
        let report = classify_spanning_subgraph(g, &mask);
        debug_assert!(report.is_tu && report.has_unique_tree());
        let record = TuRecord {
            edges: sel.to_vec(),
            c: report.odd_unicyclic_components,
            b_minus: report.b_minus,
        };
        let tree = report
            .components
            .iter()
            .find(|comp| comp.is_tree())
            .expect("an (n-1)-edge mask with tree/odd-unicyclic components has a tree");
        for &v in &tree.vertices {
            per_anchor[v].push(record.clone());
        }
    });
    Ok(per_anchor)
}

fn census_for_anchor(g: &SignedGraph, anchor: usize, records: Vec<TuRecord>) -> RootedTuCensus {
    let (sum_even, sum_odd) = split_sums(&records);
    RootedTuCensus {
        anchor,
        records,
        sum_even,
        sum_odd,
        minor: rooted_minor(g, anchor),
    }
}

/// Rooted census for a single anchor vertex.
pub fn enumerate_rooted_tu(
    g: &SignedGraph,
    anchor: usize,
    budget: EnumerationBudget,
) -> Result<RootedTuCensus> {
    check_anchor(g, anchor)?;
    let mut per_anchor = rooted_records_by_anchor(g, budget)?;
    let records = std::mem::take(&mut per_anchor[anchor]);
    Ok(census_for_anchor(g, anchor, records))
}

/// Rooted censuses for every anchor, sharing a single enumeration pass.
pub fn rooted_tu_all_anchors(
    g: &SignedGraph,
    budget: EnumerationBudget,
) -> Result<Vec<RootedTuCensus>> {
    let per_anchor = rooted_records_by_anchor(g, budget)?;
    Ok(per_anchor
        .into_iter()
        .enumerate()
        .map(|(anchor, records)| census_for_anchor(g, anchor, records))
        .collect())
}

/// `det(Q±(anchor))` by exact elimination. `Q±` is a real matrix, so the
/// determinant's imaginary part must vanish; a nonzero one would be an
/// elimination bug, not a property of the graph.
pub fn rooted_tu_via_minor(g: &SignedGraph, anchor: usize) -> Result<BigInt> {
    check_anchor(g, anchor)?;
    Ok(rooted_minor(g, anchor))
}

fn rooted_minor(g: &SignedGraph, anchor: usize) -> BigInt {
    let q = signless_net_laplacian(g);
    let minor = q.delete(&[anchor], &[anchor]).expect("anchor is validated");
    det(&minor)
        .expect("principal minors are square")
        .to_real()
        .expect("a real matrix has a real determinant")
}

/// Census of the `n`-edge spanning subgraphs whose every component is
/// odd-unicyclic, next to `det(Q±)` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullTuCensus {
    /// Qualifying masks in lexicographic order.
    pub records: Vec<TuRecord>,
    pub sum_even: BigInt,
    pub sum_odd: BigInt,
    /// `det(Q±)` by exact elimination.
    pub det_q: BigInt,
}

impl FullTuCensus {
    /// The combinatorial side: `sum_even - sum_odd`.
    pub fn combinatorial_value(&self) -> BigInt {
        &self.sum_even - &self.sum_odd
    }

    /// Whether the two sides of the identity agree.
    pub fn agrees(&self) -> bool {
        self.combinatorial_value() == self.det_q
    }
}

/// Enumerates the `n`-edge all-odd-unicyclic spanning subgraphs. With fewer
/// edges than vertices the census is empty (and `det(Q±) = 0` to match).
/// Connectivity is not required — the identity holds componentwise.
pub fn enumerate_full_tu(g: &SignedGraph, budget: EnumerationBudget) -> Result<FullTuCensus> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut records = Vec::new();
    if m >= n {
        budget.admit(m, n)?;
        for_each_pruned_mask(g, n, CyclePolicy::OddUnicyclic, |sel| {
            let mask =
                SubgraphMask::new(g, sel.iter().copied()).expect("enumerated indices are valid");
            let report = classify_spanning_subgraph(g, &mask);
            debug_assert!(report.is_tu && report.tree_components == 0);
            records.push(TuRecord {
                edges: sel.to_vec(),
                c: report.odd_unicyclic_components,
                b_minus: report.b_minus,
            });
        });
    }
    let (sum_even, sum_odd) = split_sums(&records);
    Ok(FullTuCensus {
        records,
        sum_even,
        sum_odd,
        det_q: det_q_via_matrix(g),
    })
}

/// `det(Q±)` by exact elimination, with the same realness assertion as the
/// minors.
pub fn det_q_via_matrix(g: &SignedGraph) -> BigInt {
    det(&signless_net_laplacian(g))
        .expect("the signless net Laplacian is square")
        .to_real()
        .expect("a real matrix has a real determinant")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::CensusError;
    use signed_graph_core::{complete, cycle, extended_paw, path, Edge, Sign};

    fn budget() -> EnumerationBudget {
        EnumerationBudget::default()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    // The five-vertex graph whose rooted census at vertex 1 has exactly five
    // qualifying masks: four spanning trees and one triangle-plus-edge and
    // one triangle-plus-isolated-vertex split (c-values 0,0,0,1,1).
    #[test]
    fn extended_paw_rooted_census_at_vertex_one() {
        let g = extended_paw();
        let census = enumerate_rooted_tu(&g, 0, budget()).unwrap();
        let summary: Vec<(Vec<usize>, usize, bool)> = census
            .records
            .iter()
            .map(|r| (r.edges.clone(), r.c, r.is_odd()))
            .collect();
        assert_eq!(
            summary,
            vec![
                (vec![0, 1, 2, 3], 0, false),
                (vec![0, 1, 2, 4], 0, true),
                (vec![0, 1, 3, 4], 0, false),
                (vec![0, 2, 3, 4], 1, true),
                (vec![1, 2, 3, 4], 1, false),
            ]
        );
        assert_eq!(census.sum_even, big(6));
        assert_eq!(census.sum_odd, big(5));
        assert_eq!(census.minor, big(1));
        assert!(census.agrees());
    }

    #[test]
    fn extended_paw_full_census_is_the_whole_graph() {
        let g = extended_paw();
        let census = enumerate_full_tu(&g, budget()).unwrap();
        assert_eq!(census.records.len(), 1);
        let only = &census.records[0];
        assert_eq!(only.edges, vec![0, 1, 2, 3, 4]);
        assert_eq!(only.c, 1);
        assert!(!only.is_odd());
        assert_eq!(only.weight(), big(4));
        assert_eq!(census.sum_even, big(4));
        assert_eq!(census.sum_odd, big(0));
        assert_eq!(census.det_q, big(4));
        assert!(census.agrees());
    }

    #[test]
    fn rooted_census_agrees_at_every_anchor_of_the_extended_paw() {
        let g = extended_paw();
        let all = rooted_tu_all_anchors(&g, budget()).unwrap();
        assert_eq!(all.len(), 5);
        for census in &all {
            assert!(census.agrees(), "anchor {}", census.anchor + 1);
        }
        // Vertex 1 sits in the tree component of all five masks; vertex 4
        // (inside the triangle) only in the spanning trees.
        assert_eq!(all[0].records.len(), 5);
        assert_eq!(all[3].records.len(), 3);
        // The per-anchor censuses of a single walk match the one-anchor API.
        assert_eq!(all[2], enumerate_rooted_tu(&g, 2, budget()).unwrap());
    }

    #[test]
    fn single_positive_edge() {
        let g = path(2, None).unwrap();
        let rooted = enumerate_rooted_tu(&g, 0, budget()).unwrap();
        assert_eq!(rooted.records.len(), 1);
        assert_eq!(rooted.sum_even, big(1));
        assert_eq!(rooted.sum_odd, big(0));
        assert_eq!(rooted.minor, big(1));
        assert!(rooted.agrees());

        // One edge on two vertices: no n-edge subgraph exists.
        let full = enumerate_full_tu(&g, budget()).unwrap();
        assert!(full.records.is_empty());
        assert_eq!(full.det_q, big(0));
        assert!(full.agrees());
    }

    #[test]
    fn whole_tree_is_its_only_rooted_record() {
        let t = path(4, Some(&[Sign::Plus, Sign::Minus, Sign::Plus])).unwrap();
        for anchor in 0..4 {
            let census = enumerate_rooted_tu(&t, anchor, budget()).unwrap();
            assert_eq!(census.records.len(), 1);
            assert_eq!(census.records[0].c, 0);
            assert!(census.records[0].is_odd()); // one negative edge
            assert_eq!(census.sum_even, big(0));
            assert_eq!(census.sum_odd, big(1));
            assert_eq!(census.minor, big(-1));
            assert!(census.agrees());
        }
    }

    #[test]
    fn positive_triangle_rooted_census() {
        let g = complete(3, None).unwrap();
        let census = enumerate_rooted_tu(&g, 0, budget()).unwrap();
        // The three 2-edge spanning trees qualify; no 2-edge mask contains a
        // cycle.
        assert_eq!(census.records.len(), 3);
        assert!(census.records.iter().all(|r| r.c == 0 && !r.is_odd()));
        assert_eq!(census.sum_even, big(3));
        assert_eq!(census.minor, big(3));
        assert!(census.agrees());
    }

    #[test]
    fn all_positive_square_has_empty_full_census_and_zero_determinant() {
        let g = cycle(4, None).unwrap();
        let census = enumerate_full_tu(&g, budget()).unwrap();
        assert!(census.records.is_empty());
        assert_eq!(census.det_q, big(0));
        assert!(census.agrees());
    }

    #[test]
    fn full_census_works_on_disconnected_graphs() {
        // Two disjoint triangles, one all-positive, one with a negative edge.
        let edges = vec![
            Edge::new(0, 1, Sign::Plus).unwrap(),
            Edge::new(1, 2, Sign::Plus).unwrap(),
            Edge::new(0, 2, Sign::Plus).unwrap(),
            Edge::new(3, 4, Sign::Minus).unwrap(),
            Edge::new(4, 5, Sign::Plus).unwrap(),
            Edge::new(3, 5, Sign::Plus).unwrap(),
        ];
        let g = SignedGraph::new(6, edges).unwrap();
        let census = enumerate_full_tu(&g, budget()).unwrap();
        // The only 6-edge mask is the whole graph: two odd-unicyclic
        // components, one of them negative.
        assert_eq!(census.records.len(), 1);
        assert_eq!(census.records[0].c, 2);
        assert!(census.records[0].is_odd());
        assert_eq!(census.sum_odd, big(16));
        assert_eq!(census.det_q, big(-16));
        assert!(census.agrees());
    }

    #[test]
    fn structural_errors() {
        let disconnected =
            SignedGraph::new(3, vec![Edge::new(0, 1, Sign::Plus).unwrap()]).unwrap();
        assert_eq!(
            enumerate_rooted_tu(&disconnected, 0, budget()),
            Err(CensusError::Disconnected)
        );
        assert_eq!(
            rooted_tu_all_anchors(&disconnected, budget()).unwrap_err(),
            CensusError::Disconnected
        );

        let g = extended_paw();
        assert_eq!(
            enumerate_rooted_tu(&g, 5, budget()),
            Err(CensusError::AnchorOutOfRange { anchor: 5, n: 5 })
        );
        assert_eq!(
            rooted_tu_via_minor(&g, 7),
            Err(CensusError::AnchorOutOfRange { anchor: 7, n: 5 })
        );

        let k5 = complete(5, None).unwrap();
        assert!(matches!(
            enumerate_rooted_tu(&k5, 0, EnumerationBudget(100)),
            Err(CensusError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            enumerate_full_tu(&k5, EnumerationBudget(100)),
            Err(CensusError::BudgetExceeded { .. })
        ));
    }
}

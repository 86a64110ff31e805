use gaussian_linalg::{kernel_basis, rank, BigRational, GMatrix};
use num_traits::Zero;
use signed_graph_core::SignedGraph;

use crate::{build_bundle, MatrixBundle, Orientation, Result};

/// Outcome of one verified identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// On failure, a human-readable witness (first differing entry, the
    /// offending values, ...).
    pub witness: Option<String>,
}

impl Check {
    fn pass(name: impl Into<String>) -> Check {
        Check { name: name.into(), pass: true, witness: None }
    }

    fn fail(name: impl Into<String>, witness: String) -> Check {
        Check { name: name.into(), pass: false, witness: Some(witness) }
    }

    fn equality(name: impl Into<String>, lhs: &GMatrix, rhs: &GMatrix) -> Check {
        match lhs.first_difference(rhs) {
            None => Check::pass(name),
            Some((r, c, a, b)) => Check::fail(
                name,
                format!("entry ({r},{c}): left has {a}, right has {b}"),
            ),
        }
    }
}

/// A batch of named checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Verifies the four incidence factorizations of a bundle:
///
/// * `Q± = M± M±ᵀ` and `L± = N± N±ᵀ` (plain transpose), and
/// * `Q(|G|) = M± M±*` and `L(|G|) = N± N±*` (conjugate transpose), where
///   the underlying graph's matrices are derived from the bundle by taking
///   entrywise absolute values of `A`.
pub fn verify_factorizations(bundle: &MatrixBundle) -> Result<CheckReport> {
    let m = &bundle.net_incidence;
    let n = &bundle.oriented_net_incidence;
    let abs_adjacency = bundle.adjacency.abs_entries()?;
    let underlying_q = bundle.degree.add(&abs_adjacency)?;
    let underlying_l = bundle.degree.sub(&abs_adjacency)?;

    let checks = vec![
        Check::equality(
            "signless_net_laplacian = M± M±ᵀ",
            &bundle.signless_net_laplacian,
            &m.mul(&m.transpose())?,
        ),
        Check::equality(
            "net_laplacian = N± N±ᵀ",
            &bundle.net_laplacian,
            &n.mul(&n.transpose())?,
        ),
        Check::equality(
            "underlying signless_laplacian = M± M±*",
            &underlying_q,
            &m.mul(&m.conj_transpose())?,
        ),
        Check::equality(
            "underlying laplacian = N± N±*",
            &underlying_l,
            &n.mul(&n.conj_transpose())?,
        ),
    ];
    Ok(CheckReport { checks })
}

/// Verifies how the zoo transforms under flipping every edge sign:
/// `L(-G) = Q(G)`, `Q(-G) = L(G)`, `L±(-G) = -L±(G)`, `Q±(-G) = -Q±(G)`.
pub fn verify_negation_relations(g: &SignedGraph) -> Result<CheckReport> {
    let o = Orientation::canonical(g.edge_count());
    let original = build_bundle(g, &o)?;
    let negated = build_bundle(&g.negated(), &o)?;

    let checks = vec![
        Check::equality(
            "laplacian of negation = signless_laplacian",
            &negated.laplacian,
            &original.signless_laplacian,
        ),
        Check::equality(
            "signless_laplacian of negation = laplacian",
            &negated.signless_laplacian,
            &original.laplacian,
        ),
        Check::equality(
            "net_laplacian of negation = -net_laplacian",
            &negated.net_laplacian,
            &original.net_laplacian.negated(),
        ),
        Check::equality(
            "signless_net_laplacian of negation = -signless_net_laplacian",
            &negated.signless_net_laplacian,
            &original.signless_net_laplacian.negated(),
        ),
    ];
    Ok(CheckReport { checks })
}

/// Verifies the rank ties between the net incidence matrices of `G` and the
/// incidence matrices of the underlying unsigned graph, plus the one-sided
/// bounds against the net Laplacians:
///
/// * `rank M± = rank M(|G|)` and `rank N± = rank N(|G|)`,
/// * `rank M± = rank Q(|G|)`,
/// * `rank M± >= rank Q±` and `rank N± >= rank L±`.
pub fn verify_rank_relations(g: &SignedGraph, orientation: &Orientation) -> Result<CheckReport> {
    let bundle = build_bundle(g, orientation)?;
    let underlying = g.underlying();
    let underlying_bundle = build_bundle(&underlying, orientation)?;

    let rank_m = rank(&bundle.net_incidence);
    let rank_n = rank(&bundle.oriented_net_incidence);
    let rank_m_underlying = rank(&underlying_bundle.net_incidence);
    let rank_n_underlying = rank(&underlying_bundle.oriented_net_incidence);
    let rank_q_underlying = rank(&underlying_bundle.signless_laplacian);
    let rank_q_net = rank(&bundle.signless_net_laplacian);
    let rank_l_net = rank(&bundle.net_laplacian);

    let relation = |name: &str, pass: bool, lhs: usize, rhs: usize| {
        if pass {
            Check::pass(name)
        } else {
            Check::fail(name, format!("left rank {lhs}, right rank {rhs}"))
        }
    };

    let checks = vec![
        relation(
            "rank M± = rank of underlying incidence",
            rank_m == rank_m_underlying,
            rank_m,
            rank_m_underlying,
        ),
        relation(
            "rank N± = rank of underlying oriented incidence",
            rank_n == rank_n_underlying,
            rank_n,
            rank_n_underlying,
        ),
        relation(
            "rank M± = rank of underlying signless_laplacian",
            rank_m == rank_q_underlying,
            rank_m,
            rank_q_underlying,
        ),
        relation(
            "rank M± >= rank signless_net_laplacian",
            rank_m >= rank_q_net,
            rank_m,
            rank_q_net,
        ),
        relation(
            "rank N± >= rank net_laplacian",
            rank_n >= rank_l_net,
            rank_n,
            rank_l_net,
        ),
    ];
    Ok(CheckReport { checks })
}

/// Every rational kernel vector of `L±` balances its positive and negative
/// edge energies, and likewise for `Q±` with sums instead of differences:
/// `x ∈ ker L±` forces `Σ_{E+}(x_u - x_v)² = Σ_{E-}(x_u - x_v)²`, and
/// `x ∈ ker Q±` forces `Σ_{E+}(x_u + x_v)² = Σ_{E-}(x_u + x_v)²`.
pub fn kernel_balance_check(g: &SignedGraph) -> Result<CheckReport> {
    let l_net = crate::net_laplacian(g);
    let q_net = crate::signless_net_laplacian(g);

    let mut checks = Vec::new();
    for (name, matrix, combine) in [
        (
            "kernel of net_laplacian balances difference energies",
            &l_net,
            false,
        ),
        (
            "kernel of signless_net_laplacian balances sum energies",
            &q_net,
            true,
        ),
    ] {
        let basis = kernel_basis(matrix)?;
        let count = basis.len();
        let mut failure = None;
        for (k, x) in basis.iter().enumerate() {
            let (positive, negative) = edge_energies(g, x, combine);
            if positive != negative {
                failure = Some(format!(
                    "kernel vector {k}: positive side {positive}, negative side {negative}"
                ));
                break;
            }
        }
        let noun = if count == 1 { "vector" } else { "vectors" };
        checks.push(match failure {
            None => Check::pass(format!("{name} ({count} {noun})")),
            Some(witness) => Check::fail(name, witness),
        });
    }
    Ok(CheckReport { checks })
}

/// (Σ over positive edges, Σ over negative edges) of `(x_u ± x_v)²`, with
/// `+` when `sum` is true.
pub(crate) fn edge_energies(
    g: &SignedGraph,
    x: &[BigRational],
    sum: bool,
) -> (BigRational, BigRational) {
    let mut positive = BigRational::zero();
    let mut negative = BigRational::zero();
    for e in g.edges() {
        let term = if sum {
            &x[e.u] + &x[e.v]
        } else {
            &x[e.u] - &x[e.v]
        };
        let sq = &term * &term;
        if e.sign.is_negative() {
            negative += sq;
        } else {
            positive += sq;
        }
    }
    (positive, negative)
}

#[cfg(test)]
mod tests {
    use super::*;
    use signed_graph_core::{cycle, paw, Sign};

    #[test]
    fn paw_passes_all_verifiers() {
        let g = paw();
        let o: Orientation = "<><<".parse().unwrap();
        let bundle = build_bundle(&g, &o).unwrap();
        assert!(verify_factorizations(&bundle).unwrap().all_pass());
        assert!(verify_negation_relations(&g).unwrap().all_pass());
        assert!(verify_rank_relations(&g, &o).unwrap().all_pass());
        assert!(kernel_balance_check(&g).unwrap().all_pass());
    }

    #[test]
    fn paw_ranks_match_known_values() {
        // The underlying paw is non-bipartite, so Q(|G|) is invertible and
        // rank M± is full; rank N± is n - 1 for any connected graph.
        let g = paw();
        let o = Orientation::canonical(g.edge_count());
        let bundle = build_bundle(&g, &o).unwrap();
        assert_eq!(rank(&bundle.net_incidence), 4);
        assert_eq!(rank(&bundle.oriented_net_incidence), 3);
    }

    #[test]
    fn bipartite_all_positive_cycle_exercises_nontrivial_kernels() {
        // The all-positive 4-cycle: L± = L is singular (all-ones kernel) and
        // Q± = Q is singular (alternating kernel), so both balance checks
        // inspect at least one vector.
        let g = cycle(4, None).unwrap();
        let report = kernel_balance_check(&g).unwrap();
        assert!(report.all_pass());
        for check in &report.checks {
            assert!(check.name.contains("(1 vector)"), "{}", check.name);
        }
    }

    #[test]
    fn mixed_cycle_negation_relations() {
        let g = cycle(5, Some(&[Sign::Plus, Sign::Minus, Sign::Minus, Sign::Plus, Sign::Plus]))
            .unwrap();
        assert!(verify_negation_relations(&g).unwrap().all_pass());
    }

    #[test]
    fn failing_check_carries_a_witness() {
        let g = paw();
        let o = Orientation::canonical(4);
        let mut bundle = build_bundle(&g, &o).unwrap();
        // Corrupt one entry and make sure the factorization checker notices
        // and reports the coordinate.
        bundle
            .signless_net_laplacian
            .set(0, 0, gaussian_linalg::GaussianInt::new(99, 0));
        let report = verify_factorizations(&bundle).unwrap();
        assert!(!report.all_pass());
        let failure = report.failures().next().unwrap();
        assert!(failure.witness.as_ref().unwrap().contains("(0,0)"));
    }
}

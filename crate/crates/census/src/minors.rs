use num_bigint::BigInt;
use num_traits::{One, Zero};

use gaussian_linalg::{det, GaussianInt};
use matrix_zoo::{net_incidence, net_laplacian, oriented_net_incidence, Orientation};
use signed_graph_core::{classify_spanning_subgraph, ComponentReport, SignedGraph, SubgraphMask};

use crate::enumerate::{for_each_combination, EnumerationBudget};
use crate::{check_anchor, CensusError, Result};

/// What the component structure of a mask says the matching incidence
/// determinant must be, before the determinant is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorPrediction {
    /// The mask does not qualify; the determinant must vanish.
    Zero,
    /// The determinant must be `±2^exponent` (real) or `±2^exponent·i`
    /// (imaginary), split by the parity of the negative-component count.
    PowerOfTwo { exponent: usize, imaginary: bool },
}

/// A structural prediction for one incidence-submatrix determinant next to
/// the exactly computed value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMinorReport {
    /// `det(M±(i; S])` — or `det(M±[S])` when no row is deleted.
    pub det: GaussianInt,
    pub prediction: MinorPrediction,
    /// Whether the computed determinant fits the prediction.
    pub matches: bool,
}

/// Evaluates one column-subset determinant of the net incidence matrix and
/// checks it against what the subgraph structure dictates.
///
/// With `anchor = Some(i)` the row `i` is deleted and `s` must pick `n-1`
/// columns: the determinant is `±2^c·i^(b⁻)` when the mask's components are
/// trees/odd-unicyclic with its unique tree containing `i`, and `0`
/// otherwise. With `anchor = None`, `s` must pick `n` columns: the
/// determinant is `±2^c·i^(b⁻)` (up to unit) when every component is
/// odd-unicyclic, `0` otherwise.
pub fn incidence_minor_oracle(
    g: &SignedGraph,
    anchor: Option<usize>,
    s: &[usize],
) -> Result<IncidenceMinorReport> {
    let n = g.vertex_count();
    let expected = match anchor {
        Some(i) => {
            check_anchor(g, i)?;
            n - 1
        }
        None => n,
    };
    let mask = SubgraphMask::new(g, s.iter().copied())?;
    if mask.len() != expected {
        return Err(CensusError::WrongSubsetSize {
            expected,
            found: mask.len(),
        });
    }
    let mut sub = net_incidence(g).take_columns(mask.edges())?;
    if let Some(i) = anchor {
        sub = sub.delete(&[i], &[])?;
    }
    let determinant = det(&sub)?;
    let prediction = predict(&classify_spanning_subgraph(g, &mask), anchor);
    let matches = prediction_matches(&determinant, prediction);
    Ok(IncidenceMinorReport {
        det: determinant,
        prediction,
        matches,
    })
}

fn predict(report: &ComponentReport, anchor: Option<usize>) -> MinorPrediction {
    if !report.is_tu {
        return MinorPrediction::Zero;
    }
    let qualifies = match anchor {
        // The deleted vertex must sit in the unique tree component; a mask
        // whose tree misses the anchor contributes nothing.
        Some(i) => {
            report.has_unique_tree() && report.components[report.component_of(i)].is_tree()
        }
        // Full-width minor: every component must carry its own odd cycle.
        None => report.tree_components == 0,
    };
    if qualifies {
        MinorPrediction::PowerOfTwo {
            exponent: report.odd_unicyclic_components,
            imaginary: report.b_minus % 2 == 1,
        }
    } else {
        MinorPrediction::Zero
    }
}

fn prediction_matches(value: &GaussianInt, prediction: MinorPrediction) -> bool {
    match prediction {
        MinorPrediction::Zero => value.is_zero(),
        MinorPrediction::PowerOfTwo { exponent, imaginary } => {
            // |det|² = 4^exponent, and det lies on the real or imaginary
            // axis according to the negative-component parity.
            value.norm_sqr() == BigInt::one() << (2 * exponent)
                && if imaginary {
                    value.re().is_zero()
                } else {
                    value.im().is_zero()
                }
        }
    }
}

/// Outcome of running the incidence oracle over every subset of the right
/// size: how many subsets were tested, how many qualified structurally
/// (nonzero prediction), and the subsets whose determinant missed their
/// prediction — empty means the structure lemma held everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceSweep {
    pub tested: usize,
    pub qualifying: usize,
    pub mismatches: Vec<Vec<usize>>,
}

impl IncidenceSweep {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Runs [`incidence_minor_oracle`]'s check over **every** subset of the
/// right size, building the incidence matrix once. With fewer edges than
/// the subset size the sweep is empty.
pub fn incidence_minor_sweep(
    g: &SignedGraph,
    anchor: Option<usize>,
    budget: EnumerationBudget,
) -> Result<IncidenceSweep> {
    let n = g.vertex_count();
    let k = match anchor {
        Some(i) => {
            check_anchor(g, i)?;
            n - 1
        }
        None => n,
    };
    let m = g.edge_count();
    let mut sweep = IncidenceSweep {
        tested: 0,
        qualifying: 0,
        mismatches: Vec::new(),
    };
    if k > m {
        return Ok(sweep);
    }
    budget.admit(m, k)?;
    let mut base = net_incidence(g);
    if let Some(i) = anchor {
        base = base.delete(&[i], &[])?;
    }
    for_each_combination(m, k, |sel| {
        let sub = base.take_columns(sel).expect("enumerated indices are valid");
        let determinant = det(&sub).expect("the column subset is square");
        let mask = SubgraphMask::new(g, sel.iter().copied()).expect("enumerated indices are valid");
        let prediction = predict(&classify_spanning_subgraph(g, &mask), anchor);
        sweep.tested += 1;
        if prediction != MinorPrediction::Zero {
            sweep.qualifying += 1;
        }
        if !prediction_matches(&determinant, prediction) {
            sweep.mismatches.push(sel.to_vec());
        }
    });
    Ok(sweep)
}

/// Determinant report for a whole signed tree: with any one vertex row
/// deleted, both incidence matrices are square and their determinants are
/// units — `±1` when the tree is positive, `±i` when negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeMinorReport {
    /// `det(M±(j;))`.
    pub det_net: GaussianInt,
    /// `det(N±(j;))` under the supplied orientation.
    pub det_oriented: GaussianInt,
    /// Whether the tree has an odd number of negative edges.
    pub negative_tree: bool,
    /// Both determinants square to `+1` (positive tree) or `-1` (negative).
    pub matches: bool,
}

/// Evaluates both incidence determinants of a tree with vertex `j` deleted.
pub fn tree_minor_oracle(
    t: &SignedGraph,
    j: usize,
    orientation: &Orientation,
) -> Result<TreeMinorReport> {
    let n = t.vertex_count();
    let m = t.edge_count();
    if m + 1 != n || !t.is_connected() {
        return Err(CensusError::NotATree {
            n,
            m,
            connected: t.is_connected(),
        });
    }
    check_anchor(t, j)?;
    let det_net = det(&net_incidence(t).delete(&[j], &[])?)?;
    let det_oriented = det(&oriented_net_incidence(t, orientation)?.delete(&[j], &[])?)?;
    let negative_tree = t.negative_edge_count() % 2 == 1;
    let matches =
        is_expected_unit(&det_net, negative_tree) && is_expected_unit(&det_oriented, negative_tree);
    Ok(TreeMinorReport {
        det_net,
        det_oriented,
        negative_tree,
        matches,
    })
}

fn is_expected_unit(value: &GaussianInt, negative_tree: bool) -> bool {
    value.norm_sqr().is_one()
        && if negative_tree {
            value.re().is_zero()
        } else {
            value.im().is_zero()
        }
}

/// One term of the expansion: an `(n-1)`-subset of edge columns and the
/// minor it contributes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CauchyBinetTerm {
    pub edges: Vec<usize>,
    /// `det(N±(anchor; subset])`.
    pub minor: GaussianInt,
    /// Whether the subset forms a spanning tree.
    pub is_spanning_tree: bool,
}

/// `det(L±(i))` expanded through `L± = N± N±ᵀ`: the determinant must equal
/// the sum of the squared column-subset minors of `N±` with row `i` deleted,
/// taken over **all** `(n-1)`-subsets of columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CauchyBinetExpansion {
    pub anchor: usize,
    /// `det(L±(anchor))` computed directly.
    pub lhs: BigInt,
    /// Σ minor² over all terms. Each square is real for unit or zero minors,
    /// but the sum is kept as a Gaussian integer so that the realness is
    /// part of what gets checked rather than assumed.
    pub term_sum: GaussianInt,
    pub terms: Vec<CauchyBinetTerm>,
}

impl CauchyBinetExpansion {
    /// The expansion reproduces the determinant.
    pub fn agrees(&self) -> bool {
        self.term_sum.to_real().as_ref() == Some(&self.lhs)
    }

    /// Every nonzero term sits exactly on a spanning tree.
    pub fn nonzero_terms_are_spanning_trees(&self) -> bool {
        self.terms
            .iter()
            .all(|t| !t.minor.is_zero() == t.is_spanning_tree)
    }
}

/// Expands `det(L±(anchor))` term-by-term over all `(n-1)`-subsets of edges.
/// No pruning: zero terms are part of the expansion and are recorded too.
pub fn cauchy_binet_tree_expansion(
    g: &SignedGraph,
    anchor: usize,
    orientation: &Orientation,
    budget: EnumerationBudget,
) -> Result<CauchyBinetExpansion> {
    check_anchor(g, anchor)?;
    let n = g.vertex_count();
    let m = g.edge_count();
    budget.admit(m, n - 1)?;
    let reduced = oriented_net_incidence(g, orientation)?.delete(&[anchor], &[])?;
    let lhs = det(&net_laplacian(g).delete(&[anchor], &[anchor])?)?
        .to_real()
        .expect("a real matrix has a real determinant");
    let mut term_sum = GaussianInt::zero();
    let mut terms = Vec::new();
    for_each_combination(m, n - 1, |sel| {
        let cols = reduced
            .take_columns(sel)
            .expect("enumerated indices are valid");
        let minor = det(&cols).expect("column subset of a row-deleted matrix is square");
        term_sum = &term_sum + &(&minor * &minor);
        let mask = SubgraphMask::new(g, sel.iter().copied()).expect("enumerated indices are valid");
        let report = classify_spanning_subgraph(g, &mask);
        terms.push(CauchyBinetTerm {
            edges: sel.to_vec(),
            minor,
            is_spanning_tree: report.components.len() == 1 && report.components[0].is_tree(),
        });
    });
    Ok(CauchyBinetExpansion {
        anchor,
        lhs,
        term_sum,
        terms,
    })
}

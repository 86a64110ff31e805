//! Counting oracles and matrix evaluations for signed graphs.
//!
//! For a connected signed graph the determinant of any principal minor
//! `L±(i)` of the net Laplacian counts positive minus negative spanning
//! trees; the minor `Q±(i)` of the signless net Laplacian is a
//! `±4^c`-weighted count of spanning subgraphs with `n-1` edges made of one
//! tree (containing `i`) plus odd-unicyclic components; and `det(Q±)` itself
//! is the analogous weighted count over `n`-edge spanning subgraphs whose
//! every component is odd-unicyclic.
//!
//! This crate computes **both sides of each identity independently**: the
//! combinatorial side by explicit subgraph enumeration (with union-find
//! pruning and a hard subset budget), the matrix side by exact fraction-free
//! determinants. Nothing is shared between the two routes beyond the graph
//! itself, so agreement is evidence, not tautology.

mod enumerate;
mod minors;
mod report;
mod trees;
mod tu;

pub use enumerate::EnumerationBudget;
pub use minors::{
    cauchy_binet_tree_expansion, incidence_minor_oracle, incidence_minor_sweep, tree_minor_oracle,
    CauchyBinetExpansion, CauchyBinetTerm, IncidenceMinorReport, IncidenceSweep, MinorPrediction,
    TreeMinorReport,
};
pub use report::{census_report, CensusReport, CensusSums, ReportCheck};
pub use trees::{
    enumerate_spanning_trees, tree_balance_via_minor, tree_counts_via_corollary, TreeCensus,
    TreeCounts, TreeMinors,
};
pub use tu::{
    det_q_via_matrix, enumerate_full_tu, enumerate_rooted_tu, rooted_tu_all_anchors,
    rooted_tu_via_minor, FullTuCensus, RootedTuCensus, TuRecord,
};

/// Errors from census construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CensusError {
    /// The requested census is only meaningful on connected graphs.
    #[error("graph is disconnected, but this census requires a connected graph")]
    Disconnected,

    /// The graph has no vertices, so there is nothing to census.
    #[error("the graph has no vertices")]
    EmptyGraph,

    /// The subset space is larger than the enumeration budget. Enumeration is
    /// never truncated silently — a partial census would corrupt every
    /// downstream identity check.
    #[error("enumeration over {subsets} subsets exceeds the budget of {budget}")]
    BudgetExceeded { subsets: u128, budget: u64 },

    /// An anchor vertex index is out of range.
    #[error("anchor vertex {anchor} is out of range (graph has {n} vertices)")]
    AnchorOutOfRange { anchor: usize, n: usize },

    /// An edge-subset argument has the wrong cardinality.
    #[error("edge subset has {found} edges but this minor requires {expected}")]
    WrongSubsetSize { expected: usize, found: usize },

    /// The tree oracle was handed something that is not a tree.
    #[error("input graph is not a tree (n = {n}, m = {m}, connected = {connected})")]
    NotATree { n: usize, m: usize, connected: bool },

    /// The half-sum identities produced a non-integral or negative count.
    /// The identities guarantee this cannot happen for a valid input, so
    /// seeing it means a construction bug.
    #[error("count identity violated: {0}")]
    CountIdentityViolated(String),

    #[error(transparent)]
    Graph(#[from] signed_graph_core::GraphError),

    #[error(transparent)]
    Zoo(#[from] matrix_zoo::ZooError),

    #[error(transparent)]
    Linalg(#[from] gaussian_linalg::LinalgError),
}

pub type Result<T> = std::result::Result<T, CensusError>;

fn check_anchor(g: &signed_graph_core::SignedGraph, anchor: usize) -> Result<()> {
    if anchor >= g.vertex_count() {
        return Err(CensusError::AnchorOutOfRange {
            anchor,
            n: g.vertex_count(),
        });
    }
    Ok(())
}

fn check_connected(g: &signed_graph_core::SignedGraph) -> Result<()> {
    if !g.is_connected() {
        return Err(CensusError::Disconnected);
    }
    Ok(())
}

fn check_nonempty(g: &signed_graph_core::SignedGraph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(CensusError::EmptyGraph);
    }
    Ok(())
}

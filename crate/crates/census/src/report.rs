use serde::Serialize;
use signed_graph_core::SignedGraph;

use crate::enumerate::EnumerationBudget;
use crate::trees::TreeCensus;
use crate::tu::{enumerate_full_tu, enumerate_rooted_tu, rooted_tu_all_anchors};
use crate::{check_anchor, Result};

/// One named pass/fail line in a census report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportCheck {
    pub name: String,
    pub pass: bool,
}

/// The four census sums as exact decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusSums {
    pub rooted_even: String,
    pub rooted_odd: String,
    pub full_even: String,
    pub full_odd: String,
}

/// Everything the census computes for one graph and anchor. All integer
/// values are exact decimal strings — counts and determinants can exceed any
/// fixed-width type, and consumers should not have to guess.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n: String,
    pub m: String,
    /// 1-based, matching the text formats.
    pub anchor: String,
    pub t_plus: String,
    pub t_minus: String,
    pub det_net_minor: String,
    pub det_plain_minor: String,
    pub det_q_minor: String,
    pub det_q: String,
    pub sums: CensusSums,
    pub checks: Vec<ReportCheck>,
}

impl CensusReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Runs every census on one graph and reports both sides of each identity.
///
/// `anchor` is 0-based here; the report renders it 1-based. With
/// `all_anchors` the rooted identity is checked at every vertex (sharing a
/// single enumeration pass); the scalar fields still describe the requested
/// anchor.
pub fn census_report(
    g: &SignedGraph,
    anchor: usize,
    budget: EnumerationBudget,
    all_anchors: bool,
) -> Result<CensusReport> {
    check_anchor(g, anchor)?;
    let trees = TreeCensus::compute(g, budget)?;
    let full = enumerate_full_tu(g, budget)?;

    let mut checks = vec![
        ReportCheck {
            name: "net Laplacian minor equals t+ - t-".into(),
            pass: trees.counts.balance() == trees.minors.net[anchor],
        },
        ReportCheck {
            name: "underlying Laplacian minor equals t+ + t-".into(),
            pass: trees.counts.total() == trees.minors.plain[anchor],
        },
        ReportCheck {
            name: "corollary counts equal enumerated counts".into(),
            pass: trees.via_corollary == trees.counts,
        },
    ];

    let rooted = if all_anchors {
        let mut all = rooted_tu_all_anchors(g, budget)?;
        for census in &all {
            checks.push(ReportCheck {
                name: format!(
                    "rooted census at vertex {} equals det Q± minor",
                    census.anchor + 1
                ),
                pass: census.agrees(),
            });
        }
        all.swap_remove(anchor)
    } else {
        let census = enumerate_rooted_tu(g, anchor, budget)?;
        checks.push(ReportCheck {
            name: format!(
                "rooted census at vertex {} equals det Q± minor",
                anchor + 1
            ),
            pass: census.agrees(),
        });
        census
    };

    checks.push(ReportCheck {
        name: "full odd-unicyclic census equals det Q±".into(),
        pass: full.agrees(),
    });

    Ok(CensusReport {
        n: g.vertex_count().to_string(),
        m: g.edge_count().to_string(),
        anchor: (anchor + 1).to_string(),
        t_plus: trees.counts.t_plus.to_string(),
        t_minus: trees.counts.t_minus.to_string(),
        det_net_minor: trees.minors.net[anchor].to_string(),
        det_plain_minor: trees.minors.plain[anchor].to_string(),
        det_q_minor: rooted.minor.to_string(),
        det_q: full.det_q.to_string(),
        sums: CensusSums {
            rooted_even: rooted.sum_even.to_string(),
            rooted_odd: rooted.sum_odd.to_string(),
            full_even: full.sum_even.to_string(),
            full_odd: full.sum_odd.to_string(),
        },
        checks,
    })
}

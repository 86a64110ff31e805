use clap::{Args, ValueEnum};
use serde::Serialize;

use census::{
    cauchy_binet_tree_expansion, census_report, enumerate_full_tu, enumerate_rooted_tu,
    incidence_minor_sweep, rooted_tu_all_anchors, tree_minor_oracle, CensusReport,
    EnumerationBudget, RootedTuCensus, TreeCensus,
};
use gaussian_linalg::{format_matrix, GMatrix};
use matrix_zoo::{
    build_bundle, emit_dot_oriented, kernel_balance_check, verify_factorizations,
    verify_negation_relations, verify_rank_relations, CheckReport, Orientation,
};
use signed_graph_core::{emit_dot, SignedGraph};

use crate::input::{load_graph, InputArgs};
use crate::CliError;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn resolve_orientation(raw: Option<&str>, g: &SignedGraph) -> Result<Orientation, CliError> {
    let orientation = match raw {
        Some(s) => s.parse::<Orientation>()?,
        None => Orientation::canonical(g.edge_count()),
    };
    orientation.check_against(g)?;
    Ok(orientation)
}

/// Converts the user-facing 1-based anchor to the internal index.
fn resolve_anchor(anchor: usize, g: &SignedGraph) -> Result<usize, CliError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(CliError::Usage("the graph has no vertices".into()));
    }
    if anchor >= 1 && anchor <= n {
        Ok(anchor - 1)
    } else {
        Err(CliError::Usage(format!(
            "--anchor {anchor} is out of range: vertices are numbered 1..={n}"
        )))
    }
}

fn check_budget(budget: u64) -> Result<EnumerationBudget, CliError> {
    if budget == 0 {
        return Err(CliError::Usage("--budget must be at least 1".into()));
    }
    Ok(EnumerationBudget(budget))
}

#[derive(Args, Debug)]
pub struct MatricesArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Edge orientation for N± as one '<' or '>' per edge, '<' meaning the
    /// arrow leaves the smaller endpoint; default all '<'
    #[arg(long, value_name = "STRING")]
    pub orientation: Option<String>,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Serialize)]
struct MatrixJson {
    name: String,
    rows: Vec<Vec<String>>,
}

fn matrix_rows(m: &GMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect()
}

pub fn matrices(args: &MatricesArgs) -> Result<bool, CliError> {
    let g = load_graph(&args.input)?;
    let orientation = resolve_orientation(args.orientation.as_deref(), &g)?;
    let bundle = build_bundle(&g, &orientation)?;
    match args.format {
        Format::Text => {
            for (idx, (label, matrix)) in bundle.labeled().iter().enumerate() {
                if idx > 0 {
                    println!();
                }
                println!("{label} =");
                print!("{}", format_matrix(matrix));
            }
        }
        Format::Json => {
            let rendered: Vec<MatrixJson> = bundle
                .labeled()
                .iter()
                .map(|(label, matrix)| MatrixJson {
                    name: (*label).to_string(),
                    rows: matrix_rows(matrix),
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rendered)?);
        }
    }
    Ok(true)
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Anchor vertex (1-based) for the rooted identities
    #[arg(long, value_name = "I", default_value_t = 1)]
    pub anchor: usize,

    /// Check the rooted census at every vertex, not just --anchor
    #[arg(long)]
    pub all_anchors: bool,

    /// Largest number of edge subsets a single enumeration may visit
    #[arg(long, value_name = "N", default_value_t = 10_000_000)]
    pub budget: u64,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

fn print_census_text(report: &CensusReport) {
    println!("n: {}", report.n);
    println!("m: {}", report.m);
    println!("anchor: {}", report.anchor);
    println!("t_plus: {}", report.t_plus);
    println!("t_minus: {}", report.t_minus);
    println!("det_net_minor: {}", report.det_net_minor);
    println!("det_plain_minor: {}", report.det_plain_minor);
    println!("det_q_minor: {}", report.det_q_minor);
    println!("det_q: {}", report.det_q);
    println!("rooted_even: {}", report.sums.rooted_even);
    println!("rooted_odd: {}", report.sums.rooted_odd);
    println!("full_even: {}", report.sums.full_even);
    println!("full_odd: {}", report.sums.full_odd);
    for check in &report.checks {
        let tag = if check.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {}", check.name);
    }
}

pub fn census(args: &CensusArgs) -> Result<bool, CliError> {
    let budget = check_budget(args.budget)?;
    let g = load_graph(&args.input)?;
    let anchor = resolve_anchor(args.anchor, &g)?;
    let report = census_report(&g, anchor, budget, args.all_anchors)?;
    match args.format {
        Format::Text => print_census_text(&report),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
    }
    Ok(report.all_pass())
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Anchor vertex (1-based) for the rooted identities
    #[arg(long, value_name = "I", default_value_t = 1)]
    pub anchor: usize,

    /// Run every anchored check at every vertex, not just --anchor
    #[arg(long)]
    pub all_anchors: bool,

    /// Edge orientation for N± as one '<' or '>' per edge; default all '<'
    #[arg(long, value_name = "STRING")]
    pub orientation: Option<String>,

    /// Largest number of edge subsets a single enumeration may visit
    #[arg(long, value_name = "N", default_value_t = 10_000_000)]
    pub budget: u64,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Serialize)]
struct CheckLine {
    name: String,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

impl CheckLine {
    fn pass(name: impl Into<String>) -> Self {
        CheckLine { name: name.into(), status: "pass", detail: None }
    }

    fn fail(name: impl Into<String>, detail: Option<String>) -> Self {
        CheckLine { name: name.into(), status: "fail", detail }
    }

    fn skip(name: impl Into<String>, reason: &str) -> Self {
        CheckLine { name: name.into(), status: "skip", detail: Some(reason.to_string()) }
    }

    fn from_flag(name: impl Into<String>, pass: bool, witness: impl FnOnce() -> String) -> Self {
        if pass {
            CheckLine::pass(name)
        } else {
            CheckLine::fail(name, Some(witness()))
        }
    }
}

fn extend_from_report(lines: &mut Vec<CheckLine>, report: CheckReport) {
    for check in report.checks {
        if check.pass {
            lines.push(CheckLine::pass(check.name));
        } else {
            lines.push(CheckLine::fail(check.name, check.witness));
        }
    }
}

#[derive(Serialize)]
struct VerifyJson {
    n: usize,
    m: usize,
    passed: usize,
    failed: usize,
    skipped: usize,
    checks: Vec<CheckLine>,
}

fn count_noun(count: usize, noun: &str) -> String {
    if count == 1 {
        format!("{count} {noun}")
    } else {
        format!("{count} {noun}s")
    }
}

fn push_rooted_line(lines: &mut Vec<CheckLine>, rooted: &RootedTuCensus) {
    let v = rooted.anchor + 1;
    lines.push(CheckLine::from_flag(
        format!("rooted odd-unicyclic census at vertex {v} matches det Q±({v})"),
        rooted.agrees(),
        || format!("census value {} vs minor {}", rooted.combinatorial_value(), rooted.minor),
    ));
}

pub fn verify(args: &VerifyArgs) -> Result<bool, CliError> {
    let budget = check_budget(args.budget)?;
    let g = load_graph(&args.input)?;
    let n = g.vertex_count();
    let orientation = resolve_orientation(args.orientation.as_deref(), &g)?;
    let mut lines = Vec::new();

    let bundle = build_bundle(&g, &orientation)?;
    extend_from_report(&mut lines, verify_factorizations(&bundle)?);
    extend_from_report(&mut lines, verify_negation_relations(&g)?);
    extend_from_report(&mut lines, verify_rank_relations(&g, &orientation)?);
    extend_from_report(&mut lines, kernel_balance_check(&g)?);

    let anchors: Vec<usize> = if n == 0 {
        Vec::new()
    } else if args.all_anchors {
        (0..n).collect()
    } else {
        vec![resolve_anchor(args.anchor, &g)?]
    };

    // The spanning-tree and rooted censuses are stated for connected graphs;
    // on anything else they are reported as skipped rather than failed.
    if n > 0 && g.is_connected() {
        let trees = TreeCensus::compute(&g, budget)?;
        lines.push(CheckLine::from_flag(
            "spanning-tree census matches the net Laplacian minor",
            trees.counts.balance() == trees.minors.net[0],
            || {
                format!(
                    "census balance {} vs minor {}",
                    trees.counts.balance(),
                    trees.minors.net[0]
                )
            },
        ));
        lines.push(CheckLine::from_flag(
            "spanning-tree total matches the underlying Laplacian minor",
            trees.counts.total() == trees.minors.plain[0],
            || {
                format!(
                    "census total {} vs minor {}",
                    trees.counts.total(),
                    trees.minors.plain[0]
                )
            },
        ));
        lines.push(CheckLine::from_flag(
            "corollary tree counts equal the enumerated counts",
            trees.via_corollary == trees.counts,
            || {
                format!(
                    "corollary ({}, {}) vs census ({}, {})",
                    trees.via_corollary.t_plus,
                    trees.via_corollary.t_minus,
                    trees.counts.t_plus,
                    trees.counts.t_minus
                )
            },
        ));
        if args.all_anchors {
            for rooted in rooted_tu_all_anchors(&g, budget)? {
                push_rooted_line(&mut lines, &rooted);
            }
        } else {
            let rooted = enumerate_rooted_tu(&g, anchors[0], budget)?;
            push_rooted_line(&mut lines, &rooted);
        }
    } else {
        let reason = if n == 0 {
            "the graph has no vertices"
        } else {
            "the graph is disconnected; these identities assume a connected graph"
        };
        for name in [
            "spanning-tree census matches the net Laplacian minor",
            "spanning-tree total matches the underlying Laplacian minor",
            "corollary tree counts equal the enumerated counts",
            "rooted odd-unicyclic census matches the det Q± minor",
        ] {
            lines.push(CheckLine::skip(name, reason));
        }
    }

    let full = enumerate_full_tu(&g, budget)?;
    lines.push(CheckLine::from_flag(
        format!(
            "full odd-unicyclic census matches det Q± ({})",
            count_noun(full.records.len(), "mask")
        ),
        full.agrees(),
        || format!("census value {} vs det {}", full.combinatorial_value(), full.det_q),
    ));

    for &i in &anchors {
        let expansion = cauchy_binet_tree_expansion(&g, i, &orientation, budget)?;
        let v = i + 1;
        lines.push(CheckLine::from_flag(
            format!("Cauchy–Binet expansion of det L±({v}) is exact"),
            expansion.agrees(),
            || format!("minor {} vs term sum {}", expansion.lhs, expansion.term_sum),
        ));
        lines.push(CheckLine::from_flag(
            format!("nonzero Cauchy–Binet terms at vertex {v} are spanning trees"),
            expansion.nonzero_terms_are_spanning_trees(),
            || "a nonzero squared minor occurred at a non-tree subset".to_string(),
        ));
    }

    for &i in &anchors {
        let sweep = incidence_minor_sweep(&g, Some(i), budget)?;
        lines.push(CheckLine::from_flag(
            format!(
                "incidence minors at vertex {} match their structure ({})",
                i + 1,
                count_noun(sweep.tested, "subset")
            ),
            sweep.all_match(),
            || {
                format!(
                    "{} subset(s) missed the prediction, first: {:?}",
                    sweep.mismatches.len(),
                    sweep.mismatches.first()
                )
            },
        ));
    }
    let sweep = incidence_minor_sweep(&g, None, budget)?;
    lines.push(CheckLine::from_flag(
        format!(
            "full-width incidence minors match their structure ({})",
            count_noun(sweep.tested, "subset")
        ),
        sweep.all_match(),
        || {
            format!(
                "{} subset(s) missed the prediction, first: {:?}",
                sweep.mismatches.len(),
                sweep.mismatches.first()
            )
        },
    ));

    if n > 0 && g.edge_count() + 1 == n && g.is_connected() {
        let mut failure = None;
        for j in 0..n {
            let report = tree_minor_oracle(&g, j, &orientation)?;
            if !report.matches {
                failure = Some(format!(
                    "row {} deleted: det M± = {}, det N± = {}, negative tree: {}",
                    j + 1,
                    report.det_net,
                    report.det_oriented,
                    report.negative_tree
                ));
                break;
            }
        }
        let name = format!(
            "tree incidence determinants are the expected units (all {})",
            count_noun(n, "row")
        );
        lines.push(match failure {
            None => CheckLine::pass(name),
            Some(witness) => CheckLine::fail(name, Some(witness)),
        });
    } else {
        lines.push(CheckLine::skip(
            "tree incidence determinants are the expected units",
            "the input is not a tree",
        ));
    }

    let passed = lines.iter().filter(|l| l.status == "pass").count();
    let failed = lines.iter().filter(|l| l.status == "fail").count();
    let skipped = lines.iter().filter(|l| l.status == "skip").count();
    match args.format {
        Format::Text => {
            for line in &lines {
                match (line.status, &line.detail) {
                    ("pass", _) => println!("[PASS] {}", line.name),
                    ("fail", Some(d)) => println!("[FAIL] {} — {d}", line.name),
                    ("fail", None) => println!("[FAIL] {}", line.name),
                    (_, detail) => {
                        println!("[SKIP] {} — {}", line.name, detail.as_deref().unwrap_or(""))
                    }
                }
            }
            println!();
            println!("{} checks: {passed} passed, {failed} failed, {skipped} skipped", lines.len());
        }
        Format::Json => {
            let report =
                VerifyJson { n, m: g.edge_count(), passed, failed, skipped, checks: lines };
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
    }
    Ok(failed == 0)
}

#[derive(Args, Debug)]
pub struct DotArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Orient the edges ('<'/'>' per edge) and emit a digraph instead
    #[arg(long, value_name = "STRING")]
    pub orientation: Option<String>,
}

pub fn dot(args: &DotArgs) -> Result<bool, CliError> {
    let g = load_graph(&args.input)?;
    match args.orientation.as_deref() {
        Some(raw) => {
            let orientation: Orientation = raw.parse()?;
            print!("{}", emit_dot_oriented(&g, &orientation)?);
        }
        None => print!("{}", emit_dot(&g)),
    }
    Ok(true)
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Edge, GraphError, Result, Sign, SignedGraph};

/// Parameter block for [`generate`], mirroring the CLI's `--generate` family.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Path { n: usize, signs: Option<Vec<Sign>> },
    Cycle { n: usize, signs: Option<Vec<Sign>> },
    Complete { n: usize, signs: Option<Vec<Sign>> },
    Paw,
    ExtendedPaw,
    Random { n: usize, edge_prob: f64, neg_prob: f64, seed: u64 },
}

/// Dispatches to the family generators below.
pub fn generate(spec: &GeneratorSpec) -> Result<SignedGraph> {
    match spec {
        GeneratorSpec::Path { n, signs } => path(*n, signs.as_deref()),
        GeneratorSpec::Cycle { n, signs } => cycle(*n, signs.as_deref()),
        GeneratorSpec::Complete { n, signs } => complete(*n, signs.as_deref()),
        GeneratorSpec::Paw => Ok(paw()),
        GeneratorSpec::ExtendedPaw => Ok(extended_paw()),
        GeneratorSpec::Random { n, edge_prob, neg_prob, seed } => {
            random_signed_graph(*n, *edge_prob, *neg_prob, *seed)
        }
    }
}

fn resolve_signs(expected: usize, signs: Option<&[Sign]>, what: &str) -> Result<Vec<Sign>> {
    match signs {
        None => Ok(vec![Sign::Plus; expected]),
        Some(s) if s.len() == expected => Ok(s.to_vec()),
        Some(s) => Err(GraphError::InvalidParameter(format!(
            "{what} needs {expected} signs, got {}",
            s.len()
        ))),
    }
}

/// Path on vertices `1..=n` with edges `{k, k+1}`; `n - 1` signs, default all
/// positive.
pub fn path(n: usize, signs: Option<&[Sign]>) -> Result<SignedGraph> {
    if n < 1 {
        return Err(GraphError::InvalidParameter(
            "path needs at least one vertex".into(),
        ));
    }
    let signs = resolve_signs(n - 1, signs, "a path")?;
    let edges = (0..n - 1)
        .map(|k| Edge::new(k, k + 1, signs[k]))
        .collect::<Result<Vec<_>>>()?;
    SignedGraph::new(n, edges)
}

/// Cycle on vertices `1..=n`: path edges followed by the closing edge
/// `{1, n}`; `n` signs, default all positive.
pub fn cycle(n: usize, signs: Option<&[Sign]>) -> Result<SignedGraph> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(
            "a cycle needs at least three vertices".into(),
        ));
    }
    let signs = resolve_signs(n, signs, "a cycle")?;
    let mut edges = (0..n - 1)
        .map(|k| Edge::new(k, k + 1, signs[k]))
        .collect::<Result<Vec<_>>>()?;
    edges.push(Edge::new(0, n - 1, signs[n - 1])?);
    SignedGraph::new(n, edges)
}

/// Complete graph with edges in lexicographic pair order; `n*(n-1)/2` signs,
/// default all positive.
pub fn complete(n: usize, signs: Option<&[Sign]>) -> Result<SignedGraph> {
    if n < 1 {
        return Err(GraphError::InvalidParameter(
            "a complete graph needs at least one vertex".into(),
        ));
    }
    let m = n * (n - 1) / 2;
    let signs = resolve_signs(m, signs, "a complete graph")?;
    let mut edges = Vec::with_capacity(m);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            edges.push(Edge::new(u, v, signs[k])?);
            k += 1;
        }
    }
    SignedGraph::new(n, edges)
}

/// Triangle on vertices {2,3,4} with a pendant vertex 1; signs `+ - - +` on
/// edges (1,2), (2,3), (3,4), (2,4).
pub fn paw() -> SignedGraph {
    let edges = vec![
        Edge::new(0, 1, Sign::Plus).unwrap(),
        Edge::new(1, 2, Sign::Minus).unwrap(),
        Edge::new(2, 3, Sign::Minus).unwrap(),
        Edge::new(1, 3, Sign::Plus).unwrap(),
    ];
    SignedGraph::new(4, edges).unwrap()
}

/// Triangle on vertices {3,4,5} reached by the path 1-2-3; signs `+ - + - +`
/// on edges (1,2), (2,3), (3,4), (4,5), (3,5).
pub fn extended_paw() -> SignedGraph {
    let edges = vec![
        Edge::new(0, 1, Sign::Plus).unwrap(),
        Edge::new(1, 2, Sign::Minus).unwrap(),
        Edge::new(2, 3, Sign::Plus).unwrap(),
        Edge::new(3, 4, Sign::Minus).unwrap(),
        Edge::new(2, 4, Sign::Plus).unwrap(),
    ];
    SignedGraph::new(5, edges).unwrap()
}

/// Erdős–Rényi-style signed graph: each vertex pair (lexicographic order) is
/// an edge with probability `edge_prob`, and each edge is negative with
/// probability `neg_prob`. Fully determined by the seed.
pub fn random_signed_graph(n: usize, edge_prob: f64, neg_prob: f64, seed: u64) -> Result<SignedGraph> {
    if n < 1 {
        return Err(GraphError::InvalidParameter(
            "a random graph needs at least one vertex".into(),
        ));
    }
    for (name, p) in [("edge probability", edge_prob), ("negative-sign probability", neg_prob)] {
        if !(0.0..=1.0).contains(&p) || p.is_nan() {
            return Err(GraphError::InvalidParameter(format!(
                "{name} {p} is not in [0, 1]"
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                let sign = if rng.gen_bool(neg_prob) { Sign::Minus } else { Sign::Plus };
                edges.push(Edge::new(u, v, sign)?);
            }
        }
    }
    SignedGraph::new(n, edges)
}

use crate::{Edge, GraphError, Result, Sign, SignedGraph};

/// Parses the whitespace-separated edge-list format:
///
/// ```text
/// # comment lines start with '#'; blank lines are ignored
/// n m
/// u v s        (m such lines; 1-based endpoints; s in {+, -, 1, -1})
/// ```
pub fn parse_edge_list(text: &str) -> Result<SignedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_no, header) = lines.next().ok_or(GraphError::MissingHeader)?;
    let malformed = |line: usize, content: &str, reason: &str| GraphError::MalformedLine {
        line,
        content: content.to_string(),
        reason: reason.to_string(),
    };

    let mut header_fields = header.split_whitespace();
    let n: usize = header_fields
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| malformed(header_no, header, "expected header 'n m'"))?;
    let m: usize = header_fields
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| malformed(header_no, header, "expected header 'n m'"))?;
    if header_fields.next().is_some() {
        return Err(malformed(header_no, header, "trailing fields after 'n m'"));
    }

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(GraphError::EdgeCountMismatch {
                expected: m,
                found: m + 1,
            });
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u_tok, v_tok, s_tok] = fields.as_slice() else {
            return Err(malformed(line_no, line, "expected 'u v s'"));
        };
        let parse_vertex = |tok: &str| -> Result<usize> {
            let raw: usize = tok
                .parse()
                .map_err(|_| malformed(line_no, line, "endpoint is not a positive integer"))?;
            if raw < 1 || raw > n {
                return Err(GraphError::VertexOutOfRange { vertex: raw, n });
            }
            Ok(raw - 1)
        };
        let u = parse_vertex(u_tok)?;
        let v = parse_vertex(v_tok)?;
        let sign = Sign::from_token(s_tok)?;
        edges.push(Edge::new(u, v, sign)?);
    }
    if edges.len() != m {
        return Err(GraphError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    SignedGraph::new(n, edges)
}

/// Serializes a graph back to the edge-list format. Parsing the output
/// reproduces the graph exactly (including edge order).
pub fn to_edge_list(g: &SignedGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u + 1, e.v + 1, e.sign));
    }
    out
}

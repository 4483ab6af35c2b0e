//! Graph ingestion shared by the subcommands: the constructor expression
//! language, one graph6 line, or an edge-list file (first line the order,
//! then one `u v` pair per line, 0-indexed).

use std::path::PathBuf;

use clap::Args;
use qdham_core::expr::graph_from_expr;
use qdham_core::graph::Graph;
use qdham_core::graph6::parse_graph6;
use qdham_core::Error;

use crate::CliError;

#[derive(Args, Debug)]
pub struct InputArgs {
    /// constructor expression, e.g. "join(kn(4), e(4))"
    #[arg(long, value_name = "DSL")]
    pub expr: Option<String>,

    /// one graph6 line
    #[arg(long, value_name = "LINE")]
    pub g6: Option<String>,

    /// edge-list file: first line n, then one "u v" pair per line
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
}

pub fn parse_edge_list(text: &str) -> Result<Graph, Error> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let first = lines
        .next()
        .ok_or_else(|| Error::InvalidParameter("empty edge-list file".into()))?;
    let n: usize = first.trim().parse().map_err(|_| {
        Error::InvalidParameter(format!("first line must be the vertex count, got '{first}'"))
    })?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::InvalidParameter(format!(
                "edge line must be 'u v', got '{line}'"
            )));
        };
        let u: usize = a
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad vertex '{a}'")))?;
        let v: usize = b
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad vertex '{b}'")))?;
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

/// Load the graph from exactly one of the three sources and enforce the
/// optional order limit.
pub fn load_graph(input: &InputArgs, limit_n: Option<usize>) -> Result<Graph, CliError> {
    let sources = [
        input.expr.is_some(),
        input.g6.is_some(),
        input.edges.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if sources != 1 {
        return Err(CliError::input(
            "exactly one of --expr, --g6, --edges is required",
        ));
    }
    let g = if let Some(expr) = &input.expr {
        graph_from_expr(expr).map_err(CliError::from_core)?
    } else if let Some(line) = &input.g6 {
        parse_graph6(line.trim()).map_err(CliError::from_core)?
    } else {
        let path = input.edges.as_ref().expect("one source present");
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(&format!("cannot read {}: {e}", path.display())))?;
        parse_edge_list(&text).map_err(CliError::from_core)?
    };
    if let Some(limit) = limit_n {
        if g.n() > limit {
            return Err(CliError::from_core(Error::SizeLimit {
                what: "requested --limit-n",
                n: g.n(),
                limit,
            }));
        }
    }
    Ok(g)
}

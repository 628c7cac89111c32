//! Plain-text edge lists: a header line `n m` followed by `m` lines `u v`.
//! Indices are 0-based, tokens whitespace-separated, and `#` starts a comment.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;

    let mut pairs = Vec::with_capacity(m);
    for (line, body) in lines {
        if pairs.len() == m {
            return Err(Error::Parse {
                line,
                msg: format!("more than the declared {m} edges"),
            });
        }
        pairs.push(parse_pair(line, body)?);
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("declared {m} edges but found {}", pairs.len()),
        });
    }
    Graph::from_edge_list(n, pairs.into_iter().map(|[u, v]| (u, v)))
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2]> {
    let err = |msg: String| Error::Parse { line, msg };
    let tokens: Vec<&str> = body.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(err(format!("expected two integers, got `{body}`")));
    }
    let mut out = [0; 2];
    for (slot, tok) in out.iter_mut().zip(&tokens) {
        *slot = tok
            .parse()
            .map_err(|_| err(format!("`{tok}` is not a nonnegative integer")))?;
    }
    Ok(out)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

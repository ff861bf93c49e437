//! Edge-list text ingestion and emission.
//!
//! One edge per line, two whitespace-separated non-negative integer tokens.
//! Lines starting with `#` and blank lines are ignored. External ids are
//! remapped to dense indices in first-seen order.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph read from an edge list, together with its external ids.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// `external_ids[v]` is the id that internal vertex `v` had in the file.
    pub external_ids: Vec<u64>,
}

pub fn load_edge_list<R: BufRead>(reader: R) -> Result<LoadedGraph> {
    let mut index: HashMap<u64, usize> = HashMap::new();
    let mut external_ids = Vec::new();
    let mut edges = Vec::new();

    let mut intern = |id: u64| -> usize {
        *index.entry(id).or_insert_with(|| {
            external_ids.push(id);
            external_ids.len() - 1
        })
    };

    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected two tokens, got {:?}", line),
                })
            }
        };
        let parse = |t: &str| {
            t.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno + 1,
                message: format!("invalid vertex id {t:?}"),
            })
        };
        let (a, b) = (parse(a)?, parse(b)?);
        let u = intern(a);
        let v = intern(b);
        edges.push((u, v));
    }

    let graph = Graph::from_edges(external_ids.len(), edges);
    Ok(LoadedGraph {
        graph,
        external_ids,
    })
}

pub fn load_edge_list_file(path: impl AsRef<std::path::Path>) -> Result<LoadedGraph> {
    let file = std::fs::File::open(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    load_edge_list(std::io::BufReader::new(file))
}

/// Writes `g` as an edge list using internal indices, each edge once with
/// the smaller endpoint first.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    writeln!(out, "# n={} m={}", g.vertex_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(s: &str) -> Result<LoadedGraph> {
        load_edge_list(s.as_bytes())
    }

    #[test]
    fn simple_path() {
        let g = load("1 2\n2 3\n").unwrap();
        assert_eq!(g.graph.vertex_count(), 3);
        assert_eq!(g.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.external_ids, vec![1, 2, 3]);
    }

    #[test]
    fn loops_and_duplicates_dropped() {
        let g = load("1 2\n2 1\n1 1\n").unwrap();
        assert_eq!(g.graph.vertex_count(), 2);
        assert_eq!(g.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn comments_and_blanks() {
        let g = load("# header\n\n  10\t20  \n# x\n20 30\n").unwrap();
        assert_eq!(g.graph.edge_count(), 2);
        assert_eq!(g.external_ids, vec![10, 20, 30]);
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let g = load("").unwrap();
        assert_eq!(g.graph.vertex_count(), 0);
        assert_eq!(g.graph.edge_count(), 0);
    }

    #[test]
    fn malformed_lines_report_line_number() {
        assert_eq!(
            load("1 2\n3 x\n").unwrap_err(),
            Error::Parse {
                line: 2,
                message: "invalid vertex id \"x\"".into()
            }
        );
        assert!(matches!(load("1 2 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(load("\n\n7\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(load("-1 2\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn write_then_load_preserves_edges() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]);
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let back = load_edge_list(buf.as_slice()).unwrap();
        assert_eq!(back.external_ids, vec![0, 1, 3, 2]);
        assert_eq!(back.graph.edge_count(), 4);
    }
}

//! Edge-list files.
//!
//! Numeric format: UTF-8 text, one `src dst` pair of decimal node indices per
//! line. Lines starting with `#` are comments, except `#nodes=N`, which fixes
//! the node count so isolated nodes survive a round trip. Without that header
//! the node count is one past the largest index seen. Duplicate edges,
//! self-loops and indices at or above the declared count are rejected with
//! the offending line number.
//!
//! Named format (for real corpora): each line is `src_name dst_name`, or a
//! single name declaring a possibly isolated node. Names map to dense ids in
//! order of first appearance; the mapping is returned as a [`NameTable`].

use std::collections::{HashMap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Insertion, NodeId};

const NODES_HEADER: &str = "#nodes=";

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Digraph> {
    parse_edge_list(BufReader::new(File::open(path)?))
}

pub fn parse_edge_list<R: Read>(reader: R) -> Result<Digraph> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, NodeId, NodeId)> = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let lineno = i + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        if let Some(rest) = text.strip_prefix(NODES_HEADER) {
            if declared.is_some() {
                return Err(parse_err(lineno, "repeated #nodes header"));
            }
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| parse_err(lineno, format!("bad node count {:?}", rest.trim())))?;
            declared = Some((n, lineno));
            continue;
        }
        if text.starts_with('#') {
            continue;
        }
        let mut fields = text.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_err(lineno, format!("expected \"src dst\", got {text:?}")));
        };
        let src = parse_index(a, lineno)?;
        let dst = parse_index(b, lineno)?;
        edges.push((lineno, src, dst));
    }

    let node_count = match declared {
        Some((n, _)) => n,
        None => edges.iter().map(|&(_, s, d)| s.max(d) + 1).max().unwrap_or(0),
    };
    let mut g = Digraph::with_capacity(node_count, edges.len());
    for (lineno, src, dst) in edges {
        if src >= node_count || dst >= node_count {
            return Err(parse_err(
                lineno,
                format!(
                    "endpoint {} is not below the declared node count {node_count}",
                    src.max(dst)
                ),
            ));
        }
        match g.add_edge(src, dst)? {
            Insertion::Added => {}
            Insertion::SelfLoop => return Err(parse_err(lineno, format!("self-loop on node {src}"))),
            Insertion::Duplicate => return Err(parse_err(lineno, format!("duplicate edge {src} {dst}"))),
        }
    }
    Ok(g)
}

fn parse_index(field: &str, lineno: usize) -> Result<NodeId> {
    field
        .parse::<NodeId>()
        .map_err(|_| parse_err(lineno, format!("bad node index {field:?}")))
}

pub fn write_edge_list(g: &Digraph, path: impl AsRef<Path>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_edge_list_to(g, &mut w)?;
    w.flush()?;
    Ok(())
}

/// Writes the `#nodes=N` header followed by the edges in insertion order.
pub fn write_edge_list_to<W: Write>(g: &Digraph, w: &mut W) -> Result<()> {
    writeln!(w, "{NODES_HEADER}{}", g.node_count())?;
    for &(s, d) in g.edges() {
        writeln!(w, "{s} {d}")?;
    }
    Ok(())
}

/// Node names of a graph read from a named edge list, indexed by node id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NameTable {
    names: Vec<String>,
    ids: HashMap<String, NodeId>,
}

impl NameTable {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, id: NodeId) -> Option<&str> {
        self.names.get(id).map(String::as_str)
    }

    pub fn id(&self, name: &str) -> Option<NodeId> {
        self.ids.get(name).copied()
    }

    fn intern(&mut self, name: &str) -> NodeId {
        if let Some(&id) = self.ids.get(name) {
            return id;
        }
        let id = self.names.len();
        self.names.push(name.to_owned());
        self.ids.insert(name.to_owned(), id);
        id
    }
}

pub fn read_named_edge_list(path: impl AsRef<Path>) -> Result<(Digraph, NameTable)> {
    parse_named_edge_list(BufReader::new(File::open(path)?))
}

pub fn parse_named_edge_list<R: Read>(reader: R) -> Result<(Digraph, NameTable)> {
    let mut table = NameTable::default();
    let mut edges = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let lineno = i + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = text.split_whitespace().collect();
        match fields.as_slice() {
            [one] => {
                table.intern(one);
            }
            [a, b] => {
                let s = table.intern(a);
                let d = table.intern(b);
                edges.push((lineno, s, d));
            }
            _ => return Err(parse_err(lineno, format!("expected one or two names, got {text:?}"))),
        }
    }
    let mut g = Digraph::with_capacity(table.len(), edges.len());
    for (lineno, s, d) in edges {
        match g.add_edge(s, d)? {
            Insertion::Added => {}
            Insertion::SelfLoop => return Err(parse_err(lineno, format!("self-loop on {:?}", table.names[s]))),
            Insertion::Duplicate => return Err(parse_err(lineno, "duplicate edge")),
        }
    }
    Ok((g, table))
}

/// Ids (in `second`) of nodes whose names do not occur in `first`, ascending.
pub fn new_node_ids(first: &NameTable, second: &NameTable) -> Vec<NodeId> {
    let old: HashSet<&str> = first.names.iter().map(String::as_str).collect();
    second
        .names
        .iter()
        .enumerate()
        .filter(|(_, n)| !old.contains(n.as_str()))
        .map(|(id, _)| id)
        .collect()
}

/// One node id per line; blank lines and `#` comments are skipped.
pub fn read_node_list(path: impl AsRef<Path>) -> Result<Vec<NodeId>> {
    parse_node_list(BufReader::new(File::open(path)?))
}

pub fn parse_node_list<R: Read>(reader: R) -> Result<Vec<NodeId>> {
    let mut out = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        out.push(parse_index(text, i + 1)?);
    }
    Ok(out)
}

pub fn write_node_list(nodes: &[NodeId], path: impl AsRef<Path>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    for n in nodes {
        writeln!(w, "{n}")?;
    }
    w.flush()?;
    Ok(())
}

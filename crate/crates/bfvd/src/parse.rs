//! Line-oriented instance files.
//!
//! ```text
//! # comment
//! p bfvd <n> <m>            or    p wbdd <n> <m> <r> <k>
//! e <u> <v>                 with 1 <= u < v <= n
//! param <i> <j> <k>         (bfvd only, required)
//! w <v> <weight>            (wbdd only, optional, default 0)
//! ```
//!
//! Writers emit vertices and edges in ascending order and renumber sparse
//! vertex ids to `1..=n` order-preservingly, so canonical documents
//! round-trip bit-exactly.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::instance::{BddInstance, BfvdInstance, ParsedInstance, WbddInstance};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_uint(tok: &str, line: usize, what: &str) -> Result<u64> {
    let val: i64 = tok
        .parse()
        .map_err(|_| err(line, format!("malformed {what}: {tok:?}")))?;
    if val < 0 {
        return Err(err(line, format!("negative {what}: {val}")));
    }
    Ok(val as u64)
}

pub fn parse_instance(text: &str) -> Result<ParsedInstance> {
    enum Header {
        Bfvd,
        Wbdd { r: u32, k: i64 },
    }
    let mut header: Option<(Header, usize, usize)> = None; // kind, n, m
    let mut graph = Graph::new();
    let mut edges_seen = 0usize;
    let mut params: Option<(usize, usize, usize)> = None;
    let mut weights: BTreeMap<VertexId, u32> = BTreeMap::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(err(line, "duplicate header"));
                }
                match toks.get(1) {
                    Some(&"bfvd") if toks.len() == 4 => {
                        let n = parse_uint(toks[2], line, "vertex count")? as usize;
                        let m = parse_uint(toks[3], line, "edge count")? as usize;
                        header = Some((Header::Bfvd, n, m));
                    }
                    Some(&"wbdd") if toks.len() == 6 => {
                        let n = parse_uint(toks[2], line, "vertex count")? as usize;
                        let m = parse_uint(toks[3], line, "edge count")? as usize;
                        let r = parse_uint(toks[4], line, "parameter r")? as u32;
                        let k = parse_uint(toks[5], line, "parameter k")? as i64;
                        header = Some((Header::Wbdd { r, k }, n, m));
                    }
                    _ => return Err(err(line, format!("malformed header: {trimmed:?}"))),
                }
                let n = header.as_ref().unwrap().1;
                for v in 1..=n {
                    graph.add_vertex(v as VertexId);
                }
            }
            "e" => {
                let (_, n, _) = header
                    .as_ref()
                    .ok_or_else(|| err(line, "edge before header"))?;
                if toks.len() != 3 {
                    return Err(err(line, format!("malformed edge line: {trimmed:?}")));
                }
                let u = parse_uint(toks[1], line, "endpoint")? as usize;
                let v = parse_uint(toks[2], line, "endpoint")? as usize;
                if u == v {
                    return Err(err(line, format!("self-loop at vertex {u}")));
                }
                if u == 0 || v == 0 || u > *n || v > *n {
                    return Err(err(line, format!("endpoint out of range 1..={n}")));
                }
                if u >= v {
                    return Err(err(line, "edge endpoints must satisfy u < v"));
                }
                if graph.has_edge(u as VertexId, v as VertexId) {
                    return Err(err(line, format!("duplicate edge {u} {v}")));
                }
                graph.add_edge(u as VertexId, v as VertexId);
                edges_seen += 1;
            }
            "param" => {
                let (kind, _, _) = header
                    .as_ref()
                    .ok_or_else(|| err(line, "param before header"))?;
                if !matches!(kind, Header::Bfvd) {
                    return Err(err(line, "param line is only valid for bfvd instances"));
                }
                if params.is_some() {
                    return Err(err(line, "duplicate param line"));
                }
                if toks.len() != 4 {
                    return Err(err(line, format!("malformed param line: {trimmed:?}")));
                }
                let i = parse_uint(toks[1], line, "parameter i")? as usize;
                let j = parse_uint(toks[2], line, "parameter j")? as usize;
                let k = parse_uint(toks[3], line, "parameter k")? as usize;
                if i < 1 {
                    return Err(err(line, "parameter i must be at least 1"));
                }
                if i > j {
                    return Err(err(line, format!("i > j ({i} > {j})")));
                }
                params = Some((i, j, k));
            }
            "w" => {
                let (kind, n, _) = header
                    .as_ref()
                    .ok_or_else(|| err(line, "weight before header"))?;
                if !matches!(kind, Header::Wbdd { .. }) {
                    return Err(err(line, "weight line is only valid for wbdd instances"));
                }
                if toks.len() != 3 {
                    return Err(err(line, format!("malformed weight line: {trimmed:?}")));
                }
                let v = parse_uint(toks[1], line, "vertex")? as usize;
                if v == 0 || v > *n {
                    return Err(err(line, format!("vertex out of range 1..={n}")));
                }
                let w = parse_uint(toks[2], line, "weight")? as u32;
                if weights.insert(v as VertexId, w).is_some() {
                    return Err(err(line, format!("duplicate weight for vertex {v}")));
                }
            }
            other => return Err(err(line, format!("unknown record {other:?}"))),
        }
    }

    let (kind, _, m) = header.ok_or_else(|| err(last_line + 1, "missing header"))?;
    if edges_seen != m {
        return Err(err(
            last_line + 1,
            format!("header declares {m} edges, found {edges_seen}"),
        ));
    }
    match kind {
        Header::Bfvd => {
            let (i, j, k) =
                params.ok_or_else(|| err(last_line + 1, "missing param line"))?;
            Ok(ParsedInstance::Bfvd(BfvdInstance::new(graph, i, j, k).map_err(
                |e| err(last_line + 1, e.to_string()),
            )?))
        }
        Header::Wbdd { r, k } => {
            let full: BTreeMap<VertexId, u32> = graph
                .vertices()
                .map(|v| (v, *weights.get(&v).unwrap_or(&0)))
                .collect();
            Ok(ParsedInstance::Wbdd(WbddInstance {
                graph,
                weights: full,
                r,
                k,
            }))
        }
    }
}

/// Order-preserving id compaction to `1..=n`.
fn renumbering(graph: &Graph) -> BTreeMap<VertexId, VertexId> {
    graph
        .vertices()
        .enumerate()
        .map(|(idx, v)| (v, idx as VertexId + 1))
        .collect()
}

fn edge_lines(graph: &Graph, map: &BTreeMap<VertexId, VertexId>, out: &mut String) {
    let mut edges: Vec<(VertexId, VertexId)> = graph
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (map[&u], map[&v]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    for (u, v) in edges {
        out.push_str(&format!("e {u} {v}\n"));
    }
}

pub fn write_bfvd(inst: &BfvdInstance) -> String {
    let map = renumbering(&inst.graph);
    let mut out = format!(
        "p bfvd {} {}\n",
        inst.graph.vertex_count(),
        inst.graph.edge_count()
    );
    edge_lines(&inst.graph, &map, &mut out);
    out.push_str(&format!("param {} {} {}\n", inst.i, inst.j, inst.k));
    out
}

pub fn write_wbdd(inst: &WbddInstance) -> String {
    let map = renumbering(&inst.graph);
    let mut out = format!(
        "p wbdd {} {} {} {}\n",
        inst.graph.vertex_count(),
        inst.graph.edge_count(),
        inst.r,
        inst.k
    );
    edge_lines(&inst.graph, &map, &mut out);
    let mut ws: Vec<(VertexId, u32)> = inst
        .weights
        .iter()
        .filter(|&(_, &w)| w > 0)
        .map(|(&v, &w)| (map[&v], w))
        .collect();
    ws.sort_unstable();
    for (v, w) in ws {
        out.push_str(&format!("w {v} {w}\n"));
    }
    out
}

pub fn write_bdd(inst: &BddInstance) -> String {
    let map = renumbering(&inst.graph);
    let mut out = format!(
        "p wbdd {} {} {} {}\n",
        inst.graph.vertex_count(),
        inst.graph.edge_count(),
        inst.r,
        inst.k.max(0)
    );
    edge_lines(&inst.graph, &map, &mut out);
    out
}

use std::fs;
use std::path::Path;

use coconn_core::graph::{parse_edge_list, parse_graph6, parse_graph6_stream, Family};
use coconn_core::{Graph, VertexSet};

use crate::args::GraphArgs;
use crate::Failure;

pub fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

pub fn edges_file(path: &Path, one_indexed: bool) -> Result<Graph, Failure> {
    Ok(parse_edge_list(&read(path)?, one_indexed)?)
}

pub fn graph6_file(path: &Path) -> Result<Vec<Graph>, Failure> {
    Ok(parse_graph6_stream(&read(path)?)?)
}

pub fn load(args: &GraphArgs, one_indexed: bool) -> Result<Graph, Failure> {
    if let Some(path) = &args.edges {
        edges_file(path, one_indexed)
    } else if let Some(code) = &args.graph6 {
        Ok(parse_graph6(code.trim())?)
    } else if let Some(name) = &args.family {
        let n = args.n.ok_or_else(|| Failure::Usage("--family needs --n".into()))?;
        Ok(Family::from_name(name, n)?.build()?)
    } else {
        Err(Failure::Usage("no graph source given".into()))
    }
}

/// A vertex list from the command line, shifted to 0-based when needed.
pub fn vertex_set(g: &Graph, ids: &[usize], one_indexed: bool) -> Result<VertexSet, Failure> {
    let mut set = VertexSet::EMPTY;
    for &id in ids {
        let v = if one_indexed {
            id.checked_sub(1).ok_or_else(|| Failure::Usage("vertex 0 given with --one-indexed".into()))?
        } else {
            id
        };
        if v >= g.n() {
            return Err(Failure::Usage(format!("vertex {id} is not in a graph on {} vertices", g.n())));
        }
        set = set.with(v);
    }
    Ok(set)
}

//! Input sniffing: graph, embedding, triangulation and polyomino files are
//! told apart by their line shapes.

use wordrep_core::error::{Error, Result};
use wordrep_core::graph::{parse_graph, Graph};
use wordrep_core::planar::{parse_embedding, Embedding};
use wordrep_core::polyomino::{to_graph, CompiledTriangulation, Polyomino, PolyominoTriangulation};

pub enum Input {
    Graph(Graph),
    Embedding(Embedding),
    Triangulation { tri: PolyominoTriangulation, compiled: CompiledTriangulation },
    Polyomino(Polyomino),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Graph,
    Embedding,
    Triangulation,
    Polyomino,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Graph => "graph",
            Kind::Embedding => "embedding",
            Kind::Triangulation => "triangulation",
            Kind::Polyomino => "polyomino",
        }
    }
}

/// A `diag:` line marks a triangulation; `rot`/`coord`/`outer:` lines mark
/// an embedding; an `n m` integer header marks a graph; anything else is
/// read as a polyomino grid.
pub fn classify(text: &str) -> Kind {
    let mut first_data: Option<&str> = None;
    for line in text.lines() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if t.starts_with("diag:") {
            return Kind::Triangulation;
        }
        if t.starts_with("rot ") || t.starts_with("coord ") || t.starts_with("outer:") {
            return Kind::Embedding;
        }
        first_data.get_or_insert(t);
    }
    match first_data {
        Some(l) => {
            let toks: Vec<&str> = l.split_whitespace().collect();
            if toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok()) {
                Kind::Graph
            } else {
                Kind::Polyomino
            }
        }
        None => Kind::Graph, // empty input; graph parser gives the error
    }
}

pub fn load(text: &str) -> Result<Input> {
    match classify(text) {
        Kind::Graph => Ok(Input::Graph(parse_graph(text)?)),
        Kind::Embedding => Ok(Input::Embedding(parse_embedding(text)?)),
        Kind::Triangulation => {
            let tri = PolyominoTriangulation::parse(text)?;
            let compiled = to_graph(&tri)?;
            Ok(Input::Triangulation { tri, compiled })
        }
        Kind::Polyomino => Ok(Input::Polyomino(Polyomino::parse(text)?)),
    }
}

pub fn load_file(path: &str) -> Result<Input> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {path}: {e}")))?;
    load(&text)
}

//! Fixture instances embedded from the repository's `fixtures/` directory.

use wordrep_core::error::Result;
use wordrep_core::planar::{parse_embedding, Embedding};
use wordrep_core::polyomino::{
    to_graph, CompiledTriangulation, Polyomino, PolyominoTriangulation,
};

pub const FIG1_MID: &str = include_str!("../../../fixtures/fig1-mid.emb");
pub const FIG1_RIGHT: &str = include_str!("../../../fixtures/fig1-right.emb");
pub const FIG2: &str = include_str!("../../../fixtures/fig2.tri");
pub const FIG3: &str = include_str!("../../../fixtures/fig3.tri");
pub const FIG4: &str = include_str!("../../../fixtures/fig4.tri");
pub const DONUT: &str = include_str!("../../../fixtures/donut.poly");

pub fn fig1_mid() -> Result<Embedding> {
    parse_embedding(FIG1_MID)
}

pub fn fig1_right() -> Result<Embedding> {
    parse_embedding(FIG1_RIGHT)
}

pub fn fig2() -> Result<(PolyominoTriangulation, CompiledTriangulation)> {
    let tri = PolyominoTriangulation::parse(FIG2)?;
    let compiled = to_graph(&tri)?;
    Ok((tri, compiled))
}

pub fn fig3() -> Result<(PolyominoTriangulation, CompiledTriangulation)> {
    let tri = PolyominoTriangulation::parse(FIG3)?;
    let compiled = to_graph(&tri)?;
    Ok((tri, compiled))
}

pub fn fig4() -> Result<(PolyominoTriangulation, CompiledTriangulation)> {
    let tri = PolyominoTriangulation::parse(FIG4)?;
    let compiled = to_graph(&tri)?;
    Ok((tri, compiled))
}

pub fn donut() -> Result<Polyomino> {
    Polyomino::parse(DONUT)
}

/// Hub-inner wheel embedding, rim size n.
pub fn wheel(n: usize) -> Result<Embedding> {
    Embedding::wheel(n)
}

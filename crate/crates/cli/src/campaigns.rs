//! Theorem-audit campaigns: each enumerates (or samples) the instance class
//! scoped by a theorem's hypotheses, evaluates both sides of the
//! biconditional with independent procedures, and reports counterexamples.
//! Instances are fanned out to worker threads; counterexamples are sorted
//! canonically before emission.

use std::collections::BTreeSet;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use wordrep_core::config::Config;
use wordrep_core::error::{Error, Result};
use wordrep_core::graph::{contains_k4, is_perfect, k_colour, write_graph, Graph};
use wordrep_core::orientation::{decide_word_representable, Answer};
use wordrep_core::planar::{
    is_internally_even, lemma_endpoint_check, write_embedding, Embedding,
};
use wordrep_core::polyomino::{
    all_triangulations, cells_edge_connected, enumerate_polyominoes, is_convex, random_tiling,
    random_triangulation, to_graph, Cell, CompiledTriangulation, Polyomino,
    PolyominoTriangulation,
};

use crate::fixtures;
use crate::report::{Counterexample, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremId {
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    C1,
    L1,
}

impl TheoremId {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
            TheoremId::T7 => "T7",
            TheoremId::C1 => "C1",
            TheoremId::L1 => "L1",
        }
    }

    pub const ALL: [TheoremId; 8] = [
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::C1,
        TheoremId::L1,
    ];
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<TheoremId> {
        match s.to_ascii_uppercase().as_str() {
            "T2" => Ok(TheoremId::T2),
            "T3" => Ok(TheoremId::T3),
            "T4" => Ok(TheoremId::T4),
            "T5" => Ok(TheoremId::T5),
            "T6" => Ok(TheoremId::T6),
            "T7" => Ok(TheoremId::T7),
            "C1" => Ok(TheoremId::C1),
            "L1" => Ok(TheoremId::L1),
            _ => Err(Error::invalid(format!(
                "unknown theorem id `{s}` (expected one of T2 T3 T4 T5 T6 T7 C1 L1)"
            ))),
        }
    }
}

/// One audited instance: its embedding plus the self-contained text it is
/// reported under.
pub struct AuditInstance {
    pub text: String,
    pub embedding: Embedding,
}

enum Outcome {
    Pass,
    Skip,
    Fail(Counterexample),
}

fn evaluate<I: Sync>(
    instances: &[I],
    eval: impl Fn(&I) -> Result<Outcome> + Sync,
) -> Result<(Vec<Counterexample>, usize)> {
    let outcomes: Vec<Outcome> =
        instances.par_iter().map(&eval).collect::<Result<Vec<_>>>()?;
    let mut counterexamples = Vec::new();
    let mut skipped = 0;
    for o in outcomes {
        match o {
            Outcome::Pass => {}
            Outcome::Skip => skipped += 1,
            Outcome::Fail(c) => counterexamples.push(c),
        }
    }
    counterexamples.sort_by(|a, b| (&a.instance, &a.detail).cmp(&(&b.instance, &b.detail)));
    Ok((counterexamples, skipped))
}

/// Every triangulation (all per-cell diagonal choices) of every fixed
/// polyomino with up to `max_cells` cells, monomino-tiled.
pub fn census_triangulations(
    max_cells: usize,
    cfg: &Config,
) -> Result<Vec<(PolyominoTriangulation, CompiledTriangulation)>> {
    let mut out = Vec::new();
    for p in enumerate_polyominoes(max_cells, cfg)? {
        for tri in all_triangulations(&p, cfg)? {
            let compiled = to_graph(&tri)?;
            out.push((tri, compiled));
        }
    }
    Ok(out)
}

fn census_instances(max_cells: usize, cfg: &Config) -> Result<Vec<AuditInstance>> {
    Ok(census_triangulations(max_cells, cfg)?
        .into_iter()
        .map(|(tri, compiled)| AuditInstance {
            text: tri.to_text(),
            embedding: compiled.embedding,
        })
        .collect())
}

fn wheel_instances() -> Result<Vec<AuditInstance>> {
    (4..=9)
        .map(|n| {
            let e = fixtures::wheel(n)?;
            Ok(AuditInstance { text: write_embedding(&e), embedding: e })
        })
        .collect()
}

fn decide_side(g: &Graph, cfg: &Config) -> Result<Option<bool>> {
    Ok(match decide_word_representable(g, cfg)?.answer {
        Answer::Yes => Some(true),
        Answer::No => Some(false),
        Answer::Unknown => None,
    })
}

fn biconditional(
    campaign: &str,
    instances: &[AuditInstance],
    lhs_name: &str,
    rhs_name: &str,
    lhs: impl Fn(&AuditInstance) -> Result<Option<bool>> + Sync,
    rhs: impl Fn(&AuditInstance) -> Result<Option<bool>> + Sync,
) -> Result<Report> {
    let start = Instant::now();
    let (counterexamples, skipped) = evaluate(instances, |inst| {
        let (Some(l), Some(r)) = (lhs(inst)?, rhs(inst)?) else {
            return Ok(Outcome::Skip);
        };
        if l == r {
            Ok(Outcome::Pass)
        } else {
            Ok(Outcome::Fail(Counterexample {
                instance: inst.text.clone(),
                lhs: format!("{lhs_name}={l}"),
                rhs: format!("{rhs_name}={r}"),
                detail: format!("{lhs_name} and {rhs_name} disagree"),
            }))
        }
    })?;
    Ok(Report {
        campaign: campaign.into(),
        instances: instances.len(),
        skipped,
        counterexamples,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Rectangles up to 3 x 3 cells with every placement of a single domino
/// tile, all triangulations. `max_cells` trims the rectangle area.
fn rectangle_domino_instances(max_cells: usize, cfg: &Config) -> Result<Vec<AuditInstance>> {
    let mut out = Vec::new();
    for w in 1..=3i64 {
        for h in 1..=3i64 {
            if (w * h) as usize > max_cells || w * h < 2 {
                continue;
            }
            let cells: BTreeSet<Cell> =
                (0..w).flat_map(|x| (0..h).map(move |y| (x, y))).collect();
            let mut placements = Vec::new();
            for &(x, y) in &cells {
                if cells.contains(&(x + 1, y)) {
                    placements.push([(x, y), (x + 1, y)]);
                }
                if cells.contains(&(x, y + 1)) {
                    placements.push([(x, y), (x, y + 1)]);
                }
            }
            for domino in placements {
                let dset: BTreeSet<Cell> = domino.into_iter().collect();
                let mut tiles: Vec<BTreeSet<Cell>> = vec![dset.clone()];
                tiles.extend(
                    cells.iter().filter(|c| !dset.contains(c)).map(|&c| BTreeSet::from([c])),
                );
                let p = Polyomino::with_tiles(tiles)?;
                for tri in all_triangulations(&p, cfg)? {
                    let compiled = to_graph(&tri)?;
                    out.push(AuditInstance {
                        text: tri.to_text(),
                        embedding: compiled.embedding,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// All partitions of a cell set into edge-connected tiles.
fn connected_tile_partitions(cells: &BTreeSet<Cell>) -> Vec<Vec<BTreeSet<Cell>>> {
    fn go(
        remaining: &BTreeSet<Cell>,
        acc: &mut Vec<BTreeSet<Cell>>,
        out: &mut Vec<Vec<BTreeSet<Cell>>>,
    ) {
        let Some(&first) = remaining.iter().next() else {
            out.push(acc.clone());
            return;
        };
        let rest: Vec<Cell> = remaining.iter().copied().filter(|&c| c != first).collect();
        for mask in 0..(1u32 << rest.len()) {
            let mut tile: BTreeSet<Cell> = [first].into();
            for (i, &c) in rest.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    tile.insert(c);
                }
            }
            if !cells_edge_connected(&tile) {
                continue;
            }
            let next: BTreeSet<Cell> = remaining.difference(&tile).copied().collect();
            acc.push(tile);
            go(&next, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(cells, &mut Vec::new(), &mut out);
    out
}

/// Polyominoes up to `max_cells` cells with every edge-connected tile
/// partition and every triangulation.
fn tiled_census_instances(max_cells: usize, cfg: &Config) -> Result<Vec<AuditInstance>> {
    let mut out = Vec::new();
    for p in enumerate_polyominoes(max_cells, cfg)? {
        for tiles in connected_tile_partitions(p.cells()) {
            let tiled = Polyomino::with_tiles(tiles)?;
            for tri in all_triangulations(&tiled, cfg)? {
                let compiled = to_graph(&tri)?;
                out.push(AuditInstance { text: tri.to_text(), embedding: compiled.embedding });
            }
        }
    }
    Ok(out)
}

/// Lemma instance: a graph plus the odd-degree vertex whose neighbour path
/// is probed.
pub struct LemmaInstance {
    pub graph: Graph,
    pub vertex: usize,
    pub text: String,
}

fn fan_graph(path_len: usize) -> Result<Graph> {
    let hub = path_len + 1;
    let mut g = Graph::new(hub);
    for i in 1..path_len {
        g.add_edge(i, i + 1)?;
    }
    for i in 1..=path_len {
        g.add_edge(i, hub)?;
    }
    Ok(g)
}

/// Fans plus pairs harvested from the census: boundary vertices of odd
/// degree whose neighbourhood induces a path in a 3-colourable instance.
pub fn lemma_instances(max_cells: usize, cfg: &Config) -> Result<Vec<LemmaInstance>> {
    let mut out = Vec::new();
    for k in [3usize, 5, 7] {
        let g = fan_graph(k)?;
        let text = format!("{}# probe vertex {}\n", write_graph(&g), k + 1);
        out.push(LemmaInstance { graph: g, vertex: k + 1, text });
    }
    for (_, compiled) in census_triangulations(max_cells, cfg)? {
        let e = &compiled.embedding;
        let g = e.graph();
        if k_colour(g, 3, cfg)?.is_none() {
            continue;
        }
        for v in e.boundary_vertices() {
            if g.degree(v) % 2 == 0 {
                continue;
            }
            // the neighbourhood must induce a path; anything else is
            // outside the lemma's hypothesis class
            let sub = g.induced_subgraph(g.neighbours(v))?;
            let degs: Vec<usize> = sub.graph.vertices().map(|u| sub.graph.degree(u)).collect();
            let path_like = sub.graph.vertex_count() == 1
                || (degs.iter().filter(|&&d| d == 1).count() == 2
                    && degs.iter().all(|&d| d <= 2)
                    && sub.graph.edge_count() + 1 == sub.graph.vertex_count()
                    && sub.graph.is_connected());
            if !path_like {
                continue;
            }
            let text = format!("{}# probe vertex {v}\n", write_graph(g), v = v);
            out.push(LemmaInstance { graph: g.clone(), vertex: v, text });
        }
    }
    Ok(out)
}

/// Seeded stream of internally even polyomino triangulations with mixed
/// tiles: shapes up to six cells, tiles up to four, rejection-sampled until
/// `count` internally even instances are found.
pub fn ent_soak_instances(
    count: usize,
    cfg: &Config,
) -> Result<Vec<(PolyominoTriangulation, CompiledTriangulation)>> {
    let census = enumerate_polyominoes(6.min(cfg.census_cell_cap), cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts > count * 1000 {
            return Err(Error::limit(format!(
                "could not sample {count} internally even instances in {attempts} attempts"
            )));
        }
        let shape = &census[rng.random_range(0..census.len())];
        let tiled = random_tiling(shape, rng.random(), 4, cfg)?;
        let tri = random_triangulation(&tiled, rng.random(), cfg)?;
        let compiled = to_graph(&tri)?;
        if is_internally_even(&compiled.embedding)? {
            out.push((tri, compiled));
        }
    }
    Ok(out)
}

/// Runs one campaign. `max_cells` overrides the campaign's default census
/// size where applicable.
pub fn run(id: TheoremId, cfg: &Config, max_cells: Option<usize>) -> Result<Report> {
    match id {
        TheoremId::T2 => {
            // K4-free near-triangulations: 3-colourable iff word-representable
            let mut instances = census_instances(max_cells.unwrap_or(4), cfg)?;
            instances.extend(wheel_instances()?);
            instances.retain(|i| contains_k4(i.embedding.graph()).is_none());
            biconditional(
                "T2",
                &instances,
                "three_colourable",
                "word_representable",
                |i| Ok(Some(k_colour(i.embedding.graph(), 3, cfg)?.is_some())),
                |i| decide_side(i.embedding.graph(), cfg),
            )
        }
        TheoremId::T3 => {
            // near-triangulations: 3-colourable iff internally even
            let instances = census_instances(max_cells.unwrap_or(4), cfg)?;
            biconditional(
                "T3",
                &instances,
                "three_colourable",
                "internally_even",
                |i| Ok(Some(k_colour(i.embedding.graph(), 3, cfg)?.is_some())),
                |i| Ok(Some(is_internally_even(&i.embedding)?)),
            )
        }
        TheoremId::T4 => {
            // K4-free near-triangulations: word-representable iff internally even
            let mut instances = census_instances(max_cells.unwrap_or(4), cfg)?;
            instances.extend(wheel_instances()?);
            instances.retain(|i| contains_k4(i.embedding.graph()).is_none());
            biconditional(
                "T4",
                &instances,
                "word_representable",
                "internally_even",
                |i| decide_side(i.embedding.graph(), cfg),
                |i| Ok(Some(is_internally_even(&i.embedding)?)),
            )
        }
        TheoremId::T5 => {
            // convex polyomino triangulations: word-representable iff 3-colourable
            let instances: Vec<AuditInstance> =
                census_triangulations(max_cells.unwrap_or(4), cfg)?
                    .into_iter()
                    .filter(|(tri, _)| is_convex(tri.base()))
                    .map(|(tri, compiled)| AuditInstance {
                        text: tri.to_text(),
                        embedding: compiled.embedding,
                    })
                    .collect();
            biconditional(
                "T5",
                &instances,
                "word_representable",
                "three_colourable",
                |i| decide_side(i.embedding.graph(), cfg),
                |i| Ok(Some(k_colour(i.embedding.graph(), 3, cfg)?.is_some())),
            )
        }
        TheoremId::T6 => {
            // rectangles with a single domino tile: word-representable iff
            // 3-colourable; 3x3 instances exceed the default edge cap and
            // are reported as skipped
            let instances = rectangle_domino_instances(max_cells.unwrap_or(9), cfg)?;
            biconditional(
                "T6",
                &instances,
                "word_representable",
                "three_colourable",
                |i| decide_side(i.embedding.graph(), cfg),
                |i| Ok(Some(k_colour(i.embedding.graph(), 3, cfg)?.is_some())),
            )
        }
        TheoremId::T7 => {
            // K4-free hole-free polyominoes with n-omino tiles:
            // word-representable iff 3-colourable
            let mut instances = tiled_census_instances(max_cells.unwrap_or(3), cfg)?;
            instances.retain(|i| contains_k4(i.embedding.graph()).is_none());
            biconditional(
                "T7",
                &instances,
                "word_representable",
                "three_colourable",
                |i| decide_side(i.embedding.graph(), cfg),
                |i| Ok(Some(k_colour(i.embedding.graph(), 3, cfg)?.is_some())),
            )
        }
        TheoremId::C1 => {
            // K4-free near-triangulations: word-representable iff perfect
            let mut instances = census_instances(max_cells.unwrap_or(4), cfg)?;
            instances.extend(wheel_instances()?);
            instances.retain(|i| {
                contains_k4(i.embedding.graph()).is_none()
                    && i.embedding.graph().vertex_count() <= 10
            });
            biconditional(
                "C1",
                &instances,
                "perfect",
                "word_representable",
                |i| Ok(Some(is_perfect(i.embedding.graph(), cfg)?)),
                |i| decide_side(i.embedding.graph(), cfg),
            )
        }
        TheoremId::L1 => {
            let start = Instant::now();
            let instances = lemma_instances(max_cells.unwrap_or(4), cfg)?;
            let (counterexamples, skipped) = evaluate(&instances, |inst| {
                match lemma_endpoint_check(&inst.graph, inst.vertex, cfg) {
                    Ok(true) => Ok(Outcome::Pass),
                    Ok(false) => Ok(Outcome::Fail(Counterexample {
                        instance: inst.text.clone(),
                        lhs: "endpoints_equal=false".into(),
                        rhs: "lemma_claims=true".into(),
                        detail: format!("probe vertex {}", inst.vertex),
                    })),
                    Err(Error::ResourceLimit(_)) => Ok(Outcome::Skip),
                    Err(e) => Err(e),
                }
            })?;
            Ok(Report {
                campaign: "L1".into(),
                instances: instances.len(),
                skipped,
                counterexamples,
                elapsed_ms: start.elapsed().as_millis(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_size_is_the_expected_product() {
        let cfg = Config::default();
        // 1 + 2 + 6 + 19 fixed shapes, each square choosing one of two
        // diagonals: 2 + 8 + 48 + 304 instances
        let census = census_triangulations(4, &cfg).unwrap();
        assert_eq!(census.len(), 362);
    }

    #[test]
    fn tile_partitions_of_a_domino() {
        let cells: BTreeSet<Cell> = [(0, 0), (1, 0)].into();
        // {both} or {each alone}
        assert_eq!(connected_tile_partitions(&cells).len(), 2);
    }

    #[test]
    fn lemma_census_is_large_enough() {
        let cfg = Config::default();
        let instances = lemma_instances(4, &cfg).unwrap();
        assert!(instances.len() >= 50, "{} lemma instances", instances.len());
    }

    #[test]
    fn soak_sampling_is_deterministic() {
        let cfg = Config::default();
        let a = ent_soak_instances(3, &cfg).unwrap();
        let b = ent_soak_instances(3, &cfg).unwrap();
        assert_eq!(a.len(), 3);
        for ((t1, _), (t2, _)) in a.iter().zip(&b) {
            assert_eq!(t1, t2);
        }
    }
}

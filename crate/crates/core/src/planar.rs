//! Combinatorial embeddings (rotation systems with a designated outer face),
//! near-triangulation recognition, internal evenness, and the constructive
//! 3-colouring of internally even near-triangulations.
//!
//! The colouring algorithm removes the least boundary vertex, colours the
//! remaining components recursively, and when the removed vertex sees three
//! colours repairs its neighbour path by swapping two colour classes inside
//! one side of a boundary cut vertex. The structural claims this rests on
//! (the neighbourhood of a boundary vertex is a disjoint union of paths, the
//! middle vertex of a three-coloured triple is a boundary cut vertex, the
//! triple's outer vertices end up separated) are asserted at runtime;
//! violations surface as `InvariantViolation` errors carrying the state.

use std::collections::{BTreeMap, BTreeSet};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::graph::{
    articulation_points, connected_components, contains_k4, data_lines, is_proper_colouring,
    k_colour, parse_token, Colouring, Graph,
};
use crate::orientation::{decide_word_representable, Answer, Certificate, Decision, Strategy};

/// Directed edge u -> v.
pub type Dart = (usize, usize);
/// Closed face walk as a dart sequence, least dart first.
pub type Face = Vec<Dart>;

/// A connected plane graph: rotation system plus designated outer face.
///
/// Face traversal convention: from dart u -> v the next dart is v -> w where
/// w immediately precedes u in the (counter-clockwise) rotation at v. Under
/// this convention bounded faces come out counter-clockwise and the outer
/// face clockwise. Construction checks the Euler formula V - E + F = 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>, // rotation[v - 1], counter-clockwise
    faces: Vec<Face>,
    outer: usize,
}

impl Embedding {
    /// Builds an embedding with an explicitly designated outer face walk
    /// (a vertex cycle; any rotation of the walk is accepted).
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>, outer_walk: &[usize]) -> Result<Embedding> {
        let walk = outer_walk.to_vec();
        Embedding::build(graph, rotation, move |faces| {
            if walk.is_empty() {
                if faces.len() == 1 && faces[0].is_empty() {
                    return Ok(0);
                }
                return Err(Error::InvalidEmbedding("outer face walk required".into()));
            }
            let darts: Vec<Dart> = (0..walk.len())
                .map(|i| (walk[i], walk[(i + 1) % walk.len()]))
                .collect();
            let want = canonical_face(darts);
            faces.iter().position(|f| *f == want).ok_or_else(|| {
                Error::InvalidEmbedding(format!("designated outer walk {walk:?} is not a face"))
            })
        })
    }

    /// Derives rotations from lattice coordinates (counter-clockwise angular
    /// order) and picks the outer face as the unique clockwise walk.
    pub fn from_coords(graph: Graph, coords: &[(i64, i64)]) -> Result<Embedding> {
        let n = graph.vertex_count();
        if coords.len() != n {
            return Err(Error::InvalidEmbedding(format!(
                "{} coordinates for {n} vertices",
                coords.len()
            )));
        }
        let distinct: BTreeSet<Point> = coords.iter().copied().collect();
        if distinct.len() != n {
            return Err(Error::InvalidEmbedding("coincident vertex coordinates".into()));
        }
        let mut rotation = Vec::with_capacity(n);
        for v in 1..=n {
            let c = coords[v - 1];
            let mut nbrs: Vec<usize> = graph.neighbours(v).iter().copied().collect();
            nbrs.sort_by(|&a, &b| {
                let da = (coords[a - 1].0 - c.0, coords[a - 1].1 - c.1);
                let db = (coords[b - 1].0 - c.0, coords[b - 1].1 - c.1);
                angle_cmp(da, db).then(a.cmp(&b))
            });
            rotation.push(nbrs);
        }
        let coords = coords.to_vec();
        Embedding::build(graph, rotation, move |faces| {
            if faces.len() == 1 {
                return Ok(0);
            }
            let mut outer = None;
            for (i, f) in faces.iter().enumerate() {
                let mut area2 = 0i64;
                for &(u, v) in f {
                    let (a, b) = (coords[u - 1], coords[v - 1]);
                    area2 += a.0 * b.1 - b.0 * a.1;
                }
                if area2 < 0 {
                    if outer.is_some() {
                        return Err(Error::InvalidEmbedding(
                            "more than one clockwise face; drawing is not plane".into(),
                        ));
                    }
                    outer = Some(i);
                }
            }
            outer.ok_or_else(|| Error::InvalidEmbedding("no clockwise face found".into()))
        })
    }

    fn build(
        graph: Graph,
        rotation: Vec<Vec<usize>>,
        pick_outer: impl FnOnce(&[Face]) -> Result<usize>,
    ) -> Result<Embedding> {
        let n = graph.vertex_count();
        if n == 0 {
            return Err(Error::InvalidEmbedding("embedding needs at least one vertex".into()));
        }
        if !graph.is_connected() {
            return Err(Error::InvalidEmbedding("base graph is disconnected".into()));
        }
        if rotation.len() != n {
            return Err(Error::InvalidEmbedding(format!(
                "{} rotations for {n} vertices",
                rotation.len()
            )));
        }
        for v in 1..=n {
            let rot = &rotation[v - 1];
            let set: BTreeSet<usize> = rot.iter().copied().collect();
            if set.len() != rot.len() || set != *graph.neighbours(v) {
                return Err(Error::InvalidEmbedding(format!(
                    "rotation at {v} is not a permutation of its neighbourhood"
                )));
            }
        }
        let faces = compute_faces(&graph, &rotation);
        if n + faces.len() != graph.edge_count() + 2 {
            return Err(Error::InvalidEmbedding(format!(
                "Euler check failed: V={n} E={} F={}",
                graph.edge_count(),
                faces.len()
            )));
        }
        let outer = pick_outer(&faces)?;
        if outer >= faces.len() {
            return Err(Error::InvalidEmbedding("outer face index out of range".into()));
        }
        Ok(Embedding { graph, rotation, faces, outer })
    }

    /// Hub-inner embedding of the wheel: rim 1..n on the outer face,
    /// hub n+1 inside.
    pub fn wheel(n: usize) -> Result<Embedding> {
        let graph = Graph::wheel(n)?;
        let hub = n + 1;
        let mut rotation = Vec::with_capacity(n + 1);
        for i in 1..=n {
            let next = if i == n { 1 } else { i + 1 };
            let prev = if i == 1 { n } else { i - 1 };
            rotation.push(vec![next, hub, prev]);
        }
        rotation.push((1..=n).collect());
        let mut outer = vec![2, 1];
        outer.extend((3..=n).rev());
        Embedding::new(graph, rotation, &outer)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v - 1]
    }

    /// All face walks, ordered by least dart; each walk starts at its least
    /// dart. A single-vertex embedding has one empty face.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn outer_index(&self) -> usize {
        self.outer
    }

    pub fn outer_face(&self) -> &Face {
        &self.faces[self.outer]
    }

    /// Vertices incident to the outer face.
    pub fn boundary_vertices(&self) -> BTreeSet<usize> {
        if self.graph.vertex_count() == 1 {
            return [1].into();
        }
        self.outer_face().iter().map(|&(u, _)| u).collect()
    }

    pub fn inner_vertices(&self) -> BTreeSet<usize> {
        let boundary = self.boundary_vertices();
        self.graph.vertices().filter(|v| !boundary.contains(v)).collect()
    }

    /// Every face except the designated outer one is a triangle on three
    /// distinct vertices.
    pub fn is_near_triangulation(&self) -> bool {
        self.faces.iter().enumerate().all(|(i, f)| {
            if i == self.outer {
                return true;
            }
            let tails: BTreeSet<usize> = f.iter().map(|&(u, _)| u).collect();
            f.len() == 3 && tails.len() == 3
        })
    }
}

fn angle_cmp(a: Point, b: Point) -> std::cmp::Ordering {
    // counter-clockwise from the positive x-axis
    fn half(d: Point) -> u8 {
        if d.1 > 0 || (d.1 == 0 && d.0 > 0) {
            0
        } else {
            1
        }
    }
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 * b.1 - a.1 * b.0;
        0.cmp(&cross) // cross > 0: a strictly before b
    })
}

fn canonical_face(mut darts: Vec<Dart>) -> Face {
    if let Some(k) = darts
        .iter()
        .enumerate()
        .min_by_key(|&(_, d)| *d)
        .map(|(k, _)| k)
    {
        darts.rotate_left(k);
    }
    darts
}

fn compute_faces(graph: &Graph, rotation: &[Vec<usize>]) -> Vec<Face> {
    let n = graph.vertex_count();
    let mut pred: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n + 1];
    for v in 1..=n {
        let rot = &rotation[v - 1];
        let k = rot.len();
        for i in 0..k {
            pred[v].insert(rot[i], rot[(i + k - 1) % k]);
        }
    }
    let mut darts: Vec<Dart> = Vec::with_capacity(2 * graph.edge_count());
    for u in 1..=n {
        for &v in graph.neighbours(u) {
            darts.push((u, v));
        }
    }
    darts.sort_unstable();
    let mut used: BTreeSet<Dart> = BTreeSet::new();
    let mut faces = Vec::new();
    for &start in &darts {
        if used.contains(&start) {
            continue;
        }
        let mut walk = Vec::new();
        let mut cur = start;
        loop {
            walk.push(cur);
            used.insert(cur);
            let (u, v) = cur;
            cur = (v, pred[v][&u]);
            if cur == start {
                break;
            }
        }
        faces.push(walk);
    }
    if faces.is_empty() {
        faces.push(Vec::new()); // isolated vertex: the outer face alone
    }
    faces
}

/// (inner, boundary) partition of the vertex set.
pub fn classify_vertices(e: &Embedding) -> (BTreeSet<usize>, BTreeSet<usize>) {
    (e.inner_vertices(), e.boundary_vertices())
}

/// Inner vertices of odd degree, ascending. Empty iff the near-triangulation
/// is internally even.
pub fn odd_inner_vertices(e: &Embedding) -> Vec<usize> {
    e.inner_vertices()
        .into_iter()
        .filter(|&v| e.graph().degree(v) % 2 == 1)
        .collect()
}

/// Membership in the internally even class: near-triangulation whose inner
/// vertices all have even degree.
pub fn is_internally_even(e: &Embedding) -> Result<bool> {
    if !e.is_near_triangulation() {
        return Err(Error::invalid("internal evenness is defined on near-triangulations"));
    }
    Ok(odd_inner_vertices(e).is_empty())
}

/// One component of the embedding left by a vertex removal;
/// `vertex_map[new - 1]` is the label in the parent embedding.
#[derive(Clone, Debug)]
pub struct SubEmbedding {
    pub embedding: Embedding,
    pub vertex_map: Vec<usize>,
}

/// Removes a boundary vertex. Rotations are restricted to the remaining
/// vertices; each connected component becomes its own embedding whose outer
/// face is the unique face produced by the removal (the faces at `v` and the
/// old outer face merge into it).
pub fn remove_boundary_vertex(e: &Embedding, v: usize) -> Result<Vec<SubEmbedding>> {
    let g = e.graph();
    let n = g.vertex_count();
    if v < 1 || v > n {
        return Err(Error::invalid(format!("vertex {v} not in graph")));
    }
    if !e.boundary_vertices().contains(&v) {
        return Err(Error::invalid(format!("vertex {v} is inner, not on the outer face")));
    }
    if n == 1 {
        return Ok(Vec::new());
    }
    let old_faces: BTreeSet<Face> = e.faces().iter().cloned().collect();
    let rest: BTreeSet<usize> = g.vertices().filter(|&u| u != v).collect();
    let sub = g.induced_subgraph(&rest)?;
    let mut out = Vec::new();
    for comp in connected_components(&sub.graph) {
        let old_labels: Vec<usize> = comp.iter().map(|&i| sub.vertex_map[i - 1]).collect();
        let index: BTreeMap<usize, usize> =
            old_labels.iter().enumerate().map(|(i, &o)| (o, i + 1)).collect();
        let mut cg = Graph::new(old_labels.len());
        for (i, &o) in old_labels.iter().enumerate() {
            for &w in g.neighbours(o) {
                if let Some(&j) = index.get(&w) {
                    if i + 1 < j {
                        cg.add_edge(i + 1, j)?;
                    }
                }
            }
        }
        let rotation: Vec<Vec<usize>> = old_labels
            .iter()
            .map(|&o| {
                e.rotation(o)
                    .iter()
                    .copied()
                    .filter(|&w| w != v)
                    .map(|w| index[&w])
                    .collect()
            })
            .collect();
        let labels = old_labels.clone();
        let old_faces = &old_faces;
        let embedding = Embedding::build(cg, rotation, move |faces| {
            if faces.len() == 1 && faces[0].is_empty() {
                return Ok(0);
            }
            let mut fresh = None;
            for (i, f) in faces.iter().enumerate() {
                let in_old = canonical_face(
                    f.iter().map(|&(a, b)| (labels[a - 1], labels[b - 1])).collect(),
                );
                if !old_faces.contains(&in_old) {
                    if fresh.is_some() {
                        return Err(Error::InvariantViolation(format!(
                            "removal of boundary vertex {v} produced several new faces"
                        )));
                    }
                    fresh = Some(i);
                }
            }
            fresh.ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "removal of boundary vertex {v} produced no new face"
                ))
            })
        })?;
        out.push(SubEmbedding { embedding, vertex_map: old_labels });
    }
    Ok(out)
}

/// Orders a vertex set known to induce a path. Returns None when the induced
/// subgraph is not a path. Walks from the lesser endpoint.
fn set_as_path(g: &Graph, set: &BTreeSet<usize>) -> Option<Vec<usize>> {
    if set.is_empty() {
        return None;
    }
    if set.len() == 1 {
        return Some(vec![*set.iter().next().unwrap()]);
    }
    let deg = |v: usize| g.neighbours(v).iter().filter(|w| set.contains(w)).count();
    let ends: Vec<usize> = set.iter().copied().filter(|&v| deg(v) == 1).collect();
    if ends.len() != 2 || set.iter().any(|&v| deg(v) > 2) {
        return None;
    }
    let start = ends[0];
    let mut path = vec![start];
    let mut prev = 0;
    let mut cur = start;
    loop {
        match g
            .neighbours(cur)
            .iter()
            .copied()
            .find(|&w| set.contains(&w) && w != prev)
        {
            Some(w) => {
                path.push(w);
                prev = cur;
                cur = w;
                if deg(w) == 1 {
                    break;
                }
            }
            None => break,
        }
    }
    if path.len() == set.len() {
        Some(path)
    } else {
        None
    }
}

/// The connected components of the subgraph induced by N(v), each an ordered
/// path along the triangle fans around `v`, ordered by least vertex. One path
/// means situation (i) of the colouring argument, several mean `v` is a cut
/// vertex (situation (ii)).
pub fn neighbour_paths(e: &Embedding, v: usize) -> Result<Vec<Vec<usize>>> {
    if !e.is_near_triangulation() {
        return Err(Error::invalid("neighbour paths are defined on near-triangulations"));
    }
    if !e.boundary_vertices().contains(&v) {
        return Err(Error::invalid(format!("vertex {v} is not a boundary vertex")));
    }
    let g = e.graph();
    let nbrs = g.neighbours(v).clone();
    let sub = g.induced_subgraph(&nbrs)?;
    let mut paths = Vec::new();
    for comp in connected_components(&sub.graph) {
        let set: BTreeSet<usize> = comp.iter().map(|&i| sub.vertex_map[i - 1]).collect();
        let path = set_as_path(g, &set).ok_or_else(|| {
            Error::InvariantViolation(format!(
                "neighbourhood component {set:?} of boundary vertex {v} is not a path in {:?}",
                e.graph()
            ))
        })?;
        paths.push(path);
    }
    Ok(paths)
}

fn component_without(g: &Graph, removed: usize, start: usize) -> BTreeSet<usize> {
    let mut seen: BTreeSet<usize> = [start].into();
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in g.neighbours(u) {
            if w != removed && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen
}

/// Walks the path looking for three consecutive distinct colours and repairs
/// each occurrence by swapping the outer two colour classes inside the
/// component of the third vertex after deleting the middle one. The middle
/// vertex must be a boundary cut vertex separating the outer two; these
/// claims are asserted. Afterwards the path carries at most two colours.
fn scan_recolour(
    emb: &Embedding,
    path: &[usize],
    col: &mut BTreeMap<usize, usize>,
) -> Result<()> {
    let g = emb.graph();
    let boundary = emb.boundary_vertices();
    let cuts = articulation_points(g);
    for t in 1..path.len().saturating_sub(1) {
        let (a, b, c) = (path[t - 1], path[t], path[t + 1]);
        let (ca, cb, cc) = (col[&a], col[&b], col[&c]);
        if ca == cb || cb == cc || ca == cc {
            continue;
        }
        if !boundary.contains(&b) {
            return Err(Error::InvariantViolation(format!(
                "three-coloured triple ({a},{b},{c}) has interior middle vertex {b} in {emb:?}, colouring {col:?}"
            )));
        }
        if !cuts.contains(&b) {
            return Err(Error::InvariantViolation(format!(
                "middle vertex {b} of triple ({a},{b},{c}) is not a cut vertex in {emb:?}, colouring {col:?}"
            )));
        }
        let comp = component_without(g, b, c);
        if comp.contains(&a) {
            return Err(Error::InvariantViolation(format!(
                "cut vertex {b} fails to separate {a} from {c} in {emb:?}"
            )));
        }
        for &w in &comp {
            let cw = col[&w];
            if cw == ca {
                col.insert(w, cc);
            } else if cw == cc {
                col.insert(w, ca);
            }
        }
    }
    let used: BTreeSet<usize> = path.iter().map(|p| col[p]).collect();
    if used.len() > 2 {
        return Err(Error::InvariantViolation(format!(
            "path {path:?} still carries colours {used:?} after recolouring in {emb:?}"
        )));
    }
    Ok(())
}

/// Renames colours so the path uses {1} or {1, 2}; used to align
/// independently coloured components before re-adding their shared vertex.
fn align_path_colours(path: &[usize], col: &mut BTreeMap<usize, usize>) {
    let used: BTreeSet<usize> = path.iter().map(|p| col[p]).collect();
    let mut map = [0usize; 4];
    let mut next = 1;
    for &c in &used {
        map[c] = next;
        next += 1;
    }
    for c in 1..=3 {
        if map[c] == 0 {
            map[c] = next;
            next += 1;
        }
    }
    for c in col.values_mut() {
        *c = map[*c];
    }
}

fn colour_rec(e: &Embedding) -> Result<BTreeMap<usize, usize>> {
    let g = e.graph();
    if g.vertex_count() == 1 {
        return Ok(std::iter::once((1, 1)).collect());
    }
    let v = *e.boundary_vertices().iter().next().expect("boundary is nonempty");
    let paths = neighbour_paths(e, v)?;
    let subs = remove_boundary_vertex(e, v)?;
    if subs.len() != paths.len() {
        return Err(Error::InvariantViolation(format!(
            "removing {v}: {} components but {} neighbour paths in {e:?}",
            subs.len(),
            paths.len()
        )));
    }
    let mut cols: Vec<BTreeMap<usize, usize>> = Vec::with_capacity(subs.len());
    for sub in &subs {
        if !sub.embedding.is_near_triangulation()
            || !is_internally_even(&sub.embedding).unwrap_or(false)
        {
            return Err(Error::InvariantViolation(format!(
                "component {:?} left by removing {v} is not internally even",
                sub.embedding
            )));
        }
        cols.push(colour_rec(&sub.embedding)?);
    }
    let lift = |cols: &[BTreeMap<usize, usize>]| -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for (sub, col) in subs.iter().zip(cols) {
            for (&new, &c) in col {
                m.insert(sub.vertex_map[new - 1], c);
            }
        }
        m
    };
    let mut combined = lift(&cols);
    let seen_on_nbrs =
        |m: &BTreeMap<usize, usize>| -> BTreeSet<usize> { g.neighbours(v).iter().map(|w| m[w]).collect() };
    if seen_on_nbrs(&combined).len() > 2 {
        for (i, sub) in subs.iter().enumerate() {
            let index: BTreeMap<usize, usize> =
                sub.vertex_map.iter().enumerate().map(|(k, &o)| (o, k + 1)).collect();
            let mine: Vec<&Vec<usize>> =
                paths.iter().filter(|p| index.contains_key(&p[0])).collect();
            if mine.len() != 1 {
                return Err(Error::InvariantViolation(format!(
                    "component {i} of {e:?} minus {v} holds {} neighbour paths",
                    mine.len()
                )));
            }
            let path: Vec<usize> = mine[0].iter().map(|o| index[o]).collect();
            scan_recolour(&sub.embedding, &path, &mut cols[i])?;
            if subs.len() > 1 {
                align_path_colours(&path, &mut cols[i]);
            }
        }
        combined = lift(&cols);
    }
    let used = seen_on_nbrs(&combined);
    if used.len() > 2 {
        return Err(Error::InvariantViolation(format!(
            "neighbours of {v} still carry colours {used:?} after recolouring in {e:?}"
        )));
    }
    let cv = (1..=3).find(|c| !used.contains(c)).expect("a colour is free");
    combined.insert(v, cv);
    Ok(combined)
}

/// Constructive 3-colouring of an internally even near-triangulation.
/// The output is re-verified; an improper result or a failed structural
/// assertion raises `InvariantViolation` rather than falling back silently.
pub fn three_colour_ent(e: &Embedding) -> Result<Colouring> {
    if !e.is_near_triangulation() || !is_internally_even(e)? {
        return Err(Error::invalid(
            "constructive colouring needs an internally even near-triangulation",
        ));
    }
    let map = colour_rec(e)?;
    let colouring = Colouring::new(map, 3)?;
    if !is_proper_colouring(e.graph(), &colouring)? {
        return Err(Error::InvariantViolation(format!(
            "constructed colouring {colouring:?} is not proper on {:?}",
            e.graph()
        )));
    }
    Ok(colouring)
}

/// Like `three_colour_ent`, but when `cfg.oracle_fallback` is set an
/// invariant violation falls back to the backtracking oracle.
pub fn three_colour_ent_with(e: &Embedding, cfg: &Config) -> Result<Colouring> {
    match three_colour_ent(e) {
        Err(Error::InvariantViolation(msg)) if cfg.oracle_fallback => {
            match k_colour(e.graph(), 3, cfg)? {
                Some(c) => Ok(c),
                None => Err(Error::InvariantViolation(msg)),
            }
        }
        other => other,
    }
}

/// Oracle for the endpoint-colour lemma: x has odd degree and its
/// neighbourhood induces a path; over every proper 3-colouring of the graph
/// (enumerated exhaustively) the path's endpoints must agree.
pub fn lemma_endpoint_check(g: &Graph, x: usize, cfg: &Config) -> Result<bool> {
    if x < 1 || x > g.vertex_count() {
        return Err(Error::invalid(format!("vertex {x} not in graph")));
    }
    if g.degree(x) % 2 == 0 {
        return Err(Error::invalid(format!(
            "vertex {x} has even degree {}",
            g.degree(x)
        )));
    }
    let path = set_as_path(g, g.neighbours(x)).ok_or_else(|| {
        Error::invalid(format!("neighbours of {x} do not induce a path"))
    })?;
    let n = g.vertex_count();
    if n > cfg.oracle_vertex_cap {
        return Err(Error::limit(format!(
            "3-colouring enumeration cap is {} vertices, graph has {n}",
            cfg.oracle_vertex_cap
        )));
    }
    let (a, b) = (path[0], *path.last().unwrap());
    let mut colour = vec![0usize; n + 1];
    let mut found = false;
    let mut equal = true;

    fn enumerate(
        g: &Graph,
        v: usize,
        colour: &mut Vec<usize>,
        a: usize,
        b: usize,
        found: &mut bool,
        equal: &mut bool,
    ) {
        if !*equal {
            return;
        }
        if v > g.vertex_count() {
            *found = true;
            if colour[a] != colour[b] {
                *equal = false;
            }
            return;
        }
        for c in 1..=3 {
            if g.neighbours(v).iter().all(|&u| colour[u] != c) {
                colour[v] = c;
                enumerate(g, v + 1, colour, a, b, found, equal);
                colour[v] = 0;
            }
        }
    }

    enumerate(g, 1, &mut colour, a, b, &mut found, &mut equal);
    if !found {
        return Err(Error::invalid("graph admits no proper 3-colouring"));
    }
    Ok(equal)
}

/// Decides word-representability of a near-triangulation. K4-free inputs are
/// settled structurally by internal evenness (with a constructive colouring
/// as the yes-certificate); inputs containing K4 fall to the generic search
/// with the open-problem flag raised.
pub fn decide_wr_near_triangulation(e: &Embedding, cfg: &Config) -> Result<Decision> {
    if !e.is_near_triangulation() {
        return Err(Error::invalid("input embedding is not a near-triangulation"));
    }
    let g = e.graph();
    if contains_k4(g).is_none() {
        if is_internally_even(e)? {
            let colouring = Some(three_colour_ent(e)?);
            Ok(Decision {
                answer: Answer::Yes,
                strategy: Strategy::Structural,
                certificate: Certificate::InternallyEven { colouring },
                open_problem_flag: false,
            })
        } else {
            let v = odd_inner_vertices(e)[0];
            Ok(Decision {
                answer: Answer::No,
                strategy: Strategy::Structural,
                certificate: Certificate::OddInnerVertex { vertex: v, degree: g.degree(v) },
                open_problem_flag: false,
            })
        }
    } else {
        let mut d = decide_word_representable(g, cfg)?;
        d.open_problem_flag = true;
        Ok(d)
    }
}

/// Parses the embedding text format: the graph format, then one
/// `rot v: n1 n2 ... nk` line per vertex (counter-clockwise) and an
/// `outer: v1 v2 ... vk` face walk — or, alternatively, one
/// `coord v: x y` line per vertex, from which rotations and the outer face
/// are derived geometrically.
pub fn parse_embedding(text: &str) -> Result<Embedding> {
    let lines: Vec<(usize, &str)> = data_lines(text).collect();
    let mut i = 0;
    let (ln, header) = *lines
        .get(i)
        .ok_or_else(|| Error::parse(0, "empty input, expected `n m` header"))?;
    i += 1;
    let mut it = header.split_whitespace();
    let n: usize = parse_token(ln, it.next(), "vertex count")?;
    let m: usize = parse_token(ln, it.next(), "edge count")?;
    let mut g = Graph::new(n);
    for _ in 0..m {
        let (ln, line) = *lines
            .get(i)
            .ok_or_else(|| Error::parse(0, format!("expected {m} edge lines")))?;
        i += 1;
        let mut it = line.split_whitespace();
        let u: usize = parse_token(ln, it.next(), "edge endpoint")?;
        let v: usize = parse_token(ln, it.next(), "edge endpoint")?;
        if u >= v {
            return Err(Error::parse(ln, format!("edges must satisfy u < v, got {u} {v}")));
        }
        g.add_edge(u, v).map_err(|e| Error::parse(ln, e.to_string()))?;
    }
    let mut rots: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut coords: BTreeMap<usize, (i64, i64)> = BTreeMap::new();
    let mut outer: Option<Vec<usize>> = None;
    while i < lines.len() {
        let (ln, line) = lines[i];
        i += 1;
        if let Some(rest) = line.strip_prefix("rot ") {
            let (v, items) = split_labelled(ln, rest)?;
            let mut rot = Vec::new();
            for t in items {
                rot.push(
                    t.parse::<usize>()
                        .map_err(|_| Error::parse(ln, format!("malformed neighbour `{t}`")))?,
                );
            }
            if rots.insert(v, rot).is_some() {
                return Err(Error::parse(ln, format!("duplicate rotation for vertex {v}")));
            }
        } else if let Some(rest) = line.strip_prefix("coord ") {
            let (v, items) = split_labelled(ln, rest)?;
            if items.len() != 2 {
                return Err(Error::parse(ln, "coord line needs exactly `x y`"));
            }
            let x: i64 = items[0]
                .parse()
                .map_err(|_| Error::parse(ln, "malformed x coordinate"))?;
            let y: i64 = items[1]
                .parse()
                .map_err(|_| Error::parse(ln, "malformed y coordinate"))?;
            if coords.insert(v, (x, y)).is_some() {
                return Err(Error::parse(ln, format!("duplicate coordinates for vertex {v}")));
            }
        } else if let Some(rest) = line.strip_prefix("outer:") {
            let mut walk = Vec::new();
            for t in rest.split_whitespace() {
                walk.push(
                    t.parse::<usize>()
                        .map_err(|_| Error::parse(ln, format!("malformed vertex `{t}`")))?,
                );
            }
            if outer.replace(walk).is_some() {
                return Err(Error::parse(ln, "duplicate outer line"));
            }
        } else {
            return Err(Error::parse(ln, format!("unrecognized line `{line}`")));
        }
    }
    if !coords.is_empty() {
        if !rots.is_empty() || outer.is_some() {
            return Err(Error::invalid("mix of coord and rot/outer lines"));
        }
        let mut cs = Vec::with_capacity(n);
        for v in 1..=n {
            cs.push(*coords.get(&v).ok_or_else(|| {
                Error::invalid(format!("missing coordinates for vertex {v}"))
            })?);
        }
        return Embedding::from_coords(g, &cs);
    }
    let mut rotation = Vec::with_capacity(n);
    for v in 1..=n {
        match rots.remove(&v) {
            Some(r) => rotation.push(r),
            None if g.degree(v) == 0 => rotation.push(Vec::new()),
            None => return Err(Error::invalid(format!("missing rotation for vertex {v}"))),
        }
    }
    let outer = outer.unwrap_or_default();
    Embedding::new(g, rotation, &outer)
}

fn split_labelled<'a>(ln: usize, rest: &'a str) -> Result<(usize, Vec<&'a str>)> {
    let (head, tail) = rest
        .split_once(':')
        .ok_or_else(|| Error::parse(ln, "expected `v: ...`"))?;
    let v: usize = head
        .trim()
        .parse()
        .map_err(|_| Error::parse(ln, "malformed vertex label"))?;
    Ok((v, tail.split_whitespace().collect()))
}

/// Writes the rot/outer embedding format accepted by `parse_embedding`.
pub fn write_embedding(e: &Embedding) -> String {
    let mut s = crate::graph::write_graph(e.graph());
    for v in e.graph().vertices() {
        let items: Vec<String> = e.rotation(v).iter().map(|w| w.to_string()).collect();
        s.push_str(&format!("rot {v}: {}\n", items.join(" ")));
    }
    let walk: Vec<String> = e.outer_face().iter().map(|&(u, _)| u.to_string()).collect();
    s.push_str(&format!("outer: {}\n", walk.join(" ")));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Seven-vertex internally even near-triangulation: a four-wheel core
    /// with two extra spikes left and right (matching the right-hand
    /// example fixture).
    fn ent7() -> Embedding {
        let edges = [
            (3, 4), (4, 5), (1, 2), (2, 4), (4, 6), (6, 7),
            (3, 6), (5, 6), (2, 5), (2, 3), (3, 7), (1, 3), (5, 7), (1, 5),
        ];
        let g = Graph::with_edges(7, &edges).unwrap();
        let coords = [(0, 1), (1, 1), (2, 0), (2, 1), (2, 2), (3, 1), (4, 1)];
        Embedding::from_coords(g, &coords).unwrap()
    }

    /// Seven-vertex near-triangulation that is not internally even: a
    /// five-wheel with one rim ear (the middle example fixture).
    fn nt7() -> Embedding {
        let mut edges = vec![(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)];
        for i in 1..=5 {
            edges.push((i, 6));
        }
        edges.extend([(2, 7), (3, 7), (4, 7)]);
        let g = Graph::with_edges(7, &edges).unwrap();
        let coords = [(8, 0), (22, 0), (30, 15), (15, 25), (0, 15), (15, 10), (40, 15)];
        Embedding::from_coords(g, &coords).unwrap()
    }

    fn triangle() -> Embedding {
        let g = Graph::complete(3).unwrap();
        Embedding::from_coords(g, &[(0, 0), (1, 0), (0, 1)]).unwrap()
    }

    #[test]
    fn triangle_faces() {
        let e = triangle();
        assert_eq!(e.faces().len(), 2);
        assert_eq!(e.outer_face().len(), 3);
        assert!(e.is_near_triangulation());
        let (inner, boundary) = classify_vertices(&e);
        assert!(inner.is_empty());
        assert_eq!(boundary.len(), 3);
    }

    #[test]
    fn square_has_two_length_four_faces() {
        let g = Graph::cycle(4).unwrap();
        let e = Embedding::from_coords(g, &[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(e.faces().len(), 2);
        assert!(e.faces().iter().all(|f| f.len() == 4));
        assert!(!e.is_near_triangulation());
    }

    #[test]
    fn single_edge_one_face() {
        let g = Graph::with_edges(2, &[(1, 2)]).unwrap();
        let e = Embedding::from_coords(g, &[(0, 0), (1, 0)]).unwrap();
        assert_eq!(e.faces().len(), 1);
        assert_eq!(e.outer_face().len(), 2);
        assert!(e.is_near_triangulation()); // no bounded face at all
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::with_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(Embedding::from_coords(g, &[(0, 0), (1, 0), (0, 1), (1, 1)]).is_err());
    }

    #[test]
    fn fixture_classification() {
        let right = ent7();
        assert!(right.is_near_triangulation());
        assert_eq!(right.inner_vertices(), [2, 4, 6].into());
        assert!(is_internally_even(&right).unwrap());

        let mid = nt7();
        assert!(mid.is_near_triangulation());
        assert!(!is_internally_even(&mid).unwrap());
        assert_eq!(odd_inner_vertices(&mid), vec![6]); // the five-wheel hub
    }

    #[test]
    fn wheel_embeddings() {
        for n in 3..=9 {
            let e = Embedding::wheel(n).unwrap();
            assert!(e.is_near_triangulation());
            assert_eq!(e.inner_vertices(), [n + 1].into());
            assert_eq!(is_internally_even(&e).unwrap(), n % 2 == 0);
        }
    }

    #[test]
    fn evenness_needs_near_triangulation() {
        let g = Graph::cycle(4).unwrap();
        let e = Embedding::from_coords(g, &[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert!(is_internally_even(&e).is_err());
    }

    #[test]
    fn removal_of_triangle_vertex_leaves_edge() {
        let subs = remove_boundary_vertex(&triangle(), 3).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].embedding.graph().vertex_count(), 2);
        assert_eq!(subs[0].embedding.graph().edge_count(), 1);
        assert_eq!(subs[0].vertex_map, vec![1, 2]);
    }

    #[test]
    fn removal_keeps_ent_membership() {
        let subs = remove_boundary_vertex(&ent7(), 7).unwrap();
        assert_eq!(subs.len(), 1);
        let sub = &subs[0].embedding;
        assert!(sub.is_near_triangulation());
        assert!(is_internally_even(sub).unwrap());
        assert_eq!(sub.graph().vertex_count(), 6);
    }

    #[test]
    fn removal_of_cut_vertex_splits() {
        // two triangles sharing boundary vertex 3
        let g = Graph::with_edges(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
        let e = Embedding::from_coords(g, &[(0, 0), (2, 0), (1, 1), (0, 2), (2, 2)]).unwrap();
        let subs = remove_boundary_vertex(&e, 3).unwrap();
        assert_eq!(subs.len(), 2);
        for sub in &subs {
            assert_eq!(sub.embedding.graph().vertex_count(), 2);
        }
    }

    #[test]
    fn inner_vertex_cannot_be_removed() {
        assert!(remove_boundary_vertex(&ent7(), 4).is_err());
    }

    #[test]
    fn neighbour_paths_on_fixture() {
        // boundary vertex 7 of the internally even fixture: path 3-6-5
        let paths = neighbour_paths(&ent7(), 7).unwrap();
        assert_eq!(paths, vec![vec![3, 6, 5]]);
    }

    #[test]
    fn neighbour_paths_cut_vertex() {
        let g = Graph::with_edges(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
        let e = Embedding::from_coords(g, &[(0, 0), (2, 0), (1, 1), (0, 2), (2, 2)]).unwrap();
        let paths = neighbour_paths(&e, 3).unwrap();
        assert_eq!(paths.len(), 2); // situation (ii)
    }

    #[test]
    fn neighbour_paths_reject_triangle_neighbourhood() {
        // K4 with one vertex on the outer face: its neighbourhood induces a
        // triangle, not a path
        let g = Graph::complete(4).unwrap();
        let e = Embedding::from_coords(g, &[(0, 0), (4, 0), (2, 4), (2, 1)]).unwrap();
        let v = *e.boundary_vertices().iter().next().unwrap();
        assert!(matches!(neighbour_paths(&e, v), Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn colours_triangle() {
        let c = three_colour_ent(&triangle()).unwrap();
        assert!(is_proper_colouring(triangle().graph(), &c).unwrap());
        assert_eq!(c.colours_used().len(), 3);
    }

    #[test]
    fn colours_fixture() {
        let e = ent7();
        let c = three_colour_ent(&e).unwrap();
        assert!(is_proper_colouring(e.graph(), &c).unwrap());
        assert!(c.colours_used().len() <= 3);
    }

    #[test]
    fn colours_even_wheels() {
        for n in [4usize, 6, 8] {
            let e = Embedding::wheel(n).unwrap();
            let c = three_colour_ent(&e).unwrap();
            assert!(is_proper_colouring(e.graph(), &c).unwrap());
        }
    }

    #[test]
    fn rejects_non_ent_input() {
        assert!(matches!(three_colour_ent(&nt7()), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn lemma_on_fan() {
        // hub 4 over the path 1-2-3, every edge to the hub present
        let g = Graph::with_edges(4, &[(1, 2), (2, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert!(lemma_endpoint_check(&g, 4, &Config::default()).unwrap());
        // even-degree vertex is a precondition failure
        assert!(lemma_endpoint_check(&g, 1, &Config::default()).is_err());
    }

    #[test]
    fn decide_fixture_structurally() {
        let cfg = Config::default();
        let d = decide_wr_near_triangulation(&ent7(), &cfg).unwrap();
        assert_eq!(d.answer, Answer::Yes);
        assert_eq!(d.strategy, Strategy::Structural);
        assert!(!d.open_problem_flag);
        match d.certificate {
            Certificate::InternallyEven { colouring: Some(ref c) } => {
                assert!(is_proper_colouring(ent7().graph(), c).unwrap());
            }
            ref c => panic!("expected structural certificate, got {c:?}"),
        }

        let d = decide_wr_near_triangulation(&nt7(), &cfg).unwrap();
        assert_eq!(d.answer, Answer::No);
        assert!(matches!(d.certificate, Certificate::OddInnerVertex { vertex: 6, degree: 5 }));
    }

    #[test]
    fn k4_delegates_to_search_with_flag() {
        let g = Graph::complete(4).unwrap();
        let e = Embedding::from_coords(g, &[(0, 0), (4, 0), (2, 4), (2, 1)]).unwrap();
        let d = decide_wr_near_triangulation(&e, &Config::default()).unwrap();
        assert_eq!(d.answer, Answer::Yes);
        assert!(d.open_problem_flag);
    }

    #[test]
    fn embedding_format_roundtrip() {
        let e = ent7();
        let text = write_embedding(&e);
        let back = parse_embedding(&text).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn coord_format_parses() {
        let text = "3 3\n1 2\n1 3\n2 3\ncoord 1: 0 0\ncoord 2: 1 0\ncoord 3: 0 1\n";
        let e = parse_embedding(text).unwrap();
        assert_eq!(e, triangle());
    }

    #[test]
    fn euler_holds_on_fixtures() {
        for e in [triangle(), ent7(), nt7(), Embedding::wheel(7).unwrap()] {
            let (v, ed, f) =
                (e.graph().vertex_count(), e.graph().edge_count(), e.faces().len());
            assert_eq!(v + f, ed + 2);
        }
    }
}

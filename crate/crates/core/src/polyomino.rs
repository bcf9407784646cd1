//! Polyominoes with n-omino tiles: parsing, hole and convexity analysis,
//! tile triangulation enumeration, and compilation to plane graphs.
//!
//! Cells are unit squares at integer coordinates, x to the right and y up;
//! ASCII grids are read with the top row at the highest y. A tile is an
//! edge-connected group of cells treated as one region whose interior grid
//! edges are absent; triangulating a tile means cutting its boundary
//! polygon (every lattice point on the outline is a polygon vertex) into
//! triangles by non-crossing diagonals between boundary points.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::geom::{
    in_closed_triangle, on_segment, orient, point_in_polygon, segments_intersect,
    segments_share_interior, signed_area_x2, Point,
};
use crate::graph::Graph;
use crate::planar::Embedding;

pub type Cell = (i64, i64);
/// Lattice segment with endpoints in canonical (lexicographic) order.
pub type Segment = (Point, Point);

pub fn segment(p: Point, q: Point) -> Segment {
    if p <= q {
        (p, q)
    } else {
        (q, p)
    }
}

/// Edge-connected set of unit cells partitioned into edge-connected tiles.
/// Canonically translated so the least cell coordinates are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyomino {
    cells: BTreeSet<Cell>,
    tiles: Vec<BTreeSet<Cell>>,
}

/// Edge-connectivity of a cell set (diagonal contact does not count).
pub fn cells_edge_connected(cells: &BTreeSet<Cell>) -> bool {
    let Some(&start) = cells.iter().next() else {
        return true;
    };
    let mut seen: BTreeSet<Cell> = [start].into();
    let mut stack = vec![start];
    while let Some((x, y)) = stack.pop() {
        for nb in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
            if cells.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    seen.len() == cells.len()
}

impl Polyomino {
    /// Builds a polyomino with an explicit tile partition.
    pub fn with_tiles(tiles: Vec<BTreeSet<Cell>>) -> Result<Polyomino> {
        let mut cells = BTreeSet::new();
        for tile in &tiles {
            if tile.is_empty() {
                return Err(Error::invalid("empty tile"));
            }
            if !cells_edge_connected(tile) {
                return Err(Error::invalid(format!("tile {tile:?} is not edge-connected")));
            }
            for &c in tile {
                if !cells.insert(c) {
                    return Err(Error::invalid(format!("cell {c:?} belongs to two tiles")));
                }
            }
        }
        if cells.is_empty() {
            return Err(Error::invalid("polyomino needs at least one cell"));
        }
        if !cells_edge_connected(&cells) {
            return Err(Error::invalid("cell set is not edge-connected"));
        }
        // canonical translation
        let dx = cells.iter().map(|c| c.0).min().unwrap();
        let dy = cells.iter().map(|c| c.1).min().unwrap();
        let cells = cells.iter().map(|&(x, y)| (x - dx, y - dy)).collect();
        let mut tiles: Vec<BTreeSet<Cell>> = tiles
            .into_iter()
            .map(|t| t.into_iter().map(|(x, y)| (x - dx, y - dy)).collect())
            .collect();
        tiles.sort_by_key(|t: &BTreeSet<Cell>| *t.iter().next().unwrap());
        Ok(Polyomino { cells, tiles })
    }

    /// One tile per cell.
    pub fn monomino_tiled(cells: BTreeSet<Cell>) -> Result<Polyomino> {
        Polyomino::with_tiles(cells.into_iter().map(|c| [c].into()).collect())
    }

    /// Parses a rectangular character grid: `.` is empty, any other
    /// non-space character marks a cell, and each maximal edge-connected
    /// same-character region is one tile. The top row is the highest y.
    pub fn parse(text: &str) -> Result<Polyomino> {
        let rows: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end()))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .collect();
        if rows.is_empty() {
            return Err(Error::parse(0, "empty grid"));
        }
        let width = rows[0].1.chars().count();
        let height = rows.len();
        let mut labelled: BTreeMap<Cell, char> = BTreeMap::new();
        for (r, (ln, row)) in rows.iter().enumerate() {
            if row.chars().count() != width {
                return Err(Error::parse(*ln, "grid is not rectangular"));
            }
            for (c, ch) in row.chars().enumerate() {
                if ch == '.' {
                    continue;
                }
                if ch.is_whitespace() {
                    return Err(Error::parse(*ln, "whitespace inside grid"));
                }
                labelled.insert((c as i64, (height - 1 - r) as i64), ch);
            }
        }
        if labelled.is_empty() {
            return Err(Error::parse(0, "grid has no cells"));
        }
        // maximal same-character edge-connected regions
        let mut remaining: BTreeSet<Cell> = labelled.keys().copied().collect();
        let mut tiles = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let ch = labelled[&start];
            let mut tile: BTreeSet<Cell> = [start].into();
            let mut stack = vec![start];
            remaining.remove(&start);
            while let Some((x, y)) = stack.pop() {
                for nb in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                    if remaining.contains(&nb) && labelled[&nb] == ch {
                        remaining.remove(&nb);
                        tile.insert(nb);
                        stack.push(nb);
                    }
                }
            }
            tiles.push(tile);
        }
        Polyomino::with_tiles(tiles)
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn tiles(&self) -> &[BTreeSet<Cell>] {
        &self.tiles
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Grid rendering: tiles get letters in order, empty cells dots.
    pub fn to_grid_string(&self) -> String {
        const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
        let width = self.cells.iter().map(|c| c.0).max().unwrap() + 1;
        let height = self.cells.iter().map(|c| c.1).max().unwrap() + 1;
        let mut letter: BTreeMap<Cell, char> = BTreeMap::new();
        for (i, tile) in self.tiles.iter().enumerate() {
            let ch = LETTERS[i % LETTERS.len()] as char;
            for &c in tile {
                letter.insert(c, ch);
            }
        }
        let mut out = String::new();
        for y in (0..height).rev() {
            for x in 0..width {
                out.push(*letter.get(&(x, y)).unwrap_or(&'.'));
            }
            out.push('\n');
        }
        out
    }
}

/// The complement has a bounded connected component.
pub fn has_internal_hole(p: &Polyomino) -> bool {
    let max_x = p.cells.iter().map(|c| c.0).max().unwrap();
    let max_y = p.cells.iter().map(|c| c.1).max().unwrap();
    // flood the complement from outside a one-cell margin
    let (lo_x, lo_y, hi_x, hi_y) = (-1i64, -1i64, max_x + 1, max_y + 1);
    let start = (lo_x, lo_y);
    let mut seen: BTreeSet<Cell> = [start].into();
    let mut stack = vec![start];
    while let Some((x, y)) = stack.pop() {
        for nb in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
            if nb.0 < lo_x || nb.0 > hi_x || nb.1 < lo_y || nb.1 > hi_y {
                continue;
            }
            if !p.cells.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    for x in 0..=max_x {
        for y in 0..=max_y {
            if !p.cells.contains(&(x, y)) && !seen.contains(&(x, y)) {
                return true;
            }
        }
    }
    false
}

/// First cell of a bounded complement component, if any (hole witness).
pub fn internal_hole_witness(p: &Polyomino) -> Option<Cell> {
    if !has_internal_hole(p) {
        return None;
    }
    let max_x = p.cells.iter().map(|c| c.0).max().unwrap();
    let max_y = p.cells.iter().map(|c| c.1).max().unwrap();
    let start = (-1i64, -1i64);
    let mut seen: BTreeSet<Cell> = [start].into();
    let mut stack = vec![start];
    while let Some((x, y)) = stack.pop() {
        for nb in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
            if nb.0 < -1 || nb.0 > max_x + 1 || nb.1 < -1 || nb.1 > max_y + 1 {
                continue;
            }
            if !p.cells.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    for x in 0..=max_x {
        for y in 0..=max_y {
            if !p.cells.contains(&(x, y)) && !seen.contains(&(x, y)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Every horizontal line meets the polyomino in an interval.
pub fn is_row_convex(p: &Polyomino) -> bool {
    let ys: BTreeSet<i64> = p.cells.iter().map(|c| c.1).collect();
    ys.iter().all(|&y| {
        let xs: Vec<i64> = p.cells.iter().filter(|c| c.1 == y).map(|c| c.0).collect();
        let (lo, hi) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
        (hi - lo + 1) as usize == xs.len()
    })
}

/// Every vertical line meets the polyomino in an interval.
pub fn is_column_convex(p: &Polyomino) -> bool {
    let xs: BTreeSet<i64> = p.cells.iter().map(|c| c.0).collect();
    xs.iter().all(|&x| {
        let ys: Vec<i64> = p.cells.iter().filter(|c| c.0 == x).map(|c| c.1).collect();
        let (lo, hi) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
        (hi - lo + 1) as usize == ys.len()
    })
}

pub fn is_convex(p: &Polyomino) -> bool {
    is_row_convex(p) && is_column_convex(p)
}

/// Counter-clockwise cycle of all lattice points on a tile's outline,
/// starting at the least point. Collinear points are genuine polygon
/// vertices. Tiles wrapping a hole, or pinched at a corner, are rejected.
pub fn tile_boundary_polygon(p: &Polyomino, tile_idx: usize) -> Result<Vec<Point>> {
    let tile = p
        .tiles
        .get(tile_idx)
        .ok_or_else(|| Error::invalid(format!("no tile {tile_idx}")))?;
    // directed unit boundary edges with the tile interior on the left
    let mut next: BTreeMap<Point, Vec<Point>> = BTreeMap::new();
    let mut count = 0usize;
    for &(x, y) in tile {
        if !tile.contains(&(x, y - 1)) {
            next.entry((x, y)).or_default().push((x + 1, y));
            count += 1;
        }
        if !tile.contains(&(x + 1, y)) {
            next.entry((x + 1, y)).or_default().push((x + 1, y + 1));
            count += 1;
        }
        if !tile.contains(&(x, y + 1)) {
            next.entry((x + 1, y + 1)).or_default().push((x, y + 1));
            count += 1;
        }
        if !tile.contains(&(x - 1, y)) {
            next.entry((x, y + 1)).or_default().push((x, y));
            count += 1;
        }
    }
    if next.values().any(|v| v.len() > 1) {
        return Err(Error::UnsupportedInput(format!(
            "tile {tile:?} pinches at a corner; its outline is not a simple polygon"
        )));
    }
    let start = *next.keys().next().unwrap();
    let mut polygon = Vec::with_capacity(count);
    let mut cur = start;
    loop {
        polygon.push(cur);
        cur = next[&cur][0];
        if cur == start {
            break;
        }
    }
    if polygon.len() != count {
        return Err(Error::UnsupportedInput(format!(
            "tile {tile:?} wraps a hole; its outline has several loops"
        )));
    }
    debug_assert!(signed_area_x2(&polygon) > 0);
    Ok(polygon)
}

fn validate_polygon(poly: &[Point]) -> Result<()> {
    if poly.len() < 3 {
        return Err(Error::invalid("polygon needs at least three points"));
    }
    let set: BTreeSet<Point> = poly.iter().copied().collect();
    if set.len() != poly.len() {
        return Err(Error::invalid("polygon repeats a point"));
    }
    if signed_area_x2(poly) <= 0 {
        return Err(Error::invalid("polygon must be counter-clockwise with positive area"));
    }
    let m = poly.len();
    for i in 0..m {
        let (a1, a2) = (poly[i], poly[(i + 1) % m]);
        for j in i + 1..m {
            let (b1, b2) = (poly[j], poly[(j + 1) % m]);
            let adjacent = j == i + 1 || (i == 0 && j == m - 1);
            if adjacent {
                if segments_share_interior(a1, a2, b1, b2) {
                    return Err(Error::invalid("polygon edges overlap"));
                }
            } else if segments_intersect(a1, a2, b1, b2) {
                return Err(Error::invalid("polygon is self-intersecting"));
            }
        }
    }
    Ok(())
}

/// All triangulations of a simple counter-clockwise lattice polygon using
/// only its boundary points, as sets of diagonals (|points| - 3 of them,
/// giving |points| - 2 triangles). Recursive split on the triangle over the
/// first polygon edge; zero-area triangles are rejected, so runs of
/// collinear boundary points are handled. Deterministic order.
pub fn enumerate_tile_triangulations(
    polygon: &[Point],
    cfg: &Config,
) -> Result<Vec<Vec<Segment>>> {
    validate_polygon(polygon)?;
    if polygon.len() > cfg.boundary_cap {
        return Err(Error::limit(format!(
            "triangulation cap is {} boundary points, polygon has {}",
            cfg.boundary_cap,
            polygon.len()
        )));
    }

    fn split(pts: &[Point], poly: &[usize]) -> Vec<Vec<(usize, usize)>> {
        let m = poly.len();
        if m <= 3 {
            return vec![Vec::new()];
        }
        let mut result = Vec::new();
        for k in 2..m {
            let (i0, i1, ik) = (poly[0], poly[1], poly[k]);
            let (p0, p1, pk) = (pts[i0], pts[i1], pts[ik]);
            if orient(p0, p1, pk) <= 0 {
                continue;
            }
            if poly.iter().any(|&j| {
                j != i0 && j != i1 && j != ik && in_closed_triangle(pts[j], p0, p1, pk)
            }) {
                continue;
            }
            let mut ok = true;
            'edges: for e in 0..m {
                let (a, b) = (poly[e], poly[(e + 1) % m]);
                for &(x, y) in &[(i1, ik), (ik, i0)] {
                    if a == x || a == y || b == x || b == y {
                        continue;
                    }
                    if segments_intersect(pts[x], pts[y], pts[a], pts[b]) {
                        ok = false;
                        break 'edges;
                    }
                }
            }
            if !ok {
                continue;
            }
            let left: Vec<usize> = poly[1..=k].to_vec();
            let right: Vec<usize> = poly[k..].iter().chain(&poly[..1]).copied().collect();
            let ls = split(pts, &left);
            if ls.is_empty() {
                continue;
            }
            let rs = split(pts, &right);
            if rs.is_empty() {
                continue;
            }
            let mut base = Vec::new();
            if k != 2 {
                base.push((i1, ik));
            }
            if k != m - 1 {
                base.push((ik, i0));
            }
            for l in &ls {
                for r in &rs {
                    let mut d = base.clone();
                    d.extend_from_slice(l);
                    d.extend_from_slice(r);
                    result.push(d);
                }
            }
        }
        result
    }

    let indices: Vec<usize> = (0..polygon.len()).collect();
    let raw = split(polygon, &indices);
    Ok(raw
        .into_iter()
        .map(|diags| {
            let mut set: Vec<Segment> = diags
                .into_iter()
                .map(|(i, j)| segment(polygon[i], polygon[j]))
                .collect();
            set.sort_unstable();
            set
        })
        .collect())
}

/// A polyomino plus one triangulating diagonal set per tile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyominoTriangulation {
    base: Polyomino,
    diagonals: Vec<Vec<Segment>>, // per tile, canonical order
}

fn validate_tile_diagonals(polygon: &[Point], diags: &[Segment]) -> Result<()> {
    let b = polygon.len();
    if diags.len() + 3 != b {
        return Err(Error::invalid(format!(
            "tile with {b} boundary points needs {} diagonals, got {}",
            b - 3,
            diags.len()
        )));
    }
    let dedup: BTreeSet<Segment> = diags.iter().copied().collect();
    if dedup.len() != diags.len() {
        return Err(Error::invalid("duplicate diagonal"));
    }
    let index: BTreeMap<Point, usize> =
        polygon.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let poly2: Vec<Point> = polygon.iter().map(|&(x, y)| (2 * x, 2 * y)).collect();
    for &(p, q) in diags {
        let (Some(&ip), Some(&iq)) = (index.get(&p), index.get(&q)) else {
            return Err(Error::invalid(format!(
                "diagonal endpoint off the tile boundary: {p:?}-{q:?}"
            )));
        };
        let gap = (ip as i64 - iq as i64).rem_euclid(b as i64);
        if gap == 1 || gap == b as i64 - 1 {
            return Err(Error::invalid(format!("{p:?}-{q:?} is a boundary edge, not a diagonal")));
        }
        if polygon.iter().any(|&v| v != p && v != q && on_segment(v, p, q)) {
            return Err(Error::invalid(format!(
                "diagonal {p:?}-{q:?} passes through a boundary point"
            )));
        }
        for e in 0..b {
            let (a1, a2) = (polygon[e], polygon[(e + 1) % b]);
            if a1 == p || a1 == q || a2 == p || a2 == q {
                continue;
            }
            if segments_intersect(p, q, a1, a2) {
                return Err(Error::invalid(format!(
                    "diagonal {p:?}-{q:?} crosses the tile boundary"
                )));
            }
        }
        let mid = (p.0 + q.0, p.1 + q.1);
        if !point_in_polygon(mid, &poly2) {
            return Err(Error::invalid(format!("diagonal {p:?}-{q:?} leaves the tile")));
        }
    }
    for (i, &d1) in diags.iter().enumerate() {
        for &d2 in &diags[i + 1..] {
            if segments_share_interior(d1.0, d1.1, d2.0, d2.1) {
                return Err(Error::invalid(format!("diagonals {d1:?} and {d2:?} cross")));
            }
        }
    }
    Ok(())
}

impl PolyominoTriangulation {
    /// Validates that each tile's diagonal set triangulates it: the right
    /// count, pairwise non-crossing, strictly inside the tile, not through
    /// boundary points. A tile with b boundary points is cut into exactly
    /// b - 2 triangles.
    pub fn new(base: Polyomino, diagonals: Vec<Vec<Segment>>) -> Result<PolyominoTriangulation> {
        if diagonals.len() != base.tiles().len() {
            return Err(Error::invalid(format!(
                "{} diagonal sets for {} tiles",
                diagonals.len(),
                base.tiles().len()
            )));
        }
        let mut canonical = Vec::with_capacity(diagonals.len());
        for (i, diags) in diagonals.into_iter().enumerate() {
            let polygon = tile_boundary_polygon(&base, i)?;
            let mut diags: Vec<Segment> =
                diags.into_iter().map(|(p, q)| segment(p, q)).collect();
            diags.sort_unstable();
            validate_tile_diagonals(&polygon, &diags)?;
            canonical.push(diags);
        }
        Ok(PolyominoTriangulation { base, diagonals: canonical })
    }

    /// Parses a triangulation file: the polyomino grid, then one
    /// `diag: x1 y1 x2 y2` line per diagonal.
    pub fn parse(text: &str) -> Result<PolyominoTriangulation> {
        let mut grid = String::new();
        let mut diag_lines: Vec<(usize, &str)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.starts_with("diag:") {
                diag_lines.push((i + 1, t));
            } else {
                grid.push_str(line);
                grid.push('\n');
            }
        }
        let base = Polyomino::parse(&grid)?;
        let mut per_tile: Vec<Vec<Segment>> = vec![Vec::new(); base.tiles().len()];
        let polygons: Vec<Vec<Point>> = (0..base.tiles().len())
            .map(|i| tile_boundary_polygon(&base, i))
            .collect::<Result<_>>()?;
        for (ln, line) in diag_lines {
            let rest = line.strip_prefix("diag:").unwrap();
            let nums: Vec<i64> = rest
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| Error::parse(ln, format!("malformed coordinate `{t}`")))
                })
                .collect::<Result<_>>()?;
            if nums.len() != 4 {
                return Err(Error::parse(ln, "diag line needs `x1 y1 x2 y2`"));
            }
            let seg = segment((nums[0], nums[1]), (nums[2], nums[3]));
            // a diagonal belongs to the tile whose boundary carries both
            // endpoints and whose interior contains its midpoint
            let mid = (seg.0 .0 + seg.1 .0, seg.0 .1 + seg.1 .1);
            let home = polygons.iter().position(|poly| {
                let pts: BTreeSet<Point> = poly.iter().copied().collect();
                let poly2: Vec<Point> = poly.iter().map(|&(x, y)| (2 * x, 2 * y)).collect();
                pts.contains(&seg.0) && pts.contains(&seg.1) && point_in_polygon(mid, &poly2)
            });
            match home {
                Some(t) => per_tile[t].push(seg),
                None => {
                    return Err(Error::parse(
                        ln,
                        format!("diagonal {seg:?} lies inside no tile"),
                    ))
                }
            }
        }
        PolyominoTriangulation::new(base, per_tile)
    }

    pub fn base(&self) -> &Polyomino {
        &self.base
    }

    pub fn diagonals(&self) -> &[Vec<Segment>] {
        &self.diagonals
    }

    /// Writes the grid-plus-diag format accepted by `parse`.
    pub fn to_text(&self) -> String {
        let mut s = self.base.to_grid_string();
        let mut all: Vec<Segment> = self.diagonals.iter().flatten().copied().collect();
        all.sort_unstable();
        for (p, q) in all {
            s.push_str(&format!("diag: {} {} {} {}\n", p.0, p.1, q.0, q.1));
        }
        s
    }
}

/// Plane graph compiled from a triangulation: vertices are the lattice
/// points on tile outlines (sorted by coordinates, so `points[v - 1]` is
/// vertex v), edges the outline unit segments plus the diagonals.
#[derive(Clone, Debug)]
pub struct CompiledTriangulation {
    pub embedding: Embedding,
    pub points: Vec<Point>,
}

/// Compiles a triangulation to its plane graph. When the base polyomino has
/// no internal hole the result is a near-triangulation.
pub fn to_graph(t: &PolyominoTriangulation) -> Result<CompiledTriangulation> {
    let mut segments: BTreeSet<Segment> = BTreeSet::new();
    for i in 0..t.base.tiles().len() {
        let poly = tile_boundary_polygon(&t.base, i)?;
        for k in 0..poly.len() {
            segments.insert(segment(poly[k], poly[(k + 1) % poly.len()]));
        }
        segments.extend(t.diagonals[i].iter().copied());
    }
    let points: Vec<Point> = {
        let set: BTreeSet<Point> =
            segments.iter().flat_map(|&(p, q)| [p, q]).collect();
        set.into_iter().collect()
    };
    let index: BTreeMap<Point, usize> =
        points.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
    let mut g = Graph::new(points.len());
    for &(p, q) in &segments {
        g.add_edge(index[&p], index[&q])?;
    }
    let embedding = Embedding::from_coords(g, &points)?;
    Ok(CompiledTriangulation { embedding, points })
}

/// All fixed polyominoes (distinct up to translation only) with up to
/// `max_cells` cells, monomino-tiled, ordered by cell count then canonical
/// form.
pub fn enumerate_polyominoes(max_cells: usize, cfg: &Config) -> Result<Vec<Polyomino>> {
    if max_cells > cfg.census_cell_cap {
        return Err(Error::limit(format!(
            "census cap is {} cells, asked for {max_cells}",
            cfg.census_cell_cap
        )));
    }
    let canonical = |cells: &BTreeSet<Cell>| -> Vec<Cell> {
        let dx = cells.iter().map(|c| c.0).min().unwrap();
        let dy = cells.iter().map(|c| c.1).min().unwrap();
        cells.iter().map(|&(x, y)| (x - dx, y - dy)).collect()
    };
    let mut out = Vec::new();
    let mut level: BTreeSet<Vec<Cell>> = BTreeSet::new();
    if max_cells >= 1 {
        level.insert(vec![(0, 0)]);
    }
    for _size in 1..=max_cells {
        for shape in &level {
            out.push(Polyomino::monomino_tiled(shape.iter().copied().collect())?);
        }
        let mut next: BTreeSet<Vec<Cell>> = BTreeSet::new();
        for shape in &level {
            let cells: BTreeSet<Cell> = shape.iter().copied().collect();
            for &(x, y) in &cells {
                for nb in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                    if !cells.contains(&nb) {
                        let mut grown = cells.clone();
                        grown.insert(nb);
                        next.insert(canonical(&grown));
                    }
                }
            }
        }
        level = next;
    }
    Ok(out)
}

/// Seeded random re-tiling: repeatedly merges adjacent tiles while the
/// merged size stays within `max_tile_cells`. Reproducible per seed.
pub fn random_tiling(
    p: &Polyomino,
    seed: u64,
    max_tile_cells: usize,
    cfg: &Config,
) -> Result<Polyomino> {
    if 2 * max_tile_cells + 2 > cfg.boundary_cap {
        return Err(Error::limit(format!(
            "tiles of {max_tile_cells} cells may exceed the boundary cap {}",
            cfg.boundary_cap
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cells: Vec<Cell> = p.cells().iter().copied().collect();
    let index: BTreeMap<Cell, usize> =
        cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut tile_of: Vec<usize> = (0..cells.len()).collect();
    let mut pairs = Vec::new();
    for (i, &(x, y)) in cells.iter().enumerate() {
        for nb in [(x + 1, y), (x, y + 1)] {
            if let Some(&j) = index.get(&nb) {
                pairs.push((i, j));
            }
        }
    }
    let find = |tile_of: &Vec<usize>, mut v: usize| -> usize {
        while tile_of[v] != v {
            v = tile_of[v];
        }
        v
    };
    for _ in 0..cells.len() * 2 {
        if pairs.is_empty() {
            break;
        }
        let (a, b) = pairs[rng.random_range(0..pairs.len())];
        let (ra, rb) = (find(&tile_of, a), find(&tile_of, b));
        if ra == rb {
            continue;
        }
        let size =
            |r: usize| (0..cells.len()).filter(|&v| find(&tile_of, v) == r).count();
        if size(ra) + size(rb) <= max_tile_cells {
            tile_of[rb.max(ra)] = ra.min(rb);
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<Cell>> = BTreeMap::new();
    for i in 0..cells.len() {
        groups.entry(find(&tile_of, i)).or_default().insert(cells[i]);
    }
    Polyomino::with_tiles(groups.into_values().collect())
}

/// Uniform seeded choice among each tile's enumerated triangulations.
pub fn random_triangulation(
    p: &Polyomino,
    seed: u64,
    cfg: &Config,
) -> Result<PolyominoTriangulation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut diagonals = Vec::with_capacity(p.tiles().len());
    for i in 0..p.tiles().len() {
        let polygon = tile_boundary_polygon(p, i)?;
        let options = enumerate_tile_triangulations(&polygon, cfg)?;
        diagonals.push(options[rng.random_range(0..options.len())].clone());
    }
    PolyominoTriangulation::new(p.clone(), diagonals)
}

/// Every triangulation of every tile, combined; deterministic order.
pub fn all_triangulations(p: &Polyomino, cfg: &Config) -> Result<Vec<PolyominoTriangulation>> {
    let mut per_tile = Vec::with_capacity(p.tiles().len());
    for i in 0..p.tiles().len() {
        let polygon = tile_boundary_polygon(p, i)?;
        per_tile.push(enumerate_tile_triangulations(&polygon, cfg)?);
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; per_tile.len()];
    loop {
        let diagonals: Vec<Vec<Segment>> =
            pick.iter().enumerate().map(|(i, &k)| per_tile[i][k].clone()).collect();
        out.push(PolyominoTriangulation::new(p.clone(), diagonals)?);
        let mut i = per_tile.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < per_tile[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

//! Finite simple graphs over vertices 1..n, constructors for the named
//! families (cycles, wheels, complete graphs), and the brute-force oracles
//! used to cross-check the structural algorithms: backtracking colouring,
//! clique and induced-wheel detection, and the definitional perfectness test.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::config::Config;
use crate::error::{Error, Result};

/// Simple undirected graph on vertices 1..=n.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>, // index 0 unused
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph { n, adj: vec![BTreeSet::new(); n + 1] }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        if !(1..=self.n).contains(&u) || !(1..=self.n).contains(&v) {
            return Err(Error::invalid(format!("edge ({u},{v}) outside 1..={}", self.n)));
        }
        if self.adj[u].contains(&v) {
            return Err(Error::invalid(format!("duplicate edge ({u},{v})")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// The n-cycle 1-2-...-n-1.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::invalid(format!("cycle needs n >= 3, got {n}")));
        }
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i, i + 1)?;
        }
        g.add_edge(n, 1)?;
        Ok(g)
    }

    /// The wheel: n-cycle plus universal vertex n+1 (the hub).
    pub fn wheel(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::invalid(format!("wheel needs rim n >= 3, got {n}")));
        }
        let mut g = Graph::new(n + 1);
        for i in 1..n {
            g.add_edge(i, i + 1)?;
        }
        g.add_edge(n, 1)?;
        for i in 1..=n {
            g.add_edge(i, n + 1)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::invalid("complete graph needs n >= 1"));
        }
        let mut g = Graph::new(n);
        for u in 1..=n {
            for v in u + 1..=n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && v >= 1 && u <= self.n && v <= self.n && self.adj[u].contains(&v)
    }

    pub fn neighbours(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges as (u, v) pairs with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self).len() <= 1
    }

    /// Induced subgraph on S, relabelled 1..|S| order-preservingly.
    pub fn induced_subgraph(&self, s: &BTreeSet<usize>) -> Result<InducedSubgraph> {
        for &v in s {
            if v < 1 || v > self.n {
                return Err(Error::invalid(format!("vertex {v} not in graph")));
            }
        }
        let vertex_map: Vec<usize> = s.iter().copied().collect();
        let index: BTreeMap<usize, usize> =
            vertex_map.iter().enumerate().map(|(i, &v)| (v, i + 1)).collect();
        let mut graph = Graph::new(vertex_map.len());
        for (i, &u) in vertex_map.iter().enumerate() {
            for &v in &self.adj[u] {
                if let Some(&j) = index.get(&v) {
                    if i + 1 < j {
                        graph.add_edge(i + 1, j)?;
                    }
                }
            }
        }
        Ok(InducedSubgraph { graph, vertex_map })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Result of `induced_subgraph`: `vertex_map[new - 1]` is the original label.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub vertex_map: Vec<usize>,
}

/// Total colour assignment with colours drawn from 1..=k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    assignment: BTreeMap<usize, usize>,
    k: usize,
}

impl Colouring {
    pub fn new(assignment: BTreeMap<usize, usize>, k: usize) -> Result<Colouring> {
        for (&v, &c) in &assignment {
            if c < 1 || c > k {
                return Err(Error::invalid(format!("colour {c} of vertex {v} outside 1..={k}")));
            }
        }
        Ok(Colouring { assignment, k })
    }

    pub fn colour_of(&self, v: usize) -> Option<usize> {
        self.assignment.get(&v).copied()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &BTreeMap<usize, usize> {
        &self.assignment
    }

    pub fn colours_used(&self) -> BTreeSet<usize> {
        self.assignment.values().copied().collect()
    }
}

/// True iff every edge of `g` joins distinct colours. The colouring must be
/// total on g's vertex set.
pub fn is_proper_colouring(g: &Graph, c: &Colouring) -> Result<bool> {
    for v in g.vertices() {
        if c.colour_of(v).is_none() {
            return Err(Error::invalid(format!("colouring not total: vertex {v} uncoloured")));
        }
    }
    Ok(g.edges().iter().all(|&(u, v)| c.colour_of(u) != c.colour_of(v)))
}

/// Vertex order used by the backtracking oracles: decreasing degree, ties by
/// label.
fn oracle_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Backtracking k-colouring oracle. Deterministic: first colouring found
/// under the documented vertex order, symmetry-broken by never using more
/// than one fresh colour at a time.
pub fn k_colour(g: &Graph, k: usize, cfg: &Config) -> Result<Option<Colouring>> {
    if k < 1 {
        return Err(Error::invalid("k must be >= 1"));
    }
    if g.vertex_count() > cfg.oracle_vertex_cap {
        return Err(Error::limit(format!(
            "k_colour cap is {} vertices, graph has {}",
            cfg.oracle_vertex_cap,
            g.vertex_count()
        )));
    }
    let order = oracle_order(g);
    let mut colour: BTreeMap<usize, usize> = BTreeMap::new();

    fn go(
        g: &Graph,
        order: &[usize],
        i: usize,
        k: usize,
        max_used: usize,
        colour: &mut BTreeMap<usize, usize>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let limit = k.min(max_used + 1);
        for c in 1..=limit {
            if g.neighbours(v).iter().all(|&u| colour.get(&u) != Some(&c)) {
                colour.insert(v, c);
                if go(g, order, i + 1, k, max_used.max(c), colour) {
                    return true;
                }
                colour.remove(&v);
            }
        }
        false
    }

    if go(g, &order, 0, k, 0, &mut colour) {
        Ok(Some(Colouring::new(colour, k)?))
    } else {
        Ok(None)
    }
}

/// Least k admitting a proper k-colouring.
pub fn chromatic_number(g: &Graph, cfg: &Config) -> Result<usize> {
    if g.vertex_count() == 0 {
        return Err(Error::invalid("chromatic number of the empty graph is undefined here"));
    }
    for k in 1..=g.vertex_count() {
        if k_colour(g, k, cfg)?.is_some() {
            return Ok(k);
        }
    }
    unreachable!("n colours always suffice")
}

/// Lexicographically least vertex quadruple inducing K4, if any.
pub fn contains_k4(g: &Graph) -> Option<[usize; 4]> {
    let n = g.vertex_count();
    for a in 1..=n {
        for b in a + 1..=n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..=n {
                if !g.has_edge(a, c) || !g.has_edge(b, c) {
                    continue;
                }
                for d in c + 1..=n {
                    if g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// All induced wheels (hub, rim) with rim length >= min_rim. The rim is a
/// chordless cycle in G through neighbours of the hub, reported in cycle
/// order starting from its least vertex, second vertex the smaller of the
/// two possible directions. Hubs ascending, then discovery order.
pub fn find_induced_wheels(g: &Graph, min_rim: usize) -> Vec<(usize, Vec<usize>)> {
    let min_rim = min_rim.max(3);
    let mut out = Vec::new();
    for hub in g.vertices() {
        let nbrs: Vec<usize> = g.neighbours(hub).iter().copied().collect();
        if nbrs.len() < min_rim {
            continue;
        }
        for cycle in chordless_cycles(g, &nbrs, min_rim) {
            out.push((hub, cycle));
        }
    }
    out
}

/// Chordless cycles of length >= min_len in the subgraph induced by `verts`,
/// each reported once: least vertex first, then the smaller neighbour.
fn chordless_cycles(g: &Graph, verts: &[usize], min_len: usize) -> Vec<Vec<usize>> {
    let vset: BTreeSet<usize> = verts.iter().copied().collect();
    let mut cycles = Vec::new();
    let mut path: Vec<usize> = Vec::new();

    fn extend(
        g: &Graph,
        vset: &BTreeSet<usize>,
        path: &mut Vec<usize>,
        min_len: usize,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        let s = path[0];
        let u = *path.last().unwrap();
        for &w in g.neighbours(u) {
            if w <= s || !vset.contains(&w) || path.contains(&w) {
                continue;
            }
            // chordless: w may touch no path vertex other than u, except s
            // when closing
            let adj_s = g.has_edge(w, s);
            let chord = path[1..path.len() - 1].iter().any(|&p| g.has_edge(w, p));
            if chord {
                continue;
            }
            if adj_s {
                // w can only ever be the closing vertex
                if path.len() + 1 >= min_len && w > path[1] {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    cycles.push(cycle);
                }
                continue;
            }
            path.push(w);
            extend(g, vset, path, min_len, cycles);
            path.pop();
        }
    }

    for &s in verts {
        for &a in g.neighbours(s) {
            if a <= s || !vset.contains(&a) {
                continue;
            }
            path.clear();
            path.push(s);
            path.push(a);
            extend(g, &vset, &mut path, min_len, &mut cycles);
        }
    }
    cycles
}

/// Checks a (hub, rim) pair is exactly an induced wheel: rim inside N(hub),
/// rim a chordless cycle, and {hub} ∪ rim inducing exactly 2|rim| edges.
pub fn verify_wheel(g: &Graph, hub: usize, rim: &[usize]) -> bool {
    let r = rim.len();
    if r < 3 {
        return false;
    }
    let set: BTreeSet<usize> = rim.iter().copied().collect();
    if set.len() != r || set.contains(&hub) {
        return false;
    }
    if !rim.iter().all(|&v| g.has_edge(hub, v)) {
        return false;
    }
    for i in 0..r {
        for j in i + 1..r {
            let consecutive = j == i + 1 || (i == 0 && j == r - 1);
            if g.has_edge(rim[i], rim[j]) != consecutive {
                return false;
            }
        }
    }
    let mut all: BTreeSet<usize> = set;
    all.insert(hub);
    let count = g
        .edges()
        .iter()
        .filter(|&&(u, v)| all.contains(&u) && all.contains(&v))
        .count();
    count == 2 * r
}

/// Cut vertices, ascending.
pub fn articulation_points(g: &Graph) -> BTreeSet<usize> {
    let n = g.vertex_count();
    let mut disc = vec![0usize; n + 1];
    let mut low = vec![0usize; n + 1];
    let mut parent = vec![0usize; n + 1];
    let mut timer = 0usize;
    let mut points = BTreeSet::new();

    fn dfs(
        g: &Graph,
        u: usize,
        disc: &mut [usize],
        low: &mut [usize],
        parent: &mut [usize],
        timer: &mut usize,
        points: &mut BTreeSet<usize>,
    ) {
        *timer += 1;
        disc[u] = *timer;
        low[u] = *timer;
        let mut children = 0;
        for &v in g.neighbours(u) {
            if disc[v] == 0 {
                children += 1;
                parent[v] = u;
                dfs(g, v, disc, low, parent, timer, points);
                low[u] = low[u].min(low[v]);
                if parent[u] != 0 && low[v] >= disc[u] {
                    points.insert(u);
                }
            } else if v != parent[u] {
                low[u] = low[u].min(disc[v]);
            }
        }
        if parent[u] == 0 && children > 1 {
            points.insert(u);
        }
    }

    for v in 1..=n {
        if disc[v] == 0 {
            dfs(g, v, &mut disc, &mut low, &mut parent, &mut timer, &mut points);
        }
    }
    points
}

/// Connected components, each sorted, ordered by least vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n + 1];
    let mut components = Vec::new();
    for s in 1..=n {
        if seen[s] {
            continue;
        }
        let mut stack = vec![s];
        let mut comp = Vec::new();
        seen[s] = true;
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &v in g.neighbours(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

fn max_clique(g: &Graph) -> usize {
    fn grow(g: &Graph, candidates: &[usize], size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        if size + candidates.len() <= *best {
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            let next: Vec<usize> =
                candidates[i + 1..].iter().copied().filter(|&u| g.has_edge(u, v)).collect();
            grow(g, &next, size + 1, best);
        }
    }
    let verts: Vec<usize> = g.vertices().collect();
    let mut best = 0;
    grow(g, &verts, 0, &mut best);
    best
}

/// Definitional perfectness: for every nonempty induced subgraph H,
/// chromatic number of H equals its maximum clique size. Exhaustive over
/// all vertex subsets, so capped tightly.
pub fn is_perfect(g: &Graph, cfg: &Config) -> Result<bool> {
    let n = g.vertex_count();
    if n > cfg.perfect_vertex_cap {
        return Err(Error::limit(format!(
            "is_perfect cap is {} vertices, graph has {n}",
            cfg.perfect_vertex_cap
        )));
    }
    if n == 0 {
        return Ok(true);
    }
    for mask in 1u64..(1u64 << n) {
        let s: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        let h = g.induced_subgraph(&s)?.graph;
        let omega = max_clique(&h);
        // chromatic number >= omega always; perfect iff omega colours suffice
        if k_colour(&h, omega, cfg)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Parses the graph text format: optional `#` comment lines, a first data
/// line `n m`, then m lines `u v` with 1 <= u < v <= n. Reversed or
/// duplicate edges are rejected.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty input, expected `n m` header"))?;
    let mut it = header.split_whitespace();
    let n: usize = parse_token(ln, it.next(), "vertex count")?;
    let m: usize = parse_token(ln, it.next(), "edge count")?;
    if it.next().is_some() {
        return Err(Error::parse(ln, "trailing tokens after `n m`"));
    }
    let mut g = Graph::new(n);
    for _ in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(0, format!("expected {m} edge lines")))?;
        let mut it = line.split_whitespace();
        let u: usize = parse_token(ln, it.next(), "edge endpoint")?;
        let v: usize = parse_token(ln, it.next(), "edge endpoint")?;
        if it.next().is_some() {
            return Err(Error::parse(ln, "trailing tokens after edge"));
        }
        if u >= v {
            return Err(Error::parse(ln, format!("edges must satisfy u < v, got {u} {v}")));
        }
        g.add_edge(u, v).map_err(|e| Error::parse(ln, e.to_string()))?;
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::parse(ln, "unexpected data after edge list"));
    }
    Ok(g)
}

/// Writes the graph text format accepted by `parse_graph`.
pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_token<T: std::str::FromStr>(
    line: usize,
    tok: Option<&str>,
    what: &str,
) -> Result<T> {
    tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(line, format!("malformed {what}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn wheel_3_is_k4() {
        let w3 = Graph::wheel(3).unwrap();
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(w3.vertex_count(), 4);
        assert_eq!(w3.edge_count(), 6);
        assert_eq!(w3, k4);
    }

    #[test]
    fn cycle_4_edges() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.edges(), vec![(1, 2), (1, 4), (2, 3), (3, 4)]);
    }

    #[test]
    fn complete_1_is_a_point() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.vertex_count(), 1);
        assert_eq!(k1.edge_count(), 0);
    }

    #[test]
    fn family_size_bounds() {
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::wheel(2).is_err());
        assert!(Graph::complete(0).is_err());
    }

    #[test]
    fn induced_wheel_rim_is_cycle() {
        let w5 = Graph::wheel(5).unwrap();
        let rim: BTreeSet<usize> = (1..=5).collect();
        let sub = w5.induced_subgraph(&rim).unwrap();
        assert_eq!(sub.graph, Graph::cycle(5).unwrap());
        assert_eq!(sub.vertex_map, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn induced_full_set_is_identity() {
        let g = Graph::wheel(4).unwrap();
        let all: BTreeSet<usize> = g.vertices().collect();
        assert_eq!(g.induced_subgraph(&all).unwrap().graph, g);
    }

    #[test]
    fn induced_triangle_of_k4() {
        let k4 = Graph::complete(4).unwrap();
        let s: BTreeSet<usize> = [1, 3, 4].into_iter().collect();
        assert_eq!(k4.induced_subgraph(&s).unwrap().graph, Graph::complete(3).unwrap());
    }

    #[test]
    fn induced_unknown_vertex_rejected() {
        let g = Graph::cycle(3).unwrap();
        let s: BTreeSet<usize> = [1, 7].into_iter().collect();
        assert!(g.induced_subgraph(&s).is_err());
    }

    #[test]
    fn proper_colouring_checks() {
        let t = Graph::complete(3).unwrap();
        let c = Colouring::new([(1, 1), (2, 2), (3, 3)].into(), 3).unwrap();
        assert!(is_proper_colouring(&t, &c).unwrap());
        let e = Graph::with_edges(2, &[(1, 2)]).unwrap();
        let bad = Colouring::new([(1, 1), (2, 1)].into(), 3).unwrap();
        assert!(!is_proper_colouring(&e, &bad).unwrap());
        let partial = Colouring::new([(1, 1)].into(), 3).unwrap();
        assert!(is_proper_colouring(&e, &partial).is_err());
    }

    #[test]
    fn odd_wheels_need_four_colours() {
        let w5 = Graph::wheel(5).unwrap();
        assert!(k_colour(&w5, 3, &cfg()).unwrap().is_none());
        let w4 = Graph::wheel(4).unwrap();
        let c = k_colour(&w4, 3, &cfg()).unwrap().unwrap();
        assert!(is_proper_colouring(&w4, &c).unwrap());
        assert!(c.colours_used().len() <= 3);
    }

    #[test]
    fn triangle_needs_three() {
        let t = Graph::complete(3).unwrap();
        assert!(k_colour(&t, 2, &cfg()).unwrap().is_none());
        assert!(k_colour(&t, 3, &cfg()).unwrap().is_some());
    }

    #[test]
    fn oracle_cap_enforced() {
        let g = Graph::new(30);
        assert!(matches!(k_colour(&g, 2, &cfg()), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&Graph::wheel(5).unwrap(), &cfg()).unwrap(), 4);
        assert_eq!(chromatic_number(&Graph::cycle(4).unwrap(), &cfg()).unwrap(), 2);
    }

    #[test]
    fn wheel_parity_chromatic() {
        for m in 2..=5 {
            assert_eq!(chromatic_number(&Graph::wheel(2 * m).unwrap(), &cfg()).unwrap(), 3);
            assert_eq!(chromatic_number(&Graph::wheel(2 * m + 1).unwrap(), &cfg()).unwrap(), 4);
        }
    }

    #[test]
    fn k4_detection() {
        assert_eq!(contains_k4(&Graph::complete(4).unwrap()), Some([1, 2, 3, 4]));
        assert_eq!(contains_k4(&Graph::wheel(4).unwrap()), None);
    }

    #[test]
    fn wheels_in_wheels() {
        let w5 = Graph::wheel(5).unwrap();
        let found = find_induced_wheels(&w5, 4);
        assert_eq!(found, vec![(6, vec![1, 2, 3, 4, 5])]);
        assert!(verify_wheel(&w5, 6, &[1, 2, 3, 4, 5]));
        assert!(find_induced_wheels(&Graph::cycle(6).unwrap(), 4).is_empty());
    }

    #[test]
    fn reported_wheels_have_exact_edge_count() {
        // spot-check the 2|R| invariant on a graph with several wheels
        let w6 = Graph::wheel(6).unwrap();
        for (hub, rim) in find_induced_wheels(&w6, 4) {
            assert!(verify_wheel(&w6, hub, &rim));
        }
    }

    #[test]
    fn articulation_and_components() {
        let path = Graph::with_edges(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(articulation_points(&path), [2].into());
        assert!(articulation_points(&Graph::cycle(4).unwrap()).is_empty());
        let two = Graph::with_edges(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert_eq!(connected_components(&two), vec![vec![1, 2, 3], vec![4, 5, 6]]);
    }

    #[test]
    fn perfectness() {
        assert!(!is_perfect(&Graph::wheel(5).unwrap(), &cfg()).unwrap());
        assert!(!is_perfect(&Graph::cycle(5).unwrap(), &cfg()).unwrap());
        assert!(is_perfect(&Graph::complete(4).unwrap(), &cfg()).unwrap());
        let big = Graph::new(13);
        assert!(is_perfect(&big, &cfg()).is_err());
    }

    #[test]
    fn graph_format_roundtrip() {
        let g = Graph::wheel(4).unwrap();
        let text = write_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn graph_format_rejects_bad_edges() {
        assert!(parse_graph("2 1\n2 1\n").is_err()); // reversed
        assert!(parse_graph("2 2\n1 2\n1 2\n").is_err()); // duplicate
        assert!(parse_graph("# comment\n2 1\n1 2\n").is_ok());
        assert!(parse_graph("2 1\n1 2\n9 9\n").is_err()); // trailing data
    }
}

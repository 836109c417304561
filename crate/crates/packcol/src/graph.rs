//! Undirected simple graphs with optional vertex labels, plus the exact
//! small-graph invariants the rest of the crate relies on.

use std::collections::VecDeque;
use std::fmt;

/// Default vertex cap for the exhaustive independence-number search.
pub const INDEPENDENCE_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    IndependenceCapExceeded { n: usize, cap: usize },
    Parse { line: usize, message: String },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
            GraphError::IndependenceCapExceeded { n, cap } => {
                write!(f, "graph has {n} vertices, exhaustive search capped at {cap}")
            }
            GraphError::Parse { line, message } => write!(f, "line {line}: {message}"),
        }
    }
}

impl std::error::Error for GraphError {}

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency is stored both as sorted neighbor lists and as bit rows, so
/// structural queries and the exhaustive searches stay cheap. Immutable after
/// construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    bits: Vec<Vec<u64>>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

fn bit_words(n: usize) -> usize {
    n.div_ceil(64)
}

impl Graph {
    /// Builds a graph from an edge list. Rejects loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph {
            n,
            adj: vec![Vec::new(); n],
            bits: vec![vec![0u64; bit_words(n)]; n],
            labels: None,
        };
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
            g.bits[u][v / 64] |= 1 << (v % 64);
            g.bits[v][u / 64] |= 1 << (u % 64);
        }
        for row in &mut g.adj {
            row.sort_unstable();
        }
        Ok(g)
    }

    /// Attaches display labels (one per vertex); reports fall back to the
    /// numeric id when absent.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as (u, v) pairs with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices at distance 1 or 2 from `v` (exclusive of `v`), ascending.
    pub fn dist2_ball(&self, v: usize) -> Result<Vec<usize>, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut seen = vec![false; self.n];
        for &u in &self.adj[v] {
            seen[u] = true;
            for &w in &self.adj[u] {
                seen[w] = true;
            }
        }
        seen[v] = false;
        Ok((0..self.n).filter(|&u| seen[u]).collect())
    }

    /// The square graph: same vertices, edges between every pair at distance
    /// at most two.
    pub fn square(&self) -> Graph {
        let mut edges = Vec::new();
        for v in 0..self.n {
            for u in self.dist2_ball(v).expect("vertex in range") {
                if v < u {
                    edges.push((v, u));
                }
            }
        }
        Graph::new(self.n, &edges).expect("square of a simple graph is simple")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Maximum over all vertex pairs of the shortest-path distance.
    /// Disconnected graphs report [`Diameter::Infinite`] rather than a
    /// sentinel integer.
    pub fn diameter(&self) -> Diameter {
        let mut best = 0u32;
        for v in 0..self.n {
            for d in self.bfs_distances(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Exact maximum independent set size, by exhaustive branch on the lowest
    /// remaining vertex. Capped at [`INDEPENDENCE_CAP`] vertices by default;
    /// every use in this crate stays far below the cap.
    pub fn independence_number(&self) -> Result<u32, GraphError> {
        self.independence_number_capped(INDEPENDENCE_CAP)
    }

    pub fn independence_number_capped(&self, cap: usize) -> Result<u32, GraphError> {
        if self.n > cap {
            return Err(GraphError::IndependenceCapExceeded { n: self.n, cap });
        }
        if self.n == 0 {
            return Ok(0);
        }
        // Bitmask branch: every vertex is either skipped or taken (taking it
        // removes its closed neighborhood), so all independent sets are seen.
        let masks: Vec<u128> = (0..self.n)
            .map(|v| self.adj[v].iter().fold(0u128, |m, &u| m | 1 << u))
            .collect();
        fn rec(avail: u128, masks: &[u128]) -> u32 {
            if avail == 0 {
                return 0;
            }
            let v = avail.trailing_zeros() as usize;
            let skip = rec(avail & !(1 << v), masks);
            let take = 1 + rec(avail & !(1 << v) & !masks[v], masks);
            skip.max(take)
        }
        Ok(rec((1u128 << self.n) - 1, &masks))
    }

    /// Parses the edge-list text format: first line `n m`, then `m` lines
    /// `u v` with 0-based endpoints. Blank lines and `#` comments allowed.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut rows = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                rows.push((idx + 1, line));
            }
        }
        let Some(&(first_line, header)) = rows.first() else {
            return Err(GraphError::Parse { line: 1, message: "empty input".into() });
        };
        let mut it = header.split_whitespace();
        let parse_num = |tok: Option<&str>, line: usize, what: &str| -> Result<usize, GraphError> {
            tok.ok_or_else(|| GraphError::Parse { line, message: format!("missing {what}") })?
                .parse()
                .map_err(|_| GraphError::Parse { line, message: format!("bad {what}") })
        };
        let n = parse_num(it.next(), first_line, "vertex count")?;
        let m = parse_num(it.next(), first_line, "edge count")?;
        if it.next().is_some() {
            return Err(GraphError::Parse {
                line: first_line,
                message: "expected exactly `n m` on the first line".into(),
            });
        }
        if rows.len() != m + 1 {
            return Err(GraphError::Parse {
                line: first_line,
                message: format!("expected {m} edge lines, found {}", rows.len() - 1),
            });
        }
        let mut edges = Vec::with_capacity(m);
        for &(lineno, row) in &rows[1..] {
            let mut it = row.split_whitespace();
            let u = parse_num(it.next(), lineno, "edge endpoint")?;
            let v = parse_num(it.next(), lineno, "edge endpoint")?;
            if it.next().is_some() {
                return Err(GraphError::Parse {
                    line: lineno,
                    message: "expected exactly `u v`".into(),
                });
            }
            edges.push((u, v));
        }
        Graph::new(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    // Named graphs used as fixtures throughout the crate and its tests.

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &edges).unwrap()
    }
}

/// Diameter of a graph; disconnected graphs are its own case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "infinite"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent reference for distance queries: repeated relaxation over
    /// the full edge set instead of BFS.
    fn oracle_distances(g: &Graph, src: usize) -> Vec<Option<u32>> {
        let inf = u32::MAX;
        let mut d = vec![inf; g.n()];
        d[src] = 0;
        for _ in 0..g.n() {
            for (u, v) in g.edges() {
                if d[u] != inf && d[u] + 1 < d[v] {
                    d[v] = d[u] + 1;
                }
                if d[v] != inf && d[v] + 1 < d[u] {
                    d[u] = d[v] + 1;
                }
            }
        }
        d.into_iter().map(|x| (x != inf).then_some(x)).collect()
    }

    /// Independent reference for the independence number: scan all subsets.
    fn oracle_independence(g: &Graph) -> u32 {
        let n = g.n();
        let mut best = 0;
        'subsets: for mask in 0u32..(1 << n) {
            for u in 0..n {
                if mask >> u & 1 == 0 {
                    continue;
                }
                for &v in g.neighbors(u) {
                    if v > u && mask >> v & 1 == 1 {
                        continue 'subsets;
                    }
                }
            }
            best = best.max(mask.count_ones());
        }
        best
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(Graph::new(3, &[(0, 0)]), Err(GraphError::SelfLoop { .. })));
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { .. })
        ));
        assert!(matches!(
            Graph::new(2, &[(0, 5)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn dist2_ball_on_path() {
        let g = Graph::path(3);
        assert_eq!(g.dist2_ball(0).unwrap(), vec![1, 2]);
    }

    #[test]
    fn dist2_ball_isolated_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.dist2_ball(0).unwrap(), Vec::<usize>::new());
        assert!(g.dist2_ball(1).is_err());
    }

    #[test]
    fn dist2_ball_petersen_covers_everything() {
        // Verified against the BFS oracle: the Petersen graph has diameter 2,
        // so every ball contains the other 9 vertices.
        let g = Graph::petersen();
        for v in 0..10 {
            let ball = g.dist2_ball(v).unwrap();
            assert_eq!(ball.len(), 9);
            let d = oracle_distances(&g, v);
            for u in ball {
                assert!(d[u] == Some(1) || d[u] == Some(2));
            }
        }
    }

    #[test]
    fn dist2_ball_symmetry() {
        for g in [Graph::petersen(), Graph::cycle(7), Graph::path(6)] {
            for v in 0..g.n() {
                for u in g.dist2_ball(v).unwrap() {
                    assert!(g.dist2_ball(u).unwrap().contains(&v));
                }
            }
        }
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(Graph::complete(4).independence_number().unwrap(), 1);
        assert_eq!(Graph::cycle(5).independence_number().unwrap(), 2);
        // Petersen: 4, confirmed by the subset-scan oracle.
        let p = Graph::petersen();
        assert_eq!(oracle_independence(&p), 4);
        assert_eq!(p.independence_number().unwrap(), 4);
    }

    #[test]
    fn independence_matches_oracle_small() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            assert_eq!(g.independence_number().unwrap(), oracle_independence(&g));
        }
    }

    #[test]
    fn independence_cap() {
        let g = Graph::new(30, &[]).unwrap();
        assert!(matches!(
            g.independence_number(),
            Err(GraphError::IndependenceCapExceeded { .. })
        ));
        assert_eq!(g.independence_number_capped(30).unwrap(), 30);
    }

    #[test]
    fn diameters() {
        assert_eq!(Graph::complete(4).diameter(), Diameter::Finite(1));
        assert_eq!(Graph::cycle(5).diameter(), Diameter::Finite(2));
        assert_eq!(Graph::petersen().diameter(), Diameter::Finite(2));
        let disconnected = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(disconnected.diameter(), Diameter::Infinite);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::petersen();
        let text = g.to_edge_list();
        let h = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(g.edges(), h.edges());
        assert_eq!(g.n(), h.n());
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let err = Graph::parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
        let err = Graph::parse_edge_list("3 1\n0 x\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
    }

    #[test]
    fn square_of_cycle() {
        let g = Graph::cycle(6).square();
        for v in 0..6 {
            assert_eq!(g.degree(v), 4);
        }
    }
}

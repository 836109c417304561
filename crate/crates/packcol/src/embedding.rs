//! Plane embeddings as rotation systems, face traversal, and the polyhedral
//! fixtures used by the discharging tests.

use crate::graph::{Graph, GraphError};
use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    Graph(GraphError),
    RotationCount { expected: usize, found: usize },
    RotationMismatch { vertex: usize, message: String },
    FaceWalkBroken { message: String },
    Disconnected,
    NotPlane { faces: usize },
    Parse { line: usize, message: String },
}

impl fmt::Display for EmbeddingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbeddingError::Graph(e) => write!(f, "{e}"),
            EmbeddingError::RotationCount { expected, found } => {
                write!(f, "expected {expected} rotation lists, found {found}")
            }
            EmbeddingError::RotationMismatch { vertex, message } => {
                write!(f, "rotation at vertex {vertex}: {message}")
            }
            EmbeddingError::FaceWalkBroken { message } => write!(f, "face structure: {message}"),
            EmbeddingError::Disconnected => write!(f, "graph is disconnected"),
            EmbeddingError::NotPlane { faces } => {
                write!(f, "rotation system has genus > 0 ({faces} faces)")
            }
            EmbeddingError::Parse { line, message } => write!(f, "line {line}: {message}"),
        }
    }
}

impl std::error::Error for EmbeddingError {}

impl From<GraphError> for EmbeddingError {
    fn from(e: GraphError) -> Self {
        EmbeddingError::Graph(e)
    }
}

/// One face of an embedding, as the closed vertex walk traced by following
/// directed edges. The walk length equals the face size `d(f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<usize>,
}

impl Face {
    pub fn size(&self) -> usize {
        self.walk.len()
    }

    /// Undirected boundary edges, with multiplicity.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.walk.len();
        (0..k)
            .map(|i| {
                let (u, v) = (self.walk[i], self.walk[(i + 1) % k]);
                (u.min(v), u.max(v))
            })
            .collect()
    }
}

/// A graph together with a rotation system (cyclic neighbor order per
/// vertex). Faces are traced at construction: the directed edge `u -> v` is
/// followed by `v -> w` where `w` succeeds `u` in the rotation at `v`.
/// Immutable once built.
#[derive(Debug, Clone)]
pub struct PlaneEmbedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Face>,
    // face index on each side of every directed edge
    face_of: HashMap<(usize, usize), usize>,
}

impl PlaneEmbedding {
    /// Validates that each rotation is a cyclic order of exactly the
    /// neighbors, traces the faces, and (for connected graphs) checks
    /// Euler's formula `V - E + F = 2`.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        if rotation.len() != graph.n() {
            return Err(EmbeddingError::RotationCount {
                expected: graph.n(),
                found: rotation.len(),
            });
        }
        for v in 0..graph.n() {
            let mut sorted = rotation[v].clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                let missing = graph
                    .neighbors(v)
                    .iter()
                    .find(|u| !rotation[v].contains(u));
                let message = match missing {
                    Some(u) => format!("edge {v}-{u} missing from the cycle"),
                    None => "cycle is not a permutation of the neighbors".to_string(),
                };
                return Err(EmbeddingError::RotationMismatch { vertex: v, message });
            }
        }
        if !graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        let (faces, face_of) = trace_faces(&graph, &rotation)?;
        let e = Self { graph, rotation, faces, face_of };
        if !e.euler_holds() {
            return Err(EmbeddingError::NotPlane { faces: e.faces.len() });
        }
        Ok(e)
    }

    /// Builds the embedding from a complete face list (every directed edge
    /// used exactly once across the walks), deriving the rotation system.
    pub fn from_faces(n: usize, face_walks: &[Vec<usize>]) -> Result<Self, EmbeddingError> {
        let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        let mut edges = Vec::new();
        for walk in face_walks {
            let k = walk.len();
            for i in 0..k {
                let (u, v, w) = (walk[i], walk[(i + 1) % k], walk[(i + 2) % k]);
                if u.max(v) >= n {
                    return Err(EmbeddingError::FaceWalkBroken {
                        message: format!("vertex out of range in walk {walk:?}"),
                    });
                }
                if succ[v].insert(u, w).is_some() {
                    return Err(EmbeddingError::FaceWalkBroken {
                        message: format!("directed edge {u}->{v} used twice"),
                    });
                }
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let graph = Graph::new(n, &edges)?;
        let mut rotation = Vec::with_capacity(n);
        for v in 0..n {
            let nbrs = graph.neighbors(v);
            if nbrs.is_empty() {
                rotation.push(Vec::new());
                continue;
            }
            // rotation at v is the orbit of "u is followed by succ[v][u]"
            let mut cyc = vec![nbrs[0]];
            loop {
                let last = *cyc.last().unwrap();
                let next = *succ[v].get(&last).ok_or_else(|| EmbeddingError::FaceWalkBroken {
                    message: format!("directed edge {last}->{v} never traversed"),
                })?;
                if next == cyc[0] {
                    break;
                }
                if cyc.len() > nbrs.len() {
                    return Err(EmbeddingError::FaceWalkBroken {
                        message: format!("successor map at vertex {v} is not a single cycle"),
                    });
                }
                cyc.push(next);
            }
            if cyc.len() != nbrs.len() {
                return Err(EmbeddingError::FaceWalkBroken {
                    message: format!("successor map at vertex {v} is not a single cycle"),
                });
            }
            rotation.push(cyc);
        }
        Self::new(graph, rotation)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn euler_holds(&self) -> bool {
        let (v, e, f) = (self.graph.n() as i64, self.graph.edge_count() as i64, self.faces.len() as i64);
        v - e + f == 2
    }

    /// Index of the face lying on the side of the directed edge `u -> v`.
    pub fn face_of_directed(&self, u: usize, v: usize) -> Option<usize> {
        self.face_of.get(&(u, v)).copied()
    }

    /// Face incidences of a vertex, with multiplicity (a cut vertex can meet
    /// the same face more than once).
    pub fn faces_at_vertex(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (fi, face) in self.faces.iter().enumerate() {
            for &w in &face.walk {
                if w == v {
                    out.push(fi);
                }
            }
        }
        out
    }

    /// Number of edges shared by two distinct faces.
    pub fn shared_edge_count(&self, f1: usize, f2: usize) -> usize {
        if f1 == f2 {
            return 0;
        }
        self.faces[f1]
            .walk
            .iter()
            .zip(self.faces[f1].walk.iter().cycle().skip(1))
            .filter(|&(&u, &v)| self.face_of_directed(v, u) == Some(f2))
            .count()
    }

    /// For every undirected edge, the faces on both sides.
    pub fn edge_face_pairs(&self) -> Vec<((usize, usize), (usize, usize))> {
        self.graph
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let a = self.face_of_directed(u, v).expect("traced");
                let b = self.face_of_directed(v, u).expect("traced");
                ((u, v), (a, b))
            })
            .collect()
    }

    /// Parses the rotation text format: one line `v: a b c ...` per vertex.
    /// The graph is inferred from the rotations.
    pub fn parse_rotations(text: &str) -> Result<Self, EmbeddingError> {
        let mut rows: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((head, rest)) = line.split_once(':') else {
                return Err(EmbeddingError::Parse {
                    line: lineno,
                    message: "expected `v: a b c ...`".into(),
                });
            };
            let v: usize = head.trim().parse().map_err(|_| EmbeddingError::Parse {
                line: lineno,
                message: format!("bad vertex id `{}`", head.trim()),
            })?;
            let mut nbrs = Vec::new();
            for tok in rest.split_whitespace() {
                nbrs.push(tok.parse().map_err(|_| EmbeddingError::Parse {
                    line: lineno,
                    message: format!("bad neighbor id `{tok}`"),
                })?);
            }
            rows.push((lineno, v, nbrs));
        }
        let n = rows.iter().map(|&(_, v, _)| v + 1).max().unwrap_or(0);
        let mut rotation = vec![None; n];
        for (lineno, v, nbrs) in rows {
            if rotation[v].replace(nbrs).is_some() {
                return Err(EmbeddingError::Parse {
                    line: lineno,
                    message: format!("vertex {v} listed twice"),
                });
            }
        }
        let rotation: Vec<Vec<usize>> = rotation
            .into_iter()
            .map(|r| r.unwrap_or_default())
            .collect();
        let mut edges = Vec::new();
        for (v, row) in rotation.iter().enumerate() {
            for &u in row {
                if v < u {
                    edges.push((v, u));
                }
            }
        }
        let graph = Graph::new(n, &edges)?;
        Self::new(graph, rotation)
    }

    pub fn to_rotation_text(&self) -> String {
        let mut out = String::new();
        for (v, row) in self.rotation.iter().enumerate() {
            out.push_str(&format!("{v}:"));
            for u in row {
                out.push_str(&format!(" {u}"));
            }
            out.push('\n');
        }
        out
    }

    // Fixture embeddings.

    pub fn triangle() -> Self {
        Self::from_faces(3, &[vec![0, 1, 2], vec![2, 1, 0]]).unwrap()
    }

    pub fn tetrahedron() -> Self {
        Self::from_faces(4, &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]]).unwrap()
    }

    /// Prism over an `m`-gon: top ring `0..m`, bottom ring `m..2m`.
    pub fn prism(m: usize) -> Self {
        assert!(m >= 3);
        let mut faces = vec![
            (0..m).collect::<Vec<_>>(),
            (0..m).rev().map(|i| m + i).collect(),
        ];
        for i in 0..m {
            let j = (i + 1) % m;
            faces.push(vec![j, i, m + i, m + j]);
        }
        Self::from_faces(2 * m, &faces).unwrap()
    }

    /// Antiprism over an `m`-gon: top ring `0..m`, bottom ring `m..2m`,
    /// bottom vertex `m+i` adjacent to top `i` and `i+1`.
    pub fn antiprism(m: usize) -> Self {
        assert!(m >= 3);
        let mut faces = vec![
            (0..m).collect::<Vec<_>>(),
            (0..m).rev().map(|i| m + i).collect(),
        ];
        for i in 0..m {
            let j = (i + 1) % m;
            faces.push(vec![j, i, m + i]);
            faces.push(vec![m + i, m + j, j]);
        }
        Self::from_faces(2 * m, &faces).unwrap()
    }

    pub fn cube() -> Self {
        Self::prism(4)
    }

    pub fn octahedron() -> Self {
        Self::antiprism(3)
    }

    /// Dodecahedron: top ring `a = 0..5`, upper belt `b = 5..10`, lower belt
    /// `c = 10..15`, bottom ring `d = 15..20`.
    pub fn dodecahedron() -> Self {
        let (a, b, c, d) = (0, 5, 10, 15);
        let mut faces = vec![
            (0..5).map(|i| a + i).collect::<Vec<_>>(),
            (0..5).rev().map(|i| d + i).collect(),
        ];
        for i in 0..5 {
            let j = (i + 1) % 5;
            faces.push(vec![a + j, a + i, b + i, c + i, b + j]);
            faces.push(vec![c + i, d + i, d + j, c + j, b + j]);
        }
        Self::from_faces(20, &faces).unwrap()
    }
}

fn trace_faces(
    graph: &Graph,
    rotation: &[Vec<usize>],
) -> Result<(Vec<Face>, HashMap<(usize, usize), usize>), EmbeddingError> {
    // position of u within rotation[v], for O(1) successor lookup
    let mut pos: Vec<HashMap<usize, usize>> = vec![HashMap::new(); graph.n()];
    for v in 0..graph.n() {
        for (i, &u) in rotation[v].iter().enumerate() {
            pos[v].insert(u, i);
        }
    }
    let mut face_of = HashMap::new();
    let mut faces = Vec::new();
    for start_u in 0..graph.n() {
        for &start_v in graph.neighbors(start_u) {
            if face_of.contains_key(&(start_u, start_v)) {
                continue;
            }
            let fi = faces.len();
            let mut walk = Vec::new();
            let (mut u, mut v) = (start_u, start_v);
            loop {
                walk.push(u);
                face_of.insert((u, v), fi);
                let i = pos[v][&u];
                let w = rotation[v][(i + 1) % rotation[v].len()];
                u = v;
                v = w;
                if (u, v) == (start_u, start_v) {
                    break;
                }
                if walk.len() > 2 * graph.edge_count() {
                    return Err(EmbeddingError::FaceWalkBroken {
                        message: "face traversal did not close".into(),
                    });
                }
            }
            faces.push(Face { walk });
        }
    }
    Ok((faces, face_of))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_face_invariants(e: &PlaneEmbedding) {
        let total: usize = e.faces().iter().map(Face::size).sum();
        assert_eq!(total, 2 * e.graph().edge_count());
        assert!(e.euler_holds());
    }

    #[test]
    fn triangle_faces() {
        let e = PlaneEmbedding::triangle();
        assert_eq!(e.faces().len(), 2);
        assert!(e.faces().iter().all(|f| f.size() == 3));
        check_face_invariants(&e);
    }

    #[test]
    fn tetrahedron_faces() {
        let e = PlaneEmbedding::tetrahedron();
        assert_eq!(e.faces().len(), 4);
        assert!(e.faces().iter().all(|f| f.size() == 3));
        check_face_invariants(&e);
    }

    #[test]
    fn octahedron_faces() {
        let e = PlaneEmbedding::octahedron();
        assert_eq!(e.graph().n(), 6);
        assert_eq!(e.graph().edge_count(), 12);
        assert_eq!(e.faces().len(), 8);
        assert!(e.faces().iter().all(|f| f.size() == 3));
        check_face_invariants(&e);
    }

    #[test]
    fn cube_and_dodecahedron() {
        let c = PlaneEmbedding::cube();
        assert_eq!(c.faces().len(), 6);
        assert!(c.faces().iter().all(|f| f.size() == 4));
        check_face_invariants(&c);

        let d = PlaneEmbedding::dodecahedron();
        assert_eq!(d.graph().n(), 20);
        assert_eq!(d.graph().edge_count(), 30);
        assert_eq!(d.faces().len(), 12);
        assert!(d.faces().iter().all(|f| f.size() == 5));
        assert!((0..20).all(|v| d.graph().degree(v) == 3));
        check_face_invariants(&d);
    }

    #[test]
    fn malformed_rotation_rejected() {
        let g = Graph::cycle(3);
        // vertex 0's cycle omits neighbor 2
        let rot = vec![vec![1], vec![0, 2], vec![1, 0]];
        let err = PlaneEmbedding::new(g, rot).unwrap_err();
        assert!(matches!(err, EmbeddingError::RotationMismatch { vertex: 0, .. }));
    }

    #[test]
    fn nonplanar_rotation_rejected() {
        // K5 has no plane rotation system; any rotation fails Euler.
        let g = Graph::complete(5);
        let rot: Vec<Vec<usize>> = (0..5)
            .map(|v| (0..5).filter(|&u| u != v).collect())
            .collect();
        let err = PlaneEmbedding::new(g, rot).unwrap_err();
        assert!(matches!(err, EmbeddingError::NotPlane { .. }));
    }

    #[test]
    fn rotation_text_round_trip() {
        let e = PlaneEmbedding::octahedron();
        let text = e.to_rotation_text();
        let e2 = PlaneEmbedding::parse_rotations(&text).unwrap();
        assert_eq!(e.rotation(), e2.rotation());
        assert_eq!(e.faces().len(), e2.faces().len());
    }

    #[test]
    fn shared_edges_on_cube() {
        let e = PlaneEmbedding::cube();
        for f1 in 0..6 {
            let total: usize = (0..6).map(|f2| e.shared_edge_count(f1, f2)).sum();
            assert_eq!(total, 4);
        }
    }
}

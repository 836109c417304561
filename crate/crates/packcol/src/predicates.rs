//! Structural predicates on plane graphs of maximum degree four.
//!
//! Each rule states a property that a graph must satisfy to survive the
//! discharging audit; a violation comes with a concrete witness substructure
//! that [`verify_witness`] re-checks from scratch. Rules about cycles need
//! only the graph; rules about faces need an embedding.

use crate::embedding::PlaneEmbedding;
use crate::graph::Graph;
use std::fmt;

/// Which of the two coloring targets an audit runs against: `First` is the
/// `(1,2^10)` bound, `Second` the `(1^2,2^7)` bound. Each has its own list
/// of reducible structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    First,
    Second,
}

impl TheoremId {
    pub fn spec(&self) -> crate::color::PackingSpec {
        match self {
            TheoremId::First => crate::color::PackingSpec::new(1, 10).unwrap(),
            TheoremId::Second => crate::color::PackingSpec::new(2, 7).unwrap(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleId {
    /// Minimum degree at least three.
    MinDegreeThree,
    /// No two 3-vertices are adjacent.
    NoAdjacentThreeVertices,
    /// Every vertex of a 3-cycle has degree four.
    TriangleVerticesDegreeFour,
    /// Two 3-cycles never share an edge.
    TrianglesEdgeDisjoint,
    /// A 3-cycle shares vertices with at most one other 3-cycle.
    TriangleClusterLimit,
    /// At most one edge of a 3-cycle lies on another 3-cycle.
    TriangleSecondSharedEdge,
    /// Two 3-cycles sharing a vertex must share an edge.
    TriangleVertexShareNeedsEdge,
    /// A 3-vertex belongs to at most one 4-face.
    ThreeVertexQuadFaceLimit,
    /// A 3-face shares edges with 4-faces via at most one edge.
    TriangleFaceQuadEdgeLimit,
    /// A 3-face sharing an edge with another 3-face shares none with a 4-face.
    PairedTriangleFaceNoQuad,
    /// A 5-face is edge-adjacent to at most two 3-faces.
    FiveFaceTriangleLimit,
    /// A 5-face with a 3-vertex is not adjacent to two 3-faces sharing a vertex.
    FiveFaceThreeVertexNoTouchingPair,
    /// A 5-face with a 3-vertex is not adjacent to two vertex-disjoint 3-faces.
    FiveFaceThreeVertexNoDisjointPair,
    /// A 5-face with two 3-vertices is adjacent to no 3-face.
    FiveFaceTwoThreeVerticesNoTriangles,
}

impl RuleId {
    pub fn needs_embedding(&self) -> bool {
        use RuleId::*;
        !matches!(
            self,
            MinDegreeThree
                | NoAdjacentThreeVertices
                | TriangleVerticesDegreeFour
                | TrianglesEdgeDisjoint
                | TriangleClusterLimit
                | TriangleSecondSharedEdge
                | TriangleVertexShareNeedsEdge
        )
    }

    pub fn slug(&self) -> &'static str {
        use RuleId::*;
        match self {
            MinDegreeThree => "min-degree-3",
            NoAdjacentThreeVertices => "no-adjacent-3-vertices",
            TriangleVerticesDegreeFour => "triangle-vertices-degree-4",
            TrianglesEdgeDisjoint => "triangles-edge-disjoint",
            TriangleClusterLimit => "triangle-cluster-limit",
            TriangleSecondSharedEdge => "triangle-second-shared-edge",
            TriangleVertexShareNeedsEdge => "triangle-vertex-share-needs-edge",
            ThreeVertexQuadFaceLimit => "3-vertex-quad-face-limit",
            TriangleFaceQuadEdgeLimit => "triangle-face-quad-edge-limit",
            PairedTriangleFaceNoQuad => "paired-triangle-face-no-quad",
            FiveFaceTriangleLimit => "5-face-triangle-limit",
            FiveFaceThreeVertexNoTouchingPair => "5-face-3-vertex-no-touching-pair",
            FiveFaceThreeVertexNoDisjointPair => "5-face-3-vertex-no-disjoint-pair",
            FiveFaceTwoThreeVerticesNoTriangles => "5-face-two-3-vertices-no-triangles",
        }
    }
}

/// Rule list backing the `(1,2^10)` audit.
pub const FIRST_THEOREM_RULES: [RuleId; 11] = [
    RuleId::MinDegreeThree,
    RuleId::NoAdjacentThreeVertices,
    RuleId::TriangleVerticesDegreeFour,
    RuleId::TrianglesEdgeDisjoint,
    RuleId::TriangleClusterLimit,
    RuleId::ThreeVertexQuadFaceLimit,
    RuleId::TriangleFaceQuadEdgeLimit,
    RuleId::FiveFaceTriangleLimit,
    RuleId::FiveFaceThreeVertexNoTouchingPair,
    RuleId::FiveFaceThreeVertexNoDisjointPair,
    RuleId::FiveFaceTwoThreeVerticesNoTriangles,
];

/// Rule list backing the `(1^2,2^7)` audit.
pub const SECOND_THEOREM_RULES: [RuleId; 10] = [
    RuleId::MinDegreeThree,
    RuleId::NoAdjacentThreeVertices,
    RuleId::TriangleVerticesDegreeFour,
    RuleId::ThreeVertexQuadFaceLimit,
    RuleId::TriangleSecondSharedEdge,
    RuleId::PairedTriangleFaceNoQuad,
    RuleId::TriangleVertexShareNeedsEdge,
    RuleId::TriangleFaceQuadEdgeLimit,
    RuleId::FiveFaceThreeVertexNoDisjointPair,
    RuleId::FiveFaceTwoThreeVerticesNoTriangles,
];

pub fn rules_for(theorem: TheoremId) -> &'static [RuleId] {
    match theorem {
        TheoremId::First => &FIRST_THEOREM_RULES,
        TheoremId::Second => &SECOND_THEOREM_RULES,
    }
}

pub fn all_rules() -> Vec<RuleId> {
    let mut out: Vec<RuleId> = FIRST_THEOREM_RULES.to_vec();
    for r in SECOND_THEOREM_RULES {
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// Concrete substructure certifying a violation. Face entries are indices
/// into the embedding's face list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    pub vertices: Vec<usize>,
    pub triangles: Vec<[usize; 3]>,
    pub faces: Vec<usize>,
}

impl Witness {
    fn vertex(v: usize) -> Self {
        Witness { vertices: vec![v], ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateOutcome {
    pub rule: RuleId,
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateReport {
    pub outcomes: Vec<PredicateOutcome>,
}

impl PredicateReport {
    pub fn all_hold(&self) -> bool {
        self.outcomes.iter().all(|o| o.holds)
    }

    pub fn first_violation(&self) -> Option<&PredicateOutcome> {
        self.outcomes.iter().find(|o| !o.holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeedsEmbedding(pub RuleId);

impl fmt::Display for NeedsEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule {} needs a plane embedding", self.0.slug())
    }
}

impl std::error::Error for NeedsEmbedding {}

/// All 3-cycles of the graph, each as an ascending vertex triple.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            if v <= u {
                continue;
            }
            for &w in g.neighbors(v) {
                if w > v && g.has_edge(u, w) {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out
}

fn shared_vertices(a: &[usize; 3], b: &[usize; 3]) -> usize {
    a.iter().filter(|v| b.contains(v)).count()
}

fn shares_edge(g: &Graph, a: &[usize; 3], b: &[usize; 3]) -> bool {
    let common: Vec<usize> = a.iter().copied().filter(|v| b.contains(v)).collect();
    common.len() == 2 && g.has_edge(common[0], common[1])
}

/// Edges of triangle `t` that also lie on some other triangle.
fn shared_edges_of_triangle(t: &[usize; 3], all: &[[usize; 3]]) -> Vec<(usize, usize)> {
    let edges = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])];
    edges
        .into_iter()
        .filter(|&(u, v)| all.iter().any(|s| s != t && s.contains(&u) && s.contains(&v)))
        .collect()
}

struct FaceData<'e> {
    e: &'e PlaneEmbedding,
    /// per face: indices of edge-adjacent 3-faces, with multiplicity
    triangle_neighbors: Vec<Vec<usize>>,
    /// per face: indices of edge-adjacent 4-faces, with multiplicity
    quad_neighbors: Vec<Vec<usize>>,
}

impl<'e> FaceData<'e> {
    fn new(e: &'e PlaneEmbedding) -> Self {
        let nf = e.faces().len();
        let mut triangle_neighbors = vec![Vec::new(); nf];
        let mut quad_neighbors = vec![Vec::new(); nf];
        for (_, (a, b)) in e.edge_face_pairs() {
            if a == b {
                continue;
            }
            for (f, other) in [(a, b), (b, a)] {
                match e.faces()[other].size() {
                    3 => triangle_neighbors[f].push(other),
                    4 => quad_neighbors[f].push(other),
                    _ => {}
                }
            }
        }
        FaceData { e, triangle_neighbors, quad_neighbors }
    }

    fn three_vertices_on(&self, f: usize) -> Vec<usize> {
        self.e.faces()[f]
            .walk
            .iter()
            .copied()
            .filter(|&v| self.e.graph().degree(v) == 3)
            .collect()
    }
}

fn check_rule(
    rule: RuleId,
    g: &Graph,
    tris: &[[usize; 3]],
    fd: Option<&FaceData>,
) -> PredicateOutcome {
    let violation: Option<Witness> = match rule {
        RuleId::MinDegreeThree => (0..g.n()).find(|&v| g.degree(v) < 3).map(Witness::vertex),
        RuleId::NoAdjacentThreeVertices => g
            .edges()
            .into_iter()
            .find(|&(u, v)| g.degree(u) == 3 && g.degree(v) == 3)
            .map(|(u, v)| Witness { vertices: vec![u, v], ..Default::default() }),
        RuleId::TriangleVerticesDegreeFour => tris.iter().find_map(|t| {
            t.iter().find(|&&v| g.degree(v) != 4).map(|&v| Witness {
                vertices: vec![v],
                triangles: vec![*t],
                ..Default::default()
            })
        }),
        RuleId::TrianglesEdgeDisjoint => {
            let mut found = None;
            'outer: for (i, a) in tris.iter().enumerate() {
                for b in &tris[i + 1..] {
                    if shares_edge(g, a, b) {
                        found = Some(Witness { triangles: vec![*a, *b], ..Default::default() });
                        break 'outer;
                    }
                }
            }
            found
        }
        RuleId::TriangleClusterLimit => tris.iter().find_map(|t| {
            let sharing: Vec<[usize; 3]> = tris
                .iter()
                .filter(|s| *s != t && shared_vertices(t, s) >= 1)
                .copied()
                .collect();
            (sharing.len() >= 2).then(|| Witness {
                triangles: vec![*t, sharing[0], sharing[1]],
                ..Default::default()
            })
        }),
        RuleId::TriangleSecondSharedEdge => tris.iter().find_map(|t| {
            let shared = shared_edges_of_triangle(t, tris);
            (shared.len() >= 2).then(|| Witness {
                triangles: vec![*t],
                vertices: vec![shared[0].0, shared[0].1, shared[1].0, shared[1].1],
                ..Default::default()
            })
        }),
        RuleId::TriangleVertexShareNeedsEdge => {
            let mut found = None;
            'outer: for (i, a) in tris.iter().enumerate() {
                for b in &tris[i + 1..] {
                    if shared_vertices(a, b) == 1 {
                        found = Some(Witness { triangles: vec![*a, *b], ..Default::default() });
                        break 'outer;
                    }
                }
            }
            found
        }
        RuleId::ThreeVertexQuadFaceLimit => {
            let fd = fd.expect("embedding checked by caller");
            (0..g.n()).find_map(|v| {
                if g.degree(v) != 3 {
                    return None;
                }
                let quads: Vec<usize> = fd
                    .e
                    .faces_at_vertex(v)
                    .into_iter()
                    .filter(|&f| fd.e.faces()[f].size() == 4)
                    .collect();
                (quads.len() >= 2).then(|| Witness {
                    vertices: vec![v],
                    faces: quads,
                    ..Default::default()
                })
            })
        }
        RuleId::TriangleFaceQuadEdgeLimit => {
            let fd = fd.expect("embedding checked by caller");
            (0..fd.e.faces().len()).find_map(|f| {
                if fd.e.faces()[f].size() != 3 {
                    return None;
                }
                (fd.quad_neighbors[f].len() >= 2).then(|| Witness {
                    faces: [vec![f], fd.quad_neighbors[f][..2].to_vec()].concat(),
                    ..Default::default()
                })
            })
        }
        RuleId::PairedTriangleFaceNoQuad => {
            let fd = fd.expect("embedding checked by caller");
            (0..fd.e.faces().len()).find_map(|f| {
                if fd.e.faces()[f].size() != 3 {
                    return None;
                }
                let t = fd.triangle_neighbors[f].first();
                let q = fd.quad_neighbors[f].first();
                match (t, q) {
                    (Some(&t), Some(&q)) => {
                        Some(Witness { faces: vec![f, t, q], ..Default::default() })
                    }
                    _ => None,
                }
            })
        }
        RuleId::FiveFaceTriangleLimit => {
            let fd = fd.expect("embedding checked by caller");
            (0..fd.e.faces().len()).find_map(|f| {
                if fd.e.faces()[f].size() != 5 {
                    return None;
                }
                (fd.triangle_neighbors[f].len() >= 3).then(|| Witness {
                    faces: [vec![f], fd.triangle_neighbors[f].clone()].concat(),
                    ..Default::default()
                })
            })
        }
        RuleId::FiveFaceThreeVertexNoTouchingPair | RuleId::FiveFaceThreeVertexNoDisjointPair => {
            let fd = fd.expect("embedding checked by caller");
            let want_touching = rule == RuleId::FiveFaceThreeVertexNoTouchingPair;
            (0..fd.e.faces().len()).find_map(|f| {
                if fd.e.faces()[f].size() != 5 {
                    return None;
                }
                let threes = fd.three_vertices_on(f);
                if threes.is_empty() {
                    return None;
                }
                let mut nbrs = fd.triangle_neighbors[f].clone();
                nbrs.sort_unstable();
                nbrs.dedup();
                for (i, &a) in nbrs.iter().enumerate() {
                    for &b in &nbrs[i + 1..] {
                        let wa = &fd.e.faces()[a].walk;
                        let wb = &fd.e.faces()[b].walk;
                        let touching = wa.iter().any(|v| wb.contains(v));
                        if touching == want_touching {
                            return Some(Witness {
                                vertices: vec![threes[0]],
                                faces: vec![f, a, b],
                                ..Default::default()
                            });
                        }
                    }
                }
                None
            })
        }
        RuleId::FiveFaceTwoThreeVerticesNoTriangles => {
            let fd = fd.expect("embedding checked by caller");
            (0..fd.e.faces().len()).find_map(|f| {
                if fd.e.faces()[f].size() != 5 {
                    return None;
                }
                let mut threes = fd.three_vertices_on(f);
                threes.sort_unstable();
                threes.dedup();
                if threes.len() < 2 {
                    return None;
                }
                fd.triangle_neighbors[f].first().map(|&t| Witness {
                    vertices: threes[..2].to_vec(),
                    faces: vec![f, t],
                    ..Default::default()
                })
            })
        }
    };
    PredicateOutcome { rule, holds: violation.is_none(), witness: violation }
}

/// Evaluates the given rules. Face rules need `e`; rules are reported in the
/// order given.
pub fn structural_predicates(
    g: &Graph,
    e: Option<&PlaneEmbedding>,
    rules: &[RuleId],
) -> Result<PredicateReport, NeedsEmbedding> {
    for r in rules {
        if r.needs_embedding() && e.is_none() {
            return Err(NeedsEmbedding(*r));
        }
    }
    let tris = triangles(g);
    let fd = e.map(FaceData::new);
    Ok(PredicateReport {
        outcomes: rules
            .iter()
            .map(|&r| check_rule(r, g, &tris, fd.as_ref()))
            .collect(),
    })
}

/// Re-checks a violation witness directly against the graph/embedding,
/// independent of how the scan found it.
pub fn verify_witness(rule: RuleId, g: &Graph, e: Option<&PlaneEmbedding>, w: &Witness) -> bool {
    let is_triangle =
        |t: &[usize; 3]| g.has_edge(t[0], t[1]) && g.has_edge(t[1], t[2]) && g.has_edge(t[0], t[2]);
    let face_size = |f: usize| e.map(|e| e.faces()[f].size());
    let face_has_vertex = |f: usize, v: usize| e.is_some_and(|e| e.faces()[f].walk.contains(&v));
    let edge_adjacent = |f: usize, h: usize| e.is_some_and(|e| e.shared_edge_count(f, h) >= 1);
    match rule {
        RuleId::MinDegreeThree => w.vertices.first().is_some_and(|&v| g.degree(v) < 3),
        RuleId::NoAdjacentThreeVertices => match w.vertices.as_slice() {
            [u, v] => g.has_edge(*u, *v) && g.degree(*u) == 3 && g.degree(*v) == 3,
            _ => false,
        },
        RuleId::TriangleVerticesDegreeFour => match (w.triangles.first(), w.vertices.first()) {
            (Some(t), Some(&v)) => is_triangle(t) && t.contains(&v) && g.degree(v) != 4,
            _ => false,
        },
        RuleId::TrianglesEdgeDisjoint => match w.triangles.as_slice() {
            [a, b] => a != b && is_triangle(a) && is_triangle(b) && shares_edge(g, a, b),
            _ => false,
        },
        RuleId::TriangleClusterLimit => match w.triangles.as_slice() {
            [t, a, b] => {
                t != a
                    && t != b
                    && a != b
                    && is_triangle(t)
                    && is_triangle(a)
                    && is_triangle(b)
                    && shared_vertices(t, a) >= 1
                    && shared_vertices(t, b) >= 1
            }
            _ => false,
        },
        RuleId::TriangleSecondSharedEdge => match (w.triangles.as_slice(), w.vertices.as_slice()) {
            ([t], [a1, a2, b1, b2]) => {
                let tris_all = triangles(g);
                let tri_edge = |u: usize, v: usize| {
                    t.contains(&u)
                        && t.contains(&v)
                        && u != v
                        && tris_all.iter().any(|s| s != t && s.contains(&u) && s.contains(&v))
                };
                let e1 = (*a1.min(a2), *a1.max(a2));
                let e2 = (*b1.min(b2), *b1.max(b2));
                is_triangle(t) && e1 != e2 && tri_edge(e1.0, e1.1) && tri_edge(e2.0, e2.1)
            }
            _ => false,
        },
        RuleId::TriangleVertexShareNeedsEdge => match w.triangles.as_slice() {
            [a, b] => is_triangle(a) && is_triangle(b) && shared_vertices(a, b) == 1,
            _ => false,
        },
        RuleId::ThreeVertexQuadFaceLimit => match (w.vertices.first(), w.faces.as_slice()) {
            (Some(&v), faces) if faces.len() >= 2 => {
                g.degree(v) == 3
                    && faces
                        .iter()
                        .all(|&f| face_size(f) == Some(4) && face_has_vertex(f, v))
                    && faces[0] != faces[1]
            }
            _ => false,
        },
        RuleId::TriangleFaceQuadEdgeLimit => match w.faces.as_slice() {
            [f, q1, q2] => {
                face_size(*f) == Some(3)
                    && face_size(*q1) == Some(4)
                    && face_size(*q2) == Some(4)
                    && if q1 == q2 {
                        e.is_some_and(|e| e.shared_edge_count(*f, *q1) >= 2)
                    } else {
                        edge_adjacent(*f, *q1) && edge_adjacent(*f, *q2)
                    }
            }
            _ => false,
        },
        RuleId::PairedTriangleFaceNoQuad => match w.faces.as_slice() {
            [f, t, q] => {
                face_size(*f) == Some(3)
                    && face_size(*t) == Some(3)
                    && face_size(*q) == Some(4)
                    && edge_adjacent(*f, *t)
                    && edge_adjacent(*f, *q)
            }
            _ => false,
        },
        RuleId::FiveFaceTriangleLimit => match w.faces.as_slice() {
            [f, rest @ ..] if rest.len() >= 3 => {
                face_size(*f) == Some(5) && rest.iter().all(|&t| face_size(t) == Some(3)) && {
                    let mut sorted = rest.to_vec();
                    sorted.sort_unstable();
                    sorted.dedup();
                    let total: usize = sorted
                        .iter()
                        .map(|&t| e.map_or(0, |e| e.shared_edge_count(*f, t)))
                        .sum();
                    total >= 3
                }
            }
            _ => false,
        },
        RuleId::FiveFaceThreeVertexNoTouchingPair | RuleId::FiveFaceThreeVertexNoDisjointPair => {
            match (w.vertices.first(), w.faces.as_slice()) {
                (Some(&v), [f, a, b]) => {
                    let Some(emb) = e else { return false };
                    let touching = emb.faces()[*a]
                        .walk
                        .iter()
                        .any(|x| emb.faces()[*b].walk.contains(x));
                    face_size(*f) == Some(5)
                        && g.degree(v) == 3
                        && face_has_vertex(*f, v)
                        && a != b
                        && face_size(*a) == Some(3)
                        && face_size(*b) == Some(3)
                        && edge_adjacent(*f, *a)
                        && edge_adjacent(*f, *b)
                        && (touching == (rule == RuleId::FiveFaceThreeVertexNoTouchingPair))
                }
                _ => false,
            }
        }
        RuleId::FiveFaceTwoThreeVerticesNoTriangles => {
            match (w.vertices.as_slice(), w.faces.as_slice()) {
                ([u, v], [f, t]) => {
                    u != v
                        && g.degree(*u) == 3
                        && g.degree(*v) == 3
                        && face_size(*f) == Some(5)
                        && face_has_vertex(*f, *u)
                        && face_has_vertex(*f, *v)
                        && face_size(*t) == Some(3)
                        && edge_adjacent(*f, *t)
                }
                _ => false,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(g: &Graph, e: Option<&PlaneEmbedding>) -> PredicateReport {
        structural_predicates(g, e, &all_rules()).unwrap()
    }

    fn outcome(r: &PredicateReport, rule: RuleId) -> &PredicateOutcome {
        r.outcomes.iter().find(|o| o.rule == rule).unwrap()
    }

    #[test]
    fn c5_violates_min_degree() {
        let g = Graph::cycle(5);
        let r = structural_predicates(&g, None, &[RuleId::MinDegreeThree]).unwrap();
        let o = &r.outcomes[0];
        assert!(!o.holds);
        assert!(verify_witness(RuleId::MinDegreeThree, &g, None, o.witness.as_ref().unwrap()));
    }

    #[test]
    fn octahedron_violates_triangle_cluster_limit() {
        let e = PlaneEmbedding::octahedron();
        let r = report(e.graph(), Some(&e));
        let o = outcome(&r, RuleId::TriangleClusterLimit);
        assert!(!o.holds);
        assert!(verify_witness(
            RuleId::TriangleClusterLimit,
            e.graph(),
            Some(&e),
            o.witness.as_ref().unwrap()
        ));
    }

    #[test]
    fn face_rules_need_embedding() {
        let g = Graph::cycle(5);
        assert!(structural_predicates(&g, None, &[RuleId::FiveFaceTriangleLimit]).is_err());
    }

    #[test]
    fn cube_passes_triangle_rules_vacuously() {
        let e = PlaneEmbedding::cube();
        let r = report(e.graph(), Some(&e));
        for rule in [
            RuleId::TriangleVerticesDegreeFour,
            RuleId::TrianglesEdgeDisjoint,
            RuleId::TriangleClusterLimit,
            RuleId::TriangleSecondSharedEdge,
            RuleId::TriangleVertexShareNeedsEdge,
            RuleId::TriangleFaceQuadEdgeLimit,
            RuleId::PairedTriangleFaceNoQuad,
        ] {
            assert!(outcome(&r, rule).holds, "{rule:?}");
        }
        // the cube is 3-regular, so adjacent 3-vertices exist
        assert!(!outcome(&r, RuleId::NoAdjacentThreeVertices).holds);
    }

    #[test]
    fn every_violation_witness_verifies() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..40 {
            let e = crate::planegen::random_plane_graph(&mut rng, 11, 4, 35);
            let r = report(e.graph(), Some(&e));
            for o in &r.outcomes {
                if let Some(w) = &o.witness {
                    assert!(
                        verify_witness(o.rule, e.graph(), Some(&e), w),
                        "witness for {:?} failed on {:?}",
                        o.rule,
                        e.graph()
                    );
                }
            }
        }
    }

    #[test]
    fn bowtie_detected() {
        // two triangles glued at one vertex
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let r = structural_predicates(&g, None, &[RuleId::TriangleVertexShareNeedsEdge]).unwrap();
        assert!(!r.outcomes[0].holds);
    }

    #[test]
    fn diamond_passes_bowtie_but_fails_edge_disjoint() {
        // two triangles sharing an edge
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)]).unwrap();
        let r = structural_predicates(
            &g,
            None,
            &[RuleId::TriangleVertexShareNeedsEdge, RuleId::TrianglesEdgeDisjoint],
        )
        .unwrap();
        assert!(r.outcomes[0].holds);
        assert!(!r.outcomes[1].holds);
    }
}

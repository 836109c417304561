//! Validity checking and exact backtracking search for packing
//! `(1^j, 2^k)`-colorings.
//!
//! The search extends a partial coloring: uncolored vertices range over all
//! colors, vertices carrying the undetermined-1-color marker range over the
//! 1-colors only. A coloring is valid when every 1-class is an independent
//! set and every 2-class is 2-independent (pairwise distance at least three).

use crate::color::{Color, PackingSpec, PartialColoring, Slot, SpecError};
use crate::embedding::PlaneEmbedding;
use crate::graph::{Diameter, Graph, GraphError};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotTotal { vertex: usize },
    OneConflict { u: usize, v: usize, color: Color },
    TwoConflict { u: usize, v: usize, color: Color },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotTotal { vertex } => write!(f, "vertex {vertex} is not colored"),
            Violation::OneConflict { u, v, color } => {
                write!(f, "adjacent vertices {u} and {v} both use {color}")
            }
            Violation::TwoConflict { u, v, color } => {
                write!(f, "vertices {u} and {v} at distance <= 2 both use {color}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckResult {
    Ok,
    Violation(Violation),
}

impl CheckResult {
    pub fn is_ok(&self) -> bool {
        matches!(self, CheckResult::Ok)
    }
}

/// Checks a (partial) coloring. With `require_total`, any uncolored or
/// undetermined vertex is a violation; either way the colored portion must
/// have independent 1-classes and 2-independent 2-classes.
pub fn check_coloring(
    g: &Graph,
    spec: &PackingSpec,
    c: &PartialColoring,
    require_total: bool,
) -> Result<CheckResult, SpecError> {
    assert_eq!(c.n(), g.n(), "coloring covers every vertex");
    c.check_spec(spec)?;
    if require_total {
        for v in 0..g.n() {
            if c.get(v).color().is_none() {
                return Ok(CheckResult::Violation(Violation::NotTotal { vertex: v }));
            }
        }
    }
    for u in 0..g.n() {
        let Some(cu) = c.get(u).color() else { continue };
        match cu {
            Color::One(_) => {
                for &v in g.neighbors(u) {
                    if v > u && c.get(v).color() == Some(cu) {
                        return Ok(CheckResult::Violation(Violation::OneConflict {
                            u,
                            v,
                            color: cu,
                        }));
                    }
                }
            }
            Color::Two(_) => {
                for v in g.dist2_ball(u).expect("vertex in range") {
                    if v > u && c.get(v).color() == Some(cu) {
                        return Ok(CheckResult::Violation(Violation::TwoConflict {
                            u,
                            v,
                            color: cu,
                        }));
                    }
                }
            }
        }
    }
    Ok(CheckResult::Ok)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendError {
    Spec(SpecError),
    InvalidPartial(Violation),
}

impl fmt::Display for ExtendError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendError::Spec(e) => write!(f, "{e}"),
            ExtendError::InvalidPartial(v) => write!(f, "partial coloring is invalid: {v}"),
        }
    }
}

impl std::error::Error for ExtendError {}

impl From<SpecError> for ExtendError {
    fn from(e: SpecError) -> Self {
        ExtendError::Spec(e)
    }
}

/// Exhaustive-search statement standing in for an UNSAT proof object; the
/// instances are desk-scale, so re-verification is a rerun.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnsatCertificate {
    pub nodes_explored: u64,
}

impl fmt::Display for UnsatCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "UNSAT: exhaustive backtracking explored {} nodes without a valid coloring",
            self.nodes_explored
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Sat(PartialColoring),
    Unsat(UnsatCertificate),
}

impl Outcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, Outcome::Sat(_))
    }

    pub fn coloring(&self) -> Option<&PartialColoring> {
        match self {
            Outcome::Sat(c) => Some(c),
            Outcome::Unsat(_) => None,
        }
    }
}

/// Branching variable order for the backtracking search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VarOrder {
    /// Fewest remaining colors first, ties by smallest id.
    #[default]
    MostConstrainedFirst,
    /// Static ascending vertex id; used to re-verify UNSAT answers under a
    /// different exploration order.
    SequentialId,
}

struct SearchCtx<'g> {
    g: &'g Graph,
    spec: PackingSpec,
    ball2: Vec<Vec<usize>>,
    // forbid_count[v][color_id]: how many assigned vertices rule this color out at v
    forbid_count: Vec<Vec<u16>>,
    assignment: Vec<Slot>,
    targets: Vec<usize>,
    order: VarOrder,
    symmetry_break: bool,
    used_ones: u8,
    used_twos: u8,
    nodes: u64,
}

impl<'g> SearchCtx<'g> {
    fn color_id(&self, c: Color) -> usize {
        match c {
            Color::One(i) => i as usize,
            Color::Two(i) => self.spec.ones() as usize + i as usize,
        }
    }

    fn affected(&self, v: usize, c: Color) -> &[usize] {
        match c {
            Color::One(_) => self.g.neighbors(v),
            Color::Two(_) => &self.ball2[v],
        }
    }

    fn place(&mut self, v: usize, c: Color) {
        let id = self.color_id(c);
        let affected = match c {
            Color::One(_) => self.g.neighbors(v).to_vec(),
            Color::Two(_) => self.ball2[v].clone(),
        };
        for w in affected {
            self.forbid_count[w][id] += 1;
        }
        self.assignment[v] = Slot::Assigned(c);
    }

    fn unplace(&mut self, v: usize, c: Color, marker: bool) {
        let id = self.color_id(c);
        for i in 0..self.affected(v, c).len() {
            let w = self.affected(v, c)[i];
            self.forbid_count[w][id] -= 1;
        }
        self.assignment[v] = if marker { Slot::Undetermined1 } else { Slot::Uncolored };
    }

    fn candidates(&self, v: usize) -> Vec<Color> {
        let marker = matches!(self.assignment[v], Slot::Undetermined1);
        let mut out = Vec::new();
        let one_limit = if self.symmetry_break {
            (self.used_ones + 1).min(self.spec.ones())
        } else {
            self.spec.ones()
        };
        for i in 0..one_limit {
            if self.forbid_count[v][i as usize] == 0 {
                out.push(Color::One(i));
            }
        }
        if !marker {
            let two_limit = if self.symmetry_break {
                (self.used_twos + 1).min(self.spec.twos())
            } else {
                self.spec.twos()
            };
            for i in 0..two_limit {
                if self.forbid_count[v][self.spec.ones() as usize + i as usize] == 0 {
                    out.push(Color::Two(i));
                }
            }
        }
        out
    }

    fn pick_target(&self) -> Option<usize> {
        let open = self
            .targets
            .iter()
            .copied()
            .filter(|&v| self.assignment[v].color().is_none());
        match self.order {
            VarOrder::SequentialId => open.min(),
            VarOrder::MostConstrainedFirst => {
                let mut best: Option<(usize, usize)> = None;
                for v in open {
                    let k = self.candidates(v).len();
                    if best.is_none_or(|(bk, bv)| k < bk || (k == bk && v < bv)) {
                        best = Some((k, v));
                    }
                }
                best.map(|(_, v)| v)
            }
        }
    }

    fn dfs(&mut self) -> bool {
        self.nodes += 1;
        let Some(v) = self.pick_target() else { return true };
        let marker = matches!(self.assignment[v], Slot::Undetermined1);
        for c in self.candidates(v) {
            let (prev_ones, prev_twos) = (self.used_ones, self.used_twos);
            if self.symmetry_break {
                match c {
                    Color::One(i) if i == self.used_ones => self.used_ones += 1,
                    Color::Two(i) if i == self.used_twos => self.used_twos += 1,
                    _ => {}
                }
            }
            self.place(v, c);
            if self.dfs() {
                return true;
            }
            self.unplace(v, c, marker);
            self.used_ones = prev_ones;
            self.used_twos = prev_twos;
        }
        false
    }
}

fn run_search(
    g: &Graph,
    spec: &PackingSpec,
    partial: &PartialColoring,
    order: VarOrder,
    symmetry_break: bool,
) -> Result<Outcome, ExtendError> {
    match check_coloring(g, spec, partial, false)? {
        CheckResult::Ok => {}
        CheckResult::Violation(v) => return Err(ExtendError::InvalidPartial(v)),
    }
    let ball2: Vec<Vec<usize>> = (0..g.n())
        .map(|v| g.dist2_ball(v).expect("vertex in range"))
        .collect();
    let mut ctx = SearchCtx {
        g,
        spec: *spec,
        ball2,
        forbid_count: vec![vec![0; spec.color_count()]; g.n()],
        assignment: partial.slots().to_vec(),
        targets: (0..g.n())
            .filter(|&v| partial.get(v).color().is_none())
            .collect(),
        order,
        symmetry_break,
        used_ones: 0,
        used_twos: 0,
        nodes: 0,
    };
    // seed forbids from the fixed portion
    for v in 0..g.n() {
        if let Some(c) = partial.get(v).color() {
            let id = ctx.color_id(c);
            let affected: Vec<usize> = ctx.affected(v, c).to_vec();
            for w in affected {
                ctx.forbid_count[w][id] += 1;
            }
        }
    }
    if ctx.dfs() {
        let result = PartialColoring::from_slots(ctx.assignment.clone());
        debug_assert!(check_coloring(g, spec, &result, true)?.is_ok());
        Ok(Outcome::Sat(result))
    } else {
        Ok(Outcome::Unsat(UnsatCertificate { nodes_explored: ctx.nodes }))
    }
}

/// Extends `partial` to a total packing coloring if one exists, agreeing with
/// every concrete color and resolving each undetermined marker to some
/// 1-color. Exhaustive: `Unsat` means no extension exists.
pub fn extend(
    g: &Graph,
    spec: &PackingSpec,
    partial: &PartialColoring,
) -> Result<Outcome, ExtendError> {
    run_search(g, spec, partial, VarOrder::MostConstrainedFirst, false)
}

/// [`extend`] under an explicit variable order (SAT/UNSAT must not depend on
/// the order; the configuration verifier re-runs bad cases this way).
pub fn extend_ordered(
    g: &Graph,
    spec: &PackingSpec,
    partial: &PartialColoring,
    order: VarOrder,
) -> Result<Outcome, ExtendError> {
    run_search(g, spec, partial, order, false)
}

/// Searches for a total coloring from scratch, breaking the symmetry among
/// same-radius colors: a previously unused color class may only enter with
/// the smallest unused index of its radius.
pub fn solve(g: &Graph, spec: &PackingSpec) -> Outcome {
    run_search(
        g,
        spec,
        &PartialColoring::empty(g.n()),
        VarOrder::MostConstrainedFirst,
        true,
    )
    .expect("empty partial coloring is always valid")
}

/// Counting bound on how many vertices a spec can color: each 1-color covers
/// at most an independent set, each 2-color at most a 2-independent set
/// (an independent set of the square graph).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CapacityBound {
    pub bound: u64,
    pub n: usize,
}

impl CapacityBound {
    /// True when the bound proves no total coloring can exist.
    pub fn certifies_unsat(&self) -> bool {
        self.bound < self.n as u64
    }
}

pub fn capacity_bound(g: &Graph, spec: &PackingSpec) -> Result<CapacityBound, GraphError> {
    let alpha = g.independence_number()? as u64;
    let alpha2 = g.square().independence_number()? as u64;
    Ok(CapacityBound {
        bound: spec.ones() as u64 * alpha + spec.twos() as u64 * alpha2,
        n: g.n(),
    })
}

#[derive(Debug)]
pub struct SharpnessCertificate {
    pub graph: Graph,
    pub embedding: PlaneEmbedding,
    pub alpha: u32,
    pub diameter: u32,
    /// (spec, capacity bound, search outcome) for each certified spec
    pub unsat: Vec<(PackingSpec, CapacityBound, UnsatCertificate)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpnessExhausted;

impl fmt::Display for SharpnessExhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no 8-vertex graph with the extremal properties was found")
    }
}

impl std::error::Error for SharpnessExhausted {}

/// Searches 8-vertex graphs of maximum degree four for a planar graph with
/// independence number 2 and diameter 2, and certifies that it admits neither
/// a `(1,2^5)`- nor a `(1^2,2^3)`-coloring, by the capacity bound and by
/// exhaustive search. Eight vertices is the only interesting order: with
/// independence number 2 the bound argument needs more than 7 vertices, and
/// 4-regularity caps a diameter-2 graph at 8.
pub fn sharpness_search() -> Result<SharpnessCertificate, SharpnessExhausted> {
    let specs = [
        PackingSpec::new(1, 5).unwrap(),
        PackingSpec::new(2, 3).unwrap(),
    ];
    for g in crate::enumerate::connected_graphs(8, Some(4)) {
        if g.independence_number() != Ok(2) || g.diameter() != Diameter::Finite(2) {
            continue;
        }
        let Some(embedding) = search_plane_rotation(&g) else { continue };
        let mut unsat = Vec::new();
        for spec in specs {
            let bound = capacity_bound(&g, &spec).expect("well under the cap");
            if !bound.certifies_unsat() {
                break;
            }
            match solve(&g, &spec) {
                Outcome::Unsat(cert) => unsat.push((spec, bound, cert)),
                Outcome::Sat(_) => break,
            }
        }
        if unsat.len() == specs.len() {
            let alpha = g.independence_number().unwrap();
            return Ok(SharpnessCertificate { graph: g, embedding, alpha, diameter: 2, unsat });
        }
    }
    Err(SharpnessExhausted)
}

/// Brute-force search for a rotation system satisfying Euler's formula.
/// Only used by [`sharpness_search`] on 8-vertex graphs, where the space of
/// rotation systems is tiny; this is not a general planarity test.
fn search_plane_rotation(g: &Graph) -> Option<PlaneEmbedding> {
    let n = g.n();
    let e = g.edge_count();
    if !g.is_connected() {
        return None;
    }
    // candidate rotations per vertex: permutations of the neighbors with the
    // first neighbor pinned (cyclic orders, not linear ones)
    let mut options: Vec<Vec<Vec<usize>>> = Vec::with_capacity(n);
    for v in 0..n {
        let nbrs = g.neighbors(v).to_vec();
        if nbrs.len() <= 2 {
            options.push(vec![nbrs]);
            continue;
        }
        let mut rest = nbrs[1..].to_vec();
        let mut perms = Vec::new();
        permutations(&mut rest, 0, &mut |p| {
            let mut rot = Vec::with_capacity(nbrs.len());
            rot.push(nbrs[0]);
            rot.extend_from_slice(p);
            perms.push(rot);
        });
        options.push(perms);
    }

    // directed edge ids: eid(u, i) = arc from u along its i-th neighbor
    let mut base = vec![0usize; n + 1];
    for v in 0..n {
        base[v + 1] = base[v] + g.degree(v);
    }
    let arc_index = |u: usize, v: usize| -> usize {
        base[u] + g.neighbors(u).binary_search(&v).expect("edge exists")
    };

    let mut choice = vec![0usize; n];
    loop {
        // next[a]: successor arc in the face traversal for this candidate
        let mut next = vec![0usize; 2 * e];
        for v in 0..n {
            let rot = &options[v][choice[v]];
            let d = rot.len();
            for i in 0..d {
                let u = rot[i];
                let w = rot[(i + 1) % d];
                next[arc_index(u, v)] = arc_index(v, w);
            }
        }
        let mut seen = vec![false; 2 * e];
        let mut faces = 0i64;
        for start in 0..2 * e {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                a = next[a];
            }
        }
        if n as i64 - e as i64 + faces == 2 {
            let rotation: Vec<Vec<usize>> =
                (0..n).map(|v| options[v][choice[v]].clone()).collect();
            return Some(PlaneEmbedding::new(g.clone(), rotation).expect("verified by Euler"));
        }
        // advance the mixed-radix counter
        let mut v = 0;
        loop {
            if v == n {
                return None;
            }
            choice[v] += 1;
            if choice[v] < options[v].len() {
                break;
            }
            choice[v] = 0;
            v += 1;
        }
    }
}

fn permutations(items: &mut Vec<usize>, k: usize, emit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        emit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, emit);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(j: u8, k: u8) -> PackingSpec {
        PackingSpec::new(j, k).unwrap()
    }

    #[test]
    fn check_accepts_valid_c5_coloring() {
        // C5 colored (1_a, 2_1, 1_a, 2_2, 2_3): vertices 0 and 2 are
        // non-adjacent, the three 2-colors are pairwise distinct.
        let g = Graph::cycle(5);
        let c = PartialColoring::from_slots(vec![
            Slot::Assigned(Color::One(0)),
            Slot::Assigned(Color::Two(0)),
            Slot::Assigned(Color::One(0)),
            Slot::Assigned(Color::Two(1)),
            Slot::Assigned(Color::Two(2)),
        ]);
        assert!(check_coloring(&g, &spec(1, 3), &c, true).unwrap().is_ok());
    }

    #[test]
    fn check_reports_conflicts() {
        let g = Graph::path(3);
        let mut c = PartialColoring::empty(3);
        c.set(0, Slot::Assigned(Color::One(0)));
        c.set(1, Slot::Assigned(Color::One(0)));
        let r = check_coloring(&g, &spec(1, 1), &c, false).unwrap();
        assert_eq!(
            r,
            CheckResult::Violation(Violation::OneConflict { u: 0, v: 1, color: Color::One(0) })
        );

        let mut c = PartialColoring::empty(3);
        c.set(0, Slot::Assigned(Color::Two(0)));
        c.set(2, Slot::Assigned(Color::Two(0)));
        let r = check_coloring(&g, &spec(1, 1), &c, false).unwrap();
        assert_eq!(
            r,
            CheckResult::Violation(Violation::TwoConflict { u: 0, v: 2, color: Color::Two(0) })
        );
    }

    #[test]
    fn check_rejects_out_of_spec_colors() {
        let g = Graph::path(2);
        let mut c = PartialColoring::empty(2);
        c.set(0, Slot::Assigned(Color::Two(5)));
        assert!(check_coloring(&g, &spec(1, 2), &c, false).is_err());
    }

    #[test]
    fn marker_resolves_to_only_choice() {
        let g = Graph::new(1, &[]).unwrap();
        let mut c = PartialColoring::empty(1);
        c.set(0, Slot::Undetermined1);
        let out = extend(&g, &spec(1, 0), &c).unwrap();
        let col = out.coloring().unwrap();
        assert_eq!(col.get(0), Slot::Assigned(Color::One(0)));
    }

    #[test]
    fn k4_simple_solve() {
        let out = solve(&Graph::complete(4), &spec(1, 3));
        assert!(out.is_sat());
    }

    #[test]
    fn c5_needs_three_two_colors() {
        // alpha(C5) = 2 and diameter 2, so one 1-color plus two 2-colors
        // covers at most 2*1 + 1*2 = 4 < 5 vertices.
        let g = Graph::cycle(5);
        assert!(!solve(&g, &spec(1, 2)).is_sat());
        assert!(solve(&g, &spec(1, 3)).is_sat());
        let b = capacity_bound(&g, &spec(1, 2)).unwrap();
        assert_eq!(b.bound, 4);
        assert!(b.certifies_unsat());
    }

    #[test]
    fn petersen_results() {
        let p = Graph::petersen();
        assert!(solve(&p, &spec(1, 6)).is_sat());
        assert!(!solve(&p, &spec(1, 5)).is_sat());
        assert!(!solve(&p, &spec(2, 2)).is_sat());
    }

    #[test]
    fn soundness_returned_colorings_check_out() {
        let graphs = [Graph::petersen(), Graph::cycle(7), Graph::complete(4)];
        for g in graphs {
            if let Outcome::Sat(c) = solve(&g, &spec(2, 4)) {
                assert!(check_coloring(&g, &spec(2, 4), &c, true).unwrap().is_ok());
            }
        }
    }

    #[test]
    fn marker_equivalence_single_vertex() {
        // extend succeeds on a marked vertex iff it succeeds on at least one
        // concrete 1-color variant
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let sp = spec(2, 2);
        for _ in 0..60 {
            let n = rng.gen_range(3..8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let v = rng.gen_range(0..n);
            let mut partial = PartialColoring::empty(n);
            partial.set(v, Slot::Undetermined1);
            let marked = extend(&g, &sp, &partial).unwrap().is_sat();
            let mut any = false;
            for i in 0..2 {
                let mut p = PartialColoring::empty(n);
                p.set(v, Slot::Assigned(Color::One(i)));
                any |= extend(&g, &sp, &p).unwrap().is_sat();
            }
            assert_eq!(marked, any);
        }
    }

    #[test]
    fn monotonicity_in_spec() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let n = rng.gen_range(3..8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let (j, k) = (rng.gen_range(1..3), rng.gen_range(0..3));
            if solve(&g, &spec(j, k)).is_sat() {
                assert!(solve(&g, &spec(j, k + 1)).is_sat());
                assert!(solve(&g, &spec(j + 1, k)).is_sat());
            }
        }
    }

    #[test]
    fn color_permutation_invariance() {
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let sp = spec(2, 3);
        for _ in 0..40 {
            let n = rng.gen_range(4..8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let mut partial = PartialColoring::empty(n);
            for v in 0..n / 2 {
                if rng.gen_bool(0.6) {
                    let c = if rng.gen_bool(0.4) {
                        Color::One(rng.gen_range(0..2))
                    } else {
                        Color::Two(rng.gen_range(0..3))
                    };
                    partial.set(v, Slot::Assigned(c));
                }
            }
            if check_coloring(&g, &sp, &partial, false).unwrap() != CheckResult::Ok {
                continue;
            }
            let mut twos: Vec<u8> = (0..3).collect();
            twos.shuffle(&mut rng);
            let mut permuted = PartialColoring::empty(n);
            for v in 0..n {
                let s = match partial.get(v) {
                    Slot::Assigned(Color::Two(i)) => Slot::Assigned(Color::Two(twos[i as usize])),
                    Slot::Assigned(Color::One(i)) => Slot::Assigned(Color::One(1 - i)),
                    s => s,
                };
                permuted.set(v, s);
            }
            assert_eq!(
                extend(&g, &sp, &partial).unwrap().is_sat(),
                extend(&g, &sp, &permuted).unwrap().is_sat()
            );
        }
    }

    #[test]
    fn unsat_stable_across_orders() {
        let p = Graph::petersen();
        let sp = spec(1, 5);
        let a = extend_ordered(&p, &sp, &PartialColoring::empty(10), VarOrder::MostConstrainedFirst)
            .unwrap();
        let b = extend_ordered(&p, &sp, &PartialColoring::empty(10), VarOrder::SequentialId)
            .unwrap();
        assert!(!a.is_sat() && !b.is_sat());
    }

    #[test]
    fn capacity_bound_on_k1() {
        let g = Graph::new(1, &[]).unwrap();
        let b = capacity_bound(&g, &spec(1, 0)).unwrap();
        assert_eq!(b.bound, 1);
        assert!(!b.certifies_unsat());
    }

    #[test]
    fn octahedron_has_plane_rotation() {
        let e = PlaneEmbedding::octahedron();
        let found = search_plane_rotation(e.graph()).expect("octahedron is planar");
        assert!(found.euler_holds());
    }

    #[test]
    fn k5_has_no_plane_rotation() {
        assert!(search_plane_rotation(&Graph::complete(5)).is_none());
    }
}

//! Catalogs of boundary-claw pre-colorings under the `(1^2, 2^7)` spec.
//!
//! The boundary of each built-in configuration decomposes into stars: small
//! claws (a center with two leaves) and big claws (a center with three
//! leaves). Leaves are pendant in the configuration fragments, so two facts
//! shape the catalogs:
//!
//! * a leaf's 1-color constrains nothing outside its own claw, and sits at
//!   distance at least two from every uncolored vertex - its identity is
//!   immaterial and is canonicalized to `1_a`;
//! * a center whose leaves are all 2-colored may always be recolored to an
//!   available 1-color in the final coloring, so the catalog stores the
//!   undetermined-1-color marker there and forgets the original color.
//!
//! Within a claw the center is adjacent to each leaf and leaves are pairwise
//! at distance two, so all 2-colors in a claw are pairwise distinct and a
//! 1-color on the center excludes that 1-color from the leaves.
//!
//! Small-claw types (84 entries): `T1` marker center with two 2-colors
//! (C(7,2) = 21); `T2` 1-colored center, the other 1-color and one 2-color
//! on the leaves, both center identities (2*7 = 14); `T3` 2-colored center
//! with a canonical 1-color leaf and a distinct 2-color leaf, ordered
//! (7*6 = 42); `T4` 2-colored center with both leaves 1-colored,
//! canonically `1_a, 1_b` (7). Big-claw types (119): `T1` marker center
//! with three 2-colors (C(7,3) = 35); `T2` 1-colored center, the other
//! 1-color and an unordered pair of 2-colors on the leaves (2*C(7,2) = 42);
//! `T3` 2-colored center, two canonical `1_a` leaves and a distinct 2-color
//! leaf, ordered (7*6 = 42).
//!
//! Every other internally conflict-free claw coloring reduces into the
//! catalog ([`reduce_primed`]): extendability of the reduced entry implies
//! extendability of the original, because the moves only forget a center
//! color, swap immaterial leaf identities, or strengthen a leaf from a
//! 1-color to a fresh 2-color.

use crate::color::{Color, PackingSpec, Slot};
use std::fmt;

/// The one spec the catalogs are defined for.
pub fn claw_spec() -> PackingSpec {
    PackingSpec::new(2, 7).unwrap()
}

const TWOS: u8 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClawKind {
    Small,
    Big,
}

impl ClawKind {
    pub fn leaf_count(&self) -> usize {
        match self {
            ClawKind::Small => 2,
            ClawKind::Big => 3,
        }
    }

    pub fn word(&self) -> &'static str {
        match self {
            ClawKind::Small => "small",
            ClawKind::Big => "big",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClawType {
    T1,
    T2,
    T3,
    T4,
}

impl ClawType {
    pub fn number(&self) -> u8 {
        match self {
            ClawType::T1 => 1,
            ClawType::T2 => 2,
            ClawType::T3 => 3,
            ClawType::T4 => 4,
        }
    }
}

/// One colored claw: the center may carry the undetermined-1-color marker,
/// leaves always carry concrete colors and are kept sorted (leaves are
/// interchangeable in the configurations).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClawColoring {
    pub kind: ClawKind,
    pub center: Slot,
    pub leaves: Vec<Color>,
    pub type_tag: ClawType,
}

impl ClawColoring {
    pub fn new(kind: ClawKind, center: Slot, mut leaves: Vec<Color>, type_tag: ClawType) -> Self {
        assert_eq!(leaves.len(), kind.leaf_count());
        assert!(!matches!(center, Slot::Uncolored));
        leaves.sort();
        ClawColoring { kind, center, leaves, type_tag }
    }

    /// Center-first color codes in the integer encoding.
    pub fn codes(&self, spec: &PackingSpec) -> Vec<i32> {
        let mut out = vec![self.center.code(spec)];
        out.extend(self.leaves.iter().map(|c| Slot::Assigned(*c).code(spec)));
        out
    }

    /// Swaps the two 1-colors everywhere in the claw.
    pub fn swap_ones(&self) -> ClawColoring {
        let flip = |c: Color| match c {
            Color::One(i) => Color::One(1 - i),
            two => two,
        };
        let center = match self.center {
            Slot::Assigned(c) => Slot::Assigned(flip(c)),
            s => s,
        };
        ClawColoring::new(
            self.kind,
            center,
            self.leaves.iter().map(|&c| flip(c)).collect(),
            self.type_tag,
        )
    }

    /// Conflict-freeness within the claw: center adjacent to leaves, leaves
    /// pairwise at distance two. The marker joins no constraint.
    pub fn is_internally_valid(&self) -> bool {
        for (i, &a) in self.leaves.iter().enumerate() {
            for &b in &self.leaves[i + 1..] {
                if a == b && a.is_two() {
                    return false;
                }
            }
        }
        if let Slot::Assigned(c) = self.center {
            for &l in &self.leaves {
                if l == c {
                    return false;
                }
            }
        }
        true
    }

    /// Dump line: `kind type center leaf1 leaf2 [leaf3]`.
    pub fn dump_line(&self, spec: &PackingSpec) -> String {
        let codes: Vec<String> = self.codes(spec).iter().map(i32::to_string).collect();
        format!("{} {} {}", self.kind.word(), self.type_tag.number(), codes.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WrongSpec(pub PackingSpec);

impl fmt::Display for WrongSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "claw catalogs are defined for (1^2,2^7), got {}", self.0)
    }
}

impl std::error::Error for WrongSpec {}

fn require_claw_spec(spec: &PackingSpec) -> Result<(), WrongSpec> {
    if *spec == claw_spec() {
        Ok(())
    } else {
        Err(WrongSpec(*spec))
    }
}

/// The 84 small-claw pre-colorings, grouped T1 (21), T2 (14), T3 (42),
/// T4 (7), in deterministic order.
pub fn small_claw_catalog(spec: &PackingSpec) -> Result<Vec<ClawColoring>, WrongSpec> {
    require_claw_spec(spec)?;
    let mut out = Vec::with_capacity(84);
    for p in 0..TWOS {
        for q in p + 1..TWOS {
            out.push(ClawColoring::new(
                ClawKind::Small,
                Slot::Undetermined1,
                vec![Color::Two(p), Color::Two(q)],
                ClawType::T1,
            ));
        }
    }
    for x in 0..2 {
        for i in 0..TWOS {
            out.push(ClawColoring::new(
                ClawKind::Small,
                Slot::Assigned(Color::One(x)),
                vec![Color::One(1 - x), Color::Two(i)],
                ClawType::T2,
            ));
        }
    }
    for c in 0..TWOS {
        for l in 0..TWOS {
            if l != c {
                out.push(ClawColoring::new(
                    ClawKind::Small,
                    Slot::Assigned(Color::Two(c)),
                    vec![Color::One(0), Color::Two(l)],
                    ClawType::T3,
                ));
            }
        }
    }
    for c in 0..TWOS {
        out.push(ClawColoring::new(
            ClawKind::Small,
            Slot::Assigned(Color::Two(c)),
            vec![Color::One(0), Color::One(1)],
            ClawType::T4,
        ));
    }
    Ok(out)
}

/// The 119 big-claw pre-colorings, grouped T1 (35), T2 (42), T3 (42).
pub fn big_claw_catalog(spec: &PackingSpec) -> Result<Vec<ClawColoring>, WrongSpec> {
    require_claw_spec(spec)?;
    let mut out = Vec::with_capacity(119);
    for p in 0..TWOS {
        for q in p + 1..TWOS {
            for r in q + 1..TWOS {
                out.push(ClawColoring::new(
                    ClawKind::Big,
                    Slot::Undetermined1,
                    vec![Color::Two(p), Color::Two(q), Color::Two(r)],
                    ClawType::T1,
                ));
            }
        }
    }
    for x in 0..2 {
        for p in 0..TWOS {
            for q in p + 1..TWOS {
                out.push(ClawColoring::new(
                    ClawKind::Big,
                    Slot::Assigned(Color::One(x)),
                    vec![Color::One(1 - x), Color::Two(p), Color::Two(q)],
                    ClawType::T2,
                ));
            }
        }
    }
    for c in 0..TWOS {
        for l in 0..TWOS {
            if l != c {
                out.push(ClawColoring::new(
                    ClawKind::Big,
                    Slot::Assigned(Color::Two(c)),
                    vec![Color::One(0), Color::One(0), Color::Two(l)],
                    ClawType::T3,
                ));
            }
        }
    }
    Ok(out)
}

pub fn catalog_for(kind: ClawKind, spec: &PackingSpec) -> Result<Vec<ClawColoring>, WrongSpec> {
    match kind {
        ClawKind::Small => small_claw_catalog(spec),
        ClawKind::Big => big_claw_catalog(spec),
    }
}

/// Per-type entry counts in type order.
pub fn type_counts(catalog: &[ClawColoring]) -> Vec<(ClawType, usize)> {
    let mut counts: Vec<(ClawType, usize)> = Vec::new();
    for e in catalog {
        match counts.iter_mut().find(|(t, _)| *t == e.type_tag) {
            Some((_, c)) => *c += 1,
            None => counts.push((e.type_tag, 1)),
        }
    }
    counts
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReduceError {
    AlreadyCanonical,
    InternalConflict,
    NotReducible,
}

impl fmt::Display for ReduceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReduceError::AlreadyCanonical => write!(f, "coloring is already a catalog entry"),
            ReduceError::InternalConflict => write!(f, "coloring conflicts within the claw"),
            ReduceError::NotReducible => write!(f, "no reduction rule applies"),
        }
    }
}

impl std::error::Error for ReduceError {}

fn in_catalog(c: &ClawColoring) -> bool {
    let catalog = catalog_for(c.kind, &claw_spec()).unwrap();
    catalog.iter().any(|e| e.center == c.center && e.leaves == c.leaves)
}

/// Smallest 2-color index avoiding the given ones.
fn fresh_two(avoid: &[u8]) -> Color {
    Color::Two((0..TWOS).find(|i| !avoid.contains(i)).expect("seven 2-colors, few exclusions"))
}

/// Maps an internally conflict-free coloring outside the catalog to a
/// catalog entry whose extendability implies the original's. The moves:
/// forget the center color behind the marker when all leaves are 2-colored;
/// replace surplus 1-colored leaves by fresh 2-colors; canonicalize leaf
/// 1-identities; recolor a 2-colored big-claw center to the free 1-color
/// when exactly one leaf holds a 1-color.
pub fn reduce_primed(c: &ClawColoring) -> Result<ClawColoring, ReduceError> {
    if !c.is_internally_valid() {
        return Err(ReduceError::InternalConflict);
    }
    if in_catalog(c) {
        return Err(ReduceError::AlreadyCanonical);
    }
    let one_leaves: Vec<u8> = c
        .leaves
        .iter()
        .filter_map(|l| match l {
            Color::One(i) => Some(*i),
            _ => None,
        })
        .collect();
    let two_leaves: Vec<u8> = c
        .leaves
        .iter()
        .filter_map(|l| match l {
            Color::Two(i) => Some(*i),
            _ => None,
        })
        .collect();

    if one_leaves.is_empty() {
        // any center over all-2 leaves forgets its color behind the marker
        let leaves = c.leaves.clone();
        return Ok(ClawColoring::new(c.kind, Slot::Undetermined1, leaves, ClawType::T1));
    }

    match c.center {
        // markers appear only on all-2-leaf claws
        Slot::Uncolored | Slot::Undetermined1 => Err(ReduceError::NotReducible),
        Slot::Assigned(Color::One(x)) => {
            // keep one leaf on the other 1-color, move the rest to fresh
            // 2-colors
            let y = 1 - x;
            let mut leaves = vec![Color::One(y)];
            let mut used = two_leaves.clone();
            for &t in &two_leaves {
                leaves.push(Color::Two(t));
            }
            while leaves.len() < c.kind.leaf_count() {
                let f = fresh_two(&used);
                if let Color::Two(i) = f {
                    used.push(i);
                }
                leaves.push(f);
            }
            Ok(ClawColoring::new(c.kind, c.center, leaves, ClawType::T2))
        }
        Slot::Assigned(Color::Two(center)) => match c.kind {
            ClawKind::Small => {
                if one_leaves.len() == 1 {
                    // leaf identity is immaterial: canonicalize to 1_a
                    Ok(ClawColoring::new(
                        c.kind,
                        c.center,
                        vec![Color::One(0), Color::Two(two_leaves[0])],
                        ClawType::T3,
                    ))
                } else {
                    Ok(ClawColoring::new(
                        c.kind,
                        c.center,
                        vec![Color::One(0), Color::One(1)],
                        ClawType::T4,
                    ))
                }
            }
            ClawKind::Big => match one_leaves.len() {
                1 => {
                    // recolor the center to the 1-color the leaves leave free
                    let x = 1 - one_leaves[0];
                    Ok(ClawColoring::new(
                        c.kind,
                        Slot::Assigned(Color::One(x)),
                        vec![
                            Color::One(one_leaves[0]),
                            Color::Two(two_leaves[0]),
                            Color::Two(two_leaves[1]),
                        ],
                        ClawType::T2,
                    ))
                }
                2 => Ok(ClawColoring::new(
                    c.kind,
                    c.center,
                    vec![Color::One(0), Color::One(0), Color::Two(two_leaves[0])],
                    ClawType::T3,
                )),
                _ => {
                    let l = fresh_two(&[center]);
                    Ok(ClawColoring::new(
                        c.kind,
                        c.center,
                        vec![Color::One(0), Color::One(0), l],
                        ClawType::T3,
                    ))
                }
            },
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes_and_type_counts() {
        let spec = claw_spec();
        let small = small_claw_catalog(&spec).unwrap();
        assert_eq!(small.len(), 84);
        assert_eq!(
            type_counts(&small),
            vec![(ClawType::T1, 21), (ClawType::T2, 14), (ClawType::T3, 42), (ClawType::T4, 7)]
        );
        let big = big_claw_catalog(&spec).unwrap();
        assert_eq!(big.len(), 119);
        assert_eq!(
            type_counts(&big),
            vec![(ClawType::T1, 35), (ClawType::T2, 42), (ClawType::T3, 42)]
        );
    }

    #[test]
    fn wrong_spec_rejected() {
        let spec = PackingSpec::new(1, 10).unwrap();
        assert!(small_claw_catalog(&spec).is_err());
        assert!(big_claw_catalog(&spec).is_err());
    }

    #[test]
    fn entries_are_internally_valid_and_distinct() {
        let spec = claw_spec();
        for catalog in [small_claw_catalog(&spec).unwrap(), big_claw_catalog(&spec).unwrap()] {
            for e in &catalog {
                assert!(e.is_internally_valid());
            }
            let mut seen = std::collections::HashSet::new();
            for e in &catalog {
                assert!(seen.insert((e.center, e.leaves.clone())), "duplicate {e:?}");
            }
        }
    }

    #[test]
    fn reduce_rejects_catalog_entries() {
        let spec = claw_spec();
        for e in small_claw_catalog(&spec).unwrap() {
            assert_eq!(reduce_primed(&e), Err(ReduceError::AlreadyCanonical));
        }
    }

    #[test]
    fn primed_center_reduces_to_marker() {
        // concrete 1-color center over two 2-colored leaves
        let c = ClawColoring::new(
            ClawKind::Small,
            Slot::Assigned(Color::One(0)),
            vec![Color::Two(0), Color::Two(1)],
            ClawType::T1,
        );
        let r = reduce_primed(&c).unwrap();
        assert_eq!(r.center, Slot::Undetermined1);
        assert_eq!(r.leaves, vec![Color::Two(0), Color::Two(1)]);
        assert_eq!(r.type_tag, ClawType::T1);
    }

    #[test]
    fn alternate_leaf_identity_reduces_to_t3() {
        let c = ClawColoring::new(
            ClawKind::Big,
            Slot::Assigned(Color::Two(2)),
            vec![Color::One(1), Color::One(1), Color::Two(4)],
            ClawType::T3,
        );
        let r = reduce_primed(&c).unwrap();
        assert_eq!(r.leaves, vec![Color::One(0), Color::One(0), Color::Two(4)]);
        assert_eq!(r.center, Slot::Assigned(Color::Two(2)));
    }

    #[test]
    fn internal_conflicts_rejected() {
        let c = ClawColoring::new(
            ClawKind::Small,
            Slot::Assigned(Color::Two(1)),
            vec![Color::Two(1), Color::Two(3)],
            ClawType::T1,
        );
        assert_eq!(reduce_primed(&c), Err(ReduceError::InternalConflict));
    }

    /// Every internally conflict-free concrete claw coloring either sits in
    /// the catalog, matches a catalog entry after marker instantiation, or
    /// reduces into the catalog.
    #[test]
    fn raw_colorings_are_covered() {
        let spec = claw_spec();
        let colors: Vec<Color> = spec.colors().collect();
        for kind in [ClawKind::Small, ClawKind::Big] {
            let catalog = catalog_for(kind, &spec).unwrap();
            let k = kind.leaf_count();
            let mut idx = vec![0usize; k + 1];
            let mut total = 0u32;
            let mut covered = 0u32;
            loop {
                let center = colors[idx[0]];
                let leaves: Vec<Color> = (0..k).map(|i| colors[idx[i + 1]]).collect();
                let c = ClawColoring::new(kind, Slot::Assigned(center), leaves, ClawType::T1);
                if c.is_internally_valid() {
                    total += 1;
                    let ok = match reduce_primed(&c) {
                        Err(ReduceError::AlreadyCanonical) => true,
                        Ok(r) => catalog
                            .iter()
                            .any(|e| e.center == r.center && e.leaves == r.leaves),
                        Err(_) => false,
                    };
                    if ok {
                        covered += 1;
                    }
                }
                // mixed-radix increment over all assignments
                let mut d = 0;
                loop {
                    idx[d] += 1;
                    if idx[d] < colors.len() {
                        break;
                    }
                    idx[d] = 0;
                    d += 1;
                    if d > k {
                        break;
                    }
                }
                if d > k {
                    break;
                }
            }
            assert_eq!(total, covered, "{} claw colorings escaped the catalog", kind.word());
            assert!(total > 0);
        }
    }

    #[test]
    fn dump_lines_use_integer_encoding() {
        let spec = claw_spec();
        let small = small_claw_catalog(&spec).unwrap();
        assert_eq!(small[0].dump_line(&spec), "small 1 -1 3 4");
        let big = big_claw_catalog(&spec).unwrap();
        assert_eq!(big[0].dump_line(&spec), "big 1 -1 3 4 5");
    }
}

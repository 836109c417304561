//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Graphs on up to 11 vertices are encoded as upper-triangular edge
//! bitmasks: the pair `(i, j)` with `i < j` sits at bit `j(j-1)/2 + i`, so
//! appending a vertex appends a contiguous block of bits. The canonical code
//! of a graph is the smallest bitmask over all relabelings compatible with an
//! iterated-degree (1-WL) partition; equal codes mean equal labeled graphs,
//! so the code is a complete isomorphism invariant.

use crate::graph::Graph;
use std::collections::BTreeSet;

const MAX_N: usize = 11;

fn pair_bit(i: usize, j: usize) -> u64 {
    debug_assert!(i < j);
    1u64 << (j * (j - 1) / 2 + i)
}

/// Decodes a bitmask into adjacency rows.
fn decode(n: usize, code: u64) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for j in 0..n {
        for i in 0..j {
            if code & pair_bit(i, j) != 0 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    adj
}

fn degrees(n: usize, adj: &[Vec<bool>]) -> Vec<usize> {
    (0..n).map(|v| (0..n).filter(|&u| adj[v][u]).count()).collect()
}

/// Iterated degree refinement; returns one class id per vertex, classes
/// numbered by sorted signature so isomorphic graphs get matching ids.
fn wl_classes(n: usize, adj: &[Vec<bool>]) -> Vec<usize> {
    let mut class: Vec<u64> = degrees(n, adj).iter().map(|&d| d as u64).collect();
    for _ in 0..n {
        let mut sigs: Vec<(u64, Vec<u64>)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<u64> = (0..n).filter(|&u| adj[v][u]).map(|u| class[u]).collect();
                nbr.sort_unstable();
                (class[v], nbr)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u64> = sigs
            .drain(..)
            .map(|s| sorted.binary_search(&s).unwrap() as u64)
            .collect();
        if next == class {
            break;
        }
        class = next;
    }
    class.into_iter().map(|c| c as usize).collect()
}

/// Smallest edge bitmask over relabelings that list the WL classes in
/// non-decreasing order. Branch and bound on the incrementally determined
/// bit columns.
pub fn canonical_code(n: usize, adj: &[Vec<bool>]) -> u64 {
    assert!(n <= MAX_N);
    if n <= 1 {
        return 0;
    }
    let class = wl_classes(n, adj);

    struct Ctx<'a> {
        n: usize,
        adj: &'a [Vec<bool>],
        class: &'a [usize],
        perm: Vec<usize>,
        used: Vec<bool>,
        best: u64,
        have_best: bool,
    }

    fn rec(ctx: &mut Ctx, code_so_far: u64, tight: bool) {
        let d = ctx.perm.len();
        if d == ctx.n {
            if !ctx.have_best || code_so_far < ctx.best {
                ctx.best = code_so_far;
                ctx.have_best = true;
            }
            return;
        }
        // positions must list WL classes in non-decreasing order
        let min_class = ctx
            .perm
            .last()
            .map(|&v| ctx.class[v])
            .unwrap_or(0);
        let allowed_class = (0..ctx.n)
            .filter(|&v| !ctx.used[v] && ctx.class[v] >= min_class)
            .map(|v| ctx.class[v])
            .min();
        let Some(allowed_class) = allowed_class else { return };
        for v in 0..ctx.n {
            if ctx.used[v] || ctx.class[v] != allowed_class {
                continue;
            }
            let mut col = 0u64;
            for (i, &u) in ctx.perm.iter().enumerate() {
                if ctx.adj[u][v] {
                    col |= pair_bit(i, d);
                }
            }
            let code = code_so_far | col;
            // compare the bits determined so far against the incumbent
            let mask = (1u64 << (d * (d + 1) / 2)) - 1;
            let next_tight = if ctx.have_best && tight {
                match (code & mask).cmp(&(ctx.best & mask)) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Equal => true,
                    std::cmp::Ordering::Less => false,
                }
            } else {
                tight && ctx.have_best
            };
            ctx.perm.push(v);
            ctx.used[v] = true;
            rec(ctx, code, next_tight);
            ctx.perm.pop();
            ctx.used[v] = false;
        }
    }

    let mut ctx = Ctx {
        n,
        adj,
        class: &class,
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        best: u64::MAX,
        have_best: false,
    };
    rec(&mut ctx, 0, true);
    ctx.best
}

pub fn canonical_code_of(g: &Graph) -> u64 {
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    canonical_code(n, &adj)
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if code & pair_bit(i, j) != 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("codes are simple graphs")
}

/// Every graph on exactly `n` vertices up to isomorphism (optionally with a
/// maximum-degree cap), by augmenting the `n-1` level with one vertex per
/// neighborhood subset and deduplicating canonical codes. Deterministic
/// output order (ascending code).
pub fn all_graphs(n: usize, max_degree: Option<usize>) -> Vec<Graph> {
    assert!((1..=MAX_N).contains(&n));
    let mut level: Vec<u64> = vec![0]; // the single graph on 1 vertex
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let adj = decode(m - 1, code);
            let degs = degrees(m - 1, &adj);
            for nb in 0u32..(1 << (m - 1)) {
                let new_deg = nb.count_ones() as usize;
                if let Some(cap) = max_degree {
                    if new_deg > cap {
                        continue;
                    }
                    if (0..m - 1).any(|v| nb >> v & 1 == 1 && degs[v] + 1 > cap) {
                        continue;
                    }
                }
                let mut bigger = decode(m, code);
                for v in 0..m - 1 {
                    if nb >> v & 1 == 1 {
                        bigger[v][m - 1] = true;
                        bigger[m - 1][v] = true;
                    }
                }
                next.insert(canonical_code(m, &bigger));
            }
        }
        level = next.into_iter().collect();
    }
    level.into_iter().map(|code| graph_from_code(n, code)).collect()
}

/// Connected graphs on exactly `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize, max_degree: Option<usize>) -> Vec<Graph> {
    all_graphs(n, max_degree)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_code_invariant_under_relabeling() {
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(2..8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let relabeled: Vec<(usize, usize)> =
                edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
            let h = Graph::new(n, &relabeled).unwrap();
            assert_eq!(canonical_code_of(&g), canonical_code_of(&h));
        }
    }

    #[test]
    fn counts_match_known_sequences() {
        // numbers of graphs / connected graphs on n unlabeled vertices
        assert_eq!(all_graphs(2, None).len(), 2);
        assert_eq!(all_graphs(3, None).len(), 4);
        assert_eq!(all_graphs(4, None).len(), 11);
        assert_eq!(all_graphs(5, None).len(), 34);
        assert_eq!(all_graphs(6, None).len(), 156);
        assert_eq!(connected_graphs(3, None).len(), 2);
        assert_eq!(connected_graphs(4, None).len(), 6);
        assert_eq!(connected_graphs(5, None).len(), 21);
        assert_eq!(connected_graphs(6, None).len(), 112);
    }

    #[test]
    fn degree_cap_respected() {
        for g in all_graphs(6, Some(3)) {
            assert!(g.max_degree() <= 3);
        }
        // cubic graphs on 6 vertices: K_3,3 and the prism
        let cubic: Vec<_> = connected_graphs(6, Some(3))
            .into_iter()
            .filter(|g| g.min_degree() == 3)
            .collect();
        assert_eq!(cubic.len(), 2);
    }
}

//! Reference brute-force enumerator for packing colorings.
//!
//! Deliberately naive and kept independent of the solver: distances come
//! from Floyd-Warshall instead of BFS, vertices are processed in id order,
//! colors in fixed index order, and there is no constraint propagation,
//! variable ordering, or symmetry breaking. The recursion walks the full
//! `(j+k)^n` assignment tree, abandoning a prefix only once it is already
//! invalid. Tests compare [`crate::solver::solve`] against this.

use crate::color::{Color, PackingSpec, PartialColoring, Slot};
use crate::graph::Graph;

fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

fn compatible(dist: &[Vec<u32>], placed: &[Color], v: usize, c: Color) -> bool {
    for (u, &cu) in placed.iter().enumerate() {
        if cu != c {
            continue;
        }
        let limit = match c {
            Color::One(_) => 1,
            Color::Two(_) => 2,
        };
        if dist[u][v] <= limit {
            return false;
        }
    }
    true
}

fn assign_rec(dist: &[Vec<u32>], colors: &[Color], placed: &mut Vec<Color>, n: usize) -> bool {
    if placed.len() == n {
        return true;
    }
    let v = placed.len();
    for &c in colors {
        if compatible(dist, placed, v, c) {
            placed.push(c);
            if assign_rec(dist, colors, placed, n) {
                return true;
            }
            placed.pop();
        }
    }
    false
}

/// True when `g` has some total packing coloring under `spec`.
pub fn solvable(g: &Graph, spec: &PackingSpec) -> bool {
    let dist = floyd_warshall(g);
    let colors: Vec<Color> = spec.colors().collect();
    assign_rec(&dist, &colors, &mut Vec::new(), g.n())
}

/// Brute-force extension check: fixed colors stay fixed, markers range over
/// the 1-colors, uncolored vertices over all colors.
pub fn extendable(g: &Graph, spec: &PackingSpec, partial: &PartialColoring) -> bool {
    let dist = floyd_warshall(g);
    let all: Vec<Color> = spec.colors().collect();
    let ones: Vec<Color> = (0..spec.ones()).map(Color::One).collect();

    fn rec(
        dist: &[Vec<u32>],
        partial: &PartialColoring,
        all: &[Color],
        ones: &[Color],
        placed: &mut Vec<Color>,
        n: usize,
    ) -> bool {
        if placed.len() == n {
            return true;
        }
        let v = placed.len();
        let choices: &[Color] = match partial.get(v) {
            Slot::Assigned(c) => {
                return compatible(dist, placed, v, c) && {
                    placed.push(c);
                    let ok = rec(dist, partial, all, ones, placed, n);
                    placed.pop();
                    ok
                }
            }
            Slot::Undetermined1 => ones,
            Slot::Uncolored => all,
        };
        for &c in choices {
            if compatible(dist, placed, v, c) {
                placed.push(c);
                if rec(dist, partial, all, ones, placed, n) {
                    return true;
                }
                placed.pop();
            }
        }
        false
    }

    rec(&dist, partial, &all, &ones, &mut Vec::new(), g.n())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_on_basics() {
        let sp = |j, k| PackingSpec::new(j, k).unwrap();
        assert!(solvable(&Graph::complete(4), &sp(1, 3)));
        assert!(!solvable(&Graph::cycle(5), &sp(1, 2)));
        assert!(solvable(&Graph::cycle(5), &sp(1, 3)));
        assert!(!solvable(&Graph::petersen(), &sp(2, 2)));
    }
}

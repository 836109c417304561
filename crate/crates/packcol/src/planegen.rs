//! Random plane-embedding generators.
//!
//! Embeddings are grown as face lists: every operation rewrites whole face
//! walks, so every directed edge stays on exactly one face and the result
//! feeds straight into [`PlaneEmbedding::from_faces`], which re-validates the
//! rotation system and Euler's formula. All generators are seeded and
//! deterministic.

use crate::embedding::PlaneEmbedding;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

struct FaceBuilder {
    n: usize,
    faces: Vec<Vec<usize>>,
}

impl FaceBuilder {
    fn triangle() -> Self {
        FaceBuilder { n: 3, faces: vec![vec![0, 1, 2], vec![2, 1, 0]] }
    }

    fn quad() -> Self {
        FaceBuilder { n: 4, faces: vec![vec![0, 1, 2, 3], vec![3, 2, 1, 0]] }
    }

    fn degree(&self, v: usize) -> usize {
        self.faces
            .iter()
            .flat_map(|f| f.iter())
            .filter(|&&u| u == v)
            .count()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.faces.iter().any(|f| {
            let k = f.len();
            (0..k).any(|i| f[i] == u && f[(i + 1) % k] == v)
        })
    }

    /// Splits face `fi` with a new vertex joined to the walk positions in
    /// `cuts` (ascending, at least two): each consecutive cut pair becomes a
    /// face through the new vertex.
    fn insert_vertex(&mut self, fi: usize, cuts: &[usize]) {
        let walk = self.faces.swap_remove(fi);
        let z = self.n;
        self.n += 1;
        let k = walk.len();
        for w in 0..cuts.len() {
            let from = cuts[w];
            let to = cuts[(w + 1) % cuts.len()];
            let mut new_walk = Vec::new();
            let mut i = from;
            loop {
                new_walk.push(walk[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % k;
            }
            new_walk.push(z);
            self.faces.push(new_walk);
        }
    }

    /// Splits face `fi` by the chord between walk positions `p` and `q`.
    fn add_chord(&mut self, fi: usize, p: usize, q: usize) {
        let walk = self.faces.swap_remove(fi);
        let k = walk.len();
        let mut first = Vec::new();
        let mut i = p;
        loop {
            first.push(walk[i]);
            if i == q {
                break;
            }
            i = (i + 1) % k;
        }
        let mut second = Vec::new();
        let mut i = q;
        loop {
            second.push(walk[i]);
            if i == p {
                break;
            }
            i = (i + 1) % k;
        }
        self.faces.push(first);
        self.faces.push(second);
    }

    fn build(self) -> PlaneEmbedding {
        PlaneEmbedding::from_faces(self.n, &self.faces).expect("surgeries preserve plane-ness")
    }
}

/// Random plane triangulation (all faces of size 3) on `n >= 3` vertices:
/// repeatedly places a degree-3 vertex inside a random face.
pub fn random_triangulation(rng: &mut ChaCha8Rng, n: usize) -> PlaneEmbedding {
    assert!(n >= 3);
    let mut b = FaceBuilder::triangle();
    while b.n < n {
        let fi = rng.gen_range(0..b.faces.len());
        b.insert_vertex(fi, &[0, 1, 2]);
    }
    b.build()
}

/// Random plane quadrangulation (all faces of size 4) on `n >= 4` vertices:
/// repeatedly joins a new vertex to two opposite corners of a random face.
pub fn random_quadrangulation(rng: &mut ChaCha8Rng, n: usize) -> PlaneEmbedding {
    assert!(n >= 4);
    let mut b = FaceBuilder::quad();
    while b.n < n {
        let fi = rng.gen_range(0..b.faces.len());
        let first = rng.gen_range(0..2);
        b.insert_vertex(fi, &[first, first + 2]);
    }
    b.build()
}

/// Random connected plane graph with `max_degree <= cap`, grown from a
/// triangle by a mix of chords, degree-2 and degree-3 vertex insertions.
pub fn random_plane_graph(rng: &mut ChaCha8Rng, n_target: usize, cap: usize, steps: usize) -> PlaneEmbedding {
    assert!(cap >= 3);
    let mut b = FaceBuilder::triangle();
    for _ in 0..steps {
        match rng.gen_range(0..3) {
            0 if b.n < n_target => {
                // degree-2 vertex between two distinct walk positions
                let fi = rng.gen_range(0..b.faces.len());
                let k = b.faces[fi].len();
                let p = rng.gen_range(0..k);
                let q = rng.gen_range(0..k);
                if p == q || b.faces[fi][p] == b.faces[fi][q] {
                    continue;
                }
                let (u, v) = (b.faces[fi][p], b.faces[fi][q]);
                if b.degree(u) >= cap || b.degree(v) >= cap {
                    continue;
                }
                b.insert_vertex(fi, &[p.min(q), p.max(q)]);
            }
            1 if b.n < n_target => {
                let fi = rng.gen_range(0..b.faces.len());
                let k = b.faces[fi].len();
                if k < 3 {
                    continue;
                }
                let mut cuts: Vec<usize> = (0..k).collect();
                for i in (1..cuts.len()).rev() {
                    cuts.swap(i, rng.gen_range(0..=i));
                }
                let mut cuts = cuts[..3].to_vec();
                cuts.sort_unstable();
                let vs: Vec<usize> = cuts.iter().map(|&i| b.faces[fi][i]).collect();
                if vs[0] == vs[1] || vs[1] == vs[2] || vs[0] == vs[2] {
                    continue;
                }
                if vs.iter().any(|&v| b.degree(v) >= cap) {
                    continue;
                }
                b.insert_vertex(fi, &cuts);
            }
            _ => {
                // chord across a face of size >= 4
                let fi = rng.gen_range(0..b.faces.len());
                let k = b.faces[fi].len();
                if k < 4 {
                    continue;
                }
                let p = rng.gen_range(0..k);
                let q = rng.gen_range(0..k);
                let (u, v) = (b.faces[fi][p], b.faces[fi][q]);
                if p == q || u == v || b.has_edge(u, v) || b.has_edge(v, u) {
                    continue;
                }
                // skip splits that would leave a 1-gon or 2-gon
                let gap = (q + k - p) % k;
                if gap < 2 || gap > k - 2 {
                    continue;
                }
                if b.degree(u) >= cap || b.degree(v) >= cap {
                    continue;
                }
                b.add_chord(fi, p, q);
            }
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn triangulations_are_plane_and_triangular() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..30 {
            let n = rng.gen_range(3..15);
            let e = random_triangulation(&mut rng, n);
            assert!(e.euler_holds());
            assert!(e.faces().iter().all(|f| f.size() == 3));
            assert_eq!(e.graph().n(), n);
        }
    }

    #[test]
    fn quadrangulations_are_plane_and_quadrangular() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..30 {
            let n = rng.gen_range(4..15);
            let e = random_quadrangulation(&mut rng, n);
            assert!(e.euler_holds());
            assert!(e.faces().iter().all(|f| f.size() == 4));
        }
    }

    #[test]
    fn capped_graphs_stay_capped() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for _ in 0..50 {
            let e = random_plane_graph(&mut rng, 12, 4, 40);
            assert!(e.euler_holds());
            assert!(e.graph().max_degree() <= 4);
            assert!(e.graph().is_connected());
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        let ea = random_plane_graph(&mut a, 10, 4, 30);
        let eb = random_plane_graph(&mut b, 10, 4, 30);
        assert_eq!(ea.rotation(), eb.rotation());
    }
}

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, VertexId};
use crate::error::{Error, Result};

/// Uniform random simple graph with exactly `n` vertices and `m` edges.
///
/// Deterministic for a fixed seed. Dense requests sample the complement.
pub fn gen_gnm(n: usize, m: u64, seed: u64) -> Result<Graph> {
    let max = (n as u64) * (n as u64).saturating_sub(1) / 2;
    if m > max {
        return Err(Error::TooManyEdges { n, m, max });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let complement = m > max / 2;
    let target = if complement { max - m } else { m };
    let mut picked: HashSet<(VertexId, VertexId)> = HashSet::with_capacity(target as usize);
    let mut sampled = Vec::with_capacity(target as usize);
    while (picked.len() as u64) < target {
        let u = rng.random_range(0..n as VertexId);
        let v = rng.random_range(0..n as VertexId);
        if u == v {
            continue;
        }
        let e = if u < v { (u, v) } else { (v, u) };
        if picked.insert(e) {
            sampled.push(e);
        }
    }
    let edges = if complement {
        let mut all = Vec::with_capacity(m as usize);
        for u in 0..n as VertexId {
            for v in u + 1..n as VertexId {
                if !picked.contains(&(u, v)) {
                    all.push((u, v));
                }
            }
        }
        all
    } else {
        sampled
    };
    Ok(Graph::from_edges(n, &edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_edges_on_four_vertices_is_k4() {
        for seed in 0..5 {
            let g = gen_gnm(4, 6, seed).unwrap();
            assert_eq!(g.m(), 6);
            assert!(g.vertices().all(|u| g.degree(u) == 3));
        }
    }

    #[test]
    fn edgeless() {
        let g = gen_gnm(10, 0, 9).unwrap();
        assert_eq!((g.n(), g.m()), (10, 0));
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            gen_gnm(100, 500, 42).unwrap(),
            gen_gnm(100, 500, 42).unwrap()
        );
        assert_ne!(
            gen_gnm(100, 500, 42).unwrap(),
            gen_gnm(100, 500, 43).unwrap()
        );
    }

    #[test]
    fn exact_counts_and_invariants() {
        for (n, m) in [(30, 120), (12, 60), (12, 10), (1, 0), (0, 0)] {
            let g = gen_gnm(n, m, 1).unwrap();
            assert_eq!((g.n(), g.m()), (n, m));
            g.check_invariants().unwrap();
        }
    }

    #[test]
    fn too_many_edges() {
        assert!(matches!(gen_gnm(4, 7, 0), Err(Error::TooManyEdges { .. })));
    }
}

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Ordering, VertexId};

pub fn identity_order(g: &Graph) -> Ordering {
    Ordering::identity(g.n())
}

/// Seeded uniform permutation.
pub fn random_order(g: &Graph, seed: u64) -> Ordering {
    let mut seq: Vec<VertexId> = g.vertices().collect();
    seq.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    Ordering::from_sequence(seq).expect("shuffle is a permutation")
}

/// Vertices sorted by degree with a stable tie-break on id, in O(n + Δ).
pub(crate) fn degree_sorted(g: &Graph, descending: bool) -> Vec<VertexId> {
    let max = g.max_degree();
    let mut counts = vec![0usize; max + 2];
    let key = |u: VertexId| {
        let d = g.degree(u);
        if descending {
            max - d
        } else {
            d
        }
    };
    for u in g.vertices() {
        counts[key(u) + 1] += 1;
    }
    for i in 1..counts.len() {
        counts[i] += counts[i - 1];
    }
    let mut out = vec![0; g.n()];
    for u in g.vertices() {
        let k = key(u);
        out[counts[k]] = u;
        counts[k] += 1;
    }
    out
}

/// Non-decreasing degree, ties by ascending id.
pub fn degree_order(g: &Graph) -> Ordering {
    Ordering::from_sequence(degree_sorted(g, false)).expect("bucket sort is a permutation")
}

#[derive(Clone, Debug)]
pub struct CoreDecomposition {
    /// Peeling order: rank equals removal time.
    pub ordering: Ordering,
    pub coreness: Vec<u32>,
    /// Remaining degree of each vertex when it was removed.
    pub peel_degree: Vec<u32>,
    pub degeneracy: u32,
}

/// Repeated minimum-degree peeling with a bucket queue (Batagelj–Zaversnik).
pub fn core_decomposition(g: &Graph) -> CoreDecomposition {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|u| g.degree(u)).collect();
    let max = g.max_degree();
    let mut bin = vec![0usize; max + 1];
    for &d in &deg {
        bin[d] += 1;
    }
    let mut start = 0;
    for b in bin.iter_mut() {
        let count = *b;
        *b = start;
        start += count;
    }
    let mut vert = vec![0 as VertexId; n];
    let mut pos = vec![0usize; n];
    for u in 0..n {
        pos[u] = bin[deg[u]];
        vert[pos[u]] = u as VertexId;
        bin[deg[u]] += 1;
    }
    for d in (1..=max).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    let mut removed = vec![false; n];
    let mut peel_degree = vec![0u32; n];
    for i in 0..n {
        let v = vert[i] as usize;
        removed[v] = true;
        let mut remaining = 0;
        for &u in g.neighbors(v as VertexId) {
            let u = u as usize;
            if removed[u] {
                continue;
            }
            remaining += 1;
            if deg[u] > deg[v] {
                let du = deg[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw] as usize;
                if u != w {
                    vert.swap(pu, pw);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin[du] += 1;
                deg[u] -= 1;
            }
        }
        peel_degree[v] = remaining;
    }
    let coreness: Vec<u32> = deg.iter().map(|&d| d as u32).collect();
    let degeneracy = coreness.iter().copied().max().unwrap_or(0);
    CoreDecomposition {
        ordering: Ordering::from_sequence(vert).expect("peeling visits every vertex once"),
        coreness,
        peel_degree,
        degeneracy,
    }
}

pub fn core_order(g: &Graph) -> Ordering {
    core_decomposition(g).ordering
}

//! Undirected simple graphs in compressed sorted-adjacency form.
//!
//! Vertices are dense ids in `0..n`. Each graph keeps the original label of
//! every dense id so that results can be reported in the input's own naming.

mod generate;
mod oriented;
mod rank;

use std::io::BufRead;

pub use generate::gen_gnm;
pub use oriented::OrientedView;
pub use rank::Ordering;

use crate::error::{parse_err, Result};

pub type VertexId = u32;
pub type Label = u64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    labels: Vec<Label>,
}

/// What `normalize` threw away on its way to a simple graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NormalizeStats {
    pub loops: u64,
    pub duplicates: u64,
}

impl Graph {
    /// Builds a graph over exactly `n` vertices labelled `0..n`.
    ///
    /// Loops are dropped and duplicate edges (in either direction) merged, but
    /// isolated vertices are kept, unlike [`normalize`].
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Graph {
        let labels = (0..n as Label).collect();
        let mut pairs: Vec<(VertexId, VertexId)> = edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        for &(_, v) in &pairs {
            assert!((v as usize) < n, "vertex {v} out of range for n = {n}");
        }
        pairs.sort_unstable();
        pairs.dedup();
        Graph::from_sorted_pairs(labels, &pairs)
    }

    /// `pairs` must be sorted, deduplicated and satisfy `u < v`.
    fn from_sorted_pairs(labels: Vec<Label>, pairs: &[(VertexId, VertexId)]) -> Graph {
        let n = labels.len();
        let mut degree = vec![0usize; n];
        for &(u, v) in pairs {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0; 2 * pairs.len()];
        for &(u, v) in pairs {
            targets[fill[u as usize]] = v;
            fill[u as usize] += 1;
            targets[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        // Lower and higher neighbours arrive interleaved.
        for u in 0..n {
            targets[offsets[u]..offsets[u + 1]].sort_unstable();
        }
        Graph {
            offsets,
            targets,
            labels,
        }
    }

    pub fn empty() -> Graph {
        Graph::from_edges(0, &[])
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> u64 {
        (self.targets.len() / 2) as u64
    }

    pub fn degree(&self, u: VertexId) -> usize {
        let u = u as usize;
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn neighbors(&self, u: VertexId) -> &[VertexId] {
        let u = u as usize;
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> {
        0..self.n() as VertexId
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// Σ d_u², accumulated in 64 bits.
    pub fn sum_degree_squares(&self) -> u64 {
        self.vertices()
            .map(|u| {
                let d = self.degree(u) as u64;
                d * d
            })
            .sum()
    }

    pub fn label(&self, u: VertexId) -> Label {
        self.labels[u as usize]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Dense id of an original label.
    pub fn id_of(&self, label: Label) -> Option<VertexId> {
        // Labels are sorted unless replaced through `with_labels`.
        match self.labels.binary_search(&label) {
            Ok(i) => Some(i as VertexId),
            Err(_) => self
                .labels
                .iter()
                .position(|&l| l == label)
                .map(|i| i as VertexId),
        }
    }

    /// Map from original label to dense id.
    pub fn label_index(&self) -> std::collections::HashMap<Label, VertexId> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i as VertexId))
            .collect()
    }

    /// Replaces the label table; `labels.len()` must equal `n`.
    pub fn with_labels(mut self, labels: Vec<Label>) -> Graph {
        assert_eq!(labels.len(), self.n());
        self.labels = labels;
        self
    }

    /// Checks every structural invariant; used by tests and loaders.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let mut total = 0usize;
        for u in self.vertices() {
            let nb = self.neighbors(u);
            total += nb.len();
            for w in nb.windows(2) {
                if w[0] >= w[1] {
                    return Err(format!("neighbors of {u} not strictly increasing"));
                }
            }
            for &v in nb {
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if (v as usize) >= self.n() || !self.has_edge(v, u) {
                    return Err(format!("edge {u}-{v} not symmetric"));
                }
            }
        }
        if total as u64 != 2 * self.m() {
            return Err("degree sum is not 2m".into());
        }
        Ok(())
    }
}

/// Turns raw labelled pairs into a simple graph.
///
/// Loops are dropped, parallel and reversed copies merged, and the labels
/// that appear in at least one surviving edge are re-indexed densely in
/// ascending label order.
pub fn normalize(raw: &[(Label, Label)]) -> (Graph, NormalizeStats) {
    let mut stats = NormalizeStats::default();
    let mut pairs: Vec<(Label, Label)> = Vec::with_capacity(raw.len());
    for &(a, b) in raw {
        if a == b {
            stats.loops += 1;
        } else {
            pairs.push(if a < b { (a, b) } else { (b, a) });
        }
    }
    pairs.sort_unstable();
    let before = pairs.len();
    pairs.dedup();
    stats.duplicates = (before - pairs.len()) as u64;

    let mut labels: Vec<Label> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    labels.sort_unstable();
    labels.dedup();
    let dense = |l: Label| labels.binary_search(&l).unwrap() as VertexId;
    // Relabeling is monotone, so the dense pairs stay sorted.
    let dense_pairs: Vec<(VertexId, VertexId)> =
        pairs.iter().map(|&(a, b)| (dense(a), dense(b))).collect();
    (Graph::from_sorted_pairs(labels, &dense_pairs), stats)
}

/// Reads whitespace-separated `u v` lines; `#` lines and blank lines are skipped.
pub fn read_edge_pairs<R: BufRead>(reader: R) -> Result<Vec<(Label, Label)>> {
    let mut raw = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let body = line.trim_end_matches('\r');
        let trimmed = body.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = body.split([' ', '\t']).filter(|t| !t.is_empty());
        let mut next = || -> Result<Label> {
            let tok = tokens
                .next()
                .ok_or_else(|| parse_err(lineno, "expected two vertex ids"))?;
            tok.parse::<Label>()
                .map_err(|_| parse_err(lineno, format!("invalid vertex id {tok:?}")))
        };
        let u = next()?;
        let v = next()?;
        if tokens.next().is_some() {
            return Err(parse_err(lineno, "expected exactly two vertex ids"));
        }
        raw.push((u, v));
    }
    Ok(raw)
}

pub fn load_edgelist<R: BufRead>(reader: R) -> Result<(Graph, NormalizeStats)> {
    let raw = read_edge_pairs(reader)?;
    Ok(normalize(&raw))
}

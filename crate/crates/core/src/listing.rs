//! Triangle listing by neighbourhood intersection over an oriented graph.
//!
//! Both algorithms mark one neighbourhood of a seed vertex in a boolean
//! table, scan the successor lists of the marked vertices, and reset the
//! table before the next seed. They differ in which neighbourhood is marked:
//!
//! * A++ seeds `w` and marks `N⁻(w)`; the scan costs Σ (d⁺)².
//! * A+- seeds `u` and marks `N⁺(u)`; the scan costs Σ d⁺·d⁻.
//!
//! Every triangle is emitted once, as `(u, v, w)` with rank u < v < w.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::{Graph, Ordering, OrientedView, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// A++, marks predecessors of the highest-ranked vertex.
    App,
    /// A+-, marks successors of the lowest-ranked vertex.
    Apm,
}

impl Algorithm {
    pub const ALL: [Algorithm; 2] = [Algorithm::App, Algorithm::Apm];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::App => "app",
            Algorithm::Apm => "apm",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "app" | "A++" => Ok(Algorithm::App),
            "apm" | "A+-" => Ok(Algorithm::Apm),
            _ => Err(format!("unknown algorithm {s:?} (expected app or apm)")),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ListingStats {
    pub triangle_count: u64,
    /// Iterations of the innermost loop.
    pub inner_ops: u64,
    /// Boolean table sets plus resets.
    pub mark_ops: u64,
    pub wall_time: Duration,
}

impl ListingStats {
    fn absorb(&mut self, other: &ListingStats) {
        self.triangle_count += other.triangle_count;
        self.inner_ops += other.inner_ops;
        self.mark_ops += other.mark_ops;
    }
}

/// Receives triangles as dense ids in rank order.
pub trait TriangleSink {
    fn emit(&mut self, u: VertexId, v: VertexId, w: VertexId);
}

/// A sink that can be split across threads and merged back.
pub trait ForkSink: TriangleSink + Send + Sync + Sized {
    fn fork(&self) -> Self;
    fn join(&mut self, other: Self);
}

#[derive(Clone, Debug, Default)]
pub struct CountSink {
    pub count: u64,
}

impl TriangleSink for CountSink {
    #[inline]
    fn emit(&mut self, _: VertexId, _: VertexId, _: VertexId) {
        self.count += 1;
    }
}

impl ForkSink for CountSink {
    fn fork(&self) -> Self {
        CountSink::default()
    }
    fn join(&mut self, other: Self) {
        self.count += other.count;
    }
}

#[derive(Clone, Debug, Default)]
pub struct CollectSink {
    pub triangles: Vec<[VertexId; 3]>,
}

impl CollectSink {
    /// Triangles as ascending-id triples, sorted.
    pub fn canonical(&self) -> Vec<[VertexId; 3]> {
        let mut out: Vec<[VertexId; 3]> = self
            .triangles
            .iter()
            .map(|t| {
                let mut t = *t;
                t.sort_unstable();
                t
            })
            .collect();
        out.sort_unstable();
        out
    }
}

impl TriangleSink for CollectSink {
    fn emit(&mut self, u: VertexId, v: VertexId, w: VertexId) {
        self.triangles.push([u, v, w]);
    }
}

impl ForkSink for CollectSink {
    fn fork(&self) -> Self {
        CollectSink::default()
    }
    fn join(&mut self, other: Self) {
        self.triangles.extend(other.triangles);
    }
}

impl<F: FnMut(VertexId, VertexId, VertexId)> TriangleSink for F {
    fn emit(&mut self, u: VertexId, v: VertexId, w: VertexId) {
        self(u, v, w)
    }
}

/// One seed of A++: `w` is the highest-ranked vertex of its triangles.
#[inline]
fn seed_app<S: TriangleSink + ?Sized>(
    view: &OrientedView,
    w: VertexId,
    marked: &mut [bool],
    stats: &mut ListingStats,
    sink: &mut S,
) {
    let preds = view.in_neighbors(w);
    for &v in preds {
        marked[v as usize] = true;
    }
    for &u in preds {
        let succ = view.out_neighbors(u);
        stats.inner_ops += succ.len() as u64;
        for &v in succ {
            if marked[v as usize] {
                stats.triangle_count += 1;
                sink.emit(u, v, w);
            }
        }
    }
    for &v in preds {
        marked[v as usize] = false;
    }
    stats.mark_ops += 2 * preds.len() as u64;
}

/// One seed of A+-: `u` is the lowest-ranked vertex of its triangles.
#[inline]
fn seed_apm<S: TriangleSink + ?Sized>(
    view: &OrientedView,
    u: VertexId,
    marked: &mut [bool],
    stats: &mut ListingStats,
    sink: &mut S,
) {
    let succ = view.out_neighbors(u);
    for &w in succ {
        marked[w as usize] = true;
    }
    for &v in succ {
        let next = view.out_neighbors(v);
        stats.inner_ops += next.len() as u64;
        for &w in next {
            if marked[w as usize] {
                stats.triangle_count += 1;
                sink.emit(u, v, w);
            }
        }
    }
    for &w in succ {
        marked[w as usize] = false;
    }
    stats.mark_ops += 2 * succ.len() as u64;
}

fn run_seed<S: TriangleSink + ?Sized>(
    algo: Algorithm,
    view: &OrientedView,
    seed: VertexId,
    marked: &mut [bool],
    stats: &mut ListingStats,
    sink: &mut S,
) {
    match algo {
        Algorithm::App => seed_app(view, seed, marked, stats, sink),
        Algorithm::Apm => seed_apm(view, seed, marked, stats, sink),
    }
}

/// Single-threaded listing; seeds are visited in rank order.
pub fn list_view<S: TriangleSink + ?Sized>(
    view: &OrientedView,
    order: &Ordering,
    algo: Algorithm,
    sink: &mut S,
) -> ListingStats {
    let start = Instant::now();
    let mut marked = vec![false; view.n()];
    let mut stats = ListingStats::default();
    for &seed in order.sequence() {
        run_seed(algo, view, seed, &mut marked, &mut stats, sink);
    }
    stats.wall_time = start.elapsed();
    stats
}

/// Parallel listing over the outer loop. Each worker owns its table, its
/// counters and a forked sink; emission order is unspecified.
pub fn list_view_parallel<S: ForkSink>(
    view: &OrientedView,
    order: &Ordering,
    algo: Algorithm,
    threads: usize,
    sink: &mut S,
) -> ListingStats {
    if threads <= 1 {
        return list_view(view, order, algo, sink);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    let start = Instant::now();
    let n = view.n();
    let (stats, forked) = pool.install(|| {
        order
            .sequence()
            .par_iter()
            .with_min_len(256)
            .fold(
                || (vec![false; n], ListingStats::default(), sink.fork()),
                |(mut marked, mut stats, mut local), &seed| {
                    run_seed(algo, view, seed, &mut marked, &mut stats, &mut local);
                    (marked, stats, local)
                },
            )
            .map(|(_, stats, local)| (stats, local))
            .reduce(
                || (ListingStats::default(), sink.fork()),
                |(mut a, mut sa), (b, sb)| {
                    a.absorb(&b);
                    sa.join(sb);
                    (a, sa)
                },
            )
    });
    sink.join(forked);
    ListingStats {
        wall_time: start.elapsed(),
        ..stats
    }
}

/// A++ over `g` oriented by `order`.
pub fn list_app<S: TriangleSink + ?Sized>(
    g: &Graph,
    order: &Ordering,
    sink: &mut S,
) -> Result<ListingStats> {
    let view = OrientedView::new(g, order)?;
    Ok(list_view(&view, order, Algorithm::App, sink))
}

/// A+- over `g` oriented by `order`.
pub fn list_apm<S: TriangleSink + ?Sized>(
    g: &Graph,
    order: &Ordering,
    sink: &mut S,
) -> Result<ListingStats> {
    let view = OrientedView::new(g, order)?;
    Ok(list_view(&view, order, Algorithm::Apm, sink))
}

pub fn list<S: TriangleSink + ?Sized>(
    g: &Graph,
    order: &Ordering,
    algo: Algorithm,
    sink: &mut S,
) -> Result<ListingStats> {
    let view = OrientedView::new(g, order)?;
    Ok(list_view(&view, order, algo, sink))
}

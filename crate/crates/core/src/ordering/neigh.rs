//! Neighbourhood optimisation: greedy single-vertex relocations that lower C⁺⁻.
//!
//! Each vertex u is taken out and re-inserted at the best of the `d_u + 1`
//! gaps defined by its own neighbours (before all of them, or just after the
//! p-th one in the current order). Only the degrees of u and its neighbours
//! change, so the cost of every gap follows from a prefix sum over the
//! neighbours sorted by position.

use super::cost_pm;
use crate::graph::{Graph, Ordering, VertexId};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NeighConfig {
    /// Stop once a sweep improves C⁺⁻ by less than this fraction.
    pub epsilon: f64,
    pub max_sweeps: usize,
}

impl Default for NeighConfig {
    fn default() -> Self {
        NeighConfig {
            epsilon: 1e-2,
            max_sweeps: 50,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NeighReport {
    pub sweeps: usize,
    pub moves: u64,
    /// C⁺⁻ before the first sweep, then after each sweep.
    pub history: Vec<u64>,
    /// How often the position labels ran out of room and were respread.
    pub relabels: u64,
}

/// One accepted relocation, reported to observers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relocation {
    pub vertex: VertexId,
    /// Number of neighbours ranked before the vertex, before and after.
    pub from: usize,
    pub to: usize,
    pub cost_before: u64,
    pub cost_after: u64,
}

const NIL: u32 = u32::MAX;

/// Total order with O(1) relocation and O(1) comparison through sparse labels.
#[derive(Clone, Debug)]
struct OrderList {
    prev: Vec<u32>,
    next: Vec<u32>,
    label: Vec<u64>,
    head: u32,
    tail: u32,
    relabels: u64,
}

impl OrderList {
    fn new(order: &Ordering) -> OrderList {
        let n = order.len();
        let mut list = OrderList {
            prev: vec![NIL; n],
            next: vec![NIL; n],
            label: vec![0; n],
            head: NIL,
            tail: NIL,
            relabels: 0,
        };
        let seq = order.sequence();
        for (i, &u) in seq.iter().enumerate() {
            list.prev[u as usize] = if i > 0 { seq[i - 1] } else { NIL };
            list.next[u as usize] = seq.get(i + 1).copied().unwrap_or(NIL);
        }
        if n > 0 {
            list.head = seq[0];
            list.tail = seq[n - 1];
        }
        list.respread();
        list
    }

    fn respread(&mut self) {
        let n = self.label.len() as u64;
        let gap = u64::MAX / (n + 1);
        let mut cur = self.head;
        let mut k = 1;
        while cur != NIL {
            self.label[cur as usize] = k * gap;
            k += 1;
            cur = self.next[cur as usize];
        }
    }

    #[inline]
    fn key(&self, u: VertexId) -> u64 {
        self.label[u as usize]
    }

    fn unlink(&mut self, u: VertexId) {
        let (p, nx) = (self.prev[u as usize], self.next[u as usize]);
        if p == NIL {
            self.head = nx;
        } else {
            self.next[p as usize] = nx;
        }
        if nx == NIL {
            self.tail = p;
        } else {
            self.prev[nx as usize] = p;
        }
        self.prev[u as usize] = NIL;
        self.next[u as usize] = NIL;
    }

    /// Links `u` between `p` and `nx` (either may be NIL at the ends).
    fn link_between(&mut self, u: VertexId, p: u32, nx: u32) {
        self.prev[u as usize] = p;
        self.next[u as usize] = nx;
        if p == NIL {
            self.head = u;
        } else {
            self.next[p as usize] = u;
        }
        if nx == NIL {
            self.tail = u;
        } else {
            self.prev[nx as usize] = u;
        }
        let lo = if p == NIL { 0 } else { self.key(p) };
        let hi = if nx == NIL { u64::MAX } else { self.key(nx) };
        if hi - lo < 2 {
            self.relabels += 1;
            self.respread();
        } else {
            self.label[u as usize] = lo + (hi - lo) / 2;
        }
    }

    fn insert_after(&mut self, u: VertexId, anchor: VertexId) {
        let nx = self.next[anchor as usize];
        self.link_between(u, anchor, nx);
    }

    fn insert_before(&mut self, u: VertexId, anchor: VertexId) {
        let p = self.prev[anchor as usize];
        self.link_between(u, p, anchor);
    }

    fn to_ordering(&self) -> Ordering {
        let mut seq = Vec::with_capacity(self.label.len());
        let mut cur = self.head;
        while cur != NIL {
            seq.push(cur);
            cur = self.next[cur as usize];
        }
        Ordering::from_sequence(seq).expect("linked order is a permutation")
    }
}

/// Incremental state of the heuristic: the current order, every vertex's
/// in/out degree, and the current C⁺⁻.
pub struct NeighState<'g> {
    graph: &'g Graph,
    order: OrderList,
    out_deg: Vec<i64>,
    in_deg: Vec<i64>,
    c_pm: u64,
    scratch: Vec<VertexId>,
    gap_cost: Vec<i64>,
}

impl<'g> NeighState<'g> {
    pub fn new(graph: &'g Graph, initial: &Ordering) -> crate::Result<NeighState<'g>> {
        initial.check_len(graph.n())?;
        let n = graph.n();
        let mut out_deg = vec![0i64; n];
        let mut in_deg = vec![0i64; n];
        for u in graph.vertices() {
            for &v in graph.neighbors(u) {
                if initial.before(u, v) {
                    out_deg[u as usize] += 1;
                } else {
                    in_deg[u as usize] += 1;
                }
            }
        }
        let c_pm = cost_pm(graph, initial)?;
        Ok(NeighState {
            graph,
            order: OrderList::new(initial),
            out_deg,
            in_deg,
            c_pm,
            scratch: Vec::new(),
            gap_cost: Vec::new(),
        })
    }

    pub fn c_pm(&self) -> u64 {
        self.c_pm
    }

    pub fn out_degree(&self, u: VertexId) -> u64 {
        self.out_deg[u as usize] as u64
    }

    pub fn in_degree(&self, u: VertexId) -> u64 {
        self.in_deg[u as usize] as u64
    }

    /// Materialises the current order.
    pub fn ordering(&self) -> Ordering {
        self.order.to_ordering()
    }

    /// Re-inserts `u` at its best gap if that strictly lowers C⁺⁻.
    ///
    /// Among equally good gaps the one with the fewest predecessors wins.
    pub fn relocate(&mut self, u: VertexId) -> Option<Relocation> {
        let g = self.graph;
        let d = g.degree(u);
        if d == 0 {
            return None;
        }
        let mut nbrs = std::mem::take(&mut self.scratch);
        nbrs.clear();
        nbrs.extend_from_slice(g.neighbors(u));
        let order = &self.order;
        nbrs.sort_unstable_by_key(|&v| order.key(v));
        let ku = order.key(u);
        let current = nbrs.partition_point(|&v| order.key(v) < ku);

        // Degrees of each neighbour with the edge to u taken out:
        // (a, b) = (out, in) without u. With u among v's successors the
        // pair contributes (a+1)·b, else a·(b+1); the difference is b − a.
        let own = self.out_deg[u as usize] * self.in_deg[u as usize];
        let mut base = self.c_pm as i64 - own;
        let mut costs = std::mem::take(&mut self.gap_cost);
        costs.clear();
        for (i, &v) in nbrs.iter().enumerate() {
            let (mut a, mut b) = (self.out_deg[v as usize], self.in_deg[v as usize]);
            if i < current {
                a -= 1;
            } else {
                b -= 1;
            }
            base += a * (b + 1) - self.out_deg[v as usize] * self.in_deg[v as usize];
            costs.push(b - a);
        }
        let d_i = d as i64;
        let prefix_here: i64 = costs[..current].iter().sum();
        let cost_here = base + current as i64 * (d_i - current as i64) + prefix_here;
        debug_assert_eq!(cost_here, self.c_pm as i64);
        let (mut best, mut best_p) = (i64::MAX, 0);
        let mut prefix = 0i64;
        for p in 0..=d {
            if p > 0 {
                prefix += costs[p - 1];
            }
            let c = base + p as i64 * (d_i - p as i64) + prefix;
            if c < best {
                best = c;
                best_p = p;
            }
        }

        let result = if best < cost_here {
            self.order.unlink(u);
            if best_p == 0 {
                self.order.insert_before(u, nbrs[0]);
            } else {
                self.order.insert_after(u, nbrs[best_p - 1]);
            }
            for (i, &v) in nbrs.iter().enumerate() {
                let was_before = i < current;
                let now_before = i < best_p;
                if was_before && !now_before {
                    // v moves from predecessor to successor of u.
                    self.out_deg[v as usize] -= 1;
                    self.in_deg[v as usize] += 1;
                } else if !was_before && now_before {
                    self.out_deg[v as usize] += 1;
                    self.in_deg[v as usize] -= 1;
                }
            }
            self.in_deg[u as usize] = best_p as i64;
            self.out_deg[u as usize] = d_i - best_p as i64;
            let before = self.c_pm;
            self.c_pm = best as u64;
            Some(Relocation {
                vertex: u,
                from: current,
                to: best_p,
                cost_before: before,
                cost_after: self.c_pm,
            })
        } else {
            None
        };
        self.scratch = nbrs;
        self.gap_cost = costs;
        result
    }
}

/// Runs sweeps over all vertices until C⁺⁻ stops improving by at least
/// `epsilon` (relative) or `max_sweeps` is reached.
pub fn neigh_order_with<F>(
    g: &Graph,
    initial: &Ordering,
    config: NeighConfig,
    mut observe: F,
) -> crate::Result<(Ordering, NeighReport)>
where
    F: FnMut(&Relocation, &NeighState<'_>),
{
    let mut state = NeighState::new(g, initial)?;
    let mut report = NeighReport {
        history: vec![state.c_pm()],
        ..NeighReport::default()
    };
    while report.sweeps < config.max_sweeps {
        let start = state.c_pm();
        for u in g.vertices() {
            if let Some(mv) = state.relocate(u) {
                report.moves += 1;
                observe(&mv, &state);
            }
        }
        report.sweeps += 1;
        report.history.push(state.c_pm());
        if (state.c_pm() as f64) >= (1.0 - config.epsilon) * start as f64 {
            break;
        }
    }
    report.relabels = state.order.relabels;
    Ok((state.ordering(), report))
}

pub fn neigh_order(
    g: &Graph,
    initial: &Ordering,
    config: NeighConfig,
) -> crate::Result<(Ordering, NeighReport)> {
    neigh_order_with(g, initial, config, |_, _| {})
}

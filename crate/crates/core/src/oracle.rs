//! Exhaustive reference solvers. Everything here is exponential and guarded.

use crate::error::{Error, Result};
use crate::graph::{Graph, Ordering, VertexId};

pub const DEFAULT_TRIANGLE_GUARD: usize = 500;
/// Vertex limit for the subset dynamic program (2^n states).
pub const DEFAULT_ORDER_GUARD: usize = 20;
/// Hard cap on the subset program regardless of overrides (memory bound).
pub const MAX_SUBSET_DP: usize = 24;
/// Vertex limit for plain permutation search (n! leaves).
pub const DEFAULT_PERMUTATION_GUARD: usize = 11;
pub const DEFAULT_NAE_GUARD: usize = 20;
pub const DEFAULT_SET_COVER_GUARD: usize = 20;

fn guard(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        return Err(Error::GuardExceeded { what, got, limit });
    }
    Ok(())
}

/// All triangles by testing every vertex triple against an adjacency matrix.
/// Triples are ascending ids, sorted.
pub fn brute_triangles(g: &Graph, limit: usize) -> Result<Vec<[VertexId; 3]>> {
    guard("brute_triangles", g.n(), limit)?;
    let n = g.n();
    let mut adj = vec![false; n * n];
    for (u, v) in g.edges() {
        adj[u as usize * n + v as usize] = true;
        adj[v as usize * n + u as usize] = true;
    }
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a * n + b] {
                continue;
            }
            for c in b + 1..n {
                if adj[a * n + c] && adj[b * n + c] {
                    out.push([a as VertexId, b as VertexId, c as VertexId]);
                }
            }
        }
    }
    Ok(out)
}

/// What an exhaustive ordering search minimises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective<'a> {
    /// Σ d⁺·d⁻.
    Pm,
    /// Σ (d⁺)².
    Pp,
    /// Σ (d⁺ + w)², one weight per vertex.
    WeightedPp(&'a [u64]),
}

impl Objective<'_> {
    /// Cost paid by `u` with `pred` of its `deg` neighbours placed before it.
    #[inline]
    fn vertex_cost(&self, u: usize, deg: u64, pred: u64) -> u64 {
        let succ = deg - pred;
        match self {
            Objective::Pm => succ * pred,
            Objective::Pp => succ * succ,
            Objective::WeightedPp(w) => (succ + w[u]) * (succ + w[u]),
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        if let Objective::WeightedPp(w) = self {
            if w.len() != n {
                return Err(Error::WeightMismatch {
                    expected: n,
                    got: w.len(),
                });
            }
        }
        Ok(())
    }
}

/// Cost of one ordering under `objective`, evaluated from scratch.
pub fn objective_cost(g: &Graph, order: &Ordering, objective: Objective<'_>) -> Result<u64> {
    objective.check(g.n())?;
    order.check_len(g.n())?;
    Ok(g.vertices()
        .map(|u| {
            let pred = g
                .neighbors(u)
                .iter()
                .filter(|&&v| order.before(v, u))
                .count() as u64;
            objective.vertex_cost(u as usize, g.degree(u) as u64, pred)
        })
        .sum())
}

fn neighbor_masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect()
}

/// Exact minimum over all n! orderings, with a witness.
///
/// The cost of a vertex depends only on which of its neighbours precede it,
/// so the minimum over orders of a prefix set S is a function of S alone;
/// this runs the O(2ⁿ·n) dynamic program over those sets.
pub fn min_cost_exhaustive(
    g: &Graph,
    objective: Objective<'_>,
    limit: usize,
) -> Result<(u64, Ordering)> {
    guard("min_cost_exhaustive", g.n(), limit.min(MAX_SUBSET_DP))?;
    objective.check(g.n())?;
    let n = g.n();
    let nb = neighbor_masks(g);
    let deg: Vec<u64> = g.vertices().map(|u| g.degree(u) as u64).collect();
    let full = (1usize << n) - 1;
    let mut best = vec![u64::MAX; full + 1];
    let mut last = vec![0u8; full + 1];
    best[0] = 0;
    for set in 0..full {
        let base = best[set];
        if base == u64::MAX {
            continue;
        }
        let mut free = !set & full;
        while free != 0 {
            let u = free.trailing_zeros() as usize;
            free &= free - 1;
            let pred = (nb[u] & set as u32).count_ones() as u64;
            let c = base + objective.vertex_cost(u, deg[u], pred);
            let next = set | (1 << u);
            if c < best[next] {
                best[next] = c;
                last[next] = u as u8;
            }
        }
    }
    let mut seq = vec![0 as VertexId; n];
    let mut set = full;
    for slot in (0..n).rev() {
        let u = last[set] as usize;
        seq[slot] = u as VertexId;
        set &= !(1 << u);
    }
    let witness = Ordering::from_sequence(seq).expect("reconstruction is a permutation");
    Ok((best[full], witness))
}

/// Minimum by depth-first permutation generation in lexicographic order.
///
/// A vertex's cost is fixed once it is placed, so partial sums are exact
/// lower bounds and `prune` cuts any prefix that already reaches the best
/// complete cost.
pub fn min_cost_permutations(
    g: &Graph,
    objective: Objective<'_>,
    prune: bool,
    limit: usize,
) -> Result<(u64, Ordering)> {
    guard("min_cost_permutations", g.n(), limit.min(31))?;
    objective.check(g.n())?;
    let n = g.n();
    let nb = neighbor_masks(g);
    let deg: Vec<u64> = g.vertices().map(|u| g.degree(u) as u64).collect();

    struct Search<'a> {
        n: usize,
        nb: &'a [u32],
        deg: &'a [u64],
        objective: Objective<'a>,
        prune: bool,
        prefix: Vec<VertexId>,
        best: u64,
        best_seq: Vec<VertexId>,
    }

    impl Search<'_> {
        fn go(&mut self, placed: u32, cost: u64) {
            if self.prefix.len() == self.n {
                if cost < self.best {
                    self.best = cost;
                    self.best_seq = self.prefix.clone();
                }
                return;
            }
            for u in 0..self.n {
                if placed & (1 << u) != 0 {
                    continue;
                }
                let pred = (self.nb[u] & placed).count_ones() as u64;
                let c = cost + self.objective.vertex_cost(u, self.deg[u], pred);
                if self.prune && c >= self.best {
                    continue;
                }
                self.prefix.push(u as VertexId);
                self.go(placed | (1 << u), c);
                self.prefix.pop();
            }
        }
    }

    let mut s = Search {
        n,
        nb: &nb,
        deg: &deg,
        objective,
        prune,
        prefix: Vec::with_capacity(n),
        best: u64::MAX,
        best_seq: Vec::new(),
    };
    s.go(0, 0);
    let witness = Ordering::from_sequence(s.best_seq).expect("search yields a permutation");
    Ok((s.best, witness))
}

/// NAE3SAT with positive literals only. Variables are numbered from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaeFormula {
    pub n_vars: usize,
    pub clauses: Vec<[u32; 3]>,
}

impl NaeFormula {
    pub fn new(n_vars: usize, clauses: Vec<[u32; 3]>) -> Result<NaeFormula> {
        for (j, c) in clauses.iter().enumerate() {
            for &x in c {
                if x == 0 || x as usize > n_vars {
                    return Err(Error::InvalidFormula(format!(
                        "clause {} uses variable {x} outside 1..={n_vars}",
                        j + 1
                    )));
                }
            }
            if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
                return Err(Error::InvalidFormula(format!(
                    "clause {} repeats a variable",
                    j + 1
                )));
            }
        }
        Ok(NaeFormula { n_vars, clauses })
    }

    /// Whether `assignment` (bit i-1 = x_i) splits every clause.
    pub fn is_satisfied_by(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|c| {
            let trues = c
                .iter()
                .filter(|&&x| assignment >> (x - 1) & 1 == 1)
                .count();
            trues == 1 || trues == 2
        })
    }
}

pub fn nae_satisfiable(f: &NaeFormula, limit: usize) -> Result<bool> {
    guard("nae_satisfiable", f.n_vars, limit.min(40))?;
    Ok((0..1u64 << f.n_vars).any(|a| f.is_satisfied_by(a)))
}

/// Universe `{1..n}`, candidate sets, budget `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub n: usize,
    pub sets: Vec<Vec<u32>>,
    pub k: usize,
}

impl SetCoverInstance {
    pub fn new(n: usize, sets: Vec<Vec<u32>>, k: usize) -> Result<SetCoverInstance> {
        if n > 64 {
            return Err(Error::InvalidInstance(format!(
                "universe of {n} exceeds 64"
            )));
        }
        let mut sets = sets;
        for (j, s) in sets.iter_mut().enumerate() {
            s.sort_unstable();
            s.dedup();
            if let Some(&e) = s.iter().find(|&&e| e == 0 || e as usize > n) {
                return Err(Error::InvalidInstance(format!(
                    "set {} has element {e} outside 1..={n}",
                    j + 1
                )));
            }
        }
        Ok(SetCoverInstance { n, sets, k })
    }

    fn masks(&self) -> Vec<u64> {
        self.sets
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &e| m | 1 << (e - 1)))
            .collect()
    }

    fn universe(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// First element no set covers, if any.
    pub fn uncovered(&self) -> Option<usize> {
        let all = self.masks().iter().fold(0, |a, m| a | m);
        (1..=self.n).find(|&e| all >> (e - 1) & 1 == 0)
    }

    /// Every element covered and at least `k` sets.
    pub fn check_nontrivial(&self) -> Result<()> {
        if let Some(e) = self.uncovered() {
            return Err(Error::Uncoverable(e));
        }
        if self.sets.len() < self.k {
            return Err(Error::InvalidInstance(format!(
                "{} sets but budget {}",
                self.sets.len(),
                self.k
            )));
        }
        Ok(())
    }
}

/// Smallest number of sets covering the universe, by subset enumeration.
pub fn min_set_cover(inst: &SetCoverInstance, limit: usize) -> Result<usize> {
    guard("min_set_cover", inst.sets.len(), limit.min(30))?;
    if let Some(e) = inst.uncovered() {
        return Err(Error::Uncoverable(e));
    }
    let masks = inst.masks();
    let universe = inst.universe();
    let l = masks.len();
    let mut best = usize::MAX;
    for choice in 0u64..1 << l {
        let size = choice.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut cover = 0;
        let mut bits = choice;
        while bits != 0 {
            cover |= masks[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        if cover == universe {
            best = size;
        }
    }
    Ok(best)
}

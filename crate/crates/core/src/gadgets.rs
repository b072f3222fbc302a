//! Reduction gadgets for the ordering-cost problems, small enough to verify
//! by exhaustive search.
//!
//! * [`nae_graph`] turns a positive NAE-3SAT formula into a graph whose
//!   minimum C⁺⁻ is at most `2m` exactly when the formula is satisfiable.
//! * [`ld_gadget`] builds the clique-plus-fan graph L_d whose attachment
//!   simulates one unit of vertex weight in the C⁺⁺ problem, and
//!   [`weighted_to_weightless`] uses it to strip weights.
//! * [`setcover_graph`] builds the weighted C⁺⁺ instance of a Set Cover
//!   instance together with its cost bound V.

use crate::error::{Error, Result};
use crate::graph::{Graph, Label, Ordering, VertexId};
use crate::oracle::{NaeFormula, SetCoverInstance};

/// A graph with a non-negative weight on every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    pub graph: Graph,
    pub weights: Vec<u64>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<u64>) -> Result<WeightedGraph> {
        if weights.len() != graph.n() {
            return Err(Error::WeightMismatch {
                expected: graph.n(),
                got: weights.len(),
            });
        }
        Ok(WeightedGraph { graph, weights })
    }

    pub fn unweighted(graph: Graph) -> WeightedGraph {
        let weights = vec![0; graph.n()];
        WeightedGraph { graph, weights }
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }
}

/// Per-vertex elimination costs `|succ(u)| + w(u)` under one order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CostMultiset {
    pub values: Vec<u64>,
}

impl CostMultiset {
    pub fn new(mut values: Vec<u64>) -> CostMultiset {
        values.sort_unstable();
        CostMultiset { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn linear_cost(&self) -> u64 {
        self.values.iter().sum()
    }

    pub fn squared_cost(&self) -> u64 {
        self.values.iter().map(|c| c * c).sum()
    }

    /// `(d, v)` with `linear = n·d + v` and `1 <= v <= n`.
    pub fn balance_point(&self) -> Result<(i64, i64)> {
        if self.values.is_empty() {
            return Err(Error::EmptyMultiset);
        }
        let n = self.values.len() as i64;
        let linear = self.linear_cost() as i64;
        let d = (linear - 1).div_euclid(n);
        Ok((d, linear - n * d))
    }

    /// Squared cost of the multiset of the same size and linear cost that
    /// holds only `d` and `d + 1`.
    pub fn balanced_cost(&self) -> Result<u64> {
        let (d, v) = self.balance_point()?;
        let n = self.values.len() as i64;
        Ok((v * (d + 1) * (d + 1) + (n - v) * d * d) as u64)
    }

    /// Total excess of the values above `d + 1`.
    pub fn marginal_cost(&self) -> Result<u64> {
        let (d, _) = self.balance_point()?;
        Ok(self
            .values
            .iter()
            .map(|&u| (u as i64 - (d + 1)).max(0) as u64)
            .sum())
    }
}

fn successor_counts(g: &Graph, order: &Ordering) -> Result<Vec<u64>> {
    order.check_len(g.n())?;
    Ok(g.vertices()
        .map(|u| {
            g.neighbors(u)
                .iter()
                .filter(|&&v| order.before(u, v))
                .count() as u64
        })
        .collect())
}

pub fn multiset_costs(wg: &WeightedGraph, order: &Ordering) -> Result<CostMultiset> {
    let succ = successor_counts(&wg.graph, order)?;
    Ok(CostMultiset::new(
        succ.iter().zip(&wg.weights).map(|(s, w)| s + w).collect(),
    ))
}

/// Σ (d⁺ + w)² under `order`.
pub fn weighted_cost(wg: &WeightedGraph, order: &Ordering) -> Result<u64> {
    Ok(multiset_costs(wg, order)?.squared_cost())
}

/// A constructed instance with a role name for every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGadget {
    pub weighted: WeightedGraph,
    pub roles: Vec<String>,
}

impl LabeledGadget {
    pub fn graph(&self) -> &Graph {
        &self.weighted.graph
    }

    pub fn vertex(&self, role: &str) -> Option<VertexId> {
        self.roles
            .iter()
            .position(|r| r == role)
            .map(|i| i as VertexId)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaeGadget {
    pub gadget: LabeledGadget,
    /// 2m: the C⁺⁻ bound separating satisfiable formulas.
    pub threshold: u64,
}

/// One vertex `X_i` per variable, a triangle `L_j^1 L_j^2 L_j^3` per clause
/// and an edge from each literal vertex to the vertex of its variable.
pub fn nae_graph(f: &NaeFormula) -> NaeGadget {
    let n = f.n_vars;
    let mut roles: Vec<String> = (1..=n).map(|i| format!("X{i}")).collect();
    let mut edges = Vec::new();
    for (j, clause) in f.clauses.iter().enumerate() {
        let base = (n + 3 * j) as VertexId;
        for a in 0..3u32 {
            roles.push(format!("L{}_{}", j + 1, a + 1));
            edges.push((base + a, clause[a as usize] - 1));
        }
        edges.extend([(base, base + 1), (base, base + 2), (base + 1, base + 2)]);
    }
    let graph = Graph::from_edges(roles.len(), &edges);
    NaeGadget {
        gadget: LabeledGadget {
            weighted: WeightedGraph::unweighted(graph),
            roles,
        },
        threshold: 2 * f.clauses.len() as u64,
    }
}

/// C_d = d² + d(d+1)² + Σ_{i=0..d} i².
pub fn ld_reference_cost(d: u64) -> u64 {
    d * d + d * (d + 1) * (d + 1) + (0..=d).map(|i| i * i).sum::<u64>()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LdGadget {
    pub gadget: LabeledGadget,
    pub d: u64,
    /// C_d, the optimal C⁺⁺ of the gadget.
    pub reference_cost: u64,
}

impl LdGadget {
    /// Vertex e_d, the attachment point.
    pub fn entry(&self) -> VertexId {
        0
    }

    /// `e_d`, then every `v_i`, then `K_d` down to `K_0`.
    pub fn reference_order(&self) -> Ordering {
        let d = self.d as VertexId;
        let mut seq: Vec<VertexId> = (0..=d).collect();
        seq.extend((0..=d).rev().map(|i| d + 1 + i));
        Ordering::from_sequence(seq).expect("reference order is a permutation")
    }
}

/// Edges of L_d with vertex ids shifted by `base`: `e_d = base`,
/// `v_i = base + i` for `1..=d`, `K_i = base + d + 1 + i` for `0..=d`.
fn ld_edges(d: u32, base: VertexId) -> Vec<(VertexId, VertexId)> {
    let e = base;
    let v = |i: u32| base + i;
    let k = |i: u32| base + d + 1 + i;
    let mut edges = Vec::new();
    for i in 0..=d {
        for j in i + 1..=d {
            edges.push((k(i), k(j)));
        }
    }
    for i in 1..=d {
        edges.push((e, v(i)));
        for j in 0..=d {
            edges.push((v(i), k(j)));
        }
    }
    edges
}

/// A (d+1)-clique K_0..K_d, a vertex e_d with d neighbours v_1..v_d, and
/// every v_i joined to every clique vertex. `d` must be positive.
pub fn ld_gadget(d: u64) -> LdGadget {
    assert!(d >= 1, "L_d needs d >= 1");
    let dd = d as u32;
    let mut roles = vec!["e".to_string()];
    roles.extend((1..=dd).map(|i| format!("v{i}")));
    roles.extend((0..=dd).map(|i| format!("K{i}")));
    let graph = Graph::from_edges(2 * d as usize + 2, &ld_edges(dd, 0));
    LdGadget {
        gadget: LabeledGadget {
            weighted: WeightedGraph::unweighted(graph),
            roles,
        },
        d,
        reference_cost: ld_reference_cost(d),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightlessReduction {
    /// Original vertices keep their ids; gadget vertices follow.
    pub graph: Graph,
    /// Σ C_d over every attached gadget.
    pub offset: u64,
    /// `(vertex, d)` for each attachment, in the order they were made.
    pub attachments: Vec<(VertexId, u64)>,
}

/// Removes every unit of weight by attaching a fresh L_d through its e_d,
/// where `d` is the vertex's degree plus remaining weight. Vertices are
/// processed by ascending id, one unit at a time.
pub fn weighted_to_weightless(
    wg: &WeightedGraph,
    max_vertices: usize,
) -> Result<WeightlessReduction> {
    let g = &wg.graph;
    let mut edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    let mut degree: Vec<u64> = g.vertices().map(|u| g.degree(u) as u64).collect();
    let mut n = g.n();
    let mut offset = 0;
    let mut attachments = Vec::new();
    for u in g.vertices() {
        let mut w = wg.weights[u as usize];
        while w > 0 {
            let d = degree[u as usize] + w;
            let size = 2 * d as usize + 2;
            if n + size > max_vertices {
                return Err(Error::SizeLimit {
                    limit: max_vertices,
                });
            }
            let base = n as VertexId;
            edges.extend(ld_edges(d as u32, base));
            edges.push((u, base));
            n += size;
            degree[u as usize] += 1;
            w -= 1;
            offset += ld_reference_cost(d);
            attachments.push((u, d));
        }
    }
    let max_label = g.labels().iter().copied().max().map_or(0, |l| l + 1);
    let mut labels: Vec<Label> = g.labels().to_vec();
    labels.extend((0..(n - g.n()) as Label).map(|i| max_label + i));
    Ok(WeightlessReduction {
        graph: Graph::from_edges(n, &edges).with_labels(labels),
        offset,
        attachments,
    })
}

/// Two graphs joined by the single edge `{a, b}`; `a` in `left`, `b` in `right`.
/// Right-hand vertices are shifted past the left ones.
pub fn bridge(left: &Graph, a: VertexId, right: &Graph, b: VertexId) -> Graph {
    let shift = left.n() as VertexId;
    let mut edges: Vec<(VertexId, VertexId)> = left.edges().collect();
    edges.extend(right.edges().map(|(u, v)| (u + shift, v + shift)));
    edges.push((a, b + shift));
    Graph::from_edges(left.n() + right.n(), &edges)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverGadget {
    pub gadget: LabeledGadget,
    pub d: u64,
    /// V: the best cost reachable with marginal cost k.
    pub bound: u64,
    /// Vertex ids by role, for building orders.
    pub hub: VertexId,
    pub elements: Vec<VertexId>,
    pub sets: Vec<VertexId>,
    /// `(element i, set j, a, b, c)` for each membership i ∈ S_j.
    pub triples: Vec<(u32, usize, VertexId, VertexId, VertexId)>,
}

/// Weighted C⁺⁺ instance of a Set Cover instance.
///
/// Vertices: hub A, one e_i per element, one s_j per set, and a_j^i, b_j^i,
/// c_j^i per membership. A touches every s_j and e_i; a and b touch s_j and
/// c; c touches e_i. Weights lift every vertex's full cost (degree plus
/// weight) to d+2, except c at d+3 and A at d+1+n+k, with
/// d = 1 + max(ℓ, 2·max|S_j|).
pub fn setcover_graph(inst: &SetCoverInstance) -> Result<SetCoverGadget> {
    inst.check_nontrivial()?;
    let n = inst.n;
    let l = inst.sets.len();
    let k = inst.k as u64;
    let max_set = inst.sets.iter().map(Vec::len).max().unwrap_or(0);
    let d = 1 + l.max(2 * max_set) as u64;

    let hub: VertexId = 0;
    let elements: Vec<VertexId> = (1..=n as VertexId).collect();
    let sets: Vec<VertexId> = (0..l).map(|j| (n + 1 + j) as VertexId).collect();
    let mut roles = vec!["A".to_string()];
    roles.extend((1..=n).map(|i| format!("e{i}")));
    roles.extend((1..=l).map(|j| format!("s{j}")));
    let mut edges = Vec::new();
    for &s in &sets {
        edges.push((hub, s));
    }
    for &e in &elements {
        edges.push((hub, e));
    }
    let mut triples = Vec::new();
    let mut next = (1 + n + l) as VertexId;
    for (j, set) in inst.sets.iter().enumerate() {
        for &i in set {
            let (a, b, c) = (next, next + 1, next + 2);
            next += 3;
            for (tag, _) in [("a", a), ("b", b), ("c", c)] {
                roles.push(format!("{tag}{}_{}", j + 1, i));
            }
            edges.extend([
                (a, sets[j]),
                (b, sets[j]),
                (a, c),
                (b, c),
                (c, elements[i as usize - 1]),
            ]);
            triples.push((i, j, a, b, c));
        }
    }
    let graph = Graph::from_edges(next as usize, &edges);

    let mut target = vec![d + 2; graph.n()];
    target[hub as usize] = d + 1 + n as u64 + k;
    for &(_, _, _, _, c) in &triples {
        target[c as usize] = d + 3;
    }
    let mut weights = Vec::with_capacity(graph.n());
    for u in graph.vertices() {
        let w = target[u as usize] as i64 - graph.degree(u) as i64;
        if w < 0 {
            return Err(Error::NegativeWeight {
                vertex: u as usize,
                weight: w,
            });
        }
        weights.push(w as u64);
    }

    let memberships = triples.len() as u64;
    let at_d = memberships - n as u64;
    let rest = graph.n() as u64 - k - at_d;
    let bound = k * (d + 2) * (d + 2) + at_d * d * d + rest * (d + 1) * (d + 1);
    Ok(SetCoverGadget {
        gadget: LabeledGadget {
            weighted: WeightedGraph::new(graph, weights)?,
            roles,
        },
        d,
        bound,
        hub,
        elements,
        sets,
        triples,
    })
}

impl SetCoverGadget {
    /// The elimination order built from a cover: each chosen s_j followed by
    /// its a, b, c triples and any element not yet eliminated, then A, then
    /// the remaining sets with their triples.
    ///
    /// `chosen` holds set indices; it may be smaller than k, in which case
    /// further sets are taken in index order.
    pub fn cover_order(&self, chosen: &[usize], k: usize) -> Ordering {
        let mut picked: Vec<usize> = chosen.to_vec();
        for j in 0..self.sets.len() {
            if picked.len() >= k {
                break;
            }
            if !picked.contains(&j) {
                picked.push(j);
            }
        }
        let mut seq = Vec::with_capacity(self.gadget.graph().n());
        let mut element_done = vec![false; self.elements.len()];
        let emit_set = |j: usize,
                        seq: &mut Vec<VertexId>,
                        element_done: &mut Vec<bool>,
                        with_elements: bool| {
            seq.push(self.sets[j]);
            for &(i, jj, a, b, c) in &self.triples {
                if jj != j {
                    continue;
                }
                seq.extend([a, b, c]);
                let idx = i as usize - 1;
                if with_elements && !element_done[idx] {
                    element_done[idx] = true;
                    seq.push(self.elements[idx]);
                }
            }
        };
        for &j in &picked {
            emit_set(j, &mut seq, &mut element_done, true);
        }
        // Elements missed by an incomplete cover still precede A.
        for (idx, done) in element_done.iter_mut().enumerate() {
            if !*done {
                *done = true;
                seq.push(self.elements[idx]);
            }
        }
        seq.push(self.hub);
        for j in 0..self.sets.len() {
            if !picked.contains(&j) {
                emit_set(j, &mut seq, &mut element_done, false);
            }
        }
        Ordering::from_sequence(seq).expect("cover order is a permutation")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{min_cost_exhaustive, Objective};
    use crate::ordering::cost_report;

    #[test]
    fn nae_one_clause() {
        let f = NaeFormula::new(3, vec![[1, 2, 3]]).unwrap();
        let g = nae_graph(&f);
        assert_eq!((g.gadget.graph().n(), g.gadget.graph().m()), (6, 6));
        assert_eq!(g.threshold, 2);
        assert_eq!(g.gadget.vertex("L1_2"), Some(4));
    }

    #[test]
    fn nae_two_clauses() {
        let f = NaeFormula::new(4, vec![[1, 2, 3], [2, 3, 4]]).unwrap();
        let g = nae_graph(&f);
        assert_eq!((g.gadget.graph().n(), g.gadget.graph().m()), (10, 12));
        assert_eq!(g.threshold, 4);
        let (best, _) = min_cost_exhaustive(g.gadget.graph(), Objective::Pm, 20).unwrap();
        assert!(best <= 4);
    }

    #[test]
    fn ld_structure() {
        let l1 = ld_gadget(1);
        let g = l1.gadget.graph();
        assert_eq!((g.n(), g.m()), (4, 4));
        let (e, v1, k0, k1) = (0, 1, 2, 3);
        for (a, b) in [(k0, k1), (e, v1), (v1, k0), (v1, k1)] {
            assert!(g.has_edge(a, b));
        }
        let l2 = ld_gadget(2);
        assert_eq!((l2.gadget.graph().n(), l2.gadget.graph().m()), (6, 11));
        let l3 = ld_gadget(3);
        let g3 = l3.gadget.graph();
        assert_eq!(g3.degree(l3.entry()), 3);
        for role in ["v1", "v2", "v3"] {
            assert_eq!(g3.degree(l3.gadget.vertex(role).unwrap()), 5);
        }
        for role in ["K0", "K1", "K2", "K3"] {
            assert_eq!(g3.degree(l3.gadget.vertex(role).unwrap()), 6);
        }
    }

    #[test]
    fn ld_reference_values() {
        assert_eq!(ld_reference_cost(1), 6);
        assert_eq!(ld_reference_cost(2), 27);
        assert_eq!(ld_reference_cost(3), 71);
        for d in 1..=4 {
            let l = ld_gadget(d);
            let order = l.reference_order();
            assert_eq!(
                cost_report(l.gadget.graph(), &order).unwrap().c_pp,
                l.reference_cost
            );
        }
    }

    /// Canonical L_d order satisfies the weightless optimality certificate:
    /// costs contain every integer 0..=d+1, and each of 0..d-1 at most once.
    #[test]
    fn ld_reference_order_certificate() {
        for d in 1..=5u64 {
            let l = ld_gadget(d);
            let ms = multiset_costs(&l.gadget.weighted, &l.reference_order()).unwrap();
            for x in 0..=d + 1 {
                let count = ms.values.iter().filter(|&&c| c == x).count();
                assert!(count >= 1, "missing {x} for d={d}");
                if x < d {
                    assert_eq!(count, 1, "value {x} repeated for d={d}");
                }
            }
        }
    }

    #[test]
    fn weighted_cost_basics() {
        let single = WeightedGraph::new(Graph::from_edges(1, &[]), vec![1]).unwrap();
        assert_eq!(weighted_cost(&single, &Ordering::identity(1)).unwrap(), 1);
        let g = crate::graph::gen_gnm(12, 30, 3).unwrap();
        let o = crate::ordering::random_order(&g, 1);
        let wg = WeightedGraph::unweighted(g.clone());
        assert_eq!(
            weighted_cost(&wg, &o).unwrap(),
            cost_report(&g, &o).unwrap().c_pp
        );
    }

    #[test]
    fn ld_weight_on_entry_costs_two_d_plus_one() {
        for d in 1..=3 {
            let mut l = ld_gadget(d);
            l.gadget.weighted.weights[0] = 1;
            assert_eq!(
                weighted_cost(&l.gadget.weighted, &l.reference_order()).unwrap(),
                l.reference_cost + 2 * d + 1
            );
        }
    }

    #[test]
    fn marginal_cost_examples() {
        let flat = CostMultiset::new(vec![4, 4, 5, 5, 5]);
        assert_eq!(flat.marginal_cost().unwrap(), 0);
        let mut nine_tens = vec![10; 9];
        nine_tens.push(11);
        let m = CostMultiset::new(nine_tens);
        assert_eq!(m.linear_cost(), 101);
        assert_eq!(m.balance_point().unwrap(), (10, 1));
        assert_eq!(m.marginal_cost().unwrap(), 0);
        let mut nine_elevens = vec![11; 9];
        nine_elevens.push(2);
        let m2 = CostMultiset::new(nine_elevens);
        assert_eq!(m2.linear_cost(), 101);
        assert_eq!(m2.marginal_cost().unwrap(), 0);
        assert!(m2.squared_cost() > m.squared_cost());
        assert!(matches!(
            CostMultiset::new(vec![]).marginal_cost(),
            Err(Error::EmptyMultiset)
        ));
        // Linear cost 0 puts the balance point below zero.
        assert_eq!(CostMultiset::new(vec![0, 0]).marginal_cost().unwrap(), 0);
    }

    #[test]
    fn weightless_reduction_single_vertex() {
        let wg = WeightedGraph::new(Graph::from_edges(1, &[]), vec![1]).unwrap();
        let red = weighted_to_weightless(&wg, 64).unwrap();
        assert_eq!(red.graph.n(), 5);
        assert_eq!(red.offset, 6);
        assert_eq!(red.attachments, vec![(0, 1)]);
        let (best, _) = min_cost_exhaustive(&red.graph, Objective::Pp, 20).unwrap();
        assert_eq!(best, 7);
    }

    #[test]
    fn weightless_reduction_identity_on_zero_weights() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let red = weighted_to_weightless(&WeightedGraph::unweighted(g.clone()), 64).unwrap();
        assert_eq!((red.graph, red.offset), (g, 0));
    }

    #[test]
    fn weightless_reduction_edge() {
        let wg = WeightedGraph::new(Graph::from_edges(2, &[(0, 1)]), vec![1, 0]).unwrap();
        let red = weighted_to_weightless(&wg, 64).unwrap();
        assert_eq!(red.attachments, vec![(0, 2)]);
        assert_eq!(red.graph.n(), 8);
        let weighted = min_cost_exhaustive(&wg.graph, Objective::WeightedPp(&wg.weights), 20)
            .unwrap()
            .0;
        let plain = min_cost_exhaustive(&red.graph, Objective::Pp, 20)
            .unwrap()
            .0;
        assert_eq!(plain, weighted + red.offset);
        assert!(weighted_to_weightless(&wg, 7).is_err());
    }

    #[test]
    fn setcover_worked_instance() {
        let inst = SetCoverInstance::new(1, vec![vec![1]], 1).unwrap();
        let sc = setcover_graph(&inst).unwrap();
        assert_eq!(sc.d, 3);
        let g = &sc.gadget;
        assert_eq!(g.graph().n(), 6);
        let w = |role: &str| g.weighted.weights[g.vertex(role).unwrap() as usize];
        assert_eq!(
            [w("A"), w("e1"), w("s1"), w("a1_1"), w("b1_1"), w("c1_1")],
            [4, 3, 2, 3, 3, 3]
        );
        assert_eq!(sc.bound, 105);
        let order = sc.cover_order(&[0], 1);
        let names: Vec<&str> = order
            .sequence()
            .iter()
            .map(|&u| g.roles[u as usize].as_str())
            .collect();
        assert_eq!(names, ["s1", "a1_1", "b1_1", "c1_1", "e1", "A"]);
        assert_eq!(weighted_cost(&g.weighted, &order).unwrap(), 105);
        let (best, _) =
            min_cost_exhaustive(g.graph(), Objective::WeightedPp(&g.weighted.weights), 20).unwrap();
        assert_eq!(best, 105);
    }

    #[test]
    fn setcover_rejects_trivial_instances() {
        let uncovered = SetCoverInstance::new(2, vec![vec![1]], 1).unwrap();
        assert!(matches!(
            setcover_graph(&uncovered),
            Err(Error::Uncoverable(2))
        ));
        let short = SetCoverInstance::new(1, vec![vec![1]], 2).unwrap();
        assert!(setcover_graph(&short).is_err());
    }

    #[test]
    fn bridge_shifts_right_side() {
        let a = Graph::from_edges(2, &[(0, 1)]);
        let b = Graph::from_edges(3, &[(0, 2)]);
        let g = bridge(&a, 1, &b, 2);
        assert_eq!((g.n(), g.m()), (5, 3));
        assert!(g.has_edge(1, 4) && g.has_edge(2, 4));
    }
}

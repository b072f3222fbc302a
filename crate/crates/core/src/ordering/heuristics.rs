//! The two linear-time C⁺⁻ heuristics: Split and Check.

use super::baseline::degree_sorted;
use crate::graph::{Graph, Ordering, VertexId};

/// Deals the non-increasing degree sequence alternately to the front and
/// the back of the ordering, so the heaviest vertices end up with either
/// few predecessors or few successors.
pub fn split_order(g: &Graph) -> Ordering {
    let n = g.n();
    let by_degree = degree_sorted(g, true);
    let mut ranks = vec![0u32; n];
    for (idx, &u) in by_degree.iter().enumerate() {
        let delta = idx as u32 + 1;
        ranks[u as usize] = if delta % 2 == 1 {
            delta / 2 + 1
        } else {
            n as u32 + 1 - delta / 2
        };
    }
    Ordering::from_ranks(&ranks).expect("split ranks form a bijection")
}

/// Places each vertex, by non-increasing degree, either right after the
/// vertices already at the front or right before those already at the back,
/// whichever gives it the smaller C⁺⁻ contribution. Ties go to the back.
pub fn check_order(g: &Graph) -> Ordering {
    let n = g.n();
    let mut at_begin = vec![0u64; n];
    let mut at_end = vec![0u64; n];
    let mut front: Vec<VertexId> = Vec::with_capacity(n);
    let mut back: Vec<VertexId> = Vec::with_capacity(n);
    for u in degree_sorted(g, true) {
        let nb = at_begin[u as usize];
        let ne = at_end[u as usize];
        let open = g.degree(u) as u64 - nb - ne;
        let cost_begin = nb * (ne + open);
        let cost_end = (nb + open) * ne;
        let to_front = cost_begin < cost_end;
        for &v in g.neighbors(u) {
            if to_front {
                at_begin[v as usize] += 1;
            } else {
                at_end[v as usize] += 1;
            }
        }
        if to_front {
            front.push(u);
        } else {
            back.push(u);
        }
    }
    // Back vertices were placed from the end inwards.
    front.extend(back.into_iter().rev());
    Ordering::from_sequence(front).expect("every vertex placed once")
}

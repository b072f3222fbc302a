use super::{Graph, Ordering, VertexId};
use crate::error::Result;

/// The acyclic orientation of a graph under an ordering: every edge points
/// from the lower-ranked endpoint to the higher-ranked one.
///
/// Both successor and predecessor lists are sorted by rank.
#[derive(Clone, Debug)]
pub struct OrientedView {
    out_offsets: Vec<usize>,
    out_targets: Vec<VertexId>,
    in_offsets: Vec<usize>,
    in_targets: Vec<VertexId>,
}

impl OrientedView {
    pub fn new(g: &Graph, order: &Ordering) -> Result<OrientedView> {
        order.check_len(g.n())?;
        let n = g.n();
        let mut out_offsets = Vec::with_capacity(n + 1);
        let mut in_offsets = Vec::with_capacity(n + 1);
        out_offsets.push(0);
        in_offsets.push(0);
        for u in g.vertices() {
            let pu = order.position(u);
            let out = g
                .neighbors(u)
                .iter()
                .filter(|&&v| order.position(v) > pu)
                .count();
            out_offsets.push(out_offsets[u as usize] + out);
            in_offsets.push(in_offsets[u as usize] + g.degree(u) - out);
        }
        let m = g.m() as usize;
        let mut out_targets = vec![0; m];
        let mut out_fill = out_offsets[..n].to_vec();
        let mut in_targets = vec![0; m];
        let mut in_fill = in_offsets[..n].to_vec();
        // Walking sources in rank order fills every list already sorted by
        // rank: v lands in in-list of w and w in the out-list of v, both in
        // increasing rank of the vertex being appended.
        for &v in order.sequence() {
            for &w in g.neighbors(v) {
                if order.position(w) > order.position(v) {
                    in_targets[in_fill[w as usize]] = v;
                    in_fill[w as usize] += 1;
                }
            }
        }
        for &w in order.sequence() {
            for &v in g.neighbors(w) {
                if order.position(v) < order.position(w) {
                    out_targets[out_fill[v as usize]] = w;
                    out_fill[v as usize] += 1;
                }
            }
        }
        Ok(OrientedView {
            out_offsets,
            out_targets,
            in_offsets,
            in_targets,
        })
    }

    pub fn n(&self) -> usize {
        self.out_offsets.len() - 1
    }

    pub fn m(&self) -> u64 {
        self.out_targets.len() as u64
    }

    /// Successors N⁺ of `u`, by increasing rank.
    #[inline]
    pub fn out_neighbors(&self, u: VertexId) -> &[VertexId] {
        let u = u as usize;
        &self.out_targets[self.out_offsets[u]..self.out_offsets[u + 1]]
    }

    /// Predecessors N⁻ of `u`, by increasing rank.
    #[inline]
    pub fn in_neighbors(&self, u: VertexId) -> &[VertexId] {
        let u = u as usize;
        &self.in_targets[self.in_offsets[u]..self.in_offsets[u + 1]]
    }

    #[inline]
    pub fn out_degree(&self, u: VertexId) -> usize {
        let u = u as usize;
        self.out_offsets[u + 1] - self.out_offsets[u]
    }

    #[inline]
    pub fn in_degree(&self, u: VertexId) -> usize {
        let u = u as usize;
        self.in_offsets[u + 1] - self.in_offsets[u]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_gnm;
    use crate::ordering::random_order;

    #[test]
    fn triangle_degrees() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let view = OrientedView::new(&g, &Ordering::identity(3)).unwrap();
        assert_eq!(view.out_degree(0), 2);
        assert_eq!((view.out_degree(1), view.in_degree(1)), (1, 1));
        assert_eq!(view.in_degree(2), 2);
    }

    #[test]
    fn star_with_center_first() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let view = OrientedView::new(&g, &Ordering::identity(4)).unwrap();
        assert_eq!(view.out_degree(0), 3);
        for leaf in 1..4 {
            assert_eq!((view.in_degree(leaf), view.out_degree(leaf)), (1, 0));
        }
    }

    #[test]
    fn rank_domain_mismatch() {
        let g = Graph::from_edges(3, &[(0, 1)]);
        assert!(OrientedView::new(&g, &Ordering::identity(2)).is_err());
    }

    /// Kahn's algorithm as an independent acyclicity check.
    fn is_acyclic(view: &OrientedView) -> bool {
        let n = view.n();
        let mut indeg: Vec<usize> = (0..n as u32).map(|u| view.in_degree(u)).collect();
        let mut stack: Vec<u32> = (0..n as u32).filter(|&u| indeg[u as usize] == 0).collect();
        let mut seen = 0;
        while let Some(u) = stack.pop() {
            seen += 1;
            for &w in view.out_neighbors(u) {
                indeg[w as usize] -= 1;
                if indeg[w as usize] == 0 {
                    stack.push(w);
                }
            }
        }
        seen == n
    }

    #[test]
    fn random_orientation_is_a_dag() {
        for seed in 0..10 {
            let g = gen_gnm(50, 200, seed).unwrap();
            let order = random_order(&g, seed + 100);
            let view = OrientedView::new(&g, &order).unwrap();
            assert!(is_acyclic(&view));
            let out: usize = g.vertices().map(|u| view.out_degree(u)).sum();
            let inn: usize = g.vertices().map(|u| view.in_degree(u)).sum();
            assert_eq!((out as u64, inn as u64), (g.m(), g.m()));
            for u in g.vertices() {
                assert_eq!(view.out_degree(u) + view.in_degree(u), g.degree(u));
                for w in view.out_neighbors(u).windows(2) {
                    assert!(order.before(w[0], w[1]));
                }
                for w in view.in_neighbors(u).windows(2) {
                    assert!(order.before(w[0], w[1]));
                }
            }
        }
    }
}

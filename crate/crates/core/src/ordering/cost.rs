use crate::error::Result;
use crate::graph::{Graph, Ordering};

/// Order-induced operation counts of the two listing algorithms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CostReport {
    /// Σ (d⁺)², the innermost-loop work of A++.
    pub c_pp: u64,
    /// Σ d⁺·d⁻, the innermost-loop work of A+-.
    pub c_pm: u64,
    /// Σ (d⁻)².
    pub c_mm: u64,
    /// Σ d², independent of the ordering.
    pub sum_deg_sq: u64,
}

impl CostReport {
    /// `c_pp + 2 c_pm + c_mm == Σ d²`.
    pub fn identity_holds(&self) -> bool {
        self.c_pp + 2 * self.c_pm + self.c_mm == self.sum_deg_sq
    }

    pub fn from_degrees<I>(degrees: I) -> CostReport
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut r = CostReport::default();
        for (out, inn) in degrees {
            r.c_pp += out * out;
            r.c_pm += out * inn;
            r.c_mm += inn * inn;
            r.sum_deg_sq += (out + inn) * (out + inn);
        }
        r
    }
}

/// Out- and in-degree of every vertex under `order`.
pub fn split_degrees(g: &Graph, order: &Ordering) -> Result<Vec<(u64, u64)>> {
    order.check_len(g.n())?;
    Ok(g.vertices()
        .map(|u| {
            let pu = order.position(u);
            let out = g
                .neighbors(u)
                .iter()
                .filter(|&&v| order.position(v) > pu)
                .count() as u64;
            (out, g.degree(u) as u64 - out)
        })
        .collect())
}

pub fn cost_report(g: &Graph, order: &Ordering) -> Result<CostReport> {
    Ok(CostReport::from_degrees(split_degrees(g, order)?))
}

pub fn cost_pm(g: &Graph, order: &Ordering) -> Result<u64> {
    Ok(cost_report(g, order)?.c_pm)
}

pub fn cost_pp(g: &Graph, order: &Ordering) -> Result<u64> {
    Ok(cost_report(g, order)?.c_pp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_gnm;
    use crate::ordering::random_order;

    fn k3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)])
    }

    #[test]
    fn triangle_costs_any_order() {
        for seq in [[0, 1, 2], [2, 0, 1], [1, 2, 0]] {
            let o = Ordering::from_sequence(seq.to_vec()).unwrap();
            let r = cost_report(&k3(), &o).unwrap();
            assert_eq!((r.c_pm, r.c_pp), (1, 5));
            assert!(r.identity_holds());
        }
    }

    #[test]
    fn path_center_first() {
        // a=0, b=1, c=2 with edges a-b, b-c; b ranked first.
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let o = Ordering::from_sequence(vec![1, 0, 2]).unwrap();
        let r = cost_report(&g, &o).unwrap();
        assert_eq!((r.c_pp, r.c_pm), (4, 0));
    }

    /// Σ over oriented edges (u, v) of d⁺(v) counts each wedge at its middle vertex.
    #[test]
    fn c_pm_double_entry() {
        let g = gen_gnm(30, 120, 7).unwrap();
        for seed in 0..5 {
            let o = random_order(&g, seed);
            let out = |v: u32| g.neighbors(v).iter().filter(|&&w| o.before(v, w)).count() as u64;
            let by_edges: u64 = g
                .edges()
                .map(|(a, b)| if o.before(a, b) { out(b) } else { out(a) })
                .sum();
            let r = cost_report(&g, &o).unwrap();
            assert_eq!(r.c_pm, by_edges);
            assert!(r.identity_holds());
            assert!(r.c_pp >= g.m());
        }
    }
}

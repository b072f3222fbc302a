//! Vertex orderings and the costs they induce.

mod baseline;
mod cost;
mod heuristics;
mod neigh;

use std::fmt;
use std::str::FromStr;

pub use baseline::{
    core_decomposition, core_order, degree_order, identity_order, random_order, CoreDecomposition,
};
pub use cost::{cost_pm, cost_pp, cost_report, split_degrees, CostReport};
pub use heuristics::{check_order, split_order};
pub use neigh::{neigh_order, neigh_order_with, NeighConfig, NeighReport, NeighState, Relocation};

use crate::graph::{Graph, Ordering};

/// Every ordering the toolkit can compute, by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Identity,
    Random,
    Degree,
    Core,
    Split,
    Check,
    Neigh,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Identity,
        Method::Random,
        Method::Degree,
        Method::Core,
        Method::Split,
        Method::Check,
        Method::Neigh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Identity => "identity",
            Method::Random => "random",
            Method::Degree => "degree",
            Method::Core => "core",
            Method::Split => "split",
            Method::Check => "check",
            Method::Neigh => "neigh",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown ordering method {s:?} (expected one of identity, random, degree, core, split, check, neigh)"
                )
            })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct MethodParams {
    pub seed: u64,
    pub neigh: NeighConfig,
}

/// Computes `method`; Neigh starts from the Split ordering.
pub fn compute_order(g: &Graph, method: Method, params: &MethodParams) -> Ordering {
    match method {
        Method::Identity => identity_order(g),
        Method::Random => random_order(g, params.seed),
        Method::Degree => degree_order(g),
        Method::Core => core_order(g),
        Method::Split => split_order(g),
        Method::Check => check_order(g),
        Method::Neigh => {
            let start = split_order(g);
            neigh_order(g, &start, params.neigh)
                .expect("split order matches the graph")
                .0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_names_roundtrip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("bogus".parse::<Method>().is_err());
    }
}

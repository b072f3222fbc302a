//! Triangle listing over order-induced edge orientations.
//!
//! The crate covers four layers:
//!
//! * [`graph`]: simple undirected graphs, orderings and the oriented view an
//!   ordering induces.
//! * [`ordering`]: baseline orderings (identity, random, degree, core), the
//!   C⁺⁻-targeting heuristics (Split, Check, Neigh) and the cost functions
//!   C⁺⁺ = Σ(d⁺)² and C⁺⁻ = Σ d⁺d⁻.
//! * [`listing`]: the A++ and A+- listing algorithms, whose innermost loops
//!   run exactly C⁺⁺ and C⁺⁻ times.
//! * [`oracle`] and [`gadgets`]: exhaustive reference solvers and the
//!   reduction gadgets they verify.
//!
//! ```
//! use trilist_core::graph::gen_gnm;
//! use trilist_core::listing::{list_apm, CountSink};
//! use trilist_core::ordering::{cost_report, split_order};
//!
//! let g = gen_gnm(100, 400, 1).unwrap();
//! let order = split_order(&g);
//! let stats = list_apm(&g, &order, &mut CountSink::default()).unwrap();
//! assert_eq!(stats.inner_ops, cost_report(&g, &order).unwrap().c_pm);
//! ```

pub mod error;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod listing;
pub mod oracle;
pub mod ordering;

pub use error::{Error, Result};
pub use graph::{Graph, Ordering, OrientedView, VertexId};
pub use listing::{Algorithm, ListingStats};
pub use ordering::{CostReport, Method};

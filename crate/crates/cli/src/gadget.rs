use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::ValueEnum;

use trilist_core::gadgets::{
    ld_gadget, nae_graph, setcover_graph, weighted_cost, weighted_to_weightless, LabeledGadget,
    WeightedGraph,
};
use trilist_core::io::{read_nae, read_set_cover, read_weights, write_edgelist, write_sidecar};
use trilist_core::oracle::{
    min_cost_exhaustive, min_set_cover, nae_satisfiable, Objective, DEFAULT_NAE_GUARD,
    DEFAULT_ORDER_GUARD, DEFAULT_SET_COVER_GUARD,
};
use trilist_core::Error;

use crate::{create, load, open};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Nae,
    Ld,
    Setcover,
    Weight2plain,
}

pub const GUARD_ENV: &str = "TRILIST_GUARD_N";

/// `TRILIST_GUARD_N` replaces every oracle guard when set.
fn guard(default: usize) -> usize {
    std::env::var(GUARD_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(default)
}

fn emit(gadget: &LabeledGadget, prefix: &Path) -> Result<()> {
    let with = |ext: &str| {
        let mut p = prefix.as_os_str().to_owned();
        p.push(ext);
        PathBuf::from(p)
    };
    let (edges, sidecar) = (with(".edges"), with(".sidecar"));
    let mut w = create(&edges)?;
    write_edgelist(gadget.graph(), &mut w)?;
    w.flush()?;
    let mut w = create(&sidecar)?;
    write_sidecar(gadget, &mut w)?;
    w.flush()?;
    println!(
        "wrote {} and {} ({} vertices, {} edges)",
        edges.display(),
        sidecar.display(),
        gadget.graph().n(),
        gadget.graph().m()
    );
    Ok(())
}

enum Verdict {
    Pass(String),
    Fail(String),
}

/// Runs a verification; a guard refusal is reported and counts as not passed.
fn verdict(kind: Kind, check: impl FnOnce() -> trilist_core::Result<Verdict>) -> bool {
    let name = kind
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    match check() {
        Ok(Verdict::Pass(msg)) => {
            println!("PASS {name}: {msg}");
            true
        }
        Ok(Verdict::Fail(msg)) => {
            println!("FAIL {name}: {msg}");
            false
        }
        Err(e @ Error::GuardExceeded { .. }) => {
            println!("REFUSED {name}: {e} (set {GUARD_ENV} to raise it)");
            false
        }
        Err(e) => {
            println!("FAIL {name}: {e}");
            false
        }
    }
}

fn default_prefix(instance: &str, kind: Kind) -> PathBuf {
    match kind {
        Kind::Ld => PathBuf::from(format!("ld{instance}")),
        _ => PathBuf::from(format!("{instance}.gadget")),
    }
}

pub fn run(
    kind: Kind,
    instance: &str,
    verify: bool,
    weights: Option<&Path>,
    out: Option<&Path>,
) -> Result<bool> {
    let prefix = out
        .map(Path::to_path_buf)
        .unwrap_or_else(|| default_prefix(instance, kind));
    let order_guard = guard(DEFAULT_ORDER_GUARD);
    match kind {
        Kind::Nae => {
            let path = Path::new(instance);
            let f = read_nae(open(path)?).with_context(|| format!("reading {instance}"))?;
            let gadget = nae_graph(&f);
            emit(&gadget.gadget, &prefix)?;
            if !verify {
                return Ok(true);
            }
            Ok(verdict(kind, || {
                let sat = nae_satisfiable(&f, guard(DEFAULT_NAE_GUARD))?;
                let (min, _) =
                    min_cost_exhaustive(gadget.gadget.graph(), Objective::Pm, order_guard)?;
                let msg = format!(
                    "satisfiable={sat}, min C+- = {min}, 2m = {}",
                    gadget.threshold
                );
                Ok(if sat == (min <= gadget.threshold) {
                    Verdict::Pass(msg)
                } else {
                    Verdict::Fail(msg)
                })
            }))
        }
        Kind::Ld => {
            let d: u64 = instance
                .parse()
                .ok()
                .filter(|&d| d >= 1)
                .with_context(|| format!("L_d needs a positive integer d, got {instance:?}"))?;
            let ld = ld_gadget(d);
            emit(&ld.gadget, &prefix)?;
            if !verify {
                return Ok(true);
            }
            Ok(verdict(kind, || {
                let (min, _) = min_cost_exhaustive(ld.gadget.graph(), Objective::Pp, order_guard)?;
                let reference = weighted_cost(&ld.gadget.weighted, &ld.reference_order())?;
                let msg = format!("min C++ = {min}, C_d = {}", ld.reference_cost);
                Ok(if min == ld.reference_cost && reference == min {
                    Verdict::Pass(msg)
                } else {
                    Verdict::Fail(msg)
                })
            }))
        }
        Kind::Setcover => {
            let path = Path::new(instance);
            let inst =
                read_set_cover(open(path)?).with_context(|| format!("reading {instance}"))?;
            let sc = setcover_graph(&inst)?;
            emit(&sc.gadget, &prefix)?;
            println!("d = {}, V = {}", sc.d, sc.bound);
            if !verify {
                return Ok(true);
            }
            Ok(verdict(kind, || {
                let cover = min_set_cover(&inst, guard(DEFAULT_SET_COVER_GUARD))?;
                let wg = &sc.gadget.weighted;
                let (min, _) = min_cost_exhaustive(
                    &wg.graph,
                    Objective::WeightedPp(&wg.weights),
                    order_guard,
                )?;
                let msg = format!(
                    "min cover = {cover}, k = {}, min weighted C++ = {min}, V = {}",
                    inst.k, sc.bound
                );
                Ok(if (min <= sc.bound) == (cover <= inst.k) {
                    Verdict::Pass(msg)
                } else {
                    Verdict::Fail(msg)
                })
            }))
        }
        Kind::Weight2plain => {
            let g = load(Path::new(instance))?;
            let w = match weights {
                Some(p) => read_weights(&g, open(p)?)
                    .with_context(|| format!("reading {}", p.display()))?,
                None => vec![0; g.n()],
            };
            let wg = WeightedGraph::new(g, w)?;
            let red = weighted_to_weightless(&wg, usize::MAX)?;
            let mut roles: Vec<String> =
                wg.graph.labels().iter().map(|l| format!("x{l}")).collect();
            for (a, &(_, d)) in red.attachments.iter().enumerate() {
                roles.push(format!("L{a}_e"));
                roles.extend((1..=d).map(|i| format!("L{a}_v{i}")));
                roles.extend((0..=d).map(|i| format!("L{a}_K{i}")));
            }
            let plain = LabeledGadget {
                weighted: WeightedGraph::unweighted(red.graph.clone()),
                roles,
            };
            emit(&plain, &prefix)?;
            println!(
                "offset = {}, {} gadgets attached",
                red.offset,
                red.attachments.len()
            );
            if !verify {
                return Ok(true);
            }
            Ok(verdict(kind, || {
                let (weighted, _) = min_cost_exhaustive(
                    &wg.graph,
                    Objective::WeightedPp(&wg.weights),
                    order_guard,
                )?;
                let (unweighted, _) = min_cost_exhaustive(&red.graph, Objective::Pp, order_guard)?;
                let msg = format!(
                    "weighted optimum {weighted} + offset {} vs weightless optimum {unweighted}",
                    red.offset
                );
                Ok(if weighted + red.offset == unweighted {
                    Verdict::Pass(msg)
                } else {
                    Verdict::Fail(msg)
                })
            }))
        }
    }
}

use std::io::{self, Write};
use std::time::Duration;

use serde::Serialize;
use trilist_core::{CostReport, Graph};

/// One listing run. Field order is the CSV column order.
#[derive(Debug, Serialize)]
pub struct BenchRecord {
    pub dataset: String,
    pub algo: String,
    pub ordering: String,
    pub mode: String,
    pub threads: usize,
    pub n: usize,
    pub m: u64,
    pub c_pp: u64,
    pub c_pm: u64,
    pub inner_ops: u64,
    pub triangles: u64,
    pub load_ms: f64,
    pub order_ms: f64,
    pub list_ms: f64,
}

#[derive(Debug, Serialize)]
pub struct CostRow {
    pub dataset: String,
    pub ordering: String,
    pub n: usize,
    pub m: u64,
    pub c_pp: u64,
    pub c_pm: u64,
    pub c_mm: u64,
    pub sum_deg_sq: u64,
}

impl CostRow {
    pub fn new(dataset: &str, ordering: &str, g: &Graph, r: &CostReport) -> CostRow {
        CostRow {
            dataset: dataset.into(),
            ordering: ordering.into(),
            n: g.n(),
            m: g.m(),
            c_pp: r.c_pp,
            c_pm: r.c_pm,
            c_mm: r.c_mm,
            sum_deg_sq: r.sum_deg_sq,
        }
    }

    pub fn print(&self) -> io::Result<()> {
        let mut w = writer(io::stdout().lock());
        w.serialize(self)?;
        w.flush()
    }
}

/// Milliseconds, rounded to microseconds.
pub fn ms(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

pub fn writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().has_headers(true).from_writer(w)
}

pub fn write_records<W: Write>(w: W, records: &[BenchRecord]) -> io::Result<()> {
    let mut out = writer(w);
    for r in records {
        out.serialize(r)?;
    }
    out.flush()
}

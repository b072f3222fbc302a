//! Text formats: ordering files, NAE formulas, Set Cover instances, gadget
//! sidecars and triangle output.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use crate::error::{parse_err, Error, Result};
use crate::gadgets::{LabeledGadget, WeightedGraph};
use crate::graph::{Graph, Label, Ordering, VertexId};
use crate::oracle::{NaeFormula, SetCoverInstance};

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines<R: BufRead>(reader: R) -> Result<Vec<(usize, String)>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        out.push((idx + 1, body.to_string()));
    }
    Ok(out)
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid number {tok:?}")))
}

fn numbers<T: std::str::FromStr>(line: &str, lineno: usize) -> Result<Vec<T>> {
    line.split_whitespace()
        .map(|t| parse_num(t, lineno))
        .collect()
}

/// One `label rank` line per vertex in label order.
pub fn write_ordering<W: Write>(g: &Graph, order: &Ordering, mut out: W) -> Result<()> {
    order.check_len(g.n())?;
    for u in g.vertices() {
        writeln!(out, "{} {}", g.label(u), order.rank(u))?;
    }
    Ok(())
}

/// Reads `label rank` lines and checks they cover the graph bijectively.
pub fn read_ordering<R: BufRead>(g: &Graph, reader: R) -> Result<Ordering> {
    let index = g.label_index();
    let mut ranks = vec![0u32; g.n()];
    let mut seen = 0;
    for (lineno, line) in content_lines(reader)? {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(lineno, "expected `label rank`"));
        }
        let label: Label = parse_num(toks[0], lineno)?;
        let rank: u32 = parse_num(toks[1], lineno)?;
        let u = *index
            .get(&label)
            .ok_or_else(|| parse_err(lineno, format!("label {label} not in graph")))?;
        if ranks[u as usize] != 0 {
            return Err(Error::NotBijective(format!("label {label} listed twice")));
        }
        ranks[u as usize] = rank;
        seen += 1;
    }
    if seen != g.n() {
        return Err(Error::RankMismatch {
            expected: g.n(),
            got: seen,
        });
    }
    Ordering::from_ranks(&ranks)
}

/// `n m`, then `m` lines `a b c`.
pub fn read_nae<R: BufRead>(reader: R) -> Result<NaeFormula> {
    let lines = content_lines(reader)?;
    let (first_no, first) = lines
        .first()
        .ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let header: Vec<usize> = numbers(first, *first_no)?;
    if header.len() != 2 {
        return Err(parse_err(*first_no, "expected `n m`"));
    }
    let (n, m) = (header[0], header[1]);
    if lines.len() - 1 != m {
        return Err(parse_err(
            *first_no,
            format!("header announces {m} clauses, found {}", lines.len() - 1),
        ));
    }
    let mut clauses = Vec::with_capacity(m);
    for (lineno, line) in &lines[1..] {
        let lits: Vec<u32> = numbers(line, *lineno)?;
        if lits.len() != 3 {
            return Err(parse_err(*lineno, "a clause has exactly three literals"));
        }
        clauses.push([lits[0], lits[1], lits[2]]);
    }
    NaeFormula::new(n, clauses)
}

pub fn write_nae<W: Write>(f: &NaeFormula, mut out: W) -> Result<()> {
    writeln!(out, "{} {}", f.n_vars, f.clauses.len())?;
    for c in &f.clauses {
        writeln!(out, "{} {} {}", c[0], c[1], c[2])?;
    }
    Ok(())
}

/// `n k`, then one line per set listing its elements; `-` is the empty set.
pub fn read_set_cover<R: BufRead>(reader: R) -> Result<SetCoverInstance> {
    let lines = content_lines(reader)?;
    let (first_no, first) = lines
        .first()
        .ok_or_else(|| parse_err(1, "missing `n k` header"))?;
    let header: Vec<usize> = numbers(first, *first_no)?;
    if header.len() != 2 {
        return Err(parse_err(*first_no, "expected `n k`"));
    }
    let mut sets = Vec::new();
    for (lineno, line) in &lines[1..] {
        if line == "-" {
            sets.push(Vec::new());
        } else {
            sets.push(numbers(line, *lineno)?);
        }
    }
    SetCoverInstance::new(header[0], sets, header[1])
}

pub fn write_set_cover<W: Write>(inst: &SetCoverInstance, mut out: W) -> Result<()> {
    writeln!(out, "{} {}", inst.n, inst.k)?;
    for s in &inst.sets {
        if s.is_empty() {
            writeln!(out, "-")?;
        } else {
            let items: Vec<String> = s.iter().map(u32::to_string).collect();
            writeln!(out, "{}", items.join(" "))?;
        }
    }
    Ok(())
}

/// Edge list of `g` using its labels.
pub fn write_edgelist<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", g.label(u), g.label(v))?;
    }
    Ok(())
}

/// One `label role weight` line per vertex.
pub fn write_sidecar<W: Write>(gadget: &LabeledGadget, mut out: W) -> Result<()> {
    let g = gadget.graph();
    for u in g.vertices() {
        writeln!(
            out,
            "{} {} {}",
            g.label(u),
            gadget.roles[u as usize],
            gadget.weighted.weights[u as usize]
        )?;
    }
    Ok(())
}

/// Rebuilds a gadget from its edge list and sidecar. The sidecar lists every
/// vertex, so isolated ones survive the round trip.
pub fn read_gadget<E: BufRead, S: BufRead>(edges: E, sidecar: S) -> Result<LabeledGadget> {
    let mut labels = Vec::new();
    let mut roles = Vec::new();
    let mut weights = Vec::new();
    for (lineno, line) in content_lines(sidecar)? {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(parse_err(lineno, "expected `label role weight`"));
        }
        labels.push(parse_num::<Label>(toks[0], lineno)?);
        roles.push(toks[1].to_string());
        weights.push(parse_num::<u64>(toks[2], lineno)?);
    }
    let index: HashMap<Label, VertexId> = labels
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i as VertexId))
        .collect();
    if index.len() != labels.len() {
        return Err(parse_err(0, "sidecar repeats a label"));
    }
    let raw = crate::graph::read_edge_pairs(edges)?;
    let mut dense = Vec::with_capacity(raw.len());
    for (a, b) in raw {
        let (Some(&u), Some(&v)) = (index.get(&a), index.get(&b)) else {
            return Err(parse_err(
                0,
                format!("edge {a}-{b} uses a label missing from the sidecar"),
            ));
        };
        dense.push((u, v));
    }
    let graph = Graph::from_edges(labels.len(), &dense).with_labels(labels);
    Ok(LabeledGadget {
        weighted: WeightedGraph::new(graph, weights)?,
        roles,
    })
}

/// Weights file for an existing graph: `label weight` or `label role weight`
/// per line; unlisted vertices get weight 0.
pub fn read_weights<R: BufRead>(g: &Graph, reader: R) -> Result<Vec<u64>> {
    let index = g.label_index();
    let mut weights = vec![0u64; g.n()];
    for (lineno, line) in content_lines(reader)? {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 && toks.len() != 3 {
            return Err(parse_err(lineno, "expected `label weight`"));
        }
        let label: Label = parse_num(toks[0], lineno)?;
        let w: u64 = parse_num(toks[toks.len() - 1], lineno)?;
        let u = index
            .get(&label)
            .ok_or_else(|| parse_err(lineno, format!("label {label} not in graph")))?;
        weights[*u as usize] = w;
    }
    Ok(weights)
}

/// `u v w` per triangle, original labels, already in rank order.
pub fn write_triangles<W: Write>(g: &Graph, triangles: &[[VertexId; 3]], mut out: W) -> Result<()> {
    for t in triangles {
        writeln!(out, "{} {} {}", g.label(t[0]), g.label(t[1]), g.label(t[2]))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{ld_gadget, nae_graph};
    use crate::graph::load_edgelist;
    use crate::ordering::split_order;

    #[test]
    fn ordering_roundtrip_with_sparse_labels() {
        let (g, _) = load_edgelist("10 20\n20 30\n30 10\n30 40\n".as_bytes()).unwrap();
        let o = split_order(&g);
        let mut buf = Vec::new();
        write_ordering(&g, &o, &mut buf).unwrap();
        assert_eq!(read_ordering(&g, buf.as_slice()).unwrap(), o);
    }

    #[test]
    fn ordering_reader_validates() {
        let (g, _) = load_edgelist("1 2\n2 3\n".as_bytes()).unwrap();
        assert!(read_ordering(&g, "1 1\n2 2\n".as_bytes()).is_err());
        assert!(read_ordering(&g, "1 1\n2 1\n3 2\n".as_bytes()).is_err());
        assert!(read_ordering(&g, "1 1\n2 2\n9 3\n".as_bytes()).is_err());
        assert!(read_ordering(&g, "1 1\n1 2\n3 3\n".as_bytes()).is_err());
        assert!(read_ordering(&g, "1 3\n2 1\n3 2\n".as_bytes()).is_ok());
    }

    #[test]
    fn nae_and_setcover_formats() {
        let f = read_nae("# phi\n4 2\n1 2 3\n2 3 4\n".as_bytes()).unwrap();
        assert_eq!(f.clauses, vec![[1, 2, 3], [2, 3, 4]]);
        let mut buf = Vec::new();
        write_nae(&f, &mut buf).unwrap();
        assert_eq!(read_nae(buf.as_slice()).unwrap(), f);
        assert!(read_nae("3 2\n1 2 3\n".as_bytes()).is_err());
        assert!(read_nae("3 1\n1 2\n".as_bytes()).is_err());

        let inst = read_set_cover("2 1\n1 2\n-\n2\n".as_bytes()).unwrap();
        assert_eq!(inst.sets, vec![vec![1, 2], vec![], vec![2]]);
        let mut buf = Vec::new();
        write_set_cover(&inst, &mut buf).unwrap();
        assert_eq!(read_set_cover(buf.as_slice()).unwrap(), inst);
    }

    #[test]
    fn gadget_roundtrip_keeps_isolated_vertices() {
        // Variable 4 appears in no clause.
        let f = NaeFormula::new(4, vec![[1, 2, 3]]).unwrap();
        let gad = nae_graph(&f).gadget;
        let (mut e, mut s) = (Vec::new(), Vec::new());
        write_edgelist(gad.graph(), &mut e).unwrap();
        write_sidecar(&gad, &mut s).unwrap();
        assert_eq!(read_gadget(e.as_slice(), s.as_slice()).unwrap(), gad);

        let ld = ld_gadget(2).gadget;
        let (mut e, mut s) = (Vec::new(), Vec::new());
        write_edgelist(ld.graph(), &mut e).unwrap();
        write_sidecar(&ld, &mut s).unwrap();
        assert_eq!(read_gadget(e.as_slice(), s.as_slice()).unwrap(), ld);
    }

    #[test]
    fn weights_file() {
        let (g, _) = load_edgelist("5 6\n".as_bytes()).unwrap();
        assert_eq!(read_weights(&g, "6 2\n".as_bytes()).unwrap(), vec![0, 2]);
        assert_eq!(read_weights(&g, "5 X 1\n".as_bytes()).unwrap(), vec![1, 0]);
        assert!(read_weights(&g, "7 1\n".as_bytes()).is_err());
    }
}

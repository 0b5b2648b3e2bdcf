//! Hasse diagrams as Graphviz DOT, bottom to top.

use std::fmt::Write;

use lattice_ramsey::bits::to_bitstring;
use lattice_ramsey::{DistLattice, Poset};

fn render(n: usize, labels: &[String], covers: &[(usize, usize)]) -> String {
    let mut out = String::from("digraph hasse {\n    rankdir=BT;\n    node [shape=circle];\n");
    for (x, label) in labels.iter().enumerate().take(n) {
        writeln!(out, "    {x} [label=\"{label}\"];").unwrap();
    }
    for (lo, hi) in covers {
        writeln!(out, "    {lo} -> {hi};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn poset_dot(p: &Poset) -> String {
    let labels: Vec<String> = (0..p.len()).map(|x| x.to_string()).collect();
    render(p.len(), &labels, &p.covers())
}

/// Nodes are labelled with their down-set bit-strings.
pub fn lattice_dot(l: &DistLattice) -> String {
    let n = l.base().len();
    let labels: Vec<String> = l.elements().iter().map(|&m| to_bitstring(m, n)).collect();
    render(l.len(), &labels, &l.cover_pairs())
}

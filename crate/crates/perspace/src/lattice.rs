//! The periodicity diagram: which periodic, antiperiodic, and cyclotomic
//! kernel subspaces sit inside an integer-period space, drawn as a Hasse
//! diagram of cover relations and serialized as DOT.

use std::fmt::Write as _;

/// Ascending divisors of `p`.
pub fn divisors(p: u64) -> Vec<u64> {
    assert!(p >= 1, "divisors need a positive integer");
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= p {
        if p.is_multiple_of(i) {
            divs.push(i);
            if i != p / i {
                divs.push(p / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// Diagram node kinds, in display order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum NodeKind {
    P,
    AP,
    C,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagramNode {
    pub kind: NodeKind,
    pub param: u64,
    pub label: String,
}

/// The subspace lattice of a period-`p` space: nodes sorted by
/// `(kind, param)`, edges as index pairs pointing from subspace to
/// superspace (cover relations only).
#[derive(Clone, Debug)]
pub struct Diagram {
    pub p: u64,
    pub nodes: Vec<DiagramNode>,
    pub edges: Vec<(usize, usize)>,
}

fn node_label(p: u64, kind: NodeKind, param: u64) -> String {
    match kind {
        NodeKind::P => format!("P_{param}"),
        NodeKind::AP => format!("AP_{param}"),
        // the single-letter names belong to the period-12 diagram
        NodeKind::C if p == 12 && param == 3 => "S".into(),
        NodeKind::C if p == 12 && param == 6 => "T".into(),
        NodeKind::C if p == 12 && param == 12 => "U".into(),
        NodeKind::C => format!("C_{param}"),
    }
}

/// Build the periodicity diagram of the period-`p` space.
///
/// Nodes: `P_d` for every divisor `d`, `AP_d` whenever `2d` divides `p`,
/// and a cyclotomic kernel node `C_k` for every divisor `k` that is not
/// already named (order 1 is `P_1`, orders `2^j` are antiperiodic spaces).
///
/// Edges are cover relations: `P_d` into `P_e` for a prime quotient,
/// `AP_d` into `P_2d`, `AP_d` into `AP_e` for an odd prime quotient,
/// and each kernel node into `P_k` (odd `k`) or `AP_{k/2}` (even `k`).
pub fn build_diagram(p: u64) -> Diagram {
    assert!(p >= 1, "diagram needs a positive integer period");
    let divs = divisors(p);

    let mut nodes = Vec::new();
    for &d in &divs {
        nodes.push((NodeKind::P, d));
    }
    for &d in &divs {
        if p.is_multiple_of(2 * d) {
            nodes.push((NodeKind::AP, d));
        }
    }
    for &k in &divs {
        if k != 1 && !k.is_power_of_two() {
            nodes.push((NodeKind::C, k));
        }
    }
    nodes.sort_unstable();

    let index_of = |kind: NodeKind, param: u64| -> usize {
        nodes
            .iter()
            .position(|&(k, d)| k == kind && d == param)
            .expect("edge endpoint exists")
    };

    let mut edges = Vec::new();
    for &(kind, d) in &nodes {
        match kind {
            NodeKind::P => {
                for &e in &divs {
                    if e > d && e % d == 0 && is_prime(e / d) {
                        edges.push((index_of(NodeKind::P, d), index_of(NodeKind::P, e)));
                    }
                }
            }
            NodeKind::AP => {
                edges.push((index_of(NodeKind::AP, d), index_of(NodeKind::P, 2 * d)));
                for &(other_kind, e) in &nodes {
                    if other_kind == NodeKind::AP
                        && e > d
                        && e % d == 0
                        && (e / d) % 2 == 1
                        && is_prime(e / d)
                    {
                        edges.push((index_of(NodeKind::AP, d), index_of(NodeKind::AP, e)));
                    }
                }
            }
            NodeKind::C => {
                let from = index_of(NodeKind::C, d);
                let to = if d % 2 == 1 {
                    index_of(NodeKind::P, d)
                } else {
                    index_of(NodeKind::AP, d / 2)
                };
                edges.push((from, to));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();

    let nodes = nodes
        .into_iter()
        .map(|(kind, param)| DiagramNode {
            kind,
            param,
            label: node_label(p, kind, param),
        })
        .collect();
    Diagram { p, nodes, edges }
}

impl Diagram {
    pub fn node_labels(&self) -> Vec<&str> {
        self.nodes.iter().map(|n| n.label.as_str()).collect()
    }

    /// Edges as `(from_label, to_label)` pairs, sorted lexicographically.
    pub fn edge_labels(&self) -> Vec<(&str, &str)> {
        let mut out: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|&(a, b)| (self.nodes[a].label.as_str(), self.nodes[b].label.as_str()))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Serialize as a deterministic DOT digraph: node statements sorted by
/// `(kind, param)`, edge statements sorted lexicographically, byte-stable
/// across runs.
pub fn to_dot(d: &Diagram) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph periodicity_{} {{", d.p);
    let _ = writeln!(out, "  rankdir=BT;");
    for node in &d.nodes {
        let _ = writeln!(out, "  \"{}\";", node.label);
    }
    for (from, to) in d.edge_labels() {
        let _ = writeln!(out, "  \"{from}\" -> \"{to}\";");
    }
    out.push_str("}\n");
    out
}

/// Serialize as deterministic JSON with the same ordering as the DOT form.
pub fn to_json(d: &Diagram) -> String {
    let mut out = String::new();
    let _ = write!(out, "{{\"p\":{},\"nodes\":[", d.p);
    for (i, node) in d.nodes.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let kind = match node.kind {
            NodeKind::P => "P",
            NodeKind::AP => "AP",
            NodeKind::C => "C",
        };
        let _ = write!(
            out,
            "{{\"kind\":\"{kind}\",\"param\":{},\"label\":\"{}\"}}",
            node.param, node.label
        );
    }
    out.push_str("],\"edges\":[");
    for (i, (from, to)) in d.edge_labels().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "[\"{from}\",\"{to}\"]");
    }
    out.push_str("]}");
    out
}

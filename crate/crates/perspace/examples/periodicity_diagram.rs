//! Build periodicity diagrams — the Hasse diagram of periodic,
//! antiperiodic, and cyclotomic kernel subspaces inside a period-p space —
//! and print the period-12 one as DOT (pipe it into `dot -Tsvg`).

use perspace::lattice::{build_diagram, divisors, to_dot};

fn main() {
    for p in [2u64, 6] {
        let d = build_diagram(p);
        println!(
            "p = {p}: divisors {:?}, {} nodes, {} edges",
            divisors(p),
            d.nodes.len(),
            d.edges.len()
        );
        for (from, to) in d.edge_labels() {
            println!("  {from} -> {to}");
        }
        println!();
    }

    let twelve = build_diagram(12);
    println!(
        "p = 12 has {} nodes and {} edges; DOT form:",
        twelve.nodes.len(),
        twelve.edges.len()
    );
    println!();
    print!("{}", to_dot(&twelve));
}

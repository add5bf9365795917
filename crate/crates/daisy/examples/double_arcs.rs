//! Decompose a daisy graph into double arcs.
//!
//! A double arc is a maximal edge path that continues straight through
//! consecutive pairs at triple vertices. Arcs ending at degree-1 vertices
//! are *open*; arcs that bite their own tail are *closed*. Every edge
//! lies on exactly one arc, and the parity of each closed arc decides
//! whether a short grading lift exists (see the short_grading example).
//!
//! Run with: cargo run --example double_arcs

use daisy::arcs::{closed_arc_parities, decompose_arcs};
use daisy::{DaisyGraph, HalfEdgeRef, Pair, Slot, VertexKind};

fn half(edge: &str, slot: usize) -> HalfEdgeRef {
    HalfEdgeRef::new(edge, if slot == 0 { Slot::Zero } else { Slot::One })
}

/// Two triple vertices joined by a 2-cycle (edges a, b) that is pair-
/// consecutive at both ends, plus pendants: one closed arc, four open.
fn two_triple_cycle() -> DaisyGraph {
    let mut g = DaisyGraph::new();
    g.add_vertex("u", VertexKind::Triple).add_vertex("w", VertexKind::Triple);
    g.add_edge("a", "u", "w").add_edge("b", "u", "w");
    for (v, names) in [("u", ["p1", "p2", "p3", "p4"]), ("w", ["q1", "q2", "q3", "q4"])] {
        for name in names {
            g.add_vertex(format!("b{name}"), VertexKind::Branch);
            g.add_edge(name, v, format!("b{name}"));
        }
    }
    g.add_pair("u", Pair::new(half("a", 0), half("b", 0)));
    g.add_pair("u", Pair::new(half("p1", 0), half("p2", 0)));
    g.add_pair("u", Pair::new(half("p3", 0), half("p4", 0)));
    g.add_pair("w", Pair::new(half("a", 1), half("b", 1)));
    g.add_pair("w", Pair::new(half("q1", 0), half("q2", 0)));
    g.add_pair("w", Pair::new(half("q3", 0), half("q4", 0)));
    g
}

/// One triple vertex with a loop filling a whole pair: a closed arc of
/// odd length 1.
fn consecutive_loop() -> DaisyGraph {
    let mut g = DaisyGraph::new();
    g.add_vertex("v", VertexKind::Triple).add_edge("c", "v", "v");
    for i in 1..=4 {
        g.add_vertex(format!("bp{i}"), VertexKind::Branch);
        g.add_edge(format!("p{i}"), "v", format!("bp{i}"));
    }
    g.add_pair("v", Pair::new(half("c", 0), half("c", 1)));
    g.add_pair("v", Pair::new(half("p1", 0), half("p2", 0)));
    g.add_pair("v", Pair::new(half("p3", 0), half("p4", 0)));
    g
}

fn describe(name: &str, g: &DaisyGraph) {
    assert!(g.validate().is_ok());
    let decomposition = decompose_arcs(g);
    println!("{name}:");
    for arc in &decomposition.arcs {
        let edges: Vec<String> = arc.edges.iter().map(|e| e.to_string()).collect();
        let crossings: Vec<String> =
            arc.passages.iter().map(|(v, pair)| format!("{v} via {pair}")).collect();
        println!("  {} arc [{}]", arc.kind, edges.join(" "));
        for crossing in crossings {
            println!("      crosses {crossing}");
        }
    }
    for parity in closed_arc_parities(g) {
        println!("  closed arc of {} edge(s) is {}", parity.edge_count, parity.parity);
    }
    println!();
}

fn main() {
    describe("two-triple 2-cycle", &two_triple_cycle());
    describe("consecutive loop", &consecutive_loop());

    // The partition law: every edge appears on exactly one arc.
    let g = two_triple_cycle();
    let decomposition = decompose_arcs(&g);
    let covered: usize = decomposition.arcs.iter().map(|a| a.edges.len()).sum();
    println!("edges covered: {covered} of {}", g.edges.len());
}

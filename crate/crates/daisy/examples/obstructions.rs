//! The two ways a graph fails to be gradable, with certificates.
//!
//! 1. A *grade-obstructing loop*: a loop that is preferred through one of
//!    its pairs and non-preferred through the other, demanding
//!    `g = a(v)+1` and `g = a(v)` at once.
//! 2. A *conflict*: two walks to the same edge force different grades.
//!
//! Both come out of `grade` as typed certificates that name the edge and
//! vertex, so a failed decision is checkable without rerunning anything.
//!
//! Run with: cargo run --example obstructions

use daisy::grading::{delta_g, grade, grade_obstructing_loops, NotGradable};
use daisy::{ArrowedDaisyGraph, DaisyGraph, HalfEdgeRef, Pair, Slot, VertexKind};

fn half(edge: &str, slot: usize) -> HalfEdgeRef {
    HalfEdgeRef::new(edge, if slot == 0 { Slot::Zero } else { Slot::One })
}

/// A loop through two different pairs at `v`, preferred on only one side.
fn obstructed() -> ArrowedDaisyGraph {
    let mut g = DaisyGraph::new();
    g.add_vertex("v", VertexKind::Triple).add_edge("l", "v", "v");
    for i in 1..=4 {
        g.add_vertex(format!("bp{i}"), VertexKind::Branch);
        g.add_edge(format!("p{i}"), "v", format!("bp{i}"));
    }
    let mut g = ArrowedDaisyGraph::from_base(g);
    for (pair, chosen) in [
        (Pair::new(half("l", 0), half("p1", 0)), half("l", 0)),
        (Pair::new(half("l", 1), half("p2", 0)), half("p2", 0)),
        (Pair::new(half("p3", 0), half("p4", 0)), half("p3", 0)),
    ] {
        g.base.add_pair("v", pair.clone());
        g.set_arrow("v", pair, chosen);
    }
    g
}

/// Two triple vertices joined by edges `r` and `s`; the arrow placement
/// makes their grades collide at `w`.
fn conflicted() -> ArrowedDaisyGraph {
    let mut g = DaisyGraph::new();
    g.add_vertex("u", VertexKind::Triple).add_vertex("w", VertexKind::Triple);
    g.add_edge("r", "u", "w").add_edge("s", "u", "w");
    for (v, names) in [("u", ["ua", "ub", "uc", "ud"]), ("w", ["wa", "wb", "wc", "wd"])] {
        for name in names {
            g.add_vertex(format!("b{name}"), VertexKind::Branch);
            g.add_edge(name, v, format!("b{name}"));
        }
    }
    let mut g = ArrowedDaisyGraph::from_base(g);
    let pairs = [
        ("u", Pair::new(half("r", 0), half("ua", 0)), half("ua", 0)),
        ("u", Pair::new(half("s", 0), half("ub", 0)), half("ub", 0)),
        ("u", Pair::new(half("uc", 0), half("ud", 0)), half("uc", 0)),
        ("w", Pair::new(half("r", 1), half("wa", 0)), half("r", 1)),
        ("w", Pair::new(half("s", 1), half("wb", 0)), half("wb", 0)),
        ("w", Pair::new(half("wc", 0), half("wd", 0)), half("wc", 0)),
    ];
    for (v, pair, chosen) in pairs {
        g.base.add_pair(v, pair.clone());
        g.set_arrow(v, pair, chosen);
    }
    g
}

fn main() {
    let g = obstructed();
    println!("loop graph: obstructing loops = {:?}", grade_obstructing_loops(&g));
    match grade(&g) {
        Err(NotGradable::ObstructingLoop { edge, vertex }) => {
            println!("  not gradable: loop {edge} at {vertex}\n");
        }
        other => println!("  unexpected: {other:?}\n"),
    }

    let g = conflicted();
    match grade(&g) {
        Err(NotGradable::Conflict { edge, vertex, assigned, required }) => {
            println!("two-vertex graph: not gradable");
            println!("  edge {edge} already forced to {assigned},");
            println!("  but vertex {vertex} requires {required}");
        }
        other => println!("unexpected: {other:?}"),
    }

    // delta_g is the local grade step: passing from edge r to edge s
    // through vertex u compares their statuses there.
    let step = delta_g(&g, &"r".into(), &"u".into(), &"s".into()).unwrap();
    println!("\ndelta_g(r, u, s) = {step} (both non-preferred at u)");
    let step = delta_g(&g, &"r".into(), &"w".into(), &"s".into()).unwrap();
    println!("delta_g(r, w, s) = {step} (r preferred at w, s not)");
}

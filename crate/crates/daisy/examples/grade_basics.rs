//! Grade an arrowed daisy graph and inspect the result.
//!
//! The star below is one triple vertex `v` with six pendant edges, paired
//! (e1,e2) (e3,e4) (e5,e6), with the arrow of each pair on the odd edge.
//! Grading rules: at a triple vertex every non-preferred edge grades the
//! vertex base `a(v)`, every preferred edge grades `a(v)+1`. Gradings are
//! unique per connected component up to a constant shift; `grade`
//! normalizes by giving the lexicographically smallest edge grade 0.
//!
//! Run with: cargo run --example grade_basics

use daisy::grading::{grade, validate_grading};
use daisy::{ArrowedDaisyGraph, DaisyGraph, HalfEdgeRef, Pair, Slot, VertexKind};

fn half(edge: &str, slot: usize) -> HalfEdgeRef {
    HalfEdgeRef::new(edge, if slot == 0 { Slot::Zero } else { Slot::One })
}

fn star() -> ArrowedDaisyGraph {
    let mut g = DaisyGraph::new();
    g.add_vertex("v", VertexKind::Triple);
    for i in 1..=6 {
        let leaf = format!("b{i}");
        g.add_vertex(leaf.as_str(), VertexKind::Branch);
        g.add_edge(format!("e{i}"), "v", leaf.as_str());
    }
    let mut g = ArrowedDaisyGraph::from_base(g);
    for (a, b) in [(1, 2), (3, 4), (5, 6)] {
        let pair = Pair::new(half(&format!("e{a}"), 0), half(&format!("e{b}"), 0));
        g.base.add_pair("v", pair.clone());
        g.set_arrow("v", pair, half(&format!("e{a}"), 0));
    }
    g
}

fn main() {
    let g = star();
    assert!(g.validate().is_ok(), "the builder produced a broken graph");

    let grading = grade(&g).expect("the star is gradable");
    println!("edge grades:");
    for (e, value) in &grading.grades {
        println!("  g({e}) = {value}");
    }
    println!("vertex bases:");
    for (v, base) in &grading.bases {
        println!("  a({v}) = {base}");
    }

    // The validator re-checks every adjacency from scratch.
    println!("\nvalidates: {}", validate_grading(&g, &grading).is_ok());

    // Gradings are only unique up to a shift per component; any constant
    // added to every grade and base is accepted too.
    let mut shifted = grading.clone();
    shifted.grades.values_mut().for_each(|v| *v += 7);
    shifted.bases.values_mut().for_each(|v| *v += 7);
    println!("shifted by +7 validates: {}", validate_grading(&g, &shifted).is_ok());

    // Breaking a single edge grade is caught and attributed.
    let mut broken = grading.clone();
    *broken.grades.get_mut("e3").unwrap() += 1;
    let check = validate_grading(&g, &broken);
    println!("perturbed e3 validates: {}", check.is_ok());
    for violation in &check.violations {
        println!("  {violation}");
    }
}

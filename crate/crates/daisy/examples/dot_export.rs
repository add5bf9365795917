//! Render a daisy graph as Graphviz DOT.
//!
//! Triple vertices draw as points whose three consecutive pairs occupy
//! opposite compass ports — three lines crossing at a point — branch
//! vertices as small black dots, DB values in purple, and arrows as
//! head decorations on the preferred side of each edge. Double circles
//! go into a legend subgraph. Output is deterministic byte for byte,
//! so diagrams diff cleanly.
//!
//! Run with: cargo run --example dot_export
//! Render with: cargo run --example dot_export | dot -Tsvg > daisy.svg

use daisy::textio::{export_dot, parse};

const DOCUMENT: &str = "\
adg
circles 1
vertex v triple
vertex b1 branch
vertex b2 branch
vertex b3 branch
vertex d4 db
edge l v v
edge p1 v b1
edge p2 v b2
edge p3 v b3
edge p4 v d4
pair v l.0 p1.0 pref l.0
pair v l.1 p2.0 pref l.1
pair v p3.0 p4.0 pref p3.0
";

fn main() {
    let doc = parse(DOCUMENT).expect("valid document");
    let dot = export_dot(&doc);
    print!("{dot}");

    assert_eq!(dot, export_dot(&doc), "identical bytes on every run");
}

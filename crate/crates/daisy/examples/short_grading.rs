//! Lift a plain daisy graph to an arrowed one carrying a {0,1} grading.
//!
//! A plain graph has no arrows, hence no grading constraints yet. The
//! short grading lift walks every double arc and alternates grades 0 1
//! 0 1 …, then points each pair's arrow at its grade-1 edge. This works
//! exactly when every closed arc has even length — on an odd closed arc
//! the alternation comes back around inconsistently.
//!
//! Run with: cargo run --example short_grading

use daisy::arcs::short_grade_lift;
use daisy::grading::validate_grading;
use daisy::textio::{parse, serialize, Document};

const LIFTABLE: &str = "\
dg
vertex u triple
vertex w triple
vertex bp1 branch
vertex bp2 branch
vertex bq1 branch
vertex bq2 branch
vertex bp3 branch
vertex bp4 branch
vertex bq3 branch
vertex bq4 branch
edge a u w
edge b u w
edge p1 u bp1
edge p2 u bp2
edge p3 u bp3
edge p4 u bp4
edge q1 w bq1
edge q2 w bq2
edge q3 w bq3
edge q4 w bq4
pair u a.0 b.0
pair u p1.0 p2.0
pair u p3.0 p4.0
pair w a.1 b.1
pair w q1.0 q2.0
pair w q3.0 q4.0
";

const ODD_LOOP: &str = "\
dg
vertex v triple
vertex bp1 branch
vertex bp2 branch
vertex bp3 branch
vertex bp4 branch
edge c v v
edge p1 v bp1
edge p2 v bp2
edge p3 v bp3
edge p4 v bp4
pair v c.0 c.1
pair v p1.0 p2.0
pair v p3.0 p4.0
";

fn main() {
    let Document::Dg(g) = parse(LIFTABLE).unwrap() else { unreachable!() };
    let (lifted, grading) = short_grade_lift(&g).expect("even closed arcs only");

    println!("lifted document:\n{}", serialize(&Document::Adg(lifted.clone())));
    println!("grades (all in {{0,1}}, bases all 0):");
    for (e, value) in &grading.grades {
        println!("  g({e}) = {value}");
    }
    println!(
        "\nthe lift validates against the grading rules: {}",
        validate_grading(&lifted, &grading).is_ok()
    );
    assert!(grading.grades.values().all(|g| *g == 0 || *g == 1));

    let Document::Dg(g) = parse(ODD_LOOP).unwrap() else { unreachable!() };
    match short_grade_lift(&g) {
        Err(not_liftable) => println!("\nodd loop graph: {not_liftable}"),
        Ok(_) => unreachable!("a length-1 closed arc is odd"),
    }
}

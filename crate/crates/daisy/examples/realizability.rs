//! Which ambient 3-manifolds admit a surface with a given daisy graph?
//!
//! The decision splits the ambient class along two axes — first homology
//! (periodic vs. infinite) and boundary (closed vs. bounded) — and each
//! cell reduces to two graph properties:
//!
//! | class             | realizable iff            |
//! |-------------------|---------------------------|
//! | periodic-closed   | gradable and no DB values |
//! | periodic-bounded  | gradable                  |
//! | infinite-closed   | no DB values              |
//! | infinite-bounded  | always                    |
//!
//! Run with: cargo run --example realizability

use daisy::realize::{decide_realizable, ManifoldClass};
use daisy::textio::{parse, Document};

const GRADABLE_NO_DB: &str = "\
adg
vertex v triple
vertex b1 branch
vertex b2 branch
vertex b3 branch
vertex b4 branch
vertex b5 branch
vertex b6 branch
edge e1 v b1
edge e2 v b2
edge e3 v b3
edge e4 v b4
edge e5 v b5
edge e6 v b6
pair v e1.0 e2.0 pref e1.0
pair v e3.0 e4.0 pref e3.0
pair v e5.0 e6.0 pref e5.0
";

const GRADABLE_WITH_DB: &str = "\
adg
vertex b branch
vertex d db
edge e b d
";

const UNGRADABLE_NO_DB: &str = "\
adg
vertex v triple
vertex bp1 branch
vertex bp2 branch
vertex bp3 branch
vertex bp4 branch
edge l v v
edge p1 v bp1
edge p2 v bp2
edge p3 v bp3
edge p4 v bp4
pair v l.0 p1.0 pref l.0
pair v l.1 p2.0 pref p2.0
pair v p3.0 p4.0 pref p3.0
";

fn report(name: &str, text: &str) {
    let Document::Adg(g) = parse(text).unwrap() else { unreachable!() };
    println!("{name}:");
    for class in ManifoldClass::ALL {
        let verdict = decide_realizable(&g, class);
        let word = if verdict.realizable { "realizable" } else { "not realizable" };
        println!("  {class:<17} {word}");
        for reason in &verdict.reasons {
            println!("      {reason}");
        }
    }
    println!();
}

fn main() {
    report("6-pendant star (gradable, no DB)", GRADABLE_NO_DB);
    report("single DB edge (gradable, has DB)", GRADABLE_WITH_DB);
    report("obstructed loop (ungradable, no DB)", UNGRADABLE_NO_DB);

    // Monotonicity: relaxing an axis never destroys realizability.
    let Document::Adg(g) = parse(GRADABLE_WITH_DB).unwrap() else { unreachable!() };
    let closed = decide_realizable(&g, ManifoldClass::PERIODIC_CLOSED).realizable;
    let bounded = decide_realizable(&g, ManifoldClass::PERIODIC_BOUNDED).realizable;
    println!("periodic-closed implies periodic-bounded: {}", !closed || bounded);
}

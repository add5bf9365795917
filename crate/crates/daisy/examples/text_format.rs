//! The daisy-graph text format: strict parsing with located errors, and
//! canonical serialization.
//!
//! Documents are line-oriented; the first significant line is the kind
//! (`dg`, `adg`, `odg`) and the rest declare circles, vertices, edges,
//! consecutive pairs (with `pref` arrows outside plain dg), and odg
//! `order` lines. Parsing is two-phase: syntax errors carry line and
//! column; structural violations carry the line that declared the
//! offending element.
//!
//! Run with: cargo run --example text_format

use daisy::textio::{parse, serialize, ParseError};

const MESSY: &str = "\
odg
# declarations may arrive in any order, with comments
order v e5.0 e1.0 e3.0       # a rotated phase of e1 e3 e5
pair v e5.0 e6.0 pref e5.0
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
";

fn main() {
    // A messy but valid document normalizes to canonical bytes: sorted
    // declarations and the order rotated to start at its smallest entry.
    let doc = parse(MESSY).expect("valid document");
    let canonical = serialize(&doc);
    println!("canonical form:\n{canonical}");

    let again = parse(&canonical).unwrap();
    println!("fixed point: {}", serialize(&again) == canonical);

    // Syntax errors are positional.
    let bad = "adg\nvertex v triple\npair v e1.0 e2.9\n";
    match parse(bad) {
        Err(ParseError::Syntax { line, column, message }) => {
            println!("\nsyntax error at {line}:{column}: {message}");
        }
        other => println!("unexpected: {other:?}"),
    }

    // Arrows are a property of arrowed documents only.
    let bad = "dg\nvertex v triple\npair v e1.0 e2.0 pref e1.0\n";
    match parse(bad) {
        Err(ParseError::Syntax { line, column, message }) => {
            println!("syntax error at {line}:{column}: {message}");
        }
        other => println!("unexpected: {other:?}"),
    }

    // Structural violations point back at the offending declaration.
    let invalid = "\
adg
vertex v triple
vertex b1 branch
edge e1 v b1
pair v e1.0 e1.0
";
    match parse(invalid) {
        Err(ParseError::Invalid { violations }) => {
            println!("\ninvalid document:");
            for violation in violations {
                println!("  {violation}");
            }
        }
        other => println!("unexpected: {other:?}"),
    }
}

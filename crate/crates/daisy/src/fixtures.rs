//! Hand-built graphs shared by the unit tests.

use crate::model::{ArrowedDaisyGraph, DaisyGraph, HalfEdgeRef, Pair, Slot, VertexKind};

pub(crate) fn h(e: &str, s: usize) -> HalfEdgeRef {
    HalfEdgeRef::new(e, Slot::from_index(s).unwrap())
}

/// One triple vertex `v`, six pendant edges `e1..e6` to branch vertices
/// `b1..b6`, pairs `(e1,e2) (e3,e4) (e5,e6)`, arrows on `e1,e3,e5`.
pub(crate) fn star() -> ArrowedDaisyGraph {
    let mut g = DaisyGraph::new();
    g.add_vertex("v", VertexKind::Triple);
    for i in 1..=6 {
        g.add_vertex(format!("b{i}"), VertexKind::Branch);
        g.add_edge(format!("e{i}"), "v", format!("b{i}"));
    }
    for (a, b) in [(1, 2), (3, 4), (5, 6)] {
        g.add_pair("v", Pair::new(h(&format!("e{a}"), 0), h(&format!("e{b}"), 0)));
    }
    let mut adg = ArrowedDaisyGraph::from_base(g);
    for (a, b) in [(1, 2), (3, 4), (5, 6)] {
        let pair = Pair::new(h(&format!("e{a}"), 0), h(&format!("e{b}"), 0));
        adg.set_arrow("v", pair, h(&format!("e{a}"), 0));
    }
    adg
}

/// Two triple vertices `u`, `w` joined by edges `r` and `s`, pendants
/// filling the remaining degree. Both `r` and `s` are non-preferred at
/// `u`, while at `w` the edge `r` is preferred and `s` is not — the
/// classic conflict: `g(r) = g(s)` from `u` but `g(r) = g(s) + 1` from
/// `w`, so no grading exists (the graph part is a cycle of length 2).
pub(crate) fn conflict_pair() -> ArrowedDaisyGraph {
    let mut g = DaisyGraph::new();
    g.add_vertex("u", VertexKind::Triple);
    g.add_vertex("w", VertexKind::Triple);
    g.add_edge("r", "u", "w");
    g.add_edge("s", "u", "w");
    for e in ["ua", "ub", "uc", "ud"] {
        g.add_vertex(format!("b{e}"), VertexKind::Branch);
        g.add_edge(e, "u", format!("b{e}"));
    }
    for e in ["wa", "wb", "wc", "wd"] {
        g.add_vertex(format!("b{e}"), VertexKind::Branch);
        g.add_edge(e, "w", format!("b{e}"));
    }
    g.add_pair("u", Pair::new(h("r", 0), h("ua", 0)));
    g.add_pair("u", Pair::new(h("s", 0), h("ub", 0)));
    g.add_pair("u", Pair::new(h("uc", 0), h("ud", 0)));
    g.add_pair("w", Pair::new(h("r", 1), h("wa", 0)));
    g.add_pair("w", Pair::new(h("s", 1), h("wb", 0)));
    g.add_pair("w", Pair::new(h("wc", 0), h("wd", 0)));
    let mut adg = ArrowedDaisyGraph::from_base(g);
    adg.set_arrow("u", Pair::new(h("r", 0), h("ua", 0)), h("ua", 0));
    adg.set_arrow("u", Pair::new(h("s", 0), h("ub", 0)), h("ub", 0));
    adg.set_arrow("u", Pair::new(h("uc", 0), h("ud", 0)), h("uc", 0));
    adg.set_arrow("w", Pair::new(h("r", 1), h("wa", 0)), h("r", 1));
    adg.set_arrow("w", Pair::new(h("s", 1), h("wb", 0)), h("wb", 0));
    adg.set_arrow("w", Pair::new(h("wc", 0), h("wd", 0)), h("wc", 0));
    adg
}

/// A loop `l` at `v` whose two halves sit in *different* pairs, preferred
/// through one end and non-preferred through the other: the grade of `l`
/// would have to be both `a(v)` and `a(v)+1`.
pub(crate) fn obstructing_loop() -> ArrowedDaisyGraph {
    let mut g = DaisyGraph::new();
    g.add_vertex("v", VertexKind::Triple);
    g.add_edge("l", "v", "v");
    for e in ["p1", "p2", "p3", "p4"] {
        g.add_vertex(format!("b{e}"), VertexKind::Branch);
        g.add_edge(e, "v", format!("b{e}"));
    }
    g.add_pair("v", Pair::new(h("l", 0), h("p1", 0)));
    g.add_pair("v", Pair::new(h("l", 1), h("p2", 0)));
    g.add_pair("v", Pair::new(h("p3", 0), h("p4", 0)));
    let mut adg = ArrowedDaisyGraph::from_base(g);
    adg.set_arrow("v", Pair::new(h("l", 0), h("p1", 0)), h("l", 0));
    adg.set_arrow("v", Pair::new(h("l", 1), h("p2", 0)), h("p2", 0));
    adg.set_arrow("v", Pair::new(h("p3", 0), h("p4", 0)), h("p3", 0));
    adg
}

/// A loop `c` at `v` whose two halves form one consecutive pair. Whatever
/// the arrow picks, one end is preferred and the other is not, so the
/// loop always obstructs grading. As a double arc it is a closed arc of
/// length 1.
pub(crate) fn consecutive_loop() -> ArrowedDaisyGraph {
    let mut g = DaisyGraph::new();
    g.add_vertex("v", VertexKind::Triple);
    g.add_edge("c", "v", "v");
    for e in ["p1", "p2", "p3", "p4"] {
        g.add_vertex(format!("b{e}"), VertexKind::Branch);
        g.add_edge(e, "v", format!("b{e}"));
    }
    g.add_pair("v", Pair::new(h("c", 0), h("c", 1)));
    g.add_pair("v", Pair::new(h("p1", 0), h("p2", 0)));
    g.add_pair("v", Pair::new(h("p3", 0), h("p4", 0)));
    let mut adg = ArrowedDaisyGraph::from_base(g);
    adg.set_arrow("v", Pair::new(h("c", 0), h("c", 1)), h("c", 0));
    adg.set_arrow("v", Pair::new(h("p1", 0), h("p2", 0)), h("p1", 0));
    adg.set_arrow("v", Pair::new(h("p3", 0), h("p4", 0)), h("p3", 0));
    adg
}

/// Two triple vertices joined by edges `a` and `b` which are consecutive
/// at both ends; the pendants `p1..p4` (at `u`) and `q1..q4` (at `w`)
/// fill the degree. The double arcs are one closed arc `[a, b]` and four
/// open pendant arcs.
pub(crate) fn two_triple_cycle() -> DaisyGraph {
    let mut g = DaisyGraph::new();
    g.add_vertex("u", VertexKind::Triple);
    g.add_vertex("w", VertexKind::Triple);
    g.add_edge("a", "u", "w");
    g.add_edge("b", "u", "w");
    for e in ["p1", "p2", "p3", "p4"] {
        g.add_vertex(format!("b{e}"), VertexKind::Branch);
        g.add_edge(e, "u", format!("b{e}"));
    }
    for e in ["q1", "q2", "q3", "q4"] {
        g.add_vertex(format!("b{e}"), VertexKind::Branch);
        g.add_edge(e, "w", format!("b{e}"));
    }
    g.add_pair("u", Pair::new(h("a", 0), h("b", 0)));
    g.add_pair("u", Pair::new(h("p1", 0), h("p2", 0)));
    g.add_pair("u", Pair::new(h("p3", 0), h("p4", 0)));
    g.add_pair("w", Pair::new(h("a", 1), h("b", 1)));
    g.add_pair("w", Pair::new(h("q1", 0), h("q2", 0)));
    g.add_pair("w", Pair::new(h("q3", 0), h("q4", 0)));
    g
}

//! Double-arc decomposition and the short-grading lift.
//!
//! Following a half-edge into a triple vertex, the pairing names exactly
//! one half-edge that continues it on the far side of the vertex. Chasing
//! these continuations partitions the edge set into *double arcs*: open
//! ones, running between two degree-1 vertices, and closed ones, which
//! cycle. Double circles stay out of the decomposition — they carry no
//! edges — and are only echoed through.
//!
//! The decomposition answers a lifting question: a plain daisy graph can
//! be upgraded to a gradable arrowed daisy graph exactly when every
//! closed arc consists of an even number of edges. [`short_grade_lift`]
//! performs the upgrade, producing a `{0,1}`-valued grading that
//! alternates along every arc and the arrows that realize it.

use thiserror::Error;

use crate::grading::Grading;
use crate::model::{ArrowedDaisyGraph, DaisyGraph, EdgeId, HalfEdgeRef, Pair, Slot, VertexId, VertexKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcKind {
    Open,
    Closed,
}

impl std::fmt::Display for ArcKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ArcKind::Open => "open",
            ArcKind::Closed => "closed",
        })
    }
}

/// One maximal run of edges joined through consecutive pairs.
///
/// `passages` records, in traversal order, the `(vertex, pair)` crossings
/// between successive edges; a closed arc's final passage joins its last
/// edge back to its first, so it has as many passages as edges, while an
/// open arc has one fewer. An arc may cross the same triple vertex more
/// than once (through different pairs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleArc {
    pub kind: ArcKind,
    pub edges: Vec<EdgeId>,
    pub passages: Vec<(VertexId, Pair)>,
}

/// Every double arc of the graph plus the untouched double-circle count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDecomposition {
    pub arcs: Vec<DoubleArc>,
    pub circles: u32,
}

impl ArcDecomposition {
    pub fn open_arcs(&self) -> impl Iterator<Item = &DoubleArc> {
        self.arcs.iter().filter(|a| a.kind == ArcKind::Open)
    }

    pub fn closed_arcs(&self) -> impl Iterator<Item = &DoubleArc> {
        self.arcs.iter().filter(|a| a.kind == ArcKind::Closed)
    }
}

/// Partition the edges into double arcs. Expects a structurally valid
/// graph.
///
/// The result is deterministic. Open arcs come first, seeded from the
/// half-edges at degree-1 vertices in lexicographic order, so each open
/// arc is oriented away from its smaller terminal half-edge. The leftover
/// edges belong to closed arcs, seeded from their smallest edge and
/// oriented out of that edge's slot-1 end; the seed is the arc's first
/// listed edge.
pub fn decompose_arcs(g: &DaisyGraph) -> ArcDecomposition {
    let mut claimed: std::collections::BTreeSet<EdgeId> = std::collections::BTreeSet::new();
    let mut arcs = Vec::new();

    let is_triple = |v: &VertexId| g.kind(v) == Some(VertexKind::Triple);

    // Walk onward from a seed edge, entered through half-edge `start`,
    // until a degree-1 vertex (open arc) or the seed itself (closed arc)
    // is reached; claims and records every edge it adds.
    let trace = |start: HalfEdgeRef,
                 claimed: &mut std::collections::BTreeSet<EdgeId>,
                 edges: &mut Vec<EdgeId>,
                 passages: &mut Vec<(VertexId, Pair)>|
     -> ArcKind {
        let seed = start.edge.clone();
        let mut d = start.opposite();
        loop {
            let v = g.endpoint(&d).expect("edge endpoints exist in a valid graph");
            if !is_triple(v) {
                return ArcKind::Open;
            }
            let pair = g
                .pair_containing(v, &d)
                .expect("every half-edge at a triple vertex sits in a pair");
            passages.push((v.clone(), pair.clone()));
            let next = pair.partner_of(&d).expect("pair contains the half-edge");
            if next.edge == seed {
                return ArcKind::Closed;
            }
            assert!(
                edges.len() <= g.edges.len(),
                "arc traversal exceeded the edge count; the graph is invalid"
            );
            claimed.insert(next.edge.clone());
            edges.push(next.edge.clone());
            d = next.opposite();
        }
    };

    // Open arcs: seeds are the half-edges whose endpoint has degree 1,
    // visited in lexicographic (edge, slot) order.
    for (e, (a, b)) in &g.edges {
        for (v, slot) in [(a, Slot::Zero), (b, Slot::One)] {
            if is_triple(v) || claimed.contains(e) {
                continue;
            }
            claimed.insert(e.clone());
            let mut edges = vec![e.clone()];
            let mut passages = Vec::new();
            let kind = trace(
                HalfEdgeRef::new(e.clone(), slot),
                &mut claimed,
                &mut edges,
                &mut passages,
            );
            debug_assert_eq!(kind, ArcKind::Open, "a seed at a degree-1 vertex opens an arc");
            arcs.push(DoubleArc { kind: ArcKind::Open, edges, passages });
        }
    }

    // Closed arcs: whatever remains, seeded from the smallest unclaimed
    // edge, entered through its slot-0 half so the walk leaves via slot 1.
    for e in g.edges.keys() {
        if claimed.contains(e) {
            continue;
        }
        claimed.insert(e.clone());
        let mut edges = vec![e.clone()];
        let mut passages = Vec::new();
        let kind = trace(
            HalfEdgeRef::new(e.clone(), Slot::Zero),
            &mut claimed,
            &mut edges,
            &mut passages,
        );
        debug_assert_eq!(kind, ArcKind::Closed, "an unclaimed leftover edge lies on a cycle");
        arcs.push(DoubleArc { kind: ArcKind::Closed, edges, passages });
    }

    ArcDecomposition { arcs, circles: g.circles }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedArcParity {
    pub arc: DoubleArc,
    pub edge_count: usize,
    pub parity: Parity,
}

/// Length and parity of every closed arc, in decomposition order. Double
/// circles are excluded: they have no edges and no bearing on parity.
pub fn closed_arc_parities(g: &DaisyGraph) -> Vec<ClosedArcParity> {
    decompose_arcs(g)
        .arcs
        .into_iter()
        .filter(|a| a.kind == ArcKind::Closed)
        .map(|arc| {
            let edge_count = arc.edges.len();
            let parity = if edge_count % 2 == 0 { Parity::Even } else { Parity::Odd };
            ClosedArcParity { arc, edge_count, parity }
        })
        .collect()
}

/// The obstruction to a short grading: closed arcs of odd length.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct NotLiftable {
    pub odd_closed_arcs: Vec<DoubleArc>,
}

impl std::fmt::Display for NotLiftable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "no short grading: odd closed arc(s)")?;
        for arc in &self.odd_closed_arcs {
            write!(f, " [")?;
            for (i, e) in arc.edges.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Lift a plain daisy graph to an arrowed one carrying a `{0,1}` grading,
/// or report the odd closed arcs that make this impossible.
///
/// Grades alternate along every arc starting from 0 on the arc's first
/// edge; successive arc edges meet in a pair, so selecting the grade-1
/// edge's half-edge as each pair's arrow makes the grading valid with
/// every base equal to 0. Alternation closes up around a closed arc
/// exactly when its length is even, hence the obstruction.
pub fn short_grade_lift(g: &DaisyGraph) -> Result<(ArrowedDaisyGraph, Grading), NotLiftable> {
    let decomposition = decompose_arcs(g);
    let odd_closed_arcs: Vec<DoubleArc> = decomposition
        .arcs
        .iter()
        .filter(|a| a.kind == ArcKind::Closed && a.edges.len() % 2 == 1)
        .cloned()
        .collect();
    if !odd_closed_arcs.is_empty() {
        return Err(NotLiftable { odd_closed_arcs });
    }

    let mut grading = Grading::default();
    for v in g.triple_vertices() {
        grading.bases.insert(v.clone(), 0);
    }
    for arc in &decomposition.arcs {
        for (i, e) in arc.edges.iter().enumerate() {
            grading.grades.insert(e.clone(), (i % 2) as i64);
        }
    }

    let mut lifted = ArrowedDaisyGraph::from_base(g.clone());
    for arc in &decomposition.arcs {
        for (v, pair) in &arc.passages {
            let lo_grade = grading.grades[&pair.lo().edge];
            let chosen = if lo_grade == 1 { pair.lo() } else { pair.hi() };
            lifted.set_arrow(v.clone(), pair.clone(), chosen.clone());
        }
    }
    Ok((lifted, grading))
}

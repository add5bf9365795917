//! Value types for daisy graphs and their structural validation.
//!
//! A daisy graph is stored as plain maps so that *arbitrary* candidate
//! structures are representable; [`DaisyGraph::validate`] (and the arrowed
//! and ordered variants) decide after the fact whether a candidate is a
//! well-formed daisy graph and report every violation as data. All
//! operations in this crate take shared references and never mutate their
//! inputs; the `add_*` helpers exist only for the construction phase.

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Identifier of a vertex. Opaque; ordered lexicographically by code point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub String);

/// Identifier of an edge. Opaque; ordered lexicographically by code point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub String);

macro_rules! id_impls {
    ($ty:ident) => {
        impl $ty {
            pub fn new(s: impl Into<String>) -> Self {
                $ty(s.into())
            }
            pub fn as_str(&self) -> &str {
                &self.0
            }
        }
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }
        impl From<&str> for $ty {
            fn from(s: &str) -> Self {
                $ty(s.to_owned())
            }
        }
        impl From<String> for $ty {
            fn from(s: String) -> Self {
                $ty(s)
            }
        }
        impl Borrow<str> for $ty {
            fn borrow(&self) -> &str {
                &self.0
            }
        }
    };
}

id_impls!(VertexId);
id_impls!(EdgeId);

/// The three vertex species. Triple vertices have degree 6; branch and DB
/// vertices have degree 1. DB marks the terminal branch values that rule
/// out realizations in boundaryless manifolds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    Triple,
    Branch,
    Db,
}

impl VertexKind {
    pub fn expected_degree(self) -> usize {
        match self {
            VertexKind::Triple => 6,
            VertexKind::Branch | VertexKind::Db => 1,
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexKind::Triple => "triple",
            VertexKind::Branch => "branch",
            VertexKind::Db => "db",
        })
    }
}

/// Which of an edge's two half-edges is meant. Slot 0 belongs to the first
/// declared endpoint, slot 1 to the second; a loop has both slots at the
/// same vertex but they remain distinct half-edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Zero,
    One,
}

impl Slot {
    pub fn index(self) -> usize {
        match self {
            Slot::Zero => 0,
            Slot::One => 1,
        }
    }

    pub fn other(self) -> Slot {
        match self {
            Slot::Zero => Slot::One,
            Slot::One => Slot::Zero,
        }
    }

    pub fn from_index(i: usize) -> Option<Slot> {
        match i {
            0 => Some(Slot::Zero),
            1 => Some(Slot::One),
            _ => None,
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// A half-edge: one end of one edge. Printed as `edge.slot`, e.g. `e1.0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdgeRef {
    pub edge: EdgeId,
    pub slot: Slot,
}

impl HalfEdgeRef {
    pub fn new(edge: impl Into<EdgeId>, slot: Slot) -> Self {
        HalfEdgeRef { edge: edge.into(), slot }
    }

    /// The other half of the same edge.
    pub fn opposite(&self) -> HalfEdgeRef {
        HalfEdgeRef { edge: self.edge.clone(), slot: self.slot.other() }
    }
}

impl fmt::Display for HalfEdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.edge, self.slot)
    }
}

/// An unordered consecutive pair of half-edges at a triple vertex, stored
/// with the lexicographically smaller half first. A degenerate pair whose
/// two halves coincide is representable (validation rejects it).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    lo: HalfEdgeRef,
    hi: HalfEdgeRef,
}

impl Pair {
    pub fn new(a: HalfEdgeRef, b: HalfEdgeRef) -> Pair {
        if b < a {
            Pair { lo: b, hi: a }
        } else {
            Pair { lo: a, hi: b }
        }
    }

    pub fn lo(&self) -> &HalfEdgeRef {
        &self.lo
    }

    pub fn hi(&self) -> &HalfEdgeRef {
        &self.hi
    }

    pub fn halves(&self) -> [&HalfEdgeRef; 2] {
        [&self.lo, &self.hi]
    }

    pub fn contains(&self, h: &HalfEdgeRef) -> bool {
        &self.lo == h || &self.hi == h
    }

    /// The half paired with `h`, if `h` belongs to this pair.
    pub fn partner_of(&self, h: &HalfEdgeRef) -> Option<&HalfEdgeRef> {
        if h == &self.lo {
            Some(&self.hi)
        } else if h == &self.hi {
            Some(&self.lo)
        } else {
            None
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.lo, self.hi)
    }
}

/// A daisy graph: vertices of degree 6 or 1, labeled edges, a bare count
/// of free double circles, and the consecutive-pair structure at every
/// triple vertex. Double circles carry no combinatorial data beyond their
/// number, so they are never materialized as vertices or edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DaisyGraph {
    pub vertices: BTreeMap<VertexId, VertexKind>,
    /// Edge id -> its two endpoints; the tuple order defines slots 0 and 1.
    pub edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
    /// Number of double circles.
    pub circles: u32,
    /// Triple vertex -> its three consecutive pairs (kept sorted).
    pub pairing: BTreeMap<VertexId, Vec<Pair>>,
}

impl DaisyGraph {
    pub fn new() -> Self {
        DaisyGraph::default()
    }

    pub fn add_vertex(&mut self, id: impl Into<VertexId>, kind: VertexKind) -> &mut Self {
        self.vertices.insert(id.into(), kind);
        self
    }

    pub fn add_edge(
        &mut self,
        id: impl Into<EdgeId>,
        v0: impl Into<VertexId>,
        v1: impl Into<VertexId>,
    ) -> &mut Self {
        self.edges.insert(id.into(), (v0.into(), v1.into()));
        self
    }

    pub fn add_pair(&mut self, v: impl Into<VertexId>, pair: Pair) -> &mut Self {
        let list = self.pairing.entry(v.into()).or_default();
        list.push(pair);
        list.sort();
        self
    }

    pub fn kind(&self, v: &VertexId) -> Option<VertexKind> {
        self.vertices.get(v).copied()
    }

    pub fn endpoints(&self, e: &EdgeId) -> Option<&(VertexId, VertexId)> {
        self.edges.get(e)
    }

    /// The vertex a half-edge is attached to.
    pub fn endpoint(&self, h: &HalfEdgeRef) -> Option<&VertexId> {
        self.edges.get(&h.edge).map(|(a, b)| match h.slot {
            Slot::Zero => a,
            Slot::One => b,
        })
    }

    pub fn is_loop(&self, e: &EdgeId) -> bool {
        self.edges.get(e).is_some_and(|(a, b)| a == b)
    }

    pub fn degree(&self, v: &VertexId) -> usize {
        self.edges
            .values()
            .map(|(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    /// All half-edges attached to `v`, sorted.
    pub fn half_edges_at(&self, v: &VertexId) -> Vec<HalfEdgeRef> {
        let mut out = Vec::new();
        for (e, (a, b)) in &self.edges {
            if a == v {
                out.push(HalfEdgeRef::new(e.clone(), Slot::Zero));
            }
            if b == v {
                out.push(HalfEdgeRef::new(e.clone(), Slot::One));
            }
        }
        out
    }

    pub fn pairs_at(&self, v: &VertexId) -> &[Pair] {
        self.pairing.get(v).map_or(&[], Vec::as_slice)
    }

    pub fn pair_containing(&self, v: &VertexId, h: &HalfEdgeRef) -> Option<&Pair> {
        self.pairs_at(v).iter().find(|p| p.contains(h))
    }

    pub fn triple_vertices(&self) -> impl Iterator<Item = &VertexId> {
        self.vertices
            .iter()
            .filter(|(_, k)| **k == VertexKind::Triple)
            .map(|(v, _)| v)
    }

    pub fn db_vertices(&self) -> Vec<VertexId> {
        self.vertices
            .iter()
            .filter(|(_, k)| **k == VertexKind::Db)
            .map(|(v, _)| v.clone())
            .collect()
    }

    /// Connected components of the graph part (double circles play no
    /// role). Components are listed by their smallest edge id and each
    /// component's edge list is sorted.
    pub fn components(&self) -> Vec<Vec<EdgeId>> {
        let mut at_vertex: BTreeMap<&VertexId, Vec<&EdgeId>> = BTreeMap::new();
        for (e, (a, b)) in &self.edges {
            at_vertex.entry(a).or_default().push(e);
            if a != b {
                at_vertex.entry(b).or_default().push(e);
            }
        }
        let mut seen: BTreeSet<&EdgeId> = BTreeSet::new();
        let mut components = Vec::new();
        for start in self.edges.keys() {
            if seen.contains(start) {
                continue;
            }
            let mut component = Vec::new();
            let mut queue = vec![start];
            seen.insert(start);
            while let Some(e) = queue.pop() {
                component.push(e.clone());
                let (a, b) = &self.edges[e];
                for v in [a, b] {
                    for f in at_vertex.get(v).into_iter().flatten() {
                        if seen.insert(f) {
                            queue.push(f);
                        }
                    }
                }
            }
            component.sort();
            components.push(component);
        }
        components
    }

    /// Check every structural requirement and report all violations.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut adjacency: BTreeMap<&VertexId, Vec<HalfEdgeRef>> =
            self.vertices.keys().map(|v| (v, Vec::new())).collect();
        for (e, (a, b)) in &self.edges {
            for (v, slot) in [(a, Slot::Zero), (b, Slot::One)] {
                match adjacency.get_mut(v) {
                    Some(list) => list.push(HalfEdgeRef::new(e.clone(), slot)),
                    None => violations.push(Violation::UnknownEndpoint {
                        edge: e.clone(),
                        vertex: v.clone(),
                    }),
                }
            }
        }
        for (v, kind) in &self.vertices {
            let actual = adjacency[v].len();
            if actual != kind.expected_degree() {
                violations.push(Violation::WrongDegree {
                    vertex: v.clone(),
                    kind: *kind,
                    expected: kind.expected_degree(),
                    actual,
                });
            }
            if *kind == VertexKind::Triple && !self.pairing.contains_key(v) {
                violations.push(Violation::MissingPairing { vertex: v.clone() });
            }
        }
        for (v, pairs) in &self.pairing {
            if self.kind(v) != Some(VertexKind::Triple) {
                violations.push(Violation::PairingAtNonTriple { vertex: v.clone() });
                continue;
            }
            if pairs.len() != 3 {
                violations.push(Violation::WrongPairCount { vertex: v.clone(), count: pairs.len() });
            }
            let mut seen: BTreeMap<&HalfEdgeRef, usize> = BTreeMap::new();
            for pair in pairs {
                for h in pair.halves() {
                    if !self.edges.contains_key(&h.edge) {
                        violations.push(Violation::PairUnknownEdge {
                            vertex: v.clone(),
                            half_edge: h.clone(),
                        });
                    } else if self.endpoint(h) != Some(v) {
                        violations.push(Violation::PairForeignHalfEdge {
                            vertex: v.clone(),
                            half_edge: h.clone(),
                        });
                    }
                    *seen.entry(h).or_insert(0) += 1;
                }
            }
            for (h, n) in &seen {
                if *n > 1 {
                    violations.push(Violation::DuplicatedInPairing {
                        vertex: v.clone(),
                        half_edge: (*h).clone(),
                    });
                }
            }
            for h in adjacency.get(v).into_iter().flatten() {
                if !seen.contains_key(h) {
                    violations.push(Violation::UncoveredByPairing {
                        vertex: v.clone(),
                        half_edge: h.clone(),
                    });
                }
            }
        }
        ValidationReport { violations }
    }
}

/// A daisy graph together with arrows: one preferred half-edge chosen in
/// every consecutive pair.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ArrowedDaisyGraph {
    pub base: DaisyGraph,
    /// (triple vertex, pair) -> the preferred half of that pair.
    pub arrows: BTreeMap<(VertexId, Pair), HalfEdgeRef>,
}

/// Whether a half-edge is the one its pair's arrow selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PreferredStatus {
    Preferred,
    NonPreferred,
}

impl PreferredStatus {
    pub fn is_preferred(self) -> bool {
        self == PreferredStatus::Preferred
    }
}

/// Why a preference query could not be answered.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreferenceError {
    #[error("edge {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("half-edge {half_edge} is at degree-1 vertex {vertex}; only triple vertices carry preferences")]
    NoPreferenceAtLeaf { half_edge: HalfEdgeRef, vertex: VertexId },
    #[error("half-edge {half_edge} is not covered by any pair at {vertex}")]
    MissingPair { half_edge: HalfEdgeRef, vertex: VertexId },
    #[error("pair {pair} at {vertex} carries no arrow")]
    MissingArrow { vertex: VertexId, pair: Pair },
}

impl ArrowedDaisyGraph {
    pub fn from_base(base: DaisyGraph) -> Self {
        ArrowedDaisyGraph { base, arrows: BTreeMap::new() }
    }

    pub fn set_arrow(&mut self, v: impl Into<VertexId>, pair: Pair, chosen: HalfEdgeRef) -> &mut Self {
        self.arrows.insert((v.into(), pair), chosen);
        self
    }

    pub fn arrow(&self, v: &VertexId, pair: &Pair) -> Option<&HalfEdgeRef> {
        self.arrows.get(&(v.clone(), pair.clone()))
    }

    /// The preferred half-edges at `v`, sorted. Empty for non-triple
    /// vertices or when the structure is broken.
    pub fn preferred_at(&self, v: &VertexId) -> Vec<HalfEdgeRef> {
        let mut out: Vec<HalfEdgeRef> = self
            .base
            .pairs_at(v)
            .iter()
            .filter_map(|p| self.arrow(v, p))
            .cloned()
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Is `h` the preferred half of its pair? Answerable only at triple
    /// vertices of a structurally sound graph.
    pub fn preferred_status(&self, h: &HalfEdgeRef) -> Result<PreferredStatus, PreferenceError> {
        let v = self
            .base
            .endpoint(h)
            .ok_or_else(|| PreferenceError::UnknownEdge(h.edge.clone()))?;
        if self.base.kind(v) != Some(VertexKind::Triple) {
            return Err(PreferenceError::NoPreferenceAtLeaf {
                half_edge: h.clone(),
                vertex: v.clone(),
            });
        }
        let pair = self.base.pair_containing(v, h).ok_or_else(|| PreferenceError::MissingPair {
            half_edge: h.clone(),
            vertex: v.clone(),
        })?;
        let chosen = self.arrow(v, pair).ok_or_else(|| PreferenceError::MissingArrow {
            vertex: v.clone(),
            pair: pair.clone(),
        })?;
        Ok(if chosen == h { PreferredStatus::Preferred } else { PreferredStatus::NonPreferred })
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = self.base.validate();
        for (v, pairs) in &self.base.pairing {
            for pair in pairs {
                match self.arrow(v, pair) {
                    None => report.violations.push(Violation::ArrowMissing {
                        vertex: v.clone(),
                        pair: pair.clone(),
                    }),
                    Some(chosen) if !pair.contains(chosen) => {
                        report.violations.push(Violation::ArrowOutsidePair {
                            vertex: v.clone(),
                            pair: pair.clone(),
                            chosen: chosen.clone(),
                        })
                    }
                    Some(_) => {}
                }
            }
        }
        for (v, pair) in self.arrows.keys() {
            let known = self.base.pairing.get(v).is_some_and(|ps| ps.contains(pair));
            if !known {
                report.violations.push(Violation::ArrowForeignPair {
                    vertex: v.clone(),
                    pair: pair.clone(),
                });
            }
        }
        report
    }
}

/// Comparison of ordered daisy graphs over different underlying data is
/// not meaningful.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("ordered daisy graphs have different underlying arrowed graphs")]
pub struct BaseMismatch;

/// An arrowed daisy graph whose three preferred half-edges are cyclically
/// ordered at every triple vertex. Orders are compared modulo even
/// permutations, which for three entries means modulo rotation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrderedDaisyGraph {
    pub base: ArrowedDaisyGraph,
    pub ordering: BTreeMap<VertexId, [HalfEdgeRef; 3]>,
}

impl OrderedDaisyGraph {
    pub fn from_base(base: ArrowedDaisyGraph) -> Self {
        OrderedDaisyGraph { base, ordering: BTreeMap::new() }
    }

    pub fn set_order(&mut self, v: impl Into<VertexId>, order: [HalfEdgeRef; 3]) -> &mut Self {
        self.ordering.insert(v.into(), order);
        self
    }

    /// Rotate every vertex's cyclic order so its lexicographically smallest
    /// entry comes first. Canonical forms of equivalent orders coincide.
    pub fn canonicalized(&self) -> Self {
        let mut out = self.clone();
        for order in out.ordering.values_mut() {
            *order = rotate_min_first(order);
        }
        out
    }

    /// Do two orderings of the same arrowed graph agree modulo even
    /// permutations at every vertex?
    pub fn orders_equal(&self, other: &OrderedDaisyGraph) -> Result<bool, BaseMismatch> {
        if self.base != other.base {
            return Err(BaseMismatch);
        }
        Ok(self.canonicalized().ordering == other.canonicalized().ordering)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = self.base.validate();
        for (v, kind) in &self.base.base.vertices {
            if *kind == VertexKind::Triple && !self.ordering.contains_key(v) {
                report.violations.push(Violation::OrderingMissing { vertex: v.clone() });
            }
        }
        for (v, order) in &self.ordering {
            if self.base.base.kind(v) != Some(VertexKind::Triple) {
                report.violations.push(Violation::OrderingAtNonTriple { vertex: v.clone() });
                continue;
            }
            let preferred = self.base.preferred_at(v);
            let mut seen: BTreeSet<&HalfEdgeRef> = BTreeSet::new();
            for h in order {
                if !preferred.contains(h) {
                    report.violations.push(Violation::OrderingNotPreferred {
                        vertex: v.clone(),
                        half_edge: h.clone(),
                    });
                }
                if !seen.insert(h) {
                    report.violations.push(Violation::OrderingDuplicate {
                        vertex: v.clone(),
                        half_edge: h.clone(),
                    });
                }
            }
        }
        report
    }
}

fn rotate_min_first(order: &[HalfEdgeRef; 3]) -> [HalfEdgeRef; 3] {
    let min = (0..3).min_by_key(|&i| &order[i]).unwrap();
    [order[min].clone(), order[(min + 1) % 3].clone(), order[(min + 2) % 3].clone()]
}

/// A walk `e0, v0, e1, ..., v(r-1), er` alternating edges and triple
/// vertices, where each listed vertex joins its two neighboring edges.
/// Consecutive edges may coincide (a walk may double back).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
}

/// Why a candidate path is not a path of a given graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("a path must list one more edge than vertices (got {edges} edges, {vertices} vertices)")]
    ShapeMismatch { edges: usize, vertices: usize },
    #[error("path references unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("path references unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("path vertex {0} is not a triple vertex")]
    NotTriple(VertexId),
    #[error("path vertex {vertex} is not an endpoint of edge {edge}")]
    NotIncident { vertex: VertexId, edge: EdgeId },
}

impl Path {
    pub fn new(edges: Vec<EdgeId>, vertices: Vec<VertexId>) -> Self {
        Path { edges, vertices }
    }

    /// First edge of the walk.
    pub fn first_edge(&self) -> Option<&EdgeId> {
        self.edges.first()
    }

    /// Last edge of the walk.
    pub fn last_edge(&self) -> Option<&EdgeId> {
        self.edges.last()
    }

    /// Verify the alternating shape and all incidences against `g`.
    pub fn check_in(&self, g: &DaisyGraph) -> Result<(), PathError> {
        if self.edges.is_empty() || self.edges.len() != self.vertices.len() + 1 {
            return Err(PathError::ShapeMismatch {
                edges: self.edges.len(),
                vertices: self.vertices.len(),
            });
        }
        for e in &self.edges {
            if !g.edges.contains_key(e) {
                return Err(PathError::UnknownEdge(e.clone()));
            }
        }
        for (k, v) in self.vertices.iter().enumerate() {
            match g.kind(v) {
                None => return Err(PathError::UnknownVertex(v.clone())),
                Some(VertexKind::Triple) => {}
                Some(_) => return Err(PathError::NotTriple(v.clone())),
            }
            for e in [&self.edges[k], &self.edges[k + 1]] {
                let (a, b) = &g.edges[e];
                if a != v && b != v {
                    return Err(PathError::NotIncident { vertex: v.clone(), edge: e.clone() });
                }
            }
        }
        Ok(())
    }
}

/// One structural defect of a candidate daisy graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    UnknownEndpoint { edge: EdgeId, vertex: VertexId },
    WrongDegree { vertex: VertexId, kind: VertexKind, expected: usize, actual: usize },
    MissingPairing { vertex: VertexId },
    PairingAtNonTriple { vertex: VertexId },
    WrongPairCount { vertex: VertexId, count: usize },
    PairUnknownEdge { vertex: VertexId, half_edge: HalfEdgeRef },
    PairForeignHalfEdge { vertex: VertexId, half_edge: HalfEdgeRef },
    DuplicatedInPairing { vertex: VertexId, half_edge: HalfEdgeRef },
    UncoveredByPairing { vertex: VertexId, half_edge: HalfEdgeRef },
    ArrowMissing { vertex: VertexId, pair: Pair },
    ArrowOutsidePair { vertex: VertexId, pair: Pair, chosen: HalfEdgeRef },
    ArrowForeignPair { vertex: VertexId, pair: Pair },
    OrderingMissing { vertex: VertexId },
    OrderingAtNonTriple { vertex: VertexId },
    OrderingNotPreferred { vertex: VertexId, half_edge: HalfEdgeRef },
    OrderingDuplicate { vertex: VertexId, half_edge: HalfEdgeRef },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            UnknownEndpoint { edge, vertex } => {
                write!(f, "edge {edge} references unknown vertex {vertex}")
            }
            WrongDegree { vertex, kind, expected, actual } => {
                write!(f, "{kind} vertex {vertex} has degree {actual}, expected {expected}")
            }
            MissingPairing { vertex } => {
                write!(f, "triple vertex {vertex} has no consecutive pairs")
            }
            PairingAtNonTriple { vertex } => {
                write!(f, "vertex {vertex} carries pairs but is not a triple vertex")
            }
            WrongPairCount { vertex, count } => {
                write!(f, "vertex {vertex} carries {count} pairs, expected 3")
            }
            PairUnknownEdge { vertex, half_edge } => {
                write!(f, "pair at {vertex} references unknown edge {}", half_edge.edge)
            }
            PairForeignHalfEdge { vertex, half_edge } => {
                write!(f, "pair at {vertex} lists half-edge {half_edge} which is not attached to {vertex}")
            }
            DuplicatedInPairing { vertex, half_edge } => {
                write!(f, "pairs at {vertex} are not a partition: {half_edge} appears more than once")
            }
            UncoveredByPairing { vertex, half_edge } => {
                write!(f, "pairs at {vertex} are not a partition: {half_edge} is not covered")
            }
            ArrowMissing { vertex, pair } => {
                write!(f, "pair {pair} at {vertex} has no preferred half-edge")
            }
            ArrowOutsidePair { vertex, pair, chosen } => {
                write!(f, "preferred half-edge {chosen} at {vertex} lies outside its pair {pair}")
            }
            ArrowForeignPair { vertex, pair } => {
                write!(f, "arrow at {vertex} refers to {pair} which is not a pair of {vertex}")
            }
            OrderingMissing { vertex } => {
                write!(f, "triple vertex {vertex} has no preferred-edge order")
            }
            OrderingAtNonTriple { vertex } => {
                write!(f, "vertex {vertex} carries an order but is not a triple vertex")
            }
            OrderingNotPreferred { vertex, half_edge } => {
                write!(f, "order at {vertex} lists {half_edge} which is not a preferred half-edge")
            }
            OrderingDuplicate { vertex, half_edge } => {
                write!(f, "order at {vertex} lists {half_edge} twice")
            }
        }
    }
}

/// Outcome of structural validation: empty means well-formed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// An integer or half-integer, kept exact as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Euler characteristic of the image of a generic surface: starting from
/// the characteristic `chi_f` of the abstract surface, each of the `t`
/// triple values adds 1 and each of the `b` branch values adds 1/2. Odd
/// `b` is accepted; the result is then a proper half-integer.
pub fn euler_char_of_image(chi_f: i64, t: u64, b: u64) -> HalfInt {
    HalfInt::from_twice(2 * chi_f + 2 * (t as i64) + b as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn h(e: &str, s: usize) -> HalfEdgeRef {
        HalfEdgeRef::new(e, Slot::from_index(s).unwrap())
    }

    #[test]
    fn empty_graph_is_valid() {
        assert!(DaisyGraph::new().validate().is_ok());
        let mut circles_only = DaisyGraph::new();
        circles_only.circles = 3;
        assert!(circles_only.validate().is_ok());
    }

    #[test]
    fn star_fixture_is_valid() {
        let star = fixtures::star();
        assert!(star.validate().is_ok(), "{}", star.validate());
        let dg = star.base.clone();
        assert!(dg.validate().is_ok());
    }

    #[test]
    fn pair_listing_a_half_edge_twice_is_not_a_partition() {
        let mut star = fixtures::star();
        let pairs = star.base.pairing.get_mut("v").unwrap();
        pairs[0] = Pair::new(h("e1", 0), h("e1", 0));
        let report = star.base.validate();
        assert!(report.violations.iter().any(|v| matches!(
            v,
            Violation::DuplicatedInPairing { half_edge, .. } if *half_edge == h("e1", 0)
        )));
        assert!(report.violations.iter().any(|v| matches!(
            v,
            Violation::UncoveredByPairing { half_edge, .. } if *half_edge == h("e2", 0)
        )));
    }

    #[test]
    fn arrow_outside_its_pair_is_flagged() {
        let mut star = fixtures::star();
        let pair = Pair::new(h("e1", 0), h("e2", 0));
        star.set_arrow("v", pair.clone(), h("e3", 0));
        let report = star.validate();
        assert!(report.violations.iter().any(|v| matches!(
            v,
            Violation::ArrowOutsidePair { chosen, .. } if *chosen == h("e3", 0)
        )));
    }

    #[test]
    fn dropping_an_edge_breaks_degree_and_pairing() {
        let mut star = fixtures::star();
        star.base.edges.remove("e6");
        let report = star.base.validate();
        assert!(report.violations.iter().any(|v| matches!(
            v,
            Violation::WrongDegree { vertex, actual: 5, .. } if vertex.as_str() == "v"
        )));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::PairUnknownEdge { .. })));
    }

    #[test]
    fn preferred_status_matches_the_arrows() {
        let star = fixtures::star();
        assert_eq!(star.preferred_status(&h("e1", 0)), Ok(PreferredStatus::Preferred));
        assert_eq!(star.preferred_status(&h("e2", 0)), Ok(PreferredStatus::NonPreferred));
        assert!(matches!(
            star.preferred_status(&h("e1", 1)),
            Err(PreferenceError::NoPreferenceAtLeaf { .. })
        ));
    }

    #[test]
    fn each_vertex_splits_half_edges_three_and_three() {
        let star = fixtures::star();
        let v = VertexId::from("v");
        let preferred = star.preferred_at(&v);
        assert_eq!(preferred.len(), 3);
        let all = star.base.half_edges_at(&v);
        let non: Vec<_> = all.iter().filter(|h| !preferred.contains(h)).collect();
        assert_eq!(non.len(), 3);
    }

    #[test]
    fn canonicalize_rotates_min_first() {
        let order = [h("e3", 0), h("e1", 0), h("e2", 0)];
        assert_eq!(rotate_min_first(&order), [h("e1", 0), h("e2", 0), h("e3", 0)]);
        let already = [h("e1", 0), h("e3", 0), h("e2", 0)];
        assert_eq!(rotate_min_first(&already), already);
    }

    #[test]
    fn orders_compare_modulo_rotation() {
        let base = fixtures::star();
        let mut a = OrderedDaisyGraph::from_base(base.clone());
        a.set_order("v", [h("e3", 0), h("e5", 0), h("e1", 0)]);
        let mut b = OrderedDaisyGraph::from_base(base.clone());
        b.set_order("v", [h("e1", 0), h("e3", 0), h("e5", 0)]);
        let mut c = OrderedDaisyGraph::from_base(base);
        c.set_order("v", [h("e1", 0), h("e5", 0), h("e3", 0)]);
        assert!(a.validate().is_ok());
        assert_eq!(a.orders_equal(&b), Ok(true));
        assert_eq!(a.orders_equal(&c), Ok(false));
        assert_eq!(
            a.canonicalized().ordering["v"],
            [h("e1", 0), h("e3", 0), h("e5", 0)]
        );
    }

    #[test]
    fn orders_over_different_bases_do_not_compare() {
        let mut other = fixtures::star();
        other.base.circles = 1;
        let a = OrderedDaisyGraph::from_base(fixtures::star());
        let b = OrderedDaisyGraph::from_base(other);
        assert_eq!(a.orders_equal(&b), Err(BaseMismatch));
    }

    #[test]
    fn ordering_must_list_preferred_half_edges() {
        let mut odg = OrderedDaisyGraph::from_base(fixtures::star());
        odg.set_order("v", [h("e1", 0), h("e3", 0), h("e5", 0)]);
        assert!(odg.validate().is_ok());
        odg.set_order("v", [h("e2", 0), h("e3", 0), h("e5", 0)]);
        assert!(odg
            .validate()
            .violations
            .iter()
            .any(|v| matches!(v, Violation::OrderingNotPreferred { half_edge, .. } if *half_edge == h("e2", 0))));
        odg.set_order("v", [h("e1", 0), h("e1", 0), h("e5", 0)]);
        assert!(odg
            .validate()
            .violations
            .iter()
            .any(|v| matches!(v, Violation::OrderingDuplicate { .. })));
    }

    #[test]
    fn paths_alternate_edges_and_incident_triple_vertices() {
        let star = fixtures::star();
        let ok = Path::new(
            vec!["e1".into(), "e2".into(), "e3".into()],
            vec!["v".into(), "v".into()],
        );
        assert_eq!(ok.check_in(&star.base), Ok(()));
        let single = Path::new(vec!["e1".into()], vec![]);
        assert_eq!(single.check_in(&star.base), Ok(()));
        let bad_shape = Path::new(vec!["e1".into()], vec!["v".into()]);
        assert!(matches!(bad_shape.check_in(&star.base), Err(PathError::ShapeMismatch { .. })));
        let not_triple = Path::new(
            vec!["e1".into(), "e1".into()],
            vec!["b1".into()],
        );
        assert!(matches!(not_triple.check_in(&star.base), Err(PathError::NotTriple(_))));
    }

    #[test]
    fn components_split_on_shared_triple_vertices_only() {
        let mut g = fixtures::star().base;
        g.add_vertex("x1", VertexKind::Branch)
            .add_vertex("x2", VertexKind::Branch)
            .add_edge("iso", "x1", "x2");
        assert!(g.validate().is_ok());
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].len(), 6);
        assert_eq!(comps[1], vec![EdgeId::from("iso")]);
    }

    #[test]
    fn euler_characteristic_is_exact() {
        assert_eq!(euler_char_of_image(2, 0, 0).to_string(), "2");
        assert_eq!(euler_char_of_image(2, 0, 2).to_string(), "3");
        assert_eq!(euler_char_of_image(0, 3, 1).to_string(), "7/2");
        assert_eq!(euler_char_of_image(0, 3, 1).twice(), 7);
        assert_eq!(euler_char_of_image(-4, 1, 3).to_string(), "-3/2");
        assert!(!euler_char_of_image(0, 0, 1).is_integer());
    }

    #[test]
    fn single_field_mutations_are_rejected_and_name_the_element() {
        // Every mutation leaves exactly one field of the valid star broken;
        // the report must name the touched element.
        let star = fixtures::star();
        assert!(star.validate().is_ok());

        let mut m = star.clone();
        m.base.pairing.get_mut("v").unwrap().remove(0);
        let report = m.validate();
        assert!(report.violations.iter().any(|v| matches!(
            v,
            Violation::WrongPairCount { vertex, .. } if vertex.as_str() == "v"
        )));

        let mut m = star.clone();
        m.base.vertices.insert("b1".into(), VertexKind::Triple);
        let report = m.validate();
        assert!(report.violations.iter().any(|v| matches!(
            v,
            Violation::WrongDegree { vertex, .. } if vertex.as_str() == "b1"
        )));

        let mut m = star.clone();
        m.base.edges.insert("e1".into(), ("b1".into(), "zzz".into()));
        let report = m.validate();
        assert!(report.violations.iter().any(|v| matches!(
            v,
            Violation::UnknownEndpoint { vertex, .. } if vertex.as_str() == "zzz"
        )));

        let mut m = star.clone();
        let key = ("v".into(), Pair::new(h("e1", 0), h("e2", 0)));
        m.arrows.insert(key, h("e1", 1));
        let report = m.validate();
        assert!(report.violations.iter().any(|v| matches!(
            v,
            Violation::ArrowOutsidePair { chosen, .. } if *chosen == h("e1", 1)
        )));
    }
}

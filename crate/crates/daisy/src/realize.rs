//! Which ambient 3-manifolds admit a surface with a given intersection
//! graph.
//!
//! The answer depends on the manifold only through two bits — whether the
//! first integral homology group is periodic (every element of finite
//! order) and whether the boundary is nonempty — and on the graph only
//! through two more: gradability and the presence of DB vertices. A DB
//! vertex marks a double line running into the ambient boundary, so a
//! closed manifold rules them out outright; periodic homology is what
//! forces gradings to exist.
//!
//! The oriented manifold is assumed compact in the closed cases. Beyond
//! that, nothing about the manifold enters the decision.

use thiserror::Error;

use crate::grading::{grade, NotGradable};
use crate::model::{ArrowedDaisyGraph, OrderedDaisyGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Homology {
    Periodic,
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Boundary {
    Closed,
    Bounded,
}

/// The four ambient classes that the realizability decision distinguishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ManifoldClass {
    pub homology: Homology,
    pub boundary: Boundary,
}

impl ManifoldClass {
    pub const PERIODIC_CLOSED: ManifoldClass =
        ManifoldClass { homology: Homology::Periodic, boundary: Boundary::Closed };
    pub const PERIODIC_BOUNDED: ManifoldClass =
        ManifoldClass { homology: Homology::Periodic, boundary: Boundary::Bounded };
    pub const INFINITE_CLOSED: ManifoldClass =
        ManifoldClass { homology: Homology::Infinite, boundary: Boundary::Closed };
    pub const INFINITE_BOUNDED: ManifoldClass =
        ManifoldClass { homology: Homology::Infinite, boundary: Boundary::Bounded };

    pub const ALL: [ManifoldClass; 4] = [
        ManifoldClass::PERIODIC_CLOSED,
        ManifoldClass::PERIODIC_BOUNDED,
        ManifoldClass::INFINITE_CLOSED,
        ManifoldClass::INFINITE_BOUNDED,
    ];
}

impl std::fmt::Display for ManifoldClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let h = match self.homology {
            Homology::Periodic => "periodic",
            Homology::Infinite => "infinite",
        };
        let b = match self.boundary {
            Boundary::Closed => "closed",
            Boundary::Bounded => "bounded",
        };
        write!(f, "{h}-{b}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown manifold class {input:?}; expected periodic-closed, periodic-bounded, infinite-closed, or infinite-bounded")]
pub struct ManifoldClassParseError {
    pub input: String,
}

impl std::str::FromStr for ManifoldClass {
    type Err = ManifoldClassParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ManifoldClass::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| ManifoldClassParseError { input: s.to_owned() })
    }
}

/// Evidence attached to a verdict: the obstructions that block
/// realization, or the note that the class imposes no condition at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictReason {
    NotGradable(NotGradable),
    HasDbValues(Vec<VertexId>),
    Unconditional,
}

impl std::fmt::Display for VerdictReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerdictReason::NotGradable(why) => write!(f, "not gradable: {why}"),
            VerdictReason::HasDbValues(vs) => {
                write!(f, "has DB values:")?;
                for v in vs {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            VerdictReason::Unconditional => f.write_str("unconditional"),
        }
    }
}

/// The decision plus its evidence. `reasons` is nonempty exactly when the
/// verdict is negative, except that the always-realizable class carries
/// an explicit [`VerdictReason::Unconditional`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizabilityVerdict {
    pub realizable: bool,
    pub reasons: Vec<VerdictReason>,
}

/// Decide whether some surface in some manifold of class `m` has `g` as
/// its intersection graph. Expects a structurally valid graph.
///
/// The table:
///
/// | class             | realizable iff             |
/// |-------------------|----------------------------|
/// | periodic-closed   | gradable and no DB values  |
/// | periodic-bounded  | gradable                   |
/// | infinite-closed   | no DB values               |
/// | infinite-bounded  | always                     |
///
/// Negative verdicts list every failing condition: the grading
/// obstruction and/or the DB vertices.
pub fn decide_realizable(g: &ArrowedDaisyGraph, m: ManifoldClass) -> RealizabilityVerdict {
    let needs_gradable = m.homology == Homology::Periodic;
    let needs_db_free = m.boundary == Boundary::Closed;

    if !needs_gradable && !needs_db_free {
        return RealizabilityVerdict { realizable: true, reasons: vec![VerdictReason::Unconditional] };
    }

    let mut reasons = Vec::new();
    if needs_gradable {
        if let Err(why) = grade(g) {
            reasons.push(VerdictReason::NotGradable(why));
        }
    }
    if needs_db_free {
        let db = g.base.db_vertices();
        if !db.is_empty() {
            reasons.push(VerdictReason::HasDbValues(db));
        }
    }
    RealizabilityVerdict { realizable: reasons.is_empty(), reasons }
}

/// Ordering data never changes the verdict, so an ordered graph is
/// decided on its underlying arrowed graph.
pub fn decide_realizable_ordered(g: &OrderedDaisyGraph, m: ManifoldClass) -> RealizabilityVerdict {
    decide_realizable(&g.base, m)
}

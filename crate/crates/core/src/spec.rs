//! Path kinds and the membership predicate that decides whether a vertex
//! sequence is a qualifying ("long, of the right type") object.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathKind {
    /// One end in A, the other in B, interior avoids A ∪ B.
    Ab,
    /// Both ends in A, interior avoids A.
    APath,
    /// One end in A, the other in B, interior avoids B (may revisit A).
    AStarB,
    /// One end in A, the other in B, interior unrestricted.
    AStarBStar,
    /// Ends in two different parts, interior avoids every part.
    SPath,
    /// A cycle through the hub.
    CycleThrough,
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PathKind::Ab => "AB",
            PathKind::APath => "APATH",
            PathKind::AStarB => "ASTAR_B",
            PathKind::AStarBStar => "ASTAR_BSTAR",
            PathKind::SPath => "SPATH",
            PathKind::CycleThrough => "CYCLE_THROUGH",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Terminals {
    Ab { a: VertexSet, b: VertexSet },
    APath { a: VertexSet },
    AStarB { a: VertexSet, b: VertexSet },
    AStarBStar { a: VertexSet, b: VertexSet },
    SPath { parts: Vec<VertexSet> },
    CycleThrough { hub: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("minimum length must be at least 1")]
    ZeroLength,
    #[error("terminal vertex {0} is not in the graph")]
    VertexOutOfRange(Vertex),
    #[error("{0} requires disjoint terminal sets; they share vertex {1}")]
    Overlap(PathKind, Vertex),
    #[error("partition part {0} is empty")]
    EmptyPart(usize),
}

/// Why a vertex sequence fails to be a qualifying object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Disqualified {
    WrongEndpoints,
    InteriorForbidden(Vertex),
    TooShort(usize),
    TooLong(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSpec {
    pub terminals: Terminals,
    pub min_len: usize,
    /// Inclusive upper end of a length window; `None` means unbounded.
    pub max_len: Option<usize>,
}

impl PathSpec {
    pub fn new(terminals: Terminals, min_len: usize) -> Self {
        PathSpec { terminals, min_len, max_len: None }
    }

    pub fn ab(a: VertexSet, b: VertexSet, min_len: usize) -> Self {
        Self::new(Terminals::Ab { a, b }, min_len)
    }

    pub fn a_path(a: VertexSet, min_len: usize) -> Self {
        Self::new(Terminals::APath { a }, min_len)
    }

    pub fn astar_b(a: VertexSet, b: VertexSet, min_len: usize) -> Self {
        Self::new(Terminals::AStarB { a, b }, min_len)
    }

    pub fn astar_bstar(a: VertexSet, b: VertexSet, min_len: usize) -> Self {
        Self::new(Terminals::AStarBStar { a, b }, min_len)
    }

    pub fn s_path(parts: Vec<VertexSet>, min_len: usize) -> Self {
        Self::new(Terminals::SPath { parts }, min_len)
    }

    pub fn cycle_through(hub: Vertex, min_len: usize) -> Self {
        Self::new(Terminals::CycleThrough { hub }, min_len)
    }

    pub fn with_window(&self, min_len: usize, max_len: Option<usize>) -> Self {
        PathSpec { terminals: self.terminals.clone(), min_len, max_len }
    }

    pub fn kind(&self) -> PathKind {
        match self.terminals {
            Terminals::Ab { .. } => PathKind::Ab,
            Terminals::APath { .. } => PathKind::APath,
            Terminals::AStarB { .. } => PathKind::AStarB,
            Terminals::AStarBStar { .. } => PathKind::AStarBStar,
            Terminals::SPath { .. } => PathKind::SPath,
            Terminals::CycleThrough { .. } => PathKind::CycleThrough,
        }
    }

    /// True when the length window admits no length at all.
    pub fn window_is_empty(&self) -> bool {
        matches!(self.max_len, Some(hi) if hi < self.min_len)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), SpecError> {
        if self.min_len == 0 {
            return Err(SpecError::ZeroLength);
        }
        let check = |s: &VertexSet| -> Result<(), SpecError> {
            match s.iter().find(|&&v| !g.contains_vertex(v)) {
                Some(&v) => Err(SpecError::VertexOutOfRange(v)),
                None => Ok(()),
            }
        };
        match &self.terminals {
            Terminals::Ab { a, b } | Terminals::AStarBStar { a, b } => {
                check(a)?;
                check(b)
            }
            Terminals::AStarB { a, b } => {
                check(a)?;
                check(b)?;
                match a.intersection(b).next() {
                    Some(&v) => Err(SpecError::Overlap(PathKind::AStarB, v)),
                    None => Ok(()),
                }
            }
            Terminals::APath { a } => check(a),
            Terminals::SPath { parts } => {
                let mut seen = VertexSet::new();
                for (i, p) in parts.iter().enumerate() {
                    if p.is_empty() {
                        return Err(SpecError::EmptyPart(i));
                    }
                    check(p)?;
                    for &v in p {
                        if !seen.insert(v) {
                            return Err(SpecError::Overlap(PathKind::SPath, v));
                        }
                    }
                }
                Ok(())
            }
            Terminals::CycleThrough { hub } => {
                if g.contains_vertex(*hub) {
                    Ok(())
                } else {
                    Err(SpecError::VertexOutOfRange(*hub))
                }
            }
        }
    }

    /// Index of the part containing `v` (S-paths only).
    fn part_of(&self, v: Vertex) -> Option<usize> {
        match &self.terminals {
            Terminals::SPath { parts } => parts.iter().position(|p| p.contains(&v)),
            _ => None,
        }
    }

    /// Whether a search may start at `v`. Every qualifying path has an
    /// orientation that starts at such a vertex.
    pub fn can_start(&self, v: Vertex) -> bool {
        match &self.terminals {
            Terminals::Ab { a, .. }
            | Terminals::APath { a }
            | Terminals::AStarB { a, .. }
            | Terminals::AStarBStar { a, .. } => a.contains(&v),
            Terminals::SPath { .. } => self.part_of(v).is_some(),
            Terminals::CycleThrough { hub } => *hub == v,
        }
    }

    /// Whether a path started at `start` may end at `v`.
    pub fn can_end(&self, start: Vertex, v: Vertex) -> bool {
        if start == v {
            return false;
        }
        match &self.terminals {
            Terminals::Ab { b, .. } | Terminals::AStarB { b, .. } | Terminals::AStarBStar { b, .. } => b.contains(&v),
            Terminals::APath { a } => a.contains(&v),
            Terminals::SPath { .. } => match (self.part_of(start), self.part_of(v)) {
                (Some(i), Some(j)) => i != j,
                _ => false,
            },
            Terminals::CycleThrough { .. } => false,
        }
    }

    /// Whether `v` may appear strictly inside a qualifying path.
    pub fn interior_allowed(&self, v: Vertex) -> bool {
        match &self.terminals {
            Terminals::Ab { a, b } => !a.contains(&v) && !b.contains(&v),
            Terminals::APath { a } => !a.contains(&v),
            Terminals::AStarB { b, .. } => !b.contains(&v),
            Terminals::AStarBStar { .. } => true,
            Terminals::SPath { .. } => self.part_of(v).is_none(),
            Terminals::CycleThrough { .. } => true,
        }
    }

    fn check_length(&self, len: usize) -> Result<(), Disqualified> {
        let floor = if self.kind() == PathKind::CycleThrough { self.min_len.max(3) } else { self.min_len };
        if len < floor {
            return Err(Disqualified::TooShort(len));
        }
        if let Some(hi) = self.max_len {
            if len > hi {
                return Err(Disqualified::TooLong(len));
            }
        }
        Ok(())
    }

    /// Decides membership for a vertex sequence that is already known to be a
    /// simple path (or closed cycle) of the host graph.
    pub fn qualifies(&self, vertices: &[Vertex]) -> Result<(), Disqualified> {
        if vertices.len() < 2 {
            return Err(Disqualified::TooShort(0));
        }
        let len = vertices.len() - 1;
        if let Terminals::CycleThrough { hub } = self.terminals {
            let closed = vertices.len() >= 4 && vertices[0] == vertices[len];
            if !closed || !vertices.contains(&hub) {
                return Err(Disqualified::WrongEndpoints);
            }
            return self.check_length(len);
        }
        let (s, t) = (vertices[0], vertices[len]);
        let forward = self.can_start(s) && self.can_end(s, t);
        let backward = self.can_start(t) && self.can_end(t, s);
        if !forward && !backward {
            return Err(Disqualified::WrongEndpoints);
        }
        if let Some(&v) = vertices[1..len].iter().find(|&&v| !self.interior_allowed(v)) {
            return Err(Disqualified::InteriorForbidden(v));
        }
        self.check_length(len)
    }
}

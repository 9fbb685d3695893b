//! Independent certificate checking. Qualification is re-derived from the
//! path spec and the graph; nothing produced by a solver is trusted.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::bounds::BoundValue;
use crate::certificate::{Certificate, CertificateBody};
use crate::graph::{EdgeId, EdgeSet, Graph, Path, Vertex};
use crate::oracle::{find_long_path, OracleConfig, OracleError};
use crate::spec::{Disqualified, PathSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationCode {
    NotAPath,
    WrongEndpoints,
    InteriorForbidden,
    TooShort,
    NotEdgeDisjoint,
    SurvivingPath,
    BoundExceeded,
    TooFewPaths,
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationCode::NotAPath => "NOT_A_PATH",
            ViolationCode::WrongEndpoints => "WRONG_ENDPOINTS",
            ViolationCode::InteriorForbidden => "INTERIOR_FORBIDDEN",
            ViolationCode::TooShort => "TOO_SHORT",
            ViolationCode::NotEdgeDisjoint => "NOT_EDGE_DISJOINT",
            ViolationCode::SurvivingPath => "SURVIVING_PATH",
            ViolationCode::BoundExceeded => "BOUND_EXCEEDED",
            ViolationCode::TooFewPaths => "TOO_FEW_PATHS",
        })
    }
}

/// A failed check together with a witness that can be re-checked against the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotAPath { index: usize, vertices: Vec<Vertex>, reason: String },
    WrongEndpoints { index: usize, vertices: Vec<Vertex> },
    InteriorForbidden { index: usize, vertices: Vec<Vertex>, vertex: Vertex },
    TooShort { index: usize, vertices: Vec<Vertex>, len: usize, min_len: usize },
    NotEdgeDisjoint { first: usize, second: usize, edge: EdgeId, endpoints: (Vertex, Vertex) },
    SurvivingPath { path: Path },
    BoundExceeded { size: usize, bound: BoundValue },
    TooFewPaths { found: usize, needed: usize },
}

impl Violation {
    pub fn code(&self) -> ViolationCode {
        match self {
            Violation::NotAPath { .. } => ViolationCode::NotAPath,
            Violation::WrongEndpoints { .. } => ViolationCode::WrongEndpoints,
            Violation::InteriorForbidden { .. } => ViolationCode::InteriorForbidden,
            Violation::TooShort { .. } => ViolationCode::TooShort,
            Violation::NotEdgeDisjoint { .. } => ViolationCode::NotEdgeDisjoint,
            Violation::SurvivingPath { .. } => ViolationCode::SurvivingPath,
            Violation::BoundExceeded { .. } => ViolationCode::BoundExceeded,
            Violation::TooFewPaths { .. } => ViolationCode::TooFewPaths,
        }
    }
}

fn join(vs: &[Vertex]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("-")
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.code())?;
        match self {
            Violation::NotAPath { index, vertices, reason } => {
                write!(f, "path #{index} ({}) {reason}", join(vertices))
            }
            Violation::WrongEndpoints { index, vertices } => {
                write!(f, "path #{index} ({}) has inadmissible ends", join(vertices))
            }
            Violation::InteriorForbidden { index, vertices, vertex } => {
                write!(f, "path #{index} ({}) passes through forbidden vertex {vertex}", join(vertices))
            }
            Violation::TooShort { index, vertices, len, min_len } => {
                write!(f, "path #{index} ({}) has length {len} < {min_len}", join(vertices))
            }
            Violation::NotEdgeDisjoint { first, second, edge, endpoints } => {
                write!(f, "paths #{first} and #{second} share edge {edge} = {{{}, {}}}", endpoints.0, endpoints.1)
            }
            Violation::SurvivingPath { path } => write!(f, "qualifying path {path} avoids the edge set"),
            Violation::BoundExceeded { size, bound } => write!(f, "edge set has {size} edges, bound is {bound}"),
            Violation::TooFewPaths { found, needed } => write!(f, "{found} paths given, {needed} needed"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{0}")]
    Violation(Violation),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl From<Violation> for VerifyError {
    fn from(v: Violation) -> Self {
        VerifyError::Violation(v)
    }
}

/// Checks that `paths` holds at least `k` pairwise edge-disjoint qualifying
/// objects of `g`. Length windows on the spec are ignored; only the minimum
/// length is checked.
pub fn verify_packing(g: &Graph, spec: &PathSpec, k: usize, paths: &[Vec<Vertex>]) -> Result<(), Violation> {
    if paths.len() < k {
        return Err(Violation::TooFewPaths { found: paths.len(), needed: k });
    }
    let spec = spec.with_window(spec.min_len, None);
    let mut owner: BTreeMap<EdgeId, usize> = BTreeMap::new();
    let mut first_clash: Option<Violation> = None;
    for (index, vs) in paths.iter().enumerate() {
        let path = Path::from_vertices(g, vs.clone()).map_err(|e| Violation::NotAPath {
            index,
            vertices: vs.clone(),
            reason: e.to_string(),
        })?;
        match spec.qualifies(vs) {
            Ok(()) => {}
            Err(Disqualified::WrongEndpoints) => return Err(Violation::WrongEndpoints { index, vertices: vs.clone() }),
            Err(Disqualified::InteriorForbidden(vertex)) => {
                return Err(Violation::InteriorForbidden { index, vertices: vs.clone(), vertex })
            }
            Err(Disqualified::TooShort(len) | Disqualified::TooLong(len)) => {
                return Err(Violation::TooShort { index, vertices: vs.clone(), len, min_len: spec.min_len })
            }
        }
        for &e in path.edges() {
            if let Some(&first) = owner.get(&e) {
                if first_clash.is_none() {
                    let endpoints = g.endpoints(e).expect("edge of a valid path");
                    first_clash = Some(Violation::NotEdgeDisjoint { first, second: index, edge: e, endpoints });
                }
            } else {
                owner.insert(e, index);
            }
        }
    }
    match first_clash {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

/// Checks `|edges| <= bound` and that no qualifying object survives in
/// `g - edges`.
pub fn verify_hitting(
    g: &Graph,
    spec: &PathSpec,
    edges: &EdgeSet,
    bound: &BoundValue,
    cfg: &OracleConfig,
) -> Result<(), VerifyError> {
    if !bound.admits(edges.len()) {
        return Err(Violation::BoundExceeded { size: edges.len(), bound: bound.clone() }.into());
    }
    let spec = spec.with_window(spec.min_len, None);
    match find_long_path(&g.without_edges(edges), &spec, cfg)? {
        Some(path) => Err(Violation::SurvivingPath { path }.into()),
        None => Ok(()),
    }
}

pub fn verify_certificate(g: &Graph, cert: &Certificate, cfg: &OracleConfig) -> Result<(), VerifyError> {
    match &cert.body {
        CertificateBody::Packing(paths) => {
            let raw: Vec<Vec<Vertex>> = paths.iter().map(|p| p.vertices().to_vec()).collect();
            verify_packing(g, &cert.spec, cert.k, &raw).map_err(VerifyError::from)
        }
        CertificateBody::Hitting { edges, bound } => verify_hitting(g, &cert.spec, edges, bound, cfg),
    }
}

//! Instance text format and certificate documents.
//!
//! Instance grammar, one record per line, `#` starts a comment:
//!
//! ```text
//! n <count>            vertex count (optional; defaults to max index + 1)
//! e <u> <v>            undirected edge
//! A <v> ...            terminal set A
//! B <v> ...            terminal set B
//! S <v> ... | <v> ...  partition into parts
//! X <v>                hub vertex
//! ```
//!
//! Certificates are JSON objects with fields `type`, `kind`, `k`, `len`,
//! `paths`, `edges` and `bound`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{BoundTable, BoundValue};
use crate::certificate::{Certificate, CertificateBody};
use crate::certify::{verify_hitting, verify_packing, VerifyError, Violation};
use crate::graph::{EdgeSet, Graph, GraphError, Vertex, VertexSet};
use crate::oracle::OracleConfig;
use crate::spec::PathSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub a: Option<VertexSet>,
    pub b: Option<VertexSet>,
    pub s: Option<Vec<VertexSet>>,
    pub x: Option<Vertex>,
}

fn vertex(tok: &str, line: usize) -> Result<Vertex, ParseError> {
    tok.parse().map_err(|_| ParseError { line, message: format!("bad vertex `{tok}`") })
}

fn vertices<'a>(toks: impl Iterator<Item = &'a str>, line: usize) -> Result<VertexSet, ParseError> {
    let mut out = VertexSet::new();
    for t in toks {
        if !out.insert(vertex(t, line)?) {
            return Err(ParseError { line, message: format!("vertex {t} listed twice") });
        }
    }
    Ok(out)
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut n: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, Vertex, Vertex)> = Vec::new();
    let mut sets: Vec<(usize, Vertex)> = Vec::new();
    let mut inst = Instance { graph: Graph::new(0), a: None, b: None, s: None, x: None };

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        let mut toks = body.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        let err = |message: String| ParseError { line, message };
        let once = |present: bool| if present { Err(err(format!("duplicate `{tag}` record"))) } else { Ok(()) };
        match tag {
            "n" => {
                once(n.is_some())?;
                let t = toks.next().ok_or_else(|| err("`n` needs a count".into()))?;
                let c = t.parse().map_err(|_| err(format!("bad count `{t}`")))?;
                n = Some((c, line));
            }
            "e" => {
                let u = vertex(toks.next().ok_or_else(|| err("`e` needs two vertices".into()))?, line)?;
                let v = vertex(toks.next().ok_or_else(|| err("`e` needs two vertices".into()))?, line)?;
                edges.push((line, u, v));
            }
            "A" => {
                once(inst.a.is_some())?;
                let s = vertices(toks.by_ref(), line)?;
                sets.extend(s.iter().map(|&v| (line, v)));
                inst.a = Some(s);
            }
            "B" => {
                once(inst.b.is_some())?;
                let s = vertices(toks.by_ref(), line)?;
                sets.extend(s.iter().map(|&v| (line, v)));
                inst.b = Some(s);
            }
            "S" => {
                once(inst.s.is_some())?;
                let rest: Vec<&str> = toks.by_ref().collect();
                let mut parts = Vec::new();
                for chunk in rest.split(|t| *t == "|") {
                    let part = vertices(chunk.iter().copied(), line)?;
                    if part.is_empty() {
                        return Err(err("empty part in `S`".into()));
                    }
                    if let Some(v) = parts.iter().flat_map(|p: &VertexSet| p.intersection(&part)).next() {
                        return Err(err(format!("vertex {v} in two parts")));
                    }
                    sets.extend(part.iter().map(|&v| (line, v)));
                    parts.push(part);
                }
                inst.s = Some(parts);
            }
            "X" => {
                once(inst.x.is_some())?;
                let v = vertex(toks.next().ok_or_else(|| err("`X` needs a vertex".into()))?, line)?;
                sets.push((line, v));
                inst.x = Some(v);
            }
            other => return Err(err(format!("unknown record `{other}`"))),
        }
        if let Some(extra) = toks.next() {
            return Err(err(format!("unexpected `{extra}`")));
        }
    }

    let count = match n {
        Some((c, _)) => c,
        None => edges
            .iter()
            .flat_map(|&(_, u, v)| [u, v])
            .chain(sets.iter().map(|&(_, v)| v))
            .max()
            .map_or(0, |m| m as usize + 1),
    };
    let mut g = Graph::new(count);
    for (line, u, v) in edges {
        g.add_edge(u, v).map_err(|e| ParseError { line, message: e.to_string() })?;
    }
    if let Some(&(line, v)) = sets.iter().find(|&&(_, v)| v as usize >= count) {
        return Err(ParseError { line, message: GraphError::VertexOutOfRange(v, count).to_string() });
    }
    inst.graph = g;
    Ok(inst)
}

fn join(set: &VertexSet) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        writeln!(out, "n {}", self.graph.vertex_count())?;
        for (_, u, v) in self.graph.edges() {
            writeln!(out, "e {u} {v}")?;
        }
        if let Some(a) = &self.a {
            writeln!(out, "A {}", join(a))?;
        }
        if let Some(b) = &self.b {
            writeln!(out, "B {}", join(b))?;
        }
        if let Some(s) = &self.s {
            writeln!(out, "S {}", s.iter().map(join).collect::<Vec<_>>().join(" | "))?;
        }
        if let Some(x) = self.x {
            writeln!(out, "X {x}")?;
        }
        f.write_str(&out)
    }
}

/// Problem kinds selectable on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Ab,
    AbGeneral,
    A,
    AStar,
    AStarB,
    AStarBStar,
    S,
    CyclesAt,
}

impl Kind {
    pub const ALL: [Kind; 8] =
        [Kind::Ab, Kind::AbGeneral, Kind::A, Kind::AStar, Kind::AStarB, Kind::AStarBStar, Kind::S, Kind::CyclesAt];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Ab => "ab",
            Kind::AbGeneral => "ab-general",
            Kind::A => "a",
            Kind::AStar => "astar",
            Kind::AStarB => "astar-b",
            Kind::AStarBStar => "astar-bstar",
            Kind::S => "s",
            Kind::CyclesAt => "cycles-at",
        }
    }

    /// Whether A and B must be disjoint.
    pub fn needs_disjoint(self) -> bool {
        matches!(self, Kind::Ab | Kind::AStarB | Kind::AStarBStar)
    }

    pub fn uses_b(self) -> bool {
        matches!(self, Kind::Ab | Kind::AbGeneral | Kind::AStarB | Kind::AStarBStar)
    }

    /// Hitting-set size bound claimed by the solver for this kind.
    pub fn bound(self, table: &mut BoundTable, k: usize, len: usize) -> BoundValue {
        let (k, len) = (k as u64, len as u64);
        match self {
            Kind::Ab => table.f(k, len),
            Kind::AbGeneral => table.f(k, len).mul_u64(2).add(&table.g(k, len)),
            Kind::A | Kind::CyclesAt => table.g(k, len),
            Kind::AStar => table.g(k, len).add_u64((k - 1) * (2 * len - 2)),
            Kind::AStarB => table.f1(k, len),
            Kind::AStarBStar => table.f2(k, len),
            Kind::S => table.g(k, len + 2),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Kind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| format!("unknown kind `{s}`"))
    }
}

impl Instance {
    fn need<'a, T>(&self, v: &'a Option<T>, tag: &str, kind: Kind) -> Result<&'a T, String> {
        v.as_ref().ok_or_else(|| format!("kind `{kind}` needs an `{tag}` record"))
    }

    /// The spec that certificates of `kind` are checked against.
    pub fn spec(&self, kind: Kind, len: usize) -> Result<PathSpec, String> {
        let spec = match kind {
            Kind::Ab | Kind::AbGeneral => {
                PathSpec::ab(self.need(&self.a, "A", kind)?.clone(), self.need(&self.b, "B", kind)?.clone(), len)
            }
            Kind::A => PathSpec::a_path(self.need(&self.a, "A", kind)?.clone(), len),
            Kind::AStar => {
                let a = self.need(&self.a, "A", kind)?;
                PathSpec::astar_bstar(a.clone(), a.clone(), len)
            }
            Kind::AStarB => {
                PathSpec::astar_b(self.need(&self.a, "A", kind)?.clone(), self.need(&self.b, "B", kind)?.clone(), len)
            }
            Kind::AStarBStar => PathSpec::astar_bstar(
                self.need(&self.a, "A", kind)?.clone(),
                self.need(&self.b, "B", kind)?.clone(),
                len,
            ),
            Kind::S => PathSpec::s_path(self.need(&self.s, "S", kind)?.clone(), len),
            Kind::CyclesAt => PathSpec::cycle_through(*self.need(&self.x, "X", kind)?, len),
        };
        if kind.needs_disjoint() {
            if let (Some(a), Some(b)) = (&self.a, &self.b) {
                if let Some(v) = a.intersection(b).next() {
                    return Err(format!("kind `{kind}` needs disjoint A and B; both contain {v}"));
                }
            }
        }
        Ok(spec)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    #[serde(rename = "type")]
    pub kind_of: String,
    pub kind: String,
    pub k: usize,
    pub len: usize,
    pub paths: Vec<Vec<Vertex>>,
    pub edges: Vec<[Vertex; 2]>,
    pub bound: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocError {
    #[error("certificate type must be `packing` or `hitting`, got `{0}`")]
    Type(String),
    #[error("{0}")]
    Kind(String),
    #[error("hitting certificate needs a `bound`")]
    MissingBound,
    #[error("bad bound: {0}")]
    Bound(String),
    #[error("edge {{{0}, {1}}} is not in the graph")]
    UnknownEdge(Vertex, Vertex),
    #[error("malformed certificate: {0}")]
    Json(String),
}

impl CertificateDoc {
    pub fn new(g: &Graph, kind: Kind, len: usize, cert: &Certificate) -> Self {
        let mut doc = CertificateDoc {
            kind_of: String::new(),
            kind: kind.name().to_string(),
            k: cert.k,
            len,
            paths: Vec::new(),
            edges: Vec::new(),
            bound: None,
        };
        match &cert.body {
            CertificateBody::Packing(ps) => {
                doc.kind_of = "packing".into();
                doc.paths = ps.iter().map(|p| p.vertices().to_vec()).collect();
            }
            CertificateBody::Hitting { edges, bound } => {
                doc.kind_of = "hitting".into();
                doc.edges = edges.iter().filter_map(|&e| g.endpoints(e)).map(|(u, v)| [u, v]).collect();
                doc.bound = Some(bound.to_string());
            }
        }
        doc
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, DocError> {
        serde_json::from_str(text).map_err(|e| DocError::Json(e.to_string()))
    }

    pub fn kind(&self) -> Result<Kind, DocError> {
        self.kind.parse().map_err(DocError::Kind)
    }

    pub fn is_packing(&self) -> Result<bool, DocError> {
        match self.kind_of.as_str() {
            "packing" => Ok(true),
            "hitting" => Ok(false),
            other => Err(DocError::Type(other.to_string())),
        }
    }

    pub fn edge_ids(&self, g: &Graph) -> Result<EdgeSet, DocError> {
        self.edges.iter().map(|&[u, v]| g.edge_between(u, v).ok_or(DocError::UnknownEdge(u, v))).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocVerifyError {
    #[error(transparent)]
    Doc(#[from] DocError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

/// Checks a certificate document against an instance. A hitting set must fit
/// both the bound written in the document and the bound claimed for its kind.
pub fn verify_doc(inst: &Instance, doc: &CertificateDoc, cfg: &OracleConfig) -> Result<(), DocVerifyError> {
    let kind = doc.kind()?;
    let spec = inst.spec(kind, doc.len).map_err(DocError::Kind)?;
    if doc.is_packing()? {
        verify_packing(&inst.graph, &spec, doc.k, &doc.paths).map_err(VerifyError::from)?;
        return Ok(());
    }
    let written: BoundValue = doc.bound.as_deref().ok_or(DocError::MissingBound)?.parse().map_err(DocError::Bound)?;
    let claimed = kind.bound(&mut BoundTable::new(), doc.k, doc.len);
    let edges = doc.edge_ids(&inst.graph)?;
    if !claimed.admits(edges.len()) {
        return Err(VerifyError::from(Violation::BoundExceeded { size: edges.len(), bound: claimed }).into());
    }
    verify_hitting(&inst.graph, &spec, &edges, &written, cfg)?;
    Ok(())
}

//! Constructive packing-or-covering solvers. Every public solver returns a
//! [`Certificate`]; internal recursion works on bare [`Outcome`]s.

pub(crate) mod ab;
mod apaths;
pub mod exchange;
mod star;

use thiserror::Error;

use crate::bounds::{BoundTable, BoundValue};
use crate::certificate::Certificate;
use crate::gadget::GadgetError;
use crate::graph::{EdgeSet, Graph, GraphError, Path, VertexSet};
use crate::menger::MengerError;
use crate::oracle::{find_long_path, MinimalizeError, OracleConfig, OracleError};
use crate::spec::PathSpec;

pub use exchange::{exchange_augment, potential, ExchangeError, ExchangeOutcome, ExchangeTrace, Potential};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("long cycle {0} avoids the hub")]
    HubPrecondition(Path),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<MengerError> for SolveError {
    fn from(e: MengerError) -> Self {
        match e {
            MengerError::Graph(g) => SolveError::Graph(g),
            other => SolveError::InvalidInput(other.to_string()),
        }
    }
}

impl From<GadgetError> for SolveError {
    fn from(e: GadgetError) -> Self {
        match e {
            GadgetError::Graph(g) => SolveError::Graph(g),
            other => SolveError::InvalidInput(other.to_string()),
        }
    }
}

impl From<MinimalizeError> for SolveError {
    fn from(e: MinimalizeError) -> Self {
        match e {
            MinimalizeError::Oracle(o) => SolveError::Oracle(o),
            MinimalizeError::Surviving(p) => SolveError::Invariant(format!("recursive hitting set misses path {p}")),
        }
    }
}

impl From<ExchangeError> for SolveError {
    fn from(e: ExchangeError) -> Self {
        SolveError::Invariant(e.to_string())
    }
}

/// Packing or hitting set, without the spec and bound attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Packing(Vec<Path>),
    Hitting(EdgeSet),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    /// Cap for the existence searches run inside the recursion. Gadget graphs
    /// are larger than their inputs, so this is looser than the standalone cap.
    pub oracle: OracleConfig,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { oracle: OracleConfig { max_vertices: 256, max_edges: 512, ..OracleConfig::default() } }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub solver_calls: usize,
    pub max_depth: usize,
    pub strips: usize,
    pub concentrations: usize,
    pub exchanges: Vec<ExchangeTrace>,
}

/// Solver state: configuration, the bound table and diagnostics.
///
/// Nested solver calls must strictly decrease `(rank, k)` lexicographically,
/// where the rank of a solver depends on its kind and length. This is checked
/// on every call.
#[derive(Debug, Default)]
pub struct Engine {
    pub config: EngineConfig,
    pub bounds: BoundTable,
    pub stats: EngineStats,
    frames: Vec<(u64, usize)>,
}

pub(crate) fn rank_ab(len: usize) -> u64 {
    3 * len as u64
}

pub(crate) fn rank_a_paths(len: usize) -> u64 {
    3 * len as u64 + 4
}

pub(crate) fn rank_astar_b(len: usize) -> u64 {
    3 * len as u64 + 4
}

pub(crate) fn rank_astar_bstar(len: usize) -> u64 {
    3 * len as u64 + 5
}

pub(crate) fn rank_astar_paths(len: usize) -> u64 {
    3 * len as u64 + 6
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_config(config: EngineConfig) -> Self {
        Engine { config, ..Self::default() }
    }

    pub(crate) fn guarded<F>(&mut self, rank: u64, k: usize, body: F) -> Result<Outcome, SolveError>
    where
        F: FnOnce(&mut Self) -> Result<Outcome, SolveError>,
    {
        if let Some(&top) = self.frames.last() {
            if (rank, k) >= top {
                return Err(SolveError::Invariant(format!(
                    "recursion measure did not decrease: {:?} -> {:?}",
                    top,
                    (rank, k)
                )));
            }
        }
        self.frames.push((rank, k));
        self.stats.solver_calls += 1;
        self.stats.max_depth = self.stats.max_depth.max(self.frames.len());
        let out = body(self);
        self.frames.pop();
        out
    }

    pub(crate) fn find(&self, g: &Graph, spec: &PathSpec) -> Result<Option<Path>, SolveError> {
        Ok(find_long_path(g, spec, &self.config.oracle)?)
    }

    /// k = 1: a single qualifying object, or the empty hitting set.
    pub(crate) fn single(&self, g: &Graph, spec: &PathSpec) -> Result<Outcome, SolveError> {
        Ok(match self.find(g, spec)? {
            Some(p) => Outcome::Packing(vec![p]),
            None => Outcome::Hitting(EdgeSet::new()),
        })
    }

    /// Removes one qualifying object with length in the window, if any, and
    /// solves the rest at `k - 1`; otherwise runs `core` with the guarantee
    /// that no object in the window exists.
    pub(crate) fn strip<R, C>(
        &mut self,
        g: &Graph,
        window: &PathSpec,
        k: usize,
        recurse: R,
        core: C,
    ) -> Result<Outcome, SolveError>
    where
        R: FnOnce(&mut Self, &Graph, usize) -> Result<Outcome, SolveError>,
        C: FnOnce(&mut Self, &Graph) -> Result<Outcome, SolveError>,
    {
        if k >= 2 && !window.window_is_empty() {
            if let Some(p) = self.find(g, window)? {
                self.stats.strips += 1;
                let rest = g.without_edges(p.edges());
                return Ok(match recurse(self, &rest, k - 1)? {
                    Outcome::Packing(mut ps) => {
                        ps.insert(0, p);
                        Outcome::Packing(ps)
                    }
                    Outcome::Hitting(mut x) => {
                        x.extend(p.edges().iter().copied());
                        Outcome::Hitting(x)
                    }
                });
            }
        }
        core(self, g)
    }

    pub(crate) fn certificate(spec: PathSpec, k: usize, out: Outcome, bound: BoundValue) -> Certificate {
        match out {
            Outcome::Packing(mut ps) => {
                ps.truncate(k);
                Certificate::packing(spec, k, ps)
            }
            Outcome::Hitting(x) => Certificate::hitting(spec, k, x, bound),
        }
    }

    /// `k` edge-disjoint A-B paths of length at least `len`, or a hitting set
    /// of size at most `f(k, len)`. Requires disjoint `a` and `b`.
    pub fn solve_ab(
        &mut self,
        g: &Graph,
        a: &VertexSet,
        b: &VertexSet,
        k: usize,
        len: usize,
    ) -> Result<Certificate, SolveError> {
        check_params(k, len)?;
        let spec = PathSpec::ab(a.clone(), b.clone(), len);
        validate(g, &spec)?;
        let out = self.ab(g, a, b, k, len)?;
        let bound = self.bounds.f(k as u64, len as u64);
        Ok(Self::certificate(spec, k, out, bound))
    }

    /// A-paths; hitting sets are bounded by `g(k, len)`.
    pub fn solve_a_paths(&mut self, g: &Graph, a: &VertexSet, k: usize, len: usize) -> Result<Certificate, SolveError> {
        check_params(k, len)?;
        let spec = PathSpec::a_path(a.clone(), len);
        validate(g, &spec)?;
        let out = self.a_paths(g, a, k, len)?;
        let bound = self.bounds.g(k as u64, len as u64);
        Ok(Self::certificate(spec, k, out, bound))
    }

    /// A*-B-paths; hitting sets are bounded by `f1(k, len)`.
    pub fn solve_astar_b(
        &mut self,
        g: &Graph,
        a: &VertexSet,
        b: &VertexSet,
        k: usize,
        len: usize,
    ) -> Result<Certificate, SolveError> {
        check_params(k, len)?;
        let spec = PathSpec::astar_b(a.clone(), b.clone(), len);
        validate(g, &spec)?;
        let out = self.astar_b(g, a, b, k, len)?;
        let bound = self.bounds.f1(k as u64, len as u64);
        Ok(Self::certificate(spec, k, out, bound))
    }

    /// A*-B*-paths; hitting sets are bounded by `f2(k, len)`.
    pub fn solve_astar_bstar(
        &mut self,
        g: &Graph,
        a: &VertexSet,
        b: &VertexSet,
        k: usize,
        len: usize,
    ) -> Result<Certificate, SolveError> {
        check_params(k, len)?;
        let spec = PathSpec::astar_bstar(a.clone(), b.clone(), len);
        validate(g, &spec)?;
        let out = self.astar_bstar(g, a, b, k, len)?;
        let bound = self.bounds.f2(k as u64, len as u64);
        Ok(Self::certificate(spec, k, out, bound))
    }
}

pub fn check_params(k: usize, len: usize) -> Result<(), SolveError> {
    if k == 0 {
        return Err(SolveError::InvalidInput("k must be at least 1".into()));
    }
    if len == 0 {
        return Err(SolveError::InvalidInput("length must be at least 1".into()));
    }
    Ok(())
}

pub fn validate(g: &Graph, spec: &PathSpec) -> Result<(), SolveError> {
    spec.validate(g).map_err(|e| SolveError::InvalidInput(e.to_string()))
}

/// Convenience wrappers running a fresh [`Engine`].
pub fn solve_ab(g: &Graph, a: &VertexSet, b: &VertexSet, k: usize, len: usize) -> Result<Certificate, SolveError> {
    Engine::new().solve_ab(g, a, b, k, len)
}

pub fn solve_a_paths(g: &Graph, a: &VertexSet, k: usize, len: usize) -> Result<Certificate, SolveError> {
    Engine::new().solve_a_paths(g, a, k, len)
}

pub fn solve_astar_b(g: &Graph, a: &VertexSet, b: &VertexSet, k: usize, len: usize) -> Result<Certificate, SolveError> {
    Engine::new().solve_astar_b(g, a, b, k, len)
}

pub fn solve_astar_bstar(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    k: usize,
    len: usize,
) -> Result<Certificate, SolveError> {
    Engine::new().solve_astar_bstar(g, a, b, k, len)
}

//! Wrappers that solve related path families through the engine and translate
//! certificates back: overlapping A-B terminals, S-paths, A*-paths and long
//! cycles through a fixed hub.

use crate::bounds::BoundValue;
use crate::certificate::Certificate;
use crate::engine::ab::orient;
use crate::engine::{check_params, rank_astar_paths, validate, Engine, Outcome, SolveError};
use crate::gadget::{split_hub, subdivide_and_contract_with, CrossEdges};
use crate::graph::{EdgeSet, Graph, Path, Vertex, VertexSet};
use crate::oracle::{find_long_path, OracleConfig, OracleError};
use crate::spec::PathSpec;

impl Engine {
    /// A-B paths where A and B may overlap. Hitting sets are bounded by
    /// `2 f(k, len) + g(k, len)`.
    pub fn solve_ab_general(
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
        let bound = self.ab_general_bound(k, len);
        let b_only: VertexSet = b.difference(a).copied().collect();
        let a_only: VertexSet = a.difference(b).copied().collect();
        let both: VertexSet = a.intersection(b).copied().collect();
        let mut union = EdgeSet::new();
        for (s, t) in [(a, &b_only), (b, &a_only)] {
            match self.ab(g, s, t, k, len)? {
                Outcome::Packing(ps) => {
                    let ps = ps.into_iter().map(|p| orient(p, a, b)).collect();
                    return Ok(Engine::certificate(spec, k, Outcome::Packing(ps), bound));
                }
                Outcome::Hitting(x) => union.extend(x),
            }
        }
        // Paths between two shared terminals must avoid every other terminal.
        let others: VertexSet = a_only.union(&b_only).copied().collect();
        match self.a_paths(&g.without_vertices(&others), &both, k, len)? {
            Outcome::Packing(ps) => return Ok(Engine::certificate(spec, k, Outcome::Packing(ps), bound)),
            Outcome::Hitting(x) => union.extend(x),
        }
        Ok(Engine::certificate(spec, k, Outcome::Hitting(union), bound))
    }

    pub fn ab_general_bound(&mut self, k: usize, len: usize) -> BoundValue {
        let f = self.bounds.f(k as u64, len as u64);
        let g = self.bounds.g(k as u64, len as u64);
        f.mul_u64(2).add(&g)
    }

    /// Paths joining two different parts of `parts`, interior avoiding all
    /// parts. Hitting sets are bounded by `g(k, len + 2)`.
    pub fn solve_s_paths(
        &mut self,
        g: &Graph,
        parts: &[VertexSet],
        k: usize,
        len: usize,
    ) -> Result<Certificate, SolveError> {
        check_params(k, len)?;
        let spec = PathSpec::s_path(parts.to_vec(), len);
        validate(g, &spec)?;
        let bound = self.bounds.g(k as u64, len as u64 + 2);
        // A direct edge between two parts is an S-path of length 1; keep it
        // (subdivided twice) when such paths count.
        let cross = if len == 1 { CrossEdges::Subdivide } else { CrossEdges::Remove };
        let (derived, map) = subdivide_and_contract_with(g, parts, cross)?;
        let out = match self.a_paths(&derived, &map.terminals, k, len + 2)? {
            Outcome::Packing(ps) => {
                let paths = ps.iter().map(|p| map.translate_path(g, p)).collect::<Result<Vec<_>, _>>()?;
                Outcome::Packing(paths)
            }
            Outcome::Hitting(x) => Outcome::Hitting(map.translate_edges(&x)),
        };
        Ok(Engine::certificate(spec, k, out, bound))
    }

    /// Paths with both ends in A and unrestricted interior. Hitting sets are
    /// bounded by `g(k, len) + (k - 1)(2 len - 2)`.
    pub fn solve_astar_paths(
        &mut self,
        g: &Graph,
        a: &VertexSet,
        k: usize,
        len: usize,
    ) -> Result<Certificate, SolveError> {
        check_params(k, len)?;
        let spec = PathSpec::astar_bstar(a.clone(), a.clone(), len);
        validate(g, &spec)?;
        let out = self.astar_paths(g, a, k, len)?;
        let bound = self.astar_paths_bound(k, len);
        Ok(Engine::certificate(spec, k, out, bound))
    }

    pub fn astar_paths_bound(&mut self, k: usize, len: usize) -> BoundValue {
        self.bounds.g(k as u64, len as u64).add_u64((k as u64 - 1) * (2 * len as u64 - 2))
    }

    fn astar_paths(&mut self, g: &Graph, a: &VertexSet, k: usize, len: usize) -> Result<Outcome, SolveError> {
        self.guarded(rank_astar_paths(len), k, |eng| {
            let spec = PathSpec::astar_bstar(a.clone(), a.clone(), len);
            if k == 1 {
                return eng.single(g, &spec);
            }
            let window = spec.with_window(len, Some(2 * len - 2));
            eng.strip(g, &window, k, |eng, h, k2| eng.astar_paths(h, a, k2, len), |eng, h| eng.a_paths(h, a, k, len))
        })
    }

    /// Long cycles through `hub`. With `check_hub`, first confirms via the
    /// oracle that no long cycle avoids the hub. Hitting sets are bounded by
    /// `g(k, len)`.
    pub fn solve_cycles_at(
        &mut self,
        g: &Graph,
        hub: Vertex,
        k: usize,
        len: usize,
        check_hub: bool,
    ) -> Result<Certificate, SolveError> {
        check_params(k, len)?;
        let spec = PathSpec::cycle_through(hub, len);
        validate(g, &spec)?;
        if check_hub {
            if let Some(c) = cycle_avoiding(g, hub, len, &self.config.oracle)? {
                return Err(SolveError::HubPrecondition(c));
            }
        }
        let bound = self.bounds.g(k as u64, len as u64);
        let (derived, map) = split_hub(g, hub)?;
        let out = match self.a_paths(&derived, &map.terminals, k, len)? {
            Outcome::Packing(ps) => {
                let cycles = ps.iter().map(|p| map.translate_path(g, p)).collect::<Result<Vec<_>, _>>()?;
                Outcome::Packing(cycles.into_iter().map(|c| rotate_to(c, hub, g)).collect::<Result<_, _>>()?)
            }
            Outcome::Hitting(x) => Outcome::Hitting(map.translate_edges(&x)),
        };
        Ok(Engine::certificate(spec, k, out, bound))
    }
}

/// Starts a closed cycle at `hub`.
fn rotate_to(c: Path, hub: Vertex, g: &Graph) -> Result<Path, SolveError> {
    let vs = c.vertices();
    if vs[0] == hub {
        return Ok(c);
    }
    let body = &vs[..vs.len() - 1];
    let i = body
        .iter()
        .position(|&v| v == hub)
        .ok_or_else(|| SolveError::Invariant(format!("cycle {c} misses hub {hub}")))?;
    let mut out: Vec<Vertex> = body[i..].iter().chain(&body[..i]).copied().collect();
    out.push(hub);
    Ok(Path::from_vertices(g, out)?)
}

/// A cycle of length at least `len` that avoids `hub`, if any.
pub fn cycle_avoiding(g: &Graph, hub: Vertex, len: usize, cfg: &OracleConfig) -> Result<Option<Path>, OracleError> {
    let rest = g.without_vertices(&[hub]);
    for v in 0..g.vertex_count() as Vertex {
        if v == hub || rest.degree(v) < 2 {
            continue;
        }
        if let Some(c) = find_long_path(&rest, &PathSpec::cycle_through(v, len), cfg)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

pub fn solve_ab_general(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    k: usize,
    len: usize,
) -> Result<Certificate, SolveError> {
    Engine::new().solve_ab_general(g, a, b, k, len)
}

pub fn solve_s_paths(g: &Graph, parts: &[VertexSet], k: usize, len: usize) -> Result<Certificate, SolveError> {
    Engine::new().solve_s_paths(g, parts, k, len)
}

pub fn solve_astar_paths(g: &Graph, a: &VertexSet, k: usize, len: usize) -> Result<Certificate, SolveError> {
    Engine::new().solve_astar_paths(g, a, k, len)
}

pub fn solve_cycles_at(
    g: &Graph,
    hub: Vertex,
    k: usize,
    len: usize,
    check_hub: bool,
) -> Result<Certificate, SolveError> {
    Engine::new().solve_cycles_at(g, hub, k, len, check_hub)
}

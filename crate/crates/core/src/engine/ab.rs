//! Long A-B paths: base case, the induction on k through A*-B*-paths of
//! the remaining graph, and endpoint concentration.

use std::collections::BTreeMap;

use super::exchange::exchange_augment;
use super::{rank_ab, Engine, Outcome, SolveError};
use crate::graph::{EdgeId, EdgeSet, Graph, Path, Vertex, VertexSet};
use crate::menger::base_long_ab;
use crate::oracle::greedy_maximal_matching;
use crate::spec::PathSpec;

/// Result of endpoint concentration on an oriented family (first vertex is the
/// A-side end).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Concentration {
    /// Indices of `k` paths with pairwise disjoint endpoint pairs.
    Matched(Vec<usize>),
    /// A hub and the indices of the paths kept at it, in ascending order.
    Hub { hub: Vertex, kept: Vec<usize> },
}

/// Greedy matching on endpoint pairs; if it has fewer than `k` pairs, picks
/// the matched vertex with the most incident paths and keeps `keep` of them.
pub fn endpoint_concentration(family: &[Path], k: usize, keep: usize) -> Result<Concentration, SolveError> {
    let pairs: Vec<(Vertex, Vertex)> = family.iter().map(|p| (p.first(), p.last())).collect();
    let matching = greedy_maximal_matching(&pairs);
    if matching.len() >= k {
        return Ok(Concentration::Matched(matching[..k].to_vec()));
    }
    let mut cover: Vec<Vertex> = matching.iter().flat_map(|&i| [pairs[i].0, pairs[i].1]).collect();
    cover.sort_unstable();
    cover.dedup();
    let incident = |v: Vertex| -> Vec<usize> {
        pairs.iter().enumerate().filter(|(_, &(s, t))| s == v || t == v).map(|(i, _)| i).collect()
    };
    let hub = cover
        .iter()
        .copied()
        .max_by_key(|&v| (incident(v).len(), std::cmp::Reverse(v)))
        .ok_or_else(|| SolveError::Invariant("endpoint concentration on an empty family".into()))?;
    let mut kept = incident(hub);
    if kept.len() < keep {
        return Err(SolveError::Invariant(format!("hub {hub} carries {} paths, fewer than {keep}", kept.len())));
    }
    kept.truncate(keep);
    Ok(Concentration::Hub { hub, kept })
}

/// Lowest-id edge from `v` into `side`.
fn attachment(g: &Graph, v: Vertex, side: &VertexSet) -> Result<(EdgeId, Vertex), SolveError> {
    g.incident(v)
        .iter()
        .filter(|(w, _)| side.contains(w))
        .map(|&(w, e)| (e, w))
        .min()
        .ok_or_else(|| SolveError::Invariant(format!("vertex {v} has no attachment edge")))
}

/// Extends a family path (A-side end first) by one edge into A and one into B.
fn extend(g: &Graph, q: &Path, a: &VertexSet, b: &VertexSet) -> Result<Path, SolveError> {
    let (_, x) = attachment(g, q.first(), a)?;
    let (_, y) = attachment(g, q.last(), b)?;
    let mut vs = Vec::with_capacity(q.vertices().len() + 2);
    vs.push(x);
    vs.extend_from_slice(q.vertices());
    vs.push(y);
    Ok(Path::from_vertices(g, vs)?)
}

/// Puts the end in `a_side` first; when both ends qualify the smaller id leads.
pub(crate) fn orient(p: Path, a_side: &VertexSet, b_side: &VertexSet) -> Path {
    let (s, t) = (p.first(), p.last());
    let forward = a_side.contains(&s) && b_side.contains(&t);
    let backward = a_side.contains(&t) && b_side.contains(&s);
    if (forward && backward && t < s) || (!forward && backward) {
        p.reversed()
    } else {
        p
    }
}

impl Engine {
    pub(crate) fn ab(
        &mut self,
        g: &Graph,
        a: &VertexSet,
        b: &VertexSet,
        k: usize,
        len: usize,
    ) -> Result<Outcome, SolveError> {
        if let Some(&v) = a.intersection(b).next() {
            return Err(SolveError::InvalidInput(format!("terminal sets share vertex {v}")));
        }
        self.guarded(rank_ab(len), k, |eng| eng.ab_body(g, a, b, k, len))
    }

    fn ab_body(
        &mut self,
        g: &Graph,
        a: &VertexSet,
        b: &VertexSet,
        k: usize,
        len: usize,
    ) -> Result<Outcome, SolveError> {
        if a.is_empty() || b.is_empty() {
            return Ok(Outcome::Hitting(EdgeSet::new()));
        }
        if len <= 2 {
            let cert = base_long_ab(g, a, b, k, len)?;
            return Ok(match cert.body {
                crate::certificate::CertificateBody::Packing(ps) => Outcome::Packing(ps),
                crate::certificate::CertificateBody::Hitting { edges, .. } => Outcome::Hitting(edges),
            });
        }
        let spec = PathSpec::ab(a.clone(), b.clone(), len);
        if k == 1 {
            return self.single(g, &spec);
        }
        let window = spec.with_window(len, Some(2 * len + 3));
        self.strip(g, &window, k, |eng, h, k2| eng.ab(h, a, b, k2, len), |eng, h| eng.ab_core(h, a, b, k, len))
    }

    fn ab_core(
        &mut self,
        g: &Graph,
        a: &VertexSet,
        b: &VertexSet,
        k: usize,
        len: usize,
    ) -> Result<Outcome, SolveError> {
        let ends: VertexSet = a.union(b).copied().collect();
        let inner: Vec<EdgeId> =
            g.edges().filter(|(_, u, v)| ends.contains(u) && ends.contains(v)).map(|(e, _, _)| e).collect();
        let g1 = g.without_edges(&inner);
        let a1 = g1.neighborhood(a);
        let b1 = g1.neighborhood(b);
        if a1.is_empty() || b1.is_empty() {
            return Ok(Outcome::Hitting(EdgeSet::new()));
        }
        let h = g1.without_vertices(&ends);
        let ell = len - 1;
        let keep = (2 * ell + 5).saturating_mul(k - 1);
        let k_inner = (2 * k).saturating_mul(keep);
        let family = match self.astar_bstar(&h, &a1, &b1, k_inner, len - 2)? {
            Outcome::Hitting(x) => return Ok(Outcome::Hitting(x)),
            Outcome::Packing(ps) => ps,
        };
        let family: Vec<Path> = family.into_iter().take(k_inner).map(|p| orient(p, &a1, &b1)).collect();
        self.stats.concentrations += 1;
        let (hub, kept) = match endpoint_concentration(&family, k, keep)? {
            Concentration::Matched(idx) => {
                let paths = idx.iter().map(|&i| extend(&g1, &family[i], a, b)).collect::<Result<Vec<_>, _>>()?;
                return Ok(Outcome::Packing(paths));
            }
            Concentration::Hub { hub, kept } => (hub, kept),
        };

        let mut attach: BTreeMap<usize, (EdgeId, EdgeId)> = BTreeMap::new();
        let mut x1 = EdgeSet::new();
        for &i in &kept {
            let (ea, _) = attachment(&g1, family[i].first(), a)?;
            let (eb, _) = attachment(&g1, family[i].last(), b)?;
            x1.insert(ea);
            x1.insert(eb);
            attach.insert(i, (ea, eb));
        }
        let g2 = g1.without_edges(&x1);
        match self.ab(&g2, a, b, k - 1, len)? {
            Outcome::Hitting(mut x) => {
                x.extend(x1);
                Ok(Outcome::Hitting(x))
            }
            Outcome::Packing(mut ps) => {
                ps.truncate(k - 1);
                let from_hub: Vec<Path> = kept
                    .iter()
                    .map(|&i| if family[i].first() == hub { family[i].clone() } else { family[i].reversed() })
                    .collect();
                let spec = PathSpec::ab(a.clone(), b.clone(), len);
                let res = exchange_augment(&g2, &spec, ps, &from_hub, hub)?;
                self.stats.exchanges.push(res.trace.clone());
                let mut paths = res.paths;
                paths.push(extend(&g1, &family[kept[res.witness]], a, b)?);
                Ok(Outcome::Packing(paths))
            }
        }
    }
}

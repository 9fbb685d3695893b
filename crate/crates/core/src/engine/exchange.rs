//! Local search that reroutes a family of edge-disjoint A-B paths along the
//! paths of a hub family until some hub path is edge-disjoint from all of them.
//!
//! Potential: `phi1` counts, over every pair (P, Q), the maximal runs of
//! consecutive Q-edges along P; `phi2` sums, over every Q, the position (from
//! the hub) of its first edge used by any P. Every accepted move strictly
//! decreases `(phi1, phi2)` lexicographically.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::certify::verify_packing;
use crate::graph::{EdgeId, Graph, Path, Vertex};
use crate::spec::PathSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Potential {
    pub phi1: usize,
    pub phi2: usize,
}

impl Potential {
    pub fn sum(&self) -> usize {
        self.phi1 + self.phi2
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExchangeTrace {
    /// Potential before the first move and after every move.
    pub potentials: Vec<Potential>,
    /// Number of moves whose result was re-verified as a valid packing.
    pub verified_steps: usize,
}

impl ExchangeTrace {
    pub fn iterations(&self) -> usize {
        self.potentials.len().saturating_sub(1)
    }

    pub fn strictly_decreasing(&self) -> bool {
        self.potentials.windows(2).all(|w| w[1] < w[0])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeOutcome {
    pub paths: Vec<Path>,
    /// Index into the hub family of a path edge-disjoint from `paths`.
    pub witness: usize,
    pub trace: ExchangeTrace,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExchangeError {
    #[error("exchange needs a non-empty hub family")]
    EmptyFamily,
    #[error("exchange precondition: {0}")]
    Precondition(String),
    #[error("exchange stuck at potential ({}, {}) with no improving move", .0.phi1, .0.phi2)]
    Stuck(Potential),
    #[error("exchange exceeded {0} iterations")]
    IterationCap(usize),
    #[error("exchange produced an invalid packing: {0}")]
    Invalid(String),
}

fn runs(p: &Path, q_edges: &BTreeSet<EdgeId>) -> usize {
    let mut count = 0;
    let mut inside = false;
    for e in p.edges() {
        let now = q_edges.contains(e);
        if now && !inside {
            count += 1;
        }
        inside = now;
    }
    count
}

pub fn potential(paths: &[Path], family: &[Path]) -> Potential {
    let used: BTreeSet<EdgeId> = paths.iter().flat_map(|p| p.edges().iter().copied()).collect();
    let mut phi1 = 0;
    let mut phi2 = 0;
    for q in family {
        let q_edges = q.edge_set();
        phi1 += paths.iter().map(|p| runs(p, &q_edges)).sum::<usize>();
        phi2 += q.edges().iter().position(|e| used.contains(e)).unwrap_or(0);
    }
    Potential { phi1, phi2 }
}

/// Candidate replacements for one path, as vertex sequences.
fn candidates(p: &Path, family: &[Path]) -> Vec<Vec<Vertex>> {
    let pv = p.vertices();
    let pos: BTreeMap<Vertex, usize> = pv.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let splice = |from: usize, middle: &[Vertex], to: usize| -> Vec<Vertex> {
        let mut out = pv[..from].to_vec();
        out.extend_from_slice(middle);
        out.extend_from_slice(&pv[to + 1..]);
        out
    };
    let mut out = Vec::new();

    // A segment of one hub path between two of its vertices on `p`.
    for q in family {
        let qv = q.vertices();
        let on_p: Vec<usize> = (0..qv.len()).filter(|&j| pos.contains_key(&qv[j])).collect();
        for (x, &j1) in on_p.iter().enumerate() {
            for &j2 in &on_p[x + 1..] {
                let (px, py) = (pos[&qv[j1]], pos[&qv[j2]]);
                if px < py {
                    out.push(splice(px, &qv[j1..=j2], py));
                } else {
                    let mut seg = qv[j1..=j2].to_vec();
                    seg.reverse();
                    out.push(splice(py, &seg, px));
                }
            }
        }
    }

    // Two hub paths joined at the hub, shortcut at their first meeting.
    for (ia, qa) in family.iter().enumerate() {
        for (ib, qb) in family.iter().enumerate() {
            if ia == ib {
                continue;
            }
            let (av, bv) = (qa.vertices(), qb.vertices());
            for j1 in (0..av.len()).filter(|&j| pos.contains_key(&av[j])) {
                for j2 in (0..bv.len()).filter(|&j| pos.contains_key(&bv[j])) {
                    let (px, py) = (pos[&av[j1]], pos[&bv[j2]]);
                    if px >= py {
                        continue;
                    }
                    let b_index: BTreeMap<Vertex, usize> = bv[..=j2].iter().enumerate().map(|(i, &v)| (v, i)).collect();
                    let mut middle = Vec::new();
                    let mut joined = false;
                    for j in (0..=j1).rev() {
                        middle.push(av[j]);
                        if let Some(&jb) = b_index.get(&av[j]) {
                            middle.extend_from_slice(&bv[jb + 1..=j2]);
                            joined = true;
                            break;
                        }
                    }
                    if joined {
                        out.push(splice(px, &middle, py));
                    }
                }
            }
        }
    }
    out
}

fn is_simple(vs: &[Vertex]) -> bool {
    let mut seen = BTreeSet::new();
    vs.iter().all(|v| seen.insert(*v))
}

/// Reroutes `paths` (valid, pairwise edge-disjoint, qualifying for `spec`)
/// until a member of `family` is edge-disjoint from all of them. Every
/// member of `family` must start at `hub`.
pub fn exchange_augment(
    g: &Graph,
    spec: &PathSpec,
    paths: Vec<Path>,
    family: &[Path],
    hub: Vertex,
) -> Result<ExchangeOutcome, ExchangeError> {
    if family.is_empty() {
        return Err(ExchangeError::EmptyFamily);
    }
    if let Some(q) = family.iter().find(|q| q.first() != hub) {
        return Err(ExchangeError::Precondition(format!("family path {q} does not start at hub {hub}")));
    }
    let raw = |ps: &[Path]| -> Vec<Vec<Vertex>> { ps.iter().map(|p| p.vertices().to_vec()).collect() };
    verify_packing(g, spec, paths.len(), &raw(&paths)).map_err(|v| ExchangeError::Precondition(v.to_string()))?;

    let mut paths = paths;
    let mut trace = ExchangeTrace { potentials: vec![potential(&paths, family)], verified_steps: 0 };
    let start = trace.potentials[0];
    let phi2_max: usize = family.iter().map(Path::len).sum();
    let cap = (start.phi1 + 1).saturating_mul(phi2_max + 1);

    loop {
        if let Some(w) = family.iter().position(|q| paths.iter().all(|p| !p.shares_edge_with(q))) {
            return Ok(ExchangeOutcome { paths, witness: w, trace });
        }
        if trace.iterations() >= cap {
            return Err(ExchangeError::IterationCap(cap));
        }
        let current = *trace.potentials.last().expect("initial potential");
        let mut best: Option<((usize, Potential), usize, Path)> = None;
        for i in 0..paths.len() {
            let others: BTreeSet<EdgeId> = paths
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .flat_map(|(_, p)| p.edges().iter().copied())
                .collect();
            for cand in candidates(&paths[i], family) {
                if !is_simple(&cand) || spec.qualifies(&cand).is_err() {
                    continue;
                }
                let Ok(np) = Path::from_vertices(g, cand) else { continue };
                if np.edges().iter().any(|e| others.contains(e)) {
                    continue;
                }
                let mut trial = paths.clone();
                trial[i] = np.clone();
                let phi = potential(&trial, family);
                if phi >= current {
                    continue;
                }
                let key = (phi.sum(), phi);
                if best.as_ref().is_none_or(|(k, _, _)| key < *k) {
                    best = Some((key, i, np));
                }
            }
        }
        let Some(((_, phi), i, np)) = best else {
            return Err(ExchangeError::Stuck(current));
        };
        paths[i] = np;
        verify_packing(g, spec, paths.len(), &raw(&paths)).map_err(|v| ExchangeError::Invalid(v.to_string()))?;
        trace.verified_steps += 1;
        trace.potentials.push(phi);
    }
}

#![allow(dead_code)]

use std::collections::BTreeSet;

use edge_ep::generate::gnp;
use edge_ep::graph::{EdgeId, Graph, Vertex, VertexSet};
use edge_ep::spec::{PathSpec, Terminals};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn set(vs: &[Vertex]) -> VertexSet {
    vs.iter().copied().collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    gnp(n, p, rng)
}

/// G(n, p) redrawn until it has at most `max_edges` edges.
pub fn sparse_graph(rng: &mut ChaCha8Rng, n: usize, p: f64, max_edges: usize) -> Graph {
    loop {
        let g = gnp(n, p, rng);
        if g.edge_count() <= max_edges {
            return g;
        }
    }
}

/// Two disjoint random vertex sets of the given sizes.
pub fn disjoint_sets(rng: &mut ChaCha8Rng, n: usize, a: usize, b: usize) -> (VertexSet, VertexSet) {
    let mut vs: Vec<Vertex> = (0..n as Vertex).collect();
    vs.shuffle(rng);
    (vs[..a].iter().copied().collect(), vs[a..a + b].iter().copied().collect())
}

pub fn random_subset(rng: &mut ChaCha8Rng, n: usize, size: usize) -> VertexSet {
    let mut vs: Vec<Vertex> = (0..n as Vertex).collect();
    vs.shuffle(rng);
    vs[..size].iter().copied().collect()
}

/// Random partition of `size` random vertices into `parts` nonempty parts.
pub fn random_partition(rng: &mut ChaCha8Rng, n: usize, size: usize, parts: usize) -> Vec<VertexSet> {
    let mut vs: Vec<Vertex> = (0..n as Vertex).collect();
    vs.shuffle(rng);
    let mut out = vec![VertexSet::new(); parts];
    for (i, &v) in vs[..size].iter().enumerate() {
        out[i % parts].insert(v);
    }
    out
}

/// A random forest on all vertices but `hub`, plus random hub edges: every
/// cycle passes through the hub.
pub fn hub_graph(rng: &mut ChaCha8Rng, n: usize, hub: Vertex, hub_p: f64) -> Graph {
    let mut g = Graph::new(n);
    let others: Vec<Vertex> = (0..n as Vertex).filter(|&v| v != hub).collect();
    for (i, &v) in others.iter().enumerate().skip(1) {
        if rng.gen_bool(0.8) {
            let u = others[rng.gen_range(0..i)];
            g.add_edge(u, v).unwrap();
        }
    }
    for &v in &others {
        if rng.gen_bool(hub_p) {
            g.add_edge(hub, v).unwrap();
        }
    }
    g
}

/// Membership in the qualifying family, decided from the terminal data
/// alone (window ignored). Closed walks are cycles through the hub.
pub fn naive_qualifies(spec: &PathSpec, vs: &[Vertex]) -> bool {
    if vs.len() < 2 || vs.len() - 1 < spec.min_len {
        return false;
    }
    let (s, t) = (vs[0], vs[vs.len() - 1]);
    let inner = &vs[1..vs.len() - 1];
    let oriented = |x: Vertex, y: Vertex, a: &VertexSet, b: &VertexSet| a.contains(&x) && b.contains(&y);
    match &spec.terminals {
        Terminals::CycleThrough { hub } => s == t && vs.len() >= 4 && vs.contains(hub),
        _ if s == t => false,
        Terminals::Ab { a, b } => {
            (oriented(s, t, a, b) || oriented(t, s, a, b)) && inner.iter().all(|v| !a.contains(v) && !b.contains(v))
        }
        Terminals::APath { a } => a.contains(&s) && a.contains(&t) && inner.iter().all(|v| !a.contains(v)),
        Terminals::AStarB { a, b } => {
            (oriented(s, t, a, b) || oriented(t, s, a, b)) && inner.iter().all(|v| !b.contains(v))
        }
        Terminals::AStarBStar { a, b } => oriented(s, t, a, b) || oriented(t, s, a, b),
        Terminals::SPath { parts } => {
            let part = |v: Vertex| parts.iter().position(|p| p.contains(&v));
            matches!((part(s), part(t)), (Some(i), Some(j)) if i != j) && inner.iter().all(|&v| part(v).is_none())
        }
    }
}

/// Every simple path with at least one edge, each direction listed.
pub fn all_simple_paths(g: &Graph) -> Vec<Vec<Vertex>> {
    fn go(g: &Graph, stack: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        let last = *stack.last().unwrap();
        for w in g.neighbors(last).collect::<Vec<_>>() {
            if stack.contains(&w) {
                continue;
            }
            stack.push(w);
            out.push(stack.clone());
            go(g, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    for v in 0..g.vertex_count() as Vertex {
        go(g, &mut vec![v], &mut out);
    }
    out
}

/// Every cycle through `hub` as a closed walk starting at the hub, each
/// direction listed.
pub fn cycles_through(g: &Graph, hub: Vertex) -> Vec<Vec<Vertex>> {
    all_simple_paths(g)
        .into_iter()
        .filter(|p| p[0] == hub && p.len() >= 3 && g.edge_between(*p.last().unwrap(), hub).is_some())
        .map(|mut p| {
            p.push(hub);
            p
        })
        .collect()
}

pub fn naive_family(g: &Graph, spec: &PathSpec) -> Vec<Vec<Vertex>> {
    let cands = match spec.terminals {
        Terminals::CycleThrough { hub } => cycles_through(g, hub),
        _ => all_simple_paths(g),
    };
    cands.into_iter().filter(|p| naive_qualifies(spec, p)).collect()
}

pub fn edges_of(g: &Graph, vs: &[Vertex]) -> Vec<EdgeId> {
    vs.windows(2).map(|w| g.edge_between(w[0], w[1]).expect("adjacent")).collect()
}

/// Quadratic pairwise check of edge-disjointness.
pub fn pairwise_disjoint(g: &Graph, paths: &[Vec<Vertex>]) -> bool {
    for i in 0..paths.len() {
        let ei: BTreeSet<EdgeId> = edges_of(g, &paths[i]).into_iter().collect();
        for other in &paths[i + 1..] {
            if edges_of(g, other).iter().any(|e| ei.contains(e)) {
                return false;
            }
        }
    }
    true
}

/// Whether every qualifying object meets `hit`.
pub fn naive_hits(g: &Graph, spec: &PathSpec, hit: &BTreeSet<EdgeId>) -> bool {
    naive_family(g, spec).iter().all(|p| edges_of(g, p).iter().any(|e| hit.contains(e)))
}

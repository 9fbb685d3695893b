//! Exact, exponential-time searches for desk-scale instances.
//!
//! Every entry point refuses graphs above the configured size cap instead of
//! approximating.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::gadget::{split_hub, GadgetMap};
use crate::graph::{EdgeId, EdgeSet, Graph, GraphError, Path, Vertex};
use crate::spec::{PathSpec, SpecError, Terminals};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of vertices with at least one incident edge.
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Maximum number of qualifying objects enumerated by the exact optimizers.
    pub max_objects: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_vertices: 16, max_edges: 40, max_objects: 200_000 }
    }
}

impl OracleConfig {
    pub const ENV_VAR: &'static str = "EPP_ORACLE_CAP";

    /// Default cap, overridden by `EPP_ORACLE_CAP=<vertices>,<edges>`.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(Self::ENV_VAR) {
            Ok(s) => Self::parse_cap(&s),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn parse_cap(s: &str) -> Result<Self, String> {
        let (v, e) =
            s.split_once(',').ok_or_else(|| format!("{}: expected <vertices>,<edges>, got {s:?}", Self::ENV_VAR))?;
        let parse = |x: &str| x.trim().parse::<usize>().map_err(|err| format!("{}: {err}", Self::ENV_VAR));
        Ok(OracleConfig { max_vertices: parse(v)?, max_edges: parse(e)?, ..Self::default() })
    }

    pub fn check(&self, g: &Graph) -> Result<(), OracleError> {
        let vertices = g.active_vertex_count();
        let edges = g.edge_count();
        if vertices > self.max_vertices || edges > self.max_edges {
            return Err(OracleError::TooLarge { vertices, edges, cap: *self });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle too large: {vertices} vertices / {edges} edges exceeds cap {}/{}", cap.max_vertices, cap.max_edges)]
    TooLarge { vertices: usize, edges: usize, cap: OracleConfig },
    #[error("oracle too large: more than {0} qualifying objects")]
    TooManyObjects(usize),
    #[error("malformed path spec: {0}")]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Packing(Vec<Path>),
    Hitting(EdgeSet),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub optimum: usize,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinimalizeError {
    #[error("edge set is not a hitting set; surviving path {0}")]
    Surviving(Path),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Depth-first search for qualifying paths, pruned by the number of vertices
/// still reachable from the current end.
struct Search<'a> {
    g: &'a Graph,
    spec: &'a PathSpec,
    min: usize,
    max: usize,
    visited: Vec<bool>,
    stack: Vec<Vertex>,
    start: Vertex,
    scratch: Vec<u32>,
    epoch: u32,
    queue: Vec<Vertex>,
}

enum Flow {
    Stop,
    Continue,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, spec: &'a PathSpec) -> Self {
        let n = g.vertex_count();
        Search {
            g,
            spec,
            min: spec.min_len,
            max: spec.max_len.unwrap_or(usize::MAX),
            visited: vec![false; n],
            stack: Vec::new(),
            start: 0,
            scratch: vec![0; n],
            epoch: 0,
            queue: Vec::new(),
        }
    }

    /// Upper bound on how many more edges a qualifying extension from `v` can
    /// have; `None` when no admissible end is reachable.
    fn extension_bound(&mut self, v: Vertex) -> Option<usize> {
        self.epoch += 1;
        let epoch = self.epoch;
        self.queue.clear();
        self.queue.push(v);
        self.scratch[v as usize] = epoch;
        let mut reached = 0usize;
        let mut end_seen = false;
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for &(w, _) in self.g.incident(x) {
                let wi = w as usize;
                if self.visited[wi] || self.scratch[wi] == epoch {
                    continue;
                }
                self.scratch[wi] = epoch;
                reached += 1;
                if self.spec.can_end(self.start, w) {
                    end_seen = true;
                }
                if self.spec.interior_allowed(w) {
                    self.queue.push(w);
                }
            }
        }
        end_seen.then_some(reached)
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[Vertex]) -> Flow) -> bool {
        if self.max < self.min {
            return false;
        }
        for s in 0..self.g.vertex_count() as Vertex {
            if !self.spec.can_start(s) || self.g.degree(s) == 0 {
                continue;
            }
            self.start = s;
            self.visited[s as usize] = true;
            self.stack.push(s);
            let stop = self.extend(s, visit);
            self.stack.pop();
            self.visited[s as usize] = false;
            if stop {
                return true;
            }
        }
        false
    }

    fn extend(&mut self, v: Vertex, visit: &mut dyn FnMut(&[Vertex]) -> Flow) -> bool {
        let len = self.stack.len() - 1;
        if len >= self.max {
            return false;
        }
        match self.extension_bound(v) {
            None => return false,
            Some(r) if len + r < self.min => return false,
            _ => {}
        }
        let g = self.g;
        for &(w, _) in g.incident(v) {
            if self.visited[w as usize] {
                continue;
            }
            let nl = len + 1;
            if nl >= self.min && self.spec.can_end(self.start, w) {
                self.stack.push(w);
                let flow = visit(&self.stack);
                self.stack.pop();
                if let Flow::Stop = flow {
                    return true;
                }
            }
            if self.spec.interior_allowed(w) && nl < self.max {
                self.visited[w as usize] = true;
                self.stack.push(w);
                let stop = self.extend(w, visit);
                self.stack.pop();
                self.visited[w as usize] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }
}

/// Derived search problem for cycles through a hub: A-paths between the leaves
/// of the split graph.
fn cycle_reduction(g: &Graph, spec: &PathSpec, hub: Vertex) -> Result<(Graph, GadgetMap, PathSpec), OracleError> {
    let (derived, map) = split_hub(g, hub)?;
    let min = spec.min_len.max(3);
    let derived_spec = PathSpec::a_path(map.terminals.clone(), min).with_window(min, spec.max_len);
    Ok((derived, map, derived_spec))
}

/// Returns a qualifying path (a cycle for `CycleThrough`) with length inside
/// the spec's window, or `None` if none exists.
pub fn find_long_path(g: &Graph, spec: &PathSpec, cfg: &OracleConfig) -> Result<Option<Path>, OracleError> {
    spec.validate(g)?;
    cfg.check(g)?;
    if spec.window_is_empty() {
        return Ok(None);
    }
    if let Terminals::CycleThrough { hub } = spec.terminals {
        let (derived, map, derived_spec) = cycle_reduction(g, spec, hub)?;
        return match search_first(&derived, &derived_spec)? {
            Some(p) => Ok(Some(map.translate_path(g, &p)?)),
            None => Ok(None),
        };
    }
    search_first(g, spec)
}

fn search_first(g: &Graph, spec: &PathSpec) -> Result<Option<Path>, OracleError> {
    let mut found: Option<Vec<Vertex>> = None;
    Search::new(g, spec).run(&mut |p: &[Vertex]| {
        found = Some(p.to_vec());
        Flow::Stop
    });
    Ok(match found {
        Some(vs) => Some(Path::from_vertices(g, vs)?),
        None => None,
    })
}

/// All qualifying objects, each reported once (reversals are identified).
pub fn enumerate_qualifying(g: &Graph, spec: &PathSpec, cfg: &OracleConfig) -> Result<Vec<Path>, OracleError> {
    spec.validate(g)?;
    cfg.check(g)?;
    if spec.window_is_empty() {
        return Ok(Vec::new());
    }
    let (host, map, search_spec) = match spec.terminals {
        Terminals::CycleThrough { hub } => {
            let (d, m, s) = cycle_reduction(g, spec, hub)?;
            (d, Some(m), s)
        }
        _ => (g.clone(), None, spec.clone()),
    };
    let mut seen: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    let mut overflow = false;
    let limit = cfg.max_objects;
    Search::new(&host, &search_spec).run(&mut |p: &[Vertex]| {
        let mut rev = p.to_vec();
        rev.reverse();
        let key = if rev.as_slice() < p { rev } else { p.to_vec() };
        seen.insert(key);
        if seen.len() > limit {
            overflow = true;
            Flow::Stop
        } else {
            Flow::Continue
        }
    });
    if overflow {
        return Err(OracleError::TooManyObjects(limit));
    }
    let mut out = Vec::with_capacity(seen.len());
    for vs in seen {
        let p = Path::from_vertices(&host, vs)?;
        out.push(match &map {
            Some(m) => m.translate_path(g, &p)?,
            None => p,
        });
    }
    Ok(out)
}

/// Qualifying objects as bitmasks over a dense edge index, keeping only the
/// inclusion-minimal edge sets (a superset is never needed by either optimizer).
struct MaskFamily {
    edge_of_bit: Vec<EdgeId>,
    masks: Vec<u128>,
    representative: BTreeMap<u128, Path>,
}

fn mask_family(g: &Graph, spec: &PathSpec, cfg: &OracleConfig) -> Result<MaskFamily, OracleError> {
    if g.edge_count() > 128 {
        return Err(OracleError::TooLarge { vertices: g.active_vertex_count(), edges: g.edge_count(), cap: *cfg });
    }
    let objects = enumerate_qualifying(g, spec, cfg)?;
    let edge_of_bit: Vec<EdgeId> = g.edges().map(|(e, _, _)| e).collect();
    let bit_of: BTreeMap<EdgeId, usize> = edge_of_bit.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut representative: BTreeMap<u128, Path> = BTreeMap::new();
    for p in objects {
        let m = p.edges().iter().fold(0u128, |acc, e| acc | (1u128 << bit_of[e]));
        representative.entry(m).or_insert(p);
    }
    let mut all: Vec<u128> = representative.keys().copied().collect();
    all.sort_by_key(|m| (m.count_ones(), *m));
    let mut masks: Vec<u128> = Vec::new();
    for m in all {
        if !masks.iter().any(|&k| k & !m == 0) {
            masks.push(m);
        }
    }
    Ok(MaskFamily { edge_of_bit, masks, representative })
}

fn max_disjoint(cands: &[u128], chosen: &mut Vec<u128>, best: &mut Vec<u128>) {
    if chosen.len() > best.len() {
        *best = chosen.clone();
    }
    let Some((&first, rest)) = cands.split_first() else {
        return;
    };
    let covered = cands.iter().fold(0u128, |a, m| a | m);
    let min_size = cands.iter().map(|m| m.count_ones()).min().unwrap_or(1).max(1);
    let bound = (covered.count_ones() / min_size) as usize;
    if chosen.len() + bound.min(cands.len()) <= best.len() {
        return;
    }
    let compatible: Vec<u128> = rest.iter().copied().filter(|m| m & first == 0).collect();
    chosen.push(first);
    max_disjoint(&compatible, chosen, best);
    chosen.pop();
    max_disjoint(rest, chosen, best);
}

/// Maximum number of pairwise edge-disjoint qualifying objects, with witnesses.
pub fn exact_max_packing(g: &Graph, spec: &PathSpec, cfg: &OracleConfig) -> Result<OracleResult, OracleError> {
    let fam = mask_family(g, spec, cfg)?;
    let mut best = Vec::new();
    max_disjoint(&fam.masks, &mut Vec::new(), &mut best);
    let paths: Vec<Path> = best.iter().map(|m| fam.representative[m].clone()).collect();
    Ok(OracleResult { optimum: paths.len(), witness: Witness::Packing(paths) })
}

/// Greedy disjoint subfamily size: a lower bound on any hitting set.
fn disjoint_lower_bound(cands: &[u128]) -> usize {
    let mut used = 0u128;
    let mut count = 0;
    for &m in cands {
        if m & used == 0 {
            used |= m;
            count += 1;
        }
    }
    count
}

fn hit_within(cands: &[u128], budget: usize, chosen: &mut Vec<usize>) -> bool {
    let Some(&smallest) = cands.iter().min_by_key(|m| m.count_ones()) else {
        return true;
    };
    if budget == 0 || disjoint_lower_bound(cands) > budget {
        return false;
    }
    let mut bits = smallest;
    while bits != 0 {
        let b = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let rest: Vec<u128> = cands.iter().copied().filter(|m| m & (1u128 << b) == 0).collect();
        chosen.push(b);
        if hit_within(&rest, budget - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Minimum number of edges meeting every qualifying object, with a witness set.
/// Branches on the edges of an unhit object under iterative deepening.
pub fn exact_min_hitting(g: &Graph, spec: &PathSpec, cfg: &OracleConfig) -> Result<OracleResult, OracleError> {
    let fam = mask_family(g, spec, cfg)?;
    let mut budget = 0;
    loop {
        let mut chosen = Vec::new();
        if hit_within(&fam.masks, budget, &mut chosen) {
            let edges: EdgeSet = chosen.iter().map(|&b| fam.edge_of_bit[b]).collect();
            return Ok(OracleResult { optimum: edges.len(), witness: Witness::Hitting(edges) });
        }
        budget += 1;
    }
}

/// Shrinks a hitting set to an inclusion-minimal one, scanning edges in
/// ascending id order.
pub fn minimalize_hitting_set(
    g: &Graph,
    spec: &PathSpec,
    hitting: &EdgeSet,
    cfg: &OracleConfig,
) -> Result<EdgeSet, MinimalizeError> {
    if let Some(p) = find_long_path(&g.without_edges(hitting), spec, cfg)? {
        return Err(MinimalizeError::Surviving(p));
    }
    let mut kept = hitting.clone();
    for &e in hitting {
        kept.remove(&e);
        if find_long_path(&g.without_edges(&kept), spec, cfg)?.is_some() {
            kept.insert(e);
        }
    }
    Ok(kept)
}

/// Greedy maximal matching in input order; returns the indices of the chosen
/// pairs. Parallel pairs are allowed.
pub fn greedy_maximal_matching<T: Ord + Copy>(pairs: &[(T, T)]) -> Vec<usize> {
    let mut used: BTreeSet<T> = BTreeSet::new();
    let mut out = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        if a != b && !used.contains(&a) && !used.contains(&b) {
            used.insert(a);
            used.insert(b);
            out.push(i);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn set(vs: &[Vertex]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn path_graph(n: usize) -> Graph {
        let edges: Vec<(Vertex, Vertex)> = (0..n as Vertex - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(Vertex, Vertex)> = (0..n as Vertex).map(|i| (i, (i + 1) % n as Vertex)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn star3() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    const CFG: OracleConfig = OracleConfig { max_vertices: 16, max_edges: 40, max_objects: 200_000 };

    #[test]
    fn long_path_on_p5() {
        let g = path_graph(5);
        let spec = PathSpec::ab(set(&[0]), set(&[4]), 4);
        let p = find_long_path(&g, &spec, &CFG).unwrap().unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 3, 4]);
        let spec = PathSpec::ab(set(&[0]), set(&[4]), 5);
        assert_eq!(find_long_path(&g, &spec, &CFG).unwrap(), None);
    }

    #[test]
    fn long_path_on_c6() {
        let g = cycle(6);
        let spec = PathSpec::ab(set(&[0]), set(&[3]), 3);
        let p = find_long_path(&g, &spec, &CFG).unwrap().unwrap();
        assert_eq!(p.len(), 3);
        assert!(spec.qualifies(p.vertices()).is_ok());
    }

    #[test]
    fn windowed_search() {
        let g = cycle(6);
        let spec = PathSpec::a_path(set(&[0, 3]), 1).with_window(1, Some(2));
        assert_eq!(find_long_path(&g, &spec, &CFG).unwrap(), None);
        let spec = spec.with_window(3, Some(3));
        assert!(find_long_path(&g, &spec, &CFG).unwrap().is_some());
    }

    #[test]
    fn cycle_search_through_hub() {
        let g = cycle(5);
        let spec = PathSpec::cycle_through(2, 5);
        let c = find_long_path(&g, &spec, &CFG).unwrap().unwrap();
        assert!(c.is_closed());
        assert_eq!(c.len(), 5);
        assert_eq!(find_long_path(&g, &PathSpec::cycle_through(2, 6), &CFG).unwrap(), None);
    }

    #[test]
    fn cap_refuses_large_graphs() {
        let g = path_graph(20);
        let spec = PathSpec::ab(set(&[0]), set(&[19]), 1);
        assert!(matches!(find_long_path(&g, &spec, &CFG), Err(OracleError::TooLarge { .. })));
    }

    #[test]
    fn malformed_spec_is_rejected() {
        let g = path_graph(3);
        let spec = PathSpec::astar_b(set(&[0]), set(&[0]), 1);
        assert!(matches!(find_long_path(&g, &spec, &CFG), Err(OracleError::Spec(_))));
    }

    #[test]
    fn k4_packing_and_hitting() {
        let spec = PathSpec::ab(set(&[0]), set(&[3]), 2);
        let pack = exact_max_packing(&k4(), &spec, &CFG).unwrap();
        assert_eq!(pack.optimum, 2);
        let hit = exact_min_hitting(&k4(), &spec, &CFG).unwrap();
        assert_eq!(hit.optimum, 2);
    }

    #[test]
    fn star_a_paths() {
        let spec = PathSpec::a_path(set(&[1, 2, 3]), 2);
        assert_eq!(exact_max_packing(&star3(), &spec, &CFG).unwrap().optimum, 1);
        assert_eq!(exact_min_hitting(&star3(), &spec, &CFG).unwrap().optimum, 2);
    }

    #[test]
    fn empty_instances() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let spec = PathSpec::ab(set(&[0]), set(&[3]), 1);
        let pack = exact_max_packing(&g, &spec, &CFG).unwrap();
        assert_eq!(pack, OracleResult { optimum: 0, witness: Witness::Packing(vec![]) });
        let hit = exact_min_hitting(&g, &spec, &CFG).unwrap();
        assert_eq!(hit, OracleResult { optimum: 0, witness: Witness::Hitting(EdgeSet::new()) });
    }

    #[test]
    fn minimalize_examples() {
        let g = path_graph(3);
        let spec = PathSpec::ab(set(&[0]), set(&[2]), 2);
        let all = g.edge_ids();
        assert_eq!(minimalize_hitting_set(&g, &spec, &all, &CFG).unwrap().len(), 1);
        let one: EdgeSet = [EdgeId(1)].into_iter().collect();
        assert_eq!(minimalize_hitting_set(&g, &spec, &one, &CFG).unwrap(), one);
        let spec = PathSpec::ab(set(&[0]), set(&[3]), 2);
        assert_eq!(minimalize_hitting_set(&k4(), &spec, &k4().edge_ids(), &CFG).unwrap().len(), 2);
        assert!(matches!(
            minimalize_hitting_set(&k4(), &spec, &EdgeSet::new(), &CFG),
            Err(MinimalizeError::Surviving(_))
        ));
    }

    #[test]
    fn greedy_matching_examples() {
        assert_eq!(greedy_maximal_matching(&[('a', 'b'), ('a', 'c'), ('b', 'c')]), vec![0]);
        assert_eq!(greedy_maximal_matching(&[('v', 'x'), ('v', 'y'), ('z', 'v')]), vec![0]);
        assert_eq!(greedy_maximal_matching(&[('a', 'b'), ('c', 'd')]), vec![0, 1]);
    }

    #[test]
    fn env_cap_parsing() {
        let cfg = OracleConfig::parse_cap("20, 50").unwrap();
        assert_eq!((cfg.max_vertices, cfg.max_edges), (20, 50));
        assert!(OracleConfig::parse_cap("20").is_err());
    }
}

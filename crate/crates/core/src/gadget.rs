//! Graph gadgets with maps for translating certificates back to the host graph.
//!
//! * pendant twins: every `a ∈ A` receives `deg(a)` fresh degree-1 neighbors;
//! * subdivide-and-contract: edges inside `A` are dropped, every `A`-incident
//!   edge is subdivided once and each part of the partition is merged into a
//!   single fresh vertex;
//! * hub splitting: the hub is removed and each former neighbor gets a fresh leaf.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{EdgeId, EdgeSet, Graph, GraphError, Path, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    Pendant,
    SubdivideContract,
    HubSplit,
}

/// What happens to edges joining two different parts of the partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossEdges {
    /// Delete them (they lie on no S-path of length ≥ 2).
    Remove,
    /// Subdivide them twice, so that they become derived paths of length 3.
    Subdivide,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("partition part {0} is empty")]
    EmptyPart(usize),
    #[error("vertex {0} lies in more than one part")]
    OverlappingParts(Vertex),
}

/// A subdivision vertex: the original edge it splits and the endpoint of that
/// edge that lay in the contracted set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Midpoint {
    pub edge: EdgeId,
    pub terminal_end: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetMap {
    pub kind: GadgetKind,
    /// Derived edge id → original edge id (`None` for pendant edges).
    edge_origin: Vec<Option<EdgeId>>,
    /// Derived vertex → original vertex (`None` for fresh vertices).
    vertex_origin: Vec<Option<Vertex>>,
    /// The terminal set the construction produces: `C`, `A'` or the leaf set.
    pub terminals: VertexSet,
    /// Fresh vertex → the host vertex it decorates (twin → `a`, leaf → neighbor
    /// of the hub, contracted vertex → smallest member of its part).
    pub owner: BTreeMap<Vertex, Vertex>,
    pub midpoints: BTreeMap<Vertex, Midpoint>,
}

impl GadgetMap {
    fn new(kind: GadgetKind, host: &Graph) -> Self {
        GadgetMap {
            kind,
            edge_origin: (0..host.edge_id_bound())
                .map(|i| host.has_edge(EdgeId(i as u32)).then_some(EdgeId(i as u32)))
                .collect(),
            vertex_origin: (0..host.vertex_count() as Vertex).map(Some).collect(),
            terminals: VertexSet::new(),
            owner: BTreeMap::new(),
            midpoints: BTreeMap::new(),
        }
    }

    fn record_edge(&mut self, derived: EdgeId, origin: Option<EdgeId>) {
        let i = derived.0 as usize;
        if self.edge_origin.len() <= i {
            self.edge_origin.resize(i + 1, None);
        }
        self.edge_origin[i] = origin;
    }

    fn record_vertex(&mut self, derived: Vertex, origin: Option<Vertex>) {
        let i = derived as usize;
        if self.vertex_origin.len() <= i {
            self.vertex_origin.resize(i + 1, None);
        }
        self.vertex_origin[i] = origin;
    }

    pub fn original_edge(&self, derived: EdgeId) -> Option<EdgeId> {
        self.edge_origin.get(derived.0 as usize).copied().flatten()
    }

    pub fn original_vertex(&self, derived: Vertex) -> Option<Vertex> {
        self.vertex_origin.get(derived as usize).copied().flatten()
    }

    /// Maps derived edges to their originals; edges without an origin vanish.
    pub fn translate_edges(&self, derived: &EdgeSet) -> EdgeSet {
        derived.iter().filter_map(|&e| self.original_edge(e)).collect()
    }

    /// Maps a derived path to the host graph: derived edges are replaced by
    /// their originals, consecutive repeats (subdivision halves) are merged and
    /// edges without an origin (pendant edges) are dropped.
    pub fn translate_path(&self, host: &Graph, derived: &Path) -> Result<Path, GraphError> {
        let mut chain: Vec<EdgeId> = Vec::with_capacity(derived.len());
        for &e in derived.edges() {
            if let Some(o) = self.original_edge(e) {
                if chain.last() != Some(&o) {
                    chain.push(o);
                }
            }
        }
        let hint = derived
            .vertices()
            .iter()
            .find_map(|v| self.midpoints.get(v).map(|m| m.terminal_end).or_else(|| self.original_vertex(*v)));
        let vertices = chain_vertices(host, &chain, hint)?;
        Path::from_vertices(host, vertices)
    }
}

/// Recovers the vertex sequence of a walk given by consecutive edges.
fn chain_vertices(g: &Graph, chain: &[EdgeId], hint: Option<Vertex>) -> Result<Vec<Vertex>, GraphError> {
    let ends = |e: EdgeId| g.endpoints(e).ok_or(GraphError::UnknownEdge(e));
    let Some(&first) = chain.first() else {
        return hint.map(|v| vec![v]).ok_or(GraphError::EmptyPath);
    };
    let (u, w) = ends(first)?;
    let start = if chain.len() >= 2 {
        let (x, y) = ends(chain[1])?;
        if u == x || u == y {
            w
        } else {
            u
        }
    } else if hint == Some(w) {
        w
    } else {
        u
    };
    let mut vertices = vec![start];
    let mut cur = start;
    for &e in chain {
        let (x, y) = ends(e)?;
        cur = if x == cur {
            y
        } else if y == cur {
            x
        } else {
            return Err(GraphError::NotAdjacent(cur, x));
        };
        vertices.push(cur);
    }
    Ok(vertices)
}

fn check_set(g: &Graph, set: &VertexSet) -> Result<(), GraphError> {
    match set.iter().find(|&&v| !g.contains_vertex(v)) {
        Some(&v) => Err(GraphError::VertexOutOfRange(v, g.vertex_count())),
        None => Ok(()),
    }
}

/// Attaches `deg(a)` fresh pendant vertices to every `a ∈ A`. Original edges
/// keep their ids; the fresh set `C` is recorded in `terminals`.
pub fn add_pendant_twins(g: &Graph, a: &VertexSet) -> Result<(Graph, GadgetMap), GraphError> {
    check_set(g, a)?;
    let mut map = GadgetMap::new(GadgetKind::Pendant, g);
    let mut derived = g.clone();
    for &v in a {
        for _ in 0..g.degree(v) {
            let twin = derived.add_vertex();
            let e = derived.add_edge(v, twin)?;
            map.record_vertex(twin, None);
            map.record_edge(e, None);
            map.terminals.insert(twin);
            map.owner.insert(twin, v);
        }
    }
    Ok((derived, map))
}

/// Drops edges inside `A = ∪ parts`, subdivides each `A`-incident edge once and
/// contracts every part to one fresh vertex `a_i`; `terminals` is `A'`.
pub fn subdivide_and_contract(g: &Graph, parts: &[VertexSet]) -> Result<(Graph, GadgetMap), GadgetError> {
    subdivide_and_contract_with(g, parts, CrossEdges::Remove)
}

pub fn subdivide_and_contract_with(
    g: &Graph,
    parts: &[VertexSet],
    cross: CrossEdges,
) -> Result<(Graph, GadgetMap), GadgetError> {
    let mut part_of: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (i, p) in parts.iter().enumerate() {
        if p.is_empty() {
            return Err(GadgetError::EmptyPart(i));
        }
        check_set(g, p)?;
        for &v in p {
            if part_of.insert(v, i).is_some() {
                return Err(GadgetError::OverlappingParts(v));
            }
        }
    }

    let n = g.vertex_count();
    let mut derived = Graph::new(n);
    let mut map = GadgetMap {
        kind: GadgetKind::SubdivideContract,
        edge_origin: Vec::new(),
        vertex_origin: (0..n as Vertex).map(Some).collect(),
        terminals: VertexSet::new(),
        owner: BTreeMap::new(),
        midpoints: BTreeMap::new(),
    };
    let contracted: Vec<Vertex> = parts
        .iter()
        .map(|p| {
            let a = derived.add_vertex();
            map.record_vertex(a, None);
            map.terminals.insert(a);
            map.owner.insert(a, *p.iter().next().expect("parts are nonempty"));
            a
        })
        .collect();

    let midpoint = |derived: &mut Graph, map: &mut GadgetMap, edge: EdgeId, terminal_end: Vertex| {
        let m = derived.add_vertex();
        map.record_vertex(m, None);
        map.midpoints.insert(m, Midpoint { edge, terminal_end });
        m
    };

    for (e, u, v) in g.edges() {
        match (part_of.get(&u).copied(), part_of.get(&v).copied()) {
            (None, None) => {
                let d = derived.add_edge(u, v)?;
                map.record_edge(d, Some(e));
            }
            (Some(i), None) | (None, Some(i)) => {
                let (t, other) = if part_of.contains_key(&u) { (u, v) } else { (v, u) };
                let m = midpoint(&mut derived, &mut map, e, t);
                let d1 = derived.add_edge(contracted[i], m)?;
                let d2 = derived.add_edge(m, other)?;
                map.record_edge(d1, Some(e));
                map.record_edge(d2, Some(e));
            }
            (Some(i), Some(j)) => {
                if i == j || cross == CrossEdges::Remove {
                    continue;
                }
                let m1 = midpoint(&mut derived, &mut map, e, u);
                let m2 = midpoint(&mut derived, &mut map, e, v);
                for (x, y) in [(contracted[i], m1), (m1, m2), (m2, contracted[j])] {
                    let d = derived.add_edge(x, y)?;
                    map.record_edge(d, Some(e));
                }
            }
        }
    }
    Ok((derived, map))
}

/// Removes the hub `x` and gives every former neighbor a fresh leaf; each leaf
/// edge maps back to the hub edge it replaces. `terminals` is the leaf set.
pub fn split_hub(g: &Graph, x: Vertex) -> Result<(Graph, GadgetMap), GraphError> {
    if !g.contains_vertex(x) {
        return Err(GraphError::VertexOutOfRange(x, g.vertex_count()));
    }
    let mut map = GadgetMap::new(GadgetKind::HubSplit, g);
    let mut derived = g.clone();
    let hub_edges: Vec<(Vertex, EdgeId)> = g.incident(x).to_vec();
    derived.isolate_vertices(&[x]);
    for (v, hub_edge) in hub_edges {
        map.record_edge(hub_edge, None);
        let leaf = derived.add_vertex();
        let e = derived.add_edge(leaf, v)?;
        map.record_vertex(leaf, None);
        map.record_edge(e, Some(hub_edge));
        map.terminals.insert(leaf);
        map.owner.insert(leaf, v);
    }
    Ok((derived, map))
}

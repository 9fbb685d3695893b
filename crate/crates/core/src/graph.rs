//! Undirected simple graphs with stable edge identifiers, and paths in them.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = u32;

/// Stable identifier of an edge. Deleting other edges never renumbers it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

pub type EdgeSet = BTreeSet<EdgeId>;
pub type VertexSet = BTreeSet<Vertex>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(Vertex, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(Vertex, Vertex),
    #[error("vertex {0} repeats in path")]
    RepeatedVertex(Vertex),
    #[error("empty vertex sequence")]
    EmptyPath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    /// Per vertex: `(neighbor, edge)` sorted by neighbor.
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    /// Indexed by edge id; `None` once deleted.
    edges: Vec<Option<(Vertex, Vertex)>>,
    live_edges: usize,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph { adj: vec![Vec::new(); vertex_count], edges: Vec::new(), live_edges: 0 }
    }

    /// Builds a graph from an edge list; edge `i` of the list gets id `i`.
    pub fn from_edges(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    /// One past the largest edge id ever allocated.
    pub fn edge_id_bound(&self) -> usize {
        self.edges.len()
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        (self.adj.len() - 1) as Vertex
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if (v as usize) < self.adj.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange(v, self.adj.len()))
        }
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        (v as usize) < self.adj.len()
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.edge_between(u, v).is_some() {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let id = EdgeId(self.edges.len() as u32);
        self.edges.push(Some((u.min(v), u.max(v))));
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adj[a as usize];
            let pos = list.partition_point(|&(w, _)| w < b);
            list.insert(pos, (b, id));
        }
        self.live_edges += 1;
        Ok(id)
    }

    pub fn remove_edge(&mut self, id: EdgeId) -> Result<(), GraphError> {
        let (u, v) = self.endpoints(id).ok_or(GraphError::UnknownEdge(id))?;
        self.edges[id.0 as usize] = None;
        self.adj[u as usize].retain(|&(_, e)| e != id);
        self.adj[v as usize].retain(|&(_, e)| e != id);
        self.live_edges -= 1;
        Ok(())
    }

    /// Removes every listed edge that is present; absent ids are ignored.
    pub fn remove_edges<'a>(&mut self, ids: impl IntoIterator<Item = &'a EdgeId>) {
        for &id in ids {
            let _ = self.remove_edge(id);
        }
    }

    pub fn without_edges<'a>(&self, ids: impl IntoIterator<Item = &'a EdgeId>) -> Graph {
        let mut g = self.clone();
        g.remove_edges(ids);
        g
    }

    /// Deletes all edges at the given vertices. The vertices stay (isolated) so
    /// that ids remain stable; an isolated vertex lies on no path of length ≥ 1.
    pub fn isolate_vertices<'a>(&mut self, vs: impl IntoIterator<Item = &'a Vertex>) {
        for &v in vs {
            if !self.contains_vertex(v) {
                continue;
            }
            let incident: Vec<EdgeId> = self.adj[v as usize].iter().map(|&(_, e)| e).collect();
            for e in incident {
                let _ = self.remove_edge(e);
            }
        }
    }

    pub fn without_vertices<'a>(&self, vs: impl IntoIterator<Item = &'a Vertex>) -> Graph {
        let mut g = self.clone();
        g.isolate_vertices(vs);
        g
    }

    pub fn endpoints(&self, id: EdgeId) -> Option<(Vertex, Vertex)> {
        self.edges.get(id.0 as usize).copied().flatten()
    }

    pub fn has_edge(&self, id: EdgeId) -> bool {
        self.endpoints(id).is_some()
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let list = self.adj.get(u as usize)?;
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    /// Neighbors of `v` in ascending order together with the connecting edge.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        self.adj.get(v as usize).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.incident(v).iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incident(v).len()
    }

    /// Live edges as `(id, u, v)` with `u < v`, ascending by id.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, Vertex, Vertex)> + '_ {
        self.edges.iter().enumerate().filter_map(|(i, e)| e.map(|(u, v)| (EdgeId(i as u32), u, v)))
    }

    pub fn edge_ids(&self) -> EdgeSet {
        self.edges().map(|(id, _, _)| id).collect()
    }

    /// Vertices with at least one incident edge.
    pub fn active_vertex_count(&self) -> usize {
        self.adj.iter().filter(|l| !l.is_empty()).count()
    }

    /// Union of the neighborhoods of `set`.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        set.iter().flat_map(|&v| self.neighbors(v)).collect()
    }
}

/// A path (or, when closed, a cycle) given by its vertex sequence.
///
/// A closed path repeats its first vertex at the end and has at least three
/// edges; every other vertex occurs once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    vertices: Vec<Vertex>,
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn from_vertices(g: &Graph, vertices: Vec<Vertex>) -> Result<Path, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyPath);
        }
        let closed = vertices.len() >= 4 && vertices.first() == vertices.last();
        let distinct_part = if closed { &vertices[..vertices.len() - 1] } else { &vertices[..] };
        let mut seen = VertexSet::new();
        for &v in distinct_part {
            if !g.contains_vertex(v) {
                return Err(GraphError::VertexOutOfRange(v, g.vertex_count()));
            }
            if !seen.insert(v) {
                return Err(GraphError::RepeatedVertex(v));
            }
        }
        let edges = vertices
            .windows(2)
            .map(|w| g.edge_between(w[0], w[1]).ok_or(GraphError::NotAdjacent(w[0], w[1])))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Path { vertices, edges })
    }

    pub fn single(v: Vertex) -> Path {
        Path { vertices: vec![v], edges: Vec::new() }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.len() >= 4 && self.vertices.first() == self.vertices.last()
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().expect("paths are nonempty")
    }

    /// Vertices strictly between the two ends.
    pub fn interior(&self) -> &[Vertex] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let mut edges = self.edges.clone();
        edges.reverse();
        Path { vertices, edges }
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn shares_edge_with(&self, other: &Path) -> bool {
        let mine = self.edge_set();
        other.edges.iter().any(|e| mine.contains(e))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("-"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_parallel_edges() {
        let mut g = Graph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(GraphError::DuplicateEdge(0, 1)));
        assert!(matches!(g.add_edge(0, 7), Err(GraphError::VertexOutOfRange(7, 3))));
    }

    #[test]
    fn edge_ids_survive_deletions() {
        let mut g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        g.remove_edge(EdgeId(1)).unwrap();
        assert_eq!(g.edge_between(2, 3), Some(EdgeId(2)));
        assert_eq!(g.edge_between(3, 0), Some(EdgeId(3)));
        assert_eq!(g.edge_between(1, 2), None);
        assert_eq!(g.edge_count(), 3);
        let id = g.add_edge(0, 2).unwrap();
        assert_eq!(id, EdgeId(4));
    }

    #[test]
    fn neighbors_match_edges() {
        let g = Graph::from_edges(5, &[(0, 3), (0, 1), (4, 0), (2, 3)]).unwrap();
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![1, 3, 4]);
        assert_eq!(g.degree(3), 2);
        assert_eq!(g.degree(2), 1);
    }

    #[test]
    fn path_construction() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = Path::from_vertices(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.interior(), &[1]);
        assert!(!p.is_closed());
        let c = Path::from_vertices(&g, vec![0, 1, 2, 3, 0]).unwrap();
        assert!(c.is_closed());
        assert_eq!(c.len(), 4);
        assert_eq!(Path::from_vertices(&g, vec![0, 2]), Err(GraphError::NotAdjacent(0, 2)));
        assert_eq!(Path::from_vertices(&g, vec![0, 1, 0]), Err(GraphError::RepeatedVertex(0)));
    }

    #[test]
    fn isolating_keeps_vertex_ids() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let h = g.without_vertices(&[1]);
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 0);
    }
}

//! Edge-Menger through unit-capacity max-flow, and the short-length base case.

use std::collections::VecDeque;

use thiserror::Error;

use crate::bounds::BoundValue;
use crate::certificate::Certificate;
use crate::graph::{EdgeId, EdgeSet, Graph, GraphError, Path, Vertex, VertexSet};
use crate::spec::PathSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MengerError {
    #[error("terminal set {0} is empty")]
    EmptyTerminals(&'static str),
    #[error("terminal sets share vertex {0}")]
    Overlap(Vertex),
    #[error("base case handles lengths 1 and 2 only, got {0}")]
    LengthOutOfRange(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Result of a (possibly truncated) max-flow run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowResult {
    pub value: usize,
    /// Edge-disjoint A-B paths, one per unit of flow.
    pub paths: Vec<Path>,
    /// A minimum cut, present when the flow was not truncated.
    pub cut: Option<EdgeSet>,
}

struct Network {
    head: Vec<usize>,
    cap: Vec<u32>,
    edge: Vec<Option<EdgeId>>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn add_pair(&mut self, u: usize, v: usize, forward: u32, backward: u32, edge: Option<EdgeId>) {
        let i = self.head.len();
        self.head.extend([v, u]);
        self.cap.extend([forward, backward]);
        self.edge.extend([edge, edge]);
        self.out[u].push(i);
        self.out[v].push(i + 1);
    }

    fn augmenting_path(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let mut via: Vec<Option<usize>> = vec![None; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &arc in &self.out[x] {
                let y = self.head[arc];
                if self.cap[arc] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = Some(arc);
                    if y == t {
                        let mut arcs = Vec::new();
                        let mut cur = t;
                        while let Some(a) = via[cur] {
                            arcs.push(a);
                            cur = self.head[a ^ 1];
                        }
                        arcs.reverse();
                        return Some(arcs);
                    }
                    queue.push_back(y);
                }
            }
        }
        None
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &arc in &self.out[x] {
                let y = self.head[arc];
                if self.cap[arc] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

fn check_terminals(a: &VertexSet, b: &VertexSet) -> Result<(), MengerError> {
    if a.is_empty() {
        return Err(MengerError::EmptyTerminals("A"));
    }
    if b.is_empty() {
        return Err(MengerError::EmptyTerminals("B"));
    }
    if let Some(&v) = a.intersection(b).next() {
        return Err(MengerError::Overlap(v));
    }
    Ok(())
}

/// Breadth-first augmentation (arcs scanned in ascending edge-id order) until
/// `limit` units are routed or no augmenting path remains.
pub fn menger_flow(g: &Graph, a: &VertexSet, b: &VertexSet, limit: usize) -> Result<FlowResult, MengerError> {
    check_terminals(a, b)?;
    for &v in a.iter().chain(b) {
        if !g.contains_vertex(v) {
            return Err(GraphError::VertexOutOfRange(v, g.vertex_count()).into());
        }
    }
    let n = g.vertex_count();
    let (s, t) = (n, n + 1);
    let big = u32::MAX / 2;
    let mut net = Network { head: Vec::new(), cap: Vec::new(), edge: Vec::new(), out: vec![Vec::new(); n + 2] };
    for (id, u, v) in g.edges() {
        net.add_pair(u as usize, v as usize, 1, 1, Some(id));
    }
    for &x in a {
        net.add_pair(s, x as usize, big, 0, None);
    }
    for &x in b {
        net.add_pair(x as usize, t, big, 0, None);
    }

    let mut value = 0;
    while value < limit {
        let Some(arcs) = net.augmenting_path(s, t) else { break };
        for arc in arcs {
            net.cap[arc] -= 1;
            net.cap[arc ^ 1] += 1;
        }
        value += 1;
    }

    let cut = (value < limit).then(|| {
        let seen = net.reachable(s);
        g.edges().filter(|&(_, u, v)| seen[u as usize] != seen[v as usize]).map(|(id, _, _)| id).collect()
    });

    // Net flow per vertex: unit arcs u->v whose forward residual dropped to 0.
    let mut flow_out: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::new(); n];
    for (i, &e) in net.edge.iter().enumerate().step_by(2) {
        if let Some(id) = e {
            let (u, v) = (net.head[i + 1], net.head[i]);
            if net.cap[i] == 0 {
                flow_out[u].push((v as Vertex, id));
            } else if net.cap[i + 1] == 0 {
                flow_out[v].push((u as Vertex, id));
            }
        }
    }
    for list in &mut flow_out {
        list.sort_by_key(|&(_, id)| id);
        list.reverse();
    }
    let mut sink_left: Vec<u32> = vec![0; n];
    let mut source_left: Vec<u32> = vec![0; n];
    for (i, &h) in net.head.iter().enumerate().step_by(2) {
        if net.edge[i].is_none() {
            let from = net.head[i + 1];
            if from == s {
                source_left[h] = big - net.cap[i];
            } else if h == t {
                sink_left[from] = big - net.cap[i];
            }
        }
    }

    let mut paths = Vec::with_capacity(value);
    for &start in a {
        while source_left[start as usize] > 0 {
            source_left[start as usize] -= 1;
            let mut walk = vec![start];
            let mut cur = start;
            loop {
                if sink_left[cur as usize] > 0 {
                    sink_left[cur as usize] -= 1;
                    break;
                }
                let (next, _) = flow_out[cur as usize].pop().expect("flow conservation");
                walk.push(next);
                cur = next;
            }
            paths.push(Path::from_vertices(g, trim_to_ab(loop_erase(walk), a, b))?);
        }
    }
    paths.sort_by(|p, q| p.edges().cmp(q.edges()));
    Ok(FlowResult { value, paths, cut })
}

fn loop_erase(walk: Vec<Vertex>) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = Vec::with_capacity(walk.len());
    for v in walk {
        if let Some(pos) = out.iter().position(|&x| x == v) {
            out.truncate(pos + 1);
        } else {
            out.push(v);
        }
    }
    out
}

/// Shortest A-B piece of a simple walk from A to B: up to the first B vertex,
/// starting from the last A vertex before it.
fn trim_to_ab(walk: Vec<Vertex>, a: &VertexSet, b: &VertexSet) -> Vec<Vertex> {
    let end = walk.iter().position(|v| b.contains(v)).expect("walk ends in B");
    let start = walk[..end].iter().rposition(|v| a.contains(v)).expect("walk starts in A");
    walk[start..=end].to_vec()
}

/// `k` edge-disjoint A-B paths, or a minimum A-B edge cut of size at most `k - 1`.
pub fn menger_edge(g: &Graph, a: &VertexSet, b: &VertexSet, k: usize) -> Result<Certificate, MengerError> {
    let spec = PathSpec::ab(a.clone(), b.clone(), 1);
    let res = menger_flow(g, a, b, k)?;
    Ok(match res.cut {
        None => Certificate::packing(spec, k, res.paths),
        Some(cut) => Certificate::hitting(spec, k, cut, BoundValue::from_u64(k as u64 - 1)),
    })
}

/// Graph on which every A-B path is long for `len` in {1, 2}.
pub fn base_graph(g: &Graph, a: &VertexSet, b: &VertexSet, len: usize) -> Result<Graph, MengerError> {
    match len {
        1 => Ok(g.clone()),
        2 => {
            let direct: Vec<EdgeId> = g
                .edges()
                .filter(|&(_, u, v)| (a.contains(&u) && b.contains(&v)) || (a.contains(&v) && b.contains(&u)))
                .map(|(id, _, _)| id)
                .collect();
            Ok(g.without_edges(&direct))
        }
        _ => Err(MengerError::LengthOutOfRange(len)),
    }
}

/// Long A-B paths for `len` in {1, 2}: direct A-B edges are the only short
/// A-B paths, so after deleting them Menger answers exactly.
pub fn base_long_ab(g: &Graph, a: &VertexSet, b: &VertexSet, k: usize, len: usize) -> Result<Certificate, MengerError> {
    let h = base_graph(g, a, b, len)?;
    let mut cert = menger_edge(&h, a, b, k)?;
    cert.spec = PathSpec::ab(a.clone(), b.clone(), len);
    Ok(cert)
}

//! Seeded random instances: G(n, p) plus terminals for a given kind.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::io::{Instance, Kind};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub kind: Kind,
    /// Size of A (or of the union of the parts for `s`).
    pub a: usize,
    pub b: usize,
    /// Number of parts for `s`.
    pub parts: usize,
}

impl GenParams {
    pub fn new(n: usize, p: f64, seed: u64, kind: Kind) -> Self {
        GenParams { n, p, seed, kind, a: 1, b: 1, parts: 2 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("edge probability must lie in [0, 1]")]
    Probability,
    #[error("terminal sizes {a} + {b} do not fit in {n} vertices")]
    Sizes { a: usize, b: usize, n: usize },
    #[error("cannot split {a} vertices into {parts} nonempty parts (need at least 2)")]
    Parts { a: usize, parts: usize },
    #[error("a hub needs at least one vertex")]
    Hub,
}

/// Uniform G(n, p); each pair `u < v` is decided in lexicographic order.
pub fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

pub fn gen_random(params: &GenParams) -> Result<Instance, GenError> {
    let GenParams { n, p, seed, kind, a, b, parts } = *params;
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::Probability);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graph = gnp(n, p, &mut rng);
    let mut inst = Instance { graph, a: None, b: None, s: None, x: None };
    let mut order: Vec<Vertex> = (0..n as Vertex).collect();
    let take =
        |order: &[Vertex], from: usize, len: usize| -> VertexSet { order[from..from + len].iter().copied().collect() };

    match kind {
        Kind::Ab | Kind::AStarB | Kind::AStarBStar => {
            if a + b > n {
                return Err(GenError::Sizes { a, b, n });
            }
            order.shuffle(&mut rng);
            inst.a = Some(take(&order, 0, a));
            inst.b = Some(take(&order, a, b));
        }
        Kind::AbGeneral => {
            if a.max(b) > n {
                return Err(GenError::Sizes { a, b, n });
            }
            order.shuffle(&mut rng);
            inst.a = Some(take(&order, 0, a));
            order.shuffle(&mut rng);
            inst.b = Some(take(&order, 0, b));
        }
        Kind::A | Kind::AStar => {
            if a > n {
                return Err(GenError::Sizes { a, b: 0, n });
            }
            order.shuffle(&mut rng);
            inst.a = Some(take(&order, 0, a));
        }
        Kind::S => {
            if a > n {
                return Err(GenError::Sizes { a, b: 0, n });
            }
            if parts < 2 || parts > a {
                return Err(GenError::Parts { a, parts });
            }
            order.shuffle(&mut rng);
            let mut split = vec![VertexSet::new(); parts];
            for (i, &v) in order[..a].iter().enumerate() {
                split[i % parts].insert(v);
            }
            inst.s = Some(split);
        }
        Kind::CyclesAt => {
            if n == 0 {
                return Err(GenError::Hub);
            }
            inst.x = Some(rng.gen_range(0..n as Vertex));
        }
    }
    Ok(inst)
}

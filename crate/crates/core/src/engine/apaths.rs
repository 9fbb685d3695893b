//! Long A-paths through bipartitions of A into T and A \ T.

use super::{rank_a_paths, Engine, Outcome, SolveError};
use crate::graph::{EdgeSet, Graph, Path, VertexSet};
use crate::spec::PathSpec;

/// Result of processing one bipartition.
enum Processed {
    Done(Outcome),
    /// After deleting `hitting`, only `side` still has a long path among its
    /// own terminals (with the other side removed).
    OneSided {
        side: VertexSet,
        hitting: EdgeSet,
    },
}

fn halves(s: &VertexSet) -> (VertexSet, VertexSet) {
    let cut = s.len() / 2;
    let first: VertexSet = s.iter().take(cut.max(1)).copied().collect();
    let second: VertexSet = s.difference(&first).copied().collect();
    (first, second)
}

fn join(mut ps: Vec<Path>, extra: Path) -> Result<Outcome, SolveError> {
    if let Some(p) = ps.iter().find(|p| p.shares_edge_with(&extra)) {
        return Err(SolveError::Invariant(format!("A-paths {p} and {extra} from opposite sides share an edge")));
    }
    ps.push(extra);
    Ok(Outcome::Packing(ps))
}

impl Engine {
    pub(crate) fn a_paths(&mut self, g: &Graph, a: &VertexSet, k: usize, len: usize) -> Result<Outcome, SolveError> {
        self.guarded(rank_a_paths(len), k, |eng| eng.a_paths_body(g, a, k, len))
    }

    fn a_paths_body(&mut self, g: &Graph, a: &VertexSet, k: usize, len: usize) -> Result<Outcome, SolveError> {
        if a.len() < 2 {
            return Ok(Outcome::Hitting(EdgeSet::new()));
        }
        let spec = PathSpec::a_path(a.clone(), len);
        if k == 1 {
            return self.single(g, &spec);
        }
        let window = spec.with_window(len, Some(2 * len));
        self.strip(g, &window, k, |eng, h, k2| eng.a_paths(h, a, k2, len), |eng, h| eng.a_paths_core(h, a, k, len))
    }

    fn process(
        &mut self,
        g: &Graph,
        a: &VertexSet,
        t: &VertexSet,
        k: usize,
        len: usize,
    ) -> Result<Processed, SolveError> {
        let rest: VertexSet = a.difference(t).copied().collect();
        let x = match self.ab(g, t, &rest, k, len)? {
            Outcome::Packing(ps) => return Ok(Processed::Done(Outcome::Packing(ps))),
            Outcome::Hitting(x) => x,
        };
        let gx = g.without_edges(&x);
        let g1 = gx.without_vertices(&rest);
        let g2 = gx.without_vertices(t);
        let p1 = self.find(&g1, &PathSpec::a_path(t.clone(), len))?;
        let p2 = self.find(&g2, &PathSpec::a_path(rest.clone(), len))?;
        match (p1, p2) {
            (Some(p1), Some(p2)) => {
                let r1 = self.a_paths(&g1, t, k - 1, len)?;
                let x1 = match r1 {
                    Outcome::Packing(ps) => return join(ps, p2).map(Processed::Done),
                    Outcome::Hitting(x1) => x1,
                };
                let x2 = match self.a_paths(&g2, &rest, k - 1, len)? {
                    Outcome::Packing(ps) => return join(ps, p1).map(Processed::Done),
                    Outcome::Hitting(x2) => x2,
                };
                let mut all = x;
                all.extend(x1);
                all.extend(x2);
                Ok(Processed::Done(Outcome::Hitting(all)))
            }
            (None, None) => Ok(Processed::Done(Outcome::Hitting(x))),
            (Some(_), None) => Ok(Processed::OneSided { side: t.clone(), hitting: x }),
            (None, Some(_)) => Ok(Processed::OneSided { side: rest, hitting: x }),
        }
    }

    /// Bipartition descent: keep shrinking the side that still has a long
    /// path; if both halves of that side push it to the outside, the three
    /// hitting sets together cover everything.
    fn a_paths_core(&mut self, g: &Graph, a: &VertexSet, k: usize, len: usize) -> Result<Outcome, SolveError> {
        let (t, _) = halves(a);
        let (mut side, mut x_side) = match self.process(g, a, &t, k, len)? {
            Processed::Done(out) => return Ok(out),
            Processed::OneSided { side, hitting } => (side, hitting),
        };
        loop {
            if side.len() < 2 {
                return Err(SolveError::Invariant("long path on a side with fewer than two terminals".into()));
            }
            let (s1, s2) = halves(&side);
            let x1 = match self.process(g, a, &s1, k, len)? {
                Processed::Done(out) => return Ok(out),
                Processed::OneSided { side: inner, hitting } if inner == s1 => {
                    side = s1;
                    x_side = hitting;
                    continue;
                }
                Processed::OneSided { hitting, .. } => hitting,
            };
            let x2 = match self.process(g, a, &s2, k, len)? {
                Processed::Done(out) => return Ok(out),
                Processed::OneSided { side: inner, hitting } if inner == s2 => {
                    side = s2;
                    x_side = hitting;
                    continue;
                }
                Processed::OneSided { hitting, .. } => hitting,
            };
            let mut all = x_side;
            all.extend(x1);
            all.extend(x2);
            return Ok(Outcome::Hitting(all));
        }
    }
}

//! Paths whose interiors may revisit terminals: A*-B through pendant twins,
//! A*-B* as a union of five restricted solves.

use super::ab::orient;
use super::{rank_astar_b, rank_astar_bstar, Engine, Outcome, SolveError};
use crate::gadget::add_pendant_twins;
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::oracle::minimalize_hitting_set;
use crate::spec::PathSpec;

impl Engine {
    pub(crate) fn astar_b(
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
        self.guarded(rank_astar_b(len), k, |eng| eng.astar_b_body(g, a, b, k, len))
    }

    fn astar_b_body(
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
        if k == 1 {
            return self.single(g, &PathSpec::astar_b(a.clone(), b.clone(), len));
        }
        let (g2, map) = add_pendant_twins(g, a)?;
        let twins = map.terminals.clone();
        match self.ab(&g2, &twins, b, k, len + 1)? {
            Outcome::Packing(ps) => {
                let paths = ps
                    .iter()
                    .map(|p| map.translate_path(g, p).map(|q| orient(q, a, b)))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Outcome::Packing(paths))
            }
            Outcome::Hitting(x) => {
                let spec = PathSpec::ab(twins, b.clone(), len + 1);
                let minimal = minimalize_hitting_set(&g2, &spec, &x, &self.config.oracle)?;
                let mut out = EdgeSet::new();
                for &e in &minimal {
                    match map.original_edge(e) {
                        Some(orig) => {
                            out.insert(orig);
                        }
                        None => {
                            let (u, v) = g2.endpoints(e).expect("edge of the derived graph");
                            let twin = if map.owner.contains_key(&u) { u } else { v };
                            let owner = map.owner[&twin];
                            out.extend(g.incident(owner).iter().map(|&(_, id)| id));
                        }
                    }
                }
                if out.len() > minimal.len() {
                    return Err(SolveError::Invariant(format!(
                        "translated hitting set grew from {} to {} edges",
                        minimal.len(),
                        out.len()
                    )));
                }
                Ok(Outcome::Hitting(out))
            }
        }
    }

    pub(crate) fn astar_bstar(
        &mut self,
        g: &Graph,
        a: &VertexSet,
        b: &VertexSet,
        k: usize,
        len: usize,
    ) -> Result<Outcome, SolveError> {
        self.guarded(rank_astar_bstar(len), k, |eng| eng.astar_bstar_body(g, a, b, k, len))
    }

    fn astar_bstar_body(
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
        let spec = PathSpec::astar_bstar(a.clone(), b.clone(), len);
        if k == 1 {
            return Ok(match self.single(g, &spec)? {
                Outcome::Packing(ps) => Outcome::Packing(ps.into_iter().map(|p| orient(p, a, b)).collect()),
                h => h,
            });
        }
        let window = spec.with_window(len, Some((len + 1) * (len - 1)));
        let out = self.strip(
            g,
            &window,
            k,
            |eng, h, k2| eng.astar_bstar(h, a, b, k2, len),
            |eng, h| eng.astar_bstar_core(h, a, b, k, len),
        )?;
        Ok(match out {
            Outcome::Packing(ps) => Outcome::Packing(ps.into_iter().map(|p| orient(p, a, b)).collect()),
            h => h,
        })
    }

    fn astar_bstar_core(
        &mut self,
        g: &Graph,
        a: &VertexSet,
        b: &VertexSet,
        k: usize,
        len: usize,
    ) -> Result<Outcome, SolveError> {
        let a_only: VertexSet = a.difference(b).copied().collect();
        let b_only: VertexSet = b.difference(a).copied().collect();
        let both: VertexSet = a.intersection(b).copied().collect();
        let starred = [(&a_only, b), (&b_only, a), (a, &b_only), (b, &a_only)];
        let mut union = EdgeSet::new();
        for (s, t) in starred {
            match self.astar_b(g, s, t, k, len)? {
                Outcome::Packing(ps) => return Ok(Outcome::Packing(ps)),
                Outcome::Hitting(x) => union.extend(x),
            }
        }
        match self.a_paths(g, &both, k, len)? {
            Outcome::Packing(ps) => return Ok(Outcome::Packing(ps)),
            Outcome::Hitting(x) => union.extend(x),
        }
        Ok(Outcome::Hitting(union))
    }
}

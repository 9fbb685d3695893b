use crate::bounds::BoundValue;
use crate::graph::{EdgeSet, Path};
use crate::spec::PathSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateBody {
    /// At least `k` pairwise edge-disjoint qualifying objects.
    Packing(Vec<Path>),
    /// An edge set meeting every qualifying object, with its claimed size bound.
    Hitting { edges: EdgeSet, bound: BoundValue },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub spec: PathSpec,
    pub k: usize,
    pub body: CertificateBody,
}

impl Certificate {
    pub fn packing(spec: PathSpec, k: usize, paths: Vec<Path>) -> Self {
        Certificate { spec, k, body: CertificateBody::Packing(paths) }
    }

    pub fn hitting(spec: PathSpec, k: usize, edges: EdgeSet, bound: BoundValue) -> Self {
        Certificate { spec, k, body: CertificateBody::Hitting { edges, bound } }
    }

    pub fn is_packing(&self) -> bool {
        matches!(self.body, CertificateBody::Packing(_))
    }

    pub fn paths(&self) -> Option<&[Path]> {
        match &self.body {
            CertificateBody::Packing(p) => Some(p),
            CertificateBody::Hitting { .. } => None,
        }
    }

    pub fn edges(&self) -> Option<&EdgeSet> {
        match &self.body {
            CertificateBody::Packing(_) => None,
            CertificateBody::Hitting { edges, .. } => Some(edges),
        }
    }
}

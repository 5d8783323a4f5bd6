//! Matchings as mate vectors.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<VertexId>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching { mate: vec![None; n] }
    }

    /// Checks that `mate` is an involution without fixed points.
    pub fn from_mates(mate: Vec<Option<VertexId>>) -> Result<Self> {
        for (v, m) in mate.iter().enumerate() {
            if let Some(u) = *m {
                if u >= mate.len() || u == v || mate[u] != Some(v) {
                    return Err(Error::Input(format!("mate vector is not symmetric at {v}")));
                }
            }
        }
        Ok(Matching { mate })
    }

    pub fn n(&self) -> usize {
        self.mate.len()
    }

    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        self.mate[v]
    }

    pub fn mates(&self) -> &[Option<VertexId>] {
        &self.mate
    }

    pub fn is_matched(&self, v: VertexId) -> bool {
        self.mate[v].is_some()
    }

    pub fn size(&self) -> usize {
        self.mate.iter().flatten().count() / 2
    }

    /// Matched edges `(u, v)` with `u < v`.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&u| v < u).map(|u| (v, u)))
            .collect()
    }

    /// Flips the edges along an alternating path whose first and last
    /// vertices are free: the odd-position edges become matched.
    pub fn augment(&mut self, path: &[VertexId]) {
        debug_assert!(path.len() % 2 == 0);
        for pair in path.chunks_exact(2) {
            self.mate[pair[0]] = Some(pair[1]);
            self.mate[pair[1]] = Some(pair[0]);
        }
    }

    /// Every matched pair must be an edge of `g`.
    pub fn check_in(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.n() != g.n() {
            return Err(format!("matching over {} vertices, graph has {}", self.n(), g.n()));
        }
        for (v, m) in self.mate.iter().enumerate() {
            if let Some(u) = *m {
                if self.mate[u] != Some(v) {
                    return Err(format!("mate({u}) != {v}"));
                }
                if !g.has_arc(v, u) {
                    return Err(format!("matched pair {v}-{u} is not an edge"));
                }
            }
        }
        Ok(())
    }
}

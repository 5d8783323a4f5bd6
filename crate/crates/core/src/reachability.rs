//! Diameter, eccentricities and transitive closure by one pc-list BFS per
//! source.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::ledger::WorkLedger;
use crate::pclist::PCList;
use crate::traversal::BfsEngine;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    /// Some ordered pair is unreachable; `finite_max` is the largest
    /// distance among reachable pairs.
    Infinite { finite_max: usize },
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite { .. } => None,
        }
    }
}

impl std::fmt::Display for Diameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite { finite_max } => write!(f, "infinite (finite max {finite_max})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eccentricity {
    /// Largest distance to a reachable vertex.
    pub value: usize,
    pub reaches_all: bool,
}

/// Reflexive reachability matrix; row `u` holds the vertices reachable from `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachMatrix {
    n: usize,
    rows: Vec<BitSet>,
}

impl ReachMatrix {
    pub fn from_rows(rows: Vec<BitSet>) -> Self {
        ReachMatrix { n: rows.len(), rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> bool {
        self.rows[u].get(v)
    }

    pub fn row(&self, u: usize) -> &BitSet {
        &self.rows[u]
    }

    pub fn to_bools(&self) -> Vec<Vec<bool>> {
        self.rows.iter().map(|r| (0..self.n).map(|v| r.get(v)).collect()).collect()
    }

    /// Closes the relation once more; a transitive closure is a fixed point.
    pub fn reclose(&self) -> ReachMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut row = r.clone();
                for v in r.iter_ones() {
                    row.union_with(&self.rows[v]);
                }
                row
            })
            .collect();
        ReachMatrix::from_rows(rows)
    }
}

/// Runs `visit(source, distances)` for every source, distances in original labels.
fn for_each_source(p: &PCList, ledger: &mut WorkLedger, mut visit: impl FnMut(usize, &[Option<usize>])) -> Result<()> {
    p.require_traversable()?;
    let n = p.n();
    let mut engine = BfsEngine::new(p, ledger);
    let mut dist = vec![None; n];
    for s in 0..n {
        if s > 0 {
            engine.reset(ledger);
        }
        engine.run(p.to_internal(s), ledger);
        for v in 0..n {
            dist[p.to_original(v)] = engine.level[v];
        }
        visit(s, &dist);
    }
    Ok(())
}

pub fn eccentricities(p: &PCList, ledger: &mut WorkLedger) -> Result<Vec<Eccentricity>> {
    let mut out = Vec::with_capacity(p.n());
    for_each_source(p, ledger, |_, dist| {
        out.push(Eccentricity {
            value: dist.iter().flatten().copied().max().unwrap_or(0),
            reaches_all: dist.iter().all(Option::is_some),
        });
    })?;
    Ok(out)
}

/// Largest BFS distance over ordered pairs.
pub fn diameter(p: &PCList, ledger: &mut WorkLedger) -> Result<Diameter> {
    if p.n() == 0 {
        return Err(Error::Input("diameter of the empty graph is undefined".into()));
    }
    let ecc = eccentricities(p, ledger)?;
    let finite_max = ecc.iter().map(|e| e.value).max().unwrap_or(0);
    Ok(if ecc.iter().all(|e| e.reaches_all) {
        Diameter::Finite(finite_max)
    } else {
        Diameter::Infinite { finite_max }
    })
}

pub fn transitive_closure(p: &PCList, ledger: &mut WorkLedger) -> Result<ReachMatrix> {
    let n = p.n();
    let mut rows = Vec::with_capacity(n);
    for_each_source(p, ledger, |_, dist| {
        let mut row = BitSet::new(n);
        for (v, d) in dist.iter().enumerate() {
            if d.is_some() {
                row.insert(v);
            }
        }
        rows.push(row);
    })?;
    Ok(ReachMatrix::from_rows(rows))
}

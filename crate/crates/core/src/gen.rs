//! Seeded instance generators. Every model yields an undirected graph.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{complement, Graph, VertexId};

#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    /// Erdős–Rényi `G(n, p)`.
    Gnp { n: usize, p: f64 },
    /// Complement of a random graph with `round(avg_degree * n / 2)` edges.
    ComplementOfSparse { n: usize, avg_degree: f64 },
    /// The first `ceil(dense_fraction * n)` vertices form a near-clique, the
    /// rest attach with two random edges each.
    Unbalanced { n: usize, dense_fraction: f64 },
    /// Bipartite `G(a, b, p)` with sides `0..a` and `a..a+b`.
    BipartiteGnp { a: usize, b: usize, p: f64 },
    /// `K_{k,k}` minus the perfect matching `{i, k+i}`.
    BipartiteComplementMatching { k: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub model: Model,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(model: Model, seed: u64) -> Self {
        GenSpec { model, seed }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::Parameter(msg.to_string()));
        let prob = |p: f64| (0.0..=1.0).contains(&p);
        match self.model {
            Model::Gnp { n, p } => {
                if n == 0 {
                    return bad("n must be positive");
                }
                if !prob(p) {
                    return bad("p must lie in [0, 1]");
                }
            }
            Model::ComplementOfSparse { n, avg_degree } => {
                if n == 0 {
                    return bad("n must be positive");
                }
                if !(avg_degree >= 0.0 && avg_degree <= (n - 1) as f64) {
                    return bad("avg_degree must lie in [0, n-1]");
                }
            }
            Model::Unbalanced { n, dense_fraction } => {
                if n == 0 {
                    return bad("n must be positive");
                }
                if !prob(dense_fraction) {
                    return bad("dense_fraction must lie in [0, 1]");
                }
            }
            Model::BipartiteGnp { a, b, p } => {
                if a + b == 0 {
                    return bad("a + b must be positive");
                }
                if !prob(p) {
                    return bad("p must lie in [0, 1]");
                }
            }
            Model::BipartiteComplementMatching { k } => {
                if k == 0 {
                    return bad("k must be positive");
                }
            }
        }
        Ok(())
    }

    pub fn model_name(&self) -> &'static str {
        match self.model {
            Model::Gnp { .. } => "gnp",
            Model::ComplementOfSparse { .. } => "complement_of_sparse",
            Model::Unbalanced { .. } => "unbalanced",
            Model::BipartiteGnp { .. } => "bipartite_gnp",
            Model::BipartiteComplementMatching { .. } => "bipartite_complement_matching",
        }
    }
}

pub fn generate(spec: &GenSpec) -> Result<Graph> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let g = match spec.model {
        Model::Gnp { n, p } => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges, false)?
        }
        Model::ComplementOfSparse { n, avg_degree } => {
            let total = n * (n - 1) / 2;
            let want = ((avg_degree * n as f64 / 2.0).round() as usize).min(total);
            let sparse = Graph::from_edges(n, &random_edge_set(n, want, &mut rng), false)?;
            complement(&sparse)
        }
        Model::Unbalanced { n, dense_fraction } => {
            let d = ((dense_fraction * n as f64).ceil() as usize).min(n);
            let mut set = HashSet::new();
            for u in 0..d {
                for v in u + 1..d {
                    if rng.gen_bool(0.95) {
                        set.insert((u, v));
                    }
                }
            }
            if n > 1 {
                for u in d..n {
                    for _ in 0..2 {
                        let mut v = rng.gen_range(0..n - 1);
                        if v >= u {
                            v += 1;
                        }
                        set.insert((u.min(v), u.max(v)));
                    }
                }
            }
            let mut edges: Vec<_> = set.into_iter().collect();
            edges.sort_unstable();
            Graph::from_edges(n, &edges, false)?
        }
        Model::BipartiteGnp { a, b, p } => {
            let mut edges = Vec::new();
            for u in 0..a {
                for v in a..a + b {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(a + b, &edges, false)?
        }
        Model::BipartiteComplementMatching { k } => {
            let edges: Vec<_> = (0..k)
                .flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, k + j)))
                .collect();
            Graph::from_edges(2 * k, &edges, false)?
        }
    };
    Ok(g)
}

/// `count` distinct undirected pairs drawn uniformly.
fn random_edge_set(n: usize, count: usize, rng: &mut ChaCha8Rng) -> Vec<(VertexId, VertexId)> {
    let total = n * (n.saturating_sub(1)) / 2;
    if count * 2 > total {
        let mut all: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        all.shuffle(rng);
        all.truncate(count);
        all.sort_unstable();
        return all;
    }
    let mut set = HashSet::with_capacity(count);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let e = (u.min(v), u.max(v));
        if set.insert(e) {
            out.push(e);
        }
    }
    out.sort_unstable();
    out
}

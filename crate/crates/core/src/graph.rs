//! Plain sorted adjacency-list graphs.
//!
//! Undirected graphs are stored as symmetric digraphs. `m()` always counts
//! directed arcs, so an undirected graph with `e` edges reports `m = 2e`.

use crate::error::{Error, Result};

pub type VertexId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<VertexId>>,
    directed: bool,
}

impl Graph {
    pub fn empty(n: usize, directed: bool) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            directed,
        }
    }

    /// Builds a graph from per-vertex out-lists, sorting and validating them.
    ///
    /// With `directed = false` the lists must already be symmetric.
    pub fn from_adjacency(mut adj: Vec<Vec<VertexId>>, directed: bool) -> Result<Self> {
        let n = adj.len();
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            for w in list.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::Input(format!("duplicate arc {u}->{}", w[0])));
                }
            }
            if let Some(&v) = list.iter().find(|&&v| v >= n || v == u) {
                return Err(Error::Input(format!("invalid arc {u}->{v} (n = {n})")));
            }
        }
        let g = Graph { n, adj, directed };
        if !directed && !g.is_symmetric() {
            return Err(Error::Input("undirected graph has asymmetric lists".into()));
        }
        Ok(g)
    }

    /// Builds a graph from an arc or edge list. Undirected edges are mirrored.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)], directed: bool) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::Input(format!("invalid edge ({u}, {v}) for n = {n}")));
            }
            adj[u].push(v);
            if !directed {
                adj[v].push(u);
            }
        }
        Graph::from_adjacency(adj, directed)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of directed arcs.
    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_symmetric(&self) -> bool {
        self.adj
            .iter()
            .enumerate()
            .all(|(u, list)| list.iter().all(|&v| self.has_arc(v, u)))
    }

    /// Same arcs, tagged undirected when the arc set is symmetric.
    pub fn normalized(mut self) -> Self {
        if self.directed && self.is_symmetric() {
            self.directed = false;
        }
        self
    }

    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    /// Undirected edges `(u, v)` with `u < v`; meaningful for symmetric graphs.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.arcs().filter(|&(u, v)| u < v)
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for (_, v) in self.arcs() {
            d[v] += 1;
        }
        d
    }
}

/// Explicit complement: arc `(u, v)` is present iff it is absent in `g` and `u != v`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let adj = (0..n)
        .map(|u| {
            let nb = g.neighbors(u);
            let mut j = 0;
            let mut out = Vec::with_capacity(n - 1 - nb.len());
            for v in 0..n {
                if j < nb.len() && nb[j] == v {
                    j += 1;
                } else if v != u {
                    out.push(v);
                }
            }
            out
        })
        .collect();
    Graph {
        n,
        adj,
        directed: g.is_directed(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeStats {
    pub out_degrees: Vec<usize>,
    pub min: usize,
    pub max: usize,
    pub mean: f64,
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    let out_degrees: Vec<usize> = (0..g.n()).map(|v| g.out_degree(v)).collect();
    let min = out_degrees.iter().copied().min().unwrap_or(0);
    let max = out_degrees.iter().copied().max().unwrap_or(0);
    let mean = if g.n() == 0 {
        0.0
    } else {
        g.m() as f64 / g.n() as f64
    };
    DegreeStats {
        out_degrees,
        min,
        max,
        mean,
    }
}

/// Small named graphs used by tests, examples and the golden suite.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges, false).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges, false).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges, false).unwrap()
    }

    /// Center 0 joined to leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges, false).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges, false).unwrap()
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(a + b, &edges, false).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn complement_of_complete_is_empty() {
        let c = complement(&complete(4));
        assert_eq!(c.m(), 0);
        assert_eq!(c.n(), 4);
    }

    #[test]
    fn complement_of_empty_is_complete() {
        assert_eq!(complement(&Graph::empty(3, false)), complete(3));
    }

    #[test]
    fn complement_of_p4() {
        let c = complement(&path(4));
        let expected = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 3)], false).unwrap();
        assert_eq!(c, expected);
    }

    #[test]
    fn degree_stats_examples() {
        let s = degree_stats(&complete(4));
        assert_eq!(s.out_degrees, vec![3; 4]);
        let s = degree_stats(&Graph::empty(5, false));
        assert_eq!((s.min, s.max), (0, 0));
        let s = degree_stats(&star(4));
        assert_eq!(s.out_degrees, vec![4, 1, 1, 1, 1]);
        assert_eq!(s.mean, 8.0 / 5.0);
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::from_edges(3, &[(1, 1)], true).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (0, 1)], true).is_err());
        assert!(Graph::from_adjacency(vec![vec![1], vec![]], false).is_err());
    }

    #[test]
    fn petersen_is_cubic() {
        let p = petersen();
        assert!((0..10).all(|v| p.out_degree(v) == 3));
    }
}

//! The partially complemented adjacency list.
//!
//! A [`PCList`] stores, for every vertex, a sorted doubly-linked list plus one
//! switch bit. An unswitched vertex lists its out-neighbors; a switched vertex
//! lists its non-neighbors, so a dense row costs only as much as its
//! complement. `m_tilde` is the number of stored list elements.
//!
//! Seidel-mode lists are kept under an internal relabeling in which the
//! unswitched vertices `V - S` take the labels `0..boundary` and the switched
//! vertices take `boundary..n`. Each list is then split by a separator (the
//! dummy) at the first element with label `>= boundary`; crossing it flips the
//! meaning of the switch bit. Every public result is reported in original
//! labels.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::lists::NeighborLists;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Out,
    In,
    Seidel,
    /// Mixed in- and out-switches.
    GaleBerlekamp,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Relabel {
    to_internal: Vec<usize>,
    to_original: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct PCList {
    n: usize,
    mode: Mode,
    directed: bool,
    /// Out-switches (out, gale-berlekamp), in-switches (in) or the Seidel set,
    /// indexed by internal label.
    switched: BitSet,
    in_switched: Option<BitSet>,
    lists: NeighborLists,
    boundary: usize,
    dummy: Vec<u32>,
    relabel: Option<Relabel>,
    m_tilde: usize,
}

/// Whether a vertex with `deg` listed neighbors out of `n - 1` candidates is
/// cheaper to store complemented.
#[inline]
pub(crate) fn should_switch(deg: usize, candidates: usize) -> bool {
    2 * deg > candidates
}

/// Distributes `(owner, target)` pairs into per-owner lists sorted by target
/// with a counting sort on the target.
pub(crate) fn radix_lists(n_owners: usize, n_targets: usize, pairs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut count = vec![0usize; n_targets + 1];
    for &(_, t) in pairs {
        count[t + 1] += 1;
    }
    for i in 0..n_targets {
        count[i + 1] += count[i];
    }
    let mut sorted = vec![(0usize, 0usize); pairs.len()];
    for &p in pairs {
        sorted[count[p.1]] = p;
        count[p.1] += 1;
    }
    let mut lists = vec![Vec::new(); n_owners];
    for (o, t) in sorted {
        lists[o].push(t);
    }
    lists
}

impl PCList {
    fn assemble(
        g_directed: bool,
        mode: Mode,
        switched: BitSet,
        in_switched: Option<BitSet>,
        lists: Vec<Vec<usize>>,
        boundary: usize,
        relabel: Option<Relabel>,
    ) -> PCList {
        let n = lists.len();
        let dummy = if mode == Mode::Seidel {
            lists
                .iter()
                .map(|l| l.partition_point(|&x| x < boundary) as u32)
                .collect()
        } else {
            Vec::new()
        };
        let lists = NeighborLists::from_lists(lists);
        PCList {
            n,
            mode,
            directed: g_directed,
            switched,
            in_switched,
            m_tilde: lists.total_len(),
            lists,
            boundary,
            dummy,
            relabel,
        }
    }

    /// Plain adjacency list: out mode with no vertex switched.
    pub fn plain(g: &Graph) -> PCList {
        let lists = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
        PCList::assemble(g.is_directed(), Mode::Out, BitSet::new(g.n()), None, lists, g.n(), None)
    }

    /// Minimum out-switching representative: `v` is switched iff storing its
    /// non-neighbors is strictly shorter than storing its neighbors.
    pub fn build_out_representative(g: &Graph) -> PCList {
        let n = g.n();
        let mut switched = BitSet::new(n);
        let mut lists = Vec::with_capacity(n);
        for v in 0..n {
            let nb = g.neighbors(v);
            if should_switch(nb.len(), n - 1) {
                switched.insert(v);
                lists.push(sorted_complement(n, v, nb));
            } else {
                lists.push(nb.to_vec());
            }
        }
        PCList::assemble(g.is_directed(), Mode::Out, switched, None, lists, n, None)
    }

    /// Minimum in-switching representative: `v` is switched iff it appears in
    /// more than half of the other vertices' lists. Size accounting only.
    pub fn build_in_representative(g: &Graph) -> PCList {
        let n = g.n();
        let mut in_lists = vec![Vec::new(); n];
        for (u, v) in g.arcs() {
            in_lists[v].push(u);
        }
        let mut switched = BitSet::new(n);
        let mut lists = vec![Vec::new(); n];
        for (v, preds) in in_lists.iter().enumerate() {
            if should_switch(preds.len(), n.saturating_sub(1)) {
                switched.insert(v);
                for u in sorted_complement(n, v, preds) {
                    lists[u].push(v);
                }
            } else {
                for &u in preds {
                    lists[u].push(v);
                }
            }
        }
        PCList::assemble(g.is_directed(), Mode::In, switched, None, lists, n, None)
    }

    /// Pc-list of the Seidel switch `¬_S(g)` for a given switch set `s`.
    pub fn build_seidel_pclist(g: &Graph, s: &[VertexId]) -> Result<PCList> {
        let n = g.n();
        if !g.is_symmetric() {
            return Err(Error::Mode("Seidel switching requires a symmetric graph".into()));
        }
        let mut in_s = BitSet::new(n);
        for &v in s {
            if v >= n {
                return Err(Error::Input(format!("switch-set vertex {v} out of range")));
            }
            in_s.insert(v);
        }
        let mut to_original: Vec<usize> = (0..n).filter(|&v| !in_s.get(v)).collect();
        let boundary = to_original.len();
        to_original.extend((0..n).filter(|&v| in_s.get(v)));
        let mut to_internal = vec![0; n];
        for (i, &v) in to_original.iter().enumerate() {
            to_internal[v] = i;
        }

        let mut pairs = Vec::new();
        let mut is_nb = BitSet::new(n);
        for v in 0..n {
            for &u in g.neighbors(v) {
                is_nb.insert(u);
            }
            let vs = in_s.get(v);
            for u in 0..n {
                if u == v {
                    continue;
                }
                // Edges inside a side are kept, edges across the cut flipped.
                let keep = if in_s.get(u) == vs { is_nb.get(u) } else { !is_nb.get(u) };
                if keep {
                    pairs.push((to_internal[v], to_internal[u]));
                }
            }
            for &u in g.neighbors(v) {
                is_nb.set(u, false);
            }
        }
        let lists = radix_lists(n, n, &pairs);
        let mut switched = BitSet::new(n);
        for i in boundary..n {
            switched.insert(i);
        }
        let relabel = Relabel {
            to_internal,
            to_original,
        };
        Ok(PCList::assemble(
            false,
            Mode::Seidel,
            switched,
            None,
            lists,
            boundary,
            Some(relabel),
        ))
    }

    /// Greedy mixed in/out representative: apply any single switch that
    /// strictly lowers the arc count until none does. Not guaranteed minimum.
    pub fn greedy_gale_berlekamp(g: &Graph) -> PCList {
        let n = g.n();
        let cand = n.saturating_sub(1);
        let mut rows: Vec<BitSet> = (0..n)
            .map(|u| {
                let mut b = BitSet::new(n);
                for &v in g.neighbors(u) {
                    b.insert(v);
                }
                b
            })
            .collect();
        let mut row_count: Vec<usize> = (0..n).map(|u| g.out_degree(u)).collect();
        let mut col_count = g.in_degrees();
        let mut out_sw = BitSet::new(n);
        let mut in_sw = BitSet::new(n);
        loop {
            let mut changed = false;
            for u in 0..n {
                if should_switch(row_count[u], cand) {
                    for v in (0..n).filter(|&v| v != u) {
                        rows[u].toggle(v);
                        if rows[u].get(v) {
                            col_count[v] += 1;
                        } else {
                            col_count[v] -= 1;
                        }
                    }
                    row_count[u] = cand - row_count[u];
                    out_sw.toggle(u);
                    changed = true;
                }
            }
            for v in 0..n {
                if should_switch(col_count[v], cand) {
                    for (u, row) in rows.iter_mut().enumerate() {
                        if u == v {
                            continue;
                        }
                        row.toggle(v);
                        if row.get(v) {
                            row_count[u] += 1;
                        } else {
                            row_count[u] -= 1;
                        }
                    }
                    col_count[v] = cand - col_count[v];
                    in_sw.toggle(v);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let lists = rows.iter().map(|r| r.iter_ones().collect()).collect();
        PCList::assemble(
            g.is_directed(),
            Mode::GaleBerlekamp,
            out_sw,
            Some(in_sw),
            lists,
            n,
            None,
        )
    }

    /// Assembles an out-mode pc-list from already sorted lists.
    pub(crate) fn from_out_lists(directed: bool, switched: BitSet, lists: Vec<Vec<usize>>) -> PCList {
        let n = lists.len();
        PCList::assemble(directed, Mode::Out, switched, None, lists, n, None)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn m_tilde(&self) -> usize {
        self.m_tilde
    }

    /// True when the represented graph is undirected.
    pub fn is_symmetric(&self) -> bool {
        !self.directed
    }

    pub fn lists(&self) -> &NeighborLists {
        &self.lists
    }

    pub fn switch_bits(&self) -> &BitSet {
        &self.switched
    }

    pub fn in_switch_bits(&self) -> Option<&BitSet> {
        self.in_switched.as_ref()
    }

    /// Switch bit of internal vertex `v`.
    #[inline]
    pub fn is_switched(&self, v: usize) -> bool {
        self.switched.get(v)
    }

    /// First internal label of the switched block (seidel), `n` otherwise.
    pub fn boundary(&self) -> usize {
        self.boundary
    }

    /// Number of elements before the separator in `v`'s list (seidel only).
    pub fn dummy_position(&self, v: usize) -> Option<usize> {
        self.dummy.get(v).map(|&d| d as usize)
    }

    /// Label blocks `[lo, hi)` that the traversal treats separately.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        if self.mode == Mode::Seidel {
            vec![(0, self.boundary), (self.boundary, self.n)]
        } else {
            vec![(0, self.n)]
        }
    }

    #[inline]
    pub fn block_of(&self, label: usize) -> usize {
        usize::from(self.mode == Mode::Seidel && label >= self.boundary)
    }

    /// Whether `v`'s list elements inside `block` are non-neighbors.
    #[inline]
    pub fn complemented(&self, v: usize, block: usize) -> bool {
        self.switched.get(v) ^ (block == 1)
    }

    #[inline]
    pub fn to_original(&self, v: usize) -> VertexId {
        self.relabel.as_ref().map_or(v, |r| r.to_original[v])
    }

    #[inline]
    pub fn to_internal(&self, v: VertexId) -> usize {
        self.relabel.as_ref().map_or(v, |r| r.to_internal[v])
    }

    /// Fails unless the traversal algorithms are defined for this mode.
    pub fn require_traversable(&self) -> Result<()> {
        match self.mode {
            Mode::Out | Mode::Seidel => Ok(()),
            m => Err(Error::Mode(format!("traversal is not defined in {m:?} mode"))),
        }
    }

    /// Neighbors of internal vertex `v` in the represented graph, as sorted
    /// internal labels. Costs Θ(n).
    pub fn decoded_neighbors(&self, v: usize) -> Vec<usize> {
        let n = self.n;
        let mut stored = BitSet::new(n);
        for x in self.lists.iter(v) {
            stored.insert(x);
        }
        (0..n)
            .filter(|&u| u != v && self.decode_arc(v, u, &stored))
            .collect()
    }

    fn decode_arc(&self, v: usize, u: usize, stored_row: &BitSet) -> bool {
        let s = stored_row.get(u);
        match self.mode {
            Mode::Out => s ^ self.switched.get(v),
            Mode::Seidel => s ^ self.complemented(v, self.block_of(u)),
            Mode::In => s ^ self.switched.get(u),
            Mode::GaleBerlekamp => {
                let ins = self.in_switched.as_ref().expect("in bits");
                s ^ self.switched.get(v) ^ ins.get(u)
            }
        }
    }

    /// Explicitly reconstructs the represented graph in original labels.
    pub fn represented_graph(&self) -> Graph {
        let mut adj = vec![Vec::new(); self.n];
        for v in 0..self.n {
            let ov = self.to_original(v);
            adj[ov] = self
                .decoded_neighbors(v)
                .into_iter()
                .map(|u| self.to_original(u))
                .collect();
        }
        Graph::from_adjacency(adj, self.directed).expect("decoded lists are simple")
    }

    /// The stored lists as a graph in original labels (the representative).
    pub fn representative(&self) -> Graph {
        let mut adj = vec![Vec::new(); self.n];
        for v in 0..self.n {
            adj[self.to_original(v)] = self.lists.iter(v).map(|u| self.to_original(u)).collect();
        }
        Graph::from_adjacency(adj, true).expect("stored lists are simple")
    }
}

/// Sorted `{0..n} - nb - {v}` for sorted `nb`.
pub(crate) fn sorted_complement(n: usize, v: usize, nb: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(n.saturating_sub(nb.len() + 1));
    let mut j = 0;
    for u in 0..n {
        if j < nb.len() && nb[j] == u {
            j += 1;
        } else if u != v {
            out.push(u);
        }
    }
    out
}

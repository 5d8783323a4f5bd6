//! Breadth- and depth-first search on a pc-list in O(n + m_tilde) charged work.
//!
//! Both searches keep the undiscovered vertices in ordered doubly-linked lists,
//! one per label block. An unswitched list segment is scanned element by
//! element. For a complemented segment the BFS marks the listed vertices that
//! are still undiscovered and takes every unmarked vertex of the block; the
//! DFS walks the undiscovered list and the stored list side by side, and after
//! each recursive call restarts from the last stored element that is still
//! undiscovered. Each inspected element is either a discovered vertex or a
//! stored list element, which is where the charges go.

use std::collections::VecDeque;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::ledger::{Charge, WorkLedger};
use crate::lists::{NeighborLists, Node, VertexLists};
use crate::pclist::PCList;

/// Search output in original labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraversalResult {
    pub order: Vec<VertexId>,
    pub parent: Vec<Option<VertexId>>,
    /// BFS level; `None` for unreached vertices and for DFS results.
    pub level: Vec<Option<usize>>,
}

fn check_source(p: &PCList, source: VertexId) -> Result<()> {
    p.require_traversable()?;
    if source >= p.n() {
        return Err(Error::Input(format!(
            "source {source} out of range for n = {}",
            p.n()
        )));
    }
    Ok(())
}

/// Undiscovered vertices of a pc-list, one ordered list per label block.
pub(crate) fn undiscovered_lists(p: &PCList, ledger: &mut WorkLedger) -> VertexLists {
    let blocks = p.blocks();
    let mut u = VertexLists::new(p.n(), blocks.len());
    for (b, &(lo, hi)) in blocks.iter().enumerate() {
        for v in lo..hi {
            u.push_back(b, v);
        }
    }
    ledger.charge_n(Charge::Misc, p.n() as u64);
    u
}

/// Reusable BFS state over one pc-list; all labels are internal.
pub(crate) struct BfsEngine<'a> {
    p: &'a PCList,
    blocks: Vec<(usize, usize)>,
    undiscovered: VertexLists,
    mark: BitSet,
    pub level: Vec<Option<usize>>,
    pub parent: Vec<Option<usize>>,
    pub order: Vec<usize>,
    queue: VecDeque<usize>,
}

impl<'a> BfsEngine<'a> {
    pub fn new(p: &'a PCList, ledger: &mut WorkLedger) -> Self {
        BfsEngine {
            p,
            blocks: p.blocks(),
            undiscovered: undiscovered_lists(p, ledger),
            mark: BitSet::new(p.n()),
            level: vec![None; p.n()],
            parent: vec![None; p.n()],
            order: Vec::with_capacity(p.n()),
            queue: VecDeque::new(),
        }
    }

    /// Restores the all-undiscovered state.
    pub fn reset(&mut self, ledger: &mut WorkLedger) {
        self.undiscovered = undiscovered_lists(self.p, ledger);
        self.level.iter_mut().for_each(|l| *l = None);
        self.parent.iter_mut().for_each(|l| *l = None);
        self.order.clear();
    }

    pub fn is_undiscovered(&self, v: usize) -> bool {
        self.undiscovered.contains(v)
    }

    fn discover(&mut self, u: usize, from: Option<usize>, ledger: &mut WorkLedger) {
        self.undiscovered.remove(u);
        self.level[u] = Some(from.map_or(0, |f| self.level[f].unwrap() + 1));
        self.parent[u] = from;
        self.order.push(u);
        self.queue.push_back(u);
        ledger.charge(Charge::Vertex);
    }

    /// Searches from internal vertex `s`, which must be undiscovered.
    /// Vertices found by earlier calls stay discovered.
    pub fn run(&mut self, s: usize, ledger: &mut WorkLedger) {
        let p = self.p;
        let lists = p.lists();
        self.discover(s, None, ledger);
        while let Some(v) = self.queue.pop_front() {
            ledger.charge(Charge::Queue);
            let mut node = lists.head(v);
            for b in 0..self.blocks.len() {
                let hi = self.blocks[b].1;
                if !p.complemented(v, b) {
                    while let Some(nd) = node.filter(|&nd| lists.value(nd) < hi) {
                        ledger.charge(Charge::Element);
                        let u = lists.value(nd);
                        if self.undiscovered.contains(u) {
                            self.discover(u, Some(v), ledger);
                        }
                        node = lists.next(nd);
                    }
                } else {
                    while let Some(nd) = node.filter(|&nd| lists.value(nd) < hi) {
                        ledger.charge(Charge::Element);
                        let u = lists.value(nd);
                        if self.undiscovered.contains(u) {
                            self.mark.insert(u);
                        }
                        node = lists.next(nd);
                    }
                    // Marks are cleared in the same scan; each clear is charged
                    // to the list element that set the mark.
                    let mut cur = self.undiscovered.head(b);
                    while let Some(u) = cur {
                        cur = self.undiscovered.next(u);
                        if self.mark.get(u) {
                            self.mark.set(u, false);
                            ledger.charge(Charge::Element);
                        } else {
                            self.discover(u, Some(v), ledger);
                        }
                    }
                }
            }
        }
    }

    pub fn marks_clear(&self) -> bool {
        self.mark.count_ones() == 0
    }
}

fn to_result(p: &PCList, order: &[usize], parent: &[Option<usize>], level: Option<&[Option<usize>]>) -> TraversalResult {
    let n = p.n();
    let mut out_parent = vec![None; n];
    let mut out_level = vec![None; n];
    for v in 0..n {
        let ov = p.to_original(v);
        out_parent[ov] = parent[v].map(|x| p.to_original(x));
        if let Some(level) = level {
            out_level[ov] = level[v];
        }
    }
    TraversalResult {
        order: order.iter().map(|&v| p.to_original(v)).collect(),
        parent: out_parent,
        level: out_level,
    }
}

/// Breadth-first search of the represented graph from `source`.
pub fn pclist_bfs(p: &PCList, source: VertexId, ledger: &mut WorkLedger) -> Result<TraversalResult> {
    check_source(p, source)?;
    let mut engine = BfsEngine::new(p, ledger);
    engine.run(p.to_internal(source), ledger);
    debug_assert!(engine.marks_clear());
    Ok(to_result(p, &engine.order, &engine.parent, Some(&engine.level)))
}

struct Frame {
    v: usize,
    block: usize,
    started: bool,
    /// Cursor into `v`'s working list.
    node: Option<Node>,
    /// Cursor into the undiscovered list of the current block.
    cursor: Option<usize>,
    restart: bool,
}

impl Frame {
    fn new(v: usize, node: Option<Node>) -> Self {
        Frame {
            v,
            block: 0,
            started: false,
            node,
            cursor: None,
            restart: false,
        }
    }
}

/// Depth-first search of the represented graph from `source`.
///
/// Neighbors are taken in ascending label order. For a complemented segment
/// the stored list is pruned as the search proceeds: an element is unlinked
/// once the walk passes it and it is already discovered.
pub fn pclist_dfs(p: &PCList, source: VertexId, ledger: &mut WorkLedger) -> Result<TraversalResult> {
    check_source(p, source)?;
    let n = p.n();
    let blocks = p.blocks();
    let mut work: NeighborLists = p.lists().clone();
    ledger.charge_n(Charge::Misc, (n + p.m_tilde()) as u64);
    let mut und = undiscovered_lists(p, ledger);
    let mut parent = vec![None; n];
    let mut order = Vec::with_capacity(n);

    let s = p.to_internal(source);
    und.remove(s);
    order.push(s);
    ledger.charge(Charge::Vertex);
    let mut stack = vec![Frame::new(s, work.head(s))];

    while let Some(f) = stack.last_mut() {
        let v = f.v;
        if f.block >= blocks.len() {
            stack.pop();
            ledger.charge(Charge::Queue);
            continue;
        }
        let (lo, hi) = blocks[f.block];
        let in_seg = |work: &NeighborLists, nd: Option<Node>| nd.filter(|&x| work.value(x) < hi);

        if !p.complemented(v, f.block) {
            match in_seg(&work, f.node) {
                Some(nd) => {
                    ledger.charge(Charge::Element);
                    f.node = work.next(nd);
                    let u = work.value(nd);
                    if und.contains(u) {
                        und.remove(u);
                        parent[u] = Some(v);
                        order.push(u);
                        ledger.charge(Charge::Vertex);
                        stack.push(Frame::new(u, work.head(u)));
                    }
                }
                None => {
                    f.block += 1;
                }
            }
            continue;
        }

        if !f.started {
            f.started = true;
            f.cursor = und.head(f.block);
        }
        if f.restart {
            // Walk back from the stored cursor, dropping discovered elements,
            // to the last stored vertex still undiscovered.
            f.restart = false;
            ledger.charge(Charge::Queue);
            let mut w = match f.node {
                Some(nd) => work.prev(nd),
                None => work.tail(v),
            };
            // Elements at or beyond `hi` belong to the next block.
            while let Some(x) = w.filter(|&x| work.value(x) >= hi) {
                w = work.prev(x);
            }
            while let Some(x) = w.filter(|&x| work.value(x) >= lo && !und.contains(work.value(x))) {
                w = work.prev(x);
                work.remove(v, x);
                ledger.charge(Charge::Element);
            }
            f.cursor = match w.filter(|&x| work.value(x) >= lo) {
                Some(x) => und.next(work.value(x)),
                None => und.head(f.block),
            };
        }
        let Some(u) = f.cursor else {
            if f.block + 1 < blocks.len() {
                while let Some(nd) = in_seg(&work, f.node) {
                    ledger.charge(Charge::Element);
                    f.node = work.next(nd);
                }
            }
            f.block += 1;
            f.started = false;
            continue;
        };
        match in_seg(&work, f.node) {
            Some(nd) if work.value(nd) == u => {
                ledger.charge(Charge::Element);
                f.cursor = und.next(u);
                f.node = work.next(nd);
            }
            Some(nd) if work.value(nd) < u => {
                ledger.charge(Charge::Element);
                f.node = work.next(nd);
                work.remove(v, nd);
            }
            _ => {
                und.remove(u);
                parent[u] = Some(v);
                order.push(u);
                ledger.charge(Charge::Vertex);
                f.restart = true;
                stack.push(Frame::new(u, work.head(u)));
            }
        }
    }
    Ok(to_result(p, &order, &parent, None))
}

/// Component id per vertex (original labels), numbered by the smallest
/// original vertex of each component.
pub fn connected_components(p: &PCList, ledger: &mut WorkLedger) -> Result<Vec<usize>> {
    p.require_traversable()?;
    if !p.is_symmetric() {
        return Err(Error::Mode("components need an undirected graph".into()));
    }
    let n = p.n();
    let mut engine = BfsEngine::new(p, ledger);
    let mut comp = vec![usize::MAX; n];
    for ov in 0..n {
        let v = p.to_internal(ov);
        ledger.charge(Charge::Misc);
        if !engine.is_undiscovered(v) {
            continue;
        }
        let start = engine.order.len();
        engine.run(v, ledger);
        for &x in &engine.order[start..] {
            comp[p.to_original(x)] = ov;
        }
    }
    Ok(comp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::{complement, Graph};
    use crate::oracles;

    fn ledger() -> WorkLedger {
        WorkLedger::new()
    }

    #[test]
    fn bfs_on_path() {
        let p = PCList::build_out_representative(&path(3));
        let r = pclist_bfs(&p, 0, &mut ledger()).unwrap();
        assert_eq!(r.level, vec![Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn bfs_on_complete_graph_representative() {
        let p = PCList::build_out_representative(&complete(4));
        let r = pclist_bfs(&p, 0, &mut ledger()).unwrap();
        assert_eq!(r.level, vec![Some(0), Some(1), Some(1), Some(1)]);
    }

    #[test]
    fn bfs_on_complement_of_p4() {
        let g = complement(&path(4));
        let p = PCList::build_out_representative(&g);
        let r = pclist_bfs(&p, 0, &mut ledger()).unwrap();
        assert_eq!(r.level, vec![Some(0), Some(2), Some(1), Some(1)]);
        assert_eq!(r.level, oracles::baseline_bfs(&g, 0));
    }

    #[test]
    fn bfs_ledger_on_k64() {
        let p = PCList::build_out_representative(&complete(64));
        let mut l = ledger();
        pclist_bfs(&p, 0, &mut l).unwrap();
        assert_eq!(l.pclist_element_charge, 0);
        assert!(l.total() <= 8 * 64, "{l:?}");
    }

    #[test]
    fn dfs_on_path() {
        let p = PCList::build_out_representative(&path(3));
        let r = pclist_dfs(&p, 0, &mut ledger()).unwrap();
        assert_eq!(r.order, vec![0, 1, 2]);
        assert_eq!(r.parent, vec![None, Some(0), Some(1)]);
    }

    #[test]
    fn dfs_on_complete_graph_is_a_path() {
        let p = PCList::build_out_representative(&complete(4));
        let r = pclist_dfs(&p, 0, &mut ledger()).unwrap();
        assert_eq!(r.order, vec![0, 1, 2, 3]);
        assert_eq!(r.parent, vec![None, Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn dfs_on_complement_of_p4() {
        let g = complement(&path(4));
        let p = PCList::build_out_representative(&g);
        let r = pclist_dfs(&p, 0, &mut ledger()).unwrap();
        let mut visited = r.order.clone();
        visited.sort();
        assert_eq!(visited, vec![0, 1, 2, 3]);
        oracles::check_dfs(&g, 0, &r.order, &r.parent).unwrap();
    }

    #[test]
    fn seidel_traversal_matches_baseline() {
        let g = petersen();
        let p = PCList::build_seidel_pclist(&g, &[1, 4, 7]).unwrap();
        for s in 0..10 {
            let r = pclist_bfs(&p, s, &mut ledger()).unwrap();
            assert_eq!(r.level, oracles::baseline_bfs(&g, s));
            let d = pclist_dfs(&p, s, &mut ledger()).unwrap();
            oracles::check_dfs(&g, s, &d.order, &d.parent).unwrap();
        }
    }

    #[test]
    fn components_examples() {
        let mut l = ledger();
        let p = PCList::build_out_representative(&Graph::empty(3, false));
        assert_eq!(connected_components(&p, &mut l).unwrap(), vec![0, 1, 2]);
        let p = PCList::build_out_representative(&complete(4));
        assert_eq!(connected_components(&p, &mut l).unwrap(), vec![0; 4]);
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], false).unwrap();
        let p = PCList::build_out_representative(&complement(&two_triangles));
        assert_eq!(connected_components(&p, &mut l).unwrap(), vec![0; 6]);
    }

    #[test]
    fn errors() {
        let p = PCList::build_out_representative(&path(3));
        assert!(matches!(pclist_bfs(&p, 3, &mut ledger()), Err(Error::Input(_))));
        assert!(matches!(pclist_dfs(&p, 9, &mut ledger()), Err(Error::Input(_))));
        let q = PCList::build_in_representative(&path(3));
        assert!(matches!(pclist_bfs(&q, 0, &mut ledger()), Err(Error::Mode(_))));
        let d = PCList::build_out_representative(&Graph::from_edges(2, &[(0, 1)], true).unwrap());
        assert!(matches!(connected_components(&d, &mut ledger()), Err(Error::Mode(_))));
    }
}

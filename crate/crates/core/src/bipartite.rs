//! Hopcroft–Karp on bipartite pc-lists.
//!
//! A vertex is switched when it is adjacent to more than half of the other
//! side; it then stores its non-neighbors on the other side only. A phase
//! copies the lists, builds the level partition with `bfs_star` and extracts
//! a maximal set of disjoint shortest augmenting paths with `dfs_star`.

use std::collections::VecDeque;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::ledger::{Charge, WorkLedger};
use crate::lists::{NeighborLists, VertexLists};
use crate::matching::Matching;
use crate::pclist::{should_switch, sorted_complement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    fn index(self) -> usize {
        match self {
            Side::A => 0,
            Side::B => 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BipartitePCList {
    side: Vec<Side>,
    /// Vertices of each side in label order.
    members: [Vec<VertexId>; 2],
    switched: BitSet,
    lists: NeighborLists,
}

/// Two-colors `g`, giving the smallest vertex of each component side A.
pub fn two_coloring(g: &Graph) -> Result<Vec<Side>> {
    if g.is_directed() {
        return Err(Error::Input("bipartite matching needs an undirected graph".into()));
    }
    let n = g.n();
    let mut side: Vec<Option<Side>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(Side::A);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let other = if side[v] == Some(Side::A) { Side::B } else { Side::A };
            for &u in g.neighbors(v) {
                match side[u] {
                    None => {
                        side[u] = Some(other);
                        queue.push_back(u);
                    }
                    Some(s) if s != other => {
                        return Err(Error::Input(format!("graph is not bipartite (odd cycle through {v}-{u})")));
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(side.into_iter().map(Option::unwrap).collect())
}

impl BipartitePCList {
    /// Bipartite out-representative with sides from [`two_coloring`].
    pub fn build(g: &Graph) -> Result<Self> {
        let side = two_coloring(g)?;
        Self::with_sides(g, side, true)
    }

    /// Same sides, nothing switched.
    pub fn build_plain(g: &Graph) -> Result<Self> {
        let side = two_coloring(g)?;
        Self::with_sides(g, side, false)
    }

    pub fn with_sides(g: &Graph, side: Vec<Side>, switching: bool) -> Result<Self> {
        if g.is_directed() {
            return Err(Error::Input("bipartite matching needs an undirected graph".into()));
        }
        if side.len() != g.n() {
            return Err(Error::Input("side vector length differs from n".into()));
        }
        let mut members = [Vec::new(), Vec::new()];
        for (v, s) in side.iter().enumerate() {
            members[s.index()].push(v);
        }
        let mut switched = BitSet::new(g.n());
        let mut lists = Vec::with_capacity(g.n());
        for v in 0..g.n() {
            let other = &members[1 - side[v].index()];
            let nb = g.neighbors(v);
            if let Some(&u) = nb.iter().find(|&&u| side[u] == side[v]) {
                return Err(Error::Input(format!("edge {v}-{u} inside one side")));
            }
            if switching && should_switch(nb.len(), other.len()) {
                switched.insert(v);
                // Non-neighbors among the other side, in label order.
                let complement = sorted_complement(g.n(), v, nb);
                lists.push(complement.into_iter().filter(|&u| side[u] != side[v]).collect());
            } else {
                lists.push(nb.to_vec());
            }
        }
        Ok(BipartitePCList {
            side,
            members,
            switched,
            lists: NeighborLists::from_lists(lists),
        })
    }

    pub fn n(&self) -> usize {
        self.side.len()
    }

    pub fn side(&self, v: VertexId) -> Side {
        self.side[v]
    }

    pub fn side_len(&self, s: Side) -> usize {
        self.members[s.index()].len()
    }

    pub fn is_switched(&self, v: VertexId) -> bool {
        self.switched.get(v)
    }

    pub fn lists(&self) -> &NeighborLists {
        &self.lists
    }

    pub fn m_tilde(&self) -> usize {
        self.lists.total_len()
    }

    pub fn decoded_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let stored = self.lists.to_vec(v);
        if !self.is_switched(v) {
            return stored;
        }
        let other = &self.members[1 - self.side[v].index()];
        let mut out = Vec::with_capacity(other.len() - stored.len());
        let mut it = stored.iter().peekable();
        for &u in other {
            if it.peek() == Some(&&u) {
                it.next();
            } else {
                out.push(u);
            }
        }
        out
    }

    pub fn represented_graph(&self) -> Graph {
        let adj = (0..self.n()).map(|v| self.decoded_neighbors(v)).collect();
        Graph::from_adjacency(adj, false).expect("bipartite pc-list decodes to a symmetric graph")
    }
}

/// Alternating BFS levels, truncated at the first level holding a free B-vertex.
#[derive(Debug, Clone)]
pub struct LevelPartition {
    /// `levels` list `l` holds the vertices at level `l`, in label order.
    levels: VertexLists,
    level: Vec<Option<usize>>,
    k: Option<usize>,
}

impl LevelPartition {
    pub fn k(&self) -> Option<usize> {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.k.is_none()
    }

    pub fn level(&self, v: VertexId) -> Option<usize> {
        self.level[v]
    }

    /// Vertices at level `l` that have not been removed.
    pub fn at(&self, l: usize) -> Vec<VertexId> {
        if l < self.levels.list_count() {
            self.levels.to_vec(l)
        } else {
            Vec::new()
        }
    }
}

/// Builds the level partition for matching `m`. Free A-vertices form level 1.
pub fn bfs_star(p: &BipartitePCList, m: &Matching, ledger: &mut WorkLedger) -> LevelPartition {
    let n = p.n();
    let lists = p.lists();
    let mut und = VertexLists::new(n, 2);
    for v in 0..n {
        und.push_back(p.side[v].index(), v);
    }
    ledger.charge_n(Charge::Misc, n as u64);
    let mut level = vec![None; n];
    let mut queue = VecDeque::new();
    for &a in &p.members[0] {
        ledger.charge(Charge::Misc);
        if !m.is_matched(a) {
            und.remove(a);
            level[a] = Some(1);
            queue.push_back(a);
            ledger.charge(Charge::Vertex);
        }
    }
    let mut mark = BitSet::new(n);
    let mut k = None;
    while let Some(v) = queue.pop_front() {
        ledger.charge(Charge::Queue);
        let lv = level[v].unwrap();
        if k.is_some_and(|k| lv > k) {
            break;
        }
        let mut discover = |u: usize, und: &mut VertexLists, ledger: &mut WorkLedger| {
            und.remove(u);
            level[u] = Some(lv + 1);
            queue.push_back(u);
            ledger.charge(Charge::Vertex);
        };
        match p.side[v] {
            Side::B => match m.mate(v) {
                None => {
                    k.get_or_insert(lv);
                }
                Some(a) => {
                    if und.contains(a) {
                        discover(a, &mut und, ledger);
                    }
                }
            },
            Side::A if !p.is_switched(v) => {
                for u in lists.iter(v) {
                    ledger.charge(Charge::Element);
                    if und.contains(u) {
                        discover(u, &mut und, ledger);
                    }
                }
            }
            Side::A => {
                for u in lists.iter(v) {
                    ledger.charge(Charge::Element);
                    if und.contains(u) {
                        mark.insert(u);
                    }
                }
                let mut cur = und.head(1);
                while let Some(u) = cur {
                    cur = und.next(u);
                    if mark.get(u) {
                        mark.set(u, false);
                        ledger.charge(Charge::Element);
                    } else {
                        discover(u, &mut und, ledger);
                    }
                }
            }
        }
    }
    let Some(k) = k else {
        return LevelPartition {
            levels: VertexLists::new(n, 0),
            level: vec![None; n],
            k: None,
        };
    };
    // Bucket by level in label order.
    let mut levels = VertexLists::new(n, k + 1);
    for v in 0..n {
        ledger.charge(Charge::Misc);
        match level[v] {
            Some(l) if l <= k => levels.push_back(l, v),
            _ => level[v] = None,
        }
    }
    LevelPartition {
        levels,
        level,
        k: Some(k),
    }
}

struct Frame {
    v: usize,
    node: Option<u32>,
    cursor: Option<usize>,
    started: bool,
    restart: bool,
}

/// Extracts vertex-disjoint shortest augmenting paths, each listed from its
/// free A-end to its free B-end. `work` is the phase's copy of the lists
/// and is consumed.
pub fn dfs_star(
    p: &BipartitePCList,
    work: &mut NeighborLists,
    lp: &mut LevelPartition,
    m: &Matching,
    ledger: &mut WorkLedger,
) -> Vec<Vec<VertexId>> {
    let Some(k) = lp.k else {
        return Vec::new();
    };
    let levels = &mut lp.levels;
    let mut paths = Vec::new();
    let mut stack: Vec<Frame> = Vec::new();
    let frame = |v: usize, work: &NeighborLists| Frame {
        v,
        node: work.head(v),
        cursor: None,
        started: false,
        restart: false,
    };

    while let Some(root) = levels.head(1) {
        levels.remove(root);
        ledger.charge(Charge::Vertex);
        stack.push(frame(root, work));
        while let Some(f) = stack.last_mut() {
            let v = f.v;
            let lv = lp.level[v].unwrap();
            if p.side[v] == Side::B {
                if m.mate(v).is_none() {
                    debug_assert_eq!(lv, k);
                    paths.push(stack.iter().map(|f| f.v).collect());
                    stack.clear();
                    break;
                }
                let a = m.mate(v).unwrap();
                if !f.started && levels.list_of(a) == Some(lv + 1) {
                    f.started = true;
                    levels.remove(a);
                    ledger.charge(Charge::Vertex);
                    stack.push(frame(a, work));
                } else {
                    stack.pop();
                    ledger.charge(Charge::Queue);
                }
                continue;
            }
            let next = lv + 1;
            if next > k {
                stack.pop();
                ledger.charge(Charge::Queue);
                continue;
            }
            let in_next = |levels: &VertexLists, u: usize| levels.list_of(u) == Some(next);
            if !p.is_switched(v) {
                match f.node {
                    Some(nd) => {
                        ledger.charge(Charge::Element);
                        f.node = work.next(nd);
                        let u = work.value(nd);
                        if in_next(levels, u) {
                            levels.remove(u);
                            ledger.charge(Charge::Vertex);
                            stack.push(frame(u, work));
                        }
                    }
                    None => {
                        stack.pop();
                        ledger.charge(Charge::Queue);
                    }
                }
                continue;
            }
            // Merge walk of the stored non-neighbors against the next level.
            if !f.started {
                f.started = true;
                f.cursor = levels.head(next);
            }
            if f.restart {
                f.restart = false;
                ledger.charge(Charge::Queue);
                let mut w = match f.node {
                    Some(nd) => work.prev(nd),
                    None => work.tail(v),
                };
                while let Some(x) = w.filter(|&x| !in_next(levels, work.value(x))) {
                    w = work.prev(x);
                    work.remove(v, x);
                    ledger.charge(Charge::Element);
                }
                f.cursor = match w {
                    Some(x) => levels.next(work.value(x)),
                    None => levels.head(next),
                };
            }
            let Some(u) = f.cursor else {
                stack.pop();
                ledger.charge(Charge::Queue);
                continue;
            };
            match f.node {
                Some(nd) if work.value(nd) == u => {
                    ledger.charge(Charge::Element);
                    f.cursor = levels.next(u);
                    f.node = work.next(nd);
                }
                Some(nd) if work.value(nd) < u => {
                    ledger.charge(Charge::Element);
                    f.node = work.next(nd);
                    work.remove(v, nd);
                }
                _ => {
                    levels.remove(u);
                    ledger.charge(Charge::Vertex);
                    f.restart = true;
                    stack.push(frame(u, work));
                }
            }
        }
    }
    paths
}

#[derive(Debug, Clone)]
pub struct HopcroftKarp {
    pub matching: Matching,
    /// Phases that found at least one path, plus the final empty one.
    pub phases: usize,
    pub phase_work: Vec<WorkLedger>,
    /// Length in edges of the paths found in each phase.
    pub path_lengths: Vec<Vec<usize>>,
}

/// Maximum matching of the represented bipartite graph.
pub fn hopcroft_karp(p: &BipartitePCList, ledger: &mut WorkLedger) -> HopcroftKarp {
    let mut m = Matching::empty(p.n());
    let mut phase_work = Vec::new();
    let mut path_lengths = Vec::new();
    loop {
        let mut phase = WorkLedger::new();
        let mut work = p.lists().clone();
        phase.charge_n(Charge::Misc, (p.n() + p.m_tilde()) as u64);
        let mut lp = bfs_star(p, &m, &mut phase);
        let paths = dfs_star(p, &mut work, &mut lp, &m, &mut phase);
        for path in &paths {
            phase.charge_n(Charge::Misc, path.len() as u64);
            m.augment(path);
        }
        ledger.absorb(&phase);
        phase_work.push(phase);
        if paths.is_empty() {
            break;
        }
        path_lengths.push(paths.iter().map(|p| p.len() - 1).collect());
    }
    HopcroftKarp {
        matching: m,
        phases: phase_work.len(),
        phase_work,
        path_lengths,
    }
}

/// Phase bound `2 * ceil(sqrt(n)) + 1`.
pub fn phase_bound(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r < n {
        r += 1;
    }
    2 * r + 1
}

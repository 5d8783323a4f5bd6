//! Maximum cardinality matching on general graphs over an out-mode pc-list.
//!
//! One phase grows alternating trees one free root at a time, contracting
//! blossoms on the fly. Vertices labeled by an earlier tree of the phase are
//! left alone, so the paths found in a phase are vertex-disjoint. Phases
//! repeat, with every blossom expanded in between, until a phase finds no
//! augmenting path.
//!
//! An unswitched outer vertex scans its neighbor list. A switched outer
//! vertex grows by marking its stored non-neighbors in the unlabeled list and
//! taking everything unmarked; for blossom steps it walks the outer
//! blossoms in the order they became outer and tests members with its
//! adjacency lookup vector. A zero lookup hits a stored non-neighbor, a one
//! merges that blossom away.

use std::collections::VecDeque;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::ledger::{Charge, WorkLedger};
use crate::lists::VertexLists;
use crate::matching::Matching;
use crate::pclist::{Mode, PCList};

const NONE: usize = usize::MAX;

/// Adjacency bit vectors for the switched vertices of a pc-list.
#[derive(Debug, Clone)]
pub struct LookupVectors {
    rows: Vec<Option<BitSet>>,
}

impl LookupVectors {
    pub fn build(p: &PCList, ledger: &mut WorkLedger) -> Self {
        let n = p.n();
        let rows = (0..n)
            .map(|v| {
                if !p.is_switched(v) {
                    return None;
                }
                let mut row = BitSet::full(n);
                row.set(v, false);
                ledger.charge_n(Charge::Misc, n as u64);
                for u in p.lists().iter(v) {
                    row.set(u, false);
                    ledger.charge(Charge::Element);
                }
                Some(row)
            })
            .collect();
        LookupVectors { rows }
    }

    /// `Some(adjacent)` for switched `v`, `None` otherwise.
    pub fn get(&self, v: VertexId, u: VertexId) -> Option<bool> {
        self.rows[v].as_ref().map(|r| r.get(u))
    }

    pub fn row(&self, v: VertexId) -> Option<&BitSet> {
        self.rows[v].as_ref()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Unlabeled,
    Outer,
    Inner,
}

/// Alternating-forest state for one phase.
pub struct Search<'a> {
    p: &'a PCList,
    lookup: &'a LookupVectors,
    mate: Vec<Option<VertexId>>,
    label: Vec<Label>,
    tree: Vec<usize>,
    /// Inner vertex: the outer vertex that labeled it. Outer vertex inside
    /// a blossom: the bridge neighbor used to route paths around the cycle.
    link: Vec<usize>,
    uf: Vec<usize>,
    base: Vec<usize>,
    mem_next: Vec<usize>,
    mem_tail: Vec<usize>,
    unlabeled: VertexLists,
    /// Bases of the current tree's outer blossoms, oldest first.
    out: VertexLists,
    queue: VecDeque<VertexId>,
    mark: BitSet,
    scanned: BitSet,
    stamp: Vec<u32>,
    clock: u32,
    trees: usize,
    /// Zero lookups of each switched vertex, in the order they happened.
    aux: Vec<Vec<VertexId>>,
    /// Free vertices, the candidate roots.
    free: Vec<VertexId>,
    /// Nontrivial blossoms of finished trees.
    blossoms: Vec<Vec<VertexId>>,
    /// Blossom steps that merged a blossom with a vertex still waiting in
    /// the queue.
    pub unscanned_merges: usize,
}

impl<'a> Search<'a> {
    pub fn new(p: &'a PCList, lookup: &'a LookupVectors, m: &Matching, ledger: &mut WorkLedger) -> Result<Self> {
        require_matching_input(p)?;
        let n = p.n();
        if m.n() != n {
            return Err(Error::Input("matching size differs from n".into()));
        }
        let mut unlabeled = VertexLists::new(n, 1);
        let mut free = Vec::new();
        for v in 0..n {
            unlabeled.push_back(0, v);
            if !m.is_matched(v) {
                free.push(v);
            }
        }
        ledger.charge_n(Charge::Misc, n as u64);
        Ok(Search {
            p,
            lookup,
            mate: m.mates().to_vec(),
            label: vec![Label::Unlabeled; n],
            tree: vec![NONE; n],
            link: vec![NONE; n],
            uf: (0..n).collect(),
            base: (0..n).collect(),
            mem_next: vec![NONE; n],
            mem_tail: (0..n).collect(),
            unlabeled,
            out: VertexLists::new(n, 1),
            queue: VecDeque::new(),
            mark: BitSet::new(n),
            scanned: BitSet::new(n),
            stamp: vec![0; n],
            clock: 0,
            trees: 0,
            aux: vec![Vec::new(); n],
            free,
            blossoms: Vec::new(),
            unscanned_merges: 0,
        })
    }

    pub fn label(&self, v: VertexId) -> Label {
        self.label[v]
    }

    fn find(&mut self, v: usize) -> usize {
        let mut r = v;
        while self.uf[r] != r {
            r = self.uf[r];
        }
        let mut c = v;
        while self.uf[c] != r {
            let next = self.uf[c];
            self.uf[c] = r;
            c = next;
        }
        r
    }

    /// Base vertex of `v`'s blossom.
    pub fn blossom_base(&mut self, v: VertexId) -> VertexId {
        let r = self.find(v);
        self.base[r]
    }

    /// Members of `v`'s blossom, sorted.
    pub fn blossom_members(&mut self, v: VertexId) -> Vec<VertexId> {
        let r = self.find(v);
        let mut out = vec![r];
        let mut c = self.mem_next[r];
        while c != NONE {
            out.push(c);
            c = self.mem_next[c];
        }
        out.sort_unstable();
        out
    }

    /// Merges the blossom rooted at `b` into the one rooted at `a`, keeping `a`'s base.
    fn union_into(&mut self, a: usize, b: usize) {
        self.mem_next[self.mem_tail[a]] = b;
        self.mem_tail[a] = self.mem_tail[b];
        self.uf[b] = a;
    }

    /// Makes the free unlabeled vertex `r` the root of a new tree.
    pub fn start_tree(&mut self, r: VertexId, ledger: &mut WorkLedger) -> Result<()> {
        if self.label[r] != Label::Unlabeled || self.mate[r].is_some() {
            return Err(Error::ContractViolation(format!("root {r} must be free and unlabeled")));
        }
        self.trees += 1;
        self.make_outer(r, ledger);
        Ok(())
    }

    fn make_outer(&mut self, v: usize, ledger: &mut WorkLedger) {
        if self.unlabeled.contains(v) {
            self.unlabeled.remove(v);
        }
        if self.mark.get(v) {
            self.mark.set(v, false);
            ledger.charge(Charge::Element);
        }
        self.label[v] = Label::Outer;
        self.tree[v] = self.trees;
        self.out.push_back(0, v);
        self.queue.push_back(v);
        ledger.charge(Charge::Vertex);
    }

    /// Drops the current tree's OUT entries and queue.
    pub fn end_tree(&mut self, ledger: &mut WorkLedger) {
        while let Some(h) = self.out.head(0) {
            self.out.remove(h);
            ledger.charge(Charge::Queue);
            let r = self.find(h);
            if self.mem_next[r] != NONE {
                let members = self.blossom_members(h);
                ledger.charge_n(Charge::Misc, members.len() as u64);
                self.blossoms.push(members);
            }
        }
        ledger.charge_n(Charge::Queue, self.queue.len() as u64);
        self.queue.clear();
    }

    pub fn next_outer(&mut self, ledger: &mut WorkLedger) -> Option<VertexId> {
        let x = self.queue.pop_front();
        if x.is_some() {
            ledger.charge(Charge::Queue);
        }
        x
    }

    /// Grow step along the edge `x`-`y`, `y` unlabeled. Returns an
    /// augmenting path if `y` is free.
    fn grow(&mut self, x: usize, y: usize, ledger: &mut WorkLedger) -> Option<Vec<VertexId>> {
        self.link[y] = x;
        self.unlabeled.remove(y);
        self.label[y] = Label::Inner;
        self.tree[y] = self.trees;
        ledger.charge(Charge::Vertex);
        match self.mate[y] {
            None => Some(self.path_from(y, ledger)),
            Some(z) => {
                self.make_outer(z, ledger);
                None
            }
        }
    }

    /// Path from the root to the free vertex `y`, whose `link` is set.
    fn path_from(&self, y: usize, ledger: &mut WorkLedger) -> Vec<VertexId> {
        let mut path = vec![y];
        let mut v = y;
        loop {
            let pv = self.link[v];
            path.push(pv);
            ledger.charge(Charge::Misc);
            match self.mate[pv] {
                None => break,
                Some(ppv) => {
                    path.push(ppv);
                    v = ppv;
                }
            }
        }
        path.reverse();
        path
    }

    /// Base of the next outer blossom towards the root, if any.
    fn step_up(&mut self, b: usize) -> Option<usize> {
        let inner = self.mate[b]?;
        let up = self.link[inner];
        Some(self.blossom_base(up))
    }

    fn lca(&mut self, x: usize, y: usize, ledger: &mut WorkLedger) -> usize {
        self.clock += 1;
        let stamp = self.clock;
        let mut a = Some(self.blossom_base(x));
        let mut b = Some(self.blossom_base(y));
        while a.is_some() || b.is_some() {
            for side in [&mut a, &mut b] {
                if let Some(v) = *side {
                    ledger.charge(Charge::Misc);
                    if self.stamp[v] == stamp {
                        return v;
                    }
                    self.stamp[v] = stamp;
                    *side = self.step_up(v);
                }
            }
        }
        unreachable!("outer vertices of one tree share the root")
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, ledger: &mut WorkLedger) {
        let target = self.find(b);
        while self.blossom_base(v) != b {
            let vb = self.find(v);
            let inner = self.mate[v].expect("non-root outer vertex is matched");
            self.link[v] = child;
            child = inner;
            let up = self.link[inner];
            // Absorb v's blossom and its mate's into the base blossom. Away
            // from a base, the mate already shares v's blossom.
            if vb != target {
                self.out.remove(self.base[vb]);
                self.union_into(target, vb);
            }
            let ib = self.find(inner);
            if ib != target {
                self.union_into(target, ib);
            }
            if self.label[inner] == Label::Inner {
                self.label[inner] = Label::Outer;
                self.queue.push_back(inner);
            }
            ledger.charge_n(Charge::Misc, 2);
            v = up;
        }
    }

    /// Contracts the odd cycle closed by the edge `x`-`y` between two outer
    /// vertices of the current tree in different blossoms.
    fn blossom_step(&mut self, x: usize, y: usize, ledger: &mut WorkLedger) {
        if !self.scanned.get(y) {
            self.unscanned_merges += 1;
        }
        let b = self.lca(x, y, ledger);
        self.mark_path(x, b, y, ledger);
        self.mark_path(y, b, x, ledger);
    }

    fn same_tree_outer(&self, y: usize) -> bool {
        self.label[y] == Label::Outer && self.tree[y] == self.trees
    }

    /// Processes the outer vertex `x`: grow steps, then blossom steps.
    pub fn find_ap(&mut self, x: VertexId, ledger: &mut WorkLedger) -> Result<Option<Vec<VertexId>>> {
        if !self.same_tree_outer(x) {
            return Err(Error::ContractViolation(format!("vertex {x} is not outer in the current tree")));
        }
        self.scanned.insert(x);
        let p = self.p;
        let lookup = self.lookup;
        let lists = p.lists();
        if !p.is_switched(x) {
            for y in lists.iter(x) {
                ledger.charge(Charge::Element);
                if self.unlabeled.contains(y) {
                    if let Some(path) = self.grow(x, y, ledger) {
                        return Ok(Some(path));
                    }
                }
            }
            for y in lists.iter(x) {
                ledger.charge(Charge::Element);
                if self.same_tree_outer(y) && self.find(y) != self.find(x) {
                    self.blossom_step(x, y, ledger);
                }
            }
            return Ok(None);
        }

        for y in lists.iter(x) {
            ledger.charge(Charge::Element);
            if self.unlabeled.contains(y) {
                self.mark.insert(y);
            }
        }
        let mut cur = self.unlabeled.head(0);
        while let Some(y) = cur {
            cur = self.unlabeled.next(y);
            if !self.unlabeled.contains(y) {
                continue;
            }
            if self.mark.get(y) {
                self.mark.set(y, false);
                ledger.charge(Charge::Element);
            } else if let Some(path) = self.grow(x, y, ledger) {
                for u in lists.iter(x) {
                    ledger.charge(Charge::Element);
                    self.mark.set(u, false);
                }
                return Ok(Some(path));
            }
        }

        let row = lookup.row(x).expect("switched vertex has a lookup vector");
        let mut cur = self.out.head(0);
        while let Some(bb) = cur {
            cur = self.out.next(bb);
            ledger.charge(Charge::Queue);
            if !self.out.contains(bb) || self.find(bb) == self.find(x) {
                continue;
            }
            let mut m = self.find(bb);
            while m != NONE {
                if row.get(m) {
                    self.blossom_step(x, m, ledger);
                    break;
                }
                ledger.charge(Charge::Element);
                self.aux[x].push(m);
                m = self.mem_next[m];
            }
        }
        Ok(None)
    }

    pub fn aux_list(&self, x: VertexId) -> &[VertexId] {
        &self.aux[x]
    }
}

fn require_matching_input(p: &PCList) -> Result<()> {
    if p.mode() != Mode::Out {
        return Err(Error::Mode(format!("general matching needs an out-mode pc-list, got {:?}", p.mode())));
    }
    if !p.is_symmetric() {
        return Err(Error::Input("matching needs an undirected graph".into()));
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct ApSet {
    /// Vertex-disjoint augmenting paths, each from its root to its free end.
    pub paths: Vec<Vec<VertexId>>,
    /// Blossoms with more than one vertex at the end of the search.
    pub blossoms: Vec<Vec<VertexId>>,
    /// Zero lookups per switched vertex.
    pub aux_lists: Vec<Vec<VertexId>>,
    pub unscanned_merges: usize,
}

/// One phase: disjoint augmenting paths for `m`, searched tree by tree.
pub fn find_ap_set(p: &PCList, lookup: &LookupVectors, m: &Matching, ledger: &mut WorkLedger) -> Result<ApSet> {
    let mut s = Search::new(p, lookup, m, ledger)?;
    let mut paths = Vec::new();
    for i in 0..s.free.len() {
        let r = s.free[i];
        ledger.charge(Charge::Misc);
        if s.label[r] != Label::Unlabeled {
            continue;
        }
        s.start_tree(r, ledger)?;
        while let Some(x) = s.next_outer(ledger) {
            if let Some(path) = s.find_ap(x, ledger)? {
                paths.push(path);
                break;
            }
        }
        s.end_tree(ledger);
    }
    Ok(ApSet {
        paths,
        blossoms: s.blossoms,
        aux_lists: s.aux,
        unscanned_merges: s.unscanned_merges,
    })
}

#[derive(Debug, Clone)]
pub struct GeneralMatching {
    pub matching: Matching,
    /// Phases run, including the final one that finds nothing.
    pub phases: usize,
    /// Work of each phase's `find_ap_set` call.
    pub phase_work: Vec<WorkLedger>,
}

/// Maximum matching of the graph represented by an out-mode pc-list.
pub fn maximum_matching_pclist(p: &PCList, ledger: &mut WorkLedger) -> Result<GeneralMatching> {
    require_matching_input(p)?;
    let lookup = LookupVectors::build(p, ledger);
    let mut m = Matching::empty(p.n());
    let mut phase_work = Vec::new();
    loop {
        let mut phase = WorkLedger::new();
        let ap = find_ap_set(p, &lookup, &m, &mut phase)?;
        ledger.absorb(&phase);
        phase_work.push(phase);
        for path in &ap.paths {
            ledger.charge_n(Charge::Misc, path.len() as u64);
            m.augment(path);
        }
        if ap.paths.is_empty() {
            break;
        }
    }
    Ok(GeneralMatching {
        matching: m,
        phases: phase_work.len(),
        phase_work,
    })
}

/// Maximum matching of `g` through its out-representative.
pub fn maximum_matching(g: &Graph, ledger: &mut WorkLedger) -> Result<GeneralMatching> {
    if g.is_directed() {
        return Err(Error::Input("matching needs an undirected graph".into()));
    }
    maximum_matching_pclist(&PCList::build_out_representative(g), ledger)
}

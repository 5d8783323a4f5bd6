//! Index-linked list structures.
//!
//! [`NeighborLists`] stores one doubly-linked list per vertex in a single
//! arena, so an element can be unlinked in O(1) given its handle.
//! [`VertexLists`] threads vertex ids through a family of disjoint ordered
//! lists (undiscovered sets, BFS levels), one list per vertex at most.

pub const NIL: u32 = u32::MAX;

/// Handle of an element inside a [`NeighborLists`] arena.
pub type Node = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborLists {
    val: Vec<u32>,
    prev: Vec<u32>,
    next: Vec<u32>,
    head: Vec<u32>,
    tail: Vec<u32>,
    len: Vec<u32>,
    total: usize,
}

impl NeighborLists {
    /// Builds lists from per-vertex sequences; order is preserved.
    pub fn from_lists<I, L>(lists: I) -> Self
    where
        I: IntoIterator<Item = L>,
        L: IntoIterator<Item = usize>,
    {
        let mut out = NeighborLists {
            val: Vec::new(),
            prev: Vec::new(),
            next: Vec::new(),
            head: Vec::new(),
            tail: Vec::new(),
            len: Vec::new(),
            total: 0,
        };
        for list in lists {
            let start = out.val.len();
            for x in list {
                let idx = out.val.len() as u32;
                out.val.push(x as u32);
                out.prev.push(if idx as usize == start { NIL } else { idx - 1 });
                out.next.push(idx + 1);
            }
            let end = out.val.len();
            if end > start {
                out.next[end - 1] = NIL;
                out.head.push(start as u32);
                out.tail.push((end - 1) as u32);
            } else {
                out.head.push(NIL);
                out.tail.push(NIL);
            }
            out.len.push((end - start) as u32);
        }
        out.total = out.val.len();
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.head.len()
    }

    /// Number of live elements across all lists.
    pub fn total_len(&self) -> usize {
        self.total
    }

    #[inline]
    pub fn len(&self, v: usize) -> usize {
        self.len[v] as usize
    }

    #[inline]
    pub fn head(&self, v: usize) -> Option<Node> {
        opt(self.head[v])
    }

    #[inline]
    pub fn tail(&self, v: usize) -> Option<Node> {
        opt(self.tail[v])
    }

    #[inline]
    pub fn next(&self, node: Node) -> Option<Node> {
        opt(self.next[node as usize])
    }

    #[inline]
    pub fn prev(&self, node: Node) -> Option<Node> {
        opt(self.prev[node as usize])
    }

    #[inline]
    pub fn value(&self, node: Node) -> usize {
        self.val[node as usize] as usize
    }

    /// Unlinks `node` from the list of vertex `owner`.
    pub fn remove(&mut self, owner: usize, node: Node) {
        let i = node as usize;
        let (p, n) = (self.prev[i], self.next[i]);
        if p == NIL {
            self.head[owner] = n;
        } else {
            self.next[p as usize] = n;
        }
        if n == NIL {
            self.tail[owner] = p;
        } else {
            self.prev[n as usize] = p;
        }
        self.len[owner] -= 1;
        self.total -= 1;
    }

    pub fn iter(&self, v: usize) -> NeighborIter<'_> {
        NeighborIter {
            lists: self,
            cur: self.head[v],
        }
    }

    pub fn to_vec(&self, v: usize) -> Vec<usize> {
        self.iter(v).collect()
    }
}

#[inline]
fn opt(x: u32) -> Option<u32> {
    if x == NIL {
        None
    } else {
        Some(x)
    }
}

pub struct NeighborIter<'a> {
    lists: &'a NeighborLists,
    cur: u32,
}

impl Iterator for NeighborIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.cur == NIL {
            return None;
        }
        let v = self.lists.val[self.cur as usize] as usize;
        self.cur = self.lists.next[self.cur as usize];
        Some(v)
    }
}

/// A family of ordered doubly-linked lists over vertex ids `0..n`.
///
/// Each vertex belongs to at most one list. A removed vertex keeps its
/// `next` pointer, so a cursor parked on it can still move forward.
#[derive(Clone, Debug)]
pub struct VertexLists {
    prev: Vec<u32>,
    next: Vec<u32>,
    owner: Vec<u32>,
    head: Vec<u32>,
    tail: Vec<u32>,
    len: Vec<usize>,
}

impl VertexLists {
    pub fn new(n: usize, lists: usize) -> Self {
        VertexLists {
            prev: vec![NIL; n],
            next: vec![NIL; n],
            owner: vec![NIL; n],
            head: vec![NIL; lists],
            tail: vec![NIL; lists],
            len: vec![0; lists],
        }
    }

    pub fn list_count(&self) -> usize {
        self.head.len()
    }

    /// Appends `v` to the end of list `l`.
    pub fn push_back(&mut self, l: usize, v: usize) {
        debug_assert_eq!(self.owner[v], NIL, "vertex already listed");
        let t = self.tail[l];
        self.prev[v] = t;
        self.next[v] = NIL;
        if t == NIL {
            self.head[l] = v as u32;
        } else {
            self.next[t as usize] = v as u32;
        }
        self.tail[l] = v as u32;
        self.owner[v] = l as u32;
        self.len[l] += 1;
    }

    pub fn remove(&mut self, v: usize) {
        let l = self.owner[v];
        debug_assert_ne!(l, NIL, "vertex not listed");
        let l = l as usize;
        let (p, n) = (self.prev[v], self.next[v]);
        if p == NIL {
            self.head[l] = n;
        } else {
            self.next[p as usize] = n;
        }
        if n == NIL {
            self.tail[l] = p;
        } else {
            self.prev[n as usize] = p;
        }
        self.owner[v] = NIL;
        self.len[l] -= 1;
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.owner[v] != NIL
    }

    #[inline]
    pub fn list_of(&self, v: usize) -> Option<usize> {
        opt(self.owner[v]).map(|l| l as usize)
    }

    #[inline]
    pub fn head(&self, l: usize) -> Option<usize> {
        opt(self.head[l]).map(|v| v as usize)
    }

    /// Successor of `v`. For a removed vertex this is its successor at the
    /// time of removal.
    #[inline]
    pub fn next(&self, v: usize) -> Option<usize> {
        opt(self.next[v]).map(|v| v as usize)
    }

    #[inline]
    pub fn len(&self, l: usize) -> usize {
        self.len[l]
    }

    #[inline]
    pub fn is_empty(&self, l: usize) -> bool {
        self.len[l] == 0
    }

    pub fn to_vec(&self, l: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len[l]);
        let mut cur = self.head(l);
        while let Some(v) = cur {
            out.push(v);
            cur = self.next(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighbor_lists_remove() {
        let mut l = NeighborLists::from_lists(vec![vec![1, 2, 3], vec![], vec![0]]);
        assert_eq!(l.total_len(), 4);
        let mid = l.next(l.head(0).unwrap()).unwrap();
        l.remove(0, mid);
        assert_eq!(l.to_vec(0), vec![1, 3]);
        let h = l.head(0).unwrap();
        l.remove(0, h);
        let t = l.tail(0).unwrap();
        l.remove(0, t);
        assert_eq!(l.len(0), 0);
        assert!(l.head(0).is_none() && l.tail(0).is_none());
        assert_eq!(l.to_vec(2), vec![0]);
        assert_eq!(l.total_len(), 1);
    }

    #[test]
    fn vertex_lists_keep_next_after_removal() {
        let mut u = VertexLists::new(5, 2);
        for v in [0, 2, 4] {
            u.push_back(0, v);
        }
        u.push_back(1, 1);
        u.remove(2);
        assert_eq!(u.to_vec(0), vec![0, 4]);
        assert_eq!(u.next(2), Some(4));
        assert!(!u.contains(2));
        assert_eq!(u.list_of(1), Some(1));
        assert_eq!(u.len(0), 2);
    }
}

//! Reference implementations used to check the pc-list algorithms.
//!
//! Nothing here touches the pc-list modules: every routine works from the
//! plain [`Graph`] or from an explicit adjacency matrix.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwitchKind {
    Out,
    In,
    Seidel,
    GaleBerlekamp,
}

fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.arcs() {
        m[u][v] = true;
    }
    m
}

/// Applies out-, in- and Seidel switches to the explicit adjacency matrix.
pub fn apply_switches(
    g: &Graph,
    out_set: &[VertexId],
    in_set: &[VertexId],
    seidel_set: &[VertexId],
) -> Result<Graph> {
    let n = g.n();
    if !seidel_set.is_empty() && !g.is_symmetric() {
        return Err(Error::Mode("Seidel switches need a symmetric graph".into()));
    }
    if let Some(&v) = out_set.iter().chain(in_set).chain(seidel_set).find(|&&v| v >= n) {
        return Err(Error::Input(format!("vertex {v} out of range")));
    }
    let mut m = matrix(g);
    for &v in out_set {
        for u in 0..n {
            if u != v {
                m[v][u] = !m[v][u];
            }
        }
    }
    for &v in in_set {
        for (u, row) in m.iter_mut().enumerate() {
            if u != v {
                row[v] = !row[v];
            }
        }
    }
    for &v in seidel_set {
        for u in 0..n {
            if u != v {
                m[v][u] = !m[v][u];
                m[u][v] = !m[u][v];
            }
        }
    }
    let adj = m
        .iter()
        .map(|row| (0..n).filter(|&u| row[u]).collect())
        .collect();
    Graph::from_adjacency(adj, g.is_directed())
}

pub const MIN_REP_CAP: usize = 14;
pub const GALE_BERLEKAMP_CAP: usize = 10;

/// Exact minimum arc count over the switching class, by enumeration.
pub fn brute_min_representative(g: &Graph, kind: SwitchKind) -> Result<usize> {
    let n = g.n();
    let cap = if kind == SwitchKind::GaleBerlekamp {
        GALE_BERLEKAMP_CAP
    } else {
        MIN_REP_CAP
    };
    if n > cap {
        return Err(Error::Size { n, cap });
    }
    if kind == SwitchKind::Seidel && !g.is_symmetric() {
        return Err(Error::Mode("Seidel switching needs a symmetric graph".into()));
    }
    let all: u64 = (1u64 << n) - 1;
    let rows: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &u| acc | 1 << u))
        .collect();
    let cols: Vec<u64> = (0..n)
        .map(|v| (0..n).filter(|&u| rows[u] >> v & 1 == 1).fold(0u64, |a, u| a | 1 << u))
        .collect();
    let count_rows = |rows: &[u64], out_mask: u64, in_mask: u64| -> usize {
        rows.iter()
            .enumerate()
            .map(|(v, &r)| {
                let mut r = r ^ (in_mask & !(1 << v));
                if out_mask >> v & 1 == 1 {
                    r ^= all & !(1 << v);
                }
                r.count_ones() as usize
            })
            .sum()
    };
    let subsets = 1u64 << n;
    let best = match kind {
        SwitchKind::Out => (0..subsets).map(|u| count_rows(&rows, u, 0)).min(),
        SwitchKind::In => (0..subsets).map(|u| count_rows(&cols, u, 0)).min(),
        SwitchKind::Seidel => (0..subsets)
            .map(|s| {
                rows.iter()
                    .enumerate()
                    .map(|(v, &r)| {
                        let across = if s >> v & 1 == 1 { all & !s } else { s };
                        (r ^ (across & !(1 << v))).count_ones() as usize
                    })
                    .sum()
            })
            .min(),
        SwitchKind::GaleBerlekamp => (0..subsets)
            .flat_map(|o| (0..subsets).map(move |i| (o, i)))
            .map(|(o, i)| count_rows(&rows, o, i))
            .min(),
    };
    Ok(best.unwrap_or(0))
}

/// BFS levels from `s`; `None` for unreachable vertices.
pub fn baseline_bfs(g: &Graph, s: VertexId) -> Vec<Option<usize>> {
    let mut level = vec![None; g.n()];
    let mut q = VecDeque::new();
    level[s] = Some(0);
    q.push_back(s);
    while let Some(v) = q.pop_front() {
        let d = level[v].unwrap();
        for &u in g.neighbors(v) {
            if level[u].is_none() {
                level[u] = Some(d + 1);
                q.push_back(u);
            }
        }
    }
    level
}

pub fn reachable(g: &Graph, s: VertexId) -> Vec<bool> {
    baseline_bfs(g, s).iter().map(Option::is_some).collect()
}

/// Plain recursive-order DFS from `s`, neighbors in ascending order.
pub fn baseline_dfs(g: &Graph, s: VertexId) -> (Vec<VertexId>, Vec<Option<VertexId>>) {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut parent = vec![None; n];
    let mut order = vec![s];
    seen[s] = true;
    let mut stack = vec![(s, 0usize)];
    while let Some(top) = stack.last_mut() {
        let (v, i) = *top;
        if i < g.neighbors(v).len() {
            top.1 += 1;
            let u = g.neighbors(v)[i];
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(v);
                order.push(u);
                stack.push((u, 0));
            }
        } else {
            stack.pop();
        }
    }
    (order, parent)
}

/// Checks that `order`/`parent` describe a legal depth-first search of `g`
/// from `source` that visits exactly the reachable set.
pub fn check_dfs(
    g: &Graph,
    source: VertexId,
    order: &[VertexId],
    parent: &[Option<VertexId>],
) -> std::result::Result<(), String> {
    let n = g.n();
    let reach = reachable(g, source);
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(format!("vertex {v} repeated or out of range"));
        }
        seen[v] = true;
    }
    if seen != reach {
        return Err("visit set differs from reachability".into());
    }
    if order.first() != Some(&source) || parent[source].is_some() {
        return Err("order must start at the source with no parent".into());
    }
    let mut visited = vec![false; n];
    visited[source] = true;
    let mut stack = vec![source];
    let has_unvisited = |v: VertexId, visited: &[bool]| g.neighbors(v).iter().any(|&u| !visited[u]);
    for &w in &order[1..] {
        let p = parent[w].ok_or_else(|| format!("vertex {w} has no parent"))?;
        if !g.has_arc(p, w) {
            return Err(format!("parent arc {p}->{w} not in graph"));
        }
        while let Some(&top) = stack.last() {
            if top == p {
                break;
            }
            if has_unvisited(top, &visited) {
                return Err(format!("{top} still had an unvisited neighbor when {w} was entered"));
            }
            stack.pop();
        }
        if stack.is_empty() {
            return Err(format!("parent {p} of {w} is not on the DFS stack"));
        }
        visited[w] = true;
        stack.push(w);
    }
    Ok(())
}

/// All-pairs distances.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.arcs() {
        d[u][v] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i][k];
            if dik == inf {
                continue;
            }
            for j in 0..n {
                let via = dik + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d.into_iter()
        .map(|row| row.into_iter().map(|x| (x < inf).then_some(x)).collect())
        .collect()
}

/// `None` when some ordered pair is unreachable.
pub fn diameter_oracle(g: &Graph) -> Option<usize> {
    let d = floyd_warshall(g);
    let mut best = 0;
    for row in &d {
        for x in row {
            best = best.max((*x)?);
        }
    }
    Some(best)
}

pub fn closure_oracle(g: &Graph) -> Vec<Vec<bool>> {
    floyd_warshall(g)
        .into_iter()
        .map(|row| row.into_iter().map(|x| x.is_some()).collect())
        .collect()
}

/// Component id per vertex via union-find; ids are the smallest member.
pub fn components_oracle(g: &Graph) -> Vec<usize> {
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let nx = p[x];
            p[x] = r;
            x = nx;
        }
        r
    }
    let n = g.n();
    let mut p: Vec<usize> = (0..n).collect();
    for (u, v) in g.arcs() {
        let (a, b) = (find(&mut p, u), find(&mut p, v));
        if a != b {
            p[a.max(b)] = a.min(b);
        }
    }
    (0..n).map(|v| find(&mut p, v)).collect()
}

pub const BRUTE_MATCHING_CAP: usize = 12;

/// Maximum matching size by exhaustive search over vertex subsets.
pub fn max_matching_bruteforce(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > BRUTE_MATCHING_CAP {
        return Err(Error::Size {
            n,
            cap: BRUTE_MATCHING_CAP,
        });
    }
    let rows: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |a, &u| a | 1 << u))
        .collect();
    let full = (1usize << n) - 1;
    // best[mask]: maximum matching inside the vertex set `mask`.
    let mut best = vec![0u8; full + 1];
    for mask in 1..=full {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut b = best[rest];
        let mut cand = rows[v] as usize & rest;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            b = b.max(1 + best[rest & !(1 << u)]);
        }
        best[mask] = b;
    }
    Ok(best[full] as usize)
}

/// Maximum bipartite matching size by DP over subsets of the `right` side.
pub fn max_bipartite_matching_bruteforce(
    g: &Graph,
    left: &[VertexId],
    right: &[VertexId],
) -> Result<usize> {
    if right.len() > 16 {
        return Err(Error::Size {
            n: right.len(),
            cap: 16,
        });
    }
    let full = 1usize << right.len();
    let mut reach = vec![false; full];
    reach[0] = true;
    for &a in left {
        let nbr: Vec<usize> = (0..right.len()).filter(|&j| g.has_arc(a, right[j])).collect();
        let mut next = reach.clone();
        for mask in 0..full {
            if reach[mask] {
                for &j in &nbr {
                    if mask >> j & 1 == 0 {
                        next[mask | 1 << j] = true;
                    }
                }
            }
        }
        reach = next;
    }
    Ok((0..full)
        .filter(|&m| reach[m])
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// Augmenting-path (Kuhn) maximum bipartite matching size.
pub fn kuhn_matching(g: &Graph, left: &[VertexId]) -> usize {
    fn try_kuhn(g: &Graph, v: usize, seen: &mut [bool], mate: &mut [Option<usize>]) -> bool {
        for &u in g.neighbors(v) {
            if seen[u] {
                continue;
            }
            seen[u] = true;
            if mate[u].is_none_or(|w| try_kuhn(g, w, seen, mate)) {
                mate[u] = Some(v);
                return true;
            }
        }
        false
    }
    let mut mate = vec![None; g.n()];
    let mut size = 0;
    for &a in left {
        let mut seen = vec![false; g.n()];
        if try_kuhn(g, a, &mut seen, &mut mate) {
            size += 1;
        }
    }
    size
}

/// Textbook O(n^3) Edmonds blossom algorithm on the adjacency matrix.
/// Returns the mate array.
pub fn edmonds(g: &Graph) -> Vec<Option<VertexId>> {
    let n = g.n();
    let adj = matrix(g);
    let mut mate: Vec<Option<usize>> = vec![None; n];
    for root in 0..n {
        if mate[root].is_some() {
            continue;
        }
        if let Some(path_end) = edmonds_search(&adj, &mut mate, root) {
            let _ = path_end;
        }
    }
    mate
}

fn edmonds_search(adj: &[Vec<bool>], mate: &mut [Option<usize>], root: usize) -> Option<usize> {
    let n = adj.len();
    let mut used = vec![false; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    used[root] = true;
    let mut q = VecDeque::from([root]);

    let lca = |base: &[usize], parent: &[Option<usize>], mate: &[Option<usize>], a: usize, b: usize| {
        let mut seen = vec![false; n];
        let mut a = a;
        loop {
            a = base[a];
            seen[a] = true;
            match mate[a] {
                None => break,
                Some(m) => a = parent[m].expect("tree parent"),
            }
        }
        let mut b = b;
        loop {
            b = base[b];
            if seen[b] {
                return b;
            }
            b = parent[mate[b].expect("matched")].expect("tree parent");
        }
    };

    while let Some(v) = q.pop_front() {
        for to in 0..n {
            if !adj[v][to] || base[v] == base[to] || mate[v] == Some(to) {
                continue;
            }
            if to == root || mate[to].is_some_and(|m| parent[m].is_some()) {
                let cur = lca(&base, &parent, mate, v, to);
                let mut blossom = vec![false; n];
                let mark = |mut x: usize, b: usize, mut child: usize, parent: &mut [Option<usize>], blossom: &mut [bool]| {
                    while base[x] != b {
                        let m = mate[x].expect("matched");
                        blossom[base[x]] = true;
                        blossom[base[m]] = true;
                        parent[x] = Some(child);
                        child = m;
                        x = parent[m].expect("tree parent");
                    }
                };
                mark(v, cur, to, &mut parent, &mut blossom);
                mark(to, cur, v, &mut parent, &mut blossom);
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = cur;
                        if !used[i] {
                            used[i] = true;
                            q.push_back(i);
                        }
                    }
                }
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => {
                        let mut x = Some(to);
                        while let Some(cur) = x {
                            let pv = parent[cur].expect("path parent");
                            let ppv = mate[pv];
                            mate[cur] = Some(pv);
                            mate[pv] = Some(cur);
                            x = ppv;
                        }
                        return Some(to);
                    }
                    Some(m) => {
                        used[m] = true;
                        q.push_back(m);
                    }
                }
            }
        }
    }
    None
}

pub fn matching_size(mate: &[Option<VertexId>]) -> usize {
    mate.iter().filter(|m| m.is_some()).count() / 2
}

/// Explicit contraction: every set of `beta` becomes one vertex; other
/// vertices stay singletons. New ids follow the smallest original member.
/// Returns the contracted graph and the old-to-new id map.
pub fn contract_oracle(g: &Graph, beta: &[Vec<VertexId>]) -> Result<(Graph, Vec<usize>)> {
    let n = g.n();
    let mut group = vec![usize::MAX; n];
    for (i, set) in beta.iter().enumerate() {
        for &v in set {
            if v >= n || group[v] != usize::MAX {
                return Err(Error::Input(format!("vertex {v} invalid or repeated")));
            }
            group[v] = i;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut group_id = vec![usize::MAX; beta.len()];
    let mut next = 0;
    for v in 0..n {
        let id = match group[v] {
            usize::MAX => {
                next += 1;
                next - 1
            }
            gi => {
                if group_id[gi] == usize::MAX {
                    group_id[gi] = next;
                    next += 1;
                }
                group_id[gi]
            }
        };
        map[v] = id;
    }
    let mut m = vec![vec![false; next]; next];
    for (u, v) in g.arcs() {
        if map[u] != map[v] {
            m[map[u]][map[v]] = true;
        }
    }
    let adj = m
        .iter()
        .map(|row| (0..next).filter(|&j| row[j]).collect())
        .collect();
    Ok((Graph::from_adjacency(adj, g.is_directed())?, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn apply_switch_examples() {
        let k4 = complete(4);
        assert_eq!(apply_switches(&k4, &[0, 1, 2, 3], &[], &[]).unwrap().m(), 0);
        let c5 = cycle(5);
        assert_eq!(apply_switches(&c5, &[], &[], &[0, 1, 2, 3, 4]).unwrap(), c5);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)], true).unwrap();
        let expected = Graph::from_edges(3, &[(0, 2), (1, 2)], true).unwrap();
        assert_eq!(apply_switches(&p3, &[0], &[], &[]).unwrap(), expected);
    }

    #[test]
    fn switching_twice_is_identity() {
        let g = petersen();
        let twice = apply_switches(&g, &[3, 3], &[1, 1], &[4, 4]).unwrap();
        assert_eq!(twice, g);
    }

    #[test]
    fn switch_order_is_irrelevant() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4), (4, 0)], true).unwrap();
        let a = apply_switches(&g, &[0, 3, 2], &[1, 4], &[]).unwrap();
        let b = apply_switches(&g, &[2, 0, 3], &[4, 1], &[]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn brute_min_examples() {
        assert_eq!(brute_min_representative(&complete(4), SwitchKind::Out).unwrap(), 0);
        // Seidel-switching {0, 2} leaves C_5 with the 3 edges {03, 24, 34}.
        assert_eq!(brute_min_representative(&cycle(5), SwitchKind::Seidel).unwrap(), 6);
        for kind in [SwitchKind::Out, SwitchKind::In, SwitchKind::Seidel, SwitchKind::GaleBerlekamp] {
            assert_eq!(brute_min_representative(&Graph::empty(3, false), kind).unwrap(), 0);
        }
        assert!(brute_min_representative(&Graph::empty(15, false), SwitchKind::Out).is_err());
        assert!(brute_min_representative(&Graph::empty(11, false), SwitchKind::GaleBerlekamp).is_err());
    }

    #[test]
    fn star_out_minimum_is_four() {
        assert_eq!(brute_min_representative(&star(4), SwitchKind::Out).unwrap(), 4);
    }

    #[test]
    fn distances_and_matchings() {
        assert_eq!(diameter_oracle(&path(4)), Some(3));
        assert_eq!(diameter_oracle(&petersen()), Some(2));
        assert_eq!(max_matching_bruteforce(&cycle(5)).unwrap(), 2);
        assert_eq!(matching_size(&edmonds(&petersen())), 5);
        assert_eq!(max_matching_bruteforce(&petersen()).unwrap(), 5);
    }

    #[test]
    fn dfs_checker_accepts_baseline_and_rejects_bfs_tree() {
        let g = cycle(5);
        let (order, parent) = baseline_dfs(&g, 0);
        assert!(check_dfs(&g, 0, &order, &parent).is_ok());
        // BFS-style tree: 0 -> 1, 0 -> 4 before exhausting 1's branch.
        let order = vec![0, 1, 4, 2, 3];
        let parent = vec![None, Some(0), Some(1), Some(4), Some(0)];
        assert!(check_dfs(&g, 0, &order, &parent).is_err());
    }

    #[test]
    fn contract_oracle_c5() {
        let (h, map) = contract_oracle(&cycle(5), &[vec![0, 1]]).unwrap();
        assert_eq!(map, vec![0, 0, 1, 2, 3]);
        assert_eq!(h, cycle(4));
        let (h, _) = contract_oracle(&cycle(5), &[vec![0, 1, 2]]).unwrap();
        assert_eq!(h, complete(3));
    }
}

//! Vertex-set contraction on out-mode pc-lists.
//!
//! The contracted vertex of a set `b` is adjacent to `w` iff some member is.
//! With `S` the switched members, its stored list is therefore
//! `X \ Y \ b` with `X` the intersection of the members' non-neighbor lists and
//! `Y` the union of the unswitched members' neighbor lists; if `S` is empty it
//! is unswitched and stores `Y \ b`.
//!
//! Other lists are relabeled and radix-sorted. An unswitched owner keeps a
//! contracted target if any member was listed, a switched owner only if every
//! member was listed.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::ledger::{Charge, WorkLedger};
use crate::pclist::{radix_lists, Mode, PCList};

/// Result of [`contract_set`].
#[derive(Debug, Clone)]
pub struct SetContraction {
    pub pclist: PCList,
    /// Id of the contracted vertex in the new pc-list.
    pub hat: VertexId,
    /// Old id to new id.
    pub mapping: Vec<VertexId>,
    /// Work spent relabeling and cleaning the remaining lists. Kept apart
    /// from the caller's ledger, which receives only the cost of building
    /// the contracted vertex's list.
    pub cleanup: WorkLedger,
}

fn require_out(p: &PCList) -> Result<()> {
    if p.mode() != Mode::Out {
        return Err(Error::Mode(format!("contraction needs an out-mode pc-list, got {:?}", p.mode())));
    }
    Ok(())
}

/// Stored elements of the listed vertices.
pub fn m_tilde_of(p: &PCList, b: &[VertexId]) -> usize {
    b.iter().map(|&v| p.lists().len(v)).sum()
}

/// Builds the stored list of the contracted vertex, in old labels.
/// `in_b` flags the members; `scratch` must be clear and is left clear.
fn build_hat(
    p: &PCList,
    members: &[usize],
    in_b: &BitSet,
    scratch: &mut BitSet,
    ledger: &mut WorkLedger,
) -> (bool, Vec<usize>) {
    let lists = p.lists();
    ledger.charge_n(Charge::Vertex, members.len() as u64);
    let switched: Vec<usize> = members.iter().copied().filter(|&v| p.is_switched(v)).collect();

    // Y: union of unswitched neighbor lists, as marks.
    let mut y = Vec::new();
    for &v in members.iter().filter(|&&v| !p.is_switched(v)) {
        for w in lists.iter(v) {
            ledger.charge(Charge::Element);
            if !scratch.get(w) {
                scratch.insert(w);
                y.push(w);
            }
        }
    }

    let out = if let Some(&first) = switched.iter().min_by_key(|&&v| lists.len(v)) {
        // X: merge intersection, seeded with the shortest list.
        let mut x = lists.to_vec(first);
        ledger.charge_n(Charge::Element, x.len() as u64);
        for &s in switched.iter().filter(|&&s| s != first) {
            let mut keep = Vec::with_capacity(x.len());
            let mut it = lists.iter(s).peekable();
            for &a in &x {
                while it.peek().is_some_and(|&c| c < a) {
                    ledger.charge(Charge::Element);
                    it.next();
                }
                ledger.charge(Charge::Element);
                if it.peek() == Some(&a) {
                    keep.push(a);
                }
            }
            x = keep;
        }
        x.retain(|&w| {
            ledger.charge(Charge::Element);
            !scratch.get(w) && !in_b.get(w)
        });
        (true, x)
    } else {
        y.sort_unstable();
        let kept = y.iter().copied().filter(|&w| !in_b.get(w)).collect();
        (false, kept)
    };
    for &w in &y {
        scratch.set(w, false);
    }
    ledger.charge_n(Charge::Element, y.len() as u64);
    out
}

struct Units {
    /// Unit index per old vertex.
    unit: Vec<usize>,
    /// New id per unit.
    new_id: Vec<usize>,
    size: Vec<usize>,
    /// Members of each nontrivial set, sorted.
    sets: Vec<Vec<usize>>,
    n_new: usize,
}

fn build_units(n: usize, beta: &[Vec<VertexId>], ledger: &mut WorkLedger) -> Result<Units> {
    let mut unit = vec![usize::MAX; n];
    let mut sets = Vec::new();
    for set in beta.iter().filter(|s| !s.is_empty()) {
        let idx = sets.len();
        let mut members = set.clone();
        for &v in set {
            ledger.charge(Charge::Misc);
            if v >= n {
                return Err(Error::Input(format!("vertex {v} out of range for n = {n}")));
            }
            if unit[v] != usize::MAX {
                return Err(Error::Input(format!("vertex {v} appears in more than one set")));
            }
            unit[v] = idx;
        }
        members.sort_unstable();
        sets.push(members);
    }
    let mut size: Vec<usize> = sets.iter().map(Vec::len).collect();
    let mut new_id = vec![usize::MAX; sets.len()];
    let mut next = 0;
    for v in 0..n {
        ledger.charge(Charge::Misc);
        if unit[v] == usize::MAX {
            unit[v] = new_id.len();
            new_id.push(next);
            size.push(1);
            next += 1;
        } else if new_id[unit[v]] == usize::MAX {
            new_id[unit[v]] = next;
            next += 1;
        }
    }
    Ok(Units {
        unit,
        new_id,
        size,
        sets,
        n_new: next,
    })
}

fn contract_with(p: &PCList, beta: &[Vec<VertexId>], hat_ledger: &mut WorkLedger, ledger: &mut WorkLedger) -> Result<(PCList, Vec<usize>)> {
    require_out(p)?;
    let n = p.n();
    let units = build_units(n, beta, ledger)?;
    let mapping: Vec<usize> = (0..n).map(|v| units.new_id[units.unit[v]]).collect();

    // Stored lists per new owner, in old target labels.
    let mut switched = BitSet::new(units.n_new);
    let mut owned: Vec<Option<Vec<usize>>> = vec![None; units.n_new];
    let mut in_b = BitSet::new(n);
    let mut scratch = BitSet::new(n);
    for members in units.sets.iter().filter(|s| s.len() > 1) {
        for &v in members {
            in_b.insert(v);
        }
        let (sw, list) = build_hat(p, members, &in_b, &mut scratch, hat_ledger);
        for &v in members {
            in_b.set(v, false);
        }
        let id = mapping[members[0]];
        switched.set(id, sw);
        owned[id] = Some(list);
    }

    let lists = p.lists();
    let mut pairs = Vec::with_capacity(p.m_tilde());
    for v in 0..n {
        let owner = mapping[v];
        ledger.charge(Charge::Vertex);
        if units.size[units.unit[v]] == 1 {
            switched.set(owner, p.is_switched(v));
            for w in lists.iter(v) {
                ledger.charge(Charge::Element);
                pairs.push((owner, mapping[w]));
            }
        }
    }
    for (owner, list) in owned.iter().enumerate() {
        if let Some(list) = list {
            for &w in list {
                ledger.charge(Charge::Element);
                pairs.push((owner, mapping[w]));
            }
        }
    }
    let mut size = vec![0usize; units.n_new];
    for v in 0..n {
        size[mapping[v]] += 1;
    }
    ledger.charge_n(Charge::Misc, n as u64);
    // Sort by target, then collapse runs with the membership rule.
    let by_owner = radix_lists(units.n_new, units.n_new, &pairs);
    ledger.charge_n(Charge::Element, pairs.len() as u64);
    let mut new_lists = Vec::with_capacity(units.n_new);
    for (owner, targets) in by_owner.into_iter().enumerate() {
        let sw = switched.get(owner);
        let mut out: Vec<usize> = Vec::new();
        let mut i = 0;
        while i < targets.len() {
            let t = targets[i];
            let mut j = i;
            while j < targets.len() && targets[j] == t {
                j += 1;
            }
            ledger.charge_n(Charge::Element, (j - i) as u64);
            let keep = !sw || j - i == size[t];
            if keep && t != owner {
                out.push(t);
            }
            i = j;
        }
        new_lists.push(out);
    }
    Ok((PCList::from_out_lists(!p.is_symmetric(), switched, new_lists), mapping))
}

/// Contracts every set of `beta` to one vertex; other vertices stay.
/// New ids follow the smallest original member of each unit.
pub fn contract_partition(p: &PCList, beta: &[Vec<VertexId>], ledger: &mut WorkLedger) -> Result<(PCList, Vec<usize>)> {
    let mut hat = WorkLedger::new();
    let out = contract_with(p, beta, &mut hat, ledger)?;
    ledger.absorb(&hat);
    Ok(out)
}

/// Contracts the vertex set `b` to a single vertex.
pub fn contract_set(p: &PCList, b: &[VertexId], ledger: &mut WorkLedger) -> Result<SetContraction> {
    if b.is_empty() {
        return Err(Error::Input("cannot contract an empty set".into()));
    }
    let mut cleanup = WorkLedger::new();
    let (pclist, mapping) = contract_with(p, &[b.to_vec()], ledger, &mut cleanup)?;
    Ok(SetContraction {
        hat: mapping[b[0]],
        pclist,
        mapping,
        cleanup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::oracles::contract_oracle;

    #[test]
    fn clique_stays_complete() {
        let p = PCList::build_out_representative(&complete(4));
        let mut l = WorkLedger::new();
        let c = contract_set(&p, &[0, 1, 2], &mut l).unwrap();
        assert_eq!(c.hat, 0);
        assert!(c.pclist.is_switched(0));
        assert!(c.pclist.lists().to_vec(0).is_empty());
        assert_eq!(c.pclist.represented_graph(), complete(2));
    }

    #[test]
    fn c5_pair_gives_c4() {
        let p = PCList::plain(&cycle(5));
        let c = contract_set(&p, &[0, 1], &mut WorkLedger::new()).unwrap();
        assert!(!c.pclist.is_switched(c.hat));
        // 2 and 4 become 1 and 3.
        assert_eq!(c.pclist.lists().to_vec(c.hat), vec![1, 3]);
        assert_eq!(c.pclist.represented_graph(), cycle(4));
    }

    #[test]
    fn singleton_is_identity() {
        let g = petersen();
        let p = PCList::build_out_representative(&g);
        let c = contract_set(&p, &[4], &mut WorkLedger::new()).unwrap();
        assert_eq!(c.pclist.represented_graph(), g);
    }

    #[test]
    fn partition_examples() {
        let mut l = WorkLedger::new();
        let p = PCList::build_out_representative(&complete(4));
        let (q, map) = contract_partition(&p, &[], &mut l).unwrap();
        assert_eq!(map, vec![0, 1, 2, 3]);
        assert_eq!(q.represented_graph(), complete(4));
        let (q, map) = contract_partition(&p, &[vec![0, 1], vec![2, 3]], &mut l).unwrap();
        assert_eq!(map, vec![0, 0, 1, 1]);
        assert_eq!(q.represented_graph(), complete(2));
        let p = PCList::plain(&cycle(5));
        let (q, _) = contract_partition(&p, &[vec![0, 1, 2]], &mut l).unwrap();
        assert_eq!(q.represented_graph(), cycle(3));
    }

    #[test]
    fn mixed_switches_match_oracle() {
        let g = petersen();
        let p = PCList::build_seidel_pclist(&g, &[]).unwrap();
        assert!(matches!(contract_set(&p, &[0, 1], &mut WorkLedger::new()), Err(Error::Mode(_))));
        let p = PCList::build_out_representative(&crate::graph::complement(&g));
        let beta = vec![vec![0, 5, 7], vec![2, 9]];
        let (q, map) = contract_partition(&p, &beta, &mut WorkLedger::new()).unwrap();
        let (h, omap) = contract_oracle(&p.represented_graph(), &beta).unwrap();
        assert_eq!(map, omap);
        assert_eq!(q.represented_graph(), h);
    }

    #[test]
    fn input_errors() {
        let p = PCList::plain(&cycle(5));
        let mut l = WorkLedger::new();
        assert!(matches!(contract_set(&p, &[0, 5], &mut l), Err(Error::Input(_))));
        assert!(matches!(contract_partition(&p, &[vec![0, 1], vec![1, 2]], &mut l), Err(Error::Input(_))));
    }

    #[test]
    fn set_work_bound() {
        let g = crate::graph::complement(&cycle(12));
        let p = PCList::build_out_representative(&g);
        let b = [0, 3, 4, 8];
        let mut l = WorkLedger::new();
        contract_set(&p, &b, &mut l).unwrap();
        assert!(l.total() <= 8 * (b.len() + m_tilde_of(&p, &b)) as u64, "{l:?}");
    }
}

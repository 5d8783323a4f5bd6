//! Algorithm dispatch, oracle verification and the benchmark sweeps.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::bipartite::{hopcroft_karp, two_coloring, BipartitePCList, Side};
use crate::error::{Error, Result};
use crate::gen::{generate, GenSpec, Model};
use crate::general::maximum_matching_pclist;
use crate::graph::{Graph, VertexId};
use crate::io::BenchRow;
use crate::ledger::WorkLedger;
use crate::matching::Matching;
use crate::oracles;
use crate::pclist::PCList;
use crate::reachability::{diameter, transitive_closure, Diameter, ReachMatrix};
use crate::traversal::{connected_components, pclist_bfs, pclist_dfs, TraversalResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algo {
    Bfs,
    Dfs,
    Components,
    Diameter,
    Tc,
    Hk,
    Matching,
}

impl Algo {
    pub const ALL: [Algo; 7] = [
        Algo::Bfs,
        Algo::Dfs,
        Algo::Components,
        Algo::Diameter,
        Algo::Tc,
        Algo::Hk,
        Algo::Matching,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Bfs => "bfs",
            Algo::Dfs => "dfs",
            Algo::Components => "components",
            Algo::Diameter => "diameter",
            Algo::Tc => "tc",
            Algo::Hk => "hk",
            Algo::Matching => "matching",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown algorithm {s:?}")))
    }
}

/// How the input graph is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Repr {
    /// Minimum out-representative.
    Out,
    /// Seidel switching of the given set.
    Seidel(Vec<VertexId>),
    /// Plain adjacency lists, nothing switched.
    Plain,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Answer {
    Traversal(TraversalResult),
    Components(Vec<usize>),
    Diameter(Diameter),
    Closure(ReachMatrix),
    Matching(Matching),
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub answer: Answer,
    pub ledger: WorkLedger,
    pub m_tilde: usize,
    pub phases: Option<usize>,
    pub wall_time_ns: u64,
}

impl RunOutput {
    /// Short result value, e.g. `3` for a diameter or matching size.
    pub fn value(&self) -> String {
        match &self.answer {
            Answer::Traversal(t) => t.order.len().to_string(),
            Answer::Components(c) => count_components(c).to_string(),
            Answer::Diameter(Diameter::Finite(d)) => d.to_string(),
            Answer::Diameter(Diameter::Infinite { .. }) => "inf".into(),
            Answer::Closure(r) => (0..r.n()).map(|u| r.row(u).count_ones()).sum::<usize>().to_string(),
            Answer::Matching(m) => m.size().to_string(),
        }
    }

    /// One-line report such as `diameter 3`.
    pub fn summary(&self, algo: Algo) -> String {
        match (&self.answer, algo) {
            (Answer::Traversal(t), Algo::Bfs) => {
                let depth = t.level.iter().flatten().max().copied().unwrap_or(0);
                format!("bfs reached {} depth {depth}", t.order.len())
            }
            (Answer::Traversal(t), _) => format!("dfs reached {}", t.order.len()),
            (Answer::Components(_), _) => format!("components {}", self.value()),
            (Answer::Diameter(d), _) => format!("diameter {d}"),
            (Answer::Closure(_), _) => format!("closure {}", self.value()),
            (Answer::Matching(_), _) => format!("matching {}", self.value()),
        }
    }
}

fn count_components(ids: &[usize]) -> usize {
    ids.iter().enumerate().filter(|&(v, &c)| v == c).count()
}

fn build(g: &Graph, repr: &Repr) -> Result<PCList> {
    match repr {
        Repr::Out => Ok(PCList::build_out_representative(g)),
        Repr::Seidel(s) => PCList::build_seidel_pclist(g, s),
        Repr::Plain => Ok(PCList::plain(g)),
    }
}

/// Runs `algo` on `g` stored as `repr`. The ledger covers the algorithm
/// only, not building the representation.
pub fn run_algo(algo: Algo, g: &Graph, repr: &Repr, source: VertexId) -> Result<RunOutput> {
    let mut ledger = WorkLedger::new();
    let mut phases = None;
    if algo == Algo::Hk {
        let side = two_coloring(g)?;
        let p = BipartitePCList::with_sides(g, side, *repr != Repr::Plain)?;
        let start = Instant::now();
        let hk = hopcroft_karp(&p, &mut ledger);
        let wall_time_ns = start.elapsed().as_nanos() as u64;
        return Ok(RunOutput {
            answer: Answer::Matching(hk.matching),
            ledger,
            m_tilde: p.m_tilde(),
            phases: Some(hk.phases),
            wall_time_ns,
        });
    }
    let p = build(g, repr)?;
    let start = Instant::now();
    let answer = match algo {
        Algo::Bfs => Answer::Traversal(pclist_bfs(&p, source, &mut ledger)?),
        Algo::Dfs => Answer::Traversal(pclist_dfs(&p, source, &mut ledger)?),
        Algo::Components => Answer::Components(connected_components(&p, &mut ledger)?),
        Algo::Diameter => Answer::Diameter(diameter(&p, &mut ledger)?),
        Algo::Tc => Answer::Closure(transitive_closure(&p, &mut ledger)?),
        Algo::Matching => {
            let r = maximum_matching_pclist(&p, &mut ledger)?;
            phases = Some(r.phases);
            Answer::Matching(r.matching)
        }
        Algo::Hk => unreachable!(),
    };
    Ok(RunOutput {
        answer,
        ledger,
        m_tilde: p.m_tilde(),
        phases,
        wall_time_ns: start.elapsed().as_nanos() as u64,
    })
}

/// Checks a result against the oracles; the error describes the mismatch.
pub fn verify(algo: Algo, g: &Graph, source: VertexId, out: &RunOutput) -> std::result::Result<(), String> {
    match (&out.answer, algo) {
        (Answer::Traversal(t), Algo::Bfs) => {
            let want = oracles::baseline_bfs(g, source);
            if t.level != want {
                return Err(format!("bfs levels differ\n  got:  {:?}\n  want: {want:?}", t.level));
            }
            Ok(())
        }
        (Answer::Traversal(t), Algo::Dfs) => oracles::check_dfs(g, source, &t.order, &t.parent),
        (Answer::Components(c), _) => {
            let want = oracles::components_oracle(g);
            if *c != want {
                return Err(format!("components differ\n  got:  {c:?}\n  want: {want:?}"));
            }
            Ok(())
        }
        (Answer::Diameter(d), _) => {
            let want = oracles::diameter_oracle(g);
            if d.finite() != want {
                return Err(format!("diameter {d}, oracle {want:?}"));
            }
            Ok(())
        }
        (Answer::Closure(r), _) => {
            let want = oracles::closure_oracle(g);
            let got = r.to_bools();
            match (0..g.n()).find(|&u| got[u] != want[u]) {
                Some(u) => Err(format!("closure row {u} differs\n  got:  {:?}\n  want: {:?}", got[u], want[u])),
                None => Ok(()),
            }
        }
        (Answer::Matching(m), _) => {
            m.check_in(g)?;
            let want = if algo == Algo::Hk {
                let side = two_coloring(g).map_err(|e| e.to_string())?;
                let left: Vec<_> = (0..g.n()).filter(|&v| side[v] == Side::A).collect();
                oracles::kuhn_matching(g, &left)
            } else {
                oracles::matching_size(&oracles::edmonds(g))
            };
            if m.size() != want {
                return Err(format!("matching size {}, oracle {want}", m.size()));
            }
            Ok(())
        }
        (a, algo) => Err(format!("answer {a:?} does not fit algorithm {algo}")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// `gnp` at n = 256 for p in {0.5, 0.7, 0.9, 0.99}.
    DensitySweep,
    /// `complement_of_sparse` with average degree 4 for n in {128, ..., 1024}.
    SizeSweep,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "density-sweep" => Ok(Suite::DensitySweep),
            "size-sweep" => Ok(Suite::SizeSweep),
            _ => Err(Error::Input(format!("unknown suite {s:?}"))),
        }
    }
}

pub const DENSITY_N: usize = 256;
pub const DENSITY_PS: [f64; 4] = [0.5, 0.7, 0.9, 0.99];
pub const SIZE_NS: [usize; 4] = [128, 256, 512, 1024];
pub const SIZE_AVG_DEGREE: f64 = 4.0;

/// Instance grid for `algo`. Bipartite matching gets the bipartite
/// analogue of each instance.
pub fn suite_instances(suite: Suite, algo: Algo, seed: u64) -> Vec<(String, GenSpec)> {
    let mut out = Vec::new();
    match suite {
        Suite::DensitySweep => {
            for (i, &p) in DENSITY_PS.iter().enumerate() {
                let model = if algo == Algo::Hk {
                    Model::BipartiteGnp {
                        a: DENSITY_N / 2,
                        b: DENSITY_N / 2,
                        p,
                    }
                } else {
                    Model::Gnp { n: DENSITY_N, p }
                };
                out.push((format!("density-{DENSITY_N}-p{p}"), GenSpec::new(model, seed + i as u64)));
            }
        }
        Suite::SizeSweep => {
            for (i, &n) in SIZE_NS.iter().enumerate() {
                let model = if algo == Algo::Hk {
                    Model::BipartiteComplementMatching { k: n / 2 }
                } else {
                    Model::ComplementOfSparse {
                        n,
                        avg_degree: SIZE_AVG_DEGREE,
                    }
                };
                out.push((format!("size-{n}"), GenSpec::new(model, seed + i as u64)));
            }
        }
    }
    out
}

/// Runs every algorithm on every suite instance. With `baseline`, each
/// pc-list row is followed by a plain adjacency-list row whose algorithm
/// name carries a `+baseline` suffix.
pub fn run_bench(suite: Suite, algos: &[Algo], seed: u64, baseline: bool) -> Result<Vec<BenchRow>> {
    if algos.is_empty() {
        return Err(Error::Input("no algorithms given".into()));
    }
    let mut rows = Vec::new();
    for &algo in algos {
        for (id, spec) in suite_instances(suite, algo, seed) {
            let g = generate(&spec)?;
            let mut reprs = vec![(Repr::Out, algo.name().to_string())];
            if baseline {
                reprs.push((Repr::Plain, format!("{algo}+baseline")));
            }
            for (repr, name) in reprs {
                let out = run_algo(algo, &g, &repr, 0)?;
                let l = &out.ledger;
                rows.push(BenchRow {
                    instance_id: id.clone(),
                    model: spec.model_name().to_string(),
                    n: g.n(),
                    m: g.m(),
                    m_tilde: out.m_tilde,
                    algorithm: name,
                    vertex_charge: l.vertex_charge,
                    pclist_element_charge: l.pclist_element_charge,
                    queue_op: l.queue_op,
                    ledger_misc: l.ledger_misc,
                    ledger_total: l.total(),
                    phases: out.phases,
                    wall_time_ns: out.wall_time_ns,
                    result: out.value(),
                    seed: spec.seed,
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn algo_names_round_trip() {
        for a in Algo::ALL {
            assert_eq!(a.name().parse::<Algo>().unwrap(), a);
        }
        assert!("bogus".parse::<Algo>().is_err());
    }

    #[test]
    fn run_and_verify_everything() {
        let g = petersen();
        for algo in Algo::ALL.into_iter().filter(|&a| a != Algo::Hk) {
            for repr in [Repr::Out, Repr::Plain, Repr::Seidel(vec![0, 3])] {
                if algo == Algo::Matching && matches!(repr, Repr::Seidel(_)) {
                    assert!(run_algo(algo, &g, &repr, 0).is_err());
                    continue;
                }
                let out = run_algo(algo, &g, &repr, 0).unwrap();
                verify(algo, &g, 0, &out).unwrap();
            }
        }
        let k33 = complete_bipartite(3, 3);
        let out = run_algo(Algo::Hk, &k33, &Repr::Out, 0).unwrap();
        assert_eq!(out.summary(Algo::Hk), "matching 3");
        verify(Algo::Hk, &k33, 0, &out).unwrap();
        let out = run_algo(Algo::Diameter, &path(4), &Repr::Out, 0).unwrap();
        assert_eq!(out.summary(Algo::Diameter), "diameter 3");
    }

    #[test]
    fn verify_reports_mismatch() {
        let out = run_algo(Algo::Diameter, &path(4), &Repr::Out, 0).unwrap();
        assert!(verify(Algo::Diameter, &path(5), 0, &out).is_err());
    }

    #[test]
    fn suite_shapes() {
        assert_eq!(suite_instances(Suite::DensitySweep, Algo::Bfs, 1).len(), 4);
        assert_eq!(suite_instances(Suite::SizeSweep, Algo::Hk, 1).len(), 4);
        assert!(run_bench(Suite::DensitySweep, &[], 1, false).is_err());
    }
}

use proptest::prelude::*;

use pclist::bipartite::{hopcroft_karp, BipartitePCList, Side};
use pclist::contraction::{contract_partition, contract_set, m_tilde_of};
use pclist::general::{find_ap_set, maximum_matching, LookupVectors};
use pclist::oracles::{self, SwitchKind};
use pclist::reachability::{diameter, transitive_closure};
use pclist::{complement, connected_components, pclist_bfs, pclist_dfs, Graph, PCList, WorkLedger};

/// Random graph on `0..=max_n` vertices; density drawn uniformly.
fn graph(max_n: usize, directed: bool) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(move |n| {
        (Just(n), 0.0..=1.0f64, prop::collection::vec(0.0..1.0f64, n * n)).prop_map(move |(n, p, coins)| {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    let keep = if directed { u != v } else { u < v };
                    if keep && coins[u * n + v] < p {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges, directed).unwrap()
        })
    })
}

fn nonempty_graph(max_n: usize, directed: bool) -> impl Strategy<Value = Graph> {
    graph(max_n, directed).prop_filter("need a vertex", |g| g.n() > 0)
}

fn subset(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<bool>(), n).prop_map(|bits| bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect())
}

fn bipartite(max_side: usize) -> impl Strategy<Value = (Graph, usize)> {
    (1..=max_side, 0..=max_side).prop_flat_map(|(a, b)| {
        (Just(a), Just(b), 0.0..=1.0f64, prop::collection::vec(0.0..1.0f64, a * b)).prop_map(|(a, b, p, coins)| {
            let mut edges = Vec::new();
            for i in 0..a {
                for j in 0..b {
                    if coins[i * b + j] < p {
                        edges.push((i, a + j));
                    }
                }
            }
            (Graph::from_edges(a + b, &edges, false).unwrap(), a)
        })
    })
}

/// Random partition of some vertices into disjoint sets.
fn partition(n: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(0..=3usize, n).prop_map(|tags| {
        let mut sets = vec![Vec::new(); 3];
        for (v, &t) in tags.iter().enumerate() {
            if t > 0 {
                sets[t - 1].push(v);
            }
        }
        sets.into_iter().filter(|s| !s.is_empty()).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn representations_round_trip(g in graph(12, false), d in graph(10, true)) {
        prop_assert_eq!(PCList::plain(&g).represented_graph(), g.clone());
        prop_assert_eq!(PCList::build_out_representative(&g).represented_graph(), g.clone());
        prop_assert_eq!(PCList::build_in_representative(&g).represented_graph(), g.clone());
        prop_assert_eq!(PCList::greedy_gale_berlekamp(&g).represented_graph(), g.clone());
        prop_assert_eq!(PCList::build_out_representative(&d).represented_graph(), d.clone());
        prop_assert_eq!(PCList::build_in_representative(&d).represented_graph(), d.clone());
        prop_assert_eq!(PCList::greedy_gale_berlekamp(&d).represented_graph(), d.clone());
    }

    #[test]
    fn seidel_round_trip((g, s) in graph(12, false).prop_flat_map(|g| { let n = g.n(); (Just(g), subset(n)) })) {
        let p = PCList::build_seidel_pclist(&g, &s).unwrap();
        prop_assert_eq!(p.represented_graph(), g);
    }

    #[test]
    fn representatives_are_minimum(g in graph(9, false), d in graph(8, true)) {
        for h in [&g, &d] {
            let out = PCList::build_out_representative(h);
            prop_assert_eq!(out.m_tilde(), oracles::brute_min_representative(h, SwitchKind::Out).unwrap());
            let inn = PCList::build_in_representative(h);
            prop_assert_eq!(inn.m_tilde(), oracles::brute_min_representative(h, SwitchKind::In).unwrap());
        }
    }

    #[test]
    fn complement_is_an_involution(g in graph(12, false), d in graph(10, true)) {
        prop_assert_eq!(complement(&complement(&g)), g);
        prop_assert_eq!(complement(&complement(&d)), d);
    }

    #[test]
    fn bfs_matches_baseline(g in nonempty_graph(14, false), d in nonempty_graph(12, true)) {
        for h in [&g, &d] {
            for p in [PCList::plain(h), PCList::build_out_representative(h)] {
                for s in 0..h.n() {
                    let mut l = WorkLedger::new();
                    let r = pclist_bfs(&p, s, &mut l).unwrap();
                    prop_assert_eq!(&r.level, &oracles::baseline_bfs(h, s));
                    prop_assert!(l.total() <= 8 * (h.n() + p.m_tilde()) as u64);
                }
            }
        }
    }

    #[test]
    fn dfs_is_legal((g, s) in nonempty_graph(14, false).prop_flat_map(|g| { let n = g.n(); (Just(g), subset(n)) }), d in nonempty_graph(12, true)) {
        let reps = [PCList::build_out_representative(&g), PCList::build_seidel_pclist(&g, &s).unwrap()];
        for p in &reps {
            for src in 0..g.n() {
                let mut l = WorkLedger::new();
                let r = pclist_dfs(p, src, &mut l).unwrap();
                prop_assert!(oracles::check_dfs(&g, src, &r.order, &r.parent).is_ok());
                prop_assert!(l.total() <= 8 * (g.n() + p.m_tilde()) as u64);
            }
        }
        let p = PCList::build_out_representative(&d);
        for src in 0..d.n() {
            let r = pclist_dfs(&p, src, &mut WorkLedger::new()).unwrap();
            prop_assert!(oracles::check_dfs(&d, src, &r.order, &r.parent).is_ok());
        }
    }

    #[test]
    fn seidel_bfs_matches_baseline((g, s) in nonempty_graph(14, false).prop_flat_map(|g| { let n = g.n(); (Just(g), subset(n)) })) {
        let p = PCList::build_seidel_pclist(&g, &s).unwrap();
        for src in 0..g.n() {
            let mut l = WorkLedger::new();
            let r = pclist_bfs(&p, src, &mut l).unwrap();
            prop_assert_eq!(&r.level, &oracles::baseline_bfs(&g, src));
            prop_assert!(l.total() <= 8 * (g.n() + p.m_tilde()) as u64);
        }
    }

    #[test]
    fn components_match_oracle(g in graph(14, false)) {
        let p = PCList::build_out_representative(&g);
        prop_assert_eq!(connected_components(&p, &mut WorkLedger::new()).unwrap(), oracles::components_oracle(&g));
    }

    #[test]
    fn reachability_matches_floyd_warshall(g in nonempty_graph(12, false), d in nonempty_graph(12, true)) {
        for h in [&g, &d] {
            let p = PCList::build_out_representative(h);
            let r = transitive_closure(&p, &mut WorkLedger::new()).unwrap();
            prop_assert_eq!(r.to_bools(), oracles::closure_oracle(h));
            prop_assert_eq!(r.reclose(), r.clone());
            let dia = diameter(&p, &mut WorkLedger::new()).unwrap();
            prop_assert_eq!(dia.finite(), oracles::diameter_oracle(h));
        }
    }

    #[test]
    fn contraction_matches_oracle((g, beta) in graph(12, false).prop_flat_map(|g| { let n = g.n(); (Just(g), partition(n)) })) {
        for p in [PCList::plain(&g), PCList::build_out_representative(&g)] {
            let (q, map) = contract_partition(&p, &beta, &mut WorkLedger::new()).unwrap();
            let (h, omap) = oracles::contract_oracle(&g, &beta).unwrap();
            prop_assert_eq!(&map, &omap);
            prop_assert_eq!(q.represented_graph(), h);
            for b in &beta {
                let mut l = WorkLedger::new();
                let c = contract_set(&p, b, &mut l).unwrap();
                let (h, _) = oracles::contract_oracle(&g, std::slice::from_ref(b)).unwrap();
                prop_assert_eq!(c.pclist.represented_graph(), h);
                prop_assert!(l.total() <= 8 * (b.len() + m_tilde_of(&p, b)) as u64);
            }
        }
    }

    #[test]
    fn hopcroft_karp_is_maximum((g, a) in bipartite(8)) {
        let left: Vec<usize> = (0..a).collect();
        let right: Vec<usize> = (a..g.n()).collect();
        let want = oracles::max_bipartite_matching_bruteforce(&g, &left, &right).unwrap();
        let sides = (0..g.n()).map(|v| if v < a { Side::A } else { Side::B }).collect();
        for p in [BipartitePCList::build(&g).unwrap(), BipartitePCList::with_sides(&g, sides, true).unwrap()] {
            prop_assert_eq!(p.represented_graph(), g.clone());
            let hk = hopcroft_karp(&p, &mut WorkLedger::new());
            prop_assert_eq!(hk.matching.size(), want);
            prop_assert!(hk.matching.check_in(&g).is_ok());
            prop_assert!(hk.phases <= pclist::bipartite::phase_bound(g.n()));
            for lens in &hk.path_lengths {
                prop_assert!(lens.iter().all(|&l| l == lens[0]));
            }
            for w in &hk.phase_work {
                prop_assert!(w.total() <= 8 * (g.n() + p.m_tilde()) as u64);
            }
        }
    }

    #[test]
    fn general_matching_is_maximum(g in graph(12, false)) {
        let r = maximum_matching(&g, &mut WorkLedger::new()).unwrap();
        prop_assert!(r.matching.check_in(&g).is_ok());
        prop_assert_eq!(r.matching.size(), oracles::max_matching_bruteforce(&g).unwrap());
        let p = PCList::build_out_representative(&g);
        for w in &r.phase_work {
            prop_assert!(w.total() <= 8 * (g.n() + p.m_tilde()) as u64);
        }
    }

    #[test]
    fn general_matching_matches_edmonds(g in graph(40, false)) {
        let r = maximum_matching(&g, &mut WorkLedger::new()).unwrap();
        prop_assert!(r.matching.check_in(&g).is_ok());
        prop_assert_eq!(r.matching.size(), oracles::matching_size(&oracles::edmonds(&g)));
    }

    #[test]
    fn phase_paths_are_disjoint(g in graph(16, false)) {
        let p = PCList::build_out_representative(&g);
        let lookup = LookupVectors::build(&p, &mut WorkLedger::new());
        let ap = find_ap_set(&p, &lookup, &pclist::matching::Matching::empty(g.n()), &mut WorkLedger::new()).unwrap();
        let mut seen = vec![false; g.n()];
        for path in &ap.paths {
            for w in path.windows(2) {
                prop_assert!(g.has_arc(w[0], w[1]));
            }
            for &v in path {
                prop_assert!(!seen[v]);
                seen[v] = true;
            }
        }
    }
}

use proptest::prelude::*;

use normgraph::analysis::{Analysis, DistanceMatrix};
use normgraph::builders::{build, export_cayley, parse_cayley_json, GroupSpec};
use normgraph::digraph::Digraph;
use normgraph::norm_graph::NormalizerTable;
use normgraph::{arith, Group};

fn random_digraph() -> impl Strategy<Value = Digraph> {
    (1usize..=64, 0.0f64..0.25, any::<u64>()).prop_map(|(m, p, seed)| {
        // cheap deterministic hash per pair
        let bit = |u: usize, v: usize| {
            let mut h = seed ^ ((u as u64) << 32 | v as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
            h ^= h >> 29;
            h = h.wrapping_mul(0xBF58_476D_1CE4_E5B9);
            h ^= h >> 32;
            (h as f64 / u64::MAX as f64) < p
        };
        Digraph::from_fn((0..m).collect(), |u, v| u != v && bit(u, v))
    })
}

/// Transitive closure, reflexive.
fn reach(d: &Digraph) -> Vec<Vec<bool>> {
    let m = d.vertex_count();
    let mut r: Vec<Vec<bool>> = (0..m).map(|u| (0..m).map(|v| u == v || d.has_edge(u, v)).collect()).collect();
    for k in 0..m {
        for i in 0..m {
            if r[i][k] {
                for j in 0..m {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

fn small_group() -> impl Strategy<Value = GroupSpec> {
    let leaf = prop_oneof![
        (1usize..=12).prop_map(GroupSpec::Cyclic),
        (2usize..=10).prop_map(|n| GroupSpec::Dihedral(2 * n)),
        Just(GroupSpec::Quaternion(8)),
        Just(GroupSpec::Quaternion(16)),
        (3usize..=4).prop_map(GroupSpec::Symmetric),
        Just(GroupSpec::Mod16),
        Just(GroupSpec::C3SemidirectQ8),
        Just(GroupSpec::Frobenius20),
        Just(GroupSpec::Frobenius21),
    ];
    prop_oneof![
        3 => leaf.clone(),
        1 => (leaf.clone(), leaf).prop_filter_map("order", |(a, b)| {
            let s = GroupSpec::product(a, b);
            build(&s).ok().filter(|g| g.order() <= 64).map(|_| s)
        }),
    ]
}

fn group(spec: &GroupSpec) -> Group {
    build(spec).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scc_matches_reachability(d in random_digraph()) {
        let r = reach(&d);
        let scc = d.scc();
        let m = d.vertex_count();
        for u in 0..m {
            for v in 0..m {
                let same = scc.component_of[u] == scc.component_of[v];
                prop_assert_eq!(same, r[u][v] && r[v][u]);
            }
        }
        let total: usize = scc.components.iter().map(Vec::len).sum();
        prop_assert_eq!(total, m);
        for (c, out) in scc.condensation.iter().enumerate() {
            for e in out.iter() {
                // sinks come first
                prop_assert!(e < c);
            }
        }
        for (c, verts) in scc.components.iter().enumerate() {
            if verts.len() == 1 {
                prop_assert_eq!(scc.diameters[c], 0);
            }
            prop_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        }
        prop_assert_eq!(d.is_strongly_connected(), scc.count() <= 1);
    }

    #[test]
    fn distances_agree(d in random_digraph()) {
        let r = reach(&d);
        let dm = DistanceMatrix::new(&d);
        let m = d.vertex_count();
        for u in 0..m {
            let bfs = d.bfs(u, None);
            for v in 0..m {
                let x = dm.get(u, v);
                prop_assert_eq!(x, bfs[v]);
                prop_assert_eq!(x.is_some(), r[u][v]);
                prop_assert_eq!(x == Some(1), d.has_edge(u, v));
                prop_assert_eq!(x == Some(0), u == v);
                // one step further never shortens the distance by more than one
                if let Some(du) = x {
                    for w in d.out_neighbors(v).iter() {
                        prop_assert!(dm.get(u, w).unwrap() <= du + 1);
                    }
                }
            }
        }
        if let Ok(diam) = d.diameter() {
            let max = (0..m).flat_map(|u| dm.row(u).collect::<Vec<_>>()).map(Option::unwrap).max().unwrap();
            prop_assert_eq!(diam, max);
        }
    }

    #[test]
    fn undirected_is_symmetric_closure(d in random_digraph()) {
        let u = d.undirected();
        prop_assert!(u.is_symmetric());
        for a in 0..d.vertex_count() {
            for b in 0..d.vertex_count() {
                prop_assert_eq!(u.has_edge(a, b), d.has_edge(a, b) || d.has_edge(b, a));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn universal_sets_sit_between_centers(spec in small_group()) {
        let a = Analysis::new(group(&spec));
        let g = a.group();
        let u = &a.univ().univ;
        prop_assert!(a.center().members().is_subset(u));
        prop_assert!(u.is_subset(a.series().second_center().members()));
        for x in u.iter() {
            for k in 0..g.ord(x) as i64 {
                prop_assert!(u.contains(g.pow(x, k)));
            }
            for h in g.elements() {
                prop_assert!(u.contains(g.conj(x, h)));
            }
            if arith::is_prime(g.ord(x)) {
                prop_assert!(a.center().contains(x));
            }
        }
        prop_assert_eq!(u.len() == 1, a.center().is_trivial());
    }

    #[test]
    fn arrows_are_conjugation_invariant(spec in small_group()) {
        let g = group(&spec);
        let t = NormalizerTable::new(&g);
        for x in g.elements() {
            let n = t.normalizer(x);
            prop_assert!(g.centralizer_of_set([x]).is_subset(n));
            prop_assert!(t.cyclic(x).is_subset(n));
        }
        for x in g.elements().step_by(3) {
            for y in g.elements().step_by(2) {
                for h in [1usize, g.order() - 1].into_iter().filter(|&h| h < g.order()) {
                    prop_assert_eq!(t.arrow(x, y), t.arrow(g.conj(x, h), g.conj(y, h)));
                }
            }
        }
    }

    #[test]
    fn complete_iff_dedekind(spec in small_group()) {
        let a = Analysis::new(group(&spec));
        let g = a.group();
        let dedekind = g.elements().all(|x| g.is_normal(&g.cyclic_subgroup(x).unwrap()));
        prop_assert_eq!(a.gamma().is_complete(true), dedekind);
        prop_assert_eq!(a.delta().vertex_count() == 0, dedekind);
    }

    #[test]
    fn cayley_round_trip(spec in small_group()) {
        let g = group(&spec);
        let h = parse_cayley_json(&export_cayley(&g)).unwrap();
        prop_assert_eq!(g.table(), h.table());
        prop_assert_eq!(g.name(), h.name());
    }

    #[test]
    fn classification_is_exclusive(spec in small_group()) {
        let a = Analysis::new(group(&spec));
        let c = a.classification();
        prop_assert!(!(c.frobenius.is_some() && c.two_frobenius.is_some()));
        if let Some(t) = &c.two_frobenius {
            prop_assert!(c.soluble && c.trivial_center);
            prop_assert!(t.h.order() % 2 == 1);
        }
        if c.frobenius.is_some() {
            prop_assert!(!a.delta_scc().strongly_connected);
        }
    }
}

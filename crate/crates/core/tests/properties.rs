use std::collections::{BTreeSet, HashMap};

use proptest::prelude::*;
use sun_systems::certificate::Certificate;
use sun_systems::design::{cycles_of_difference, translate, HoleGraph, Sun, Vertex};
use sun_systems::lemmas;
use sun_systems::oracle::base_system;
use sun_systems::planner::{
    build_plan, construct_3ss, counting_feasible, decompose_hole, embed, hole_residues,
    min_hole_increment,
};
use sun_systems::verify::{canonical_block, verify_partition};

fn admissible_at_least_9() -> impl Strategy<Value = u32> {
    (0u32..40, prop::sample::select(vec![0u32, 1, 4, 9]))
        .prop_map(|(q, r)| 12 * q + r)
        .prop_filter("order at least 9", |&n| n >= 9)
}

/// An admissible `u >= u_min(n)` with `n + u` admissible.
fn hole_increment(n: u32, extra: u32, pick: usize) -> u32 {
    let u_min = min_hole_increment(n).unwrap();
    let residues = hole_residues(n).unwrap();
    (u_min + extra..)
        .find(|u| u % 12 == residues[pick % 4])
        .unwrap()
}

fn cyclic(i: u32) -> Vertex {
    Vertex::Cyclic(i)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn translating_a_cyclic_cover_keeps_it_a_cover(u in 3u32..60, d_pick in 0u32..30, shift in 0i64..60) {
        let d = 1 + d_pick % (u / 2);
        prop_assume!(2 * d != u);
        let out = lemmas::five_inf_single_diff(u, d).unwrap();
        let moved: Vec<Sun> = out.blocks.iter().map(|s| translate(s, shift, u)).collect();
        prop_assert!(verify_partition(&moved, &out.graph).ok);
    }

    #[test]
    fn canonical_form_ignores_triangle_order(a in 0u32..40, perm in 0usize..6) {
        let v = [a, a + 1, a + 5, a + 2, a + 9, a + 14].map(cyclic);
        let sun = Sun::new(v).unwrap();
        let p = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]][perm];
        let other = Sun::new([v[p[0]], v[p[1]], v[p[2]], v[p[0] + 3], v[p[1] + 3], v[p[2] + 3]]).unwrap();
        prop_assert_eq!(sun.canonical(), other.canonical());
        let block = [a, a + 1, a + 5, a + 2, a + 9, a + 14];
        let relisted = [block[p[0]], block[p[1]], block[p[2]], block[p[0] + 3], block[p[1] + 3], block[p[2] + 3]];
        prop_assert_eq!(canonical_block(&block), canonical_block(&relisted));
    }

    #[test]
    fn counting_condition_is_monotone_in_u(n in 0u32..400, u in 1u32..400) {
        if counting_feasible(n, u).feasible {
            prop_assert!(counting_feasible(n, u + 1).feasible);
        }
    }

    #[test]
    fn difference_cycles_partition_the_points(u in 2u32..200, d_pick in 0u32..100) {
        let d = 1 + d_pick % (u / 2);
        prop_assume!(2 * d != u);
        let cycles = cycles_of_difference(u, d).unwrap();
        let mut points: Vec<u32> = cycles.iter().flatten().copied().collect();
        points.sort_unstable();
        prop_assert_eq!(points, (0..u).collect::<Vec<_>>());
        for c in &cycles {
            prop_assert_eq!(c.len() as u32 * cycles.len() as u32, u);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn plans_partition_differences_and_hole(n in admissible_at_least_9(), extra in 0u32..60, pick in 0usize..4) {
        let u = hole_increment(n, extra, pick);
        let plan = build_plan(n, u).unwrap();
        prop_assert!(plan.validate().is_ok());
        let infinities: BTreeSet<u32> = plan.tasks.iter().flat_map(|t| t.infinity.iter().copied()).collect();
        prop_assert_eq!(infinities, (1..=n).collect::<BTreeSet<_>>());
    }

    #[test]
    fn hole_points_meet_every_cyclic_point_once(n in admissible_at_least_9(), extra in 0u32..30, pick in 0usize..4) {
        prop_assume!(n <= 150);
        let u = hole_increment(n, extra, pick);
        let d = decompose_hole(n, u).unwrap();
        let mut degree: HashMap<u32, u32> = HashMap::new();
        for s in d.suns().unwrap() {
            for e in s.edges() {
                let (a, b) = e.endpoints();
                for v in [a, b] {
                    if let Vertex::Infinity(k) = v {
                        *degree.entry(k).or_default() += 1;
                    }
                }
            }
        }
        prop_assert_eq!(degree.len() as u32, n);
        prop_assert!(degree.values().all(|&k| k == u));
    }

    #[test]
    fn embedding_restricts_to_the_base(q in 1u32..8, r in prop::sample::select(vec![0u32, 3, 4, 7])) {
        let m = 9 + 12 * q + r;
        let base = base_system(9).unwrap();
        let d = embed(&base, m).unwrap();
        let u = m - 9;
        let mut top: Vec<[u32; 6]> = d.blocks.iter()
            .filter(|b| b.iter().all(|&v| v >= u))
            .map(|b| canonical_block(&b.map(|v| v - u)))
            .collect();
        top.sort_unstable();
        prop_assert_eq!(top, base.canonicalized().blocks);
    }

    #[test]
    fn certificates_round_trip(q in 0u32..8, r in prop::sample::select(vec![0u32, 1, 4, 9])) {
        let m = 12 * q + r;
        prop_assume!(m != 4);
        let d = construct_3ss(m).unwrap();
        let text = Certificate::from_decomposition(&d).to_json();
        let back = Certificate::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert!(back.verify().unwrap().ok);
        prop_assert_eq!(back.decomposition().canonicalized(), d.canonicalized());
        prop_assert!(HoleGraph::full(m, 0).edge_count() == 6 * d.blocks.len());
    }
}

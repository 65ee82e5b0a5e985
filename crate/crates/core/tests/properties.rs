use std::sync::OnceLock;

use proptest::prelude::*;
use spaceform::builders::{build_tuple, enumerate_tuples, SpaceFormTuple};
use spaceform::group::{is_isomorphic, Group};
use spaceform::recognition::{classify, classify_with, necessary_conditions, ClassifyOptions};
use spaceform::reps::{free_representation, verify_free, Verdict, DEFAULT_TOL};
use spaceform::wolf::{build_wolf_ii, WolfTypeIIParams};

fn corpus() -> &'static [SpaceFormTuple] {
    static C: OnceLock<Vec<SpaceFormTuple>> = OnceLock::new();
    C.get_or_init(|| enumerate_tuples(200))
}

/// The same group with element `x` renamed to `perm[x]`, keeping 0 fixed.
fn relabel(g: &Group, perm: &[usize]) -> Group {
    let n = g.order();
    let mut rows = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            rows[perm[a]][perm[b]] = perm[g.mul(a, b)];
        }
    }
    Group::from_table(&rows).unwrap()
}

fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    let mut rest: Vec<usize> = (1..n).collect();
    let mut s = seed | 1;
    for i in (1..rest.len()).rev() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        rest.swap(i, (s % (i as u64 + 1)) as usize);
    }
    std::iter::once(0).chain(rest).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn classification_ignores_labels(idx in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let t = idx.get(corpus());
        let g = build_tuple(t).unwrap().group;
        let h = relabel(&g, &shuffled(g.order(), seed));
        prop_assert_eq!(&classify(&h).unwrap().tuple, t);
    }

    #[test]
    fn representations_are_free(idx in any::<prop::sample::Index>()) {
        let t = idx.get(corpus());
        let s = build_tuple(t).unwrap();
        let rep = free_representation(&s, DEFAULT_TOL).unwrap();
        prop_assert_eq!(rep.dim % 2 == 0, s.group.order() > 2);
        prop_assert_eq!(verify_free(&rep).verdict, Verdict::Free);
    }

    #[test]
    fn wolf_presentations_are_groups_or_errors(m in 1u64..12, half_n in 1u64..6, r in -11i64..12, k in -11i64..12, l in -11i64..12) {
        let Ok(p) = WolfTypeIIParams::new(m, 2 * half_n, r, k, l) else { return Ok(()) };
        if let Ok(g) = build_wolf_ii(&p) {
            prop_assert_eq!(g.order() as u64, p.order());
            match classify(&g) {
                Ok(c) => {
                    let rebuilt = build_tuple(&c.tuple).unwrap().group;
                    prop_assert!(is_isomorphic(&g, &rebuilt).unwrap().is_some());
                }
                Err(_) => prop_assert!(necessary_conditions(&g).is_err()),
            }
        }
    }
}

#[test]
fn paranoid_round_trip_up_to_120() {
    let opts = ClassifyOptions { paranoid: true, ..ClassifyOptions::default() };
    for t in enumerate_tuples(120) {
        let g = build_tuple(&t).unwrap().group;
        let c = classify_with(&g, opts).unwrap();
        assert_eq!(c.tuple, t);
        assert!(c.paranoid_checked, "{t}");
    }
}

#[test]
fn odd_core_is_largest_odd_normal_subgroup() {
    let mut groups: Vec<Group> = corpus().iter().map(|t| build_tuple(t).unwrap().group).collect();
    groups.push(spaceform::builders::permutation_group(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]]).unwrap());
    groups.push(
        spaceform::builders::permutation_group(7, &[vec![1, 2, 3, 4, 5, 6, 0], vec![0, 3, 6, 2, 5, 1, 4]]).unwrap(),
    );
    for g in &groups {
        let largest =
            g.normal_subgroups().into_iter().filter(|n| n.order() % 2 == 1).max_by_key(|n| n.order()).unwrap();
        let odd_normal = g.normal_subgroups().into_iter().filter(|n| n.order() % 2 == 1);
        assert!(odd_normal.into_iter().all(|n| n.is_subset_of(&largest)));
        assert_eq!(g.odd_core(), largest, "order {}", g.order());
    }
}

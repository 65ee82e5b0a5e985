//! Enumeration of every valid tuple up to a given order.

use rayon::prelude::*;

use super::tuple::{bbar_for, validate_tuple, SpaceFormTuple, SpaceFormType};
use crate::numtheory::{coprime, p_part, prime_factors};
use crate::units::{admissible, all_subgroups, unit_group, UnitSubgroup};

/// Every valid tuple with `g ≤ max_order`, sorted.
pub fn enumerate_tuples(max_order: u64) -> Vec<SpaceFormTuple> {
    let mut out: Vec<SpaceFormTuple> =
        (1..=max_order.max(1)).into_par_iter().flat_map_iter(|a| tuples_for_modulus(a, max_order)).collect();
    out.sort();
    debug_assert!(out.iter().all(|t| validate_tuple(t).is_ok()));
    out
}

/// The smallest `g` each type can reach for a given `a`, ignoring `b`.
fn min_factor(kind: SpaceFormType) -> u64 {
    match kind {
        SpaceFormType::I => 1,
        SpaceFormType::II => 8,
        SpaceFormType::III => 24,
        SpaceFormType::IV => 48,
        SpaceFormType::V => 120,
        SpaceFormType::VI => 240,
    }
}

fn a_allowed(kind: SpaceFormType, a: u64) -> bool {
    match kind {
        SpaceFormType::I | SpaceFormType::II => a % 2 == 1,
        SpaceFormType::III | SpaceFormType::IV => coprime(a, 6),
        SpaceFormType::V | SpaceFormType::VI => coprime(a, 30),
    }
}

fn tuples_for_modulus(a: u64, max_order: u64) -> Vec<SpaceFormTuple> {
    let kinds: Vec<SpaceFormType> =
        SpaceFormType::ALL.into_iter().filter(|&k| a_allowed(k, a) && a * min_factor(k) <= max_order).collect();
    if kinds.is_empty() {
        return Vec::new();
    }
    let subgroups = all_subgroups(&unit_group(a).expect("a ≥ 1")).expect("a is bounded by the order cap");
    let mut out = Vec::new();
    for kind in kinds {
        for gbar in subgroups.iter().filter(|s| admissible(s, kind, a).is_ok()) {
            let bbar = bbar_for(kind, gbar);
            let budget = max_order / (a * min_factor(kind));
            for b in b_values(bbar, budget) {
                push_tuples(kind, a, gbar, &subgroups, b, max_order, &mut out);
            }
        }
    }
    out
}

/// `b̄` times nontrivial powers of every prime of `b̄`, up to `limit`.
pub(crate) fn b_values(bbar: u64, limit: u64) -> Vec<u64> {
    if bbar == 1 {
        return if limit >= 1 { vec![1] } else { Vec::new() };
    }
    let primes: Vec<u64> = prime_factors(bbar).into_iter().map(|(p, _)| p).collect();
    let mut out = Vec::new();
    fn rec(primes: &[u64], acc: u64, limit: u64, out: &mut Vec<u64>) {
        match primes.split_first() {
            None => out.push(acc),
            Some((&p, rest)) => {
                let mut v = acc * p;
                while v <= limit {
                    rec(rest, v, limit, out);
                    v *= p;
                }
            }
        }
    }
    rec(&primes, bbar, limit, &mut out);
    out.sort_unstable();
    out
}

fn powers(p: u64, from: u64, limit: u64) -> impl Iterator<Item = u64> {
    std::iter::successors(Some(from), move |&x| Some(x * p)).take_while(move |&x| x <= limit)
}

fn push_tuples(
    kind: SpaceFormType,
    a: u64,
    gbar: &UnitSubgroup,
    subgroups: &[UnitSubgroup],
    b: u64,
    max: u64,
    out: &mut Vec<SpaceFormTuple>,
) {
    let base = SpaceFormTuple { kind, g: 0, a, gbar: gbar.clone(), gbar0: None, b, t: None, theta: None };
    let ab = a * b;
    let tbar = p_part(gbar.order(), 2);
    let theta_bar = p_part(gbar.order(), 3);
    match kind {
        SpaceFormType::I => {
            let start = if tbar == 1 { 1 } else { 2 * tbar };
            for t in powers(2, start, max / ab) {
                out.push(SpaceFormTuple { g: ab * t, t: Some(t), ..base.clone() });
            }
        }
        SpaceFormType::II => {
            if 8 * ab <= max {
                out.push(SpaceFormTuple { g: 8 * ab, t: Some(8), ..base.clone() });
            }
            let index_two: Vec<&UnitSubgroup> = subgroups
                .iter()
                .filter(|s| s.is_subgroup_of(gbar))
                .filter(|s| {
                    let index = gbar.order() / s.order();
                    if tbar == 4 {
                        index == 2
                    } else {
                        index <= 2
                    }
                })
                .filter(|s| gbar.odd_part().is_subgroup_of(s))
                .collect();
            for t in powers(2, 16, max / ab) {
                for g0 in &index_two {
                    out.push(SpaceFormTuple { g: ab * t, t: Some(t), gbar0: Some((*g0).clone()), ..base.clone() });
                }
            }
        }
        SpaceFormType::III | SpaceFormType::IV => {
            let factor = if kind == SpaceFormType::III { 8 } else { 16 };
            let start = if kind == SpaceFormType::III { 3 * theta_bar } else { 3 };
            for theta in powers(3, start, max / (factor * ab)) {
                out.push(SpaceFormTuple { g: factor * ab * theta, theta: Some(theta), ..base.clone() });
            }
        }
        SpaceFormType::V | SpaceFormType::VI => {
            let g = min_factor(kind) * ab;
            if g <= max {
                out.push(SpaceFormTuple { g, ..base });
            }
        }
    }
}

/// Number of tuples of each order `1..=max_order`.
pub fn count_by_order(max_order: u64) -> Vec<(u64, usize)> {
    let tuples = enumerate_tuples(max_order);
    (1..=max_order).map(|n| (n, tuples.iter().filter(|t| t.g == n).count())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(max: u64) -> Vec<String> {
        enumerate_tuples(max).iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn up_to_eight() {
        let v = enumerate_tuples(8);
        assert_eq!(v.len(), 9);
        assert_eq!(v.iter().filter(|t| t.g == 8).count(), 2);
        for n in 1..=7 {
            assert_eq!(v.iter().filter(|t| t.g == n).count(), 1, "order {n}");
        }
    }

    #[test]
    fn trivial() {
        assert_eq!(strings(1), vec!["TYPE=I;g=1;a=1;Gbar=[];b=1;t=1"]);
    }

    #[test]
    fn order_twelve() {
        let twelve: Vec<String> = strings(12).into_iter().filter(|s| s.contains(";g=12;")).collect();
        assert_eq!(twelve, vec!["TYPE=I;g=12;a=3;Gbar=[1];b=1;t=4", "TYPE=I;g=12;a=3;Gbar=[1,2];b=1;t=4"]);
    }

    #[test]
    fn b_values_examples() {
        assert_eq!(b_values(1, 10), vec![1]);
        assert_eq!(b_values(3, 100), vec![9, 27, 81]);
        assert_eq!(b_values(15, 1000), vec![225, 675]);
        assert!(b_values(15, 200).is_empty());
    }

    #[test]
    fn every_enumerated_tuple_validates_and_is_unique() {
        let v = enumerate_tuples(400);
        for t in &v {
            assert!(validate_tuple(t).is_ok(), "{t}");
        }
        let mut w = v.clone();
        w.dedup();
        assert_eq!(v.len(), w.len());
    }

    /// Brute force over all small parameter values: everything that
    /// validates must have been enumerated.
    #[test]
    fn enumeration_is_complete() {
        let max = 200;
        let listed = enumerate_tuples(max);
        let mut found = 0;
        for a in 1..=max {
            let subs = all_subgroups(&unit_group(a).unwrap()).unwrap();
            for kind in SpaceFormType::ALL {
                for gbar in &subs {
                    let mut g0s: Vec<Option<UnitSubgroup>> = vec![None];
                    if kind == SpaceFormType::II {
                        g0s.extend(subs.iter().cloned().map(Some));
                    }
                    for b in 1..=max / a {
                        let aux: Vec<(Option<u64>, Option<u64>)> = if kind.has_t() {
                            (0..8).map(|e| (Some(1u64 << e), None)).collect()
                        } else if kind.has_theta() {
                            (0..5).map(|e| (None, Some(3u64.pow(e)))).collect()
                        } else {
                            vec![(None, None)]
                        };
                        for (t, theta) in aux {
                            let g = match kind {
                                SpaceFormType::I | SpaceFormType::II => a * b * t.unwrap(),
                                SpaceFormType::III => 8 * a * b * theta.unwrap(),
                                SpaceFormType::IV => 16 * a * b * theta.unwrap(),
                                SpaceFormType::V => 120 * a * b,
                                SpaceFormType::VI => 240 * a * b,
                            };
                            if g > max {
                                continue;
                            }
                            for g0 in &g0s {
                                let cand =
                                    SpaceFormTuple { kind, g, a, gbar: gbar.clone(), gbar0: g0.clone(), b, t, theta };
                                if validate_tuple(&cand).is_ok() {
                                    found += 1;
                                    assert!(listed.binary_search(&cand).is_ok(), "missing {cand}");
                                }
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(found, listed.len());
    }
}

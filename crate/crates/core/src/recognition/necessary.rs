//! Cheap necessary conditions for a free action on a sphere.

use super::{Rejection, RejectionReason};
use crate::group::{shape_of_2group, Group, TwoGroupShape};

/// Runs the tests in order and reports the first failure:
/// at most one involution; every subgroup of order `pq` (`p`, `q` prime,
/// possibly equal) cyclic; odd Sylow subgroups cyclic; the Sylow
/// 2-subgroup cyclic or generalized quaternion.
pub fn necessary_conditions(g: &Group) -> Result<(), Rejection> {
    let inv = g.involutions();
    if inv.len() > 1 {
        return Err(Rejection::new(RejectionReason::MultipleInvolutions { count: inv.len() }, inv));
    }
    if let Some((x, y, order)) = noncyclic_pq_subgroup(g) {
        return Err(Rejection::new(RejectionReason::NoncyclicPq { order }, vec![x, y]));
    }
    for p in g.prime_divisors() {
        let sylow = g.sylow_subgroup(p);
        let (s, emb) = g.subgroup_as_group(&sylow);
        if p == 2 {
            if shape_of_2group(&s).expect("Sylow 2-subgroup") == TwoGroupShape::Other {
                let gens = g.small_generating_set(&sylow);
                return Err(Rejection::new(RejectionReason::SylowTwoShape, gens));
            }
        } else if !s.is_cyclic() {
            let gens = g.small_generating_set(&sylow);
            debug_assert!(gens.iter().all(|x| emb.contains(x)));
            return Err(Rejection::new(RejectionReason::NoncyclicSylow { p }, gens));
        }
    }
    Ok(())
}

/// A pair `(x, y)` generating a noncyclic subgroup of order `pq`.
///
/// Any such subgroup is generated by an element of each prime order (two
/// commuting elements of order `p` when `p = q`), and after conjugation the
/// first may be taken from a fixed set of class representatives.
fn noncyclic_pq_subgroup(g: &Group) -> Option<(usize, usize, usize)> {
    let prime_elems = g.prime_order_elements();
    for class in g.conjugacy_classes() {
        let x = class[0];
        let p = g.element_order(x);
        if x == 0 || !prime_elems.contains(&x) {
            continue;
        }
        for &y in &prime_elems {
            let q = g.element_order(y);
            if p == q && g.mul(x, y) != g.mul(y, x) {
                continue;
            }
            let cap = p * q;
            if let Some(h) = g.generated_capped(&[x, y], cap) {
                if h.len() == cap && !h.iter().any(|&z| g.element_order(z) == cap) {
                    return Some((x, y, cap));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cyclic, permutation_group, quaternion, sl2_5};
    use crate::group::{direct_product, semidirect_product, GroupHom};

    fn s3() -> Group {
        permutation_group(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    pub(crate) fn nonabelian_21() -> Group {
        let z7 = cyclic(7).unwrap();
        let action: Vec<GroupHom> = [1usize, 2, 4]
            .iter()
            .map(|&u| GroupHom::new(&z7, &z7, (0..7).map(|x| x * u % 7).collect()).unwrap())
            .collect();
        semidirect_product(&z7, &cyclic(3).unwrap(), &action).unwrap()
    }

    #[test]
    fn s3_has_three_involutions() {
        let r = necessary_conditions(&s3()).unwrap_err();
        assert_eq!(r.reason, RejectionReason::MultipleInvolutions { count: 3 });
        assert_eq!(r.witnesses.len(), 3);
        assert!(r.to_string().starts_with("three involutions: ids "));
    }

    #[test]
    fn order_21() {
        let r = necessary_conditions(&nonabelian_21()).unwrap_err();
        assert_eq!(r.reason, RejectionReason::NoncyclicPq { order: 21 });
        assert!(r.to_string().starts_with("noncyclic subgroup of order 21"));
    }

    #[test]
    fn elementary_abelian_9() {
        let g = direct_product(&cyclic(3).unwrap(), &cyclic(3).unwrap());
        let r = necessary_conditions(&g).unwrap_err();
        assert_eq!(r.reason, RejectionReason::NoncyclicPq { order: 9 });
    }

    #[test]
    fn passes() {
        assert!(necessary_conditions(&sl2_5()).is_ok());
        assert!(necessary_conditions(&quaternion(16).unwrap()).is_ok());
        assert!(necessary_conditions(&cyclic(30).unwrap()).is_ok());
        assert!(necessary_conditions(&cyclic(1).unwrap()).is_ok());
    }
}

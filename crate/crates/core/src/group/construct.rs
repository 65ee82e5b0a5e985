//! Quotients, semidirect products and cyclic extensions of order 2.
//!
//! Numbering conventions (relied on by the builders and recognition tests):
//! a pair `(outer, inner)` gets id `outer * |inner group| + inner`.

use super::{Group, GroupHom, Subgroup};
use crate::error::{Error, Result};

/// `G/N` with cosets numbered by their least member, plus the projection.
pub fn quotient_group(g: &Group, n: &Subgroup) -> Result<(Group, GroupHom)> {
    if !g.is_normal(n) {
        return Err(Error::NotNormal { order: n.order() });
    }
    let size = g.order();
    let mut coset = vec![usize::MAX; size];
    let mut reps = Vec::new();
    for x in 0..size {
        if coset[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &k in n.elements() {
            coset[g.mul(x, k)] = id;
        }
    }
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &r in &reps {
        for &s in &reps {
            table.push(coset[g.mul(r, s)] as u32);
        }
    }
    let q = Group::from_flat(m, table)?;
    Ok((q, GroupHom::from_images_unchecked(coset)))
}

/// `N : H` where `action[h]` is the automorphism of `N` induced by `h`.
/// The pair `(n, h)` has id `h * |N| + n`.
pub fn semidirect_product(n: &Group, h: &Group, action: &[GroupHom]) -> Result<Group> {
    if action.len() != h.order() {
        return Err(Error::BadParameter(format!("action has {} entries, H has order {}", action.len(), h.order())));
    }
    for (hid, phi) in action.iter().enumerate() {
        if !is_automorphism(n, phi) {
            return Err(Error::NotAnAutomorphism { h: hid });
        }
    }
    for h1 in h.elements() {
        for h2 in h.elements() {
            let composed = action[h1].compose(&action[h2]);
            if composed != action[h.mul(h1, h2)] {
                return Err(Error::NotAnAction { h1, h2 });
            }
        }
    }
    let nn = n.order();
    let nh = h.order();
    let size = nn * nh;
    let mut table = Vec::with_capacity(size * size);
    for h1 in 0..nh {
        for n1 in 0..nn {
            for h2 in 0..nh {
                let hh = h.mul(h1, h2);
                for n2 in 0..nn {
                    let prod = n.mul(n1, action[h1].apply(n2));
                    table.push((hh * nn + prod) as u32);
                }
            }
        }
    }
    Group::from_flat(size, table)
}

/// `G × H`; the pair `(g, h)` has id `h * |G| + g`.
pub fn direct_product(g: &Group, h: &Group) -> Group {
    let ng = g.order();
    let nh = h.order();
    let size = ng * nh;
    let mut table = Vec::with_capacity(size * size);
    for h1 in 0..nh {
        for g1 in 0..ng {
            for h2 in 0..nh {
                let hh = h.mul(h1, h2);
                for g2 in 0..ng {
                    table.push((hh * ng + g.mul(g1, g2)) as u32);
                }
            }
        }
    }
    Group::from_flat(size, table).expect("direct product of groups is a group")
}

/// Adjoins `φ` with `φ k φ⁻¹ = alpha(k)` and `φ² = z`. The element `k φ^ε`
/// has id `ε * |K| + k`; `(identity, 1)` has order 4 when `z` is an
/// involution.
pub fn adjoin_order4(k: &Group, alpha: &GroupHom, z: usize) -> Result<Group> {
    let n = k.order();
    if z >= n {
        return Err(Error::PreconditionViolated(format!("z = {z} is not an element")));
    }
    if alpha.images().len() != n || !is_automorphism(k, alpha) {
        return Err(Error::PreconditionViolated("alpha is not an automorphism".into()));
    }
    if (0..n).any(|x| k.mul(x, z) != k.mul(z, x)) {
        return Err(Error::PreconditionViolated(format!("z = {z} is not central")));
    }
    if alpha.apply(z) != z {
        return Err(Error::PreconditionViolated("alpha does not fix z".into()));
    }
    if (0..n).any(|x| alpha.apply(alpha.apply(x)) != x) {
        return Err(Error::PreconditionViolated("alpha is not an involution".into()));
    }
    let size = 2 * n;
    let mut table = Vec::with_capacity(size * size);
    for e1 in 0..2 {
        for k1 in 0..n {
            for e2 in 0..2 {
                for k2 in 0..n {
                    let (prod, e) = match (e1, e2) {
                        (0, _) => (k.mul(k1, k2), e2),
                        (1, 0) => (k.mul(k1, alpha.apply(k2)), 1),
                        _ => (k.mul(k.mul(k1, alpha.apply(k2)), z), 0),
                    };
                    table.push((e * n + prod) as u32);
                }
            }
        }
    }
    Group::from_flat(size, table)
}

pub(crate) fn is_automorphism(g: &Group, phi: &GroupHom) -> bool {
    if phi.images().len() != g.order() || !phi.is_bijective() || phi.apply(0) != 0 {
        return false;
    }
    g.elements().all(|x| g.elements().all(|y| phi.apply(g.mul(x, y)) == g.mul(phi.apply(x), phi.apply(y))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{binary_dihedral, cyclic, quaternion, sl2_3, sl2_5};
    use crate::group::{extend_to_hom, find_outer_involution, is_isomorphic};

    fn power_map(m: usize, u: usize) -> GroupHom {
        GroupHom::from_images_unchecked((0..m).map(|x| x * u % m).collect())
    }

    #[test]
    fn quotient_examples() {
        let z4 = cyclic(4).unwrap();
        let n = z4.generated(&[2]);
        let (q, proj) = quotient_group(&z4, &n).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj.images(), &[0, 1, 0, 1]);

        let s = sl2_3();
        let (q, _) = quotient_group(&s, &Subgroup::trivial()).unwrap();
        assert_eq!(q, s);

        let bd = binary_dihedral(12).unwrap();
        let (q, _) = quotient_group(&bd, &bd.odd_core()).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.is_cyclic());
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s = sl2_3();
        let p3 = s.sylow_subgroup(3);
        assert!(matches!(quotient_group(&s, &p3), Err(Error::NotNormal { order: 3 })));
    }

    #[test]
    fn inverting_z3_by_z4_is_binary_dihedral_12() {
        let z3 = cyclic(3).unwrap();
        let z4 = cyclic(4).unwrap();
        let action: Vec<GroupHom> = (0..4).map(|h| power_map(3, if h % 2 == 0 { 1 } else { 2 })).collect();
        let g = semidirect_product(&z3, &z4, &action).unwrap();
        assert_eq!(g.order(), 12);
        assert!(is_isomorphic(&g, &binary_dihedral(12).unwrap()).unwrap().is_some());
    }

    #[test]
    fn trivial_action_is_direct_product() {
        let z3 = cyclic(3).unwrap();
        let q8 = quaternion(8).unwrap();
        let action = vec![GroupHom::identity(&z3); 8];
        let g = semidirect_product(&z3, &q8, &action).unwrap();
        assert_eq!(g, direct_product(&z3, &q8));
    }

    #[test]
    fn nonabelian_21() {
        let z7 = cyclic(7).unwrap();
        let z3 = cyclic(3).unwrap();
        let action: Vec<GroupHom> = [1, 2, 4].iter().map(|&u| power_map(7, u)).collect();
        let g = semidirect_product(&z7, &z3, &action).unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
        assert!(!g.is_cyclic());
    }

    #[test]
    fn semidirect_errors() {
        let z7 = cyclic(7).unwrap();
        let z3 = cyclic(3).unwrap();
        let bad = vec![GroupHom::identity(&z7), GroupHom::from_images_unchecked(vec![0; 7]), GroupHom::identity(&z7)];
        assert!(matches!(semidirect_product(&z7, &z3, &bad), Err(Error::NotAnAutomorphism { h: 1 })));
        // Multiplication by 3 has order 6 mod 7, so it cannot come from Z/3.
        let not_action: Vec<GroupHom> = [1, 3, 2].iter().map(|&u| power_map(7, u)).collect();
        assert!(matches!(semidirect_product(&z7, &z3, &not_action), Err(Error::NotAnAction { .. })));
    }

    #[test]
    fn adjoin_to_z2_gives_z4() {
        let z2 = cyclic(2).unwrap();
        let g = adjoin_order4(&z2, &GroupHom::identity(&z2), 1).unwrap();
        assert!(g.is_cyclic());
        assert_eq!(g.element_order(2), 4);
    }

    #[test]
    fn adjoin_preconditions_reported_individually() {
        let s = sl2_3();
        let id = GroupHom::identity(&s);
        let noncentral = (1..24).find(|&x| s.element_order(x) == 3).unwrap();
        let err = adjoin_order4(&s, &id, noncentral).unwrap_err();
        assert!(matches!(&err, Error::PreconditionViolated(m) if m.contains("central")), "{err}");

        let z3 = cyclic(3).unwrap();
        let err = adjoin_order4(&z3, &GroupHom::from_images_unchecked(vec![0, 0, 0]), 0).unwrap_err();
        assert!(matches!(&err, Error::PreconditionViolated(m) if m.contains("automorphism")));

        let z4 = cyclic(4).unwrap();
        let inv = power_map(4, 3);
        let err = adjoin_order4(&z4, &inv, 1).unwrap_err();
        assert!(matches!(&err, Error::PreconditionViolated(m) if m.contains("fix z")), "{err}");

        let z7 = cyclic(7).unwrap();
        let err = adjoin_order4(&z7, &power_map(7, 2), 0).unwrap_err();
        assert!(matches!(&err, Error::PreconditionViolated(m) if m.contains("involution")), "{err}");
    }

    #[test]
    fn adjoin_to_sl2_5_by_outer_involution() {
        let g = sl2_5();
        let alpha = find_outer_involution(&g, |_| true).unwrap();
        let z = g.center().elements()[1];
        let big = adjoin_order4(&g, &alpha, z).unwrap();
        assert_eq!(big.order(), 240);
        assert_eq!(big.involutions().len(), 1);
        assert_eq!(big.element_order(120), 4);
    }

    #[test]
    fn extend_hom_builds_q8_rotation() {
        let q = quaternion(8).unwrap();
        // x = i (id 1), y = j (id 4); i -> j, j -> k = ij.
        let c = extend_to_hom(&q, &[1, 4], &[4, q.mul(1, 4)], &q).unwrap();
        assert!(is_automorphism(&q, &c));
        let c3 = c.compose(&c).compose(&c);
        assert_eq!(c3, GroupHom::identity(&q));
    }
}

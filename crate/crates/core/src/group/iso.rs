//! Brute-force isomorphism search by backtracking over generator images.

use std::collections::{BTreeSet, HashMap};
use std::ops::ControlFlow;

use super::{Group, GroupHom, Subgroup};
use crate::error::{Error, Result};

pub const DEFAULT_ISO_CAP: usize = 1024;

const UNSET: u32 = u32::MAX;

/// Extends `gens[i] ↦ images[i]` to a homomorphism `src → tgt`.
///
/// Returns `None` if the assignment is inconsistent or `gens` does not
/// generate `src`.
pub fn extend_to_hom(src: &Group, gens: &[usize], images: &[usize], tgt: &Group) -> Option<GroupHom> {
    let map = extend_partial(src, gens, images, tgt, false)?;
    if map.iter().any(|&v| v == UNSET) {
        return None;
    }
    Some(GroupHom::from_images_unchecked(map.into_iter().map(|v| v as usize).collect()))
}

/// Defines the map on `⟨gens⟩` along a breadth-first spanning tree and
/// checks `φ(x s) = φ(x) φ(s)` on every edge, which makes it a
/// homomorphism on `⟨gens⟩`. With `injective`, a repeated image fails.
fn extend_partial(src: &Group, gens: &[usize], images: &[usize], tgt: &Group, injective: bool) -> Option<Vec<u32>> {
    let mut map = vec![UNSET; src.order()];
    let mut used = if injective { vec![false; tgt.order()] } else { Vec::new() };
    map[0] = 0;
    if injective {
        used[0] = true;
    }
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        let fx = map[x] as usize;
        for (&s, &t) in gens.iter().zip(images) {
            let y = src.mul(x, s);
            let fy = tgt.mul(fx, t) as u32;
            if map[y] == UNSET {
                if injective {
                    if used[fy as usize] {
                        return None;
                    }
                    used[fy as usize] = true;
                }
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// Returns an isomorphism `g → h` or `None`. Errors with `TooLarge` when
/// both orders exceed [`DEFAULT_ISO_CAP`].
pub fn is_isomorphic(g: &Group, h: &Group) -> Result<Option<GroupHom>> {
    is_isomorphic_with_cap(g, h, DEFAULT_ISO_CAP)
}

pub fn is_isomorphic_with_cap(g: &Group, h: &Group, cap: usize) -> Result<Option<GroupHom>> {
    if g.order() != h.order() {
        return Ok(None);
    }
    if g.order() > cap && h.order() > cap {
        return Err(Error::TooLarge { order: g.order(), cap });
    }
    if !invariants_match(g, h) {
        return Ok(None);
    }
    let mut found = None;
    for_each_isomorphism(g, h, true, |phi| {
        found = Some(phi.clone());
        ControlFlow::Break(())
    });
    Ok(found)
}

fn invariants_match(g: &Group, h: &Group) -> bool {
    let mut sg = g.signatures().to_vec();
    let mut sh = h.signatures().to_vec();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return false;
    }
    g.center().order() == h.center().order() && g.derived_subgroup().order() == h.derived_subgroup().order()
}

/// Greedy generating set: repeatedly adjoin the element that enlarges the
/// generated subgroup most, preferring elements whose signature is rare.
fn search_generators(g: &Group) -> Vec<usize> {
    let sig = g.signatures();
    let mut bucket: HashMap<_, usize> = HashMap::new();
    for s in sig {
        *bucket.entry(*s).or_default() += 1;
    }
    let mut gens: Vec<usize> = Vec::new();
    let mut current = Subgroup::trivial();
    while current.order() < g.order() {
        let mut best: Option<(usize, usize, usize, Subgroup)> = None;
        for x in g.elements() {
            if current.contains(x) {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(x);
            let sub = g.generated(&trial);
            let key = (sub.order(), usize::MAX - bucket[&sig[x]]);
            let better = match &best {
                None => true,
                Some((o, b, _, _)) => key > (*o, *b),
            };
            if better {
                best = Some((key.0, key.1, x, sub));
            }
        }
        let (_, _, x, sub) = best.expect("a proper subgroup misses some element");
        gens.push(x);
        current = sub;
    }
    gens
}

/// Calls `f` on isomorphisms `g → h` in least-image-first order until it
/// breaks. With `up_to_inner`, the first generator is only sent to one
/// representative per conjugacy class of `h`, which still finds an
/// isomorphism whenever one exists.
pub fn for_each_isomorphism<F>(g: &Group, h: &Group, up_to_inner: bool, mut f: F)
where
    F: FnMut(&GroupHom) -> ControlFlow<()>,
{
    if g.order() != h.order() {
        return;
    }
    if g.order() == 1 {
        let _ = f(&GroupHom::from_images_unchecked(vec![0]));
        return;
    }
    let gens = search_generators(g);
    let gsig = g.signatures();
    let hsig = h.signatures();
    let cands: Vec<Vec<usize>> = gens
        .iter()
        .enumerate()
        .map(|(level, &x)| {
            if level == 0 && up_to_inner {
                h.conjugacy_classes().iter().map(|c| c[0]).filter(|&y| hsig[y] == gsig[x]).collect()
            } else {
                h.elements().filter(|&y| hsig[y] == gsig[x]).collect()
            }
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    let _ = search(g, h, &gens, &cands, &mut images, &mut f);
}

fn search<F>(
    g: &Group,
    h: &Group,
    gens: &[usize],
    cands: &[Vec<usize>],
    images: &mut Vec<usize>,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&GroupHom) -> ControlFlow<()>,
{
    let level = images.len();
    let gsig = g.signatures();
    let hsig = h.signatures();
    for &c in &cands[level] {
        let mut ok = true;
        for j in 0..level {
            if gsig[g.mul(gens[j], gens[level])] != hsig[h.mul(images[j], c)]
                || gsig[g.mul(gens[level], gens[j])] != hsig[h.mul(c, images[j])]
            {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        images.push(c);
        if let Some(map) = extend_partial(g, &gens[..=level], images, h, true) {
            if level + 1 == gens.len() {
                debug_assert!(map.iter().all(|&v| v != UNSET));
                let hom = GroupHom::from_images_unchecked(map.into_iter().map(|v| v as usize).collect());
                f(&hom)?;
            } else {
                search(g, h, gens, cands, images, f)?;
            }
        }
        images.pop();
    }
    ControlFlow::Continue(())
}

/// Every automorphism of `g`, in search order.
pub fn automorphisms(g: &Group) -> Vec<GroupHom> {
    let mut out = Vec::new();
    for_each_isomorphism(g, g, false, |phi| {
        out.push(phi.clone());
        ControlFlow::Continue(())
    });
    out
}

/// Distinct conjugation maps `x ↦ c x c⁻¹`.
pub fn inner_automorphisms(g: &Group) -> Vec<GroupHom> {
    let set: BTreeSet<Vec<usize>> = g.elements().map(|c| g.elements().map(|x| g.conj(c, x)).collect()).collect();
    set.into_iter().map(GroupHom::from_images_unchecked).collect()
}

/// First automorphism (least generator images first) that is an
/// involution, is not inner, and satisfies `constraint`.
pub fn find_outer_involution<F>(g: &Group, constraint: F) -> Result<GroupHom>
where
    F: Fn(&GroupHom) -> bool,
{
    let inner: BTreeSet<Vec<usize>> = inner_automorphisms(g).into_iter().map(|a| a.images().to_vec()).collect();
    let mut found = None;
    for_each_isomorphism(g, g, false, |phi| {
        let involutive = g.elements().all(|x| phi.apply(phi.apply(x)) == x);
        if involutive && !inner.contains(phi.images()) && constraint(phi) {
            found = Some(phi.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found.ok_or_else(|| Error::NotFound("no outer involutive automorphism satisfies the constraint".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{binary_dihedral, cyclic, quaternion, sl2_3, sl2_5};
    use crate::group::direct_product;

    #[test]
    fn z4_vs_klein() {
        let z4 = cyclic(4).unwrap();
        let v4 = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap());
        assert!(is_isomorphic(&z4, &v4).unwrap().is_none());
    }

    #[test]
    fn found_maps_are_isomorphisms() {
        let a = binary_dihedral(24).unwrap();
        let b = direct_product(&cyclic(3).unwrap(), &quaternion(8).unwrap());
        assert!(is_isomorphic(&a, &b).unwrap().is_none());
        let c = direct_product(&quaternion(8).unwrap(), &cyclic(3).unwrap());
        let phi = is_isomorphic(&b, &c).unwrap().unwrap();
        GroupHom::new(&b, &c, phi.images().to_vec()).unwrap();
        assert!(phi.is_bijective());
    }

    #[test]
    fn too_large() {
        let g = cyclic(1100).unwrap();
        assert!(matches!(is_isomorphic(&g, &g), Err(Error::TooLarge { .. })));
        assert!(is_isomorphic_with_cap(&g, &g, 2048).unwrap().is_some());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&quaternion(8).unwrap()).len(), 24);
        assert_eq!(automorphisms(&cyclic(7).unwrap()).len(), 6);
        assert_eq!(automorphisms(&sl2_3()).len(), 24);
        assert_eq!(inner_automorphisms(&sl2_3()).len(), 12);
    }

    #[test]
    fn sl2_5_automorphisms_and_outer_involution() {
        let g = sl2_5();
        let aut = automorphisms(&g);
        assert_eq!(aut.len(), 120);
        assert_eq!(inner_automorphisms(&g).len(), 60);
        let alpha = find_outer_involution(&g, |_| true).unwrap();
        assert!(g.elements().all(|x| alpha.apply(alpha.apply(x)) == x));
        assert_ne!(alpha, GroupHom::identity(&g));
    }

    #[test]
    fn sl2_3_outer_involution_inverting_an_order_3_element() {
        let g = sl2_3();
        let theta = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let alpha = find_outer_involution(&g, |a| a.apply(theta) == g.inv(theta)).unwrap();
        assert_eq!(alpha.apply(theta), g.inv(theta));
        // It acts on the normal Q8 as an outer automorphism of order 2.
        let q8 = g.sylow_subgroup(2);
        assert!(q8.elements().iter().all(|&x| q8.contains(alpha.apply(x))));
    }

    #[test]
    fn z5_outer_involution_is_inversion() {
        let g = cyclic(5).unwrap();
        let alpha = find_outer_involution(&g, |_| true).unwrap();
        assert_eq!(alpha.images(), &[0, 4, 3, 2, 1]);
        assert!(matches!(find_outer_involution(&g, |_| false), Err(Error::NotFound(_))));
    }

    #[test]
    fn extend_to_hom_rejects_inconsistent() {
        let z4 = cyclic(4).unwrap();
        let z2 = cyclic(2).unwrap();
        assert!(extend_to_hom(&z4, &[1], &[1], &z2).is_some());
        let z3 = cyclic(3).unwrap();
        assert!(extend_to_hom(&z4, &[1], &[1], &z3).is_none());
        // {2} does not generate Z/4.
        assert!(extend_to_hom(&z4, &[2], &[0], &z2).is_none());
    }
}

//! Building a group from its tuple.
//!
//! Every product is numbered `outer * |inner| + inner`, so the witness
//! subgroups sit at predictable ids:
//!
//! * I, II: `A : H` with `H = B × T`; `A` is `0..a`.
//! * III: `(Q8 × A) : (B × Θ)`; `Q8` is `0..8`, `A` is `{8α}`.
//! * IV: the type III group `K` with `φ` adjoined; `φ` is `|K|`.
//! * V: `2A5 × (A : B)`; `2A5` is `0..120`, `A` is `{120α}`.
//! * VI: the type V group `K` with `φ` adjoined; `φ` is `|K|`.

use std::sync::OnceLock;

use super::named::{cyclic, quaternion, sl2_5};
use super::tuple::{validate_tuple, SpaceFormTuple, SpaceFormType};
use crate::error::{Error, Result};
use crate::group::{
    adjoin_order4, direct_product, extend_to_hom, find_outer_involution, semidirect_product, Group, GroupHom, Subgroup,
    DEFAULT_MAX_ORDER,
};
use crate::units::UnitSubgroup;

/// Named subgroups of a built group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnesses {
    pub a: Subgroup,
    pub b: Subgroup,
    pub t: Option<Subgroup>,
    pub q8: Option<Subgroup>,
    pub theta: Option<Subgroup>,
    pub phi: Option<Subgroup>,
    pub binary_icosahedral: Option<Subgroup>,
}

#[derive(Clone, Debug)]
pub struct StructuredGroup {
    pub group: Group,
    pub tuple: SpaceFormTuple,
    pub witnesses: Witnesses,
}

/// Builds the group of a valid tuple, refusing orders above
/// [`DEFAULT_MAX_ORDER`].
pub fn build_tuple(t: &SpaceFormTuple) -> Result<StructuredGroup> {
    build_tuple_with_limit(t, DEFAULT_MAX_ORDER)
}

pub fn build_tuple_with_limit(t: &SpaceFormTuple, max_order: usize) -> Result<StructuredGroup> {
    validate_tuple(t).map_err(Error::InvalidTuple)?;
    if t.g > max_order as u64 {
        return Err(Error::TooLarge { order: t.g as usize, cap: max_order });
    }
    let s = match t.kind {
        SpaceFormType::I | SpaceFormType::II => build_metacyclic(t)?,
        SpaceFormType::III => build_type_iii(t)?,
        SpaceFormType::IV => build_type_iv(t)?,
        SpaceFormType::V => build_type_v(t)?,
        SpaceFormType::VI => build_type_vi(t)?,
    };
    spot_check(&s)?;
    Ok(s)
}

fn internal(msg: impl Into<String>) -> Error {
    Error::InternalConsistency(msg.into())
}

/// `α ↦ α u` on `Z/a`.
fn power_map(a: usize, u: u64) -> GroupHom {
    let u = u as usize;
    GroupHom::from_images_unchecked((0..a).map(|x| x * u % a).collect())
}

/// Least generator of the order-`d` subgroup of `Ḡ` (a Hall subgroup).
fn hall_generator(gbar: &UnitSubgroup, d: u64) -> u64 {
    gbar.torsion(d).least_generator().expect("Hall subgroups of a cyclic part are cyclic")
}

/// The element of `Ḡ` by which a generator of `B` acts.
fn b_action(t: &SpaceFormTuple) -> u64 {
    hall_generator(&t.gbar, t.bbar())
}

/// The unique involution of `Ḡ`, or the identity residue.
fn gbar_involution(gbar: &UnitSubgroup) -> u64 {
    gbar.involutions().first().copied().unwrap_or(gbar.identity())
}

fn ids(it: impl IntoIterator<Item = usize>) -> Subgroup {
    let mut v: Vec<usize> = it.into_iter().collect();
    v.sort_unstable();
    Subgroup::from_sorted_unchecked(v)
}

/// Types I and II: `A : (B × T)`.
fn build_metacyclic(t: &SpaceFormTuple) -> Result<StructuredGroup> {
    let (a, b, tt) = (t.a as usize, t.b as usize, t.t.expect("validated") as usize);
    let gbar = &t.gbar;
    let ub = b_action(t);
    let tgroup = if t.kind == SpaceFormType::I { cyclic(tt)? } else { quaternion(tt)? };
    let t_images: Vec<u64> = if t.kind == SpaceFormType::I {
        let ut = hall_generator(gbar, t.tbar());
        (0..tt).map(|k| gbar.pow(ut, k as u64)).collect()
    } else {
        let (ux, uy) = quaternion_images(t)?;
        let half = tt / 2;
        (0..tt).map(|id| gbar.mul(gbar.pow(ux, (id % half) as u64), gbar.pow(uy, (id / half) as u64))).collect()
    };
    let bgroup = cyclic(b)?;
    let h = direct_product(&bgroup, &tgroup);
    let action: Vec<GroupHom> = (0..h.order())
        .map(|id| {
            let (beta, tau) = (id % b, id / b);
            power_map(a, gbar.mul(gbar.pow(ub, beta as u64), t_images[tau]))
        })
        .collect();
    let group = semidirect_product(&cyclic(a)?, &h, &action)?;
    let witnesses = Witnesses {
        a: ids(0..a),
        b: ids((0..b).map(|beta| beta * a)),
        t: Some(ids((0..tt).map(|tau| tau * b * a))),
        q8: None,
        theta: None,
        phi: None,
        binary_icosahedral: None,
    };
    Ok(StructuredGroup { group, tuple: t.clone(), witnesses })
}

/// Images `(u_x, u_y)` of the quaternion generators: the least pair
/// generating the 2-part of `Ḡ`, with `u_x` generating the 2-part of `Ḡ₀`
/// when `Ḡ₀` is present.
fn quaternion_images(t: &SpaceFormTuple) -> Result<(u64, u64)> {
    let two = t.gbar.two_part();
    let target0 = t.gbar0.as_ref().map(|g0| g0.two_part());
    for &ux in two.residues() {
        if let Some(t0) = &target0 {
            if UnitSubgroup::generated(t.a, &[ux]) != *t0 {
                continue;
            }
        }
        for &uy in two.residues() {
            if UnitSubgroup::generated(t.a, &[ux, uy]) == two {
                return Ok((ux, uy));
            }
        }
    }
    Err(internal("no surjection of the quaternion group onto the 2-part of Gbar"))
}

/// `Q8` with `x = i` (id 1) and `y = j` (id 4): the automorphism `c` cycling
/// `i → j → k` and the involution `σ: i ↦ −j, j ↦ −i` that inverts it.
fn q8_with_automorphisms() -> (Group, GroupHom, GroupHom) {
    let q = quaternion(8).expect("Q8");
    let k = q.mul(1, 4);
    let c = extend_to_hom(&q, &[1, 4], &[4, k], &q).expect("3-cycle on Q8");
    let sigma = extend_to_hom(&q, &[1, 4], &[6, 3], &q).expect("involution on Q8");
    (q, c, sigma)
}

/// `(Q8 × A) : (B × Θ)` with `Θ` acting on `A` through the residue `u_theta`.
fn type_iii_core(t: &SpaceFormTuple, u_theta: u64, ub: u64) -> Result<(Group, Witnesses)> {
    let (a, b, th) = (t.a as usize, t.b as usize, t.theta.expect("validated") as usize);
    let gbar = &t.gbar;
    let (q8, c, _) = q8_with_automorphisms();
    let c2 = c.compose(&c);
    let n = direct_product(&q8, &cyclic(a)?);
    let h = direct_product(&cyclic(b)?, &cyclic(th)?);
    let action: Vec<GroupHom> = (0..h.order())
        .map(|id| {
            let (beta, theta) = (id % b, id / b);
            let on_q8 = match theta % 3 {
                0 => GroupHom::identity(&q8),
                1 => c.clone(),
                _ => c2.clone(),
            };
            let u = gbar.mul(gbar.pow(ub, beta as u64), gbar.pow(u_theta, theta as u64));
            let images = (0..8 * a).map(|x| (x / 8 * u as usize % a) * 8 + on_q8.apply(x % 8)).collect();
            GroupHom::from_images_unchecked(images)
        })
        .collect();
    let group = semidirect_product(&n, &h, &action)?;
    let na = 8 * a;
    let witnesses = Witnesses {
        a: ids((0..a).map(|alpha| 8 * alpha)),
        b: ids((0..b).map(|beta| beta * na)),
        t: None,
        q8: Some(ids(0..8)),
        theta: Some(ids((0..th).map(|theta| theta * b * na))),
        phi: None,
        binary_icosahedral: None,
    };
    Ok((group, witnesses))
}

fn build_type_iii(t: &SpaceFormTuple) -> Result<StructuredGroup> {
    let u_theta = hall_generator(&t.gbar, t.theta_bar());
    let (group, witnesses) = type_iii_core(t, u_theta, b_action(t))?;
    Ok(StructuredGroup { group, tuple: t.clone(), witnesses })
}

fn build_type_iv(t: &SpaceFormTuple) -> Result<StructuredGroup> {
    let (a, b, th) = (t.a as usize, t.b as usize, t.theta.expect("validated") as usize);
    let gbar = &t.gbar;
    let (core, mut witnesses) = type_iii_core(t, gbar.identity(), b_action(t))?;
    let (_, _, sigma) = q8_with_automorphisms();
    let iota = gbar_involution(gbar) as usize;
    let na = 8 * a;
    let alpha: Vec<usize> = (0..core.order())
        .map(|id| {
            let (nid, hid) = (id % na, id / na);
            let (q, x) = (nid % 8, nid / 8);
            let (beta, theta) = (hid % b, hid / b);
            let n_img = (x * iota % a) * 8 + sigma.apply(q);
            let h_img = ((th - theta) % th) * b + beta;
            h_img * na + n_img
        })
        .collect();
    let alpha = GroupHom::from_images_unchecked(alpha);
    let group = adjoin_order4(&core, &alpha, 2)?;
    let k = core.order();
    witnesses.phi = Some(ids([0, 2, k, k + 2]));
    Ok(StructuredGroup { group, tuple: t.clone(), witnesses })
}

/// `A : B` with `B` acting through `u_b`; `(α, β)` has id `β a + α`.
fn a_by_b(t: &SpaceFormTuple) -> Result<Group> {
    let (a, b) = (t.a as usize, t.b as usize);
    let ub = b_action(t);
    let action: Vec<GroupHom> = (0..b).map(|beta| power_map(a, t.gbar.pow(ub, beta as u64))).collect();
    semidirect_product(&cyclic(a)?, &cyclic(b)?, &action)
}

fn type_v_core(t: &SpaceFormTuple) -> Result<(Group, Witnesses)> {
    let (a, b) = (t.a as usize, t.b as usize);
    let group = direct_product(&sl2_5(), &a_by_b(t)?);
    let witnesses = Witnesses {
        a: ids((0..a).map(|alpha| 120 * alpha)),
        b: ids((0..b).map(|beta| 120 * a * beta)),
        t: None,
        q8: None,
        theta: None,
        phi: None,
        binary_icosahedral: Some(ids(0..120)),
    };
    Ok((group, witnesses))
}

fn build_type_v(t: &SpaceFormTuple) -> Result<StructuredGroup> {
    let (group, witnesses) = type_v_core(t)?;
    Ok(StructuredGroup { group, tuple: t.clone(), witnesses })
}

/// The canonical outer involution of SL(2,5): the first one found by the
/// least-image-first automorphism search.
pub(crate) fn sl2_5_outer_involution() -> &'static GroupHom {
    static ALPHA: OnceLock<GroupHom> = OnceLock::new();
    ALPHA.get_or_init(|| find_outer_involution(&sl2_5(), |_| true).expect("SL(2,5) has outer involutions"))
}

/// The central involution of SL(2,5).
pub(crate) fn sl2_5_central_involution() -> usize {
    sl2_5().center().elements()[1]
}

fn build_type_vi(t: &SpaceFormTuple) -> Result<StructuredGroup> {
    let a = t.a as usize;
    let (core, mut witnesses) = type_v_core(t)?;
    let omega = sl2_5_outer_involution();
    let iota = gbar_involution(&t.gbar) as usize;
    let alpha: Vec<usize> = (0..core.order())
        .map(|id| {
            let (s, ab) = (id % 120, id / 120);
            let (x, beta) = (ab % a, ab / a);
            (beta * a + x * iota % a) * 120 + omega.apply(s)
        })
        .collect();
    let z = sl2_5_central_involution();
    let group = adjoin_order4(&core, &GroupHom::from_images_unchecked(alpha), z)?;
    let k = core.order();
    witnesses.phi = Some(ids([0, z, k, k + z]));
    Ok(StructuredGroup { group, tuple: t.clone(), witnesses })
}

/// Cheap structural checks; a failure means a bug in this module.
fn spot_check(s: &StructuredGroup) -> Result<()> {
    let g = &s.group;
    let t = &s.tuple;
    let w = &s.witnesses;
    if g.order() as u64 != t.g {
        return Err(internal(format!("built order {} but g = {}", g.order(), t.g)));
    }
    if g.involutions().len() > 1 {
        return Err(internal("more than one involution"));
    }
    let subgroup_ok = |h: &Subgroup| g.generated(h.elements()) == *h;
    let cyclic_of =
        |h: &Subgroup, n: u64| h.order() as u64 == n && h.elements().iter().any(|&x| g.element_order(x) as u64 == n);
    if !subgroup_ok(&w.a) || !cyclic_of(&w.a, t.a) || !g.is_normal(&w.a) {
        return Err(internal("A is not a normal cyclic subgroup of order a"));
    }
    if !subgroup_ok(&w.b) || !cyclic_of(&w.b, t.b) {
        return Err(internal("B is not cyclic of order b"));
    }
    if let Some(tw) = &w.t {
        if !subgroup_ok(tw) || tw.order() as u64 != t.t.expect("validated") {
            return Err(internal("T has the wrong order"));
        }
        // The involution of T centralizes A.
        if let Some(&inv) = g.involutions().first() {
            if t.kind == SpaceFormType::I
                && tw.contains(inv)
                && !w.a.elements().iter().all(|&x| g.mul(inv, x) == g.mul(x, inv))
            {
                return Err(internal("the involution does not centralize A"));
            }
        }
    }
    if let Some(q) = &w.q8 {
        if !subgroup_ok(q) || q.order() != 8 || !g.is_normal(q) {
            return Err(internal("Q8 is not a normal subgroup of order 8"));
        }
    }
    if let Some(th) = &w.theta {
        if !subgroup_ok(th) || !cyclic_of(th, t.theta.expect("validated")) {
            return Err(internal("Θ is not cyclic of order θ"));
        }
    }
    if let Some(phi) = &w.phi {
        if !subgroup_ok(phi) || !cyclic_of(phi, 4) {
            return Err(internal("Φ is not cyclic of order 4"));
        }
    }
    if let Some(f) = &w.binary_icosahedral {
        if !subgroup_ok(f) || f.order() != 120 || !g.is_normal(f) {
            return Err(internal("2A5 is not a normal subgroup of order 120"));
        }
    }
    Ok(())
}

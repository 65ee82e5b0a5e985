//! Type dispatch and invariant extraction.

use std::sync::OnceLock;

use super::metacyclic::{metacyclic_decompose_subgroup, power_exponent, MetacyclicDecomposition};
use super::necessary::necessary_conditions;
use super::{Rejection, RejectionReason};
use crate::builders::{build_tuple, sl2_3, sl2_5, validate_tuple, SpaceFormTuple, SpaceFormType};
use crate::error::Error;
use crate::group::{is_isomorphic, quotient_group, shape_of_2group, Group, Subgroup, TwoGroupShape};
use crate::units::UnitSubgroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Rebuild from the extracted tuple and confirm isomorphism.
    pub paranoid: bool,
    /// Run [`necessary_conditions`] first. With this off, groups that are
    /// not space-form groups are rejected by the structure checks alone.
    pub check_necessary: bool,
}

impl Default for ClassifyOptions {
    fn default() -> ClassifyOptions {
        ClassifyOptions { paranoid: false, check_necessary: true }
    }
}

/// A recognized group: its tuple and the subgroups it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub tuple: SpaceFormTuple,
    /// `O(G)`.
    pub odd_core: Subgroup,
    pub a: Subgroup,
    pub b: Subgroup,
    /// The generator of `A` used to read off `Ḡ`.
    pub a_generator: usize,
    /// Whether the paranoid rebuild ran (it is skipped above the size caps).
    pub paranoid_checked: bool,
}

pub type ClassificationResult = Result<Classification, Rejection>;

pub fn classify(g: &Group) -> ClassificationResult {
    classify_with(g, ClassifyOptions::default())
}

fn sl2_3_cached() -> &'static Group {
    static G: OnceLock<Group> = OnceLock::new();
    G.get_or_init(sl2_3)
}

fn sl2_5_cached() -> &'static Group {
    static G: OnceLock<Group> = OnceLock::new();
    G.get_or_init(sl2_5)
}

fn reject(reason: RejectionReason) -> Rejection {
    Rejection::new(reason, Vec::new())
}

fn from_error(e: Error) -> Rejection {
    match e {
        Error::NonCyclicSylow { p } => reject(RejectionReason::NoncyclicSylow { p }),
        other => reject(RejectionReason::StructureConditions {
            violations: vec![crate::builders::Violation { field: "TYPE", message: other.to_string() }],
        }),
    }
}

fn is_iso(g: &Group, h: &Group) -> bool {
    matches!(is_isomorphic(g, h), Ok(Some(_)))
}

pub fn classify_with(g: &Group, opts: ClassifyOptions) -> ClassificationResult {
    if opts.check_necessary {
        necessary_conditions(g)?;
    }
    let k = g.odd_core();
    let (q, _) = quotient_group(g, &k).map_err(from_error)?;
    let kind = dispatch(&q)?;
    let n = g.order() as u64;
    let (decomp, b_count, aux) = match kind {
        SpaceFormType::I | SpaceFormType::II => {
            let d = metacyclic_decompose_subgroup(g, &k).map_err(from_error)?;
            let b = k.order() as u64 / d.a.order() as u64;
            (d, b, n / k.order() as u64)
        }
        SpaceFormType::III | SpaceFormType::IV => extract_q8_types(g)?,
        SpaceFormType::V | SpaceFormType::VI => {
            let f = g.perfect_core();
            let c = g.centralizer(f.elements());
            let o = odd_core_of(g, &c);
            let d = metacyclic_decompose_subgroup(g, &o).map_err(from_error)?;
            let b = o.order() as u64 / d.a.order() as u64;
            (d, b, 1)
        }
    };
    let a = decomp.a.order() as u64;
    let gbar = image_in_units(g, g.elements(), decomp.a_generator, a)?;
    let gbar0 = if kind == SpaceFormType::II && n % 16 == 0 {
        let g0 = index_two_with_cyclic_sylow(g)?;
        Some(image_in_units(g, g0.elements().iter().copied(), decomp.a_generator, a)?)
    } else {
        None
    };
    let tuple = SpaceFormTuple {
        kind,
        g: n,
        a,
        gbar,
        gbar0,
        b: b_count,
        t: kind.has_t().then_some(aux),
        theta: kind.has_theta().then_some(aux),
    };
    validate_tuple(&tuple).map_err(|violations| reject(RejectionReason::StructureConditions { violations }))?;
    let mut paranoid_checked = false;
    if opts.paranoid {
        if let Ok(built) = build_tuple(&tuple) {
            match is_isomorphic(g, &built.group) {
                Ok(Some(_)) => paranoid_checked = true,
                Ok(None) => return Err(reject(RejectionReason::ParanoidMismatch)),
                Err(_) => {}
            }
        }
    }
    Ok(Classification {
        tuple,
        odd_core: k,
        a: decomp.a,
        b: decomp.b,
        a_generator: decomp.a_generator,
        paranoid_checked,
    })
}

/// The type, read off `G/O(G)`.
fn dispatch(q: &Group) -> Result<SpaceFormType, Rejection> {
    let order = q.order();
    let shape_err = || reject(RejectionReason::QuotientShape { order });
    if order.is_power_of_two() {
        return match shape_of_2group(q) {
            Ok(TwoGroupShape::Cyclic) => Ok(SpaceFormType::I),
            Ok(TwoGroupShape::Quaternionic) => Ok(SpaceFormType::II),
            _ => Err(shape_err()),
        };
    }
    match order {
        24 if is_iso(q, sl2_3_cached()) => Ok(SpaceFormType::III),
        48 => {
            let sylow = q.sylow_subgroup(2);
            let core = q.core(&sylow);
            let (s, _) = q.subgroup_as_group(&sylow);
            let (c, _) = q.subgroup_as_group(&core);
            let quaternionic = |h: &Group| matches!(shape_of_2group(h), Ok(TwoGroupShape::Quaternionic));
            if quaternionic(&s) && core.order() == 8 && quaternionic(&c) {
                Ok(SpaceFormType::IV)
            } else {
                Err(shape_err())
            }
        }
        120 if is_iso(q, sl2_5_cached()) => Ok(SpaceFormType::V),
        240 => {
            let f = q.perfect_core();
            let (fg, _) = q.subgroup_as_group(&f);
            if f.order() == 120 && is_iso(&fg, sl2_5_cached()) {
                Ok(SpaceFormType::VI)
            } else {
                Err(shape_err())
            }
        }
        _ => Err(shape_err()),
    }
}

fn odd_core_of(g: &Group, h: &Subgroup) -> Subgroup {
    let (hg, emb) = g.subgroup_as_group(h);
    hg.odd_core().map_through(&emb)
}

/// Types III and IV: the normal `Q8`, the subgroup `J` inducing even
/// permutations of its three cyclic subgroups of order 4, and the smallest
/// normal `I ⊴ J` with 3-group quotient. Returns the decomposition of
/// `O(I)`, `b` and `θ = |J/I|`.
fn extract_q8_types(g: &Group) -> Result<(MetacyclicDecomposition, u64, u64), Rejection> {
    let q8 = g.core(&g.sylow_subgroup(2));
    let order = g.order();
    let shape_err = || reject(RejectionReason::QuotientShape { order });
    if q8.order() != 8 {
        return Err(shape_err());
    }
    let mut cyclic4: Vec<Subgroup> = Vec::new();
    for &x in q8.elements() {
        if g.element_order(x) == 4 {
            let c = g.generated(&[x]);
            if !cyclic4.contains(&c) {
                cyclic4.push(c);
            }
        }
    }
    if cyclic4.len() != 3 {
        return Err(shape_err());
    }
    let gens: Vec<usize> =
        cyclic4.iter().map(|c| *c.elements().iter().find(|&&y| g.element_order(y) == 4).expect("order 4")).collect();
    let j: Vec<usize> = g
        .elements()
        .filter(|&x| {
            let fixed = gens.iter().zip(&cyclic4).filter(|(&y, c)| c.contains(g.conj(x, y))).count();
            fixed != 1
        })
        .collect();
    let j = Subgroup::from_sorted_unchecked(j);
    let prime_to_3: Vec<usize> = j.elements().iter().copied().filter(|&x| g.element_order(x) % 3 != 0).collect();
    let i = g.generated(&prime_to_3);
    let o = odd_core_of(g, &i);
    let d = metacyclic_decompose_subgroup(g, &o).map_err(from_error)?;
    let b = o.order() as u64 / d.a.order() as u64;
    let theta = j.order() as u64 / i.order() as u64;
    Ok((d, b, theta))
}

/// `{u : x α x⁻¹ = α^u}` over the given elements, as residues mod `a`.
fn image_in_units(
    g: &Group,
    elems: impl Iterator<Item = usize>,
    alpha: usize,
    a: u64,
) -> Result<UnitSubgroup, Rejection> {
    if a == 1 {
        return Ok(UnitSubgroup::trivial(1));
    }
    let mut seen = vec![false; a as usize];
    for x in elems {
        let u = power_exponent(g, alpha, g.conj(x, alpha)).map_err(from_error)?;
        seen[u as usize] = true;
    }
    let residues: Vec<u64> = (0..a).filter(|&u| seen[u as usize]).collect();
    UnitSubgroup::from_residues(a, &residues).map_err(from_error)
}

/// The unique index-2 subgroup whose Sylow 2-subgroups are cyclic.
fn index_two_with_cyclic_sylow(g: &Group) -> Result<Subgroup, Rejection> {
    let squares: Vec<usize> = g.elements().map(|x| g.mul(x, x)).collect();
    let m = g.generated(&squares);
    let mut found: Vec<Subgroup> = Vec::new();
    for x in g.elements() {
        if m.contains(x) || found.iter().any(|h| h.contains(x)) {
            continue;
        }
        let h = g.join(&m, &g.generated(&[x]));
        if h.order() * 2 != g.order() {
            continue;
        }
        let (hg, _) = g.subgroup_as_group(&h);
        let (s, _) = hg.subgroup_as_group(&hg.sylow_subgroup(2));
        if s.is_cyclic() {
            found.push(h);
        }
    }
    match found.len() {
        1 => Ok(found.pop().expect("one element")),
        _ => Err(reject(RejectionReason::QuotientShape { order: g.order() })),
    }
}

/// Equality of type, `g`, `a`, `Ḡ` and (when present) `Ḡ₀`: for space-form
/// groups this decides isomorphism.
pub fn invariants_equal(t1: &SpaceFormTuple, t2: &SpaceFormTuple) -> bool {
    t1.kind == t2.kind && t1.g == t2.g && t1.a == t2.a && t1.gbar == t2.gbar && t1.gbar0 == t2.gbar0
}

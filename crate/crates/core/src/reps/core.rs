//! The subgroup generated by prime-order elements and its free
//! representation.

use std::f64::consts::PI;

use nalgebra::{DMatrix, Matrix2};

use super::embedding::{quaternion_embedding, BinaryKind};
use super::quat::{left_mult_matrix, right_mult_matrix, Quat};
use super::rep::{induce_rep, least_coset_reps, RealRep};
use crate::builders::StructuredGroup;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::numtheory::coprime;

/// Shape of the prime-generated core, in ids local to [`PrimeCore::group`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreShape {
    Cyclic {
        order: usize,
        generator: usize,
    },
    /// `K × C` with `K` binary tetrahedral or icosahedral and `C` cyclic of
    /// coprime order.
    BinaryTimesCyclic {
        kind: BinaryKind,
        binary: Subgroup,
        cyclic: Subgroup,
        cyclic_generator: usize,
    },
}

#[derive(Clone, Debug)]
pub struct PrimeCore {
    /// `H = ⟨x : |x| prime⟩` in ids of the ambient group.
    pub subgroup: Subgroup,
    /// `H` as a group; element `i` is `embedding[i]` in the ambient group.
    pub group: Group,
    pub embedding: Vec<usize>,
    pub shape: CoreShape,
}

/// `H` for an arbitrary group, with its shape recognized. Fails with
/// `UnexpectedShape` unless `H` is cyclic or `2A4 × C` or `2A5 × C`.
pub fn prime_generated_core_of(g: &Group) -> Result<PrimeCore> {
    let subgroup = g.generated(&g.prime_order_elements());
    let (h, embedding) = g.subgroup_as_group(&subgroup);
    let shape = match h.cyclic_generator() {
        Some(generator) => CoreShape::Cyclic { order: h.order(), generator },
        None => binary_shape(&h)?,
    };
    Ok(PrimeCore { subgroup, group: h, embedding, shape })
}

fn binary_shape(h: &Group) -> Result<CoreShape> {
    let unexpected = |msg: String| Error::UnexpectedShape(msg);
    let (kind, k_order) =
        if h.perfect_core().order() == 120 { (BinaryKind::Icosahedral, 120) } else { (BinaryKind::Tetrahedral, 24) };
    if h.order() % k_order != 0 || !coprime((h.order() / k_order) as u64, 6) {
        return Err(unexpected(format!("order {} is not {k_order} times a number prime to 6", h.order())));
    }
    let binary = h.generated(&h.elements().filter(|&x| k_order % h.element_order(x) == 0).collect::<Vec<_>>());
    let center = h.center();
    let odd_central: Vec<usize> = center.elements().iter().copied().filter(|&x| h.element_order(x) % 2 == 1).collect();
    let cyclic = h.generated(&odd_central);
    let cyclic_generator = cyclic
        .elements()
        .iter()
        .copied()
        .find(|&x| h.element_order(x) == cyclic.order())
        .ok_or_else(|| unexpected("central odd part is not cyclic".into()))?;
    if binary.order() != k_order || binary.order() * cyclic.order() != h.order() {
        return Err(unexpected(format!("|K| = {}, |C| = {}, |H| = {}", binary.order(), cyclic.order(), h.order())));
    }
    Ok(CoreShape::BinaryTimesCyclic { kind, binary, cyclic, cyclic_generator })
}

/// `H` for a built group, cross-checked against the construction witnesses.
pub fn prime_generated_core(s: &StructuredGroup) -> Result<PrimeCore> {
    let core = prime_generated_core_of(&s.group)?;
    if let CoreShape::BinaryTimesCyclic { kind, binary, .. } = &core.shape {
        let k = binary.map_through(&core.embedding);
        let consistent = match kind {
            BinaryKind::Icosahedral => s.witnesses.binary_icosahedral.as_ref() == Some(&k),
            _ => s.witnesses.q8.as_ref().is_some_and(|q| q.is_subset_of(&k)),
        };
        if !consistent {
            return Err(Error::UnexpectedShape("binary factor disagrees with the construction".into()));
        }
    }
    Ok(core)
}

fn rotation(theta: f64) -> DMatrix<f64> {
    let (s, c) = theta.sin_cos();
    let m = Matrix2::new(c, -s, s, c);
    DMatrix::from_iterator(2, 2, m.iter().copied())
}

/// The free representation of the core: a rotation, a sign, the trivial
/// representation, or `K` by left and `C` by right multiplication on `ℍ`.
pub fn free_rep_core(core: &PrimeCore, tol: f64) -> Result<RealRep> {
    let h = &core.group;
    let mut matrices = vec![DMatrix::<f64>::zeros(0, 0); h.order()];
    match &core.shape {
        CoreShape::Cyclic { order, generator } => {
            let mut x = 0;
            for k in 0..*order {
                matrices[x] = match order {
                    1 => DMatrix::identity(1, 1),
                    2 => DMatrix::from_element(1, 1, if k == 0 { 1.0 } else { -1.0 }),
                    _ => rotation(2.0 * PI * k as f64 / *order as f64),
                };
                x = h.mul(x, *generator);
            }
        }
        CoreShape::BinaryTimesCyclic { kind, binary, cyclic, cyclic_generator } => {
            let (kg, kemb) = h.subgroup_as_group(binary);
            let quats = quaternion_embedding(*kind, &kg)?;
            let c = cyclic.order();
            let mut ce = 0;
            for e in 0..c {
                let right = right_mult_matrix(Quat::from_angle(2.0 * PI * e as f64 / c as f64));
                for (local, q) in quats.iter().enumerate() {
                    let m = left_mult_matrix(*q) * right;
                    matrices[h.mul(kemb[local], ce)] = DMatrix::from_iterator(4, 4, m.iter().copied());
                }
                ce = h.mul(ce, *cyclic_generator);
            }
        }
    }
    RealRep::new(h.clone(), matrices, tol)
}

/// Left multiplication by the embedded quaternions.
pub fn quaternion_rep(kind: BinaryKind, g: &Group, tol: f64) -> Result<RealRep> {
    let q = quaternion_embedding(kind, g)?;
    let matrices = q.iter().map(|q| DMatrix::from_iterator(4, 4, left_mult_matrix(*q).iter().copied())).collect();
    RealRep::new(g.clone(), matrices, tol)
}

/// The action on pure quaternions `v ↦ q v q̄`: a rotation representation
/// that is never free.
pub fn rotation_rep(kind: BinaryKind, g: &Group, tol: f64) -> Result<RealRep> {
    let q = quaternion_embedding(kind, g)?;
    let matrices = q
        .iter()
        .map(|q| {
            let m = left_mult_matrix(*q) * right_mult_matrix(q.conj());
            DMatrix::from_fn(3, 3, |r, c| m[(r + 1, c + 1)])
        })
        .collect();
    RealRep::new(g.clone(), matrices, tol)
}

/// The free representation of a built group, induced from its core.
pub fn free_representation(s: &StructuredGroup, tol: f64) -> Result<RealRep> {
    let core = prime_generated_core(s)?;
    let rep = free_rep_core(&core, tol)?;
    let reps = least_coset_reps(&s.group, &core.subgroup);
    induce_rep(&rep, &s.group, &core.embedding, &reps)
}

//! The canonical splitting `H = A : B` of a group with cyclic Sylow
//! subgroups.

use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::numtheory::coprime;

/// `H = A : B` with `A` normal, `A` and `H/A` cyclic of coprime orders, and
/// every nontrivial Sylow subgroup of `B` acting nontrivially on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetacyclicDecomposition {
    pub a: Subgroup,
    pub b: Subgroup,
    /// Least generator of `A` (0 when `A` is trivial).
    pub a_generator: usize,
    /// Least generator of `B` (0 when `B` is trivial).
    pub b_generator: usize,
    /// `(β, u)` for each `β ∈ B`: `β α β⁻¹ = α^u` for every `α ∈ A`.
    pub action: Vec<(usize, u64)>,
}

/// Decomposes a group whose Sylow subgroups are all cyclic.
pub fn metacyclic_decompose(h: &Group) -> Result<MetacyclicDecomposition> {
    for p in h.prime_divisors() {
        let (s, _) = h.subgroup_as_group(&h.sylow_subgroup(p));
        if !s.is_cyclic() {
            return Err(Error::NonCyclicSylow { p });
        }
    }
    let center = h.center();
    let mut gens: Vec<usize> = h.derived_subgroup().elements().to_vec();
    for p in h.prime_divisors() {
        let sylow = h.sylow_subgroup(p);
        if sylow.is_subset_of(&center) {
            gens.extend_from_slice(sylow.elements());
        }
    }
    let a = h.generated(&gens);
    let index = h.order() / a.order();
    let a_generator = least_generator(h, &a)?;
    if !coprime(a.order() as u64, index as u64) {
        return Err(Error::UnexpectedShape(format!("|A| = {} and |H/A| = {index} are not coprime", a.order())));
    }
    let b_generator = h
        .elements()
        .find(|&x| h.element_order(x) == index)
        .ok_or_else(|| Error::UnexpectedShape(format!("no complement of order {index}")))?;
    let b = h.generated(&[b_generator]);
    let action = b
        .elements()
        .iter()
        .map(|&beta| Ok((beta, power_exponent(h, a_generator, h.conj(beta, a_generator))?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(MetacyclicDecomposition { a, b, a_generator, b_generator, action })
}

/// Decomposes a subgroup of `g`; the result is expressed in ids of `g`.
pub fn metacyclic_decompose_subgroup(g: &Group, h: &Subgroup) -> Result<MetacyclicDecomposition> {
    let (hg, emb) = g.subgroup_as_group(h);
    let d = metacyclic_decompose(&hg)?;
    Ok(MetacyclicDecomposition {
        a: d.a.map_through(&emb),
        b: d.b.map_through(&emb),
        a_generator: emb[d.a_generator],
        b_generator: emb[d.b_generator],
        action: {
            let mut v: Vec<(usize, u64)> = d.action.iter().map(|&(beta, u)| (emb[beta], u)).collect();
            v.sort_unstable();
            v
        },
    })
}

fn least_generator(h: &Group, a: &Subgroup) -> Result<usize> {
    a.elements()
        .iter()
        .copied()
        .find(|&x| h.element_order(x) == a.order())
        .ok_or_else(|| Error::UnexpectedShape(format!("A of order {} is not cyclic", a.order())))
}

/// The `u` in `0..|α|` with `α^u = y`, coprime to `|α|`.
pub(crate) fn power_exponent(g: &Group, alpha: usize, y: usize) -> Result<u64> {
    let n = g.element_order(alpha);
    let mut x = 0;
    for u in 0..n {
        if x == y {
            return Ok(if n == 1 { 0 } else { u as u64 });
        }
        x = g.mul(x, alpha);
    }
    Err(Error::UnexpectedShape(format!("element {y} is not a power of {alpha}")))
}

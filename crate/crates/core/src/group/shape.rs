use super::Group;
use crate::error::{Error, Result};

/// Isomorphism type of a 2-group, as far as free actions care.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoGroupShape {
    Cyclic,
    Quaternionic,
    Other,
}

/// Cyclic, generalized quaternion (order `2^m ≥ 8`), or neither.
pub fn shape_of_2group(g: &Group) -> Result<TwoGroupShape> {
    let n = g.order();
    if !n.is_power_of_two() {
        return Err(Error::PreconditionViolated(format!("order {n} is not a power of 2")));
    }
    if g.is_cyclic() {
        return Ok(TwoGroupShape::Cyclic);
    }
    if n >= 8 && binary_dihedral_witness(g).is_some() {
        return Ok(TwoGroupShape::Quaternionic);
    }
    Ok(TwoGroupShape::Other)
}

/// Whether `g` has the presentation `⟨x, y | x^{2n}, y x y⁻¹ = x⁻¹, y² = xⁿ⟩`
/// with `|g| = 4n`.
pub fn is_binary_dihedral(g: &Group) -> bool {
    binary_dihedral_witness(g).is_some()
}

/// `(x, y)` realizing the binary dihedral presentation, least ids first.
pub fn binary_dihedral_witness(g: &Group) -> Option<(usize, usize)> {
    let size = g.order();
    if size % 4 != 0 {
        return None;
    }
    let n = size / 4;
    let mut seen_cyclic = vec![false; size];
    for x in g.elements().filter(|&x| g.element_order(x) == 2 * n) {
        if seen_cyclic[x] {
            continue;
        }
        let cyc = g.generated(&[x]);
        for &c in cyc.elements() {
            if g.element_order(c) == 2 * n {
                seen_cyclic[c] = true;
            }
        }
        let xn = g.pow(x, n as i64);
        let xinv = g.inv(x);
        for y in g.elements() {
            if cyc.contains(y) {
                continue;
            }
            if g.mul(y, y) == xn && g.conj(y, x) == xinv {
                // ⟨x⟩ has index 2 and y ∉ ⟨x⟩, so ⟨x, y⟩ = g.
                return Some((x, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{binary_dihedral, cyclic, quaternion};
    use crate::group::direct_product;

    #[test]
    fn shapes() {
        assert_eq!(shape_of_2group(&quaternion(8).unwrap()).unwrap(), TwoGroupShape::Quaternionic);
        assert_eq!(shape_of_2group(&quaternion(32).unwrap()).unwrap(), TwoGroupShape::Quaternionic);
        assert_eq!(shape_of_2group(&cyclic(8).unwrap()).unwrap(), TwoGroupShape::Cyclic);
        assert_eq!(shape_of_2group(&cyclic(1).unwrap()).unwrap(), TwoGroupShape::Cyclic);
        let v = direct_product(&cyclic(2).unwrap(), &cyclic(4).unwrap());
        assert_eq!(shape_of_2group(&v).unwrap(), TwoGroupShape::Other);
        assert!(shape_of_2group(&cyclic(6).unwrap()).is_err());
    }

    #[test]
    fn binary_dihedral_detection() {
        assert!(is_binary_dihedral(&binary_dihedral(12).unwrap()));
        assert!(is_binary_dihedral(&binary_dihedral(20).unwrap()));
        // Order 4: the presentation collapses to Z/4.
        assert!(is_binary_dihedral(&cyclic(4).unwrap()));
        assert!(!is_binary_dihedral(&cyclic(12).unwrap()));
        assert!(!is_binary_dihedral(&direct_product(&cyclic(3).unwrap(), &cyclic(4).unwrap())));
    }
}

//! Binary polyhedral and binary dihedral groups as unit quaternions.

use std::f64::consts::PI;
use std::sync::OnceLock;

use super::quat::Quat;
use crate::error::{Error, Result};
use crate::group::{binary_dihedral_witness, is_isomorphic, Group};

/// Products of embedded elements must land this close to a listed unit.
pub const CLOSURE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryKind {
    /// Binary dihedral of the given order `4n`.
    Dihedral(usize),
    /// `2A4`, the 24 Hurwitz units.
    Tetrahedral,
    /// `2A5`, the 120 icosians.
    Icosahedral,
}

/// A finite group of unit quaternions with its multiplication table.
#[derive(Clone, Debug)]
pub struct UnitTable {
    pub units: Vec<Quat>,
    pub group: Group,
    /// Largest distance between a computed product and its rounded unit.
    pub rounding_error: f64,
}

/// The 24 Hurwitz units: `±1, ±i, ±j, ±k` and `(±1 ± i ± j ± k)/2`.
pub fn hurwitz_units() -> Vec<Quat> {
    let mut v = Vec::with_capacity(24);
    for axis in 0..4 {
        for s in [1.0, -1.0] {
            let mut c = [0.0; 4];
            c[axis] = s;
            v.push(Quat::new(c[0], c[1], c[2], c[3]));
        }
    }
    for mask in 0..16 {
        let s = |bit: usize| if mask >> bit & 1 == 0 { 0.5 } else { -0.5 };
        v.push(Quat::new(s(0), s(1), s(2), s(3)));
    }
    v
}

/// The 120 icosians: the Hurwitz units and the even coordinate permutations
/// of `(±τ, ±1, ±1/τ, 0)/2`.
pub fn icosians() -> Vec<Quat> {
    let tau = (1.0 + 5f64.sqrt()) / 2.0;
    let base = [tau / 2.0, 0.5, 0.5 / tau, 0.0];
    let mut v = hurwitz_units();
    for perm in even_permutations() {
        for signs in 0..8 {
            let mut c = [0.0; 4];
            for (slot, &src) in perm.iter().enumerate() {
                let sign = if src < 3 && signs >> src & 1 == 1 { -1.0 } else { 1.0 };
                c[slot] = sign * base[src];
            }
            v.push(Quat::new(c[0], c[1], c[2], c[3]));
        }
    }
    v
}

fn even_permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (0..i).all(|j| p[i] != p[j]));
                    let inversions =
                        (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                    if distinct && inversions % 2 == 0 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn nearest(units: &[Quat], q: &Quat) -> (usize, f64) {
    units.iter().enumerate().map(|(i, u)| (i, u.dist(q))).min_by(|a, b| a.1.total_cmp(&b.1)).expect("nonempty")
}

/// Multiplication table of a finite set of unit quaternions, with the unit
/// `1` moved to id 0. Fails if some product is not within [`CLOSURE_TOL`]
/// of a listed unit.
pub fn unit_table(mut units: Vec<Quat>) -> Result<UnitTable> {
    let one = nearest(&units, &Quat::ONE);
    if one.1 > CLOSURE_TOL {
        return Err(Error::ClosureFailed("the unit 1 is not listed".into()));
    }
    units.swap(0, one.0);
    let n = units.len();
    let mut rows = vec![vec![0usize; n]; n];
    let mut worst = 0.0f64;
    for a in 0..n {
        for b in 0..n {
            let (k, d) = nearest(&units, &(units[a] * units[b]));
            if d > CLOSURE_TOL {
                return Err(Error::ClosureFailed(format!("product of units {a} and {b} is {d:e} from every unit")));
            }
            worst = worst.max(d);
            rows[a][b] = k;
        }
    }
    let group = Group::from_table(&rows)?;
    Ok(UnitTable { units, group, rounding_error: worst })
}

pub fn hurwitz_table() -> &'static UnitTable {
    static T: OnceLock<UnitTable> = OnceLock::new();
    T.get_or_init(|| unit_table(hurwitz_units()).expect("Hurwitz units close"))
}

pub fn icosian_table() -> &'static UnitTable {
    static T: OnceLock<UnitTable> = OnceLock::new();
    T.get_or_init(|| unit_table(icosians()).expect("icosians close"))
}

/// An injective homomorphism from `g` into the unit quaternions.
///
/// Binary dihedral groups use `x ↦ e^{iπ/n}`, `y ↦ j` on the least witness
/// pair `(x, y)`; `2A4` and `2A5` are matched against the Hurwitz units and
/// icosians by isomorphism search. The result is checked on every product.
pub fn quaternion_embedding(kind: BinaryKind, g: &Group) -> Result<Vec<Quat>> {
    let images = match kind {
        BinaryKind::Dihedral(order) => {
            if g.order() != order {
                return Err(Error::PreconditionViolated(format!("group has order {}, not {order}", g.order())));
            }
            let (x, y) =
                binary_dihedral_witness(g).ok_or_else(|| Error::PreconditionViolated("not binary dihedral".into()))?;
            let n = order / 4;
            let mut images = vec![Quat::ONE; order];
            let mut yk = 0;
            let mut yq = Quat::ONE;
            for _ in 0..2 {
                let mut elt = yk;
                for i in 0..2 * n {
                    // elt = x^i y^e
                    images[elt] = Quat::from_angle(PI * i as f64 / n as f64) * yq;
                    elt = g.mul(x, elt);
                }
                yk = g.mul(yk, y);
                yq = yq * Quat::J;
            }
            images
        }
        BinaryKind::Tetrahedral | BinaryKind::Icosahedral => {
            let table = if kind == BinaryKind::Tetrahedral { hurwitz_table() } else { icosian_table() };
            let iso = is_isomorphic(g, &table.group)?
                .ok_or_else(|| Error::PreconditionViolated(format!("group is not {kind:?}")))?;
            g.elements().map(|x| table.units[iso.apply(x)]).collect()
        }
    };
    check_embedding(g, &images)?;
    Ok(images)
}

fn check_embedding(g: &Group, images: &[Quat]) -> Result<()> {
    for a in g.elements() {
        for b in g.elements() {
            let d = (images[a] * images[b]).dist(&images[g.mul(a, b)]);
            if d > CLOSURE_TOL {
                return Err(Error::ClosureFailed(format!("images of {a} and {b} multiply {d:e} off")));
            }
        }
        if a != 0 && images[a].dist(&Quat::ONE) < CLOSURE_TOL {
            return Err(Error::ClosureFailed(format!("element {a} maps to 1")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{binary_dihedral, quaternion, sl2_3, sl2_5};

    #[test]
    fn hurwitz_counts() {
        let u = hurwitz_units();
        assert_eq!(u.len(), 24);
        let half = u.iter().filter(|q| q.coords().iter().all(|c| c.abs() == 0.5)).count();
        assert_eq!((half, u.len() - half), (16, 8));
        assert!(u.iter().all(|q| (q.norm_sqr() - 1.0).abs() < 1e-12));
    }

    #[test]
    fn icosians_close() {
        let u = icosians();
        assert_eq!(u.len(), 120);
        assert!(u.iter().all(|q| (q.norm_sqr() - 1.0).abs() < 1e-12));
        let t = icosian_table();
        assert!(t.rounding_error < 1e-12);
        assert_eq!(t.group.order(), 120);
        assert!(is_isomorphic(&t.group, &sl2_5()).unwrap().is_some());
        assert!(is_isomorphic(&hurwitz_table().group, &sl2_3()).unwrap().is_some());
    }

    #[test]
    fn q8_goes_to_i_and_j() {
        let q = quaternion(8).unwrap();
        let e = quaternion_embedding(BinaryKind::Dihedral(8), &q).unwrap();
        let (x, y) = binary_dihedral_witness(&q).unwrap();
        assert!(e[x].dist(&Quat::I) < 1e-15);
        assert!(e[y].dist(&Quat::J) < 1e-15);
    }

    #[test]
    fn embeddings_are_faithful() {
        for order in [12, 16, 20, 24, 32] {
            let g = binary_dihedral(order).unwrap();
            quaternion_embedding(BinaryKind::Dihedral(order), &g).unwrap();
        }
        let e = quaternion_embedding(BinaryKind::Icosahedral, &sl2_5()).unwrap();
        assert_eq!(e.len(), 120);
        quaternion_embedding(BinaryKind::Tetrahedral, &sl2_3()).unwrap();
        assert!(quaternion_embedding(BinaryKind::Tetrahedral, &sl2_5()).is_err());
    }

    #[test]
    fn open_set_fails_closure() {
        let r = unit_table(vec![Quat::ONE, Quat::I]);
        assert!(matches!(r, Err(Error::ClosureFailed(_))));
    }
}

//! The named groups: cyclic, binary dihedral, quaternion, SL(2,3), SL(2,5).

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::group::Group;

pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::BadParameter("cyclic group of order 0".into()));
    }
    let table = (0..n).flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u32)).collect();
    Group::from_flat(n, table)
}

/// Binary dihedral group of order `4n`, `⟨x, y | x^{2n}, y x y⁻¹ = x⁻¹, y² = xⁿ⟩`.
///
/// `x^i y^e` has id `e * 2n + i`, so `x` is element 1 and `y` is element `2n`.
pub fn binary_dihedral(order: usize) -> Result<Group> {
    if order < 4 || order % 4 != 0 {
        return Err(Error::BadParameter(format!("binary dihedral order {order} is not a positive multiple of 4")));
    }
    let n = order / 4;
    let m = 2 * n;
    let id = |i: usize, e: usize| e * m + i;
    let mut table = Vec::with_capacity(order * order);
    for e1 in 0..2 {
        for i1 in 0..m {
            for e2 in 0..2 {
                for i2 in 0..m {
                    let i2s = if e1 == 1 { (m - i2) % m } else { i2 };
                    let mut i = i1 + i2s;
                    let mut e = e1 + e2;
                    if e == 2 {
                        e = 0;
                        i += n;
                    }
                    table.push(id(i % m, e) as u32);
                }
            }
        }
    }
    Group::from_flat(order, table)
}

/// Generalized quaternion group of order `2^m`, `m ≥ 3`.
pub fn quaternion(order: usize) -> Result<Group> {
    if order < 8 || !order.is_power_of_two() {
        return Err(Error::BadParameter(format!("quaternion order {order} is not a power of 2 at least 8")));
    }
    binary_dihedral(order)
}

/// SL(2,3), the binary tetrahedral group.
pub fn sl2_3() -> Group {
    static G: OnceLock<Group> = OnceLock::new();
    G.get_or_init(|| special_linear_2(3)).clone()
}

/// SL(2,5), the binary icosahedral group.
pub fn sl2_5() -> Group {
    static G: OnceLock<Group> = OnceLock::new();
    G.get_or_init(|| special_linear_2(5)).clone()
}

/// The permutation group generated by `gens` (each a permutation of
/// `0..degree` in image form). Elements are numbered in lexicographic order
/// of their images, so the identity is 0; `x * y` applies `y` first.
pub fn permutation_group(degree: usize, gens: &[Vec<usize>]) -> Result<Group> {
    for p in gens {
        let mut seen = vec![false; degree];
        if p.len() != degree || p.iter().any(|&i| i >= degree || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::BadParameter(format!("{p:?} is not a permutation of 0..{degree}")));
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut elems = std::collections::BTreeSet::new();
    elems.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(x) = frontier.pop() {
        for s in gens {
            let y: Vec<usize> = (0..degree).map(|i| x[s[i]]).collect();
            if elems.len() > crate::group::DEFAULT_MAX_ORDER {
                return Err(Error::TooLarge { order: elems.len(), cap: crate::group::DEFAULT_MAX_ORDER });
            }
            if elems.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    let elems: Vec<Vec<usize>> = elems.into_iter().collect();
    let index: HashMap<&[usize], usize> = elems.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for x in &elems {
        for y in &elems {
            let xy: Vec<usize> = (0..degree).map(|i| x[y[i]]).collect();
            table.push(index[xy.as_slice()] as u32);
        }
    }
    Group::from_flat(n, table)
}

type Mat2 = [u32; 4];

/// Determinant-one 2×2 matrices over F_p: the identity first, the rest in
/// lexicographic order of `(a, b, c, d)`.
pub fn sl2_matrices(p: u32) -> Vec<Mat2> {
    let mut mats = vec![[1, 0, 0, 1]];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = [a, b, c, d];
                    if (a * d + p * p - b * c) % p == 1 && m != [1, 0, 0, 1] {
                        mats.push(m);
                    }
                }
            }
        }
    }
    mats
}

fn special_linear_2(p: u32) -> Group {
    let mats = sl2_matrices(p);
    let index: HashMap<Mat2, usize> = mats.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mul = |x: &Mat2, y: &Mat2| -> Mat2 {
        [
            (x[0] * y[0] + x[1] * y[2]) % p,
            (x[0] * y[1] + x[1] * y[3]) % p,
            (x[2] * y[0] + x[3] * y[2]) % p,
            (x[2] * y[1] + x[3] * y[3]) % p,
        ]
    };
    let n = mats.len();
    let mut table = Vec::with_capacity(n * n);
    for x in &mats {
        for y in &mats {
            table.push(index[&mul(x, y)] as u32);
        }
    }
    Group::from_flat(n, table).expect("SL(2,p) is a group")
}

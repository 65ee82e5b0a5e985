//! Finite groups given by validated Cayley tables.
//!
//! Elements are numbered `0..n` and element `0` is always the identity.
//! Every constructor in this crate numbers its output deterministically, so
//! building the same group twice gives byte-identical tables.

mod construct;
mod iso;
mod shape;
mod subgroups;
mod text;

pub use construct::{adjoin_order4, direct_product, quotient_group, semidirect_product};
pub use iso::{
    automorphisms, extend_to_hom, find_outer_involution, for_each_isomorphism, inner_automorphisms, is_isomorphic,
    is_isomorphic_with_cap, DEFAULT_ISO_CAP,
};
pub use shape::{binary_dihedral_witness, is_binary_dihedral, shape_of_2group, TwoGroupShape};

use std::sync::OnceLock;

use crate::error::{Axis, Error, Result};

/// Default upper bound on group orders accepted by constructors.
pub const DEFAULT_MAX_ORDER: usize = 2048;

/// A finite group stored as its full multiplication table.
#[derive(Clone)]
pub struct Group {
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    classes: OnceLock<ConjugacyClasses>,
    signature: OnceLock<Vec<ElementSignature>>,
}

#[derive(Clone, Debug)]
pub(crate) struct ConjugacyClasses {
    /// Classes in order of their least member; each class sorted.
    pub classes: Vec<Vec<usize>>,
    /// `class_of[x]` is the index of the class containing `x`.
    pub class_of: Vec<usize>,
}

/// Isomorphism-invariant data attached to one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSignature {
    pub order: u32,
    pub class_size: u32,
    pub square_roots: u32,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group").field("order", &self.n).finish_non_exhaustive()
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for Group {}

impl Group {
    /// Validates a Cayley table given as rows.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Group> {
        let n = rows.len();
        let mut flat = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: r, len: row.len(), n });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::EntryOutOfRange { row: r, col: c, value: v, n });
                }
                flat.push(v as u32);
            }
        }
        Group::from_flat(n, flat)
    }

    /// Validates a row-major flat table of length `n * n`.
    pub fn from_flat(n: usize, table: Vec<u32>) -> Result<Group> {
        if n == 0 {
            return Err(Error::BadParameter("a group has at least one element".into()));
        }
        if table.len() != n * n {
            return Err(Error::NotSquare { row: 0, len: table.len(), n: n * n });
        }
        if let Some(pos) = table.iter().position(|&v| v as usize >= n) {
            return Err(Error::EntryOutOfRange { row: pos / n, col: pos % n, value: table[pos] as usize, n });
        }
        for j in 0..n {
            if table[j] as usize != j {
                return Err(Error::WrongIdentity { index: j, found: table[j] as usize });
            }
            if table[j * n] as usize != j {
                return Err(Error::WrongIdentity { index: j, found: table[j * n] as usize });
            }
        }
        check_associative(n, &table)?;
        check_latin(n, &table)?;

        let mut inv = vec![0u32; n];
        for x in 0..n {
            let row = &table[x * n..(x + 1) * n];
            let y = row.iter().position(|&v| v == 0).expect("Latin row contains identity");
            inv[x] = y as u32;
        }
        let mut orders = vec![0u32; n];
        for x in 0..n {
            let mut k = 1u32;
            let mut y = x;
            while y != 0 {
                y = table[y * n + x] as usize;
                k += 1;
            }
            orders[x] = k;
        }
        Ok(Group { n, table, inv, orders, classes: OnceLock::new(), signature: OnceLock::new() })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.orders.iter().map(|&o| o as usize).collect()
    }

    /// `a^k`, with negative exponents allowed.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let ord = self.element_order(a) as i64;
        let e = k.rem_euclid(ord);
        let mut r = 0;
        for _ in 0..e {
            r = self.mul(r, a);
        }
        r
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `x^-1 y^-1 x y`.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    pub fn flat_table(&self) -> &[u32] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| self.row(a).iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o as usize == self.n)
    }

    /// Elements of order exactly 2.
    pub fn involutions(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.orders[x] == 2).collect()
    }

    /// Least element whose order equals the group order, if any.
    pub fn cyclic_generator(&self) -> Option<usize> {
        (0..self.n).find(|&x| self.orders[x] as usize == self.n)
    }

    pub(crate) fn conjugacy(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| {
            let n = self.n;
            let mut class_of = vec![usize::MAX; n];
            let mut classes = Vec::new();
            for x in 0..n {
                if class_of[x] != usize::MAX {
                    continue;
                }
                let id = classes.len();
                let mut members = Vec::new();
                for g in 0..n {
                    let y = self.conj(g, x);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                members.sort_unstable();
                classes.push(members);
            }
            ConjugacyClasses { classes, class_of }
        })
    }

    /// Conjugacy classes, ordered by least member.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.conjugacy().classes
    }

    pub fn class_size(&self, x: usize) -> usize {
        let cc = self.conjugacy();
        cc.classes[cc.class_of[x]].len()
    }

    /// Per-element invariants used to prune isomorphism searches.
    pub fn signatures(&self) -> &[ElementSignature] {
        self.signature.get_or_init(|| {
            let mut roots = vec![0u32; self.n];
            for x in 0..self.n {
                roots[self.mul(x, x)] += 1;
            }
            (0..self.n)
                .map(|x| ElementSignature {
                    order: self.orders[x],
                    class_size: self.class_size(x) as u32,
                    square_roots: roots[x],
                })
                .collect()
        })
    }

    /// Regroups a subgroup as a group in its own right. Element `i` of the
    /// result is the `i`-th smallest member of `h`; the returned vector maps
    /// new ids back to ids in `self`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (Group, Vec<usize>) {
        let elems = h.elements().to_vec();
        let m = elems.len();
        let mut index = vec![u32::MAX; self.n];
        for (i, &x) in elems.iter().enumerate() {
            index[x] = i as u32;
        }
        let mut table = Vec::with_capacity(m * m);
        for &x in &elems {
            for &y in &elems {
                table.push(index[self.mul(x, y)]);
            }
        }
        let g = Group::from_flat(m, table).expect("subgroup multiplication is a group");
        (g, elems)
    }
}

/// Light's associativity test: the set of `s` with `(x s) y = x (s y)` for
/// all `x, y` is closed under multiplication, so it suffices to check `s`
/// ranging over a generating set of the magma.
fn check_associative(n: usize, t: &[u32]) -> Result<()> {
    let mul = |a: usize, b: usize| t[a * n + b] as usize;
    let mut gens: Vec<usize> = Vec::new();
    let mut covered = vec![false; n];
    covered[0] = true;
    let mut count = 1;
    let mut queue = vec![0usize];
    loop {
        while let Some(x) = queue.pop() {
            for &s in &gens {
                let y = mul(x, s);
                if !covered[y] {
                    covered[y] = true;
                    count += 1;
                    queue.push(y);
                }
            }
        }
        if count == n {
            break;
        }
        let next = (0..n).find(|&x| !covered[x]).expect("uncovered element exists");
        gens.push(next);
        // Rescan from everything covered so far with the enlarged set.
        queue = (0..n).filter(|&x| covered[x]).collect();
    }
    for &s in &gens {
        for x in 0..n {
            let xs = mul(x, s);
            for y in 0..n {
                if mul(xs, y) != mul(x, mul(s, y)) {
                    return Err(Error::NotAssociative { x, y: s, z: y });
                }
            }
        }
    }
    Ok(())
}

fn check_latin(n: usize, t: &[u32]) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for r in 0..n {
        for c in 0..n {
            let v = t[r * n + c] as usize;
            if seen[v] == r {
                return Err(Error::NotLatinSquare { axis: Axis::Row, index: r, value: v });
            }
            seen[v] = r;
        }
    }
    seen.fill(usize::MAX);
    for c in 0..n {
        for r in 0..n {
            let v = t[r * n + c] as usize;
            if seen[v] == c {
                return Err(Error::NotLatinSquare { axis: Axis::Column, index: c, value: v });
            }
            seen[v] = c;
        }
    }
    Ok(())
}

/// A subgroup of some parent group, as a sorted list of element ids.
///
/// The parent is not stored; every operation that needs it takes the group
/// explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    /// Checks closure in `g` and builds the subgroup.
    pub fn new(g: &Group, mut elements: Vec<usize>) -> Result<Subgroup> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        if let Some(&bad) = elements.iter().find(|&&x| x >= g.order()) {
            return Err(Error::NotASubgroup(format!("element {bad} out of range")));
        }
        let mut member = vec![false; g.order()];
        for &x in &elements {
            member[x] = true;
        }
        for &x in &elements {
            if !member[g.inv(x)] {
                return Err(Error::NotASubgroup(format!("inverse of {x} missing")));
            }
            for &y in &elements {
                if !member[g.mul(x, y)] {
                    return Err(Error::NotASubgroup(format!("{x}*{y} missing")));
                }
            }
        }
        if g.order() % elements.len() != 0 {
            return Err(Error::NotASubgroup("order does not divide the group order".into()));
        }
        Ok(Subgroup { elements })
    }

    /// Caller guarantees `elements` is a sorted subgroup.
    pub(crate) fn from_sorted_unchecked(elements: Vec<usize>) -> Subgroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(elements.first(), Some(&0));
        Subgroup { elements }
    }

    pub fn trivial() -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    pub fn whole(g: &Group) -> Subgroup {
        Subgroup { elements: g.elements().collect() }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub(crate) fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }

    /// Maps ids through `embedding` (e.g. from [`Group::subgroup_as_group`]).
    pub fn map_through(&self, embedding: &[usize]) -> Subgroup {
        let mut e: Vec<usize> = self.elements.iter().map(|&x| embedding[x]).collect();
        e.sort_unstable();
        Subgroup { elements: e }
    }
}

/// A homomorphism between two groups, stored as its image table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHom {
    images: Vec<usize>,
}

impl GroupHom {
    /// Checks the homomorphism property for every pair.
    pub fn new(source: &Group, target: &Group, images: Vec<usize>) -> Result<GroupHom> {
        if images.len() != source.order() {
            return Err(Error::NotAHomomorphism(format!(
                "{} images for a group of order {}",
                images.len(),
                source.order()
            )));
        }
        if images.iter().any(|&y| y >= target.order()) {
            return Err(Error::NotAHomomorphism("image out of range".into()));
        }
        if images[0] != 0 {
            return Err(Error::NotAHomomorphism("identity not preserved".into()));
        }
        for x in source.elements() {
            for y in source.elements() {
                if images[source.mul(x, y)] != target.mul(images[x], images[y]) {
                    return Err(Error::NotAHomomorphism(format!("fails at ({x}, {y})")));
                }
            }
        }
        Ok(GroupHom { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> GroupHom {
        GroupHom { images }
    }

    pub fn identity(g: &Group) -> GroupHom {
        GroupHom { images: g.elements().collect() }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        for &y in &self.images {
            if y >= seen.len() || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &GroupHom) -> GroupHom {
        GroupHom { images: other.images.iter().map(|&y| self.images[y]).collect() }
    }

    /// Inverse of a bijective map.
    pub fn inverse(&self) -> Option<GroupHom> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Some(GroupHom { images: inv })
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked(
            self.images.iter().enumerate().filter(|(_, &y)| y == 0).map(|(x, _)| x).collect(),
        )
    }

    pub fn image(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

//! The unit group `(Z/a)*` and its subgroups.
//!
//! For `a = 1` the ring is zero, and the trivial unit group is represented
//! by the single residue `0`. It prints as an empty list.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::builders::SpaceFormType;
use crate::error::{Error, Result};
use crate::numtheory::{coprime, gcd, odd_part, p_part};

pub const DEFAULT_SUBGROUP_CAP: usize = 10_000;

fn identity_residue(a: u64) -> u64 {
    if a == 1 {
        0
    } else {
        1
    }
}

/// `(Z/a)*` as a sorted residue list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroup {
    modulus: u64,
    residues: Vec<u64>,
}

pub fn unit_group(a: u64) -> Result<UnitGroup> {
    if a == 0 {
        return Err(Error::BadParameter("modulus must be positive".into()));
    }
    let residues = if a == 1 { vec![0] } else { (1..a).filter(|&u| gcd(u, a) == 1).collect() };
    Ok(UnitGroup { modulus: a, residues })
}

impl UnitGroup {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn order(&self) -> usize {
        self.residues.len()
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        x * y % self.modulus
    }

    pub fn as_subgroup(&self) -> UnitSubgroup {
        UnitSubgroup { modulus: self.modulus, residues: self.residues.clone() }
    }

    /// Whether `(Z/a)*` itself is cyclic.
    pub fn is_cyclic(&self) -> bool {
        self.as_subgroup().is_cyclic()
    }
}

/// Every subgroup exactly once, sorted by `(order, residues)`.
///
/// Each subgroup of a finite abelian group is a join of cyclic subgroups, so
/// closing the set of cyclic subgroups under joins finds them all.
pub fn all_subgroups(u: &UnitGroup) -> Result<Vec<UnitSubgroup>> {
    all_subgroups_with_cap(u, DEFAULT_SUBGROUP_CAP)
}

pub fn all_subgroups_with_cap(u: &UnitGroup, cap: usize) -> Result<Vec<UnitSubgroup>> {
    if u.order() > cap {
        return Err(Error::TooLarge { order: u.order(), cap });
    }
    let a = u.modulus;
    let one = identity_residue(a);
    let cyclics: BTreeSet<Vec<u64>> = u.residues.iter().map(|&x| cyclic_subgroup(a, x)).collect();
    let cyclics: Vec<Vec<u64>> = cyclics.into_iter().filter(|c| c.len() > 1).collect();
    let mut found: HashSet<Vec<u64>> = HashSet::new();
    found.insert(vec![one]);
    let mut frontier = vec![vec![one]];
    let mut mark = vec![false; a as usize];
    while let Some(s) = frontier.pop() {
        for c in &cyclics {
            if c.iter().all(|x| s.binary_search(x).is_ok()) {
                continue;
            }
            // In an abelian group the join is the product set.
            let mut j = Vec::with_capacity(s.len() * c.len());
            for &h in &s {
                for &x in c {
                    let y = h * x % a;
                    if !mark[y as usize] {
                        mark[y as usize] = true;
                        j.push(y);
                    }
                }
            }
            for &y in &j {
                mark[y as usize] = false;
            }
            j.sort_unstable();
            if !found.contains(&j) {
                found.insert(j.clone());
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<UnitSubgroup> = found.into_iter().map(|residues| UnitSubgroup { modulus: a, residues }).collect();
    out.sort_by(|x, y| x.order().cmp(&y.order()).then_with(|| x.residues.cmp(&y.residues)));
    Ok(out)
}

fn cyclic_subgroup(a: u64, x: u64) -> Vec<u64> {
    let one = identity_residue(a);
    let mut v = vec![one];
    let mut y = x % a;
    while y != one {
        v.push(y);
        y = y * x % a;
    }
    v.sort_unstable();
    v
}

/// A subgroup of `(Z/a)*`, stored as a sorted residue list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitSubgroup {
    modulus: u64,
    residues: Vec<u64>,
}

impl UnitSubgroup {
    pub fn trivial(a: u64) -> UnitSubgroup {
        UnitSubgroup { modulus: a, residues: vec![identity_residue(a)] }
    }

    /// Subgroup generated by `gens` (reduced mod `a`; each must be a unit).
    pub fn generated(a: u64, gens: &[u64]) -> UnitSubgroup {
        let one = identity_residue(a);
        let mut set: BTreeSet<u64> = BTreeSet::new();
        set.insert(one);
        let mut frontier = vec![one];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = x * (g % a) % a;
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        UnitSubgroup { modulus: a, residues: set.into_iter().collect() }
    }

    /// Validates a residue set (residues reduced mod `a`).
    pub fn from_residues(a: u64, residues: &[u64]) -> Result<UnitSubgroup> {
        if a == 0 {
            return Err(Error::BadParameter("modulus must be positive".into()));
        }
        let set: BTreeSet<u64> = residues.iter().map(|&r| r % a).collect();
        let set: BTreeSet<u64> = if a == 1 { [0].into() } else { set };
        if !set.contains(&identity_residue(a)) {
            return Err(Error::UnitParse(format!("identity missing from subgroup mod {a}")));
        }
        for &x in &set {
            if a > 1 && !coprime(x, a) {
                return Err(Error::UnitParse(format!("{x} is not a unit mod {a}")));
            }
            for &y in &set {
                if !set.contains(&(x * y % a)) {
                    return Err(Error::UnitParse(format!("not closed: {x}*{y} mod {a}")));
                }
            }
        }
        Ok(UnitSubgroup { modulus: a, residues: set.into_iter().collect() })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn order(&self) -> u64 {
        self.residues.len() as u64
    }

    pub fn contains(&self, u: u64) -> bool {
        self.residues.binary_search(&(u % self.modulus)).is_ok()
    }

    pub fn identity(&self) -> u64 {
        identity_residue(self.modulus)
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        x * y % self.modulus
    }

    pub fn pow(&self, x: u64, mut k: u64) -> u64 {
        let mut r = self.identity();
        let mut b = x % self.modulus;
        while k > 0 {
            if k & 1 == 1 {
                r = r * b % self.modulus;
            }
            b = b * b % self.modulus;
            k >>= 1;
        }
        r
    }

    pub fn element_order(&self, x: u64) -> u64 {
        let one = self.identity();
        let mut k = 1;
        let mut y = x % self.modulus;
        while y != one {
            y = y * x % self.modulus;
            k += 1;
        }
        k
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.residues.iter().any(|&x| self.element_order(x) == n)
    }

    pub fn is_subgroup_of(&self, other: &UnitSubgroup) -> bool {
        self.modulus == other.modulus && self.residues.iter().all(|&x| other.contains(x))
    }

    /// `{u : u^d = 1}`. For `d` a Hall divisor of the order this is the
    /// unique subgroup of order `d`.
    pub fn torsion(&self, d: u64) -> UnitSubgroup {
        let one = self.identity();
        UnitSubgroup {
            modulus: self.modulus,
            residues: self.residues.iter().copied().filter(|&x| self.pow(x, d) == one).collect(),
        }
    }

    /// Elements of odd order.
    pub fn odd_part(&self) -> UnitSubgroup {
        self.torsion(odd_part(self.order()))
    }

    /// The Sylow 2-subgroup.
    pub fn two_part(&self) -> UnitSubgroup {
        self.torsion(p_part(self.order(), 2))
    }

    /// Least residue of order exactly `self.order()`, for cyclic subgroups.
    pub fn least_generator(&self) -> Option<u64> {
        let n = self.order();
        self.residues.iter().copied().find(|&x| self.element_order(x) == n)
    }

    /// Residues of order 2.
    pub fn involutions(&self) -> Vec<u64> {
        let one = self.identity();
        self.residues.iter().copied().filter(|&x| x != one && x * x % self.modulus == one).collect()
    }

    /// Canonical list form, `[1,4,11,14]`; the trivial group mod 1 is `[]`.
    pub fn residue_list(&self) -> String {
        if self.modulus == 1 {
            return "[]".into();
        }
        let parts: Vec<String> = self.residues.iter().map(|r| r.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Parses the bracketed list produced by [`UnitSubgroup::residue_list`].
    pub fn parse_residue_list(a: u64, s: &str) -> Result<UnitSubgroup> {
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::UnitParse(format!("expected [..], got {s:?}")))?;
        let mut residues = Vec::new();
        if !inner.is_empty() {
            for tok in inner.split(',') {
                let v: u64 = tok.parse().map_err(|_| Error::UnitParse(format!("bad residue {tok:?}")))?;
                if a > 1 && v >= a {
                    return Err(Error::UnitParse(format!("residue {v} not reduced mod {a}")));
                }
                residues.push(v);
            }
        }
        if residues.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnitParse("residues must be strictly increasing".into()));
        }
        if a == 1 {
            if residues.iter().any(|&r| r != 0) {
                return Err(Error::UnitParse("only [] or [0] is valid mod 1".into()));
            }
            return Ok(UnitSubgroup::trivial(1));
        }
        if residues.is_empty() {
            return Err(Error::UnitParse(format!("empty residue list mod {a}")));
        }
        UnitSubgroup::from_residues(a, &residues)
    }

    pub fn profile(&self) -> GbarProfile {
        profile(self)
    }
}

impl fmt::Display for UnitSubgroup {
    /// `a=15;[1,4,11,14]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={};{}", self.modulus, self.residue_list())
    }
}

impl std::str::FromStr for UnitSubgroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<UnitSubgroup> {
        let (head, list) =
            s.split_once(';').ok_or_else(|| Error::UnitParse(format!("expected a=<modulus>;[..], got {s:?}")))?;
        let a: u64 = head
            .strip_prefix("a=")
            .and_then(|t| t.parse().ok())
            .filter(|&a| a > 0)
            .ok_or_else(|| Error::UnitParse(format!("bad modulus {head:?}")))?;
        UnitSubgroup::parse_residue_list(a, list)
    }
}

/// Structure of the Sylow 2-subgroup of a unit subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoPart {
    Trivial,
    Z2,
    Z2xZ2,
    Z4,
    Other { order: u64 },
}

impl TwoPart {
    /// Elementary abelian of rank at most 2.
    pub fn is_elementary_rank_le_2(self) -> bool {
        matches!(self, TwoPart::Trivial | TwoPart::Z2 | TwoPart::Z2xZ2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbarProfile {
    pub order: u64,
    pub odd_part_order: u64,
    pub two_part_order: u64,
    pub two_part: TwoPart,
    pub three_part_order: u64,
    pub is_cyclic: bool,
    pub odd_part_cyclic: bool,
    pub coprime_to_a: bool,
    pub coprime_to_2a: bool,
    pub coprime_to_6a: bool,
    pub coprime_to_30a: bool,
}

pub fn profile(h: &UnitSubgroup) -> GbarProfile {
    let order = h.order();
    let a = h.modulus;
    let two = h.two_part();
    let two_order = two.order();
    let exponent = two.residues.iter().map(|&x| two.element_order(x)).max().unwrap_or(1);
    let two_part = match (two_order, exponent) {
        (1, _) => TwoPart::Trivial,
        (2, _) => TwoPart::Z2,
        (4, 2) => TwoPart::Z2xZ2,
        (4, 4) => TwoPart::Z4,
        (o, _) => TwoPart::Other { order: o },
    };
    GbarProfile {
        order,
        odd_part_order: odd_part(order),
        two_part_order: two_order,
        two_part,
        three_part_order: p_part(order, 3),
        is_cyclic: h.is_cyclic(),
        odd_part_cyclic: h.odd_part().is_cyclic(),
        coprime_to_a: coprime(order, a),
        coprime_to_2a: coprime(order, 2 * a),
        coprime_to_6a: coprime(order, 6 * a),
        coprime_to_30a: coprime(order, 30 * a),
    }
}

/// Checks the per-type shape constraint on `Ḡ`; the error names the clause.
pub fn admissible(h: &UnitSubgroup, kind: SpaceFormType, a: u64) -> std::result::Result<(), String> {
    use SpaceFormType::*;
    if h.modulus != a {
        return Err(format!("Gbar is taken mod {}, not mod a = {a}", h.modulus));
    }
    let p = profile(h);
    let odd = p.odd_part_order;
    match kind {
        I => {
            if !p.is_cyclic {
                return Err("Gbar must be cyclic".into());
            }
            if !p.coprime_to_a {
                return Err("the order of Gbar must be prime to a".into());
            }
        }
        II => {
            if !p.odd_part_cyclic || !coprime(odd, 2 * a) {
                return Err("the odd part of Gbar must be cyclic of order prime to 2a".into());
            }
            if !p.two_part.is_elementary_rank_le_2() {
                return Err("the 2-part of Gbar must be elementary abelian of rank at most 2".into());
            }
        }
        III => {
            if p.two_part_order != 1 || !p.is_cyclic {
                return Err("Gbar must be a cyclic 3-group times a cyclic group of order prime to 6a".into());
            }
            if !coprime(odd / p.three_part_order, 6 * a) {
                return Err("the part of Gbar prime to 3 must have order prime to 6a".into());
            }
        }
        IV | VI => {
            let m = if kind == IV { 6 } else { 30 };
            if !p.odd_part_cyclic || !coprime(odd, m * a) {
                return Err(format!("the odd part of Gbar must be cyclic of order prime to {m}a"));
            }
            if p.two_part_order > 2 {
                return Err("the 2-part of Gbar must have order 1 or 2".into());
            }
        }
        V => {
            if !p.is_cyclic || !p.coprime_to_30a {
                return Err("Gbar must be cyclic of order prime to 30a".into());
            }
        }
    }
    Ok(())
}

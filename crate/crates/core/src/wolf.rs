//! Wolf's type II presentations
//! `⟨A, B, R | A^m = B^n = 1, B A B⁻¹ = A^r, R² = B^{n/2}, R A R⁻¹ = A^l, R B R⁻¹ = B^k⟩`.

use std::fmt;

use crate::builders::SpaceFormTuple;
use crate::error::{Error, Result};
use crate::group::{is_isomorphic, shape_of_2group, Group, TwoGroupShape};
use crate::numtheory::gcd;
use crate::recognition::{classify, Rejection};

/// Parameters reduced to `r, l mod m` and `k mod n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WolfTypeIIParams {
    pub m: u64,
    pub n: u64,
    pub r: u64,
    pub k: u64,
    pub l: u64,
}

impl WolfTypeIIParams {
    pub fn new(m: u64, n: u64, r: i64, k: i64, l: i64) -> Result<WolfTypeIIParams> {
        if m == 0 || n == 0 || n % 2 == 1 {
            return Err(Error::BadParameter(format!("need m ≥ 1 and even n ≥ 2, got m = {m}, n = {n}")));
        }
        let reduce = |x: i64, q: u64| x.rem_euclid(q as i64) as u64;
        let p = WolfTypeIIParams { m, n, r: reduce(r, m), k: reduce(k, n), l: reduce(l, m) };
        if gcd(p.r, m) != 1 && m > 1 {
            return Err(Error::BadParameter(format!("r = {r} is not a unit mod {m}")));
        }
        Ok(p)
    }

    pub fn order(&self) -> u64 {
        2 * self.m * self.n
    }
}

impl fmt::Display for WolfTypeIIParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.m, self.n, self.r, self.k, self.l)
    }
}

fn pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    for _ in 0..exp {
        acc = acc * base % m;
    }
    acc
}

/// The group on normal forms `A^i B^j R^ε` with id `(ε n + j) m + i`,
/// multiplied by `(i₁, j₁, ε₁)(i₂, j₂, ε₂) = A^{i₁ + i₂ l^{ε₁} r^{j₁}} B^{j₁ + j₂ k^{ε₁}} R^{ε₁ + ε₂}`
/// and `R² = B^{n/2}`. The table is fully validated, so parameters that do
/// not define a group of order `2mn` are reported rather than collapsed.
pub fn build_wolf_ii(p: &WolfTypeIIParams) -> Result<Group> {
    let (m, n) = (p.m as usize, p.n as usize);
    let size = 2 * m * n;
    let r_pow: Vec<usize> = (0..n).map(|j| pow_mod(p.r, j as u64, p.m) as usize).collect();
    let l_pow = [1 % m, p.l as usize];
    let k_pow = [1 % n, p.k as usize];
    let id = |i: usize, j: usize, e: usize| (e * n + j) * m + i;
    let mut table = Vec::with_capacity(size * size);
    for x in 0..size {
        let (i1, j1, e1) = (x % m, x / m % n, x / (m * n));
        for y in 0..size {
            let (i2, j2, e2) = (y % m, y / m % n, y / (m * n));
            let i = (i1 + i2 * l_pow[e1] % m * r_pow[j1]) % m;
            let mut j = (j1 + j2 * k_pow[e1]) % n;
            let mut e = e1 + e2;
            if e == 2 {
                j = (j + n / 2) % n;
                e = 0;
            }
            table.push(id(i, j, e) as u32);
        }
    }
    Group::from_flat(size, table).map_err(|e| match e {
        Error::NotAssociative { x, y, z } => Error::InconsistentPresentation { x, y, z },
        other => Error::BadParameter(format!("parameters {p} do not define a group: {other}")),
    })
}

/// The six presentations of `(3 × 5) : Q8`.
pub fn duplication_params() -> Vec<WolfTypeIIParams> {
    [
        (3, 20, -1, -1, 1),
        (3, 20, -1, -1, -1),
        (5, 12, -1, -1, 1),
        (5, 12, -1, -1, -1),
        (15, 4, -1, -1, 4),
        (15, 4, -1, -1, 11),
    ]
    .into_iter()
    .map(|(m, n, r, k, l)| WolfTypeIIParams::new(m, n, r, k, l).expect("valid parameters"))
    .collect()
}

#[derive(Clone, Debug)]
pub struct DuplicationReport {
    pub params: Vec<WolfTypeIIParams>,
    pub orders: Vec<usize>,
    /// `isomorphic[i][j]` by the brute-force oracle.
    pub isomorphic: Vec<Vec<bool>>,
    pub classifications: Vec<std::result::Result<SpaceFormTuple, Rejection>>,
    pub sylow2_quaternionic: Vec<bool>,
}

impl DuplicationReport {
    /// The common tuple, if every group classified to the same one.
    pub fn shared_tuple(&self) -> Option<&SpaceFormTuple> {
        let first = self.classifications.first()?.as_ref().ok()?;
        self.classifications.iter().all(|c| c.as_ref().ok() == Some(first)).then_some(first)
    }

    pub fn isomorphic_pairs(&self) -> usize {
        let n = self.params.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.isomorphic[i][j]).count()
    }
}

impl fmt::Display for DuplicationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.params.iter().enumerate() {
            let c = match &self.classifications[i] {
                Ok(t) => t.to_string(),
                Err(r) => format!("REJECT {r}"),
            };
            writeln!(f, "{p} order={} {c}", self.orders[i])?;
        }
        let n = self.params.len();
        writeln!(f, "isomorphic pairs: {}/{}", self.isomorphic_pairs(), n * (n - 1) / 2)?;
        match self.shared_tuple() {
            Some(t) => write!(f, "shared tuple: {t}"),
            None => write!(f, "shared tuple: none"),
        }
    }
}

/// Builds, compares and classifies the six presentations.
pub fn duplication_report() -> Result<DuplicationReport> {
    let params = duplication_params();
    let groups: Vec<Group> = params.iter().map(build_wolf_ii).collect::<Result<_>>()?;
    let n = groups.len();
    let mut isomorphic = vec![vec![true; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let iso = is_isomorphic(&groups[i], &groups[j])?.is_some();
            isomorphic[i][j] = iso;
            isomorphic[j][i] = iso;
        }
    }
    let sylow2_quaternionic = groups
        .iter()
        .map(|g| {
            let (s, _) = g.subgroup_as_group(&g.sylow_subgroup(2));
            s.order() == 8 && matches!(shape_of_2group(&s), Ok(TwoGroupShape::Quaternionic))
        })
        .collect();
    Ok(DuplicationReport {
        orders: groups.iter().map(Group::order).collect(),
        classifications: groups.iter().map(|g| classify(g).map(|c| c.tuple)).collect(),
        params,
        isomorphic,
        sylow2_quaternionic,
    })
}

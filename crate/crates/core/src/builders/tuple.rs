//! The invariant tuple of a space-form group and its validator.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numtheory::{coprime, is_power_of, odd_part, p_part, radical};
use crate::units::{admissible, UnitSubgroup};

/// The six structure types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpaceFormType {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl SpaceFormType {
    pub const ALL: [SpaceFormType; 6] = [
        SpaceFormType::I,
        SpaceFormType::II,
        SpaceFormType::III,
        SpaceFormType::IV,
        SpaceFormType::V,
        SpaceFormType::VI,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SpaceFormType::I => "I",
            SpaceFormType::II => "II",
            SpaceFormType::III => "III",
            SpaceFormType::IV => "IV",
            SpaceFormType::V => "V",
            SpaceFormType::VI => "VI",
        }
    }

    /// Whether the tuple carries `t` (types I, II) or `θ` (types III, IV).
    pub fn has_t(self) -> bool {
        matches!(self, SpaceFormType::I | SpaceFormType::II)
    }

    pub fn has_theta(self) -> bool {
        matches!(self, SpaceFormType::III | SpaceFormType::IV)
    }
}

impl fmt::Display for SpaceFormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SpaceFormType {
    type Err = Error;

    fn from_str(s: &str) -> Result<SpaceFormType> {
        SpaceFormType::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::TupleParse { field: "TYPE".into(), msg: format!("unknown type {s:?}") })
    }
}

/// One failed constraint, naming the tuple field it concerns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub field: &'static str,
    pub message: String,
}

impl Violation {
    fn new(field: &'static str, message: impl Into<String>) -> Violation {
        Violation { field, message: message.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

/// `(type, g, a, Ḡ, Ḡ₀, b, t, θ)`. Exactly one of `t`, `θ` is present for
/// types I–IV, neither for V and VI.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpaceFormTuple {
    pub kind: SpaceFormType,
    pub g: u64,
    pub a: u64,
    pub gbar: UnitSubgroup,
    pub gbar0: Option<UnitSubgroup>,
    pub b: u64,
    pub t: Option<u64>,
    pub theta: Option<u64>,
}

impl SpaceFormTuple {
    /// The cyclic group of order `n`: type I with trivial action.
    pub fn cyclic(n: u64) -> SpaceFormTuple {
        let t = p_part(n, 2);
        SpaceFormTuple {
            kind: SpaceFormType::I,
            g: n,
            a: n / t,
            gbar: UnitSubgroup::trivial(n / t),
            gbar0: None,
            b: 1,
            t: Some(t),
            theta: None,
        }
    }

    /// `b̄`: the part of `|Ḡ|` that `B` maps onto.
    pub fn bbar(&self) -> u64 {
        bbar_for(self.kind, &self.gbar)
    }

    /// `t̄`: the 2-part of `|Ḡ|`.
    pub fn tbar(&self) -> u64 {
        p_part(self.gbar.order(), 2)
    }

    /// `θ̄`: the 3-part of `|Ḡ|`.
    pub fn theta_bar(&self) -> u64 {
        p_part(self.gbar.order(), 3)
    }

    fn sort_key(&self) -> (u64, SpaceFormType, u64, &[u64], Option<&[u64]>, u64, Option<u64>, Option<u64>) {
        (
            self.g,
            self.kind,
            self.a,
            self.gbar.residues(),
            self.gbar0.as_ref().map(|s| s.residues()),
            self.b,
            self.t,
            self.theta,
        )
    }
}

pub(crate) fn bbar_for(kind: SpaceFormType, gbar: &UnitSubgroup) -> u64 {
    let order = gbar.order();
    match kind {
        SpaceFormType::III => odd_part(order) / p_part(order, 3),
        _ => odd_part(order),
    }
}

impl Ord for SpaceFormTuple {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for SpaceFormTuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SpaceFormTuple {
    /// `TYPE=II;g=120;a=15;Gbar=[1,4,11,14];b=1;t=8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TYPE={};g={};a={};Gbar={}", self.kind, self.g, self.a, self.gbar.residue_list())?;
        if let Some(g0) = &self.gbar0 {
            write!(f, ";Gbar0={}", g0.residue_list())?;
        }
        write!(f, ";b={}", self.b)?;
        if let Some(t) = self.t {
            write!(f, ";t={t}")?;
        }
        if let Some(theta) = self.theta {
            write!(f, ";theta={theta}")?;
        }
        Ok(())
    }
}

fn parse_err(field: &str, msg: impl Into<String>) -> Error {
    Error::TupleParse { field: field.into(), msg: msg.into() }
}

fn parse_int(fields: &BTreeMap<&str, &str>, key: &str) -> Result<Option<u64>> {
    match fields.get(key) {
        None => Ok(None),
        Some(v) => v
            .parse::<u64>()
            .ok()
            .filter(|&x| x > 0)
            .map(Some)
            .ok_or_else(|| parse_err(key, format!("expected a positive integer, got {v:?}"))),
    }
}

impl FromStr for SpaceFormTuple {
    type Err = Error;

    /// Parses the canonical form. Fields may appear in any order; unknown,
    /// duplicate and missing fields are errors. Syntax only: use
    /// [`validate_tuple`] for the structural constraints.
    fn from_str(s: &str) -> Result<SpaceFormTuple> {
        const KNOWN: [&str; 8] = ["TYPE", "g", "a", "Gbar", "Gbar0", "b", "t", "theta"];
        let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
        for part in s.trim().split(';') {
            let (k, v) = part.split_once('=').ok_or_else(|| parse_err(part, "expected key=value"))?;
            if !KNOWN.contains(&k) {
                return Err(parse_err(k, "unknown field"));
            }
            if fields.insert(k, v).is_some() {
                return Err(parse_err(k, "duplicate field"));
            }
        }
        let kind: SpaceFormType = fields.get("TYPE").ok_or_else(|| parse_err("TYPE", "missing"))?.parse()?;
        let require = |key: &str| -> Result<u64> { parse_int(&fields, key)?.ok_or_else(|| parse_err(key, "missing")) };
        let g = require("g")?;
        let a = require("a")?;
        let b = require("b")?;
        let unit_list = |key: &str| -> Result<Option<UnitSubgroup>> {
            fields
                .get(key)
                .map(|v| UnitSubgroup::parse_residue_list(a, v).map_err(|e| parse_err(key, e.to_string())))
                .transpose()
        };
        let gbar = unit_list("Gbar")?.ok_or_else(|| parse_err("Gbar", "missing"))?;
        let gbar0 = unit_list("Gbar0")?;
        let t = parse_int(&fields, "t")?;
        let theta = parse_int(&fields, "theta")?;
        if kind.has_t() && t.is_none() {
            return Err(parse_err("t", format!("required for type {kind}")));
        }
        if !kind.has_t() && t.is_some() {
            return Err(parse_err("t", format!("not used by type {kind}")));
        }
        if kind.has_theta() && theta.is_none() {
            return Err(parse_err("theta", format!("required for type {kind}")));
        }
        if !kind.has_theta() && theta.is_some() {
            return Err(parse_err("theta", format!("not used by type {kind}")));
        }
        Ok(SpaceFormTuple { kind, g, a, gbar, gbar0, b, t, theta })
    }
}

/// Whether `b` is `b̄` times a nontrivial power of every prime dividing `b̄`.
pub fn b_is_valid(b: u64, bbar: u64) -> bool {
    if bbar == 1 {
        return b == 1;
    }
    b % bbar == 0 && b > bbar && radical(b / bbar) == radical(bbar)
}

/// Every constraint of the irredundant list, collected rather than
/// short-circuited.
pub fn validate_tuple(t: &SpaceFormTuple) -> std::result::Result<(), Vec<Violation>> {
    use SpaceFormType::*;
    let mut v = Vec::new();
    let a = t.a;
    if t.gbar.modulus() != a {
        v.push(Violation::new("Gbar", format!("modulus {} differs from a = {a}", t.gbar.modulus())));
        return Err(v);
    }
    match t.kind {
        I | II if a % 2 == 0 => v.push(Violation::new("a", "a must be odd")),
        III | IV if !coprime(a, 6) => v.push(Violation::new("a", "a must be prime to 6")),
        V | VI if !coprime(a, 30) => v.push(Violation::new("a", "a must be prime to 30")),
        _ => {}
    }
    if let Err(reason) = admissible(&t.gbar, t.kind, a) {
        v.push(Violation::new("Gbar", reason));
    }
    let bbar = t.bbar();
    if !b_is_valid(t.b, bbar) {
        let msg = if bbar == 1 {
            "b must be 1 when b̄ = 1".to_string()
        } else {
            format!("b must be b̄ = {bbar} times nontrivial powers of every prime dividing b̄")
        };
        v.push(Violation::new("b", msg));
    }
    let tbar = t.tbar();
    match (t.kind, t.t) {
        (I, Some(tt)) => {
            if !is_power_of(tt, 2) {
                v.push(Violation::new("t", "t must be a power of 2"));
            } else if tbar != 1 && tt <= tbar {
                v.push(Violation::new("t", format!("t must exceed t̄ = {tbar}")));
            }
        }
        (II, Some(tt)) => {
            if !is_power_of(tt, 2) {
                v.push(Violation::new("t", "t must be a power of 2"));
            } else if t.gbar0.is_none() && tt != 8 {
                v.push(Violation::new("t", "t must be 8 when Gbar0 is absent"));
            } else if t.gbar0.is_some() && tt <= 8 {
                v.push(Violation::new("t", "t must exceed 8 when Gbar0 is present"));
            }
        }
        (I | II, None) => v.push(Violation::new("t", "missing")),
        (_, Some(_)) => v.push(Violation::new("t", format!("not used by type {}", t.kind))),
        _ => {}
    }
    let theta_bar = t.theta_bar();
    match (t.kind, t.theta) {
        (III, Some(th)) => {
            if !is_power_of(th, 3) {
                v.push(Violation::new("theta", "θ must be a power of 3"));
            } else if th <= theta_bar {
                v.push(Violation::new("theta", format!("θ must exceed θ̄ = {theta_bar}")));
            }
        }
        (IV, Some(th)) => {
            if !is_power_of(th, 3) || th == 1 {
                v.push(Violation::new("theta", "θ must be a nontrivial power of 3"));
            }
        }
        (III | IV, None) => v.push(Violation::new("theta", "missing")),
        (_, Some(_)) => v.push(Violation::new("theta", format!("not used by type {}", t.kind))),
        _ => {}
    }
    match (&t.gbar0, t.kind) {
        (Some(g0), II) => {
            if g0.modulus() != a || !g0.is_subgroup_of(&t.gbar) {
                v.push(Violation::new("Gbar0", "Gbar0 must be a subgroup of Gbar"));
            } else {
                let index = t.gbar.order() / g0.order();
                if tbar == 4 && index != 2 {
                    v.push(Violation::new("Gbar0", "Gbar0 must have index 2 in Gbar when t̄ = 4"));
                } else if index > 2 {
                    v.push(Violation::new("Gbar0", "Gbar0 must have index at most 2 in Gbar"));
                }
                if !t.gbar.odd_part().is_subgroup_of(g0) {
                    v.push(Violation::new("Gbar0", "Gbar0 must contain the odd part of Gbar"));
                }
            }
        }
        (Some(_), _) => v.push(Violation::new("Gbar0", format!("not used by type {}", t.kind))),
        (None, _) => {}
    }
    let expected = match t.kind {
        I | II => t.t.map(|tt| a * t.b * tt),
        III => t.theta.map(|th| 8 * a * t.b * th),
        IV => t.theta.map(|th| 16 * a * t.b * th),
        V => Some(120 * a * t.b),
        VI => Some(240 * a * t.b),
    };
    if let Some(e) = expected {
        if e != t.g {
            v.push(Violation::new("g", format!("g must equal the product formula value {e}")));
        }
    }
    if v.is_empty() {
        Ok(())
    } else {
        Err(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> SpaceFormTuple {
        s.parse().unwrap()
    }

    fn fields(s: &str) -> Vec<&'static str> {
        validate_tuple(&parse(s)).unwrap_err().iter().map(|v| v.field).collect()
    }

    #[test]
    fn round_trip_strings() {
        for s in [
            "TYPE=II;g=120;a=15;Gbar=[1,4,11,14];b=1;t=8",
            "TYPE=II;g=8;a=1;Gbar=[];b=1;t=8",
            "TYPE=II;g=32;a=1;Gbar=[];Gbar0=[];b=1;t=32",
            "TYPE=III;g=24;a=1;Gbar=[];b=1;theta=3",
            "TYPE=VI;g=240;a=1;Gbar=[];b=1",
        ] {
            assert_eq!(parse(s).to_string(), s);
        }
        assert_eq!(parse("TYPE=II;g=8;a=1;Gbar=[0];b=1;t=8").to_string(), "TYPE=II;g=8;a=1;Gbar=[];b=1;t=8");
    }

    #[test]
    fn parse_errors_name_the_field() {
        let field = |s: &str| match s.parse::<SpaceFormTuple>() {
            Err(Error::TupleParse { field, .. }) => field,
            other => panic!("{other:?}"),
        };
        assert_eq!(field("TYPE=VII;g=1;a=1;Gbar=[];b=1"), "TYPE");
        assert_eq!(field("TYPE=I;g=x;a=1;Gbar=[];b=1;t=1"), "g");
        assert_eq!(field("TYPE=I;g=1;a=1;Gbar=[];b=1"), "t");
        assert_eq!(field("TYPE=I;g=12;a=3;Gbar=[1,3];b=1;t=4"), "Gbar");
        assert_eq!(field("TYPE=I;g=1;a=1;Gbar=[];b=1;t=1;t=1"), "t");
        assert_eq!(field("TYPE=I;g=1;a=1;Gbar=[];b=1;t=1;q=2"), "q");
        assert_eq!(field("TYPE=V;g=120;a=1;Gbar=[];b=1;theta=3"), "theta");
    }

    #[test]
    fn dicyclic_12_is_valid() {
        assert!(validate_tuple(&parse("TYPE=I;g=12;a=3;Gbar=[1,2];b=1;t=4")).is_ok());
    }

    #[test]
    fn s3_is_rejected_on_t() {
        let v = validate_tuple(&parse("TYPE=I;g=6;a=3;Gbar=[1,2];b=1;t=2")).unwrap_err();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].field, "t");
        assert!(v[0].message.contains("t must exceed t̄"));
    }

    #[test]
    fn theta_must_exceed_theta_bar() {
        let v = validate_tuple(&parse("TYPE=III;g=168;a=7;Gbar=[1,2,4];b=1;theta=3")).unwrap_err();
        assert!(v.iter().any(|x| x.field == "theta" && x.message.contains("θ must exceed θ̄")), "{v:?}");
        assert!(validate_tuple(&parse("TYPE=III;g=504;a=7;Gbar=[1,2,4];b=1;theta=9")).is_ok());
    }

    #[test]
    fn b_rule() {
        assert!(b_is_valid(1, 1));
        assert!(!b_is_valid(3, 1));
        assert!(!b_is_valid(3, 3));
        assert!(b_is_valid(9, 3));
        assert!(b_is_valid(27, 3));
        assert!(!b_is_valid(45, 3));
        assert!(!b_is_valid(45, 15));
        assert!(b_is_valid(225, 15));
        assert!(b_is_valid(675, 15));
        // Order-3 action of B on Z/7 needs |B| a proper multiple of 3.
        assert_eq!(fields("TYPE=I;g=21;a=7;Gbar=[1,2,4];b=3;t=1"), vec!["b"]);
        assert!(validate_tuple(&parse("TYPE=I;g=63;a=7;Gbar=[1,2,4];b=9;t=1")).is_ok());
    }

    #[test]
    fn type_ii_gbar0_rules() {
        assert!(validate_tuple(&parse("TYPE=II;g=16;a=1;Gbar=[];Gbar0=[];b=1;t=16")).is_ok());
        assert_eq!(fields("TYPE=II;g=16;a=1;Gbar=[];b=1;t=16"), vec!["t"]);
        assert_eq!(fields("TYPE=II;g=8;a=1;Gbar=[];Gbar0=[];b=1;t=8"), vec!["t"]);
        // t̄ = 4 forces index 2.
        assert_eq!(fields("TYPE=II;g=240;a=15;Gbar=[1,4,11,14];Gbar0=[1,4,11,14];b=1;t=16"), vec!["Gbar0"]);
        for g0 in ["[1,4]", "[1,11]", "[1,14]"] {
            let s = format!("TYPE=II;g=240;a=15;Gbar=[1,4,11,14];Gbar0={g0};b=1;t=16");
            assert!(validate_tuple(&parse(&s)).is_ok(), "{s}");
        }
        // t̄ = 2: index 1 or 2.
        assert!(validate_tuple(&parse("TYPE=II;g=48;a=3;Gbar=[1,2];Gbar0=[1];b=1;t=16")).is_ok());
        assert!(validate_tuple(&parse("TYPE=II;g=48;a=3;Gbar=[1,2];Gbar0=[1,2];b=1;t=16")).is_ok());
        assert_eq!(fields("TYPE=III;g=24;a=1;Gbar=[];Gbar0=[];b=1;theta=3"), vec!["Gbar0"]);
    }

    #[test]
    fn parity_and_product_rules() {
        assert_eq!(fields("TYPE=I;g=2;a=2;Gbar=[1];b=1;t=1"), vec!["a"]);
        assert_eq!(fields("TYPE=V;g=360;a=3;Gbar=[1];b=1"), vec!["a"]);
        assert_eq!(fields("TYPE=I;g=13;a=3;Gbar=[1];b=1;t=4"), vec!["g"]);
        assert_eq!(fields("TYPE=IV;g=16;a=1;Gbar=[];b=1;theta=1"), vec!["theta"]);
        assert!(validate_tuple(&parse("TYPE=IV;g=48;a=1;Gbar=[];b=1;theta=3")).is_ok());
        assert!(validate_tuple(&parse("TYPE=VI;g=1680;a=7;Gbar=[1,6];b=1")).is_ok());
        assert_eq!(fields("TYPE=V;g=840;a=7;Gbar=[1,6];b=1"), vec!["Gbar"]);
    }

    #[test]
    fn ordering_is_by_g_then_type() {
        let mut v = vec![
            parse("TYPE=II;g=8;a=1;Gbar=[];b=1;t=8"),
            parse("TYPE=I;g=8;a=1;Gbar=[];b=1;t=8"),
            parse("TYPE=I;g=4;a=1;Gbar=[];b=1;t=4"),
        ];
        v.sort();
        let s: Vec<String> = v.iter().map(|t| t.to_string()).collect();
        assert_eq!(
            s,
            vec!["TYPE=I;g=4;a=1;Gbar=[];b=1;t=4", "TYPE=I;g=8;a=1;Gbar=[];b=1;t=8", "TYPE=II;g=8;a=1;Gbar=[];b=1;t=8",]
        );
    }
}

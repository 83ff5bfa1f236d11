//! Orbifold Hodge numbers assembled from twisted-sector data.

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{format_rational, parse_rational, Rational};

/// Hodge numbers keyed by `(p, q)`.
pub type Diamond = BTreeMap<(i64, i64), u64>;

/// One connected component `X_i(g)` of a fixed locus with its fermion shift
/// and centralizer-invariant Hodge numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDatum {
    pub fermion_shift: Rational,
    pub hodge: Diamond,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorDatum {
    pub label: String,
    pub components: Vec<ComponentDatum>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbifoldInput {
    pub dimension: u32,
    #[serde(default)]
    pub is_calabi_yau: bool,
    pub sectors: Vec<SectorDatum>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ShiftRepr {
    Int(i64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
struct ComponentFile<S> {
    fermion_shift: S,
    hodge: Vec<(i64, i64, u64)>,
}

impl Serialize for ComponentDatum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComponentFile {
            fermion_shift: format_rational(&self.fermion_shift),
            hodge: triples(&self.hodge),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComponentDatum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let f = ComponentFile::<ShiftRepr>::deserialize(d)?;
        let fermion_shift = match f.fermion_shift {
            ShiftRepr::Int(n) => Rational::from_integer(n.into()),
            ShiftRepr::Text(s) => parse_rational(&s).map_err(D::Error::custom)?,
        };
        if fermion_shift.is_negative() {
            return Err(D::Error::custom("fermion shift must be nonnegative"));
        }
        let mut hodge = Diamond::new();
        for (p, q, h) in f.hodge {
            *hodge.entry((p, q)).or_default() += h;
        }
        Ok(ComponentDatum { fermion_shift, hodge })
    }
}

fn triples(d: &Diamond) -> Vec<(i64, i64, u64)> {
    d.iter().filter(|(_, &h)| h != 0).map(|(&(p, q), &h)| (p, q, h)).collect()
}

fn euler_of(d: &Diamond) -> i64 {
    d.iter()
        .map(|(&(p, q), &h)| if (p + q) % 2 == 0 { h as i64 } else { -(h as i64) })
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectorHodge {
    pub label: String,
    pub hodge: Vec<(i64, i64, u64)>,
    pub euler: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbifoldHodge {
    pub dimension: u32,
    pub diamond: Vec<(i64, i64, u64)>,
    pub euler: i64,
    pub sectors: Vec<SectorHodge>,
}

impl OrbifoldHodge {
    pub fn h(&self, p: i64, q: i64) -> u64 {
        self.diamond.iter().find(|t| (t.0, t.1) == (p, q)).map_or(0, |t| t.2)
    }
}

/// `h^{p,q}_g = sum_i h^{p-F_i, q-F_i}(X_i(g))` inside the `[0, n]^2` diamond.
pub fn sector_hodge(sector: &SectorDatum, dimension: u32) -> Result<Diamond> {
    let n = i64::from(dimension);
    let mut out = Diamond::new();
    for c in &sector.components {
        if !c.fermion_shift.is_integer() {
            return Err(Error::NonIntegralShift(format_rational(&c.fermion_shift)));
        }
        let f = c
            .fermion_shift
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::ShiftOutOfRange(i64::MAX, i64::MAX))?;
        for (&(p, q), &h) in &c.hodge {
            if h == 0 {
                continue;
            }
            let (sp, sq) = (p + f, q + f);
            if !(0..=n).contains(&p) || !(0..=n).contains(&q) || sp > n || sq > n {
                return Err(Error::ShiftOutOfRange(sp, sq));
            }
            *out.entry((sp, sq)).or_default() += h;
        }
    }
    Ok(out)
}

fn is_untwisted(s: &SectorDatum) -> bool {
    !s.components.is_empty() && s.components.iter().all(|c| c.fermion_shift == Rational::from_integer(0.into()))
}

/// Sums the sector diamonds over conjugacy classes; the Euler number is read
/// off the result and checked against the sum of component Euler numbers.
pub fn orbifold_hodge(input: &OrbifoldInput) -> Result<OrbifoldHodge> {
    let identity = input.sectors.iter().filter(|s| is_untwisted(s)).count();
    if identity != 1 {
        return Err(Error::InvalidInput(format!(
            "expected exactly one untwisted sector (all shifts zero), found {identity}"
        )));
    }
    let n = i64::from(input.dimension);
    let mut total = Diamond::new();
    let mut sectors = Vec::with_capacity(input.sectors.len());
    let mut component_euler = 0i64;
    for s in &input.sectors {
        let h = sector_hodge(s, input.dimension)?;
        for (k, v) in &h {
            *total.entry(*k).or_default() += v;
        }
        component_euler += s.components.iter().map(|c| euler_of(&c.hodge)).sum::<i64>();
        sectors.push(SectorHodge { label: s.label.clone(), euler: euler_of(&h), hodge: triples(&h) });
    }
    let euler = euler_of(&total);
    if euler != component_euler {
        return Err(Error::IdentityViolation(format!(
            "diamond Euler number {euler} differs from component sum {component_euler}"
        )));
    }
    if input.is_calabi_yau {
        for (&(p, q), &h) in &total {
            let mirror = total.get(&(n - p, n - q)).copied().unwrap_or(0);
            if mirror != h {
                return Err(Error::IdentityViolation(format!(
                    "h^({p},{q}) = {h} but h^({},{}) = {mirror}",
                    n - p,
                    n - q
                )));
            }
        }
    }
    Ok(OrbifoldHodge { dimension: input.dimension, diamond: triples(&total), euler, sectors })
}

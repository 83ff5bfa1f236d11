//! String-theoretic E-polynomials.

mod dwork;
mod hypersurface;
mod toric;

pub use dwork::{dwork_invariants, DworkInvariants};
pub use hypersurface::{
    e_st_hyp_euler, e_st_hypersurface, face_volume_pairing_sum, h_st_p1, hypersurface_face_e,
    mirror_check, HypersurfaceInvariants, MirrorReport, Mode,
};
pub use toric::e_st_fano;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{BivariateLaurent, UnivariateInt};

/// One stratum `X_i` of a stratified variety.
///
/// `less_than` lists the strata `X_j` with `X_i < X_j`, i.e. `X_i` lies in
/// the closure of `X_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumDatum {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_open: Option<BivariateLaurent>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_closure: Option<BivariateLaurent>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<UnivariateInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_tilde: Option<UnivariateInt>,
    #[serde(default)]
    pub less_than: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataFile {
    pub strata: Vec<StratumDatum>,
}

/// Values of both stratified forms, where the data allows them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratifiedResult {
    pub e_st: BivariateLaurent,
    pub from_open_strata: Option<BivariateLaurent>,
    pub from_closures: Option<BivariateLaurent>,
}

/// Transitive closure of the `less_than` relation as index sets.
fn larger_strata(strata: &[StratumDatum]) -> Result<Vec<BTreeSet<usize>>> {
    let index: BTreeMap<&str, usize> =
        strata.iter().enumerate().map(|(i, s)| (s.label.as_str(), i)).collect();
    if index.len() != strata.len() {
        return Err(Error::InvalidInput("stratum labels must be distinct".into()));
    }
    let direct: Vec<Vec<usize>> = strata
        .iter()
        .map(|s| {
            s.less_than
                .iter()
                .map(|l| {
                    index
                        .get(l.as_str())
                        .copied()
                        .ok_or_else(|| Error::InvalidInput(format!("unknown stratum label {l}")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(strata.len());
    for i in 0..strata.len() {
        let mut seen = BTreeSet::new();
        let mut stack = direct[i].clone();
        while let Some(j) = stack.pop() {
            if seen.insert(j) {
                stack.extend(&direct[j]);
            }
        }
        if seen.contains(&i) {
            return Err(Error::InconsistentStratification(format!(
                "order relation has a cycle through {}",
                strata[i].label
            )));
        }
        out.push(seen);
    }
    Ok(out)
}

/// `sum E(X_i) S(X_i; uv)` and `sum E(closure X_i) S~(X_i; uv)`.
///
/// Every form with complete data is evaluated; when both are available they
/// must agree, as must the additivity and `S`/`S~` relations between the data.
pub fn e_st_stratified(strata: &[StratumDatum]) -> Result<StratifiedResult> {
    if strata.is_empty() {
        return Err(Error::InvalidInput("empty stratification".into()));
    }
    let larger = larger_strata(strata)?;
    let has_open = strata.iter().all(|s| s.e_open.is_some() && s.s.is_some());
    let has_closed = strata.iter().all(|s| s.e_closure.is_some() && s.s_tilde.is_some());

    let from_open_strata = has_open.then(|| {
        strata.iter().fold(BivariateLaurent::zero(), |acc, s| {
            acc + s.e_open.as_ref().unwrap() * &s.s.as_ref().unwrap().in_uv()
        })
    });
    let from_closures = has_closed.then(|| {
        strata.iter().fold(BivariateLaurent::zero(), |acc, s| {
            acc + s.e_closure.as_ref().unwrap() * &s.s_tilde.as_ref().unwrap().in_uv()
        })
    });

    for (i, s) in strata.iter().enumerate() {
        if let (Some(closure), true) = (&s.e_closure, strata.iter().all(|t| t.e_open.is_some())) {
            let below = (0..strata.len())
                .filter(|&k| larger[k].contains(&i))
                .fold(s.e_open.clone().unwrap(), |acc, k| &acc + strata[k].e_open.as_ref().unwrap());
            if &below != closure {
                return Err(Error::InconsistentStratification(format!(
                    "closure of {} is not the union of the strata below it",
                    s.label
                )));
            }
        }
        if let (Some(sp), true) = (&s.s, strata.iter().all(|t| t.s_tilde.is_some())) {
            let sum = larger[i]
                .iter()
                .fold(s.s_tilde.clone().unwrap(), |acc, &j| &acc + strata[j].s_tilde.as_ref().unwrap());
            if &sum != sp {
                return Err(Error::InconsistentStratification(format!(
                    "S of {} differs from the sum of S~ over larger strata",
                    s.label
                )));
            }
        }
    }

    let e_st = match (&from_open_strata, &from_closures) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::InconsistentStratification(format!("{a} differs from {b}")))
        }
        (Some(a), _) => a.clone(),
        (None, Some(b)) => b.clone(),
        (None, None) => {
            return Err(Error::InvalidInput(
                "each stratum needs e_open and s, or e_closure and s_tilde".into(),
            ))
        }
    };
    Ok(StratifiedResult { e_st, from_open_strata, from_closures })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus(k: usize) -> BivariateLaurent {
        BivariateLaurent::uv_minus_one_pow(k)
    }

    fn stratum(label: &str, e: BivariateLaurent, less_than: &[&str]) -> StratumDatum {
        StratumDatum {
            label: label.into(),
            e_open: Some(e),
            s: Some(UnivariateInt::one()),
            less_than: less_than.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        }
    }

    #[test]
    fn single_smooth_stratum() {
        let e = BivariateLaurent::from_terms([(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, 1)]);
        let r = e_st_stratified(&[stratum("X", e.clone(), &[])]).unwrap();
        assert_eq!(r.e_st, e);
    }

    #[test]
    fn projective_plane_by_orbits() {
        let mut strata = vec![stratum("T", torus(2), &[])];
        for i in 0..3 {
            strata.push(stratum(&format!("E{i}"), torus(1), &["T"]));
        }
        for (i, edges) in [["E0", "E1"], ["E1", "E2"], ["E2", "E0"]].iter().enumerate() {
            strata.push(stratum(&format!("P{i}"), torus(0), edges));
        }
        let r = e_st_stratified(&strata).unwrap();
        assert_eq!(r.e_st, UnivariateInt::new(vec![1, 1, 1]).in_uv());
    }

    #[test]
    fn inconsistent_forms_are_rejected() {
        let mut s = stratum("X", torus(0), &[]);
        s.e_closure = Some(torus(0));
        s.s_tilde = Some(UnivariateInt::new(vec![0, 1]));
        assert!(matches!(e_st_stratified(&[s]), Err(Error::InconsistentStratification(_))));
        let a = stratum("A", torus(0), &["B"]);
        let b = stratum("B", torus(0), &["A"]);
        assert!(matches!(e_st_stratified(&[a, b]), Err(Error::InconsistentStratification(_))));
    }
}

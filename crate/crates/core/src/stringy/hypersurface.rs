use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{euler_value, BivariateLaurent, UnivariateInt};
use crate::polytope::LatticePolytope;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    /// Full `(u, v)` polynomial; reflexive simplices only.
    #[default]
    FullSimplex,
    /// Specialization at `u = 1`; any reflexive polytope.
    UEqualsOne,
}

/// Invariants of a generic anticanonical hypersurface in the toric variety of
/// a reflexive polytope `delta` (its Newton polytope).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceInvariants {
    pub d: usize,
    pub e_st: Option<BivariateLaurent>,
    pub e_st_u1: BivariateLaurent,
    pub euler: i64,
    /// `(p, h^{p,1}_st)` for `2 <= p <= d-3`.
    pub h_p1: Vec<(usize, u64)>,
}

impl Serialize for HypersurfaceInvariants {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HypersurfaceInvariants", 6)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("e_st", &self.e_st)?;
        st.serialize_field("hodge_diamond", &self.e_st.as_ref().map(BivariateLaurent::hodge_numbers))?;
        st.serialize_field("e_st_u1", &self.e_st_u1)?;
        st.serialize_field("euler", &self.euler)?;
        st.serialize_field("h_p1", &self.h_p1)?;
        st.end()
    }
}

/// Faces `theta` of `delta` with `lo <= dim theta <= hi`, each paired with
/// its dual face, both as polytopes.
struct Pairing {
    dual: LatticePolytope,
    pairs: Vec<(usize, LatticePolytope, LatticePolytope)>,
}

fn pairing(delta: &LatticePolytope, lo: usize, hi: usize) -> Result<Pairing> {
    let dual = delta.polar_dual()?;
    let lattice = delta.face_lattice();
    let mut pairs = Vec::new();
    for k in lo..=hi.min(delta.dim().saturating_sub(1)) {
        for face in &lattice[k] {
            let star = delta.dual_face(face)?;
            pairs.push((
                k,
                delta.sub_polytope(&face.vertex_indices),
                dual.sub_polytope(&star.vertex_indices),
            ));
        }
    }
    Ok(Pairing { dual, pairs })
}

fn s_tilde(simplex: &LatticePolytope) -> Result<UnivariateInt> {
    Ok(simplex.box_polynomials()?.1)
}

/// `u^k / v * S(u^-1 v)`.
fn twisted(s: &UnivariateInt, k: usize) -> BivariateLaurent {
    s.substitute(-1, 1).shift(k as i32, -1)
}

/// `S(v) / v` as a Laurent polynomial in `v`.
fn over_v(s: &UnivariateInt) -> BivariateLaurent {
    s.substitute(0, 1).shift(0, -1)
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// E-polynomial of the affine hypersurface `Z_f` inside the torus orbit of a
/// face `theta` with `dim theta >= 1`.
pub fn hypersurface_face_e(theta: &LatticePolytope, mode: Mode) -> Result<BivariateLaurent> {
    let k = theta.dim();
    if k == 0 {
        return Err(Error::PreconditionViolated("face must have positive dimension".into()));
    }
    match mode {
        Mode::FullSimplex => {
            if !theta.is_simplex() {
                return Err(Error::NotSimplex { vertices: theta.num_vertices(), dim: k });
            }
            let torus = BivariateLaurent::uv_minus_one_pow(k) - BivariateLaurent::monomial(0, 0, sign(k));
            let mut e = torus.shift(-1, -1);
            let mut inner = BivariateLaurent::zero();
            for faces in &theta.face_lattice()[1..] {
                for tau in faces {
                    let tau = theta.sub_polytope(&tau.vertex_indices);
                    inner = inner + twisted(&s_tilde(&tau)?, tau.dim());
                }
            }
            e = e + inner.scale(sign(k - 1));
            Ok(e)
        }
        Mode::UEqualsOne => {
            let torus = over_v(&UnivariateInt::t_minus_one_pow(k));
            Ok(torus + over_v(&theta.s_polynomial_auto()).scale(sign(k - 1)))
        }
    }
}

fn full_e_st(delta: &LatticePolytope) -> Result<BivariateLaurent> {
    let d = delta.dim();
    let p = pairing(delta, 1, d.saturating_sub(2))?;
    let mut e = s_tilde(&p.dual)?.in_uv().shift(-1, -1);
    e = e + twisted(&s_tilde(delta)?, d).scale(sign(d - 1));
    for (k, theta, star) in &p.pairs {
        let term = twisted(&s_tilde(theta)?, *k) * s_tilde(star)?.in_uv();
        e = e + term.scale(sign(k - 1));
    }
    Ok(e)
}

fn u1_e_st(delta: &LatticePolytope) -> Result<BivariateLaurent> {
    let d = delta.dim();
    let p = pairing(delta, 0, d - 1)?;
    let mut e = over_v(&p.dual.s_polynomial_auto());
    e = e + over_v(&delta.s_polynomial_auto()).scale(sign(d - 1));
    for (k, theta, star) in &p.pairs {
        let (k, ts, ss) = (*k, theta.s_polynomial_auto(), star.s_polynomial_auto());
        if (1..=d.saturating_sub(2)).contains(&k) {
            e = e + over_v(&(&ts * &ss)).scale(sign(k - 1));
        }
        if k == d - 1 {
            e = e - over_v(&ts).scale(sign(d - 1));
        }
        if k == 0 {
            e = e - over_v(&ss);
        }
    }
    Ok(e)
}

fn face_volume_sum(delta: &LatticePolytope, flip: bool) -> Result<i64> {
    if !delta.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let d = delta.dim();
    if d < 2 {
        return Err(Error::OutOfRange(format!("dimension {d} below 2")));
    }
    let p = pairing(delta, 1, d - 2)?;
    let mut total = 0i64;
    for (k, theta, star) in &p.pairs {
        let v = (theta.normalized_volume() * star.normalized_volume()) as i64;
        let s = if flip { sign(k - 1) } else { sign(*k) };
        total += s * v;
    }
    Ok(total)
}

/// Euler number of the hypersurface from normalized volumes of dual face pairs,
/// `sum_{1 <= dim theta <= d-2} (-1)^(dim theta - 1) v(theta) v(theta*)`.
pub fn e_st_hyp_euler(delta: &LatticePolytope) -> Result<i64> {
    face_volume_sum(delta, true)
}

/// The same pairing sum weighted by `(-1)^dim theta`; equals `-e_st_hyp_euler`.
pub fn face_volume_pairing_sum(delta: &LatticePolytope) -> Result<i64> {
    face_volume_sum(delta, false)
}

/// `h^{p,1}_st = sum_{codim theta = p} l*(theta) l*(theta*)` for `d >= 5`, `2 <= p <= d-3`.
pub fn h_st_p1(delta: &LatticePolytope, p: usize) -> Result<u64> {
    if !delta.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let d = delta.dim();
    if d < 5 || p < 2 || p + 3 > d {
        return Err(Error::OutOfRange(format!("p = {p} with d = {d}; need d >= 5 and 2 <= p <= d-3")));
    }
    let pr = pairing(delta, d - p, d - p)?;
    Ok(pr
        .pairs
        .iter()
        .map(|(_, theta, star)| theta.count_points(1, true) * star.count_points(1, true))
        .sum())
}

pub fn e_st_hypersurface(delta: &LatticePolytope, mode: Mode) -> Result<HypersurfaceInvariants> {
    if !delta.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let d = delta.dim();
    if mode == Mode::FullSimplex && !delta.is_simplex() {
        return Err(Error::NotSimplex { vertices: delta.num_vertices(), dim: d });
    }
    if mode == Mode::UEqualsOne && d < 2 {
        return Err(Error::OutOfRange("the u = 1 formula needs d >= 2".into()));
    }
    let h_p1 = if d >= 5 {
        (2..=d - 3).map(|p| Ok((p, h_st_p1(delta, p)?))).collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    let e_st = match mode {
        Mode::FullSimplex => {
            let e = full_e_st(delta)?;
            if !e.is_polynomial() {
                return Err(Error::NonPolynomialResult(e.to_string()));
            }
            if e.poincare_dual((d - 1) as u32) != e {
                return Err(Error::IdentityViolation(format!("{e} violates Poincaré duality")));
            }
            for &(p, h) in &h_p1 {
                if e.coeff(p as i32, 1).unsigned_abs() != h {
                    return Err(Error::IdentityViolation(format!(
                        "h^({p},1) = {h} disagrees with the coefficient in {e}"
                    )));
                }
            }
            Some(e)
        }
        Mode::UEqualsOne => None,
    };
    let e_st_u1 = if d >= 2 {
        let u1 = u1_e_st(delta)?;
        if !u1.is_polynomial() {
            return Err(Error::NonPolynomialResult(u1.to_string()));
        }
        if let Some(e) = &e_st {
            if e.at_u_one() != u1 {
                return Err(Error::IdentityViolation(format!(
                    "u = 1 specialization of {e} differs from {u1}"
                )));
            }
        }
        u1
    } else {
        e_st.as_ref().expect("full mode").at_u_one()
    };
    let euler = match &e_st {
        Some(e) => {
            let value = euler_value(e);
            if d >= 2 && value != e_st_hyp_euler(delta)? {
                return Err(Error::IdentityViolation(format!(
                    "Euler number {value} differs from the face-volume sum"
                )));
            }
            value
        }
        None => e_st_hyp_euler(delta)?,
    };
    Ok(HypersurfaceInvariants { d, e_st, e_st_u1, euler, h_p1 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorReport {
    pub d: usize,
    pub e_st: BivariateLaurent,
    pub e_st_dual: BivariateLaurent,
    pub holds: bool,
}

impl Serialize for MirrorReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MirrorReport", 6)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("e_st", &self.e_st)?;
        st.serialize_field("e_st_dual", &self.e_st_dual)?;
        st.serialize_field("hodge_diamond", &self.e_st.hodge_numbers())?;
        st.serialize_field("hodge_diamond_dual", &self.e_st_dual.hodge_numbers())?;
        st.serialize_field("holds", &self.holds)?;
        st.end()
    }
}

/// Compares `E_st` for `delta` with `(-u)^(d-1) E_st(u^-1, v)` for its dual.
pub fn mirror_check(delta: &LatticePolytope) -> Result<MirrorReport> {
    let d = delta.dim();
    let f = e_st_hypersurface(delta, Mode::FullSimplex)?.e_st.expect("full mode");
    let g = e_st_hypersurface(&delta.polar_dual()?, Mode::FullSimplex)?.e_st.expect("full mode");
    let holds = f == g.mirror_transform((d - 1) as u32);
    if !holds {
        return Err(Error::IdentityViolation(format!("{f} is not the mirror of {g}")));
    }
    Ok(MirrorReport { d, e_st: f, e_st_dual: g, holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hodge(e: &BivariateLaurent, p: i32, q: i32) -> i64 {
        e.hodge_numbers()
            .into_iter()
            .find(|&(a, b, _)| (a, b) == (p, q))
            .map(|t| t.2)
            .unwrap_or(0)
    }

    #[test]
    fn quintic_mirror_side() {
        let inv = e_st_hypersurface(&LatticePolytope::standard_reflexive_simplex(4), Mode::FullSimplex).unwrap();
        let e = inv.e_st.unwrap();
        assert_eq!(hodge(&e, 1, 1), 101);
        assert_eq!(hodge(&e, 2, 1), 1);
        assert_eq!(hodge(&e, 3, 0), 1);
        assert_eq!(inv.euler, 200);
    }

    #[test]
    fn quintic_side() {
        let big = LatticePolytope::fermat_simplex(&[1, 1, 1, 1, 1]).unwrap();
        let inv = e_st_hypersurface(&big, Mode::FullSimplex).unwrap();
        let e = inv.e_st.unwrap();
        assert_eq!(hodge(&e, 1, 1), 1);
        assert_eq!(hodge(&e, 2, 1), 101);
        assert_eq!(inv.euler, -200);
        assert_eq!(face_volume_pairing_sum(&big).unwrap(), 200);
    }

    #[test]
    fn quartic_k3_and_cubic_curve() {
        let k3 = e_st_hypersurface(&LatticePolytope::standard_reflexive_simplex(3), Mode::FullSimplex).unwrap();
        assert_eq!(k3.euler, 24);
        assert_eq!(hodge(k3.e_st.as_ref().unwrap(), 1, 1), 20);
        let curve = e_st_hypersurface(&LatticePolytope::standard_reflexive_simplex(2), Mode::FullSimplex).unwrap();
        assert_eq!(
            curve.e_st.unwrap(),
            BivariateLaurent::from_terms([(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, 1)])
        );
        assert_eq!(curve.euler, 0);
    }

    #[test]
    fn segment_gives_two_points() {
        let seg = LatticePolytope::standard_reflexive_simplex(1);
        let inv = e_st_hypersurface(&seg, Mode::FullSimplex).unwrap();
        assert_eq!(inv.e_st.unwrap(), BivariateLaurent::monomial(0, 0, 2));
        assert!(mirror_check(&seg).unwrap().holds);
    }

    #[test]
    fn face_polynomials() {
        let edge = LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(hypersurface_face_e(&edge, Mode::FullSimplex).unwrap(), BivariateLaurent::one());
        assert_eq!(hypersurface_face_e(&edge, Mode::UEqualsOne).unwrap(), BivariateLaurent::one());
        let tri = LatticePolytope::new(2, vec![vec![2, -1], vec![-1, 2], vec![-1, -1]]).unwrap();
        let full = hypersurface_face_e(&tri, Mode::FullSimplex).unwrap();
        assert_eq!(full.at_u_one(), hypersurface_face_e(&tri, Mode::UEqualsOne).unwrap());
        assert_eq!(full.coeff(0, 1), -1);
        let sq = LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]]).unwrap();
        assert!(matches!(hypersurface_face_e(&sq, Mode::FullSimplex), Err(Error::NotSimplex { .. })));
    }

    #[test]
    fn u_one_mode_on_polygons_and_solids() {
        let sq = LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]]).unwrap();
        let inv = e_st_hypersurface(&sq, Mode::UEqualsOne).unwrap();
        assert!(inv.e_st_u1.is_zero());
        assert_eq!(inv.euler, 0);
        let oct = LatticePolytope::new(
            3,
            vec![vec![1, 0, 0], vec![-1, 0, 0], vec![0, 1, 0], vec![0, -1, 0], vec![0, 0, 1], vec![0, 0, -1]],
        )
        .unwrap();
        assert_eq!(e_st_hypersurface(&oct, Mode::UEqualsOne).unwrap().euler, 24);
        assert_eq!(e_st_hypersurface(&oct.polar_dual().unwrap(), Mode::UEqualsOne).unwrap().euler, 24);
    }

    #[test]
    fn quintic_mirror_pair() {
        let r = mirror_check(&LatticePolytope::standard_reflexive_simplex(4)).unwrap();
        assert!(r.holds);
        assert_eq!(r.e_st_dual.coeff(2, 1), -101);
    }

    #[test]
    fn sextic_fourfolds() {
        for delta in [
            LatticePolytope::standard_reflexive_simplex(5),
            LatticePolytope::fermat_simplex(&[1, 1, 1, 1, 1, 1]).unwrap(),
        ] {
            let inv = e_st_hypersurface(&delta, Mode::FullSimplex).unwrap();
            assert_eq!(inv.h_p1.len(), 1);
            assert_eq!(inv.euler.abs(), 2610);
        }
    }

    #[test]
    fn h_p1_range() {
        let s = LatticePolytope::standard_reflexive_simplex(4);
        assert!(matches!(h_st_p1(&s, 2), Err(Error::OutOfRange(_))));
    }
}

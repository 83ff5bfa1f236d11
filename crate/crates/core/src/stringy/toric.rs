use crate::error::{Error, Result};
use crate::exactpoly::BivariateLaurent;
use crate::polytope::LatticePolytope;

/// `E_st` of the toric Fano variety whose moment polytope is the reflexive `delta`.
///
/// Evaluated as the h*-polynomial of the dual and, independently, as the sum
/// over torus orbits `(uv - 1)^dim(theta) S(theta*; uv)`; the two must agree.
pub fn e_st_fano(delta: &LatticePolytope) -> Result<BivariateLaurent> {
    let dual = delta.polar_dual()?;
    let closed = dual.s_polynomial_auto().in_uv();
    let d = delta.dim();
    let mut orbits = BivariateLaurent::uv_minus_one_pow(d);
    for faces in &delta.face_lattice()[..d] {
        for face in faces {
            let star = delta.dual_face(face)?;
            let s = dual.sub_polytope(&star.vertex_indices).s_polynomial_auto();
            orbits = orbits + BivariateLaurent::uv_minus_one_pow(face.dim) * s.in_uv();
        }
    }
    if orbits != closed {
        return Err(Error::IdentityViolation(format!(
            "orbit sum {orbits} differs from dual h*-polynomial {closed}"
        )));
    }
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::UnivariateInt;

    #[test]
    fn projective_plane() {
        let big = LatticePolytope::new(2, vec![vec![2, -1], vec![-1, 2], vec![-1, -1]]).unwrap();
        assert_eq!(e_st_fano(&big).unwrap(), UnivariateInt::new(vec![1, 1, 1]).in_uv());
    }

    #[test]
    fn singular_square() {
        let sq = LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]]).unwrap();
        let e = e_st_fano(&sq).unwrap();
        assert_eq!(e, UnivariateInt::new(vec![1, 6, 1]).in_uv());
        assert_eq!(crate::exactpoly::euler_value(&e), 8);
    }

    #[test]
    fn not_reflexive() {
        let p = LatticePolytope::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        assert!(matches!(e_st_fano(&p), Err(Error::NotReflexive)));
    }
}

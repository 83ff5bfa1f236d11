use num_bigint::BigInt;
use serde::Serialize;

use super::LatticePolytope;
use crate::error::{Error, Result};
use crate::exactpoly::{format_rational, Rational, UnivariateInt};
use crate::lattice;

/// A lattice point `sum lambda_i (w_i, 1)` with every `lambda_i` in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxPoint {
    /// Ambient coordinates followed by the height.
    pub lattice_point: Vec<i64>,
    pub barycentric: Vec<Rational>,
    pub weight: Rational,
    pub support: Vec<usize>,
}

impl Serialize for BoxPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BoxPoint", 4)?;
        st.serialize_field("lattice_point", &self.lattice_point)?;
        let bary: Vec<String> = self.barycentric.iter().map(format_rational).collect();
        st.serialize_field("barycentric", &bary)?;
        st.serialize_field("weight", &format_rational(&self.weight))?;
        st.serialize_field("support", &self.support)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoxPoints {
    pub points: Vec<BoxPoint>,
    pub s: UnivariateInt,
    pub s_tilde: UnivariateInt,
}

struct Lifted {
    rows: Vec<Vec<i64>>,
    adj: Vec<Vec<i128>>,
    det: i128,
    diag: Vec<i64>,
}

impl LatticePolytope {
    fn lifted(&self) -> Result<Lifted> {
        if !self.is_simplex() {
            return Err(Error::NotSimplex { vertices: self.vertices.len(), dim: self.dim() });
        }
        let rows: Vec<Vec<i64>> = self
            .reduced
            .iter()
            .map(|y| {
                let mut r = y.clone();
                r.push(1);
                r
            })
            .collect();
        let det = lattice::det(&rows);
        let adj = lattice::adjugate(&rows);
        let h = lattice::hnf(&rows);
        let diag = (0..h.len()).map(|i| h[i][i]).collect();
        Ok(Lifted { rows, adj, det, diag })
    }

    pub(crate) fn simplex_determinant(&self) -> u64 {
        let rows: Vec<Vec<i64>> = self
            .reduced
            .iter()
            .map(|y| {
                let mut r = y.clone();
                r.push(1);
                r
            })
            .collect();
        u64::try_from(lattice::det(&rows).unsigned_abs()).expect("volume overflow")
    }

    /// Calls `f(numerators, denominator)` once per box point, where the
    /// barycentric coordinates are `numerators[i] / denominator`.
    fn for_each_box_point(&self, mut f: impl FnMut(&[i128], i128)) -> Result<()> {
        let l = self.lifted()?;
        let n = l.rows.len();
        let (sign, den) = if l.det < 0 { (-1, -l.det) } else { (1, l.det) };
        let hi: Vec<i64> = l.diag.iter().map(|&h| h - 1).collect();
        let mut nums = vec![0i128; n];
        super::ehrhart::scan_box(&vec![0; n], &hi, |x| {
            for (i, num) in nums.iter_mut().enumerate() {
                let s: i128 = (0..n).map(|k| i128::from(x[k]) * l.adj[k][i]).sum();
                *num = (sign * s).rem_euclid(den);
            }
            f(&nums, den);
        });
        Ok(())
    }

    /// `S` and `S~` of a simplex, graded by box-point height.
    pub fn box_polynomials(&self) -> Result<(UnivariateInt, UnivariateInt)> {
        let m = self.dim();
        let mut s = vec![0i64; m + 1];
        let mut st = vec![0i64; m + 1];
        self.for_each_box_point(|nums, den| {
            let w = usize::try_from(nums.iter().sum::<i128>() / den).expect("weight");
            s[w] += 1;
            if nums.iter().all(|&x| x > 0) {
                st[w] += 1;
            }
        })?;
        Ok((UnivariateInt::new(s), UnivariateInt::new(st)))
    }

    /// Every box point of a simplex with its barycentric data.
    pub fn box_points(&self) -> Result<BoxPoints> {
        let l = self.lifted()?;
        let mut points = Vec::new();
        self.for_each_box_point(|nums, den| {
            let n = nums.len();
            let m = n - 1;
            let lifted: Vec<i64> = (0..n)
                .map(|j| {
                    let s: i128 = (0..n).map(|i| nums[i] * i128::from(l.rows[i][j])).sum();
                    i64::try_from(s / den).expect("box point overflow")
                })
                .collect();
            let height = lifted[m];
            let mut ambient: Vec<i64> = self.hull.point(&lifted[..m]);
            for (a, o) in ambient.iter_mut().zip(&self.hull.origin) {
                *a += (height - 1) * o;
            }
            ambient.push(height);
            let barycentric: Vec<Rational> = nums
                .iter()
                .map(|&x| Rational::new(BigInt::from(x), BigInt::from(den)))
                .collect();
            let support = (0..n).filter(|&i| nums[i] > 0).collect();
            points.push(BoxPoint {
                lattice_point: ambient,
                barycentric,
                weight: Rational::from_integer(BigInt::from(height)),
                support,
            });
        })?;
        points.sort_by(|a, b| (&a.weight, &a.lattice_point).cmp(&(&b.weight, &b.lattice_point)));
        let (s, s_tilde) = self.box_polynomials()?;
        Ok(BoxPoints { points, s, s_tilde })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unimodular_simplex_has_one_box_point() {
        let p = LatticePolytope::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        let b = p.box_points().unwrap();
        assert_eq!(b.points.len(), 1);
        assert_eq!(b.s.coeffs(), &[1]);
        assert!(b.s_tilde.is_zero());
    }

    #[test]
    fn a1_segment() {
        let p = LatticePolytope::new(2, vec![vec![2, -1], vec![0, 1]]).unwrap();
        let b = p.box_points().unwrap();
        assert_eq!(b.points.len(), 2);
        assert_eq!(b.points[1].lattice_point, vec![1, 0, 1]);
        assert_eq!(b.s.coeffs(), &[1, 1]);
        assert_eq!(b.s_tilde.coeffs(), &[0, 1]);
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(b.points[1].barycentric, vec![half.clone(), half]);
    }

    #[test]
    fn box_points_match_ehrhart() {
        let p = LatticePolytope::new(2, vec![vec![2, -1], vec![-1, 2], vec![-1, -1]]).unwrap();
        let b = p.box_points().unwrap();
        assert_eq!(b.points.len() as u64, p.normalized_volume());
        assert_eq!(b.s, p.s_polynomial());
        assert_eq!(b.s_tilde.coeffs(), &[0, 1, 1]);
        for q in &b.points {
            let mut x = vec![Rational::from_integer(0.into()); 3];
            for (lam, v) in q.barycentric.iter().zip(p.vertices()) {
                for (j, xj) in x.iter_mut().enumerate() {
                    let c = if j < 2 { v[j] } else { 1 };
                    *xj += lam * Rational::from_integer(c.into());
                }
            }
            let want: Vec<Rational> = q.lattice_point.iter().map(|&c| Rational::from_integer(c.into())).collect();
            assert_eq!(x, want);
        }
    }

    #[test]
    fn non_simplex_is_rejected() {
        let p = LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]]).unwrap();
        assert!(matches!(p.box_points(), Err(Error::NotSimplex { .. })));
    }
}

use super::LatticePolytope;
use crate::exactpoly::UnivariateInt;
use crate::lattice;

pub(crate) fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(r).expect("binomial overflow")
}

impl LatticePolytope {
    /// Number of lattice points of `kP`; with `interior_only`, of its
    /// relative interior.
    pub fn count_points(&self, k: u64, interior_only: bool) -> u64 {
        let m = self.dim();
        if m == 0 {
            return 1;
        }
        if k == 0 {
            return u64::from(!interior_only);
        }
        let k = i64::try_from(k).expect("dilation factor too large");
        let (lo, hi) = self.reduced_bounds(k);
        let facets: Vec<(&[i64], i64)> = self
            .facets
            .iter()
            .map(|f| (f.normal.as_slice(), k * f.offset))
            .collect();
        let mut count = 0u64;
        scan_box(&lo, &hi, |y| {
            let ok = facets.iter().all(|(n, c)| {
                let v = lattice::dot(n, y);
                if interior_only {
                    v > -c
                } else {
                    v >= -c
                }
            });
            if ok {
                count += 1;
            }
        });
        count
    }

    fn reduced_bounds(&self, k: i64) -> (Vec<i64>, Vec<i64>) {
        let m = self.dim();
        let lo = (0..m)
            .map(|j| self.reduced.iter().map(|v| v[j]).min().unwrap_or(0) * k)
            .collect();
        let hi = (0..m)
            .map(|j| self.reduced.iter().map(|v| v[j]).max().unwrap_or(0) * k)
            .collect();
        (lo, hi)
    }

    /// All lattice points, in ambient coordinates and lexicographic order.
    pub fn lattice_points(&self) -> Vec<Vec<i64>> {
        if self.dim() == 0 {
            return vec![self.vertices[0].clone()];
        }
        let (lo, hi) = self.reduced_bounds(1);
        let mut out = Vec::new();
        scan_box(&lo, &hi, |y| {
            if self.facets.iter().all(|f| lattice::dot(&f.normal, y) >= -f.offset) {
                out.push(self.lift(y));
            }
        });
        out.sort();
        out
    }

    /// Whether the lattice point `x` lies in the polytope.
    pub fn contains(&self, x: &[i64]) -> bool {
        match self.reduce(x) {
            Some(y) => self.facets.iter().all(|f| lattice::dot(&f.normal, &y) >= -f.offset),
            None => false,
        }
    }

    /// The h*-polynomial from lattice-point counts of dilates.
    pub fn s_polynomial(&self) -> UnivariateInt {
        let m = self.dim();
        let l: Vec<i64> = (0..=m)
            .map(|k| i64::try_from(self.count_points(k as u64, false)).expect("count overflow"))
            .collect();
        let psi = (0..=m)
            .map(|j| {
                (0..=j)
                    .map(|i| {
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        sign * binomial(m + 1, i) * l[j - i]
                    })
                    .sum()
            })
            .collect();
        UnivariateInt::new(psi)
    }

    /// `dim! * volume` relative to the affine lattice of the polytope.
    pub fn normalized_volume(&self) -> u64 {
        if self.is_simplex() {
            return self.simplex_determinant();
        }
        self.s_polynomial().coeffs().iter().map(|&c| c as u64).sum()
    }

    /// S-polynomial through box points for simplices, lattice-point counts otherwise.
    pub(crate) fn s_polynomial_auto(&self) -> UnivariateInt {
        if self.is_simplex() {
            self.box_polynomials().expect("simplex").0
        } else {
            self.s_polynomial()
        }
    }
}

pub(crate) fn scan_box(lo: &[i64], hi: &[i64], mut f: impl FnMut(&[i64])) {
    let m = lo.len();
    let mut y = lo.to_vec();
    loop {
        f(&y);
        let mut j = 0;
        loop {
            if j == m {
                return;
            }
            if y[j] < hi[j] {
                y[j] += 1;
                break;
            }
            y[j] = lo[j];
            j += 1;
        }
    }
}

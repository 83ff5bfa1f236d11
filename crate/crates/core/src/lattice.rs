//! Integer linear algebra on small dense matrices.
//!
//! Matrices are row vectors (`&[Vec<i64>]`). Intermediate values use `i128`
//! and every narrowing back to `i64` is checked.

use num_integer::Integer;

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("integer overflow in lattice arithmetic")
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n, "determinant of a non-square matrix");
            r.iter().map(|&x| i128::from(x)).collect()
        })
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                    .expect("determinant overflow");
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Rank over the rationals.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    hnf(rows).len()
}

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Returns a basis in echelon form: pivots strictly increase, pivot entries
/// are positive, and entries above a pivot lie in `[0, pivot)`. Zero rows
/// are dropped, so the length equals the rank.
pub fn hnf(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let Some(n) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut out_rows = 0usize;
    for col in 0..n {
        if out_rows == a.len() {
            break;
        }
        // Euclid on this column among the remaining rows.
        loop {
            let mut best: Option<usize> = None;
            for i in out_rows..a.len() {
                if a[i][col] != 0 && best.is_none_or(|b| a[i][col].abs() < a[b][col].abs()) {
                    best = Some(i);
                }
            }
            let Some(p) = best else { break };
            a.swap(out_rows, p);
            let pivot = a[out_rows][col];
            let mut done = true;
            for i in out_rows + 1..a.len() {
                if a[i][col] != 0 {
                    let q = Integer::div_floor(&a[i][col], &pivot);
                    for j in col..n {
                        a[i][j] -= q * a[out_rows][j];
                    }
                    if a[i][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if out_rows < a.len() && a[out_rows][col] != 0 {
            if a[out_rows][col] < 0 {
                for x in a[out_rows].iter_mut() {
                    *x = -*x;
                }
            }
            let pivot = a[out_rows][col];
            for i in 0..out_rows {
                let q = Integer::div_floor(&a[i][col], &pivot);
                if q != 0 {
                    for j in col..n {
                        a[i][j] -= q * a[out_rows][j];
                    }
                }
            }
            out_rows += 1;
        }
    }
    a.truncate(out_rows);
    a.into_iter()
        .map(|r| r.into_iter().map(narrow).collect())
        .collect()
}

/// Z-basis of `{x in Z^n : rows · x = 0}`.
pub fn integer_kernel(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    // Row-reduce [A^T | I]; rows whose A^T part vanishes carry kernel vectors.
    let m = rows.len();
    let mut aug: Vec<Vec<i128>> = (0..n)
        .map(|j| {
            let mut r: Vec<i128> = rows.iter().map(|row| i128::from(row[j])).collect();
            r.extend((0..n).map(|k| i128::from(k == j)));
            r
        })
        .collect();
    let mut pivot_row = 0usize;
    for col in 0..m {
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..n {
                if aug[i][col] != 0 && best.is_none_or(|b| aug[i][col].abs() < aug[b][col].abs()) {
                    best = Some(i);
                }
            }
            let Some(p) = best else { break };
            aug.swap(pivot_row, p);
            let pivot = aug[pivot_row][col];
            let mut done = true;
            for i in pivot_row + 1..n {
                if aug[i][col] != 0 {
                    let q = Integer::div_floor(&aug[i][col], &pivot);
                    for j in 0..m + n {
                        aug[i][j] -= q * aug[pivot_row][j];
                    }
                    if aug[i][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                pivot_row += 1;
                break;
            }
        }
        if pivot_row == n {
            break;
        }
    }
    let kernel: Vec<Vec<i64>> = aug[pivot_row..]
        .iter()
        .map(|r| r[m..].iter().map(|&x| narrow(x)).collect())
        .collect();
    hnf(&kernel)
}

pub fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Divides by the gcd of the entries; zero vectors are returned unchanged.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = gcd_all(v);
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    narrow(a.iter().zip(b).map(|(&x, &y)| i128::from(x) * i128::from(y)).sum())
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y).expect("overflow")).collect()
}

/// Transposed cofactor matrix, so that `m · adj = det · I`.
pub fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = m
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != i)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let c = det(&minor);
            adj[j][i] = if (i + j) % 2 == 0 { c } else { -c };
        }
    }
    adj
}

/// An affine sublattice `origin + Z·basis` of `Z^n`, with `basis` in
/// Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLattice {
    pub origin: Vec<i64>,
    pub basis: Vec<Vec<i64>>,
}

impl AffineLattice {
    /// The lattice points of the affine hull of `points`.
    pub fn spanned_by(points: &[Vec<i64>]) -> Self {
        let origin = points[0].clone();
        let n = origin.len();
        let diffs: Vec<Vec<i64>> = points[1..].iter().map(|p| sub(p, &origin)).collect();
        let diffs: Vec<Vec<i64>> = diffs.into_iter().filter(|d| d.iter().any(|&x| x != 0)).collect();
        let basis = if diffs.is_empty() {
            Vec::new()
        } else {
            let normals = integer_kernel(&diffs, n);
            if normals.is_empty() {
                (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
            } else {
                integer_kernel(&normals, n)
            }
        };
        Self { origin, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Integer coordinates of `x` in this lattice, if `x` belongs to it.
    pub fn coords(&self, x: &[i64]) -> Option<Vec<i64>> {
        let mut rest: Vec<i128> = sub(x, &self.origin).into_iter().map(i128::from).collect();
        let mut out = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let p = row.iter().position(|&v| v != 0).expect("basis rows are nonzero");
            let pivot = i128::from(row[p]);
            if rest[p] % pivot != 0 {
                return None;
            }
            let c = rest[p] / pivot;
            for (r, &b) in rest.iter_mut().zip(row) {
                *r -= c * i128::from(b);
            }
            out.push(narrow(c));
        }
        rest.iter().all(|&r| r == 0).then_some(out)
    }

    pub fn point(&self, coords: &[i64]) -> Vec<i64> {
        let mut x: Vec<i128> = self.origin.iter().map(|&v| i128::from(v)).collect();
        for (c, row) in coords.iter().zip(&self.basis) {
            for (xi, &b) in x.iter_mut().zip(row) {
                *xi += i128::from(*c) * i128::from(b);
            }
        }
        x.into_iter().map(narrow).collect()
    }
}

//! Lattice polytopes: facets, faces, polar duals, lattice-point counts and
//! box points of simplices.

mod boxes;
mod ehrhart;
mod faces;

pub use boxes::{BoxPoint, BoxPoints};
pub use faces::Face;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{self, AffineLattice};

/// The inequality `<normal, x> >= -offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetForm {
    pub normal: Vec<i64>,
    pub offset: i64,
}

#[derive(Clone, Debug)]
struct RelFacet {
    normal: Vec<i64>,
    offset: i64,
    vertices: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct PolytopeFile {
    ambient_dim: usize,
    vertices: Vec<Vec<i64>>,
}

/// A lattice polytope given by its vertex list.
///
/// Construction rejects points that are not vertices of the convex hull, so
/// vertex indices stay stable for faces.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "PolytopeFile", into = "PolytopeFile")]
pub struct LatticePolytope {
    ambient_dim: usize,
    vertices: Vec<Vec<i64>>,
    hull: AffineLattice,
    reduced: Vec<Vec<i64>>,
    facets: Vec<RelFacet>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

impl TryFrom<PolytopeFile> for LatticePolytope {
    type Error = Error;
    fn try_from(f: PolytopeFile) -> Result<Self> {
        LatticePolytope::new(f.ambient_dim, f.vertices)
    }
}

impl From<LatticePolytope> for PolytopeFile {
    fn from(p: LatticePolytope) -> Self {
        PolytopeFile { ambient_dim: p.ambient_dim, vertices: p.vertices }
    }
}

pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Facets of the convex hull of full-dimensional points in `Z^m`.
fn hull_facets(points: &[Vec<i64>], m: usize) -> Vec<RelFacet> {
    if m == 0 {
        return Vec::new();
    }
    let mut found: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for_each_combination(points.len(), m, |combo| {
        let base = &points[combo[0]];
        let diffs: Vec<Vec<i64>> = combo[1..].iter().map(|&i| lattice::sub(&points[i], base)).collect();
        let ker = if diffs.is_empty() {
            vec![vec![1]]
        } else {
            lattice::integer_kernel(&diffs, m)
        };
        if ker.len() != 1 {
            return;
        }
        let normal = lattice::primitive(&ker[0]);
        let c0 = lattice::dot(&normal, base);
        let vals: Vec<i64> = points.iter().map(|p| lattice::dot(&normal, p)).collect();
        if vals.iter().all(|&v| v >= c0) {
            found.insert(normal.clone(), -c0);
        }
        if vals.iter().all(|&v| v <= c0) {
            found.insert(normal.iter().map(|x| -x).collect(), c0);
        }
    });
    found
        .into_iter()
        .map(|(normal, offset)| {
            let vertices = points
                .iter()
                .enumerate()
                .filter(|(_, p)| lattice::dot(&normal, p) == -offset)
                .map(|(i, _)| i)
                .collect();
            RelFacet { normal, offset, vertices }
        })
        .collect()
}

impl LatticePolytope {
    pub fn new(ambient_dim: usize, vertices: Vec<Vec<i64>>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::InvalidInput("ambient dimension must be positive".into()));
        }
        if vertices.is_empty() {
            return Err(Error::DegenerateInput("empty vertex list".into()));
        }
        if let Some(v) = vertices.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::InvalidInput(format!(
                "vertex {v:?} does not have {ambient_dim} coordinates"
            )));
        }
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::InvalidInput(format!("repeated vertex {v:?}")));
            }
        }
        let hull = AffineLattice::spanned_by(&vertices);
        let reduced: Vec<Vec<i64>> = vertices
            .iter()
            .map(|v| hull.coords(v).expect("vertex lies in its own affine lattice"))
            .collect();
        let facets = hull_facets(&reduced, hull.dim());
        if vertices.len() > 1 {
            for (i, v) in vertices.iter().enumerate() {
                let tight: Vec<&RelFacet> = facets.iter().filter(|f| f.vertices.contains(&i)).collect();
                let shared = (0..vertices.len())
                    .filter(|j| tight.iter().all(|f| f.vertices.contains(j)))
                    .count();
                if shared != 1 {
                    return Err(Error::InvalidInput(format!(
                        "{v:?} is not a vertex of the convex hull"
                    )));
                }
            }
        }
        Ok(Self { ambient_dim, vertices, hull, reduced, facets })
    }

    /// The simplex `conv{e_1, ..., e_d, -(e_1 + ... + e_d)}`.
    pub fn standard_reflexive_simplex(d: usize) -> Self {
        let mut vertices: Vec<Vec<i64>> = (0..d)
            .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
            .collect();
        vertices.push(vec![-1; d]);
        Self::new(d, vertices).expect("standard simplex is valid")
    }

    /// Newton simplex of the Fermat hypersurface in weighted projective
    /// space `P(w_0, ..., w_d)`, in a basis of the degree-zero lattice.
    ///
    /// Reflexive whenever every weight divides the sum of the weights.
    pub fn fermat_simplex(weights: &[i64]) -> Result<Self> {
        if weights.len() < 2 || weights.iter().any(|&w| w <= 0) {
            return Err(Error::InvalidInput("weights must be at least two positive integers".into()));
        }
        let s: i64 = weights.iter().sum();
        if let Some(w) = weights.iter().find(|&&w| s % w != 0) {
            return Err(Error::InvalidInput(format!("weight {w} does not divide {s}")));
        }
        let n = weights.len();
        let basis = lattice::integer_kernel(&[weights.to_vec()], n);
        let m = AffineLattice { origin: vec![0; n], basis };
        let vertices = (0..n)
            .map(|i| {
                let x: Vec<i64> = (0..n)
                    .map(|j| if i == j { s / weights[i] - 1 } else { -1 })
                    .collect();
                m.coords(&x).expect("exponent shift lies in the degree-zero lattice")
            })
            .collect();
        Self::new(n - 1, vertices)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.hull.dim()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim() + 1
    }

    /// Facet inequalities in ambient coordinates, sorted by normal.
    pub fn facet_representation(&self) -> Result<Vec<FacetForm>> {
        if !self.is_full_dimensional() {
            return Err(Error::DegenerateInput(format!(
                "{} vertices span dimension {} < {}",
                self.vertices.len(),
                self.dim(),
                self.ambient_dim
            )));
        }
        // A saturated full-rank lattice has the identity as Hermite basis.
        Ok(self
            .facets
            .iter()
            .map(|f| FacetForm {
                normal: f.normal.clone(),
                offset: f.offset - lattice::dot(&f.normal, &self.hull.origin),
            })
            .collect())
    }

    /// Vertex indices of each facet, in the order of
    /// [`facet_representation`](Self::facet_representation).
    pub fn facet_vertex_sets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.vertices.clone()).collect()
    }

    pub fn is_reflexive(&self) -> bool {
        self.facet_representation()
            .map(|fs| fs.iter().all(|f| f.offset == 1))
            .unwrap_or(false)
    }

    /// The polar dual; its vertices are the facet normals in facet order.
    pub fn polar_dual(&self) -> Result<Self> {
        if !self.is_reflexive() {
            return Err(Error::NotReflexive);
        }
        let normals = self.facet_representation()?.into_iter().map(|f| f.normal).collect();
        Self::new(self.ambient_dim, normals)
    }

    /// The polytope spanned by a subset of the vertices.
    pub fn sub_polytope(&self, indices: &[usize]) -> Self {
        let vertices = indices.iter().map(|&i| self.vertices[i].clone()).collect();
        Self::new(self.ambient_dim, vertices).expect("vertex subsets of faces are valid polytopes")
    }

    /// Reduced coordinates of `x` in the affine lattice of the polytope.
    fn reduce(&self, x: &[i64]) -> Option<Vec<i64>> {
        self.hull.coords(x)
    }

    fn lift(&self, y: &[i64]) -> Vec<i64> {
        self.hull.point(y)
    }
}

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::LatticePolytope;
use crate::error::{Error, Result};
use crate::lattice;

/// A face of a polytope, referenced by sorted vertex indices of the parent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Face {
    pub vertex_indices: Vec<usize>,
    pub dim: usize,
}

impl LatticePolytope {
    fn affine_rank(&self, indices: &[usize]) -> usize {
        let base = &self.reduced[indices[0]];
        let diffs: Vec<Vec<i64>> = indices[1..]
            .iter()
            .map(|&i| lattice::sub(&self.reduced[i], base))
            .collect();
        lattice::rank(&diffs)
    }

    pub fn face(&self, indices: &[usize]) -> Face {
        let mut vertex_indices = indices.to_vec();
        vertex_indices.sort_unstable();
        let dim = self.affine_rank(&vertex_indices);
        Face { vertex_indices, dim }
    }

    /// All nonempty faces, `result[k]` holding the faces of dimension `k`.
    pub fn face_lattice(&self) -> Vec<Vec<Face>> {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(all);
        let facets: Vec<Vec<usize>> = self.facets.iter().map(|f| f.vertices.clone()).collect();
        let mut queue: Vec<Vec<usize>> = Vec::new();
        for f in &facets {
            if seen.insert(f.clone()) {
                queue.push(f.clone());
            }
        }
        while let Some(face) = queue.pop() {
            for f in &facets {
                let meet: Vec<usize> = face.iter().copied().filter(|i| f.contains(i)).collect();
                if !meet.is_empty() && seen.insert(meet.clone()) {
                    queue.push(meet);
                }
            }
        }
        let mut out = vec![Vec::new(); self.dim() + 1];
        for s in seen {
            let face = self.face(&s);
            out[face.dim].push(face);
        }
        out
    }

    /// The face `{y in P* : <x, y> = -1 for all x in face}` of the polar dual,
    /// indexed by the dual's vertices (which follow facet order).
    pub fn dual_face(&self, face: &Face) -> Result<Face> {
        let forms = self.facet_representation()?;
        if !forms.iter().all(|f| f.offset == 1) {
            return Err(Error::NotReflexive);
        }
        if face.vertex_indices.len() == self.vertices.len() || face.vertex_indices.is_empty() {
            return Err(Error::PreconditionViolated("dual face of a non-proper face".into()));
        }
        let indices: Vec<usize> = forms
            .iter()
            .enumerate()
            .filter(|(_, f)| {
                face.vertex_indices
                    .iter()
                    .all(|&i| lattice::dot(&f.normal, &self.vertices[i]) == -1)
            })
            .map(|(j, _)| j)
            .collect();
        let dim = self.ambient_dim - 1 - face.dim;
        Ok(Face { vertex_indices: indices, dim })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(p: &LatticePolytope) -> Vec<usize> {
        p.face_lattice().iter().map(Vec::len).collect()
    }

    #[test]
    fn triangle_and_simplex_faces() {
        let t = LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]]).unwrap();
        assert_eq!(counts(&t), vec![3, 3, 1]);
        let s = LatticePolytope::standard_reflexive_simplex(4);
        assert_eq!(counts(&s), vec![5, 10, 10, 5, 1]);
    }

    #[test]
    fn diamond_faces() {
        let p = LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]]).unwrap();
        assert_eq!(counts(&p), vec![4, 4, 1]);
    }

    #[test]
    fn dual_faces_pair_dimensions() {
        let p = LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]]).unwrap();
        let dual = p.polar_dual().unwrap();
        for k in 0..2 {
            for f in &p.face_lattice()[k] {
                let g = p.dual_face(f).unwrap();
                assert_eq!(dual.face(&g.vertex_indices).dim, g.dim);
                assert_eq!(f.dim + g.dim, 1);
                let back = dual.dual_face(&g).unwrap();
                let bidual = dual.polar_dual().unwrap();
                let mut a: Vec<Vec<i64>> =
                    back.vertex_indices.iter().map(|&i| bidual.vertices()[i].clone()).collect();
                let mut b: Vec<Vec<i64>> =
                    f.vertex_indices.iter().map(|&i| p.vertices()[i].clone()).collect();
                a.sort();
                b.sort();
                assert_eq!(a, b);
            }
        }
    }
}

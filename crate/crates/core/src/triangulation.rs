//! Placing triangulations using every lattice point, and the interior cell
//! census that recovers the S-polynomial when the triangulation is unimodular.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::UnivariateInt;
use crate::lattice;
use crate::polytope::{for_each_combination, LatticePolytope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PlacementOrder {
    #[default]
    Lex,
    ReverseLex,
}

#[derive(Clone, Debug, Serialize)]
pub struct Triangulation {
    #[serde(skip)]
    pub base: LatticePolytope,
    pub points: Vec<Vec<i64>>,
    /// Sorted indices into `points`.
    pub maximal_cells: Vec<Vec<usize>>,
}

/// `a[i]` counts the `i`-dimensional cells not lying in the boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellCensus {
    pub a: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub a: Vec<u64>,
    pub s_from_cells: UnivariateInt,
    pub s_from_ehrhart: UnivariateInt,
    pub equal: bool,
}

fn sign(x: i128) -> i32 {
    x.signum() as i32
}

/// Coordinates on which the span of `dirs` projects isomorphically.
fn projection(dirs: &[Vec<i64>], m: usize) -> Vec<usize> {
    let k = dirs.len();
    let mut chosen = None;
    for_each_combination(m, k, |cols| {
        if chosen.is_none() {
            let minor: Vec<Vec<i64>> = dirs.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
            if lattice::det(&minor) != 0 {
                chosen = Some(cols.to_vec());
            }
        }
    });
    chosen.expect("independent directions have a nonzero minor")
}

fn orientation(pts: &[&Vec<i64>], x: &[i64], cols: &[usize]) -> i32 {
    let base = pts[0];
    let mut rows: Vec<Vec<i64>> = pts[1..]
        .iter()
        .map(|p| cols.iter().map(|&c| p[c] - base[c]).collect())
        .collect();
    rows.push(cols.iter().map(|&c| x[c] - base[c]).collect());
    sign(lattice::det(&rows))
}

/// Places the lattice points one at a time in the given order, coning each
/// over the visible part of the current boundary.
pub fn placing_triangulation(base: &LatticePolytope, order: PlacementOrder) -> Result<Triangulation> {
    if base.dim() == 0 {
        return Err(Error::DegenerateInput("triangulation needs dimension at least 1".into()));
    }
    let mut points = base.lattice_points();
    if order == PlacementOrder::ReverseLex {
        points.reverse();
    }
    let origin = &points[0];
    let reduced: Vec<Vec<i64>> = points.iter().map(|p| lattice::sub(p, origin)).collect();
    let m = base.ambient_dim();

    let mut cells: Vec<Vec<usize>> = vec![vec![0]];
    let mut span: Vec<Vec<i64>> = Vec::new();
    let mut cols: Vec<usize> = Vec::new();
    for p in 1..points.len() {
        let mut grown = span.clone();
        grown.push(reduced[p].clone());
        if lattice::rank(&grown) > span.len() {
            span = grown;
            cols = projection(&span, m);
            for c in &mut cells {
                c.push(p);
            }
            continue;
        }
        let mut boundary: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new();
        for (ci, c) in cells.iter().enumerate() {
            for (skip, &opposite) in c.iter().enumerate() {
                let mut f: Vec<usize> = c.clone();
                f.remove(skip);
                f.sort_unstable();
                boundary
                    .entry(f)
                    .and_modify(|e| e.0 = usize::MAX)
                    .or_insert((ci, opposite));
            }
        }
        let mut new_cells = Vec::new();
        for (f, (owner, opposite)) in boundary {
            if owner == usize::MAX {
                continue;
            }
            let fp: Vec<&Vec<i64>> = f.iter().map(|&i| &reduced[i]).collect();
            let sp = orientation(&fp, &reduced[p], &cols);
            let sq = orientation(&fp, &reduced[opposite], &cols);
            if sp != 0 && sp == -sq {
                let mut c = f.clone();
                c.push(p);
                new_cells.push(c);
            }
        }
        cells.extend(new_cells);
    }
    for c in &mut cells {
        c.sort_unstable();
    }
    cells.sort();
    Ok(Triangulation { base: base.clone(), points, maximal_cells: cells })
}

impl Triangulation {
    /// Every maximal cell has determinant one in the lattice of the hull.
    pub fn is_unimodular(&self) -> bool {
        let hull = lattice::AffineLattice::spanned_by(self.base.vertices());
        let directions = lattice::AffineLattice { origin: vec![0; self.base.ambient_dim()], basis: hull.basis };
        self.maximal_cells.iter().all(|cell| {
            let base = &self.points[cell[0]];
            let rows: Vec<Vec<i64>> = cell[1..]
                .iter()
                .map(|&i| {
                    directions
                        .coords(&lattice::sub(&self.points[i], base))
                        .expect("cells lie in the hull")
                })
                .collect();
            lattice::det(&rows).abs() == 1
        })
    }

    /// Interior cells of every dimension.
    pub fn census(&self) -> CellCensus {
        let m = self.base.dim();
        let facets = self.base.facet_vertex_sets();
        let facet_polys: Vec<LatticePolytope> = facets.iter().map(|f| self.base.sub_polytope(f)).collect();
        let on_facet: Vec<Vec<bool>> = facet_polys
            .iter()
            .map(|f| self.points.iter().map(|p| f.contains(p)).collect())
            .collect();
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for c in &self.maximal_cells {
            for k in 1..=c.len() {
                for_each_combination(c.len(), k, |idx| {
                    faces.insert(idx.iter().map(|&i| c[i]).collect());
                });
            }
        }
        let mut a = vec![0u64; m + 1];
        for f in faces {
            let boundary = on_facet.iter().any(|inc| f.iter().all(|&i| inc[i]));
            if !boundary {
                a[f.len() - 1] += 1;
            }
        }
        CellCensus { a }
    }
}

/// Checks `S(P; t) = sum_i a_i (t - 1)^(dim P - i)` on a placing triangulation.
pub fn verify_fiber_identity(base: &LatticePolytope, order: PlacementOrder) -> Result<FiberReport> {
    let t = placing_triangulation(base, order)?;
    if !t.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    let a = t.census().a;
    let m = base.dim();
    let mut s = UnivariateInt::zero();
    for (i, &ai) in a.iter().enumerate() {
        s = &s + &UnivariateInt::t_minus_one_pow(m - i).scale(ai as i64);
    }
    let ehrhart = base.s_polynomial();
    let equal = s == ehrhart;
    Ok(FiberReport { a, s_from_cells: s, s_from_ehrhart: ehrhart, equal })
}

//! Finite monomial subgroups of `SL(d, C)`: closure, conjugacy classes,
//! weights and heights, and the correspondence between abelian diagonal
//! groups and lattice simplices.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{format_rational, parse_rational, Rational, UnivariateInt};
use crate::lattice::{self, AffineLattice};
use crate::polytope::LatticePolytope;

pub const DEFAULT_CAP: usize = 1_000_000;

fn frac(r: &Rational) -> Rational {
    r - r.floor()
}

/// A monomial matrix sending `e_i` to `exp(2 pi i phases[i]) e_{perm[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    perm: Vec<usize>,
    phases: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct ElementFile {
    perm: Vec<usize>,
    phases: Vec<String>,
}

impl Serialize for GroupElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementFile {
            perm: self.perm.clone(),
            phases: self.phases.iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let f = ElementFile::deserialize(d)?;
        let phases = f
            .phases
            .iter()
            .map(|p| parse_rational(p))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        GroupElement::new(f.perm, phases).map_err(serde::de::Error::custom)
    }
}

/// Eigenvalue angles of a group element with its weight and height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenData {
    pub angles: Vec<Rational>,
    pub wt: Rational,
    pub ht: usize,
}

impl GroupElement {
    /// Phases are reduced mod 1; `perm` must be a permutation of `0..d`.
    pub fn new(perm: Vec<usize>, phases: Vec<Rational>) -> Result<Self> {
        if perm.len() != phases.len() {
            return Err(Error::DegreeMismatch(perm.len(), phases.len()));
        }
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::InvalidInput(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        let phases = phases.iter().map(frac).collect();
        Ok(Self { perm, phases })
    }

    pub fn identity(d: usize) -> Self {
        Self { perm: (0..d).collect(), phases: vec![Rational::zero(); d] }
    }

    pub fn diagonal(phases: Vec<Rational>) -> Self {
        let d = phases.len();
        Self::new((0..d).collect(), phases).expect("identity permutation")
    }

    pub fn permutation(perm: Vec<usize>) -> Result<Self> {
        let d = perm.len();
        Self::new(perm, vec![Rational::zero(); d])
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn phases(&self) -> &[Rational] {
        &self.phases
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.phases.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                c.push(i);
                i = self.perm[i];
            }
            out.push(c);
        }
        out
    }

    /// Whether the matrix has determinant 1.
    pub fn is_special_linear(&self) -> bool {
        let odd = (self.degree() - self.cycles().len()) % 2 == 1;
        let s = frac(&self.phases.iter().sum::<Rational>());
        let want = if odd {
            Rational::new(BigInt::one(), BigInt::from(2))
        } else {
            Rational::zero()
        };
        s == want
    }

    /// The product `self * other` of matrices.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        let phases = (0..self.degree())
            .map(|i| frac(&(&other.phases[i] + &self.phases[other.perm[i]])))
            .collect();
        Ok(Self { perm, phases })
    }

    pub fn inverse(&self) -> Self {
        let d = self.degree();
        let mut perm = vec![0; d];
        let mut phases = vec![Rational::zero(); d];
        for i in 0..d {
            perm[self.perm[i]] = i;
            phases[self.perm[i]] = frac(&-&self.phases[i]);
        }
        Self { perm, phases }
    }

    /// Angles in `[0, 1)` listed cycle by cycle.
    pub fn eigen_angles(&self) -> EigenData {
        let mut angles = Vec::with_capacity(self.degree());
        for c in self.cycles() {
            let s: Rational = c.iter().map(|&i| &self.phases[i]).sum();
            let len = BigInt::from(c.len());
            for j in 0..c.len() {
                angles.push(frac(&((&s + Rational::from_integer(BigInt::from(j))) / &len)));
            }
        }
        let wt = angles.iter().sum();
        let ht = angles.iter().filter(|a| !a.is_zero()).count();
        EigenData { angles, wt, ht }
    }
}

/// Elements stored as `[perm..., phase numerators over a common denominator...]`.
type Packed = Box<[u64]>;

struct Packer {
    d: usize,
    n: u64,
}

impl Packer {
    fn pack(&self, g: &GroupElement) -> Packed {
        let mut out: Vec<u64> = g.perm.iter().map(|&p| p as u64).collect();
        for ph in &g.phases {
            let scaled = ph * Rational::from_integer(BigInt::from(self.n));
            out.push(scaled.to_integer().to_u64().expect("phase fits the common denominator"));
        }
        out.into_boxed_slice()
    }

    fn unpack(&self, p: &[u64]) -> GroupElement {
        let perm = p[..self.d].iter().map(|&x| x as usize).collect();
        let phases = p[self.d..]
            .iter()
            .map(|&x| Rational::new(BigInt::from(x), BigInt::from(self.n)))
            .collect();
        GroupElement { perm, phases }
    }

    fn compose(&self, a: &[u64], b: &[u64]) -> Packed {
        let d = self.d;
        let mut out = vec![0u64; 2 * d];
        for i in 0..d {
            let bi = b[i] as usize;
            out[i] = a[bi];
            out[d + i] = (b[d + i] + a[d + bi]) % self.n;
        }
        out.into_boxed_slice()
    }

    fn inverse(&self, a: &[u64]) -> Packed {
        let d = self.d;
        let mut out = vec![0u64; 2 * d];
        for i in 0..d {
            let p = a[i] as usize;
            out[p] = i as u64;
            out[d + p] = (self.n - a[d + i]) % self.n;
        }
        out.into_boxed_slice()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub representative: GroupElement,
    /// Indices into [`FiniteGroup::elements`].
    pub members: Vec<usize>,
}

/// Weight and height of one conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassWeight {
    pub size: usize,
    pub wt: Rational,
    pub ht: usize,
}

impl Serialize for ClassWeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ClassWeight", 3)?;
        st.serialize_field("size", &self.size)?;
        st.serialize_field("wt", &format_rational(&self.wt))?;
        st.serialize_field("ht", &self.ht)?;
        st.end()
    }
}

/// A finite group given by its full element list and conjugacy classes.
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<GroupElement>,
    packer: Packer,
    elements: Vec<Packed>,
    classes: Vec<ConjugacyClass>,
}

impl FiniteGroup {
    /// Closure of `generators` under products, up to `cap` elements.
    pub fn generate(degree: usize, generators: &[GroupElement], cap: usize) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
            if !g.is_special_linear() {
                return Err(Error::NotSpecialLinear(i));
            }
        }
        let mut n = BigInt::one();
        for g in generators {
            for ph in &g.phases {
                n = n.lcm(ph.denom());
            }
        }
        let n = n
            .to_u64()
            .filter(|&n| n < 1 << 32)
            .ok_or_else(|| Error::InvalidInput("phase denominators too large".into()))?;
        let packer = Packer { d: degree, n };
        let gens: Vec<Packed> = generators.iter().map(|g| packer.pack(g)).collect();

        let identity = packer.pack(&GroupElement::identity(degree));
        let mut index: HashMap<Packed, usize> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let y = packer.compose(&elements[i], g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }

        let gen_inv: Vec<Packed> = gens.iter().map(|g| packer.inverse(g)).collect();
        let mut class_of = vec![usize::MAX; elements.len()];
        let mut raw_classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..elements.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = raw_classes.len();
            class_of[start] = c;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let x = &elements[members[k]];
                for (g, gi) in gens.iter().zip(&gen_inv) {
                    let y = packer.compose(&packer.compose(g, x), gi);
                    let j = index[&y];
                    if class_of[j] == usize::MAX {
                        class_of[j] = c;
                        members.push(j);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            raw_classes.push(members);
        }
        let mut classes: Vec<ConjugacyClass> = raw_classes
            .into_iter()
            .map(|members| {
                let representative = members
                    .iter()
                    .map(|&i| packer.unpack(&elements[i]))
                    .min()
                    .expect("classes are nonempty");
                ConjugacyClass { representative, members }
            })
            .collect();
        classes.sort_by(|a, b| a.representative.cmp(&b.representative));
        Ok(Self { degree, generators: generators.to_vec(), packer, elements, classes })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn element(&self, i: usize) -> GroupElement {
        self.packer.unpack(&self.elements[i])
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.elements.iter().map(|p| self.packer.unpack(p))
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn is_abelian_diagonal(&self) -> bool {
        self.generators.iter().all(GroupElement::is_diagonal)
    }

    pub fn weight_profile(&self) -> Vec<ClassWeight> {
        self.classes
            .iter()
            .map(|c| {
                let e = c.representative.eigen_angles();
                ClassWeight { size: c.members.len(), wt: e.wt, ht: e.ht }
            })
            .collect()
    }

    /// `S(G; t)` and `S~(G; t)`, graded by class weight.
    pub fn s_polynomials(&self) -> Result<(UnivariateInt, UnivariateInt)> {
        let mut s = vec![0i64; self.degree + 1];
        let mut st = vec![0i64; self.degree + 1];
        for (i, w) in self.weight_profile().into_iter().enumerate() {
            if !w.wt.is_integer() {
                return Err(Error::NonIntegralWeight { class: i, weight: format_rational(&w.wt) });
            }
            let k = w.wt.to_integer().to_usize().expect("weight is at most the degree");
            s[k] += 1;
            if w.ht == self.degree {
                st[k] += 1;
            }
        }
        Ok((UnivariateInt::new(s), UnivariateInt::new(st)))
    }

    /// The simplex of `e_1, ..., e_d` in the lattice `Z^d + sum Z phases(g)`,
    /// written in a Hermite basis of that lattice.
    pub fn abelian_simplex_bridge(&self) -> Result<LatticePolytope> {
        if !self.is_abelian_diagonal() {
            return Err(Error::NotAbelianDiagonal);
        }
        let d = self.degree;
        let n = i64::try_from(self.packer.n).expect("denominator");
        let mut rows: Vec<Vec<i64>> = (0..d)
            .map(|i| (0..d).map(|j| if i == j { n } else { 0 }).collect())
            .collect();
        for g in &self.generators {
            let p = self.packer.pack(g);
            rows.push(p[d..].iter().map(|&x| x as i64).collect());
        }
        let basis = lattice::hnf(&rows);
        let l = AffineLattice { origin: vec![0; d], basis };
        let vertices = (0..d)
            .map(|i| l.coords(&rows[i]).expect("unit vectors lie in the lattice"))
            .collect();
        LatticePolytope::new(d, vertices)
    }

    /// The diagonal group of box-point barycentric vectors of a simplex.
    pub fn from_simplex(simplex: &LatticePolytope) -> Result<Self> {
        let boxes = simplex.box_points()?;
        let gens: Vec<GroupElement> = boxes
            .points
            .into_iter()
            .filter(|b| !b.support.is_empty())
            .map(|b| GroupElement::diagonal(b.barycentric))
            .collect();
        Self::generate(simplex.num_vertices(), &gens, DEFAULT_CAP)
    }
}

/// Betti numbers `(h0, h2, h4)` of a crepant resolution of `C^3 / (Z/n)` for
/// the cyclic group with weights `(l1, l2, l3) / n`, `n = l1 + l2 + l3`.
pub fn cyclic_sl3_betti(l1: u64, l2: u64, l3: u64) -> Result<(u64, u64, u64)> {
    let n = l1 + l2 + l3;
    if l1 == 0 || l2 == 0 || l3 == 0 || l1.gcd(&l2).gcd(&l3) != 1 {
        return Err(Error::PreconditionViolated(format!(
            "weights ({l1}, {l2}, {l3}) must be positive and coprime"
        )));
    }
    let g: u64 = [l1, l2, l3].iter().map(|l| l.gcd(&n)).sum();
    Ok((1, (n + g) / 2 - 2, (n - g) / 2 + 1))
}

/// The cyclic group generated by `diag(l1, l2, l3) / (l1 + l2 + l3)`.
pub fn cyclic_sl3_group(l1: u64, l2: u64, l3: u64) -> Result<FiniteGroup> {
    let n = BigInt::from(l1 + l2 + l3);
    let g = GroupElement::diagonal(
        [l1, l2, l3]
            .iter()
            .map(|&l| Rational::new(BigInt::from(l), n.clone()))
            .collect(),
    );
    FiniteGroup::generate(3, &[g], DEFAULT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn composition_and_inverse() {
        let g = GroupElement::diagonal(vec![q(1, 3); 3]);
        let gg = g.compose(&g).unwrap();
        assert_eq!(gg.phases(), &[q(2, 3), q(2, 3), q(2, 3)]);
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
        let s = GroupElement::permutation(vec![1, 0, 3, 2, 4]).unwrap();
        assert!(s.compose(&s).unwrap().is_identity());
        let h = GroupElement::new(vec![2, 0, 1], vec![q(1, 5), q(3, 5), q(1, 5)]).unwrap();
        assert!(h.inverse().compose(&h).unwrap().is_identity());
        assert!(matches!(
            g.compose(&s),
            Err(Error::DegreeMismatch(3, 5))
        ));
    }

    #[test]
    fn eigen_angles_of_cycles() {
        let c3 = GroupElement::permutation(vec![1, 2, 0, 3, 4]).unwrap();
        let e = c3.eigen_angles();
        assert_eq!(e.angles, vec![q(0, 1), q(1, 3), q(2, 3), q(0, 1), q(0, 1)]);
        assert_eq!((e.wt, e.ht), (q(1, 1), 2));
        let c5 = GroupElement::permutation(vec![1, 2, 3, 4, 0]).unwrap();
        let e = c5.eigen_angles();
        assert_eq!((e.wt, e.ht), (q(2, 1), 4));
        let g = GroupElement::diagonal(vec![q(1, 3); 3]).eigen_angles();
        assert_eq!((g.wt, g.ht), (q(1, 1), 3));
    }

    #[test]
    fn a5_classes() {
        let gens = [
            GroupElement::permutation(vec![1, 2, 0, 3, 4]).unwrap(),
            GroupElement::permutation(vec![1, 2, 3, 4, 0]).unwrap(),
        ];
        let g = FiniteGroup::generate(5, &gens, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(g.classes().len(), 5);
        let (s, st) = g.s_polynomials().unwrap();
        assert_eq!(s.coeffs(), &[1, 2, 2]);
        assert!(st.is_zero());
    }

    #[test]
    fn cap_and_determinant_errors() {
        let g = GroupElement::diagonal(vec![q(1, 7), q(6, 7)]);
        assert!(matches!(FiniteGroup::generate(2, &[g], 5), Err(Error::CapExceeded(5))));
        let bad = GroupElement::diagonal(vec![q(1, 3), q(1, 3)]);
        assert!(matches!(FiniteGroup::generate(2, &[bad], 10), Err(Error::NotSpecialLinear(0))));
        let swap = GroupElement::permutation(vec![1, 0]).unwrap();
        assert!(!swap.is_special_linear());
    }

    #[test]
    fn cyclic_closed_form() {
        assert_eq!(cyclic_sl3_betti(1, 1, 1).unwrap(), (1, 1, 1));
        assert_eq!(cyclic_sl3_betti(1, 1, 3).unwrap(), (1, 2, 2));
        assert_eq!(cyclic_sl3_betti(1, 2, 3).unwrap(), (1, 4, 1));
        assert!(cyclic_sl3_betti(2, 2, 2).is_err());
        let (s, _) = cyclic_sl3_group(1, 1, 3).unwrap().s_polynomials().unwrap();
        assert_eq!(s.coeffs(), &[1, 2, 2]);
    }

    #[test]
    fn bridge_examples() {
        let half = GroupElement::diagonal(vec![q(1, 2), q(1, 2)]);
        let g = FiniteGroup::generate(2, &[half], DEFAULT_CAP).unwrap();
        let simplex = g.abelian_simplex_bridge().unwrap();
        assert_eq!(simplex.vertices(), &[vec![2, -1], vec![0, 1]]);
        assert_eq!(simplex.s_polynomial().coeffs(), &[1, 1]);

        let third = GroupElement::diagonal(vec![q(1, 3); 3]);
        let g = FiniteGroup::generate(3, &[third], DEFAULT_CAP).unwrap();
        let simplex = g.abelian_simplex_bridge().unwrap();
        assert_eq!(simplex.s_polynomial().coeffs(), &[1, 1, 1]);
        let back = FiniteGroup::from_simplex(&simplex).unwrap();
        assert_eq!(back.order(), 3);
        assert_eq!(back.s_polynomials().unwrap(), g.s_polynomials().unwrap());

        let trivial = FiniteGroup::generate(4, &[], DEFAULT_CAP).unwrap();
        assert_eq!(trivial.abelian_simplex_bridge().unwrap().normalized_volume(), 1);
    }
}

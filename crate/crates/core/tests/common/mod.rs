#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stringhodge::quotient::{FiniteGroup, GroupElement};
use stringhodge::{BivariateLaurent, Error, LatticePolytope, Rational, UnivariateInt};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn poly(v: &[&[i64]]) -> LatticePolytope {
    LatticePolytope::new(v[0].len(), v.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// One representative of each of the 16 classes of reflexive polygons.
pub fn reflexive_polygons() -> Vec<LatticePolytope> {
    let raw: [&[&[i64]]; 16] = [
        &[&[-2, -1], &[1, 0], &[1, 1]],
        &[&[-2, -1], &[0, -1], &[1, 1]],
        &[&[-2, -1], &[-1, -1], &[2, 1], &[-1, 0]],
        &[&[-2, -1], &[-1, -1], &[2, 1], &[1, 1]],
        &[&[-2, -1], &[-1, -1], &[1, 0], &[0, 1]],
        &[&[-2, -1], &[-1, -1], &[1, 0], &[1, 1], &[-1, 0]],
        &[&[-2, -1], &[0, -1], &[1, 2]],
        &[&[-2, -1], &[-1, -1], &[2, 1], &[0, 1]],
        &[&[-2, -1], &[-1, -1], &[1, 0], &[1, 1], &[0, 1]],
        &[&[-2, -1], &[-1, -1], &[1, 0], &[2, 1], &[1, 1], &[-1, 0]],
        &[&[-2, -1], &[-1, -1], &[1, 0], &[1, 2]],
        &[&[-2, -1], &[-1, -1], &[1, 0], &[2, 1], &[0, 1]],
        &[&[-2, -1], &[2, -1], &[0, 1]],
        &[&[-2, -1], &[0, -1], &[2, 1], &[0, 1]],
        &[&[-2, -1], &[0, -1], &[1, 0], &[1, 2]],
        &[&[-2, -1], &[1, -1], &[1, 2]],
    ];
    raw.iter().map(|v| poly(v)).collect()
}

pub fn reflexive_solids() -> Vec<LatticePolytope> {
    let simplex = LatticePolytope::standard_reflexive_simplex(3);
    let octahedron = poly(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]]);
    let p2_p1 = poly(&[&[1, 0, 0], &[0, 1, 0], &[-1, -1, 0], &[0, 0, 1], &[0, 0, -1]]);
    let w1113 = LatticePolytope::fermat_simplex(&[1, 1, 1, 3]).unwrap();
    let w1122 = LatticePolytope::fermat_simplex(&[1, 1, 2, 2]).unwrap();
    let mut out = Vec::new();
    for p in [simplex, octahedron, p2_p1, w1113, w1122] {
        out.push(p.polar_dual().unwrap());
        out.push(p);
    }
    out
}

/// Reflexive simplices from Fermat weights, each followed by its dual.
pub fn mirror_simplices(max_d: usize) -> Vec<(String, LatticePolytope)> {
    let mut weights: Vec<Vec<i64>> = (2..=max_d + 1).map(|n| vec![1; n]).collect();
    weights.push(vec![1, 1, 1, 1, 2]);
    weights.push(vec![1, 1, 2, 2, 2]);
    let mut out = Vec::new();
    for w in weights {
        let p = LatticePolytope::fermat_simplex(&w).unwrap();
        out.push((format!("P{w:?}*"), p.polar_dual().unwrap()));
        out.push((format!("P{w:?}"), p));
    }
    out
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn diag(nums: &[i64], den: i64) -> GroupElement {
    GroupElement::diagonal(nums.iter().map(|&n| q(n.rem_euclid(den), den)).collect())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Sorted coprime positive triples with sum at most `max_n`.
pub fn cyclic_sl3_triples(max_n: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for a in 1..=n / 3 {
            for b in a..=(n - a) / 2 {
                let c = n - a - b;
                if gcd(gcd(a, b), c) == 1 {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// `(S, S~)` of the cyclic group `diag(l) / n` by summing ages over its elements.
pub fn cyclic_age_census(l: &[u64]) -> (Vec<i64>, Vec<i64>) {
    let n: u64 = l.iter().sum::<u64>();
    let mut s = vec![0i64; l.len() + 1];
    let mut st = vec![0i64; l.len() + 1];
    for k in 0..n {
        let residues: Vec<u64> = l.iter().map(|&x| k * x % n).collect();
        let total: u64 = residues.iter().sum();
        assert_eq!(total % n, 0);
        let age = (total / n) as usize;
        s[age] += 1;
        if residues.iter().all(|&r| r != 0) {
            st[age] += 1;
        }
    }
    (s, st)
}

/// Same census for any diagonal group, reading phases directly.
pub fn diagonal_age_census(g: &FiniteGroup) -> (UnivariateInt, UnivariateInt) {
    let d = g.degree();
    let mut s = vec![0i64; d + 1];
    let mut st = vec![0i64; d + 1];
    for e in g.elements() {
        let total: Rational = e.phases().iter().sum();
        assert!(total.is_integer());
        let age: usize = total.to_integer().try_into().unwrap();
        s[age] += 1;
        if e.phases().iter().all(|p| !p.is_zero()) {
            st[age] += 1;
        }
    }
    (UnivariateInt::new(s), UnivariateInt::new(st))
}

/// Abelian diagonal subgroups of SL(d) with order at most `max_order`.
pub fn abelian_diagonal_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
    let mut gens: Vec<(String, usize, Vec<GroupElement>)> = Vec::new();
    for n in 2..=max_order as i64 {
        gens.push((format!("A{}", n - 1), 2, vec![diag(&[1, -1], n)]));
        gens.push((format!("Z{n}(1,1,-2)"), 3, vec![diag(&[1, 1, -2], n)]));
    }
    for (a, b, c) in cyclic_sl3_triples(24) {
        let n = (a + b + c) as i64;
        gens.push((format!("Z{n}({a},{b},{c})"), 3, vec![diag(&[a as i64, b as i64, c as i64], n)]));
    }
    for n in 2..=14 {
        gens.push((format!("Z{n}xZ{n}"), 3, vec![diag(&[1, -1, 0], n), diag(&[0, 1, -1], n)]));
    }
    gens.push(("Z2xZ4".into(), 3, vec![diag(&[1, 1, 0], 2), diag(&[1, 0, 3], 4)]));
    for (l, n) in [(&[1, 1, 1, 1][..], 4), (&[1, 1, 1, 3], 6), (&[1, 1, 2, 2], 6), (&[1, 3, 5, 7], 8), (&[1, 2, 3, 4], 10)] {
        gens.push((format!("Z{n}{l:?}"), 4, vec![diag(l, n)]));
    }
    gens.push(("Z2xZ2(4)".into(), 4, vec![diag(&[1, 1, 0, 0], 2), diag(&[0, 1, 1, 0], 2)]));
    gens.push(("Z5^3(5)".into(), 5, vec![diag(&[1, -1, 0, 0, 0], 5), diag(&[0, 1, -1, 0, 0], 5), diag(&[0, 0, 1, -1, 0], 5)]));
    gens.into_iter()
        .filter_map(|(name, d, g)| {
            let g = FiniteGroup::generate(d, &g, max_order).ok()?;
            Some((name, g))
        })
        .collect()
}

/// Abelian diagonal subgroups of SL(3) with order at most `max_order`.
pub fn abelian_sl3_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
    let mut out = Vec::new();
    for (a, b, c) in cyclic_sl3_triples(max_order as u64) {
        let n = (a + b + c) as i64;
        let g = FiniteGroup::generate(3, &[diag(&[a as i64, b as i64, c as i64], n)], max_order).unwrap();
        out.push((format!("Z{n}({a},{b},{c})"), g));
    }
    for n in 2..=5i64 {
        if let Ok(g) = FiniteGroup::generate(3, &[diag(&[1, -1, 0], n), diag(&[0, 1, -1], n)], max_order) {
            out.push((format!("Z{n}xZ{n}"), g));
        }
    }
    for (name, g) in [
        ("Z2xZ4", vec![diag(&[1, 1, 0], 2), diag(&[1, 0, 3], 4)]),
        ("Z2xZ6", vec![diag(&[1, 1, 0], 2), diag(&[1, 2, 3], 6)]),
        ("Z3xZ6", vec![diag(&[1, 2, 0], 3), diag(&[1, 1, 4], 6)]),
    ] {
        if let Ok(g) = FiniteGroup::generate(3, &g, max_order) {
            out.push((name.into(), g));
        }
    }
    out
}

/// Random monomial subgroups of SL(d), `d` in 2..=4, of order at most `cap`.
pub fn random_monomial_groups(count: usize, seed: u64, cap: usize) -> Vec<FiniteGroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let d = rng.gen_range(2..=4usize);
        let k = rng.gen_range(1..=2usize);
        let gens: Vec<GroupElement> = (0..k)
            .map(|_| {
                let mut perm: Vec<usize> = (0..d).collect();
                perm.shuffle(&mut rng);
                let odd = parity(&perm);
                let den = [2i64, 3, 4, 6][rng.gen_range(0..4)];
                let mut phases: Vec<Rational> = (0..d - 1).map(|_| q(rng.gen_range(0..den), den)).collect();
                let target = if odd { q(1, 2) } else { q(0, 1) };
                let sum: Rational = phases.iter().sum();
                let last = target - sum;
                phases.push(&last - last.floor());
                GroupElement::new(perm, phases).unwrap()
            })
            .collect();
        match FiniteGroup::generate(d, &gens, cap) {
            Ok(g) => out.push(g),
            Err(Error::CapExceeded(_)) => continue,
            Err(e) => panic!("unexpected error {e}"),
        }
    }
    out
}

fn parity(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut odd = false;
    for i in 0..perm.len() {
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

pub fn binom(n: i64, k: i64) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// `(h^{p,p}, e)` of the mirror quintic family member in dimension `d - 1`.
pub fn dwork_oracle(d: i64) -> (Vec<i128>, i128) {
    let h = (0..d)
        .map(|p| {
            let mut s: i128 = (0..=p).map(|i| (-1i128).pow(i as u32) * binom(d + 1, i) * binom((p + 1 - i) * d + p, d)).sum();
            if 2 * p == d - 1 {
                s += 1;
            }
            s
        })
        .collect();
    let printed = ((-1i128).pow((d + 2) as u32) * (d as i128).pow((d + 1) as u32) + 1) / (d as i128 + 1) - d as i128 - 1;
    (h, (-1i128).pow(d as u32) * printed)
}

/// `(uv)^n E(1/u, 1/v) = E` and `(-1)^(p+q) e_{p,q} >= 0`.
pub fn check_duality_and_signs(e: &BivariateLaurent, n: i32) -> Result<(), String> {
    for (p, q, c) in e.terms() {
        if e.coeff(n - p, n - q) != c {
            return Err(format!("coefficient of u^{p} v^{q} in {e} breaks duality"));
        }
        if (p + q) % 2 == 0 && c < 0 || (p + q) % 2 != 0 && c > 0 {
            return Err(format!("coefficient of u^{p} v^{q} in {e} has the wrong sign"));
        }
    }
    Ok(())
}

/// `E_f = (-u)^(d-1) E_g(1/u, v)` term by term.
pub fn check_mirror(f: &BivariateLaurent, g: &BivariateLaurent, d: i32) -> Result<(), String> {
    let sign = if (d - 1) % 2 == 0 { 1 } else { -1 };
    for (p, q, c) in g.terms() {
        if f.coeff(d - 1 - p, q) != sign * c {
            return Err(format!("{f} is not the mirror of {g}"));
        }
    }
    if f.len() != g.len() {
        return Err(format!("{f} and {g} have different supports"));
    }
    Ok(())
}

/// `S(P) = (t-1)^d + sum over proper faces S(theta) (t-1)^(dim theta*)`.
pub fn reflexive_s_identity(p: &LatticePolytope) -> Result<(), String> {
    let d = p.dim();
    let mut rhs = UnivariateInt::t_minus_one_pow(d);
    for faces in &p.face_lattice()[..d] {
        for f in faces {
            let s = p.sub_polytope(&f.vertex_indices).s_polynomial();
            rhs = &rhs + &(&s * &UnivariateInt::t_minus_one_pow(d - 1 - f.dim));
        }
    }
    let lhs = p.s_polynomial();
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("S = {lhs} but the face sum is {rhs}"))
    }
}

/// `coeffs[i] == coeffs[d - i]` with `d` the degree of the ambient group.
pub fn is_palindromic(s: &UnivariateInt, d: usize) -> bool {
    (0..=d).all(|i| s.coeff(i) == s.coeff(d - i))
}

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DworkInvariants {
    pub d: usize,
    /// `h^{p,p}_st` for `p = 0..d-1`.
    pub h_pp: Vec<i64>,
    pub h11: i64,
    /// The Euler number of the quotient of the Dwork pencil.
    pub euler: i64,
    /// `-e` of the smooth degree `d+1` hypersurface in `P^d`.
    pub minus_e_fermat: i64,
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn small(x: BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::OutOfRange("value exceeds 64 bits".into()))
}

/// Closed forms for the quotient of the Dwork pencil by its symmetry group,
/// the mirror of degree `d+1` hypersurfaces in `P^d`.
pub fn dwork_invariants(d: usize) -> Result<DworkInvariants> {
    if !(2..=20).contains(&d) {
        return Err(Error::OutOfRange(format!("d = {d} outside 2..=20")));
    }
    let di = d as i64;
    let h_pp = (0..di)
        .map(|p| {
            let mut s = BigInt::zero();
            for i in 0..=p {
                let term = binom(di + 1, i) * binom((p + 1 - i) * di + p, di);
                if i % 2 == 0 {
                    s += term;
                } else {
                    s -= term;
                }
            }
            if 2 * p == di - 1 {
                s += 1;
            }
            small(s)
        })
        .collect::<Result<Vec<_>>>()?;
    let sign = if d % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let power = num_traits::pow(BigInt::from(di), d + 1);
    let numerator = &sign * power + BigInt::one();
    let minus_e = numerator / BigInt::from(di + 1) - BigInt::from(di + 1);
    let euler = &sign * &minus_e;
    Ok(DworkInvariants { d, h11: h_pp[1], h_pp, euler: small(euler)?, minus_e_fermat: small(minus_e)? })
}

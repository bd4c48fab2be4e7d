use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{common_dim, Vector};
use crate::Result;

/// The Mersenne prime `2^61 - 1`.
pub const MODULUS: u64 = (1 << 61) - 1;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    pow(a, MODULUS - 2)
}

fn reduce(x: &BigInt) -> u64 {
    x.mod_floor(&BigInt::from(MODULUS)).to_u64().expect("residue fits in u64")
}

/// Rank of the primitive integer rows of `fs` over `GF(2^61 - 1)`.
///
/// A lower bound for the rank over `Q`: a nonzero minor mod p is nonzero
/// over the integers.
pub fn rank_mod_p(fs: &[Vector]) -> Result<usize> {
    let Some(dim) = common_dim(fs)? else {
        return Ok(0);
    };
    // Pivot rows, dense, normalised to 1 at their pivot.
    let mut pivots: Vec<Option<Vec<u64>>> = alloc::vec![None; dim];
    let mut rank = 0;
    for f in fs {
        let mut v = alloc::vec![0u64; dim];
        for (k, x) in f.to_int_row() {
            v[k] = reduce(&x);
        }
        for c in 0..dim {
            if v[c] == 0 {
                continue;
            }
            match &pivots[c] {
                Some(p) => {
                    let s = v[c];
                    for k in c..dim {
                        if p[k] != 0 {
                            v[k] = (v[k] + MODULUS - mul(s, p[k])) % MODULUS;
                        }
                    }
                }
                None => {
                    let s = inv(v[c]);
                    for x in v[c..].iter_mut() {
                        *x = mul(*x, s);
                    }
                    pivots[c] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Ok(rank)
}

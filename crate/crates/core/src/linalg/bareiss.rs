use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{common_dim, Vector};
use crate::Result;

/// Rank by dense Bareiss elimination. Intermediate entries are minors of the
/// input, so every division is exact. Slower than [`super::rank`] on sparse
/// inputs; kept as an independent kernel for differential checks.
pub fn bareiss_rank(fs: &[Vector]) -> Result<usize> {
    let Some(dim) = common_dim(fs)? else {
        return Ok(0);
    };
    let mut a: Vec<Vec<BigInt>> = fs
        .iter()
        .map(|f| {
            let mut row = alloc::vec![BigInt::zero(); dim];
            for (k, x) in f.to_int_row() {
                row[k] = x;
            }
            row
        })
        .collect();
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..dim {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            let lead = core::mem::take(&mut row[col]);
            for k in col + 1..dim {
                let v = &pivot_row[col] * &row[k] - &lead * &pivot_row[k];
                row[k] = v / &prev;
            }
        }
        prev = pivot_row[col].clone();
        rank += 1;
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let fs = [
            Vector::from_ints(&[2, 0, 1, 0]),
            Vector::from_ints(&[0, 0, 3, 3]),
            Vector::from_ints(&[4, 0, 5, 3]),
            Vector::from_ints(&[0, 1, 0, 0]),
        ];
        assert_eq!(bareiss_rank(&fs).unwrap(), 3);
        assert_eq!(bareiss_rank(&[]).unwrap(), 0);
        assert_eq!(bareiss_rank(&[Vector::zeros(3)]).unwrap(), 0);
    }
}

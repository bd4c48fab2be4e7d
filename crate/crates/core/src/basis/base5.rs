//! The 61-row upper-triangular basis of `H(K_5^T)` that seeds the induction.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::{admissible_pivot, certify, Certificate, PivotedHtp, UpperTriangularBasis};
use crate::graph::{Edge, Htp, Order};
use crate::{basis_size, Error, Result};

/// `(permutation, marked day)`. The marked city's outgoing edge is the
/// row's pivot; `0` means the mark is not recoverable from the source table
/// and the pivot is derived.
#[rustfmt::skip]
pub const BASE_ROWS_5: [([usize; 5], usize); 61] = [
    ([1, 5, 2, 3, 4], 1), ([3, 5, 2, 1, 4], 2), ([3, 5, 4, 2, 1], 1), ([2, 5, 4, 3, 1], 2),
    ([2, 5, 1, 3, 4], 1), ([4, 5, 1, 2, 3], 2), ([4, 5, 3, 1, 2], 1), ([3, 1, 5, 2, 4], 2),
    ([1, 3, 5, 2, 4], 3), ([1, 3, 5, 4, 2], 2), ([1, 2, 5, 4, 3], 3), ([3, 2, 5, 1, 4], 2),
    ([3, 4, 5, 1, 2], 3), ([2, 4, 5, 3, 1], 2), ([3, 4, 1, 5, 2], 3), ([1, 4, 3, 5, 2], 4),
    ([1, 2, 3, 5, 4], 3), ([1, 3, 2, 5, 4], 4), ([3, 4, 2, 5, 1], 3), ([3, 2, 4, 5, 1], 4),
    ([2, 1, 4, 5, 3], 3), ([2, 3, 4, 1, 5], 4), ([1, 3, 2, 4, 5], 1), ([3, 1, 2, 4, 5], 1),
    ([2, 3, 1, 4, 5], 0), ([3, 2, 1, 4, 5], 0), ([2, 4, 1, 3, 5], 0), ([4, 2, 1, 3, 5], 0),
    ([4, 3, 1, 2, 5], 1), ([3, 4, 1, 2, 5], 1), ([5, 2, 1, 4, 3], 4), ([5, 2, 1, 3, 4], 2),
    ([5, 4, 1, 3, 2], 3), ([5, 1, 4, 3, 2], 4), ([5, 1, 2, 3, 4], 4), ([5, 3, 1, 4, 2], 3),
    ([5, 1, 3, 4, 2], 4), ([5, 3, 1, 2, 4], 2), ([5, 1, 3, 2, 4], 4), ([5, 4, 1, 2, 3], 3),
    ([5, 1, 4, 2, 3], 4), ([5, 3, 4, 2, 1], 3), ([5, 4, 3, 2, 1], 4), ([5, 3, 4, 1, 2], 2),
    ([5, 4, 3, 1, 2], 4), ([1, 4, 3, 2, 5], 2), ([4, 1, 3, 2, 5], 4), ([1, 4, 2, 3, 5], 1),
    ([4, 1, 2, 3, 5], 1), ([2, 1, 4, 3, 5], 2), ([1, 2, 4, 3, 5], 4), ([1, 2, 3, 4, 5], 1),
    ([2, 1, 3, 4, 5], 0), ([5, 2, 3, 1, 4], 0), ([5, 3, 2, 1, 4], 0), ([5, 4, 2, 1, 3], 0),
    ([5, 2, 4, 1, 3], 4), ([5, 3, 2, 4, 1], 2), ([5, 2, 3, 4, 1], 4), ([5, 2, 4, 3, 1], 2),
    ([5, 4, 2, 3, 1], 4),
];

/// Edge leaving the city visited on day `t`.
pub fn marked_edge(h: &Htp, t: usize) -> Edge {
    let n = h.perm().len();
    if t == n {
        Edge::new(h.city_on(n), 0, n)
    } else {
        Edge::new(h.city_on(t), h.city_on(t + 1), t)
    }
}

/// The base case, self-checked and certified.
pub fn base_basis_5() -> Result<UpperTriangularBasis> {
    let order = Order::new(5)?;
    let htps: Vec<Htp> = BASE_ROWS_5
        .iter()
        .enumerate()
        .map(|(k, (p, _))| {
            Htp::new(p.to_vec()).map_err(|e| Error::EmbeddedData { reason: format!("row {}: {e}", k + 1) })
        })
        .collect::<Result<_>>()?;
    let mut seen = BTreeSet::new();
    for (k, h) in htps.iter().enumerate() {
        if !seen.insert(h.clone()) {
            return Err(Error::EmbeddedData { reason: format!("row {} ({h}) duplicates an earlier row", k + 1) });
        }
    }

    let mut rows = Vec::with_capacity(htps.len());
    let mut rederived = Vec::new();
    for (k, h) in htps.iter().enumerate() {
        let marked = BASE_ROWS_5[k].1;
        let pivot = match marked {
            0 => None,
            t => Some(marked_edge(h, t)),
        }
        .filter(|e| !htps[k + 1..].iter().any(|later| later.edges().any(|x| x == *e)));
        let pivot = match pivot {
            Some(e) => e,
            None => {
                rederived.push(k + 1);
                admissible_pivot(&htps, k).ok_or_else(|| Error::EmbeddedData {
                    reason: format!("row {} has no admissible pivot", k + 1),
                })?
            }
        };
        rows.push(PivotedHtp { htp: h.clone(), pivot });
    }

    let mut basis = UpperTriangularBasis {
        order,
        rows,
        certificate: Certificate::new(basis_size(5)),
    };
    basis.certificate.rederived_pivots = rederived;
    certify(&mut basis)?;
    if !basis.is_certified() {
        return Err(Error::EmbeddedData { reason: format!("certification failed: {:?}", basis.certificate) });
    }
    Ok(basis)
}

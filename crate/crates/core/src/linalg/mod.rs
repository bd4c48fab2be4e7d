//! Exact linear algebra over `Q` on finite coordinate spaces `Q^X`.
//!
//! Vectors are sparse and exact. Rank and span membership run on a
//! fraction-free integer echelon form; Gram-Schmidt (without normalisation,
//! there are no square roots in `Q`) and a dense Bareiss kernel are kept as
//! independent routes for cross-checking.

mod bareiss;
mod echelon;
mod gram;
mod modular;
mod subspace;
mod vector;

pub use bareiss::bareiss_rank;
pub use echelon::{Echelon, IntRow, PivotOrder};
pub use gram::gram_schmidt;
pub use modular::{rank_mod_p, MODULUS};
pub use subspace::{annihilator_basis, annihilator_basis_gram_schmidt, in_span, Subspace};
pub use vector::{Rational, Vector};
pub(crate) use vector::is_zero_one;

use crate::{Error, Result};

/// `sum_x u(x) v(x)`, exact.
pub fn inner_product(u: &Vector, v: &Vector) -> Result<Rational> {
    u.dot(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankOptions {
    pub pivot: PivotOrder,
    /// Try a rank computation mod a large prime first. Its value is only
    /// returned when it meets `min(rows, dim)`, where it is exact.
    pub modular_prepass: bool,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions { pivot: PivotOrder::Lowest, modular_prepass: false }
    }
}

/// Exact rank over `Q`. All vectors must share a dimension; zero vectors are
/// allowed and contribute nothing.
pub fn rank(fs: &[Vector]) -> Result<usize> {
    rank_with(fs, RankOptions::default())
}

pub fn rank_with(fs: &[Vector], opts: RankOptions) -> Result<usize> {
    let Some(dim) = common_dim(fs)? else {
        return Ok(0);
    };
    if opts.modular_prepass {
        let r = rank_mod_p(fs)?;
        if r == fs.len().min(dim) {
            return Ok(r);
        }
    }
    let mut ech = Echelon::new(dim, opts.pivot);
    for f in fs {
        ech.insert(f.to_int_row());
    }
    Ok(ech.rank())
}

pub(crate) fn common_dim(fs: &[Vector]) -> Result<Option<usize>> {
    let Some(first) = fs.first() else {
        return Ok(None);
    };
    let dim = first.dim();
    for f in fs {
        if f.dim() != dim {
            return Err(Error::DimensionMismatch { left: dim, right: f.dim() });
        }
    }
    Ok(Some(dim))
}

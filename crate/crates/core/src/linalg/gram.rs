use alloc::vec::Vec;

use num_traits::Zero;

use super::{Rational, Vector};
use crate::{Error, Result};

/// Orthogonalises `fs` without normalising:
/// `g_i = f_i - sum_{j<i} (<f_i, g_j> / <g_j, g_j>) g_j`.
///
/// Fails with the 1-based index of the first `f_i` that lies in the span of
/// its predecessors.
pub fn gram_schmidt(fs: &[Vector]) -> Result<Vec<Vector>> {
    let mut out: Vec<Vector> = Vec::with_capacity(fs.len());
    let mut norms: Vec<Rational> = Vec::with_capacity(fs.len());
    for (i, f) in fs.iter().enumerate() {
        let mut g = f.clone();
        for (h, norm) in out.iter().zip(&norms) {
            let c = f.dot(h)?;
            if !c.is_zero() {
                g = g.add_scaled(&-(c / norm), h)?;
            }
        }
        if g.is_zero() {
            return Err(Error::DependentInput { index: i + 1 });
        }
        norms.push(g.dot(&g)?);
        out.push(g);
    }
    Ok(out)
}

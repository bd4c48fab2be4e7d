use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{gram_schmidt, Echelon, PivotOrder, Rational, Vector};
use crate::{Error, Result};

/// A subspace of `Q^X` given by generators, with an echelon form spanning
/// the same space.
#[derive(Debug, Clone)]
pub struct Subspace {
    dim: usize,
    generators: Vec<Vector>,
    reduced: Echelon,
}

impl Subspace {
    pub fn new(dim: usize, generators: Vec<Vector>) -> Result<Self> {
        let mut reduced = Echelon::new(dim, PivotOrder::Lowest);
        for g in &generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: g.dim() });
            }
            reduced.insert(g.to_int_row());
        }
        Ok(Subspace { dim, generators, reduced })
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn echelon(&self) -> &Echelon {
        &self.reduced
    }

    pub fn rank(&self) -> usize {
        self.reduced.rank()
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: v.dim() });
        }
        Ok(self.reduced.contains(v.to_int_row()))
    }

    /// The generators that raise the rank when taken in order.
    pub fn independent_generators(&self) -> Vec<Vector> {
        let mut ech = Echelon::new(self.dim, PivotOrder::Lowest);
        self.generators.iter().filter(|g| ech.insert(g.to_int_row())).cloned().collect()
    }

    /// Mutual containment of generators.
    pub fn same_span(&self, other: &Subspace) -> Result<bool> {
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn in_span(v: &Vector, s: &Subspace) -> Result<bool> {
    s.contains(v)
}

/// Basis of `A(V) = { f : <f, g> = 0 for all g in V }`, read off the reduced
/// row echelon form of the generator matrix: one vector per free coordinate.
pub fn annihilator_basis(v: &Subspace, ambient_dim: usize) -> Result<Subspace> {
    if v.ambient_dim() != ambient_dim {
        return Err(Error::DimensionMismatch { left: ambient_dim, right: v.ambient_dim() });
    }
    let rref = v.echelon().rref();
    let mut is_pivot = alloc::vec![false; ambient_dim];
    for (p, _) in &rref {
        is_pivot[*p] = true;
    }
    let mut basis = Vec::with_capacity(ambient_dim - rref.len());
    for free in (0..ambient_dim).filter(|&k| !is_pivot[k]) {
        let mut entries = alloc::vec![(free, Rational::one())];
        for (p, row) in &rref {
            let x = row.get(free);
            if !x.is_zero() {
                entries.push((*p, -x));
            }
        }
        basis.push(Vector::from_entries(ambient_dim, entries)?);
    }
    Subspace::new(ambient_dim, basis)
}

/// The same space by the orthogonalisation route: extend an independent
/// generating set of `V` by unit vectors in coordinate order to a basis of
/// `Q^X`, orthogonalise, keep the tail.
pub fn annihilator_basis_gram_schmidt(v: &Subspace, ambient_dim: usize) -> Result<Subspace> {
    if v.ambient_dim() != ambient_dim {
        return Err(Error::DimensionMismatch { left: ambient_dim, right: v.ambient_dim() });
    }
    let mut basis = v.independent_generators();
    let k = basis.len();
    let mut ech = Echelon::new(ambient_dim, PivotOrder::Lowest);
    for b in &basis {
        ech.insert(b.to_int_row());
    }
    for x in 0..ambient_dim {
        if ech.rank() == ambient_dim {
            break;
        }
        let e = Vector::unit(ambient_dim, x);
        if ech.insert(e.to_int_row()) {
            basis.push(e);
        }
    }
    let gs = gram_schmidt(&basis)?;
    Subspace::new(ambient_dim, gs.into_iter().skip(k).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn annihilator_of_diagonal() {
        let v = Subspace::new(2, alloc::vec![Vector::from_ints(&[1, 1])]).unwrap();
        let a = annihilator_basis(&v, 2).unwrap();
        assert_eq!(a.generators(), [Vector::from_ints(&[-1, 1])]);
        let b = annihilator_basis_gram_schmidt(&v, 2).unwrap();
        assert_eq!(b.rank(), 1);
        assert!(a.same_span(&b).unwrap());
    }

    #[test]
    fn annihilator_of_full_space_is_empty() {
        let v = Subspace::new(3, (0..3).map(|k| Vector::unit(3, k)).collect()).unwrap();
        assert!(annihilator_basis(&v, 3).unwrap().generators().is_empty());
        assert!(annihilator_basis_gram_schmidt(&v, 3).unwrap().generators().is_empty());
    }

    #[test]
    fn span_membership() {
        let g1 = Vector::from_ints(&[1, 0, 2]);
        let g2 = Vector::from_ints(&[0, 1, 1]);
        let s = Subspace::new(3, alloc::vec![g1.clone(), g2.clone()]).unwrap();
        assert!(in_span(&g1, &s).unwrap());
        assert!(in_span(&g1.add(&g2).unwrap(), &s).unwrap());
        assert!(in_span(&Vector::zeros(3), &s).unwrap());
        assert!(!in_span(&Vector::from_ints(&[2, 1, -1]), &s).unwrap());
        assert!(in_span(&Vector::zeros(2), &s).is_err());
    }
}

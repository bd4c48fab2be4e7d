use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntRow;
use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

/// A sparse vector in `Q^X`, `X = {0, .., dim - 1}`. Only nonzero entries
/// are stored, sorted by coordinate, so equality is exact entrywise equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    dim: usize,
    entries: Vec<(usize, Rational)>,
}

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Vector { dim, entries: Vec::new() }
    }

    pub fn unit(dim: usize, k: usize) -> Self {
        assert!(k < dim, "unit vector coordinate {k} out of range {dim}");
        Vector { dim, entries: alloc::vec![(k, Rational::one())] }
    }

    /// Sums duplicate coordinates and drops zeros.
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut raw: Vec<(usize, Rational)> = entries.into_iter().collect();
        if let Some(&(k, _)) = raw.iter().find(|(k, _)| *k >= dim) {
            return Err(Error::EdgeIndexOutOfRange { index: k, count: dim });
        }
        raw.sort_by_key(|(k, _)| *k);
        let mut entries: Vec<(usize, Rational)> = Vec::with_capacity(raw.len());
        for (k, x) in raw {
            match entries.last_mut() {
                Some((last, acc)) if *last == k => *acc += x,
                _ => entries.push((k, x)),
            }
        }
        entries.retain(|(_, x)| !x.is_zero());
        Ok(Vector { dim, entries })
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k, x.clone()))
            .collect();
        Vector { dim: values.len(), entries }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, x)| **x != 0)
            .map(|(k, x)| (k, Rational::from_integer(BigInt::from(*x))))
            .collect();
        Vector { dim: values.len(), entries }
    }

    /// Counts how often each coordinate occurs in `indices`.
    pub fn indicator<I: IntoIterator<Item = usize>>(dim: usize, indices: I) -> Result<Self> {
        Self::from_entries(dim, indices.into_iter().map(|k| (k, Rational::one())))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, k: usize) -> Rational {
        match self.entries.binary_search_by_key(&k, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Nonzero entries in increasing coordinate order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(k, x)| (*k, x))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|(k, _)| *k)
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); self.dim];
        for (k, x) in &self.entries {
            out[*k] = x.clone();
        }
        out
    }

    pub fn dot(&self, other: &Vector) -> Result<Rational> {
        self.check_dim(other)?;
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        let mut acc = Rational::zero();
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            match i.cmp(j) {
                core::cmp::Ordering::Less => {
                    a.next();
                }
                core::cmp::Ordering::Greater => {
                    b.next();
                }
                core::cmp::Ordering::Equal => {
                    acc += x * y;
                    a.next();
                    b.next();
                }
            }
        }
        Ok(acc)
    }

    /// Sum of the entries at `indices` (with repetition): the inner product
    /// with the indicator vector of `indices`.
    pub fn sum_at<I: IntoIterator<Item = usize>>(&self, indices: I) -> Rational {
        indices.into_iter().map(|k| self.get(k)).fold(Rational::zero(), |a, x| a + x)
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &Vector) -> Result<Vector> {
        self.check_dim(other)?;
        if c.is_zero() {
            return Ok(self.clone());
        }
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            let next = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => a.next().map(|(k, x)| (*k, x.clone())),
                (None, Some(_)) => b.next().map(|(k, y)| (*k, c * y)),
                (Some((i, _)), Some((j, _))) if i < j => a.next().map(|(k, x)| (*k, x.clone())),
                (Some((i, _)), Some((j, _))) if i > j => b.next().map(|(k, y)| (*k, c * y)),
                _ => {
                    let (k, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    Some((*k, x + c * y))
                }
            };
            if let Some((k, x)) = next {
                if !x.is_zero() {
                    entries.push((k, x));
                }
            }
        }
        Ok(Vector { dim: self.dim, entries })
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.add_scaled(&Rational::one(), other)
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.add_scaled(&-Rational::one(), other)
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        if c.is_zero() {
            return Vector::zeros(self.dim);
        }
        let entries = self.entries.iter().map(|(k, x)| (*k, x * c)).collect();
        Vector { dim: self.dim, entries }
    }

    /// The primitive integer row proportional to `self` (denominators
    /// cleared, content divided out, first nonzero entry positive).
    pub fn to_int_row(&self) -> IntRow {
        let lcm = self.entries.iter().fold(BigInt::one(), |l, (_, x)| l.lcm(x.denom()));
        let row: IntRow = self
            .entries
            .iter()
            .map(|(k, x)| (*k, x.numer() * (&lcm / x.denom())))
            .collect();
        super::echelon::make_primitive(row, false)
    }

    pub fn from_int_row(dim: usize, row: &IntRow) -> Vector {
        let entries = row.iter().map(|(k, x)| (*k, Rational::from_integer(x.clone()))).collect();
        Vector { dim, entries }
    }

    fn check_dim(&self, other: &Vector) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vector[{}]{{", self.dim)?;
        for (n, (k, x)) in self.entries.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            if x.is_integer() {
                write!(f, "{k}: {}", x.numer())?;
            } else {
                write!(f, "{k}: {}/{}", x.numer(), x.denom())?;
            }
        }
        write!(f, "}}")
    }
}

/// Whether every entry is `0` or `1`.
pub(crate) fn is_zero_one(v: &Vector) -> bool {
    v.iter().all(|(_, x)| x.is_one() && !x.is_negative())
}

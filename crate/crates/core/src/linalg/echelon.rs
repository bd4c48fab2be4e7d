use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, Vector};

/// Sparse integer row: `(coordinate, value)` pairs, strictly increasing
/// coordinates, no zeros.
pub type IntRow = Vec<(usize, BigInt)>;

/// Which nonzero coordinate of a row becomes its pivot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PivotOrder {
    /// Lowest coordinate first (the default kernel).
    Lowest,
    /// Highest coordinate first.
    Highest,
}

/// Fraction-free row echelon form over `Z`, built incrementally.
///
/// Each stored row is primitive and its pivot is its extreme nonzero
/// coordinate, so elimination against a pivot row never reintroduces a
/// coordinate that was already cleared. Coefficients stay small on 0/1
/// inputs because every intermediate row is divided by its content.
#[derive(Debug, Clone)]
pub struct Echelon {
    dim: usize,
    order: PivotOrder,
    rows: Vec<IntRow>,
    pivot_of: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(dim: usize, order: PivotOrder) -> Self {
        Echelon { dim, order, rows: Vec::new(), pivot_of: alloc::vec![None; dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[IntRow] {
        &self.rows
    }

    pub fn pivot_order(&self) -> PivotOrder {
        self.order
    }

    fn pivot(&self, row: &IntRow) -> Option<usize> {
        match self.order {
            PivotOrder::Lowest => row.first().map(|(k, _)| *k),
            PivotOrder::Highest => row.last().map(|(k, _)| *k),
        }
    }

    /// Remainder of `row` after elimination against the stored rows; zero
    /// iff `row` lies in their span.
    pub fn reduce(&self, mut row: IntRow) -> IntRow {
        while let Some(c) = self.pivot(&row) {
            let Some(r) = self.pivot_of[c] else { break };
            row = eliminate(&row, &self.rows[r], c);
            row = make_primitive(row, self.order == PivotOrder::Highest);
        }
        row
    }

    /// Adds `row`; returns whether the rank grew.
    pub fn insert(&mut self, row: IntRow) -> bool {
        let row = self.reduce(row);
        match self.pivot(&row) {
            None => false,
            Some(c) => {
                self.pivot_of[c] = Some(self.rows.len());
                self.rows.push(row);
                true
            }
        }
    }

    pub fn contains(&self, row: IntRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Pivot coordinates in insertion order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().filter_map(|r| self.pivot(r)).collect()
    }

    /// Reduced row echelon form over `Q`: `(pivot, row)` sorted by pivot,
    /// each row 1 at its pivot and 0 at every other pivot.
    pub fn rref(&self) -> Vec<(usize, Vector)> {
        let mut rows: Vec<(usize, Vector)> = self
            .rows
            .iter()
            .map(|r| (self.pivot(r).unwrap(), Vector::from_int_row(self.dim, r)))
            .collect();
        rows.sort_by_key(|(p, _)| *p);
        for i in 0..rows.len() {
            let (p, ref v) = rows[i];
            let lead = v.get(p);
            let v = v.scale(&(Rational::one() / lead));
            for (j, (_, w)) in rows.iter_mut().enumerate() {
                let c = w.get(p);
                if j != i && !c.is_zero() {
                    *w = w.add_scaled(&-c, &v).expect("same dimension");
                }
            }
            rows[i].1 = v;
        }
        rows
    }
}

/// `a * x - b * y` with `a = y[c] / g`, `b = x[c] / g`: clears coordinate `c`.
fn eliminate(x: &IntRow, y: &IntRow, c: usize) -> IntRow {
    let xc = &x[x.binary_search_by_key(&c, |(k, _)| *k).unwrap()].1;
    let yc = &y[y.binary_search_by_key(&c, |(k, _)| *k).unwrap()].1;
    let g = xc.gcd(yc);
    let a = yc / &g;
    let b = xc / &g;
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (k, v) = if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            i += 1;
            (x[i - 1].0, &a * &x[i - 1].1)
        } else if i == x.len() || y[j].0 < x[i].0 {
            j += 1;
            (y[j - 1].0, -(&b * &y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, &a * &x[i - 1].1 - &b * &y[j - 1].1)
        };
        if !v.is_zero() {
            out.push((k, v));
        }
    }
    out
}

/// Divides out the content and fixes the sign of the leading (or, with
/// `last_positive`, trailing) entry.
pub(crate) fn make_primitive(mut row: IntRow, last_positive: bool) -> IntRow {
    let Some(g) = row.iter().try_fold(BigInt::zero(), |g, (_, x)| {
        let g = g.gcd(x);
        if g.is_one() {
            None
        } else {
            Some(g)
        }
    }) else {
        return fix_sign(row, last_positive);
    };
    if !g.is_zero() && !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
    fix_sign(row, last_positive)
}

fn fix_sign(mut row: IntRow, last_positive: bool) -> IntRow {
    let lead = if last_positive { row.last() } else { row.first() };
    if lead.is_some_and(|(_, x)| x.is_negative()) {
        for (_, x) in row.iter_mut() {
            *x = -core::mem::take(x);
        }
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> IntRow {
        Vector::from_ints(v).to_int_row()
    }

    #[test]
    fn rank_of_small_matrix() {
        for order in [PivotOrder::Lowest, PivotOrder::Highest] {
            let mut e = Echelon::new(3, order);
            assert!(e.insert(row(&[1, 2, 3])));
            assert!(e.insert(row(&[2, 4, 7])));
            assert!(!e.insert(row(&[3, 6, 10])));
            assert!(!e.insert(row(&[0, 0, 0])));
            assert_eq!(e.rank(), 2);
            assert!(e.contains(row(&[0, 0, 1])));
            assert!(!e.contains(row(&[0, 1, 0])));
        }
    }

    #[test]
    fn rref_is_reduced() {
        let mut e = Echelon::new(3, PivotOrder::Lowest);
        e.insert(row(&[2, 4, 6]));
        e.insert(row(&[1, 3, 4]));
        let r = e.rref();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0], (0, Vector::from_ints(&[1, 0, 1])));
        assert_eq!(r[1], (1, Vector::from_ints(&[0, 1, 1])));
    }
}

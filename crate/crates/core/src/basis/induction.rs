//! The pieces of the step from order `n - 1` to order `n`: lifting old rows
//! by appending city `n`, and the three families that start at city `n`.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Edge, Htp, Order};
use crate::{Error, Result};

/// `(q_1, .., q_{n-1}, n)`.
pub fn lift(q: &Htp) -> Htp {
    let mut perm = q.perm().to_vec();
    perm.push(perm.len() + 1);
    Htp::new(perm).expect("appending n keeps a permutation")
}

/// Image of an order-`(n-1)` edge under [`lift`]: the old destination edge
/// `(a, 0, n-1)` becomes `(a, n, n-1)`; every other edge is unchanged.
pub fn lift_edge(order: Order, e: Edge) -> Edge {
    let n = order.n();
    if e.to == 0 && e.day == n - 1 {
        Edge::new(e.from, n, n - 1)
    } else {
        e
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyLabel {
    F { i: usize, j: usize },
    G { i: usize },
    H { i: usize },
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyLabel::F { i, j } => write!(f, "F({i},{j})"),
            FamilyLabel::G { i } => write!(f, "G({i})"),
            FamilyLabel::H { i } => write!(f, "H({i})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRow {
    pub label: FamilyLabel,
    pub htp: Htp,
}

/// `x mod (n - 1) + 1`.
fn wrap(x: usize, n: usize) -> usize {
    x % (n - 1) + 1
}

/// City `n` on day 1, city `i` on day 2, the given cities on days `n - 1`
/// and `n`, remaining cities ascending in between.
fn fixed_ends(n: usize, i: usize, second_last: usize, last: usize, j: usize) -> Result<Htp> {
    let fixed = [n, i, second_last, last];
    if (0..4).any(|a| (a + 1..4).any(|b| fixed[a] == fixed[b])) {
        return Err(Error::FormulaCollision { n, i, j });
    }
    let mut rest = (1..=n).filter(|c| !fixed.contains(c));
    let mut perm = Vec::with_capacity(n);
    perm.extend([n, i]);
    perm.extend(rest.by_ref().take(n - 4));
    perm.extend([second_last, last]);
    Htp::new(perm).map_err(|_| Error::FormulaCollision { n, i, j })
}

/// For `i = 1..n-1`: `F(i,1..n-3)`, `G(i)`, `H(i)`, with `H(n-1)` dropped,
/// `(n-1)^2 - 1` rows in all. Days 1, 2, `n-1`, `n` are fixed:
///
/// * `F(i,j)`: `n, i, .., i mod (n-1) + 1, (i+j) mod (n-1) + 1`
/// * `G(i)`:   `n, i, .., (i+1) mod (n-1) + 1, i mod (n-1) + 1`
/// * `H(i)`:   `n, i, .., (i+1) mod (n-1) + 1, (i+2) mod (n-1) + 1`
pub fn induction_families(order: Order) -> Result<Vec<FamilyRow>> {
    let n = order.n();
    if n < 6 {
        return Err(Error::OrderOutOfRange { n, min: 6, max: None });
    }
    let mut out = Vec::with_capacity((n - 1) * (n - 1) - 1);
    for i in 1..n {
        for j in 1..=n - 3 {
            let htp = fixed_ends(n, i, wrap(i, n), wrap(i + j, n), j)?;
            out.push(FamilyRow { label: FamilyLabel::F { i, j }, htp });
        }
        let htp = fixed_ends(n, i, wrap(i + 1, n), wrap(i, n), 0)?;
        out.push(FamilyRow { label: FamilyLabel::G { i }, htp });
        if i < n - 1 {
            let htp = fixed_ends(n, i, wrap(i + 1, n), wrap(i + 2, n), 0)?;
            out.push(FamilyRow { label: FamilyLabel::H { i }, htp });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn o(n: usize) -> Order {
        Order::new(n).unwrap()
    }

    #[test]
    fn lift_examples() {
        let q = Htp::new(vec![1, 2, 3, 4, 5]).unwrap();
        assert_eq!(lift(&q).perm(), [1, 2, 3, 4, 5, 6]);
        let q = Htp::new(vec![3, 5, 2, 1, 4]).unwrap();
        assert_eq!(lift(&q).perm(), [3, 5, 2, 1, 4, 6]);
    }

    #[test]
    fn lift_maps_edges() {
        let q = Htp::new(vec![3, 5, 2, 1, 4]).unwrap();
        let p = lift(&q);
        let mapped: Vec<Edge> = q.edges().map(|e| lift_edge(o(6), e)).collect();
        let lifted: Vec<Edge> = p.edges().collect();
        assert_eq!(&lifted[..6], &mapped[..]);
        assert_eq!(lifted[6], Edge::new(6, 0, 6));
    }

    #[test]
    fn family_examples_at_six() {
        let fam = induction_families(o(6)).unwrap();
        assert_eq!(fam.len(), 24);
        let f11 = &fam[0];
        assert_eq!(f11.label, FamilyLabel::F { i: 1, j: 1 });
        assert_eq!((f11.htp.city_on(1), f11.htp.city_on(2)), (6, 1));
        assert_eq!((f11.htp.city_on(5), f11.htp.city_on(6)), (2, 3));
        let g1 = fam.iter().find(|r| r.label == FamilyLabel::G { i: 1 }).unwrap();
        assert_eq!((g1.htp.city_on(5), g1.htp.city_on(6)), (3, 2));
        assert!(!fam.iter().any(|r| r.label == FamilyLabel::H { i: 5 }));
        assert!(induction_families(o(5)).is_err());
    }

    #[test]
    fn fixed_cities_distinct_for_small_orders() {
        for n in 6..=12 {
            let fam = induction_families(o(n)).unwrap();
            assert_eq!(fam.len(), (n - 1) * (n - 1) - 1);
            let mut perms: Vec<&Htp> = fam.iter().map(|r| &r.htp).collect();
            perms.sort();
            perms.dedup();
            assert_eq!(perms.len(), fam.len(), "n={n}");
        }
    }
}

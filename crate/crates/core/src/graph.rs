//! The complete time graph `K_n^T`, its edges and their canonical index,
//! city sequences and their incidence vectors, and sub-graphs.
//!
//! Vertices `(i, t)` are never materialised; everything is edge-centric.
//! Edge order: source edges `(0, j, 0)` by `j`, then internal edges
//! `(i, j, t)` by `(t, i, j)`, then destination edges `(i, 0, n)` by `i`.

use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::linalg::{Rational, Vector};
use crate::{Error, Result};

/// Number of cities, not counting the depot city 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Order(usize);

impl Order {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OrderOutOfRange { n, min: 1, max: None });
        }
        Ok(Order(n))
    }

    /// `Order::new` plus a lower bound.
    pub fn at_least(n: usize, min: usize) -> Result<Self> {
        if n < min {
            return Err(Error::OrderOutOfRange { n, min, max: None });
        }
        Order::new(n)
    }

    pub fn n(self) -> usize {
        self.0
    }

    pub fn edge_count(self) -> usize {
        edge_count(self)
    }

    /// Order `n - 1`, if any.
    pub fn pred(self) -> Option<Order> {
        (self.0 > 1).then(|| Order(self.0 - 1))
    }

    pub fn edges(self) -> impl Iterator<Item = Edge> {
        (0..self.edge_count()).map(move |k| edge_from_index(self, k).expect("index in range"))
    }

    pub(crate) fn index(self, e: Edge) -> usize {
        debug_assert!(e.validate(self).is_ok());
        let n = self.0;
        if e.day == 0 {
            e.to - 1
        } else if e.to == 0 {
            n + (n - 1) * n * (n - 1) + (e.from - 1)
        } else {
            let j = if e.to > e.from { e.to - 2 } else { e.to - 1 };
            n + (e.day - 1) * n * (n - 1) + (e.from - 1) * (n - 1) + j
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `n(n-1)^2 + 2n`.
pub fn edge_count(order: Order) -> usize {
    let n = order.n();
    n * (n - 1) * (n - 1) + 2 * n
}

/// A day-stamped edge `(from, to, day)` from `(from, day)` to `(to, day + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub day: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Source,
    Internal,
    Destination,
}

impl Edge {
    pub const fn new(from: usize, to: usize, day: usize) -> Self {
        Edge { from, to, day }
    }

    pub fn validate(&self, order: Order) -> Result<EdgeKind> {
        let n = order.n();
        let city = |c: usize| (1..=n).contains(&c);
        let kind = match (self.from, self.to, self.day) {
            (0, j, 0) if city(j) => EdgeKind::Source,
            (i, 0, t) if t == n && city(i) => EdgeKind::Destination,
            (i, j, t) if city(i) && city(j) && i != j && (1..n).contains(&t) => EdgeKind::Internal,
            _ => return Err(Error::InvalidEdge { edge: *self, n }),
        };
        Ok(kind)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.from, self.to, self.day)
    }
}

pub fn edge_index(order: Order, e: Edge) -> Result<usize> {
    e.validate(order)?;
    Ok(order.index(e))
}

pub fn edge_from_index(order: Order, k: usize) -> Result<Edge> {
    let n = order.n();
    let count = edge_count(order);
    if k >= count {
        return Err(Error::EdgeIndexOutOfRange { index: k, count });
    }
    let per_day = n * (n - 1);
    let e = if k < n {
        Edge::new(0, k + 1, 0)
    } else if k < n + (n - 1) * per_day {
        let r = k - n;
        let (t, r) = (r / per_day + 1, r % per_day);
        let (i, j) = (r / (n - 1) + 1, r % (n - 1) + 1);
        let j = if j >= i { j + 1 } else { j };
        Edge::new(i, j, t)
    } else {
        Edge::new(k - n - (n - 1) * per_day + 1, 0, n)
    };
    Ok(e)
}

/// Edges of the time path `0, c_1, .., c_n, 0`.
fn path_edges(cities: &[usize]) -> impl Iterator<Item = Edge> + '_ {
    let n = cities.len();
    let first = cities.first().map(|&c| Edge::new(0, c, 0));
    let last = cities.last().map(|&c| Edge::new(c, 0, n));
    let inner = cities.windows(2).enumerate().map(|(t, w)| Edge::new(w[0], w[1], t + 1));
    first.into_iter().chain(inner).chain(last)
}

/// City `c_t` for days `t = 1..=n`, consecutive cities distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CitySequence {
    cities: Vec<usize>,
}

impl CitySequence {
    pub fn new(cities: Vec<usize>) -> Result<Self> {
        let n = cities.len();
        if n == 0 {
            return Err(Error::InvalidSequence { reason: "empty sequence".into() });
        }
        if let Some(&c) = cities.iter().find(|&&c| c == 0 || c > n) {
            return Err(Error::CityOutOfRange { city: c, n });
        }
        if let Some(t) = cities.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::InvalidSequence {
                reason: alloc::format!("city {} repeated on consecutive days {} and {}", cities[t], t + 1, t + 2),
            });
        }
        Ok(CitySequence { cities })
    }

    pub fn cities(&self) -> &[usize] {
        &self.cities
    }

    pub fn len(&self) -> usize {
        self.cities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cities.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        path_edges(&self.cities)
    }
}

/// A Hamiltonian time path: a permutation of `1..=n`, city `perm[t - 1]`
/// visited on day `t`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Htp {
    perm: Vec<usize>,
}

impl Htp {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = alloc::vec![false; n + 1];
        for &c in &perm {
            if c == 0 || c > n || core::mem::replace(&mut seen[c], true) {
                return Err(Error::NotAPermutation { cities: perm });
            }
        }
        if n == 0 {
            return Err(Error::NotAPermutation { cities: perm });
        }
        Ok(Htp { perm })
    }

    pub fn identity(order: Order) -> Self {
        Htp { perm: (1..=order.n()).collect() }
    }

    pub fn order(&self) -> Order {
        Order(self.perm.len())
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// City visited on day `t` (1-based).
    pub fn city_on(&self, t: usize) -> usize {
        self.perm[t - 1]
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        path_edges(&self.perm)
    }

    pub fn edge_indices(&self) -> impl Iterator<Item = usize> + '_ {
        let order = self.order();
        self.edges().map(move |e| order.index(e))
    }

    pub fn as_sequence(&self) -> CitySequence {
        CitySequence { cities: self.perm.clone() }
    }

    pub fn random<R: Rng + ?Sized>(order: Order, rng: &mut R) -> Self {
        let mut perm: Vec<usize> = (1..=order.n()).collect();
        perm.shuffle(rng);
        Htp { perm }
    }
}

impl fmt::Display for Htp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.perm.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A rational-valued function on `E(K_n^T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeVector {
    order: Order,
    vector: Vector,
}

impl EdgeVector {
    pub fn zeros(order: Order) -> Self {
        EdgeVector { order, vector: Vector::zeros(edge_count(order)) }
    }

    pub fn from_vector(order: Order, vector: Vector) -> Result<Self> {
        if vector.dim() != edge_count(order) {
            return Err(Error::DimensionMismatch { left: edge_count(order), right: vector.dim() });
        }
        Ok(EdgeVector { order, vector })
    }

    /// Sum of `weight * e_edge` over the given terms.
    pub fn from_edges<I>(order: Order, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Edge, Rational)>,
    {
        let mut entries = Vec::new();
        for (e, x) in terms {
            entries.push((edge_index(order, e)?, x));
        }
        Ok(EdgeVector { order, vector: Vector::from_entries(edge_count(order), entries)? })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn vector(&self) -> &Vector {
        &self.vector
    }

    pub fn into_vector(self) -> Vector {
        self.vector
    }

    pub fn get(&self, e: Edge) -> Result<Rational> {
        Ok(self.vector.get(edge_index(self.order, e)?))
    }

    /// Edges with a nonzero value, in canonical order.
    pub fn support(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vector.support().map(move |k| edge_from_index(self.order, k).expect("index in range"))
    }

    pub fn inner(&self, other: &EdgeVector) -> Result<Rational> {
        if self.order != other.order {
            return Err(Error::DimensionMismatch { left: self.order.n(), right: other.order.n() });
        }
        self.vector.dot(&other.vector)
    }
}

fn check_len(order: Order, len: usize) -> Result<()> {
    if len != order.n() {
        return Err(Error::DimensionMismatch { left: order.n(), right: len });
    }
    Ok(())
}

fn indicator(order: Order, edges: impl Iterator<Item = Edge>) -> EdgeVector {
    let vector = Vector::indicator(edge_count(order), edges.map(|e| order.index(e))).expect("valid edges");
    EdgeVector { order, vector }
}

/// Characteristic vector of an htp: 1 on its `n + 1` edges.
pub fn htp_vector(order: Order, h: &Htp) -> Result<EdgeVector> {
    check_len(order, h.perm.len())?;
    Ok(indicator(order, h.edges()))
}

/// Characteristic vector of the time path through `s`. Each day transition
/// contributes a distinct edge, so the entries are 0/1 with weight `n + 1`.
pub fn timepath_vector(order: Order, s: &CitySequence) -> Result<EdgeVector> {
    check_len(order, s.len())?;
    Ok(indicator(order, s.edges()))
}

/// Cities of the path from `(0, 0)` to `(i, t)` stepping `+1 (mod n)` each
/// day: `a_s = ((i - t + s - 1) mod n) + 1`.
pub fn partial_path(order: Order, i: usize, t: usize) -> Result<Vec<usize>> {
    let n = order.n();
    if !(1..=n).contains(&i) {
        return Err(Error::CityOutOfRange { city: i, n });
    }
    if !(1..=n).contains(&t) {
        return Err(Error::DayOutOfRange { day: t, n });
    }
    // i - t + s - 1 with s >= 1 and i >= 1 stays >= 1 - t > -n.
    Ok((1..=t).map(|s| (i + n + s - t - 1) % n + 1).collect())
}

/// Characteristic vector of [`partial_path`]: `t` ones, the last edge
/// entering `(i, t)`.
pub fn partial_path_vector(order: Order, i: usize, t: usize) -> Result<EdgeVector> {
    let cities = partial_path(order, i, t)?;
    let first = Edge::new(0, cities[0], 0);
    let rest = cities.windows(2).enumerate().map(|(s, w)| Edge::new(w[0], w[1], s + 1));
    Ok(indicator(order, core::iter::once(first).chain(rest)))
}

/// A sub-graph of `K_n^T` on all its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeGraph {
    order: Order,
    present: Vec<bool>,
}

impl TimeGraph {
    pub fn complete(order: Order) -> Self {
        TimeGraph { order, present: alloc::vec![true; edge_count(order)] }
    }

    pub fn empty(order: Order) -> Self {
        TimeGraph { order, present: alloc::vec![false; edge_count(order)] }
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(order: Order, edges: I) -> Result<Self> {
        let mut g = TimeGraph::empty(order);
        for e in edges {
            g.insert(e)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn insert(&mut self, e: Edge) -> Result<bool> {
        let k = edge_index(self.order, e)?;
        Ok(!core::mem::replace(&mut self.present[k], true))
    }

    pub fn remove(&mut self, e: Edge) -> Result<bool> {
        let k = edge_index(self.order, e)?;
        Ok(core::mem::replace(&mut self.present[k], false))
    }

    /// Invalid edges are simply absent.
    pub fn contains(&self, e: Edge) -> bool {
        edge_index(self.order, e).is_ok_and(|k| self.present[k])
    }

    pub fn contains_index(&self, k: usize) -> bool {
        self.present.get(k).copied().unwrap_or(false)
    }

    pub fn contains_htp(&self, h: &Htp) -> bool {
        h.order() == self.order && h.edge_indices().all(|k| self.present[k])
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.present
            .iter()
            .enumerate()
            .filter(|(_, p)| **p)
            .map(move |(k, _)| edge_from_index(self.order, k).expect("index in range"))
    }

    pub fn edge_count(&self) -> usize {
        self.present.iter().filter(|p| **p).count()
    }

    pub fn htps(&self) -> HtpIter<'_> {
        enumerate_htps(self)
    }
}

/// Htps of `g` in lexicographic order, by day-layered depth-first search
/// that abandons a prefix as soon as its next edge is missing.
pub fn enumerate_htps(g: &TimeGraph) -> HtpIter<'_> {
    let n = g.order.n();
    HtpIter {
        g,
        path: Vec::with_capacity(n),
        used: alloc::vec![false; n + 1],
        cursor: alloc::vec![1; n],
        done: false,
    }
}

pub struct HtpIter<'a> {
    g: &'a TimeGraph,
    path: Vec<usize>,
    used: Vec<bool>,
    /// Next city to try at each depth.
    cursor: Vec<usize>,
    done: bool,
}

impl HtpIter<'_> {
    fn admissible(&self, c: usize) -> bool {
        if self.used[c] {
            return false;
        }
        let order = self.g.order;
        let e = match self.path.last() {
            None => Edge::new(0, c, 0),
            Some(&prev) => Edge::new(prev, c, self.path.len()),
        };
        self.g.present[order.index(e)]
    }
}

impl Iterator for HtpIter<'_> {
    type Item = Htp;

    fn next(&mut self) -> Option<Htp> {
        let n = self.g.order.n();
        while !self.done {
            let d = self.path.len();
            match (self.cursor[d]..=n).find(|&c| self.admissible(c)) {
                Some(c) => {
                    self.cursor[d] = c + 1;
                    if d + 1 == n {
                        if self.g.present[self.g.order.index(Edge::new(c, 0, n))] {
                            let mut perm = self.path.clone();
                            perm.push(c);
                            return Some(Htp { perm });
                        }
                    } else {
                        self.path.push(c);
                        self.used[c] = true;
                        self.cursor[d + 1] = 1;
                    }
                }
                None => match self.path.pop() {
                    Some(c) => self.used[c] = false,
                    None => self.done = true,
                },
            }
        }
        None
    }
}

/// Whether every entry is 0 or 1 and there are exactly `n + 1` ones.
pub fn is_path_shaped(v: &EdgeVector) -> bool {
    crate::linalg::is_zero_one(v.vector()) && v.vector().nnz() == v.order().n() + 1
}

//! Linear functionals that vanish on every Hamiltonian time path, their dual
//! test paths, and the resulting dimension bound.
//!
//! * vertex annihilator `(i, t)`: out-edges of vertex `(i, t)` minus its
//!   in-edges. Kills every time path, Hamiltonian or not.
//! * city annihilator `i` (`i < n`): every edge leaving city `i` on any day
//!   minus every source edge. Kills every htp since each city is left exactly
//!   once and exactly one source edge is used.
//!
//! Together these `n^2 + n - 1` vectors are independent, which bounds the
//! htp span by `|E| - (n^2 + n - 1) = n(n-1)(n-2) + 1`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{
    edge_count, enumerate_htps, partial_path_vector, timepath_vector, CitySequence, Edge, EdgeVector, Htp, Order,
    TimeGraph,
};
use crate::linalg::{self, Rational};
use crate::{annihilator_count, basis_size, Error, Result};

fn check_city_day(order: Order, i: usize, t: usize) -> Result<()> {
    let n = order.n();
    if !(1..=n).contains(&i) {
        return Err(Error::CityOutOfRange { city: i, n });
    }
    if !(1..=n).contains(&t) {
        return Err(Error::DayOutOfRange { day: t, n });
    }
    Ok(())
}

/// `+1` on edges leaving `(i, t)`, `-1` on edges entering it. At `t = n`
/// the only out-edge is the destination edge, at `t = 1` the only in-edge is
/// the source edge.
pub fn vertex_annihilator(order: Order, i: usize, t: usize) -> Result<EdgeVector> {
    check_city_day(order, i, t)?;
    let n = order.n();
    let one = Rational::one();
    let mut terms: Vec<(Edge, Rational)> = Vec::with_capacity(2 * n);
    if t == n {
        terms.push((Edge::new(i, 0, n), one.clone()));
    } else {
        terms.extend((1..=n).filter(|&j| j != i).map(|j| (Edge::new(i, j, t), one.clone())));
    }
    if t == 1 {
        terms.push((Edge::new(0, i, 0), -one));
    } else {
        terms.extend((1..=n).filter(|&j| j != i).map(|j| (Edge::new(j, i, t - 1), -one.clone())));
    }
    EdgeVector::from_edges(order, terms)
}

/// `+1` on every edge leaving city `i` (destination edge included), `-1` on
/// every source edge. Defined for `1 <= i <= n - 1` only.
pub fn city_annihilator(order: Order, i: usize) -> Result<EdgeVector> {
    let n = order.n();
    if !(1..n).contains(&i) {
        return Err(Error::CityOutOfRange { city: i, n: n - 1 });
    }
    let one = Rational::one();
    let mut terms: Vec<(Edge, Rational)> = Vec::new();
    for t in 1..n {
        terms.extend((1..=n).filter(|&j| j != i).map(|j| (Edge::new(i, j, t), one.clone())));
    }
    terms.push((Edge::new(i, 0, n), one.clone()));
    terms.extend((1..=n).map(|j| (Edge::new(0, j, 0), -one.clone())));
    EdgeVector::from_edges(order, terms)
}

/// A time path that skips city `n`, visits `i` twice on non-consecutive
/// days and every other city once:
/// `(1, 2, 1, 3, .., n-1)` for `i = 1`, otherwise
/// `(i, 1, i, 2, 3, .., i-1, i+1, .., n-1)`.
pub fn double_visit_path(order: Order, i: usize) -> Result<CitySequence> {
    let n = order.n();
    if n < 5 {
        return Err(Error::OrderOutOfRange { n, min: 5, max: None });
    }
    if !(1..n).contains(&i) {
        return Err(Error::CityOutOfRange { city: i, n: n - 1 });
    }
    let cities: Vec<usize> = if i == 1 {
        [1, 2, 1].into_iter().chain(3..n).collect()
    } else {
        [i, 1, i].into_iter().chain((2..n).filter(|&c| c != i)).collect()
    };
    CitySequence::new(cities)
}

/// The `n^2` vertex annihilators (indexed by `(i, t)`, row-major in `i`) and
/// the `n - 1` city annihilators.
#[derive(Debug, Clone)]
pub struct AnnihilatorFamily {
    order: Order,
    vertex: Vec<EdgeVector>,
    city: Vec<EdgeVector>,
}

impl AnnihilatorFamily {
    pub fn new(order: Order) -> Result<Self> {
        let n = order.n();
        if n < 2 {
            return Err(Error::OrderOutOfRange { n, min: 2, max: None });
        }
        let mut vertex = Vec::with_capacity(n * n);
        for i in 1..=n {
            for t in 1..=n {
                vertex.push(vertex_annihilator(order, i, t)?);
            }
        }
        let city = (1..n).map(|i| city_annihilator(order, i)).collect::<Result<_>>()?;
        Ok(AnnihilatorFamily { order, vertex, city })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn vertex(&self, i: usize, t: usize) -> &EdgeVector {
        let n = self.order.n();
        &self.vertex[(i - 1) * n + (t - 1)]
    }

    pub fn city(&self, i: usize) -> &EdgeVector {
        &self.city[i - 1]
    }

    /// City annihilators first, then vertex annihilators.
    pub fn members(&self) -> impl Iterator<Item = &EdgeVector> {
        self.city.iter().chain(&self.vertex)
    }

    pub fn len(&self) -> usize {
        self.city.len() + self.vertex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rank(&self) -> usize {
        let vs: Vec<_> = self.members().map(|v| v.vector().clone()).collect();
        linalg::rank(&vs).expect("common dimension")
    }

    /// Whether every member has zero inner product with the htp.
    pub fn annihilates(&self, h: &Htp) -> bool {
        let idx: Vec<usize> = h.edge_indices().collect();
        self.members().all(|m| m.vector().sum_at(idx.iter().copied()).is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub checked: usize,
    /// First few violations, human readable.
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl IdentityCheck {
    fn new(name: &'static str) -> Self {
        IdentityCheck { name, checked: 0, failures: Vec::new(), failure_count: 0 }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < 8 {
                self.failures.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub order: Order,
    pub checks: Vec<IdentityCheck>,
    pub family_size: usize,
    pub family_rank: usize,
    pub edge_count: usize,
    /// Htps tested for annihilation; all of them when `exhaustive`.
    pub htps_sampled: usize,
    pub exhaustive: bool,
    pub seed: u64,
}

impl DualityReport {
    pub fn expected_rank(&self) -> usize {
        annihilator_count(self.order.n())
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

/// Htps tested exhaustively up to this order, sampled above it.
pub const EXHAUSTIVE_LIMIT: usize = 6;
pub const RANDOM_SAMPLES: usize = 10_000;

/// Evaluates all three duality identity groups exactly, certifies the
/// family rank and checks annihilation of htps.
pub fn verify_duality(order: Order, seed: u64) -> Result<DualityReport> {
    let n = order.n();
    if n < 5 {
        return Err(Error::OrderOutOfRange { n, min: 5, max: None });
    }
    let family = AnnihilatorFamily::new(order)?;
    let doubles: Vec<EdgeVector> = (1..n)
        .map(|k| double_visit_path(order, k).and_then(|s| timepath_vector(order, &s)))
        .collect::<Result<_>>()?;
    let zero = Rational::zero();
    let one = Rational::one();

    let mut g1 = IdentityCheck::new("double_visit_vs_vertex");
    for (k, f) in doubles.iter().enumerate() {
        for i in 1..=n {
            for t in 1..=n {
                let ip = f.inner(family.vertex(i, t))?;
                g1.record(ip == zero, || format!("<f_{}, g_({i},{t})> = {ip}", k + 1));
            }
        }
    }

    let mut g2 = IdentityCheck::new("partial_path_vs_vertex");
    let partials: Vec<EdgeVector> = (1..=n)
        .flat_map(|i| (1..=n).map(move |t| (i, t)))
        .map(|(i, t)| partial_path_vector(order, i, t))
        .collect::<Result<_>>()?;
    for (a, f) in partials.iter().enumerate() {
        let (i, t) = (a / n + 1, a % n + 1);
        for i2 in 1..=n {
            for t2 in 1..=n {
                let ip = f.inner(family.vertex(i2, t2))?;
                let want = if (i, t) == (i2, t2) { -one.clone() } else { zero.clone() };
                g2.record(ip == want, || format!("<f_({i},{t}), g_({i2},{t2})> = {ip}, want {want}"));
            }
        }
    }

    let mut g3 = IdentityCheck::new("double_visit_vs_city");
    for (k, f) in doubles.iter().enumerate() {
        for j in 1..n {
            let ip = f.inner(family.city(j))?;
            let want = if k + 1 == j { one.clone() } else { zero.clone() };
            g3.record(ip == want, || format!("<f_{}, g_{j}> = {ip}, want {want}", k + 1));
        }
    }

    let family_rank = family.rank();
    let mut rank_check = IdentityCheck::new("family_rank");
    rank_check.record(family_rank == annihilator_count(n), || {
        format!("rank {family_rank}, want {}", annihilator_count(n))
    });

    let mut kill = IdentityCheck::new("htp_annihilation");
    let exhaustive = n <= EXHAUSTIVE_LIMIT;
    let mut sampled = 0;
    let mut test = |h: &Htp| {
        sampled += 1;
        kill.record(family.annihilates(h), || format!("htp ({h}) not annihilated"));
    };
    if exhaustive {
        enumerate_htps(&TimeGraph::complete(order)).for_each(|h| test(&h));
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_SAMPLES {
            test(&Htp::random(order, &mut rng));
        }
    }

    Ok(DualityReport {
        order,
        checks: alloc::vec![g1, g2, g3, rank_check, kill],
        family_size: family.len(),
        family_rank,
        edge_count: edge_count(order),
        htps_sampled: sampled,
        exhaustive,
        seed,
    })
}

/// `d_n = |E| - (n^2 + n - 1)`, cross-checked against `n(n-1)(n-2) + 1`.
pub fn upper_bound(order: Order) -> Result<usize> {
    let n = order.n();
    if n < 5 {
        return Err(Error::OrderOutOfRange { n, min: 5, max: None });
    }
    let by_count = edge_count(order) - annihilator_count(n);
    let closed = basis_size(n);
    if by_count != closed {
        return Err(Error::Internal { reason: format!("d_{n}: {by_count} from counts, {closed} closed form") });
    }
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::htp_vector;
    use alloc::collections::BTreeMap;
    use alloc::vec;

    fn o(n: usize) -> Order {
        Order::new(n).unwrap()
    }

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn entries(v: &EdgeVector) -> BTreeMap<Edge, Rational> {
        v.support().map(|e| (e, v.get(e).unwrap())).collect()
    }

    #[test]
    fn vertex_annihilator_at_first_day() {
        let v = vertex_annihilator(o(5), 1, 1).unwrap();
        let mut want = BTreeMap::new();
        for j in 2..=5 {
            want.insert(Edge::new(1, j, 1), q(1));
        }
        want.insert(Edge::new(0, 1, 0), q(-1));
        assert_eq!(entries(&v), want);
    }

    #[test]
    fn vertex_annihilator_at_last_day() {
        let v = vertex_annihilator(o(5), 2, 5).unwrap();
        let mut want = BTreeMap::new();
        want.insert(Edge::new(2, 0, 5), q(1));
        for j in [1, 3, 4, 5] {
            want.insert(Edge::new(j, 2, 4), q(-1));
        }
        assert_eq!(entries(&v), want);
        assert!(vertex_annihilator(o(5), 6, 1).is_err());
        assert!(vertex_annihilator(o(5), 1, 0).is_err());
    }

    #[test]
    fn partial_path_pairs_to_minus_one() {
        let order = o(5);
        for i in 1..=5 {
            for t in 1..=5 {
                let f = partial_path_vector(order, i, t).unwrap();
                assert_eq!(f.inner(&vertex_annihilator(order, i, t).unwrap()).unwrap(), q(-1));
            }
        }
    }

    #[test]
    fn city_annihilator_shape() {
        let order = o(5);
        let v = city_annihilator(order, 2).unwrap();
        // 4 days x 4 targets + destination + 5 source edges.
        assert_eq!(v.vector().nnz(), 22);
        assert!(city_annihilator(order, 5).is_err());
        assert!(city_annihilator(order, 0).is_err());
    }

    #[test]
    fn city_annihilator_against_double_visits() {
        let order = o(5);
        let f1 = timepath_vector(order, &double_visit_path(order, 1).unwrap()).unwrap();
        assert_eq!(f1.inner(&city_annihilator(order, 1).unwrap()).unwrap(), q(1));
        assert_eq!(f1.inner(&city_annihilator(order, 2).unwrap()).unwrap(), q(0));
    }

    #[test]
    fn double_visit_patterns() {
        let order = o(5);
        assert_eq!(double_visit_path(order, 1).unwrap().cities(), [1, 2, 1, 3, 4]);
        assert_eq!(double_visit_path(order, 2).unwrap().cities(), [2, 1, 2, 3, 4]);
        assert_eq!(double_visit_path(order, 3).unwrap().cities(), [3, 1, 3, 2, 4]);
        assert_eq!(double_visit_path(order, 4).unwrap().cities(), [4, 1, 4, 2, 3]);
        assert!(double_visit_path(order, 5).is_err());
        assert!(double_visit_path(o(4), 1).is_err());
        for n in 5..=10 {
            for i in 1..n {
                let s = double_visit_path(o(n), i).unwrap();
                let c = s.cities();
                assert!(!c.contains(&n));
                assert_eq!(c.iter().filter(|&&x| x == i).count(), 2);
                let mut rest: Vec<usize> = c.iter().copied().filter(|&x| x != i).collect();
                rest.sort_unstable();
                assert_eq!(rest, (1..n).filter(|&x| x != i).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn every_htp_at_five_is_annihilated() {
        let order = o(5);
        let family = AnnihilatorFamily::new(order).unwrap();
        for h in enumerate_htps(&TimeGraph::complete(order)) {
            let v = htp_vector(order, &h).unwrap();
            for m in family.members() {
                assert_eq!(v.inner(m).unwrap(), q(0), "htp {h}");
            }
        }
    }

    #[test]
    fn duality_at_five_and_six() {
        let r = verify_duality(o(5), 0).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.family_rank, 29);
        assert!(r.exhaustive);
        assert_eq!(r.htps_sampled, 120);
        let r = verify_duality(o(6), 0).unwrap();
        assert!(r.passed());
        assert_eq!(r.family_rank, 41);
        assert!(verify_duality(o(4), 0).is_err());
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(upper_bound(o(5)).unwrap(), 61);
        assert_eq!(upper_bound(o(6)).unwrap(), 121);
        assert_eq!(upper_bound(o(9)).unwrap(), 505);
        assert!(upper_bound(o(4)).is_err());
    }

    #[test]
    fn family_without_vertex_boundary_terms_fails() {
        // Dropping the source-edge term of the (i, 1) annihilator breaks
        // annihilation of htps starting at i.
        let order = o(5);
        let broken = EdgeVector::from_edges(order, (2..=5).map(|j| (Edge::new(1, j, 1), q(1)))).unwrap();
        let h = Htp::new(vec![1, 2, 3, 4, 5]).unwrap();
        assert_eq!(htp_vector(order, &h).unwrap().inner(&broken).unwrap(), q(1));
    }
}

//! Brute-force ground truth: enumerate every htp of a time graph and take
//! the exact rank of their incidence vectors.
//!
//! Shares nothing with the basis builder beyond the linear algebra kernel,
//! and eliminates with the opposite pivot order (highest edge index first).

use alloc::vec::Vec;
use core::time::Duration;

use crate::graph::{enumerate_htps, htp_vector, Order, TimeGraph};
use crate::linalg::{Echelon, PivotOrder};
use crate::{Error, Result};

/// Largest order enumerated without an explicit override.
pub const DEFAULT_CAP: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Every permutation of `1..=n`.
    FullEnumeration,
    /// Layered depth-first search restricted to the graph's edges.
    SubgraphEnumeration,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::FullEnumeration => "full-enumeration",
            Method::SubgraphEnumeration => "subgraph-enumeration",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub order: Order,
    pub htp_count: usize,
    pub dimension: usize,
    /// Filled in by callers that own a clock.
    pub elapsed: Option<Duration>,
    pub method: Method,
    pub cap: usize,
}

fn check_cap(order: Order, cap: usize) -> Result<()> {
    if order.n() > cap {
        return Err(Error::CapExceeded { n: order.n(), cap });
    }
    Ok(())
}

fn span_dimension(g: &TimeGraph) -> (usize, usize) {
    let order = g.order();
    let mut ech = Echelon::new(order.edge_count(), PivotOrder::Highest);
    let mut count = 0;
    for h in enumerate_htps(g) {
        count += 1;
        let v = htp_vector(order, &h).expect("enumerated htps match the order");
        ech.insert(v.vector().to_int_row());
    }
    (count, ech.rank())
}

/// Exact dimension of the span of all `n!` htps.
pub fn full_dimension(order: Order, cap: usize) -> Result<DimensionReport> {
    check_cap(order, cap)?;
    let (htp_count, dimension) = span_dimension(&TimeGraph::complete(order));
    Ok(DimensionReport { order, htp_count, dimension, elapsed: None, method: Method::FullEnumeration, cap })
}

/// Exact dimension of `H(G)`.
pub fn dimension_of(g: &TimeGraph, cap: usize) -> Result<DimensionReport> {
    check_cap(g.order(), cap)?;
    let (htp_count, dimension) = span_dimension(g);
    Ok(DimensionReport {
        order: g.order(),
        htp_count,
        dimension,
        elapsed: None,
        method: Method::SubgraphEnumeration,
        cap,
    })
}

/// Whether `g` has an htp.
pub fn is_hamiltonian(g: &TimeGraph, cap: usize) -> Result<bool> {
    check_cap(g.order(), cap)?;
    Ok(enumerate_htps(g).next().is_some())
}

/// Hamiltonicity together with the dimension it must agree with
/// (`dim H(G) > 0`). Disagreement is an internal error.
pub fn analyze(g: &TimeGraph, cap: usize) -> Result<(DimensionReport, bool)> {
    let report = dimension_of(g, cap)?;
    let hamiltonian = is_hamiltonian(g, cap)?;
    if hamiltonian != (report.dimension > 0) {
        return Err(Error::Internal {
            reason: alloc::format!("hamiltonian={hamiltonian} but dimension={}", report.dimension),
        });
    }
    Ok((report, hamiltonian))
}

/// All htps of `g`, for callers that need them materialised.
pub fn htps_of(g: &TimeGraph, cap: usize) -> Result<Vec<crate::Htp>> {
    check_cap(g.order(), cap)?;
    Ok(enumerate_htps(g).collect())
}

//! Certified upper-triangular bases of `H(K_n^T)`.
//!
//! A sequence of htps with pivot edges `x_1, x_2, ..` is upper triangular
//! when row `i` uses `x_i` and no later row does; such a sequence is
//! linearly independent. Construction is inductive from the 61-row base
//! case at `n = 5`: the families starting at city `n`, then the lifted
//! order-`(n-1)` basis, then completion rows that visit city `n` on an
//! interior day. Every basis carries a certificate: the pivot check plus an
//! independently recomputed exact rank.

mod base5;
mod complete;
mod induction;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub use base5::{base_basis_5, marked_edge, BASE_ROWS_5};
pub use complete::{complete_basis, structured_pool, DEFAULT_SEED};
pub use induction::{induction_families, lift, lift_edge, FamilyLabel, FamilyRow};

use crate::graph::{edge_count, htp_vector, Edge, Htp, Order};
use crate::{basis_size, linalg, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PivotedHtp {
    pub htp: Htp,
    pub pivot: Edge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub pivots_ok: bool,
    /// Exact rank over `Q`, recomputed from the rows.
    pub rank: Option<usize>,
    /// `d_n`.
    pub target: usize,
    pub seed: u64,
    pub family_rows: usize,
    pub lifted_rows: usize,
    pub completion_rows: usize,
    /// Completion rows drawn from the seeded random pool.
    pub random_rows: usize,
    /// Completion attempts abandoned before the successful one.
    pub restarts: usize,
    /// 1-based rows whose pivot was derived rather than given or inherited.
    pub rederived_pivots: Vec<usize>,
}

impl Certificate {
    pub fn new(target: usize) -> Self {
        Certificate {
            pivots_ok: false,
            rank: None,
            target,
            seed: DEFAULT_SEED,
            family_rows: 0,
            lifted_rows: 0,
            completion_rows: 0,
            random_rows: 0,
            restarts: 0,
            rederived_pivots: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperTriangularBasis {
    pub order: Order,
    pub rows: Vec<PivotedHtp>,
    pub certificate: Certificate,
}

impl UpperTriangularBasis {
    /// Uncertified rows; call [`certify`] to fill in the certificate.
    pub fn new(order: Order, rows: Vec<PivotedHtp>, target: usize) -> Self {
        UpperTriangularBasis { order, rows, certificate: Certificate::new(target) }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn htps(&self) -> impl Iterator<Item = &Htp> {
        self.rows.iter().map(|r| &r.htp)
    }

    pub fn is_certified(&self) -> bool {
        let c = &self.certificate;
        c.pivots_ok && c.rank == Some(self.rows.len()) && self.rows.len() == c.target
    }
}

/// Index of the last row using each edge.
fn last_use(order: Order, htps: &[&Htp]) -> Vec<Option<usize>> {
    let mut last = alloc::vec![None; edge_count(order)];
    for (k, h) in htps.iter().enumerate() {
        for e in h.edge_indices() {
            last[e] = Some(k);
        }
    }
    last
}

/// Lowest-indexed edge of row `k` that no later row uses.
pub(crate) fn admissible_pivot(htps: &[Htp], k: usize) -> Option<Edge> {
    let later: BTreeSet<Edge> = htps[k + 1..].iter().flat_map(|h| h.edges()).collect();
    let order = htps[k].order();
    htps[k].edges().filter(|e| !later.contains(e)).min_by_key(|e| order.index(*e))
}

fn common_order<'a>(htps: impl IntoIterator<Item = &'a Htp>) -> Result<Option<Order>> {
    let mut order = None;
    for h in htps {
        match order {
            None => order = Some(h.order()),
            Some(o) if o != h.order() => {
                return Err(Error::DimensionMismatch { left: o.n(), right: h.order().n() });
            }
            _ => {}
        }
    }
    Ok(order)
}

/// For each row, the lowest-indexed edge it uses that no later row uses.
/// Fails at the first (1-based) row without one.
pub fn find_pivot_sequence(rows: &[Htp]) -> Result<Vec<Edge>> {
    let Some(order) = common_order(rows)? else {
        return Ok(Vec::new());
    };
    let refs: Vec<&Htp> = rows.iter().collect();
    let last = last_use(order, &refs);
    rows.iter()
        .enumerate()
        .map(|(k, h)| {
            h.edge_indices()
                .filter(|&e| last[e] == Some(k))
                .min()
                .map(|e| crate::graph::edge_from_index(order, e).expect("index in range"))
                .ok_or(Error::NotUpperTriangular { row: k + 1 })
        })
        .collect()
}

/// Orders `rows` into an upper-triangular sequence by repeatedly taking the
/// first remaining row that owns an edge no other remaining row uses.
pub fn order_by_unique_pivots(rows: Vec<Htp>) -> Result<Vec<PivotedHtp>> {
    let Some(order) = common_order(&rows)? else {
        return Ok(Vec::new());
    };
    let mut count = alloc::vec![0usize; edge_count(order)];
    for h in &rows {
        for e in h.edge_indices() {
            count[e] += 1;
        }
    }
    let mut remaining: Vec<Option<Htp>> = rows.into_iter().map(Some).collect();
    let mut out = Vec::with_capacity(remaining.len());
    while out.len() < remaining.len() {
        let pick = remaining.iter().enumerate().find_map(|(k, slot)| {
            let h = slot.as_ref()?;
            h.edge_indices().filter(|&e| count[e] == 1).min().map(|e| (k, e))
        });
        let Some((k, e)) = pick else {
            return Err(Error::NotUpperTriangular { row: out.len() + 1 });
        };
        let h = remaining[k].take().unwrap();
        for x in h.edge_indices() {
            count[x] -= 1;
        }
        let pivot = crate::graph::edge_from_index(order, e)?;
        out.push(PivotedHtp { htp: h, pivot });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TriangularReport {
    pub rows: usize,
    pub target: usize,
    /// Rows whose permutation is not valid for the basis order.
    pub invalid_rows: Vec<usize>,
    /// `(row, earlier row)` pairs of equal htps.
    pub duplicates: Vec<(usize, usize)>,
    /// Rows whose pivot is not one of their edges.
    pub pivot_not_in_row: Vec<usize>,
    /// `(row, later row)`: the later row uses the earlier row's pivot.
    pub pivot_reused: Vec<(usize, usize)>,
    pub rank: usize,
}

impl TriangularReport {
    pub fn pivots_ok(&self) -> bool {
        self.invalid_rows.is_empty()
            && self.duplicates.is_empty()
            && self.pivot_not_in_row.is_empty()
            && self.pivot_reused.is_empty()
    }

    pub fn rank_ok(&self) -> bool {
        self.rank == self.rows
    }

    /// Everything holds and the row count is the target.
    pub fn passed(&self) -> bool {
        self.pivots_ok() && self.rank_ok() && self.rows == self.target
    }

    pub fn findings(&self) -> Vec<String> {
        let mut out = Vec::new();
        out.extend(self.invalid_rows.iter().map(|r| format!("row {r}: not a valid htp")));
        out.extend(self.duplicates.iter().map(|(r, e)| format!("row {r}: duplicates row {e}")));
        out.extend(self.pivot_not_in_row.iter().map(|r| format!("row {r}: pivot is not an edge of the row")));
        out.extend(self.pivot_reused.iter().map(|(r, l)| format!("row {r}: pivot reused by later row {l}")));
        if !self.rank_ok() {
            out.push(format!("rank {} != row count {}", self.rank, self.rows));
        }
        if self.rows != self.target {
            out.push(format!("row count {} != target {}", self.rows, self.target));
        }
        out
    }
}

/// Checks validity, distinctness, pivot membership and the vanishing
/// property, and recomputes the exact rank from scratch.
pub fn verify_upper_triangular(b: &UpperTriangularBasis) -> TriangularReport {
    let order = b.order;
    let n = order.n();
    let mut report = TriangularReport { rows: b.rows.len(), target: b.certificate.target, ..Default::default() };

    let mut valid: Vec<&PivotedHtp> = Vec::with_capacity(b.rows.len());
    let mut numbers = Vec::with_capacity(b.rows.len());
    let mut seen = alloc::collections::BTreeMap::new();
    for (k, row) in b.rows.iter().enumerate() {
        if row.htp.perm().len() != n {
            report.invalid_rows.push(k + 1);
            continue;
        }
        if let Some(first) = seen.insert(&row.htp, k + 1) {
            report.duplicates.push((k + 1, first));
        }
        valid.push(row);
        numbers.push(k + 1);
    }

    let htps: Vec<&Htp> = valid.iter().map(|r| &r.htp).collect();
    let last = last_use(order, &htps);
    let mut users: Vec<Vec<usize>> = alloc::vec![Vec::new(); edge_count(order)];
    for (k, h) in htps.iter().enumerate() {
        for e in h.edge_indices() {
            users[e].push(k);
        }
    }
    for (k, row) in valid.iter().enumerate() {
        let Ok(p) = crate::graph::edge_index(order, row.pivot) else {
            report.pivot_not_in_row.push(numbers[k]);
            continue;
        };
        if !row.htp.edge_indices().any(|e| e == p) {
            report.pivot_not_in_row.push(numbers[k]);
        }
        if last[p].is_some_and(|l| l > k) {
            let later = users[p].iter().find(|&&u| u > k).unwrap();
            report.pivot_reused.push((numbers[k], numbers[*later]));
        }
    }

    let vectors: Vec<_> = valid
        .iter()
        .map(|r| htp_vector(order, &r.htp).expect("length checked").into_vector())
        .collect();
    report.rank = linalg::rank(&vectors).expect("common dimension");
    report
}

/// Fills in `pivots_ok` and the exact rank.
pub fn certify(b: &mut UpperTriangularBasis) -> Result<()> {
    let report = verify_upper_triangular(b);
    b.certificate.pivots_ok = report.pivots_ok();
    b.certificate.rank = Some(report.rank);
    Ok(())
}

/// Certified basis of `H(K_n^T)` with `n(n-1)(n-2) + 1` rows, `n >= 5`.
pub fn build(order: Order) -> Result<UpperTriangularBasis> {
    build_with_seed(order, DEFAULT_SEED)
}

pub fn build_with_seed(order: Order, seed: u64) -> Result<UpperTriangularBasis> {
    let n = order.n();
    if n < 5 {
        return Err(Error::OrderOutOfRange { n, min: 5, max: None });
    }
    if n == 5 {
        return base_basis_5();
    }
    let prev = build_with_seed(order.pred().expect("n > 5"), seed)?;
    let partial = assemble_step(order, &prev)?;
    let mut basis = complete_basis(order, partial, basis_size(n), seed)?;
    certify(&mut basis)?;
    if !basis.is_certified() {
        return Err(Error::Internal { reason: format!("order {n} basis failed certification: {:?}", basis.certificate) });
    }
    Ok(basis)
}

/// Families followed by the lifted rows of `prev`. Lifted rows inherit their
/// remapped pivots; family rows get [`find_pivot_sequence`] pivots.
pub fn assemble_step(order: Order, prev: &UpperTriangularBasis) -> Result<UpperTriangularBasis> {
    let families = induction_families(order)?;
    let mut htps: Vec<Htp> = families.iter().map(|r| r.htp.clone()).collect();
    htps.extend(prev.rows.iter().map(|r| lift(&r.htp)));
    let target = basis_size(order.n());

    let rows = match find_pivot_sequence(&htps) {
        Ok(derived) => {
            let mut rederived = Vec::new();
            let rows = htps
                .into_iter()
                .zip(derived)
                .enumerate()
                .map(|(k, (htp, derived))| {
                    let pivot = match k.checked_sub(families.len()) {
                        None => derived,
                        Some(l) => {
                            let inherited = lift_edge(order, prev.rows[l].pivot);
                            // Inherited pivot is still admissible iff it matches
                            // the vanishing property in the new sequence.
                            if inherited == derived || pivot_admissible(&htp, inherited, k, &families, prev, order) {
                                inherited
                            } else {
                                rederived.push(k + 1);
                                derived
                            }
                        }
                    };
                    PivotedHtp { htp, pivot }
                })
                .collect::<Vec<_>>();
            let mut b = UpperTriangularBasis::new(order, rows, target);
            b.certificate.rederived_pivots = rederived;
            b
        }
        Err(_) => {
            let rows = order_by_unique_pivots(htps)?;
            let rederived = (1..=rows.len()).collect();
            let mut b = UpperTriangularBasis::new(order, rows, target);
            b.certificate.rederived_pivots = rederived;
            b
        }
    };
    let mut b = rows;
    b.certificate.family_rows = families.len();
    b.certificate.lifted_rows = prev.rows.len();
    Ok(b)
}

/// Whether `pivot` (an edge of `htp`, the `k`-th row of families ++ lifted)
/// is unused by every later row.
fn pivot_admissible(
    htp: &Htp,
    pivot: Edge,
    k: usize,
    families: &[FamilyRow],
    prev: &UpperTriangularBasis,
    order: Order,
) -> bool {
    if !htp.edges().any(|e| e == pivot) {
        return false;
    }
    let l = k - families.len();
    !prev.rows[l + 1..].iter().any(|r| r.htp.edges().any(|e| lift_edge(order, e) == pivot))
}

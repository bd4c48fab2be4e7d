//! Completion of a partial upper-triangular basis up to a target size.
//!
//! A candidate can go in front of the current sequence iff it uses an edge
//! that no row in the sequence uses; that edge is its pivot and the rank
//! grows by exactly one. More generally it can be inserted at position `k`
//! if it avoids the pivots of rows `0..k` and owns an edge unused by rows
//! `k..`. Among admissible candidates the one introducing the fewest unused
//! edges is taken, so edges are not spent faster than necessary.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{certify, find_pivot_sequence, PivotedHtp, UpperTriangularBasis};
use crate::graph::{edge_count, edge_from_index, Htp, Order};
use crate::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5eed_0005;

/// Random candidates drawn per greedy step once the structured pool is spent.
const RANDOM_BATCH: usize = 256;
/// Consecutive random batches without an admissible candidate before an
/// attempt is abandoned.
const RANDOM_PATIENCE: usize = 64;
/// Further attempts, each with a reshuffled structured pool, after a stall.
const RESTARTS: usize = 16;

/// Htps visiting city `n` on an interior day `t` in `[2, n-1]`, for every
/// ordered pair `(a, b)` of distinct neighbours on days `t - 1` and `t + 1`;
/// the other cities fill the remaining days in ascending order.
pub fn structured_pool(order: Order) -> Vec<Htp> {
    let n = order.n();
    let mut pool = Vec::new();
    for t in 2..n {
        for a in 1..n {
            for b in (1..n).filter(|&b| b != a) {
                let mut rest = (1..n).filter(|&c| c != a && c != b);
                let perm = (1..=n)
                    .map(|d| match d {
                        _ if d == t - 1 => a,
                        _ if d == t => n,
                        _ if d == t + 1 => b,
                        _ => rest.next().expect("n - 3 fillers for n - 3 days"),
                    })
                    .collect();
                pool.push(Htp::new(perm).expect("construction yields a permutation"));
            }
        }
    }
    pool
}

/// The growing sequence with per-edge bookkeeping.
struct Sequence {
    order: Order,
    rows: Vec<PivotedHtp>,
    members: BTreeSet<Htp>,
    /// Position of the row whose pivot is this edge.
    pivot_pos: Vec<Option<usize>>,
    /// Position of the last row using this edge.
    last_use: Vec<Option<usize>>,
}

/// Where and with which pivot a candidate goes.
struct Placement {
    position: usize,
    pivot: usize,
    /// Edges of the candidate no row uses yet.
    fresh: usize,
}

impl Sequence {
    fn new(order: Order, rows: Vec<PivotedHtp>) -> Self {
        let mut s = Sequence {
            order,
            members: rows.iter().map(|r| r.htp.clone()).collect(),
            rows,
            pivot_pos: Vec::new(),
            last_use: Vec::new(),
        };
        s.reindex();
        s
    }

    fn reindex(&mut self) {
        let m = edge_count(self.order);
        self.pivot_pos = alloc::vec![None; m];
        self.last_use = alloc::vec![None; m];
        for (k, r) in self.rows.iter().enumerate() {
            self.pivot_pos[self.order.index(r.pivot)] = Some(k);
            for e in r.htp.edge_indices() {
                self.last_use[e] = Some(k);
            }
        }
    }

    fn fresh(&self, h: &Htp) -> usize {
        h.edge_indices().filter(|&e| self.last_use[e].is_none()).count()
    }

    /// Front placement: needs an edge no row uses.
    fn prepend_placement(&self, h: &Htp) -> Option<Placement> {
        let pivot = h.edge_indices().filter(|&e| self.last_use[e].is_none()).min()?;
        Some(Placement { position: 0, pivot, fresh: self.fresh(h) })
    }

    /// Latest position before which no pivot is touched by `h`, provided
    /// `h` owns an edge that no row from that position on uses.
    fn insert_placement(&self, h: &Htp) -> Option<Placement> {
        if self.members.contains(h) {
            return None;
        }
        let position = h.edge_indices().filter_map(|e| self.pivot_pos[e]).min().unwrap_or(self.rows.len());
        let pivot = h.edge_indices().filter(|&e| self.last_use[e].is_none_or(|l| l < position)).min()?;
        Some(Placement { position, pivot, fresh: self.fresh(h) })
    }

    fn place(&mut self, h: Htp, at: Placement) {
        let pivot = edge_from_index(self.order, at.pivot).expect("index in range");
        self.members.insert(h.clone());
        self.rows.insert(at.position, PivotedHtp { htp: h, pivot });
        self.reindex();
    }

    /// Admissible candidate with the fewest fresh edges; earliest wins ties.
    fn best<'a, F>(&self, pool: impl IntoIterator<Item = &'a Htp>, placement: F) -> Option<(&'a Htp, Placement)>
    where
        F: Fn(&Self, &Htp) -> Option<Placement>,
    {
        let mut best: Option<(&Htp, Placement)> = None;
        for h in pool {
            if let Some(p) = placement(self, h) {
                if best.as_ref().is_none_or(|(_, b)| p.fresh < b.fresh) {
                    let done = p.fresh <= 1;
                    best = Some((h, p));
                    if done {
                        break;
                    }
                }
            }
        }
        best
    }
}

/// Extends `partial` to exactly `target` rows and certifies the result.
///
/// Structured candidates come first; a seeded random pool takes over if they
/// run out. Fails with the achieved rank if neither reaches `target`.
pub fn complete_basis(
    order: Order,
    partial: UpperTriangularBasis,
    target: usize,
    seed: u64,
) -> Result<UpperTriangularBasis> {
    if partial.order != order {
        return Err(Error::DimensionMismatch { left: order.n(), right: partial.order.n() });
    }
    if partial.rows.len() == target {
        return Ok(partial);
    }
    if partial.rows.len() > target {
        return Err(Error::Internal {
            reason: alloc::format!("partial basis has {} rows, above target {target}", partial.rows.len()),
        });
    }
    let htps: Vec<Htp> = partial.htps().cloned().collect();
    find_pivot_sequence(&htps)?;
    let start = htps.len();
    let UpperTriangularBasis { rows, certificate, .. } = partial;

    let pool = structured_pool(order);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best_effort = start;
    let mut outcome = None;
    for attempt in 0..=RESTARTS {
        let mut seq = Sequence::new(order, rows.clone());
        let mut pool = pool.clone();
        if attempt > 0 {
            pool.shuffle(&mut rng);
        }
        // Structured pool: front placements first, then interior insertions.
        for placement in [Sequence::prepend_placement, Sequence::insert_placement] {
            while seq.rows.len() < target {
                let Some((h, at)) = seq.best(&pool, placement) else { break };
                seq.place(h.clone(), at);
            }
        }
        let structured = seq.rows.len() - start;
        let mut idle = 0;
        while seq.rows.len() < target && idle < RANDOM_PATIENCE {
            let batch: Vec<Htp> = (0..RANDOM_BATCH).map(|_| Htp::random(order, &mut rng)).collect();
            match seq.best(&batch, Sequence::insert_placement) {
                Some((h, at)) => {
                    idle = 0;
                    seq.place(h.clone(), at);
                }
                None => idle += 1,
            }
        }
        best_effort = best_effort.max(seq.rows.len());
        if seq.rows.len() == target {
            outcome = Some((seq, structured, attempt));
            break;
        }
    }
    let Some((seq, structured, restarts)) = outcome else {
        return Err(Error::CompletionStalled { achieved: best_effort, target });
    };
    let added = seq.rows.len() - start;

    let mut certificate = certificate;
    certificate.target = target;
    certificate.seed = seed;
    certificate.completion_rows = added;
    certificate.random_rows = added - structured;
    certificate.restarts = restarts;
    // Rows with derived pivots are reported by htp, not by shifting position.
    let rederived: BTreeSet<&Htp> = certificate.rederived_pivots.iter().map(|&r| &htps[r - 1]).collect();
    certificate.rederived_pivots =
        seq.rows.iter().enumerate().filter(|(_, r)| rederived.contains(&r.htp)).map(|(k, _)| k + 1).collect();
    let mut basis = UpperTriangularBasis { order, rows: seq.rows, certificate };
    certify(&mut basis)?;
    Ok(basis)
}

//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any gating criterion fails.
//!
//! `cargo test -p timegraph-core --test acceptance`

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use timegraph_core::annihilators::{upper_bound, verify_duality, AnnihilatorFamily};
use timegraph_core::basis::{base_basis_5, build, find_pivot_sequence, verify_upper_triangular};
use timegraph_core::graph::{edge_count, htp_vector};
use timegraph_core::linalg::{annihilator_basis, gram_schmidt, in_span, inner_product, rank, Rational, Subspace, Vector};
use timegraph_core::oracle::{dimension_of, full_dimension, is_hamiltonian};
use timegraph_core::{annihilator_count, basis_size, Htp, Order, TimeGraph};

const SEED: u64 = 0xacce_0001;

type Criterion = (&'static str, fn() -> Outcome, bool);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn order(n: usize) -> Order {
    Order::new(n).unwrap()
}

fn base_basis() -> Outcome {
    let start = Instant::now();
    let b = match base_basis_5() {
        Ok(b) => b,
        Err(e) => return outcome(false, format!("load failed: {e}")),
    };
    let htps: Vec<Htp> = b.htps().cloned().collect();
    let mut sorted: Vec<&[usize]> = htps.iter().map(Htp::perm).collect();
    sorted.sort();
    sorted.dedup();
    let distinct = sorted.len() == htps.len();
    let pivots = find_pivot_sequence(&htps).is_ok();
    let vectors: Vec<Vector> = htps.iter().map(|h| htp_vector(order(5), h).unwrap().into_vector()).collect();
    let r = rank(&vectors).unwrap();
    let elapsed = start.elapsed();
    let ok = htps.len() == 61 && distinct && pivots && r == 61 && r == basis_size(5) && elapsed < Duration::from_secs(5);
    outcome(
        ok,
        format!("rows={} distinct={distinct} pivots={pivots} rank={r} d_5={} in {elapsed:.2?}", htps.len(), basis_size(5)),
    )
}

fn enumeration() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, htps, limit) in [(5, 120, 10), (6, 720, 120), (7, 5040, 900)] {
        let start = Instant::now();
        let d = full_dimension(order(n), 7).unwrap();
        let elapsed = start.elapsed();
        let good = d.htp_count == htps && d.dimension == basis_size(n) && elapsed < Duration::from_secs(limit);
        ok &= good;
        parts.push(format!("n={n}: htps={} dim={} (want {}) in {elapsed:.2?}", d.htp_count, d.dimension, basis_size(n)));
    }
    outcome(ok, parts.join("; "))
}

fn annihilators() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 5..=8 {
        let o = order(n);
        let d = verify_duality(o, SEED).unwrap();
        let identities = d.checks.iter().filter(|c| c.name != "htp_annihilation").all(|c| c.passed());
        let deficit = edge_count(o) - d.family_rank;
        let good = identities
            && d.family_rank == annihilator_count(n)
            && deficit == basis_size(n)
            && upper_bound(o).ok() == Some(basis_size(n));
        ok &= good;
        parts.push(format!("n={n}: identities={identities} rank={} |E|-rank={deficit}", d.family_rank));
    }
    outcome(ok, parts.join("; "))
}

fn builder() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, want) in [(6, 121), (7, 211), (8, 337), (9, 505)] {
        let start = Instant::now();
        let b = build(order(n)).unwrap();
        let report = verify_upper_triangular(&b);
        let elapsed = start.elapsed();
        let good = b.len() == want
            && want == basis_size(n)
            && report.passed()
            && report.rank == want
            && b.htps().all(|h| h.order() == order(n))
            && (n < 9 || elapsed < Duration::from_secs(600));
        ok &= good;
        parts.push(format!("n={n}: rows={} rank={} verified={} in {elapsed:.2?}", b.len(), report.rank, report.passed()));
    }
    outcome(ok, parts.join("; "))
}

fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vector {
    let v: Vec<i64> = (0..dim).map(|_| if rng.gen_bool(0.6) { 0 } else { rng.gen_range(-3..=3) }).collect();
    Vector::from_ints(&v)
}

fn complement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let zero = Rational::from_integer(0.into());
    let mut failures = 0;
    for _ in 0..100 {
        let dim = rng.gen_range(1..=40);
        let gens: Vec<Vector> = (0..rng.gen_range(0..=12)).map(|_| random_vector(&mut rng, dim)).collect();
        let v = Subspace::new(dim, gens.clone()).unwrap();
        let a = annihilator_basis(&v, dim).unwrap();
        let mut good = rank(&gens).unwrap() + rank(a.generators()).unwrap() == dim;

        let fs = v.independent_generators();
        let gs = gram_schmidt(&fs).unwrap();
        for i in 0..gs.len() {
            for j in 0..i {
                good &= inner_product(&gs[i], &gs[j]).unwrap() == zero;
            }
            let f_prefix = Subspace::new(dim, fs[..=i].to_vec()).unwrap();
            let g_prefix = Subspace::new(dim, gs[..=i].to_vec()).unwrap();
            good &= in_span(&gs[i], &f_prefix).unwrap() && in_span(&fs[i], &g_prefix).unwrap();
        }
        failures += usize::from(!good);
    }
    outcome(failures == 0, format!("100 random subspaces, |X| <= 40: {failures} failures"))
}

fn consistency() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 5..=8 {
        let o = order(n);
        let b = if n == 5 { base_basis_5() } else { build(o) }.unwrap();
        let family = AnnihilatorFamily::new(o).unwrap();
        let bad = b.htps().filter(|h| !family.annihilates(h)).count();
        ok &= bad == 0;
        parts.push(format!("n={n}: {} rows x {} annihilators, {bad} nonzero", b.len(), family.len()));
    }
    outcome(ok, parts.join("; "))
}

fn random_subgraph(rng: &mut ChaCha8Rng, o: Order, keep: f64) -> TimeGraph {
    TimeGraph::from_edges(o, o.edges().filter(|_| rng.gen_bool(keep))).unwrap()
}

fn analyzer() -> Outcome {
    let o = order(5);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut mismatches = 0;
    let mut hamiltonian = 0;
    for k in 0..200 {
        let keep = [0.3, 0.45, 0.6, 0.9][k % 4];
        let g = random_subgraph(&mut rng, o, keep);
        let h = is_hamiltonian(&g, 7).unwrap();
        let d = dimension_of(&g, 7).unwrap().dimension;
        hamiltonian += usize::from(h);
        mismatches += usize::from(h != (d > 0));
    }
    let mut non_monotone = 0;
    for _ in 0..50 {
        let big = random_subgraph(&mut rng, o, 0.85);
        let small = TimeGraph::from_edges(o, big.edges().filter(|_| rng.gen_bool(0.85))).unwrap();
        let (db, ds) = (dimension_of(&big, 7).unwrap().dimension, dimension_of(&small, 7).unwrap().dimension);
        non_monotone += usize::from(ds > db);
    }
    let full = dimension_of(&TimeGraph::complete(o), 7).unwrap().dimension;
    let single = dimension_of(&TimeGraph::from_edges(o, Htp::identity(o).edges()).unwrap(), 7).unwrap().dimension;
    let sourceless = dimension_of(&TimeGraph::from_edges(o, o.edges().filter(|e| e.day != 0)).unwrap(), 7)
        .unwrap()
        .dimension;
    let ok = mismatches == 0 && non_monotone == 0 && (full, single, sourceless) == (61, 1, 0);
    outcome(
        ok,
        format!(
            "200 subgraphs ({hamiltonian} hamiltonian): {mismatches} mismatches; 50 nested pairs: {non_monotone} violations; full/single/sourceless = {full}/{single}/{sourceless}"
        ),
    )
}

fn scaling() -> Outcome {
    let mut parts = Vec::new();
    for n in 6..=9 {
        let start = Instant::now();
        build(order(n)).unwrap();
        let secs = start.elapsed().as_secs_f64();
        parts.push(format!("n={n}: {:.1} ms, {:.3} us/n^5", secs * 1e3, secs * 1e6 / (n as f64).powi(5)));
    }
    outcome(true, parts.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 order 5 base basis", base_basis, true),
        ("2 dimension by enumeration", enumeration, true),
        ("3 annihilator certification", annihilators, true),
        ("4 builder end-to-end", builder, true),
        ("5 annihilator complement and Gram-Schmidt", complement, true),
        ("6 basis rows annihilated", consistency, true),
        ("7 analyzer properties", analyzer, true),
        ("8 builder scaling (informational)", scaling, false),
    ];
    let mut failed = 0;
    for (name, run, gating) in criteria {
        let r = run();
        let tag = match (r.passed, gating) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "INFO",
        };
        failed += usize::from(!r.passed && gating);
        println!("{tag} criterion {name}: {}", r.detail);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

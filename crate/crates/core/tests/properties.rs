use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use timegraph_core::annihilators::{vertex_annihilator, AnnihilatorFamily};
use timegraph_core::graph::{edge_count, enumerate_htps, htp_vector, timepath_vector, CitySequence, Edge, Htp, TimeGraph};
use timegraph_core::linalg::{
    annihilator_basis, annihilator_basis_gram_schmidt, bareiss_rank, gram_schmidt, in_span, inner_product, rank,
    rank_mod_p, rank_with, PivotOrder, RankOptions, Rational, Subspace, Vector,
};
use timegraph_core::{basis_size, Order};

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn vector(dim: usize) -> impl Strategy<Value = Vector> {
    // Mostly-sparse entries so that dependent generator sets come up often.
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], dim).prop_map(|v| Vector::from_ints(&v))
}

fn subspace_case() -> impl Strategy<Value = (usize, Vec<Vector>)> {
    (1usize..=40).prop_flat_map(|dim| (Just(dim), prop::collection::vec(vector(dim), 0..=12)))
}

fn rational_vector(dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(rational(), dim).prop_map(|v| Vector::from_dense(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn inner_product_symmetric_and_bilinear(
        (u, v, w) in (1usize..=12).prop_flat_map(|d| (rational_vector(d), rational_vector(d), rational_vector(d))),
        a in rational(),
        b in rational(),
    ) {
        prop_assert_eq!(inner_product(&u, &v).unwrap(), inner_product(&v, &u).unwrap());
        let left = u.scale(&a).add(&v.scale(&b)).unwrap();
        let lhs = inner_product(&left, &w).unwrap();
        let rhs = a * inner_product(&u, &w).unwrap() + b * inner_product(&v, &w).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(inner_product(&u, &u).unwrap() == Rational::from_integer(0.into()), u.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn annihilator_dimension_complements_rank((dim, gens) in subspace_case()) {
        let v = Subspace::new(dim, gens.clone()).unwrap();
        let a = annihilator_basis(&v, dim).unwrap();
        prop_assert_eq!(rank(&gens).unwrap() + rank(a.generators()).unwrap(), dim);
        for f in a.generators() {
            for g in &gens {
                prop_assert_eq!(inner_product(f, g).unwrap(), Rational::from_integer(0.into()));
            }
        }
    }

    #[test]
    fn gram_schmidt_route_spans_the_same_annihilator((dim, gens) in subspace_case()) {
        let v = Subspace::new(dim, gens).unwrap();
        let a = annihilator_basis(&v, dim).unwrap();
        let b = annihilator_basis_gram_schmidt(&v, dim).unwrap();
        prop_assert_eq!(b.generators().len(), dim - v.rank());
        prop_assert!(a.same_span(&b).unwrap());
    }

    #[test]
    fn gram_schmidt_is_orthogonal_and_preserves_prefix_spans((dim, gens) in subspace_case()) {
        let fs = Subspace::new(dim, gens).unwrap().independent_generators();
        let gs = gram_schmidt(&fs).unwrap();
        prop_assert_eq!(gs.len(), fs.len());
        for i in 0..gs.len() {
            prop_assert!(!gs[i].is_zero());
            for j in 0..i {
                prop_assert_eq!(inner_product(&gs[i], &gs[j]).unwrap(), Rational::from_integer(0.into()));
            }
            let f_prefix = Subspace::new(dim, fs[..=i].to_vec()).unwrap();
            let g_prefix = Subspace::new(dim, gs[..=i].to_vec()).unwrap();
            prop_assert!(f_prefix.same_span(&g_prefix).unwrap());
        }
        prop_assert_eq!(rank(&fs).unwrap(), fs.len());
    }

    #[test]
    fn rank_kernels_agree((_dim, gens) in subspace_case()) {
        let exact = rank(&gens).unwrap();
        prop_assert_eq!(bareiss_rank(&gens).unwrap(), exact);
        prop_assert_eq!(rank_with(&gens, RankOptions { pivot: PivotOrder::Highest, modular_prepass: false }).unwrap(), exact);
        prop_assert_eq!(rank_with(&gens, RankOptions { pivot: PivotOrder::Lowest, modular_prepass: true }).unwrap(), exact);
        prop_assert!(rank_mod_p(&gens).unwrap() <= exact);
    }

    #[test]
    fn span_membership_of_combinations((dim, gens) in subspace_case(), coeffs in prop::collection::vec(-3i64..=3, 12)) {
        let s = Subspace::new(dim, gens.clone()).unwrap();
        let mut combo = Vector::zeros(dim);
        for (g, c) in gens.iter().zip(&coeffs) {
            combo = combo.add_scaled(&Rational::from_integer((*c).into()), g).unwrap();
        }
        prop_assert!(in_span(&combo, &s).unwrap());
        // Anything orthogonal to the span and nonzero is outside it.
        for f in annihilator_basis(&s, dim).unwrap().generators() {
            prop_assert!(!in_span(f, &s).unwrap());
        }
    }

    #[test]
    fn htp_vector_weight(n in 1usize..=9, seed: u64) {
        let order = Order::new(n).unwrap();
        let h = Htp::random(order, &mut ChaCha8Rng::seed_from_u64(seed));
        let v = htp_vector(order, &h).unwrap();
        prop_assert_eq!(v.vector().nnz(), n + 1);
        prop_assert!(v.vector().iter().all(|(_, x)| *x == Rational::from_integer(1.into())));
    }

    #[test]
    fn enumeration_matches_edge_containment(seed: u64, keep in 0.55f64..0.95) {
        let order = Order::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = TimeGraph::from_edges(order, order.edges().filter(|_| rng.gen_bool(keep))).unwrap();
        let found: Vec<Htp> = enumerate_htps(&g).collect();
        let expected: Vec<Htp> = enumerate_htps(&TimeGraph::complete(order)).filter(|h| g.contains_htp(h)).collect();
        prop_assert_eq!(found, expected);
    }
}

fn random_sequence(n: usize, rng: &mut impl Rng) -> CitySequence {
    let mut cities = Vec::with_capacity(n);
    while cities.len() < n {
        let c = rng.gen_range(1..=n);
        if cities.last() != Some(&c) {
            cities.push(c);
        }
    }
    CitySequence::new(cities).unwrap()
}

#[test]
fn vertex_annihilators_kill_every_time_path() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let zero = Rational::from_integer(0.into());
    let order = Order::new(5).unwrap();
    for h in enumerate_htps(&TimeGraph::complete(order)) {
        let v = htp_vector(order, &h).unwrap();
        for i in 1..=5 {
            for t in 1..=5 {
                assert_eq!(v.inner(&vertex_annihilator(order, i, t).unwrap()).unwrap(), zero);
            }
        }
    }
    for _ in 0..1000 {
        let n = rng.gen_range(5..=8);
        let order = Order::new(n).unwrap();
        let s = random_sequence(n, &mut rng);
        let v = timepath_vector(order, &s).unwrap();
        assert_eq!(v.vector().nnz(), n + 1);
        for i in 1..=n {
            for t in 1..=n {
                assert_eq!(v.inner(&vertex_annihilator(order, i, t).unwrap()).unwrap(), zero, "{s:?} at ({i},{t})");
            }
        }
    }
}

#[test]
fn family_rank_leaves_room_for_the_basis() {
    for n in 5..=9 {
        let order = Order::new(n).unwrap();
        let family = AnnihilatorFamily::new(order).unwrap();
        assert_eq!(family.rank(), n * n + n - 1);
        assert_eq!(edge_count(order) - family.rank(), basis_size(n));
    }
}

#[test]
fn edge_indices_cover_the_range() {
    for n in 1..=8 {
        let order = Order::new(n).unwrap();
        let mut seen = vec![false; edge_count(order)];
        for e in order.edges() {
            let k = timegraph_core::graph::edge_index(order, e).unwrap();
            assert!(!std::mem::replace(&mut seen[k], true));
        }
        assert!(seen.into_iter().all(|s| s));
        assert!(timegraph_core::graph::edge_index(order, Edge::new(0, 0, 0)).is_err());
    }
}

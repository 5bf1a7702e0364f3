mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use btk_core::algebra::field::{Field, PrimeField};
use btk_core::algebra::matrix::MatOps;
use btk_core::algebra::module::GradedFreeModule;
use btk_core::algebra::monomial::{monomials_of_degree, Mono};
use btk_core::algebra::ring::{Poly, Ring};
use btk_core::catalog;
use btk_core::cohomology::bundle::BundleOnP;
use btk_core::criteria::horrocks_test;
use btk_core::syzygy::resolution::coker_hilbert;
use btk_core::tower::{
    babylonian_pipeline, choose_point, neighborhood_decompose, AmbientSplit, PipelineOptions, PipelineVerdict,
    PointChoice, TowerIdeal,
};

fn ring(nv: usize) -> Ring<PrimeField> {
    Ring::new(PrimeField::default(), nv)
}

fn twists_strategy(max_rank: usize, spread: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-spread..=spread, 1..=max_rank).prop_map(|mut t| {
        t.sort_unstable();
        t
    })
}

fn random_form(r: &Ring<PrimeField>, d: i64, rng: &mut ChaCha8Rng) -> Poly<u32> {
    let terms = monomials_of_degree(r.nvars, d).into_iter().map(|m| (m, r.field.random(rng))).collect();
    r.from_terms(terms)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn neighborhood_dims_are_binomial(m in 1usize..=5, j in 0usize..=6) {
        let a = AmbientSplit::new(2, m).unwrap();
        let d = neighborhood_decompose(&a, j);
        prop_assert_eq!(d.len(), j + 1);
        for (t, (tw, dim)) in d.into_iter().enumerate() {
            prop_assert_eq!(tw, -(t as i64));
            prop_assert_eq!(dim, common::binom(m as i64 - 1 + t as i64, t as i64));
        }
    }

    #[test]
    fn powers_of_the_complement_ideal(m in 1usize..=3, i in 0i64..=3, d in 0i64..=8) {
        let n = 2usize;
        let r = ring(n + m + 1);
        let gens: Vec<Poly<u32>> = monomials_of_degree(m, i + 1)
            .into_iter()
            .map(|mu| {
                let mut e = vec![0u32; n + 1];
                e.extend(mu.exponents(m));
                r.monomial(Mono::from_exponents(&e), 1)
            })
            .collect();
        let mat = MatOps::new(&r)
            .from_entries(GradedFreeModule::new(vec![i + 1; gens.len()]), GradedFreeModule::new(vec![0]), &[gens])
            .unwrap();
        let hs = coker_hilbert(&r, &mat).unwrap();
        let want: i64 = (0..=i)
            .map(|j| common::binom(m as i64 - 1 + j, j) * common::binom(n as i64 + d - j, n as i64))
            .sum();
        prop_assert_eq!(hs.value(d), want);
    }

    #[test]
    fn line_bundle_sums_match_closed_forms(n in 2usize..=3, twists in twists_strategy(3, 3), a in -6i64..=6) {
        let r = ring(n + 1);
        let b = BundleOnP::new(&r, &catalog::split::<PrimeField>(&twists)).unwrap();
        let oracle = common::line_sum(n, &twists).cohomology(a);
        for (p, want) in oracle.into_iter().enumerate() {
            prop_assert_eq!(b.coh_series(p, a).unwrap(), want);
            prop_assert_eq!(b.coh_slice(p, a).unwrap(), want);
        }
    }

    #[test]
    fn disguised_sums_split_with_their_twists(nv in 3usize..=4, twists in twists_strategy(3, 3), seed in any::<u64>()) {
        let r = ring(nv);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = catalog::disguise(&r, &catalog::split::<PrimeField>(&twists), 2, &mut rng);
        let b = BundleOnP::new(&r, &phi).unwrap();
        let c = horrocks_test(&b).unwrap();
        prop_assert!(c.is_split());
        prop_assert_eq!(c.twists, twists);
    }

    #[test]
    fn euler_characteristic_is_the_hilbert_polynomial(
        name in prop::sample::select(vec!["tangent", "cotangent", "end:tangent", "sum:-1,2"]),
        a in -5i64..=5,
    ) {
        let r = ring(3);
        let b = BundleOnP::new(&r, &catalog::build(&r, name).unwrap()).unwrap();
        prop_assert_eq!(b.euler_characteristic(a).unwrap(), b.hilbert().poly_value(a));
    }

    #[test]
    fn serre_duality_on_twisted_tangent(a in -6i64..=4, shift in -2i64..=2) {
        let r = ring(4);
        let b = BundleOnP::new(&r, &catalog::tangent(&r)).unwrap().twist(shift).unwrap();
        let dual = b.dual().unwrap();
        for p in 0..=3usize {
            prop_assert_eq!(b.coh_series(p, a).unwrap(), dual.coh_series(3 - p, -a - 4).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn chosen_points_lie_on_the_zero_locus(m in 2usize..=4, degs in prop::collection::vec(1i64..=2, 1..=3), seed in any::<u64>()) {
        let r = ring(m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = degs.len().min(m - 1);
        let gens: Vec<Poly<u32>> = degs[..s].iter().map(|&d| random_form(&r, d, &mut rng)).collect();
        let j = TowerIdeal::generated_by(&r, gens.clone()).unwrap();
        let first = choose_point(&j, seed).unwrap();
        prop_assert_eq!(&first, &choose_point(&j, seed).unwrap());
        match first {
            PointChoice::Found(w) => {
                for g in &gens {
                    prop_assert!(w.field.is_zero(w.eval(&r, g)));
                }
            }
            PointChoice::BoundViolation { .. } => prop_assert!(false, "s ≤ m − 1 cannot violate the bound"),
        }
    }

    #[test]
    fn pipeline_recovers_split_bundles(m in 1usize..=3, twists in twists_strategy(3, 2), seed in any::<u64>()) {
        let a = AmbientSplit::new(2, m).unwrap();
        let k = PrimeField::default();
        let r = a.big(&k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = catalog::disguise(&r, &catalog::split::<PrimeField>(&twists), 1, &mut rng);
        let opts = PipelineOptions { seed, i_max: None };
        let rec = babylonian_pipeline(&a, &phi, &k, opts).unwrap();
        prop_assert_eq!(&rec.verdict, &PipelineVerdict::Split { twists });
        prop_assert!(rec.ideal.generators.len() <= rec.kempf_sum);
        let again = babylonian_pipeline(&a, &phi, &k, opts).unwrap();
        prop_assert_eq!(rec.audit, again.audit);
    }
}

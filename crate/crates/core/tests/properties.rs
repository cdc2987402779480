use ce_lab::algebra::Algebra;
use ce_lab::analyzers::{all_idempotents_central, is_centrally_essential, zero_divisors_symmetric, Strategy};
use ce_lab::oracle::{random_associative_unital_algebra, random_unital_algebra};
use ce_lab::ScalarRing;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn f(p: u64) -> ScalarRing {
    ScalarRing::prime_field(p).unwrap()
}

fn random(p: u64, dim: usize, seed: u64) -> Algebra {
    random_unital_algebra(&f(p), dim, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

fn ce(a: &Algebra) -> bool {
    is_centrally_essential(a, Strategy::Enumerate).unwrap().holds()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn json_is_byte_stable(p in prop::sample::select(vec![2u64, 3, 5]), dim in 1usize..=4, seed: u64) {
        let a = random(p, dim, seed);
        let text = a.to_json();
        let back = Algebra::from_json(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn products_are_ce_iff_factors_are(d1 in 1usize..=2, d2 in 1usize..=2, s1: u64, s2: u64) {
        let (a, b) = (random(2, d1, s1), random(2, d2, s2));
        let sum = a.direct_sum(&b).unwrap();
        prop_assert_eq!(ce(&sum), ce(&a) && ce(&b));
        prop_assert_eq!(is_centrally_essential(&sum, Strategy::Socle).unwrap().holds(), ce(&sum));
    }

    #[test]
    fn associative_ce_consequences(p in prop::sample::select(vec![2u64, 3]), dim in 1usize..=3, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = if p == 3 { dim.min(2) } else { dim };
        if let Some(a) = random_associative_unital_algebra(&f(p), dim, &mut rng).unwrap() {
            if ce(&a) {
                prop_assert!(all_idempotents_central(&a).unwrap());
                prop_assert!(zero_divisors_symmetric(&a).unwrap());
            }
        }
    }
}

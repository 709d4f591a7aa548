use eqgc::forms::{
    hyperbolic, invariants, random_form, random_unimodular, standard_hyperbolic, symplectic_normalize, BilinearForm,
};
use eqgc::homology::IntegerMatrix;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix(rows: &[Vec<i64>]) -> IntegerMatrix {
    IntegerMatrix::from_i64(rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariants_survive_unimodular_congruence(seed in any::<u64>(), n in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&mut rng, n, 1, 3);
        let p = random_unimodular(&mut rng, n, 8, 2);
        let g = f.congruent(&p).unwrap();
        prop_assert_eq!(invariants(&f), invariants(&g));
    }

    #[test]
    fn hyperbolic_forms_are_even(rows in prop::collection::vec(prop::collection::vec(-6i64..7, 3), 3)) {
        let h = hyperbolic(&matrix(&rows), 1).unwrap();
        prop_assert_eq!(invariants(&h).even, Some(true));
        let (p, q) = invariants(&h).signature.unwrap();
        // H(f) restricted to the first summand vanishes, so p, q <= 3
        prop_assert!(p <= 3 && q <= 3);
    }

    #[test]
    fn symplectic_normal_form_round_trip(seed in any::<u64>(), n in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let j = standard_hyperbolic(n, -1);
        let p = random_unimodular(&mut rng, 2 * n, 10, 3);
        let a = j.congruent(&p).unwrap();
        let normal = symplectic_normalize(&a).unwrap();
        prop_assert_eq!(normal.n, n);
        prop_assert_eq!(a.congruent(&normal.change_of_basis).unwrap().gram, j.gram);
    }
}

#[test]
fn degenerate_and_odd_rank_inputs_are_rejected() {
    let zero = BilinearForm::zero(-1);
    assert_eq!(symplectic_normalize(&zero).unwrap().n, 0);
    let twice = hyperbolic(&matrix(&[vec![2]]), -1).unwrap();
    assert!(symplectic_normalize(&twice).is_err());
    assert!(symplectic_normalize(&BilinearForm::diagonal_unit(1)).is_err());
}

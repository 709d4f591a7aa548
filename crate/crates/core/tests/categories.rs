use eqgc::category::{
    compare_sd_nerve, compare_sym, d_construction, nerve, sd_category, verify_d_construction, Duality, FiniteCategory,
};
use eqgc::monoid::{corpus, cyclic, real_bar};
use eqgc::simplicial::{sd, Subdivision};
use eqgc::category::Nerve;
use eqgc::simplicial::materialize;
use proptest::prelude::*;

#[test]
fn corpus_monoid_categories_satisfy_every_comparison() {
    for (name, m) in corpus() {
        let c = FiniteCategory::from_monoid(&m);
        let t = Duality::from_monoid(&m, &c).unwrap();
        assert!(compare_sd_nerve(&c, 2).unwrap().isomorphic, "{name}");
        assert!(compare_sym(&c, &t).unwrap().agree, "{name}");
        assert!(verify_d_construction(&c, &t).unwrap().holds, "{name}");
    }
}

#[test]
fn sd_of_a_monoid_nerve_counts() {
    // objects of Sd C are the arrows, morphisms the 3-chains
    let m = cyclic(3);
    let c = FiniteCategory::from_monoid(&m);
    let s = sd_category(&c);
    assert_eq!(s.category.object_count(), 3);
    assert_eq!(s.category.morphism_count(), 27);
    let via_tables = sd(&nerve(&c, 3).set, 1).unwrap();
    let via_labels = materialize(&Subdivision(Nerve(&c)), 1).unwrap().set;
    assert_eq!(via_tables, via_labels);
    assert_eq!(via_tables.count(1), real_bar(&m, 3).unwrap().0.set.count(3));
}

#[test]
fn strictifying_twice_stays_strict() {
    // C2 with T = id and eta = g is a non-strict duality
    let m = cyclic(2);
    let c = FiniteCategory::from_monoid(&m);
    let t = Duality::new(&c, vec![0], vec![0, 1], vec![1]).unwrap();
    assert!(!t.is_strict(&c));
    let d = d_construction(&c, &t).strictified;
    assert_eq!(d.category.object_count(), 2);
    let r = verify_d_construction(&d.category, &d.duality).unwrap();
    assert!(r.holds && r.strict);
    // both objects of D C2 are isomorphic, with two isomorphisms each way
    assert_eq!(r.objects, 8);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn posets_with_reversal(n in 0usize..4) {
        let p = FiniteCategory::poset(n);
        let t = Duality::poset_reversal(&p).unwrap();
        prop_assert!(compare_sd_nerve(&p, 2).unwrap().isomorphic);
        prop_assert!(compare_sym(&p, &t).unwrap().agree);
        let r = verify_d_construction(&p, &t).unwrap();
        prop_assert!(r.holds);
        prop_assert_eq!(r.objects, n + 1);
    }
}

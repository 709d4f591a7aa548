use eqgc::homology::{homology_through, AbelianGroup};
use eqgc::monoid::{bar, cyclic, max_monoid, symmetric3};
use eqgc::simplicial::{circle, diagonal, point};
use eqgc::monoid::{two_sided_bar, two_sided_bar_bisimplicial, LeftAction, RightAction};

/// H_q(B Z/n) is Z, then Z/n in odd degrees and 0 in positive even degrees.
fn cyclic_group_homology(n: u64, q: usize) -> AbelianGroup {
    match q {
        0 => AbelianGroup::free(1),
        q if q % 2 == 1 => AbelianGroup::cyclic(n),
        _ => AbelianGroup::trivial(),
    }
}

#[test]
fn cyclic_groups_match_the_closed_form() {
    for (n, degree) in [(2u64, 5), (3, 4), (4, 4), (5, 3)] {
        let groups = homology_through(&bar(&cyclic(n as usize), degree + 1).set, degree).unwrap();
        let expected: Vec<_> = (0..=degree).map(|q| cyclic_group_homology(n, q)).collect();
        assert_eq!(groups, expected, "C{n}");
    }
}

#[test]
fn symmetric_group_low_degrees() {
    // H_1 = S3^ab = Z/2, H_2 = 0, H_3 = Z/6
    let groups = homology_through(&bar(&symmetric3(), 4).set, 3).unwrap();
    assert_eq!(
        groups,
        vec![AbelianGroup::free(1), AbelianGroup::cyclic(2), AbelianGroup::trivial(), AbelianGroup::cyclic(6)]
    );
}

#[test]
fn contractible_and_spherical_inputs() {
    assert_eq!(homology_through(&point(3), 2).unwrap(), vec![AbelianGroup::free(1), AbelianGroup::trivial(), AbelianGroup::trivial()]);
    assert_eq!(homology_through(&circle(3), 2).unwrap(), vec![AbelianGroup::free(1), AbelianGroup::free(1), AbelianGroup::trivial()]);
    // ({0, 1}, max) has an absorbing element, so B M is contractible
    let groups = homology_through(&bar(&max_monoid(), 4).set, 3).unwrap();
    assert!(groups[1..].iter().all(AbelianGroup::is_trivial));
}

#[test]
fn free_two_sided_bar_is_acyclic() {
    for m in [cyclic(3), symmetric3()] {
        let total = two_sided_bar(&RightAction::regular(&m), &m, &LeftAction::point(&m), 3);
        let bi = two_sided_bar_bisimplicial(&RightAction::regular(&m), &m, &LeftAction::point(&m), 3);
        assert_eq!(diagonal(&bi.set, 3).unwrap(), total.set);
        let groups = homology_through(&total.set, 2).unwrap();
        assert_eq!(groups[0], AbelianGroup::free(1));
        assert!(groups[1..].iter().all(AbelianGroup::is_trivial));
    }
}

use eqindex_testkit as common;

use eqindex::group::Presentation;
use eqindex::{
    fixed_indices_from_index, gsv_assemble_from_dims, index_from_fixed_indices, index_from_fixed_indices_conj,
    index_from_fixed_indices_sub, poincare_hopf_check, Burnside, FixedSetIndexData, GsvDimensions, SingularOrbitDatum,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn round_trip(g in 0usize..5, seed in any::<u64>()) {
        let (_, l) = common::ring_groups().swap_remove(g);
        let b = common::random_element(&l, &mut ChaCha8Rng::seed_from_u64(seed), 50);
        let data = fixed_indices_from_index(&b);
        prop_assert_eq!(index_from_fixed_indices(&data).unwrap(), b.clone());
        prop_assert_eq!(index_from_fixed_indices_sub(&data).unwrap(), b.clone());
        prop_assert_eq!(index_from_fixed_indices_conj(&data).unwrap(), b);
    }
}

#[test]
fn fixed_indices_are_marks() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (_, l) in common::ring_groups() {
        let b = common::random_element(&l, &mut rng, 9);
        let data = fixed_indices_from_index(&b);
        for h in l.ids() {
            assert_eq!(data.get(h), b.mark(l.class_of(h)));
        }
    }
}

#[test]
fn class_data_without_subgroup_data_disagreement_is_reported() {
    let l = common::lattice(Presentation::symmetric(3));
    let b = Burnside::basis(&l, l.trivial_class());
    let data = fixed_indices_from_index(&b);
    let mut per_class = data.per_class().unwrap().to_vec();
    per_class[0] += 1;
    let corrupted = FixedSetIndexData::new(&l, data.per_subgroup().to_vec(), Some(per_class)).unwrap();
    assert!(index_from_fixed_indices(&corrupted).is_err());
}

#[test]
fn quaternion_group() {
    let l = common::lattice(common::quaternion());
    assert_eq!(l.order(), 8);
    assert_eq!(l.len(), 6);
    assert_eq!(l.num_classes(), 6);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let b = common::random_element(&l, &mut rng, 20);
        let data = fixed_indices_from_index(&b);
        assert_eq!(index_from_fixed_indices(&data).unwrap(), b);
    }
    let pair_sum = Burnside::basis(&l, l.trivial_class())
        .multiply(&Burnside::one(&l))
        .unwrap();
    assert_eq!(pair_sum.r_k(1).unwrap(), 1);
}

#[test]
fn rotation_on_the_sphere() {
    let l = common::lattice(Presentation::cyclic(5));
    let chi = Burnside::one(&l).scale(&2);
    let poles = vec![SingularOrbitDatum::fixed_point(&l, l.whole(), 1); 2];
    let report = poincare_hopf_check(&chi, &poles).unwrap();
    assert!(report.pass);
    assert!(report.discrepancy.is_zero());
    let wrong = vec![SingularOrbitDatum::fixed_point(&l, l.whole(), 1)];
    assert!(!poincare_hopf_check(&chi, &wrong).unwrap().pass);
}

#[test]
fn gsv_assembly_on_trivial_group_is_milnor_count() {
    let l = eqindex::SubgroupLattice::trivial();
    let data = GsvDimensions {
        fixed_dims: vec![2],
        dims: vec![Some(4)],
    };
    let b = gsv_assemble_from_dims(&l, &data, 0).unwrap();
    assert_eq!(b, Burnside::one(&l).scale(&4));
}

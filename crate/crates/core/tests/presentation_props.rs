use proptest::prelude::*;

use wicket_core::Error;

use wicket_core::presentation::{
    abelian_identities, abelianization, cyclic_presentation, handlebody_presentation, torsion_u64,
    verify_relations, RelationStatus, DEFAULT_MAX_GENUS,
};

fn shuffled(len: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..len).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn abelianization_ignores_ordering(
        (g, perm, order) in (2usize..=4).prop_flat_map(|g| {
            let p = handlebody_presentation(g).unwrap();
            (Just(g), shuffled(p.generator_count()), shuffled(p.relations.len()))
        })
    ) {
        let p = handlebody_presentation(g).unwrap();
        let q = p.permuted(&perm, &order);
        let a = abelianization(&q);
        prop_assert_eq!(a.free_rank, 1);
        prop_assert_eq!(torsion_u64(&a), vec![2, 2]);
    }
}

#[test]
fn abelianization_for_genus_two_to_ten() {
    for g in 2..=10 {
        let p = handlebody_presentation(g).unwrap();
        let a = abelianization(&p);
        assert_eq!(a.to_string(), "Z + Z/2 + Z/2", "g={g}");
        assert!(abelian_identities(&p).unwrap().all());
    }
}

#[test]
fn genus_below_two_rejected() {
    assert!(handlebody_presentation(0).is_err());
    assert!(handlebody_presentation(1).is_err());
}

#[test]
fn cyclic_groups() {
    assert_eq!(abelianization(&cyclic_presentation(None)).to_string(), "Z");
    assert_eq!(
        torsion_u64(&abelianization(&cyclic_presentation(Some(6)))),
        vec![6]
    );
}

#[test]
fn disk_relations_hold_for_genus_two_and_three() {
    for g in [2, 3] {
        let r = verify_relations(g, DEFAULT_MAX_GENUS).unwrap();
        assert!(r.disk_relations_hold(), "g={g}");
        assert!(r.all_acceptable(), "g={g}");
        for c in r.checks.iter().filter(|c| c.family <= 8) {
            assert_eq!(
                c.status,
                RelationStatus::HoldsInBraidGroup,
                "{}",
                c.relation
            );
        }
    }
}

#[test]
fn beyond_max_genus_is_a_resource_limit() {
    assert!(matches!(
        verify_relations(3, 2),
        Err(Error::ResourceLimit(_))
    ));
}

use proptest::prelude::*;

use iquot::closure::closure;
use iquot::enumerate::{enumerate_up_to, Filters};
use iquot::hull::{has_lc, inverse_hull};
use iquot::inverse::recognize_inverse;
use iquot::iso::is_morphism;
use iquot::lifting::hull_embedding;
use iquot::relations::{green, r_star};
use iquot::table::FiniteSemigroup;
use iquot::{InverseSemigroup, PartialBijection};

fn left_ample() -> &'static [FiniteSemigroup] {
    static CELL: std::sync::OnceLock<Vec<FiniteSemigroup>> = std::sync::OnceLock::new();
    CELL.get_or_init(|| enumerate_up_to(4, Filters::left_ample(), true).unwrap())
}

fn chart(n: usize) -> impl Strategy<Value = PartialBijection> {
    (Just(n), prop::collection::vec(prop::option::of(0..n), n)).prop_map(|(n, images)| {
        let mut used = vec![false; n];
        let entries: Vec<(usize, usize)> = images
            .into_iter()
            .enumerate()
            .filter_map(|(s, i)| {
                i.filter(|&j| !std::mem::replace(&mut used[j], true))
                    .map(|j| (s, j))
            })
            .collect();
        PartialBijection::new(n, &entries).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chart_closures_are_inverse(gens in prop::collection::vec(chart(3), 1..3)) {
        let cs = closure(&gens, true, 10_000).unwrap();
        let q = recognize_inverse(&cs.semigroup).unwrap();
        for a in q.elements() {
            let ai = q.inv(&a);
            prop_assert_eq!(q.mul(&q.mul(&a, &ai), &a), a);
            prop_assert_eq!(q.inv(&ai), a);
        }
    }

    #[test]
    fn hull_embeds_and_factors(idx in 0usize..1000) {
        let s = &left_ample()[idx % left_ample().len()];
        let h = inverse_hull(s).unwrap();
        prop_assert!(is_morphism(s, h.inverse.semigroup(), &h.embedding));
        let mut image = h.embedding.clone();
        image.sort_unstable();
        image.dedup();
        prop_assert_eq!(image.len(), s.order());
        prop_assert_eq!(h.is_i_order, has_lc(s));
        if has_lc(s) {
            prop_assert!(hull_embedding(&h).unwrap().is_straight().unwrap());
        }
    }

    #[test]
    fn green_relations_are_equivalences(idx in 0usize..1000) {
        let s = &left_ample()[idx % left_ample().len()];
        let g = green(s);
        for rel in [&g.r, &g.l, &g.h, &g.d, &g.j] {
            prop_assert!(rel.is_equivalence());
        }
        prop_assert!(g.h.is_subset(&g.r) && g.r.is_subset(&g.d) && g.d.is_subset(&g.j));
        prop_assert!(g.r.is_subset(&r_star(s)));
    }
}

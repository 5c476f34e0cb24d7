use std::collections::BTreeSet;

use iquot::enumerate::{enumerate_semigroups, Filters};
use iquot::hull::has_lc;
use iquot::inverse::recognize_inverse;
use iquot::iso::{are_isomorphic, canonical_form};
use iquot::relations::is_left_ample;
use iquot::table::{Elem, FiniteSemigroup};

/// Every associative table on `n` elements, by plain counting in base `n`.
fn brute_force(n: usize) -> Vec<Vec<Elem>> {
    let cells = n * n;
    let mut out = Vec::new();
    let mut t = vec![0; cells];
    loop {
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]]))
        });
        if assoc {
            out.push(t.clone());
        }
        let mut k = 0;
        loop {
            if k == cells {
                return out;
            }
            t[k] += 1;
            if t[k] < n {
                break;
            }
            t[k] = 0;
            k += 1;
        }
    }
}

fn tables(n: usize, filters: Filters) -> BTreeSet<Vec<Elem>> {
    enumerate_semigroups(n, filters, false)
        .unwrap()
        .iter()
        .map(|s| s.flat().to_vec())
        .collect()
}

#[test]
fn labelled_tables_match_brute_force() {
    for (n, count) in [(1, 1), (2, 8), (3, 113)] {
        let brute: BTreeSet<Vec<Elem>> = brute_force(n).into_iter().collect();
        assert_eq!(brute.len(), count);
        assert_eq!(tables(n, Filters::none()), brute, "order {n}");
    }
}

#[test]
fn isomorphism_class_counts() {
    for (n, count) in [(1, 1), (2, 5), (3, 24), (4, 188)] {
        assert_eq!(
            enumerate_semigroups(n, Filters::none(), true)
                .unwrap()
                .len(),
            count,
            "order {n}"
        );
    }
    assert_eq!(
        enumerate_semigroups(4, Filters::none(), false)
            .unwrap()
            .len(),
        3492
    );
}

#[test]
fn dedup_keeps_one_per_class() {
    let reps = enumerate_semigroups(3, Filters::none(), true).unwrap();
    for (i, a) in reps.iter().enumerate() {
        assert_eq!(&canonical_form(a), a);
        for b in &reps[i + 1..] {
            assert!(!are_isomorphic(a, b));
        }
    }
}

#[test]
fn filters_match_the_predicates() {
    let brute: Vec<FiniteSemigroup> = brute_force(3)
        .into_iter()
        .map(|t| FiniteSemigroup::new(t.chunks(3).map(<[_]>::to_vec).collect()).unwrap())
        .collect();
    let keep = |f: &dyn Fn(&FiniteSemigroup) -> bool| -> BTreeSet<Vec<Elem>> {
        brute
            .iter()
            .filter(|s| f(s))
            .map(|s| s.flat().to_vec())
            .collect()
    };
    let ample = Filters {
        left_ample: true,
        ..Filters::none()
    };
    let lc = Filters { lc: true, ..ample };
    let inverse = Filters {
        inverse: true,
        ..Filters::none()
    };
    assert_eq!(tables(3, ample), keep(&is_left_ample));
    assert_eq!(tables(3, lc), keep(&|s| is_left_ample(s) && has_lc(s)));
    assert_eq!(tables(3, inverse), keep(&|s| recognize_inverse(s).is_ok()));
}

//! Morphism and isomorphism search between small finite semigroups, and a
//! canonical form for deduplication.

use crate::table::{Elem, FiniteSemigroup};

const UNSET: usize = usize::MAX;

/// Cheap isomorphism invariants of an element.
fn profile(s: &FiniteSemigroup, a: Elem) -> (bool, usize, usize, usize, usize) {
    // index and period of the monogenic subsemigroup generated by `a`
    let mut powers = vec![a];
    let mut p = a;
    let (index, period) = loop {
        p = s.mul(p, a);
        if let Some(pos) = powers.iter().position(|&q| q == p) {
            break (pos, powers.len() - pos);
        }
        powers.push(p);
    };
    (
        s.is_idempotent(a),
        s.left_multiples(a).count_ones(..),
        s.right_multiples(a).count_ones(..),
        index,
        period,
    )
}

/// Backtracking search for maps `s → t` (in element order) that are
/// multiplicative; `accept` prunes candidate images and `injective` forces
/// injectivity. Calls `found` for each complete map; stops when it returns
/// false.
fn search(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    candidates: &[Vec<Elem>],
    injective: bool,
    found: &mut dyn FnMut(&[Elem]) -> bool,
) {
    let n = s.order();
    let mut map = vec![UNSET; n];
    let mut used = vec![false; t.order()];

    fn consistent(s: &FiniteSemigroup, t: &FiniteSemigroup, map: &[Elem], a: Elem) -> bool {
        // all products involving `a` whose three entries are assigned
        for b in 0..=a {
            for (x, y) in [(a, b), (b, a)] {
                let xy = s.mul(x, y);
                if xy <= a && map[xy] != t.mul(map[x], map[y]) {
                    return false;
                }
            }
        }
        // products of already-assigned elements that land on `a`
        for x in 0..a {
            for y in 0..a {
                if s.mul(x, y) == a && map[a] != t.mul(map[x], map[y]) {
                    return false;
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        s: &FiniteSemigroup,
        t: &FiniteSemigroup,
        candidates: &[Vec<Elem>],
        injective: bool,
        a: Elem,
        map: &mut Vec<Elem>,
        used: &mut Vec<bool>,
        found: &mut dyn FnMut(&[Elem]) -> bool,
    ) -> bool {
        if a == s.order() {
            return found(map);
        }
        for &v in &candidates[a] {
            if injective && used[v] {
                continue;
            }
            map[a] = v;
            if consistent(s, t, map, a) {
                used[v] = true;
                let go_on = go(s, t, candidates, injective, a + 1, map, used, found);
                used[v] = false;
                if !go_on {
                    map[a] = UNSET;
                    return false;
                }
            }
        }
        map[a] = UNSET;
        true
    }

    go(s, t, candidates, injective, 0, &mut map, &mut used, found);
}

/// All semigroup morphisms `s → t`, as image vectors, in lexicographic order.
pub fn morphisms(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Vec<Vec<Elem>> {
    let candidates: Vec<Vec<Elem>> = s
        .elements()
        .map(|a| {
            t.elements()
                .filter(|&v| !s.is_idempotent(a) || t.is_idempotent(v))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    search(s, t, &candidates, false, &mut |m| {
        out.push(m.to_vec());
        true
    });
    out
}

fn iso_candidates(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Option<Vec<Vec<Elem>>> {
    if s.order() != t.order() {
        return None;
    }
    let ps: Vec<_> = s.elements().map(|a| profile(s, a)).collect();
    let pt: Vec<_> = t.elements().map(|a| profile(t, a)).collect();
    let mut sorted_s = ps.clone();
    let mut sorted_t = pt.clone();
    sorted_s.sort();
    sorted_t.sort();
    if sorted_s != sorted_t {
        return None;
    }
    Some(
        s.elements()
            .map(|a| t.elements().filter(|&v| pt[v] == ps[a]).collect())
            .collect(),
    )
}

/// Some isomorphism `s → t`, if one exists.
pub fn find_isomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Option<Vec<Elem>> {
    let candidates = iso_candidates(s, t)?;
    let mut result = None;
    search(s, t, &candidates, true, &mut |m| {
        result = Some(m.to_vec());
        false
    });
    result
}

pub fn are_isomorphic(s: &FiniteSemigroup, t: &FiniteSemigroup) -> bool {
    find_isomorphism(s, t).is_some()
}

/// Every isomorphism `s → t`.
pub fn isomorphisms(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Vec<Vec<Elem>> {
    let Some(candidates) = iso_candidates(s, t) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    search(s, t, &candidates, true, &mut |m| {
        out.push(m.to_vec());
        true
    });
    out
}

/// True iff `map` is a multiplicative map `s → t`.
pub fn is_morphism(s: &FiniteSemigroup, t: &FiniteSemigroup, map: &[Elem]) -> bool {
    map.len() == s.order()
        && map.iter().all(|&v| v < t.order())
        && s.elements().all(|a| {
            s.elements()
                .all(|b| map[s.mul(a, b)] == t.mul(map[a], map[b]))
        })
}

/// Lexicographically least relabelling of the table over all permutations.
///
/// Exhaustive over `n!` permutations, so intended for the small orders used
/// in enumeration.
pub fn canonical_form(s: &FiniteSemigroup) -> FiniteSemigroup {
    let n = s.order();
    assert!(
        n <= 8,
        "canonical_form is exhaustive; order {n} is too large"
    );
    let mut perm: Vec<Elem> = (0..n).collect();
    let mut best: Option<FiniteSemigroup> = None;
    loop {
        let candidate = s.relabel(&perm);
        if best.as_ref().is_none_or(|b| candidate.flat() < b.flat()) {
            best = Some(candidate);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let mut out = best.expect("at least one permutation");
    if out.names().is_some() {
        out = FiniteSemigroup::from_flat_unchecked(n, out.flat().to_vec());
    }
    out
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::samples::*;

    #[test]
    fn cyclic_groups_have_expected_automorphism_counts() {
        // |Aut(Z_n)| = φ(n)
        for (n, phi) in [(1, 1), (2, 1), (3, 2), (4, 2), (5, 4), (6, 2)] {
            let g = cyclic_group(n);
            assert_eq!(isomorphisms(&g, &g).len(), phi, "Z_{n}");
        }
    }

    #[test]
    fn relabelled_tables_are_isomorphic() {
        let s = chain(4);
        let t = s.relabel(&[2, 0, 3, 1]);
        let iso = find_isomorphism(&s, &t).unwrap();
        assert!(is_morphism(&s, &t, &iso));
        assert_eq!(canonical_form(&s), canonical_form(&t));
        assert!(!are_isomorphic(&chain(2), &cyclic_group(2)));
    }

    #[test]
    fn morphisms_from_z4_to_z2() {
        // two group morphisms plus none other: Z4 → Z2 must send 0 to the
        // only idempotent 0.
        let ms = morphisms(&cyclic_group(4), &cyclic_group(2));
        assert_eq!(ms.len(), 2);
        for m in &ms {
            assert!(is_morphism(&cyclic_group(4), &cyclic_group(2), m));
        }
    }

    #[test]
    fn morphism_count_matches_brute_force() {
        let s = chain(3);
        let t = left_zero(2).with_identity();
        let fast = morphisms(&s, &t).len();
        let mut slow = 0;
        for code in 0..t.order().pow(s.order() as u32) {
            let mut c = code;
            let map: Vec<_> = (0..s.order())
                .map(|_| {
                    let v = c % t.order();
                    c /= t.order();
                    v
                })
                .collect();
            if is_morphism(&s, &t, &map) {
                slow += 1;
            }
        }
        assert_eq!(fast, slow);
    }
}

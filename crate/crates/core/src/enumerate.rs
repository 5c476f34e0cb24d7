//! Exhaustive enumeration of small semigroups by backtracking over Cayley
//! tables with associativity pruning.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hull::has_lc;
use crate::inverse::recognize_inverse;
use crate::iso::canonical_form;
use crate::relations::is_left_ample;
use crate::table::{Elem, FiniteSemigroup};

pub const MAX_ORDER: usize = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filters {
    pub left_ample: bool,
    pub lc: bool,
    pub inverse: bool,
}

impl Filters {
    pub fn none() -> Self {
        Filters::default()
    }

    pub fn left_ample() -> Self {
        Filters {
            left_ample: true,
            ..Filters::default()
        }
    }

    pub fn accepts(&self, s: &FiniteSemigroup) -> bool {
        (!self.left_ample || is_left_ample(s))
            && (!self.lc || has_lc(s))
            && (!self.inverse || recognize_inverse(s).is_ok())
    }
}

const UNSET: Elem = usize::MAX;

struct Search {
    n: usize,
    cells: Vec<Elem>,
}

impl Search {
    #[inline]
    fn get(&self, a: Elem, b: Elem) -> Elem {
        self.cells[a * self.n + b]
    }

    /// Every fully-defined triple associates.
    fn associative_so_far(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let bc = self.get(b, c);
                    if bc == UNSET {
                        continue;
                    }
                    let (l, r) = (self.get(ab, c), self.get(a, bc));
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, cell: usize, emit: &mut dyn FnMut(&[Elem])) {
        if cell == self.cells.len() {
            emit(&self.cells);
            return;
        }
        for v in 0..self.n {
            self.cells[cell] = v;
            if self.associative_so_far() {
                self.run(cell + 1, emit);
            }
        }
        self.cells[cell] = UNSET;
    }
}

/// Calls `emit` on every associative table on `0..n`, in lexicographic
/// order of the row-major cell vector.
fn for_each_table(n: usize, emit: &mut dyn FnMut(&[Elem])) {
    let mut search = Search {
        n,
        cells: vec![UNSET; n * n],
    };
    search.run(0, emit);
}

/// Every semigroup on `n ≤ 4` labelled elements passing `filters`, in a
/// deterministic order. With `dedup`, one canonical representative per
/// isomorphism class is kept instead.
pub fn enumerate_semigroups(
    n: usize,
    filters: Filters,
    dedup: bool,
) -> Result<Vec<FiniteSemigroup>> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(Error::input(format!(
            "order must be between 1 and {MAX_ORDER}, got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
    for_each_table(n, &mut |cells| {
        let s = FiniteSemigroup::from_flat_unchecked(n, cells.to_vec());
        if !filters.accepts(&s) {
            return;
        }
        if dedup {
            let c = canonical_form(&s);
            if seen.insert(c.flat().to_vec()) {
                out.push(c);
            }
        } else {
            out.push(s);
        }
    });
    Ok(out)
}

/// Enumerates orders `1..=max_n` in one list.
pub fn enumerate_up_to(
    max_n: usize,
    filters: Filters,
    dedup: bool,
) -> Result<Vec<FiniteSemigroup>> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(enumerate_semigroups(n, filters, dedup)?);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;
    use crate::table::samples::*;

    #[test]
    fn order_one_and_two_counts() {
        assert_eq!(
            enumerate_semigroups(1, Filters::none(), false)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_semigroups(2, Filters::none(), false)
                .unwrap()
                .len(),
            8
        );
    }

    #[test]
    fn out_of_range_orders_are_rejected() {
        assert!(enumerate_semigroups(0, Filters::none(), false).is_err());
        assert!(enumerate_semigroups(5, Filters::none(), false).is_err());
    }

    #[test]
    fn left_ample_of_order_two_are_chain_and_group() {
        let found = enumerate_semigroups(2, Filters::left_ample(), true).unwrap();
        assert_eq!(found.len(), 2);
        assert!(found.iter().any(|s| are_isomorphic(s, &two_chain())));
        assert!(found.iter().any(|s| are_isomorphic(s, &cyclic_group(2))));
    }

    #[test]
    fn isomorphism_class_counts() {
        // Classes up to isomorphism (not anti-isomorphism): 1, 5, 24, 188.
        let expected = [1, 5, 24, 188];
        for n in 1..=4 {
            let classes = enumerate_semigroups(n, Filters::none(), true).unwrap();
            assert_eq!(classes.len(), expected[n - 1], "order {n}");
        }
    }

    #[test]
    fn output_is_deterministic() {
        let a = enumerate_semigroups(3, Filters::none(), false).unwrap();
        let b = enumerate_semigroups(3, Filters::none(), false).unwrap();
        assert_eq!(a, b);
    }
}

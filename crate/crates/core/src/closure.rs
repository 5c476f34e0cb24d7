//! Generation of chart semigroups from a set of partial bijections.

use std::collections::{BTreeSet, HashMap};

use crate::chart::PartialBijection;
use crate::error::{Error, Result};
use crate::table::{Elem, FiniteSemigroup};

/// Default bound on the number of generated elements.
pub const DEFAULT_BUDGET: usize = 20_000;

/// A semigroup of charts together with its multiplication table.
///
/// Element `i` of `semigroup` is `charts[i]`.
#[derive(Clone, Debug)]
pub struct ChartSemigroup {
    pub semigroup: FiniteSemigroup,
    pub charts: Vec<PartialBijection>,
    index: HashMap<PartialBijection, Elem>,
}

impl ChartSemigroup {
    pub fn index_of(&self, chart: &PartialBijection) -> Option<Elem> {
        self.index.get(chart).copied()
    }

    pub fn order(&self) -> usize {
        self.charts.len()
    }

    /// The inverse of every element, when the set is closed under inverses.
    pub fn inverse_map(&self) -> Option<Vec<Elem>> {
        self.charts
            .iter()
            .map(|c| self.index_of(&c.invert()))
            .collect()
    }
}

/// The least set of charts containing `gens` and closed under composition
/// (and inversion, if `under_inverses`).
///
/// Elements are numbered breadth-first: the generators first, then the
/// products of word length two, and so on; each layer is sorted by the chart
/// order.
pub fn closure(
    gens: &[PartialBijection],
    under_inverses: bool,
    budget: usize,
) -> Result<ChartSemigroup> {
    let first = gens
        .first()
        .ok_or_else(|| Error::input("closure needs at least one generator"))?;
    let ground = first.ground();
    if let Some(g) = gens.iter().find(|g| g.ground() != ground) {
        return Err(Error::input(format!(
            "generator {g} is not on ground {ground}"
        )));
    }

    let mut layer: BTreeSet<PartialBijection> = gens.iter().cloned().collect();
    if under_inverses {
        let inverses: Vec<_> = layer.iter().map(|g| g.invert()).collect();
        layer.extend(inverses);
    }
    let generators: Vec<PartialBijection> = layer.iter().cloned().collect();

    let mut charts: Vec<PartialBijection> = Vec::new();
    let mut index: HashMap<PartialBijection, Elem> = HashMap::new();
    while !layer.is_empty() {
        let start = charts.len();
        for c in layer {
            index.insert(c.clone(), charts.len());
            charts.push(c);
        }
        if charts.len() > budget {
            return Err(Error::Resource {
                what: format!("closure exceeded budget of {budget} elements"),
                partial: charts.len(),
            });
        }
        layer = BTreeSet::new();
        for x in &charts[start..] {
            for g in &generators {
                let p = x.then(g);
                if !index.contains_key(&p) {
                    layer.insert(p);
                }
            }
        }
    }

    let n = charts.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &charts {
        for b in &charts {
            table.push(index[&a.then(b)]);
        }
    }
    let semigroup = FiniteSemigroup::from_flat_unchecked(n, table);
    Ok(ChartSemigroup {
        semigroup,
        charts,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart(ground: usize, e: &[(usize, usize)]) -> PartialBijection {
        PartialBijection::new(ground, e).unwrap()
    }

    #[test]
    fn involution_generates_order_two() {
        let swap = chart(2, &[(0, 1), (1, 0)]);
        let c = closure(std::slice::from_ref(&swap), false, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.order(), 2);
        assert_eq!(c.charts, vec![swap, PartialBijection::identity(2)]);
    }

    #[test]
    fn nilpotent_generates_order_two() {
        let f = chart(2, &[(0, 1)]);
        let c = closure(std::slice::from_ref(&f), false, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.order(), 2);
        assert!(c.index_of(&PartialBijection::empty(2)).is_some());
        assert!(c.index_of(&f).is_some());
    }

    #[test]
    fn nilpotent_with_inverses_is_order_five() {
        let f = chart(2, &[(0, 1)]);
        let c = closure(std::slice::from_ref(&f), true, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.order(), 5);
        for expected in [
            f.clone(),
            f.invert(),
            PartialBijection::identity_on(2, [0]),
            PartialBijection::identity_on(2, [1]),
            PartialBijection::empty(2),
        ] {
            assert!(c.index_of(&expected).is_some(), "missing {expected}");
        }
        assert!(c.inverse_map().is_some());
    }

    #[test]
    fn closure_is_idempotent() {
        let gens = [chart(3, &[(0, 1), (1, 2)]), chart(3, &[(2, 0)])];
        let once = closure(&gens, true, DEFAULT_BUDGET).unwrap();
        let twice = closure(&once.charts, true, DEFAULT_BUDGET).unwrap();
        let a: BTreeSet<_> = once.charts.iter().cloned().collect();
        let b: BTreeSet<_> = twice.charts.iter().cloned().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_is_enforced() {
        let gens = [
            chart(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
            chart(4, &[(0, 1), (1, 0), (2, 2), (3, 3)]),
        ];
        match closure(&gens, false, 10) {
            Err(Error::Resource { partial, .. }) => assert!(partial > 10),
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_empty_and_mixed_grounds() {
        assert!(closure(&[], false, 10).is_err());
        assert!(closure(&[chart(2, &[]), chart(3, &[])], false, 10).is_err());
    }
}

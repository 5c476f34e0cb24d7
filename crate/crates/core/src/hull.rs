//! The right regular representation of a left ample semigroup by partial
//! bijections, its inverse hull, and the principal-intersection condition
//! `Sa ∩ Sb = Sc` (Condition (LC)).

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::algebra::InverseSemigroup;
use crate::chart::PartialBijection;
use crate::closure::{closure, ChartSemigroup, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::inverse::FiniteInverse;
use crate::relations::{green, left_ample, r_star, rstar_l, LeftAmple};
use crate::table::{Elem, FiniteSemigroup};

fn require_left_ample(s: &FiniteSemigroup) -> Result<LeftAmple> {
    left_ample(s).map_err(|f| Error::precondition(format!("not left ample: {f}")))
}

fn rho_with(s: &FiniteSemigroup, plus: &[Elem], a: Elem) -> PartialBijection {
    let mut entries: Vec<(usize, usize)> = Vec::new();
    let mut seen = FixedBitSet::with_capacity(s.order());
    for x in s.elements() {
        let src = s.mul(x, plus[a]);
        if !seen.put(src) {
            entries.push((src, s.mul(src, a)));
        }
    }
    PartialBijection::new(s.order(), &entries).expect("ρ is injective on a left ample semigroup")
}

/// `ρ_a`: the chart with domain `Sa⁺`, image `Sa` and `x ↦ xa`.
pub fn rho(s: &FiniteSemigroup, a: Elem) -> Result<PartialBijection> {
    let la = require_left_ample(s)?;
    Ok(rho_with(s, &la.plus, a))
}

/// The least `c` with `Sa ∩ Sb = Sc`, if the intersection is principal.
pub fn lc_witness(s: &FiniteSemigroup, a: Elem, b: Elem) -> Option<Elem> {
    let mut meet = s.left_multiples(a);
    meet.intersect_with(&s.left_multiples(b));
    s.elements().find(|&c| s.left_multiples(c) == meet)
}

/// Every `Sa ∩ Sb` is principal.
pub fn has_lc(s: &FiniteSemigroup) -> bool {
    lc_failure(s).is_none()
}

/// A pair `(a, b)` whose intersection `Sa ∩ Sb` is not principal.
pub fn lc_failure(s: &FiniteSemigroup) -> Option<(Elem, Elem)> {
    let left: Vec<_> = s.elements().map(|a| s.left_multiples(a)).collect();
    for a in s.elements() {
        for b in a..s.order() {
            let mut meet = left[a].clone();
            meet.intersect_with(&left[b]);
            if !left.contains(&meet) {
                return Some((a, b));
            }
        }
    }
    None
}

/// The witness table for Condition (LC).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcReport {
    pub holds: bool,
    /// `witnesses[a][b]` is the least `c` with `Sa ∩ Sb = Sc`.
    pub witnesses: Vec<Vec<Option<Elem>>>,
}

pub fn lc_report(s: &FiniteSemigroup) -> LcReport {
    let witnesses: Vec<Vec<Option<Elem>>> = s
        .elements()
        .map(|a| s.elements().map(|b| lc_witness(s, a, b)).collect())
        .collect();
    let holds = witnesses.iter().flatten().all(Option::is_some);
    LcReport { holds, witnesses }
}

/// The inverse hull `Σ(S)` of a left ample semigroup, with the embedding
/// `θ: a ↦ ρ_a`.
#[derive(Clone, Debug)]
pub struct InverseHull {
    pub source: FiniteSemigroup,
    pub plus: Vec<Elem>,
    pub charts: ChartSemigroup,
    pub inverse: FiniteInverse,
    /// `embedding[a]` is the hull element `ρ_a`.
    pub embedding: Vec<Elem>,
    /// Every hull element is `ρ_a⁻¹ρ_b` for some `a, b`.
    pub is_i_order: bool,
    pub lc: LcReport,
}

impl InverseHull {
    pub fn order(&self) -> usize {
        self.inverse.order()
    }

    /// The hull element `ρ_a⁻¹ρ_b`.
    pub fn quotient_of(&self, a: Elem, b: Elem) -> Elem {
        self.inverse
            .quotient(&self.embedding[a], &self.embedding[b])
    }

    /// `Sθ` as hull indices, in the order of `S`.
    pub fn members(&self) -> Vec<Elem> {
        self.embedding.clone()
    }

    /// Sθ is a union of R-classes of the hull.
    pub fn image_is_union_of_r_classes(&self) -> bool {
        let mut image = FixedBitSet::with_capacity(self.order());
        for &e in &self.embedding {
            image.insert(e);
        }
        self.inverse.elements().all(|q| {
            image.contains(q) || !self.embedding.iter().any(|m| self.inverse.r_related(&q, m))
        })
    }

    /// Element `a` of `S` for a hull index in the image of θ.
    pub fn preimage(&self, q: Elem) -> Option<Elem> {
        self.embedding.iter().position(|&e| e == q)
    }
}

pub fn inverse_hull(s: &FiniteSemigroup) -> Result<InverseHull> {
    inverse_hull_with_budget(s, DEFAULT_BUDGET)
}

/// Builds `Σ(S)` by closing `{ρ_a}` under composition and inversion.
///
/// Fails with a consistency error when the I-order verdict and the (LC)
/// verdict disagree, or when (LC) holds but `Sθ` is not a union of
/// R-classes: the theory guarantees both.
pub fn inverse_hull_with_budget(s: &FiniteSemigroup, budget: usize) -> Result<InverseHull> {
    let la = require_left_ample(s)?;
    let rhos: Vec<PartialBijection> = s.elements().map(|a| rho_with(s, &la.plus, a)).collect();
    let charts = closure(&rhos, true, budget)?;
    let embedding: Vec<Elem> = rhos
        .iter()
        .map(|r| charts.index_of(r).expect("generator is in its closure"))
        .collect();
    for a in s.elements() {
        for b in 0..a {
            if embedding[a] == embedding[b] {
                return Err(Error::consistency(format!(
                    "ρ is not injective: ρ_{a} = ρ_{b}"
                )));
            }
        }
    }
    let inv = charts
        .inverse_map()
        .ok_or_else(|| Error::consistency("hull is not closed under inverses"))?;
    let inverse = FiniteInverse::from_parts(charts.semigroup.clone(), inv);

    let mut hit = FixedBitSet::with_capacity(inverse.order());
    for a in s.elements() {
        for b in s.elements() {
            hit.insert(inverse.quotient(&embedding[a], &embedding[b]));
        }
    }
    let is_i_order = hit.count_ones(..) == inverse.order();
    let lc = lc_report(s);
    let hull = InverseHull {
        source: s.clone(),
        plus: la.plus,
        charts,
        inverse,
        embedding,
        is_i_order,
        lc,
    };
    if hull.is_i_order != hull.lc.holds {
        return Err(Error::consistency(format!(
            "I-order verdict {} disagrees with (LC) verdict {}",
            hull.is_i_order, hull.lc.holds
        )));
    }
    if hull.lc.holds && !hull.image_is_union_of_r_classes() {
        return Err(Error::consistency(
            "(LC) holds but Sθ is not a union of R-classes of the hull",
        ));
    }
    Ok(hull)
}

/// The three conditions that characterise a bisimple inverse hull:
/// `Σ(S)` bisimple; (LC) with `R* ∘ L` universal; I-order with `R* ∘ L`
/// universal. They must agree.
pub fn bisimple_hull_check(s: &FiniteSemigroup) -> Result<[bool; 3]> {
    let hull = inverse_hull(s)?;
    let bisimple = green(hull.inverse.semigroup()).d.is_universal();
    let rl_universal = rstar_l(s).is_universal();
    let clauses = [
        bisimple,
        has_lc(s) && rl_universal,
        hull.is_i_order && rl_universal,
    ];
    if clauses.iter().any(|&c| c != clauses[0]) {
        return Err(Error::consistency(format!(
            "bisimple hull conditions disagree: {clauses:?}"
        )));
    }
    Ok(clauses)
}

fn ideal_of(s: &FiniteSemigroup, f: impl Fn(Elem) -> Elem) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(s.order());
    for y in s.elements() {
        set.insert(f(y));
    }
    set
}

/// Domain, image and action of `ρ_a⁻¹ρ_b`: `dom = Sb⁺a`, `im = Sa⁺b` and
/// `yb⁺a ↦ ya⁺b`; for `a R* b` also `dom = Sa`, `im = Sb`, `ya ↦ yb`.
pub fn check_quotient_charts(hull: &InverseHull) -> Result<()> {
    let s = &hull.source;
    let plus = &hull.plus;
    let rs = r_star(s);
    for a in s.elements() {
        for b in s.elements() {
            let q = &hull.charts.charts[hull.quotient_of(a, b)];
            let dom = ideal_of(s, |y| s.mul(s.mul(y, plus[b]), a));
            let im = ideal_of(s, |y| s.mul(s.mul(y, plus[a]), b));
            let acts = s.elements().all(|y| {
                let x = s.mul(s.mul(y, plus[b]), a);
                q.apply(x) == Some(s.mul(s.mul(y, plus[a]), b))
            });
            if q.domain() != dom || q.image() != im || !acts {
                return Err(Error::consistency(format!(
                    "chart of ρ_{a}⁻¹ρ_{b} does not match Sb⁺a / Sa⁺b"
                )));
            }
            if rs.contains(a, b) {
                let ok = q.domain() == s.left_multiples(a)
                    && q.image() == s.left_multiples(b)
                    && s.elements()
                        .all(|y| q.apply(s.mul(y, a)) == Some(s.mul(y, b)));
                if !ok {
                    return Err(Error::consistency(format!(
                        "{a} R* {b} but ρ_{a}⁻¹ρ_{b} is not ya ↦ yb on Sa"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// `ρ_a L ρ_b` in the hull iff `Sa = Sb` iff `a L b` in `S`.
pub fn check_l_transfer(hull: &InverseHull) -> Result<()> {
    let s = &hull.source;
    let l = green(s).l;
    for a in s.elements() {
        for b in s.elements() {
            let in_hull = hull
                .inverse
                .l_related(&hull.embedding[a], &hull.embedding[b]);
            let ideals = s.left_multiples(a) == s.left_multiples(b);
            let in_s = l.contains(a, b);
            if in_hull != ideals || ideals != in_s {
                return Err(Error::consistency(format!(
                    "L transfer fails at ({a},{b}): hull {in_hull}, Sa=Sb {ideals}, S {in_s}"
                )));
            }
        }
    }
    Ok(())
}

/// When `Sb ∩ Sc = Sw` with `w = ub = vc`, `ub⁺ = u`, `vc⁺ = v`:
/// `ρ_bρ_c⁻¹ = ρ_u⁻¹ρ_v` and `u R* v`. Checked for every such `u, v`.
pub fn check_meet_factorisation(hull: &InverseHull) -> Result<()> {
    let s = &hull.source;
    let plus = &hull.plus;
    let rs = r_star(s);
    let q = &hull.inverse;
    for b in s.elements() {
        for c in s.elements() {
            let Some(w) = lc_witness(s, b, c) else {
                continue;
            };
            let lhs = q.mul(&hull.embedding[b], &q.inv(&hull.embedding[c]));
            let mut found = false;
            for u in s
                .elements()
                .filter(|&u| s.mul(u, b) == w && s.mul(u, plus[b]) == u)
            {
                for v in s
                    .elements()
                    .filter(|&v| s.mul(v, c) == w && s.mul(v, plus[c]) == v)
                {
                    found = true;
                    if lhs != hull.quotient_of(u, v) || !rs.contains(u, v) {
                        return Err(Error::consistency(format!(
                            "meet factorisation fails for b={b}, c={c}, u={u}, v={v}"
                        )));
                    }
                }
            }
            if !found {
                return Err(Error::consistency(format!(
                    "no u, v for the witness {w} of ({b},{c})"
                )));
            }
        }
    }
    Ok(())
}

/// A partial shift of `ℕ`: defined on `[start, ∞)` and adding `shift`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialShift {
    pub start: u64,
    pub shift: i64,
}

impl PartialShift {
    pub fn apply(&self, x: u64) -> Option<u64> {
        (x >= self.start).then(|| (x as i64 + self.shift) as u64)
    }

    /// `ρ_a⁻¹ρ_b` in `Σ(ℕ, +)`: `x ↦ x − a + b` on `[a, ∞)`.
    pub fn quotient(a: u64, b: u64) -> Self {
        PartialShift {
            start: a,
            shift: b as i64 - a as i64,
        }
    }

    /// Back to the pair `(a, b)` with `self = ρ_a⁻¹ρ_b`.
    pub fn as_pair(&self) -> (u64, u64) {
        (self.start, (self.start as i64 + self.shift) as u64)
    }
}

/// `ρ_a` for `(ℕ, +)`: the total shift `x ↦ x + a`.
pub fn nat_rho(a: u64) -> PartialShift {
    PartialShift {
        start: 0,
        shift: a as i64,
    }
}

/// The inverse hull of `(ℕ, +)`, kept exactly as partial shifts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NatHull;

impl InverseSemigroup for NatHull {
    type Elem = PartialShift;

    /// Composition of partial maps, left to right: `x` must reach the
    /// domain of `g` after `f`.
    fn mul(&self, f: &PartialShift, g: &PartialShift) -> PartialShift {
        let needed = g.start as i64 - f.shift;
        let start = (f.start as i64).max(needed).max(0) as u64;
        PartialShift {
            start,
            shift: f.shift + g.shift,
        }
    }

    fn inv(&self, f: &PartialShift) -> PartialShift {
        PartialShift {
            start: (f.start as i64 + f.shift) as u64,
            shift: -f.shift,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inverse::recognize_inverse;
    use crate::iso::are_isomorphic;
    use crate::symbolic::Bicyclic;
    use crate::table::samples::*;

    #[test]
    fn rho_of_zero_in_chain_is_identity_on_zero() {
        let s = two_chain(); // 0 = identity, 1 = zero
        let r = rho(&s, 1).unwrap();
        assert_eq!(r, PartialBijection::identity_on(2, [1]));
    }

    #[test]
    fn rho_of_idempotent_is_identity_on_its_ideal() {
        let s = chain(3);
        for e in s.elements() {
            let r = rho(&s, e).unwrap();
            assert!(r.is_idempotent());
            assert_eq!(r.domain(), s.left_multiples(e));
        }
    }

    #[test]
    fn rho_needs_left_ample() {
        assert!(matches!(rho(&left_zero(2), 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn two_chain_hull() {
        let s = two_chain();
        let h = inverse_hull(&s).unwrap();
        assert_eq!(h.order(), 2);
        assert!(h.is_i_order);
        assert!(are_isomorphic(h.inverse.semigroup(), &s));
    }

    #[test]
    fn inverse_semigroups_are_their_own_hulls() {
        let b = crate::inverse::brandt(&cyclic_group(2), 2).unwrap();
        for s in [cyclic_group(3), chain(3), b.semigroup().clone()] {
            let h = inverse_hull(&s).unwrap();
            assert!(h.is_i_order);
            assert!(are_isomorphic(h.inverse.semigroup(), &s));
            let inv = recognize_inverse(&s).unwrap();
            for a in s.elements() {
                let ia = inv.inverse_map()[a];
                assert_eq!(h.embedding[ia], h.inverse.inv(&h.embedding[a]));
            }
        }
    }

    #[test]
    fn lc_witness_in_semilattice_is_meet() {
        let s = chain(4);
        for e in s.elements() {
            for f in s.elements() {
                assert_eq!(lc_witness(&s, e, f), Some(s.mul(e, f)));
            }
        }
    }

    #[test]
    fn nat_lc_witness_is_max() {
        let n = crate::symbolic::AdditiveNaturals;
        assert_eq!(n.lc_witness(3, 7), 7);
        assert_eq!(n.lc_witness(4, 2), 4);
    }

    #[test]
    fn bisimple_hull_examples() {
        assert_eq!(bisimple_hull_check(&cyclic_group(4)).unwrap(), [true; 3]);
        assert_eq!(bisimple_hull_check(&two_chain()).unwrap(), [false; 3]);
    }

    #[test]
    fn nat_rho_is_total_shift() {
        let r = nat_rho(3);
        assert_eq!(r.apply(0), Some(3));
        assert_eq!(r.apply(10), Some(13));
    }

    #[test]
    fn nat_hull_matches_bicyclic_on_window() {
        for a in 0..=20u64 {
            for b in 0..=20 {
                for c in 0..=20 {
                    for d in 0..=20 {
                        let x = NatHull
                            .mul(&PartialShift::quotient(a, b), &PartialShift::quotient(c, d));
                        assert_eq!(x.as_pair(), Bicyclic.mul(&(a, b), &(c, d)));
                    }
                }
            }
        }
    }

    #[test]
    fn nat_hull_composition_agrees_with_pointwise_maps() {
        for a in 0..6u64 {
            for b in 0..6 {
                for c in 0..6 {
                    for d in 0..6 {
                        let f = PartialShift::quotient(a, b);
                        let g = PartialShift::quotient(c, d);
                        let fg = NatHull.mul(&f, &g);
                        for x in 0..30 {
                            assert_eq!(fg.apply(x), f.apply(x).and_then(|y| g.apply(y)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn nat_quotients_of_rhos() {
        // ρ_a⁻¹ρ_b is x ↦ x − a + b on [a, ∞)
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(
                    NatHull.quotient(&nat_rho(a), &nat_rho(b)),
                    PartialShift::quotient(a, b)
                );
            }
        }
    }
}

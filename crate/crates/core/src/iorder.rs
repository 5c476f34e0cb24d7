//! A subsemigroup `S` of an inverse semigroup `Q`: left I-orders,
//! straightness, equality of quotients, the ternary relation `T`, and the
//! ideal-transfer and E-unitary suites for `S` a union of R-classes.
//!
//! Green's relations on members are always those of `Q` restricted to `S`.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::algebra::InverseSemigroup;
use crate::error::{Error, Result};
use crate::hull::has_lc;
use crate::inverse::{is_e_unitary, is_proper, sigma, sigma_relation, FiniteInverse};
use crate::relations::{green, left_ample, r_star};
use crate::symbolic::{Bicyclic, Pair};
use crate::table::{Elem, FiniteSemigroup};

/// A multiplicatively closed subset of an inverse semigroup.
///
/// `universe` lists the ambient elements that quantifiers range over: all
/// of `Q` for a finite ambient, a window for a closed-form one.
#[derive(Clone, Debug)]
pub struct SubsetEmbedding<Q: InverseSemigroup> {
    ambient: Q,
    universe: Vec<Q::Elem>,
    members: Vec<Q::Elem>,
    exhaustive: bool,
}

impl SubsetEmbedding<FiniteInverse> {
    /// Members are sorted; they must be in range and closed.
    pub fn new(ambient: FiniteInverse, mut members: Vec<Elem>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::input("empty member set"));
        }
        if let Some(&m) = members.iter().find(|&&m| m >= ambient.order()) {
            return Err(Error::input(format!("member {m} out of range")));
        }
        if !ambient.semigroup().is_closed(&members) {
            return Err(Error::input("members are not closed under multiplication"));
        }
        let universe = ambient.elements().collect();
        Ok(SubsetEmbedding {
            ambient,
            universe,
            members,
            exhaustive: true,
        })
    }

    /// `S` as a semigroup in its own right, numbered in member order.
    pub fn member_table(&self) -> FiniteSemigroup {
        self.ambient
            .semigroup()
            .restrict(&self.members)
            .expect("members are closed")
            .0
    }
}

impl SubsetEmbedding<Bicyclic> {
    /// `{(0, n)}` inside the bicyclic monoid, both truncated to `window`.
    pub fn bicyclic_identity_r_class(window: u64) -> Self {
        SubsetEmbedding {
            ambient: Bicyclic,
            universe: Bicyclic::window(window),
            members: Bicyclic::identity_r_class(window),
            exhaustive: false,
        }
    }
}

impl<Q: InverseSemigroup> SubsetEmbedding<Q> {
    /// A windowed embedding; no closure check is possible.
    pub fn windowed(ambient: Q, universe: Vec<Q::Elem>, mut members: Vec<Q::Elem>) -> Self {
        members.sort();
        members.dedup();
        SubsetEmbedding {
            ambient,
            universe,
            members,
            exhaustive: false,
        }
    }

    pub fn ambient(&self) -> &Q {
        &self.ambient
    }

    pub fn members(&self) -> &[Q::Elem] {
        &self.members
    }

    pub fn universe(&self) -> &[Q::Elem] {
        &self.universe
    }

    /// The universe is the whole ambient semigroup.
    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }

    pub fn is_member(&self, x: &Q::Elem) -> bool {
        self.members.binary_search(x).is_ok()
    }

    fn member_pairs(&self) -> impl Iterator<Item = (&Q::Elem, &Q::Elem)> {
        self.members
            .iter()
            .flat_map(move |a| self.members.iter().map(move |b| (a, b)))
    }

    /// The lexicographically least member pair `(a, b)` with `q = a⁻¹b`.
    pub fn quotient_witness(&self, q: &Q::Elem) -> Option<(Q::Elem, Q::Elem)> {
        self.member_pairs()
            .find(|(a, b)| &self.ambient.quotient(a, b) == q)
            .map(|(a, b)| (a.clone(), b.clone()))
    }

    /// An element of the universe that is not a quotient of members.
    pub fn i_order_failure(&self) -> Option<Q::Elem> {
        self.universe
            .iter()
            .find(|q| self.quotient_witness(q).is_none())
            .cloned()
    }

    pub fn is_left_i_order(&self) -> bool {
        self.i_order_failure().is_none()
    }

    /// The least `(a, b)` with `q = a⁻¹b` and `a R b` in `Q`.
    pub fn straight_witness(&self, q: &Q::Elem) -> Option<(Q::Elem, Q::Elem)> {
        self.member_pairs()
            .find(|(a, b)| self.ambient.r_related(a, b) && &self.ambient.quotient(a, b) == q)
            .map(|(a, b)| (a.clone(), b.clone()))
    }

    /// Every quotient can be written `a⁻¹b` with `a R b`.
    ///
    /// When every member has `aa⁻¹` in `S` (so `S` is a left ample
    /// sub-(2,1)-algebra), a negative answer is a consistency error.
    pub fn is_straight(&self) -> Result<bool> {
        if let Some(q) = self.i_order_failure() {
            return Err(Error::precondition(format!(
                "not a left I-order: {q:?} is not a quotient of members"
            )));
        }
        let straight = self
            .universe
            .iter()
            .all(|q| self.straight_witness(q).is_some());
        if !straight && self.is_unit_closed() {
            return Err(Error::consistency(
                "a left ample sub-(2,1)-algebra I-order is not straight",
            ));
        }
        Ok(straight)
    }

    /// `aa⁻¹ ∈ S` for every member `a`.
    pub fn is_unit_closed(&self) -> bool {
        self.members
            .iter()
            .all(|a| self.is_member(&self.ambient.left_unit(a)))
    }

    /// A universe element whose L-class contains no member.
    pub fn missed_l_class(&self) -> Option<Q::Elem> {
        self.universe
            .iter()
            .find(|q| !self.members.iter().any(|m| self.ambient.l_related(q, m)))
            .cloned()
    }

    /// Members `e` with `ae = a` for every member `a`.
    pub fn right_identities(&self) -> Vec<Q::Elem> {
        self.members
            .iter()
            .filter(|e| self.members.iter().all(|a| &self.ambient.mul(a, e) == a))
            .cloned()
            .collect()
    }

    /// A right identity of an I-order must be a two-sided identity of `Q`;
    /// returns an offending `(e, q)`.
    pub fn right_identity_failure(&self) -> Option<(Q::Elem, Q::Elem)> {
        for e in self.right_identities() {
            for q in &self.universe {
                if &self.ambient.mul(q, &e) != q || &self.ambient.mul(&e, q) != q {
                    return Some((e, q.clone()));
                }
            }
        }
        None
    }

    /// Members `(x, y)` with `xa = yc`, `xb = yd`, `a R x⁻¹`, `x R y` and
    /// `y L c⁻¹`; such a pair exists exactly when `a⁻¹b = c⁻¹d`.
    pub fn equal_quotient_witness(
        &self,
        a: &Q::Elem,
        b: &Q::Elem,
        c: &Q::Elem,
        d: &Q::Elem,
    ) -> Result<Option<(Q::Elem, Q::Elem)>> {
        for (name, x) in [("a", a), ("b", b), ("c", c), ("d", d)] {
            if !self.is_member(x) {
                return Err(Error::precondition(format!(
                    "{name} = {x:?} is not a member"
                )));
            }
        }
        let q = &self.ambient;
        if !q.r_related(a, b) {
            return Err(Error::precondition(format!("a R b fails for {a:?}, {b:?}")));
        }
        if !q.r_related(c, d) {
            return Err(Error::precondition(format!("c R d fails for {c:?}, {d:?}")));
        }
        if !self.is_straight()? {
            return Err(Error::precondition("S is not straight in Q"));
        }
        let c_inv = q.inv(c);
        Ok(self
            .member_pairs()
            .find(|(x, y)| {
                q.mul(x, a) == q.mul(y, c)
                    && q.mul(x, b) == q.mul(y, d)
                    && q.r_related(a, &q.inv(x))
                    && q.r_related(x, y)
                    && q.l_related(y, &c_inv)
            })
            .map(|(x, y)| (x.clone(), y.clone())))
    }

    /// `(a, b, c) ∈ T` iff `ab⁻¹Q ⊆ c⁻¹Q`.
    pub fn t_contains(&self, a: &Q::Elem, b: &Q::Elem, c: &Q::Elem) -> bool {
        let q = &self.ambient;
        q.leq_r(&q.mul(a, &q.inv(b)), &q.inv(c))
    }

    pub fn t_relation(&self) -> Result<TernaryRelation> {
        if !self.exhaustive {
            return Err(Error::unsupported(
                "the ternary relation needs a finite ambient semigroup",
            ));
        }
        let m = self.members.len();
        let mut bits = FixedBitSet::with_capacity(m * m * m);
        for (i, a) in self.members.iter().enumerate() {
            for (j, b) in self.members.iter().enumerate() {
                for (k, c) in self.members.iter().enumerate() {
                    if self.t_contains(a, b, c) {
                        bits.insert((i * m + j) * m + k);
                    }
                }
            }
        }
        Ok(TernaryRelation { size: m, bits })
    }

    /// Every universe element is `a⁻¹b` with `a` in a subgroup of `Q`
    /// (`aa⁻¹ = a⁻¹a`), the shape of quotients in a classical left order.
    pub fn is_classical_left_order(&self) -> bool {
        let q = &self.ambient;
        let grouped: Vec<&Q::Elem> = self
            .members
            .iter()
            .filter(|a| q.left_unit(a) == q.right_unit(a))
            .collect();
        self.universe.iter().all(|x| {
            grouped
                .iter()
                .any(|a| self.members.iter().any(|b| &q.quotient(a, b) == x))
        })
    }
}

/// If `x R y` and `bc⁻¹ = x⁻¹y` then `xb = yc`. Returns whether the
/// implication holds for this tuple.
pub fn quotient_swap_holds<Q: InverseSemigroup>(
    q: &Q,
    b: &Q::Elem,
    c: &Q::Elem,
    x: &Q::Elem,
    y: &Q::Elem,
) -> bool {
    if !q.r_related(x, y) || q.mul(b, &q.inv(c)) != q.quotient(x, y) {
        return true;
    }
    q.mul(x, b) == q.mul(y, c)
}

/// A set of member triples, indexed by member position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryRelation {
    size: usize,
    bits: FixedBitSet,
}

impl TernaryRelation {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, i: usize, j: usize, k: usize) -> bool {
        self.bits.contains((i * self.size + j) * self.size + k)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let m = self.size;
        self.bits
            .ones()
            .map(move |x| (x / (m * m), (x / m) % m, x % m))
    }
}

/// One clause of a suite: both sides were computed and agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseReport {
    pub clause: String,
    pub holds: bool,
    pub detail: String,
}

/// Checks that `S` is left ample, a left I-order, and a union of
/// R-classes of `Q`; returns `S` as a table.
fn certify_union_of_r_classes(e: &SubsetEmbedding<FiniteInverse>) -> Result<FiniteSemigroup> {
    let s = e.member_table();
    if let Err(f) = left_ample(&s) {
        return Err(Error::precondition(format!("S is not left ample: {f}")));
    }
    if let Some(q) = e.i_order_failure() {
        return Err(Error::precondition(format!(
            "S is not a left I-order: {q} is not a quotient"
        )));
    }
    let q = e.ambient();
    for m in e.members() {
        if let Some(x) = q.elements().find(|x| q.r_related(x, m) && !e.is_member(x)) {
            return Err(Error::precondition(format!(
                "S is not a union of R-classes: {x} R {m} but {x} ∉ S"
            )));
        }
    }
    Ok(s)
}

fn left_set(s: &FiniteSemigroup, a: Elem, to_global: &[Elem], n: usize) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(n);
    for x in s.left_multiples(a).ones() {
        set.insert(to_global[x]);
    }
    set
}

fn mismatch(clause: &str, detail: String) -> Error {
    Error::consistency(format!("{clause}: sides disagree at {detail}"))
}

/// For `S` left ample, a left I-order in `Q` and a union of R-classes,
/// computes both sides of each transfer statement between `S` and `Q`:
/// subalgebra, idempotent quotients, left ideal order, principal meets,
/// (LC), bisimplicity and simplicity. A disagreement is a consistency
/// error.
pub fn r_class_union_suite(e: &SubsetEmbedding<FiniteInverse>) -> Result<Vec<ClauseReport>> {
    let s = certify_union_of_r_classes(e)?;
    let q = e.ambient();
    let qs = q.semigroup();
    let g: &[Elem] = e.members();
    let n = q.order();
    let la = left_ample(&s).expect("certified");
    let rs = r_star(&s);
    let mut out = Vec::new();

    for a in s.elements() {
        if q.left_unit(&g[a]) != g[la.plus[a]] {
            return Err(mismatch("subalgebra", format!("a = {}", g[a])));
        }
    }
    out.push(ClauseReport {
        clause: "subalgebra".into(),
        holds: true,
        detail: "aa⁻¹ = a⁺ for every member".into(),
    });

    for (a, b) in rs.pairs() {
        let idem = q.is_idempotent(&q.quotient(&g[a], &g[b]));
        if idem != (a == b) {
            return Err(mismatch(
                "idempotent-quotients",
                format!("({}, {})", g[a], g[b]),
            ));
        }
    }
    out.push(ClauseReport {
        clause: "idempotent-quotients".into(),
        holds: true,
        detail: "for a R* b, a⁻¹b ∈ E iff a = b".into(),
    });

    let s_left: Vec<FixedBitSet> = s.elements().map(|a| left_set(&s, a, g, n)).collect();
    let q_left: Vec<FixedBitSet> = s.elements().map(|a| qs.left_multiples(g[a])).collect();
    for a in s.elements() {
        for b in s.elements() {
            if s_left[a].is_subset(&s_left[b]) != q_left[a].is_subset(&q_left[b]) {
                return Err(mismatch(
                    "left-ideal-order",
                    format!("({}, {})", g[a], g[b]),
                ));
            }
        }
    }
    out.push(ClauseReport {
        clause: "left-ideal-order".into(),
        holds: true,
        detail: "Sa ⊆ Sb iff Qa ⊆ Qb".into(),
    });

    for a in s.elements() {
        for b in s.elements() {
            let mut sm = s_left[a].clone();
            sm.intersect_with(&s_left[b]);
            let mut qm = q_left[a].clone();
            qm.intersect_with(&q_left[b]);
            for c in s.elements() {
                if (sm == s_left[c]) != (qm == q_left[c]) {
                    return Err(mismatch(
                        "left-ideal-meets",
                        format!("({}, {}, {})", g[a], g[b], g[c]),
                    ));
                }
            }
        }
    }
    out.push(ClauseReport {
        clause: "left-ideal-meets".into(),
        holds: true,
        detail: "Sa ∩ Sb = Sc iff Qa ∩ Qb = Qc".into(),
    });

    if !has_lc(&s) {
        return Err(mismatch("lc", "S".into()));
    }
    out.push(ClauseReport {
        clause: "lc".into(),
        holds: true,
        detail: "S satisfies (LC)".into(),
    });

    let gs = green(&s);
    let gq = green(qs);
    let q_bisimple = gq.d.is_universal();
    let l_rstar = gs.l.compose(&rs).is_universal();
    if q_bisimple != l_rstar {
        return Err(mismatch(
            "bisimple",
            format!("Q bisimple {q_bisimple}, L∘R* universal {l_rstar}"),
        ));
    }
    out.push(ClauseReport {
        clause: "bisimple".into(),
        holds: q_bisimple,
        detail: format!("Q bisimple = {q_bisimple} = (L ∘ R* universal on S)"),
    });

    let q_simple = gq.j.is_universal();
    let s_side = s.elements().all(|a| {
        s.elements().all(|b| {
            s.elements()
                .any(|c| rs.contains(a, c) && gs.leq_l.contains(c, b))
        })
    });
    if q_simple != s_side {
        return Err(mismatch(
            "simple",
            format!("Q simple {q_simple}, S side {s_side}"),
        ));
    }
    out.push(ClauseReport {
        clause: "simple".into(),
        holds: q_simple,
        detail: format!("Q simple = {q_simple} = (∀a,b ∃c: a R* c ≤_L b)"),
    });
    Ok(out)
}

/// For `S` as in [`r_class_union_suite`], three conditions that must agree:
/// `Q` is E-unitary; `S` is proper and σ on `S` is σ of `Q` restricted;
/// `S` is proper and `S/σ` is cancellative.
pub fn e_unitary_check(e: &SubsetEmbedding<FiniteInverse>) -> Result<[bool; 3]> {
    let s = certify_union_of_r_classes(e)?;
    let q = e.ambient();
    let g = e.members();
    let proper = is_proper(&s)?;
    let e_unitary = is_e_unitary(q);
    let sig_s = sigma_relation(&s);
    let sig_q = sigma_relation(q.semigroup());
    let embeds = s.elements().all(|a| {
        s.elements()
            .all(|b| sig_s.contains(a, b) == sig_q.contains(g[a], g[b]))
    });
    let cancellative = sigma(&s)?.quotient.is_cancellative();
    let clauses = [e_unitary, proper && embeds, proper && cancellative];
    if clauses.iter().any(|&c| c != clauses[0]) {
        return Err(Error::consistency(format!(
            "E-unitary conditions disagree: {clauses:?}"
        )));
    }
    Ok(clauses)
}

/// `(0, a)⁻¹(0, b) = (a, b)`: the witness pair for a bicyclic element.
pub fn bicyclic_witness(q: Pair) -> (Pair, Pair) {
    ((0, q.0), (0, q.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::PartialBijection;
    use crate::closure::closure;
    use crate::inverse::{brandt, recognize_inverse};
    use crate::table::samples::*;

    fn brandt_row(group: &FiniteSemigroup, k: usize, i: usize) -> SubsetEmbedding<FiniteInverse> {
        let b = brandt(group, k).unwrap();
        SubsetEmbedding::new(b.inverse.clone(), b.row_order(i)).unwrap()
    }

    fn i1() -> FiniteInverse {
        // {identity, empty} on one point
        let id = PartialBijection::identity(1);
        let cs = closure(&[id, PartialBijection::empty(1)], true, 100).unwrap();
        recognize_inverse(&cs.semigroup).unwrap()
    }

    #[test]
    fn bicyclic_identity_class_is_straight_i_order() {
        let e = SubsetEmbedding::bicyclic_identity_r_class(20);
        assert!(e.is_left_i_order());
        for q in e.universe() {
            assert_eq!(e.quotient_witness(q), Some(bicyclic_witness(*q)));
        }
        assert!(e.is_straight().unwrap());
        assert!(!e.is_classical_left_order());
    }

    #[test]
    fn brandt_rows_are_straight_i_orders() {
        for i in 0..2 {
            let e = brandt_row(&cyclic_group(2), 2, i);
            assert!(e.is_left_i_order());
            assert!(e.is_straight().unwrap());
            assert!(!e.is_classical_left_order());
            assert!(e.missed_l_class().is_none());
        }
    }

    #[test]
    fn identity_alone_is_not_i_order_in_i1() {
        let q = i1();
        let id = q
            .elements()
            .find(|&x| q.semigroup().identity() == Some(x))
            .unwrap();
        let e = SubsetEmbedding::new(q, vec![id]).unwrap();
        assert!(!e.is_left_i_order());
        assert!(matches!(e.is_straight(), Err(Error::Precondition(_))));
    }

    #[test]
    fn unclosed_members_are_rejected() {
        let b = brandt(&trivial(), 2).unwrap();
        let x = b.element(0, 0, 1);
        assert!(SubsetEmbedding::new(b.inverse.clone(), vec![x]).is_err());
    }

    #[test]
    fn equal_quotients_reflexive_case() {
        let e = brandt_row(&cyclic_group(2), 2, 0);
        for &a in e.members() {
            assert!(e.equal_quotient_witness(&a, &a, &a, &a).unwrap().is_some());
        }
    }

    #[test]
    fn equal_quotients_bicyclic_negative() {
        let e = SubsetEmbedding::bicyclic_identity_r_class(10);
        let q = Bicyclic;
        let (a, b, c, d) = ((0, 1), (0, 2), (0, 1), (0, 3));
        assert_eq!(q.quotient(&a, &b), (1, 2));
        assert_eq!(q.quotient(&c, &d), (1, 3));
        assert_eq!(e.equal_quotient_witness(&a, &b, &c, &d).unwrap(), None);
    }

    #[test]
    fn equal_quotients_biconditional_on_brandt_row() {
        let e = brandt_row(&cyclic_group(2), 2, 0);
        let q = e.ambient().clone();
        let m = e.members().to_vec();
        let mut checked = 0;
        for &a in &m {
            for &b in &m {
                if !q.r_related(&a, &b) {
                    continue;
                }
                for &c in &m {
                    for &d in &m {
                        if !q.r_related(&c, &d) {
                            continue;
                        }
                        let w = e.equal_quotient_witness(&a, &b, &c, &d).unwrap();
                        assert_eq!(w.is_some(), q.quotient(&a, &b) == q.quotient(&c, &d));
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn equal_quotients_rejects_unrelated_pairs() {
        let e = brandt_row(&trivial(), 2, 0);
        let b = brandt(&trivial(), 2).unwrap();
        let (x, y) = (b.element(0, 0, 0), Brandt0::ZERO);
        assert!(matches!(
            e.equal_quotient_witness(&x, &y, &x, &x),
            Err(Error::Precondition(_))
        ));
    }

    use crate::inverse::Brandt as Brandt0;

    #[test]
    fn t_relation_in_group_is_everything() {
        let g = recognize_inverse(&cyclic_group(3)).unwrap();
        let e = SubsetEmbedding::new(g, vec![0, 1, 2]).unwrap();
        assert_eq!(e.t_relation().unwrap().len(), 27);
    }

    #[test]
    fn t_relation_contains_zero_triple() {
        let b = brandt(&trivial(), 2).unwrap();
        let e = SubsetEmbedding::new(b.inverse.clone(), b.row_order(0)).unwrap();
        let t = e.t_relation().unwrap();
        let z = e
            .members()
            .iter()
            .position(|&m| m == Brandt0::ZERO)
            .unwrap();
        assert!(t.contains(z, z, z));
    }

    #[test]
    fn t_relation_matches_definitional_scan() {
        let e = brandt_row(&cyclic_group(2), 2, 0);
        let q = e.ambient().clone();
        let t = e.t_relation().unwrap();
        let m = e.members();
        let right = |x: Elem| -> Vec<Elem> {
            let mut v: Vec<Elem> = q.elements().map(|y| q.mul(&x, &y)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        for (i, &a) in m.iter().enumerate() {
            for (j, &b) in m.iter().enumerate() {
                for (k, &c) in m.iter().enumerate() {
                    let lhs = right(q.mul(&a, &q.inv(&b)));
                    let rhs = right(q.inv(&c));
                    let subset = lhs.iter().all(|x| rhs.binary_search(x).is_ok());
                    assert_eq!(t.contains(i, j, k), subset);
                }
            }
        }
    }

    #[test]
    fn t_relation_needs_finite_ambient() {
        let e = SubsetEmbedding::bicyclic_identity_r_class(3);
        assert!(matches!(e.t_relation(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn quotient_swap_on_brandt() {
        let b = brandt(&cyclic_group(2), 3).unwrap();
        let q = &b.inverse;
        for bb in q.elements() {
            for c in q.elements() {
                for x in q.elements() {
                    for y in q.elements() {
                        assert!(quotient_swap_holds(q, &bb, &c, &x, &y));
                    }
                }
            }
        }
    }

    #[test]
    fn bicyclic_quotient_idempotent_iff_equal() {
        let q = Bicyclic;
        for a in 0..=20 {
            for b in 0..=20 {
                let x = q.quotient(&(0, a), &(0, b));
                assert_eq!(q.is_idempotent(&x), a == b);
            }
        }
    }

    #[test]
    fn suites_on_group() {
        let g = recognize_inverse(&cyclic_group(4)).unwrap();
        let e = SubsetEmbedding::new(g, vec![0, 1, 2, 3]).unwrap();
        let rep = r_class_union_suite(&e).unwrap();
        assert!(rep.iter().all(|c| c.holds));
        assert_eq!(e_unitary_check(&e).unwrap(), [true; 3]);
    }

    #[test]
    fn suites_on_semilattice() {
        let v = recognize_inverse(&chain(3)).unwrap();
        let e = SubsetEmbedding::new(v, vec![0, 1, 2]).unwrap();
        let rep = r_class_union_suite(&e).unwrap();
        let bis = rep.iter().find(|c| c.clause == "bisimple").unwrap();
        assert!(!bis.holds);
        assert_eq!(e_unitary_check(&e).unwrap(), [true; 3]);
    }

    #[test]
    fn suites_refuse_non_union() {
        let b = brandt(&trivial(), 2).unwrap();
        let e = SubsetEmbedding::new(b.inverse.clone(), vec![Brandt0::ZERO, b.element(0, 0, 0)])
            .unwrap();
        assert!(matches!(
            r_class_union_suite(&e),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn right_identity_is_identity_of_ambient() {
        let g = recognize_inverse(&cyclic_group(3)).unwrap();
        let e = SubsetEmbedding::new(g, vec![0, 1, 2]).unwrap();
        assert_eq!(e.right_identities(), vec![0]);
        assert!(e.right_identity_failure().is_none());
    }
}

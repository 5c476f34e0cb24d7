//! The correspondence between left ample semigroups with (LC) and `R* ∘ L`
//! universal (LAC objects) and pairs `(Q, S)` with `Q` bisimple inverse
//! and `S` a subsemigroup that is a union of R-classes (BIS objects).
//!
//! `F` sends `S` to `(Σ(S), Sθ)`; `G` sends `(Q, S)` to `S`. The natural
//! isomorphisms are `θ: a ↦ ρ_a` and `μ: a⁻¹b ↦ ρ_a⁻¹ρ_b`.
//!
//! A finite bisimple inverse semigroup is a group, and then `S = Q`; the
//! finite objects in both categories are therefore groups. Nontrivial
//! instances come from the closed-form `(ℕ, +)` and bicyclic built-ins.

use crate::algebra::InverseSemigroup;
use crate::chart::PartialBijection;
use crate::closure::closure;
use crate::error::{Error, Result};
use crate::hull::{has_lc, inverse_hull, nat_rho, InverseHull, NatHull, PartialShift};
use crate::inverse::{recognize_inverse, FiniteInverse};
use crate::iorder::SubsetEmbedding;
use crate::iso::is_morphism;
use crate::lifting::{
    hull_embedding, is_lc_preserving, lift_morphism, transport_to_hulls, LiftOutcome,
};
use crate::relations::{green, left_ample, rstar_l};
use crate::symbolic::{AdditiveNaturals, Bicyclic, Pair};
use crate::table::{samples, Elem, FiniteSemigroup};

/// A left ample semigroup with (LC) and `R* ∘ L` universal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LacObject {
    s: FiniteSemigroup,
}

impl LacObject {
    pub fn new(s: FiniteSemigroup) -> Result<Self> {
        lac_certificates(&s).map_err(Error::precondition)?;
        Ok(LacObject { s })
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.s
    }
}

fn lac_certificates(s: &FiniteSemigroup) -> std::result::Result<(), String> {
    if let Err(f) = left_ample(s) {
        return Err(format!("not left ample: {f}"));
    }
    if !has_lc(s) {
        return Err("(LC) fails".into());
    }
    if !rstar_l(s).is_universal() {
        return Err("R* ∘ L is not universal".into());
    }
    Ok(())
}

/// A bisimple inverse semigroup with a subsemigroup that is a union of
/// R-classes.
#[derive(Clone, Debug)]
pub struct BisObject {
    embedding: SubsetEmbedding<FiniteInverse>,
}

impl BisObject {
    pub fn new(q: FiniteInverse, members: Vec<Elem>) -> Result<Self> {
        let embedding = SubsetEmbedding::new(q, members)?;
        bis_certificates(&embedding).map_err(Error::precondition)?;
        Ok(BisObject { embedding })
    }

    pub fn ambient(&self) -> &FiniteInverse {
        self.embedding.ambient()
    }

    pub fn members(&self) -> &[Elem] {
        self.embedding.members()
    }

    pub fn embedding(&self) -> &SubsetEmbedding<FiniteInverse> {
        &self.embedding
    }

    /// `S` as a table, numbered in member order.
    pub fn member_table(&self) -> FiniteSemigroup {
        self.embedding.member_table()
    }

    fn local(&self, x: Elem) -> Option<usize> {
        self.members().binary_search(&x).ok()
    }
}

fn bis_certificates(e: &SubsetEmbedding<FiniteInverse>) -> std::result::Result<(), String> {
    let q = e.ambient();
    if !q.is_bisimple() {
        return Err("Q is not bisimple".into());
    }
    for m in e.members() {
        if let Some(x) = q.elements().find(|x| q.r_related(x, m) && !e.is_member(x)) {
            return Err(format!(
                "S is not a union of R-classes: {x} R {m} but {x} ∉ S"
            ));
        }
    }
    Ok(())
}

/// `F(S) = (Σ(S), Sθ)`, with its BIS certificates re-verified.
pub fn functor_f(s: &LacObject) -> Result<(BisObject, InverseHull)> {
    let hull = inverse_hull(s.semigroup())?;
    let embedding = hull_embedding(&hull)?;
    bis_certificates(&embedding)
        .map_err(|m| Error::consistency(format!("F(S) is not a BIS object: {m}")))?;
    Ok((BisObject { embedding }, hull))
}

/// `G(Q, S) = S`, with its LAC certificates re-verified.
pub fn functor_g(b: &BisObject) -> Result<LacObject> {
    let s = b.member_table();
    lac_certificates(&s)
        .map_err(|m| Error::consistency(format!("G(Q, S) is not a LAC object: {m}")))?;
    Ok(LacObject { s })
}

/// `F(φ)`: the lift of `φ: S → T` to `Σ(S) → Σ(T)`.
pub fn functor_f_morphism(s: &LacObject, t: &LacObject, phi: &[Elem]) -> Result<Vec<Elem>> {
    if !is_lc_preserving(s.semigroup(), t.semigroup(), phi)?.holds {
        return Err(Error::precondition("φ is not (LC)-preserving"));
    }
    let hs = inverse_hull(s.semigroup())?;
    let ht = inverse_hull(t.semigroup())?;
    match lift_morphism(
        &hull_embedding(&hs)?,
        &hull_embedding(&ht)?,
        &transport_to_hulls(&hs, &ht, phi),
    )? {
        LiftOutcome::Lifted(l) => Ok(l.map),
        LiftOutcome::Refused(r) => Err(Error::consistency(format!(
            "(LC)-preserving φ refused by {} at {:?}",
            r.condition, r.witness
        ))),
    }
}

/// `G(ψ)`: the restriction of `ψ: Q → P` to `S → T`, in member-local
/// indices. The restriction must be (LC)-preserving.
pub fn functor_g_morphism(b: &BisObject, c: &BisObject, psi: &[Elem]) -> Result<Vec<Elem>> {
    if psi.len() != b.ambient().order()
        || !is_morphism(b.ambient().semigroup(), c.ambient().semigroup(), psi)
    {
        return Err(Error::precondition("ψ is not a morphism Q → P"));
    }
    let restricted: Vec<Elem> = b
        .members()
        .iter()
        .map(|&x| {
            c.local(psi[x])
                .ok_or_else(|| Error::precondition(format!("ψ sends member {x} outside T")))
        })
        .collect::<Result<_>>()?;
    let (s, t) = (functor_g(b)?, functor_g(c)?);
    if !is_lc_preserving(s.semigroup(), t.semigroup(), &restricted)?.holds {
        return Err(Error::consistency(
            "restriction of a BIS morphism is not (LC)-preserving",
        ));
    }
    Ok(restricted)
}

/// `θ_S: S → GF(S)`, `a ↦ ρ_a`, as indices into the members of `Sθ`.
/// Checked to be an isomorphism onto `GF(S)`.
pub fn theta(s: &LacObject) -> Result<Vec<Elem>> {
    let (b, hull) = functor_f(s)?;
    let gf = functor_g(&b)?;
    let map: Vec<Elem> = hull
        .embedding
        .iter()
        .map(|&x| b.local(x).expect("ρ_a is a member"))
        .collect();
    if !is_bijection(&map) || !is_morphism(s.semigroup(), gf.semigroup(), &map) {
        return Err(Error::consistency("θ is not an isomorphism S → GF(S)"));
    }
    Ok(map)
}

fn is_bijection(map: &[Elem]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter()
        .all(|&y| y < seen.len() && !std::mem::replace(&mut seen[y], true))
}

/// `μ_(Q,S): Q → Σ(S)`, `a⁻¹b ↦ ρ_a⁻¹ρ_b`, checked well defined over every
/// quotient pair and an isomorphism carrying `S` onto `Sθ`.
pub fn mu(b: &BisObject) -> Result<(Vec<Elem>, InverseHull)> {
    let s = b.member_table();
    let hull = inverse_hull(&s)?;
    let q = b.ambient();
    let m = b.members();
    let mut map: Vec<Option<Elem>> = vec![None; q.order()];
    for (i, x) in m.iter().enumerate() {
        for (j, y) in m.iter().enumerate() {
            let z = q.quotient(x, y);
            let img = hull.quotient_of(i, j);
            match map[z] {
                None => map[z] = Some(img),
                Some(w) if w != img => {
                    return Err(Error::consistency(format!("μ is not well defined at {z}")))
                }
                _ => {}
            }
        }
    }
    let map: Vec<Elem> = map
        .into_iter()
        .enumerate()
        .map(|(z, v)| v.ok_or_else(|| Error::consistency(format!("{z} is not a quotient of S"))))
        .collect::<Result<_>>()?;
    if map.len() != hull.order()
        || !is_bijection(&map)
        || !is_morphism(q.semigroup(), hull.inverse.semigroup(), &map)
    {
        return Err(Error::consistency("μ is not an isomorphism Q → Σ(S)"));
    }
    for (i, &x) in m.iter().enumerate() {
        if map[x] != hull.embedding[i] {
            return Err(Error::consistency(format!("μ does not send {x} to ρ")));
        }
    }
    Ok((map, hull))
}

/// `θ_S ∘ FG(φ) = φ ∘ θ_T`, element by element.
pub fn lac_naturality(s: &LacObject, t: &LacObject, phi: &[Elem]) -> Result<bool> {
    let (bs, _) = functor_f(s)?;
    let (bt, _) = functor_f(t)?;
    let lifted = functor_f_morphism(s, t, phi)?;
    let fg_phi = functor_g_morphism(&bs, &bt, &lifted)?;
    let (th_s, th_t) = (theta(s)?, theta(t)?);
    for a in s.semigroup().elements() {
        if fg_phi[th_s[a]] != th_t[phi[a]] {
            return Err(Error::consistency(format!("θ square fails at {a}")));
        }
    }
    Ok(true)
}

/// `μ_(Q,S) ∘ FG(ψ) = ψ ∘ μ_(P,T)`, element by element.
pub fn bis_naturality(b: &BisObject, c: &BisObject, psi: &[Elem]) -> Result<bool> {
    let g_psi = functor_g_morphism(b, c, psi)?;
    let (s, t) = (functor_g(b)?, functor_g(c)?);
    let fg_psi = functor_f_morphism(&s, &t, &g_psi)?;
    let (mu_b, _) = mu(b)?;
    let (mu_c, _) = mu(c)?;
    for q in b.ambient().elements() {
        if fg_psi[mu_b[q]] != mu_c[psi[q]] {
            return Err(Error::consistency(format!("μ square fails at {q}")));
        }
    }
    Ok(true)
}

/// `FG(S) ≅ S` via θ for a LAC object and `GF(Q, S) ≅ (Q, S)` via μ for
/// the BIS object `F(S)`.
pub fn lac_round_trip(s: &LacObject) -> Result<()> {
    theta(s)?;
    let (b, _) = functor_f(s)?;
    mu(&b)?;
    Ok(())
}

pub fn bis_round_trip(b: &BisObject) -> Result<()> {
    mu(b)?;
    theta(&functor_g(b)?)?;
    Ok(())
}

/// The groups of order at most 6, as `(name, table)`.
pub fn small_groups() -> Vec<(String, FiniteSemigroup)> {
    let mut out: Vec<(String, FiniteSemigroup)> = (1..=6)
        .map(|n| (format!("Z{n}"), samples::cyclic_group(n)))
        .collect();
    out.push((
        "Z2xZ2".into(),
        samples::direct_product(&samples::cyclic_group(2), &samples::cyclic_group(2)),
    ));
    let swap = PartialBijection::new(3, &[(0, 1), (1, 0), (2, 2)]).expect("bijection");
    let cycle = PartialBijection::new(3, &[(0, 1), (1, 2), (2, 0)]).expect("bijection");
    let s3 = closure(&[swap, cycle], false, 100).expect("six permutations");
    out.push(("S3".into(), s3.semigroup));
    out
}

/// `(G, G)` for a group.
pub fn group_object(g: &FiniteSemigroup) -> Result<BisObject> {
    let q = recognize_inverse(g).map_err(|f| Error::precondition(format!("not inverse: {f}")))?;
    let all = q.elements().collect();
    BisObject::new(q, all)
}

/// `F((ℕ, +))` against the bicyclic monoid on a window: `ρ_a⁻¹ρ_b` is the
/// pair `(a, b)`, `n ↦ ρ_n` lands on `{(0, n)}`, products agree, and
/// `G` of `{(0, n)}` is `(ℕ, +)` again.
pub fn nat_bicyclic_round_trip(window: u64) -> Result<()> {
    let nat = AdditiveNaturals;
    for a in 0..=window {
        if nat_rho(a).as_pair() != (0, a) {
            return Err(Error::consistency(format!("ρ_{a} is not (0, {a})")));
        }
        for b in 0..=window {
            let q = NatHull.quotient(&nat_rho(a), &nat_rho(b));
            if q.as_pair() != (a, b) {
                return Err(Error::consistency(format!(
                    "ρ_{a}⁻¹ρ_{b} is not ({a}, {b})"
                )));
            }
            if Bicyclic.mul(&(0, a), &(0, b)) != (0, nat.mul(a, b)) {
                return Err(Error::consistency(format!("(0,{a})(0,{b}) ≠ (0,{a}+{b})")));
            }
        }
    }
    let pairs = Bicyclic::window(window);
    for x in &pairs {
        for y in &pairs {
            let px = PartialShift::quotient(x.0, x.1);
            let py = PartialShift::quotient(y.0, y.1);
            if NatHull.mul(&px, &py).as_pair() != Bicyclic.mul(x, y) {
                return Err(Error::consistency(format!(
                    "hull product differs at {x:?}·{y:?}"
                )));
            }
        }
    }
    Ok(())
}

/// `μ` for `(B, {(0, n)})`: `(a, b) = (0, a)⁻¹(0, b) ↦ ρ_a⁻¹ρ_b`, checked
/// multiplicative and bijective on the window.
pub fn bicyclic_mu_check(window: u64) -> Result<()> {
    let mu = |p: &Pair| NatHull.quotient(&nat_rho(p.0), &nat_rho(p.1));
    let pairs = Bicyclic::window(window);
    for p in &pairs {
        if Bicyclic.quotient(&(0, p.0), &(0, p.1)) != *p || mu(p).as_pair() != *p {
            return Err(Error::consistency(format!("μ fails to invert at {p:?}")));
        }
    }
    for x in &pairs {
        for y in &pairs {
            if mu(&Bicyclic.mul(x, y)) != NatHull.mul(&mu(x), &mu(y)) {
                return Err(Error::consistency(format!(
                    "μ is not multiplicative at {x:?}·{y:?}"
                )));
            }
        }
    }
    Ok(())
}

/// For a right cancellative monoid with (LC), `F` lands in a bisimple
/// inverse monoid in which `Sθ` is the R-class of the identity.
pub fn identity_r_class_check(s: &LacObject) -> Result<bool> {
    let (b, hull) = functor_f(s)?;
    let q = b.ambient();
    let Some(one) = q.semigroup().identity() else {
        return Ok(false);
    };
    let class: Vec<Elem> = q.elements().filter(|x| q.r_related(x, &one)).collect();
    let mut image = hull.members();
    image.sort_unstable();
    Ok(green(q.semigroup()).d.is_universal() && class == image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::{are_isomorphic, morphisms};

    #[test]
    fn small_groups_are_groups() {
        let gs = small_groups();
        assert_eq!(gs.len(), 8);
        for (name, g) in &gs {
            assert!(g.is_group(), "{name}");
        }
        let s3 = &gs[7].1;
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_commutative());
    }

    #[test]
    fn f_of_group_is_itself() {
        for (_, g) in small_groups() {
            let s = LacObject::new(g.clone()).unwrap();
            let (b, _) = functor_f(&s).unwrap();
            assert_eq!(b.members().len(), b.ambient().order());
            assert!(are_isomorphic(b.ambient().semigroup(), &g));
            lac_round_trip(&s).unwrap();
        }
    }

    #[test]
    fn group_objects_round_trip() {
        for (_, g) in small_groups() {
            bis_round_trip(&group_object(&g).unwrap()).unwrap();
        }
    }

    #[test]
    fn chain_is_not_a_lac_object() {
        assert!(LacObject::new(samples::two_chain()).is_err());
    }

    #[test]
    fn proper_subset_of_group_is_not_bis() {
        let q = recognize_inverse(&samples::cyclic_group(2)).unwrap();
        assert!(BisObject::new(q, vec![0]).is_err());
    }

    #[test]
    fn identity_squares_commute() {
        let g = samples::cyclic_group(3);
        let s = LacObject::new(g.clone()).unwrap();
        let id: Vec<Elem> = g.elements().collect();
        assert!(lac_naturality(&s, &s, &id).unwrap());
        let b = group_object(&g).unwrap();
        assert!(bis_naturality(&b, &b, &id).unwrap());
    }

    #[test]
    fn z4_to_z2_squares_commute() {
        let (z4, z2) = (samples::cyclic_group(4), samples::cyclic_group(2));
        let (s, t) = (
            LacObject::new(z4.clone()).unwrap(),
            LacObject::new(z2.clone()).unwrap(),
        );
        let (b, c) = (group_object(&z4).unwrap(), group_object(&z2).unwrap());
        let homs = morphisms(&z4, &z2);
        assert_eq!(homs.len(), 2);
        for phi in homs {
            assert!(lac_naturality(&s, &t, &phi).unwrap());
            assert!(bis_naturality(&b, &c, &phi).unwrap());
        }
    }

    #[test]
    fn f_preserves_identity_and_composition() {
        let (z4, z2) = (samples::cyclic_group(4), samples::cyclic_group(2));
        let (s, t) = (
            LacObject::new(z4.clone()).unwrap(),
            LacObject::new(z2.clone()).unwrap(),
        );
        let id4: Vec<Elem> = z4.elements().collect();
        let f_id = functor_f_morphism(&s, &s, &id4).unwrap();
        assert_eq!(f_id, (0..f_id.len()).collect::<Vec<_>>());
        for phi in morphisms(&z4, &z4) {
            for psi in morphisms(&z4, &z2) {
                let comp: Vec<Elem> = phi.iter().map(|&x| psi[x]).collect();
                let f_phi = functor_f_morphism(&s, &s, &phi).unwrap();
                let f_psi = functor_f_morphism(&s, &t, &psi).unwrap();
                let f_comp = functor_f_morphism(&s, &t, &comp).unwrap();
                let chained: Vec<Elem> = f_phi.iter().map(|&x| f_psi[x]).collect();
                assert_eq!(chained, f_comp);
            }
        }
    }

    #[test]
    fn naturals_and_bicyclic() {
        nat_bicyclic_round_trip(20).unwrap();
        bicyclic_mu_check(12).unwrap();
    }

    #[test]
    fn groups_are_identity_r_classes() {
        for (_, g) in small_groups() {
            assert!(identity_r_class_check(&LacObject::new(g).unwrap()).unwrap());
        }
    }
}

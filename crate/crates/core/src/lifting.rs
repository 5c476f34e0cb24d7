//! Lifting a morphism `φ: S → T` between left I-orders to their ambient
//! inverse semigroups by `(a⁻¹b)φ̄ = (aφ)⁻¹(bφ)`.
//!
//! Morphisms between members are given as vectors aligned with
//! [`SubsetEmbedding::members`], holding ambient indices of the target.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::InverseSemigroup;
use crate::error::{Error, Result};
use crate::hull::{has_lc, inverse_hull, lc_witness, InverseHull};
use crate::inverse::FiniteInverse;
use crate::iorder::SubsetEmbedding;
use crate::iso::morphisms;
use crate::relations::left_ample;
use crate::table::{Elem, FiniteSemigroup};

/// Which lifting condition a refusal violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LiftCondition {
    /// `a R b` in `Q` must give `aφ R bφ` in `P`.
    RPreservation,
    /// `(a, b, c) ∈ T` must give `(aφ, bφ, cφ) ∈ T`.
    TPreservation,
}

impl fmt::Display for LiftCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftCondition::RPreservation => write!(f, "R-preservation"),
            LiftCondition::TPreservation => write!(f, "T-preservation"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refusal {
    pub condition: LiftCondition,
    /// Ambient indices in `Q` of the offending pair or triple.
    pub witness: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lift {
    /// `map[q]` is `qφ̄`, for every `q` in `Q`.
    pub map: Vec<Elem>,
    /// Whether `φ̄` is onto; known only when `Sφ` is a left I-order in `P`.
    pub onto: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LiftOutcome {
    Lifted(Lift),
    Refused(Refusal),
}

impl LiftOutcome {
    pub fn lifted(&self) -> Option<&Lift> {
        match self {
            LiftOutcome::Lifted(l) => Some(l),
            LiftOutcome::Refused(_) => None,
        }
    }

    pub fn is_lifted(&self) -> bool {
        self.lifted().is_some()
    }
}

fn check_morphism(
    e: &SubsetEmbedding<FiniteInverse>,
    f: &SubsetEmbedding<FiniteInverse>,
    phi: &[Elem],
) -> Result<()> {
    let members = e.members();
    if phi.len() != members.len() {
        return Err(Error::input(format!(
            "morphism has {} images for {} members",
            phi.len(),
            members.len()
        )));
    }
    if let Some(&x) = phi.iter().find(|x| !f.is_member(x)) {
        return Err(Error::precondition(format!(
            "image {x} is not a member of T"
        )));
    }
    let q = e.ambient();
    let p = f.ambient();
    for (i, a) in members.iter().enumerate() {
        for (j, b) in members.iter().enumerate() {
            let k = members
                .binary_search(&q.mul(a, b))
                .expect("members are closed");
            if phi[k] != p.mul(&phi[i], &phi[j]) {
                return Err(Error::precondition(format!(
                    "φ is not multiplicative at ({a}, {b})"
                )));
            }
        }
    }
    Ok(())
}

/// Lifts `φ` from a straight left I-order `S ⊆ Q` to `φ̄: Q → P`, or names
/// the violated condition with a witness.
///
/// The lift is checked to be independent of the chosen quotient pair, to
/// restrict to `φ`, and to be multiplicative; failures of these are
/// consistency errors.
pub fn lift_morphism(
    e: &SubsetEmbedding<FiniteInverse>,
    f: &SubsetEmbedding<FiniteInverse>,
    phi: &[Elem],
) -> Result<LiftOutcome> {
    if !e.is_straight()? {
        return Err(Error::precondition("S is not straight in Q"));
    }
    check_morphism(e, f, phi)?;
    let q = e.ambient();
    let p = f.ambient();
    let m = e.members();
    let n = m.len();

    for i in 0..n {
        for j in 0..n {
            if q.r_related(&m[i], &m[j]) && !p.r_related(&phi[i], &phi[j]) {
                return Ok(LiftOutcome::Refused(Refusal {
                    condition: LiftCondition::RPreservation,
                    witness: vec![m[i], m[j]],
                }));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if e.t_contains(&m[i], &m[j], &m[k]) && !f.t_contains(&phi[i], &phi[j], &phi[k]) {
                    return Ok(LiftOutcome::Refused(Refusal {
                        condition: LiftCondition::TPreservation,
                        witness: vec![m[i], m[j], m[k]],
                    }));
                }
            }
        }
    }

    let mut map: Vec<Option<Elem>> = vec![None; q.order()];
    for i in 0..n {
        for j in 0..n {
            if !q.r_related(&m[i], &m[j]) {
                continue;
            }
            let x = q.quotient(&m[i], &m[j]);
            let y = p.quotient(&phi[i], &phi[j]);
            match map[x] {
                None => map[x] = Some(y),
                Some(z) if z != y => {
                    return Err(Error::consistency(format!(
                        "lift is not well defined at {x}: {z} and {y}"
                    )))
                }
                _ => {}
            }
        }
    }
    let map: Vec<Elem> = map
        .into_iter()
        .enumerate()
        .map(|(x, v)| v.ok_or_else(|| Error::consistency(format!("{x} has no straight witness"))))
        .collect::<Result<_>>()?;
    for (i, a) in m.iter().enumerate() {
        if map[*a] != phi[i] {
            return Err(Error::consistency(format!(
                "lift does not restrict to φ at {a}"
            )));
        }
    }
    for x in q.elements() {
        for y in q.elements() {
            if map[q.mul(&x, &y)] != p.mul(&map[x], &map[y]) {
                return Err(Error::consistency(format!(
                    "lift is not multiplicative at ({x}, {y})"
                )));
            }
        }
    }
    let mut image = phi.to_vec();
    image.sort_unstable();
    image.dedup();
    let image_embedding = SubsetEmbedding::new(p.clone(), image)?;
    let onto = if image_embedding.is_left_i_order() {
        let mut hit = vec![false; p.order()];
        for &y in &map {
            hit[y] = true;
        }
        if hit.contains(&false) {
            return Err(Error::consistency(
                "Sφ is a left I-order in P but the lift is not onto",
            ));
        }
        Some(true)
    } else {
        None
    };
    Ok(LiftOutcome::Lifted(Lift { map, onto }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IsoOutcome {
    /// `map[q]` is the image in `P` of `q ∈ Q`.
    Isomorphism(Vec<Elem>),
    Refused {
        direction: Direction,
        refusal: Refusal,
    },
}

/// Decides whether `Q` and `P` are isomorphic over `S` via the isomorphism
/// `φ: S → T`, by lifting `φ` and `φ⁻¹`.
pub fn iso_over_s(
    e: &SubsetEmbedding<FiniteInverse>,
    f: &SubsetEmbedding<FiniteInverse>,
    phi: &[Elem],
) -> Result<IsoOutcome> {
    let mut sorted = phi.to_vec();
    sorted.sort_unstable();
    if sorted != f.members() {
        return Err(Error::precondition(
            "φ is not a bijection onto the members of T",
        ));
    }
    let back: Vec<Elem> = f
        .members()
        .iter()
        .map(|t| e.members()[phi.iter().position(|x| x == t).expect("bijective")])
        .collect();
    let forward = match lift_morphism(e, f, phi)? {
        LiftOutcome::Lifted(l) => l.map,
        LiftOutcome::Refused(refusal) => {
            return Ok(IsoOutcome::Refused {
                direction: Direction::Forward,
                refusal,
            })
        }
    };
    let backward = match lift_morphism(f, e, &back)? {
        LiftOutcome::Lifted(l) => l.map,
        LiftOutcome::Refused(refusal) => {
            return Ok(IsoOutcome::Refused {
                direction: Direction::Backward,
                refusal,
            })
        }
    };
    let round_trip = (0..forward.len()).all(|x| backward[forward[x]] == x)
        && (0..backward.len()).all(|y| forward[backward[y]] == y);
    if !round_trip {
        return Err(Error::consistency(
            "lifts of φ and φ⁻¹ are not mutually inverse",
        ));
    }
    Ok(IsoOutcome::Isomorphism(forward))
}

/// Morphisms `S → T` that also preserve `⁺`.
pub fn two_one_morphisms(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<Vec<Vec<Elem>>> {
    let ps = left_ample(s)
        .map_err(|f| Error::precondition(format!("S is not left ample: {f}")))?
        .plus;
    let pt = left_ample(t)
        .map_err(|f| Error::precondition(format!("T is not left ample: {f}")))?
        .plus;
    Ok(morphisms(s, t)
        .into_iter()
        .filter(|phi| s.elements().all(|a| phi[ps[a]] == pt[phi[a]]))
        .collect())
}

/// Verdict of the (LC)-preserving test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcPreserving {
    pub holds: bool,
    /// `(b, c, w)` with `Sb ∩ Sc = Sw` but `T(bφ) ∩ T(cφ) ≠ T(wφ)`.
    pub witness: Option<(Elem, Elem, Elem)>,
}

fn lc_preserving_direct(s: &FiniteSemigroup, t: &FiniteSemigroup, phi: &[Elem]) -> LcPreserving {
    for b in s.elements() {
        for c in s.elements() {
            let w = lc_witness(s, b, c).expect("S has (LC)");
            let mut meet = t.left_multiples(phi[b]);
            meet.intersect_with(&t.left_multiples(phi[c]));
            if meet != t.left_multiples(phi[w]) {
                return LcPreserving {
                    holds: false,
                    witness: Some((b, c, w)),
                };
            }
        }
    }
    LcPreserving {
        holds: true,
        witness: None,
    }
}

/// `Sθ` inside `Σ(S)`.
pub fn hull_embedding(hull: &InverseHull) -> Result<SubsetEmbedding<FiniteInverse>> {
    SubsetEmbedding::new(hull.inverse.clone(), hull.members())
}

/// Transports `φ: S → T` to a morphism on hull members, aligned with the
/// sorted members of `Sθ`.
pub fn transport_to_hulls(hs: &InverseHull, ht: &InverseHull, phi: &[Elem]) -> Vec<Elem> {
    let mut members = hs.members();
    members.sort_unstable();
    members
        .iter()
        .map(|&x| ht.embedding[phi[hs.preimage(x).expect("member of Sθ")]])
        .collect()
}

/// Whether a (2,1)-morphism between left ample semigroups with (LC)
/// carries every `Sb ∩ Sc = Sw` to `T(bφ) ∩ T(cφ) = T(wφ)`.
///
/// The verdict is cross-checked against lifting `φ` between the inverse
/// hulls; disagreement is a consistency error.
pub fn is_lc_preserving(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    phi: &[Elem],
) -> Result<LcPreserving> {
    let ps = left_ample(s)
        .map_err(|f| Error::precondition(format!("S is not left ample: {f}")))?
        .plus;
    let pt = left_ample(t)
        .map_err(|f| Error::precondition(format!("T is not left ample: {f}")))?
        .plus;
    if !has_lc(s) {
        return Err(Error::precondition("S lacks (LC)"));
    }
    if !has_lc(t) {
        return Err(Error::precondition("T lacks (LC)"));
    }
    if phi.len() != s.order() || phi.iter().any(|&x| x >= t.order()) {
        return Err(Error::input("φ does not map S into T"));
    }
    for a in s.elements() {
        for b in s.elements() {
            if phi[s.mul(a, b)] != t.mul(phi[a], phi[b]) {
                return Err(Error::precondition(format!(
                    "φ is not multiplicative at ({a}, {b})"
                )));
            }
        }
        if phi[ps[a]] != pt[phi[a]] {
            return Err(Error::precondition(format!("φ does not preserve ⁺ at {a}")));
        }
    }
    let verdict = lc_preserving_direct(s, t, phi);
    let hs = inverse_hull(s)?;
    let ht = inverse_hull(t)?;
    let lifted = lift_morphism(
        &hull_embedding(&hs)?,
        &hull_embedding(&ht)?,
        &transport_to_hulls(&hs, &ht, phi),
    )?
    .is_lifted();
    if lifted != verdict.holds {
        return Err(Error::consistency(format!(
            "(LC)-preserving verdict {} disagrees with hull lifting {lifted}",
            verdict.holds
        )));
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inverse::{brandt, recognize_inverse};
    use crate::iso::is_morphism;
    use crate::relations::is_left_ample;
    use crate::table::samples::*;

    fn row(b: &crate::inverse::Brandt, i: usize) -> SubsetEmbedding<FiniteInverse> {
        SubsetEmbedding::new(b.inverse.clone(), b.row_order(i)).unwrap()
    }

    #[test]
    fn identity_lifts_to_identity() {
        let b = brandt(&cyclic_group(2), 2).unwrap();
        let e = row(&b, 0);
        let phi = e.members().to_vec();
        let lift = lift_morphism(&e, &e, &phi).unwrap();
        let l = lift.lifted().unwrap();
        assert_eq!(l.map, (0..b.inverse.order()).collect::<Vec<_>>());
        assert_eq!(l.onto, Some(true));
    }

    #[test]
    fn row_relabelling_lifts_to_isomorphism() {
        let b = brandt(&cyclic_group(2), 2).unwrap();
        let (e, f) = (row(&b, 0), row(&b, 1));
        let phi: Vec<Elem> = e
            .members()
            .iter()
            .map(|&x| match b.coords[x] {
                None => 0,
                Some((_, g, j)) => b.element(1, g, 1 - j),
            })
            .collect();
        match iso_over_s(&e, &f, &phi).unwrap() {
            IsoOutcome::Isomorphism(map) => {
                assert!(is_morphism(b.semigroup(), b.semigroup(), &map));
                let mut sorted = map.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, (0..9).collect::<Vec<_>>());
            }
            other => panic!("expected isomorphism, got {other:?}"),
        }
    }

    #[test]
    fn hull_is_isomorphic_to_itself_over_s() {
        let s = two_chain();
        let h = inverse_hull(&s).unwrap();
        let e = hull_embedding(&h).unwrap();
        let phi = e.members().to_vec();
        assert_eq!(
            iso_over_s(&e, &e, &phi).unwrap(),
            IsoOutcome::Isomorphism((0..h.order()).collect())
        );
    }

    #[test]
    fn renumbered_hull_is_isomorphic_over_s() {
        // closure numbering ignores generator order, so renumber by hand
        let b = brandt(&cyclic_group(2), 2).unwrap();
        let s = b.semigroup().restrict(&b.row_order(0)).unwrap().0;
        let h = inverse_hull(&s).unwrap();
        let n = h.order();
        let perm: Vec<Elem> = (0..n).map(|x| n - 1 - x).collect();
        let q2 = recognize_inverse(&h.inverse.semigroup().relabel(&perm)).unwrap();
        let emb2: Vec<Elem> = h.embedding.iter().map(|&x| perm[x]).collect();
        let e1 = hull_embedding(&h).unwrap();
        let e2 = SubsetEmbedding::new(q2, emb2).unwrap();
        let phi: Vec<Elem> = e1.members().iter().map(|&x| perm[x]).collect();
        assert_eq!(
            iso_over_s(&e1, &e2, &phi).unwrap(),
            IsoOutcome::Isomorphism(perm)
        );
    }

    #[test]
    fn inverse_morphisms_are_lc_preserving() {
        let g = cyclic_group(4);
        let z2 = cyclic_group(2);
        for phi in two_one_morphisms(&g, &z2).unwrap() {
            assert!(is_lc_preserving(&g, &z2, &phi).unwrap().holds);
        }
        let b = brandt(&trivial(), 2).unwrap();
        let bs = b.semigroup();
        for phi in two_one_morphisms(bs, bs).unwrap() {
            assert!(is_lc_preserving(bs, bs, &phi).unwrap().holds);
        }
    }

    #[test]
    fn identity_is_lc_preserving() {
        let s = chain(3);
        let id: Vec<Elem> = s.elements().collect();
        assert!(is_lc_preserving(&s, &s, &id).unwrap().holds);
    }

    #[test]
    fn semilattice_morphisms_are_always_lc_preserving() {
        // Se ∩ Sf = S(ef) and (ef)φ = eφ fφ, so no semilattice map fails.
        for m in 1..=3 {
            for n in 1..=3 {
                let (s, t) = (chain(m), chain(n));
                for phi in two_one_morphisms(&s, &t).unwrap() {
                    assert!(is_lc_preserving(&s, &t, &phi).unwrap().holds);
                }
            }
        }
    }

    #[test]
    fn non_morphism_is_rejected() {
        let s = cyclic_group(2);
        assert!(matches!(
            is_lc_preserving(&s, &s, &[1, 1]),
            Err(Error::Precondition(_))
        ));
        assert!(is_left_ample(&s));
    }
}

//! Finite inverse semigroups: recognition, Brandt semigroups, the congruence
//! σ, properness and E-unitarity.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::InverseSemigroup;
use crate::error::{Error, Result};
use crate::relations::{left_ample, r_star, RelationKind, RelationTable};
use crate::table::{Elem, FiniteSemigroup};

/// A finite semigroup certified inverse, with its inversion map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteInverse {
    semigroup: FiniteSemigroup,
    inv: Vec<Elem>,
}

impl FiniteInverse {
    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn inverse_map(&self) -> &[Elem] {
        &self.inv
    }

    pub fn order(&self) -> usize {
        self.semigroup.order()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        self.semigroup.elements()
    }

    /// Trusted constructor: `inv` must be the inverse map of `semigroup`.
    pub(crate) fn from_parts(semigroup: FiniteSemigroup, inv: Vec<Elem>) -> Self {
        debug_assert!(inv
            .iter()
            .enumerate()
            .all(|(a, &b)| semigroup.mul(semigroup.mul(a, b), a) == a));
        FiniteInverse { semigroup, inv }
    }

    /// One D-class.
    pub fn is_bisimple(&self) -> bool {
        let e0 = self.left_unit(&0);
        // every idempotent is D-related to e0: some q with qq⁻¹ = e0, q⁻¹q = f
        self.elements()
            .filter(|&f| self.semigroup.is_idempotent(f))
            .all(|f| {
                self.elements()
                    .any(|q| self.left_unit(&q) == e0 && self.right_unit(&q) == f)
            })
    }
}

impl InverseSemigroup for FiniteInverse {
    type Elem = Elem;

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.semigroup.mul(*a, *b)
    }

    fn inv(&self, a: &Elem) -> Elem {
        self.inv[*a]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InverseFailure {
    NotRegular { a: Elem },
    IdempotentsDoNotCommute { e: Elem, f: Elem },
}

impl fmt::Display for InverseFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InverseFailure::NotRegular { a } => write!(f, "element {a} is not regular"),
            InverseFailure::IdempotentsDoNotCommute { e, f: g } => {
                write!(f, "idempotents {e} and {g} do not commute")
            }
        }
    }
}

/// Recognises inverse semigroups as the regular semigroups with commuting
/// idempotents, returning the inverse map.
pub fn recognize_inverse(
    s: &FiniteSemigroup,
) -> std::result::Result<FiniteInverse, InverseFailure> {
    if let Some((e, f)) = s.idempotents_commute() {
        return Err(InverseFailure::IdempotentsDoNotCommute { e, f });
    }
    let mut inv = Vec::with_capacity(s.order());
    for a in s.elements() {
        let b = s
            .elements()
            .find(|&b| s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b)
            .ok_or(InverseFailure::NotRegular { a })?;
        inv.push(b);
    }
    Ok(FiniteInverse {
        semigroup: s.clone(),
        inv,
    })
}

/// A Brandt semigroup `B⁰(G, I)` with the coordinates of each element.
#[derive(Clone, Debug)]
pub struct Brandt {
    pub inverse: FiniteInverse,
    /// `None` for the zero, `Some((i, g, j))` otherwise.
    pub coords: Vec<Option<(usize, Elem, usize)>>,
    pub group: FiniteSemigroup,
    pub index_size: usize,
}

impl Brandt {
    pub fn semigroup(&self) -> &FiniteSemigroup {
        self.inverse.semigroup()
    }

    pub const ZERO: Elem = 0;

    pub fn element(&self, i: usize, g: Elem, j: usize) -> Elem {
        1 + (i * self.group.order() + g) * self.index_size + j
    }

    /// `(i,g,j) -> index` lines.
    pub fn dictionary(&self) -> String {
        let mut out = String::new();
        for (idx, c) in self.coords.iter().enumerate() {
            if let Some((i, g, j)) = c {
                out.push_str(&format!("({i},{},{j}) -> {idx}\n", self.group.name(*g)));
            }
        }
        out
    }

    /// `S_i = {(i, h, j) : h ∈ G, j ∈ I} ∪ {0}`.
    pub fn row_order(&self, i: usize) -> Vec<Elem> {
        let mut members = vec![Self::ZERO];
        for g in self.group.elements() {
            for j in 0..self.index_size {
                members.push(self.element(i, g, j));
            }
        }
        members.sort_unstable();
        members
    }
}

/// `B⁰(G, I)`: the zero at index 0, then `(i, g, j)` in lexicographic
/// order, with `(i,g,j)(k,h,l) = (i,gh,l)` if `j = k` and 0 otherwise.
pub fn brandt(group: &FiniteSemigroup, index_size: usize) -> Result<Brandt> {
    if index_size == 0 {
        return Err(Error::input("index set must be nonempty"));
    }
    if !group.is_group() {
        return Err(Error::input("Brandt parameters need a group"));
    }
    let m = group.order();
    let n = 1 + index_size * index_size * m;
    let mut coords = vec![None];
    for i in 0..index_size {
        for g in 0..m {
            for j in 0..index_size {
                coords.push(Some((i, g, j)));
            }
        }
    }
    let pos = |i: usize, g: Elem, j: usize| 1 + (i * m + g) * index_size + j;
    let mut table = Vec::with_capacity(n * n);
    for x in &coords {
        for y in &coords {
            table.push(match (x, y) {
                (Some((i, g, j)), Some((k, h, l))) if j == k => pos(*i, group.mul(*g, *h), *l),
                _ => 0,
            });
        }
    }
    let names = coords
        .iter()
        .map(|c| match c {
            None => "0".to_string(),
            Some((i, g, j)) => format!("({i},{},{j})", group.name(*g)),
        })
        .collect();
    let semigroup = FiniteSemigroup::from_flat_unchecked(n, table).with_names(names)?;
    let ginv: Vec<Elem> = {
        let id = group.identity().expect("group identity");
        group
            .elements()
            .map(|g| {
                group
                    .elements()
                    .find(|&h| group.mul(g, h) == id)
                    .expect("group inverse")
            })
            .collect()
    };
    let inv = coords
        .iter()
        .map(|c| match c {
            None => 0,
            Some((i, g, j)) => pos(*j, ginv[*g], *i),
        })
        .collect();
    Ok(Brandt {
        inverse: FiniteInverse::from_parts(semigroup, inv),
        coords,
        group: group.clone(),
        index_size,
    })
}

/// `a σ b` iff `ea = eb` for some idempotent `e`, computed definitionally.
pub fn sigma_relation(s: &FiniteSemigroup) -> RelationTable {
    let idem = s.idempotents();
    RelationTable::from_fn(RelationKind::Sigma, s.order(), |a, b| {
        idem.iter().any(|&e| s.mul(e, a) == s.mul(e, b))
    })
}

/// The quotient of `s` by a congruence, with each element's class index.
/// Classes are numbered in order of their least element.
pub fn quotient(s: &FiniteSemigroup, rel: &RelationTable) -> Result<(FiniteSemigroup, Vec<Elem>)> {
    if !rel.is_equivalence() {
        return Err(Error::input("relation is not an equivalence"));
    }
    let labels = rel.class_labels();
    let mut class_of = vec![0; s.order()];
    let mut reps = Vec::new();
    for a in s.elements() {
        if labels[a] == a {
            class_of[a] = reps.len();
            reps.push(a);
        } else {
            class_of[a] = class_of[labels[a]];
        }
    }
    for (a, b) in rel.pairs() {
        for c in s.elements() {
            if class_of[s.mul(c, a)] != class_of[s.mul(c, b)]
                || class_of[s.mul(a, c)] != class_of[s.mul(b, c)]
            {
                return Err(Error::input(format!(
                    "relation is not compatible at ({a},{b}) with {c}"
                )));
            }
        }
    }
    let k = reps.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            table.push(class_of[s.mul(a, b)]);
        }
    }
    Ok((FiniteSemigroup::from_flat_unchecked(k, table), class_of))
}

#[derive(Clone, Debug)]
pub struct Sigma {
    pub relation: RelationTable,
    pub quotient: FiniteSemigroup,
    pub class_of: Vec<Elem>,
}

/// σ on a left ample semigroup, with its quotient (checked right
/// cancellative).
pub fn sigma(s: &FiniteSemigroup) -> Result<Sigma> {
    if let Err(f) = left_ample(s) {
        return Err(Error::precondition(format!("not left ample: {f}")));
    }
    let relation = sigma_relation(s);
    let (q, class_of) = quotient(s, &relation)
        .map_err(|e| Error::consistency(format!("σ is not a congruence: {e}")))?;
    if !q.is_right_cancellative() {
        return Err(Error::consistency("S/σ is not right cancellative"));
    }
    Ok(Sigma {
        relation,
        quotient: q,
        class_of,
    })
}

/// `R* ∩ σ` is the identity relation.
pub fn is_proper(s: &FiniteSemigroup) -> Result<bool> {
    let sig = sigma(s)?;
    Ok(r_star(s).intersect(&sig.relation).is_identity())
}

/// `e, ea ∈ E` implies `a ∈ E`, checked over the given elements.
pub fn is_e_unitary_on<Q: InverseSemigroup>(q: &Q, elements: &[Q::Elem]) -> bool {
    let idem: Vec<_> = elements.iter().filter(|e| q.is_idempotent(e)).collect();
    elements
        .iter()
        .all(|a| q.is_idempotent(a) || !idem.iter().any(|e| q.is_idempotent(&q.mul(e, a))))
}

pub fn is_e_unitary(q: &FiniteInverse) -> bool {
    let all: Vec<Elem> = q.elements().collect();
    is_e_unitary_on(q, &all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::samples::*;

    #[test]
    fn semilattice_inverse_is_identity() {
        let v = recognize_inverse(&chain(3)).unwrap();
        assert_eq!(v.inverse_map(), &[0, 1, 2]);
    }

    #[test]
    fn left_zero_is_not_inverse() {
        assert!(matches!(
            recognize_inverse(&left_zero(2)),
            Err(InverseFailure::IdempotentsDoNotCommute { e: 0, f: 1 })
        ));
        assert!(matches!(
            recognize_inverse(&null(2)),
            Err(InverseFailure::NotRegular { a: 1 })
        ));
    }

    #[test]
    fn brandt_z2_inverses() {
        let b = brandt(&cyclic_group(2), 2).unwrap();
        assert_eq!(b.semigroup().order(), 9);
        let rec = recognize_inverse(b.semigroup()).unwrap();
        for (idx, c) in b.coords.iter().enumerate() {
            if let Some((i, g, j)) = *c {
                assert_eq!(rec.inverse_map()[idx], b.element(j, g, i));
            }
        }
        assert_eq!(rec.inverse_map(), b.inverse.inverse_map());
    }

    #[test]
    fn brandt_orders() {
        assert_eq!(brandt(&trivial(), 2).unwrap().semigroup().order(), 5);
        let b1 = brandt(&cyclic_group(2), 1).unwrap();
        let s = b1.semigroup();
        assert_eq!(s.order(), 3);
        // group with zero adjoined: removing 0 leaves a group
        let (g, _) = s.restrict(&[1, 2]).unwrap();
        assert!(g.is_group());
        assert!(s.elements().all(|x| s.mul(0, x) == 0 && s.mul(x, 0) == 0));
        assert!(brandt(&left_zero(2), 2).is_err());
    }

    #[test]
    fn brandt_is_categorical_at_zero() {
        for g in [trivial(), cyclic_group(2), cyclic_group(3)] {
            let b = brandt(&g, 2).unwrap();
            let s = b.semigroup();
            for e in s.idempotents() {
                for a in s.elements() {
                    if s.mul(e, a) != 0 {
                        assert_eq!(s.mul(e, a), a);
                    }
                    if s.mul(a, e) != 0 {
                        assert_eq!(s.mul(a, e), a);
                    }
                }
            }
        }
    }

    #[test]
    fn brandt_dictionary_lines() {
        let b = brandt(&cyclic_group(2), 2).unwrap();
        let d = b.dictionary();
        assert_eq!(d.lines().count(), 8);
        assert!(d.starts_with("(0,0,0) -> 1\n"));
    }

    #[test]
    fn sigma_on_groups_and_semilattices() {
        let g = cyclic_group(3);
        let sg = sigma(&g).unwrap();
        assert!(sg.relation.is_identity());
        assert_eq!(sg.quotient.order(), 3);
        let sl = sigma(&chain(3)).unwrap();
        assert!(sl.relation.is_universal());
        assert_eq!(sl.quotient.order(), 1);
        assert!(matches!(sigma(&null(2)), Err(Error::Precondition(_))));
    }

    #[test]
    fn proper_and_e_unitary_basics() {
        for s in [cyclic_group(4), chain(3)] {
            assert!(is_proper(&s).unwrap());
            assert!(is_e_unitary(&recognize_inverse(&s).unwrap()));
        }
        // B⁰(1,2) is not E-unitary: (0,1,0)·(0,1,1) ... 0 · a = 0 idempotent
        let b = brandt(&trivial(), 2).unwrap();
        assert!(!is_e_unitary(&b.inverse));
    }
}

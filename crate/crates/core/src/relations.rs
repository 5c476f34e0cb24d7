//! Green's relations, the relation R*, the `+` operation and recognition of
//! left ample semigroups.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::{Elem, FiniteSemigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RelationKind {
    R,
    L,
    H,
    D,
    J,
    Rstar,
    LeqR,
    LeqL,
    Sigma,
    /// Anything built by composing or intersecting other relations.
    Composite,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelationKind::R => "R",
            RelationKind::L => "L",
            RelationKind::H => "H",
            RelationKind::D => "D",
            RelationKind::J => "J",
            RelationKind::Rstar => "Rstar",
            RelationKind::LeqR => "leqR",
            RelationKind::LeqL => "leqL",
            RelationKind::Sigma => "sigma",
            RelationKind::Composite => "composite",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for RelationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "R" => RelationKind::R,
            "L" => RelationKind::L,
            "H" => RelationKind::H,
            "D" => RelationKind::D,
            "J" => RelationKind::J,
            "Rstar" => RelationKind::Rstar,
            "leqR" => RelationKind::LeqR,
            "leqL" => RelationKind::LeqL,
            "sigma" => RelationKind::Sigma,
            "composite" => RelationKind::Composite,
            other => return Err(Error::input(format!("unknown relation kind {other:?}"))),
        })
    }
}

/// A binary relation on `0..n` stored as one bit row per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTable {
    pub kind: RelationKind,
    rows: Vec<FixedBitSet>,
}

impl RelationTable {
    pub fn empty(kind: RelationKind, n: usize) -> Self {
        RelationTable {
            kind,
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_fn(kind: RelationKind, n: usize, f: impl Fn(Elem, Elem) -> bool) -> Self {
        let mut r = Self::empty(kind, n);
        for a in 0..n {
            for b in 0..n {
                if f(a, b) {
                    r.rows[a].insert(b);
                }
            }
        }
        r
    }

    pub fn identity(kind: RelationKind, n: usize) -> Self {
        Self::from_fn(kind, n, |a, b| a == b)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn contains(&self, a: Elem, b: Elem) -> bool {
        self.rows[a].contains(b)
    }

    pub fn insert(&mut self, a: Elem, b: Elem) {
        self.rows[a].insert(b);
    }

    pub fn row(&self, a: Elem) -> &FixedBitSet {
        &self.rows[a]
    }

    /// `a (self ∘ other) c` iff `a self b` and `b other c` for some `b`.
    pub fn compose(&self, other: &RelationTable) -> RelationTable {
        let n = self.size();
        let mut out = Self::empty(RelationKind::Composite, n);
        for a in 0..n {
            for b in self.rows[a].ones() {
                out.rows[a].union_with(&other.rows[b]);
            }
        }
        out
    }

    pub fn intersect(&self, other: &RelationTable) -> RelationTable {
        let mut out = self.clone();
        out.kind = RelationKind::Composite;
        for (r, o) in out.rows.iter_mut().zip(&other.rows) {
            r.intersect_with(o);
        }
        out
    }

    pub fn transpose(&self) -> RelationTable {
        let n = self.size();
        Self::from_fn(self.kind, n, |a, b| self.contains(b, a))
    }

    pub fn with_kind(mut self, kind: RelationKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn is_subset(&self, other: &RelationTable) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_subset(b))
    }

    pub fn same_pairs(&self, other: &RelationTable) -> bool {
        self.rows == other.rows
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size()).all(|a| self.contains(a, a))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(a, b)| self.contains(b, a))
    }

    pub fn is_transitive(&self) -> bool {
        self.compose(self).is_subset(self)
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    pub fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(a, r)| r.count_ones(..) == 1 && r.contains(a))
    }

    pub fn is_universal(&self) -> bool {
        let n = self.size();
        self.rows.iter().all(|r| r.count_ones(..) == n)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, r)| r.ones().map(move |b| (a, b)))
    }

    /// Class label of each element (the least element of its class), for an
    /// equivalence relation.
    pub fn class_labels(&self) -> Vec<Elem> {
        self.rows
            .iter()
            .map(|r| r.ones().next().unwrap_or(usize::MAX))
            .collect()
    }

    pub fn class_count(&self) -> usize {
        let labels = self.class_labels();
        labels.iter().enumerate().filter(|(i, &l)| *i == l).count()
    }

    /// `kind` header followed by one sorted `i j` line per related pair.
    pub fn dump(&self) -> String {
        let mut out = format!("{}\n", self.kind);
        for (a, b) in self.pairs() {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }

    pub fn parse_dump(text: &str, n: usize) -> Result<RelationTable> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let kind: RelationKind = lines
            .next()
            .ok_or_else(|| Error::input("empty relation dump"))?
            .parse()?;
        let mut r = Self::empty(kind, n);
        for line in lines {
            let mut it = line.split_whitespace().map(|t| t.parse::<usize>());
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(a)), Some(Ok(b)), None) if a < n && b < n => r.insert(a, b),
                _ => return Err(Error::input(format!("bad relation line {line:?}"))),
            }
        }
        Ok(r)
    }
}

/// Green's relations of a finite semigroup and their quasi-orders.
#[derive(Clone, Debug)]
pub struct Green {
    pub leq_r: RelationTable,
    pub leq_l: RelationTable,
    pub r: RelationTable,
    pub l: RelationTable,
    pub h: RelationTable,
    pub d: RelationTable,
    pub j: RelationTable,
}

/// `a ≤_R b` iff `aS¹ ⊆ bS¹`, `a ≤_L b` iff `S¹a ⊆ S¹b`; the equivalences
/// are the symmetric parts, `H = R ∧ L`, `D = R ∘ L` and `J` compares
/// principal two-sided ideals.
pub fn green(s: &FiniteSemigroup) -> Green {
    let n = s.order();
    let right: Vec<_> = s.elements().map(|a| s.principal_right_ideal(a)).collect();
    let left: Vec<_> = s.elements().map(|a| s.principal_left_ideal(a)).collect();
    let two: Vec<_> = s.elements().map(|a| s.principal_ideal(a)).collect();

    let leq_r = RelationTable::from_fn(RelationKind::LeqR, n, |a, b| right[a].is_subset(&right[b]));
    let leq_l = RelationTable::from_fn(RelationKind::LeqL, n, |a, b| left[a].is_subset(&left[b]));
    let r = RelationTable::from_fn(RelationKind::R, n, |a, b| right[a] == right[b]);
    let l = RelationTable::from_fn(RelationKind::L, n, |a, b| left[a] == left[b]);
    let h = r.intersect(&l).with_kind(RelationKind::H);
    let d = r.compose(&l).with_kind(RelationKind::D);
    let j = RelationTable::from_fn(RelationKind::J, n, |a, b| two[a] == two[b]);
    Green {
        leq_r,
        leq_l,
        r,
        l,
        h,
        d,
        j,
    }
}

/// The kernel of `x ↦ xa` on `S¹`, canonically labelled: entry 0 is the
/// formal identity, entry `x + 1` is element `x`.
fn right_kernel(s: &FiniteSemigroup, a: Elem) -> Vec<usize> {
    let mut first_seen = vec![usize::MAX; s.order()];
    let mut labels = Vec::with_capacity(s.order() + 1);
    let mut push = |v: Elem, labels: &mut Vec<usize>| {
        if first_seen[v] == usize::MAX {
            first_seen[v] = labels.len();
        }
        labels.push(first_seen[v]);
    };
    push(a, &mut labels);
    for x in s.elements() {
        push(s.mul(x, a), &mut labels);
    }
    labels
}

/// `a R* b` iff for all `x, y ∈ S¹`: `xa = ya ⇔ xb = yb`.
pub fn r_star(s: &FiniteSemigroup) -> RelationTable {
    let kernels: Vec<_> = s.elements().map(|a| right_kernel(s, a)).collect();
    RelationTable::from_fn(RelationKind::Rstar, s.order(), |a, b| {
        kernels[a] == kernels[b]
    })
}

/// The idempotent in the R*-class of `a`, if there is one.
///
/// Requires commuting idempotents (otherwise the idempotent need not be
/// unique).
pub fn plus_of(s: &FiniteSemigroup, a: Elem) -> Result<Option<Elem>> {
    if let Some((e, f)) = s.idempotents_commute() {
        return Err(Error::structure(format!(
            "idempotents {} and {} do not commute",
            s.name(e),
            s.name(f)
        )));
    }
    let rs = r_star(s);
    Ok(s.idempotents().into_iter().find(|&e| rs.contains(a, e)))
}

/// Which clause of the left ample definition failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AmpleFailure {
    /// `ef ≠ fe` for idempotents `e, f`.
    NotSemilattice { e: Elem, f: Elem },
    /// The R*-class of `a` contains no idempotent.
    NoPlus { a: Elem },
    /// `xy⁺ ≠ (xy⁺)⁺x`.
    AmpleIdentity { x: Elem, y: Elem },
}

impl AmpleFailure {
    pub fn clause(&self) -> &'static str {
        match self {
            AmpleFailure::NotSemilattice { .. } => "E(S) semilattice",
            AmpleFailure::NoPlus { .. } => "every R*-class has an idempotent",
            AmpleFailure::AmpleIdentity { .. } => "left ample identity",
        }
    }

    pub fn witness(&self) -> Vec<Elem> {
        match *self {
            AmpleFailure::NotSemilattice { e, f } => vec![e, f],
            AmpleFailure::NoPlus { a } => vec![a],
            AmpleFailure::AmpleIdentity { x, y } => vec![x, y],
        }
    }
}

impl fmt::Display for AmpleFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.clause(), self.witness())
    }
}

/// The `+` map of a left ample semigroup: `plus[a]` is the idempotent
/// R*-related to `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftAmple {
    pub plus: Vec<Elem>,
    pub r_star: RelationTable,
}

/// Decides whether `s` is left ample, returning the `+` map or the first
/// failing clause with its witness.
pub fn left_ample(s: &FiniteSemigroup) -> std::result::Result<LeftAmple, AmpleFailure> {
    if let Some((e, f)) = s.idempotents_commute() {
        return Err(AmpleFailure::NotSemilattice { e, f });
    }
    let rs = r_star(s);
    let idem = s.idempotents();
    let mut plus = Vec::with_capacity(s.order());
    for a in s.elements() {
        match idem.iter().find(|&&e| rs.contains(a, e)) {
            Some(&e) => plus.push(e),
            None => return Err(AmpleFailure::NoPlus { a }),
        }
    }
    for x in s.elements() {
        for y in s.elements() {
            let xy = s.mul(x, plus[y]);
            if xy != s.mul(plus[xy], x) {
                return Err(AmpleFailure::AmpleIdentity { x, y });
            }
        }
    }
    Ok(LeftAmple { plus, r_star: rs })
}

pub fn is_left_ample(s: &FiniteSemigroup) -> bool {
    left_ample(s).is_ok()
}

/// Computes `R* ∘ L` and `L ∘ R*` separately and compares them.
pub fn check_rstar_l_commute(s: &FiniteSemigroup) -> bool {
    rstar_l_commute_witness(s).is_none()
}

/// A pair in one composite but not the other, if any.
pub fn rstar_l_commute_witness(s: &FiniteSemigroup) -> Option<(Elem, Elem)> {
    let rs = r_star(s);
    let l = green(s).l;
    let rl = rs.compose(&l);
    let lr = l.compose(&rs);
    let missing = rl.pairs().find(|&(a, b)| !lr.contains(a, b));
    missing.or_else(|| lr.pairs().find(|&(a, b)| !rl.contains(a, b)))
}

/// `R* ∘ L` as a relation.
pub fn rstar_l(s: &FiniteSemigroup) -> RelationTable {
    r_star(s).compose(&green(s).l)
}

/// Every element is regular.
pub fn is_regular(s: &FiniteSemigroup) -> bool {
    s.elements()
        .all(|a| s.elements().any(|x| s.mul(s.mul(a, x), a) == a))
}

//! Closed-form infinite semigroups: the bicyclic monoid, the additive
//! naturals and the free monoid on two letters. They are multiplied by
//! formula and only enumerated inside a bounded window.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::InverseSemigroup;
use crate::error::{Error, Result};
use crate::table::FiniteSemigroup;

/// The bicyclic monoid on pairs of naturals:
/// `(a,b)(c,d) = (a − b + max(b,c), d − c + max(b,c))`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bicyclic;

pub type Pair = (u64, u64);

impl Bicyclic {
    pub const IDENTITY: Pair = (0, 0);

    /// All pairs with both coordinates at most `window`.
    pub fn window(window: u64) -> Vec<Pair> {
        (0..=window)
            .flat_map(|a| (0..=window).map(move |b| (a, b)))
            .collect()
    }

    /// The R-class of the identity, `{(0, n)}`, truncated to `n ≤ window`.
    pub fn identity_r_class(window: u64) -> Vec<Pair> {
        (0..=window).map(|n| (0, n)).collect()
    }

    /// Closed-form R oracle: equal first coordinates.
    pub fn r_oracle(a: &Pair, b: &Pair) -> bool {
        a.0 == b.0
    }

    /// Closed-form L oracle: equal second coordinates.
    pub fn l_oracle(a: &Pair, b: &Pair) -> bool {
        a.1 == b.1
    }
}

impl InverseSemigroup for Bicyclic {
    type Elem = Pair;

    fn mul(&self, &(a, b): &Pair, &(c, d): &Pair) -> Pair {
        let m = b.max(c);
        (a + m - b, d + m - c)
    }

    fn inv(&self, &(a, b): &Pair) -> Pair {
        (b, a)
    }
}

/// `(ℕ, +)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AdditiveNaturals;

impl AdditiveNaturals {
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a + b
    }

    /// `ℕa ∩ ℕb = ℕ max(a,b)`: the ideals are up-sets.
    pub fn lc_witness(&self, a: u64, b: u64) -> u64 {
        a.max(b)
    }
}

/// Words over the letters `0` (x) and `1` (y), with the empty word as
/// identity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FreeMonoid2;

pub type Word = Vec<u8>;

impl FreeMonoid2 {
    pub fn mul(&self, a: &[u8], b: &[u8]) -> Word {
        let mut w = a.to_vec();
        w.extend_from_slice(b);
        w
    }

    /// All words of length at most `max_len`, shortlex ordered.
    pub fn window(max_len: usize) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        let mut layer = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for letter in 0..2u8 {
                    let mut v = w.clone();
                    v.push(letter);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// `Sa ∩ Sb` is `Sb` if `a` is a suffix of `b`, `Sa` if `b` is a suffix
    /// of `a`, and empty (hence not principal) otherwise.
    pub fn lc_witness(&self, a: &[u8], b: &[u8]) -> Option<Word> {
        if b.ends_with(a) {
            Some(b.to_vec())
        } else if a.ends_with(b) {
            Some(a.to_vec())
        } else {
            None
        }
    }

    /// The free monoid is cancellative, so R* is universal.
    pub fn r_star_oracle(&self, _a: &[u8], _b: &[u8]) -> bool {
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymbolicKind {
    Bicyclic,
    AdditiveNaturals,
    FreeMonoidRank2,
}

impl std::str::FromStr for SymbolicKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bicyclic" => Ok(SymbolicKind::Bicyclic),
            "nat" => Ok(SymbolicKind::AdditiveNaturals),
            "free2" => Ok(SymbolicKind::FreeMonoidRank2),
            other => Err(Error::input(format!(
                "unknown builtin {other:?} (expected bicyclic, nat or free2)"
            ))),
        }
    }
}

impl fmt::Display for SymbolicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymbolicKind::Bicyclic => "bicyclic",
            SymbolicKind::AdditiveNaturals => "nat",
            SymbolicKind::FreeMonoidRank2 => "free2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymElem {
    Pair(u64, u64),
    Nat(u64),
    Word(Word),
}

impl fmt::Display for SymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymElem::Pair(a, b) => write!(f, "({a},{b})"),
            SymElem::Nat(n) => write!(f, "{n}"),
            SymElem::Word(w) if w.is_empty() => write!(f, "ε"),
            SymElem::Word(w) => {
                for &l in w {
                    f.write_str(if l == 0 { "x" } else { "y" })?;
                }
                Ok(())
            }
        }
    }
}

/// One of the built-in infinite semigroups together with the bound used
/// when it has to be enumerated (largest coordinate, or longest word).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicSemigroup {
    pub kind: SymbolicKind,
    pub window: u64,
}

impl SymbolicSemigroup {
    pub fn new(kind: SymbolicKind, window: u64) -> Self {
        SymbolicSemigroup { kind, window }
    }

    pub fn elements(&self) -> Vec<SymElem> {
        match self.kind {
            SymbolicKind::Bicyclic => Bicyclic::window(self.window)
                .into_iter()
                .map(|(a, b)| SymElem::Pair(a, b))
                .collect(),
            SymbolicKind::AdditiveNaturals => (0..=self.window).map(SymElem::Nat).collect(),
            SymbolicKind::FreeMonoidRank2 => FreeMonoid2::window(self.window as usize)
                .into_iter()
                .map(SymElem::Word)
                .collect(),
        }
    }

    pub fn mul(&self, a: &SymElem, b: &SymElem) -> Result<SymElem> {
        match (self.kind, a, b) {
            (SymbolicKind::Bicyclic, SymElem::Pair(a, b), SymElem::Pair(c, d)) => {
                let (x, y) = Bicyclic.mul(&(*a, *b), &(*c, *d));
                Ok(SymElem::Pair(x, y))
            }
            (SymbolicKind::AdditiveNaturals, SymElem::Nat(a), SymElem::Nat(b)) => {
                Ok(SymElem::Nat(a + b))
            }
            (SymbolicKind::FreeMonoidRank2, SymElem::Word(a), SymElem::Word(b)) => {
                Ok(SymElem::Word(FreeMonoid2.mul(a, b)))
            }
            _ => Err(Error::input(format!(
                "{a} and {b} are not elements of {}",
                self.kind
            ))),
        }
    }

    /// Inversion exists only for the bicyclic monoid.
    pub fn inv(&self, a: &SymElem) -> Option<SymElem> {
        match (self.kind, a) {
            (SymbolicKind::Bicyclic, SymElem::Pair(a, b)) => Some(SymElem::Pair(*b, *a)),
            _ => None,
        }
    }

    /// Infinite semigroups have no Cayley table.
    pub fn materialize_table(&self) -> Result<FiniteSemigroup> {
        Err(Error::unsupported(format!(
            "{} is infinite and has no Cayley table",
            self.kind
        )))
    }

    /// Checks associativity and the closed-form relation oracles on the
    /// window. Returns a list of `(claim, holds)` pairs.
    pub fn validate_window(&self) -> Vec<(String, bool)> {
        let elems = self.elements();
        let mut checks = Vec::new();
        let assoc = elems.iter().all(|a| {
            elems.iter().all(|b| {
                elems.iter().all(|c| {
                    let ab = self.mul(a, b).expect("window element");
                    let bc = self.mul(b, c).expect("window element");
                    self.mul(&ab, c).ok() == self.mul(a, &bc).ok()
                })
            })
        });
        checks.push(("associative on window".to_string(), assoc));
        match self.kind {
            SymbolicKind::Bicyclic => {
                let w = Bicyclic::window(self.window);
                let r_ok = w.iter().all(|a| {
                    w.iter()
                        .all(|b| Bicyclic::r_oracle(a, b) == Bicyclic.r_related(a, b))
                });
                let l_ok = w.iter().all(|a| {
                    w.iter()
                        .all(|b| Bicyclic::l_oracle(a, b) == Bicyclic.l_related(a, b))
                });
                let inv_ok = w.iter().all(|a| {
                    let i = Bicyclic.inv(a);
                    Bicyclic.mul(&Bicyclic.mul(a, &i), a) == *a
                        && Bicyclic.mul(&Bicyclic.mul(&i, a), &i) == i
                });
                checks.push(("R oracle agrees with aa⁻¹ = bb⁻¹".into(), r_ok));
                checks.push(("L oracle agrees with a⁻¹a = b⁻¹b".into(), l_ok));
                checks.push(("inverse axioms".into(), inv_ok));
            }
            SymbolicKind::AdditiveNaturals => {
                let n = self.window;
                // ideal a + ℕ ∩ b + ℕ, intersected with the window, begins at max(a,b)
                let ok = (0..=n).all(|a| {
                    (0..=n).all(|b| {
                        let first = (0..=2 * n).find(|&x| x >= a && x >= b);
                        first == Some(AdditiveNaturals.lc_witness(a, b))
                    })
                });
                checks.push(("LC witness is max(a,b)".into(), ok));
            }
            SymbolicKind::FreeMonoidRank2 => {
                let words = FreeMonoid2::window(self.window as usize);
                // right cancellation on the window implies the R* condition
                let cancel = words.iter().all(|a| {
                    words.iter().all(|x| {
                        words
                            .iter()
                            .all(|y| (FreeMonoid2.mul(x, a) == FreeMonoid2.mul(y, a)) == (x == y))
                    })
                });
                checks.push(("right cancellative (R* universal)".into(), cancel));
            }
        }
        checks
    }
}

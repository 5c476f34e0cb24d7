//! Partial bijections on a finite ground set (elements of symmetric inverse
//! monoids). Maps act on the right: `x(fg) = (xf)g`.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartialBijection {
    /// `map[x]` is the image of `x`, if `x` is in the domain.
    map: Vec<Option<usize>>,
}

impl PartialBijection {
    pub fn new(ground: usize, entries: &[(usize, usize)]) -> Result<Self> {
        let mut map = vec![None; ground];
        let mut hit = vec![false; ground];
        for &(s, t) in entries {
            if s >= ground || t >= ground {
                return Err(Error::input(format!(
                    "entry {s}->{t} outside ground set of size {ground}"
                )));
            }
            if map[s].is_some() {
                return Err(Error::input(format!("source {s} mapped twice")));
            }
            if hit[t] {
                return Err(Error::input(format!("target {t} hit twice")));
            }
            map[s] = Some(t);
            hit[t] = true;
        }
        Ok(PartialBijection { map })
    }

    pub fn empty(ground: usize) -> Self {
        PartialBijection {
            map: vec![None; ground],
        }
    }

    /// The identity map restricted to `domain`.
    pub fn identity_on(ground: usize, domain: impl IntoIterator<Item = usize>) -> Self {
        let mut map = vec![None; ground];
        for x in domain {
            map[x] = Some(x);
        }
        PartialBijection { map }
    }

    pub fn identity(ground: usize) -> Self {
        Self::identity_on(ground, 0..ground)
    }

    pub fn ground(&self) -> usize {
        self.map.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> Option<usize> {
        self.map.get(x).copied().flatten()
    }

    /// `(source, target)` pairs sorted by source.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(s, t)| t.map(|t| (s, t)))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.map.iter().filter(|t| t.is_some()).count()
    }

    pub fn domain(&self) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.ground());
        for (s, _) in self.entries() {
            set.insert(s);
        }
        set
    }

    pub fn image(&self) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.ground());
        for (_, t) in self.entries() {
            set.insert(t);
        }
        set
    }

    pub fn is_idempotent(&self) -> bool {
        self.entries().iter().all(|&(s, t)| s == t)
    }

    /// `x(fg) = (xf)g`, defined where `xf` lies in `dom g`.
    pub fn compose(&self, g: &PartialBijection) -> Result<PartialBijection> {
        if self.ground() != g.ground() {
            return Err(Error::input(format!(
                "ground mismatch: {} vs {}",
                self.ground(),
                g.ground()
            )));
        }
        Ok(self.then(g))
    }

    /// `compose` without the ground check; callers guarantee equal grounds.
    pub(crate) fn then(&self, g: &PartialBijection) -> PartialBijection {
        PartialBijection {
            map: self.map.iter().map(|t| t.and_then(|t| g.map[t])).collect(),
        }
    }

    pub fn invert(&self) -> PartialBijection {
        let mut map = vec![None; self.ground()];
        for (s, t) in self.entries() {
            map[t] = Some(s);
        }
        PartialBijection { map }
    }

    /// Parses `ground; s->t, s->t, ...`.
    pub fn parse(text: &str) -> Result<Self> {
        let (g, rest) = text
            .split_once(';')
            .ok_or_else(|| Error::input(format!("chart {text:?} lacks ';'")))?;
        let ground: usize = g
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("bad ground size {g:?}")))?;
        let mut entries = Vec::new();
        for part in rest.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (s, t) = part
                .split_once("->")
                .ok_or_else(|| Error::input(format!("bad entry {part:?}")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::input(format!("bad index {x:?}")))
            };
            entries.push((parse(s)?, parse(t)?));
        }
        Self::new(ground, &entries)
    }
}

impl Ord for PartialBijection {
    /// Domain size, then domain (lexicographic), then targets (lexicographic).
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.entries(), other.entries());
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().map(|e| e.0).cmp(b.iter().map(|e| e.0)))
            .then_with(|| a.iter().map(|e| e.1).cmp(b.iter().map(|e| e.1)))
            .then_with(|| self.ground().cmp(&other.ground()))
    }
}

impl PartialOrd for PartialBijection {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries()
            .iter()
            .map(|(s, t)| format!("{s}->{t}"))
            .collect();
        if parts.is_empty() {
            write!(f, "{};", self.ground())
        } else {
            write!(f, "{}; {}", self.ground(), parts.join(", "))
        }
    }
}

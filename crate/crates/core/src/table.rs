//! Finite semigroups given by a Cayley table over dense element indices.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Element of a finite semigroup: a dense index into its table.
pub type Elem = usize;

/// An associative multiplication table on `0..order`.
///
/// Elements are plain indices; `names` are only used for display. When
/// `has_adjoined_identity` is set, index 0 is a formal identity that was
/// added to a semigroup which did not have one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<Elem>,
    names: Option<Vec<String>>,
    has_adjoined_identity: bool,
}

/// Validates the shape of a square table, returning its order.
fn check_shape(rows: &[Vec<Elem>]) -> Result<usize> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::input("table must have at least one row"));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::input(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::input(format!(
                "cell ({i},{j}) = {v} is out of range 0..{n}"
            )));
        }
    }
    Ok(n)
}

/// True iff the square table associates on every triple.
///
/// Malformed tables (non-square, or an entry out of range) are an input
/// error naming the offending cell.
pub fn is_associative(rows: &[Vec<Elem>]) -> Result<bool> {
    let n = check_shape(rows)?;
    for a in 0..n {
        for b in 0..n {
            let ab = rows[a][b];
            for c in 0..n {
                if rows[ab][c] != rows[a][rows[b][c]] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

impl FiniteSemigroup {
    /// Builds a semigroup from rows, rejecting malformed or non-associative
    /// tables.
    pub fn new(rows: Vec<Vec<Elem>>) -> Result<Self> {
        let order = check_shape(&rows)?;
        let table: Vec<Elem> = rows.into_iter().flatten().collect();
        let s = FiniteSemigroup {
            order,
            table,
            names: None,
            has_adjoined_identity: false,
        };
        if let Some((a, b, c)) = s.non_associative_triple() {
            return Err(Error::input(format!(
                "table is not associative at ({a},{b},{c})"
            )));
        }
        Ok(s)
    }

    /// Builds a semigroup from a product function on `0..order`.
    pub fn from_fn(order: usize, f: impl Fn(Elem, Elem) -> Elem) -> Result<Self> {
        let rows = (0..order)
            .map(|a| (0..order).map(|b| f(a, b)).collect())
            .collect();
        Self::new(rows)
    }

    /// Trusted constructor for tables already known to be associative.
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<Elem>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        FiniteSemigroup {
            order,
            table,
            names: None,
            has_adjoined_identity: false,
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order {
            return Err(Error::input(format!(
                "{} names given for {} elements",
                names.len(),
                self.order
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn flat(&self) -> &[Elem] {
        &self.table
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of an element; falls back to its index.
    pub fn name(&self, a: Elem) -> String {
        match &self.names {
            Some(n) => n[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn has_adjoined_identity(&self) -> bool {
        self.has_adjoined_identity
    }

    pub fn non_associative_triple(&self) -> Option<(Elem, Elem, Elem)> {
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    /// The two-sided identity, if any.
    pub fn identity(&self) -> Option<Elem> {
        self.elements().find(|&e| {
            self.elements()
                .all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A commutative band.
    pub fn is_semilattice(&self) -> bool {
        self.is_commutative() && self.elements().all(|a| self.is_idempotent(a))
    }

    pub fn idempotents_commute(&self) -> Option<(Elem, Elem)> {
        let e = self.idempotents();
        for (i, &x) in e.iter().enumerate() {
            for &y in &e[i + 1..] {
                if self.mul(x, y) != self.mul(y, x) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// `ac = bc` implies `a = b`.
    pub fn is_right_cancellative(&self) -> bool {
        self.elements().all(|c| {
            let mut seen = FixedBitSet::with_capacity(self.order);
            self.elements().all(|a| {
                let v = self.mul(a, c);
                !seen.put(v)
            })
        })
    }

    /// `ca = cb` implies `a = b`.
    pub fn is_left_cancellative(&self) -> bool {
        self.elements().all(|c| {
            let mut seen = FixedBitSet::with_capacity(self.order);
            self.elements().all(|a| !seen.put(self.mul(c, a)))
        })
    }

    pub fn is_cancellative(&self) -> bool {
        self.is_left_cancellative() && self.is_right_cancellative()
    }

    /// A finite semigroup is a group iff it is cancellative.
    pub fn is_group(&self) -> bool {
        self.is_cancellative()
    }

    /// `Sa = { xa : x in S }` (no adjoined identity).
    pub fn left_multiples(&self, a: Elem) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order);
        for x in self.elements() {
            set.insert(self.mul(x, a));
        }
        set
    }

    /// `aS = { ax : x in S }` (no adjoined identity).
    pub fn right_multiples(&self, a: Elem) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order);
        for x in self.elements() {
            set.insert(self.mul(a, x));
        }
        set
    }

    /// `S¹a = {a} ∪ Sa`.
    pub fn principal_left_ideal(&self, a: Elem) -> FixedBitSet {
        let mut set = self.left_multiples(a);
        set.insert(a);
        set
    }

    /// `aS¹ = {a} ∪ aS`.
    pub fn principal_right_ideal(&self, a: Elem) -> FixedBitSet {
        let mut set = self.right_multiples(a);
        set.insert(a);
        set
    }

    /// `S¹aS¹`.
    pub fn principal_ideal(&self, a: Elem) -> FixedBitSet {
        let right = self.principal_right_ideal(a);
        let mut set = right.clone();
        for y in right.ones() {
            for x in self.elements() {
                set.insert(self.mul(x, y));
            }
        }
        set
    }

    pub fn is_closed(&self, members: &[Elem]) -> bool {
        let mut set = FixedBitSet::with_capacity(self.order);
        for &m in members {
            set.insert(m);
        }
        members
            .iter()
            .all(|&a| members.iter().all(|&b| set.contains(self.mul(a, b))))
    }

    /// The subsemigroup on `members` (kept in the given order), returned
    /// with the local-to-global index map.
    pub fn restrict(&self, members: &[Elem]) -> Result<(FiniteSemigroup, Vec<Elem>)> {
        if members.is_empty() {
            return Err(Error::input("empty member set"));
        }
        let mut local = vec![usize::MAX; self.order];
        for (i, &m) in members.iter().enumerate() {
            if m >= self.order {
                return Err(Error::input(format!("member {m} out of range")));
            }
            if local[m] != usize::MAX {
                return Err(Error::input(format!("member {m} listed twice")));
            }
            local[m] = i;
        }
        let k = members.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in members {
            for &b in members {
                let p = local[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::input(format!(
                        "members are not closed: {a}·{b} = {}",
                        self.mul(a, b)
                    )));
                }
                table.push(p);
            }
        }
        let mut sub = FiniteSemigroup::from_flat_unchecked(k, table);
        if let Some(n) = &self.names {
            sub.names = Some(members.iter().map(|&m| n[m].clone()).collect());
        }
        Ok((sub, members.to_vec()))
    }

    /// Renames element `a` to `perm[a]`.
    pub fn relabel(&self, perm: &[Elem]) -> FiniteSemigroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in self.elements() {
            for b in self.elements() {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        let mut out = FiniteSemigroup::from_flat_unchecked(n, table);
        if let Some(names) = &self.names {
            let mut renamed = vec![String::new(); n];
            for a in self.elements() {
                renamed[perm[a]] = names[a].clone();
            }
            out.names = Some(renamed);
        }
        out
    }

    /// `S¹`: returns `self` unchanged if it is already a monoid, otherwise a
    /// copy with a formal identity at index 0 and the old elements shifted
    /// up by one.
    pub fn with_identity(&self) -> FiniteSemigroup {
        if self.identity().is_some() {
            return self.clone();
        }
        let n = self.order + 1;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = match (a, b) {
                    (0, x) | (x, 0) => x,
                    (x, y) => self.mul(x - 1, y - 1) + 1,
                };
            }
        }
        let mut out = FiniteSemigroup::from_flat_unchecked(n, table);
        out.has_adjoined_identity = true;
        if let Some(names) = &self.names {
            let mut v = vec!["1".to_string()];
            v.extend(names.iter().cloned());
            out.names = Some(v);
        }
        out
    }

    /// Parses the Cayley text format: the order on the first line, then one
    /// whitespace-separated row per line, with an optional `# names: ...`
    /// line. Other `#` lines and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut names: Option<Vec<String>> = None;
        let mut lines = Vec::new();
        for raw in text.lines() {
            let line = raw.trim();
            if let Some(rest) = line.strip_prefix('#') {
                if let Some(list) = rest.trim().strip_prefix("names:") {
                    names = Some(list.split_whitespace().map(str::to_string).collect());
                }
                continue;
            }
            if !line.is_empty() {
                lines.push(line);
            }
        }
        let (head, body) = lines
            .split_first()
            .ok_or_else(|| Error::input("empty table file"))?;
        let n: usize = head
            .parse()
            .map_err(|_| Error::input(format!("bad order line {head:?}")))?;
        if body.len() != n {
            return Err(Error::input(format!(
                "expected {n} table rows, found {}",
                body.len()
            )));
        }
        let mut rows = Vec::with_capacity(n);
        for (i, line) in body.iter().enumerate() {
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::input(format!("row {i}: bad entry {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let s = FiniteSemigroup::new(rows)?;
        match names {
            Some(n) => s.with_names(n),
            None => Ok(s),
        }
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order)?;
        if let Some(names) = &self.names {
            writeln!(f, "# names: {}", names.join(" "))?;
        }
        for row in self.table.chunks(self.order) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Small named examples used across the crate and its tests.
pub mod samples {
    use super::*;

    pub fn trivial() -> FiniteSemigroup {
        FiniteSemigroup::from_flat_unchecked(1, vec![0])
    }

    /// The cyclic group of order `n` written additively.
    pub fn cyclic_group(n: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(n, |a, b| (a + b) % n).expect("cyclic group")
    }

    /// A chain `0 < 1 < ... < n-1` under min.
    pub fn chain(n: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(n, |a, b| a.min(b)).expect("chain")
    }

    /// The two-element chain with 0 the identity and 1 the zero.
    pub fn two_chain() -> FiniteSemigroup {
        chain(2).relabel(&[1, 0])
    }

    pub fn left_zero(n: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(n, |a, _| a).expect("left zero")
    }

    pub fn right_zero(n: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(n, |_, b| b).expect("right zero")
    }

    /// `{0, a}` with every product equal to 0.
    pub fn null(n: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(n, |_, _| 0).expect("null")
    }

    pub fn direct_product(s: &FiniteSemigroup, t: &FiniteSemigroup) -> FiniteSemigroup {
        let m = t.order();
        FiniteSemigroup::from_fn(s.order() * m, |x, y| {
            s.mul(x / m, y / m) * m + t.mul(x % m, y % m)
        })
        .expect("direct product")
    }
}

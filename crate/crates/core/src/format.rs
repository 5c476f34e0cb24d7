//! Text formats for element maps: one `i -> j` pair per line, `#` comments.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::table::Elem;

pub fn parse_map(text: &str) -> Result<BTreeMap<Elem, Elem>> {
    let mut map = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (l, r) = line
            .split_once("->")
            .ok_or_else(|| Error::input(format!("line {}: expected `i -> j`", n + 1)))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<Elem>()
                .map_err(|_| Error::input(format!("line {}: bad index {:?}", n + 1, s.trim())))
        };
        let (i, j) = (parse(l)?, parse(r)?);
        if map.insert(i, j).is_some() {
            return Err(Error::input(format!("line {}: {i} mapped twice", n + 1)));
        }
    }
    Ok(map)
}

pub fn format_map(map: impl IntoIterator<Item = (Elem, Elem)>) -> String {
    map.into_iter()
        .map(|(i, j)| format!("{i} -> {j}\n"))
        .collect()
}

/// A total map on `0..n` from a parsed file.
pub fn dense_map(map: &BTreeMap<Elem, Elem>, n: usize) -> Result<Vec<Elem>> {
    (0..n)
        .map(|i| {
            map.get(&i)
                .copied()
                .ok_or_else(|| Error::input(format!("no image given for {i}")))
        })
        .collect()
}

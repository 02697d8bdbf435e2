use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

/// Graded Betti numbers `β_{i,j}`, optionally refined by multidegree.
///
/// Only homological degrees `0..=i_max` are meaningful; zero entries are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
    multigraded: BTreeMap<(usize, Vec<u16>), u64>,
    i_max: usize,
}

impl BettiTable {
    pub fn new(i_max: usize) -> Self {
        BettiTable { i_max, ..Default::default() }
    }

    pub fn i_max(&self) -> usize {
        self.i_max
    }

    /// Adds `count` to `β_{i,m}` and to `β_{i,|m|}`.
    pub fn add_multigraded(&mut self, i: usize, m: Vec<u16>, count: u64) {
        if count == 0 {
            return;
        }
        let j = m.iter().map(|&e| e as usize).sum();
        *self.entries.entry((i, j)).or_default() += count;
        *self.multigraded.entry((i, m)).or_default() += count;
    }

    /// Adds `count` to `β_{i,j}` without a multigraded refinement.
    pub fn add(&mut self, i: usize, j: usize, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_default() += count;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn get_multigraded(&self, i: usize, m: &[u16]) -> u64 {
        self.multigraded.get(&(i, m.to_vec())).copied().unwrap_or(0)
    }

    /// Nonzero `((i, j), β_{i,j})`, ordered by `i` then `j`.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn multigraded(&self) -> &BTreeMap<(usize, Vec<u16>), u64> {
        &self.multigraded
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max (j - i)` over nonzero entries.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    /// Total Betti number in homological degree `i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((a, _), _)| *a == i).map(|(_, c)| c).sum()
    }

    /// Largest homological degree with a nonzero entry.
    pub fn max_i(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// Row `j - i = row`, columns `0..=i_max`.
    pub fn row(&self, row: i64) -> Vec<u64> {
        (0..=self.i_max)
            .map(|i| {
                let j = i as i64 + row;
                if j < 0 {
                    0
                } else {
                    self.get(i, j as usize)
                }
            })
            .collect()
    }

    /// Macaulay2-style layout: rows indexed by `j - i`, columns by `i`,
    /// zeros printed as dots.
    pub fn to_m2_string(&self) -> String {
        let Some(lo) = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min() else {
            return "0\n".into();
        };
        let hi = self.regularity().unwrap_or(lo);
        let cols = self.i_max + 1;
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut grid: Vec<(String, Vec<String>)> = Vec::new();
        grid.push((String::new(), (0..cols).map(|i| i.to_string()).collect()));
        grid.push(("total:".into(), (0..cols).map(|i| cell(self.total(i))).collect()));
        for r in lo..=hi {
            grid.push((format!("{r}:"), self.row(r).into_iter().map(cell).collect()));
        }
        let label_w = grid.iter().map(|g| g.0.len()).max().unwrap_or(0);
        let widths: Vec<usize> =
            (0..cols).map(|c| grid.iter().map(|g| g.1[c].len()).max().unwrap_or(1)).collect();
        let mut out = String::new();
        for (label, cells) in &grid {
            let _ = write!(out, "{label:>label_w$}");
            for (c, s) in cells.iter().enumerate() {
                let _ = write!(out, " {s:>w$}", w = widths[c]);
            }
            out.push('\n');
        }
        out
    }

    /// `[{"i", "j", "multiplicity"}, ...]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(&(i, j), &c)| json!({"i": i, "j": j, "multiplicity": c}))
                .collect(),
        )
    }

    /// Merges `other` into `self`, keeping the larger window.
    pub fn merge(&mut self, other: &BettiTable) {
        for (&(i, j), &c) in &other.entries {
            *self.entries.entry((i, j)).or_default() += c;
        }
        for ((i, m), &c) in &other.multigraded {
            *self.multigraded.entry((*i, m.clone())).or_default() += c;
        }
        self.i_max = self.i_max.max(other.i_max);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout() {
        let mut t = BettiTable::new(2);
        t.add(0, 2, 3);
        t.add(1, 3, 2);
        assert_eq!(t.to_m2_string(), "       0 1 2\ntotal: 3 2 .\n    2: 3 2 .\n");
        assert_eq!(t.regularity(), Some(2));
        assert_eq!(BettiTable::new(1).to_m2_string(), "0\n");
        assert_eq!(t.to_json()[1]["multiplicity"], 2);
    }

    #[test]
    fn multigraded_sums() {
        let mut t = BettiTable::new(1);
        t.add_multigraded(0, vec![1, 1, 0], 1);
        t.add_multigraded(0, vec![0, 1, 1], 1);
        assert_eq!(t.get(0, 2), 2);
        assert_eq!(t.get_multigraded(0, &[0, 1, 1]), 1);
    }
}

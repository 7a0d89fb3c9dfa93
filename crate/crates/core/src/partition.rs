//! Integer partitions and the Young-diagram geometry built on them.
//!
//! Boxes are 1-indexed `(row, col)` pairs with rows growing to the south and
//! columns to the east, so row `i` of a partition holds the boxes
//! `(i, 1), …, (i, λ_i)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a Young diagram, or a position adjacent to one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1, "cells are 1-indexed");
        Cell { row, col }
    }

    /// `(col - row) mod modulus`, always in `0..modulus`.
    pub fn residue(self, modulus: usize) -> usize {
        residue(self, modulus)
    }

    /// The mirror image across the main diagonal.
    pub fn transposed(self) -> Cell {
        Cell {
            row: self.col,
            col: self.row,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Residue class `(col - row) mod modulus` of a box.
pub fn residue(cell: Cell, modulus: usize) -> usize {
    let m = modulus as i64;
    (cell.col as i64 - cell.row as i64).rem_euclid(m) as usize
}

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored, so two partitions are equal exactly when
/// their Young diagrams are.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts`, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NonMonotone(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Validates signed input, rejecting negative values before monotonicity.
    pub fn from_signed(values: &[i64]) -> Result<Self> {
        if let Some(&v) = values.iter().find(|&&v| v < 0) {
            return Err(Error::NegativePart(v));
        }
        let mut trimmed = values.to_vec();
        while trimmed.last() == Some(&0) {
            trimmed.pop();
        }
        if trimmed.windows(2).any(|w| w[0] < w[1]) || trimmed.contains(&0) {
            return Err(Error::NonMonotone(trimmed));
        }
        Ok(Partition {
            parts: trimmed.into_iter().map(|v| v as usize).collect(),
        })
    }

    /// Sorts arbitrary positive parts into a partition (multiset semantics).
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::from_multiset(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_row` with 1-indexed rows; zero past the last part.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Length of column `col` (1-indexed), i.e. the transpose's part.
    pub fn column_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(1);
        Partition {
            parts: (1..=width).map(|c| self.column_len(c)).collect(),
        }
    }

    /// All boxes, row by row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    fn check_inside(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::BoxOutside {
                cell,
                partition: self.clone(),
            })
        }
    }

    pub fn arm(&self, cell: Cell) -> Result<usize> {
        self.check_inside(cell)?;
        Ok(self.part(cell.row) - cell.col)
    }

    pub fn leg(&self, cell: Cell) -> Result<usize> {
        self.check_inside(cell)?;
        Ok(self.column_len(cell.col) - cell.row)
    }

    pub fn hook(&self, cell: Cell) -> Result<usize> {
        Ok(self.arm(cell)? + self.leg(cell)? + 1)
    }

    /// `(arm, leg)` for a box already known to be inside.
    pub(crate) fn arm_leg_unchecked(&self, cell: Cell) -> (usize, usize) {
        (
            self.part(cell.row) - cell.col,
            self.column_len(cell.col) - cell.row,
        )
    }

    /// Hook lengths of every box, row by row.
    pub fn hooks(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        let tr = self.transpose();
        self.cells().map(move |c| {
            let h = self.part(c.row) - c.col + tr.part(c.col) - c.row + 1;
            (c, h)
        })
    }

    /// Removable boxes, southwest to northeast.
    pub fn removable_cells(&self) -> Vec<Cell> {
        let k = self.len();
        (1..=k)
            .rev()
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i, self.part(i)))
            .collect()
    }

    /// Addable boxes, southwest to northeast.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let k = self.len();
        (1..=k + 1)
            .rev()
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| Cell::new(i, self.part(i) + 1))
            .collect()
    }

    /// Boxes `(i, j)` with `(i+1, j+1)` outside, northeast to southwest.
    pub fn rim(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 1..=self.len() {
            let lo = self.part(i + 1).max(1);
            for j in (lo..=self.part(i)).rev() {
                out.push(Cell::new(i, j));
            }
        }
        out
    }

    /// The rim of the partition enlarged by all of its addable boxes.
    pub fn boundary(&self) -> Vec<Cell> {
        let mut enlarged = self.parts.clone();
        for cell in self.addable_cells() {
            if cell.row > enlarged.len() {
                enlarged.push(1);
            } else {
                enlarged[cell.row - 1] += 1;
            }
        }
        Partition { parts: enlarged }.rim()
    }

    /// No part value occurs `b` or more times.
    pub fn is_regular(&self, b: usize) -> bool {
        b >= 1 && self.parts.chunk_by(|x, y| x == y).all(|run| run.len() < b)
    }

    /// The partition with `cell` deleted, if that leaves a partition.
    pub fn without(&self, cell: Cell) -> Option<Partition> {
        if !self.contains(cell)
            || cell.col != self.part(cell.row)
            || self.part(cell.row + 1) == cell.col
        {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        Some(Partition::from_sorted_unchecked(parts))
    }

    /// The partition with `cell` added, if that yields a partition.
    pub fn with(&self, cell: Cell) -> Option<Partition> {
        if cell.col != self.part(cell.row) + 1
            || (cell.row > 1 && self.part(cell.row - 1) < cell.col)
        {
            return None;
        }
        let mut parts = self.parts.clone();
        if cell.row > parts.len() {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_multiset(parts)
    }

    /// Repeats every part `b` times (the `b⋆` operator).
    pub fn stretch(&self, b: usize) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .flat_map(|&p| std::iter::repeat_n(p, b))
                .collect(),
        }
    }

    /// Multiplies every part by `b`.
    pub fn scale_parts(&self, b: usize) -> Partition {
        Partition::from_multiset(self.parts.iter().map(|&p| p * b).collect())
    }

    /// Paper-style exponential notation such as `(2^2,1^3)`; `∅` when empty.
    pub fn exponential(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let body: Vec<String> = self
            .parts
            .chunk_by(|x, y| x == y)
            .map(|run| match run.len() {
                1 => run[0].to_string(),
                m => format!("{}^{}", run[0], m),
            })
            .collect();
        format!("({})", body.join(","))
    }

    /// Trusted constructor for code paths that maintain the invariant.
    pub(crate) fn from_sorted_unchecked(mut parts: Vec<usize>) -> Partition {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"5,4,2"`, exponential `"2^2,1"`, optional surrounding
    /// parentheses, and `""` or `"∅"` for the empty partition.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |reason: &str| Error::ParsePartition {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let mut body = text.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner.trim();
        }
        if body.is_empty() || body == "∅" {
            return Ok(Partition::empty());
        }
        let mut values = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let (value, times) = match token.split_once('^') {
                Some((v, m)) => (v.trim(), m.trim()),
                None => (token, "1"),
            };
            let value: i64 = value.parse().map_err(|_| bad("parts must be integers"))?;
            let times: usize = times
                .parse()
                .map_err(|_| bad("exponents must be nonnegative integers"))?;
            values.extend(std::iter::repeat_n(value, times));
        }
        Partition::from_signed(&values)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Every partition of `n`, in lexicographically decreasing order.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// Iterator returned by [`enumerate_partitions`].
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

/// Next partition in lexicographically decreasing order.
fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let pos = parts.iter().rposition(|&p| p > 1)?;
    let mut out = parts[..pos].to_vec();
    let head = parts[pos] - 1;
    // The decremented unit plus the trailing ones.
    let mut rest = parts.len() - pos;
    out.push(head);
    while rest > 0 {
        let take = rest.min(head);
        out.push(take);
        rest -= take;
    }
    Some(out)
}

//! Generalized column regularization `Cr_{a,b}`.
//!
//! Boxes `(i, j)` with `(b - a)·i + a·j = c` form the ladder `L_c`; consecutive
//! lattice points on a ladder are `a` rows apart and `b - a` columns apart,
//! with the lower one further west. Regularizing slides the boxes of every
//! ladder to its lowest positive positions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fraction::{gcd, ReducedFraction};
use crate::partition::{Cell, Partition};

/// A ladder `(b - a)·row + a·col = c` of the wall `a/b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ladder {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Ladder {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        check_wall(a, b)?;
        Ok(Ladder { a, b, c })
    }

    pub fn through(cell: Cell, a: usize, b: usize) -> Result<Self> {
        Ok(Ladder {
            a,
            b,
            c: ladder_index(cell, a, b)?,
        })
    }

    /// Every positive lattice point of the ladder, top to bottom.
    pub fn points(&self) -> Vec<Cell> {
        points_unchecked(self.c, self.a, self.b, usize::MAX)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        (self.b - self.a) * cell.row + self.a * cell.col == self.c
    }
}

/// A finite set of boxes that need not form a Young diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxSet {
    pub boxes: BTreeSet<Cell>,
}

impl BoxSet {
    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// The partition with exactly these boxes, if there is one.
    pub fn to_partition(&self) -> Option<Partition> {
        let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for cell in &self.boxes {
            rows.entry(cell.row).or_default().push(cell.col);
        }
        let mut parts = Vec::with_capacity(rows.len());
        for (expected_row, (row, cols)) in (1..).zip(rows) {
            // Columns arrive sorted from the BTreeSet.
            if row != expected_row || cols.iter().enumerate().any(|(k, &c)| c != k + 1) {
                return None;
            }
            parts.push(cols.len());
        }
        Partition::new(parts).ok()
    }

    /// One line per occupied row, `#` for a box and `.` for a hole.
    pub fn picture(&self) -> String {
        let max_row = self.boxes.iter().map(|c| c.row).max().unwrap_or(0);
        let max_col = self.boxes.iter().map(|c| c.col).max().unwrap_or(0);
        let mut out = String::new();
        for i in 1..=max_row {
            for j in 1..=max_col {
                out.push(if self.boxes.contains(&Cell::new(i, j)) {
                    '#'
                } else {
                    '.'
                });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BoxSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, cell) in self.boxes.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{cell}")?;
        }
        f.write_str("}")
    }
}

impl From<&Partition> for BoxSet {
    fn from(p: &Partition) -> Self {
        BoxSet {
            boxes: p.cells().collect(),
        }
    }
}

fn check_wall(a: usize, b: usize) -> Result<()> {
    if a == 0 || a >= b || gcd(a, b) != 1 {
        return Err(Error::InvalidWall { a, b });
    }
    Ok(())
}

/// `(b - a)·row + a·col`.
pub fn ladder_index(cell: Cell, a: usize, b: usize) -> Result<usize> {
    check_wall(a, b)?;
    Ok((b - a) * cell.row + a * cell.col)
}

fn points_unchecked(c: usize, a: usize, b: usize, max_row: usize) -> Vec<Cell> {
    let step = b - a;
    let mut out = Vec::new();
    let mut i = 1;
    while i <= max_row && step * i < c {
        let rest = c - step * i;
        if rest.is_multiple_of(a) {
            out.push(Cell::new(i, rest / a));
        }
        i += 1;
    }
    out
}

/// Positive lattice points of ladder `c` with row at most `max_row`, top to bottom.
pub fn ladder_points(c: usize, a: usize, b: usize, max_row: usize) -> Result<Vec<Cell>> {
    check_wall(a, b)?;
    Ok(points_unchecked(c, a, b, max_row))
}

/// Outcome of sliding every ladder, before checking the Young-diagram shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slide {
    pub result: BoxSet,
    /// Ladders whose boxes actually moved.
    pub moved_ladders: Vec<Ladder>,
}

/// Slides every ladder of `λ` without validating the result.
pub fn slide(lambda: &Partition, a: usize, b: usize) -> Result<Slide> {
    check_wall(a, b)?;
    let mut by_ladder: BTreeMap<usize, usize> = BTreeMap::new();
    for cell in lambda.cells() {
        *by_ladder
            .entry((b - a) * cell.row + a * cell.col)
            .or_default() += 1;
    }
    let mut result = BoxSet::default();
    let mut moved_ladders = Vec::new();
    for (c, count) in by_ladder {
        let points = points_unchecked(c, a, b, usize::MAX);
        let bottom = &points[points.len() - count..];
        if bottom.iter().any(|cell| !lambda.contains(*cell)) {
            moved_ladders.push(Ladder { a, b, c });
        }
        result.boxes.extend(bottom.iter().copied());
    }
    Ok(Slide {
        result,
        moved_ladders,
    })
}

/// `λ^{Cr_{a,b}}`, or the slid box set when it is not a Young diagram.
pub fn column_regularize(lambda: &Partition, a: usize, b: usize) -> Result<Partition> {
    let slid = slide(lambda, a, b)?;
    slid.result
        .to_partition()
        .ok_or(Error::NotAPartition(slid.result))
}

/// True iff `Cr_{a,b}` succeeds and leaves `λ` unchanged.
pub fn is_fixed_by(lambda: &Partition, a: usize, b: usize) -> Result<bool> {
    match column_regularize(lambda, a, b) {
        Ok(out) => Ok(&out == lambda),
        Err(Error::NotAPartition(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Hook-slope extremes of a nonempty partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeStats {
    /// `min (leg + 1) / hook` over all boxes.
    pub min_upper: ReducedFraction,
    /// `max leg / hook` over all boxes.
    pub max_lower: ReducedFraction,
}

pub fn slope_stats(lambda: &Partition) -> Result<SlopeStats> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let mut min_upper = ReducedFraction::ONE;
    let mut max_lower = ReducedFraction::ZERO;
    for cell in lambda.cells() {
        let (arm, leg) = lambda.arm_leg_unchecked(cell);
        let hook = arm + leg + 1;
        min_upper = min_upper.min(ReducedFraction::new(leg + 1, hook));
        max_lower = max_lower.max(ReducedFraction::new(leg, hook));
    }
    Ok(SlopeStats {
        min_upper,
        max_lower,
    })
}

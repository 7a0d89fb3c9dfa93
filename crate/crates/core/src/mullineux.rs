//! The Mullineux transpose `M_bT` and its extension `W_b` to all partitions.
//!
//! Two independent constructions are provided: deleting good boxes and
//! rebuilding from co-good boxes, and iterating the `J` operator that strips
//! the b-rim. They agree on every b-regular partition.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::cores::regular_decomposition;
use crate::error::{Error, Result};
use crate::partition::{residue, Cell, Partition};

/// Set `WALLCROSS_DEBUG=1` to cross-check the two constructions in release builds.
pub const DEBUG_ENV: &str = "WALLCROSS_DEBUG";

fn dual_check_enabled() -> bool {
    static FLAG: OnceLock<bool> = OnceLock::new();
    *FLAG.get_or_init(|| cfg!(debug_assertions) || std::env::var(DEBUG_ENV).is_ok_and(|v| v == "1"))
}

fn check_modulus(b: usize) -> Result<()> {
    if b < 2 {
        return Err(Error::InvalidModulus { got: b, min: 2 });
    }
    Ok(())
}

fn check_residue(b: usize, r: usize) -> Result<()> {
    check_modulus(b)?;
    if r >= b {
        return Err(Error::InvalidResidue {
            residue: r,
            modulus: b,
        });
    }
    Ok(())
}

fn check_regular(lambda: &Partition, b: usize) -> Result<()> {
    check_modulus(b)?;
    if !lambda.is_regular(b) {
        return Err(Error::NotRegular {
            partition: lambda.clone(),
            modulus: b,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RaKind {
    Removable,
    Addable,
}

/// Removable (`R`) and addable (`A`) boxes of one residue, southwest to northeast.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RaWord {
    pub tokens: Vec<(RaKind, Cell)>,
    pub residue: usize,
    pub modulus: usize,
}

impl RaWord {
    /// First `R` left after cancelling `RA` pairs.
    pub fn good(&self) -> Option<Cell> {
        let mut pending: Vec<Cell> = Vec::new();
        for &(kind, cell) in &self.tokens {
            match kind {
                RaKind::Removable => pending.push(cell),
                RaKind::Addable => {
                    pending.pop();
                }
            }
        }
        pending.first().copied()
    }

    /// Last `R` left after cancelling `AR` pairs.
    pub fn cogood(&self) -> Option<Cell> {
        let mut open_a = 0usize;
        let mut survivor = None;
        for &(kind, cell) in &self.tokens {
            match kind {
                RaKind::Addable => open_a += 1,
                RaKind::Removable if open_a > 0 => open_a -= 1,
                RaKind::Removable => survivor = Some(cell),
            }
        }
        survivor
    }

    pub fn has_removable(&self) -> bool {
        self.tokens.iter().any(|(k, _)| *k == RaKind::Removable)
    }

    pub fn has_addable(&self) -> bool {
        self.tokens.iter().any(|(k, _)| *k == RaKind::Addable)
    }
}

impl fmt::Display for RaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (kind, _) in &self.tokens {
            f.write_str(match kind {
                RaKind::Removable => "R",
                RaKind::Addable => "A",
            })?;
        }
        Ok(())
    }
}

pub fn ra_word(lambda: &Partition, b: usize, r: usize) -> Result<RaWord> {
    check_residue(b, r)?;
    let mut tokens: Vec<(RaKind, Cell)> = lambda
        .removable_cells()
        .into_iter()
        .map(|c| (RaKind::Removable, c))
        .chain(
            lambda
                .addable_cells()
                .into_iter()
                .map(|c| (RaKind::Addable, c)),
        )
        .filter(|(_, c)| residue(*c, b) == r)
        .collect();
    tokens.sort_by(|(_, x), (_, y)| y.row.cmp(&x.row).then(x.col.cmp(&y.col)));
    Ok(RaWord {
        tokens,
        residue: r,
        modulus: b,
    })
}

pub fn good_box(lambda: &Partition, b: usize, r: usize) -> Result<Option<Cell>> {
    Ok(ra_word(lambda, b, r)?.good())
}

pub fn cogood_box(lambda: &Partition, b: usize, r: usize) -> Result<Option<Cell>> {
    Ok(ra_word(lambda, b, r)?.cogood())
}

/// Residues and boxes deleted, in order, while peeling off good boxes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodSequence {
    pub residues: Vec<usize>,
    pub cells: Vec<Cell>,
}

/// Peels good boxes, always taking the one of smallest residue.
pub fn good_sequence(lambda: &Partition, b: usize) -> Result<GoodSequence> {
    good_sequence_by(lambda, b, |_| 0)
}

/// Peels good boxes; `choose` picks an index into the `(residue, box)`
/// candidates, which are listed by increasing residue.
pub fn good_sequence_by<F>(lambda: &Partition, b: usize, mut choose: F) -> Result<GoodSequence>
where
    F: FnMut(&[(usize, Cell)]) -> usize,
{
    check_regular(lambda, b)?;
    let mut current = lambda.clone();
    let mut seq = GoodSequence {
        residues: Vec::with_capacity(lambda.size()),
        cells: Vec::with_capacity(lambda.size()),
    };
    while !current.is_empty() {
        let candidates: Vec<(usize, Cell)> = (0..b)
            .filter_map(|r| ra_word(&current, b, r).ok()?.good().map(|c| (r, c)))
            .collect();
        if candidates.is_empty() {
            return Err(Error::NoGoodBox(current));
        }
        let (r, cell) = candidates[choose(&candidates).min(candidates.len() - 1)];
        current = current
            .without(cell)
            .ok_or_else(|| Error::InternalInvariant(format!("good box {cell} is not removable")))?;
        seq.residues.push(r);
        seq.cells.push(cell);
    }
    Ok(seq)
}

/// Rebuilds a partition from a co-good sequence, adding boxes in reverse order.
pub fn rebuild_from_cogood(residues: &[usize], b: usize) -> Result<Partition> {
    check_modulus(b)?;
    let mut current = Partition::empty();
    for &r in residues.iter().rev() {
        check_residue(b, r)?;
        let mut found: Option<Partition> = None;
        let mut count = 0;
        for cell in current.addable_cells() {
            if residue(cell, b) != r {
                continue;
            }
            let enlarged = current.with(cell).expect("addable box");
            if ra_word(&enlarged, b, r)?.cogood() == Some(cell) {
                count += 1;
                found = Some(enlarged);
            }
        }
        current = match (count, found) {
            (1, Some(next)) => next,
            (0, _) => {
                return Err(Error::NoCoGoodAddable {
                    partition: current,
                    residue: r,
                })
            }
            _ => {
                return Err(Error::AmbiguousCoGood {
                    partition: current,
                    residue: r,
                    count,
                })
            }
        };
    }
    Ok(current)
}

/// `M_bT` via good sequences and co-good rebuilding.
pub fn mullineux_transpose_good(lambda: &Partition, b: usize) -> Result<Partition> {
    let seq = good_sequence(lambda, b)?;
    rebuild_from_cogood(&seq.residues, b)
}

/// The b-rim: consecutive pieces of `b` rim boxes (the last may be shorter),
/// each starting at the end of the row after the one where the previous
/// piece stopped.
pub fn b_rim(lambda: &Partition, b: usize) -> Result<Vec<Cell>> {
    check_modulus(b)?;
    let rim = lambda.rim();
    let mut out = Vec::new();
    let mut start = 0;
    while start < rim.len() {
        let end = (start + b).min(rim.len());
        out.extend_from_slice(&rim[start..end]);
        let last_row = rim[end - 1].row;
        match rim[end..].iter().position(|c| c.row > last_row) {
            Some(offset) => start = end + offset,
            None => break,
        }
    }
    Ok(out)
}

/// `λ^I`: the partition left after deleting the b-rim.
pub fn strip_b_rim(lambda: &Partition, b: usize) -> Result<Partition> {
    let rim = b_rim(lambda, b)?;
    let mut parts = lambda.parts().to_vec();
    for cell in &rim {
        parts[cell.row - 1] -= 1;
    }
    Partition::new(parts).map_err(|_| {
        Error::InternalInvariant(format!(
            "removing the {b}-rim of {lambda} left a non-partition"
        ))
    })
}

fn j_step(lambda: &Partition, b: usize) -> Result<Partition> {
    let k = lambda.len();
    let stripped = strip_b_rim(lambda, b)?;
    let phi = lambda.size() - stripped.size();
    let delta = usize::from(phi.is_multiple_of(b));
    let values: Vec<i64> = (1..=k)
        .map(|i| (stripped.part(i) + if i < k { 1 } else { delta }) as i64)
        .collect();
    Partition::from_signed(&values).map_err(|_| Error::NotPartition(values))
}

/// `λ^J`: strip the b-rim, add one to each of the first `k - 1` rows and
/// `δ` to row `k`, where `δ = 1` iff `b` divides the size of the b-rim.
pub fn j_operator(lambda: &Partition, b: usize) -> Result<Partition> {
    check_regular(lambda, b)?;
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    j_step(lambda, b)
}

/// `λ^{X_b}`: the successive size drops under repeated `J`.
pub fn x_operator(lambda: &Partition, b: usize) -> Result<Partition> {
    check_regular(lambda, b)?;
    let mut current = lambda.clone();
    let mut drops: Vec<i64> = Vec::new();
    while !current.is_empty() {
        let next = j_step(&current, b)?;
        let drop = current.size() as i64 - next.size() as i64;
        drops.push(drop);
        if drop <= 0 || drops.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(drops));
        }
        current = next;
    }
    Partition::from_signed(&drops).map_err(|_| Error::NotPartition(drops))
}

/// The Mullineux transpose of a b-regular partition.
pub fn mullineux_transpose(lambda: &Partition, b: usize) -> Result<Partition> {
    let result = x_operator(lambda, b)?;
    if dual_check_enabled() {
        let other = mullineux_transpose_good(lambda, b)?;
        assert_eq!(
            result, other,
            "rim and good/co-good constructions disagree on {lambda} mod {b}"
        );
    }
    Ok(result)
}

/// `W_b(λ) = (ν^{M_b} ∪ b⋆μ^T)^T` for the decomposition `λ = ν ∪ b⋆μ`.
pub fn wallcross_map(lambda: &Partition, b: usize) -> Result<Partition> {
    let dec = regular_decomposition(lambda, b)?;
    let regular_image = mullineux_transpose(&dec.regular, b)?.transpose();
    let irregular_image = dec.irregular.transpose().stretch(b);
    Ok(regular_image.union(&irregular_image).transpose())
}

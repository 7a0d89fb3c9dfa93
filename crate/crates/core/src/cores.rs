//! b-regular decomposition, b-cores and b-quotients.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{residue, Cell, Partition};

/// `λ = regular ∪ b⋆irregular`, where `regular` has every multiplicity below `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularDecomposition {
    pub regular: Partition,
    pub irregular: Partition,
    pub modulus: usize,
}

impl RegularDecomposition {
    /// Reassembles the source partition.
    pub fn recombine(&self) -> Partition {
        self.regular.union(&self.irregular.stretch(self.modulus))
    }
}

/// Core and quotient of a partition with respect to one modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub modulus: usize,
}

fn check_modulus(b: usize) -> Result<()> {
    if b < 2 {
        return Err(Error::InvalidModulus { got: b, min: 2 });
    }
    Ok(())
}

/// Splits each multiplicity `m = q·b + r` into `r` regular and `q` irregular copies.
pub fn regular_decomposition(lambda: &Partition, b: usize) -> Result<RegularDecomposition> {
    check_modulus(b)?;
    let mut regular = Vec::new();
    let mut irregular = Vec::new();
    for run in lambda.parts().chunk_by(|x, y| x == y) {
        let value = run[0];
        regular.extend(std::iter::repeat_n(value, run.len() % b));
        irregular.extend(std::iter::repeat_n(value, run.len() / b));
    }
    Ok(RegularDecomposition {
        regular: Partition::from_sorted_unchecked(regular),
        irregular: Partition::from_sorted_unchecked(irregular),
        modulus: b,
    })
}

/// Removes the rim ribbon cut out by the hook of `cell`.
///
/// The ribbon runs along the rim from `(i, λ_i)` to `(λ'_j, j)`; after removal
/// rows `i..last` take the old lengths of the row below minus one and the last
/// row shrinks to `j - 1`.
pub(crate) fn remove_rim_hook(lambda: &Partition, cell: Cell) -> Partition {
    let last = lambda.column_len(cell.col);
    let mut parts = lambda.parts().to_vec();
    for r in cell.row..last {
        parts[r - 1] = lambda.part(r + 1) - 1;
    }
    parts[last - 1] = cell.col - 1;
    Partition::from_sorted_unchecked(parts)
}

fn cells_with_hook(lambda: &Partition, len: usize) -> Vec<Cell> {
    lambda
        .hooks()
        .filter(|&(_, h)| h == len)
        .map(|(c, _)| c)
        .collect()
}

/// The b-core, removing at each step the ribbon of the northeast-most box
/// whose hook length is exactly `b`.
pub fn core(lambda: &Partition, b: usize) -> Result<Partition> {
    check_modulus(b)?;
    let mut current = lambda.clone();
    loop {
        // Cells come row by row; the first row holding a b-hook is the
        // northernmost, and the last match within it the easternmost.
        let candidates = cells_with_hook(&current, b);
        let Some(first_row) = candidates.first().map(|c| c.row) else {
            return Ok(current);
        };
        let pick = candidates
            .iter()
            .filter(|c| c.row == first_row)
            .max_by_key(|c| c.col)
            .copied()
            .expect("nonempty row");
        current = remove_rim_hook(&current, pick);
    }
}

/// The b-core reached by removing b-ribbons in a random order.
pub fn core_random_order<R: Rng + ?Sized>(
    lambda: &Partition,
    b: usize,
    rng: &mut R,
) -> Result<Partition> {
    check_modulus(b)?;
    let mut current = lambda.clone();
    loop {
        let candidates = cells_with_hook(&current, b);
        match candidates.choose(rng) {
            None => return Ok(current),
            Some(&cell) => current = remove_rim_hook(&current, cell),
        }
    }
}

/// True iff no hook length is divisible by `b`.
pub fn is_core(lambda: &Partition, b: usize) -> Result<bool> {
    check_modulus(b)?;
    Ok(lambda.hooks().all(|(_, h)| h % b != 0))
}

/// The b-quotient `(λ_0, …, λ_{b-1})`.
///
/// A box `A` with `b | H(A)` belongs to entry `k`, where `k` is the residue of
/// the box ending its arm (the box ending its leg then has residue `k + 1`).
/// All such boxes of one row share that arm-end box, so entry `k` is read off
/// as the per-row counts of qualifying boxes, top to bottom.
pub fn quotient(lambda: &Partition, b: usize) -> Result<Vec<Partition>> {
    check_modulus(b)?;
    let tr = lambda.transpose();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); b];
    for i in 1..=lambda.len() {
        let arm_end = Cell::new(i, lambda.part(i));
        let k = residue(arm_end, b);
        let count = (1..=lambda.part(i))
            .filter(|&j| (lambda.part(i) - j + tr.part(j) - i + 1).is_multiple_of(b))
            .count();
        if count > 0 {
            rows[k].push(count);
        }
    }
    rows.into_iter()
        .enumerate()
        .map(|(k, counts)| {
            Partition::new(counts).map_err(|_| {
                Error::InternalInvariant(format!(
                    "quotient entry {k} of {lambda} mod {b} is not weakly decreasing"
                ))
            })
        })
        .collect()
}

/// Core and quotient together.
pub fn core_quotient(lambda: &Partition, b: usize) -> Result<CoreQuotient> {
    Ok(CoreQuotient {
        core: core(lambda, b)?,
        quotient: quotient(lambda, b)?,
        modulus: b,
    })
}

//! Farey walls and the three trajectory procedures across them.
//!
//! A trajectory starts with a partition of `n` on `[0, 1/n]` and produces one
//! partition per Farey interval, crossing each wall `a/b` with
//!
//! * `W_b` (combinatorial wall-crossing),
//! * `Cr_{a,b}` (generalized column regularization), or
//! * the part-divisibility rule `μ ∪ b·ν ↦ μ ∪ b·ν^T` (first algorithm).
//!
//! The statistic `d` of an interval uses the denominator of its right
//! endpoint and is absent on the last interval, whose right endpoint is 1.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::colreg::column_regularize;
use crate::cores::regular_decomposition;
use crate::error::{Error, Result};
use crate::fraction::ReducedFraction;
use crate::mullineux::wallcross_map;
use crate::partition::Partition;

/// The Farey sequence `F_n`, ascending from `0/1` to `1/1`.
pub fn farey(n: usize) -> Vec<ReducedFraction> {
    assert!(n >= 1, "Farey sequences start at order 1");
    let (mut a, mut b, mut c, mut d) = (0usize, 1usize, 1usize, n);
    let mut out = vec![ReducedFraction::ZERO];
    while c <= n {
        out.push(ReducedFraction::new(c, d));
        let k = (n + b) / d;
        (a, b, c, d) = (c, d, k * c - a, k * d - b);
    }
    out
}

/// Two consecutive terms of a Farey sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FareyInterval {
    pub lo: ReducedFraction,
    pub hi: ReducedFraction,
}

impl FareyInterval {
    /// Farey neighbours satisfy `hi.num·lo.den - lo.num·hi.den = 1`.
    pub fn is_adjacent(&self) -> bool {
        self.hi.num() * self.lo.den() == self.lo.num() * self.hi.den() + 1
    }

    /// The reflection `[1 - hi, 1 - lo]`.
    pub fn mirror(&self) -> FareyInterval {
        FareyInterval {
            lo: self.hi.complement(),
            hi: self.lo.complement(),
        }
    }
}

impl fmt::Display for FareyInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |x: ReducedFraction| match (x.num(), x.den()) {
            (0, _) => "0".to_string(),
            (1, 1) => "1".to_string(),
            _ => x.to_string(),
        };
        write!(f, "[{},{}]", show(self.lo), show(self.hi))
    }
}

/// Consecutive pairs of `F_n`.
pub fn intervals(n: usize) -> Vec<FareyInterval> {
    farey(n)
        .windows(2)
        .map(|w| FareyInterval { lo: w[0], hi: w[1] })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    /// `B²`: cross `a/b` with `W_b`.
    Wallcross,
    /// `B̃`: cross `a/b` with `Cr_{a,b}`.
    Colreg,
    /// `B¹`: cross `a/b` by transposing the multiples of `b`.
    First,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Wallcross, Algorithm::Colreg, Algorithm::First];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Wallcross => "wallcross",
            Algorithm::Colreg => "colreg",
            Algorithm::First => "first",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrajectoryEntry {
    #[serde(flatten)]
    pub interval: FareyInterval,
    pub partition: Partition,
    pub d: Option<usize>,
}

/// One partition per Farey interval of order `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TrajectoryRepr")]
pub struct Trajectory {
    pub n: usize,
    pub start: Partition,
    pub entries: Vec<TrajectoryEntry>,
}

#[derive(Deserialize)]
struct TrajectoryRepr {
    n: usize,
    start: Partition,
    entries: Vec<TrajectoryEntry>,
}

impl TryFrom<TrajectoryRepr> for Trajectory {
    type Error = String;

    fn try_from(raw: TrajectoryRepr) -> std::result::Result<Self, String> {
        let t = Trajectory {
            n: raw.n,
            start: raw.start,
            entries: raw.entries,
        };
        t.validate()?;
        Ok(t)
    }
}

impl Trajectory {
    /// Checks the structural invariants of a trajectory.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let first = self.entries.first().ok_or("trajectory has no entries")?;
        if first.partition != self.start {
            return Err("first entry must be the start partition".into());
        }
        if first.interval.lo != ReducedFraction::ZERO {
            return Err("first interval must start at 0".into());
        }
        for (k, e) in self.entries.iter().enumerate() {
            if !e.interval.is_adjacent() {
                return Err(format!("interval {} is not a Farey pair", e.interval));
            }
            if e.partition.size() != self.n {
                return Err(format!("entry {k} is not a partition of {}", self.n));
            }
            let last = e.interval.hi == ReducedFraction::ONE;
            if last != e.d.is_none() {
                return Err(format!(
                    "entry {k}: d must be absent exactly on the last interval"
                ));
            }
        }
        if self
            .entries
            .windows(2)
            .any(|w| w[0].interval.hi != w[1].interval.lo)
        {
            return Err("intervals are not consecutive".into());
        }
        Ok(())
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.entries.iter().map(|e| &e.partition)
    }

    pub fn last(&self) -> &Partition {
        &self.entries.last().expect("nonempty trajectory").partition
    }

    /// Maximal runs of consecutive entries with the same partition and `d`,
    /// each reported with the union of its intervals.
    pub fn grouped(&self) -> Vec<TrajectoryEntry> {
        let mut out: Vec<TrajectoryEntry> = Vec::new();
        for e in &self.entries {
            match out.last_mut() {
                Some(g) if g.partition == e.partition && g.d == e.d => {
                    g.interval.hi = e.interval.hi
                }
                _ => out.push(e.clone()),
            }
        }
        out
    }

    /// The distinct partitions in order of appearance, with runs merged.
    pub fn distinct_partitions(&self) -> Vec<Partition> {
        let mut out: Vec<Partition> = Vec::new();
        for p in self.partitions() {
            if out.last() != Some(p) {
                out.push(p.clone());
            }
        }
        out
    }

    pub fn d_values(&self) -> Vec<Option<usize>> {
        self.entries.iter().map(|e| e.d).collect()
    }
}

/// Interior walls where the partition changes, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakList {
    pub walls: Vec<ReducedFraction>,
}

pub fn breaks(t: &Trajectory) -> BreakList {
    BreakList {
        walls: t
            .entries
            .windows(2)
            .filter(|w| w[0].partition != w[1].partition)
            .map(|w| w[0].interval.hi)
            .collect(),
    }
}

/// `b·|Irr_b(λ)|`.
pub fn irregular_statistic(lambda: &Partition, b: usize) -> usize {
    if b < 2 {
        return 0;
    }
    let dec = regular_decomposition(lambda, b).expect("modulus checked");
    b * dec.irregular.size()
}

/// Splits `λ = μ ∪ b·ν` with no part of `μ` divisible by `b`; returns `(μ, ν)`.
pub fn split_multiples(lambda: &Partition, b: usize) -> (Partition, Partition) {
    let (mult, rest): (Vec<usize>, Vec<usize>) = lambda.parts().iter().partition(|&&p| p % b == 0);
    (
        Partition::from_multiset(rest),
        Partition::from_multiset(mult.into_iter().map(|p| p / b).collect()),
    )
}

/// `b·|ν|` for the split `λ = μ ∪ b·ν`.
pub fn multiple_statistic(lambda: &Partition, b: usize) -> usize {
    b * split_multiples(lambda, b).1.size()
}

/// One crossing of the first algorithm: `μ ∪ b·ν ↦ μ ∪ b·ν^T`.
pub fn first_step(lambda: &Partition, b: usize) -> Partition {
    let (rest, mult) = split_multiples(lambda, b);
    rest.union(&mult.transpose().scale_parts(b))
}

fn run<S, D>(lambda: &Partition, n: usize, mut step: S, stat: D) -> Result<Trajectory>
where
    S: FnMut(&Partition, ReducedFraction) -> Result<Partition>,
    D: Fn(&Partition, usize) -> usize,
{
    if n < 1 {
        return Err(Error::InvalidLength { got: n, min: 1 });
    }
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: lambda.size(),
        });
    }
    let ivs = intervals(n);
    let mut entries = Vec::with_capacity(ivs.len());
    let mut current = lambda.clone();
    for (k, iv) in ivs.iter().enumerate() {
        if k > 0 {
            current = step(&current, iv.lo)?;
        }
        let d = (iv.hi != ReducedFraction::ONE).then(|| stat(&current, iv.hi.den()));
        entries.push(TrajectoryEntry {
            interval: *iv,
            partition: current.clone(),
            d,
        });
    }
    Ok(Trajectory {
        n,
        start: lambda.clone(),
        entries,
    })
}

/// `B²_I(λ)` and `D²_I(λ)` over every interval.
pub fn trajectory_wallcross(lambda: &Partition, n: usize) -> Result<Trajectory> {
    run(
        lambda,
        n,
        |p, wall| wallcross_map(p, wall.den()),
        irregular_statistic,
    )
}

/// `B̃_I(λ)` over every interval; `d` carries the same statistic as the
/// wall-crossing trajectory so the two can be compared entry by entry.
pub fn trajectory_colreg(lambda: &Partition, n: usize) -> Result<Trajectory> {
    run(
        lambda,
        n,
        |p, wall| {
            column_regularize(p, wall.num(), wall.den()).map_err(|e| match e {
                Error::NotAPartition(boxes) => Error::ColregFailure {
                    partition: p.clone(),
                    a: wall.num(),
                    b: wall.den(),
                    boxes,
                },
                other => other,
            })
        },
        irregular_statistic,
    )
}

/// `B¹_I(λ)` and `D¹_I(λ)` over every interval.
pub fn trajectory_first(lambda: &Partition, n: usize) -> Result<Trajectory> {
    run(
        lambda,
        n,
        |p, wall| Ok(first_step(p, wall.den())),
        multiple_statistic,
    )
}

pub fn trajectory(algo: Algorithm, lambda: &Partition, n: usize) -> Result<Trajectory> {
    match algo {
        Algorithm::Wallcross => trajectory_wallcross(lambda, n),
        Algorithm::Colreg => trajectory_colreg(lambda, n),
        Algorithm::First => trajectory_first(lambda, n),
    }
}

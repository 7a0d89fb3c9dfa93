//! Exhaustive checkers for the structural claims about trajectories.
//!
//! Each checker sweeps every partition of each requested `n` and collects all
//! counterexamples; nothing aborts early. Sweeps run on a dedicated rayon pool
//! and are merged in enumeration order, so verdicts do not depend on the
//! worker count.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::colreg::{column_regularize, slide, slope_stats};
use crate::cores::{
    core, core_quotient, core_random_order, is_core, quotient, regular_decomposition,
};
use crate::error::{Error, Result};
use crate::fraction::{gcd, ReducedFraction};
use crate::mullineux::{
    b_rim, cogood_box, good_box, j_operator, mullineux_transpose, mullineux_transpose_good,
    ra_word, strip_b_rim, wallcross_map, x_operator,
};
use crate::partition::{enumerate_partitions, Cell, Partition};
use crate::wallcross::{
    breaks, trajectory_colreg, trajectory_first, trajectory_wallcross, Trajectory,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// Wall-crossing and column regularization agree on `(n)`, with breaks at
    /// the hook-slope extremes.
    Main,
    /// `(n)` is the only start whose trajectory stays regular.
    Monotone,
    /// Cores agree across each break of the `(n)` trajectory and the
    /// quotients are single conjugate rectangles.
    Quotient,
    /// `D¹_I(λ) = D²_I(λ^T)`; an open statement, so failures are findings.
    Conjecture,
    /// The good/co-good and `X_b` constructions agree.
    Equivalence,
    /// `λ^{M_bT} = λ` iff `λ` is a b-core.
    CoreFixedpoint,
    /// Column-regularization trajectories never fail and end at `(1^n)`.
    ColregTotality,
    /// Facts about cores, the `J` operator and the first hook along regular runs.
    Lemmas,
    /// Basic invariants of the primitives and of `W_b`.
    Properties,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::Main,
        Claim::Monotone,
        Claim::Quotient,
        Claim::Conjecture,
        Claim::Equivalence,
        Claim::CoreFixedpoint,
        Claim::ColregTotality,
        Claim::Lemmas,
        Claim::Properties,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Main => "main",
            Claim::Monotone => "monotone",
            Claim::Quotient => "quotient",
            Claim::Conjecture => "conjecture",
            Claim::Equivalence => "equivalence",
            Claim::CoreFixedpoint => "core-fixedpoint",
            Claim::ColregTotality => "colreg-totality",
            Claim::Lemmas => "lemmas",
            Claim::Properties => "properties",
        }
    }

    /// Open statements whose failures are findings rather than bugs.
    pub fn is_conjecture(self) -> bool {
        self == Claim::Conjecture
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown claim {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub partition: Partition,
    /// Wall, interval or modulus where the check failed.
    pub location: String,
    pub detail: String,
}

impl Counterexample {
    fn new(partition: &Partition, location: impl Into<String>, detail: impl Into<String>) -> Self {
        Counterexample {
            partition: partition.clone(),
            location: location.into(),
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} @ {}: {}",
            self.partition.exponential(),
            self.location,
            self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "VerdictRepr", from = "VerdictRepr")]
pub struct Verdict {
    pub claim: Claim,
    pub n_range: Vec<usize>,
    pub holds: bool,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed: Duration,
    /// Observations that are logged but never fail the verdict.
    pub notes: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct VerdictRepr {
    claim: Claim,
    n: Vec<usize>,
    holds: bool,
    counterexamples: Vec<Counterexample>,
    elapsed_ms: u64,
    #[serde(default)]
    notes: Vec<String>,
}

impl From<Verdict> for VerdictRepr {
    fn from(v: Verdict) -> Self {
        VerdictRepr {
            claim: v.claim,
            n: v.n_range,
            holds: v.holds,
            counterexamples: v.counterexamples,
            elapsed_ms: v.elapsed.as_millis() as u64,
            notes: v.notes,
        }
    }
}

impl From<VerdictRepr> for Verdict {
    fn from(r: VerdictRepr) -> Self {
        Verdict {
            claim: r.claim,
            n_range: r.n,
            holds: r.counterexamples.is_empty(),
            counterexamples: r.counterexamples,
            elapsed: Duration::from_millis(r.elapsed_ms),
            notes: r.notes,
        }
    }
}

impl Verdict {
    /// The verdict without its timing, for run-to-run comparison.
    pub fn untimed(&self) -> Verdict {
        Verdict {
            elapsed: Duration::ZERO,
            ..self.clone()
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let range = match (self.n_range.first(), self.n_range.last()) {
            (Some(lo), Some(hi)) if lo != hi => format!("n={lo}..={hi}"),
            (Some(lo), _) => format!("n={lo}"),
            _ => "n=none".to_string(),
        };
        let status = if self.holds { "holds" } else { "FAILS" };
        write!(
            f,
            "{}: {status} for {range} ({} counterexamples)",
            self.claim,
            self.counterexamples.len()
        )
    }
}

#[derive(Debug, Default)]
struct Findings {
    counterexamples: Vec<Counterexample>,
    notes: Vec<String>,
}

impl Findings {
    fn fail(
        &mut self,
        partition: &Partition,
        location: impl Into<String>,
        detail: impl Into<String>,
    ) {
        self.counterexamples
            .push(Counterexample::new(partition, location, detail));
    }

    fn extend(&mut self, other: Findings) {
        self.counterexamples.extend(other.counterexamples);
        self.notes.extend(other.notes);
    }
}

/// Runs checkers on a fixed-size thread pool with a fixed seed.
pub struct Verifier {
    workers: usize,
    seed: u64,
    pool: rayon::ThreadPool,
}

impl fmt::Debug for Verifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Verifier")
            .field("workers", &self.workers)
            .field("seed", &self.seed)
            .finish()
    }
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier::new(1, 0).expect("one worker")
    }
}

/// Random core removal orders tried per partition and modulus.
pub const RANDOM_ORDERS: usize = 100;

impl Verifier {
    pub fn new(workers: usize, seed: u64) -> Result<Self> {
        if workers == 0 {
            return Err(Error::InvalidWorkers(workers));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InternalInvariant(format!("thread pool: {e}")))?;
        Ok(Verifier {
            workers,
            seed,
            pool,
        })
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Checks `claim` for every `n` in `ns`; each `n` must be at least 2.
    pub fn check<I>(&self, claim: Claim, ns: I) -> Result<Verdict>
    where
        I: IntoIterator<Item = usize>,
    {
        let ns: Vec<usize> = ns.into_iter().collect();
        if let Some(&bad) = ns.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidLength { got: bad, min: 2 });
        }
        let started = Instant::now();
        let mut all = Findings::default();
        for &n in &ns {
            all.extend(self.check_one(claim, n));
        }
        Ok(Verdict {
            claim,
            n_range: ns,
            holds: all.counterexamples.is_empty(),
            counterexamples: all.counterexamples,
            elapsed: started.elapsed(),
            notes: all.notes,
        })
    }

    /// Every claim over `2..=n_max`, in [`Claim::ALL`] order.
    pub fn check_all(&self, n_max: usize) -> Result<Vec<Verdict>> {
        Claim::ALL
            .into_iter()
            .map(|c| self.check(c, 2..=n_max))
            .collect()
    }

    fn check_one(&self, claim: Claim, n: usize) -> Findings {
        match claim {
            Claim::Main => main_findings(n),
            Claim::Monotone => self.sweep(n, |_, lam| monotone_findings(n, lam)),
            Claim::Quotient => quotient_findings(n),
            Claim::Conjecture => self.sweep(n, |_, lam| conjecture_findings(n, lam)),
            Claim::Equivalence => self.sweep(n, |_, lam| equivalence_findings(n, lam)),
            Claim::CoreFixedpoint => self.sweep(n, |_, lam| fixedpoint_findings(n, lam)),
            Claim::ColregTotality => self.sweep(n, |_, lam| totality_findings(n, lam)),
            Claim::Lemmas => self.sweep(n, |_, lam| lemma_findings(n, lam)),
            Claim::Properties => self.property_findings(n),
        }
    }

    /// Applies `f` to every partition of `n` and concatenates in enumeration order.
    fn sweep<F>(&self, n: usize, f: F) -> Findings
    where
        F: Fn(usize, &Partition) -> Findings + Sync,
    {
        let partitions: Vec<Partition> = enumerate_partitions(n).collect();
        let parts: Vec<Findings> = self.pool.install(|| {
            partitions
                .par_iter()
                .enumerate()
                .map(|(idx, lam)| f(idx, lam))
                .collect()
        });
        let mut out = Findings::default();
        for p in parts {
            out.extend(p);
        }
        out
    }

    fn property_findings(&self, n: usize) -> Findings {
        let seed = self.seed;
        let mut out = self.sweep(n, |idx, lam| {
            let stream = seed ^ ((n as u64) << 40) ^ (idx as u64);
            local_property_findings(n, lam, &mut ChaCha8Rng::seed_from_u64(stream))
        });
        out.extend(self.injectivity_findings(n));
        out
    }

    /// `W_b` and every interval of the wall-crossing trajectory are injective on partitions of `n`.
    fn injectivity_findings(&self, n: usize) -> Findings {
        let partitions: Vec<Partition> = enumerate_partitions(n).collect();
        let mut out = Findings::default();
        let images: Vec<(usize, Vec<Result<Partition>>)> = self.pool.install(|| {
            (2..=n + 1)
                .into_par_iter()
                .map(|b| (b, partitions.iter().map(|l| wallcross_map(l, b)).collect()))
                .collect()
        });
        for (b, imgs) in images {
            let mut seen = HashSet::new();
            for (lam, img) in partitions.iter().zip(imgs) {
                match img {
                    Ok(img) if img.size() != n => out.fail(
                        lam,
                        format!("W_{b}"),
                        format!("image {img} has the wrong size"),
                    ),
                    Ok(img) if !seen.insert(img.clone()) => {
                        out.fail(lam, format!("W_{b}"), format!("image {img} repeats"))
                    }
                    Ok(_) => {}
                    Err(e) => out.fail(lam, format!("W_{b}"), e.to_string()),
                }
            }
        }
        let trajectories: Vec<Result<Trajectory>> = self.pool.install(|| {
            partitions
                .par_iter()
                .map(|l| trajectory_wallcross(l, n))
                .collect()
        });
        let mut ok = Vec::with_capacity(trajectories.len());
        for (lam, t) in partitions.iter().zip(trajectories) {
            match t {
                Ok(t) => ok.push(t),
                Err(e) => out.fail(lam, "trajectory", e.to_string()),
            }
        }
        if ok.len() == partitions.len() {
            for k in 0..ok[0].entries.len() {
                let mut seen = HashSet::new();
                for t in &ok {
                    let e = &t.entries[k];
                    if !seen.insert(&e.partition) {
                        out.fail(
                            &t.start,
                            e.interval.to_string(),
                            format!("{} is reached twice", e.partition),
                        );
                    }
                }
            }
        }
        out
    }
}

fn moduli(n: usize) -> std::ops::RangeInclusive<usize> {
    2..=n + 1
}

fn main_findings(n: usize) -> Findings {
    let mut out = Findings::default();
    let row = Partition::row(n);
    let wc = match trajectory_wallcross(&row, n) {
        Ok(t) => t,
        Err(e) => {
            out.fail(&row, "wallcross", e.to_string());
            return out;
        }
    };
    match trajectory_colreg(&row, n) {
        Ok(cr) => {
            for (x, y) in wc.entries.iter().zip(&cr.entries) {
                if x.partition != y.partition {
                    out.fail(
                        &row,
                        x.interval.to_string(),
                        format!(
                            "wallcross gives {} but colreg gives {}",
                            x.partition, y.partition
                        ),
                    );
                }
            }
        }
        Err(e) => out.fail(&row, "colreg", e.to_string()),
    }
    let parts = wc.distinct_partitions();
    for (k, wall) in breaks(&wc).walls.iter().enumerate() {
        let (before, after) = (&parts[k], &parts[k + 1]);
        let upper = slope_stats(before).expect("nonempty").min_upper;
        let lower = slope_stats(after).expect("nonempty").max_lower;
        if upper != *wall || lower != *wall {
            out.fail(
                before,
                wall.to_string(),
                format!("break to {after}: min (l+1)/H = {upper}, next max l/H = {lower}"),
            );
        }
    }
    out
}

fn monotone_findings(n: usize, lam: &Partition) -> Findings {
    let mut out = Findings::default();
    let t = match trajectory_wallcross(lam, n) {
        Ok(t) => t,
        Err(e) => {
            out.fail(lam, "trajectory", e.to_string());
            return out;
        }
    };
    let mut all_regular = true;
    let mut all_zero = true;
    for e in &t.entries {
        if let Some(d) = e.d {
            let b = e.interval.hi.den();
            let regular = e.partition.is_regular(b);
            all_regular &= regular;
            all_zero &= d == 0;
            if regular != (d == 0) {
                out.fail(
                    lam,
                    e.interval.to_string(),
                    format!("d = {d} but regularity is {regular}"),
                );
            }
        }
    }
    let is_row = *lam == Partition::row(n);
    if all_regular != is_row || all_zero != is_row {
        out.fail(
            lam,
            "all intervals",
            format!("row start: {is_row}, stays regular: {all_regular}, all d zero: {all_zero}"),
        );
    }
    out
}

fn single_rectangle(q: &[Partition]) -> Option<(usize, &Partition)> {
    let mut nonempty = q.iter().enumerate().filter(|(_, p)| !p.is_empty());
    let (k, p) = nonempty.next()?;
    if nonempty.next().is_some() || p.parts().iter().any(|&x| x != p.parts()[0]) {
        return None;
    }
    Some((k, p))
}

fn quotient_findings(n: usize) -> Findings {
    let mut out = Findings::default();
    let row = Partition::row(n);
    let t = match trajectory_wallcross(&row, n) {
        Ok(t) => t,
        Err(e) => {
            out.fail(&row, "trajectory", e.to_string());
            return out;
        }
    };
    let parts = t.distinct_partitions();
    for (k, wall) in breaks(&t).walls.iter().enumerate() {
        let (before, after) = (&parts[k], &parts[k + 1]);
        let (a, b) = (wall.num(), wall.den());
        let here = wall.to_string();
        if core(before, b).ok() != core(after, b).ok() {
            out.fail(
                before,
                &here,
                format!("{b}-cores of {before} and {after} differ"),
            );
        }
        let qb = quotient(before, b).expect("modulus");
        let qa = quotient(after, b).expect("modulus");
        let (Some((kb, rb)), Some((ka, ra))) = (single_rectangle(&qb), single_rectangle(&qa))
        else {
            out.fail(
                before,
                &here,
                format!("quotients {qb:?} -> {qa:?} are not single rectangles"),
            );
            continue;
        };
        if *ra != rb.transpose() {
            out.fail(
                before,
                &here,
                format!("rectangles {rb} and {ra} are not conjugate"),
            );
        }
        let moved = slide(before, a, b).expect("valid wall").moved_ladders;
        let [ladder] = moved.as_slice() else {
            out.fail(before, &here, format!("{} ladders move", moved.len()));
            continue;
        };
        let points = ladder.points();
        let h1 = points.iter().filter(|c| before.contains(**c)).count();
        let h2 = points.len() - h1;
        if rb.len() != h1 || rb.parts()[0] != h2 {
            out.fail(
                before,
                &here,
                format!("rectangle {rb} but the ladder holds {h1} boxes and {h2} vacancies"),
            );
        }
        let j = points[0].residue(b);
        let verdict = if kb == j && ka == (j + b - 1) % b {
            "matches"
        } else {
            "differs"
        };
        out.notes.push(format!(
            "n={n} wall {here}: ladder residue {j}, entry {kb} -> entry {ka} ({verdict})"
        ));
    }
    out
}

fn conjecture_findings(n: usize, lam: &Partition) -> Findings {
    let mut out = Findings::default();
    let first = trajectory_first(lam, n);
    let second = trajectory_wallcross(&lam.transpose(), n);
    let (first, second) = match (first, second) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => {
            out.fail(lam, "trajectory", e.to_string());
            return out;
        }
    };
    for (x, y) in first.entries.iter().zip(&second.entries) {
        if x.d != y.d {
            out.fail(
                lam,
                x.interval.to_string(),
                format!("D1 = {:?}, D2 of transpose = {:?}", x.d, y.d),
            );
        }
    }
    out
}

fn equivalence_findings(n: usize, lam: &Partition) -> Findings {
    let mut out = Findings::default();
    for b in moduli(n).filter(|&b| lam.is_regular(b)) {
        match (mullineux_transpose_good(lam, b), x_operator(lam, b)) {
            (Ok(g), Ok(x)) if g == x => {}
            (g, x) => out.fail(
                lam,
                format!("b={b}"),
                format!("good route {g:?}, J route {x:?}"),
            ),
        }
    }
    out
}

fn fixedpoint_findings(n: usize, lam: &Partition) -> Findings {
    let mut out = Findings::default();
    for b in moduli(n).filter(|&b| lam.is_regular(b)) {
        let fixed = mullineux_transpose(lam, b).map(|m| m == *lam);
        let core_flag = is_core(lam, b);
        match (fixed, core_flag) {
            (Ok(f), Ok(c)) if f == c => {}
            (f, c) => out.fail(lam, format!("b={b}"), format!("fixed {f:?}, core {c:?}")),
        }
    }
    out
}

fn totality_findings(n: usize, lam: &Partition) -> Findings {
    let mut out = Findings::default();
    match trajectory_colreg(lam, n) {
        Ok(t) if *t.last() == Partition::column(n) => {}
        Ok(t) => out.fail(lam, "last interval", format!("ends at {}", t.last())),
        Err(e) => out.fail(lam, "colreg", e.to_string()),
    }
    out
}

fn first_hook_ratio(lam: &Partition) -> ReducedFraction {
    let leg = lam.len() - 1;
    let hook = lam.part(1) + leg;
    ReducedFraction::new(leg, hook)
}

fn lemma_findings(n: usize, lam: &Partition) -> Findings {
    let mut out = Findings::default();
    for b in moduli(n) {
        let at = format!("b={b}");
        if is_core(lam, b).expect("modulus") {
            if !is_core(&lam.transpose(), b).expect("modulus") {
                out.fail(lam, &at, "transpose of a core is not a core");
            }
            if b_rim(lam, b).expect("modulus") != lam.rim() {
                out.fail(lam, &at, "b-rim of a core differs from the rim");
            }
            for r in 0..b {
                let word = ra_word(lam, b, r).expect("residue");
                if word.has_removable() && word.has_addable() {
                    out.fail(
                        lam,
                        format!("{at} r={r}"),
                        format!("word {word} of a core mixes R and A"),
                    );
                }
            }
        }
        if lam.is_regular(b) {
            let jumped = j_operator(lam, b).expect("regular, nonempty");
            let phi = lam.size() - strip_b_rim(lam, b).expect("modulus").size();
            let drop = lam.size() - jumped.size();
            let bound = lam.part(1) - 1;
            if phi.is_multiple_of(b) && drop > bound {
                out.fail(
                    lam,
                    &at,
                    format!("b | phi = {phi} but |λ| - |λ^J| = {drop} > {bound}"),
                );
            }
            let hook = lam.hook(Cell::new(1, 1)).expect("nonempty");
            if hook.is_multiple_of(b) && drop > bound {
                out.fail(
                    lam,
                    &at,
                    format!("b | H11 = {hook} but |λ| - |λ^J| = {drop} > {bound}"),
                );
            }
        }
    }
    out.extend(regular_run_findings(n, lam));
    out
}

/// Along the wall-crossing trajectory of `λ ≠ (n)`, while every crossed
/// partition was regular, the partition just past the wall `a/b` has
/// `l11/H11 > a/b`.
fn regular_run_findings(n: usize, lam: &Partition) -> Findings {
    let mut out = Findings::default();
    if *lam == Partition::row(n) {
        return out;
    }
    let t = match trajectory_wallcross(lam, n) {
        Ok(t) => t,
        Err(e) => {
            out.fail(lam, "trajectory", e.to_string());
            return out;
        }
    };
    for w in t.entries.windows(2) {
        let wall = w[0].interval.hi;
        if !w[0].partition.is_regular(wall.den()) {
            break;
        }
        let ratio = first_hook_ratio(&w[1].partition);
        if ratio <= wall {
            out.fail(
                lam,
                wall.to_string(),
                format!("after crossing, {} has l11/H11 = {ratio}", w[1].partition),
            );
        }
    }
    out
}

fn local_property_findings(n: usize, lam: &Partition, rng: &mut ChaCha8Rng) -> Findings {
    let mut out = Findings::default();
    if lam.transpose().transpose() != *lam {
        out.fail(lam, "transpose", "transpose is not an involution");
    }
    if lam.removable_cells().len() + 1 != lam.addable_cells().len() {
        out.fail(
            lam,
            "corners",
            "removable count is not addable count minus one",
        );
    }
    let tr = lam.transpose();
    for b in moduli(n) {
        let at = format!("b={b}");
        let dec = regular_decomposition(lam, b).expect("modulus");
        if dec.recombine() != *lam || !dec.regular.is_regular(b) {
            out.fail(lam, &at, "regular decomposition does not reassemble");
        }
        let cq = core_quotient(lam, b).expect("modulus");
        let qsize: usize = cq.quotient.iter().map(Partition::size).sum();
        if lam.size() != cq.core.size() + b * qsize {
            out.fail(
                lam,
                &at,
                format!("|core| = {}, quotient total {qsize}", cq.core.size()),
            );
        }
        let core_flag = is_core(lam, b).expect("modulus");
        if core_flag != (cq.core == *lam)
            || core_flag != cq.quotient.iter().all(Partition::is_empty)
        {
            out.fail(lam, &at, "core characterisations disagree");
        }
        for _ in 0..RANDOM_ORDERS {
            let other = core_random_order(lam, b, rng).expect("modulus");
            if other != cq.core {
                out.fail(
                    lam,
                    &at,
                    format!("random removal order reached {other}, not {}", cq.core),
                );
                break;
            }
        }
        for k in 0..b {
            let dual = good_box(lam, b, k).expect("residue").map(Cell::transposed);
            if dual != cogood_box(&tr, b, (b - k) % b).expect("residue") {
                out.fail(
                    lam,
                    format!("{at} r={k}"),
                    "good box does not transpose to a co-good box",
                );
            }
        }
        if let Ok(img) = wallcross_map(lam, b) {
            if lam.is_regular(b) && Ok(&img) != mullineux_transpose(lam, b).as_ref() {
                out.fail(lam, &at, "W_b differs from M_bT on a regular partition");
            }
        }
        if b <= n {
            for a in (1..b).filter(|&a| gcd(a, b) == 1) {
                if let Ok(img) = column_regularize(lam, a, b) {
                    if img.size() != n {
                        out.fail(
                            lam,
                            format!("Cr {a}/{b}"),
                            format!("size changed to {}", img.size()),
                        );
                    }
                }
            }
            if let Err(e) = column_regularize(lam, 1, b) {
                out.fail(lam, format!("Cr 1/{b}"), e.to_string());
            }
        }
    }
    out
}

/// Checks `claim` for a single `n` on one worker.
pub fn check(claim: Claim, n: usize) -> Result<Verdict> {
    Verifier::default().check(claim, [n])
}

pub fn check_main(n: usize) -> Result<Verdict> {
    check(Claim::Main, n)
}

pub fn check_monotone(n: usize) -> Result<Verdict> {
    check(Claim::Monotone, n)
}

pub fn check_quotient_corollary(n: usize) -> Result<Verdict> {
    check(Claim::Quotient, n)
}

pub fn check_conjecture(n: usize) -> Result<Verdict> {
    check(Claim::Conjecture, n)
}

pub fn check_mullineux_equivalence(n: usize) -> Result<Verdict> {
    check(Claim::Equivalence, n)
}

pub fn check_core_fixedpoint(n: usize) -> Result<Verdict> {
    check(Claim::CoreFixedpoint, n)
}

pub fn check_colreg_totality(n: usize) -> Result<Verdict> {
    check(Claim::ColregTotality, n)
}

pub fn check_lemma_properties(n: usize) -> Result<Verdict> {
    check(Claim::Lemmas, n)
}

pub fn check_properties(n: usize) -> Result<Verdict> {
    check(Claim::Properties, n)
}

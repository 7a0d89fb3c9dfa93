//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact equality on integers, partitions or reduced
//! fractions; there is no numeric tolerance anywhere.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use wallcross::colreg::column_regularize;
use wallcross::cores::{core, quotient};
use wallcross::error::Error;
use wallcross::mullineux::{mullineux_transpose, mullineux_transpose_good, x_operator};
use wallcross::verify::{Claim, Verdict, Verifier};
use wallcross::wallcross::{
    breaks, trajectory_colreg, trajectory_first, trajectory_wallcross, Trajectory,
};
use wallcross::{enumerate_partitions, Partition, ReducedFraction};

const TOLERANCE: &str = "exact equality";

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn p(text: &str) -> Partition {
    text.parse().expect("valid partition literal")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verdict_ok(v: &Verdict) -> Result<(), String> {
    ensure(v.holds, || {
        let shown: Vec<String> = v
            .counterexamples
            .iter()
            .take(5)
            .map(|c| c.to_string())
            .collect();
        format!(
            "{} counterexamples, first: {}",
            v.counterexamples.len(),
            shown.join("; ")
        )
    })
}

/// Hook lengths straight from the parts, for oracles independent of the library.
fn hooks(parts: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = parts[i + 1..].iter().filter(|&&x| x > j).count();
            out.push((arm, leg, arm + leg + 1));
        }
    }
    out
}

fn oracle_is_core(parts: &[usize], b: usize) -> bool {
    hooks(parts).iter().all(|&(_, _, h)| h % b != 0)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `(min (l+1)/H, max l/H)` as reduced pairs compared by cross-multiplication.
fn oracle_slopes(parts: &[usize]) -> ((usize, usize), (usize, usize)) {
    let hs = hooks(parts);
    let lt = |x: (usize, usize), y: (usize, usize)| x.0 * y.1 < y.0 * x.1;
    let mut upper = (1, 1);
    let mut lower = (0, 1);
    for &(_, leg, h) in &hs {
        if lt((leg + 1, h), upper) {
            upper = (leg + 1, h);
        }
        if lt(lower, (leg, h)) {
            lower = (leg, h);
        }
    }
    let reduce = |(a, b): (usize, usize)| (a / gcd(a, b), b / gcd(a, b));
    (reduce(upper), reduce(lower))
}

/// `b` times the number of full blocks of `b` equal parts.
fn oracle_d2(parts: &[usize], b: usize) -> usize {
    let mut total = 0;
    let mut k = 0;
    while k < parts.len() {
        let run = parts[k..].iter().take_while(|&&x| x == parts[k]).count();
        total += b * parts[k] * (run / b);
        k += run;
    }
    total
}

/// `b` times the size of `ν` where `b·ν` collects the parts divisible by `b`.
fn oracle_d1(parts: &[usize], b: usize) -> usize {
    parts.iter().filter(|&&x| x % b == 0).sum()
}

fn partitions_of(t: &Trajectory) -> Vec<String> {
    t.partitions().map(|x| x.exponential()).collect()
}

fn d_row(values: &[usize]) -> Vec<Option<usize>> {
    values.iter().copied().map(Some).chain([None]).collect()
}

fn criterion_1() -> Outcome {
    let m = mullineux_transpose(&p("5,4,2"), 4).map_err(|e| e.to_string())?;
    ensure(m == p("4,2,2,2,1"), || {
        format!("(5,4,2) under M_4T gave {m}")
    })?;
    let lam = p("6,5,3,3,2,1,1");
    let c = core(&lam, 4).map_err(|e| e.to_string())?;
    ensure(c == p("4,1"), || format!("4-core {c}"))?;
    let q = quotient(&lam, 4).map_err(|e| e.to_string())?;
    let want = vec![p("1"), p("2,1"), Partition::empty(), Partition::empty()];
    ensure(q == want, || format!("4-quotient {q:?}"))?;
    let cr = column_regularize(&p("3,2,2,1"), 2, 3).map_err(|e| e.to_string())?;
    ensure(cr == p("2,2,2,1,1"), || {
        format!("(3,2,2,1) under Cr_2,3 gave {cr}")
    })?;
    match column_regularize(&p("3,2,2"), 2, 3) {
        Err(Error::NotAPartition(boxes)) => Ok(format!("(3,2,2) fails with {boxes}")),
        other => Err(format!("(3,2,2) under Cr_2,3 gave {other:?}")),
    }
}

fn criterion_2() -> Outcome {
    let want = [
        "(7)",
        "(6,1)",
        "(5,2)",
        "(4,2,1)",
        "(3,2,1^2)",
        "(2^2,1^3)",
        "(2,1^5)",
        "(1^7)",
    ];
    let walls = ["1/7", "1/5", "1/3", "1/2", "2/3", "4/5", "6/7"];
    for (name, t) in [
        ("wallcross", trajectory_wallcross(&Partition::row(7), 7)),
        ("colreg", trajectory_colreg(&Partition::row(7), 7)),
    ] {
        let t = t.map_err(|e| format!("{name}: {e}"))?;
        let got: Vec<String> = t
            .grouped()
            .iter()
            .map(|g| g.partition.exponential())
            .collect();
        ensure(got == want, || format!("{name} groups {got:?}"))?;
        let got: Vec<String> = breaks(&t)
            .walls
            .iter()
            .map(ReducedFraction::to_string)
            .collect();
        ensure(got == walls, || format!("{name} breaks {got:?}"))?;
    }
    Ok("8 grouped columns, breaks 1/7 1/5 1/3 1/2 2/3 4/5 6/7".into())
}

fn criterion_3() -> Outcome {
    let starts = ["5", "4,1", "3,2", "3,1^2", "2^2,1", "2,1^3", "1^5"];
    let first_d: [[usize; 9]; 7] = [
        [5, 0, 0, 5, 0, 5, 0, 0, 5],
        [0, 4, 0, 0, 4, 0, 0, 0, 0],
        [0, 0, 3, 0, 2, 0, 3, 0, 0],
        [0, 0, 3, 0, 0, 0, 3, 0, 0],
        [0, 0, 0, 0, 4, 0, 0, 4, 0],
        [0, 0, 0, 0, 2, 0, 0, 0, 0],
        [0; 9],
    ];
    let first_b: [[&str; 10]; 7] = [
        ["(5)"; 10],
        [
            "(4,1)", "(4,1)", "(4,1)", "(4,1)", "(4,1)", "(2^2,1)", "(2^2,1)", "(2^2,1)",
            "(2^2,1)", "(2^2,1)",
        ],
        ["(3,2)"; 10],
        ["(3,1^2)"; 10],
        [
            "(2^2,1)", "(2^2,1)", "(2^2,1)", "(2^2,1)", "(2^2,1)", "(4,1)", "(4,1)", "(4,1)",
            "(4,1)", "(4,1)",
        ],
        ["(2,1^3)"; 10],
        ["(1^5)"; 10],
    ];
    let second_b: [[&str; 10]; 7] = [
        [
            "(1^5)", "(5)", "(3,2)", "(1^5)", "(5)", "(1^5)", "(5)", "(2^2,1)", "(1^5)", "(5)",
        ],
        [
            "(2,1^3)", "(1^5)", "(5)", "(2^2,1)", "(2^2,1)", "(5)", "(4,1)", "(3,2)", "(2^2,1)",
            "(2^2,1)",
        ],
        [
            "(2^2,1)", "(2^2,1)", "(1^5)", "(4,1)", "(3,1^2)", "(3,1^2)", "(2,1^3)", "(5)",
            "(3,2)", "(3,2)",
        ],
        [
            "(3,1^2)", "(2,1^3)", "(2,1^3)", "(5)", "(4,1)", "(2,1^3)", "(1^5)", "(4,1)", "(4,1)",
            "(3,1^2)",
        ],
        [
            "(3,2)", "(3,2)", "(2^2,1)", "(2,1^3)", "(1^5)", "(3,2)", "(3,2)", "(1^5)", "(5)",
            "(4,1)",
        ],
        [
            "(4,1)", "(3,1^2)", "(3,1^2)", "(3,1^2)", "(2,1^3)", "(4,1)", "(3,1^2)", "(3,1^2)",
            "(3,1^2)", "(2,1^3)",
        ],
        [
            "(5)", "(4,1)", "(4,1)", "(3,2)", "(3,2)", "(2^2,1)", "(2^2,1)", "(2,1^3)", "(2,1^3)",
            "(1^5)",
        ],
    ];
    let mut cells = 0;
    for row in 0..7 {
        let start = p(starts[row]);
        let t1 = trajectory_first(&start, 5).map_err(|e| e.to_string())?;
        ensure(partitions_of(&t1) == first_b[row], || {
            format!("first algorithm from {start}: {:?}", partitions_of(&t1))
        })?;
        ensure(t1.d_values() == d_row(&first_d[row]), || {
            format!("first algorithm D from {start}: {:?}", t1.d_values())
        })?;
        // Wall-crossing starts from the transpose and must give the same D row.
        let t2 = trajectory_wallcross(&start.transpose(), 5).map_err(|e| e.to_string())?;
        ensure(partitions_of(&t2) == second_b[row], || {
            format!(
                "wall-crossing from {}: {:?}",
                start.transpose(),
                partitions_of(&t2)
            )
        })?;
        ensure(t2.d_values() == d_row(&first_d[row]), || {
            format!(
                "wall-crossing D from {}: {:?}",
                start.transpose(),
                t2.d_values()
            )
        })?;
        cells += 4 * 10;
    }
    Ok(format!(
        "14 trajectories, {cells} cells including the final \"-\""
    ))
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for n in 1..=12 {
        for lam in enumerate_partitions(n) {
            for b in (2..=n + 1).filter(|&b| lam.is_regular(b)) {
                let g =
                    mullineux_transpose_good(&lam, b).map_err(|e| format!("{lam} b={b}: {e}"))?;
                let x = x_operator(&lam, b).map_err(|e| format!("{lam} b={b}: {e}"))?;
                ensure(g == x, || format!("{lam} b={b}: good {g}, X {x}"))?;
                checked += 1;
            }
        }
    }
    let v = Verifier::new(4, 0)
        .unwrap()
        .check(Claim::Equivalence, 2..=12)
        .map_err(|e| e.to_string())?;
    verdict_ok(&v)?;
    Ok(format!("{checked} (partition, b) pairs, n <= 12"))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for n in 1..=12 {
        for lam in enumerate_partitions(n) {
            for b in (2..=n + 1).filter(|&b| lam.is_regular(b)) {
                let m = mullineux_transpose(&lam, b).map_err(|e| e.to_string())?;
                let is_core = oracle_is_core(lam.parts(), b);
                ensure((m == lam) == is_core, || {
                    format!("{lam} b={b}: image {m}, core {is_core}")
                })?;
                checked += 1;
            }
        }
    }
    let v = Verifier::new(4, 0)
        .unwrap()
        .check(Claim::CoreFixedpoint, 2..=12)
        .map_err(|e| e.to_string())?;
    verdict_ok(&v)?;
    Ok(format!("{checked} (partition, b) pairs, n <= 12"))
}

fn criterion_6() -> Outcome {
    let mut total_breaks = 0;
    for n in 2..=15 {
        let row = Partition::row(n);
        let wc = trajectory_wallcross(&row, n).map_err(|e| e.to_string())?;
        let cr = trajectory_colreg(&row, n).map_err(|e| e.to_string())?;
        ensure(wc == cr, || format!("n={n}: trajectories differ"))?;
        let parts = wc.distinct_partitions();
        for (k, wall) in breaks(&wc).walls.iter().enumerate() {
            let (upper, _) = oracle_slopes(parts[k].parts());
            let (_, lower) = oracle_slopes(parts[k + 1].parts());
            let w = (wall.num(), wall.den());
            ensure(upper == w && lower == w, || {
                format!("n={n} break {wall}: min (l+1)/H {upper:?}, next max l/H {lower:?}")
            })?;
            total_breaks += 1;
        }
    }
    let v = Verifier::new(4, 0)
        .unwrap()
        .check(Claim::Main, 2..=15)
        .map_err(|e| e.to_string())?;
    verdict_ok(&v)?;
    Ok(format!("{total_breaks} breaks over 2 <= n <= 15"))
}

fn criterion_7() -> Outcome {
    for n in 2..=9 {
        let mut all_zero = Vec::new();
        for lam in enumerate_partitions(n) {
            let t = trajectory_wallcross(&lam, n).map_err(|e| e.to_string())?;
            let zero = t.entries.iter().all(|e| match e.d {
                Some(_) => oracle_d2(e.partition.parts(), e.interval.hi.den()) == 0,
                None => true,
            });
            if zero {
                all_zero.push(lam);
            }
        }
        ensure(all_zero == vec![Partition::row(n)], || {
            format!("n={n}: all-zero rows {all_zero:?}")
        })?;
    }
    let v = Verifier::new(4, 0)
        .unwrap()
        .check(Claim::Monotone, 2..=9)
        .map_err(|e| e.to_string())?;
    verdict_ok(&v)?;
    Ok("(n) is the only all-zero row for 2 <= n <= 9".into())
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for n in 2..=9 {
        for lam in enumerate_partitions(n) {
            let t = trajectory_colreg(&lam, n).map_err(|e| format!("{lam}: {e}"))?;
            ensure(*t.last() == Partition::column(n), || {
                format!("{lam} ends at {}", t.last())
            })?;
            count += 1;
        }
    }
    let v = Verifier::new(4, 0)
        .unwrap()
        .check(Claim::ColregTotality, 2..=9)
        .map_err(|e| e.to_string())?;
    verdict_ok(&v)?;
    Ok(format!("{count} starts, all end in a column"))
}

fn criterion_9() -> Outcome {
    let mut compared = 0;
    for n in 2..=9 {
        for lam in enumerate_partitions(n) {
            let t1 = trajectory_first(&lam, n).map_err(|e| e.to_string())?;
            let t2 = trajectory_wallcross(&lam.transpose(), n).map_err(|e| e.to_string())?;
            for (x, y) in t1.entries.iter().zip(&t2.entries) {
                let b = x.interval.hi.den();
                if x.d.is_none() {
                    continue;
                }
                let d1 = oracle_d1(x.partition.parts(), b);
                let d2 = oracle_d2(y.partition.parts(), b);
                ensure(x.d == Some(d1) && y.d == Some(d2), || {
                    format!("{lam} {}: stored D disagrees", x.interval)
                })?;
                ensure(d1 == d2, || {
                    format!("finding: {lam} at {}: D1 {d1}, D2 {d2}", x.interval)
                })?;
                compared += 1;
            }
        }
    }
    let v = Verifier::new(4, 0)
        .unwrap()
        .check(Claim::Conjecture, 2..=9)
        .map_err(|e| e.to_string())?;
    verdict_ok(&v)?;
    Ok(format!(
        "{compared} (partition, interval) pairs agree, no counterexample"
    ))
}

fn criterion_10() -> Outcome {
    let verifier = Verifier::new(4, 0x5eed).unwrap();
    let props = verifier
        .check(Claim::Properties, 2..=12)
        .map_err(|e| e.to_string())?;
    verdict_ok(&props)?;
    let lemmas = verifier
        .check(Claim::Lemmas, 2..=12)
        .map_err(|e| e.to_string())?;
    verdict_ok(&lemmas)?;
    let again = Verifier::new(1, 0x5eed)
        .unwrap()
        .check(Claim::Properties, 2..=8)
        .map_err(|e| e.to_string())?;
    let parallel = verifier
        .check(Claim::Properties, 2..=8)
        .map_err(|e| e.to_string())?;
    ensure(again.untimed() == parallel.untimed(), || {
        "serial and parallel verdicts differ".into()
    })?;
    Ok("primitives, W_b and trajectory bijectivity, duality, core lemmas, J bounds, regular runs; n <= 12".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("worked examples", criterion_1, Duration::from_secs(1)),
        ("row of seven", criterion_2, Duration::from_secs(1)),
        ("all starts of five", criterion_3, Duration::from_secs(1)),
        (
            "algorithm equivalence",
            criterion_4,
            Duration::from_secs(30),
        ),
        ("core fixed points", criterion_5, Duration::from_secs(30)),
        ("main theorem", criterion_6, Duration::from_secs(10)),
        ("monotone uniqueness", criterion_7, Duration::from_secs(60)),
        ("colreg totality", criterion_8, Duration::from_secs(60)),
        ("conjecture sweep", criterion_9, Duration::from_secs(120)),
        ("property suites", criterion_10, Duration::from_secs(120)),
    ];
    println!("acceptance: tolerance = {TOLERANCE}");
    let mut failed = 0;
    for (k, (name, run, budget)) in criteria.into_iter().enumerate() {
        let started = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = started.elapsed();
        let (status, detail) = match outcome {
            Ok(detail) => ("PASS", detail),
            Err(reason) => {
                failed += 1;
                ("FAIL", reason)
            }
        };
        let slow = if elapsed > budget {
            " [over budget]"
        } else {
            ""
        };
        println!(
            "{status} criterion {:>2} {name}: {detail} ({} ms, budget {} s){slow}",
            k + 1,
            elapsed.as_millis(),
            budget.as_secs()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

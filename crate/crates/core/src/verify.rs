//! Exhaustive checks of the identities relating tableaux, paths, the
//! insertion bijection, and dashed patterns.
//!
//! Each check runs at a single length `n`; [`verify`] sweeps `0..=n`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::alternative::to_alternative;
use crate::bijection::{descent_column_check, xi, Permutation};
use crate::enumerate::{distribution, map_shapes, permutations_of, Statistic};
use crate::format::alternative_to_text;
use crate::lbell::{bell, is_lbell, structural_noinv_check};
use crate::paths::{all_paths, compare_paths, inv, PathOrder};
use crate::patterns::{count_occurrences, oracle_count, parse_pattern, reverse_complement};
use crate::tableau::PermutationTableau;

/// Patterns cross-checked against the brute-force counter.
pub const ORACLE_PATTERNS: [&str; 6] = ["32-1", "3-21", "31-2", "2-31", "1-32", "21-3"];
pub const ORACLE_SAMPLES: usize = 1000;
pub const ORACLE_MAX_LEN: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Count,
    Theorem,
    Distribution,
    Bell,
    Equivalence,
    Descent,
    Subsequence,
    LeftOf,
    Oracle,
    RoundTrip,
    Uniqueness,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Count,
        Check::Theorem,
        Check::Distribution,
        Check::Bell,
        Check::Equivalence,
        Check::Descent,
        Check::Subsequence,
        Check::LeftOf,
        Check::Oracle,
        Check::RoundTrip,
        Check::Uniqueness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Count => "count",
            Check::Theorem => "theorem",
            Check::Distribution => "distribution",
            Check::Bell => "bell",
            Check::Equivalence => "equivalence",
            Check::Descent => "descent",
            Check::Subsequence => "subsequence",
            Check::LeftOf => "leftof",
            Check::Oracle => "oracle",
            Check::RoundTrip => "roundtrip",
            Check::Uniqueness => "uniqueness",
        }
    }

    /// Largest length the check accepts.
    pub fn max_n(self) -> usize {
        match self {
            Check::Count | Check::Bell => 8,
            Check::Theorem
            | Check::Distribution
            | Check::Equivalence
            | Check::Descent
            | Check::RoundTrip => 7,
            Check::Subsequence | Check::LeftOf | Check::Uniqueness => 6,
            Check::Oracle => ORACLE_MAX_LEN,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("check {check} supports n <= {max}, got {n}")]
    TooLarge { check: Check, n: usize, max: usize },
}

impl FromStr for Check {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| VerifyError::UnknownCheck(s.to_string()))
    }
}

/// A parsed check set; `explicit` is false for `all`, whose checks are
/// capped at their own limits instead of rejecting large `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSet {
    pub checks: Vec<Check>,
    pub explicit: bool,
}

impl FromStr for CheckSet {
    type Err = VerifyError;

    /// `all`, `lemmas`, or a comma-separated list of check names.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(CheckSet {
                checks: Check::ALL.to_vec(),
                explicit: false,
            });
        }
        let mut checks = Vec::new();
        for part in s.split(',').map(str::trim) {
            if part == "lemmas" {
                checks.extend([Check::Descent, Check::Subsequence, Check::LeftOf]);
            } else {
                checks.push(part.parse()?);
            }
        }
        checks.sort_unstable();
        checks.dedup();
        Ok(CheckSet {
            checks,
            explicit: true,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check: Check,
    pub n: usize,
    pub passed: bool,
    pub detail: String,
    pub counterexample: Option<String>,
}

impl CheckResult {
    fn pass(check: Check, n: usize, detail: String) -> Self {
        CheckResult {
            check,
            n,
            passed: true,
            detail,
            counterexample: None,
        }
    }

    fn fail(check: Check, n: usize, detail: String, counterexample: String) -> Self {
        CheckResult {
            check,
            n,
            passed: false,
            detail,
            counterexample: Some(counterexample),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// One tab-separated line per check result after a header line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("check\tn\tstatus\tdetail\tcounterexample\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                c.check,
                c.n,
                if c.passed { "pass" } else { "fail" },
                c.detail,
                c.counterexample.as_deref().unwrap_or("-"),
            ));
        }
        out
    }
}

/// Runs every check in `set` for each length `0..=n` (capped per check
/// when the set is `all`).
pub fn verify(n: usize, set: &CheckSet, seed: u64) -> Result<VerificationReport, VerifyError> {
    if set.explicit {
        if let Some(&check) = set.checks.iter().find(|c| n > c.max_n()) {
            return Err(VerifyError::TooLarge {
                check,
                n,
                max: check.max_n(),
            });
        }
    }
    let start = Instant::now();
    let mut checks = Vec::new();
    for &check in &set.checks {
        if check == Check::Oracle {
            checks.push(run_check(check, ORACLE_MAX_LEN, seed));
            continue;
        }
        for m in 0..=n.min(check.max_n()) {
            checks.push(run_check(check, m, seed));
        }
    }
    Ok(VerificationReport {
        checks,
        elapsed: start.elapsed(),
    })
}

/// Compact one-line form of a tableau: `shape|row/row/...`.
pub fn compact(t: &PermutationTableau) -> String {
    let rows: Vec<String> = t
        .rows()
        .iter()
        .map(|r| {
            if r.is_empty() {
                "-".to_string()
            } else {
                r.iter().map(|&b| if b { '1' } else { '0' }).collect()
            }
        })
        .collect();
    format!("{}|{}", t.shape(), rows.join("/"))
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Applies `f` to every tableau of length `n`; returns how many were
/// checked and the first failure in enumeration order.
fn each_tableau<F>(n: usize, f: F) -> (u64, Option<(String, String)>)
where
    F: Fn(&PermutationTableau) -> Result<(), String> + Sync,
{
    map_shapes(n, |ts| {
        let mut seen = 0;
        for t in ts {
            seen += 1;
            if let Err(why) = f(&t) {
                return (seen, Some((compact(&t), why)));
            }
        }
        (seen, None)
    })
    .into_iter()
    .fold((0, None), |(total, first), (seen, fail)| {
        (total + seen, first.or(fail))
    })
}

fn from_sweep(
    check: Check,
    n: usize,
    (seen, fail): (u64, Option<(String, String)>),
) -> CheckResult {
    match fail {
        None => CheckResult::pass(check, n, format!("{seen} tableaux")),
        Some((t, why)) => CheckResult::fail(check, n, why, t),
    }
}

pub fn run_check(check: Check, n: usize, seed: u64) -> CheckResult {
    match check {
        Check::Count => {
            let count: u64 = map_shapes(n, |ts| ts.count() as u64).into_iter().sum();
            let expected = factorial(n);
            let detail = format!("{count} vs {expected}");
            if count == expected {
                CheckResult::pass(check, n, detail)
            } else {
                CheckResult::fail(check, n, detail, format!("n={n}"))
            }
        }
        Check::Theorem => {
            let p3_21 = parse_pattern("3-21").expect("valid pattern");
            let p32_1 = parse_pattern("32-1").expect("valid pattern");
            from_sweep(
                check,
                n,
                each_tableau(n, |t| {
                    let a = to_alternative(t);
                    let pi = xi(&a);
                    let i = inv(&a) as u64;
                    let f = count_occurrences(&p3_21, &pi);
                    let g = count_occurrences(&p32_1, &reverse_complement(&pi));
                    if i == f && f == g {
                        Ok(())
                    } else {
                        Err(format!("inv={i} f3-21={f} f32-1(rc)={g} xi={pi}"))
                    }
                }),
            )
        }
        Check::Distribution => {
            let tableaux = distribution(n, &Statistic::TableauInv);
            let perms = distribution(
                n,
                &Statistic::PatternCount(parse_pattern("32-1").expect("valid pattern")),
            );
            let detail = format!("inv {:?} vs 32-1 {:?}", tableaux.histogram, perms.histogram);
            if tableaux == perms {
                CheckResult::pass(check, n, detail)
            } else {
                CheckResult::fail(check, n, detail, format!("n={n}"))
            }
        }
        Check::Bell => {
            let counts = map_shapes(n, |ts| {
                ts.fold((0u64, 0u64), |(z, l), t| {
                    (
                        z + u64::from(inv(&to_alternative(&t)) == 0),
                        l + u64::from(is_lbell(&t)),
                    )
                })
            });
            let (zero_inv, lbell) = counts
                .into_iter()
                .fold((0, 0), |(a, b), (z, l)| (a + z, b + l));
            let p = parse_pattern("32-1").expect("valid pattern");
            let avoiders = permutations_of(n)
                .filter(|pi| count_occurrences(&p, pi) == 0)
                .count() as u64;
            let b = bell(n).expect("small n")[n];
            let detail = format!("inv0={zero_inv} lbell={lbell} avoid32-1={avoiders} bell={b}");
            let ok = [zero_inv, lbell, avoiders]
                .iter()
                .all(|&x| u128::from(x) == b);
            if ok {
                CheckResult::pass(check, n, detail)
            } else {
                CheckResult::fail(check, n, detail, format!("n={n}"))
            }
        }
        Check::Equivalence => from_sweep(
            check,
            n,
            each_tableau(n, |t| {
                let a = to_alternative(t);
                let l = is_lbell(t);
                let z = inv(&a) == 0;
                let s = structural_noinv_check(&a);
                if l == z && z == s {
                    Ok(())
                } else {
                    Err(format!("lbell={l} inv0={z} structural={s}"))
                }
            }),
        ),
        Check::Descent => from_sweep(
            check,
            n,
            each_tableau(n, |t| {
                let a = to_alternative(t);
                if descent_column_check(&a) {
                    Ok(())
                } else {
                    Err(format!("descents of {} differ from column labels", xi(&a)))
                }
            }),
        ),
        Check::Subsequence => from_sweep(
            check,
            n,
            each_tableau(n, |t| {
                let a = to_alternative(t);
                let pos = xi(&a).positions();
                for p in all_paths(&a).into_iter().flatten() {
                    if !p.labels().windows(2).all(|w| pos[w[0]] < pos[w[1]]) {
                        return Err(format!("path {:?} is not a subsequence", p.labels()));
                    }
                }
                Ok(())
            }),
        ),
        Check::LeftOf => from_sweep(
            check,
            n,
            each_tableau(n, |t| {
                let a = to_alternative(t);
                let pos = xi(&a).positions();
                let paths = all_paths(&a);
                for pi in paths.iter().flatten() {
                    for pj in paths.iter().flatten() {
                        let (i, j) = (pi.start(), pj.start());
                        if i == j {
                            continue;
                        }
                        let order = compare_paths(pi, pj);
                        let predicted = matches!(order, PathOrder::Less | PathOrder::PContainsQ);
                        if predicted != (pos[i] < pos[j]) {
                            return Err(format!("labels {i},{j}: {order:?}"));
                        }
                    }
                }
                Ok(())
            }),
        ),
        Check::RoundTrip => from_sweep(
            check,
            n,
            each_tableau(n, |t| {
                if to_alternative(t).reconstruct() == *t {
                    Ok(())
                } else {
                    Err("reconstruction differs".into())
                }
            }),
        ),
        Check::Uniqueness => {
            let mut seen = HashSet::new();
            let mut total = 0u64;
            for shard in map_shapes(n, |ts| {
                ts.map(|t| (compact(&t), alternative_to_text(&to_alternative(&t))))
                    .collect::<Vec<_>>()
            }) {
                for (t, rep) in shard {
                    total += 1;
                    if !seen.insert(rep) {
                        return CheckResult::fail(check, n, "duplicate dot form".into(), t);
                    }
                }
            }
            CheckResult::pass(check, n, format!("{total} distinct"))
        }
        Check::Oracle => oracle_check(n, seed),
    }
}

fn oracle_check(max_len: usize, seed: u64) -> CheckResult {
    let patterns: Vec<_> = ORACLE_PATTERNS
        .iter()
        .map(|p| parse_pattern(p).expect("valid pattern"))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut by_len: BTreeMap<usize, usize> = BTreeMap::new();
    for _ in 0..ORACLE_SAMPLES {
        let len = rng.random_range(1..=max_len);
        let mut entries: Vec<usize> = (1..=len).collect();
        entries.shuffle(&mut rng);
        let pi = Permutation::new(entries).expect("shuffled identity");
        *by_len.entry(len).or_default() += 1;
        for p in &patterns {
            let fast = count_occurrences(p, &pi);
            let slow = oracle_count(p, &pi);
            if fast != slow {
                return CheckResult::fail(
                    Check::Oracle,
                    max_len,
                    format!("pattern {p}: {fast} vs oracle {slow}"),
                    pi.to_string(),
                );
            }
        }
    }
    CheckResult::pass(
        Check::Oracle,
        max_len,
        format!(
            "{ORACLE_SAMPLES} permutations x {} patterns, seed {seed}",
            patterns.len()
        ),
    )
}

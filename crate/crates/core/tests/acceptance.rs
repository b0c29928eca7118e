//! Exit criteria, each checked exactly and reported on one line.
//!
//! Run with `cargo test -p permtab-core --test acceptance`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use permtab_core::format::{alternative_to_text, parse_alternative, parse_tableau};
use permtab_core::paths::all_paths;
use permtab_core::tableau::CellKind;
use permtab_core::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const COUNT_BUDGET: Duration = Duration::from_secs(60);
const THEOREM_BUDGET: Duration = Duration::from_secs(30);
const ORACLE_SEED: u64 = 0;
const ORACLE_SAMPLES: usize = 1000;
const ORACLE_MAX_N: usize = 10;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn pattern(s: &str) -> DashedPattern {
    parse_pattern(s).unwrap()
}

fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn all_tableaux(n: usize) -> Vec<PermutationTableau> {
    tableaux_of_length(n).collect()
}

fn describe(t: &PermutationTableau) -> String {
    format::tableau_to_text(t).replace('\n', " ")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn count_identity() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    for n in 0..=8 {
        let count = tableaux_of_length(n).count() as u64;
        ensure(count == factorial(n), || {
            format!("n={n}: {count} != {}", factorial(n))
        })?;
        counts.push(count);
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= COUNT_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("counts {counts:?} in {elapsed:.2?}"))
}

fn main_theorem() -> Outcome {
    let p3_21 = pattern("3-21");
    let p32_1 = pattern("32-1");
    let start = Instant::now();
    let mut checked = 0;
    for n in 0..=7 {
        for t in tableaux_of_length(n) {
            let a = to_alternative(&t);
            let pi = xi(&a);
            let i = inv(&a) as u64;
            let f = count_occurrences(&p3_21, &pi);
            let g = count_occurrences(&p32_1, &reverse_complement(&pi));
            ensure(i == f && f == g, || {
                format!("{}: inv={i} f3-21={f} f32-1(rc)={g}", describe(&t))
            })?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= THEOREM_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} tableaux, n<=7, in {elapsed:.2?}"))
}

fn distribution_identity() -> Outcome {
    let p32_1 = pattern("32-1");
    for n in 0..=7 {
        let mut tableaux = BTreeMap::new();
        for t in tableaux_of_length(n) {
            *tableaux
                .entry(inv(&to_alternative(&t)) as u64)
                .or_insert(0u64) += 1;
        }
        let mut perms = BTreeMap::new();
        for pi in itertools::Itertools::permutations(1..=n, n) {
            let pi = Permutation::new(pi).unwrap();
            *perms.entry(count_occurrences(&p32_1, &pi)).or_insert(0u64) += 1;
        }
        ensure(tableaux == perms, || {
            format!("n={n}: {tableaux:?} vs {perms:?}")
        })?;
    }
    Ok("inv histogram = 32-1 histogram for n<=7".into())
}

fn bell_counts() -> Outcome {
    let p32_1 = pattern("32-1");
    let bells = bell(8).map_err(|e| e.to_string())?;
    ensure(bells[8] == 4140, || format!("B_8 = {}", bells[8]))?;
    for (n, &b) in bells.iter().enumerate() {
        let ts = all_tableaux(n);
        let zero_inv = ts.iter().filter(|t| inv(&to_alternative(t)) == 0).count() as u128;
        let lbell = ts.iter().filter(|t| is_lbell(t)).count() as u128;
        let avoiders = itertools::Itertools::permutations(1..=n, n)
            .filter(|v| count_occurrences(&p32_1, &Permutation::new(v.clone()).unwrap()) == 0)
            .count() as u128;
        ensure(zero_inv == b && lbell == b && avoiders == b, || {
            format!("n={n}: inv0={zero_inv} lbell={lbell} avoid={avoiders} B={b}")
        })?;
    }
    Ok(format!("B_0..B_8 = {bells:?}"))
}

fn equivalence() -> Outcome {
    let mut checked = 0;
    for n in 0..=7 {
        for t in tableaux_of_length(n) {
            let a = to_alternative(&t);
            let l = is_lbell(&t);
            let z = inv(&a) == 0;
            let s = structural_noinv_check(&a);
            ensure(l == z && z == s, || {
                format!("{}: lbell={l} inv0={z} structural={s}", describe(&t))
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} tableaux, n<=7"))
}

fn golden_examples() -> Outcome {
    // length 11 with an empty row
    let t = parse_tableau(&data("length11.tab")).map_err(|e| e.to_string())?;
    let cls = t.classify();
    let rrz = cls.cells_of(CellKind::RightmostRestrictedZero);
    ensure(rrz == vec![Cell::new(5, 9), Cell::new(8, 10)], || {
        format!("white cells {rrz:?}")
    })?;
    let unrestricted = cls.unrestricted_rows();
    ensure(unrestricted == vec![1, 2, 7, 11], || {
        format!("unrestricted {unrestricted:?}")
    })?;

    // length 12 paths; the dot file and the 0/1 file describe the same tableau
    let a = parse_alternative(&data("length12.dots")).map_err(|e| e.to_string())?;
    let t12 = parse_tableau(&data("length12.tab")).map_err(|e| e.to_string())?;
    ensure(a.reconstruct() == t12, || {
        "dot form does not rebuild the 0/1 filling".into()
    })?;
    let p6 = alternating_path(&a, 6).map_err(|e| e.to_string())?;
    let p7 = alternating_path(&a, 7).map_err(|e| e.to_string())?;
    ensure(p6.labels() == [6, 5, 12], || {
        format!("P6 {:?}", p6.labels())
    })?;
    ensure(p7.labels() == [7, 10, 4, 11], || {
        format!("P7 {:?}", p7.labels())
    })?;

    // two small examples
    let left = parse_alternative(&data("one_row.dots")).map_err(|e| e.to_string())?;
    let got = (w(&left, 2), w(&left, 3), inv(&left));
    ensure(got == (Ok(1), Ok(0), 1), || format!("one row: {got:?}"))?;
    let right = to_alternative(&parse_tableau(&data("shape221.tab")).map_err(|e| e.to_string())?);
    let got = (w(&right, 3), w(&right, 5), inv(&right));
    ensure(got == (Ok(2), Ok(0), 2), || format!("shape 2,2,1: {got:?}"))?;
    ensure(
        inversions(&right) == BTreeSet::from([(3, 4), (3, 5)]),
        || format!("{:?}", inversions(&right)),
    )?;
    Ok("classification, paths (6,5,12) (7,10,4,11), w and inv values".into())
}

fn lemma_suites() -> Outcome {
    let mut descents = 0;
    for n in 0..=7 {
        for t in tableaux_of_length(n) {
            let a = to_alternative(&t);
            ensure(descent_column_check(&a), || {
                format!("descent lemma fails on {}", describe(&t))
            })?;
            descents += 1;
        }
    }
    let mut paths_checked = 0;
    let mut pairs_checked = 0;
    for n in 0..=6 {
        for t in tableaux_of_length(n) {
            let a = to_alternative(&t);
            let pi = xi(&a);
            let pos: BTreeMap<Label, usize> = pi
                .entries()
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, i))
                .collect();
            let paths: Vec<AlternatingPath> = all_paths(&a).into_iter().flatten().collect();
            for p in &paths {
                let ok = p.labels().windows(2).all(|w| pos[&w[0]] < pos[&w[1]]);
                ensure(ok, || {
                    format!("path {:?} not a subsequence of {pi}", p.labels())
                })?;
                paths_checked += 1;
            }
            for p in &paths {
                for q in &paths {
                    let (i, j) = (p.start(), q.start());
                    if i == j {
                        continue;
                    }
                    let left_of = pos[&i] < pos[&j];
                    let order = compare_paths(p, q);
                    let predicted = order == PathOrder::Less || order == PathOrder::PContainsQ;
                    ensure(left_of == predicted, || {
                        format!("{}: labels {i},{j} order {order:?} in {pi}", describe(&t))
                    })?;
                    pairs_checked += 1;
                }
            }
        }
    }
    Ok(format!(
        "descents on {descents} tableaux; {paths_checked} paths; {pairs_checked} ordered dot pairs"
    ))
}

fn oracle_equivalence() -> Outcome {
    let patterns: Vec<DashedPattern> = ["32-1", "3-21", "31-2", "2-31", "1-32", "21-3"]
        .iter()
        .map(|p| pattern(p))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    for _ in 0..ORACLE_SAMPLES {
        let n = rng.random_range(1..=ORACLE_MAX_N);
        let mut v: Vec<usize> = (1..=n).collect();
        v.shuffle(&mut rng);
        let pi = Permutation::new(v).unwrap();
        for p in &patterns {
            let fast = count_occurrences(p, &pi);
            let slow = oracle_count(p, &pi);
            ensure(fast == slow, || format!("{p} on {pi}: {fast} vs {slow}"))?;
        }
    }
    Ok(format!(
        "{ORACLE_SAMPLES} permutations x {} patterns, seed {ORACLE_SEED}",
        patterns.len()
    ))
}

fn round_trip() -> Outcome {
    let mut checked = 0;
    for n in 0..=7 {
        for t in tableaux_of_length(n) {
            ensure(to_alternative(&t).reconstruct() == t, || {
                format!("round trip fails on {}", describe(&t))
            })?;
            checked += 1;
        }
    }
    for n in 0..=6 {
        let mut seen = HashSet::new();
        for t in tableaux_of_length(n) {
            let rep = alternative_to_text(&to_alternative(&t));
            ensure(seen.insert(rep), || {
                format!("duplicate dot form for {}", describe(&t))
            })?;
        }
    }
    Ok(format!(
        "{checked} round trips; dot forms distinct for n<=6"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 count identity", count_identity),
        (
            "2 inversion number = 3-21 on xi = 32-1 on reverse complement",
            main_theorem,
        ),
        ("3 distribution identity", distribution_identity),
        ("4 Bell counts", bell_counts),
        ("5 L-Bell equivalence", equivalence),
        ("6 golden examples", golden_examples),
        ("7 lemma suites", lemma_suites),
        ("8 pattern counter vs oracle", oracle_equivalence),
        ("9 round trip and uniqueness", round_trip),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

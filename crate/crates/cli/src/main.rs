use std::fs;
use std::io::{self, BufWriter, IsTerminal, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use permtab_core::format::{parse_any, tableau_to_text};
use permtab_core::verify::{verify, CheckSet};
use permtab_core::{
    count_occurrences, distribution, inv, is_lbell, parse_pattern, reverse_complement,
    tableaux_of_length, to_alternative, w, xi, CellKind, Permutation, PermutationTableau,
    Statistic,
};

const MAX_N: usize = 12;

#[derive(Parser)]
#[command(
    name = "permtab",
    version,
    about = "Permutation tableaux, their inversion number, and dashed patterns"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Aligned tables instead of TSV (the default when stdout is a terminal).
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every tableau of length n, then the total.
    Enumerate { n: usize },
    /// Labels, cell classes, dots, w_j, inv, xi and the L-Bell flag of a tableau file.
    Stats { file: PathBuf },
    /// The permutation xi(T) of a tableau file.
    Xi { file: PathBuf },
    /// The inversion number of a tableau file.
    Inv { file: PathBuf },
    /// Number of occurrences of a dashed pattern such as 3-21 in a permutation such as 4,5,1,3,2.
    Pattern {
        pattern: String,
        permutation: String,
        /// Also count in the reverse complement.
        #[arg(long)]
        rc: bool,
    },
    /// Histogram of a statistic: `inv` over tableaux, or a pattern count over S_n.
    Distribution {
        n: usize,
        #[arg(default_value = "inv")]
        statistic: String,
    },
    /// Run checks (`all`, `lemmas`, or a comma-separated list) up to length n.
    Verify {
        n: usize,
        #[arg(default_value = "all")]
        checks: String,
    },
}

enum Failure {
    /// Ran to completion but something did not hold.
    Checks,
    Error(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Error(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.pretty || io::stdout().is_terminal();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        pool = pool.num_threads(jobs);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("permtab: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli.command, cli.seed, pretty)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Error(msg)) => {
            eprintln!("permtab: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, seed: u64, pretty: bool) -> Result<(), Failure> {
    match command {
        Command::Enumerate { n } => enumerate(n),
        Command::Stats { file } => {
            let t = read_tableau(&file)?;
            emit(&stats(&t)?, pretty)
        }
        Command::Xi { file } => {
            let t = read_tableau(&file)?;
            emit(&format!("{}\n", xi(&to_alternative(&t))), false)
        }
        Command::Inv { file } => {
            let t = read_tableau(&file)?;
            emit(&format!("{}\n", inv(&to_alternative(&t))), false)
        }
        Command::Pattern {
            pattern,
            permutation,
            rc,
        } => {
            let p = parse_pattern(&pattern)?;
            let pi: Permutation = permutation.parse()?;
            let mut out = format!("{}\n", count_occurrences(&p, &pi));
            if rc {
                out.push_str(&format!(
                    "rc\t{}\n",
                    count_occurrences(&p, &reverse_complement(&pi))
                ));
            }
            emit(&out, false)
        }
        Command::Distribution { n, statistic } => {
            check_n(n)?;
            let stat: Statistic = statistic.parse()?;
            emit(&distribution(n, &stat).to_tsv(), pretty)
        }
        Command::Verify { n, checks } => {
            let set: CheckSet = checks.parse()?;
            let report = verify(n, &set, seed)?;
            emit(&report.to_tsv(), pretty)?;
            eprintln!("elapsed {:.3}s", report.elapsed.as_secs_f64());
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
    }
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n > MAX_N {
        return Err(Failure::Error(format!(
            "n must be at most {MAX_N}, got {n}"
        )));
    }
    Ok(())
}

// Sequential so the output order never depends on the thread count.
fn enumerate(n: usize) -> Result<(), Failure> {
    check_n(n)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut total: u64 = 0;
    for t in tableaux_of_length(n) {
        write_or_quit(&mut out, tableau_to_text(&t).as_bytes())?;
        write_or_quit(&mut out, b"\n")?;
        total += 1;
    }
    write_or_quit(&mut out, format!("total\t{total}\n").as_bytes())?;
    out.flush().or_else(quiet_pipe)?;
    Ok(())
}

fn write_or_quit(out: &mut impl Write, bytes: &[u8]) -> Result<(), Failure> {
    out.write_all(bytes).or_else(quiet_pipe)
}

fn quiet_pipe(e: io::Error) -> Result<(), Failure> {
    if e.kind() == io::ErrorKind::BrokenPipe {
        std::process::exit(0);
    }
    Err(e.into())
}

fn read_tableau(path: &Path) -> Result<PermutationTableau, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Error(format!("{}: {e}", path.display())))?
    };
    parse_any(&text).map_err(|e| Failure::Error(format!("{}: {e}", path.display())))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "-".to_string()
    } else {
        parts.join(sep)
    }
}

fn class_char(kind: CellKind) -> char {
    match kind {
        CellKind::TopmostOne => 'B',
        CellKind::OtherOne => '1',
        CellKind::RightmostRestrictedZero => 'W',
        CellKind::RestrictedZero => 'r',
        CellKind::FreeZero => '0',
    }
}

/// Key/value lines. Cell classes use B (topmost 1), 1, W (rightmost
/// restricted 0), r (other restricted 0), 0 (free 0).
fn stats(t: &PermutationTableau) -> Result<String, Failure> {
    let labels = t.labeling();
    let a = to_alternative(t);
    let cls = t.classify();
    let pi = xi(&a);
    let mut kv: Vec<(String, String)> = vec![
        ("n".into(), t.len().to_string()),
        ("shape".into(), t.shape().to_string()),
        ("row_labels".into(), join(labels.row_labels(), ",")),
        ("column_labels".into(), join(labels.column_labels(), ",")),
    ];
    for (r, row) in t.rows().iter().enumerate() {
        let codes: String = (0..row.len())
            .map(|c| class_char(cls.kind(labels.cell_at(r, c)).expect("cell in shape")))
            .collect();
        let codes = if codes.is_empty() {
            "-".to_string()
        } else {
            codes
        };
        kv.push((format!("class_row_{}", labels.row_label(r)), codes));
    }
    kv.push((
        "unrestricted_rows".into(),
        join(cls.unrestricted_rows(), ","),
    ));
    kv.push(("black_dots".into(), join(a.black_dots(), " ")));
    kv.push(("white_dots".into(), join(a.white_dots(), " ")));
    for j in labels.column_labels() {
        kv.push((format!("w_{j}"), w(&a, j)?.to_string()));
    }
    kv.push(("inv".into(), inv(&a).to_string()));
    kv.push(("xi".into(), pi.to_string()));
    let p = parse_pattern("3-21")?;
    kv.push(("f3-21".into(), count_occurrences(&p, &pi).to_string()));
    kv.push(("lbell".into(), is_lbell(t).to_string()));
    Ok(kv.into_iter().map(|(k, v)| format!("{k}\t{v}\n")).collect())
}

fn emit(tsv: &str, pretty: bool) -> Result<(), Failure> {
    let text = if pretty { align(tsv) } else { tsv.to_string() };
    let mut out = io::stdout().lock();
    write_or_quit(&mut out, text.as_bytes())?;
    out.flush().or_else(quiet_pipe)
}

fn align(tsv: &str) -> String {
    let rows: Vec<Vec<&str>> = tsv.lines().map(|l| l.split('\t').collect()).collect();
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|i| {
            rows.iter()
                .filter_map(|r| r.get(i))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i + 1 < row.len() {
                line.push_str(&format!("{cell:<width$}  ", width = widths[i]));
            } else {
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

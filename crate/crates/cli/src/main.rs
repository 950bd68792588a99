//! `schubert`: command-line front end.
//!
//! Exit status is 0 on success, 1 on invalid input or an exceeded size
//! limit, and 2 when two computations that must agree do not. Every error
//! goes to stderr on a line starting with `error[invalid-input]:` or
//! `error[internal]:`.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use schubert::classify::{
    find_configuration, multiplicitous_witness, survey, zero_one_status, SurveyMethods,
};
use schubert::orthodontia::{schubert_orthodontic, Orthodontia};
use schubert::perm::rothe_diagram;
use schubert::poly::schubert_classic;
use schubert::tableaux::{schubert_from_tableaux, Tableaux};
use schubert::weyl::{
    dual_character_with_limit, pattern_dominance_check_with_limit, DEFAULT_SIZE_LIMIT,
};
use schubert::{Diagram, Error, Permutation, Polynomial};

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Schubert polynomials, zero-one classification and pattern dominance"
)]
struct Cli {
    /// Emit line-oriented key=value records instead of plain text.
    #[arg(long, global = true)]
    structured: bool,

    /// Cross-check results against independent computations; a mismatch exits with status 2.
    #[arg(long, global = true)]
    checked: bool,

    /// Override the size limit of the chosen computation.
    #[arg(long, global = true, value_name = "N")]
    limit: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Schubert polynomial of a permutation.
    Expand {
        perm: String,
        #[arg(long, value_enum, default_value_t = Method::Classic)]
        method: Method,
    },
    /// Print the orthodontic sequence of a permutation.
    Orthodontia {
        perm: String,
        /// Also print the intermediate diagrams O(w, r).
        #[arg(long)]
        trace: bool,
    },
    /// List the tableau words of a permutation.
    Tableaux {
        perm: String,
        /// List stage r instead of the full set.
        #[arg(long, value_name = "R")]
        stage: Option<usize>,
        /// Verify that every word of every stage is a valid filling.
        #[arg(long)]
        check: bool,
    },
    /// Print the dual character of the diagram in a file.
    Char { file: PathBuf },
    /// Check the pattern dominance inequality for a diagram, a row and a column.
    Dominance {
        file: PathBuf,
        #[arg(long)]
        row: usize,
        #[arg(long)]
        col: usize,
        /// Also print F.
        #[arg(long)]
        show_f: bool,
    },
    /// Decide whether a Schubert polynomial is zero-one.
    ZeroOne {
        perm: String,
        /// Evaluate all four criteria, including the expansion.
        #[arg(long)]
        all_methods: bool,
    },
    /// Classify every permutation of a given size.
    Survey {
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodSet::Fast)]
        methods: MethodSet,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Classic,
    Orthodontia,
    Tableaux,
    Weyl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodSet {
    Fast,
    All,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let rendered = e.to_string();
            let mut lines = rendered.lines();
            let first = lines.next().unwrap_or_default();
            eprintln!(
                "error[invalid-input]: {}",
                first.strip_prefix("error: ").unwrap_or(first)
            );
            for line in lines {
                eprintln!("{line}");
            }
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error[invalid-input]: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error[internal]: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Expand { perm, method } => expand(cli, &parse_perm(perm)?, *method),
        Command::Orthodontia { perm, trace } => orthodontia(cli, &parse_perm(perm)?, *trace),
        Command::Tableaux { perm, stage, check } => {
            tableaux(cli, &parse_perm(perm)?, *stage, *check)
        }
        Command::Char { file } => character(cli, &read_diagram(file)?),
        Command::Dominance {
            file,
            row,
            col,
            show_f,
        } => dominance(cli, &read_diagram(file)?, *row, *col, *show_f),
        Command::ZeroOne { perm, all_methods } => zero_one(cli, &parse_perm(perm)?, *all_methods),
        Command::Survey { n, methods } => run_survey(cli, *n, *methods),
    }
}

fn parse_perm(s: &str) -> std::result::Result<Permutation, Failure> {
    Ok(s.parse::<Permutation>()?)
}

fn read_diagram(path: &PathBuf) -> std::result::Result<Diagram, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(Diagram::parse_text(&text)?)
}

fn weyl_limit(cli: &Cli) -> usize {
    let limit = cli.limit.unwrap_or(DEFAULT_SIZE_LIMIT);
    if limit > DEFAULT_SIZE_LIMIT {
        eprintln!(
            "warning: size limit raised to {limit}; subdiagram groups grow very quickly past {DEFAULT_SIZE_LIMIT}"
        );
    }
    limit
}

fn render(cli: &Cli, f: &Polynomial) -> String {
    if cli.structured {
        f.to_records()
    } else {
        format!("{f}\n")
    }
}

fn disagreement(w: &Permutation, detail: String) -> Failure {
    Error::Disagreement {
        perm: w.to_string(),
        detail,
    }
    .into()
}

fn expand(cli: &Cli, w: &Permutation, method: Method) -> Outcome {
    let weyl = |w: &Permutation| dual_character_with_limit(&rothe_diagram(w), weyl_limit(cli));
    let f = match method {
        Method::Classic => schubert_classic(w),
        Method::Orthodontia => schubert_orthodontic(w),
        Method::Tableaux => schubert_from_tableaux(w),
        Method::Weyl => weyl(w)?,
    };
    if cli.checked && method != Method::Classic && f != schubert_classic(w) {
        return Err(disagreement(w, "expansion differs from divided differences".into()));
    }
    if cli.checked && method == Method::Classic {
        if schubert_orthodontic(w) != f {
            return Err(disagreement(w, "operator formula differs".into()));
        }
        if schubert_from_tableaux(w) != f {
            return Err(disagreement(w, "tableau expansion differs".into()));
        }
    }
    Ok(render(cli, &f))
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    parts.join(",")
}

fn orthodontia(cli: &Cli, w: &Permutation, trace: bool) -> Outcome {
    let o = Orthodontia::new(w);
    let seq = o.sequence();
    let mut out = String::new();
    if cli.structured {
        writeln!(
            out,
            "sequence i={} k={} m={}",
            tuple(&seq.teeth),
            tuple(&seq.interval_multiplicities),
            tuple(&seq.step_multiplicities)
        )
        .unwrap();
    } else {
        writeln!(out, "i=({})", tuple(&seq.teeth)).unwrap();
        writeln!(out, "k=({})", tuple(&seq.interval_multiplicities)).unwrap();
        writeln!(out, "m=({})", tuple(&seq.step_multiplicities)).unwrap();
    }
    if trace {
        for r in 0..=o.len() {
            let d = o.intermediate(r);
            let removed = tuple(o.removed_at(r));
            if cli.structured {
                let cols: Vec<String> = d
                    .columns()
                    .iter()
                    .map(|c| c.rows().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                    .collect();
                writeln!(out, "stage r={r} removed={removed} columns={}", cols.join("|")).unwrap();
            } else {
                writeln!(out, "O(w,{r}) removed=({removed})").unwrap();
                out.push_str(&d.to_text());
            }
        }
    }
    if cli.checked && !o.reconstruction().column_equivalent(o.rothe()) {
        return Err(disagreement(w, "reconstruction is not column-equivalent to D(w)".into()));
    }
    Ok(out)
}

fn tableaux(cli: &Cli, w: &Permutation, stage: Option<usize>, check: bool) -> Outcome {
    let t = Tableaux::new(w);
    if check || cli.checked {
        for r in 0..t.num_stages() {
            for word in t.stage(r)? {
                t.read(word, r)?;
            }
        }
    }
    let words = t.stage(stage.unwrap_or(0))?;
    let mut out = String::new();
    for word in words {
        if cli.structured {
            let wt: Vec<String> = word.weight(w.size()).iter().map(u32::to_string).collect();
            writeln!(out, "word={word} weight={}", wt.join(",")).unwrap();
        } else {
            writeln!(out, "{word}").unwrap();
        }
    }
    if check || cli.checked {
        let total: usize = (0..t.num_stages()).map(|r| t.stage(r).map_or(0, |s| s.len())).sum();
        eprintln!("checked {total} fillings over {} stages", t.num_stages());
    }
    Ok(out)
}

fn character(cli: &Cli, d: &Diagram) -> Outcome {
    Ok(render(cli, &dual_character_with_limit(d, weyl_limit(cli))?))
}

fn dominance(cli: &Cli, d: &Diagram, k: usize, l: usize, show_f: bool) -> Outcome {
    let report = pattern_dominance_check_with_limit(d, k, l, weyl_limit(cli))?;
    if cli.checked && (!report.rank_monotone || report.augmentation == Some(false)) {
        return Err(Failure::Internal(format!(
            "rank monotonicity {} and augmentation {:?} at row {k}, column {l}",
            report.rank_monotone, report.augmentation
        )));
    }
    let mut out = String::new();
    let augmentation = match report.augmentation {
        Some(b) => b.to_string(),
        None => "skipped".to_string(),
    };
    writeln!(out, "M={}", report.m).unwrap();
    writeln!(out, "ok={}", report.ok).unwrap();
    writeln!(out, "rank_monotone={}", report.rank_monotone).unwrap();
    writeln!(out, "augmentation={augmentation}").unwrap();
    if show_f {
        if cli.structured {
            out.push_str(&report.f.to_records());
        } else {
            writeln!(out, "F={}", report.f).unwrap();
        }
    }
    Ok(out)
}

fn zero_one(cli: &Cli, w: &Permutation, all_methods: bool) -> Outcome {
    let status = zero_one_status(w, all_methods, cli.checked)?;
    let mut out = String::new();
    if cli.structured {
        writeln!(out, "zero_one={}", status.is_zero_one()).unwrap();
    } else {
        writeln!(out, "{}", status.is_zero_one()).unwrap();
    }
    if let Some((pattern, at)) = multiplicitous_witness(w) {
        if cli.structured {
            writeln!(out, "pattern={pattern} positions={}", tuple(&at)).unwrap();
        } else {
            writeln!(out, "contains {pattern} at positions {}", tuple(&at)).unwrap();
        }
    }
    if let Some(inst) = find_configuration(&rothe_diagram(w), w) {
        writeln!(out, "configuration {inst}").unwrap();
    }
    if all_methods {
        let expansion = status.by_expansion.map_or("skipped".to_string(), |b| b.to_string());
        writeln!(
            out,
            "expansion={expansion} patterns={} configurations={} multiplicity_free={}",
            status.by_patterns, status.by_configurations, status.by_multiplicity_free
        )
        .unwrap();
    }
    Ok(out)
}

fn run_survey(cli: &Cli, n: usize, methods: MethodSet) -> Outcome {
    let methods = match methods {
        MethodSet::Fast => SurveyMethods::Fast,
        MethodSet::All => SurveyMethods::All,
    };
    let summary = survey(n, methods, cli.limit)?;
    if cli.checked {
        if let Some(w) = summary.disagreements.first() {
            let status = zero_one_status(w, methods == SurveyMethods::All, false)?;
            return Err(disagreement(w, format!("{status:?}")));
        }
    }
    let mut out = String::new();
    if cli.structured {
        writeln!(
            out,
            "survey n={} zero_one={} total={} disagreements={}",
            summary.n,
            summary.zero_one,
            summary.total,
            summary.disagreements.len()
        )
        .unwrap();
    } else {
        writeln!(
            out,
            "{} of {} permutations of size {} are zero-one",
            summary.zero_one, summary.total, summary.n
        )
        .unwrap();
        writeln!(out, "disagreements: {}", summary.disagreements.len()).unwrap();
    }
    for w in &summary.disagreements {
        writeln!(out, "disagreement {w}").unwrap();
    }
    Ok(out)
}

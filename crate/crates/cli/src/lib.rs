//! Command-line front end for `farey-core`.
//!
//! [`run`] parses an argument vector, dispatches to the core library and
//! writes data to `out` and diagnostics to `err`. Exit status is 0 on
//! success, 2 on a usage error and 1 when the input is well formed but
//! outside the domain of the requested operation.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use farey_core::dynamics::{orbit, random_walk, RealMap};
use farey_core::hyperbolic::{level_tokens, level_tokens_from_origin, render_ford_svg};
use farey_core::numbers::{
    dual, matrix_of, rational_from_index, sb_index, sb_path, CfExpansion, Rational,
};
use farey_core::sturmian::{apply_t_stream, sturmian_prefix, SlopeSpec};
use farey_core::words::{
    derive, dual_word, fc_word, fc_word_by_rotation, fc_word_by_translation, step_t, value, FcWord,
    Word,
};
use num_bigint::BigUint;

mod output;

pub use output::*;

/// Environment variable selecting the default output format (`text` or `json`).
pub const FORMAT_ENV: &str = "FAREY_FORMAT";

#[derive(Parser, Debug)]
#[command(
    name = "farey",
    version,
    about = "Stern-Brocot tree, Christoffel words and Ford circles"
)]
struct Cli {
    /// Structured JSON output (default comes from FAREY_FORMAT)
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Farey-Christoffel word of a rational
    Word {
        x: Rational,
        #[arg(long, value_enum, default_value_t = Method::Path)]
        method: Method,
    },
    /// Continued fraction of a rational, or the value of one with --eval
    Cf(CfArgs),
    /// Stern-Brocot path (1 = right move)
    Path {
        x: Rational,
        /// Also print the matrix of the node
        #[arg(long)]
        matrix: bool,
    },
    /// Breadth-first index in the Stern-Brocot tree
    Index { x: Rational },
    /// Rational with the given breadth-first index
    Unindex { n: BigUint },
    /// Dual of a rational, or of an FC word with --word
    Dual(DualArgs),
    /// Derivation table of an FC word down to a single letter
    Derive { word: Word },
    /// Iterate the horizontal map on FC words
    StepT {
        word: Word,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Exact orbit of F, R, Rinv, G, S, K or D
    Orbit {
        map: RealMap,
        start: Rational,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        steps: u64,
    },
    /// Prefix of the characteristic Sturmian sequence of a slope
    /// written as "a0;a1,...,(p1,...,pm)"
    Sturmian {
        slope: SlopeSpec,
        #[arg(long, default_value_t = 100)]
        len: usize,
        /// Apply the map T to the prefix
        #[arg(long)]
        apply_t: bool,
    },
    /// SVG of the Ford circles over an interval
    Ford {
        #[arg(long, default_value = "0")]
        from: Rational,
        #[arg(long, default_value = "1")]
        to: Rational,
        #[arg(long, default_value_t = 8)]
        max_den: u64,
        /// Overlay the horocycle tokens of this level
        #[arg(long)]
        level: Option<u32>,
    },
    /// Random walk on the permuted tree with visit frequencies
    Walk {
        #[arg(long, default_value_t = 100_000)]
        steps: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Open interval "a,b"; repeatable (default: 1,inf and 0,1/2)
        #[arg(long = "interval", value_parser = parse_interval)]
        intervals: Vec<(Rational, Rational)>,
    },
    /// Nodes of the tree down to a depth, breadth first
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=40))]
        depth: u32,
        /// Follow the R-orbit of 1 instead
        #[arg(long)]
        permuted: bool,
        /// Add the FC word of each node
        #[arg(long)]
        words: bool,
    },
    /// Horocycle token row of a level
    Tokens {
        #[arg(long)]
        level: u32,
        /// Start from the origin instead of the previous level
        #[arg(long)]
        from_origin: bool,
    },
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum Method {
    Path,
    Rotation,
    Translation,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CfArgs {
    x: Option<Rational>,
    #[arg(long)]
    eval: Option<CfExpansion>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct DualArgs {
    x: Option<Rational>,
    #[arg(long)]
    word: Option<Word>,
}

fn parse_interval(s: &str) -> Result<(Rational, Rational), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"a,b\", got {s:?}"))?;
    let a: Rational = a.parse().map_err(|e| format!("{e}"))?;
    let b: Rational = b.parse().map_err(|e| format!("{e}"))?;
    Ok((a, b))
}

enum Failure {
    Domain(farey_core::Error),
    Io(std::io::Error),
}

impl From<farey_core::Error> for Failure {
    fn from(e: farey_core::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn json_default() -> bool {
    std::env::var(FORMAT_ENV).is_ok_and(|v| v.eq_ignore_ascii_case("json"))
}

/// Runs one command. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let json = cli.json || json_default();
    match dispatch(cli.command, json, out) {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn emit<T: serde::Serialize>(
    out: &mut dyn Write,
    json: bool,
    data: &T,
    text: &str,
) -> Result<(), Failure> {
    if json {
        serde_json::to_writer(&mut *out, data)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{text}")?;
    }
    Ok(())
}

fn lines<T: std::fmt::Display>(rows: impl IntoIterator<Item = T>) -> String {
    rows.into_iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn dispatch(command: Command, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Word { x, method } => {
            let w = match method {
                Method::Path => fc_word(&x),
                Method::Rotation => fc_word_by_rotation(&x)?,
                Method::Translation => fc_word_by_translation(&x)?,
            };
            let data = WordOut {
                slope: x,
                word: w.word().clone(),
            };
            emit(out, json, &data, &data.word.to_string())
        }
        Command::Cf(CfArgs { x: Some(x), .. }) => {
            let cf = CfExpansion::expand(&x)?;
            let data = CfOut {
                value: x,
                cf: cf.to_string(),
            };
            emit(out, json, &data, &data.cf)
        }
        Command::Cf(CfArgs { eval, .. }) => {
            let cf = eval.expect("clap group");
            let data = CfOut {
                value: cf.value(),
                cf: cf.to_string(),
            };
            emit(out, json, &data, &data.value.to_string())
        }
        Command::Path { x, matrix } => {
            let path = sb_path(&x)?;
            let m = matrix_of(&x)?;
            let [n, mm, t, s] = m.entries().map(|e| e.to_string());
            let data = PathOut {
                value: x,
                path: path.to_string(),
                matrix: [[n, mm], [t, s]],
            };
            let text = if matrix {
                format!("{}\n{m}", data.path)
            } else {
                data.path.clone()
            };
            emit(out, json, &data, &text)
        }
        Command::Index { x } => {
            let data = IndexOut {
                index: sb_index(&x)?.to_string(),
                value: x,
            };
            emit(out, json, &data, &data.index)
        }
        Command::Unindex { n } => {
            let data = IndexOut {
                value: rational_from_index(&n)?,
                index: n.to_string(),
            };
            emit(out, json, &data, &data.value.to_string())
        }
        Command::Dual(DualArgs { x: Some(x), .. }) => {
            let data = DualOut {
                input: x.to_string(),
                dual: dual(&x)?.to_string(),
            };
            emit(out, json, &data, &data.dual)
        }
        Command::Dual(DualArgs { word, .. }) => {
            let w = word.expect("clap group");
            let data = DualOut {
                dual: dual_word(&w)?.to_string(),
                input: w.to_string(),
            };
            emit(out, json, &data, &data.dual)
        }
        Command::Derive { word } => {
            let mut cur = FcWord::new(word)?;
            let mut rows = Vec::new();
            loop {
                rows.push(DeriveRow {
                    word: cur.word().clone(),
                    slope: cur.slope().clone(),
                    value: value(cur.word())?.to_string(),
                });
                if cur.len() < 2 {
                    break;
                }
                cur = derive(cur.word())?;
            }
            let text = lines(
                rows.iter()
                    .map(|r| format!("{}\t{}\t{}", r.word, r.slope, r.value)),
            );
            emit(out, json, &DeriveOut { rows }, &text)
        }
        Command::StepT { word, steps } => {
            let mut words = vec![FcWord::new(word)?];
            for _ in 0..steps {
                let next = step_t(words.last().expect("nonempty").word())?;
                words.push(next);
            }
            let rows: Vec<WordOut> = words
                .into_iter()
                .map(|w| WordOut {
                    slope: w.slope().clone(),
                    word: w.into_word(),
                })
                .collect();
            let text = lines(rows.iter().map(|r| format!("{}\t{}", r.word, r.slope)));
            emit(out, json, &StepTOut { words: rows }, &text)
        }
        Command::Orbit { map, start, steps } => {
            let points = orbit(map, &start, steps as usize)?;
            let text = lines(points.iter().enumerate().map(|(k, x)| format!("{k}\t{x}")));
            let data = OrbitOut {
                map: map.to_string(),
                points,
            };
            emit(out, json, &data, &text)
        }
        Command::Sturmian {
            slope: spec,
            len,
            apply_t,
        } => {
            let mut prefix = sturmian_prefix(&spec, len)?;
            if apply_t {
                prefix = apply_t_stream(&prefix)?;
            }
            let data = SturmianOut {
                slope: prefix.slope.to_string(),
                length: prefix.symbols.len(),
                guaranteed_length: prefix.guaranteed_length,
                symbols: prefix.symbols,
            };
            emit(out, json, &data, &data.symbols.to_string())
        }
        Command::Ford {
            from,
            to,
            max_den,
            level,
        } => {
            let svg = render_ford_svg((&from, &to), max_den, level)?;
            let text = svg.trim_end().to_string();
            emit(out, json, &FordOut { svg }, &text)
        }
        Command::Walk {
            steps,
            seed,
            intervals,
        } => {
            let intervals = if intervals.is_empty() {
                vec![
                    (Rational::one(), Rational::infinity()),
                    (Rational::zero(), Rational::new(1u32, 2u32)?),
                ]
            } else {
                intervals
            };
            let reports: Vec<FrequencyOut> = random_walk(steps, seed, &intervals)?
                .into_iter()
                .map(|r| FrequencyOut {
                    interval: r.interval,
                    observed: r.observed,
                    expected: r.expected,
                    steps: r.steps,
                    seed: r.seed,
                })
                .collect();
            let text = lines(reports.iter().map(|r| {
                let (a, b) = &r.interval;
                format!("({a}, {b})\t{:.6}\t{:.6}", r.observed, r.expected)
            }));
            let data = WalkOut { reports };
            emit(out, json, &data, &text)
        }
        Command::Enumerate {
            depth,
            permuted,
            words,
        } => {
            let count = (1u64 << depth) - 1;
            let values: Vec<Rational> = if permuted {
                orbit(RealMap::R, &Rational::one(), count as usize - 1)?
            } else {
                (1..=count)
                    .map(|n| rational_from_index(&BigUint::from(n)))
                    .collect::<farey_core::Result<_>>()?
            };
            let nodes: Vec<NodeOut> = values
                .into_iter()
                .zip(1u64..)
                .map(|(x, n)| NodeOut {
                    index: n,
                    word: words.then(|| fc_word(&x).into_word()),
                    value: x,
                })
                .collect();
            let text = lines(nodes.iter().map(|n| match &n.word {
                Some(w) => format!("{}\t{}\t{}", n.index, n.value, w),
                None => format!("{}\t{}", n.index, n.value),
            }));
            emit(out, json, &EnumerateOut { nodes }, &text)
        }
        Command::Tokens { level, from_origin } => {
            let row = if from_origin {
                level_tokens_from_origin(level)?
            } else {
                level_tokens(level)?
            };
            let data = TokensOut {
                level,
                from_origin,
                row: row.to_string(),
            };
            emit(out, json, &data, &data.row)
        }
    }
}

//! Command definitions and dispatch. Every subcommand is a thin adapter over
//! the kernel crate; no algebra lives here.

use std::fmt;
use std::fs;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};

use otree_core::butcher;
use otree_core::cut::{
    admissible_left_cuts, apply_cut, full_admissible_left_cuts, left_cuts, nodal_left_cuts,
    word_cuts, Cut,
};
use otree_core::enumerate::{
    count_forests, enumerate_forests_bounded, ForestFilter, DEFAULT_MAX_NODES,
};
use otree_core::forest::{forget, parse_forest, pi, sigma, Color, Forest};
use otree_core::graft::{gl_product, graft};
use otree_core::hopf::{antipode, coproduct};
use otree_core::lincomb::{concat, shuffle, LinComb};
use otree_core::series::Series;
use otree_core::verify;

use crate::output::{render_forest, render_lincomb, render_series, render_tensor, Format};
use crate::tables;

/// Symbolic computations with ordered colored rooted forests: products,
/// cuts, coproducts, antipodes, symmetrization, and truncated dual series.
#[derive(Parser)]
#[command(name = "otree", version, max_term_width = 100)]
pub struct Cli {
    /// Output format for algebraic values.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum FilterArg {
    #[default]
    All,
    Trees,
    Tall,
    Bushy,
}

impl From<FilterArg> for ForestFilter {
    fn from(f: FilterArg) -> ForestFilter {
        match f {
            FilterArg::All => ForestFilter::All,
            FilterArg::Trees => ForestFilter::Trees,
            FilterArg::Tall => ForestFilter::Tall,
            FilterArg::Bushy => ForestFilter::Bushy,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Nlc,
    Lc,
    Alc,
    Falc,
    Wc,
}

#[derive(Subcommand)]
pub enum Command {
    /// List or count all forests with exactly N nodes.
    Enumerate {
        n: usize,
        /// Comma-separated color tokens (default: the single color "0").
        #[arg(long, value_delimiter = ',')]
        colors: Vec<String>,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        /// Print only the number of forests.
        #[arg(long)]
        count: bool,
    },
    /// Left-graft one forest onto another.
    Graft { left: String, right: String },
    /// Grossman-Larson product of two forests.
    Gl { left: String, right: String },
    /// Shuffle product of two forests.
    Shuffle { left: String, right: String },
    /// Concatenation of two forests.
    Concat { left: String, right: String },
    /// Coproduct of a forest.
    Coproduct { forest: String },
    /// Antipode of a forest.
    Antipode { forest: String },
    /// Table of all cuts of a forest with their kinds, cut parts and
    /// remainders.
    Cuts {
        forest: String,
        /// Restrict to one cut family.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
    },
    /// Symmetrization of the unordered class of a forest.
    Symmetrize { forest: String },
    /// Symmetry coefficient (stabilizer size) of a forest.
    Sigma { forest: String },
    /// Total number of tree/branch permutations acting on a forest.
    Pi { forest: String },
    /// Canonical representative of the unordered class of a forest.
    Forget { forest: String },
    /// Compose two dual series (JSON files, `-` for stdin).
    SeriesCompose { alpha: String, beta: String },
    /// Exponential of a logarithmic dual series.
    SeriesExp { series: String },
    /// Logarithm of an exponential dual series.
    SeriesLog { series: String },
    /// Report whether a dual series is logarithmic and/or exponential.
    SeriesCheck { series: String },
    /// Regenerate the product/shuffle/coproduct/antipode tables.
    Tables {
        #[arg(long, default_value_t = 4)]
        max_order: usize,
    },
    /// Run the algebraic law battery and fail on any violation.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_order: usize,
    },
}

#[derive(Debug)]
pub struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> CliError {
        CliError(e.to_string())
    }
}

fn read_stdin() -> Result<String, CliError> {
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf)?;
    Ok(buf)
}

/// Forest argument: a grammar string, or `-` to read one from stdin.
fn forest_arg(arg: &str) -> Result<Forest, CliError> {
    let text = if arg == "-" {
        read_stdin()?
    } else {
        arg.to_string()
    };
    Ok(parse_forest(text.trim_end_matches(['\n', '\r']))?)
}

/// Series argument: a JSON file path, or `-` to read JSON from stdin.
fn series_arg(arg: &str) -> Result<Series, CliError> {
    let text = if arg == "-" {
        read_stdin()?
    } else {
        fs::read_to_string(arg)?
    };
    let value: serde_json::Value = serde_json::from_str(&text)?;
    Ok(Series::from_json(&value)?)
}

fn enumeration_bound() -> Result<usize, CliError> {
    match std::env::var("OTREE_MAX_ORDER") {
        Ok(v) => v.parse().map_err(|_| {
            CliError(format!(
                "OTREE_MAX_ORDER must be a nonnegative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_NODES),
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    match cli.command {
        Command::Enumerate {
            n,
            colors,
            filter,
            count,
        } => {
            let colors = if colors.is_empty() {
                vec![Color::default()]
            } else {
                colors
                    .iter()
                    .map(|t| Color::new(t))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let bound = enumeration_bound()?;
            if count && filter == FilterArg::All {
                if n > bound {
                    return Err(CliError(format!(
                        "enumeration bound exceeded: {n} nodes requested, bound is {bound}"
                    )));
                }
                println!("{}", count_forests(n, colors.len()));
                return Ok(());
            }
            let forests = enumerate_forests_bounded(n, &colors, filter.into(), bound)?;
            if count {
                println!("{}", forests.len());
            } else {
                match format {
                    Format::Json => {
                        let rows: Vec<_> = forests
                            .iter()
                            .map(|f| serde_json::Value::String(f.to_string()))
                            .collect();
                        println!("{}", serde_json::Value::Array(rows));
                    }
                    _ => {
                        for f in forests {
                            println!("{}", render_forest(&f, format));
                        }
                    }
                }
            }
        }
        Command::Graft { left, right } => {
            let value = graft(
                &LinComb::from(forest_arg(&left)?),
                &LinComb::from(forest_arg(&right)?),
            );
            println!("{}", render_lincomb(&value, format));
        }
        Command::Gl { left, right } => {
            let value = gl_product(
                &LinComb::from(forest_arg(&left)?),
                &LinComb::from(forest_arg(&right)?),
            );
            println!("{}", render_lincomb(&value, format));
        }
        Command::Shuffle { left, right } => {
            let value = shuffle(
                &LinComb::from(forest_arg(&left)?),
                &LinComb::from(forest_arg(&right)?),
            );
            println!("{}", render_lincomb(&value, format));
        }
        Command::Concat { left, right } => {
            let value = concat(
                &LinComb::from(forest_arg(&left)?),
                &LinComb::from(forest_arg(&right)?),
            );
            println!("{}", render_lincomb(&value, format));
        }
        Command::Coproduct { forest } => {
            let value = coproduct(&LinComb::from(forest_arg(&forest)?));
            println!("{}", render_tensor(&value, format));
        }
        Command::Antipode { forest } => {
            let value = antipode(&LinComb::from(forest_arg(&forest)?));
            println!("{}", render_lincomb(&value, format));
        }
        Command::Cuts { forest, family } => {
            let w = forest_arg(&forest)?;
            run_cuts(&w, family, format)?;
        }
        Command::Symmetrize { forest } => {
            let class = forget(&forest_arg(&forest)?);
            let value = butcher::symmetrize_class(&class);
            println!("{}", render_lincomb(&value, format));
        }
        Command::Sigma { forest } => {
            println!("{}", sigma(&forest_arg(&forest)?));
        }
        Command::Pi { forest } => {
            println!("{}", pi(&forest_arg(&forest)?));
        }
        Command::Forget { forest } => {
            let class = forget(&forest_arg(&forest)?);
            println!("{}", render_forest(class.representative(), format));
        }
        Command::SeriesCompose { alpha, beta } => {
            let value = series_arg(&alpha)?.compose(&series_arg(&beta)?)?;
            println!("{}", render_series(&value, format));
        }
        Command::SeriesExp { series } => {
            let value = series_arg(&series)?.exp()?;
            println!("{}", render_series(&value, format));
        }
        Command::SeriesLog { series } => {
            let value = series_arg(&series)?.log()?;
            println!("{}", render_series(&value, format));
        }
        Command::SeriesCheck { series } => {
            let s = series_arg(&series)?;
            let (log, exp) = (s.is_logarithmic(), s.is_exponential());
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({ "logarithmic": log, "exponential": exp })
                ),
                _ => {
                    println!("logarithmic: {log}");
                    println!("exponential: {exp}");
                }
            }
        }
        Command::Tables { max_order } => {
            print!("{}", tables::render(max_order, format));
        }
        Command::Verify { max_order } => {
            let checks = verify::run_all(max_order);
            let mut failed = 0usize;
            for check in &checks {
                if check.passed {
                    println!("ok   {}", check.name);
                } else {
                    println!("FAIL {}: {}", check.name, check.detail);
                    failed += 1;
                }
            }
            if failed > 0 {
                return Err(CliError(format!("{failed} law check(s) failed")));
            }
            println!(
                "all {} law checks passed (max order {max_order})",
                checks.len()
            );
        }
    }
    Ok(())
}

fn run_cuts(w: &Forest, family: Option<FamilyArg>, format: Format) -> Result<(), CliError> {
    // The table view unions every enumerated family; each row carries its
    // memberships.
    let mut all: Vec<Cut> = Vec::new();
    for cut in left_cuts(w)?
        .into_iter()
        .chain(full_admissible_left_cuts(w)?)
        .chain(word_cuts(w)?)
        .chain(nodal_left_cuts(w)?)
        .chain(admissible_left_cuts(w)?)
    {
        if !all.contains(&cut) {
            all.push(cut);
        }
    }
    all.sort();
    let keep = |c: &Cut| match family {
        None => true,
        Some(FamilyArg::Nlc) => c.in_nlc(),
        Some(FamilyArg::Lc) => c.in_lc(),
        Some(FamilyArg::Alc) => c.in_alc(),
        Some(FamilyArg::Falc) => c.in_falc(),
        Some(FamilyArg::Wc) => c.in_wc(),
    };
    let kinds = |c: &Cut| {
        let mut k = Vec::new();
        if c.in_nlc() {
            k.push("NLC");
        }
        if c.in_lc() {
            k.push("LC");
        }
        if c.in_alc() {
            k.push("ALC");
        }
        if c.in_falc() {
            k.push("FALC");
        }
        if c.in_wc() {
            k.push("WC");
        }
        k
    };
    match format {
        Format::Json => {
            let mut rows = Vec::new();
            for (i, cut) in all.iter().filter(|c| keep(c)).enumerate() {
                let res = apply_cut(w, cut)?;
                rows.push(serde_json::json!({
                    "index": i,
                    "kinds": kinds(cut),
                    "cut_part": res.cut_part.to_json(),
                    "remainder": res.remainder.to_string(),
                }));
            }
            println!("{}", serde_json::Value::Array(rows));
        }
        _ => {
            for (i, cut) in all.iter().filter(|c| keep(c)).enumerate() {
                let res = apply_cut(w, cut)?;
                let remainder = if res.remainder.is_empty() {
                    "1".to_string()
                } else {
                    render_forest(&res.remainder, format)
                };
                println!(
                    "{i}\t{}\t{}\t{}",
                    kinds(cut).join(","),
                    render_lincomb(&res.cut_part, format),
                    remainder,
                );
            }
        }
    }
    Ok(())
}

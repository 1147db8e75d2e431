//! Command-line surface: decomposition, growth reports, growth sweeps,
//! covering-number search, and table export/validation with machine-readable
//! output.
//!
//! Exact quantities (measures, dimensions, multiplicities) are emitted as
//! decimal strings; only growth exponents are floating point, controlled by
//! `--precision`. Sweeps stream CSV rows in deterministic (lexicographic)
//! order even when rows are computed in parallel. `REPGROWTH_THREADS` caps
//! the worker pool.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::finite_char::{self, CharacterTable, ClassFunctionCombo};
use crate::growth::{
    self, dominant_weights_up_to, growth_report, plancherel_measure, sweep_row, SWEEP_CSV_HEADER,
};
use crate::root_system::{CartanType, RootSystem, Weight};
use crate::weyl_char::Irrep;

pub const THREADS_ENV: &str = "REPGROWTH_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "repgrowth",
    about = "Exact tensor-product growth of group representations",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output file (defaults to stdout)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format where applicable
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Significant bits used when forming growth exponents (10–53)
    #[arg(long, global = true, default_value_t = growth::DEFAULT_EXPONENT_BITS)]
    precision: u32,
    /// Seed for randomized searches; recorded in the output
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct FiniteSource {
    /// Built-in table: psl2:<q> or extraspecial:<p>:<n>
    #[arg(long)]
    builtin: Option<String>,
    /// Character table JSON file
    #[arg(long)]
    table: Option<PathBuf>,
}

impl FiniteSource {
    fn resolve(&self) -> Result<CharacterTable> {
        match (&self.builtin, &self.table) {
            (Some(spec), None) => {
                finite_char::builtin(spec).with_context(|| format!("building builtin {spec:?}"))
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                CharacterTable::from_json(&text)
                    .with_context(|| format!("validating table {}", path.display()))
            }
            _ => bail!("exactly one of --builtin or --table is required"),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose a tensor product or power into irreducibles
    Decompose {
        /// Cartan type, e.g. A2 or A1xA1
        #[arg(long)]
        group: Option<String>,
        /// Highest weight "a1,a2,..." (repeat to multiply several factors)
        #[arg(long)]
        weight: Vec<String>,
        #[command(flatten)]
        finite: FiniteSource,
        /// Irreducible character indices to multiply (finite groups)
        #[arg(long)]
        chars: Option<String>,
        /// Raise the product to this power
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Growth report |χ|, |χ²|, log-ratio exponent for one irreducible
    Growth {
        #[arg(long)]
        group: String,
        #[arg(long)]
        weight: String,
    },
    /// Growth sweep over all nontrivial dominant weights with bounded coords
    Sweep {
        #[arg(long)]
        group: String,
        #[arg(long)]
        max_coord: i64,
    },
    /// Smallest N with |χ^N| = |G| (every irreducible appears)
    Cover {
        #[command(flatten)]
        finite: FiniteSource,
        /// Select the character by row index
        #[arg(long)]
        char_index: Option<usize>,
        /// Select the first character of this degree
        #[arg(long)]
        char_degree: Option<u64>,
        /// Search bound
        #[arg(long, default_value_t = 12)]
        max: u64,
    },
    /// Export a built-in (or re-export a loaded) character table as JSON
    Table {
        #[command(flatten)]
        finite: FiniteSource,
        /// Write the table here instead of --out
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Validate a character table; optionally run seeded randomized
    /// inequality checks
    Validate {
        #[command(flatten)]
        finite: FiniteSource,
        /// Also test this many random combo pairs against the measure
        /// inequalities
        #[arg(long)]
        random_pairs: Option<u64>,
    },
}

pub fn run_from_env() -> Result<()> {
    run_from(std::env::args())
}

pub fn run_from<I, T>(args: I) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    init_threads();
    if !(10..=53).contains(&cli.precision) {
        bail!("--precision must be between 10 and 53 bits");
    }
    let mut sink = open_sink(&cli.out)?;
    match &cli.command {
        Command::Decompose { .. } => run_decompose(&cli, &mut sink).context("subcommand decompose"),
        Command::Growth { .. } => run_growth(&cli, &mut sink).context("subcommand growth"),
        Command::Sweep { .. } => run_sweep(&cli, &mut sink).context("subcommand sweep"),
        Command::Cover { .. } => run_cover(&cli, &mut sink).context("subcommand cover"),
        Command::Table { .. } => run_table(&cli, &mut sink).context("subcommand table"),
        Command::Validate { .. } => run_validate(&cli, &mut sink).context("subcommand validate"),
    }?;
    sink.flush()?;
    Ok(())
}

fn init_threads() {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        if let Ok(n) = v.parse::<usize>() {
            // ignore the error if a global pool already exists
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
}

fn open_sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn parse_weight(text: &str, rank: usize) -> Result<Weight> {
    let coords: Vec<i64> = text
        .split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().with_context(|| format!("bad weight coordinate {s:?}")))
        .collect::<Result<_>>()?;
    if coords.len() != rank {
        bail!(
            "weight {text:?} has {} coordinates, expected {rank}",
            coords.len()
        );
    }
    Ok(Weight::new(coords))
}

fn parse_group(text: &str) -> Result<RootSystem> {
    let t: CartanType = text
        .parse()
        .with_context(|| format!("bad Cartan type {text:?}"))?;
    Ok(RootSystem::new(t))
}

fn big_str(x: &BigUint) -> Value {
    Value::String(x.to_string())
}

fn emit(sink: &mut dyn Write, value: &Value, format: Format) -> Result<()> {
    match format {
        Format::Json | Format::Csv => writeln!(sink, "{}", serde_json::to_string_pretty(value)?)?,
        Format::Text => writeln!(sink, "{}", text_render(value, 0))?,
    }
    Ok(())
}

fn text_render(value: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::Object(_) | Value::Array(_) => {
                    format!("{pad}{k}:\n{}", text_render(v, indent + 1))
                }
                _ => format!("{pad}{k}: {}", text_scalar(v)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Value::Array(items) => items
            .iter()
            .map(|v| match v {
                Value::Object(_) | Value::Array(_) => text_render(v, indent),
                _ => format!("{pad}{}", text_scalar(v)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => format!("{pad}{}", text_scalar(other)),
    }
}

fn text_scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn run_decompose(cli: &Cli, sink: &mut dyn Write) -> Result<()> {
    let Command::Decompose {
        group,
        weight,
        finite,
        chars,
        power,
    } = &cli.command
    else {
        unreachable!()
    };
    if let Some(group) = group {
        let system = parse_group(group)?;
        if weight.is_empty() {
            bail!("--weight is required with --group");
        }
        let weights: Vec<Weight> = weight
            .iter()
            .map(|w| parse_weight(w, system.rank()))
            .collect::<Result<_>>()?;
        let reps: Vec<Irrep> = weights
            .iter()
            .map(|w| Irrep::new(&system, w.clone()).map_err(anyhow::Error::from))
            .collect::<Result<_>>()?;
        // product of the listed factors, then the power of the whole thing
        let mut vc = crate::weyl_char::VirtualCharacter::irreducible(&system, weights[0].clone());
        for rep in &reps[1..] {
            vc = vc.tensor_irrep(rep)?;
        }
        let vc = if *power == 0 {
            crate::weyl_char::VirtualCharacter::trivial(&system)
        } else {
            let mut acc = vc.clone();
            for _ in 1..*power {
                acc = acc.tensor_virtual(&vc)?;
            }
            acc
        };
        let measure = plancherel_measure(&vc);
        let out = json!({
            "cartan_type": system.cartan_type().to_string(),
            "weights": weights.iter().map(|w| w.coords().to_vec()).collect::<Vec<_>>(),
            "power": power,
            "constituents": vc.to_json(),
            "total_dimension": big_str(&vc.total_dimension()),
            "measure": big_str(&measure),
        });
        emit(sink, &out, cli.format)
    } else {
        let table = finite.resolve()?;
        let Some(chars) = chars else {
            bail!("--chars is required with --builtin/--table");
        };
        let indices: Vec<usize> = chars
            .split([',', ' '])
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().with_context(|| format!("bad index {s:?}")))
            .collect::<Result<_>>()?;
        if indices.is_empty() {
            bail!("--chars must list at least one irreducible index");
        }
        let mut factors: Vec<ClassFunctionCombo> = Vec::new();
        for _ in 0..*power {
            for &i in &indices {
                factors.push(ClassFunctionCombo::single(&table, i)?);
            }
        }
        if factors.is_empty() {
            bail!("--power 0 with no factors is empty; nothing to decompose");
        }
        let product = table.decompose_product(&factors)?;
        let constituents: Vec<Value> = product
            .mults()
            .iter()
            .map(|(&i, m)| {
                json!({
                    "index": i,
                    "degree": table.degrees()[i].to_string(),
                    "mult": m.to_string(),
                })
            })
            .collect();
        let out = json!({
            "group": table.group_name(),
            "factors": indices,
            "power": power,
            "constituents": constituents,
            "measure": big_str(&table.plancherel_measure(&product)?),
            "multiplicity_sum": product.multiplicity_sum().to_string(),
        });
        emit(sink, &out, cli.format)
    }
}

fn run_growth(cli: &Cli, sink: &mut dyn Write) -> Result<()> {
    let Command::Growth { group, weight } = &cli.command else {
        unreachable!()
    };
    let system = parse_group(group)?;
    let lam = parse_weight(weight, system.rank())?;
    let rep = Irrep::new(&system, lam)?;
    let report = growth_report(&rep, cli.precision);
    let out = json!({
        "cartan_type": system.cartan_type().to_string(),
        "weight": rep.highest_weight().coords().to_vec(),
        "dim": big_str(&rep.dimension()),
        "measure": big_str(&report.measure),
        "measure_sq": big_str(&report.measure_sq),
        "exponent": report.exponent,
        "exponent_defined": report.exponent.is_some(),
        "constituents_sq": report.constituents_sq,
        "precision_bits": cli.precision,
    });
    emit(sink, &out, cli.format)
}

fn run_sweep(cli: &Cli, sink: &mut dyn Write) -> Result<()> {
    let Command::Sweep { group, max_coord } = &cli.command else {
        unreachable!()
    };
    if *max_coord < 1 {
        bail!("--max-coord must be ≥ 1");
    }
    let system = parse_group(group)?;
    let weights = dominant_weights_up_to(system.rank(), *max_coord);
    writeln!(sink, "{SWEEP_CSV_HEADER}")?;
    // compute in parallel chunks, write in deterministic sweep order
    for chunk in weights.chunks(64) {
        let rows: Vec<String> = chunk
            .par_iter()
            .map(|w| {
                sweep_row(&system, w.clone(), cli.precision)
                    .map(|r| r.csv_line())
                    .map_err(anyhow::Error::from)
            })
            .collect::<Result<_>>()?;
        for row in rows {
            writeln!(sink, "{row}")?;
        }
    }
    Ok(())
}

fn run_cover(cli: &Cli, sink: &mut dyn Write) -> Result<()> {
    let Command::Cover {
        finite,
        char_index,
        char_degree,
        max,
    } = &cli.command
    else {
        unreachable!()
    };
    let table = finite.resolve()?;
    let index = match (char_index, char_degree) {
        (Some(i), None) => *i,
        (None, Some(d)) => table
            .degrees()
            .iter()
            .position(|x| x.to_u64() == Some(*d))
            .with_context(|| format!("no irreducible of degree {d}"))?,
        _ => bail!("exactly one of --char-index or --char-degree is required"),
    };
    table.check_index(index)?;
    let combo = ClassFunctionCombo::single(&table, index)?;
    let n = table.covering_number(&combo, *max)?;
    let out = json!({
        "group": table.group_name(),
        "char_index": index,
        "degree": table.degrees()[index].to_string(),
        "max_n": max,
        "covering_number": n,
    });
    emit(sink, &out, cli.format)
}

fn run_table(cli: &Cli, sink: &mut dyn Write) -> Result<()> {
    let Command::Table { finite, export } = &cli.command else {
        unreachable!()
    };
    let table = finite.resolve()?;
    let text = table.to_json();
    match export {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            let note = json!({
                "group": table.group_name(),
                "order": table.order().to_string(),
                "classes": table.class_count(),
                "exported": path.display().to_string(),
            });
            emit(sink, &note, cli.format)
        }
        None => {
            writeln!(sink, "{text}")?;
            Ok(())
        }
    }
}

fn run_validate(cli: &Cli, sink: &mut dyn Write) -> Result<()> {
    let Command::Validate {
        finite,
        random_pairs,
    } = &cli.command
    else {
        unreachable!()
    };
    // resolution already runs the full exact validation
    let table = finite.resolve()?;
    let mut out = json!({
        "valid": true,
        "group": table.group_name(),
        "order": table.order().to_string(),
        "classes": table.class_count(),
        "checks": [
            "class-size-sum",
            "degree-integrality",
            "degree-square-sum",
            "row-orthogonality",
        ],
    });
    if let Some(pairs) = random_pairs {
        let seed = cli.seed.unwrap_or(0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut violations = 0u64;
        let mut strict_submeasure = 0u64;
        for _ in 0..*pairs {
            let a = finite_char::random_combo(&table, &mut rng)?;
            let b = finite_char::random_combo(&table, &mut rng)?;
            let ma = table.plancherel_measure(&a)?;
            let mb = table.plancherel_measure(&b)?;
            let sum = ClassFunctionCombo::new(
                &table,
                a.mults()
                    .iter()
                    .chain(b.mults().iter())
                    .map(|(&i, m)| (i, m.clone())),
            )?;
            if table.plancherel_measure(&sum)? > &ma + &mb {
                violations += 1;
            }
            let prod = table.decompose_product(&[a, b])?;
            let mp = table.plancherel_measure(&prod)?;
            if mp > &ma * &mb {
                violations += 1;
            }
            if mp < ma.max(mb) {
                // the open question: reducible factors shrinking the measure
                strict_submeasure += 1;
            }
        }
        out["random_pairs"] = json!({
            "pairs": pairs,
            "seed": seed,
            "inequality_violations": violations,
            "product_below_max_factor": strict_submeasure,
        });
    }
    emit(sink, &out, cli.format)
}

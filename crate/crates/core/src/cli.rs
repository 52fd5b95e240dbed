//! Command-line front end. [`run`] takes the full argument vector and
//! returns the exit code together with everything the command printed:
//! 0 on success, 1 when the library rejects the input, 2 on a usage error.
//!
//! Every subcommand renders in three formats. `plain` is for reading,
//! `csv` has a header row and comma-separated fields, `record` is one
//! `key=value` per line. Subsets inside CSV fields separate their elements
//! with `;`.

use std::error::Error;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bitstring::{dc_terms, Family};
use crate::chain::{self, Chain};
use crate::powerset::{proof2_build, proof3_table};
use crate::ratio::{rho_limit, CountingFormula};
use crate::realline::{self, Interval, RunStatus};
use crate::subset::{self, FiniteSubset, RankPair};
use crate::Rational;

type CmdResult = Result<String, Box<dyn Error>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Csv,
    Record,
}

#[derive(Debug, Parser)]
#[command(name = "diaglab", about = "Finite experiments with subsets, diagonals and proof chains")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Diagonal cover k/rows for a family of string arrays.
    Dc {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        kmax: u32,
    },
    /// Rank pair `i:j` of a finite subset given as `0,2,5`.
    Rank { elems: String },
    /// Subset with rank pair `i:j`.
    Unrank { pair: String },
    /// First N subsets in the paired order, starting with the empty set.
    Enumerate {
        #[arg(long)]
        count: u64,
    },
    /// Power-set tables over a finite universe.
    Powerset {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        proof: u8,
        /// Universe size for proofs 1 and 3.
        #[arg(long)]
        i: Option<u32>,
        /// Universe size for proof 2 (defaults to --i).
        #[arg(long)]
        m: Option<u64>,
        /// Largest cardinality for proof 2.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Limit of the ratio of two counting formulas.
    Rho {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Parse, classify or audit a proof chain.
    Chain {
        #[arg(value_enum)]
        action: ChainAction,
        text: String,
    },
    /// Rationals of [0, 1) in enumeration order.
    Q01 {
        #[arg(long)]
        count: usize,
        /// Show this many binary digits of each value.
        #[arg(long)]
        binary: Option<usize>,
    },
    /// Place queries on rows that keep a given diagonal.
    Reorder {
        #[arg(long)]
        diag: Rational,
        #[arg(long)]
        window: usize,
        /// Comma-separated rationals; may be empty.
        #[arg(long, default_value = "")]
        queries: String,
    },
    /// Nested intervals chosen from the rational enumeration.
    Nest {
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 10_000)]
        pool: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChainAction {
    Parse,
    Classify,
    Audit,
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => return (if e.use_stderr() { 2 } else { 0 }, e.render().to_string()),
    };
    match execute(cli.command, cli.format) {
        Ok(out) => (0, out),
        Err(e) => (1, format!("error: {e}\n")),
    }
}

fn execute(command: Command, fmt: OutputFormat) -> CmdResult {
    match command {
        Command::Dc { family, kmax } => dc(family, kmax, fmt),
        Command::Rank { elems } => rank(&elems, fmt),
        Command::Unrank { pair } => unrank(&pair, fmt),
        Command::Enumerate { count } => enumerate(count, fmt),
        Command::Powerset { proof, i, m, k } => powerset(proof, i, m, k, fmt),
        Command::Rho { a, b } => rho(&a, &b, fmt),
        Command::Chain { action, text } => chain_cmd(action, &text, fmt),
        Command::Q01 { count, binary } => q01(count, binary, fmt),
        Command::Reorder { diag, window, queries } => reorder(&diag, window, &queries, fmt),
        Command::Nest { steps, pool } => nest(steps, pool, fmt),
    }
}

fn semicolons(s: &FiniteSubset) -> String {
    s.to_string().replace(',', ";")
}

fn dc(family: Family, kmax: u32, fmt: OutputFormat) -> CmdResult {
    let terms = dc_terms(family, kmax);
    let mut out = String::new();
    match fmt {
        OutputFormat::Plain => {
            for t in &terms {
                writeln!(out, "{}  {}/{}  = {}", t.k, t.length, t.rows, t.cover)?;
            }
        }
        OutputFormat::Csv => {
            out.push_str("k,length,rows,numerator,denominator\n");
            for t in &terms {
                writeln!(out, "{},{},{},{},{}", t.k, t.length, t.rows, t.cover.numer(), t.cover.denom())?;
            }
        }
        OutputFormat::Record => {
            for t in &terms {
                writeln!(out, "dc.{}={}", t.k, t.cover)?;
            }
        }
    }
    Ok(out)
}

fn rank(elems: &str, fmt: OutputFormat) -> CmdResult {
    let s: FiniteSubset = elems.parse()?;
    let p = subset::rank(&s)?;
    Ok(match fmt {
        OutputFormat::Plain => format!("{p}\n"),
        OutputFormat::Csv => format!("cardinality,index\n{},{}\n", p.cardinality, p.index),
        OutputFormat::Record => format!("cardinality={}\nindex={}\n", p.cardinality, p.index),
    })
}

fn unrank(pair: &str, fmt: OutputFormat) -> CmdResult {
    let p: RankPair = pair.parse()?;
    let s = subset::unrank(&p)?;
    Ok(match fmt {
        OutputFormat::Plain => format!("{}\n", s.braced()),
        OutputFormat::Csv => format!("cardinality,index,subset\n{},{},{}\n", p.cardinality, p.index, semicolons(&s)),
        OutputFormat::Record => format!("cardinality={}\nindex={}\nsubset={s}\n", p.cardinality, p.index),
    })
}

fn enumerate(count: u64, fmt: OutputFormat) -> CmdResult {
    let mut out = String::new();
    if fmt == OutputFormat::Csv {
        out.push_str("position,subset\n");
    }
    for (n, s) in subset::enumerate(count).iter().enumerate() {
        match fmt {
            OutputFormat::Plain => writeln!(out, "{n} → {}", s.braced())?,
            OutputFormat::Csv => writeln!(out, "{n},{}", semicolons(s))?,
            OutputFormat::Record => writeln!(out, "subset.{n}={s}")?,
        }
    }
    Ok(out)
}

fn listing(entries: &[FiniteSubset], fmt: OutputFormat) -> String {
    let mut out = String::new();
    if fmt == OutputFormat::Csv {
        out.push_str("index,subset\n");
    }
    for (n, s) in entries.iter().enumerate() {
        let _ = match fmt {
            OutputFormat::Plain => writeln!(out, "{n} → {}", s.braced()),
            OutputFormat::Csv => writeln!(out, "{n},{}", semicolons(s)),
            OutputFormat::Record => writeln!(out, "entry.{n}={s}"),
        };
    }
    out
}

fn powerset(proof: u8, i: Option<u32>, m: Option<u64>, k: Option<usize>, fmt: OutputFormat) -> CmdResult {
    match proof {
        1 => {
            let i = i.ok_or("proof 1 needs --i")?;
            let mut ranked = proof3_table(i)?
                .entries()
                .iter()
                .skip(1)
                .map(|s| Ok((subset::rank(s)?, s.clone())))
                .collect::<Result<Vec<_>, subset::SubsetError>>()?;
            ranked.sort_by(|(a, _), (b, _)| (a.cardinality, &a.index).cmp(&(b.cardinality, &b.index)));
            let mut out = String::new();
            if fmt == OutputFormat::Csv {
                out.push_str("cardinality,index,subset\n");
            }
            for (p, s) in &ranked {
                match fmt {
                    OutputFormat::Plain => writeln!(out, "{p} → {}", s.braced())?,
                    OutputFormat::Csv => writeln!(out, "{},{},{}", p.cardinality, p.index, semicolons(s))?,
                    OutputFormat::Record => writeln!(out, "rank.{p}={s}")?,
                }
            }
            Ok(out)
        }
        2 => {
            let k = k.ok_or("proof 2 needs --k")?;
            let m = m.or(i.map(u64::from)).ok_or("proof 2 needs --m")?;
            let built: Vec<FiniteSubset> = proof2_build(k, m)?.into_iter().collect();
            Ok(listing(&built, fmt))
        }
        _ => {
            let i = i.ok_or("proof 3 needs --i")?;
            Ok(listing(proof3_table(i)?.entries(), fmt))
        }
    }
}

fn rho(a: &str, b: &str, fmt: OutputFormat) -> CmdResult {
    let fa: CountingFormula = a.parse()?;
    let fb: CountingFormula = b.parse()?;
    let report = rho_limit(&fa, &fb)?;
    let mut out = String::new();
    match fmt {
        OutputFormat::Plain => {
            for (n, q) in &report.samples {
                writeln!(out, "{n}  {q}")?;
            }
            writeln!(out, "limit {} ({})", report.classification, report.method)?;
        }
        OutputFormat::Csv => out = report.to_csv(),
        OutputFormat::Record => {
            writeln!(out, "a={fa}\nb={fb}")?;
            writeln!(out, "classification={}\nmethod={}", report.classification, report.method)?;
            if let Some((n, q)) = report.samples.last() {
                writeln!(out, "last.n={n}\nlast.ratio={q}")?;
            }
        }
    }
    Ok(out)
}

fn chain_cmd(action: ChainAction, text: &str, fmt: OutputFormat) -> CmdResult {
    let c: Chain = text.parse()?;
    Ok(match action {
        ChainAction::Parse => chain_parse(&c, fmt),
        ChainAction::Classify => {
            let v = chain::classify(&c);
            match fmt {
                OutputFormat::Record => v.to_record(),
                OutputFormat::Csv => verdict_csv(&v),
                OutputFormat::Plain => verdict_plain(&v),
            }
        }
        ChainAction::Audit => {
            let a = chain::audit(&c);
            match fmt {
                OutputFormat::Record => a.to_record(),
                OutputFormat::Csv => {
                    let mut out = format!("audit,{}\n", if a.pass { "pass" } else { "fail" });
                    out.push_str(&verdict_csv(&a.verdict));
                    for n in &a.notes {
                        out.push_str(&format!("note,{n}\n"));
                    }
                    out
                }
                OutputFormat::Plain => {
                    let mut out = format!("audit: {}\n", if a.pass { "pass" } else { "fail" });
                    out.push_str(&verdict_plain(&a.verdict));
                    for n in &a.notes {
                        out.push_str(&format!("note: {n}\n"));
                    }
                    out
                }
            }
        }
    })
}

fn chain_parse(c: &Chain, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Plain => format!("{c}\n"),
        OutputFormat::Record => format!(
            "chain={c}\nnodes={}\nstart={}\nterminal={}\n",
            c.nodes().len(),
            c.start(),
            c.terminal()
        ),
        OutputFormat::Csv => {
            let mut out = String::from("position,node,link\n");
            for (n, node) in c.nodes().iter().enumerate() {
                let link = c.links().get(n).map(ToString::to_string).unwrap_or_default();
                out.push_str(&format!("{n},{node},{link}\n"));
            }
            out
        }
    }
}

/// Two-column `field,value` rows; a field may repeat.
fn verdict_csv(v: &chain::Verdict) -> String {
    let mut out = format!("kind,{}\n", v.kind);
    for f in &v.flagged {
        out.push_str(&format!("flag,{} {}\n", f.statement, f.reason));
    }
    for w in &v.warnings {
        out.push_str(&format!("warning,{w}\n"));
    }
    out
}

fn verdict_plain(v: &chain::Verdict) -> String {
    let mut out = format!("verdict: {}\n", v.kind);
    if !v.flagged.is_empty() {
        out.push_str(&format!("flags: {}\n", v.flagged_names().join(",")));
    }
    for f in &v.flagged {
        out.push_str(&format!("  {}: {}\n", f.statement, f.reason));
    }
    for w in &v.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out
}

fn q01(count: usize, binary: Option<usize>, fmt: OutputFormat) -> CmdResult {
    let values = realline::q01_list(count);
    let mut out = String::new();
    match (fmt, binary) {
        (OutputFormat::Plain, Some(d)) => out = realline::expansion_table(&values, d)?,
        (OutputFormat::Plain, None) => {
            for q in &values {
                writeln!(out, "{q}")?;
            }
        }
        (OutputFormat::Csv, _) => {
            out.push_str(if binary.is_some() {
                "index,numerator,denominator,binary\n"
            } else {
                "index,numerator,denominator\n"
            });
            for (n, q) in values.iter().enumerate() {
                write!(out, "{n},{},{}", q.numer(), q.denom())?;
                if let Some(d) = binary {
                    write!(out, ",{}", realline::to_binary(q, d)?)?;
                }
                out.push('\n');
            }
        }
        (OutputFormat::Record, _) => {
            for (n, q) in values.iter().enumerate() {
                writeln!(out, "q.{n}={q}")?;
                if let Some(d) = binary {
                    writeln!(out, "binary.{n}=0.{}", realline::to_binary(q, d)?)?;
                }
            }
        }
    }
    Ok(out)
}

fn parse_rationals(list: &str) -> Result<Vec<Rational>, Box<dyn Error>> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Rational>().map_err(|_| format!("not a rational: {t:?}").into()))
        .collect()
}

fn reorder(diag: &Rational, window: usize, queries: &str, fmt: OutputFormat) -> CmdResult {
    let queries = parse_rationals(queries)?;
    let r = realline::reorder_demo(diag, window, &queries)?;
    let anti_value = r
        .antidiagonal_value
        .as_ref()
        .map_or_else(|| "none".to_string(), ToString::to_string);
    let rows = |v: &[usize], sep: &str| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep);
    let mut out = String::new();
    match fmt {
        OutputFormat::Plain => {
            writeln!(out, "diagonal      0.{}", r.diagonal)?;
            writeln!(out, "antidiagonal  0.{} ({anti_value}, never placed)", r.antidiagonal)?;
            for (q, row) in &r.placements {
                writeln!(out, "place    {q} -> row {row}")?;
            }
            for q in &r.excluded {
                writeln!(out, "exclude  {q}")?;
            }
            writeln!(
                out,
                "cover    queries [{}] rows [{}]",
                rows(&r.certificate.queries, ", "),
                rows(&r.certificate.rows, ", ")
            )?;
        }
        OutputFormat::Csv => {
            out.push_str("query,row\n");
            for (q, row) in &r.placements {
                writeln!(out, "{q},{row}")?;
            }
            for q in &r.excluded {
                writeln!(out, "{q},-")?;
            }
        }
        OutputFormat::Record => {
            writeln!(out, "diagonal=0.{}\nantidiagonal=0.{}", r.diagonal, r.antidiagonal)?;
            writeln!(out, "antidiagonal.value={anti_value}")?;
            for (q, row) in &r.placements {
                writeln!(out, "place.{q}={row}")?;
            }
            for q in &r.excluded {
                writeln!(out, "exclude={q}")?;
            }
            writeln!(out, "cover.queries={}", rows(&r.certificate.queries, ","))?;
            writeln!(out, "cover.rows={}", rows(&r.certificate.rows, ","))?;
        }
    }
    Ok(out)
}

fn nest(steps: usize, pool: usize, fmt: OutputFormat) -> CmdResult {
    let run = realline::nested_intervals(&realline::q01_list(pool), Interval::unit(), steps);
    let status = match run.status {
        RunStatus::Completed => "completed",
        RunStatus::Exhausted => "exhausted",
    };
    let mut out = String::new();
    match fmt {
        OutputFormat::Csv => out = run.to_csv(),
        OutputFormat::Plain => {
            for (n, iv) in run.intervals.iter().enumerate().skip(1) {
                writeln!(out, "{n}  {iv}  width {}", iv.width())?;
            }
            writeln!(out, "{status} after {} steps", run.steps())?;
        }
        OutputFormat::Record => {
            writeln!(out, "steps={}\nstatus={status}", run.steps())?;
            for (n, (a, b)) in run.picks.iter().enumerate() {
                writeln!(out, "step.{}={a},{b}", n + 1)?;
            }
        }
    }
    Ok(out)
}

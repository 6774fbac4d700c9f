//! Subcommands. Each returns the text to print on standard output.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbifold_core::action::{covering_check, quotient_of_manifold};
use orbifold_core::corpus;
use orbifold_core::strata::{strata_poset, stratify};
use orbifold_core::verify::{self, VerificationReport, VerifyError};
use orbifold_core::OrbifoldComplex;

use crate::document::{ActionDocument, OrbifoldDocument};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "orbifold", version, about = "Exact Euler characteristics and strata of triangulated orbifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the orbifold Euler characteristic as p/q.
    Chi { input: PathBuf },
    /// Check χ(O) = ½χ(∂O) and related identities.
    Verify {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Theorem)]
        mode: Mode,
    },
    /// List strata, the Hasse diagram of the closure order and its complete chains.
    Stratify {
        input: PathBuf,
        /// Include the regular stratum in the chains.
        #[arg(long)]
        include_regular: bool,
    },
    /// Write the quotient of a manifold by a finite group action.
    Quotient { action: PathBuf, output: PathBuf },
    /// List or export built-in examples.
    Corpus(CorpusArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Theorem,
    Satake,
    Decompose,
    All,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CorpusArgs {
    /// Print every entry with its expected Euler characteristic.
    #[arg(long)]
    list: bool,
    /// Write the named entry's documents into a directory.
    #[arg(long, num_args = 2, value_names = ["NAME", "DIR"])]
    emit: Option<Vec<String>>,
}

pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Chi { input } => cmd_chi(&input),
        Command::Verify { input, mode } => cmd_verify(&input, mode),
        Command::Stratify { input, include_regular } => cmd_stratify(&input, include_regular),
        Command::Quotient { action, output } => cmd_quotient(&action, &output),
        Command::Corpus(args) => match args.emit {
            Some(v) => cmd_corpus_emit(&v[0], Path::new(&v[1])),
            None => Ok(cmd_corpus_list()),
        },
    }
}

fn load(path: &Path) -> Result<OrbifoldComplex, CliError> {
    OrbifoldDocument::read(path)?.to_orbifold()
}

pub fn cmd_chi(input: &Path) -> Result<String, CliError> {
    let o = load(input)?;
    Ok(format!("{}\n", o.cell_sum()))
}

pub fn cmd_verify(input: &Path, mode: Mode) -> Result<String, CliError> {
    let o = load(input)?;
    let mut out = String::new();
    let mut failed = 0;
    let mut push = |report: VerificationReport, out: &mut String| {
        if let Some(ledger) = &report.ledger {
            out.push_str("ledger:\n");
            for step in ledger {
                let _ = writeln!(out, "  {step}");
            }
            failed += ledger.iter().filter(|s| !s.pass()).count();
        }
        for c in &report.checks {
            let _ = writeln!(out, "{c}");
        }
        failed += report.checks.iter().filter(|c| !c.pass).count();
    };
    match mode {
        Mode::Theorem => push(verify::check_main_theorem(&o)?, &mut out),
        Mode::Satake => push(verify::check_satake(&o)?, &mut out),
        Mode::Decompose => push(verify::prove_by_decomposition(&o)?, &mut out),
        Mode::All => {
            push(verify::check_main_theorem(&o)?, &mut out);
            match verify::check_satake(&o) {
                Ok(r) => push(r, &mut out),
                Err(VerifyError::HasBoundary) => out.push_str("satake: skipped (non-empty boundary)\n"),
                Err(e) => return Err(e.into()),
            }
            push(verify::prove_by_decomposition(&o)?, &mut out);
        }
    }
    if failed == 0 {
        Ok(out)
    } else {
        Err(CliError::ChecksFailed { report: out, failed })
    }
}

pub fn cmd_stratify(input: &Path, include_regular: bool) -> Result<String, CliError> {
    let o = load(input)?;
    let strata = stratify(&o).map_err(|e| CliError::Precondition(e.to_string()))?;
    let poset = strata_poset(&o, strata).map_err(|e| CliError::Precondition(e.to_string()))?;
    let minimal = poset.minimal_strata();
    let mut out = String::new();
    let singular = poset.strata.iter().filter(|s| s.is_singular()).count();
    let _ = writeln!(out, "strata: {} ({singular} singular)", poset.len());
    for s in &poset.strata {
        let _ = writeln!(
            out,
            "stratum {}: dim={} order={} kind={} cells={} minimal={}",
            s.id,
            s.dim,
            s.label.order(),
            s.label.kind(),
            s.cells.len(),
            if minimal.contains(&s.id) { "yes" } else { "no" }
        );
    }
    for (a, b) in &poset.hasse {
        let _ = writeln!(out, "hasse: {a} < {b}");
    }
    let chains = poset.complete_chains(!include_regular);
    let scope = if include_regular { "all" } else { "singular" };
    let _ = writeln!(out, "chains ({scope}): {}", chains.len());
    for c in chains {
        let ids: Vec<String> = c.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "chain: {}", ids.join(" < "));
    }
    Ok(out)
}

pub fn cmd_quotient(action: &Path, output: &Path) -> Result<String, CliError> {
    let a = ActionDocument::read(action)?;
    let q = quotient_of_manifold(&a)?;
    let c = covering_check(&a)?;
    let mut doc = OrbifoldDocument::from_orbifold(&q);
    doc.metadata.insert("provenance".into(), "quotient".into());
    doc.metadata.insert("group_order".into(), c.group_order.to_string());
    std::fs::write(output, doc.to_json()).map_err(|e| CliError::Write(format!("{}: {e}", output.display())))?;
    let status = if c.holds { "PASS" } else { "FAIL" };
    let report = format!(
        "group order: {}\nchi(M): {}\nchi(M/G): {}\nmultiplicativity: {} = {} * {} {status}\n",
        c.group_order, c.chi_manifold, c.chi_quotient, c.chi_manifold, c.group_order, c.chi_quotient
    );
    if c.holds {
        Ok(report)
    } else {
        Err(CliError::ChecksFailed { report, failed: 1 })
    }
}

pub fn cmd_corpus_list() -> String {
    let mut out = String::new();
    for e in corpus::all_entries() {
        let (chi, source) = match &e.expected_chi {
            Some((chi, source)) => (chi.to_string(), source.to_string()),
            None => ("-".into(), "-".into()),
        };
        let dim = e.dim().map_or("-".into(), |d| d.to_string());
        let _ = writeln!(out, "{} {chi} dim={dim} {} {source}", e.name, e.provenance.tag());
    }
    out
}

pub fn cmd_corpus_emit(name: &str, dir: &Path) -> Result<String, CliError> {
    let e = corpus::entry(name)?;
    let write = |file: PathBuf, text: String| -> Result<String, CliError> {
        std::fs::write(&file, text).map_err(|err| CliError::Write(format!("{}: {err}", file.display())))?;
        Ok(format!("wrote {}\n", file.display()))
    };
    std::fs::create_dir_all(dir).map_err(|err| CliError::Write(format!("{}: {err}", dir.display())))?;
    let mut out = write(dir.join(format!("{name}.json")), OrbifoldDocument::from_entry(&e).to_json())?;
    if let Some(a) = e.action() {
        out += &write(dir.join(format!("{name}.action.json")), ActionDocument::from_action(a).to_json())?;
    }
    Ok(out)
}

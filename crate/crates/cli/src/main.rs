use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use locmod::dsl::{self, Elaborated};
use locmod::obstruct::pair_diagnostics;
use locmod::report::{emit_reports, Format};
use locmod::{catalog, catalog_get, CriterionId, RelativeComplex, Subspace};

#[derive(Parser)]
#[command(name = "locmod", version, about = "Obstructions to compact manifolds locally modelled on G/H")]
struct Cli {
    /// Worker threads for the criteria (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the check directives of a model file or catalog entry.
    Check {
        /// Path to a model file, or a catalog entry name.
        input: String,
        #[arg(long)]
        json: bool,
        /// Comma-separated criterion ids, replacing each directive's selection.
        #[arg(long, value_delimiter = ',', conflicts_with = "all")]
        criteria: Vec<String>,
        /// Run every criterion regardless of the directives.
        #[arg(long)]
        all: bool,
    },
    /// Dimensions, classification and relative Betti numbers.
    Info { input: String },
    /// Print a model file in canonical form.
    Fmt { input: String },
    /// Built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    /// Print the model file of an entry.
    Show { name: String },
}

fn source(input: &str) -> Result<(String, String)> {
    let path = Path::new(input);
    if path.exists() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        return Ok((input.to_string(), text));
    }
    match catalog_get(input) {
        Ok(e) => Ok((format!("catalog:{}", e.name), e.source.to_string())),
        Err(err) => bail!("{input}: no such file, and {err}"),
    }
}

fn load(input: &str) -> Result<Elaborated> {
    let (origin, text) = source(input)?;
    let doc = dsl::parse(&text).map_err(|e| anyhow::anyhow!("{origin}:{e}"))?;
    dsl::elaborate(&doc).map_err(|e| anyhow::anyhow!("{origin}:{e}"))
}

fn check(input: &str, json: bool, criteria: &[String], all: bool) -> Result<String> {
    let mut doc = load(input)?;
    let ids: Option<Vec<CriterionId>> = if all {
        Some(CriterionId::ALL.to_vec())
    } else if criteria.is_empty() {
        None
    } else {
        Some(criteria.iter().map(|c| c.trim().parse::<CriterionId>()).collect::<Result<_, _>>()?)
    };
    if let Some(ids) = ids {
        doc.checks.iter_mut().for_each(|j| j.criteria = ids.clone());
    }
    if doc.checks.is_empty() {
        bail!("{input}: no check directives");
    }
    let reports = dsl::run_document(&doc);
    Ok(emit_reports(&reports, if json { Format::Json } else { Format::Human }))
}

fn betti_table(complex: &RelativeComplex) -> String {
    let betti = complex.betti_numbers();
    let head: Vec<String> = (0..betti.len()).map(|p| format!("{p:>3}")).collect();
    let dims: Vec<String> = (0..betti.len()).map(|p| format!("{:>3}", complex.cochain_dim(p))).collect();
    let vals: Vec<String> = betti.iter().map(|b| format!("{b:>3}")).collect();
    format!("  p      {}\n  dim C  {}\n  b_p    {}\n", head.join(""), dims.join(""), vals.join(""))
}

fn info(input: &str) -> Result<String> {
    let doc = load(input)?;
    let mut out = String::new();
    let mut pairs: Vec<(String, String, Subspace)> = Vec::new();
    for job in &doc.checks {
        pairs.push((job.algebra.clone(), job.subalgebra.clone(), job.h.clone()));
    }
    if pairs.is_empty() {
        for (name, g) in &doc.algebras {
            pairs.push((name.clone(), "0".into(), Subspace::zero(g.dim())));
        }
    }
    pairs.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
    for (name, sub, h) in pairs {
        let g = doc.algebra(&name).expect("elaborated");
        let d = pair_diagnostics(g, &h);
        out.push_str(&format!("{name} / {sub}\n"));
        out.push_str(&format!("  basis           {}\n", g.labels().join(" ")));
        out.push_str(&format!("  dim g, dim h, N {}, {}, {}\n", g.dim(), h.dim(), h.codim()));
        out.push_str(&format!("  classification  {}\n", d["classification"]));
        if let Some(n) = d.get("normalizer") {
            out.push_str(&format!("  normalizer      {n}\n"));
        }
        out.push_str(&betti_table(&RelativeComplex::new(g, &h)));
    }
    Ok(out)
}

fn fmt(input: &str) -> Result<String> {
    let (origin, text) = source(input)?;
    let doc = dsl::parse(&text).map_err(|e| anyhow::anyhow!("{origin}:{e}"))?;
    Ok(doc.to_string())
}

fn catalog_list() -> String {
    let mut out = String::new();
    for e in catalog() {
        let firing: Vec<&str> = e.firing.iter().map(|c| c.as_str()).collect();
        let fired = if firing.is_empty() { String::new() } else { format!("({})", firing.join(", ")) };
        let compact = if e.compact_form_known { "  [compact form known]" } else { "" };
        out.push_str(&format!("{:<16}{} {}{}\n    {}\n", e.name, e.expected, fired, compact, e.provenance));
    }
    out
}

fn run(cli: Cli) -> Result<String> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring threads")?;
    }
    match cli.command {
        Command::Check { input, json, criteria, all } => check(&input, json, &criteria, all),
        Command::Info { input } => info(&input),
        Command::Fmt { input } => fmt(&input),
        Command::Catalog { action: CatalogAction::List } => Ok(catalog_list()),
        Command::Catalog { action: CatalogAction::Show { name } } => Ok(catalog_get(&name)?.source.to_string()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

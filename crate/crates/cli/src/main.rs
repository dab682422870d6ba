use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;

use clasp_cli::export::{export_text, report_json};
use clasp_cli::pipeline::{run_pipeline, Report, RunOptions, DEFAULT_SEED, DEFAULT_TRIALS};
use clasp_cli::svg::{braid_svg, spine_svg};
use clasp_core::braid::parse_braid;
use clasp_core::seifert::eps_tuple;
use clasp_core::TorusPoint;

/// Computes a C-complex for the closure of a colored braid, its generalized
/// Seifert matrices, the Conway potential function, the multivariable
/// Alexander polynomial, and signatures/nullities.
#[derive(Parser, Debug)]
#[command(name = "clasp", version, about)]
struct Cli {
    /// Braid word as a comma-separated list of nonzero integers, e.g.
    /// "[-2,-3,2,-3,-1,-2,-3]"
    #[arg(long)]
    word: String,

    /// Number of strands
    #[arg(long)]
    strands: usize,

    /// Color of the strand starting at each position, bottom to top, e.g.
    /// "0,1,2,0"; values are renumbered by first appearance
    #[arg(long)]
    colors: String,

    /// Force every two colored surfaces to intersect, enabling the
    /// Alexander-module presentation matrix and the text export
    #[arg(long)]
    pairwise: bool,

    /// Number of random color permutations tried when minimizing the
    /// homology rank
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,

    /// Seed for the drag-order search
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Torus point for signature/nullity, as comma-separated turn fractions
    /// in (0,1), decimals or rationals: "1/3,0.25"
    #[arg(long)]
    omega: Option<String>,

    /// Write the presentation matrix and Seifert family to this file
    /// (requires --pairwise)
    #[arg(long, value_name = "PATH")]
    export: Option<PathBuf>,

    /// Write an SVG of the braid diagram
    #[arg(long, value_name = "PATH")]
    svg_braid: Option<PathBuf>,

    /// Write an SVG of the spine schematic
    #[arg(long, value_name = "PATH")]
    svg_spine: Option<PathBuf>,

    /// Write the full report as JSON
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

fn parse_turn_fractions(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            if let Some((num, den)) = tok.split_once('/') {
                let num: f64 = num.trim().parse().context("bad fraction numerator")?;
                let den: f64 = den.trim().parse().context("bad fraction denominator")?;
                if den == 0.0 {
                    bail!("zero denominator in {tok:?}");
                }
                Ok(num / den)
            } else {
                tok.parse::<f64>().with_context(|| format!("bad number {tok:?}"))
            }
        })
        .collect()
}

fn print_report(report: &Report) {
    println!("braid: {} strands, word {:?}", report.braid.strands, report.braid.word);
    println!(
        "colors (by starting position): {:?}  (mu = {})",
        report.braid.colors, report.braid.mu
    );
    println!("drag order: {:?}", report.drag_order.order());
    println!(
        "spine: {} disks, {} edges, homology rank {}",
        report.spine.vertex_count(),
        report.spine.edge_count(),
        report.spine.rank()
    );
    println!("complex sign: {:+}", report.complex_sign);
    println!();
    println!("Conway potential: {}", report.conway);
    println!("Alexander polynomial (up to units): {}", report.alexander);
    if let Some(presentation) = &report.presentation {
        println!();
        println!("presentation matrix of the Alexander module:");
        for row in presentation {
            let entries: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            println!("  [{}]", entries.join(", "));
        }
    }
    println!();
    println!("generalized Seifert matrices:");
    for (index, matrix) in report.family.matrices.iter().enumerate() {
        let eps = eps_tuple(index, report.family.mu);
        let rows: Vec<String> = matrix
            .iter()
            .map(|row| {
                let entries: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                format!("[{}]", entries.join(", "))
            })
            .collect();
        println!("  {:?}: [{}]", eps, rows.join(", "));
    }
    if let Some((point, result)) = &report.signature {
        println!();
        println!("signature at theta = {:?}:", point.theta());
        println!("  signature = {}", result.signature);
        println!("  nullity   = {}", result.nullity);
        println!("  eigenvalues = {:?}", result.eigenvalues);
    }
}

fn run(cli: Cli) -> Result<()> {
    let braid = parse_braid(&cli.word, cli.strands, &cli.colors)?;
    let omega = match &cli.omega {
        Some(text) => {
            let theta = parse_turn_fractions(text)?;
            if theta.len() != braid.mu {
                bail!(
                    "--omega needs {} coordinates (one per color), got {}",
                    braid.mu,
                    theta.len()
                );
            }
            Some(TorusPoint::new(theta)?)
        }
        None => None,
    };
    if cli.export.is_some() && !cli.pairwise {
        bail!("--export requires --pairwise (the presentation matrix needs intersecting surfaces)");
    }

    let mut options = RunOptions::new(braid);
    options.pairwise = cli.pairwise;
    options.trials = cli.trials.max(1);
    options.seed = cli.seed;
    options.omega = omega;

    let report = run_pipeline(&options)?;
    print_report(&report);

    if let Some(path) = &cli.export {
        let text = export_text(&report)?;
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        println!("\nwrote export to {}", path.display());
    }
    if let Some(path) = &cli.json {
        let value = report_json(&report);
        let mut text = serde_json::to_string_pretty(&value)?;
        text.push('\n');
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        println!("wrote JSON report to {}", path.display());
    }
    if let Some(path) = &cli.svg_braid {
        std::fs::write(path, braid_svg(&report.braid))
            .with_context(|| format!("writing {}", path.display()))?;
        println!("wrote braid diagram to {}", path.display());
    }
    if let Some(path) = &cli.svg_spine {
        std::fs::write(path, spine_svg(&report.spine))
            .with_context(|| format!("writing {}", path.display()))?;
        println!("wrote spine schematic to {}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

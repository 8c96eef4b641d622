//! Command-line interface: crystal generation and export, longitude and
//! parity checks, and the operator relation suites.
//!
//! Exit codes: 0 full pass, 1 verification failure, 2 input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use pmc_core::dynkin::{DynkinGraph, WeightVec};
use pmc_core::gklo::{verify_lemma_filgklo, verify_relations, YangianData};
use pmc_core::gt::{classify_gt, fd_top_row, gt_pattern_count, partition_mu_dictionary, GtInput};
use pmc_core::klr::{cross_check_flagya, verify_ya_relations};
use pmc_core::monomial::{
    check_closure, crystal_to_dot, crystal_to_json, generate_product_crystal, node_label,
};
use pmc_core::multiset::{MultisetCollection, ParamSet};
use pmc_core::poly::{Poly, Var};
use pmc_core::report::{self, RelationReport};
use pmc_core::strands::{idempotent_from_s, verify_compat_long, LongMode, LongitudeTriple};
use pmc_core::tensor::check_embeddings;

#[derive(Parser)]
#[command(
    name = "pmc",
    version,
    about = "Product monomial crystals and shifted-Yangian verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Product monomial crystal operations
    Crystal {
        #[command(subcommand)]
        command: CrystalCmd,
    },
    /// Strand-sequence and longitude combinatorics
    Longitude {
        #[command(subcommand)]
        command: LongitudeCmd,
    },
    /// GKLO representation of the shifted Yangian
    Gklo {
        #[command(subcommand)]
        command: GkloCmd,
    },
    /// Cylindrical KLR algebra suites
    Ya {
        #[command(subcommand)]
        command: YaCmd,
    },
    /// Gelfand-Tsetlin classification
    Gt {
        #[command(subcommand)]
        command: GtCmd,
    },
}

#[derive(Args)]
struct GraphParams {
    /// JSON graph description: vertices with parity, edge list, order list
    #[arg(long)]
    graph: PathBuf,
    /// JSON parameter multisets, e.g. {"1": [-1], "2": [2]}
    #[arg(long = "params", alias = "r")]
    params: PathBuf,
}

impl GraphParams {
    fn load(&self) -> Result<(DynkinGraph, ParamSet)> {
        let gtext = fs::read_to_string(&self.graph)
            .with_context(|| format!("reading {}", self.graph.display()))?;
        let g = DynkinGraph::from_json(&gtext)?;
        let rtext = fs::read_to_string(&self.params)
            .with_context(|| format!("reading {}", self.params.display()))?;
        let r = ParamSet::from_json(&rtext)?;
        r.validate(&g)?;
        Ok((g, r))
    }
}

#[derive(Subcommand)]
enum CrystalCmd {
    /// Generate B(R) and export it
    Gen {
        #[command(flatten)]
        gp: GraphParams,
        /// DOT output path
        #[arg(long)]
        dot: Option<PathBuf>,
        /// JSON output path
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        depth_limit: Option<usize>,
    },
    /// List highest-weight elements and the weight support at mu
    Hw {
        #[command(flatten)]
        gp: GraphParams,
        /// weight in the fundamental basis, e.g. "1=1,2=0"
        #[arg(long)]
        mu: String,
    },
    /// Check the embedding chain B(lambda) ⊆ B(R) ⊆ tensor of fundamentals
    Embed {
        #[command(flatten)]
        gp: GraphParams,
    },
}

#[derive(Subcommand)]
enum LongitudeCmd {
    /// Check a longitude triple in metric or coarse mode
    Check {
        #[command(flatten)]
        gp: GraphParams,
        /// black strand labels, comma separated
        #[arg(long)]
        blacks: String,
        /// black strand longitudes, comma separated
        #[arg(long, allow_hyphen_values = true)]
        longs: String,
        /// red positions kappa, comma separated
        #[arg(long)]
        kappa: String,
        #[arg(long, default_value = "metric")]
        mode: String,
    },
    /// Exhaustively compare metric-longitude existence with the parity test
    VerifyCompat {
        #[command(flatten)]
        gp: GraphParams,
        #[arg(long, default_value_t = 4)]
        max_blacks: usize,
    },
}

#[derive(Subcommand)]
enum GkloCmd {
    /// Verify the shifted-Yangian relations in the GKLO representation
    Verify {
        #[command(flatten)]
        gp: GraphParams,
        /// mu in the fundamental basis, e.g. "1=0,2=-1"
        #[arg(long)]
        mu: Option<String>,
        /// multiplicities m_i, e.g. "1=1,2=1" (alternative to --mu)
        #[arg(long)]
        m: Option<String>,
        /// lambda, validated against the parameter set when given
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, default_value_t = 3)]
        order: usize,
        #[arg(long, default_value_t = 4)]
        degree: u32,
        /// JSON report output path
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Verify the two operator forms of the auxiliary lemma
    Lemma {
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        c_degree: u32,
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
}

#[derive(Subcommand)]
enum YaCmd {
    /// Verify the cylindrical KLR relations on all short sequences
    Verify {
        #[command(flatten)]
        gp: GraphParams,
        /// maximal strand count
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 4)]
        degree: u32,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Compare wrapping elements with the GKLO operators
    Crosscheck {
        #[command(flatten)]
        gp: GraphParams,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, default_value_t = 3)]
        rmax: usize,
        #[arg(long, default_value_t = 4)]
        degree: u32,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GtCmd {
    /// Classify simple modules at the class weight through padding
    Classify {
        #[arg(long = "N")]
        n_boxes: u64,
        /// number of levels n (defaults to the partition length)
        #[arg(long, default_value_t = 0)]
        levels: usize,
        /// partition, weakly increasing, e.g. "1,1,1"
        #[arg(long)]
        partition: String,
        /// central character roots, e.g. "0,2,4"
        #[arg(long = "R", alias = "central", allow_hyphen_values = true)]
        central: String,
        #[arg(long)]
        padding: Option<usize>,
    },
    /// Count interlacing patterns for a top row
    Count {
        /// weakly decreasing top row, e.g. "2,1,0"
        #[arg(long)]
        top_row: String,
    },
}

fn parse_i64_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| anyhow!("bad integer {t:?}: {e}"))
        })
        .collect()
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| anyhow!("bad index {t:?}: {e}"))
        })
        .collect()
}

/// "1=-1,2=0" -> WeightVec
fn parse_weight(s: &str) -> Result<WeightVec> {
    let mut w = WeightVec::zero();
    for part in s.split(',').filter(|t| !t.trim().is_empty()) {
        let (v, c) = part
            .split_once('=')
            .ok_or_else(|| anyhow!("expected vertex=coefficient, got {part:?}"))?;
        w.add_coeff(v.trim().parse()?, c.trim().parse()?);
    }
    Ok(w)
}

fn yangian_data(
    g: &DynkinGraph,
    r: &ParamSet,
    mu: &Option<String>,
    m: &Option<String>,
    lambda: &Option<String>,
) -> Result<YangianData> {
    if let Some(lam) = lambda {
        let lam = parse_weight(lam)?;
        if lam != r.weight() {
            bail!("--lambda disagrees with the parameter multiset cardinalities");
        }
    }
    let d = match (mu, m) {
        (Some(mu), None) => YangianData::from_mu(g, r, &parse_weight(mu)?)?,
        (None, Some(m)) => {
            let w = parse_weight(m)?;
            let mv: Vec<(usize, usize)> = w
                .iter()
                .map(|(i, c)| {
                    if c < 0 {
                        Err(anyhow!("multiplicity m_{i} = {c} is negative"))
                    } else {
                        Ok((i, c as usize))
                    }
                })
                .collect::<Result<_>>()?;
            YangianData::new(g, r, &mv)?
        }
        _ => bail!("exactly one of --mu or --m is required"),
    };
    Ok(d)
}

fn emit_reports(reports: &[RelationReport], path: &Option<PathBuf>) -> Result<bool> {
    if let Some(p) = path {
        fs::write(p, report::to_json(reports))?;
    }
    let fails = report::failures(reports);
    let passed = reports
        .iter()
        .filter(|r| r.required && r.status == report::Status::Pass)
        .count();
    println!(
        "checked {} required instances: {} passed, {} failed",
        passed + fails.len(),
        passed,
        fails.len()
    );
    for f in fails.iter().take(10) {
        println!(
            "FAIL {} [{}]: {}",
            f.relation,
            f.instance,
            f.witness.as_deref().unwrap_or("")
        );
    }
    Ok(report::all_required_pass(reports))
}

fn run() -> Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Crystal { command } => match command {
            CrystalCmd::Gen {
                gp,
                dot,
                json,
                depth_limit,
            } => {
                let (g, r) = gp.load()?;
                let crystal = generate_product_crystal(&g, &r, depth_limit)?;
                let violations = check_closure(&g, &crystal);
                println!("nodes: {}", crystal.len());
                println!("edges: {}", crystal.edges.len());
                for node in &crystal.nodes {
                    println!("  {}", node_label(&g, node, Some(&r)));
                }
                if let Some(p) = dot {
                    fs::write(&p, crystal_to_dot(&g, &crystal, Some(&r)))?;
                    println!("wrote {}", p.display());
                }
                if let Some(p) = json {
                    fs::write(&p, crystal_to_json(&crystal))?;
                    println!("wrote {}", p.display());
                }
                if !violations.is_empty() {
                    println!("closure violations: {}", violations.len());
                    return Ok(false);
                }
                println!("closure: ok");
                Ok(true)
            }
            CrystalCmd::Hw { gp, mu } => {
                let (g, r) = gp.load()?;
                let mu = parse_weight(&mu)?;
                let support = pmc_core::category_o::o_minus_support(&g, &r, &mu)?;
                println!("weight support at mu ({} collections):", support.len());
                for s in &support {
                    println!("  {s}  x = {}", s.x_statistic());
                }
                let hw = pmc_core::category_o::highest_weight_elements(&g, &r, &mu)?;
                println!("highest-weight elements at mu ({}):", hw.len());
                for p in &hw {
                    println!("  {}", node_label(&g, p, Some(&r)));
                    let s = pmc_core::multiset::factorize(&g, p, &r)?;
                    let (seq, _) = idempotent_from_s(&g, &r, &s);
                    println!("    idempotent: {}", seq.shorthand());
                }
                Ok(true)
            }
            CrystalCmd::Embed { gp } => {
                let (g, r) = gp.load()?;
                let rep = check_embeddings(&g, &r)?;
                println!(
                    "|B(R)| = {} in {} components; tensor size {} in {} components",
                    rep.br_size, rep.br_components, rep.tensor_size, rep.tensor_components
                );
                println!("lambda component present: {}", rep.lambda_embeds);
                println!(
                    "highest-weight multiset contained in tensor: {}",
                    rep.tensor_contains
                );
                println!(
                    "multisets equal (generic behaviour): {}",
                    rep.hw_multisets_equal
                );
                if let Some(w) = &rep.witness {
                    println!("witness: {w}");
                }
                Ok(rep.holds())
            }
        },
        Command::Longitude { command } => match command {
            LongitudeCmd::Check {
                gp,
                blacks,
                longs,
                kappa,
                mode,
            } => {
                let (g, r) = gp.load()?;
                let t = LongitudeTriple {
                    blacks: parse_usize_list(&blacks)?,
                    kappa: parse_usize_list(&kappa)?,
                    longs: parse_i64_list(&longs)?,
                };
                let mode = match mode.as_str() {
                    "metric" => LongMode::Metric,
                    "coarse" => LongMode::Coarse,
                    other => bail!("unknown mode {other:?} (metric|coarse)"),
                };
                let ok = t.check(&g, &r, mode);
                println!("{}", if ok { "valid" } else { "invalid" });
                Ok(ok)
            }
            LongitudeCmd::VerifyCompat { gp, max_blacks } => {
                let (g, r) = gp.load()?;
                let rep = verify_compat_long(&g, &r, max_blacks);
                println!("cases checked: {} ({} parity)", rep.cases, rep.parity_count);
                match rep.counterexample {
                    None => {
                        println!("equivalence holds");
                        Ok(true)
                    }
                    Some(w) => {
                        println!("counterexample: {w}");
                        Ok(false)
                    }
                }
            }
        },
        Command::Gklo { command } => match command {
            GkloCmd::Verify {
                gp,
                mu,
                m,
                lambda,
                order,
                degree,
                report,
            } => {
                let (g, r) = gp.load()?;
                let d = yangian_data(&g, &r, &mu, &m, &lambda)?;
                let reports = verify_relations(&d, order, degree);
                emit_reports(&reports, &report)
            }
            GkloCmd::Lemma {
                m,
                c_degree,
                degree,
            } => {
                let t = Var::Param(0);
                let mut all = Vec::new();
                for deg in 0..=c_degree {
                    let c = Poly::var(t).pow(deg);
                    all.extend(verify_lemma_filgklo(&c, t, m, degree));
                }
                emit_reports(&all, &None)
            }
        },
        Command::Ya { command } => match command {
            YaCmd::Verify {
                gp,
                m,
                degree,
                report,
            } => {
                let (g, r) = gp.load()?;
                let d = YangianData::new(&g, &r, &[])?;
                let reports = verify_ya_relations(&d, m, degree);
                emit_reports(&reports, &report)
            }
            YaCmd::Crosscheck {
                gp,
                mu,
                m,
                lambda,
                rmax,
                degree,
                report,
            } => {
                let (g, r) = gp.load()?;
                let d = yangian_data(&g, &r, &mu, &m, &lambda)?;
                let reports = cross_check_flagya(&d, rmax, degree);
                emit_reports(&reports, &report)
            }
        },
        Command::Gt { command } => match command {
            GtCmd::Classify {
                n_boxes,
                levels,
                partition,
                central,
                padding,
            } => {
                let partition: Vec<u64> = partition
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| t.trim().parse().map_err(|e| anyhow!("bad part {t:?}: {e}")))
                    .collect::<Result<_>>()?;
                let levels = if levels == 0 { partition.len() } else { levels };
                let central = parse_i64_list(&central)?;
                let ctx = partition_mu_dictionary(
                    n_boxes,
                    levels,
                    GtInput::Partition(partition),
                    central.clone(),
                )?;
                let padding = padding.unwrap_or_else(|| ctx.mult.iter().sum::<u64>() as usize);
                let entries = classify_gt(&ctx, padding)?;
                println!(
                    "class-weight elements (padding {padding}, stability verified): {}",
                    entries.len()
                );
                let labels: Vec<&MultisetCollection> = entries.iter().map(|e| &e.labels).collect();
                let json: Vec<String> = labels.iter().map(|s| s.to_json()).collect();
                println!("[{}]", json.join(", "));
                if let Some(top) = fd_top_row(n_boxes, &central) {
                    let dim = pmc_core::gt::fd_dimension_crystal(&top)?;
                    let patterns = gt_pattern_count(&top);
                    println!(
                        "finite-dimensional module: top row {top:?}, crystal dimension {dim}, pattern count {patterns}"
                    );
                    return Ok(dim == patterns);
                }
                Ok(true)
            }
            GtCmd::Count { top_row } => {
                let row = parse_i64_list(&top_row)?;
                println!("{}", gt_pattern_count(&row));
                Ok(true)
            }
        },
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use gammatop::io::{parse_map, parse_operation, parse_space, space_to_json};
use gammatop::laws::{reproduces, Shape};
use gammatop::{
    audit_paper, claims_matching, count_topologies, evaluate, list_claims, search_counterexample,
    topologies, AuditOptions, ClosureVariant, EvalOptions, Fixture, GammaSpace, Hypothesis,
    Instance, OperationDomain, SearchConfig, SemiRegularVariant, SemistarContext, Status,
    SubsetMask,
};

#[derive(Parser)]
#[command(name = "gammatop", version, about = "Operations on finite topologies and a law checker")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Closure {
    Pointwise,
    Lattice,
}

impl From<Closure> for ClosureVariant {
    fn from(c: Closure) -> Self {
        match c {
            Closure::Pointwise => ClosureVariant::Pointwise,
            Closure::Lattice => ClosureVariant::Lattice,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SemiReg {
    Cap,
    Cup,
}

impl From<SemiReg> for SemiRegularVariant {
    fn from(s: SemiReg) -> Self {
        match s {
            SemiReg::Cap => SemiRegularVariant::Cap,
            SemiReg::Cup => SemiRegularVariant::Cup,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Hyp {
    Regular,
    SemiRegular,
    Open,
    Monotone,
    Bijective,
}

impl From<Hyp> for Hypothesis {
    fn from(h: Hyp) -> Self {
        match h {
            Hyp::Regular => Hypothesis::Regular,
            Hyp::SemiRegular => Hypothesis::SemiRegular,
            Hyp::Open => Hypothesis::Open,
            Hyp::Monotone => Hypothesis::Monotone,
            Hyp::Bijective => Hypothesis::Bijective,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Domain {
    Builtins,
    Opens,
    SemiOpens,
}

impl From<Domain> for OperationDomain {
    fn from(d: Domain) -> Self {
        match d {
            Domain::Builtins => OperationDomain::Builtins,
            Domain::Opens => OperationDomain::Opens,
            Domain::SemiOpens => OperationDomain::SemiOpens,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Space,
    TauGamma,
    So,
    Sc,
    SemiOpen,
    Classify,
    Cl,
    Int,
    Bd,
    Scl,
    Sint,
    SintPw,
    Sbd,
    Sext,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family or apply an operator to a set.
    Show {
        /// Fixture name (F1..F5, Fid) or path to a space JSON file.
        #[arg(long)]
        space: String,
        /// Operation JSON file replacing the space's operation.
        #[arg(long)]
        op: Option<PathBuf>,
        #[arg(long, value_enum)]
        what: What,
        /// Set literal such as `{a,b}`.
        #[arg(long)]
        set: Option<String>,
        #[arg(long, value_enum, default_value = "pointwise")]
        closure: Closure,
    },
    /// Evaluate a claim (or claim group) on one instance.
    Check {
        #[arg(long)]
        claim: String,
        #[arg(long)]
        space: String,
        #[arg(long)]
        op: Option<PathBuf>,
        /// Codomain for map claims; defaults to the space itself.
        #[arg(long)]
        codomain: Option<String>,
        /// Map JSON file; all maps are swept when absent.
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "pointwise")]
        closure: Closure,
        #[arg(long = "semi-regular-variant", value_enum, default_value = "cap")]
        semi_regular: SemiReg,
        /// Treat a hypothesis as met without checking it.
        #[arg(long, value_enum)]
        drop: Vec<Hyp>,
    },
    /// Search enumerated spaces for a counterexample to a claim.
    Search {
        #[arg(long)]
        claim: String,
        #[arg(long, value_enum)]
        drop: Vec<Hyp>,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Operations tried per topology.
        #[arg(long, default_value_t = 64)]
        budget: usize,
        #[arg(long, value_enum, default_value = "opens")]
        domain: Domain,
        #[arg(long, value_enum, default_value = "pointwise")]
        closure: Closure,
        #[arg(long = "semi-regular-variant", value_enum, default_value = "cap")]
        semi_regular: SemiReg,
        /// Keep going after the first counterexample.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        max_instances: Option<usize>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Run every claim on the fixtures and small enumerated spaces.
    Audit {
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        sweep_max_n: usize,
    },
    /// Enumerate the topologies on n points.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// List the registered claims.
    Claims,
}

fn load_space(arg: &str) -> Result<GammaSpace> {
    if let Some(f) = Fixture::parse(arg) {
        return Ok(f.space());
    }
    let text = fs::read_to_string(arg).with_context(|| format!("reading space file {arg}"))?;
    parse_space(&text).with_context(|| format!("in {arg}"))
}

fn with_op(space: GammaSpace, op: Option<&PathBuf>) -> Result<GammaSpace> {
    let Some(path) = op else {
        return Ok(space);
    };
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let t = Arc::clone(space.topology_arc());
    let g = parse_operation(&t, &text).with_context(|| format!("in {}", path.display()))?;
    Ok(GammaSpace::new(t, g)?)
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn show(
    json: bool,
    space: &str,
    op: Option<&PathBuf>,
    what: What,
    set: Option<&str>,
    closure: Closure,
) -> Result<ExitCode> {
    let space = Arc::new(with_op(load_space(space)?, op)?);
    let ctx = SemistarContext::new(Arc::clone(&space), closure.into());
    let u = ctx.universe().clone();
    let family = match what {
        What::TauGamma => Some(ctx.gamma_opens().clone()),
        What::So => Some(ctx.so_family().clone()),
        What::Sc => Some(ctx.sc_family().clone()),
        What::SemiOpen => Some(space.topology().semi_open_family().clone()),
        _ => None,
    };
    if let Some(fam) = family {
        if json {
            let sets: Vec<Vec<String>> = fam.iter().map(|m| u.labels_of(m)).collect();
            print_json(&sets)?;
        } else {
            println!("{}", u.render_family(&fam));
        }
        return Ok(ExitCode::SUCCESS);
    }
    match what {
        What::Space => {
            if json {
                print_json(&space_to_json(&space))?;
            } else {
                println!("{}", space.describe());
            }
            return Ok(ExitCode::SUCCESS);
        }
        What::Classify => {
            let c = space.classification();
            if json {
                print_json(&c)?;
            } else {
                println!("regular: {}", c.regular);
                println!("open: {}", c.open_op);
                println!("monotone: {}", c.monotone);
                println!("semi-regular (cap): {}", c.semi_regular_cap);
                println!("semi-regular (cup): {}", c.semi_regular_cup);
                println!("semi-open operation: {}", c.semi_open_op);
            }
            return Ok(ExitCode::SUCCESS);
        }
        _ => {}
    }
    let Some(text) = set else {
        bail!("--set is required for this operator");
    };
    let a: SubsetMask = u.parse_set(text)?;
    let r = match what {
        What::Cl => ctx.closure(a)?,
        What::Int => ctx.interior(a)?,
        What::Bd => ctx.boundary(a)?,
        What::Scl => ctx.s_closure(a)?,
        What::Sint => ctx.s_interior(a)?,
        What::SintPw => ctx.s_interior_pointwise(a)?,
        What::Sbd => ctx.s_boundary(a)?,
        What::Sext => ctx.s_exterior(a)?,
        _ => unreachable!("families handled above"),
    };
    if json {
        print_json(&u.labels_of(r))?;
    } else {
        println!("{}", u.render(r));
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn check(
    json: bool,
    claim: &str,
    space: &str,
    op: Option<&PathBuf>,
    codomain: Option<&str>,
    map: Option<&PathBuf>,
    options: EvalOptions,
) -> Result<ExitCode> {
    let claims = claims_matching(claim)?;
    let domain = Arc::new(with_op(load_space(space)?, op)?);
    let codomain = match codomain {
        Some(c) => Arc::new(load_space(c)?),
        None => Arc::clone(&domain),
    };
    let fixed = match map {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Some(parse_map(domain.universe(), codomain.universe(), &text)?)
        }
        None => None,
    };
    let mut verdicts = Vec::new();
    for c in claims {
        let instance = match c.shape() {
            Shape::Map => Instance::Map {
                domain: Arc::clone(&domain),
                codomain: Arc::clone(&codomain),
                map: fixed.clone(),
            },
            _ => Instance::Space(Arc::clone(&domain)),
        };
        let v = evaluate(c, &instance, &options)?;
        if v.status == Status::Refuted {
            debug_assert!(reproduces(c, &instance, &v)?);
        }
        verdicts.push(v);
    }
    if json {
        print_json(&verdicts)?;
    } else {
        for v in &verdicts {
            println!("{}", v.summary());
        }
    }
    Ok(if verdicts.iter().any(|v| v.status == Status::Refuted) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let json = cli.json;
    match cli.command {
        Command::Show {
            space,
            op,
            what,
            set,
            closure,
        } => show(json, &space, op.as_ref(), what, set.as_deref(), closure),
        Command::Check {
            claim,
            space,
            op,
            codomain,
            map,
            closure,
            semi_regular,
            drop,
        } => {
            let mut options = EvalOptions::default()
                .with_closure(closure.into())
                .with_semi_regular(semi_regular.into());
            for h in drop {
                options = options.dropping(h.into());
            }
            check(json, &claim, &space, op.as_ref(), codomain.as_deref(), map.as_ref(), options)
        }
        Command::Search {
            claim,
            drop,
            min_n,
            max_n,
            budget,
            domain,
            closure,
            semi_regular,
            all,
            max_instances,
            seed,
        } => {
            let mut options = EvalOptions {
                seed,
                ..EvalOptions::default()
            }
            .with_closure(closure.into())
            .with_semi_regular(semi_regular.into());
            for h in drop {
                options = options.dropping(h.into());
            }
            let config = SearchConfig {
                min_n,
                max_n,
                op_budget: budget,
                domain: domain.into(),
                options,
                stop_at_first: !all,
                max_instances,
                ..SearchConfig::default()
            };
            let targets: Vec<&str> = claims_matching(&claim)?
                .into_iter()
                .filter(|c| !matches!(c.shape(), Shape::Example(_)))
                .map(|c| c.id)
                .collect();
            if targets.is_empty() {
                bail!("claim {claim}: worked examples are checked with `check`, not searched");
            }
            let outcomes: Vec<_> = targets
                .iter()
                .map(|id| search_counterexample(id, &config))
                .collect::<Result<_, _>>()?;
            if json {
                print_json(&outcomes)?;
            } else {
                for out in &outcomes {
                    println!("{} {}", out.claim, out.status_line());
                    println!(
                        "visited {} of {} planned: confirmed {}, refuted {}, vacuous {}",
                        out.visited, out.planned, out.confirmed, out.refuted, out.vacuous
                    );
                    for v in &out.refutations {
                        println!("{}", v.summary());
                    }
                }
            }
            Ok(if outcomes.iter().any(|o| o.found()) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Audit { out, sweep_max_n } => {
            let options = AuditOptions {
                sweep_max_n,
                ..AuditOptions::default()
            };
            let report = audit_paper(&options)?;
            if let Some(path) = out {
                fs::write(&path, report.to_json())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, count_only } => {
            if count_only {
                let count = count_topologies(n)?;
                if json {
                    print_json(&serde_json::json!({ "n": n, "count": count }))?;
                } else {
                    println!("{count}");
                }
            } else {
                let all = topologies(n)?;
                if json {
                    let fams: Vec<Vec<Vec<String>>> = all
                        .iter()
                        .map(|t| t.opens().iter().map(|o| t.universe().labels_of(o)).collect())
                        .collect();
                    print_json(&fams)?;
                } else {
                    for t in &all {
                        println!("{}", t.describe());
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Claims => {
            if json {
                let rows: Vec<_> = list_claims()
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "id": c.id,
                            "label": c.anchor.label,
                            "statement": c.anchor.statement,
                            "shape": c.shape(),
                            "hypotheses": c.hypotheses,
                        })
                    })
                    .collect();
                print_json(&rows)?;
            } else {
                for c in list_claims() {
                    let h: Vec<&str> = c.hypotheses.iter().map(|h| h.name()).collect();
                    let h = if h.is_empty() { String::new() } else { format!(" [{}]", h.join(",")) };
                    println!("{:<10} {}{}: {}", c.id, c.anchor.label, h, c.anchor.statement);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

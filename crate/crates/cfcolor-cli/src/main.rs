//! `cfcolor`: conflict-free coloring from the command line.
//!
//! Exit codes: 0 success or valid, 1 negative answer (invalid coloring, no
//! solution, NO), 2 usage or file error, 3 instance or state-space ceiling
//! exceeded.

use cfcolor::classes::{self, geom, KneserParams};
use cfcolor::generators::{self, ExtOp, RandomInstance, RandomKind};
use cfcolor::graph::{verify, Coloring, Graph, Mode, Neighborhood, Variant};
use cfcolor::{exact, io, named, wexpr, Error};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cfcolor", version, about = "conflict-free graph coloring toolbox")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliNeighborhood {
    On,
    Cn,
}

#[derive(Args, Clone, Copy)]
struct ModeArgs {
    /// open (on) or closed (cn) neighborhood
    #[arg(long, value_enum)]
    mode: CliNeighborhood,
    /// forbid color 0 (the full-coloring variant)
    #[arg(long)]
    full: bool,
}

impl ModeArgs {
    fn mode(&self) -> Mode {
        Mode {
            neighborhood: match self.mode {
                CliNeighborhood::On => Neighborhood::Open,
                CliNeighborhood::Cn => Neighborhood::Closed,
            },
            variant: if self.full {
                Variant::Full
            } else {
                Variant::Partial
            },
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check a coloring file against a graph file
    Verify {
        #[command(flatten)]
        mode: ModeArgs,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Exact minimum number of colors by exhaustive search
    Exact {
        #[command(flatten)]
        mode: ModeArgs,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "max-k")]
        max_k: u32,
        /// largest instance size the solver will accept
        #[arg(long, default_value_t = 22)]
        ceiling: usize,
    },
    /// Exact chromatic number (proper coloring)
    Chromatic {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "max-k", default_value_t = 8)]
        max_k: u32,
        #[arg(long, default_value_t = 22)]
        ceiling: usize,
    },
    /// Run a per-class constructive colorer and verify its output
    Color {
        /// one of: dh-cn, dh-restricted, cograph-on, block-on, interval-on,
        /// proper-interval-on, interval-cn, split-cn, kneser-on, kneser-cn,
        /// unit-square-on, unit-disk-on
        #[arg(long = "class")]
        class: String,
        /// instance file (sequence, graph, intervals or points, depending
        /// on the class)
        #[arg(long)]
        input: Option<PathBuf>,
        /// write the coloring here; printed to stdout otherwise
        #[arg(long)]
        out: Option<PathBuf>,
        /// Kneser ground-set size
        #[arg(long)]
        n: Option<u32>,
        /// Kneser subset size
        #[arg(long)]
        k: Option<u32>,
        /// the operation absent from the sequence (dh-restricted): P, T or F
        #[arg(long)]
        missing: Option<char>,
        /// split partition file; derived from the graph when omitted
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Clique-width dynamic program on a w-expression file
    Dp {
        #[arg(long)]
        expr: PathBuf,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Generate graphs, scenes and sequences
    Gen {
        /// gk-cn, gk-on, bipartite-dh, split-reduction, named:<name>,
        /// named-intervals:<name>, named-points:<name>, random:<kind> with
        /// kind one of extension-seq, cotree, intervals, unit-intervals,
        /// points-box, split-graph
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        /// seed for random generation (required there, no default)
        #[arg(long)]
        seed: Option<u64>,
        /// allowed operations for random extension sequences, e.g. PTF
        #[arg(long)]
        ops: Option<String>,
        #[arg(long, default_value_t = 10)]
        width: i64,
        #[arg(long, default_value_t = 10)]
        height: i64,
        /// input graph for split-reduction
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Perfect independent dominating set
    Pid {
        /// brute force over a graph file
        #[arg(long, conflicts_with = "intervals")]
        graph: Option<PathBuf>,
        /// polynomial dynamic program over an interval scene
        #[arg(long)]
        intervals: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        ceiling: usize,
    },
    /// Emit a CSV of per-class coloring results
    Bench {
        #[arg(long, default_value = "tables")]
        suite: String,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CeilingExceeded { .. } | Error::StateSpaceTooLarge(_) => {
                    ExitCode::from(3)
                }
                _ => ExitCode::from(2),
            }
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, content: &str) -> Result<(), Error> {
    std::fs::write(path, content).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

const NEGATIVE: u8 = 1;

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Verify {
            mode,
            graph,
            coloring,
        } => {
            let g = io::read_graph(&read(&graph)?)?;
            let c = io::read_coloring(&read(&coloring)?, 0)?;
            match verify(&g, &c, mode.mode())? {
                cfcolor::VerifyResult::Valid => {
                    println!("VALID");
                    Ok(ExitCode::SUCCESS)
                }
                cfcolor::VerifyResult::Invalid { witness } => {
                    println!("INVALID witness={witness}");
                    Ok(ExitCode::from(NEGATIVE))
                }
            }
        }
        Command::Exact {
            mode,
            graph,
            max_k,
            ceiling,
        } => {
            let g = io::read_graph(&read(&graph)?)?;
            if g.n() > ceiling {
                return Err(Error::CeilingExceeded { got: g.n(), ceiling });
            }
            match exact::min_cf_colors(&g, mode.mode(), max_k) {
                Some(k) => {
                    println!("{k}");
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("UNKNOWN(>{max_k})");
                    Ok(ExitCode::from(NEGATIVE))
                }
            }
        }
        Command::Chromatic {
            graph,
            max_k,
            ceiling,
        } => {
            let g = io::read_graph(&read(&graph)?)?;
            if g.n() > ceiling {
                return Err(Error::CeilingExceeded { got: g.n(), ceiling });
            }
            match exact::chromatic_number(&g, max_k) {
                Some(k) => {
                    println!("{k}");
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("UNKNOWN(>{max_k})");
                    Ok(ExitCode::from(NEGATIVE))
                }
            }
        }
        Command::Color {
            class,
            input,
            out,
            n,
            k,
            missing,
            partition,
        } => run_color(&class, input, out, n, k, missing, partition),
        Command::Dp { expr, k, mode } => {
            let e = wexpr::parse_wexpr(&read(&expr)?)?;
            let e = wexpr::make_irredundant(&e)?;
            let outcome = wexpr::dp_decide(&e, k, mode.mode())?;
            if outcome.decision {
                println!("YES");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("NO");
                Ok(ExitCode::from(NEGATIVE))
            }
        }
        Command::Gen {
            family,
            k,
            n,
            seed,
            ops,
            width,
            height,
            input,
            out,
        } => run_gen(&family, k, n, seed, ops, width, height, input, &out),
        Command::Pid {
            graph,
            intervals,
            ceiling,
        } => {
            let set = if let Some(path) = graph {
                let g = io::read_graph(&read(&path)?)?;
                exact::has_pid_bruteforce(&g, ceiling)?
            } else if let Some(path) = intervals {
                let scene = io::read_intervals(&read(&path)?)?;
                classes::pid_interval_dp(&scene)?
            } else {
                return Err(Error::InvalidParams(
                    "pid needs --graph or --intervals".to_string(),
                ));
            };
            match set {
                Some(s) => {
                    println!(
                        "PID: {}",
                        s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                    );
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("NONE");
                    Ok(ExitCode::from(NEGATIVE))
                }
            }
        }
        Command::Bench { suite, out } => {
            if suite != "tables" {
                return Err(Error::InvalidParams(format!("unknown suite `{suite}`")));
            }
            let csv = bench_tables()?;
            write_out(&out, &csv)?;
            print!("{csv}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

struct ColorOutcome {
    coloring: Coloring,
    graph: Graph,
    mode: Mode,
    extra: Option<String>,
}

fn run_color(
    class: &str,
    input: Option<PathBuf>,
    out: Option<PathBuf>,
    n: Option<u32>,
    k: Option<u32>,
    missing: Option<char>,
    partition: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let need_input = || {
        input
            .clone()
            .ok_or_else(|| Error::InvalidParams(format!("class {class} needs --input")))
    };
    let outcome = match class {
        "dh-cn" => {
            let seq = io::read_sequence(&read(&need_input()?)?)?;
            ColorOutcome {
                coloring: classes::color_dh_cfcn(&seq)?,
                graph: generators::seq_to_graph(&seq)?,
                mode: Mode::cn_partial(),
                extra: None,
            }
        }
        "dh-restricted" => {
            let seq = io::read_sequence(&read(&need_input()?)?)?;
            let op = missing
                .and_then(ExtOp::from_letter)
                .ok_or_else(|| Error::InvalidParams("--missing must be P, T or F".to_string()))?;
            ColorOutcome {
                coloring: classes::color_dh_restricted(&seq, op)?,
                graph: generators::seq_to_graph(&seq)?,
                mode: Mode::cn_partial(),
                extra: None,
            }
        }
        "cograph-on" => {
            let seq = io::read_sequence(&read(&need_input()?)?)?;
            ColorOutcome {
                coloring: classes::color_cograph_cfon(&seq)?,
                graph: generators::seq_to_graph(&seq)?,
                mode: Mode::on_partial(),
                extra: None,
            }
        }
        "block-on" => {
            let g = io::read_graph(&read(&need_input()?)?)?;
            ColorOutcome {
                coloring: classes::color_block_cfon(&g)?,
                graph: g,
                mode: Mode::on_full(),
                extra: None,
            }
        }
        "interval-on" => {
            let scene = io::read_intervals(&read(&need_input()?)?)?;
            ColorOutcome {
                coloring: classes::color_interval_cfon(&scene)?,
                graph: geom::interval_graph(&scene)?,
                mode: Mode::on_partial(),
                extra: None,
            }
        }
        "proper-interval-on" => {
            let scene = io::read_intervals(&read(&need_input()?)?)?;
            ColorOutcome {
                coloring: classes::color_proper_interval_cfon(&scene)?,
                graph: geom::interval_graph(&scene)?,
                mode: Mode::on_partial(),
                extra: None,
            }
        }
        "interval-cn" => {
            let scene = io::read_intervals(&read(&need_input()?)?)?;
            let (value, witness) = classes::decide_interval_cfcn(&scene, 20)?;
            let Some(coloring) = witness else {
                println!("value={value} witness=none");
                return Ok(ExitCode::SUCCESS);
            };
            ColorOutcome {
                coloring,
                graph: geom::interval_graph(&scene)?,
                mode: Mode::cn_partial(),
                extra: Some(format!("value={value}")),
            }
        }
        "split-cn" => {
            let g = io::read_graph(&read(&need_input()?)?)?;
            let (kp, ip) = match partition {
                Some(p) => io::read_partition(&read(&p)?, g.n())?,
                None => classes::split_partition(&g)?,
            };
            let (value, coloring) = classes::color_split_cfcn(&g, &kp, &ip)?;
            ColorOutcome {
                coloring,
                graph: g,
                mode: Mode::cn_partial(),
                extra: Some(format!("value={value}")),
            }
        }
        "kneser-on" | "kneser-cn" => {
            let (n, k) = match (n, k) {
                (Some(n), Some(k)) => (n, k),
                _ => {
                    return Err(Error::InvalidParams(
                        "kneser classes need --n and --k".to_string(),
                    ))
                }
            };
            let p = KneserParams::new(n, k)?;
            let ceiling = 100_000;
            let coloring = if class == "kneser-on" {
                classes::color_kneser_cfon(&p, ceiling)?
            } else {
                classes::color_kneser_cfcn(&p, ceiling)?
            };
            let mode = if class == "kneser-on" {
                Mode::on_partial()
            } else {
                Mode::cn_partial()
            };
            ColorOutcome {
                coloring,
                graph: classes::kneser_graph(&p, ceiling)?,
                mode,
                extra: None,
            }
        }
        "unit-square-on" => {
            let scene = io::read_points(&read(&need_input()?)?)?;
            ColorOutcome {
                coloring: classes::color_unit_square_cfon(&scene)?,
                graph: geom::unit_square_graph(&scene)?,
                mode: Mode::on_partial(),
                extra: None,
            }
        }
        "unit-disk-on" => {
            let scene = io::read_points(&read(&need_input()?)?)?;
            ColorOutcome {
                coloring: classes::color_unit_disk_cfon(&scene)?,
                graph: geom::unit_disk_graph(&scene)?,
                mode: Mode::on_partial(),
                extra: None,
            }
        }
        other => {
            return Err(Error::InvalidParams(format!("unknown class `{other}`")));
        }
    };

    // never report a coloring as valid without running the verifier
    let result = verify(&outcome.graph, &outcome.coloring, outcome.mode)?;
    let text = io::write_coloring(&outcome.coloring);
    match &out {
        Some(path) => write_out(path, &text)?,
        None => print!("{text}"),
    }
    let extra = outcome
        .extra
        .map(|e| format!("{e} "))
        .unwrap_or_default();
    match result {
        cfcolor::VerifyResult::Valid => {
            println!(
                "{extra}colors_used={} valid=true",
                outcome.coloring.colors_used()
            );
            Ok(ExitCode::SUCCESS)
        }
        cfcolor::VerifyResult::Invalid { witness } => {
            println!(
                "{extra}colors_used={} valid=false witness={witness}",
                outcome.coloring.colors_used()
            );
            Ok(ExitCode::from(NEGATIVE))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_gen(
    family: &str,
    k: Option<u32>,
    n: Option<usize>,
    seed: Option<u64>,
    ops: Option<String>,
    width: i64,
    height: i64,
    input: Option<PathBuf>,
    out: &Path,
) -> Result<ExitCode, Error> {
    let need_k = || k.ok_or_else(|| Error::InvalidParams(format!("family {family} needs --k")));
    let need_n = || n.ok_or_else(|| Error::InvalidParams(format!("family {family} needs --n")));
    let need_seed = || {
        seed.ok_or_else(|| {
            Error::InvalidParams("random generation needs an explicit --seed".to_string())
        })
    };
    if let Some(name) = family.strip_prefix("named:") {
        let g = named::named_graph(name)?;
        write_out(out, &io::write_graph(&g))?;
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(name) = family.strip_prefix("named-intervals:") {
        let scene = named::named_interval_scene(name)?;
        write_out(out, &io::write_intervals(&scene))?;
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(name) = family.strip_prefix("named-points:") {
        let scene = named::named_point_scene(name)?;
        write_out(out, &io::write_points(&scene))?;
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(kind) = family.strip_prefix("random:") {
        let kind = match kind {
            "extension-seq" => {
                let ops = ops.unwrap_or_else(|| "PTF".to_string());
                let ops: Option<Vec<ExtOp>> = ops.chars().map(ExtOp::from_letter).collect();
                RandomKind::ExtensionSeq(ops.ok_or_else(|| {
                    Error::InvalidParams("--ops must combine P, T, F".to_string())
                })?)
            }
            "cotree" => RandomKind::Cotree,
            "intervals" => RandomKind::Intervals { width },
            "unit-intervals" => RandomKind::UnitIntervals { width },
            "points-box" => RandomKind::PointsBox { width, height },
            "split-graph" => RandomKind::SplitGraph,
            other => {
                return Err(Error::InvalidParams(format!("unknown random kind `{other}`")))
            }
        };
        match generators::random_instance(&kind, need_n()?, need_seed()?)? {
            RandomInstance::Sequence(seq) => write_out(out, &io::write_sequence(&seq))?,
            RandomInstance::Intervals(s) => write_out(out, &io::write_intervals(&s))?,
            RandomInstance::Points(s) => write_out(out, &io::write_points(&s))?,
            RandomInstance::Split(g, kp, _) => {
                write_out(out, &io::write_graph(&g))?;
                write_out(
                    &out.with_extension("partition"),
                    &io::write_partition(g.n(), &kp),
                )?;
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    match family {
        "gk-cn" => {
            let g = generators::gen_gk_cn(need_k()?, 100_000)?;
            write_out(out, &io::write_graph(&g))?;
        }
        "gk-on" => {
            let g = generators::gen_gk_on(need_k()?, 100_000)?;
            write_out(out, &io::write_graph(&g))?;
        }
        "bipartite-dh" => {
            let g = generators::gen_bipartite_dh(need_k()?);
            write_out(out, &io::write_graph(&g))?;
        }
        "gk-cn-expr" => {
            let e = wexpr::expr_for_gk_cn(need_k()?)?;
            write_out(out, &format!("{e}\n"))?;
        }
        "split-reduction" => {
            let path = input.ok_or_else(|| {
                Error::InvalidParams("split-reduction needs --input".to_string())
            })?;
            let g = io::read_graph(&read(&path)?)?;
            let (g2, kp, _) = generators::split_reduction(&g);
            write_out(out, &io::write_graph(&g2))?;
            write_out(
                &out.with_extension("partition"),
                &io::write_partition(g2.n(), &kp),
            )?;
        }
        other => {
            return Err(Error::InvalidParams(format!("unknown family `{other}`")));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn bench_tables() -> Result<String, Error> {
    let mut rows = vec!["class,n,bound,colors_used,valid".to_string()];
    let mut push = |class: &str, g: &Graph, c: &Coloring, m: Mode, bound: String| {
        let valid = verify(g, c, m).map(|r| r.is_valid()).unwrap_or(false);
        rows.push(format!(
            "{class},{},{bound},{},{valid}",
            g.n(),
            c.colors_used()
        ));
    };

    let seq = generators::random_extension_seq(12, &[ExtOp::Pendant, ExtOp::TrueTwin, ExtOp::FalseTwin], 1);
    let g = generators::seq_to_graph(&seq)?;
    push("dh-cn", &g, &classes::color_dh_cfcn(&seq)?, Mode::cn_partial(), "3".into());

    let seq = generators::random_extension_seq(12, &[ExtOp::Pendant, ExtOp::TrueTwin], 2);
    let g = generators::seq_to_graph(&seq)?;
    push(
        "dh-restricted",
        &g,
        &classes::color_dh_restricted(&seq, ExtOp::FalseTwin)?,
        Mode::cn_partial(),
        "2".into(),
    );

    let seq = generators::random_extension_seq(12, &[ExtOp::TrueTwin, ExtOp::FalseTwin], 3);
    let g = generators::seq_to_graph(&seq)?;
    push("cograph-on", &g, &classes::color_cograph_cfon(&seq)?, Mode::on_partial(), "2".into());

    let g = named::named_graph("block-lb")?;
    push("block-on", &g, &classes::color_block_cfon(&g)?, Mode::on_full(), "3".into());

    let scene = named::interval_lower_bound_scene();
    let g = geom::interval_graph(&scene)?;
    push("interval-on", &g, &classes::color_interval_cfon(&scene)?, Mode::on_partial(), "3".into());

    let scene = generators::random_connected_intervals(20, 12, 4, true);
    let g = geom::interval_graph(&scene)?;
    push(
        "proper-interval-on",
        &g,
        &classes::color_proper_interval_cfon(&scene)?,
        Mode::on_partial(),
        "2".into(),
    );

    let scene = named::bull_interval_scene();
    let g = geom::interval_graph(&scene)?;
    let (_, witness) = classes::decide_interval_cfcn(&scene, 20)?;
    push(
        "interval-cn",
        &g,
        &witness.expect("bull is within the solver ceiling"),
        Mode::cn_partial(),
        "2".into(),
    );

    let (g, kp, ip) = generators::random_split_graph(12, 5);
    let (_, c) = classes::color_split_cfcn(&g, &kp, &ip)?;
    push("split-cn", &g, &c, Mode::cn_partial(), "2".into());

    let p = KneserParams::new(7, 3)?;
    let g = classes::kneser_graph(&p, 100_000)?;
    push(
        "kneser-on",
        &g,
        &classes::color_kneser_cfon(&p, 100_000)?,
        Mode::on_partial(),
        "k+1=4".into(),
    );

    let p = KneserParams::new(9, 3)?;
    let g = classes::kneser_graph(&p, 100_000)?;
    push(
        "kneser-cn",
        &g,
        &classes::color_kneser_cfcn(&p, 100_000)?,
        Mode::cn_partial(),
        "k=3".into(),
    );

    let scene = generators::random_connected_points(30, 6);
    let g = geom::unit_square_graph(&scene)?;
    push(
        "unit-square-on",
        &g,
        &classes::color_unit_square_cfon(&scene)?,
        Mode::on_partial(),
        "27".into(),
    );
    let g = geom::unit_disk_graph(&scene)?;
    push(
        "unit-disk-on",
        &g,
        &classes::color_unit_disk_cfon(&scene)?,
        Mode::on_partial(),
        "54".into(),
    );

    Ok(rows.join("\n") + "\n")
}

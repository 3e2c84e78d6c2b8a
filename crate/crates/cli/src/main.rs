use std::error::Error;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mwdraw::construct::{
    draw_caterpillar_pair, draw_pruned_tree_pair, draw_star_pair, draw_tree_pair,
};
use mwdraw::io::{self, DrawingDocument, GraphsDocument, TreeDocument, FORMAT_VERSION};
use mwdraw::proximity::{extract_mw_graphs, verify, ViolationKind};
use mwdraw::svg::{render_svg, RegionPairs, SvgOptions};
use mwdraw::tree_model::{
    caterpillar_decompose, gen_caterpillar_of_size, gen_corollary_family, gen_random_tree,
    isomorphism_map, Tree,
};
use mwdraw::{Beta, DrawingPair, Mode, TAU};

type Result<T> = std::result::Result<T, Box<dyn Error>>;

#[derive(Parser)]
#[command(
    name = "mwdraw",
    version,
    about = "Mutual witness proximity drawings of tree pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a tree document.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Vertex count for random trees and caterpillars.
        #[arg(long)]
        n: Option<usize>,
        /// Number of subtrees in the pruning family.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, value_name = "FILE")]
        o: PathBuf,
    },
    /// Draw a tree pair.
    Draw {
        #[arg(long, value_enum)]
        mode: DrawMode,
        #[arg(short, value_name = "FILE")]
        i: PathBuf,
        /// Second tree; defaults to the first.
        #[arg(long = "i2", value_name = "FILE")]
        i2: Option<PathBuf>,
        #[arg(short, value_name = "FILE")]
        o: PathBuf,
        /// Keep the construction trace in the output.
        #[arg(long)]
        trace: bool,
    },
    /// Check a drawing; exits 1 when any report has violations.
    Verify {
        #[arg(short, value_name = "FILE")]
        i: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "1,2,inf")]
        beta: Vec<Beta>,
        #[arg(long, default_value = "strict")]
        mode: Mode,
        #[arg(long, default_value_t = TAU)]
        margin: f64,
    },
    /// Extract both mutual-witness graphs of a drawing's point sets.
    Extract {
        #[arg(short, value_name = "FILE")]
        i: PathBuf,
        #[arg(long)]
        beta: Beta,
        #[arg(long, value_enum, default_value = "closed")]
        closure: Closure,
        #[arg(short, value_name = "FILE")]
        o: PathBuf,
    },
    /// Render a drawing as SVG.
    Svg {
        #[arg(short, value_name = "FILE")]
        i: PathBuf,
        #[arg(short, value_name = "FILE")]
        o: PathBuf,
        /// Overlay the β-regions of all edges.
        #[arg(long)]
        regions: Option<Beta>,
        #[arg(long)]
        sep_line: bool,
        /// Outline the parallelogram.
        #[arg(long)]
        outline: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Random,
    Caterpillar,
    Corollary,
}

#[derive(Clone, Copy, ValueEnum)]
enum DrawMode {
    Star,
    Caterpillar,
    Tree,
    Pruned,
}

#[derive(Clone, Copy, ValueEnum)]
enum Closure {
    Open,
    Closed,
}

fn gen(kind: Kind, n: Option<usize>, m: Option<usize>, seed: u64) -> Result<TreeDocument> {
    let need_n = || n.ok_or("--n is required for this kind");
    Ok(match kind {
        Kind::Random => TreeDocument::from_tree(&gen_random_tree(need_n()?, seed)?),
        Kind::Caterpillar => TreeDocument::from_tree(&gen_caterpillar_of_size(need_n()?, seed)?),
        Kind::Corollary => {
            let (rt, set) =
                gen_corollary_family(m.ok_or("--m is required for the corollary family")?)?;
            TreeDocument::from_rooted(&rt, Some(&set))
        }
    })
}

/// Center of a star, when `t` is one.
fn star_center(t: &Tree) -> Option<usize> {
    (t.len() >= 2)
        .then(|| (0..t.len()).find(|&v| t.degree(v) == t.len() - 1))
        .flatten()
}

fn relabel(d: &mut DrawingPair, side: usize, f: impl Fn(usize) -> usize) {
    for id in &mut d.sides[side].ids {
        *id = f(*id);
    }
}

fn draw(mode: DrawMode, doc: &TreeDocument, doc2: Option<&TreeDocument>) -> Result<DrawingPair> {
    let t0 = doc.tree()?;
    let t1 = match doc2 {
        Some(d) => d.tree()?,
        None => t0.clone(),
    };
    Ok(match mode {
        DrawMode::Star => {
            let c0 = star_center(&t0).ok_or("first tree is not a star")?;
            let c1 = star_center(&t1).ok_or("second tree is not a star")?;
            if t0.len() != t1.len() {
                return Err("stars differ in size".into());
            }
            let mut d = draw_star_pair(t0.len() - 2)?.drawing;
            // point 0 is the center, then the leaves in order
            for (side, (t, c)) in [(&t0, c0), (&t1, c1)].into_iter().enumerate() {
                let order: Vec<usize> = std::iter::once(c)
                    .chain((0..t.len()).filter(|&v| v != c))
                    .collect();
                relabel(&mut d, side, |k| order[k]);
            }
            d
        }
        DrawMode::Caterpillar => {
            let cat = caterpillar_decompose(&t0)?;
            let mut d = draw_caterpillar_pair(&cat)?;
            if doc2.is_some() {
                let (_, map) = isomorphism_map(&t0, &t1, cat.spine[0])?;
                relabel(&mut d, 1, |v| map[v]);
            }
            d
        }
        DrawMode::Tree => {
            let rt0 = doc.rooted_or_center()?;
            let rt1 = match doc2 {
                Some(d) => d.rooted_or_center()?,
                None => rt0.clone(),
            };
            draw_tree_pair(&rt0, &rt1)?
        }
        DrawMode::Pruned => {
            if doc2.is_some() {
                return Err("pruned mode takes a single tree".into());
            }
            let rt = doc.rooted()?.ok_or("pruned mode needs a rooted tree")?;
            let set = doc
                .sparse_leaves
                .as_deref()
                .ok_or("pruned mode needs sparse_leaves")?;
            draw_pruned_tree_pair(&rt, set)?
        }
    })
}

fn kind_name(k: ViolationKind) -> &'static str {
    match k {
        ViolationKind::MissingWitness => "non-edge without witness",
        ViolationKind::ForbiddenWitness => "edge with witness",
    }
}

fn run_verify(d: &DrawingPair, betas: &[Beta], mode: Mode, margin: f64) -> bool {
    let mut valid = true;
    for &beta in betas {
        let r = verify(d, beta, mode, margin);
        if r.is_valid() {
            println!(
                "beta={beta} mode={mode}: valid, {} borderline",
                r.borderline.len()
            );
            continue;
        }
        valid = false;
        println!("beta={beta} mode={mode}: {} violations", r.violations.len());
        for v in &r.violations {
            let ids = &d.sides[v.side].ids;
            let witness = v.witness.map_or("none".to_string(), |w| {
                d.sides[1 - v.side].ids[w].to_string()
            });
            println!(
                "  side {} pair ({}, {}): {}, witness {witness}, margin {:.6e}",
                v.side,
                ids[v.pair.0],
                ids[v.pair.1],
                kind_name(v.kind),
                v.margin
            );
        }
    }
    valid
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen {
            kind,
            n,
            m,
            seed,
            o,
        } => io::save_tree(o, &gen(kind, n, m, seed)?)?,
        Command::Draw {
            mode,
            i,
            i2,
            o,
            trace,
        } => {
            let doc = io::load_tree(i)?;
            let doc2 = i2.map(io::load_tree).transpose()?;
            let mut d = draw(mode, &doc, doc2.as_ref())?;
            if !trace {
                d.annotations.trace = None;
            }
            io::save_drawing(o, &d)?;
        }
        Command::Verify {
            i,
            beta,
            mode,
            margin,
        } => {
            let d = io::load_drawing(i)?;
            return Ok(run_verify(&d, &beta, mode, margin));
        }
        Command::Extract {
            i,
            beta,
            closure,
            o,
        } => {
            let d = io::load_drawing(i)?;
            let closed = matches!(closure, Closure::Closed);
            let (g0, g1) = extract_mw_graphs(&d.sides[0].points, &d.sides[1].points, beta, closed)?;
            let ids = |side: usize, g: Vec<(usize, usize)>| -> Vec<[usize; 2]> {
                g.into_iter()
                    .map(|(u, v)| [d.sides[side].ids[u], d.sides[side].ids[v]])
                    .collect()
            };
            let doc = GraphsDocument {
                version: FORMAT_VERSION,
                beta,
                closed,
                edges: [ids(0, g0), ids(1, g1)],
            };
            io::write_file(o, &doc.to_json())?;
        }
        Command::Svg {
            i,
            o,
            regions,
            sep_line,
            outline,
        } => {
            let d = DrawingDocument::from_json(&io::read_file(i)?)?.drawing()?;
            let options = SvgOptions {
                regions: regions.map(|b| (b, RegionPairs::Edges)),
                separating_line: sep_line,
                parallelogram: outline,
            };
            io::write_file(o, &render_svg(&d, &options))?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    // accept the single-dash spelling of the second input
    let args = std::env::args_os().map(|a| if a == "-i2" { "--i2".into() } else { a });
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

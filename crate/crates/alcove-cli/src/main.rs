//! Command-line front end: gallery enumeration, crystal graphs, module
//! polytopes, polytope arithmetic, and the multiplicity oracle, all emitted
//! as JSON (or DOT/SVG) on stdout with diagnostics on stderr.
//!
//! Exit codes: 0 success, 2 invalid input, 3 enumeration budget exceeded,
//! 4 backend precondition failure.

mod svg;

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use alcove::crystal::{crystal_to_dot, crystal_to_dto, generate_crystal, verify_axioms};
use alcove::gallery::{
    gallery_dim, gallery_to_dto, leaf_is_ls, minimal_gallery, walk_same_type, weight, Gallery,
    GalleryDto, WalkOptions,
};
use alcove::polytope::{
    minkowski_sum, polytope_from_dto, polytope_to_dto, primitive_a2, union_equals, PolytopeDto,
};
use alcove::quiver::{
    module_from_dto, pol_with, submodule_dim_vectors, verify_preprojective, ModuleFileDto,
    SubmoduleMethod,
};
use alcove::root_data::{weight_multiplicities, weyl_dim};
use alcove::{AlcoveError, LatticeVector, RootSystem};

#[derive(Parser)]
#[command(name = "alcove", version, about = "Exact alcove-gallery combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate galleries of the type of the based gallery to a coweight.
    Gallery(GalleryArgs),
    /// Generate the crystal graph grown from the based gallery.
    Crystal(CrystalArgs),
    /// Dimension vectors and polytope of a module over the doubled quiver.
    Quiver(QuiverArgs),
    /// Polytope arithmetic: Minkowski sums, the primitive generators, and
    /// the union check.
    Polytope(PolytopeArgs),
    /// Weyl dimension and weight multiplicities of a highest-weight module.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct RootArgs {
    /// Root-system family; only `A` is implemented.
    #[arg(long = "type", default_value = "A")]
    family: String,
    #[arg(long)]
    rank: usize,
    /// Dominant coweight in fundamental-coweight coordinates, e.g. `1,1`.
    #[arg(long, allow_hyphen_values = true)]
    coweight: String,
}

#[derive(Args)]
struct GalleryArgs {
    #[command(flatten)]
    root: RootArgs,
    /// Keep LS galleries only.
    #[arg(long)]
    ls: bool,
    /// Keep galleries of this weight only (fundamental-coweight coordinates).
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Emit `{"total": .., "by_weight": ..}` instead of the gallery list.
    #[arg(long)]
    count_only: bool,
    /// Enumeration cap; also settable via ALCOVE_BUDGET.
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads; output is identical for any job count.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write an SVG picture of the based gallery.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CrystalFormat {
    Json,
    Dot,
}

#[derive(Args)]
struct CrystalArgs {
    #[command(flatten)]
    root: RootArgs,
    #[arg(long, value_enum, default_value_t = CrystalFormat::Json)]
    format: CrystalFormat,
    /// Include the gallery payloads in JSON output.
    #[arg(long)]
    full: bool,
    /// Node cap; also settable via ALCOVE_BUDGET.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Coordinate,
    Exhaustive,
}

#[derive(Args)]
struct QuiverArgs {
    /// Maya module: `--maya N SET`, e.g. `--maya 5 2,4,5`.
    #[arg(long, num_args = 2, value_names = ["N", "SET"], conflicts_with = "module")]
    maya: Option<Vec<String>>,
    /// Module description file (JSON).
    #[arg(long)]
    module: Option<PathBuf>,
    /// Compute the module polytope as well.
    #[arg(long)]
    pol: bool,
    #[arg(long, value_enum, default_value_t = MethodArg::Coordinate)]
    method: MethodArg,
    /// Prime for the exhaustive backend.
    #[arg(long, default_value_t = 2)]
    prime: u32,
}

#[derive(Args)]
struct PolytopeArgs {
    /// Minkowski sum of two polytope files.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    minkowski: Option<Vec<PathBuf>>,
    /// Emit the four primitive rank-2 generators.
    #[arg(long)]
    primitive_a2: bool,
    /// `--union-check PART... WHOLE`: do the parts tile the whole?
    #[arg(long, num_args = 2..=4, value_names = ["PART", "WHOLE"])]
    union_check: Option<Vec<PathBuf>>,
    /// Write an SVG picture of the result.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    root: RootArgs,
}

#[derive(Debug)]
enum CliError {
    Alcove(AlcoveError),
    Io(std::io::Error),
    Json(serde_json::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Alcove(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Json(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<AlcoveError> for CliError {
    fn from(e: AlcoveError) -> Self {
        CliError::Alcove(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Alcove(AlcoveError::BudgetExceeded { .. }) => 3,
            CliError::Alcove(AlcoveError::MethodPrecondition(_)) => 4,
            _ => 2,
        }
    }
}

type CliResult = Result<(), CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Gallery(args) => cmd_gallery(args),
        Command::Crystal(args) => cmd_crystal(args),
        Command::Quiver(args) => cmd_quiver(args),
        Command::Polytope(args) => cmd_polytope(args),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

fn parse_root(args: &RootArgs) -> Result<(RootSystem, LatticeVector), CliError> {
    if args.family != "A" {
        return Err(CliError::Usage(format!(
            "unsupported root-system family {:?}; only A is implemented",
            args.family
        )));
    }
    let rs = RootSystem::type_a(args.rank)?;
    let coords = parse_coords(&args.coweight, args.rank)?;
    let lam = LatticeVector::coweight(coords);
    if !lam.is_dominant(&rs)? {
        return Err(CliError::Alcove(AlcoveError::NonDominant(
            args.coweight.clone(),
        )));
    }
    Ok((rs, lam))
}

fn parse_coords(text: &str, rank: usize) -> Result<Vec<i64>, CliError> {
    let coords = text
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<Vec<i64>, _>>()
        .map_err(|e| CliError::Usage(format!("bad coordinate list {text:?}: {e}")))?;
    if coords.len() != rank {
        return Err(CliError::Usage(format!(
            "coordinate list {text:?} has length {}, expected rank {rank}",
            coords.len()
        )));
    }
    Ok(coords)
}

fn budget_from(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("ALCOVE_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(1_000_000)
}

fn coords_key(coords: &[i64]) -> String {
    coords
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn split_starts(total: usize, jobs: usize) -> Vec<Vec<usize>> {
    // Contiguous blocks keep the global (chunk, position) order canonical.
    let jobs = jobs.clamp(1, total.max(1));
    let base = total / jobs;
    let extra = total % jobs;
    let mut chunks = Vec::with_capacity(jobs);
    let mut next = 0;
    for j in 0..jobs {
        let len = base + usize::from(j < extra);
        chunks.push((next..next + len).collect());
        next += len;
    }
    chunks
}

/// A gallery row tagged with its position in the canonical walk order.
type OrderedDto = (usize, u64, GalleryDto);

struct GalleryRun {
    histogram: BTreeMap<Vec<i64>, u64>,
    galleries: Vec<OrderedDto>,
}

fn run_gallery_walk(
    rs: &RootSystem,
    gamma: &Gallery,
    args: &GalleryArgs,
    budget: u64,
) -> Result<GalleryRun, CliError> {
    let lam = weight(rs, gamma)?;
    let dim_gamma = gallery_dim(rs, gamma)?;
    let weight_filter: Option<Vec<i64>> = match &args.weight {
        Some(text) => Some(parse_coords(text, rs.rank())?),
        None => None,
    };
    let opts = WalkOptions {
        positively_folded_only: args.ls,
        budget,
    };

    let starts = alcove::affine::alcoves_at_origin(rs)?.len();
    let chunks = split_starts(starts, args.jobs);
    let mut partials: Vec<Result<GalleryRun, AlcoveError>> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for (chunk_idx, chunk) in chunks.iter().enumerate() {
            let lam = lam.clone();
            let weight_filter = weight_filter.clone();
            handles.push(scope.spawn(move || {
                let mut histogram: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
                let mut galleries = Vec::new();
                let mut seen: u64 = 0;
                walk_same_type(rs, gamma, opts, Some(chunk), |leaf| {
                    seen += 1;
                    if args.ls && !leaf_is_ls(rs, &lam, dim_gamma, leaf)? {
                        return Ok(());
                    }
                    let coords = leaf.weight.coords().to_vec();
                    if let Some(filter) = &weight_filter {
                        if *filter != coords {
                            return Ok(());
                        }
                    }
                    *histogram.entry(coords).or_insert(0) += 1;
                    if !args.count_only {
                        galleries.push((chunk_idx, seen, gallery_to_dto(rs, &leaf.to_gallery())?));
                    }
                    Ok(())
                })?;
                Ok(GalleryRun {
                    histogram,
                    galleries,
                })
            }));
        }
        for handle in handles {
            partials.push(handle.join().expect("enumeration worker panicked"));
        }
    });

    let mut histogram = BTreeMap::new();
    let mut galleries = Vec::new();
    for partial in partials {
        let partial = partial?;
        for (k, v) in partial.histogram {
            *histogram.entry(k).or_insert(0) += v;
        }
        galleries.extend(partial.galleries);
    }
    // canonical global order: start-alcove chunks interleave round-robin, so
    // sort by (start index, position within the walk)
    galleries.sort_by_key(|&(chunk, seen, _)| (chunk, seen));
    Ok(GalleryRun {
        histogram,
        galleries,
    })
}

fn cmd_gallery(args: GalleryArgs) -> CliResult {
    let (rs, lam) = parse_root(&args.root)?;
    let gamma = minimal_gallery(&rs, &lam)?;
    let budget = budget_from(args.budget);
    let run = run_gallery_walk(&rs, &gamma, &args, budget)?;

    if let Some(path) = &args.svg {
        let mut scene = svg::Scene::new(&rs).with_arrangement();
        scene.add_gallery(&gamma)?;
        std::fs::write(path, scene.render())?;
    }

    if args.count_only {
        let total: u64 = run.histogram.values().sum();
        let by_weight: BTreeMap<String, u64> = run
            .histogram
            .iter()
            .map(|(k, v)| (coords_key(k), *v))
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "total": total,
                "by_weight": by_weight,
            }))?
        );
    } else {
        let list: Vec<&GalleryDto> = run.galleries.iter().map(|(_, _, g)| g).collect();
        println!("{}", serde_json::to_string_pretty(&list)?);
    }
    Ok(())
}

fn cmd_crystal(args: CrystalArgs) -> CliResult {
    let (rs, lam) = parse_root(&args.root)?;
    let gamma = minimal_gallery(&rs, &lam)?;
    let cap = budget_from(args.budget);
    let graph = generate_crystal(&rs, &gamma, cap as usize)?;
    let report = verify_axioms(&rs, &graph)?;
    if !report.passed() {
        eprintln!("warning: generated graph violates the crystal axioms\n{report}");
    }
    match args.format {
        CrystalFormat::Dot => print!("{}", crystal_to_dot(&graph)),
        CrystalFormat::Json => {
            let dto = crystal_to_dto(&rs, &graph, args.full)?;
            println!("{}", serde_json::to_string_pretty(&dto)?);
        }
    }
    Ok(())
}

fn cmd_quiver(args: QuiverArgs) -> CliResult {
    let module = match (&args.maya, &args.module) {
        (Some(maya), None) => {
            let n = maya[0]
                .parse::<usize>()
                .map_err(|e| CliError::Usage(format!("bad Maya size {:?}: {e}", maya[0])))?;
            let set = maya[1]
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<Vec<usize>, _>>()
                .map_err(|e| CliError::Usage(format!("bad Maya set {:?}: {e}", maya[1])))?;
            alcove::quiver::maya_module(n, &set)?
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            let dto: ModuleFileDto = serde_json::from_str(&text)?;
            module_from_dto(&dto)?
        }
        _ => {
            return Err(CliError::Usage(
                "exactly one of --maya and --module is required".into(),
            ))
        }
    };
    let method = match args.method {
        MethodArg::Coordinate => SubmoduleMethod::Coordinate,
        MethodArg::Exhaustive => SubmoduleMethod::Exhaustive { prime: args.prime },
    };
    let dim_vectors = submodule_dim_vectors(&module, method)?;
    let mut out = json!({
        "dims": module.dims(),
        "preprojective": verify_preprojective(&module)?,
        "dim_vectors": dim_vectors.iter().collect::<Vec<_>>(),
    });
    if args.pol {
        let polytope = pol_with(&module, method)?;
        out["polytope"] = serde_json::to_value(polytope_to_dto(&polytope))?;
    }
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(())
}

fn read_polytope(path: &PathBuf) -> Result<alcove::polytope::LatticePolytope, CliError> {
    let text = std::fs::read_to_string(path)?;
    let dto: PolytopeDto = serde_json::from_str(&text)?;
    Ok(polytope_from_dto(&dto)?)
}

fn cmd_polytope(args: PolytopeArgs) -> CliResult {
    let modes = usize::from(args.minkowski.is_some())
        + usize::from(args.primitive_a2)
        + usize::from(args.union_check.is_some());
    if modes != 1 {
        return Err(CliError::Usage(
            "pick exactly one of --minkowski, --primitive-a2, --union-check".into(),
        ));
    }
    let rs = RootSystem::type_a(2)?;
    if let Some(paths) = &args.minkowski {
        let a = read_polytope(&paths[0])?;
        let b = read_polytope(&paths[1])?;
        let sum = minkowski_sum(&a, &b)?;
        if let Some(path) = &args.svg {
            let mut scene = svg::Scene::new(&rs).with_arrangement();
            scene.add_polytope(&sum, "#60a5fa");
            std::fs::write(path, scene.render())?;
        }
        println!("{}", serde_json::to_string_pretty(&polytope_to_dto(&sum))?);
    } else if args.primitive_a2 {
        let prim = primitive_a2();
        if let Some(path) = &args.svg {
            let mut scene = svg::Scene::new(&rs).with_arrangement();
            scene.add_polytope(&prim.beta1, "#60a5fa");
            scene.add_polytope(&prim.beta2, "#f59e0b");
            scene.add_polytope(&prim.alpha1, "#16a34a");
            scene.add_polytope(&prim.alpha2, "#dc2626");
            std::fs::write(path, scene.render())?;
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "alpha1": polytope_to_dto(&prim.alpha1),
                "alpha2": polytope_to_dto(&prim.alpha2),
                "beta1": polytope_to_dto(&prim.beta1),
                "beta2": polytope_to_dto(&prim.beta2),
            }))?
        );
    } else if let Some(paths) = &args.union_check {
        let (part_paths, whole_path) = paths.split_at(paths.len() - 1);
        let parts = part_paths
            .iter()
            .map(read_polytope)
            .collect::<Result<Vec<_>, _>>()?;
        let whole = read_polytope(&whole_path[0])?;
        if let Some(path) = &args.svg {
            let mut scene = svg::Scene::new(&rs).with_arrangement();
            scene.add_polytope(&whole, "#60a5fa");
            for part in &parts {
                scene.add_polytope(part, "#f59e0b");
            }
            std::fs::write(path, scene.render())?;
        }
        let ok = union_equals(&parts, &whole)?;
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "union_equals": ok }))?
        );
    }
    Ok(())
}

fn cmd_oracle(args: OracleArgs) -> CliResult {
    let (rs, lam) = parse_root(&args.root)?;
    let dim = weyl_dim(&rs, &lam)?;
    let table = weight_multiplicities(&rs, &lam)?;
    let multiplicities: BTreeMap<String, u64> =
        table.iter().map(|(k, v)| (coords_key(k), *v)).collect();
    println!(
        "{}",
        serde_json::to_string_pretty(&json!({
            "dim": dim,
            "multiplicities": multiplicities,
        }))?
    );
    Ok(())
}

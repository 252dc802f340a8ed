use clap::{Args, Parser, Subcommand, ValueEnum};
use degdiam::builtins::{self, Builtin};
use degdiam::cdd::CddParams;
use degdiam::cover;
use degdiam::digraph::Digraph;
use degdiam::io;
use degdiam::perm::Permutation;
use degdiam::search::{self, SearchMode, SearchSpec};
use degdiam::verify::{self, ClaimStatus};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_CLAIM_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "degdiam",
    about = "Workbench for dense digraphs of small degree and diameter",
    version
)]
struct Cli {
    /// Output style: human tables, line records, or GraphViz
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (reserved; all current operations are single-threaded)
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Element cap for group enumerations
    #[arg(long, global = true, default_value_t = cover::DEFAULT_MAX_ELEMENTS)]
    max_elems: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a named object (digraph, factors, or groupoid table)
    Build(BuildArgs),
    /// Diameter of a digraph file
    Diameter { file: PathBuf },
    /// Split a digraph file into 1-factors
    Factorize { file: PathBuf },
    /// Enumerate the group generated by a factor file's permutations
    CoverGroup { file: PathBuf },
    /// Build a cyclic-difference digraph from parameters
    Cdd(CddArgs),
    /// Exhaustive or randomized search for degree-2 digraphs
    Search(SearchArgs),
    /// Re-derive the published claims and report their status
    Verify {
        /// Run a single claim (e.g. example7)
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Args)]
struct BuildArgs {
    /// One of: example1, example2, alegre, alegre_factors, k3, kautz,
    /// hs, example10_2, example10_3, example11_companions
    name: String,
    /// Kautz degree (with name = kautz)
    #[arg(long)]
    d: Option<usize>,
    /// Kautz diameter (with name = kautz)
    #[arg(long = "D")]
    diam: Option<usize>,
    /// Prime parameter (with name = hs)
    #[arg(long)]
    p: Option<usize>,
    /// Write files into this directory instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CddArgs {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    /// Column permutation in cycle notation, e.g. "(0,2,4)"
    #[arg(long)]
    pi: String,
    /// Row offsets, comma separated, e.g. 1,4,4,1,4
    #[arg(long)]
    t: String,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    degree: usize,
    #[arg(long)]
    diameter: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    mode: ModeArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Node budget (exhaustive) or restart budget (random)
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Pruned,
    Random,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    };
    ExitCode::from(code)
}

fn run(cli: &Cli) -> Result<u8, String> {
    match &cli.cmd {
        Cmd::Build(args) => cmd_build(cli, args),
        Cmd::Diameter { file } => cmd_diameter(cli, file),
        Cmd::Factorize { file } => cmd_factorize(cli, file),
        Cmd::CoverGroup { file } => cmd_cover_group(cli, file),
        Cmd::Cdd(args) => cmd_cdd(cli, args),
        Cmd::Search(args) => cmd_search(cli, args),
        Cmd::Verify { only } => cmd_verify(cli, only.as_deref()),
    }
}

fn emit(path: Option<&Path>, name: &str, content: &str) -> Result<(), String> {
    match path {
        Some(dir) => {
            let file = dir.join(name);
            std::fs::write(&file, content)
                .map_err(|e| format!("writing {}: {e}", file.display()))?;
            println!("wrote {}", file.display());
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn digraph_output(cli: &Cli, g: &Digraph, name: &str) -> String {
    if cli.format == Format::Dot {
        io::write_dot(g, name)
    } else {
        io::write_digraph(g)
    }
}

fn cmd_build(cli: &Cli, args: &BuildArgs) -> Result<u8, String> {
    let out = args.out.as_deref();
    match args.name.as_str() {
        "kautz" => {
            let (d, diam) = match (args.d, args.diam) {
                (Some(d), Some(diam)) if d >= 1 && diam >= 1 => (d, diam),
                _ => return Err("kautz needs --d and --D (both >= 1)".into()),
            };
            let g = builtins::kautz(d, diam);
            emit(out, &format!("kautz_{d}_{diam}.dg"), &digraph_output(cli, &g, "kautz"))?;
        }
        "hs" => {
            let p = args.p.ok_or("hs needs --p <prime>")?;
            let (_, g) =
                degdiam::groupoid::hoffman_singleton(p as u64).map_err(|e| e.to_string())?;
            emit(out, &format!("hs_{p}.dg"), &digraph_output(cli, &g, "hs"))?;
        }
        name => match builtins::builtin(name).map_err(|e| e.to_string())? {
            Builtin::Digraph(g) => {
                emit(out, &format!("{name}.dg"), &digraph_output(cli, &g, name))?;
            }
            Builtin::Factors(f) => {
                let n = f[0].size();
                emit(out, &format!("{name}.fac"), &io::write_factors(n, &f))?;
                let g = Digraph::from_factors(&f).map_err(|e| e.to_string())?;
                emit(out, &format!("{name}.dg"), &digraph_output(cli, &g, name))?;
            }
            Builtin::Groupoid(t) => {
                emit(out, &format!("{name}.gt"), &io::write_groupoid(&t))?;
                let g = t.cayley_digraph().map_err(|e| e.to_string())?;
                emit(out, &format!("{name}.dg"), &digraph_output(cli, &g, name))?;
            }
        },
    }
    Ok(EXIT_OK)
}

fn read_digraph(file: &Path) -> Result<Digraph, String> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| format!("reading {}: {e}", file.display()))?;
    io::parse_digraph(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn cmd_diameter(cli: &Cli, file: &Path) -> Result<u8, String> {
    let g = read_digraph(file)?;
    let d = g.diameter().map_err(|e| e.to_string())?;
    match cli.format {
        Format::Records => println!("diameter={d}"),
        _ => println!("diameter {d}"),
    }
    Ok(EXIT_OK)
}

fn cmd_factorize(cli: &Cli, file: &Path) -> Result<u8, String> {
    let g = read_digraph(file)?;
    let f = g.factorize();
    match cli.format {
        Format::Records => {
            for (i, p) in f.factors.iter().enumerate() {
                println!("factor={i} perm={p}");
            }
        }
        _ => {
            for p in &f.factors {
                println!("{p}");
            }
        }
    }
    Ok(EXIT_OK)
}

fn read_factors(file: &Path) -> Result<Vec<Permutation>, String> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| format!("reading {}: {e}", file.display()))?;
    if let Ok((_, factors)) = io::parse_factors(&text) {
        return Ok(factors);
    }
    // also accept a digraph file, factorizing it first
    let g = io::parse_digraph(&text).map_err(|e| format!("{}: {e}", file.display()))?;
    Ok(g.factorize().factors)
}

fn cmd_cover_group(cli: &Cli, file: &Path) -> Result<u8, String> {
    let factors = read_factors(file)?;
    let res = cover::group_bfs_with(&factors, cli.max_elems, true).map_err(|e| e.to_string())?;
    if !res.complete {
        eprintln!(
            "element cap {} reached after {} elements; raise --max-elems",
            cli.max_elems, res.order
        );
        return Ok(EXIT_RESOURCE_CAP);
    }
    let extremal = res.histogram.last().copied().unwrap_or(0);
    match cli.format {
        Format::Records => println!(
            "order={} diameter={} extremal={extremal}",
            res.order, res.diameter
        ),
        _ => println!("order {} diameter {} extremal {extremal}", res.order, res.diameter),
    }
    Ok(EXIT_OK)
}

fn cmd_cdd(cli: &Cli, args: &CddArgs) -> Result<u8, String> {
    let pi = Permutation::parse_cycles(&args.pi, args.a).map_err(|e| e.to_string())?;
    let t: Vec<usize> = args
        .t
        .split(',')
        .map(|s| s.trim().parse().map_err(|e| format!("offset list: {e}")))
        .collect::<Result<_, _>>()?;
    let params = CddParams::new(args.a, args.b, pi, t).map_err(|e| e.to_string())?;
    let g = params.digraph();
    let d = g.diameter().map_err(|e| e.to_string())?;
    match cli.format {
        Format::Dot => print!("{}", io::write_dot(&g, "cdd")),
        Format::Records => {
            println!("n={} companion={} diameter={d}", g.n(), params.companion());
        }
        Format::Text => {
            println!("n {} degree 2", g.n());
            println!("companion {}", params.companion());
            println!("diameter {d}");
        }
    }
    Ok(EXIT_OK)
}

fn cmd_search(cli: &Cli, args: &SearchArgs) -> Result<u8, String> {
    if args.degree != 2 {
        return Err("only degree-2 search is implemented".into());
    }
    if args.n < 3 {
        return Err("search needs --n >= 3".into());
    }
    let mode = match args.mode {
        ModeArg::Exhaustive => SearchMode::Exhaustive,
        ModeArg::Pruned => SearchMode::Pruned,
        ModeArg::Random => SearchMode::Random,
    };
    let res = match mode {
        SearchMode::Random => {
            let spec = SearchSpec::random(args.n, args.diameter, args.seed, args.budget.unwrap_or(50));
            search::random_search(&spec)
        }
        _ => {
            let mut spec = SearchSpec::exhaustive(args.n, args.diameter);
            if let Some(b) = args.budget {
                spec.budget = b;
            }
            search::enumerate(&spec)
        }
    };
    let z = Permutation::rotation(args.n, 1);
    for (i, y) in res.representatives.iter().enumerate() {
        let g = Digraph::from_factors(&[z.clone(), y.clone()]).unwrap();
        let aut = degdiam::iso::automorphism_order(&g);
        let recip = g.reciprocal_edge_count();
        match cli.format {
            Format::Records => println!(
                "class={i} aut={aut} reciprocal={recip} companion={y}"
            ),
            _ => println!("class {i}: |Aut| {aut}, reciprocal edges {recip}, companion {y}"),
        }
    }
    if cli.format != Format::Records {
        println!(
            "classes {} (nodes {}, pruned {})",
            res.representatives.len(),
            res.stats.nodes,
            res.stats.pruned
        );
    }
    if res.partial {
        eprintln!("node budget exhausted; results may be incomplete");
        return Ok(EXIT_RESOURCE_CAP);
    }
    Ok(EXIT_OK)
}

fn cmd_verify(cli: &Cli, only: Option<&str>) -> Result<u8, String> {
    let claims = match only {
        Some(id) => {
            let claim = verify::run_only(id, cli.max_elems)
                .ok_or_else(|| format!("unknown claim id {id:?}"))?;
            vec![claim]
        }
        None => verify::run_all(cli.max_elems).claims,
    };
    let mut failures = 0;
    for c in &claims {
        if c.status == ClaimStatus::Fail {
            failures += 1;
        }
        match cli.format {
            Format::Records => println!("claim={} status={} details={:?}", c.id, c.status, c.details),
            _ => {
                println!("[{}] {}: {}", c.status, c.id, c.description);
                println!("    {}", c.details);
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} claim(s) failed");
        return Ok(EXIT_CLAIM_FAILURE);
    }
    Ok(EXIT_OK)
}

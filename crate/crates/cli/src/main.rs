//! modmotif: solvers, oracles, instance generators and verifiers for graph
//! motif search under modularity.
//!
//! Exit codes: 0 success/found, 1 no solution, 2 usage or input error,
//! 3 verification failure, 4 oracle budget exceeded.

mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modmotif::error::Error;
use modmotif::graph::{
    parse_graph, parse_motif, serialize_graph, serialize_motif, ColorMultiset, ColorUniverse,
    VertexColoredGraph,
};
use modmotif::mdtree::{decompose, validate_tree};
use modmotif::oracle::{
    self, count_substitutions, parse_set_system, OracleBudget,
};
use modmotif::reduce::{
    self, lemma2_bound, map_cover_forward, map_independent_set_forward, map_motif_solution_back,
    map_substitute_back, Certificate, GeneratedInstance,
};
use modmotif::solver::{enumerate_module_motifs, solve_module_motif, solve_strong_only};
use modmotif::vset::VertexSet;

#[derive(Parser)]
#[command(name = "modmotif", version, about = "Graph motif search under modularity")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct FormatArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Shorthand for --format json
    #[arg(long)]
    json: bool,
}

impl FormatArgs {
    fn get(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the modular decomposition tree of a graph
    Decompose {
        #[arg(short, long)]
        graph: PathBuf,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Motif solvers over the decomposition tree
    Solve {
        #[command(subcommand)]
        what: SolveCmd,
    },
    /// Exhaustive reference solvers (budgeted)
    Oracle {
        #[command(subcommand)]
        what: OracleCmd,
    },
    /// Instance generators
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Verifiers for reductions and trees
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum SolveCmd {
    /// Find a module whose colors equal the motif
    ModuleMotif {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        motif: PathBuf,
        /// Enumerate all distinct solution vertex sets
        #[arg(long)]
        all: bool,
        /// Enumeration cap for --all
        #[arg(long, default_value_t = 1000)]
        cap: usize,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Scan strong modules only (tree nodes)
    StrongOnly {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        motif: PathBuf,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// List-colored variant: per-vertex color sets, bijection onto the motif
    ListColored {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        motif: PathBuf,
        #[command(flatten)]
        format: FormatArgs,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// List every module of the graph
    EnumerateModules {
        #[arg(short, long)]
        graph: PathBuf,
        /// Max vertex count the oracle accepts
        #[arg(long)]
        budget: Option<usize>,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Exhaustive module-motif search
    FindMotif {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        motif: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Maximum independent set (colors ignored)
    Mis {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Minimum set cover of a set-system file
    Setcover {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Exact cover by 3-sets of a set-system file
    X3c {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
        #[command(flatten)]
        format: FormatArgs,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Expand an independent-set instance into a max-motif tree
    Mis2maxmotif {
        /// Source graph (.gm; colors ignored)
        #[arg(short, long)]
        input: PathBuf,
        /// Output graph path; the motif is written next to it as .motif
        #[arg(short, long)]
        out: PathBuf,
        /// Write the reduction certificate as JSON
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Expand a set-cover instance into a min-substitute tree
    Sc2minsubst {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Expand an exact-cover instance into a module-motif path collection
    X3c2module {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Write a reproducible corpus of random (graph, motif) instances
    Corpus {
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        colors: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Map an independent set forward and check size/colorfulness
    Lemma1 {
        #[arg(short, long)]
        cert: PathBuf,
        /// Independent set file: source vertex names, whitespace-separated
        #[arg(short, long)]
        solution: PathBuf,
        /// Write the mapped solution vertices here
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Map a max-motif solution back and check the independent-set bound
    Lemma2 {
        #[arg(short, long)]
        cert: PathBuf,
        /// Solution file: generated vertex names, whitespace-separated
        #[arg(short, long)]
        solution: PathBuf,
    },
    /// Map a set cover forward and check the substitution count
    Lemma3 {
        #[arg(short, long)]
        cert: PathBuf,
        /// Cover file: set indices (S1 or 1), whitespace-separated
        #[arg(short, long)]
        solution: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Map a min-substitute solution back and check the cover bound
    Lemma4 {
        #[arg(short, long)]
        cert: PathBuf,
        #[arg(short, long)]
        solution: PathBuf,
    },
    /// Run the exact-cover oracle and the motif solver on the generated
    /// instance and check they agree
    X3cEquiv {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Decompose a graph and check every tree invariant
    Tree {
        #[arg(short, long)]
        graph: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Budget(_) => 4,
                Error::InvalidSolution(_) => 3,
                _ => 2,
            })
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<(VertexColoredGraph, ColorUniverse), Error> {
    let mut universe = ColorUniverse::new();
    let g = parse_graph(&read(path)?, &mut universe)?;
    Ok((g, universe))
}

fn load_instance(
    graph: &Path,
    motif: &Path,
) -> Result<(VertexColoredGraph, ColorMultiset, ColorUniverse), Error> {
    let mut universe = ColorUniverse::new();
    let g = parse_graph(&read(graph)?, &mut universe)?;
    let m = parse_motif(&read(motif)?, &mut universe)?;
    Ok((g, m, universe))
}

fn budget_from(opt: Option<usize>) -> OracleBudget {
    match opt {
        Some(n) => OracleBudget::with_max_n(n),
        None => OracleBudget::default(),
    }
}

fn run(cmd: Cmd) -> Result<u8, Error> {
    match cmd {
        Cmd::Decompose { graph, format } => {
            let (g, _) = load_graph(&graph)?;
            let tree = decompose(&g)?;
            match format.get() {
                Format::Json => print!("{}", output::tree_to_json(&g, &tree)),
                Format::Dot => print!("{}", output::tree_to_dot(&g, &tree)),
                Format::Text => print!("{}", output::tree_to_text(&g, &tree)),
            }
            Ok(0)
        }
        Cmd::Solve { what } => run_solve(what),
        Cmd::Oracle { what } => run_oracle(what),
        Cmd::Gen { what } => run_gen(what),
        Cmd::Verify { what } => run_verify(what),
    }
}

fn report_solution(
    g: &VertexColoredGraph,
    u: &ColorUniverse,
    format: Format,
    sol: Option<&modmotif::solver::MotifSolution>,
) -> u8 {
    match (format, sol) {
        (Format::Json, Some(sol)) => {
            output::print_json(&output::solution_json(g, u, sol));
            0
        }
        (Format::Json, None) => {
            output::print_json(&serde_json::json!({ "found": false }));
            1
        }
        (_, Some(sol)) => {
            println!("{}", output::vertices_line(g, sol));
            if let Some(assignment) = &sol.assignment {
                println!("{}", output::assignment_line(g, u, assignment));
            }
            0
        }
        (_, None) => {
            println!("no solution");
            1
        }
    }
}

fn run_solve(cmd: SolveCmd) -> Result<u8, Error> {
    match cmd {
        SolveCmd::ModuleMotif {
            graph,
            motif,
            all,
            cap,
            format,
        } => {
            let (g, m, u) = load_instance(&graph, &motif)?;
            let tree = decompose(&g)?;
            if !all {
                let sol = solve_module_motif(&g, &tree, &m)?;
                return Ok(report_solution(&g, &u, format.get(), sol.as_ref()));
            }
            let sols = enumerate_module_motifs(&g, &tree, &m, cap)?;
            match format.get() {
                Format::Json => {
                    let list: Vec<serde_json::Value> = sols
                        .iter()
                        .map(|s| output::solution_json(&g, &u, s))
                        .collect();
                    output::print_json(&serde_json::json!({
                        "found": !sols.is_empty(),
                        "count": sols.len(),
                        "solutions": list,
                    }));
                }
                _ => {
                    if sols.is_empty() {
                        println!("no solution");
                    }
                    for s in &sols {
                        println!("{}", output::vertices_line(&g, s));
                    }
                }
            }
            Ok(if sols.is_empty() { 1 } else { 0 })
        }
        SolveCmd::StrongOnly {
            graph,
            motif,
            format,
        } => {
            let (g, m, u) = load_instance(&graph, &motif)?;
            let tree = decompose(&g)?;
            let sol = solve_strong_only(&g, &tree, &m)?;
            Ok(report_solution(&g, &u, format.get(), sol.as_ref()))
        }
        SolveCmd::ListColored {
            graph,
            motif,
            format,
        } => {
            let (g, m, u) = load_instance(&graph, &motif)?;
            let tree = decompose(&g)?;
            let sol = modmotif::listcolor::solve_list_colored(&g, &tree, &m, m.k())?;
            Ok(report_solution(&g, &u, format.get(), sol.as_ref()))
        }
    }
}

fn run_oracle(cmd: OracleCmd) -> Result<u8, Error> {
    match cmd {
        OracleCmd::EnumerateModules {
            graph,
            budget,
            format,
        } => {
            let (g, _) = load_graph(&graph)?;
            let modules = oracle::enumerate_modules(&g, &budget_from(budget))?;
            match format.get() {
                Format::Json => {
                    let list: Vec<Vec<String>> =
                        modules.iter().map(|s| g.vertex_names(s)).collect();
                    output::print_json(&serde_json::json!({
                        "count": modules.len(),
                        "modules": list,
                    }));
                }
                _ => {
                    for m in &modules {
                        println!("{}", g.vertex_names(m).join(" "));
                    }
                }
            }
            Ok(0)
        }
        OracleCmd::FindMotif {
            graph,
            motif,
            budget,
            format,
        } => {
            let (g, m, _) = load_instance(&graph, &motif)?;
            let found = oracle::find_module_motif_brute(&g, &m, &budget_from(budget))?;
            match format.get() {
                Format::Json => match &found {
                    Some(set) => output::print_json(&serde_json::json!({
                        "found": true,
                        "vertices": g.vertex_names(set),
                    })),
                    None => output::print_json(&serde_json::json!({ "found": false })),
                },
                _ => match &found {
                    Some(set) => println!("{}", g.vertex_names(set).join(" ")),
                    None => println!("no solution"),
                },
            }
            Ok(if found.is_some() { 0 } else { 1 })
        }
        OracleCmd::Mis {
            graph,
            budget,
            format,
        } => {
            let (g, _) = load_graph(&graph)?;
            let set = oracle::max_independent_set_brute(&g, &budget_from(budget))?;
            match format.get() {
                Format::Json => output::print_json(&serde_json::json!({
                    "size": set.len(),
                    "vertices": g.vertex_names(&set),
                })),
                _ => println!("{}", g.vertex_names(&set).join(" ")),
            }
            Ok(0)
        }
        OracleCmd::Setcover {
            input,
            budget,
            format,
        } => {
            let (x, sets) = parse_set_system(&read(&input)?)?;
            let cover = oracle::min_set_cover_brute(x, &sets, &budget_from(budget))?;
            match format.get() {
                Format::Json => output::print_json(&serde_json::json!({
                    "size": cover.len(),
                    "sets": cover.iter().map(|i| i + 1).collect::<Vec<_>>(),
                })),
                _ => println!(
                    "{}",
                    cover
                        .iter()
                        .map(|i| format!("S{}", i + 1))
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
            }
            Ok(0)
        }
        OracleCmd::X3c {
            input,
            budget,
            format,
        } => {
            let (x, sets) = parse_set_system(&read(&input)?)?;
            let cover = oracle::x3c_brute(x, &sets, &budget_from(budget))?;
            match format.get() {
                Format::Json => match &cover {
                    Some(c) => output::print_json(&serde_json::json!({
                        "found": true,
                        "sets": c.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    })),
                    None => output::print_json(&serde_json::json!({ "found": false })),
                },
                _ => match &cover {
                    Some(c) => println!(
                        "{}",
                        c.iter()
                            .map(|i| format!("S{}", i + 1))
                            .collect::<Vec<_>>()
                            .join(" ")
                    ),
                    None => println!("no exact cover"),
                },
            }
            Ok(if cover.is_some() { 0 } else { 1 })
        }
    }
}

fn write_generated(
    inst: &GeneratedInstance,
    out: &Path,
    provenance: Option<&Path>,
) -> Result<(), Error> {
    std::fs::write(out, serialize_graph(&inst.graph, &inst.universe))?;
    println!(
        "wrote {} ({} vertices, {} edges)",
        out.display(),
        inst.graph.n(),
        inst.graph.edge_count()
    );
    let motif_path = out.with_extension("motif");
    std::fs::write(&motif_path, serialize_motif(&inst.motif, &inst.universe))?;
    println!(
        "wrote {} (motif size {})",
        motif_path.display(),
        inst.motif.k()
    );
    if let Some(p) = provenance {
        let mut json = serde_json::to_string_pretty(&inst.certificate)?;
        json.push('\n');
        std::fs::write(p, json)?;
        println!("wrote {}", p.display());
    }
    Ok(())
}

fn run_gen(cmd: GenCmd) -> Result<u8, Error> {
    match cmd {
        GenCmd::Mis2maxmotif {
            input,
            out,
            provenance,
        } => {
            let (g, _) = load_graph(&input)?;
            let inst = reduce::mis_to_max_motif(&g)?;
            write_generated(&inst, &out, provenance.as_deref())?;
            Ok(0)
        }
        GenCmd::Sc2minsubst {
            input,
            out,
            provenance,
        } => {
            let (x, sets) = parse_set_system(&read(&input)?)?;
            let inst = reduce::set_cover_to_min_substitute(x, &sets)?;
            write_generated(&inst, &out, provenance.as_deref())?;
            Ok(0)
        }
        GenCmd::X3c2module {
            input,
            out,
            provenance,
        } => {
            let (x, sets) = parse_set_system(&read(&input)?)?;
            let inst = reduce::x3c_to_module_motif(x, &sets)?;
            write_generated(&inst, &out, provenance.as_deref())?;
            Ok(0)
        }
        GenCmd::Corpus {
            seed,
            out,
            count,
            min_n,
            max_n,
            colors,
        } => {
            if min_n == 0 || min_n > max_n {
                return Err(Error::input("need 0 < min-n <= max-n"));
            }
            // Corpus instances exist to be cross-checked against the
            // exhaustive oracles, so they must stay within the budget.
            let limit = OracleBudget::default().max_n;
            if max_n > limit {
                return Err(Error::input(format!(
                    "corpus sizes must stay within the oracle budget (max-n <= {limit})"
                )));
            }
            let stems = modmotif::corpus::write_corpus(&out, seed, count, min_n, max_n, colors)?;
            println!("wrote {} instances to {}", stems.len(), out.display());
            Ok(0)
        }
    }
}

fn load_certificate(path: &Path) -> Result<GeneratedInstance, Error> {
    let cert: Certificate = serde_json::from_str(&read(path)?)?;
    reduce::regenerate(&cert)
}

fn read_tokens(path: &Path) -> Result<Vec<String>, Error> {
    Ok(read(path)?
        .split_whitespace()
        .map(|t| t.to_string())
        .collect())
}

fn source_vertex_indices(
    inst: &GeneratedInstance,
    tokens: &[String],
) -> Result<Vec<usize>, Error> {
    let (names, _) = inst.source_graph()?;
    tokens
        .iter()
        .map(|t| {
            names
                .iter()
                .position(|n| n == t)
                .ok_or_else(|| Error::input(format!("unknown source vertex `{t}`")))
        })
        .collect()
}

fn generated_vertex_set(
    inst: &GeneratedInstance,
    tokens: &[String],
) -> Result<VertexSet, Error> {
    let mut set = VertexSet::empty(inst.graph.n());
    for t in tokens {
        match inst.graph.vertex_by_name(t) {
            Some(v) => set.insert(v),
            None => return Err(Error::input(format!("unknown generated vertex `{t}`"))),
        }
    }
    Ok(set)
}

fn set_indices(tokens: &[String], n_sets: usize) -> Result<Vec<usize>, Error> {
    tokens
        .iter()
        .map(|t| {
            let digits = t.strip_prefix('S').or_else(|| t.strip_prefix('s')).unwrap_or(t);
            let i: usize = digits
                .parse()
                .map_err(|_| Error::input(format!("invalid set index `{t}`")))?;
            if i == 0 || i > n_sets {
                return Err(Error::input(format!("set index {t} out of range")));
            }
            Ok(i - 1)
        })
        .collect()
}

fn write_solution(path: &Path, g: &VertexColoredGraph, set: &VertexSet) -> Result<(), Error> {
    let mut text = g.vertex_names(set).join(" ");
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

fn run_verify(cmd: VerifyCmd) -> Result<u8, Error> {
    match cmd {
        VerifyCmd::Lemma1 {
            cert,
            solution,
            out,
        } => {
            let inst = load_certificate(&cert)?;
            let tokens = read_tokens(&solution)?;
            let chosen = source_vertex_indices(&inst, &tokens)?;
            let (names, _) = inst.source_graph()?;
            let n = names.len();
            let mapped = map_independent_set_forward(&inst, &chosen)?;
            println!("independent set of size {} verified", chosen.len());
            println!("mapped solution is connected and colorful");
            println!(
                "size bound: |V'| = {} >= |IS|*n^2 = {}",
                mapped.len(),
                chosen.len() * n * n
            );
            if let Some(p) = out {
                write_solution(&p, &inst.graph, &mapped)?;
            }
            println!("VERIFIED");
            Ok(0)
        }
        VerifyCmd::Lemma2 { cert, solution } => {
            let inst = load_certificate(&cert)?;
            let set = generated_vertex_set(&inst, &read_tokens(&solution)?)?;
            let selected = map_motif_solution_back(&inst, &set)?;
            let (names, edges) = inst.source_graph()?;
            let bound = lemma2_bound(set.len(), edges.len(), names.len());
            println!(
                "independent set: {}",
                selected
                    .iter()
                    .map(|&v| names[v].clone())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!(
                "size bound: |V'_I| = {} >= ceil((|V'| - 2|E| - 1)/n^2) = {}",
                selected.len(),
                bound
            );
            println!("VERIFIED");
            Ok(0)
        }
        VerifyCmd::Lemma3 {
            cert,
            solution,
            out,
        } => {
            let inst = load_certificate(&cert)?;
            let (_, sets) = inst.source_set_system()?;
            let cover = set_indices(&read_tokens(&solution)?, sets.len())?;
            let mapped = map_cover_forward(&inst, &cover)?;
            let subs = count_substitutions(&inst.graph, &inst.motif, &mapped)?;
            println!("cover of size {} verified", cover.len());
            println!(
                "substitutions: {} = |cover| = {} (|V'| = |M| = {})",
                subs,
                cover.len(),
                inst.motif.k()
            );
            if let Some(p) = out {
                write_solution(&p, &inst.graph, &mapped)?;
            }
            println!("VERIFIED");
            Ok(0)
        }
        VerifyCmd::Lemma4 { cert, solution } => {
            let inst = load_certificate(&cert)?;
            let set = generated_vertex_set(&inst, &read_tokens(&solution)?)?;
            let subs = count_substitutions(&inst.graph, &inst.motif, &set)?;
            let cover = map_substitute_back(&inst, &set)?;
            println!(
                "cover: {}",
                cover
                    .iter()
                    .map(|i| format!("S{}", i + 1))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!(
                "cover bound: |S'| = {} <= s = {} substitutions",
                cover.len(),
                subs
            );
            println!("VERIFIED");
            Ok(0)
        }
        VerifyCmd::X3cEquiv { input, budget } => {
            let (x, sets) = parse_set_system(&read(&input)?)?;
            let brute = oracle::x3c_brute(x, &sets, &budget_from(budget))?;
            let inst = reduce::x3c_to_module_motif(x, &sets)?;
            let tree = decompose(&inst.graph)?;
            let solved = solve_module_motif(&inst.graph, &tree, &inst.motif)?;
            match &brute {
                Some(c) => println!(
                    "exact cover: {}",
                    c.iter()
                        .map(|i| format!("S{}", i + 1))
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
                None => println!("exact cover: none"),
            }
            match &solved {
                Some(s) => println!(
                    "module motif solution: {}",
                    inst.graph.vertex_names(&s.vertices).join(" ")
                ),
                None => println!("module motif solution: none"),
            }
            if brute.is_some() == solved.is_some() {
                println!("VERIFIED: both sides agree");
                Ok(0)
            } else {
                Err(Error::InvalidSolution(format!(
                    "oracle says {}, solver says {}",
                    if brute.is_some() { "yes" } else { "no" },
                    if solved.is_some() { "yes" } else { "no" }
                )))
            }
        }
        VerifyCmd::Tree { graph } => {
            let (g, _) = load_graph(&graph)?;
            let tree = decompose(&g)?;
            let problems = validate_tree(&g, &tree);
            if problems.is_empty() {
                println!("tree valid ({} nodes, {} leaves)", tree.node_count(), g.n());
                Ok(0)
            } else {
                for p in &problems {
                    println!("violation: {p}");
                }
                Err(Error::InvalidSolution(format!(
                    "{} tree invariant violations",
                    problems.len()
                )))
            }
        }
    }
}

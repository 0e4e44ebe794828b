use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pathcirc::circuit::ext_equal;
use pathcirc::emit::{
    snarkize_document, to_bristol_grouped, Capacity, CircuitDocument, CircuitKind, Metadata,
};
use pathcirc::graph::path_oracle;
use pathcirc::kp::{pad_path, path_verifier, path_verifier_gate_count, snarkize};
use pathcirc::universal::{encode_graph, universal_verifier};
use pathcirc::{BitVector, Budget, Enumeration, Graph, Path};

#[derive(Parser)]
#[command(
    name = "pathcirc",
    version,
    about = "Compile FSM graphs into path-verifying boolean circuits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Bristol,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Kp,
    Zkp,
}

#[derive(Subcommand)]
enum Command {
    /// Compile the verifier for paths of exactly K steps in one graph.
    Compile {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        length: usize,
        /// Enumerate at the widths of this many vertices (with --max-edges).
        #[arg(long, requires = "max_edges")]
        max_vertices: Option<usize>,
        #[arg(long, requires = "max_vertices")]
        max_edges: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compile the verifier taking the graph encoding as an input.
    CompileUniversal {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        max_edges: usize,
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Wrap a compiled verifier with the check on a claimed final state.
    Snarkize {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a circuit document on one input, most significant bit first.
    Eval {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// Check a path with both the direct oracle and the compiled circuit.
    VerifyPath {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        start: String,
        /// Comma-separated edge names; `id:NAME` is the identity on NAME.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        path: String,
        /// Claimed final vertex; defaults to where the path ends.
        #[arg(long)]
        end: Option<String>,
        /// Verifier length; defaults to the number of steps given.
        #[arg(long)]
        length: Option<usize>,
    },
    /// Print the hex encoding of a graph at the given capacity.
    EncodeGraph {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        max_edges: usize,
    },
    /// Decide whether two circuits compute the same function.
    Equiv {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value_t = 20)]
        max_width: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

type CliResult<T> = Result<T, String>;

fn domain<T>(r: pathcirc::Result<T>) -> CliResult<T> {
    r.map_err(|e| e.to_string())
}

fn read(path: &FsPath) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn read_graph(path: &FsPath) -> CliResult<Graph> {
    Graph::from_json(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_document(path: &FsPath) -> CliResult<CircuitDocument> {
    CircuitDocument::from_json(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(out: Option<&FsPath>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit(doc: &CircuitDocument, format: Format, out: Option<&FsPath>) -> CliResult<()> {
    let text = match format {
        Format::Json => doc.to_json(),
        Format::Bristol => {
            let circuit = domain(doc.circuit())?;
            let (ins, outs) = match &doc.metadata {
                Some(m) => (m.partition.input_groups(), m.partition.output_groups()),
                None => (vec![circuit.n_inputs()], vec![circuit.n_outputs()]),
            };
            domain(to_bristol_grouped(&circuit, &ins, &outs))?
        }
    };
    write(out, &text)
}

fn run(command: Command) -> CliResult<ExitCode> {
    let budget = domain(Budget::from_env())?;
    match command {
        Command::Compile {
            graph,
            length,
            max_vertices,
            max_edges,
            format,
            out,
        } => {
            let g = read_graph(&graph)?;
            let en = match (max_edges, max_vertices) {
                (Some(m), Some(n)) => domain(Enumeration::with_capacity(&g, m, n))?,
                _ => Enumeration::new(&g),
            };
            domain(budget.check_gates(domain(path_verifier_gate_count(&g, &en, length))?))?;
            let f = domain(path_verifier(&g, &en, length))?;
            let doc =
                CircuitDocument::new(f.circuit(), Some(Metadata::for_kp(&g, &en, length, &f)));
            emit(&doc, format, out.as_deref())?;
        }
        Command::CompileUniversal {
            max_vertices,
            max_edges,
            length,
            format,
            out,
        } => {
            let f = domain(universal_verifier(max_edges, max_vertices, length, &budget))?;
            let capacity = Capacity {
                max_edges,
                max_vertices,
            };
            let doc =
                CircuitDocument::new(f.circuit(), Some(Metadata::for_zkp(capacity, length, &f)));
            emit(&doc, format, out.as_deref())?;
        }
        Command::Snarkize {
            circuit,
            kind,
            format,
            out,
        } => {
            let doc = read_document(&circuit)?;
            let expected = match kind {
                Kind::Kp => CircuitKind::Kp,
                Kind::Zkp => CircuitKind::Zkp,
            };
            let found = doc.metadata.as_ref().map(|m| m.kind);
            if found != Some(expected) {
                return Err(format!(
                    "{} is not a {} verifier document (metadata kind {found:?})",
                    circuit.display(),
                    if kind == Kind::Kp { "kp" } else { "zkp" }
                ));
            }
            emit(&domain(snarkize_document(&doc))?, format, out.as_deref())?;
        }
        Command::Eval { circuit, input } => {
            let c = domain(read_document(&circuit)?.circuit())?;
            let input: BitVector = domain(input.parse())?;
            println!("{}", domain(c.eval(&input))?);
        }
        Command::VerifyPath {
            graph,
            start,
            path,
            end,
            length,
        } => {
            return verify_path(
                &read_graph(&graph)?,
                &start,
                &path,
                end.as_deref(),
                length,
                &budget,
            )
        }
        Command::EncodeGraph {
            graph,
            max_vertices,
            max_edges,
        } => {
            let g = read_graph(&graph)?;
            println!("{}", domain(encode_graph(&g, max_edges, max_vertices))?);
        }
        Command::Equiv { a, b, max_width } => {
            let a = domain(read_document(&a)?.circuit())?;
            let b = domain(read_document(&b)?.circuit())?;
            if domain(ext_equal(&a, &b, max_width))? {
                println!("equal");
            } else {
                println!("different");
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict(accept: bool) -> &'static str {
    if accept {
        "valid"
    } else {
        "invalid"
    }
}

fn verify_path(
    g: &Graph,
    start: &str,
    steps: &str,
    end: Option<&str>,
    length: Option<usize>,
    budget: &Budget,
) -> CliResult<ExitCode> {
    let names: Vec<&str> = steps
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let p = domain(Path::from_names(g, start, &names))?;
    let k = length.unwrap_or(names.len());
    let en = Enumeration::new(g);
    let witness = domain(pad_path(g, &en, &p, k))?;
    let claim = match end {
        Some(name) => en.vertex_code(domain(g.vertex(name))?),
        None => en.vertex_code(p.end(g)),
    };
    let start_code = en.vertex_code(p.start);

    let oracle = path_oracle(g, &en, &start_code, &witness);
    let oracle_accepts = oracle.valid && oracle.end == claim;

    domain(budget.check_gates(domain(path_verifier_gate_count(g, &en, k))?))?;
    let snark = snarkize(&domain(path_verifier(g, &en, k))?);
    let input = witness
        .iter()
        .fold(start_code, |acc, w| acc.concat(w))
        .concat(&claim);
    let circuit_accepts = domain(snark.eval(&input))?.bits()[0];

    println!("oracle: {}", verdict(oracle_accepts));
    println!("circuit: {}", verdict(circuit_accepts));
    if oracle_accepts != circuit_accepts {
        eprintln!("error: oracle and circuit disagree");
        return Ok(ExitCode::FAILURE);
    }
    Ok(if oracle_accepts {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

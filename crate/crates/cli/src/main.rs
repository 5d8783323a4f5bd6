use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pclist::bench::{run_algo, run_bench, verify, Algo, Answer, Repr, RunOutput, Suite};
use pclist::gen::{generate, GenSpec, Model};
use pclist::io::{parse_switch_set, read_edge_list_file, write_bench_csv, write_edge_list};
use pclist::{Error, Graph, WorkLedger};

#[derive(Parser)]
#[command(name = "pclist", version, about = "Graph algorithms on partially complemented adjacency lists")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a random graph as an edge-list file.
    Gen {
        #[arg(long)]
        model: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        avg_degree: Option<f64>,
        #[arg(long)]
        fraction: Option<f64>,
        #[arg(long)]
        k: Option<usize>,
        /// Side sizes for bipartite_gnp; defaults to n/2 each.
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run one algorithm on an edge-list file.
    Run {
        #[arg(long)]
        algo: String,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        source: usize,
        #[arg(long, value_enum, default_value_t = ReprArg::Out)]
        repr: ReprArg,
        /// One vertex id per line; required with `--repr seidel`.
        #[arg(long)]
        switch_set: Option<PathBuf>,
        /// Also run on plain adjacency lists.
        #[arg(long)]
        baseline: bool,
        /// Check the result against the oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Run a benchmark sweep and write CSV rows.
    Bench {
        #[arg(long)]
        suite: String,
        /// Comma-separated algorithm names.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        algos: Vec<String>,
        #[arg(long)]
        out: PathBuf,
        /// Add a plain adjacency-list row after each pc-list row.
        #[arg(long)]
        baseline: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReprArg {
    Out,
    Seidel,
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn need<T>(v: Option<T>, flag: &str, model: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("model {model} needs --{flag}")))
}

#[allow(clippy::too_many_arguments)]
fn model_from_flags(
    name: &str,
    n: Option<usize>,
    p: Option<f64>,
    avg_degree: Option<f64>,
    fraction: Option<f64>,
    k: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
) -> Result<Model, Failure> {
    Ok(match name {
        "gnp" => Model::Gnp {
            n: need(n, "n", name)?,
            p: need(p, "p", name)?,
        },
        "complement_of_sparse" => Model::ComplementOfSparse {
            n: need(n, "n", name)?,
            avg_degree: need(avg_degree, "avg-degree", name)?,
        },
        "unbalanced" => Model::Unbalanced {
            n: need(n, "n", name)?,
            dense_fraction: need(fraction, "fraction", name)?,
        },
        "bipartite_gnp" => {
            let (a, b) = match (a, b, n) {
                (Some(a), Some(b), _) => (a, b),
                (None, None, Some(n)) => (n / 2, n - n / 2),
                _ => return Err(Failure::Usage("model bipartite_gnp needs --a and --b, or --n".into())),
            };
            Model::BipartiteGnp {
                a,
                b,
                p: need(p, "p", name)?,
            }
        }
        "bipartite_complement_matching" => Model::BipartiteComplementMatching { k: need(k, "k", name)? },
        _ => return Err(Failure::Usage(format!("unknown model {name:?}"))),
    })
}

fn print_ledger(label: &str, out: &RunOutput) {
    let l: &WorkLedger = &out.ledger;
    println!(
        "{label}ledger vertex_charge {} pclist_element_charge {} queue_op {} ledger_misc {} total {}",
        l.vertex_charge,
        l.pclist_element_charge,
        l.queue_op,
        l.ledger_misc,
        l.total()
    );
    if let Some(p) = out.phases {
        println!("{label}phases {p}");
    }
    if let Answer::Traversal(t) = &out.answer {
        let levels: Vec<String> = t
            .level
            .iter()
            .map(|l| l.map_or("-".to_string(), |l| l.to_string()))
            .collect();
        println!("{label}levels {}", levels.join(" "));
    }
}

fn cmd_run(
    algo: &str,
    input: &PathBuf,
    source: usize,
    repr: ReprArg,
    switch_set: Option<PathBuf>,
    baseline: bool,
    check: bool,
) -> Result<(), Failure> {
    let algo: Algo = algo.parse()?;
    let g: Graph = read_edge_list_file(input)?;
    let repr = match (repr, switch_set) {
        (ReprArg::Out, None) => Repr::Out,
        (ReprArg::Out, Some(_)) => return Err(Failure::Usage("--switch-set needs --repr seidel".into())),
        (ReprArg::Seidel, None) => return Err(Failure::Usage("--repr seidel needs --switch-set".into())),
        (ReprArg::Seidel, Some(path)) => {
            let text = std::fs::read_to_string(&path).map_err(Error::from)?;
            Repr::Seidel(parse_switch_set(&text, g.n())?)
        }
    };
    if algo == Algo::Hk && matches!(repr, Repr::Seidel(_)) {
        return Err(Failure::Usage("hk uses the bipartite out representation; drop --repr seidel".into()));
    }
    let out = run_algo(algo, &g, &repr, source)?;
    let mut headline = out.summary(algo);
    let mismatch = if check { verify(algo, &g, source, &out).err() } else { None };
    if check && mismatch.is_none() {
        headline.push_str("; verified");
    }
    println!("{headline}");
    println!("n {} m {} m_tilde {}", g.n(), g.m(), out.m_tilde);
    print_ledger("", &out);
    if baseline {
        let base = run_algo(algo, &g, &Repr::Plain, source)?;
        println!("baseline {}", base.summary(algo));
        println!("baseline m_tilde {}", base.m_tilde);
        print_ledger("baseline ", &base);
    }
    match mismatch {
        Some(report) => Err(Failure::Mismatch(report)),
        None => Ok(()),
    }
}

fn cmd_bench(suite: &str, algos: &[String], out: &PathBuf, baseline: bool, seed: u64) -> Result<(), Failure> {
    let suite: Suite = suite.parse()?;
    let algos = algos
        .iter()
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect::<Result<Vec<Algo>, Error>>()?;
    if algos.is_empty() {
        return Err(Failure::Usage("--algos is empty".into()));
    }
    let file = File::create(out).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", out.display())))?;
    let rows = run_bench(suite, &algos, seed, baseline)?;
    let mut w = BufWriter::new(file);
    write_bench_csv(&mut w, &rows)?;
    w.flush().map_err(Error::from)?;
    println!("wrote {} rows to {}", rows.len(), out.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Gen {
            model,
            n,
            p,
            avg_degree,
            fraction,
            k,
            a,
            b,
            seed,
            out,
        } => model_from_flags(&model, n, p, avg_degree, fraction, k, a, b).and_then(|m| {
            let g = generate(&GenSpec::new(m, seed))?;
            let text = write_edge_list(&g);
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }),
        Cmd::Run {
            algo,
            input,
            source,
            repr,
            switch_set,
            baseline,
            verify,
        } => cmd_run(&algo, &input, source, repr, switch_set, baseline, verify),
        Cmd::Bench {
            suite,
            algos,
            out,
            baseline,
            seed,
        } => cmd_bench(&suite, &algos, &out, baseline, seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(report)) => {
            eprintln!("verification failed:\n{report}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

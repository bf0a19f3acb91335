mod format;
mod input;

use alphafactor::factor::{decide_even_factor, find_even_factor, naive_even_factor, yan_kano_check, YanKano};
use alphafactor::graph::{build_join_union, random_connected_graph, write_graph6, CorpusLine};
use alphafactor::quotient::{charpoly_join, largest_real_root, natural_partition, quotient_matrix};
use alphafactor::spectral::{alpha_matrix, full_spectrum, perron_pair};
use alphafactor::theorem::{
    build_extremal, case3_radius_gap, case3_surgery, classify, parse_rational, rho_star, subcase_positivity_scan,
    verify_corpus, write_jsonl, write_summary_csv, ClassifyOptions, ExtremalSpec,
};
use alphafactor::{Alpha, Error, JoinUnionSpec};
use clap::{Parser, Subcommand, ValueEnum};
use format::num;
use input::{parse_alpha, parse_alpha_below_one, read_corpus, GraphSource};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "alphafactor", version, about = "A_α spectral radii, quotient cubics and even-factor checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FactorMethodArg {
    /// Degree shortcut, odd-component condition, then cycle-space search
    Auto,
    /// Cycle-space search only
    CycleSpace,
    /// Brute force over edge subsets (at most 20 edges)
    Naive,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectral radius of A_α(G) = αD + (1−α)A
    Radius {
        #[command(flatten)]
        source: GraphSource,
        /// α in [0, 1]; decimals or fractions like 2/3; repeatable
        #[arg(long, required = true, value_parser = parse_alpha)]
        alpha: Vec<Alpha>,
        /// Residual tolerance of the power iteration
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// All eigenvalues of A_α(G), nonincreasing (Jacobi)
    Spectrum {
        #[command(flatten)]
        source: GraphSource,
        /// α in [0, 1]
        #[arg(long, default_value = "0", value_parser = parse_alpha)]
        alpha: Alpha,
        /// Off-diagonal Frobenius norm at which rotations stop
        #[arg(long, default_value_t = 1e-11)]
        tol: f64,
    },
    /// Quotient matrix of K_s ∨ (K_n1 ∪ … ∪ K_nt) for its natural partition
    Quotient {
        /// Size of the join clique
        #[arg(long)]
        s: usize,
        /// Comma-separated part sizes, e.g. 5,1
        #[arg(long, required = true, value_delimiter = ',')]
        parts: Vec<usize>,
        /// α in [0, 1]
        #[arg(long, default_value = "0", value_parser = parse_alpha)]
        alpha: Alpha,
    },
    /// Characteristic cubic of the K_s ∨ (K_{n−2s+1} ∪ (s−1)K_1) quotient
    Charpoly {
        /// Order of the graph
        #[arg(long)]
        n: usize,
        /// Join clique size, with n ≥ 2s ≥ 4
        #[arg(long)]
        s: usize,
        /// α in [0, 1]
        #[arg(long, default_value = "0", value_parser = parse_alpha)]
        alpha: Alpha,
    },
    /// Decide whether each graph has an even factor
    Evenfactor {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = FactorMethodArg::Auto)]
        method: FactorMethodArg,
        /// Largest cycle-space dimension searched per component
        #[arg(long, default_value_t = 24)]
        dim_budget: usize,
        /// Largest order for the odd-component condition
        #[arg(long, default_value_t = 20)]
        subset_budget: usize,
    },
    /// Check o(G − S) < |S| for every S with |S| ≥ 2
    Yankano {
        #[command(flatten)]
        source: GraphSource,
        /// Largest order checked
        #[arg(long, default_value_t = 20)]
        subset_budget: usize,
    },
    /// The extremal graph K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)
    Extremal {
        /// Even order, at least 2δ
        #[arg(long)]
        n: usize,
        /// Minimum degree, at least 2
        #[arg(long)]
        delta: usize,
        /// Print the graph6 encoding only
        #[arg(long)]
        emit_graph6: bool,
        /// α in [0, 1) at which to report the spectral radius; repeatable
        #[arg(long, value_parser = parse_alpha_below_one)]
        alpha: Vec<Alpha>,
    },
    /// Classify graphs against the spectral condition (JSON lines)
    Classify {
        #[command(flatten)]
        source: GraphSource,
        /// α in [0, 1); repeatable
        #[arg(long, required = true, value_parser = parse_alpha_below_one)]
        alpha: Vec<Alpha>,
        /// Absolute tolerance of the bound comparison
        #[arg(long, default_value_t = 1e-9)]
        eps: f64,
        /// Largest cycle-space dimension searched per component
        #[arg(long, default_value_t = 24)]
        dim_budget: usize,
        /// Largest order for the odd-component condition
        #[arg(long, default_value_t = 20)]
        subset_budget: usize,
    },
    /// Classify a whole corpus; CSV summary on stdout, exit 1 on counterexamples
    Verify {
        /// graph6 corpus file
        #[arg(long, value_name = "FILE", required_unless_present = "random", conflicts_with = "random")]
        input: Option<PathBuf>,
        /// Sample this many random connected graphs instead of reading a file
        #[arg(long, value_name = "COUNT")]
        random: Option<u64>,
        /// Order of sampled graphs
        #[arg(long, default_value_t = 10)]
        order: usize,
        /// Edge probability of sampled graphs
        #[arg(long, default_value_t = 0.5)]
        prob: f64,
        /// Base seed; graph i uses seed + i
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// α in [0, 1); repeatable
        #[arg(long, required = true, value_parser = parse_alpha_below_one)]
        alpha: Vec<Alpha>,
        /// Write one JSON verdict per line here
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Write the CSV summary here instead of stdout
        #[arg(long, value_name = "FILE")]
        summary: Option<PathBuf>,
        /// Worker threads (default: all cores)
        #[arg(long, env = "ALPHAFACTOR_JOBS")]
        jobs: Option<usize>,
        /// Absolute tolerance of the bound comparison
        #[arg(long, default_value_t = 1e-9)]
        eps: f64,
        /// Largest cycle-space dimension searched per component
        #[arg(long, default_value_t = 24)]
        dim_budget: usize,
        /// Largest order for the odd-component condition
        #[arg(long, default_value_t = 20)]
        subset_budget: usize,
    },
    /// Exact positivity scan of f(n−δ); exit 1 on violations
    ScanSubcases {
        /// Exact α in [0, 1), e.g. 0.6 or 2/3; repeatable
        #[arg(long, required = true)]
        alpha: Vec<String>,
        /// Smallest δ scanned
        #[arg(long, default_value_t = 2)]
        delta_min: usize,
        /// Largest δ scanned
        #[arg(long, default_value_t = 6)]
        delta_max: usize,
        /// Orders scanned: even n in [threshold, threshold + margin]
        #[arg(long, default_value_t = 10)]
        margin: usize,
    },
    /// Edge surgery G₃ → G₄ and the resulting radius gap
    Case3 {
        /// Even order
        #[arg(long)]
        n: usize,
        /// Minimum degree
        #[arg(long)]
        delta: usize,
        /// Join clique size, 2 ≤ s ≤ δ−1
        #[arg(long)]
        s: usize,
        /// α in [0, 1)
        #[arg(long, default_value = "0", value_parser = parse_alpha_below_one)]
        alpha: Alpha,
    },
}

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Graph6 { .. } | Error::NonConvergence { .. } | Error::UnsupportedSize { .. } => {
                CliError::input(e.to_string())
            }
            _ => CliError::usage(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::input(e.to_string())
    }
}

/// Successful runs report whether a counterexample was found.
type Outcome = Result<bool, CliError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|found| {
        out.flush()?;
        Ok(found)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("alphafactor: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Radius { source, alpha, tol } => {
            let graphs = source.load()?;
            let single = graphs.len() == 1 && alpha.len() == 1;
            for (id, g) in &graphs {
                for &a in &alpha {
                    let r = perron_pair(g, a, tol)?.radius;
                    if single {
                        writeln!(out, "{}", num(r))?;
                    } else {
                        writeln!(out, "{id}\t{}\t{}", num(a.value()), num(r))?;
                    }
                }
            }
        }
        Command::Spectrum { source, alpha, tol } => {
            let graphs = source.load()?;
            let single = graphs.len() == 1;
            for (id, g) in &graphs {
                let values: Vec<String> = full_spectrum(&alpha_matrix(g, alpha), tol)?.into_iter().map(num).collect();
                if single {
                    writeln!(out, "{}", values.join(" "))?;
                } else {
                    writeln!(out, "{id}\t{}", values.join(" "))?;
                }
            }
        }
        Command::Quotient { s, parts, alpha } => {
            let spec = JoinUnionSpec::new(s, parts)?;
            let q = quotient_matrix(&build_join_union(&spec), alpha, &natural_partition(&spec))?;
            for row in q.rows() {
                let cells: Vec<String> = row.into_iter().map(num).collect();
                writeln!(out, "{}", cells.join(" "))?;
            }
            writeln!(out, "equitable {}", q.is_equitable())?;
            let eigs: Vec<String> = q.eigenvalues(1e-11)?.into_iter().map(num).collect();
            writeln!(out, "eigenvalues {}", eigs.join(" "))?;
        }
        Command::Charpoly { n, s, alpha } => {
            let p = charpoly_join(n, s, alpha)?;
            writeln!(out, "coefficients 1 {} {} {}", num(p.c2), num(p.c1), num(p.c0))?;
            writeln!(out, "largest root {}", num(largest_real_root(&p, n as f64)?))?;
        }
        Command::Evenfactor {
            source,
            method,
            dim_budget,
            subset_budget,
        } => {
            let graphs = source.load()?;
            let single = graphs.len() == 1;
            for (id, g) in &graphs {
                let v = match method {
                    FactorMethodArg::Auto => decide_even_factor(g, dim_budget, subset_budget),
                    FactorMethodArg::CycleSpace => find_even_factor(g, dim_budget),
                    FactorMethodArg::Naive => naive_even_factor(g)?,
                };
                let mut line = format!("{:?}", v.exists).to_lowercase();
                if let Some(w) = &v.witness {
                    for (a, b) in w.edges() {
                        line.push_str(&format!(" {a}-{b}"));
                    }
                }
                if single {
                    writeln!(out, "{line}")?;
                } else {
                    writeln!(out, "{id}\t{line}")?;
                }
            }
        }
        Command::Yankano { source, subset_budget } => {
            let graphs = source.load()?;
            let single = graphs.len() == 1;
            for (id, g) in &graphs {
                let line = match yan_kano_check(g, subset_budget) {
                    YanKano::Holds => "holds".to_string(),
                    YanKano::Violated(s) => {
                        let members: Vec<String> = s.members().iter().map(|v| v.to_string()).collect();
                        format!("violated {}", members.join(","))
                    }
                    YanKano::Unknown => "unknown".to_string(),
                };
                if single {
                    writeln!(out, "{line}")?;
                } else {
                    writeln!(out, "{id}\t{line}")?;
                }
            }
        }
        Command::Extremal {
            n,
            delta,
            emit_graph6,
            alpha,
        } => {
            let spec = ExtremalSpec::new(n, delta)?;
            let g = build_extremal(spec);
            let g6 = String::from_utf8(write_graph6(&g)?).expect("graph6 is ASCII");
            if emit_graph6 {
                writeln!(out, "{g6}")?;
            } else {
                writeln!(out, "graph6 {g6}")?;
                writeln!(out, "order {} size {} min_degree {}", g.order(), g.size(), g.min_degree())?;
                for a in alpha {
                    writeln!(out, "rho_star alpha {} {}", num(a.value()), num(rho_star(spec, a)?))?;
                }
            }
        }
        Command::Classify {
            source,
            alpha,
            eps,
            dim_budget,
            subset_budget,
        } => {
            let opts = ClassifyOptions {
                eps,
                dim_budget,
                subset_budget,
            };
            let mut records = Vec::new();
            for (id, g) in &source.load()? {
                for &a in &alpha {
                    records.push(classify(g, id, a, &opts)?);
                }
            }
            write_jsonl(&records, &mut *out)?;
            return Ok(records.iter().any(|r| r.counterexample));
        }
        Command::Verify {
            input,
            random,
            order,
            prob,
            seed,
            alpha,
            out: jsonl,
            summary,
            jobs,
            eps,
            dim_budget,
            subset_budget,
        } => {
            if jobs == Some(0) {
                return Err(CliError::usage("--jobs must be at least 1"));
            }
            let lines = match (input, random) {
                (Some(path), _) => read_corpus(&path)?,
                (None, Some(count)) => random_corpus(count, order, prob, seed)?,
                (None, None) => unreachable!("clap requires a source"),
            };
            let opts = ClassifyOptions {
                eps,
                dim_budget,
                subset_budget,
            };
            let report = verify_corpus(&lines, &alpha, &opts, jobs)?;
            for e in &report.errors {
                eprintln!("line {}: {}: {}", e.line, e.id, e.message);
            }
            if let Some(path) = jsonl {
                let file = std::fs::File::create(&path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
                write_jsonl(&report.records, BufWriter::new(file))?;
            }
            match summary {
                Some(path) => {
                    let file =
                        std::fs::File::create(&path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
                    write_summary_csv(&report.summaries, file)?;
                }
                None => write_summary_csv(&report.summaries, &mut *out)?,
            }
            return Ok(report.counterexamples() > 0);
        }
        Command::ScanSubcases {
            alpha,
            delta_min,
            delta_max,
            margin,
        } => {
            let alphas = alpha
                .iter()
                .map(|s| parse_rational(s))
                .collect::<alphafactor::Result<Vec<_>>>()?;
            let scan = subcase_positivity_scan(&alphas, delta_min..=delta_max, margin)?;
            writeln!(out, "checked {} violations {}", scan.checked, scan.violations.len())?;
            for v in &scan.violations {
                writeln!(
                    out,
                    "violation alpha {} delta {} n {} s {} value {}",
                    v.alpha, v.delta, v.n, v.s, v.value
                )?;
            }
            return Ok(!scan.violations.is_empty());
        }
        Command::Case3 { n, delta, s, alpha } => {
            let c = case3_surgery(n, delta, s)?;
            let gap = case3_radius_gap(n, delta, s, alpha)?;
            writeln!(out, "m_inner {}", c.m_inner)?;
            writeln!(out, "removed {}", c.removed.len())?;
            writeln!(out, "added {}", c.added.len())?;
            writeln!(out, "edge_delta {}", c.edge_delta)?;
            writeln!(out, "constructed_delta {}", c.constructed_delta())?;
            writeln!(out, "rho_g3 {}", num(gap.rho_g3))?;
            writeln!(out, "rho_g4 {}", num(gap.rho_g4))?;
            writeln!(out, "gap {}", num(gap.gap))?;
            writeln!(out, "quadratic_delta {}", num(gap.quadratic_delta))?;
        }
    }
    Ok(false)
}

fn random_corpus(count: u64, order: usize, prob: f64, seed: u64) -> Result<Vec<CorpusLine>, CliError> {
    if !(0.0..=1.0).contains(&prob) {
        return Err(CliError::usage(format!("--prob {prob} outside [0, 1]")));
    }
    (0..count)
        .map(|i| {
            let g = random_connected_graph(order, prob, seed.wrapping_add(i), 10_000, |_| true).ok_or_else(|| {
                CliError::usage(format!("no connected sample for item {i} after 10000 draws"))
            })?;
            let text = String::from_utf8(write_graph6(&g)?).expect("graph6 is ASCII");
            Ok(CorpusLine {
                line: i as usize + 1,
                text,
                graph: Ok(g),
            })
        })
        .collect()
}

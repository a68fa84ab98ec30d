use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use indgen::Budget;
use indgen_cli::commands::{self, Format, Outcome};
use indgen_cli::{CliError, Status};

/// Exact checks of generating-set invariants of finite groups and of the
/// number theory bounding them.
#[derive(Parser)]
#[command(name = "indgen", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sylow ranks of symmetric groups.
    #[command(subcommand)]
    Sym(SymCmd),
    /// Prime counting and nth-prime bounds.
    #[command(subcommand)]
    Primes(PrimesCmd),
    /// Primitive prime divisors of a^n - 1.
    Zsigmondy(ZsigmondyArgs),
    /// Invariants of permutation groups read from files.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Wreath product ranks and the Sylow-rank inequality.
    #[command(subcommand)]
    Wreath(WreathCmd),
}

#[derive(Subcommand)]
enum SymCmd {
    /// CSV of delta(Sym(n)) with bound flags.
    Delta {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Values of n grouped by delta(Sym(n)) - (n - 1).
    Classify {
        #[arg(long)]
        max: u64,
    },
    /// Two-sided bounds on delta(Sym(n)) for 2 <= n <= max.
    VerifyStop {
        #[arg(long)]
        max: u64,
    },
    /// Closed form for the contribution of primes above sqrt(n).
    Identity {
        #[arg(long)]
        max: u64,
    },
}

#[derive(Subcommand)]
enum PrimesCmd {
    /// Upper and lower bounds on pi(x).
    Rs {
        #[arg(long)]
        max: u64,
    },
    /// Bounds on the k-th prime.
    Pk {
        #[arg(long)]
        max: u64,
    },
    /// Largest n / pi(n)^eta for 2 <= n <= max.
    Stup {
        #[arg(long)]
        eta: f64,
        #[arg(long)]
        max: u64,
    },
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["a", "sweep", "pi_star"]))]
struct ZsigmondyArgs {
    a: Option<u128>,
    #[arg(requires = "a")]
    n: Option<u32>,
    /// Check every 2 <= a <= AMAX, 2 <= n <= NMAX.
    #[arg(long, num_args = 2, value_names = ["AMAX", "NMAX"])]
    sweep: Option<Vec<u32>>,
    /// Primes dividing |S| but not |Out(S)| for a table of simple groups.
    #[arg(long)]
    pi_star: bool,
    /// Table to use with --pi-star instead of the bundled one.
    #[arg(long, requires = "pi_star")]
    table: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Largest group order for lattice and independent-set searches.
    #[arg(long, default_value_t = Budget::default().max_lattice)]
    max_order: usize,
    /// Wall-clock budget in milliseconds (per group in sweeps).
    #[arg(long)]
    time_budget_ms: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        let d = Budget::default();
        Budget {
            max_lattice: self.max_order,
            max_search: d.max_search.max(self.max_order),
            max_table: d.max_table.max(self.max_order),
            ..d
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Full invariant profile as JSON.
    Profile {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Largest independent generating set.
    M {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Profile every .grp file in a directory.
    Sweep {
        dir: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long, default_value_t = 1.0)]
        eta: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum WreathCmd {
    /// Rank formula over the standard test matrix.
    Verify {
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Sylow-rank sum over pi*(S) against t(K) for S wr K.
    Pablo {
        /// Group file for S (default A5).
        #[arg(long, requires = "out_order")]
        s: Option<PathBuf>,
        /// |Out(S)| for the group given with --s.
        #[arg(long)]
        out_order: Option<u64>,
        /// Transitive group file for K; repeatable.
        #[arg(long)]
        k: Vec<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Sym(c) => match c {
            SymCmd::Delta { from, to } => commands::sym_delta(from, to),
            SymCmd::Classify { max } => commands::sym_classify(max),
            SymCmd::VerifyStop { max } => commands::sym_verify_stop(max),
            SymCmd::Identity { max } => commands::sym_identity(max),
        },
        Command::Primes(c) => match c {
            PrimesCmd::Rs { max } => commands::primes_rs(max),
            PrimesCmd::Pk { max } => commands::primes_pk(max),
            PrimesCmd::Stup { eta, max } => commands::primes_stup(eta, max),
        },
        Command::Zsigmondy(z) => {
            if z.pi_star {
                commands::zsigmondy_pi_star(z.table.as_deref())
            } else if let Some(s) = z.sweep {
                commands::zsigmondy_sweep_cmd(s[0] as u128, s[1])
            } else {
                match (z.a, z.n) {
                    (Some(a), Some(n)) => commands::zsigmondy_single(a, n),
                    _ => Err(CliError::Usage("give both a and n".into())),
                }
            }
        }
        Command::Group(c) => match c {
            GroupCmd::Profile { file, budget } => {
                commands::group_profile(&file, &budget.budget(), budget.time_budget_ms)
            }
            GroupCmd::M { file, budget } => commands::group_m(&file, &budget.budget(), budget.time_budget_ms),
            GroupCmd::Sweep {
                dir,
                sigma,
                eta,
                format,
                budget,
            } => {
                let format = match format {
                    FormatArg::Csv => Format::Csv,
                    FormatArg::Json => Format::Json,
                };
                commands::group_sweep(&dir, sigma, eta, &budget.budget(), budget.time_budget_ms, format)
            }
        },
        Command::Wreath(c) => match c {
            WreathCmd::Verify { budget } => commands::wreath_verify(&budget.budget(), budget.time_budget_ms),
            WreathCmd::Pablo {
                s,
                out_order,
                k,
                budget,
            } => {
                let simple = s.as_deref().zip(out_order);
                commands::wreath_pablo(simple, &k, &budget.budget(), budget.time_budget_ms)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (stdout, stderr, status) = match run(cli) {
        Ok(o) => (o.stdout, o.stderr, o.status),
        Err(e) => (String::new(), format!("error: {e}\n"), e.status()),
    };
    // a closed pipe is not worth reporting
    let _ = std::io::stdout().write_all(stdout.as_bytes());
    let _ = std::io::stderr().write_all(stderr.as_bytes());
    if status != Status::Pass {
        eprintln!("exit status {}", status.code());
    }
    ExitCode::from(status.code() as u8)
}

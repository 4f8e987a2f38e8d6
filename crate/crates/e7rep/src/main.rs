//! Command-line entry point: construction, verification pipelines and
//! report emission. Human-readable text goes to stdout; `--json FILE`
//! additionally writes the structured report.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use e7rep::dims::{decomposition_check, dim_formula_117, identity_42_check, weyl_dim};
use e7rep::pde::{check_annihilation, weight_shift_audit, PdeContext, PdeError};
use e7rep::rep::build_zeta_basis;
use e7rep::report::VerificationReport;
use e7rep::rootsys::{enumerate_roots, positive_roots, RootSystem, WeightVec};
use e7rep::singular::{golden_eta, singular_space};
use e7rep::verify;

const EXIT_FAILURES: u8 = 1;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "e7rep",
    version,
    about = "Exact toolkit for the 56-variable polynomial representation of E7"
)]
struct Cli {
    /// Write the machine-readable report to this file
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemArg {
    E7,
    E8,
}

#[derive(Subcommand)]
enum Command {
    /// Emit root lists, one root per line as `k1 k2 ... k8`
    Roots {
        #[arg(long, value_enum, default_value_t = SystemArg::E7)]
        system: SystemArg,
        /// Restrict to positive roots
        #[arg(long)]
        positive: bool,
    },
    /// Representation-table verification
    Rep {
        #[command(subcommand)]
        suite: RepSuite,
    },
    /// Solve the singular space at a degree and weight
    Singular {
        #[arg(long)]
        degree: u32,
        /// Fundamental coordinates, e.g. "1,0,0,0,0,0,0"
        #[arg(long, value_name = "n1,...,n7", allow_hyphen_values = true)]
        weight: String,
    },
    /// Golden construction of the quartic invariant
    Invariant {
        #[command(subcommand)]
        what: InvariantCmd,
    },
    /// Dimension of the irreducible module with the given highest weight
    Dims {
        #[arg(long, value_name = "n1,...,n7", allow_hyphen_values = true)]
        weight: String,
    },
    /// Series identity up to a truncation degree
    Identity {
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
    },
    /// Decomposition dimension count at one degree
    Decompose {
        #[arg(long)]
        degree: u32,
    },
    /// Annihilation checks of the dual invariant operator
    #[command(group = clap::ArgGroup::new("mode").required(true).multiple(true)
        .args(["check", "audit"]))]
    Pde {
        /// Exponents m1 m2 m3 eps of the product to annihilate
        #[arg(long, num_args = 4, value_names = ["M1", "M2", "M3", "EPS"])]
        check: Option<Vec<u32>>,
        /// Run the exponent-bookkeeping audit instead
        #[arg(long)]
        audit: bool,
    },
    /// Run every verification suite
    VerifyAll {
        /// Degree bound of the annihilation sweep
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
    },
}

#[derive(Subcommand)]
enum RepSuite {
    /// Bracket relations: Cartan covariance, opposite pairs, cocycle rule
    Verify,
    /// Golden-data agreement: operators, chain, weight table, W action
    Golden,
}

#[derive(Subcommand)]
enum InvariantCmd {
    /// Build the invariant; optionally write its canonical text to a file
    Eta {
        #[arg(long, value_name = "FILE")]
        emit: Option<PathBuf>,
    },
}

fn parse_weight(text: &str) -> Result<WeightVec, String> {
    let parts: Vec<i64> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|e| format!("bad weight '{text}': {e}"))
        })
        .collect::<Result<_, _>>()?;
    let fund: [i64; 7] = parts
        .try_into()
        .map_err(|_| format!("weight '{text}' must have 7 coordinates"))?;
    Ok(WeightVec::from_fund(fund))
}

fn run(cli: &Cli, report: &mut VerificationReport) -> Result<(), PdeError> {
    match &cli.command {
        Command::Roots { system, positive } => {
            let sys = match system {
                SystemArg::E7 => RootSystem::E7,
                SystemArg::E8 => RootSystem::E8,
            };
            let roots = if *positive {
                positive_roots(sys)
            } else {
                enumerate_roots(sys)
            };
            for r in &roots {
                let line: Vec<String> = r.iter().map(|k| k.to_string()).collect();
                println!("{}", line.join(" "));
            }
            let expected = match (sys, positive) {
                (RootSystem::E7, false) => 126,
                (RootSystem::E7, true) => 63,
                (RootSystem::E8, false) => 240,
                (RootSystem::E8, true) => 120,
            };
            report.record("roots.count", roots.len() == expected, || {
                format!("{} roots, expected {expected}", roots.len())
            });
        }
        Command::Rep { suite } => {
            let (id, sub) = match suite {
                RepSuite::Verify => (
                    "rep.verify",
                    verify::suite_rep_verify(500, verify::DEFAULT_SEED),
                ),
                RepSuite::Golden => ("rep.golden", verify::suite_rep_golden()),
            };
            println!(
                "{id}: {} checks, {} failures",
                sub.checks_run,
                sub.failures.len()
            );
            for f in &sub.failures {
                println!("  FAIL {f}");
            }
            report.absorb(id, sub);
        }
        Command::Singular { degree, weight } => match parse_weight(weight) {
            Ok(w) => {
                let space = singular_space(*degree, &w);
                println!(
                    "degree {degree}, weight {:?}: {} singular vector(s)",
                    w.fund,
                    space.basis.len()
                );
                for p in &space.basis {
                    println!("{}", p.to_text());
                }
                report.checks_run += 1;
            }
            Err(e) => report.record("singular.args", false, || e),
        },
        Command::Invariant { what } => {
            let InvariantCmd::Eta { emit } = what;
            match build_zeta_basis() {
                Ok(basis) => {
                    let eta = golden_eta(&basis);
                    println!(
                        "invariant: {} terms, degree {}",
                        eta.num_terms(),
                        eta.degree()
                    );
                    report.record("invariant.shape", eta.degree() == 4, || {
                        format!("degree {}", eta.degree())
                    });
                    if let Some(path) = emit {
                        match std::fs::write(path, format!("{}\n", eta.to_text())) {
                            Ok(()) => println!("wrote {}", path.display()),
                            Err(e) => report.record("invariant.emit", false, || e.to_string()),
                        }
                    }
                }
                Err(e) => report.record("invariant.build", false, || e.to_string()),
            }
        }
        Command::Dims { weight } => match parse_weight(weight) {
            Ok(w) => match weyl_dim(&w) {
                Ok(dim) => {
                    println!("dim V({:?}) = {dim}", w.fund);
                    report.checks_run += 1;
                    let f = &w.fund;
                    if f[1] == 0 && f[2] == 0 && f[3] == 0 && f[4] == 0 {
                        let by_formula = dim_formula_117(f[0] as u64, f[5] as u64, f[6] as u64);
                        println!("product formula: {by_formula}");
                        report.record("dims.formula-agreement", by_formula == dim, || {
                            format!("formula {by_formula} vs weyl {dim}")
                        });
                    }
                }
                Err(e) => report.record("dims.dominant", false, || e.to_string()),
            },
            Err(e) => report.record("dims.args", false, || e),
        },
        Command::Identity { max_degree } => {
            let coeffs = identity_42_check(*max_degree);
            let line: Vec<String> = coeffs.0.iter().map(|c| c.to_string()).collect();
            println!("{}", line.join(" "));
            report.record("identity.coefficients", coeffs.is_unit_quartet(), || {
                format!("unexpected coefficients {}", line.join(" "))
            });
        }
        Command::Decompose { degree } => {
            let check = decomposition_check(*degree);
            println!(
                "degree {degree}: {} == {} {}",
                check.summed,
                check.expected,
                if check.passed() { "pass" } else { "FAIL" }
            );
            report.record("decompose.count", check.passed(), || {
                format!("{} != {}", check.summed, check.expected)
            });
        }
        Command::Pde { check, audit } => {
            if *audit {
                for line in weight_shift_audit(3, 4) {
                    println!(
                        "m3={} m4={}: {} candidate exponent solutions {:?}",
                        line.m3,
                        line.m4,
                        line.solutions.len(),
                        line.solutions
                    );
                    if line.m4 <= 1 {
                        report.record("pde.audit", line.solutions.is_empty(), || {
                            format!("m3={} m4={} has solutions", line.m3, line.m4)
                        });
                    }
                }
            }
            if let Some(args) = check {
                let (m1, m2, m3, eps) = (args[0], args[1], args[2], args[3]);
                let basis = match build_zeta_basis() {
                    Ok(b) => b,
                    Err(e) => {
                        report.record("pde.build", false, || e.to_string());
                        return Ok(());
                    }
                };
                let ctx = PdeContext::new(&basis);
                let outcome = check_annihilation(&ctx, m1, m2, m3, eps)?;
                println!(
                    "operator on ({m1},{m2},{m3},{eps}) [degree {}]: {}",
                    outcome.input_degree,
                    if outcome.passed() {
                        "annihilated".to_string()
                    } else {
                        format!("{} residual terms", outcome.image.num_terms())
                    }
                );
                report.record("pde.annihilation", outcome.passed(), || {
                    format!("({m1},{m2},{m3},{eps}) not annihilated")
                });
            }
        }
        Command::VerifyAll { max_degree } => {
            let suites: Vec<(&str, e7rep::rep::CheckReport)> = vec![
                (
                    "rep.verify",
                    verify::suite_rep_verify(500, verify::DEFAULT_SEED),
                ),
                ("rep.golden", verify::suite_rep_golden()),
                (
                    "cocycle.laws",
                    verify::suite_cocycle(200, verify::DEFAULT_SEED),
                ),
                ("singular.sweep", verify::suite_singular_sweep(4)),
                (
                    "singular.full-annihilation",
                    verify::suite_full_annihilation(),
                ),
                ("singular.specializations", verify::suite_specializations()),
                ("dims.identity", verify::suite_identity(10)),
                ("dims.decompose", verify::suite_decompose(10)),
                ("dims.formula-grid", verify::suite_dim_formula_grid()),
                ("pde.sweep", verify::suite_pde(*max_degree)),
            ];
            for (id, sub) in suites {
                println!(
                    "{id}: {} checks, {} failures",
                    sub.checks_run,
                    sub.failures.len()
                );
                for f in &sub.failures {
                    println!("  FAIL {f}");
                }
                report.absorb(id, sub);
            }
        }
    }
    Ok(())
}

fn suite_name(command: &Command) -> &'static str {
    match command {
        Command::Roots { .. } => "roots",
        Command::Rep {
            suite: RepSuite::Verify,
        } => "rep-verify",
        Command::Rep {
            suite: RepSuite::Golden,
        } => "rep-golden",
        Command::Singular { .. } => "singular",
        Command::Invariant { .. } => "invariant",
        Command::Dims { .. } => "dims",
        Command::Identity { .. } => "identity",
        Command::Decompose { .. } => "decompose",
        Command::Pde { .. } => "pde",
        Command::VerifyAll { .. } => "verify-all",
    }
}

fn main() -> ExitCode {
    // long listings are routinely piped into head/grep; die quietly on EPIPE
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let mut report = VerificationReport::new(suite_name(&cli.command));
    let start = Instant::now();
    let budget_refused = match run(&cli, &mut report) {
        Ok(()) => false,
        Err(e) => {
            eprintln!("refused: {e}");
            true
        }
    };
    report.wall_time_secs = start.elapsed().as_secs_f64();
    if let Some(path) = &cli.json {
        match serde_json::to_string_pretty(&report) {
            Ok(text) => {
                if let Err(e) = std::fs::write(path, text + "\n") {
                    eprintln!("cannot write report: {e}");
                    return ExitCode::from(EXIT_FAILURES);
                }
            }
            Err(e) => {
                eprintln!("cannot serialize report: {e}");
                return ExitCode::from(EXIT_FAILURES);
            }
        }
    }
    if budget_refused {
        ExitCode::from(EXIT_BUDGET)
    } else if report.passed() {
        ExitCode::SUCCESS
    } else {
        println!(
            "{}: {} of {} checks failed",
            report.suite,
            report.failures.len(),
            report.checks_run
        );
        ExitCode::from(EXIT_FAILURES)
    }
}

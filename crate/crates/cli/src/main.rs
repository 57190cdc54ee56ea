use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qdyson_cli::{parse_num_entry, run_ct, run_verify, to_json, CtRequest, Method, Status};
use qdyson_core::verify::{Suite, SweepConfig};

#[derive(Parser)]
#[command(name = "qdyson", version, about = "Exact constant terms of q-Dyson style products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Constant term of x^num / x^den times the product.
    Ct {
        #[arg(long)]
        n: usize,
        /// a_0,...,a_n
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        a: Vec<i64>,
        /// Numerator entries j:p
        #[arg(long, value_delimiter = ',', value_parser = parse_num_entry)]
        num: Vec<(usize, u32)>,
        /// Denominator indices
        #[arg(long, value_delimiter = ',')]
        den: Vec<usize>,
        #[arg(long, value_enum, default_value = "brute")]
        method: Method,
        #[arg(long)]
        json: bool,
        /// Print the branch trace of the gx method.
        #[arg(long)]
        trace: bool,
    },
    /// Run verification sweeps.
    Verify {
        /// Suite names, or "all"
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        max_a: i64,
        #[arg(long, default_value_t = 2)]
        max_m: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Worker threads (0 picks one per core)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

fn parse_suites(names: &[String]) -> Result<Vec<Suite>, String> {
    if names.iter().any(|s| s == "all") {
        return Ok(Suite::ALL.to_vec());
    }
    names.iter().map(|s| s.parse::<Suite>().map_err(|e| e.to_string())).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Ct { n, a, num, den, method, json, trace } => {
            let (out, code) = run_ct(&CtRequest { n, a, num, den, method, trace });
            if json {
                print!("{}", to_json(&out));
            } else {
                match (&out.status, &out.result) {
                    (Status::Ok, Some(r)) => {
                        println!("{}", r.text);
                        if let Some(rot) = &out.rotation {
                            eprintln!(
                                "rotated {} step(s): a = {:?}, q^{} times the canonical constant term",
                                rot.steps, rot.a, rot.q_shift
                            );
                        }
                        for line in &out.trace {
                            println!("{line}");
                        }
                    }
                    _ => eprintln!("error: {}", out.error.as_deref().unwrap_or("unknown")),
                }
            }
            code
        }
        Command::Verify { suite, max_n, max_a, max_m, samples, seed, jobs, json } => {
            let suites = match parse_suites(&suite) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(qdyson_cli::EXIT_USAGE);
                }
            };
            let cfg = SweepConfig { max_n, max_a, max_m, samples, seed };
            let (report, code) = run_verify(&suites, &cfg, jobs);
            if json {
                print!("{}", to_json(&report));
            } else {
                for s in &report.suites {
                    let verdict = if s.passed { "PASS" } else { "FAIL" };
                    print!("{verdict} {}: {} checks, {} failed", s.suite, s.checked, s.failed);
                    match &s.first_failure {
                        Some(f) => println!("; first: {f}"),
                        None => println!(),
                    }
                }
                if let Some(e) = &report.error {
                    eprintln!("error: {e}");
                }
                println!("overall: {}", report.status);
            }
            code
        }
    };
    ExitCode::from(code)
}

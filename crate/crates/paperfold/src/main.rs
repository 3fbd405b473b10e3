use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use paperfold::growth::a_of_i;
use paperfold::oracle::{rho_oracle_with, OracleConfig};
use paperfold::regular::{
    build_linear_representation, kernel_sequence, rho_linrep, rho_rec, KernelQuery,
};
use paperfold::verify::{run_checks, CheckKind};
use paperfold::word::{prefix, toeplitz_prefix};

/// The ordinary paperfolding word and its abelian complexity function.
#[derive(Parser)]
#[command(name = "paperfold", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the prefix f_1 .. f_L of the word.
    Word(WordArgs),
    /// Evaluate the abelian complexity rho on a range of lengths.
    Rho(RhoArgs),
    /// Run the invariant suites and print a pass/fail report.
    Verify(VerifyArgs),
    /// Emit a 2-kernel subsequence of rho.
    Kernel(KernelArgs),
    /// Emit or check the linear representation of rho.
    Linrep(LinrepArgs),
    /// First-occurrence indices of each rho value vs. the closed form.
    Growth(GrowthArgs),
}

#[derive(ValueEnum, Clone, Copy)]
enum WordMethod {
    Formula,
    Toeplitz,
}

#[derive(ValueEnum, Clone, Copy)]
enum WordFormat {
    Bits,
    Csv,
}

#[derive(Args)]
struct WordArgs {
    #[arg(long)]
    length: u64,
    #[arg(long, value_enum, default_value = "formula")]
    method: WordMethod,
    #[arg(long, value_enum, default_value = "bits")]
    format: WordFormat,
}

#[derive(ValueEnum, Clone, Copy)]
enum RhoMethod {
    Rec,
    Oracle,
    Linrep,
}

#[derive(ValueEnum, Clone, Copy)]
enum RhoFormat {
    Csv,
    Plain,
}

#[derive(Args)]
struct RhoArgs {
    #[arg(long)]
    from: u64,
    #[arg(long)]
    to: u64,
    #[arg(long, value_enum, default_value = "rec")]
    method: RhoMethod,
    #[arg(long, value_enum, default_value = "csv")]
    format: RhoFormat,
    /// Prefix cap for the oracle's completeness certificate, in letters.
    #[arg(long, default_value_t = 1 << 28)]
    prefix_cap: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    max_n: u64,
    /// Comma-separated subset of check names; defaults to all.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    /// Shard per-n work across threads (output stays deterministic).
    #[arg(long)]
    parallel: bool,
}

#[derive(Args)]
struct KernelArgs {
    #[arg(long)]
    e: u32,
    #[arg(long)]
    c: u64,
    #[arg(long)]
    count: usize,
}

#[derive(ValueEnum, Clone, Copy)]
enum LinrepAction {
    Emit,
    Check,
}

#[derive(Args)]
struct LinrepArgs {
    #[arg(value_enum)]
    action: LinrepAction,
    /// Upper end of the equivalence sweep for `check`.
    #[arg(long, default_value_t = 1 << 14)]
    max_n: u64,
}

#[derive(Args)]
struct GrowthArgs {
    #[arg(long)]
    max_i: u32,
}

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Word(args) => cmd_word(args),
        Command::Rho(args) => cmd_rho(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Kernel(args) => cmd_kernel(args),
        Command::Linrep(args) => cmd_linrep(args),
        Command::Growth(args) => cmd_growth(args),
    }
}

fn cmd_word(args: WordArgs) -> ExitCode {
    let p = match args.method {
        WordMethod::Formula => prefix(args.length),
        WordMethod::Toeplitz => toeplitz_prefix(args.length),
    };
    match args.format {
        WordFormat::Bits => println!("{p}"),
        WordFormat::Csv => {
            println!("n,f");
            for (i, letter) in p.letters().enumerate() {
                println!("{},{letter}", i + 1);
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_rho(args: RhoArgs) -> ExitCode {
    if args.from < 1 || args.from > args.to {
        eprintln!("error: require 1 <= from <= to");
        return ExitCode::from(EXIT_USAGE);
    }
    let method_name = match args.method {
        RhoMethod::Rec => "rec",
        RhoMethod::Oracle => "oracle",
        RhoMethod::Linrep => "linrep",
    };
    let rep = match args.method {
        RhoMethod::Linrep => match build_linear_representation() {
            Ok(rep) => Some(rep),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_FAILURE);
            }
        },
        _ => None,
    };
    if let RhoFormat::Csv = args.format {
        match args.method {
            RhoMethod::Oracle => println!("n,rho,method,certified"),
            _ => println!("n,rho,method"),
        }
    }
    let config = OracleConfig {
        prefix_cap: args.prefix_cap,
    };
    for n in args.from..=args.to {
        let (rho, certified) = match args.method {
            RhoMethod::Rec => (rho_rec(n).unwrap(), None),
            RhoMethod::Linrep => (rho_linrep(n, rep.as_ref().unwrap()).unwrap(), None),
            RhoMethod::Oracle => match rho_oracle_with(n, &config) {
                Ok(rec) => (rec.rho, Some(rec.certified)),
                Err(e) => {
                    eprintln!("error: n = {n}: {e}");
                    return ExitCode::from(EXIT_FAILURE);
                }
            },
        };
        match (args.format, certified) {
            (RhoFormat::Plain, _) => println!("{rho}"),
            (RhoFormat::Csv, None) => println!("{n},{rho},{method_name}"),
            (RhoFormat::Csv, Some(c)) => println!("{n},{rho},{method_name},{c}"),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    if args.max_n < 1 {
        eprintln!("error: --max-n must be at least 1");
        return ExitCode::from(EXIT_USAGE);
    }
    let kinds: Vec<CheckKind> = if args.checks.is_empty() {
        CheckKind::ALL.to_vec()
    } else {
        let mut kinds = Vec::new();
        for name in &args.checks {
            match CheckKind::from_name(name) {
                Some(k) => kinds.push(k),
                None => {
                    eprintln!("error: unknown check '{name}'");
                    return ExitCode::from(EXIT_USAGE);
                }
            }
        }
        kinds
    };
    let report = run_checks(&kinds, args.max_n, args.parallel);
    print!("{report}");
    if report.overall() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}

fn cmd_kernel(args: KernelArgs) -> ExitCode {
    if args.e >= 64 || args.c >= 1u64 << args.e {
        eprintln!("error: require 0 <= c < 2^e");
        return ExitCode::from(EXIT_USAGE);
    }
    println!("k,index,rho");
    for t in kernel_sequence(KernelQuery {
        e: args.e,
        c: args.c,
        count: args.count,
    }) {
        println!("{},{},{}", t.k, t.index, t.rho);
    }
    ExitCode::SUCCESS
}

fn cmd_linrep(args: LinrepArgs) -> ExitCode {
    let rep = match build_linear_representation() {
        Ok(rep) => rep,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAILURE);
        }
    };
    match args.action {
        LinrepAction::Emit => {
            println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            ExitCode::SUCCESS
        }
        LinrepAction::Check => {
            for n in 1..=args.max_n {
                let a = rho_linrep(n, &rep).unwrap();
                let b = rho_rec(n).unwrap();
                if a != b {
                    eprintln!("error: n = {n}: linrep {a} vs rec {b}");
                    return ExitCode::from(EXIT_FAILURE);
                }
            }
            println!("linrep check: pass (1 <= n <= {})", args.max_n);
            ExitCode::SUCCESS
        }
    }
}

fn cmd_growth(args: GrowthArgs) -> ExitCode {
    if args.max_i < 1 {
        eprintln!("error: --max-i must be at least 1");
        return ExitCode::from(EXIT_USAGE);
    }
    println!("i,a_scan,b_closed,match");
    let mut all_match = true;
    for i in 1..=args.max_i {
        let r = a_of_i(i).unwrap();
        let a = r
            .a_scan
            .map(|a| a.to_string())
            .unwrap_or_else(|| "none".to_string());
        println!("{i},{a},{},{}", r.b_closed, r.matches);
        all_match &= r.matches;
    }
    if all_match {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use unram::{
    cmd_construct, cmd_verify, emit, isotropy_text, pfister_text, residue_text, resolve_cap, CAP_ENV, EXIT_OK,
    EXIT_USAGE,
};
use unram_core::quadforms::DEFAULT_ISOTROPY_CAP;

/// Degree-n unramified class certificates over C(t_1^ℓ, …, t_2n^ℓ).
#[derive(Parser)]
#[command(name = "unram", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a certificate for (n, ℓ).
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: u64,
        /// Write the document here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest n accepted (also UNRAM_CAP; default 6).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Re-verify a certificate document.
    Verify {
        path: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Residue of a monomial symbol at t_var.
    Residue {
        #[arg(long)]
        symbol: String,
        /// 1-based variable index.
        #[arg(long)]
        var: usize,
        #[arg(long)]
        ell: u64,
        /// Number of variables t1..t_vars.
        #[arg(long)]
        vars: usize,
    },
    /// Small Pfister quadric of a symbol.
    Pfister {
        #[arg(long)]
        symbol: String,
    },
    /// Exhaustive isotropy search for a diagonal form over F_p.
    Isotropy {
        /// Comma-separated coefficients, e.g. 1,-1.
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long)]
        prime: u64,
        /// Largest p^k searched.
        #[arg(long, default_value_t = DEFAULT_ISOTROPY_CAP)]
        cap: u128,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK } as u8);
        }
    };
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    let env_cap = std::env::var(CAP_ENV).ok();
    let code = match cli.command {
        Command::Construct { n, ell, out: path, cap } => match resolve_cap(cap, env_cap.as_deref()) {
            Ok(cap) => cmd_construct(n, ell, path.as_deref(), cap, &mut out, &mut err),
            Err(e) => emit(Err(e), &mut out, &mut err),
        },
        Command::Verify { path, cap } => match resolve_cap(cap, env_cap.as_deref()) {
            Ok(cap) => cmd_verify(&path, cap, &mut out, &mut err),
            Err(e) => emit(Err(e), &mut out, &mut err),
        },
        Command::Residue { symbol, var, ell, vars } => emit(residue_text(&symbol, var, ell, vars), &mut out, &mut err),
        Command::Pfister { symbol } => emit(pfister_text(&symbol), &mut out, &mut err),
        Command::Isotropy { form, prime, cap } => emit(isotropy_text(&form, prime, cap), &mut out, &mut err),
    };
    ExitCode::from(code as u8)
}

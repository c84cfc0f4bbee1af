use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use coset_spectra::cli::{render_json, render_text, run, Command, Options, SpaceSpec};
use coset_spectra::weight::{parse_q, Q};
use coset_spectra::weyl::DEFAULT_WEYL_LIMIT;

/// Exact Laplacian spectra on equal-rank homogeneous spaces G/H.
///
/// SPEC has the form `<series><rank>/<sub>[;mu=<rationals>][;scale=<rational>]`
/// where <sub> is `torus`, `full`, `D<k>` (inside B<k>) or `roots:(..),(..)`.
#[derive(Parser, Debug)]
#[command(name = "coset-spectra", version)]
struct Args {
    /// spectrum | lowest | gkrs-check | weyl-info
    command: Command,
    /// Space specification, e.g. `B3/D3;mu=1/2,1/2,1/2`
    spec: String,
    /// Number of spectral lines to print
    #[arg(long, default_value_t = 10)]
    lines: usize,
    /// Largest dim V_lambda swept by gkrs-check
    #[arg(long, default_value_t = 100)]
    dim_bound: u64,
    /// Emit JSON instead of text tables
    #[arg(long)]
    json: bool,
    /// Energy prefactor p/q, overriding `;scale=` in SPEC
    #[arg(long, value_parser = parse_scale)]
    scale: Option<Q>,
    /// Maximum Weyl group size to enumerate
    #[arg(long, default_value_t = DEFAULT_WEYL_LIMIT)]
    weyl_limit: usize,
    /// Cutoff on (lambda+rho_g, lambda+rho_g) for spectrum enumeration
    #[arg(long, value_parser = parse_scale)]
    cutoff: Option<Q>,
    /// Append the normalization note and version
    #[arg(long)]
    provenance: bool,
}

fn parse_scale(s: &str) -> Result<Q, String> {
    parse_q(s).ok_or_else(|| format!("`{s}` is not a rational p/q"))
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let options = Options {
        lines: args.lines,
        dim_bound: args.dim_bound,
        scale: args.scale,
        weyl_limit: args.weyl_limit,
        cutoff: args.cutoff,
        provenance: args.provenance,
    };
    let report = SpaceSpec::parse(&args.spec).and_then(|spec| run(args.command, &spec, &options));
    match report {
        Ok(report) => {
            let text = if args.json {
                render_json(&report)
            } else {
                render_text(&report)
            };
            print!("{text}");
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

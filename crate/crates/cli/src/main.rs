//! `zetaband`: reproducible experiments on the periodized zeta function.
//!
//! Every subcommand is a pure function of its flags plus the input files:
//! identical invocations produce byte-identical outputs, independent of
//! the worker thread count. Exit codes: 0 success, 1 computation error,
//! 2 invalid configuration or input data, 3 I/O failure.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use zetaband_core::{
    decrypt_exact, encrypt_spectrum, f_eval, fig1_export, fourier_coeff_table, landau_sum,
    midpoint_node, sig12, synthesize, Complex, EncryptionKey, Error as CoreError, EvalPolicy,
    ExportFormat, Spectrum, ZeroTable,
};

#[derive(Parser)]
#[command(
    name = "zetaband",
    version,
    about = "Periodized zeta function experiments over Riemann zeta zero ordinates",
    propagate_version = true
)]
struct Cli {
    /// Path to the zero-ordinate table (one ascending decimal per line,
    /// '#' comments allowed)
    #[arg(long, global = true, env = "ZB_ZEROS_PATH", value_name = "PATH")]
    zeros: Option<PathBuf>,

    /// Worker threads for grid fan-out (default: all cores; output is
    /// identical for any value)
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Override the direct-series term count of the evaluation policy
    #[arg(long, global = true, value_name = "TERMS")]
    direct_terms: Option<usize>,

    /// Override the Hurwitz tail tolerance of the evaluation policy
    #[arg(long, global = true, value_name = "TOL")]
    target_tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate F_s(a) at a single point and print "re im"
    Eval(EvalArgs),
    /// Closed-form vs quadrature Fourier coefficients of F_s
    Coeffs(CoeffsArgs),
    /// Cesàro average of F over zeros, exported on the midpoint grid
    Average(AverageArgs),
    /// The headline dataset: averaged signal vs cosine/sine (N=237 default)
    Fig1(AverageArgs),
    /// Landau resonance sums over a list of x values
    Landau(LandauArgs),
    /// Star discrepancy of (alpha t_n) mod 1 along an N-ladder
    Discrepancy(DiscrepancyArgs),
    /// Encrypt a spectrum file with one (sigma, zero) key
    Encrypt(EncryptArgs),
    /// Decrypt a spectrum file produced by `encrypt` with the same key
    Decrypt(DecryptArgs),
    /// Validate a zero-ordinate table and print a summary
    Ingest(IngestArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Re s
    #[arg(long, default_value_t = 0.5)]
    sigma: f64,
    /// Im s
    #[arg(long, default_value_t = 0.0)]
    t: f64,
    /// Evaluation point in (0, 1)
    #[arg(long)]
    a: f64,
}

#[derive(Args)]
struct CoeffsArgs {
    /// Re s (must be positive)
    #[arg(long, default_value_t = 0.75)]
    sigma: f64,
    /// Im s
    #[arg(long, default_value_t = 20.0)]
    t: f64,
    /// Comma-separated mode list
    #[arg(long, default_value = "-4,-1,0,1,2,3,5,8", value_name = "K,K,...")]
    k: String,
    /// Quadrature grid (power of two, >= 4096)
    #[arg(long, default_value_t = 65536)]
    grid: usize,
    /// Output path (.csv or .json; stdout when omitted)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AverageArgs {
    /// Number of leading zeros to average
    #[arg(long, default_value_t = 237)]
    n: usize,
    /// Common Re s for the averaged family
    #[arg(long, default_value_t = 0.5)]
    sigma: f64,
    /// Midpoint-grid resolution
    #[arg(long, default_value_t = 512)]
    grid: usize,
    /// Output path (.csv or .json; stdout when omitted)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LandauArgs {
    /// Comma-separated x values (> 1)
    #[arg(long, default_value = "2,3,4,5,6,8,9", value_name = "X,X,...")]
    x: String,
    /// Sum cutoff T (defaults to the table's last ordinate)
    #[arg(long, value_name = "T")]
    t_max: Option<f64>,
    /// Output path (.csv or .json; stdout when omitted)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DiscrepancyArgs {
    /// Scaling of the ordinates before reduction mod 1
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    /// Comma-separated ladder of sample counts
    #[arg(long, default_value = "50,200,800", value_name = "N,N,...")]
    n: String,
    /// Output path (.csv or .json; stdout when omitted)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EncryptArgs {
    /// Input spectrum file (rows "m,re,im", ascending m)
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    /// Key abscissa (> 0)
    #[arg(long, default_value_t = 0.5)]
    sigma: f64,
    /// Key zero index (1-based into the table)
    #[arg(long, value_name = "N")]
    zero_index: usize,
    /// Per-mode dilation cutoff
    #[arg(long, default_value_t = 64)]
    cutoff: usize,
    /// Output spectrum path (stdout when omitted)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Also export the encrypted waveform (CSV "a,re,im") to this path
    #[arg(long, value_name = "PATH")]
    waveform: Option<PathBuf>,
    /// Grid for the waveform export
    #[arg(long, default_value_t = 512)]
    grid: usize,
}

#[derive(Args)]
struct DecryptArgs {
    /// Encrypted spectrum file
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    /// Key abscissa (> 0)
    #[arg(long, default_value_t = 0.5)]
    sigma: f64,
    /// Key zero index (1-based into the table)
    #[arg(long, value_name = "N")]
    zero_index: usize,
    /// Per-mode dilation cutoff used at encryption time
    #[arg(long, default_value_t = 64)]
    cutoff: usize,
    /// Output spectrum path (stdout when omitted)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct IngestArgs {
    /// Table file to validate
    path: PathBuf,
}

struct Failure {
    code: u8,
    category: &'static str,
    message: String,
}

enum Stage {
    Config,
    Compute,
}

fn classify(stage: Stage, e: CoreError) -> Failure {
    let code = match (&e, &stage) {
        (CoreError::Io(_), _) => 3,
        (_, Stage::Config) => 2,
        (_, Stage::Compute) => 1,
    };
    Failure {
        code,
        category: e.category(),
        message: e.to_string(),
    }
}

fn config_err(e: CoreError) -> Failure {
    classify(Stage::Config, e)
}

fn compute_err(e: CoreError) -> Failure {
    classify(Stage::Compute, e)
}

fn io_err(e: std::io::Error) -> Failure {
    Failure {
        code: 3,
        category: "io",
        message: e.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    #[cfg(feature = "parallel")]
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("zetaband: error[domain]: --threads must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("zetaband: error[domain]: {e}");
            return ExitCode::from(2);
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = cli.threads;

    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("zetaband: error[{}]: {}", f.category, f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut policy = EvalPolicy::default();
    if let Some(terms) = cli.direct_terms {
        policy.direct_terms = terms;
    }
    if let Some(tol) = cli.target_tol {
        policy.hurwitz_params.target_tol = tol;
    }
    policy.validate().map_err(config_err)?;

    match &cli.command {
        Command::Eval(args) => {
            let v = f_eval(Complex::new(args.sigma, args.t), args.a, &policy)
                .map_err(compute_err)?;
            println!("{} {}", sig12(v.re), sig12(v.im));
            Ok(())
        }
        Command::Coeffs(args) => cmd_coeffs(args, &policy),
        Command::Average(args) => cmd_average(&cli, args, &policy),
        Command::Fig1(args) => cmd_average(&cli, args, &policy),
        Command::Landau(args) => cmd_landau(&cli, args),
        Command::Discrepancy(args) => cmd_discrepancy(&cli, args),
        Command::Encrypt(args) => cmd_encrypt(&cli, args),
        Command::Decrypt(args) => cmd_decrypt(&cli, args),
        Command::Ingest(args) => cmd_ingest(args),
    }
}

fn load_table(cli: &Cli) -> Result<ZeroTable, Failure> {
    let path = cli.zeros.as_ref().ok_or_else(|| Failure {
        code: 2,
        category: "domain",
        message: "no zero table: pass --zeros <PATH> or set ZB_ZEROS_PATH".into(),
    })?;
    ZeroTable::load(path).map_err(config_err)
}

fn parse_list<T: std::str::FromStr>(raw: &str, what: &str) -> Result<Vec<T>, Failure> {
    raw.split(',')
        .map(|tok| {
            tok.trim().parse::<T>().map_err(|_| Failure {
                code: 2,
                category: "parse",
                message: format!("invalid {what} entry {tok:?}"),
            })
        })
        .collect()
}

fn format_for(path: Option<&PathBuf>) -> ExportFormat {
    match path {
        Some(p) if p.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) => {
            ExportFormat::Json
        }
        _ => ExportFormat::Csv,
    }
}

/// Runs `write` against the chosen sink, buffering file output.
fn with_sink<F>(path: Option<&PathBuf>, write: F) -> Result<(), Failure>
where
    F: FnOnce(&mut dyn Write) -> Result<(), Failure>,
{
    match path {
        Some(p) => {
            let file = File::create(p).map_err(io_err)?;
            let mut out = BufWriter::new(file);
            write(&mut out)?;
            out.flush().map_err(io_err)
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)
        }
    }
}

fn write_rows(
    out: &mut dyn Write,
    format: ExportFormat,
    header: &[&str],
    rows: &[Vec<String>],
) -> Result<(), Failure> {
    match format {
        ExportFormat::Csv => {
            writeln!(out, "{}", header.join(",")).map_err(io_err)?;
            for row in rows {
                writeln!(out, "{}", row.join(",")).map_err(io_err)?;
            }
        }
        ExportFormat::Json => {
            writeln!(out, "[").map_err(io_err)?;
            for (i, row) in rows.iter().enumerate() {
                let fields: Vec<String> = header
                    .iter()
                    .zip(row)
                    .map(|(h, v)| format!("\"{h}\": {v}"))
                    .collect();
                let sep = if i + 1 == rows.len() { "" } else { "," };
                writeln!(out, "  {{{}}}{}", fields.join(", "), sep).map_err(io_err)?;
            }
            writeln!(out, "]").map_err(io_err)?;
        }
    }
    Ok(())
}

fn cmd_coeffs(args: &CoeffsArgs, policy: &EvalPolicy) -> Result<(), Failure> {
    let ks: Vec<i64> = parse_list(&args.k, "mode")?;
    let s = Complex::new(args.sigma, args.t);
    let table = fourier_coeff_table(s, &ks, args.grid, policy).map_err(compute_err)?;
    let rows: Vec<Vec<String>> = table
        .iter()
        .map(|(k, closed, numeric)| {
            vec![
                k.to_string(),
                sig12(closed.re),
                sig12(closed.im),
                sig12(numeric.re),
                sig12(numeric.im),
                sig12((numeric - closed).norm()),
            ]
        })
        .collect();
    with_sink(args.out.as_ref(), |out| {
        write_rows(
            out,
            format_for(args.out.as_ref()),
            &["k", "re_closed", "im_closed", "re_numeric", "im_numeric", "abs_err"],
            &rows,
        )
    })
}

fn cmd_average(cli: &Cli, args: &AverageArgs, policy: &EvalPolicy) -> Result<(), Failure> {
    let table = load_table(cli)?;
    let format = format_for(args.out.as_ref());
    with_sink(args.out.as_ref(), |out| {
        fig1_export(&table, args.n, args.sigma, args.grid, policy, out, format).map_err(|e| {
            match e {
                CoreError::Io(io) => io_err(io),
                other => compute_err(other),
            }
        })
    })
}

fn cmd_landau(cli: &Cli, args: &LandauArgs) -> Result<(), Failure> {
    let table = load_table(cli)?;
    let xs: Vec<f64> = parse_list(&args.x, "x")?;
    let t_max = args
        .t_max
        .unwrap_or_else(|| *table.ordinates().last().expect("nonempty table"));
    let rows: Vec<Vec<String>> = xs
        .iter()
        .map(|&x| {
            let r = landau_sum(&table, x, t_max).map_err(compute_err)?;
            Ok(vec![
                sig12(r.x),
                sig12(r.t_max),
                sig12(r.sum.re),
                sig12(r.sum.im),
                sig12(r.prediction.re),
                sig12(r.ratio.re),
            ])
        })
        .collect::<Result<_, Failure>>()?;
    with_sink(args.out.as_ref(), |out| {
        write_rows(
            out,
            format_for(args.out.as_ref()),
            &["x", "T", "re_sum", "im_sum", "prediction", "ratio"],
            &rows,
        )
    })
}

fn cmd_discrepancy(cli: &Cli, args: &DiscrepancyArgs) -> Result<(), Failure> {
    let table = load_table(cli)?;
    let ns: Vec<usize> = parse_list(&args.n, "N")?;
    let rows: Vec<Vec<String>> = ns
        .iter()
        .map(|&n| {
            let d = zetaband_core::discrepancy(&table, args.alpha, n).map_err(compute_err)?;
            Ok(vec![sig12(args.alpha), n.to_string(), sig12(d)])
        })
        .collect::<Result<_, Failure>>()?;
    with_sink(args.out.as_ref(), |out| {
        write_rows(
            out,
            format_for(args.out.as_ref()),
            &["alpha", "N", "d_star"],
            &rows,
        )
    })
}

fn read_spectrum(path: &Path) -> Result<Spectrum, Failure> {
    let file = File::open(path).map_err(io_err)?;
    Spectrum::read(file).map_err(config_err)
}

fn write_spectrum(spec: &Spectrum, path: Option<&PathBuf>) -> Result<(), Failure> {
    with_sink(path, |out| {
        spec.write(out).map_err(|e| match e {
            CoreError::Io(io) => io_err(io),
            other => compute_err(other),
        })
    })
}

fn cmd_encrypt(cli: &Cli, args: &EncryptArgs) -> Result<(), Failure> {
    let table = load_table(cli)?;
    let spec = read_spectrum(&args.input)?;
    let key = EncryptionKey {
        sigma: args.sigma,
        zero_index: args.zero_index,
        cutoff_k: args.cutoff,
    };
    key.validate().map_err(config_err)?;
    let encrypted = encrypt_spectrum(&spec, &key, &table).map_err(compute_err)?;
    let tail = zetaband_core::codec::cutoff_tail_bound(key.sigma, key.cutoff_k);
    if tail.is_finite() {
        eprintln!(
            "zetaband: cutoff K = {} drops at most {} per unit input coefficient",
            key.cutoff_k,
            sig12(tail)
        );
    } else {
        eprintln!(
            "zetaband: cutoff K = {} tail is not absolutely summable at sigma = {} \
             (recovery relies on averaging)",
            key.cutoff_k, key.sigma
        );
    }
    write_spectrum(&encrypted, args.out.as_ref())?;

    if let Some(wave_path) = &args.waveform {
        let samples = synthesize(&encrypted, args.grid).map_err(compute_err)?;
        with_sink(Some(wave_path), |out| {
            writeln!(out, "a,re,im").map_err(io_err)?;
            for (j, v) in samples.iter().enumerate() {
                writeln!(
                    out,
                    "{},{},{}",
                    sig12(midpoint_node(j, samples.len())),
                    sig12(v.re),
                    sig12(v.im)
                )
                .map_err(io_err)?;
            }
            Ok(())
        })?;
    }
    Ok(())
}

fn cmd_decrypt(cli: &Cli, args: &DecryptArgs) -> Result<(), Failure> {
    let table = load_table(cli)?;
    let spec = read_spectrum(&args.input)?;
    let key = EncryptionKey {
        sigma: args.sigma,
        zero_index: args.zero_index,
        cutoff_k: args.cutoff,
    };
    key.validate().map_err(config_err)?;
    let decrypted = decrypt_exact(&spec, &key, &table).map_err(compute_err)?;
    write_spectrum(&decrypted, args.out.as_ref())
}

fn cmd_ingest(args: &IngestArgs) -> Result<(), Failure> {
    let table = ZeroTable::load(&args.path).map_err(config_err)?;
    println!(
        "ok: {} ordinates, t_1 = {}, t_max = {}, source = {}",
        table.len(),
        sig12(table.ordinate(1).expect("nonempty")),
        sig12(*table.ordinates().last().expect("nonempty")),
        table.source_label()
    );
    Ok(())
}

//! Command-line front end: signal generation, decomposition commands,
//! diagram emission, and machine-readable JSON reports.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use perspace::halving;
use perspace::io::{digest, CheckEntry, Format, OutputEntry, Report, SignalFile};
use perspace::lattice;
use perspace::subspaces::{self, SubspaceLabel};
use perspace::{Error, Generator, Rational, Signal};

#[derive(Parser)]
#[command(
    name = "perspace",
    version,
    about = "Decompose sampled periodic signals into periodic and antiperiodic parts"
)]
struct Cli {
    /// Tolerance for membership checks and series convergence
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Output format: csv or json for signals, dot or json for diagrams
    #[arg(long, global = true)]
    format: Option<String>,

    /// Output file (gen, fold) or directory (decompose, series, project)
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Include a unix timestamp in reports
    #[arg(long, global = true)]
    stamp: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum GenKind {
    Sawtooth,
    Cos,
    Sin,
    Constant,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ProjectMode {
    P3,
    Ap3,
    Ap6,
    Cyclotomic,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a signal file from a named waveform
    Gen {
        kind: GenKind,
        /// Period as an exact rational, e.g. 1, 3/2, 0.5
        #[arg(long)]
        period: String,
        /// Number of samples across one period
        #[arg(long)]
        samples: usize,
        /// Frequency for cos/sin: the waveform is cos(2 pi freq x)
        #[arg(long)]
        freq: Option<String>,
        /// Value for the constant generator
        #[arg(long, allow_hyphen_values = true)]
        value: Option<f64>,
    },
    /// Split a signal into halving generations f_n, ft_1..ft_n
    Decompose {
        input: PathBuf,
        /// Number of halving levels
        #[arg(long)]
        levels: u32,
        /// Period override for CSV inputs
        #[arg(long)]
        period: Option<String>,
    },
    /// Expand a signal into its antiperiodic series
    Series {
        input: PathBuf,
        /// Maximum number of levels to try
        #[arg(long, default_value_t = 8)]
        max_levels: u32,
        #[arg(long)]
        period: Option<String>,
    },
    /// Check membership: P q, AP q, or the kernel classes S, T, U
    Check {
        input: PathBuf,
        /// One of P, AP, S, T, U
        kind: String,
        /// Rational period/antiperiod, required for P and AP
        param: Option<String>,
        #[arg(long)]
        period: Option<String>,
    },
    /// Fold onto a subperiod: (I + E^d + ... + E^{(m-1)d}) f
    Fold {
        input: PathBuf,
        /// Target divisor of the period
        #[arg(short, long)]
        d: u64,
        /// Divide by m = p/d, the averaging form
        #[arg(long)]
        normalized: bool,
        #[arg(long)]
        period: Option<String>,
    },
    /// Project onto subspace components
    Project {
        input: PathBuf,
        #[arg(long)]
        mode: ProjectMode,
        #[arg(long)]
        period: Option<String>,
    },
    /// Print the periodicity diagram of the period-p space
    Diagram {
        #[arg(short, long)]
        p: u64,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ParseError(_)
        | Error::Io(_)
        | Error::InvalidParameter(_)
        | Error::LengthMismatch { .. } => 2,
        Error::IncommensurateShift { .. }
        | Error::GridMismatch
        | Error::OddSampleCount(_)
        | Error::GridNotDivisible { .. }
        | Error::NotADivisor { .. }
        | Error::EvenQuotient { .. }
        | Error::IntegerGridRequired(_) => 3,
        Error::SingularOperator { .. } | Error::NumericInconsistency(_) => 4,
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(exit_code(&e));
    }
}

fn parse_rational(text: &str) -> Result<Rational, Error> {
    text.parse()
}

fn signal_format(cli_format: &Option<String>, path: Option<&Path>) -> Result<Format, Error> {
    match cli_format.as_deref() {
        Some("csv") => Ok(Format::Csv),
        Some("json") => Ok(Format::Json),
        Some(other) => Err(Error::ParseError(format!(
            "unknown signal format {other:?}; expected csv or json"
        ))),
        None => Ok(path
            .and_then(|p| p.to_str())
            .and_then(Format::from_extension)
            .unwrap_or(Format::Csv)),
    }
}

fn command_echo() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn stamp_now() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

struct LoadedSignal {
    signal: Signal,
    digest: String,
}

fn read_signal(input: &Path, period: &Option<String>) -> Result<LoadedSignal, Error> {
    let bytes = fs::read(input)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::ParseError(format!("{} is not UTF-8", input.display())))?;
    let period = match period {
        Some(p) => Some(parse_rational(p)?),
        None => None,
    };
    let file = SignalFile::parse(&text, period)?;
    Ok(LoadedSignal {
        signal: file.to_signal()?,
        digest: digest(&bytes),
    })
}

/// Write one signal under `dir/label.ext` or record it inline.
fn emit_part(
    dir: &Option<PathBuf>,
    format: Format,
    label: &str,
    signal: &Signal,
) -> Result<OutputEntry, Error> {
    let file = SignalFile::from_signal(signal);
    match dir {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            let path = dir.join(format!("{label}.{}", format.extension()));
            fs::write(&path, file.emit(format))?;
            Ok(OutputEntry {
                label: label.to_string(),
                file: Some(path.display().to_string()),
                values: None,
            })
        }
        None => Ok(OutputEntry {
            label: label.to_string(),
            file: None,
            values: Some(file.samples),
        }),
    }
}

fn periodic_check(label: &str, f: &Signal, q: Rational, tol: f64) -> Result<CheckEntry, Error> {
    let residual = f.shift_deviation(q, 1.0)?;
    Ok(CheckEntry {
        label: label.to_string(),
        predicate: format!("P({q})"),
        tol,
        residual,
        pass: residual <= tol,
    })
}

fn antiperiodic_check(label: &str, f: &Signal, q: Rational, tol: f64) -> Result<CheckEntry, Error> {
    let residual = f.shift_deviation(q, -1.0)?;
    Ok(CheckEntry {
        label: label.to_string(),
        predicate: format!("AP({q})"),
        tol,
        residual,
        pass: residual <= tol,
    })
}

fn kernel_check(
    label: &str,
    f: &Signal,
    k: u64,
    name: &str,
    tol: f64,
) -> Result<CheckEntry, Error> {
    let image = subspaces::cyclotomic_poly(k).to_shift_poly().apply(f)?;
    let residual = image.sup_norm() / (1.0 + f.sup_norm());
    Ok(CheckEntry {
        label: label.to_string(),
        predicate: name.to_string(),
        tol,
        residual,
        pass: residual <= tol,
    })
}

fn run(cli: Cli) -> Result<(), Error> {
    let mut report = Report::new(command_echo());
    report.tolerance = Some(cli.tol);
    if cli.stamp {
        report.stamp = Some(stamp_now());
    }

    match &cli.command {
        Command::Gen {
            kind,
            period,
            samples,
            freq,
            value,
        } => {
            let period = parse_rational(period)?;
            let grid = perspace::Grid::new(period, *samples)?;
            let generator = match kind {
                GenKind::Sawtooth => Generator::Sawtooth,
                GenKind::Cos | GenKind::Sin => {
                    let freq = freq
                        .as_deref()
                        .ok_or_else(|| Error::InvalidParameter("cos/sin need --freq".into()))?;
                    let freq = parse_rational(freq)?;
                    if *kind == GenKind::Cos {
                        Generator::Cos { freq }
                    } else {
                        Generator::Sin { freq }
                    }
                }
                GenKind::Constant => Generator::Constant(
                    value
                        .ok_or_else(|| Error::InvalidParameter("constant needs --value".into()))?,
                ),
            };
            let signal = Signal::generate(grid, generator)?;
            let format = signal_format(&cli.format, cli.out.as_deref())?;
            let text = SignalFile::from_signal(&signal).emit(format);
            match &cli.out {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(())
        }

        Command::Decompose {
            input,
            levels,
            period,
        } => {
            let loaded = read_signal(input, period)?;
            let f = &loaded.signal;
            report.input_digest = Some(loaded.digest);
            let table = halving::generation_table(f, *levels)?;
            let format = signal_format(&cli.format, None)?;

            let remainder = table.periodic.last().unwrap_or(&table.source);
            let remainder_label = format!("f_{levels}");
            report
                .outputs
                .push(emit_part(&cli.out, format, &remainder_label, remainder)?);
            let mut q = f.grid().period();
            let mut checks = Vec::new();
            for (k, term) in table.antiperiodic.iter().enumerate() {
                q /= Rational::integer(2);
                let label = format!("ft_{}", k + 1);
                report
                    .outputs
                    .push(emit_part(&cli.out, format, &label, term)?);
                checks.push(antiperiodic_check(&label, term, q, cli.tol)?);
            }
            if *levels > 0 {
                checks.insert(0, periodic_check(&remainder_label, remainder, q, cli.tol)?);
            }
            report.checks = checks;
            let back = table.recombined()?;
            report.reconstruction_residual = Some(perspace::max_abs_diff(&back, f)?);
            println!("{}", report.to_json());
            Ok(())
        }

        Command::Series {
            input,
            max_levels,
            period,
        } => {
            let loaded = read_signal(input, period)?;
            let f = &loaded.signal;
            report.input_digest = Some(loaded.digest);
            let series = halving::antiperiodic_series(f, cli.tol, *max_levels)?;
            if cli.out.is_some() {
                let format = signal_format(&cli.format, None)?;
                for (k, term) in series.partial_terms.iter().enumerate() {
                    let label = format!("ft_{}", k + 1);
                    report
                        .outputs
                        .push(emit_part(&cli.out, format, &label, term)?);
                }
            }
            report.residual_norms = Some(series.residual_norms.clone());
            report.converged = Some(series.converged);
            report.levels_used = Some(series.levels_used);
            println!("{}", report.to_json());
            Ok(())
        }

        Command::Check {
            input,
            kind,
            param,
            period,
        } => {
            let loaded = read_signal(input, period)?;
            let f = &loaded.signal;
            report.input_digest = Some(loaded.digest);
            let need_param = || {
                param.as_deref().ok_or_else(|| {
                    Error::InvalidParameter(format!("{kind} needs a period argument"))
                })
            };
            let check = match kind.as_str() {
                "P" => periodic_check("input", f, parse_rational(need_param()?)?, cli.tol)?,
                "AP" => antiperiodic_check("input", f, parse_rational(need_param()?)?, cli.tol)?,
                "S" => kernel_check("input", f, 3, "S", cli.tol)?,
                "T" => kernel_check("input", f, 6, "T", cli.tol)?,
                "U" => kernel_check("input", f, 12, "U", cli.tol)?,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown membership kind {other:?}; expected P, AP, S, T, or U"
                    )))
                }
            };
            report.result = Some(check.pass);
            report.checks.push(check);
            println!("{}", report.to_json());
            Ok(())
        }

        Command::Fold {
            input,
            d,
            normalized,
            period,
        } => {
            let loaded = read_signal(input, period)?;
            let f = &loaded.signal;
            report.input_digest = Some(loaded.digest);
            let p = f.grid().integer_period()?;
            let folded = if *normalized {
                subspaces::normalized_fold(f, p, *d)?
            } else {
                subspaces::fold(f, p, *d)?
            };
            let format = signal_format(&cli.format, cli.out.as_deref())?;
            let label = format!("f_{d}");
            match &cli.out {
                Some(path) => {
                    if let Some(parent) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                        fs::create_dir_all(parent)?;
                    }
                    fs::write(path, SignalFile::from_signal(&folded).emit(format))?;
                    report.outputs.push(OutputEntry {
                        label: label.clone(),
                        file: Some(path.display().to_string()),
                        values: None,
                    });
                }
                None => report.outputs.push(OutputEntry {
                    label: label.clone(),
                    file: None,
                    values: Some(folded.values().to_vec()),
                }),
            }
            report.checks.push(periodic_check(
                &label,
                &folded,
                Rational::integer(*d as i64),
                cli.tol,
            )?);
            println!("{}", report.to_json());
            Ok(())
        }

        Command::Project {
            input,
            mode,
            period,
        } => {
            let loaded = read_signal(input, period)?;
            let f = &loaded.signal;
            report.input_digest = Some(loaded.digest);
            let format = signal_format(&cli.format, None)?;

            let mut parts: Vec<(String, Signal, CheckEntry)> = Vec::new();
            match mode {
                ProjectMode::P3 => {
                    let (g, h) = subspaces::project_p3(f)?;
                    let check_g = periodic_check("P_1", &g, Rational::one(), cli.tol)?;
                    let check_h = kernel_check("S", &h, 3, "S", cli.tol)?;
                    parts.push(("P_1".into(), g, check_g));
                    parts.push(("S".into(), h, check_h));
                }
                ProjectMode::Ap3 => {
                    let (g, h) = subspaces::project_ap3(f)?;
                    let check_g = antiperiodic_check("AP_1", &g, Rational::one(), cli.tol)?;
                    let check_h = kernel_check("T", &h, 6, "T", cli.tol)?;
                    parts.push(("AP_1".into(), g, check_g));
                    parts.push(("T".into(), h, check_h));
                }
                ProjectMode::Ap6 => {
                    let (g, h) = subspaces::project_ap6(f)?;
                    let check_g = antiperiodic_check("AP_2", &g, Rational::integer(2), cli.tol)?;
                    let check_h = kernel_check("U", &h, 12, "U", cli.tol)?;
                    parts.push(("AP_2".into(), g, check_g));
                    parts.push(("U".into(), h, check_h));
                }
                ProjectMode::Cyclotomic => {
                    let p = f.grid().integer_period()?;
                    let decomposition = subspaces::cyclotomic_decompose(f, p)?;
                    for (label, part) in decomposition.parts {
                        let name = label.to_string();
                        let check = match label {
                            SubspaceLabel::P(d) => {
                                periodic_check(&name, &part, Rational::integer(d as i64), cli.tol)?
                            }
                            SubspaceLabel::AP(d) => antiperiodic_check(
                                &name,
                                &part,
                                Rational::integer(d as i64),
                                cli.tol,
                            )?,
                            SubspaceLabel::C(k) => kernel_check(&name, &part, k, &name, cli.tol)?,
                        };
                        parts.push((name, part, check));
                    }
                }
            }

            let mut sum = Signal::zero(*f.grid());
            for (label, part, check) in &parts {
                report
                    .outputs
                    .push(emit_part(&cli.out, format, label, part)?);
                report.checks.push(check.clone());
                sum = perspace::combine(1.0, &sum, 1.0, part)?;
            }
            report.reconstruction_residual = Some(perspace::max_abs_diff(&sum, f)?);
            println!("{}", report.to_json());
            Ok(())
        }

        Command::Diagram { p } => {
            let diagram = lattice::build_diagram(*p);
            match cli.format.as_deref() {
                None | Some("dot") => print!("{}", lattice::to_dot(&diagram)),
                Some("json") => println!("{}", lattice::to_json(&diagram)),
                Some(other) => {
                    return Err(Error::ParseError(format!(
                        "unknown diagram format {other:?}; expected dot or json"
                    )))
                }
            }
            Ok(())
        }
    }
}

//! Command-line interface: calendar generation, dating, sensitivity, and
//! model comparison as deterministic, scriptable commands.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Deserialize;
use serde_json::json;

use vjcal::precession::{
    date_from_naksatra_points, Epoch, NaksatraPoint, OriginConvention, PrecessionRate,
};
use vjcal::rational::Rational;
use vjcal::tally;
use vjcal::yuga::{
    self, moon_position, sun_position, IntercalaryPolicy, NaksatraNameTable, NaksatraPosition,
    YugaParameters,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    /// Human-oriented, layout not guaranteed stable.
    Table,
    /// Schema-stable JSON.
    Json,
    /// Schema-stable CSV.
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "vjcal", version, about = "Exact-arithmetic five-year-yuga calendar and precession dating tool")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,

    /// Optional TOML config file (names path, default rate, default error
    /// band). Flags win over config values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Nakṣatra names file: one name per line, origin first.
    #[arg(long, global = true)]
    names: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Yuga-cycle calendar operations.
    Yuga {
        #[command(subcommand)]
        command: YugaCommand,
    },
    /// Moon nakṣatra position after a given number of fortnights.
    MoonPosition {
        #[arg(long)]
        fortnight: u64,
        #[command(flatten)]
        params: ParamOverrides,
    },
    /// Sun nakṣatra position after a given number of fortnights
    /// (model-completed rate).
    SunPosition {
        #[arg(long)]
        fortnight: u64,
        #[command(flatten)]
        params: ParamOverrides,
    },
    /// Date a conjunction from two nakṣatra reference points by precession.
    Date {
        /// Reference point, `<segment>:<p/q>` or `<name>:<p/q>`.
        #[arg(long)]
        from: String,
        /// Reference point, same syntax as --from.
        #[arg(long)]
        to: String,
        /// Known epoch, e.g. `530CE`, `1151BCE`, or an astronomical year.
        #[arg(long)]
        epoch: String,
        /// Precession rate in years per degree, e.g. `72` or `716/10`.
        #[arg(long)]
        rate: Option<String>,
        /// Observation error band in degrees, e.g. `2`.
        #[arg(long)]
        error_deg: Option<String>,
        /// Ecliptic longitude of segment 0 in degrees (default 880/3, which
        /// puts a Dhaniṣṭhā-first table on the standard sidereal circle).
        #[arg(long)]
        origin_deg: Option<String>,
    },
    /// Years of dating drift per degree of observation error.
    Sensitivity {
        #[arg(long)]
        error_deg: String,
        #[arg(long)]
        rate: Option<String>,
    },
    /// Compare the whole-number tally model against the rational model.
    CompareModels {
        /// Highest fortnight to check (inclusive, from 0).
        #[arg(long)]
        max: u64,
        #[command(flatten)]
        params: ParamOverrides,
    },
    /// Greedy unit-fraction decomposition of a proper fraction.
    Decompose {
        /// A rational in (0,1), e.g. `73/124`.
        #[arg(long)]
        rational: String,
    },
    /// Sixth-share tax separation on a whole number of measures.
    Tax {
        #[arg(long)]
        measures: u64,
    },
}

#[derive(Debug, Subcommand)]
enum YugaCommand {
    /// Full per-fortnight moon/sun position table for one yuga.
    Table {
        #[command(flatten)]
        params: ParamOverrides,
    },
    /// Month ordinals after which intercalary months are inserted.
    Intercalary {
        /// Placement policy.
        #[arg(long, value_enum, default_value_t = PolicyArg::EndOfHalfYuga)]
        policy: PolicyArg,
        /// Explicit comma-separated month ordinals (with --policy explicit).
        #[arg(long, value_delimiter = ',')]
        months: Vec<u64>,
        #[command(flatten)]
        params: ParamOverrides,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    EndOfHalfYuga,
    EndOfYugaOnly,
    Explicit,
}

#[derive(Debug, Args)]
struct ParamOverrides {
    #[arg(long)]
    years: Option<u64>,
    #[arg(long)]
    solar_months: Option<u64>,
    #[arg(long)]
    synodic_months: Option<u64>,
    #[arg(long)]
    sidereal_months: Option<u64>,
    #[arg(long)]
    naksatras: Option<u64>,
    #[arg(long)]
    fortnights: Option<u64>,
    #[arg(long)]
    traversals: Option<u64>,
}

impl ParamOverrides {
    fn resolve(&self) -> Result<YugaParameters, CliError> {
        let mut p = YugaParameters::default();
        if let Some(v) = self.years {
            p.years = v;
        }
        if let Some(v) = self.solar_months {
            p.solar_months = v;
        }
        if let Some(v) = self.synodic_months {
            p.synodic_months = v;
        }
        if let Some(v) = self.sidereal_months {
            p.sidereal_months = v;
        }
        if let Some(v) = self.naksatras {
            p.naksatra_count = v;
        }
        if let Some(v) = self.fortnights {
            p.fortnights = v;
        }
        if let Some(v) = self.traversals {
            p.moon_traversals = v;
        }
        p.validate().map_err(CliError::usage)?;
        Ok(p)
    }
}

/// Optional config file; flags take precedence.
#[derive(Debug, Default, Deserialize)]
struct Config {
    names: Option<PathBuf>,
    rate_years_per_degree: Option<String>,
    error_deg: Option<String>,
    origin_deg: Option<String>,
}

#[derive(Debug)]
struct CliError {
    message: String,
    usage: bool,
}

impl CliError {
    fn usage(e: impl ToString) -> Self {
        Self {
            message: e.to_string(),
            usage: true,
        }
    }

    fn domain(e: impl ToString) -> Self {
        Self {
            message: e.to_string(),
            usage: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            if e.usage {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn load_config(cli: &Cli) -> Result<Config, CliError> {
    let Some(path) = &cli.config else {
        return Ok(Config::default());
    };
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::domain(format!("cannot read config {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(CliError::domain)
}

fn load_names(
    cli: &Cli,
    config: &Config,
    naksatra_count: u64,
) -> Result<NaksatraNameTable, CliError> {
    let path = cli.names.as_ref().or(config.names.as_ref());
    match path {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| {
                CliError::domain(format!("cannot read names file {}: {e}", p.display()))
            })?;
            NaksatraNameTable::from_text(&text, naksatra_count).map_err(CliError::domain)
        }
        None if naksatra_count == 27 => Ok(NaksatraNameTable::default_table()),
        None => Err(CliError::usage(format!(
            "a names file with {naksatra_count} entries is required for non-default parameters"
        ))),
    }
}

fn parse_rational(s: &str, what: &str) -> Result<Rational, CliError> {
    Rational::from_str(s).map_err(|_| CliError::usage(format!("cannot parse {what} from {s:?}")))
}

/// Case- and diacritic-insensitive folding for nakṣatra name lookup.
fn fold_name(s: &str) -> String {
    s.chars()
        .flat_map(char::to_lowercase)
        .filter_map(|c| match c {
            'ā' => Some('a'),
            'ī' => Some('i'),
            'ū' => Some('u'),
            'ṛ' | 'ṝ' => Some('r'),
            'ḷ' => Some('l'),
            'ṅ' | 'ñ' | 'ṇ' => Some('n'),
            'ṭ' => Some('t'),
            'ḍ' => Some('d'),
            'ś' | 'ṣ' => Some('s'),
            'ḥ' => Some('h'),
            'ṃ' => Some('m'),
            ' ' | '-' | '_' => None,
            '\u{0300}'..='\u{036f}' => None, // combining marks
            c => Some(c),
        })
        .collect()
}

fn parse_point(spec: &str, table: &NaksatraNameTable) -> Result<NaksatraPoint, CliError> {
    let (head, frac) = spec
        .split_once(':')
        .ok_or_else(|| CliError::usage(format!("point must be <segment|name>:<p/q>, got {spec:?}")))?;
    let progress = parse_rational(frac, "progress fraction")?;
    let segment = if let Ok(n) = head.parse::<u64>() {
        n
    } else {
        let wanted = fold_name(head);
        table
            .names()
            .iter()
            .position(|n| fold_name(n) == wanted)
            .ok_or_else(|| CliError::usage(format!("unknown nakṣatra name {head:?}")))?
            as u64
    };
    if segment >= table.len() as u64 {
        return Err(CliError::usage(format!(
            "segment {segment} out of range [0, {})",
            table.len()
        )));
    }
    Ok(NaksatraPoint { segment, progress })
}

fn position_output(
    format: OutputFormat,
    body: &str,
    fortnight: u64,
    pos: &NaksatraPosition,
    name: &str,
) -> String {
    match format {
        OutputFormat::Json => {
            let v = json!({
                "body": body,
                "fortnight": fortnight,
                "segment": pos.segment(),
                "progress": pos.progress().to_string(),
                "mixed": pos.total().to_mixed().to_string(),
                "name": name,
            });
            serde_json::to_string_pretty(&v).expect("serializable")
        }
        OutputFormat::Csv => {
            let mut s = String::from("body,fortnight,segment,progress,mixed,name\n");
            let _ = writeln!(
                s,
                "{body},{fortnight},{},{},{},{name}",
                pos.segment(),
                pos.progress(),
                pos.total().to_mixed()
            );
            s.trim_end().to_string()
        }
        OutputFormat::Table => format!(
            "{body} after fortnight {fortnight}: segment {} ({name}), progress {}, position {}",
            pos.segment(),
            pos.progress(),
            pos.total().to_mixed()
        ),
    }
}

fn yuga_table_output(format: OutputFormat, rows: &[yuga::FortnightRecord]) -> String {
    match format {
        OutputFormat::Json => yuga::table_to_json(rows).expect("serializable"),
        OutputFormat::Csv => {
            let mut s = String::from(
                "fortnight,moon_segment,moon_progress,moon_mixed,moon_name,sun_segment,sun_progress,sun_mixed,sun_name\n",
            );
            for r in rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{}",
                    r.fortnight,
                    r.moon_segment,
                    r.moon_progress,
                    r.moon_mixed,
                    r.moon_name,
                    r.sun_segment,
                    r.sun_progress,
                    r.sun_mixed,
                    r.sun_name
                );
            }
            s.trim_end().to_string()
        }
        OutputFormat::Table => {
            let mut s = format!(
                "{:>9}  {:>12} {:<18} {:>12} {:<18}\n",
                "fortnight", "moon", "(name)", "sun", "(name)"
            );
            for r in rows {
                let _ = writeln!(
                    s,
                    "{:>9}  {:>12} {:<18} {:>12} {:<18}",
                    r.fortnight, r.moon_mixed, r.moon_name, r.sun_mixed, r.sun_name
                );
            }
            s.trim_end().to_string()
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let config = load_config(cli)?;
    match &cli.command {
        Command::Yuga { command } => match command {
            YugaCommand::Table { params } => {
                let p = params.resolve()?;
                let table = load_names(cli, &config, p.naksatra_count)?;
                let rows = yuga::yuga_table(&p, &table);
                println!("{}", yuga_table_output(cli.format, &rows));
                Ok(ExitCode::SUCCESS)
            }
            YugaCommand::Intercalary {
                policy,
                months,
                params,
            } => {
                let p = params.resolve()?;
                let policy = match policy {
                    PolicyArg::EndOfHalfYuga => IntercalaryPolicy::EndOfHalfYuga,
                    PolicyArg::EndOfYugaOnly => IntercalaryPolicy::EndOfYugaOnly,
                    PolicyArg::Explicit => IntercalaryPolicy::Explicit(months.clone()),
                };
                let schedule = yuga::intercalary_schedule(&p, &policy).map_err(CliError::usage)?;
                match cli.format {
                    OutputFormat::Json => println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({ "months": schedule }))
                            .expect("serializable")
                    ),
                    OutputFormat::Csv => {
                        println!("month");
                        for m in &schedule {
                            println!("{m}");
                        }
                    }
                    OutputFormat::Table => println!(
                        "intercalary months after ordinals: {}",
                        schedule
                            .iter()
                            .map(u64::to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    ),
                }
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::MoonPosition { fortnight, params } => {
            let p = params.resolve()?;
            let table = load_names(cli, &config, p.naksatra_count)?;
            let pos = moon_position(&p, *fortnight);
            let name = yuga::naksatra_name(&pos, &table).to_string();
            println!(
                "{}",
                position_output(cli.format, "moon", *fortnight, &pos, &name)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::SunPosition { fortnight, params } => {
            let p = params.resolve()?;
            let table = load_names(cli, &config, p.naksatra_count)?;
            let pos = sun_position(&p, *fortnight);
            let name = yuga::naksatra_name(&pos, &table).to_string();
            println!(
                "{}",
                position_output(cli.format, "sun", *fortnight, &pos, &name)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Date {
            from,
            to,
            epoch,
            rate,
            error_deg,
            origin_deg,
        } => {
            let table = load_names(cli, &config, 27)?;
            let point_a = parse_point(from, &table)?;
            let point_b = parse_point(to, &table)?;
            let known = Epoch::parse(epoch).map_err(CliError::usage)?;
            let rate_str = rate
                .clone()
                .or_else(|| config.rate_years_per_degree.clone())
                .unwrap_or_else(|| "72".into());
            let rate = PrecessionRate::new(parse_rational(&rate_str, "precession rate")?)
                .map_err(CliError::usage)?;
            let error_str = error_deg
                .clone()
                .or_else(|| config.error_deg.clone())
                .unwrap_or_else(|| "0".into());
            let error = parse_rational(&error_str, "error band")?;
            if error.is_negative() {
                return Err(CliError::usage("error band must be nonnegative"));
            }
            let origin_str = origin_deg
                .clone()
                .or_else(|| config.origin_deg.clone())
                .unwrap_or_else(|| "880/3".into());
            let origin = OriginConvention::new(parse_rational(&origin_str, "origin longitude")?);
            let report =
                date_from_naksatra_points(&point_a, &point_b, known, &rate, &origin, &error)
                    .map_err(CliError::domain)?;
            match cli.format {
                OutputFormat::Table => {
                    println!("longitude A : {} ({})", report.longitude_a.dms, report.longitude_a.degrees);
                    println!("longitude B : {} ({})", report.longitude_b.dms, report.longitude_b.degrees);
                    println!("separation  : {} deg", report.separation);
                    println!(
                        "elapsed     : {} years (exact {})",
                        report.elapsed_years_rounded, report.elapsed_years_exact
                    );
                    println!("date        : {}", report.date.label);
                    println!(
                        "±{}° band   : [{}, {}]",
                        report.sensitivity.error_deg,
                        report.sensitivity.band[0],
                        report.sensitivity.band[1]
                    );
                }
                _ => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sensitivity { error_deg, rate } => {
            let error = parse_rational(error_deg, "error band")?;
            if error.is_negative() {
                return Err(CliError::usage("error must be nonnegative"));
            }
            let rate_str = rate
                .clone()
                .or_else(|| config.rate_years_per_degree.clone())
                .unwrap_or_else(|| "72".into());
            let rate = PrecessionRate::new(parse_rational(&rate_str, "precession rate")?)
                .map_err(CliError::usage)?;
            let years = vjcal::precession::sensitivity(&error, &rate);
            match cli.format {
                OutputFormat::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "error_deg": error.to_string(),
                        "years_per_degree": rate.years_per_degree().to_string(),
                        "drift_years": years.to_string(),
                        "drift_years_decimal": years.to_decimal_string(2),
                    }))
                    .expect("serializable")
                ),
                OutputFormat::Csv => {
                    println!("error_deg,years_per_degree,drift_years");
                    println!("{error},{},{years}", rate.years_per_degree());
                }
                OutputFormat::Table => println!(
                    "±{}° of observation error shifts the date by {} years",
                    error,
                    years.to_decimal_string(2)
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CompareModels { max, params } => {
            let p = params.resolve()?;
            let circle = tally::tally_circle(&p);
            let mut all_agree = true;
            let mut rows = Vec::with_capacity(*max as usize + 1);
            for n in 0..=*max {
                let w = tally::models_agree(&p, n);
                let units = tally::scaled_moon_position(&p, n).count;
                all_agree &= w.agree();
                rows.push((n, units, w));
            }
            match cli.format {
                OutputFormat::Json => {
                    let items: Vec<_> = rows
                        .iter()
                        .map(|(n, units, w)| {
                            json!({
                                "fortnight": n,
                                "tally_units": units.to_string(),
                                "tally_circle": circle,
                                "rational_position": w.rational_position.to_string(),
                                "agree": w.agree(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&items).expect("serializable")
                    );
                }
                _ => {
                    println!("fortnight,tally_units,tally_circle,rational_position,agree");
                    for (n, units, w) in &rows {
                        println!(
                            "{n},{units},{circle},{},{}",
                            w.rational_position,
                            w.agree()
                        );
                    }
                }
            }
            if all_agree {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(CliError::domain("models disagree"))
            }
        }
        Command::Decompose { rational } => {
            let r = parse_rational(rational, "rational")?;
            let d = tally::greedy_unit_fractions(&r).map_err(CliError::domain)?;
            let denominators: Vec<String> =
                d.denominators().iter().map(|d| d.to_string()).collect();
            match cli.format {
                OutputFormat::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "input": r.to_string(),
                        "denominators": denominators,
                        "sum": d.sum().to_string(),
                    }))
                    .expect("serializable")
                ),
                OutputFormat::Csv => {
                    println!("denominator");
                    for den in &denominators {
                        println!("{den}");
                    }
                }
                OutputFormat::Table => println!(
                    "{} = {}",
                    r,
                    denominators
                        .iter()
                        .map(|d| format!("1/{d}"))
                        .collect::<Vec<_>>()
                        .join(" + ")
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tax { measures } => {
            let (tax, remainder) = tally::sixth_share(&BigUint::from(*measures));
            match cli.format {
                OutputFormat::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "measures": measures,
                        "tax": tax.to_string(),
                        "remainder": remainder.to_string(),
                    }))
                    .expect("serializable")
                ),
                OutputFormat::Csv => {
                    println!("measures,tax,remainder");
                    println!("{measures},{tax},{remainder}");
                }
                OutputFormat::Table => println!(
                    "{measures} measures → {tax} for tax, {remainder} left in the incomplete group"
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

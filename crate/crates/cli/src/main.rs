//! `stanley-lab`: enumeration, bijections, generating functions and
//! verification suites for Stanley polyominoes, with JSON-lines output.

use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};
use stanley_core::bijections::{
    chi, chi_prime, f_inv, f_map, h_map, phi, phi_inv, psi, BijectionError,
};
use stanley_core::catalog::{
    a_pqv, gf_area, gf_columns, gf_columns_corollaries, gf_continued_fractions, gf_full_forms,
    gf_semiperimeter, gf_semiperimeter_corollaries, CatalogError, FullForms,
};
use stanley_core::enumerate::{EnumError, Enumerator, FamilyBound, Measure, DEFAULT_CAP};
use stanley_core::objects::{Family, Object};
use stanley_core::report::{Check, Report};
use stanley_core::series::TruncatedSeries;
use stanley_core::verify::{self, Suite, VerifyError};

const CONFIG_ENV: &str = "STANLEY_LAB_CONFIG";
const SOURCE: &str = "input is decoded as the source family";

#[derive(Parser)]
#[command(name = "stanley-lab", version, about = "Stanley polyomino laboratory")]
struct Cli {
    /// Print a leading line with the current time.
    #[arg(long, global = true)]
    timestamps: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct EnumOptions {
    /// Directory for cached enumerations.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Worker threads used inside enumeration.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// List every object of a family at one size.
    Enumerate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        measure: Measure,
        #[arg(long)]
        value: usize,
        /// Print counts grouped by this statistic instead of objects.
        #[arg(long)]
        group_by: Option<String>,
        /// Largest number of objects allowed.
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        options: EnumOptions,
    },
    /// Apply a bijection to each input line.
    Map {
        #[arg(long)]
        bijection: Bijection,
        /// Input file; standard input when absent.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Report invalid lines and carry on.
        #[arg(long)]
        skip_invalid: bool,
    },
    /// Compute a generating function.
    Series {
        #[arg(long)]
        gf: Gf,
        #[arg(long)]
        order: usize,
        /// Depth of the continued fractions.
        #[arg(long)]
        depth: Option<usize>,
        /// Compare against enumeration as well.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        options: EnumOptions,
    },
    /// Run verification suites.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        max_size: Option<usize>,
        #[command(flatten)]
        options: EnumOptions,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Bijection {
    Phi,
    PhiInv,
    Chi,
    ChiPrime,
    F,
    FInv,
    H,
    Psi,
}

impl Bijection {
    fn source(self) -> Family {
        match self {
            Bijection::Phi | Bijection::FInv => Family::Stanley,
            Bijection::PhiInv | Bijection::ChiPrime => Family::Dyck,
            Bijection::Chi => Family::PeaklessMotzkin,
            Bijection::F => Family::Fountain,
            Bijection::H | Bijection::Psi => Family::Parallelogram,
        }
    }

    fn apply(self, obj: &Object) -> Result<Object, BijectionError> {
        Ok(match self {
            Bijection::Phi => Object::Dyck(phi(obj.as_stanley().expect(SOURCE))),
            Bijection::PhiInv => Object::Stanley(phi_inv(obj.as_dyck().expect(SOURCE))),
            Bijection::Chi => Object::Stanley(chi(obj.as_motzkin().expect(SOURCE))?),
            Bijection::ChiPrime => Object::Stanley(chi_prime(obj.as_dyck().expect(SOURCE))?),
            Bijection::F => Object::Stanley(f_map(obj.as_fountain().expect(SOURCE))),
            Bijection::FInv => Object::Fountain(f_inv(obj.as_stanley().expect(SOURCE))?),
            Bijection::H => Object::Dyck(h_map(obj.as_parallelogram().expect(SOURCE))),
            Bijection::Psi => Object::Fountain(psi(obj.as_parallelogram().expect(SOURCE))?),
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Gf {
    Full,
    Columns,
    Semiperimeter,
    Area,
    CfA,
    CfSpecializations,
    Corollaries,
}

/// A failure together with its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn new(code: u8, error: impl Into<anyhow::Error>) -> Self {
        Self {
            code,
            error: error.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Self { code: 1, error }
    }
}

impl From<io::Error> for Failure {
    fn from(error: io::Error) -> Self {
        Self {
            code: 1,
            error: error.into(),
        }
    }
}

impl From<EnumError> for Failure {
    fn from(error: EnumError) -> Self {
        let code = match error {
            EnumError::CapExceeded { .. } => 3,
            EnumError::UnsupportedPair { .. } | EnumError::UnknownStatistic { .. } => 2,
            _ => 1,
        };
        Self::new(code, error)
    }
}

impl From<CatalogError> for Failure {
    fn from(error: CatalogError) -> Self {
        Self::new(5, error)
    }
}

impl From<VerifyError> for Failure {
    fn from(error: VerifyError) -> Self {
        match error {
            VerifyError::Enumeration(e) => e.into(),
            VerifyError::Catalog(e) => e.into(),
            other => Self::new(5, other),
        }
    }
}

/// Defaults read from the file named by `STANLEY_LAB_CONFIG`.
#[derive(Default)]
struct Config {
    cache_dir: Option<PathBuf>,
    jobs: Option<usize>,
}

impl Config {
    fn load() -> Result<Self, Failure> {
        let Some(path) = std::env::var_os(CONFIG_ENV) else {
            return Ok(Self::default());
        };
        let text = fs::read_to_string(&path)
            .with_context(|| format!("reading config {}", PathBuf::from(&path).display()))
            .map_err(|e| Failure::new(2, e))?;
        Self::parse(&text).map_err(|e| Failure::new(2, e))
    }

    fn parse(text: &str) -> anyhow::Result<Self> {
        let mut config = Self::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("config line {}: expected key=value", i + 1))?;
            let value = value.trim();
            match key.trim() {
                "cache_dir" => config.cache_dir = Some(PathBuf::from(value)),
                "jobs" => {
                    config.jobs = Some(
                        value
                            .parse()
                            .with_context(|| format!("config line {}: bad jobs value", i + 1))?,
                    )
                }
                other => return Err(anyhow!("config line {}: unknown key {other:?}", i + 1)),
            }
        }
        Ok(config)
    }

    fn enumerator(&self, options: &EnumOptions) -> Enumerator {
        Enumerator::default()
            .with_jobs(options.jobs.or(self.jobs).unwrap_or(1))
            .with_cache_dir(options.cache_dir.clone().or_else(|| self.cache_dir.clone()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(Failure::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("stanley-lab: {:#}", failure.error);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let config = Config::load()?;
    if cli.timestamps {
        let now = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        writeln!(out, "{}", json!({ "timestamp": now }))?;
    }
    match cli.command {
        Command::Enumerate {
            family,
            measure,
            value,
            group_by,
            limit,
            options,
        } => {
            let bound = FamilyBound::new(family, measure, value)?;
            let en = config
                .enumerator(&options)
                .with_cap(limit.unwrap_or(DEFAULT_CAP));
            cmd_enumerate(&en, bound, group_by.as_deref(), out)
        }
        Command::Map {
            bijection,
            input,
            skip_invalid,
        } => {
            let reader: Box<dyn BufRead> = match input {
                Some(path) => Box::new(io::BufReader::new(
                    fs::File::open(&path).with_context(|| format!("opening {}", path.display()))?,
                )),
                None => Box::new(io::stdin().lock()),
            };
            cmd_map(bijection, reader, skip_invalid, out)
        }
        Command::Series {
            gf,
            order,
            depth,
            verify,
            options,
        } => {
            let en = config.enumerator(&options);
            cmd_series(gf, order, depth, verify.then_some(&en), out)
        }
        Command::Verify {
            suite,
            max_size,
            options,
        } => {
            let en = config.enumerator(&options);
            cmd_verify(suite, max_size, &en, out)
        }
    }
}

fn cmd_enumerate(
    en: &Enumerator,
    bound: FamilyBound,
    group_by: Option<&str>,
    out: &mut impl Write,
) -> Result<(), Failure> {
    if let Some(stat) = group_by {
        let groups = en.count_grouped(bound, stat)?;
        let map: Map<String, Value> = groups
            .into_iter()
            .map(|(k, n)| (k.to_string(), json!(n)))
            .collect();
        writeln!(out, "{}", Value::Object(map))?;
        return Ok(());
    }
    if en.cache_dir.is_none() && en.jobs <= 1 {
        for obj in en.stream(bound) {
            writeln!(out, "{}", obj?.to_json())?;
        }
    } else {
        for obj in en.collect(bound)? {
            writeln!(out, "{}", obj.to_json())?;
        }
    }
    Ok(())
}

fn cmd_map(
    bijection: Bijection,
    input: impl BufRead,
    skip_invalid: bool,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let family = bijection.source();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let mapped = family
            .parse_json(&line)
            .map_err(anyhow::Error::from)
            .and_then(|obj| Ok((bijection.apply(&obj)?, obj)));
        match mapped {
            Ok((image, obj)) => {
                let record = json!({
                    "in": obj,
                    "out": image,
                    "stats_in": obj.stats_json(),
                    "stats_out": image.stats_json(),
                });
                writeln!(out, "{record}")?;
            }
            Err(e) if skip_invalid => eprintln!("stanley-lab: skipping line {}: {e:#}", i + 1),
            Err(e) => {
                return Err(Failure::new(
                    4,
                    e.context(format!("invalid input on line {}", i + 1)),
                ))
            }
        }
    }
    Ok(())
}

fn series_json(s: &TruncatedSeries) -> Value {
    json!({ "text": s.to_string(), "series": s })
}

fn to_value<T: ?Sized + Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("catalog results serialize")
}

/// The suite that checks `gf` against enumeration, with the size it is run
/// at for a given order.
fn oracle_suites(gf: Gf, order: usize) -> Vec<(Suite, usize)> {
    let sized = |suite: Suite| (suite, order.min(suite.default_size()).max(1));
    match gf {
        Gf::Full => vec![sized(Suite::FullFunction)],
        Gf::Columns => vec![sized(Suite::Columns)],
        Gf::Semiperimeter => vec![sized(Suite::Semiperimeter)],
        Gf::Area => vec![sized(Suite::Area)],
        Gf::CfA | Gf::CfSpecializations => vec![sized(Suite::Cf)],
        Gf::Corollaries => vec![sized(Suite::Columns), sized(Suite::Semiperimeter)],
    }
}

fn cmd_series(
    gf: Gf,
    order: usize,
    depth: Option<usize>,
    oracle: Option<&Enumerator>,
    out: &mut impl Write,
) -> Result<(), Failure> {
    if order == 0 {
        return Err(Failure::new(2, anyhow!("--order must be at least 1")));
    }
    let mut checks: Vec<Check> = Vec::new();
    let mut record = match gf {
        Gf::Full => {
            let FullForms { closed, .. } = gf_full_forms(order)?;
            let series = closed
                .project(&stanley_core::catalog::full_vars(), order as i32, &[])
                .map_err(CatalogError::from)?;
            checks.push(Check::verdict(
                "closed and iterated forms agree",
                true,
                json!(true),
                json!(true),
            ));
            series_json(&series)
        }
        Gf::Columns | Gf::Semiperimeter => {
            let k = if matches!(gf, Gf::Columns) {
                gf_columns(order)?
            } else {
                gf_semiperimeter(order)?
            };
            checks.extend(k.checks.iter().cloned());
            json!({ "g_u": series_json(&k.g_u), "g_one": series_json(&k.g_one) })
        }
        Gf::Area => series_json(&gf_area(order).map_err(CatalogError::from)?),
        Gf::CfA => series_json(&a_pqv(order, depth)?),
        Gf::CfSpecializations => {
            let cf = gf_continued_fractions(order, depth)?;
            checks.extend(cf.checks.iter().cloned());
            to_value(&cf)
        }
        Gf::Corollaries => {
            let columns = gf_columns_corollaries(order)?;
            let semiperimeter = gf_semiperimeter_corollaries(order)?;
            checks.extend(columns.checks.iter().cloned());
            checks.extend(semiperimeter.checks.iter().cloned());
            json!({ "columns": columns, "semiperimeter": semiperimeter })
        }
    };
    let mut loud = checks.iter().any(|c| !c.passed());
    let fields = record.as_object_mut().expect("series records are objects");
    fields.insert(
        "gf".into(),
        json!(gf.to_possible_value().map(|v| v.get_name().to_string())),
    );
    fields.insert("order".into(), json!(order));
    if !checks.is_empty() && !fields.contains_key("checks") {
        fields.insert("checks".into(), to_value(&checks));
    }
    if let Some(en) = oracle {
        let mut reports: Vec<Report> = Vec::new();
        for (suite, size) in oracle_suites(gf, order) {
            reports.extend(verify::run(suite, Some(size), en)?);
        }
        let verified = reports.iter().all(Report::passed);
        loud |= !verified;
        fields.insert("verified_against_oracle".into(), json!(verified));
        fields.insert("oracle".into(), to_value(&reports));
    }
    writeln!(out, "{record}")?;
    if loud {
        return Err(Failure::new(
            5,
            anyhow!("a theorem check failed; see the checks in the output"),
        ));
    }
    Ok(())
}

fn cmd_verify(
    suite: Suite,
    max_size: Option<usize>,
    en: &Enumerator,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let reports = verify::run(suite, max_size, en)?;
    for report in &reports {
        writeln!(
            out,
            "{}",
            serde_json::to_string(report).expect("reports serialize")
        )?;
    }
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.suite.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::new(
            1,
            anyhow!("failed suites: {}", failed.join(", ")),
        ))
    }
}

//! The `gkmcheck` command line.
//!
//! Every subcommand prints one report. Exit status is 0 when the check
//! holds, 1 when it fails and 2 on usage or input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_complex::Complex64;

use crate::autoforms::{
    check_antisymmetry, default_points, functional_equation_with, numeric_report, periodicity_with,
    PhiEvaluator, SlicePoint,
};
use crate::error::{Error, Result};
use crate::identities::{verify_fmid, verify_j_product, verify_mid};
use crate::kacmoody::{
    character, character_cutoff, classify, denominator_check, freudenthal_dimension, validate,
    weight_from_labels, Classification, Gcm, GcmKind,
};
use crate::lorentz::{lattice_suite, SuiteSizes};
use crate::modforms::{p_colored, ModformTable};
use crate::moonshine::{
    identity_data_for, identity_element_data, solve_coefficients, verify_twisted, ThompsonData,
};
use crate::report::{Discrepancy, IdentityReport, Location};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Settings shared by all subcommands.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub p_trunc: i64,
    pub q_trunc: i64,
    pub series_trunc: i64,
    pub tolerance: f64,
    pub data_path: Option<PathBuf>,
    pub output_format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            p_trunc: 6,
            q_trunc: 6,
            series_trunc: 40,
            tolerance: 1e-8,
            data_path: None,
            output_format: OutputFormat::Text,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.p_trunc < 1 || self.q_trunc < 1 || self.series_trunc < 1 {
            return Err(Error::Domain("truncations must be at least 1".into()));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::Domain("tolerance must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "gkmcheck",
    version,
    about = "Exact checks of Monster and Fake Monster denominator identities"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: OutputFormat,
    /// Zero all timings so identical inputs give identical output.
    #[arg(long, global = true, env = "GKMCHECK_DETERMINISTIC")]
    pub deterministic: bool,
    #[arg(long, global = true, env = "GKMCHECK_P_TRUNC", default_value_t = 6)]
    pub p_trunc: i64,
    #[arg(long, global = true, env = "GKMCHECK_Q_TRUNC", default_value_t = 6)]
    pub q_trunc: i64,
    /// Truncation for one-variable expansions used numerically.
    #[arg(
        long,
        global = true,
        env = "GKMCHECK_SERIES_TRUNC",
        default_value_t = 40
    )]
    pub series_trunc: i64,
    /// Relative tolerance for numerical checks.
    #[arg(long, global = true, env = "GKMCHECK_TOL", default_value_t = 1e-8)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify an identity.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Checks on II_25,1 and the Leech lattice.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Kac-Moody algebras from a Cartan matrix file.
    #[command(subcommand)]
    Km(KmCommand),
    /// Thompson series.
    #[command(subcommand)]
    Moonshine(MoonshineCommand),
    /// Modular form tables.
    #[command(subcommand)]
    Modforms(ModformsCommand),
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Fake Monster denominator identity on the (0, sigma, tau) slice.
    Fmid,
    /// Monster denominator identity.
    Mid,
    /// Product formula for j.
    JProduct {
        #[arg(long, default_value_t = 10)]
        trunc: i64,
    },
    /// Twisted denominator relation for a class.
    Twisted {
        /// Thompson data file.
        #[arg(long, conflicts_with = "class")]
        data: Option<PathBuf>,
        /// Bundled class (only 1A).
        #[arg(long)]
        class: Option<String>,
    },
    /// Functional equation, periodicity and antisymmetry of Phi.
    Phi {
        /// Points `SIGMA,TAU`, e.g. `2i,3i` or `0.5+2i,3i`.
        #[arg(long, num_args = 1..)]
        points: Vec<String>,
        #[arg(long, default_value_t = 1e-10)]
        periodicity_tol: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum LatticeCommand {
    /// Randomised membership, reflection and Leech distance checks.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 50)]
        leech: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum KmCommand {
    /// Weyl denominator identity up to a height cutoff.
    Denominator {
        #[arg(long)]
        gcm: PathBuf,
        #[arg(long, default_value_t = 12)]
        cutoff: i64,
    },
    /// Character of an irreducible module, checked against Freudenthal.
    Character {
        #[arg(long)]
        gcm: PathBuf,
        /// Dynkin labels, comma separated.
        #[arg(long)]
        weight: String,
        /// Height cutoff; defaults to the full character.
        #[arg(long)]
        cutoff: Option<i64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum MoonshineCommand {
    /// Recover coefficients of T_g from the twisted relation.
    Solve {
        #[arg(long, default_value_t = 5)]
        known: i64,
        #[arg(long, default_value_t = 10)]
        target: i64,
        #[arg(long, conflicts_with = "class")]
        data: Option<PathBuf>,
        #[arg(long)]
        class: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ModformsCommand {
    /// Coefficients of Delta, j and 1/Delta.
    Table {
        #[arg(long, default_value_t = 10)]
        trunc: i64,
    },
}

/// Renders a report. JSON is a single object on one line.
pub fn emit_report(report: &IdentityReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string(report).expect("reports serialise");
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "name: {}", report.name);
            let _ = writeln!(s, "equal: {}", report.equal);
            if !report.params.is_empty() {
                let _ = writeln!(s, "params:");
                for (k, v) in &report.params {
                    let _ = writeln!(s, "  {k} = {v}");
                }
            }
            let _ = writeln!(s, "lhs_terms: {}", report.lhs_terms);
            let _ = writeln!(s, "rhs_terms: {}", report.rhs_terms);
            match &report.first_discrepancy {
                None => {
                    let _ = writeln!(s, "first_discrepancy: none");
                }
                Some(d) => {
                    let _ = writeln!(
                        s,
                        "first_discrepancy: {} lhs={} rhs={}",
                        d.location, d.lhs, d.rhs
                    );
                }
            }
            for n in &report.notes {
                let _ = writeln!(s, "note: {n}");
            }
            if !report.timings_ms.is_empty() {
                let _ = writeln!(s, "timings_ms:");
                for (k, v) in &report.timings_ms {
                    let _ = writeln!(s, "  {k} = {v:.3}");
                }
            }
            s
        }
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })
}

fn parse_complex(s: &str) -> Option<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = t.strip_suffix('i') else {
        return t.parse().ok().map(|re| Complex64::new(re, 0.0));
    };
    let split = body
        .char_indices()
        .skip(1)
        .filter(|(i, c)| (*c == '+' || *c == '-') && !body[..*i].ends_with(['e', 'E']))
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse().ok()?,
    };
    Some(Complex64::new(re.parse().ok()?, im))
}

fn parse_point(s: &str) -> Result<SlicePoint> {
    let bad = || Error::Parse {
        line: 0,
        msg: format!("bad point {s:?}; expected SIGMA,TAU such as 2i,3i"),
    };
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    SlicePoint::new(
        parse_complex(a).ok_or_else(bad)?,
        parse_complex(b).ok_or_else(bad)?,
    )
}

fn load_thompson(
    data: &Option<PathBuf>,
    class: &Option<String>,
    cfg: &RunConfig,
) -> Result<ThompsonData> {
    if let Some(path) = data {
        return ThompsonData::parse(&read_file(path)?);
    }
    match class.as_deref().unwrap_or("1A") {
        "1A" => Ok(identity_data_for(cfg.p_trunc, cfg.q_trunc)),
        other => Err(Error::Domain(format!(
            "no bundled data for class {other}; pass --data"
        ))),
    }
}

fn km_denominator(path: &Path, cutoff: i64) -> Result<IdentityReport> {
    let gcm = Gcm::parse(&read_file(path)?, GcmKind::Classic)?;
    let v = validate(&gcm);
    if !v.valid {
        let bad: Vec<String> = v
            .conditions
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.name.to_string())
            .collect();
        return Err(Error::Domain(format!(
            "not a Cartan matrix: {}",
            bad.join(", ")
        )));
    }
    let rep = denominator_check(&gcm, cutoff)?;
    Ok(rep
        .to_identity_report("km-denominator")
        .param("type", format!("{:?}", classify(&gcm)).to_lowercase()))
}

fn km_character(path: &Path, weight: &str, cutoff: Option<i64>) -> Result<IdentityReport> {
    let gcm = Gcm::parse(&read_file(path)?, GcmKind::Classic)?;
    if classify(&gcm) != Classification::Finite {
        return Err(Error::NotImplemented(
            "characters need a finite-type matrix".into(),
        ));
    }
    let labels = weight
        .split(',')
        .map(|t| {
            t.trim().parse::<i64>().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad Dynkin label {t:?}"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if labels.len() != gcm.rank() {
        return Err(Error::Domain(format!(
            "{} labels given for rank {}",
            labels.len(),
            gcm.rank()
        )));
    }
    let lam = weight_from_labels(&gcm, &labels)?;
    let cutoff = match cutoff {
        Some(c) => c,
        None => character_cutoff(&gcm, &lam)?,
    };
    let chi = character(&gcm, &lam, cutoff)?;
    let dim = chi.coefficient_sum();
    let oracle = freudenthal_dimension(&gcm, &lam)?;
    let mut r = IdentityReport::new("km-character")
        .param("labels", weight)
        .param("cutoff", cutoff)
        .param("dimension", &dim)
        .param("freudenthal_dimension", &oracle);
    for (v, c) in chi.terms() {
        let coords: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        r = r.param(&format!("mult({})", coords.join(",")), c);
    }
    r.lhs_terms = chi.len();
    r.rhs_terms = 1;
    let oracle = crate::exactseries::rat_big(oracle);
    if dim != oracle {
        r.fail(Discrepancy {
            location: Location::Numeric("dimension".into()),
            lhs: dim,
            rhs: oracle,
        });
    }
    Ok(r)
}

fn moonshine_solve(
    known: i64,
    target: i64,
    data: &Option<PathBuf>,
    class: &Option<String>,
) -> Result<IdentityReport> {
    let (input, oracle) = match data {
        Some(path) => (ThompsonData::parse(&read_file(path)?)?, None),
        None => match class.as_deref().unwrap_or("1A") {
            "1A" => {
                let full = identity_element_data(target.max(known).max(1));
                (identity_element_data(known.max(1)), Some(full))
            }
            other => {
                return Err(Error::Domain(format!(
                    "no bundled data for class {other}; pass --data"
                )))
            }
        },
    };
    let mut r = IdentityReport::new("moonshine-solve")
        .param("class", &input.label)
        .param("known", known)
        .param("target", target);
    let start = std::time::Instant::now();
    let solved = match solve_coefficients(&input, known, target) {
        Ok(s) => s,
        Err(Error::Inconsistent { p, q }) => {
            r.fail(Discrepancy {
                location: Location::PQ { p, q },
                lhs: crate::exactseries::rat(1),
                rhs: crate::exactseries::rat(0),
            });
            r.note("the relation has no solution extending the known coefficients");
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    r.time("solve", crate::report::elapsed_ms(start));
    for n in known + 1..=target {
        match solved.determined.get(&n) {
            Some(v) => r = r.param(&format!("c({n})"), v),
            None => r = r.param(&format!("c({n})"), "underdetermined"),
        }
    }
    r = r
        .param("equations", solved.equations)
        .param("rounds", solved.iterations);
    r.lhs_terms = solved.determined.len();
    r.rhs_terms = (target - known).max(0) as usize;
    if let Some(&n) = solved.underdetermined.first() {
        r.fail(Discrepancy {
            location: Location::Q(n),
            lhs: crate::exactseries::rat(0),
            rhs: crate::exactseries::rat(1),
        });
        r.note(format!("underdetermined at {:?}", solved.underdetermined));
    }
    if let Some(full) = oracle {
        let truth = full.series(1)?;
        for n in known + 1..=target {
            if let Some(v) = solved.determined.get(&n) {
                if *v != truth.coeff(n) {
                    r.fail(Discrepancy {
                        location: Location::Q(n),
                        lhs: v.clone(),
                        rhs: truth.coeff(n),
                    });
                }
            }
        }
        r.note("solved values compared with the expansion of j");
    }
    Ok(r)
}

fn modforms_table(trunc: i64) -> Result<IdentityReport> {
    if trunc < 1 {
        return Err(Error::Domain("trunc must be at least 1".into()));
    }
    let t = ModformTable::new(trunc);
    let mut r = IdentityReport::new("modforms-table").param("trunc", trunc);
    r.q_trunc = Some(trunc);
    for n in -1..=trunc {
        r = r.param(&format!("c({n})"), t.c(n));
    }
    for n in 1..=trunc {
        r = r.param(&format!("tau({n})"), t.delta.integer_coeff(n)?);
    }
    for n in 0..=trunc {
        r = r.param(&format!("p24({n})"), &t.p24[&n]);
    }
    r.lhs_terms = t.p24.len();
    r.rhs_terms = t.p24.len();
    for n in 0..=trunc {
        let direct: BigInt = p_colored(24, n);
        if t.p24[&n] != direct {
            r.fail(Discrepancy {
                location: Location::Q(n),
                lhs: crate::exactseries::rat_big(t.p24[&n].clone()),
                rhs: crate::exactseries::rat_big(direct),
            });
        }
    }
    r.note("p24 from 1/Delta compared with direct partition counts");
    Ok(r)
}

fn phi_report(points: &[String], cfg: &RunConfig, periodicity_tol: f64) -> Result<IdentityReport> {
    let pts = if points.is_empty() {
        default_points()
    } else {
        points
            .iter()
            .map(|p| parse_point(p))
            .collect::<Result<Vec<_>>>()?
    };
    let ev = PhiEvaluator::new(cfg.series_trunc);
    let mut checks = Vec::new();
    for pt in &pts {
        checks.push(functional_equation_with(&ev, pt, cfg.tolerance)?);
        checks.extend(periodicity_with(&ev, pt, periodicity_tol)?);
        checks.push(check_antisymmetry(&ev, pt, 1e-14)?);
    }
    Ok(numeric_report("phi", cfg.series_trunc, &checks)
        .param("tolerance", cfg.tolerance)
        .param("periodicity_tolerance", periodicity_tol))
}

fn dispatch(cli: &Cli, cfg: &RunConfig) -> Result<IdentityReport> {
    match &cli.command {
        Command::Verify(v) => match v {
            VerifyCommand::Fmid => verify_fmid(cfg.p_trunc, cfg.q_trunc),
            VerifyCommand::Mid => verify_mid(cfg.p_trunc, cfg.q_trunc),
            VerifyCommand::JProduct { trunc } => verify_j_product(*trunc),
            VerifyCommand::Twisted { data, class } => {
                let d = load_thompson(data, class, cfg)?;
                verify_twisted(&d, cfg.p_trunc, cfg.q_trunc)
            }
            VerifyCommand::Phi {
                points,
                periodicity_tol,
            } => phi_report(points, cfg, *periodicity_tol),
        },
        Command::Lattice(LatticeCommand::Check {
            seed,
            samples,
            leech,
        }) => Ok(lattice_suite(
            *seed,
            SuiteSizes {
                members: *samples,
                reflections: *samples,
                leech_classes: *leech,
                ..SuiteSizes::default()
            },
        )),
        Command::Km(KmCommand::Denominator { gcm, cutoff }) => km_denominator(gcm, *cutoff),
        Command::Km(KmCommand::Character {
            gcm,
            weight,
            cutoff,
        }) => km_character(gcm, weight, *cutoff),
        Command::Moonshine(MoonshineCommand::Solve {
            known,
            target,
            data,
            class,
        }) => moonshine_solve(*known, *target, data, class),
        Command::Modforms(ModformsCommand::Table { trunc }) => modforms_table(*trunc),
    }
}

/// Parses `args` (including the program name), runs the command and
/// writes the report to `out`, diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    let cfg = RunConfig {
        p_trunc: cli.p_trunc,
        q_trunc: cli.q_trunc,
        series_trunc: cli.series_trunc,
        tolerance: cli.tol,
        data_path: match &cli.command {
            Command::Verify(VerifyCommand::Twisted { data, .. }) => data.clone(),
            Command::Moonshine(MoonshineCommand::Solve { data, .. }) => data.clone(),
            _ => None,
        },
        output_format: cli.format,
    };
    if let Err(e) = cfg.validate() {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    match dispatch(&cli, &cfg) {
        Ok(mut report) => {
            if cli.deterministic {
                for t in &mut report.timings_ms {
                    t.1 = 0.0;
                }
            }
            let _ = write!(out, "{}", emit_report(&report, cfg.output_format));
            if report.equal {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("2i"), Some(Complex64::new(0.0, 2.0)));
        assert_eq!(parse_complex("i"), Some(Complex64::new(0.0, 1.0)));
        assert_eq!(parse_complex("0.5+2i"), Some(Complex64::new(0.5, 2.0)));
        assert_eq!(parse_complex("-1-i"), Some(Complex64::new(-1.0, -1.0)));
        assert_eq!(parse_complex("1e-3+1e2i"), Some(Complex64::new(1e-3, 1e2)));
        assert_eq!(parse_complex("3"), Some(Complex64::new(3.0, 0.0)));
        assert_eq!(parse_complex("x"), None);
    }

    #[test]
    fn config_validation() {
        assert!(RunConfig::default().validate().is_ok());
        let bad = RunConfig {
            tolerance: 0.0,
            ..RunConfig::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn text_and_json() {
        let mut r = IdentityReport::new("fmid");
        r.time("lhs", 1.5);
        let j = emit_report(&r, OutputFormat::Json);
        assert!(j.contains(r#""name":"fmid","equal":true"#));
        assert!(emit_report(&r, OutputFormat::Text).contains("equal: true"));
    }
}

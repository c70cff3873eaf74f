//! The `otg` command line.
//!
//! Every subcommand writes `key=value` lines (or a report) to `out` and
//! diagnostics to `err`, and returns an exit code: 0 success, 1 verification
//! failure, 2 usage or input error, 3 construction error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::chirotope::{compute_chirotope, LabeledPointSet};
use crate::construction::{alive_lower_bound, Construction, ConstructionError};
use crate::geom::Rational;
use crate::io::{read_placement, read_points, write_placement, write_points};
use crate::verify::{
    find_frame_witness, find_order_type_witness, rounding_experiment, verify_frame, verify_point_set, verify_qp, KillSummary,
    RegionSummary, RoundingParams, VerificationReport, VerifyError, DEFAULT_FRAC_BITS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONSTRUCTION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "otg", version, about = "Integer-grid realizations of many order types")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build one point set from a seed or a placement file.
    Gen(GenArgs),
    /// Check construction invariants.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Region, alive and kill statistics.
    Stats(StatsArgs),
    /// A triple on which two point sets disagree.
    Witness(WitnessArgs),
    /// Draw the frame (and optionally the regions) as SVG.
    Svg(SvgArgs),
    /// Rounding experiment on random point sets.
    Roundexp(RoundArgs),
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("source").required(true))]
struct GenArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, group = "source")]
    seed: Option<u64>,
    #[arg(long, group = "source")]
    placement: Option<PathBuf>,
    /// Point-set file to write.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the placement vector used.
    #[arg(long)]
    placement_out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    Frame {
        #[arg(long)]
        n: u64,
    },
    Set {
        #[arg(long = "in")]
        input: PathBuf,
    },
    Qp {
        #[arg(long)]
        p: u64,
    },
}

#[derive(Debug, Args)]
struct StatsArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct WitnessArgs {
    #[arg(long)]
    a: PathBuf,
    #[arg(long)]
    b: PathBuf,
    /// Prefer a triple of two same-axis frame labels and one free label
    /// (both sets must come from the construction).
    #[arg(long)]
    frame: bool,
}

#[derive(Debug, Args)]
struct SvgArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    regions: bool,
}

#[derive(Debug, Args)]
struct RoundArgs {
    #[arg(long)]
    n: usize,
    /// Nonnegative rational, as `a/b` or a decimal such as `0.25`.
    #[arg(long, value_parser = parse_rational)]
    epsilon: Rational,
    #[arg(long)]
    trials: u64,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_FRAC_BITS)]
    frac_bits: u32,
}

/// Parses `a/b`, an integer, or a finite decimal into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("not a rational number: '{s}'");
    if let Some((a, b)) = s.split_once('/') {
        let a: i128 = a.parse().map_err(|_| bad())?;
        let b: i128 = b.parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(a, b));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.len() > 18 || !frac.bytes().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let negative = int.starts_with('-');
    let whole: i128 = match int.trim_start_matches('-') {
        "" if !frac.is_empty() => 0,
        digits => digits.parse().map_err(|_| bad())?,
    };
    let den = 10i128.pow(frac.len() as u32);
    let fpart: i128 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    let v = Rational::new(whole * den + fpart, den);
    Ok(if negative { -v } else { v })
}

/// Command failure with its exit code.
struct Failure {
    code: i32,
    msg: String,
}

type CmdResult = Result<i32, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, msg: msg.into() }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        let code = match e {
            ConstructionError::NotPrime(_) | ConstructionError::KeyOutOfRange(_) | ConstructionError::PlacementLength { .. } => EXIT_USAGE,
            _ => EXIT_CONSTRUCTION,
        };
        Failure { code, msg: e.to_string() }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Construction(c) => c.into(),
            VerifyError::Degenerate { .. } | VerifyError::Identical => Failure { code: EXIT_FAIL, msg: e.to_string() },
            _ => usage(e.to_string()),
        }
    }
}

fn io_fail(path: &Path, e: std::io::Error) -> Failure {
    usage(format!("{}: {e}", path.display()))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_fail(path, e))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_fail(path, e))
}

fn load_points(path: &Path) -> Result<LabeledPointSet, Failure> {
    read_points(&read_file(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn print_report(out: &mut dyn Write, report: &VerificationReport) -> i32 {
    let _ = write!(out, "{report}");
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> CmdResult {
    let c = Construction::new(a.n)?;
    let placement = match (&a.seed, &a.placement) {
        (Some(seed), None) => c.random_placement(*seed)?,
        (None, Some(path)) => {
            let f = read_placement(&read_file(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            if f.n != a.n || f.p != c.params.p {
                return Err(usage(format!(
                    "placement file is for n={} p={}, expected n={} p={}",
                    f.n, f.p, a.n, c.params.p
                )));
            }
            f.placement
        }
        _ => return Err(usage("exactly one of --seed and --placement is required")),
    };
    let set = c.place_all(&placement)?;
    let chi = compute_chirotope(&set).map_err(|e| Failure { code: EXIT_CONSTRUCTION, msg: e.to_string() })?;
    if let Some(path) = &a.out {
        write_file(path, &write_points(&set))?;
    }
    if let Some(path) = &a.placement_out {
        write_file(path, &write_placement(a.n, c.params.p, &placement))?;
    }
    let _ = writeln!(out, "signature={}", chi.signature_hex());
    let _ = writeln!(out, "extras={}", c.params.extras());
    Ok(EXIT_OK)
}

fn cmd_verify(v: VerifyCmd, out: &mut dyn Write) -> CmdResult {
    let report = match v {
        VerifyCmd::Frame { n } => verify_frame(&crate::construction::derive_params(n)?)?,
        VerifyCmd::Qp { p } => verify_qp(p)?,
        VerifyCmd::Set { input } => verify_point_set(&load_points(&input)?).0,
    };
    Ok(print_report(out, &report))
}

fn cmd_stats(a: StatsArgs, out: &mut dyn Write) -> CmdResult {
    let c = Construction::new(a.n)?;
    let p = &c.params;
    let regions = RegionSummary::compute(&c);
    let frame = c.frame.points();
    let placed: Vec<_> = match a.seed {
        Some(seed) => c.place_all(&c.random_placement(seed)?)?.into_points(),
        None => frame.clone(),
    };
    let kills = KillSummary::compute(&c, &placed);
    let mut line = |k: &str, v: &dyn std::fmt::Display| {
        let _ = writeln!(out, "{k}={v}");
    };
    line("n", &p.n);
    line("p", &p.p);
    line("alpha", &p.alpha);
    line("m", &p.m);
    line("scale", &p.scale);
    line("regions", &regions.regions);
    line("region_points_min", &regions.min);
    line("region_points_max", &regions.max);
    line("region_points_threshold", &regions.threshold);
    line("region_points_threshold_floor", &regions.threshold_floor());
    line("alive_initial", &c.alive_count(&frame));
    if a.seed.is_some() {
        line("alive_after_placement", &c.alive_count(&placed));
    }
    line("alive_lower_bound", &alive_lower_bound(p));
    line("kill_lines", &kills.lines);
    line("kill_max_per_line", &kills.killed_max);
    line("kill_lattice_max", &kills.lattice_max);
    Ok(EXIT_OK)
}

fn cmd_witness(a: WitnessArgs, out: &mut dyn Write) -> CmdResult {
    let (sa, sb) = (load_points(&a.a)?, load_points(&a.b)?);
    let w = if a.frame {
        let params = crate::construction::derive_params(sa.len() as u64)?;
        find_frame_witness(params.p as usize, &sa, &sb)?
    } else {
        find_order_type_witness(&sa, &sb)?
    };
    let _ = writeln!(out, "{w}");
    Ok(EXIT_OK)
}

fn cmd_svg(a: SvgArgs, out: &mut dyn Write) -> CmdResult {
    let c = Construction::new(a.n)?;
    let doc = crate::svg::render(&c, a.regions);
    write_file(&a.out, &doc)?;
    let p = c.params.p;
    let _ = writeln!(out, "markers={}", 4 * p);
    let _ = writeln!(out, "segments={}", 2 * p * p);
    if a.regions {
        let _ = writeln!(out, "regions={}", c.params.region_count());
    }
    Ok(EXIT_OK)
}

fn cmd_roundexp(a: RoundArgs, out: &mut dyn Write) -> CmdResult {
    let rp = RoundingParams { n: a.n, epsilon: a.epsilon, trials: a.trials, seed: a.seed, frac_bits: a.frac_bits };
    let r = rounding_experiment(&rp)?;
    let _ = writeln!(
        out,
        "n={} epsilon={} trials={} seed={} frac_bits={} extent={}",
        rp.n, rp.epsilon, rp.trials, rp.seed, rp.frac_bits, r.extent
    );
    let _ = writeln!(out, "preserved={}/{}", r.preserved, r.trials);
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Verify(v) => cmd_verify(v, out),
        Command::Stats(a) => cmd_stats(a, out),
        Command::Witness(a) => cmd_witness(a, out),
        Command::Svg(a) => cmd_svg(a, out),
        Command::Roundexp(a) => cmd_roundexp(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::PlacementVector;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("otg").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1"), Ok(Rational::from_integer(1)));
        assert_eq!(parse_rational("0.25"), Ok(Rational::new(1, 4)));
        assert_eq!(parse_rational(".5"), Ok(Rational::new(1, 2)));
        assert_eq!(parse_rational("3/6"), Ok(Rational::new(1, 2)));
        assert_eq!(parse_rational("-1.5"), Ok(Rational::new(-3, 2)));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["stats"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["gen", "--n", "64"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["gen", "--n", "64", "--seed", "1", "--placement", "x"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "qp", "--p", "8"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["roundexp", "--n", "2", "--epsilon", "1", "--trials", "1", "--seed", "1"]).0, EXIT_USAGE);
    }

    #[test]
    fn construction_errors() {
        let (code, _, err) = run_str(&["gen", "--n", "16", "--seed", "1"]);
        assert_eq!(code, EXIT_CONSTRUCTION);
        assert!(err.contains("below the supported minimum"));
    }

    #[test]
    fn qp_and_stats() {
        let (code, out, _) = run_str(&["verify", "qp", "--p", "7"]);
        assert_eq!(code, EXIT_OK, "{out}");
        let (code, out, _) = run_str(&["stats", "--n", "32"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("regions=400\n"));
        assert!(out.contains("p=5\n"));
    }

    #[test]
    fn help_is_success() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("roundexp"));
    }

    #[test]
    fn gen_placement_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let (pts, plc) = (dir.path().join("a.txt"), dir.path().join("a.plc"));
        let (pts_s, plc_s) = (pts.to_str().unwrap(), plc.to_str().unwrap());
        let (code, seeded, _) = run_str(&["gen", "--n", "32", "--seed", "4", "--out", pts_s, "--placement-out", plc_s]);
        assert_eq!(code, EXIT_OK);
        let (code, replayed, _) = run_str(&["gen", "--n", "32", "--placement", plc_s]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(seeded, replayed);
        let (code, _, _) = run_str(&["gen", "--n", "36", "--placement", plc_s]);
        assert_eq!(code, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "set", "--in", pts_s]).0, EXIT_OK);
        let bad = PlacementVector(vec![]);
        fs::write(&plc, write_placement(32, 5, &bad)).unwrap();
        assert_eq!(run_str(&["gen", "--n", "32", "--placement", plc_s]).0, EXIT_USAGE);
    }
}

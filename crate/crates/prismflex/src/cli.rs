//! `prismflex` subcommands.
//!
//! Every subcommand reads `--config`, which may be either a hand-written
//! config or a solved spec file (recognized by its `format` key). Exit codes:
//! 0 success, 1 validation failure, 2 usage, config or I/O error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use prismflex_core::{dihedral_profiles, realize, rigidity_report, sweep, FlexionInterval, PolyhedronSpec};

use crate::config::PolyhedronConfig;
use crate::error::{Error, Result};
use crate::obj::write_obj;
use crate::profile::{rigidity_text, write_profile_csv};
use crate::specfile::{SpecFile, FORMAT};
use crate::validate::validate;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "prismflex", version, about = "Flexible prismatic polyhedra: solve, check and animate")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a config and write the spec file (stdout without --out).
    Generate(Opts),
    /// Check continuity, closure, assembly, Euler counts and rigidity.
    Validate(Opts),
    /// Export OBJ frames, a dihedral CSV and a rigidity report to --out.
    Flex(Opts),
    /// Print the flexion interval.
    Range(Opts),
    /// Print a summary of the solved polyhedron.
    Info(Opts),
}

#[derive(Debug, Args)]
pub struct Opts {
    /// Config or spec file.
    #[arg(long, value_name = "PATH")]
    pub config: PathBuf,
    /// Output file (generate) or directory (flex).
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Number of θ samples (overrides the file).
    #[arg(long, value_name = "N")]
    pub samples: Option<usize>,
    /// Absolute/relative tolerance for checks.
    #[arg(long, value_name = "X", default_value_t = prismflex_core::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    /// Length at which unbounded end segments are cut.
    #[arg(long, value_name = "LEN")]
    pub truncate: Option<f64>,
    /// Single flexion angle in degrees instead of a sweep.
    #[arg(long, value_name = "DEG", allow_negative_numbers = true)]
    pub theta: Option<f64>,
}

/// Either input kind, decoded.
enum Input {
    Config(PolyhedronConfig),
    Spec(SpecFile),
}

fn load_input(path: &Path) -> Result<Input> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let table: toml::Table = text.parse().map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    if table.get("format").and_then(|v| v.as_str()) == Some(FORMAT) {
        Ok(Input::Spec(SpecFile::from_toml(&text)?))
    } else {
        Ok(Input::Config(PolyhedronConfig::from_toml(&text)?))
    }
}

fn solve(opts: &Opts) -> Result<(PolyhedronSpec, usize)> {
    let (poly, samples) = match load_input(&opts.config)? {
        Input::Config(c) => (c.build()?, c.samples()?),
        Input::Spec(s) => (s.build(opts.tolerance)?, s.samples),
    };
    let poly = match opts.truncate {
        Some(t) => poly.with_truncation(t).map_err(|e| Error::core("--truncate", e))?,
        None => poly,
    };
    let samples = match opts.samples {
        Some(0) => return Err(Error::field("--samples", "must be at least 1")),
        Some(n) => n,
        None => samples,
    };
    Ok((poly, samples))
}

pub fn format_range(r: &FlexionInterval) -> String {
    let d = |x: f64| format!("{:.6}", x.to_degrees());
    if r.lo == 0.0 && r.closed_lo {
        let (open, close) = if r.closed_hi { ("[", "]") } else { ("(", ")") };
        format!("theta in {open}-{}, {}{close} deg", d(r.hi), d(r.hi))
    } else {
        let lo = if r.closed_lo { "[" } else { "(" };
        let hi = if r.closed_hi { "]" } else { ")" };
        let (nlo, nhi) = (if r.closed_hi { "[" } else { "(" }, if r.closed_lo { "]" } else { ")" });
        format!("theta in {lo}{}, {}{hi} or {nlo}-{}, -{}{nhi} deg", d(r.lo), d(r.hi), d(r.hi), d(r.lo))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match run(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn run(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    let w = |out: &mut dyn Write, s: &str| -> Result<()> {
        out.write_all(s.as_bytes()).map_err(|e| Error::io("<stdout>", e))
    };
    match cmd {
        Command::Generate(o) => {
            let (poly, samples) = solve(o)?;
            let text = SpecFile::from_poly(&poly, samples).to_toml();
            match &o.out {
                None => w(out, &text)?,
                Some(path) => {
                    let target = if path.is_dir() { path.join("spec.toml") } else { path.clone() };
                    std::fs::write(&target, &text).map_err(|e| Error::io(&target, e))?;
                    w(out, &summary(&poly))?;
                    w(out, &format!("wrote {}\n", target.display()))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Validate(o) => {
            let (raw, samples) = match load_input(&o.config)? {
                Input::Spec(s) => {
                    let raw = s.to_raw()?;
                    let n = o.samples.unwrap_or(raw.samples);
                    (raw, n)
                }
                Input::Config(c) => {
                    let poly = c.build()?;
                    let s = SpecFile::from_poly(&poly, c.samples()?);
                    let n = o.samples.unwrap_or(s.samples);
                    (s.to_raw()?, n)
                }
            };
            if samples == 0 {
                return Err(Error::field("--samples", "must be at least 1"));
            }
            let rep = validate(&raw, o.tolerance, samples);
            w(out, &format!("{rep}\n"))?;
            Ok(if rep.passed() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Flex(o) => {
            let (poly, samples) = solve(o)?;
            let dir = o.out.clone().unwrap_or_else(|| PathBuf::from("frames"));
            std::fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
            let frames = match o.theta {
                Some(deg) => vec![realize(&poly, deg.to_radians()).map_err(|e| Error::core("--theta", e))?],
                None => sweep(&poly, samples).map_err(|e| Error::core("sweep", e))?,
            };
            for (i, f) in frames.iter().enumerate() {
                let path = dir.join(format!("frame_{i:04}.obj"));
                std::fs::write(&path, write_obj(f, &poly)).map_err(|e| Error::io(&path, e))?;
            }
            let prof = dihedral_profiles(&frames, &poly);
            let csv_path = dir.join("profile.csv");
            let file = std::fs::File::create(&csv_path).map_err(|e| Error::io(&csv_path, e))?;
            write_profile_csv(&prof, &poly, std::io::BufWriter::new(file))?;
            let rep = rigidity_report(&frames, &poly, o.tolerance).map_err(|e| Error::core("rigidity", e))?;
            let text = rigidity_text(&rep, &prof, &poly);
            let rep_path = dir.join("report.txt");
            std::fs::write(&rep_path, &text).map_err(|e| Error::io(&rep_path, e))?;
            w(out, &text)?;
            w(out, &format!("wrote {} frames to {}\n", frames.len(), dir.display()))?;
            Ok(if rep.passed() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Range(o) => {
            let (poly, _) = solve(o)?;
            let r = poly.flexion_range().map_err(|e| Error::core("range", e))?;
            w(out, &format!("{}\n", format_range(&r)))?;
            Ok(EXIT_OK)
        }
        Command::Info(o) => {
            let (poly, _) = solve(o)?;
            w(out, &summary(&poly))?;
            Ok(EXIT_OK)
        }
    }
}

fn summary(poly: &PolyhedronSpec) -> String {
    use std::fmt::Write as _;
    let b = poly.base();
    let mut s = String::new();
    let _ = writeln!(s, "type: {}", b.stype().tag());
    if let prismflex_core::SuspensionType::IIIOae { oas_index } = b.stype() {
        let _ = writeln!(s, "L_idx: {oas_index}");
    }
    let _ = writeln!(s, "N: {}", b.n());
    let _ = writeln!(s, "genus: {}", poly.genus());
    let _ = writeln!(s, "segments: {}", poly.segment_count());
    let fmt = |v: &[f64]| v.iter().map(|x| format!("{x:.9}")).collect::<Vec<_>>().join(", ");
    let degs = |v: Vec<f64>| v.iter().map(|x| x.to_degrees()).collect::<Vec<_>>();
    let _ = writeln!(s, "lengths: [{}]", fmt(b.lengths()));
    let _ = writeln!(s, "beta (deg): [{}]", fmt(&degs(b.betas())));
    let _ = writeln!(s, "B (deg): [{}]", fmt(&degs(b.big_bs())));
    let signs: Vec<String> = b.zsign().iter().map(|z| if *z > 0 { "+".into() } else { "-".into() }).collect();
    let _ = writeln!(s, "dz signs: {}", signs.join(""));
    for (i, j) in poly.junctures().iter().enumerate() {
        let _ = writeln!(s, "juncture {}: variant {}", i + 1, j.variant().tag());
    }
    for (i, seg) in poly.segments().iter().enumerate() {
        match poly.segment_edge_lengths(i) {
            Some(_) => {
                let _ = writeln!(s, "segment {}: {} length {}", i + 1, seg.orient.tag(), seg.length);
            }
            None => {
                let _ = writeln!(
                    s,
                    "segment {}: {} unbounded (truncated at {})",
                    i + 1,
                    seg.orient.tag(),
                    poly.truncation()
                );
            }
        }
    }
    match poly.flexion_range() {
        Ok(r) => {
            let _ = writeln!(s, "flexion: {}", format_range(&r));
        }
        Err(e) => {
            let _ = writeln!(s, "flexion: {e}");
        }
    }
    let c = poly.euler_counts();
    let _ =
        writeln!(s, "euler: V = {}, E = {}, F = {}, V - E + F = {}", c.vertices, c.edges, c.faces, c.characteristic());
    s
}

//! The `hamcay` command line.
//!
//! Exit codes: 0 success, 2 mathematically impossible (parity obstruction or
//! exhaustive search found nothing), 3 verification failure (witness JSON on
//! stderr), 4 usage error (bad arguments, unreadable input, exceeded budgets).

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructor::{decompose_with, search_decomposition, PlanOptions, SearchOptions, Target};
use crate::error::Error;
use crate::group::GklParams;
use crate::lattice::classify_generators;
use crate::periodic::Decomposition;
use crate::render::{render, Format, RenderSpec};
use crate::sweep::{oracle_levels, sweep, SweepOptions, DEFAULT_ORACLE_MULTIPLIER};
use crate::verify::{detect_mode, enumerate_small_cuts, report, window_oracle, Mode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IMPOSSIBLE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

/// Environment variable naming the config file.
pub const CONFIG_ENV: &str = "HAMCAY_CONFIG";

/// Settings read from a `key = value` file; command-line flags override them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliConfig {
    pub oracle_window_multiplier: i64,
    pub search_budget: i64,
    pub auto_preference: Mode,
    pub output_dir: Option<PathBuf>,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            oracle_window_multiplier: DEFAULT_ORACLE_MULTIPLIER,
            search_budget: crate::constructor::search::DEFAULT_SEARCH_BUDGET,
            auto_preference: Mode::DoubleRays,
            output_dir: None,
        }
    }
}

impl CliConfig {
    /// Parses `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut cfg = CliConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected key = value", i + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let positive = |v: &str| match v.parse::<i64>() {
                Ok(n) if n > 0 => Ok(n),
                _ => Err(format!("config line {}: {key} must be a positive integer", i + 1)),
            };
            match key {
                "oracle_window_multiplier" => cfg.oracle_window_multiplier = positive(value)?,
                "search_budget" => cfg.search_budget = positive(value)?,
                "auto_preference" => {
                    cfg.auto_preference = match value.parse::<Mode>() {
                        Ok(m @ (Mode::DoubleRays | Mode::Circles)) => m,
                        _ => return Err(format!("config line {}: auto_preference must be rays or circles", i + 1)),
                    }
                }
                "output_dir" => cfg.output_dir = Some(PathBuf::from(value)),
                other => return Err(format!("config line {}: unknown key `{other}`", i + 1)),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        Self::parse(&text)
    }
}

#[derive(Debug, Parser)]
#[command(name = "hamcay", version, about = "Hamiltonian decompositions of the Cayley graphs G(k,l)")]
struct Cli {
    /// Config file (key = value); defaults to $HAMCAY_CONFIG.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GroupArg {
    /// Z^2
    Z2,
    /// Z
    Z,
    /// Z + Z_m (needs --m)
    Zm,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Rays,
    Circles,
    Mixed,
    Auto,
}

impl ModeArg {
    fn target(self) -> Target {
        match self {
            ModeArg::Rays => Target::Fixed(Mode::DoubleRays),
            ModeArg::Circles => Target::Fixed(Mode::Circles),
            ModeArg::Mixed => Target::Fixed(Mode::Mixed),
            ModeArg::Auto => Target::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FixedModeArg {
    Rays,
    Circles,
    Mixed,
}

impl From<FixedModeArg> for Mode {
    fn from(m: FixedModeArg) -> Mode {
        match m {
            FixedModeArg::Rays => Mode::DoubleRays,
            FixedModeArg::Circles => Mode::Circles,
            FixedModeArg::Mixed => Mode::Mixed,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Svg,
    Tikz,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Ascii => Format::Ascii,
            FormatArg::Svg => Format::Svg,
            FormatArg::Tikz => Format::Tikz,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Identify the Cayley graph of Z+Z_m with two generators.
    Classify {
        #[arg(long, value_enum)]
        group: GroupArg,
        /// Torsion order for --group zm.
        #[arg(long)]
        m: Option<i64>,
        /// First generator: `x` or `x,y`.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Second generator: `x` or `x,y`.
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Construct a decomposition of G(k,l).
    Decompose {
        #[arg(long, required_unless_present = "sweep")]
        k: Option<i64>,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
        l: Option<i64>,
        #[arg(long, value_enum, default_value = "auto")]
        mode: ModeArg,
        /// Write the decomposition JSON here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// UNSAFE: skip re-verifying the result. For benchmarking only; the
        /// output is not certified.
        #[arg(long)]
        no_verify: bool,
        /// Construct and check every normalized G(k,l) with k <= KMAX.
        #[arg(long, value_name = "KMAX", conflicts_with_all = ["k", "l", "json"])]
        sweep: Option<i64>,
        /// Directory for --sweep outputs (overrides output_dir from the config).
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Check a decomposition JSON file.
    Verify {
        file: PathBuf,
        /// Expected mode; detected from the file when omitted.
        #[arg(long, value_enum)]
        mode: Option<FixedModeArg>,
        /// Also run the window oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Draw a decomposition JSON file.
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "ascii")]
        format: FormatArg,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        /// Write the drawing here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively search periodic decompositions.
    Search {
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long)]
        pmax: i64,
        #[arg(long, value_enum)]
        mode: FixedModeArg,
        /// Only accept bi-prevalent results.
        #[arg(long)]
        bi_prevalent: bool,
        /// Maximum coloured edges per candidate (overrides search_budget).
        #[arg(long)]
        budget: Option<i64>,
    },
    /// Count small two-sided finite cuts.
    Cuts {
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long)]
        max_edges: usize,
        /// Truncation half-height N.
        #[arg(long, default_value_t = 12)]
        window: i64,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ParityMismatch { .. } => EXIT_IMPOSSIBLE,
        Error::VerificationRegression(_) | Error::NotADecomposition => EXIT_VERIFY_FAILED,
        _ => EXIT_USAGE,
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn fail(&mut self, e: &Error) -> i32 {
        let _ = writeln!(self.err, "error: {e}");
        exit_code(e)
    }

    fn usage(&mut self, msg: &str) -> i32 {
        let _ = writeln!(self.err, "error: {msg}");
        EXIT_USAGE
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

/// Writes `contents` to `path` via a temporary file in the same directory.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn parse_pair(s: &str, torsion: i64) -> Result<(i64, i64), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<i64>().map_err(|_| format!("`{s}` is not `x` or `x,y`"));
    match parts[..] {
        [x] if torsion == 1 => Ok((num(x)?, 0)),
        [x, y] => Ok((num(x)?, num(y)?)),
        _ => Err(format!("generator `{s}` must be `x,y` for this group")),
    }
}

fn read_decomposition(io: &mut Io, path: &Path) -> Result<Decomposition, i32> {
    let text = fs::read_to_string(path).map_err(|e| io.usage(&format!("cannot read {}: {e}", path.display())))?;
    Decomposition::from_json(&text).map_err(|e| io.fail(&e))
}

/// Runs the command line `args` (including the program name).
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let mut io = Io { out, err };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(io.out, "{text}");
            } else {
                let _ = write!(io.err, "{text}");
            }
            return code;
        }
    };
    let config_path = cli.config.clone().or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    let config = match config_path {
        Some(p) => match CliConfig::load(&p) {
            Ok(c) => c,
            Err(msg) => return io.usage(&msg),
        },
        None => CliConfig::default(),
    };
    match cli.command {
        Command::Classify { group, m, a, b } => classify(&mut io, group, m, &a, &b),
        Command::Decompose {
            k,
            l,
            mode,
            json,
            no_verify,
            sweep,
            out_dir,
        } => match sweep {
            Some(kmax) => {
                let dir = out_dir.or(config.output_dir.clone());
                decompose_sweep(&mut io, &config, kmax, mode.target(), dir.as_deref())
            }
            None => decompose(
                &mut io,
                &config,
                k.expect("required by clap"),
                l.expect("required by clap"),
                mode.target(),
                json.as_deref(),
                no_verify,
            ),
        },
        Command::Verify { file, mode, oracle } => verify_file(&mut io, &config, &file, mode.map(Mode::from), oracle),
        Command::Render {
            file,
            format,
            from,
            to,
            out,
        } => render_file(&mut io, &file, format.into(), from, to, out.as_deref()),
        Command::Search {
            k,
            l,
            pmax,
            mode,
            bi_prevalent,
            budget,
        } => search(&mut io, &config, k, l, pmax, mode.into(), bi_prevalent, budget),
        Command::Cuts {
            k,
            l,
            max_edges,
            window,
        } => cuts(&mut io, k, l, max_edges, window),
    }
}

fn classify(io: &mut Io, group: GroupArg, m: Option<i64>, a: &str, b: &str) -> i32 {
    let torsion = match (group, m) {
        (GroupArg::Z2, None) => 0,
        (GroupArg::Z, None) => 1,
        (GroupArg::Zm, Some(m)) if m >= 2 => m,
        (GroupArg::Zm, _) => return io.usage("--group zm needs --m M with M >= 2"),
        (_, Some(_)) => return io.usage("--m only applies to --group zm"),
    };
    let (a, b) = match (parse_pair(a, torsion), parse_pair(b, torsion)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(msg), _) | (_, Err(msg)) => return io.usage(&msg),
    };
    match classify_generators(torsion, a, b) {
        Ok(c) => {
            let _ = write!(io.out, "{}", json(&c));
            EXIT_OK
        }
        Err(e) => io.fail(&e),
    }
}

fn decompose(
    io: &mut Io,
    config: &CliConfig,
    k: i64,
    l: i64,
    target: Target,
    out_path: Option<&Path>,
    no_verify: bool,
) -> i32 {
    let params = match GklParams::new(k, l) {
        Ok(g) => g,
        Err(e) => return io.fail(&e),
    };
    let options = PlanOptions {
        auto_preference: config.auto_preference,
        verify: !no_verify,
    };
    let d = match decompose_with(params, target, options) {
        Ok(d) => d,
        Err(e) => return io.fail(&e),
    };
    if !no_verify {
        let mode = match target {
            Target::Fixed(m) => m,
            Target::Auto => detect_mode(&d).unwrap_or(config.auto_preference),
        };
        let r = report(&d, mode);
        if !r.verdict.passed {
            let _ = write!(io.err, "{}", json(&r));
            return EXIT_VERIFY_FAILED;
        }
    }
    let text = d.to_json();
    match out_path {
        Some(path) => {
            if let Err(e) = write_atomic(path, &text) {
                return io.usage(&format!("cannot write {}: {e}", path.display()));
            }
            let mode = detect_mode(&d).map(|m| m.to_string()).unwrap_or_else(|| "unverified".into());
            let _ = writeln!(io.out, "{params} {mode} period {} -> {}", d.period(), path.display());
        }
        None => {
            let _ = write!(io.out, "{text}");
        }
    }
    EXIT_OK
}

#[derive(Serialize)]
struct SweepLine {
    k: i64,
    l: i64,
    mode: Option<Mode>,
    period: Option<i64>,
    passed: bool,
    oracle_agrees: bool,
    error: Option<String>,
}

fn decompose_sweep(io: &mut Io, config: &CliConfig, kmax: i64, target: Target, dir: Option<&Path>) -> i32 {
    if kmax < 2 {
        return io.usage("--sweep needs KMAX >= 2");
    }
    if let Some(dir) = dir {
        if let Err(e) = fs::create_dir_all(dir) {
            return io.usage(&format!("cannot create {}: {e}", dir.display()));
        }
    }
    let options = SweepOptions {
        oracle_multiplier: config.oracle_window_multiplier,
        plan: PlanOptions {
            auto_preference: config.auto_preference,
            verify: true,
        },
        ..SweepOptions::default()
    };
    let mut code = EXIT_OK;
    for (g, row) in sweep(kmax, target, &options) {
        let line = match row {
            Ok(row) => {
                if let Some(dir) = dir {
                    let path = dir.join(format!("G{}_{}_{}.json", g.k(), g.l(), row.mode.name()));
                    if let Err(e) = write_atomic(&path, &row.decomposition.to_json()) {
                        return io.usage(&format!("cannot write {}: {e}", path.display()));
                    }
                }
                if !row.ok() {
                    let _ = write!(io.err, "{}", json(&row));
                    code = EXIT_VERIFY_FAILED;
                }
                SweepLine {
                    k: g.k(),
                    l: g.l(),
                    mode: Some(row.mode),
                    period: Some(row.period),
                    passed: row.verdict.passed,
                    oracle_agrees: row.oracle.agrees,
                    error: None,
                }
            }
            Err(e) => {
                code = code.max(exit_code(&e));
                SweepLine {
                    k: g.k(),
                    l: g.l(),
                    mode: None,
                    period: None,
                    passed: false,
                    oracle_agrees: false,
                    error: Some(e.to_string()),
                }
            }
        };
        let _ = writeln!(io.out, "{}", serde_json::to_string(&line).expect("serializable"));
    }
    code
}

fn verify_file(io: &mut Io, config: &CliConfig, path: &Path, mode: Option<Mode>, oracle: bool) -> i32 {
    let d = match read_decomposition(io, path) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let Some(mode) = mode.or_else(|| detect_mode(&d)) else {
        let r = report(&d, Mode::DoubleRays);
        let _ = writeln!(io.err, "error: {}", Error::NotADecomposition);
        let _ = write!(io.err, "{}", json(&r));
        return EXIT_VERIFY_FAILED;
    };
    let r = report(&d, mode);
    if !r.verdict.passed {
        let _ = write!(io.err, "{}", json(&r));
        return EXIT_VERIFY_FAILED;
    }
    let mut value = serde_json::to_value(&r).expect("serializable");
    if oracle {
        match window_oracle(&d, oracle_levels(&d, config.oracle_window_multiplier)) {
            Ok(o) if o.agrees => value["oracle"] = serde_json::to_value(&o).expect("serializable"),
            Ok(o) => {
                let _ = write!(io.err, "{}", json(&o));
                return EXIT_VERIFY_FAILED;
            }
            Err(e) => return io.fail(&e),
        }
    }
    let _ = write!(io.out, "{}", json(&value));
    EXIT_OK
}

fn render_file(io: &mut Io, path: &Path, format: Format, from: i64, to: i64, out: Option<&Path>) -> i32 {
    let d = match read_decomposition(io, path) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let text = match render(&d, &RenderSpec::new(from, to, format)) {
        Ok(t) => t,
        Err(e) => return io.fail(&e),
    };
    match out {
        Some(p) => {
            if let Err(e) = write_atomic(p, &text) {
                return io.usage(&format!("cannot write {}: {e}", p.display()));
            }
        }
        None => {
            let _ = write!(io.out, "{text}");
        }
    }
    EXIT_OK
}

#[allow(clippy::too_many_arguments)]
fn search(
    io: &mut Io,
    config: &CliConfig,
    k: i64,
    l: i64,
    pmax: i64,
    mode: Mode,
    bi_prevalent: bool,
    budget: Option<i64>,
) -> i32 {
    let params = match GklParams::new(k, l) {
        Ok(g) => g,
        Err(e) => return io.fail(&e),
    };
    let options = SearchOptions {
        require_bi_prevalent: bi_prevalent,
        budget: budget.unwrap_or(config.search_budget),
        ..SearchOptions::default()
    };
    match search_decomposition(params, pmax, mode, options) {
        Ok(Some(d)) => {
            let _ = write!(io.out, "{}", d.to_json());
            EXIT_OK
        }
        Ok(None) => {
            let _ = writeln!(
                io.err,
                "NotFound: no {mode} decomposition of {params} with period <= {pmax}{}",
                if bi_prevalent { " (bi-prevalent)" } else { "" }
            );
            EXIT_IMPOSSIBLE
        }
        Err(e) => io.fail(&e),
    }
}

fn cuts(io: &mut Io, k: i64, l: i64, max_edges: usize, window: i64) -> i32 {
    let params = match GklParams::new(k, l) {
        Ok(g) => g,
        Err(e) => return io.fail(&e),
    };
    match enumerate_small_cuts(params, max_edges, window) {
        Ok(c) => {
            let mut value = serde_json::to_value(&c).expect("serializable");
            // u128 counts as strings keep the output valid JSON for any size.
            let counts: BTreeMap<String, String> = c.counts.iter().map(|(s, n)| (s.to_string(), n.to_string())).collect();
            value["counts"] = serde_json::to_value(counts).expect("serializable");
            value["k"] = k.into();
            value["l"] = l.into();
            value["has_odd"] = c.has_odd().into();
            value["sizes"] = serde_json::to_value(c.sizes()).expect("serializable");
            let _ = write!(io.out, "{}", json(&value));
            EXIT_OK
        }
        Err(e) => io.fail(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hamcay").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn help_and_usage() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("decompose"));
        let (code, out, _) = call(&["decompose", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("UNSAFE"));
        assert_eq!(call(&["frobnicate"]).0, 4);
        assert_eq!(call(&["decompose", "--k", "4"]).0, 4);
    }

    #[test]
    fn parity_obstruction() {
        let (code, _, err) = call(&["decompose", "--k", "2", "--l", "1", "--mode", "rays"]);
        assert_eq!(code, 2);
        assert!(err.contains("3 edges"), "{err}");
    }

    #[test]
    fn decompose_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("out.json");
        let f = file.to_str().unwrap();
        let (code, out, _) = call(&["decompose", "--k", "4", "--l", "2", "--mode", "rays", "--json", f]);
        assert_eq!(code, 0, "{out}");
        let d = Decomposition::from_json(&fs::read_to_string(&file).unwrap()).unwrap();
        let edges = fs::read_to_string(&file).unwrap().matches("\"dir\"").count() as i64;
        assert_eq!(edges, 2 * 4 * d.period());
        assert_eq!(call(&["verify", f, "--mode", "rays", "--oracle"]).0, 0);
        let (code, out, _) = call(&["render", f, "--format", "svg", "--from", "0", "--to", &(2 * d.period()).to_string()]);
        assert_eq!(code, 0);
        assert!(out.contains("<svg"));
        // Deterministic output.
        let (_, a, _) = call(&["decompose", "--k", "5", "--l", "-2"]);
        let (_, b, _) = call(&["decompose", "--k", "5", "--l", "-2"]);
        assert_eq!(a, b);
    }

    #[test]
    fn verify_reports_witness() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("split.json");
        let split = Decomposition::hv_split(GklParams::new(3, 1).unwrap());
        fs::write(&file, split.to_json()).unwrap();
        let (code, _, err) = call(&["verify", file.to_str().unwrap(), "--mode", "rays"]);
        assert_eq!(code, 3);
        assert!(err.contains("\"witness\""), "{err}");
        fs::write(&file, "{").unwrap();
        assert_eq!(call(&["verify", file.to_str().unwrap()]).0, 4);
    }

    #[test]
    fn search_and_cuts() {
        let (code, _, err) = call(&["search", "--k", "2", "--l", "1", "--pmax", "2", "--mode", "rays"]);
        assert_eq!(code, 2);
        assert!(err.contains("NotFound"));
        let (code, out, _) = call(&["search", "--k", "2", "--l", "2", "--pmax", "2", "--mode", "rays"]);
        assert_eq!(code, 0);
        assert!(Decomposition::from_json(&out).is_ok());
        assert_eq!(call(&["search", "--k", "7", "--l", "1", "--pmax", "4", "--mode", "rays"]).0, 4);
        let (code, out, _) = call(&["cuts", "--k", "2", "--l", "1", "--max-edges", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"has_odd\": true"));
        assert_eq!(call(&["cuts", "--k", "2", "--l", "0", "--max-edges", "3"]).0, 4);
    }

    #[test]
    fn classify_and_config() {
        let (code, out, _) = call(&["classify", "--group", "z", "--a", "1", "--b", "-3"]);
        assert_eq!(code, 0);
        assert!(out.contains("Gkl") || out.contains("gkl"), "{out}");
        assert_eq!(call(&["classify", "--group", "z2", "--a", "2,0", "--b", "0,1"]).0, 4);
        assert_eq!(call(&["classify", "--group", "zm", "--a", "1,0", "--b", "0,1"]).0, 4);

        let dir = tempfile::tempdir().unwrap();
        let cfg = dir.path().join("hamcay.conf");
        fs::write(&cfg, "# prefer circles\nauto_preference = circles\n").unwrap();
        let (code, out, _) = call(&["--config", cfg.to_str().unwrap(), "decompose", "--k", "4", "--l", "0"]);
        assert_eq!(code, 0);
        let d = Decomposition::from_json(&out).unwrap();
        assert_eq!(detect_mode(&d), Some(Mode::Circles));
        fs::write(&cfg, "search_budget = 0\n").unwrap();
        assert_eq!(call(&["--config", cfg.to_str().unwrap(), "cuts", "--k", "3", "--l", "1", "--max-edges", "4"]).0, 4);
    }

    #[test]
    fn sweep_writes_files() {
        let dir = tempfile::tempdir().unwrap();
        let (code, out, err) = call(&["decompose", "--sweep", "4", "--mode", "mixed", "--out-dir", dir.path().to_str().unwrap()]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(out.lines().count(), 5); // (2,1) (3,0) (3,2) (4,1) (4,3)
        assert!(dir.path().join("G3_2_mixed.json").exists());
    }
}

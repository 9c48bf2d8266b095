//! `ihara`: compute and cross-check the weighted zeta function of a digraph
//! from the command line. [`run`] is the whole program minus process I/O.

pub mod format;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ihara_core::algebra::{parse_rational, render_rational};
use ihara_core::digraph::symmetrize;
use ihara_core::random::{random_instance, trial_rng, RandomConfig};
use ihara_core::zeta::{preset_weights, run_battery, BatteryOptions, CheckOutcome};
use ihara_core::{
    ArcClass, EnumerationLimit, Preset, Rational, WeightScheme, ZetaError, ZetaInstance,
};
use rayon::prelude::*;

pub use format::{parse_digraph_file, write_digraph_file, DigraphFile, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "ihara",
    version,
    about = "Exact weighted zeta functions of digraphs"
)]
pub struct Cli {
    /// Weight preset: ihara, bowen-lanford, sato, mizuno-sato, bartholdi.
    /// Without it the file's tau/upsilon values are used.
    #[arg(long, global = true, value_parser = parse_preset)]
    preset: Option<Preset>,
    /// Bartholdi parameter (upsilon = 1 - q).
    #[arg(long, global = true, value_parser = parse_rational)]
    q: Option<Rational>,
    /// Series order N (coefficients through t^N).
    #[arg(long, global = true, default_value_t = 12)]
    order: usize,
    /// key=value output.
    #[arg(long, global = true)]
    machine: bool,
    /// Refuse enumerations with more than this many candidate sections (|A|^m).
    #[arg(long = "max-enum", global = true, default_value_t = EnumerationLimit::default().0)]
    max_enum: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Vertex/arc counts, arc classes, inverse pairs and c_a(t).
    Info { file: PathBuf },
    /// The zeta function as a reduced rational function.
    Zeta {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Form::Both)]
        form: Form,
    },
    /// N_m by trace and by brute force, and the coefficients of Z.
    Series { file: PathBuf },
    /// Prime cycles and the Euler product check.
    Primes {
        file: PathBuf,
        #[arg(long = "max-len", default_value_t = 6)]
        max_len: usize,
    },
    /// Run every identity check on a file or on random digraphs.
    Verify {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        file: Option<PathBuf>,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-vertices", default_value_t = 5)]
        max_vertices: usize,
        #[arg(long = "max-arcs", default_value_t = 10)]
        max_arcs: usize,
        /// Negative control: build M = H + J instead of H - J.
        #[arg(long = "flip-j-sign", hide = true)]
        flip_j_sign: bool,
    },
    /// Symmetric digraph of an undirected graph file, in digraph file format.
    Symmetrize { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Form {
    Hashimoto,
    Ihara,
    Both,
}

fn parse_preset(s: &str) -> Result<Preset, ZetaError> {
    s.parse()
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error("{0}")]
    Usage(String),
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    /// 0 success, 1 verification failure, 2 usage or parse error.
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = Output::default();
    match execute(&cli, &mut out) {
        Ok(code) => out.code = code,
        Err(e) => {
            out.code = 2;
            let _ = writeln!(out.stderr, "error: {e}");
        }
    }
    out
}

struct Loaded {
    file: DigraphFile,
    instance: ZetaInstance,
}

fn read(path: &Path) -> Result<DigraphFile, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_digraph_file(&text).map_err(|source| CliError::Parse {
        path: shown,
        source,
    })
}

/// Preset weights, with `sato`/`mizuno-sato` taking τ from the file and
/// `bartholdi` taking `--q`.
fn resolve_weights(
    cli: &Cli,
    d: &ihara_core::Digraph,
    file_weights: WeightScheme,
) -> Result<WeightScheme, CliError> {
    let Some(preset) = &cli.preset else {
        return Ok(file_weights);
    };
    let preset = match preset {
        Preset::Sato { tau: None } => Preset::Sato {
            tau: Some(file_weights.taus().to_vec()),
        },
        Preset::MizunoSato { tau: None } => Preset::MizunoSato {
            tau: Some(file_weights.taus().to_vec()),
        },
        Preset::Bartholdi { q: None } => Preset::Bartholdi { q: cli.q.clone() },
        other => other.clone(),
    };
    Ok(preset_weights(d, &preset)?)
}

fn load(cli: &Cli, path: &Path, out: &mut Output) -> Result<Loaded, CliError> {
    let file = read(path)?;
    let parse_err = |source| CliError::Parse {
        path: path.display().to_string(),
        source,
    };
    if file.kind == format::FileKind::Graph {
        return Err(CliError::Usage(format!(
            "{}: undirected graph file; run `symmetrize` first",
            path.display()
        )));
    }
    let d = file.digraph().map_err(parse_err)?;
    let p = file.pairing(&d).map_err(parse_err)?;
    let w = resolve_weights(cli, &d, file.weights(&d))?;
    if !d.is_connected() {
        let _ = writeln!(out.stderr, "warning: not connected");
    }
    let instance = ZetaInstance::new(d, p, w)?;
    Ok(Loaded { file, instance })
}

fn execute(cli: &Cli, out: &mut Output) -> Result<i32, CliError> {
    let limit = EnumerationLimit(cli.max_enum);
    match &cli.command {
        Command::Info { file } => {
            let loaded = load(cli, file, out)?;
            cmd_info(cli, &loaded, &mut out.stdout);
            Ok(0)
        }
        Command::Zeta { file, form } => {
            let loaded = load(cli, file, out)?;
            Ok(cmd_zeta(cli, &loaded.instance, *form, &mut out.stdout))
        }
        Command::Series { file } => {
            if cli.order == 0 {
                return Err(CliError::Usage("--order must be at least 1".into()));
            }
            let loaded = load(cli, file, out)?;
            cmd_series(cli, &loaded.instance, limit, &mut out.stdout)
        }
        Command::Primes { file, max_len } => {
            if *max_len == 0 {
                return Err(CliError::Usage("--max-len must be at least 1".into()));
            }
            let loaded = load(cli, file, out)?;
            cmd_primes(cli, &loaded.instance, *max_len, limit, &mut out.stdout)
        }
        Command::Verify {
            file,
            random,
            trials,
            seed,
            max_vertices,
            max_arcs,
            flip_j_sign,
        } => {
            let opts = BatteryOptions {
                order: cli.order,
                limit,
            };
            if *random {
                if *max_vertices == 0 {
                    return Err(CliError::Usage("--max-vertices must be at least 1".into()));
                }
                let cfg = RandomConfig {
                    vertices: 1..=*max_vertices,
                    arcs: 1.min(*max_arcs)..=*max_arcs,
                    ..RandomConfig::default()
                };
                cmd_verify_random(
                    cli,
                    &cfg,
                    *trials,
                    *seed,
                    *flip_j_sign,
                    &opts,
                    &mut out.stdout,
                )
            } else {
                let path = file
                    .as_ref()
                    .expect("clap requires a file without --random");
                let mut z = load(cli, path, out)?.instance;
                if *flip_j_sign {
                    z = z.with_flipped_j_sign();
                }
                Ok(cmd_verify(cli, &z, &opts, &mut out.stdout))
            }
        }
        Command::Symmetrize { file } => {
            let parsed = read(file)?;
            let g = parsed.undirected().map_err(|source| CliError::Parse {
                path: file.display().to_string(),
                source,
            })?;
            let (d, p) = symmetrize(&g);
            out.stdout = write_digraph_file(parsed.name.as_deref(), &d, &p, None);
            Ok(0)
        }
    }
}

/// Left-aligned columns separated by two spaces.
fn table(rows: &[Vec<String>], out: &mut String) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 == row.len() {
                line.push_str(cell);
            } else {
                let pad = widths[c] - cell.chars().count();
                line.push_str(cell);
                line.push_str(&" ".repeat(pad + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
}

fn set_of_pairs(s: &std::collections::BTreeSet<(usize, usize)>) -> String {
    let items: Vec<String> = s.iter().map(|(u, v)| format!("({u},{v})")).collect();
    format!("{{{}}}", items.join(","))
}

fn cmd_info(cli: &Cli, loaded: &Loaded, out: &mut String) {
    let z = &loaded.instance;
    let d = z.digraph();
    let w = z.weights();
    let c = z.classification();
    let ids = |arcs: Vec<usize>| -> String {
        let v: Vec<&str> = arcs.iter().map(|&a| d.arc(a).id.as_str()).collect();
        format!("{{{}}}", v.join(", "))
    };
    let pairs: Vec<String> = z
        .pairing()
        .pairs()
        .into_iter()
        .map(|(a, b)| format!("{}<->{}", d.arc(a).id, d.arc(b).id))
        .collect();
    let name = loaded.file.name.clone().unwrap_or_default();
    if cli.machine {
        let _ = writeln!(out, "name={name}");
        let _ = writeln!(out, "vertices={}", d.vertex_count());
        let _ = writeln!(out, "arcs={}", d.arc_count());
        let _ = writeln!(out, "connected={}", d.is_connected());
        let _ = writeln!(out, "phi1={}", set_of_pairs(&c.phi1));
        let _ = writeln!(out, "phi2={}", set_of_pairs(&c.phi2));
        let _ = writeln!(out, "phi3={}", set_of_pairs(&c.phi3));
        for class in ArcClass::ALL {
            let _ = writeln!(out, "{}={}", class.label(), ids(c.members(class)));
        }
        let _ = writeln!(out, "inverse={}", pairs.join(","));
        for (i, a) in d.arcs().iter().enumerate() {
            let _ = writeln!(
                out,
                "arc.{}=tail:{} head:{} tau:{} upsilon:{} class:{} c:{}",
                a.id,
                a.tail,
                a.head,
                render_rational(w.tau(i)),
                render_rational(w.upsilon(i)),
                c.class_of(i).label(),
                z.c_factor(i)
            );
        }
        return;
    }
    let _ = writeln!(out, "digraph {name}");
    let _ = writeln!(out, "vertices: {}", d.vertex_count());
    let _ = writeln!(out, "arcs: {}", d.arc_count());
    let _ = writeln!(
        out,
        "connected: {}",
        if d.is_connected() {
            "yes"
        } else {
            "no (warning: not connected)"
        }
    );
    let _ = writeln!(out, "Phi(1) = {}", set_of_pairs(&c.phi1));
    let _ = writeln!(out, "Phi(2) = {}", set_of_pairs(&c.phi2));
    let _ = writeln!(out, "Phi(3) = {}", set_of_pairs(&c.phi3));
    for class in ArcClass::ALL {
        let _ = writeln!(out, "{} = {}", class.label(), ids(c.members(class)));
    }
    let _ = writeln!(
        out,
        "inverse pairs: {}",
        if pairs.is_empty() {
            "none".into()
        } else {
            pairs.join(", ")
        }
    );
    let mut rows = vec![["arc", "tail", "head", "tau", "upsilon", "class", "c_a(t)"]
        .map(String::from)
        .to_vec()];
    for (i, a) in d.arcs().iter().enumerate() {
        rows.push(vec![
            a.id.to_string(),
            a.tail.to_string(),
            a.head.to_string(),
            render_rational(w.tau(i)),
            render_rational(w.upsilon(i)),
            c.class_of(i).label().to_string(),
            z.c_factor(i).to_string(),
        ]);
    }
    table(&rows, out);
}

fn cmd_zeta(cli: &Cli, z: &ZetaInstance, form: Form, out: &mut String) -> i32 {
    let mut lines: Vec<(&str, &str, String)> = Vec::new();
    let hashimoto = matches!(form, Form::Hashimoto | Form::Both).then(|| z.hashimoto_zeta());
    let ihara = matches!(form, Form::Ihara | Form::Both).then(|| z.ihara_zeta());
    let zeta = hashimoto
        .clone()
        .unwrap_or_else(|| ihara.as_ref().expect("some form").zeta.clone());
    lines.push(("zeta", "Z", zeta.to_string()));
    lines.push(("numerator", "numerator", zeta.num().to_string()));
    lines.push(("denominator", "denominator", zeta.den().to_string()));
    if hashimoto.is_some() {
        lines.push((
            "edge_determinant",
            "det(I - tM)",
            z.edge_determinant().to_string(),
        ));
    }
    if let Some(ih) = &ihara {
        lines.push(("j_determinant", "det(I + tJ)", ih.j_determinant.to_string()));
        lines.push((
            "vertex_determinant",
            "det(I - tA + t^2 B)",
            ih.vertex_determinant.to_string(),
        ));
    }
    let mut code = 0;
    if let (Some(h), Some(ih)) = (&hashimoto, &ihara) {
        if *h == ih.zeta {
            lines.push(("main_theorem", "MAIN THEOREM", "OK".into()));
        } else {
            lines.push(("zeta_ihara", "Z (ihara)", ih.zeta.to_string()));
            lines.push(("main_theorem", "MAIN THEOREM", "FAIL".into()));
            code = 1;
        }
    }
    for (key, label, value) in lines {
        let _ = if cli.machine {
            writeln!(out, "{key}={value}")
        } else if label == "MAIN THEOREM" {
            writeln!(out, "{label}: {value}")
        } else {
            writeln!(out, "{label} = {value}")
        };
    }
    code
}

fn cmd_series(
    cli: &Cli,
    z: &ZetaInstance,
    limit: EnumerationLimit,
    out: &mut String,
) -> Result<i32, CliError> {
    let order = cli.order;
    let traces = z.n_m_traces(order)?;
    let series = z.hashimoto_series(order);
    let arcs = z.digraph().arc_count();
    let mut rows = vec![["m", "N_m (trace)", "N_m (brute force)", "Z_m"]
        .map(String::from)
        .to_vec()];
    let mut mismatch = None;
    for m in 0..=order {
        let z_m = render_rational(series.coeff(m));
        if m == 0 {
            if cli.machine {
                let _ = writeln!(out, "z[0]={z_m}");
            } else {
                rows.push(vec!["0".into(), "-".into(), "-".into(), z_m]);
            }
            continue;
        }
        let trace = &traces[m - 1];
        let brute = if limit.allows(arcs, m) {
            let b = z.n_m_bruteforce(m, limit)?;
            if &b != trace && mismatch.is_none() {
                mismatch = Some(m);
            }
            render_rational(&b)
        } else {
            "skipped".into()
        };
        if cli.machine {
            let _ = writeln!(out, "trace[{m}]={}", render_rational(trace));
            let _ = writeln!(out, "brute[{m}]={brute}");
            let _ = writeln!(out, "z[{m}]={z_m}");
        } else {
            rows.push(vec![m.to_string(), render_rational(trace), brute, z_m]);
        }
    }
    if !cli.machine {
        table(&rows, out);
    }
    if let Some(m) = mismatch {
        let _ = writeln!(out, "TRACE != BRUTE FORCE at m={m}");
        return Ok(1);
    }
    Ok(0)
}

fn cmd_primes(
    cli: &Cli,
    z: &ZetaInstance,
    max_len: usize,
    limit: EnumerationLimit,
    out: &mut String,
) -> Result<i32, CliError> {
    let d = z.digraph();
    let primes = z.enumerate_prime_cycles(max_len, limit)?;
    let euler = z.euler_product_series(max_len, limit)?;
    let hashimoto = z.hashimoto_series(max_len);
    let ok = euler == hashimoto;
    if cli.machine {
        for (i, p) in primes.iter().enumerate() {
            let _ = writeln!(
                out,
                "prime[{}]=period:{} circ:{} cycle:{}",
                i + 1,
                p.period,
                render_rational(&p.circ),
                p.representative.ids(d).join(",")
            );
        }
        let _ = writeln!(out, "count={}", primes.len());
        let _ = writeln!(
            out,
            "euler_equals_hashimoto={}",
            if ok { "ok" } else { "fail" }
        );
    } else {
        let mut rows = vec![["period", "circ", "cycle"].map(String::from).to_vec()];
        for p in &primes {
            rows.push(vec![
                p.period.to_string(),
                render_rational(&p.circ),
                p.representative.ids(d).join(" "),
            ]);
        }
        table(&rows, out);
        let _ = writeln!(out, "prime cycles: {}", primes.len());
        let _ = writeln!(
            out,
            "EULER == HASHIMOTO up to t^{max_len}: {}",
            if ok { "OK" } else { "FAIL" }
        );
        if !ok {
            let _ = writeln!(out, "euler     = {euler}\nhashimoto = {hashimoto}");
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn write_outcomes(cli: &Cli, outcomes: &[CheckOutcome], prefix: &str, out: &mut String) {
    for o in outcomes {
        let _ = if cli.machine {
            let status = match &o.status {
                ihara_core::zeta::Status::Pass => "pass".to_string(),
                ihara_core::zeta::Status::Fail(why) => format!("fail: {why}"),
                ihara_core::zeta::Status::Skip(why) => format!("skip: {why}"),
            };
            writeln!(out, "{prefix}check[{}]={status}", o.name)
        } else {
            writeln!(out, "{prefix}{o}")
        };
    }
}

fn cmd_verify(cli: &Cli, z: &ZetaInstance, opts: &BatteryOptions, out: &mut String) -> i32 {
    let outcomes = run_battery(z, opts);
    write_outcomes(cli, &outcomes, "", out);
    let failed = outcomes.iter().filter(|o| o.failed()).count();
    if cli.machine {
        let _ = writeln!(out, "checks={}\nfailed={failed}", outcomes.len());
    } else {
        let _ = writeln!(out, "{} checks, {failed} failed", outcomes.len());
    }
    i32::from(failed > 0)
}

fn cmd_verify_random(
    cli: &Cli,
    cfg: &RandomConfig,
    trials: u64,
    seed: u64,
    flip_j_sign: bool,
    opts: &BatteryOptions,
    out: &mut String,
) -> Result<i32, CliError> {
    let instances: Vec<ZetaInstance> = (0..trials)
        .map(|t| {
            let z = random_instance(&mut trial_rng(seed, t), cfg);
            let z = match cli.preset {
                Some(_) => {
                    let w = resolve_weights(cli, z.digraph(), z.weights().clone())?;
                    ZetaInstance::new(z.digraph().clone(), z.pairing().clone(), w)?
                }
                None => z,
            };
            Ok(if flip_j_sign {
                z.with_flipped_j_sign()
            } else {
                z
            })
        })
        .collect::<Result<_, CliError>>()?;
    // Evaluated in parallel; reported in trial order.
    let results: Vec<Vec<CheckOutcome>> =
        instances.par_iter().map(|z| run_battery(z, opts)).collect();
    let mut passed = 0;
    for (t, (z, outcomes)) in instances.iter().zip(&results).enumerate() {
        let ok = !outcomes.iter().any(CheckOutcome::failed);
        passed += usize::from(ok);
        let d = z.digraph();
        if cli.machine {
            let _ = writeln!(
                out,
                "trial[{t}]={} vertices:{} arcs:{}",
                if ok { "pass" } else { "fail" },
                d.vertex_count(),
                d.arc_count()
            );
        } else {
            let _ = writeln!(
                out,
                "trial {t}: {} ({} vertices, {} arcs, {} checks)",
                if ok { "PASS" } else { "FAIL" },
                d.vertex_count(),
                d.arc_count(),
                outcomes.len()
            );
        }
        if !ok {
            let failing: Vec<CheckOutcome> =
                outcomes.iter().filter(|o| o.failed()).cloned().collect();
            write_outcomes(cli, &failing, "  ", out);
        }
    }
    if cli.machine {
        let _ = writeln!(out, "passed={passed}\ntrials={trials}");
    } else {
        let _ = writeln!(out, "{passed}/{trials} PASS");
    }
    Ok(i32::from(passed as u64 != trials))
}

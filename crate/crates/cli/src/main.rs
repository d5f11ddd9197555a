use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use cycsyn::channel::{format_stream, generate_stream, parse_stream, StreamConfig};
use cycsyn::code::make_code;
use cycsyn::dist::{
    block_decomposition, exact_distribution, noisy_distribution, DistributionClass, Predictor, SubspaceSpec,
};
use cycsyn::gf2::{divisors_xn1, factor_xn1};
use cycsyn::recon::{reconstruct, Method};
use cycsyn::verify::{run_verify, Suite, VerifyConfig};
use cycsyn::{CyclicCode, Poly2};

const EXIT_USAGE: u8 = 1;
const EXIT_NO_CODE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

/// Blind recognition of binary cyclic codes from syndrome statistics.
#[derive(Debug, Parser)]
#[command(name = "cycsyn", version)]
struct Cli {
    /// Worker threads for sweeps and candidate evaluation (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Line-delimited JSON output.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Irreducible factors of X^n+1 and the number of divisors.
    Factor {
        #[arg(long)]
        n: usize,
    },
    /// Syndrome distribution of a block model, with its predicted class.
    Dist(DistArgs),
    /// Writes a seeded BSC stream of codewords.
    Gen(GenArgs),
    /// Searches a stream for (n, s, g).
    Reconstruct(ReconArgs),
    /// Runs invariant sweeps.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct CodeArgs {
    /// True code length.
    #[arg(long)]
    n0: usize,
    /// Generator as a comma-separated factor list, e.g. x3+x+1 or 1101.
    #[arg(long, value_delimiter = ',', required = true)]
    g0: Vec<Poly2>,
}

impl CodeArgs {
    fn code(&self) -> Result<CyclicCode> {
        let g = self.g0.iter().fold(Poly2::one(), |acc, f| acc.mul(f));
        Ok(make_code(self.n0, g)?)
    }
}

#[derive(Debug, Args)]
struct DistArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Truncation W(n) of length n.
    #[arg(long, conflicts_with_all = ["d1", "q", "d2", "n", "s", "s0"])]
    trunc: Option<usize>,
    /// Boundary span: suffix length.
    #[arg(long, requires_all = ["q", "d2"], conflicts_with_all = ["n", "s", "s0"])]
    d1: Option<usize>,
    /// Boundary span: whole codewords.
    #[arg(long, requires_all = ["d1", "d2"])]
    q: Option<usize>,
    /// Boundary span: prefix length.
    #[arg(long, requires_all = ["d1", "q"])]
    d2: Option<usize>,
    /// Block length, with --s and --s0.
    #[arg(long, requires_all = ["s", "s0"])]
    n: Option<usize>,
    #[arg(long, requires_all = ["n", "s0"])]
    s: Option<usize>,
    #[arg(long, requires_all = ["n", "s"])]
    s0: Option<usize>,
    /// Block index (1-based), with --n/--s/--s0.
    #[arg(long, default_value_t = 1)]
    j: usize,
    /// Modulus f | X^n+1.
    #[arg(long)]
    f: Poly2,
    /// BSC crossover probability; noise-free when absent.
    #[arg(long)]
    p: Option<f64>,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    code: CodeArgs,
    #[arg(long, default_value_t = 0)]
    s0: usize,
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    /// Whole codewords after the head.
    #[arg(long)]
    blocks: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Stream file; metadata goes to <out>.meta.json.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct ReconArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Report file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    #[arg(long, default_value = "zero-syndrome")]
    method: Method,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: Suite,
    /// True code lengths to sweep (repeatable); default 7 and 15.
    #[arg(long)]
    n0: Vec<usize>,
    /// Cap on the swept block length.
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.cmd {
        Cmd::Factor { n } => factor(*n, cli.machine),
        Cmd::Dist(a) => dist(a, cli.machine),
        Cmd::Gen(a) => gen(a),
        Cmd::Reconstruct(a) => recon(a, cli.machine),
        Cmd::Verify(a) => verify(a, cli.machine),
    }
}

/// `1+X+X^3` style, ascending.
fn ascending(p: &Poly2) -> String {
    let terms: Vec<String> = p
        .support()
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "X".to_string(),
            _ => format!("X^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

fn factor(n: usize, machine: bool) -> Result<u8> {
    let fm = factor_xn1(n)?;
    let count = divisors_xn1(n)?.len();
    for (f, m) in &fm.entries {
        if machine {
            println!("{}", json!({"factor": f.to_string(), "poly": ascending(f), "multiplicity": m}));
        } else {
            println!("{} ×{m}", ascending(f));
        }
    }
    if machine {
        println!("{}", json!({"divisors": count}));
    } else {
        println!("divisors: {count}");
    }
    Ok(0)
}

fn dist_spec(a: &DistArgs, code: CyclicCode) -> Result<SubspaceSpec> {
    if let Some(t) = a.trunc {
        return Ok(SubspaceSpec::truncation(code, t)?);
    }
    if let (Some(d1), Some(q), Some(d2)) = (a.d1, a.q, a.d2) {
        return Ok(SubspaceSpec::boundary_span(code, d1, q, d2)?);
    }
    if let (Some(n), Some(s), Some(s0)) = (a.n, a.s, a.s0) {
        if s >= n || s0 >= code.n() || a.j == 0 {
            bail!("need s < n, s0 < n0 and j >= 1");
        }
        let block = block_decomposition(code.n(), n, s, s0, a.j);
        return Ok(SubspaceSpec::from_block(code, block, n)?);
    }
    bail!("give one of --trunc, --d1/--q/--d2, or --n/--s/--s0")
}

fn dist(a: &DistArgs, machine: bool) -> Result<u8> {
    let code = a.code.code()?;
    let spec = dist_spec(a, code.clone())?;
    let d = match a.p {
        Some(p) => noisy_distribution(&spec, &a.f, p)?,
        None => exact_distribution(&spec, &a.f)?,
    };
    let pred = Predictor::new(code)?.predict(&spec, &a.f)?;
    // noise only ever keeps Uniform; other classes are not predicted under noise
    let agree = match a.p {
        Some(p) if p > 0.0 => {
            (d.class() == DistributionClass::Uniform) == (pred.class == DistributionClass::Uniform)
        }
        _ => d.class() == pred.class,
    };
    let verdict = if agree { "AGREE" } else { "DISAGREE" };
    if machine {
        for (r, m) in d.support()? {
            println!("{}", json!({"residue": r, "mass": m}));
        }
        println!(
            "{}",
            json!({
                "P0": d.zero_mass(), "class": d.class().to_string(),
                "predicted": pred.class.to_string(), "rule": pred.rule.to_string(), "verdict": verdict,
            })
        );
    } else {
        print!("{}", d.dump()?);
        println!("predicted={} rule={}", pred.class, pred.rule);
        println!("P[0]={} class={} {verdict}", d.zero_mass(), d.class());
    }
    Ok(if agree { 0 } else { EXIT_INVARIANT })
}

fn meta_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

fn gen(a: &GenArgs) -> Result<u8> {
    let code = a.code.code()?;
    let cfg = StreamConfig::new(code.clone(), a.s0, a.p, a.blocks, a.seed)?;
    let bits = generate_stream(&cfg);
    fs::write(&a.out, format_stream(&bits)).with_context(|| format!("writing {}", a.out.display()))?;
    let meta = json!({
        "n0": code.n(), "g0": code.generator().to_string(), "k0": code.k(), "s0": a.s0, "p": a.p,
        "blocks": a.blocks, "seed": a.seed, "length": bits.len(),
        "head": "last s0 bits of an extra codeword",
        "rng": "ChaCha8, stream 0 messages, stream 1 flips",
    });
    let path = meta_path(&a.out);
    fs::write(&path, format!("{meta}\n")).with_context(|| format!("writing {}", path.display()))?;
    Ok(0)
}

fn recon(a: &ReconArgs, machine: bool) -> Result<u8> {
    let text = fs::read_to_string(&a.input).with_context(|| format!("reading {}", a.input.display()))?;
    let bits = parse_stream(&text)?;
    let report = reconstruct(&bits, a.n_min, a.n_max, a.p, a.method)?;
    let body = if machine { report.to_jsonl() } else { report.to_text() };
    match &a.out {
        Some(path) => {
            fs::write(path, &body).with_context(|| format!("writing {}", path.display()))?;
            // winner line on stdout as well
            print!("{}", report.to_text().lines().last().map(|l| format!("{l}\n")).unwrap_or_default());
        }
        None => print!("{body}"),
    }
    Ok(if report.winner.is_some() { 0 } else { EXIT_NO_CODE })
}

fn verify(a: &VerifyArgs, machine: bool) -> Result<u8> {
    let mut cfg = VerifyConfig { max_n: a.max_n, seed: a.seed, ..VerifyConfig::default() };
    if !a.n0.is_empty() {
        cfg.n0s = a.n0.clone();
    }
    let reports = run_verify(a.suite, &cfg)?;
    let mut ok = true;
    for r in &reports {
        print!("{}", if machine { r.to_jsonl() } else { r.to_text() });
        ok &= r.passed();
    }
    if !machine {
        println!("{}", if ok { "verify: PASS" } else { "verify: FAIL" });
    }
    Ok(if ok { 0 } else { EXIT_INVARIANT })
}

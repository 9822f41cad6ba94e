use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};

use yangian_gz::catalog;
use yangian_gz::engine::{build_action, crossval, drinfeld_polys, CrossvalOptions, EngineError, GtAction};
use yangian_gz::exact::rational::parse_int_list;
use yangian_gz::exact::{parse_rational, MatrixPoly};
use yangian_gz::gz::enumerate_schemes_lm;
use yangian_gz::oracle::{drinfeld_from_singular, verify, verify_rtt, Perturbed, Suite, TensorOracle};
use yangian_gz::report::Report;
use yangian_gz::spec::{ModuleSpec, YangianFactor};
use yangian_gz::tame::{classify, factorize, tame_witness, ZeroData};

/// Exact Gelfand-Zetlin bases for Yangian modules.
#[derive(Parser)]
#[command(name = "yangian", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the schemes with top row lambda and pinned rows mu.
    Schemes {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        mu: String,
        /// Number of pinned rows; must match the length of mu.
        #[arg(long = "M")]
        big_m: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the engine families and dump them with their node tables.
    Build {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run identity suites on the brute-force realization.
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        /// Comma separated suite names, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Perturb T_12 before checking; only the rtt suite accepts this.
        #[arg(long)]
        corrupt: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the closed-form engine with the brute-force realization.
    Crossval {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Double the engine's b_1 before comparing.
        #[arg(long)]
        corrupt: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide tameness of zero data or of a module, and factorize.
    Classify {
        #[command(flatten)]
        spec: SpecArgs,
        /// Zero data such as "m=1:0,5;m=2:1"; needs --N.
        #[arg(long, allow_hyphen_values = true)]
        zeros: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Drinfeld polynomials from diagrams and from the singular vector.
    Drinfeld {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SpecArgs {
    /// JSON module file or catalog name.
    #[arg(long)]
    spec: Option<String>,
    /// Single factor: lambda, with optional --mu and --h.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    #[arg(long = "M")]
    big_m: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
    #[arg(long = "N")]
    n: Option<usize>,
}

enum Failure {
    Input(anyhow::Error),
    Identity(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.into())
    }
}

type Outcome = Result<(String, bool), Failure>;

fn parse_mu(mu: &str, big_m: Option<usize>) -> anyhow::Result<Vec<i64>> {
    let mu = if mu.trim().is_empty() { Vec::new() } else { parse_int_list(mu)? };
    if let Some(m) = big_m {
        if m != mu.len() {
            bail!("--M {m} does not match mu with {} parts", mu.len());
        }
    }
    Ok(mu)
}

impl SpecArgs {
    fn given(&self) -> bool {
        self.spec.is_some() || self.lambda.is_some()
    }

    fn load(&self) -> anyhow::Result<ModuleSpec> {
        let spec = match (&self.spec, &self.lambda) {
            (Some(_), Some(_)) => bail!("give either --spec or --lambda, not both"),
            (Some(s), None) => {
                let path = Path::new(s);
                if path.exists() {
                    let text = std::fs::read_to_string(path).with_context(|| format!("reading {s}"))?;
                    ModuleSpec::from_json(&text)?
                } else {
                    catalog::lookup(s).ok_or_else(|| anyhow!("{s} is neither a file nor a catalog name"))?
                }
            }
            (None, Some(l)) => {
                let lambda = parse_int_list(l)?;
                let mu = parse_mu(self.mu.as_deref().unwrap_or(""), self.big_m)?;
                let h = parse_rational(self.h.as_deref().unwrap_or("0"))?;
                let n = lambda.len().checked_sub(mu.len()).filter(|&n| n > 0).ok_or_else(|| anyhow!("lambda must be longer than mu"))?;
                ModuleSpec::new(n, vec![YangianFactor::new(lambda, mu, h)])?
            }
            (None, None) => bail!("a module is required: --spec FILE|NAME or --lambda"),
        };
        if let Some(n) = self.n {
            if n != spec.rank() {
                bail!("--N {n} does not match the module rank {}", spec.rank());
            }
        }
        Ok(spec)
    }
}

fn schemes(lambda: &str, mu: &str, big_m: Option<usize>) -> Outcome {
    let lambda = parse_int_list(lambda)?;
    let mu = parse_mu(mu, big_m)?;
    let list = enumerate_schemes_lm(&lambda, &mu)?;
    let mut s = String::new();
    if list.is_empty() {
        writeln!(s, "empty")?;
    } else {
        writeln!(s, "{} schemes", list.len())?;
        for (k, g) in list.iter().enumerate() {
            writeln!(s, "{k}: {g}")?;
        }
    }
    Ok((s, true))
}

fn dump_family(s: &mut String, name: &str, p: &MatrixPoly) -> std::fmt::Result {
    writeln!(s, "{name}")?;
    for (k, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            writeln!(s, "  u^{k}")?;
            for line in c.to_string().lines() {
                writeln!(s, "    {line}")?;
            }
        }
    }
    Ok(())
}

fn dump_action(a: &GtAction) -> Result<String, std::fmt::Error> {
    let mut s = String::new();
    let n = a.spec.rank();
    writeln!(s, "module {}", a.spec)?;
    writeln!(s, "dim {}", a.basis.len())?;
    writeln!(s, "basis")?;
    for (k, t) in a.basis.tuples().iter().enumerate() {
        let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
        writeln!(s, "  {k}: {}", parts.join(" x "))?;
    }
    let f = &a.families;
    for m in 0..=n {
        dump_family(&mut s, &format!("a{m}"), f.a(m))?;
    }
    for m in 1..n {
        dump_family(&mut s, &format!("b{m}"), f.b(m))?;
        dump_family(&mut s, &format!("c{m}"), f.c(m))?;
        dump_family(&mut s, &format!("d{m}"), f.d(m))?;
    }
    writeln!(s, "nodes")?;
    for e in &a.nodes {
        let side = |x: &Option<(usize, yangian_gz::exact::Rational)>| match x {
            Some((row, v)) => format!("{row}:{v}"),
            None => "-".into(),
        };
        writeln!(
            s,
            "  m={} column={} factor={} entry={} node={} lowered={} raised={}",
            e.m,
            e.column,
            e.factor,
            e.entry,
            e.node,
            side(&e.lowered),
            side(&e.raised)
        )?;
    }
    Ok(s)
}

fn engine_failure(e: EngineError) -> Failure {
    match e {
        EngineError::NonGeneric(..) | EngineError::NodesCollide(_) | EngineError::Comb(_) => Failure::Input(e.into()),
        other => Failure::Identity(other.into()),
    }
}

fn build(spec: &SpecArgs, seed: u64) -> Outcome {
    let spec = spec.load()?;
    let action = build_action(&spec, seed).map_err(engine_failure)?;
    Ok((dump_action(&action)?, true))
}

fn run_verify(spec: &SpecArgs, suite: &str, samples: usize, seed: u64, corrupt: bool) -> Outcome {
    let spec = spec.load()?;
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        suite
            .split(',')
            .map(|x| Suite::parse(x.trim()).ok_or_else(|| anyhow!("unknown suite {x:?}")))
            .collect::<anyhow::Result<_>>()?
    };
    if corrupt && suites.iter().any(|&x| x != Suite::Rtt) {
        return Err(Failure::Input(anyhow!("--corrupt is only supported with --suite rtt")));
    }
    if samples == 0 {
        return Err(Failure::Input(anyhow!("--samples must be positive")));
    }
    let o = TensorOracle::new(&spec)?;
    let mut s = format!("module {spec}\n");
    let mut ok = true;
    for suite in suites {
        let r = if corrupt { verify_rtt(&Perturbed::new(&o), samples, seed) } else { verify(&o, suite, samples, seed) }
            .map_err(|e| Failure::Identity(e.into()))?;
        ok &= r.all_passed();
        writeln!(s, "suite {}", suite.name())?;
        write!(s, "{r}")?;
    }
    Ok((s, ok))
}

fn run_crossval(spec: &SpecArgs, seed: u64, corrupt: bool) -> Outcome {
    let spec = spec.load()?;
    let r = crossval(&spec, CrossvalOptions { seed, corrupt, ..Default::default() }).map_err(engine_failure)?;
    Ok((format!("module {spec}\n{r}"), r.all_passed()))
}

fn factorization_lines(s: &mut String, zd: &ZeroData) -> Result<bool, Failure> {
    match tame_witness(zd) {
        Some(w) => {
            writeln!(s, "verdict: not tame")?;
            writeln!(s, "witness: {w}")?;
        }
        None => {
            writeln!(s, "verdict: tame")?;
            let f = factorize(zd).map_err(|e| Failure::Identity(e.into()))?;
            for p in &f.parts {
                writeln!(s, "part h={} beta={:?} gamma={:?}", p.h, p.diagram.beta, p.diagram.gamma)?;
            }
            writeln!(s, "factorization: {}", f.to_json())?;
        }
    }
    Ok(true)
}

fn run_classify(spec: &SpecArgs, zeros: Option<&str>, seed: u64) -> Outcome {
    let mut s = String::new();
    match zeros {
        Some(text) => {
            if spec.given() {
                return Err(Failure::Input(anyhow!("give either --zeros or a module, not both")));
            }
            let n = spec.n.ok_or_else(|| anyhow!("--zeros needs --N"))?;
            let zd = ZeroData::parse(text, n)?;
            writeln!(s, "zeros {zd}")?;
            factorization_lines(&mut s, &zd)?;
            Ok((s, true))
        }
        None => {
            let spec = spec.load()?;
            let c = classify(&spec, seed).map_err(|e| Failure::Identity(e.into()))?;
            writeln!(s, "module {spec}")?;
            writeln!(s, "zeros {}", c.zeros)?;
            factorization_lines(&mut s, &c.zeros)?;
            let v = &c.semisimplicity;
            writeln!(s, "semisimple: {} ({} coefficients, commuting {})", v.semisimple, v.coefficients, v.commuting)?;
            if let Some(w) = &v.witness {
                writeln!(s, "jordan witness: {w}")?;
            }
            let agree = c.consistent();
            writeln!(s, "{} tameness and semisimplicity agree", if agree { "PASS" } else { "FAIL" })?;
            Ok((s, agree))
        }
    }
}

fn run_drinfeld(spec: &SpecArgs, seed: u64) -> Outcome {
    let spec = spec.load()?;
    let diagrams = drinfeld_polys(&spec).map_err(engine_failure)?;
    let o = TensorOracle::new(&spec)?;
    let mut s = format!("module {spec}\n");
    for (m, p) in diagrams.iter().enumerate() {
        writeln!(s, "P{} = {p}", m + 1)?;
    }
    let mut report = Report::new();
    match drinfeld_from_singular(&o, spec.rescaling_degree(spec.rank()), seed) {
        Ok(d) => {
            report.extend(d.report);
            let same = d.polys == diagrams;
            let found: Vec<String> = d.polys.iter().map(ToString::to_string).collect();
            report.push("singular-vector polynomials equal the diagram products", same, found.join("; "));
        }
        Err(e) => report.push("singular vector yields Drinfeld polynomials", false, e.to_string()),
    }
    write!(s, "{report}")?;
    Ok((s, report.all_passed()))
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, out) = match &cli.command {
        Command::Schemes { lambda, mu, big_m, out } => (schemes(lambda, mu, *big_m), out),
        Command::Build { spec, seed, out } => (build(spec, *seed), out),
        Command::Verify { spec, suite, samples, seed, corrupt, out } => {
            (run_verify(spec, suite, *samples, *seed, *corrupt), out)
        }
        Command::Crossval { spec, seed, corrupt, out } => (run_crossval(spec, *seed, *corrupt), out),
        Command::Classify { spec, zeros, seed, out } => (run_classify(spec, zeros.as_deref(), *seed), out),
        Command::Drinfeld { spec, seed, out } => (run_drinfeld(spec, *seed), out),
    };
    match outcome {
        Ok((text, ok)) => {
            if let Err(e) = emit(&text, out.as_deref()) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Identity(e)) => {
            eprintln!("failure: {e:#}");
            ExitCode::from(1)
        }
    }
}

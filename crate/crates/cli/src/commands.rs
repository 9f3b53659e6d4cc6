//! Argument parsing and dispatch.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use orecent_core::centralizer::{default_ydeg_bound, SpecialCase, DEFAULT_STABILITY_DELTA};
use orecent_core::criteria::{self, DEFAULT_ROOT_EXPONENT_BOUND};
use orecent_core::{
    admissible_degrees, centralizer_space_with, classify_set, format_skew, is_polynomial_in_p,
    module_generators, monomial_generator, parse_skew, Bounds, DynContext, DynSkew, PurePowerVerdict,
    Scalar, SetVerdict,
};

use crate::context::{parse_context, ContextSpec};
use crate::report::{
    AdmissibleDegree, BoxSpec, DegreeDim, Flags, PurePowerReport, Report, Results, SuiteInfo,
};
use crate::suites;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "orecent",
    version,
    about = "Exact arithmetic and centralizers in Ore extensions K[y][x; sigma, delta]"
)]
pub struct Cli {
    #[command(flatten)]
    pub context: ContextArgs,
    /// Print the JSON report instead of the text summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub report: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ContextArgs {
    /// Context file (JSON or key = value lines).
    #[arg(long, global = true, value_name = "FILE")]
    pub ctx: Option<PathBuf>,
    /// `rationals` or `fp:<prime>`; overrides the file.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// sigma(y); overrides the file.
    #[arg(long, global = true, value_name = "POLY", allow_hyphen_values = true)]
    pub sigma: Option<String>,
    /// delta(y); overrides the file.
    #[arg(long, global = true, value_name = "POLY", allow_hyphen_values = true)]
    pub delta: Option<String>,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BoxArgs {
    /// D: largest x-degree searched. Default 2·deg P.
    #[arg(long)]
    pub max_xdeg: Option<usize>,
    /// B: largest y-degree of a coefficient. Default derived from the
    /// admissible leading degrees plus a margin.
    #[arg(long)]
    pub ydeg_bound: Option<usize>,
    /// The space is recomputed at B + this value to detect instability.
    #[arg(long, default_value_t = DEFAULT_STABILITY_DELTA)]
    pub stability_delta: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Product of the arguments, left to right.
    Mul {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        factors: Vec<String>,
    },
    /// A^e.
    Pow {
        #[arg(allow_hyphen_values = true)]
        base: String,
        exponent: usize,
    },
    /// AB - BA.
    Commutator {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Canonical form of an expression.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Bounded centralizer of P.
    Centralizer {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[command(flatten)]
        bounds: BoxArgs,
    },
    /// Minimal-degree module generators of the bounded centralizer.
    Basis {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[command(flatten)]
        bounds: BoxArgs,
    },
    /// Criteria verdicts and admissible degrees for P.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        p: String,
        /// Degrees m = 1..=max-m are tested for admissibility.
        #[arg(long, default_value_t = 12)]
        max_m: usize,
        /// Exponent bound of the pure-power root search.
        #[arg(long, default_value_t = DEFAULT_ROOT_EXPONENT_BOUND)]
        max_exp: u32,
    },
    /// Generator y^l x^k of the centralizer of y^i x^j when sigma(y) = y^s, delta = 0.
    MonomialGen { i: usize, j: usize, s: u64 },
    /// Shape of the centralizer of a finite set.
    Classify {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        elements: Vec<String>,
        #[arg(long, default_value_t = 3)]
        max_xdeg: usize,
        #[arg(long, default_value_t = 6)]
        ydeg_bound: usize,
    },
    /// Run a named verification suite.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// List the suites.
        #[arg(long)]
        list: bool,
    },
}

/// Result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Option<Report>,
    /// Error text, or clap's help/usage output.
    pub message: Option<String>,
    pub json: bool,
    pub report_path: Option<PathBuf>,
}

impl Outcome {
    /// Print to stdout/stderr and write the report file.
    pub fn emit(&self) -> i32 {
        if let Some(r) = &self.report {
            if self.json {
                println!("{}", r.to_json());
            } else {
                print!("{}", r.summary());
            }
            if let Some(path) = &self.report_path {
                if let Err(e) = std::fs::write(path, r.to_json()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            }
        }
        if let Some(m) = &self.message {
            if self.code == 0 {
                print!("{m}");
            } else {
                eprintln!("{}", m.trim_end());
            }
        }
        self.code
    }
}

/// Parse `argv` (program name first) and run the command.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return Outcome {
                code,
                report: None,
                message: Some(e.render().to_string()),
                json: false,
                report_path: None,
            };
        }
    };
    let echo: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let (json, report_path) = (cli.json, cli.report.clone());
    let start = Instant::now();
    match execute(&cli) {
        Ok((context, results, flags)) => {
            let code = exit_code_for(&flags);
            let report = Report {
                command: echo,
                context,
                results,
                flags,
                timing_us: start.elapsed().as_micros() as u64,
            };
            Outcome {
                code,
                report: Some(report),
                message: None,
                json,
                report_path,
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            report: None,
            message: Some(format!("error: {e}\n")),
            json,
            report_path: None,
        },
    }
}

fn exit_code_for(flags: &Flags) -> i32 {
    if flags.sound == Some(false) || flags.verified == Some(false) {
        3
    } else if flags.stable == Some(false) {
        4
    } else {
        0
    }
}

type Executed = (Option<ContextSpec>, Results, Flags);

fn execute(cli: &Cli) -> Result<Executed, CliError> {
    match &cli.command {
        Command::MonomialGen { i, j, s } => return monomial_gen(*i, *j, *s),
        Command::Verify { suite, seed, list } => return verify(suite.as_deref(), *seed, *list),
        _ => {}
    }
    let ctx = load_context(&cli.context)?;
    let spec = Some(ContextSpec::of(&ctx));
    let value = |v: DynSkew| Results::Value {
        value: format_skew(&ctx.embed(&v)),
    };
    let flags = Flags::default();
    Ok(match &cli.command {
        Command::Mul { factors } => {
            let mut acc = DynSkew::one();
            for f in factors {
                acc = ctx.mul(&acc, &skew(f, &ctx)?);
            }
            (spec, value(acc), flags)
        }
        Command::Pow { base, exponent } => (spec, value(ctx.pow(&skew(base, &ctx)?, *exponent)), flags),
        Command::Commutator { a, b } => {
            let (a, b) = (skew(a, &ctx)?, skew(b, &ctx)?);
            (spec, value(ctx.commutator(&a, &b)), flags)
        }
        Command::Normalize { expr } => (spec, value(skew(expr, &ctx)?), flags),
        Command::Centralizer { p, bounds } => {
            let (results, flags) = centralizer(&ctx, &skew(p, &ctx)?, bounds)?;
            (spec, results, flags)
        }
        Command::Basis { p, bounds } => {
            let p = skew(p, &ctx)?;
            let b = resolve_box(&ctx, &p, bounds);
            let gens = module_generators(&ctx, &p, b.max_xdeg, b.ydeg_bound)
                .map_err(|e| CliError::Computation(e.to_string()))?;
            let results = Results::Generators {
                p: format_skew(&p),
                bounds: box_spec(&b),
                count: gens.len(),
                generators: texts(&ctx, &gens),
            };
            (spec, results, flags)
        }
        Command::Analyze { p, max_m, max_exp } => (spec, analyze(&ctx, &skew(p, &ctx)?, *max_m, *max_exp)?, flags),
        Command::Classify {
            elements,
            max_xdeg,
            ydeg_bound,
        } => {
            let set = elements
                .iter()
                .map(|e| skew(e, &ctx))
                .collect::<Result<Vec<_>, _>>()?;
            let c = classify_set(&ctx, &set, *max_xdeg, *ydeg_bound);
            let (verdict, of) = match &c.verdict {
                SetVerdict::AllOfS => ("all-of-S", None),
                SetVerdict::ConstantsOnly => ("constants-only", None),
                SetVerdict::CentralizerOf(p) => ("centralizer-of", Some(format_skew(&ctx.embed(p)))),
            };
            let flags = Flags {
                verified: Some(c.consistent()),
                ..Flags::default()
            };
            let results = Results::Classification {
                set: texts(&ctx, &set),
                verdict: verdict.into(),
                centralizer_of: of,
                bounds: BoxSpec {
                    max_xdeg: *max_xdeg,
                    ydeg_bound: *ydeg_bound,
                    stability_delta: 0,
                },
                bounded_dim: c.bounded_dim,
                expected_dim: c.expected_dim,
                consistent: c.consistent(),
            };
            (spec, results, flags)
        }
        Command::MonomialGen { .. } | Command::Verify { .. } => unreachable!("handled above"),
    })
}

fn load_context(args: &ContextArgs) -> Result<DynContext, CliError> {
    let mut spec = match &args.ctx {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            Some(ContextSpec::from_text(&text)?)
        }
        None => None,
    };
    if spec.is_none() {
        let sigma = args.sigma.clone().ok_or_else(|| {
            CliError::Usage("no context given: pass --ctx FILE or --sigma POLY".into())
        })?;
        spec = Some(ContextSpec::new("rationals", &sigma, "0"));
    }
    let mut spec = spec.expect("set above");
    if let Some(f) = &args.field {
        spec.field = f.clone();
    }
    if let Some(s) = &args.sigma {
        spec.sigma_y = s.clone();
    }
    if let Some(d) = &args.delta {
        spec.delta_y = d.clone();
    }
    parse_context(&spec)
}

fn skew(text: &str, ctx: &DynContext) -> Result<DynSkew, CliError> {
    parse_skew(text, ctx)
        .map(|p| ctx.embed(&p))
        .map_err(|e| CliError::Usage(format!("`{text}`: {e}")))
}

fn texts(ctx: &DynContext, ps: &[DynSkew]) -> Vec<String> {
    ps.iter().map(|p| format_skew(&ctx.embed(p))).collect()
}

fn resolve_box(ctx: &DynContext, p: &DynSkew, args: &BoxArgs) -> Bounds {
    let max_xdeg = args
        .max_xdeg
        .unwrap_or_else(|| p.degree().filter(|&n| n > 0).map_or(4, |n| 2 * n));
    let ydeg_bound = args
        .ydeg_bound
        .unwrap_or_else(|| default_ydeg_bound(ctx, p, max_xdeg));
    Bounds {
        max_xdeg,
        ydeg_bound,
        stability_delta: args.stability_delta,
    }
}

fn box_spec(b: &Bounds) -> BoxSpec {
    BoxSpec {
        max_xdeg: b.max_xdeg,
        ydeg_bound: b.ydeg_bound,
        stability_delta: b.stability_delta,
    }
}

fn centralizer(ctx: &DynContext, p: &DynSkew, args: &BoxArgs) -> Result<(Results, Flags), CliError> {
    if p.is_zero() {
        return Err(CliError::Computation("the centralizer of 0 is all of S".into()));
    }
    let bounds = resolve_box(ctx, p, args);
    let rep = centralizer_space_with(ctx, p, bounds);
    let failures: Vec<String> = rep.soundness_failures().into_iter().map(String::from).collect();
    let flags = Flags {
        stable: Some(rep.stable),
        sound: Some(failures.is_empty()),
        soundness_failures: failures,
        powers_in_box: Some(rep.powers_in_box),
        verified: None,
    };
    let results = Results::Centralizer {
        p: format_skew(p),
        bounds: box_spec(&bounds),
        dim: rep.dim(),
        stability_dim: rep.stability_dim,
        in_k_p: rep.basis.iter().map(|q| is_polynomial_in_p(ctx, p, q)).collect(),
        basis: texts(ctx, &rep.basis),
        module_generators: texts(ctx, &rep.module_generators),
        generator_count: rep.generator_count,
        leading_space_dims: rep
            .leading_space_dims
            .iter()
            .map(|(&degree, &dim)| DegreeDim { degree, dim })
            .collect(),
        commutative: rep.commutative,
        base_ring_part_is_constants: rep.base_ring_part_is_constants,
        special_case: rep.special_case.map(|sc| {
            match sc {
                SpecialCase::Constant => "P is constant: C(P) = S",
                SpecialCase::BaseRing => "P lies in K[y]: C(P) = K[y]",
            }
            .to_string()
        }),
    };
    Ok((results, flags))
}

fn analyze(ctx: &DynContext, p: &DynSkew, max_m: usize, max_exp: u32) -> Result<Results, CliError> {
    let v = criteria::evaluate(ctx, p, max_exp)
        .ok_or_else(|| CliError::Computation("analyze needs P of positive x-degree".into()))?;
    let admissible = admissible_degrees(ctx, p, max_m)
        .map_err(|e| CliError::Computation(e.to_string()))?
        .into_iter()
        .map(|c| AdmissibleDegree {
            m: c.m,
            k: c.k.to_string(),
        })
        .collect();
    let pure_power = v.pure_power.as_ref().map(|pp| match pp {
        PurePowerVerdict::ViolationFound { a, i, j } => PurePowerReport::ViolationFound {
            a: a.coerce(&ctx.field()).to_string(),
            i: *i,
            j: *j,
        },
        PurePowerVerdict::NoViolationUpTo(m) => PurePowerReport::NoViolationUpTo { max_exp: *m },
    });
    Ok(Results::Analysis {
        p: format_skew(p),
        n: v.n,
        rho: v.rho,
        s: v.s,
        prime_degree: v.prime_degree,
        small_leading: v.small_leading,
        guarantees_polynomial_in_p: v.guarantees_polynomial_in_p(),
        pure_power,
        monomial_generator: v
            .monomial
            .map(|g| format_skew(&ctx.embed(&g.to_skew()))),
        admissible,
    })
}

fn monomial_gen(i: usize, j: usize, s: u64) -> Result<Executed, CliError> {
    let g = monomial_generator(i, j, s).map_err(|e| CliError::Usage(e.to_string()))?;
    let spec = ContextSpec::new("rationals", &format!("y^{s}"), "0");
    let ctx = parse_context(&spec)?;
    let p = DynSkew::monomial(ctx.scalar(1), i, j);
    let gen = g.to_skew();
    let commutes = ctx.commutes(&p, &gen);
    let flags = Flags {
        verified: Some(commutes),
        ..Flags::default()
    };
    let results = Results::MonomialGenerator {
        i,
        j,
        s,
        l: g.l,
        k: g.k,
        generator: format_skew(&gen),
        commutes,
    };
    Ok((Some(ContextSpec::of(&ctx)), results, flags))
}

fn verify(suite: Option<&str>, seed: u64, list: bool) -> Result<Executed, CliError> {
    if list {
        let suites = suites::SUITES
            .iter()
            .map(|s| SuiteInfo {
                name: s.name.into(),
                description: s.description.into(),
            })
            .collect();
        return Ok((None, Results::SuiteList { suites }, Flags::default()));
    }
    let name = suite.expect("clap requires --suite without --list");
    let results = suites::run(name, seed).map_err(CliError::Usage)?;
    let ok = results.iter().all(|r| r.failures.is_empty());
    let flags = Flags {
        verified: Some(ok),
        ..Flags::default()
    };
    Ok((None, Results::Verification { suites: results }, flags))
}

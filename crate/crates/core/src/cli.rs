//! Command-line front end. `run` is pure: it returns the exit code and the
//! two output streams so tests can drive it without a process.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::complex::DEFAULT_VERTEX_CAP;
use crate::error::{Error, Result};
use crate::filtration::{self, ProbeConfig};
use crate::ideal::{MonomialIdeal, DEFAULT_SEARCH_CAP};
use crate::invariants;
use crate::parse;
use crate::regress;
use crate::report::{self, Format};
use crate::ring::FieldSpec;
use crate::varset::VarSet;

#[derive(Parser, Debug)]
#[command(name = "mdepth", version, about = "Depth, maximal depth and local cohomology of monomial quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Table,
    Json,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Coefficient field: q, f2 or fp=P.
    #[arg(long, default_value = "q", global = true)]
    field: String,
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: FormatArg,
    /// Largest number of variables (vertices) accepted.
    #[arg(long, global = true)]
    max_vertices: Option<usize>,
    /// Largest colon-search box for associated primes.
    #[arg(long, default_value_t = DEFAULT_SEARCH_CAP, global = true)]
    search_cap: u128,
}

#[derive(Args, Debug, Clone, Default)]
struct Inputs {
    /// Input files: generator text, ideal JSON, facet JSON or an edge list.
    files: Vec<String>,
    /// Inline generators, e.g. "x1*x2,x2*x3^2".
    #[arg(long)]
    gens: Vec<String>,
    /// Inline edge list, e.g. "n=5; edges=1-2,2-3".
    #[arg(long)]
    edges: Vec<String>,
    /// Variable names for generator text, comma separated.
    #[arg(long)]
    vars: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension, depth, mdepth, associated primes and local cohomology.
    Analyze {
        #[command(flatten)]
        input: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Dimension filtration with depth intervals.
    Filtration {
        #[command(flatten)]
        input: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Sequential Cohen-Macaulay decision with a witness.
    Seqcm {
        #[command(flatten)]
        input: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Attached primes of local cohomology with justification tags.
    Att {
        #[command(flatten)]
        input: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Monomial primes in the pseudo-support, per degree.
    Psupp {
        #[command(flatten)]
        input: Inputs,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Profile of the join of two or more ideals in disjoint variables.
    Tensor {
        #[command(flatten)]
        input: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Polarization of a monomial ideal.
    Polarize {
        #[command(flatten)]
        input: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Localization at the face prime of a face (squarefree input).
    Localize {
        #[command(flatten)]
        input: Inputs,
        #[command(flatten)]
        common: Common,
        /// Face as variable names or 1-based indices, comma separated.
        #[arg(long, default_value = "")]
        face: String,
    },
    /// Formal direct sum of quotients over one ring.
    Directsum {
        #[command(flatten)]
        input: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Random search for nonzero finite-length local cohomology under maximal depth.
    Probe {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Built-in regression pins; exits 1 on any mismatch.
    Regress {
        #[command(flatten)]
        common: Common,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error[{}]: {}\n", e.kind(), e) }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: format!("error[malformed-input]: {text}") }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(o) => o,
        Err(e) => Outcome::error(&e),
    }
}

struct Ctx {
    field: FieldSpec,
    format: Format,
    max_vertices: usize,
    search_cap: u128,
}

impl Ctx {
    fn new(c: &Common, default_vertices: usize) -> Result<Self> {
        Ok(Ctx {
            field: FieldSpec::parse(&c.field)?,
            format: match c.format {
                FormatArg::Table => Format::Table,
                FormatArg::Json => Format::Json,
            },
            max_vertices: c.max_vertices.unwrap_or(default_vertices),
            search_cap: c.search_cap,
        })
    }

    fn check(&self, i: &MonomialIdeal) -> Result<()> {
        if i.nvars() > self.max_vertices {
            return Err(Error::CapExceeded { what: "variable count", size: i.nvars() as u128, cap: self.max_vertices as u128 });
        }
        let box_size = i.colon_search_size();
        if !i.is_squarefree() && box_size > self.search_cap {
            return Err(Error::CapExceeded { what: "colon search box", size: box_size, cap: self.search_cap });
        }
        Ok(())
    }

    fn ideals(&self, input: &Inputs) -> Result<Vec<MonomialIdeal>> {
        let vars: Option<Vec<String>> =
            input.vars.as_ref().map(|v| v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect());
        let mut out = Vec::new();
        for f in &input.files {
            let text = std::fs::read_to_string(f).map_err(|e| Error::Malformed(format!("cannot read {f}: {e}")))?;
            out.push(parse::parse_any(&text, vars.as_deref(), self.field)?);
        }
        for g in &input.gens {
            out.push(parse::parse_ideal_text(g, vars.as_deref(), self.field)?);
        }
        for e in &input.edges {
            out.push(parse::parse_edge_list(e)?.edge_ideal(self.field)?);
        }
        for i in &out {
            self.check(i)?;
        }
        Ok(out)
    }

    fn one(&self, input: &Inputs) -> Result<MonomialIdeal> {
        let mut v = self.ideals(input)?;
        if v.len() != 1 {
            return Err(Error::Malformed(format!("expected exactly one input, got {}", v.len())));
        }
        Ok(v.remove(0))
    }

    fn at_least(&self, input: &Inputs, k: usize) -> Result<Vec<MonomialIdeal>> {
        let v = self.ideals(input)?;
        if v.len() < k {
            return Err(Error::Malformed(format!("expected at least {k} inputs, got {}", v.len())));
        }
        Ok(v)
    }
}

fn parse_face(i: &MonomialIdeal, text: &str) -> Result<VarSet> {
    let t = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut face = VarSet::EMPTY;
    for tok in t.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let v = match i.ring().index_of(tok) {
            Some(v) => v,
            None => match tok.parse::<usize>() {
                Ok(k) if k >= 1 && k <= i.nvars() => k - 1,
                _ => return Err(Error::Malformed(format!("unknown face vertex '{tok}'"))),
            },
        };
        face = face.with(v);
    }
    Ok(face)
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    let cap = DEFAULT_VERTEX_CAP;
    let out = match cmd {
        Command::Analyze { input, common } => {
            let ctx = Ctx::new(&common, cap)?;
            report::profile(&invariants::profile(&ctx.one(&input)?)?, ctx.format)
        }
        Command::Filtration { input, common } => {
            let ctx = Ctx::new(&common, cap)?;
            report::filtration(&filtration::dimension_filtration(&ctx.one(&input)?)?, ctx.format)
        }
        Command::Seqcm { input, common } => {
            let ctx = Ctx::new(&common, cap)?;
            let i = ctx.one(&input)?;
            let v = filtration::is_sequentially_cm(&i)?;
            let f = filtration::dimension_filtration(&i)?;
            report::seqcm(&i, &v, filtration::filtration_sequentially_cm(&f), ctx.format)
        }
        Command::Att { input, common } => {
            let ctx = Ctx::new(&common, cap)?;
            let i = ctx.one(&input)?;
            report::att(&i, &filtration::att_report(&i)?, ctx.format)
        }
        Command::Psupp { input, common, degree } => {
            let ctx = Ctx::new(&common, cap)?;
            let i = ctx.one(&input)?;
            let dim = invariants::krull_dim(&i)?;
            let degrees: Vec<usize> = match degree {
                Some(d) if d > dim => {
                    return Err(Error::OutOfRange { index: d as i64, lo: 0, hi: dim as i64 });
                }
                Some(d) => vec![d],
                None => (0..=dim).collect(),
            };
            let rows = degrees.into_iter().map(|d| Ok((d, filtration::psupp_monomial(&i, d)?))).collect::<Result<Vec<_>>>()?;
            report::psupp(&i, &rows, ctx.format)
        }
        Command::Tensor { input, common } => {
            let ctx = Ctx::new(&common, cap)?;
            let ideals = ctx.at_least(&input, 2)?;
            let mut join = ideals[0].clone();
            for i in &ideals[1..] {
                join = join.tensor_join(i)?;
            }
            ctx.check(&join)?;
            let factors = ideals.iter().map(invariants::profile).collect::<Result<Vec<_>>>()?;
            report::tensor(&factors, &invariants::profile(&join)?, ctx.format)
        }
        Command::Polarize { input, common } => {
            let ctx = Ctx::new(&common, cap)?;
            report::polarize(&ctx.one(&input)?.polarize()?, ctx.format)
        }
        Command::Localize { input, common, face } => {
            let ctx = Ctx::new(&common, cap)?;
            let i = ctx.one(&input)?;
            let f = parse_face(&i, &face)?;
            report::localize(&i, &invariants::localization_profile(&i, f)?, ctx.format)
        }
        Command::Directsum { input, common } => {
            let ctx = Ctx::new(&common, cap)?;
            let ideals = ctx.at_least(&input, 1)?;
            let profiles = ideals.iter().map(invariants::profile).collect::<Result<Vec<_>>>()?;
            report::profile(&invariants::direct_sum_profile(&profiles)?, ctx.format)
        }
        Command::Probe { common, seed, samples } => {
            let ctx = Ctx::new(&common, 9)?;
            let cfg = ProbeConfig { seed, samples, max_vertices: ctx.max_vertices };
            report::probe(&filtration::probe_open_question(&cfg, ctx.field)?, ctx.field, ctx.format)
        }
        Command::Regress { common } => {
            let ctx = Ctx::new(&common, cap)?;
            return Ok(regression(ctx.format));
        }
    };
    Ok(Outcome::ok(out))
}

fn regression(format: Format) -> Outcome {
    let checks = regress::run();
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let mut s = String::new();
    if format == Format::Json {
        let rows: Vec<serde_json::Value> = checks
            .iter()
            .map(|c| serde_json::json!({"name": c.name, "passed": c.passed(), "expected": c.expected, "actual": c.actual}))
            .collect();
        s = serde_json::to_string_pretty(&serde_json::json!({"checks": rows, "failed": failed})).expect("json");
        s.push('\n');
    } else {
        for c in &checks {
            if c.passed() {
                writeln!(s, "ok    {}", c.name).unwrap();
            } else {
                writeln!(s, "FAIL  {}: expected {}, got {}", c.name, c.expected, c.actual).unwrap();
            }
        }
        writeln!(s, "{} checks, {} failed", checks.len(), failed).unwrap();
    }
    Outcome { code: i32::from(failed > 0), stdout: s, stderr: String::new() }
}

//! Command-line front end for the dicritical toolkit.

pub mod parse;
pub mod render;
pub mod report;

use std::fs;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use dicritical_core::algebra::{BiPoly, Field};
use dicritical_core::atypical::aggregate_report;
use dicritical_core::hensel::{edge_factorization, HenselError};
use dicritical_core::infinity::{extremal_family, family_h, family_prime, infinity_report, InfinityError};
use dicritical_core::pencil::{make_pencil, PencilError, SpecialPencil};
use dicritical_core::resolver::{resolve, ResolveOptions, ResolverError};

use parse::{parse_bipoly, parse_field, parse_pencil, print_bipoly, ParseError, VarMap};
use render::{render_polygon_svg, render_polygon_tikz, PolygonPicture};

#[derive(Parser, Debug)]
#[command(name = "dicritical", version, about = "Dicritical divisors and atypical values of special pencils")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Ground field: q or fp:<prime>
    #[arg(long, default_value = "q")]
    pub field: String,
    /// Variable roles, e.g. x=z,y=x
    #[arg(long, default_value = "")]
    pub vars: String,
    #[arg(long, default_value_t = 64)]
    pub max_depth: usize,
    /// Fail when an edge polynomial does not split over the field
    #[arg(long)]
    pub strict: bool,
    /// Write the JSON report to a path, or `-` for stdout
    #[arg(long)]
    pub json: Option<String>,
    /// Write an SVG of the root polygon
    #[arg(long)]
    pub svg: Option<String>,
    /// Write a TikZ picture of the root polygon
    #[arg(long)]
    pub tikz: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Resolve `p - T x^c U`
    AnalyzeLocal {
        #[arg(long)]
        p: String,
        #[arg(long)]
        c: u32,
        #[arg(long, default_value = "1")]
        u: String,
        #[command(flatten)]
        common: Common,
    },
    /// Resolve a pencil given directly, affine in T
    AnalyzePencil {
        pencil: String,
        #[command(flatten)]
        common: Common,
    },
    /// Atypical values at infinity of a polynomial
    AnalyzeInfinity {
        poly: String,
        #[command(flatten)]
        common: Common,
    },
    /// One Hensel factor per top-level edge
    FactorEdges {
        pencil: String,
        /// Weighted precision in the grading of the first edge
        #[arg(long, default_value_t = 40)]
        precision: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Member `d` of the extremal family
    GenFamily {
        #[arg(long)]
        d: u32,
        #[arg(long, default_value = "q")]
        field: String,
        /// Pick the first prime above 1000 over which the family splits
        #[arg(long)]
        auto_prime: bool,
        #[arg(long)]
        json: Option<String>,
    },
    /// Draw the polygon of a pencil
    Render {
        pencil: String,
        #[command(flatten)]
        common: Common,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Unsplit(String),
    Budget(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Unsplit(_) => 3,
            Failure::Budget(_) => 4,
            Failure::Internal(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Unsplit(m) | Failure::Budget(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<PencilError> for Failure {
    fn from(e: PencilError) -> Self {
        match e {
            PencilError::Invariant(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<ResolverError> for Failure {
    fn from(e: ResolverError) -> Self {
        match e {
            ResolverError::IrrationalBranch { .. } => Failure::Unsplit(e.to_string()),
            ResolverError::DepthExceeded(_) | ResolverError::NodeBudgetExceeded(_) => Failure::Budget(e.to_string()),
            ResolverError::Pencil(p) => p.into(),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<InfinityError> for Failure {
    fn from(e: InfinityError) -> Self {
        match e {
            InfinityError::NonSplitTopForm { .. } => Failure::Unsplit(e.to_string()),
            InfinityError::Resolver(r) => r.into(),
            InfinityError::Pencil(p) => p.into(),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<HenselError> for Failure {
    fn from(e: HenselError) -> Self {
        match e {
            HenselError::PrecisionTooLow { .. } => Failure::Input(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

struct Ctx {
    field: Field,
    vars: VarMap,
    opts: ResolveOptions,
}

fn context(c: &Common) -> Result<Ctx, Failure> {
    let field = parse_field(&c.field)?;
    let vars = VarMap::parse(&c.vars)?;
    let opts = ResolveOptions { max_depth: c.max_depth, strict: c.strict, ..Default::default() };
    Ok(Ctx { field, vars, opts })
}

/// Writes `text` to `path`; `-` appends it to stdout instead.
fn emit(path: &Option<String>, text: &str, stdout: &mut String) -> Result<bool, Failure> {
    match path.as_deref() {
        None => Ok(false),
        Some("-") => {
            stdout.push_str(text);
            Ok(true)
        }
        Some(p) => fs::write(p, text).map(|_| false).map_err(|e| Failure::Input(format!("cannot write {p}: {e}"))),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

fn pictures(c: &Common, s: &SpecialPencil, out: &mut String) -> Result<(), Failure> {
    let pic = PolygonPicture::from_pencil(s.poly());
    if c.svg.is_some() {
        emit(&c.svg, &render_polygon_svg(&pic), out)?;
    }
    if c.tikz.is_some() {
        emit(&c.tikz, &render_polygon_tikz(&pic), out)?;
    }
    Ok(())
}

fn analyze(s: &SpecialPencil, input: &str, ctx: &Ctx, c: &Common) -> Result<String, Failure> {
    let tree = resolve(s, &ctx.opts)?;
    let rep = aggregate_report(&tree);
    let json = report::local_report(input, &tree, &rep);
    let mut out = String::new();
    let to_stdout = emit(&c.json, &to_json(&json), &mut out)?;
    pictures(c, s, &mut out)?;
    if !to_stdout {
        out.push_str(&report::local_text(&json));
    }
    Ok(out)
}

fn execute(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::AnalyzeLocal { p, c, u, common } => {
            let ctx = context(&common)?;
            let pp = parse_bipoly(&p, ctx.field, &ctx.vars)?;
            let uu = parse_bipoly(&u, ctx.field, &ctx.vars)?;
            let s = make_pencil(&pp, c, &uu)?;
            let input = format!("{} - T*x^{c}*({})", print_bipoly(&pp, &VarMap::default()), print_bipoly(&uu, &VarMap::default()));
            analyze(&s, &input, &ctx, &common)
        }
        Command::AnalyzePencil { pencil, common } => {
            let ctx = context(&common)?;
            let s = SpecialPencil::from_poly(parse_pencil(&pencil, ctx.field, &ctx.vars)?)?;
            let input = parse::print_pencil(s.poly(), &VarMap::default());
            analyze(&s, &input, &ctx, &common)
        }
        Command::AnalyzeInfinity { poly, common } => {
            let ctx = context(&common)?;
            let f = parse_bipoly(&poly, ctx.field, &ctx.vars)?;
            let r = infinity_report(&f, &ctx.opts)?;
            let json = report::infinity_json(&print_bipoly(&f, &VarMap::default()), &r);
            let mut out = String::new();
            if !emit(&common.json, &to_json(&json), &mut out)? {
                out.push_str(&report::infinity_text(&json));
            }
            Ok(out)
        }
        Command::FactorEdges { pencil, precision, common } => {
            let ctx = context(&common)?;
            let s = SpecialPencil::from_poly(parse_pencil(&pencil, ctx.field, &ctx.vars)?)?;
            let fac = edge_factorization(&s, precision)?;
            let ok = fac.verify(s.poly());
            let input = parse::print_pencil(s.poly(), &VarMap::default());
            let json = report::factorization_json(&input, ctx.field, &fac, ok);
            let mut out = String::new();
            if !emit(&common.json, &to_json(&json), &mut out)? {
                out.push_str(&format!("{} factors, product verified: {ok}\n", json.factors.len()));
                for f in &json.factors {
                    out.push_str(&format!(
                        "  edge {:?}-{:?} ({}): y-degree {}, weight {:?}, precision {}, {} terms\n",
                        f.edge[0],
                        f.edge[1],
                        f.kind,
                        f.y_degree,
                        f.weight,
                        f.precision,
                        f.terms.len()
                    ));
                }
                out.push_str(&format!("y-degrees sum to {}\n", json.y_degree_sum));
            }
            if !ok {
                return Err(Failure::Internal("product check failed".into()));
            }
            Ok(out)
        }
        Command::GenFamily { d, field, auto_prime, json } => {
            let field = if auto_prime {
                Field::Prime(family_prime(d).ok_or_else(|| Failure::Input(format!("no splitting prime for d = {d}")))?)
            } else {
                parse_field(&field)?
            };
            let h = family_h(d, field)?;
            let f: BiPoly = extremal_family(d, field)?;
            let text = print_bipoly(&f, &VarMap::default());
            let field_flag = match field {
                Field::Rationals => "q".to_string(),
                Field::Prime(p) => format!("fp:{p}"),
            };
            let mut out = String::new();
            let doc = serde_json::json!({
                "d": d,
                "field": field_flag,
                "h": h.to_text("t"),
                "polynomial": text,
            });
            if !emit(&json, &to_json(&doc), &mut out)? {
                out.push_str(&text);
                out.push('\n');
            }
            Ok(out)
        }
        Command::Render { pencil, common } => {
            let ctx = context(&common)?;
            let s = SpecialPencil::from_poly(parse_pencil(&pencil, ctx.field, &ctx.vars)?)?;
            let mut out = String::new();
            let pic = PolygonPicture::from_pencil(s.poly());
            if common.svg.is_none() && common.tikz.is_none() {
                out.push_str(&render_polygon_svg(&pic));
            }
            pictures(&common, &s, &mut out)?;
            Ok(out)
        }
    }
}

/// Runs one command line; the first element is the program name.
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
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(cli.command) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(f) => Outcome { code: f.code(), stdout: String::new(), stderr: format!("error: {}\n", f.message()) },
    }
}

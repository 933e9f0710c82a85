//! Command definitions and dispatch.

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use rcp::catalog::{self, Expectation};
use rcp::numerics::{solve_cubic_real, working_precision, DEFAULT_PRECISION, MIN_PRECISION};
use rcp::rcp::{self as core, IdentityReport};
use rcp::transforms;
use rcp::{Cubic, Error, Scalar};
use serde_json::{json, Value};

use crate::document::{Document, Format};
use crate::parse::{parse_polynomial, parse_value, ParseError};

/// Bound on `|p|` and `|c|` for the `random` polynomial keyword.
const RANDOM_BOUND: i64 = 10;

#[derive(Parser, Debug)]
#[command(
    name = "rcp",
    version,
    about = "Ramanujan cubic polynomials: membership, identities and transforms"
)]
pub struct Cli {
    /// Working precision in bits.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    pub precision: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the `random` polynomial keyword.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Judge identities with tolerance `2^-E * scale` instead of `2^-(P/2)`.
    #[arg(long = "tolerance-exp", global = true)]
    pub tolerance_exp: Option<i64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Poly {
    /// A polynomial such as "x^3 - 3x^2 - 6x + 8", a triple "p,q,r", or
    /// `random`.
    #[arg(allow_hyphen_values = true)]
    pub poly: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide membership and report `pq/r`.
    Check(Poly),
    /// Real roots with an error bound.
    Roots(Poly),
    /// Verify the cube-root identities of an RCP.
    Identities {
        #[command(flatten)]
        poly: Poly,
        /// Comma-separated identity ids (eq11, eq12, eq13, eq26, eq27, eq2, eq3).
        #[arg(long, value_delimiter = ',')]
        which: Vec<String>,
    },
    /// Apply one of the RCP-preserving transforms.
    Transform {
        #[command(flatten)]
        poly: Poly,
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["reciprocal", "shift"])]
        scale: Option<String>,
        #[arg(long, conflicts_with = "shift")]
        reciprocal: bool,
        #[arg(long)]
        shift: bool,
    },
    /// Find the permutation taking `c^2/x_i` to `c - x_j`.
    Permute(Poly),
    /// The `xi` values and the cubic they satisfy.
    Xi(Poly),
    /// Match the root-ratio multisets of two RCPs.
    Match {
        #[arg(allow_hyphen_values = true)]
        p1: String,
        #[arg(allow_hyphen_values = true)]
        p2: String,
    },
    /// Select `t` and verify the cube-root identities for
    /// `x^3 - a x^2 + b x - 1`.
    Ramanujan {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Also report the form without the outer cube root.
        #[arg(long)]
        literal: bool,
    },
    /// List or verify the built-in families.
    Catalog {
        #[arg(value_parser = ["verify"])]
        action: Option<String>,
        #[arg(long)]
        entry: Option<String>,
        /// Include printed forms that are known to fail.
        #[arg(long)]
        literal: bool,
    },
    /// Enumerate cosine-orbit cubic families.
    Scan {
        #[arg(long = "n-max")]
        n_max: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check(_) => "check",
            Command::Roots(_) => "roots",
            Command::Identities { .. } => "identities",
            Command::Transform { .. } => "transform",
            Command::Permute(_) => "permute",
            Command::Xi(_) => "xi",
            Command::Match { .. } => "match",
            Command::Ramanujan { .. } => "ramanujan",
            Command::Catalog { .. } => "catalog",
            Command::Scan { .. } => "scan",
        }
    }
}

/// A failure before any verification ran.
#[derive(Debug)]
pub struct InputError(pub String);

impl From<ParseError> for InputError {
    fn from(e: ParseError) -> Self {
        InputError(e.to_string())
    }
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type Step = Result<Document, InputError>;

struct Ctx {
    prec: usize,
    seed: u64,
    tolerance_exp: Option<i64>,
}

impl Ctx {
    fn cubic(&self, text: &str) -> Result<Cubic, InputError> {
        if text.trim() == "random" {
            let bound = BigRational::from_integer(BigInt::from(RANDOM_BOUND));
            return Ok(core::random_rcp(self.seed, &bound)?);
        }
        Ok(parse_polynomial(text, self.prec)?.cubic)
    }

    fn value(&self, text: &str) -> Result<Scalar, InputError> {
        Ok(parse_value(text, self.prec)?)
    }

    fn judge(&self, r: IdentityReport) -> IdentityReport {
        match self.tolerance_exp {
            Some(e) => r.rejudge(e),
            None => r,
        }
    }
}

/// Errors from the library that mean "checked, and it is false" rather than
/// "bad input".
fn is_verdict(e: &Error) -> bool {
    matches!(
        e,
        Error::NotAnRcp
            | Error::NoBijection(_)
            | Error::AmbiguousMatch
            | Error::NoSuitableT
            | Error::ConditionFiveViolated
    )
}

fn verdict_or_input(doc: Document, e: Error) -> Step {
    if is_verdict(&e) {
        Ok(doc.failed(e.to_string()))
    } else {
        Err(e.into())
    }
}

pub fn dispatch(cli: &Cli, argv: &[String]) -> Step {
    if cli.precision < MIN_PRECISION {
        return Err(InputError(format!(
            "precision must be at least {MIN_PRECISION} bits"
        )));
    }
    let ctx = Ctx {
        prec: cli.precision,
        seed: cli.seed,
        tolerance_exp: cli.tolerance_exp,
    };
    let doc = Document::new(cli.command.name(), argv, cli.precision);
    match &cli.command {
        Command::Check(p) => check(&ctx, doc, &p.poly),
        Command::Roots(p) => roots(&ctx, doc, &p.poly),
        Command::Identities { poly, which } => identities(&ctx, doc, &poly.poly, which),
        Command::Transform {
            poly,
            scale,
            reciprocal,
            shift,
        } => transform(&ctx, doc, &poly.poly, scale.as_deref(), *reciprocal, *shift),
        Command::Permute(p) => permute(&ctx, doc, &p.poly),
        Command::Xi(p) => xi(&ctx, doc, &p.poly),
        Command::Match { p1, p2 } => match_cmd(&ctx, doc, p1, p2),
        Command::Ramanujan { a, b, literal } => ramanujan(&ctx, doc, a, b, *literal),
        Command::Catalog {
            action,
            entry,
            literal,
        } => catalog_cmd(&ctx, doc, action.is_some(), entry.as_deref(), *literal),
        Command::Scan { n_max } => scan(&ctx, doc, *n_max),
    }
}

fn check(ctx: &Ctx, doc: Document, text: &str) -> Step {
    let c = ctx.cubic(text)?;
    let res = core::is_rcp(&c, ctx.prec);
    let ok = res.is_rcp;
    Ok(doc.with_cubic(&c).detail(json!(res)).verdict(ok))
}

fn roots(ctx: &Ctx, doc: Document, text: &str) -> Step {
    let c = ctx.cubic(text)?;
    let roots = solve_cubic_real(&c, ctx.prec)?;
    let values: Vec<Scalar> = roots.values().to_vec();
    Ok(doc.with_cubic(&c).detail(json!({
        "roots": values,
        "error_bound": roots.err(),
        "exact": roots.exact().is_some(),
    })))
}

const DEFAULT_IDENTITIES: [&str; 5] = ["eq11", "eq12", "eq13", "eq26", "eq27"];
const KNOWN_IDENTITIES: [&str; 7] = ["eq11", "eq12", "eq13", "eq26", "eq27", "eq2", "eq3"];

fn identities(ctx: &Ctx, doc: Document, text: &str, which: &[String]) -> Step {
    let c = ctx.cubic(text)?;
    let ids: Vec<&str> = if which.is_empty() {
        DEFAULT_IDENTITIES.to_vec()
    } else {
        which.iter().map(|s| s.trim()).collect()
    };
    if let Some(bad) = ids.iter().find(|id| !KNOWN_IDENTITIES.contains(id)) {
        return Err(InputError(format!(
            "unknown identity '{bad}' (known: {})",
            KNOWN_IDENTITIES.join(", ")
        )));
    }
    let doc = doc.with_cubic(&c);
    let prec = ctx.prec;
    let mut reports = Vec::new();
    let mut ratio = None;
    let mut selection = None;
    for id in ids {
        let result = match id {
            "eq11" => core::verify_eq11(&c, prec),
            "eq12" => core::verify_eq12(&c, prec),
            "eq13" => core::verify_eq13(&c, prec),
            "eq26" | "eq27" => {
                if ratio.is_none() {
                    ratio = Some(core::ratio_sum(&c, prec));
                }
                match ratio.as_ref().expect("set above") {
                    Ok(r) if id == "eq26" => Ok(r.identity.clone()),
                    Ok(r) => Ok(r.cube_law.clone()),
                    Err(e) => Err(e.clone()),
                }
            }
            _ => {
                if selection.is_none() {
                    selection = Some(
                        core::to_ramanujan_form(&c, prec)
                            .and_then(|f| core::ramanujan_t(&f.a, &f.b, prec)),
                    );
                }
                match selection.as_ref().expect("set above") {
                    Ok(s) if id == "eq2" => Ok(s.eq2_report.clone()),
                    Ok(s) => Ok(s.eq3_report.clone()),
                    Err(e) => Err(e.clone()),
                }
            }
        };
        match result {
            Ok(r) => reports.push(ctx.judge(r)),
            Err(e) => return verdict_or_input(doc.reports(reports), e),
        }
    }
    Ok(doc.reports(reports).detail(json!({ "mu": core::mu(&c) })))
}

fn transform(
    ctx: &Ctx,
    doc: Document,
    text: &str,
    scale: Option<&str>,
    reciprocal: bool,
    shift: bool,
) -> Step {
    let c = ctx.cubic(text)?;
    let doc = doc.with_cubic(&c);
    let (kind, out) = match (scale, reciprocal, shift) {
        (Some(a), false, false) => ("scale", transforms::scale(&c, &ctx.value(a)?)),
        (None, true, false) => ("reciprocal", transforms::reciprocal(&c, ctx.prec)),
        (None, false, true) => ("shift", transforms::shift_by_cbrt_r(&c, ctx.prec)),
        _ => {
            return Err(InputError(
                "choose exactly one of --scale, --reciprocal, --shift".into(),
            ))
        }
    };
    match out {
        Ok(t) => {
            let check = core::is_rcp(&t, ctx.prec);
            let input_rcp = core::is_rcp(&c, ctx.prec).is_rcp;
            // the transforms preserve membership; flag it if they did not
            let ok = !input_rcp || check.is_rcp;
            Ok(doc
                .detail(json!({
                    "transform": kind,
                    "output": crate::document::cubic_json(&t),
                    "output_text": t.to_string(),
                    "output_is_rcp": check.is_rcp,
                }))
                .verdict(ok))
        }
        Err(e) => verdict_or_input(doc, e),
    }
}

fn permute(ctx: &Ctx, doc: Document, text: &str) -> Step {
    let c = ctx.cubic(text)?;
    let doc = doc.with_cubic(&c);
    match transforms::thm33_permutation(&c, ctx.prec) {
        Ok(w) => Ok(doc.detail(json!(w))),
        Err(e) => verdict_or_input(doc, e),
    }
}

fn xi(ctx: &Ctx, doc: Document, text: &str) -> Step {
    let c = ctx.cubic(text)?;
    let doc = doc.with_cubic(&c);
    if let Err(e) = core::mu_gap(&c, ctx.prec) {
        return verdict_or_input(doc, e);
    }
    let values = core::xi_values(&c, ctx.prec)?;
    let mu = core::mu(&c);
    let poly = core::xi_polynomial(&mu);
    let w = working_precision(ctx.prec);
    let reports: Vec<IdentityReport> = values
        .xi
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let lhs = &v.cube() + &(&poly.c2 * &v.square());
            let rhs = -(&(&poly.c1 * v) + &poly.c0);
            ctx.judge(IdentityReport::judge(
                format!("xi_{}", k + 1),
                lhs.to_real(w),
                rhs.to_real(w),
                ctx.prec,
            ))
        })
        .collect();
    Ok(doc.reports(reports).detail(json!({
        "mu": mu,
        "xi": values.xi,
        "polynomial": poly.to_cubic().to_string().replace('x', "ξ"),
    })))
}

fn match_cmd(ctx: &Ctx, doc: Document, p1: &str, p2: &str) -> Step {
    let c1 = ctx.cubic(p1)?;
    let c2 = ctx.cubic(p2)?;
    let doc = doc.with_cubic(&c1);
    match transforms::match_same_mu(&c1, &c2, ctx.prec) {
        Ok(m) => {
            let ok = m.matched;
            Ok(doc
                .detail(json!({ "second": crate::document::cubic_json(&c2), "witness": m }))
                .verdict(ok))
        }
        Err(e) => verdict_or_input(doc, e),
    }
}

fn ramanujan(ctx: &Ctx, doc: Document, a: &str, b: &str, literal: bool) -> Step {
    let (a, b) = (ctx.value(a)?, ctx.value(b)?);
    match core::ramanujan_t(&a, &b, ctx.prec) {
        Ok(sel) => {
            let mut reports = vec![
                ctx.judge(sel.eq2_report.clone()),
                ctx.judge(sel.eq3_report.clone()),
            ];
            if literal {
                reports.push(ctx.judge(sel.eq3_literal_report.clone()));
            }
            let special = core::special_t(&a, &b, ctx.prec).ok();
            Ok(doc.reports(reports).detail(json!({
                "a": a,
                "b": b,
                "t": sel.t,
                "real_t_roots": sel.all_real_t,
                "ambiguous": sel.ambiguous,
                "special_t": special,
            })))
        }
        Err(e) => verdict_or_input(doc, e),
    }
}

fn catalog_cmd(ctx: &Ctx, doc: Document, verify: bool, entry: Option<&str>, literal: bool) -> Step {
    let entries: Vec<catalog::CatalogEntry> = match entry {
        Some(id) => vec![catalog::lookup(id)?],
        None => catalog::builtin_entries(),
    };
    if !verify {
        let list: Vec<Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "id": e.id,
                    "cubic": crate::document::cubic_json(&e.cubic),
                    "text": e.cubic.to_string(),
                    "mu": core::mu(&e.cubic),
                    "roots": e.root_descriptions,
                    "identities": e.identities.iter().map(|s| json!({
                        "id": s.id,
                        "status": s.expected.label(),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        let doc = if entries.len() == 1 {
            doc.with_cubic(&entries[0].cubic)
        } else {
            doc
        };
        return Ok(doc.detail(json!({ "entries": list })));
    }

    let mut reports = Vec::new();
    let mut statuses = Vec::new();
    for e in &entries {
        for c in catalog::check_entry(e.id, ctx.prec)? {
            let is_literal = matches!(c.expected, Expectation::ExpectedFailLiteral { .. });
            if is_literal && !literal {
                continue;
            }
            statuses.push(json!({
                "entry": e.id,
                "identity": c.report.identity_id,
                "status": c.expected.label(),
            }));
            let id = format!("{}.{}", e.id, c.report.identity_id);
            reports.push(ctx.judge(c.report.renamed(id)));
        }
    }
    let doc = if entries.len() == 1 {
        doc.with_cubic(&entries[0].cubic)
    } else {
        doc
    };
    Ok(doc.reports(reports).detail(json!({ "expected": statuses })))
}

fn scan(ctx: &Ctx, doc: Document, n_max: u64) -> Step {
    if n_max < 3 {
        return Err(InputError("--n-max must be at least 3".into()));
    }
    let fams = catalog::scan_cos_families(n_max, ctx.prec)?;
    Ok(doc.detail(json!({ "families": fams })))
}

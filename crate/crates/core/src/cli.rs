//! Command-line front end: `proportionals <subcommand> [options]`.
//!
//! Exit status is 0 on success, 1 when a verification fails, and 2 for usage
//! errors or inputs outside a solver's domain. Every subcommand prints either
//! plain text or, with `--json`, a single JSON document. The same arguments
//! always give the same bytes.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::delian::{duplicate_cube, two_means, Method};
use crate::error::{Error, Result};
use crate::euclid::run_suite;
use crate::figures::{render, FigureParams, FigureSpec};
use crate::proportio::{
    is_continued_proportion, planar_construction, reproduce_table, solve_continued_chords, sphere_construction,
    verify_continued_proportion, ChordTable, TableSection, PRINTED_TABLE,
};
use crate::pyramid::{
    circumsphere_diameter_sq, diagonal_sq, diagonal_trace, oblique_diagonal_sq, prism_diagonal_check,
    ObliqueVertexFrame, RightPyramid,
};
use crate::scalar::{roots::sqrt_at, DecimalScalar, PrecisionContext, Rational};

pub const DIGITS_ENV: &str = "PROPORTIONALS_DIGITS";

#[derive(Parser, Debug)]
#[command(
    name = "proportionals",
    version,
    about = "Continued proportions, mean proportionals and right-angled pyramids in exact arithmetic"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Fractional digits reported.
    #[arg(long, global = true, env = DIGITS_ENV, default_value_t = PrecisionContext::DEFAULT_OUTPUT_DIGITS)]
    digits: u32,
    /// Extra digits carried while iterating (at least 5).
    #[arg(long, global = true, default_value_t = PrecisionContext::DEFAULT_GUARD_DIGITS)]
    guard: u32,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Split a diameter AD at B so that AB, BC, BD, DA are in continued proportion.
    SolveChords {
        #[arg(long, default_value = "2")]
        diameter: DecimalScalar,
    },
    /// Recompute the ten-digit tables for diameter 2 and compare them with the printed digits.
    VerifyTable,
    /// Diagonal of the box on a right-angled pyramid's three edges, optionally with oblique angles.
    Pyramid {
        /// Edge lengths DA, DB, DC.
        #[arg(long, num_args = 3, required = true, value_names = ["DA", "DB", "DC"])]
        edges: Vec<Rational>,
        /// Cosines of the angles ADB, BDC, CDA.
        #[arg(long, num_args = 3, value_names = ["AB", "BC", "CA"])]
        cosines: Option<Vec<Rational>>,
    },
    /// Two mean proportionals between a and b.
    Means {
        #[arg(long)]
        a: DecimalScalar,
        #[arg(long)]
        b: DecimalScalar,
        #[arg(long, value_enum, default_value_t = MethodArg::Instrument)]
        method: MethodArg,
    },
    /// Edge of the cube with twice the volume.
    DuplicateCube {
        #[arg(long)]
        edge: DecimalScalar,
    },
    /// Four continued proportionals AF, AE, AD, AC in a circle (or sphere) on diameter AC.
    FourProportionals {
        #[arg(long, default_value = "2")]
        ac: Rational,
        /// Position of D: tan(DAC / 2), strictly between 0 and 1.
        #[arg(long, default_value = "1/2")]
        t: Rational,
        /// Carry AE to AG on the perpendicular circle through AD.
        #[arg(long)]
        sphere: bool,
    },
    /// Seeded randomized run of every proposition checker.
    CheckProps {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        instances: usize,
    },
    /// Write one of the seven figures as SVG.
    Figure {
        #[arg(long)]
        id: u8,
        /// Destination file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, num_args = 3)]
        edges: Option<Vec<Rational>>,
        #[arg(long)]
        diameter: Option<Rational>,
        #[arg(long)]
        a: Option<Rational>,
        #[arg(long)]
        b: Option<Rational>,
        #[arg(long)]
        t: Option<Rational>,
        #[arg(long, default_value_t = 480)]
        width: u32,
        #[arg(long, default_value_t = 360)]
        height: u32,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Instrument,
    Compass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Resolved global settings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub precision: PrecisionContext,
    pub format: OutputFormat,
}

impl RunConfig {
    fn from_args(g: &GlobalArgs) -> Result<Self> {
        if g.digits == 0 {
            return Err(Error::Usage("--digits must be at least 1".into()));
        }
        let precision = PrecisionContext::new(g.digits, g.guard).map_err(|e| Error::Usage(e.to_string()))?;
        let format = if g.json { OutputFormat::Json } else { OutputFormat::Text };
        Ok(Self { precision, format })
    }

    fn digits(&self) -> u32 {
        self.precision.output_digits()
    }
}

/// Result of a subcommand: its report and whether every check passed.
struct Report {
    text: String,
    json: Value,
    verified: bool,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Usage(_) | Error::Parse { .. } | Error::Domain(_) | Error::Degenerate(_) => 2,
        Error::Precondition(_) | Error::Precision(_) => 1,
    }
}

/// Runs the command line `args` (program name first), writing the report to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let outcome = RunConfig::from_args(&cli.global).and_then(|cfg| execute(&cli.command, &cfg).map(|r| (cfg, r)));
    match outcome {
        Ok((cfg, report)) => {
            let written = match cfg.format {
                OutputFormat::Text => out.write_all(report.text.as_bytes()),
                OutputFormat::Json => serde_json::to_string_pretty(&report.json)
                    .map_err(std::io::Error::other)
                    .and_then(|s| writeln!(out, "{s}")),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 1;
            }
            if report.verified {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn execute(command: &Command, cfg: &RunConfig) -> Result<Report> {
    match command {
        Command::SolveChords { diameter } => solve_chords(diameter, cfg),
        Command::VerifyTable => verify_table(),
        Command::Pyramid { edges, cosines } => pyramid(edges, cosines.as_deref(), cfg),
        Command::Means { a, b, method } => means(a, b, *method, cfg),
        Command::DuplicateCube { edge } => cube(edge, cfg),
        Command::FourProportionals { ac, t, sphere } => four(ac, t, *sphere, cfg),
        Command::CheckProps { seed, instances } => check_props(*seed, *instances),
        Command::Figure {
            id,
            out,
            edges,
            diameter,
            a,
            b,
            t,
            width,
            height,
        } => {
            let params = FigureParams {
                edges: edges.as_ref().map(|e| [e[0].clone(), e[1].clone(), e[2].clone()]),
                diameter: diameter.clone(),
                a: a.clone(),
                b: b.clone(),
                t: t.clone(),
            };
            let spec = FigureSpec {
                id: *id,
                params,
                width: *width,
                height: *height,
            };
            figure(&spec, out.as_ref())
        }
    }
}

fn tolerance(digits: u32) -> DecimalScalar {
    DecimalScalar::new(1, digits)
}

fn solve_chords(diameter: &DecimalScalar, cfg: &RunConfig) -> Result<Report> {
    let c = solve_continued_chords(diameter, &cfg.precision)?;
    let terms = [c.ab.clone(), c.bc.clone(), c.bd.clone(), c.ad.clone()];
    // the rounded lines agree with the proportion to a few output units
    let verified = verify_continued_proportion(&terms, &(tolerance(cfg.digits()) * DecimalScalar::from_integer(10)));
    let residual = c.cubic_residual().round_to(cfg.precision.work_digits());
    let rows = [("AD", &c.ad), ("AB", &c.ab), ("BC", &c.bc), ("BD", &c.bd)];
    let width = rows.iter().map(|(_, v)| v.format_grouped().len()).max().unwrap_or(0);
    let mut text = format!("Diameter AD split at B, {} digits\n", c.digits);
    for (label, v) in rows {
        text.push_str(&format!("  {label:<4}{:>width$}   {v}\n", v.format_grouped()));
    }
    text.push_str(&format!("  cubic residual at working precision: {residual}\n"));
    text.push_str(&format!(
        "  continued proportion: {}\n",
        if verified { "holds" } else { "FAILS" }
    ));
    let historical = c.digits == 10 && c.ad == DecimalScalar::from_integer(2);
    let printed = if historical {
        let lookup = |label: &str| PRINTED_TABLE.iter().find(|(l, _)| *l == label).map(|(_, p)| *p);
        json!({ "ad": lookup("AD"), "ab": lookup("AB"), "bc": lookup("BC"), "bd": lookup("BD") })
    } else {
        Value::Null
    };
    let json = json!({
        "digits": c.digits,
        "diameter": c.diameter,
        "ad": c.ad, "ab": c.ab, "bc": c.bc, "bd": c.bd,
        "as_computed": {
            "ad": c.ad.format_grouped(), "ab": c.ab.format_grouped(),
            "bc": c.bc.format_grouped(), "bd": c.bd.format_grouped(),
        },
        "as_printed": printed,
        "root": c.root,
        "cubic_residual": residual,
        "continued_proportion": verified,
    });
    Ok(Report { text, json, verified })
}

fn table_verified(t: &ChordTable) -> bool {
    // lines rounded at 10 digits and of size up to 2 move the products by a few units in the 10th
    let within = |x: &str, y: &str| match (t.row(x), t.row(y)) {
        (Some(p), Some(q)) => (&p.value - &q.value).abs() < tolerance(9),
        _ => false,
    };
    let lines_match = t
        .rows
        .iter()
        .filter(|r| r.section == TableSection::Lines)
        .all(|r| r.matches_printed == Some(true));
    lines_match && within("DAB", "CBD") && within("BC^2", "ABD") && within("BD^2", "ADBC")
}

fn verify_table() -> Result<Report> {
    let ctx = PrecisionContext::with_output(10);
    let cfg = solve_continued_chords(&DecimalScalar::from_integer(2), &ctx)?;
    let table = reproduce_table(&cfg)?;
    let verified = table_verified(&table);
    let mut text = table.render_text();
    let misprints = table.misprints().count();
    text.push_str(&format!(
        "\n{} rows, {} match the printed digits, {} annotated as misprints\n",
        table.rows.len(),
        table.rows.len() - misprints,
        misprints
    ));
    text.push_str(if verified {
        "table verified\n"
    } else {
        "table verification FAILED\n"
    });
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|r| {
            json!({
                "section": r.section,
                "label": r.label,
                "as_computed": r.grouped,
                "value": r.value,
                "as_printed": r.printed,
                "matches_printed": r.matches_printed,
                "annotation": r.annotation,
                "from_unrounded_root": r.true_root_value,
            })
        })
        .collect();
    let json = json!({ "digits": 10, "rows": rows, "misprints": misprints, "verified": verified });
    Ok(Report { text, json, verified })
}

fn decimal_root(v: &Rational, digits: u32) -> Result<DecimalScalar> {
    sqrt_at(&v.to_decimal(2 * digits + 2), digits)
}

fn pyramid(edges: &[Rational], cosines: Option<&[Rational]>, cfg: &RunConfig) -> Result<Report> {
    let digits = cfg.digits();
    let [da, db, dc] = [edges[0].clone(), edges[1].clone(), edges[2].clone()];
    if let Some(cos) = cosines {
        let frame = ObliqueVertexFrame::new([da, db, dc], [cos[0].clone(), cos[1].clone(), cos[2].clone()])?;
        let sq = oblique_diagonal_sq(&frame)?;
        let diagonal = decimal_root(&sq, digits)?;
        let text = format!(
            "Oblique vertex frame\n  edges      {} {} {}\n  cosines    {} {} {}\n  AE^2       {sq}\n  AE         {diagonal}\n",
            frame.a, frame.b, frame.c, frame.cos_ab, frame.cos_bc, frame.cos_ca
        );
        let json = json!({
            "edges": [frame.a, frame.b, frame.c],
            "cosines": [frame.cos_ab, frame.cos_bc, frame.cos_ca],
            "diagonal_sq": sq,
            "diagonal": diagonal,
        });
        return Ok(Report {
            text,
            json,
            verified: true,
        });
    }
    let p = RightPyramid::new(da, db, dc)?;
    let sq = diagonal_sq(&p);
    let sphere_sq = circumsphere_diameter_sq(&p);
    let trace = diagonal_trace(&p)?;
    let prism = prism_diagonal_check(&p);
    let verified = sq == sphere_sq && prism && trace.be_equals_dc && trace.abe_right_at_b;
    let diagonal = decimal_root(&sq, digits)?;
    let [a, b, c] = p.edges();
    let mut text = format!("Right-angled pyramid with DA = {a}, DB = {b}, DC = {c}\n");
    text.push_str(&format!("  AE^2 = DA^2 + DB^2 + DC^2 = {sq}\n"));
    text.push_str(&format!("  AE = {diagonal}\n"));
    text.push_str(&format!("  circumscribed sphere diameter^2 = {sphere_sq}\n"));
    text.push_str(&format!("  trace: AB^2 = AD^2 + DB^2 = {}\n", trace.ab_sq));
    text.push_str(&format!(
        "         AE^2 = AB^2 + BE^2 = {} (BE = DC: {}, angle ABE right: {})\n",
        trace.ae_sq, trace.be_equals_dc, trace.abe_right_at_b
    ));
    text.push_str(&format!("  prism diagonals AE, GC agree: {prism}\n"));
    text.push_str(&format!(
        "  {}\n",
        if verified {
            "identity verified"
        } else {
            "identity FAILED"
        }
    ));
    let json = json!({
        "edges": [a, b, c],
        "diagonal_sq": sq,
        "diagonal": diagonal,
        "sphere_diameter_sq": sphere_sq,
        "trace": trace,
        "prism_check": prism,
        "verified": verified,
    });
    Ok(Report { text, json, verified })
}

fn means(a: &DecimalScalar, b: &DecimalScalar, method: MethodArg, cfg: &RunConfig) -> Result<Report> {
    let method = match method {
        MethodArg::Instrument => Method::Instrument,
        MethodArg::Compass => Method::Compass,
    };
    let ctx = &cfg.precision;
    let res = two_means(a, b, ctx, method)?;
    let (m1, m2) = res.rounded(ctx);
    let terms = [a.clone(), res.m1.clone(), res.m2.clone(), b.clone()];
    let verified = verify_continued_proportion(&terms, &tolerance(ctx.output_digits()));
    let method_name = match method {
        Method::Instrument => "instrument",
        Method::Compass => "compass",
    };
    let text = format!(
        "Two means between {a} and {b} ({method_name})\n  m1 = {m1}\n  m2 = {m2}\n  arc parameter t = {}\n  iterations = {}\n  residual = {}\n  {a} : m1 = m1 : m2 = m2 : {b} {}\n",
        res.theta_param.to_decimal(ctx.work_digits()),
        res.iterations,
        res.residual,
        if verified { "holds" } else { "FAILS" }
    );
    let json = json!({
        "a": a, "b": b, "method": method,
        "digits": ctx.output_digits(),
        "m1": m1, "m2": m2,
        "m1_work": res.m1, "m2_work": res.m2,
        "theta_param": res.theta_param,
        "iterations": res.iterations,
        "residual": res.residual,
        "verified": verified,
    });
    Ok(Report { text, json, verified })
}

fn cube(edge: &DecimalScalar, cfg: &RunConfig) -> Result<Report> {
    let ctx = &cfg.precision;
    let doubled = duplicate_cube(edge, ctx)?;
    let shown = doubled.round_to(ctx.output_digits());
    let volume_gap = (doubled.pow(3) - edge.pow(3) * DecimalScalar::from_integer(2)).abs();
    let verified = volume_gap < tolerance(ctx.output_digits());
    let text = format!(
        "Cube of edge {edge} doubled\n  new edge = {shown}\n  |edge'^3 - 2 edge^3| < 1e-{}: {verified}\n",
        ctx.output_digits()
    );
    let json = json!({ "edge": edge, "doubled_edge": shown, "doubled_edge_work": doubled, "verified": verified });
    Ok(Report { text, json, verified })
}

fn four(ac: &Rational, t: &Rational, sphere: bool, cfg: &RunConfig) -> Result<Report> {
    let digits = cfg.digits();
    let (quad, extra_text, extra_json) = if sphere {
        let cons = sphere_construction(ac, t)?;
        let ok = cons.perpendicularity_residual.is_zero() && cons.fg_normal_to_base;
        (
            cons.quad()?,
            format!(
                "  planes ADC and AGD: normal dot product {}, FG perpendicular to base: {}\n",
                cons.perpendicularity_residual, cons.fg_normal_to_base
            ),
            json!({ "perpendicularity_residual": cons.perpendicularity_residual, "fg_normal_to_base": cons.fg_normal_to_base, "planes_perpendicular": ok }),
        )
    } else {
        let cons = planar_construction(ac, t)?;
        let ok = cons.congruence_residual().is_zero() && cons.g_on_circle_ad();
        (
            cons.quad()?,
            format!("  common ratio cos(DAC) = {}\n  G mirrors E in AD: {ok}\n", cons.ratio),
            json!({ "ratio": cons.ratio, "mirror_check": ok }),
        )
    };
    let exact = is_continued_proportion(&quad);
    let verified = exact
        && extra_json
            .as_object()
            .is_some_and(|o| o.values().all(|v| v.as_bool() != Some(false)));
    let names = if sphere {
        ["AF", "AG", "AD", "AC"]
    } else {
        ["AF", "AE", "AD", "AC"]
    };
    let mut text = format!(
        "Four continued proportionals on AC = {ac}, t = {t}{}\n",
        if sphere { " (sphere)" } else { "" }
    );
    for (name, v) in names.iter().zip(&quad) {
        text.push_str(&format!("  {name} = {:<24} = {v}\n", v.to_decimal(digits)));
    }
    text.push_str(&extra_text);
    text.push_str(&format!("  continued proportion (exact): {exact}\n"));
    let mut json = json!({
        "ac": ac, "t": t, "sphere": sphere,
        "terms": names.iter().zip(&quad).map(|(n, v)| json!({ "name": n, "exact": v, "decimal": v.to_decimal(digits) })).collect::<Vec<_>>(),
        "continued_proportion": exact,
        "verified": verified,
    });
    if let (Some(obj), Some(extra)) = (json.as_object_mut(), extra_json.as_object()) {
        obj.extend(extra.clone());
    }
    Ok(Report { text, json, verified })
}

fn check_props(seed: u64, instances: usize) -> Result<Report> {
    if instances == 0 {
        return Err(Error::Usage("--instances must be at least 1".into()));
    }
    let report = run_suite(seed, instances);
    let verified = report.all_hold();
    let mut text = format!("seed {seed}, {instances} instances per proposition\n");
    for p in &report.propositions {
        text.push_str(&format!(
            "  {:<14} valid {}/{}  perturbed caught {}/{}  {}\n",
            p.proposition,
            p.valid_passed,
            p.instances,
            p.perturbed_detected,
            p.instances,
            if p.holds() { "ok" } else { "FAILED" }
        ));
    }
    text.push_str(if verified {
        "all propositions hold\n"
    } else {
        "some propositions FAILED\n"
    });
    let json = json!({ "report": report, "all_hold": verified });
    Ok(Report { text, json, verified })
}

fn figure(spec: &FigureSpec, out: Option<&PathBuf>) -> Result<Report> {
    let svg = render(spec)?;
    match out {
        Some(path) => {
            std::fs::write(path, &svg).map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;
            let text = format!(
                "figure {} written to {} ({} bytes)\n",
                spec.id,
                path.display(),
                svg.len()
            );
            let json = json!({ "id": spec.id, "path": path.display().to_string(), "bytes": svg.len() });
            Ok(Report {
                text,
                json,
                verified: true,
            })
        }
        None => {
            let json = json!({ "id": spec.id, "svg": svg });
            Ok(Report {
                text: svg,
                json,
                verified: true,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("proportionals").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn chords_text() {
        let (code, out, _) = run_args(&["solve-chords", "--diameter", "2", "--digits", "10"]);
        assert_eq!(code, 0);
        let ab = out.lines().find(|l| l.trim_start().starts_with("AB")).unwrap();
        assert!(ab.contains("63534 43923"), "{ab}");
    }

    #[test]
    fn means_json() {
        let (code, out, _) = run_args(&["means", "--a", "1", "--b", "2", "--digits", "10", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["m1"], "1.2599210499");
        assert_eq!(v["m2"], "1.5874010520");
    }

    #[test]
    fn usage_and_domain_errors() {
        assert_eq!(run_args(&["bogus"]).0, 2);
        assert_eq!(run_args(&["means", "--a", "1"]).0, 2);
        assert_eq!(run_args(&["means", "--a", "3", "--b", "2"]).0, 2);
        assert_eq!(run_args(&["solve-chords", "--guard", "2"]).0, 2);
        assert_eq!(run_args(&["figure", "--id", "9"]).0, 2);
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("solve-chords"));
    }
}

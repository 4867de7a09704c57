//! Continued proportions in the circle.
//!
//! Two problems live here:
//!
//! * the chord problem: on a diameter `AD` find `B` so that `AB, BC, BD, DA` are
//!   in continued proportion, `BC` being the half-chord at `B`. With `x = AB`
//!   and `d = AD` this is the cubic `(d - x)^3 = d^2 x`, which has exactly one
//!   root in `(0, d)`;
//! * four continued proportionals `AF, AE, AD, AC` in a circle on diameter `AC`,
//!   and the same four in a sphere through a second, perpendicular circle.
//!
//! Points on the circle are addressed by `t = tan(DAC / 2)`, so every construction
//! with rational `t` stays in exact rational arithmetic.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::euclid::{check_4_11, foot_on_line2, unit_circle_point, Point2, Point3};
use crate::scalar::roots::sqrt_at;
use crate::scalar::{DecimalScalar, PrecisionContext, Rational};

/// The four lengths of the chord problem, reported at `digits` fractional digits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordConfig {
    pub ad: DecimalScalar,
    pub ab: DecimalScalar,
    pub bc: DecimalScalar,
    pub bd: DecimalScalar,
    pub digits: u32,
    /// `AB` at working precision, before rounding.
    pub root: DecimalScalar,
    /// The diameter as given.
    pub diameter: DecimalScalar,
}

impl ChordConfig {
    /// `(d - x)^3 - d^2 x` at the unrounded root.
    pub fn cubic_residual(&self) -> DecimalScalar {
        cubic(&self.diameter, &self.root)
    }
}

fn cubic(d: &DecimalScalar, x: &DecimalScalar) -> DecimalScalar {
    (d - x).pow(3) - d.square().mul_exact(x)
}

fn cubic_slope(d: &DecimalScalar, x: &DecimalScalar) -> DecimalScalar {
    // -(3 (d - x)^2 + d^2)
    let dx = (d - x).square();
    -(&(&(&dx + &dx) + &dx) + &d.square())
}

/// Root of `(d - x)^3 = d^2 x` in `(0, d)` at `work_digits` fractional digits.
///
/// The cubic is strictly decreasing on `[0, d]` (positive at 0, negative at d),
/// so bisection over multiples of `10^-work_digits` brackets the root to one
/// unit; two Newton steps then polish inside that bracket.
pub fn chord_root(d: &DecimalScalar, work_digits: u32) -> Result<DecimalScalar> {
    if !d.is_positive() {
        return Err(Error::Domain(format!("diameter must be positive, got {d}")));
    }
    let at = |units: &num_bigint::BigInt| DecimalScalar::new(units.clone(), work_digits);
    let mut lo = num_bigint::BigInt::from(0);
    // ceil(d * 10^w)
    let top = d.round_to(work_digits);
    let mut hi = if &top < d {
        top.mantissa() + 1
    } else {
        top.mantissa().clone()
    };
    while &hi - &lo > num_bigint::BigInt::from(1) {
        let mid: num_bigint::BigInt = (&lo + &hi) >> 1;
        let value = cubic(d, &at(&mid));
        if value.is_positive() {
            lo = mid;
        } else if value.is_negative() {
            hi = mid;
        } else {
            return Ok(at(&mid));
        }
    }
    let (lo, hi) = (at(&lo), at(&hi));
    let mut x = if cubic(d, &lo).abs() <= cubic(d, &hi).abs() {
        lo.clone()
    } else {
        hi.clone()
    };
    for _ in 0..2 {
        let step = cubic(d, &x).div_rounded(&cubic_slope(d, &x), work_digits)?;
        let next = (&x - &step).round_to(work_digits);
        if next < lo || next > hi {
            break;
        }
        x = next;
    }
    Ok(x)
}

/// Solves the chord problem for diameter `d`.
///
/// `AB` is the root rounded half-even to the output digits, `BD = AD - AB`
/// exactly, and `BC` is the square root of the rounded rectangle `AB * BD`,
/// rounded the same way. This is the order that reproduces the historical
/// ten-digit values.
pub fn solve_continued_chords(d: &DecimalScalar, ctx: &PrecisionContext) -> Result<ChordConfig> {
    let digits = ctx.output_digits();
    let root = chord_root(d, ctx.work_digits())?;
    let ab = root.round_to(digits);
    let ad = d.round_to(digits);
    let bd = &ad - &ab;
    let bc = sqrt_at(&ab.mul_exact(&bd), digits)?;
    Ok(ChordConfig {
        ad,
        ab,
        bc,
        bd,
        digits,
        root,
        diameter: d.clone(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableSection {
    /// The four lines in continued proportion.
    Lines,
    /// Rectangles equal by the cross-product rule for four proportionals.
    Rectangles,
    /// Squares of the means against the rectangles under their neighbours.
    Squares,
}

impl TableSection {
    fn heading(self) -> &'static str {
        match self {
            TableSection::Lines => "Lines in continued proportion",
            TableSection::Rectangles => "Equal rectangles (first x fourth = second x third)",
            TableSection::Squares => "Squares of the means (mean^2 = product of neighbours)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub section: TableSection,
    pub label: &'static str,
    /// Exact value computed from the rounded ten-digit lines.
    pub value: DecimalScalar,
    pub grouped: String,
    /// The same quantity from the unrounded root, rounded to the row's scale.
    pub true_root_value: DecimalScalar,
    /// The digits as they appear in the historical table, when comparing against it.
    pub printed: Option<&'static str>,
    pub matches_printed: Option<bool>,
    pub annotation: Option<String>,
}

/// The three tables of the chord problem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordTable {
    pub rows: Vec<TableRow>,
}

/// Digits as printed in the historical tables for diameter 2, punctuation removed.
pub const PRINTED_TABLE: [(&str, &str); 10] = [
    ("AD", "2 00000 00000"),
    ("AB", "63534 43923"),
    ("BC", "93114 24637"),
    ("BD", "1 36465 56077"),
    ("DAB", "1 17068 87846 00000 00000"),
    ("CBD", "1 17068 87846 55798 69049"),
    ("BC^2", "86702 62877 05305 81769"),
    ("ABD", "86702 62877 72943 70071"),
    ("BD^2", "1 86288 49276 27056 29929"),
    ("ADBC", "1 86228 49274 00000 00000"),
];

const TABLE_DIGITS: u32 = 10;

fn printed_for(label: &str) -> Option<&'static str> {
    PRINTED_TABLE.iter().find(|(l, _)| *l == label).map(|(_, p)| *p)
}

fn describe_mismatch(printed: &str, computed: &str) -> String {
    let printed_groups: Vec<&str> = printed.split(' ').collect();
    let computed_groups: Vec<&str> = computed.split(' ').collect();
    let differing: Vec<String> = printed_groups
        .iter()
        .zip(&computed_groups)
        .enumerate()
        .filter(|(_, (p, c))| p != c)
        .map(|(i, (p, c))| format!("group {} printed {p} computed {c}", i + 1))
        .collect();
    if differing.is_empty() || printed_groups.len() != computed_groups.len() {
        format!("misprint: printed {printed}, exact arithmetic gives {computed}")
    } else {
        format!("misprint: {}", differing.join("; "))
    }
}

/// Exact products of the rounded ten-digit lines, as in the historical tables.
///
/// When the diameter is 2 every row is compared with [`PRINTED_TABLE`]; rows
/// whose printed digits disagree with exact arithmetic carry an annotation and
/// are never altered.
pub fn reproduce_table(c: &ChordConfig) -> Result<ChordTable> {
    let lines = [&c.ad, &c.ab, &c.bc, &c.bd];
    if c.digits != TABLE_DIGITS || lines.iter().any(|v| v.scale() != TABLE_DIGITS) {
        return Err(Error::Precondition(format!(
            "table reproduction needs lines at {TABLE_DIGITS} fractional digits, got {}",
            c.digits
        )));
    }
    let compare = c.ad == DecimalScalar::from_integer(2);

    let work = c.root.scale();
    let true_ab = c.root.clone();
    let true_ad = c.diameter.clone();
    let true_bd = &true_ad - &true_ab;
    let true_bc = sqrt_at(&true_ab.mul_exact(&true_bd), work)?;

    let product_digits = 2 * TABLE_DIGITS;
    let entries: Vec<(TableSection, &'static str, DecimalScalar, DecimalScalar)> = vec![
        (TableSection::Lines, "AD", c.ad.clone(), true_ad.round_to(TABLE_DIGITS)),
        (TableSection::Lines, "AB", c.ab.clone(), true_ab.round_to(TABLE_DIGITS)),
        (TableSection::Lines, "BC", c.bc.clone(), true_bc.round_to(TABLE_DIGITS)),
        (TableSection::Lines, "BD", c.bd.clone(), true_bd.round_to(TABLE_DIGITS)),
        (
            TableSection::Rectangles,
            "DAB",
            c.ad.mul_exact(&c.ab),
            true_ad.mul_exact(&true_ab).round_to(product_digits),
        ),
        (
            TableSection::Rectangles,
            "CBD",
            c.bc.mul_exact(&c.bd),
            true_bc.mul_exact(&true_bd).round_to(product_digits),
        ),
        (
            TableSection::Squares,
            "BC^2",
            c.bc.square(),
            true_bc.square().round_to(product_digits),
        ),
        (
            TableSection::Squares,
            "ABD",
            c.ab.mul_exact(&c.bd),
            true_ab.mul_exact(&true_bd).round_to(product_digits),
        ),
        (
            TableSection::Squares,
            "BD^2",
            c.bd.square(),
            true_bd.square().round_to(product_digits),
        ),
        (
            TableSection::Squares,
            "ADBC",
            c.ad.mul_exact(&c.bc),
            true_ad.mul_exact(&true_bc).round_to(product_digits),
        ),
    ];

    let rows = entries
        .into_iter()
        .map(|(section, label, value, true_root_value)| {
            let grouped = value.format_grouped();
            let printed = if compare { printed_for(label) } else { None };
            let matches_printed = printed.map(|p| p == grouped);
            let annotation = match (printed, matches_printed) {
                (Some(p), Some(false)) => Some(describe_mismatch(p, &grouped)),
                _ => None,
            };
            TableRow {
                section,
                label,
                value,
                grouped,
                true_root_value,
                printed,
                matches_printed,
                annotation,
            }
        })
        .collect();
    Ok(ChordTable { rows })
}

impl ChordTable {
    pub fn row(&self, label: &str) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.label == label)
    }

    pub fn misprints(&self) -> impl Iterator<Item = &TableRow> {
        self.rows.iter().filter(|r| r.matches_printed == Some(false))
    }

    /// Plain-text layout: one block per section, values right-aligned in groups.
    pub fn render_text(&self) -> String {
        let width = self.rows.iter().map(|r| r.grouped.len()).max().unwrap_or(0);
        let mut out = String::new();
        let mut section = None;
        for row in &self.rows {
            if section != Some(row.section) {
                if section.is_some() {
                    out.push('\n');
                }
                let _ = writeln!(out, "{}", row.section.heading());
                section = Some(row.section);
            }
            let label = if row.label == "AD" { "Diameter AD" } else { row.label };
            let _ = write!(out, "  {label:<12}{:>width$}", row.grouped);
            match (&row.printed, row.matches_printed) {
                (Some(_), Some(true)) => out.push_str("   = printed"),
                (Some(p), Some(false)) => {
                    let _ = write!(
                        out,
                        "   printed {p}  [{}]",
                        row.annotation.as_deref().unwrap_or("misprint")
                    );
                }
                _ => {}
            }
            out.push('\n');
        }
        out
    }
}

/// `AF, AE, AD, AC` in decimal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProportionalsQuad {
    pub af: DecimalScalar,
    pub ae: DecimalScalar,
    pub ad: DecimalScalar,
    pub ac: DecimalScalar,
}

impl ProportionalsQuad {
    pub fn terms(&self) -> [&DecimalScalar; 4] {
        [&self.af, &self.ae, &self.ad, &self.ac]
    }
}

/// Exact planar construction on diameter `AC` with `A` at the origin and `C` on
/// the positive x axis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlanarConstruction {
    pub a: Point2,
    pub c: Point2,
    /// On the circle, reached along the ruler direction from `A`.
    pub d: Point2,
    /// Foot of the perpendicular from `D` on `AC`.
    pub e: Point2,
    /// Foot of the perpendicular from `E` on `AD`.
    pub f: Point2,
    /// `EF` produced to meet the circle on diameter `AD` again.
    pub g: Point2,
    /// `cos(DAC)`, the common ratio.
    pub ratio: Rational,
}

fn exact_length(p: &Point2, q: &Point2) -> Result<Rational> {
    p.distance_sq(q)
        .sqrt_exact()
        .ok_or_else(|| Error::Degenerate("construction left the rational field".into()))
}

fn check_arc_parameter(t: &Rational) -> Result<()> {
    if !t.is_positive() || *t >= Rational::one() {
        return Err(Error::Degenerate(format!(
            "arc parameter {t} must lie strictly between 0 (D at C) and 1 (D at A)"
        )));
    }
    Ok(())
}

/// Builds `D, E, F, G` for arc parameter `t = tan(DAC / 2)` in `(0, 1)`.
pub fn planar_construction(ac: &Rational, t: &Rational) -> Result<PlanarConstruction> {
    if !ac.is_positive() {
        return Err(Error::Domain(format!("diameter AC must be positive, got {ac}")));
    }
    check_arc_parameter(t)?;
    let a = Point2::origin();
    let c = Point2::new(ac.clone(), Rational::zero());
    let centre = a.midpoint(&c);
    let dir = unit_circle_point(t);
    // second intersection of the ray A + s*dir with the circle about `centre`
    let s = dir.dot(&(&centre - &a)) * Rational::from(2);
    let d = &a + &dir.scale(&s);
    let e = foot_on_line2(&d, &a, &c)?;
    let f = foot_on_line2(&e, &a, &d)?;
    let g = &f.scale(&Rational::from(2)) - &e;
    Ok(PlanarConstruction {
        ratio: dir.x.clone(),
        a,
        c,
        d,
        e,
        f,
        g,
    })
}

impl PlanarConstruction {
    /// Exact `[AF, AE, AD, AC]`.
    pub fn quad(&self) -> Result<[Rational; 4]> {
        Ok([
            exact_length(&self.a, &self.f)?,
            exact_length(&self.a, &self.e)?,
            exact_length(&self.a, &self.d)?,
            exact_length(&self.a, &self.c)?,
        ])
    }

    /// `G` and `E` are mirror images in `AD`: triangles `AFG, AFE` and `DFG, DFE`
    /// coincide side for side. Returns `(AG^2 - AE^2) + (DG^2 - DE^2)`, signed parts
    /// kept separate by squaring so a cancellation cannot hide an error.
    pub fn congruence_residual(&self) -> Rational {
        let ag = self.a.distance_sq(&self.g) - self.a.distance_sq(&self.e);
        let dg = self.d.distance_sq(&self.g) - self.d.distance_sq(&self.e);
        ag.square() + dg.square()
    }

    /// `G` lies on the circle with diameter `AD`.
    pub fn g_on_circle_ad(&self) -> bool {
        let m = self.a.midpoint(&self.d);
        self.g.distance_sq(&m) * Rational::from(4) == self.a.distance_sq(&self.d)
    }
}

/// Exact spatial construction: the circle on `AD` stands in the vertical plane
/// through `AD`, and `G` is where the vertical through `F` meets it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphereConstruction {
    pub a: Point3,
    pub c: Point3,
    pub d: Point3,
    pub e: Point3,
    pub f: Point3,
    pub g: Point3,
    /// Dot product of the normals of planes `ADC` and `AGD`.
    pub perpendicularity_residual: Rational,
    /// `FG` is perpendicular to the plane `ADC` (checked through `AD` and `FE`).
    pub fg_normal_to_base: bool,
}

pub fn sphere_construction(ac: &Rational, t: &Rational) -> Result<SphereConstruction> {
    let planar = planar_construction(ac, t)?;
    let (a, c, d, e, f) = (
        planar.a.lift(),
        planar.c.lift(),
        planar.d.lift(),
        planar.e.lift(),
        planar.f.lift(),
    );
    let half = Rational::new(1, 2).expect("non-zero");
    let centre = (&a + &d).scale(&half);
    let radius_sq = a.distance_sq(&d) * Rational::new(1, 4).expect("non-zero");
    let height_sq = radius_sq - f.distance_sq(&centre);
    let height = height_sq
        .sqrt_exact()
        .ok_or_else(|| Error::Degenerate("perpendicular from F left the rational field".into()))?;
    let g = &f + &Point3::new(Rational::zero(), Rational::zero(), height);

    let base_normal = (&d - &a).cross(&(&c - &a));
    let upright_normal = (&d - &a).cross(&(&g - &a));
    let perpendicularity_residual = base_normal.dot(&upright_normal);
    let fg_normal_to_base = check_4_11(&(&g - &f), &(&d - &a), &(&e - &f))?;
    Ok(SphereConstruction {
        a,
        c,
        d,
        e,
        f,
        g,
        perpendicularity_residual,
        fg_normal_to_base,
    })
}

impl SphereConstruction {
    /// Exact `[AF, AG, AD, AC]`.
    pub fn quad(&self) -> Result<[Rational; 4]> {
        let len = |p: &Point3, q: &Point3| {
            p.distance_sq(q)
                .sqrt_exact()
                .ok_or_else(|| Error::Degenerate("construction left the rational field".into()))
        };
        Ok([
            len(&self.a, &self.f)?,
            len(&self.a, &self.g)?,
            len(&self.a, &self.d)?,
            len(&self.a, &self.c)?,
        ])
    }
}

fn round_quad(q: [Rational; 4], digits: u32) -> ProportionalsQuad {
    let [af, ae, ad, ac] = q.map(|v| v.to_decimal(digits));
    ProportionalsQuad { af, ae, ad, ac }
}

/// Four continued proportionals in the circle on `ac`, for `D` at arc parameter
/// `t`. The decimal inputs are taken as exact rationals; the construction runs
/// exactly and only the reported lengths are rounded.
pub fn four_proportionals_planar(
    ac: &DecimalScalar,
    t: &DecimalScalar,
    ctx: &PrecisionContext,
) -> Result<ProportionalsQuad> {
    let construction = planar_construction(&ac.to_rational(), &t.to_rational())?;
    Ok(round_quad(construction.quad()?, ctx.output_digits()))
}

/// The same four proportionals with the mean `AE` carried to `AG` on the
/// perpendicular circle; fails if the two planes are not exactly perpendicular.
pub fn four_proportionals_sphere(
    ac: &DecimalScalar,
    t: &DecimalScalar,
    ctx: &PrecisionContext,
) -> Result<ProportionalsQuad> {
    let construction = sphere_construction(&ac.to_rational(), &t.to_rational())?;
    if !construction.perpendicularity_residual.is_zero() || !construction.fg_normal_to_base {
        return Err(Error::Precondition("planes ADC and AGD are not perpendicular".into()));
    }
    Ok(round_quad(construction.quad()?, ctx.output_digits()))
}

/// Arc parameter `t = sqrt((1 - k) / (1 + k))` for `cos(DAC) = k`, at work digits.
pub fn arc_parameter_for_ratio(k: &DecimalScalar, ctx: &PrecisionContext) -> Result<DecimalScalar> {
    let one = DecimalScalar::one();
    if !k.is_positive() || *k >= one {
        return Err(Error::Degenerate(format!(
            "ratio {k} must lie strictly between 0 and 1"
        )));
    }
    let w = ctx.work_digits();
    let q = (&one - k).div_rounded(&(&one + k), 2 * w + 2)?;
    sqrt_at(&q, w)
}

/// Adjacent identities `t[i] t[i+2] = t[i+1]^2` and, for four or more terms, the
/// extremes `t[0] t[n-1] = t[1] t[n-2]`, each to within `tol`.
pub fn verify_continued_proportion(terms: &[DecimalScalar], tol: &DecimalScalar) -> bool {
    if terms.len() < 3 {
        return false;
    }
    let within = |lhs: DecimalScalar, rhs: DecimalScalar| (lhs - rhs).abs() <= *tol;
    let adjacent = terms.windows(3).all(|w| within(w[0].mul_exact(&w[2]), w[1].square()));
    let n = terms.len();
    let extremes = n < 4 || within(terms[0].mul_exact(&terms[n - 1]), terms[1].mul_exact(&terms[n - 2]));
    adjacent && extremes
}

/// Exact version of [`verify_continued_proportion`].
pub fn is_continued_proportion(terms: &[Rational]) -> bool {
    if terms.len() < 3 {
        return false;
    }
    let n = terms.len();
    terms.windows(3).all(|w| &w[0] * &w[2] == w[1].square())
        && (n < 4 || &terms[0] * &terms[n - 1] == &terms[1] * &terms[n - 2])
}

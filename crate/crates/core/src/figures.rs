//! SVG drawings of the seven figures, computed from the solvers.
//!
//! Every coordinate goes through exact rational arithmetic and is printed at a
//! fixed number of decimals, so the same spec always yields the same bytes.
//! Solids are drawn in a fixed oblique projection `(x + 2y/5, z + 3y/10)`.

use std::fmt::Write as _;

use crate::delian::{two_means_compass, two_means_instrument, InstrumentState};
use crate::error::{Error, Result};
use crate::euclid::{unit_circle_point, Point2, Point3};
use crate::proportio::{solve_continued_chords, sphere_construction};
use crate::pyramid::RightPyramid;
use crate::scalar::{DecimalScalar, PrecisionContext, Rational};

const SCREEN_DIGITS: u32 = 3;
const WORLD_DIGITS: u32 = 10;
const ARC_STEPS: i64 = 24;

/// Inputs that shape a drawing. Unset fields take the figure's default.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FigureParams {
    pub edges: Option<[Rational; 3]>,
    pub diameter: Option<Rational>,
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    pub t: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureSpec {
    pub id: u8,
    pub params: FigureParams,
    pub width: u32,
    pub height: u32,
}

impl FigureSpec {
    pub fn new(id: u8) -> Self {
        Self {
            id,
            params: FigureParams::default(),
            width: 480,
            height: 360,
        }
    }

    pub fn with_params(mut self, params: FigureParams) -> Self {
        self.params = params;
        self
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("non-zero denominator")
}

fn int(n: i64) -> Rational {
    Rational::from(n)
}

fn project(p: &Point3) -> Point2 {
    Point2::new(&p.x + &(&p.y * &q(2, 5)), &p.z + &(&p.y * &q(3, 10)))
}

enum Shape {
    Line {
        from: Point2,
        to: Point2,
        class: &'static str,
        id: Option<String>,
    },
    Path {
        points: Vec<Point2>,
        class: &'static str,
    },
    Dot {
        at: Point2,
        radius: Rational,
    },
}

struct Label {
    name: String,
    at: Point2,
    world: Vec<DecimalScalar>,
}

/// Drawing in world coordinates, y up.
struct Sketch {
    title: String,
    shapes: Vec<Shape>,
    labels: Vec<Label>,
}

impl Sketch {
    fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            shapes: Vec::new(),
            labels: Vec::new(),
        }
    }

    fn line(&mut self, from: &Point2, to: &Point2, class: &'static str) {
        self.shapes.push(Shape::Line {
            from: from.clone(),
            to: to.clone(),
            class,
            id: None,
        });
    }

    fn named_line(&mut self, from: &Point2, to: &Point2, class: &'static str, id: &str) {
        self.shapes.push(Shape::Line {
            from: from.clone(),
            to: to.clone(),
            class,
            id: Some(id.into()),
        });
    }

    fn path(&mut self, points: Vec<Point2>, class: &'static str) {
        self.shapes.push(Shape::Path { points, class });
    }

    fn point(&mut self, name: &str, at: &Point2, world: Vec<DecimalScalar>) {
        self.labels.push(Label {
            name: name.into(),
            at: at.clone(),
            world,
        });
    }

    fn point2(&mut self, name: &str, p: &Point2) {
        let world = vec![p.x.to_decimal(WORLD_DIGITS), p.y.to_decimal(WORLD_DIGITS)];
        self.point(name, p, world);
    }

    fn point3(&mut self, name: &str, p: &Point3) {
        let world = [&p.x, &p.y, &p.z].map(|v| v.to_decimal(WORLD_DIGITS)).to_vec();
        self.point(name, &project(p), world);
    }

    fn extent(&self) -> Option<(Point2, Point2)> {
        let mut all: Vec<&Point2> = self.labels.iter().map(|l| &l.at).collect();
        for s in &self.shapes {
            match s {
                Shape::Line { from, to, .. } => all.extend([from, to]),
                Shape::Path { points, .. } => all.extend(points.iter()),
                Shape::Dot { at, .. } => all.push(at),
            }
        }
        let first = all.first()?;
        let (mut lo, mut hi) = ((*first).clone(), (*first).clone());
        for p in all {
            lo.x = lo.x.clone().min(p.x.clone());
            lo.y = lo.y.clone().min(p.y.clone());
            hi.x = hi.x.clone().max(p.x.clone());
            hi.y = hi.y.clone().max(p.y.clone());
        }
        Some((lo, hi))
    }

    fn to_svg(&self, width: u32, height: u32, id: u8) -> Result<String> {
        let (lo, hi) = self.extent().ok_or_else(|| Error::Degenerate("empty figure".into()))?;
        let margin = int(30);
        let (w, h) = (int(i64::from(width)), int(i64::from(height)));
        let span_x = &hi.x - &lo.x;
        let span_y = &hi.y - &lo.y;
        let fit = |avail: Rational, span: &Rational| -> Option<Rational> {
            if span.is_zero() {
                None
            } else {
                Some(avail / span.clone())
            }
        };
        let scale = match (
            fit(&w - &(&margin * &int(2)), &span_x),
            fit(&h - &(&margin * &int(2)), &span_y),
        ) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => return Err(Error::Degenerate("figure collapses to a point".into())),
        };
        // centre the drawing
        let off_x = (&w - &(&span_x * &scale)) * q(1, 2);
        let off_y = (&h - &(&span_y * &scale)) * q(1, 2);
        let sx = |p: &Point2| (&(&(&p.x - &lo.x) * &scale) + &off_x).to_decimal(SCREEN_DIGITS);
        let sy = |p: &Point2| (&h - &(&(&(&p.y - &lo.y) * &scale) + &off_y)).to_decimal(SCREEN_DIGITS);

        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        let _ = writeln!(out, "<title>{}</title>", self.title);
        let _ = writeln!(
            out,
            "<style>line, polyline {{ fill: none; stroke: black; stroke-width: 1; }} .hidden {{ stroke-dasharray: 4 3; stroke: #777; }} .main {{ stroke-width: 2; }} .aux {{ stroke: #555; }} text {{ font-family: serif; font-size: 14px; }}</style>"
        );
        let _ = writeln!(out, r#"<g id="figure-{id}">"#);
        for shape in &self.shapes {
            match shape {
                Shape::Line { from, to, class, id } => {
                    let id_attr = id.as_ref().map(|i| format!(r#" id="{i}""#)).unwrap_or_default();
                    let _ = writeln!(
                        out,
                        r#"<line{id_attr} class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                        sx(from),
                        sy(from),
                        sx(to),
                        sy(to)
                    );
                }
                Shape::Path { points, class } => {
                    let pts: Vec<String> = points.iter().map(|p| format!("{},{}", sx(p), sy(p))).collect();
                    let _ = writeln!(out, r#"<polyline class="{class}" points="{}"/>"#, pts.join(" "));
                }
                Shape::Dot { at, radius } => {
                    let r = (radius * &scale).to_decimal(SCREEN_DIGITS);
                    let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="{r}" fill="black"/>"#, sx(at), sy(at));
                }
            }
        }
        for label in &self.labels {
            let axes = ["x", "y", "z"];
            let world: String = label
                .world
                .iter()
                .zip(axes)
                .map(|(v, axis)| format!(r#" data-world-{axis}="{v}""#))
                .collect();
            let _ = writeln!(
                out,
                r#"<g class="point" id="pt-{}"{world}><circle cx="{}" cy="{}" r="2.5"/><text x="{}" y="{}">{}</text></g>"#,
                label.name,
                sx(&label.at),
                sy(&label.at),
                (&(&(&label.at.x - &lo.x) * &scale) + &(&off_x + &int(5))).to_decimal(SCREEN_DIGITS),
                (&h - &(&(&(&label.at.y - &lo.y) * &scale) + &(&off_y + &int(5)))).to_decimal(SCREEN_DIGITS),
                label.name
            );
        }
        out.push_str("</g>\n</svg>\n");
        Ok(out)
    }
}

/// Half circle above the x axis from `(left + diameter, 0)` to `(left, 0)`.
fn semicircle(left: &Rational, diameter: &Rational) -> Vec<Point2> {
    let r = diameter * &q(1, 2);
    let centre = Point2::new(left + &r, Rational::zero());
    let quarter: Vec<Point2> = (0..=ARC_STEPS).map(|i| unit_circle_point(&q(i, ARC_STEPS))).collect();
    let mut pts: Vec<Point2> = quarter.iter().map(|u| &centre + &u.scale(&r)).collect();
    pts.extend(
        quarter
            .iter()
            .rev()
            .skip(1)
            .map(|u| &centre + &Point2::new(-&u.x, u.y.clone()).scale(&r)),
    );
    pts
}

fn pyramid_figure(id: u8, edges: &[Rational; 3]) -> Result<Sketch> {
    let p = RightPyramid::new(edges[0].clone(), edges[1].clone(), edges[2].clone())?;
    let v = p.vertices();
    let mut s = Sketch::new(format!(
        "Figure {id}: right-angled pyramid ABCD in its box, diagonal AE"
    ));
    let box_edges: [(&Point3, &Point3); 12] = [
        (&v.d, &v.a),
        (&v.d, &v.c),
        (&v.d, &v.b),
        (&v.a, &v.f),
        (&v.c, &v.f),
        (&v.a, &v.g),
        (&v.b, &v.g),
        (&v.b, &v.e),
        (&v.c, &v.e),
        (&v.f, &v.h),
        (&v.g, &v.h),
        (&v.e, &v.h),
    ];
    for (i, (from, to)) in box_edges.iter().enumerate() {
        let class = if i < 3 { "aux" } else { "hidden" };
        s.line(&project(from), &project(to), class);
    }
    for (from, to) in [(&v.a, &v.b), (&v.b, &v.c), (&v.c, &v.a)] {
        s.line(&project(from), &project(to), "main");
    }
    s.named_line(&project(&v.a), &project(&v.e), "main", "diagonal-AE");
    for (name, pt) in [
        ("A", &v.a),
        ("B", &v.b),
        ("C", &v.c),
        ("D", &v.d),
        ("E", &v.e),
        ("F", &v.f),
        ("G", &v.g),
        ("H", &v.h),
    ] {
        s.point3(name, pt);
    }
    Ok(s)
}

fn chord_figure(diameter: &Rational) -> Result<Sketch> {
    let ctx = PrecisionContext::with_output(WORLD_DIGITS);
    let cfg = solve_continued_chords(&diameter.to_decimal(WORLD_DIGITS), &ctx)?;
    let (ad, ab, bc) = (cfg.ad.to_rational(), cfg.ab.to_rational(), cfg.bc.to_rational());
    let a = Point2::origin();
    let d = Point2::new(ad.clone(), Rational::zero());
    let b = Point2::new(ab.clone(), Rational::zero());
    let c = Point2::new(ab, bc);
    let mut s = Sketch::new("Figure 4: AB, BC, BD, DA in continued proportion");
    s.path(semicircle(&Rational::zero(), &ad), "main");
    s.line(&a, &d, "main");
    s.named_line(&b, &c, "main", "half-chord-BC");
    s.line(&a, &c, "aux");
    s.line(&c, &d, "aux");
    for (name, p) in [("A", &a), ("B", &b), ("C", &c), ("D", &d)] {
        s.point2(name, p);
    }
    Ok(s)
}

fn sphere_figure(ac: &Rational, t: &Rational) -> Result<Sketch> {
    let cons = sphere_construction(ac, t)?;
    let mut s = Sketch::new("Figure 5: four continued proportionals AF, AG, AD, AC in the sphere");
    let base: Vec<Point2> = semicircle(&Rational::zero(), ac)
        .iter()
        .map(|p| project(&Point3::new(p.x.clone(), p.y.clone(), Rational::zero())))
        .collect();
    s.path(base, "main");
    // circle on AD standing upright over AD
    let ad_dir = &cons.d - &cons.a;
    let ad_len = ad_dir
        .norm_sq()
        .sqrt_exact()
        .ok_or_else(|| Error::Degenerate("AD left the rational field".into()))?;
    let unit = ad_dir.scale(&ad_len.recip()?);
    let up = Point3::new(Rational::zero(), Rational::zero(), Rational::one());
    let upright: Vec<Point2> = semicircle(&Rational::zero(), &ad_len)
        .iter()
        .map(|p| project(&(&cons.a + &(&unit.scale(&p.x) + &up.scale(&p.y)))))
        .collect();
    s.path(upright, "aux");
    for (from, to, class) in [
        (&cons.a, &cons.c, "main"),
        (&cons.a, &cons.d, "main"),
        (&cons.d, &cons.e, "aux"),
        (&cons.e, &cons.f, "aux"),
        (&cons.f, &cons.g, "aux"),
        (&cons.a, &cons.g, "main"),
    ] {
        s.line(&project(from), &project(to), class);
    }
    for (name, p) in [
        ("A", &cons.a),
        ("C", &cons.c),
        ("D", &cons.d),
        ("E", &cons.e),
        ("F", &cons.f),
        ("G", &cons.g),
    ] {
        s.point3(name, p);
    }
    Ok(s)
}

fn solved_state(a: &Rational, b: &Rational, compass: bool) -> Result<InstrumentState> {
    let ctx = PrecisionContext::default();
    let (ad, bd) = (a.to_decimal(ctx.work_digits()), b.to_decimal(ctx.work_digits()));
    let res = if compass {
        two_means_compass(&ad, &bd, &ctx)?
    } else {
        two_means_instrument(&ad, &bd, &ctx)?
    };
    InstrumentState::at(a, b, &res.theta_param)
}

fn instrument_common(s: &mut Sketch, st: &InstrumentState) -> Point2 {
    let a = Point2::origin();
    let c = Point2::new(st.b.clone(), Rational::zero());
    s.path(semicircle(&Rational::zero(), &st.b), "main");
    s.line(&a, &c, "main");
    let z = st.ruler.scale(&(&st.b * &q(11, 10)));
    s.named_line(&a, &z, "main", "ruler-AZ");
    let f = st.cursor_mark();
    let y = &f + &(&st.e_foot - &f).scale(&q(6, 5));
    s.named_line(&f, &y, "main", "cursor-FY");
    s.line(&st.d_point, &st.e_foot, "aux");
    for (name, p) in [
        ("A", &a),
        ("C", &c),
        ("D", &st.d_point),
        ("E", &st.e_foot),
        ("F", &f),
        ("Z", &z),
        ("Y", &y),
    ] {
        s.point2(name, p);
    }
    c
}

fn instrument_figure(a: &Rational, b: &Rational) -> Result<Sketch> {
    let st = solved_state(a, b, false)?;
    let mut s = Sketch::new("Figure 6: two means by ruler, cursor and plumb line");
    instrument_common(&mut s, &st);
    let stylus = &st.d_point + &Point2::new(Rational::zero(), b * &q(1, 8));
    s.line(&st.d_point, &stylus, "main");
    let x = Point2::new(st.d_point.x.clone(), -(b * &q(1, 8)));
    s.line(&st.d_point, &x, "aux");
    s.shapes.push(Shape::Dot {
        at: x.clone(),
        radius: b * &q(1, 60),
    });
    s.point2("S", &stylus);
    s.point2("X", &x);
    Ok(s)
}

fn compass_figure(a: &Rational, b: &Rational) -> Result<Sketch> {
    let st = solved_state(a, b, true)?;
    let mut s = Sketch::new("Figure 7: two means with one aperture of the compass");
    let c = instrument_common(&mut s, &st);
    let o = Point2::new(b * &q(1, 2), Rational::zero());
    s.named_line(&o, &st.d_point, "aux", "compass-OD");
    let top = &st.d_point.y + &(b * &q(1, 5));
    let bottom = -(b * &q(1, 5));
    let rail = &c.x + &(b * &q(1, 10));
    let k = Point2::new(rail.clone(), top.clone());
    let l = Point2::new(rail, bottom.clone());
    let m = Point2::new(st.e_foot.x.clone(), bottom);
    let n = Point2::new(st.e_foot.x.clone(), top);
    s.line(&k, &l, "main");
    s.line(&l, &m, "hidden");
    s.named_line(&m, &n, "main", "square-MN");
    s.line(&n, &k, "hidden");
    for (name, p) in [("O", &o), ("K", &k), ("L", &l), ("M", &m), ("N", &n)] {
        s.point2(name, p);
    }
    Ok(s)
}

/// Renders figure `spec.id` (1 to 7) as an SVG 1.1 document.
pub fn render(spec: &FigureSpec) -> Result<String> {
    let p = &spec.params;
    let sketch = match spec.id {
        1..=3 => {
            let default = match spec.id {
                1 => [int(1), int(1), int(1)],
                2 => [int(1), int(2), int(1)],
                _ => [int(2), int(1), int(3)],
            };
            pyramid_figure(spec.id, p.edges.as_ref().unwrap_or(&default))?
        }
        4 => chord_figure(p.diameter.as_ref().unwrap_or(&int(2)))?,
        5 => sphere_figure(
            p.diameter.as_ref().or(p.b.as_ref()).unwrap_or(&int(2)),
            p.t.as_ref().unwrap_or(&q(1, 2)),
        )?,
        6 | 7 => {
            let a = p.a.clone().unwrap_or_else(|| int(1));
            let b = p.b.clone().or_else(|| p.diameter.clone()).unwrap_or_else(|| int(2));
            if spec.id == 6 {
                instrument_figure(&a, &b)?
            } else {
                compass_figure(&a, &b)?
            }
        }
        other => return Err(Error::Usage(format!("figure id must be 1 to 7, got {other}"))),
    };
    if spec.width == 0 || spec.height == 0 {
        return Err(Error::Usage("canvas must have positive width and height".into()));
    }
    sketch.to_svg(spec.width, spec.height, spec.id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_figure_renders_deterministically() {
        for id in 1..=7 {
            let spec = FigureSpec::new(id);
            let first = render(&spec).unwrap();
            assert_eq!(first, render(&spec).unwrap(), "figure {id}");
            assert!(first.starts_with("<?xml"));
            assert!(first.trim_end().ends_with("</svg>"));
            assert!(first.contains(r#"<text"#));
        }
    }

    #[test]
    fn cube_has_labelled_diagonal() {
        let svg = render(&FigureSpec::new(1)).unwrap();
        assert!(svg.contains(r#"id="diagonal-AE""#));
        assert!(svg.contains(r#"id="pt-A""#) && svg.contains(r#"id="pt-E""#));
    }

    #[test]
    fn chord_figure_places_b() {
        let svg = render(&FigureSpec::new(4)).unwrap();
        assert!(svg.contains(r#"id="pt-B" data-world-x="0.6353443923" data-world-y="0.0000000000""#));
        assert!(svg.contains(r#"id="pt-C" data-world-x="0.6353443923" data-world-y="0.9311424637""#));
    }

    #[test]
    fn instrument_figures_agree_on_e() {
        let six = render(&FigureSpec::new(6)).unwrap();
        let seven = render(&FigureSpec::new(7)).unwrap();
        let e_attr = |svg: &str| {
            let start = svg.find(r#"id="pt-E""#).unwrap();
            svg[start..start + 60].to_string()
        };
        assert_eq!(e_attr(&six), e_attr(&seven));
        assert!(e_attr(&six).contains("1.2599210499"));
        for name in ["O", "K", "L", "M", "N"] {
            assert!(seven.contains(&format!(r#"id="pt-{name}""#)));
        }
        assert!(six.contains(r#"id="pt-X""#));
    }

    #[test]
    fn bad_ids_are_usage_errors() {
        assert!(matches!(render(&FigureSpec::new(0)), Err(Error::Usage(_))));
        assert!(matches!(render(&FigureSpec::new(8)), Err(Error::Usage(_))));
        let mut spec = FigureSpec::new(1);
        spec.params.edges = Some([int(1), int(0), int(1)]);
        assert!(render(&spec).is_err());
    }
}

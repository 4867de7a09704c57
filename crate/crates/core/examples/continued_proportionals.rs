//! Four continued proportionals in a circle and in a sphere, exactly for a
//! rational position of D and in decimals for a 45 degree angle.

use proportionals::proportio::{
    arc_parameter_for_ratio, four_proportionals_planar, four_proportionals_sphere, is_continued_proportion,
    planar_construction, sphere_construction,
};
use proportionals::scalar::roots::sqrt_work;
use proportionals::{DecimalScalar, PrecisionContext, Rational};

fn main() -> proportionals::Result<()> {
    let ac = Rational::from(2);
    let t = Rational::new(1, 2)?;
    let circle = planar_construction(&ac, &t)?;
    let quad = circle.quad()?;
    println!(
        "circle, t = {t}: AF, AE, AD, AC = {}, {}, {}, {}",
        quad[0], quad[1], quad[2], quad[3]
    );
    println!(
        "  common ratio {}, continued: {}",
        circle.ratio,
        is_continued_proportion(&quad)
    );

    let sphere = sphere_construction(&ac, &t)?;
    let quad = sphere.quad()?;
    println!(
        "sphere: AF, AG, AD, AC = {}, {}, {}, {}",
        quad[0], quad[1], quad[2], quad[3]
    );
    println!(
        "  G = {}, normals of ADC and AGD dot to {}",
        sphere.g, sphere.perpendicularity_residual
    );

    let ctx = PrecisionContext::with_output(10);
    let cos45 = sqrt_work(&"0.5".parse()?, &ctx)?;
    let t45 = arc_parameter_for_ratio(&cos45, &ctx)?;
    let two = DecimalScalar::from_integer(2);
    let planar = four_proportionals_planar(&two, &t45, &ctx)?;
    let spherical = four_proportionals_sphere(&two, &t45, &ctx)?;
    println!("45 degrees: {} {} {} {}", planar.af, planar.ae, planar.ad, planar.ac);
    println!("  sphere gives the same quad: {}", planar == spherical);
    Ok(())
}

//! Two mean proportionals with both instruments, and the doubled cube.

use proportionals::delian::{duplicate_cube, two_means_compass, two_means_instrument, InstrumentState};
use proportionals::{DecimalScalar, PrecisionContext};

fn main() -> proportionals::Result<()> {
    let ctx = PrecisionContext::default();
    let (a, b) = (DecimalScalar::from_integer(1), DecimalScalar::from_integer(2));

    let plumb = two_means_instrument(&a, &b, &ctx)?;
    let compass = two_means_compass(&a, &b, &ctx)?;
    let (m1, m2) = plumb.rounded(&ctx);
    println!("between 1 and 2: m1 = {m1}, m2 = {m2}");
    println!(
        "  instrument settled after {} halvings, compass after {}",
        plumb.iterations, compass.iterations
    );
    println!("  same arc parameter: {}", plumb.theta_param == compass.theta_param);

    let state = InstrumentState::at(&a.to_rational(), &b.to_rational(), &plumb.theta_param)?;
    let digits = ctx.output_digits();
    println!(
        "  D = ({}, {})",
        state.d_point.x.to_decimal(digits),
        state.d_point.y.to_decimal(digits)
    );
    println!("  E on AC at {}", state.e_foot.x.to_decimal(digits));

    let edge = DecimalScalar::from_integer(3);
    let doubled = duplicate_cube(&edge, &ctx)?;
    println!(
        "cube of edge 3 doubled: new edge {}",
        doubled.round_to(ctx.output_digits())
    );
    println!("  new volume {}", doubled.pow(3).round_to(ctx.output_digits()));
    Ok(())
}

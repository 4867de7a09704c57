//! The box diagonal of a right-angled pyramid, its two-step derivation, and the
//! oblique generalisation.

use proportionals::pyramid::{
    circumsphere_diameter_sq, diagonal_sq, diagonal_trace, oblique_diagonal_sq, ObliqueVertexFrame, RightPyramid,
};
use proportionals::Rational;

fn main() -> proportionals::Result<()> {
    let p = RightPyramid::new(Rational::from(2), Rational::from(3), Rational::from(6))?;
    println!("edges 2, 3, 6: AE^2 = {}", diagonal_sq(&p));
    println!("  circumscribed sphere diameter^2 = {}", circumsphere_diameter_sq(&p));
    let trace = diagonal_trace(&p)?;
    println!("  AB^2 = {}, then AE^2 = AB^2 + BE^2 = {}", trace.ab_sq, trace.ae_sq);

    let half = Rational::new(1, 2)?;
    let frame = ObliqueVertexFrame::new(
        [Rational::from(1), Rational::from(1), Rational::from(1)],
        [half.clone(), half.clone(), half],
    )?;
    println!(
        "regular tetrahedron corner, unit edges: AE^2 = {}",
        oblique_diagonal_sq(&frame)?
    );

    let flat = ObliqueVertexFrame::new(
        [Rational::from(2), Rational::from(3), Rational::from(6)],
        [Rational::zero(), Rational::zero(), Rational::zero()],
    )?;
    println!(
        "zero cosines reduce to the right case: {}",
        oblique_diagonal_sq(&flat)? == diagonal_sq(&p)
    );
    Ok(())
}

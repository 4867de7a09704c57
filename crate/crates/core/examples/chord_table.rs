//! Solves the chord problem on a diameter of 2 and prints the ten-digit tables,
//! flagging rows whose historical printing disagrees with exact arithmetic.

use proportionals::proportio::{reproduce_table, solve_continued_chords};
use proportionals::{DecimalScalar, PrecisionContext};

fn main() -> proportionals::Result<()> {
    let ctx = PrecisionContext::with_output(10);
    let config = solve_continued_chords(&DecimalScalar::from_integer(2), &ctx)?;
    println!("AB = {}  BC = {}  BD = {}", config.ab, config.bc, config.bd);
    println!("unrounded AB = {}\n", config.root);

    let table = reproduce_table(&config)?;
    print!("{}", table.render_text());

    // the historical half-chord comes from the rounded AB, not from the true root
    let bc = table.row("BC").expect("BC row");
    println!(
        "\nBC from the rounded lines: {}, from the true root: {}",
        bc.value, bc.true_root_value
    );
    Ok(())
}

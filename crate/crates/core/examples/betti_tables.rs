// Graded Betti tables from Koszul homology, and the shift condition.

use liaison::betti::{graded_betti, is_cohen_macaulay, shift_data, DEFAULT_BETTI_CAP};
use liaison::{parse_ideal, Ring};

pub fn run_example() -> liaison::Result<()> {
    let r = Ring::grevlex(&["x", "y", "z", "w"])?;
    for (name, gens) in [
        ("six quadrics", "x^2, x*y, y^2, z^2, z*w, w^2"),
        ("twisted cubic", "x*z - y^2, x*w - y*z, y*w - z^2"),
        ("plane and line", "x*y, x*z"),
    ] {
        let i = parse_ideal(gens, &r)?;
        let t = graded_betti(&i, DEFAULT_BETTI_CAP)?;
        println!("{name}: {i}");
        print!("{t}");
        println!("CM: {}", is_cohen_macaulay(&i)?);
        if let Some(s) = shift_data(&i)? {
            println!(
                "g = {}, initial degree {}, max last shift {}: condition {}",
                s.codimension,
                s.initial_degree,
                s.max_last_shift,
                if s.holds() { "holds" } else { "fails" }
            );
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

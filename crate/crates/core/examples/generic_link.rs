// The literal first generic link over a ring with matrix variables.

use liaison::linkage::{direct_link, generic_link_literal, RegularSequence, DEFAULT_VARIABLE_CAP};
use liaison::{parse_ideal, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> liaison::Result<()> {
    let r = Ring::grevlex(&["x", "y", "z", "w"])?;
    let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r)?;
    let gl = generic_link_literal(&cubic, DEFAULT_VARIABLE_CAP)?;
    println!("generic link in {}:", gl.ideal.ring());
    println!("  {}", gl.ideal);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let p = r.characteristic();
    let values: Vec<Vec<u32>> = (0..2).map(|_| (0..3).map(|_| rng.gen_range(0..p)).collect()).collect();
    let (special, alpha) = gl.specialize(&values);
    let direct = direct_link(&cubic, &RegularSequence::new(&cubic, alpha)?, true)?;
    println!("specialized: {special}");
    println!("agrees with the direct link: {}", special.equals(&direct));

    let six = parse_ideal("x^2, x*y, y^2, z^2, z*w, w^2", &r)?;
    match generic_link_literal(&six, DEFAULT_VARIABLE_CAP) {
        Err(e) => println!("six quadrics: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

// Direct links: given and randomly drawn linking sequences.

use liaison::linkage::{direct_link, sample_ci_in_ideal, DegreePolicy, RegularSequence};
use liaison::{parse_ideal, parse_polynomial, Ideal, Ring};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> liaison::Result<()> {
    let r = Ring::grevlex(&["x", "y", "z", "w"])?;
    let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r)?;
    let alpha = RegularSequence::new(
        &cubic,
        vec![parse_polynomial("x*z - y^2", &r)?, parse_polynomial("y*w - z^2", &r)?],
    )?;
    let j = direct_link(&cubic, &alpha, true)?;
    println!("cubic ~ {j}");
    // the link is an involution
    assert!(alpha.ideal(&r).colon(&j)?.equals(&cubic));

    let i = parse_ideal("x^2, x*y, y^2, z^2, z*w, w^2", &r)?;
    let powers = ["x^2", "y^2", "z^2", "w^2"]
        .iter()
        .map(|t| parse_polynomial(t, &r))
        .collect::<liaison::Result<Vec<_>>>()?;
    let j = direct_link(&i, &RegularSequence::new(&i, powers)?, true)?;
    println!("six quadrics ~ {j}");
    println!("their sum is m^2: {}", i.sum(&j).equals(&Ideal::maximal_power(r.clone(), 2)));

    for seed in 0..3 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alpha = sample_ci_in_ideal(&cubic, DegreePolicy::Minimal, &mut rng, 40, seed)?;
        let j = direct_link(&cubic, &alpha, true)?;
        println!("seed {seed}: degrees {:?} -> {j}", alpha.degrees());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

// Link walks and the truncated sum of a linkage class.

use liaison::linkage::{integral_truncated, link_walk, LinkConfig, RegularSequence};
use liaison::{parse_ideal, parse_polynomial, Ideal, Ring};

pub fn run_example() -> liaison::Result<()> {
    let r = Ring::grevlex(&["x", "y", "z", "w"])?;
    let i = parse_ideal("x^2, x*y, y^2, z^2, z*w, w^2", &r)?;
    let cfg = LinkConfig::default();

    let walk = link_walk(&i, 2, 4, 42, &cfg, &[]);
    println!("{} chains reach {} distinct ideals", walk.chains.len(), walk.nodes.len());
    for n in &walk.nodes {
        println!("  depth {}: {}", n.depth, n.ideal);
    }

    let powers = ["x^2", "y^2", "z^2", "w^2"]
        .iter()
        .map(|t| parse_polynomial(t, &r))
        .collect::<liaison::Result<Vec<_>>>()?;
    let forced = [RegularSequence::new(&i, powers)?];
    let sum = integral_truncated(&i, 1, 3, 42, &cfg, &forced);
    println!("sum over links of length <= 1: {}", sum.ideal);
    assert!(sum.ideal.equals(&Ideal::maximal_power(r.clone(), 2)));

    let deeper = integral_truncated(&i, 2, 10, 42, &cfg, &[]);
    println!("depth 2: {} (stabilized: {})", deeper.ideal, deeper.stabilized);

    let line = parse_ideal("x", &r)?;
    let unit = integral_truncated(&line, 1, 1, 0, &cfg, &[]);
    println!("(x) is a complete intersection, its sum is {}", unit.ideal);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

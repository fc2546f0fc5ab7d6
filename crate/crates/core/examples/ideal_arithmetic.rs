// Sums, intersections, colons, saturation and Hilbert data.

use liaison::{parse_ideal, parse_polynomial, Ring};

pub fn run_example() -> liaison::Result<()> {
    let r = Ring::grevlex(&["x", "y", "z", "w"])?;
    let a = parse_ideal("x, y", &r)?;
    let b = parse_ideal("y, z", &r)?;
    let cap = a.intersect(&b);
    println!("(x,y) ∩ (y,z) = {cap}");
    assert!(cap.equals(&parse_ideal("y, x*z", &r)?));

    let i = parse_ideal("x*y, x*z", &r)?;
    let x = parse_ideal("x", &r)?;
    println!("(xy, xz) : (x) = {}", i.colon(&x)?);

    let ci = parse_ideal("x*z - y^2, y*w - z^2", &r)?;
    let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r)?;
    let link = ci.colon(&cubic)?;
    println!("(xz - y^2, yw - z^2) : cubic = {link}");

    let j = parse_ideal("x^2, x*y", &r)?;
    let sat = j.saturate(&parse_polynomial("y", &r)?)?;
    println!("(x^2, xy) saturated by y = {sat}");

    println!(
        "cubic: dim {}, codim {}, HF {:?}, numerator {:?}",
        cubic.dimension(),
        cubic.codimension(),
        (0..6).map(|d| cubic.hilbert_function(d)).collect::<Vec<_>>(),
        cubic.hilbert_numerator()
    );
    println!(
        "minimal generators of (x, x^2, y): {}",
        parse_ideal("x, x^2, y", &r)?.num_generators()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

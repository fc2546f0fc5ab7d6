// Joins, hypersurface sections, symbolic powers and polarization.

use liaison::constructions::{
    hypersurface_section, is_transversal, join, polarize, symbolic_power_monomial, Section,
};
use liaison::{parse_ideal, parse_polynomial, Ring};

pub fn run_example() -> liaison::Result<()> {
    let a = parse_ideal("x^2, x*y, x*z, y^2, y*z, z^2", &Ring::grevlex(&["x", "y", "z"])?)?;
    let b = parse_ideal("u*v, u*w, v*w", &Ring::grevlex(&["u", "v", "w"])?)?;
    let k = join(&a, &b)?;
    println!("join in {}: {k}, codim {}", k.ring(), k.codimension());

    let h = hypersurface_section(&a, &Section::FreshVariable("w".into()))?;
    println!("section by a new variable: {h} in {}", h.ring());

    let r = Ring::grevlex(&["x", "y"])?;
    let xy = parse_ideal("x*y", &r)?;
    match hypersurface_section(&xy, &Section::Element(parse_polynomial("x", &r)?)) {
        Err(e) => println!("(xy) cut by x: {e}"),
        Ok(_) => unreachable!("x is a zerodivisor modulo (xy)"),
    }

    let r3 = Ring::grevlex(&["x", "y", "z"])?;
    let p = parse_ideal("x*y, x*z, y*z", &r3)?;
    let s2 = symbolic_power_monomial(&p, 2)?;
    let xyz = parse_polynomial("x*y*z", &r3)?;
    println!("(xy,xz,yz)^(2) = {s2}; xyz in it: {}, in the square: {}", s2.contains(&xyz), p.power(2).contains(&xyz));

    let pol = polarize(&parse_ideal("x^2, x*y, y^2", &Ring::grevlex(&["x", "y"])?)?)?;
    println!("polarization: {} in {}", pol.ideal, pol.ideal.ring());
    println!("specializes back: {}", pol.specialize().equals(&parse_ideal("x^2, x*y, y^2", &Ring::grevlex(&["x", "y"])?)?));

    let r4 = Ring::grevlex(&["x", "y", "z"])?;
    println!(
        "(x,y) and (y,z) transversal: {}",
        is_transversal(&parse_ideal("x, y", &r4)?, &parse_ideal("y, z", &r4)?)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

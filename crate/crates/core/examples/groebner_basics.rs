// Reduced Gröbner bases, normal forms and elimination.

use liaison::groebner::eliminate;
use liaison::{groebner_basis, parse_ideal, parse_polynomial, MonomialOrder, Ring};

pub fn run_example() -> liaison::Result<()> {
    let r = Ring::grevlex(&["x", "y", "z", "w"])?;
    let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r)?;
    println!("twisted cubic, grevlex basis:");
    for g in cubic.gb().elements() {
        println!("  {}", g.to_string(&r));
    }
    let f = parse_polynomial("x*y - z^2", &r)?;
    let nf = cubic.normal_form(&f);
    println!("normal form of x*y - z^2: {}", nf.to_string(&r));
    assert!(!nf.is_zero());

    let lex = Ring::new(32003, &["x", "y", "z", "w"], MonomialOrder::Lex)?;
    let gens: Vec<_> = ["x*z - y^2", "x*w - y*z", "y*w - z^2"]
        .iter()
        .map(|t| parse_polynomial(t, &lex))
        .collect::<liaison::Result<_>>()?;
    let gb = groebner_basis(&gens, &lex);
    println!("lex basis has {} elements", gb.elements().len());

    // eliminate t from (t*x, t - 1): what is left is (x)
    let e = Ring::new(32003, &["t", "x"], MonomialOrder::Elimination(1))?;
    let gens = vec![parse_polynomial("t*x", &e)?, parse_polynomial("t - 1", &e)?];
    let (sub, kept) = eliminate(&gens, &e, 1);
    let kept: Vec<String> = kept.iter().map(|g| g.to_string(&sub)).collect();
    println!("eliminating t from (t*x, t - 1): {kept:?}");
    assert_eq!(kept, ["x"]);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

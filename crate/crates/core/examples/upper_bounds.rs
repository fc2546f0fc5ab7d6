// Certified upper bounds, maximality and separation of linkage classes.

use liaison::bound::{certified_upper_bound, separate_classes, Separation};
use liaison::constructions::join;
use liaison::linkage::{is_maximal_in_class_truncated, LinkConfig, MaximalityVerdict};
use liaison::{parse_ideal, Ring};

pub fn run_example() -> liaison::Result<()> {
    let r4 = Ring::grevlex(&["x", "y", "z", "w"])?;
    for gens in [
        "x^2, x*y, y^2, z^2, z*w, w^2",
        "x^2, x*y, x*z, y^2, y*z, z^2, w",
        "x*z - y^2, x*w - y*z, y*w - z^2",
    ] {
        let i = parse_ideal(gens, &r4)?;
        match certified_upper_bound(&i)? {
            Some(c) => print!("{c}"),
            None => println!("{i}: no rule applies"),
        }
    }

    let a = parse_ideal("x^2, x*y, x*z, y^2, y*z, z^2", &Ring::grevlex(&["x", "y", "z"])?)?;
    let b = parse_ideal("u*v, u*w, v*w", &Ring::grevlex(&["u", "v", "w"])?)?;
    let k = join(&a, &b)?;
    if let Some(c) = certified_upper_bound(&k)? {
        print!("{c}");
    }

    let cfg = LinkConfig::default();
    let rep = is_maximal_in_class_truncated(&a, 2, 10, 3, &cfg)?;
    println!("(x,y,z)^2 maximal: {}", matches!(rep.verdict, MaximalityVerdict::Proven(_)));
    let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r4)?;
    if let MaximalityVerdict::Refuted { node, witness } = is_maximal_in_class_truncated(&cubic, 1, 3, 3, &cfg)?.verdict {
        println!("twisted cubic is not maximal: {node} contains {}", witness.to_string(&r4));
    }

    let r5 = Ring::grevlex(&["x", "y", "z", "u", "v"])?;
    let k1 = parse_ideal("x^2, x*y, x*z, y^2, y*z, z^2, u", &r5)?;
    let k2 = parse_ideal("x^2, x*y, x*z, y^2, y*z, z^2, v", &r5)?;
    if let Separation::Separated { witness, certificate, .. } = separate_classes(&k1, &k2)? {
        println!("different classes: {} is not in {}", witness.to_string(&r5), certificate.bound);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

// Unitriangular substitutions commute with linking.

use liaison::constructions::{apply_substitution, Substitution};
use liaison::linkage::{direct_link, sample_ci_in_ideal, DegreePolicy, RegularSequence};
use liaison::{parse_ideal, Ring};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> liaison::Result<()> {
    let r = Ring::grevlex(&["x", "y", "z", "w"])?;
    let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let alpha = sample_ci_in_ideal(&cubic, DegreePolicy::Minimal, &mut rng, 40, 8)?;
    let j = direct_link(&cubic, &alpha, true)?;

    for seed in 0..3 {
        let g = Substitution::random_unitriangular(r.clone(), &mut ChaCha8Rng::seed_from_u64(seed));
        let gi = apply_substitution(&cubic, &g)?;
        let galpha = RegularSequence::new(&gi, alpha.elements().iter().map(|f| g.apply_polynomial(f)).collect())?;
        let lhs = direct_link(&gi, &galpha, true)?;
        let rhs = apply_substitution(&j, &g)?;
        println!("g = [{}]: link of gI equals g(link): {}", g.describe().join(", "), lhs.equals(&rhs));
        assert!(lhs.equals(&rhs));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

mod common;

use liaison::betti::{graded_betti, is_cohen_macaulay, DEFAULT_BETTI_CAP};
use liaison::constructions::{
    apply_substitution, hypersurface_section, is_transversal, join, polarize, symbolic_power_monomial, Section,
    Substitution,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{corpus, ideal, ring};

#[test]
fn join_hilbert_function_is_a_convolution() {
    let a = ideal(&ring(&["x", "y", "z"]), "x^2, x*y, x*z, y^2, y*z, z^2");
    let b = ideal(&ring(&["u", "v", "w"]), "u*v, u*w, v*w");
    let k = join(&a, &b).unwrap();
    assert_eq!(k.codimension(), a.codimension() + b.codimension());
    assert_eq!(k.num_generators(), 9);
    assert!(is_cohen_macaulay(&k).unwrap());
    for d in 0..8 {
        let expected: u64 = (0..=d).map(|e| a.hilbert_function(e) * b.hilbert_function(d - e)).sum();
        assert_eq!(k.hilbert_function(d), expected, "degree {d}");
    }
    let x = k.ring();
    let ka = ideal(x, "x^2, x*y, x*z, y^2, y*z, z^2");
    let kb = ideal(x, "u*v, u*w, v*w");
    assert!(is_transversal(&ka, &kb));
}

#[test]
fn sections_add_one_to_the_codimension_and_keep_cm() {
    for i in corpus() {
        if !i.is_proper() || i.is_zero() || !is_cohen_macaulay(&i).unwrap() {
            continue;
        }
        let s = hypersurface_section(&i, &Section::FreshVariable("t".into())).unwrap();
        assert_eq!(s.codimension(), i.codimension() + 1, "{i}");
        assert!(is_cohen_macaulay(&s).unwrap(), "{i}");
    }
}

#[test]
fn symbolic_powers_contain_ordinary_powers() {
    let r = ring(&["x", "y", "z", "w"]);
    for gens in ["x*y, x*z, y*z", "x*y, z*w", "x*y*z, x*y*w, x*z*w, y*z*w", "x*y, y*z, z*w, w*x", "x, y"] {
        let i = ideal(&r, gens);
        for t in 1..=3 {
            let s = symbolic_power_monomial(&i, t).unwrap();
            assert!(i.power(t).is_subideal(&s), "{i}^{t}");
            if i.is_complete_intersection() {
                assert!(s.equals(&i.power(t)));
            }
        }
    }
}

#[test]
fn polarizations_are_squarefree_and_specialize_back() {
    for i in corpus().into_iter().filter(|i| i.is_monomial() && i.is_proper()) {
        let p = polarize(&i).unwrap();
        assert!(p.ideal.generators().iter().all(|g| g.leading_monomial().unwrap().is_squarefree()));
        assert!(p.specialize().equals(&i), "{i}");
    }
}

#[test]
fn substitutions_preserve_betti_tables() {
    for (k, i) in corpus().into_iter().enumerate().filter(|(_, i)| i.is_proper()) {
        let mut rng = ChaCha8Rng::seed_from_u64(k as u64);
        let g = Substitution::random_unitriangular(i.ring().clone(), &mut rng);
        let gi = apply_substitution(&i, &g).unwrap();
        assert_eq!(gi.codimension(), i.codimension());
        assert_eq!(
            graded_betti(&gi, DEFAULT_BETTI_CAP).unwrap(),
            graded_betti(&i, DEFAULT_BETTI_CAP).unwrap(),
            "{i}"
        );
    }
}

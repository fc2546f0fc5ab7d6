mod common;

use liaison::betti::is_cohen_macaulay;
use liaison::bound::certified_upper_bound;
use liaison::linkage::{
    direct_link, integral_truncated, licci_search, link_walk, sample_ci_in_ideal, DegreePolicy, LinkConfig,
};
use liaison::Ideal;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{ideal, ring};

const CUBIC: &str = "x*z - y^2, x*w - y*z, y*w - z^2";
const EXAMPLE: &str = "x^2, x*y, y^2, z^2, z*w, w^2";

fn cm_inputs() -> Vec<Ideal> {
    let r4 = ring(&["x", "y", "z", "w"]);
    let r3 = ring(&["x", "y", "z"]);
    vec![
        ideal(&r4, CUBIC),
        ideal(&r4, EXAMPLE),
        ideal(&r4, "x^2, y^2, z*w"),
        ideal(&r3, "x*y, x*z, y*z"),
        ideal(&r3, "x^2, x*y, y^2, z^3"),
        ideal(&r3, "x^2 - y*z, y^2 - x*z, z^2 - x*y"),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_links_are_involutive_and_cm(seed in any::<u64>(), which in 0usize..6) {
        let i = &cm_inputs()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alpha = sample_ci_in_ideal(i, DegreePolicy::Minimal, &mut rng, 40, seed).unwrap();
        // a complete intersection linked by itself gives the unit ideal
        prop_assume!(!alpha.ideal(i.ring()).equals(i));
        let j = direct_link(i, &alpha, false).unwrap();
        let ci = alpha.ideal(i.ring());
        prop_assert!(ci.colon(&j).unwrap().equals(i));
        prop_assert_eq!(j.codimension(), i.codimension());
        prop_assert!(is_cohen_macaulay(&j).unwrap());
        // degree of the complete intersection splits between the two
        let deg = |k: &Ideal| {
            let n = k.hilbert_numerator();
            let mut q = n;
            for _ in 0..k.codimension() {
                let mut out = vec![0i64; q.len() - 1];
                let mut carry = 0;
                for (t, c) in q.iter().enumerate().take(q.len() - 1) {
                    carry += c;
                    out[t] = carry;
                }
                q = out;
            }
            q.iter().sum::<i64>()
        };
        prop_assert_eq!(deg(&ci), deg(i) + deg(&j));
    }
}

#[test]
fn sums_grow_with_depth_and_nested_walks_agree() {
    let r = ring(&["x", "y", "z", "w"]);
    let i = ideal(&r, EXAMPLE);
    let cfg = LinkConfig::default();
    let res = integral_truncated(&i, 3, 6, 17, &cfg, &[]);
    for w in res.per_depth.windows(2) {
        assert!(w[0].is_subideal(&w[1]));
    }
    // chain k of a deeper walk starts with chain k of a shallower one
    let short = link_walk(&i, 1, 6, 17, &cfg, &[]);
    for (a, b) in short.chains.iter().zip(&res.walk.chains) {
        assert_eq!(a.seed, b.seed);
        if let (Some(x), Some(y)) = (a.steps.first(), b.steps.first()) {
            assert!(x.ideal.equals(&y.ideal));
        }
    }
    assert!(res.per_depth[1].is_subideal(&res.ideal));
}

#[test]
fn walk_nodes_stay_inside_certified_bounds() {
    let r4 = ring(&["x", "y", "z", "w"]);
    let r3 = ring(&["x", "y", "z"]);
    let cfg = LinkConfig::default();
    for i in [
        ideal(&r4, EXAMPLE),
        ideal(&r3, "x^2, x*y, x*z, y^2, y*z, z^2"),
        ideal(&r4, "x^2, x*y, x*z, y^2, y*z, z^2, w"),
        ideal(&r4, "x^2, x*y, x*z, y^2, y*z, z^2"),
    ] {
        let cert = certified_upper_bound(&i).unwrap().unwrap();
        assert!(cert.is_proper());
        let walk = link_walk(&i, 2, 6, 5, &cfg, &[]);
        for n in &walk.nodes {
            assert!(n.ideal.is_subideal(&cert.bound), "{} escapes {}", n.ideal, cert.bound);
        }
        let cubic_draws = LinkConfig {
            policy: DegreePolicy::Uniform(3),
            ..cfg.clone()
        };
        let walk = link_walk(&i, 1, 3, 5, &cubic_draws, &[]);
        for n in &walk.nodes {
            assert!(n.ideal.is_subideal(&cert.bound), "{} escapes {}", n.ideal, cert.bound);
        }
    }
}

#[test]
fn walks_do_not_depend_on_thread_count() {
    let r = ring(&["x", "y", "z", "w"]);
    let i = ideal(&r, EXAMPLE);
    let cfg = LinkConfig::default();
    let keys = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            link_walk(&i, 2, 5, 99, &cfg, &[])
                .nodes
                .iter()
                .map(|n| n.key)
                .collect::<Vec<_>>()
        })
    };
    assert_eq!(keys(1), keys(3));
}

#[test]
fn square_of_the_maximal_ideal_finds_no_complete_intersection() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, "x^2, x*y, x*z, y^2, y*z, z^2");
    let s = licci_search(&i, 4, 30, 0, &LinkConfig::default());
    assert!(s.chain.is_none());
}

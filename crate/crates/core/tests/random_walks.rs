use grr_core::groups::{library, FiniteGroup, FreeGroup, Group, InfiniteDihedral};
use grr_core::randwalk::*;
use proptest::prelude::*;

fn small_groups() -> Vec<FiniteGroup> {
    vec![
        library::symmetric(3).unwrap(),
        library::quaternion(),
        library::dihedral(10).unwrap(),
        library::symmetric(4).unwrap(),
        library::dicyclic(12).unwrap(),
        library::abelian(&[4, 2]).unwrap(),
        library::exceptional_by_id("32,26").unwrap().model().unwrap(),
    ]
}

fn lazy(g: &FiniteGroup) -> StepMeasure<u32> {
    StepMeasure::lazy_uniform(g, &g.generators()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn convolution_powers_compose(k in 0usize..7, n in 0usize..=64, m in 0usize..=64) {
        let g = &small_groups()[k];
        let mu = lazy(g);
        let a = convolve(g, &exact_convolution(g, &mu, n), &exact_convolution(g, &mu, m));
        let b = exact_convolution(g, &mu, n + m);
        prop_assert!(a.iter().zip(&b).all(|(x, y)| (x - y).abs() < 1e-12));
        prop_assert!((b.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        prop_assert!(b.iter().all(|&x| x >= 0.0));
        prop_assert!((0..g.len() as u32).all(|x| (b[x as usize] - b[g.i(x) as usize]).abs() < 1e-12));
    }
}

/// Oracle values from a direct enumeration over pairs, independent of the
/// centralizer formula used by `exact_commute`.
#[test]
fn commute_oracle_matches_pair_enumeration() {
    for g in small_groups().iter().take(5) {
        let p = exact_convolution(g, &lazy(g), 5);
        let n = g.len() as u32;
        let mut direct = 0.0;
        for a in 0..n {
            for b in 0..n {
                if g.m(a, b) == g.m(b, a) {
                    direct += p[a as usize] * p[b as usize];
                }
            }
        }
        assert!((direct - exact_commute(g, &p)).abs() < 1e-12);
    }
}

#[test]
fn estimates_agree_with_exact_oracle() {
    let mut trials = 0;
    let mut misses = 0;
    for g in small_groups().iter().take(4) {
        let mu = lazy(g);
        let p = exact_convolution(g, &mu, 8);
        for seed in 0..5 {
            let e = estimate_commute_probability(g, &mu, 8, 20_000, seed);
            misses += !e.covers(exact_commute(g, &p)) as usize;
            let e = estimate_square_probability(g, &mu, &0, 8, 20_000, seed + 100);
            misses += !e.covers(exact_square(g, &p, 0)) as usize;
            trials += 2;
        }
    }
    // Each check fails with probability at most 0.01.
    assert!(misses <= 2, "{misses} of {trials} estimates missed the exact value");
}

#[test]
fn coset_and_sampler_are_consistent() {
    let g = library::symmetric(4).unwrap();
    let mu = lazy(&g);
    let h = g.subgroup(&[g.parse("(1,2,3)").unwrap(), g.parse("(1,2)(3,4)").unwrap()]);
    let a = g.parse("(1,2)").unwrap();
    let p = exact_convolution(&g, &mu, 6);
    let e = estimate_coset_probability(&g, &mu, &a, |x| h.contains(x), 6, 50_000, 3);
    assert!(e.covers(exact_coset(&g, &p, a, &h)));
    let walks = sample_walks(&g, &mu, 6, 1000, 9);
    let pairs = sample_pairs(&g, &mu, 6, 500, 9);
    assert_eq!(walks.len(), 1000);
    assert_eq!(pairs.len(), 500);
    assert_eq!(sample_walks(&g, &mu, 6, 1000, 9), walks);
}

#[test]
fn whole_group_coset_is_certain() {
    let f = FreeGroup::new(2).unwrap();
    let mu = StepMeasure::lazy_uniform(&f, &f.generators()).unwrap();
    let e = estimate_coset_probability(&f, &mu, &f.identity(), |_| true, 20, 1000, 0);
    assert_eq!(e.estimate, 1.0);
}

#[test]
fn free_group_squares_are_rare() {
    let f = FreeGroup::new(2).unwrap();
    let mu = StepMeasure::lazy_uniform(&f, &f.generators()).unwrap();
    let e = estimate_square_probability(&f, &mu, &f.identity(), 30, 20_000, 1);
    assert!(e.estimate <= e.radius);
    let a = f.gen(0);
    let powers = |x: &Vec<i8>| f.is_power_of(x, &a);
    let e = estimate_coset_probability(&f, &mu, &f.identity(), powers, 60, 20_000, 2);
    assert!(e.estimate < 0.05);
}

#[test]
fn involution_report_sides() {
    let e2 = library::elementary2(3).unwrap();
    let r = involution_threshold_report(&e2, &lazy(&e2), 10, 2000, 0);
    assert_eq!(r.estimate.estimate, 1.0);
    assert!(r.above_threshold && r.derived_bound > 0.0);
    let d = InfiniteDihedral;
    let mu = StepMeasure::lazy_uniform(&d, &d.generators()).unwrap();
    let r = involution_threshold_report(&d, &mu, 400, 20_000, 0);
    assert!(r.below_threshold);
    assert!((r.estimate.estimate - 0.5).abs() < 0.05);
}

#[test]
fn dicyclic_square_cover() {
    let g = library::dicyclic(12).unwrap();
    let w = grr_core::groups::structure::generalized_dicyclic_witness(&g).unwrap();
    let x2 = g.m(w.x, w.x);
    let r = coset_cover_check(&g, Some(&w.x), &[x2], &[], CoverScope::Full).unwrap();
    assert!(r.covers);
    assert_eq!(r.alpha, Some(0.0));
    assert_eq!(r.counting_bound, Some(true));
}

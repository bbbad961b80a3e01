//! Property suites for compounds, sign structure, primitivity, spectra and
//! classification.

mod common;

use common::*;
use genosc_core::primitivity::wielandt_exponent;
use genosc_core::spectra::greedy_match_deviation;
use genosc_core::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix_strategy(max_n: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(-1.0f64..1.0, n * n).prop_map(move |d| Matrix::new(n, d).unwrap())
    })
}

fn pair_strategy(max_n: usize) -> impl Strategy<Value = (Matrix, Matrix)> {
    (1..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(-1.0f64..1.0, n * n),
            prop::collection::vec(-1.0f64..1.0, n * n),
        )
            .prop_map(move |(a, b)| (Matrix::new(n, a).unwrap(), Matrix::new(n, b).unwrap()))
    })
}

fn decimal_matrix_strategy(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-100i32..=100, n * n).prop_map(move |d| {
        Matrix::new(n, d.into_iter().map(|x| f64::from(x) / 10.0).collect()).unwrap()
    })
}

fn pattern_strategy(n: usize) -> impl Strategy<Value = SignPattern> {
    prop::collection::vec(prop_oneof![Just(Sign::Neg), Just(Sign::Zero), Just(Sign::Pos)], n * n)
        .prop_map(move |s| SignPattern::from_signs(n, s).unwrap())
}

fn max_abs_diff(a: &Matrix, b: &Matrix) -> f64 {
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cauchy_binet((a, b) in pair_strategy(5)) {
        let ab = &a * &b;
        for j in 1..=a.n() {
            let lhs = compound(&ab, j).unwrap().matrix;
            let rhs = &compound(&a, j).unwrap().matrix * &compound(&b, j).unwrap().matrix;
            let scale = lhs.max_abs().max(1.0);
            prop_assert!(max_abs_diff(&lhs, &rhs) <= 1e-8 * scale, "order {}", j);
        }
    }

    #[test]
    fn sylvester_franke(a in matrix_strategy(5)) {
        let n = a.n();
        let det = reference_det(&a);
        for j in 1..=n {
            let c = compound(&a, j).unwrap().matrix;
            let got = reference_det(&c);
            let want = det.powi(binomial(n - 1, j - 1) as i32);
            let floor = 1e-10 * hadamard_bound(&c);
            prop_assert!((got - want).abs() <= 1e-6 * want.abs().max(floor), "order {}: {} vs {}", j, got, want);
        }
    }

    #[test]
    fn extreme_orders(a in matrix_strategy(6)) {
        let n = a.n();
        prop_assert_eq!(&compound(&a, 1).unwrap().matrix, &a);
        let top = compound(&a, n).unwrap().matrix;
        let det = reference_det(&a);
        prop_assert!((top[(0, 0)] - det).abs() <= 1e-10 * det.abs().max(1e-10 * hadamard_bound(&a)));
    }

    #[test]
    fn compound_commutes_with_transpose(a in matrix_strategy(5)) {
        for j in 1..=a.n() {
            let lhs = compound(&a.transpose(), j).unwrap().matrix;
            let rhs = compound(&a, j).unwrap().matrix.transpose();
            prop_assert!(max_abs_diff(&lhs, &rhs) <= 1e-12 * lhs.max_abs().max(1.0));
        }
    }

    #[test]
    fn rank_unrank_bijection(n in 1usize..=10, k_frac in 0.0f64..1.0, r_frac in 0.0f64..1.0) {
        let k = 1 + ((n - 1) as f64 * k_frac) as usize;
        let total = binomial(n, k);
        let r = ((total - 1) as f64 * r_frac) as usize;
        let s = CombIndex::unrank(n, k, r).unwrap();
        prop_assert!(s.indices().windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(s.rank(), r);
    }

    #[test]
    fn similarity_involution_and_complement(a in matrix_strategy(6), mask in 0u32..64) {
        let n = a.n();
        let j = JPartition::new(n, (1..=n).filter(|i| mask >> (i - 1) & 1 == 1)).unwrap();
        let b = apply_diag_similarity(&a, &j).unwrap();
        prop_assert_eq!(&apply_diag_similarity(&b, &j).unwrap(), &a);
        prop_assert_eq!(&apply_diag_similarity(&a, &j.flipped()).unwrap(), &b);
    }

    #[test]
    fn find_j_is_sound(a in decimal_matrix_strategy(4), zero_mask in 0u32..(1 << 16)) {
        // knock out some entries so both the strict and non-strict paths run
        let a = Matrix::from_fn(4, |i, k| if zero_mask >> (4 * i + k) & 1 == 1 && zero_mask % 3 == 0 { 0.0 } else { a[(i, k)] });
        let tau = 1e-9;
        let cutoff = tau * a.max_abs().max(f64::MIN_POSITIVE);
        let p = sign_pattern(&a, tau);
        if let Some(j) = find_j_strict(&p) {
            let b = apply_diag_similarity(&a, &j).unwrap();
            prop_assert!(b.as_slice().iter().all(|&x| x > cutoff));
            prop_assert!(is_jss_primitive(&a, tau).unwrap().verdict);
        }
        if let Some(j) = find_j(&p) {
            let b = apply_diag_similarity(&a, &j).unwrap();
            prop_assert!(b.as_slice().iter().all(|&x| x >= -cutoff));
            prop_assert!(!j.contains(1));
        }
    }

    #[test]
    fn find_j_complete_at_four(p in pattern_strategy(4)) {
        let valid = brute_force_j(&p);
        match find_j(&p) {
            Some(j) => {
                let flags: Vec<bool> = j.diag_signs().iter().map(|&s| s < 0).collect();
                prop_assert!(valid.contains(&flags));
            }
            None => prop_assert!(valid.is_empty()),
        }
    }

    #[test]
    fn witness_choice_does_not_change_primitivity(p in pattern_strategy(4)) {
        let valid = brute_force_j(&p);
        let Some(first) = valid.first() else { return Ok(()) };
        let n = p.n();
        let support = |flags: &Vec<bool>| {
            BoolMatrix::from_fn(n, |i, k| {
                let s = if flags[i] == flags[k] { 1 } else { -1 };
                match p.get(i, k) {
                    Sign::Pos => s > 0,
                    Sign::Neg => s < 0,
                    Sign::Zero => false,
                }
            })
        };
        let base = support(first);
        let verdict = is_primitive(&base);
        for f in &valid {
            let b = support(f);
            // every valid J yields the same nonnegative pattern
            prop_assert_eq!(&b, &base);
            prop_assert_eq!(is_primitive(&b), verdict);
        }
    }

    #[test]
    fn primitivity_matches_sequential_powers(n in 1usize..=6, density in 0.1f64..0.7, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_bool_matrix(n, density, &mut rng);
        prop_assert_eq!(is_primitive(&b), primitive_by_sequential_powers(&b));
        prop_assert_eq!(is_primitive(&b), primitive_by_cycle_gcd(&b));
        prop_assert_eq!(is_primitive(&b), bool_pow_reaches_all(&b, wielandt_exponent(n) + 3));
    }

    #[test]
    fn kronecker_oracle(a in matrix_strategy(5)) {
        let s = eigenvalues(&a, 1e-6).unwrap();
        for j in 1..=a.n() {
            let predicted = kronecker_products(&s, j).unwrap();
            let actual = eigenvalues(&compound(&a, j).unwrap().matrix, 1e-6).unwrap();
            let dev = greedy_match_deviation(&predicted, actual.eigenvalues()).unwrap();
            prop_assert!(dev <= 1e-5 * actual.spectral_radius().max(1e-12), "order {}: {}", j, dev);
        }
    }

    #[test]
    fn conjugate_closure_and_invariants(a in matrix_strategy(7)) {
        let s = eigenvalues(&a, 1e-6).unwrap();
        let ev = s.eigenvalues();
        prop_assert_eq!(ev.len(), a.n());
        for z in ev.iter().filter(|z| z.im != 0.0) {
            let partners = ev.iter().filter(|w| (**w - z.conj()).norm() <= 1e-9).count();
            prop_assert!(partners >= 1);
        }
        let trace: Complex64 = ev.iter().sum();
        prop_assert!((trace.re - a.trace()).abs() <= 1e-8 * a.frobenius_norm().max(1.0));
        prop_assert!(trace.im.abs() <= 1e-8 * a.frobenius_norm().max(1.0));
        let prod: Complex64 = ev.iter().product();
        let det = reference_det(&a);
        let floor = 1e-10 * hadamard_bound(&a);
        prop_assert!((prod.re - det).abs() <= 1e-6 * det.abs().max(floor), "{} vs {}", prod, det);
    }

    #[test]
    fn sorted_order_is_canonical(a in matrix_strategy(6)) {
        let s = eigenvalues(&a, 1e-6).unwrap();
        let ev = s.eigenvalues();
        for w in ev.windows(2) {
            prop_assert!(w[0].norm() >= w[1].norm() * (1.0 - 1e-6));
        }
        // reordering the input does not change the canonical order
        let mut shuffled = ev.to_vec();
        shuffled.reverse();
        let resorted = Spectrum::from_values(shuffled, 1e-6);
        prop_assert_eq!(resorted.eigenvalues(), ev);
    }

    #[test]
    fn scaling_preserves_label(a in decimal_matrix_strategy(3), c in prop_oneof![Just(0.5), Just(2.0), Just(3.7), Just(1e3)]) {
        let base = classify(&a, 1e-9, 1e-6).unwrap();
        let scaled = classify(&a.scaled(c), 1e-9, 1e-6).unwrap();
        prop_assert_eq!(base.label, scaled.label);
    }

    #[test]
    fn permutation_similarity_preserves_verdicts(a in decimal_matrix_strategy(4), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..4).collect();
        perm.shuffle(&mut rng);
        let pa = a.permuted(&perm).unwrap();
        let r1 = classify(&a, 1e-9, 1e-6).unwrap();
        let r2 = classify(&pa, 1e-9, 1e-6).unwrap();
        prop_assert_eq!(r1.label, r2.label);
        for shape in [SpectralShape::GoShape, SpectralShape::GeoShape, SpectralShape::GooShape] {
            prop_assert_eq!(
                verify(&r1.spectrum, shape, 1e-6).passed,
                verify(&r2.spectrum, shape, 1e-6).passed
            );
        }
    }
}

#[test]
fn go_matrices_satisfy_ratio_chain() {
    let opts = ClassifyOptions::default();
    let mut checked = 0;
    for n in [2, 3] {
        let found = search_examples_with_reports(n, Label::Go, 40_000, 11, &opts).unwrap();
        for (a, r) in found.iter().take(60) {
            assert!(r.spectrum_confirms_label());
            let chain = ratio_chain(a).unwrap();
            for (x, z) in chain.iter().zip(r.spectrum.eigenvalues()) {
                assert!((x - z.re).abs() <= 1e-5 * z.re, "{a:?}: {chain:?}");
            }
            checked += 1;
        }
    }
    assert!(checked >= 60);
}

#[test]
fn go_label_implies_both_partial_criteria() {
    let opts = ClassifyOptions::default();
    for (a, r) in search_examples_with_reports(3, Label::Go, 20_000, 5, &opts).unwrap() {
        let even = r.per_order.iter().filter(|o| o.order % 2 == 0).all(|o| o.jss_primitive);
        let odd = r.per_order.iter().filter(|o| o.order % 2 == 1).all(|o| o.jss_primitive);
        assert!(even && odd, "{a:?}");
        assert!(verify_geo(&r.spectrum, 1e-6).passed && verify_goo(&r.spectrum, 1e-6).passed);
    }
}

#[test]
fn exhaustive_bool_patterns_up_to_three() {
    for n in 1..=3usize {
        for code in 0..1u32 << (n * n) {
            let b = BoolMatrix::from_fn(n, |i, k| code >> (i * n + k) & 1 == 1);
            assert_eq!(is_primitive(&b), primitive_by_sequential_powers(&b), "{b:?}");
        }
    }
}

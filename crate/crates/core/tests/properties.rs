use confbessel_core::bessel::{build_j, build_j_neg, indicial};
use confbessel_core::conformable::{conformable_diff_numeric, DiffConfig};
use confbessel_core::verify::classical_oracle_j;
use confbessel_core::{Alpha, FracSeries};
use proptest::prelude::*;

fn alpha() -> impl Strategy<Value = Alpha> {
    (0.05f64..=1.0).prop_map(|v| Alpha::new(v).unwrap())
}

fn coeffs() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-10.0f64..10.0, 1..12)
}

proptest! {
    #[test]
    fn exact_diff_is_linear(al in alpha(), r in -2.0f64..2.0, a in coeffs(), b in coeffs(), k in -3.0f64..3.0) {
        let sa = FracSeries::new(al, r, a).unwrap();
        let sb = FracSeries::new(al, r, b).unwrap().scale(k);
        let lhs = sa.add(&sb).unwrap().conformable_diff();
        let rhs = sa.conformable_diff().add(&sb.conformable_diff()).unwrap();
        prop_assert_eq!(lhs.offset(), rhs.offset());
        let da = sa.conformable_diff();
        let db = sb.conformable_diff();
        for n in 0..lhs.len() {
            let (x, y) = (lhs.coeff(n), rhs.coeff(n));
            let size = da.coeff(n).abs() + db.coeff(n).abs();
            prop_assert!((x - y).abs() <= 4.0 * f64::EPSILON * size);
        }
    }

    #[test]
    fn shift_multiplies_by_power(al in alpha(), r in -1.0f64..1.0, c in coeffs(), m in 0u32..6, x in 0.1f64..5.0) {
        let s = FracSeries::new(al, r, c).unwrap();
        let shifted = s.shift(m as f64).eval_truncated(x, usize::MAX).unwrap().value;
        let direct = x.powf(m as f64 * al.value()) * s.eval_truncated(x, usize::MAX).unwrap().value;
        let scale: f64 = s.coeffs().iter().enumerate()
            .map(|(n, c)| (c * x.powf((n as f64 + r + m as f64) * al.value())).abs())
            .sum();
        prop_assert!((shifted - direct).abs() <= 1e-14 * scale.max(f64::MIN_POSITIVE));
    }

    #[test]
    fn tail_estimate_bounds_truncation(al in alpha(), x0 in 0.05f64..1.0, n in 3usize..20) {
        // keep x^α ≤ 2 so the J_0 terms decrease from the start
        let x = (2.0 * x0).powf(1.0 / al.value());
        let j0 = build_j(0.0, al, 60).unwrap();
        let n = 2 * n + 1; // end on a nonzero (even-index) coefficient
        let short = j0.eval_truncated(x, n).unwrap();
        let long = j0.eval_truncated(x, n + 5).unwrap();
        prop_assert!((long.value - short.value).abs() <= short.tail_estimate);
    }

    #[test]
    fn recurrence_identity(p in 0.0f64..6.0, al in alpha()) {
        let j = build_j(p, al, 60).unwrap();
        let p = j.offset();
        for k in 1..30 {
            let n = 2 * k;
            let lhs = j.coeff(n) * (n as f64) * (n as f64 + 2.0 * p);
            let prev = j.coeff(n - 2);
            prop_assert!((lhs + prev).abs() <= 1e-15 * prev.abs());
        }
        prop_assert!(j.coeffs().iter().skip(1).step_by(2).all(|&c| c == 0.0));
    }

    #[test]
    fn indicial_annihilates_roots(p in 0.0f64..8.0, al in alpha()) {
        let d = indicial(p, al).unwrap();
        prop_assert!(d.eval(d.roots.0).abs() <= 1e-12 * (1.0 + p * p));
        prop_assert!(d.eval(d.roots.1).abs() <= 1e-12 * (1.0 + p * p));
    }

    #[test]
    fn first_kind_depends_on_x_through_x_alpha(p in 0.0f64..4.0, al in alpha(), x in 0.2f64..3.0) {
        let scaled = build_j(p, al, 60).unwrap().eval(x).unwrap().value;
        let classical = build_j(p, Alpha::one(), 60).unwrap().eval(x.powf(al.value())).unwrap().value;
        prop_assert!((scaled - classical).abs() <= 1e-12 * scaled.abs().max(1e-300) + 1e-300);
    }

    #[test]
    fn negative_order_odd_coeffs_vanish(p in 0.05f64..4.0, al in alpha()) {
        prop_assume!((p - p.round()).abs() > 1e-6);
        let j = build_j_neg(p, al, 40).unwrap();
        prop_assert!(j.coeffs().iter().skip(1).step_by(2).all(|&c| c == 0.0));
    }

    #[test]
    fn numeric_operator_is_linear(al in alpha(), x in 0.5f64..4.0, ka in -2.0f64..2.0, kb in -2.0f64..2.0) {
        let cfg = DiffConfig::first(al);
        let a = al.value();
        let f = |u: f64| u.powf(a).sin();
        let g = |u: f64| u.powf(2.0 * a) + 1.0;
        let both = conformable_diff_numeric(|u| ka * f(u) + kb * g(u), x, &cfg).unwrap();
        let split = ka * conformable_diff_numeric(f, x, &cfg).unwrap()
            + kb * conformable_diff_numeric(g, x, &cfg).unwrap();
        prop_assert!((both - split).abs() <= 1e-7);
    }
}

#[test]
fn oracle_matches_series_on_zero_to_eight() {
    let j0 = build_j(0.0, Alpha::one(), 60).unwrap();
    for i in 0..=160 {
        let z = i as f64 * 0.05;
        let series = if z == 0.0 { 1.0 } else { j0.eval(z).unwrap().value };
        let oracle = classical_oracle_j(0, z);
        assert!((series - oracle).abs() <= 1e-11, "z={z}: {series} vs {oracle}");
    }
}

#[test]
fn product_rule_spot_check() {
    // T(fg) = f T(g) + g T(f) with f = x^α, g = x^{2α}
    let al = Alpha::new(0.6).unwrap();
    let a = al.value();
    let cfg = DiffConfig::first(al);
    let f = |u: f64| u.powf(a);
    let g = |u: f64| u.powf(2.0 * a);
    for x in [0.5, 1.0, 2.0] {
        let lhs = conformable_diff_numeric(|u| f(u) * g(u), x, &cfg).unwrap();
        let rhs = f(x) * conformable_diff_numeric(g, x, &cfg).unwrap()
            + g(x) * conformable_diff_numeric(f, x, &cfg).unwrap();
        assert!((lhs - rhs).abs() <= 1e-5, "x={x}");
    }
}

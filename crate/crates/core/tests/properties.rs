use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use zerobound_core::bounds::{
    c_doubling, c_main, h_alpha, r1, r2, r_total, s_total, trivial_zero_window,
};
use zerobound_core::gamma::{v_star, vj_bound, w1_bound, w_pair_bound};
use zerobound_core::lemmas::{aux1_check, aux2_check, l2real_check, log1p_check, log_linear_check};
use zerobound_core::strip::tail_sum;
use zerobound_core::{
    check_admissible, main_term, min_admissible_t0, select_strip, GammaFactor, LFunctionData,
    ZeroList,
};

/// The `alpha = 0` choice is made at `T0`, but `R2(T)` keeps the larger of the
/// two branches at every `T`. When the `alpha = 1` value of `h1` exceeds the
/// `alpha = 0` value, that branch overtakes `h1 + h2/(T - 2R)` for large `T`.
fn branches_cross(data: &LFunctionData, t0: f64) -> bool {
    let strip = select_strip(1.0).unwrap();
    let chosen = h_alpha(data, &strip, t0).unwrap();
    let other = h_alpha(data, &strip, 1e300).unwrap();
    chosen.alpha == 0 && other.alpha == 1
}

fn datum() -> impl Strategy<Value = LFunctionData> {
    let factor = (0.25f64..4.0, 0.0f64..20.0, -20.0f64..20.0)
        .prop_map(|(l, re, im)| GammaFactor::new(l, Complex64::new(re, im)).unwrap());
    (
        prop::collection::vec(factor, 1..4),
        0.05f64..50.0,
        0.0f64..(2.0 * PI),
        0u32..4,
    )
        .prop_filter_map("degree below 1", |(factors, q, theta, k)| {
            LFunctionData::new(factors, q, Complex64::from_polar(1.0, theta), k, 1.0).ok()
        })
}

proptest! {
    #[test]
    fn tail_sum_decreases(x in 1.05f64..40.0, dx in 0.01f64..5.0) {
        prop_assert!(tail_sum(x + dx, 1.0).unwrap() < tail_sum(x, 1.0).unwrap());
    }

    #[test]
    fn tail_sum_is_linear_in_a1(x in 1.5f64..20.0, a1 in 1.0f64..100.0) {
        let one = tail_sum(x, 1.0).unwrap();
        prop_assert!((tail_sum(x, a1).unwrap() - a1 * one).abs() <= 1e-12 * a1 * one.max(1.0));
    }

    #[test]
    fn selected_strip_is_extremal(a1 in 1.0f64..500.0) {
        let s = select_strip(a1).unwrap();
        prop_assert!(tail_sum(s.a(), a1).unwrap() < 0.5);
        prop_assert!(tail_sum(-s.b() - 1.0, a1).unwrap() < 1.0);
        if s.a() > 3.0 {
            prop_assert!(tail_sum(s.a() - 1.0, a1).unwrap() >= 0.5);
        }
        if s.b() < -4.0 {
            prop_assert!(tail_sum(-s.b() - 2.0, a1).unwrap() >= 1.0);
        }
    }

    #[test]
    fn minimum_height_is_admissible(data in datum()) {
        let strip = select_strip(1.0).unwrap();
        let adm = min_admissible_t0(&data, &strip);
        prop_assert!(check_admissible(&data, &strip, adm.t0_min).is_ok());
        prop_assert!(check_admissible(&data, &strip, adm.t0_min - 1e-6).is_err());
        prop_assert!(!adm.strict_adjusted);
    }

    #[test]
    fn bounds_scale_as_inverse_height(data in datum(), sigma in -20.0f64..20.0, f in 1.0f64..50.0) {
        let t = data.height_threshold().max(1.0) * f;
        for j in 0..data.len() {
            let v1 = vj_bound(&data, j, sigma, t).unwrap();
            let v2 = vj_bound(&data, j, sigma, 2.0 * t).unwrap();
            prop_assert!(v1 >= 0.0 && (v1 - 2.0 * v2).abs() <= 1e-12 * v1);
            let w1 = w_pair_bound(&data, j, sigma, t).unwrap();
            let w2 = w_pair_bound(&data, j, sigma, 2.0 * t).unwrap();
            prop_assert!(w1 >= 0.0 && (w1 - 2.0 * w2).abs() <= 1e-12 * w1);
        }
    }

    #[test]
    fn v_star_times_gap_is_constant(data in datum(), t in 15.0f64..1e5) {
        let strip = select_strip(1.0).unwrap();
        let base = v_star(&data, &strip, 15.0).unwrap();
        let v = v_star(&data, &strip, t).unwrap() * (t - 14.0);
        prop_assert!(base >= 0.0 && (v - base).abs() <= 1e-12 * base);
    }

    #[test]
    fn w1_bound_is_at_least_the_real_axis_value(r in 0.01f64..1e4, theta in -3.1f64..3.1) {
        let w = w1_bound(Complex64::from_polar(r, theta)).unwrap();
        prop_assert!(w >= 1.0 / (12.0 * r) * (1.0 - 1e-12));
    }

    #[test]
    fn r_total_positive_and_increasing(data in datum(), f in 1.001f64..100.0) {
        let strip = select_strip(1.0).unwrap();
        let t0 = min_admissible_t0(&data, &strip).t0_min;
        let t = t0 * f;
        let r = r_total(&data, &strip, t0, t).unwrap();
        prop_assert!(r > 0.0);
        prop_assert!(r1(&data, &strip, t0, t).unwrap() >= r1(&data, &strip, t0, t0).unwrap());
        prop_assert!(s_total(&data, &strip, t0, t).unwrap() >= 0.0);
        prop_assert!(trivial_zero_window(&data, &strip) >= 0.0);
    }

    #[test]
    fn main_coefficients_dominate(data in datum(), f in 1.001f64..1e3) {
        let strip = select_strip(1.0).unwrap();
        let t0 = min_admissible_t0(&data, &strip).t0_min;
        prop_assume!(!branches_cross(&data, t0));
        let t = t0 * f;
        let c = c_main(&data, &strip, t0).unwrap();
        let r = r_total(&data, &strip, t0, t).unwrap();
        prop_assert!(c.at(t) >= r * (1.0 - 1e-9), "{} < {}", c.at(t), r);
        let d = c_doubling(&data, &strip, t0).unwrap();
        prop_assert!(d.c1 > 0.0 && d.c3 > 0.0);
    }

    #[test]
    fn main_term_increases(data in datum(), t in 1.0f64..1e6) {
        let start = std::f64::consts::E * (1.0f64).max(data.lambda_q2().recip());
        let t = start + t;
        prop_assert!(main_term(&data, t * 1.01).unwrap() > main_term(&data, t).unwrap());
    }

    #[test]
    fn logarithm_inequalities(r in 1e-9f64..0.4999, theta in 0.0f64..(2.0 * PI), z in -1e8f64..1e8) {
        prop_assert!(log1p_check(Complex64::from_polar(r, theta)).unwrap().holds);
        prop_assume!(z != 0.0);
        prop_assert!(log_linear_check(z).unwrap().holds);
    }

    #[test]
    fn real_part_inequalities(data in datum(), s in 1.0f64..200.0, t in 1.0f64..1e5) {
        prop_assert!(aux2_check(&data, s, t).unwrap().holds);
        prop_assert!(aux2_check(&data, -s, t).unwrap().holds);
        prop_assert!(aux1_check(&data, -3.0 - s, t).unwrap().holds);
        prop_assert!(l2real_check(&data, t).unwrap().holds);
    }

    #[test]
    fn count_window_is_additive(
        mut zs in prop::collection::vec(0.1f64..500.0, 0..300),
        a in 0.0f64..500.0, b in 0.0f64..500.0, c in 0.0f64..500.0,
    ) {
        let mut cuts = [a, b, c];
        cuts.sort_by(f64::total_cmp);
        prop_assume!(cuts[0] < cuts[1] && cuts[1] < cuts[2]);
        // Put some ordinates exactly on the cut points.
        zs.extend_from_slice(&cuts[1..]);
        let list = ZeroList::new(zs.clone(), "p").unwrap();
        let left = list.count_window(cuts[0], cuts[1]).unwrap();
        let right = list.count_window(cuts[1], cuts[2]).unwrap();
        prop_assert_eq!(left + right, list.count_window(cuts[0], cuts[2]).unwrap());
        let naive = zs.iter().filter(|&&g| cuts[0] < g && g <= cuts[2]).count();
        prop_assert_eq!(naive, list.count_window(cuts[0], cuts[2]).unwrap());
    }
}

/// Regression record of the dominance gap: two factors with large `Im(mu)`.
#[test]
fn dominance_gap_when_branches_cross() {
    let factors = vec![
        GammaFactor::new(0.9942268182663225, Complex64::new(0.0, 18.368054363175393)).unwrap(),
        GammaFactor::new(0.8393878924151238, Complex64::new(0.0, 17.850683772178666)).unwrap(),
    ];
    let one = Complex64::new(1.0, 0.0);
    let data = LFunctionData::new(factors, 19.787602719749344, one, 0, 1.0).unwrap();
    let strip = select_strip(1.0).unwrap();
    let t0 = min_admissible_t0(&data, &strip).t0_min;
    assert!(branches_cross(&data, t0));
    let chosen = h_alpha(&data, &strip, t0).unwrap();
    let c = c_main(&data, &strip, t0).unwrap();
    // Dominance holds near T0 and fails far out.
    let near = 2.0 * t0;
    assert!(c.at(near) >= r_total(&data, &strip, t0, near).unwrap());
    let far = 790.0 * t0;
    let deficit = r_total(&data, &strip, t0, far).unwrap() - c.at(far);
    assert!(deficit > 200.0, "{deficit}");
    // The deficit is the branch excess carried through (R - 1/2) R2(T).
    let alt = h_alpha(&data, &strip, 1e300).unwrap().h1;
    let excess = alt - chosen.h1 - chosen.h2 / (far - 14.0);
    let predicted = 6.5 * excess / std::f64::consts::LN_2;
    assert!(
        (deficit - predicted).abs() < 0.05 * predicted,
        "{deficit} vs {predicted}"
    );
    assert!(r2(&data, &strip, far).is_ok());
}

use orthoasym_core::numerics::{
    arccos_principal, log_gamma, sqrt_cut, ApComplex, ApReal, Precision, SignedLog,
};
use proptest::prelude::*;

fn p() -> Precision {
    Precision::new(160).unwrap()
}

fn c(re: f64, im: f64) -> ApComplex {
    ApComplex::from_f64(re, im, p()).unwrap()
}

fn close(a: &ApComplex, b: &ApComplex, log2_tol: i64) -> bool {
    let tol = ApReal::one(p()).mul_pow2(log2_tol);
    (a - b).abs() <= &tol * &b.abs().max_ref(&ApReal::one(p())).clone()
}

#[test]
fn cut_limits_differ_by_sign() {
    let eps = 1e-30;
    let above = sqrt_cut(&c(0.5, eps)).unwrap();
    let below = sqrt_cut(&c(0.5, -eps)).unwrap();
    let expect = (0.75f64).sqrt();
    let (ar, ai) = above.to_f64_pair();
    let (br, bi) = below.to_f64_pair();
    assert!(ar.abs() < 1e-20 && br.abs() < 1e-20);
    assert!((ai - expect).abs() < 1e-15 && (bi + expect).abs() < 1e-15);
    assert!(sqrt_cut(&c(0.5, 0.0)).is_err());
}

#[test]
fn arccos_limits_straddle_the_real_axis() {
    let eps = 1e-30;
    let up = arccos_principal(&c(0.5, eps)).to_f64_pair();
    let down = arccos_principal(&c(0.5, -eps)).to_f64_pair();
    let third = std::f64::consts::FRAC_PI_3;
    assert!((up.0 - third).abs() < 1e-15 && (down.0 - third).abs() < 1e-15);
    assert!(up.1 < 0.0 && down.1 > 0.0);
    // outside [-1, 1] the real-axis value is the upper-side limit
    let on = arccos_principal(&c(2.0, 0.0)).to_f64_pair();
    let near = arccos_principal(&c(2.0, eps)).to_f64_pair();
    assert!((on.0 - near.0).abs() < 1e-15 && (on.1 - near.1).abs() < 1e-15);
}

#[test]
fn log_gamma_small_integers() {
    let mut fact = 1.0f64;
    for k in 1..20u64 {
        let lg = log_gamma(&ApReal::from_u64(k + 1, p())).unwrap().to_f64();
        fact *= k as f64;
        assert!((lg - fact.ln()).abs() < 1e-12, "k={k}");
    }
}

prop_compose! {
    fn off_cut()(re in -6.0f64..6.0, im in -6.0f64..6.0) -> ApComplex {
        let im = if im.abs() < 1e-3 { im + 0.5 } else { im };
        c(re, im)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sqrt_cut_squares_to_x2_minus_1(x in off_cut()) {
        let s = sqrt_cut(&x).unwrap();
        let rhs = &(&x * &x) - &ApComplex::one(p());
        prop_assert!(close(&(&s * &s), &rhs, -150));
    }

    #[test]
    fn sqrt_cut_is_odd(x in off_cut()) {
        let a = sqrt_cut(&x).unwrap();
        let b = sqrt_cut(&-x.clone()).unwrap();
        prop_assert!(close(&a, &-b, -150));
    }

    #[test]
    fn cos_inverts_arccos(x in off_cut()) {
        let th = arccos_principal(&x);
        let (re, _) = th.to_f64_pair();
        prop_assert!((0.0..=std::f64::consts::PI).contains(&re));
        prop_assert!(close(&th.cos().unwrap(), &x, -140));
    }

    #[test]
    fn log_gamma_recurrence(z in 0.05f64..40.0) {
        let zr = ApReal::from_f64(z, p()).unwrap();
        let lhs = log_gamma(&(&zr + &ApReal::one(p()))).unwrap();
        let ln_z = ApComplex::from_real(zr.clone()).ln().unwrap().re;
        let rhs = &log_gamma(&zr).unwrap() + &ln_z;
        let tol = ApReal::one(p()).mul_pow2(-140);
        prop_assert!((&lhs - &rhs).abs() <= tol);
    }

    #[test]
    fn signed_log_product_is_associative(
        a in -1e6f64..1e6, b in -1e3f64..1e3, cr in -5.0f64..5.0, ci in 0.1f64..5.0,
    ) {
        prop_assume!(a != 0.0 && b != 0.0);
        let x = SignedLog::from_real(&ApReal::from_f64(a, p()).unwrap()).unwrap();
        let y = SignedLog::from_real(&ApReal::from_f64(b, p()).unwrap()).unwrap();
        let z = SignedLog::from_complex(&c(cr, ci)).unwrap();
        let left = &(&x * &y) * &z;
        let right = &x * &(&y * &z);
        let direct = &(&c(a, 0.0) * &c(b, 0.0)) * &c(cr, ci);
        prop_assert!(close(&left.to_complex().unwrap(), &right.to_complex().unwrap(), -140));
        prop_assert!(close(&left.to_complex().unwrap(), &direct, -140));
    }
}

use proptest::prelude::*;
use superchord::scalars::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn ser(c: &[(i64, i64)], order: usize) -> HSeries<Rational> {
    HSeries::from_coeffs(order, c.iter().map(|&(n, d)| q(n, d)).collect())
}

#[test]
fn series_examples() {
    let a = ser(&[(1, 1), (1, 1)], 2);
    let b = ser(&[(1, 1), (-1, 1)], 2);
    assert_eq!(series_arith(&a, &b, SeriesOp::Add).unwrap(), ser(&[(2, 1)], 2));
    assert_eq!(series_arith(&a, &b, SeriesOp::Mul).unwrap(), ser(&[(1, 1), (0, 1), (-1, 1)], 2));
    let c = ser(&[(1, 1), (1, 1)], 1);
    assert_eq!(c.mul(&c).unwrap(), ser(&[(1, 1), (2, 1)], 1));
    assert!(a.add(&c).is_err());
}

#[test]
fn exp_examples() {
    assert_eq!(series_exp(&HSeries::<Rational>::zero(3)).unwrap(), HSeries::one(3));
    let h = HSeries::monomial(3, 1, Rational::one());
    assert_eq!(series_exp(&h).unwrap(), ser(&[(1, 1), (1, 1), (1, 2), (1, 6)], 3));
    let h4 = HSeries::monomial(4, 1, Rational::one());
    let prod = series_exp(&h4).unwrap().mul(&series_exp(&h4.neg()).unwrap()).unwrap();
    assert_eq!(prod, HSeries::one(4));
    assert!(series_exp(&HSeries::constant(2, Rational::one())).is_err());
}

#[test]
fn rational_is_reduced() {
    let x = q(6, -4);
    assert_eq!(x.to_string(), "-3/2");
    assert_eq!(x.numer().to_string(), "-3");
    assert_eq!(x.denom().to_string(), "2");
    assert_eq!("4/-6".parse::<Rational>().unwrap(), q(-2, 3));
}

#[test]
fn alpha_scalar_reduction() {
    let a = AlphaScalar::alpha();
    let one = AlphaScalar::one();
    let num = a.mul(&a).sub(&one);
    let den = a.sub(&one);
    let r = AlphaScalar::from_fraction(num.numer().clone(), den.numer().clone()).unwrap();
    assert_eq!(r, a.add(&one));
    assert!(r.is_polynomial());
    assert!(!one.try_inv().unwrap().is_zero());
    assert!(!a.add(&one).try_inv().unwrap().is_polynomial());
}

#[test]
fn json_roundtrip_all_rings() {
    let a = AlphaScalar::alpha().add(&AlphaScalar::from_int(2)).try_inv().unwrap();
    assert_eq!(AlphaScalar::from_json(&a.to_json()).unwrap(), a);
    let s = HSeries::from_coeffs(2, vec![a.clone(), AlphaScalar::zero(), a]);
    assert_eq!(HSeries::from_json(&s.to_json()).unwrap(), s);
}

fn small_q() -> impl Strategy<Value = Rational> {
    (-20i64..20, 1i64..12).prop_map(|(n, d)| Rational::new(n, d))
}

fn series_q(order: usize) -> impl Strategy<Value = HSeries<Rational>> {
    prop::collection::vec(small_q(), order + 1).prop_map(move |c| HSeries::from_coeffs(order, c))
}

fn alpha_q() -> impl Strategy<Value = AlphaScalar> {
    (prop::collection::vec(small_q(), 0..4), prop::collection::vec(small_q(), 1..3)).prop_filter_map(
        "zero denominator",
        |(n, d)| {
            let den = Poly::from_coeffs(d);
            if den.is_zero() {
                return None;
            }
            AlphaScalar::from_fraction(Poly::from_coeffs(n), den).ok()
        },
    )
}

proptest! {
    #[test]
    fn series_ring_axioms((a, b, c) in (0usize..=MAX_ORDER).prop_flat_map(|n| (series_q(n), series_q(n), series_q(n)))) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn exp_is_a_homomorphism(a in series_q(4), b in series_q(4)) {
        let mut a = a.coeffs().to_vec();
        let mut b = b.coeffs().to_vec();
        a[0] = Rational::zero();
        b[0] = Rational::zero();
        let (a, b) = (HSeries::from_coeffs(4, a), HSeries::from_coeffs(4, b));
        let lhs = series_exp(&a.add(&b).unwrap()).unwrap();
        let rhs = series_exp(&a).unwrap().mul(&series_exp(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn alpha_agrees_with_substitution(x in alpha_q(), y in alpha_q(), pts in prop::collection::vec(small_q(), 20)) {
        let sum = x.add(&y);
        let prod = x.mul(&y);
        for p in &pts {
            let (Some(a), Some(b)) = (x.eval(p), y.eval(p)) else { continue };
            prop_assert_eq!(sum.eval(p), Some(a.add(&b)));
            prop_assert_eq!(prod.eval(p), Some(a.mul(&b)));
        }
    }

    #[test]
    fn rational_field_axioms(a in small_q(), b in small_q(), c in small_q()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }
}

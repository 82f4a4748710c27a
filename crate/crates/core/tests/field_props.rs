use golden8::field::{parse_ext, parse_scalar};
use golden8::{GoldenExt, GoldenScalar, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn scalar() -> impl Strategy<Value = GoldenScalar> {
    (rational(), rational()).prop_map(|(a, b)| GoldenScalar::new(a, b))
}

fn ext() -> impl Strategy<Value = GoldenExt> {
    (scalar(), scalar()).prop_map(|(u, v)| GoldenExt::new(u, v))
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-9 * (1.0 + x.abs().max(y.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn scalar_ring_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &GoldenScalar::zero(), x.clone());
        prop_assert_eq!(&x * &GoldenScalar::one(), x.clone());
        prop_assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn scalar_inverse(x in scalar()) {
        prop_assume!(!x.is_zero());
        let inv = x.checked_inv().unwrap();
        prop_assert_eq!(&x * &inv, GoldenScalar::one());
        prop_assert_eq!((&x * &x.conjugate()).a().clone(), x.norm());
    }

    #[test]
    fn sign_is_multiplicative_and_matches_floats(x in scalar(), y in scalar()) {
        prop_assert_eq!((&x * &y).signum(), x.signum() * y.signum());
        let f = x.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!(x.signum(), if f > 0.0 { 1 } else { -1 });
        }
        prop_assert_eq!(x.cmp(&y), (&x - &y).signum().cmp(&0));
        prop_assert!(close((&x * &y).to_f64(), x.to_f64() * y.to_f64()));
    }

    #[test]
    fn ext_field_axioms(x in ext(), y in ext(), z in ext()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!(close((&x * &y).to_f64(), x.to_f64() * y.to_f64()));
        if !x.is_zero() {
            prop_assert!((&x * &x.checked_inv().unwrap()).is_one());
        }
    }

    #[test]
    fn render_parse_round_trip(x in scalar(), e in ext()) {
        prop_assert_eq!(parse_scalar(&x.to_string()).unwrap(), x);
        prop_assert_eq!(parse_ext(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn pow_adds_exponents(x in scalar(), j in -4i64..=4, k in -4i64..=4) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(x.pow(j + k).unwrap(), &x.pow(j).unwrap() * &x.pow(k).unwrap());
    }
}

#[test]
fn phi_identities() {
    let phi = GoldenScalar::phi();
    assert_eq!(&phi * &phi, &phi + &GoldenScalar::one());
    assert_eq!(&phi - &phi.checked_inv().unwrap(), GoldenScalar::one());
    assert_eq!(&GoldenScalar::sqrt5() * &GoldenScalar::sqrt5(), GoldenScalar::integer(5));
    let s = GoldenExt::sqrt_phi();
    assert_eq!(&s * &s, GoldenExt::phi());
}

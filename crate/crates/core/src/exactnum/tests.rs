use num::{BigInt, BigRational};

use super::*;

fn q() -> PolQ {
    PolQ::q()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn theta_squares_to_minus_one_minus_theta() {
    let t = CycQ::theta();
    assert_eq!(&t * &t, CycQ::theta_sq());
    assert_eq!(CycQ::theta_sq(), CycQ::new(rat(-1), rat(-1)));
}

#[test]
fn theta_cubed_is_one() {
    let t = CycQ::theta();
    assert_eq!(&(&t * &t) * &t, CycQ::one());
    // 1 + t + t^2 = 0
    let s = &(&CycQ::one() + &t) + &CycQ::theta_sq();
    assert!(s.is_zero());
}

#[test]
fn half_times_two() {
    assert_eq!(&CycQ::half() * &CycQ::from_int(2), CycQ::one());
}

#[test]
fn conj_is_an_involution_and_ring_map() {
    let x = CycQ::new(BigRational::new(BigInt::from(3), BigInt::from(2)), rat(5));
    let y = CycQ::new(rat(-2), BigRational::new(BigInt::from(1), BigInt::from(7)));
    assert_eq!(x.conj().conj(), x);
    assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
    assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
}

#[test]
fn eval_specializations() {
    // q^3*t at q=2 -> 8t
    let p = PolQ::monomial(CycQ::theta(), 3);
    assert_eq!(p.eval_rational(&rat(2)), CycQ::new(rat(0), rat(8)));
    // q^5 at q=1 -> 1
    assert_eq!(PolQ::q_pow(5).eval_rational(&rat(1)), CycQ::one());
    // q^4 - q^3 at q=3 -> 54
    let p = &PolQ::q_pow(4) - &PolQ::q_pow(3);
    assert_eq!(p.eval_rational(&rat(3)), CycQ::from_int(54));
}

#[test]
fn rational_function_normalization() {
    // (q^2 - 1)/(q - 1) = q + 1
    let num = &(&q() * &q()) - &PolQ::one();
    let den = &q() - &PolQ::one();
    let r = RatQ::new(num, den).unwrap();
    assert!(r.is_polynomial());
    assert_eq!(r.num(), &(&q() + &PolQ::one()));

    // 0/q^3 = 0/1
    let r = RatQ::new(PolQ::zero(), PolQ::q_pow(3)).unwrap();
    assert!(r.is_zero());
    assert_eq!(r.den(), &PolQ::one());

    // 2q/2 = q/1
    let r = RatQ::new(PolQ::q().scalar_mul(&CycQ::from_int(2)), PolQ::from_int(2)).unwrap();
    assert_eq!(r.num(), &q());
    assert_eq!(r.den(), &PolQ::one());
}

#[test]
fn rat_normalize_is_idempotent_and_canonical() {
    let a = RatQ::new(
        &PolQ::q_pow(2) - &PolQ::one(),
        PolQ::q().scalar_mul(&CycQ::from_int(3)),
    )
    .unwrap();
    let again = RatQ::new(a.num().clone(), a.den().clone()).unwrap();
    assert_eq!(a, again);
    // a/b == c/d iff canonical forms coincide
    let twice = RatQ::new(
        (&PolQ::q_pow(2) - &PolQ::one()).scalar_mul(&CycQ::from_int(2)),
        PolQ::q().scalar_mul(&CycQ::from_int(6)),
    )
    .unwrap();
    assert_eq!(a, twice);
}

#[test]
fn zero_denominator_rejected() {
    assert!(matches!(
        RatQ::new(PolQ::one(), PolQ::zero()),
        Err(crate::Error::ZeroDenominator)
    ));
}

#[test]
fn conj_fixes_rational_polynomials() {
    let p = &(&PolQ::q_pow(4) - &PolQ::q_pow(3)) + &PolQ::constant(CycQ::half());
    assert!(p.has_rational_coeffs());
    assert_eq!(p.conj(), p);
}

#[test]
fn codec_prints_canonical_examples() {
    let p = PolQ::monomial(CycQ::theta(), 3);
    assert_eq!(p.to_string(), "q^3*t");
    let p = &PolQ::q_pow(4) - &PolQ::q_pow(3);
    assert_eq!(p.to_string(), "q^4 - q^3");
    let p = PolQ::monomial(CycQ::half(), 2);
    assert_eq!(p.to_string(), "(1/2)*q^2");
    let p = PolQ::monomial(CycQ::theta_sq(), 3);
    assert_eq!(p.to_string(), "q^3*t^2");
    assert_eq!(PolQ::zero().to_string(), "0");
    assert_eq!((-PolQ::q_pow(2)).to_string(), "-q^2");
}

#[test]
fn codec_round_trips() {
    let samples = [
        "q^3*t",
        "q^4 - q^3",
        "(1/2)*q^2",
        "q^3*t^2",
        "0",
        "-q^2",
        "2*q^5*t - (1/3)*q + 7",
        "(1 + t)*q^2 - t^2",
        "q",
        "t",
        "1/2",
    ];
    for s in samples {
        let p = parse_pol(s).unwrap();
        let printed = p.to_string();
        let reparsed = parse_pol(&printed).unwrap();
        assert_eq!(p, reparsed, "round trip failed for {}", s);
    }
}

#[test]
fn gcd_and_divrem() {
    // gcd(q^2 - 1, q^2 - 2q + 1) = q - 1
    let a = &PolQ::q_pow(2) - &PolQ::one();
    let b = parse_pol("q^2 - 2*q + 1").unwrap();
    let g = PolQ::gcd(&a, &b);
    assert_eq!(g, parse_pol("q - 1").unwrap());
    let (quot, rem) = a.divrem(&g).unwrap();
    assert!(rem.is_zero());
    assert_eq!(quot, parse_pol("q + 1").unwrap());
}

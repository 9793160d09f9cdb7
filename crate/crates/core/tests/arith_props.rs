use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use logseries::arith::{falling_multinomial, multinomial, nu_int, nu_rat, BigRat, Valuation};

fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13])
}

proptest! {
    #[test]
    fn valuation_is_multiplicative(
        a in (-5000i64..5000, 1i64..5000), b in (-5000i64..5000, 1i64..5000), p in prime()
    ) {
        prop_assume!(a.0 != 0 && b.0 != 0);
        let (x, y) = (rat(a.0, a.1), rat(b.0, b.1));
        prop_assert_eq!(nu_rat(&(&x * &y), p).unwrap(), nu_rat(&x, p).unwrap() + nu_rat(&y, p).unwrap());
    }

    #[test]
    fn valuation_is_ultrametric(
        a in (-5000i64..5000, 1i64..5000), b in (-5000i64..5000, 1i64..5000), p in prime()
    ) {
        prop_assume!(a.0 != 0 && b.0 != 0);
        let (x, y) = (rat(a.0, a.1), rat(b.0, b.1));
        let (vx, vy) = (nu_rat(&x, p).unwrap(), nu_rat(&y, p).unwrap());
        let vs = nu_rat(&(&x + &y), p).unwrap();
        prop_assert!(vs >= vx.min(vy));
        if vx != vy {
            prop_assert_eq!(vs, vx.min(vy));
        }
    }

    #[test]
    fn falling_matches_multinomial_for_large_t(
        parts in prop::collection::vec(0u64..6, 1..5), extra in 0i64..10
    ) {
        let s: u64 = parts.iter().sum();
        let t = s as i64 + extra;
        prop_assume!(t <= 30);
        let mut full = vec![(t as u64) - s];
        full.extend(&parts);
        prop_assert_eq!(falling_multinomial(t, &parts), multinomial(&full));
    }

    #[test]
    fn shift_preserves_valuation_below_prime_power(
        p in prime(), e in 1u32..5, unit in 1i64..200, negative: bool, frac in 0.0f64..1.0
    ) {
        let pe = (p as i64).pow(e);
        prop_assume!(unit % p as i64 != 0);
        let t = if negative { -pe * unit } else { pe * unit };
        // 0 < s < p^{ν_p(t)}
        let s = 1 + ((pe - 2) as f64 * frac) as i64;
        prop_assume!(s > 0 && s < pe);
        prop_assert_eq!(
            nu_int(&BigInt::from(t - s), p).unwrap(),
            nu_int(&BigInt::from(s), p).unwrap()
        );
    }
}

#[test]
fn zero_is_the_only_infinite_valuation() {
    assert_eq!(nu_rat(&BigRat::zero(), 7).unwrap(), Valuation::Infinity);
    for n in 1..200i64 {
        assert!(!nu_rat(&rat(n, 1), 7).unwrap().is_infinite());
    }
}

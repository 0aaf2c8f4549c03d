//! Property tests for the arithmetic and calendar invariants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use vjcal::precession::{
    elapsed_years, minimal_arc_separation, EclipticLongitude, PrecessionRate,
};
use vjcal::rational::Rational;
use vjcal::tally;
use vjcal::yuga::{self, YugaParameters};

fn rational() -> impl Strategy<Value = Rational> {
    (any::<i64>(), 1i64..=i64::MAX)
        .prop_map(|(n, d)| Rational::new(n, d).expect("d > 0"))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..=10_000, 1i64..=10_000).prop_map(|(n, d)| Rational::new(n, d).expect("d > 0"))
}

/// Proper fraction in (0, 1).
fn proper_fraction() -> impl Strategy<Value = Rational> {
    (1u64..5_000, 2u64..5_000).prop_map(|(a, b)| {
        let (n, d) = if a % b == 0 { (1, b + 1) } else { (a % b, b) };
        Rational::new(n, d).expect("d > 0")
    })
}

/// Random valid parameter sets, including degenerate yugas.
fn parameters() -> impl Strategy<Value = YugaParameters> {
    (1u64..=8, 1u64..=40, 1u64..=40, 0u64..=6).prop_map(
        |(years, naksatra_count, sidereal_months, extra_synodic)| {
            let solar_months = 12 * years;
            let synodic_months = solar_months + extra_synodic;
            YugaParameters {
                years,
                solar_months,
                synodic_months,
                sidereal_months,
                naksatra_count,
                fortnights: 2 * synodic_months,
                moon_traversals: sidereal_months * naksatra_count,
            }
        },
    )
}

fn in_lowest_terms(r: &Rational) -> bool {
    r.denominator().is_positive()
        && (r.numerator().gcd(r.denominator()).is_one()
            || (r.numerator().is_zero() && r.denominator().is_one()))
}

/// Digit-by-digit long division, independent of the scaling shortcut in
/// `to_decimal_string`. Rounds half away from zero on the exact remainder.
fn long_division_oracle(r: &Rational, places: usize) -> String {
    let num = r.numerator().magnitude().clone();
    let den = r.denominator().magnitude().clone();
    let (int_part, mut rem) = num.div_rem(&den);
    let mut digits = Vec::with_capacity(places);
    for _ in 0..places {
        rem *= 10u32;
        let (digit, next) = rem.div_rem(&den);
        digits.push(digit.to_string());
        rem = next;
    }
    // carry-propagating round-up when the remainder is at least half
    let mut text: Vec<char> = format!("{int_part}.{}", digits.join("")).chars().collect();
    if &rem * 2u32 >= den {
        let mut i = text.len();
        loop {
            if i == 0 {
                text.insert(0, '1');
                break;
            }
            i -= 1;
            match text[i] {
                '.' => continue,
                '9' => text[i] = '0',
                c => {
                    text[i] = char::from_digit(c.to_digit(10).unwrap() + 1, 10).unwrap();
                    break;
                }
            }
        }
    }
    let body: String = text.into_iter().collect();
    let body = if places == 0 {
        body.trim_end_matches('.').to_string()
    } else {
        body
    };
    let negative = r.is_negative() && body.chars().any(|c| ('1'..='9').contains(&c));
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

proptest! {
    #[test]
    fn invariants_hold_after_operations(a in rational(), b in rational()) {
        for r in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(in_lowest_terms(&r));
        }
        if !b.is_zero() {
            prop_assert!(in_lowest_terms(&a.checked_div(&b).unwrap()));
        }
    }

    #[test]
    fn add_mul_commute_and_associate(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn add_sub_and_mul_div_roundtrip(a in rational(), b in rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
        }
    }

    #[test]
    fn mixed_number_roundtrip(a in rational()) {
        let m = a.to_mixed();
        prop_assert!(m.frac_numerator() < m.frac_denominator()
            || (m.frac_numerator().is_zero() && m.frac_denominator().is_one()));
        prop_assert_eq!(Rational::from(m.clone()), a.clone());
        // canonical text forms survive parsing
        prop_assert_eq!(m.to_string().parse::<vjcal::MixedNumber>().unwrap(), m);
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn mod_circle_in_range_and_congruent(a in rational(), m in 1u64..1000) {
        let q = a.mod_circle(m);
        prop_assert!(!q.is_negative());
        prop_assert!(q < Rational::from(m));
        let diff = &a - &q;
        // (a - q) must be an exact integer multiple of m
        prop_assert!(diff.is_integer());
        prop_assert!(diff.numerator().mod_floor(&BigInt::from(m)).is_zero());
    }

    #[test]
    fn rule_of_three_inverts(b in small_rational(), c in small_rational(), d in small_rational()) {
        prop_assume!(!d.is_zero());
        let x = Rational::rule_of_three(&b, &c, &d).unwrap();
        prop_assert_eq!(&x * &d, &b * &c);
    }

    #[test]
    fn decimal_string_matches_long_division(a in rational(), places in 0usize..12) {
        prop_assert_eq!(a.to_decimal_string(places), long_division_oracle(&a, places));
    }

    #[test]
    fn moon_position_periodic(p in parameters(), n in 0u64..5000) {
        prop_assert_eq!(
            yuga::moon_position(&p, n + p.fortnights),
            yuga::moon_position(&p, n)
        );
        prop_assert_eq!(
            yuga::sun_position(&p, n + p.fortnights),
            yuga::sun_position(&p, n)
        );
    }

    #[test]
    fn progress_always_proper(p in parameters(), n in 0u64..5000) {
        let pos = yuga::moon_position(&p, n);
        prop_assert!(!pos.progress().is_negative());
        prop_assert!(*pos.progress() < Rational::one());
        prop_assert!(pos.segment() < p.naksatra_count);
    }

    #[test]
    fn conjunction_at_yuga_start(p in parameters()) {
        let moon = yuga::moon_position(&p, 0);
        let sun = yuga::sun_position(&p, 0);
        prop_assert_eq!(moon.segment(), 0);
        prop_assert!(moon.progress().is_zero());
        prop_assert_eq!(sun.segment(), 0);
        prop_assert!(sun.progress().is_zero());
    }

    #[test]
    fn separation_symmetric_zero_iff_equal(a in small_rational(), b in small_rational()) {
        let la = EclipticLongitude::new(a);
        let lb = EclipticLongitude::new(b);
        let s = minimal_arc_separation(&la, &lb);
        prop_assert_eq!(s.clone(), minimal_arc_separation(&lb, &la));
        prop_assert!(!s.is_negative());
        prop_assert!(s <= Rational::from(180));
        prop_assert_eq!(s.is_zero(), la == lb);
    }

    #[test]
    fn elapsed_years_linear_in_rate(a in small_rational(), b in small_rational(), r in 1i64..10_000) {
        let la = EclipticLongitude::new(a);
        let lb = EclipticLongitude::new(b);
        let rate = PrecessionRate::new(Rational::from(r)).unwrap();
        prop_assert_eq!(
            elapsed_years(&la, &lb, &rate),
            &minimal_arc_separation(&la, &lb) * &Rational::from(r)
        );
    }

    #[test]
    fn tally_and_rational_models_agree(p in parameters(), n in 0u64..600) {
        prop_assert!(tally::models_agree(&p, n).agree());
    }

    #[test]
    fn greedy_decomposition_sums_back(r in proper_fraction()) {
        let d = tally::greedy_unit_fractions(&r).unwrap();
        prop_assert_eq!(d.sum(), r);
        prop_assert!(d.denominators().windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn accumulation_equals_closed_form_over_two_yugas() {
    let p = YugaParameters::default();
    let rate = p.moon_rate();
    let mut running = Rational::zero();
    for n in 0..=(2 * p.fortnights) {
        let closed = yuga::moon_position(&p, n);
        assert_eq!(
            running.mod_circle(p.naksatra_count),
            closed.total(),
            "divergence at fortnight {n}"
        );
        running = (&running + &rate).mod_circle(p.naksatra_count);
    }
}

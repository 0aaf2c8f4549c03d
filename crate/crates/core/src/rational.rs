//! Exact signed rational arithmetic over arbitrary-precision integers.
//!
//! Every value is kept in lowest terms with a positive denominator, so two
//! rationals are equal iff their fields are equal. The mixed-number view
//! ("14 73/124") and the fixed-precision decimal rendering live here too,
//! since both are presentation forms of the same exact value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Largest number of decimal places `to_decimal_string` will render.
pub const MAX_DECIMAL_PLACES: usize = 50;

/// An exact signed rational in lowest terms.
///
/// Invariants: `den > 0`, `gcd(|num|, den) == 1`, and zero is always `0/1`.
/// Construction enforces these, so they hold after every public operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Builds `num/den` reduced to lowest terms, sign carried by the
    /// numerator. A zero denominator is rejected.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, Error> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    /// Internal constructor; `den` must be nonzero.
    fn reduced(mut num: BigInt, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if num.is_zero() {
            return Self {
                num,
                den: BigInt::one(),
            };
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Self { num, den }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn abs(&self) -> Self {
        Self {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    /// Exact division; `divisor` must be nonzero.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self, Error> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(
            &self.num * &divisor.den,
            &self.den * &divisor.num,
        ))
    }

    /// The rule of three: the unknown `x` with `x/b = c/d`, i.e. `b·c/d`.
    pub fn rule_of_three(b: &Self, c: &Self, d: &Self) -> Result<Self, Error> {
        (b * c).checked_div(d)
    }

    /// Largest integer `k` with `k <= self`.
    pub fn floor(&self) -> BigInt {
        self.num.div_floor(&self.den)
    }

    /// Reduces `self` onto the circle `[0, modulus)`: the unique `q` with
    /// `0 <= q < modulus` and `self - q` an integer multiple of `modulus`.
    pub fn mod_circle(&self, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let m = BigInt::from(modulus);
        // floor(self / m) whole turns, then subtract them off.
        let turns = self.num.div_floor(&(&self.den * &m));
        Self::reduced(&self.num - turns * &m * &self.den, self.den.clone())
    }

    /// Splits into whole part and proper fractional remainder, sign applying
    /// to the value as a whole (`-7/2` becomes `-(3 1/2)`).
    pub fn to_mixed(&self) -> MixedNumber {
        let abs_num = self.num.magnitude();
        let den = self.den.magnitude();
        let (whole, frac_num) = abs_num.div_rem(den);
        let frac_den = if frac_num.is_zero() {
            BigUint::one()
        } else {
            den.clone()
        };
        MixedNumber {
            negative: self.num.is_negative(),
            whole,
            frac_num,
            frac_den,
        }
    }

    /// Decimal expansion rounded half-away-from-zero to `places` digits.
    ///
    /// `places` is capped at [`MAX_DECIMAL_PLACES`].
    pub fn to_decimal_string(&self, places: usize) -> String {
        assert!(
            places <= MAX_DECIMAL_PLACES,
            "at most {MAX_DECIMAL_PLACES} decimal places supported"
        );
        let scale = BigInt::from(10u32).pow(places as u32);
        let scaled = self.num.magnitude() * scale.magnitude();
        let (mut q, r) = scaled.div_rem(self.den.magnitude());
        // half away from zero
        if &r * 2u32 >= *self.den.magnitude() {
            q += 1u32;
        }
        let digits = q.to_string();
        let sign = if self.num.is_negative() && !q.is_zero() {
            "-"
        } else {
            ""
        };
        if places == 0 {
            return format!("{sign}{digits}");
        }
        let padded = format!("{digits:0>width$}", width = places + 1);
        let split = padded.len() - places;
        format!("{sign}{}.{}", &padded[..split], &padded[split..])
    }
}

impl From<MixedNumber> for Rational {
    fn from(m: MixedNumber) -> Self {
        let magnitude =
            BigInt::from(&m.whole * &m.frac_den + &m.frac_num);
        let num = if m.negative { -magnitude } else { magnitude };
        Self::reduced(num, BigInt::from(m.frac_den))
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational::reduced(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational::reduced(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive, so cross-multiplication is order-safe
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for Rational {
    /// Canonical text form `n/d`, e.g. `1809/124`, `0/1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `n/d` or a bare integer `n`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let parse_err = || Error::Parse {
            what: "rational",
            input: s.to_string(),
        };
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let num = BigInt::from_str(n.trim()).map_err(|_| parse_err())?;
                let den = BigInt::from_str(d.trim()).map_err(|_| parse_err())?;
                Rational::new(num, den)
            }
            None => {
                let num = BigInt::from_str(s).map_err(|_| parse_err())?;
                Ok(Rational::from_integer(num))
            }
        }
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {
        $(impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Self::from_integer(n)
            }
        })*
    };
}
from_int!(i32, i64, u32, u64, BigInt);

/// Whole part plus proper fraction view of a [`Rational`],
/// e.g. `14 73/124`. The sign applies to the value as a whole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedNumber {
    negative: bool,
    whole: BigUint,
    frac_num: BigUint,
    frac_den: BigUint,
}

impl MixedNumber {
    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn whole(&self) -> &BigUint {
        &self.whole
    }

    pub fn frac_numerator(&self) -> &BigUint {
        &self.frac_num
    }

    pub fn frac_denominator(&self) -> &BigUint {
        &self.frac_den
    }
}

impl fmt::Display for MixedNumber {
    /// Canonical text form `w n/d`, e.g. `14 73/124`, `-3 1/2`, `5 0/1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        write!(f, "{} {}/{}", self.whole, self.frac_num, self.frac_den)
    }
}

impl FromStr for MixedNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parse_err = || Error::Parse {
            what: "mixed number",
            input: s.to_string(),
        };
        let t = s.trim();
        let (negative, t) = match t.strip_prefix('-') {
            Some(rest) => (true, rest.trim_start()),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let (whole_part, frac_part) = t.split_once(' ').ok_or_else(parse_err)?;
        let whole = BigUint::from_str(whole_part.trim()).map_err(|_| parse_err())?;
        let (n, d) = frac_part.trim().split_once('/').ok_or_else(parse_err)?;
        let frac_num = BigUint::from_str(n.trim()).map_err(|_| parse_err())?;
        let frac_den = BigUint::from_str(d.trim()).map_err(|_| parse_err())?;
        if frac_den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if frac_num >= frac_den {
            return Err(parse_err());
        }
        // re-normalize through Rational so the proper-fraction invariants hold
        let magnitude = BigInt::from(&whole * &frac_den + &frac_num);
        let num = if negative { -magnitude } else { magnitude };
        Ok(Rational::new(num, BigInt::from(frac_den))?.to_mixed())
    }
}

/// Convenience for literals in tests and defaults. Panics on zero
/// denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num, den).expect("nonzero denominator")
}

impl Rational {
    /// Lossy conversion for display ordering only; never used in
    /// computations.
    pub fn to_f64_lossy(&self) -> f64 {
        self.num.to_f64().unwrap_or(f64::NAN) / self.den.to_f64().unwrap_or(f64::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_keeps_lowest_terms_and_sign() {
        // 1809 = 27*67 and 124 = 4*31 share no factor
        let r = ratio(1809, 124);
        assert_eq!(r.to_string(), "1809/124");
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(ratio(-3, -6), ratio(1, 2));
        assert_eq!(ratio(3, -6).to_string(), "-1/2");
        assert_eq!(ratio(0, -7).to_string(), "0/1");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(Rational::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn moon_rate_doubles_to_29_11_62() {
        let rate = ratio(1809, 124);
        let two = &rate + &rate;
        assert_eq!(two, ratio(1809, 62));
        assert_eq!(two.to_mixed().to_string(), "29 11/62");
    }

    #[test]
    fn additive_identity_and_product() {
        let x = ratio(7, 3);
        assert_eq!(&x + &Rational::zero(), x);
        assert_eq!(&ratio(1, 2) * &ratio(1, 3), ratio(1, 6));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            ratio(1, 2).checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn mixed_rendering() {
        assert_eq!(ratio(1809, 124).to_mixed().to_string(), "14 73/124");
        assert_eq!(ratio(5, 1).to_mixed().to_string(), "5 0/1");
        assert_eq!(ratio(-7, 2).to_mixed().to_string(), "-3 1/2");
    }

    #[test]
    fn mixed_roundtrip() {
        for r in [ratio(1809, 124), ratio(-7, 2), Rational::zero(), ratio(5, 1)] {
            assert_eq!(Rational::from(r.to_mixed()), r);
        }
        let m: MixedNumber = "14 73/124".parse().unwrap();
        assert_eq!(Rational::from(m), ratio(1809, 124));
        let m: MixedNumber = "-3 1/2".parse().unwrap();
        assert_eq!(Rational::from(m), ratio(-7, 2));
    }

    #[test]
    fn mod_circle_examples() {
        assert_eq!(ratio(1809, 1).mod_circle(27), Rational::zero());
        // 3618/124 = 29 11/62; one full turn of 27 leaves 2 11/62 = 135/62
        assert_eq!(ratio(3618, 124).mod_circle(27), ratio(135, 62));
        assert_eq!(ratio(5, 2).mod_circle(27), ratio(5, 2));
        assert_eq!(ratio(-1, 2).mod_circle(27), ratio(53, 2));
    }

    #[test]
    fn rule_of_three_examples() {
        let x = Rational::rule_of_three(&ratio(1, 1), &ratio(1809, 1), &ratio(124, 1)).unwrap();
        assert_eq!(x, ratio(1809, 124));
        let x = Rational::rule_of_three(&ratio(2, 1), &ratio(3, 1), &ratio(6, 1)).unwrap();
        assert_eq!(x, Rational::one());
        let x = Rational::rule_of_three(&ratio(5, 1), &ratio(62, 1), &ratio(1, 1)).unwrap();
        assert_eq!(x, ratio(310, 1));
        assert_eq!(
            Rational::rule_of_three(&ratio(1, 1), &ratio(1, 1), &Rational::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(ratio(1809, 124).to_decimal_string(5), "14.58871");
        assert_eq!(ratio(1, 2).to_decimal_string(3), "0.500");
        assert_eq!(ratio(73, 124).to_decimal_string(5), "0.58871");
        assert_eq!(ratio(-1, 8).to_decimal_string(2), "-0.13");
        assert_eq!(ratio(5, 2).to_decimal_string(0), "3"); // half away from zero
        assert_eq!(ratio(-5, 2).to_decimal_string(0), "-3");
        assert_eq!(ratio(-1, 1000).to_decimal_string(1), "0.0");
    }

    #[test]
    fn parse_canonical_forms() {
        assert_eq!("1809/124".parse::<Rational>().unwrap(), ratio(1809, 124));
        assert_eq!("-7".parse::<Rational>().unwrap(), ratio(-7, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("1 5/4".parse::<MixedNumber>().is_err()); // improper fraction
    }
}

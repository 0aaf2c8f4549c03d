//! A whole-number ("concrete") computation model: natural-number counts,
//! addition, and separation into groups, with no division and no fraction
//! objects.
//!
//! Working in units of 1/fortnights of a nakṣatra turns the per-fortnight
//! lunar accumulation into pure integer arithmetic on a circle of
//! `naksatra_count × fortnights` units (3348 for the defaults). The
//! equivalence bridge [`models_agree`] checks, exactly, that this tally
//! model and the rational model compute the same positions. Unit-fraction
//! decomposition (greedy) covers the fraction forms the tally world can
//! express.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::Rational;
use crate::yuga::{self, YugaParameters};

/// A nonnegative count of some concrete unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TallyQuantity {
    pub count: BigUint,
    pub unit_label: String,
}

impl TallyQuantity {
    pub fn new(count: impl Into<BigUint>, unit_label: impl Into<String>) -> Self {
        Self {
            count: count.into(),
            unit_label: unit_label.into(),
        }
    }
}

/// Size of the tally circle: `naksatra_count × fortnights` scaled units.
pub fn tally_circle(p: &YugaParameters) -> u64 {
    p.naksatra_count * p.fortnights
}

/// Moon position after `fortnight` fortnights, in scaled units of
/// 1/fortnights of a nakṣatra. Accumulation needs only integer addition and
/// wrapping on the tally circle; no division anywhere.
pub fn scaled_moon_position(p: &YugaParameters, fortnight: u64) -> TallyQuantity {
    let circle = BigUint::from(tally_circle(p));
    let step = BigUint::from(p.moon_traversals);
    let mut count = BigUint::zero();
    for _ in 0..fortnight {
        count += &step;
        // the step may span the circle more than once
        while count >= circle {
            count -= &circle;
        }
    }
    TallyQuantity::new(
        count,
        format!("amsa-1/{}-naksatra", p.fortnights),
    )
}

/// Separates the sixth measure for tax after every five measures:
/// `quantity = 6×tax + remainder` with `0 ≤ remainder < 6`.
pub fn sixth_share(quantity_measures: &BigUint) -> (BigUint, BigUint) {
    let six = BigUint::from(6u32);
    let tax = quantity_measures / &six;
    let remainder = quantity_measures - &tax * &six;
    (tax, remainder)
}

/// A sum of distinct unit fractions `1/d₁ + 1/d₂ + …` with strictly
/// increasing denominators, equal to the decomposed value exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitFractionDecomposition {
    denominators: Vec<BigUint>,
}

impl UnitFractionDecomposition {
    pub fn denominators(&self) -> &[BigUint] {
        &self.denominators
    }

    /// Exact re-summation of the unit fractions.
    pub fn sum(&self) -> Rational {
        self.denominators.iter().fold(Rational::zero(), |acc, d| {
            &acc + &Rational::new(BigInt::one(), BigInt::from(d.clone())).expect("d >= 2")
        })
    }
}

/// Greedy (Fibonacci–Sylvester) unit-fraction decomposition of a proper
/// fraction in (0, 1). Each step takes the largest unit fraction not
/// exceeding the remainder; the remainder's numerator strictly decreases,
/// so the process terminates.
pub fn greedy_unit_fractions(r: &Rational) -> Result<UnitFractionDecomposition, Error> {
    if r.is_negative() || r.is_zero() || *r >= Rational::one() {
        return Err(Error::NotProperFraction(r.to_string()));
    }
    let mut denominators = Vec::new();
    let mut rest = r.clone();
    while !rest.is_zero() {
        // smallest d with 1/d <= rest is ceil(den/num)
        let num = rest.numerator().magnitude().clone();
        let den = rest.denominator().magnitude().clone();
        let d = (&den + &num - BigUint::one()) / &num;
        let unit = Rational::new(BigInt::one(), BigInt::from(d.clone())).expect("d >= 1");
        let next = &rest - &unit;
        debug_assert!(
            next.numerator().magnitude() < rest.numerator().magnitude(),
            "greedy step must shrink the numerator"
        );
        denominators.push(d);
        rest = next;
    }
    Ok(UnitFractionDecomposition { denominators })
}

/// Witness values for the model comparison at one fortnight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementWitness {
    /// Tally count divided by the scaling denominator, as an exact rational.
    pub tally_as_rational: Rational,
    /// Total position from the rational model.
    pub rational_position: Rational,
}

impl AgreementWitness {
    pub fn agree(&self) -> bool {
        self.tally_as_rational == self.rational_position
    }
}

/// Checks that the scaled integer model and the rational model agree at the
/// given fortnight, returning both values as the witness.
pub fn models_agree(p: &YugaParameters, fortnight: u64) -> AgreementWitness {
    let tally = scaled_moon_position(p, fortnight);
    let tally_as_rational = Rational::new(BigInt::from(tally.count), BigInt::from(p.fortnights))
        .expect("fortnights > 0");
    let rational_position = yuga::moon_position(p, fortnight).total();
    AgreementWitness {
        tally_as_rational,
        rational_position,
    }
}

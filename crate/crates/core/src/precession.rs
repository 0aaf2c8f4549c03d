//! Precession-based epoch dating: convert nakṣatra reference points to
//! ecliptic longitudes, multiply the longitude separation by the precession
//! rate, and subtract from a known epoch.
//!
//! The rate defaults to 1° in 72 years, the round historical figure, not the
//! modern ~71.6 years/degree. Epoch arithmetic runs on astronomical year
//! numbers (0 = 1 BCE) and only converts to BCE/CE labels at display time.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Error;
use crate::rational::{ratio, Rational};

/// An exact ecliptic longitude in degrees, reduced onto `[0, 360)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EclipticLongitude {
    degrees: Rational,
}

impl EclipticLongitude {
    pub fn new(degrees: Rational) -> Self {
        Self {
            degrees: degrees.mod_circle(360),
        }
    }

    pub fn degrees(&self) -> &Rational {
        &self.degrees
    }

    /// Renders as degrees and arcminutes, e.g. `293°20′`. Minutes are shown
    /// as a mixed number when the longitude is not a whole number of
    /// arcminutes.
    pub fn to_dms_string(&self) -> String {
        let whole_deg = self.degrees.floor();
        let minutes = &(&self.degrees - &Rational::from(whole_deg.clone())) * &ratio(60, 1);
        if minutes.is_zero() {
            format!("{whole_deg}°0′")
        } else if minutes.is_integer() {
            format!("{whole_deg}°{}′", minutes.numerator())
        } else {
            format!("{whole_deg}°{}′", minutes.to_mixed())
        }
    }
}

/// A year in astronomical numbering: 0 = 1 BCE, −1 = 2 BCE, 530 = 530 CE.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Epoch {
    astronomical: i64,
}

impl Epoch {
    pub fn from_astronomical(year: i64) -> Self {
        Self { astronomical: year }
    }

    /// From a CE year label (1 CE = astronomical 1).
    pub fn ce(year: u32) -> Self {
        Self {
            astronomical: year as i64,
        }
    }

    /// From a BCE year label (1 BCE = astronomical 0).
    pub fn bce(year: u32) -> Self {
        Self {
            astronomical: 1 - year as i64,
        }
    }

    pub fn astronomical(&self) -> i64 {
        self.astronomical
    }

    /// BCE/CE label with no year zero: astronomical 0 → "1 BCE".
    pub fn label(&self) -> String {
        if self.astronomical <= 0 {
            format!("{} BCE", 1 - self.astronomical)
        } else {
            format!("{} CE", self.astronomical)
        }
    }

    /// Parses "530CE", "1151 BCE", or a bare astronomical integer.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let parse_err = || Error::Parse {
            what: "epoch",
            input: s.to_string(),
        };
        let t = s.trim();
        let upper = t.to_ascii_uppercase();
        if let Some(y) = upper.strip_suffix("BCE") {
            let year: u32 = y.trim().parse().map_err(|_| parse_err())?;
            if year == 0 {
                return Err(parse_err());
            }
            Ok(Self::bce(year))
        } else if let Some(y) = upper.strip_suffix("CE") {
            let year: u32 = y.trim().parse().map_err(|_| parse_err())?;
            if year == 0 {
                return Err(parse_err());
            }
            Ok(Self::ce(year))
        } else {
            let year: i64 = t.parse().map_err(|_| parse_err())?;
            Ok(Self::from_astronomical(year))
        }
    }
}

/// Precession rate in years per degree of longitude drift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecessionRate {
    years_per_degree: Rational,
}

impl Default for PrecessionRate {
    /// 1° in 72 years.
    fn default() -> Self {
        Self {
            years_per_degree: ratio(72, 1),
        }
    }
}

impl PrecessionRate {
    pub fn new(years_per_degree: Rational) -> Result<Self, Error> {
        if years_per_degree.is_zero() || years_per_degree.is_negative() {
            return Err(Error::InvalidParameters(
                "precession rate must be positive".into(),
            ));
        }
        Ok(Self { years_per_degree })
    }

    pub fn years_per_degree(&self) -> &Rational {
        &self.years_per_degree
    }
}

/// Fixes the ecliptic longitude of segment 0 of the naming scheme in use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OriginConvention {
    segment_zero_longitude: Rational,
}

impl OriginConvention {
    pub fn new(segment_zero_longitude: Rational) -> Self {
        Self {
            segment_zero_longitude: segment_zero_longitude.mod_circle(360),
        }
    }

    /// Standard sidereal numbering: Aśvinī's segment starts at 0°, so
    /// Uttarāṣāḍhā is the 21st segment and Dhaniṣṭhā the 23rd.
    pub fn asvini_zero() -> Self {
        Self::new(Rational::zero())
    }

    /// Dhaniṣṭhā-first numbering (the yuga origin at segment 0), placed so
    /// longitudes agree with the Aśvinī-zero convention: segment 0 starts at
    /// 880/3° = 293°20′.
    pub fn dhanistha_first() -> Self {
        Self::new(ratio(880, 3))
    }

    pub fn segment_zero_longitude(&self) -> &Rational {
        &self.segment_zero_longitude
    }
}

/// Ecliptic longitude of a nakṣatra reference point: `origin + (segment +
/// progress) × 360/27` degrees, reduced mod 360. Each of the 27 equal
/// segments spans 40/3° = 13°20′.
pub fn naksatra_longitude(
    segment: u64,
    progress: &Rational,
    origin: &OriginConvention,
) -> Result<EclipticLongitude, Error> {
    if progress.is_negative() || *progress >= Rational::one() {
        return Err(Error::ProgressOutOfRange(progress.to_string()));
    }
    let total = &Rational::from_integer(segment) + progress;
    let degrees = &origin.segment_zero_longitude + &(&total * &ratio(40, 3));
    Ok(EclipticLongitude::new(degrees))
}

/// Minimal arc between two longitudes, in `[0, 180]` degrees.
pub fn minimal_arc_separation(a: &EclipticLongitude, b: &EclipticLongitude) -> Rational {
    let diff = (&a.degrees - &b.degrees).mod_circle(360);
    if diff > ratio(180, 1) {
        &ratio(360, 1) - &diff
    } else {
        diff
    }
}

/// Years elapsed for the solstice reference to precess between the two
/// longitudes: minimal arc separation times the rate.
pub fn elapsed_years(
    a: &EclipticLongitude,
    b: &EclipticLongitude,
    rate: &PrecessionRate,
) -> Rational {
    &minimal_arc_separation(a, b) * &rate.years_per_degree
}

/// Rounds a rational to the nearest integer, half away from zero.
fn round_half_away(r: &Rational) -> BigInt {
    let whole = r.abs().floor();
    let frac = &r.abs() - &Rational::from(whole.clone());
    let rounded = if frac >= ratio(1, 2) { whole + 1 } else { whole };
    if r.is_negative() {
        -rounded
    } else {
        rounded
    }
}

/// Steps back from a known epoch by the elapsed years (rounded half away
/// from zero to a whole calendar year).
pub fn conjunction_date(known: Epoch, elapsed: &Rational) -> Epoch {
    let years = round_half_away(elapsed);
    let years = i64::try_from(years).expect("elapsed years fits in i64");
    Epoch::from_astronomical(known.astronomical - years)
}

/// Years of dating drift produced by an observation error of the given size.
pub fn sensitivity(observation_error_degrees: &Rational, rate: &PrecessionRate) -> Rational {
    assert!(
        !observation_error_degrees.is_negative(),
        "observation error must be nonnegative"
    );
    observation_error_degrees * &rate.years_per_degree
}

/// A nakṣatra reference point: segment index plus progress into the segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaksatraPoint {
    pub segment: u64,
    pub progress: Rational,
}

/// Everything the dating computation produced, every intermediate exposed.
#[derive(Debug, Clone, Serialize)]
pub struct DatingReport {
    pub longitude_a: LongitudeView,
    pub longitude_b: LongitudeView,
    /// Minimal arc separation in degrees, as "p/q".
    pub separation: String,
    pub elapsed_years_exact: String,
    pub elapsed_years_rounded: i64,
    pub date: EpochView,
    pub sensitivity: SensitivityBand,
}

#[derive(Debug, Clone, Serialize)]
pub struct LongitudeView {
    /// Exact degrees, e.g. "880/3 deg".
    pub degrees: String,
    /// Degree–arcminute rendering, e.g. "293°20′".
    pub dms: String,
}

impl From<&EclipticLongitude> for LongitudeView {
    fn from(l: &EclipticLongitude) -> Self {
        Self {
            degrees: format!("{} deg", l.degrees),
            dms: l.to_dms_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EpochView {
    pub astronomical: i64,
    pub label: String,
}

impl From<Epoch> for EpochView {
    fn from(e: Epoch) -> Self {
        Self {
            astronomical: e.astronomical(),
            label: e.label(),
        }
    }
}

/// Dating band for a ± observation error: earliest and latest labels.
#[derive(Debug, Clone, Serialize)]
pub struct SensitivityBand {
    pub error_deg: String,
    pub band: [String; 2],
}

/// The full dating pipeline: longitudes for both points, separation, elapsed
/// years, resulting epoch, and a ±error sensitivity band.
pub fn date_from_naksatra_points(
    point_a: &NaksatraPoint,
    point_b: &NaksatraPoint,
    known: Epoch,
    rate: &PrecessionRate,
    origin: &OriginConvention,
    error_degrees: &Rational,
) -> Result<DatingReport, Error> {
    let lon_a = naksatra_longitude(point_a.segment, &point_a.progress, origin)?;
    let lon_b = naksatra_longitude(point_b.segment, &point_b.progress, origin)?;
    let separation = minimal_arc_separation(&lon_a, &lon_b);
    let elapsed = elapsed_years(&lon_a, &lon_b, rate);
    let date = conjunction_date(known, &elapsed);
    let spread = sensitivity(error_degrees, rate);
    let earliest = conjunction_date(known, &(&elapsed + &spread));
    let latest = conjunction_date(known, &(&elapsed - &spread));
    Ok(DatingReport {
        longitude_a: (&lon_a).into(),
        longitude_b: (&lon_b).into(),
        separation: separation.to_string(),
        elapsed_years_exact: elapsed.to_string(),
        elapsed_years_rounded: i64::try_from(round_half_away(&elapsed))
            .expect("elapsed years fits in i64"),
        date: date.into(),
        sensitivity: SensitivityBand {
            error_deg: error_degrees.to_string(),
            band: [earliest.label(), latest.label()],
        },
    })
}

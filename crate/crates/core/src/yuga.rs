//! The five-year-yuga calendar model: cycle constants, per-fortnight moon
//! and sun nakṣatra positions, the full yuga table, and intercalary-month
//! scheduling.
//!
//! The moon's rate (traversals per fortnight) comes straight from the cycle
//! constants. The sun's rate is a model completion, not a source datum: the
//! cycle opens at a sun–moon conjunction at the origin nakṣatra, and the sun
//! circles all nakṣatras once per year, giving `naksatra_count × years`
//! traversals per `fortnights` (135/124 for the defaults). It is isolated in
//! [`YugaParameters::sun_rate`] so alternative completions can be swapped in.

use serde::Serialize;

use crate::error::Error;
use crate::rational::Rational;

/// Default nakṣatra name list, origin (Dhaniṣṭhā) first. Reference data,
/// user-replaceable via a names file.
pub const DEFAULT_NAKSATRA_NAMES: &str = include_str!("../data/naksatras.txt");

/// The constants of a five-year luni-solar cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YugaParameters {
    pub years: u64,
    pub solar_months: u64,
    pub synodic_months: u64,
    pub sidereal_months: u64,
    pub naksatra_count: u64,
    pub fortnights: u64,
    pub moon_traversals: u64,
}

impl Default for YugaParameters {
    fn default() -> Self {
        Self {
            years: 5,
            solar_months: 60,
            synodic_months: 62,
            sidereal_months: 67,
            naksatra_count: 27,
            fortnights: 124,
            moon_traversals: 1809,
        }
    }
}

impl YugaParameters {
    /// Checks the structural identities tying the constants together.
    pub fn validate(&self) -> Result<(), Error> {
        let fail = |msg: String| Err(Error::InvalidParameters(msg));
        if self.years == 0 || self.naksatra_count == 0 {
            return fail("years and naksatra count must be positive".into());
        }
        if self.fortnights != 2 * self.synodic_months {
            return fail(format!(
                "fortnights ({}) must equal 2 × synodic months ({})",
                self.fortnights, self.synodic_months
            ));
        }
        if self.moon_traversals != self.sidereal_months * self.naksatra_count {
            return fail(format!(
                "moon traversals ({}) must equal sidereal months ({}) × naksatra count ({})",
                self.moon_traversals, self.sidereal_months, self.naksatra_count
            ));
        }
        if self.solar_months != 12 * self.years {
            return fail(format!(
                "solar months ({}) must equal 12 × years ({})",
                self.solar_months, self.years
            ));
        }
        if self.synodic_months < self.solar_months {
            return fail(format!(
                "synodic months ({}) may not be fewer than solar months ({})",
                self.synodic_months, self.solar_months
            ));
        }
        Ok(())
    }

    /// Nakṣatras the moon covers per fortnight: `moon_traversals /
    /// fortnights`, 1809/124 (= 14 73/124) for the defaults.
    pub fn moon_rate(&self) -> Rational {
        Rational::new(self.moon_traversals, self.fortnights).expect("fortnights > 0")
    }

    /// Nakṣatras the sun covers per fortnight (model completion, see module
    /// docs): `naksatra_count × years / fortnights`, 135/124 by default.
    pub fn sun_rate(&self) -> Rational {
        Rational::new(self.naksatra_count * self.years, self.fortnights).expect("fortnights > 0")
    }

    /// Number of intercalary months per yuga.
    pub fn intercalary_count(&self) -> u64 {
        self.synodic_months - self.solar_months
    }
}

/// A position on the nakṣatra circle: segment index from the yuga origin
/// plus exact fractional progress within the segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaksatraPosition {
    segment: u64,
    progress: Rational,
}

impl NaksatraPosition {
    /// Splits a total circle position in `[0, naksatra_count)` into segment
    /// and progress.
    pub fn from_total(total: &Rational, naksatra_count: u64) -> Self {
        let wrapped = total.mod_circle(naksatra_count);
        let segment = u64::try_from(wrapped.floor()).expect("wrapped into [0, count)");
        let progress = &wrapped - &Rational::from_integer(segment);
        Self { segment, progress }
    }

    pub fn segment(&self) -> u64 {
        self.segment
    }

    /// Fractional progress within the segment, in `[0, 1)`.
    pub fn progress(&self) -> &Rational {
        &self.progress
    }

    /// Total position on the circle, `segment + progress`.
    pub fn total(&self) -> Rational {
        &Rational::from_integer(self.segment) + &self.progress
    }
}

/// Moon position after `fortnight` fortnights of motion from the origin
/// conjunction: `fortnight × moon_rate mod naksatra_count`, exact.
pub fn moon_position(p: &YugaParameters, fortnight: u64) -> NaksatraPosition {
    let total = &Rational::from_integer(fortnight) * &p.moon_rate();
    NaksatraPosition::from_total(&total, p.naksatra_count)
}

/// Sun position after `fortnight` fortnights (model-completed rate, see
/// module docs).
pub fn sun_position(p: &YugaParameters, fortnight: u64) -> NaksatraPosition {
    let total = &Rational::from_integer(fortnight) * &p.sun_rate();
    NaksatraPosition::from_total(&total, p.naksatra_count)
}

/// Ordered nakṣatra names, origin first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaksatraNameTable {
    names: Vec<String>,
}

impl NaksatraNameTable {
    /// Builds a table, requiring exactly `expected_len` unique names.
    pub fn new(names: Vec<String>, expected_len: u64) -> Result<Self, Error> {
        if names.len() as u64 != expected_len {
            return Err(Error::InvalidNameTable(format!(
                "expected {} names, got {}",
                expected_len,
                names.len()
            )));
        }
        for (i, a) in names.iter().enumerate() {
            if a.trim().is_empty() {
                return Err(Error::InvalidNameTable(format!("empty name at line {}", i + 1)));
            }
            if names[..i].contains(a) {
                return Err(Error::InvalidNameTable(format!("duplicate name {a:?}")));
            }
        }
        Ok(Self { names })
    }

    /// Parses a UTF-8 names file: one name per line, blank lines ignored.
    pub fn from_text(text: &str, expected_len: u64) -> Result<Self, Error> {
        let names = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(String::from)
            .collect();
        Self::new(names, expected_len)
    }

    /// The 27 default names with Dhaniṣṭhā at the origin.
    pub fn default_table() -> Self {
        Self::from_text(DEFAULT_NAKSATRA_NAMES, 27).expect("bundled table is valid")
    }

    pub fn origin_name(&self) -> &str {
        &self.names[0]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, segment: u64) -> &str {
        &self.names[segment as usize % self.names.len()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// Name of the segment a position falls in.
pub fn naksatra_name<'t>(pos: &NaksatraPosition, table: &'t NaksatraNameTable) -> &'t str {
    table.name(pos.segment())
}

/// One row of the yuga calendar table. Fortnight ordinals are 1-based for
/// display; row `n` holds the positions after `n` fortnights of motion.
#[derive(Debug, Clone, Serialize)]
pub struct FortnightRecord {
    pub fortnight: u64,
    pub moon_segment: u64,
    pub moon_progress: String,
    pub moon_mixed: String,
    pub moon_name: String,
    pub sun_segment: u64,
    pub sun_progress: String,
    pub sun_mixed: String,
    pub sun_name: String,
}

fn record(p: &YugaParameters, table: &NaksatraNameTable, fortnight: u64) -> FortnightRecord {
    let moon = moon_position(p, fortnight);
    let sun = sun_position(p, fortnight);
    FortnightRecord {
        fortnight,
        moon_segment: moon.segment(),
        moon_progress: moon.progress().to_string(),
        moon_mixed: moon.total().to_mixed().to_string(),
        moon_name: naksatra_name(&moon, table).to_string(),
        sun_segment: sun.segment(),
        sun_progress: sun.progress().to_string(),
        sun_mixed: sun.total().to_mixed().to_string(),
        sun_name: naksatra_name(&sun, table).to_string(),
    }
}

/// The full per-fortnight calendar: records 1..=fortnights, the last of
/// which closes the cycle back at the origin.
pub fn yuga_table(p: &YugaParameters, table: &NaksatraNameTable) -> Vec<FortnightRecord> {
    (1..=p.fortnights).map(|n| record(p, table, n)).collect()
}

/// Stable JSON rendering of a table, the schema the CLI and FFI both
/// expose.
pub fn table_to_json(rows: &[FortnightRecord]) -> Result<String, serde_json::Error> {
    serde_json::to_string_pretty(rows)
}

/// Where the extra months go within the yuga.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntercalaryPolicy {
    /// One intercalation at the end of each equal division of the yuga
    /// (after months 31 and 62 for the defaults).
    EndOfHalfYuga,
    /// All intercalations stacked at the end of the cycle.
    EndOfYugaOnly,
    /// Caller-supplied month ordinals, validated against the parameters.
    Explicit(Vec<u64>),
}

/// Month ordinals (1-based, within `[1, synodic_months]`) after which an
/// intercalary month is inserted. Count is forced by the parameters; the
/// placement is pure policy.
pub fn intercalary_schedule(
    p: &YugaParameters,
    policy: &IntercalaryPolicy,
) -> Result<Vec<u64>, Error> {
    let count = p.intercalary_count();
    match policy {
        IntercalaryPolicy::EndOfHalfYuga => Ok((1..=count)
            .map(|i| i * p.synodic_months / count.max(1))
            .collect()),
        IntercalaryPolicy::EndOfYugaOnly => {
            Ok((p.synodic_months - count + 1..=p.synodic_months).collect())
        }
        IntercalaryPolicy::Explicit(ordinals) => {
            if ordinals.len() as u64 != count {
                return Err(Error::InvalidSchedule(format!(
                    "expected {} ordinals, got {}",
                    count,
                    ordinals.len()
                )));
            }
            if !ordinals.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidSchedule(
                    "ordinals must be strictly increasing".into(),
                ));
            }
            if ordinals
                .iter()
                .any(|&m| m == 0 || m > p.synodic_months)
            {
                return Err(Error::InvalidSchedule(format!(
                    "ordinals must lie in [1, {}]",
                    p.synodic_months
                )));
            }
            Ok(ordinals.clone())
        }
    }
}

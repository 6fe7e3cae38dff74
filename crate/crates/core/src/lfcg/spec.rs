use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, Place};
use crate::quadfield::QuadField;
use crate::quatalg::{b_p_infinity, QuaternionAlgebra};

type Q = BigRational;

/// Center of a simple factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Center {
    Rational,
    Quadratic(QuadField),
}

impl Center {
    pub fn real_places(&self) -> u8 {
        match self {
            Center::Rational => 1,
            Center::Quadratic(k) => k.real_places(),
        }
    }

    pub fn disc(&self) -> Option<i64> {
        match self {
            Center::Rational => None,
            Center::Quadratic(k) => Some(k.disc()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorKind {
    /// `(a, b | ℚ)`.
    Quaternion { a: Q, b: Q },
    /// `M_n` over the center.
    Matrix { degree: usize },
    /// A quaternion algebra given by its ramified places. Finite places are
    /// labelled by the rational primes below them; real places by index.
    Ramified { finite: Vec<u64>, real: Vec<u8> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleFactorSpec {
    pub center: Center,
    pub kind: FactorKind,
}

impl SimpleFactorSpec {
    pub fn validate(&self) -> Result<()> {
        match (&self.center, &self.kind) {
            (Center::Quadratic(_), FactorKind::Quaternion { .. }) => Err(Error::UnsupportedCenter(
                "quaternion(a, b) factors need center Q; give ramification data instead".into(),
            )),
            (_, FactorKind::Quaternion { a, b }) if a.is_zero() || b.is_zero() => Err(Error::Zero),
            (_, FactorKind::Matrix { degree: 0 }) => Err(Error::InvalidSpec("matrix degree 0".into())),
            (c, FactorKind::Ramified { finite, real }) => {
                for &p in finite {
                    if !is_prime(p)? {
                        return Err(Error::InvalidSpec(format!("{p} is not prime")));
                    }
                }
                if *c == Center::Rational {
                    let mut f = finite.clone();
                    f.sort_unstable();
                    f.dedup();
                    if f.len() != finite.len() {
                        return Err(Error::InvalidSpec("repeated ramified prime".into()));
                    }
                }
                let mut r = real.clone();
                r.sort_unstable();
                r.dedup();
                if r.len() != real.len() || r.iter().any(|&i| i >= c.real_places()) {
                    return Err(Error::InvalidSpec(format!(
                        "real places {real:?} not distinct places of a center with {} real places",
                        c.real_places()
                    )));
                }
                if (finite.len() + real.len()) % 2 != 0 {
                    return Err(Error::InvalidSpec("ramification set has odd cardinality".into()));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Real places of the center at which the factor is a division algebra.
    pub fn ramified_real(&self) -> Result<Vec<u8>> {
        Ok(match &self.kind {
            FactorKind::Matrix { .. } => Vec::new(),
            FactorKind::Ramified { real, .. } => {
                let mut r = real.clone();
                r.sort_unstable();
                r
            }
            FactorKind::Quaternion { a, b } => {
                let alg = QuaternionAlgebra::new(a.clone(), b.clone())?;
                if alg.is_definite() {
                    vec![0]
                } else {
                    Vec::new()
                }
            }
        })
    }
}

/// `A = ∏ Aᵢ` with each `Aᵢ` central simple over `ℚ` or a quadratic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparableAlgebraSpec {
    factors: Vec<SimpleFactorSpec>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawNumber {
    Int(i64),
    Text(String),
}

impl RawNumber {
    fn to_q(&self) -> Result<Q> {
        match self {
            RawNumber::Int(n) => Ok(Q::from_integer((*n).into())),
            RawNumber::Text(s) => Q::from_str(s.trim()).map_err(|_| Error::InvalidSpec(format!("bad rational {s:?}"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum RawKind {
    Quaternion {
        a: RawNumber,
        b: RawNumber,
    },
    Matrix {
        degree: usize,
    },
    Ramified {
        #[serde(default)]
        finite: Vec<u64>,
        #[serde(default)]
        real: Vec<u8>,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFactor {
    #[serde(default)]
    center_disc: Option<i64>,
    kind: RawKind,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    factors: Vec<RawFactor>,
}

impl SeparableAlgebraSpec {
    pub fn new(factors: Vec<SimpleFactorSpec>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidSpec("no factors".into()));
        }
        for f in &factors {
            f.validate()?;
        }
        Ok(SeparableAlgebraSpec { factors })
    }

    /// Parses documents like
    /// `{"factors": [{"center_disc": 12, "kind": {"type": "ramified", "real": [0, 1]}}]}`.
    /// A missing `center_disc` means the center is ℚ.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawSpec = serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        let mut factors = Vec::new();
        for f in raw.factors {
            let center = match f.center_disc {
                None => Center::Rational,
                Some(d) => Center::Quadratic(QuadField::from_disc(d)?),
            };
            let kind = match f.kind {
                RawKind::Quaternion { a, b } => FactorKind::Quaternion { a: a.to_q()?, b: b.to_q()? },
                RawKind::Matrix { degree } => FactorKind::Matrix { degree },
                RawKind::Ramified { finite, real } => FactorKind::Ramified { finite, real },
            };
            factors.push(SimpleFactorSpec { center, kind });
        }
        Self::new(factors)
    }

    /// The quaternion algebra ramified exactly at `{p, ∞}`.
    pub fn b_p_infinity(p: u64) -> Result<Self> {
        let alg = b_p_infinity(p)?;
        Self::quaternion(&alg)
    }

    pub fn quaternion(alg: &QuaternionAlgebra) -> Result<Self> {
        Self::new(vec![SimpleFactorSpec {
            center: Center::Rational,
            kind: FactorKind::Quaternion { a: alg.a().clone(), b: alg.b().clone() },
        }])
    }

    pub fn factors(&self) -> &[SimpleFactorSpec] {
        &self.factors
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorEichler {
    pub index: usize,
    pub holds: bool,
    /// Archimedean places where the completion is not a division algebra.
    pub split_places: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EichlerReport {
    pub holds: bool,
    pub factors: Vec<FactorEichler>,
}

/// Eichler condition relative to the archimedean places: every factor must
/// have some archimedean completion that is not a division algebra.
///
/// A degree-1 matrix factor is the center itself, a field at every place,
/// so it never satisfies the condition.
pub fn eichler_condition(a: &SeparableAlgebraSpec) -> Result<EichlerReport> {
    let mut factors = Vec::new();
    for (index, f) in a.factors.iter().enumerate() {
        let mut split_places = Vec::new();
        let archimedean: Vec<String> = match f.center {
            Center::Rational => vec![Place::INFINITY.to_string()],
            Center::Quadratic(k) if k.real_places() == 2 => vec!["real0".into(), "real1".into()],
            Center::Quadratic(_) => vec!["complex".into()],
        };
        match &f.kind {
            FactorKind::Matrix { degree } => {
                if *degree >= 2 {
                    split_places = archimedean;
                }
            }
            _ => {
                let ram = f.ramified_real()?;
                for (i, name) in archimedean.into_iter().enumerate() {
                    let real = f.center.real_places() > 0;
                    // complex places never ramify
                    if !real || !ram.contains(&(i as u8)) {
                        split_places.push(name);
                    }
                }
            }
        }
        factors.push(FactorEichler {
            index,
            holds: !split_places.is_empty(),
            split_places,
        });
    }
    Ok(EichlerReport {
        holds: factors.iter().all(|f| f.holds),
        factors,
    })
}

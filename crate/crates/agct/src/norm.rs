//! Group power-mean norms `‖v‖_{L,q} = ((1/L) Σ_ℓ |v_ℓ|^q)^{1/q}`.
//!
//! Both the distance aggregation `M_k{·}` and the radius aggregation `R_r{·}`
//! used by the selection rule are this norm with different exponents, so a
//! single function serves both roles. `q = ∞` gives the maximum.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{AgctError, Result};

/// A norm exponent in `[1, ∞]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Exponent {
    Finite(f64),
    Inf,
}

impl Exponent {
    pub fn validate(self) -> Result<Self> {
        match self {
            Exponent::Finite(q) if !(q >= 1.0) || !q.is_finite() => Err(AgctError::BadExponent(q)),
            other => Ok(other),
        }
    }

    pub fn is_inf(self) -> bool {
        matches!(self, Exponent::Inf)
    }

    /// Numeric value, with `∞` mapped to `f64::INFINITY`.
    pub fn value(self) -> f64 {
        match self {
            Exponent::Finite(q) => q,
            Exponent::Inf => f64::INFINITY,
        }
    }
}

impl From<f64> for Exponent {
    fn from(q: f64) -> Self {
        if q.is_infinite() {
            Exponent::Inf
        } else {
            Exponent::Finite(q)
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(q) => write!(f, "{q}"),
            Exponent::Inf => write!(f, "inf"),
        }
    }
}

impl FromStr for Exponent {
    type Err = AgctError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "Inf" | "INF" | "infinity" | "∞" => Ok(Exponent::Inf),
            other => {
                let q: f64 = other
                    .parse()
                    .map_err(|_| AgctError::Config(format!("bad exponent `{other}`")))?;
                Exponent::from(q).validate()
            }
        }
    }
}

/// Power mean of `|v_ℓ|` with exponent `q`; the max when `q = ∞`.
///
/// The result never exceeds `max_ℓ |v_ℓ|`, and a constant vector is returned
/// unchanged for every exponent.
pub fn group_norm(values: &[f64], q: Exponent) -> Result<f64> {
    if values.is_empty() {
        return Err(AgctError::EmptyVector);
    }
    match q.validate()? {
        Exponent::Inf => Ok(values.iter().fold(0.0_f64, |m, v| m.max(v.abs()))),
        Exponent::Finite(q) if q == 1.0 => {
            Ok(values.iter().map(|v| v.abs()).sum::<f64>() / values.len() as f64)
        }
        Exponent::Finite(q) => {
            let mean = values.iter().map(|v| v.abs().powf(q)).sum::<f64>() / values.len() as f64;
            Ok(mean.powf(1.0 / q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn constant_vector_is_fixed_point() {
        let v = [0.5, 0.5, 0.5];
        assert!((group_norm(&v, Exponent::Finite(2.0)).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn inf_is_max() {
        assert_eq!(group_norm(&[1.0, 0.0], Exponent::Inf).unwrap(), 1.0);
    }

    #[test]
    fn rms_of_three_four() {
        // ((9 + 16)/2)^(1/2) = sqrt(12.5), checked against a direct evaluation
        let direct = (12.5_f64).sqrt();
        let got = group_norm(&[3.0, 4.0], Exponent::Finite(2.0)).unwrap();
        assert!((got - direct).abs() < 1e-12);
        assert!((got - 3.535_533_905_932_738).abs() < 1e-12);
    }

    #[test]
    fn empty_vector_errors() {
        assert!(group_norm(&[], Exponent::Inf).is_err());
        assert!(group_norm(&[1.0], Exponent::Finite(0.5)).is_err());
    }

    #[test]
    fn singleton_degenerates_to_abs() {
        for q in [Exponent::Finite(1.0), Exponent::Finite(7.3), Exponent::Inf] {
            assert!((group_norm(&[-0.25], q).unwrap() - 0.25).abs() < 1e-15);
        }
    }

    proptest! {
        // Power-mean inequality: the norm is nondecreasing in q.
        #[test]
        fn monotone_in_exponent(
            v in proptest::collection::vec(0.0_f64..1.0, 1..12),
            q1 in 1.0_f64..20.0,
            q2 in 1.0_f64..20.0,
        ) {
            let (lo, hi) = if q1 <= q2 { (q1, q2) } else { (q2, q1) };
            let a = group_norm(&v, Exponent::Finite(lo)).unwrap();
            let b = group_norm(&v, Exponent::Finite(hi)).unwrap();
            let c = group_norm(&v, Exponent::Inf).unwrap();
            prop_assert!(a <= b + 1e-12);
            prop_assert!(b <= c + 1e-12);
        }
    }
}

use serde::{Deserialize, Serialize};

use super::{LaurentQ, PolyTQ};
use crate::error::{Error, Result};

/// A rational series `numerator / prod_{i=0}^{order} (1 - t q^i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatSeries {
    numerator: PolyTQ,
    order: u32,
}

impl RatSeries {
    /// Rejects numerators of `t`-degree above `order + 1`.
    pub fn new(numerator: PolyTQ, order: u32) -> Result<Self> {
        if let Some(deg) = numerator.degree() {
            if deg > order + 1 {
                return Err(Error::InvalidArgument(format!(
                    "numerator t-degree {deg} exceeds order + 1 = {}",
                    order + 1
                )));
            }
        }
        Ok(Self { numerator, order })
    }

    pub fn numerator(&self) -> &PolyTQ {
        &self.numerator
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// The denominator `prod_{i=0}^{order} (1 - t q^i)` as a polynomial.
    pub fn denominator(&self) -> PolyTQ {
        (0..=self.order as i64)
            .map(|i| PolyTQ::one() - PolyTQ::monomial(1, LaurentQ::q_pow(i)))
            .fold(PolyTQ::one(), |acc, f| acc * f)
    }

    /// Coefficients of `t^0 .. t^up_to` in the power-series expansion.
    pub fn expand(&self, up_to: usize) -> Vec<LaurentQ> {
        let mut coeffs: Vec<LaurentQ> = (0..=up_to as u32).map(|k| self.numerator.coeff(k)).collect();
        // divide by each (1 - t q^i) in turn: a'_m = a_m + q^i a'_{m-1}
        for i in 0..=self.order as i64 {
            for m in 1..coeffs.len() {
                let prev = coeffs[m - 1].shift(i);
                coeffs[m] += &prev;
            }
        }
        coeffs
    }
}

/// Shorthand for [`RatSeries::expand`].
pub fn expand(series: &RatSeries, up_to: usize) -> Vec<LaurentQ> {
    series.expand(up_to)
}

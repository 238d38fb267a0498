use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{forward_owned, LaurentQ, WireInt};

/// A polynomial in `t` whose coefficients are Laurent polynomials in `q`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PolyTQ {
    coeffs: BTreeMap<u32, LaurentQ>,
}

impl PolyTQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(LaurentQ::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, LaurentQ::one())
    }

    pub fn constant(c: LaurentQ) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(t_exp: u32, c: LaurentQ) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(t_exp, c);
        }
        Self { coeffs }
    }

    /// `coeffs[k]` is the coefficient of `t^k`.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = LaurentQ>) -> Self {
        let mut out = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            out.add_coeff(k as u32, &c);
        }
        out
    }

    /// Builds from `(t_exp, q_exp, coeff)` triples; repeated keys are summed.
    pub fn from_triples<I, C>(triples: I) -> Self
    where
        I: IntoIterator<Item = (u32, i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (t, q, c) in triples {
            out.add_coeff(t, &LaurentQ::monomial(q, c));
        }
        out
    }

    fn add_coeff(&mut self, t_exp: u32, c: &LaurentQ) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(t_exp).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&t_exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, t_exp: u32) -> LaurentQ {
        self.coeffs.get(&t_exp).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &LaurentQ)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// `t`-degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn scale(&self, s: &LaurentQ) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.coeffs {
            out.add_coeff(*k, &(c * s));
        }
        out
    }

    /// Multiplies by `t^k`.
    pub fn shift_t(&self, k: u32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Applies `q -> q^{-1}` to every coefficient (`t` untouched).
    pub fn bar_q(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.bar())).collect(),
        }
    }

    /// `t^total * N(1/t, 1/q)`. Panics if `total` is below the `t`-degree.
    pub fn reflect(&self, total: u32) -> Self {
        if let Some(deg) = self.degree() {
            assert!(deg <= total, "reflection degree {total} below t-degree {deg}");
        }
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (total - k, c.bar())).collect(),
        }
    }

    /// Evaluates at `t = value` (Horner).
    pub fn eval(&self, value: &LaurentQ) -> LaurentQ {
        let Some(deg) = self.degree() else {
            return LaurentQ::zero();
        };
        let mut acc = LaurentQ::zero();
        for k in (0..=deg).rev() {
            acc = &acc * value;
            if let Some(c) = self.coeffs.get(&k) {
                acc += c;
            }
        }
        acc
    }

    /// Specialization `q = 1`, as integer coefficients of `t^0..t^deg`.
    pub fn eval_q_at_one(&self) -> Vec<BigInt> {
        let len = self.degree().map_or(0, |d| d as usize + 1);
        let mut out = vec![BigInt::default(); len];
        for (k, c) in &self.coeffs {
            out[*k as usize] = c.eval_at_one();
        }
        out
    }

    /// True when every coefficient is an honest polynomial in `q`.
    pub fn is_polynomial_in_q(&self) -> bool {
        self.coeffs.values().all(LaurentQ::is_polynomial)
    }

    /// Flattened `(t_exp, q_exp, coeff)` triples in sorted order.
    pub fn triples(&self) -> Vec<(u32, i64, BigInt)> {
        self.coeffs
            .iter()
            .flat_map(|(k, c)| c.terms().map(move |(e, v)| (*k, e, v.clone())))
            .collect()
    }
}

impl fmt::Debug for PolyTQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PolyTQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})t")?,
                k => write!(f, "({c})t^{k}")?,
            }
        }
        Ok(())
    }
}

impl From<LaurentQ> for PolyTQ {
    fn from(c: LaurentQ) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a PolyTQ> for &PolyTQ {
    type Output = PolyTQ;
    fn add(self, rhs: &'a PolyTQ) -> PolyTQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a PolyTQ> for &PolyTQ {
    type Output = PolyTQ;
    fn sub(self, rhs: &'a PolyTQ) -> PolyTQ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a PolyTQ> for &PolyTQ {
    type Output = PolyTQ;
    fn mul(self, rhs: &'a PolyTQ) -> PolyTQ {
        let mut out = PolyTQ::zero();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &rhs.coeffs {
                out.add_coeff(ka + kb, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &PolyTQ {
    type Output = PolyTQ;
    fn neg(self) -> PolyTQ {
        PolyTQ {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for PolyTQ {
    type Output = PolyTQ;
    fn neg(self) -> PolyTQ {
        -&self
    }
}

impl<'a> AddAssign<&'a PolyTQ> for PolyTQ {
    fn add_assign(&mut self, rhs: &'a PolyTQ) {
        for (k, c) in &rhs.coeffs {
            self.add_coeff(*k, c);
        }
    }
}

impl<'a> SubAssign<&'a PolyTQ> for PolyTQ {
    fn sub_assign(&mut self, rhs: &'a PolyTQ) {
        for (k, c) in &rhs.coeffs {
            self.add_coeff(*k, &-c);
        }
    }
}

impl<'a> MulAssign<&'a PolyTQ> for PolyTQ {
    fn mul_assign(&mut self, rhs: &'a PolyTQ) {
        *self = &*self * rhs;
    }
}

forward_owned!(PolyTQ, Add add AddAssign add_assign, Sub sub SubAssign sub_assign, Mul mul MulAssign mul_assign);

impl Serialize for PolyTQ {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<(u32, i64, String)> = self
            .triples()
            .into_iter()
            .map(|(t, q, c)| (t, q, c.to_string()))
            .collect();
        triples.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolyTQ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(u32, i64, WireInt)> = Vec::deserialize(deserializer)?;
        let mut seen = std::collections::BTreeSet::new();
        let mut triples = Vec::with_capacity(raw.len());
        for (t, q, c) in raw {
            if !seen.insert((t, q)) {
                return Err(serde::de::Error::custom(format!("duplicate term t^{t} q^{q}")));
            }
            triples.push((t, q, c.into_bigint()?));
        }
        Ok(PolyTQ::from_triples(triples))
    }
}

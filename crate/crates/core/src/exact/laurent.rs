use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A Laurent polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored, so two values are equal exactly when
/// their term maps are equal.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentQ {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// `q^exp`
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, BigInt::one())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    /// Dense constructor: `coeffs[i]` is the coefficient of `q^i`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        Self::from_terms(coeffs.iter().cloned().enumerate().map(|(i, c)| (i as i64, c)))
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no exponent is negative (an honest polynomial in `q`).
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// The involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = abs.is_one();
            match *e {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{abs}q")?,
                e if unit => write!(f, "q^{e}")?,
                e => write!(f, "{abs}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl From<i64> for LaurentQ {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentQ {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentQ> for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &'a LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentQ> for &LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &'a LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentQ> for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &'a LaurentQ) -> LaurentQ {
        let mut out = LaurentQ::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(mut self) -> LaurentQ {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'a> AddAssign<&'a LaurentQ> for LaurentQ {
    fn add_assign(&mut self, rhs: &'a LaurentQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a LaurentQ> for LaurentQ {
    fn sub_assign(&mut self, rhs: &'a LaurentQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<'a> MulAssign<&'a LaurentQ> for LaurentQ {
    fn mul_assign(&mut self, rhs: &'a LaurentQ) {
        *self = &*self * rhs;
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident $atr:ident $am:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty { (&self).$m(rhs) }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { self.$m(&rhs) }
        }
        impl $atr<$ty> for $ty {
            fn $am(&mut self, rhs: $ty) { self.$am(&rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(LaurentQ, Add add AddAssign add_assign, Sub sub SubAssign sub_assign, Mul mul MulAssign mul_assign);

impl std::iter::Sum for LaurentQ {
    fn sum<I: Iterator<Item = LaurentQ>>(iter: I) -> Self {
        iter.fold(LaurentQ::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for LaurentQ {
    fn product<I: Iterator<Item = LaurentQ>>(iter: I) -> Self {
        iter.fold(LaurentQ::one(), |acc, x| acc * x)
    }
}

/// Integer coefficient on the wire: a decimal string, or a plain JSON
/// integer when read back from hand-written input.
#[derive(Deserialize)]
#[serde(untagged)]
pub(crate) enum WireInt {
    Str(String),
    Int(i64),
}

impl WireInt {
    pub(crate) fn into_bigint<E: serde::de::Error>(self) -> Result<BigInt, E> {
        match self {
            WireInt::Int(v) => Ok(BigInt::from(v)),
            WireInt::Str(s) => s
                .trim()
                .parse::<BigInt>()
                .map_err(|_| E::custom(format!("invalid integer coefficient {s:?}"))),
        }
    }
}

impl Serialize for LaurentQ {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, String)> = self.terms.iter().map(|(e, c)| (*e, c.to_string())).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentQ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i64, WireInt)> = Vec::deserialize(deserializer)?;
        let mut seen = std::collections::BTreeSet::new();
        let mut out = LaurentQ::zero();
        for (e, c) in pairs {
            if !seen.insert(e) {
                return Err(serde::de::Error::custom(format!("duplicate q exponent {e}")));
            }
            out.add_term(e, c.into_bigint()?);
        }
        Ok(out)
    }
}

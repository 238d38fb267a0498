use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{forward_owned, WireInt};

/// A bivariate integer polynomial in `x` and `y`; holds Tutte polynomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPolyXY {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl BiPolyXY {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn monomial(x_exp: u32, y_exp: u32, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(x_exp, y_exp, coeff.into());
        out
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (i, j, c) in terms {
            out.add_term(i, j, c.into());
        }
        out
    }

    fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((i, j)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Iterates `(x_exp, y_exp, coeff)` in sorted order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> + '_ {
        self.coeffs.iter().map(|((i, j), c)| (*i, *j, c))
    }

    pub fn coeff(&self, x_exp: u32, y_exp: u32) -> BigInt {
        self.coeffs.get(&(x_exp, y_exp)).cloned().unwrap_or_default()
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|(i, _)| *i).max()
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|(_, j)| *j).max()
    }

    pub fn all_positive(&self) -> bool {
        self.coeffs.values().all(|c| c.is_positive())
    }

    pub fn mul_xy(&self, a: u32, b: u32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|((i, j), c)| ((i + a, j + b), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .map(|((i, j), c)| c * num_traits::pow(x.clone(), *i as usize) * num_traits::pow(y.clone(), *j as usize))
            .sum()
    }

    /// Substitutes polynomials for `x` and `y`.
    pub fn compose(&self, x: &BiPolyXY, y: &BiPolyXY) -> BiPolyXY {
        let mut out = Self::zero();
        for ((i, j), c) in &self.coeffs {
            let term = x.pow(*i) * y.pow(*j);
            out += term.scale(c);
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in &self.coeffs {
            out.add_term(*i, *j, c * s);
        }
        out
    }
}

impl fmt::Debug for BiPolyXY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BiPolyXY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest total degree first, the way Tutte polynomials are usually written
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by(|a, b| (b.0 .0 + b.0 .1, b.0).cmp(&(a.0 .0 + a.0 .1, a.0)));
        for (n, ((i, j), c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut mono = String::new();
            for (var, e) in [("x", *i), ("y", *j)] {
                match e {
                    0 => {}
                    1 => mono.push_str(var),
                    e => mono.push_str(&format!("{var}^{e}")),
                }
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}{mono}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a BiPolyXY> for &BiPolyXY {
    type Output = BiPolyXY;
    fn add(self, rhs: &'a BiPolyXY) -> BiPolyXY {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a BiPolyXY> for &BiPolyXY {
    type Output = BiPolyXY;
    fn sub(self, rhs: &'a BiPolyXY) -> BiPolyXY {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a BiPolyXY> for &BiPolyXY {
    type Output = BiPolyXY;
    fn mul(self, rhs: &'a BiPolyXY) -> BiPolyXY {
        let mut out = BiPolyXY::zero();
        for ((ia, ja), ca) in &self.coeffs {
            for ((ib, jb), cb) in &rhs.coeffs {
                out.add_term(ia + ib, ja + jb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &BiPolyXY {
    type Output = BiPolyXY;
    fn neg(self) -> BiPolyXY {
        BiPolyXY {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl<'a> AddAssign<&'a BiPolyXY> for BiPolyXY {
    fn add_assign(&mut self, rhs: &'a BiPolyXY) {
        for ((i, j), c) in &rhs.coeffs {
            self.add_term(*i, *j, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a BiPolyXY> for BiPolyXY {
    fn sub_assign(&mut self, rhs: &'a BiPolyXY) {
        for ((i, j), c) in &rhs.coeffs {
            self.add_term(*i, *j, -c);
        }
    }
}

impl<'a> MulAssign<&'a BiPolyXY> for BiPolyXY {
    fn mul_assign(&mut self, rhs: &'a BiPolyXY) {
        *self = &*self * rhs;
    }
}

forward_owned!(BiPolyXY, Add add AddAssign add_assign, Sub sub SubAssign sub_assign, Mul mul MulAssign mul_assign);

impl Serialize for BiPolyXY {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<(u32, u32, String)> =
            self.coeffs.iter().map(|((i, j), c)| (*i, *j, c.to_string())).collect();
        triples.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiPolyXY {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(u32, u32, WireInt)> = Vec::deserialize(deserializer)?;
        let mut seen = std::collections::BTreeSet::new();
        let mut out = BiPolyXY::zero();
        for (i, j, c) in raw {
            if !seen.insert((i, j)) {
                return Err(serde::de::Error::custom(format!("duplicate term x^{i} y^{j}")));
            }
            out.add_term(i, j, c.into_bigint()?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_eval() {
        let t = BiPolyXY::from_terms([(2, 0, 1), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(t.to_string(), "x^2 + x + y");
        assert_eq!(t.eval(&2.into(), &1.into()), BigInt::from(7));
        assert_eq!(t.x_degree(), Some(2));
        assert_eq!(t.y_degree(), Some(1));
    }

    #[test]
    fn compose_substitutes() {
        // (x + y) with x -> x + 1, y -> y^2
        let p = BiPolyXY::x() + BiPolyXY::y();
        let r = p.compose(&(BiPolyXY::x() + BiPolyXY::one()), &BiPolyXY::y().pow(2));
        assert_eq!(r, BiPolyXY::from_terms([(1, 0, 1), (0, 0, 1), (0, 2, 1)]));
    }
}

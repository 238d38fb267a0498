//! Facet description of `Z = A [0,1]^n` and brute-force lattice point
//! enumeration of its dilates.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{guard, Error, Result};
use crate::exact::BiPolyXY;
use crate::matroid::RealizedMatroid;

/// Largest bounding box scanned by [`lattice_count`].
pub const MAX_BOX_POINTS: u128 = 10_000_000;

/// The pair of inequalities `alpha_min <= <c, x> <= alpha_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub c: Vec<BigInt>,
    pub alpha_min: BigInt,
    pub alpha_max: BigInt,
}

impl Facet {
    pub fn width(&self) -> BigInt {
        &self.alpha_max - &self.alpha_min
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    pub facets: Vec<Facet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePointSet {
    pub points: BTreeSet<Vec<i64>>,
    pub dilate: u32,
    pub interior: bool,
}

impl LatticePointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// One facet pair per cocircuit vector.
pub fn h_rep(m: &RealizedMatroid) -> Result<HRep> {
    if m.d() == 0 {
        return Err(Error::InvalidArgument("facet description needs d >= 1".into()));
    }
    m.require_unimodular()?;
    let mut facets = Vec::with_capacity(m.cocircuits().len());
    for cv in m.cocircuits() {
        let alpha_min: BigInt = cv.v.iter().filter(|x| x.is_negative()).sum();
        let alpha_max: BigInt = cv.v.iter().filter(|x| x.is_positive()).sum();
        let f = Facet { c: cv.c.clone(), alpha_min, alpha_max };
        if f.width() != BigInt::from(cv.support_size) {
            return Err(Error::NotUnimodular(format!(
                "facet direction {:?} has width {} but support size {}",
                cv.c,
                f.width(),
                cv.support_size
            )));
        }
        facets.push(f);
    }
    Ok(HRep { facets })
}

/// Lattice points of `mZ` (or of its interior), found by scanning the
/// bounding box and testing the facet inequalities.
pub fn lattice_count(m: &RealizedMatroid, dilate: u32, interior: bool) -> Result<(LatticePointSet, u64)> {
    if dilate == 0 {
        return Err(Error::InvalidArgument("dilate must be at least 1".into()));
    }
    if m.d() == 0 {
        let points = BTreeSet::from([Vec::new()]);
        return Ok((LatticePointSet { points, dilate, interior }, 1));
    }
    let hrep = h_rep(m)?;
    let scale = BigInt::from(dilate);
    let mut lo = Vec::with_capacity(m.d());
    let mut hi = Vec::with_capacity(m.d());
    let mut volume: u128 = 1;
    for row in m.realization().rows() {
        let a: BigInt = row.iter().filter(|x| x.is_negative()).sum::<BigInt>() * &scale;
        let b: BigInt = row.iter().filter(|x| x.is_positive()).sum::<BigInt>() * &scale;
        let span = (&b - &a + 1u32).to_u128().unwrap_or(u128::MAX);
        volume = volume.saturating_mul(span);
        guard("lattice box volume <= 10^7", volume, MAX_BOX_POINTS)?;
        lo.push(a.to_i64().expect("guarded"));
        hi.push(b.to_i64().expect("guarded"));
    }
    let facets: Vec<(Vec<i64>, i64, i64)> = hrep
        .facets
        .iter()
        .map(|f| {
            let c = f.c.iter().map(|x| x.to_i64().expect("unimodular facet normal")).collect();
            let lo = (&f.alpha_min * &scale).to_i64().expect("guarded");
            let hi = (&f.alpha_max * &scale).to_i64().expect("guarded");
            (c, lo, hi)
        })
        .collect();
    let inside = |x: &[i64]| {
        facets.iter().all(|(c, a, b)| {
            let s: i64 = c.iter().zip(x).map(|(ci, xi)| ci * xi).sum();
            if interior {
                *a < s && s < *b
            } else {
                *a <= s && s <= *b
            }
        })
    };
    let mut points = BTreeSet::new();
    let mut x = lo.clone();
    loop {
        if inside(&x) {
            points.insert(x.clone());
        }
        let mut j = 0;
        loop {
            if j == x.len() {
                let count = points.len() as u64;
                return Ok((LatticePointSet { points, dilate, interior }, count));
            }
            if x[j] < hi[j] {
                x[j] += 1;
                break;
            }
            x[j] = lo[j];
            j += 1;
        }
    }
}

/// `m^d * T((m + 1) / m, 1)`, or with `m - 1` for the interior, evaluated
/// with the denominator cleared.
pub fn tutte_lattice_count(t: &BiPolyXY, d: usize, dilate: u32, interior: bool) -> BigInt {
    let m = BigInt::from(dilate);
    let x_num = if interior { &m - 1u32 } else { &m + 1u32 };
    t.terms()
        .map(|(i, _, c)| c * num_traits::pow(x_num.clone(), i as usize) * num_traits::pow(m.clone(), d - i as usize))
        .fold(BigInt::zero(), |acc, v| acc + v)
}

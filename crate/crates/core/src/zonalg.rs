//! Hilbert functions of external and internal zonotopal algebras, computed
//! by exact linear algebra degree by degree.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{guard, Error, Result};
use crate::exact::{BiPolyXY, LaurentQ};
use crate::gehrhart::Check;
use crate::linalg::{Echelon, SparseRow};
use crate::matroid::{tutte, RealizedMatroid};

pub const MAX_MONOMIALS: u128 = 50_000;

/// Power-of-linear-form generators `(sum_i c_i x_i)^e` in `variables`
/// unknowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdealSpec {
    pub variables: usize,
    pub generators: Vec<(Vec<BigInt>, u32)>,
    pub degree_cap: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFunction {
    /// Trailing zeros trimmed; empty for the zero ring.
    pub dims: Vec<u64>,
}

impl HilbertFunction {
    pub fn as_laurent(&self) -> LaurentQ {
        LaurentQ::from_terms(self.dims.iter().enumerate().map(|(k, &v)| (k as i64, BigInt::from(v))))
    }

    pub fn total(&self) -> u64 {
        self.dims.iter().sum()
    }
}

fn spec(m: &RealizedMatroid, external: bool) -> Result<GradedIdealSpec> {
    if m.d() == 0 {
        return Err(Error::InvalidArgument("zonotopal algebras need d >= 1".into()));
    }
    let generators = m
        .cocircuits()
        .iter()
        .map(|cv| {
            let e = if external { cv.support_size + 1 } else { cv.support_size - 1 };
            (cv.c.clone(), e as u32)
        })
        .collect();
    Ok(GradedIdealSpec { variables: m.d(), generators, degree_cap: m.n() as u32 + 1 })
}

/// Generators `v^{m(v)+1}` over the cocircuit vectors.
pub fn external_spec(m: &RealizedMatroid) -> Result<GradedIdealSpec> {
    spec(m, true)
}

/// Generators `v^{m(v)-1}`; a coloop gives an exponent-0 generator and so
/// the zero quotient.
pub fn internal_spec(m: &RealizedMatroid) -> Result<GradedIdealSpec> {
    spec(m, false)
}

/// Degree-`k` monomials in `d` variables as exponent vectors, graded
/// lexicographic (`x_1^k` first).
fn monomials(d: usize, k: u32) -> Vec<Vec<u32>> {
    if d == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut rest in monomials(d - 1, k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Expansion of `(c . x)^e` as exponent vector to coefficient.
fn power_of_form(c: &[BigInt], e: u32) -> BTreeMap<Vec<u32>, BigInt> {
    let d = c.len();
    let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::from([(vec![0; d], BigInt::one())]);
    for _ in 0..e {
        let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (mono, coef) in &acc {
            for (i, ci) in c.iter().enumerate() {
                if ci.is_zero() {
                    continue;
                }
                let mut m = mono.clone();
                m[i] += 1;
                *next.entry(m).or_insert_with(BigInt::zero) += coef * ci;
            }
        }
        next.retain(|_, v| !v.is_zero());
        acc = next;
    }
    acc
}

/// Quotient dimensions degree by degree, stopping at the first degree with
/// zero quotient (every later degree is then zero too) or at the cap.
pub fn hilbert(spec: &GradedIdealSpec) -> Result<HilbertFunction> {
    let d = spec.variables;
    let powers: Vec<(u32, BTreeMap<Vec<u32>, BigInt>)> =
        spec.generators.iter().map(|(c, e)| (*e, power_of_form(c, *e))).collect();
    let mut dims = Vec::new();
    for k in 0..=spec.degree_cap {
        let count = binom(d as u128 + k as u128 - 1, k as u128);
        guard("monomials per degree C(d+k-1,k) <= 5*10^4", count, MAX_MONOMIALS)?;
        let cols = monomials(d, k);
        let index: HashMap<&[u32], usize> = cols.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
        let mut ech = Echelon::new(cols.len());
        'gens: for (e, expansion) in &powers {
            if *e > k {
                continue;
            }
            for mu in monomials(d, k - e) {
                if ech.is_full() {
                    break 'gens;
                }
                let row: SparseRow = expansion
                    .iter()
                    .map(|(m, c)| {
                        let prod: Vec<u32> = m.iter().zip(&mu).map(|(a, b)| a + b).collect();
                        (index[prod.as_slice()], c.clone())
                    })
                    .collect();
                ech.insert(row);
            }
        }
        let dim = (cols.len() - ech.rank()) as u64;
        if dim == 0 {
            break;
        }
        dims.push(dim);
    }
    Ok(HilbertFunction { dims })
}

/// `q^{n-d} T(1+q, q^{-1})` with denominators cleared.
pub fn tutte_external_hilbert(t: &BiPolyXY, n: usize, d: usize) -> LaurentQ {
    let one_plus_q = LaurentQ::from_coeffs(&[1, 1]);
    t.terms()
        .map(|(i, j, c)| one_plus_q.pow(i) * LaurentQ::monomial((n - d) as i64 - j as i64, c.clone()))
        .sum()
}

/// `q^{n-d} T(0, q^{-1})`.
pub fn tutte_internal_hilbert(t: &BiPolyXY, n: usize, d: usize) -> LaurentQ {
    t.terms()
        .filter(|(i, _, _)| *i == 0)
        .map(|(_, j, c)| LaurentQ::monomial((n - d) as i64 - j as i64, c.clone()))
        .sum()
}

/// Compares both zonotopal Hilbert series with their Tutte evaluations.
pub fn verify_zonotopal(m: &RealizedMatroid) -> Result<Check> {
    let name = "zonotopal hilbert series";
    m.require_unimodular()?;
    let t = tutte(m);
    let ext = hilbert(&external_spec(m)?)?.as_laurent();
    let want_ext = tutte_external_hilbert(&t, m.n(), m.d());
    if ext != want_ext {
        return Ok(Check::fail(name, format!("external: algebra {ext}, Tutte {want_ext}")));
    }
    let int = hilbert(&internal_spec(m)?)?.as_laurent();
    let want_int = tutte_internal_hilbert(&t, m.n(), m.d());
    if int != want_int {
        return Ok(Check::fail(name, format!("internal: algebra {int}, Tutte {want_int}")));
    }
    Ok(Check::pass(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hexagon() -> RealizedMatroid {
        RealizedMatroid::from_rows(&[[1, 0, 1], [0, 1, 1]]).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hexagon_specs() {
        let ext = external_spec(&hexagon()).unwrap();
        let mut gens = ext.generators.clone();
        for g in gens.iter_mut() {
            if g.0.iter().find(|x| !x.is_zero()).is_some_and(|x| *x < BigInt::zero()) {
                g.0.iter_mut().for_each(|x| *x = -&*x);
            }
        }
        gens.sort();
        assert_eq!(gens, vec![(big(&[0, 1]), 3), (big(&[1, -1]), 3), (big(&[1, 0]), 3)]);
        assert_eq!(ext.degree_cap, 4);
        assert_eq!(hilbert(&ext).unwrap().dims, vec![1, 2, 3, 1]);
        let int = internal_spec(&hexagon()).unwrap();
        assert!(int.generators.iter().all(|g| g.1 == 1));
        assert_eq!(hilbert(&int).unwrap().dims, vec![1]);
    }

    #[test]
    fn coloop_internal_is_zero() {
        let seg = RealizedMatroid::from_rows(&[[1]]).unwrap();
        let h = hilbert(&internal_spec(&seg).unwrap()).unwrap();
        assert!(h.dims.is_empty());
        assert_eq!(h.as_laurent(), LaurentQ::zero());
    }

    #[test]
    fn single_square() {
        let s = GradedIdealSpec { variables: 1, generators: vec![(big(&[1]), 2)], degree_cap: 5 };
        assert_eq!(hilbert(&s).unwrap().dims, vec![1, 1]);
    }

    #[test]
    fn monomial_order() {
        assert_eq!(monomials(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(monomials(3, 0), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn verify_examples() {
        assert!(verify_zonotopal(&hexagon()).unwrap().passed);
        let sq = RealizedMatroid::from_rows(&[[1, 0], [0, 1]]).unwrap();
        assert!(verify_zonotopal(&sq).unwrap().passed);
        assert_eq!(hilbert(&external_spec(&sq).unwrap()).unwrap().as_laurent(), LaurentQ::from_coeffs(&[1, 2, 1]));
        let u12 = RealizedMatroid::from_rows(&[[1, 1]]).unwrap();
        assert!(verify_zonotopal(&u12).unwrap().passed);
        assert_eq!(hilbert(&external_spec(&u12).unwrap()).unwrap().dims, vec![1, 1, 1]);
        assert_eq!(hilbert(&internal_spec(&u12).unwrap()).unwrap().dims, vec![1]);
    }
}

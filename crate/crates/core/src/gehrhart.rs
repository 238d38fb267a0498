//! Graded lattice point counts, the graded Ehrhart polynomial in the
//! q-binomial basis, graded Ehrhart series and their reciprocity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{q_int, qbinom, LaurentQ, PolyTQ, RatSeries};
use crate::matroid::{tutte, RealizedMatroid};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCount {
    pub value: LaurentQ,
    pub m: u32,
    pub interior: bool,
}

/// A quantum integer-valued polynomial `sum_k f_k(q) [t choose k]_q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Qivp {
    basis_coeffs: Vec<LaurentQ>,
}

impl Qivp {
    /// `coeffs[k]` multiplies the k-th q-binomial basis polynomial. The
    /// degree is `coeffs.len() - 1` even if trailing coefficients vanish.
    pub fn new(coeffs: Vec<LaurentQ>) -> Self {
        assert!(!coeffs.is_empty(), "a QIVP needs at least f_0");
        Self { basis_coeffs: coeffs }
    }

    pub fn basis_coeffs(&self) -> &[LaurentQ] {
        &self.basis_coeffs
    }

    pub fn degree(&self) -> u32 {
        self.basis_coeffs.len() as u32 - 1
    }

    /// Value at `t = [m]_q`.
    pub fn eval(&self, m: u32) -> LaurentQ {
        self.basis_coeffs.iter().enumerate().map(|(k, f)| f * &qbinom(m, k as i64)).sum()
    }

    /// Value of the bar-involuted polynomial at `t = [m]_q`.
    pub fn bar_eval(&self, m: u32) -> LaurentQ {
        assert!(m >= 1, "bar evaluation is taken at positive q-integers");
        self.basis_coeffs
            .iter()
            .enumerate()
            .map(|(k, f)| {
                let k = k as u32;
                let sign = if k % 2 == 0 { 1 } else { -1 };
                f.bar() * LaurentQ::monomial(tri(k), sign) * qbinom(m + k - 1, k as i64)
            })
            .sum()
    }

    /// Numerator of `sum_{m >= 0} f([m]_q) t^m` over the denominator of
    /// order `degree`.
    pub fn numerator(&self) -> PolyTQ {
        let n = self.degree();
        self.basis_coeffs
            .iter()
            .enumerate()
            .map(|(k, f)| {
                let k = k as u32;
                PolyTQ::monomial(k, f.clone()) * tail_product(k + 1, n)
            })
            .fold(PolyTQ::zero(), |acc, p| acc + p)
    }

    /// Numerator of `sum_{m >= 1} bar(f)([m]_q) t^m` over the same
    /// denominator.
    pub fn bar_numerator(&self) -> PolyTQ {
        let n = self.degree();
        self.basis_coeffs
            .iter()
            .enumerate()
            .map(|(k, f)| {
                let k = k as u32;
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let c = f.bar() * LaurentQ::monomial(tri(k), sign);
                PolyTQ::monomial(1, c) * tail_product(k + 1, n)
            })
            .fold(PolyTQ::zero(), |acc, p| acc + p)
    }

    pub fn series(&self) -> RatSeries {
        RatSeries::new(self.numerator(), self.degree()).expect("numerator degree is bounded by construction")
    }

    pub fn bar_series(&self) -> RatSeries {
        RatSeries::new(self.bar_numerator(), self.degree()).expect("numerator degree is bounded by construction")
    }
}

/// `k (k + 1) / 2`
fn tri(k: u32) -> i64 {
    i64::from(k) * (i64::from(k) + 1) / 2
}

/// `prod_{i=from}^{to} (1 - t q^i)`
fn tail_product(from: u32, to: u32) -> PolyTQ {
    (from..=to)
        .map(|i| PolyTQ::one() - PolyTQ::monomial(1, LaurentQ::q_pow(i64::from(i))))
        .fold(PolyTQ::one(), |acc, p| acc * p)
}

/// `sign * q^shift * t^(order + 1) * N(1/t, 1/q)`: the numerator of
/// `sign * q^shift * E(1/t, 1/q)` up to the sign and power of `q` coming
/// from the denominator, which the caller folds into `sign` and `shift`.
fn reflected(n: &PolyTQ, order: u32, sign: i64, shift: i64) -> PolyTQ {
    n.reflect(order + 1).scale(&LaurentQ::monomial(shift, sign))
}

/// The graded count `i_Z(m; q)` (or the interior count) as
/// `q^{(n-d)m} [m]^d T([m +- 1] / [m], q^{-m})`, denominators cleared.
pub fn graded_count(mat: &RealizedMatroid, m: u32, interior: bool) -> Result<GradedCount> {
    mat.require_unimodular()?;
    if m == 0 {
        if interior {
            return Err(Error::InvalidArgument("interior count is defined for m >= 1".into()));
        }
        return Ok(GradedCount { value: LaurentQ::one(), m, interior });
    }
    let (d, n) = (mat.d() as u32, mat.n() as i64);
    let t = tutte(mat);
    let mi = i64::from(m);
    let x_num = q_int(if interior { mi - 1 } else { mi + 1 });
    let qm = q_int(mi);
    let value = t
        .terms()
        .map(|(i, j, c)| {
            let shift = mi * (n - i64::from(d) - i64::from(j));
            x_num.pow(i) * qm.pow(d - i) * LaurentQ::monomial(shift, c.clone())
        })
        .sum();
    Ok(GradedCount { value, m, interior })
}

/// `ehr_Z(t; q)` as a polynomial in `t`:
/// `sum c_ij (qt + 1)^i t^(d-i) (1 + (q-1)t)^(n-d-j)`.
pub fn ehr_power_form(mat: &RealizedMatroid) -> Result<PolyTQ> {
    mat.require_unimodular()?;
    let (d, n) = (mat.d() as u32, mat.n() as u32);
    let qt1 = PolyTQ::monomial(1, LaurentQ::q()) + PolyTQ::one();
    let y_den = PolyTQ::one() + PolyTQ::monomial(1, LaurentQ::q() - LaurentQ::one());
    Ok(tutte(mat)
        .terms()
        .map(|(i, j, c)| {
            (qt1.pow(i) * PolyTQ::t().pow(d - i) * y_den.pow(n - d - j)).scale(&LaurentQ::constant(c.clone()))
        })
        .fold(PolyTQ::zero(), |acc, p| acc + p))
}

/// The graded Ehrhart polynomial in the q-binomial basis, by triangular
/// interpolation at `t = [0]_q, ..., [n]_q`.
pub fn ehr_poly(mat: &RealizedMatroid) -> Result<Qivp> {
    let power = ehr_power_form(mat)?;
    let n = mat.n() as u32;
    let mut coeffs: Vec<LaurentQ> = Vec::with_capacity(n as usize + 1);
    for m in 0..=n {
        let mut v = power.eval(&q_int(i64::from(m)));
        for (k, f) in coeffs.iter().enumerate() {
            v -= &(f * &qbinom(m, k as i64));
        }
        coeffs.push(v);
    }
    let qivp = Qivp::new(coeffs);
    let check = n + 1;
    if qivp.eval(check) != power.eval(&q_int(i64::from(check))) {
        return Err(Error::InternalConsistency(format!("basis expansion disagrees with the power form at t = [{check}]_q")));
    }
    Ok(qivp)
}

/// `E_Z(t, q)` with numerator over `prod_{i=0}^n (1 - t q^i)`.
pub fn series(mat: &RealizedMatroid) -> Result<RatSeries> {
    Ok(ehr_poly(mat)?.series())
}

fn interior_numerator_closed(n_num: &PolyTQ, n: u32, d: u32) -> PolyTQ {
    let sign = if (n + d) % 2 == 0 { 1 } else { -1 };
    reflected(n_num, n, sign, tri(n) - i64::from(d))
}

/// `Ẽ_Z(t, q)`, from `N` by the reciprocity law.
pub fn interior_series(mat: &RealizedMatroid) -> Result<RatSeries> {
    let s = series(mat)?;
    let num = interior_numerator_closed(s.numerator(), s.order(), mat.d() as u32);
    RatSeries::new(num, s.order())
}

/// Outcome of a verification with an optional human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Self { name: name.into(), passed: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Self { name: name.into(), passed: false, witness: Some(witness.into()) }
    }

    pub fn expect_eq<T: PartialEq + std::fmt::Display>(name: impl Into<String>, got: &T, want: &T) -> Self {
        if got == want {
            Self::pass(name)
        } else {
            Self::fail(name, format!("got {got}, expected {want}"))
        }
    }
}

/// Checks the interior numerator two ways (closed form against the sum
/// of bar-evaluated basis series) and, for `1 <= m <= m_max`, that
/// `(-1)^d q^{-d} bar(ehr)([m]_q)` equals the interior count.
pub fn reciprocity_check(mat: &RealizedMatroid, m_max: u32) -> Result<Check> {
    let name = "reciprocity";
    let qivp = ehr_poly(mat)?;
    let d = mat.d() as u32;
    let n = qivp.degree();
    let sign_d = if d % 2 == 0 { 1 } else { -1 };
    let unit = LaurentQ::monomial(-i64::from(d), sign_d);
    let closed = interior_numerator_closed(&qivp.numerator(), n, d);
    let direct = qivp.bar_numerator().scale(&unit);
    if closed != direct {
        return Ok(Check::fail(name, format!("interior numerator {closed} differs from {direct}")));
    }
    for m in 1..=m_max {
        let lhs = &unit * &qivp.bar_eval(m);
        let rhs = graded_count(mat, m, true)?.value;
        if lhs != rhs {
            return Ok(Check::fail(name, format!("m = {m}: reciprocity gives {lhs}, interior count is {rhs}")));
        }
    }
    Ok(Check::pass(name))
}

/// The abstract reciprocity law for a QIVP of degree `D`: the numerator of
/// `sum_{m>=1} bar(f)([m]_q) t^m` equals `(-1)^D q^{binom(D+1,2)} t^{D+1}
/// N(1/t, 1/q)`, i.e. `Ē(t,q) = -E(1/t, 1/q)`.
pub fn qivp_reciprocity_holds(p: &Qivp) -> bool {
    let deg = p.degree();
    let sign = if deg % 2 == 0 { 1 } else { -1 };
    p.bar_numerator() == reflected(&p.numerator(), deg, sign, tri(deg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::expand;

    fn hexagon() -> RealizedMatroid {
        RealizedMatroid::from_rows(&[[1, 0, 1], [0, 1, 1]]).unwrap()
    }

    fn lq(c: &[i64]) -> LaurentQ {
        LaurentQ::from_coeffs(c)
    }

    fn hexagon_numerator() -> PolyTQ {
        PolyTQ::from_coeffs([lq(&[1]), lq(&[0, 1, 2]), lq(&[0, 0, -2, -1]), lq(&[0, 0, 0, 0, -1])])
    }

    #[test]
    fn hexagon_counts() {
        let h = hexagon();
        assert_eq!(graded_count(&h, 1, false).unwrap().value, lq(&[1, 2, 3, 1]));
        assert_eq!(graded_count(&h, 1, true).unwrap().value, lq(&[1]));
        assert_eq!(graded_count(&h, 2, false).unwrap().value, lq(&[1, 2, 3, 4, 5, 3, 1]));
        assert_eq!(graded_count(&h, 2, true).unwrap().value, lq(&[1, 2, 3, 1]));
        assert_eq!(graded_count(&h, 0, false).unwrap().value, LaurentQ::one());
        assert!(matches!(graded_count(&h, 0, true), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn non_unimodular_is_rejected() {
        let diamond = RealizedMatroid::from_rows(&[[1, 1], [-1, 1]]).unwrap();
        assert!(matches!(graded_count(&diamond, 1, false), Err(Error::NotUnimodular(_))));
        assert!(matches!(ehr_poly(&diamond), Err(Error::NotUnimodular(_))));
    }

    #[test]
    fn hexagon_ehrhart_polynomial() {
        let h = hexagon();
        let power = ehr_power_form(&h).unwrap();
        assert_eq!(power, PolyTQ::from_coeffs([lq(&[1]), lq(&[0, 3]), lq(&[0, 0, 3]), lq(&[0, -1, 0, 1])]));
        let p = ehr_poly(&h).unwrap();
        assert_eq!(
            p.basis_coeffs(),
            &[
                lq(&[1]),
                lq(&[0, 2, 3, 1]),
                lq(&[0, 0, -2, 0, 4, 3, 1]),
                lq(&[0, 0, 0, 0, -1, -2, -1, 1, 2, 1]),
            ]
        );
        assert_eq!(p.eval(1), lq(&[1, 2, 3, 1]));
        assert_eq!(p.eval(0), lq(&[1]));
        assert_eq!(p.eval(2), graded_count(&h, 2, false).unwrap().value);
    }

    #[test]
    fn coloop_polynomial() {
        let p = ehr_poly(&RealizedMatroid::from_rows(&[[1]]).unwrap()).unwrap();
        assert_eq!(p.basis_coeffs(), &[lq(&[1]), lq(&[0, 1])]);
        for m in 0..5 {
            assert_eq!(p.eval(m), q_int(i64::from(m) + 1));
        }
    }

    #[test]
    fn bar_eval_examples() {
        let t = Qivp::new(vec![LaurentQ::zero(), LaurentQ::one()]);
        for m in 1..5 {
            assert_eq!(t.bar_eval(m), -(LaurentQ::q() * q_int(i64::from(m))));
        }
        let p = ehr_poly(&hexagon()).unwrap();
        let unit = LaurentQ::q_pow(-2);
        assert_eq!(&unit * &p.bar_eval(1), LaurentQ::one());
        assert_eq!(&unit * &p.bar_eval(2), lq(&[1, 2, 3, 1]));
    }

    #[test]
    fn hexagon_series() {
        let h = hexagon();
        let s = series(&h).unwrap();
        assert_eq!(s.order(), 3);
        assert_eq!(s.numerator(), &hexagon_numerator());
        let si = interior_series(&h).unwrap();
        assert_eq!(si.numerator(), &hexagon_numerator().shift_t(1));
        let e = expand(&si, 3);
        assert_eq!(e[0], LaurentQ::zero());
        assert_eq!(e[1], LaurentQ::one());
        assert_eq!(e[2], lq(&[1, 2, 3, 1]));
        assert!(reciprocity_check(&h, 3).unwrap().passed);
    }

    #[test]
    fn small_series() {
        let seg = RealizedMatroid::from_rows(&[[1]]).unwrap();
        let s = series(&seg).unwrap();
        assert_eq!((s.numerator(), s.order()), (&PolyTQ::one(), 1));
        let e = expand(&interior_series(&seg).unwrap(), 4);
        let want: Vec<LaurentQ> = (0..=4).map(|m| if m == 0 { LaurentQ::zero() } else { q_int(m - 1) }).collect();
        assert_eq!(e, want);
        assert!(reciprocity_check(&seg, 4).unwrap().passed);

        let square = RealizedMatroid::from_rows(&[[1, 0], [0, 1]]).unwrap();
        assert_eq!(series(&square).unwrap().numerator(), &PolyTQ::from_triples([(0, 0, 1), (1, 1, 1)]));
        let cube = RealizedMatroid::from_rows(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        assert!(reciprocity_check(&cube, 2).unwrap().passed);
    }

    #[test]
    fn abstract_reciprocity_small() {
        let p = Qivp::new(vec![lq(&[2, -1]), LaurentQ::q_pow(-3), lq(&[0, 0, 5])]);
        assert!(qivp_reciprocity_holds(&p));
        let e = p.bar_series().expand(4);
        assert_eq!(e[0], LaurentQ::zero());
        for m in 1..=4u32 {
            assert_eq!(e[m as usize], p.bar_eval(m));
        }
    }
}

//! The presentation `C[z_S : S ⊆ [n]] / I` of the harmonic algebra, its
//! low-degree Hilbert functions, and the Gorenstein classification.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{guard, Error, Result};
use crate::exact::{LaurentQ, PolyTQ};
use crate::gehrhart::series;
use crate::linalg::{Echelon, SparseRow};
use crate::matroid::RealizedMatroid;

pub const MAX_ELEMENTS: usize = 14;
pub const MAX_MONOMIALS: u128 = 100_000;
pub const MAX_PERMUTATION_SIZE: u32 = 8;

/// A linear form `sum_S a_S z_S`, with `S` given as a bitmask.
pub type LinearForm = BTreeMap<u32, BigInt>;

/// One linear generator `f_C^A = sum_{i in C} alpha_{C,i} z_{A ∪ i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegreLinear {
    pub circuit: u32,
    pub extra: u32,
    pub form: LinearForm,
}

/// The linear generators of the ideal. The binomials
/// `z_S z_T - z_{S∪T} z_{S∩T}` are implied and produced per degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegreGenerators {
    pub n: usize,
    pub linear: Vec<SegreLinear>,
}

impl SegreGenerators {
    /// One line per linear generator, such as `z_{1} + z_{2} - z_{3}`, with
    /// 1-based element labels and `z_{}` for the empty set.
    pub fn linear_lines(&self) -> Vec<String> {
        self.linear.iter().map(|g| format_form(&g.form)).collect()
    }
}

impl fmt::Display for SegreGenerators {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.linear_lines() {
            writeln!(f, "{line}")?;
        }
        writeln!(f, "{BINOMIAL_NOTE}")
    }
}

pub const BINOMIAL_NOTE: &str = "plus all binomials z_S z_T - z_{S∪T} z_{S∩T}";

fn set_label(mask: u32) -> String {
    let items: Vec<String> = (0..32).filter(|i| mask & (1 << i) != 0).map(|i| (i + 1).to_string()).collect();
    format!("z_{{{}}}", items.join(","))
}

fn format_form(form: &LinearForm) -> String {
    let mut terms: Vec<(&u32, &BigInt)> = form.iter().collect();
    terms.sort_by_key(|(m, _)| (m.count_ones(), (0..32).filter(|i| *m & (1 << i) != 0).collect::<Vec<u32>>()));
    let mut out = String::new();
    for (i, (mask, c)) in terms.into_iter().enumerate() {
        let mag = c.abs();
        let coef = if mag.is_one() { String::new() } else { format!("{mag} ") };
        match (i, c.is_negative()) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&coef);
        out.push_str(&set_label(*mask));
    }
    out
}

/// All `f_C^A` for circuits `C` and `A ⊆ [n] \ C`.
pub fn segre_generators(m: &RealizedMatroid) -> Result<SegreGenerators> {
    let n = m.n();
    guard("harmonic ground set n <= 14", n as u128, MAX_ELEMENTS as u128)?;
    let full = m.ground_mask();
    let mut linear = Vec::new();
    for c in m.circuits() {
        let cmask = c.mask();
        let rest = full & !cmask;
        let mut a = 0u32;
        loop {
            let form: LinearForm = c.support.iter().zip(&c.alpha).map(|(&i, al)| (a | (1 << i), al.clone())).collect();
            linear.push(SegreLinear { circuit: cmask, extra: a, form });
            if a == rest {
                break;
            }
            a = (a.wrapping_sub(rest)) & rest;
        }
    }
    Ok(SegreGenerators { n, linear })
}

/// `2^n` minus the rank of the linear generators.
pub fn degree1_dim(m: &RealizedMatroid) -> Result<u64> {
    let gens = segre_generators(m)?;
    let mut ech = Echelon::new(1 << m.n());
    for g in &gens.linear {
        ech.insert(g.form.iter().map(|(k, v)| (*k as usize, v.clone())).collect());
    }
    Ok((1u64 << m.n()) - ech.rank() as u64)
}

/// Sorted multisets of `k` masks drawn from `0..2^n`.
fn multisets(n: usize, k: usize) -> Vec<Vec<u32>> {
    fn rec(start: u32, end: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for s in start..end {
            cur.push(s);
            rec(s, end, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, 1 << n, k, &mut Vec::new(), &mut out);
    out
}

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn q_degree(mono: &[u32]) -> u32 {
    mono.iter().map(|s| s.count_ones()).sum()
}

/// The `q`-graded dimension of the degree-`m` part of the quotient.
pub fn graded_hilbert(mat: &RealizedMatroid, m: u32) -> Result<LaurentQ> {
    let n = mat.n();
    guard("harmonic ground set n <= 14", n as u128, MAX_ELEMENTS as u128)?;
    let nvars = 1u128 << n;
    let count = binom(nvars + m as u128 - 1, m as u128);
    guard("degree-m monomials C(2^n+m-1,m) <= 10^5", count, MAX_MONOMIALS)?;
    if m == 0 {
        return Ok(LaurentQ::one());
    }
    let gens = segre_generators(mat)?;
    let cols = multisets(n, m as usize);
    let index: HashMap<&[u32], usize> = cols.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let mut blocks: BTreeMap<u32, Echelon> = BTreeMap::new();
    let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
    for c in &cols {
        *sizes.entry(q_degree(c)).or_default() += 1;
    }

    let times = |mu: &[u32], form: &[(Vec<u32>, BigInt)]| -> SparseRow {
        let mut row = SparseRow::new();
        for (factor, coef) in form {
            let mut mono: Vec<u32> = mu.iter().chain(factor).copied().collect();
            mono.sort_unstable();
            *row.entry(index[mono.as_slice()]).or_insert_with(BigInt::zero) += coef;
        }
        row.retain(|_, v| !v.is_zero());
        row
    };
    let push = |blocks: &mut BTreeMap<u32, Echelon>, qdeg: u32, row: SparseRow| {
        if !row.is_empty() {
            blocks.entry(qdeg).or_insert_with(|| Echelon::new(cols.len())).insert(row);
        }
    };

    for mu in multisets(n, m as usize - 1) {
        for g in &gens.linear {
            let form: Vec<(Vec<u32>, BigInt)> = g.form.iter().map(|(s, c)| (vec![*s], c.clone())).collect();
            let qdeg = q_degree(&mu) + g.extra.count_ones() + 1;
            push(&mut blocks, qdeg, times(&mu, &form));
        }
    }
    if m >= 2 {
        let full = 1u32 << n;
        let binomials: Vec<Vec<(Vec<u32>, BigInt)>> = (0..full)
            .flat_map(|s| (s + 1..full).map(move |t| (s, t)))
            .filter(|(s, t)| s & t != *s && s & t != *t)
            .map(|(s, t)| {
                let mut lo = vec![s & t, s | t];
                lo.sort_unstable();
                vec![(vec![s, t], BigInt::one()), (lo, -BigInt::one())]
            })
            .collect();
        for mu in multisets(n, m as usize - 2) {
            for b in &binomials {
                let qdeg = q_degree(&mu) + q_degree(&b[0].0);
                push(&mut blocks, qdeg, times(&mu, b));
            }
        }
    }
    Ok(sizes
        .into_iter()
        .map(|(qdeg, size)| {
            let rank = blocks.get(&qdeg).map_or(0, Echelon::rank);
            LaurentQ::monomial(i64::from(qdeg), BigInt::from(size - rank))
        })
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Boolean,
    CircuitComponents,
    NotGorenstein,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Boolean => "boolean",
            Verdict::CircuitComponents => "circuit-components",
            Verdict::NotGorenstein => "not-gorenstein",
        }
    }

    pub fn is_gorenstein(self) -> bool {
        self != Verdict::NotGorenstein
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GorensteinVerdict {
    pub verdict: Verdict,
    /// A component that is not a circuit (0-based elements).
    pub witness: Option<Vec<usize>>,
}

pub fn gorenstein_classify(m: &RealizedMatroid) -> GorensteinVerdict {
    if m.n() == m.d() {
        return GorensteinVerdict { verdict: Verdict::Boolean, witness: None };
    }
    match m.connected_components().into_iter().find(|c| !c.is_circuit) {
        None => GorensteinVerdict { verdict: Verdict::CircuitComponents, witness: None },
        Some(c) => GorensteinVerdict { verdict: Verdict::NotGorenstein, witness: Some(c.elements) },
    }
}

/// Whether the numerator coefficients `g_k` satisfy the Boolean identity
/// `g_k = q^{C(n,2)} g_{n-k-1}(1/q)` and the general identity
/// `g_k = (-1)^{n+d} q^{C(n+1,2)-d} g_{n-k}(1/q)`, for all `0 <= k <= n`.
pub fn palindromic_identities(numerator: &PolyTQ, n: u32, d: u32) -> (bool, bool) {
    let g = |k: i64| if k < 0 { LaurentQ::zero() } else { numerator.coeff(k as u32) };
    let n_i = i64::from(n);
    let boolean_unit = LaurentQ::q_pow(n_i * (n_i - 1) / 2);
    let sign = if (n + d) % 2 == 0 { 1 } else { -1 };
    let general_unit = LaurentQ::monomial(n_i * (n_i + 1) / 2 - i64::from(d), sign);
    let beyond = numerator.degree().is_some_and(|deg| deg > n);
    let boolean = !beyond && (0..=n_i).all(|k| g(k) == &boolean_unit * &g(n_i - k - 1).bar());
    let general = !beyond && (0..=n_i).all(|k| g(k) == &general_unit * &g(n_i - k).bar());
    (boolean, general)
}

/// The palindromic identity that applies to a Gorenstein matroid.
pub fn palindrome_check(m: &RealizedMatroid) -> Result<bool> {
    let v = gorenstein_classify(m);
    let (boolean, general) = palindromic_identities(series(m)?.numerator(), m.n() as u32, m.d() as u32);
    match v.verdict {
        Verdict::Boolean => Ok(boolean),
        Verdict::CircuitComponents => Ok(general),
        Verdict::NotGorenstein => {
            Err(Error::ContractViolation("palindromicity is only asserted for Gorenstein matroids".into()))
        }
    }
}

/// `sum over permutations of [n] of t^des q^maj`.
pub fn euler_mahonian(n: u32) -> Result<PolyTQ> {
    guard("permutation size n <= 8", n as u128, MAX_PERMUTATION_SIZE as u128)?;
    let mut perm: Vec<u32> = (1..=n).collect();
    let mut counts: BTreeMap<(u32, i64), u64> = BTreeMap::new();
    loop {
        let (des, maj) = perm
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .fold((0u32, 0i64), |(d, m), (j, _)| (d + 1, m + j as i64 + 1));
        *counts.entry((des, maj)).or_default() += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(PolyTQ::from_triples(counts.into_iter().map(|((t, q), c)| (t, q, BigInt::from(c)))))
}

fn next_permutation(p: &mut [u32]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hexagon() -> RealizedMatroid {
        RealizedMatroid::from_rows(&[[1, 0, 1], [0, 1, 1]]).unwrap()
    }

    fn identity(n: usize) -> RealizedMatroid {
        let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        RealizedMatroid::from_rows(&rows).unwrap()
    }

    #[test]
    fn generators() {
        let g = segre_generators(&hexagon()).unwrap();
        assert_eq!(g.linear_lines(), vec!["z_{1} + z_{2} - z_{3}"]);
        assert!(segre_generators(&identity(3)).unwrap().linear.is_empty());
        let u12 = segre_generators(&RealizedMatroid::from_rows(&[[1, 1]]).unwrap()).unwrap();
        assert_eq!(u12.linear_lines(), vec!["z_{1} - z_{2}"]);
        let with_loop = segre_generators(&RealizedMatroid::from_rows(&[[1, 1, 0]]).unwrap()).unwrap();
        assert_eq!(with_loop.linear.len(), 2 + 4);
        assert!(with_loop.linear_lines().contains(&"z_{1,2,3}".to_string()));
    }

    #[test]
    fn degree_one() {
        assert_eq!(degree1_dim(&hexagon()).unwrap(), 7);
        assert_eq!(degree1_dim(&identity(2)).unwrap(), 4);
        assert_eq!(degree1_dim(&RealizedMatroid::from_rows(&[[1, 1]]).unwrap()).unwrap(), 3);
    }

    #[test]
    fn graded_pieces() {
        assert_eq!(graded_hilbert(&hexagon(), 1).unwrap(), LaurentQ::from_coeffs(&[1, 2, 3, 1]));
        assert_eq!(graded_hilbert(&hexagon(), 0).unwrap(), LaurentQ::one());
        let u12 = RealizedMatroid::from_rows(&[[1, 1]]).unwrap();
        assert_eq!(graded_hilbert(&u12, 2).unwrap(), LaurentQ::from_coeffs(&[1, 1, 1, 1, 1]));
        assert_eq!(graded_hilbert(&hexagon(), 2).unwrap(), LaurentQ::from_coeffs(&[1, 2, 3, 4, 5, 3, 1]));
    }

    #[test]
    fn classification() {
        assert_eq!(gorenstein_classify(&hexagon()).verdict, Verdict::CircuitComponents);
        assert_eq!(gorenstein_classify(&identity(3)).verdict, Verdict::Boolean);
        let m = RealizedMatroid::from_rows(&[[1, 0, 1, 1], [0, 1, 1, 0]]).unwrap();
        assert_eq!(
            gorenstein_classify(&m),
            GorensteinVerdict { verdict: Verdict::NotGorenstein, witness: Some(vec![0, 1, 2, 3]) }
        );
    }

    #[test]
    fn palindromes() {
        assert!(palindrome_check(&hexagon()).unwrap());
        assert!(palindrome_check(&identity(2)).unwrap());
        assert!(palindrome_check(&identity(3)).unwrap());
        let m = RealizedMatroid::from_rows(&[[1, 0, 1, 1], [0, 1, 1, 0]]).unwrap();
        assert!(matches!(palindrome_check(&m), Err(Error::ContractViolation(_))));
    }

    #[test]
    fn permutation_statistics() {
        assert_eq!(euler_mahonian(1).unwrap(), PolyTQ::one());
        assert_eq!(euler_mahonian(2).unwrap(), PolyTQ::from_triples([(0, 0, 1), (1, 1, 1)]));
        assert_eq!(
            euler_mahonian(3).unwrap(),
            PolyTQ::from_triples([(0, 0, 1), (1, 1, 2), (1, 2, 2), (2, 3, 1)])
        );
        assert_eq!(euler_mahonian(0).unwrap(), PolyTQ::one());
        assert!(matches!(euler_mahonian(9), Err(Error::SizeGuard { .. })));
    }
}

#![allow(dead_code)]

use gehrhart::harmonic::Verdict;
use gehrhart::{BiPolyXY, LaurentQ, RealizedMatroid};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub struct Entry {
    pub name: &'static str,
    pub rows: Vec<Vec<i64>>,
    pub verdict: Verdict,
}

impl Entry {
    pub fn matroid(&self) -> RealizedMatroid {
        RealizedMatroid::from_rows(&self.rows).unwrap()
    }

    pub fn d(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

fn e(name: &'static str, rows: &[&[i64]], verdict: Verdict) -> Entry {
    Entry { name, rows: rows.iter().map(|r| r.to_vec()).collect(), verdict }
}

/// Unimodular test matrices with `n <= 6`, `d <= 3`.
pub fn corpus() -> Vec<Entry> {
    use Verdict::*;
    vec![
        e("boolean-1", &[&[1]], Boolean),
        e("boolean-2", &[&[1, 0], &[0, 1]], Boolean),
        e("boolean-3", &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], Boolean),
        e("U12", &[&[1, 1]], CircuitComponents),
        e("U13", &[&[1, 1, 1]], NotGorenstein),
        e("U23 hexagon", &[&[1, 0, 1], &[0, 1, 1]], CircuitComponents),
        e("hexagon permuted and negated", &[&[0, -1, 1], &[1, -1, 0]], CircuitComponents),
        e("K3 with doubled edge", &[&[1, 0, 1, 1], &[-1, 1, 0, -1]], NotGorenstein),
        e("circuit plus loop", &[&[1, 1, 0]], CircuitComponents),
        e("hexagon plus loop", &[&[1, 0, 1, 0], &[0, 1, 1, 0]], CircuitComponents),
        e("U12 + U12", &[&[1, 1, 0, 0], &[0, 0, 1, 1]], CircuitComponents),
        e("U23 + U12", &[&[1, 0, 1, 0, 0], &[0, 1, 1, 0, 0], &[0, 0, 0, 1, 1]], CircuitComponents),
        e("two triangles sharing a chord", &[&[1, 0, 1, 1], &[0, 1, 1, 0]], NotGorenstein),
        e("coloop + U12", &[&[1, 0, 0], &[0, 1, 1]], NotGorenstein),
        e("hexagon + coloop", &[&[1, 0, 1, 0], &[0, 1, 1, 0], &[0, 0, 0, 1]], NotGorenstein),
        e(
            "K4 graphic",
            &[&[1, 1, 1, 0, 0, 0], &[-1, 0, 0, 1, 1, 0], &[0, -1, 0, -1, 0, 1]],
            NotGorenstein,
        ),
    ]
}

pub fn identity(n: usize) -> RealizedMatroid {
    if n == 0 {
        return RealizedMatroid::from_matrix(vec![]).unwrap();
    }
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    RealizedMatroid::from_rows(&rows).unwrap()
}

/// Column rank over `Q` by plain Gaussian elimination.
pub fn rank_of_columns(rows: &[Vec<i64>], cols: &[usize]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| cols.iter().map(|&j| BigRational::from_integer(BigInt::from(r[j]))).collect())
        .collect();
    let (nr, nc) = (m.len(), cols.len());
    let mut rank = 0;
    for c in 0..nc {
        let Some(p) = (rank..nr).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..nr {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in 0..nc {
                    let v = &f * &m[rank][k];
                    m[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn subset(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask & (1 << i) != 0).collect()
}

/// `sum_S (x-1)^{d - r(S)} (y-1)^{|S| - r(S)}`.
pub fn tutte_oracle(rows: &[Vec<i64>], n: usize) -> BiPolyXY {
    let d = rows.len();
    let xm1 = &BiPolyXY::x() - &BiPolyXY::one();
    let ym1 = &BiPolyXY::y() - &BiPolyXY::one();
    let mut out = BiPolyXY::zero();
    for mask in 0..(1u32 << n) {
        let s = subset(mask, n);
        let r = rank_of_columns(rows, &s);
        out = &out + &(&xm1.pow((d - r) as u32) * &ym1.pow((s.len() - r) as u32));
    }
    out
}

/// Minimal dependent column sets, by brute force.
pub fn circuit_masks(rows: &[Vec<i64>], n: usize) -> Vec<u32> {
    let mut dependent: Vec<u32> =
        (0..(1u32 << n)).filter(|&m| rank_of_columns(rows, &subset(m, n)) < m.count_ones() as usize).collect();
    dependent.sort_by_key(|m| m.count_ones());
    let mut minimal: Vec<u32> = Vec::new();
    for m in dependent {
        if !minimal.iter().any(|c| c & m == *c) {
            minimal.push(m);
        }
    }
    minimal
}

/// Expected classification from circuits alone: Boolean if `n = d`,
/// circuit-components if every connected component is a circuit.
pub fn verdict_oracle(rows: &[Vec<i64>], n: usize) -> Verdict {
    if n == rows.len() {
        return Verdict::Boolean;
    }
    let circuits = circuit_masks(rows, n);
    let mut comp: Vec<u32> = (0..n).map(|i| 1 << i).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for c in &circuits {
                if comp[i] & c != 0 && comp[i] | c != comp[i] {
                    comp[i] |= c;
                    changed = true;
                }
            }
        }
    }
    if comp.iter().all(|c| circuits.contains(c)) {
        Verdict::CircuitComponents
    } else {
        Verdict::NotGorenstein
    }
}

/// `m^d T((m +- 1)/m, 1)` evaluated over `Q`.
pub fn stanley_count(t: &BiPolyXY, d: usize, m: u32, interior: bool) -> BigRational {
    let mq = BigRational::from_integer(BigInt::from(m));
    let shift = if interior { -BigRational::one() } else { BigRational::one() };
    let x = (&mq + shift) / &mq;
    let mut acc = BigRational::zero();
    for (i, _, c) in t.terms() {
        acc += BigRational::from_integer(c.clone()) * num_traits::pow(x.clone(), i as usize);
    }
    acc * num_traits::pow(mq, d)
}

/// q-binomial coefficient as the inversion generating function of 0/1
/// words with `k` ones and `m - k` zeros.
pub fn qbinom_by_inversions(m: u32, k: u32) -> LaurentQ {
    if k > m {
        return LaurentQ::zero();
    }
    let mut out = LaurentQ::zero();
    for w in 0u32..(1 << m) {
        if w.count_ones() != k {
            continue;
        }
        let mut inv = 0i64;
        let mut ones_seen = 0i64;
        for i in 0..m {
            if w & (1 << i) != 0 {
                ones_seen += 1;
            } else {
                inv += ones_seen;
            }
        }
        out += &LaurentQ::q_pow(inv);
    }
    out
}

/// `[m]_q` as `1 + q + ... + q^{m-1}`.
pub fn q_int_sum(m: u32) -> LaurentQ {
    (0..m).map(|i| LaurentQ::q_pow(i64::from(i))).sum()
}

//! Exact linear algebra over the integers and rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A sparse integer vector: column index to nonzero entry.
pub type SparseRow = BTreeMap<usize, BigInt>;

/// Incremental row echelon form over `Q`, kept fraction-free.
///
/// Every stored row is primitive with a positive leading entry, and no two
/// stored rows share a leading column.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ncols
    }

    /// Reduces `row` against the stored pivots; returns `true` (and stores
    /// the remainder) if it was independent.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&lead, lead_val)) = row.iter().next() else {
                return false;
            };
            match self.pivots.get(&lead) {
                None => {
                    let lead_val = lead_val.clone();
                    normalize(&mut row, lead_val.is_negative());
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(pivot) => {
                    let p = &pivot[&lead];
                    let a = lead_val.clone();
                    let g = p.gcd(&a);
                    let (mul_row, mul_piv) = (p / &g, a / &g);
                    let mut next = SparseRow::new();
                    for (c, v) in &row {
                        next.insert(*c, v * &mul_row);
                    }
                    for (c, v) in pivot {
                        let e = next.entry(*c).or_insert_with(BigInt::zero);
                        *e -= v * &mul_piv;
                    }
                    next.retain(|_, v| !v.is_zero());
                    normalize(&mut next, false);
                    row = next;
                }
            }
        }
    }

    pub fn insert_dense(&mut self, row: &[BigInt]) -> bool {
        self.insert(row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect())
    }
}

fn normalize(row: &mut SparseRow, negate: bool) {
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return;
    }
    let g = if negate { -g } else { g };
    if g.is_one() {
        return;
    }
    for v in row.values_mut() {
        *v = &*v / &g;
    }
}

/// Rank of a dense integer matrix given as rows.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut ech = Echelon::new(ncols);
    for r in rows {
        if ech.is_full() {
            break;
        }
        ech.insert_dense(r);
    }
    ech.rank()
}

/// Determinant of a square integer matrix (Bareiss elimination).
pub fn det(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Reduced row echelon form over `Q`; returns the nonzero rows and the
/// pivot column of each.
pub fn rref(mut m: Vec<Vec<BigRational>>) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Integer basis of the right kernel `{x : M x = 0}` of a `rows x cols`
/// integer matrix. Each basis vector is primitive with its first nonzero
/// entry positive.
pub fn kernel(matrix: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let q: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect())
        .collect();
    let (red, pivots) = rref(q);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); cols];
            x[f] = BigRational::one();
            for (row, &p) in red.iter().zip(&pivots) {
                x[p] = -row[f].clone();
            }
            primitive_integer(&x)
        })
        .collect()
}

/// Clears denominators and content; first nonzero entry made positive.
pub fn primitive_integer(x: &[BigRational]) -> Vec<BigInt> {
    let lcm = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut ints: Vec<BigInt> = x.iter().map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    make_primitive(&mut ints);
    ints
}

/// Divides by the content and flips sign so the first nonzero entry is positive.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return;
    }
    let neg = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let g = if neg { -g } else { g };
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn det_small() {
        assert_eq!(det(&m(&[&[1, 1], &[-1, 1]])), BigInt::from(2));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])), BigInt::from(6));
        assert_eq!(det(&m(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(det(&[]), BigInt::one());
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(rank(&a), 2);
        let k = kernel(&a, 3);
        assert_eq!(k, vec![vec![BigInt::from(1), BigInt::from(1), BigInt::from(-1)]]);
        assert_eq!(rank(&m(&[&[2, 4], &[3, 6]])), 1);
        assert_eq!(rank(&m(&[&[0, 0]])), 0);
    }

    #[test]
    fn echelon_reports_dependence() {
        let mut e = Echelon::new(3);
        assert!(e.insert_dense(&[1.into(), 2.into(), 3.into()]));
        assert!(!e.insert_dense(&[(-2).into(), (-4).into(), (-6).into()]));
        assert!(e.insert_dense(&[0.into(), 1.into(), 0.into()]));
        assert!(!e.insert_dense(&[1.into(), 5.into(), 3.into()]));
        assert_eq!(e.rank(), 2);
    }
}

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Realization, RealizedMatroid};
use crate::exact::BiPolyXY;
use crate::linalg::rref;

type Matrix = Vec<Vec<BigRational>>;

/// Tutte polynomial by deletion and contraction.
///
/// Minors are kept as reduced row echelon matrices over `Q`. Loops are split
/// off as powers of `y`, and each remaining minor is memoized under a
/// canonical form (columns scaled to a leading 1 and sorted, then reduced
/// again), so matroids that differ only by column order or column scaling
/// share a cache entry.
pub fn tutte(m: &RealizedMatroid) -> BiPolyXY {
    tutte_of(m.realization())
}

/// [`tutte`] straight from a realization. Needs no circuit enumeration, so
/// it is not bound by the ground set guard.
pub fn tutte_of(r: &Realization) -> BiPolyXY {
    let rows: Matrix = r
        .rows()
        .iter()
        .map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect())
        .collect();
    let cols = columns_of(&rows, r.n());
    let mut memo = HashMap::new();
    tutte_columns(cols, r.d(), &mut memo)
}

fn tutte_columns(cols: Vec<Vec<BigRational>>, d: usize, memo: &mut HashMap<Matrix, BiPolyXY>) -> BiPolyXY {
    let (nonloops, loops): (Vec<_>, Vec<_>) = cols.into_iter().partition(|c| c.iter().any(|v| !v.is_zero()));
    let loop_factor = BiPolyXY::monomial(0, loops.len() as u32, 1);
    if nonloops.is_empty() {
        return loop_factor;
    }
    let key = canonical(nonloops, d);
    if let Some(t) = memo.get(&key) {
        return t * &loop_factor;
    }
    let r = key.len();
    let k = key.first().map_or(0, Vec::len);
    // Column 0 is the unit vector e_0 after reduction.
    let is_coloop = (1..k).all(|j| key[0][j].is_zero());
    let contracted: Vec<Vec<BigRational>> = (1..k).map(|j| key[1..].iter().map(|row| row[j].clone()).collect()).collect();
    let t_con = tutte_columns(contracted, r - 1, memo);
    let t = if is_coloop {
        &BiPolyXY::x() * &t_con
    } else {
        let deleted: Vec<Vec<BigRational>> = (1..k).map(|j| key.iter().map(|row| row[j].clone()).collect()).collect();
        &tutte_columns(deleted, r, memo) + &t_con
    };
    memo.insert(key, t.clone());
    &t * &loop_factor
}

fn columns_of(rows: &Matrix, ncols: usize) -> Vec<Vec<BigRational>> {
    (0..ncols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect()
}

fn rows_of(cols: &[Vec<BigRational>], nrows: usize) -> Matrix {
    (0..nrows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
}

/// Reduced row echelon form with zero rows removed, after normalizing and
/// sorting the columns. Repeated a few times since reduction can reorder
/// the sorted columns' representatives.
fn canonical(mut cols: Vec<Vec<BigRational>>, d: usize) -> Matrix {
    let mut prev: Option<Matrix> = None;
    let mut nrows = d;
    for _ in 0..4 {
        for c in cols.iter_mut() {
            if let Some(lead) = c.iter().find(|v| !v.is_zero()).cloned() {
                c.iter_mut().for_each(|v| *v = &*v / &lead);
            }
        }
        cols.sort();
        let (mut reduced, pivots) = rref(rows_of(&cols, nrows));
        reduced.truncate(pivots.len());
        nrows = reduced.len();
        if prev.as_ref() == Some(&reduced) {
            break;
        }
        cols = columns_of(&reduced, cols.len());
        prev = Some(reduced);
    }
    prev.expect("at least one pass")
}

/// The Tutte polynomial of the `m`-thickening, from the Tutte polynomial
/// `t` of a rank-`d` matroid:
/// `Y^d * t((Y - 1 + x) / Y, y^m)` with `Y = 1 + y + ... + y^(m-1)`.
pub fn tutte_thickened(t: &BiPolyXY, d: usize, m: u32) -> BiPolyXY {
    assert!(m >= 1, "thickening factor must be at least 1");
    let big_y = BiPolyXY::from_terms((0..m).map(|j| (0u32, j, BigInt::one())));
    let num = &(&big_y - &BiPolyXY::one()) + &BiPolyXY::x();
    let mut out = BiPolyXY::zero();
    for (i, j, c) in t.terms() {
        assert!(i as usize <= d, "x-degree of T exceeds rank");
        let term = &(&num.pow(i) * &big_y.pow(d as u32 - i)) * &BiPolyXY::monomial(0, m * j, c.clone());
        out = &out + &term;
    }
    out
}

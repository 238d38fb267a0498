//! q-integers and Gaussian binomial coefficients.

use super::LaurentQ;

/// The q-integer `[m]_q = (1 - q^m) / (1 - q)`, for any integer `m`.
///
/// For `m >= 0` this is `1 + q + ... + q^{m-1}`; for negative `m` it is
/// `-q^m [-m]_q`.
pub fn q_int(m: i64) -> LaurentQ {
    if m >= 0 {
        LaurentQ::from_terms((0..m).map(|e| (e, 1)))
    } else {
        LaurentQ::from_terms((m..0).map(|e| (e, -1)))
    }
}

/// `[m]_q!`
pub fn q_factorial(m: u32) -> LaurentQ {
    (1..=m as i64).map(q_int).product()
}

/// Gaussian binomial coefficient `binom(m, k)_q`; zero unless `0 <= k <= m`.
///
/// Built row by row from `binom(m,k) = binom(m-1,k-1) + q^k binom(m-1,k)`.
pub fn qbinom(m: u32, k: i64) -> LaurentQ {
    if k < 0 || k > m as i64 {
        return LaurentQ::zero();
    }
    let k = k as usize;
    let k = k.min(m as usize - k);
    // row[j] holds binom(i, j)_q for the current i
    let mut row = vec![LaurentQ::zero(); k + 1];
    row[0] = LaurentQ::one();
    for i in 1..=m as usize {
        for j in (1..=k.min(i)).rev() {
            let shifted = row[j].shift(j as i64);
            row[j] = &row[j - 1] + &shifted;
        }
    }
    row[k].clone()
}

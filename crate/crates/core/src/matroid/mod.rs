//! Matroids realized by integer matrices.
//!
//! Ground-set elements are column indices `0..n`. Subsets are passed as
//! slices of indices or as `u32` bitmasks (bit `i` set means element `i`);
//! the size guard `n <= 16` keeps masks in range.

mod tutte;

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{guard, Error, Result};
use crate::linalg::{self, Echelon};

pub use tutte::{tutte, tutte_of, tutte_thickened};

/// Largest ground set accepted by [`RealizedMatroid::from_matrix`].
pub const MAX_ELEMENTS: usize = 16;

/// A `d x n` integer matrix of full row rank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Realization {
    d: usize,
    n: usize,
    rows: Vec<Vec<BigInt>>,
}

impl Realization {
    /// Checks shape and full row rank.
    pub fn new(d: usize, n: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if rows.len() != d {
            return Err(Error::InvalidArgument(format!("expected {d} rows, found {}", rows.len())));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::Ragged { row: i, found: r.len(), expected: n });
            }
        }
        let rank = linalg::rank(&rows);
        if rank != d {
            return Err(Error::RankDeficient { rank, rows: d });
        }
        Ok(Self { d, n, rows })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.rows[row][col]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    /// `[A A ... A]` with `m` copies; column `k * n + j` is column `j`.
    pub fn thicken(&self, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("thickening factor must be at least 1".into()));
        }
        let rows = self.rows.iter().map(|r| r.iter().cloned().cycle().take(m * self.n).collect()).collect();
        Self::new(self.d, m * self.n, rows)
    }

    /// The `d x |cols|` submatrix on the given columns.
    pub fn submatrix(&self, cols: &[usize]) -> Vec<Vec<BigInt>> {
        self.rows.iter().map(|r| cols.iter().map(|&j| r[j].clone()).collect()).collect()
    }
}

impl fmt::Debug for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A circuit with its linear dependence `sum alpha_i * column_i = 0`.
///
/// `alpha` is primitive with its first entry positive, and lines up with
/// `support` (sorted ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitRep {
    pub support: Vec<usize>,
    pub alpha: Vec<BigInt>,
}

impl CircuitRep {
    pub fn mask(&self) -> u32 {
        to_mask(&self.support)
    }
}

/// A row-space vector `v = c^T A` of minimal support.
///
/// `c` is primitive and `v` has its first nonzero entry positive; `v` is
/// primitive whenever `A` is unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocircuitVector {
    pub v: Vec<BigInt>,
    pub c: Vec<BigInt>,
    pub support_size: usize,
}

impl CocircuitVector {
    pub fn support(&self) -> Vec<usize> {
        self.v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()
    }
}

/// A connected component of the matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub elements: Vec<usize>,
    pub is_circuit: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorOp {
    Delete,
    Contract,
}

/// A realized matroid with its circuits and cocircuit vectors precomputed.
///
/// Rank queries are cached behind a lock, so a shared reference can be used
/// from several threads.
pub struct RealizedMatroid {
    realization: Realization,
    circuits: Vec<CircuitRep>,
    cocircuits: Vec<CocircuitVector>,
    rank_cache: RwLock<HashMap<u32, usize>>,
}

impl Clone for RealizedMatroid {
    fn clone(&self) -> Self {
        Self {
            realization: self.realization.clone(),
            circuits: self.circuits.clone(),
            cocircuits: self.cocircuits.clone(),
            rank_cache: RwLock::new(self.rank_cache.read().expect("rank cache poisoned").clone()),
        }
    }
}

impl fmt::Debug for RealizedMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RealizedMatroid")
            .field("d", &self.d())
            .field("n", &self.n())
            .field("matrix", &self.realization)
            .finish()
    }
}

impl RealizedMatroid {
    /// Builds the matroid of a matrix given as rows. The column count is
    /// taken from the first row, so a matrix with no rows has no columns;
    /// use [`RealizedMatroid::from_realization`] for `0 x n`.
    pub fn from_matrix(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let d = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        Self::from_realization(Realization::new(d, n, rows)?)
    }

    /// Convenience constructor from small integers.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_matrix(rows.iter().map(|r| r.as_ref().iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    pub fn from_realization(realization: Realization) -> Result<Self> {
        guard("ground set size n <= 16", realization.n as u128, MAX_ELEMENTS as u128)?;
        let mut m = Self {
            realization,
            circuits: Vec::new(),
            cocircuits: Vec::new(),
            rank_cache: RwLock::new(HashMap::new()),
        };
        m.circuits = m.find_circuits();
        m.cocircuits = m.find_cocircuits();
        Ok(m)
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn d(&self) -> usize {
        self.realization.d
    }

    pub fn n(&self) -> usize {
        self.realization.n
    }

    pub fn circuits(&self) -> &[CircuitRep] {
        &self.circuits
    }

    pub fn cocircuits(&self) -> &[CocircuitVector] {
        &self.cocircuits
    }

    pub fn ground_mask(&self) -> u32 {
        ((1u64 << self.n()) - 1) as u32
    }

    /// Column rank of the subset given by a bitmask.
    pub fn rank_mask(&self, mask: u32) -> usize {
        if let Some(r) = self.rank_cache.read().expect("rank cache poisoned").get(&mask) {
            return *r;
        }
        let mut ech = Echelon::new(self.d());
        for j in mask_elements(mask) {
            if ech.is_full() {
                break;
            }
            ech.insert_dense(&self.realization.column(j));
        }
        let r = ech.rank();
        self.rank_cache.write().expect("rank cache poisoned").insert(mask, r);
        r
    }

    pub fn rank(&self, subset: &[usize]) -> usize {
        self.rank_mask(to_mask(subset))
    }

    pub fn is_independent_mask(&self, mask: u32) -> bool {
        self.rank_mask(mask) == mask.count_ones() as usize
    }

    pub fn is_loop(&self, i: usize) -> bool {
        self.realization.rows.iter().all(|r| r[i].is_zero())
    }

    pub fn is_coloop(&self, i: usize) -> bool {
        self.rank_mask(self.ground_mask() & !(1 << i)) < self.d()
    }

    /// True iff every maximal minor lies in `{-1, 0, 1}`.
    pub fn is_unimodular(&self) -> bool {
        self.non_unimodular_minor().is_none()
    }

    /// A maximal minor outside `{-1, 0, 1}` as `(columns, determinant)`.
    pub fn non_unimodular_minor(&self) -> Option<(Vec<usize>, BigInt)> {
        let d = self.d();
        subsets_of_size(self.n(), d).find_map(|mask| {
            let cols = mask_elements(mask).collect::<Vec<_>>();
            let det = linalg::det(&self.realization.submatrix(&cols));
            (det.abs() > BigInt::one()).then_some((cols, det))
        })
    }

    /// Errors with a witness minor unless the matrix is unimodular.
    pub fn require_unimodular(&self) -> Result<()> {
        match self.non_unimodular_minor() {
            None => Ok(()),
            Some((cols, det)) => {
                let one_based: Vec<usize> = cols.iter().map(|c| c + 1).collect();
                Err(Error::NotUnimodular(format!("minor on columns {one_based:?} has determinant {det}")))
            }
        }
    }

    fn find_circuits(&self) -> Vec<CircuitRep> {
        let n = self.n();
        let mut found: Vec<CircuitRep> = Vec::new();
        for size in 1..=n.min(self.d() + 1) {
            for mask in subsets_of_size(n, size) {
                if found.iter().any(|c| c.mask() & mask == c.mask()) {
                    continue;
                }
                if self.rank_mask(mask) < size {
                    let support: Vec<usize> = mask_elements(mask).collect();
                    let sub = self.realization.submatrix(&support);
                    let ker = linalg::kernel(&sub, support.len());
                    debug_assert_eq!(ker.len(), 1, "circuit kernel must be one-dimensional");
                    found.push(CircuitRep { support, alpha: ker.into_iter().next().unwrap_or_default() });
                }
            }
        }
        found
    }

    fn find_cocircuits(&self) -> Vec<CocircuitVector> {
        let (d, n) = (self.d(), self.n());
        if d == 0 {
            return Vec::new();
        }
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for mask in subsets_of_size(n, d - 1) {
            if !self.is_independent_mask(mask) {
                continue;
            }
            let cols: Vec<usize> = mask_elements(mask).collect();
            // c^T A_B = 0  <=>  A_B^T c = 0
            let transposed: Vec<Vec<BigInt>> = cols.iter().map(|&j| self.realization.column(j)).collect();
            let Some(mut c) = linalg::kernel(&transposed, d).into_iter().next() else {
                continue;
            };
            let mut v = self.row_combination(&c);
            if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
                c.iter_mut().for_each(|x| *x = -&*x);
                v.iter_mut().for_each(|x| *x = -&*x);
            }
            let support = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).fold(0u32, |m, (i, _)| m | (1 << i));
            if seen.insert(support) {
                out.push(CocircuitVector { support_size: support.count_ones() as usize, v, c });
            }
        }
        out.sort_by_key(|cv| to_mask(&cv.support()));
        out
    }

    /// `c^T A`
    pub fn row_combination(&self, c: &[BigInt]) -> Vec<BigInt> {
        (0..self.n())
            .map(|j| self.realization.rows.iter().zip(c).map(|(r, ci)| &r[j] * ci).sum())
            .collect()
    }

    /// Deletion or contraction of element `i`; the remaining columns keep
    /// their relative order.
    pub fn minor(&self, op: MinorOp, i: usize) -> Result<Self> {
        if i >= self.n() {
            return Err(Error::InvalidArgument(format!("element {i} out of range for n = {}", self.n())));
        }
        let keep = |r: &Vec<BigInt>| -> Vec<BigInt> {
            r.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect()
        };
        match op {
            MinorOp::Delete => {
                if self.is_coloop(i) {
                    return Err(Error::ContractViolation(format!("cannot delete coloop {}", i + 1)));
                }
                let rows = self.realization.rows.iter().map(keep).collect();
                Self::from_realization(Realization::new(self.d(), self.n() - 1, rows)?)
            }
            MinorOp::Contract => {
                if self.is_loop(i) {
                    return Err(Error::ContractViolation(format!("cannot contract loop {}", i + 1)));
                }
                let (pivot, mut rows) = clear_column(self.realization.rows.clone(), i);
                rows.remove(pivot);
                let rows: Vec<Vec<BigInt>> = rows.iter().map(keep).collect();
                Self::from_realization(Realization::new(self.d() - 1, self.n() - 1, rows)?)
            }
        }
    }

    /// The `m`-thickening: the matrix `[A A ... A]` with `m` copies, so
    /// element `(k, j)` sits at column `k * n + j`.
    pub fn thicken(&self, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("thickening factor must be at least 1".into()));
        }
        guard("thickened ground set m*n <= 16", (m * self.n()) as u128, MAX_ELEMENTS as u128)?;
        Self::from_realization(self.realization.thicken(m)?)
    }

    /// Connected components: elements sharing a circuit are joined; coloops
    /// end up as singletons. Sorted by smallest element.
    pub fn connected_components(&self) -> Vec<Component> {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut x = x;
            while p[x] != r {
                let nx = p[x];
                p[x] = r;
                x = nx;
            }
            r
        }
        for c in &self.circuits {
            for w in c.support.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for i in 0..n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        groups
            .into_values()
            .map(|elements| {
                let mask = to_mask(&elements);
                let is_circuit = self.circuits.iter().any(|c| c.mask() == mask);
                Component { elements, is_circuit }
            })
            .collect()
    }

    /// Number of independent subsets, by direct rank enumeration.
    pub fn count_independent_sets(&self) -> u64 {
        (0..=self.ground_mask()).filter(|&m| self.is_independent_mask(m)).count() as u64
    }
}

/// Brings column `col` to a single nonzero entry using unimodular integer
/// row operations; returns that entry's row.
fn clear_column(mut rows: Vec<Vec<BigInt>>, col: usize) -> (usize, Vec<Vec<BigInt>>) {
    loop {
        let nonzero: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r][col].is_zero()).collect();
        let pivot = *nonzero.iter().min_by_key(|&&r| rows[r][col].abs()).expect("column is not a loop");
        if nonzero.len() == 1 {
            return (pivot, rows);
        }
        for &r in &nonzero {
            if r == pivot {
                continue;
            }
            let f = &rows[r][col] / &rows[pivot][col];
            let prow = rows[pivot].clone();
            for (x, p) in rows[r].iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
    }
}

pub(crate) fn to_mask(elements: &[usize]) -> u32 {
    elements.iter().fold(0u32, |m, &i| m | (1 << i))
}

pub(crate) fn mask_elements(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask & (1 << i) != 0)
}

/// All `k`-subsets of `0..n` as bitmasks, in increasing numeric order.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1 << n;
    (0..limit).map(|m| m as u32).filter(move |m| m.count_ones() as usize == k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn hexagon() -> RealizedMatroid {
        RealizedMatroid::from_rows(&[[1, 0, 1], [0, 1, 1]]).unwrap()
    }

    #[test]
    fn hexagon_circuits_and_cocircuits() {
        let m = hexagon();
        assert_eq!(m.circuits(), &[CircuitRep { support: vec![0, 1, 2], alpha: big(&[1, 1, -1]) }]);
        let mut vs: Vec<Vec<BigInt>> = m.cocircuits().iter().map(|c| c.v.clone()).collect();
        vs.sort();
        let mut expected = vec![big(&[1, 0, 1]), big(&[0, 1, 1]), big(&[1, -1, 0])];
        expected.sort();
        assert_eq!(vs, expected);
        for cv in m.cocircuits() {
            assert_eq!(m.row_combination(&cv.c), cv.v);
            assert_eq!(cv.support_size, 2);
        }
    }

    #[test]
    fn empty_matroid() {
        let m = RealizedMatroid::from_matrix(vec![]).unwrap();
        assert_eq!((m.d(), m.n()), (0, 0));
        assert!(m.circuits().is_empty());
        assert!(m.cocircuits().is_empty());
        assert!(m.is_unimodular());
    }

    #[test]
    fn parallel_pair() {
        let m = RealizedMatroid::from_rows(&[[1, 1]]).unwrap();
        assert_eq!(m.circuits(), &[CircuitRep { support: vec![0, 1], alpha: big(&[1, -1]) }]);
        assert_eq!(m.cocircuits().len(), 1);
        assert_eq!(m.cocircuits()[0].v, big(&[1, 1]));
    }

    #[test]
    fn rank_queries() {
        let m = hexagon();
        assert_eq!(m.rank(&[0, 1]), 2);
        assert_eq!(m.rank(&[]), 0);
        assert_eq!(m.rank(&[2]), 1);
        assert_eq!(m.rank(&[0, 1, 2]), 2);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            RealizedMatroid::from_rows(&[[1, 2], [2, 4]]),
            Err(Error::RankDeficient { rank: 1, rows: 2 })
        ));
        assert!(matches!(
            RealizedMatroid::from_matrix(vec![big(&[1, 0]), big(&[1])]),
            Err(Error::Ragged { .. })
        ));
        let wide = vec![vec![1i64; 17]];
        assert!(matches!(RealizedMatroid::from_rows(&wide), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn unimodularity() {
        assert!(hexagon().is_unimodular());
        assert!(!RealizedMatroid::from_rows(&[[1, 1], [-1, 1]]).unwrap().is_unimodular());
        assert!(RealizedMatroid::from_rows(&[[1, 0], [0, 1]]).unwrap().is_unimodular());
        let err = RealizedMatroid::from_rows(&[[1, 1], [-1, 1]]).unwrap().require_unimodular().unwrap_err();
        assert!(matches!(err, Error::NotUnimodular(_)));
    }

    #[test]
    fn minors() {
        let m = hexagon();
        let del = m.minor(MinorOp::Delete, 2).unwrap();
        assert_eq!(del.realization().rows(), &[big(&[1, 0]), big(&[0, 1])]);
        let con = m.minor(MinorOp::Contract, 2).unwrap();
        assert_eq!((con.d(), con.n()), (1, 2));
        let row = &con.realization().rows()[0];
        assert!(row == &big(&[1, -1]) || row == &big(&[-1, 1]));
        let lp = RealizedMatroid::from_rows(&[[1, 0]]).unwrap();
        assert!(matches!(lp.minor(MinorOp::Contract, 1), Err(Error::ContractViolation(_))));
        let id = RealizedMatroid::from_rows(&[[1, 0], [0, 1]]).unwrap();
        assert!(matches!(id.minor(MinorOp::Delete, 0), Err(Error::ContractViolation(_))));
    }

    #[test]
    fn contraction_of_non_unit_column_keeps_unimodularity() {
        let m = RealizedMatroid::from_rows(&[[1, 0, 1, 1], [0, 1, 1, 0]]).unwrap();
        for i in 0..4 {
            if !m.is_loop(i) {
                assert!(m.minor(MinorOp::Contract, i).unwrap().is_unimodular());
            }
        }
    }

    #[test]
    fn thickening() {
        let m = RealizedMatroid::from_rows(&[[1]]).unwrap();
        let t = m.thicken(2).unwrap();
        assert_eq!(t.realization().rows(), &[big(&[1, 1])]);
        let h = hexagon();
        let h1 = h.thicken(1).unwrap();
        assert_eq!(h1.realization(), h.realization());
        let h2 = h.thicken(2).unwrap();
        assert_eq!(h2.realization().rows()[0], big(&[1, 0, 1, 1, 0, 1]));
        assert!(matches!(h.thicken(6), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn components() {
        assert_eq!(hexagon().connected_components(), vec![Component { elements: vec![0, 1, 2], is_circuit: true }]);
        let id = RealizedMatroid::from_rows(&[[1, 0], [0, 1]]).unwrap();
        assert_eq!(
            id.connected_components(),
            vec![
                Component { elements: vec![0], is_circuit: false },
                Component { elements: vec![1], is_circuit: false }
            ]
        );
        let m = RealizedMatroid::from_rows(&[[1, 0, 1, 1], [0, 1, 1, 0]]).unwrap();
        assert_eq!(m.connected_components(), vec![Component { elements: vec![0, 1, 2, 3], is_circuit: false }]);
        assert!(m.circuits().iter().any(|c| c.support == vec![0, 3]));
    }

    #[test]
    fn loops_are_singleton_circuits() {
        let m = RealizedMatroid::from_rows(&[[1, 1, 0]]).unwrap();
        assert!(m.is_loop(2));
        assert!(m.circuits().contains(&CircuitRep { support: vec![2], alpha: big(&[1]) }));
        let comps = m.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.is_circuit));
    }
}

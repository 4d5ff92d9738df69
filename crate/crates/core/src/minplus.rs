//! Min-plus (tropical) matrices: distance products, closures by repeated
//! squaring, threshold capping and the exponent-encoding product.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::dist::INF_RAW;
use crate::{Dist, Graph, RpError};

/// Dense row-major matrix over `Z ∪ {∞}`.
#[derive(Clone, PartialEq, Eq)]
pub struct MinPlusMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
    bound: Option<i64>,
}

impl MinPlusMatrix {
    /// All-infinite matrix.
    pub fn infinite(rows: usize, cols: usize) -> MinPlusMatrix {
        MinPlusMatrix { rows, cols, data: vec![INF_RAW; rows * cols], bound: None }
    }

    /// Tropical identity: zero diagonal, infinity elsewhere.
    pub fn identity(n: usize) -> MinPlusMatrix {
        let mut m = Self::infinite(n, n);
        for i in 0..n {
            m.set(i, i, Dist::ZERO);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Dist) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j).raw());
            }
        }
        MinPlusMatrix { rows, cols, data, bound: None }
    }

    /// Builds from rows of equal length.
    pub fn from_rows(rows: &[Vec<Dist>]) -> MinPlusMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| rows[i][j])
    }

    /// Weight matrix of `g`: `w(u, v)` for edges, infinity elsewhere
    /// (including the diagonal).
    pub fn from_graph(g: &Graph) -> MinPlusMatrix {
        let n = g.n();
        let mut m = Self::infinite(n, n);
        for (u, v, w) in g.edges() {
            m.set(u, v, Dist::finite(w));
        }
        m
    }

    /// Attaches a bound `N`: every finite entry must satisfy `|x| <= N`.
    pub fn with_bound(mut self, bound: i64) -> Result<MinPlusMatrix, RpError> {
        self.check_bound(bound)?;
        self.bound = Some(bound);
        Ok(self)
    }

    pub fn bound(&self) -> Option<i64> {
        self.bound
    }

    fn check_bound(&self, bound: i64) -> Result<(), RpError> {
        match self.finite_values().find(|x| x.abs() > bound) {
            Some(value) => Err(RpError::EntryOutOfBound { value, bound }),
            None => Ok(()),
        }
    }

    fn finite_values(&self) -> impl Iterator<Item = i64> + '_ {
        self.data.iter().copied().filter(|&x| x != INF_RAW)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Dist {
        Dist::from_raw(self.data[i * self.cols + j])
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Dist) {
        self.data[i * self.cols + j] = value.raw();
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = Dist> + '_ {
        self.data[i * self.cols..(i + 1) * self.cols].iter().map(|&x| Dist::from_raw(x))
    }

    fn row_raw(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

impl fmt::Debug for MinPlusMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for i in 0..self.rows {
            list.entry(&self.row(i).collect::<Vec<_>>());
        }
        list.finish()
    }
}

/// Distance product `(A ⋆ B)[i, j] = min_k A[i, k] + B[k, j]` by the direct
/// triple loop.
pub fn minplus_product(a: &MinPlusMatrix, b: &MinPlusMatrix) -> Result<MinPlusMatrix, RpError> {
    if a.cols != b.rows {
        return Err(RpError::DimensionMismatch { left_cols: a.cols, right_rows: b.rows });
    }
    let mut out = MinPlusMatrix::infinite(a.rows, b.cols);
    for i in 0..a.rows {
        let acc = &mut out.data[i * b.cols..(i + 1) * b.cols];
        for (k, &aik) in a.row_raw(i).iter().enumerate() {
            if aik == INF_RAW {
                continue;
            }
            // INF_RAW + finite stays above INF_FLOOR and is folded below
            for (c, &bkj) in acc.iter_mut().zip(b.row_raw(k)) {
                *c = (*c).min(aik + bkj);
            }
        }
        for c in acc.iter_mut() {
            if *c >= Dist::INF_FLOOR {
                *c = INF_RAW;
            }
        }
    }
    Ok(out)
}

/// All-pairs distance matrix of the graph whose weight matrix is `w`.
///
/// The diagonal is first lowered to `min(w[i][i], 0)`; then `w` is squared
/// up to `⌈log₂ n⌉` times, stopping early once a square leaves it unchanged.
pub fn minplus_closure(w: &MinPlusMatrix) -> Result<MinPlusMatrix, RpError> {
    if w.rows != w.cols {
        return Err(RpError::DimensionMismatch { left_cols: w.cols, right_rows: w.rows });
    }
    let n = w.rows;
    let mut d = w.clone();
    d.bound = None;
    for i in 0..n {
        let diag = d.get(i, i).min(Dist::ZERO);
        d.set(i, i, diag);
    }
    let squarings = ceil_log2(n);
    for _ in 0..squarings {
        let next = minplus_product(&d, &d)?;
        if next == d {
            break;
        }
        d = next;
    }
    if (0..n).any(|i| d.get(i, i) < Dist::ZERO) {
        return Err(RpError::NegativeCycle);
    }
    Ok(d)
}

fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// Copy of `a` with every finite entry above `threshold` replaced by
/// infinity. Entries at or below the threshold, negative ones included,
/// are kept.
pub fn cap_entries(a: &MinPlusMatrix, threshold: Dist) -> MinPlusMatrix {
    let mut out = a.clone();
    if threshold.is_finite() {
        let limit = threshold.raw();
        for x in out.data.iter_mut() {
            if *x != INF_RAW && *x > limit {
                *x = INF_RAW;
            }
        }
    }
    out
}

/// Distance product through ordinary integer matrix multiplication.
///
/// A finite entry `x` is encoded as `base^(bound - x)` with
/// `base = cols + 1` and infinity as `0`. A product entry is then a sum of at
/// most `cols` powers of `base`, so no base-digit carries, and its highest
/// nonzero digit sits at position `2 * bound - min_k (x_ik + y_kj)`.
pub fn minplus_via_scaling(
    a: &MinPlusMatrix,
    b: &MinPlusMatrix,
    bound: i64,
) -> Result<MinPlusMatrix, RpError> {
    if a.cols != b.rows {
        return Err(RpError::DimensionMismatch { left_cols: a.cols, right_rows: b.rows });
    }
    if bound < 0 {
        return Err(RpError::InvalidParameter("scaling bound must be nonnegative"));
    }
    a.check_bound(bound)?;
    b.check_bound(bound)?;

    let base = BigUint::from(a.cols as u64 + 1);
    // encoded entries use exponents up to 2 * bound, products up to 4 * bound
    let top = (4 * bound) as usize;
    let mut powers = Vec::with_capacity(top + 1);
    powers.push(BigUint::from(1u32));
    for e in 1..=top {
        let next = &powers[e - 1] * &base;
        powers.push(next);
    }
    let zero = BigUint::from(0u32);
    let encode = |x: i64| -> BigUint {
        if x == INF_RAW {
            zero.clone()
        } else {
            powers[(bound - x) as usize].clone()
        }
    };
    let ea: Vec<BigUint> = a.data.iter().map(|&x| encode(x)).collect();
    let eb: Vec<BigUint> = b.data.iter().map(|&x| encode(x)).collect();

    let mut out = MinPlusMatrix::infinite(a.rows, b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut sum = BigUint::from(0u32);
            for k in 0..a.cols {
                let (x, y) = (&ea[i * a.cols + k], &eb[k * b.cols + j]);
                if *x != zero && *y != zero {
                    sum += x * y;
                }
            }
            if sum == zero {
                continue;
            }
            // highest digit position: the largest e with base^e <= sum
            let digit = powers.partition_point(|p| *p <= sum) - 1;
            out.set(i, j, Dist::finite(2 * bound - digit as i64));
        }
    }
    Ok(out)
}

/// Distances of `g` that are at most `threshold`, infinity for the rest
/// (where larger true distances may also survive).
pub fn bounded_distance_matrix(g: &Graph, threshold: Dist) -> Result<MinPlusMatrix, RpError> {
    let closure = minplus_closure(&MinPlusMatrix::from_graph(g))?;
    Ok(cap_entries(&closure, threshold))
}

//! Dense exact rational matrices.
//!
//! Rank, determinant and reduced echelon forms run fraction-free (Bareiss)
//! on integer rows obtained by clearing denominators row by row. The
//! elimination first runs in `i128` and restarts in arbitrary precision if
//! any intermediate overflows, so results never depend on the fast path.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        RationalMatrix {
            nrows,
            ncols,
            data: vec![BigRational::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>, ncols: usize) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(RationalMatrix { nrows, ncols, data })
    }

    /// Integer matrix from literal rows; all rows must have equal length.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), ncols, "ragged literal matrix");
                r.iter().map(|&v| BigRational::from_integer(v.into()))
            })
            .collect();
        RationalMatrix {
            nrows: rows.len(),
            ncols,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.data[i * self.ncols + j] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: &BigRational) {
        self.data[i * self.ncols + j] += value;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols && *self == Self::identity(self.nrows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t.data[j * self.nrows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn trace(&self) -> BigRational {
        (0..self.nrows.min(self.ncols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let mut out = Self::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for l in 0..self.ncols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.data[i * other.ncols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if (self.nrows, self.ncols) != (other.nrows, other.ncols) {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        Ok(RationalMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, alpha: &BigRational) -> RationalMatrix {
        RationalMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self.data.iter().map(|a| a * alpha).collect(),
        }
    }

    /// Rows scaled to integers by the least common multiple of their denominators.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut total_scale = BigInt::one();
        let rows = (0..self.nrows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                let scaled = row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
                total_scale *= &lcm;
                scaled
            })
            .collect();
        (rows, total_scale)
    }

    pub fn rank(&self) -> usize {
        let (rows, _) = self.integer_rows();
        integer_rank(&rows, self.ncols)
    }

    /// Row count minus rank.
    pub fn corank(&self) -> usize {
        self.nrows - self.rank()
    }

    pub fn determinant(&self) -> Result<BigRational> {
        if self.nrows != self.ncols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.nrows, self.ncols
            )));
        }
        let (rows, scale) = self.integer_rows();
        let det = integer_determinant(&rows, self.ncols);
        Ok(BigRational::new(det, scale))
    }

    /// Exact inverse by rational Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<RationalMatrix> {
        if self.nrows != self.ncols {
            return Err(Error::DimensionMismatch(format!(
                "inverse of a {}x{} matrix",
                self.nrows, self.ncols
            )));
        }
        let n = self.nrows;
        let mut a: Vec<Vec<BigRational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut inv: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].recip();
            for v in a[col].iter_mut() {
                *v *= &p;
            }
            for v in inv[col].iter_mut() {
                *v *= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in 0..n {
                    if !a[col][j].is_zero() {
                        let delta = &factor * &a[col][j];
                        a[r][j] -= delta;
                    }
                    if !inv[col][j].is_zero() {
                        let delta = &factor * &inv[col][j];
                        inv[r][j] -= delta;
                    }
                }
            }
        }
        RationalMatrix::from_rows(inv, n)
    }

    /// Reduced row echelon form of the row space.
    pub fn reduced_echelon(&self) -> ReducedEchelon {
        let (rows, _) = self.integer_rows();
        integer_reduced_echelon(&rows, self.ncols)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.nrows, self.ncols)?;
        for i in 0..self.nrows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Row and column block sizes of a block matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLayout {
    pub row_sizes: Vec<usize>,
    pub col_sizes: Vec<usize>,
}

impl BlockLayout {
    pub fn new(row_sizes: Vec<usize>, col_sizes: Vec<usize>) -> Self {
        BlockLayout {
            row_sizes,
            col_sizes,
        }
    }

    pub fn total_rows(&self) -> usize {
        self.row_sizes.iter().sum()
    }

    pub fn total_cols(&self) -> usize {
        self.col_sizes.iter().sum()
    }

    pub fn row_offset(&self, block: usize) -> usize {
        self.row_sizes[..block].iter().sum()
    }

    pub fn col_offset(&self, block: usize) -> usize {
        self.col_sizes[..block].iter().sum()
    }
}

/// Flattens a grid of blocks. `None` cells are zero blocks.
pub fn assemble_blocks(
    layout: &BlockLayout,
    blocks: &[Vec<Option<RationalMatrix>>],
) -> Result<RationalMatrix> {
    if blocks.len() != layout.row_sizes.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} block rows for a layout with {}",
            blocks.len(),
            layout.row_sizes.len()
        )));
    }
    let mut out = RationalMatrix::zeros(layout.total_rows(), layout.total_cols());
    for (bi, block_row) in blocks.iter().enumerate() {
        if block_row.len() != layout.col_sizes.len() {
            return Err(Error::DimensionMismatch(format!(
                "block row {bi} has {} blocks, layout has {}",
                block_row.len(),
                layout.col_sizes.len()
            )));
        }
        let r0 = layout.row_offset(bi);
        for (bj, block) in block_row.iter().enumerate() {
            let Some(block) = block else { continue };
            let expected = (layout.row_sizes[bi], layout.col_sizes[bj]);
            if (block.nrows, block.ncols) != expected {
                return Err(Error::DimensionMismatch(format!(
                    "block ({bi}, {bj}) is {}x{}, layout cell is {}x{}",
                    block.nrows, block.ncols, expected.0, expected.1
                )));
            }
            let c0 = layout.col_offset(bj);
            for i in 0..block.nrows {
                for j in 0..block.ncols {
                    let v = block.get(i, j);
                    if !v.is_zero() {
                        out.set(r0 + i, c0 + j, v.clone());
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Reduced row echelon form kept over the integers: row `i` of the rational
/// form is `numerators[i] / denominator`, with `1` at column `pivots[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedEchelon {
    pub pivots: Vec<usize>,
    pub numerators: Vec<Vec<BigInt>>,
    pub denominator: BigInt,
}

impl ReducedEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> BigRational {
        BigRational::new(self.numerators[i][j].clone(), self.denominator.clone())
    }
}

trait Scalar: Clone + PartialEq + Sized {
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn is_nil(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    /// `(p * x - q * y) / d`, exact; `None` on overflow.
    fn cross(p: &Self, x: &Self, q: &Self, y: &Self, d: &Self) -> Option<Self>;
}

impl Scalar for i128 {
    fn zero_value() -> Self {
        0
    }
    fn one_value() -> Self {
        1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn cross(p: &Self, x: &Self, q: &Self, y: &Self, d: &Self) -> Option<Self> {
        let a = p.checked_mul(*x)?;
        let b = q.checked_mul(*y)?;
        let num = a.checked_sub(b)?;
        debug_assert_eq!(num % d, 0, "Bareiss division must be exact");
        if *d == 1 {
            Some(num)
        } else {
            num.checked_div(*d)
        }
    }
}

impl Scalar for BigInt {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn one_value() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn cross(p: &Self, x: &Self, q: &Self, y: &Self, d: &Self) -> Option<Self> {
        let num = p * x - q * y;
        if d.is_one() {
            Some(num)
        } else {
            debug_assert!(Zero::is_zero(&(&num % d)), "Bareiss division must be exact");
            Some(num / d)
        }
    }
}

struct Elimination<T> {
    pivots: Vec<usize>,
    /// Last pivot, which is the leading principal minor of the selected rows/columns.
    last_pivot: T,
    swaps: usize,
}

/// Fraction-free elimination. With `reduce` the rows above each pivot are
/// cleared as well, giving every pivot the common value `last_pivot`.
fn bareiss<T: Scalar>(a: &mut [Vec<T>], ncols: usize, reduce: bool) -> Option<Elimination<T>> {
    let nrows = a.len();
    let mut prev = T::one_value();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        // Smallest nonzero magnitude keeps intermediate entries short.
        let mut best: Option<usize> = None;
        for i in r..nrows {
            if !a[i][c].is_nil() && best.is_none_or(|b| a[i][c].abs_lt(&a[b][c])) {
                best = Some(i);
            }
        }
        let Some(best) = best else { continue };
        if best != r {
            a.swap(best, r);
            swaps += 1;
        }
        let (above, rest) = a.split_at_mut(r);
        let (pivot_row, below) = rest.split_first_mut().expect("pivot row exists");
        let p = pivot_row[c].clone();
        let trivial_scale = p == prev;
        let update = |row: &mut Vec<T>| -> Option<()> {
            let q = row[c].clone();
            if q.is_nil() {
                if trivial_scale {
                    return Some(());
                }
                for v in row.iter_mut().take(ncols) {
                    if !v.is_nil() {
                        *v = T::cross(&p, v, &T::zero_value(), &T::zero_value(), &prev)?;
                    }
                }
                return Some(());
            }
            for j in 0..ncols {
                if j == c {
                    continue;
                }
                if pivot_row[j].is_nil() {
                    if !trivial_scale && !row[j].is_nil() {
                        row[j] = T::cross(&p, &row[j], &T::zero_value(), &T::zero_value(), &prev)?;
                    }
                } else {
                    row[j] = T::cross(&p, &row[j], &q, &pivot_row[j], &prev)?;
                }
            }
            row[c] = T::zero_value();
            Some(())
        };
        for row in below.iter_mut() {
            update(row)?;
        }
        if reduce {
            for row in above.iter_mut() {
                update(row)?;
            }
        }
        pivots.push(c);
        prev = p;
        r += 1;
    }
    Some(Elimination {
        pivots,
        last_pivot: prev,
        swaps,
    })
}

fn to_i128_rows(rows: &[Vec<BigInt>], ncols: usize) -> Option<Vec<Vec<i128>>> {
    rows.iter()
        .map(|r| {
            debug_assert_eq!(r.len(), ncols);
            r.iter()
                .map(ToPrimitive::to_i128)
                .collect::<Option<Vec<_>>>()
        })
        .collect()
}

/// Exact rank of an integer matrix given by rows.
pub fn integer_rank(rows: &[Vec<BigInt>], ncols: usize) -> usize {
    if let Some(mut small) = to_i128_rows(rows, ncols) {
        if let Some(e) = bareiss(&mut small, ncols, false) {
            return e.pivots.len();
        }
    }
    let mut big = rows.to_vec();
    bareiss(&mut big, ncols, false)
        .expect("arbitrary precision never overflows")
        .pivots
        .len()
}

fn integer_determinant(rows: &[Vec<BigInt>], n: usize) -> BigInt {
    let finish = |rank: usize, last: BigInt, swaps: usize| {
        if rank < n {
            <BigInt as Zero>::zero()
        } else if swaps % 2 == 1 {
            -last
        } else {
            last
        }
    };
    if let Some(mut small) = to_i128_rows(rows, n) {
        if let Some(e) = bareiss(&mut small, n, false) {
            return finish(e.pivots.len(), BigInt::from(e.last_pivot), e.swaps);
        }
    }
    let mut big = rows.to_vec();
    let e = bareiss(&mut big, n, false).expect("arbitrary precision never overflows");
    finish(e.pivots.len(), e.last_pivot, e.swaps)
}

/// Reduced row echelon form of the row space of an integer matrix.
pub fn integer_reduced_echelon(rows: &[Vec<BigInt>], ncols: usize) -> ReducedEchelon {
    fn finish<T: Scalar + Into<BigInt>>(a: Vec<Vec<T>>, e: Elimination<T>) -> ReducedEchelon {
        let rank = e.pivots.len();
        let mut denominator: BigInt = e.last_pivot.into();
        let mut numerators: Vec<Vec<BigInt>> = a
            .into_iter()
            .take(rank)
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        if denominator.is_negative() {
            denominator = -denominator;
            for row in &mut numerators {
                for v in row.iter_mut() {
                    *v = -(&*v);
                }
            }
        }
        ReducedEchelon {
            pivots: e.pivots,
            numerators,
            denominator,
        }
    }
    if let Some(mut small) = to_i128_rows(rows, ncols) {
        if let Some(e) = bareiss(&mut small, ncols, true) {
            return finish(small, e);
        }
    }
    let mut big = rows.to_vec();
    let e = bareiss(&mut big, ncols, true).expect("arbitrary precision never overflows");
    finish(big, e)
}

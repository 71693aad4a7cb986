//! Dense exact linear algebra over the rationals.
//!
//! Everything downstream (multiplication tables, module actions, resolutions)
//! reduces to row reduction of `Mat` values, so this module pins the exact
//! semantics once: deterministic first-nonzero pivoting, fully reduced
//! echelon form, kernels returned as row bases.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar: reduced fraction with positive denominator.
/// Prints as `num/den`, or just `num` when the denominator is 1, and parses
/// both forms back.
pub type Rat = BigRational;

/// Rational from an integer, for table literals.
pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense row-major matrix over [`Rat`].
///
/// `rows == 0` or `cols == 0` is legal and shows up constantly (zero modules,
/// empty complexes); all operations must stay total there.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Integer literal grid, mostly for tables and tests.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat::from_fn(r, c, |i, j| rat_int(rows[i][j]))
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    /// A single row vector.
    pub fn row_vec(entries: Vec<Rat>) -> Self {
        let c = entries.len();
        Mat { rows: 1, cols: c, data: entries }
    }

    /// Standard basis row e_i of length n.
    pub fn unit_row(n: usize, i: usize) -> Self {
        let mut m = Mat::zeros(1, n);
        m[(0, i)] = Rat::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mat(&self, i: usize) -> Mat {
        Mat { rows: 1, cols: self.cols, data: self.row(i).to_vec() }
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self[(i, j)].clone() } else { other[(i, j - self.cols)].clone() }
        })
    }

    /// Vertical concatenation `[self; other]`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack col mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block diagonal `[self 0; 0 other]`.
    pub fn block_diag(&self, other: &Mat) -> Mat {
        Mat::from_fn(self.rows + other.rows, self.cols + other.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)].clone()
            } else if i >= self.rows && j >= self.cols {
                other[(i - self.rows, j - self.cols)].clone()
            } else {
                Rat::zero()
            }
        })
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols);
        Mat::from_fn(r1 - r0, c1 - c0, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let c = self.cols;
            self.data.swap(a * c + j, b * c + j);
        }
    }

    /// Reduced row echelon form plus the pivot column list.
    ///
    /// Pivoting is deterministic: scan columns left to right and take the
    /// first row with a nonzero entry.  Same input, same output, always.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].clone();
            for j in 0..m.cols {
                let v = &m[(r, j)] / &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in 0..m.cols {
                    let v = &m[(i, j)] - &(&f * &m[(r, j)]);
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{ v : self * v^T = 0 }`, one kernel vector per row.
    /// Row count is always `cols - rank`.
    pub fn kernel_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out[(k, f)] = Rat::one();
            for (j, &p) in pivots.iter().enumerate() {
                out[(k, p)] = -r[(j, f)].clone();
            }
        }
        out
    }

    /// Basis of `{ v : v * self = 0 }` (kernel of the row-vector action).
    pub fn left_kernel_basis(&self) -> Mat {
        self.transpose().kernel_basis()
    }

    /// Canonical basis of the row space: the nonzero rows of the rref.
    pub fn row_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        r.submatrix(0, pivots.len(), 0, self.cols)
    }

    /// Does `v` (a row) lie in the row span of `self`?
    pub fn row_span_contains(&self, v: &Mat) -> bool {
        assert_eq!(v.rows, 1);
        assert_eq!(v.cols, self.cols);
        self.vstack(v).rank() == self.rank()
    }
}

/// Solve `a * x = b` for `x` (`a.rows == b.rows`); `None` when inconsistent.
/// Free variables are set to zero, so the answer is deterministic.
pub fn solve_linear(a: &Mat, b: &Mat) -> Option<Mat> {
    assert_eq!(a.rows, b.rows, "solve_linear shape mismatch");
    let (r, pivots) = a.hstack(b).rref();
    // a pivot inside the b block means some equation reduced to 0 = 1
    if pivots.iter().any(|&p| p >= a.cols) {
        return None;
    }
    let mut x = Mat::zeros(a.cols, b.cols);
    for (j, &p) in pivots.iter().enumerate() {
        for k in 0..b.cols {
            x[(p, k)] = r[(j, a.cols + k)].clone();
        }
    }
    Some(x)
}

/// Solve `x * a = b` in the row-vector convention.
pub fn solve_left(a: &Mat, b: &Mat) -> Option<Mat> {
    solve_linear(&a.transpose(), &b.transpose()).map(|x| x.transpose())
}

/// Matrix of "reduce modulo the rref row space, then take the free
/// coordinates": v maps to the coordinates of v minus its pivot combination,
/// restricted to the non-pivot columns.  Composing with the inclusion of the
/// free standard basis vectors gives the identity on the complement.
pub(crate) fn reduction_matrix(rref_rows: &Mat, pivots: &[usize], free: &[usize], dim: usize) -> Mat {
    Mat::from_fn(dim, free.len(), |i, k| {
        let f = free[k];
        if i == f {
            Rat::one()
        } else if let Some(j) = pivots.iter().position(|&p| p == i) {
            -rref_rows[(j, f)].clone()
        } else {
            Rat::zero()
        }
    })
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "add shape mismatch");
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "sub shape mismatch");
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| -self[(i, j)].clone())
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "mul shape mismatch");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lik = &self[(i, k)];
                if lik.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    if rhs[(k, j)].is_zero() {
                        continue;
                    }
                    let v = &out[(i, j)] + &(lik * &rhs[(k, j)]);
                    out[(i, j)] = v;
                }
            }
        }
        out
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Fraction-free rank by Bareiss elimination over the integers.
///
/// Independent of `rref`: clears denominators, then runs two-step
/// determinant-preserving elimination.  Used to cross-check ranks.
pub fn bareiss_rank(m: &Mat) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    // common denominator per row keeps entries integral
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let mut lcm = BigInt::one();
            for j in 0..m.cols {
                lcm = num_integer::lcm(lcm, m[(i, j)].denom().clone());
            }
            (0..m.cols).map(|j| (&m[(i, j)] * Rat::from_integer(lcm.clone())).to_integer()).collect()
        })
        .collect();
    let (rows, cols) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                // exact by the Bareiss identity
                a[i][j] = num / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        rank += 1;
        r += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_display_and_parse() {
        let x: Rat = "3/4".parse().unwrap();
        assert_eq!(x.to_string(), "3/4");
        let y: Rat = "-6/8".parse().unwrap();
        assert_eq!(y.to_string(), "-3/4");
        let z: Rat = "7".parse().unwrap();
        assert_eq!(z.to_string(), "7");
        assert_eq!((&x + &y).to_string(), "0");
    }

    #[test]
    fn rref_known() {
        let m = Mat::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r.row(0), Mat::from_int_rows(&[&[1, 0, 1]]).row(0));
        assert_eq!(r.row(1), Mat::from_int_rows(&[&[0, 1, 1]]).row(0));
        assert!(r.row(2).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn kernel_annihilates() {
        let m = Mat::from_int_rows(&[&[1, 2, 3, 4], &[0, 1, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), m.cols() - m.rank());
        assert!((&m * &k.transpose()).is_zero());
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = Mat::from_int_rows(&[&[1, 1], &[0, 1], &[1, 2]]);
        let b = Mat::from_int_rows(&[&[3], &[1], &[4]]);
        let x = solve_linear(&a, &b).unwrap();
        assert_eq!(&a * &x, b);
        let bad = Mat::from_int_rows(&[&[3], &[1], &[5]]);
        assert!(solve_linear(&a, &bad).is_none());
    }

    #[test]
    fn empty_shapes() {
        let m = Mat::zeros(0, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().rows(), 3);
        let n = Mat::zeros(3, 0);
        assert_eq!(n.rank(), 0);
        assert_eq!(n.kernel_basis().rows(), 0);
        let x = solve_linear(&m, &Mat::zeros(0, 2)).unwrap();
        assert_eq!((x.rows(), x.cols()), (3, 2));
    }
}

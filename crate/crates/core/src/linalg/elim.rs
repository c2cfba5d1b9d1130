//! Fraction-free elimination and the routines built on it.
//!
//! Rows are scaled to primitive integer vectors before elimination and every
//! row operation is of the form `row_i ← (a/g)·row_i − (b/g)·row_p` followed
//! by division by the row content, so no intermediate fractions appear.
//! Rationals are reintroduced only when reading off solutions.

use super::matrix::Matrix;
use super::rational::Rational;
use super::subspace::Subspace;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not invertible")]
    NotInvertible,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

/// Integer rows in reduced echelon shape: each pivot column is zero in every
/// row except its own.
pub(crate) struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn to_integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .filter(|r| !r.is_zero())
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let mut out: Vec<BigInt> =
        row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        if !v.is_zero() {
            *v /= &g;
        }
    }
}

impl Echelon {
    /// Eliminates using pivots only among the first `pivot_limit` columns.
    fn from_integer_rows(mut rows: Vec<Vec<BigInt>>, ncols: usize, pivot_limit: usize) -> Self {
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..pivot_limit.min(ncols) {
            if next >= rows.len() {
                break;
            }
            // smallest pivot keeps the coefficient growth down
            let Some(best) = (next..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by_key(|&r| rows[r][col].bits())
            else {
                continue;
            };
            rows.swap(next, best);
            let (head, tail) = rows.split_at_mut(next);
            let (pivot_row, tail) = tail.split_first_mut().expect("pivot row");
            let a = pivot_row[col].clone();
            for row in head.iter_mut().chain(tail.iter_mut()) {
                if row[col].is_zero() {
                    continue;
                }
                let b = row[col].clone();
                let g = a.gcd(&b);
                let (sa, sb) = (&a / &g, &b / &g);
                for (x, p) in row.iter_mut().zip(pivot_row.iter()) {
                    if p.is_zero() {
                        if !x.is_zero() {
                            *x *= &sa;
                        }
                    } else {
                        *x = &*x * &sa - p * &sb;
                    }
                }
                make_primitive(row);
            }
            pivots.push(col);
            next += 1;
        }
        Echelon { rows, pivots }
    }

    pub(crate) fn reduce(rows: &[Vec<Rational>], ncols: usize) -> Self {
        let ints = rows.iter().map(|r| to_integer_row(r)).collect();
        Echelon::from_integer_rows(ints, ncols, ncols)
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the null space of the reduced rows (columns `0..ncols`).
    fn null_space(&self, ncols: usize) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..ncols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (r, &p) in self.pivots.iter().enumerate() {
                let num = &self.rows[r][free];
                if !num.is_zero() {
                    v[p] = -Rational::new(num.clone(), self.rows[r][p].clone());
                }
            }
            out.push(v);
        }
        out
    }
}

pub fn rank(a: &Matrix) -> usize {
    Echelon::reduce(&a.to_rows(), a.cols()).rank()
}

/// Basis of `{v : A·v = 0}`.
pub fn kernel(a: &Matrix) -> Subspace {
    kernel_of_rows(&a.to_rows(), a.cols())
}

/// Null space of a system given directly as rows over `ncols` unknowns.
pub fn kernel_of_rows(rows: &[Vec<Rational>], ncols: usize) -> Subspace {
    let nonzero: Vec<Vec<Rational>> =
        rows.iter().filter(|r| r.iter().any(|v| !v.is_zero())).cloned().collect();
    let ech = Echelon::reduce(&nonzero, ncols);
    Subspace::from_independent(ncols, ech.null_space(ncols))
}

/// Some `x` with `A·x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::DimensionMismatch(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            a.rows()
        )));
    }
    let n = a.cols();
    let rows: Vec<Vec<BigInt>> = (0..a.rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            to_integer_row(&r)
        })
        .collect();
    let ech = Echelon::from_integer_rows(rows, n + 1, n);
    for row in &ech.rows[ech.rank()..] {
        if !row[n].is_zero() {
            return Ok(None);
        }
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &p) in ech.pivots.iter().enumerate() {
        x[p] = Rational::new(ech.rows[r][n].clone(), ech.rows[r][p].clone());
    }
    Ok(Some(x))
}

pub fn inverse(a: &Matrix) -> Result<Matrix, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            to_integer_row(&r)
        })
        .collect();
    let ech = Echelon::from_integer_rows(rows, 2 * n, n);
    if ech.rank() < n {
        return Err(LinalgError::NotInvertible);
    }
    let mut inv = Matrix::zeros(n, n);
    for (r, &p) in ech.pivots.iter().enumerate() {
        let d = &ech.rows[r][p];
        for j in 0..n {
            let num = &ech.rows[r][n + j];
            if !num.is_zero() {
                inv[(p, j)] = Rational::new(num.clone(), d.clone());
            }
        }
    }
    Ok(inv)
}

/// Left inverse `(CᵀC)⁻¹Cᵀ` of a matrix with independent columns; maps a
/// vector in the column span to its coordinates.
pub fn left_inverse(c: &Matrix) -> Result<Matrix, LinalgError> {
    let ct = c.transpose();
    Ok(&inverse(&(&ct * c))? * &ct)
}

/// `ker (A − λI)^dim`, computed by raising the power until the kernel stops
/// growing.
pub fn generalized_eigenspace(a: &Matrix, lambda: &Rational) -> Subspace {
    assert!(a.is_square(), "generalized_eigenspace needs a square matrix");
    let n = a.rows();
    let shifted = a - &Matrix::scalar(n, lambda);
    let mut power = shifted.clone();
    let mut k = kernel(&power);
    if k.is_zero() {
        return k;
    }
    for _ in 1..n {
        power = &power * &shifted;
        let next = kernel(&power);
        if next.dim() == k.dim() {
            break;
        }
        k = next;
    }
    k
}

/// Row-sum norm rounded up; bounds the absolute value of every eigenvalue.
pub fn spectral_bound(a: &Matrix) -> i64 {
    use num_traits::{Signed, ToPrimitive};
    (0..a.rows())
        .map(|i| a.row(i).iter().map(|e| e.abs()).sum::<Rational>())
        .max()
        .map_or(0, |r| r.ceil().to_integer().to_i64().unwrap_or(i64::MAX))
}

/// Integer eigenvalues of `a` in `[-bound, bound]` together with their
/// generalized eigenspaces.
pub fn integer_eigenspaces(a: &Matrix, bound: i64) -> Vec<(i64, Subspace)> {
    assert!(a.is_square());
    let candidates: Vec<i64> = if is_triangular(a) {
        let mut c: Vec<i64> = (0..a.rows())
            .filter_map(|i| super::rational::as_i64(&a[(i, i)]))
            .filter(|v| v.abs() <= bound)
            .collect();
        c.sort_unstable();
        c.dedup();
        c
    } else {
        (-bound..=bound).collect()
    };
    candidates
        .into_iter()
        .filter_map(|l| {
            let s = generalized_eigenspace(a, &super::rational::int(l));
            (!s.is_zero()).then_some((l, s))
        })
        .collect()
}

fn is_triangular(a: &Matrix) -> bool {
    let n = a.rows();
    let upper = (0..n).all(|i| (0..i).all(|j| a[(i, j)].is_zero()));
    upper || (0..n).all(|i| (i + 1..n).all(|j| a[(i, j)].is_zero()))
}

/// Radical of the subalgebra spanned by `basis`, returned in coordinates with
/// respect to `basis`: the null space of the trace form `tr(a·b)`, which is
/// the Jacobson radical in characteristic zero.
pub fn algebra_radical(basis: &[Matrix]) -> Subspace {
    let k = basis.len();
    let gram: Vec<Vec<Rational>> = (0..k)
        .map(|i| (0..k).map(|j| (&basis[i] * &basis[j]).trace()).collect())
        .collect();
    kernel_of_rows(&gram, k)
}

/// Linear combination `Σ coeffs[i]·mats[i]`.
pub fn combine(mats: &[Matrix], coeffs: &[Rational]) -> Matrix {
    assert_eq!(mats.len(), coeffs.len());
    let (r, c) = mats.first().map_or((0, 0), |m| (m.rows(), m.cols()));
    let mut acc = Matrix::zeros(r, c);
    for (m, k) in mats.iter().zip(coeffs) {
        if !k.is_zero() {
            acc = &acc + &m.scale(k);
        }
    }
    acc
}

/// `true` when `a^n = 0` for `n = rows`.
pub fn is_nilpotent(a: &Matrix) -> bool {
    a.is_square() && a.pow(a.rows().max(1) as u32).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{frac, int};

    #[test]
    fn kernel_examples() {
        assert!(kernel(&Matrix::identity(3)).is_zero());
        assert_eq!(kernel(&Matrix::zeros(2, 3)).dim(), 3);
        let k = kernel(&Matrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[int(-2), int(1)]));
    }

    #[test]
    fn solve_examples() {
        let b = vec![int(3), frac(-1, 2), int(7)];
        assert_eq!(solve(&Matrix::identity(3), &b).unwrap(), Some(b.clone()));
        let a = Matrix::from_i64(&[&[1, 1]]);
        let x = solve(&a, &[int(2)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], int(2));
        let inconsistent = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&inconsistent, &[int(1), int(3)]).unwrap(), None);
        assert!(matches!(solve(&a, &[int(1), int(2)]), Err(LinalgError::DimensionMismatch(_))));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse(&Matrix::identity(4)).unwrap(), Matrix::identity(4));
        let u = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        assert_eq!(inverse(&u).unwrap(), Matrix::from_i64(&[&[1, -1], &[0, 1]]));
        let singular = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(inverse(&singular), Err(LinalgError::NotInvertible));
        assert_eq!(
            inverse(&Matrix::zeros(2, 3)),
            Err(LinalgError::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn eigenspace_examples() {
        let d = Matrix::diagonal(&[int(1), int(2)]);
        let e1 = generalized_eigenspace(&d, &int(1));
        assert_eq!(e1.dim(), 1);
        assert!(e1.contains(&[int(1), int(0)]));
        let j = Matrix::from_i64(&[&[3, 1], &[0, 3]]);
        assert_eq!(generalized_eigenspace(&j, &int(3)).dim(), 2);
        assert!(generalized_eigenspace(&j, &int(2)).is_zero());
    }

    #[test]
    fn radical_examples() {
        assert!(algebra_radical(&[Matrix::identity(3)]).is_zero());
        let n = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let r = algebra_radical(&[Matrix::identity(2), n]);
        assert_eq!(r.dim(), 1);
        assert!(r.contains(&[int(0), int(1)]));
    }
}

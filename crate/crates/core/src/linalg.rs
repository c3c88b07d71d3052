//! Exact integer and rational linear algebra on small dense matrices.
//!
//! Matrices are row-major slices. Every intermediate product is formed in
//! `i128` and narrowed back with a checked conversion, so overflow surfaces
//! as [`Error::Overflow`] instead of wrapping.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

pub(crate) fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn det(n: usize, m: &[i64]) -> Result<i64> {
    debug_assert_eq!(m.len(), n * n);
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<i128> = m.iter().map(|&x| x as i128).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| a[r * n + k] != 0) else {
                return Ok(0);
            };
            for c in 0..n {
                a.swap(k * n + c, swap * n + c);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = pivot.checked_mul(a[i * n + j]).ok_or(Error::Overflow)?;
                let rhs = a[i * n + k].checked_mul(a[k * n + j]).ok_or(Error::Overflow)?;
                // exact by Sylvester's identity
                a[i * n + j] = lhs.checked_sub(rhs).ok_or(Error::Overflow)? / prev;
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }
    narrow(sign * a[n * n - 1])
}

/// Leading principal minors `d_1, d_2, ...` in index order.
///
/// Elimination runs without pivoting, so the sequence stops right after the
/// first vanishing minor; callers only need the sign pattern up to that point.
pub fn leading_minors(n: usize, m: &[i64]) -> Result<Vec<i64>> {
    debug_assert_eq!(m.len(), n * n);
    let mut a: Vec<i128> = m.iter().map(|&x| x as i128).collect();
    let mut out = Vec::with_capacity(n);
    let mut prev = 1i128;
    for k in 0..n {
        let pivot = a[k * n + k];
        out.push(narrow(pivot)?);
        if pivot == 0 {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = pivot.checked_mul(a[i * n + j]).ok_or(Error::Overflow)?;
                let rhs = a[i * n + k].checked_mul(a[k * n + j]).ok_or(Error::Overflow)?;
                a[i * n + j] = lhs.checked_sub(rhs).ok_or(Error::Overflow)? / prev;
            }
        }
        prev = pivot;
    }
    Ok(out)
}

/// Principal submatrix on the given index set, in the given order.
pub fn principal_submatrix(n: usize, m: &[i64], idx: &[usize]) -> Vec<i64> {
    let k = idx.len();
    let mut out = Vec::with_capacity(k * k);
    for &i in idx {
        for &j in idx {
            out.push(m[i * n + j]);
        }
    }
    out
}

/// Solve `m * x = b` over the rationals. `m` must be nonsingular.
pub fn solve_rational(n: usize, m: &[i64], b: &[i64]) -> Result<Vec<Rational>> {
    let mut a: Vec<Rational> = m.iter().map(|&x| Rational::from_integer(x)).collect();
    let mut rhs: Vec<Rational> = b.iter().map(|&x| Rational::from_integer(x)).collect();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
            return Err(Error::SingularMatrix);
        };
        if p != k {
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            rhs.swap(k, p);
        }
        let pivot = a[k * n + k];
        for i in 0..n {
            if i == k || a[i * n + k].is_zero() {
                continue;
            }
            let f = a[i * n + k].checked_div(&pivot).ok_or(Error::Overflow)?;
            for j in k..n {
                let t = f.checked_mul(&a[k * n + j]).ok_or(Error::Overflow)?;
                a[i * n + j] = a[i * n + j].checked_sub(&t).ok_or(Error::Overflow)?;
            }
            let t = f.checked_mul(&rhs[k]).ok_or(Error::Overflow)?;
            rhs[i] = rhs[i].checked_sub(&t).ok_or(Error::Overflow)?;
        }
    }
    (0..n)
        .map(|i| rhs[i].checked_div(&a[i * n + i]).ok_or(Error::Overflow))
        .collect()
}

/// `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

pub fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Basis of the integer lattice `{x in Z^cols : m x = 0}`.
///
/// Unimodular column operations bring `m` to column echelon form; the
/// transformation columns past the pivots span the kernel over `Z`, so the
/// result is saturated (no rational kernel point is missed by the integer
/// span). The basis is then put in row Hermite normal form.
pub fn integer_kernel(rows: usize, cols: usize, m: &[i64]) -> Result<Vec<Vec<i64>>> {
    debug_assert_eq!(m.len(), rows * cols);
    let mut a: Vec<i128> = m.iter().map(|&x| x as i128).collect();
    let mut u: Vec<i128> = vec![0; cols * cols];
    for i in 0..cols {
        u[i * cols + i] = 1;
    }
    let col_op = |mat: &mut [i128], nrows: usize, p: usize, c: usize, coeffs: [i128; 4]| -> Result<()> {
        let [s, t, x, y] = coeffs;
        for r in 0..nrows {
            let vp = mat[r * cols + p];
            let vc = mat[r * cols + c];
            let np = s
                .checked_mul(vp)
                .and_then(|l| t.checked_mul(vc).and_then(|q| l.checked_add(q)))
                .ok_or(Error::Overflow)?;
            let nc = x
                .checked_mul(vp)
                .and_then(|l| y.checked_mul(vc).and_then(|q| l.checked_add(q)))
                .ok_or(Error::Overflow)?;
            mat[r * cols + p] = np;
            mat[r * cols + c] = nc;
        }
        Ok(())
    };
    let mut pivot_col = 0usize;
    for r in 0..rows {
        if pivot_col == cols {
            break;
        }
        for c in pivot_col + 1..cols {
            let b = a[r * cols + c];
            if b == 0 {
                continue;
            }
            let av = a[r * cols + pivot_col];
            let (g, s, t) = ext_gcd(av, b);
            // [[s, -b/g], [t, a/g]] has determinant 1
            let coeffs = [s, t, -b / g, av / g];
            col_op(&mut a, rows, pivot_col, c, coeffs)?;
            col_op(&mut u, cols, pivot_col, c, coeffs)?;
        }
        if a[r * cols + pivot_col] != 0 {
            pivot_col += 1;
        }
    }
    let mut basis = Vec::with_capacity(cols - pivot_col);
    for c in pivot_col..cols {
        let v: Result<Vec<i64>> = (0..cols).map(|r| narrow(u[r * cols + c])).collect();
        basis.push(v?);
    }
    hermite_rows(&mut basis)?;
    Ok(basis)
}

/// In-place row Hermite normal form of a full-row-rank integer matrix.
///
/// Pivots are positive and entries above each pivot are reduced into
/// `[0, pivot)`. The row lattice is unchanged.
/// `rows[dst] -= q * rows[src]`.
fn row_sub(rows: &mut [Vec<i64>], dst: usize, src: usize, q: i64) -> Result<()> {
    let pivot = rows[src].clone();
    for (x, &y) in rows[dst].iter_mut().zip(&pivot) {
        *x = x.checked_sub(mul(q, y)?).ok_or(Error::Overflow)?;
    }
    Ok(())
}

pub fn hermite_rows(rows: &mut Vec<Vec<i64>>) -> Result<()> {
    let nrows = rows.len();
    if nrows == 0 {
        return Ok(());
    }
    let ncols = rows[0].len();
    let mut r = 0usize;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        for i in r + 1..nrows {
            while rows[i][c] != 0 {
                if rows[r][c] == 0 || rows[i][c].abs() < rows[r][c].abs() {
                    rows.swap(r, i);
                    continue;
                }
                let q = rows[i][c] / rows[r][c];
                row_sub(rows, i, r, q)?;
            }
        }
        if rows[r][c] == 0 {
            continue;
        }
        if rows[r][c] < 0 {
            for x in rows[r].iter_mut() {
                *x = -*x;
            }
        }
        let p = rows[r][c];
        for i in 0..r {
            let q = Integer::div_floor(&rows[i][c], &p);
            if q != 0 {
                row_sub(rows, i, r, q)?;
            }
        }
        r += 1;
    }
    rows.retain(|row| row.iter().any(|&x| x != 0));
    Ok(())
}

/// Sum of `coeffs[i] * vectors[i]`, checked.
pub fn combine(coeffs: &[i64], vectors: &[Vec<i64>], dim: usize) -> Result<Vec<i64>> {
    let mut out = vec![0i64; dim];
    for (&c, v) in coeffs.iter().zip(vectors) {
        if c == 0 {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(v) {
            *o = add(*o, mul(c, x)?)?;
        }
    }
    Ok(out)
}

/// Largest `k >= 0` with `k^2 * den <= num` (both nonnegative).
pub(crate) fn isqrt_ratio(num: i128, den: i128) -> i64 {
    debug_assert!(num >= 0 && den > 0);
    let mut lo = 0i128;
    let mut hi = 1i128;
    while hi * hi * den <= num {
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if mid * mid * den <= num {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo as i64
}

pub(crate) fn rational_add(a: Rational, b: Rational) -> Result<Rational> {
    a.checked_add(&b).ok_or(Error::Overflow)
}

pub(crate) fn rational_mul(a: Rational, b: Rational) -> Result<Rational> {
    a.checked_mul(&b).ok_or(Error::Overflow)
}

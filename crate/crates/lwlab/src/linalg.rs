//! Small dense linear algebra on `Vec<f64>` vectors, sized for dimensions <= 6.
//!
//! Hot paths (hull predicates, section volumes) run on plain slices; the
//! exact-sign fallback switches to rational arithmetic when a floating
//! determinant is too close to zero to trust.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Vector = Vec<f64>;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[f64], s: f64) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn normalize(a: &[f64]) -> Vector {
    let n = norm(a);
    scale(a, 1.0 / n)
}

pub fn axpy(y: &mut [f64], alpha: f64, x: &[f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

/// Squared Euclidean distance.
pub fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// `cols^T v`: coordinates of `v` against a list of column vectors.
pub fn coords_in(cols: &[Vector], v: &[f64]) -> Vector {
    cols.iter().map(|c| dot(c, v)).collect()
}

/// `cols * y`: linear combination of columns.
pub fn combine(cols: &[Vector], y: &[f64]) -> Vector {
    let n = cols[0].len();
    let mut out = vec![0.0; n];
    for (c, &yi) in cols.iter().zip(y) {
        axpy(&mut out, yi, c);
    }
    out
}

/// Determinant by Gaussian elimination with partial pivoting. `m` is n x n,
/// row-major, and is consumed.
pub fn det_in_place(m: &mut [Vector]) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for k in 0..n {
        let (piv, &pval) = m[k..]
            .iter()
            .map(|row| &row[k])
            .enumerate()
            .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
            .unwrap();
        if pval == 0.0 {
            return 0.0;
        }
        if piv != 0 {
            m.swap(k, k + piv);
            det = -det;
        }
        det *= m[k][k];
        for i in k + 1..n {
            let f = m[i][k] / m[k][k];
            for j in k..n {
                m[i][j] -= f * m[k][j];
            }
        }
    }
    det
}

/// Solve `A x = b` for a small square system; returns None when singular.
pub fn solve(a: &[Vector], b: &[f64]) -> Option<Vector> {
    let n = a.len();
    let mut m: Vec<Vector> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    for k in 0..n {
        let piv = (k..n).max_by(|&i, &j| m[i][k].abs().total_cmp(&m[j][k].abs()))?;
        if m[piv][k].abs() < 1e-300 {
            return None;
        }
        m.swap(k, piv);
        for i in k + 1..n {
            let f = m[i][k] / m[k][k];
            for j in k..=n {
                m[i][j] -= f * m[k][j];
            }
        }
    }
    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let mut s = m[k][n];
        for j in k + 1..n {
            s -= m[k][j] * x[j];
        }
        if m[k][k].abs() < 1e-300 {
            return None;
        }
        x[k] = s / m[k][k];
    }
    Some(x)
}

/// Vector orthogonal to the n-1 rows `rows` in R^n, by cofactor expansion.
/// The result is not normalized; zero when the rows are dependent.
pub fn generalized_cross(rows: &[Vector]) -> Vector {
    let n = rows[0].len();
    debug_assert_eq!(rows.len(), n - 1);
    let mut out = vec![0.0; n];
    let mut minor: Vec<Vector> = vec![vec![0.0; n - 1]; n - 1];
    for (j, o) in out.iter_mut().enumerate() {
        for (r, row) in rows.iter().enumerate() {
            let mut c = 0;
            for (k, &v) in row.iter().enumerate() {
                if k != j {
                    minor[r][c] = v;
                    c += 1;
                }
            }
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        *o = sign * det_in_place(&mut minor.clone());
    }
    out
}

/// Gram-Schmidt: orthonormalize `vecs` in order, dropping dependent entries
/// (residual below `tol` times the original norm).
pub fn gram_schmidt(vecs: &[Vector], tol: f64) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    for v in vecs {
        let mut r = v.clone();
        for b in &basis {
            let c = dot(&r, b);
            axpy(&mut r, -c, b);
        }
        // second pass for numerical orthogonality
        for b in &basis {
            let c = dot(&r, b);
            axpy(&mut r, -c, b);
        }
        let nr = norm(&r);
        if nr > tol * norm(v).max(1.0) {
            basis.push(scale(&r, 1.0 / nr));
        }
    }
    basis
}

/// Complete `partial` (orthonormal columns in R^n) to a full orthonormal
/// basis, preferring coordinate axes in index order for the new directions.
pub fn complete_basis(partial: &[Vector], n: usize) -> Vec<Vector> {
    let mut basis = partial.to_vec();
    for i in 0..n {
        if basis.len() == n {
            break;
        }
        let mut e = vec![0.0; n];
        e[i] = 1.0;
        for b in &basis {
            let c = dot(&e, b);
            axpy(&mut e, -c, b);
        }
        for b in &basis {
            let c = dot(&e, b);
            axpy(&mut e, -c, b);
        }
        let ne = norm(&e);
        if ne > 1e-8 {
            basis.push(scale(&e, 1.0 / ne));
        }
    }
    debug_assert_eq!(basis.len(), n);
    basis
}

/// Max-norm of `B^T B - I` for a list of column vectors.
pub fn ortho_residual(cols: &[Vector]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in cols.iter().enumerate() {
        for (j, b) in cols.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((dot(a, b) - target).abs());
        }
    }
    worst
}

fn to_rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite coordinate")
}

/// Exact sign of the determinant of a square matrix of f64 entries,
/// computed over the rationals. Returns -1, 0, or 1.
pub fn det_sign_exact(m: &[Vector]) -> i32 {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| to_rational(x)).collect())
        .collect();
    let mut sign = 1i32;
    for k in 0..n {
        let piv = (k..n).find(|&i| !a[i][k].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => return 0,
        };
        if piv != k {
            a.swap(k, piv);
            sign = -sign;
        }
        if a[k][k].is_negative() {
            sign = -sign;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] = &a[i][j] - t;
            }
        }
    }
    sign
}

/// Orientation of point `p` against the hyperplane through `pts` (n points
/// in R^n): sign of det[pts[1]-pts[0], ..., p-pts[0]] over the rationals.
pub fn orient_sign_exact(pts: &[&[f64]], p: &[f64]) -> i32 {
    let rows: Vec<Vector> = pts[1..]
        .iter()
        .map(|q| sub(q, pts[0]))
        .chain(std::iter::once(sub(p, pts[0])))
        .collect();
    det_sign_exact(&rows)
}

/// Nodes and weights of the `m`-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_legendre(m: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        // Newton iteration from the Chebyshev-like initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(m, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre(m, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((x, w));
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

/// Legendre polynomial P_m and derivative at x, by recurrence.
fn legendre(m: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=m {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = m as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Golden-section minimization of a unimodal-enough `f` on [a, b].
pub fn golden_section(mut a: f64, mut b: f64, xtol: f64, f: impl Fn(f64) -> f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > xtol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Exactly representable f64 -> rational helper, exposed for the exact
/// planar pipeline.
pub fn rational_of(x: f64) -> BigRational {
    to_rational(x)
}

pub fn rational_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_solve() {
        let a = vec![vec![2.0, 1.0], vec![1.0, 3.0]];
        assert!((det_in_place(&mut a.clone()) - 5.0).abs() < 1e-12);
        let x = solve(&a, &[3.0, 4.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cross_is_orthogonal() {
        let rows = vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]];
        let c = generalized_cross(&rows);
        assert!((c[2].abs() - 1.0).abs() < 1e-12);
        assert!(dot(&c, &rows[0]).abs() < 1e-12);
    }

    #[test]
    fn exact_sign_detects_coplanar() {
        // three collinear points and a fourth exactly on their line
        let pts: Vec<Vector> = vec![
            vec![0.0, 0.0],
            vec![0.25, 0.25],
        ];
        let refs: Vec<&[f64]> = pts.iter().map(|p| p.as_slice()).collect();
        assert_eq!(orient_sign_exact(&refs, &[0.5, 0.5]), 0);
        assert_eq!(orient_sign_exact(&refs, &[0.5, 0.75]), 1);
        assert_eq!(orient_sign_exact(&refs, &[0.5, 0.25]), -1);
    }

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        // 5-point rule is exact through degree 9
        let rule = gauss_legendre(5);
        let integral: f64 = rule.iter().map(|&(x, w)| w * x.powi(8)).sum();
        assert!((integral - 2.0 / 9.0).abs() < 1e-13);
        let total: f64 = rule.iter().map(|&(_, w)| w).sum();
        assert!((total - 2.0).abs() < 1e-13);
    }

    #[test]
    fn golden_section_finds_min() {
        let (x, _) = golden_section(0.0, 4.0, 1e-12, |t| (t - 1.3).powi(2));
        assert!((x - 1.3).abs() < 1e-9);
    }

    #[test]
    fn basis_completion_is_orthonormal() {
        let partial = vec![normalize(&[1.0, 1.0, 0.0])];
        let full = complete_basis(&partial, 3);
        assert_eq!(full.len(), 3);
        assert!(ortho_residual(&full) < 1e-12);
    }
}

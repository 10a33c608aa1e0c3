//! Small dense real linear algebra: elimination, rank, kernel, and the
//! unit-row norm bound.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative pivot threshold (times the largest row norm) for rank decisions.
pub const RANK_TOL: f64 = 1e-10;

/// Dense row-major real matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix {
    n_rows: usize,
    n_cols: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Self { n_rows, n_cols, data: vec![0.0; n_rows * n_cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        if n_rows == 0 || n_cols == 0 {
            return Err(Error::Dimension("matrix must have at least one row and column".into()));
        }
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != n_cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {n_cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Self { n_rows, n_cols, data })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n_cols..(i + 1) * self.n_cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks(self.n_cols)
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.rows().map(<[f64]>::to_vec).collect()
    }

    pub fn max_row_norm(&self) -> f64 {
        self.rows().map(norm).fold(0.0, f64::max)
    }

    /// Frobenius norm.
    pub fn frobenius(&self) -> f64 {
        norm(&self.data)
    }

    pub fn mul_vec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.n_cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.n_cols
            )));
        }
        Ok(self.rows().map(|r| dot(r, v)).collect())
    }
}

impl std::ops::Index<(usize, usize)> for RealMatrix {
    type Output = f64;
    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.data[r * self.n_cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RealMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        &mut self.data[r * self.n_cols + c]
    }
}

impl Serialize for RealMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RealMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<f64>>::deserialize(d)?;
        RealMatrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Solve `M x = b` by Gaussian elimination with partial pivoting.
pub fn solve_linear(m: &RealMatrix, b: &[f64]) -> Result<Vec<f64>> {
    if !m.is_square() || b.len() != m.n_rows {
        return Err(Error::Dimension(format!(
            "{}×{} system with right-hand side of length {}",
            m.n_rows,
            m.n_cols,
            b.len()
        )));
    }
    let n = m.n_rows;
    let threshold = RANK_TOL * m.max_row_norm();
    let mut a = m.clone();
    let mut rhs = b.to_vec();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[(i, k)].abs().total_cmp(&a[(j, k)].abs()))
            .unwrap_or(k);
        let pivot = a[(p, k)];
        if !(pivot.abs() > threshold) {
            return Err(Error::SingularSystem { pivot: pivot.abs(), threshold });
        }
        if p != k {
            for c in 0..n {
                a.data.swap(p * n + c, k * n + c);
            }
            rhs.swap(p, k);
        }
        for r in k + 1..n {
            let f = a[(r, k)] / pivot;
            if f == 0.0 {
                continue;
            }
            for c in k..n {
                a[(r, c)] -= f * a[(k, c)];
            }
            rhs[r] -= f * rhs[k];
        }
    }
    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let s: f64 = (k + 1..n).map(|c| a[(k, c)] * x[c]).sum();
        x[k] = (rhs[k] - s) / a[(k, k)];
    }
    Ok(x)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankKernel {
    pub rank: usize,
    /// Orthonormal basis of `{ x : M x = 0 }`.
    pub kernel: Vec<Vec<f64>>,
}

/// Numerical rank and an orthonormal kernel basis via reduced row echelon form.
///
/// `rel_tol` scales the largest row norm to give the pivot threshold. The
/// basis is built from the free columns in increasing order, orthonormalized
/// in that order, and each vector is signed so that its first
/// largest-magnitude coordinate is positive. The reduced echelon form depends
/// only on the row space, so the basis does not depend on row order.
pub fn rank_and_kernel(m: &RealMatrix, rel_tol: f64) -> RankKernel {
    let (rows, cols) = (m.n_rows, m.n_cols);
    let threshold = rel_tol * m.max_row_norm();
    let mut a = m.clone();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let p = (r..rows)
            .max_by(|&i, &j| a[(i, c)].abs().total_cmp(&a[(j, c)].abs()))
            .unwrap_or(r);
        if !(a[(p, c)].abs() > threshold) {
            continue;
        }
        for k in 0..cols {
            a.data.swap(p * cols + k, r * cols + k);
        }
        let pv = a[(r, c)];
        for k in 0..cols {
            a[(r, k)] /= pv;
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a[(i, c)];
            if f == 0.0 {
                continue;
            }
            for k in 0..cols {
                a[(i, k)] -= f * a[(r, k)];
            }
        }
        pivots.push(c);
        r += 1;
    }

    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut kernel: Vec<Vec<f64>> = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![0.0; cols];
        v[f] = 1.0;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[(i, f)];
        }
        // two passes of modified Gram–Schmidt
        for _ in 0..2 {
            for b in &kernel {
                let h = dot(b, &v);
                v.iter_mut().zip(b).for_each(|(x, y)| *x -= h * y);
            }
        }
        let n = norm(&v);
        v.iter_mut().for_each(|x| *x /= n);
        canonical_sign(&mut v);
        kernel.push(v);
    }
    RankKernel { rank: pivots.len(), kernel }
}

fn canonical_sign(v: &mut [f64]) {
    let mut best = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[best].abs() {
            best = i;
        }
    }
    if v[best] < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    /// `‖M w‖`
    pub lhs: f64,
    /// `√N ‖w‖` for an `N × N` matrix
    pub rhs: f64,
    pub strict: bool,
}

/// For a full-rank `N × N` matrix with unit rows, `‖M w‖ < √N ‖w‖` for
/// every nonzero `w`. Errors when the hypotheses fail.
pub fn bound_check(m: &RealMatrix, w: &[f64]) -> Result<BoundCheck> {
    if !m.is_square() {
        return Err(Error::BoundPrecondition(format!(
            "matrix is {}×{}, expected square",
            m.n_rows, m.n_cols
        )));
    }
    if w.len() != m.n_cols {
        return Err(Error::Dimension(format!(
            "vector of length {} against {} columns",
            w.len(),
            m.n_cols
        )));
    }
    for (i, r) in m.rows().enumerate() {
        let n = norm(r);
        if (n - 1.0).abs() > 1e-9 {
            return Err(Error::BoundPrecondition(format!("row {i} has norm {n}")));
        }
    }
    let rk = rank_and_kernel(m, RANK_TOL);
    if rk.rank < m.n_rows {
        return Err(Error::BoundPrecondition(format!(
            "rank {} < {}",
            rk.rank, m.n_rows
        )));
    }
    let wn = norm(w);
    if wn == 0.0 {
        return Err(Error::BoundPrecondition("w is zero".into()));
    }
    let lhs = norm(&m.mul_vec(w)?);
    let rhs = (m.n_rows as f64).sqrt() * wn;
    Ok(BoundCheck { lhs, rhs, strict: lhs < rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn e(i: usize) -> Vec<f64> {
        let mut v = vec![0.0; 4];
        v[i] = 1.0;
        v
    }

    #[test]
    fn solve_identity() {
        let x = solve_linear(&RealMatrix::identity(4), &[1.0; 4]).unwrap();
        assert_eq!(x, vec![1.0; 4]);
    }

    #[test]
    fn solve_hand_case() {
        let m = RealMatrix::from_rows(&[e(0), e(1), e(2), vec![0.5; 4]]).unwrap();
        let x = solve_linear(&m, &[1.0; 4]).unwrap();
        let want = [1.0, 1.0, 1.0, -1.0];
        for (a, b) in x.iter().zip(want) {
            assert!((a - b).abs() < 1e-15);
        }
        // multiply back
        let back = m.mul_vec(&x).unwrap();
        assert!(back.iter().all(|v| (v - 1.0).abs() < 1e-15));
    }

    #[test]
    fn solve_singular() {
        let m = RealMatrix::from_rows(&[e(0), e(1), e(1), e(3)]).unwrap();
        assert!(matches!(solve_linear(&m, &[1.0; 4]), Err(Error::SingularSystem { .. })));
    }

    #[test]
    fn solve_residual_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..500 {
            let rows: Vec<Vec<f64>> = (0..4)
                .map(|_| (0..4).map(|_| rng.sample(StandardNormal)).collect())
                .collect();
            let m = RealMatrix::from_rows(&rows).unwrap();
            let b: Vec<f64> = (0..4).map(|_| rng.sample(StandardNormal)).collect();
            let x = solve_linear(&m, &b).unwrap();
            let r: Vec<f64> = m.mul_vec(&x).unwrap().iter().zip(&b).map(|(p, q)| p - q).collect();
            assert!(norm(&r) <= 1e-10 * (m.frobenius() * norm(&x) + norm(&b)));
        }
    }

    #[test]
    fn rank_identity() {
        let rk = rank_and_kernel(&RealMatrix::identity(4), RANK_TOL);
        assert_eq!(rk.rank, 4);
        assert!(rk.kernel.is_empty());
    }

    #[test]
    fn rank_three_with_diagonal_row() {
        let m = RealMatrix::from_rows(&[
            e(0),
            e(1),
            e(2),
            vec![0.0, FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0],
        ])
        .unwrap();
        let rk = rank_and_kernel(&m, RANK_TOL);
        assert_eq!(rk.rank, 3);
        assert_eq!(rk.kernel.len(), 1);
        assert!(rk.kernel[0].iter().zip(e(3)).all(|(a, b)| (a - b).abs() < 1e-15));
        assert!(m.mul_vec(&rk.kernel[0]).unwrap().iter().all(|v| v.abs() < 1e-15));
    }

    #[test]
    fn rank_one() {
        let m = RealMatrix::from_rows(&[e(1), e(1), e(1), e(1)]).unwrap();
        let rk = rank_and_kernel(&m, RANK_TOL);
        assert_eq!(rk.rank, 1);
        assert_eq!(rk.kernel, vec![e(0), e(2), e(3)]);
    }

    #[test]
    fn kernel_is_orthonormal_and_signed() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..200 {
            let a: Vec<f64> = (0..4).map(|_| rng.sample(StandardNormal)).collect();
            let b: Vec<f64> = (0..4).map(|_| rng.sample(StandardNormal)).collect();
            let c: Vec<f64> = a.iter().zip(&b).map(|(x, y)| 2.0 * x - y).collect();
            let m = RealMatrix::from_rows(&[a, b, c]).unwrap();
            let rk = rank_and_kernel(&m, RANK_TOL);
            assert_eq!(rk.rank, 2);
            assert_eq!(rk.kernel.len(), 2);
            for (i, v) in rk.kernel.iter().enumerate() {
                assert!((norm(v) - 1.0).abs() < 1e-12);
                assert!(norm(&m.mul_vec(v).unwrap()) < 1e-10 * m.max_row_norm());
                for w in &rk.kernel[..i] {
                    assert!(dot(v, w).abs() < 1e-12);
                }
                let big = v.iter().cloned().fold(0.0f64, |m, x| if x.abs() > m.abs() { x } else { m });
                assert!(big > 0.0);
            }
        }
    }

    #[test]
    fn bound_examples() {
        let r = bound_check(&RealMatrix::identity(4), &[1.0; 4]).unwrap();
        assert!((r.lhs - 2.0).abs() < 1e-15 && (r.rhs - 4.0).abs() < 1e-15 && r.strict);

        let m = RealMatrix::from_rows(&[e(0), e(1), e(2), vec![0.5; 4]]).unwrap();
        let r = bound_check(&m, &[1.0, 1.0, 1.0, -1.0]).unwrap();
        assert!((r.lhs - 2.0).abs() < 1e-15 && (r.rhs - 4.0).abs() < 1e-15 && r.strict);
    }

    #[test]
    fn bound_preconditions() {
        let dup = RealMatrix::from_rows(&[e(0), e(0), e(2), e(3)]).unwrap();
        assert!(matches!(bound_check(&dup, &[1.0; 4]), Err(Error::BoundPrecondition(_))));
        let long = RealMatrix::from_rows(&[vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(bound_check(&long, &[1.0; 2]), Err(Error::BoundPrecondition(_))));
        assert!(matches!(
            bound_check(&RealMatrix::identity(3), &[0.0; 3]),
            Err(Error::BoundPrecondition(_))
        ));
    }

    #[test]
    fn real_matrix_json() {
        let m = RealMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, "[[1.0,2.0],[3.0,4.0]]");
        assert_eq!(serde_json::from_str::<RealMatrix>(&s).unwrap(), m);
        assert!(serde_json::from_str::<RealMatrix>("[[1.0],[2.0,3.0]]").is_err());
    }
}

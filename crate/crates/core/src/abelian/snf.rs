//! Smith normal form over the integers.
//!
//! Two entry points share the same pivoting scheme. [`smith_normal_form`] is
//! the exact integer version with both transforms. [`smith_mod`] works on a
//! lattice known to contain `e·Zⁿ`, so every entry can be kept reduced modulo
//! `e`; it tracks only the column transform and its inverse, which is all the
//! quotient coordinates need.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.checked_mul(other.get(k, j)).ok_or(Error::Overflow)?;
                    let acc = out.get(i, j).checked_add(prod).ok_or(Error::Overflow)?;
                    out.set(i, j, acc);
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free elimination. Only used on small transforms.
    pub fn determinant(&self) -> Result<i64> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut m: Vec<Vec<i128>> =
            (0..n).map(|i| self.row(i).iter().map(|&v| v as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                    return Ok(0);
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m[i][j]
                        .checked_mul(m[k][k])
                        .and_then(|a| m[i][k].checked_mul(m[k][j]).and_then(|b| a.checked_sub(b)))
                        .ok_or(Error::Overflow)?;
                    m[i][j] = v / prev;
                }
            }
            prev = m[k][k];
        }
        let det = if n == 0 { 1 } else { sign * m[n - 1][n - 1] };
        i64::try_from(det).map_err(|_| Error::Overflow)
    }

    fn row_axpy(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        if q == 0 {
            return Ok(());
        }
        for j in 0..self.cols {
            let v = self
                .get(src, j)
                .checked_mul(q)
                .and_then(|p| self.get(dst, j).checked_add(p))
                .ok_or(Error::Overflow)?;
            self.set(dst, j, v);
        }
        Ok(())
    }

    fn col_axpy(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        if q == 0 {
            return Ok(());
        }
        for i in 0..self.rows {
            let v = self
                .get(i, src)
                .checked_mul(q)
                .and_then(|p| self.get(i, dst).checked_add(p))
                .ok_or(Error::Overflow)?;
            self.set(i, dst, v);
        }
        Ok(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = self.get(i, j);
            self.set(i, j, -v);
        }
    }
}

/// `u · m · v = d` with `u`, `v` unimodular and `d` diagonal in divisibility order.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i)).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Result<SmithForm> {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    for t in 0..r.min(c) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = a.get(i, j);
                    if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return Ok(SmithForm { d: a, u, v });
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = a.get(t, t);
            let mut clean = true;
            for i in t + 1..r {
                let q = a.get(i, t).div_euclid(p);
                a.row_axpy(i, t, -q)?;
                u.row_axpy(i, t, -q)?;
                clean &= a.get(i, t) == 0;
            }
            for j in t + 1..c {
                let q = a.get(t, j).div_euclid(p);
                a.col_axpy(j, t, -q)?;
                v.col_axpy(j, t, -q)?;
                clean &= a.get(t, j) == 0;
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..r).find(|&i| (t + 1..c).any(|j| a.get(i, j) % p != 0));
            match offender {
                Some(i) => {
                    a.row_axpy(t, i, 1)?;
                    u.row_axpy(t, i, 1)?;
                }
                None => break,
            }
        }
        if a.get(t, t) < 0 {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    Ok(SmithForm { d: a, u, v })
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Returns `(g, s, t)` with `s·a + t·b = g = gcd(a, b) ≥ 0`.
pub(crate) fn xgcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Smith form of the lattice spanned by `gens` together with `e·Zⁿ`.
#[derive(Debug, Clone)]
pub struct ModSmith {
    /// One entry per column, each dividing `e` and the next.
    pub diagonal: Vec<i64>,
    /// Column transform, reduced modulo `e`.
    pub v: Vec<Vec<i64>>,
    /// Inverse of `v` modulo `e`.
    pub v_inv: Vec<Vec<i64>>,
}

pub fn smith_mod(gens: &[Vec<i64>], n: usize, e: i64) -> Result<ModSmith> {
    if e < 1 {
        return Err(Error::InvalidInput("modulus must be positive".into()));
    }
    let red = |x: i64| x.rem_euclid(e);
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(gens.len());
    for g in gens {
        if g.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: g.len() });
        }
        let r: Vec<i64> = g.iter().map(|&x| red(x)).collect();
        if r.iter().any(|&x| x != 0) {
            rows.push(r);
        }
    }
    let mut v: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut v_inv = v.clone();
    let mut diagonal = vec![e; n];

    // (col_a, col_b) <- (s·col_a + t·col_b, u·col_a + w·col_b), det = s·w - t·u = 1
    let col_op = |rows: &mut Vec<Vec<i64>>,
                  v: &mut Vec<Vec<i64>>,
                  v_inv: &mut Vec<Vec<i64>>,
                  a: usize,
                  b: usize,
                  (s, t, u, w): (i64, i64, i64, i64)| {
        let mix = |x: i64, y: i64, p: i64, q: i64| {
            ((x as i128 * p as i128 + y as i128 * q as i128).rem_euclid(e as i128)) as i64
        };
        for r in rows.iter_mut().chain(v.iter_mut()) {
            let (x, y) = (r[a], r[b]);
            r[a] = mix(x, y, s, t);
            r[b] = mix(x, y, u, w);
        }
        // inverse acts on rows a, b of v_inv: [[w, -u], [-t, s]]
        for j in 0..n {
            let (x, y) = (v_inv[a][j], v_inv[b][j]);
            v_inv[a][j] = mix(x, y, w, -u);
            v_inv[b][j] = mix(x, y, -t, s);
        }
    };
    let row_combine = |p: &[i64], q: &[i64], s: i64, t: i64| -> Vec<i64> {
        p.iter()
            .zip(q)
            .map(|(&x, &y)| ((x as i128 * s as i128 + y as i128 * t as i128).rem_euclid(e as i128)) as i64)
            .collect()
    };

    let mut done = 0usize; // rows[..done] are finished pivot rows
    for col in 0..n {
        loop {
            let found = (done..rows.len())
                .flat_map(|i| (col..n).map(move |j| (i, j)))
                .find(|&(i, j)| rows[i][j] != 0);
            let Some((pi, pj)) = found else {
                // nothing left: the remaining diagonal is e (already set)
                rows.truncate(done);
                return finish(diagonal, v, v_inv, e);
            };
            rows.swap(done, pi);
            if pj != col {
                col_op(&mut rows, &mut v, &mut v_inv, col, pj, (0, 1, -1, 0));
            }
            // absorb the implicit e·e_col generator so the pivot divides e
            let a = rows[done][col];
            let (g, s, _) = xgcd(a, e);
            if g != a {
                let pivot = rows[done].iter().map(|&x| ((x as i128 * s as i128).rem_euclid(e as i128)) as i64).collect();
                let rest: Vec<i64> =
                    rows[done].iter().map(|&x| ((x as i128 * (e / g) as i128).rem_euclid(e as i128)) as i64).collect();
                rows[done] = pivot;
                if rest.iter().any(|&x| x != 0) {
                    rows.push(rest);
                }
            }
            // clear the pivot column
            let mut i = done + 1;
            while i < rows.len() {
                let b = rows[i][col];
                if b != 0 {
                    let a = rows[done][col];
                    let (g, s, t) = xgcd(a, b);
                    let new_pivot = row_combine(&rows[done], &rows[i], s, t);
                    let rest = row_combine(&rows[done], &rows[i], b / g, -(a / g));
                    rows[done] = new_pivot;
                    rows[i] = rest;
                }
                i += 1;
            }
            // clear the pivot row with column operations
            let mut dirty = false;
            for j in col + 1..n {
                let b = rows[done][j];
                if b == 0 {
                    continue;
                }
                let a = rows[done][col];
                if b % a == 0 {
                    let q = b / a;
                    col_op(&mut rows, &mut v, &mut v_inv, col, j, (1, 0, -q, 1));
                } else {
                    let (g, s, t) = xgcd(a, b);
                    col_op(&mut rows, &mut v, &mut v_inv, col, j, (s, t, -(b / g), a / g));
                }
                dirty |= (done + 1..rows.len()).any(|i| rows[i][col] != 0);
            }
            if dirty || rows[done][col] == 0 {
                continue;
            }
            let p = gcd(rows[done][col], e);
            if p != rows[done][col] {
                continue;
            }
            let offender = (done + 1..rows.len()).find(|&i| rows[i][col + 1..].iter().any(|&x| x % p != 0));
            match offender {
                Some(i) => {
                    let sum = row_combine(&rows[done], &rows[i], 1, 1);
                    rows[done] = sum;
                }
                None => {
                    diagonal[col] = p;
                    rows.retain(|r| r.iter().any(|&x| x != 0));
                    // keep the pivot row in place
                    done += 1;
                    break;
                }
            }
        }
    }
    finish(diagonal, v, v_inv, e)
}

fn finish(diagonal: Vec<i64>, v: Vec<Vec<i64>>, v_inv: Vec<Vec<i64>>, e: i64) -> Result<ModSmith> {
    for w in diagonal.windows(2) {
        if w[1] % w[0] != 0 {
            return Err(Error::Internal("modular Smith form lost the divisibility chain".into()));
        }
    }
    if diagonal.iter().any(|&d| e % d != 0) {
        return Err(Error::Internal("modular Smith pivot does not divide the modulus".into()));
    }
    Ok(ModSmith { diagonal, v, v_inv })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(rows: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&IntMatrix::from_rows(rows).unwrap()).unwrap().diagonal()
    }

    #[test]
    fn two_by_two_example() {
        // gcd of entries is 2, gcd of 2x2 minors is 8
        assert_eq!(diag_of(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(diag_of(&[vec![1, 0], vec![0, 1]]), vec![1, 1]);
        assert_eq!(diag_of(&[vec![0, 0], vec![0, 0]]), vec![0, 0]);
    }

    #[test]
    fn transforms_reproduce_diagonal() {
        let m = IntMatrix::from_rows(&[vec![3, 5, 7], vec![2, 4, 6], vec![1, 1, 9], vec![0, 6, 3]]).unwrap();
        let s = smith_normal_form(&m).unwrap();
        assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(s.u.determinant().unwrap().abs(), 1);
        assert_eq!(s.v.determinant().unwrap().abs(), 1);
    }

    #[test]
    fn modular_form_of_coprime_diagonal() {
        // Z2 x Z3 relations inside Z^2 with e = 6
        let s = smith_mod(&[vec![2, 0], vec![0, 3]], 2, 6).unwrap();
        assert_eq!(s.diagonal, vec![1, 6]);
    }

    #[test]
    fn modular_transform_is_invertible() {
        let e = 12;
        let s = smith_mod(&[vec![4, 6, 2], vec![0, 3, 9]], 3, e).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let x: i64 = (0..3).map(|k| s.v[i][k] * s.v_inv[k][j]).sum::<i64>().rem_euclid(e);
                assert_eq!(x, i64::from(i == j));
            }
        }
    }
}

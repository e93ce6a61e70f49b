//! Echelon form of a module of pairs `(image, payload)` over mixed moduli.
//!
//! Image coordinate `j` lives in `Z/moduli[j]`; the relation rows
//! `moduli[j]·e_j` are kept implicit and are used to keep every entry reduced.
//! Payload coordinate `i` is reduced modulo `payload_moduli[i]`, which is only
//! sound when the caller knows `(0, payload_moduli[i]·e_i)` lies in the module.
//!
//! Rows are inserted with extended-gcd pivot merging. Whenever a pivot changes
//! its annihilated multiple is pushed further down, so after any sequence of
//! inserts the pivots span every module element with a given leading column.
//! That makes [`Echelon::reduce`] canonical on cosets and makes the payloads of
//! rows that cancel completely a generating set of the kernel.

use alloc::vec;
use alloc::vec::Vec;

use super::snf::xgcd;

#[derive(Debug, Clone)]
struct Row {
    image: Vec<i64>,
    payload: Vec<i64>,
}

#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    moduli: Vec<i64>,
    payload_moduli: Vec<i64>,
    pivots: Vec<Option<Row>>,
    kernel: Vec<Vec<i64>>,
}

fn mulmod(a: i64, b: i64, m: i64) -> i64 {
    ((a as i128 * b as i128).rem_euclid(m as i128)) as i64
}

impl Echelon {
    pub fn new(moduli: Vec<i64>, payload_moduli: Vec<i64>) -> Self {
        debug_assert!(moduli.iter().chain(&payload_moduli).all(|&m| m >= 1));
        let n = moduli.len();
        Echelon { moduli, payload_moduli, pivots: vec![None; n], kernel: Vec::new() }
    }

    /// Payloads of inserted combinations whose image vanished.
    pub fn kernel(&self) -> &[Vec<i64>] {
        &self.kernel
    }

    fn normalise(&self, row: &mut Row) {
        for (x, &m) in row.image.iter_mut().zip(&self.moduli) {
            *x = x.rem_euclid(m);
        }
        for (x, &m) in row.payload.iter_mut().zip(&self.payload_moduli) {
            *x = x.rem_euclid(m);
        }
    }

    /// `s·p + t·q`, reduced.
    fn combine(&self, p: &Row, s: i64, q: &Row, t: i64) -> Row {
        let image = p
            .image
            .iter()
            .zip(&q.image)
            .zip(&self.moduli)
            .map(|((&a, &b), &m)| (mulmod(a, s, m) + mulmod(b, t, m)).rem_euclid(m))
            .collect();
        let payload = p
            .payload
            .iter()
            .zip(&q.payload)
            .zip(&self.payload_moduli)
            .map(|((&a, &b), &m)| (mulmod(a, s, m) + mulmod(b, t, m)).rem_euclid(m))
            .collect();
        Row { image, payload }
    }

    fn scale(&self, p: &Row, s: i64) -> Row {
        let image = p.image.iter().zip(&self.moduli).map(|(&a, &m)| mulmod(a, s, m)).collect();
        let payload = p.payload.iter().zip(&self.payload_moduli).map(|(&a, &m)| mulmod(a, s, m)).collect();
        Row { image, payload }
    }

    pub fn insert(&mut self, image: Vec<i64>, payload: Vec<i64>) {
        debug_assert_eq!(image.len(), self.moduli.len());
        debug_assert_eq!(payload.len(), self.payload_moduli.len());
        let mut stack = vec![Row { image, payload }];
        while let Some(mut row) = stack.pop() {
            self.normalise(&mut row);
            let Some(j) = row.image.iter().position(|&x| x != 0) else {
                if row.payload.iter().any(|&x| x != 0) {
                    self.kernel.push(row.payload);
                }
                continue;
            };
            let m = self.moduli[j];
            let b = row.image[j];
            match self.pivots[j].take() {
                None => {
                    // merge with the implicit relation m·e_j
                    let (g, s, _) = xgcd(b, m);
                    let pivot = self.scale(&row, s);
                    stack.push(self.scale(&row, m / g));
                    self.pivots[j] = Some(pivot);
                }
                Some(pivot) => {
                    let a = pivot.image[j];
                    if b % a == 0 {
                        stack.push(self.combine(&row, 1, &pivot, -(b / a)));
                        self.pivots[j] = Some(pivot);
                    } else {
                        let (g, s, t) = xgcd(a, b);
                        let merged = self.combine(&pivot, s, &row, t);
                        stack.push(self.combine(&pivot, b / g, &row, -(a / g)));
                        stack.push(self.scale(&merged, m / g));
                        self.pivots[j] = Some(merged);
                    }
                }
            }
        }
    }

    /// Reduces `image` to its canonical coset representative.
    ///
    /// Returns the residue and the payload combination `c` of pivot rows with
    /// `image = residue + Σ c_k·pivot_k`.
    pub fn reduce(&self, image: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let mut residue: Vec<i64> = image.iter().zip(&self.moduli).map(|(&x, &m)| x.rem_euclid(m)).collect();
        let mut payload = vec![0i64; self.payload_moduli.len()];
        for j in 0..residue.len() {
            let x = residue[j];
            if x == 0 {
                continue;
            }
            let Some(p) = &self.pivots[j] else { continue };
            let q = x.div_euclid(p.image[j]);
            if q == 0 {
                continue;
            }
            for (k, (r, &m)) in residue.iter_mut().zip(&self.moduli).enumerate().skip(j) {
                *r = (*r - mulmod(p.image[k], q, m)).rem_euclid(m);
            }
            for ((c, &pv), &m) in payload.iter_mut().zip(&p.payload).zip(&self.payload_moduli) {
                *c = (*c + mulmod(pv, q, m)).rem_euclid(m);
            }
        }
        (residue, payload)
    }

    /// Payload `c` with `image ≡ Σ c·rows`, if `image` lies in the span.
    pub fn solve(&self, image: &[i64]) -> Option<Vec<i64>> {
        let (residue, payload) = self.reduce(image);
        residue.iter().all(|&x| x == 0).then_some(payload)
    }

    /// Number of elements in the spanned image inside `⊕ Z/moduli[j]`.
    pub fn span_order(&self) -> u128 {
        self.pivots
            .iter()
            .zip(&self.moduli)
            .enumerate()
            .map(|(j, (p, &m))| p.as_ref().map_or(1u128, |r| (m / r.image[j]) as u128))
            .product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enumerate(moduli: &[i64]) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &m in moduli {
            out = out.into_iter().flat_map(|v| (0..m).map(move |x| [v.clone(), vec![x]].concat())).collect();
        }
        out
    }

    #[test]
    fn kernel_of_doubling_on_z4() {
        let mut e = Echelon::new(vec![4], vec![4]);
        e.insert(vec![2], vec![1]);
        assert_eq!(e.kernel(), &[vec![2]]);
    }

    #[test]
    fn reduce_is_canonical_on_cosets() {
        // subgroup of Z2 x Z4 x Z4 spanned by two vectors; compare with brute force
        let moduli = [2, 4, 4];
        let gens = [vec![1, 2, 0], vec![0, 2, 2]];
        let mut e = Echelon::new(moduli.to_vec(), vec![4, 4]);
        for (k, g) in gens.iter().enumerate() {
            let mut p = vec![0; 2];
            p[k] = 1;
            e.insert(g.clone(), p);
        }
        let all = enumerate(&moduli);
        let span: Vec<Vec<i64>> = enumerate(&[4, 4])
            .into_iter()
            .map(|c| (0..3).map(|j| (c[0] * gens[0][j] + c[1] * gens[1][j]).rem_euclid(moduli[j])).collect())
            .collect();
        let mut distinct = span.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(e.span_order(), distinct.len() as u128);
        for x in &all {
            for y in &all {
                let diff: Vec<i64> = (0..3).map(|j| (x[j] - y[j]).rem_euclid(moduli[j])).collect();
                let same = distinct.contains(&diff);
                assert_eq!(e.reduce(x).0 == e.reduce(y).0, same, "{x:?} {y:?}");
            }
        }
        for s in &distinct {
            let c = e.solve(s).expect("member");
            let back: Vec<i64> = (0..3).map(|j| (c[0] * gens[0][j] + c[1] * gens[1][j]).rem_euclid(moduli[j])).collect();
            assert_eq!(&back, s);
        }
    }
}

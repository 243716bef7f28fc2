//! Dense matrices over small finite fields.
//!
//! Vectors are rows and matrices act on the right (v ↦ v·M), matching the
//! right-action convention used for permutations. Every operation takes the
//! field as an explicit argument so matrices stay plain data.

use crate::gf::FieldGF;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u32>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c));
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.at(r, c) == u32::from(r == c)))
    }

    pub fn mul(&self, f: &FieldGF, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.at(r, c), f.mul(a, other.at(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn add(&self, f: &FieldGF, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..out.data.len() {
            out.data[i] = f.add(out.data[i], other.data[i]);
        }
        out
    }

    pub fn scalar_mul(&self, f: &FieldGF, s: u32) -> Mat {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = f.mul(*v, s);
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c));
            }
        }
        out
    }

    /// Entrywise field conjugate (for square-order fields).
    pub fn conj(&self, f: &FieldGF) -> Mat {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = f.conj(*v);
        }
        out
    }

    /// Row vector times matrix: v·M.
    pub fn apply_row(&self, f: &FieldGF, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0u32; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for c in 0..self.cols {
                out[c] = f.add(out[c], f.mul(a, self.at(k, c)));
            }
        }
        out
    }

    pub fn pow(&self, f: &FieldGF, e: u64) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut acc = Mat::identity(self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            base = base.mul(f, &base);
            e >>= 1;
        }
        acc
    }

    /// In-place reduction to reduced row-echelon form; returns the rank.
    pub fn rref(&mut self, f: &FieldGF) -> usize {
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(r) = (pivot_row..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            if r != pivot_row {
                for c in 0..self.cols {
                    let (a, b) = (self.at(pivot_row, c), self.at(r, c));
                    self.set(pivot_row, c, b);
                    self.set(r, c, a);
                }
            }
            let inv = f.inv(self.at(pivot_row, col));
            for c in 0..self.cols {
                self.set(pivot_row, c, f.mul(self.at(pivot_row, c), inv));
            }
            for r2 in 0..self.rows {
                if r2 == pivot_row || self.at(r2, col) == 0 {
                    continue;
                }
                let factor = self.at(r2, col);
                for c in 0..self.cols {
                    let v = f.sub(self.at(r2, c), f.mul(factor, self.at(pivot_row, c)));
                    self.set(r2, c, v);
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    pub fn rank(&self, f: &FieldGF) -> usize {
        self.clone().rref(f)
    }

    /// The RREF with zero rows dropped — a canonical label for the row space.
    pub fn row_space_canonical(&self, f: &FieldGF) -> Mat {
        let mut m = self.clone();
        let rank = m.rref(f);
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        m
    }

    pub fn det(&self, f: &FieldGF) -> u32 {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = 1u32;
        for col in 0..m.cols {
            let Some(r) = (col..m.rows).find(|&r| m.at(r, col) != 0) else {
                return 0;
            };
            if r != col {
                for c in 0..m.cols {
                    let (a, b) = (m.at(col, c), m.at(r, c));
                    m.set(col, c, b);
                    m.set(r, c, a);
                }
                det = f.neg(det);
            }
            let pivot = m.at(col, col);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot);
            for r2 in col + 1..m.rows {
                if m.at(r2, col) == 0 {
                    continue;
                }
                let factor = f.mul(m.at(r2, col), inv);
                for c in col..m.cols {
                    let v = f.sub(m.at(r2, c), f.mul(factor, m.at(col, c)));
                    m.set(r2, c, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self, f: &FieldGF) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c));
            }
            aug.set(r, n + r, 1);
        }
        aug.rref(f);
        // Invertible iff the left block reduced to the identity (rank alone
        // is not enough: pivots may land in the right block).
        let left_is_identity =
            (0..n).all(|r| (0..n).all(|c| aug.at(r, c) == u32::from(r == c)));
        if !left_is_identity {
            return None;
        }
        let mut out = Mat::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, aug.at(r, n + c));
            }
        }
        Some(out)
    }

    /// A basis (as rows) of {x : M·xᵀ = 0}.
    pub fn null_space(&self, f: &FieldGF) -> Mat {
        let mut m = self.clone();
        let rank = m.rref(f);
        let mut pivots = Vec::new();
        let mut pc = 0;
        for r in 0..rank {
            while m.at(r, pc) == 0 {
                pc += 1;
            }
            pivots.push(pc);
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![0u32; self.cols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.at(r, fc));
            }
            basis.push(v);
        }
        if basis.is_empty() {
            Mat::zero(0, self.cols)
        } else {
            Mat::from_rows(basis)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_mat(rng: &mut StdRng, f: &FieldGF, n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, rng.random_range(0..f.q));
            }
        }
        m
    }

    #[test]
    fn mul_identity_and_associativity() {
        let f = FieldGF::new(7).unwrap();
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..20 {
            let a = random_mat(&mut rng, &f, 4);
            let b = random_mat(&mut rng, &f, 4);
            let c = random_mat(&mut rng, &f, 4);
            assert_eq!(a.mul(&f, &Mat::identity(4)), a);
            assert_eq!(Mat::identity(4).mul(&f, &a), a);
            assert_eq!(a.mul(&f, &b).mul(&f, &c), a.mul(&f, &b.mul(&f, &c)));
        }
    }

    #[test]
    fn det_multiplicative_and_inverse() {
        for q in [4u32, 5, 9] {
            let f = FieldGF::new(q).unwrap();
            let mut rng = StdRng::seed_from_u64(13);
            for _ in 0..30 {
                let a = random_mat(&mut rng, &f, 3);
                let b = random_mat(&mut rng, &f, 3);
                assert_eq!(a.mul(&f, &b).det(&f), f.mul(a.det(&f), b.det(&f)));
                match a.inverse(&f) {
                    Some(inv) => {
                        assert!(a.det(&f) != 0);
                        assert!(a.mul(&f, &inv).is_identity());
                        assert!(inv.mul(&f, &a).is_identity());
                    }
                    None => assert_eq!(a.det(&f), 0),
                }
            }
        }
    }

    #[test]
    fn rref_rank_and_null_space() {
        let f = FieldGF::new(3).unwrap();
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..40 {
            let m = random_mat(&mut rng, &f, 4);
            let rank = m.rank(&f);
            let null = m.null_space(&f);
            assert_eq!(rank + null.rows, 4);
            for r in 0..null.rows {
                let prod = m.apply_row(&f, null.row(r));
                // null space rows satisfy M·xᵀ = 0, i.e. x·Mᵀ = 0.
                let check = m.transpose().apply_row(&f, null.row(r));
                assert!(check.iter().all(|&v| v == 0), "{prod:?}");
            }
            assert_eq!(null.rank(&f), null.rows);
        }
    }

    #[test]
    fn row_space_canonical_is_invariant() {
        let f = FieldGF::new(5).unwrap();
        let a = Mat::from_rows(vec![vec![1, 2, 3, 4], vec![0, 1, 1, 0]]);
        let change = Mat::from_rows(vec![vec![2, 3], vec![1, 1]]);
        assert!(change.det(&f) != 0);
        let b = change.mul(&f, &a);
        assert_eq!(a.row_space_canonical(&f), b.row_space_canonical(&f));
        assert_eq!(a.row_space_canonical(&f).rows, 2);
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = FieldGF::new(8).unwrap();
        let mut rng = StdRng::seed_from_u64(19);
        let a = random_mat(&mut rng, &f, 3);
        let mut acc = Mat::identity(3);
        for e in 0..10u64 {
            assert_eq!(a.pow(&f, e), acc);
            acc = acc.mul(&f, &a);
        }
    }

    #[test]
    fn apply_row_matches_mat_mul() {
        let f = FieldGF::new(9).unwrap();
        let mut rng = StdRng::seed_from_u64(23);
        let m = random_mat(&mut rng, &f, 4);
        let v: Vec<u32> = (0..4).map(|_| rng.random_range(0..f.q)).collect();
        let as_mat = Mat::from_rows(vec![v.clone()]).mul(&f, &m);
        assert_eq!(as_mat.row(0), m.apply_row(&f, &v).as_slice());
    }
}

//! Dense exact matrices over a [`FieldSpec`], with just enough linear algebra
//! for this crate: products, kernels by Gaussian elimination, characteristic
//! polynomials through a Hessenberg reduction, and exhaustive root search.

use crate::error::SpechtError;
use crate::scalar::{FieldSpec, Scalar};
use num::bigint::BigInt;
use num::traits::Signed;
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Matrix {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = a.sub(b);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(s);
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    if !self.at(i, j).is_zero() && !v[j].is_zero() {
                        acc = acc.add(&self.at(i, j).mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn commutes_with(&self, other: &Matrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// True when every entry strictly above the diagonal vanishes.
    pub fn is_lower_triangular(&self) -> bool {
        for r in 0..self.rows {
            for c in (r + 1)..self.cols {
                if !self.at(r, c).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn diagonal(&self) -> Vec<Scalar> {
        (0..self.rows.min(self.cols))
            .map(|i| self.at(i, i).clone())
            .collect()
    }

    /// Basis of the right kernel, via row reduction. Each basis vector has
    /// length `cols`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivot_col_of_row = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            let mut piv = None;
            for i in r..rows {
                if !m.at(i, c).is_zero() {
                    piv = Some(i);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            for j in 0..cols {
                let tmp = m.at(piv, j).clone();
                m.set(piv, j, m.at(r, j).clone());
                m.set(r, j, tmp);
            }
            let inv = m.at(r, c).inv();
            for j in 0..cols {
                m.set(r, j, m.at(r, j).mul(&inv));
            }
            for i in 0..rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in 0..cols {
                        let v = m.at(i, j).sub(&f.mul(m.at(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivot_col_of_row.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        let pivots: Vec<usize> = pivot_col_of_row;
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![self.field.zero(); cols];
            v[fc] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = m.at(row, fc).neg();
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.cols - self.kernel_basis().len()
    }

    /// Characteristic polynomial, monic, as coefficients `c_0 + c_1 x + ... + x^n`.
    ///
    /// Reduces to upper Hessenberg form by a similarity transform and expands
    /// the leading-minor recurrence.
    pub fn charpoly(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols, "charpoly of a non-square matrix");
        let n = self.rows;
        let f = self.field;
        if n == 0 {
            return vec![f.one()];
        }
        let mut h = self.clone();
        // Hessenberg reduction with pivoting; row op paired with the inverse column op.
        for c in 0..n.saturating_sub(2) {
            let mut piv = None;
            for r in (c + 1)..n {
                if !h.at(r, c).is_zero() {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            if piv != c + 1 {
                for j in 0..n {
                    let tmp = h.at(piv, j).clone();
                    let v = h.at(c + 1, j).clone();
                    h.set(piv, j, v);
                    h.set(c + 1, j, tmp);
                }
                for i in 0..n {
                    let tmp = h.at(i, piv).clone();
                    let v = h.at(i, c + 1).clone();
                    h.set(i, piv, v);
                    h.set(i, c + 1, tmp);
                }
            }
            let inv = h.at(c + 1, c).inv();
            for r in (c + 2)..n {
                if h.at(r, c).is_zero() {
                    continue;
                }
                let factor = h.at(r, c).mul(&inv);
                for j in 0..n {
                    let v = h.at(r, j).sub(&factor.mul(h.at(c + 1, j)));
                    h.set(r, j, v);
                }
                for i in 0..n {
                    let v = h.at(i, c + 1).add(&factor.mul(h.at(i, r)));
                    h.set(i, c + 1, v);
                }
            }
        }
        // p_k(x) = (x - h_kk) p_{k-1}(x) - sum_m h_{m,k} (prod subdiagonals) p_{m-1}(x)
        let mut polys: Vec<Vec<Scalar>> = vec![vec![f.one()]];
        for k in 0..n {
            let mut p = poly_mul_linear(&polys[k], &h.at(k, k).neg(), &f);
            let mut sub = f.one();
            for m in (0..k).rev() {
                sub = sub.mul(h.at(m + 1, m));
                let coeff = h.at(m, k).mul(&sub).neg();
                if !coeff.is_zero() {
                    p = poly_add_scaled(&p, &polys[m], &coeff, &f);
                }
            }
            polys.push(p);
        }
        polys.pop().unwrap()
    }

    /// All eigenvalues in the ground field, with multiplicities, by exhaustive
    /// root search on the characteristic polynomial. Over the rationals the
    /// candidates are the integers within the largest Gershgorin radius
    /// (integrality is forced by monicity over the integer entries this crate
    /// produces); over `F_p` every residue is tried.
    pub fn field_eigenvalues(&self) -> Result<Vec<(Scalar, usize)>, SpechtError> {
        let poly = self.charpoly();
        let f = self.field;
        let mut candidates: Vec<Scalar> = Vec::new();
        match f {
            FieldSpec::Rational => {
                let mut radius = BigInt::from(0);
                for r in 0..self.rows {
                    let mut s = BigInt::from(0);
                    for c in 0..self.cols {
                        match self.at(r, c) {
                            Scalar::Rat(q) => {
                                // ceiling of |entry| so the bound stays valid
                                // even off the integer matrices this sees
                                let num = q.numer().abs();
                                let den = q.denom().abs();
                                s += (num + &den - 1) / den;
                            }
                            _ => unreachable!(),
                        }
                    }
                    if s > radius {
                        radius = s;
                    }
                }
                let bound: i64 = radius
                    .try_into()
                    .map_err(|_| SpechtError::Precondition("eigenvalue bound overflow".into()))?;
                for v in -bound..=bound {
                    candidates.push(f.from_i64(v));
                }
            }
            FieldSpec::Prime(p) => {
                if p > 1_000_000 {
                    return Err(SpechtError::BadField(
                        "exhaustive root search needs p <= 1e6".into(),
                    ));
                }
                for v in 0..p {
                    candidates.push(Scalar::Fp { p, v });
                }
            }
        }
        let mut out = Vec::new();
        for cand in candidates {
            let mut mult = 0usize;
            let mut cur = poly.clone();
            while cur.len() > 1 {
                let (q, rem) = poly_div_linear(&cur, &cand, &f);
                if !rem.is_zero() {
                    break;
                }
                mult += 1;
                cur = q;
            }
            if mult > 0 {
                out.push((cand, mult));
            }
        }
        Ok(out)
    }

    /// Serialize as `{rows, cols, entries: [[r, c, "num/den" | "k mod p"], ...]}`
    /// listing nonzero entries in row-major order.
    pub fn to_json(&self) -> Value {
        let mut entries = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.at(r, c).is_zero() {
                    entries.push(json!([r, c, self.at(r, c).to_display_string()]));
                }
            }
        }
        json!({ "rows": self.rows, "cols": self.cols, "entries": entries })
    }

    pub fn from_json(v: &Value, field: FieldSpec) -> Result<Matrix, SpechtError> {
        let bad = |m: &str| SpechtError::Parse(format!("matrix json: {m}"));
        let rows = v["rows"].as_u64().ok_or_else(|| bad("rows"))? as usize;
        let cols = v["cols"].as_u64().ok_or_else(|| bad("cols"))? as usize;
        let mut m = Matrix::zero(rows, cols, field);
        for e in v["entries"].as_array().ok_or_else(|| bad("entries"))? {
            let r = e[0].as_u64().ok_or_else(|| bad("entry row"))? as usize;
            let c = e[1].as_u64().ok_or_else(|| bad("entry col"))? as usize;
            let s = e[2].as_str().ok_or_else(|| bad("entry value"))?;
            m.set(r, c, Scalar::parse(s, field)?);
        }
        Ok(m)
    }
}

fn poly_mul_linear(p: &[Scalar], constant: &Scalar, f: &FieldSpec) -> Vec<Scalar> {
    // p(x) * (x + constant)
    let mut out = vec![f.zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] = out[i + 1].add(c);
        out[i] = out[i].add(&c.mul(constant));
    }
    out
}

fn poly_add_scaled(p: &[Scalar], q: &[Scalar], s: &Scalar, f: &FieldSpec) -> Vec<Scalar> {
    let n = p.len().max(q.len());
    let mut out = vec![f.zero(); n];
    for (i, c) in p.iter().enumerate() {
        out[i] = out[i].add(c);
    }
    for (i, c) in q.iter().enumerate() {
        out[i] = out[i].add(&c.mul(s));
    }
    out
}

/// Divide `p` by `(x - root)`; returns (quotient, remainder).
pub fn poly_div_linear(p: &[Scalar], root: &Scalar, f: &FieldSpec) -> (Vec<Scalar>, Scalar) {
    let mut q = vec![f.zero(); p.len().saturating_sub(1)];
    let mut carry = f.zero();
    for i in (0..p.len()).rev() {
        let cur = p[i].add(&carry);
        if i == 0 {
            return (q, cur);
        }
        q[i - 1] = cur.clone();
        carry = cur.mul(root);
    }
    (q, carry)
}

pub fn poly_eval(p: &[Scalar], x: &Scalar, f: &FieldSpec) -> Scalar {
    let mut acc = f.zero();
    for c in p.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: FieldSpec, rows: usize, cols: usize, vals: &[i64]) -> Matrix {
        let mut out = Matrix::zero(rows, cols, field);
        for (i, v) in vals.iter().enumerate() {
            out.data[i] = field.from_i64(*v);
        }
        out
    }

    #[test]
    fn charpoly_matches_hand_computation() {
        // [[2,1],[1,2]] -> x^2 - 4x + 3
        let f = FieldSpec::Rational;
        let a = m(f, 2, 2, &[2, 1, 1, 2]);
        let p = a.charpoly();
        let want: Vec<Scalar> = [3, -4, 1].iter().map(|v| f.from_i64(*v)).collect();
        assert_eq!(p, want);
        let eig = a.field_eigenvalues().unwrap();
        assert_eq!(eig, vec![(f.from_i64(1), 1), (f.from_i64(3), 1)]);
    }

    #[test]
    fn charpoly_with_zero_pivot_needs_permutation() {
        let f = FieldSpec::Rational;
        // companion-like matrix with a zero in the subdiagonal path
        let a = m(f, 3, 3, &[0, 0, 1, 1, 0, 0, 0, 1, 0]);
        let p = a.charpoly();
        // permutation matrix of a 3-cycle: x^3 - 1
        let want: Vec<Scalar> = [-1, 0, 0, 1].iter().map(|v| f.from_i64(*v)).collect();
        assert_eq!(p, want);
    }

    #[test]
    fn kernel_of_singular_matrix() {
        let f = FieldSpec::Prime(5);
        let a = m(f, 2, 2, &[1, 2, 2, 4]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(|s| s.is_zero()));
        }
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn eigenvalues_over_prime_field() {
        let f = FieldSpec::Prime(3);
        // diag(2, 2, 0): eigenvalues 2 (twice), 0
        let a = m(f, 3, 3, &[2, 0, 0, 0, 2, 0, 0, 0, 0]);
        let eig = a.field_eigenvalues().unwrap();
        assert_eq!(eig, vec![(f.from_i64(0), 1), (f.from_i64(2), 2)]);
    }

    #[test]
    fn matrix_json_round_trip() {
        let f = FieldSpec::Rational;
        let a = m(f, 2, 3, &[0, 1, -2, 3, 0, 0]);
        let j = a.to_json();
        assert_eq!(Matrix::from_json(&j, f).unwrap(), a);
    }
}

//! Dense exact linear algebra over a [`FieldCtx`].
//!
//! Matrices are row-major. Entry `(row, col)` of an operator matrix is the
//! coefficient of basis vector `row` in the image of basis vector `col`.

use crate::field::{FieldCtx, FieldElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![FieldElem::ZERO; rows * cols],
        }
    }

    pub fn identity(ctx: &FieldCtx, n: usize) -> Matrix {
        Matrix::diagonal(&vec![ctx.one(); n])
    }

    pub fn diagonal(entries: &[FieldElem]) -> Matrix {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn scalar(ctx: &FieldCtx, n: usize, c: FieldElem) -> Matrix {
        Matrix::identity(ctx, n).scale(ctx, c)
    }

    pub fn from_rows(rows: Vec<Vec<FieldElem>>) -> Option<Matrix> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return None;
        }
        Some(Matrix {
            rows: n_rows,
            cols: n_cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|e| !e.is_zero())
            .map(|i| (i / self.cols, i % self.cols))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|r| (0..r.min(self.cols)).all(|c| self.get(r, c).is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<FieldElem> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = r * out.cols;
                for (c, &b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[base + c] = ctx.add(out.data[base + c], ctx.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, ctx: &FieldCtx, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                ctx.sum(
                    self.row(r)
                        .iter()
                        .zip(v)
                        .map(|(&a, &b)| ctx.mul(a, b)),
                )
            })
            .collect()
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(FieldElem, FieldElem) -> FieldElem) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Matrix) -> Matrix {
        self.zip_with(other, |a, b| ctx.add(a, b))
    }

    pub fn sub(&self, ctx: &FieldCtx, other: &Matrix) -> Matrix {
        self.zip_with(other, |a, b| ctx.sub(a, b))
    }

    pub fn scale(&self, ctx: &FieldCtx, c: FieldElem) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| ctx.mul(a, c)).collect(),
        }
    }

    pub fn pow(&self, ctx: &FieldCtx, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(ctx, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(ctx, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(ctx, &base);
            }
        }
        acc
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Block-diagonal matrix with the given square blocks.
    pub fn block_diagonal(blocks: &[&Matrix]) -> Matrix {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            assert!(b.is_square());
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(off + r, off + c, b.get(r, c));
                }
            }
            off += b.rows;
        }
        out
    }

    /// Restriction of this operator to the subspace spanned by `basis`,
    /// assuming the subspace is invariant. Returns the matrix in that basis.
    pub fn restrict(&self, ctx: &FieldCtx, basis: &[Vec<FieldElem>]) -> Option<Matrix> {
        let d = basis.len();
        let mut out = Matrix::zeros(d, d);
        let mut coords = Subspace::new(self.cols);
        for b in basis {
            coords.insert(ctx, b);
        }
        for (c, b) in basis.iter().enumerate() {
            let image = self.mul_vec(ctx, b);
            let x = coords.coordinates(ctx, &image)?;
            for (r, v) in x.into_iter().enumerate() {
                out.set(r, c, v);
            }
        }
        Some(out)
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn row_reduce(ctx: &FieldCtx, m: &mut Matrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        if pr != row {
            for c in 0..m.cols {
                let t = m.get(pr, c);
                m.set(pr, c, m.get(row, c));
                m.set(row, c, t);
            }
        }
        let inv = ctx.inv(m.get(row, col)).expect("pivot is nonzero");
        for c in col..m.cols {
            m.set(row, c, ctx.mul(m.get(row, c), inv));
        }
        for r in 0..m.rows {
            if r == row {
                continue;
            }
            let f = m.get(r, col);
            if f.is_zero() {
                continue;
            }
            for c in col..m.cols {
                let v = ctx.sub(m.get(r, c), ctx.mul(f, m.get(row, c)));
                m.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(ctx: &FieldCtx, m: &Matrix) -> usize {
    let mut work = m.clone();
    row_reduce(ctx, &mut work).len()
}

/// Basis of the right kernel `{v : m v = 0}`.
pub fn nullspace(ctx: &FieldCtx, m: &Matrix) -> Vec<Vec<FieldElem>> {
    let mut work = m.clone();
    let pivots = row_reduce(ctx, &mut work);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![ctx.zero(); m.cols];
            v[f] = ctx.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = ctx.neg(work.get(r, f));
            }
            v
        })
        .collect()
}

pub fn determinant(ctx: &FieldCtx, m: &Matrix) -> FieldElem {
    assert!(m.is_square());
    let n = m.rows;
    let mut a = m.clone();
    let mut det = ctx.one();
    for col in 0..n {
        let Some(pr) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
            return ctx.zero();
        };
        if pr != col {
            for c in 0..n {
                let t = a.get(pr, c);
                a.set(pr, c, a.get(col, c));
                a.set(col, c, t);
            }
            det = ctx.neg(det);
        }
        let pivot = a.get(col, col);
        det = ctx.mul(det, pivot);
        let inv = ctx.inv(pivot).expect("pivot is nonzero");
        for r in col + 1..n {
            let f = ctx.mul(a.get(r, col), inv);
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = ctx.sub(a.get(r, c), ctx.mul(f, a.get(col, c)));
                a.set(r, c, v);
            }
        }
    }
    det
}

pub fn is_invertible(ctx: &FieldCtx, m: &Matrix) -> bool {
    m.is_square() && rank(ctx, m) == m.rows
}

/// Characteristic polynomial det(zI - m), constant term first, computed by
/// reduction to upper Hessenberg form.
pub fn charpoly(ctx: &FieldCtx, m: &Matrix) -> Vec<FieldElem> {
    assert!(m.is_square());
    let n = m.rows;
    let mut h = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| !h.get(i, j).is_zero()) else {
            continue;
        };
        if i != j + 1 {
            for c in 0..n {
                let t = h.get(i, c);
                h.set(i, c, h.get(j + 1, c));
                h.set(j + 1, c, t);
            }
            for r in 0..n {
                let t = h.get(r, i);
                h.set(r, i, h.get(r, j + 1));
                h.set(r, j + 1, t);
            }
        }
        let inv = ctx.inv(h.get(j + 1, j)).expect("pivot is nonzero");
        for i2 in j + 2..n {
            let u = ctx.mul(h.get(i2, j), inv);
            if u.is_zero() {
                continue;
            }
            for c in 0..n {
                let v = ctx.sub(h.get(i2, c), ctx.mul(u, h.get(j + 1, c)));
                h.set(i2, c, v);
            }
            for r in 0..n {
                let v = ctx.add(h.get(r, j + 1), ctx.mul(u, h.get(r, i2)));
                h.set(r, j + 1, v);
            }
        }
    }

    // polys[m] = characteristic polynomial of the leading m x m block.
    let mut polys: Vec<Vec<FieldElem>> = vec![vec![ctx.one()]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![ctx.zero(); m + 2];
        let hmm = h.get(m, m);
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = ctx.add(next[d + 1], c);
            next[d] = ctx.sub(next[d], ctx.mul(hmm, c));
        }
        let mut sub_diag = ctx.one();
        for i in (0..m).rev() {
            sub_diag = ctx.mul(sub_diag, h.get(i + 1, i));
            let factor = ctx.mul(h.get(i, m), sub_diag);
            if factor.is_zero() {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = ctx.sub(next[d], ctx.mul(factor, c));
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the empty determinant")
}

/// Incrementally built subspace of F^n, kept in echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    dim_ambient: usize,
    /// Echelon rows, each normalized so its pivot entry is one.
    rows: Vec<Vec<FieldElem>>,
    pivots: Vec<usize>,
    /// The vectors as inserted, aligned with `rows`.
    originals: Vec<Vec<FieldElem>>,
    /// `combos[i]` expresses `rows[i]` in terms of `originals`.
    combos: Vec<Vec<FieldElem>>,
}

impl Subspace {
    pub fn new(dim_ambient: usize) -> Subspace {
        Subspace {
            dim_ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
            originals: Vec::new(),
            combos: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim_ambient
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim_ambient
    }

    /// The inserted vectors that were found independent.
    pub fn basis(&self) -> &[Vec<FieldElem>] {
        &self.originals
    }

    fn reduce(&self, ctx: &FieldCtx, v: &[FieldElem]) -> (Vec<FieldElem>, Vec<FieldElem>) {
        let mut w = v.to_vec();
        let mut combo = vec![ctx.zero(); self.rows.len()];
        for (i, (row, &pc)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let f = w[pc];
            if f.is_zero() {
                continue;
            }
            for (wc, &rc) in w.iter_mut().zip(row) {
                if !rc.is_zero() {
                    *wc = ctx.sub(*wc, ctx.mul(f, rc));
                }
            }
            combo[i] = f;
        }
        (w, combo)
    }

    pub fn contains(&self, ctx: &FieldCtx, v: &[FieldElem]) -> bool {
        self.reduce(ctx, v).0.iter().all(|e| e.is_zero())
    }

    /// Insert `v`; returns `true` if it enlarged the subspace.
    pub fn insert(&mut self, ctx: &FieldCtx, v: &[FieldElem]) -> bool {
        assert_eq!(v.len(), self.dim_ambient);
        let (w, combo) = self.reduce(ctx, v);
        let Some(pc) = w.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = ctx.inv(w[pc]).expect("pivot is nonzero");
        let row: Vec<FieldElem> = w.iter().map(|&e| ctx.mul(e, inv)).collect();
        // new row = inv * (v - sum combo_i rows_i)
        let k = self.originals.len();
        let mut new_combo = vec![ctx.zero(); k + 1];
        new_combo[k] = inv;
        for (i, &f) in combo.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let scaled = ctx.mul(f, inv);
            for (j, &cij) in self.combos[i].iter().enumerate() {
                new_combo[j] = ctx.sub(new_combo[j], ctx.mul(scaled, cij));
            }
        }
        for c in &mut self.combos {
            c.push(ctx.zero());
        }
        self.rows.push(row);
        self.pivots.push(pc);
        self.originals.push(v.to_vec());
        self.combos.push(new_combo);
        true
    }

    /// Coordinates of `v` with respect to [`Subspace::basis`], if `v` lies in
    /// the subspace.
    pub fn coordinates(&self, ctx: &FieldCtx, v: &[FieldElem]) -> Option<Vec<FieldElem>> {
        let (w, combo) = self.reduce(ctx, v);
        if w.iter().any(|e| !e.is_zero()) {
            return None;
        }
        let mut out = vec![ctx.zero(); self.originals.len()];
        for (i, &f) in combo.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (j, &cij) in self.combos[i].iter().enumerate() {
                out[j] = ctx.add(out[j], ctx.mul(f, cij));
            }
        }
        Some(out)
    }
}

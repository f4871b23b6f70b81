//! Dense matrices over GF(p) with exact elimination.
//!
//! [`MatGF`] is a row-major value type. A matrix with zero rows is a legal
//! value: kernels and intersections return it to denote the trivial
//! subspace, and every consumer in this crate handles it.
//!
//! The text format shared with the command line is a header line
//! `p n k` (modulus, number of columns, number of rows) followed by one line
//! per row of whitespace-separated digits.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{FpElement, Prime};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatGF {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Result of [`MatGF::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: MatGF,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl MatGF {
    /// Builds a matrix from row-major data, rejecting non-canonical entries.
    pub fn new(p: Prime, rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&x| x >= p.get()) {
            return Err(Error::InvalidParameters(format!(
                "entry {bad} is not a residue mod {p}"
            )));
        }
        Ok(MatGF {
            p,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from rows of integers, reducing every entry mod `p`.
    ///
    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[i64]>>(p: Prime, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| p.reduce(x)));
        }
        MatGF {
            p,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        MatGF {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// The empty basis: zero rows of length `cols`.
    pub fn empty(p: Prime, cols: usize) -> Self {
        MatGF::zeros(p, 0, cols)
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = MatGF::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn random<R: Rng + ?Sized>(p: Prime, rows: usize, cols: usize, rng: &mut R) -> Self {
        let data = (0..rows * cols)
            .map(|_| rng.gen_range(0..p.get()))
            .collect();
        MatGF {
            p,
            rows,
            cols,
            data,
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn element(&self, r: usize, c: usize) -> FpElement {
        FpElement::new(self.get(r, c) as i64, self.p)
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.data[r * self.cols + c] = self.p.reduce(value);
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    fn same_field(&self, other: &MatGF) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.p.get(),
                right: other.p.get(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &MatGF) -> Result<MatGF> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p.get() as u32;
        let mut out = MatGF::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0u32;
                for t in 0..self.cols {
                    acc += self.get(i, t) as u32 * other.get(t, j) as u32;
                }
                out.data[i * other.cols + j] = (acc % p) as u8;
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let p = self.p.get() as u32;
        let mut out = vec![0u32; self.cols];
        for (r, &coef) in v.iter().enumerate() {
            if coef == 0 {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(self.row(r)) {
                *o += coef as u32 * x as u32;
            }
        }
        Ok(out.into_iter().map(|x| (x % p) as u8).collect())
    }

    pub fn transpose(&self) -> MatGF {
        let mut out = MatGF::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn neg(&self) -> MatGF {
        let p = self.p;
        MatGF {
            data: self.data.iter().map(|&x| p.neg(x)).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: i64) -> MatGF {
        let p = self.p;
        let c = p.reduce(c);
        MatGF {
            data: self.data.iter().map(|&x| p.mul(x, c)).collect(),
            ..self.clone()
        }
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<MatGF> {
        if perm.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "permutation of length {} for {} columns",
                perm.len(),
                self.cols
            )));
        }
        let mut out = MatGF::zeros(self.p, self.rows, self.cols);
        for i in 0..self.rows {
            for (j, &src) in perm.iter().enumerate() {
                out.data[i * self.cols + j] = self.get(i, src);
            }
        }
        Ok(out)
    }

    /// Multiplies column `j` by `factors[j]`.
    pub fn scale_columns(&self, factors: &[u8]) -> Result<MatGF> {
        if factors.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{} column factors for {} columns",
                factors.len(),
                self.cols
            )));
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            for (j, &f) in factors.iter().enumerate() {
                out.data[i * self.cols + j] = self.p.mul(self.get(i, j), f);
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &MatGF) -> Result<MatGF> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns on {} columns",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatGF {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &MatGF) -> Result<MatGF> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot join {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(MatGF {
            p: self.p,
            rows: self.rows,
            cols,
            data,
        })
    }

    /// The 2x2 block matrix `[[a, b], [c, d]]`.
    pub fn block_compose(a: &MatGF, b: &MatGF, c: &MatGF, d: &MatGF) -> Result<MatGF> {
        if a.cols != c.cols || b.cols != d.cols {
            return Err(Error::DimensionMismatch(format!(
                "block columns disagree: {}/{} and {}/{}",
                a.cols, c.cols, b.cols, d.cols
            )));
        }
        a.hstack(b)?.vstack(&c.hstack(d)?)
    }

    pub fn rref(&self) -> Rref {
        let mut data = self.data.clone();
        let pivot_cols = rref_in_place(self.p, self.rows, self.cols, &mut data);
        Rref {
            matrix: MatGF {
                data,
                ..self.clone()
            },
            rank: pivot_cols.len(),
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        rank_in_place(self.p, self.rows, self.cols, &mut data)
    }

    /// Determinant by Gaussian elimination with row swaps.
    pub fn det(&self) -> Result<FpElement> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut data = self.data.clone();
        Ok(FpElement::new(
            det_in_place(self.p, self.rows, &mut data) as i64,
            self.p,
        ))
    }

    /// Basis of the right null space `{x : self * x^T = 0}`, one vector per row.
    pub fn nullspace_basis(&self) -> MatGF {
        let Rref {
            matrix: r,
            pivot_cols,
            ..
        } = self.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = MatGF::zeros(p, free.len(), self.cols);
        for (i, &f) in free.iter().enumerate() {
            out.data[i * self.cols + f] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                out.data[i * self.cols + pc] = p.neg(r.get(row, f));
            }
        }
        out
    }

    /// Nonzero rows of the reduced row echelon form: a basis of the row space.
    pub fn row_space_basis(&self) -> MatGF {
        let Rref { matrix, rank, .. } = self.rref();
        MatGF {
            rows: rank,
            data: matrix.data[..rank * self.cols].to_vec(),
            ..matrix
        }
    }

    pub fn in_row_space(&self, v: &[u8]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let row = MatGF::new(self.p, 1, self.cols, v.to_vec())?;
        Ok(self.vstack(&row)?.rank() == self.rank())
    }

    /// Basis of `rowspace(a) ∩ rowspace(b)`.
    ///
    /// Every `z` with `z * [a; b] = 0` splits as `(x, y)` with `x a = -y b`,
    /// and `x a` ranges over the intersection.
    pub fn rowspace_intersect(a: &MatGF, b: &MatGF) -> Result<MatGF> {
        let stacked = a.vstack(b)?;
        let left_kernel = stacked.transpose().nullspace_basis();
        let mut vectors = MatGF::zeros(a.p, left_kernel.rows, a.cols);
        for z in 0..left_kernel.rows {
            let x = &left_kernel.row(z)[..a.rows];
            let v = a.vec_mul(x)?;
            vectors.data[z * a.cols..(z + 1) * a.cols].copy_from_slice(&v);
        }
        Ok(vectors.row_space_basis())
    }

    /// Parses the text format: header `p n k`, then `k` rows of `n` digits.
    pub fn parse(text: &str) -> Result<MatGF> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            column: 1,
            message: "missing header `p n k`".into(),
        })?;
        let fields = tokens(header);
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: hline,
                column: 1,
                message: format!("header needs 3 fields `p n k`, found {}", fields.len()),
            });
        }
        let mut nums = [0usize; 3];
        for (slot, (col, tok)) in nums.iter_mut().zip(&fields) {
            *slot = tok.parse().map_err(|_| Error::Parse {
                line: hline,
                column: *col,
                message: format!("expected a non-negative integer, found `{tok}`"),
            })?;
        }
        let [p, n, k] = nums;
        let p = Prime::new(p as u32).map_err(|e| Error::Parse {
            line: hline,
            column: fields[0].0,
            message: e.to_string(),
        })?;
        let mut data = Vec::with_capacity(n * k);
        for r in 0..k {
            let (lno, line) = lines.next().ok_or(Error::Parse {
                line: hline + r + 1,
                column: 1,
                message: format!("expected {k} rows, found {r}"),
            })?;
            let toks = tokens(line);
            if toks.len() != n {
                return Err(Error::Parse {
                    line: lno,
                    column: toks.get(n).map_or(line.len() + 1, |t| t.0),
                    message: format!("expected {n} entries, found {}", toks.len()),
                });
            }
            for (col, tok) in toks {
                match tok.parse::<u8>() {
                    Ok(x) if x < p.get() => data.push(x),
                    _ => {
                        return Err(Error::Parse {
                            line: lno,
                            column: col,
                            message: format!("`{tok}` is not a residue mod {p}"),
                        })
                    }
                }
            }
        }
        if let Some((lno, _)) = lines.next() {
            return Err(Error::Parse {
                line: lno,
                column: 1,
                message: format!("unexpected content after {k} rows"),
            });
        }
        Ok(MatGF {
            p,
            rows: k,
            cols: n,
            data,
        })
    }
}

/// Whitespace-separated tokens with their 1-based column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

impl FromStr for MatGF {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MatGF::parse(s)
    }
}

impl fmt::Display for MatGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.p, self.cols, self.rows)?;
        for row in self.row_iter() {
            let mut first = true;
            for x in row {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
                first = false;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Reduces `data` to RREF in place and returns the pivot columns.
///
/// Pivots are the first nonzero entry at or below the current row, so the
/// output is fully deterministic.
pub(crate) fn rref_in_place(p: Prime, rows: usize, cols: usize, data: &mut [u8]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(src) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if src != r {
            for j in 0..cols {
                data.swap(src * cols + j, r * cols + j);
            }
        }
        let inv = p.inv(data[r * cols + c]).expect("nonzero pivot");
        for j in c..cols {
            data[r * cols + j] = p.mul(data[r * cols + j], inv);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = data[i * cols + c];
            if f == 0 {
                continue;
            }
            let nf = p.neg(f);
            for j in c..cols {
                let pr = data[r * cols + j];
                data[i * cols + j] = p.add(data[i * cols + j], p.mul(nf, pr));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Forward elimination only; returns the rank.
pub(crate) fn rank_in_place(p: Prime, rows: usize, cols: usize, data: &mut [u8]) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(src) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if src != r {
            for j in 0..cols {
                data.swap(src * cols + j, r * cols + j);
            }
        }
        let inv = p.inv(data[r * cols + c]).expect("nonzero pivot");
        for i in r + 1..rows {
            let f = data[i * cols + c];
            if f == 0 {
                continue;
            }
            let nf = p.neg(p.mul(f, inv));
            for j in c..cols {
                let pr = data[r * cols + j];
                data[i * cols + j] = p.add(data[i * cols + j], p.mul(nf, pr));
            }
        }
        r += 1;
    }
    r
}

pub(crate) fn det_in_place(p: Prime, n: usize, data: &mut [u8]) -> u8 {
    let mut det = 1u8 % p.get();
    for c in 0..n {
        let Some(src) = (c..n).find(|&i| data[i * n + c] != 0) else {
            return 0;
        };
        if src != c {
            for j in 0..n {
                data.swap(src * n + j, c * n + j);
            }
            det = p.neg(det);
        }
        let piv = data[c * n + c];
        det = p.mul(det, piv);
        let inv = p.inv(piv).expect("nonzero pivot");
        for i in c + 1..n {
            let f = data[i * n + c];
            if f == 0 {
                continue;
            }
            let nf = p.neg(p.mul(f, inv));
            for j in c..n {
                let pr = data[c * n + j];
                data[i * n + j] = p.add(data[i * n + j], p.mul(nf, pr));
            }
        }
    }
    det
}

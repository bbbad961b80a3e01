//! Dense real square matrices, lexicographic k-subsets, minors and compound
//! matrices.
//!
//! Index subsets are 1-based, the way they are written in the literature on
//! compound matrices; storage is 0-based and row-major.

use std::fmt;
use std::ops::{Index, Mul};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// Dense real `n × n` matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Builds a matrix from `n·n` row-major entries.
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(invalid("matrix dimension must be positive"));
        }
        if data.len() != n * n {
            return Err(invalid(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                data.len()
            )));
        }
        if let Some(pos) = data.iter().position(|x| !x.is_finite()) {
            return Err(invalid(format!(
                "entry ({}, {}) is not finite",
                pos / n + 1,
                pos % n + 1
            )));
        }
        Ok(Self { n, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(invalid(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Self::new(n, data)
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![1.0; n])
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "matrix dimension must be positive");
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn diagonal(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &v) in d.iter().enumerate() {
            m.data[i * m.n + i] = v;
        }
        m
    }

    /// Builds a matrix entry by entry from a 0-based generator.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = f(i, j);
            }
        }
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.rows().map(<[f64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    /// Largest absolute entry; 0 for the zero matrix.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Determinant by LU factorization with partial pivoting.
    pub fn det(&self) -> f64 {
        let mut buf = self.data.clone();
        lu_det(&mut buf, self.n)
    }

    /// Returns `P·A·Pᵀ` for the permutation sending index `i` to `perm[i]`
    /// (0-based).
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(invalid("permutation length does not match dimension"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(invalid("not a permutation"));
            }
        }
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.data[perm[i] * self.n + perm[j]] = self[(i, j)];
            }
        }
        Ok(out)
    }

    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.n != rhs.n {
            return Err(invalid(format!(
                "cannot multiply {0}x{0} by {1}x{1}",
                self.n, rhs.n
            )));
        }
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                let row = &rhs.data[k * n..(k + 1) * n];
                for (o, b) in out[i * n..(i + 1) * n].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        Ok(Matrix { n, data: out })
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// Panics on dimension mismatch; use [`Matrix::matmul`] for a checked
    /// product.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs).expect("dimension mismatch")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("n", &self.n)
            .field("rows", &self.to_rows())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    n: usize,
    rows: Vec<Vec<f64>>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            n: self.n,
            rows: self.to_rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(d)?;
        if repr.rows.len() != repr.n {
            return Err(serde::de::Error::custom(format!(
                "\"n\" is {} but {} rows were given",
                repr.n,
                repr.rows.len()
            )));
        }
        Matrix::from_rows(&repr.rows).map_err(serde::de::Error::custom)
    }
}

/// Determinant of the `k × k` row-major buffer, destroying it.
pub(crate) fn lu_det(buf: &mut [f64], k: usize) -> f64 {
    debug_assert_eq!(buf.len(), k * k);
    let mut det = 1.0;
    for col in 0..k {
        let mut piv = col;
        let mut best = buf[col * k + col].abs();
        for r in col + 1..k {
            let v = buf[r * k + col].abs();
            if v > best {
                best = v;
                piv = r;
            }
        }
        if best == 0.0 {
            return 0.0;
        }
        if piv != col {
            for c in 0..k {
                buf.swap(piv * k + c, col * k + c);
            }
            det = -det;
        }
        let p = buf[col * k + col];
        det *= p;
        for r in col + 1..k {
            let f = buf[r * k + col] / p;
            if f == 0.0 {
                continue;
            }
            for c in col + 1..k {
                buf[r * k + c] -= f * buf[col * k + c];
            }
        }
    }
    det
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial coefficient overflows usize")
}

/// A strictly increasing `k`-subset of `{1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CombIndex {
    n: usize,
    indices: Vec<usize>,
}

impl CombIndex {
    pub fn new(n: usize, indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() || indices.len() > n {
            return Err(invalid(format!(
                "subset size {} outside [1, {n}]",
                indices.len()
            )));
        }
        if indices[0] < 1 || *indices.last().unwrap() > n {
            return Err(invalid(format!("subset {indices:?} not within [1, {n}]")));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid(format!(
                "subset {indices:?} is not strictly increasing"
            )));
        }
        Ok(Self { n, indices })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Lexicographic rank among all `k`-subsets of `{1, …, n}`.
    pub fn rank(&self) -> usize {
        let (n, k) = (self.n, self.k());
        let mut r = 0;
        let mut prev = 0;
        for (t, &i) in self.indices.iter().enumerate() {
            // subsets that agree on the first t slots but put a smaller value in slot t
            for v in prev + 1..i {
                r += binomial(n - v, k - t - 1);
            }
            prev = i;
        }
        r
    }

    pub fn unrank(n: usize, k: usize, rank: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(invalid(format!("subset size {k} outside [1, {n}]")));
        }
        let total = binomial(n, k);
        if rank >= total {
            return Err(invalid(format!(
                "rank {rank} out of range for C({n}, {k}) = {total}"
            )));
        }
        let mut r = rank;
        let mut indices = Vec::with_capacity(k);
        let mut v = 1;
        for t in 0..k {
            loop {
                let block = binomial(n - v, k - t - 1);
                if r < block {
                    break;
                }
                r -= block;
                v += 1;
            }
            indices.push(v);
            v += 1;
        }
        Ok(Self { n, indices })
    }

    /// All `k`-subsets of `{1, …, n}` in lexicographic order.
    pub fn all(n: usize, k: usize) -> Vec<CombIndex> {
        if k == 0 || k > n {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(binomial(n, k));
        let mut cur: Vec<usize> = (1..=k).collect();
        loop {
            out.push(Self {
                n,
                indices: cur.clone(),
            });
            // rightmost slot that can still be incremented
            let Some(t) = (0..k).rev().find(|&t| cur[t] < n - (k - 1 - t)) else {
                break;
            };
            cur[t] += 1;
            for u in t + 1..k {
                cur[u] = cur[u - 1] + 1;
            }
        }
        out
    }
}

impl fmt::Display for CombIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_index_set(f, &self.indices)
    }
}

pub(crate) fn write_index_set(f: &mut impl fmt::Write, set: &[usize]) -> fmt::Result {
    f.write_char('{')?;
    for (t, i) in set.iter().enumerate() {
        if t > 0 {
            f.write_char(',')?;
        }
        write!(f, "{i}")?;
    }
    f.write_char('}')
}

/// Determinant of the submatrix of `a` on `rows × cols`.
pub fn minor(a: &Matrix, rows: &CombIndex, cols: &CombIndex) -> Result<f64> {
    if rows.k() != cols.k() {
        return Err(invalid(format!(
            "row subset has {} indices, column subset has {}",
            rows.k(),
            cols.k()
        )));
    }
    if rows.n() > a.n() || cols.n() > a.n() {
        return Err(invalid(format!(
            "index subsets range over more than the {} rows of the matrix",
            a.n()
        )));
    }
    let mut buf = Vec::new();
    Ok(minor_into(a, rows.indices(), cols.indices(), &mut buf))
}

fn minor_into(a: &Matrix, rows: &[usize], cols: &[usize], buf: &mut Vec<f64>) -> f64 {
    let k = rows.len();
    buf.clear();
    for &r in rows {
        buf.extend(cols.iter().map(|&c| a[(r - 1, c - 1)]));
    }
    lu_det(buf, k)
}

/// The `j`-th compound matrix of a source matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompoundMatrix {
    pub source_n: usize,
    pub order: usize,
    pub matrix: Matrix,
}

impl CompoundMatrix {
    /// Label of row/column `r` (0-based) as a 1-based index subset.
    pub fn index_set(&self, r: usize) -> CombIndex {
        CombIndex::unrank(self.source_n, self.order, r).expect("rank within compound dimension")
    }
}

/// Matrix of all `j × j` minors of `a`, rows and columns in lexicographic
/// order of the index subsets.
pub fn compound(a: &Matrix, j: usize) -> Result<CompoundMatrix> {
    let n = a.n();
    if j == 0 || j > n {
        return Err(invalid(format!("compound order {j} outside [1, {n}]")));
    }
    let subsets = CombIndex::all(n, j);
    let m = subsets.len();
    let matrix = if j == 1 {
        a.clone()
    } else {
        let mut data = Vec::with_capacity(m * m);
        let mut buf = Vec::with_capacity(j * j);
        for r in &subsets {
            for c in &subsets {
                data.push(minor_into(a, r.indices(), c.indices(), &mut buf));
            }
        }
        Matrix::new(m, data).map_err(|e| match e {
            Error::InvalidArgument(msg) => Error::NumericFailure(msg),
            other => other,
        })?
    };
    Ok(CompoundMatrix {
        source_n: n,
        order: j,
        matrix,
    })
}

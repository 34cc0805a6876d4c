//! Exact linear algebra over the rationals.
//!
//! Two elimination routes live here. Dense matrices go through fraction-free
//! (Bareiss) elimination for rank and determinant. Everything that needs a
//! basis (nullspaces, particular solutions, spans, intersections) goes through
//! [`RowEchelon`], a sparse incremental echelon form whose rows are normalized
//! to a leading 1 at their pivot. Reduced row echelon form is unique, so every
//! basis produced from it is canonical regardless of row insertion order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Dense vector over ℚ.
pub type QVector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vec(n: usize) -> QVector {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> QVector {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("no solution: right-hand side is not in the column space")]
    NoSolution,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<QVector>) -> Result<Self, LinAlgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinAlgError::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(QMatrix {
            rows: nrows,
            cols,
            data,
        })
    }

    /// Convenience constructor for integer literals. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[QVector], nrows: usize) -> Self {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> QVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> QVector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Commutator `self·other − other·self`.
    pub fn commutator(&self, other: &QMatrix) -> QMatrix {
        let ab = self.mul(other);
        let ba = other.mul(self);
        ab.add(&ba.scale(&-Rational::one()))
    }

    /// Row-major flattening.
    pub fn to_vec(&self) -> QVector {
        self.data.clone()
    }

    pub fn to_row_vecs(&self) -> Vec<QVector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Scales a rational row by the lcm of its denominators.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

/// Fraction-free elimination in place. Returns the rank and, when the matrix
/// is square, its determinant.
fn bareiss(m: &QMatrix) -> (usize, Option<Rational>) {
    let rows = m.rows;
    let cols = m.cols;
    // Row scaling multiplies the determinant; track it to undo at the end.
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let r = m.row(i);
            let lcm = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            integer_row(r)
        })
        .collect();

    let mut sign = 1i32;
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            col += 1;
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            sign = -sign;
        }
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = (&a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        col += 1;
    }

    let det = (rows == cols).then(|| {
        if rank < rows {
            Rational::zero()
        } else {
            let d = &a[rows - 1][cols - 1] * BigInt::from(sign);
            Rational::new(d, scale.clone())
        }
    });
    (rank, det)
}

/// Rank over ℚ by fraction-free elimination.
pub fn rank(m: &QMatrix) -> usize {
    bareiss(m).0
}

/// Determinant of a square matrix. Panics when `m` is not square.
pub fn determinant(m: &QMatrix) -> Rational {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    if m.rows == 0 {
        return Rational::one();
    }
    bareiss(m).1.expect("square")
}

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec(Vec<(usize, Rational)>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(Vec::new())
    }

    /// Builds from unordered `(index, value)` pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, x) in pairs {
            if x.is_zero() {
                continue;
            }
            *map.entry(i).or_insert_with(Rational::zero) += x;
        }
        SparseVec(map.into_iter().filter(|(_, x)| !x.is_zero()).collect())
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        SparseVec(
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        )
    }

    pub fn to_dense(&self, n: usize) -> QVector {
        let mut v = zero_vec(n);
        for (i, x) in &self.0 {
            v[*i] = x.clone();
        }
        v
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Rational)> {
        self.0.iter()
    }

    pub fn leading(&self) -> Option<usize> {
        self.0.first().map(|(i, _)| *i)
    }

    pub fn get(&self, idx: usize) -> Rational {
        match self.0.binary_search_by_key(&idx, |(i, _)| *i) {
            Ok(p) => self.0[p].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn scaled(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec(self.0.iter().map(|(i, x)| (*i, x * c)).collect())
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, c: &Rational, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_empty() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, xa)), Some((ib, xb))) => {
                    if ia < ib {
                        out.push((*ia, xa.clone()));
                        a.next();
                    } else if ib < ia {
                        out.push((*ib, c * xb));
                        b.next();
                    } else {
                        let s = xa + c * xb;
                        if !s.is_zero() {
                            out.push((*ia, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, xa)), None) => {
                    out.push((*ia, xa.clone()));
                    a.next();
                }
                (None, Some((ib, xb))) => {
                    out.push((*ib, c * xb));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec(out)
    }

    pub fn dot(&self, v: &[Rational]) -> Rational {
        self.0
            .iter()
            .filter(|(i, _)| !v[*i].is_zero())
            .fold(Rational::zero(), |acc, (i, x)| acc + x * &v[*i])
    }

    /// Appends `(idx, x)`; `idx` must exceed every stored index.
    pub fn push(&mut self, idx: usize, x: Rational) {
        debug_assert!(self.0.last().is_none_or(|(i, _)| *i < idx));
        if !x.is_zero() {
            self.0.push((idx, x));
        }
    }
}

/// Incremental row echelon form over ℚ with sparse rows.
///
/// Every stored row has a leading 1 at its pivot column and no two rows share
/// a pivot. Rows are not back-substituted until [`RowEchelon::rref`].
#[derive(Clone, Debug)]
pub struct RowEchelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl RowEchelon {
    pub fn new(ncols: usize) -> Self {
        RowEchelon {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Reduces `v` against the stored rows, starting at position `from`.
    fn reduce_from(&self, mut v: SparseVec, mut pos: usize) -> SparseVec {
        while pos < v.0.len() {
            let (idx, coeff) = &v.0[pos];
            match self.rows.get(idx) {
                Some(row) => {
                    let c = -coeff.clone();
                    v = v.add_scaled(&c, row);
                }
                None => pos += 1,
            }
        }
        v
    }

    /// Remainder of `v` after elimination against the stored pivots.
    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        self.reduce_from(v, 0)
    }

    /// Whether `v` lies in the row span.
    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Inserts a row; returns true when it increased the rank.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        match r.0.first() {
            None => false,
            Some((lead, c)) => {
                let lead = *lead;
                let inv = c.recip();
                self.rows.insert(lead, r.scaled(&inv));
                true
            }
        }
    }

    pub fn insert_dense(&mut self, v: &[Rational]) -> bool {
        self.insert(SparseVec::from_dense(v))
    }

    /// Reduced row echelon rows, ordered by pivot column.
    pub fn rref(&self) -> Vec<(usize, SparseVec)> {
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut r = row.clone();
            let mut pos = 1;
            while pos < r.0.len() {
                let (idx, coeff) = &r.0[pos];
                match done.get(idx) {
                    Some(q) => {
                        let c = -coeff.clone();
                        r = r.add_scaled(&c, q);
                    }
                    None => pos += 1,
                }
            }
            done.insert(p, r);
        }
        done.into_iter().collect()
    }

    /// Canonical nullspace basis of the stored rows: one vector per free
    /// column `f`, with a 1 at `f`, zeros at the other free columns.
    pub fn nullspace(&self) -> Vec<QVector> {
        let rref = self.rref();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.is_pivot(*c)).collect();
        let slot: BTreeMap<usize, usize> = free.iter().enumerate().map(|(k, f)| (*f, k)).collect();
        let mut basis: Vec<QVector> = free.iter().map(|&f| unit_vec(self.ncols, f)).collect();
        for (p, row) in &rref {
            for (idx, x) in row.iter().skip(1) {
                if let Some(&k) = slot.get(idx) {
                    basis[k][*p] = -x.clone();
                }
            }
        }
        basis
    }

    /// Canonical basis of the row span (the nonzero RREF rows).
    pub fn basis(&self) -> Vec<QVector> {
        self.rref()
            .into_iter()
            .map(|(_, r)| r.to_dense(self.ncols))
            .collect()
    }
}

/// Canonical nullspace basis of `m`.
pub fn nullspace(m: &QMatrix) -> Vec<QVector> {
    let mut e = RowEchelon::new(m.cols);
    for i in 0..m.rows {
        e.insert_dense(m.row(i));
    }
    e.nullspace()
}

/// Solves `A x = b` for sparse rows of `A`; the solution has zeros at every
/// free column.
pub fn solve_sparse(rows: &[SparseVec], ncols: usize, b: &[Rational]) -> Result<QVector, LinAlgError> {
    if rows.len() != b.len() {
        return Err(LinAlgError::DimensionMismatch {
            expected: rows.len(),
            got: b.len(),
        });
    }
    // The augmented column sits at index `ncols`; a pivot there means inconsistency.
    let mut e = RowEchelon::new(ncols + 1);
    for (r, bi) in rows.iter().zip(b) {
        let mut aug = r.clone();
        aug.push(ncols, bi.clone());
        e.insert(aug);
    }
    if e.is_pivot(ncols) {
        return Err(LinAlgError::NoSolution);
    }
    let mut x = zero_vec(ncols);
    for (p, row) in e.rref() {
        x[p] = row.get(ncols);
    }
    Ok(x)
}

/// One particular solution of `m x = b`, free variables set to zero.
pub fn solve(m: &QMatrix, b: &[Rational]) -> Result<QVector, LinAlgError> {
    let rows: Vec<SparseVec> = (0..m.rows).map(|i| SparseVec::from_dense(m.row(i))).collect();
    solve_sparse(&rows, m.cols, b)
}

/// Canonical (RREF) basis of the span of `vectors`.
pub fn span_basis(vectors: &[QVector], dim: usize) -> Vec<QVector> {
    let mut e = RowEchelon::new(dim);
    for v in vectors {
        e.insert_dense(v);
    }
    e.basis()
}

/// Canonical basis of `span(a) ∩ span(b)`.
pub fn intersect(a: &[QVector], b: &[QVector]) -> Vec<QVector> {
    let dim = match a.first().or(b.first()) {
        Some(v) => v.len(),
        None => return Vec::new(),
    };
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Kernel of [A | -B] (vectors as columns) yields coefficient pairs.
    let na = a.len();
    let mut e = RowEchelon::new(na + b.len());
    for i in 0..dim {
        let pairs = a
            .iter()
            .enumerate()
            .map(|(k, v)| (k, v[i].clone()))
            .chain(b.iter().enumerate().map(|(k, v)| (na + k, -v[i].clone())));
        e.insert(SparseVec::from_pairs(pairs));
    }
    let combos: Vec<QVector> = e
        .nullspace()
        .into_iter()
        .map(|coeffs| {
            let mut v = zero_vec(dim);
            for (k, c) in coeffs[..na].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (vi, ai) in v.iter_mut().zip(&a[k]) {
                    *vi += c * ai;
                }
            }
            v
        })
        .collect();
    span_basis(&combos, dim)
}

/// Formats a rational vector as `(a, b, c)`.
pub fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Smallest positive integer multiple of `v` with coprime integer entries,
/// sign fixed so the first nonzero entry is positive.
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let ints = integer_row(v);
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let neg = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    ints.into_iter()
        .map(|x| if neg { -(x / &g) } else { x / &g })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_i64(rows)
    }

    fn v(xs: &[i64]) -> QVector {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&QMatrix::zeros(3, 3)), 0);
        assert_eq!(rank(&QMatrix::identity(3)), 3);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4], &[1, 1]])), 2);
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace(&QMatrix::identity(4)).is_empty());
        assert_eq!(nullspace(&QMatrix::zeros(2, 3)).len(), 3);
        assert_eq!(nullspace(&m(&[&[1, 1, 0], &[0, 0, 1]])), vec![v(&[-1, 1, 0])]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![ratio(3, 7), rat(-2), rat(5)];
        assert_eq!(solve(&QMatrix::identity(3), &b).unwrap(), b);
        assert_eq!(
            solve(&m(&[&[1, 0], &[0, 0]]), &v(&[0, 1])),
            Err(LinAlgError::NoSolution)
        );
        assert_eq!(
            solve(&m(&[&[2, 0], &[0, 3]]), &v(&[1, 1])).unwrap(),
            vec![ratio(1, 2), ratio(1, 3)]
        );
    }

    #[test]
    fn solve_sets_free_variables_to_zero() {
        let x = solve(&m(&[&[1, 1, 1]]), &v(&[6])).unwrap();
        assert_eq!(x, v(&[6, 0, 0]));
    }

    #[test]
    fn intersect_examples() {
        let e1 = v(&[1, 0, 0]);
        let e2 = v(&[0, 1, 0]);
        let e3 = v(&[0, 0, 1]);
        assert_eq!(intersect(&[e1.clone()], &[e1.clone()]), vec![e1.clone()]);
        assert!(intersect(&[e1.clone()], &[e2.clone()]).is_empty());
        assert_eq!(
            intersect(&[e1, e2], &[v(&[1, 1, 0]), e3]),
            vec![v(&[1, 1, 0])]
        );
    }

    #[test]
    fn determinant_handles_fractions_and_swaps() {
        let a = QMatrix::from_rows(vec![
            vec![rat(0), ratio(1, 2)],
            vec![rat(3), rat(1)],
        ])
        .unwrap();
        assert_eq!(determinant(&a), ratio(-3, 2));
        assert_eq!(determinant(&m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])), rat(4));
    }

    #[test]
    fn rref_is_insertion_order_independent() {
        let rows = [v(&[1, 2, 3, 4]), v(&[2, 4, 7, 1]), v(&[0, 0, 1, 5])];
        let mut a = RowEchelon::new(4);
        let mut b = RowEchelon::new(4);
        for r in &rows {
            a.insert_dense(r);
        }
        for r in rows.iter().rev() {
            b.insert_dense(r);
        }
        assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn primitive_integer_normalizes() {
        let p = primitive_integer(&[ratio(-1, 2), ratio(3, 4), rat(0)]);
        assert_eq!(p, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix() -> impl Strategy<Value = QMatrix> {
            (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
                proptest::collection::vec(-3i64..4, r * c).prop_map(move |xs| {
                    let rows = xs.chunks(c).map(|ch| ch.iter().map(|&x| rat(x)).collect()).collect();
                    QMatrix::from_rows(rows).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn rank_nullity(a in small_matrix()) {
                let ns = nullspace(&a);
                prop_assert_eq!(rank(&a) + ns.len(), a.cols());
                for v in &ns {
                    prop_assert!(is_zero_vec(&a.mul_vec(v)));
                }
            }

            #[test]
            fn solve_round_trips(a in small_matrix(), seed in proptest::collection::vec(-3i64..4, 6)) {
                let x0: QVector = seed.iter().take(a.cols()).map(|&s| rat(s)).chain(std::iter::repeat(rat(0))).take(a.cols()).collect();
                let b = a.mul_vec(&x0);
                let x = solve(&a, &b).unwrap();
                prop_assert_eq!(a.mul_vec(&x), b);
            }

            #[test]
            fn intersect_is_symmetric(a in small_matrix(), b in small_matrix()) {
                let n = a.cols().min(b.cols());
                let va: Vec<QVector> = a.to_row_vecs().into_iter().map(|r| r[..n].to_vec()).collect();
                let vb: Vec<QVector> = b.to_row_vecs().into_iter().map(|r| r[..n].to_vec()).collect();
                prop_assert_eq!(intersect(&va, &vb), intersect(&vb, &va));
            }
        }
    }
}

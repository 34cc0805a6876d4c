//! Lie algebras given by rational structure constants.
//!
//! Indices are 0-based in the API and 1-based in every human-facing string
//! (relation files, error messages, reports), matching the usual `x₁, …, xₙ`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactla::{
    self, is_zero_vec, rat, unit_vec, zero_vec, QMatrix, QVector, Rational, RowEchelon, SparseVec,
};

/// A failed Jacobi triple `i < j < k` with the nonzero cyclic sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub defect: QVector,
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "triple ({},{},{}) has cyclic sum {}",
            self.i + 1,
            self.j + 1,
            self.k + 1,
            exactla::fmt_vec(&self.defect)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket [{},{}] given twice", .0 + 1, .1 + 1)]
    DuplicateBracket(usize, usize),
    #[error("bracket [{i},{i}] of a basis vector with itself", i = .0 + 1)]
    SelfBracket(usize),
    #[error("Jacobi identity fails: {0}")]
    Jacobi(JacobiViolation),
    #[error("not an ideal: [x{}, h{}] leaves the subspace", .basis_index + 1, .vector_index + 1)]
    NotAnIdeal { basis_index: usize, vector_index: usize },
    #[error("not a derivation: fails on the pair (x{}, x{})", .i + 1, .j + 1)]
    NotADerivation { i: usize, j: usize },
    #[error("span of the chosen basis vectors is not closed: [x{}, x{}] leaves it", .i + 1, .j + 1)]
    NotClosed { i: usize, j: usize },
    #[error("new basis is not invertible")]
    SingularBasis,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Finite-dimensional Lie algebra over ℚ with basis `x₁, …, xₙ`.
///
/// Only brackets `[xᵢ, xⱼ]` with `i < j` are stored; the rest follow by
/// antisymmetry. Every public constructor verifies the Jacobi identity.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    name: Option<String>,
    brackets: BTreeMap<(usize, usize), SparseVec>,
    // Full antisymmetric table, row-major, for fast lookups.
    table: Vec<SparseVec>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.brackets == other.brackets
    }
}

impl LieAlgebra {
    fn build(dim: usize, brackets: BTreeMap<(usize, usize), SparseVec>) -> Self {
        let mut table = vec![SparseVec::new(); dim * dim];
        for (&(i, j), v) in &brackets {
            table[i * dim + j] = v.clone();
            table[j * dim + i] = v.scaled(&-Rational::one());
        }
        LieAlgebra {
            dim,
            name: None,
            brackets,
            table,
        }
    }

    /// Builds an algebra from brackets `[xᵢ, xⱼ] = v`. Pairs with `i > j` are
    /// flipped with a sign change; unlisted pairs bracket to zero.
    pub fn new<I>(dim: usize, brackets: I) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = ((usize, usize), SparseVec)>,
    {
        let mut map = BTreeMap::new();
        for ((i, j), v) in brackets {
            for idx in [i, j].into_iter().chain(v.iter().map(|(k, _)| *k)) {
                if idx >= dim {
                    return Err(LieError::IndexOutOfRange { index: idx + 1, dim });
                }
            }
            if i == j {
                return Err(LieError::SelfBracket(i));
            }
            let (key, v) = if i < j {
                ((i, j), v)
            } else {
                ((j, i), v.scaled(&-Rational::one()))
            };
            if map.contains_key(&key) {
                return Err(LieError::DuplicateBracket(key.0, key.1));
            }
            if !v.is_empty() {
                map.insert(key, v);
            }
        }
        let alg = Self::build(dim, map);
        match alg.check_jacobi() {
            Some(w) => Err(LieError::Jacobi(w)),
            None => Ok(alg),
        }
    }

    /// Convenience constructor from integer relations `(i, j, [(k, c)])`,
    /// 1-based, as in relation files.
    pub fn from_int_relations(dim: usize, rels: &[(usize, usize, &[(usize, i64)])]) -> Result<Self, LieError> {
        let mut out = Vec::with_capacity(rels.len());
        for &(i, j, terms) in rels {
            for idx in [i, j].into_iter().chain(terms.iter().map(|t| t.0)) {
                if idx == 0 || idx > dim {
                    return Err(LieError::IndexOutOfRange { index: idx, dim });
                }
            }
            let v = SparseVec::from_pairs(terms.iter().map(|&(k, c)| (k - 1, rat(c))));
            out.push(((i - 1, j - 1), v));
        }
        Self::new(dim, out)
    }

    pub fn abelian(dim: usize) -> Self {
        Self::build(dim, BTreeMap::new())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Nonzero brackets `[xᵢ, xⱼ]`, `i < j`.
    pub fn brackets(&self) -> impl Iterator<Item = (&(usize, usize), &SparseVec)> {
        self.brackets.iter()
    }

    /// `[xᵢ, xⱼ]` for any `i, j`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    /// Structure constant `cᵏᵢⱼ`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket_basis(i, j).get(k)
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> QVector {
        let mut out = zero_vec(self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() || i == j {
                    continue;
                }
                let c = ui * vj;
                for (k, x) in self.bracket_basis(i, j).iter() {
                    out[*k] += &c * x;
                }
            }
        }
        out
    }

    /// `[xᵢ, v]` for a coordinate vector `v`.
    pub fn bracket_with_basis(&self, i: usize, v: &[Rational]) -> QVector {
        let mut out = zero_vec(self.dim);
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() || i == j {
                continue;
            }
            for (k, x) in self.bracket_basis(i, j).iter() {
                out[*k] += vj * x;
            }
        }
        out
    }

    /// `[x, xⱼ]` for a coordinate vector `x`.
    pub fn bracket_with_basis_left(&self, x: &[Rational], j: usize) -> QVector {
        let mut out = self.bracket_with_basis(j, x);
        for c in out.iter_mut() {
            *c = -c.clone();
        }
        out
    }

    /// Matrix of `ad(x)`; column `j` holds `[x, xⱼ]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket(x, &unit_vec(self.dim, j));
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> QVector {
        let n = self.dim;
        let mut out = zero_vec(n);
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (m, x) in self.bracket_basis(b, c).iter() {
                for (l, y) in self.bracket_basis(a, *m).iter() {
                    out[*l] += x * y;
                }
            }
        }
        out
    }

    /// First triple `i < j < k` (lexicographic) whose cyclic Jacobi sum is
    /// nonzero, or `None` when the identity holds.
    pub fn check_jacobi(&self) -> Option<JacobiViolation> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let defect = self.jacobi_defect(i, j, k);
                    if !is_zero_vec(&defect) {
                        return Some(JacobiViolation { i, j, k, defect });
                    }
                }
            }
        }
        None
    }

    /// `C²g = [g, g]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let vs: Vec<QVector> = self.brackets.values().map(|v| v.to_dense(self.dim)).collect();
        Subspace::new(self.dim, &vs)
    }

    /// Center: all `z` with `[xⱼ, z] = 0` for every `j`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut e = RowEchelon::new(n);
        // Unknown z; equation for each (j, k): Σ_i z_i c^k_{j i} = 0.
        for j in 0..n {
            let mut rows: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
            for i in 0..n {
                for (k, c) in self.bracket_basis(j, i).iter() {
                    rows.entry(*k).or_default().push((i, c.clone()));
                }
            }
            for (_, r) in rows {
                e.insert(SparseVec::from_pairs(r));
            }
        }
        Subspace::new(n, &e.nullspace())
    }

    /// `[g, S]` for a subspace `S`.
    pub fn bracket_with_subspace(&self, s: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for i in 0..self.dim {
            for v in s.basis() {
                let w = self.bracket_with_basis(i, v);
                if !is_zero_vec(&w) {
                    vs.push(w);
                }
            }
        }
        Subspace::new(self.dim, &vs)
    }

    /// `C¹g = g ⊇ C²g ⊇ …`, stopping once the series is stationary. The last
    /// entry is zero exactly when the algebra is nilpotent.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let next = self.bracket_with_subspace(series.last().expect("nonempty"));
            if next.dim() == series.last().expect("nonempty").dim() {
                break;
            }
            let done = next.dim() == 0;
            series.push(next);
            if done {
                break;
            }
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(|s| s.dim() == 0)
    }

    /// Checks `[g, h] ⊆ h`; on failure names the offending basis vector and
    /// subspace basis vector.
    pub fn check_ideal(&self, h: &Subspace) -> Result<(), LieError> {
        for i in 0..self.dim {
            for (vi, v) in h.basis().iter().enumerate() {
                if !h.contains(&self.bracket_with_basis(i, v)) {
                    return Err(LieError::NotAnIdeal {
                        basis_index: i,
                        vector_index: vi,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_ideal(&self, h: &Subspace) -> bool {
        self.check_ideal(h).is_ok()
    }

    /// Block-diagonal product; `other` occupies indices `dim(self)..`.
    pub fn direct_product(&self, other: &LieAlgebra) -> LieAlgebra {
        let off = self.dim;
        let mut map = self.brackets.clone();
        for (&(i, j), v) in &other.brackets {
            let shifted = SparseVec::from_pairs(v.iter().map(|(k, x)| (k + off, x.clone())));
            map.insert((i + off, j + off), shifted);
        }
        Self::build(self.dim + other.dim, map)
    }

    /// Indices of basis vectors spanning a complement of `h`: the non-pivot
    /// columns of its echelon basis.
    pub fn quotient_complement(&self, h: &Subspace) -> Vec<usize> {
        let pivots = h.pivots();
        (0..self.dim).filter(|c| !pivots.contains(c)).collect()
    }

    /// `g/h` on the complement basis of [`LieAlgebra::quotient_complement`].
    pub fn quotient(&self, h: &Subspace) -> Result<LieAlgebra, LieError> {
        self.check_ideal(h)?;
        let comp = self.quotient_complement(h);
        let slot: BTreeMap<usize, usize> = comp.iter().enumerate().map(|(a, &c)| (c, a)).collect();
        let mut rels = Vec::new();
        for (a, &ca) in comp.iter().enumerate() {
            for (b, &cb) in comp.iter().enumerate().skip(a + 1) {
                let r = h.reduce(&self.bracket_basis(ca, cb).to_dense(self.dim));
                let v = SparseVec::from_pairs(
                    r.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(k, x)| (slot[&k], x.clone())),
                );
                rels.push(((a, b), v));
            }
        }
        Self::new(comp.len(), rels)
    }

    /// Subalgebra spanned by the given basis vectors, re-indexed in the given
    /// order. Fails when the span is not closed under the bracket.
    pub fn basis_subalgebra(&self, indices: &[usize]) -> Result<LieAlgebra, LieError> {
        let slot: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(a, &c)| (c, a)).collect();
        let mut rels = Vec::new();
        for (a, &ia) in indices.iter().enumerate() {
            for (b, &ib) in indices.iter().enumerate().skip(a + 1) {
                let mut pairs = Vec::new();
                for (k, x) in self.bracket_basis(ia, ib).iter() {
                    match slot.get(k) {
                        Some(&s) => pairs.push((s, x.clone())),
                        None => return Err(LieError::NotClosed { i: ia, j: ib }),
                    }
                }
                rels.push(((a, b), SparseVec::from_pairs(pairs)));
            }
        }
        Self::new(indices.len(), rels)
    }

    /// The same algebra in the basis `y_a = Σ_i new_basis[a][i] xᵢ`.
    pub fn change_basis(&self, new_basis: &[QVector]) -> Result<LieAlgebra, LieError> {
        let n = self.dim;
        if new_basis.len() != n || new_basis.iter().any(|v| v.len() != n) {
            return Err(LieError::DimensionMismatch {
                expected: n,
                got: new_basis.len(),
            });
        }
        let p = QMatrix::from_columns(new_basis, n);
        if exactla::rank(&p) != n {
            return Err(LieError::SingularBasis);
        }
        let rows: Vec<SparseVec> = (0..n).map(|i| SparseVec::from_dense(p.row(i))).collect();
        let mut rels = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let w = self.bracket(&new_basis[a], &new_basis[b]);
                if is_zero_vec(&w) {
                    continue;
                }
                let coords = exactla::solve_sparse(&rows, n, &w).map_err(|_| LieError::SingularBasis)?;
                rels.push(((a, b), SparseVec::from_dense(&coords)));
            }
        }
        Self::new(n, rels)
    }

    /// Relabels the basis: new basis vector `a` is old `perm[a]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<LieAlgebra, LieError> {
        let basis: Vec<QVector> = perm.iter().map(|&p| unit_vec(self.dim, p)).collect();
        self.change_basis(&basis)
    }

    /// First basis pair on which `d` fails the derivation rule.
    pub fn derivation_defect(&self, d: &QMatrix) -> Option<(usize, usize)> {
        let n = self.dim;
        let cols: Vec<QVector> = (0..n).map(|j| d.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(&self.bracket_basis(i, j).to_dense(n));
                let r1 = self.bracket(&cols[i], &unit_vec(n, j));
                let r2 = self.bracket_with_basis(i, &cols[j]);
                let ok = lhs
                    .iter()
                    .zip(r1.iter().zip(&r2))
                    .all(|(l, (a, b))| *l == a + b);
                if !ok {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_derivation(&self, d: &QMatrix) -> bool {
        d.rows() == self.dim && d.cols() == self.dim && self.derivation_defect(d).is_none()
    }

    /// Basis of `Der g`. Matrix entry `(k, i)` is the `xₖ`-coordinate of `D xᵢ`.
    pub fn derivations(&self) -> DerivationSpace {
        let n = self.dim;
        let var = |k: usize, i: usize| k * n + i;
        let mut e = RowEchelon::new(n * n);
        for i in 0..n {
            for j in i + 1..n {
                // (D[xi,xj])_k − ([D xi, xj])_k − ([xi, D xj])_k = 0 for each k.
                let mut rows: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
                for (m, c) in self.bracket_basis(i, j).iter() {
                    for k in 0..n {
                        rows.entry(k).or_default().push((var(k, *m), c.clone()));
                    }
                }
                for m in 0..n {
                    for (k, c) in self.bracket_basis(m, j).iter() {
                        rows.entry(*k).or_default().push((var(m, i), -c.clone()));
                    }
                    for (k, c) in self.bracket_basis(i, m).iter() {
                        rows.entry(*k).or_default().push((var(m, j), -c.clone()));
                    }
                }
                for (_, r) in rows {
                    e.insert(SparseVec::from_pairs(r));
                }
            }
        }
        let basis = e
            .nullspace()
            .into_iter()
            .map(|v| {
                let rows = v.chunks(n).map(<[Rational]>::to_vec).collect();
                QMatrix::from_rows(rows).expect("square")
            })
            .collect();
        DerivationSpace { dim: n, basis }
    }

    /// `dim ad(g) = n − dim c`.
    pub fn inner_derivation_dim(&self) -> usize {
        self.dim - self.center().dim()
    }

    /// Weights `w` with `w_k = w_i + w_j` whenever `xₖ` occurs in `[xᵢ, xⱼ]`:
    /// the derivations that are diagonal in this basis. Each returned vector
    /// lists the diagonal entries.
    pub fn diagonal_derivations(&self) -> Vec<QVector> {
        let n = self.dim;
        let mut e = RowEchelon::new(n);
        for (&(i, j), v) in &self.brackets {
            for (k, _) in v.iter() {
                e.insert(SparseVec::from_pairs([
                    (*k, Rational::one()),
                    (i, -Rational::one()),
                    (j, -Rational::one()),
                ]));
            }
        }
        e.nullspace()
    }

    /// `ℂτ ⊕ g` with `[x_{n+1}, xᵢ] = τ xᵢ`. The new basis vector is last.
    pub fn adjoin_derivation(&self, d: &QMatrix) -> Result<LieAlgebra, LieError> {
        let n = self.dim;
        if d.rows() != n || d.cols() != n {
            return Err(LieError::DimensionMismatch {
                expected: n,
                got: d.rows(),
            });
        }
        if let Some((i, j)) = self.derivation_defect(d) {
            return Err(LieError::NotADerivation { i, j });
        }
        let mut rels: Vec<((usize, usize), SparseVec)> =
            self.brackets.iter().map(|(k, v)| (*k, v.clone())).collect();
        for i in 0..n {
            rels.push(((n, i), SparseVec::from_dense(&d.column(i))));
        }
        Self::new(n + 1, rels)
    }

    /// `t ⋉ g` for commuting derivations `t = span(D₁, …, D_r)`; the torus
    /// basis `H₁, …, H_r` comes first, so `xᵢ` becomes index `r + i`.
    pub fn extend_by_derivations(&self, ds: &[QMatrix]) -> Result<LieAlgebra, LieError> {
        let n = self.dim;
        let r = ds.len();
        for d in ds {
            if let Some((i, j)) = self.derivation_defect(d) {
                return Err(LieError::NotADerivation { i, j });
            }
        }
        let mut rels = Vec::new();
        for (&(i, j), v) in &self.brackets {
            rels.push(((i + r, j + r), SparseVec::from_pairs(v.iter().map(|(k, x)| (k + r, x.clone())))));
        }
        for (a, d) in ds.iter().enumerate() {
            for i in 0..n {
                let col = d.column(i);
                let v = SparseVec::from_pairs(col.into_iter().enumerate().map(|(k, x)| (k + r, x)));
                rels.push(((a, i + r), v));
            }
        }
        Self::new(n + r, rels)
    }

    /// Serializes in the relation-file grammar.
    pub fn to_relations_text(&self) -> String {
        let mut s = String::new();
        if let Some(name) = &self.name {
            s.push_str(&format!("name {name}\n"));
        }
        s.push_str(&format!("dim {}\n", self.dim));
        for (&(i, j), v) in &self.brackets {
            s.push_str(&format!("[{},{}] = {}\n", i + 1, j + 1, format_terms(v)));
        }
        s
    }

    /// Parses the relation-file grammar: `#` comments, `dim <n>`, optional
    /// `name <string>`, and bracket lines `[i,j] = <term> (± <term>)*` with
    /// `term := [<p>[/<q>] '*'] <k>`. Lines may also be separated by `;`.
    pub fn from_relations(source: &str) -> Result<LieAlgebra, LieError> {
        let mut dim: Option<usize> = None;
        let mut name = None;
        let mut rels: Vec<((usize, usize), SparseVec)> = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for (lineno, raw) in source.lines().enumerate() {
            let line_no = lineno + 1;
            let err = |msg: String| LieError::Parse { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("");
            for stmt in line.split(';') {
                let stmt = stmt.trim();
                if stmt.is_empty() {
                    continue;
                }
                if let Some(rest) = stmt.strip_prefix("dim") {
                    if dim.is_some() {
                        return Err(err("duplicate dim header".into()));
                    }
                    let n = rest
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| err(format!("bad dimension '{}'", rest.trim())))?;
                    dim = Some(n);
                } else if let Some(rest) = stmt.strip_prefix("name") {
                    name = Some(rest.trim().to_string());
                } else if stmt.starts_with('[') {
                    let n = dim.ok_or_else(|| err("bracket before dim header".into()))?;
                    let (i, j, v) = parse_bracket_line(stmt, n).map_err(err)?;
                    if i == j {
                        return Err(err(format!("bracket [{},{}] of a vector with itself", i + 1, j + 1)));
                    }
                    if i > j {
                        return Err(err(format!("bracket [{},{}] must have i < j", i + 1, j + 1)));
                    }
                    if !seen.insert((i, j)) {
                        return Err(err(format!("duplicate bracket [{},{}]", i + 1, j + 1)));
                    }
                    rels.push(((i, j), v));
                } else {
                    return Err(err(format!("unrecognized statement '{stmt}'")));
                }
            }
        }
        let n = dim.ok_or(LieError::Parse {
            line: 0,
            msg: "missing dim header".into(),
        })?;
        let alg = Self::new(n, rels)?;
        Ok(match name {
            Some(s) => alg.with_name(s),
            None => alg,
        })
    }
}

fn parse_index(s: &str, dim: usize) -> Result<usize, String> {
    let k: usize = s.trim().parse().map_err(|_| format!("bad index '{}'", s.trim()))?;
    if k == 0 || k > dim {
        return Err(format!("index {k} out of range 1..={dim}"));
    }
    Ok(k - 1)
}

fn parse_coefficient(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<num_bigint::BigInt>()
            .map_err(|_| format!("bad coefficient '{s}'"))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(format!("zero denominator in '{s}'"));
            }
            Ok(Rational::new(parse_int(p)?, q))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

fn parse_bracket_line(stmt: &str, dim: usize) -> Result<(usize, usize, SparseVec), String> {
    let close = stmt.find(']').ok_or("missing ']'")?;
    let inner = &stmt[1..close];
    let (a, b) = inner.split_once(',').ok_or("bracket needs two indices")?;
    let i = parse_index(a, dim)?;
    let j = parse_index(b, dim)?;
    let rhs = stmt[close + 1..].trim();
    let rhs = rhs.strip_prefix('=').ok_or("missing '='")?.trim();
    if rhs.is_empty() {
        return Err("empty right-hand side".into());
    }
    // Split into signed terms.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut negative = false;
    let mut cur = String::new();
    for ch in rhs.chars() {
        match ch {
            '+' | '-' if !cur.trim().is_empty() => {
                terms.push((negative, std::mem::take(&mut cur)));
                negative = ch == '-';
            }
            '+' => {}
            '-' => negative = !negative,
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    if cur.trim().is_empty() {
        return Err("dangling sign".into());
    }
    terms.push((negative, cur));
    let mut pairs = Vec::new();
    for (neg, t) in terms {
        let (coeff, idx) = match t.split_once('*') {
            Some((c, k)) => (parse_coefficient(c)?, k),
            None => (Rational::one(), t.as_str()),
        };
        let k = parse_index(idx, dim)?;
        pairs.push((k, if neg { -coeff } else { coeff }));
    }
    Ok((i, j, SparseVec::from_pairs(pairs)))
}

fn format_terms(v: &SparseVec) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (pos, (k, x)) in v.iter().enumerate() {
        let neg = *x < Rational::zero();
        let mag = if neg { -x.clone() } else { x.clone() };
        if pos == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if mag.is_one() {
            s.push_str(&format!("{}", k + 1));
        } else {
            s.push_str(&format!("{}*{}", mag, k + 1));
        }
    }
    s
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_relations_text())
    }
}

/// Subspace of `ℚⁿ` stored as a canonical (reduced echelon) basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<QVector>,
}

impl Subspace {
    pub fn new(ambient: usize, vectors: &[QVector]) -> Self {
        Subspace {
            ambient,
            basis: exactla::span_basis(vectors, ambient),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let vs: Vec<QVector> = (0..ambient).map(|i| unit_vec(ambient, i)).collect();
        Subspace { ambient, basis: vs }
    }

    /// Span of the basis vectors `x_i`, `i ∈ indices`.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vs: Vec<QVector> = indices.iter().map(|&i| unit_vec(ambient, i)).collect();
        Self::new(ambient, &vs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QVector] {
        &self.basis
    }

    fn echelon(&self) -> RowEchelon {
        let mut e = RowEchelon::new(self.ambient);
        for v in &self.basis {
            e.insert_dense(v);
        }
        e
    }

    /// Pivot column of each basis vector.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|v| v.iter().position(|x| !x.is_zero()).expect("nonzero basis vector"))
            .collect()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.echelon().contains(&SparseVec::from_dense(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        let e = self.echelon();
        other.basis.iter().all(|v| e.contains(&SparseVec::from_dense(v)))
    }

    /// Remainder of `v` modulo the subspace: pivot coordinates cleared.
    pub fn reduce(&self, v: &[Rational]) -> QVector {
        let mut out = v.to_vec();
        for (b, p) in self.basis.iter().zip(self.pivots()) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o -= &c * x;
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let vs: Vec<QVector> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::new(self.ambient, &vs)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        Subspace {
            ambient: self.ambient,
            basis: exactla::intersect(&self.basis, &other.basis),
        }
    }
}

/// `Der g` as a list of `n×n` matrices.
#[derive(Clone, Debug)]
pub struct DerivationSpace {
    pub dim: usize,
    pub basis: Vec<QMatrix>,
}

impl DerivationSpace {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Whether `d` lies in the span of the basis.
    pub fn contains(&self, d: &QMatrix) -> bool {
        let mut e = RowEchelon::new(self.dim * self.dim);
        for b in &self.basis {
            e.insert_dense(&b.to_vec());
        }
        e.contains(&SparseVec::from_dense(&d.to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g54() -> LieAlgebra {
        LieAlgebra::from_relations("dim 5\n[1,2]=3\n[1,3]=4\n[2,3]=5").unwrap()
    }

    fn v(xs: &[i64]) -> QVector {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn parse_heisenberg_and_abelian() {
        let h3 = LieAlgebra::from_relations("dim 3; [1,2]=3").unwrap();
        assert_eq!(h3.constant(0, 1, 2), rat(1));
        assert_eq!(h3.constant(1, 0, 2), rat(-1));
        let a = LieAlgebra::from_relations("dim 2").unwrap();
        assert!(a.is_abelian());
    }

    #[test]
    fn parse_reports_jacobi_witness() {
        assert!(LieAlgebra::from_relations("dim 3; [1,2]=3; [1,3]=2").is_ok());
        // Symmetric structure matrix in dimension 3: this one is a Lie algebra.
        assert!(LieAlgebra::from_relations("dim 3; [1,2]=1; [1,3]=2; [2,3]=3").is_ok());
        match LieAlgebra::from_relations("dim 3; [1,2]=1; [1,3]=3") {
            Err(LieError::Jacobi(w)) => assert_eq!((w.i, w.j, w.k), (0, 1, 2)),
            other => panic!("expected Jacobi error, got {other:?}"),
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            LieAlgebra::from_relations("dim 3\n[1,4]=2"),
            Err(LieError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            LieAlgebra::from_relations("dim 3\n[1,2]=3\n[1,2]=3"),
            Err(LieError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            LieAlgebra::from_relations("[1,2]=3"),
            Err(LieError::Parse { .. })
        ));
        assert!(matches!(
            LieAlgebra::from_relations("dim 3\n[1,2]=1/0*3"),
            Err(LieError::Parse { .. })
        ));
    }

    #[test]
    fn parse_fractions_and_signs() {
        let src = "# comment\nname test\ndim 4\n[1,2] = -1/2*3 + 2*4\n[1,3] = 4";
        let a = LieAlgebra::from_relations(src).unwrap();
        assert_eq!(a.name(), Some("test"));
        assert_eq!(a.constant(0, 1, 2), ratio(-1, 2));
        assert_eq!(a.constant(0, 1, 3), rat(2));
        let again = LieAlgebra::from_relations(&a.to_relations_text()).unwrap();
        assert_eq!(a, again);
    }

    use crate::exactla::ratio;

    #[test]
    fn center_and_derived() {
        let h3 = LieAlgebra::from_relations("dim 3; [1,2]=3").unwrap();
        assert_eq!(h3.center(), Subspace::coordinate(3, &[2]));
        assert_eq!(h3.derived_subalgebra(), Subspace::coordinate(3, &[2]));
        let g = g54();
        assert_eq!(g.derived_subalgebra(), Subspace::coordinate(5, &[2, 3, 4]));
        assert_eq!(g.center(), Subspace::coordinate(5, &[3, 4]));
    }

    #[test]
    fn lower_central_series_of_filiform4() {
        let f4 = LieAlgebra::from_relations("dim 4; [1,2]=3; [1,3]=4").unwrap();
        let dims: Vec<usize> = f4.lower_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![4, 2, 1, 0]);
        assert!(f4.is_nilpotent());
        let diamond = LieAlgebra::from_relations("dim 4; [1,2]=3; [1,3]=-2; [2,3]=4").unwrap();
        assert!(!diamond.is_nilpotent());
    }

    #[test]
    fn product_and_quotient() {
        let h3 = LieAlgebra::from_relations("dim 3; [1,2]=3").unwrap();
        let p = h3.direct_product(&LieAlgebra::abelian(0));
        assert_eq!(p, h3);
        let q = h3.quotient(&h3.center()).unwrap();
        assert!(q.is_abelian());
        assert_eq!(q.dim(), 2);
        let q = g54().quotient(&Subspace::coordinate(5, &[4])).unwrap();
        let f4 = LieAlgebra::from_relations("dim 4; [1,2]=3; [1,3]=4").unwrap();
        assert_eq!(q, f4);
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let g = g54();
        assert!(matches!(
            g.quotient(&Subspace::coordinate(5, &[0])),
            Err(LieError::NotAnIdeal { .. })
        ));
    }

    #[test]
    fn derivations_of_abelian_and_inner() {
        let a = LieAlgebra::abelian(3);
        assert_eq!(a.derivations().len(), 9);
        let g = g54();
        let der = g.derivations();
        for i in 0..5 {
            assert!(der.contains(&g.ad_matrix(&unit_vec(5, i))));
        }
    }

    #[test]
    fn adjoin_zero_to_abelian() {
        let a = LieAlgebra::abelian(3);
        let b = a.adjoin_derivation(&QMatrix::zeros(3, 3)).unwrap();
        assert_eq!(b, LieAlgebra::abelian(4));
    }

    #[test]
    fn adjoin_rejects_non_derivation() {
        let h3 = LieAlgebra::from_relations("dim 3; [1,2]=3").unwrap();
        let mut d = QMatrix::zeros(3, 3);
        d.set(0, 0, rat(1));
        assert!(matches!(h3.adjoin_derivation(&d), Err(LieError::NotADerivation { .. })));
    }

    #[test]
    fn change_basis_round_trip() {
        let g = g54();
        let basis = vec![v(&[1, 1, 0, 0, 0]), v(&[0, 1, 0, 0, 0]), v(&[0, 0, 1, 0, 1]), v(&[0, 0, 0, 1, 0]), v(&[0, 0, 0, 0, 1])];
        let h = g.change_basis(&basis).unwrap();
        assert!(h.check_jacobi().is_none());
        assert_eq!(h.derived_subalgebra().dim(), 3);
        assert_eq!(g.permuted(&[0, 1, 2, 3, 4]).unwrap(), g);
    }

    #[test]
    fn diagonal_derivations_of_g54() {
        let w = g54().diagonal_derivations();
        assert_eq!(w.len(), 2);
        for d in &w {
            let mut m = QMatrix::zeros(5, 5);
            for (i, x) in d.iter().enumerate() {
                m.set(i, i, x.clone());
            }
            assert!(g54().is_derivation(&m));
        }
    }
}

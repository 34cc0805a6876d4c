//! Root systems of the simple types, property (P), and nilradicals of Borel
//! subalgebras with their root labelling.
//!
//! Roots are stored in ambient coordinates with a diagonal metric: for `E6`
//! the sixth coordinate is the coefficient of `√3 ε₆` (weight 3), for `E7`
//! the seventh is the coefficient of `√2 ε₇` (weight 2). All other
//! coordinates have weight 1.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::exactla::{self, rat, ratio, QMatrix, QVector, Rational, SparseVec};
use crate::gcm::Gcm;
use crate::liealg::{LieAlgebra, LieError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("unknown root system type '{0}'")]
    InvalidType(String),
    #[error("invalid rank {rank} for type {kind}")]
    InvalidRank { kind: char, rank: usize },
    #[error("Γ is not closed: roots #{} + #{} is a positive root outside Γ", .alpha + 1, .beta + 1)]
    GammaNotClosed { alpha: usize, beta: usize },
    #[error("expected {expected} root values, got {got}")]
    ValueShape { expected: usize, got: usize },
    #[error("cannot label basis by roots: {0}")]
    Labeling(String),
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl RootType {
    pub fn letter(self) -> char {
        match self {
            RootType::A => 'A',
            RootType::B => 'B',
            RootType::C => 'C',
            RootType::D => 'D',
            RootType::E => 'E',
            RootType::F => 'F',
            RootType::G => 'G',
        }
    }

    /// Parses names such as `A3`, `E8`, `g2`.
    pub fn parse(name: &str) -> Result<(RootType, usize), RootError> {
        let name = name.trim();
        let mut chars = name.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => RootType::A,
            Some('B') => RootType::B,
            Some('C') => RootType::C,
            Some('D') => RootType::D,
            Some('E') => RootType::E,
            Some('F') => RootType::F,
            Some('G') => RootType::G,
            _ => return Err(RootError::InvalidType(name.to_string())),
        };
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| RootError::InvalidType(name.to_string()))?;
        kind.validate(rank)?;
        Ok((kind, rank))
    }

    pub fn validate(self, rank: usize) -> Result<(), RootError> {
        let ok = match self {
            RootType::A => rank >= 1,
            RootType::B | RootType::C | RootType::D => rank >= 2,
            RootType::E => (6..=8).contains(&rank),
            RootType::F => rank == 4,
            RootType::G => rank == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(RootError::InvalidRank {
                kind: self.letter(),
                rank,
            })
        }
    }
}

/// Positive roots of a simple type in canonical order: height ascending, then
/// simple-root coefficients in descending lexicographic order. The first
/// `rank` roots are the simple roots `α₁, …, α_r` (Bourbaki numbering).
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: RootType,
    rank: usize,
    metric: Vec<Rational>,
    roots: Vec<QVector>,
    coeffs: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

fn amb(dim: usize, terms: &[(usize, i64, i64)]) -> QVector {
    let mut v = vec![Rational::zero(); dim];
    for &(i, p, q) in terms {
        v[i] += ratio(p, q);
    }
    v
}

/// All `ε_i ± ε_j` with `i < j`, both signs.
fn d_roots(n: usize, dim: usize) -> Vec<QVector> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(amb(dim, &[(i, a, 1), (j, b, 1)]));
            }
        }
    }
    out
}

fn half_spin(n: usize, dim: usize, parity: usize, last: (usize, i64, i64)) -> Vec<QVector> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize % 2 == parity)
        .map(|m| {
            let mut t: Vec<(usize, i64, i64)> = (0..n).map(|i| (i, if m >> i & 1 == 1 { -1 } else { 1 }, 2)).collect();
            t.push(last);
            amb(dim, &t)
        })
        .collect()
}

impl RootSystem {
    pub fn new(kind: RootType, rank: usize) -> Result<Self, RootError> {
        kind.validate(rank)?;
        let n = rank;
        let chain = |dim: usize, k: usize| -> Vec<QVector> { (0..k).map(|i| amb(dim, &[(i, 1, 1), (i + 1, -1, 1)])).collect() };
        let ones = |d: usize| vec![Rational::one(); d];
        // (metric, simple roots or None to derive them, candidate roots)
        let (metric, simple, candidates): (Vec<Rational>, Option<Vec<QVector>>, Vec<QVector>) = match kind {
            RootType::A => {
                let d = n + 1;
                let mut c = Vec::new();
                for i in 0..d {
                    for j in 0..d {
                        if i != j {
                            c.push(amb(d, &[(i, 1, 1), (j, -1, 1)]));
                        }
                    }
                }
                (ones(d), Some(chain(d, n)), c)
            }
            RootType::B | RootType::C => {
                let mut s = chain(n, n - 1);
                let long = if kind == RootType::B { 1 } else { 2 };
                s.push(amb(n, &[(n - 1, long, 1)]));
                let mut c = d_roots(n, n);
                for i in 0..n {
                    c.push(amb(n, &[(i, long, 1)]));
                    c.push(amb(n, &[(i, -long, 1)]));
                }
                (ones(n), Some(s), c)
            }
            RootType::D => {
                let mut s = chain(n, n - 1);
                s.push(amb(n, &[(n - 2, 1, 1), (n - 1, 1, 1)]));
                (ones(n), Some(s), d_roots(n, n))
            }
            RootType::F => {
                let s = vec![
                    amb(4, &[(1, 1, 1), (2, -1, 1)]),
                    amb(4, &[(2, 1, 1), (3, -1, 1)]),
                    amb(4, &[(3, 1, 1)]),
                    amb(4, &[(0, 1, 2), (1, -1, 2), (2, -1, 2), (3, -1, 2)]),
                ];
                let mut c = d_roots(4, 4);
                for i in 0..4 {
                    c.push(amb(4, &[(i, 1, 1)]));
                    c.push(amb(4, &[(i, -1, 1)]));
                }
                c.extend(half_spin(4, 4, 0, (0, 0, 1)));
                c.extend(half_spin(4, 4, 1, (0, 0, 1)));
                (ones(4), Some(s), c)
            }
            RootType::G => {
                let s = vec![amb(3, &[(0, 1, 1), (1, -1, 1)]), amb(3, &[(0, -2, 1), (1, 1, 1), (2, 1, 1)])];
                let mut c = Vec::new();
                for i in 0..3 {
                    for j in 0..3 {
                        if i != j {
                            c.push(amb(3, &[(i, 1, 1), (j, -1, 1)]));
                            let k = 3 - i - j;
                            c.push(amb(3, &[(i, 2, 1), (j, -1, 1), (k, -1, 1)]));
                            c.push(amb(3, &[(i, -2, 1), (j, 1, 1), (k, 1, 1)]));
                        }
                    }
                }
                (ones(3), Some(s), c)
            }
            RootType::E => {
                // The positive system itself: ε_i + ε_j and ε_i − ε_j (j < i)
                // over the first m coordinates, plus half-spin roots.
                let (m, dim, metric) = match n {
                    6 => (5, 6, vec![1, 1, 1, 1, 1, 3]),
                    7 => (6, 7, vec![1, 1, 1, 1, 1, 1, 2]),
                    _ => (8, 8, vec![1; 8]),
                };
                let mut c = Vec::new();
                for i in 0..m {
                    for j in 0..i {
                        c.push(amb(dim, &[(i, 1, 1), (j, 1, 1)]));
                        c.push(amb(dim, &[(i, 1, 1), (j, -1, 1)]));
                    }
                }
                match n {
                    6 => c.extend(half_spin(5, 6, 0, (5, 1, 2))),
                    7 => {
                        c.push(amb(7, &[(6, 1, 1)]));
                        c.extend(half_spin(6, 7, 1, (6, 1, 2)));
                    }
                    _ => c.extend(half_spin(7, 8, 0, (7, 1, 2))),
                }
                (metric.into_iter().map(rat).collect(), None, c)
            }
        };
        let simple = match simple {
            Some(s) => s,
            None => e_simple_roots(&metric, &candidates),
        };
        Self::assemble(kind, rank, metric, simple, candidates)
    }

    fn assemble(
        kind: RootType,
        rank: usize,
        metric: Vec<Rational>,
        simple: Vec<QVector>,
        candidates: Vec<QVector>,
    ) -> Result<Self, RootError> {
        let ip = |a: &QVector, b: &QVector| -> Rational { a.iter().zip(b).zip(&metric).map(|((x, y), w)| x * y * w).sum() };
        let r = simple.len();
        let gram = QMatrix::from_rows(simple.iter().map(|a| simple.iter().map(|b| ip(a, b)).collect()).collect())
            .expect("square");
        let mut found: Vec<(Vec<i64>, QVector)> = Vec::new();
        for v in candidates {
            let rhs: QVector = simple.iter().map(|a| ip(a, &v)).collect();
            let c = exactla::solve(&gram, &rhs).expect("simple roots are independent");
            if c.iter().any(|x| !x.is_integer()) {
                return Err(RootError::Labeling(format!("root {} is not in the root lattice", exactla::fmt_vec(&v))));
            }
            if c.iter().all(|x| !x.is_negative()) {
                let ci: Vec<i64> = c.iter().map(|x| i64::try_from(x.to_integer()).expect("small")).collect();
                found.push((ci, v));
            }
        }
        found.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
        });
        found.dedup_by(|a, b| a.0 == b.0);
        let coeffs: Vec<Vec<i64>> = found.iter().map(|f| f.0.clone()).collect();
        let roots: Vec<QVector> = found.into_iter().map(|f| f.1).collect();
        let index = coeffs.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        debug_assert!((0..r).all(|i| coeffs[i].iter().enumerate().all(|(j, &x)| x == i64::from(i == j))));
        Ok(RootSystem {
            kind,
            rank,
            metric,
            roots,
            coeffs,
            index,
        })
    }

    pub fn kind(&self) -> RootType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind.letter(), self.rank)
    }

    pub fn ambient_dim(&self) -> usize {
        self.metric.len()
    }

    /// Metric weights of the ambient coordinates.
    pub fn metric(&self) -> &[Rational] {
        &self.metric
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Ambient coordinates of positive root `i`.
    pub fn root(&self, i: usize) -> &[Rational] {
        &self.roots[i]
    }

    pub fn positive_roots(&self) -> &[QVector] {
        &self.roots
    }

    pub fn simple_roots(&self) -> &[QVector] {
        &self.roots[..self.rank]
    }

    /// Coefficients of root `i` on the simple roots.
    pub fn coefficients(&self, i: usize) -> &[i64] {
        &self.coeffs[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.coeffs[i].iter().sum()
    }

    pub fn find(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// Index of the positive root with the given ambient coordinates.
    pub fn find_ambient(&self, v: &[Rational]) -> Option<usize> {
        self.roots.iter().position(|r| r.as_slice() == v)
    }

    /// Index of `αᵢ + αⱼ` when it is a positive root.
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        let c: Vec<i64> = self.coeffs[i].iter().zip(&self.coeffs[j]).map(|(a, b)| a + b).collect();
        self.find(&c)
    }

    pub fn inner(&self, a: &[Rational], b: &[Rational]) -> Rational {
        a.iter().zip(b).zip(&self.metric).map(|((x, y), w)| x * y * w).sum()
    }

    /// `a_ij = 2(αᵢ,αⱼ)/(αᵢ,αᵢ)`.
    pub fn cartan_matrix(&self) -> Gcm {
        let s = self.simple_roots();
        let rows: Vec<Vec<i64>> = s
            .iter()
            .map(|a| {
                let aa = self.inner(a, a);
                s.iter()
                    .map(|b| {
                        let v = rat(2) * self.inner(a, b) / &aa;
                        i64::try_from(v.to_integer()).expect("small")
                    })
                    .collect()
            })
            .collect();
        Gcm::new(&rows).expect("Cartan matrix")
    }

    /// Table of `αᵢ + αⱼ` lookups.
    fn sum_table(&self) -> Vec<Vec<Option<usize>>> {
        let m = self.len();
        (0..m).map(|i| (0..m).map(|j| self.sum(i, j)).collect()).collect()
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.roots.iter().enumerate() {
            writeln!(f, "{}\t{}\theight {}", i + 1, exactla::fmt_vec(r), self.height(i))?;
        }
        Ok(())
    }
}

/// Simple roots of a simply-laced positive system, numbered as in Bourbaki:
/// the branch node is `α₄`, its arm of length one is `α₂`, the arm of length
/// two is `α₃, α₁`, the remaining arm is `α₅, α₆, …`.
fn e_simple_roots(metric: &[Rational], positive: &[QVector]) -> Vec<QVector> {
    let ip = |a: &QVector, b: &QVector| -> Rational { a.iter().zip(b).zip(metric).map(|((x, y), w)| x * y * w).sum() };
    let add = |a: &QVector, b: &QVector| -> QVector { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    let mut simple: Vec<QVector> = positive
        .iter()
        .filter(|r| {
            !positive
                .iter()
                .any(|a| positive.iter().any(|b| &add(a, b) == *r))
        })
        .cloned()
        .collect();
    simple.sort();
    let adj = |i: usize, j: usize| i != j && !ip(&simple[i], &simple[j]).is_zero();
    let k = simple.len();
    let branch = (0..k).find(|&i| (0..k).filter(|&j| adj(i, j)).count() == 3).expect("branch node");
    let mut arms: Vec<Vec<usize>> = (0..k)
        .filter(|&j| adj(branch, j))
        .map(|start| {
            let mut arm = vec![start];
            let mut prev = branch;
            let mut cur = start;
            while let Some(next) = (0..k).find(|&j| j != prev && adj(cur, j)) {
                arm.push(next);
                prev = cur;
                cur = next;
            }
            arm
        })
        .collect();
    arms.sort_by_key(Vec::len);
    let order = [arms[1][1], arms[0][0], arms[1][0], branch]
        .into_iter()
        .chain(arms[2].iter().copied());
    order.map(|i| simple[i].clone()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PropertyP {
    Holds,
    /// `α+β`, `α+γ` and `β+γ` are all positive roots (indices into the
    /// canonical order).
    Fails { alpha: usize, beta: usize, gamma: usize },
}

/// For α, β, γ ∈ Δ₊: α+β, α+γ ∈ Δ₊ ⇒ β+γ ∉ Δ₊. The witness is the
/// lexicographically first failing triple.
pub fn property_p(rs: &RootSystem) -> PropertyP {
    let m = rs.len();
    let table = rs.sum_table();
    let hit = (0..m).into_par_iter().find_map_first(|a| {
        for b in 0..m {
            if b == a || table[a][b].is_none() {
                continue;
            }
            for c in 0..m {
                if c == a || c == b || table[a][c].is_none() {
                    continue;
                }
                if table[b][c].is_some() {
                    return Some((a, b, c));
                }
            }
        }
        None
    });
    match hit {
        None => PropertyP::Holds,
        Some((alpha, beta, gamma)) => PropertyP::Fails { alpha, beta, gamma },
    }
}

/// Nilradical of a Borel subalgebra with each basis vector `x_i` labelled by a
/// positive root: `[X_α, X_β] = N_{α,β} X_{α+β}`.
#[derive(Clone, Debug)]
pub struct ChevalleyNilradical {
    root_system: RootSystem,
    roots: Vec<usize>,
    basis_of: Vec<usize>,
    algebra: LieAlgebra,
}

impl ChevalleyNilradical {
    fn from_labels(root_system: RootSystem, algebra: LieAlgebra, roots: Vec<usize>) -> Result<Self, RootError> {
        let mut basis_of = vec![usize::MAX; root_system.len()];
        for (b, &r) in roots.iter().enumerate() {
            if basis_of[r] != usize::MAX {
                return Err(RootError::Labeling(format!("root #{} used twice", r + 1)));
            }
            basis_of[r] = b;
        }
        if basis_of.contains(&usize::MAX) || roots.len() != root_system.len() {
            return Err(RootError::Labeling("labelling is not a bijection".into()));
        }
        let nil = ChevalleyNilradical {
            root_system,
            roots,
            basis_of,
            algebra,
        };
        nil.check_root_grading()?;
        Ok(nil)
    }

    fn check_root_grading(&self) -> Result<(), RootError> {
        for (&(i, j), v) in self.algebra.brackets() {
            let target = self.root_system.sum(self.roots[i], self.roots[j]);
            let ok = v.len() == 1 && target == Some(self.roots[v.entries()[0].0]);
            if !ok {
                return Err(RootError::Labeling(format!("[x{},x{}] is not a root vector of the sum", i + 1, j + 1)));
            }
        }
        Ok(())
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> LieAlgebra {
        self.algebra
    }

    /// Root labelling basis vector `b`.
    pub fn root_of(&self, b: usize) -> usize {
        self.roots[b]
    }

    /// Basis vector labelled by root `r`.
    pub fn basis_of(&self, r: usize) -> usize {
        self.basis_of[r]
    }

    /// `N_{α,β}` for root indices `α, β`; zero when `α+β ∉ Δ₊`.
    pub fn constant(&self, alpha: usize, beta: usize) -> Rational {
        match self.root_system.sum(alpha, beta) {
            Some(s) => self
                .algebra
                .constant(self.basis_of[alpha], self.basis_of[beta], self.basis_of[s]),
            None => Rational::zero(),
        }
    }

    /// Basis vectors of the simple root vectors `X_{α₁}, …, X_{α_r}`.
    pub fn simple_generators(&self) -> Vec<usize> {
        (0..self.root_system.rank()).map(|r| self.basis_of[r]).collect()
    }

    /// Basis vectors ordered by decreasing height, ties in reverse canonical
    /// order: each prefix spans an ideal of the next.
    pub fn height_chain(&self) -> Vec<usize> {
        (0..self.root_system.len()).rev().map(|r| self.basis_of[r]).collect()
    }
}

/// First step `i` at which `span(order[..i])` fails to be an ideal of
/// `span(order[..=i])`, or `None` when the whole chain is made of ideals.
pub fn chain_failure(alg: &LieAlgebra, order: &[usize]) -> Option<usize> {
    let mut in_prefix = vec![false; alg.dim()];
    (1..order.len()).find(|&i| {
        in_prefix[order[i - 1]] = true;
        // The prefix is a coordinate subspace, so containment is a support check.
        order[..=i].iter().any(|&a| {
            order[..i].iter().any(|&b| alg.bracket_basis(a, b).iter().any(|(k, _)| !in_prefix[*k]))
        })
    })
}

fn e_matrix(size: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zeros(size, size);
    m.set(i, j, Rational::one());
    m
}

/// Structure constants of a matrix basis whose elements each own an entry
/// where every other basis element vanishes.
fn matrix_algebra(basis: &[QMatrix]) -> Result<LieAlgebra, RootError> {
    let size = basis[0].rows();
    let mut key = Vec::with_capacity(basis.len());
    for (b, m) in basis.iter().enumerate() {
        let pos = (0..size * size)
            .find(|&p| !m.get(p / size, p % size).is_zero() && basis.iter().enumerate().all(|(c, o)| c == b || o.get(p / size, p % size).is_zero()))
            .ok_or_else(|| RootError::Labeling(format!("basis matrix {} has no private entry", b + 1)))?;
        key.push((pos / size, pos % size));
    }
    let mut rels = Vec::new();
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            let c = basis[a].commutator(&basis[b]);
            if c.is_zero() {
                continue;
            }
            let mut recon = QMatrix::zeros(size, size);
            let mut pairs = Vec::new();
            for (k, &(r, s)) in key.iter().enumerate() {
                let x = c.get(r, s) / basis[k].get(r, s);
                if !x.is_zero() {
                    recon = recon.add(&basis[k].scale(&x));
                    pairs.push((k, x));
                }
            }
            if recon != c {
                return Err(RootError::Labeling(format!("[m{},m{}] leaves the span", a + 1, b + 1)));
            }
            rels.push(((a, b), SparseVec::from_pairs(pairs)));
        }
    }
    Ok(LieAlgebra::new(basis.len(), rels)?)
}

/// Weights of basis matrices under diagonal Cartan elements, in ε coordinates.
fn diagonal_weights(basis: &[QMatrix], cartan: &[QMatrix]) -> Vec<QVector> {
    basis
        .iter()
        .map(|m| {
            let (r, s) = (0..m.rows() * m.cols())
                .map(|p| (p / m.cols(), p % m.cols()))
                .find(|&(r, s)| !m.get(r, s).is_zero())
                .expect("nonzero basis matrix");
            cartan
                .iter()
                .map(|h| h.commutator(m).get(r, s) / m.get(r, s))
                .collect()
        })
        .collect()
}

/// Matrix bases: `A`: `E_{i,j}` lex; `D`: `Ẽ` then `F̃`; `B`: `D`-part then
/// `ṽ_q`; `C`: `Ẽ` then `F̂` (including `F̂_{i,i}`). Returns the basis and
/// the diagonal Cartan elements giving ε coordinates.
fn classical_matrices(kind: RootType, n: usize) -> (Vec<QMatrix>, Vec<QMatrix>) {
    match kind {
        RootType::A => {
            let d = n + 1;
            let mut basis = Vec::new();
            for i in 0..d {
                for j in i + 1..d {
                    basis.push(e_matrix(d, i, j));
                }
            }
            (basis, (0..d).map(|k| e_matrix(d, k, k)).collect())
        }
        _ => {
            let off = usize::from(kind == RootType::B);
            let size = 2 * n + off;
            let e = |i: usize, j: usize| e_matrix(size, i + off, j + off);
            let et = |i: usize, j: usize| e(i, j).add(&e(n + j, n + i).scale(&-Rational::one()));
            let mut basis = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    basis.push(et(i, j));
                }
            }
            for i in 0..n {
                let start = if kind == RootType::C { i } else { i + 1 };
                for j in start..n {
                    let sign = if kind == RootType::C { Rational::one() } else { -Rational::one() };
                    basis.push(e(i, n + j).add(&e(j, n + i).scale(&sign)));
                }
            }
            if kind == RootType::B {
                for q in 0..n {
                    basis.push(e_matrix(size, 0, n + 1 + q).add(&e_matrix(size, 1 + q, 0).scale(&-Rational::one())));
                }
            }
            (basis, (0..n).map(|k| et(k, k)).collect())
        }
    }
}

/// Nilradical of the Borel subalgebra of a classical type, from its matrix
/// realization.
pub fn nilradical_classical(kind: RootType, n: usize) -> Result<LieAlgebra, RootError> {
    Ok(classical_nilradical(kind, n)?.into_algebra())
}

fn classical_nilradical(kind: RootType, n: usize) -> Result<ChevalleyNilradical, RootError> {
    if !matches!(kind, RootType::A | RootType::B | RootType::C | RootType::D) {
        return Err(RootError::InvalidType(format!("{}{n} is not classical", kind.letter())));
    }
    let rs = RootSystem::new(kind, n)?;
    let (basis, cartan) = classical_matrices(kind, n);
    let alg = matrix_algebra(&basis)?.with_name(format!("nil:{}{}", kind.letter(), n));
    let labels = diagonal_weights(&basis, &cartan)
        .iter()
        .map(|w| {
            rs.find_ambient(w)
                .ok_or_else(|| RootError::Labeling(format!("weight {} is not a positive root", exactla::fmt_vec(w))))
        })
        .collect::<Result<Vec<_>, _>>()?;
    ChevalleyNilradical::from_labels(rs, alg, labels)
}

const G2_PLUS: &str = "dim 6\nname g2plus\n[1,2] = 3\n[1,3] = 2*4\n[1,4] = -3*5\n[2,5] = -6\n[3,4] = -3*6\n";
const F4_PLUS: &str = include_str!("../data/f4plus.txt");

/// Nilradical of an exceptional type: `G2` and `F4` from their relation
/// tables, `E6`, `E7`, `E8` from a sign cocycle on the root lattice.
pub fn nilradical_exceptional(kind: RootType, rank: usize) -> Result<LieAlgebra, RootError> {
    Ok(exceptional_nilradical(kind, rank)?.into_algebra())
}

fn exceptional_nilradical(kind: RootType, rank: usize) -> Result<ChevalleyNilradical, RootError> {
    let rs = RootSystem::new(kind, rank)?;
    match kind {
        RootType::G | RootType::F => {
            let text = if kind == RootType::G { G2_PLUS } else { F4_PLUS };
            let alg = LieAlgebra::from_relations(text)?;
            let labels = label_from_generators(&rs, &alg)?;
            ChevalleyNilradical::from_labels(rs, alg, labels)
        }
        RootType::E => e_nilradical(rs),
        _ => Err(RootError::InvalidType(format!("{}{rank} is not exceptional", kind.letter()))),
    }
}

/// Bimultiplicative cocycle with `ε(αᵢ,αᵢ) = −1` and `ε(αᵢ,αⱼ) = −1` for
/// adjacent `i < j`; then `[X_α, X_β] = ε(α,β) X_{α+β}`.
fn e_nilradical(rs: RootSystem) -> Result<ChevalleyNilradical, RootError> {
    let a = rs.cartan_matrix();
    let r = rs.rank();
    let m = rs.len();
    let mut rels = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let Some(s) = rs.sum(i, j) else { continue };
            let (ci, cj) = (rs.coefficients(i), rs.coefficients(j));
            let mut parity = 0i64;
            for p in 0..r {
                parity += ci[p] * cj[p];
                for q in p + 1..r {
                    if a.get(p, q) != 0 {
                        parity += ci[p] * cj[q];
                    }
                }
            }
            let sign = if parity % 2 == 0 { 1 } else { -1 };
            rels.push(((i, j), SparseVec::from_pairs([(s, rat(sign))])));
        }
    }
    let alg = LieAlgebra::new(m, rels)?.with_name(format!("nil:E{r}"));
    ChevalleyNilradical::from_labels(rs, alg, (0..m).collect())
}

/// Labels a nilradical given by relations: the generators (a complement of
/// the derived algebra among basis vectors) are matched to simple roots in
/// every order until brackets propagate to a consistent labelling.
fn label_from_generators(rs: &RootSystem, alg: &LieAlgebra) -> Result<Vec<usize>, RootError> {
    let gens = alg.quotient_complement(&alg.derived_subalgebra());
    let r = rs.rank();
    if gens.len() != r {
        return Err(RootError::Labeling(format!("{} generators for rank {r}", gens.len())));
    }
    let mut perm: Vec<usize> = (0..r).collect();
    loop {
        if let Some(l) = propagate_labels(rs, alg, &gens, &perm) {
            return Ok(l);
        }
        if !next_permutation(&mut perm) {
            return Err(RootError::Labeling("no assignment of simple roots fits".into()));
        }
    }
}

fn propagate_labels(rs: &RootSystem, alg: &LieAlgebra, gens: &[usize], perm: &[usize]) -> Option<Vec<usize>> {
    let n = alg.dim();
    let mut label: Vec<Option<usize>> = vec![None; n];
    for (g, &p) in gens.iter().zip(perm) {
        label[*g] = Some(p);
    }
    let mut changed = true;
    while changed {
        changed = false;
        for (&(i, j), v) in alg.brackets() {
            let (Some(li), Some(lj)) = (label[i], label[j]) else { continue };
            if v.len() != 1 {
                return None;
            }
            let k = v.entries()[0].0;
            let s = rs.sum(li, lj)?;
            match label[k] {
                Some(old) if old != s => return None,
                Some(_) => {}
                None => {
                    label[k] = Some(s);
                    changed = true;
                }
            }
        }
    }
    label.into_iter().collect()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Root-labelled nilradical for any simple type.
pub fn nilradical(kind: RootType, rank: usize) -> Result<ChevalleyNilradical, RootError> {
    match kind {
        RootType::A | RootType::B | RootType::C | RootType::D => classical_nilradical(kind, rank),
        _ => exceptional_nilradical(kind, rank),
    }
}

/// `h ⋉ n` with `[H_k, X_α] = c_k(α) X_α`, `c_k` the `α_k`-coefficient;
/// the Cartan basis comes first.
pub fn borel(kind: RootType, rank: usize) -> Result<LieAlgebra, RootError> {
    let nil = nilradical(kind, rank)?;
    let n = nil.algebra().dim();
    let ds: Vec<QMatrix> = (0..rank)
        .map(|k| {
            let mut d = QMatrix::zeros(n, n);
            for b in 0..n {
                d.set(b, b, rat(nil.root_system().coefficients(nil.root_of(b))[k]));
            }
            d
        })
        .collect();
    Ok(nil
        .algebra()
        .extend_by_derivations(&ds)?
        .with_name(format!("borel:{}{}", kind.letter(), rank)))
}

/// Values `α(H_t)` for `α ∈ Γ` and `H_t` given by coordinates on the dual basis
/// of the simple roots.
pub fn root_values(nil: &ChevalleyNilradical, gamma: &[usize], k_basis: &[QVector]) -> Vec<QVector> {
    let rs = nil.root_system();
    gamma
        .iter()
        .map(|&a| {
            k_basis
                .iter()
                .map(|h| rs.coefficients(a).iter().zip(h).map(|(&c, x)| rat(c) * x).sum())
                .collect()
        })
        .collect()
}

/// `u = k ⊕ ⊕_{α∈Γ} g^α` with `[H_t, X_α] = alpha_values[α][t] X_α`; `k`
/// comes first, then `Γ` in the given order.
pub fn build_u(
    nil: &ChevalleyNilradical,
    gamma: &[usize],
    k_dim: usize,
    alpha_values: &[QVector],
) -> Result<LieAlgebra, RootError> {
    let rs = nil.root_system();
    if alpha_values.len() != gamma.len() {
        return Err(RootError::ValueShape {
            expected: gamma.len(),
            got: alpha_values.len(),
        });
    }
    if let Some(v) = alpha_values.iter().find(|v| v.len() != k_dim) {
        return Err(RootError::ValueShape {
            expected: k_dim,
            got: v.len(),
        });
    }
    for &a in gamma {
        for &b in gamma {
            if let Some(s) = rs.sum(a, b) {
                if !gamma.contains(&s) {
                    return Err(RootError::GammaNotClosed { alpha: a, beta: b });
                }
            }
        }
    }
    let indices: Vec<usize> = gamma.iter().map(|&a| nil.basis_of(a)).collect();
    let sub = nil.algebra().basis_subalgebra(&indices)?;
    let m = gamma.len();
    let ds: Vec<QMatrix> = (0..k_dim)
        .map(|t| {
            let mut d = QMatrix::zeros(m, m);
            for (b, vals) in alpha_values.iter().enumerate() {
                d.set(b, b, vals[t].clone());
            }
            d
        })
        .collect();
    Ok(sub.extend_by_derivations(&ds)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcm::{self, GcmType};

    fn all_types() -> Vec<(RootType, usize)> {
        let mut v = Vec::new();
        for n in 1..=8 {
            v.push((RootType::A, n));
        }
        for n in 2..=8 {
            v.push((RootType::B, n));
            v.push((RootType::C, n));
            v.push((RootType::D, n));
        }
        v.extend([(RootType::E, 6), (RootType::E, 7), (RootType::E, 8), (RootType::F, 4), (RootType::G, 2)]);
        v
    }

    fn expected_count(kind: RootType, n: usize) -> usize {
        match kind {
            RootType::A => n * (n + 1) / 2,
            RootType::B | RootType::C => n * n,
            RootType::D => n * (n - 1),
            RootType::E => [36, 63, 120][n - 6],
            RootType::F => 24,
            RootType::G => 6,
        }
    }

    #[test]
    fn positive_root_counts() {
        for (k, n) in all_types() {
            assert_eq!(RootSystem::new(k, n).unwrap().len(), expected_count(k, n), "{k:?}{n}");
        }
    }

    #[test]
    fn cartan_matrices_have_their_names() {
        for (k, n) in all_types() {
            let rs = RootSystem::new(k, n).unwrap();
            let name = match (k, n) {
                (RootType::B, 2) => "C2".to_string(),
                (RootType::D, 2) => {
                    assert_eq!(gcm::classify(&rs.cartan_matrix()).to_string(), "finite:A1 x finite:A1");
                    continue;
                }
                (RootType::D, 3) => "A3".to_string(),
                _ => rs.name(),
            };
            assert_eq!(gcm::classify(&rs.cartan_matrix()), GcmType::Finite(name), "{}", rs.name());
        }
    }

    #[test]
    fn rank_validation() {
        assert!(RootSystem::new(RootType::E, 5).is_err());
        assert!(RootSystem::new(RootType::A, 0).is_err());
        assert_eq!(RootType::parse("e7").unwrap(), (RootType::E, 7));
        assert!(RootType::parse("Q3").is_err());
    }

    #[test]
    fn simply_laced_sums_have_inner_product_minus_one() {
        for (k, n) in [(RootType::E, 6), (RootType::E, 7), (RootType::E, 8), (RootType::D, 5), (RootType::A, 4)] {
            let rs = RootSystem::new(k, n).unwrap();
            for i in 0..rs.len() {
                assert_eq!(rs.inner(rs.root(i), rs.root(i)), rat(2));
                for j in 0..rs.len() {
                    if rs.sum(i, j).is_some() {
                        assert_eq!(rs.inner(rs.root(i), rs.root(j)), rat(-1));
                    }
                }
            }
        }
    }

    #[test]
    fn property_p_examples() {
        for n in [6, 7, 8] {
            assert_eq!(property_p(&RootSystem::new(RootType::E, n).unwrap()), PropertyP::Holds);
        }
        for n in 1..=8 {
            assert_eq!(property_p(&RootSystem::new(RootType::A, n).unwrap()), PropertyP::Holds);
        }
        assert!(matches!(property_p(&RootSystem::new(RootType::F, 4).unwrap()), PropertyP::Fails { .. }));
    }

    #[test]
    fn f4_remark_triple() {
        // [x3,x4], [x3,x9], [x4,x9] are all nonzero in the F4 table.
        let nil = nilradical(RootType::F, 4).unwrap();
        let rs = nil.root_system();
        let (a, b, c) = (nil.root_of(2), nil.root_of(3), nil.root_of(8));
        assert!(rs.sum(a, b).is_some() && rs.sum(a, c).is_some() && rs.sum(b, c).is_some());
    }

    #[test]
    fn classical_dimensions() {
        assert!(nilradical_classical(RootType::D, 2).unwrap().is_abelian());
        assert_eq!(nilradical_classical(RootType::D, 2).unwrap().dim(), 2);
        assert_eq!(nilradical_classical(RootType::A, 3).unwrap().dim(), 6);
        assert_eq!(nilradical_classical(RootType::B, 2).unwrap().dim(), 4);
        for n in 2..=5 {
            for k in [RootType::B, RootType::C, RootType::D] {
                let nil = nilradical(k, n).unwrap();
                assert_eq!(nil.algebra().dim(), expected_count(k, n));
                assert!(nil.algebra().is_nilpotent());
            }
        }
    }

    #[test]
    fn b_relation_from_matrices() {
        // [ṽ_q, ṽ_s] = F̃_{s,q} for s < q.
        let n = 3;
        let alg = nilradical_classical(RootType::B, n).unwrap();
        let e_count = n * (n - 1) / 2;
        let v = |q: usize| 2 * e_count + q;
        // F̃ basis index of (s, q), s < q, lex.
        let f = |s: usize, q: usize| e_count + (0..s).map(|i| n - 1 - i).sum::<usize>() + (q - s - 1);
        assert_eq!(alg.constant(v(2), v(0), f(0, 2)), rat(1));
        assert_eq!(alg.constant(v(1), v(0), f(0, 1)), rat(1));
    }

    #[test]
    fn g2_and_f4_tables() {
        let g2 = nilradical(RootType::G, 2).unwrap();
        assert_eq!(g2.algebra().dim(), 6);
        assert_eq!(g2.algebra().constant(0, 3, 4), rat(-3));
        let f4 = nilradical(RootType::F, 4).unwrap();
        assert_eq!(f4.algebra().dim(), 24);
        assert_eq!(f4.algebra().constant(2, 21, 22), ratio(1, 2));
    }

    #[test]
    fn e_series_cocycle() {
        for n in [6, 7, 8] {
            let nil = nilradical(RootType::E, n).unwrap();
            assert_eq!(nil.algebra().dim(), expected_count(RootType::E, n));
            for (_, v) in nil.algebra().brackets() {
                for (_, x) in v.iter() {
                    assert!(*x == rat(1) || *x == rat(-1));
                }
            }
        }
    }

    #[test]
    fn height_chain_is_ideal_chain() {
        for n in [6, 7] {
            let nil = nilradical(RootType::E, n).unwrap();
            assert_eq!(chain_failure(nil.algebra(), &nil.height_chain()), None);
        }
        let a3 = nilradical(RootType::A, 3).unwrap();
        let mut bad = a3.height_chain();
        bad.reverse();
        assert!(chain_failure(a3.algebra(), &bad).is_some());
    }

    #[test]
    fn gcm_of_nilradicals() {
        for (k, n) in [(RootType::G, 2), (RootType::F, 4), (RootType::A, 3), (RootType::B, 3), (RootType::C, 3), (RootType::E, 6)] {
            let nil = nilradical(k, n).unwrap();
            let a = gcm::compute_gcm(nil.algebra(), &nil.simple_generators()).unwrap();
            assert_eq!(a, nil.root_system().cartan_matrix(), "{k:?}{n}");
        }
    }

    #[test]
    fn borel_dimensions() {
        let b1 = borel(RootType::A, 1).unwrap();
        assert_eq!(b1.dim(), 2);
        assert_eq!(b1.constant(0, 1, 1), rat(1));
        assert_eq!(borel(RootType::A, 2).unwrap().dim(), 5);
        assert_eq!(borel(RootType::G, 2).unwrap().dim(), 8);
    }

    #[test]
    fn build_u_closure_and_borel() {
        let nil = nilradical(RootType::A, 2).unwrap();
        let all: Vec<usize> = (0..3).map(|b| nil.root_of(b)).collect();
        let k: Vec<QVector> = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        let u = build_u(&nil, &all, 2, &root_values(&nil, &all, &k)).unwrap();
        assert_eq!(u, borel(RootType::A, 2).unwrap());
        assert_eq!(
            build_u(&nil, &[0, 1], 0, &[vec![], vec![]]),
            Err(RootError::GammaNotClosed { alpha: 0, beta: 1 })
        );
    }
}

//! Chevalley–Eilenberg cochains with trivial or adjoint coefficients.
//!
//! The coboundary is produced by one routine, [`coboundary_rows`], which
//! evaluates the Leibniz formula
//!
//! ```text
//! (δψ)(X₁,…,X_{k+1}) = [X₁, ψ(X₂,…)] + Σ_{i≥2} (−1)^i [ψ(…X̂ᵢ…), Xᵢ]
//!                      + Σ_{i<j} (−1)^{j+1} ψ(X₁,…,X_{i−1},[Xᵢ,Xⱼ],X_{i+1},…,X̂ⱼ,…)
//! ```
//!
//! on basis tuples. On alternating cochains, evaluated at increasing tuples,
//! it is the usual differential `d`; with trivial coefficients the two bracket
//! terms are dropped.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::combin::{binom, sort_with_sign, subset_rank, subsets};
use crate::exactla::{self, is_zero_vec, zero_vec, QVector, Rational, RowEchelon, SparseVec};
use crate::liealg::LieAlgebra;

/// Largest dimension for which full Betti sequences are computed.
pub const BETTI_MAX_DIM: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Trivial,
    Adjoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CohomError {
    #[error("not a coboundary")]
    NotACoboundary,
    #[error("Betti numbers are only computed for dim <= {max}; got dim {dim}")]
    TooLarge { dim: usize, max: usize },
    #[error("cochain shape mismatch: {0}")]
    Shape(String),
}

/// Enumerates the argument tuples of a cochain space and locates arbitrary
/// tuples in it.
pub(crate) trait TupleIndex: Sync {
    fn len(&self) -> usize;
    fn tuple(&self, idx: usize) -> Vec<usize>;
    /// Position and sign of the component that evaluates `tuple`; `None` when
    /// the value is forced to be zero.
    fn locate(&self, tuple: &[usize]) -> Option<(usize, i32)>;
}

/// Increasing `k`-tuples in lexicographic order (alternating cochains).
pub(crate) struct AltIndex {
    n: usize,
    tuples: Vec<Vec<usize>>,
}

impl AltIndex {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        AltIndex { n, tuples: subsets(n, k) }
    }
}

impl TupleIndex for AltIndex {
    fn len(&self) -> usize {
        self.tuples.len()
    }

    fn tuple(&self, idx: usize) -> Vec<usize> {
        self.tuples[idx].clone()
    }

    fn locate(&self, tuple: &[usize]) -> Option<(usize, i32)> {
        let mut t = tuple.to_vec();
        let sign = sort_with_sign(&mut t)?;
        Some((subset_rank(self.n, &t), sign))
    }
}

/// All `k`-tuples, indexed in base `n` with the first entry most significant.
pub(crate) struct FullIndex {
    n: usize,
    k: usize,
}

impl FullIndex {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        FullIndex { n, k }
    }
}

impl TupleIndex for FullIndex {
    fn len(&self) -> usize {
        self.n.pow(self.k as u32)
    }

    fn tuple(&self, mut idx: usize) -> Vec<usize> {
        let mut t = vec![0; self.k];
        for slot in t.iter_mut().rev() {
            *slot = idx % self.n;
            idx /= self.n;
        }
        t
    }

    fn locate(&self, tuple: &[usize]) -> Option<(usize, i32)> {
        Some((tuple.iter().fold(0, |acc, &x| acc * self.n + x), 1))
    }
}

fn sign_pow(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Rows of the coboundary from degree `k` cochains (indexed by `src`) to
/// degree `k+1` cochains (indexed by `dst`). With adjoint coefficients the
/// component `(t, tuple)` sits at `t·len + tuple_index`.
pub(crate) fn coboundary_rows(
    alg: &LieAlgebra,
    coeffs: Coefficients,
    src: &dyn TupleIndex,
    dst: &dyn TupleIndex,
) -> Vec<SparseVec> {
    let n = alg.dim();
    let targets = match coeffs {
        Coefficients::Trivial => 1,
        Coefficients::Adjoint => n,
    };
    let slen = src.len();
    let per_tuple: Vec<Vec<SparseVec>> = (0..dst.len())
        .into_par_iter()
        .map(|didx| {
            let x = dst.tuple(didx);
            let m = x.len();
            // acc[t] maps input column -> coefficient.
            let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); targets];
            let mut add = |t: usize, col: usize, c: Rational| {
                let e = acc[t].entry(col).or_insert_with(Rational::zero);
                *e += c;
            };
            if coeffs == Coefficients::Adjoint {
                // [X₁, ψ(X₂,…)]
                if let Some((idx, sg)) = src.locate(&x[1..]) {
                    for s in 0..n {
                        for (t, c) in alg.bracket_basis(x[0], s).iter() {
                            add(*t, s * slen + idx, c * Rational::from_integer(sg.into()));
                        }
                    }
                }
                // (−1)^i [ψ(…X̂ᵢ…), Xᵢ], i = 2..m in 1-based terms
                for i in 1..m {
                    let mut rest = x.clone();
                    rest.remove(i);
                    if let Some((idx, sg)) = src.locate(&rest) {
                        let sgn = sign_pow(i + 1) * i64::from(sg);
                        for s in 0..n {
                            for (t, c) in alg.bracket_basis(s, x[i]).iter() {
                                add(*t, s * slen + idx, c * Rational::from_integer(sgn.into()));
                            }
                        }
                    }
                }
            }
            // (−1)^{j+1} ψ(…, [Xᵢ,Xⱼ], …, X̂ⱼ, …)
            for i in 0..m {
                for j in i + 1..m {
                    let br = alg.bracket_basis(x[i], x[j]);
                    if br.is_empty() {
                        continue;
                    }
                    let sgn = sign_pow(j); // (−1)^{(j+1)+1} with 0-based j
                    let mut args = x.clone();
                    args.remove(j);
                    for (mm, c) in br.iter() {
                        args[i] = *mm;
                        if let Some((idx, sg)) = src.locate(&args) {
                            let coef = c * Rational::from_integer((sgn * i64::from(sg)).into());
                            for t in 0..targets {
                                add(t, t * slen + idx, coef.clone());
                            }
                        }
                    }
                }
            }
            acc.into_iter()
                .map(|m| SparseVec::from_pairs(m.into_iter().filter(|(_, c)| !c.is_zero())))
                .collect()
        })
        .collect();
    // Reorder to (t, tuple) layout.
    let mut rows = vec![SparseVec::new(); targets * dst.len()];
    for (didx, rs) in per_tuple.into_iter().enumerate() {
        for (t, r) in rs.into_iter().enumerate() {
            rows[t * dst.len() + didx] = r;
        }
    }
    rows
}

/// Matrix of `d : Cᵏ → Cᵏ⁺¹` as sparse rows.
pub fn d_matrix(alg: &LieAlgebra, k: usize, coeffs: Coefficients) -> Vec<SparseVec> {
    let n = alg.dim();
    coboundary_rows(alg, coeffs, &AltIndex::new(n, k), &AltIndex::new(n, k + 1))
}

/// Number of components of a degree-`k` cochain.
pub fn cochain_len(n: usize, k: usize, coeffs: Coefficients) -> usize {
    match coeffs {
        Coefficients::Trivial => binom(n, k),
        Coefficients::Adjoint => n * binom(n, k),
    }
}

fn rank_of_rows(rows: &[SparseVec], ncols: usize) -> usize {
    let mut e = RowEchelon::new(ncols);
    for r in rows {
        if !r.is_empty() {
            e.insert(r.clone());
        }
    }
    e.rank()
}

/// Rank of `d : Cᵏ → Cᵏ⁺¹`.
pub fn d_rank(alg: &LieAlgebra, k: usize, coeffs: Coefficients) -> usize {
    let n = alg.dim();
    if k + 1 > n {
        return 0;
    }
    rank_of_rows(&d_matrix(alg, k, coeffs), cochain_len(n, k, coeffs))
}

/// `dim Hᵏ`, valid for any dimension (cost grows with `C(n,k)`).
pub fn cohomology_dim(alg: &LieAlgebra, k: usize, coeffs: Coefficients) -> usize {
    let n = alg.dim();
    let ck = cochain_len(n, k, coeffs);
    let out = d_rank(alg, k, coeffs);
    let inc = if k == 0 { 0 } else { d_rank(alg, k - 1, coeffs) };
    ck - out - inc
}

/// `(dim H⁰, …, dim Hⁿ)`; refuses `n > BETTI_MAX_DIM`.
pub fn betti(alg: &LieAlgebra, coeffs: Coefficients) -> Result<Vec<usize>, CohomError> {
    let n = alg.dim();
    if n > BETTI_MAX_DIM {
        return Err(CohomError::TooLarge {
            dim: n,
            max: BETTI_MAX_DIM,
        });
    }
    let ranks: Vec<usize> = (0..=n).into_par_iter().map(|k| d_rank(alg, k, coeffs)).collect();
    Ok((0..=n)
        .map(|k| {
            let inc = if k == 0 { 0 } else { ranks[k - 1] };
            cochain_len(n, k, coeffs) - ranks[k] - inc
        })
        .collect())
}

/// Alternating cochain. Trivial components are indexed by increasing tuples in
/// lexicographic order; adjoint ones by `(target, tuple)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    dim: usize,
    degree: usize,
    coeffs: Coefficients,
    components: QVector,
}

impl Cochain {
    pub fn zero(dim: usize, degree: usize, coeffs: Coefficients) -> Self {
        Cochain {
            dim,
            degree,
            coeffs,
            components: zero_vec(cochain_len(dim, degree, coeffs)),
        }
    }

    pub fn from_components(
        dim: usize,
        degree: usize,
        coeffs: Coefficients,
        components: QVector,
    ) -> Result<Self, CohomError> {
        let len = cochain_len(dim, degree, coeffs);
        if components.len() != len {
            return Err(CohomError::Shape(format!(
                "expected {len} components, got {}",
                components.len()
            )));
        }
        Ok(Cochain {
            dim,
            degree,
            coeffs,
            components,
        })
    }

    /// Trivial-coefficient form `Σ c · ω^{i₁…i_k}` from 0-based index tuples in
    /// any order (signs follow the permutation).
    pub fn form(dim: usize, degree: usize, terms: &[(&[usize], Rational)]) -> Self {
        let mut c = Self::zero(dim, degree, Coefficients::Trivial);
        for (t, x) in terms {
            assert_eq!(t.len(), degree, "tuple length must equal degree");
            let mut s = t.to_vec();
            if let Some(sg) = sort_with_sign(&mut s) {
                let idx = subset_rank(dim, &s);
                c.components[idx] += x * Rational::from_integer(sg.into());
            }
        }
        c
    }

    /// The monomial `ω^{i₁} ∧ … ∧ ω^{i_k}` (0-based indices).
    pub fn monomial(dim: usize, indices: &[usize]) -> Self {
        Self::form(dim, indices.len(), &[(indices, Rational::one())])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coeffs
    }

    pub fn components(&self) -> &[Rational] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.components)
    }

    /// Value on basis vectors `x_{t₁}, …, x_{t_k}` (trivial coefficients).
    pub fn eval(&self, tuple: &[usize]) -> Rational {
        self.eval_target(0, tuple)
    }

    /// Component `target` of the value on a basis tuple.
    pub fn eval_target(&self, target: usize, tuple: &[usize]) -> Rational {
        let mut s = tuple.to_vec();
        match sort_with_sign(&mut s) {
            None => Rational::zero(),
            Some(sg) => {
                let idx = target * binom(self.dim, self.degree) + subset_rank(self.dim, &s);
                &self.components[idx] * Rational::from_integer(sg.into())
            }
        }
    }

    /// Value on arbitrary vectors, by multilinearity.
    pub fn eval_vectors(&self, args: &[QVector]) -> Rational {
        assert_eq!(self.coeffs, Coefficients::Trivial);
        let mut total = Rational::zero();
        for (idx, t) in subsets(self.dim, self.degree).iter().enumerate() {
            let c = &self.components[idx];
            if c.is_zero() {
                continue;
            }
            // Determinant of the k×k minor args[a][t[b]].
            let rows: Vec<QVector> = args.iter().map(|v| t.iter().map(|&b| v[b].clone()).collect()).collect();
            let m = exactla::QMatrix::from_rows(rows).expect("square minor");
            total += c * exactla::determinant(&m);
        }
        total
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!((self.dim, self.degree, self.coeffs), (other.dim, other.degree, other.coeffs));
        let components = self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect();
        Cochain { components, ..self.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Cochain {
        Cochain {
            components: self.components.iter().map(|x| x * c).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Wedge product of trivial-coefficient forms.
    pub fn wedge(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.coeffs, Coefficients::Trivial);
        assert_eq!(other.coeffs, Coefficients::Trivial);
        let (p, q) = (self.degree, other.degree);
        let n = self.dim;
        let mut out = Cochain::zero(n, p + q, Coefficients::Trivial);
        for (oidx, t) in subsets(n, p + q).iter().enumerate() {
            let mut acc = Rational::zero();
            for pick in subsets(p + q, p) {
                let left: Vec<usize> = pick.iter().map(|&a| t[a]).collect();
                let right: Vec<usize> = (0..p + q).filter(|a| !pick.contains(a)).map(|a| t[a]).collect();
                let a = self.eval(&left);
                if a.is_zero() {
                    continue;
                }
                let b = other.eval(&right);
                if b.is_zero() {
                    continue;
                }
                // Sign of the shuffle (pick, rest).
                let mut perm: Vec<usize> = pick.clone();
                perm.extend((0..p + q).filter(|a| !pick.contains(a)));
                let sg = sort_with_sign(&mut perm).expect("permutation");
                acc += a * b * Rational::from_integer(sg.into());
            }
            out.components[oidx] = acc;
        }
        out
    }

    /// Pulls back along the inclusion of a subalgebra's basis: `map[a]` is the
    /// index in `self`'s algebra of the subalgebra's basis vector `a`.
    pub fn restrict(&self, map: &[usize]) -> Cochain {
        assert_eq!(self.coeffs, Coefficients::Trivial);
        let m = map.len();
        let mut out = Cochain::zero(m, self.degree, Coefficients::Trivial);
        for (idx, t) in subsets(m, self.degree).iter().enumerate() {
            let img: Vec<usize> = t.iter().map(|&a| map[a]).collect();
            out.components[idx] = self.eval(&img);
        }
        out
    }

    /// Extends a form on span(x_{map[a]}) to the whole algebra by zero on the
    /// remaining basis vectors (composition with the coordinate projection).
    pub fn extend(&self, dim: usize, map: &[usize]) -> Cochain {
        assert_eq!(self.coeffs, Coefficients::Trivial);
        let mut out = Cochain::zero(dim, self.degree, Coefficients::Trivial);
        for (idx, t) in subsets(self.dim, self.degree).iter().enumerate() {
            let c = &self.components[idx];
            if c.is_zero() {
                continue;
            }
            let mut img: Vec<usize> = t.iter().map(|&a| map[a]).collect();
            let sg = sort_with_sign(&mut img).expect("injective map");
            out.components[subset_rank(dim, &img)] += c * Rational::from_integer(sg.into());
        }
        out
    }

    /// Nonzero terms as `(coefficient, 0-based increasing tuple)`.
    pub fn terms(&self) -> Vec<(Rational, Vec<usize>)> {
        assert_eq!(self.coeffs, Coefficients::Trivial);
        subsets(self.dim, self.degree)
            .into_iter()
            .zip(&self.components)
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| (c.clone(), t))
            .collect()
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs == Coefficients::Adjoint {
            return write!(f, "{}", exactla::fmt_vec(&self.components));
        }
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (c, t)) in terms.iter().enumerate() {
            let neg = *c < Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (pos, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let idx: Vec<String> = t.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "ω^{{{}}}", idx.join(","))?;
        }
        Ok(())
    }
}

/// `dφ`.
pub fn d(alg: &LieAlgebra, phi: &Cochain) -> Cochain {
    let n = alg.dim();
    assert_eq!(phi.dim, n, "cochain dimension must match the algebra");
    let rows = d_matrix(alg, phi.degree, phi.coeffs);
    let components: QVector = rows.iter().map(|r| r.dot(&phi.components)).collect();
    let out = Cochain {
        dim: n,
        degree: phi.degree + 1,
        coeffs: phi.coeffs,
        components,
    };
    debug_assert!(phi.degree + 2 > n || d_rows_apply(alg, &out).is_zero());
    out
}

fn d_rows_apply(alg: &LieAlgebra, phi: &Cochain) -> Cochain {
    let rows = d_matrix(alg, phi.degree, phi.coeffs);
    let components = rows.iter().map(|r| r.dot(&phi.components)).collect();
    Cochain {
        dim: phi.dim,
        degree: phi.degree + 1,
        coeffs: phi.coeffs,
        components,
    }
}

/// Canonical `γ` with `dγ = ω`, or `NotACoboundary`.
pub fn coboundary_witness(alg: &LieAlgebra, omega: &Cochain) -> Result<Cochain, CohomError> {
    let n = alg.dim();
    let k = omega.degree;
    if k == 0 {
        return if omega.is_zero() {
            Ok(omega.clone())
        } else {
            Err(CohomError::NotACoboundary)
        };
    }
    let rows = d_matrix(alg, k - 1, omega.coeffs);
    let ncols = cochain_len(n, k - 1, omega.coeffs);
    let x = exactla::solve_sparse(&rows, ncols, &omega.components).map_err(|_| CohomError::NotACoboundary)?;
    Ok(Cochain {
        dim: n,
        degree: k - 1,
        coeffs: omega.coeffs,
        components: x,
    })
}

/// Coboundary space `Bᵏ` as an (echelon) row span of the images of basis
/// cochains of degree `k−1`.
pub fn coboundary_space(alg: &LieAlgebra, k: usize, coeffs: Coefficients) -> RowEchelon {
    let n = alg.dim();
    let len = cochain_len(n, k, coeffs);
    let mut e = RowEchelon::new(len);
    if k == 0 {
        return e;
    }
    let rows = d_matrix(alg, k - 1, coeffs);
    // Columns of the d-matrix are the images of basis cochains.
    let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); cochain_len(n, k - 1, coeffs)];
    for (r, row) in rows.iter().enumerate() {
        for (c, x) in row.iter() {
            cols[*c].push((r, x.clone()));
        }
    }
    for c in cols {
        if !c.is_empty() {
            e.insert(SparseVec::from_pairs(c));
        }
    }
    e
}

/// Coadjoint action on trivial forms:
/// `(θ_x γ)(u₁,…,u_k) = −Σᵢ γ(u₁,…,[x,uᵢ],…,u_k)`.
pub fn theta(alg: &LieAlgebra, x: &[Rational], gamma: &Cochain) -> Cochain {
    assert_eq!(gamma.coeffs, Coefficients::Trivial);
    let n = alg.dim();
    let k = gamma.degree;
    let mut out = Cochain::zero(n, k, Coefficients::Trivial);
    for (idx, t) in subsets(n, k).iter().enumerate() {
        let mut acc = Rational::zero();
        for i in 0..k {
            let br = alg.bracket_with_basis_left(x, t[i]);
            for (m, c) in br.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut args = t.clone();
                args[i] = m;
                acc -= c * gamma.eval(&args);
            }
        }
        out.components[idx] = acc;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, unit_vec};

    fn g54() -> LieAlgebra {
        LieAlgebra::from_relations("dim 5\n[1,2]=3\n[1,3]=4\n[2,3]=5").unwrap()
    }

    fn diamond() -> LieAlgebra {
        LieAlgebra::from_relations("dim 4\n[1,2]=3\n[1,3]=-2\n[2,3]=4").unwrap()
    }

    fn h3() -> LieAlgebra {
        LieAlgebra::from_relations("dim 3\n[1,2]=3").unwrap()
    }

    #[test]
    fn d_of_w15_on_g54() {
        let g = g54();
        let w15 = Cochain::monomial(5, &[0, 4]);
        assert_eq!(d(&g, &w15), Cochain::monomial(5, &[0, 1, 2]));
    }

    #[test]
    fn d_of_w14_on_diamond() {
        let g = diamond();
        let w14 = Cochain::monomial(4, &[0, 3]);
        assert_eq!(d(&g, &w14), Cochain::monomial(4, &[0, 1, 2]));
    }

    #[test]
    fn d_vanishes_on_abelian() {
        let a = LieAlgebra::abelian(4);
        for k in 0..4 {
            for coeffs in [Coefficients::Trivial, Coefficients::Adjoint] {
                assert!(d_matrix(&a, k, coeffs).iter().all(SparseVec::is_empty));
            }
        }
    }

    #[test]
    fn degree_one_trivial_matches_definition() {
        // dω(X,Y) = −ω([X,Y])
        let g = g54();
        let w3 = Cochain::monomial(5, &[2]);
        assert_eq!(d(&g, &w3), Cochain::form(5, 2, &[(&[0, 1], rat(-1))]));
    }

    #[test]
    fn betti_small() {
        assert_eq!(betti(&LieAlgebra::abelian(1), Coefficients::Trivial).unwrap(), vec![1, 1]);
        assert_eq!(betti(&h3(), Coefficients::Trivial).unwrap(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn betti_refuses_large() {
        assert!(matches!(
            betti(&LieAlgebra::abelian(11), Coefficients::Trivial),
            Err(CohomError::TooLarge { .. })
        ));
    }

    #[test]
    fn euler_characteristic_vanishes() {
        for g in [g54(), diamond(), h3()] {
            let b = betti(&g, Coefficients::Trivial).unwrap();
            let chi: i64 = b.iter().enumerate().map(|(k, &x)| sign_pow(k) * x as i64).sum();
            assert_eq!(chi, 0);
        }
    }

    #[test]
    fn d_squared_is_zero() {
        for g in [g54(), diamond()] {
            let n = g.dim();
            for coeffs in [Coefficients::Trivial, Coefficients::Adjoint] {
                for k in 0..n.saturating_sub(1) {
                    for col in 0..cochain_len(n, k, coeffs) {
                        let mut v = zero_vec(cochain_len(n, k, coeffs));
                        v[col] = rat(1);
                        let c = Cochain::from_components(n, k, coeffs, v).unwrap();
                        assert!(d(&g, &d(&g, &c)).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn coboundary_witness_g54() {
        let g = g54();
        let w123 = Cochain::monomial(5, &[0, 1, 2]);
        let gamma = coboundary_witness(&g, &w123).unwrap();
        assert_eq!(d(&g, &gamma), w123);
        let zero = Cochain::zero(5, 3, Coefficients::Trivial);
        assert!(coboundary_witness(&g, &zero).unwrap().is_zero());
        // On h3, B² = span(ω^{1,2}); ω^{1,3} is closed but not exact.
        let w12 = Cochain::monomial(3, &[0, 1]);
        assert_eq!(d(&h3(), &coboundary_witness(&h3(), &w12).unwrap()), w12);
        let w13 = Cochain::monomial(3, &[0, 2]);
        assert_eq!(coboundary_witness(&h3(), &w13), Err(CohomError::NotACoboundary));
    }

    #[test]
    fn wedge_matches_hand_formula() {
        let n = 4;
        let a = Cochain::monomial(n, &[0]);
        let b = Cochain::monomial(n, &[1, 2]);
        assert_eq!(a.wedge(&b), Cochain::monomial(n, &[0, 1, 2]));
        assert_eq!(b.wedge(&a), Cochain::monomial(n, &[0, 1, 2]));
        let c = Cochain::monomial(n, &[1]);
        assert_eq!(c.wedge(&a), Cochain::form(n, 2, &[(&[0, 1], rat(-1))]));
    }

    #[test]
    fn theta_on_abelian_is_zero() {
        let a = LieAlgebra::abelian(3);
        let g = Cochain::monomial(3, &[0, 1]);
        assert!(theta(&a, &unit_vec(3, 0), &g).is_zero());
    }

    #[test]
    fn eval_vectors_is_determinant() {
        let w = Cochain::monomial(3, &[0, 1]);
        let u = vec![rat(1), rat(2), rat(0)];
        let v = vec![rat(3), rat(4), rat(5)];
        assert_eq!(w.eval_vectors(&[u, v]), rat(-2));
    }

    #[test]
    fn extend_and_restrict_round_trip() {
        let w = Cochain::form(3, 2, &[(&[0, 2], rat(3)), (&[1, 2], rat(-1))]);
        let map = [1, 2, 4];
        let e = w.extend(5, &map);
        assert_eq!(e.restrict(&map), w);
        assert_eq!(e.eval(&[4, 1]), rat(-3));
    }
}

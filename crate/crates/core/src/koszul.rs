//! Invariant symmetric bilinear forms and the Koszul map `B ↦ I_B`,
//! `I_B(X,Y,Z) = B([X,Y],Z)`.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::cecohom::{self, Coefficients, Cochain};
use crate::combin::{binom, subset_rank};
use crate::exactla::{self, rat, QMatrix, QVector, Rational, RowEchelon, SparseVec};
use crate::liealg::{LieAlgebra, Subspace};

/// Alternating 3-form with trivial coefficients.
pub type TriForm = Cochain;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KoszulError {
    #[error("form is not symmetric")]
    NotSymmetric,
    #[error("form is not invariant: B([x{}, x{}], x{}) + B(x{}, [x{}, x{}]) != 0", .z + 1, .a + 1, .b + 1, .a + 1, .z + 1, .b + 1)]
    NotInvariant { z: usize, a: usize, b: usize },
    #[error("dimension mismatch: algebra has dim {expected}, form has dim {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("span(x2, ..., xn) is not an ideal")]
    NotCodimOneIdeal,
}

/// Symmetric bilinear form, `B_{ij} = B(xᵢ, xⱼ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: QMatrix,
}

impl BilinearForm {
    pub fn new(matrix: QMatrix) -> Result<Self, KoszulError> {
        if !matrix.is_symmetric() {
            return Err(KoszulError::NotSymmetric);
        }
        Ok(BilinearForm { matrix })
    }

    pub fn zero(n: usize) -> Self {
        BilinearForm {
            matrix: QMatrix::zeros(n, n),
        }
    }

    /// `Σ c·ω^i⊙ω^j` for `i ≠ j` and `c·ω^i⊗ω^i` for `i = j` (0-based), with
    /// `ω⊙π = ω⊗π + π⊗ω`.
    pub fn from_terms(n: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for &(i, j, c) in terms {
            let v = m.get(i, j) + rat(c);
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
        BilinearForm { matrix: m }
    }

    fn from_unknowns(n: usize, v: &[Rational]) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x = v[pair_index(n, i, j)].clone();
                m.set(i, j, x.clone());
                m.set(j, i, x);
            }
        }
        BilinearForm { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.matrix.get(i, j)
    }

    /// `B(u, v)`.
    pub fn apply(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let bv = self.matrix.mul_vec(v);
        u.iter().zip(&bv).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &BilinearForm) -> BilinearForm {
        BilinearForm {
            matrix: self.matrix.add(&other.matrix),
        }
    }

    pub fn scale(&self, c: &Rational) -> BilinearForm {
        BilinearForm {
            matrix: self.matrix.scale(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !exactla::determinant(&self.matrix).is_zero()
    }

    /// Radical `{x : B(x, ·) = 0}`.
    pub fn kernel(&self) -> Subspace {
        Subspace::new(self.dim(), &exactla::nullspace(&self.matrix))
    }

    /// Restriction to `span(x_{map[0]}, x_{map[1]}, …)`.
    pub fn restrict(&self, map: &[usize]) -> BilinearForm {
        let mut m = QMatrix::zeros(map.len(), map.len());
        for (a, &i) in map.iter().enumerate() {
            for (b, &j) in map.iter().enumerate() {
                m.set(a, b, self.matrix.get(i, j).clone());
            }
        }
        BilinearForm { matrix: m }
    }

    /// Coefficients in the `ω^i⊙ω^j` (`i<j`) / `ω^i⊗ω^i` notation.
    pub fn terms(&self) -> Vec<(usize, usize, Rational)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let c = self.matrix.get(i, j);
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Display for BilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (i, j, c)) in terms.iter().enumerate() {
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
            let op = if i == j { "⊗" } else { "⊙" };
            write!(f, "ω^{}{}ω^{}", i + 1, op, j + 1)?;
        }
        Ok(())
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j);
    i * n - i * i.saturating_sub(1) / 2 + j - i
}

/// Canonical basis of `(S²g*)^g`, solving `B([z,xₐ],x_b) + B(xₐ,[z,x_b]) = 0`.
pub fn invariant_forms(alg: &LieAlgebra) -> Vec<BilinearForm> {
    let n = alg.dim();
    let unknowns = n * (n + 1) / 2;
    let var = |i: usize, j: usize| if i <= j { pair_index(n, i, j) } else { pair_index(n, j, i) };
    let eqs: Vec<Vec<SparseVec>> = (0..n)
        .into_par_iter()
        .map(|z| {
            let mut out = Vec::new();
            for a in 0..n {
                let za = alg.bracket_basis(z, a);
                for b in a..n {
                    let zb = alg.bracket_basis(z, b);
                    if za.is_empty() && zb.is_empty() {
                        continue;
                    }
                    let pairs = za
                        .iter()
                        .map(|(k, c)| (var(*k, b), c.clone()))
                        .chain(zb.iter().map(|(k, c)| (var(a, *k), c.clone())));
                    let row = SparseVec::from_pairs(pairs);
                    if !row.is_empty() {
                        out.push(row);
                    }
                }
            }
            out
        })
        .collect();
    let mut e = RowEchelon::new(unknowns);
    for row in eqs.into_iter().flatten() {
        e.insert(row);
    }
    e.nullspace().iter().map(|v| BilinearForm::from_unknowns(n, v)).collect()
}

/// First `(z, a, b)` with `B([z,xₐ],x_b) + B(xₐ,[z,x_b]) ≠ 0`.
pub fn invariance_defect(alg: &LieAlgebra, b: &BilinearForm) -> Option<(usize, usize, usize)> {
    let n = alg.dim();
    for z in 0..n {
        for a in 0..n {
            let za = alg.bracket_basis(z, a);
            for bb in a..n {
                let zb = alg.bracket_basis(z, bb);
                let mut s = Rational::zero();
                for (k, c) in za.iter() {
                    s += c * b.get(*k, bb);
                }
                for (k, c) in zb.iter() {
                    s += c * b.get(a, *k);
                }
                if !s.is_zero() {
                    return Some((z, a, bb));
                }
            }
        }
    }
    None
}

pub fn is_invariant(alg: &LieAlgebra, b: &BilinearForm) -> bool {
    b.dim() == alg.dim() && invariance_defect(alg, b).is_none()
}

/// `I_B` without the invariance check.
fn koszul_unchecked(alg: &LieAlgebra, b: &BilinearForm) -> TriForm {
    let n = alg.dim();
    let mut comps = vec![Rational::zero(); binom(n, 3)];
    for (&(i, j), v) in alg.brackets() {
        for (m, c) in v.iter() {
            for k in j + 1..n {
                let bmk = b.get(*m, k);
                if !bmk.is_zero() {
                    comps[subset_rank(n, &[i, j, k])] += c * bmk;
                }
            }
        }
    }
    Cochain::from_components(n, 3, Coefficients::Trivial, comps).expect("shape")
}

/// `I_B`, after verifying invariance.
pub fn koszul_form(alg: &LieAlgebra, b: &BilinearForm) -> Result<TriForm, KoszulError> {
    if b.dim() != alg.dim() {
        return Err(KoszulError::DimensionMismatch {
            expected: alg.dim(),
            got: b.dim(),
        });
    }
    if let Some((z, a, bb)) = invariance_defect(alg, b) {
        return Err(KoszulError::NotInvariant { z, a, b: bb });
    }
    let out = koszul_unchecked(alg, b);
    debug_assert!(alg.dim() < 4 || cecohom::d(alg, &out).is_zero());
    Ok(out)
}

/// Outcome of the nondegeneracy search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticVerdict {
    pub quadratic: bool,
    /// A nondegenerate invariant form when `quadratic`.
    pub witness: Option<BilinearForm>,
    /// Why the answer is what it is, for reports.
    pub reason: String,
    /// False only when the negative answer rests on the randomized fallback.
    pub certain: bool,
}

/// Budget of determinant evaluations for the exhaustive grid.
const GRID_BUDGET: usize = 20_000;
/// Pseudo-random points tried once the grid is too large to exhaust.
const RANDOM_POINTS: usize = 64;

fn combine(forms: &[BilinearForm], t: &[i64]) -> BilinearForm {
    let n = forms[0].dim();
    let mut m = QMatrix::zeros(n, n);
    for (f, &c) in forms.iter().zip(t) {
        if c != 0 {
            m = m.add(&f.matrix.scale(&rat(c)));
        }
    }
    BilinearForm { matrix: m }
}

/// Decides whether some combination of `forms` is nondegenerate.
///
/// First two necessary conditions are checked (trivial common radical, and
/// `dim c + dim C²g = n`, since a nondegenerate invariant form makes the
/// center the orthogonal of `C²g`). Then `det(Σ tₐBₐ)`, a polynomial of degree
/// `n`, is evaluated on `{0,…,n}^m` in order of increasing max-norm; a nonzero
/// polynomial with every partial degree `≤ n` cannot vanish on that whole grid,
/// so exhausting it proves degeneracy. When the grid exceeds the budget we fall
/// back to pseudo-random points with large coordinates.
pub fn quadratic_search(alg: &LieAlgebra, forms: &[BilinearForm]) -> QuadraticVerdict {
    let n = alg.dim();
    if n == 0 {
        return QuadraticVerdict {
            quadratic: true,
            witness: Some(BilinearForm::zero(0)),
            reason: "zero algebra".into(),
            certain: true,
        };
    }
    let no = |reason: &str| QuadraticVerdict {
        quadratic: false,
        witness: None,
        reason: reason.into(),
        certain: true,
    };
    if forms.is_empty() {
        return no("no nonzero invariant forms");
    }
    let radical = common_radical(forms);
    if radical.dim() > 0 {
        return no("invariant forms share a nonzero radical");
    }
    if alg.center().dim() + alg.derived_subalgebra().dim() != n {
        return no("dim c + dim C²g != dim g");
    }
    let m = forms.len();
    let found = |t: &[i64]| {
        let b = combine(forms, t);
        b.is_nondegenerate().then_some(b)
    };
    let yes = |b: BilinearForm, how: &str| QuadraticVerdict {
        quadratic: true,
        witness: Some(b),
        reason: how.into(),
        certain: true,
    };
    // Single basis forms first: cheap and usually enough.
    for a in 0..m {
        let mut t = vec![0; m];
        t[a] = 1;
        if let Some(b) = found(&t) {
            return yes(b, "basis form is nondegenerate");
        }
    }
    let side = (n + 1) as u128;
    let total = side.checked_pow(m as u32);
    let exhaustive = total.is_some_and(|t| t <= GRID_BUDGET as u128);
    let mut evaluated = 0usize;
    for shell in 1..=n as i64 {
        for t in shell_points(m, shell) {
            if evaluated >= GRID_BUDGET {
                break;
            }
            evaluated += 1;
            if let Some(b) = found(&t) {
                return yes(b, "grid search");
            }
        }
    }
    if exhaustive {
        return no("determinant vanishes on the full grid {0..n}^m");
    }
    // Deterministic xorshift points with coordinates up to 2^31.
    let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
    for _ in 0..RANDOM_POINTS {
        let t: Vec<i64> = (0..m)
            .map(|_| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state >> 33) as i64
            })
            .collect();
        if let Some(b) = found(&t) {
            return yes(b, "random point");
        }
    }
    QuadraticVerdict {
        quadratic: false,
        witness: None,
        reason: format!("determinant vanished at {RANDOM_POINTS} pseudo-random points"),
        certain: false,
    }
}

/// Points of `{0..s}^m` with max-norm exactly `s`, lexicographic.
fn shell_points(m: usize, s: i64) -> impl Iterator<Item = Vec<i64>> {
    let mut cur = vec![0i64; m];
    let mut done = m == 0;
    std::iter::from_fn(move || loop {
        if done {
            return None;
        }
        let out = cur.clone();
        // Advance odometer over {0..s}^m.
        let mut pos = m;
        loop {
            if pos == 0 {
                done = true;
                break;
            }
            pos -= 1;
            if cur[pos] < s {
                cur[pos] += 1;
                for c in cur.iter_mut().skip(pos + 1) {
                    *c = 0;
                }
                break;
            }
        }
        if out.contains(&s) {
            return Some(out);
        }
    })
}

/// `∩ₐ ker Bₐ`.
pub fn common_radical(forms: &[BilinearForm]) -> Subspace {
    let n = forms.first().map_or(0, BilinearForm::dim);
    let mut e = RowEchelon::new(n);
    for f in forms {
        for i in 0..n {
            e.insert_dense(f.matrix.row(i));
        }
    }
    Subspace::new(n, &e.nullspace())
}

/// Everything the Koszul analysis produces for one algebra.
#[derive(Clone, Debug)]
pub struct KoszulReport {
    pub dim: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
    /// `ℓ = dim g − dim C²g`.
    pub ell: usize,
    pub forms: Vec<BilinearForm>,
    pub ker_basis: Vec<BilinearForm>,
    /// Canonical (echelon) basis of `Im I`.
    pub im_basis: Vec<TriForm>,
    /// `im_sources[i]` is an invariant form with `I_B = im_basis[i]`.
    pub im_sources: Vec<BilinearForm>,
    pub i_null: bool,
    /// Result of the second I-null test, `∩ ker B = C²g`.
    pub i_null_by_radical: bool,
    pub i_exact: bool,
    /// `γ` with `dγ = im_basis[i]`, present when I-exact.
    pub exact_witnesses: Vec<Cochain>,
    pub quadratic: QuadraticVerdict,
}

impl KoszulReport {
    pub fn forms_dim(&self) -> usize {
        self.forms.len()
    }

    pub fn dim_ker(&self) -> usize {
        self.ker_basis.len()
    }

    pub fn dim_im(&self) -> usize {
        self.im_basis.len()
    }

    /// `dim (S²g*)^g = ℓ(ℓ+1)/2 + dim Im I`.
    pub fn dimension_identity_holds(&self) -> bool {
        self.forms_dim() == self.ell * (self.ell + 1) / 2 + self.dim_im()
    }
}

/// `(ker I, Im I)` with preimages for the image basis.
pub fn kernel_and_image(
    alg: &LieAlgebra,
    forms: &[BilinearForm],
) -> (Vec<BilinearForm>, Vec<TriForm>, Vec<BilinearForm>) {
    let n = alg.dim();
    let images: Vec<TriForm> = forms.par_iter().map(|b| koszul_unchecked(alg, b)).collect();
    let len = binom(n, 3);
    let m = forms.len();
    // Rows indexed by 3-form components; columns by forms.
    let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); len];
    for (a, img) in images.iter().enumerate() {
        for (r, x) in img.components().iter().enumerate() {
            if !x.is_zero() {
                rows[r].push((a, x.clone()));
            }
        }
    }
    let rows: Vec<SparseVec> = rows.into_iter().map(SparseVec::from_pairs).collect();
    let mut e = RowEchelon::new(m);
    for r in &rows {
        if !r.is_empty() {
            e.insert(r.clone());
        }
    }
    let combo = |c: &[Rational]| {
        let mut acc = BilinearForm::zero(n);
        for (f, x) in forms.iter().zip(c) {
            if !x.is_zero() {
                acc = acc.add(&f.scale(x));
            }
        }
        acc
    };
    let ker: Vec<BilinearForm> = e.nullspace().iter().map(|c| combo(c)).collect();
    let mut img_e = RowEchelon::new(len);
    for img in &images {
        img_e.insert_dense(img.components());
    }
    let im_basis: Vec<TriForm> = img_e
        .basis()
        .into_iter()
        .map(|v| Cochain::from_components(n, 3, Coefficients::Trivial, v).expect("shape"))
        .collect();
    let sources = im_basis
        .iter()
        .map(|w| {
            let c = exactla::solve_sparse(&rows, m, w.components()).expect("image element has a preimage");
            combo(&c)
        })
        .collect();
    (ker, im_basis, sources)
}

/// Full analysis: forms, `ker I`, `Im I`, I-null (two ways), I-exact with
/// witnesses, and the quadratic decision.
pub fn analyze(alg: &LieAlgebra) -> KoszulReport {
    let n = alg.dim();
    let forms = invariant_forms(alg);
    let derived = alg.derived_subalgebra();
    let center_dim = alg.center().dim();
    let (ker_basis, im_basis, im_sources) = kernel_and_image(alg, &forms);
    let i_null = im_basis.is_empty();
    let i_null_by_radical = if forms.is_empty() {
        derived.dim() == n
    } else {
        common_radical(&forms) == derived
    };
    let witnesses: Vec<Option<Cochain>> = im_basis
        .par_iter()
        .map(|w| cecohom::coboundary_witness(alg, w).ok())
        .collect();
    let i_exact = witnesses.iter().all(Option::is_some);
    let exact_witnesses = if i_exact {
        witnesses.into_iter().flatten().collect()
    } else {
        Vec::new()
    };
    let quadratic = quadratic_search(alg, &forms);
    KoszulReport {
        dim: n,
        derived_dim: derived.dim(),
        center_dim,
        ell: n - derived.dim(),
        forms,
        ker_basis,
        im_basis,
        im_sources,
        i_null,
        i_null_by_radical,
        i_exact,
        exact_witnesses,
        quadratic,
    }
}

pub fn is_i_null(alg: &LieAlgebra) -> bool {
    let forms = invariant_forms(alg);
    forms.iter().all(|b| koszul_unchecked(alg, b).is_zero())
}

/// `Some(witnesses)` when every `Im I` basis element is exact.
pub fn i_exact_witnesses(alg: &LieAlgebra) -> Option<Vec<Cochain>> {
    let forms = invariant_forms(alg);
    let (_, im, _) = kernel_and_image(alg, &forms);
    im.iter().map(|w| cecohom::coboundary_witness(alg, w).ok()).collect()
}

pub fn is_quadratic(alg: &LieAlgebra) -> QuadraticVerdict {
    quadratic_search(alg, &invariant_forms(alg))
}

/// `I_B − d(ω¹∧f) − I_{B₂}∘(π₂×π₂×π₂)` for `f = B(·, x₁)`, `g₂ = span(x₂,…,xₙ)`
/// and `B₂ = B|g₂`. The result is zero for every invariant `B`.
pub fn codim_one_defect(alg: &LieAlgebra, b: &BilinearForm) -> Result<TriForm, KoszulError> {
    let n = alg.dim();
    let rest: Vec<usize> = (1..n).collect();
    let g2 = alg.basis_subalgebra(&rest).map_err(|_| KoszulError::NotCodimOneIdeal)?;
    if !alg.is_ideal(&Subspace::coordinate(n, &rest)) {
        return Err(KoszulError::NotCodimOneIdeal);
    }
    let ib = koszul_form(alg, b)?;
    let f_comps: QVector = (0..n).map(|i| b.get(i, 0).clone()).collect();
    let f = Cochain::from_components(n, 1, Coefficients::Trivial, f_comps).expect("shape");
    let w1f = Cochain::monomial(n, &[0]).wedge(&f);
    let dw = cecohom::d(alg, &w1f);
    let b2 = b.restrict(&rest);
    let ib2 = koszul_form(&g2, &b2)?;
    Ok(ib.sub(&dw).sub(&ib2.extend(n, &rest)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(src: &str) -> LieAlgebra {
        LieAlgebra::from_relations(src).unwrap()
    }

    fn g54() -> LieAlgebra {
        alg("dim 5\n[1,2]=3\n[1,3]=4\n[2,3]=5")
    }

    fn diamond() -> LieAlgebra {
        alg("dim 4\n[1,2]=3\n[1,3]=-2\n[2,3]=4")
    }

    #[test]
    fn pair_index_is_dense() {
        for n in 1..7 {
            let mut k = 0;
            for i in 0..n {
                for j in i..n {
                    assert_eq!(pair_index(n, i, j), k);
                    k += 1;
                }
            }
        }
    }

    #[test]
    fn abelian_forms_are_everything() {
        for n in 0..5 {
            let a = LieAlgebra::abelian(n);
            let r = analyze(&a);
            assert_eq!(r.forms_dim(), n * (n + 1) / 2);
            assert!(r.i_null && r.i_null_by_radical);
            assert_eq!(r.dim_im(), 0);
        }
    }

    #[test]
    fn g54_koszul() {
        let g = g54();
        let r = analyze(&g);
        assert_eq!(r.forms_dim(), 4);
        assert_eq!(r.ell, 2);
        assert_eq!(r.dim_ker(), 3);
        assert_eq!(r.dim_im(), 1);
        assert!(!r.i_null && !r.i_null_by_radical);
        assert!(r.i_exact);
        assert!(r.quadratic.quadratic);
        let b = BilinearForm::from_terms(5, &[(0, 4, 1), (1, 3, -1), (2, 2, 1)]);
        assert!(is_invariant(&g, &b));
        assert_eq!(koszul_form(&g, &b).unwrap(), Cochain::monomial(5, &[0, 1, 2]));
        assert_eq!(r.im_basis[0], Cochain::monomial(5, &[0, 1, 2]));
    }

    #[test]
    fn diamond_koszul() {
        let g = diamond();
        let b = BilinearForm::from_terms(4, &[(0, 3, 1), (1, 1, 1), (2, 2, 1)]);
        assert_eq!(koszul_form(&g, &b).unwrap(), Cochain::monomial(4, &[0, 1, 2]));
        let r = analyze(&g);
        assert_eq!(r.dim_im(), 1);
        assert!(r.i_exact && r.quadratic.quadratic);
    }

    #[test]
    fn non_invariant_rejected() {
        // Forms pulled back from g/C²g are invariant; ω³⊗ω³ alone is not.
        assert!(is_invariant(&g54(), &BilinearForm::from_terms(5, &[(0, 0, 1)])));
        let b = BilinearForm::from_terms(5, &[(2, 2, 1)]);
        assert!(matches!(koszul_form(&g54(), &b), Err(KoszulError::NotInvariant { .. })));
    }

    #[test]
    fn heisenberg_not_quadratic() {
        let h3 = alg("dim 3\n[1,2]=3");
        let r = analyze(&h3);
        assert!(r.i_null && !r.quadratic.quadratic && r.quadratic.certain);
    }

    #[test]
    fn shell_points_cover_grid() {
        let mut all: Vec<Vec<i64>> = (1..=3).flat_map(|s| shell_points(2, s)).collect();
        all.sort();
        assert_eq!(all.len(), 15);
        assert!(shell_points(3, 1).all(|p| p.iter().all(|&x| x <= 1)));
    }

    #[test]
    fn codim_one_identity_g54() {
        let g = g54();
        for b in invariant_forms(&g) {
            assert!(codim_one_defect(&g, &b).unwrap().is_zero());
        }
    }
}

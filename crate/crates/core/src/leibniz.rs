//! Leibniz cochains `Hom(g^{⊗k}, g)` and the decomposition
//! `HL²(g,g) = H²(g,g) ⊕ ZL²₀(g,g) ⊕ C` with `ZL²₀ = c ⊗ ker I` and
//! `C ≅ (c ⊗ Im I) ∩ B³(g,g)`.

use num_traits::Zero;
use thiserror::Error;

use crate::cecohom::{self, coboundary_rows, AltIndex, Coefficients, Cochain, FullIndex, TupleIndex};
use crate::combin::binom;
use crate::exactla::{is_zero_vec, zero_vec, QVector, Rational};
use crate::koszul;
use crate::liealg::LieAlgebra;

/// Highest degree accepted by [`delta`].
pub const MAX_DELTA_DEGREE: usize = 3;
/// Largest dimension for which `H²(g,g)` and the coupled space are computed.
pub const HL2_MAX_DIM: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LeibnizError {
    #[error("Leibniz coboundary only implemented up to degree {MAX_DELTA_DEGREE}; got {0}")]
    DegreeTooHigh(usize),
    #[error("HL² computations are limited to dim <= {max}; got dim {dim}")]
    TooLarge { dim: usize, max: usize },
    #[error("cochain shape mismatch")]
    Shape,
}

/// Multilinear map `g^{⊗k} → g`, no symmetry imposed. Component
/// `(t, (i₁,…,i_k))` is the `x_t`-coordinate of `ψ(x_{i₁},…,x_{i_k})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizCochain {
    dim: usize,
    degree: usize,
    components: QVector,
}

impl LeibnizCochain {
    pub fn zero(dim: usize, degree: usize) -> Self {
        LeibnizCochain {
            dim,
            degree,
            components: zero_vec(dim * dim.pow(degree as u32)),
        }
    }

    pub fn from_components(dim: usize, degree: usize, components: QVector) -> Result<Self, LeibnizError> {
        if components.len() != dim * dim.pow(degree as u32) {
            return Err(LeibnizError::Shape);
        }
        Ok(LeibnizCochain {
            dim,
            degree,
            components,
        })
    }

    fn slot(&self, target: usize, tuple: &[usize]) -> usize {
        target * self.dim.pow(self.degree as u32) + tuple.iter().fold(0, |acc, &x| acc * self.dim + x)
    }

    pub fn get(&self, target: usize, tuple: &[usize]) -> &Rational {
        &self.components[self.slot(target, tuple)]
    }

    pub fn set(&mut self, target: usize, tuple: &[usize], x: Rational) {
        let s = self.slot(target, tuple);
        self.components[s] = x;
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &[Rational] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.components)
    }

    /// Expands an alternating adjoint cochain to all argument tuples.
    pub fn from_alternating(c: &Cochain) -> Self {
        assert_eq!(c.coefficients(), Coefficients::Adjoint);
        let (n, k) = (c.dim(), c.degree());
        let full = FullIndex::new(n, k);
        let mut out = Self::zero(n, k);
        for idx in 0..full.len() {
            let t = full.tuple(idx);
            for target in 0..n {
                let v = c.eval_target(target, &t);
                if !v.is_zero() {
                    out.set(target, &t, v);
                }
            }
        }
        out
    }

    /// Values on increasing tuples, as an alternating adjoint cochain (only
    /// meaningful when `self` is alternating).
    pub fn to_alternating(&self) -> Cochain {
        let (n, k) = (self.dim, self.degree);
        let alt = AltIndex::new(n, k);
        let mut comps = Vec::with_capacity(n * alt.len());
        for target in 0..n {
            for idx in 0..alt.len() {
                comps.push(self.get(target, &alt.tuple(idx)).clone());
            }
        }
        Cochain::from_components(n, k, Coefficients::Adjoint, comps).expect("shape")
    }
}

/// `δψ`, for degree at most [`MAX_DELTA_DEGREE`].
pub fn delta(alg: &LieAlgebra, psi: &LeibnizCochain) -> Result<LeibnizCochain, LeibnizError> {
    let n = alg.dim();
    let k = psi.degree;
    if k > MAX_DELTA_DEGREE {
        return Err(LeibnizError::DegreeTooHigh(k));
    }
    if psi.dim != n {
        return Err(LeibnizError::Shape);
    }
    let rows = coboundary_rows(alg, Coefficients::Adjoint, &FullIndex::new(n, k), &FullIndex::new(n, k + 1));
    Ok(LeibnizCochain {
        dim: n,
        degree: k + 1,
        components: rows.iter().map(|r| r.dot(&psi.components)).collect(),
    })
}

/// Basis of `ZL²₀ = c ⊗ ker I`: `ψ(x_a, x_b) = B(x_a, x_b)·z`.
pub fn zl2_0(alg: &LieAlgebra) -> Vec<LeibnizCochain> {
    let n = alg.dim();
    let center = alg.center();
    if center.dim() == 0 {
        return Vec::new();
    }
    let forms = koszul::invariant_forms(alg);
    let (ker, _, _) = koszul::kernel_and_image(alg, &forms);
    let mut out = Vec::new();
    for z in center.basis() {
        for b in &ker {
            let mut psi = LeibnizCochain::zero(n, 2);
            for a in 0..n {
                for bb in 0..n {
                    let v = b.get(a, bb);
                    if v.is_zero() {
                        continue;
                    }
                    for (t, zt) in z.iter().enumerate() {
                        if !zt.is_zero() {
                            psi.set(t, &[a, bb], v * zt);
                        }
                    }
                }
            }
            out.push(psi);
        }
    }
    out
}

/// Vectors `z ⊗ ω` in the adjoint layout of `g ⊗ Λ³g*`.
fn center_tensor_image(alg: &LieAlgebra) -> Vec<QVector> {
    let n = alg.dim();
    let center = alg.center();
    if center.dim() == 0 {
        return Vec::new();
    }
    let forms = koszul::invariant_forms(alg);
    let (_, im, _) = koszul::kernel_and_image(alg, &forms);
    let len = binom(n, 3);
    let mut out = Vec::new();
    for z in center.basis() {
        for w in &im {
            let mut v = zero_vec(n * len);
            for (t, zt) in z.iter().enumerate() {
                if zt.is_zero() {
                    continue;
                }
                for (idx, x) in w.components().iter().enumerate() {
                    if !x.is_zero() {
                        v[t * len + idx] = zt * x;
                    }
                }
            }
            out.push(v);
        }
    }
    out
}

/// `dim (c ⊗ Im I) ∩ B³(g,g)`.
pub fn coupled_dim(alg: &LieAlgebra) -> Result<usize, LeibnizError> {
    let a = center_tensor_image(alg);
    if a.is_empty() {
        return Ok(0);
    }
    let n = alg.dim();
    if n > HL2_MAX_DIM {
        return Err(LeibnizError::TooLarge { dim: n, max: HL2_MAX_DIM });
    }
    // dim(A ∩ B) = dim A − (rank(A + B) − rank B).
    let mut e = cecohom::coboundary_space(alg, 3, Coefficients::Adjoint);
    let mut grew = 0;
    for v in &a {
        if e.insert_dense(v) {
            grew += 1;
        }
    }
    Ok(a.len() - grew)
}

/// Basis of `(c ⊗ Im I) ∩ B³(g,g)` through the explicit intersection routine;
/// slower than [`coupled_dim`], used to cross-check it.
pub fn coupled_space(alg: &LieAlgebra) -> Result<Vec<QVector>, LeibnizError> {
    let a = center_tensor_image(alg);
    if a.is_empty() {
        return Ok(Vec::new());
    }
    let n = alg.dim();
    if n > HL2_MAX_DIM {
        return Err(LeibnizError::TooLarge { dim: n, max: HL2_MAX_DIM });
    }
    let b = cecohom::coboundary_space(alg, 3, Coefficients::Adjoint).basis();
    Ok(crate::exactla::intersect(&a, &b))
}

pub fn is_uncoupling(alg: &LieAlgebra) -> Result<bool, LeibnizError> {
    Ok(coupled_dim(alg)? == 0)
}

/// `dim HL²(g,g) = dim H²(g,g) + dim ZL²₀ + dim C`.
pub fn hl2_dim(alg: &LieAlgebra) -> Result<usize, LeibnizError> {
    let n = alg.dim();
    if n > HL2_MAX_DIM {
        return Err(LeibnizError::TooLarge { dim: n, max: HL2_MAX_DIM });
    }
    let h2 = cecohom::cohomology_dim(alg, 2, Coefficients::Adjoint);
    Ok(h2 + zl2_0(alg).len() + coupled_dim(alg)?)
}

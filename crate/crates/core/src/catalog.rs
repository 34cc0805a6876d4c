//! Named algebras with stated relations, parametric families, and the
//! published facts each one is checked against.
//!
//! Names: `abelian:n`, `heisenberg:n` (odd n ≥ 3), `filiform:n` (n ≥ 3),
//! `free2step:m` (2 ≤ m ≤ 5), `g3`, `g4`, `g54`, `g54xc`, `g54xc2`, `g724`,
//! `g618`, `g2plus`, `f4plus`, `e6plus`, `e7plus`, `e8plus`, `diamond`,
//! `g54xg54`, `c_x_g54sq`, `nil:<T><r>` and `borel:<T><r>`.

use thiserror::Error;

use crate::cecohom::Cochain;
use crate::exactla::{rat, SparseVec};
use crate::gcm::Gcm;
use crate::koszul::BilinearForm;
use crate::liealg::LieAlgebra;
use crate::rootkit::{self, RootError, RootType};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown algebra '{0}'")]
    UnknownName(String),
    #[error("bad parameters for '{0}'")]
    BadParameters(String),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// A 3-form or 2-form given by 1-based index tuples and integer coefficients.
pub type FormTerms = &'static [(&'static [usize], i64)];
/// A symmetric form given by 1-based `(i, j, c)`; `i ≠ j` means `c ω^i⊙ω^j`.
pub type SymTerms = &'static [(usize, usize, i64)];

/// Published facts about a catalog entry. `None` means nothing is stated.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub name: String,
    pub dim: Option<usize>,
    pub forms_dim: Option<usize>,
    pub dim_im: Option<usize>,
    pub i_null: Option<bool>,
    pub i_exact: Option<bool>,
    pub quadratic: Option<bool>,
    /// Basis of `(S²g*)^g / ker I` when it is one-dimensional.
    pub basis_form: Option<SymTerms>,
    pub i_b: Option<FormTerms>,
    /// `γ` with `dγ = I_B`.
    pub witness: Option<FormTerms>,
    /// Generators (1-based) and the GCM type tag.
    pub gcm: Option<(Vec<usize>, String)>,
    pub adjoint_betti: Option<Vec<usize>>,
    pub zl2_0_dim: Option<usize>,
}

impl Expected {
    fn new(name: &str) -> Self {
        Expected {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn basis_form_value(&self, n: usize) -> Option<BilinearForm> {
        self.basis_form.map(|t| sym_form(n, t))
    }

    pub fn i_b_value(&self, n: usize) -> Option<Cochain> {
        self.i_b.map(|t| form3(n, t))
    }

    pub fn witness_value(&self, n: usize) -> Option<Cochain> {
        self.witness.map(|t| form_any(n, t))
    }

    /// Labels of the stated facts, for listings.
    pub fn fact_labels(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        let checks: [(bool, &'static str); 11] = [
            (self.forms_dim.is_some(), "forms_dim"),
            (self.dim_im.is_some(), "dim_Im_I"),
            (self.i_null.is_some(), "I_null"),
            (self.i_exact.is_some(), "I_exact"),
            (self.quadratic.is_some(), "quadratic"),
            (self.basis_form.is_some(), "basis_form"),
            (self.i_b.is_some(), "I_B"),
            (self.witness.is_some(), "witness"),
            (self.gcm.is_some(), "gcm"),
            (self.adjoint_betti.is_some(), "adjoint_betti"),
            (self.zl2_0_dim.is_some(), "ZL2_0"),
        ];
        for (present, label) in checks {
            if present {
                v.push(label);
            }
        }
        v
    }
}

pub fn sym_form(n: usize, terms: SymTerms) -> BilinearForm {
    let t: Vec<(usize, usize, i64)> = terms.iter().map(|&(i, j, c)| (i - 1, j - 1, c)).collect();
    BilinearForm::from_terms(n, &t)
}

fn form_any(n: usize, terms: FormTerms) -> Cochain {
    let degree = terms.first().map_or(0, |t| t.0.len());
    let t: Vec<(Vec<usize>, _)> = terms.iter().map(|(idx, c)| (idx.iter().map(|i| i - 1).collect(), rat(*c))).collect();
    let refs: Vec<(&[usize], _)> = t.iter().map(|(i, c)| (i.as_slice(), c.clone())).collect();
    Cochain::form(n, degree, &refs)
}

fn form3(n: usize, terms: FormTerms) -> Cochain {
    form_any(n, terms)
}

const G54: &str = "dim 5\nname g54\n[1,2] = 3\n[1,3] = 4\n[2,3] = 5\n";
const G724: &str = "dim 7\nname g724\n[1,2] = 3\n[1,3] = 4\n[1,4] = 5\n[1,5] = 6\n[2,5] = -7\n[3,4] = 7\n";
const DIAMOND: &str = "dim 4\nname diamond\n[1,2] = 3\n[1,3] = -2\n[2,3] = 4\n";
const G54XG54: &str = "dim 10\nname g54xg54\n[1,2] = 5\n[1,5] = 6\n[2,5] = 7\n[3,4] = 8\n[3,8] = 9\n[4,8] = 10\n";
const G618: &str = "dim 6\nname g618\n[1,2] = 3\n[1,3] = 2*4\n[1,4] = -3*5\n[2,5] = -6\n[3,4] = -3*6\n";

const G54_FORM: SymTerms = &[(1, 5, 1), (2, 4, -1), (3, 3, 1)];
const W123: FormTerms = &[(&[1, 2, 3], 1)];
const W15: FormTerms = &[(&[1, 5], 1)];

/// Fixed names, in listing order.
pub const FIXED_NAMES: &[&str] = &[
    "g3", "g4", "g54", "g54xc", "g54xc2", "g724", "g618", "g2plus", "f4plus", "e6plus", "e7plus", "e8plus", "diamond",
    "g54xg54", "c_x_g54sq",
];

/// Family patterns accepted by [`get`].
pub const FAMILIES: &[&str] = &[
    "abelian:n",
    "heisenberg:n",
    "filiform:n",
    "free2step:m",
    "nil:<T><r>",
    "borel:<T><r>",
];

/// Concrete entries covered by listings and table reports.
pub fn builtin_entries() -> Vec<String> {
    let mut v: Vec<String> = FIXED_NAMES.iter().map(|s| s.to_string()).collect();
    v.extend((1..=4).map(|n| format!("abelian:{n}")));
    v.extend([3, 5, 7].iter().map(|n| format!("heisenberg:{n}")));
    v.extend((3..=7).map(|n| format!("filiform:{n}")));
    v.extend((2..=5).map(|m| format!("free2step:{m}")));
    v.extend((1..=5).map(|r| format!("nil:A{r}")));
    v.extend((2..=4).map(|r| format!("nil:B{r}")));
    v.extend((2..=4).map(|r| format!("nil:C{r}")));
    v.extend((2..=4).map(|r| format!("nil:D{r}")));
    v.extend((1..=3).map(|r| format!("borel:A{r}")));
    v.push("borel:G2".into());
    v
}

/// Maps table-style keys (`5,4`, `g5,4xc`, `g_{7,2.4}`) to catalog names.
fn alias(name: &str) -> Option<&'static str> {
    Some(match normalize_key(name).as_str() {
        "3" => "g3",
        "4" => "g4",
        "5,4" => "g54",
        "5,4xc" => "g54xc",
        "5,4xc2" => "g54xc2",
        "6,18" => "g618",
        "7,2.4" => "g724",
        _ => return None,
    })
}

/// Canonical key for table lookups: lower case, `g`, braces, underscores,
/// spaces and a trailing `×ℂ` spelled `xc`.
pub fn normalize_key(s: &str) -> String {
    let s = s.trim().to_lowercase().replace("\\times", "x").replace('×', "x").replace("\\mathbb{c}", "c").replace('ℂ', "c");
    let s: String = s.chars().filter(|c| !matches!(c, '{' | '}' | '_' | ' ' | '$' | '\\' | '^')).collect();
    let s = s.replace("mathbbc", "c");
    s.strip_prefix("mathfrakg").or_else(|| s.strip_prefix('g')).unwrap_or(&s).to_string()
}

fn parse_param(name: &str, s: &str) -> Result<usize, CatalogError> {
    s.parse().map_err(|_| CatalogError::BadParameters(name.to_string()))
}

fn parse_root(name: &str, s: &str) -> Result<(RootType, usize), CatalogError> {
    RootType::parse(s).map_err(|e| match e {
        RootError::InvalidType(_) => CatalogError::UnknownName(name.to_string()),
        other => CatalogError::Root(other),
    })
}

pub fn heisenberg(n: usize) -> Result<LieAlgebra, CatalogError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(CatalogError::BadParameters(format!("heisenberg:{n}")));
    }
    let k = (n - 1) / 2;
    let rels = (0..k).map(|i| ((i, k + i), SparseVec::from_pairs([(n - 1, rat(1))])));
    Ok(LieAlgebra::new(n, rels).expect("Heisenberg").with_name(format!("heisenberg:{n}")))
}

/// `[x₁, xᵢ] = x_{i+1}` for `2 ≤ i < n`.
pub fn filiform(n: usize) -> Result<LieAlgebra, CatalogError> {
    if n < 3 {
        return Err(CatalogError::BadParameters(format!("filiform:{n}")));
    }
    let rels = (1..n - 1).map(|i| ((0, i), SparseVec::from_pairs([(i + 1, rat(1))])));
    Ok(LieAlgebra::new(n, rels).expect("filiform").with_name(format!("filiform:{n}")))
}

/// Free 2-step nilpotent on `m` generators: `[xᵢ, xⱼ]` (i < j, lex) is the
/// next basis vector after the generators.
pub fn free2step(m: usize) -> Result<LieAlgebra, CatalogError> {
    if !(2..=5).contains(&m) {
        return Err(CatalogError::BadParameters(format!("free2step:{m}")));
    }
    let mut rels = Vec::new();
    let mut k = m;
    for i in 0..m {
        for j in i + 1..m {
            rels.push(((i, j), SparseVec::from_pairs([(k, rat(1))])));
            k += 1;
        }
    }
    Ok(LieAlgebra::new(k, rels).expect("free 2-step").with_name(format!("free2step:{m}")))
}

fn parsed(text: &str) -> LieAlgebra {
    LieAlgebra::from_relations(text).expect("catalog relations are valid")
}

/// Builds a catalog algebra by name.
pub fn get(name: &str) -> Result<LieAlgebra, CatalogError> {
    let name = name.trim();
    if let Some((family, param)) = name.split_once(':') {
        let alg = match family {
            "abelian" => {
                let n = parse_param(name, param)?;
                if n == 0 {
                    return Err(CatalogError::BadParameters(name.to_string()));
                }
                LieAlgebra::abelian(n).with_name(name)
            }
            "heisenberg" => heisenberg(parse_param(name, param)?)?,
            "filiform" => filiform(parse_param(name, param)?)?,
            "free2step" => free2step(parse_param(name, param)?)?,
            "nil" => {
                let (t, r) = parse_root(name, param)?;
                rootkit::nilradical(t, r)?.into_algebra().with_name(name)
            }
            "borel" => {
                let (t, r) = parse_root(name, param)?;
                rootkit::borel(t, r)?.with_name(name)
            }
            _ => return Err(CatalogError::UnknownName(name.to_string())),
        };
        return Ok(alg);
    }
    let g54 = || parsed(G54);
    let alg = match name {
        "g3" => heisenberg(3)?.with_name("g3"),
        "g4" => filiform(4)?.with_name("g4"),
        "g54" => g54(),
        "g54xc" => g54().direct_product(&LieAlgebra::abelian(1)).with_name("g54xc"),
        "g54xc2" => g54().direct_product(&LieAlgebra::abelian(2)).with_name("g54xc2"),
        "g724" => parsed(G724),
        "g618" => parsed(G618),
        "g2plus" => rootkit::nilradical_exceptional(RootType::G, 2)?.with_name("g2plus"),
        "f4plus" => rootkit::nilradical_exceptional(RootType::F, 4)?.with_name("f4plus"),
        "e6plus" => rootkit::nilradical_exceptional(RootType::E, 6)?.with_name("e6plus"),
        "e7plus" => rootkit::nilradical_exceptional(RootType::E, 7)?.with_name("e7plus"),
        "e8plus" => rootkit::nilradical_exceptional(RootType::E, 8)?.with_name("e8plus"),
        "diamond" => parsed(DIAMOND),
        "g54xg54" => parsed(G54XG54),
        // The extra central direction is appended as x11.
        "c_x_g54sq" => parsed(G54XG54).direct_product(&LieAlgebra::abelian(1)).with_name("c_x_g54sq"),
        other => match alias(other) {
            Some(n) => return get(n),
            None => return Err(CatalogError::UnknownName(other.to_string())),
        },
    };
    Ok(alg)
}

/// Published facts for a catalog name.
pub fn expected(name: &str) -> Result<Expected, CatalogError> {
    let name = name.trim();
    let alg = get(name)?;
    let mut e = Expected::new(name);
    e.dim = Some(alg.dim());
    if let Some((family, param)) = name.split_once(':') {
        match family {
            "abelian" => e.i_null = Some(true),
            // Every algebra of dimension ≤ 7 outside the non-I-null list is
            // I-null.
            "heisenberg" | "filiform" if alg.dim() <= 7 => e.i_null = Some(true),
            "free2step" => match param {
                "4" => {
                    e.dim_im = Some(4);
                    e.i_exact = Some(true);
                    e.quadratic = Some(false);
                }
                "5" => {
                    e.dim_im = Some(10);
                    e.i_exact = Some(true);
                    e.quadratic = Some(false);
                }
                // m = 3 is not I-null (B pairs V with Λ²V); nothing stated.
                "2" => e.i_null = Some(true),
                _ => {}
            },
            "nil" | "borel" => e.i_null = Some(true),
            _ => {}
        }
        if name == "filiform:5" {
            e.gcm = Some((vec![1, 2], "finite:G2".into()));
        }
        return Ok(e);
    }
    let name = alias(name).unwrap_or(name);
    let g54_like = |e: &mut Expected, forms: usize| {
        e.forms_dim = Some(forms);
        e.dim_im = Some(1);
        e.i_null = Some(false);
        e.i_exact = Some(true);
        e.quadratic = Some(true);
        e.basis_form = Some(G54_FORM);
        e.i_b = Some(W123);
        e.witness = Some(W15);
    };
    match name {
        "g3" => {
            e.i_null = Some(true);
            e.gcm = Some((vec![1, 2], "finite:A2".into()));
        }
        "g4" => {
            e.i_null = Some(true);
            e.gcm = Some((vec![1, 2], "finite:C2".into()));
        }
        "g54" => {
            g54_like(&mut e, 4);
            e.gcm = Some((vec![1, 2], "affine:A1~1".into()));
            e.zl2_0_dim = Some(6);
        }
        "g54xc" => g54_like(&mut e, 7),
        "g54xc2" => g54_like(&mut e, 11),
        "g724" => {
            e.forms_dim = Some(4);
            e.dim_im = Some(1);
            e.i_null = Some(false);
            e.i_exact = Some(true);
            e.quadratic = Some(true);
            e.basis_form = Some(&[(1, 7, 1), (2, 6, 1), (3, 5, -1), (4, 4, 1)]);
            e.i_b = Some(&[(&[1, 3, 4], 1), (&[1, 2, 5], -1)]);
            e.witness = Some(&[(&[1, 7], 1)]);
            e.gcm = Some((vec![1, 2], "affine:A2~2".into()));
        }
        "g618" | "g2plus" => {
            e.i_null = Some(true);
            e.gcm = Some((vec![1, 2], "finite:G2".into()));
            e.adjoint_betti = Some(vec![1, 4, 7, 8, 7, 5, 2]);
        }
        "f4plus" | "e6plus" | "e7plus" | "e8plus" => e.i_null = Some(true),
        "diamond" => {
            e.dim_im = Some(1);
            e.i_null = Some(false);
            e.i_exact = Some(true);
            e.quadratic = Some(true);
            e.basis_form = Some(&[(1, 4, 1), (2, 2, 1), (3, 3, 1)]);
            e.i_b = Some(W123);
            e.witness = Some(&[(&[1, 4], 1)]);
        }
        "g54xg54" | "c_x_g54sq" => {}
        other => return Err(CatalogError::UnknownName(other.to_string())),
    }
    Ok(e)
}

/// A row of the non-I-null table; `keys` are normalized algebra keys.
#[derive(Clone, Debug)]
pub struct KoszulRow {
    pub keys: &'static [&'static str],
    pub forms_dim: usize,
    pub basis_form: SymTerms,
    pub i_b: FormTerms,
    pub witness: FormTerms,
    /// Sign in `I_B = ± dγ`.
    pub witness_sign: i64,
    pub quadratic: bool,
}

const F15: SymTerms = G54_FORM;
const F16_A: SymTerms = &[(1, 6, 1), (2, 5, -1), (3, 4, 1)];
const F16_B: SymTerms = &[(1, 6, 1), (2, 4, -1), (3, 3, 1)];

/// Non-I-null nilpotent algebras of dimension ≤ 7 and their Koszul data.
pub const KOSZUL_TABLE: &[KoszulRow] = &[
    KoszulRow { keys: &["5,4"], forms_dim: 4, basis_form: F15, i_b: W123, witness: W15, witness_sign: 1, quadratic: true },
    KoszulRow { keys: &["6,3"], forms_dim: 7, basis_form: F16_A, i_b: W123, witness: &[(&[1, 6], 1)], witness_sign: 1, quadratic: true },
    KoszulRow { keys: &["6,14"], forms_dim: 4, basis_form: F16_B, i_b: W123, witness: &[(&[1, 4], 1)], witness_sign: -1, quadratic: false },
    KoszulRow { keys: &["5,4xc"], forms_dim: 7, basis_form: F15, i_b: W123, witness: W15, witness_sign: 1, quadratic: true },
    KoszulRow { keys: &["5,4xc2"], forms_dim: 11, basis_form: F15, i_b: W123, witness: W15, witness_sign: 1, quadratic: true },
    KoszulRow { keys: &["6,3xc"], forms_dim: 11, basis_form: F16_A, i_b: W123, witness: &[(&[1, 6], 1)], witness_sign: 1, quadratic: true },
    KoszulRow {
        keys: &["7,0.4", "7,0.5", "7,0.6", "7,1.02", "7,1.10", "7,1.13", "7,1.14", "7,1.17"],
        forms_dim: 4,
        basis_form: F15,
        i_b: W123,
        witness: W15,
        witness_sign: 1,
        quadratic: false,
    },
    KoszulRow { keys: &["7,1.03"], forms_dim: 4, basis_form: F16_B, i_b: W123, witness: &[(&[1, 6], 1)], witness_sign: 1, quadratic: false },
    KoszulRow {
        keys: &["7,2.2"],
        forms_dim: 7,
        basis_form: &[(1, 4, 1), (2, 6, -1), (3, 5, 1)],
        i_b: W123,
        witness: &[(&[1, 4], 1)],
        witness_sign: 1,
        quadratic: false,
    },
    KoszulRow {
        keys: &["7,2.4"],
        forms_dim: 4,
        basis_form: &[(1, 7, 1), (2, 6, 1), (3, 5, -1), (4, 4, 1)],
        i_b: &[(&[1, 3, 4], 1), (&[1, 2, 5], -1)],
        witness: &[(&[1, 7], 1)],
        witness_sign: 1,
        quadratic: true,
    },
    KoszulRow {
        keys: &["7,2.5", "7,2.6", "7,2.7", "7,2.8", "7,2.9"],
        forms_dim: 4,
        basis_form: F15,
        i_b: W123,
        witness: W15,
        witness_sign: 1,
        quadratic: false,
    },
    KoszulRow {
        keys: &["7,2.18"],
        forms_dim: 7,
        basis_form: &[(1, 6, 1), (2, 5, -1), (4, 4, 1)],
        i_b: &[(&[1, 2, 4], 1)],
        witness: &[(&[1, 6], 1)],
        witness_sign: 1,
        quadratic: false,
    },
    KoszulRow { keys: &["7,2.44", "7,3.6"], forms_dim: 7, basis_form: F16_A, i_b: W123, witness: &[(&[1, 6], 1)], witness_sign: 1, quadratic: false },
    KoszulRow {
        keys: &["7,3.23"],
        forms_dim: 7,
        basis_form: &[(1, 6, 1), (2, 5, -1), (3, 3, 1)],
        i_b: W123,
        witness: &[(&[1, 6], 1)],
        witness_sign: 1,
        quadratic: false,
    },
];

impl KoszulRow {
    pub fn basis_form_value(&self, n: usize) -> BilinearForm {
        sym_form(n, self.basis_form)
    }

    pub fn i_b_value(&self, n: usize) -> Cochain {
        form3(n, self.i_b)
    }

    /// `γ` with `dγ = I_B`, the sign folded in.
    pub fn witness_value(&self, n: usize) -> Cochain {
        form_any(n, self.witness).scale(&rat(self.witness_sign))
    }
}

pub fn koszul_row(key: &str) -> Option<&'static KoszulRow> {
    let k = normalize_key(key);
    let k = k.split('(').next().unwrap_or(&k);
    KOSZUL_TABLE.iter().find(|r| r.keys.contains(&k))
}

/// A row of the Kac–Moody type table.
#[derive(Clone, Debug)]
pub struct GcmRow {
    pub key: String,
    pub gcm: Gcm,
    /// `finite`, `affine`, `hyperbolic` or `nonhyperbolic`.
    pub column: String,
    pub label: String,
    /// Weight spaces of dimension > 1 (generators need reordering by weight).
    pub degenerate: bool,
}

const GCM_TABLE: &str = include_str!("../data/gcm_table.tsv");

pub fn gcm_table() -> Vec<GcmRow> {
    GCM_TABLE
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            GcmRow {
                key: f[0].to_string(),
                gcm: Gcm::parse(f[1]).expect("table GCM"),
                column: f[2].to_string(),
                label: f[3].to_string(),
                degenerate: f[4] == "1",
            }
        })
        .collect()
}

pub fn gcm_row(key: &str) -> Option<GcmRow> {
    let k = normalize_key(key);
    gcm_table().into_iter().find(|r| {
        let rk = normalize_key(&r.key);
        rk == k || rk.split('(').next() == Some(k.as_str())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koszul;

    #[test]
    fn every_builtin_builds() {
        for name in builtin_entries().iter().filter(|n| !matches!(n.as_str(), "e7plus" | "e8plus")) {
            let alg = get(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(alg.check_jacobi().is_none(), "{name}");
            let e = expected(name).unwrap();
            assert_eq!(e.dim, Some(alg.dim()));
        }
    }

    #[test]
    fn families() {
        let f4 = get("filiform:4").unwrap();
        assert_eq!(f4.dim(), 4);
        assert_eq!(f4.constant(0, 1, 2), rat(1));
        assert_eq!(f4.constant(0, 2, 3), rat(1));
        assert_eq!(f4.brackets().count(), 2);
        let h3 = get("heisenberg:3").unwrap();
        assert_eq!(h3.constant(0, 1, 2), rat(1));
        let fr = get("free2step:4").unwrap();
        assert_eq!(fr.dim(), 10);
        assert_eq!(fr.constant(2, 3, 9), rat(1));
        assert_eq!(fr.constant(0, 1, 4), rat(1));
        assert_eq!(get("free2step:5").unwrap().dim(), 15);
    }

    #[test]
    fn bad_names_and_parameters() {
        assert_eq!(get("nope"), Err(CatalogError::UnknownName("nope".into())));
        assert!(matches!(get("filiform:2"), Err(CatalogError::BadParameters(_))));
        assert!(matches!(get("heisenberg:4"), Err(CatalogError::BadParameters(_))));
        assert!(matches!(get("free2step:6"), Err(CatalogError::BadParameters(_))));
        assert!(matches!(get("nil:E5"), Err(CatalogError::Root(_))));
        assert!(matches!(get("nil:Q5"), Err(CatalogError::UnknownName(_))));
    }

    #[test]
    fn aliases() {
        assert_eq!(get("g5,4").unwrap(), get("g54").unwrap());
        assert_eq!(get("g_{7,2.4}").unwrap(), get("g724").unwrap());
        assert_eq!(normalize_key("$\\mathfrak{g}_{5,4} \\times \\mathbb{C}$"), "5,4xc");
    }

    #[test]
    fn g618_is_g2plus() {
        assert_eq!(get("g618").unwrap(), get("g2plus").unwrap());
    }

    #[test]
    fn koszul_table_forms_are_consistent() {
        // Each stated I_B is the Koszul image of the stated form on g54-like
        // rows we can build.
        let g = get("g54").unwrap();
        let row = koszul_row("g5,4").unwrap();
        let ib = koszul::koszul_form(&g, &row.basis_form_value(5)).unwrap();
        assert_eq!(ib, row.i_b_value(5));
        assert_eq!(crate::cecohom::d(&g, &row.witness_value(5)), ib);
        assert!(koszul_row("7,0.4(\\lambda)").is_some());
        assert_eq!(KOSZUL_TABLE.iter().map(|r| r.keys.len()).sum::<usize>(), 26);
    }

    #[test]
    fn gcm_rows_for_catalog() {
        for (name, key) in [("g3", "3"), ("g4", "4"), ("g54", "5,4"), ("g618", "6,18"), ("g724", "7,2.4")] {
            let row = gcm_row(key).unwrap();
            let (gens, tag) = expected(name).unwrap().gcm.unwrap();
            let gens: Vec<usize> = gens.iter().map(|g| g - 1).collect();
            let a = crate::gcm::compute_gcm(&get(name).unwrap(), &gens).unwrap();
            assert_eq!(a, row.gcm, "{name}");
            assert_eq!(crate::gcm::classify(&a).to_string(), tag);
        }
    }
}

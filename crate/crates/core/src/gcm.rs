//! Generalized Cartan matrices of nilpotent Lie algebras and their
//! finite / affine / indefinite classification.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactla::{self, is_zero_vec, ratio, unit_vec, QMatrix, Rational};
use crate::liealg::{LieAlgebra, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GcmError {
    #[error("not a generalized Cartan matrix: {0}")]
    NotAGcm(String),
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("generators do not project to a basis of g/C²g")]
    GeneratorsNotComplementary,
    #[error("generator x{} shares its weight with x{}; weight spaces of dimension > 1 are not supported", .generator + 1, .other + 1)]
    DegenerateWeights { generator: usize, other: usize },
    #[error("generator index {0} out of range")]
    IndexOutOfRange(usize),
}

/// Integer matrix with 2 on the diagonal, nonpositive entries off it, and
/// `a_ij = 0 ⇔ a_ji = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gcm {
    size: usize,
    entries: Vec<i64>,
}

impl Gcm {
    pub fn new(rows: &[Vec<i64>]) -> Result<Self, GcmError> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(GcmError::NotAGcm("matrix is not square".into()));
        }
        for i in 0..size {
            if rows[i][i] != 2 {
                return Err(GcmError::NotAGcm(format!("diagonal entry ({},{}) is not 2", i + 1, i + 1)));
            }
            for j in 0..size {
                if i == j {
                    continue;
                }
                if rows[i][j] > 0 {
                    return Err(GcmError::NotAGcm(format!("entry ({},{}) is positive", i + 1, j + 1)));
                }
                if (rows[i][j] == 0) != (rows[j][i] == 0) {
                    return Err(GcmError::NotAGcm(format!(
                        "entries ({},{}) and ({},{}) differ in vanishing",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(Gcm {
            size,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    /// Parses `2,-1;-1,2` or `[[2,-1],[-1,2]]`.
    pub fn parse(s: &str) -> Result<Self, GcmError> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = cleaned.trim_start_matches('[').trim_end_matches(']');
        let rows: Result<Vec<Vec<i64>>, _> = body
            .split([';', '|'])
            .flat_map(|r| r.split("],["))
            .map(|r| r.trim_matches(|c| c == '[' || c == ']').split(',').map(str::parse::<i64>).collect())
            .collect();
        let rows = rows.map_err(|e| GcmError::NotAGcm(format!("cannot parse '{s}': {e}")))?;
        Self::new(&rows)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.size.max(1)).map(<[i64]>::to_vec).take(self.size).collect()
    }

    pub fn transpose(&self) -> Gcm {
        let n = self.size;
        let mut e = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                e[j * n + i] = self.get(i, j);
            }
        }
        Gcm { size: n, entries: e }
    }

    fn sub(&self, idx: &[usize]) -> Gcm {
        let mut e = Vec::with_capacity(idx.len() * idx.len());
        for &i in idx {
            for &j in idx {
                e.push(self.get(i, j));
            }
        }
        Gcm { size: idx.len(), entries: e }
    }

    fn minor(&self, idx: &[usize]) -> Rational {
        let data: Vec<Vec<i64>> = idx.iter().map(|&i| idx.iter().map(|&j| self.get(i, j)).collect()).collect();
        let refs: Vec<&[i64]> = data.iter().map(Vec::as_slice).collect();
        exactla::determinant(&QMatrix::from_i64(&refs))
    }

    /// Connected components of the Dynkin graph (`i ~ j` iff `a_ij ≠ 0`),
    /// each sorted, ordered by smallest index.
    pub fn components(&self) -> Vec<Vec<usize>> {
        connected_components(self, &(0..self.size).collect::<Vec<_>>())
    }

    fn is_connected_subset(&self, idx: &[usize]) -> bool {
        connected_components(self, idx).len() == 1
    }
}

fn connected_components(a: &Gcm, idx: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut comps = Vec::new();
    for &s in idx {
        if seen.contains(&s) {
            continue;
        }
        let mut comp = vec![s];
        seen.insert(s);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in idx {
                if !seen.contains(&w) && a.get(v, w) != 0 {
                    seen.insert(w);
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

impl fmt::Display for Gcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.size {
            if i > 0 {
                write!(f, ",")?;
            }
            let row: Vec<String> = (0..self.size).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "[{}]", row.join(","))?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GcmType {
    Finite(String),
    Affine(String),
    IndefiniteHyperbolic,
    IndefiniteNonHyperbolic,
    Decomposable(Vec<GcmType>),
}

impl GcmType {
    pub fn is_finite(&self) -> bool {
        matches!(self, GcmType::Finite(_))
    }

    pub fn is_affine(&self) -> bool {
        matches!(self, GcmType::Affine(_))
    }

    pub fn is_indefinite(&self) -> bool {
        matches!(self, GcmType::IndefiniteHyperbolic | GcmType::IndefiniteNonHyperbolic)
    }
}

impl fmt::Display for GcmType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GcmType::Finite(n) => write!(f, "finite:{n}"),
            GcmType::Affine(n) => write!(f, "affine:{n}"),
            GcmType::IndefiniteHyperbolic => write!(f, "indefinite:hyperbolic"),
            GcmType::IndefiniteNonHyperbolic => write!(f, "indefinite:nonhyperbolic"),
            GcmType::Decomposable(parts) => {
                let s: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", s.join(" x "))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Standard Cartan matrices.

type Root = Vec<Rational>;

fn eps(dim: usize, terms: &[(usize, i64, i64)]) -> Root {
    let mut v = vec![Rational::zero(); dim];
    for &(i, p, q) in terms {
        v[i] += ratio(p, q);
    }
    v
}

fn dot(a: &Root, b: &Root) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cartan_from_roots(roots: &[Root]) -> Gcm {
    let n = roots.len();
    let mut e = Vec::with_capacity(n * n);
    for a in roots {
        let aa = dot(a, a);
        for b in roots {
            let v = Rational::from_integer(2.into()) * dot(a, b) / &aa;
            assert!(v.is_integer(), "Cartan entry must be an integer");
            e.push(i64::try_from(v.to_integer()).expect("small"));
        }
    }
    Gcm { size: n, entries: e }
}

fn from_adjacency(n: usize, edges: &[(usize, usize)]) -> Gcm {
    let mut e = vec![0; n * n];
    for i in 0..n {
        e[i * n + i] = 2;
    }
    for &(i, j) in edges {
        e[i * n + j] = -1;
        e[j * n + i] = -1;
    }
    Gcm { size: n, entries: e }
}

/// Simple roots and highest root of a non-simply-laced or classical type.
fn classical_roots(kind: char, n: usize) -> Option<(Vec<Root>, Root)> {
    let chain = |dim: usize, k: usize| -> Vec<Root> { (0..k).map(|i| eps(dim, &[(i, 1, 1), (i + 1, -1, 1)])).collect() };
    match kind {
        'A' if n >= 1 => Some((chain(n + 1, n), eps(n + 1, &[(0, 1, 1), (n, -1, 1)]))),
        'B' if n >= 2 => {
            let mut s = chain(n, n - 1);
            s.push(eps(n, &[(n - 1, 1, 1)]));
            Some((s, eps(n, &[(0, 1, 1), (1, 1, 1)])))
        }
        'C' if n >= 2 => {
            let mut s = chain(n, n - 1);
            s.push(eps(n, &[(n - 1, 2, 1)]));
            Some((s, eps(n, &[(0, 2, 1)])))
        }
        'D' if n >= 3 => {
            let mut s = chain(n, n - 1);
            s.push(eps(n, &[(n - 2, 1, 1), (n - 1, 1, 1)]));
            Some((s, eps(n, &[(0, 1, 1), (1, 1, 1)])))
        }
        'F' if n == 4 => Some((
            vec![
                eps(4, &[(1, 1, 1), (2, -1, 1)]),
                eps(4, &[(2, 1, 1), (3, -1, 1)]),
                eps(4, &[(3, 1, 1)]),
                eps(4, &[(0, 1, 2), (1, -1, 2), (2, -1, 2), (3, -1, 2)]),
            ],
            eps(4, &[(0, 1, 1), (1, 1, 1)]),
        )),
        'G' if n == 2 => Some((
            vec![eps(3, &[(0, 1, 1), (1, -1, 1)]), eps(3, &[(0, -2, 1), (1, 1, 1), (2, 1, 1)])],
            eps(3, &[(0, -1, 1), (1, -1, 1), (2, 2, 1)]),
        )),
        _ => None,
    }
}

fn e_edges(n: usize) -> Vec<(usize, usize)> {
    // Bourbaki labels 1..n, 0-based: 1-3-4-…-n chain, 2 attached to 4.
    let mut e = vec![(0, 2), (1, 3)];
    for i in 2..n - 1 {
        e.push((i, i + 1));
    }
    e
}

/// Finite-type Cartan matrix by name (`A3`, `C2`, `E6`, …).
pub fn finite_cartan(kind: char, n: usize) -> Option<Gcm> {
    match kind {
        'E' if (6..=8).contains(&n) => Some(from_adjacency(n, &e_edges(n))),
        _ => classical_roots(kind, n).map(|(s, _)| cartan_from_roots(&s)),
    }
}

/// Untwisted affine `X_n^(1)` (size `n+1`, extra node first).
fn untwisted_affine(kind: char, n: usize) -> Option<Gcm> {
    if kind == 'E' && (6..=8).contains(&n) {
        // Extended diagrams with node 0 prepended.
        let shift: Vec<(usize, usize)> = e_edges(n).into_iter().map(|(a, b)| (a + 1, b + 1)).collect();
        let extra = match n {
            6 => (0, 2),
            7 => (0, 1),
            _ => (0, 8),
        };
        let mut edges = shift;
        edges.push(extra);
        return Some(from_adjacency(n + 1, &edges));
    }
    let (mut s, theta) = classical_roots(kind, n)?;
    s.insert(0, theta.iter().map(|x| -x).collect());
    Some(cartan_from_roots(&s))
}

fn chain_a2l_twisted(l: usize) -> Gcm {
    if l == 1 {
        return Gcm {
            size: 2,
            entries: vec![2, -4, -1, 2],
        };
    }
    let n = l + 1;
    let mut e = vec![0; n * n];
    for i in 0..n {
        e[i * n + i] = 2;
        if i + 1 < n {
            e[i * n + i + 1] = -1;
            e[(i + 1) * n + i] = -1;
        }
    }
    e[1] = -2; // a_01
    e[(l - 1) * n + l] = -2; // a_{l-1,l}
    Gcm { size: n, entries: e }
}

/// All standard finite and affine matrices of the given size, with names.
fn standard_of_size(size: usize) -> Vec<(GcmType, Gcm)> {
    let mut out = Vec::new();
    let fin = |name: String, g: Option<Gcm>, out: &mut Vec<(GcmType, Gcm)>| {
        if let Some(g) = g {
            out.push((GcmType::Finite(name), g));
        }
    };
    let n = size;
    fin(format!("A{n}"), finite_cartan('A', n), &mut out);
    if n >= 3 {
        fin(format!("B{n}"), finite_cartan('B', n), &mut out);
    }
    if n >= 2 {
        fin(format!("C{n}"), finite_cartan('C', n), &mut out);
    }
    if n >= 4 {
        fin(format!("D{n}"), finite_cartan('D', n), &mut out);
    }
    if (6..=8).contains(&n) {
        fin(format!("E{n}"), finite_cartan('E', n), &mut out);
    }
    if n == 4 {
        fin("F4".into(), finite_cartan('F', 4), &mut out);
    }
    if n == 2 {
        fin("G2".into(), finite_cartan('G', 2), &mut out);
    }
    // Affine matrices have size l + 1.
    if size >= 2 {
        let l = size - 1;
        let aff = |name: String, g: Option<Gcm>, out: &mut Vec<(GcmType, Gcm)>| {
            if let Some(g) = g {
                out.push((GcmType::Affine(name), g));
            }
        };
        aff(format!("A{l}~1"), untwisted_affine('A', l), &mut out);
        if l >= 3 {
            aff(format!("B{l}~1"), untwisted_affine('B', l), &mut out);
            aff(format!("A{}~2", 2 * l - 1), untwisted_affine('B', l).map(|g| g.transpose()), &mut out);
        }
        if l >= 2 {
            aff(format!("C{l}~1"), untwisted_affine('C', l), &mut out);
            aff(format!("D{}~2", l + 1), untwisted_affine('C', l).map(|g| g.transpose()), &mut out);
        }
        if l >= 4 {
            aff(format!("D{l}~1"), untwisted_affine('D', l), &mut out);
        }
        if (6..=8).contains(&l) {
            aff(format!("E{l}~1"), untwisted_affine('E', l), &mut out);
        }
        if l == 4 {
            aff("F4~1".into(), untwisted_affine('F', 4), &mut out);
            aff("E6~2".into(), untwisted_affine('F', 4).map(|g| g.transpose()), &mut out);
        }
        if l == 2 {
            aff("G2~1".into(), untwisted_affine('G', 2), &mut out);
            aff("D4~3".into(), untwisted_affine('G', 2).map(|g| g.transpose()), &mut out);
        }
        aff(format!("A{}~2", 2 * l), Some(chain_a2l_twisted(l)), &mut out);
    }
    out
}

/// Whether `b = P a Pᵀ` for some permutation `P`.
pub fn permutation_equivalent(a: &Gcm, b: &Gcm) -> bool {
    if a.size != b.size {
        return false;
    }
    let n = a.size;
    let profile = |g: &Gcm, i: usize| {
        let mut row: Vec<i64> = (0..n).map(|j| g.get(i, j)).collect();
        let mut col: Vec<i64> = (0..n).map(|j| g.get(j, i)).collect();
        row.sort_unstable();
        col.sort_unstable();
        (row, col)
    };
    let pa: Vec<_> = (0..n).map(|i| profile(a, i)).collect();
    let pb: Vec<_> = (0..n).map(|i| profile(b, i)).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        k: usize,
        a: &Gcm,
        b: &Gcm,
        pa: &[(Vec<i64>, Vec<i64>)],
        pb: &[(Vec<i64>, Vec<i64>)],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = a.size;
        if k == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || pa[cand] != pb[k] {
                continue;
            }
            let ok = (0..k).all(|j| a.get(cand, perm[j]) == b.get(k, j) && a.get(perm[j], cand) == b.get(j, k));
            if !ok {
                continue;
            }
            perm[k] = cand;
            used[cand] = true;
            if rec(k + 1, a, b, pa, pb, perm, used) {
                return true;
            }
            used[cand] = false;
        }
        false
    }
    rec(0, a, b, &pa, &pb, &mut perm, &mut used)
}

fn subsets_of(idx: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n = idx.len();
    (1u64..(1u64 << n)).map(move |mask| (0..n).filter(|b| mask >> b & 1 == 1).map(|b| idx[b]).collect())
}

enum Kind {
    Finite,
    Affine,
    Indefinite,
}

fn kind_of(a: &Gcm, idx: &[usize]) -> Kind {
    let full = idx.len();
    let mut proper_positive = true;
    for s in subsets_of(idx) {
        if s.len() == full {
            continue;
        }
        if !a.minor(&s).is_positive() {
            proper_positive = false;
            break;
        }
    }
    let det = a.minor(idx);
    if proper_positive && det.is_positive() {
        Kind::Finite
    } else if proper_positive && det.is_zero() {
        Kind::Affine
    } else {
        Kind::Indefinite
    }
}

fn classify_indecomposable(a: &Gcm, idx: &[usize]) -> GcmType {
    match kind_of(a, idx) {
        kind @ (Kind::Finite | Kind::Affine) => {
            let sub = a.sub(idx);
            for (name, std) in standard_of_size(idx.len()) {
                let same_kind = matches!((&kind, &name), (Kind::Finite, GcmType::Finite(_)) | (Kind::Affine, GcmType::Affine(_)));
                if same_kind && permutation_equivalent(&sub, &std) {
                    return name;
                }
            }
            match kind {
                Kind::Finite => GcmType::Finite("unnamed".into()),
                _ => GcmType::Affine("unnamed".into()),
            }
        }
        Kind::Indefinite => {
            let hyperbolic = subsets_of(idx)
                .filter(|s| s.len() < idx.len() && a.is_connected_subset(s))
                .all(|s| !matches!(kind_of(a, &s), Kind::Indefinite));
            if hyperbolic {
                GcmType::IndefiniteHyperbolic
            } else {
                GcmType::IndefiniteNonHyperbolic
            }
        }
    }
}

/// Type of a GCM; decomposable matrices report one entry per connected
/// component, sorted by tag so the result does not depend on basis order.
pub fn classify(a: &Gcm) -> GcmType {
    let comps = a.components();
    if comps.len() == 1 {
        return classify_indecomposable(a, &comps[0]);
    }
    let mut parts: Vec<GcmType> = comps.iter().map(|c| classify_indecomposable(a, c)).collect();
    parts.sort_by_cached_key(ToString::to_string);
    GcmType::Decomposable(parts)
}

/// Basis indices whose span complements `C²g` (non-pivot columns of its
/// echelon basis).
pub fn default_generators(alg: &LieAlgebra) -> Vec<usize> {
    alg.quotient_complement(&alg.derived_subalgebra())
}

/// GCM from ad-nilpotency: `−a_ij` is the least `k ≥ 0` with
/// `ad(xᵢ)^{k+1} xⱼ = 0`.
pub fn compute_gcm(alg: &LieAlgebra, generators: &[usize]) -> Result<Gcm, GcmError> {
    let n = alg.dim();
    if let Some(&bad) = generators.iter().find(|&&g| g >= n) {
        return Err(GcmError::IndexOutOfRange(bad + 1));
    }
    if !alg.is_nilpotent() {
        return Err(GcmError::NotNilpotent);
    }
    let derived = alg.derived_subalgebra();
    let gens = Subspace::coordinate(n, generators);
    if generators.len() != n - derived.dim() || gens.sum(&derived).dim() != n {
        return Err(GcmError::GeneratorsNotComplementary);
    }
    check_weights(alg, generators)?;
    let l = generators.len();
    let mut rows = vec![vec![2i64; l]; l];
    for (a, &i) in generators.iter().enumerate() {
        for (b, &j) in generators.iter().enumerate() {
            if a == b {
                continue;
            }
            let mut v = unit_vec(n, j);
            let mut k = 0i64;
            loop {
                v = alg.bracket_with_basis(i, &v);
                if is_zero_vec(&v) {
                    break;
                }
                k += 1;
                if k as usize > n {
                    return Err(GcmError::NotNilpotent);
                }
            }
            rows[a][b] = -k;
        }
    }
    Gcm::new(&rows)
}

/// Rejects generators whose weight, under the derivations diagonal in the
/// given basis, is shared by another basis vector.
fn check_weights(alg: &LieAlgebra, generators: &[usize]) -> Result<(), GcmError> {
    let diag = alg.diagonal_derivations();
    let n = alg.dim();
    let weight = |i: usize| -> Vec<Rational> { diag.iter().map(|d| d[i].clone()).collect() };
    for &g in generators {
        let wg = weight(g);
        for j in 0..n {
            if j != g && weight(j) == wg {
                return Err(GcmError::DegenerateWeights { generator: g, other: j });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(rows: &[&[i64]]) -> Gcm {
        Gcm::new(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(Gcm::new(&[vec![2, 1], vec![-1, 2]]).is_err());
        assert!(Gcm::new(&[vec![2, 0], vec![-1, 2]]).is_err());
        assert!(Gcm::new(&[vec![1, 0], vec![0, 2]]).is_err());
    }

    #[test]
    fn parse_both_styles() {
        assert_eq!(Gcm::parse("[[2,-2],[-2,2]]").unwrap(), g(&[&[2, -2], &[-2, 2]]));
        assert_eq!(Gcm::parse("2,-1;-1,2").unwrap(), g(&[&[2, -1], &[-1, 2]]));
        assert_eq!(g(&[&[2, -2], &[-2, 2]]).to_string(), "[[2,-2],[-2,2]]");
    }

    #[test]
    fn rank_two_examples() {
        assert_eq!(classify(&g(&[&[2, -1], &[-1, 2]])), GcmType::Finite("A2".into()));
        assert_eq!(classify(&g(&[&[2, -2], &[-1, 2]])), GcmType::Finite("C2".into()));
        assert_eq!(classify(&g(&[&[2, -3], &[-1, 2]])), GcmType::Finite("G2".into()));
        assert_eq!(classify(&g(&[&[2, -2], &[-2, 2]])), GcmType::Affine("A1~1".into()));
        assert_eq!(classify(&g(&[&[2, -4], &[-1, 2]])), GcmType::Affine("A2~2".into()));
        assert_eq!(classify(&g(&[&[2, -3], &[-2, 2]])), GcmType::IndefiniteHyperbolic);
    }

    #[test]
    fn rank_two_trichotomy() {
        for a in 1..=6 {
            for b in 1..=6 {
                let t = classify(&g(&[&[2, -a], &[-b, 2]]));
                let ab = a * b;
                match ab {
                    1..=3 => assert!(t.is_finite(), "{a},{b}"),
                    4 => assert!(t.is_affine(), "{a},{b}"),
                    _ => assert_eq!(t, GcmType::IndefiniteHyperbolic, "{a},{b}"),
                }
            }
        }
    }

    #[test]
    fn decomposable() {
        let a = g(&[&[2, 0], &[0, 2]]);
        assert_eq!(
            classify(&a),
            GcmType::Decomposable(vec![GcmType::Finite("A1".into()), GcmType::Finite("A1".into())])
        );
        assert_eq!(classify(&a).to_string(), "finite:A1 x finite:A1");
    }

    #[test]
    fn standard_families_classify_to_themselves() {
        for size in 1..=9 {
            for (name, m) in standard_of_size(size) {
                assert_eq!(classify(&m), name, "{m}");
            }
        }
    }

    #[test]
    fn permutation_invariance() {
        let a = g(&[&[2, -1, 0], &[-2, 2, -1], &[0, -1, 2]]);
        let b = g(&[&[2, -1, 0], &[-1, 2, -1], &[0, -2, 2]]);
        let p = g(&[&[2, 0, -1], &[0, 2, -1], &[-1, -2, 2]]);
        assert_eq!(classify(&a), classify(&p));
        assert_eq!(classify(&a), GcmType::Finite("C3".into()));
        assert_eq!(classify(&b), GcmType::Finite("B3".into()));
    }

    #[test]
    fn compute_on_small_algebras() {
        let h3 = LieAlgebra::from_relations("dim 3\n[1,2]=3").unwrap();
        assert_eq!(compute_gcm(&h3, &[0, 1]).unwrap(), g(&[&[2, -1], &[-1, 2]]));
        let g54 = LieAlgebra::from_relations("dim 5\n[1,2]=3\n[1,3]=4\n[2,3]=5").unwrap();
        assert_eq!(compute_gcm(&g54, &[0, 1]).unwrap(), g(&[&[2, -2], &[-2, 2]]));
        let a2 = LieAlgebra::abelian(2);
        assert_eq!(compute_gcm(&a2, &[0, 1]).unwrap(), g(&[&[2, 0], &[0, 2]]));
        assert_eq!(compute_gcm(&g54, &[0, 2]), Err(GcmError::GeneratorsNotComplementary));
        let diamond = LieAlgebra::from_relations("dim 4\n[1,2]=3\n[1,3]=-2\n[2,3]=4").unwrap();
        assert_eq!(compute_gcm(&diamond, &[0, 1]), Err(GcmError::NotNilpotent));
    }

    #[test]
    fn degenerate_weights_rejected() {
        // [x1,x2] and [x2,x4] both land on x3, so x1 and x4 share a weight.
        let alg = LieAlgebra::from_relations("dim 4\n[1,2]=3\n[2,4]=3").unwrap();
        assert!(matches!(compute_gcm(&alg, &[0, 1, 3]), Err(GcmError::DegenerateWeights { .. })));
    }
    /// Expected component types from a table label; `None` entries are
    /// resolved from the column.
    fn expected_from_label(label: &str, column: &str) -> Vec<GcmType> {
        let body = label.split("\\;").next().unwrap().split("\\,").next().unwrap();
        body.split("\\times")
            .map(|tok| {
                let t: String = tok.chars().filter(|c| !matches!(c, '$' | ' ' | '{' | '}' | '_')).collect();
                if t.starts_with('(') || t.starts_with('H') {
                    return GcmType::IndefiniteHyperbolic;
                }
                if t.contains("surd") {
                    return match column {
                        "hyperbolic" => GcmType::IndefiniteHyperbolic,
                        _ => GcmType::IndefiniteNonHyperbolic,
                    };
                }
                let kind = t.chars().next().unwrap();
                let (rank, twist) = match t.find("^(") {
                    Some(p) => {
                        let close = t.find(')').unwrap();
                        let tw = &t[p + 2..close];
                        let rest = format!("{}{}", &t[1..p], &t[close + 1..]);
                        (rest, Some(tw.to_string()))
                    }
                    None => (t[1..].to_string(), None),
                };
                let name = format!("{kind}{rank}");
                let name = if name == "B2" { "C2".to_string() } else { name };
                match twist {
                    Some(k) => GcmType::Affine(format!("{name}~{k}")),
                    None => GcmType::Finite(name),
                }
            })
            .collect()
    }

    #[test]
    fn table_of_seven_dimensional_matrices() {
        let data = include_str!("../data/gcm_table.tsv");
        let mut checked = 0;
        for line in data.lines().filter(|l| !l.starts_with('#')) {
            let f: Vec<&str> = line.split('\t').collect();
            let m = Gcm::parse(f[1]).unwrap();
            let got = classify(&m);
            let mut want = expected_from_label(f[3], f[2]);
            let got_parts = match &got {
                GcmType::Decomposable(p) => p.clone(),
                t => vec![t.clone()],
            };
            let key = |t: &GcmType| t.to_string();
            let mut gp = got_parts.clone();
            gp.sort_by_key(key);
            want.sort_by_key(key);
            assert_eq!(gp, want, "row {} matrix {}", f[0], f[1]);
            let col_ok = match f[2] {
                "finite" => got_parts.iter().all(GcmType::is_finite),
                "affine" => got_parts.iter().any(GcmType::is_affine) && !got_parts.iter().any(GcmType::is_indefinite),
                "hyperbolic" => got_parts.iter().any(|t| *t == GcmType::IndefiniteHyperbolic),
                _ => got_parts.iter().any(|t| *t == GcmType::IndefiniteNonHyperbolic),
            };
            assert!(col_ok, "row {} column {}", f[0], f[2]);
            checked += 1;
        }
        assert_eq!(checked, 152);
    }
}

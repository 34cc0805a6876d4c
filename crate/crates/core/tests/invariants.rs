//! Property tests on randomly generated 2-step nilpotent algebras and GCMs.

use proptest::prelude::*;

use inull_core::cecohom::{self, Cochain, Coefficients};
use inull_core::exactla::{rat, SparseVec};
use inull_core::gcm::{self, Gcm};
use inull_core::koszul;
use inull_core::leibniz::{self, LeibnizCochain};
use inull_core::LieAlgebra;

/// `m` generators bracketing into `k` central vectors with small integer
/// coefficients. Jacobi holds because every bracket is central.
fn two_step() -> impl Strategy<Value = LieAlgebra> {
    (2usize..=4, 1usize..=3).prop_flat_map(|(m, k)| {
        let pairs = m * (m - 1) / 2;
        proptest::collection::vec(-2i64..=2, pairs * k).prop_map(move |coeffs| {
            let mut rels = Vec::new();
            let mut p = 0;
            for i in 0..m {
                for j in i + 1..m {
                    let v = SparseVec::from_pairs((0..k).map(|t| (m + t, rat(coeffs[p * k + t]))));
                    if !v.is_empty() {
                        rels.push(((i, j), v));
                    }
                    p += 1;
                }
            }
            LieAlgebra::new(m + k, rels).expect("2-step relations satisfy Jacobi")
        })
    })
}

fn gcm_strategy() -> impl Strategy<Value = Gcm> {
    (2usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(0i64..=3, n * (n - 1) / 2).prop_flat_map(move |upper| {
            let nz = upper.iter().filter(|&&x| x != 0).count();
            proptest::collection::vec(1i64..=3, nz).prop_map(move |lower| {
                let mut rows = vec![vec![0i64; n]; n];
                let (mut p, mut q) = (0, 0);
                for i in 0..n {
                    rows[i][i] = 2;
                    for j in i + 1..n {
                        if upper[p] != 0 {
                            rows[i][j] = -upper[p];
                            rows[j][i] = -lower[q];
                            q += 1;
                        }
                        p += 1;
                    }
                }
                Gcm::new(&rows).expect("valid GCM")
            })
        })
    })
}

fn sample(len: usize, seed: usize) -> Vec<inull_core::Rational> {
    (0..len).map(|i| rat(((i * 5 + seed * 11 + 1) % 7) as i64 - 3)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lemma_one_dimension_identity(g in two_step()) {
        let r = koszul::analyze(&g);
        prop_assert!(r.dimension_identity_holds());
        prop_assert_eq!(r.forms_dim(), r.dim_ker() + r.dim_im());
        prop_assert_eq!(r.i_null, r.i_null_by_radical);
        for b in &r.forms {
            prop_assert!(koszul::is_invariant(&g, b));
        }
    }

    #[test]
    fn koszul_forms_are_closed_and_exact(g in two_step()) {
        let r = koszul::analyze(&g);
        for ib in &r.im_basis {
            prop_assert!(cecohom::d(&g, ib).is_zero());
        }
        for (ib, w) in r.im_basis.iter().zip(&r.exact_witnesses) {
            prop_assert_eq!(&cecohom::d(&g, w), ib);
        }
    }

    #[test]
    fn d_squared_is_zero(g in two_step(), seed in 0usize..10) {
        let n = g.dim();
        for coeffs in [Coefficients::Trivial, Coefficients::Adjoint] {
            for k in 0..=2 {
                let len = cecohom::cochain_len(n, k, coeffs);
                let phi = Cochain::from_components(n, k, coeffs, sample(len, seed)).unwrap();
                prop_assert!(cecohom::d(&g, &cecohom::d(&g, &phi)).is_zero());
            }
        }
    }

    #[test]
    fn leibniz_delta_squared_and_zl2(g in two_step(), seed in 0usize..10) {
        let n = g.dim();
        let psi = LeibnizCochain::from_components(n, 1, sample(n * n, seed)).unwrap();
        let dd = leibniz::delta(&g, &leibniz::delta(&g, &psi).unwrap()).unwrap();
        prop_assert!(dd.is_zero());
        let r = koszul::analyze(&g);
        prop_assert_eq!(leibniz::zl2_0(&g).len(), r.center_dim * r.dim_ker());
        for z in leibniz::zl2_0(&g) {
            prop_assert!(leibniz::delta(&g, &z).unwrap().is_zero());
        }
        prop_assert_eq!(leibniz::coupled_dim(&g).unwrap(), leibniz::coupled_space(&g).unwrap().len());
    }

    #[test]
    fn analysis_is_basis_order_invariant(g in two_step(), rot in 0usize..7) {
        let n = g.dim();
        let perm: Vec<usize> = (0..n).map(|i| (i + rot) % n).collect();
        let h = g.permuted(&perm).unwrap();
        let (a, b) = (koszul::analyze(&g), koszul::analyze(&h));
        prop_assert_eq!(a.forms_dim(), b.forms_dim());
        prop_assert_eq!(a.dim_im(), b.dim_im());
        prop_assert_eq!(a.i_exact, b.i_exact);
        prop_assert_eq!(a.quadratic.quadratic, b.quadratic.quadratic);
    }

    #[test]
    fn products_with_abelian_keep_image(g in two_step(), k in 1usize..=2) {
        let p = g.direct_product(&LieAlgebra::abelian(k));
        prop_assert_eq!(koszul::analyze(&p).dim_im(), koszul::analyze(&g).dim_im());
    }

    #[test]
    fn gcm_classification_is_permutation_invariant(a in gcm_strategy(), rot in 0usize..4) {
        let n = a.size();
        let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| a.get((i + rot) % n, (j + rot) % n)).collect()).collect();
        let b = Gcm::new(&rows).unwrap();
        prop_assert!(gcm::permutation_equivalent(&a, &b));
        prop_assert_eq!(gcm::classify(&a), gcm::classify(&b));
        prop_assert_eq!(gcm::classify(&a).is_finite(), gcm::classify(&a.transpose()).is_finite());
    }
}

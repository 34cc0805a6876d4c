//! Values computed by `tools/oracles.py` (sympy, textbook coboundary formula)
//! and frozen here.

use inull_core::catalog;
use inull_core::cecohom::{self, Coefficients};
use inull_core::koszul;
use inull_core::leibniz;
use inull_core::LieAlgebra;

struct Oracle {
    name: &'static str,
    forms: usize,
    im: usize,
    ker: usize,
    center: usize,
    h2_adjoint: usize,
    zl2_0: usize,
    coupled: usize,
    hl2: usize,
}

const ORACLES: &[Oracle] = &[
    Oracle { name: "g54", forms: 4, im: 1, ker: 3, center: 2, h2_adjoint: 9, zl2_0: 6, coupled: 2, hl2: 17 },
    Oracle { name: "heisenberg:3", forms: 3, im: 0, ker: 3, center: 1, h2_adjoint: 5, zl2_0: 3, coupled: 0, hl2: 8 },
    Oracle { name: "filiform:5", forms: 3, im: 0, ker: 3, center: 1, h2_adjoint: 8, zl2_0: 3, coupled: 0, hl2: 11 },
    Oracle { name: "diamond", forms: 2, im: 1, ker: 1, center: 1, h2_adjoint: 2, zl2_0: 1, coupled: 1, hl2: 4 },
];

fn get(name: &str) -> LieAlgebra {
    catalog::get(name).unwrap()
}

#[test]
fn koszul_and_leibniz_match_oracle() {
    for o in ORACLES {
        let g = get(o.name);
        let r = koszul::analyze(&g);
        assert_eq!(r.forms_dim(), o.forms, "{} forms", o.name);
        assert_eq!(r.dim_im(), o.im, "{} Im I", o.name);
        assert_eq!(r.dim_ker(), o.ker, "{} ker I", o.name);
        assert_eq!(r.center_dim, o.center, "{} center", o.name);
        assert_eq!(cecohom::cohomology_dim(&g, 2, Coefficients::Adjoint), o.h2_adjoint, "{} H²(g,g)", o.name);
        assert_eq!(leibniz::zl2_0(&g).len(), o.zl2_0, "{} ZL²₀", o.name);
        assert_eq!(leibniz::coupled_dim(&g).unwrap(), o.coupled, "{} coupled", o.name);
        assert_eq!(leibniz::coupled_space(&g).unwrap().len(), o.coupled, "{} coupled space", o.name);
        assert_eq!(leibniz::hl2_dim(&g).unwrap(), o.hl2, "{} HL²", o.name);
    }
}

#[test]
fn trivial_betti_numbers() {
    assert_eq!(cecohom::betti(&get("heisenberg:3"), Coefficients::Trivial).unwrap(), vec![1, 2, 2, 1]);
    assert_eq!(cecohom::betti(&get("g54"), Coefficients::Trivial).unwrap(), vec![1, 2, 3, 3, 2, 1]);
}

#[test]
fn derivation_dimensions() {
    assert_eq!(get("g54").derivations().len(), 10);
    assert_eq!(get("g724").derivations().len(), 12);
}

#[test]
fn uncoupling_follows_coupled_dim() {
    assert!(!leibniz::is_uncoupling(&get("g54")).unwrap());
    assert!(!leibniz::is_uncoupling(&get("diamond")).unwrap());
    assert!(leibniz::is_uncoupling(&get("heisenberg:3")).unwrap());
}

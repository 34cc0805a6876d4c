//! Cell-by-cell regeneration of the published tables.

use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Value};

use inull_core::catalog::{self, Expected};
use inull_core::cecohom::{self, Cochain, Coefficients};
use inull_core::gcm::{self, Gcm, GcmType};
use inull_core::koszul::{self, BilinearForm, KoszulReport};
use inull_core::leibniz;
use inull_core::{LieAlgebra, Subspace};

use crate::{Failure, Res};

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

pub struct Cell {
    check: String,
    expected: String,
    computed: String,
    status: Status,
}

fn cell(check: &str, expected: impl ToString, computed: impl ToString, ok: bool) -> Cell {
    Cell {
        check: check.to_string(),
        expected: expected.to_string(),
        computed: computed.to_string(),
        status: if ok { Status::Pass } else { Status::Fail },
    }
}

fn skip(check: &str, expected: impl ToString, why: &str) -> Cell {
    Cell {
        check: check.to_string(),
        expected: expected.to_string(),
        computed: why.to_string(),
        status: Status::Skip,
    }
}

fn eq_cell<T: PartialEq + std::fmt::Debug>(check: &str, expected: T, computed: T) -> Cell {
    let ok = expected == computed;
    cell(check, format!("{expected:?}"), format!("{computed:?}"), ok)
}

pub struct Row {
    name: String,
    source: String,
    /// Facts resting on user-supplied relations.
    conditional: bool,
    cells: Vec<Cell>,
}

pub struct Report {
    rows: Vec<Row>,
}

impl Report {
    fn count(&self, s: Status) -> usize {
        self.rows.iter().flat_map(|r| &r.cells).filter(|c| c.status == s).count()
    }

    pub fn failures(&self) -> usize {
        self.count(Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let cond = if r.conditional { " [conditional]" } else { "" };
            let _ = writeln!(out, "== {} ({}){cond}", r.name, r.source);
            for c in &r.cells {
                let _ = writeln!(
                    out,
                    "  {}  {:<14} expected {:<28} computed {}",
                    c.status.label(),
                    c.check,
                    c.expected,
                    c.computed
                );
            }
        }
        let _ = writeln!(
            out,
            "{} PASS, {} FAIL, {} SKIP",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        );
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "source": r.source,
                    "conditional": r.conditional,
                    "cells": r.cells.iter().map(|c| json!({
                        "check": c.check,
                        "expected": c.expected,
                        "computed": c.computed,
                        "status": c.status.label(),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "rows": rows,
            "summary": {
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "skip": self.count(Status::Skip),
            },
        })
    }
}

/// Koszul-side facts to compare against.
#[derive(Default)]
struct KoszulFacts {
    forms_dim: Option<usize>,
    dim_im: Option<usize>,
    i_null: Option<bool>,
    i_exact: Option<bool>,
    quadratic: Option<bool>,
    basis_form: Option<BilinearForm>,
    i_b: Option<Cochain>,
    witness: Option<Cochain>,
}

impl KoszulFacts {
    fn from_expected(e: &Expected, n: usize) -> Self {
        KoszulFacts {
            forms_dim: e.forms_dim,
            dim_im: e.dim_im,
            i_null: e.i_null,
            i_exact: e.i_exact,
            quadratic: e.quadratic,
            basis_form: e.basis_form_value(n),
            i_b: e.i_b_value(n),
            witness: e.witness_value(n),
        }
    }

    fn from_row(r: &catalog::KoszulRow, n: usize) -> Self {
        KoszulFacts {
            forms_dim: Some(r.forms_dim),
            dim_im: Some(1),
            i_null: Some(false),
            i_exact: Some(true),
            quadratic: Some(r.quadratic),
            basis_form: Some(r.basis_form_value(n)),
            i_b: Some(r.i_b_value(n)),
            witness: Some(r.witness_value(n)),
        }
    }

    fn any(&self) -> bool {
        self.forms_dim.is_some()
            || self.dim_im.is_some()
            || self.i_null.is_some()
            || self.i_exact.is_some()
            || self.quadratic.is_some()
            || self.basis_form.is_some()
            || self.i_b.is_some()
    }
}

fn koszul_cells(alg: &LieAlgebra, f: &KoszulFacts, out: &mut Vec<Cell>) {
    if !f.any() {
        return;
    }
    let r = koszul::analyze(alg);
    if let Some(v) = f.forms_dim {
        out.push(eq_cell("forms_dim", v, r.forms_dim()));
    }
    if let Some(v) = f.dim_im {
        out.push(eq_cell("dim_Im_I", v, r.dim_im()));
    }
    if let Some(v) = f.i_null {
        out.push(eq_cell("I_null", v, r.i_null));
    }
    if let Some(v) = f.i_exact {
        out.push(eq_cell("I_exact", v, r.i_exact));
    }
    if let Some(v) = f.quadratic {
        let mut c = eq_cell("quadratic", v, r.quadratic.quadratic);
        if !r.quadratic.certain {
            c.computed.push_str(" (randomized)");
        }
        out.push(c);
    }
    if let Some(b) = &f.basis_form {
        out.push(basis_form_cell(alg, &r, b, f.i_b.as_ref()));
    }
    if let Some(ib) = &f.i_b {
        out.push(image_cell(&r, ib));
        if let Some(w) = &f.witness {
            let dw = cecohom::d(alg, w);
            let ok = dw.components() == ib.components();
            out.push(cell("witness", format!("d({w}) = {ib}"), dw, ok));
        }
    }
}

/// `B` is invariant, outside `ker I`, and maps to the stated `I_B`.
fn basis_form_cell(alg: &LieAlgebra, r: &KoszulReport, b: &BilinearForm, ib: Option<&Cochain>) -> Cell {
    if !koszul::is_invariant(alg, b) {
        return cell("basis_form", b, "not invariant", false);
    }
    let got = match koszul::koszul_form(alg, b) {
        Ok(t) => t,
        Err(e) => return cell("basis_form", b, e, false),
    };
    let ok = !got.is_zero() && r.dim_im() >= 1 && ib.is_none_or(|w| w.components() == got.components());
    cell("basis_form", b, format!("I_B = {got}"), ok)
}

/// `Im I` is spanned by the stated `I_B`.
fn image_cell(r: &KoszulReport, ib: &Cochain) -> Cell {
    let len = ib.components().len();
    let want = Subspace::new(len, &[ib.components().to_vec()]);
    let got = Subspace::new(len, &r.im_basis.iter().map(|w| w.components().to_vec()).collect::<Vec<_>>());
    let shown: Vec<String> = r.im_basis.iter().map(ToString::to_string).collect();
    let shown = if shown.is_empty() { "0".to_string() } else { shown.join(", ") };
    cell("I_B", format!("span {ib}"), format!("span {shown}"), want == got)
}

fn column_matches(t: &GcmType, column: &str) -> bool {
    let parts = match t {
        GcmType::Decomposable(p) => p.clone(),
        t => vec![t.clone()],
    };
    match column {
        "finite" => parts.iter().all(GcmType::is_finite),
        "affine" => parts.iter().any(GcmType::is_affine) && !parts.iter().any(GcmType::is_indefinite),
        "hyperbolic" => parts.contains(&GcmType::IndefiniteHyperbolic),
        _ => parts.contains(&GcmType::IndefiniteNonHyperbolic),
    }
}

/// Table-2 cells: the matrix up to simultaneous permutation and its column.
fn gcm_table_cells(computed: Result<Gcm, gcm::GcmError>, row: &catalog::GcmRow, out: &mut Vec<Cell>) {
    if row.degenerate {
        out.push(skip("gcm_matrix", &row.gcm, "table marks weight spaces of dim > 1"));
        return;
    }
    match computed {
        Ok(a) => {
            let t = gcm::classify(&a);
            out.push(cell("gcm_matrix", &row.gcm, &a, gcm::permutation_equivalent(&a, &row.gcm)));
            out.push(cell("gcm_column", &row.column, &t, column_matches(&t, &row.column)));
        }
        Err(e) => out.push(cell("gcm_matrix", &row.gcm, e, false)),
    }
}

/// Table key for catalog names that appear in the tables.
fn table_key(name: &str) -> &str {
    match name {
        "g3" => "3",
        "g4" => "4",
        "g54" => "5,4",
        "g54xc" => "5,4xc",
        "g54xc2" => "5,4xc2",
        "g618" => "6,18",
        "g724" => "7,2.4",
        other => other,
    }
}

fn zero_based(gens: &[usize]) -> Vec<usize> {
    gens.iter().map(|i| i - 1).collect()
}

fn builtin_row(name: &str) -> Row {
    let mut cells = Vec::new();
    let (alg, e) = match (catalog::get(name), catalog::expected(name)) {
        (Ok(a), Ok(e)) => (a, e),
        (Err(err), _) | (_, Err(err)) => {
            cells.push(cell("build", "ok", err, false));
            return Row {
                name: name.into(),
                source: "catalog".into(),
                conditional: false,
                cells,
            };
        }
    };
    let n = alg.dim();
    if let Some(d) = e.dim {
        cells.push(eq_cell("dim", d, n));
    }
    cells.push(match alg.check_jacobi() {
        None => cell("jacobi", "holds", "holds", true),
        Some(w) => cell("jacobi", "holds", w, false),
    });
    koszul_cells(&alg, &KoszulFacts::from_expected(&e, n), &mut cells);
    if let Some((gens, tag)) = &e.gcm {
        let computed = gcm::compute_gcm(&alg, &zero_based(gens));
        match &computed {
            Ok(a) => cells.push(cell("gcm", tag, format!("{a} {}", gcm::classify(a)), gcm::classify(a).to_string() == *tag)),
            Err(err) => cells.push(cell("gcm", tag, err, false)),
        }
        if let Some(row) = catalog::gcm_row(table_key(name)) {
            gcm_table_cells(computed, &row, &mut cells);
        }
    }
    if let Some(b) = &e.adjoint_betti {
        match cecohom::betti(&alg, Coefficients::Adjoint) {
            Ok(got) => cells.push(eq_cell("adjoint_betti", b.clone(), got)),
            Err(err) => cells.push(cell("adjoint_betti", format!("{b:?}"), err, false)),
        }
    }
    if let Some(z) = e.zl2_0_dim {
        cells.push(eq_cell("ZL2_0", z, leibniz::zl2_0(&alg).len()));
    }
    Row {
        name: name.into(),
        source: "catalog".into(),
        conditional: false,
        cells,
    }
}

fn extra_row(path: &Path) -> Row {
    let file = path.display().to_string();
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let mut row = Row {
        name: stem,
        source: file,
        conditional: true,
        cells: Vec::new(),
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            row.cells.push(cell("read", "ok", e, false));
            return row;
        }
    };
    let alg = match LieAlgebra::from_relations(&text) {
        Ok(a) => a,
        Err(e) => {
            row.cells.push(cell("parse", "ok", e, false));
            return row;
        }
    };
    if let Some(n) = alg.name() {
        row.name = n.to_string();
    }
    let key = table_key(&row.name).to_string();
    let n = alg.dim();
    let kr = catalog::koszul_row(&key);
    let gr = catalog::gcm_row(&key);
    if kr.is_none() && gr.is_none() {
        row.cells.push(skip("table", "a table row", &format!("no table row named '{key}'")));
        return row;
    }
    if let Some(kr) = kr {
        koszul_cells(&alg, &KoszulFacts::from_row(kr, n), &mut row.cells);
    } else if n <= 7 && alg.is_nilpotent() {
        // Nilpotent algebras of dim ≤ 7 missing from the non-I-null table are I-null.
        let facts = KoszulFacts {
            i_null: Some(true),
            ..Default::default()
        };
        koszul_cells(&alg, &facts, &mut row.cells);
    }
    if let Some(gr) = gr {
        let computed = gcm::compute_gcm(&alg, &gcm::default_generators(&alg));
        gcm_table_cells(computed, &gr, &mut row.cells);
    }
    row
}

fn is_slow(name: &str) -> bool {
    matches!(name, "e7plus" | "e8plus")
}

pub fn run(extra: Option<&Path>, slow: bool) -> Res<Report> {
    let names = catalog::builtin_entries();
    let mut rows: Vec<Row> = names
        .par_iter()
        .map(|name| {
            if is_slow(name) && !slow {
                Row {
                    name: name.clone(),
                    source: "catalog".into(),
                    conditional: false,
                    cells: vec![skip("all", "-", "needs --slow")],
                }
            } else {
                builtin_row(name)
            }
        })
        .collect();
    if let Some(dir) = extra {
        let mut files: Vec<_> = std::fs::read_dir(dir)
            .map_err(|e| Failure::new(1, format!("{}: {e}", dir.display())))?
            .filter_map(Result::ok)
            .map(|e| e.path())
            .filter(|p| p.is_file())
            .collect();
        files.sort();
        rows.extend(files.par_iter().map(|p| extra_row(p)).collect::<Vec<_>>());
    }
    Ok(Report { rows })
}

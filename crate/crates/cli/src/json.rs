//! Structured documents and their text renderings.

use std::fmt::Write as _;

use serde_json::{json, Value};

use inull_core::cecohom::{Cochain, Coefficients};
use inull_core::koszul::{BilinearForm, KoszulReport};
use inull_core::Rational;

pub fn rat(x: &Rational) -> Value {
    json!(x.to_string())
}

pub fn rat_list(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

pub fn coeff_name(c: Coefficients) -> &'static str {
    match c {
        Coefficients::Trivial => "trivial",
        Coefficients::Adjoint => "adjoint",
    }
}

/// `{"text", "terms": [[i, j, c], ...]}` with 1-based `i ≤ j`.
pub fn form(b: &BilinearForm) -> Value {
    let terms: Vec<Value> = b.terms().iter().map(|(i, j, c)| json!([i + 1, j + 1, c.to_string()])).collect();
    json!({ "text": b.to_string(), "terms": terms })
}

/// `{"text", "terms": [[[i, j, ...], c], ...]}` with 1-based indices.
pub fn cochain(w: &Cochain) -> Value {
    let terms: Vec<Value> = w
        .terms()
        .iter()
        .map(|(c, t)| json!([t.iter().map(|i| i + 1).collect::<Vec<_>>(), c.to_string()]))
        .collect();
    json!({ "text": w.to_string(), "terms": terms })
}

pub fn koszul_report(r: &KoszulReport) -> Value {
    let witnesses: Vec<Value> = r
        .im_basis
        .iter()
        .enumerate()
        .map(|(i, ib)| {
            json!({
                "I_B": cochain(ib),
                "B": form(&r.im_sources[i]),
                "gamma": r.exact_witnesses.get(i).map(cochain),
            })
        })
        .collect();
    let q = &r.quadratic;
    json!({
        "dim": r.dim,
        "ell": r.ell,
        "derived_dim": r.derived_dim,
        "center_dim": r.center_dim,
        "forms_dim": r.forms_dim(),
        "dim_ker_I": r.dim_ker(),
        "dim_Im_I": r.dim_im(),
        "dimension_identity": r.dimension_identity_holds(),
        "I_null": r.i_null,
        "I_null_by_radical": r.i_null_by_radical,
        "I_exact": r.i_exact,
        "quadratic": {
            "value": q.quadratic,
            "certain": q.certain,
            "reason": q.reason,
            "form": q.witness.as_ref().map(form),
        },
        "witnesses": witnesses,
    })
}

fn yn(v: &Value) -> &'static str {
    if v.as_bool().unwrap_or(false) {
        "yes"
    } else {
        "no"
    }
}

fn text_of(v: &Value) -> &str {
    v["text"].as_str().unwrap_or("")
}

/// `dω^{1,5}` for a unit monomial, `d(…)` otherwise.
fn d_of(gamma: &Value) -> String {
    let terms = gamma["terms"].as_array().map_or(0, Vec::len);
    let t = text_of(gamma);
    if terms == 1 && !t.starts_with('-') && !t.contains('*') {
        format!("d{t}")
    } else {
        format!("d({t})")
    }
}

pub fn koszul_lines(doc: &Value, out: &mut String) {
    let _ = writeln!(
        out,
        "dim {}; ell {}; dim C²g {}; dim center {}",
        doc["dim"], doc["ell"], doc["derived_dim"], doc["center_dim"]
    );
    let _ = writeln!(out, "forms_dim: {}", doc["forms_dim"]);
    let _ = writeln!(out, "dim ker I: {}", doc["dim_ker_I"]);
    let _ = writeln!(out, "dim Im I: {}", doc["dim_Im_I"]);
    let _ = writeln!(out, "I-null: {}", yn(&doc["I_null"]));
    let _ = writeln!(out, "I-exact: {}", yn(&doc["I_exact"]));
    let q = &doc["quadratic"];
    let certain = if q["certain"].as_bool().unwrap_or(true) { "" } else { " (not certain)" };
    let _ = writeln!(out, "quadratic: {}{}", yn(&q["value"]), certain);
    if let Some(f) = q["form"].as_object() {
        let _ = writeln!(out, "  nondegenerate form: {}", f["text"].as_str().unwrap_or(""));
    }
    for w in doc["witnesses"].as_array().into_iter().flatten() {
        let ib = text_of(&w["I_B"]);
        if w["gamma"].is_null() {
            let _ = writeln!(out, "I_B = {ib}");
        } else {
            let _ = writeln!(out, "I_B = {ib} = {}", d_of(&w["gamma"]));
        }
        let _ = writeln!(out, "  B = {}", text_of(&w["B"]));
    }
}

pub fn analyze_text(doc: &Value) -> String {
    let mut out = String::new();
    let name = doc["name"].as_str().or(doc["input"].as_str()).unwrap_or("");
    let _ = writeln!(out, "algebra: {name}");
    koszul_lines(doc, &mut out);
    if let Some(b) = doc.get("betti") {
        let _ = writeln!(out, "Betti ({}): {}", b["coefficients"].as_str().unwrap_or(""), join_nums(&b["numbers"]));
    }
    if let Some(l) = doc.get("leibniz") {
        let _ = writeln!(
            out,
            "ZL2_0: {}; coupled: {}; uncoupling: {}; HL2: {}",
            l["ZL2_0"],
            l["coupled"],
            yn(&l["uncoupling"]),
            l["HL2"]
        );
    }
    out
}

fn join_nums(v: &Value) -> String {
    v.as_array()
        .map(|a| a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .unwrap_or_default()
}

fn vec_text(v: &Value) -> String {
    let parts: Vec<&str> = v.as_array().into_iter().flatten().filter_map(Value::as_str).collect();
    format!("({})", parts.join(", "))
}

pub fn roots_text(doc: &Value) -> String {
    let mut out = String::new();
    let _ = write!(out, "{} positive roots", doc["positive_roots"]);
    if let Some(p) = doc.get("property_P") {
        if p["holds"].as_bool().unwrap_or(false) {
            let _ = write!(out, "; property (P): holds");
        } else {
            let names = ["α", "β", "γ"];
            let parts: Vec<String> = p["witness"]
                .as_array()
                .into_iter()
                .flatten()
                .zip(names)
                .map(|(w, n)| format!("{n} = #{} {}", w["index"], vec_text(&w["vector"])))
                .collect();
            let _ = write!(out, "; property (P): fails ({})", parts.join(", "));
        }
    }
    out.push('\n');
    for r in doc.get("roots").and_then(Value::as_array).into_iter().flatten() {
        let _ = writeln!(out, "{}", vec_text(r));
    }
    out
}

/// With relations attached, the summary is emitted as comments so the
/// output parses as a relations file.
pub fn construction_text(doc: &Value) -> String {
    let mut summary = String::new();
    let _ = write!(summary, "dim {}", doc["dim"]);
    if let Some(v) = doc.get("I_null") {
        let _ = write!(summary, "; I-null: {}", yn(v));
    }
    summary.push('\n');
    if let Some(a) = doc.get("analysis") {
        if !a["I_null"].as_bool().unwrap_or(true) {
            koszul_lines(a, &mut summary);
        }
    }
    let Some(r) = doc.get("relations").and_then(Value::as_str) else {
        return summary;
    };
    let mut out: String = summary.lines().map(|l| format!("# {l}\n")).collect();
    out.push_str(r);
    if !r.ends_with('\n') {
        out.push('\n');
    }
    out
}

pub fn gcm_text(doc: &Value) -> String {
    format!("{} {}\n", doc["display"].as_str().unwrap_or(""), doc["type"].as_str().unwrap_or(""))
}

pub fn cohomology_text(doc: &Value) -> String {
    let c = doc["coefficients"].as_str().unwrap_or("");
    match doc.get("degree") {
        Some(k) => format!("dim H^{k} ({c}): {}\n", doc["dim_H"]),
        None => format!("Betti ({c}): {}\n", join_nums(&doc["betti"])),
    }
}

pub fn list_text(doc: &Value) -> String {
    let mut out = String::new();
    for e in doc["entries"].as_array().into_iter().flatten() {
        let name = e["name"].as_str().unwrap_or("");
        if let Some(err) = e.get("error") {
            let _ = writeln!(out, "{name:<14} error: {}", err.as_str().unwrap_or(""));
            continue;
        }
        let facts: Vec<&str> = e["facts"].as_array().into_iter().flatten().filter_map(Value::as_str).collect();
        let _ = writeln!(out, "{name:<14} dim {:<4} {}", e["dim"], facts.join(", "));
    }
    let fam: Vec<&str> = doc["families"].as_array().into_iter().flatten().filter_map(Value::as_str).collect();
    let _ = writeln!(out, "families: {}", fam.join(", "));
    out
}

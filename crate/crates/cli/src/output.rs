//! Rendering of kernel values in the three output formats.

use clap::ValueEnum;
use otree_core::lincomb::{LinComb, TensorComb};
use otree_core::rational::Rational;
use otree_core::{Forest, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

fn latex_coeff(prefix: &mut String, coeff: &Rational, first: bool) {
    let negative = coeff.is_negative();
    let magnitude = if negative { -coeff } else { coeff.clone() };
    match (first, negative) {
        (true, true) => prefix.push('-'),
        (true, false) => {}
        (false, true) => prefix.push_str(" - "),
        (false, false) => prefix.push_str(" + "),
    }
    if !magnitude.is_one() {
        if magnitude.is_integer() {
            prefix.push_str(&magnitude.to_string());
        } else {
            prefix.push_str(&format!(
                "\\tfrac{{{}}}{{{}}}",
                magnitude.numerator(),
                magnitude.denominator()
            ));
        }
        prefix.push_str("\\,");
    }
}

fn latex_body(w: &Forest) -> String {
    if w.is_empty() {
        "\\mathbb{1}".to_string()
    } else {
        w.to_latex()
    }
}

pub fn lincomb_latex(a: &LinComb) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (w, c) in a.terms() {
        latex_coeff(&mut out, c, first);
        out.push_str(&latex_body(w));
        first = false;
    }
    out
}

pub fn tensor_latex(a: &TensorComb) -> String {
    if a.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for ((l, r), c) in a.terms() {
        latex_coeff(&mut out, c, first);
        out.push_str(&latex_body(l));
        out.push_str(" \\otimes ");
        out.push_str(&latex_body(r));
        first = false;
    }
    out
}

pub fn render_lincomb(a: &LinComb, format: Format) -> String {
    match format {
        Format::Text => a.to_string(),
        Format::Json => a.to_json().to_string(),
        Format::Latex => lincomb_latex(a),
    }
}

pub fn render_tensor(a: &TensorComb, format: Format) -> String {
    match format {
        Format::Text => a.to_string(),
        Format::Json => a.to_json().to_string(),
        Format::Latex => tensor_latex(a),
    }
}

pub fn render_forest(w: &Forest, format: Format) -> String {
    match format {
        Format::Text => w.to_string(),
        Format::Json => serde_json::Value::String(w.to_string()).to_string(),
        Format::Latex => latex_body(w),
    }
}

pub fn render_series(s: &Series, format: Format) -> String {
    match format {
        Format::Text => s.to_string(),
        Format::Json => s.to_json().to_string(),
        Format::Latex => {
            let mut lc = LinComb::zero();
            for (w, c) in s.terms() {
                lc.add_term(w.clone(), c);
            }
            format!("[cutoff {}] {}", s.cutoff(), lincomb_latex(&lc))
        }
    }
}

//! The `tables` subcommand: regenerate the product, shuffle, coproduct and
//! antipode tables for all forests up to a maximum order. Output is fully
//! deterministic.

use otree_core::enumerate::{enumerate_forests_bounded, ForestFilter};
use otree_core::forest::{Color, Forest};
use otree_core::graft::{gl_product, graft};
use otree_core::hopf::{antipode, coproduct};
use otree_core::lincomb::{shuffle, LinComb};
use serde_json::json;

use crate::output::{render_forest, render_lincomb, render_tensor, Format};

fn forests_up_to(max_order: usize, include_empty: bool) -> Vec<Forest> {
    let colors = vec![Color::default()];
    let mut out = Vec::new();
    let from = usize::from(!include_empty);
    for n in from..=max_order {
        out.extend(enumerate_forests_bounded(n, &colors, ForestFilter::All, n).unwrap());
    }
    out
}

pub fn render(max_order: usize, format: Format) -> String {
    let nonempty = forests_up_to(max_order, false);
    let all = forests_up_to(max_order, true);

    let mut product_rows = Vec::new();
    for w in &nonempty {
        for t in &nonempty {
            if w.order() + t.order() > max_order {
                continue;
            }
            product_rows.push((w.clone(), t.clone()));
        }
    }
    let mut shuffle_rows = Vec::new();
    for a in &nonempty {
        for b in &nonempty {
            if a > b || a.order() + b.order() > max_order {
                continue;
            }
            shuffle_rows.push((a.clone(), b.clone()));
        }
    }

    match format {
        Format::Json => {
            let products: Vec<_> = product_rows
                .iter()
                .map(|(w, t)| {
                    json!({
                        "left": w.to_string(),
                        "right": t.to_string(),
                        "grafting": graft(&LinComb::from(w), &LinComb::from(t)).to_json(),
                        "gl_product": gl_product(&LinComb::from(w), &LinComb::from(t)).to_json(),
                    })
                })
                .collect();
            let shuffles: Vec<_> = shuffle_rows
                .iter()
                .map(|(a, b)| {
                    json!({
                        "left": a.to_string(),
                        "right": b.to_string(),
                        "shuffle": shuffle(&LinComb::from(a), &LinComb::from(b)).to_json(),
                    })
                })
                .collect();
            let coproducts: Vec<_> = all
                .iter()
                .map(|w| {
                    json!({
                        "forest": w.to_string(),
                        "coproduct": coproduct(&LinComb::from(w)).to_json(),
                    })
                })
                .collect();
            let antipodes: Vec<_> = all
                .iter()
                .map(|w| {
                    json!({
                        "forest": w.to_string(),
                        "antipode": antipode(&LinComb::from(w)).to_json(),
                    })
                })
                .collect();
            json!({
                "max_order": max_order,
                "products": products,
                "shuffles": shuffles,
                "coproducts": coproducts,
                "antipodes": antipodes,
            })
            .to_string()
        }
        Format::Text | Format::Latex => {
            let sep = match format {
                Format::Latex => " & ",
                _ => "  |  ",
            };
            let empty_forest = match format {
                Format::Latex => "\\mathbb{1}".to_string(),
                _ => "1".to_string(),
            };
            let show_forest = |w: &Forest| {
                if w.is_empty() {
                    empty_forest.clone()
                } else {
                    render_forest(w, format)
                }
            };
            let mut out = String::new();
            out.push_str(&format!(
                "# grafting and Grossman-Larson products (order <= {max_order})\n"
            ));
            for (w, t) in &product_rows {
                let g = graft(&LinComb::from(w), &LinComb::from(t));
                let p = gl_product(&LinComb::from(w), &LinComb::from(t));
                out.push_str(&format!(
                    "{} (x) {}{sep}{}{sep}{}\n",
                    show_forest(w),
                    show_forest(t),
                    render_lincomb(&g, format),
                    render_lincomb(&p, format),
                ));
            }
            out.push_str(&format!("\n# shuffle products (order <= {max_order})\n"));
            for (a, b) in &shuffle_rows {
                let s = shuffle(&LinComb::from(a), &LinComb::from(b));
                out.push_str(&format!(
                    "{} (x) {}{sep}{}\n",
                    show_forest(a),
                    show_forest(b),
                    render_lincomb(&s, format),
                ));
            }
            out.push_str(&format!("\n# coproduct (order <= {max_order})\n"));
            for w in &all {
                let d = coproduct(&LinComb::from(w));
                out.push_str(&format!(
                    "{}{sep}{}\n",
                    show_forest(w),
                    render_tensor(&d, format)
                ));
            }
            out.push_str(&format!("\n# antipode (order <= {max_order})\n"));
            for w in &all {
                let s = antipode(&LinComb::from(w));
                out.push_str(&format!(
                    "{}{sep}{}\n",
                    show_forest(w),
                    render_lincomb(&s, format)
                ));
            }
            out
        }
    }
}

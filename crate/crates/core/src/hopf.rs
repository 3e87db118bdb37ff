//! The graded Hopf algebra of ordered forests, and the word (free
//! associative) Hopf algebra living on the same vector space.
//!
//! The product is the shuffle in both structures. The forest coproduct is the
//! sum of `P (x) R` over full admissible left cuts — equivalently the dual of
//! the Grossman-Larson product — and has an independent recursive
//! implementation used as a cross-validation oracle. The antipode likewise
//! comes in a closed form (all left cuts followed by the signed reversal) and
//! a recursive form. The word structure uses deconcatenation as coproduct and
//! the signed reversal as antipode.

use std::collections::HashMap;

use crate::cut::{apply_cut_unchecked, full_admissible_left_cuts_unbounded, left_cuts_unbounded};
use crate::forest::{b_plus, Forest};
use crate::lincomb::{product_shuffle_concat, shuffle, LinComb, TensorComb};
use crate::rational::Rational;

/// Coefficient of the empty forest.
pub fn counit(a: &LinComb) -> Rational {
    a.coefficient(&Forest::empty())
}

/// `r` times the empty forest.
pub fn unit(r: Rational) -> LinComb {
    LinComb::term(Forest::empty(), r)
}

/// Forest coproduct, computed from the full admissible left cuts:
/// `Δ(w) = Σ P(w) (x) R(w)`.
pub fn coproduct(a: &LinComb) -> TensorComb {
    let mut out = TensorComb::zero();
    for (w, c) in a.terms() {
        for cut in full_admissible_left_cuts_unbounded(w) {
            let res = apply_cut_unchecked(w, &cut);
            for (p, pc) in res.cut_part.terms() {
                out.add_term(p.clone(), res.remainder.clone(), &(pc * c));
            }
        }
    }
    out
}

/// Forest coproduct by the structural recursion (no cutting machinery):
///
/// ```text
/// Δ(1)   = 1 (x) 1
/// Δ(w t) = w t (x) 1 + Δ(w) ⧢· (I (x) B+_i) Δ(B-(t))
/// ```
///
/// where `⧢·` shuffles left slots and concatenates right slots. Cross-checks
/// [`coproduct`].
pub fn coproduct_recursive(a: &LinComb) -> TensorComb {
    let mut out = TensorComb::zero();
    for (w, c) in a.terms() {
        out.add_scaled(&delta_recursive(w), c);
    }
    out
}

fn delta_recursive(w: &Forest) -> TensorComb {
    if w.is_empty() {
        return TensorComb::pair(Forest::empty(), Forest::empty());
    }
    let k = w.degree();
    let prefix = Forest::new(w.trees()[..k - 1].to_vec());
    let tau = &w.trees()[k - 1];
    let color = tau.color().clone();

    let below = delta_recursive(&tau.child_forest())
        .map_right(|r| LinComb::from(Forest::from(b_plus(r, color.clone()))));
    let mut out = product_shuffle_concat(&delta_recursive(&prefix), &below);
    out.add_term(w.clone(), Forest::empty(), &Rational::one());
    out
}

/// Antipode in closed form: the signed reversal of the sum of `P ⧢ R` over
/// all left cuts.
pub fn antipode(a: &LinComb) -> LinComb {
    a.map_terms(|w| {
        let mut acc = LinComb::zero();
        for cut in left_cuts_unbounded(w) {
            let res = apply_cut_unchecked(w, &cut);
            acc.add_scaled(
                &shuffle(&res.cut_part, &LinComb::from(&res.remainder)),
                &Rational::one(),
            );
        }
        signed_reversal(&acc)
    })
}

/// Antipode by the recursion extracted from the convolution identity, driven
/// entirely by the recursive coproduct; the second oracle for [`antipode`].
pub fn antipode_recursive(a: &LinComb) -> LinComb {
    let mut memo = HashMap::new();
    a.map_terms(|w| antipode_rec_forest(w, &mut memo))
}

fn antipode_rec_forest(w: &Forest, memo: &mut HashMap<Forest, LinComb>) -> LinComb {
    if w.is_empty() {
        return LinComb::one();
    }
    if let Some(hit) = memo.get(w) {
        return hit.clone();
    }
    // Δ(w) minus the w (x) 1 term, then S(w) = -Σ S(p) ⧢ r.
    let mut reduced = delta_recursive(w);
    reduced.add_term(w.clone(), Forest::empty(), &Rational::integer(-1));
    let mut acc = LinComb::zero();
    for ((p, r), c) in reduced.terms() {
        let sp = antipode_rec_forest(p, memo);
        acc.add_scaled(&shuffle(&sp, &LinComb::from(r)), c);
    }
    let result = acc.neg();
    memo.insert(w.clone(), result.clone());
    result
}

/// The signed reversal `t1 … tj -> (-1)^j tj … t1`: the antipode of the word
/// Hopf algebra and the unique anti-automorphism of concatenation sending
/// every tree to its negative.
pub fn signed_reversal(a: &LinComb) -> LinComb {
    a.map_terms(|w| {
        let mut trees = w.trees().to_vec();
        trees.reverse();
        let sign = if w.degree() % 2 == 0 { 1 } else { -1 };
        LinComb::term(Forest::new(trees), Rational::integer(sign))
    })
}

/// Deconcatenation coproduct of the word Hopf algebra:
/// `Δ(w) = Σ_{uv=w} u (x) v`.
pub fn deconcat_coproduct(a: &LinComb) -> TensorComb {
    let mut out = TensorComb::zero();
    for (w, c) in a.terms() {
        for i in 0..=w.degree() {
            out.add_term(
                Forest::new(w.trees()[..i].to_vec()),
                Forest::new(w.trees()[i..].to_vec()),
                c,
            );
        }
    }
    out
}

/// Which coproduct the convolution composes through; the product is the
/// shuffle either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoproductKind {
    /// Full admissible left cuts (the forest Hopf algebra).
    Cuts,
    /// Word splits (the free associative Hopf algebra).
    Deconcatenation,
}

/// Convolution `(A ⋆ B)(a) = μ((A (x) B) Δ(a))` of two linear endomaps given
/// by their action on forests.
pub fn convolution(
    a_map: &dyn Fn(&Forest) -> LinComb,
    b_map: &dyn Fn(&Forest) -> LinComb,
    a: &LinComb,
    kind: CoproductKind,
) -> LinComb {
    let delta = match kind {
        CoproductKind::Cuts => coproduct(a),
        CoproductKind::Deconcatenation => deconcat_coproduct(a),
    };
    let mut out = LinComb::zero();
    for ((p, r), c) in delta.terms() {
        out.add_scaled(&shuffle(&a_map(p), &b_map(r)), c);
    }
    out
}

/// The identity endomap, for use with [`convolution`].
pub fn identity_map(w: &Forest) -> LinComb {
    LinComb::from(w)
}

/// The composite `unit . counit`, for use with [`convolution`].
pub fn unit_counit_map(w: &Forest) -> LinComb {
    if w.is_empty() {
        LinComb::one()
    } else {
        LinComb::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::parse_forest;

    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    fn lc(terms: &[(i64, &str)]) -> LinComb {
        let mut out = LinComb::zero();
        for (c, s) in terms {
            out.add_term(f(s), &Rational::integer(*c));
        }
        out
    }

    fn tc(terms: &[(i64, &str, &str)]) -> TensorComb {
        let mut out = TensorComb::zero();
        for (c, l, r) in terms {
            out.add_term(f(l), f(r), &Rational::integer(*c));
        }
        out
    }

    #[test]
    fn counit_and_unit() {
        assert_eq!(counit(&LinComb::one()), Rational::one());
        let mut a = lc(&[(1, "(())")]);
        a.add_term(Forest::empty(), &Rational::integer(3));
        assert_eq!(counit(&a), Rational::integer(3));
        assert_eq!(unit(Rational::integer(2)), lc(&[(2, "")]));
    }

    #[test]
    fn coproduct_of_unit_and_single_node() {
        assert_eq!(coproduct(&LinComb::one()), tc(&[(1, "", "")]));
        assert_eq!(
            coproduct(&lc(&[(1, "()")])),
            tc(&[(1, "()", ""), (1, "", "()")])
        );
    }

    #[test]
    fn coproduct_matches_known_rows() {
        assert_eq!(
            coproduct(&lc(&[(1, "(())")])),
            tc(&[(1, "(())", ""), (1, "()", "()"), (1, "", "(())")])
        );
        assert_eq!(
            coproduct(&lc(&[(1, "()(())")])),
            tc(&[
                (1, "()(())", ""),
                (2, "()()", "()"),
                (1, "()", "(())"),
                (1, "()", "()()"),
                (1, "", "()(())"),
            ])
        );
    }

    #[test]
    fn recursive_coproduct_agrees() {
        for s in [
            "", "()", "(())", "()()", "()(())", "(())()", "((()))", "(()())",
        ] {
            let a = lc(&[(1, s)]);
            assert_eq!(coproduct(&a), coproduct_recursive(&a), "forest {s}");
        }
        // tree special case Δ(t) = t (x) 1 + (I (x) B+) Δ(B- t)
        let t = lc(&[(1, "((()))")]);
        assert_eq!(coproduct_recursive(&t), coproduct(&t));
    }

    #[test]
    fn antipode_small_cases() {
        assert_eq!(antipode(&LinComb::one()), LinComb::one());
        assert_eq!(antipode(&lc(&[(1, "()")])), lc(&[(-1, "()")]));
        assert_eq!(
            antipode(&lc(&[(1, "(())")])),
            lc(&[(-1, "(())"), (2, "()()")])
        );
        assert_eq!(antipode(&lc(&[(1, "()()")])), lc(&[(1, "()()")]));
        assert_eq!(
            antipode(&lc(&[(1, "(()())")])),
            lc(&[(-1, "(()())"), (1, "()(())"), (1, "(())()"), (-3, "()()()")])
        );
    }

    #[test]
    fn antipode_recursive_agrees() {
        for s in [
            "", "()", "(())", "()()", "()(())", "(()())", "((()))", "(())()",
        ] {
            let a = lc(&[(1, s)]);
            assert_eq!(antipode(&a), antipode_recursive(&a), "forest {s}");
        }
    }

    #[test]
    fn signed_reversal_cases() {
        assert_eq!(signed_reversal(&lc(&[(1, "()(())")])), lc(&[(1, "(())()")]));
        assert_eq!(signed_reversal(&lc(&[(1, "()")])), lc(&[(-1, "()")]));
        assert_eq!(signed_reversal(&LinComb::one()), LinComb::one());
    }

    #[test]
    fn deconcatenation() {
        assert_eq!(
            deconcat_coproduct(&lc(&[(1, "()(())")])),
            tc(&[(1, "()(())", ""), (1, "()", "(())"), (1, "", "()(())")])
        );
        assert_eq!(deconcat_coproduct(&LinComb::one()), tc(&[(1, "", "")]));
    }

    #[test]
    fn deconcatenation_single_letter_recursion() {
        // on words over single-node letters: Δ_F(w a) = w a (x) 1 + Δ_F(w) · (1 (x) a)
        let letters = [f("()"), f("x()"), f("y()")];
        for a in &letters {
            for b in &letters {
                for c in &letters {
                    let w = a.concat(b);
                    let wc = w.concat(c);
                    let lhs = deconcat_coproduct(&LinComb::from(&wc));
                    let mut rhs = deconcat_coproduct(&LinComb::from(&w))
                        .map_right(|r| LinComb::from(r.concat(c)));
                    rhs.add_term(wc.clone(), Forest::empty(), &Rational::one());
                    assert_eq!(lhs, rhs, "word {wc}");
                }
            }
        }
    }

    #[test]
    fn convolution_inverse_identities() {
        // (S ⋆ I)((())) = 0
        let s = |w: &Forest| antipode(&LinComb::from(w));
        assert_eq!(
            convolution(&s, &identity_map, &lc(&[(1, "(())")]), CoproductKind::Cuts),
            LinComb::zero()
        );
        // (I ⋆ I)(1) = 1
        assert_eq!(
            convolution(
                &identity_map,
                &identity_map,
                &LinComb::one(),
                CoproductKind::Cuts
            ),
            LinComb::one()
        );
        // (S_F ⋆ I)(()(())) = 0 in the word structure
        let sf = |w: &Forest| signed_reversal(&LinComb::from(w));
        assert_eq!(
            convolution(
                &sf,
                &identity_map,
                &lc(&[(1, "()(())")]),
                CoproductKind::Deconcatenation
            ),
            LinComb::zero()
        );
    }
}

//! Randomized law checks over colored forests and linear combinations,
//! complementing the exhaustive monochrome battery.

use proptest::prelude::*;

use otree_core::forest::{b_minus, b_plus, equivalent, forget, parse_forest, Color, Forest, Tree};
use otree_core::graft::{gl_product, graft, graft_direct};
use otree_core::hopf::{antipode, coproduct, coproduct_recursive, signed_reversal};
use otree_core::lincomb::{concat, inner, shuffle, LinComb};
use otree_core::rational::Rational;
use otree_core::series::Series;

fn color_strategy() -> impl Strategy<Value = Color> {
    prop_oneof![
        Just(Color::default()),
        Just(Color::new("a").unwrap()),
        Just(Color::new("b_1").unwrap()),
    ]
}

fn tree_strategy(max_nodes: u32) -> impl Strategy<Value = Tree> {
    let leaf = color_strategy().prop_map(Tree::leaf);
    leaf.prop_recursive(3, max_nodes, 3, |inner| {
        (color_strategy(), prop::collection::vec(inner, 0..3))
            .prop_map(|(c, children)| Tree::new(c, children))
    })
}

fn forest_strategy() -> impl Strategy<Value = Forest> {
    prop::collection::vec(tree_strategy(6), 0..4).prop_map(Forest::new)
}

fn lincomb_strategy() -> impl Strategy<Value = LinComb> {
    prop::collection::vec((forest_strategy(), -4i64..=4), 0..3).prop_map(|terms| {
        let mut out = LinComb::zero();
        for (f, c) in terms {
            out.add_term(f, &Rational::integer(c));
        }
        out
    })
}

// Re-render a forest with whitespace noise and explicit default colors.
fn decorate(f: &Forest, spaces: bool, explicit_default: bool) -> String {
    fn tree(t: &Tree, out: &mut String, spaces: bool, explicit: bool) {
        if explicit || !t.color().is_default() {
            out.push_str(t.color().token());
        }
        out.push('(');
        for c in t.children() {
            if spaces {
                out.push(' ');
            }
            tree(c, out, spaces, explicit);
        }
        if spaces {
            out.push('\t');
        }
        out.push(')');
    }
    let mut out = String::new();
    for t in f.trees() {
        if spaces {
            out.push(' ');
        }
        tree(t, &mut out, spaces, explicit_default);
    }
    out
}

proptest! {
    #[test]
    fn parse_print_round_trip(f in forest_strategy(), spaces: bool, explicit: bool) {
        let noisy = decorate(&f, spaces, explicit);
        prop_assert_eq!(parse_forest(&noisy).unwrap(), f.clone());
        prop_assert_eq!(parse_forest(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn b_minus_b_plus_identity(f in forest_strategy(), c in color_strategy()) {
        prop_assert_eq!(b_minus(&Forest::from(b_plus(&f, c))), f);
    }

    #[test]
    fn shuffle_commutes_and_concat_distributes(a in lincomb_strategy(), b in lincomb_strategy(), c in lincomb_strategy()) {
        prop_assert_eq!(shuffle(&a, &b), shuffle(&b, &a));
        prop_assert_eq!(
            concat(&a.add(&b), &c),
            concat(&a, &c).add(&concat(&b, &c))
        );
    }

    #[test]
    fn shuffle_associates(a in forest_strategy(), b in forest_strategy(), c in forest_strategy()) {
        let (la, lb, lc) = (LinComb::from(&a), LinComb::from(&b), LinComb::from(&c));
        prop_assert_eq!(
            shuffle(&shuffle(&la, &lb), &lc),
            shuffle(&la, &shuffle(&lb, &lc))
        );
    }

    #[test]
    fn inner_is_symmetric_and_bilinear(a in lincomb_strategy(), b in lincomb_strategy(), c in lincomb_strategy()) {
        prop_assert_eq!(inner(&a, &b), inner(&b, &a));
        prop_assert_eq!(inner(&a.add(&b), &c), &inner(&a, &c) + &inner(&b, &c));
    }

    #[test]
    fn reversal_is_a_signed_involution(a in lincomb_strategy(), b in lincomb_strategy()) {
        prop_assert_eq!(signed_reversal(&signed_reversal(&a)), a.clone());
        prop_assert_eq!(
            signed_reversal(&concat(&a, &b)),
            concat(&signed_reversal(&b), &signed_reversal(&a))
        );
    }

    #[test]
    fn grafting_oracles_agree(w in forest_strategy(), t in forest_strategy()) {
        // keep the assignment count modest
        prop_assume!(w.degree() <= 3 && t.order() <= 6);
        prop_assert_eq!(
            graft(&LinComb::from(&w), &LinComb::from(&t)),
            graft_direct(&w, &t)
        );
    }

    #[test]
    fn coproduct_oracles_agree_on_random_colored_forests(w in forest_strategy()) {
        prop_assume!(w.order() <= 6);
        let a = LinComb::from(&w);
        prop_assert_eq!(coproduct(&a), coproduct_recursive(&a));
    }

    #[test]
    fn antipode_involution_on_colored_forests(w in forest_strategy()) {
        prop_assume!(w.order() <= 5);
        let a = LinComb::from(&w);
        prop_assert_eq!(antipode(&antipode(&a)), a);
    }

    #[test]
    fn gl_degree_counts(a in forest_strategy(), b in forest_strategy()) {
        prop_assume!(a.order() + b.order() <= 6 && a.degree() <= 2);
        let product = gl_product(&LinComb::from(&a), &LinComb::from(&b));
        let mut pre_collection = Rational::zero();
        for (_, c) in product.terms() {
            pre_collection += c;
        }
        // collected coefficients still count (|b|+1)^deg(a) words
        let expected = ((b.order() + 1) as i64).pow(a.degree() as u32);
        prop_assert_eq!(pre_collection, Rational::integer(expected));
    }

    #[test]
    fn forget_is_orbit_invariant(w in forest_strategy()) {
        prop_assume!(w.order() <= 6);
        let class = forget(&w);
        prop_assert_eq!(forget(class.representative()), class.clone());
        prop_assert!(equivalent(&w, class.representative()));
    }

    #[test]
    fn series_json_round_trip(terms in prop::collection::vec((forest_strategy(), -9i64..=9), 0..4)) {
        let cutoff = terms.iter().map(|(f, _)| f.order()).max().unwrap_or(0);
        let series = Series::with_terms(
            cutoff,
            terms.into_iter().map(|(f, c)| (f, Rational::integer(c))),
        )
        .unwrap();
        prop_assert_eq!(Series::from_json(&series.to_json()).unwrap(), series);
    }
}

//! The exhaustive law battery behind `otree verify`.
//!
//! Every check runs over complete enumerations of monochrome forests up to a
//! caller-chosen order and reports the first counterexample it finds. The
//! brute-force oracles here (rearrangement counting, the full-cut
//! decomposition, the orbit sum) are deliberately independent of the
//! implementations they validate.

use std::collections::{BTreeMap, BTreeSet};

use crate::butcher;
use crate::cut::{
    admissible_left_cuts, apply_cut, full_admissible_left_cuts, left_cuts, word_cuts, Cut,
    NodalCut, NodeAddress,
};
use crate::enumerate::{
    catalan_count, count_forests, enumerate_forests_bounded, visit_forests, ForestFilter,
};
use crate::forest::{
    b_plus, equivalent, forget, orbit, parse_forest, pi, sigma, Color, Forest, Tree,
};
use crate::graft::{gl_product, graft, graft_direct, graft_direct_counted};
use crate::hopf::{
    antipode, antipode_recursive, convolution, coproduct, coproduct_recursive, counit,
    deconcat_coproduct, identity_map, signed_reversal, unit, unit_counit_map, CoproductKind,
};
use crate::lincomb::{concat, inner, product_shuffle_shuffle, shuffle, LinComb, TensorComb};
use crate::rational::Rational;
use crate::series::Series;

/// Outcome of one law check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from_result(name: &str, result: Result<(), String>) -> Check {
        match result {
            Ok(()) => Check {
                name: name.to_string(),
                passed: true,
                detail: String::new(),
            },
            Err(detail) => Check {
                name: name.to_string(),
                passed: false,
                detail,
            },
        }
    }
}

fn mono() -> Vec<Color> {
    vec![Color::default()]
}

/// All monochrome forests of order `0..=max_order`.
pub fn forests_up_to(max_order: usize) -> Vec<Forest> {
    let colors = mono();
    let mut out = Vec::new();
    for n in 0..=max_order {
        out.extend(enumerate_forests_bounded(n, &colors, ForestFilter::All, n).unwrap());
    }
    out
}

fn fail_at(law: &str, witness: &dyn std::fmt::Display) -> Result<(), String> {
    Err(format!("{law} fails at {witness}"))
}

// ---------------------------------------------------------------------------
// forest structure
// ---------------------------------------------------------------------------

pub fn check_grammar_round_trip(max_order: usize) -> Check {
    let run = || {
        for w in forests_up_to(max_order) {
            let printed = w.to_string();
            match parse_forest(&printed) {
                Ok(back) if back == w => {}
                _ => return fail_at("parse . print = id", &printed),
            }
        }
        // a couple of colored forests as well
        let colors = vec![Color::default(), Color::new("a").unwrap()];
        for n in 0..=max_order.min(3) {
            for w in enumerate_forests_bounded(n, &colors, ForestFilter::All, n).unwrap() {
                if parse_forest(&w.to_string()) != Ok(w.clone()) {
                    return fail_at("parse . print = id (colored)", &w);
                }
            }
        }
        Ok(())
    };
    Check::from_result("grammar round trip", run())
}

pub fn check_structural_recursions(max_order: usize) -> Check {
    let run = || {
        let color = Color::default();
        for w in forests_up_to(max_order) {
            let rooted = b_plus(&w, color.clone());
            if rooted.order() != 1 + w.order() {
                return fail_at("|B+ w| = 1 + |w|", &w);
            }
            if crate::forest::b_minus(&Forest::from(rooted)) != w {
                return fail_at("B- . B+ = id", &w);
            }
        }
        for (a, b) in forest_pairs(max_order.min(4)) {
            let ab = a.concat(&b);
            if ab.order() != a.order() + b.order() || ab.degree() != a.degree() + b.degree() {
                return fail_at("order/degree additivity", &ab);
            }
        }
        Ok(())
    };
    Check::from_result("structural recursions", run())
}

pub fn check_catalan_counts(max_n: usize) -> Check {
    let run = || {
        for colors in 1..=3usize {
            for n in 0..=max_n {
                if count_forests(n, colors) != catalan_count(n, colors) {
                    return Err(format!(
                        "recurrence count disagrees with closed form at n={n}, {colors} colors"
                    ));
                }
            }
        }
        // streamed enumeration agrees with the recurrence on feasible cells
        let palettes = [
            vec![Color::default()],
            vec![Color::new("a").unwrap(), Color::new("b").unwrap()],
            vec![
                Color::new("a").unwrap(),
                Color::new("b").unwrap(),
                Color::new("c").unwrap(),
            ],
        ];
        for (i, palette) in palettes.iter().enumerate() {
            let colors = i + 1;
            let stream_to = match colors {
                1 => max_n,
                2 => max_n.min(7),
                _ => max_n.min(6),
            };
            for n in 0..=stream_to {
                let mut seen = 0u64;
                visit_forests(n, palette, n.max(1), &mut |_| seen += 1).unwrap();
                if num_bigint::BigUint::from(seen) != count_forests(n, colors) {
                    return Err(format!(
                        "streamed enumeration disagrees with count at n={n}, {colors} colors"
                    ));
                }
            }
        }
        Ok(())
    };
    Check::from_result("catalan counts", run())
}

// Every tree/branch permutation applied once, duplicates kept: the list has
// pi(w) entries, sigma(w) of which equal w, and orbit(w) distinct ones.
fn rearrangements_tree(t: &Tree) -> Vec<Tree> {
    let child_lists: Vec<Vec<Tree>> = t.children().iter().map(rearrangements_tree).collect();
    let mut selections: Vec<Vec<Tree>> = vec![Vec::new()];
    for options in &child_lists {
        let mut next = Vec::new();
        for sel in &selections {
            for o in options {
                let mut s = sel.clone();
                s.push(o.clone());
                next.push(s);
            }
        }
        selections = next;
    }
    let mut out = Vec::new();
    for sel in selections {
        permute_into(&sel, &mut |perm| {
            out.push(Tree::new(t.color().clone(), perm.to_vec()))
        });
    }
    out
}

fn rearrangements(f: &Forest) -> Vec<Forest> {
    let lists: Vec<Vec<Tree>> = f.trees().iter().map(rearrangements_tree).collect();
    let mut selections: Vec<Vec<Tree>> = vec![Vec::new()];
    for options in &lists {
        let mut next = Vec::new();
        for sel in &selections {
            for o in options {
                let mut s = sel.clone();
                s.push(o.clone());
                next.push(s);
            }
        }
        selections = next;
    }
    let mut out = Vec::new();
    for sel in selections {
        permute_into(&sel, &mut |perm| out.push(Forest::new(perm.to_vec())));
    }
    out
}

fn permute_into(items: &[Tree], give: &mut dyn FnMut(&[Tree])) {
    let mut v = items.to_vec();
    let n = v.len();
    heap(&mut v, n, give);
    fn heap(v: &mut Vec<Tree>, k: usize, give: &mut dyn FnMut(&[Tree])) {
        if k <= 1 {
            give(v);
            return;
        }
        for i in 0..k {
            heap(v, k - 1, give);
            if k.is_multiple_of(2) {
                v.swap(i, k - 1);
            } else {
                v.swap(0, k - 1);
            }
        }
    }
}

pub fn check_symmetry_coefficients(max_order: usize) -> Check {
    let run = || {
        use num_traits::ToPrimitive;
        for w in forests_up_to(max_order) {
            let all = rearrangements(&w);
            let total = all.len() as u64;
            let fixed = all.iter().filter(|v| **v == w).count() as u64;
            let distinct: BTreeSet<&Forest> = all.iter().collect();
            if pi(&w).to_u64() != Some(total) {
                return fail_at("pi = number of permutations", &w);
            }
            if sigma(&w).to_u64() != Some(fixed) {
                return fail_at("sigma = stabilizer size", &w);
            }
            let orb = orbit(&w);
            if orb.len() != distinct.len() || total != fixed * orb.len() as u64 {
                return fail_at("pi = sigma * orbit size", &w);
            }
            let class = forget(&w);
            if orb.iter().next() != Some(class.representative()) {
                return fail_at("representative is the orbit minimum", &w);
            }
            for v in &orb {
                if forget(v) != class || !equivalent(v, &w) {
                    return fail_at("forget constant on the orbit", &w);
                }
            }
        }
        Ok(())
    };
    Check::from_result("symmetry coefficients against brute force", run())
}

// ---------------------------------------------------------------------------
// products
// ---------------------------------------------------------------------------

fn forest_pairs(total: usize) -> Vec<(Forest, Forest)> {
    let mut out = Vec::new();
    for a in forests_up_to(total) {
        for b in forests_up_to(total - a.order()) {
            out.push((a.clone(), b));
        }
    }
    out
}

pub fn check_shuffle_laws(max_order: usize) -> Check {
    let run = || {
        for (a, b) in forest_pairs(max_order) {
            let ab = shuffle(&LinComb::from(&a), &LinComb::from(&b));
            let ba = shuffle(&LinComb::from(&b), &LinComb::from(&a));
            if ab != ba {
                return fail_at("shuffle commutativity", &a.concat(&b));
            }
        }
        for a in forests_up_to(max_order) {
            for b in forests_up_to(max_order - a.order()) {
                for c in forests_up_to(max_order - a.order() - b.order()) {
                    let left = shuffle(
                        &shuffle(&LinComb::from(&a), &LinComb::from(&b)),
                        &LinComb::from(&c),
                    );
                    let right = shuffle(
                        &LinComb::from(&a),
                        &shuffle(&LinComb::from(&b), &LinComb::from(&c)),
                    );
                    if left != right {
                        return fail_at("shuffle associativity", &a.concat(&b).concat(&c));
                    }
                }
            }
        }
        let x = LinComb::from(parse_forest("()(())").unwrap());
        if shuffle(&LinComb::one(), &x) != x {
            return Err("shuffle unit law fails".to_string());
        }
        Ok(())
    };
    Check::from_result("shuffle laws", run())
}

pub fn check_concat_laws(max_order: usize) -> Check {
    let run = || {
        for a in forests_up_to(max_order) {
            for b in forests_up_to(max_order - a.order()) {
                for c in forests_up_to(max_order - a.order() - b.order()) {
                    let (la, lb, lc) = (LinComb::from(&a), LinComb::from(&b), LinComb::from(&c));
                    if concat(&concat(&la, &lb), &lc) != concat(&la, &concat(&lb, &lc)) {
                        return fail_at("concat associativity", &a.concat(&b).concat(&c));
                    }
                    // distributivity over addition
                    if concat(&la.add(&lb), &lc) != concat(&la, &lc).add(&concat(&lb, &lc)) {
                        return fail_at("concat distributivity", &a);
                    }
                }
            }
        }
        let x = LinComb::from(parse_forest("(())").unwrap());
        if concat(&LinComb::one(), &x) != x || concat(&x, &LinComb::one()) != x {
            return Err("concat unit law fails".to_string());
        }
        Ok(())
    };
    Check::from_result("concatenation laws", run())
}

pub fn check_inner_product(max_order: usize) -> Check {
    let run = || {
        let forests = forests_up_to(max_order);
        for a in &forests {
            for b in &forests {
                let expected = if a == b {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                if inner(&LinComb::from(a), &LinComb::from(b)) != expected {
                    return fail_at("forests are orthonormal", &a.concat(b));
                }
            }
        }
        Ok(())
    };
    Check::from_result("inner product orthonormality", run())
}

// ---------------------------------------------------------------------------
// grafting and the GL product
// ---------------------------------------------------------------------------

pub fn check_grafting_oracles(max_total: usize) -> Check {
    let run = || {
        for (w, t) in forest_pairs(max_total) {
            let recursive = graft(&LinComb::from(&w), &LinComb::from(&t));
            let counted = graft_direct_counted(&w, &t);
            if recursive != counted.value {
                return fail_at("recursive grafting = direct grafting", &w.concat(&t));
            }
            let expected_words = if w.degree() == 0 {
                1
            } else {
                (t.order() as u64).pow(w.degree() as u32)
            };
            if counted.term_count != expected_words {
                return fail_at("direct grafting word count", &w.concat(&t));
            }
            for (term, _) in recursive.terms() {
                if term.order() != w.order() + t.order() {
                    return fail_at("grafting order grading", &w.concat(&t));
                }
            }
        }
        // grafting onto a single node adds a root
        for w in forests_up_to(max_total.saturating_sub(1)) {
            let node = parse_forest("()").unwrap();
            let expected = LinComb::from(Forest::from(b_plus(&w, Color::default())));
            if graft_direct(&w, &node) != expected {
                return fail_at("w[B+(1)] = B+(w)", &w);
            }
        }
        Ok(())
    };
    Check::from_result("grafting oracles", run())
}

pub fn check_derivation_rules(max_total: usize) -> Check {
    let run = || {
        for nd in 1..=max_total {
            for d in enumerate_forests_bounded(nd, &mono(), ForestFilter::Trees, nd).unwrap() {
                let dl = LinComb::from(&d);
                for a in forests_up_to(max_total - nd) {
                    for b in forests_up_to(max_total - nd - a.order()) {
                        let (la, lb) = (LinComb::from(&a), LinComb::from(&b));
                        // Leibniz: d[ab] = d[a] b + a d[b]
                        let lhs = graft(&dl, &concat(&la, &lb));
                        let rhs = concat(&graft(&dl, &la), &lb).add(&concat(&la, &graft(&dl, &lb)));
                        if lhs != rhs {
                            return fail_at("Leibniz rule", &d.concat(&a).concat(&b));
                        }
                        // composition: d[a[b]] = (d a)[b] + d[a][b]
                        let lhs = graft(&dl, &graft(&la, &lb));
                        let rhs = graft(&concat(&dl, &la), &lb).add(&graft(&graft(&dl, &la), &lb));
                        if lhs != rhs {
                            return fail_at("composition rule", &d.concat(&a).concat(&b));
                        }
                    }
                }
            }
        }
        Ok(())
    };
    Check::from_result("derivation rules", run())
}

pub fn check_gl_laws(max_total: usize) -> Check {
    let run = || {
        for a in forests_up_to(max_total) {
            for b in forests_up_to(max_total - a.order()) {
                let (la, lb) = (LinComb::from(&a), LinComb::from(&b));
                let ab = gl_product(&la, &lb);
                // order grading and pre-collection count
                for (term, _) in ab.terms() {
                    if term.order() != a.order() + b.order() {
                        return fail_at("GL order grading", &a.concat(&b));
                    }
                }
                let counted = graft_direct_counted(&a, &Forest::from(b_plus(&b, Color::default())));
                let expected = ((b.order() + 1) as u64).pow(a.degree() as u32);
                if counted.term_count != expected {
                    return fail_at("GL pre-collection forest count", &a.concat(&b));
                }
                for c in forests_up_to(max_total - a.order() - b.order()) {
                    let lc = LinComb::from(&c);
                    if gl_product(&ab, &lc) != gl_product(&la, &gl_product(&lb, &lc)) {
                        return fail_at("GL associativity", &a.concat(&b).concat(&c));
                    }
                    // (a ∘ b)[c] = a[b[c]]
                    if graft(&ab, &lc) != graft(&la, &graft(&lb, &lc)) {
                        return fail_at("(a∘b)[c] = a[b[c]]", &a.concat(&b).concat(&c));
                    }
                }
            }
        }
        let x = LinComb::from(parse_forest("()(())").unwrap());
        if gl_product(&LinComb::one(), &x) != x || gl_product(&x, &LinComb::one()) != x {
            return Err("GL unit law fails".to_string());
        }
        Ok(())
    };
    Check::from_result("Grossman-Larson laws", run())
}

// ---------------------------------------------------------------------------
// cuts
// ---------------------------------------------------------------------------

// Independent reconstruction of the full cuts: a word split at position c
// plus an admissible cut of the suffix.
fn full_cuts_by_decomposition(f: &Forest) -> BTreeSet<Cut> {
    let mut out = BTreeSet::new();
    for c in 0..=f.degree() {
        let suffix_cuts: Vec<Vec<NodalCut>> = left_cuts(f)
            .unwrap()
            .into_iter()
            .filter(|cut| cut.is_admissible())
            .filter(|cut| cut.nodal_cuts().iter().all(|nc| nc.node.path()[0] >= c))
            .map(|cut| cut.nodal_cuts().to_vec())
            .collect();
        for mut cuts in suffix_cuts {
            if c > 0 {
                cuts.push(NodalCut {
                    node: NodeAddress::invisible_root(),
                    count: c,
                });
            }
            out.insert(Cut::from_nodal_cuts(cuts));
        }
    }
    out
}

pub fn check_cut_laws(max_order: usize) -> Check {
    let run = || {
        for w in forests_up_to(max_order) {
            let falc: BTreeSet<Cut> = full_admissible_left_cuts(&w).unwrap().into_iter().collect();
            if falc != full_cuts_by_decomposition(&w) {
                return fail_at("full cuts = word split + admissible suffix cut", &w);
            }
            let wc: BTreeSet<Cut> = word_cuts(&w).unwrap().into_iter().collect();
            if !wc.is_subset(&falc) {
                return fail_at("word cuts within full cuts", &w);
            }
            let alc: BTreeSet<Cut> = admissible_left_cuts(&w).unwrap().into_iter().collect();
            if !alc.is_subset(&falc) {
                return fail_at("admissible cuts within full cuts", &w);
            }
            let lc = left_cuts(&w).unwrap();
            if !lc.contains(&Cut::empty()) {
                return fail_at("left cuts contain the empty cut", &w);
            }
            for cut in lc.iter().chain(falc.iter()) {
                let res = apply_cut(&w, cut).map_err(|e| e.to_string())?;
                for (p, _) in res.cut_part.terms() {
                    if p.order() + res.remainder.order() != w.order() {
                        return fail_at("cut order conservation", &w);
                    }
                }
            }
        }
        Ok(())
    };
    Check::from_result("cut taxonomy and application", run())
}

// ---------------------------------------------------------------------------
// coproducts and antipodes
// ---------------------------------------------------------------------------

type Triple = BTreeMap<(Forest, Forest, Forest), Rational>;

fn add_triple(map: &mut Triple, key: (Forest, Forest, Forest), c: Rational) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(key).or_insert_with(Rational::zero);
    *entry += &c;
    if entry.is_zero() {
        let dead: Vec<_> = map
            .iter()
            .filter(|(_, v)| v.is_zero())
            .map(|(k, _)| k.clone())
            .collect();
        for k in dead {
            map.remove(&k);
        }
    }
}

pub fn check_coproduct_oracles(max_order: usize) -> Check {
    let run = || {
        for w in forests_up_to(max_order) {
            let a = LinComb::from(&w);
            if coproduct(&a) != coproduct_recursive(&a) {
                return fail_at("cut coproduct = recursive coproduct", &w);
            }
        }
        Ok(())
    };
    Check::from_result("coproduct oracle agreement", run())
}

pub fn check_coassociativity(max_order: usize) -> Check {
    let run = || {
        for w in forests_up_to(max_order) {
            let delta = coproduct(&LinComb::from(&w));
            let mut left: Triple = BTreeMap::new(); // (Δ (x) I) Δ
            let mut right: Triple = BTreeMap::new(); // (I (x) Δ) Δ
            for ((p, r), c) in delta.terms() {
                for ((p2, r2), c2) in coproduct(&LinComb::from(p)).terms() {
                    add_triple(&mut left, (p2.clone(), r2.clone(), r.clone()), c * c2);
                }
                for ((p2, r2), c2) in coproduct(&LinComb::from(r)).terms() {
                    add_triple(&mut right, (p.clone(), p2.clone(), r2.clone()), c * c2);
                }
            }
            if left != right {
                return fail_at("coassociativity", &w);
            }
            // grading of the tensor factors
            for ((p, r), _) in delta.terms() {
                if p.order() + r.order() != w.order() {
                    return fail_at("coproduct grading", &w);
                }
            }
        }
        Ok(())
    };
    Check::from_result("coassociativity", run())
}

pub fn check_bialgebra_compatibility(max_order: usize) -> Check {
    let run = || {
        for (a, b) in forest_pairs(max_order) {
            let (la, lb) = (LinComb::from(&a), LinComb::from(&b));
            let lhs = coproduct(&shuffle(&la, &lb));
            let rhs = product_shuffle_shuffle(&coproduct(&la), &coproduct(&lb));
            if lhs != rhs {
                return fail_at("coproduct is multiplicative for the shuffle", &a.concat(&b));
            }
            if counit(&shuffle(&la, &lb)) != &counit(&la) * &counit(&lb) {
                return fail_at("counit compatibility", &a.concat(&b));
            }
        }
        Ok(())
    };
    Check::from_result("bialgebra compatibility", run())
}

pub fn check_antipode_oracles(max_order: usize) -> Check {
    let run = || {
        for w in forests_up_to(max_order) {
            let a = LinComb::from(&w);
            if antipode(&a) != antipode_recursive(&a) {
                return fail_at("closed antipode = recursive antipode", &w);
            }
        }
        Ok(())
    };
    Check::from_result("antipode oracle agreement", run())
}

pub fn check_antipode_laws(max_order: usize) -> Check {
    let run = || {
        let s_map = |w: &Forest| antipode(&LinComb::from(w));
        for w in forests_up_to(max_order) {
            let a = LinComb::from(&w);
            let expected = unit(counit(&a));
            if convolution(&s_map, &identity_map, &a, CoproductKind::Cuts) != expected {
                return fail_at("S ⋆ I = unit . counit", &w);
            }
            if convolution(&identity_map, &s_map, &a, CoproductKind::Cuts) != expected {
                return fail_at("I ⋆ S = unit . counit", &w);
            }
            if convolution(&unit_counit_map, &identity_map, &a, CoproductKind::Cuts) != a {
                return fail_at("unit.counit is neutral for convolution", &w);
            }
            if antipode(&antipode(&a)) != a {
                return fail_at("S . S = id", &w);
            }
            // (S (x) S) Δ = twist . Δ . S
            let lhs = coproduct(&a).map_left(s_map).map_right(s_map);
            let rhs = coproduct(&antipode(&a)).twist();
            if lhs != rhs {
                return fail_at("(S (x) S) Δ = twist Δ S", &w);
            }
        }
        for (a, b) in forest_pairs(max_order) {
            let (la, lb) = (LinComb::from(&a), LinComb::from(&b));
            if antipode(&shuffle(&la, &lb)) != shuffle(&antipode(&la), &antipode(&lb)) {
                return fail_at("S(a ⧢ b) = S(a) ⧢ S(b)", &a.concat(&b));
            }
        }
        Ok(())
    };
    Check::from_result("antipode convolution and Sweedler relations", run())
}

pub fn check_word_hopf_laws(max_order: usize) -> Check {
    let run = || {
        let sf = |w: &Forest| signed_reversal(&LinComb::from(w));
        for w in forests_up_to(max_order) {
            let a = LinComb::from(&w);
            let expected = unit(counit(&a));
            if convolution(&sf, &identity_map, &a, CoproductKind::Deconcatenation) != expected {
                return fail_at("S_F ⋆ I = unit . counit (word)", &w);
            }
            if signed_reversal(&signed_reversal(&a)) != a {
                return fail_at("signed reversal is an involution", &w);
            }
            // deconcatenation coassociativity
            let delta = deconcat_coproduct(&a);
            let mut left: Triple = BTreeMap::new();
            let mut right: Triple = BTreeMap::new();
            for ((p, r), c) in delta.terms() {
                for ((p2, r2), c2) in deconcat_coproduct(&LinComb::from(p)).terms() {
                    add_triple(&mut left, (p2.clone(), r2.clone(), r.clone()), c * c2);
                }
                for ((p2, r2), c2) in deconcat_coproduct(&LinComb::from(r)).terms() {
                    add_triple(&mut right, (p.clone(), p2.clone(), r2.clone()), c * c2);
                }
            }
            if left != right {
                return fail_at("deconcatenation coassociativity", &w);
            }
        }
        for (a, b) in forest_pairs(max_order) {
            let (la, lb) = (LinComb::from(&a), LinComb::from(&b));
            // anti-automorphism of concatenation, automorphism of the shuffle
            if signed_reversal(&concat(&la, &lb))
                != concat(&signed_reversal(&lb), &signed_reversal(&la))
            {
                return fail_at("reversal anti-automorphism", &a.concat(&b));
            }
            if signed_reversal(&shuffle(&la, &lb))
                != shuffle(&signed_reversal(&la), &signed_reversal(&lb))
            {
                return fail_at("S_F(a ⧢ b) = S_F(a) ⧢ S_F(b)", &a.concat(&b));
            }
            // deconcatenation is dual to concatenation: the split of ab at
            // position deg(a) is the unique one producing (a, b)
            let w = a.concat(&b);
            if !deconcat_coproduct(&LinComb::from(&w))
                .coefficient(&a, &b)
                .is_one()
            {
                return fail_at("<ab, w> = <a (x) b, deconcat(w)>", &w);
            }
        }
        Ok(())
    };
    Check::from_result("word Hopf structure", run())
}

/// Left grafting is dual to the admissible-cut splitting (the full cuts
/// without the invisible root):
/// `<a[b], w> = Σ_{admissible cuts} <a, P> <b, R>`.
pub fn check_graft_duality(max_order: usize) -> Check {
    let run = || {
        for w in forests_up_to(max_order) {
            let mut splitting = TensorComb::zero();
            for cut in admissible_left_cuts(&w).map_err(|e| e.to_string())? {
                let res = apply_cut(&w, &cut).map_err(|e| e.to_string())?;
                for (p, c) in res.cut_part.terms() {
                    splitting.add_term(p.clone(), res.remainder.clone(), c);
                }
            }
            for (a, b) in forest_pairs(w.order()) {
                if a.order() + b.order() != w.order() {
                    continue;
                }
                let lhs = graft(&LinComb::from(&a), &LinComb::from(&b)).coefficient(&w);
                if lhs != splitting.coefficient(&a, &b) {
                    return fail_at("<a[b], w> = <a (x) b, admissible splitting>", &w);
                }
            }
        }
        Ok(())
    };
    Check::from_result("grafting / admissible-cut duality", run())
}

pub fn check_gl_duality(max_order: usize) -> Check {
    let run = || {
        let forests = forests_up_to(max_order);
        let mut delta_terms: BTreeMap<&Forest, TensorComb> = BTreeMap::new();
        for w in &forests {
            delta_terms.insert(w, coproduct(&LinComb::from(w)));
        }
        for (a, b) in forest_pairs(max_order) {
            let ab = gl_product(&LinComb::from(&a), &LinComb::from(&b));
            for w in &forests {
                if w.order() != a.order() + b.order() {
                    continue;
                }
                let lhs = ab.coefficient(w);
                let rhs = delta_terms[w].coefficient(&a, &b);
                if lhs != rhs {
                    return fail_at("<a∘b, w> = <a (x) b, Δw>", &a.concat(&b).concat(w));
                }
            }
        }
        Ok(())
    };
    Check::from_result("GL product / coproduct duality", run())
}

// ---------------------------------------------------------------------------
// the unordered side
// ---------------------------------------------------------------------------

pub fn check_symmetrization_homomorphism(max_order: usize) -> Check {
    let run = || {
        let classes: Vec<_> = {
            let mut seen = BTreeSet::new();
            forests_up_to(max_order)
                .into_iter()
                .map(|w| forget(&w))
                .filter(|u| seen.insert(u.clone()))
                .collect()
        };
        // injectivity witness
        let mut images = BTreeSet::new();
        for u in &classes {
            let img = butcher::symmetrize_class(u);
            let key = format!("{img}");
            if !images.insert(key) {
                return fail_at("symmetrization injectivity", u.representative());
            }
        }
        for u in &classes {
            let rep = u.representative();
            // recursion = sigma-weighted orbit sum
            if butcher::omega(&LinComb::from(rep)) != butcher::omega_orbit_sum(rep) {
                return fail_at("omega recursion = orbit sum", rep);
            }
            // Ω⁻¹ Ω = id
            let back = butcher::unsymmetrize(&butcher::symmetrize_class(u));
            if back != butcher::ULinComb::from(u.clone()) {
                return fail_at("unsymmetrize . symmetrize = id", rep);
            }
            // Ω Ω = π Ω
            let once = butcher::symmetrize_class(u);
            if butcher::omega(&once) != once.scale(&Rational::from_biguint(pi(rep))) {
                return fail_at("omega . omega = pi omega", rep);
            }
            // coalgebra relation Δ(Ω u) = (Ω (x) Ω) Δ_C(u)
            let lhs = coproduct(&butcher::symmetrize_class(u));
            let mut rhs = TensorComb::zero();
            for ((l, r), c) in butcher::coproduct(&butcher::ULinComb::from(u.clone())).terms() {
                let left = butcher::symmetrize_class(l);
                let right = butcher::symmetrize_class(r);
                for (lw, lc) in left.terms() {
                    for (rw, rc) in right.terms() {
                        rhs.add_term(lw.clone(), rw.clone(), &(&(lc * rc) * c));
                    }
                }
            }
            if lhs != rhs {
                return fail_at("Δ . Ω = (Ω (x) Ω) . Δ_C", rep);
            }
            // antipode intertwining S(Ω u) = Ω(S_C u)
            let lhs = antipode(&butcher::symmetrize_class(u));
            let rhs = butcher::symmetrize(&butcher::antipode(&butcher::ULinComb::from(u.clone())));
            if lhs != rhs {
                return fail_at("S . Ω = Ω . S_C", rep);
            }
            // both unordered coproduct and antipode routes agree
            let a = butcher::ULinComb::from(u.clone());
            if butcher::coproduct(&a) != butcher::coproduct_via_symmetrization(&a) {
                return fail_at("unordered coproduct routes", rep);
            }
            if butcher::antipode(&a) != butcher::antipode_via_symmetrization(&a) {
                return fail_at("unordered antipode routes", rep);
            }
        }
        // multiplicativity Ω(u v) = Ω(u) ⧢ Ω(v)
        for u in &classes {
            for v in &classes {
                if u.order() + v.order() > max_order {
                    continue;
                }
                let prod = butcher::product(
                    &butcher::ULinComb::from(u.clone()),
                    &butcher::ULinComb::from(v.clone()),
                );
                let lhs = butcher::symmetrize(&prod);
                let rhs = shuffle(&butcher::symmetrize_class(u), &butcher::symmetrize_class(v));
                if lhs != rhs {
                    return fail_at(
                        "Ω multiplicativity",
                        &u.representative().concat(v.representative()),
                    );
                }
            }
        }
        Ok(())
    };
    Check::from_result("symmetrization homomorphism", run())
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

// Small deterministic generator, enough to exercise the series laws without
// an external dependency.
struct Lcg(u64);

impl Lcg {
    fn new(seed: u64) -> Lcg {
        Lcg(seed
            .wrapping_mul(2862933555777941757)
            .wrapping_add(3037000493))
    }

    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % ((hi - lo + 1) as u64)) as i64
    }
}

/// A reproducible pseudo-random logarithmic series at the given cutoff:
/// integer coefficients in `[-3, 3]` on trees and on concatenation
/// commutators of trees (both span only logarithmic directions).
pub fn random_logarithmic_series(cutoff: usize, seed: u64) -> Series {
    let mut rng = Lcg::new(seed);
    let mut pattern = LinComb::zero();
    let mut trees = Vec::new();
    for n in 1..=cutoff {
        trees.extend(enumerate_forests_bounded(n, &mono(), ForestFilter::Trees, n).unwrap());
    }
    for t in &trees {
        pattern.add_term(t.clone(), &Rational::integer(rng.int_in(-3, 3)));
    }
    for t1 in &trees {
        for t2 in &trees {
            if t1 >= t2 || t1.order() + t2.order() > cutoff {
                continue;
            }
            let c = Rational::integer(rng.int_in(-3, 3));
            let bracket = concat(&LinComb::from(t1), &LinComb::from(t2))
                .sub(&concat(&LinComb::from(t2), &LinComb::from(t1)));
            pattern.add_scaled(&bracket, &c);
        }
    }
    Series::with_terms(cutoff, pattern.terms().map(|(f, c)| (f.clone(), c.clone()))).unwrap()
}

pub fn check_series_laws(cutoff: usize) -> Check {
    let run = || {
        let eps = Series::identity(cutoff);
        for seed in 0..4u64 {
            let alpha = random_logarithmic_series(cutoff, seed);
            if !alpha.is_logarithmic() {
                return Err(format!("generated series {seed} is not logarithmic"));
            }
            let ea = alpha.exp().map_err(|e| e.to_string())?;
            if !ea.is_exponential() {
                return Err(format!("exp of series {seed} is not exponential"));
            }
            if ea.log().map_err(|e| e.to_string())? != alpha {
                return Err(format!("log . exp differs from identity at seed {seed}"));
            }
            let inv = ea.inverse().map_err(|e| e.to_string())?;
            if ea.compose(&inv).map_err(|e| e.to_string())? != eps
                || inv.compose(&ea).map_err(|e| e.to_string())? != eps
            {
                return Err(format!("series inverse fails at seed {seed}"));
            }
            // group closure and associativity with a second exponential
            let eb = random_logarithmic_series(cutoff, seed + 100)
                .exp()
                .map_err(|e| e.to_string())?;
            let ec = random_logarithmic_series(cutoff, seed + 200)
                .exp()
                .map_err(|e| e.to_string())?;
            let ab = ea.compose(&eb).map_err(|e| e.to_string())?;
            if !ab.is_exponential() {
                return Err(format!("composition leaves the group at seed {seed}"));
            }
            let left = ab.compose(&ec).map_err(|e| e.to_string())?;
            let right = ea
                .compose(&eb.compose(&ec).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            if left != right {
                return Err(format!("composition associativity fails at seed {seed}"));
            }
            if eps.compose(&ea).map_err(|e| e.to_string())? != ea {
                return Err(format!("identity series is not neutral at seed {seed}"));
            }
            // truncation coherence
            if cutoff > 1 {
                let k = cutoff - 1;
                let direct = ea.compose(&eb).map_err(|e| e.to_string())?.truncate(k);
                let truncated = ea
                    .truncate(k)
                    .compose(&eb.truncate(k))
                    .map_err(|e| e.to_string())?;
                if direct != truncated {
                    return Err(format!("truncation coherence fails at seed {seed}"));
                }
            }
            // composition agrees with the dual pairing through the coproduct
            for w in forests_up_to(cutoff) {
                let mut acc = Rational::zero();
                for ((p, r), c) in coproduct(&LinComb::from(&w)).terms() {
                    acc += &(&(&ea.coefficient(p) * &eb.coefficient(r)) * c);
                }
                if acc != ab.coefficient(&w) {
                    return fail_at("composition = pairing through Δ", &w);
                }
            }
        }
        Ok(())
    };
    Check::from_result("series group laws", run())
}

pub fn check_unordered_series_images(cutoff: usize) -> Check {
    let run = || {
        for seed in 0..4u64 {
            let alpha = random_logarithmic_series(cutoff, seed);
            let beta = butcher::to_unordered_series(&alpha);
            if !beta.is_supported_on_trees() {
                return Err(format!(
                    "dual image of a logarithmic series has non-tree support (seed {seed})"
                ));
            }
            let expo = alpha.exp().map_err(|e| e.to_string())?;
            let beta = butcher::to_unordered_series(&expo);
            if !beta.is_multiplicative_on_classes() {
                return Err(format!(
                    "dual image of an exponential series is not multiplicative (seed {seed})"
                ));
            }
        }
        // the counit series maps to the counit series
        let eps = butcher::to_unordered_series(&Series::identity(cutoff));
        let mut expected = crate::series::USeries::new(cutoff);
        expected.set_coefficient(crate::forest::UForest::empty(), Rational::one());
        if eps != expected {
            return Err("dual image of the counit series is not the counit".to_string());
        }
        Ok(())
    };
    Check::from_result("unordered dual series images", run())
}

// ---------------------------------------------------------------------------
// battery
// ---------------------------------------------------------------------------

/// Run the whole battery. `max_order` bounds every exhaustive enumeration;
/// a handful of combinatorially explosive oracles are additionally capped at
/// their customary orders.
pub fn run_all(max_order: usize) -> Vec<Check> {
    let m = max_order;
    vec![
        check_grammar_round_trip(m),
        check_structural_recursions(m),
        check_catalan_counts(m.clamp(4, 8)),
        check_symmetry_coefficients(m.min(4)),
        check_shuffle_laws(m),
        check_concat_laws(m.min(4)),
        check_inner_product(m.min(4)),
        check_grafting_oracles(m),
        check_derivation_rules(m),
        check_gl_laws(m.min(4)),
        check_cut_laws(m),
        check_coproduct_oracles(m),
        check_coassociativity(m),
        check_bialgebra_compatibility(m),
        check_antipode_oracles(m),
        check_antipode_laws(m),
        check_word_hopf_laws(m),
        check_graft_duality(m),
        check_gl_duality(m),
        check_symmetrization_homomorphism(m),
        check_series_laws(m.min(4)),
        check_unordered_series_images(m.min(4)),
    ]
}

//! Left grafting and the Grossman-Larson product.
//!
//! Left grafting `w[a]` is the derivation defined by the recursions
//!
//! ```text
//! t[1]      = 0
//! t[u v]    = (t[u]) v + u (t[v])
//! t[B+_i(u)] = B+_i(t[u]) + B+_i(t u)
//! 1[a]      = a
//! (t w)[a]  = t[w[a]] - (t[w])[a]
//! ```
//!
//! extended bilinearly. [`graft_direct`] implements the equivalent direct
//! description: grafting a k-tree word onto a forest with n nodes is the sum
//! of `n^k` words, obtained by attaching each tree, last to first, as the new
//! first child of any node of the target. The two implementations are
//! independent and cross-validate each other.
//!
//! The Grossman-Larson product composes through an invisible root:
//! `w ∘ v = B-(w[B+(v)])`.

use crate::forest::{b_minus, b_plus, Color, Forest, Tree};
use crate::lincomb::{concat, LinComb};
use crate::rational::Rational;

/// Bilinear left grafting `a[b]`.
pub fn graft(a: &LinComb, b: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (w, cw) in a.terms() {
        for (t, ct) in b.terms() {
            out.add_scaled(&graft_word(w.trees(), t), &(cw * ct));
        }
    }
    out
}

// (t w)[target] = t[w[target]] - (t[w])[target]; the left word shrinks by one
// tree at each step.
fn graft_word(word: &[Tree], target: &Forest) -> LinComb {
    match word.split_first() {
        None => LinComb::from(target),
        Some((tau, rest)) => {
            let inner = graft_word(rest, target);
            let first = graft_tree_lc(tau, &inner);
            let tau_rest = graft_tree(tau, &Forest::new(rest.to_vec()));
            let second = graft(&tau_rest, &LinComb::from(target));
            first.sub(&second)
        }
    }
}

fn graft_tree_lc(tau: &Tree, target: &LinComb) -> LinComb {
    target.map_terms(|w| graft_tree(tau, w))
}

// Single tree onto a forest, by the derivation recursion.
fn graft_tree(tau: &Tree, target: &Forest) -> LinComb {
    match target.degree() {
        0 => LinComb::zero(),
        1 => {
            let t = &target.trees()[0];
            let color = t.color().clone();
            let under = t.child_forest();
            // B+_i(tau[under]) + B+_i(tau under)
            let grafted_below = graft_tree(tau, &under)
                .map_terms(|w| LinComb::from(Forest::from(b_plus(w, color.clone()))));
            let adjoined = Forest::from(b_plus(
                &Forest::singleton(tau.clone()).concat(&under),
                color,
            ));
            grafted_below.add(&LinComb::from(adjoined))
        }
        _ => {
            let head = Forest::singleton(target.trees()[0].clone());
            let tail = Forest::new(target.trees()[1..].to_vec());
            let left = concat(&graft_tree(tau, &head), &LinComb::from(&tail));
            let right = concat(&LinComb::from(&head), &graft_tree(tau, &tail));
            left.add(&right)
        }
    }
}

/// A grafting together with the number of words it produced before collecting
/// equal terms (`n^k` for a k-tree word onto an n-node forest).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraftResult {
    pub value: LinComb,
    pub term_count: u64,
}

/// Direct left grafting of the forest `word` onto `target`: sum over all ways
/// of attaching each tree of `word` to a node of `target`.
pub fn graft_direct(word: &Forest, target: &Forest) -> LinComb {
    graft_direct_counted(word, target).value
}

/// As [`graft_direct`], also reporting the pre-collection word count.
pub fn graft_direct_counted(word: &Forest, target: &Forest) -> GraftResult {
    let k = word.degree();
    let n = target.order();
    if k == 0 {
        return GraftResult {
            value: LinComb::from(target),
            term_count: 1,
        };
    }
    if n == 0 {
        return GraftResult {
            value: LinComb::zero(),
            term_count: 0,
        };
    }

    let mut value = LinComb::zero();
    let mut assignment = vec![0usize; k];
    let mut term_count = 0u64;
    loop {
        // per-node attachment lists; trees attached later (smaller index) end
        // up further left, so pushing in word order gives the final order
        let mut attached: Vec<Vec<Tree>> = vec![Vec::new(); n];
        for (j, &node) in assignment.iter().enumerate() {
            attached[node].push(word.trees()[j].clone());
        }
        let mut next = 0usize;
        let trees = target
            .trees()
            .iter()
            .map(|t| rebuild(t, &attached, &mut next))
            .collect();
        value.add_term(Forest::new(trees), &Rational::one());
        term_count += 1;

        // next assignment in base n
        let mut idx = 0;
        loop {
            if idx == k {
                let count_check = (n as u64).pow(k as u32);
                debug_assert_eq!(term_count, count_check);
                return GraftResult { value, term_count };
            }
            assignment[idx] += 1;
            if assignment[idx] < n {
                break;
            }
            assignment[idx] = 0;
            idx += 1;
        }
    }

    // Preorder walk mirroring the node numbering: new first children go in
    // front of the original ones.
    fn rebuild(t: &Tree, attached: &[Vec<Tree>], next: &mut usize) -> Tree {
        let me = *next;
        *next += 1;
        let mut children: Vec<Tree> = attached[me].clone();
        children.extend(t.children().iter().map(|c| rebuild(c, attached, next)));
        Tree::new(t.color().clone(), children)
    }
}

/// The Grossman-Larson product `a ∘ b`, associative with the empty forest as
/// two-sided unit. Computed as `B-(a[B+(b)])` with an internal root color
/// that user forests can never contain.
pub fn gl_product(a: &LinComb, b: &LinComb) -> LinComb {
    let rooted = b.map_terms(|w| LinComb::from(Forest::from(b_plus(w, Color::reserved_root()))));
    graft(a, &rooted).map_terms(|w| LinComb::from(b_minus(w)))
}

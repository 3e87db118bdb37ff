//! Enumeration and counting of forests by node count.
//!
//! With `i` colors there are `i^n C(2n,n)/(n+1)` forests on `n` nodes (the
//! colored Catalan numbers), so everything here is bounded to keep runtimes
//! desk-scale. The default node bound is [`DEFAULT_MAX_NODES`].

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::forest::{Color, Forest, Tree};

/// Default bound on the node count accepted by the enumerators (16796
/// monochrome forests at 10 nodes).
pub const DEFAULT_MAX_NODES: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("enumeration bound exceeded: {requested} nodes requested, bound is {bound}")]
pub struct BoundExceeded {
    pub requested: usize,
    pub bound: usize,
}

/// Which forests to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ForestFilter {
    #[default]
    All,
    /// Forests of exactly one tree.
    Trees,
    /// Every node has at most one child.
    Tall,
    /// Every tree has height at most one.
    Bushy,
}

impl ForestFilter {
    pub fn keep(&self, f: &Forest) -> bool {
        fn tall(t: &Tree) -> bool {
            t.children().len() <= 1 && t.children().iter().all(tall)
        }
        fn bushy(t: &Tree) -> bool {
            t.children().iter().all(|c| c.children().is_empty())
        }
        match self {
            ForestFilter::All => true,
            ForestFilter::Trees => f.degree() == 1,
            ForestFilter::Tall => f.trees().iter().all(tall),
            ForestFilter::Bushy => f.trees().iter().all(bushy),
        }
    }
}

/// All distinct forests with exactly `n` nodes over the given colors, in
/// canonical order, under the default bound.
pub fn enumerate_forests(
    n: usize,
    colors: &[Color],
    filter: ForestFilter,
) -> Result<Vec<Forest>, BoundExceeded> {
    enumerate_forests_bounded(n, colors, filter, DEFAULT_MAX_NODES)
}

/// As [`enumerate_forests`] with an explicit node bound.
pub fn enumerate_forests_bounded(
    n: usize,
    colors: &[Color],
    filter: ForestFilter,
    bound: usize,
) -> Result<Vec<Forest>, BoundExceeded> {
    if n > bound {
        return Err(BoundExceeded {
            requested: n,
            bound,
        });
    }
    let mut out = Vec::new();
    visit_forests_unbounded(n, colors, &mut |trees| {
        let f = Forest::new(trees.to_vec());
        if filter.keep(&f) {
            out.push(f);
        }
    });
    out.sort();
    Ok(out)
}

/// Stream every forest with exactly `n` nodes to `visit`, without
/// materializing the whole list. Generation order is deterministic but not
/// the canonical order. Subject to `bound` like the materializing variant.
pub fn visit_forests(
    n: usize,
    colors: &[Color],
    bound: usize,
    visit: &mut dyn FnMut(&[Tree]),
) -> Result<(), BoundExceeded> {
    if n > bound {
        return Err(BoundExceeded {
            requested: n,
            bound,
        });
    }
    visit_forests_unbounded(n, colors, visit);
    Ok(())
}

fn visit_forests_unbounded(n: usize, colors: &[Color], visit: &mut dyn FnMut(&[Tree])) {
    let mut scratch = Vec::new();
    go(n, colors, &mut scratch, visit);

    // First-tree decomposition: every forest with n > 0 nodes is uniquely a
    // first tree of size s followed by a forest of size n - s.
    fn go(
        remaining: usize,
        colors: &[Color],
        scratch: &mut Vec<Tree>,
        visit: &mut dyn FnMut(&[Tree]),
    ) {
        if remaining == 0 {
            visit(scratch);
            return;
        }
        for s in 1..=remaining {
            each_tree(s, colors, &mut |t| {
                scratch.push(t);
                go(remaining - s, colors, scratch, visit);
                scratch.pop();
            });
        }
    }

    fn each_tree(size: usize, colors: &[Color], give: &mut dyn FnMut(Tree)) {
        let mut scratch = Vec::new();
        go(size - 1, colors, &mut scratch, &mut |child_trees| {
            for c in colors {
                give(Tree::new(c.clone(), child_trees.to_vec()));
            }
        });
    }
}

/// The number of forests with `n` nodes over `num_colors` colors, computed by
/// the convolution recurrence over the first-tree decomposition (independent
/// of the closed binomial formula, see [`catalan_count`]).
pub fn count_forests(n: usize, num_colors: usize) -> BigUint {
    let colors = BigUint::from(num_colors);
    let mut forests: Vec<BigUint> = vec![BigUint::one()];
    for k in 1..=n {
        let mut total = BigUint::zero();
        for s in 1..=k {
            // trees of size s: a colored root over any forest of size s - 1
            let trees_s = &colors * &forests[s - 1];
            total += trees_s * &forests[k - s];
        }
        forests.push(total);
    }
    forests[n].clone()
}

/// The closed-form count `i^n C(2n,n)/(n+1)`.
pub fn catalan_count(n: usize, num_colors: usize) -> BigUint {
    let colors = BigUint::from(num_colors);
    let catalan = binomial(BigUint::from(2 * n), BigUint::from(n)) / BigUint::from(n + 1);
    num_traits::pow::pow(colors, n) * catalan
}

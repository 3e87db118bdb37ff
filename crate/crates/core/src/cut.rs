//! Cutting operations on forests.
//!
//! A nodal left cut severs the `c` leftmost children of one node; a left cut
//! is a set of nodal cuts at distinct nodes. A cut is admissible when no
//! root path is severed more than once. Full cuts extend this with cuts at an
//! invisible root adjoined above the forest, which split off a prefix of the
//! word; word cuts are the cuts using nothing but the invisible root.
//!
//! Applying a cut splits the forest into the shuffle of the cut-off parts
//! (one part per nodal cut) and the remainder that stays connected to the
//! original roots.

use std::fmt;

use thiserror::Error;

use crate::enumerate::{BoundExceeded, DEFAULT_MAX_NODES};
use crate::forest::{b_minus, b_plus, Color, Forest, Tree};
use crate::lincomb::{shuffle, LinComb};

/// Path to a node: tree index, then child indices. The empty path addresses
/// the invisible root above the whole forest.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeAddress(Vec<usize>);

impl NodeAddress {
    pub fn new(path: Vec<usize>) -> NodeAddress {
        NodeAddress(path)
    }

    pub fn invisible_root() -> NodeAddress {
        NodeAddress(Vec::new())
    }

    pub fn path(&self) -> &[usize] {
        &self.0
    }

    pub fn is_invisible_root(&self) -> bool {
        self.0.is_empty()
    }

    /// The node in `f`, or `None` for the invisible root or a dangling path.
    pub fn resolve<'f>(&self, f: &'f Forest) -> Option<&'f Tree> {
        let (&first, rest) = self.0.split_first()?;
        let mut node = f.trees().get(first)?;
        for &i in rest {
            node = node.children().get(i)?;
        }
        Some(node)
    }

    /// Number of children of the addressed node; the invisible root has the
    /// trees of the forest as children.
    pub fn child_count_in(&self, f: &Forest) -> Option<usize> {
        if self.is_invisible_root() {
            Some(f.degree())
        } else {
            self.resolve(f).map(|t| t.children().len())
        }
    }
}

impl fmt::Display for NodeAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "root");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Severs the `count` leftmost children of `node`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodalCut {
    pub node: NodeAddress,
    pub count: usize,
}

/// A set of nodal cuts at distinct nodes, with its taxonomy precomputed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cut {
    nodal_cuts: Vec<NodalCut>,
    admissible: bool,
    full: bool,
    word: bool,
}

impl Cut {
    /// Assemble a cut from nodal cuts; the taxonomy flags are computed here.
    pub fn from_nodal_cuts(nodal_cuts: Vec<NodalCut>) -> Cut {
        Cut::new(nodal_cuts)
    }

    fn new(mut nodal_cuts: Vec<NodalCut>) -> Cut {
        nodal_cuts.sort();
        let admissible = is_admissible(&nodal_cuts);
        let full = nodal_cuts.iter().any(|c| c.node.is_invisible_root());
        let word = nodal_cuts.iter().all(|c| c.node.is_invisible_root());
        Cut {
            nodal_cuts,
            admissible,
            full,
            word,
        }
    }

    pub fn empty() -> Cut {
        Cut::new(Vec::new())
    }

    pub fn nodal_cuts(&self) -> &[NodalCut] {
        &self.nodal_cuts
    }

    pub fn is_empty(&self) -> bool {
        self.nodal_cuts.is_empty()
    }

    /// No root path severed more than once.
    pub fn is_admissible(&self) -> bool {
        self.admissible
    }

    /// Uses the invisible root.
    pub fn is_full(&self) -> bool {
        self.full
    }

    /// Uses nothing but the invisible root: splits the word in two.
    pub fn is_word(&self) -> bool {
        self.word
    }

    pub fn in_nlc(&self) -> bool {
        self.nodal_cuts.len() == 1 && !self.full
    }

    pub fn in_lc(&self) -> bool {
        !self.full
    }

    pub fn in_alc(&self) -> bool {
        !self.full && self.admissible
    }

    pub fn in_falc(&self) -> bool {
        self.admissible
    }

    pub fn in_wc(&self) -> bool {
        self.word
    }
}

// A cut severs paths twice exactly when some nodal cut sits inside a severed
// subtree of another: q descends through child i < c of p.
fn is_admissible(cuts: &[NodalCut]) -> bool {
    for a in cuts {
        for b in cuts {
            if a.node == b.node {
                continue;
            }
            let pa = a.node.path();
            let pb = b.node.path();
            if pb.len() > pa.len() && pb[..pa.len()] == *pa && pb[pa.len()] < a.count {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CutError {
    #[error(transparent)]
    Bound(#[from] BoundExceeded),
    #[error("nodal cut address {address} does not resolve in the forest")]
    InvalidAddress { address: String },
    #[error("nodal cut at {address} severs {count} children but the node has {available}")]
    CountOutOfRange {
        address: String,
        count: usize,
        available: usize,
    },
    #[error("two nodal cuts address the same node {address}")]
    DuplicateNode { address: String },
}

fn check_bound(f: &Forest) -> Result<(), CutError> {
    let order = f.order();
    if order > DEFAULT_MAX_NODES {
        Err(BoundExceeded {
            requested: order,
            bound: DEFAULT_MAX_NODES,
        }
        .into())
    } else {
        Ok(())
    }
}

// All (address, child count) pairs for real nodes with at least one child,
// in address order.
fn parents(f: &Forest) -> Vec<(NodeAddress, usize)> {
    fn walk(t: &Tree, path: &mut Vec<usize>, out: &mut Vec<(NodeAddress, usize)>) {
        if !t.children().is_empty() {
            out.push((NodeAddress::new(path.clone()), t.children().len()));
        }
        for (i, c) in t.children().iter().enumerate() {
            path.push(i);
            walk(c, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for (i, t) in f.trees().iter().enumerate() {
        let mut path = vec![i];
        walk(t, &mut path, &mut out);
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

// Every choice of nodal cut degree (0 = no cut) over the given parent nodes.
fn enumerate_over(parents: &[(NodeAddress, usize)]) -> Vec<Cut> {
    let mut out = Vec::new();
    let mut choice = vec![0usize; parents.len()];
    loop {
        let cuts: Vec<NodalCut> = parents
            .iter()
            .zip(&choice)
            .filter(|(_, &c)| c > 0)
            .map(|((addr, _), &c)| NodalCut {
                node: addr.clone(),
                count: c,
            })
            .collect();
        out.push(Cut::new(cuts));
        let mut idx = 0;
        loop {
            if idx == parents.len() {
                out.sort_by(|a, b| a.nodal_cuts.cmp(&b.nodal_cuts));
                return out;
            }
            choice[idx] += 1;
            if choice[idx] <= parents[idx].1 {
                break;
            }
            choice[idx] = 0;
            idx += 1;
        }
    }
}

pub(crate) fn left_cuts_unbounded(f: &Forest) -> Vec<Cut> {
    enumerate_over(&parents(f))
}

/// All left cuts of `f`, including the empty cut.
pub fn left_cuts(f: &Forest) -> Result<Vec<Cut>, CutError> {
    check_bound(f)?;
    Ok(left_cuts_unbounded(f))
}

/// The single-node cuts.
pub fn nodal_left_cuts(f: &Forest) -> Result<Vec<Cut>, CutError> {
    Ok(left_cuts(f)?.into_iter().filter(Cut::in_nlc).collect())
}

/// The left cuts severing every root path at most once.
pub fn admissible_left_cuts(f: &Forest) -> Result<Vec<Cut>, CutError> {
    Ok(left_cuts(f)?.into_iter().filter(Cut::in_alc).collect())
}

pub(crate) fn full_admissible_left_cuts_unbounded(f: &Forest) -> Vec<Cut> {
    // Adjoin the invisible root, take the admissible cuts of the resulting
    // tree, and translate addresses back down.
    let rooted = Forest::from(b_plus(f, Color::reserved_root()));
    left_cuts_unbounded(&rooted)
        .into_iter()
        .filter(Cut::is_admissible)
        .map(|cut| {
            let translated = cut
                .nodal_cuts
                .iter()
                .map(|nc| NodalCut {
                    node: NodeAddress::new(nc.node.path()[1..].to_vec()),
                    count: nc.count,
                })
                .collect();
            Cut::new(translated)
        })
        .collect()
}

/// The admissible cuts of the forest extended by an invisible root; contains
/// the empty cut and the cut-everything cut.
pub fn full_admissible_left_cuts(f: &Forest) -> Result<Vec<Cut>, CutError> {
    check_bound(f)?;
    Ok(full_admissible_left_cuts_unbounded(f))
}

pub(crate) fn word_cuts_unbounded(f: &Forest) -> Vec<Cut> {
    let mut out = vec![Cut::empty()];
    for c in 1..=f.degree() {
        out.push(Cut::new(vec![NodalCut {
            node: NodeAddress::invisible_root(),
            count: c,
        }]));
    }
    out
}

/// The cuts splitting the word into a prefix and a suffix.
pub fn word_cuts(f: &Forest) -> Result<Vec<Cut>, CutError> {
    check_bound(f)?;
    Ok(word_cuts_unbounded(f))
}

/// The two sides of an applied cut: the shuffle of the cut-off sub-forests
/// and the remaining root-connected forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub cut_part: LinComb,
    pub remainder: Forest,
}

fn validate(f: &Forest, cut: &Cut) -> Result<(), CutError> {
    for pair in cut.nodal_cuts.windows(2) {
        if pair[0].node == pair[1].node {
            return Err(CutError::DuplicateNode {
                address: pair[0].node.to_string(),
            });
        }
    }
    for nc in &cut.nodal_cuts {
        let available = nc.node.child_count_in(f).ok_or(CutError::InvalidAddress {
            address: nc.node.to_string(),
        })?;
        if nc.count == 0 || nc.count > available {
            return Err(CutError::CountOutOfRange {
                address: nc.node.to_string(),
                count: nc.count,
                available,
            });
        }
    }
    Ok(())
}

/// Apply a cut enumerated for `f`.
pub fn apply_cut(f: &Forest, cut: &Cut) -> Result<CutResult, CutError> {
    validate(f, cut)?;
    Ok(apply_cut_unchecked(f, cut))
}

pub(crate) fn apply_cut_unchecked(f: &Forest, cut: &Cut) -> CutResult {
    // Work on the rooted extension so the invisible-root cut is just another
    // nodal cut; the remainder loses the artificial root again at the end.
    let rooted = Forest::from(b_plus(f, Color::reserved_root()));
    let lookup: std::collections::BTreeMap<&[usize], usize> = cut
        .nodal_cuts
        .iter()
        .map(|nc| (nc.node.path(), nc.count))
        .collect();

    fn walk(
        t: &Tree,
        path: &mut Vec<usize>,
        lookup: &std::collections::BTreeMap<&[usize], usize>,
        parts: &mut Vec<Forest>,
    ) -> Tree {
        let processed: Vec<Tree> = t
            .children()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                path.push(i);
                let done = walk(c, path, lookup, parts);
                path.pop();
                done
            })
            .collect();
        // translated address: drop the leading 0 of the artificial root
        let keep = match lookup.get(&path[1..]) {
            Some(&count) => {
                parts.push(Forest::new(processed[..count].to_vec()));
                processed[count..].to_vec()
            }
            None => processed,
        };
        Tree::new(t.color().clone(), keep)
    }

    let mut parts = Vec::new();
    let mut path = vec![0usize];
    let remainder_rooted = walk(&rooted.trees()[0], &mut path, &lookup, &mut parts);
    let remainder = b_minus(&Forest::from(remainder_rooted));

    let mut cut_part = LinComb::one();
    for p in parts {
        cut_part = shuffle(&cut_part, &LinComb::from(p));
    }
    CutResult {
        cut_part,
        remainder,
    }
}

//! The commutative Hopf algebra of unordered forests and the symmetrization
//! map embedding it into the ordered one.
//!
//! The unordered product is commutative concatenation (multiset union of
//! trees); the coproduct follows the classical root recursion and is
//! multiplicative on forests; the antipode is the convolution inverse of the
//! identity. Each costructure is also computable by conjugating the ordered
//! one with the symmetrization, and the two routes are kept as mutual
//! oracles.
//!
//! Symmetrization `Ω` sends a class to the sum of all its orderings weighted
//! by the symmetry coefficient; `Ω⁻¹ a = Σ a(w)/π(w) forget(w)` is its left
//! inverse, and the dual map carries ordered dual series to unordered ones.

use std::collections::BTreeMap;
use std::fmt;

use crate::forest::{b_plus, forget, orbit, pi, sigma, Forest, UForest};
use crate::hopf;
use crate::lincomb::{shuffle, LinComb};
use crate::rational::Rational;
use crate::series::{Series, USeries};

/// A finite linear combination of unordered forests.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ULinComb {
    terms: BTreeMap<UForest, Rational>,
}

impl ULinComb {
    pub fn zero() -> ULinComb {
        ULinComb::default()
    }

    pub fn one() -> ULinComb {
        ULinComb::from(UForest::empty())
    }

    pub fn term(class: UForest, coeff: Rational) -> ULinComb {
        let mut out = ULinComb::zero();
        out.add_term(class, &coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, class: &UForest) -> Rational {
        self.terms
            .get(class)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UForest, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, class: UForest, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(class) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &ULinComb, factor: &Rational) {
        for (u, c) in &other.terms {
            self.add_term(u.clone(), &(c * factor));
        }
    }

    pub fn add(&self, other: &ULinComb) -> ULinComb {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn neg(&self) -> ULinComb {
        let mut out = ULinComb::zero();
        out.add_scaled(self, &Rational::integer(-1));
        out
    }

    pub fn map_terms<F: FnMut(&UForest) -> ULinComb>(&self, mut map: F) -> ULinComb {
        let mut out = ULinComb::zero();
        for (u, c) in &self.terms {
            out.add_scaled(&map(u), c);
        }
        out
    }
}

impl From<UForest> for ULinComb {
    fn from(u: UForest) -> ULinComb {
        ULinComb::term(u, Rational::one())
    }
}

impl fmt::Display for ULinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // render through the representative, like LinComb
        let mut as_lc = LinComb::zero();
        for (u, c) in &self.terms {
            as_lc.add_term(u.representative().clone(), c);
        }
        as_lc.fmt(f)
    }
}

/// A linear combination of pairs of unordered forests.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UTensorComb {
    terms: BTreeMap<(UForest, UForest), Rational>,
}

impl UTensorComb {
    pub fn zero() -> UTensorComb {
        UTensorComb::default()
    }

    pub fn pair(left: UForest, right: UForest) -> UTensorComb {
        let mut out = UTensorComb::zero();
        out.add_term(left, right, &Rational::one());
        out
    }

    pub fn coefficient(&self, left: &UForest, right: &UForest) -> Rational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(UForest, UForest), &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: UForest, right: UForest, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UTensorComb, factor: &Rational) {
        for ((l, r), c) in &other.terms {
            self.add_term(l.clone(), r.clone(), &(c * factor));
        }
    }

    /// Componentwise commutative product, extended bilinearly.
    pub fn product(&self, other: &UTensorComb) -> UTensorComb {
        let mut out = UTensorComb::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                out.add_term(class_concat(l1, l2), class_concat(r1, r2), &(c1 * c2));
            }
        }
        out
    }
}

fn class_concat(a: &UForest, b: &UForest) -> UForest {
    forget(&a.representative().concat(b.representative()))
}

/// Commutative concatenation of unordered forests, extended bilinearly.
pub fn product(a: &ULinComb, b: &ULinComb) -> ULinComb {
    let mut out = ULinComb::zero();
    for (ua, ca) in a.terms() {
        for (ub, cb) in b.terms() {
            out.add_term(class_concat(ua, ub), &(ca * cb));
        }
    }
    out
}

/// Unordered coproduct by the root recursion
///
/// ```text
/// Δ(1)   = 1 (x) 1
/// Δ(t)   = t (x) 1 + (I (x) B+_i) Δ(B- t)
/// Δ(w t) = Δ(w) Δ(t)
/// ```
pub fn coproduct(a: &ULinComb) -> UTensorComb {
    let mut out = UTensorComb::zero();
    for (u, c) in a.terms() {
        out.add_scaled(&delta_class(u), c);
    }
    out
}

fn delta_class(u: &UForest) -> UTensorComb {
    let rep = u.representative();
    if rep.is_empty() {
        return UTensorComb::pair(UForest::empty(), UForest::empty());
    }
    if rep.degree() == 1 {
        let tau = &rep.trees()[0];
        let color = tau.color().clone();
        let below = delta_class(&forget(&tau.child_forest()));
        let mut out = UTensorComb::zero();
        for ((l, r), c) in below.terms() {
            let lifted = forget(&Forest::from(b_plus(r.representative(), color.clone())));
            out.add_term(l.clone(), lifted, c);
        }
        out.add_term(u.clone(), UForest::empty(), &Rational::one());
        out
    } else {
        let k = rep.degree();
        let prefix = forget(&Forest::new(rep.trees()[..k - 1].to_vec()));
        let last = forget(&Forest::singleton(rep.trees()[k - 1].clone()));
        delta_class(&prefix).product(&delta_class(&last))
    }
}

/// Unordered coproduct through the ordered one:
/// `(Ω⁻¹ (x) Ω⁻¹) Δ(Ω a)`. Second route, kept as an oracle for
/// [`coproduct`].
pub fn coproduct_via_symmetrization(a: &ULinComb) -> UTensorComb {
    let mut out = UTensorComb::zero();
    for (u, c) in a.terms() {
        let ordered = hopf::coproduct(&symmetrize_class(u));
        for ((p, r), pc) in ordered.terms() {
            let factor = Rational::from_biguint(pi(p)) * Rational::from_biguint(pi(r));
            out.add_term(forget(p), forget(r), &(&(pc * c) / &factor));
        }
    }
    out
}

/// Unordered antipode as the convolution inverse of the identity.
pub fn antipode(a: &ULinComb) -> ULinComb {
    a.map_terms(antipode_class)
}

fn antipode_class(u: &UForest) -> ULinComb {
    if u.representative().is_empty() {
        return ULinComb::one();
    }
    // S(w) = -Σ' S(w(1)) w(2) over the coproduct without the w (x) 1 term
    let mut reduced = delta_class(u);
    reduced.add_term(u.clone(), UForest::empty(), &Rational::integer(-1));
    let mut acc = ULinComb::zero();
    for ((l, r), c) in reduced.terms() {
        let sl = antipode_class(l);
        acc.add_scaled(&product(&sl, &ULinComb::from(r.clone())), c);
    }
    acc.neg()
}

/// Unordered antipode through the ordered one: `Ω⁻¹(S(Ω a))`. Second route,
/// kept as an oracle for [`antipode`].
pub fn antipode_via_symmetrization(a: &ULinComb) -> ULinComb {
    let mut out = ULinComb::zero();
    for (u, c) in a.terms() {
        out.add_scaled(&unsymmetrize(&hopf::antipode(&symmetrize_class(u))), c);
    }
    out
}

/// Symmetrization on ordered forests, by the recursion
///
/// ```text
/// Ω(1)   = 1
/// Ω(w t) = Ω(w) ⧢ Ω(t)
/// Ω(B+_i(w)) = B+_i(Ω(w))
/// ```
pub fn omega(a: &LinComb) -> LinComb {
    a.map_terms(omega_forest)
}

fn omega_forest(w: &Forest) -> LinComb {
    if w.is_empty() {
        return LinComb::one();
    }
    if w.degree() == 1 {
        let tau = &w.trees()[0];
        let color = tau.color().clone();
        return omega_forest(&tau.child_forest())
            .map_terms(|u| LinComb::from(Forest::from(b_plus(u, color.clone()))));
    }
    let k = w.degree();
    let prefix = Forest::new(w.trees()[..k - 1].to_vec());
    let last = Forest::singleton(w.trees()[k - 1].clone());
    shuffle(&omega_forest(&prefix), &omega_forest(&last))
}

/// Symmetrization of a class: `Ω` applied to its representative.
pub fn symmetrize_class(u: &UForest) -> LinComb {
    omega_forest(u.representative())
}

/// Symmetrization of an unordered combination into the ordered space.
pub fn symmetrize(a: &ULinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (u, c) in a.terms() {
        out.add_scaled(&symmetrize_class(u), c);
    }
    out
}

/// The orbit-sum characterization `Ω(w) = sigma(w) Σ_{v ~ w} v`, used as an
/// independent oracle for the recursive [`omega`].
pub fn omega_orbit_sum(w: &Forest) -> LinComb {
    let weight = Rational::from_biguint(sigma(w));
    let mut out = LinComb::zero();
    for v in orbit(w) {
        out.add_term(v, &weight);
    }
    out
}

/// Left inverse of symmetrization: `Σ a(w)/π(w) forget(w)`.
pub fn unsymmetrize(a: &LinComb) -> ULinComb {
    let mut out = ULinComb::zero();
    for (w, c) in a.terms() {
        out.add_term(forget(w), &(c / &Rational::from_biguint(pi(w))));
    }
    out
}

/// Dual of the symmetrization: carries an ordered dual series to the
/// unordered side by `β(class) = sigma(class) Σ_{w in class} α(w)`.
pub fn to_unordered_series(s: &Series) -> USeries {
    let mut sums: BTreeMap<UForest, Rational> = BTreeMap::new();
    for (w, c) in s.terms() {
        let entry = sums.entry(forget(w)).or_insert_with(Rational::zero);
        *entry += c;
    }
    let mut out = USeries::new(s.cutoff());
    for (u, total) in sums {
        let weighted = &Rational::from_biguint(sigma(u.representative())) * &total;
        out.set_coefficient(u, weighted);
    }
    out
}

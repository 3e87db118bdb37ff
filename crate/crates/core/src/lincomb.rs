//! Exact-rational linear combinations of forests and of forest pairs.
//!
//! [`LinComb`] is a finite association from forests to rationals with no zero
//! coefficients stored; [`TensorComb`] is the same over ordered pairs of
//! forests (elements of the tensor square). Terms are kept in a `BTreeMap`
//! under the canonical forest order, so iteration and printing are
//! deterministic.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::forest::Forest;
use crate::rational::Rational;

/// A finite linear combination of forests with exact rational coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinComb {
    terms: BTreeMap<Forest, Rational>,
}

impl LinComb {
    pub fn zero() -> LinComb {
        LinComb::default()
    }

    /// The empty forest with coefficient one: the unit of concatenation and
    /// of the shuffle product.
    pub fn one() -> LinComb {
        LinComb::from(Forest::empty())
    }

    pub fn term(forest: Forest, coeff: Rational) -> LinComb {
        let mut lc = LinComb::zero();
        lc.add_term(forest, &coeff);
        lc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `forest` (zero when absent).
    pub fn coefficient(&self, forest: &Forest) -> Rational {
        self.terms
            .get(forest)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Forest, &Rational)> {
        self.terms.iter()
    }

    pub fn forests(&self) -> impl Iterator<Item = &Forest> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, forest: Forest, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(forest);
        match entry {
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

    pub fn add_scaled(&mut self, other: &LinComb, factor: &Rational) {
        for (f, c) in &other.terms {
            self.add_term(f.clone(), &(c * factor));
        }
    }

    pub fn add(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::integer(-1));
        out
    }

    pub fn neg(&self) -> LinComb {
        self.scale(&Rational::integer(-1))
    }

    pub fn scale(&self, factor: &Rational) -> LinComb {
        let mut out = LinComb::zero();
        out.add_scaled(self, factor);
        out
    }

    /// Linear extension: apply `map` to every basis forest and recombine.
    pub fn map_terms<F: FnMut(&Forest) -> LinComb>(&self, mut map: F) -> LinComb {
        let mut out = LinComb::zero();
        for (f, c) in &self.terms {
            out.add_scaled(&map(f), c);
        }
        out
    }

    /// JSON form: a canonically sorted array of `{"coeff", "forest"}`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(f, c)| json!({ "coeff": c.to_string(), "forest": f.to_string() }))
                .collect(),
        )
    }
}

impl From<Forest> for LinComb {
    fn from(f: Forest) -> LinComb {
        LinComb::term(f, Rational::one())
    }
}

impl From<&Forest> for LinComb {
    fn from(f: &Forest) -> LinComb {
        LinComb::from(f.clone())
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    coeff: &Rational,
    body: &str,
    first: bool,
) -> fmt::Result {
    let negative = coeff.is_negative();
    let magnitude = if negative { -coeff } else { coeff.clone() };
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if body.is_empty() {
        // scalar multiple of the empty forest
        write!(f, "{magnitude}")
    } else if magnitude.is_one() {
        write!(f, "{body}")
    } else {
        write!(f, "{magnitude}·{body}")
    }
}

/// Text form: terms joined by `" + "`/`" - "`, coefficient prefixes `p/q·`,
/// the empty forest rendered as a bare scalar.
impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (forest, coeff)) in self.terms.iter().enumerate() {
            write_term(f, coeff, &forest.to_string(), i == 0)?;
        }
        Ok(())
    }
}

/// Inner product making the forests an orthonormal family.
pub fn inner(a: &LinComb, b: &LinComb) -> Rational {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut acc = Rational::zero();
    for (f, c) in small.terms() {
        acc += &(c * &large.coefficient(f));
    }
    acc
}

/// Bilinear extension of word concatenation.
pub fn concat(a: &LinComb, b: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (fa, ca) in a.terms() {
        for (fb, cb) in b.terms() {
            out.add_term(fa.concat(fb), &(ca * cb));
        }
    }
    out
}

/// Shuffle of two forests: the sum over all interleavings preserving the
/// internal order of each word.
pub fn shuffle_forests(a: &Forest, b: &Forest) -> LinComb {
    fn go(
        a: &[crate::forest::Tree],
        b: &[crate::forest::Tree],
        out: &mut Vec<Vec<crate::forest::Tree>>,
    ) {
        if a.is_empty() {
            out.push(b.to_vec());
            return;
        }
        if b.is_empty() {
            out.push(a.to_vec());
            return;
        }
        let mark = out.len();
        go(&a[1..], b, out);
        for w in &mut out[mark..] {
            w.insert(0, a[0].clone());
        }
        let mark = out.len();
        go(a, &b[1..], out);
        for w in &mut out[mark..] {
            w.insert(0, b[0].clone());
        }
    }
    let mut words = Vec::new();
    go(a.trees(), b.trees(), &mut words);
    let one = Rational::one();
    let mut out = LinComb::zero();
    for w in words {
        out.add_term(Forest::new(w), &one);
    }
    out
}

/// Bilinear extension of the shuffle product; commutative and associative
/// with the empty forest as unit.
pub fn shuffle(a: &LinComb, b: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (fa, ca) in a.terms() {
        for (fb, cb) in b.terms() {
            out.add_scaled(&shuffle_forests(fa, fb), &(ca * cb));
        }
    }
    out
}

/// A finite linear combination of ordered pairs of forests.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TensorComb {
    terms: BTreeMap<(Forest, Forest), Rational>,
}

impl TensorComb {
    pub fn zero() -> TensorComb {
        TensorComb::default()
    }

    pub fn pair(left: Forest, right: Forest) -> TensorComb {
        TensorComb::term(left, right, Rational::one())
    }

    pub fn term(left: Forest, right: Forest, coeff: Rational) -> TensorComb {
        let mut t = TensorComb::zero();
        t.add_term(left, right, &coeff);
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, left: &Forest, right: &Forest) -> Rational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Forest, Forest), &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: Forest, right: Forest, coeff: &Rational) {
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

    pub fn add_scaled(&mut self, other: &TensorComb, factor: &Rational) {
        for ((l, r), c) in &other.terms {
            self.add_term(l.clone(), r.clone(), &(c * factor));
        }
    }

    pub fn add(&self, other: &TensorComb) -> TensorComb {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &TensorComb) -> TensorComb {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::integer(-1));
        out
    }

    pub fn scale(&self, factor: &Rational) -> TensorComb {
        let mut out = TensorComb::zero();
        out.add_scaled(self, factor);
        out
    }

    /// Swap the two slots: `l (x) r -> r (x) l`.
    pub fn twist(&self) -> TensorComb {
        let mut out = TensorComb::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c);
        }
        out
    }

    /// Linear map applied in the left slot.
    pub fn map_left<F: FnMut(&Forest) -> LinComb>(&self, mut map: F) -> TensorComb {
        let mut out = TensorComb::zero();
        for ((l, r), c) in &self.terms {
            for (lw, lc) in map(l).terms() {
                out.add_term(lw.clone(), r.clone(), &(c * lc));
            }
        }
        out
    }

    /// Linear map applied in the right slot.
    pub fn map_right<F: FnMut(&Forest) -> LinComb>(&self, mut map: F) -> TensorComb {
        let mut out = TensorComb::zero();
        for ((l, r), c) in &self.terms {
            for (rw, rc) in map(r).terms() {
                out.add_term(l.clone(), rw.clone(), &(c * rc));
            }
        }
        out
    }

    /// JSON form: canonically sorted `{"coeff", "left", "right"}` rows.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|((l, r), c)| {
                    json!({
                        "coeff": c.to_string(),
                        "left": l.to_string(),
                        "right": r.to_string(),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for TensorComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        fn slot(w: &Forest) -> String {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.to_string()
            }
        }
        for (i, ((l, r), coeff)) in self.terms.iter().enumerate() {
            let body = format!("{} ⊗ {}", slot(l), slot(r));
            write_term(f, coeff, &body, i == 0)?;
        }
        Ok(())
    }
}

/// Product with a shuffle on the left slot and concatenation on the right:
/// `(w1 (x) t1) · (w2 (x) t2) = (w1 ⧢ w2) (x) t1 t2`, extended bilinearly.
pub fn product_shuffle_concat(x: &TensorComb, y: &TensorComb) -> TensorComb {
    let mut out = TensorComb::zero();
    for ((l1, r1), c1) in x.terms() {
        for ((l2, r2), c2) in y.terms() {
            let left = shuffle_forests(l1, l2);
            let right = r1.concat(r2);
            let c = c1 * c2;
            for (lw, lc) in left.terms() {
                out.add_term(lw.clone(), right.clone(), &(lc * &c));
            }
        }
    }
    out
}

/// Product with the shuffle in both slots, extended bilinearly.
pub fn product_shuffle_shuffle(x: &TensorComb, y: &TensorComb) -> TensorComb {
    let mut out = TensorComb::zero();
    for ((l1, r1), c1) in x.terms() {
        for ((l2, r2), c2) in y.terms() {
            let left = shuffle_forests(l1, l2);
            let right = shuffle_forests(r1, r2);
            let c = c1 * c2;
            for (lw, lc) in left.terms() {
                for (rw, rc) in right.terms() {
                    out.add_term(lw.clone(), rw.clone(), &(&(lc * rc) * &c));
                }
            }
        }
    }
    out
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

    #[test]
    fn inner_product() {
        assert_eq!(inner(&lc(&[(1, "()")]), &lc(&[(1, "()")])), Rational::one());
        assert_eq!(
            inner(&lc(&[(1, "()")]), &lc(&[(1, "(())")])),
            Rational::zero()
        );
        assert_eq!(
            inner(&lc(&[(2, "()()"), (1, "(())")]), &lc(&[(1, "(())")])),
            Rational::one()
        );
        // symmetric
        let a = lc(&[(2, "()"), (3, "(())")]);
        let b = lc(&[(5, "(())"), (-1, "()()")]);
        assert_eq!(inner(&a, &b), inner(&b, &a));
    }

    #[test]
    fn concat_basics() {
        assert_eq!(
            concat(&lc(&[(1, "()")]), &lc(&[(1, "(())")])),
            lc(&[(1, "()(())")])
        );
        let a = lc(&[(3, "(())"), (1, "()()")]);
        assert_eq!(concat(&LinComb::one(), &a), a);
        assert_eq!(concat(&a, &LinComb::one()), a);
        // distributivity over addition
        assert_eq!(
            concat(&lc(&[(1, "()"), (1, "(())")]), &lc(&[(1, "()")])),
            lc(&[(1, "()()"), (1, "(())()")])
        );
    }

    #[test]
    fn shuffle_basics() {
        assert_eq!(
            shuffle(&lc(&[(1, "()")]), &lc(&[(1, "()")])),
            lc(&[(2, "()()")])
        );
        assert_eq!(
            shuffle(&lc(&[(1, "()")]), &lc(&[(1, "(())")])),
            lc(&[(1, "(())()"), (1, "()(())")])
        );
        assert_eq!(
            shuffle(&lc(&[(1, "()()")]), &lc(&[(1, "(())")])),
            lc(&[(1, "()()(())"), (1, "()(())()"), (1, "(())()()")])
        );
        let a = lc(&[(1, "()(())")]);
        assert_eq!(shuffle(&LinComb::one(), &a), a);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut a = lc(&[(1, "()")]);
        a.add_term(f("()"), &Rational::integer(-1));
        assert!(a.is_zero());
        assert_eq!(lc(&[(1, "()")]).sub(&lc(&[(1, "()")])), LinComb::zero());
    }

    #[test]
    fn tensor_products() {
        let e = Forest::empty();
        // unit slot behaviour
        let unit = TensorComb::pair(e.clone(), e.clone());
        let ab = TensorComb::pair(f("()"), f("(())"));
        assert_eq!(product_shuffle_concat(&unit, &ab), ab);
        // shuffle left, concat right
        let x = TensorComb::pair(f("()"), f("()"));
        let y = TensorComb::pair(f("()"), f("(())"));
        assert_eq!(
            product_shuffle_concat(&x, &y),
            TensorComb::term(f("()()"), f("()(())"), Rational::integer(2))
        );
        // twist
        assert_eq!(ab.twist(), TensorComb::pair(f("(())"), f("()")));
        // shuffle in both slots with unit slots
        let left = TensorComb::pair(f("()"), e.clone());
        let right = TensorComb::pair(e.clone(), f("()"));
        assert_eq!(
            product_shuffle_shuffle(&left, &right),
            TensorComb::pair(f("()"), f("()"))
        );
    }

    #[test]
    fn twist_commutes_with_double_shuffle() {
        use crate::enumerate::{enumerate_forests_bounded, ForestFilter};
        use crate::forest::Color;
        let colors = vec![Color::default()];
        let mut forests = Vec::new();
        for n in 0..=3 {
            forests.extend(enumerate_forests_bounded(n, &colors, ForestFilter::All, n).unwrap());
        }
        for a in &forests {
            for b in &forests {
                if a.order() + b.order() > 3 {
                    continue;
                }
                let x = TensorComb::pair(a.clone(), b.clone());
                for c in &forests {
                    let y = TensorComb::pair(c.clone(), b.clone());
                    assert_eq!(
                        product_shuffle_shuffle(&x, &y).twist(),
                        product_shuffle_shuffle(&x.twist(), &y.twist())
                    );
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(lc(&[(1, "()()"), (1, "(())")]).to_string(), "()() + (())");
        assert_eq!(
            lc(&[(-1, "(())"), (2, "()()")]).to_string(),
            "2·()() - (())"
        );
        let mut with_unit = lc(&[(1, "()")]);
        with_unit.add_term(Forest::empty(), &Rational::integer(3));
        assert_eq!(with_unit.to_string(), "3 + ()");
        assert_eq!(LinComb::zero().to_string(), "0");
        assert_eq!(
            TensorComb::pair(Forest::empty(), f("(())")).to_string(),
            "1 ⊗ (())"
        );
    }

    #[test]
    fn json_form() {
        let a = lc(&[(-1, "(())"), (2, "()()")]);
        assert_eq!(
            serde_json::to_string(&a.to_json()).unwrap(),
            r#"[{"coeff":"2","forest":"()()"},{"coeff":"-1","forest":"(())"}]"#
        );
    }
}

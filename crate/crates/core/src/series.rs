//! Truncated dual series: coefficient functionals on forests up to a cutoff
//! order.
//!
//! Composition goes through the forest coproduct (it is the dual of the
//! Grossman-Larson product), inversion through the antipode. Logarithmic
//! series vanish on nonempty shuffles and play the role of vector fields;
//! exponential series are multiplicative on shuffles and form a group under
//! composition. `exp`/`log` are mutually inverse bijections between the two,
//! computed as truncated convolution power series.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::enumerate::{enumerate_forests_bounded, ForestFilter};
use crate::forest::{Color, Forest, UForest};
use crate::hopf::{antipode, coproduct};
use crate::lincomb::{shuffle_forests, LinComb};
use crate::rational::{factorial, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("cutoff mismatch: {left} vs {right}")]
    CutoffMismatch { left: usize, right: usize },
    #[error("term {forest:?} has order {order}, beyond the cutoff {cutoff}")]
    TermBeyondCutoff {
        forest: String,
        order: usize,
        cutoff: usize,
    },
    #[error("the coefficient of the empty forest is {got}, expected 1")]
    UnitCoefficientNotOne { got: String },
    #[error("series is not logarithmic")]
    NotLogarithmic,
    #[error("series is not exponential")]
    NotExponential,
    #[error("invalid series JSON: {reason}")]
    InvalidJson { reason: String },
}

/// A truncated element of the dual space: coefficients for every forest of
/// order at most `cutoff`, stored sparsely (absent means zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    cutoff: usize,
    coeffs: BTreeMap<Forest, Rational>,
}

impl Series {
    /// The zero series at the given cutoff.
    pub fn new(cutoff: usize) -> Series {
        Series {
            cutoff,
            coeffs: BTreeMap::new(),
        }
    }

    /// The counit series: 1 on the empty forest, 0 elsewhere. The unit of
    /// composition.
    pub fn identity(cutoff: usize) -> Series {
        let mut s = Series::new(cutoff);
        s.coeffs.insert(Forest::empty(), Rational::one());
        s
    }

    /// Build a series from coefficient terms; repeated forests accumulate.
    pub fn with_terms<I>(cutoff: usize, terms: I) -> Result<Series, SeriesError>
    where
        I: IntoIterator<Item = (Forest, Rational)>,
    {
        let mut s = Series::new(cutoff);
        for (f, c) in terms {
            if f.order() > cutoff {
                return Err(SeriesError::TermBeyondCutoff {
                    forest: f.to_string(),
                    order: f.order(),
                    cutoff,
                });
            }
            let total = &s.coefficient(&f) + &c;
            s.set_coefficient(f, total);
        }
        Ok(s)
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn coefficient(&self, f: &Forest) -> Rational {
        self.coeffs.get(f).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set_coefficient(&mut self, f: Forest, c: Rational) {
        assert!(f.order() <= self.cutoff, "term beyond cutoff");
        if c.is_zero() {
            self.coeffs.remove(&f);
        } else {
            self.coeffs.insert(f, c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Forest, &Rational)> {
        self.coeffs.iter()
    }

    /// The dual pairing with a finite combination.
    pub fn pair(&self, b: &LinComb) -> Rational {
        let mut acc = Rational::zero();
        for (f, c) in b.terms() {
            acc += &(c * &self.coefficient(f));
        }
        acc
    }

    /// Colors appearing in the support.
    pub fn colors(&self) -> BTreeSet<Color> {
        fn collect(t: &crate::forest::Tree, out: &mut BTreeSet<Color>) {
            out.insert(t.color().clone());
            for c in t.children() {
                collect(c, out);
            }
        }
        let mut out = BTreeSet::new();
        for f in self.coeffs.keys() {
            for t in f.trees() {
                collect(t, &mut out);
            }
        }
        out
    }

    /// Restrict to a smaller cutoff.
    pub fn truncate(&self, cutoff: usize) -> Series {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(f, _)| f.order() <= cutoff)
            .map(|(f, c)| (f.clone(), c.clone()))
            .collect();
        Series { cutoff, coeffs }
    }

    fn same_cutoff(&self, other: &Series) -> Result<(), SeriesError> {
        if self.cutoff != other.cutoff {
            Err(SeriesError::CutoffMismatch {
                left: self.cutoff,
                right: other.cutoff,
            })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series, SeriesError> {
        self.same_cutoff(other)?;
        let mut out = self.clone();
        for (f, c) in &other.coeffs {
            let v = &out.coefficient(f) + c;
            out.set_coefficient(f.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Series) -> Result<Series, SeriesError> {
        self.same_cutoff(other)?;
        self.add(&other.scale(&Rational::integer(-1)))
    }

    pub fn scale(&self, factor: &Rational) -> Series {
        let mut out = Series::new(self.cutoff);
        if factor.is_zero() {
            return out;
        }
        for (f, c) in &self.coeffs {
            out.coeffs.insert(f.clone(), c * factor);
        }
        out
    }

    // Every forest of order <= cutoff over the support colors of the given
    // series; the restriction is exact because coefficients on forests with
    // foreign colors vanish in all the sums below.
    fn universe(parties: &[&Series]) -> Vec<Forest> {
        let mut colors = BTreeSet::new();
        for s in parties {
            colors.extend(s.colors());
        }
        let colors: Vec<Color> = colors.into_iter().collect();
        let cutoff = parties[0].cutoff;
        let mut out = Vec::new();
        for n in 0..=cutoff {
            out.extend(
                enumerate_forests_bounded(n, &colors, ForestFilter::All, n)
                    .expect("bound equals n"),
            );
        }
        out
    }

    /// Composition through the coproduct:
    /// `(α ∘ β)(w) = Σ α(w(1)) β(w(2))`. Associative, with
    /// [`Series::identity`] as unit.
    pub fn compose(&self, other: &Series) -> Result<Series, SeriesError> {
        self.same_cutoff(other)?;
        let mut out = Series::new(self.cutoff);
        for w in Series::universe(&[self, other]) {
            let mut acc = Rational::zero();
            for ((p, r), c) in coproduct(&LinComb::from(&w)).terms() {
                let term = &self.coefficient(p) * &other.coefficient(r);
                acc += &(&term * c);
            }
            out.set_coefficient(w, acc);
        }
        Ok(out)
    }

    /// Group inverse of an invertible series: `α⁻¹(w) = α(S(w))`.
    pub fn inverse(&self) -> Result<Series, SeriesError> {
        let unit = self.coefficient(&Forest::empty());
        if !unit.is_one() {
            return Err(SeriesError::UnitCoefficientNotOne {
                got: unit.to_string(),
            });
        }
        let mut out = Series::new(self.cutoff);
        for w in Series::universe(&[self]) {
            out.set_coefficient(w.clone(), self.pair(&antipode(&LinComb::from(&w))));
        }
        Ok(out)
    }

    /// Vanishes on the empty forest and on every nonempty shuffle: the series
    /// behaves like a vector field.
    pub fn is_logarithmic(&self) -> bool {
        if !self.coefficient(&Forest::empty()).is_zero() {
            return false;
        }
        self.shuffle_pairs_satisfy(|total, a, b| {
            let _ = (a, b);
            total.is_zero()
        })
    }

    /// Takes 1 on the empty forest and is multiplicative on shuffles: the
    /// series behaves like a flow.
    pub fn is_exponential(&self) -> bool {
        if !self.coefficient(&Forest::empty()).is_one() {
            return false;
        }
        self.shuffle_pairs_satisfy(|total, a, b| *total == &a * &b)
    }

    // check(α(w1 ⧢ w2), α(w1), α(w2)) over all nonempty pairs within cutoff
    fn shuffle_pairs_satisfy(&self, check: impl Fn(&Rational, Rational, Rational) -> bool) -> bool {
        let colors: Vec<Color> = self.colors().into_iter().collect();
        for n1 in 1..self.cutoff.max(1) {
            for n2 in 1..=(self.cutoff - n1) {
                let lefts = enumerate_forests_bounded(n1, &colors, ForestFilter::All, n1)
                    .expect("bound equals n");
                let rights = enumerate_forests_bounded(n2, &colors, ForestFilter::All, n2)
                    .expect("bound equals n");
                for a in &lefts {
                    for b in &rights {
                        let total = self.pair(&shuffle_forests(a, b));
                        if !check(&total, self.coefficient(a), self.coefficient(b)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Exponential with respect to composition: `Σ_j α^(∘j) / j!` truncated
    /// at the cutoff. Requires a logarithmic input; the result is
    /// exponential.
    pub fn exp(&self) -> Result<Series, SeriesError> {
        if !self.is_logarithmic() {
            return Err(SeriesError::NotLogarithmic);
        }
        // α^(∘j) vanishes below order j, so the sum stops at the cutoff
        let mut out = Series::identity(self.cutoff);
        let mut power = Series::identity(self.cutoff);
        for j in 1..=self.cutoff {
            power = power.compose(self)?;
            out = out.add(&power.scale(&Rational::from_biguint(factorial(j)).recip()))?;
        }
        Ok(out)
    }

    /// Logarithm with respect to composition:
    /// `Σ_k (-1)^(k+1) (β - ε)^(∘k) / k` truncated at the cutoff. Requires an
    /// exponential input; the result is logarithmic.
    pub fn log(&self) -> Result<Series, SeriesError> {
        if !self.is_exponential() {
            return Err(SeriesError::NotExponential);
        }
        let delta = self.sub(&Series::identity(self.cutoff))?;
        let mut out = Series::new(self.cutoff);
        let mut power = Series::identity(self.cutoff);
        for k in 1..=self.cutoff {
            power = power.compose(&delta)?;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let coeff = &Rational::integer(sign) / &Rational::integer(k as i64);
            out = out.add(&power.scale(&coeff))?;
        }
        Ok(out)
    }

    /// JSON form `{"cutoff": n, "terms": [{"coeff", "forest"}]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "cutoff": self.cutoff,
            "terms": Value::Array(
                self.coeffs
                    .iter()
                    .map(|(f, c)| json!({ "coeff": c.to_string(), "forest": f.to_string() }))
                    .collect(),
            ),
        })
    }

    pub fn from_json(v: &Value) -> Result<Series, SeriesError> {
        let bad = |reason: &str| SeriesError::InvalidJson {
            reason: reason.to_string(),
        };
        let cutoff = v
            .get("cutoff")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing integer field \"cutoff\""))? as usize;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing array field \"terms\""))?;
        let mut parsed = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for t in terms {
            let coeff: Rational = t
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("term missing string field \"coeff\""))?
                .parse()
                .map_err(|e| bad(&format!("{e}")))?;
            let forest: Forest = t
                .get("forest")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("term missing string field \"forest\""))?
                .parse()
                .map_err(|e| bad(&format!("{e}")))?;
            if !seen.insert(forest.clone()) {
                return Err(bad(&format!("duplicate term for forest {forest:?}")));
            }
            parsed.push((forest, coeff));
        }
        Series::with_terms(cutoff, parsed)
    }
}

// Terms render like LinComb, prefixed by the cutoff.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lc = LinComb::zero();
        for (w, c) in &self.coeffs {
            lc.add_term(w.clone(), c);
        }
        write!(f, "[cutoff {}] {}", self.cutoff, lc)
    }
}

/// A truncated dual series over unordered forests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct USeries {
    cutoff: usize,
    coeffs: BTreeMap<UForest, Rational>,
}

impl USeries {
    pub fn new(cutoff: usize) -> USeries {
        USeries {
            cutoff,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn coefficient(&self, u: &UForest) -> Rational {
        self.coeffs.get(u).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set_coefficient(&mut self, u: UForest, c: Rational) {
        assert!(u.order() <= self.cutoff, "term beyond cutoff");
        if c.is_zero() {
            self.coeffs.remove(&u);
        } else {
            self.coeffs.insert(u, c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UForest, &Rational)> {
        self.coeffs.iter()
    }

    /// Nonzero only on classes of single trees (and possibly the empty one).
    pub fn is_supported_on_trees(&self) -> bool {
        self.coeffs.keys().all(|u| u.degree() == 1)
    }

    /// `β(t1 … tk) = β(t1) … β(tk)` for every class in the support-color
    /// universe up to the cutoff.
    pub fn is_multiplicative_on_classes(&self) -> bool {
        let mut colors = BTreeSet::new();
        for u in self.coeffs.keys() {
            for t in u.representative().trees() {
                fn collect(t: &crate::forest::Tree, out: &mut BTreeSet<Color>) {
                    out.insert(t.color().clone());
                    for c in t.children() {
                        collect(c, out);
                    }
                }
                collect(t, &mut colors);
            }
        }
        let colors: Vec<Color> = colors.into_iter().collect();
        for n in 0..=self.cutoff {
            let forests = enumerate_forests_bounded(n, &colors, ForestFilter::All, n)
                .expect("bound equals n");
            let mut seen = BTreeSet::new();
            for w in forests {
                let class = crate::forest::forget(&w);
                if !seen.insert(class.clone()) {
                    continue;
                }
                let mut prod = Rational::one();
                for t in class.representative().trees() {
                    let tree_class = crate::forest::forget(&Forest::singleton(t.clone()));
                    prod = &prod * &self.coefficient(&tree_class);
                }
                if self.coefficient(&class) != prod {
                    return false;
                }
            }
        }
        true
    }
}

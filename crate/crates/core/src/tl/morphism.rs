use std::collections::HashMap;

use rayon::prelude::*;

use super::diagram::TLDiagram;
use crate::error::{Error, Result};
use crate::exact_arith::{CyclotomicScalar, Scalar};

/// Formal linear combination of `(bottom, top)` diagrams in TL(τ).
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct TLMorphism<S: Scalar = CyclotomicScalar> {
    bottom: usize,
    top: usize,
    terms: HashMap<TLDiagram, S>,
    tau: S,
}

/// Products with more term pairs than this first drop terms that a
/// projector-like factor provably kills.
const PRUNE_THRESHOLD: usize = 1 << 12;
const PARALLEL_THRESHOLD: usize = 1 << 14;

struct TauPowers<S: Scalar>(Vec<S>);

impl<S: Scalar> TauPowers<S> {
    fn new(tau: &S) -> Self {
        TauPowers(vec![tau.one_like(), tau.clone()])
    }

    fn get(&mut self, k: usize) -> &S {
        while self.0.len() <= k {
            let next = self.0.last().unwrap().mul(&self.0[1]);
            self.0.push(next);
        }
        &self.0[k]
    }
}

fn accumulate<S: Scalar>(terms: &mut HashMap<TLDiagram, S>, d: TLDiagram, c: S) {
    use std::collections::hash_map::Entry;
    match terms.entry(d) {
        Entry::Occupied(mut e) => {
            let sum = e.get().add(&c);
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
    }
}

fn merge<S: Scalar>(mut a: HashMap<TLDiagram, S>, b: HashMap<TLDiagram, S>) -> HashMap<TLDiagram, S> {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (d, c) in b {
        accumulate(&mut a, d, c);
    }
    a
}

impl<S: Scalar> TLMorphism<S> {
    pub fn zero(bottom: usize, top: usize, tau: S) -> Self {
        TLMorphism { bottom, top, terms: HashMap::new(), tau }
    }

    pub fn from_diagram(d: TLDiagram, tau: S) -> Self {
        let mut m = Self::zero(d.bottom(), d.top(), tau);
        let one = m.tau.one_like();
        m.terms.insert(d, one);
        m
    }

    pub fn from_terms(bottom: usize, top: usize, tau: S, terms: impl IntoIterator<Item = (TLDiagram, S)>) -> Result<Self> {
        let mut m = Self::zero(bottom, top, tau);
        for (d, c) in terms {
            if d.bottom() != bottom || d.top() != top {
                return Err(Error::SignatureMismatch(format!("diagram {}->{} in Hom({bottom},{top})", d.bottom(), d.top())));
            }
            accumulate(&mut m.terms, d, c);
        }
        Ok(m)
    }

    pub fn identity(n: usize, tau: S) -> Self {
        Self::from_diagram(TLDiagram::identity(n), tau)
    }

    pub fn e(n: usize, i: usize, tau: S) -> Self {
        Self::from_diagram(TLDiagram::e(n, i), tau)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn tau(&self) -> &S {
        &self.tau
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TLDiagram, &S)> {
        self.terms.iter()
    }

    /// Terms in diagram order.
    pub fn sorted_terms(&self) -> Vec<(&TLDiagram, &S)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn coeff(&self, d: &TLDiagram) -> S {
        self.terms.get(d).cloned().unwrap_or_else(|| self.tau.zero_like())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.tau != other.tau {
            return Err(Error::ParameterMismatch);
        }
        if (self.bottom, self.top) != (other.bottom, other.top) {
            return Err(Error::SignatureMismatch(format!(
                "Hom({},{}) vs Hom({},{})",
                self.bottom, self.top, other.bottom, other.top
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            accumulate(&mut out.terms, d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(self.bottom, self.top, self.tau.clone());
        }
        self.map_coeffs(|c| c.mul(s))
    }

    fn map_coeffs(&self, f: impl Fn(&S) -> S) -> Self {
        let terms = self.terms.iter().map(|(d, c)| (d.clone(), f(c))).filter(|(_, c)| !c.is_zero()).collect();
        TLMorphism { bottom: self.bottom, top: self.top, terms, tau: self.tau.clone() }
    }

    /// `b` stacked on top of `self`: the morphism `self` followed by `b`.
    pub fn compose(&self, b: &Self) -> Result<Self> {
        if self.tau != b.tau {
            return Err(Error::ParameterMismatch);
        }
        if self.top != b.bottom {
            return Err(Error::SignatureMismatch(format!("top {} does not meet bottom {}", self.top, b.bottom)));
        }
        if self.len() * b.len() > PRUNE_THRESHOLD && !self.tau.is_zero() {
            let b = b.without_terms_killed_below(self);
            let a = self.without_terms_killed_above(&b);
            return Ok(a.compose_direct(&b));
        }
        Ok(self.compose_direct(b))
    }

    /// Bilinear extension of diagram stacking with no pruning.
    pub fn compose_direct(&self, b: &Self) -> Self {
        let tau = &self.tau;
        let pair = |terms: &mut HashMap<TLDiagram, S>, powers: &mut TauPowers<S>, da: &TLDiagram, ca: &S| {
            for (db, cb) in &b.terms {
                let (d, loops) = da.compose(db);
                let c = ca.mul(cb);
                let c = if loops == 0 { c } else { c.mul(powers.get(loops)) };
                accumulate(terms, d, c);
            }
        };
        let terms = if self.len() * b.len() > PARALLEL_THRESHOLD {
            let a_terms: Vec<_> = self.terms.iter().collect();
            a_terms
                .par_chunks(64)
                .map(|chunk| {
                    let mut terms = HashMap::new();
                    let mut powers = TauPowers::new(tau);
                    for (da, ca) in chunk {
                        pair(&mut terms, &mut powers, da, ca);
                    }
                    terms
                })
                .reduce(HashMap::new, merge)
        } else {
            let mut terms = HashMap::new();
            let mut powers = TauPowers::new(tau);
            for (da, ca) in &self.terms {
                pair(&mut terms, &mut powers, da, ca);
            }
            terms
        };
        TLMorphism { bottom: self.bottom, top: b.top, terms, tau: self.tau.clone() }
    }

    /// Drops terms of `self` with a bottom cap at `e_i` whenever
    /// `lower` followed by `e_i` vanishes: such a term equals
    /// `τ^{-1} e_i` followed by itself, so its product with `lower` is zero.
    fn without_terms_killed_below(&self, lower: &Self) -> Self {
        let killed: Vec<bool> = (0..self.bottom.max(1))
            .map(|i| i >= 1 && i < self.bottom && lower.compose_direct(&Self::e(self.bottom, i, self.tau.clone())).is_zero())
            .collect();
        if !killed.iter().any(|&k| k) {
            return self.clone();
        }
        let terms =
            self.terms.iter().filter(|(d, _)| !(1..self.bottom).any(|i| killed[i] && d.has_bottom_cap(i))).map(|(d, c)| (d.clone(), c.clone())).collect();
        TLMorphism { bottom: self.bottom, top: self.top, terms, tau: self.tau.clone() }
    }

    /// Mirror image of [`Self::without_terms_killed_below`] for top cups.
    fn without_terms_killed_above(&self, upper: &Self) -> Self {
        let killed: Vec<bool> = (0..self.top.max(1))
            .map(|i| i >= 1 && i < self.top && Self::e(self.top, i, self.tau.clone()).compose_direct(upper).is_zero())
            .collect();
        if !killed.iter().any(|&k| k) {
            return self.clone();
        }
        let terms = self.terms.iter().filter(|(d, _)| !(1..self.top).any(|i| killed[i] && d.has_top_cup(i))).map(|(d, c)| (d.clone(), c.clone())).collect();
        TLMorphism { bottom: self.bottom, top: self.top, terms, tau: self.tau.clone() }
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.tau != other.tau {
            return Err(Error::ParameterMismatch);
        }
        let mut terms = HashMap::with_capacity(self.len() * other.len());
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                accumulate(&mut terms, da.tensor(db), ca.mul(cb));
            }
        }
        Ok(TLMorphism { bottom: self.bottom + other.bottom, top: self.top + other.top, terms, tau: self.tau.clone() })
    }

    /// Vertical reflection, Hom(n,m) -> Hom(m,n), coefficients unchanged.
    pub fn flip(&self) -> Self {
        let terms = self.terms.iter().map(|(d, c)| (d.flip(), c.clone())).collect();
        TLMorphism { bottom: self.top, top: self.bottom, terms, tau: self.tau.clone() }
    }

    fn check_square(&self) -> Result<()> {
        if self.bottom != self.top {
            return Err(Error::SignatureMismatch(format!("trace of a ({},{}) morphism", self.bottom, self.top)));
        }
        Ok(())
    }

    /// Closes the rightmost `r` strands.
    pub fn partial_trace(&self, r: usize) -> Result<Self> {
        self.check_square()?;
        if r > self.bottom {
            return Err(Error::SignatureMismatch(format!("cannot close {r} of {} strands", self.bottom)));
        }
        let mut powers = TauPowers::new(&self.tau);
        let mut terms = HashMap::new();
        for (d, c) in &self.terms {
            let (d, loops) = d.partial_trace(r);
            accumulate(&mut terms, d, c.mul(powers.get(loops)));
        }
        Ok(TLMorphism { bottom: self.bottom - r, top: self.top - r, terms, tau: self.tau.clone() })
    }

    /// `sum_D c_D τ^{loops(D)}` over the trace closure.
    pub fn closure_trace(&self) -> Result<S> {
        self.check_square()?;
        let mut powers = TauPowers::new(&self.tau);
        let mut acc = self.tau.zero_like();
        for (d, c) in &self.terms {
            acc = acc.add(&c.mul(powers.get(d.closure_loops())));
        }
        Ok(acc)
    }

    /// Trace through explicit cups and caps on the right: the morphism
    /// `cups ; (self ⊗ id_n) ; caps` evaluated as a scalar.
    pub fn right_trace(&self) -> Result<S> {
        self.check_square()?;
        let n = self.bottom;
        let cups = Self::from_diagram(TLDiagram::nested_cups(n), self.tau.clone());
        let body = self.tensor(&Self::identity(n, self.tau.clone()))?;
        let closed = cups.compose_direct(&body).compose_direct(&cups.flip());
        Ok(closed.coeff(&TLDiagram::from_raw(0, 0, Default::default())))
    }

    /// Same as [`Self::right_trace`] with the return strands on the left.
    pub fn left_trace(&self) -> Result<S> {
        self.check_square()?;
        let n = self.bottom;
        let cups = Self::from_diagram(TLDiagram::nested_cups(n), self.tau.clone());
        let body = Self::identity(n, self.tau.clone()).tensor(self)?;
        let closed = cups.compose_direct(&body).compose_direct(&cups.flip());
        Ok(closed.coeff(&TLDiagram::from_raw(0, 0, Default::default())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    fn cyc(n: usize, k: i64) -> CyclotomicScalar {
        CyclotomicScalar::root_of_unity(n, k)
    }

    fn tau8() -> CyclotomicScalar {
        cyc(8, 1) + cyc(8, 7)
    }

    #[test]
    fn circle_rule() {
        let t = tau8();
        let e = TLMorphism::e(2, 1, t.clone());
        assert_eq!(e.compose(&e).unwrap(), e.scale(&t));
        let id = TLMorphism::identity(3, t.clone());
        assert_eq!(id.compose(&id).unwrap(), id);
        let e1 = TLMorphism::e(3, 1, t.clone());
        let e2 = TLMorphism::e(3, 2, t.clone());
        assert_eq!(e1.compose(&e2).unwrap().compose(&e1).unwrap(), e1);
    }

    #[test]
    fn tensor_examples() {
        let t = tau8();
        let id1 = TLMorphism::identity(1, t.clone());
        assert_eq!(id1.tensor(&id1).unwrap(), TLMorphism::identity(2, t.clone()));
        let e = TLMorphism::e(2, 1, t.clone());
        let ee = e.tensor(&e).unwrap();
        assert_eq!(ee.len(), 1);
        assert!(ee.coeff(&TLDiagram::e(2, 1).tensor(&TLDiagram::e(2, 1))).is_one());
    }

    #[test]
    fn traces() {
        let t = tau8();
        for n in 0..5 {
            let id = TLMorphism::identity(n, t.clone());
            assert_eq!(id.closure_trace().unwrap(), t.pow(n as i64).unwrap());
        }
        let e = TLMorphism::e(2, 1, t.clone());
        assert_eq!(e.closure_trace().unwrap(), t);
        assert!(TLMorphism::zero(3, 3, t.clone()).closure_trace().unwrap().is_zero());
        assert_eq!(e.left_trace().unwrap(), t);
        assert_eq!(e.right_trace().unwrap(), t);
    }

    #[test]
    fn mismatches() {
        let a = TLMorphism::identity(2, tau8());
        let b = TLMorphism::identity(3, tau8());
        assert!(matches!(a.compose(&b), Err(Error::SignatureMismatch(_))));
        let c = TLMorphism::identity(2, CyclotomicScalar::from_rational(1, &rat(1, 2)));
        assert_eq!(a.compose(&c), Err(Error::ParameterMismatch));
        assert_eq!(a.tensor(&c), Err(Error::ParameterMismatch));
        assert!(a.closure_trace().is_ok());
        assert!(TLMorphism::from_diagram(TLDiagram::cup(), tau8()).closure_trace().is_err());
    }
}

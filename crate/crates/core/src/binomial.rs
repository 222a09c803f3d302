//! Oriented pure-difference binomials.
//!
//! A `Binomial` is `lead - trail` with unit coefficients, oriented so that
//! `lead` is strictly larger under the ambient term order; the degenerate
//! one-term case (`trail` absent) represents a plain monomial.  The zero
//! polynomial is represented as `None` at the `Option<Binomial>` level, which
//! is what S-polynomials and normal forms return.

use std::cmp::Ordering;
use std::fmt;

use crate::exponent::{Block, ExponentVec, Layout};
use crate::order::TermOrder;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Binomial {
    lead: ExponentVec,
    trail: Option<ExponentVec>,
}

impl Binomial {
    /// A one-term element (a monomial generator).
    pub fn monomial(lead: ExponentVec) -> Self {
        Binomial { lead, trail: None }
    }

    /// Orient `t1 - t2` under `order`; `None` when the terms cancel.
    pub fn oriented(order: &TermOrder, t1: ExponentVec, t2: ExponentVec) -> Option<Self> {
        match order.cmp(&t1, &t2) {
            Ordering::Greater => Some(Binomial { lead: t1, trail: Some(t2) }),
            Ordering::Less => Some(Binomial { lead: t2, trail: Some(t1) }),
            Ordering::Equal => None,
        }
    }

    pub fn lead(&self) -> &ExponentVec {
        &self.lead
    }

    pub fn trail(&self) -> Option<&ExponentVec> {
        self.trail.as_ref()
    }

    pub fn is_monomial(&self) -> bool {
        self.trail.is_none()
    }

    pub fn layout(&self) -> Layout {
        self.lead.layout()
    }

    /// Multiply both terms by a monomial.  Orientation is preserved.
    pub fn scaled(&self, mono: &ExponentVec) -> Self {
        Binomial {
            lead: self.lead.mul(mono),
            trail: self.trail.as_ref().map(|t| t.mul(mono)),
        }
    }

    /// Largest power of the variable `var` dividing every term.
    pub fn common_var_power(&self, var: usize) -> u64 {
        match &self.trail {
            Some(t) => self.lead.get(var).min(t.get(var)),
            None => self.lead.get(var),
        }
    }

    /// Divide both terms by `var^k`.
    pub fn shift_down_var(&self, var: usize, k: u64) -> Self {
        let div = ExponentVec::variable(self.layout(), var, k);
        Binomial {
            lead: self.lead.div(&div).expect("common power divides lead"),
            trail: self.trail.as_ref().map(|t| t.div(&div).expect("common power divides trail")),
        }
    }

    /// Exact quotient of both terms by `mono`.
    pub fn div_exact(&self, mono: &ExponentVec) -> Self {
        Binomial {
            lead: self.lead.div(mono).expect("monomial divides lead"),
            trail: self.trail.as_ref().map(|t| t.div(mono).expect("monomial divides trail")),
        }
    }

    /// Degree in the X-and-W block (the presentation grading); for kernel
    /// elements both terms agree, in general this is the maximum.
    pub fn xw_degree(&self) -> u64 {
        let d = self.lead.deg(Block::Xw);
        match &self.trail {
            Some(t) => d.max(t.deg(Block::Xw)),
            None => d,
        }
    }

    /// Whether any term involves a variable of the given indices.
    pub fn involves(&self, vars: &[usize]) -> bool {
        let touch = |e: &ExponentVec| vars.iter().any(|&v| e.get(v) > 0);
        touch(&self.lead) || self.trail.as_ref().map(touch).unwrap_or(false)
    }

    /// Embed both terms into the `FullExt` layout with Z-exponent 0.
    pub fn extend(&self) -> Self {
        Binomial {
            lead: self.lead.extend(0),
            trail: self.trail.as_ref().map(|t| t.extend(0)),
        }
    }

    /// Drop a zero Z slot from both terms.
    pub fn contract(&self) -> Self {
        Binomial {
            lead: self.lead.contract().expect("Z-free lead"),
            trail: self.trail.as_ref().map(|t| t.contract().expect("Z-free trail")),
        }
    }

    /// Canonical sort key under `order` (lead key, then trail key).
    pub fn sort_key(&self, order: &TermOrder) -> (Vec<u64>, Vec<u64>) {
        (
            order.sort_key(&self.lead),
            self.trail.as_ref().map(|t| order.sort_key(t)).unwrap_or_default(),
        )
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.trail {
            Some(t) => write!(f, "{} - {}", self.lead, t),
            None => write!(f, "{}", self.lead),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full(m: usize, exps: Vec<u64>) -> ExponentVec {
        ExponentVec::new(Layout::full(m), exps).unwrap()
    }

    #[test]
    fn orientation_picks_the_larger_term() {
        let ord = TermOrder::rees_lex(Layout::full(3));
        // (T1^3 X2, T2^3 X1): lead must be T1^3 X2
        let u = full(3, vec![3, 0, 0, 0, 1, 0, 0]);
        let v = full(3, vec![0, 3, 0, 1, 0, 0, 0]);
        let b = Binomial::oriented(&ord, v.clone(), u.clone()).unwrap();
        assert_eq!(b.lead(), &u);
        assert_eq!(b.trail(), Some(&v));
        assert_eq!(b.to_string(), "T1^3*X2 - T2^3*X1");
    }

    #[test]
    fn identical_terms_cancel() {
        let ord = TermOrder::rees_lex(Layout::full(3));
        let u = full(3, vec![1, 2, 3, 0, 0, 0, 0]);
        assert!(Binomial::oriented(&ord, u.clone(), u).is_none());
    }

    #[test]
    fn w_is_heaviest() {
        let ord = TermOrder::rees_lex(Layout::full(3));
        let w = full(3, vec![0, 0, 0, 0, 0, 0, 1]);
        let t = full(3, vec![5, 0, 0, 0, 0, 0, 0]);
        let b = Binomial::oriented(&ord, w.clone(), t).unwrap();
        assert_eq!(b.lead(), &w);
    }

    #[test]
    fn orientation_is_symmetric_in_arguments() {
        let ord = TermOrder::rees_lex(Layout::full(2));
        let u = full(2, vec![1, 0, 0, 1, 0]);
        let v = full(2, vec![0, 2, 1, 0, 0]);
        let b1 = Binomial::oriented(&ord, u.clone(), v.clone()).unwrap();
        let b2 = Binomial::oriented(&ord, v, u).unwrap();
        assert_eq!(b1, b2);
    }
}

//! Monomial-ideal operations: minimal generators, colon ideals, extendedness,
//! products and powers, reduction numbers, and Hilbert-series data.

use thiserror::Error;

use crate::binomial::Binomial;
use crate::caps::Caps;
use crate::exponent::{Block, ExponentVec, Layout};
use crate::groebner::{buchberger, ideal_equal, reduced_basis, EngineError};
use crate::order::TermOrder;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonomialError {
    #[error("reduction number search exceeded the cap {0}")]
    ReductionCapExceeded(u64),
    #[error("J is not contained in I")]
    NotASubideal,
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// A monomial ideal, stored by its minimal generators in a canonical order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    layout: Layout,
    gens: Vec<ExponentVec>,
}

impl MonomialIdeal {
    /// Minimalize and canonically sort a generating set.
    pub fn new(layout: Layout, monos: Vec<ExponentVec>) -> Self {
        let order = TermOrder::rees_lex(layout);
        let mut sorted = monos;
        sorted.iter().for_each(|g| assert_eq!(g.layout(), layout));
        sorted.sort_by_cached_key(|g| order.sort_key(g));
        sorted.dedup();
        let mut gens: Vec<ExponentVec> = Vec::new();
        for g in sorted {
            if !gens.iter().any(|h| h.divides(&g)) {
                gens.push(g);
            }
        }
        MonomialIdeal { layout, gens }
    }

    pub fn zero(layout: Layout) -> Self {
        MonomialIdeal { layout, gens: Vec::new() }
    }

    pub fn unit(layout: Layout) -> Self {
        MonomialIdeal { layout, gens: vec![ExponentVec::one(layout)] }
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    /// The minimal generators, canonically sorted.
    pub fn gens(&self) -> &[ExponentVec] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains(&self, mono: &ExponentVec) -> bool {
        self.gens.iter().any(|g| g.divides(mono))
    }

    /// Whether a pure-difference element lies in the ideal (termwise test).
    pub fn contains_binomial(&self, f: &Binomial) -> bool {
        self.contains(f.lead()) && f.trail().map(|t| self.contains(t)).unwrap_or(true)
    }

    /// The colon ideal `(self : mono)`; exact for monomial ideals.
    pub fn colon(&self, mono: &ExponentVec) -> Self {
        let quotients = self
            .gens
            .iter()
            .map(|g| g.div(&g.gcd(mono)).expect("gcd divides"))
            .collect();
        MonomialIdeal::new(self.layout, quotients)
    }

    /// Whether the ideal is extended from the base ring, i.e. every minimal
    /// generator involves only T variables.
    pub fn is_extended_from_base(&self) -> bool {
        self.gens.iter().all(|g| g.total_degree() == g.deg(Block::T))
    }

    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.layout, other.layout);
        if self.is_zero() || other.is_zero() {
            return MonomialIdeal::zero(self.layout);
        }
        let mut products = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                products.push(g.mul(h));
            }
        }
        MonomialIdeal::new(self.layout, products)
    }

    /// `self^n`, with `self^0` the unit ideal.
    pub fn power(&self, n: u64) -> Self {
        let mut acc = MonomialIdeal::unit(self.layout);
        for _ in 0..n {
            acc = acc.product(self);
        }
        acc
    }
}

/// A reduction candidate: monomial generators are compared exactly through
/// minimal generators, binomial generators through the Gröbner engine.
#[derive(Clone, Debug)]
pub enum ReductionIdeal {
    Monomial(MonomialIdeal),
    Binomial(Vec<Binomial>),
}

/// The reduction number: the least `r <= cap` with `J * I^r = I^(r+1)`.
pub fn reduction_number(
    ideal: &MonomialIdeal,
    j: &ReductionIdeal,
    cap: u64,
    caps: &Caps,
) -> Result<u64, MonomialError> {
    // J must sit inside I
    match j {
        ReductionIdeal::Monomial(jm) => {
            if !jm.gens().iter().all(|g| ideal.contains(g)) {
                return Err(MonomialError::NotASubideal);
            }
        }
        ReductionIdeal::Binomial(gens) => {
            if !gens.iter().all(|g| ideal.contains_binomial(g)) {
                return Err(MonomialError::NotASubideal);
            }
        }
    }
    let order = TermOrder::rees_lex(ideal.layout());
    for r in 0..=cap {
        let power = ideal.power(r + 1);
        let lower = ideal.power(r);
        let equal = match j {
            ReductionIdeal::Monomial(jm) => jm.product(&lower) == power,
            ReductionIdeal::Binomial(jgens) => {
                let mut products: Vec<Binomial> = Vec::new();
                for g in jgens {
                    for h in lower.gens() {
                        products.push(g.scaled(h));
                    }
                }
                let left = reduced_basis(&buchberger(&products, &order, caps)?);
                let right_gens: Vec<Binomial> =
                    power.gens().iter().map(|g| Binomial::monomial(g.clone())).collect();
                let right = reduced_basis(&buchberger(&right_gens, &order, caps)?);
                ideal_equal(&left, &right)
            }
        };
        if equal {
            return Ok(r);
        }
    }
    Err(MonomialError::ReductionCapExceeded(cap))
}

/// Hilbert-series data of `S/M` under the all-variables-degree-one grading:
/// the numerator after cancelling every `(1 - t)` factor, the dimension, the
/// multiplicity `numerator(1)`, and the degree of the Hilbert polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertData {
    pub numerator: Vec<i64>,
    pub dimension: i64,
    pub multiplicity: i64,
    pub hilbert_polynomial_degree: i64,
}

fn poly_add_shifted(lhs: &mut Vec<i64>, rhs: &[i64], shift: usize) {
    if lhs.len() < rhs.len() + shift {
        lhs.resize(rhs.len() + shift, 0);
    }
    for (k, &c) in rhs.iter().enumerate() {
        lhs[k + shift] += c;
    }
}

fn poly_mul(lhs: &[i64], rhs: &[i64]) -> Vec<i64> {
    if lhs.is_empty() || rhs.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; lhs.len() + rhs.len() - 1];
    for (i, &a) in lhs.iter().enumerate() {
        for (j, &b) in rhs.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

/// Numerator of the Hilbert series of `S/M` over `(1-t)^v`, by pivot
/// splitting: `N(I) = N(I + <x>) - ... ` via the exact sequence
/// `0 -> S/(I:p)(-deg p) -> S/I -> S/(I + <p>) -> 0`.
fn hilbert_numerator(ideal: &MonomialIdeal) -> Vec<i64> {
    if ideal.is_zero() {
        return vec![1];
    }
    if ideal.is_unit() {
        return vec![0];
    }
    // closed form when every generator is a pure power of a distinct variable
    let mut seen_vars: Vec<usize> = Vec::new();
    let mut pure = true;
    for g in ideal.gens() {
        let support: Vec<usize> =
            (0..g.exps().len()).filter(|&i| g.get(i) > 0).collect();
        if support.len() != 1 || seen_vars.contains(&support[0]) {
            pure = false;
            break;
        }
        seen_vars.push(support[0]);
    }
    if pure {
        let mut num = vec![1i64];
        for g in ideal.gens() {
            let d = g.total_degree() as usize;
            let mut factor = vec![0i64; d + 1];
            factor[0] = 1;
            factor[d] = -1;
            num = poly_mul(&num, &factor);
        }
        return trim(num);
    }
    // pivot: the most frequent variable among mixed-support generators
    let n = ideal.layout().len();
    let mut counts = vec![0usize; n];
    for g in ideal.gens() {
        let support: Vec<usize> = (0..n).filter(|&i| g.get(i) > 0).collect();
        if support.len() > 1 {
            for i in support {
                counts[i] += 1;
            }
        }
    }
    let pivot_var = (0..n).max_by_key(|&i| counts[i]).expect("nonempty layout");
    let pivot = ExponentVec::variable(ideal.layout(), pivot_var, 1);
    let mut plus_gens = ideal.gens().to_vec();
    plus_gens.push(pivot.clone());
    let plus = MonomialIdeal::new(ideal.layout(), plus_gens);
    let colon = ideal.colon(&pivot);
    // N(I) = N(I + <p>) + t^{deg p} N(I : p)
    let mut num = hilbert_numerator(&plus);
    poly_add_shifted(&mut num, &hilbert_numerator(&colon), 1);
    trim(num)
}

/// Hilbert data of `S/M` with every variable in degree one.
pub fn hilbert(ideal: &MonomialIdeal) -> HilbertData {
    let v = ideal.layout().len() as i64;
    let mut num = hilbert_numerator(ideal);
    if num.iter().all(|&c| c == 0) {
        // the unit ideal: the zero ring
        return HilbertData {
            numerator: vec![0],
            dimension: -1,
            multiplicity: 0,
            hilbert_polynomial_degree: -2,
        };
    }
    // cancel (1 - t) factors: p(t) = (1 - t) q(t) iff p(1) = 0, with
    // q obtained by synthetic division
    let mut cancelled = 0i64;
    while num.iter().sum::<i64>() == 0 {
        let mut q = vec![0i64; num.len() - 1];
        // divide by (1 - t): q_k = sum_{j <= k} p_j
        let mut acc = 0i64;
        for k in 0..num.len() - 1 {
            acc += num[k];
            q[k] = acc;
        }
        num = trim(q);
        cancelled += 1;
    }
    let dimension = v - cancelled;
    let multiplicity = num.iter().sum::<i64>();
    HilbertData {
        numerator: num,
        dimension,
        multiplicity,
        hilbert_polynomial_degree: dimension - 1,
    }
}

/// Socle data of the Artinian quotient attached to an equi-generated
/// instance: the colon `J : T^b = <T_i^{|b|-b_i}>`, its socle degree
/// `(m-1)|b| - m`, and the secondary elimination degree `(m-1)(|b|-1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SocleData {
    pub colon_j_b: MonomialIdeal,
    pub socle_degree: u64,
    pub secondary_elimination_degree: u64,
}

pub fn socle_and_degrees(inst: &crate::instance::Instance) -> Result<SocleData, crate::instance::InstanceError> {
    if !inst.equi_generated() {
        return Err(crate::instance::InstanceError::NotEquiGenerated);
    }
    let m = inst.m() as u64;
    let bsum = inst.bsum();
    let layout = inst.t_layout();
    let gens = (0..inst.m())
        .map(|i| ExponentVec::variable(layout, i, bsum - inst.b()[i]))
        .collect();
    Ok(SocleData {
        colon_j_b: MonomialIdeal::new(layout, gens),
        socle_degree: (m - 1) * bsum - m,
        secondary_elimination_degree: (m - 1) * (bsum - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Instance;

    fn t3(exps: Vec<u64>) -> ExponentVec {
        ExponentVec::new(Layout::t_block(3), exps).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let m = MonomialIdeal::new(
            Layout::t_block(3),
            vec![t3(vec![1, 0, 0]), t3(vec![1, 1, 0])],
        );
        assert_eq!(m.gens(), &[t3(vec![1, 0, 0])]);
        assert!(MonomialIdeal::new(Layout::t_block(3), vec![]).is_zero());
    }

    #[test]
    fn colon_examples() {
        // <T1^2> : T1^3 = <1>
        let m = MonomialIdeal::new(Layout::t_block(3), vec![t3(vec![2, 0, 0])]);
        assert!(m.colon(&t3(vec![3, 0, 0])).is_unit());
        // colon by 1 is the identity
        assert_eq!(m.colon(&t3(vec![0, 0, 0])), m);
        // the filtration colon of the base case: <T1^a X2> : T1^a X3 = <X2>
        let full = Layout::full(3);
        let g = ExponentVec::new(full, vec![3, 0, 0, 0, 1, 0, 0]).unwrap();
        let by = ExponentVec::new(full, vec![3, 0, 0, 0, 0, 1, 0]).unwrap();
        let k = MonomialIdeal::new(full, vec![g]);
        let x2 = ExponentVec::new(full, vec![0, 0, 0, 0, 1, 0, 0]).unwrap();
        assert_eq!(k.colon(&by).gens(), &[x2]);
    }

    #[test]
    fn extendedness() {
        let full = Layout::full(3);
        let t_only = MonomialIdeal::new(
            full,
            vec![
                ExponentVec::new(full, vec![2, 0, 0, 0, 0, 0, 0]).unwrap(),
                ExponentVec::new(full, vec![0, 1, 1, 0, 0, 0, 0]).unwrap(),
            ],
        );
        assert!(t_only.is_extended_from_base());
        let mixed = MonomialIdeal::new(
            full,
            vec![ExponentVec::new(full, vec![1, 0, 0, 0, 1, 0, 0]).unwrap()],
        );
        assert!(!mixed.is_extended_from_base());
    }

    #[test]
    fn powers_and_products() {
        let layout = Layout::t_block(3);
        let ideal = MonomialIdeal::new(
            layout,
            vec![
                t3(vec![3, 0, 0]),
                t3(vec![0, 3, 0]),
                t3(vec![0, 0, 3]),
                t3(vec![1, 1, 1]),
            ],
        );
        assert!(ideal.power(0).is_unit());
        assert_eq!(ideal.product(&MonomialIdeal::unit(layout)), ideal);
        let sq = ideal.power(2);
        assert!(sq.gens().contains(&t3(vec![2, 2, 2])));
    }

    #[test]
    fn reduction_number_named_instance() {
        // I = <T1^3, T2^3, T3^3, T1 T2 T3>, J = <T1^3, T2^3, T3^3>: red = 2
        let layout = Layout::t_block(3);
        let ideal = MonomialIdeal::new(
            layout,
            vec![t3(vec![3, 0, 0]), t3(vec![0, 3, 0]), t3(vec![0, 0, 3]), t3(vec![1, 1, 1])],
        );
        let j = MonomialIdeal::new(
            layout,
            vec![t3(vec![3, 0, 0]), t3(vec![0, 3, 0]), t3(vec![0, 0, 3])],
        );
        let caps = Caps::default();
        assert_eq!(
            reduction_number(&ideal, &ReductionIdeal::Monomial(j), 5, &caps).unwrap(),
            2
        );
        // J = I: the defining equality J I^0 = I holds immediately
        assert_eq!(
            reduction_number(&ideal, &ReductionIdeal::Monomial(ideal.clone()), 5, &caps).unwrap(),
            0
        );
    }

    #[test]
    fn reduction_number_binomial_reduction() {
        // J = <T1^4 - T3^4, T2^4 - T3^4, T1 T2 T3> for I with n = 4,
        // b = (1,1,1): red <= 2
        let layout = Layout::t_block(3);
        let ideal = MonomialIdeal::new(
            layout,
            vec![t3(vec![4, 0, 0]), t3(vec![0, 4, 0]), t3(vec![0, 0, 4]), t3(vec![1, 1, 1])],
        );
        let order = TermOrder::t_lex(3);
        let jgens = vec![
            Binomial::oriented(&order, t3(vec![4, 0, 0]), t3(vec![0, 0, 4])).unwrap(),
            Binomial::oriented(&order, t3(vec![0, 4, 0]), t3(vec![0, 0, 4])).unwrap(),
            Binomial::monomial(t3(vec![1, 1, 1])),
        ];
        let caps = Caps::default();
        let red =
            reduction_number(&ideal, &ReductionIdeal::Binomial(jgens), 5, &caps).unwrap();
        assert!(red <= 2, "red = {red}");
    }

    #[test]
    fn reduction_number_requires_subideal() {
        let layout = Layout::t_block(3);
        let ideal = MonomialIdeal::new(layout, vec![t3(vec![3, 0, 0])]);
        let j = MonomialIdeal::new(layout, vec![t3(vec![0, 1, 0])]);
        let caps = Caps::default();
        assert_eq!(
            reduction_number(&ideal, &ReductionIdeal::Monomial(j), 3, &caps),
            Err(MonomialError::NotASubideal)
        );
    }

    #[test]
    fn leads_of_the_structured_family_minimalize_to_the_initial_ideal() {
        let inst = Instance::new(vec![3, 3, 3], vec![1, 1, 1], false).unwrap();
        let caps = Caps::default();
        let gens = crate::families::structured_generators(&inst).unwrap();
        let oriented = crate::groebner::orient_all(&gens, &inst.order());
        let from_family = MonomialIdeal::new(
            inst.full_layout(),
            oriented.iter().map(|g| g.lead().clone()).collect(),
        );
        let oracle = crate::groebner::defining_ideal_oracle(&inst, &caps).unwrap();
        let from_basis = MonomialIdeal::new(inst.full_layout(), oracle.leads());
        assert_eq!(from_family, from_basis);
    }

    #[test]
    fn hilbert_of_zero_ideal() {
        let h = hilbert(&MonomialIdeal::zero(Layout::t_block(3)));
        assert_eq!(h.numerator, vec![1]);
        assert_eq!(h.dimension, 3);
        assert_eq!(h.multiplicity, 1);
    }

    #[test]
    fn hilbert_of_complete_intersection() {
        // <T1^2, T2^3>: numerator (1-t^2)(1-t^3)/(1-t)^2 -> dim 1, mult 6
        let ideal = MonomialIdeal::new(
            Layout::t_block(3),
            vec![t3(vec![2, 0, 0]), t3(vec![0, 3, 0])],
        );
        let h = hilbert(&ideal);
        assert_eq!(h.dimension, 1);
        assert_eq!(h.multiplicity, 6);
    }

    #[test]
    fn hilbert_dimension_artinian() {
        let ideal = MonomialIdeal::new(
            Layout::t_block(3),
            vec![t3(vec![2, 0, 0]), t3(vec![0, 2, 0]), t3(vec![0, 0, 2]), t3(vec![1, 1, 1])],
        );
        let h = hilbert(&ideal);
        assert_eq!(h.dimension, 0);
        // standard monomials: products of T_i^{0,1} not divisible by T1T2T3:
        // 8 - 1 = 7
        assert_eq!(h.multiplicity, 7);
    }

    #[test]
    fn socle_data_named_instance() {
        let inst = Instance::new(vec![3, 3, 3], vec![1, 1, 1], false).unwrap();
        let socle = socle_and_degrees(&inst).unwrap();
        assert_eq!(socle.socle_degree, 3);
        assert_eq!(socle.secondary_elimination_degree, 4);
        // canonical order is ascending under T1 > T2 > T3 lex
        assert_eq!(
            socle.colon_j_b.gens(),
            &[t3(vec![0, 0, 2]), t3(vec![0, 2, 0]), t3(vec![2, 0, 0])]
        );

        let skew = Instance::new(vec![2, 5, 4], vec![1, 2, 3], false).unwrap();
        assert!(socle_and_degrees(&skew).is_err());
    }

    #[test]
    fn socle_degree_agrees_with_enumeration() {
        // brute force: the largest total degree of a standard monomial of
        // R/<T_i^{|b|-b_i}> is sum(|b|-b_i-1)
        let inst = Instance::new(vec![4, 4, 4], vec![1, 1, 2], false).unwrap();
        let socle = socle_and_degrees(&inst).unwrap();
        let bounds: Vec<u64> = socle.colon_j_b.gens().iter().map(|g| g.total_degree()).collect();
        let mut max_deg = 0;
        let mut stack = vec![vec![]];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == bounds.len() {
                max_deg = max_deg.max(prefix.iter().sum::<u64>());
                continue;
            }
            for e in 0..bounds[prefix.len()] {
                let mut next = prefix.clone();
                next.push(e);
                stack.push(next);
            }
        }
        assert_eq!(max_deg, socle.socle_degree);
    }
}

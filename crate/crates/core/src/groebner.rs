//! A coefficient-free Buchberger engine for ideals generated by
//! pure-difference binomials and monomials.
//!
//! The class is closed under S-polynomials and division (two equal terms
//! cancel to zero, never to a doubled term), so no field arithmetic appears
//! anywhere and every result is characteristic-independent.  Pair selection
//! is deterministic (smallest lcm total degree, ties by the active order on
//! the lcm, then by index), so bases and intermediate traces are reproducible.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::binomial::Binomial;
use crate::caps::Caps;
use crate::exponent::{ExponentVec, Layout};
use crate::instance::Instance;
use crate::order::TermOrder;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("resource cap exceeded: {what} (limit {limit})")]
    CapExceeded { what: &'static str, limit: usize },
}

/// A Gröbner basis: oriented members plus the order they are oriented under.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    order: TermOrder,
    members: Vec<Binomial>,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wrap an already-computed generating set without re-running completion.
    /// Members are re-oriented under `order`; the caller asserts basis-hood.
    pub fn from_members(order: TermOrder, members: Vec<Binomial>) -> Self {
        let members = orient_all(&members, &order);
        GroebnerBasis { order, members, reduced: false }
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }
    pub fn members(&self) -> &[Binomial] {
        &self.members
    }
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }
    pub fn len(&self) -> usize {
        self.members.len()
    }
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
    /// Leading monomials (minimal generators of the initial ideal when the
    /// basis is reduced).
    pub fn leads(&self) -> Vec<ExponentVec> {
        self.members.iter().map(|g| g.lead().clone()).collect()
    }
}

/// Re-orient members under `order` (drops any that cancel).
pub fn orient_all(gens: &[Binomial], order: &TermOrder) -> Vec<Binomial> {
    gens.iter()
        .filter_map(|g| match g.trail() {
            Some(t) => Binomial::oriented(order, g.lead().clone(), t.clone()),
            None => Some(g.clone()),
        })
        .collect()
}

/// The S-polynomial of two oriented members; stays in the class.
pub fn spoly(f: &Binomial, g: &Binomial, order: &TermOrder) -> Option<Binomial> {
    let w = f.lead().lcm(g.lead());
    let uf = w.div(f.lead()).expect("lcm divisible by lead");
    let ug = w.div(g.lead()).expect("lcm divisible by lead");
    // (w/lead f)·f − (w/lead g)·g = ug·trail_g − uf·trail_f
    match (f.trail(), g.trail()) {
        (None, None) => None,
        (Some(tf), None) => Some(Binomial::monomial(tf.mul(&uf))),
        (None, Some(tg)) => Some(Binomial::monomial(tg.mul(&ug))),
        (Some(tf), Some(tg)) => Binomial::oriented(order, tg.mul(&ug), tf.mul(&uf)),
    }
}

/// Normal form of a single monomial: `None` when it reduces to zero.
fn reduce_monomial(mono: &ExponentVec, reducers: &[Binomial]) -> Option<ExponentVec> {
    let mut current = mono.clone();
    'outer: loop {
        for g in reducers {
            if g.lead().divides(&current) {
                // a monomial reducer cancels the term outright
                let tg = g.trail()?;
                current = current.div(g.lead()).expect("divides").mul(tg);
                continue 'outer;
            }
        }
        return Some(current);
    }
}

/// Full normal form: leading term first, reducers tried in list order;
/// deterministic.  `None` means the input reduces to zero.
pub fn reduce_full(f: &Binomial, reducers: &[Binomial], order: &TermOrder) -> Option<Binomial> {
    let mut lead = f.lead().clone();
    let mut trail = match f.trail() {
        Some(t) => t.clone(),
        None => return reduce_monomial(f.lead(), reducers).map(Binomial::monomial),
    };
    'lead: loop {
        for g in reducers {
            if g.lead().divides(&lead) {
                match g.trail() {
                    None => {
                        // the lead cancels; only the (negated) trail survives
                        return reduce_monomial(&trail, reducers).map(Binomial::monomial);
                    }
                    Some(tg) => {
                        let new_term = lead.div(g.lead()).expect("divides").mul(tg);
                        let b = Binomial::oriented(order, new_term, trail)?;
                        lead = b.lead().clone();
                        trail = b.trail().expect("binomial").clone();
                        continue 'lead;
                    }
                }
            }
        }
        break;
    }
    // the lead is irreducible; normalize the trail
    match reduce_monomial(&trail, reducers) {
        Some(t) => Some(Binomial::oriented(order, lead, t).expect("trail stays below lead")),
        None => Some(Binomial::monomial(lead)),
    }
}

type PairKey = (u64, Vec<u64>, usize, usize);

fn pair_key(basis: &[Binomial], order: &TermOrder, i: usize, j: usize) -> PairKey {
    let w = basis[i].lead().lcm(basis[j].lead());
    (w.total_degree(), order.sort_key(&w), i, j)
}

/// Buchberger completion with the normal selection strategy.
pub fn buchberger(
    gens: &[Binomial],
    order: &TermOrder,
    caps: &Caps,
) -> Result<GroebnerBasis, EngineError> {
    let mut basis = orient_all(gens, order);
    basis.dedup_by(|a, b| a == b);
    let mut pairs: BTreeSet<PairKey> = BTreeSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.insert(pair_key(&basis, order, i, j));
        }
    }
    let mut processed = 0usize;
    while let Some(key) = pairs.pop_first() {
        let (_, _, i, j) = key;
        processed += 1;
        if processed > caps.max_spairs {
            return Err(EngineError::CapExceeded { what: "max_spairs", limit: caps.max_spairs });
        }
        // product criterion: coprime leads reduce to zero
        if basis[i].lead().is_coprime_to(basis[j].lead()) {
            continue;
        }
        let Some(s) = spoly(&basis[i], &basis[j], order) else { continue };
        let Some(nf) = reduce_full(&s, &basis, order) else { continue };
        if nf.lead().exps().iter().any(|&e| e > caps.max_exponent) {
            return Err(EngineError::CapExceeded {
                what: "max_exponent",
                limit: caps.max_exponent as usize,
            });
        }
        let new_idx = basis.len();
        basis.push(nf);
        if basis.len() > caps.max_basis {
            return Err(EngineError::CapExceeded { what: "max_basis", limit: caps.max_basis });
        }
        for k in 0..new_idx {
            pairs.insert(pair_key(&basis, order, k, new_idx));
        }
    }
    Ok(GroebnerBasis { order: order.clone(), members: basis, reduced: false })
}

/// The canonical reduced basis: leading terms pairwise non-divisible, every
/// trail fully reduced, members sorted ascending.  Idempotent, and unique for
/// a given ideal and order.
pub fn reduced_basis(gb: &GroebnerBasis) -> GroebnerBasis {
    let order = gb.order.clone();
    let mut members = gb.members.clone();
    members.sort_by_cached_key(|g| g.sort_key(&order));
    // a proper divisor is strictly smaller in every term order, so one
    // ascending sweep minimalizes the lead set
    let mut kept: Vec<Binomial> = Vec::new();
    for g in members {
        if !kept.iter().any(|k| k.lead().divides(g.lead())) {
            kept.push(g);
        }
    }
    let mut out: Vec<Binomial> = kept
        .iter()
        .map(|g| match g.trail() {
            None => g.clone(),
            Some(t) => match reduce_monomial(t, &kept) {
                Some(nf) => Binomial::oriented(&order, g.lead().clone(), nf)
                    .expect("normal form stays below the lead"),
                None => Binomial::monomial(g.lead().clone()),
            },
        })
        .collect();
    out.sort_by_cached_key(|g| g.sort_key(&order));
    GroebnerBasis { order, members: out, reduced: true }
}

/// Outcome of a Buchberger-criterion check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerCheck {
    pub ok: bool,
    /// Indices of the first failing pair, when not a basis.
    pub witness: Option<(usize, usize)>,
}

/// Whether every S-pair reduces to zero.
pub fn is_groebner(members: &[Binomial], order: &TermOrder) -> GroebnerCheck {
    for j in 1..members.len() {
        for i in 0..j {
            if !pair_reduces_to_zero(members, order, i, j) {
                return GroebnerCheck { ok: false, witness: Some((i, j)) };
            }
        }
    }
    GroebnerCheck { ok: true, witness: None }
}

/// Incremental variant: `members[..members.len()-1]` is already verified, so
/// only pairs involving the last member need checking.
pub fn is_groebner_incremental(members: &[Binomial], order: &TermOrder) -> GroebnerCheck {
    let j = match members.len().checked_sub(1) {
        Some(j) => j,
        None => return GroebnerCheck { ok: true, witness: None },
    };
    for i in 0..j {
        if !pair_reduces_to_zero(members, order, i, j) {
            return GroebnerCheck { ok: false, witness: Some((i, j)) };
        }
    }
    GroebnerCheck { ok: true, witness: None }
}

fn pair_reduces_to_zero(members: &[Binomial], order: &TermOrder, i: usize, j: usize) -> bool {
    if members[i].lead().is_coprime_to(members[j].lead()) {
        return true;
    }
    match spoly(&members[i], &members[j], order) {
        None => true,
        Some(s) => reduce_full(&s, members, order).is_none(),
    }
}

/// Generators of the intersection with the subring avoiding `block`:
/// compute a basis under a block elimination order and keep the members free
/// of the eliminated variables.
pub fn eliminate(
    gens: &[Binomial],
    layout: Layout,
    block: &[usize],
    caps: &Caps,
) -> Result<Vec<Binomial>, EngineError> {
    let order = TermOrder::eliminate(layout, block);
    debug_assert!(order.eliminates(block));
    let gb = buchberger(gens, &order, caps)?;
    Ok(gb.members.iter().filter(|g| !g.involves(block)).cloned().collect())
}

/// Basis of the saturation `(J : (prod vars)^infty)`, computed variable by
/// variable: under a degree-compatible order in which the variable is unique
/// smallest, every basis member is divided by the largest common power of the
/// variable; repeat to fixpoint.  `weights` must make the generators
/// homogeneous for the one-pass guarantee (the fixpoint loop re-checks).
pub fn saturate(
    gens: &[Binomial],
    layout: Layout,
    vars: &[usize],
    weights: &[u64],
    caps: &Caps,
) -> Result<GroebnerBasis, EngineError> {
    let mut current: Vec<Binomial> = gens.to_vec();
    loop {
        let mut divided = false;
        for &v in vars {
            let order = TermOrder::graded_cheapest(layout, v, weights.to_vec());
            let gb = buchberger(&current, &order, caps)?;
            current = gb
                .members
                .into_iter()
                .map(|g| {
                    let k = g.common_var_power(v);
                    if k > 0 {
                        divided = true;
                        g.shift_down_var(v, k)
                    } else {
                        g
                    }
                })
                .collect();
        }
        if !divided {
            break;
        }
    }
    let order = TermOrder::rees_lex(layout);
    let gb = buchberger(&current, &order, caps)?;
    Ok(reduced_basis(&gb))
}

/// Basis of the colon ideal `(J : mono)` via the tag-variable intersection:
/// adjoin a heaviest tag t, intersect with <mono> using {t·g} ∪ {t·mono −
/// mono}, eliminate t, and divide the intersection generators by `mono`.
pub fn colon_by_monomial(
    gens: &[Binomial],
    mono: &ExponentVec,
    caps: &Caps,
) -> Result<GroebnerBasis, EngineError> {
    let layout = mono.layout();
    let order = TermOrder::rees_lex(layout);
    if mono.is_one() {
        let gb = buchberger(gens, &order, caps)?;
        return Ok(reduced_basis(&gb));
    }
    let m = layout.m();
    let ext = Layout::full_ext(m);
    let tag = ext.ext_index().expect("ext layout");
    let ext_order = TermOrder::rees_lex(ext);
    debug_assert!(ext_order.eliminates(&[tag]));
    let tag_var = ExponentVec::variable(ext, tag, 1);
    let mut work: Vec<Binomial> =
        gens.iter().map(|g| g.extend().scaled(&tag_var)).collect();
    let mono_ext = mono.extend(0);
    work.push(
        Binomial::oriented(&ext_order, mono_ext.mul(&tag_var), mono_ext.clone())
            .expect("distinct terms"),
    );
    let gb = buchberger(&work, &ext_order, caps)?;
    let quotient: Vec<Binomial> = gb
        .members
        .iter()
        .filter(|g| !g.involves(&[tag]))
        .map(|g| g.contract().div_exact(mono))
        .collect();
    let gb = buchberger(&quotient, &order, caps)?;
    Ok(reduced_basis(&gb))
}

/// Normal-form ideal-membership test against a Gröbner basis.
pub fn membership(f: &Binomial, gb: &GroebnerBasis) -> bool {
    let oriented = match f.trail() {
        Some(t) => match Binomial::oriented(&gb.order, f.lead().clone(), t.clone()) {
            Some(b) => b,
            None => return true,
        },
        None => f.clone(),
    };
    reduce_full(&oriented, &gb.members, &gb.order).is_none()
}

/// Ideal equality through identical reduced bases.
pub fn ideal_equal(g1: &GroebnerBasis, g2: &GroebnerBasis) -> bool {
    assert_eq!(g1.order, g2.order, "comparing bases under different orders");
    let r1 = if g1.reduced { g1.clone() } else { reduced_basis(g1) };
    let r2 = if g2.reduced { g2.clone() } else { reduced_basis(g2) };
    r1.members == r2.members
}

/// The independent route to the defining ideal: eliminate the graph variable
/// Z from `{Xi − Ti^ai Z, W − T^b Z}` and reduce.  Returns the reduced basis
/// under the main order.
pub fn defining_ideal_oracle(inst: &Instance, caps: &Caps) -> Result<GroebnerBasis, EngineError> {
    let ext = inst.ext_layout();
    let z = ext.ext_index().expect("ext layout");
    let members = eliminate(&inst.graph_generators(), ext, &[z], caps)?;
    // the elimination order restricted to Z-free monomials is the main order,
    // so the contracted members are already a Gröbner basis for it
    let order = inst.order();
    let members: Vec<Binomial> = members.iter().map(Binomial::contract).collect();
    let gb = GroebnerBasis { order, members, reduced: false };
    Ok(reduced_basis(&gb))
}

/// Convenience: Buchberger followed by reduction.
pub fn reduced_basis_of(
    gens: &[Binomial],
    order: &TermOrder,
    caps: &Caps,
) -> Result<GroebnerBasis, EngineError> {
    Ok(reduced_basis(&buchberger(gens, order, caps)?))
}

/// Indices of a minimal generating subset of an XW-graded generating set:
/// members are visited in increasing degree and dropped when they lie in the
/// ideal of the surviving others.  The grading confines each membership test
/// to generators of degree at most the candidate's.
pub fn minimal_generating_subset(
    gens: &[Binomial],
    order: &TermOrder,
    caps: &Caps,
) -> Result<Vec<usize>, EngineError> {
    let mut order_of_visit: Vec<usize> = (0..gens.len()).collect();
    order_of_visit.sort_by_cached_key(|&i| (gens[i].xw_degree(), gens[i].sort_key(order)));
    let mut kept = vec![true; gens.len()];
    for &idx in &order_of_visit {
        let degree = gens[idx].xw_degree();
        let others: Vec<Binomial> = (0..gens.len())
            .filter(|&j| j != idx && kept[j] && gens[j].xw_degree() <= degree)
            .map(|j| gens[j].clone())
            .collect();
        if others.is_empty() {
            continue;
        }
        let gb = buchberger(&others, order, caps)?;
        if membership(&gens[idx], &gb) {
            kept[idx] = false;
        }
    }
    Ok((0..gens.len()).filter(|&i| kept[i]).collect())
}

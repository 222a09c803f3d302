//! Structural generator families of the defining ideal and the filtration
//! used by the depth argument.
//!
//! * the *linear family*: the degree-one part, one pair binomial per pair of
//!   presentation variables (Koszul relations among the `Xi`, reduced
//!   relations for the pairs involving `W`);
//! * the *W-power family*: `pair(W^{|c|}, X^c)` over nonzero `c`, truncated
//!   either by total degree or componentwise by `b` (the latter is a finite
//!   Gröbner basis tail whenever `|b| <= min(a)`);
//! * the *filtration*: the chain obtained by adjoining the W-power members of
//!   a basis one at a time along the enumeration order of their `c` vectors,
//!   closed downward so that every intermediate set stays a Gröbner basis.

use thiserror::Error;

use crate::binomial::Binomial;
use crate::exponent::{Block, ExponentVec};
use crate::groebner::GroebnerBasis;
use crate::instance::{Instance, InstanceError};
use crate::order::cmp_graded_revlex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("basis member {0} does not have the W-power pair shape")]
    UnexpectedShape(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilyLabel {
    /// Degree-one generators (Koszul + reduced relations).
    Linear,
    /// `pair(W^{|c|}, X^c)` for `0 != c`, `|c| <= max_degree`.
    WPowers { max_degree: u64 },
    /// `pair(W^{|c|}, X^c)` for `0 != c <= b` componentwise.
    WPowersBelowB,
}

/// How a family member was produced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Provenance {
    /// `pair(X_i, X_j)` with `j < i <= m` (1-based).
    Koszul { i: usize, j: usize },
    /// `pair(W, X_j)` (1-based).
    Reduced { j: usize },
    /// `pair(W^{|c|}, X^c)`.
    WPower { c: Vec<u64> },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyMember {
    pub binomial: Binomial,
    pub provenance: Provenance,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorFamily {
    pub label: FamilyLabel,
    pub members: Vec<FamilyMember>,
}

impl GeneratorFamily {
    pub fn binomials(&self) -> Vec<Binomial> {
        self.members.iter().map(|m| m.binomial.clone()).collect()
    }
    pub fn len(&self) -> usize {
        self.members.len()
    }
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn unit_xw(inst: &Instance, idx: usize) -> ExponentVec {
    ExponentVec::variable(inst.xw_layout(), idx, 1)
}

/// The linear family: `pair(Xtilde_i, Xtilde_j)` for `1 <= j < i <= m + 1`
/// where `Xtilde_{m+1} = W`.  Exactly `binom(m+1, 2)` members.
pub fn linear_family(inst: &Instance) -> GeneratorFamily {
    let m = inst.m();
    let mut members = Vec::with_capacity((m + 1) * m / 2);
    for i in 2..=m + 1 {
        for j in 1..i {
            let u = unit_xw(inst, i - 1);
            let v = unit_xw(inst, j - 1);
            let binomial = inst.pair_binomial(&u, &v).expect("distinct unit monomials");
            let provenance = if i == m + 1 {
                Provenance::Reduced { j }
            } else {
                Provenance::Koszul { i, j }
            };
            members.push(FamilyMember { binomial, provenance });
        }
    }
    GeneratorFamily { label: FamilyLabel::Linear, members }
}

/// All nonzero vectors of `length` with total degree in `lo..=hi`, sorted by
/// the enumeration order (degree first, then the reverse tie).
pub fn vectors_by_degree(length: usize, lo: u64, hi: u64) -> Vec<Vec<u64>> {
    fn compositions(length: usize, total: u64, out: &mut Vec<Vec<u64>>, prefix: &mut Vec<u64>) {
        if length == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for head in 0..=total {
            prefix.push(head);
            compositions(length - 1, total - head, out, prefix);
            prefix.pop();
        }
    }
    let mut all = Vec::new();
    for d in lo.max(1)..=hi {
        let mut level = Vec::new();
        compositions(length, d, &mut level, &mut Vec::new());
        level.sort_by(|c, d| cmp_graded_revlex(c, d));
        all.extend(level);
    }
    all
}

fn w_power_member(inst: &Instance, c: &[u64]) -> FamilyMember {
    let m = inst.m();
    let degree: u64 = c.iter().sum();
    let w_pow = ExponentVec::variable(inst.xw_layout(), m, degree);
    let mut exps = c.to_vec();
    exps.push(0);
    let x_c = ExponentVec::new(inst.xw_layout(), exps).expect("length m+1");
    let binomial = inst.pair_binomial(&w_pow, &x_c).expect("coprime equal-degree pair");
    FamilyMember { binomial, provenance: Provenance::WPower { c: c.to_vec() } }
}

/// The W-power family truncated by total degree, enumerated in the order of
/// `cmp_graded_revlex` (so every prefix is downward closed).
pub fn w_power_family(inst: &Instance, max_degree: u64) -> GeneratorFamily {
    let members = vectors_by_degree(inst.m(), 1, max_degree)
        .iter()
        .map(|c| w_power_member(inst, c))
        .collect();
    GeneratorFamily { label: FamilyLabel::WPowers { max_degree }, members }
}

/// The W-power family truncated componentwise by `b`; requires
/// `|b| <= min(a)`.  Exactly `prod(b_i + 1) - 1` members; the `c = b` member
/// is the elimination equation.
pub fn bounded_w_power_family(inst: &Instance) -> Result<GeneratorFamily, InstanceError> {
    if inst.bsum() > inst.amin() {
        return Err(InstanceError::BsumExceedsAmin { bsum: inst.bsum(), amin: inst.amin() });
    }
    let mut cs: Vec<Vec<u64>> = Vec::new();
    let mut c = vec![0u64; inst.m()];
    loop {
        // advance the mixed-radix counter over 0..=b_i
        let mut k = 0;
        while k < inst.m() {
            if c[k] < inst.b()[k] {
                c[k] += 1;
                break;
            }
            c[k] = 0;
            k += 1;
        }
        if k == inst.m() {
            break;
        }
        cs.push(c.clone());
    }
    cs.sort_by(|x, y| cmp_graded_revlex(x, y));
    let members = cs.iter().map(|c| w_power_member(inst, c)).collect();
    Ok(GeneratorFamily { label: FamilyLabel::WPowersBelowB, members })
}

/// Generators for the structured route: linear family plus the componentwise
/// truncation (a non-reduced Gröbner basis when `|b| <= min(a)`).
pub fn structured_generators(inst: &Instance) -> Result<Vec<Binomial>, InstanceError> {
    let mut gens = linear_family(inst).binomials();
    gens.extend(bounded_w_power_family(inst)?.binomials());
    Ok(gens)
}

/// One step of the filtration: the vector `c_j` and the member adjoined.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiltrationStep {
    pub c: Vec<u64>,
    pub member: Binomial,
}

/// The filtration: the linear family as the base, then one W-power member per
/// step along a downward-closed enumeration of the tail vectors of `basis`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Filtration {
    pub base: Vec<Binomial>,
    pub steps: Vec<FiltrationStep>,
}

impl Filtration {
    /// Members of the j-th set (j = 0 is the base).
    pub fn members_at(&self, j: usize) -> Vec<Binomial> {
        let mut out = self.base.clone();
        out.extend(self.steps.iter().take(j).map(|s| s.member.clone()));
        out
    }
    pub fn len(&self) -> usize {
        self.steps.len()
    }
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Extract the `c` vector of a W-power-shaped basis member, or report its
/// shape as unexpected.
pub fn w_power_vector(inst: &Instance, member: &Binomial) -> Result<Vec<u64>, FamilyError> {
    let shape_err = || FamilyError::UnexpectedShape(member.to_string());
    let trail = member.trail().ok_or_else(shape_err)?;
    let lead = member.lead();
    if lead.deg(Block::X) != 0 || trail.deg(Block::W) != 0 {
        return Err(shape_err());
    }
    let c = trail.x_part();
    let degree: u64 = c.iter().sum();
    if degree < 2 || lead.deg(Block::W) != degree {
        return Err(shape_err());
    }
    let rebuilt = w_power_member(inst, &c).binomial;
    if &rebuilt != member {
        return Err(shape_err());
    }
    Ok(c)
}

/// Build the filtration from a basis of the defining ideal whose non-linear
/// members all have the W-power pair shape with `|c| >= 2`.  The set of step
/// vectors is the downward closure (among `|c| >= 2`) of the tail vectors
/// appearing in the basis.
pub fn filtration(inst: &Instance, basis: &GroebnerBasis) -> Result<Filtration, FamilyError> {
    let mut tail_vectors: Vec<Vec<u64>> = Vec::new();
    for member in basis.members() {
        if member.xw_degree() <= 1 {
            continue;
        }
        tail_vectors.push(w_power_vector(inst, member)?);
    }
    let base = linear_family(inst).binomials();
    let steps = match tail_vectors
        .iter()
        .max_by(|c, d| cmp_graded_revlex(c, d))
    {
        None => Vec::new(),
        Some(cmax) => vectors_by_degree(inst.m(), 2, cmax.iter().sum())
            .into_iter()
            .filter(|c| cmp_graded_revlex(c, cmax) != std::cmp::Ordering::Greater)
            .map(|c| {
                let member = w_power_member(inst, &c).binomial;
                FiltrationStep { c, member }
            })
            .collect(),
    };
    Ok(Filtration { base, steps })
}

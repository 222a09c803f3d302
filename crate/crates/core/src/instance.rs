//! Validated problem instances and the monomial maps attached to them.
//!
//! An instance is the data `(m, a, b)` of the ideal
//! `I = <T1^a1, ..., Tm^am, T1^b1 ... Tm^bm>` in `K[T1..Tm]`, with
//! `0 <= b_i < a_i`, at least two nonzero `b_i`, and `m >= 3` (a permissive
//! flag admits `m = 2` for exploratory runs).  The presentation ring is
//! `S = K[T, X1..Xm, W]` with `Xi` standing for `Ti^ai` and `W` for `T^b`;
//! the kernel of that evaluation is the ideal the rest of the crate studies.

use thiserror::Error;

use crate::binomial::Binomial;
use crate::exponent::{Block, ExponentVec, Layout};
use crate::order::TermOrder;

/// Exponents above this bound make intermediate products unreliable in hot
/// loops, so validation rejects them outright.
pub const MAX_GENERATOR_EXPONENT: u64 = 64;
pub const MAX_DIMENSION: usize = 16;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum InstanceError {
    #[error("a and b must have the same length (got {0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("m = {0} is below 3; pass the permissive flag for exploratory m = 2 runs")]
    TooSmall(usize),
    #[error("m = {0} exceeds the supported maximum {MAX_DIMENSION}")]
    TooLarge(usize),
    #[error("a[{idx}] = {value} violates 1 <= a_i <= {MAX_GENERATOR_EXPONENT}")]
    BadA { idx: usize, value: u64 },
    #[error("b[{idx}] = {b} violates 0 <= b_i < a_i = {a}")]
    BadB { idx: usize, b: u64, a: u64 },
    #[error("fewer than two nonzero entries in b")]
    TooFewNonzeroB,
    #[error("pair arguments must have equal total degree ({0} vs {1})")]
    UnequalPairDegrees(u64, u64),
    #[error("pair arguments must be coprime")]
    PairNotCoprime,
    #[error("pair arguments are identical")]
    PairDegenerate,
    #[error("operation requires an equi-generated instance (a_1 = ... = a_m = |b|)")]
    NotEquiGenerated,
    #[error("operation requires |b| <= min(a) (got |b| = {bsum}, min(a) = {amin})")]
    BsumExceedsAmin { bsum: u64, amin: u64 },
}

/// A validated `(m, a, b)` instance with its derived quantities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Instance {
    m: usize,
    a: Vec<u64>,
    b: Vec<u64>,
    bsum: u64,
    amin: u64,
    equi_generated: bool,
    b_gcd: u64,
    /// Permutation sorting `b` ascending: `sorted_b[k] = b[sort_perm[k]]`.
    sort_perm: Vec<usize>,
}

fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    x
}

impl Instance {
    pub fn new(a: Vec<u64>, b: Vec<u64>, permissive: bool) -> Result<Self, InstanceError> {
        if a.len() != b.len() {
            return Err(InstanceError::LengthMismatch(a.len(), b.len()));
        }
        let m = a.len();
        let floor = if permissive { 2 } else { 3 };
        if m < floor {
            return Err(InstanceError::TooSmall(m));
        }
        if m > MAX_DIMENSION {
            return Err(InstanceError::TooLarge(m));
        }
        for (idx, &value) in a.iter().enumerate() {
            if value == 0 || value > MAX_GENERATOR_EXPONENT {
                return Err(InstanceError::BadA { idx, value });
            }
        }
        for idx in 0..m {
            if b[idx] >= a[idx] {
                return Err(InstanceError::BadB { idx, b: b[idx], a: a[idx] });
            }
        }
        if b.iter().filter(|&&x| x > 0).count() < 2 {
            return Err(InstanceError::TooFewNonzeroB);
        }
        let bsum = b.iter().sum();
        let amin = *a.iter().min().expect("m >= 2");
        let equi_generated = a.iter().all(|&x| x == bsum);
        let b_gcd = b.iter().fold(0, |acc, &x| gcd(acc, x));
        let mut sort_perm: Vec<usize> = (0..m).collect();
        sort_perm.sort_by_key(|&i| b[i]);
        Ok(Instance { m, a, b, bsum, amin, equi_generated, b_gcd, sort_perm })
    }

    pub fn m(&self) -> usize {
        self.m
    }
    pub fn a(&self) -> &[u64] {
        &self.a
    }
    pub fn b(&self) -> &[u64] {
        &self.b
    }
    /// `|b|`.
    pub fn bsum(&self) -> u64 {
        self.bsum
    }
    pub fn amin(&self) -> u64 {
        self.amin
    }
    pub fn equi_generated(&self) -> bool {
        self.equi_generated
    }
    pub fn b_gcd(&self) -> u64 {
        self.b_gcd
    }
    /// `b` sorted ascending.
    pub fn sorted_b(&self) -> Vec<u64> {
        self.sort_perm.iter().map(|&i| self.b[i]).collect()
    }

    /// The minimality criterion on the sorted exponents: the reduced basis is
    /// a minimal generating set iff the third-largest `b_i` is nonzero.
    pub fn minimal_predicted(&self) -> Option<bool> {
        if self.m < 3 {
            return None;
        }
        Some(self.sorted_b()[self.m - 3] > 0)
    }

    pub fn full_layout(&self) -> Layout {
        Layout::full(self.m)
    }
    pub fn ext_layout(&self) -> Layout {
        Layout::full_ext(self.m)
    }
    pub fn xw_layout(&self) -> Layout {
        Layout::xw_block(self.m)
    }
    pub fn t_layout(&self) -> Layout {
        Layout::t_block(self.m)
    }

    /// The main term order on the presentation ring.
    pub fn order(&self) -> TermOrder {
        TermOrder::rees_lex(self.full_layout())
    }

    /// Positive weights under which every kernel binomial is homogeneous:
    /// `T_i -> 1`, `X_i -> a_i + 1`, `W -> |b| + 1`, `Z -> 1`.
    pub fn homogeneity_weights(&self, layout: Layout) -> Vec<u64> {
        let mut w = vec![1u64; layout.len()];
        if let Some(xs) = layout.x_range() {
            for (k, i) in xs.enumerate() {
                w[i] = self.a[k] + 1;
            }
        }
        if let Some(wi) = layout.w_index() {
            w[wi] = self.bsum + 1;
        }
        w
    }

    /// Evaluate a monomial in `(X1..Xm, W)` down to the base ring:
    /// `Xi -> Ti^ai`, `W -> T^b`.
    pub fn psi(&self, u: &ExponentVec) -> ExponentVec {
        assert_eq!(u.layout(), self.xw_layout(), "psi expects the XW layout");
        let w_exp = u.get(self.m);
        let t: Vec<u64> = (0..self.m)
            .map(|i| self.a[i] * u.get(i) + self.b[i] * w_exp)
            .collect();
        ExponentVec::new(self.t_layout(), t).expect("length m by construction")
    }

    /// Build the kernel binomial determined by a coprime pair of monomials of
    /// equal total degree in `(X1..Xm, W)`, embedded in the full presentation
    /// layout and oriented under the main order.
    pub fn pair_binomial(&self, u: &ExponentVec, v: &ExponentVec) -> Result<Binomial, InstanceError> {
        assert_eq!(u.layout(), self.xw_layout());
        assert_eq!(v.layout(), self.xw_layout());
        if u.total_degree() != v.total_degree() {
            return Err(InstanceError::UnequalPairDegrees(u.total_degree(), v.total_degree()));
        }
        if !u.is_coprime_to(v) {
            return Err(InstanceError::PairNotCoprime);
        }
        if u == v {
            return Err(InstanceError::PairDegenerate);
        }
        let pu = self.psi(u);
        let pv = self.psi(v);
        let g = pu.gcd(&pv);
        // coefficient of the u-side comes from the evaluation of the v-side
        let alpha = pv.div(&g).expect("gcd divides");
        let gamma = pu.div(&g).expect("gcd divides");
        let term_u = alpha.embed_full().mul(&u.embed_full());
        let term_v = gamma.embed_full().mul(&v.embed_full());
        Ok(Binomial::oriented(&self.order(), term_u, term_v)
            .expect("coprime distinct pair cannot cancel"))
    }

    /// The binomial `W^{|b|} - X^b` built from the pair `(W^{|b|}, X^b)`; in
    /// the equi-generated gcd-one case it is the elimination equation, the
    /// single defining equation of the special fiber.
    pub fn elimination_equation(&self) -> Binomial {
        let xw = self.xw_layout();
        let w_pow = ExponentVec::variable(xw, self.m, self.bsum);
        let mut x_b = self.b.clone();
        x_b.push(0);
        let x_b = ExponentVec::new(xw, x_b).expect("length m+1");
        self.pair_binomial(&w_pow, &x_b).expect("coprime pair of equal degree")
    }

    /// Generators of the graph ideal of the presentation in `S[Z]`:
    /// `Xi - Ti^ai Z` and `W - T^b Z`.  Eliminating `Z` from these yields the
    /// kernel independently of any structural description.
    pub fn graph_generators(&self) -> Vec<Binomial> {
        let ext = self.ext_layout();
        let order = TermOrder::rees_lex(ext);
        let z = ext.ext_index().expect("ext layout");
        let mut gens = Vec::with_capacity(self.m + 1);
        for i in 0..self.m {
            let xi = ExponentVec::variable(ext, self.m + i, 1);
            let mut rhs = ExponentVec::variable(ext, i, self.a[i]);
            rhs = rhs.mul(&ExponentVec::variable(ext, z, 1));
            gens.push(Binomial::oriented(&order, xi, rhs).expect("distinct monomials"));
        }
        let w = ExponentVec::variable(ext, ext.w_index().expect("ext layout"), 1);
        let mut rhs = vec![0u64; ext.len()];
        rhs[..self.m].copy_from_slice(&self.b);
        rhs[z] = 1;
        let rhs = ExponentVec::new(ext, rhs).expect("length checked");
        gens.push(Binomial::oriented(&order, w, rhs).expect("distinct monomials"));
        gens
    }

    /// Evaluate one term of a kernel candidate through the graph map: returns
    /// the image T-exponents together with the Z-degree.
    fn graph_image(&self, term: &ExponentVec) -> (Vec<u64>, u64) {
        let mut t = term.t_part();
        if t.is_empty() {
            t = vec![0; self.m];
        }
        let xs = term.x_part();
        for (i, &e) in xs.iter().enumerate() {
            t[i] += self.a[i] * e;
        }
        let wdeg = term.deg(Block::W);
        for (ti, &bi) in t.iter_mut().zip(&self.b) {
            *ti += bi * wdeg;
        }
        let z = term.deg(Block::Xw) + term.deg(Block::Ext);
        (t, z)
    }

    /// The testable form of kernel membership: both terms evaluate to the
    /// same monomial of the target ring under `Xi -> Ti^ai Z`, `W -> T^b Z`.
    pub fn in_kernel(&self, binomial: &Binomial) -> bool {
        match binomial.trail() {
            Some(trail) => self.graph_image(binomial.lead()) == self.graph_image(trail),
            // a monomial is never in the prime kernel
            None => false,
        }
    }
}

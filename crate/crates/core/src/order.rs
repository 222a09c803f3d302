//! Term orders on the presentation ring, plus the two auxiliary orders on
//! plain exponent vectors used to enumerate and truncate generator families.
//!
//! The workhorse is the lexicographic order with priority
//! `W > Xm > ... > X1 > T1 > ... > Tm` (extended by `Z` heaviest on the
//! `FullExt` layout, which makes it an elimination order for `Z`).  Block
//! elimination orders and degree-compatible cheapest-variable orders are the
//! only other kinds: every order here is either priority-lex or weighted
//! degree with a reverse tie on one distinguished variable.

use std::cmp::Ordering;

use crate::exponent::{ExponentVec, Layout};

#[derive(Clone, PartialEq, Eq, Debug)]
enum OrderKind {
    /// Pure lex along an explicit priority list (heaviest variable first).
    Lex { priority: Vec<usize> },
    /// Weighted total degree first; ties compare the distinguished variable
    /// with the comparison reversed (a larger exponent there means a smaller
    /// monomial), then lex along `priority`.  With positive weights this is a
    /// degree-compatible order in which `cheapest` is the unique smallest
    /// variable, and for ideals homogeneous under the weights it has the
    /// divisibility property required by saturation-by-division.
    GradedRevCheapest {
        weights: Vec<u64>,
        cheapest: usize,
        priority: Vec<usize>,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TermOrder {
    layout: Layout,
    kind: OrderKind,
}

/// Priority list of the presentation order on `layout`:
/// `Z > W > Xm > ... > X1 > T1 > ... > Tm`, restricted to present blocks.
fn base_priority(layout: Layout) -> Vec<usize> {
    let mut p = Vec::with_capacity(layout.len());
    if let Some(z) = layout.ext_index() {
        p.push(z);
    }
    if let Some(w) = layout.w_index() {
        p.push(w);
    }
    if let Some(xs) = layout.x_range() {
        p.extend(xs.rev());
    }
    if let Some(ts) = layout.t_range() {
        p.extend(ts);
    }
    p
}

impl TermOrder {
    /// The lex order orienting the whole pipeline: `W > Xm > ... > X1 >
    /// T1 > ... > Tm` (with `Z` heaviest when the layout carries it, so the
    /// same constructor doubles as the graph-variable elimination order).
    pub fn rees_lex(layout: Layout) -> Self {
        TermOrder { layout, kind: OrderKind::Lex { priority: base_priority(layout) } }
    }

    /// Lex on the base ring, `T1 > ... > Tm`.
    pub fn t_lex(m: usize) -> Self {
        Self::rees_lex(Layout::t_block(m))
    }

    /// A block elimination order: the given variables are strictly heaviest
    /// (in the given sequence), the rest follow in presentation priority.
    pub fn eliminate(layout: Layout, block: &[usize]) -> Self {
        let mut priority: Vec<usize> = block.to_vec();
        priority.extend(base_priority(layout).into_iter().filter(|v| !block.contains(v)));
        debug_assert_eq!(priority.len(), layout.len());
        TermOrder { layout, kind: OrderKind::Lex { priority } }
    }

    /// A degree-compatible order in which `cheapest` is the unique smallest
    /// variable.  `weights` must be strictly positive.
    pub fn graded_cheapest(layout: Layout, cheapest: usize, weights: Vec<u64>) -> Self {
        assert_eq!(weights.len(), layout.len());
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        let priority = base_priority(layout).into_iter().filter(|&v| v != cheapest).collect();
        TermOrder { layout, kind: OrderKind::GradedRevCheapest { weights, cheapest, priority } }
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn cmp(&self, u: &ExponentVec, v: &ExponentVec) -> Ordering {
        assert_eq!(u.layout(), self.layout, "operand layout does not match order");
        assert_eq!(v.layout(), self.layout, "operand layout does not match order");
        match &self.kind {
            OrderKind::Lex { priority } => {
                for &i in priority {
                    match u.get(i).cmp(&v.get(i)) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GradedRevCheapest { weights, cheapest, priority } => {
                let wd = |e: &ExponentVec| -> u64 {
                    e.exps().iter().zip(weights).map(|(&x, &w)| x * w).sum()
                };
                match wd(u).cmp(&wd(v)) {
                    Ordering::Equal => {}
                    other => return other,
                }
                // Reverse comparison on the cheapest variable.
                match u.get(*cheapest).cmp(&v.get(*cheapest)) {
                    Ordering::Equal => {}
                    other => return other.reverse(),
                }
                for &i in priority {
                    match u.get(i).cmp(&v.get(i)) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// A key whose lexicographic `Vec<u64>` ordering agrees with `cmp`.
    pub fn sort_key(&self, u: &ExponentVec) -> Vec<u64> {
        assert_eq!(u.layout(), self.layout);
        match &self.kind {
            OrderKind::Lex { priority } => priority.iter().map(|&i| u.get(i)).collect(),
            OrderKind::GradedRevCheapest { weights, cheapest, priority } => {
                let mut key = Vec::with_capacity(priority.len() + 2);
                key.push(u.exps().iter().zip(weights).map(|(&x, &w)| x * w).sum());
                key.push(u64::MAX - u.get(*cheapest));
                key.extend(priority.iter().map(|&i| u.get(i)));
                key
            }
        }
    }

    /// Whether monomials containing any variable of `block` are strictly
    /// heavier than all monomials without them.
    pub fn eliminates(&self, block: &[usize]) -> bool {
        match &self.kind {
            OrderKind::Lex { priority } => {
                priority.iter().take(block.len()).all(|v| block.contains(v))
            }
            OrderKind::GradedRevCheapest { .. } => false,
        }
    }
}

/// Total order on exponent vectors of equal length: smaller total degree
/// first; on ties the vector with the larger entry at the highest differing
/// index is the smaller one.  The zero vector is the unique minimum.
pub fn cmp_graded_revlex(c: &[u64], d: &[u64]) -> Ordering {
    debug_assert_eq!(c.len(), d.len());
    let dc: u64 = c.iter().sum();
    let dd: u64 = d.iter().sum();
    match dc.cmp(&dd) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in (0..c.len()).rev() {
        match c[i].cmp(&d[i]) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

/// Componentwise partial order on exponent vectors of equal length.
pub fn leq_componentwise(c: &[u64], d: &[u64]) -> bool {
    debug_assert_eq!(c.len(), d.len());
    c.iter().zip(d).all(|(&a, &b)| a <= b)
}

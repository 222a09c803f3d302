//! Exponent vectors over the fixed variable layouts of the presentation ring.
//!
//! Every monomial in this crate lives in one of four layouts over a base
//! dimension `m`:
//!
//! * `TBlock`  — the base ring `K[T1..Tm]`, length `m`;
//! * `XwBlock` — the fiber variables `(X1..Xm, W)`, length `m + 1`;
//! * `Full`    — the presentation ring `K[T1..Tm, X1..Xm, W]`, length `2m + 1`;
//! * `FullExt` — `Full` plus one auxiliary variable `Z` (used as the graph
//!   variable of the kernel oracle and as the tag variable of colon
//!   computations), length `2m + 2`.
//!
//! All arithmetic is exact over non-negative machine integers; subtraction is
//! only defined when the result stays non-negative.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum AlgebraError {
    #[error("layout mismatch: {0} vs {1}")]
    LayoutMismatch(Layout, Layout),
    #[error("monomial {denom} does not divide {num}")]
    NotDivisible { num: String, denom: String },
    #[error("expected {want} exponents for layout {layout}, got {got}")]
    WrongLength { layout: Layout, want: usize, got: usize },
    #[error("layout {0} has no {1} block")]
    MissingBlock(Layout, &'static str),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum LayoutKind {
    TBlock,
    XwBlock,
    Full,
    FullExt,
}

/// Variable layout: base dimension plus which blocks are present.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Layout {
    m: u8,
    kind: LayoutKind,
}

impl Layout {
    pub fn t_block(m: usize) -> Self {
        Layout { m: m as u8, kind: LayoutKind::TBlock }
    }
    pub fn xw_block(m: usize) -> Self {
        Layout { m: m as u8, kind: LayoutKind::XwBlock }
    }
    pub fn full(m: usize) -> Self {
        Layout { m: m as u8, kind: LayoutKind::Full }
    }
    pub fn full_ext(m: usize) -> Self {
        Layout { m: m as u8, kind: LayoutKind::FullExt }
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    pub fn kind(&self) -> LayoutKind {
        self.kind
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn len(&self) -> usize {
        let m = self.m();
        match self.kind {
            LayoutKind::TBlock => m,
            LayoutKind::XwBlock => m + 1,
            LayoutKind::Full => 2 * m + 1,
            LayoutKind::FullExt => 2 * m + 2,
        }
    }

    /// Indices of the T variables, if present.
    pub fn t_range(&self) -> Option<std::ops::Range<usize>> {
        match self.kind {
            LayoutKind::TBlock => Some(0..self.m()),
            LayoutKind::XwBlock => None,
            LayoutKind::Full | LayoutKind::FullExt => Some(0..self.m()),
        }
    }

    /// Indices of the X variables, if present.
    pub fn x_range(&self) -> Option<std::ops::Range<usize>> {
        let m = self.m();
        match self.kind {
            LayoutKind::TBlock => None,
            LayoutKind::XwBlock => Some(0..m),
            LayoutKind::Full | LayoutKind::FullExt => Some(m..2 * m),
        }
    }

    pub fn w_index(&self) -> Option<usize> {
        let m = self.m();
        match self.kind {
            LayoutKind::TBlock => None,
            LayoutKind::XwBlock => Some(m),
            LayoutKind::Full | LayoutKind::FullExt => Some(2 * m),
        }
    }

    /// Index of the auxiliary variable Z (graph/tag slot).
    pub fn ext_index(&self) -> Option<usize> {
        match self.kind {
            LayoutKind::FullExt => Some(2 * self.m() + 1),
            _ => None,
        }
    }

    pub fn var_name(&self, idx: usize) -> String {
        let m = self.m();
        debug_assert!(idx < self.len());
        match self.kind {
            LayoutKind::TBlock => format!("T{}", idx + 1),
            LayoutKind::XwBlock => {
                if idx < m {
                    format!("X{}", idx + 1)
                } else {
                    "W".to_string()
                }
            }
            LayoutKind::Full | LayoutKind::FullExt => {
                if idx < m {
                    format!("T{}", idx + 1)
                } else if idx < 2 * m {
                    format!("X{}", idx - m + 1)
                } else if idx == 2 * m {
                    "W".to_string()
                } else {
                    "Z".to_string()
                }
            }
        }
    }
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}(m={})", self.kind, self.m)
    }
}

/// A variable block, for block-restricted degrees.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Block {
    T,
    X,
    W,
    /// The X block together with W (the grading of the presentation).
    Xw,
    Ext,
}

/// A monomial, stored as its exponent vector in a fixed layout.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ExponentVec {
    layout: Layout,
    exps: Vec<u64>,
}

impl ExponentVec {
    pub fn new(layout: Layout, exps: Vec<u64>) -> Result<Self, AlgebraError> {
        if exps.len() != layout.len() {
            return Err(AlgebraError::WrongLength {
                layout,
                want: layout.len(),
                got: exps.len(),
            });
        }
        Ok(ExponentVec { layout, exps })
    }

    /// The monomial 1.
    pub fn one(layout: Layout) -> Self {
        ExponentVec { layout, exps: vec![0; layout.len()] }
    }

    /// The monomial `var^exp`.
    pub fn variable(layout: Layout, idx: usize, exp: u64) -> Self {
        let mut exps = vec![0; layout.len()];
        exps[idx] = exp;
        ExponentVec { layout, exps }
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn get(&self, idx: usize) -> u64 {
        self.exps[idx]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn check_layout(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.layout != other.layout {
            Err(AlgebraError::LayoutMismatch(self.layout, other.layout))
        } else {
            Ok(())
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_layout(other).expect("monomial product across layouts");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| {
                debug_assert!(a.checked_add(b).is_some(), "exponent overflow");
                a + b
            })
            .collect();
        ExponentVec { layout: self.layout, exps }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.layout == other.layout
            && self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// Exact quotient `self / other`.
    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_layout(other)?;
        if !other.divides(self) {
            return Err(AlgebraError::NotDivisible {
                num: self.to_string(),
                denom: other.to_string(),
            });
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a - b).collect();
        Ok(ExponentVec { layout: self.layout, exps })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.check_layout(other).expect("lcm across layouts");
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        ExponentVec { layout: self.layout, exps }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        self.check_layout(other).expect("gcd across layouts");
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect();
        ExponentVec { layout: self.layout, exps }
    }

    pub fn is_coprime_to(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a.min(b) == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().sum()
    }

    /// Total degree restricted to one block of the layout.
    pub fn deg(&self, block: Block) -> u64 {
        match block {
            Block::T => self
                .layout
                .t_range()
                .map(|r| self.exps[r].iter().sum())
                .unwrap_or(0),
            Block::X => self
                .layout
                .x_range()
                .map(|r| self.exps[r].iter().sum())
                .unwrap_or(0),
            Block::W => self.layout.w_index().map(|i| self.exps[i]).unwrap_or(0),
            Block::Xw => self.deg(Block::X) + self.deg(Block::W),
            Block::Ext => self.layout.ext_index().map(|i| self.exps[i]).unwrap_or(0),
        }
    }

    /// Copy of the T-block exponents.
    pub fn t_part(&self) -> Vec<u64> {
        self.layout
            .t_range()
            .map(|r| self.exps[r].to_vec())
            .unwrap_or_default()
    }

    /// Copy of the X-block exponents.
    pub fn x_part(&self) -> Vec<u64> {
        self.layout
            .x_range()
            .map(|r| self.exps[r].to_vec())
            .unwrap_or_default()
    }

    /// Embed into the `Full` layout of the same base dimension.
    pub fn embed_full(&self) -> Self {
        let m = self.layout.m();
        let full = Layout::full(m);
        let mut exps = vec![0; full.len()];
        match self.layout.kind {
            LayoutKind::TBlock => exps[..m].copy_from_slice(&self.exps),
            LayoutKind::XwBlock => exps[m..].copy_from_slice(&self.exps),
            LayoutKind::Full => exps.copy_from_slice(&self.exps),
            LayoutKind::FullExt => {
                assert_eq!(self.exps[2 * m + 1], 0, "cannot drop a live Z exponent");
                exps.copy_from_slice(&self.exps[..2 * m + 1]);
            }
        }
        ExponentVec { layout: full, exps }
    }

    /// Embed a `Full` vector into `FullExt` with Z-exponent `z`.
    pub fn extend(&self, z: u64) -> Self {
        assert_eq!(self.layout.kind, LayoutKind::Full);
        let m = self.layout.m();
        let mut exps = self.exps.clone();
        exps.push(z);
        ExponentVec { layout: Layout::full_ext(m), exps }
    }

    /// Drop the Z slot of a `FullExt` vector (its exponent must be zero).
    pub fn contract(&self) -> Result<Self, AlgebraError> {
        match self.layout.kind {
            LayoutKind::FullExt => {
                let m = self.layout.m();
                if self.exps[2 * m + 1] != 0 {
                    return Err(AlgebraError::MissingBlock(self.layout, "zero Z slot"));
                }
                Ok(ExponentVec {
                    layout: Layout::full(m),
                    exps: self.exps[..2 * m + 1].to_vec(),
                })
            }
            _ => Err(AlgebraError::MissingBlock(self.layout, "Z")),
        }
    }
}

impl fmt::Display for ExponentVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", self.layout.var_name(i))?;
            } else {
                write!(f, "{}^{}", self.layout.var_name(i), e)?;
            }
        }
        Ok(())
    }
}

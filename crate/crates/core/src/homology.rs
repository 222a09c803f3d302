//! Multigraded Betti numbers, projective dimension, depth, and the
//! Cohen–Macaulay / almost-Cohen–Macaulay verdicts for monomial quotients.
//!
//! The production route reads each Betti number off the reduced rational
//! homology of the upper Koszul simplicial complex at a multidegree of the
//! lcm lattice.  The independent oracle recomputes the same numbers from the
//! Taylor complex tensored down to the field.  Both use exact integer rank
//! computations; nothing here depends on a characteristic.

use std::collections::BTreeMap;

use crate::binomial::Binomial;
use crate::caps::Caps;
use crate::exponent::ExponentVec;
use crate::groebner::EngineError;
use crate::instance::Instance;
use crate::families::Filtration;
use crate::linalg::rank;
use crate::monomial::{hilbert, MonomialIdeal};

/// Multigraded Betti data of a quotient `S/M` with derived verdicts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    /// `(homological index, multidegree) -> rank`; the index-0 entry is the
    /// generator of `S/M` itself.
    pub entries: BTreeMap<(usize, ExponentVec), u64>,
    /// Total Betti numbers per homological index.
    pub totals: Vec<u64>,
    pub pd: usize,
    /// Number of ambient variables.
    pub vars: usize,
    /// `vars - pd` (Auslander–Buchsbaum).
    pub depth: i64,
    pub dim: i64,
    pub is_cm: bool,
    /// `depth - (dim - 1)`; non-negative means almost Cohen–Macaulay.
    pub acm_margin: i64,
}

impl BettiTable {
    fn from_entries(
        entries: BTreeMap<(usize, ExponentVec), u64>,
        vars: usize,
        dim: i64,
    ) -> Self {
        let pd = entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let mut totals = vec![0u64; pd + 1];
        for (&(i, _), &r) in &entries {
            totals[i] += r;
        }
        let depth = vars as i64 - pd as i64;
        BettiTable {
            entries,
            totals,
            pd,
            vars,
            depth,
            dim,
            is_cm: depth == dim,
            acm_margin: depth - (dim - 1),
        }
    }
}

/// All distinct lcms of nonempty subsets of the minimal generators, computed
/// as the closure of the generators under pairwise lcm.
pub fn lcm_lattice(ideal: &MonomialIdeal, caps: &Caps) -> Result<Vec<ExponentVec>, EngineError> {
    if ideal.num_gens() > caps.max_lattice_generators {
        return Err(EngineError::CapExceeded {
            what: "max_lattice_generators",
            limit: caps.max_lattice_generators,
        });
    }
    let mut seen: BTreeMap<ExponentVec, ()> = BTreeMap::new();
    let mut frontier: Vec<ExponentVec> = Vec::new();
    for g in ideal.gens() {
        if seen.insert(g.clone(), ()).is_none() {
            frontier.push(g.clone());
        }
    }
    while let Some(next) = frontier.pop() {
        for g in ideal.gens() {
            let l = next.lcm(g);
            if seen.insert(l.clone(), ()).is_none() {
                if seen.len() > caps.max_lattice_size {
                    return Err(EngineError::CapExceeded {
                        what: "max_lattice_size",
                        limit: caps.max_lattice_size,
                    });
                }
                frontier.push(l);
            }
        }
    }
    Ok(seen.into_keys().collect())
}

/// Reduced-homology ranks of the upper Koszul complex of `ideal` at `a`,
/// reported as `(face cardinality, rank)` pairs.  The complex has a face `F`
/// for every subset of variables with `a - indicator(F) >= 0` whose quotient
/// monomial lies in the ideal; cardinality `c` homology contributes to the
/// Betti number at homological index `c + 1` of `S/M`.
fn upper_koszul_ranks(ideal: &MonomialIdeal, a: &ExponentVec) -> Vec<(usize, u64)> {
    let n = a.exps().len();
    let vertices: Vec<usize> = (0..n).filter(|&v| a.get(v) >= 1).collect();
    let nv = vertices.len();
    let mut is_face = vec![false; 1usize << nv];
    let mut faces_by_card: Vec<Vec<usize>> = vec![Vec::new(); nv + 1];
    for mask in 0..(1usize << nv) {
        let mut quotient = a.exps().to_vec();
        for (k, &v) in vertices.iter().enumerate() {
            if mask & (1 << k) != 0 {
                quotient[v] -= 1;
            }
        }
        let quotient = ExponentVec::new(a.layout(), quotient).expect("same layout");
        if ideal.contains(&quotient) {
            is_face[mask] = true;
            faces_by_card[mask.count_ones() as usize].push(mask);
        }
    }
    if !is_face[0] {
        // x^a itself is outside the ideal: empty complex, no homology
        return Vec::new();
    }
    // cone check: a vertex contained in every face makes the complex acyclic
    'cone: for (k, _) in vertices.iter().enumerate() {
        if !is_face[1 << k] {
            continue;
        }
        for mask in 0..(1usize << nv) {
            if is_face[mask] && !is_face[mask | (1 << k)] {
                continue 'cone;
            }
        }
        return Vec::new();
    }
    // boundary ranks between consecutive cardinalities
    let mut boundary_rank = vec![0u64; nv + 2];
    for c in 1..=nv {
        if faces_by_card[c].is_empty() || faces_by_card[c - 1].is_empty() {
            continue;
        }
        let row_index: BTreeMap<usize, usize> = faces_by_card[c - 1]
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i))
            .collect();
        let mut matrix = vec![vec![0i64; faces_by_card[c].len()]; faces_by_card[c - 1].len()];
        for (col, &mask) in faces_by_card[c].iter().enumerate() {
            let mut sign = 1i64;
            for k in 0..nv {
                if mask & (1 << k) != 0 {
                    let sub = mask & !(1 << k);
                    if let Some(&row) = row_index.get(&sub) {
                        matrix[row][col] = sign;
                    }
                    sign = -sign;
                }
            }
        }
        boundary_rank[c] = rank(&matrix) as u64;
    }
    let mut out = Vec::new();
    for c in 0..=nv {
        let f = faces_by_card[c].len() as u64;
        if f == 0 {
            continue;
        }
        let h = f - boundary_rank[c] - boundary_rank[c + 1];
        if h > 0 {
            out.push((c, h));
        }
    }
    out
}

/// The multigraded Betti table of `S/M` through upper Koszul complexes over
/// the lcm lattice.
pub fn betti_table(ideal: &MonomialIdeal, caps: &Caps) -> Result<BettiTable, EngineError> {
    let vars = ideal.layout().len();
    let dim = hilbert(ideal).dimension;
    let mut entries: BTreeMap<(usize, ExponentVec), u64> = BTreeMap::new();
    entries.insert((0, ExponentVec::one(ideal.layout())), 1);
    for a in lcm_lattice(ideal, caps)? {
        for (c, h) in upper_koszul_ranks(ideal, &a) {
            entries.insert((c + 1, a.clone()), h);
        }
    }
    Ok(BettiTable::from_entries(entries, vars, dim))
}

/// Independent Betti oracle: homology of the Taylor complex tensored down to
/// the field, multidegree by multidegree.  Test-grade; capped separately.
pub fn taylor_betti(ideal: &MonomialIdeal, caps: &Caps) -> Result<BettiTable, EngineError> {
    let r = ideal.num_gens();
    if r > caps.max_taylor_generators {
        return Err(EngineError::CapExceeded {
            what: "max_taylor_generators",
            limit: caps.max_taylor_generators,
        });
    }
    let vars = ideal.layout().len();
    let dim = hilbert(ideal).dimension;
    let gens = ideal.gens();
    // lcm of every subset of generators, grouped by the lcm
    let mut subset_lcm: Vec<ExponentVec> = Vec::with_capacity(1 << r);
    subset_lcm.push(ExponentVec::one(ideal.layout()));
    for mask in 1..(1usize << r) {
        let low = mask & (mask - 1);
        let bit = (mask ^ low).trailing_zeros() as usize;
        subset_lcm.push(subset_lcm[low].lcm(&gens[bit]));
    }
    let mut by_degree: BTreeMap<ExponentVec, Vec<usize>> = BTreeMap::new();
    for (mask, l) in subset_lcm.iter().enumerate() {
        by_degree.entry(l.clone()).or_default().push(mask);
    }
    let mut entries: BTreeMap<(usize, ExponentVec), u64> = BTreeMap::new();
    for (a, masks) in by_degree {
        let mut by_card: Vec<Vec<usize>> = vec![Vec::new(); r + 1];
        for &mask in &masks {
            by_card[mask.count_ones() as usize].push(mask);
        }
        let mut boundary_rank = vec![0u64; r + 2];
        for c in 1..=r {
            if by_card[c].is_empty() || by_card[c - 1].is_empty() {
                continue;
            }
            let row_index: BTreeMap<usize, usize> = by_card[c - 1]
                .iter()
                .enumerate()
                .map(|(i, &m)| (m, i))
                .collect();
            let mut matrix = vec![vec![0i64; by_card[c].len()]; by_card[c - 1].len()];
            for (col, &mask) in by_card[c].iter().enumerate() {
                let mut sign = 1i64;
                for k in 0..r {
                    if mask & (1 << k) != 0 {
                        let sub = mask & !(1 << k);
                        // the induced map keeps only faces of the same lcm
                        if subset_lcm[sub] == a {
                            if let Some(&row) = row_index.get(&sub) {
                                matrix[row][col] = sign;
                            }
                        }
                        sign = -sign;
                    }
                }
            }
            boundary_rank[c] = rank(&matrix) as u64;
        }
        for c in 0..=r {
            let f = by_card[c].len() as u64;
            if f == 0 {
                continue;
            }
            let h = f - boundary_rank[c] - boundary_rank[c + 1];
            if h > 0 {
                entries.insert((c, a.clone()), h);
            }
        }
    }
    Ok(BettiTable::from_entries(entries, vars, dim))
}

/// One verified step of the filtration's depth argument.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DepthChainStep {
    /// 1-based step index.
    pub j: usize,
    pub c: Vec<u64>,
    /// Whether `ini(H_{j-1}) : ini(new member)` is generated by T-monomials.
    pub colon_extended: bool,
    /// `depth(S / ini(H_j))`, when requested.
    pub depth: Option<i64>,
}

/// Walk the filtration: at each step the colon of the previous initial ideal
/// by the new leading term must be extended from the base ring, and the depth
/// of the new initial quotient is reported on demand.  The final entry
/// corresponds to the full initial ideal.
pub fn depth_chain(
    inst: &Instance,
    filtration: &Filtration,
    with_depths: bool,
    caps: &Caps,
) -> Result<Vec<DepthChainStep>, EngineError> {
    let layout = inst.full_layout();
    let mut current = MonomialIdeal::new(
        layout,
        filtration.base.iter().map(|g| g.lead().clone()).collect(),
    );
    let mut steps = Vec::with_capacity(filtration.len());
    for (idx, step) in filtration.steps.iter().enumerate() {
        let lead = step.member.lead();
        let colon_extended = current.colon(lead).is_extended_from_base();
        let mut gens: Vec<ExponentVec> = current.gens().to_vec();
        gens.push(lead.clone());
        current = MonomialIdeal::new(layout, gens);
        let depth = if with_depths {
            Some(betti_table(&current, caps)?.depth)
        } else {
            None
        };
        steps.push(DepthChainStep { j: idx + 1, c: step.c.clone(), colon_extended, depth });
    }
    Ok(steps)
}

/// The initial ideal of a generating set (the monomial ideal of the leads).
pub fn initial_ideal(members: &[Binomial]) -> MonomialIdeal {
    let layout = members
        .first()
        .map(|g| g.layout())
        .expect("initial ideal of an empty set has no layout");
    MonomialIdeal::new(layout, members.iter().map(|g| g.lead().clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::Layout;

    fn ideal(layout: Layout, gens: Vec<Vec<u64>>) -> MonomialIdeal {
        MonomialIdeal::new(
            layout,
            gens.into_iter().map(|e| ExponentVec::new(layout, e).unwrap()).collect(),
        )
    }

    #[test]
    fn lattice_examples() {
        let caps = Caps::default();
        let layout = Layout::t_block(3);
        let m = ideal(layout, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let lattice = lcm_lattice(&m, &caps).unwrap();
        assert_eq!(lattice.len(), 3);
        let single = ideal(layout, vec![vec![2, 1, 0]]);
        assert_eq!(lcm_lattice(&single, &caps).unwrap().len(), 1);
    }

    #[test]
    fn lattice_cap_is_explicit() {
        let caps = Caps { max_lattice_generators: 1, ..Caps::default() };
        let layout = Layout::t_block(3);
        let m = ideal(layout, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        assert!(matches!(
            lcm_lattice(&m, &caps),
            Err(EngineError::CapExceeded { what: "max_lattice_generators", .. })
        ));
    }

    /// Calibration gate: the full Koszul case must give pd = n with binomial
    /// total Betti numbers, and the triangle ideal pd = 2, before any
    /// structural instance is trusted.
    #[test]
    fn calibration_full_koszul() {
        let caps = Caps::default();
        for n in 2..=4usize {
            let layout = Layout::t_block(n);
            let gens: Vec<Vec<u64>> = (0..n)
                .map(|i| {
                    let mut e = vec![0u64; n];
                    e[i] = 1;
                    e
                })
                .collect();
            let table = betti_table(&ideal(layout, gens), &caps).unwrap();
            assert_eq!(table.pd, n);
            assert_eq!(table.depth, 0);
            assert_eq!(table.dim, 0);
            let choose = |k: usize| -> u64 {
                (1..=k as u64).fold(1u64, |acc, i| acc * (n as u64 - i + 1) / i)
            };
            for i in 1..=n {
                assert_eq!(table.totals[i], choose(i), "beta_{i} for n = {n}");
            }
            assert!(table.is_cm);
        }
    }

    #[test]
    fn calibration_triangle() {
        let caps = Caps::default();
        let layout = Layout::t_block(3);
        let triangle =
            ideal(layout, vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        let table = betti_table(&triangle, &caps).unwrap();
        assert_eq!(table.pd, 2);
        assert_eq!(table.totals, vec![1, 3, 2]);
        assert_eq!(table.dim, 1);
        assert_eq!(table.depth, 1);
        let oracle = taylor_betti(&triangle, &caps).unwrap();
        assert_eq!(table, oracle);
    }

    #[test]
    fn betti_of_two_variables_is_koszul() {
        let caps = Caps::default();
        let layout = Layout::full(2); // 5 ambient variables
        let m = ideal(
            layout,
            vec![vec![1, 0, 0, 0, 0], vec![0, 1, 0, 0, 0]],
        );
        let table = betti_table(&m, &caps).unwrap();
        assert_eq!(table.pd, 2);
        assert_eq!(table.depth, 5 - 2);
        assert_eq!(table.dim, 3);
    }

    #[test]
    fn taylor_single_generator() {
        let caps = Caps::default();
        let layout = Layout::t_block(2);
        let m = ideal(layout, vec![vec![2, 1]]);
        let t = taylor_betti(&m, &caps).unwrap();
        assert_eq!(t.pd, 1);
        assert_eq!(t.totals, vec![1, 1]);
        assert_eq!(betti_table(&m, &caps).unwrap(), t);
    }

    #[test]
    fn zero_ideal_table() {
        let caps = Caps::default();
        let layout = Layout::t_block(3);
        let table = betti_table(&MonomialIdeal::zero(layout), &caps).unwrap();
        assert_eq!(table.pd, 0);
        assert_eq!(table.depth, 3);
        assert_eq!(table.dim, 3);
        assert!(table.is_cm);
    }

    #[test]
    fn taylor_cap_is_explicit() {
        let caps = Caps { max_taylor_generators: 2, ..Caps::default() };
        let layout = Layout::t_block(3);
        let m = ideal(layout, vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert!(matches!(
            taylor_betti(&m, &caps),
            Err(EngineError::CapExceeded { what: "max_taylor_generators", .. })
        ));
    }
}

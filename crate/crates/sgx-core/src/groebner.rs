//! Buchberger's algorithm with reduced-basis normalization, plus the
//! combinatorial dimension count on leading-term ideals.
//!
//! The computation is budgeted: a hard cap on total degree and basis size
//! plus an optional wall-clock deadline. Hitting any of them reports
//! `ResourceBudgetExceeded` instead of running open-ended.

use crate::gauss::GaussRational;
use crate::mpoly::{
    monomial_div, monomial_divides, monomial_lcm, monomial_mul, MPoly, PolyRing,
};
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::time::Instant;

/// Resource limits for one Groebner run.
#[derive(Debug, Clone)]
pub struct Budget {
    pub max_total_degree: u32,
    pub max_basis_size: usize,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_total_degree: 12, max_basis_size: 2000, deadline: None }
    }
}

impl Budget {
    pub fn with_deadline_ms(ms: u64) -> Self {
        Budget {
            deadline: Some(Instant::now() + std::time::Duration::from_millis(ms)),
            ..Budget::default()
        }
    }

    fn check_deadline(&self) -> Result<()> {
        if let Some(deadline) = self.deadline {
            if Instant::now() > deadline {
                return Err(Error::ResourceBudgetExceeded);
            }
        }
        Ok(())
    }
}

/// Full normal form of f modulo the basis: no term of the result is
/// divisible by any basis leading monomial.
pub fn normal_form(ring: &PolyRing, f: &MPoly, basis: &[MPoly]) -> MPoly {
    let mut rest = f.clone();
    let mut out: Vec<(crate::mpoly::Monomial, GaussRational)> = Vec::new();
    'outer: while !rest.is_zero() {
        let (m, c) = rest.terms[0].clone();
        for g in basis {
            let lm = match g.leading_monomial() {
                Some(lm) => lm,
                None => continue,
            };
            if monomial_divides(lm, &m) {
                let factor = &c / g.leading_coeff().expect("nonzero basis element");
                let shift = monomial_div(&m, lm);
                rest = rest.sub(ring, &g.mul_term(&shift, &factor));
                continue 'outer;
            }
        }
        // Leading term irreducible: move it to the output.
        out.push((m, c));
        rest.terms.remove(0);
    }
    MPoly { terms: out }
}

fn s_poly(ring: &PolyRing, f: &MPoly, g: &MPoly) -> MPoly {
    let lm_f = f.leading_monomial().expect("nonzero");
    let lm_g = g.leading_monomial().expect("nonzero");
    let lcm = monomial_lcm(lm_f, lm_g);
    let cf = f.leading_coeff().expect("nonzero");
    let cg = g.leading_coeff().expect("nonzero");
    let lhs = f.mul_term(&monomial_div(&lcm, lm_f), &cf.inverse().expect("nonzero"));
    let rhs = g.mul_term(&monomial_div(&lcm, lm_g), &cg.inverse().expect("nonzero"));
    lhs.sub(ring, &rhs)
}

/// Computes the reduced Groebner basis of the given generators.
///
/// Pair selection follows the normal strategy (smallest lcm degree first);
/// the coprimality and chain criteria prune pairs. The result is monic,
/// fully inter-reduced and sorted descending by leading monomial, hence
/// unique for the ring's order; recomputing on its own output returns it
/// unchanged.
pub fn groebner_basis(ring: &PolyRing, gens: &[MPoly], budget: &Budget) -> Result<Vec<MPoly>> {
    let mut basis: Vec<MPoly> = Vec::new();
    for g in gens {
        let h = normal_form(ring, g, &basis);
        if !h.is_zero() {
            if h.total_degree() > budget.max_total_degree {
                return Err(Error::ResourceBudgetExceeded);
            }
            basis.push(h.make_monic());
        }
    }

    let lcm_deg = |basis: &[MPoly], i: usize, j: usize| -> u32 {
        let l = monomial_lcm(
            basis[i].leading_monomial().expect("nonzero"),
            basis[j].leading_monomial().expect("nonzero"),
        );
        l.iter().map(|&e| e as u32).sum()
    };
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.insert((lcm_deg(&basis, i, j), i, j));
        }
    }

    while let Some(&(deg, i, j)) = pairs.iter().next() {
        pairs.remove(&(deg, i, j));
        done.insert((i, j));
        budget.check_deadline()?;

        let lm_i = basis[i].leading_monomial().expect("nonzero").clone();
        let lm_j = basis[j].leading_monomial().expect("nonzero").clone();
        let lcm = monomial_lcm(&lm_i, &lm_j);
        // Coprimality criterion.
        if lcm == monomial_mul(&lm_i, &lm_j) {
            continue;
        }
        // Chain criterion: a third element dividing the lcm whose pairs with
        // i and j are both settled makes this pair redundant.
        let chained = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let lk = basis[k].leading_monomial().expect("nonzero");
            monomial_divides(lk, &lcm)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }

        let s = s_poly(ring, &basis[i], &basis[j]);
        let h = normal_form(ring, &s, &basis);
        if h.is_zero() {
            continue;
        }
        if h.total_degree() > budget.max_total_degree {
            return Err(Error::ResourceBudgetExceeded);
        }
        let new = basis.len();
        basis.push(h.make_monic());
        if basis.len() > budget.max_basis_size {
            return Err(Error::ResourceBudgetExceeded);
        }
        for k in 0..new {
            pairs.insert((lcm_deg(&basis, k, new), k, new));
        }
    }

    Ok(reduce_basis(ring, basis))
}

/// Minimalizes and tail-reduces a Groebner basis into the reduced basis.
fn reduce_basis(ring: &PolyRing, mut basis: Vec<MPoly>) -> Vec<MPoly> {
    // Keep only elements with minimal leading monomials.
    basis.sort_by(|a, b| {
        ring.order.cmp(
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        )
    });
    let mut minimal: Vec<MPoly> = Vec::new();
    for g in basis.into_iter() {
        let lm = g.leading_monomial().expect("nonzero").clone();
        if !minimal
            .iter()
            .any(|h| monomial_divides(h.leading_monomial().expect("nonzero"), &lm))
        {
            minimal.push(g);
        }
    }
    // Tail-reduce every element against the rest until stable.
    loop {
        let mut changed = false;
        for idx in 0..minimal.len() {
            let others: Vec<MPoly> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, g)| g.clone())
                .collect();
            let reduced = normal_form(ring, &minimal[idx], &others).make_monic();
            if reduced != minimal[idx] {
                minimal[idx] = reduced;
                changed = true;
            }
        }
        minimal.retain(|g| !g.is_zero());
        if !changed {
            break;
        }
    }
    minimal.sort_by(|a, b| {
        ring.order.cmp(
            b.leading_monomial().expect("nonzero"),
            a.leading_monomial().expect("nonzero"),
        )
    });
    minimal
}

/// True iff the reduced basis generates the unit ideal.
pub fn is_unit_ideal(basis: &[MPoly]) -> bool {
    basis.iter().any(|g| g.is_unit_constant())
}

/// Krull dimension of the quotient ring, from a computed Groebner basis:
/// the maximum size of a set of variables meeting no leading-monomial
/// support. The unit ideal reports -1.
pub fn dimension(ring: &PolyRing, basis: &[MPoly]) -> i64 {
    if is_unit_ideal(basis) {
        return -1;
    }
    assert!(ring.nvars <= 64, "dimension counting uses 64-bit variable masks");
    let mut supports: Vec<u64> = basis.iter().map(|g| g.leading_support()).collect();
    supports.sort_unstable();
    supports.dedup();
    let all: u64 = if ring.nvars == 64 { !0 } else { (1u64 << ring.nvars) - 1 };
    let mut best = 0usize;
    let mut seen = BTreeSet::new();
    fn search(vars: u64, supports: &[u64], best: &mut usize, seen: &mut BTreeSet<u64>) {
        if !seen.insert(vars) || (vars.count_ones() as usize) <= *best {
            return;
        }
        match supports.iter().find(|&&s| s & !vars == 0) {
            None => *best = vars.count_ones() as usize,
            Some(&s) => {
                let mut bits = s;
                while bits != 0 {
                    let v = bits & bits.wrapping_neg();
                    bits ^= v;
                    search(vars & !v, supports, best, seen);
                }
            }
        }
    }
    search(all, &supports, &mut best, &mut seen);
    best as i64
}

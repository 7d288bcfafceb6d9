//! Exact multivariate polynomials over Q(i) with the two monomial orders the
//! Zariski-closure kernel needs: graded reverse lexicographic, and a block
//! order for elimination. Terms are kept sorted descending, so leading data
//! is O(1) and arithmetic is merge-based.
//!
//! Variable convention: a ring has variables indexed 0..nvars, and a higher
//! index means a larger variable. In the block order the variables at index
//! >= split form the dominant block, so a Groebner basis in that order
//! eliminates them: basis elements supported entirely below the split
//! generate the elimination ideal.

use crate::gauss::GaussRational;
use std::cmp::Ordering;

pub type Monomial = Box<[u16]>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    GrevLex,
    /// Variables with index >= split are compared first (eliminated block).
    Block { split: usize },
}

fn total_degree_slice(m: &[u16]) -> u32 {
    m.iter().map(|&e| e as u32).sum()
}

/// Grevlex on exponent slices: higher total degree wins; ties scan from the
/// smallest variable, and the side with the smaller exponent at the first
/// difference is the larger monomial.
fn cmp_grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da = total_degree_slice(a);
    let db = total_degree_slice(b);
    if da != db {
        return da.cmp(&db);
    }
    for j in 0..a.len().max(b.len()) {
        let ea = a.get(j).copied().unwrap_or(0);
        let eb = b.get(j).copied().unwrap_or(0);
        if ea != eb {
            return if ea < eb { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            MonomialOrder::GrevLex => cmp_grevlex(a, b),
            MonomialOrder::Block { split } => {
                let s = *split;
                let (al, ah) = a.split_at(s.min(a.len()));
                let (bl, bh) = b.split_at(s.min(b.len()));
                cmp_grevlex(ah, bh).then_with(|| cmp_grevlex(al, bl))
            }
        }
    }
}

/// The ambient ring: a variable count plus a monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    pub nvars: usize,
    pub order: MonomialOrder,
}

impl PolyRing {
    pub fn grevlex(nvars: usize) -> Self {
        PolyRing { nvars, order: MonomialOrder::GrevLex }
    }

    pub fn elimination(nvars: usize, split: usize) -> Self {
        PolyRing { nvars, order: MonomialOrder::Block { split } }
    }

    pub fn one_monomial(&self) -> Monomial {
        vec![0u16; self.nvars].into_boxed_slice()
    }

    pub fn var_monomial(&self, v: usize) -> Monomial {
        let mut m = vec![0u16; self.nvars];
        m[v] = 1;
        m.into_boxed_slice()
    }
}

pub fn monomial_mul(a: &[u16], b: &[u16]) -> Monomial {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

pub fn monomial_divides(d: &[u16], m: &[u16]) -> bool {
    d.iter().zip(m.iter()).all(|(x, y)| x <= y)
}

pub fn monomial_div(m: &[u16], d: &[u16]) -> Monomial {
    m.iter().zip(d.iter()).map(|(x, y)| x - y).collect()
}

pub fn monomial_lcm(a: &[u16], b: &[u16]) -> Monomial {
    a.iter().zip(b.iter()).map(|(x, y)| *x.max(y)).collect()
}

/// A polynomial with terms sorted descending in the ring's order; no zero
/// coefficients are stored and the zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    pub terms: Vec<(Monomial, GaussRational)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn constant(ring: &PolyRing, c: GaussRational) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: vec![(ring.one_monomial(), c)] }
    }

    pub fn one(ring: &PolyRing) -> Self {
        MPoly::constant(ring, GaussRational::one())
    }

    pub fn var(ring: &PolyRing, v: usize) -> Self {
        MPoly { terms: vec![(ring.var_monomial(v), GaussRational::one())] }
    }

    /// Builds from unsorted term data, merging duplicates.
    pub fn from_terms(ring: &PolyRing, mut terms: Vec<(Monomial, GaussRational)>) -> Self {
        terms.sort_by(|a, b| ring.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, GaussRational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = &last.1 + &c;
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        MPoly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && total_degree_slice(&self.terms[0].0) == 0
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&GaussRational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| total_degree_slice(m)).max().unwrap_or(0)
    }

    pub fn add(&self, ring: &PolyRing, rhs: &MPoly) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < rhs.terms.len() {
            match ring.order.cmp(&self.terms[i].0, &rhs.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(rhs.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &rhs.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        MPoly { terms: out }
    }

    pub fn neg(&self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, ring: &PolyRing, rhs: &MPoly) -> MPoly {
        self.add(ring, &rhs.neg())
    }

    /// Multiplication by a single term.
    pub fn mul_term(&self, mono: &[u16], coeff: &GaussRational) -> MPoly {
        if coeff.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (monomial_mul(m, mono), c * coeff))
                .collect(),
        }
    }

    pub fn mul(&self, ring: &PolyRing, rhs: &MPoly) -> MPoly {
        let mut acc = MPoly::zero();
        for (m, c) in &rhs.terms {
            acc = acc.add(ring, &self.mul_term(m, c));
        }
        acc
    }

    pub fn scale(&self, c: &GaussRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn make_monic(&self) -> MPoly {
        match self.leading_coeff() {
            None => MPoly::zero(),
            Some(lc) => self.scale(&lc.inverse().expect("leading coefficient nonzero")),
        }
    }

    /// True if no variable with index >= split occurs.
    pub fn supported_below(&self, split: usize) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| m.iter().skip(split).all(|&e| e == 0))
    }

    /// Reindexes variables into a new ring via `map[old] = new`; entries
    /// must cover every used variable.
    pub fn reindex(&self, target: &PolyRing, map: &[Option<usize>]) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut nm = vec![0u16; target.nvars];
                for (v, &e) in m.iter().enumerate() {
                    if e > 0 {
                        nm[map[v].expect("variable must be mapped")] = e;
                    }
                }
                (nm.into_boxed_slice(), c.clone())
            })
            .collect();
        MPoly::from_terms(target, terms)
    }

    /// The set of variables occurring in the leading monomial, as a bitmask.
    pub fn leading_support(&self) -> u64 {
        let mut mask = 0u64;
        if let Some(m) = self.leading_monomial() {
            for (v, &e) in m.iter().enumerate() {
                if e > 0 {
                    mask |= 1 << v;
                }
            }
        }
        mask
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> GaussRational {
        GaussRational::from_int(n)
    }

    #[test]
    fn grevlex_textbook_comparisons() {
        // Three variables z=0 < y=1 < x=2: x^2y > xy^2 and xz < y^2.
        let x2y: Monomial = vec![0, 1, 2].into_boxed_slice();
        let xy2: Monomial = vec![0, 2, 1].into_boxed_slice();
        assert_eq!(cmp_grevlex(&x2y, &xy2), Ordering::Greater);
        let xz: Monomial = vec![1, 0, 1].into_boxed_slice();
        let y2: Monomial = vec![0, 2, 0].into_boxed_slice();
        assert_eq!(cmp_grevlex(&xz, &y2), Ordering::Less);
    }

    #[test]
    fn block_order_dominates_on_eliminated_vars() {
        // split = 1: variable 1 eliminated. Any power of var 1 beats any
        // monomial in var 0 alone.
        let order = MonomialOrder::Block { split: 1 };
        let v1: Monomial = vec![0, 1].into_boxed_slice();
        let v0cubed: Monomial = vec![3, 0].into_boxed_slice();
        assert_eq!(order.cmp(&v1, &v0cubed), Ordering::Greater);
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let ring = PolyRing::grevlex(2);
        let x = MPoly::var(&ring, 1);
        let y = MPoly::var(&ring, 0);
        let f = x.mul(&ring, &x).sub(&ring, &y);
        let g = f.add(&ring, &y);
        assert_eq!(g, x.mul(&ring, &x));
        assert!(f.sub(&ring, &f).is_zero());
    }

    #[test]
    fn from_terms_merges_duplicates() {
        let ring = PolyRing::grevlex(1);
        let m = ring.var_monomial(0);
        let f = MPoly::from_terms(&ring, vec![(m.clone(), c(2)), (m, c(-2))]);
        assert!(f.is_zero());
    }

    #[test]
    fn reindex_preserves_values() {
        let ring3 = PolyRing::grevlex(3);
        let ring2 = PolyRing::grevlex(2);
        let f = MPoly::var(&ring3, 2).mul(&ring3, &MPoly::var(&ring3, 0));
        let g = f.reindex(&ring2, &[Some(0), None, Some(1)]);
        assert_eq!(g, MPoly::var(&ring2, 1).mul(&ring2, &MPoly::var(&ring2, 0)));
    }
}
